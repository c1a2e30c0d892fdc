// Exhaustive enumeration over GF(p) as ground truth for the engine.

use steinberg::constructions::{cyclic_groupoid, pair_groupoid};
use steinberg::oracle::{oracle_is_semiprime, oracle_minimal_ideals, oracle_socle};
use steinberg::socle::socle;
use steinberg::{FieldSpec, SteinbergAlgebra};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let z2 = cyclic_groupoid(2);
    for p in [2, 3] {
        let field = FieldSpec::Prime(p);
        let ideals = oracle_minimal_ideals(&z2, field)?;
        let semi = oracle_is_semiprime(&z2, field)?;
        println!(
            "Z/2 over {field}: {} minimal ideals, socle dimension {}, semiprime {}",
            ideals.len(),
            oracle_socle(&z2, field)?.dimension(),
            semi.semiprime
        );
    }

    let g = pair_groupoid(2);
    let field = FieldSpec::Prime(3);
    let engine = socle(&SteinbergAlgebra::new(&g, field))?;
    let brute = oracle_socle(&g, field)?;
    assert_eq!(engine.basis, brute.socle);
    println!(
        "pair groupoid over {field}: engine and oracle agree on a socle of dimension {}",
        brute.dimension()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
