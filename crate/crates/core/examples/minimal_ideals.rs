// Minimal left ideals at units of a group: an idempotent when the
// characteristic misses the group order, a square-zero element otherwise.

use steinberg::constructions::cyclic_groupoid;
use steinberg::socle::{is_minimal_left_ideal, minimal_ideal_generator};
use steinberg::{FieldSpec, SteinbergAlgebra};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = cyclic_groupoid(6);
    let x = g.units()[0];
    for field in [
        FieldSpec::Rationals,
        FieldSpec::Prime(2),
        FieldSpec::Prime(5),
        FieldSpec::Prime(3),
    ] {
        let alg = SteinbergAlgebra::new(&g, field);
        let cert = minimal_ideal_generator(&alg, x)?;
        let square = alg.convolve(&cert.generator, &cert.generator)?;
        let verdict = is_minimal_left_ideal(&alg, &cert.ideal)?;
        println!(
            "Z/6 over {field}: {} (square is {}), ideal dimension {}, minimal {}",
            cert.flavor.as_str(),
            if square.is_zero() { "zero" } else { "itself" },
            cert.ideal.dimension(),
            verdict.minimal,
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
