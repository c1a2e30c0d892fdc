// The socle of a principal groupoid's algebra as a sum of matrix blocks.

use steinberg::constructions::{disjoint_union, isolated_units, pair_groupoid};
use steinberg::socle::{check_condition_lp, socle};
use steinberg::{FieldSpec, SteinbergAlgebra};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = disjoint_union(&[pair_groupoid(2), pair_groupoid(3), isolated_units(1)]);
    println!("LP: {}", check_condition_lp(&g).explanation);
    let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
    let report = socle(&alg)?;
    for c in &report.components {
        println!(
            "block at {}: M_{}(Q), dimension {}",
            g.name(c.representative()),
            c.matrix_size(),
            c.dimension()
        );
    }
    println!("socle dimension {} of {}", report.socle_dimension(), g.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
