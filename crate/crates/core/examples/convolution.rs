// Convolution, the involution, bisection indicators and corners.

use steinberg::constructions::pair_groupoid;
use steinberg::{Bisection, FieldSpec, SteinbergAlgebra};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = pair_groupoid(3);
    let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
    let a = g.id("g1_2")?;
    let b = g.id("g2_3")?;

    // 1_a · 1_b = 1_{ab}: matrix units multiply like E₁₂E₂₃ = E₁₃.
    let ab = alg.convolve(&alg.basis(a), &alg.basis(b))?;
    println!("1_g1_2 * 1_g2_3 = {}", g.name(ab.support().next().expect("nonzero")));

    let half = FieldSpec::Rationals.fraction(1, 2)?;
    let f = alg.basis(a).scale(&half).add(&alg.basis(g.units()[2]))?;
    println!("f = {:?}", steinberg::format::element_to_json(&g, &f));
    println!("f* = {:?}", steinberg::format::element_to_json(&g, &alg.involution(&f)));

    // A cyclic permutation of the three objects is a bisection.
    let perm = Bisection::new(&g, [g.id("g1_2")?, g.id("g2_3")?, g.id("g3_1")?])?;
    let cube = alg.product(&[&alg.indicator(&perm), &alg.indicator(&perm), &alg.indicator(&perm)])?;
    assert_eq!(cube, alg.identity());
    println!("(1_B)^3 = 1 for the 3-cycle bisection");

    // Corners at a unit with trivial isotropy are one-dimensional.
    let x = g.units()[0];
    let generic = alg.from_dense(&(1..=9).map(|i| alg.scalar(i)).collect::<Vec<_>>());
    let c = alg.corner(&generic, x)?;
    assert_eq!(c, alg.basis(x).scale(&generic.coeff(x)));
    println!(
        "corner at {} = {:?}",
        g.name(x),
        steinberg::format::element_to_json(&g, &c)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
