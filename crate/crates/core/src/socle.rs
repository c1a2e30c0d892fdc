//! Minimal left ideals and the socle of `A_K(G)`.
//!
//! At a unit `x` with isotropy of order `n`, `Σ_{α ∈ xGx} 1_{α}` generates a
//! minimal left ideal. If `char K ∤ n` the normalized sum `e = (1/n)Σ1_{α}`
//! is an idempotent with `eAe` a division algebra; if `char K | n` the sum
//! `f` squares to zero and `f·A·f = 0`.
//!
//! The socle is computed under Condition (LP), which for a finite groupoid
//! means that every isotropy group is trivial. It is the two-sided ideal
//! generated by the `1_{x}`, one `x` per orbit, and splits into homogeneous
//! components `(1_{x}) = ⊕_{y ∈ [x]} A·1_{y}`, each a matrix block of size
//! `|[x]|`.

use rayon::prelude::*;

use crate::algebra::{AlgebraElement, SteinbergAlgebra};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::groupoid::{ElementId, FiniteGroupoid, OrbitClass};
use crate::ideal::{self, left_ideal, LeftIdeal, Side};
use crate::limits::check_enumeration;
use crate::linalg::{modp, Subspace};
use crate::oracle::DenseAlgebra;

/// Ideals over ℚ larger than this are not certified.
pub const MAX_RATIONAL_CERTIFICATION_DIM: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// `e² = e` and `eAe` is a division algebra.
    DivisionIdempotent,
    /// `f² = 0` and `f·A·f = 0`.
    AbsoluteZeroDivisor,
}

impl Flavor {
    pub fn as_str(&self) -> &'static str {
        match self {
            Flavor::DivisionIdempotent => "division_idempotent",
            Flavor::AbsoluteZeroDivisor => "absolute_zero_divisor",
        }
    }
}

#[derive(Clone, Debug)]
pub struct MinimalIdealCertificate {
    pub unit: ElementId,
    pub isotropy_order: usize,
    pub flavor: Flavor,
    pub generator: AlgebraElement,
    pub ideal: LeftIdeal,
}

/// Builds the generator at unit `x` and checks the identity its flavor
/// promises by direct convolution.
pub fn minimal_ideal_generator(alg: &SteinbergAlgebra<'_>, x: ElementId) -> Result<MinimalIdealCertificate> {
    let g = alg.groupoid();
    let iso = g.isotropy(x)?;
    let n = iso.order();
    let sum = AlgebraElement::from_terms(alg.field(), iso.members.iter().map(|&a| (a, alg.field().one())))?;
    let n_scalar = alg.scalar(n as i64);
    let (flavor, generator) = if n_scalar.is_zero() {
        (Flavor::AbsoluteZeroDivisor, sum)
    } else {
        (Flavor::DivisionIdempotent, sum.scale(&n_scalar.inv()?))
    };
    let square = alg.convolve(&generator, &generator)?;
    let holds = match flavor {
        Flavor::DivisionIdempotent => square == generator,
        Flavor::AbsoluteZeroDivisor => square.is_zero(),
    };
    if !holds {
        return Err(Error::Consistency(format!(
            "generator at {} fails its {} identity",
            g.name(x),
            flavor.as_str()
        )));
    }
    let ideal = left_ideal(alg, std::slice::from_ref(&generator))?;
    Ok(MinimalIdealCertificate {
        unit: x,
        isotropy_order: n,
        flavor,
        generator,
        ideal,
    })
}

/// `f·1_{γ}·f = 0` for every singleton bisection, i.e. `f·A·f = 0`.
pub fn is_absolute_zero_divisor(alg: &SteinbergAlgebra<'_>, f: &AlgebraElement) -> bool {
    alg.basis_elements().all(|b| alg.mul(&alg.mul(f, &b), f).is_zero())
}

/// Moves a generator so that a unit appears in its support:
/// `a = 1_{γ₀⁻¹}·b` for the least `γ₀ ∈ Supp(b)`. Then `a(s(γ₀)) = b(γ₀) ≠ 0`
/// and `A·a ⊆ A·b`.
pub fn normalize_generator(alg: &SteinbergAlgebra<'_>, b: &AlgebraElement) -> Result<AlgebraElement> {
    let g = alg.groupoid();
    let first = b.support().next().ok_or(Error::ZeroElement)?;
    alg.convolve(&alg.basis(g.inverse(first)), b)
}

/// `1_{x}·a·1_{x}`, failing if it vanishes.
pub fn corner_compress(alg: &SteinbergAlgebra<'_>, a: &AlgebraElement, x: ElementId) -> Result<AlgebraElement> {
    let out = alg.corner(a, x)?;
    if out.is_zero() {
        return Err(Error::ZeroCompression {
            unit: alg.groupoid().name(x).to_string(),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalityMethod {
    /// Every nonzero vector of the ideal was enumerated.
    Exhaustive { field_order: u64, vectors: u64 },
    /// Over ℚ: every vector of a left-closed spanning set generates the
    /// ideal, and the reduction mod `shadow_prime` passed the exhaustive test.
    StructuredWithShadow { spanning_vectors: usize, shadow_prime: u32 },
    /// Over ℚ: a vector of the spanning set generates a smaller ideal.
    StructuredCounterexample,
}

#[derive(Clone, Debug)]
pub struct MinimalityVerdict {
    pub minimal: bool,
    pub method: MinimalityMethod,
    /// A nonzero element generating a strictly smaller left ideal, if found.
    pub witness: Option<AlgebraElement>,
}

/// Decides whether every nonzero element of `ideal` generates it.
///
/// Over GF(p) every nonzero vector is enumerated (`p^dim` capped). Over ℚ the
/// ideal must have dimension at most 12; every vector of the left-closed
/// spanning set `basis ∪ {1_γ·b}` is tested, then the ideal is reduced modulo
/// the least prime not dividing `|G|` or any denominator whose reduction
/// keeps the dimension, and checked exhaustively there.
pub fn is_minimal_left_ideal(alg: &SteinbergAlgebra<'_>, ideal: &LeftIdeal) -> Result<MinimalityVerdict> {
    if ideal.is_zero() {
        return Err(Error::Precondition("the zero ideal is not minimal".into()));
    }
    match alg.field() {
        FieldSpec::Prime(p) => {
            let dense = DenseAlgebra::new(alg.groupoid(), p);
            let basis = ideal.basis().to_modp().expect("prime field");
            let vectors = check_enumeration(u64::from(p), basis.dim())?;
            let witness = exhaustive_witness(&dense, &basis)?;
            Ok(MinimalityVerdict {
                minimal: witness.is_none(),
                method: MinimalityMethod::Exhaustive {
                    field_order: u64::from(p),
                    vectors,
                },
                witness: witness.map(|v| alg.from_dense(&residues(alg.field(), &v))),
            })
        }
        FieldSpec::Rationals => rational_minimality(alg, ideal),
    }
}

fn residues(field: FieldSpec, v: &[u32]) -> Vec<Scalar> {
    v.iter().map(|&x| field.from_u64(u64::from(x))).collect()
}

/// Least-index nonzero vector of `space` whose cyclic left ideal is smaller.
pub(crate) fn exhaustive_witness(dense: &DenseAlgebra, space: &modp::Basis) -> Result<Option<Vec<u32>>> {
    let count = check_enumeration(u64::from(space.modulus()), space.dim())?;
    let dim = space.dim();
    Ok((1..count)
        .into_par_iter()
        .find_first(|&i| dense.cyclic_left(&space.combination(i)).dim() < dim)
        .map(|i| space.combination(i)))
}

fn rational_minimality(alg: &SteinbergAlgebra<'_>, ideal: &LeftIdeal) -> Result<MinimalityVerdict> {
    let dim = ideal.dimension();
    if dim > MAX_RATIONAL_CERTIFICATION_DIM {
        return Err(Error::SizeCap {
            requested: dim as u128,
            cap: MAX_RATIONAL_CERTIFICATION_DIM as u64,
        });
    }
    let basis = ideal.basis_elements(alg);
    let mut spanning: Vec<AlgebraElement> = basis.clone();
    for b in &basis {
        for ind in alg.basis_elements() {
            let w = alg.mul(&ind, b);
            if !w.is_zero() {
                spanning.push(w);
            }
        }
    }
    for v in &spanning {
        if ideal::cyclic_left(alg, v).dim() < dim {
            return Ok(MinimalityVerdict {
                minimal: false,
                method: MinimalityMethod::StructuredCounterexample,
                witness: Some(v.clone()),
            });
        }
    }

    let g = alg.groupoid();
    let order = g.len() as u64;
    let generators = ideal.generators();
    let mut last_err = None;
    for p in (2u32..).filter(|&p| crate::field::is_prime(u64::from(p))).take(64) {
        if order.is_multiple_of(u64::from(p)) {
            continue;
        }
        let Some(shadow_gens) = reduce_all(generators, p) else {
            continue;
        };
        let shadow_basis: Option<Vec<Vec<u32>>> = basis.iter().map(|b| reduce_dense(alg, b, p)).collect();
        let Some(shadow_basis) = shadow_basis else {
            continue;
        };
        if modp::Basis::span(p, g.len(), shadow_basis).dim() != dim {
            continue;
        }
        let dense = DenseAlgebra::new(g, p);
        let shadow_ideal = dense.left_closure(&shadow_gens);
        if shadow_ideal.dim() != dim {
            continue;
        }
        match exhaustive_witness(&dense, &shadow_ideal) {
            Ok(w) => {
                return Ok(MinimalityVerdict {
                    minimal: w.is_none(),
                    method: MinimalityMethod::StructuredWithShadow {
                        spanning_vectors: spanning.len(),
                        shadow_prime: p,
                    },
                    witness: None,
                })
            }
            Err(e) => {
                // Larger primes only make the enumeration bigger.
                last_err = Some(e);
                break;
            }
        }
    }
    Err(last_err.unwrap_or_else(|| Error::Precondition("no usable shadow prime".into())))
}

fn reduce_dense(alg: &SteinbergAlgebra<'_>, f: &AlgebraElement, p: u32) -> Option<Vec<u32>> {
    f.to_dense(alg.dimension())
        .iter()
        .map(|c| c.reduce_mod(p).and_then(|r| r.residue()))
        .collect()
}

fn reduce_all(fs: &[AlgebraElement], p: u32) -> Option<Vec<Vec<(usize, u32)>>> {
    fs.iter()
        .map(|f| {
            f.terms()
                .map(|(x, c)| Some((x.index(), c.reduce_mod(p)?.residue()?)))
                .collect()
        })
        .collect()
}

/// The corner `e·A·e` as a subspace.
pub fn corner_space(alg: &SteinbergAlgebra<'_>, e: &AlgebraElement) -> Subspace {
    let n = alg.dimension();
    Subspace::span(
        alg.field(),
        n,
        alg.basis_elements().map(|b| alg.mul(&alg.mul(e, &b), e).to_dense(n)),
    )
}

/// Every nonzero element of the corner `e·A·e` has an inverse in the corner
/// (with `e` as identity). Exhaustive over GF(p); over ℚ each canonical
/// corner basis vector is checked.
pub fn corner_is_division_algebra(alg: &SteinbergAlgebra<'_>, e: &AlgebraElement) -> Result<bool> {
    let n = alg.dimension();
    let corner = corner_space(alg, e);
    let basis: Vec<AlgebraElement> = corner.basis().iter().map(|v| alg.from_dense(v)).collect();
    let e_dense = e.to_dense(n);
    let invertible = |c: &AlgebraElement| {
        let image = Subspace::span(alg.field(), n, basis.iter().map(|b| alg.mul(c, b).to_dense(n)));
        image.contains(&e_dense)
    };
    match alg.field() {
        FieldSpec::Prime(p) => {
            let count = check_enumeration(u64::from(p), corner.dim())?;
            let m = corner.to_modp().expect("prime field");
            Ok((1..count).all(|i| invertible(&alg.from_dense(&residues(alg.field(), &m.combination(i))))))
        }
        FieldSpec::Rationals => Ok(basis.iter().all(invertible)),
    }
}

/// The LP check specialized to finite groupoids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpReport {
    pub holds: bool,
    pub violators: Vec<ElementId>,
    pub explanation: String,
}

/// Condition (LP) for a finite groupoid: every finite group algebra has a
/// nonzero socle, so the condition holds iff every unit has trivial
/// isotropy. Returns the units where it fails.
pub fn check_condition_lp(g: &FiniteGroupoid) -> LpReport {
    let violators: Vec<ElementId> = g
        .units()
        .iter()
        .copied()
        .filter(|&x| !g.isotropy(x).expect("unit").is_trivial())
        .collect();
    let explanation = if violators.is_empty() {
        "every unit has trivial isotropy".to_string()
    } else {
        let parts: Vec<String> = violators
            .iter()
            .map(|&x| {
                format!(
                    "{} (isotropy order {})",
                    g.name(x),
                    g.isotropy(x).expect("unit").order()
                )
            })
            .collect();
        format!(
            "nontrivial finite isotropy at {}; its group algebra has nonzero socle, so (LP) fails",
            parts.join(", ")
        )
    };
    LpReport {
        holds: violators.is_empty(),
        violators,
        explanation,
    }
}

/// One summand `(1_{x})` of the socle.
#[derive(Clone, Debug)]
pub struct HomogeneousComponent {
    pub orbit: OrbitClass,
    /// The two-sided ideal generated by `1_{x}`.
    pub ideal: Subspace,
    /// `A·1_{y}` for each `y` in the orbit.
    pub summands: Vec<(ElementId, LeftIdeal)>,
}

impl HomogeneousComponent {
    pub fn representative(&self) -> ElementId {
        self.orbit.representative
    }

    pub fn dimension(&self) -> usize {
        self.ideal.dim()
    }

    pub fn matrix_size(&self) -> usize {
        self.orbit.len()
    }
}

/// `(1_{x}) = ⊕_{y ∈ [x]} A·1_{y}`, with the direct-sum decomposition checked:
/// the summand dimensions add up to the dimension of their sum, and that sum
/// equals the independently computed two-sided ideal.
pub fn homogeneous_component(alg: &SteinbergAlgebra<'_>, x: ElementId) -> Result<HomogeneousComponent> {
    let g = alg.groupoid();
    let iso = g.isotropy(x)?;
    if !iso.is_trivial() {
        return Err(Error::NontrivialIsotropy {
            unit: g.name(x).to_string(),
            order: iso.order(),
        });
    }
    let orbit = g.orbit_of(x)?;
    let ideal = ideal::closure(alg, &[alg.basis(x)], Side::TwoSided);
    let summands = orbit
        .members
        .iter()
        .map(|&y| Ok((y, left_ideal(alg, &[alg.basis(y)])?)))
        .collect::<Result<Vec<_>>>()?;

    let mut total = Subspace::zero(alg.field(), alg.dimension());
    let mut dims = 0;
    for (_, s) in &summands {
        total = total.sum(s.basis());
        dims += s.dimension();
    }
    if dims != total.dim() {
        return Err(Error::Consistency(format!(
            "summands at the orbit of {} are not independent",
            g.name(x)
        )));
    }
    if total != ideal {
        return Err(Error::Consistency(format!(
            "sum of A·1_y over the orbit of {} differs from (1_x)",
            g.name(x)
        )));
    }
    Ok(HomogeneousComponent { orbit, ideal, summands })
}

#[derive(Clone, Debug)]
pub struct SocleReport {
    pub field: FieldSpec,
    pub lp_holds: bool,
    /// Orbit representatives with trivial isotropy.
    pub generating_units: Vec<ElementId>,
    pub components: Vec<HomogeneousComponent>,
    pub basis: Subspace,
}

impl SocleReport {
    pub fn socle_dimension(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_zero()
    }

    pub fn matrix_sizes(&self) -> Vec<usize> {
        self.components.iter().map(HomogeneousComponent::matrix_size).collect()
    }
}

/// The socle as the two-sided ideal generated by `1_{x}` over orbit
/// representatives with trivial isotropy. Refuses when (LP) fails.
pub fn socle(alg: &SteinbergAlgebra<'_>) -> Result<SocleReport> {
    let g = alg.groupoid();
    let lp = check_condition_lp(g);
    if !lp.holds {
        return Err(Error::LpViolated {
            violators: lp.violators.iter().map(|&x| g.name(x).to_string()).collect(),
        });
    }
    let generating_units: Vec<ElementId> = g
        .orbit_classes()
        .into_iter()
        .map(|c| c.representative)
        .filter(|&x| g.isotropy(x).map(|i| i.is_trivial()).unwrap_or(false))
        .collect();
    let components = generating_units
        .iter()
        .map(|&x| homogeneous_component(alg, x))
        .collect::<Result<Vec<_>>>()?;
    let mut basis = Subspace::zero(alg.field(), alg.dimension());
    for c in &components {
        basis = basis.sum(&c.ideal);
    }
    Ok(SocleReport {
        field: alg.field(),
        lp_holds: true,
        generating_units,
        components,
        basis,
    })
}

/// Checks that `e·A·a` is a minimal left ideal of the corner `e·A·e`.
///
/// Requires `e² = e`, `a = e·a·e`, and `A·a` certified minimal.
pub fn corner_minimality_transfer(alg: &SteinbergAlgebra<'_>, e: &AlgebraElement, a: &AlgebraElement) -> Result<bool> {
    if alg.convolve(e, e)? != *e {
        return Err(Error::Precondition("e is not idempotent".into()));
    }
    if alg.product(&[e, a, e])? != *a {
        return Err(Error::Precondition("a is not in the corner eAe".into()));
    }
    if a.is_zero() {
        return Err(Error::Precondition("a is zero".into()));
    }
    let whole = left_ideal(alg, std::slice::from_ref(a))?;
    if !is_minimal_left_ideal(alg, &whole)?.minimal {
        return Err(Error::Precondition("A·a is not minimal".into()));
    }

    let n = alg.dimension();
    let corner: Vec<AlgebraElement> = corner_space(alg, e).basis().iter().map(|v| alg.from_dense(v)).collect();
    let module_spanning: Vec<AlgebraElement> = alg
        .basis_elements()
        .map(|b| alg.product(&[e, &b, a]).expect("same field"))
        .filter(|w| !w.is_zero())
        .collect();
    let module = Subspace::span(alg.field(), n, module_spanning.iter().map(|w| w.to_dense(n)));
    if module.is_zero() {
        return Ok(false);
    }
    let generates = |w: &AlgebraElement| {
        let s = Subspace::span(alg.field(), n, corner.iter().map(|c| alg.mul(c, w).to_dense(n)));
        s == module
    };
    match alg.field() {
        FieldSpec::Prime(p) => {
            let count = check_enumeration(u64::from(p), module.dim())?;
            let m = module.to_modp().expect("prime field");
            Ok((1..count)
                .into_par_iter()
                .all(|i| generates(&alg.from_dense(&residues(alg.field(), &m.combination(i))))))
        }
        FieldSpec::Rationals => Ok(module_spanning.iter().all(generates)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic_groupoid, disjoint_union, isolated_units, pair_groupoid};

    fn f(p: u32) -> FieldSpec {
        FieldSpec::Prime(p)
    }

    #[test]
    fn trivial_isotropy_certificate() {
        let g = pair_groupoid(2);
        for field in [FieldSpec::Rationals, f(2), f(3)] {
            let alg = SteinbergAlgebra::new(&g, field);
            let x = g.units()[0];
            let cert = minimal_ideal_generator(&alg, x).unwrap();
            assert_eq!(cert.flavor, Flavor::DivisionIdempotent);
            assert_eq!(cert.generator, alg.basis(x));
            assert_eq!(cert.ideal.dimension(), 2);
        }
    }

    #[test]
    fn z2_over_q_gives_half_sum() {
        let g = cyclic_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let cert = minimal_ideal_generator(&alg, g.units()[0]).unwrap();
        let half = FieldSpec::Rationals.fraction(1, 2).unwrap();
        assert_eq!(cert.generator.coeff(g.id("e").unwrap()), half);
        assert_eq!(cert.generator.coeff(g.id("g").unwrap()), half);
        assert!(corner_is_division_algebra(&alg, &cert.generator).unwrap());
    }

    #[test]
    fn z2_over_gf2_is_square_zero() {
        let g = cyclic_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, f(2));
        let cert = minimal_ideal_generator(&alg, g.units()[0]).unwrap();
        assert_eq!(cert.flavor, Flavor::AbsoluteZeroDivisor);
        assert!(alg.convolve(&cert.generator, &cert.generator).unwrap().is_zero());
        assert!(is_absolute_zero_divisor(&alg, &cert.generator));
        assert_eq!(cert.ideal.dimension(), 1);
    }

    #[test]
    fn non_unit_rejected() {
        let g = cyclic_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, f(2));
        assert!(matches!(
            minimal_ideal_generator(&alg, g.id("g").unwrap()),
            Err(Error::NotAUnit(_))
        ));
    }

    #[test]
    fn normalize_examples() {
        let g = pair_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let a = g.id("g1_2").unwrap();
        let u2 = g.unit("u2").unwrap();
        assert_eq!(normalize_generator(&alg, &alg.basis(a)).unwrap(), alg.basis(u2));
        assert!(matches!(
            normalize_generator(&alg, &alg.zero()),
            Err(Error::ZeroElement)
        ));

        // b = 2·1_a + 3·1_u with u = s(a). The least support element is u2
        // (declared before a), and 1_{u2}·1_a = 0 since r(a) = u1.
        let b = alg
            .basis(a)
            .scale(&alg.scalar(2))
            .add(&alg.basis(u2).scale(&alg.scalar(3)))
            .unwrap();
        let n = normalize_generator(&alg, &b).unwrap();
        assert_eq!(n, alg.basis(u2).scale(&alg.scalar(3)));
        assert!(!n.coeff(u2).is_zero());
        let (ia, ib) = (left_ideal(&alg, &[n]).unwrap(), left_ideal(&alg, &[b]).unwrap());
        assert!(ia.basis().is_subspace_of(ib.basis()));
    }

    #[test]
    fn compress_examples() {
        let g = pair_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let (u1, u2) = (g.unit("u1").unwrap(), g.unit("u2").unwrap());
        let a = alg
            .basis(u1)
            .scale(&alg.scalar(5))
            .add(&alg.basis(g.id("g2_1").unwrap()))
            .unwrap();
        assert_eq!(
            corner_compress(&alg, &a, u1).unwrap(),
            alg.basis(u1).scale(&alg.scalar(5))
        );
        assert_eq!(corner_compress(&alg, &alg.basis(u1), u1).unwrap(), alg.basis(u1));
        assert!(matches!(
            corner_compress(&alg, &alg.basis(u2), u1),
            Err(Error::ZeroCompression { .. })
        ));
    }

    #[test]
    fn minimality_examples() {
        let g = pair_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, f(2));
        let col = left_ideal(&alg, &[alg.basis(g.units()[0])]).unwrap();
        assert!(is_minimal_left_ideal(&alg, &col).unwrap().minimal);

        let whole = left_ideal(&alg, &[alg.identity()]).unwrap();
        assert_eq!(whole.dimension(), 4);
        let v = is_minimal_left_ideal(&alg, &whole).unwrap();
        assert!(!v.minimal);
        let w = v.witness.unwrap();
        assert!(ideal::cyclic_left(&alg, &w).dim() < 4);

        let z2 = cyclic_groupoid(2);
        let alg = SteinbergAlgebra::new(&z2, f(2));
        let sum = alg.basis(z2.element(0)).add(&alg.basis(z2.element(1))).unwrap();
        let i = left_ideal(&alg, &[sum]).unwrap();
        assert_eq!(i.dimension(), 1);
        assert!(is_minimal_left_ideal(&alg, &i).unwrap().minimal);
    }

    #[test]
    fn rational_minimality_uses_shadow() {
        let g = pair_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let col = left_ideal(&alg, &[alg.basis(g.units()[0])]).unwrap();
        let v = is_minimal_left_ideal(&alg, &col).unwrap();
        assert!(v.minimal);
        // |G| = 4, so the shadow prime is 3.
        assert!(matches!(
            v.method,
            MinimalityMethod::StructuredWithShadow { shadow_prime: 3, .. }
        ));

        let whole = left_ideal(&alg, &[alg.identity()]).unwrap();
        assert!(!is_minimal_left_ideal(&alg, &whole).unwrap().minimal);
    }

    #[test]
    fn lp_examples() {
        assert!(check_condition_lp(&pair_groupoid(3)).holds);
        let z2 = cyclic_groupoid(2);
        let lp = check_condition_lp(&z2);
        assert!(!lp.holds);
        assert_eq!(lp.violators, vec![z2.units()[0]]);
        let mixed = disjoint_union(&[pair_groupoid(2), cyclic_groupoid(3)]);
        let lp = check_condition_lp(&mixed);
        assert_eq!(lp.violators.len(), 1);
        assert_eq!(mixed.name(lp.violators[0]), "c1.e");
    }

    #[test]
    fn socle_of_pair3() {
        let g = pair_groupoid(3);
        for field in [FieldSpec::Rationals, f(2), f(5)] {
            let alg = SteinbergAlgebra::new(&g, field);
            let r = socle(&alg).unwrap();
            assert_eq!(r.socle_dimension(), 9);
            assert_eq!(r.matrix_sizes(), vec![3]);
            assert_eq!(r.components[0].dimension(), 9);
        }
    }

    #[test]
    fn socle_of_isolated_units() {
        let g = isolated_units(2);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let r = socle(&alg).unwrap();
        assert_eq!(r.socle_dimension(), 2);
        assert_eq!(r.matrix_sizes(), vec![1, 1]);
    }

    #[test]
    fn socle_refused_without_lp() {
        let g = cyclic_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, f(2));
        assert!(matches!(socle(&alg), Err(Error::LpViolated { .. })));
    }

    #[test]
    fn component_of_pair2() {
        let g = pair_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let c = homogeneous_component(&alg, g.units()[0]).unwrap();
        assert_eq!(c.dimension(), 4);
        let dims: Vec<_> = c.summands.iter().map(|(_, s)| s.dimension()).collect();
        assert_eq!(dims, vec![2, 2]);

        let single = isolated_units(1);
        let alg = SteinbergAlgebra::new(&single, FieldSpec::Rationals);
        assert_eq!(homogeneous_component(&alg, single.units()[0]).unwrap().dimension(), 1);

        let z3 = cyclic_groupoid(3);
        let alg = SteinbergAlgebra::new(&z3, FieldSpec::Rationals);
        assert!(matches!(
            homogeneous_component(&alg, z3.units()[0]),
            Err(Error::NontrivialIsotropy { order: 3, .. })
        ));
    }

    #[test]
    fn corner_transfer_examples() {
        let g = pair_groupoid(2);
        for field in [FieldSpec::Rationals, f(2), f(3)] {
            let alg = SteinbergAlgebra::new(&g, field);
            let u1 = alg.basis(g.units()[0]);
            assert!(corner_minimality_transfer(&alg, &u1, &u1).unwrap());
            assert_eq!(corner_space(&alg, &u1).dim(), 1);
        }
        // e = global unit reduces to minimality in A itself.
        let alg = SteinbergAlgebra::new(&g, f(3));
        let u1 = alg.basis(g.units()[0]);
        assert!(corner_minimality_transfer(&alg, &alg.identity(), &u1).unwrap());
        // a outside the corner is rejected.
        let a = alg.basis(g.id("g1_2").unwrap());
        assert!(matches!(
            corner_minimality_transfer(&alg, &u1, &a),
            Err(Error::Precondition(_))
        ));
    }
}
