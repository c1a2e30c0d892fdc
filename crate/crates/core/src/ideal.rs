//! Left, right and two-sided ideals as subspaces of `A_K(G)`.
//!
//! Ideals are computed by saturation: start from the generators and keep
//! multiplying by basis indicators `1_{γ}` until the span stops growing.
//! Products of indicators are indicators or zero, so this closure is the
//! ideal generated (generators included).

use std::collections::VecDeque;

use crate::algebra::{AlgebraElement, SteinbergAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

/// A left ideal together with the generators it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftIdeal {
    generators: Vec<AlgebraElement>,
    basis: Subspace,
}

impl LeftIdeal {
    pub(crate) fn from_parts(generators: Vec<AlgebraElement>, basis: Subspace) -> Self {
        LeftIdeal { generators, basis }
    }

    pub fn generators(&self) -> &[AlgebraElement] {
        &self.generators
    }

    /// Canonical echelon basis over the singleton basis of the algebra.
    pub fn basis(&self) -> &Subspace {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_zero()
    }

    pub fn basis_elements(&self, alg: &SteinbergAlgebra<'_>) -> Vec<AlgebraElement> {
        self.basis.basis().iter().map(|v| alg.from_dense(v)).collect()
    }

    pub fn contains(&self, alg: &SteinbergAlgebra<'_>, f: &AlgebraElement) -> bool {
        self.basis.contains(&f.to_dense(alg.dimension()))
    }

    /// Same subspace, regardless of generators.
    pub fn same_space(&self, other: &LeftIdeal) -> bool {
        self.basis == other.basis
    }
}

/// `A·g₁ + … + A·gₖ` (which contains the generators).
pub fn left_ideal(alg: &SteinbergAlgebra<'_>, generators: &[AlgebraElement]) -> Result<LeftIdeal> {
    if generators.is_empty() {
        return Err(Error::EmptyList);
    }
    for g in generators {
        if g.field() != alg.field() {
            return Err(Error::FieldMismatch {
                expected: alg.field(),
                found: g.field(),
            });
        }
    }
    Ok(LeftIdeal {
        generators: generators.to_vec(),
        basis: closure(alg, generators, Side::Left),
    })
}

/// The ideal generated on the given side, as a subspace.
pub fn closure(alg: &SteinbergAlgebra<'_>, seeds: &[AlgebraElement], side: Side) -> Subspace {
    let n = alg.dimension();
    let mut span = Subspace::zero(alg.field(), n);
    let mut queue = VecDeque::new();
    for s in seeds {
        if span.insert(s.to_dense(n)) {
            queue.push_back(s.clone());
        }
    }
    let indicators: Vec<AlgebraElement> = alg.basis_elements().collect();
    while let Some(f) = queue.pop_front() {
        for b in &indicators {
            let mut products = Vec::with_capacity(2);
            if matches!(side, Side::Left | Side::TwoSided) {
                products.push(alg.mul(b, &f));
            }
            if matches!(side, Side::Right | Side::TwoSided) {
                products.push(alg.mul(&f, b));
            }
            for w in products {
                if !w.is_zero() && span.insert(w.to_dense(n)) {
                    queue.push_back(w);
                }
            }
        }
    }
    span
}

/// `span({v} ∪ {1_γ·v})`, the cyclic left ideal `A·v`.
pub fn cyclic_left(alg: &SteinbergAlgebra<'_>, v: &AlgebraElement) -> Subspace {
    let n = alg.dimension();
    let mut span = Subspace::zero(alg.field(), n);
    span.insert(v.to_dense(n));
    for b in alg.basis_elements() {
        span.insert(alg.mul(&b, v).to_dense(n));
    }
    span
}

/// Is the subspace closed under multiplication by every `1_γ` on `side`?
pub fn is_ideal(alg: &SteinbergAlgebra<'_>, space: &Subspace, side: Side) -> bool {
    space.basis().iter().all(|v| {
        let f = alg.from_dense(v);
        alg.basis_elements().all(|b| {
            let left_ok = !matches!(side, Side::Left | Side::TwoSided)
                || space.contains(&alg.mul(&b, &f).to_dense(alg.dimension()));
            let right_ok = !matches!(side, Side::Right | Side::TwoSided)
                || space.contains(&alg.mul(&f, &b).to_dense(alg.dimension()));
            left_ok && right_ok
        })
    })
}

/// Image of a subspace under the involution.
pub fn involution_image(alg: &SteinbergAlgebra<'_>, space: &Subspace) -> Subspace {
    let n = alg.dimension();
    Subspace::span(
        alg.field(),
        n,
        space
            .basis()
            .iter()
            .map(|v| alg.involution(&alg.from_dense(v)).to_dense(n)),
    )
}

/// Right multiplication by `r` maps `source` bijectively onto `target`.
pub fn right_multiplication_is_isomorphism(
    alg: &SteinbergAlgebra<'_>,
    source: &Subspace,
    target: &Subspace,
    r: &AlgebraElement,
) -> bool {
    let n = alg.dimension();
    if source.dim() != target.dim() {
        return false;
    }
    let images: Vec<_> = source
        .basis()
        .iter()
        .map(|v| alg.mul(&alg.from_dense(v), r).to_dense(n))
        .collect();
    images.iter().all(|w| target.contains(w)) && Subspace::rank_of(alg.field(), n, images) == source.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic_groupoid, pair_groupoid};
    use crate::field::FieldSpec;

    #[test]
    fn unit_generates_column() {
        let g = pair_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Prime(2));
        let x = g.units()[0];
        let i = left_ideal(&alg, &[alg.basis(x)]).unwrap();
        assert_eq!(i.dimension(), 2);
        assert_eq!(i.dimension(), g.arrows_from(x).len());
        for gamma in g.arrows_from(x) {
            assert!(i.contains(&alg, &alg.basis(gamma)));
        }
        assert!(is_ideal(&alg, i.basis(), Side::Left));
    }

    #[test]
    fn empty_generator_list() {
        let g = pair_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        assert!(matches!(left_ideal(&alg, &[]), Err(Error::EmptyList)));
    }

    #[test]
    fn group_identity_generates_everything() {
        let g = cyclic_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let i = left_ideal(&alg, &[alg.basis(g.units()[0])]).unwrap();
        assert_eq!(i.dimension(), 2);
    }

    #[test]
    fn cyclic_matches_closure() {
        let g = pair_groupoid(3);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let v = alg
            .basis(g.id("g1_2").unwrap())
            .add(&alg.basis(g.units()[2]).scale(&alg.scalar(-3)))
            .unwrap();
        assert_eq!(cyclic_left(&alg, &v), closure(&alg, &[v], Side::Left));
    }

    #[test]
    fn two_sided_ideal_of_unit_in_pair_groupoid_is_everything() {
        let g = pair_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let s = closure(&alg, &[alg.basis(g.units()[0])], Side::TwoSided);
        assert_eq!(s.dim(), 4);
    }
}
