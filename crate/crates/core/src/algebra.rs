//! The Steinberg algebra `A_K(G)` of a finite discrete groupoid.
//!
//! In the discrete case every subset is compact open, so the algebra has the
//! singleton indicators `1_{γ}` as a basis. Elements are stored in that
//! basis as sparse maps with no zero coefficients, which makes the
//! representation canonical: two elements are equal iff their maps are.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::groupoid::{ElementId, FiniteGroupoid};

/// A finitely supported function `G → K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    field: FieldSpec,
    coeffs: BTreeMap<ElementId, Scalar>,
}

impl AlgebraElement {
    pub fn zero(field: FieldSpec) -> Self {
        AlgebraElement {
            field,
            coeffs: BTreeMap::new(),
        }
    }

    /// Builds an element from `(element, coefficient)` pairs, summing repeats
    /// and dropping zeros.
    pub fn from_terms(field: FieldSpec, terms: impl IntoIterator<Item = (ElementId, Scalar)>) -> Result<Self> {
        let mut out = AlgebraElement::zero(field);
        for (x, c) in terms {
            if !field.owns(&c) {
                return Err(Error::FieldMismatch {
                    expected: field,
                    found: c.field(),
                });
            }
            out.add_term(x, &c);
        }
        Ok(out)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient `f(γ)`.
    pub fn coeff(&self, x: ElementId) -> Scalar {
        self.coeffs.get(&x).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `Supp(f)` in canonical order.
    pub fn support(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (ElementId, &Scalar)> + '_ {
        self.coeffs.iter().map(|(&x, c)| (x, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, x: ElementId, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&x) {
            Some(v) => {
                *v = &*v + c;
                if v.is_zero() {
                    self.coeffs.remove(&x);
                }
            }
            None => {
                self.coeffs.insert(x, c.clone());
            }
        }
    }

    fn check_field(&self, other: &AlgebraElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: other.field,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_field(other)?;
        let mut out = self.clone();
        for (x, c) in other.terms() {
            out.add_term(x, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &AlgebraElement) -> Result<AlgebraElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(&self.field.from_integer(-1))
    }

    /// `c·f`. Panics if `c` lives in another field.
    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        assert!(self.field.owns(c), "scalar from another field");
        if c.is_zero() {
            return AlgebraElement::zero(self.field);
        }
        AlgebraElement {
            field: self.field,
            coeffs: self.coeffs.iter().map(|(&x, v)| (x, v * c)).collect(),
        }
    }

    /// Dense coordinates over the basis `1_{γ}` in declaration order.
    pub fn to_dense(&self, dimension: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); dimension];
        for (x, c) in self.terms() {
            v[x.index()] = c.clone();
        }
        v
    }

    /// Restricts coefficients to `keep`.
    pub fn restrict(&self, keep: impl Fn(ElementId) -> bool) -> AlgebraElement {
        AlgebraElement {
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&x, _)| keep(x))
                .map(|(&x, c)| (x, c.clone()))
                .collect(),
        }
    }
}

/// A subset on which both `s` and `r` are injective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bisection {
    members: BTreeSet<ElementId>,
}

impl Bisection {
    pub fn new(g: &FiniteGroupoid, members: impl IntoIterator<Item = ElementId>) -> Result<Self> {
        let members: BTreeSet<ElementId> = members.into_iter().collect();
        let mut sources = BTreeSet::new();
        let mut ranges = BTreeSet::new();
        for &x in &members {
            if !sources.insert(g.source(x)) {
                return Err(Error::NotABisection(format!(
                    "two members share the source {}",
                    g.name(g.source(x))
                )));
            }
            if !ranges.insert(g.range(x)) {
                return Err(Error::NotABisection(format!(
                    "two members share the range {}",
                    g.name(g.range(x))
                )));
            }
        }
        Ok(Bisection { members })
    }

    /// Any set of units is a bisection.
    pub fn of_units(g: &FiniteGroupoid, units: impl IntoIterator<Item = ElementId>) -> Result<Self> {
        let members: BTreeSet<ElementId> = units.into_iter().collect();
        if let Some(&x) = members.iter().find(|&&x| !g.is_unit(x)) {
            return Err(Error::NotAUnit(g.name(x).to_string()));
        }
        Ok(Bisection { members })
    }

    pub fn members(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `BD = {bd : b ∈ B, d ∈ D, s(b) = r(d)}`, again a bisection.
    pub fn product(&self, other: &Bisection, g: &FiniteGroupoid) -> Bisection {
        let members = self
            .members()
            .flat_map(|b| other.members().filter_map(move |d| g.compose(b, d)))
            .collect();
        Bisection { members }
    }

    pub fn inverse(&self, g: &FiniteGroupoid) -> Bisection {
        Bisection {
            members: self.members().map(|x| g.inverse(x)).collect(),
        }
    }
}

/// `A_K(G)` for a fixed groupoid and field.
#[derive(Clone, Copy, Debug)]
pub struct SteinbergAlgebra<'g> {
    groupoid: &'g FiniteGroupoid,
    field: FieldSpec,
}

impl<'g> SteinbergAlgebra<'g> {
    pub fn new(groupoid: &'g FiniteGroupoid, field: FieldSpec) -> Self {
        SteinbergAlgebra { groupoid, field }
    }

    pub fn groupoid(&self) -> &'g FiniteGroupoid {
        self.groupoid
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    /// Vector-space dimension `|G|`.
    pub fn dimension(&self) -> usize {
        self.groupoid.len()
    }

    pub fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.field)
    }

    /// The basis element `1_{γ}`.
    pub fn basis(&self, x: ElementId) -> AlgebraElement {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(x, self.field.one());
        AlgebraElement {
            field: self.field,
            coeffs,
        }
    }

    pub fn basis_elements(&self) -> impl Iterator<Item = AlgebraElement> + '_ {
        self.groupoid.elements().map(|x| self.basis(x))
    }

    pub fn scalar(&self, n: i64) -> Scalar {
        self.field.from_integer(n)
    }

    /// `1_B`: coefficient 1 on each member of the bisection.
    pub fn indicator(&self, b: &Bisection) -> AlgebraElement {
        AlgebraElement {
            field: self.field,
            coeffs: b.members().map(|x| (x, self.field.one())).collect(),
        }
    }

    /// Indicator of a subset, checked to be a bisection.
    pub fn indicator_of(&self, members: impl IntoIterator<Item = ElementId>) -> Result<AlgebraElement> {
        Ok(self.indicator(&Bisection::new(self.groupoid, members)?))
    }

    /// `Σ_u 1_{u}`, the identity of the (finite-dimensional) algebra.
    pub fn identity(&self) -> AlgebraElement {
        let units = self.groupoid.units().iter().copied();
        self.indicator(&Bisection::of_units(self.groupoid, units).expect("units"))
    }

    pub fn from_dense(&self, v: &[Scalar]) -> AlgebraElement {
        assert_eq!(v.len(), self.dimension(), "dense vector has wrong length");
        AlgebraElement::from_terms(
            self.field,
            v.iter().enumerate().map(|(i, c)| (self.groupoid.element(i), c.clone())),
        )
        .expect("dense vector over the algebra field")
    }

    fn check(&self, f: &AlgebraElement) -> Result<()> {
        if f.field != self.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: f.field,
            });
        }
        Ok(())
    }

    /// `(fg)(x) = Σ_{ab=x} f(a)g(b)`.
    pub fn convolve(&self, f: &AlgebraElement, g: &AlgebraElement) -> Result<AlgebraElement> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.mul(f, g))
    }

    /// Convolution without the field check.
    pub(crate) fn mul(&self, f: &AlgebraElement, g: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.field);
        for (a, fa) in f.terms() {
            for (b, gb) in g.terms() {
                if let Some(ab) = self.groupoid.compose(a, b) {
                    out.add_term(ab, &(fa * gb));
                }
            }
        }
        out
    }

    /// Product of a list of elements, left to right.
    pub fn product(&self, factors: &[&AlgebraElement]) -> Result<AlgebraElement> {
        let (first, rest) = factors.split_first().ok_or(Error::EmptyList)?;
        self.check(first)?;
        let mut acc = (*first).clone();
        for f in rest {
            acc = self.convolve(&acc, f)?;
        }
        Ok(acc)
    }

    /// `f*`: re-keys coefficients by `γ ↦ γ⁻¹`.
    pub fn involution(&self, f: &AlgebraElement) -> AlgebraElement {
        AlgebraElement {
            field: f.field,
            coeffs: f.terms().map(|(x, c)| (self.groupoid.inverse(x), c.clone())).collect(),
        }
    }

    /// The units touched by the supports, as a set `U`.
    pub fn local_unit_set(&self, fs: &[AlgebraElement]) -> Result<BTreeSet<ElementId>> {
        if fs.is_empty() {
            return Err(Error::EmptyList);
        }
        let g = self.groupoid;
        Ok(fs
            .iter()
            .flat_map(|f| f.support().flat_map(|x| [g.source(x), g.range(x)]))
            .collect())
    }

    /// `1_U` with `U` the sources and ranges of all support elements; a
    /// two-sided identity for every listed element.
    pub fn local_unit_for(&self, fs: &[AlgebraElement]) -> Result<AlgebraElement> {
        for f in fs {
            self.check(f)?;
        }
        let units = self.local_unit_set(fs)?;
        Ok(self.indicator(&Bisection::of_units(self.groupoid, units)?))
    }

    /// `1_{x} f 1_{x}`.
    pub fn corner(&self, f: &AlgebraElement, x: ElementId) -> Result<AlgebraElement> {
        self.check(f)?;
        if !self.groupoid.is_unit(x) {
            return Err(Error::NotAUnit(self.groupoid.name(x).to_string()));
        }
        let ux = self.basis(x);
        Ok(self.mul(&self.mul(&ux, f), &ux))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic_groupoid, pair_groupoid, random_groupoid};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_element(alg: &SteinbergAlgebra<'_>, seeds: &[i64]) -> AlgebraElement {
        let n = alg.dimension();
        let terms = seeds
            .iter()
            .enumerate()
            .map(|(i, &c)| (alg.groupoid().element(i % n), alg.scalar(c)));
        AlgebraElement::from_terms(alg.field(), terms).unwrap()
    }

    #[test]
    fn unit_indicator_is_idempotent() {
        let g = pair_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let ux = alg.basis(g.units()[0]);
        assert_eq!(alg.convolve(&ux, &ux).unwrap(), ux);
    }

    #[test]
    fn group_sum_squares_to_n_times_itself() {
        let g = cyclic_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        // {e, g} is not a bisection; f is a sum of two singleton indicators.
        assert!(alg.indicator_of(g.elements()).is_err());
        let f = alg.basis(g.element(0)).add(&alg.basis(g.element(1))).unwrap();
        let f2 = alg.convolve(&f, &f).unwrap();
        assert_eq!(f2, f.scale(&alg.scalar(2)));
    }

    #[test]
    fn indicator_examples() {
        let g = pair_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Prime(3));
        let x = g.units()[0];
        assert_eq!(alg.indicator_of([x]).unwrap(), alg.basis(x));
        let id = alg.identity();
        assert_eq!(id.len(), 2);
        for b in alg.basis_elements() {
            assert_eq!(alg.convolve(&id, &b).unwrap(), b);
            assert_eq!(alg.convolve(&b, &id).unwrap(), b);
        }
        // g1_2 and u2 share the source u2.
        let a = g.id("g1_2").unwrap();
        let u2 = g.unit("u2").unwrap();
        assert!(matches!(alg.indicator_of([a, u2]), Err(Error::NotABisection(_))));
    }

    #[test]
    fn field_mismatch_rejected() {
        let g = pair_groupoid(1);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let other = AlgebraElement::zero(FieldSpec::Prime(2));
        assert!(matches!(
            alg.convolve(&alg.identity(), &other),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn involution_reverses_products_on_pair_groupoid() {
        let g = pair_groupoid(2);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let a = g.id("g1_2").unwrap();
        let b = g.id("g2_1").unwrap();
        assert_eq!(alg.involution(&alg.basis(a)), alg.basis(b));
        let ab = alg.convolve(&alg.basis(a), &alg.basis(b)).unwrap();
        // Direct computation: g1_2 · g2_1 = u1, and u1* = u1 = g2_1⁻¹ · g1_2⁻¹.
        assert_eq!(ab, alg.basis(g.unit("u1").unwrap()));
        let rhs = alg
            .convolve(&alg.involution(&alg.basis(b)), &alg.involution(&alg.basis(a)))
            .unwrap();
        assert_eq!(alg.involution(&ab), rhs);
    }

    #[test]
    fn local_units() {
        let g = pair_groupoid(3);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let a = g.id("g1_2").unwrap();
        let f = alg.basis(a);
        let u = alg.local_unit_for(std::slice::from_ref(&f)).unwrap();
        let names: Vec<_> = u.support().map(|x| g.name(x)).collect();
        assert_eq!(names, ["u1", "u2"]);
        assert_eq!(alg.product(&[&u, &f, &u]).unwrap(), f);
        assert!(matches!(alg.local_unit_for(&[]), Err(Error::EmptyList)));

        let c = alg.basis(g.unit("u3").unwrap());
        let u = alg.local_unit_for(&[f.clone(), c.clone()]).unwrap();
        assert_eq!(u.len(), 3);
    }

    #[test]
    fn corner_examples() {
        let z2 = cyclic_groupoid(2);
        let alg = SteinbergAlgebra::new(&z2, FieldSpec::Prime(5));
        let gen = alg.basis(z2.id("g").unwrap());
        assert_eq!(alg.corner(&gen, z2.units()[0]).unwrap(), gen);

        let p = pair_groupoid(2);
        let alg = SteinbergAlgebra::new(&p, FieldSpec::Rationals);
        let u1 = p.unit("u1").unwrap();
        let f = alg.basis(p.id("g2_1").unwrap());
        assert!(alg.corner(&f, u1).unwrap().is_zero());
        let f = random_element(&alg, &[3, -1, 4, 1]);
        assert_eq!(alg.corner(&f, u1).unwrap(), alg.basis(u1).scale(&f.coeff(u1)));
    }

    #[test]
    fn corner_is_restriction_to_isotropy() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let g = random_groupoid(&mut rng, 16);
            let alg = SteinbergAlgebra::new(&g, FieldSpec::Prime(7));
            let seeds: Vec<i64> = (0..g.len() as i64).map(|i| i * 3 + 1).collect();
            let f = random_element(&alg, &seeds);
            for &x in g.units() {
                let restricted = f.restrict(|y| g.source(y) == x && g.range(y) == x);
                assert_eq!(alg.corner(&f, x).unwrap(), restricted);
            }
        }
    }

    #[test]
    fn isotropy_corner_is_group_algebra() {
        // Basis products inside xGx follow the group law.
        let g = crate::constructions::transitive(2, &crate::constructions::FiniteGroup::dihedral(3));
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
        let x = g.units()[1];
        let iso = g.isotropy(x).unwrap();
        for &a in &iso.members {
            for &b in &iso.members {
                let prod = alg.convolve(&alg.basis(a), &alg.basis(b)).unwrap();
                assert_eq!(prod, alg.basis(g.compose(a, b).unwrap()));
            }
        }
    }

    fn groupoid_and_coeffs() -> impl Strategy<Value = (u64, Vec<i64>, Vec<i64>, Vec<i64>)> {
        (
            any::<u64>(),
            prop::collection::vec(-5i64..5, 0..10),
            prop::collection::vec(-5i64..5, 0..10),
            prop::collection::vec(-5i64..5, 0..10),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn star_algebra_laws((seed, a, b, c) in groupoid_and_coeffs()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_groupoid(&mut rng, 12);
            for field in [FieldSpec::Rationals, FieldSpec::Prime(3)] {
                let alg = SteinbergAlgebra::new(&g, field);
                let (f, h, k) = (random_element(&alg, &a), random_element(&alg, &b), random_element(&alg, &c));
                let fh = alg.convolve(&f, &h).unwrap();
                prop_assert_eq!(
                    alg.convolve(&fh, &k).unwrap(),
                    alg.convolve(&f, &alg.convolve(&h, &k).unwrap()).unwrap()
                );
                prop_assert_eq!(
                    alg.involution(&fh),
                    alg.convolve(&alg.involution(&h), &alg.involution(&f)).unwrap()
                );
                prop_assert_eq!(
                    alg.involution(&f.add(&h).unwrap()),
                    alg.involution(&f).add(&alg.involution(&h)).unwrap()
                );
                prop_assert_eq!(alg.involution(&alg.involution(&f)), f.clone());
                let u = alg.local_unit_for(&[f.clone(), h.clone()]).unwrap();
                prop_assert_eq!(alg.convolve(&u, &f).unwrap(), f.clone());
                prop_assert_eq!(alg.convolve(&f, &u).unwrap(), f.clone());
                prop_assert_eq!(alg.convolve(&h, &u).unwrap(), h.clone());
            }
        }

        #[test]
        fn unit_subset_indicators_multiply_by_intersection(seed in any::<u64>(), mask_b in any::<u32>(), mask_c in any::<u32>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_groupoid(&mut rng, 20);
            let alg = SteinbergAlgebra::new(&g, FieldSpec::Rationals);
            let pick = |mask: u32| g.units().iter().enumerate()
                .filter(move |(i, _)| mask >> (i % 32) & 1 == 1).map(|(_, &u)| u).collect::<BTreeSet<_>>();
            let (b, c) = (pick(mask_b), pick(mask_c));
            let inter: Vec<_> = b.intersection(&c).copied().collect();
            let lhs = alg.convolve(
                &alg.indicator(&Bisection::of_units(&g, b).unwrap()),
                &alg.indicator(&Bisection::of_units(&g, c).unwrap()),
            ).unwrap();
            prop_assert_eq!(lhs, alg.indicator(&Bisection::of_units(&g, inter).unwrap()));
        }
    }
}
