//! Brute-force ground truth over small prime fields.
//!
//! Everything here enumerates the whole algebra `GF(p)^{|G|}` and works
//! with dense `u32` vectors and the raw composition table; it shares no code
//! with the sparse convolution used by the socle engine. Enumeration runs in
//! parallel; results are merged by enumeration index so output does not
//! depend on scheduling.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::algebra::{AlgebraElement, SteinbergAlgebra};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::groupoid::FiniteGroupoid;
use crate::ideal::LeftIdeal;
use crate::limits::check_enumeration;
use crate::linalg::modp::{self, Basis};
use crate::linalg::Subspace;

/// `A_{GF(p)}(G)` with dense vectors indexed by declaration order.
#[derive(Clone, Debug)]
pub struct DenseAlgebra {
    p: u32,
    n: usize,
    /// For each `γ`: pairs `(δ, γδ)` over composable `δ`.
    left: Vec<Vec<(usize, usize)>>,
    /// For each `γ`: pairs `(δ, δγ)` over composable `δ`.
    right: Vec<Vec<(usize, usize)>>,
    /// All composable pairs `(a, b, ab)`.
    pairs: Vec<(usize, usize, usize)>,
}

impl DenseAlgebra {
    pub fn new(g: &FiniteGroupoid, p: u32) -> Self {
        let n = g.len();
        let mut left = vec![Vec::new(); n];
        let mut right = vec![Vec::new(); n];
        let mut pairs = Vec::new();
        for a in g.elements() {
            for b in g.elements() {
                if let Some(ab) = g.compose(a, b) {
                    left[a.index()].push((b.index(), ab.index()));
                    right[b.index()].push((a.index(), ab.index()));
                    pairs.push((a.index(), b.index(), ab.index()));
                }
            }
        }
        DenseAlgebra {
            p,
            n,
            left,
            right,
            pairs,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    /// `1_γ · v`. Distinct `δ` give distinct `γδ`, so entries are copied.
    pub fn left_basis_mul(&self, gamma: usize, v: &[u32]) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for &(d, gd) in &self.left[gamma] {
            out[gd] = v[d];
        }
        out
    }

    /// `v · 1_γ`.
    pub fn right_basis_mul(&self, v: &[u32], gamma: usize) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for &(d, dg) in &self.right[gamma] {
            out[dg] = v[d];
        }
        out
    }

    pub fn mul(&self, u: &[u32], v: &[u32]) -> Vec<u32> {
        let p = u64::from(self.p);
        let mut out = vec![0u64; self.n];
        for &(a, b, ab) in &self.pairs {
            if u[a] != 0 && v[b] != 0 {
                out[ab] = (out[ab] + u64::from(u[a]) * u64::from(v[b])) % p;
            }
        }
        out.into_iter().map(|x| x as u32).collect()
    }

    /// `A·v`; contains `v` because `A` has an identity.
    pub fn cyclic_left(&self, v: &[u32]) -> Basis {
        let mut b = Basis::new(self.p, self.n);
        b.insert(v.to_vec());
        for gamma in 0..self.n {
            b.insert(self.left_basis_mul(gamma, v));
        }
        b
    }

    /// `v·A`.
    pub fn cyclic_right(&self, v: &[u32]) -> Basis {
        let mut b = Basis::new(self.p, self.n);
        b.insert(v.to_vec());
        for gamma in 0..self.n {
            b.insert(self.right_basis_mul(v, gamma));
        }
        b
    }

    /// Left ideal generated by sparse `(index, residue)` vectors.
    pub fn left_closure(&self, generators: &[Vec<(usize, u32)>]) -> Basis {
        let mut b = Basis::new(self.p, self.n);
        for g in generators {
            let mut v = vec![0; self.n];
            for &(i, c) in g {
                v[i] = c;
            }
            b = b.sum(&self.cyclic_left(&v));
        }
        b
    }

    /// Closed under left and right multiplication by every `1_γ`?
    pub fn is_two_sided(&self, space: &Basis) -> bool {
        space.rows().iter().all(|v| {
            (0..self.n)
                .all(|g| space.contains(&self.left_basis_mul(g, v)) && space.contains(&self.right_basis_mul(v, g)))
        })
    }
}

fn prime_of(field: FieldSpec) -> Result<u32> {
    match field {
        FieldSpec::Prime(p) => Ok(p),
        FieldSpec::Rationals => Err(Error::Precondition(
            "the oracle enumerates a finite field; use f<p>".into(),
        )),
    }
}

fn to_element(g: &FiniteGroupoid, field: FieldSpec, v: &[u32]) -> AlgebraElement {
    AlgebraElement::from_terms(
        field,
        v.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (g.element(i), field.from_u64(u64::from(c)))),
    )
    .expect("residues in the field")
}

fn to_subspace(field: FieldSpec, b: &Basis) -> Subspace {
    Subspace::span(
        field,
        b.ambient(),
        b.rows()
            .iter()
            .map(|r| r.iter().map(|&c| field.from_u64(u64::from(c))).collect()),
    )
}

/// A minimal one-sided ideal found by enumeration, with the first
/// enumerated vector generating it.
#[derive(Clone, Debug)]
pub struct OracleIdeal {
    pub generator: AlgebraElement,
    pub ideal: LeftIdeal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Hand {
    Left,
    Right,
}

/// Every cyclic ideal `A·a` (or `a·A`), keyed by canonical basis, with the
/// least enumeration index that produced it.
fn cyclic_ideals(dense: &DenseAlgebra, count: u64, hand: Hand) -> Vec<(Basis, u64)> {
    let n = dense.dimension();
    let p = dense.modulus();
    let merged = (1..count)
        .into_par_iter()
        .fold(HashMap::<Basis, u64>::new, |mut acc, i| {
            let v = modp::vector_at(p, n, i);
            let key = match hand {
                Hand::Left => dense.cyclic_left(&v),
                Hand::Right => dense.cyclic_right(&v),
            };
            acc.entry(key).and_modify(|j| *j = (*j).min(i)).or_insert(i);
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, i) in b {
                a.entry(k).and_modify(|j| *j = (*j).min(i)).or_insert(i);
            }
            a
        });
    let mut out: Vec<(Basis, u64)> = merged.into_iter().collect();
    out.sort_by_key(|(_, i)| *i);
    out
}

fn minimal_ideals(g: &FiniteGroupoid, field: FieldSpec, hand: Hand) -> Result<Vec<OracleIdeal>> {
    let p = prime_of(field)?;
    let count = check_enumeration(u64::from(p), g.len())?;
    let dense = DenseAlgebra::new(g, p);
    let ideals = cyclic_ideals(&dense, count, hand);
    let minimal: Vec<&(Basis, u64)> = ideals
        .iter()
        .filter(|(b, _)| !ideals.iter().any(|(c, _)| c.dim() < b.dim() && c.is_subspace_of(b)))
        .collect();
    Ok(minimal
        .into_iter()
        .map(|(b, i)| {
            let v = modp::vector_at(p, g.len(), *i);
            let generator = to_element(g, field, &v);
            OracleIdeal {
                ideal: LeftIdeal::from_parts(vec![generator.clone()], to_subspace(field, b)),
                generator,
            }
        })
        .collect())
}

/// All minimal left ideals, in order of their least generating vector.
pub fn oracle_minimal_ideals(g: &FiniteGroupoid, field: FieldSpec) -> Result<Vec<OracleIdeal>> {
    minimal_ideals(g, field, Hand::Left)
}

/// All minimal right ideals (stored in the same ideal type).
pub fn oracle_minimal_right_ideals(g: &FiniteGroupoid, field: FieldSpec) -> Result<Vec<OracleIdeal>> {
    minimal_ideals(g, field, Hand::Right)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMethod {
    /// Every nonzero vector of the algebra was enumerated.
    Exhaustive,
    /// Minimal cyclic ideals `A·1_γ`, each checked by enumerating its own
    /// vectors, were found to sum to the whole algebra.
    Witnessed,
}

impl OracleMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            OracleMethod::Exhaustive => "exhaustive",
            OracleMethod::Witnessed => "witnessed",
        }
    }
}

#[derive(Clone, Debug)]
pub struct OracleSocle {
    pub method: OracleMethod,
    pub minimal_ideals: Vec<OracleIdeal>,
    pub socle: Subspace,
}

impl OracleSocle {
    pub fn dimension(&self) -> usize {
        self.socle.dim()
    }
}

fn socle_of(g: &FiniteGroupoid, field: FieldSpec, hand: Hand) -> Result<OracleSocle> {
    let p = prime_of(field)?;
    let minimal = minimal_ideals(g, field, hand)?;
    let mut sum = Basis::new(p, g.len());
    for m in &minimal {
        sum = sum.sum(&m.ideal.basis().to_modp().expect("prime field"));
    }
    let dense = DenseAlgebra::new(g, p);
    if !dense.is_two_sided(&sum) {
        return Err(Error::Consistency("sum of minimal ideals is not two-sided".into()));
    }
    if sum.dim() == 0 {
        return Err(Error::Consistency(
            "finite-dimensional nonzero algebra without minimal ideals".into(),
        ));
    }
    Ok(OracleSocle {
        method: OracleMethod::Exhaustive,
        minimal_ideals: minimal,
        socle: to_subspace(field, &sum),
    })
}

/// Sum of all minimal left ideals, checked to be a two-sided ideal.
pub fn oracle_socle(g: &FiniteGroupoid, field: FieldSpec) -> Result<OracleSocle> {
    socle_of(g, field, Hand::Left)
}

/// Sum of all minimal right ideals.
pub fn oracle_right_socle(g: &FiniteGroupoid, field: FieldSpec) -> Result<OracleSocle> {
    socle_of(g, field, Hand::Right)
}

/// Every nonzero vector of `space` generates all of it.
fn is_minimal_cyclic(dense: &DenseAlgebra, space: &Basis) -> Result<bool> {
    let count = check_enumeration(u64::from(dense.modulus()), space.dim())?;
    Ok((1..count)
        .into_par_iter()
        .all(|i| dense.cyclic_left(&space.combination(i)).dim() == space.dim()))
}

/// Socle of an algebra too large to enumerate, provided it is the whole
/// algebra: collects the cyclic ideals `A·1_γ` that pass an exhaustive
/// minimality check and succeeds iff they sum to `A`. Otherwise the socle
/// cannot be pinned down without full enumeration and the size cap error
/// is returned.
pub fn oracle_socle_witnessed(g: &FiniteGroupoid, field: FieldSpec) -> Result<OracleSocle> {
    let p = prime_of(field)?;
    let n = g.len();
    let dense = DenseAlgebra::new(g, p);
    let mut seen = std::collections::BTreeSet::new();
    let mut minimal = Vec::new();
    let mut sum = Basis::new(p, n);
    for gamma in 0..n {
        let mut v = vec![0; n];
        v[gamma] = 1;
        let ideal = dense.cyclic_left(&v);
        if !seen.insert(ideal.clone()) {
            continue;
        }
        match is_minimal_cyclic(&dense, &ideal) {
            Ok(true) => {
                sum = sum.sum(&ideal);
                let generator = to_element(g, field, &v);
                minimal.push(OracleIdeal {
                    ideal: LeftIdeal::from_parts(vec![generator.clone()], to_subspace(field, &ideal)),
                    generator,
                });
            }
            Ok(false) | Err(Error::SizeCap { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    if sum.dim() < n {
        return Err(check_enumeration(u64::from(p), n)
            .err()
            .unwrap_or_else(|| Error::Precondition("the algebra is small enough for exhaustive enumeration".into())));
    }
    Ok(OracleSocle {
        method: OracleMethod::Witnessed,
        minimal_ideals: minimal,
        socle: to_subspace(field, &sum),
    })
}

/// [`oracle_socle`], falling back to [`oracle_socle_witnessed`] past the cap.
pub fn oracle_socle_any(g: &FiniteGroupoid, field: FieldSpec) -> Result<OracleSocle> {
    match oracle_socle(g, field) {
        Err(Error::SizeCap { .. }) => oracle_socle_witnessed(g, field),
        other => other,
    }
}

#[derive(Clone, Debug)]
pub struct SemiprimeVerdict {
    pub semiprime: bool,
    /// The first enumerated nonzero `a` with `a·A·a = 0`.
    pub witness: Option<AlgebraElement>,
}

/// Semiprime iff no nonzero `a` has `a·1_γ·a = 0` for every `γ`.
pub fn oracle_is_semiprime(g: &FiniteGroupoid, field: FieldSpec) -> Result<SemiprimeVerdict> {
    let p = prime_of(field)?;
    let n = g.len();
    let count = check_enumeration(u64::from(p), n)?;
    let dense = DenseAlgebra::new(g, p);
    let witness = (1..count).into_par_iter().find_first(|&i| {
        let v = modp::vector_at(p, n, i);
        (0..n).all(|gamma| dense.mul(&dense.right_basis_mul(&v, gamma), &v).iter().all(|&c| c == 0))
    });
    Ok(SemiprimeVerdict {
        semiprime: witness.is_none(),
        witness: witness.map(|i| to_element(g, field, &modp::vector_at(p, n, i))),
    })
}

/// Sparse-path helper: the oracle socle as elements of a [`SteinbergAlgebra`].
pub fn socle_elements(alg: &SteinbergAlgebra<'_>, socle: &OracleSocle) -> Vec<AlgebraElement> {
    socle.socle.basis().iter().map(|v| alg.from_dense(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cyclic_groupoid, pair_groupoid};

    #[test]
    fn dense_product_matches_sparse_convolution() {
        let g = crate::constructions::transitive(2, &crate::constructions::FiniteGroup::cyclic(2));
        let dense = DenseAlgebra::new(&g, 5);
        let alg = SteinbergAlgebra::new(&g, FieldSpec::Prime(5));
        let u: Vec<u32> = (0..g.len() as u32).map(|i| (i * 3 + 1) % 5).collect();
        let v: Vec<u32> = (0..g.len() as u32).map(|i| (i * i + 2) % 5).collect();
        let (fu, fv) = (to_element(&g, alg.field(), &u), to_element(&g, alg.field(), &v));
        let sparse = alg.convolve(&fu, &fv).unwrap();
        assert_eq!(to_element(&g, alg.field(), &dense.mul(&u, &v)), sparse);
    }

    #[test]
    fn pair2_over_gf2() {
        let g = pair_groupoid(2);
        let f2 = FieldSpec::Prime(2);
        let ideals = oracle_minimal_ideals(&g, f2).unwrap();
        // M₂(GF(2)) has three minimal left ideals (one per line in GF(2)²).
        assert_eq!(ideals.len(), 3);
        assert!(ideals.iter().all(|m| m.ideal.dimension() == 2));
        assert_eq!(oracle_socle(&g, f2).unwrap().dimension(), 4);
    }

    #[test]
    fn z2_over_gf2() {
        let g = cyclic_groupoid(2);
        let f2 = FieldSpec::Prime(2);
        let ideals = oracle_minimal_ideals(&g, f2).unwrap();
        assert_eq!(ideals.len(), 1);
        let alg = SteinbergAlgebra::new(&g, f2);
        let sum = alg.basis(g.element(0)).add(&alg.basis(g.element(1))).unwrap();
        assert_eq!(ideals[0].generator, sum);
        assert_eq!(oracle_socle(&g, f2).unwrap().dimension(), 1);
        let sp = oracle_is_semiprime(&g, f2).unwrap();
        assert!(!sp.semiprime);
        assert_eq!(sp.witness, Some(sum));
    }

    #[test]
    fn z2_over_gf3_is_semisimple() {
        let g = cyclic_groupoid(2);
        let f3 = FieldSpec::Prime(3);
        let ideals = oracle_minimal_ideals(&g, f3).unwrap();
        assert_eq!(ideals.len(), 2);
        let alg = SteinbergAlgebra::new(&g, f3);
        let (e, s) = (alg.basis(g.element(0)), alg.basis(g.element(1)));
        // ½(1_e ± 1_g) = 2(1_e ± 1_g) over GF(3).
        let plus = e.add(&s).unwrap().scale(&alg.scalar(2));
        let minus = e.sub(&s).unwrap().scale(&alg.scalar(2));
        for idem in [&plus, &minus] {
            assert_eq!(alg.convolve(idem, idem).unwrap(), *idem);
            assert!(ideals.iter().any(|m| m.ideal.contains(&alg, idem)));
        }
        assert_eq!(oracle_socle(&g, f3).unwrap().dimension(), 2);
        assert!(oracle_is_semiprime(&g, f3).unwrap().semiprime);
    }

    #[test]
    fn principal_groupoids_are_semiprime() {
        for p in [2, 3] {
            let v = oracle_is_semiprime(&pair_groupoid(2), FieldSpec::Prime(p)).unwrap();
            assert!(v.semiprime);
        }
    }

    #[test]
    fn witnessed_matches_exhaustive() {
        for k in 1..=3 {
            let g = pair_groupoid(k);
            for p in [2, 3] {
                let f = FieldSpec::Prime(p);
                let w = oracle_socle_witnessed(&g, f).unwrap();
                assert_eq!(w.method, OracleMethod::Witnessed);
                assert_eq!(w.socle, oracle_socle(&g, f).unwrap().socle);
            }
        }
    }

    #[test]
    fn witnessed_beyond_the_cap() {
        let g = pair_groupoid(5);
        let f = FieldSpec::Prime(2);
        assert!(matches!(oracle_socle(&g, f), Err(Error::SizeCap { .. })));
        let w = oracle_socle_any(&g, f).unwrap();
        assert_eq!(w.dimension(), 25);
        assert_eq!(w.minimal_ideals.len(), 5);
    }

    #[test]
    fn witnessed_is_inconclusive_without_full_socle() {
        // Z/2 over GF(2): the socle is proper, so only enumeration decides it.
        let g = cyclic_groupoid(2);
        assert!(oracle_socle_witnessed(&g, FieldSpec::Prime(2)).is_err());
    }

    #[test]
    fn rationals_refused() {
        assert!(matches!(
            oracle_socle(&pair_groupoid(1), FieldSpec::Rationals),
            Err(Error::Precondition(_))
        ));
    }
}
