//! Exact linear algebra: subspaces in reduced row-echelon form.
//!
//! [`Subspace`] works over any [`FieldSpec`] with [`Scalar`] entries. The
//! reduced row-echelon form is unique, so two subspaces are equal iff their
//! stored rows are. [`modp`] is a dense `u32` variant for prime fields, used
//! where exhaustive enumeration needs speed.

use crate::field::{FieldSpec, Scalar};

/// A subspace of `K^n` kept in reduced row-echelon form.
///
/// Rows are sorted by pivot column; every pivot entry is 1 and every other
/// entry in a pivot column is 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn span(field: FieldSpec, ambient: usize, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> Self {
        let mut s = Subspace::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// The canonical basis (RREF rows).
    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its projection along the pivot columns; zero iff `v` is in the span.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient, "vector length differs from ambient dimension");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x = &*x - &(&c * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(v);
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[lead].inv().expect("nonzero pivot");
        for x in v.iter_mut().skip(lead) {
            *x = &*x * &inv;
        }
        for row in &mut self.rows {
            if row[lead].is_zero() {
                continue;
            }
            let c = row[lead].clone();
            for (r, x) in row.iter_mut().zip(&v).skip(lead) {
                if !x.is_zero() {
                    *r = &*r - &(&c * x);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.rows.insert(at, v);
        self.pivots.insert(at, lead);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v.clone());
        }
        s
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|v| other.contains(v))
    }

    pub fn intersection_dim(&self, other: &Subspace) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    /// Rank of a list of vectors.
    pub fn rank_of(field: FieldSpec, ambient: usize, vectors: impl IntoIterator<Item = Vec<Scalar>>) -> usize {
        Subspace::span(field, ambient, vectors).dim()
    }

    /// The same subspace with residues as plain integers, for prime fields.
    pub fn to_modp(&self) -> Option<modp::Basis> {
        let FieldSpec::Prime(p) = self.field else {
            return None;
        };
        let mut b = modp::Basis::new(p, self.ambient);
        for row in &self.rows {
            b.insert(row.iter().map(|x| x.residue().expect("prime field")).collect());
        }
        Some(b)
    }
}

/// Dense linear algebra over GF(p) with `u32` residues.
pub mod modp {
    /// A subspace of `GF(p)^n` in reduced row-echelon form.
    #[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
    pub struct Basis {
        p: u32,
        ambient: usize,
        rows: Vec<Vec<u32>>,
        pivots: Vec<usize>,
    }

    pub fn inverse(a: u32, p: u32) -> u32 {
        // a^(p-2)
        let (mut base, mut exp, mut acc) = (u64::from(a), p - 2, 1u64);
        let p64 = u64::from(p);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p64;
            }
            base = base * base % p64;
            exp >>= 1;
        }
        acc as u32
    }

    impl Basis {
        pub fn new(p: u32, ambient: usize) -> Self {
            Basis {
                p,
                ambient,
                rows: Vec::new(),
                pivots: Vec::new(),
            }
        }

        pub fn span(p: u32, ambient: usize, vectors: impl IntoIterator<Item = Vec<u32>>) -> Self {
            let mut b = Basis::new(p, ambient);
            for v in vectors {
                b.insert(v);
            }
            b
        }

        pub fn modulus(&self) -> u32 {
            self.p
        }

        pub fn ambient(&self) -> usize {
            self.ambient
        }

        pub fn dim(&self) -> usize {
            self.rows.len()
        }

        pub fn rows(&self) -> &[Vec<u32>] {
            &self.rows
        }

        pub fn reduce(&self, mut v: Vec<u32>) -> Vec<u32> {
            let p = u64::from(self.p);
            for (row, &piv) in self.rows.iter().zip(&self.pivots) {
                let c = u64::from(v[piv]);
                if c == 0 {
                    continue;
                }
                let neg = p - c;
                for (x, &r) in v.iter_mut().zip(row).skip(piv) {
                    if r != 0 {
                        *x = ((u64::from(*x) + neg * u64::from(r)) % p) as u32;
                    }
                }
            }
            v
        }

        pub fn contains(&self, v: &[u32]) -> bool {
            self.reduce(v.to_vec()).iter().all(|&x| x == 0)
        }

        pub fn insert(&mut self, v: Vec<u32>) -> bool {
            let p = u64::from(self.p);
            let mut v = self.reduce(v);
            let Some(lead) = v.iter().position(|&x| x != 0) else {
                return false;
            };
            let inv = u64::from(inverse(v[lead], self.p));
            for x in v.iter_mut().skip(lead) {
                *x = (u64::from(*x) * inv % p) as u32;
            }
            for row in &mut self.rows {
                let c = u64::from(row[lead]);
                if c == 0 {
                    continue;
                }
                let neg = p - c;
                for (r, &x) in row.iter_mut().zip(&v).skip(lead) {
                    if x != 0 {
                        *r = ((u64::from(*r) + neg * u64::from(x)) % p) as u32;
                    }
                }
            }
            let at = self.pivots.partition_point(|&q| q < lead);
            self.rows.insert(at, v);
            self.pivots.insert(at, lead);
            true
        }

        pub fn is_subspace_of(&self, other: &Basis) -> bool {
            self.rows.iter().all(|v| other.contains(v))
        }

        pub fn sum(&self, other: &Basis) -> Basis {
            let mut s = self.clone();
            for v in &other.rows {
                s.insert(v.clone());
            }
            s
        }

        /// The vector `Σ cᵢ·rowᵢ` where `c` are the base-`p` digits of `index`.
        pub fn combination(&self, mut index: u64) -> Vec<u32> {
            let p = u64::from(self.p);
            let mut v = vec![0u64; self.ambient];
            for row in &self.rows {
                let c = index % p;
                index /= p;
                if c == 0 {
                    continue;
                }
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = (*x + c * u64::from(r)) % p;
                }
            }
            v.into_iter().map(|x| x as u32).collect()
        }
    }

    /// The `index`-th vector of `GF(p)^n` (base-`p` digits, least significant first).
    pub fn vector_at(p: u32, n: usize, mut index: u64) -> Vec<u32> {
        let p = u64::from(p);
        (0..n)
            .map(|_| {
                let d = index % p;
                index /= p;
                d as u32
            })
            .collect()
    }
}
