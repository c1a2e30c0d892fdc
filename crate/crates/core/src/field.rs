//! Exact ground fields: the rationals and prime fields GF(p).
//!
//! A [`FieldSpec`] names the field; a [`Scalar`] is a canonical element of
//! it. Residues carry their modulus so scalars are self-describing, and
//! arithmetic between scalars of different fields is a programming error
//! (it panics). Code that accepts user data checks field agreement first.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest admissible prime modulus (exclusive).
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// GF(p). Fails unless `p` is a prime below 2^31.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_PRIME || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => u64::from(*p),
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::Prime(p) => Some(u64::from(*p)),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    pub fn zero(&self) -> Scalar {
        self.from_integer(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_integer(1)
    }

    pub fn from_integer(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let p = i64::from(*p);
                Scalar::Residue {
                    value: n.rem_euclid(p) as u32,
                    modulus: p as u32,
                }
            }
        }
    }

    /// The residue `value mod p`; for the rationals, the integer `value`.
    pub fn from_u64(&self, value: u64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(value))),
            FieldSpec::Prime(p) => Scalar::Residue {
                value: (value % u64::from(*p)) as u32,
                modulus: *p,
            },
        }
    }

    /// A reduced fraction `num/den`. Over GF(p) this is `num · den⁻¹`.
    pub fn fraction(&self, num: i64, den: i64) -> Result<Scalar> {
        let den = self.from_integer(den);
        self.from_integer(num).div(&den)
    }

    /// Does `s` live in this field?
    pub fn owns(&self, s: &Scalar) -> bool {
        s.field() == *self
    }

    /// Parses a scalar in the textual syntax: `"num/den"` (or a bare
    /// integer) for the rationals, `"k mod p"` (or a bare integer) for GF(p).
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::Parse(format!("invalid scalar {text:?} for field {self}"));
        match self {
            FieldSpec::Rationals => {
                let (num, den) = match text.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (text, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(bad());
                }
                Ok(Scalar::Rational(BigRational::new(num, den)))
            }
            FieldSpec::Prime(p) => {
                let value = match text.split_once("mod") {
                    Some((k, m)) => {
                        let m: u32 = m.trim().parse().map_err(|_| bad())?;
                        if m != *p {
                            return Err(Error::FieldMismatch {
                                expected: *self,
                                found: FieldSpec::Prime(m),
                            });
                        }
                        k.trim()
                    }
                    None => text,
                };
                let k: i64 = value.parse().map_err(|_| bad())?;
                Ok(self.from_integer(k))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "f{p}"),
        }
    }
}

/// Parses the field designator: `q` for the rationals, `f<p>` for GF(p).
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "q" || s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix('f')
            .or_else(|| s.strip_prefix('F'))
            .ok_or_else(|| Error::Parse(format!("unknown field designator {s:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("unknown field designator {s:?}")))?;
        FieldSpec::prime(p)
    }
}

/// Deterministic trial division; adequate for word-size moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element in canonical form.
///
/// Rationals are gcd-reduced with a positive denominator (guaranteed by
/// `BigRational`); residues satisfy `0 <= value < modulus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Residue { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rationals,
            Scalar::Residue { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Residue { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Residue { value, .. } => *value == 1,
        }
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: mod_inverse(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    /// The residue as an integer in `0..p`, if this is a prime-field scalar.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Residue { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    /// Reduces a rational modulo `p`. Fails when `p` divides the denominator.
    pub fn reduce_mod(&self, p: u32) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) => {
                let pb = BigInt::from(p);
                let num = q.numer().mod_floor(&pb).to_u32()?;
                let den = q.denom().mod_floor(&pb).to_u32()?;
                if den == 0 {
                    return None;
                }
                let value = (u64::from(num) * u64::from(mod_inverse(den, p)) % u64::from(p)) as u32;
                Some(Scalar::Residue { value, modulus: p })
            }
            Scalar::Residue { modulus, .. } if *modulus == p => Some(self.clone()),
            Scalar::Residue { .. } => None,
        }
    }

    /// Denominator of a rational scalar (1 for residues).
    pub fn denominator(&self) -> BigInt {
        match self {
            Scalar::Rational(q) => q.denom().clone(),
            Scalar::Residue { .. } => BigInt::one(),
        }
    }

    fn expect_same(&self, rhs: &Scalar) {
        assert_eq!(self.field(), rhs.field(), "scalar arithmetic across different fields");
    }
}

fn mod_inverse(value: u32, modulus: u32) -> u32 {
    // Extended Euclid; modulus is prime and value nonzero.
    let (mut r0, mut r1) = (i64::from(modulus), i64::from(value));
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(i64::from(modulus)) as u32
}

/// `"num/den"` for rationals (always with a denominator), `"k mod p"` for residues.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Scalar::Residue { value, modulus } => write!(f, "{value} mod {modulus}"),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        self.expect_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: ((u64::from(*a) + u64::from(*b)) % u64::from(*modulus)) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;

    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        self.expect_same(rhs);
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Residue { value: a, modulus }, Scalar::Residue { value: b, .. }) => Scalar::Residue {
                value: (u64::from(*a) * u64::from(*b) % u64::from(*modulus)) as u32,
                modulus: *modulus,
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Residue { value, modulus } => Scalar::Residue {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for Scalar {
    type Output = Scalar;

    fn neg(self) -> Scalar {
        -&self
    }
}
