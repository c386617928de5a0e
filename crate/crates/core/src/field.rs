//! Scalar fields used for all exact computations.
//!
//! A [`Field`] is a small context value (cheap to clone) that knows how to
//! build and combine its elements. Two implementations exist: exact
//! rationals and prime fields `F_p` with a runtime modulus.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub trait Field: Clone + Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `a += b * c`
    fn add_mul_assign(&self, a: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        if self.is_zero(b) || self.is_zero(c) {
            return;
        }
        *a = self.add(a, &self.mul(b, c));
    }

    fn describe(&self) -> FieldSpec;
}

/// Serializable description of a field, as it appears in configuration files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FieldSpec {
    #[default]
    Rational,
    Prime {
        p: u64,
    },
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Prime { p } => write!(f, "fp:{p}"),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("rational") || s == "Q" {
            return Ok(FieldSpec::Rational);
        }
        if let Some(rest) = s.strip_prefix("fp:") {
            let p: u64 = rest
                .parse()
                .map_err(|_| Error::Validation(format!("field: bad modulus {rest:?}")))?;
            PrimeField::new(p)?;
            return Ok(FieldSpec::Prime { p });
        }
        Err(Error::Validation(format!(
            "field: expected `rational` or `fp:<p>`, got {s:?}"
        )))
    }
}

/// The field of rational numbers, with arbitrary-precision elements.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Rational;

impl Field for Rational {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn add_mul_assign(&self, a: &mut BigRational, b: &BigRational, c: &BigRational) {
        if b.is_zero() || c.is_zero() {
            return;
        }
        if c.is_one() {
            *a += b;
        } else if b.is_one() {
            *a += c;
        } else if (-c).is_one() {
            *a -= b;
        } else {
            *a += b * c;
        }
    }
    fn describe(&self) -> FieldSpec {
        FieldSpec::Rational
    }
}

/// The prime field `F_p`, `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= (1 << 31) {
            return Err(Error::Validation(format!(
                "field: modulus {p} too large (must be < 2^31)"
            )));
        }
        if !is_prime(p) {
            return Err(Error::Validation(format!("field: {p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Element of a prime field; the canonical representative in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp(pub u64);

impl Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Field for PrimeField {
    type Elem = Fp;

    fn zero(&self) -> Fp {
        Fp(0)
    }
    fn one(&self) -> Fp {
        Fp(1 % self.p)
    }
    fn from_i64(&self, v: i64) -> Fp {
        Fp(v.rem_euclid(self.p as i64) as u64)
    }
    fn is_zero(&self, a: &Fp) -> bool {
        a.0 == 0
    }
    fn add(&self, a: &Fp, b: &Fp) -> Fp {
        Fp((a.0 + b.0) % self.p)
    }
    fn sub(&self, a: &Fp, b: &Fp) -> Fp {
        Fp((a.0 + self.p - b.0) % self.p)
    }
    fn mul(&self, a: &Fp, b: &Fp) -> Fp {
        Fp(a.0 * b.0 % self.p)
    }
    fn neg(&self, a: &Fp) -> Fp {
        Fp((self.p - a.0) % self.p)
    }
    fn inv(&self, a: &Fp) -> Option<Fp> {
        if a.0 == 0 {
            return None;
        }
        // Fermat
        let mut base = a.0;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        Some(Fp(acc))
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn describe(&self) -> FieldSpec {
        FieldSpec::Prime { p: self.p }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField::new(101).unwrap();
        for v in 1..101 {
            let a = f.from_i64(v);
            let ai = f.inv(&a).unwrap();
            assert_eq!(f.mul(&a, &ai), f.one());
        }
        assert!(f.inv(&f.zero()).is_none());
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(100).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(32003).is_ok());
    }

    #[test]
    fn parses_field_specs() {
        assert_eq!("rational".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert_eq!("fp:101".parse::<FieldSpec>().unwrap(), FieldSpec::Prime { p: 101 });
        assert!("fp:91".parse::<FieldSpec>().is_err());
        assert!("reals".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn negative_integers_embed_correctly() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.from_i64(-1), Fp(6));
        assert_eq!(f.add(&f.from_i64(-1), &f.one()), f.zero());
    }
}
