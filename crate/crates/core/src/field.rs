//! Exact scalar fields: prime fields `GF(p)` and the rationals.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Runtime description of a field: characteristic 0 means the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Prime(u32),
    Rational,
}

impl FieldSpec {
    pub fn from_characteristic(characteristic: u64) -> Result<Self> {
        if characteristic == 0 {
            return Ok(FieldSpec::Rational);
        }
        if characteristic < (1 << 31) && is_prime(characteristic as u32) {
            Ok(FieldSpec::Prime(characteristic as u32))
        } else {
            Err(Error::InvalidCharacteristic(characteristic))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Prime(p) => u64::from(*p),
            FieldSpec::Rational => 0,
        }
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(2) => f.write_str("gf2"),
            FieldSpec::Prime(3) => f.write_str("gf3"),
            FieldSpec::Prime(p) => write!(f, "gfp:{p}"),
            FieldSpec::Rational => f.write_str("rat"),
        }
    }
}

impl core::str::FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `gf2`, `gf3`, `gfp:<p>` and `rat`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gf2" => Ok(FieldSpec::Prime(2)),
            "gf3" => Ok(FieldSpec::Prime(3)),
            "rat" => Ok(FieldSpec::Rational),
            _ => {
                let p = s
                    .strip_prefix("gfp:")
                    .and_then(|p| p.parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidParameters(alloc::format!("unknown field `{s}`")))?;
                match FieldSpec::from_characteristic(p)? {
                    FieldSpec::Rational => Err(Error::InvalidCharacteristic(0)),
                    spec => Ok(spec),
                }
            }
        }
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = u64::from(n);
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Exact arithmetic context. Elements carry no reference to their field;
/// every operation goes through the context.
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync {
    type Elem: Clone + Debug + Display + PartialEq + Eq + Ord + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero, which is always a logic error.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn from_bigint(&self, v: &BigInt) -> Self::Elem;
    /// `num / den`; `None` when the denominator vanishes in the field.
    fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem>;
    /// All elements in a fixed order starting with 0, or `None` for infinite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    /// Integer representatives suitable for drawing uniform samples;
    /// infinite fields sample from a small symmetric window.
    fn sample_from(&self, raw: u32) -> Self::Elem;

    fn characteristic(&self) -> u64 {
        self.spec().characteristic()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
}

/// The prime field `GF(p)` with residues stored in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p) && p < (1 << 31) {
            Ok(Fp { p })
        } else {
            Err(Error::InvalidCharacteristic(u64::from(p)))
        }
    }

    pub fn gf2() -> Self {
        Fp { p: 2 }
    }

    pub fn gf3() -> Self {
        Fp { p: 3 }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce_u64(&self, v: u64) -> u32 {
        (v % u64::from(self.p)) as u32
    }

    fn pow(&self, mut base: u32, mut exp: u32) -> u32 {
        let mut acc = 1u32;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

impl Field for Fp {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.reduce_u64(u64::from(*a) * u64::from(*b))
    }

    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero in GF({})", self.p);
        self.pow(*a, self.p - 2)
    }

    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(i64::from(self.p)) as u32
    }

    fn from_bigint(&self, v: &BigInt) -> u32 {
        let p = BigInt::from(self.p);
        let r = ((v % &p) + &p) % &p;
        r.to_u32().expect("residue fits in u32")
    }

    fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Option<u32> {
        let d = self.from_bigint(den);
        if d == 0 {
            return None;
        }
        Some(self.div(&self.from_bigint(num), &d))
    }

    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.p).collect())
    }

    fn sample_from(&self, raw: u32) -> u32 {
        raw % self.p
    }
}

/// The rational numbers, as arbitrary-precision fractions in lowest terms.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero rational");
        a.recip()
    }

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_bigint(&self, v: &BigInt) -> BigRational {
        BigRational::from_integer(v.clone())
    }

    fn from_fraction(&self, num: &BigInt, den: &BigInt) -> Option<BigRational> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }

    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }

    fn sample_from(&self, raw: u32) -> BigRational {
        // Window [-4, 4]: small entries keep random rational tests fast.
        self.from_i64(i64::from(raw % 9) - 4)
    }
}

/// Renders a rational as `num/den` (or just `num` for integers).
pub fn format_ratio(num: &BigInt, den: &BigInt) -> String {
    use alloc::format;
    if den.is_one() {
        format!("{num}")
    } else if den.is_negative() {
        format!("{}/{}", -num, -den)
    } else {
        format!("{num}/{den}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_checks() {
        assert!(Fp::new(2).is_ok());
        assert!(Fp::new(5).is_ok());
        assert!(Fp::new(4).is_err());
        assert!(Fp::new(1).is_err());
        assert_eq!(FieldSpec::from_characteristic(0), Ok(FieldSpec::Rational));
        assert_eq!(FieldSpec::from_characteristic(7), Ok(FieldSpec::Prime(7)));
        assert!(FieldSpec::from_characteristic(9).is_err());
        for text in ["gf2", "gf3", "gfp:7", "rat"] {
            assert_eq!(alloc::format!("{}", text.parse::<FieldSpec>().unwrap()), text);
        }
        assert_eq!("gfp:2".parse::<FieldSpec>(), Ok(FieldSpec::Prime(2)));
        assert!("gfp:9".parse::<FieldSpec>().is_err());
        assert!("gfp:0".parse::<FieldSpec>().is_err());
        assert!("gf4".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn modular_arithmetic_stays_reduced() {
        let f = Fp::new(5).unwrap();
        assert_eq!(f.add(&3, &4), 2);
        assert_eq!(f.sub(&1, &3), 3);
        assert_eq!(f.neg(&0), 0);
        assert_eq!(f.mul(&4, &4), 1);
        for a in 1..5 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_i64(-1), 4);
        assert_eq!(f.from_bigint(&BigInt::from(-12)), 3);
        assert_eq!(f.from_fraction(&BigInt::from(1), &BigInt::from(5)), None);
    }

    #[test]
    fn rationals_in_lowest_terms() {
        let q = Rationals;
        let a = q.from_fraction(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        assert_eq!(*a.numer(), BigInt::from(-2));
        assert_eq!(*a.denom(), BigInt::from(3));
        assert_eq!(q.mul(&a, &q.inv(&a)), q.one());
    }

    #[test]
    fn spec_display() {
        use alloc::string::ToString;
        assert_eq!(FieldSpec::Prime(2).to_string(), "gf2");
        assert_eq!(FieldSpec::Prime(7).to_string(), "gfp:7");
        assert_eq!(FieldSpec::Rational.to_string(), "rat");
    }
}
