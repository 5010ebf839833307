//! Exact rational numbers and exact comparisons against rational powers.
//!
//! Every threshold of the form `x >= y^(p/q)` is decided by raising both
//! sides to integer powers, so verdicts never depend on floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Largest exponent numerator/denominator for which power comparisons are
/// carried out exactly.
pub const MAX_EXACT_EXPONENT: u64 = 1 << 16;

/// Arbitrary-precision rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(v: i64) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn from_usize(v: usize) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Self {
        Rational(BigRational::new(numer, denom))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn pow(&self, exp: i32) -> Self {
        Rational(num_traits::Pow::pow(&self.0, exp))
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Smallest integer `>= self`, clamped at zero.
    pub fn ceil_usize(&self) -> usize {
        let c = self.ceil();
        if c.sign() == Sign::Minus {
            0
        } else {
            c.to_usize().unwrap_or(usize::MAX)
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Numerator and denominator as machine integers, when they fit.
    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((self.numer().to_i64()?, self.denom().to_i64()?))
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<usize> for Rational {
    fn from(v: usize) -> Self {
        Rational::from_usize(v)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational(v)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q`, integers, and finite decimals such as `0.25` or `1e-3`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |reason: &str| Error::Rational {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        if t.is_empty() {
            return Err(bad("empty"));
        }
        if let Some((p, q)) = t.split_once('/') {
            let p: BigInt = p.trim().parse().map_err(|_| bad("bad numerator"))?;
            let q: BigInt = q.trim().parse().map_err(|_| bad("bad denominator"))?;
            if q.is_zero() {
                return Err(bad("zero denominator"));
            }
            return Ok(Rational(BigRational::new(p, q)));
        }
        let (mantissa, exponent) = match t.find(['e', 'E']) {
            Some(i) => {
                let e: i32 = t[i + 1..].parse().map_err(|_| bad("bad exponent"))?;
                (&t[..i], e)
            }
            None => (t, 0),
        };
        let (neg, digits) = match mantissa.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad("no digits"));
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad("not a number"));
        }
        let all: String = format!("{int_part}{frac_part}");
        let mut numer: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().unwrap() };
        if neg {
            numer = -numer;
        }
        let scale = exponent - frac_part.len() as i32;
        let ten = BigInt::from(10u32);
        let value = if scale >= 0 {
            BigRational::from_integer(numer * num_traits::pow(ten, scale as usize))
        } else {
            BigRational::new(numer, num_traits::pow(ten, (-scale) as usize))
        };
        Ok(Rational(value))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
            Float(f64),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Int(i) => Ok(Rational::from_integer(i)),
            Raw::Float(f) => f.to_string().parse().map_err(serde::de::Error::custom),
        }
    }
}

fn exponent_parts(exp: &Rational) -> Option<(i64, u64)> {
    let p = exp.numer().to_i64()?;
    let q = exp.denom().to_u64()?;
    if p.unsigned_abs() > MAX_EXACT_EXPONENT || q > MAX_EXACT_EXPONENT {
        return None;
    }
    Some((p, q))
}

fn big_pow(base: &BigRational, exp: u64) -> BigRational {
    num_traits::Pow::pow(base, BigUint::from(exp))
}

/// Exactly compares `x` with `base^exp` for `x >= 0` and `base >= 0`.
///
/// Returns `None` when the exponent's numerator or denominator exceeds
/// [`MAX_EXACT_EXPONENT`].
pub fn try_cmp_pow(x: &Rational, base: &Rational, exp: &Rational) -> Option<Ordering> {
    debug_assert!(!x.is_negative() && !base.is_negative());
    let (p, q) = exponent_parts(exp)?;
    if base.is_zero() {
        return Some(match p.cmp(&0) {
            // 0^positive = 0
            Ordering::Greater => x.0.cmp(&BigRational::zero()),
            Ordering::Equal => x.0.cmp(&BigRational::one()),
            // 0^negative = +inf
            Ordering::Less => Ordering::Less,
        });
    }
    let lhs = big_pow(&x.0, q);
    Some(if p >= 0 {
        lhs.cmp(&big_pow(&base.0, p as u64))
    } else {
        (lhs * big_pow(&base.0, p.unsigned_abs())).cmp(&BigRational::one())
    })
}

/// Floating point comparison of `x` and `base^exp` with a relative guard
/// band: results within the band report `Equal`.
pub fn approx_cmp_pow(x: &Rational, base: &Rational, exp: &Rational) -> Ordering {
    let lx = x.to_f64().ln();
    let rhs = exp.to_f64() * base.to_f64().ln();
    if (lx - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()) {
        Ordering::Equal
    } else if lx < rhs {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// `x >= base^exp`, exact when possible. Ties inside the floating point
/// guard band resolve to `false`.
pub fn ge_pow(x: &Rational, base: &Rational, exp: &Rational) -> bool {
    match try_cmp_pow(x, base, exp) {
        Some(ord) => ord != Ordering::Less,
        None => approx_cmp_pow(x, base, exp) == Ordering::Greater,
    }
}

/// Exact `k >= n^tau` for integers; `None` if `tau` is too fine-grained.
pub fn int_ge_pow(k: usize, n: usize, tau: &Rational) -> Option<bool> {
    try_cmp_pow(&Rational::from_usize(k), &Rational::from_usize(n), tau)
        .map(|o| o != Ordering::Less)
}

/// Certified bracket `[lo, hi]` around `r^(1/q)` with about `bits` bits of
/// relative precision. `r` must be non-negative.
pub fn root_bounds(r: &Rational, q: u32, bits: u32) -> (Rational, Rational) {
    assert!(q >= 1);
    assert!(!r.is_negative());
    if r.is_zero() {
        return (Rational::zero(), Rational::zero());
    }
    // r^(1/q) = (a * b^(q-1) * 2^(bits*q))^(1/q) / (b * 2^bits)
    let a = r.numer().magnitude().clone();
    let b = r.denom().magnitude().clone();
    let scale = BigUint::one() << bits as usize;
    let radicand = &a * b.pow(q - 1) * scale.pow(q);
    let floor_root = radicand.nth_root(q);
    let denom = BigInt::from_biguint(Sign::Plus, b * scale);
    let lo = Rational::from_big(BigInt::from_biguint(Sign::Plus, floor_root.clone()), denom.clone());
    let hi = Rational::from_big(BigInt::from_biguint(Sign::Plus, floor_root + 1u32), denom);
    (lo, hi)
}

/// Certified bracket around `base^exp` for `base > 0`.
pub fn pow_bounds(base: &Rational, exp: &Rational, bits: u32) -> Option<(Rational, Rational)> {
    let (p, q) = exponent_parts(exp)?;
    let q = u32::try_from(q).ok()?;
    let raised = Rational(big_pow(&base.0, p.unsigned_abs()));
    let (lo, hi) = root_bounds(&raised, q, bits);
    if p >= 0 {
        Some((lo, hi))
    } else {
        if lo.is_zero() {
            return None;
        }
        Some((hi.recip(), lo.recip()))
    }
}
