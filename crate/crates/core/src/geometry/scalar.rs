//! Extended-precision floating-point scalar used throughout the crate.
//!
//! `Scalar` wraps an arbitrary-precision binary float with a process-global
//! significand precision (default 128 bits, at least 100). All arithmetic is
//! correctly rounded at the configured precision. NaN is treated as a
//! programming error: comparisons panic rather than silently ordering NaNs.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering as AtomicOrdering};
use std::sync::OnceLock;

const RM: RoundingMode = RoundingMode::ToEven;

/// Minimum supported significand precision in bits.
pub const MIN_PRECISION: usize = 100;

/// Default significand precision in bits.
pub const DEFAULT_PRECISION: usize = 128;

/// Environment variable overriding the default significand precision.
pub const PRECISION_ENV_VAR: &str = "PLANE_CHROMA_PRECISION";

static PRECISION: AtomicUsize = AtomicUsize::new(0);
static PRECISION_INIT: OnceLock<usize> = OnceLock::new();

thread_local! {
    static CONSTS: RefCell<Consts> =
        RefCell::new(Consts::new().expect("constants cache allocation"));
}

fn initial_precision() -> usize {
    let from_env = std::env::var(PRECISION_ENV_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok());
    match from_env {
        Some(p) if p >= MIN_PRECISION => p,
        Some(_) => MIN_PRECISION,
        None => DEFAULT_PRECISION,
    }
}

/// Returns the current global significand precision in bits.
pub fn precision() -> usize {
    let p = PRECISION.load(AtomicOrdering::Relaxed);
    if p != 0 {
        return p;
    }
    let p = *PRECISION_INIT.get_or_init(initial_precision);
    PRECISION.store(p, AtomicOrdering::Relaxed);
    p
}

/// Sets the global significand precision in bits (clamped to at least
/// [`MIN_PRECISION`]). Intended for test setups and embedders; the CLI reads
/// [`PRECISION_ENV_VAR`] instead.
pub fn set_precision(bits: usize) {
    PRECISION.store(bits.max(MIN_PRECISION), AtomicOrdering::Relaxed);
}

/// An extended-precision real number.
#[derive(Clone)]
pub struct Scalar(BigFloat);

impl Scalar {
    fn wrap(raw: BigFloat) -> Self {
        debug_assert!(!raw.is_nan(), "scalar operation produced NaN");
        Scalar(raw)
    }

    /// Zero at the current precision.
    pub fn zero() -> Self {
        Scalar(BigFloat::from_i64(0, precision()))
    }

    /// One at the current precision.
    pub fn one() -> Self {
        Scalar(BigFloat::from_i64(1, precision()))
    }

    /// The circle constant pi at the current precision.
    pub fn pi() -> Self {
        Scalar(CONSTS.with(|cc| cc.borrow_mut().pi(precision(), RM)))
    }

    pub fn from_i64(v: i64) -> Self {
        Scalar(BigFloat::from_i64(v, precision()))
    }

    /// Converts from an `f64`, exactly (binary to binary).
    pub fn from_f64(v: f64) -> Self {
        assert!(v.is_finite(), "scalar from non-finite f64");
        Scalar(BigFloat::from_f64(v, precision()))
    }

    /// Converts an exact rational into a scalar, rounding once.
    pub fn from_rational(r: &BigRational) -> Self {
        let p = precision();
        let numer = bigint_to_bigfloat(r.numer(), p);
        let denom = bigint_to_bigfloat(r.denom(), p);
        Scalar::wrap(numer.div(&denom, p, RM))
    }

    /// Parses a decimal string such as `-1.25` or `0.3333e-2`.
    pub fn parse_decimal(s: &str) -> Option<Self> {
        let p = precision();
        let v = CONSTS.with(|cc| {
            BigFloat::parse(s, astro_float::Radix::Dec, p, RM, &mut cc.borrow_mut())
        });
        if v.is_nan() {
            None
        } else {
            Some(Scalar(v))
        }
    }

    /// Nearest `f64` approximation.
    pub fn to_f64(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        let (words, _len, sign, exp, _inexact) =
            self.0.as_raw_parts().expect("finite scalar");
        // Words are little-endian; the top word has its most significant bit
        // set, so the two highest words carry more than an f64's mantissa.
        let mut mant = 0.0f64;
        let n = words.len();
        for (i, w) in words.iter().enumerate().skip(n.saturating_sub(2)) {
            let shift = (n - i) as i32 * 64;
            mant += (*w as f64) * 2f64.powi(-shift);
        }
        let v = mant * 2f64.powi(exp);
        if sign == Sign::Neg {
            -v
        } else {
            v
        }
    }

    /// Full-precision decimal rendering (round-trips at the current
    /// precision).
    pub fn to_decimal_string(&self) -> String {
        CONSTS.with(|cc| {
            self.0
                .format(astro_float::Radix::Dec, RM, &mut cc.borrow_mut())
                .expect("finite scalar formats")
        })
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive() && !self.0.is_zero()
    }

    pub fn abs(&self) -> Self {
        Scalar::wrap(self.0.abs())
    }

    pub fn sqrt(&self) -> Self {
        assert!(
            !self.0.is_negative() || self.0.is_zero(),
            "sqrt of negative scalar"
        );
        Scalar::wrap(self.0.sqrt(precision(), RM))
    }

    pub fn cbrt(&self) -> Self {
        Scalar::wrap(self.0.cbrt(precision(), RM))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn powi(&self, n: usize) -> Self {
        Scalar::wrap(self.0.powi(n, precision(), RM))
    }

    pub fn sin(&self) -> Self {
        Scalar(CONSTS.with(|cc| self.0.sin(precision(), RM, &mut cc.borrow_mut())))
    }

    pub fn cos(&self) -> Self {
        Scalar(CONSTS.with(|cc| self.0.cos(precision(), RM, &mut cc.borrow_mut())))
    }

    pub fn asin(&self) -> Self {
        Scalar(CONSTS.with(|cc| self.0.asin(precision(), RM, &mut cc.borrow_mut())))
    }

    pub fn acos(&self) -> Self {
        Scalar(CONSTS.with(|cc| self.0.acos(precision(), RM, &mut cc.borrow_mut())))
    }

    pub fn atan(&self) -> Self {
        Scalar(CONSTS.with(|cc| self.0.atan(precision(), RM, &mut cc.borrow_mut())))
    }

    /// Four-quadrant arctangent of `self / x`.
    pub fn atan2(&self, x: &Scalar) -> Self {
        let y = self;
        if x.is_positive() {
            (y / x).atan()
        } else if x.is_negative() {
            let base = (y / x).atan();
            if y.is_negative() {
                base - Scalar::pi()
            } else {
                base + Scalar::pi()
            }
        } else if y.is_positive() {
            Scalar::pi() / Scalar::from_i64(2)
        } else if y.is_negative() {
            -(Scalar::pi() / Scalar::from_i64(2))
        } else {
            Scalar::zero()
        }
    }

    /// Power of two, exact while within exponent range.
    pub fn exp2i(e: i32) -> Self {
        Scalar::from_f64(2f64.powi(e))
    }

    pub fn min(&self, other: &Scalar) -> Scalar {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn max(&self, other: &Scalar) -> Scalar {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }
}

fn bigint_to_bigfloat(v: &BigInt, p: usize) -> BigFloat {
    // Build from 32-bit limbs: v = sum limb_i * 2^(32 i).
    let (_, digits) = v.to_u32_digits();
    let mut acc = BigFloat::from_i64(0, p + 64);
    let base = BigFloat::from_u64(1u64 << 32, p + 64);
    for limb in digits.iter().rev() {
        acc = acc.mul(&base, p + 64, RM);
        acc = acc.add(&BigFloat::from_u64(u64::from(*limb), p + 64, ), p + 64, RM);
    }
    if v.is_negative() {
        acc = acc.neg();
    }
    acc
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $raw:ident) => {
        impl std::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::wrap(self.0.$raw(&rhs.0, precision(), RM))
            }
        }
        impl std::ops::$trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, add);
scalar_binop!(Sub, sub, sub);
scalar_binop!(Mul, mul, mul);
scalar_binop!(Div, div, div);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::wrap(self.0.clone().neg())
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        let sw = self.0.cmp(&other.0).expect("comparison of finite scalars");
        sw.cmp(&0)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.to_f64())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal_string())
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_decimal_string())
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Scalar::parse_decimal(&s)
            .ok_or_else(|| serde::de::Error::custom(format!("invalid decimal scalar: {s}")))
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_i64(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn sqrt_two_squares_back() {
        let two = Scalar::from_i64(2);
        let r = two.sqrt();
        let diff = (&r * &r - &two).abs();
        assert!(diff < Scalar::exp2i(-120), "diff = {}", diff.to_f64());
    }

    #[test]
    fn precision_is_at_least_100_bits() {
        assert!(precision() >= MIN_PRECISION);
    }

    #[test]
    fn rational_conversion_round_trips() {
        let r = BigRational::new(BigInt::from(13), BigInt::from(75));
        let s = Scalar::from_rational(&r);
        assert!((s.to_f64() - 13.0 / 75.0).abs() < 1e-15);
        let one = Scalar::from_rational(&BigRational::one());
        assert_eq!(one, Scalar::one());
    }

    #[test]
    fn to_f64_matches_known_values() {
        let v = Scalar::from_i64(3).sqrt();
        assert!((v.to_f64() - 3f64.sqrt()).abs() < 1e-15);
        let neg = -Scalar::from_i64(5) / Scalar::from_i64(4);
        assert_eq!(neg.to_f64(), -1.25);
    }

    #[test]
    fn atan2_quadrants() {
        let one = Scalar::one();
        let pi = Scalar::pi();
        let q2 = one.atan2(&-&one);
        let expect = &pi * &Scalar::from_i64(3) / Scalar::from_i64(4);
        assert!((q2 - expect).abs() < Scalar::exp2i(-100));
    }

    #[test]
    fn trig_identity() {
        let x = Scalar::from_f64(0.7321);
        let s = x.sin();
        let c = x.cos();
        let lhs = &s * &s + &c * &c;
        assert!((lhs - Scalar::one()).abs() < Scalar::exp2i(-120));
    }
}
