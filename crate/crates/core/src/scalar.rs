//! Scalar abstraction shared by every numeric routine in the crate.
//!
//! Numeric code is written once against [`Real`] and instantiated either with
//! `f64` (fast, ~16 digits) or with [`Mpf`], an MPFR float whose precision is
//! taken from a [`PrecisionConfig`]. Exact quantities stay in
//! [`BigRational`](num_rational::BigRational) and are converted at the edge.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, ToPrimitive, Zero};
use rug::float::Constant;
use rug::Float;

use crate::error::{Error, Result};

const LOG2_10: f64 = std::f64::consts::LN_10 / std::f64::consts::LN_2;

/// Precision settings for every high-precision evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrecisionConfig {
    /// Target number of correct decimal digits.
    pub decimal_digits: u32,
    /// Largest residual accepted when snapping a value to an integer.
    pub snap_tolerance: f64,
    /// Extra digits carried internally beyond `decimal_digits`.
    pub guard_digits: u32,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig {
            decimal_digits: 60,
            snap_tolerance: 1e-30,
            guard_digits: 10,
        }
    }
}

impl PrecisionConfig {
    /// Configuration with the given digit count and default guard digits.
    ///
    /// The snap tolerance defaults to `1e-30`, loosened to
    /// `10^-(digits - guard)` when the precision is too low to support it.
    pub fn with_digits(decimal_digits: u32) -> Result<Self> {
        let guard_digits = 10;
        let floor = 10f64.powi(-(decimal_digits as i32 - guard_digits as i32));
        let cfg = PrecisionConfig {
            decimal_digits,
            snap_tolerance: floor.max(1e-30),
            guard_digits,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.decimal_digits < 20 {
            return Err(Error::Domain(format!(
                "decimal_digits must be at least 20, got {}",
                self.decimal_digits
            )));
        }
        if self.guard_digits == 0 {
            return Err(Error::Domain("guard_digits must be positive".into()));
        }
        if !(self.snap_tolerance > 0.0 && self.snap_tolerance.is_finite()) {
            return Err(Error::Domain("snap_tolerance must be a positive real".into()));
        }
        let floor = 10f64.powi(-(self.decimal_digits as i32 - self.guard_digits as i32));
        if self.snap_tolerance < floor * (1.0 - 1e-12) {
            return Err(Error::Domain(format!(
                "snap_tolerance {:e} is below the attainable floor {:e}",
                self.snap_tolerance, floor
            )));
        }
        Ok(())
    }

    /// Mantissa bits used for MPFR values: target plus guard digits.
    pub fn working_bits(&self) -> u32 {
        ((self.decimal_digits + self.guard_digits) as f64 * LOG2_10).ceil() as u32 + 8
    }
}

/// Real-number operations needed by the special functions and sums.
///
/// Constructors take a [`PrecisionConfig`]; implementations with a fixed
/// format simply ignore it.
pub trait Real:
    Num + Neg<Output = Self> + Clone + PartialOrd + fmt::Debug + fmt::Display + Send + Sync
{
    fn from_i64(v: i64, cfg: &PrecisionConfig) -> Self;
    fn from_f64(v: f64, cfg: &PrecisionConfig) -> Self;
    fn from_bigint(v: &BigInt, cfg: &PrecisionConfig) -> Self;
    fn pi(cfg: &PrecisionConfig) -> Self;
    /// Unit roundoff of values built with `cfg`.
    fn epsilon(cfg: &PrecisionConfig) -> Self;

    fn abs(&self) -> Self;
    fn sqrt(&self) -> Self;
    fn exp(&self) -> Self;
    fn ln(&self) -> Self;
    fn sin_cos(&self) -> (Self, Self);
    fn cot(&self) -> Self;
    fn powi(&self, n: i32) -> Self;
    fn to_f64(&self) -> f64;
    fn is_finite(&self) -> bool;
    /// Nearest integer, ties away from zero. `None` for non-finite values.
    fn round_to_bigint(&self) -> Option<BigInt>;
    /// Scientific-notation decimal string with `digits` significant digits.
    fn to_decimal(&self, digits: usize) -> String;

    fn from_rational(q: &BigRational, cfg: &PrecisionConfig) -> Self {
        Self::from_bigint(q.numer(), cfg) / Self::from_bigint(q.denom(), cfg)
    }

    fn from_ratio(num: i64, den: i64, cfg: &PrecisionConfig) -> Self {
        Self::from_i64(num, cfg) / Self::from_i64(den, cfg)
    }

    /// `10^-e` at the precision of `cfg`.
    fn pow10_neg(e: u32, cfg: &PrecisionConfig) -> Self {
        Self::one() / Self::from_bigint(&num_traits::pow(BigInt::from(10u32), e as usize), cfg)
    }
}

impl Real for f64 {
    fn from_i64(v: i64, _: &PrecisionConfig) -> Self {
        v as f64
    }
    fn from_f64(v: f64, _: &PrecisionConfig) -> Self {
        v
    }
    fn from_bigint(v: &BigInt, _: &PrecisionConfig) -> Self {
        v.to_f64().unwrap_or(f64::NAN)
    }
    fn from_rational(q: &BigRational, _: &PrecisionConfig) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }
    fn pi(_: &PrecisionConfig) -> Self {
        std::f64::consts::PI
    }
    fn epsilon(_: &PrecisionConfig) -> Self {
        f64::EPSILON
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn exp(&self) -> Self {
        f64::exp(*self)
    }
    fn ln(&self) -> Self {
        f64::ln(*self)
    }
    fn sin_cos(&self) -> (Self, Self) {
        f64::sin_cos(*self)
    }
    fn cot(&self) -> Self {
        1.0 / f64::tan(*self)
    }
    fn powi(&self, n: i32) -> Self {
        f64::powi(*self, n)
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
    fn round_to_bigint(&self) -> Option<BigInt> {
        if self.is_finite() {
            BigInt::from_f64(self.round())
        } else {
            None
        }
    }
    fn to_decimal(&self, digits: usize) -> String {
        format!("{:.*e}", digits.saturating_sub(1), self)
    }
}

/// MPFR-backed real. Binary operations produce a result at the larger of the
/// two operand precisions, so exact small constants (`zero`, `one`) mix
/// freely with working-precision values.
#[derive(Clone, Debug, PartialEq, PartialOrd)]
pub struct Mpf(Float);

const SMALL_PREC: u32 = 64;

impl Mpf {
    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn from_float(f: Float) -> Self {
        Mpf(f)
    }

    /// Parses a decimal string at the precision of `cfg`.
    pub fn parse(s: &str, cfg: &PrecisionConfig) -> Result<Self> {
        let parsed = Float::parse(s).map_err(|e| Error::Domain(format!("bad number {s:?}: {e}")))?;
        Ok(Mpf(Float::with_val(cfg.working_bits(), parsed)))
    }

    fn lifted(self, prec: u32) -> Float {
        let mut f = self.0;
        if f.prec() < prec {
            f.set_prec(prec);
        }
        f
    }
}

impl fmt::Display for Mpf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.0.prec() as f64) / LOG2_10).floor() as usize;
        f.write_str(&self.to_decimal(digits.max(1)))
    }
}

macro_rules! mpf_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for Mpf {
            type Output = Mpf;
            fn $method(self, rhs: Mpf) -> Mpf {
                let prec = self.0.prec().max(rhs.0.prec());
                Mpf(self.lifted(prec) $op &rhs.0)
            }
        }
    };
}

mpf_binop!(Add, add, +);
mpf_binop!(Sub, sub, -);
mpf_binop!(Mul, mul, *);
mpf_binop!(Div, div, /);
mpf_binop!(Rem, rem, %);

impl Neg for Mpf {
    type Output = Mpf;
    fn neg(self) -> Mpf {
        Mpf(-self.0)
    }
}

impl Zero for Mpf {
    fn zero() -> Self {
        Mpf(Float::with_val(SMALL_PREC, 0))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Mpf {
    fn one() -> Self {
        Mpf(Float::with_val(SMALL_PREC, 1))
    }
}

impl Num for Mpf {
    type FromStrRadixErr = Error;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self> {
        let parsed = Float::parse_radix(s, radix as i32)
            .map_err(|e| Error::Domain(format!("bad number {s:?}: {e}")))?;
        Ok(Mpf(Float::with_val(4 * SMALL_PREC, parsed)))
    }
}

fn bigint_to_rug(v: &BigInt) -> rug::Integer {
    rug::Integer::from_str_radix(&v.to_str_radix(16), 16).expect("hex digits from num-bigint")
}

fn rug_to_bigint(v: &rug::Integer) -> BigInt {
    BigInt::parse_bytes(v.to_string_radix(16).as_bytes(), 16).expect("hex digits from rug")
}

impl Real for Mpf {
    fn from_i64(v: i64, cfg: &PrecisionConfig) -> Self {
        Mpf(Float::with_val(cfg.working_bits(), v))
    }
    fn from_f64(v: f64, cfg: &PrecisionConfig) -> Self {
        Mpf(Float::with_val(cfg.working_bits(), v))
    }
    fn from_bigint(v: &BigInt, cfg: &PrecisionConfig) -> Self {
        Mpf(Float::with_val(cfg.working_bits(), bigint_to_rug(v)))
    }
    fn from_rational(q: &BigRational, cfg: &PrecisionConfig) -> Self {
        let prec = cfg.working_bits();
        let mut f = Float::with_val(prec, bigint_to_rug(q.numer()));
        f /= Float::with_val(prec, bigint_to_rug(q.denom()));
        Mpf(f)
    }
    fn pi(cfg: &PrecisionConfig) -> Self {
        Mpf(Float::with_val(cfg.working_bits(), Constant::Pi))
    }
    fn epsilon(cfg: &PrecisionConfig) -> Self {
        let bits = cfg.working_bits();
        Mpf(Float::with_val(bits, Float::i_exp(1, 1 - bits as i32)))
    }
    fn abs(&self) -> Self {
        Mpf(self.0.clone().abs())
    }
    fn sqrt(&self) -> Self {
        Mpf(self.0.clone().sqrt())
    }
    fn exp(&self) -> Self {
        Mpf(self.0.clone().exp())
    }
    fn ln(&self) -> Self {
        Mpf(self.0.clone().ln())
    }
    fn sin_cos(&self) -> (Self, Self) {
        let (s, c) = self.0.clone().sin_cos(Float::new(self.0.prec()));
        (Mpf(s), Mpf(c))
    }
    fn cot(&self) -> Self {
        Mpf(self.0.clone().cot())
    }
    fn powi(&self, n: i32) -> Self {
        Mpf(rug::ops::Pow::pow(self.0.clone(), n))
    }
    fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
    fn is_finite(&self) -> bool {
        self.0.is_finite()
    }
    fn round_to_bigint(&self) -> Option<BigInt> {
        if !self.0.is_finite() {
            return None;
        }
        self.0.clone().round().to_integer().map(|i| rug_to_bigint(&i))
    }
    fn to_decimal(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".to_string();
        }
        self.0.to_string_radix(10, Some(digits.max(1)))
    }
}

/// Complex value over a [`Real`] scalar.
pub type Cx<T> = Complex<T>;

/// `e^{i·theta}`.
pub fn expi<T: Real>(theta: &T) -> Cx<T> {
    let (s, c) = theta.sin_cos();
    Complex::new(c, s)
}

/// `e^{2πi·q}` for an exact rational `q`, reduced modulo 1 before rounding.
pub fn exp_2pi_i<T: Real>(q: &BigRational, cfg: &PrecisionConfig) -> Cx<T> {
    let frac = frac(q);
    let angle = T::from_i64(2, cfg) * T::pi(cfg) * T::from_rational(&frac, cfg);
    // Quarter turns are exact; avoid spurious 1e-70 imaginary parts.
    let quarter = &frac * BigRational::from_integer(BigInt::from(4));
    if quarter.is_integer() {
        let one = T::from_i64(1, cfg);
        let zero = T::from_i64(0, cfg);
        return match (quarter.to_integer() % 4u32).to_u32().unwrap_or(0) {
            0 => Complex::new(one, zero),
            1 => Complex::new(zero, one),
            2 => Complex::new(-one, zero),
            _ => Complex::new(zero, -one),
        };
    }
    expi(&angle)
}

/// `e^z` for complex `z`.
pub fn cexp<T: Real>(z: &Cx<T>) -> Cx<T> {
    let m = z.re.exp();
    let w = expi(&z.im);
    Complex::new(m.clone() * w.re, m * w.im)
}

/// Modulus `|z|`.
pub fn cabs<T: Real>(z: &Cx<T>) -> T {
    z.norm_sqr().sqrt()
}

/// Integer power of a complex number by repeated squaring.
pub fn cpowi<T: Real>(z: &Cx<T>, n: u64) -> Cx<T> {
    let mut result = Complex::new(T::one(), T::zero());
    let mut base = z.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base.clone();
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * base;
        }
    }
    result
}

/// Fractional part `x - floor(x)` of an exact rational, in `[0, 1)`.
pub fn frac(x: &BigRational) -> BigRational {
    let (q, _) = x.numer().div_mod_floor(x.denom());
    x - BigRational::from_integer(q)
}

/// Relative deviation `|a - b| / max(|b|, tiny)`.
pub fn rel_dev<T: Real>(a: &T, b: &T) -> T {
    let diff = (a.clone() - b.clone()).abs();
    let scale = b.abs();
    if scale.is_zero() {
        diff
    } else {
        diff / scale
    }
}

/// Sign of a real as -1, 0 or 1.
pub fn sign_of<T: Real>(x: &T) -> i8 {
    match x.partial_cmp(&T::zero()) {
        Some(Ordering::Greater) => 1,
        Some(Ordering::Less) => -1,
        _ => 0,
    }
}

/// Converts an exact rational to the decimal string used in reports.
pub fn rational_to_string(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
