//! The constant `c_p = 1/K_p` by six formulas, the character sums `S`, `T`,
//! `G`, and the class number `h(-p)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::singular::SnappedInteger;
use crate::arith::{
    bernoulli_poly, int, legendre, rat, require_odd_prime, require_prime_ge5, sawtooth, Rational,
};
use crate::error::{domain, Error, Result};
use crate::scalar::{rel_dev, sign_of, PrecisionConfig, Real};
use crate::special::{hurwitz_zeta, hurwitz_zeta_neg, CotDerivative};

/// One of the six closed forms for `c_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CpVariant {
    /// `√p ((p-3)/2)! (2π)^{-(p-1)/2} Σ (j|p) ζ((p-1)/2, j/p)`
    I,
    /// `(1/2)(-2|p) p^{(p-1)/2} Σ (j|p) ζ(-(p-3)/2, j/p)`
    II,
    /// `(-1)^{(p-3)/2} √p 2^{-(p+1)/2} Σ (j|p) cot^((p-3)/2)(πj/p)`
    III,
    /// `-(-2|p) p^{(p-1)/2} (p-1)^{-1} Σ (j|p) B_{(p-1)/2}(j/p)`
    IV,
    /// `√p 2^{-(p+1)/2} Σ cot^((p-3)/2)(πj²/p)`, `p ≡ 3 (mod 4)` only
    V,
    /// `-(-2|p) p^{(p-1)/2} (p-1)^{-1} Σ B_{(p-1)/2}(frac(j²/p))`, `p ≡ 3 (mod 4)` only
    VI,
}

impl CpVariant {
    pub const ALL: [CpVariant; 6] = [
        CpVariant::I,
        CpVariant::II,
        CpVariant::III,
        CpVariant::IV,
        CpVariant::V,
        CpVariant::VI,
    ];

    pub fn applies_to(self, p: u64) -> bool {
        !matches!(self, CpVariant::V | CpVariant::VI) || p % 4 == 3
    }

    pub fn is_exact(self) -> bool {
        matches!(self, CpVariant::II | CpVariant::IV | CpVariant::VI)
    }

    pub fn name(self) -> &'static str {
        match self {
            CpVariant::I => "i",
            CpVariant::II => "ii",
            CpVariant::III => "iii",
            CpVariant::IV => "iv",
            CpVariant::V => "v",
            CpVariant::VI => "vi",
        }
    }
}

impl fmt::Display for CpVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CpVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CpVariant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown c_p variant {s:?}")))
    }
}

/// A formula value: exact for the Bernoulli forms, numeric otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum CpValue<T> {
    Exact(Rational),
    Numeric(T),
}

impl<T: Real> CpValue<T> {
    pub fn to_real(&self, cfg: &PrecisionConfig) -> T {
        match self {
            CpValue::Exact(q) => T::from_rational(q, cfg),
            CpValue::Numeric(v) => v.clone(),
        }
    }

    pub fn sign(&self) -> i8 {
        match self {
            CpValue::Exact(q) => {
                if q.is_positive() {
                    1
                } else if q.is_negative() {
                    -1
                } else {
                    0
                }
            }
            CpValue::Numeric(v) => sign_of(v),
        }
    }
}

fn chi_sum_rational(p: u64, f: impl Fn(u64) -> Rational) -> Rational {
    (1..p).fold(Rational::zero(), |acc, j| match legendre(j as i64, p) {
        1 => acc + f(j),
        -1 => acc - f(j),
        _ => acc,
    })
}

fn chi_sum_real<T: Real>(p: u64, f: impl Fn(u64) -> Result<T>) -> Result<T> {
    let mut acc = T::zero();
    for j in 1..p {
        match legendre(j as i64, p) {
            1 => acc = acc + f(j)?,
            -1 => acc = acc - f(j)?,
            _ => {}
        }
    }
    Ok(acc)
}

fn pow_int(base: u64, e: u64) -> Rational {
    Rational::from_integer(num_traits::pow(BigInt::from(base), e as usize))
}

fn factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Evaluates a single formula for `c_p`.
pub fn cp_constant<T: Real>(p: u64, variant: CpVariant, cfg: &PrecisionConfig) -> Result<CpValue<T>> {
    require_prime_ge5(p)?;
    if !variant.applies_to(p) {
        return domain(format!("variant ({variant}) needs p ≡ 3 (mod 4), got p = {p}"));
    }
    let m = (p - 1) / 2;
    let e = (p - 3) / 2;
    let minus_two = int(legendre(-2, p) as i64);
    let sqrt_p = T::from_i64(p as i64, cfg).sqrt();
    let two_pow = T::from_bigint(&num_traits::pow(BigInt::from(2), p.div_ceil(2) as usize), cfg);
    Ok(match variant {
        CpVariant::I => {
            let sum = chi_sum_real(p, |j| hurwitz_zeta::<T>(m as u32, &rat(j as i64, p as i64), cfg))?;
            let two_pi = T::from_i64(2, cfg) * T::pi(cfg);
            CpValue::Numeric(sqrt_p * T::from_bigint(&factorial(e), cfg) * sum / two_pi.powi(m as i32))
        }
        CpVariant::II => {
            let sum = chi_sum_rational(p, |j| hurwitz_zeta_neg(e as u32, &rat(j as i64, p as i64)));
            CpValue::Exact(rat(1, 2) * minus_two * pow_int(p, m) * sum)
        }
        CpVariant::III => {
            let cot = CotDerivative::new(e as u32);
            let sum = chi_sum_real(p, |j| cot.at::<T>(&rat(j as i64, p as i64), cfg))?;
            let sign = if e.is_multiple_of(2) { T::one() } else { -T::one() };
            CpValue::Numeric(sign * sqrt_p * sum / two_pow)
        }
        CpVariant::IV => {
            let sum = chi_sum_rational(p, |j| bernoulli_poly(m as usize, &rat(j as i64, p as i64)));
            CpValue::Exact(-minus_two * pow_int(p, m) / int(p as i64 - 1) * sum)
        }
        CpVariant::V => {
            let cot = CotDerivative::new(e as u32);
            let mut sum = T::zero();
            for j in 1..p {
                sum = sum + cot.at::<T>(&rat((j * j % p) as i64, p as i64), cfg)?;
            }
            CpValue::Numeric(sqrt_p * sum / two_pow)
        }
        CpVariant::VI => {
            let sum = (1..p).fold(Rational::zero(), |acc, j| {
                acc + bernoulli_poly(m as usize, &rat((j * j % p) as i64, p as i64))
            });
            CpValue::Exact(-minus_two * pow_int(p, m) / int(p as i64 - 1) * sum)
        }
    })
}

/// All applicable formulas for `c_p` with their cross-check.
#[derive(Clone, Debug)]
pub struct CpReport<T> {
    pub p: u64,
    pub values: Vec<(CpVariant, CpValue<T>)>,
    /// Sign of each formula as evaluated.
    pub signs: Vec<(CpVariant, i8)>,
    /// `|c_p|` from the exact variant (iv), signed by variant (i).
    pub consensus: BigInt,
    /// Relative deviation of each `|value|` from `|consensus|`.
    pub residuals: Vec<(CpVariant, T)>,
    pub tolerance: T,
}

/// Runs every applicable formula, checks that their absolute values agree
/// to `10^-(digits/2)`, and returns the consensus integer.
pub fn cp_all<T: Real>(p: u64, cfg: &PrecisionConfig) -> Result<CpReport<T>> {
    require_prime_ge5(p)?;
    let mut values = Vec::new();
    for v in CpVariant::ALL.into_iter().filter(|v| v.applies_to(p)) {
        values.push((v, cp_constant::<T>(p, v, cfg)?));
    }
    let exact = match &values[3].1 {
        CpValue::Exact(q) => q.clone(),
        CpValue::Numeric(_) => unreachable!("variant (iv) is exact"),
    };
    if !exact.is_integer() {
        return Err(Error::Verification(format!("variant (iv) for p = {p} is not an integer: {exact}")));
    }
    let sign = values[0].1.sign();
    let consensus = exact.to_integer().abs() * BigInt::from(sign);
    if !consensus.is_positive() {
        return Err(Error::Verification(format!("c_{p} consensus {consensus} is not positive")));
    }
    let target = T::from_bigint(&consensus, cfg);
    let tolerance = T::pow10_neg(cfg.decimal_digits / 2, cfg);
    let mut residuals = Vec::new();
    for (v, value) in &values {
        let r = rel_dev(&value.to_real(cfg).abs(), &target);
        if r > tolerance {
            return Err(Error::Verification(format!(
                "c_{p} variant ({v}) deviates by {} from {consensus}",
                r.to_decimal(3)
            )));
        }
        residuals.push((*v, r));
    }
    Ok(CpReport {
        p,
        signs: values.iter().map(|(v, x)| (*v, x.sign())).collect(),
        values,
        consensus,
        residuals,
        tolerance,
    })
}

/// Whether `Σ (j|p) g(j/p)` can be non-zero for `g` of parity `(-1)^n`,
/// i.e. `(-1|p) = (-1)^n`.
pub fn parity_allows(p: u64, n: u64) -> bool {
    let chi_minus_one = if p % 4 == 1 { 1 } else { -1 };
    chi_minus_one == if n.is_multiple_of(2) { 1 } else { -1 }
}

/// `T(r,p) = (-1)^{[(r-1)/2]} p^{r+1} / (2(r+1)) Σ (j|p) B_{r+1}(j/p)`.
pub fn t_sum(r: u64, p: u64) -> Result<Rational> {
    require_prime_ge5(p)?;
    if r == 0 {
        return domain("T(r, p) is defined for r >= 1");
    }
    let sum = chi_sum_rational(p, |j| bernoulli_poly(r as usize + 1, &rat(j as i64, p as i64)));
    let sign = if ((r - 1) / 2).is_multiple_of(2) { int(1) } else { int(-1) };
    Ok(sign * pow_int(p, r + 1) / int(2 * (r as i64 + 1)) * sum)
}

/// `-(-1|p) √p 2^{-(r+2)} Σ (j|p) cot^(r)(πj/p)` before snapping.
pub fn s_sum_value<T: Real>(r: u64, p: u64, cfg: &PrecisionConfig) -> Result<T> {
    require_prime_ge5(p)?;
    if r == 0 {
        return domain("S(r, p) is defined for r >= 1");
    }
    let cot = CotDerivative::new(r as u32);
    let sum = chi_sum_real(p, |j| cot.at::<T>(&rat(j as i64, p as i64), cfg))?;
    let scale = T::from_i64(p as i64, cfg).sqrt()
        / T::from_bigint(&num_traits::pow(BigInt::from(2), r as usize + 2), cfg);
    let v = scale * sum;
    Ok(if legendre(-1, p) == 1 { -v } else { v })
}

/// `S(r,p)` snapped to an integer.
pub fn s_sum<T: Real>(r: u64, p: u64, cfg: &PrecisionConfig) -> Result<SnappedInteger<T>> {
    let s = SnappedInteger::new(s_sum_value::<T>(r, p, cfg)?, cfg)?;
    s.require(&format!("S({r}, {p})"), cfg)?;
    Ok(s)
}

/// `G(p) = Σ_{j=1}^{p-1} ((j²/p))`; zero for `p ≡ 1 (mod 4)` by symmetry.
pub fn g_sum(p: u64) -> Result<Rational> {
    require_odd_prime(p)?;
    Ok((1..p).fold(Rational::zero(), |acc, j| acc + sawtooth(&rat((j * j) as i64, p as i64))))
}

/// Route to the class number `h(-p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassNumberMethod {
    /// `-(1/p) Σ j (j|p)`
    Dirichlet,
    /// `-Σ ((j²/p))`
    Sawtooth,
    /// `p^{-1/2} Σ_{j <= (p-1)/2} cot(πj²/p)`, snapped
    Cotangent,
}

impl ClassNumberMethod {
    pub const ALL: [ClassNumberMethod; 3] =
        [ClassNumberMethod::Dirichlet, ClassNumberMethod::Sawtooth, ClassNumberMethod::Cotangent];

    pub fn name(self) -> &'static str {
        match self {
            ClassNumberMethod::Dirichlet => "dirichlet",
            ClassNumberMethod::Sawtooth => "sawtooth",
            ClassNumberMethod::Cotangent => "cotangent",
        }
    }
}

impl FromStr for ClassNumberMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassNumberMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown class number method {s:?}")))
    }
}

fn require_class_number_prime(p: u64) -> Result<()> {
    require_odd_prime(p)?;
    if p % 4 != 3 || p < 7 {
        return domain(format!("class number routes need a prime p ≡ 3 (mod 4), p >= 7, got {p}"));
    }
    Ok(())
}

fn integral(q: Rational, what: &str) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::Verification(format!("{what} = {q} is not an integer")))
    }
}

/// `h(-p)` by a single method.
pub fn class_number<T: Real>(p: u64, method: ClassNumberMethod, cfg: &PrecisionConfig) -> Result<BigInt> {
    require_class_number_prime(p)?;
    match method {
        ClassNumberMethod::Dirichlet => {
            let sum = chi_sum_rational(p, |j| int(j as i64));
            integral(-sum / int(p as i64), "Dirichlet sum")
        }
        ClassNumberMethod::Sawtooth => integral(-g_sum(p)?, "sawtooth sum"),
        ClassNumberMethod::Cotangent => {
            let cot = CotDerivative::new(0);
            let mut sum = T::zero();
            for j in 1..=(p - 1) / 2 {
                sum = sum + cot.at::<T>(&rat((j * j % p) as i64, p as i64), cfg)?;
            }
            let v = SnappedInteger::new(sum / T::from_i64(p as i64, cfg).sqrt(), cfg)?;
            Ok(v.require(&format!("cotangent class number for p = {p}"), cfg)?.clone())
        }
    }
}

/// `h(-p)` by all three methods, which must agree.
pub fn class_number_checked<T: Real>(p: u64, cfg: &PrecisionConfig) -> Result<BigInt> {
    let mut values = Vec::with_capacity(3);
    for m in ClassNumberMethod::ALL {
        values.push(class_number::<T>(p, m, cfg)?);
    }
    if values.iter().any(|v| *v != values[0]) {
        return Err(Error::Verification(format!(
            "class number methods disagree for p = {p}: {values:?}"
        )));
    }
    Ok(values.swap_remove(0))
}
