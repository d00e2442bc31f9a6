//! Exponential sums `A_p(k, n)`, the singular-point terms `Φ_k(n)` and the two
//! asymptotic estimates of `a_p(n)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{
    dedekind_sum_reciprocity, divisors, int, legendre, rat, require_prime_ge5, DedekindPair, Rational,
};
use crate::error::{domain, Error, Result};
use crate::scalar::{exp_2pi_i, rel_dev, PrecisionConfig, Real};
use super::constants::cp_all;
use crate::series::pcore_count;

/// A high-precision value together with its nearest integer.
#[derive(Clone, Debug, PartialEq)]
pub struct SnappedInteger<T> {
    pub raw: T,
    pub nearest: BigInt,
    /// `|raw - nearest|`, at most `1/2`.
    pub residual: T,
}

impl<T: Real> SnappedInteger<T> {
    pub fn new(raw: T, cfg: &PrecisionConfig) -> Result<Self> {
        let nearest = raw
            .round_to_bigint()
            .ok_or_else(|| Error::Precision(format!("cannot snap non-finite value {raw}")))?;
        let residual = (raw.clone() - T::from_bigint(&nearest, cfg)).abs();
        Ok(SnappedInteger { raw, nearest, residual })
    }

    pub fn is_snapped(&self, cfg: &PrecisionConfig) -> bool {
        self.residual <= T::from_f64(cfg.snap_tolerance, cfg)
    }

    /// The nearest integer, or a precision error when the residual exceeds
    /// the snap tolerance.
    pub fn require(&self, what: &str, cfg: &PrecisionConfig) -> Result<&BigInt> {
        if self.is_snapped(cfg) {
            Ok(&self.nearest)
        } else {
            Err(Error::Precision(format!(
                "{what} = {} is {} away from an integer (tolerance {:e})",
                self.raw.to_decimal(25),
                self.residual.to_decimal(3),
                cfg.snap_tolerance
            )))
        }
    }
}

/// `(p² - 1) / 24`, an integer for primes `p >= 5`.
pub fn shift(p: u64) -> i64 {
    ((p * p - 1) / 24) as i64
}

/// The `n`-independent phases `(s(h,k) - p·s(ph,k))/2` of `A_p(k, ·)`.
pub(crate) struct ApPhases {
    k: u64,
    terms: Vec<(u64, Rational)>,
}

impl ApPhases {
    pub(crate) fn new(p: u64, k: u64) -> Result<Self> {
        require_prime_ge5(p)?;
        if k == 0 {
            return domain("A_p needs k >= 1");
        }
        if k.is_multiple_of(p) {
            return domain(format!("A_p(k, n) is only defined for p ∤ k, got p = {p}, k = {k}"));
        }
        let mut terms = Vec::new();
        for h in (0..k).filter(|h| h.gcd(&k) == 1) {
            let s_h = dedekind_sum_reciprocity(DedekindPair::new(h, k)?);
            let s_ph = dedekind_sum_reciprocity(DedekindPair::new(p * h % k, k)?);
            terms.push((h, (s_h - int(p as i64) * s_ph) / int(2)));
        }
        Ok(ApPhases { k, terms })
    }

    /// `(real part, |imaginary part|)` of `A_p(k, n)` before snapping.
    pub(crate) fn eval<T: Real>(&self, n: i64, cfg: &PrecisionConfig) -> (T, T) {
        let mut re = T::zero();
        let mut im = T::zero();
        for (h, base) in &self.terms {
            let z = exp_2pi_i::<T>(&(base - rat(*h as i64 * n, self.k as i64)), cfg);
            re = re + z.re;
            im = im + z.im;
        }
        (re, im.abs())
    }
}

/// `A_p(k, n) = Σ_{(h,k)=1} exp(πi(s(h,k) - p·s(ph,k)) - 2πihn/k)`, snapped to
/// an integer.
pub fn a_p<T: Real>(p: u64, k: u64, n: i64, cfg: &PrecisionConfig) -> Result<SnappedInteger<T>> {
    let (re, im) = ApPhases::new(p, k)?.eval::<T>(n, cfg);
    if im > T::from_f64(cfg.snap_tolerance, cfg) {
        return Err(Error::Precision(format!(
            "A_{p}({k}, {n}) has imaginary part {}",
            im.to_decimal(3)
        )));
    }
    let snapped = SnappedInteger::new(re, cfg)?;
    snapped.require(&format!("A_{p}({k}, {n})"), cfg)?;
    Ok(snapped)
}

fn factorial(m: u64) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `Φ_k(n) = (2π/k)^{(p-1)/2} p^{-p/2} A_p(k,n) (n + (p²-1)/24)^{(p-3)/2} / ((p-3)/2)!`.
pub fn phi_term<T: Real>(p: u64, k: u64, n: i64, cfg: &PrecisionConfig) -> Result<T> {
    let a = a_p::<T>(p, k, n, cfg)?;
    Ok(phi_from_a(p, k, n, &a.nearest, cfg))
}

fn phi_from_a<T: Real>(p: u64, k: u64, n: i64, a: &BigInt, cfg: &PrecisionConfig) -> T {
    let m = ((p - 3) / 2) as i32;
    let two_pi_k = T::from_i64(2, cfg) * T::pi(cfg) / T::from_i64(k as i64, cfg);
    // p^{-p/2} = p^{-(p-1)/2} / √p
    let pt = T::from_i64(p as i64, cfg);
    let p_part = T::one() / (pt.powi(m + 1) * pt.sqrt());
    let n_shift = T::from_i64(n + shift(p), cfg).powi(m);
    two_pi_k.powi(m + 1) * p_part * T::from_bigint(a, cfg) * n_shift
        / T::from_bigint(&factorial(m as u64), cfg)
}

/// Which estimate an [`ApproxReport`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApproxMethod {
    /// Truncated sum of singular-point terms `Σ_{k <= kmax, p∤k} Φ_k(n)`.
    Almkvist,
    /// Divisor-sum closed form `K_p Σ_{d | n'} (d|p) (n'/d)^{(p-3)/2}`.
    Garvan,
}

/// Largest `n` for which estimates carry the exact count.
pub const EXACT_LIMIT: usize = 5000;

/// An estimate of `a_p(n)`, with the exact value when it is cheap to obtain.
#[derive(Clone, Debug)]
pub struct ApproxReport<T> {
    pub p: u64,
    pub n: i64,
    pub method: ApproxMethod,
    pub kmax: Option<u64>,
    pub estimate: T,
    /// The estimate as an exact rational when the method produces one.
    pub exact_estimate: Option<Rational>,
    pub exact: Option<BigInt>,
    pub relative_error: Option<T>,
}

fn attach_exact<T: Real>(mut report: ApproxReport<T>, cfg: &PrecisionConfig) -> Result<ApproxReport<T>> {
    if report.n >= 0 && (report.n as usize) <= EXACT_LIMIT {
        let exact = pcore_count(report.p as u32, report.n as usize)?;
        let e = T::from_bigint(&exact, cfg);
        report.relative_error = Some(rel_dev(&report.estimate, &e));
        report.exact = Some(exact);
    }
    Ok(report)
}

/// `Σ_{k <= kmax, p∤k} Φ_k(n)`, summed in ascending `k`.
pub fn approx_almkvist<T: Real>(p: u64, n: i64, kmax: u64, cfg: &PrecisionConfig) -> Result<ApproxReport<T>> {
    require_prime_ge5(p)?;
    if kmax == 0 {
        return domain("kmax must be at least 1");
    }
    let mut estimate = T::zero();
    for k in (1..=kmax).filter(|k| k % p != 0) {
        estimate = estimate + phi_term::<T>(p, k, n, cfg)?;
    }
    attach_exact(
        ApproxReport {
            p,
            n,
            method: ApproxMethod::Almkvist,
            kmax: Some(kmax),
            estimate,
            exact_estimate: None,
            exact: None,
            relative_error: None,
        },
        cfg,
    )
}

/// `Σ_{d | m} (d|p) (m/d)^{(p-3)/2}`, an integer.
pub fn twisted_divisor_sum(p: u64, m: u64) -> Result<BigInt> {
    let e = ((p - 3) / 2) as usize;
    let mut total = BigInt::zero();
    for d in divisors(m)? {
        let chi = legendre(d as i64, p);
        if chi != 0 {
            total += BigInt::from(chi) * num_traits::pow(BigInt::from(m / d), e);
        }
    }
    Ok(total)
}

/// `K_p Σ_{d | n'} (d|p) (n'/d)^{(p-3)/2}` with `n' = n + (p²-1)/24` and
/// `K_p = 1/c_p`, estimating `a_p(n)` directly. `c_p` is the consensus of
/// [`cp_all`].
pub fn approx_garvan<T: Real>(p: u64, n: i64, cfg: &PrecisionConfig) -> Result<ApproxReport<T>> {
    let c_p = cp_all::<T>(p, cfg)?.consensus;
    approx_garvan_with(p, n, &c_p, cfg)
}

/// [`approx_garvan`] with a known `c_p`.
pub fn approx_garvan_with<T: Real>(p: u64, n: i64, c_p: &BigInt, cfg: &PrecisionConfig) -> Result<ApproxReport<T>> {
    require_prime_ge5(p)?;
    if n < 0 {
        return domain(format!("n must be non-negative, got {n}"));
    }
    if !c_p.is_positive() {
        return domain(format!("c_p must be positive, got {c_p}"));
    }
    let m = (n + shift(p)).to_u64().unwrap_or(0);
    let sum = twisted_divisor_sum(p, m)?;
    let value = Rational::new(sum, c_p.clone());
    attach_exact(
        ApproxReport {
            p,
            n,
            method: ApproxMethod::Garvan,
            kmax: None,
            estimate: T::from_rational(&value, cfg),
            exact_estimate: Some(value),
            exact: None,
            relative_error: None,
        },
        cfg,
    )
}
