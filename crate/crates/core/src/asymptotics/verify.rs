//! Sweeps and spot checks for the conjectured and proved identities.

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::constants::{parity_allows, t_sum};
use super::singular::{shift, ApPhases, SnappedInteger};
use crate::arith::{
    bernoulli_poly, binomial, dedekind_sum_reciprocity, divisors, int, legendre, rat, ramanujan_sum,
    require_prime_ge5, DedekindPair, Rational,
};
use crate::error::{domain, Error, Result};
use crate::scalar::{cabs, exp_2pi_i, rel_dev, PrecisionConfig, Real};
use crate::series::{eta_quotient_value, EtaProduct};
use crate::special::{hurwitz_zeta, CotDerivative};

/// Outcome of a parameter sweep.
#[derive(Clone, Debug)]
pub struct ConjectureReport<T> {
    /// Human-readable description of the swept ranges.
    pub ranges: String,
    pub cases: u64,
    pub counterexamples: Vec<String>,
    /// Largest snap residual seen, for sweeps with a numeric side.
    pub worst_residual: Option<T>,
}

impl<T> ConjectureReport<T> {
    pub fn pass(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// `A_p(k,n) = (k|p) c_k(n + (p²-1)/24)` for `k <= kmax` with `p ∤ k` and
/// `0 <= n <= nmax`.
pub fn verify_conjecture1<T: Real>(p: u64, kmax: u64, nmax: u64, cfg: &PrecisionConfig) -> Result<ConjectureReport<T>> {
    require_prime_ge5(p)?;
    let tol = T::from_f64(cfg.snap_tolerance, cfg);
    let mut report = ConjectureReport {
        ranges: format!("p = {p}, 1 <= k <= {kmax} with p ∤ k, 0 <= n <= {nmax}"),
        cases: 0,
        counterexamples: Vec::new(),
        worst_residual: Some(T::zero()),
    };
    for k in (1..=kmax).filter(|k| k % p != 0) {
        let phases = ApPhases::new(p, k)?;
        let chi = BigInt::from(legendre(k as i64, p));
        for n in 0..=nmax as i64 {
            let (re, im) = phases.eval::<T>(n, cfg);
            let a = SnappedInteger::new(re, cfg)?;
            let residual = if im > a.residual { im } else { a.residual.clone() };
            let rhs = &chi * ramanujan_sum(k, n + shift(p))?;
            if residual > tol || a.nearest != rhs {
                report.counterexamples.push(format!(
                    "k = {k}, n = {n}: A_p = {} (residual {}), (k|p) c_k = {rhs}",
                    a.raw.to_decimal(20),
                    residual.to_decimal(3)
                ));
            }
            if let Some(w) = &report.worst_residual {
                if residual > *w {
                    report.worst_residual = Some(residual);
                }
            }
            report.cases += 1;
        }
    }
    Ok(report)
}

/// `Δ = p·s(ph,k) - s(h,k) - (p²-1)h/(12k)` is an integer, even exactly when
/// `(k|p) = 1`; checked for `k <= kmax`, `gcd(k,p) = 1`, all `h` coprime to `k`.
pub fn verify_conjecture2<T>(p: u64, kmax: u64) -> Result<ConjectureReport<T>> {
    require_prime_ge5(p)?;
    let mut report = ConjectureReport {
        ranges: format!("p = {p}, 1 <= k <= {kmax} with gcd(k, p) = 1, 0 <= h < k coprime to k"),
        cases: 0,
        counterexamples: Vec::new(),
        worst_residual: None,
    };
    for k in (1..=kmax).filter(|k| k % p != 0) {
        let chi = legendre(k as i64, p);
        for h in (0..k).filter(|h| h.gcd(&k) == 1) {
            let delta = conjecture2_delta(p, h, k)?;
            report.cases += 1;
            if !delta.is_integer() {
                report.counterexamples.push(format!("k = {k}, h = {h}: Δ = {delta} is not an integer"));
                continue;
            }
            let even = delta.to_integer().is_even();
            if even != (chi == 1) {
                report
                    .counterexamples
                    .push(format!("k = {k}, h = {h}: Δ = {delta} but (k|p) = {chi}"));
            }
        }
    }
    Ok(report)
}

/// `p·s(ph mod k, k) - s(h,k) - (p²-1)h/(12k)`.
pub fn conjecture2_delta(p: u64, h: u64, k: u64) -> Result<Rational> {
    let s_ph = dedekind_sum_reciprocity(DedekindPair::new(p * h % k, k)?);
    let s_h = dedekind_sum_reciprocity(DedekindPair::new(h, k)?);
    Ok(int(p as i64) * s_ph - s_h - rat(((p * p - 1) * h) as i64, 12 * k as i64))
}

/// Partial sum of `Σ_k (k|p) c_k(n) / k^{1+s}` against its closed form.
#[derive(Clone, Debug)]
pub struct Prop21Report<T> {
    pub p: u64,
    pub s: u32,
    pub n: u64,
    pub kmax: u64,
    pub partial_sum: T,
    pub closed_form: T,
    pub deviation: T,
    /// `σ(n) kmax^{-s} / s`, a bound on the neglected terms.
    pub tail_bound: T,
    pub tolerance: T,
    pub pass: bool,
}

/// `Σ_{k<=kmax} (k|p) c_k(n)/k^{1+s}` vs
/// `p^{1+s} Σ_{d|n} (d|p) d^{-s} / Σ_j (j|p) ζ(1+s, j/p)`.
pub fn verify_prop21<T: Real>(p: u64, s: u32, n: u64, kmax: u64, cfg: &PrecisionConfig) -> Result<Prop21Report<T>> {
    require_prime_ge5(p)?;
    if s < 2 {
        return domain(format!("s must be at least 2 for absolute convergence, got {s}"));
    }
    if kmax == 0 {
        return domain("kmax must be at least 1");
    }
    let mut partial = T::zero();
    for k in 1..=kmax {
        let chi = legendre(k as i64, p);
        if chi == 0 {
            continue;
        }
        let c = ramanujan_sum(k, n as i64)?;
        if c.is_zero() {
            continue;
        }
        let term = T::from_bigint(&c, cfg) / T::from_i64(k as i64, cfg).powi(s as i32 + 1);
        partial = if chi == 1 { partial + term } else { partial - term };
    }

    let mut divisor_sum = Rational::zero();
    let mut sigma = 0u64;
    for d in divisors(n)? {
        sigma += d;
        let chi = legendre(d as i64, p);
        if chi != 0 {
            divisor_sum += int(chi as i64) / Rational::from_integer(num_traits::pow(BigInt::from(d), s as usize));
        }
    }
    let mut l_sum = T::zero();
    for j in 1..p {
        let z = hurwitz_zeta::<T>(s + 1, &rat(j as i64, p as i64), cfg)?;
        l_sum = if legendre(j as i64, p) == 1 { l_sum + z } else { l_sum - z };
    }
    let closed = T::from_i64(p as i64, cfg).powi(s as i32 + 1) * T::from_rational(&divisor_sum, cfg) / l_sum;

    let deviation = (partial.clone() - closed.clone()).abs();
    let tail_bound = T::from_i64(sigma as i64, cfg)
        / (T::from_i64(kmax as i64, cfg).powi(s as i32) * T::from_i64(s as i64, cfg));
    let tolerance = T::pow10_neg(cfg.decimal_digits.saturating_sub(15), cfg);
    Ok(Prop21Report {
        p,
        s,
        n,
        kmax,
        pass: deviation <= tail_bound.clone() + tolerance.clone(),
        partial_sum: partial,
        closed_form: closed,
        deviation,
        tail_bound,
        tolerance,
    })
}

/// Parameters of the modular transformation of the p-core generating function.
#[derive(Clone, Debug, PartialEq)]
pub struct TransformCase {
    pub p: u64,
    pub h: u64,
    pub k: u64,
    pub t: Rational,
    /// Number of product factors used on each side.
    pub factors: usize,
}

impl TransformCase {
    pub fn new(p: u64, h: u64, k: u64, t: Rational, factors: usize) -> Result<Self> {
        require_prime_ge5(p)?;
        if k == 0 || h >= k {
            return domain(format!("need 0 <= h < k, got h = {h}, k = {k}"));
        }
        if h.gcd(&k) != 1 || p.gcd(&k) != 1 {
            return domain(format!("need gcd(h, k) = gcd(p, k) = 1, got p = {p}, h = {h}, k = {k}"));
        }
        if !t.is_positive() {
            return domain(format!("t must be positive, got {t}"));
        }
        Ok(TransformCase { p, h, k, t, factors })
    }

    /// `B` with `B p h ≡ -1 (mod k)`; `0` when `k = 1`.
    pub fn b(&self) -> u64 {
        if self.k == 1 {
            return 0;
        }
        let k = self.k as i64;
        let ph = ((self.p * self.h) % self.k) as i64;
        let inv = ph.extended_gcd(&k).x.rem_euclid(k);
        ((k - inv) % k) as u64
    }
}

/// Which power of `t` multiplies the right-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExponentReading {
    /// `t^{-(p-1)/2}`
    Negative,
    /// `t^{(p-1)/2}`
    Positive,
}

#[derive(Clone, Debug)]
pub struct TransformReport<T> {
    pub case: TransformCase,
    pub b: u64,
    pub lhs: Complex<T>,
    pub rhs_negative: Complex<T>,
    pub rhs_positive: Complex<T>,
    /// `|lhs - rhs| / |lhs|` under each reading.
    pub deviation_negative: T,
    pub deviation_positive: T,
    /// Truncation bounds of both products plus a rounding allowance.
    pub error_budget: T,
    /// The reading whose deviation is smaller.
    pub empirical_reading: ExponentReading,
    /// Whether the `t^{-(p-1)/2}` reading holds within the budget.
    pub pass: bool,
}

/// Compares `f(e^{2πih/k - t})` with
/// `(2π/k)^{(p-1)/2} (k|p) p^{-p/2} t^{∓(p-1)/2} e^{(p²-1)t/24 - πi(p²-1)h/(12k)}
/// H(e^{2πiB/k - 4π²/(k²pt)})` under both exponent readings.
pub fn verify_theorem33<T: Real>(case: &TransformCase, cfg: &PrecisionConfig) -> Result<TransformReport<T>> {
    let (p, h, k) = (case.p, case.h, case.k);
    let b = case.b();
    let m = ((p - 1) / 2) as i32;
    let t = T::from_rational(&case.t, cfg);
    let pi = T::pi(cfg);
    let scale = |z: Complex<T>, s: &T| Complex::new(z.re * s.clone(), z.im * s.clone());

    let x1 = scale(exp_2pi_i::<T>(&rat(h as i64, k as i64), cfg), &(-t.clone()).exp());
    let lhs = eta_quotient_value(p as u32, &x1, case.factors, EtaProduct::PCore, cfg)?;

    let kt = T::from_i64(k as i64, cfg);
    let decay = -(T::from_i64(4, cfg) * pi.clone() * pi.clone())
        / (kt.clone() * kt.clone() * T::from_i64(p as i64, cfg) * t.clone());
    let x2 = scale(exp_2pi_i::<T>(&rat(b as i64, k as i64), cfg), &decay.exp());
    let weight = eta_quotient_value(p as u32, &x2, case.factors, EtaProduct::Weight, cfg)?;

    let pt = T::from_i64(p as i64, cfg);
    let two_pi_k = T::from_i64(2, cfg) * pi / kt;
    let growth = (T::from_i64((p * p - 1) as i64, cfg) * t.clone() / T::from_i64(24, cfg)).exp();
    let real_factor = two_pi_k.powi(m) * T::from_i64(legendre(k as i64, p) as i64, cfg)
        / (pt.powi(m) * pt.sqrt())
        * growth;
    let phase = exp_2pi_i::<T>(&-rat(((p * p - 1) * h) as i64, 24 * k as i64), cfg);
    let base = scale(phase * weight.value, &real_factor);
    let rhs_negative = scale(base.clone(), &(T::one() / t.powi(m)));
    let rhs_positive = scale(base, &t.powi(m));

    let lhs_abs = cabs(&lhs.value);
    let dev = |rhs: &Complex<T>| cabs(&(lhs.value.clone() - rhs.clone())) / lhs_abs.clone();
    let deviation_negative = dev(&rhs_negative);
    let deviation_positive = dev(&rhs_positive);
    let e1 = lhs.relative_error_bound;
    let e2 = weight.relative_error_bound;
    let error_budget = e1.clone() + e2.clone() + e1 * e2 + T::pow10_neg(cfg.decimal_digits.saturating_sub(15), cfg);
    Ok(TransformReport {
        case: case.clone(),
        b,
        lhs: lhs.value,
        empirical_reading: if deviation_negative <= deviation_positive {
            ExponentReading::Negative
        } else {
            ExponentReading::Positive
        },
        pass: deviation_negative <= error_budget,
        rhs_negative,
        rhs_positive,
        deviation_negative,
        deviation_positive,
        error_budget,
    })
}

/// The sample cotangent/Bernoulli identity for a quadratic-residue sum.
#[derive(Clone, Debug)]
pub struct IntroReport<T> {
    pub r: u64,
    pub p: u64,
    /// `√p 2^{-(r+1)} Σ_{j <= (p-1)/2} cot^(r)(πj²/p)`
    pub lhs: SnappedInteger<T>,
    /// `-(-1)^{[(r+1)/2]} (-1|p) p^{r+1} (r+1)^{-1} Σ_{j <= (p-1)/2} B_{r+1}(frac(j²/p))`
    pub rhs: Rational,
    /// `|(|lhs| - |rhs|)| / |rhs|`.
    pub magnitude_deviation: T,
    /// Sign of `lhs / rhs` as observed; `0` when either side vanishes.
    pub relative_sign: i8,
    pub pass: bool,
}

/// Evaluates both sides of the sample identity for `p ≡ 3 (mod 4)`, even
/// `r >= 2` with `gcd(p, r+1) = 1`, the range on which it is coherent.
pub fn verify_intro_identity<T: Real>(r: u64, p: u64, cfg: &PrecisionConfig) -> Result<IntroReport<T>> {
    require_prime_ge5(p)?;
    if p % 4 != 3 || r < 2 || !r.is_multiple_of(2) || (r + 1).is_multiple_of(p) {
        return domain(format!(
            "the sample identity needs p ≡ 3 (mod 4), even r >= 2, gcd(p, r+1) = 1; got r = {r}, p = {p}"
        ));
    }
    let half = (p - 1) / 2;
    let cot = CotDerivative::new(r as u32);
    let mut sum = T::zero();
    let mut bsum = Rational::zero();
    for j in 1..=half {
        let q = rat((j * j % p) as i64, p as i64);
        sum = sum + cot.at::<T>(&q, cfg)?;
        bsum += bernoulli_poly(r as usize + 1, &q);
    }
    let lhs_raw = T::from_i64(p as i64, cfg).sqrt() * sum
        / T::from_bigint(&num_traits::pow(BigInt::from(2), r as usize + 1), cfg);
    let sign = if r.div_ceil(2).is_multiple_of(2) { -1 } else { 1 };
    let rhs = int(sign * legendre(-1, p) as i64) * Rational::from_integer(num_traits::pow(BigInt::from(p), r as usize + 1))
        / int(r as i64 + 1)
        * bsum;

    let lhs = SnappedInteger::new(lhs_raw, cfg)?;
    if !lhs.is_snapped(cfg) {
        return Err(Error::Verification(format!(
            "left side for r = {r}, p = {p} is not an integer: {}",
            lhs.raw.to_decimal(25)
        )));
    }
    let rhs_abs = T::from_rational(&rhs.abs(), cfg);
    let magnitude_deviation = rel_dev(&lhs.raw.abs(), &rhs_abs);
    let lhs_sign = lhs.nearest.sign();
    let rhs_sign = if rhs.is_positive() {
        1
    } else if rhs.is_negative() {
        -1
    } else {
        0
    };
    let relative_sign = match lhs_sign {
        num_bigint::Sign::Plus => rhs_sign,
        num_bigint::Sign::Minus => -rhs_sign,
        num_bigint::Sign::NoSign => 0,
    };
    Ok(IntroReport {
        r,
        p,
        pass: magnitude_deviation <= T::pow10_neg(cfg.decimal_digits / 2, cfg),
        lhs,
        rhs,
        magnitude_deviation,
        relative_sign,
    })
}

/// One tabulated value of `T(r, p)`.
#[derive(Clone, Debug)]
pub struct Remark31Row {
    pub r: u64,
    pub t: Rational,
    pub integer: bool,
    /// `p | T(r,p)`, for integer values.
    pub divisible_by_p: Option<bool>,
    /// `T(r,p) = 0` because the parity condition fails.
    pub parity_zero: bool,
    /// `r ≡ (p-3)/2 (mod p-1)`, where divisibility is not expected.
    pub exceptional: bool,
}

#[derive(Clone, Debug)]
pub struct Remark31Report {
    pub p: u64,
    pub rmax: u64,
    pub rows: Vec<Remark31Row>,
    /// Rows violating: `p | T(r,p)` for non-zero integer `T` with
    /// `gcd(p, r+1) = 1` and `r` not exceptional.
    pub divisibility_violations: Vec<u64>,
    pub first_non_integer: Option<u64>,
    /// `C(p,2) - 1`.
    pub predicted_first_non_integer: u64,
    /// `None` when `rmax` is too small to decide.
    pub first_non_integer_matches: Option<bool>,
}

impl Remark31Report {
    pub fn pass(&self) -> bool {
        self.divisibility_violations.is_empty() && self.first_non_integer_matches != Some(false)
    }
}

/// Tabulates `T(r, p)` for `1 <= r <= rmax` and checks the divisibility and
/// first-non-integer observations.
pub fn remark31_scan(p: u64, rmax: u64) -> Result<Remark31Report> {
    require_prime_ge5(p)?;
    let e = (p - 3) / 2;
    let predicted: u64 = binomial(p, 2).try_into().map_err(|_| Error::Domain("p too large".into()))?;
    let predicted = predicted - 1;
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    let mut first = None;
    let pb = BigInt::from(p);
    for r in 1..=rmax {
        let t = t_sum(r, p)?;
        let integer = t.is_integer();
        if !integer && first.is_none() {
            first = Some(r);
        }
        let divisible = integer.then(|| (t.to_integer() % &pb).is_zero());
        let exceptional = r % (p - 1) == e % (p - 1);
        if integer && !t.is_zero() && (r + 1) % p != 0 && !exceptional && divisible == Some(false) {
            violations.push(r);
        }
        rows.push(Remark31Row {
            r,
            parity_zero: !parity_allows(p, r + 1),
            t,
            integer,
            divisible_by_p: divisible,
            exceptional,
        });
    }
    let matches = match first {
        Some(f) => Some(f == predicted),
        None if rmax >= predicted => Some(false),
        None => None,
    };
    Ok(Remark31Report {
        p,
        rmax,
        rows,
        divisibility_violations: violations,
        first_non_integer: first,
        predicted_first_non_integer: predicted,
        first_non_integer_matches: matches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{legendre_symbol, mobius};
    use crate::scalar::Mpf;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    #[test]
    fn conjecture1_examples() {
        let c = cfg();
        let rep = verify_conjecture1::<Mpf>(5, 30, 30, &c).unwrap();
        assert!(rep.pass(), "{:?}", rep.counterexamples);
        assert!(rep.worst_residual.unwrap() < Mpf::pow10_neg(30, &c));
        assert_eq!(rep.cases, 24 * 31);
        let rep = verify_conjecture1::<Mpf>(7, 1, 3, &c).unwrap();
        assert!(rep.pass() && rep.cases == 4);
    }

    #[test]
    fn conjecture2_examples() {
        let d = conjecture2_delta(5, 1, 7).unwrap();
        assert!(d.is_integer() && d.to_integer().is_odd());
        assert_eq!(legendre_symbol(7, 5).unwrap(), -1);
        assert_eq!(conjecture2_delta(5, 0, 1).unwrap(), int(0));
        for p in [5, 7, 11, 13] {
            let rep = verify_conjecture2::<Mpf>(p, 60).unwrap();
            assert!(rep.pass(), "p = {p}: {:?}", rep.counterexamples);
        }
    }

    #[test]
    fn prop21_examples() {
        let c = cfg();
        let rep = verify_prop21::<Mpf>(5, 2, 1, 10_000, &c).unwrap();
        assert!(rep.pass && rep.deviation.to_f64() < 1e-7);
        let rep = verify_prop21::<Mpf>(7, 3, 6, 2_000, &c).unwrap();
        assert!(rep.pass);
        assert!(verify_prop21::<Mpf>(7, 1, 6, 10, &c).is_err());
    }

    #[test]
    fn prop21_at_n1_is_reciprocal_l_value() {
        let c = cfg();
        let (p, s) = (5u64, 2u32);
        let mut inv_l = Mpf::zero();
        for k in 1..=3000u64 {
            let w = mobius(k).unwrap() as i64 * legendre(k as i64, p) as i64;
            if w != 0 {
                inv_l = inv_l + Mpf::from_i64(w, &c) / Mpf::from_i64(k as i64, &c).powi(3);
            }
        }
        let rep = verify_prop21::<Mpf>(p, s, 1, 3000, &c).unwrap();
        assert!((rep.partial_sum - inv_l).abs() < Mpf::pow10_neg(50, &c));
    }

    #[test]
    fn theorem33_examples() {
        let c = cfg();
        for (p, h, k, t) in [(5, 1, 2, rat(1, 2)), (7, 2, 3, rat(3, 5)), (5, 0, 1, rat(1, 2))] {
            let case = TransformCase::new(p, h, k, t, 400).unwrap();
            let rep = verify_theorem33::<Mpf>(&case, &c).unwrap();
            assert!(rep.pass, "{case:?}");
            assert!(rep.deviation_negative.to_f64() <= 1e-12);
            assert_eq!(rep.empirical_reading, ExponentReading::Negative);
            assert!(rep.deviation_positive.to_f64() > 1e-3);
        }
    }

    #[test]
    fn theorem33_case_validation_and_b() {
        assert!(TransformCase::new(5, 1, 5, rat(1, 2), 10).is_err());
        assert!(TransformCase::new(5, 2, 4, rat(1, 2), 10).is_err());
        assert!(TransformCase::new(5, 1, 2, rat(0, 1), 10).is_err());
        for (p, h, k) in [(5u64, 1u64, 2u64), (7, 2, 3), (13, 1, 4), (11, 3, 7)] {
            let case = TransformCase::new(p, h, k, rat(1, 2), 10).unwrap();
            assert_eq!((case.b() * p * h + 1) % k, 0);
        }
        assert_eq!(TransformCase::new(5, 0, 1, rat(1, 2), 10).unwrap().b(), 0);
    }

    #[test]
    fn theorem33_guard() {
        let c = cfg();
        // |x| = e^{-0.01} > 0.95
        let case = TransformCase::new(5, 1, 2, rat(1, 100), 50).unwrap();
        assert!(matches!(verify_theorem33::<Mpf>(&case, &c), Err(Error::Domain(_))));
    }

    #[test]
    fn intro_identity_examples() {
        let c = cfg();
        let rep = verify_intro_identity::<Mpf>(2, 7, &c).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.lhs.nearest.abs(), BigInt::from(8));
        assert_eq!(rep.rhs.abs(), int(8));
        assert_eq!(rep.relative_sign, -1);
        let rep = verify_intro_identity::<Mpf>(2, 11, &c).unwrap();
        assert!(rep.pass);
        assert_eq!(Rational::from_integer(rep.lhs.nearest.abs()), t_sum(2, 11).unwrap().abs());
        assert!(verify_intro_identity::<Mpf>(4, 7, &c).unwrap().pass);
        assert!(verify_intro_identity::<Mpf>(1, 5, &c).is_err());
        assert!(verify_intro_identity::<Mpf>(3, 7, &c).is_err());
    }

    #[test]
    fn remark31_examples() {
        let rep = remark31_scan(5, 12).unwrap();
        assert_eq!(rep.first_non_integer, Some(9));
        assert_eq!(rep.first_non_integer_matches, Some(true));
        assert!(rep.pass());
        let row1 = &rep.rows[0];
        assert_eq!(row1.t, int(1));
        assert!(row1.exceptional && row1.divisible_by_p == Some(false));
        let rep = remark31_scan(7, 4).unwrap();
        assert_eq!(rep.rows[3].divisible_by_p, Some(true));
        assert!(!rep.rows[3].t.is_zero());
        assert_eq!(rep.first_non_integer_matches, None);
    }
}
