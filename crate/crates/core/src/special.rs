//! Hurwitz zeta, periodic zeta and derivatives of the cotangent.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, Zero};

use crate::arith::{bernoulli_number, bernoulli_poly, int, rat, Rational};
use crate::error::{domain, Error, Result};
use crate::scalar::{frac, Cx, PrecisionConfig, Real};

/// Polynomial `f_r` with `|cot^(r)(x)| = f_r(cot x)` on `(0, π/2)`.
///
/// `f_1(t) = 1 + t²` and `f_{r+1}(t) = (1 + t²) f_r'(t)`; every coefficient is
/// a nonnegative integer and `deg f_r = r + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CotPolynomial {
    r: u32,
    /// `coefficients[i]` multiplies `t^i`.
    coefficients: Vec<BigInt>,
}

impl CotPolynomial {
    pub fn order(&self) -> u32 {
        self.r
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval<T: Real>(&self, t: &T, cfg: &PrecisionConfig) -> T {
        self.coefficients
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * t.clone() + T::from_bigint(c, cfg))
    }

    fn next(&self) -> CotPolynomial {
        // derivative, then multiply by 1 + t²
        let deriv: Vec<BigInt> = self
            .coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        let mut out = vec![BigInt::zero(); deriv.len() + 2];
        for (i, c) in deriv.iter().enumerate() {
            out[i] += c;
            out[i + 2] += c;
        }
        CotPolynomial {
            r: self.r + 1,
            coefficients: out,
        }
    }
}

pub fn cot_polynomial(r: u32) -> Result<CotPolynomial> {
    if r == 0 {
        return domain("cot_polynomial needs r >= 1");
    }
    let mut f = CotPolynomial {
        r: 1,
        coefficients: vec![BigInt::one(), BigInt::zero(), BigInt::one()],
    };
    for _ in 1..r {
        f = f.next();
    }
    Ok(f)
}

/// `cot(π q)` for rational `q` not an integer. `q` is reduced modulo 1 and
/// folded into `(0, 1/2]` exactly before anything is rounded.
pub fn cot_pi<T: Real>(q: &Rational, cfg: &PrecisionConfig) -> Result<T> {
    let y = frac(q);
    if y.is_zero() {
        return domain(format!("cot(pi*{q}) is a pole"));
    }
    let half = rat(1, 2);
    if y == half {
        return Ok(T::zero());
    }
    let (arg, sign) = if y > half { (int(1) - y, -1) } else { (y, 1) };
    let c = (T::pi(cfg) * T::from_rational(&arg, cfg)).cot();
    Ok(if sign < 0 { -c } else { c })
}

/// `cot^(r)(π q)`, the literal `r`-th derivative of `cot` at `x = π q`.
///
/// Uses `cot^(r)(x) = (-1)^r f_r(cot x)`.
pub fn cot_derivative<T: Real>(r: u32, q: &Rational, cfg: &PrecisionConfig) -> Result<T> {
    if !(q.is_positive() && *q < int(1)) {
        return domain(format!("cot_derivative needs 0 < q < 1, got {q}"));
    }
    cot_derivative_periodic(r, q, cfg)
}

/// Like [`cot_derivative`] but accepts any non-integer `q` (period 1 in `q`).
pub(crate) fn cot_derivative_periodic<T: Real>(
    r: u32,
    q: &Rational,
    cfg: &PrecisionConfig,
) -> Result<T> {
    let c: T = cot_pi(q, cfg)?;
    if r == 0 {
        return Ok(c);
    }
    let v = cot_polynomial(r)?.eval(&c, cfg);
    Ok(if r % 2 == 1 { -v } else { v })
}

/// Evaluates `cot^(r)` at several points sharing one polynomial.
pub(crate) struct CotDerivative {
    r: u32,
    poly: Option<CotPolynomial>,
}

impl CotDerivative {
    pub(crate) fn new(r: u32) -> Self {
        CotDerivative {
            r,
            poly: if r == 0 { None } else { cot_polynomial(r).ok() },
        }
    }

    pub(crate) fn at<T: Real>(&self, q: &Rational, cfg: &PrecisionConfig) -> Result<T> {
        let c: T = cot_pi(q, cfg)?;
        Ok(match &self.poly {
            None => c,
            Some(p) => {
                let v = p.eval(&c, cfg);
                if self.r % 2 == 1 {
                    -v
                } else {
                    v
                }
            }
        })
    }
}

/// Hurwitz zeta `ζ(s, a) = Σ_{n≥0} (n + a)^{-s}` for integer `s >= 2` and
/// `0 < a <= 1`.
///
/// Direct summation of `M = max(2s, decimal_digits)` terms, then the
/// Euler–Maclaurin tail: `(M+a)^{1-s}/(s-1) + (M+a)^{-s}/2` plus Bernoulli
/// corrections `B_{2j}/(2j)! · s(s+1)…(s+2j-2) · (M+a)^{-s-2j+1}`, added until
/// a correction drops below `10^-(decimal_digits+5)`.
pub fn hurwitz_zeta<T: Real>(s: u32, a: &Rational, cfg: &PrecisionConfig) -> Result<T> {
    if s < 2 {
        return domain(format!("hurwitz_zeta needs s >= 2, got {s}"));
    }
    if !(a.is_positive() && *a <= int(1)) {
        return domain(format!("hurwitz_zeta needs 0 < a <= 1, got {a}"));
    }
    let m = (2 * s).max(cfg.decimal_digits) as i64;
    let a_t = T::from_rational(a, cfg);
    let neg_s = -(s as i32);

    let mut sum = T::zero();
    for n in (0..m).rev() {
        sum = sum + (T::from_i64(n, cfg) + a_t.clone()).powi(neg_s);
    }

    let x = T::from_i64(m, cfg) + a_t;
    let x_inv = T::one() / x.clone();
    let x_inv2 = x_inv.clone() * x_inv.clone();
    let x_pow = x.powi(neg_s); // (M+a)^{-s}
    sum = sum + x_pow.clone() * x.clone() / T::from_i64(s as i64 - 1, cfg);
    sum = sum + x_pow.clone() / T::from_i64(2, cfg);

    let threshold = T::pow10_neg(cfg.decimal_digits + 5, cfg);
    // (M+a)^{-s-2j+1}, starting at j = 1.
    let mut power = x_pow * x_inv;
    // s(s+1)…(s+2j-2) / (2j)!, starting at j = 1: s / 2.
    let mut ratio = rat(s as i64, 2);
    let max_j = (3 * m as usize).max(50);
    for j in 1..=max_j {
        let coef = bernoulli_number(2 * j) * &ratio;
        let term = T::from_rational(&coef, cfg) * power.clone();
        sum = sum + term.clone();
        if term.abs() < threshold {
            return Ok(sum);
        }
        let jj = j as i64;
        let sj = s as i64;
        // advance to j+1: multiply by (s+2j-1)(s+2j) / ((2j+1)(2j+2))
        ratio *= rat((sj + 2 * jj - 1) * (sj + 2 * jj), (2 * jj + 1) * (2 * jj + 2));
        power = power * x_inv2.clone();
    }
    Err(Error::Precision(format!(
        "Euler-Maclaurin tail for zeta({s}, {a}) did not converge"
    )))
}

/// `ζ(-m, a) = -B_{m+1}(a)/(m+1)`, exact.
pub fn hurwitz_zeta_neg(m: u32, a: &Rational) -> Rational {
    -bernoulli_poly(m as usize + 1, a) / BigInt::from(m + 1)
}

/// `ζ(-m) = -B_{m+1}/(m+1)` for `m >= 1` and `ζ(0) = -1/2`, from the
/// memoized Bernoulli numbers.
fn riemann_zeta_nonpositive(m: u32) -> Rational {
    if m == 0 {
        return rat(-1, 2);
    }
    -bernoulli_number(m as usize + 1) / BigInt::from(m + 1)
}

/// Riemann zeta at an integer other than 1; exact (as a rational) for `n <= 0`.
pub fn riemann_zeta_int<T: Real>(n: i64, cfg: &PrecisionConfig) -> Result<T> {
    if n == 1 {
        return domain("zeta has a pole at 1");
    }
    if n <= 0 {
        return Ok(T::from_rational(&riemann_zeta_nonpositive((-n) as u32), cfg));
    }
    hurwitz_zeta(n as u32, &int(1), cfg)
}

/// Periodic zeta `l(s, x) = Σ_{n≥1} e^{2πinx} / n^s` for integer `s >= 2`.
///
/// With `x` reduced into `(-1/2, 1/2]` and `w = 2πix`, evaluates the
/// polylogarithm expansion
/// `Li_s(e^w) = Σ_{k≠s-1} ζ(s-k) w^k/k! + w^{s-1}/(s-1)! · (H_{s-1} - ln(-w))`,
/// which converges geometrically for `|w| <= π`.
pub fn periodic_zeta<T: Real>(s: u32, x: &Rational, cfg: &PrecisionConfig) -> Result<Cx<T>> {
    if s < 2 {
        return domain(format!("periodic_zeta needs s >= 2, got {s}"));
    }
    let mut y = frac(x);
    if y.is_zero() {
        return Ok(Complex::new(riemann_zeta_int(s as i64, cfg)?, T::zero()));
    }
    if y > rat(1, 2) {
        y -= int(1);
    }
    let pi = T::pi(cfg);
    let two_pi_y = T::from_i64(2, cfg) * pi.clone() * T::from_rational(&y, cfg);
    let w = Complex::new(T::zero(), two_pi_y.clone());
    let s_i = s as i64;

    // ln(-w) for w purely imaginary: |w| = 2π|y|, arg(-w) = -sign(y)·π/2.
    let half_pi = pi / T::from_i64(2, cfg);
    let arg = if y.is_positive() { -half_pi } else { half_pi };
    let ln_neg_w = Complex::new(two_pi_y.abs().ln(), arg);
    let harmonic: Rational = (1..s_i).map(|i| rat(1, i)).fold(Rational::zero(), |a, b| a + b);

    let threshold = T::pow10_neg(cfg.decimal_digits + 5, cfg);
    let mut total: Cx<T> = Complex::new(T::zero(), T::zero());
    let mut w_pow: Cx<T> = Complex::new(T::one(), T::zero()); // w^k / k!
    let mut small_run = 0;
    let mut k: i64 = 0;
    loop {
        if k == s_i - 1 {
            let h = Complex::new(T::from_rational(&harmonic, cfg), T::zero());
            total = total + w_pow.clone() * (h - ln_neg_w.clone());
        } else {
            let z = s_i - k;
            let zeta_val: Option<T> = if z >= 2 {
                Some(hurwitz_zeta(z as u32, &int(1), cfg)?)
            } else {
                let q = riemann_zeta_nonpositive((-z) as u32);
                (!q.is_zero()).then(|| T::from_rational(&q, cfg))
            };
            if let Some(zv) = zeta_val {
                let term = Complex::new(w_pow.re.clone() * zv.clone(), w_pow.im.clone() * zv);
                let mag = term.re.abs() + term.im.abs();
                total = total + term;
                if k > s_i && mag < threshold {
                    small_run += 1;
                    if small_run >= 2 {
                        return Ok(total);
                    }
                } else {
                    small_run = 0;
                }
            }
        }
        k += 1;
        if k > 40 * (cfg.decimal_digits as i64 + 20) {
            return Err(Error::Precision(format!(
                "polylog series for l({s}, {x}) did not converge"
            )));
        }
        let kt = T::from_i64(k, cfg);
        w_pow = Complex::new(w_pow.re / kt.clone(), w_pow.im / kt) * w.clone();
    }
}

/// Bernoulli-polynomial closed form of the real (even `s`) or imaginary
/// (odd `s`) part of `l(s, x)` for `0 <= x <= 1`.
pub fn periodic_zeta_bernoulli_part<T: Real>(s: u32, x: &Rational, cfg: &PrecisionConfig) -> T {
    // Σ cos(2πnx)/n^s = (-1)^{s/2+1} (2π)^s B_s(x) / (2 s!)       (s even)
    // Σ sin(2πnx)/n^s = (-1)^{(s+1)/2} (2π)^s B_s(x) / (2 s!)     (s odd)
    let sign = if s.is_multiple_of(2) {
        if (s / 2).is_multiple_of(2) {
            -1
        } else {
            1
        }
    } else if s.div_ceil(2).is_multiple_of(2) {
        1
    } else {
        -1
    };
    let fact: BigInt = (1..=s as u64).map(BigInt::from).product();
    let coef = bernoulli_poly(s as usize, x) / (fact * 2) * BigInt::from(sign);
    let two_pi = T::from_i64(2, cfg) * T::pi(cfg);
    T::from_rational(&coef, cfg) * two_pi.powi(s as i32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cabs, Mpf};

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    fn close(a: &Mpf, b: &Mpf, tol: f64) -> bool {
        (a.clone() - b.clone()).abs() <= Mpf::from_f64(tol, &cfg())
    }

    fn pi2() -> Mpf {
        let pi = Mpf::pi(&cfg());
        pi.clone() * pi
    }

    #[test]
    fn zeta_at_nonpositive_integers_matches_hurwitz_at_one() {
        for m in 0..40u32 {
            assert_eq!(riemann_zeta_nonpositive(m), hurwitz_zeta_neg(m, &int(1)), "m = {m}");
        }
        assert_eq!(riemann_zeta_nonpositive(1), rat(-1, 12));
    }

    #[test]
    fn cot_polynomial_examples() {
        let f1 = cot_polynomial(1).unwrap();
        assert_eq!(f1.coefficients(), &[BigInt::from(1), BigInt::from(0), BigInt::from(1)]);
        let f2 = cot_polynomial(2).unwrap();
        assert_eq!(
            f2.coefficients(),
            &[0, 2, 0, 2].map(BigInt::from)
        );
        for r in 1..=20 {
            let f = cot_polynomial(r).unwrap();
            assert_eq!(f.degree(), r as usize + 1);
            assert_eq!(f.order(), r);
            assert!(f.coefficients().iter().all(|c| !c.is_negative()));
        }
        assert!(cot_polynomial(0).is_err());
    }

    #[test]
    fn cot_derivative_examples() {
        let c = cfg();
        let v: Mpf = cot_derivative(0, &rat(1, 4), &c).unwrap();
        assert!(close(&v, &Mpf::one(), 1e-60));
        let v: Mpf = cot_derivative(1, &rat(1, 2), &c).unwrap();
        assert!(close(&v, &-Mpf::one(), 1e-60));
        let v: Mpf = cot_derivative(2, &rat(1, 4), &c).unwrap();
        assert!(close(&v, &Mpf::from_i64(4, &c), 1e-58));
        assert!(cot_derivative::<Mpf>(1, &int(0), &c).is_err());
        assert!(cot_derivative::<Mpf>(1, &int(1), &c).is_err());
        assert!(cot_derivative::<Mpf>(1, &rat(5, 4), &c).is_err());
    }

    #[test]
    fn cot_derivative_matches_central_differences() {
        let c = cfg();
        let h = Mpf::pow10_neg(10, &c);
        let two = Mpf::from_i64(2, &c);
        for r in 1..=10u32 {
            for j in 1..=3 {
                let q = rat(j, 7);
                let x = Mpf::pi(&c) * Mpf::from_rational(&q, &c);
                // cot^(r-1) evaluated off-grid through its polynomial.
                let prev = |x: Mpf| -> Mpf {
                    let cot = x.cot();
                    if r == 1 {
                        cot
                    } else {
                        let v = cot_polynomial(r - 1).unwrap().eval(&cot, &c);
                        if (r - 1) % 2 == 1 {
                            -v
                        } else {
                            v
                        }
                    }
                };
                let fd = (prev(x.clone() + h.clone()) - prev(x - h.clone())) / (two.clone() * h.clone());
                let exact: Mpf = cot_derivative(r, &q, &c).unwrap();
                let rel = crate::scalar::rel_dev(&fd, &exact);
                assert!(rel < Mpf::pow10_neg(8, &c), "r={r} j={j} rel={rel}");
            }
        }
    }

    #[test]
    fn abs_cot_derivative_decreasing_on_first_quarter() {
        let c = cfg();
        for r in 1..=12 {
            let f = cot_polynomial(r).unwrap();
            let mut last: Option<Mpf> = None;
            for j in 1..20 {
                let t: Mpf = cot_pi(&rat(j, 40), &c).unwrap();
                let v = f.eval(&t, &c);
                if let Some(prev) = last {
                    assert!(prev > v, "r={r} j={j}");
                }
                last = Some(v);
            }
        }
    }

    #[test]
    fn hurwitz_examples() {
        let c = cfg();
        let z: Mpf = hurwitz_zeta(2, &int(1), &c).unwrap();
        assert!(close(&z, &(pi2() / Mpf::from_i64(6, &c)), 1e-60));
        let z: Mpf = hurwitz_zeta(2, &rat(1, 2), &c).unwrap();
        assert!(close(&z, &(pi2() / Mpf::from_i64(2, &c)), 1e-59));
        let z: Mpf = hurwitz_zeta(2, &rat(1, 5), &c).unwrap();
        // Frozen from an independent 30-digit evaluation.
        let oracle = Mpf::parse("26.267377205423779123302466215", &c).unwrap();
        assert!(close(&z, &oracle, 1e-27), "{z}");
        assert!(hurwitz_zeta::<Mpf>(1, &int(1), &c).is_err());
        assert!(hurwitz_zeta::<Mpf>(2, &int(0), &c).is_err());
        assert!(hurwitz_zeta::<Mpf>(2, &rat(3, 2), &c).is_err());
    }

    /// Brute-force oracle: partial sum to N plus the integral tail bounds.
    fn brute_hurwitz(s: u32, a: f64) -> (f64, f64) {
        let n = 200_000;
        let partial: f64 = (0..n).rev().map(|k| (k as f64 + a).powi(-(s as i32))).sum();
        let x = n as f64 + a;
        let lower = partial + x.powi(1 - s as i32) / (s as f64 - 1.0);
        let upper = lower + x.powi(-(s as i32));
        (lower, upper)
    }

    #[test]
    fn hurwitz_against_brute_force() {
        let c = cfg();
        for s in 2..=4u32 {
            for (n, d) in [(1, 1), (1, 5), (2, 3), (7, 10)] {
                let z: Mpf = hurwitz_zeta(s, &rat(n, d), &c).unwrap();
                let (lo, hi) = brute_hurwitz(s, n as f64 / d as f64);
                let zf = z.to_f64();
                assert!(zf >= lo - 1e-9 && zf <= hi + 1e-9, "s={s} a={n}/{d}: {zf} not in [{lo}, {hi}]");
            }
        }
    }

    #[test]
    fn hurwitz_positive_and_decreasing() {
        let c = cfg();
        for s in 2..=6u32 {
            let mut last: Option<Mpf> = None;
            for j in 1..=12 {
                let z: Mpf = hurwitz_zeta(s, &rat(j, 12), &c).unwrap();
                assert!(z > Mpf::zero());
                if let Some(prev) = last {
                    assert!(prev > z);
                }
                last = Some(z);
            }
        }
    }

    #[test]
    fn hurwitz_multiplication_theorem() {
        let c = cfg();
        for s in 2..=5u32 {
            for k in 1..=5i64 {
                for a in [rat(1, 3), rat(1, 1), rat(5, 7)] {
                    let lhs = (0..k).fold(Mpf::zero(), |acc, j| {
                        let arg = (int(j) + &a) / int(k);
                        acc + hurwitz_zeta::<Mpf>(s, &arg, &c).unwrap()
                    }) * Mpf::from_i64(k, &c).powi(-(s as i32));
                    let rhs: Mpf = hurwitz_zeta(s, &a, &c).unwrap();
                    assert!(crate::scalar::rel_dev(&lhs, &rhs) < Mpf::pow10_neg(58, &c));
                }
            }
        }
    }

    #[test]
    fn f64_instantiation_agrees() {
        let c = cfg();
        let hi: Mpf = hurwitz_zeta(3, &rat(2, 7), &c).unwrap();
        let lo: f64 = hurwitz_zeta(3, &rat(2, 7), &c).unwrap();
        assert!((hi.to_f64() - lo).abs() / lo < 1e-14);
        let hi: Mpf = cot_derivative(5, &rat(3, 11), &c).unwrap();
        let lo: f64 = cot_derivative(5, &rat(3, 11), &c).unwrap();
        assert!((hi.to_f64() - lo).abs() / lo.abs() < 1e-12);
    }

    #[test]
    fn hurwitz_negative_examples() {
        assert_eq!(hurwitz_zeta_neg(0, &rat(2, 7)), rat(1, 2) - rat(2, 7));
        assert_eq!(hurwitz_zeta_neg(1, &int(1)), rat(-1, 12));
        assert_eq!(hurwitz_zeta_neg(2, &rat(1, 2)), int(0));
    }

    #[test]
    fn periodic_zeta_examples() {
        let c = cfg();
        let l: Cx<Mpf> = periodic_zeta(2, &int(0), &c).unwrap();
        assert!(close(&l.re, &(pi2() / Mpf::from_i64(6, &c)), 1e-59));
        assert!(l.im.is_zero());
        let l: Cx<Mpf> = periodic_zeta(2, &rat(1, 2), &c).unwrap();
        assert!(close(&l.re, &(-pi2() / Mpf::from_i64(12, &c)), 1e-59));
        assert!(l.im.abs() < Mpf::pow10_neg(59, &c));
        for s in 2..=6 {
            for (n, d) in [(1, 3), (2, 7), (5, 12)] {
                let a: Cx<Mpf> = periodic_zeta(s, &rat(n, d), &c).unwrap();
                let b: Cx<Mpf> = periodic_zeta(s, &rat(d - n, d), &c).unwrap();
                assert!(cabs(&(a - b.conj())) < Mpf::pow10_neg(58, &c));
            }
        }
    }

    #[test]
    fn periodic_zeta_matches_bernoulli_closed_form() {
        let c = cfg();
        for s in 2..=7u32 {
            for (n, d) in [(1, 3), (2, 7), (5, 12), (9, 10), (1, 97)] {
                let x = rat(n, d);
                let l: Cx<Mpf> = periodic_zeta(s, &x, &c).unwrap();
                let part = if s % 2 == 0 { &l.re } else { &l.im };
                let closed: Mpf = periodic_zeta_bernoulli_part(s, &x, &c);
                assert!(close(part, &closed, 1e-58), "s={s} x={x}: {part} vs {closed}");
            }
        }
    }

    #[test]
    fn periodic_zeta_brute_force_f64() {
        let c = cfg();
        for s in 2..=4u32 {
            for (n, d) in [(1, 3), (3, 8)] {
                let x = n as f64 / d as f64;
                let (mut re, mut im) = (0.0f64, 0.0f64);
                for m in (1..2_000_000u64).rev() {
                    let ang = 2.0 * std::f64::consts::PI * ((m * n as u64 % d as u64) as f64) / d as f64;
                    let w = (m as f64).powi(-(s as i32));
                    re += ang.cos() * w;
                    im += ang.sin() * w;
                }
                let l: Cx<Mpf> = periodic_zeta(s, &rat(n, d), &c).unwrap();
                let tail = 2.0 / (2_000_000f64).powi(s as i32 - 1);
                assert!((l.re.to_f64() - re).abs() < tail + 1e-12, "x={x}");
                assert!((l.im.to_f64() - im).abs() < tail + 1e-12, "x={x}");
            }
        }
    }
}
