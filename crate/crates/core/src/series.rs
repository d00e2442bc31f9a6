//! Truncated integer power series: partition numbers, p-core counts, and
//! numeric evaluation of the products `F`, `f` and `H` inside the unit disk.

use std::ops::Mul;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};

use crate::arith::binomial;
use crate::error::{domain, Error, Result};
use crate::scalar::{cabs, cpowi, Cx, PrecisionConfig, Real};

/// Power series with big-integer coefficients, truncated after `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coefficients: Vec<BigInt>,
}

impl PowerSeries {
    /// `1 + 0x + … + 0x^order`.
    pub fn one(order: usize) -> Self {
        let mut coefficients = vec![BigInt::zero(); order + 1];
        coefficients[0] = BigInt::one();
        PowerSeries { coefficients }
    }

    pub fn from_coefficients(coefficients: Vec<BigInt>) -> Result<Self> {
        if coefficients.is_empty() {
            return domain("a power series needs at least one coefficient");
        }
        Ok(PowerSeries { coefficients })
    }

    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coeff(&self, n: usize) -> Option<&BigInt> {
        self.coefficients.get(n)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<BigInt> {
        self.coefficients
    }

    /// Multiplies in place by `(1 - x^m)^e`, expanding the binomial.
    pub fn mul_one_minus_pow(&mut self, m: usize, e: u32) {
        assert!(m > 0, "(1 - x^0) annihilates the series");
        let n = self.order();
        let terms: Vec<(usize, BigInt)> = (1..=e as usize)
            .take_while(|i| i * m <= n)
            .map(|i| {
                let c = binomial(e as u64, i as u64);
                (i * m, if i % 2 == 1 { -c } else { c })
            })
            .collect();
        if terms.is_empty() {
            return;
        }
        // Descending index so every read sees the original coefficient.
        for idx in (0..=n).rev() {
            let mut acc = BigInt::zero();
            for (shift, c) in &terms {
                if *shift > idx {
                    break;
                }
                let src = &self.coefficients[idx - shift];
                if !src.is_zero() {
                    acc += c * src;
                }
            }
            self.coefficients[idx] += acc;
        }
    }

    /// Divides in place by `(1 - x^m)`: a strided prefix sum.
    pub fn div_one_minus_pow(&mut self, m: usize) {
        assert!(m > 0, "(1 - x^0) is not invertible");
        for idx in m..=self.order() {
            let prev = self.coefficients[idx - m].clone();
            self.coefficients[idx] += prev;
        }
    }

    /// Evaluates the truncated polynomial at `x` by Horner's rule.
    pub fn eval<T: Real>(&self, x: &Cx<T>, cfg: &PrecisionConfig) -> Cx<T> {
        self.coefficients.iter().rev().fold(
            Complex::new(T::zero(), T::zero()),
            |acc, c| acc * x.clone() + Complex::new(T::from_bigint(c, cfg), T::zero()),
        )
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    /// Product truncated to the smaller of the two orders.
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let n = self.order().min(rhs.order());
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coefficients.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coefficients.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        PowerSeries { coefficients: out }
    }
}

/// `p(0..=order)` from Euler's pentagonal-number recurrence.
pub fn partition_series(order: usize) -> PowerSeries {
    let mut p = vec![BigInt::zero(); order + 1];
    p[0] = BigInt::one();
    for n in 1..=order {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let mut term = p[n - g1].clone();
            if g2 <= n {
                term += &p[n - g2];
            }
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[n] = acc;
    }
    PowerSeries { coefficients: p }
}

/// `Σ a_p(n) x^n = Π_j (1 - x^{pj})^p / (1 - x^j)` through `x^order`.
///
/// The numerator `Π_{pj <= order} (1 - x^{pj})^p` is expanded exactly and
/// convolved with the partition series. Any `p >= 2` is accepted.
pub fn pcore_series(p: u32, order: usize) -> Result<PowerSeries> {
    if p < 2 {
        return domain(format!("pcore_series needs p >= 2, got {p}"));
    }
    let step = p as usize;
    let mut numerator = PowerSeries::one(order);
    let mut m = step;
    while m <= order {
        numerator.mul_one_minus_pow(m, p);
        m += step;
    }
    Ok(&partition_series(order) * &numerator)
}

/// `a_p(n)`, the number of p-core partitions of `n`.
pub fn pcore_count(p: u32, n: usize) -> Result<BigInt> {
    Ok(pcore_series(p, n)?.coefficients.swap_remove(n))
}

/// Largest `n` accepted by [`pcore_count_bruteforce`].
pub const BRUTEFORCE_MAX_N: usize = 30;

/// Counts p-cores of `n` by enumerating partitions and their hook lengths.
pub fn pcore_count_bruteforce(p: u32, n: usize) -> Result<u64> {
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::Guard(format!(
            "brute-force enumeration limited to n <= {BRUTEFORCE_MAX_N}, got {n}"
        )));
    }
    if p < 1 {
        return domain("p must be positive");
    }
    let mut count = 0u64;
    let mut parts = Vec::with_capacity(n);
    enumerate_partitions(n, n, &mut parts, &mut |lambda| {
        if is_pcore(lambda, p as usize) {
            count += 1;
        }
    });
    Ok(count)
}

fn enumerate_partitions(rem: usize, max: usize, parts: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if rem == 0 {
        f(parts);
        return;
    }
    for part in (1..=rem.min(max)).rev() {
        parts.push(part);
        enumerate_partitions(rem - part, part, parts, f);
        parts.pop();
    }
}

/// Hook lengths of a partition given in weakly decreasing order, row-major.
pub fn hook_lengths(lambda: &[usize]) -> Vec<usize> {
    let width = lambda.first().copied().unwrap_or(0);
    // conjugate[j] = number of rows of length > j
    let conjugate: Vec<usize> = (0..width).map(|j| lambda.iter().filter(|&&l| l > j).count()).collect();
    let mut hooks = Vec::new();
    for (i, &row) in lambda.iter().enumerate() {
        for (j, &col) in conjugate.iter().enumerate().take(row) {
            hooks.push((row - j - 1) + (col - i - 1) + 1);
        }
    }
    hooks
}

fn is_pcore(lambda: &[usize], p: usize) -> bool {
    hook_lengths(lambda).iter().all(|h| h % p != 0)
}

/// Which infinite product to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaProduct {
    /// `F(x) = Π (1 - x^n)^{-1}`
    Partition,
    /// `f(x) = Π (1 - x^{pn})^p / (1 - x^n)`
    PCore,
    /// `H(x) = Π (1 - x^n)^p / (1 - x^{pn})`
    Weight,
}

/// Partial product together with a bound on its relative truncation error.
#[derive(Clone, Debug)]
pub struct EtaValue<T> {
    pub value: Cx<T>,
    /// Bound on `|full / partial - 1|`, including a rounding allowance.
    pub relative_error_bound: T,
}

/// Largest modulus accepted by [`eta_quotient_value`].
pub const ETA_MODULUS_GUARD: f64 = 0.95;

/// Evaluates `F`, `f` or `H` at `x` with `factors` factors.
///
/// The neglected factors satisfy `|log Π_{n>N}| <= W |x|^{N+1} / (1-|x|)^2`
/// with `W` the total exponent weight (`1` for `F`, `p + 1` otherwise), so the
/// relative error is at most `exp(that) - 1`.
pub fn eta_quotient_value<T: Real>(
    p: u32,
    x: &Cx<T>,
    factors: usize,
    which: EtaProduct,
    cfg: &PrecisionConfig,
) -> Result<EtaValue<T>> {
    if factors == 0 {
        return domain("need at least one factor");
    }
    if p < 2 {
        return domain(format!("p must be >= 2, got {p}"));
    }
    let modulus = cabs(x);
    if modulus >= T::one() {
        return domain(format!("|x| = {} is outside the unit disk", modulus.to_f64()));
    }
    if modulus > T::from_f64(ETA_MODULUS_GUARD, cfg) {
        return domain(format!(
            "|x| = {} exceeds the convergence guard {ETA_MODULUS_GUARD}",
            modulus.to_f64()
        ));
    }
    let one = Complex::new(T::one(), T::zero());
    let x_p = cpowi(x, p as u64);
    let mut x_n = one.clone();
    let mut x_pn = one.clone();
    let mut num = one.clone();
    let mut den = one.clone();
    for _ in 1..=factors {
        x_n = x_n * x.clone();
        x_pn = x_pn * x_p.clone();
        let a = one.clone() - x_n.clone();
        let b = one.clone() - x_pn.clone();
        match which {
            EtaProduct::Partition => den = den * a,
            EtaProduct::PCore => {
                num = num * cpowi(&b, p as u64);
                den = den * a;
            }
            EtaProduct::Weight => {
                num = num * cpowi(&a, p as u64);
                den = den * b;
            }
        }
    }
    let value = num / den;

    let weight = match which {
        EtaProduct::Partition => T::one(),
        _ => T::from_i64(p as i64 + 1, cfg),
    };
    let gap = T::one() - modulus.clone();
    let log_bound = weight * modulus.powi(factors as i32 + 1) / (gap.clone() * gap);
    let rounding = T::from_i64(8 * (factors as i64 + 1) * (p as i64 + 1), cfg) * T::epsilon(cfg);
    let relative_error_bound = log_bound.exp() - T::one() + rounding;
    Ok(EtaValue {
        value,
        relative_error_bound,
    })
}
