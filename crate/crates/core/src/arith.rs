//! Exact arithmetic number theory: Möbius function, Legendre symbol, sawtooth,
//! Dedekind sums, Ramanujan sums, Bernoulli numbers and polynomials.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn mobius(m: u64) -> Result<i8> {
    if m == 0 {
        return domain("mobius(0) is undefined");
    }
    let mut sign = 1i8;
    for (_, e) in factorize(m) {
        if e > 1 {
            return Ok(0);
        }
        sign = -sign;
    }
    Ok(sign)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub(crate) fn require_odd_prime(p: u64) -> Result<()> {
    if p == 2 || !is_prime(p) {
        return domain(format!("{p} is not an odd prime"));
    }
    Ok(())
}

pub(crate) fn require_prime_ge5(p: u64) -> Result<()> {
    if p < 5 || !is_prime(p) {
        return domain(format!("p must be a prime >= 5, got {p}"));
    }
    Ok(())
}

/// Legendre symbol for an already validated odd prime `p`.
pub(crate) fn legendre(a: i64, p: u64) -> i8 {
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Legendre symbol `(a|p)`; `p` must be an odd prime.
pub fn legendre_symbol(a: i64, p: u64) -> Result<i8> {
    require_odd_prime(p)?;
    Ok(legendre(a, p))
}

/// `((x))`: `x - floor(x) - 1/2` off the integers, `0` on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        return Rational::zero();
    }
    x - x.floor() - rat(1, 2)
}

/// Argument pair of a Dedekind sum: `0 <= h < k`, `gcd(h, k) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DedekindPair {
    h: u64,
    k: u64,
}

impl DedekindPair {
    pub fn new(h: u64, k: u64) -> Result<Self> {
        if k == 0 {
            return domain("Dedekind sum modulus must be positive");
        }
        if h >= k {
            return domain(format!("h = {h} must be reduced modulo k = {k}"));
        }
        if h.gcd(&k) != 1 {
            return domain(format!("gcd({h}, {k}) != 1"));
        }
        Ok(DedekindPair { h, k })
    }

    /// Pair for any integer `h` coprime to `k`, reducing `h` modulo `k`.
    pub fn reduced(h: i64, k: u64) -> Result<Self> {
        if k == 0 {
            return domain("Dedekind sum modulus must be positive");
        }
        Self::new(h.rem_euclid(k as i64) as u64, k)
    }

    pub fn h(&self) -> u64 {
        self.h
    }

    pub fn k(&self) -> u64 {
        self.k
    }
}

/// `s(h,k) = Σ_{j=1}^{k-1} ((j/k))((jh/k))`, from the defining sum.
///
/// Each term is `(2j - k)(2r - k) / 4k²` with `r = jh mod k`, so the whole sum
/// is accumulated over the integers and divided once.
pub fn dedekind_sum(pair: DedekindPair) -> Rational {
    let (h, k) = (pair.h as i128, pair.k as i128);
    let mut acc = BigInt::zero();
    let mut chunk: i128 = 0;
    for j in 1..k {
        let r = (j * h) % k;
        if r != 0 {
            chunk += (2 * j - k) * (2 * r - k);
        }
        if chunk.abs() > 1 << 100 {
            acc += BigInt::from(chunk);
            chunk = 0;
        }
    }
    acc += BigInt::from(chunk);
    Rational::new(acc, BigInt::from(4 * k * k))
}

/// Dedekind sum via the reciprocity law and Euclid's algorithm, O(log k).
/// Returns exactly the same rational as [`dedekind_sum`].
pub fn dedekind_sum_reciprocity(pair: DedekindPair) -> Rational {
    // s(h,k) = sign * s(h', k') + correction, unwound along the Euclidean chain.
    let mut h = BigInt::from(pair.h);
    let mut k = BigInt::from(pair.k);
    let mut total = Rational::zero();
    let mut sign = Rational::one();
    loop {
        h = h.mod_floor(&k);
        if h.is_zero() {
            // s(0, 1) = 0 is the only coprime case.
            break;
        }
        // s(h,k) = -s(k,h) - 1/4 + (h/k + k/h + 1/(hk)) / 12
        let hk = &h * &k;
        let corr = Rational::new(&h * &h + &k * &k + BigInt::one(), hk * 12) - rat(1, 4);
        total += &sign * corr;
        sign = -sign;
        std::mem::swap(&mut h, &mut k);
    }
    total
}

/// Ramanujan sum `c_k(n) = Σ_{d | gcd(n,k)} d·μ(k/d)`.
pub fn ramanujan_sum(k: u64, n: i64) -> Result<BigInt> {
    if k == 0 {
        return domain("Ramanujan sum needs k >= 1");
    }
    let g = (n.unsigned_abs()).gcd(&k);
    let mut total = BigInt::zero();
    for d in divisors(g)? {
        let mu = mobius(k / d)?;
        if mu != 0 {
            total += BigInt::from(d) * BigInt::from(mu);
        }
    }
    Ok(total)
}

/// All positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return domain("divisors(0) is undefined");
    }
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let existing = out.len();
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= p;
            for i in 0..existing {
                out.push(out[i] * pe);
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Binomial coefficient `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn bernoulli_table() -> &'static RwLock<Vec<Rational>> {
    static TABLE: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![Rational::one()]))
}

/// Bernoulli number `B_n` with `B_1 = -1/2`. Values are memoized.
pub fn bernoulli_number(n: usize) -> Rational {
    if let Some(b) = bernoulli_table().read().expect("bernoulli memo poisoned").get(n) {
        return b.clone();
    }
    let mut table = bernoulli_table().write().expect("bernoulli memo poisoned");
    // Another thread may have extended the table while we waited.
    while table.len() <= n {
        let m = table.len();
        if m > 1 && m % 2 == 1 {
            table.push(Rational::zero());
            continue;
        }
        // B_m = -1/(m+1) Σ_{i<m} C(m+1, i) B_i
        let mut acc = Rational::zero();
        let mut c = BigInt::one();
        for (i, b) in table.iter().enumerate() {
            if !b.is_zero() {
                acc += b * &c;
            }
            c = c * BigInt::from(m + 1 - i) / BigInt::from(i + 1);
        }
        table.push(-acc / BigInt::from(m + 1));
    }
    table[n].clone()
}

/// Bernoulli polynomial `B_n(x) = Σ_i C(n,i) B_i x^{n-i}`, exact.
pub fn bernoulli_poly(n: usize, x: &Rational) -> Rational {
    // Horner in x over the coefficients C(n,i) B_i, highest power first.
    let mut acc = Rational::zero();
    let mut c = BigInt::one();
    for i in 0..=n {
        acc = acc * x + bernoulli_number(i) * &c;
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `k^n (B_n(j/k) - B_n)`; an integer for `0 <= j < k`.
pub fn scaled_bernoulli_difference(n: usize, j: u64, k: u64) -> Result<BigInt> {
    if k == 0 || j >= k {
        return domain(format!("need 0 <= j < k, got j = {j}, k = {k}"));
    }
    let v = (bernoulli_poly(n, &rat(j as i64, k as i64)) - bernoulli_number(n))
        * num_traits::pow(BigInt::from(k), n);
    if !v.is_integer() {
        return Err(Error::Verification(format!(
            "k^n (B_n(j/k) - B_n) not integral for n = {n}, j = {j}, k = {k}"
        )));
    }
    Ok(v.to_integer())
}
