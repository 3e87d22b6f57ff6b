//! Polynomial helpers behind cyclotomic reduction.
//!
//! Polynomials are dense coefficient vectors in ascending degree order with a
//! nonzero last entry (empty = zero). Φ_n(x) is computed by the classic
//! recursion Φ_n = (x^n - 1) / prod_{d|n, d<n} Φ_d, with exact integer
//! division, and memoized: reduction runs once per multiplication, so the
//! table would otherwise be recomputed constantly.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Divisors of n in ascending order.
pub fn divisors(n: u32) -> Vec<u32> {
    assert!(n >= 1);
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(n: u32) -> u32 {
    assert!(n >= 1);
    let mut phi = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            phi -= phi / p;
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        phi -= phi / m;
    }
    phi
}

fn int_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn int_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    int_trim(&mut out);
    out
}

/// Exact division by a monic divisor; panics if the division leaves a
/// remainder (cyclotomic recursion guarantees it never does).
fn int_exact_div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(!den.is_empty() && den.last().unwrap().is_one());
    let mut rem: Vec<BigInt> = num.to_vec();
    int_trim(&mut rem);
    if rem.len() < den.len() {
        assert!(rem.is_empty(), "inexact polynomial division");
        return Vec::new();
    }
    let qlen = rem.len() - den.len() + 1;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + den.len() - 1].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, di) in den.iter().enumerate() {
            rem[k + i] -= &c * di;
        }
    }
    assert!(
        rem.iter().all(Zero::is_zero),
        "inexact polynomial division"
    );
    quot
}

/// The n-th cyclotomic polynomial Φ_n as ascending integer coefficients.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic_polynomial: n must be >= 1");
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^n - 1
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::from(1);
        // product of Phi_d over proper divisors
        let mut den = vec![BigInt::one()];
        for d in divisors(n) {
            if d < n {
                den = int_mul(&den, &cyclotomic_polynomial(d));
            }
        }
        int_exact_div_monic(&num, &den)
    };
    cache.lock().unwrap().insert(n, result.clone());
    result
}

pub fn rat_trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// In-place remainder of a rational polynomial modulo a monic integer
/// polynomial.
pub fn rat_rem_monic(poly: &mut Vec<BigRational>, modulus: &[BigInt]) {
    debug_assert!(!modulus.is_empty() && modulus.last().unwrap().is_one());
    rat_trim(poly);
    while poly.len() >= modulus.len() {
        let lead = poly.pop().unwrap();
        if lead.is_zero() {
            continue;
        }
        let k = poly.len() + 1 - modulus.len();
        for (i, mi) in modulus.iter().take(modulus.len() - 1).enumerate() {
            poly[k + i] -= &lead * BigRational::from(mi.clone());
        }
        rat_trim(poly);
    }
}

fn rat_divmod(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!den.is_empty(), "rat_divmod: division by zero polynomial");
    let mut rem: Vec<BigRational> = num.to_vec();
    rat_trim(&mut rem);
    if rem.len() < den.len() {
        return (Vec::new(), rem);
    }
    let qlen = rem.len() - den.len() + 1;
    let mut quot = vec![BigRational::zero(); qlen];
    let lead = den.last().unwrap();
    for k in (0..qlen).rev() {
        let c = &rem[k + den.len() - 1] / lead;
        if c.is_zero() {
            continue;
        }
        for (i, di) in den.iter().enumerate() {
            let t = &c * di;
            rem[k + i] -= t;
        }
        quot[k] = c;
    }
    rat_trim(&mut rem);
    rat_trim(&mut quot);
    (quot, rem)
}

fn rat_sub_mul(a: &[BigRational], q: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    // a - q*b
    let prod_len = if q.is_empty() || b.is_empty() {
        0
    } else {
        q.len() + b.len() - 1
    };
    let mut out = vec![BigRational::zero(); a.len().max(prod_len)];
    for (i, ai) in a.iter().enumerate() {
        out[i] = ai.clone();
    }
    for (i, qi) in q.iter().enumerate() {
        if qi.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = qi * bj;
            out[i + j] -= t;
        }
    }
    rat_trim(&mut out);
    out
}

/// Multiplicative inverse of `a` modulo the (irreducible, monic) polynomial
/// `modulus`, via the extended Euclidean algorithm over ℚ[x]. Returns `None`
/// for the zero polynomial.
pub fn rat_inverse_mod(a: &[BigRational], modulus: &[BigInt]) -> Option<Vec<BigRational>> {
    let mut r0: Vec<BigRational> = modulus
        .iter()
        .map(|c| BigRational::from(c.clone()))
        .collect();
    let mut r1: Vec<BigRational> = a.to_vec();
    rat_trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut t0: Vec<BigRational> = Vec::new();
    let mut t1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = rat_divmod(&r0, &r1);
        let t = rat_sub_mul(&t0, &q, &t1);
        r0 = std::mem::replace(&mut r1, r);
        t0 = std::mem::replace(&mut t1, t);
    }
    // the modulus is irreducible and deg a < deg modulus, so the gcd is a
    // nonzero constant
    assert_eq!(r0.len(), 1, "modulus must be irreducible");
    let c = r0.pop().unwrap();
    let mut inv: Vec<BigRational> = t0.into_iter().map(|t| t / &c).collect();
    rat_rem_monic(&mut inv, modulus);
    Some(inv)
}
