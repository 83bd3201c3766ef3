//! Dense univariate polynomials over a prime field `F_p`.
//!
//! Coefficients are stored in ascending order of degree and the zero
//! polynomial is the empty vector. All functions expect canonical inputs
//! (coefficients in `[0, p)`, no trailing zeros) and return canonical
//! outputs.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Largest degree accepted by [`is_irreducible`] and [`irreducible_factors`].
pub const MAX_FACTOR_DEGREE: usize = 16;

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse of a nonzero residue modulo the prime `p`.
pub fn invmod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    powmod(a, p - 2, p)
}

pub fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn reduce(coeffs: &[u64], p: u64) -> Vec<u64> {
    trim(coeffs.iter().map(|c| c % p).collect())
}

pub fn degree(f: &[u64]) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn add(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let n = f.len().max(g.len());
    let out = (0..n)
        .map(|i| {
            let a = f.get(i).copied().unwrap_or(0);
            let b = g.get(i).copied().unwrap_or(0);
            ((a as u128 + b as u128) % p as u128) as u64
        })
        .collect();
    trim(out)
}

pub fn neg(f: &[u64], p: u64) -> Vec<u64> {
    f.iter().map(|&c| if c == 0 { 0 } else { p - c }).collect()
}

pub fn sub(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    add(f, &neg(g, p), p)
}

pub fn mul(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + a as u128 * b as u128) % p as u128) as u64;
        }
    }
    trim(out)
}

/// Euclidean division; panics on a zero divisor.
pub fn divrem(f: &[u64], g: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    assert!(!g.is_empty(), "division by the zero polynomial");
    let mut rem = f.to_vec();
    if f.len() < g.len() {
        return (Vec::new(), rem);
    }
    let dg = g.len() - 1;
    let lead_inv = invmod(g[dg], p);
    let mut quot = vec![0u64; f.len() - dg];
    for i in (0..quot.len()).rev() {
        let c = mulmod(rem[i + dg], lead_inv, p);
        quot[i] = c;
        if c == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            let t = mulmod(c, b, p);
            rem[i + j] = (rem[i + j] + p - t) % p;
        }
    }
    (trim(quot), trim(rem))
}

pub fn rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    divrem(f, g, p).1
}

pub fn monic(f: &[u64], p: u64) -> Vec<u64> {
    match f.last() {
        None => Vec::new(),
        Some(&lead) => {
            let inv = invmod(lead, p);
            f.iter().map(|&c| mulmod(c, inv, p)).collect()
        }
    }
}

/// Monic greatest common divisor (zero if both inputs are zero).
pub fn gcd(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut a = f.to_vec();
    let mut b = g.to_vec();
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// Monic least common multiple; zero if either input is zero.
pub fn lcm(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let d = gcd(f, g, p);
    monic(&mul(&divrem(f, &d, p).0, g, p), p)
}

pub fn derivative(f: &[u64], p: u64) -> Vec<u64> {
    let out = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mulmod(c, i as u64 % p, p))
        .collect();
    trim(out)
}

pub fn mulmod_poly(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), m, p)
}

/// `base^exp mod m` for a big exponent.
pub fn powmod_poly(base: &[u64], exp: &BigUint, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], m, p);
    let base = rem(base, m, p);
    for i in (0..exp.bits()).rev() {
        acc = mulmod_poly(&acc, &acc, m, p);
        if exp.bit(i) {
            acc = mulmod_poly(&acc, &base, m, p);
        }
    }
    acc
}

fn x_poly() -> Vec<u64> {
    vec![0, 1]
}

/// Rabin's test: `f` of degree `d` is irreducible iff `x^(p^d) = x mod f`
/// and `gcd(x^(p^i) - x, f) = 1` for every `i <= d / 2`.
///
/// Returns `None` when the degree exceeds [`MAX_FACTOR_DEGREE`].
pub fn is_irreducible(f: &[u64], p: u64) -> Option<bool> {
    let d = match degree(f) {
        None | Some(0) => return Some(false),
        Some(d) => d,
    };
    if d > MAX_FACTOR_DEGREE {
        return None;
    }
    let f = monic(f, p);
    let pb = BigUint::from(p);
    let x = x_poly();
    let mut h = rem(&x, &f, p);
    for i in 1..=d {
        h = powmod_poly(&h, &pb, &f, p);
        let diff = sub(&h, &rem(&x, &f, p), p);
        if i <= d / 2 && gcd(&diff, &f, p) != vec![1] {
            return Some(false);
        }
        if i == d {
            return Some(diff.is_empty());
        }
    }
    unreachable!()
}

/// `g` with `g(x)^p = f(x)`, valid when `f' = 0`.
fn pth_root(f: &[u64], p: u64) -> Vec<u64> {
    let step = p as usize;
    trim(f.iter().step_by(step).copied().collect())
}

fn distinct_degree(f: &[u64], p: u64) -> Vec<(Vec<u64>, usize)> {
    let pb = BigUint::from(p);
    let mut out = Vec::new();
    let mut f = f.to_vec();
    let x = x_poly();
    let mut h = rem(&x, &f, p);
    let mut i = 1;
    while degree(&f).unwrap_or(0) >= 2 * i {
        h = powmod_poly(&h, &pb, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            f = divrem(&f, &g, p).0;
            h = rem(&h, &f, p);
            out.push((g, i));
        }
        i += 1;
    }
    if degree(&f).unwrap_or(0) > 0 {
        let d = f.len() - 1;
        out.push((monic(&f, p), d));
    }
    out
}

fn equal_degree(g: &[u64], d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut BTreeSet<Vec<u64>>) {
    let n = g.len() - 1;
    if n == d {
        out.insert(monic(g, p));
        return;
    }
    let exp = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if degree(&a).unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = mulmod_poly(&t, &t, g, p);
                acc = add(&acc, &t, p);
            }
            acc
        } else {
            sub(&powmod_poly(&a, &exp, g, p), &[1], p)
        };
        let h = gcd(&b, g, p);
        let dh = degree(&h).unwrap_or(0);
        if dh > 0 && dh < n {
            let other = divrem(g, &h, p).0;
            equal_degree(&h, d, p, rng, out);
            equal_degree(&other, d, p, rng, out);
            return;
        }
    }
}

fn collect_factors(f: &[u64], p: u64, rng: &mut ChaCha8Rng, out: &mut BTreeSet<Vec<u64>>) {
    if degree(f).unwrap_or(0) == 0 {
        return;
    }
    let df = derivative(f, p);
    if df.is_empty() {
        collect_factors(&pth_root(f, p), p, rng, out);
        return;
    }
    let g = gcd(f, &df, p);
    let squarefree = monic(&divrem(f, &g, p).0, p);
    for (block, d) in distinct_degree(&squarefree, p) {
        equal_degree(&block, d, p, rng, out);
    }
    collect_factors(&g, p, rng, out);
}

/// The distinct monic irreducible factors of a nonzero polynomial.
///
/// Returns `None` when the degree exceeds [`MAX_FACTOR_DEGREE`].
pub fn irreducible_factors(f: &[u64], p: u64) -> Option<BTreeSet<Vec<u64>>> {
    let d = degree(f)?;
    if d > MAX_FACTOR_DEGREE {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p);
    let mut out = BTreeSet::new();
    collect_factors(&monic(f, p), p, &mut rng, &mut out);
    Some(out)
}
