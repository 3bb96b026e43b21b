//! Small integer helpers shared by the lattice code.

use crate::error::{Error, Result};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i64
}

pub fn lcm(a: i64, b: i64) -> Result<i64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b)).checked_mul(b).map(i64::abs).ok_or(Error::Overflow)
}

/// Extended gcd: returns `(g, u, v)` with `u*a + v*b = g >= 0`.
pub fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    let (mut old_t, mut t) = (0i128, 1i128);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (old_r, old_s, old_t) = (-old_r, -old_s, -old_t);
    }
    (old_r as i64, old_s as i64, old_t as i64)
}

/// Least non-negative residue; `m == 0` leaves the value unchanged.
#[inline]
pub fn reduce(x: i128, m: i64) -> i64 {
    if m == 0 {
        x as i64
    } else {
        x.rem_euclid(m as i128) as i64
    }
}

/// `a*x + b*y mod m` without intermediate overflow for residues below 2^62.
#[inline]
pub fn lin2(a: i64, x: i64, b: i64, y: i64, m: i64) -> i64 {
    reduce(a as i128 * x as i128 + b as i128 * y as i128, m)
}

pub fn checked_lin2(a: i64, x: i64, b: i64, y: i64) -> Result<i64> {
    let v = a as i128 * x as i128 + b as i128 * y as i128;
    i64::try_from(v).map_err(|_| Error::Overflow)
}

/// Prime factorisation by trial division, as `(p, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: i64) -> Vec<i64> {
    factorize(n.unsigned_abs()).into_iter().map(|(p, _)| p as i64).collect()
}

/// Positive divisors in increasing order.
pub fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_squarefree(n: i64) -> bool {
    factorize(n.unsigned_abs()).iter().all(|&(_, e)| e == 1)
}
