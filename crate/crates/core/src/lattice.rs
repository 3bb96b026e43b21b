//! Lattice primitives behind every subgroup and kernel computation.
//!
//! All lattices here contain `diag(mods)·Z^n` for a known list of column
//! moduli, so entries are kept reduced column by column and never grow
//! beyond the moduli.

use crate::int::{egcd, gcd, reduce};
use crate::snf::smith_mod;

fn reduce_row(row: &mut [i64], mods: &[i64], from: usize) {
    for c in from..row.len() {
        row[c] = reduce(row[c] as i128, mods[c]);
    }
}

/// `(x, y) ← (a x + b y, c x + d y)` reduced column-wise.
fn mix(x: &[i64], y: &[i64], a: i64, b: i64, c: i64, d: i64, mods: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let mut nx = Vec::with_capacity(x.len());
    let mut ny = Vec::with_capacity(x.len());
    for col in 0..x.len() {
        let (p, q) = (x[col] as i128, y[col] as i128);
        nx.push(reduce(a as i128 * p + b as i128 * q, mods[col]));
        ny.push(reduce(c as i128 * p + d as i128 * q, mods[col]));
    }
    (nx, ny)
}

/// Canonical Hermite basis of `span(gens) + diag(mods)·Z^n`.
///
/// Returns `n` rows forming an upper-triangular basis; row `c` has pivot
/// `W[c][c]`, a divisor of `mods[c]`, and entries to the right reduced
/// modulo the pivot of their column. Equal lattices give equal output.
pub(crate) fn hnf(gens: &[Vec<i64>], mods: &[i64]) -> Vec<Vec<i64>> {
    let n = mods.len();
    let mut active: Vec<Vec<i64>> = gens
        .iter()
        .map(|g| {
            let mut r = g.clone();
            reduce_row(&mut r, mods, 0);
            r
        })
        .filter(|r| r.iter().any(|&x| x != 0))
        .collect();
    let mut basis: Vec<Vec<i64>> = Vec::with_capacity(n);
    for c in 0..n {
        let mut pivot: Option<Vec<i64>> = None;
        let mut rest = Vec::with_capacity(active.len() + 2);
        for row in active.drain(..) {
            if row[c] == 0 {
                rest.push(row);
                continue;
            }
            match pivot.take() {
                None => pivot = Some(row),
                Some(p) => {
                    let (g, u, v) = egcd(p[c], row[c]);
                    let (np, nr) = mix(&p, &row, u, v, -(row[c] / g), p[c] / g, mods);
                    if nr.iter().any(|&x| x != 0) {
                        rest.push(nr);
                    }
                    pivot = Some(np);
                }
            }
        }
        let m = mods[c];
        let w = match pivot {
            None => {
                let mut w = vec![0; n];
                w[c] = m;
                w
            }
            Some(p) => {
                let (g, u, _) = egcd(p[c], m);
                let mut w = vec![0; n];
                for col in c..n {
                    w[col] = reduce(u as i128 * p[col] as i128, mods[col]);
                }
                w[c] = g;
                // p = (p_c/g)·w + p', and m·e_c = (m/g)·w + d'
                let q = p[c] / g;
                let mut pp = vec![0; n];
                let mut dd = vec![0; n];
                for col in c + 1..n {
                    pp[col] = reduce(p[col] as i128 - q as i128 * w[col] as i128, mods[col]);
                    dd[col] = reduce(-((m / g) as i128) * w[col] as i128, mods[col]);
                }
                for r in [pp, dd] {
                    if r.iter().any(|&x| x != 0) {
                        rest.push(r);
                    }
                }
                w
            }
        };
        basis.push(w);
        active = rest;
    }
    canonicalize(&mut basis, mods);
    basis
}

fn canonicalize(basis: &mut [Vec<i64>], mods: &[i64]) {
    let n = mods.len();
    for c in 0..n {
        for j in c + 1..n {
            let piv = basis[j][j];
            let q = basis[c][j].div_euclid(piv);
            if q != 0 {
                let (head, tail) = basis.split_at_mut(j);
                let (rc, rj) = (&mut head[c], &tail[0]);
                for col in j..n {
                    rc[col] = reduce(rc[col] as i128 - q as i128 * rj[col] as i128, mods[col]);
                }
            }
        }
    }
}

/// Coordinates `z` with `x ≡ Σ z_c W[c]` (mod `diag(mods)`), or `None` if `x`
/// lies outside the lattice spanned by the Hermite basis `w`.
pub(crate) fn hnf_solve(w: &[Vec<i64>], mods: &[i64], x: &[i64]) -> Option<Vec<i64>> {
    let n = mods.len();
    let mut x: Vec<i64> = x.to_vec();
    reduce_row(&mut x, mods, 0);
    let mut z = vec![0; n];
    for c in 0..n {
        let piv = w[c][c];
        if x[c] % piv != 0 {
            return None;
        }
        let q = x[c] / piv;
        if q != 0 {
            z[c] = q;
            for col in c..n {
                x[col] = reduce(x[col] as i128 - q as i128 * w[c][col] as i128, mods[col]);
            }
        }
    }
    Some(z)
}

/// Kernel of `y ↦ (Σ_j y_j C[j][t] mod tmods[t])_t` on `⊕ Z/src_mods`.
///
/// `cmat` has one row per source coordinate. Each source relation must map
/// to zero. Returns generators of the kernel as reduced source vectors. The
/// targets are processed one functional at a time, so the working set never
/// exceeds one row per source coordinate.
pub(crate) fn kernel_of_functionals(src_mods: &[i64], cmat: &[Vec<i64>], tmods: &[i64]) -> Vec<Vec<i64>> {
    let r = src_mods.len();
    let mut rows: Vec<Vec<i64>> = (0..r)
        .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
        .collect();
    for (t, &mu) in tmods.iter().enumerate() {
        if mu == 1 || cmat.iter().all(|row| row[t] % mu == 0) {
            continue;
        }
        let mut vals: Vec<i64> = rows
            .iter()
            .map(|y| {
                let mut acc: i128 = 0;
                for (j, &yj) in y.iter().enumerate() {
                    if yj != 0 {
                        acc += yj as i128 * cmat[j][t] as i128;
                    }
                }
                reduce(acc, mu)
            })
            .collect();
        let mut star: Option<usize> = None;
        for i in 0..rows.len() {
            if vals[i] == 0 {
                continue;
            }
            match star {
                None => star = Some(i),
                Some(s) => {
                    let (a, b) = (vals[s], vals[i]);
                    let (g, u, v) = egcd(a, b);
                    let (ns, ni) = mix(&rows[s], &rows[i], u, v, -(b / g), a / g, src_mods);
                    rows[s] = ns;
                    rows[i] = ni;
                    vals[s] = g;
                    vals[i] = 0;
                }
            }
        }
        if let Some(s) = star {
            let lambda = mu / gcd(vals[s], mu);
            for (col, x) in rows[s].iter_mut().enumerate() {
                *x = reduce(*x as i128 * lambda as i128, src_mods[col]);
            }
        }
    }
    rows.retain(|y| y.iter().any(|&x| x != 0));
    rows
}

/// `Z^n / (rowspan(rows) + modulus·Z^n)` in invariant-factor form.
#[derive(Debug, Clone)]
pub(crate) struct Cokernel {
    /// Nontrivial invariant factors.
    pub factors: Vec<i64>,
    /// `n × k`: column `t` gives coordinate `t` of the class of `x`.
    pub to: Vec<Vec<i64>>,
    /// `k × n`: row `t` is a lift of the `t`-th canonical generator.
    pub from: Vec<Vec<i64>>,
}

impl Cokernel {
    pub fn new(rows: &[Vec<i64>], n: usize, modulus: i64) -> Cokernel {
        let ms = smith_mod(rows, n, modulus);
        let keep: Vec<usize> = (0..n).filter(|&t| ms.diag[t] != 1).collect();
        let factors = keep.iter().map(|&t| ms.diag[t]).collect();
        let to = (0..n)
            .map(|i| keep.iter().map(|&t| ms.v[i][t]).collect())
            .collect();
        let from = keep.iter().map(|&t| ms.vinv[t].clone()).collect();
        Cokernel { factors, to, from }
    }

    pub fn project(&self, x: &[i64]) -> Vec<i64> {
        (0..self.factors.len())
            .map(|t| {
                let mut acc: i128 = 0;
                for (i, &xi) in x.iter().enumerate() {
                    if xi != 0 {
                        acc += xi as i128 * self.to[i][t] as i128;
                    }
                }
                reduce(acc, self.factors[t])
            })
            .collect()
    }

    /// Lift of a canonical coordinate vector back to `Z^n`, reduced by `mods`.
    pub fn lift(&self, coords: &[i64], mods: &[i64]) -> Vec<i64> {
        let n = self.to.len();
        (0..n)
            .map(|i| {
                let mut acc: i128 = 0;
                for (t, &c) in coords.iter().enumerate() {
                    if c != 0 {
                        acc += c as i128 * self.from[t][i] as i128;
                    }
                }
                reduce(acc, mods[i])
            })
            .collect()
    }
}
