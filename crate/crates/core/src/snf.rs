//! Smith normal form over the integers.
//!
//! One elimination engine serves two purposes. In exact mode it computes
//! `U·A·V = D` with checked arithmetic. In modular mode the row lattice is
//! understood to contain `modulus·Z^n`, so every entry may be reduced modulo
//! the modulus and nothing can grow; only the column transform (and its
//! inverse) is tracked, since that is all a change of generators needs.

use crate::error::{Error, Result};
use crate::int::{egcd, gcd, reduce};
use crate::matrix::Matrix;

/// Result of [`smith_normal_form`]: `u · a · v = d`.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub u: Matrix,
    pub d: Matrix,
    pub v: Matrix,
}

impl SmithForm {
    /// Diagonal entries `d_1 | d_2 | …` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)]).collect()
    }
}

/// Smith normal form of an arbitrary integer matrix.
///
/// Fails with [`Error::Overflow`] if a working entry or a returned transform
/// leaves the `i64` range; arithmetic never wraps.
pub fn smith_normal_form(a: &Matrix) -> Result<SmithForm> {
    let mut e = Engine::new(a.to_rows(), a.cols(), 0, true);
    let diag = e.run()?;
    let (m, n) = (a.rows(), a.cols());
    let mut d = Matrix::zeros(m, n);
    for (i, &x) in diag.iter().enumerate().take(m.min(n)) {
        d[(i, i)] = x;
    }
    Ok(SmithForm {
        u: Matrix::from_rows(&narrow(e.u.unwrap_or_default())?, m)?,
        d,
        v: Matrix::from_rows(&narrow(e.v)?, n)?,
    })
}

/// Invariant factors of an integer matrix, without tracking transforms.
///
/// Only the working matrix can overflow, so this succeeds on inputs where
/// the transforms of [`smith_normal_form`] would not fit in `i64`.
pub fn smith_diagonal(a: &Matrix) -> Result<Vec<i64>> {
    let mut e = Engine::new(a.to_rows(), a.cols(), 0, false);
    e.v.clear();
    e.run()
}

/// Smith form of the lattice `rowspan(rows) + modulus·Z^n`.
///
/// `diag[t]` divides `modulus` (a zero column yields `modulus`), and
/// `x ↦ x·v (mod diag)` identifies `Z^n / lattice` with `⊕ Z/diag[t]`;
/// row `t` of `vinv` is the preimage of the `t`-th cyclic generator.
#[derive(Debug, Clone)]
pub(crate) struct ModSmith {
    pub diag: Vec<i64>,
    pub v: Vec<Vec<i64>>,
    pub vinv: Vec<Vec<i64>>,
}

pub(crate) fn smith_mod(rows: &[Vec<i64>], n: usize, modulus: i64) -> ModSmith {
    debug_assert!(modulus >= 1);
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|&x| reduce(x as i128, modulus)).collect())
        .collect();
    let mut e = Engine::new(rows, n, modulus, false);
    let diag = e.run().expect("modular elimination cannot overflow");
    let narrow = |t: Vec<Vec<i128>>| t.into_iter().map(|r| r.into_iter().map(|x| x as i64).collect()).collect();
    ModSmith { diag, v: narrow(e.v), vinv: narrow(e.vinv) }
}

struct Engine {
    a: Vec<Vec<i64>>,
    n: usize,
    modulus: i64,
    u: Option<Vec<Vec<i128>>>,
    v: Vec<Vec<i128>>,
    vinv: Vec<Vec<i128>>,
}

/// `q` with `|x - q·p| <= |p|/2`.
fn nearest_quotient(x: i64, p: i64) -> i64 {
    let q = x.div_euclid(p);
    let r = x - q * p;
    if 2 * r > p.abs() {
        q + p.signum()
    } else {
        q
    }
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

/// Transforms are accumulated in `i128`; they must fit `i64` on return.
fn narrow(t: Vec<Vec<i128>>) -> Result<Vec<Vec<i64>>> {
    t.into_iter()
        .map(|r| r.into_iter().map(|x| i64::try_from(x).map_err(|_| Error::Overflow)).collect())
        .collect()
}

impl Engine {
    fn new(a: Vec<Vec<i64>>, n: usize, modulus: i64, track_u: bool) -> Self {
        let m = a.len();
        Engine {
            a,
            n,
            modulus,
            u: track_u.then(|| identity(m)),
            v: identity(n),
            vinv: if modulus > 0 { identity(n) } else { Vec::new() },
        }
    }

    /// `a·x + b·y` for transform entries, reduced in modular mode.
    fn mix(&self, a: i64, x: i128, b: i64, y: i128) -> Result<i128> {
        if self.modulus > 0 {
            return Ok(i128::from(reduce(a as i128 * x + b as i128 * y, self.modulus)));
        }
        (a as i128)
            .checked_mul(x)
            .zip((b as i128).checked_mul(y))
            .and_then(|(p, q)| p.checked_add(q))
            .ok_or(Error::Overflow)
    }

    fn combine(&self, a: i64, x: i64, b: i64, y: i64) -> Result<i64> {
        let val = a as i128 * x as i128 + b as i128 * y as i128;
        if self.modulus > 0 {
            Ok(reduce(val, self.modulus))
        } else {
            i64::try_from(val).map_err(|_| Error::Overflow)
        }
    }

    /// `(r_i, r_j) ← (a r_i + b r_j, c r_i + d r_j)`, unimodular.
    fn row_op(&mut self, i: usize, j: usize, a: i64, b: i64, c: i64, d: i64) -> Result<()> {
        for col in 0..self.n {
            let (x, y) = (self.a[i][col], self.a[j][col]);
            self.a[i][col] = self.combine(a, x, b, y)?;
            self.a[j][col] = self.combine(c, x, d, y)?;
        }
        if let Some(mut u) = self.u.take() {
            for col in 0..u[i].len() {
                let (x, y) = (u[i][col], u[j][col]);
                u[i][col] = self.mix(a, x, b, y)?;
                u[j][col] = self.mix(c, x, d, y)?;
            }
            self.u = Some(u);
        }
        Ok(())
    }

    /// `(c_i, c_j) ← (a c_i + b c_j, c c_i + d c_j)`, unimodular; updates `v` and `vinv`.
    fn col_op(&mut self, i: usize, j: usize, a: i64, b: i64, c: i64, d: i64) -> Result<()> {
        for r in 0..self.a.len() {
            let (x, y) = (self.a[r][i], self.a[r][j]);
            self.a[r][i] = self.combine(a, x, b, y)?;
            self.a[r][j] = self.combine(c, x, d, y)?;
        }
        for r in 0..self.v.len() {
            let (x, y) = (self.v[r][i], self.v[r][j]);
            self.v[r][i] = self.mix(a, x, b, y)?;
            self.v[r][j] = self.mix(c, x, d, y)?;
        }
        if self.vinv.is_empty() {
            return Ok(());
        }
        // inverse acts on rows: det * [[d, -c], [-b, a]]
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        debug_assert!(det == 1 || det == -1);
        let det = det as i64;
        for col in 0..self.n {
            let (x, y) = (self.vinv[i][col], self.vinv[j][col]);
            self.vinv[i][col] = self.mix(det * d, x, -det * c, y)?;
            self.vinv[j][col] = self.mix(-det * b, x, det * a, y)?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<()> {
        for x in self.a[i].iter_mut() {
            *x = x.checked_neg().ok_or(Error::Overflow)?;
        }
        if let Some(u) = self.u.as_mut() {
            u[i].iter_mut().for_each(|x| *x = -*x);
        }
        Ok(())
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in self.a.iter_mut() {
            r.swap(i, j);
        }
        for r in self.v.iter_mut() {
            r.swap(i, j);
        }
        if !self.vinv.is_empty() {
            self.vinv.swap(i, j);
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(u) = self.u.as_mut() {
            u.swap(i, j);
        }
    }

    fn select_pivot(&mut self, t: usize) -> bool {
        let mut best: Option<(usize, usize, u64)> = None;
        for i in t..self.a.len() {
            for j in t..self.n {
                let x = self.a[i][j].unsigned_abs();
                if x != 0 && best.is_none_or(|(_, _, b)| x < b) {
                    best = Some((i, j, x));
                }
            }
        }
        match best {
            Some((i, j, _)) => {
                self.swap_rows(t, i);
                self.swap_cols(t, j);
                true
            }
            None => false,
        }
    }

    /// Clears row and column `t` over Z by Euclidean steps, re-selecting the
    /// smallest entry as pivot so intermediate entries stay small.
    fn integer_pivot(&mut self, t: usize) -> Result<i64> {
        let m = self.a.len();
        loop {
            let p = self.a[t][t];
            let mut clean = true;
            for i in t + 1..m {
                let q = nearest_quotient(self.a[i][t], p);
                if q != 0 {
                    self.row_op(t, i, 1, 0, -q, 1)?;
                }
                clean &= self.a[i][t] == 0;
            }
            for j in t + 1..self.n {
                let q = nearest_quotient(self.a[t][j], p);
                if q != 0 {
                    self.col_op(t, j, 1, 0, -q, 1)?;
                }
                clean &= self.a[t][j] == 0;
            }
            if !clean {
                self.select_pivot(t);
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..self.n).any(|j| self.a[i][j] % p != 0));
            match bad {
                Some(i) => self.row_op(t, i, 1, 1, 0, 1)?,
                None => break,
            }
        }
        if self.a[t][t] < 0 {
            self.negate_row(t)?;
        }
        Ok(self.a[t][t])
    }

    fn run(&mut self) -> Result<Vec<i64>> {
        let m = self.a.len();
        let limit = if self.modulus > 0 { self.n } else { m.min(self.n) };
        let fill = if self.modulus > 0 { self.modulus } else { 0 };
        let mut diag = vec![fill; limit];
        for t in 0..limit {
            if t >= m || !self.select_pivot(t) {
                break;
            }
            if self.modulus == 0 {
                diag[t] = self.integer_pivot(t)?;
                continue;
            }
            loop {
                for i in t + 1..m {
                    let (p, x) = (self.a[t][t], self.a[i][t]);
                    if x != 0 && x % p == 0 {
                        self.row_op(t, i, 1, 0, -(x / p), 1)?;
                    } else if x != 0 {
                        let (g, u, v) = egcd(p, x);
                        self.row_op(t, i, u, v, -(x / g), p / g)?;
                    }
                }
                for j in t + 1..self.n {
                    let (p, x) = (self.a[t][t], self.a[t][j]);
                    if x != 0 && x % p == 0 {
                        self.col_op(t, j, 1, 0, -(x / p), 1)?;
                    } else if x != 0 {
                        let (g, u, v) = egcd(p, x);
                        self.col_op(t, j, u, v, -(x / g), p / g)?;
                    }
                }
                if (t + 1..m).any(|i| self.a[i][t] != 0) {
                    continue;
                }
                if self.modulus > 0 {
                    // the virtual row modulus·e_t merges with the pivot
                    self.a[t][t] = gcd(self.a[t][t], self.modulus);
                }
                let p = self.a[t][t];
                let bad = (t + 1..m)
                    .find(|&i| (t + 1..self.n).any(|j| self.a[i][j] % p != 0));
                match bad {
                    Some(i) => self.row_op(t, i, 1, 1, 0, 1)?,
                    None => break,
                }
            }
            if self.a[t][t] < 0 {
                self.negate_row(t)?;
            }
            diag[t] = self.a[t][t];
        }
        Ok(diag)
    }
}
