//! Brute-force reference computations on `Z/d_1 ⊕ … ⊕ Z/d_r`, written
//! without the library so its answers can be checked against them.
//!
//! The cyclic orders need not form a divisor chain. A map is an `r x r`
//! matrix `h` with `h[i][j]` the coefficient of `e_i` in `h(e_j)`.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

pub type Mat = Vec<Vec<i64>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grp {
    pub d: Vec<i64>,
}

/// Visits every point of `∏ 0..radices[k]` with digit 0 varying fastest,
/// reporting whether `Σ digit_k · cols[k]` vanishes modulo `moduli`.
/// Each column must be killed by its radix.
fn scan_kernel(radices: &[u64], cols: &[Vec<i64>], moduli: &[i64], mut visit: impl FnMut(bool)) {
    let sparse: Vec<Vec<(usize, i64)>> = cols
        .iter()
        .map(|c| {
            c.iter()
                .enumerate()
                .filter(|x| *x.1 != 0)
                .map(|(i, &v)| (i, v.rem_euclid(moduli[i])))
                .collect()
        })
        .collect();
    let mut v = vec![0i64; moduli.len()];
    let mut nonzero = 0usize;
    let mut digits = vec![0u64; radices.len()];
    loop {
        visit(nonzero == 0);
        let mut k = 0;
        loop {
            if k == radices.len() {
                return;
            }
            for &(i, c) in &sparse[k] {
                let old = v[i];
                let mut x = old + c;
                if x >= moduli[i] {
                    x -= moduli[i];
                }
                v[i] = x;
                nonzero = nonzero + usize::from(x != 0) - usize::from(old != 0);
            }
            digits[k] += 1;
            if digits[k] < radices[k] {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
    }
}

fn kernel_count(radices: &[u64], cols: &[Vec<i64>], moduli: &[i64]) -> u128 {
    if cols.iter().all(|c| c.iter().all(|&x| x == 0)) {
        return radices.iter().map(|&r| r as u128).product();
    }
    let mut n = 0u128;
    scan_kernel(radices, cols, moduli, |z| n += u128::from(z));
    n
}

impl Grp {
    pub fn new(d: &[i64]) -> Grp {
        Grp { d: d.to_vec() }
    }

    pub fn rank(&self) -> usize {
        self.d.len()
    }

    pub fn order(&self) -> usize {
        self.d.iter().map(|&x| x as usize).product()
    }

    pub fn exponent(&self) -> i64 {
        self.d.iter().fold(1, |a, &b| a / gcd(a, b) * b)
    }

    /// Elements in index order: coordinate 0 varies fastest.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::with_capacity(self.order());
        let mut m = vec![0i64; self.rank()];
        loop {
            out.push(m.clone());
            let mut k = 0;
            loop {
                if k == self.rank() {
                    return out;
                }
                m[k] += 1;
                if m[k] < self.d[k] {
                    break;
                }
                m[k] = 0;
                k += 1;
            }
        }
    }

    pub fn index(&self, m: &[i64]) -> usize {
        let mut idx = 0usize;
        for k in (0..self.rank()).rev() {
            idx = idx * self.d[k] as usize + m[k].rem_euclid(self.d[k]) as usize;
        }
        idx
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        (0..self.rank()).map(|i| (a[i] + b[i]).rem_euclid(self.d[i])).collect()
    }

    pub fn scale(&self, a: &[i64], k: i64) -> Vec<i64> {
        (0..self.rank()).map(|i| (a[i] * k).rem_euclid(self.d[i])).collect()
    }

    pub fn element_order(&self, a: &[i64]) -> i64 {
        let mut k = 1;
        while self.scale(a, k).iter().any(|&x| x != 0) {
            k += 1;
        }
        k
    }

    pub fn apply(&self, h: &Mat, m: &[i64]) -> Vec<i64> {
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|j| h[i][j] * m[j]).sum::<i64>().rem_euclid(self.d[i]))
            .collect()
    }

    /// `f ∘ g`.
    pub fn compose(&self, f: &Mat, g: &Mat) -> Mat {
        let r = self.rank();
        (0..r)
            .map(|i| (0..r).map(|k| (0..r).map(|j| f[i][j] * g[j][k]).sum::<i64>().rem_euclid(self.d[i])).collect())
            .collect()
    }

    pub fn commutator(&self, f: &Mat, g: &Mat) -> Mat {
        let (a, b) = (self.compose(f, g), self.compose(g, f));
        (0..self.rank())
            .map(|i| (0..self.rank()).map(|k| (a[i][k] - b[i][k]).rem_euclid(self.d[i])).collect())
            .collect()
    }

    pub fn is_zero_map(h: &Mat) -> bool {
        h.iter().all(|row| row.iter().all(|&x| x == 0))
    }

    /// Whether the matrix defines a homomorphism: `d_j h(e_j) = 0`.
    pub fn is_hom(&self, h: &Mat) -> bool {
        let r = self.rank();
        (0..r).all(|i| (0..r).all(|j| (self.d[j] * h[i][j]).rem_euclid(self.d[i]) == 0))
    }

    /// Least positive `y` with `d_j y = 0` in `Z/d_i`; the admissible
    /// values of entry `(i, j)` are its multiples.
    fn entry_step(&self, i: usize, j: usize) -> i64 {
        (1..=self.d[i]).find(|y| (self.d[j] * y) % self.d[i] == 0).expect("d_i itself qualifies")
    }

    fn entries(&self) -> Vec<(usize, usize, i64, u64)> {
        let r = self.rank();
        let mut out = Vec::new();
        for i in 0..r {
            for j in 0..r {
                let s = self.entry_step(i, j);
                if s < self.d[i] {
                    out.push((i, j, s, (self.d[i] / s) as u64));
                }
            }
        }
        out
    }

    pub fn end_order(&self) -> u128 {
        self.entries().iter().map(|e| e.3 as u128).product()
    }

    /// `|End_Z|` as prime exponents, for orders beyond `u128`.
    pub fn end_order_factored(&self) -> BTreeMap<u64, u32> {
        factored(self.entries().iter().map(|e| e.3))
    }

    /// Elementary matrices spanning `End_Z`.
    pub fn end_generators(&self) -> Vec<Mat> {
        let r = self.rank();
        self.entries()
            .into_iter()
            .map(|(i, j, s, _)| {
                let mut h = vec![vec![0; r]; r];
                h[i][j] = s;
                h
            })
            .collect()
    }

    /// Every endomorphism; only for small `End_Z`.
    pub fn end_elements(&self) -> Vec<Mat> {
        let r = self.rank();
        let entries = self.entries();
        let mut out = Vec::new();
        let mut digits = vec![0u64; entries.len()];
        loop {
            let mut h = vec![vec![0; r]; r];
            for (e, &k) in entries.iter().zip(&digits) {
                h[e.0][e.1] = e.2 * k as i64;
            }
            out.push(h);
            let mut k = 0;
            loop {
                if k == entries.len() {
                    return out;
                }
                digits[k] += 1;
                if digits[k] < entries[k].3 {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
        }
    }

    /// Nonzero commutators of pairs of generators.
    pub fn commutators(&self) -> Vec<Mat> {
        let gens = self.end_generators();
        let mut out = Vec::new();
        for a in 0..gens.len() {
            for b in a + 1..gens.len() {
                let c = self.commutator(&gens[a], &gens[b]);
                if !Self::is_zero_map(&c) {
                    out.push(c);
                }
            }
        }
        out
    }

    pub fn end_commutative(&self) -> bool {
        self.commutators().is_empty()
    }

    fn stacked_columns(&self, maps: &[Mat]) -> (Vec<Vec<i64>>, Vec<i64>) {
        let r = self.rank();
        let cols = (0..r).map(|k| maps.iter().flat_map(|c| (0..r).map(move |i| c[i][k])).collect()).collect();
        let moduli = maps.iter().flat_map(|_| self.d.iter().copied()).collect();
        (cols, moduli)
    }

    /// Elements killed by every map, as a mask over element indices.
    pub fn common_kernel(&self, maps: &[Mat]) -> Vec<bool> {
        let (cols, moduli) = self.stacked_columns(maps);
        let radices: Vec<u64> = self.d.iter().map(|&x| x as u64).collect();
        let mut mask = Vec::with_capacity(self.order());
        scan_kernel(&radices, &cols, &moduli, |z| mask.push(z));
        mask
    }

    pub fn common_kernel_count(&self, maps: &[Mat]) -> u128 {
        let (cols, moduli) = self.stacked_columns(maps);
        let radices: Vec<u64> = self.d.iter().map(|&x| x as u64).collect();
        kernel_count(&radices, &cols, &moduli)
    }

    /// `C(M)` over `Z`: elements on which all endomorphisms commute.
    pub fn center(&self) -> Vec<bool> {
        self.common_kernel(&self.commutators())
    }

    pub fn center_count(&self) -> u128 {
        self.common_kernel_count(&self.commutators())
    }

    pub fn in_center(&self, m: &[i64]) -> bool {
        self.commutators().iter().all(|c| self.apply(c, m).iter().all(|&x| x == 0))
    }

    /// The subgroup generated by `gens`, as a mask.
    pub fn span(&self, gens: &[Vec<i64>]) -> Vec<bool> {
        let mut mask = vec![false; self.order()];
        let zero = vec![0; self.rank()];
        mask[self.index(&zero)] = true;
        let mut members = vec![zero];
        for v in gens {
            if mask[self.index(v)] {
                continue;
            }
            let base = members.clone();
            let mut w = v.clone();
            while !mask[self.index(&w)] {
                for s in &base {
                    let x = self.add(s, &w);
                    mask[self.index(&x)] = true;
                    members.push(x);
                }
                w = self.add(&w, v);
            }
        }
        mask
    }

    /// The span of all `[f, g](m)`.
    pub fn commutator_image(&self) -> Vec<bool> {
        let r = self.rank();
        let mut gens = Vec::new();
        for c in self.commutators() {
            for k in 0..r {
                gens.push((0..r).map(|i| c[i][k]).collect());
            }
        }
        self.span(&gens)
    }

    /// Whether `h` commutes with every endomorphism.
    pub fn in_biend(&self, h: &Mat) -> bool {
        self.end_generators().iter().all(|f| Self::is_zero_map(&self.commutator(h, f)))
    }

    /// `|Biend_Z(M)|`, counted over all of `End_Z(M)`.
    pub fn biend_count(&self) -> u128 {
        let r = self.rank();
        let gens = self.end_generators();
        let entries = self.entries();
        let radices: Vec<u64> = entries.iter().map(|e| e.3).collect();
        let moduli: Vec<i64> = gens.iter().flat_map(|_| (0..r).flat_map(|i| (0..r).map(move |_| i))).map(|i| self.d[i]).collect();
        let cols: Vec<Vec<i64>> = entries
            .iter()
            .map(|&(i, j, s, _)| {
                let mut e = vec![vec![0; r]; r];
                e[i][j] = s;
                gens.iter().flat_map(|f| self.commutator(&e, f).into_iter().flatten()).collect()
            })
            .collect();
        kernel_count(&radices, &cols, &moduli)
    }

    /// `|M[t]|` by counting.
    pub fn torsion_count(&self, t: i64) -> usize {
        self.elements().iter().filter(|m| self.scale(m, t).iter().all(|&x| x == 0)).count()
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Number of homomorphisms `Z/a → Z/b`, by counting images of 1.
pub fn cyclic_hom_count(a: i64, b: i64) -> u128 {
    (0..b).filter(|y| (a * y) % b == 0).count() as u128
}

/// `|Hom(A, B)|` by counting images of generators.
pub fn hom_count(a: &Grp, b: &Grp) -> u128 {
    let mut n = 1u128;
    for &x in &a.d {
        for &y in &b.d {
            n *= cyclic_hom_count(x, y);
        }
    }
    n
}

/// `|Hom(A, B)|` as prime exponents.
pub fn hom_count_factored(a: &Grp, b: &Grp) -> BTreeMap<u64, u32> {
    factored(a.d.iter().flat_map(|&x| b.d.iter().map(move |&y| cyclic_hom_count(x, y) as u64)))
}

/// Prime factorization of a product of small numbers.
pub fn factored(xs: impl IntoIterator<Item = u64>) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    for mut x in xs {
        let mut p = 2;
        while x > 1 {
            while x % p == 0 {
                *out.entry(p).or_insert(0) += 1;
                x /= p;
            }
            p += 1;
        }
    }
    out
}

pub fn merge_factored(a: &mut BTreeMap<u64, u32>, b: &BTreeMap<u64, u32>) {
    for (&p, &e) in b {
        *a.entry(p).or_insert(0) += e;
    }
}

/// Divisor chains `d_1 | … | d_r` (all `d_i ≥ 2`) with `|End_Z| ≤ limit`,
/// the trivial group first.
pub fn chains_with_end_at_most(limit: u128) -> Vec<Vec<i64>> {
    fn grow(chain: &mut Vec<i64>, end: u128, limit: u128, out: &mut Vec<Vec<i64>>) {
        out.push(chain.clone());
        let last = chain.last().copied().unwrap_or(1);
        let prod: u128 = chain.iter().map(|&d| d as u128).product();
        let mut next = if chain.is_empty() { 2 } else { last };
        loop {
            // every earlier d_i divides the new factor
            let e = end * prod * prod * next as u128;
            if e > limit {
                return;
            }
            chain.push(next);
            grow(chain, e, limit, out);
            chain.pop();
            next += last;
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), 1, limit, &mut out);
    out
}

/// Divisor chains for every group of order at most `n`.
pub fn chains_of_order_at_most(n: usize) -> Vec<Vec<i64>> {
    fn grow(chain: &mut Vec<i64>, order: usize, n: usize, out: &mut Vec<Vec<i64>>) {
        out.push(chain.clone());
        let last = chain.last().copied().unwrap_or(1) as usize;
        let mut next = if chain.is_empty() { 2 } else { last };
        while order * next <= n {
            chain.push(next as i64);
            grow(chain, order * next, n, out);
            chain.pop();
            next += last;
        }
    }
    let mut out = Vec::new();
    grow(&mut Vec::new(), 1, n, &mut out);
    out.sort_by_key(|c| (c.iter().product::<i64>(), c.clone()));
    out
}

/// All subgroups of a small group, as element masks.
pub fn all_subgroups(g: &Grp) -> Vec<Vec<bool>> {
    let elems = g.elements();
    let zero = vec![false; g.order()];
    let mut start = zero;
    start[0] = true;
    let mut seen: BTreeSet<Vec<bool>> = BTreeSet::new();
    seen.insert(start.clone());
    let mut frontier = vec![start];
    while let Some(h) = frontier.pop() {
        let gens: Vec<Vec<i64>> = elems.iter().filter(|m| h[g.index(m)]).cloned().collect();
        for x in &elems {
            if h[g.index(x)] {
                continue;
            }
            let mut all = gens.clone();
            all.push(x.clone());
            let k = g.span(&all);
            if seen.insert(k.clone()) {
                frontier.push(k);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn mask_count(m: &[bool]) -> usize {
    m.iter().filter(|&&x| x).count()
}

pub fn mask_subset(a: &[bool], b: &[bool]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| !x || y)
}

/// Whether the subgroup is mapped into itself by every endomorphism.
pub fn is_fully_invariant(g: &Grp, n: &[bool]) -> bool {
    let gens = g.end_generators();
    g.elements().iter().filter(|m| n[g.index(m)]).all(|m| gens.iter().all(|f| n[g.index(&g.apply(f, m))]))
}

/// `tM`.
pub fn multiples(g: &Grp, t: i64) -> Vec<bool> {
    let mut mask = vec![false; g.order()];
    for m in g.elements() {
        mask[g.index(&g.scale(&m, t))] = true;
    }
    mask
}

/// `M[t]`.
pub fn torsion(g: &Grp, t: i64) -> Vec<bool> {
    g.elements().iter().map(|m| g.scale(m, t).iter().all(|&x| x == 0)).collect()
}

pub fn divisors(n: i64) -> Vec<i64> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// Every subgroup is `tM` for some `t`.
pub fn is_multiplication(g: &Grp, subs: &[Vec<bool>]) -> bool {
    let ts: Vec<Vec<bool>> = divisors(g.exponent()).into_iter().map(|t| multiples(g, t)).collect();
    subs.iter().all(|n| ts.contains(n))
}

/// Every subgroup is `M[t]` for some `t`.
pub fn is_comultiplication(g: &Grp, subs: &[Vec<bool>]) -> bool {
    let ts: Vec<Vec<bool>> = divisors(g.exponent()).into_iter().map(|t| torsion(g, t)).collect();
    subs.iter().all(|n| ts.contains(n))
}

/// Fully invariant subgroups: sums of the closures of single elements.
pub fn fully_invariant_subgroups(g: &Grp) -> Vec<Vec<bool>> {
    let gens = g.end_generators();
    let elems = g.elements();
    let closure = |seed: &[Vec<i64>]| -> Vec<bool> {
        let mut mask = g.span(seed);
        loop {
            let members: Vec<Vec<i64>> = elems.iter().filter(|m| mask[g.index(m)]).cloned().collect();
            let mut images = members.clone();
            for m in &members {
                for f in &gens {
                    images.push(g.apply(f, m));
                }
            }
            let next = g.span(&images);
            if next == mask {
                return mask;
            }
            mask = next;
        }
    };
    let mut out: BTreeSet<Vec<bool>> = BTreeSet::new();
    let cyclic: BTreeSet<Vec<bool>> = elems.iter().map(|m| closure(std::slice::from_ref(m))).collect();
    out.extend(cyclic.iter().cloned());
    loop {
        let current: Vec<Vec<bool>> = out.iter().cloned().collect();
        let mut grew = false;
        for a in &current {
            for b in &cyclic {
                let s: Vec<bool> = {
                    let gens: Vec<Vec<i64>> = elems.iter().filter(|m| a[g.index(m)] || b[g.index(m)]).cloned().collect();
                    g.span(&gens)
                };
                grew |= out.insert(s);
            }
        }
        if !grew {
            return out.into_iter().collect();
        }
    }
}

/// Invariant factors of a subgroup, read off from its torsion counts.
pub fn invariant_factors_of(g: &Grp, n: &[bool]) -> Vec<i64> {
    let elems: Vec<Vec<i64>> = g.elements().into_iter().filter(|m| n[g.index(m)]).collect();
    let order = elems.len() as i64;
    let mut primes = Vec::new();
    let mut x = order;
    let mut p = 2;
    while x > 1 {
        if x % p == 0 {
            primes.push(p);
            while x % p == 0 {
                x /= p;
            }
        }
        p += 1;
    }
    // per prime, cyclic summand exponents from |N[p^k]|
    let mut factors: Vec<i64> = Vec::new();
    for p in primes {
        let mut counts = vec![1usize];
        let mut pk = 1;
        loop {
            pk *= p;
            let c = elems.iter().filter(|m| g.scale(m, pk).iter().all(|&v| v == 0)).count();
            if c == *counts.last().unwrap() {
                break;
            }
            counts.push(c);
        }
        // number of summands of order ≥ p^k is log_p(counts[k] / counts[k-1])
        let logp = |mut v: usize| {
            let mut e = 0;
            while v > 1 {
                v /= p as usize;
                e += 1;
            }
            e
        };
        let at_least: Vec<usize> = (1..counts.len()).map(|k| logp(counts[k] / counts[k - 1])).collect();
        let mut exps = Vec::new();
        for k in 0..at_least.len() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..at_least[k] - next {
                exps.push(p.pow(k as u32 + 1));
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (i, e) in exps.into_iter().enumerate() {
            if i < factors.len() {
                factors[i] *= e;
            } else {
                factors.push(e);
            }
        }
    }
    factors.reverse();
    factors
}
