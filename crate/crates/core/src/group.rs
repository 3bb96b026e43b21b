use std::fmt;

use crate::error::{Error, Result};
use crate::hom::AbHom;
use crate::int::{factorize, lcm, reduce};
use crate::lattice::Cokernel;
use crate::matrix::Matrix;
use crate::snf::smith_diagonal;

/// A finite abelian group `Z/d_1 ⊕ … ⊕ Z/d_k` with `d_1 | d_2 | … | d_k`,
/// every `d_i >= 2`. The factor list is canonical, so isomorphism is
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbGroup {
    factors: Vec<i64>,
    order: u128,
}

/// An element of a [`FinAbGroup`], coordinate `i` reduced into `[0, d_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Vec<i64>);

impl Element {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FinAbGroup {
    /// Validates an invariant-factor sequence.
    pub fn new(factors: Vec<i64>) -> Result<Self> {
        for (i, &d) in factors.iter().enumerate() {
            if d < 2 {
                return Err(Error::InvalidGroup(format!("factor {d} at position {i} is below 2")));
            }
            if i > 0 && d % factors[i - 1] != 0 {
                return Err(Error::InvalidGroup(format!(
                    "{} does not divide {d}",
                    factors[i - 1]
                )));
            }
        }
        let order = factors.iter().fold(1u128, |acc, &d| acc.saturating_mul(d as u128));
        Ok(FinAbGroup { factors, order })
    }

    pub fn trivial() -> Self {
        FinAbGroup { factors: Vec::new(), order: 1 }
    }

    pub fn cyclic(n: i64) -> Result<Self> {
        if n == 1 {
            Ok(Self::trivial())
        } else {
            Self::new(vec![n])
        }
    }

    /// Canonical form of `Z/n_1 ⊕ … ⊕ Z/n_k` for arbitrary positive orders.
    pub fn from_cyclic_orders(orders: &[i64]) -> Result<Self> {
        if let Some(&bad) = orders.iter().find(|&&n| n < 1) {
            return Err(Error::InvalidGroup(format!("cyclic order {bad} is not positive")));
        }
        let modulus = orders.iter().try_fold(1, |acc, &n| lcm(acc, n))?;
        let rows: Vec<Vec<i64>> = (0..orders.len())
            .map(|i| (0..orders.len()).map(|j| if i == j { orders[i] } else { 0 }).collect())
            .collect();
        Self::new(Cokernel::new(&rows, orders.len(), modulus).factors)
    }

    pub fn factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// The order, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.order
    }

    /// Exponent (largest invariant factor, 1 for the trivial group).
    pub fn exponent(&self) -> i64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() <= 1
    }

    /// Reduces `coords` into an element.
    pub fn element(&self, coords: &[i64]) -> Result<Element> {
        if coords.len() != self.rank() {
            return Err(Error::ShapeMismatch(format!(
                "element has {} coordinates, group has rank {}",
                coords.len(),
                self.rank()
            )));
        }
        Ok(self.reduce(coords))
    }

    pub(crate) fn reduce(&self, coords: &[i64]) -> Element {
        Element(
            coords
                .iter()
                .zip(&self.factors)
                .map(|(&x, &d)| reduce(x as i128, d))
                .collect(),
        )
    }

    pub fn zero(&self) -> Element {
        Element(vec![0; self.rank()])
    }

    /// The `i`-th canonical generator.
    pub fn generator(&self, i: usize) -> Element {
        let mut v = vec![0; self.rank()];
        v[i] = 1;
        Element(v)
    }

    pub fn generators(&self) -> Vec<Element> {
        (0..self.rank()).map(|i| self.generator(i)).collect()
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        Element(
            (0..self.rank())
                .map(|i| reduce(x.0[i] as i128 + y.0[i] as i128, self.factors[i]))
                .collect(),
        )
    }

    pub fn neg(&self, x: &Element) -> Element {
        self.scale(x, -1)
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, x: &Element, c: i64) -> Element {
        Element(
            (0..self.rank())
                .map(|i| reduce(x.0[i] as i128 * c as i128, self.factors[i]))
                .collect(),
        )
    }

    /// Additive order of `x`.
    pub fn element_order(&self, x: &Element) -> i64 {
        x.0.iter()
            .zip(&self.factors)
            .map(|(&c, &d)| d / crate::int::gcd(c, d))
            .fold(1, |acc, o| lcm(acc, o).expect("orders divide the exponent"))
    }

    /// Every element, in mixed-radix order (first coordinate fastest).
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        let total = self.order;
        (0..total).map(move |mut idx| {
            let mut v = Vec::with_capacity(self.rank());
            for &d in &self.factors {
                v.push((idx % d as u128) as i64);
                idx /= d as u128;
            }
            Element(v)
        })
    }

    /// Multiplication by an integer as an endomorphism.
    pub fn scalar_hom(&self, c: i64) -> AbHom {
        AbHom::scalar(self, c)
    }

    /// The identity endomorphism.
    pub fn identity_hom(&self) -> AbHom {
        AbHom::scalar(self, 1)
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinAbGroup{:?}", self.factors)
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z/{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A group presented as `Z^g / rowspan(R)` together with the canonical
/// identification.
#[derive(Debug, Clone)]
pub struct PresentedGroup {
    group: FinAbGroup,
    cok: Cokernel,
}

impl PresentedGroup {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    /// Number of presentation generators.
    pub fn num_generators(&self) -> usize {
        self.cok.to.len()
    }

    /// Class of an integer vector in the canonical group.
    pub fn project(&self, x: &[i64]) -> Result<Element> {
        if x.len() != self.num_generators() {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} for {} generators",
                x.len(),
                self.num_generators()
            )));
        }
        Ok(Element(self.cok.project(x)))
    }

    /// An integer vector whose class is `e`.
    pub fn lift(&self, e: &Element) -> Vec<i64> {
        let m = vec![0; self.num_generators()];
        self.cok.lift(e.coords(), &m)
    }
}

/// The finite group `Z^g / rowspan(relations)`.
///
/// Fails with [`Error::InfiniteQuotient`] when the cokernel has a free part.
pub fn group_from_presentation(relations: &Matrix) -> Result<PresentedGroup> {
    let g = relations.cols();
    let diag = smith_diagonal(relations)?;
    let nonzero = diag.iter().filter(|&&d| d != 0).count();
    if nonzero < g {
        return Err(Error::InfiniteQuotient { free_rank: g - nonzero });
    }
    let exact: Vec<i64> = diag.iter().map(|d| d.abs()).filter(|&d| d != 1).collect();
    let modulus = exact.last().copied().unwrap_or(1);
    let cok = Cokernel::new(&relations.to_rows(), g, modulus);
    if cok.factors != exact {
        return Err(Error::InternalInconsistency(format!(
            "modular invariants {:?} disagree with exact {:?}",
            cok.factors, exact
        )));
    }
    Ok(PresentedGroup { group: FinAbGroup::new(exact)?, cok })
}

/// A direct sum with its canonical injections and projections.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub group: FinAbGroup,
    pub injections: Vec<AbHom>,
    pub projections: Vec<AbHom>,
}

/// `⊕ parts`, re-normalised into invariant-factor form.
pub fn direct_sum_group(parts: &[FinAbGroup]) -> Result<DirectSum> {
    if parts.is_empty() {
        return Err(Error::ShapeMismatch("direct sum of no groups".into()));
    }
    let orders: Vec<i64> = parts.iter().flat_map(|p| p.factors().iter().copied()).collect();
    let n = orders.len();
    let modulus = orders.iter().try_fold(1, |acc, &d| lcm(acc, d))?;
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { orders[i] } else { 0 }).collect())
        .collect();
    let cok = Cokernel::new(&rows, n, modulus);
    let group = FinAbGroup::new(cok.factors.clone())?;
    let mut injections = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for part in parts {
        let k = part.rank();
        let inj_cols: Vec<Vec<i64>> = (0..k)
            .map(|j| {
                let mut e = vec![0; n];
                e[offset + j] = 1;
                cok.project(&e)
            })
            .collect();
        injections.push(AbHom::from_columns(part, &group, &inj_cols)?);
        let proj_cols: Vec<Vec<i64>> = (0..group.rank())
            .map(|t| cok.from[t][offset..offset + k].to_vec())
            .collect();
        projections.push(AbHom::from_columns(&group, part, &proj_cols)?);
        offset += k;
    }
    Ok(DirectSum { group, injections, projections })
}

fn partitions(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=n.min(max)).rev() {
        prefix.push(part);
        partitions(n - part, part, prefix, out);
        prefix.pop();
    }
}

/// All abelian groups of order `n` up to isomorphism, cyclic first, then by
/// rank and lexicographic invariant factors.
pub fn abelian_groups_of_order(n: u64) -> Vec<FinAbGroup> {
    let primes = factorize(n);
    let mut per_prime: Vec<Vec<Vec<u32>>> = Vec::new();
    for &(_, e) in &primes {
        let mut out = Vec::new();
        partitions(e, e, &mut Vec::new(), &mut out);
        per_prime.push(out);
    }
    let mut groups = Vec::new();
    let mut choice = vec![0usize; primes.len()];
    loop {
        let rank = choice
            .iter()
            .enumerate()
            .map(|(i, &c)| per_prime[i][c].len())
            .max()
            .unwrap_or(0);
        // largest factor collects the largest part of every prime
        let mut factors = vec![1i64; rank];
        for (i, &c) in choice.iter().enumerate() {
            let p = primes[i].0 as i64;
            for (pos, &part) in per_prime[i][c].iter().enumerate() {
                factors[rank - 1 - pos] *= p.pow(part);
            }
        }
        groups.push(FinAbGroup::new(factors).expect("partition data is a divisor chain"));
        let mut i = 0;
        loop {
            if i == choice.len() {
                groups.sort_by(|a, b| (a.rank(), a.factors()).cmp(&(b.rank(), b.factors())));
                return groups;
            }
            choice[i] += 1;
            if choice[i] < per_prime[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// All abelian groups of order `1..=max_order`, ordered by order first.
pub fn abelian_groups_up_to(max_order: u64) -> Vec<FinAbGroup> {
    (1..=max_order).flat_map(abelian_groups_of_order).collect()
}
