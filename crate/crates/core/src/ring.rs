//! Finite rings given by structure constants on an additive group.
//!
//! Products follow the diagrammatic convention used by module actions:
//! `x·y` means "first `x`, then `y`", so a representation by maps satisfies
//! `rep(x·y) = rep(y) ∘ rep(x)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Element, FinAbGroup};
use crate::int::reduce;
use crate::lattice::kernel_of_functionals;
use crate::subgroup::Subgroup;

/// `Z` (modulus 0) or `Z/n` with `n >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScalarRing {
    modulus: i64,
}

impl ScalarRing {
    pub fn new(modulus: i64) -> Result<Self> {
        if modulus == 0 || modulus >= 2 {
            Ok(ScalarRing { modulus })
        } else {
            Err(Error::InvalidModulus(modulus))
        }
    }

    pub fn integers() -> Self {
        ScalarRing { modulus: 0 }
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    pub fn is_integers(&self) -> bool {
        self.modulus == 0
    }
}

impl fmt::Display for ScalarRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modulus == 0 {
            write!(f, "Z")
        } else {
            write!(f, "Z/{}", self.modulus)
        }
    }
}

/// Outcome of [`ring_validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingValidation {
    pub valid: bool,
    /// Description of the first violated condition.
    pub violation: Option<String>,
}

/// A finite ring: additive group, products of generators, and unit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinRing {
    additive: FinAbGroup,
    table: Vec<Vec<Element>>,
    one: Element,
}

impl FinRing {
    /// Builds and validates a ring; `table[s][t]` is `g_s · g_t`.
    pub fn new(additive: FinAbGroup, table: Vec<Vec<Vec<i64>>>, one: Vec<i64>) -> Result<Self> {
        let r = FinRing::from_parts_unchecked(additive, table, one)?;
        let v = ring_validate(&r);
        match v.violation {
            None => Ok(r),
            Some(msg) => Err(Error::InvalidRing(msg)),
        }
    }

    /// Builds a ring without checking the ring axioms; shapes are checked
    /// and coordinates reduced. Meant for harnesses that need to construct
    /// deliberately broken data.
    pub fn from_parts_unchecked(additive: FinAbGroup, table: Vec<Vec<Vec<i64>>>, one: Vec<i64>) -> Result<Self> {
        let k = additive.rank();
        if table.len() != k || table.iter().any(|row| row.len() != k) {
            return Err(Error::ShapeMismatch(format!("multiplication table must be {k}x{k}")));
        }
        let table = table
            .iter()
            .map(|row| row.iter().map(|e| additive.element(e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let one = additive.element(&one)?;
        Ok(FinRing { additive, table, one })
    }

    pub fn additive(&self) -> &FinAbGroup {
        &self.additive
    }

    pub fn order(&self) -> u128 {
        self.additive.order()
    }

    pub fn one(&self) -> &Element {
        &self.one
    }

    /// `g_s · g_t`.
    pub fn product_of_generators(&self, s: usize, t: usize) -> &Element {
        &self.table[s][t]
    }

    pub fn mult_table(&self) -> &[Vec<Element>] {
        &self.table
    }

    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let k = self.additive.rank();
        let f = self.additive.factors();
        let mut acc = vec![0i128; k];
        for (s, &xs) in x.coords().iter().enumerate() {
            if xs == 0 {
                continue;
            }
            for (t, &yt) in y.coords().iter().enumerate() {
                if yt == 0 {
                    continue;
                }
                let c = xs as i128 * yt as i128;
                for (i, &p) in self.table[s][t].coords().iter().enumerate() {
                    acc[i] = (acc[i] + c * p as i128) % f[i] as i128;
                }
            }
        }
        let v: Vec<i64> = acc.iter().zip(f).map(|(&a, &m)| reduce(a, m)).collect();
        self.additive.reduce(&v)
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        self.additive.add(x, y)
    }

    /// `xy − yx`.
    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        self.additive.sub(&self.mul(x, y), &self.mul(y, x))
    }

    /// Commutativity on generator pairs, which suffices by bilinearity.
    pub fn is_commutative(&self) -> bool {
        let k = self.additive.rank();
        (0..k).all(|s| (s + 1..k).all(|t| self.table[s][t] == self.table[t][s]))
    }

    /// The center `{r : rx = xr for all x}`.
    pub fn center(&self) -> Subgroup {
        let k = self.additive.rank();
        let f = self.additive.factors();
        // functional (t, i): coefficient i of x·g_t − g_t·x
        let mut tmods = Vec::with_capacity(k * k);
        for _ in 0..k {
            tmods.extend_from_slice(f);
        }
        let cmat: Vec<Vec<i64>> = (0..k)
            .map(|s| {
                let mut row = Vec::with_capacity(k * k);
                for t in 0..k {
                    let c = self.additive.sub(&self.table[s][t], &self.table[t][s]);
                    row.extend_from_slice(c.coords());
                }
                row
            })
            .collect();
        let gens = kernel_of_functionals(f, &cmat, &tmods);
        Subgroup::from_raw(&self.additive, &gens)
    }

    /// Commutators of generator pairs `[g_s, g_t]`, `s < t`.
    pub fn commutator_set(&self) -> Vec<Element> {
        let k = self.additive.rank();
        let mut out = Vec::new();
        for s in 0..k {
            for t in s + 1..k {
                out.push(self.additive.sub(&self.table[s][t], &self.table[t][s]));
            }
        }
        out
    }

    /// Additive span of all commutators; by bilinearity the generator
    /// commutators already span it.
    pub fn commutator_span(&self) -> Subgroup {
        Subgroup::generated(&self.additive, &self.commutator_set()).expect("elements of the additive group")
    }

    /// The ring with reversed multiplication.
    pub fn opposite(&self) -> FinRing {
        let k = self.additive.rank();
        let table = (0..k).map(|s| (0..k).map(|t| self.table[t][s].clone()).collect()).collect();
        FinRing { additive: self.additive.clone(), table, one: self.one.clone() }
    }

    /// Replaces the table by its symmetrisation `(x, y) ↦ g_s g_t` for
    /// `s <= t`. Produces a broken ring; used by the harness self-test.
    pub fn symmetrized_unchecked(&self) -> FinRing {
        let k = self.additive.rank();
        let table = (0..k)
            .map(|s| (0..k).map(|t| self.table[s.min(t)][s.max(t)].clone()).collect())
            .collect();
        FinRing { additive: self.additive.clone(), table, one: self.one.clone() }
    }
}

impl fmt::Debug for FinRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinRing(order {}, additive {}, one {})", self.order(), self.additive, self.one)
    }
}

/// Checks well-definedness, associativity on generator triples and the unit.
pub fn ring_validate(r: &FinRing) -> RingValidation {
    let fail = |msg: String| RingValidation { valid: false, violation: Some(msg) };
    let a = &r.additive;
    let k = a.rank();
    let d = a.factors();
    for s in 0..k {
        for t in 0..k {
            let p = &r.table[s][t];
            if !a.scale(p, d[s]).is_zero() || !a.scale(p, d[t]).is_zero() {
                return fail(format!("g{s}·g{t} = {p} is not killed by the orders of its factors"));
            }
        }
    }
    let gens = a.generators();
    for s in 0..k {
        for t in 0..k {
            for u in 0..k {
                let lhs = r.mul(&r.table[s][t], &gens[u]);
                let rhs = r.mul(&gens[s], &r.table[t][u]);
                if lhs != rhs {
                    return fail(format!("associativity fails on (g{s}, g{t}, g{u}): {lhs} vs {rhs}"));
                }
            }
        }
    }
    for (s, g) in gens.iter().enumerate() {
        if &r.mul(&r.one, g) != g || &r.mul(g, &r.one) != g {
            return fail(format!("unit {} does not act as identity on g{s}", r.one));
        }
    }
    RingValidation { valid: true, violation: None }
}

pub fn ring_is_commutative(r: &FinRing) -> bool {
    r.is_commutative()
}

pub fn ring_center(r: &FinRing) -> Subgroup {
    r.center()
}

/// `Z/n` presented with one generator `1`.
pub fn scalar_ring_as_finring(n: i64) -> Result<FinRing> {
    if n < 2 {
        return Err(Error::InvalidModulus(n));
    }
    FinRing::new(FinAbGroup::new(vec![n])?, vec![vec![vec![1]]], vec![1])
}

/// The ring of `n × n` matrices over `Z/q`, basis `E_ij` in row-major order,
/// with the ordinary product `E_ij E_kl = δ_jk E_il`.
pub fn matrix_ring(n: usize, q: i64) -> Result<FinRing> {
    let k = n * n;
    let additive = FinAbGroup::new(vec![q; k])?;
    let mut table = vec![vec![vec![0; k]; k]; k];
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                table[i * n + j][j * n + l][i * n + l] = 1;
            }
        }
    }
    let mut one = vec![0; k];
    for i in 0..n {
        one[i * n + i] = 1;
    }
    FinRing::new(additive, table, one)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_rings() {
        for n in [2, 4, 6] {
            let r = scalar_ring_as_finring(n).unwrap();
            assert!(ring_validate(&r).valid);
            assert!(r.is_commutative());
            assert!(r.center().is_whole());
        }
        assert_eq!(scalar_ring_as_finring(1).unwrap_err(), Error::InvalidModulus(1));
        assert!(ScalarRing::new(1).is_err());
        assert!(ScalarRing::new(0).unwrap().is_integers());
    }

    #[test]
    fn ill_defined_table_is_reported() {
        let a = FinAbGroup::new(vec![2]).unwrap();
        let r = FinRing::from_parts_unchecked(FinAbGroup::new(vec![2, 4]).unwrap(), vec![
            vec![vec![0, 1], vec![0, 0]],
            vec![vec![0, 0], vec![0, 1]],
        ], vec![0, 1])
        .unwrap();
        let v = ring_validate(&r);
        assert!(!v.valid);
        assert!(v.violation.unwrap().contains("g0·g0"));
        assert!(FinRing::new(a, vec![vec![vec![1]]], vec![1]).is_ok());
    }

    #[test]
    fn two_by_two_matrices_over_f2() {
        let r = matrix_ring(2, 2).unwrap();
        assert_eq!(r.order(), 16);
        assert!(!r.is_commutative());
        let c = r.center();
        assert_eq!(c.order(), 2);
        assert!(c.contains_element(r.one()));
        assert_eq!(r.commutator_span().order(), 8);
        assert!(!r.opposite().is_commutative());
    }

    #[test]
    fn center_and_commutators_match_brute_force() {
        let r = matrix_ring(2, 2).unwrap();
        let elems: Vec<Element> = r.additive().elements().collect();
        let brute: Vec<Element> = elems
            .iter()
            .filter(|x| elems.iter().all(|y| r.mul(x, y) == r.mul(y, x)))
            .cloned()
            .collect();
        let c = r.center();
        assert_eq!(brute.len() as u128, c.order());
        assert!(brute.iter().all(|x| c.contains_element(x)));
        let all: Vec<Element> = elems
            .iter()
            .flat_map(|x| elems.iter().map(move |y| (x, y)))
            .map(|(x, y)| r.commutator(x, y))
            .collect();
        let span = Subgroup::generated(r.additive(), &all).unwrap();
        assert_eq!(span, r.commutator_span());
    }

    #[test]
    fn symmetrized_table_breaks_noncommutative_rings() {
        let r = matrix_ring(2, 2).unwrap();
        assert!(r.symmetrized_unchecked().is_commutative());
    }
}
