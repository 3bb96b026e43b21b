use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::group::{Element, FinAbGroup};
use crate::hom::AbHom;
use crate::int::{divisors, prime_divisors, reduce};
use crate::lattice::{hnf, hnf_solve, kernel_of_functionals, Cokernel};
use crate::matrix::Matrix;

/// Below this many elements intersections are computed by enumeration.
pub const INTERSECTION_CROSSOVER: u128 = 512;

/// Default cap on the number of subgroups an enumeration may produce.
pub const DEFAULT_MAX_SUBGROUPS: usize = 500_000;

/// A subgroup of a [`FinAbGroup`], stored by its canonical Hermite basis.
///
/// Equality, hashing and ordering only look at the ambient group and the
/// Hermite basis, so two subgroups compare equal exactly when they have the
/// same elements.
#[derive(Clone)]
pub struct Subgroup {
    ambient: FinAbGroup,
    generators: Vec<Element>,
    hnf: Vec<Vec<i64>>,
    order: u128,
    basis: FinAbGroup,
    incl: AbHom,
    /// Hermite coefficient space → basis coordinates.
    cok: Cokernel,
}

impl Subgroup {
    /// The subgroup generated by `gens`.
    pub fn generated(ambient: &FinAbGroup, gens: &[Element]) -> Result<Subgroup> {
        for x in gens {
            if x.coords().len() != ambient.rank() {
                return Err(Error::ShapeMismatch(format!(
                    "generator {x} does not belong to {ambient}"
                )));
            }
        }
        let raw: Vec<Vec<i64>> = gens.iter().map(|x| x.coords().to_vec()).collect();
        let w = hnf(&raw, ambient.factors());
        Ok(Subgroup::from_hnf(ambient, w, gens.to_vec()))
    }

    pub fn whole(ambient: &FinAbGroup) -> Subgroup {
        Subgroup::generated(ambient, &ambient.generators()).expect("generators fit")
    }

    pub fn trivial(ambient: &FinAbGroup) -> Subgroup {
        Subgroup::generated(ambient, &[]).expect("empty list")
    }

    pub(crate) fn from_raw(ambient: &FinAbGroup, gens: &[Vec<i64>]) -> Subgroup {
        let w = hnf(gens, ambient.factors());
        let elems = gens.iter().map(|g| ambient.reduce(g)).collect();
        Subgroup::from_hnf(ambient, w, elems)
    }

    fn from_hnf(ambient: &FinAbGroup, w: Vec<Vec<i64>>, generators: Vec<Element>) -> Subgroup {
        let d = ambient.factors();
        let n = d.len();
        let mut order: u128 = 1;
        let mut rel = Vec::with_capacity(n);
        for c in 0..n {
            let q = d[c] / w[c][c];
            order = order.saturating_mul(q as u128);
            let x: Vec<i64> = (0..n).map(|j| reduce(q as i128 * w[c][j] as i128, d[j])).collect();
            let z = hnf_solve(&w, d, &x).expect("multiples of basis rows stay in the lattice");
            let mut r: Vec<i64> = z.iter().map(|&v| -v).collect();
            r[c] += q;
            rel.push(r);
        }
        let cok = Cokernel::new(&rel, n, ambient.exponent());
        let basis = FinAbGroup::new(cok.factors.clone()).expect("cokernel factors form a chain");
        let cols: Vec<Vec<i64>> = cok
            .from
            .iter()
            .map(|z| combine_rows(&w, z, d))
            .collect();
        let incl = AbHom::from_columns(&basis, ambient, &cols).expect("inclusion is well defined");
        Subgroup { ambient: ambient.clone(), generators, hnf: w, order, basis, incl, cok }
    }

    pub fn ambient(&self) -> &FinAbGroup {
        &self.ambient
    }

    /// Generators as supplied at construction.
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    /// Canonical generating set: the nonzero rows of the Hermite basis.
    pub fn canonical_generators(&self) -> Vec<Element> {
        let d = self.ambient.factors();
        (0..d.len())
            .filter(|&c| self.hnf[c][c] != d[c])
            .map(|c| self.ambient.reduce(&self.hnf[c]))
            .collect()
    }

    /// The Hermite basis rows (pivot `W[c][c]` divides `d_c`).
    pub fn hermite_basis(&self) -> &[Vec<i64>] {
        &self.hnf
    }

    /// The order, saturating at `u128::MAX`.
    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        let d = self.ambient.factors();
        (0..d.len()).all(|c| self.hnf[c][c] == d[c])
    }

    pub fn is_whole(&self) -> bool {
        (0..self.ambient.rank()).all(|c| self.hnf[c][c] == 1)
    }

    /// The subgroup as an abstract group in invariant-factor form.
    pub fn basis_group(&self) -> &FinAbGroup {
        &self.basis
    }

    /// The injective hom `basis_group() → ambient()`.
    pub fn inclusion(&self) -> &AbHom {
        &self.incl
    }

    pub fn contains_element(&self, x: &Element) -> bool {
        hnf_solve(&self.hnf, self.ambient.factors(), x.coords()).is_some()
    }

    /// Coordinates of `x` in [`Subgroup::basis_group`], if `x` is a member.
    pub fn coordinates(&self, x: &Element) -> Option<Element> {
        let z = hnf_solve(&self.hnf, self.ambient.factors(), x.coords())?;
        Some(self.basis.reduce(&self.cok.project(&z)))
    }

    /// Every element, in the order of `basis_group().elements()`.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.basis.elements().map(move |b| self.incl.apply(&b))
    }

    fn check_ambient(&self, other: &Subgroup) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_ambient(other)?;
        let mut gens = self.canonical_generators();
        gens.extend(other.canonical_generators());
        Subgroup::generated(&self.ambient, &gens)
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &Subgroup) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.order <= self.order
            && other.canonical_generators().iter().all(|x| self.contains_element(x)))
    }

    /// Exact intersection; small cases enumerate, large cases pull back.
    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_ambient(other)?;
        if self.order.min(other.order) <= INTERSECTION_CROSSOVER {
            self.intersect_by_enumeration(other)
        } else {
            self.intersect_by_pullback(other)
        }
    }

    pub fn intersect_by_enumeration(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_ambient(other)?;
        let (small, big) = if self.order <= other.order { (self, other) } else { (other, self) };
        let members: Vec<Element> = small.elements().filter(|x| big.contains_element(x)).collect();
        Subgroup::generated(&self.ambient, &members)
    }

    /// `incl_A( ker(A → G → G/B) )`.
    pub fn intersect_by_pullback(&self, other: &Subgroup) -> Result<Subgroup> {
        self.check_ambient(other)?;
        let q = other.quotient();
        let h = q.projection.compose(&self.incl)?;
        let k = kernel(&h);
        image_of(&self.incl, &k)
    }

    /// `ambient / self` with its projection.
    pub fn quotient(&self) -> Quotient {
        let n = self.ambient.rank();
        let cok = Cokernel::new(&self.hnf, n, self.ambient.exponent());
        let group = FinAbGroup::new(cok.factors.clone()).expect("cokernel factors form a chain");
        let cols: Vec<Vec<i64>> = cok.to.clone();
        let projection = AbHom::from_columns(&self.ambient, &group, &cols).expect("projection is well defined");
        let lifts = cok.from.iter().map(|z| self.ambient.reduce(z)).collect();
        Quotient { group, projection, lifts }
    }

    /// `h(self) ⊆ self` for an endomorphism of the ambient group.
    pub fn is_invariant_under(&self, h: &AbHom) -> bool {
        self.canonical_generators().iter().all(|x| self.contains_element(&h.apply(x)))
    }

    /// The restriction of an endomorphism that preserves `self`, as an
    /// endomorphism of [`Subgroup::basis_group`].
    pub fn restrict_endo(&self, h: &AbHom) -> Result<AbHom> {
        if h.src() != &self.ambient || h.dst() != &self.ambient {
            return Err(Error::AmbientMismatch);
        }
        let mut cols = Vec::with_capacity(self.basis.rank());
        for t in 0..self.basis.rank() {
            let y = h.apply(&self.incl.column(t));
            let c = self
                .coordinates(&y)
                .ok_or_else(|| Error::HypothesisUnmet("endomorphism does not preserve the subgroup".into()))?;
            cols.push(c.into_coords());
        }
        AbHom::from_columns(&self.basis, &self.basis, &cols)
    }

    /// Subgroup of `self.basis_group()` corresponding to `inner ⊆ self`.
    pub fn pull_into_basis(&self, inner: &Subgroup) -> Result<Subgroup> {
        self.check_ambient(inner)?;
        let mut gens = Vec::new();
        for x in inner.canonical_generators() {
            gens.push(self.coordinates(&x).ok_or_else(|| {
                Error::HypothesisUnmet("subgroup is not contained in the outer subgroup".into())
            })?);
        }
        Subgroup::generated(&self.basis, &gens)
    }
}

fn combine_rows(w: &[Vec<i64>], z: &[i64], d: &[i64]) -> Vec<i64> {
    (0..d.len())
        .map(|j| {
            let mut acc: i128 = 0;
            for (c, &zc) in z.iter().enumerate() {
                if zc != 0 {
                    acc += zc as i128 * w[c][j] as i128;
                }
            }
            reduce(acc, d[j])
        })
        .collect()
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.hnf == other.hnf
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.hnf.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Order first, then the canonical generators lexicographically.
impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.ambient, self.order, self.canonical_generators())
            .cmp(&(&other.ambient, other.order, other.canonical_generators()))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.canonical_generators().iter().map(|g| g.to_string()).collect();
        write!(f, "<{}> ≅ {} in {}", gens.join(", "), self.basis, self.ambient)
    }
}

/// A quotient group with its projection.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub group: FinAbGroup,
    pub projection: AbHom,
    /// `lifts[t]` projects onto generator `t` of the quotient.
    pub lifts: Vec<Element>,
}

/// `{x : h(x) = 0}` as a subgroup of the source.
pub fn kernel(h: &AbHom) -> Subgroup {
    let (src, dst) = (h.src(), h.dst());
    let cmat: Vec<Vec<i64>> = (0..src.rank())
        .map(|j| (0..dst.rank()).map(|i| h.entry(i, j)).collect())
        .collect();
    let gens = kernel_of_functionals(src.factors(), &cmat, dst.factors());
    Subgroup::from_raw(src, &gens)
}

/// `h(src)` as a subgroup of the destination.
pub fn image(h: &AbHom) -> Subgroup {
    let cols: Vec<Vec<i64>> = (0..h.src().rank()).map(|j| h.column(j).into_coords()).collect();
    Subgroup::from_raw(h.dst(), &cols)
}

/// `h(n)` for a subgroup `n` of the source.
pub fn image_of(h: &AbHom, n: &Subgroup) -> Result<Subgroup> {
    if n.ambient() != h.src() {
        return Err(Error::AmbientMismatch);
    }
    let gens: Vec<Vec<i64>> = n
        .canonical_generators()
        .iter()
        .map(|x| h.apply(x).into_coords())
        .collect();
    Ok(Subgroup::from_raw(h.dst(), &gens))
}

/// `h⁻¹(n)` for a subgroup `n` of the destination.
pub fn preimage(h: &AbHom, n: &Subgroup) -> Result<Subgroup> {
    if n.ambient() != h.dst() {
        return Err(Error::AmbientMismatch);
    }
    let q = n.quotient();
    Ok(kernel(&q.projection.compose(h)?))
}

/// `t·G`.
pub fn multiples(g: &FinAbGroup, t: i64) -> Subgroup {
    image(&AbHom::scalar(g, t))
}

/// `G[t] = {x : t·x = 0}`.
pub fn torsion_part(g: &FinAbGroup, t: i64) -> Subgroup {
    kernel(&AbHom::scalar(g, t))
}

/// The socle (generated by the elements of prime order) and whether `n`
/// is essential, i.e. meets every nonzero subgroup.
///
/// In a finite abelian group every nonzero subgroup contains an element of
/// prime order, so `n` is essential exactly when it contains the socle.
pub fn socle_and_essential(g: &FinAbGroup, n: &Subgroup) -> Result<(Subgroup, bool)> {
    if n.ambient() != g {
        return Err(Error::AmbientMismatch);
    }
    let mut gens = Vec::new();
    for (i, &d) in g.factors().iter().enumerate() {
        for p in prime_divisors(d) {
            gens.push(g.scale(&g.generator(i), d / p));
        }
    }
    let socle = Subgroup::generated(g, &gens)?;
    let essential = n.contains(&socle)?;
    Ok((socle, essential))
}

/// Every subgroup of `g` exactly once, sorted by order and then by
/// canonical generators.
pub fn enumerate_subgroups(g: &FinAbGroup, order_bound: u128) -> Result<Vec<Subgroup>> {
    enumerate_subgroups_limited(g, order_bound, DEFAULT_MAX_SUBGROUPS)
}

/// As [`enumerate_subgroups`], failing once more than `max_count`
/// subgroups have been produced.
pub fn enumerate_subgroups_limited(g: &FinAbGroup, order_bound: u128, max_count: usize) -> Result<Vec<Subgroup>> {
    if g.order() > order_bound {
        return Err(Error::BoundExceeded { what: "group order", size: g.order(), bound: order_bound });
    }
    let mut out = Vec::new();
    let n = g.rank();
    let mut w = vec![vec![0i64; n]; n];
    let mut search = Search { g, max_count, out: &mut out };
    search.row(&mut w, n)?;
    let mut subs: Vec<Subgroup> = out
        .into_iter()
        .map(|w| {
            let gens = (0..n)
                .filter(|&c| w[c][c] != g.factors()[c])
                .map(|c| g.reduce(&w[c]))
                .collect();
            Subgroup::from_hnf(g, w, gens)
        })
        .collect();
    subs.sort();
    Ok(subs)
}

/// All subgroups invariant under every hom in `ops`.
pub fn enumerate_invariant_subgroups(g: &FinAbGroup, ops: &[AbHom], order_bound: u128) -> Result<Vec<Subgroup>> {
    enumerate_invariant_subgroups_limited(g, ops, order_bound, DEFAULT_MAX_SUBGROUPS)
}

pub fn enumerate_invariant_subgroups_limited(
    g: &FinAbGroup,
    ops: &[AbHom],
    order_bound: u128,
    max_count: usize,
) -> Result<Vec<Subgroup>> {
    for op in ops {
        if op.src() != g || op.dst() != g {
            return Err(Error::AmbientMismatch);
        }
    }
    let all = enumerate_subgroups_limited(g, order_bound, max_count)?;
    Ok(all
        .into_iter()
        .filter(|s| ops.iter().all(|op| s.is_invariant_under(op)))
        .collect())
}

struct Search<'a> {
    g: &'a FinAbGroup,
    max_count: usize,
    out: &'a mut Vec<Vec<Vec<i64>>>,
}

impl Search<'_> {
    /// Fills rows `0..c` given that rows `c..n` are fixed.
    fn row(&mut self, w: &mut Vec<Vec<i64>>, c: usize) -> Result<()> {
        if c == 0 {
            if self.out.len() >= self.max_count {
                return Err(Error::BoundExceeded {
                    what: "subgroup count",
                    size: self.out.len() as u128 + 1,
                    bound: self.max_count as u128,
                });
            }
            self.out.push(w.clone());
            return Ok(());
        }
        let c = c - 1;
        let d = self.g.factors();
        let n = d.len();
        for p in divisors(d[c]) {
            w[c].iter_mut().for_each(|x| *x = 0);
            w[c][c] = p;
            if p == d[c] {
                self.row(w, c)?;
                continue;
            }
            // entries to the right range over residues of the later pivots
            let ranges: Vec<i64> = (c + 1..n).map(|j| w[j][j]).collect();
            let mut tail = vec![0i64; ranges.len()];
            loop {
                for (k, &x) in tail.iter().enumerate() {
                    w[c][c + 1 + k] = x;
                }
                if self.closed(w, c, d[c] / p) {
                    self.row(w, c)?;
                }
                let mut k = 0;
                loop {
                    if k == tail.len() {
                        break;
                    }
                    tail[k] += 1;
                    if tail[k] < ranges[k] {
                        break;
                    }
                    tail[k] = 0;
                    k += 1;
                }
                if k == tail.len() {
                    break;
                }
            }
        }
        Ok(())
    }

    /// `(d_c / p_c)·W[c]` must lie in the span of the later rows.
    fn closed(&self, w: &[Vec<i64>], c: usize, q: i64) -> bool {
        let d = self.g.factors();
        let n = d.len();
        let mut x: Vec<i64> = (0..n).map(|j| reduce(q as i128 * w[c][j] as i128, d[j])).collect();
        for col in c + 1..n {
            let piv = w[col][col];
            if x[col] % piv != 0 {
                return false;
            }
            let t = x[col] / piv;
            if t != 0 {
                for j in col..n {
                    x[j] = reduce(x[j] as i128 - t as i128 * w[col][j] as i128, d[j]);
                }
            }
        }
        true
    }
}

/// Builds an element-wise map table for tests and oracles.
pub fn matrix_of_elements(g: &FinAbGroup, elems: &[Element]) -> Result<Matrix> {
    Matrix::from_rows(&elems.iter().map(|e| e.coords().to_vec()).collect::<Vec<_>>(), g.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn g(f: &[i64]) -> FinAbGroup {
        FinAbGroup::new(f.to_vec()).unwrap()
    }

    fn sub(a: &FinAbGroup, gens: &[&[i64]]) -> Subgroup {
        let e: Vec<Element> = gens.iter().map(|x| a.element(x).unwrap()).collect();
        Subgroup::generated(a, &e).unwrap()
    }

    fn brute_subgroups(a: &FinAbGroup) -> HashSet<Vec<Element>> {
        // closure of every pair of elements covers all subgroups of rank <= 2
        // and the generated sets are compared as sorted element lists
        let elems: Vec<Element> = a.elements().collect();
        let mut found = HashSet::new();
        let mut frontier: Vec<Vec<Element>> = vec![vec![a.zero()]];
        let close = |set: &Vec<Element>, x: &Element| -> Vec<Element> {
            let mut s: HashSet<Element> = set.iter().cloned().collect();
            let mut queue: Vec<Element> = s.iter().cloned().collect();
            s.insert(x.clone());
            queue.push(x.clone());
            while let Some(y) = queue.pop() {
                let current: Vec<Element> = s.iter().cloned().collect();
                for z in current {
                    let t = a.add(&y, &z);
                    if s.insert(t.clone()) {
                        queue.push(t);
                    }
                }
            }
            let mut v: Vec<Element> = s.into_iter().collect();
            v.sort();
            v
        };
        found.insert(vec![a.zero()]);
        while let Some(set) = frontier.pop() {
            for x in &elems {
                let c = close(&set, x);
                if found.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        found
    }

    #[test]
    fn kernel_and_image_examples() {
        let m = g(&[2, 4]);
        let h = AbHom::from_columns(&m, &m, &[vec![0, 0], vec![0, 2]]).unwrap();
        let k = kernel(&h);
        assert_eq!(k, sub(&m, &[&[1, 0], &[0, 2]]));
        assert_eq!(k.basis_group().factors(), &[2, 2]);
        let i = image(&h);
        assert_eq!(i, sub(&m, &[&[0, 2]]));
        assert_eq!(i.order(), 2);
        assert_eq!(kernel(&AbHom::zero(&m, &m)), Subgroup::whole(&m));
        assert!(image(&AbHom::zero(&m, &m)).is_trivial());
        assert_eq!(kernel(&AbHom::scalar(&g(&[4]), 2)).order(), 2);
    }

    #[test]
    fn subgroup_algebra_examples() {
        let m = g(&[2, 4]);
        let a = sub(&m, &[&[1, 0], &[0, 2]]);
        let b = sub(&m, &[&[0, 1]]);
        let expect = sub(&m, &[&[0, 2]]);
        assert_eq!(a.intersect(&b).unwrap(), expect);
        assert_eq!(a.intersect_by_pullback(&b).unwrap(), expect);
        assert_eq!(a.sum(&Subgroup::trivial(&m)).unwrap(), a);
        assert_eq!(a.intersect(&Subgroup::whole(&m)).unwrap(), a);
        let k = g(&[2, 2]);
        let s = sub(&k, &[&[1, 0]]).sum(&sub(&k, &[&[0, 1]])).unwrap();
        assert!(s.is_whole());
        assert!(a.contains(&expect).unwrap());
        assert!(!expect.contains(&a).unwrap());
        assert_eq!(a.intersect(&sub(&k, &[])), Err(Error::AmbientMismatch));
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(enumerate_subgroups(&g(&[2, 2]), 4096).unwrap().len(), 5);
        assert_eq!(enumerate_subgroups(&g(&[6]), 4096).unwrap().len(), 4);
        assert_eq!(enumerate_subgroups(&g(&[2, 4]), 4096).unwrap().len(), 8);
        assert_eq!(enumerate_subgroups(&g(&[2, 2, 2]), 4096).unwrap().len(), 16);
        assert_eq!(enumerate_subgroups(&g(&[3, 3]), 4096).unwrap().len(), 6);
        assert_eq!(enumerate_subgroups(&FinAbGroup::trivial(), 4096).unwrap().len(), 1);
        assert!(matches!(
            enumerate_subgroups(&g(&[2, 4]), 4),
            Err(Error::BoundExceeded { size: 8, .. })
        ));
        assert!(matches!(
            enumerate_subgroups_limited(&g(&[2, 2, 2]), 4096, 10),
            Err(Error::BoundExceeded { what: "subgroup count", .. })
        ));
    }

    #[test]
    fn enumeration_matches_closure_oracle() {
        for f in [vec![4], vec![2, 4], vec![2, 2, 2], vec![2, 6], vec![3, 3], vec![4, 4], vec![2, 8]] {
            let a = g(&f);
            let subs = enumerate_subgroups(&a, 4096).unwrap();
            let ours: HashSet<Vec<Element>> = subs
                .iter()
                .map(|s| {
                    let mut v: Vec<Element> = s.elements().collect();
                    v.sort();
                    v.dedup();
                    assert_eq!(v.len() as u128, s.order());
                    v
                })
                .collect();
            assert_eq!(ours.len(), subs.len(), "duplicates for {f:?}");
            assert_eq!(ours, brute_subgroups(&a), "{f:?}");
            for w in subs.windows(2) {
                assert!(w[0] < w[1]);
            }
        }
    }

    #[test]
    fn coordinates_invert_inclusion() {
        let m = g(&[2, 4, 8]);
        let s = sub(&m, &[&[1, 2, 4], &[0, 1, 2]]);
        for b in s.basis_group().elements() {
            let x = s.inclusion().apply(&b);
            assert_eq!(s.coordinates(&x).unwrap(), b);
        }
        assert_eq!(kernel(s.inclusion()).order(), 1);
    }

    #[test]
    fn quotient_sizes() {
        let m = g(&[2, 4]);
        let n = sub(&m, &[&[0, 2]]);
        let q = n.quotient();
        assert_eq!(q.group.factors(), &[2, 2]);
        assert_eq!(kernel(&q.projection), n);
    }

    #[test]
    fn socle_examples() {
        let z4 = g(&[4]);
        let (soc, ess) = socle_and_essential(&z4, &sub(&z4, &[&[2]])).unwrap();
        assert_eq!(soc.order(), 2);
        assert!(ess);
        let m = g(&[2, 4]);
        let (soc, ess) = socle_and_essential(&m, &sub(&m, &[&[0, 2]])).unwrap();
        assert_eq!(soc, sub(&m, &[&[1, 0], &[0, 2]]));
        assert!(!ess);
        assert!(socle_and_essential(&m, &Subgroup::whole(&m)).unwrap().1);
    }

    #[test]
    fn restriction_of_invariant_endo() {
        let m = g(&[2, 4]);
        let n = sub(&m, &[&[0, 2]]);
        let r = n.restrict_endo(&AbHom::scalar(&m, 3)).unwrap();
        assert_eq!(r, AbHom::identity(n.basis_group()));
        let swap = AbHom::from_columns(&m, &m, &[vec![0, 2], vec![1, 0]]).unwrap();
        assert!(sub(&m, &[&[1, 0]]).restrict_endo(&swap).is_err());
    }
}
