use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Element, FinAbGroup};
use crate::int::{gcd, lcm, reduce};
use crate::lattice::Cokernel;
use crate::matrix::Matrix;

/// An additive homomorphism `src → dst`.
///
/// Entry `(i, j)` is the coefficient of destination generator `i` in the
/// image of source generator `j`, reduced modulo the destination factor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AbHom {
    src: FinAbGroup,
    dst: FinAbGroup,
    matrix: Matrix,
}

impl AbHom {
    /// Checks shape and well-definedness, then reduces the entries.
    pub fn new(src: &FinAbGroup, dst: &FinAbGroup, matrix: &Matrix) -> Result<Self> {
        if matrix.rows() != dst.rank() || matrix.cols() != src.rank() {
            return Err(Error::ShapeMismatch(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                dst.rank(),
                src.rank()
            )));
        }
        let (d, e) = (src.factors(), dst.factors());
        let mut m = Matrix::zeros(dst.rank(), src.rank());
        for i in 0..dst.rank() {
            for j in 0..src.rank() {
                let x = reduce(matrix[(i, j)] as i128, e[i]);
                if reduce(x as i128 * d[j] as i128, e[i]) != 0 {
                    return Err(Error::ShapeMismatch(format!(
                        "entry ({i},{j}) = {x} does not respect the relation {}·g{j} = 0",
                        d[j]
                    )));
                }
                m[(i, j)] = x;
            }
        }
        Ok(AbHom { src: src.clone(), dst: dst.clone(), matrix: m })
    }

    /// Builds a hom from the images of the source generators.
    pub fn from_columns(src: &FinAbGroup, dst: &FinAbGroup, cols: &[Vec<i64>]) -> Result<Self> {
        if cols.len() != src.rank() {
            return Err(Error::ShapeMismatch(format!(
                "{} images for {} generators",
                cols.len(),
                src.rank()
            )));
        }
        let mut m = Matrix::zeros(dst.rank(), src.rank());
        for (j, col) in cols.iter().enumerate() {
            if col.len() != dst.rank() {
                return Err(Error::ShapeMismatch(format!(
                    "image of generator {j} has {} coordinates, expected {}",
                    col.len(),
                    dst.rank()
                )));
            }
            for (i, &x) in col.iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        AbHom::new(src, dst, &m)
    }

    pub(crate) fn from_reduced(src: &FinAbGroup, dst: &FinAbGroup, matrix: Matrix) -> Self {
        AbHom { src: src.clone(), dst: dst.clone(), matrix }
    }

    pub fn zero(src: &FinAbGroup, dst: &FinAbGroup) -> Self {
        AbHom::from_reduced(src, dst, Matrix::zeros(dst.rank(), src.rank()))
    }

    /// Multiplication by `c` on `g`.
    pub fn scalar(g: &FinAbGroup, c: i64) -> Self {
        let mut m = Matrix::zeros(g.rank(), g.rank());
        for (i, &d) in g.factors().iter().enumerate() {
            m[(i, i)] = reduce(c as i128, d);
        }
        AbHom::from_reduced(g, g, m)
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        AbHom::scalar(g, 1)
    }

    pub fn src(&self) -> &FinAbGroup {
        &self.src
    }

    pub fn dst(&self) -> &FinAbGroup {
        &self.dst
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[(i, j)]
    }

    /// Image of source generator `j`.
    pub fn column(&self, j: usize) -> Element {
        let v: Vec<i64> = (0..self.dst.rank()).map(|i| self.matrix[(i, j)]).collect();
        self.dst.reduce(&v)
    }

    pub fn is_endo(&self) -> bool {
        self.src == self.dst
    }

    pub fn is_zero(&self) -> bool {
        (0..self.dst.rank()).all(|i| self.matrix.row(i).iter().all(|&x| x == 0))
    }

    /// Applies the hom; `x` must belong to the source.
    pub fn apply(&self, x: &Element) -> Element {
        let c = x.coords();
        debug_assert_eq!(c.len(), self.src.rank());
        let e = self.dst.factors();
        let v: Vec<i64> = (0..self.dst.rank())
            .map(|i| {
                let mut acc: i128 = 0;
                for (j, &xj) in c.iter().enumerate() {
                    acc += self.matrix[(i, j)] as i128 * xj as i128;
                }
                reduce(acc, e[i])
            })
            .collect();
        self.dst.reduce(&v)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AbHom) -> Result<AbHom> {
        if other.dst != self.src {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.src, self.dst, other.src, other.dst
            )));
        }
        let (r, k, n) = (self.dst.rank(), self.src.rank(), other.src.rank());
        let e = self.dst.factors();
        let mut m = Matrix::zeros(r, n);
        for i in 0..r {
            for j in 0..n {
                let mut acc: i128 = 0;
                for l in 0..k {
                    acc += self.matrix[(i, l)] as i128 * other.matrix[(l, j)] as i128;
                }
                m[(i, j)] = reduce(acc, e[i]);
            }
        }
        Ok(AbHom::from_reduced(&other.src, &self.dst, m))
    }

    fn same_shape(&self, other: &AbHom) -> Result<()> {
        if self.src != other.src || self.dst != other.dst {
            return Err(Error::ShapeMismatch(format!(
                "{} -> {} versus {} -> {}",
                self.src, self.dst, other.src, other.dst
            )));
        }
        Ok(())
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: i64, other: &AbHom, b: i64) -> Result<AbHom> {
        self.same_shape(other)?;
        let e = self.dst.factors();
        let mut m = Matrix::zeros(self.dst.rank(), self.src.rank());
        for i in 0..self.dst.rank() {
            for j in 0..self.src.rank() {
                let v = a as i128 * self.matrix[(i, j)] as i128 + b as i128 * other.matrix[(i, j)] as i128;
                m[(i, j)] = reduce(v, e[i]);
            }
        }
        Ok(AbHom::from_reduced(&self.src, &self.dst, m))
    }

    pub fn add(&self, other: &AbHom) -> Result<AbHom> {
        self.combine(1, other, 1)
    }

    pub fn sub(&self, other: &AbHom) -> Result<AbHom> {
        self.combine(1, other, -1)
    }

    pub fn neg(&self) -> AbHom {
        self.scale(-1)
    }

    pub fn scale(&self, c: i64) -> AbHom {
        let e = self.dst.factors();
        let mut m = self.matrix.clone();
        for i in 0..self.dst.rank() {
            for j in 0..self.src.rank() {
                m[(i, j)] = reduce(c as i128 * m[(i, j)] as i128, e[i]);
            }
        }
        AbHom::from_reduced(&self.src, &self.dst, m)
    }

    /// `self∘other − other∘self` for two endomorphisms of the same group.
    pub fn commutator(&self, other: &AbHom) -> Result<AbHom> {
        self.compose(other)?.sub(&other.compose(self)?)
    }

    pub fn commutes_with(&self, other: &AbHom) -> Result<bool> {
        Ok(self.compose(other)? == other.compose(self)?)
    }
}

impl fmt::Debug for AbHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AbHom({} -> {}, {:?})", self.src, self.dst, self.matrix)
    }
}

/// `Hom(A, B)` in invariant-factor form.
///
/// Internally every hom is addressed by its entry vector: entry `(i, j)` is
/// a multiple of `e_i / gcd(d_j, e_i)` and the quotient lives in
/// `Z/gcd(d_j, e_i)`. These "raw" coordinates are related to the canonical
/// group by a change of generators.
#[derive(Debug, Clone)]
pub struct HomGroup {
    src: FinAbGroup,
    dst: FinAbGroup,
    group: FinAbGroup,
    /// Raw modulus of entry `i * src.rank() + j`.
    orders: Vec<i64>,
    /// Entry multiplier `e_i / gcd(d_j, e_i)`.
    mults: Vec<i64>,
    cok: Cokernel,
}

impl HomGroup {
    pub fn new(src: &FinAbGroup, dst: &FinAbGroup) -> Result<HomGroup> {
        let (d, e) = (src.factors(), dst.factors());
        let mut orders = Vec::with_capacity(d.len() * e.len());
        let mut mults = Vec::with_capacity(d.len() * e.len());
        for &ei in e {
            for &dj in d {
                let g = gcd(dj, ei);
                orders.push(g);
                mults.push(ei / g);
            }
        }
        let n = orders.len();
        let modulus = orders.iter().try_fold(1, |acc, &o| lcm(acc, o))?;
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { orders[i] } else { 0 }).collect())
            .collect();
        let cok = Cokernel::new(&rows, n, modulus);
        let group = FinAbGroup::new(cok.factors.clone())?;
        Ok(HomGroup { src: src.clone(), dst: dst.clone(), group, orders, mults, cok })
    }

    pub fn src(&self) -> &FinAbGroup {
        &self.src
    }

    pub fn dst(&self) -> &FinAbGroup {
        &self.dst
    }

    /// The abstract group `Hom(A, B)`.
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub(crate) fn raw_orders(&self) -> &[i64] {
        &self.orders
    }

    pub(crate) fn raw_mults(&self) -> &[i64] {
        &self.mults
    }

    pub(crate) fn raw_of(&self, h: &AbHom) -> Vec<i64> {
        let k = self.src.rank();
        (0..self.orders.len())
            .map(|idx| h.matrix[(idx / k, idx % k)] / self.mults[idx])
            .collect()
    }

    pub(crate) fn hom_of_raw(&self, raw: &[i64]) -> AbHom {
        let k = self.src.rank();
        let e = self.dst.factors();
        let mut m = Matrix::zeros(self.dst.rank(), k);
        for (idx, &y) in raw.iter().enumerate() {
            let i = idx / k;
            m[(i, idx % k)] = reduce(y as i128 * self.mults[idx] as i128, e[i]);
        }
        AbHom::from_reduced(&self.src, &self.dst, m)
    }

    pub(crate) fn coords_of_raw(&self, raw: &[i64]) -> Element {
        self.group.reduce(&self.cok.project(raw))
    }

    pub(crate) fn raw_of_coords(&self, c: &[i64]) -> Vec<i64> {
        self.cok.lift(c, &self.orders)
    }

    /// Canonical coordinates of `h`.
    pub fn to_coords(&self, h: &AbHom) -> Result<Element> {
        if h.src != self.src || h.dst != self.dst {
            return Err(Error::ShapeMismatch("hom does not belong to this Hom group".into()));
        }
        Ok(self.coords_of_raw(&self.raw_of(h)))
    }

    /// The hom with canonical coordinates `c`.
    pub fn from_coords(&self, c: &Element) -> AbHom {
        self.hom_of_raw(&self.raw_of_coords(c.coords()))
    }

    /// One hom per cyclic summand of [`HomGroup::group`].
    pub fn basis(&self) -> Vec<AbHom> {
        self.group.generators().iter().map(|g| self.from_coords(g)).collect()
    }

    /// Every hom `src → dst`, in the order of `group().elements()`.
    pub fn elements(&self) -> impl Iterator<Item = AbHom> + '_ {
        self.group.elements().map(move |c| self.from_coords(&c))
    }
}

/// `Hom(A, B)` as an abstract group together with one hom per summand.
pub fn hom_group(a: &FinAbGroup, b: &FinAbGroup) -> Result<(FinAbGroup, Vec<AbHom>)> {
    let h = HomGroup::new(a, b)?;
    let basis = h.basis();
    Ok((h.group().clone(), basis))
}
