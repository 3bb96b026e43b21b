//! Modules, endomorphism rings and homs between modules.
//!
//! Every ring of endomorphisms is computed as a commutant inside
//! `End_Z(M)`: `End_R(M)` is the set of additive maps commuting with the
//! action of the generators of `R`, and only the image of the action
//! matters. Over `Z` and `Z/n` the action is by scalars, which commute with
//! everything, so `End_R(M) = End_Z(M)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{direct_sum_group, Element, FinAbGroup};
use crate::hom::{AbHom, HomGroup};
use crate::lattice::kernel_of_functionals;
use crate::ring::{FinRing, ScalarRing};
use crate::subgroup::{kernel, Subgroup, DEFAULT_MAX_SUBGROUPS};

/// Size guards for the exhaustive parts of the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest carrier for which endomorphism rings are computed.
    pub carrier: u128,
    /// Largest number of coordinates of `Hom(A, B)` (the product of the ranks).
    pub solution_rank: usize,
    /// Largest group whose subgroups are enumerated.
    pub subgroup_order: u128,
    /// Largest carrier for the extendability predicates.
    pub extendable: u128,
    /// Largest number of subgroups an enumeration may produce.
    pub max_subgroups: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            carrier: 4096,
            solution_rank: 64,
            subgroup_order: 4096,
            extendable: 256,
            max_subgroups: DEFAULT_MAX_SUBGROUPS,
        }
    }
}

impl Bounds {
    pub(crate) fn check_carrier(&self, g: &FinAbGroup) -> Result<()> {
        if g.order() > self.carrier {
            return Err(Error::BoundExceeded { what: "carrier order", size: g.order(), bound: self.carrier });
        }
        Ok(())
    }

    pub(crate) fn check_hom_rank(&self, a: &FinAbGroup, b: &FinAbGroup) -> Result<()> {
        let r = a.rank() * b.rank();
        if r > self.solution_rank {
            return Err(Error::BoundExceeded {
                what: "hom coordinate rank",
                size: r as u128,
                bound: self.solution_rank as u128,
            });
        }
        Ok(())
    }
}

/// The ring acting on a module.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BaseRing {
    Scalar(ScalarRing),
    Finite(FinRing),
}

/// A module: carrier group plus the action of a ring.
///
/// Scalar rings act implicitly. A finite ring acts through `rep`, one
/// endomorphism per additive generator, with `m·(x·y) = (m·x)·y`, i.e.
/// `rep(x·y) = rep(y) ∘ rep(x)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModuleAction {
    ring: BaseRing,
    carrier: FinAbGroup,
    rep: Vec<AbHom>,
}

/// Outcome of [`validate_action`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionValidation {
    pub valid: bool,
    pub violation: Option<String>,
}

impl ModuleAction {
    /// A module over `Z` or `Z/n`; `Z/n` requires `n·M = 0`.
    pub fn scalar(ring: ScalarRing, carrier: FinAbGroup) -> Result<Self> {
        let n = ring.modulus();
        if n != 0 && n % carrier.exponent() != 0 {
            return Err(Error::InvalidAction(format!("{n} does not annihilate {carrier}")));
        }
        Ok(ModuleAction { ring: BaseRing::Scalar(ring), carrier, rep: Vec::new() })
    }

    pub fn over_integers(carrier: FinAbGroup) -> Self {
        ModuleAction { ring: BaseRing::Scalar(ScalarRing::integers()), carrier, rep: Vec::new() }
    }

    pub fn over_residues(n: i64, carrier: FinAbGroup) -> Result<Self> {
        ModuleAction::scalar(ScalarRing::new(n)?, carrier)
    }

    /// A module over a finite ring; the action is validated.
    pub fn finite(ring: FinRing, carrier: FinAbGroup, rep: Vec<AbHom>) -> Result<Self> {
        let a = ModuleAction::finite_unchecked(ring, carrier, rep)?;
        match validate_action(&a).violation {
            None => Ok(a),
            Some(msg) => Err(Error::InvalidAction(msg)),
        }
    }

    /// As [`ModuleAction::finite`] but only shapes are checked.
    pub fn finite_unchecked(ring: FinRing, carrier: FinAbGroup, rep: Vec<AbHom>) -> Result<Self> {
        if rep.len() != ring.additive().rank() {
            return Err(Error::ShapeMismatch(format!(
                "{} action maps for {} ring generators",
                rep.len(),
                ring.additive().rank()
            )));
        }
        if rep.iter().any(|h| h.src() != &carrier || h.dst() != &carrier) {
            return Err(Error::InvalidAction("action maps must be endomorphisms of the carrier".into()));
        }
        Ok(ModuleAction { ring: BaseRing::Finite(ring), carrier, rep })
    }

    /// A finite ring acting on itself by right multiplication.
    pub fn regular(ring: &FinRing) -> Result<Self> {
        let a = ring.additive();
        let rep = (0..a.rank())
            .map(|t| {
                let cols: Vec<Vec<i64>> = a
                    .generators()
                    .iter()
                    .map(|x| ring.mul(x, &a.generator(t)).into_coords())
                    .collect();
                AbHom::from_columns(a, a, &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        ModuleAction::finite(ring.clone(), a.clone(), rep)
    }

    pub fn ring(&self) -> &BaseRing {
        &self.ring
    }

    pub fn carrier(&self) -> &FinAbGroup {
        &self.carrier
    }

    /// Action maps of the ring generators (empty for scalar rings).
    pub fn rep(&self) -> &[AbHom] {
        &self.rep
    }

    pub fn scalar_ring(&self) -> Option<ScalarRing> {
        match &self.ring {
            BaseRing::Scalar(s) => Some(*s),
            BaseRing::Finite(_) => None,
        }
    }

    pub fn is_scalar(&self) -> bool {
        matches!(self.ring, BaseRing::Scalar(_))
    }

    /// The action of a ring element as an endomorphism of the carrier.
    pub fn act(&self, x: &Element) -> Result<AbHom> {
        match &self.ring {
            BaseRing::Scalar(_) => {
                let c = x.coords().first().copied().unwrap_or(0);
                Ok(AbHom::scalar(&self.carrier, c))
            }
            BaseRing::Finite(r) => {
                let mut acc = AbHom::zero(&self.carrier, &self.carrier);
                for (s, &c) in r.additive().element(x.coords())?.coords().iter().enumerate() {
                    if c != 0 {
                        acc = acc.combine(1, &self.rep[s], c)?;
                    }
                }
                Ok(acc)
            }
        }
    }

    /// Maps that every module hom must commute with. Scalars commute with
    /// all additive maps, so scalar rings contribute none.
    pub(crate) fn constraint_maps(&self) -> &[AbHom] {
        &self.rep
    }

    /// Maps spanning the image of the ring in `End_Z(M)`.
    pub fn action_span_generators(&self) -> Vec<AbHom> {
        match &self.ring {
            BaseRing::Scalar(_) => vec![AbHom::identity(&self.carrier)],
            BaseRing::Finite(_) => self.rep.clone(),
        }
    }

    /// The action restricted to a submodule, on its basis group.
    pub fn restrict(&self, n: &Subgroup) -> Result<ModuleAction> {
        if n.ambient() != &self.carrier {
            return Err(Error::AmbientMismatch);
        }
        match &self.ring {
            BaseRing::Scalar(s) => ModuleAction::scalar(*s, n.basis_group().clone()),
            BaseRing::Finite(r) => {
                let rep = self.rep.iter().map(|h| n.restrict_endo(h)).collect::<Result<Vec<_>>>()?;
                ModuleAction::finite_unchecked(r.clone(), n.basis_group().clone(), rep)
            }
        }
    }

    /// The action induced on `M / n`.
    pub fn quotient(&self, n: &Subgroup) -> Result<(ModuleAction, AbHom)> {
        if n.ambient() != &self.carrier {
            return Err(Error::AmbientMismatch);
        }
        let q = n.quotient();
        let act = match &self.ring {
            BaseRing::Scalar(s) => ModuleAction::scalar(*s, q.group.clone())?,
            BaseRing::Finite(r) => {
                let mut rep = Vec::with_capacity(self.rep.len());
                for h in &self.rep {
                    if !n.is_invariant_under(h) {
                        return Err(Error::HypothesisUnmet("subgroup is not a submodule".into()));
                    }
                    // q ∘ h factors through q; evaluate on lifts of quotient generators
                    let cols: Vec<Vec<i64>> = q
                        .lifts
                        .iter()
                        .map(|x| q.projection.apply(&h.apply(x)).into_coords())
                        .collect();
                    rep.push(AbHom::from_columns(&q.group, &q.group, &cols)?);
                }
                ModuleAction::finite_unchecked(r.clone(), q.group.clone(), rep)?
            }
        };
        Ok((act, q.projection))
    }
}

/// Checks the module axioms on generators.
pub fn validate_action(a: &ModuleAction) -> ActionValidation {
    let fail = |msg: String| ActionValidation { valid: false, violation: Some(msg) };
    match &a.ring {
        BaseRing::Scalar(s) => {
            let n = s.modulus();
            if n != 0 && n % a.carrier.exponent() != 0 {
                return fail(format!("{n} does not annihilate the carrier"));
            }
        }
        BaseRing::Finite(r) => {
            let add = r.additive();
            if a.rep.len() != add.rank() {
                return fail("one action map per ring generator is required".into());
            }
            for (s, h) in a.rep.iter().enumerate() {
                if h.src() != &a.carrier || h.dst() != &a.carrier {
                    return fail(format!("action map {s} is not an endomorphism of the carrier"));
                }
                if !h.scale(add.factors()[s]).is_zero() {
                    return fail(format!("action is not additive: {}·rep(g{s}) ≠ 0", add.factors()[s]));
                }
            }
            match a.act(r.one()) {
                Ok(u) if u == AbHom::identity(&a.carrier) => {}
                _ => return fail("the unit does not act as the identity".into()),
            }
            for s in 0..add.rank() {
                for t in 0..add.rank() {
                    let lhs = a.act(r.product_of_generators(s, t));
                    let rhs = a.rep[t].compose(&a.rep[s]);
                    match (lhs, rhs) {
                        (Ok(l), Ok(rr)) if l == rr => {}
                        _ => return fail(format!("acting by g{s} then g{t} differs from acting by g{s}·g{t}")),
                    }
                }
            }
        }
    }
    ActionValidation { valid: true, violation: None }
}

/// Homs `A → B` intertwining each pair `(p_a, p_b)`: `F∘p_a = p_b∘F`.
/// Returned as a subgroup of `hg.group()`.
pub(crate) fn intertwiners(hg: &HomGroup, pairs: &[(&AbHom, &AbHom)]) -> Subgroup {
    let (src, dst) = (hg.src(), hg.dst());
    let (k, r) = (src.rank(), dst.rank());
    let orders = hg.raw_orders();
    let mults = hg.raw_mults();
    let e = dst.factors();
    if pairs.is_empty() || orders.is_empty() {
        return Subgroup::whole(hg.group());
    }
    // functional (s, p, q) is entry (p, q) of F∘P_a − P_b∘F, modulo e_p
    let mut tmods = Vec::with_capacity(pairs.len() * r * k);
    for _ in pairs {
        for &ep in e {
            for _ in 0..k {
                tmods.push(ep);
            }
        }
    }
    let width = r * k;
    let mut cmat = vec![vec![0i64; pairs.len() * width]; r * k];
    for (s, (pa, pb)) in pairs.iter().enumerate() {
        for i in 0..r {
            for j in 0..k {
                let idx = i * k + j;
                let m = mults[idx] as i128;
                let row = &mut cmat[idx];
                // δ_ip · m · P_a[j][q]
                for q in 0..k {
                    let col = s * width + i * k + q;
                    row[col] = crate::int::reduce(row[col] as i128 + m * pa.entry(j, q) as i128, e[i]);
                }
                // − P_b[p][i] · m · δ_jq
                for p in 0..r {
                    let col = s * width + p * k + j;
                    row[col] = crate::int::reduce(row[col] as i128 - m * pb.entry(p, i) as i128, e[p]);
                }
            }
        }
    }
    let gens = kernel_of_functionals(orders, &cmat, &tmods);
    let coords: Vec<Vec<i64>> = gens.iter().map(|y| hg.coords_of_raw(y).into_coords()).collect();
    Subgroup::from_raw(hg.group(), &coords)
}

/// A ring of endomorphisms of a carrier, with its faithful representation.
#[derive(Debug, Clone)]
pub struct EndRingResult {
    ring: FinRing,
    rep: Vec<AbHom>,
    carrier: FinAbGroup,
    end_z: Arc<HomGroup>,
    set: Subgroup,
}

impl EndRingResult {
    /// The subring of `End_Z(M)` given by `set`, presented on its own basis.
    pub(crate) fn from_set(end_z: Arc<HomGroup>, set: Subgroup) -> Result<Self> {
        let carrier = end_z.src().clone();
        let basis = set.basis_group().clone();
        let rep: Vec<AbHom> = (0..basis.rank())
            .map(|t| end_z.from_coords(&set.inclusion().column(t)))
            .collect();
        let locate = |h: &AbHom| -> Result<Element> {
            let c = end_z.to_coords(h)?;
            set.coordinates(&c).ok_or_else(|| {
                Error::InternalInconsistency("a product of basis endomorphisms left the ring".into())
            })
        };
        let mut table = Vec::with_capacity(rep.len());
        for s in 0..rep.len() {
            let mut row = Vec::with_capacity(rep.len());
            for t in 0..rep.len() {
                row.push(locate(&rep[t].compose(&rep[s])?)?.into_coords());
            }
            table.push(row);
        }
        let one = locate(&AbHom::identity(&carrier))?.into_coords();
        let ring = FinRing::from_parts_unchecked(basis, table, one)?;
        Ok(EndRingResult { ring, rep, carrier, end_z, set })
    }

    /// Additive maps commuting with every map in `gens`.
    pub(crate) fn commutant(end_z: Arc<HomGroup>, gens: &[AbHom]) -> Result<Self> {
        let pairs: Vec<(&AbHom, &AbHom)> = gens.iter().map(|g| (g, g)).collect();
        let set = intertwiners(&end_z, &pairs);
        EndRingResult::from_set(end_z, set)
    }

    pub fn ring(&self) -> &FinRing {
        &self.ring
    }

    /// `rep()[t]` is the endomorphism of additive generator `t`.
    pub fn rep(&self) -> &[AbHom] {
        &self.rep
    }

    pub fn carrier(&self) -> &FinAbGroup {
        &self.carrier
    }

    pub fn order(&self) -> u128 {
        self.ring.order()
    }

    /// The ring as a subgroup of `End_Z(M)`; equal sets compare equal.
    pub fn set(&self) -> &Subgroup {
        &self.set
    }

    /// `End_Z(M)`, the common ambient of every stage.
    pub fn end_z(&self) -> &HomGroup {
        &self.end_z
    }

    pub fn is_commutative(&self) -> bool {
        self.ring.is_commutative()
    }

    /// The endomorphism represented by a ring element.
    pub fn hom_of(&self, x: &Element) -> AbHom {
        let c = self.set.inclusion().apply(x);
        self.end_z.from_coords(&c)
    }

    /// Ring coordinates of an endomorphism, if it belongs to the ring.
    pub fn coords_of(&self, h: &AbHom) -> Option<Element> {
        let c = self.end_z.to_coords(h).ok()?;
        self.set.coordinates(&c)
    }

    pub fn contains_hom(&self, h: &AbHom) -> bool {
        self.end_z.to_coords(h).map(|c| self.set.contains_element(&c)).unwrap_or(false)
    }

    /// The ring acting on the carrier through `rep`.
    pub fn as_action(&self) -> ModuleAction {
        ModuleAction { ring: BaseRing::Finite(self.ring.clone()), carrier: self.carrier.clone(), rep: self.rep.clone() }
    }

    /// The same representation with a different (possibly corrupted) ring.
    /// Only shapes are checked; meant for harness self-tests.
    pub fn with_ring_unchecked(&self, ring: FinRing) -> Result<Self> {
        if ring.additive() != self.ring.additive() {
            return Err(Error::ShapeMismatch("replacement ring has a different additive group".into()));
        }
        Ok(EndRingResult { ring, ..self.clone() })
    }

    /// The next stage of the tower: the commutant of this ring.
    pub fn commutant_ring(&self) -> Result<EndRingResult> {
        EndRingResult::commutant(self.end_z.clone(), &self.rep)
    }
}

pub(crate) fn end_z(carrier: &FinAbGroup, bounds: &Bounds) -> Result<Arc<HomGroup>> {
    bounds.check_carrier(carrier)?;
    bounds.check_hom_rank(carrier, carrier)?;
    Ok(Arc::new(HomGroup::new(carrier, carrier)?))
}

/// `End_R(M)` as the commutant of the action.
pub fn end_ring(a: &ModuleAction, bounds: &Bounds) -> Result<EndRingResult> {
    let ez = end_z(a.carrier(), bounds)?;
    EndRingResult::commutant(ez, a.constraint_maps())
}

/// Module homs between two modules over the same ring.
#[derive(Debug, Clone)]
pub struct HomModule {
    pub homs: HomGroup,
    /// The module homs as a subgroup of `homs.group()`.
    pub set: Subgroup,
}

impl HomModule {
    pub fn group(&self) -> &FinAbGroup {
        self.set.basis_group()
    }

    pub fn order(&self) -> u128 {
        self.set.order()
    }

    pub fn basis(&self) -> Vec<AbHom> {
        (0..self.set.basis_group().rank())
            .map(|t| self.homs.from_coords(&self.set.inclusion().column(t)))
            .collect()
    }

    pub fn contains(&self, h: &AbHom) -> bool {
        self.homs.to_coords(h).map(|c| self.set.contains_element(&c)).unwrap_or(false)
    }
}

pub(crate) fn hom_module_full(a: &ModuleAction, b: &ModuleAction, bounds: &Bounds) -> Result<HomModule> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch);
    }
    bounds.check_carrier(a.carrier())?;
    bounds.check_carrier(b.carrier())?;
    bounds.check_hom_rank(a.carrier(), b.carrier())?;
    let homs = HomGroup::new(a.carrier(), b.carrier())?;
    let pairs: Vec<(&AbHom, &AbHom)> = a.rep.iter().zip(&b.rep).collect();
    let set = intertwiners(&homs, &pairs);
    Ok(HomModule { homs, set })
}

/// `Hom_R(A, B)` as an abstract group with one hom per cyclic summand.
pub fn hom_module(a: &ModuleAction, b: &ModuleAction, bounds: &Bounds) -> Result<(FinAbGroup, Vec<AbHom>)> {
    let h = hom_module_full(a, b, bounds)?;
    Ok((h.group().clone(), h.basis()))
}

/// The annihilator of a module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Annihilator {
    /// `generator·Z` inside `Z`.
    Integers { generator: i64 },
    /// The ideal generated by `generator` in `Z/modulus`.
    Residues { modulus: i64, generator: i64 },
    /// A two-sided ideal of a finite ring, as an additive subgroup.
    Ideal(Subgroup),
}

impl Annihilator {
    pub fn is_zero(&self) -> bool {
        match self {
            Annihilator::Integers { .. } => false,
            Annihilator::Residues { modulus, generator } => generator % modulus == 0,
            Annihilator::Ideal(s) => s.is_trivial(),
        }
    }
}

pub fn annihilator_and_faithful(a: &ModuleAction) -> Result<(Annihilator, bool)> {
    let e = a.carrier().exponent();
    let ann = match &a.ring {
        BaseRing::Scalar(s) if s.is_integers() => Annihilator::Integers { generator: e },
        BaseRing::Scalar(s) => Annihilator::Residues { modulus: s.modulus(), generator: e % s.modulus() },
        BaseRing::Finite(r) => {
            let hg = HomGroup::new(a.carrier(), a.carrier())?;
            let cols: Vec<Vec<i64>> =
                a.rep.iter().map(|h| hg.to_coords(h).map(Element::into_coords)).collect::<Result<_>>()?;
            let psi = AbHom::from_columns(r.additive(), hg.group(), &cols)?;
            Annihilator::Ideal(kernel(&psi))
        }
    };
    let faithful = ann.is_zero();
    Ok((ann, faithful))
}

/// Whether the canonical map from the ring onto `t` (the biendomorphism
/// ring) is surjective.
pub fn is_balanced(a: &ModuleAction, t: &EndRingResult) -> Result<bool> {
    if a.carrier() != t.carrier() {
        return Err(Error::CarrierMismatch);
    }
    let gens: Vec<Element> =
        a.action_span_generators().iter().map(|h| t.end_z().to_coords(h)).collect::<Result<_>>()?;
    let psi = Subgroup::generated(t.end_z().group(), &gens)?;
    Ok(&psi == t.set())
}

/// A direct sum of modules with injections and projections.
#[derive(Debug, Clone)]
pub struct DirectSumModule {
    pub action: ModuleAction,
    pub injections: Vec<AbHom>,
    pub projections: Vec<AbHom>,
}

pub fn direct_sum_action(parts: &[ModuleAction]) -> Result<DirectSumModule> {
    let first = parts.first().ok_or_else(|| Error::ShapeMismatch("direct sum of no modules".into()))?;
    if parts.iter().any(|p| p.ring != first.ring) {
        return Err(Error::RingMismatch);
    }
    let groups: Vec<FinAbGroup> = parts.iter().map(|p| p.carrier.clone()).collect();
    let ds = direct_sum_group(&groups)?;
    let action = match &first.ring {
        BaseRing::Scalar(s) => ModuleAction::scalar(*s, ds.group.clone())?,
        BaseRing::Finite(r) => {
            let mut rep = Vec::with_capacity(first.rep.len());
            for g in 0..first.rep.len() {
                let mut acc = AbHom::zero(&ds.group, &ds.group);
                for (i, p) in parts.iter().enumerate() {
                    let block = ds.injections[i].compose(&p.rep[g])?.compose(&ds.projections[i])?;
                    acc = acc.add(&block)?;
                }
                rep.push(acc);
            }
            ModuleAction::finite(r.clone(), ds.group.clone(), rep)?
        }
    };
    // injections and projections must be module homs
    for (i, p) in parts.iter().enumerate() {
        for (x, y) in p.rep.iter().zip(&action.rep) {
            let inj_ok = ds.injections[i].compose(x)? == y.compose(&ds.injections[i])?;
            let proj_ok = ds.projections[i].compose(y)? == x.compose(&ds.projections[i])?;
            if !inj_ok || !proj_ok {
                return Err(Error::InternalInconsistency("direct sum maps are not module homs".into()));
            }
        }
    }
    Ok(DirectSumModule { action, injections: ds.injections, projections: ds.projections })
}

/// Checks that `End(⊕ M_i)` decomposes into the blocks `Hom(M_i, M_j)`:
/// the additive groups match and every endomorphism is the sum of its
/// blocks.
pub fn end_of_direct_sum_check(parts: &[ModuleAction], bounds: &Bounds) -> Result<bool> {
    let ds = direct_sum_action(parts)?;
    let s = end_ring(&ds.action, bounds)?;
    let mut cyclic_orders = Vec::new();
    let mut blocks = Vec::new();
    for pi in parts {
        let mut row = Vec::new();
        for pj in parts {
            let h = hom_module_full(pi, pj, bounds)?;
            cyclic_orders.extend_from_slice(h.group().factors());
            row.push(h);
        }
        blocks.push(row);
    }
    if FinAbGroup::from_cyclic_orders(&cyclic_orders)? != *s.ring().additive() {
        return Ok(false);
    }
    for phi in s.rep() {
        let mut rebuilt = AbHom::zero(&ds.action.carrier, &ds.action.carrier);
        for i in 0..parts.len() {
            for j in 0..parts.len() {
                let block = ds.projections[j].compose(phi)?.compose(&ds.injections[i])?;
                if !blocks[i][j].contains(&block) {
                    return Ok(false);
                }
                rebuilt = rebuilt.add(&ds.injections[j].compose(&block)?.compose(&ds.projections[i])?)?;
            }
        }
        if &rebuilt != phi {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::matrix_ring;

    fn g(f: &[i64]) -> FinAbGroup {
        FinAbGroup::new(f.to_vec()).unwrap()
    }

    fn z(f: &[i64]) -> ModuleAction {
        ModuleAction::over_integers(g(f))
    }

    #[test]
    fn end_ring_orders() {
        let b = Bounds::default();
        let s = end_ring(&z(&[2, 2]), &b).unwrap();
        assert_eq!(s.order(), 16);
        assert!(!s.is_commutative());
        let s = end_ring(&z(&[6]), &b).unwrap();
        assert_eq!(s.order(), 6);
        assert!(s.is_commutative());
        let s = end_ring(&z(&[2, 4]), &b).unwrap();
        assert_eq!(s.order(), 32);
        assert!(!s.is_commutative());
        assert!(crate::ring::ring_validate(s.ring()).valid);
        let s = end_ring(&z(&[]), &b).unwrap();
        assert_eq!(s.order(), 1);
    }

    #[test]
    fn action_validation() {
        assert!(validate_action(&z(&[2, 4])).valid);
        assert!(ModuleAction::over_residues(4, g(&[2, 4])).is_ok());
        assert!(ModuleAction::over_residues(2, g(&[2, 4])).is_err());
        let r = crate::ring::scalar_ring_as_finring(2).unwrap();
        let bad = ModuleAction::finite_unchecked(r.clone(), g(&[2]), vec![AbHom::zero(&g(&[2]), &g(&[2]))]).unwrap();
        let v = validate_action(&bad);
        assert!(!v.valid);
        assert!(v.violation.unwrap().contains("unit"));
        assert!(ModuleAction::finite(r, g(&[2]), vec![AbHom::identity(&g(&[2]))]).is_ok());
    }

    #[test]
    fn homs_between_modules() {
        let b = Bounds::default();
        let (h, _) = hom_module(&z(&[2]), &z(&[3]), &b).unwrap();
        assert!(h.is_trivial());
        let (h, basis) = hom_module(&z(&[4]), &z(&[6]), &b).unwrap();
        assert_eq!(h.factors(), &[2]);
        assert_eq!(basis[0].entry(0, 0), 3);
        let m = ModuleAction::over_residues(4, g(&[4])).unwrap();
        assert_eq!(hom_module(&z(&[4]), &m, &b).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn annihilators() {
        let (ann, f) = annihilator_and_faithful(&ModuleAction::over_residues(6, g(&[6])).unwrap()).unwrap();
        assert!(f && ann.is_zero());
        let (ann, f) = annihilator_and_faithful(&ModuleAction::over_residues(4, g(&[2])).unwrap()).unwrap();
        assert_eq!(ann, Annihilator::Residues { modulus: 4, generator: 2 });
        assert!(!f);
        let (ann, f) = annihilator_and_faithful(&z(&[2, 2])).unwrap();
        assert_eq!(ann, Annihilator::Integers { generator: 2 });
        assert!(!f);
    }

    #[test]
    fn regular_module_of_matrix_ring() {
        let r = matrix_ring(2, 2).unwrap();
        let a = ModuleAction::regular(&r).unwrap();
        let (_, faithful) = annihilator_and_faithful(&a).unwrap();
        assert!(faithful);
        // End of the regular module is the ring acting from the other side
        let s = end_ring(&a, &Bounds::default()).unwrap();
        assert_eq!(s.order(), 16);
        assert!(!s.is_commutative());
    }

    #[test]
    fn balanced_examples() {
        let b = Bounds::default();
        for (n, f) in [(2, vec![2, 2]), (6, vec![6]), (4, vec![2, 4])] {
            let a = ModuleAction::over_residues(n, g(&f)).unwrap();
            let s = end_ring(&a, &b).unwrap();
            let t = s.commutant_ring().unwrap();
            assert!(is_balanced(&a, &t).unwrap(), "{f:?}");
        }
    }

    #[test]
    fn direct_sums() {
        let b = Bounds::default();
        let ds = direct_sum_action(&[z(&[2]), z(&[3])]).unwrap();
        assert_eq!(ds.action.carrier().factors(), &[6]);
        assert!(end_of_direct_sum_check(&[z(&[2]), z(&[2])], &b).unwrap());
        assert!(end_of_direct_sum_check(&[z(&[2]), z(&[3])], &b).unwrap());
        assert!(end_of_direct_sum_check(&[z(&[4])], &b).unwrap());
        let m = ModuleAction::over_residues(4, g(&[4])).unwrap();
        assert_eq!(direct_sum_action(&[z(&[4]), m]).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn bounds_are_enforced() {
        let b = Bounds { carrier: 4, ..Bounds::default() };
        assert!(matches!(end_ring(&z(&[2, 4]), &b), Err(Error::BoundExceeded { size: 8, .. })));
        let b = Bounds { solution_rank: 3, ..Bounds::default() };
        assert!(matches!(end_ring(&z(&[2, 2]), &b), Err(Error::BoundExceeded { size: 4, .. })));
    }
}
