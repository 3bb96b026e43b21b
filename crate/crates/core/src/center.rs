//! The center `C(M)` of a module and the commutator subgroups of its
//! endomorphism ring.
//!
//! `C(M)` is the set of `m` with `fg(m) = gf(m)` for all endomorphisms
//! `f, g`. Because `(f, g) ↦ fg − gf` is additive in each argument, it is
//! enough to look at pairs of basis endomorphisms.

use crate::classify::is_torsion_element;
use crate::error::{Error, Result};
use crate::group::Element;
use crate::hom::AbHom;
use crate::lattice::kernel_of_functionals;
use crate::module::{end_ring, Bounds, EndRingResult, ModuleAction};
use crate::subgroup::{image_of, kernel, socle_and_essential, Subgroup};

/// Result of a theorem check on one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckOutcome {
    Pass,
    /// The hypothesis does not hold, so there is nothing to check.
    Vacuous,
    Fail,
}

impl CheckOutcome {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckOutcome::Pass => "pass",
            CheckOutcome::Vacuous => "vacuous",
            CheckOutcome::Fail => "fail",
        }
    }
}

/// `C(M)` from the basis of `S`, using `s_i(s_j(m)) = s_j(s_i(m))` for
/// every ordered pair as one linear system.
pub fn center_from_end(s: &EndRingResult) -> Subgroup {
    let m = s.carrier();
    let rep = s.rep();
    let r = m.rank();
    let mut tmods = Vec::new();
    let mut cols: Vec<Vec<i64>> = vec![Vec::new(); r];
    for i in 0..rep.len() {
        for j in i + 1..rep.len() {
            let (a, b) = (rep[i].compose(&rep[j]), rep[j].compose(&rep[i]));
            let (a, b) = (a.expect("endomorphisms compose"), b.expect("endomorphisms compose"));
            for (col, x) in cols.iter_mut().enumerate() {
                let g = m.generator(col);
                let v = m.sub(&a.apply(&g), &b.apply(&g));
                x.extend_from_slice(v.coords());
            }
            tmods.extend_from_slice(m.factors());
        }
    }
    if tmods.is_empty() {
        return Subgroup::whole(m);
    }
    let gens = kernel_of_functionals(m.factors(), &cols, &tmods);
    Subgroup::from_raw(m, &gens)
}

fn basis_commutators(s: &EndRingResult) -> Vec<AbHom> {
    let rep = s.rep();
    let mut out = Vec::new();
    for i in 0..rep.len() {
        for j in i + 1..rep.len() {
            let c = rep[i].commutator(&rep[j]).expect("endomorphisms of one carrier");
            if !c.is_zero() {
                out.push(c);
            }
        }
    }
    out
}

/// `Ker{S,S}`: the intersection of the kernels of the basis commutators.
pub fn commutator_kernel_from_end(s: &EndRingResult) -> Subgroup {
    let mut acc = Subgroup::whole(s.carrier());
    for c in basis_commutators(s) {
        if acc.is_trivial() {
            break;
        }
        acc = acc.intersect(&kernel(&c)).expect("same carrier");
    }
    acc
}

/// The subgroup generated by the images of all commutators `fg − gf`.
pub fn commutator_image_from_end(s: &EndRingResult) -> Subgroup {
    let m = s.carrier();
    let gens: Vec<Vec<i64>> = basis_commutators(s)
        .iter()
        .flat_map(|c| (0..m.rank()).map(move |j| c.column(j).into_coords()))
        .collect();
    Subgroup::from_raw(m, &gens)
}

pub fn center_of_module(a: &ModuleAction, bounds: &Bounds) -> Result<Subgroup> {
    Ok(center_from_end(&end_ring(a, bounds)?))
}

pub fn commutator_image(a: &ModuleAction, bounds: &Bounds) -> Result<Subgroup> {
    Ok(commutator_image_from_end(&end_ring(a, bounds)?))
}

/// Whether `End_R(M)` is commutative; cross-checked against `C(M) = M`.
pub fn is_endo_commutative(a: &ModuleAction, bounds: &Bounds) -> Result<bool> {
    let s = end_ring(a, bounds)?;
    let comm = s.is_commutative();
    if comm != center_from_end(&s).is_whole() {
        return Err(Error::EquivalenceViolation(format!(
            "ring commutativity {comm} disagrees with C(M) = M for {}",
            a.carrier()
        )));
    }
    Ok(comm)
}

/// The six equivalent conditions for a commutative endomorphism ring,
/// each computed on its own, together with `C(S) = S ∩ T`.
#[derive(Debug, Clone)]
pub struct CenterReport {
    pub center: Subgroup,
    pub commutator_kernel: Subgroup,
    pub commutator_image: Subgroup,
    /// `S` is commutative (from its multiplication table).
    pub endo_commutative: bool,
    /// `C(S) = S` (from the ring center).
    pub ring_center_is_whole: bool,
    pub s_order: u128,
    pub t_order: u128,
    pub s_subset_t: bool,
    /// `C(S) = S ∩ T` inside `End_Z(M)`.
    pub ring_center_is_s_cap_t: bool,
}

impl CenterReport {
    /// The six predicates in a fixed order.
    pub fn predicates(&self) -> [(&'static str, bool); 6] {
        [
            ("S commutative", self.endo_commutative),
            ("C(M) = M", self.center.is_whole()),
            ("C(S) = S", self.ring_center_is_whole),
            ("Ker{S,S} = M", self.commutator_kernel.is_whole()),
            ("Im{S,S} = 0", self.commutator_image.is_trivial()),
            ("S ⊆ T", self.s_subset_t),
        ]
    }

    /// Descriptions of everything that breaks the expected equivalences.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let p = self.predicates();
        if p.iter().any(|x| x.1 != p[0].1) {
            let parts: Vec<String> = p.iter().map(|(n, v)| format!("{n}: {v}")).collect();
            out.push(format!("main equivalence broken ({})", parts.join(", ")));
        }
        if self.center != self.commutator_kernel {
            out.push("C(M) differs from Ker{S,S}".into());
        }
        if !self.ring_center_is_s_cap_t {
            out.push("C(S) differs from S ∩ T".into());
        }
        out
    }
}

/// Builds the report from precomputed `S` and `T = Biend` without
/// asserting anything.
pub fn main_theorem_report_from(s: &EndRingResult, t: &EndRingResult) -> Result<CenterReport> {
    if s.carrier() != t.carrier() {
        return Err(Error::CarrierMismatch);
    }
    let center = center_from_end(s);
    let commutator_kernel = commutator_kernel_from_end(s);
    let commutator_image = commutator_image_from_end(s);
    let cs = s.ring().center();
    let cs_in_end = image_of(s.set().inclusion(), &cs)?;
    let s_cap_t = s.set().intersect(t.set())?;
    Ok(CenterReport {
        center,
        commutator_kernel,
        commutator_image,
        endo_commutative: s.ring().is_commutative(),
        ring_center_is_whole: cs.is_whole(),
        s_order: s.order(),
        t_order: t.order(),
        s_subset_t: t.set().contains(s.set())?,
        ring_center_is_s_cap_t: cs_in_end == s_cap_t,
    })
}

/// The full report; any broken equivalence is an error.
pub fn main_theorem_report(a: &ModuleAction, bounds: &Bounds) -> Result<CenterReport> {
    let s = end_ring(a, bounds)?;
    let t = s.commutant_ring()?;
    let report = main_theorem_report_from(&s, &t)?;
    let v = report.violations();
    if !v.is_empty() {
        return Err(Error::EquivalenceViolation(v.join("; ")));
    }
    Ok(report)
}

/// `s(N) ⊆ N` for every basis endomorphism `s` of `S`.
pub fn is_fully_invariant_in(n: &Subgroup, s: &EndRingResult) -> Result<bool> {
    if n.ambient() != s.carrier() {
        return Err(Error::AmbientMismatch);
    }
    Ok(s.rep().iter().all(|h| n.is_invariant_under(h)))
}

pub fn is_fully_invariant(n: &Subgroup, a: &ModuleAction, bounds: &Bounds) -> Result<bool> {
    is_fully_invariant_in(n, &end_ring(a, bounds)?)
}

/// Every fully invariant submodule, sorted, built as sums of the cyclic
/// `S`-submodules `S·m` without enumerating all subgroups.
pub fn fully_invariant_submodules(s: &EndRingResult, bounds: &Bounds) -> Result<Vec<Subgroup>> {
    let m = s.carrier();
    if m.order() > bounds.subgroup_order {
        return Err(Error::BoundExceeded { what: "group order", size: m.order(), bound: bounds.subgroup_order });
    }
    let mut cyclic: Vec<Subgroup> = Vec::new();
    for x in m.elements() {
        let orbit: Vec<Element> = s.rep().iter().map(|h| h.apply(&x)).collect();
        let sm = Subgroup::generated(m, &orbit)?;
        if !cyclic.contains(&sm) {
            cyclic.push(sm);
        }
    }
    let mut all = std::collections::BTreeSet::new();
    all.insert(Subgroup::trivial(m));
    let mut frontier: Vec<Subgroup> = vec![Subgroup::trivial(m)];
    while let Some(n) = frontier.pop() {
        for c in &cyclic {
            let next = n.sum(c)?;
            if !all.contains(&next) {
                if all.len() >= bounds.max_subgroups {
                    return Err(Error::BoundExceeded {
                        what: "subgroup count",
                        size: all.len() as u128 + 1,
                        bound: bounds.max_subgroups as u128,
                    });
                }
                all.insert(next.clone());
                frontier.push(next);
            }
        }
    }
    Ok(all.into_iter().collect())
}

/// Outcome of comparing a fully invariant submodule with its ambient module.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubmoduleCenterCheck {
    /// `C(N) = N ∩ C(M)`.
    pub center_formula: bool,
    /// `End_R(N) = {f|_N : f ∈ S}`.
    pub end_is_restriction: bool,
}

impl SubmoduleCenterCheck {
    pub fn holds(&self) -> bool {
        self.center_formula && self.end_is_restriction
    }
}

/// Compares `N` with `M` given `S = End_R(M)` and `C(M)`; the caller is
/// responsible for the endo-extendability hypothesis.
pub fn submodule_center_check_with(
    n: &Subgroup,
    a: &ModuleAction,
    s: &EndRingResult,
    cm: &Subgroup,
    bounds: &Bounds,
) -> Result<SubmoduleCenterCheck> {
    if !is_fully_invariant_in(n, s)? {
        return Err(Error::HypothesisUnmet("submodule is not fully invariant".into()));
    }
    let b = n.basis_group();
    let an = a.restrict(n)?;
    let sn = end_ring(&an, bounds)?;
    let restricted: Vec<Element> = s
        .rep()
        .iter()
        .map(|h| sn.end_z().to_coords(&n.restrict_endo(h)?))
        .collect::<Result<_>>()?;
    let s_restricted = Subgroup::generated(sn.end_z().group(), &restricted)?;
    let end_is_restriction = &s_restricted == sn.set();
    let cn = center_from_end(&sn);
    debug_assert_eq!(cn.ambient(), b);
    let cn_in_m = image_of(n.inclusion(), &cn)?;
    let center_formula = cn_in_m == n.intersect(cm)?;
    Ok(SubmoduleCenterCheck { center_formula, end_is_restriction })
}

/// `C(N) = N ∩ C(M)` and `End_R(N) = S|_N` for a fully invariant `N` of an
/// endo-extendable module.
pub fn center_of_fully_invariant_submodule_check(n: &Subgroup, a: &ModuleAction, bounds: &Bounds) -> Result<bool> {
    let s = end_ring(a, bounds)?;
    if !is_fully_invariant_in(n, &s)? {
        return Err(Error::HypothesisUnmet("submodule is not fully invariant".into()));
    }
    if !crate::classify::is_endo_extendable(a, bounds)? {
        return Err(Error::HypothesisUnmet("module is not endo-extendable".into()));
    }
    let cm = center_from_end(&s);
    Ok(submodule_center_check_with(n, a, &s, &cm, bounds)?.holds())
}

/// If `C(M)` is essential, every element of `Im{S,S}` lies in the torsion
/// subset `T(M)`.
pub fn essential_center_lemma_check(a: &ModuleAction, bounds: &Bounds) -> Result<CheckOutcome> {
    let s = end_ring(a, bounds)?;
    essential_center_lemma_check_with(a, &s)
}

pub fn essential_center_lemma_check_with(a: &ModuleAction, s: &EndRingResult) -> Result<CheckOutcome> {
    let cm = center_from_end(s);
    let (_, essential) = socle_and_essential(a.carrier(), &cm)?;
    if !essential {
        return Ok(CheckOutcome::Vacuous);
    }
    let im = commutator_image_from_end(s);
    for x in im.elements() {
        if !is_torsion_element(a, &x)? {
            return Ok(CheckOutcome::Fail);
        }
    }
    Ok(CheckOutcome::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FinAbGroup;

    fn z(f: &[i64]) -> ModuleAction {
        ModuleAction::over_integers(FinAbGroup::new(f.to_vec()).unwrap())
    }

    #[test]
    fn centers() {
        let b = Bounds::default();
        assert!(center_of_module(&z(&[2, 2]), &b).unwrap().is_trivial());
        assert!(center_of_module(&z(&[12]), &b).unwrap().is_whole());
        let m = FinAbGroup::new(vec![2, 4]).unwrap();
        let c = center_of_module(&z(&[2, 4]), &b).unwrap();
        assert_eq!(c, Subgroup::generated(&m, &[m.element(&[0, 2]).unwrap()]).unwrap());
    }

    #[test]
    fn commutator_images() {
        let b = Bounds::default();
        assert!(commutator_image(&z(&[2, 2]), &b).unwrap().is_whole());
        assert!(commutator_image(&z(&[6]), &b).unwrap().is_trivial());
        let im = commutator_image(&z(&[2, 4]), &b).unwrap();
        assert!(!im.is_trivial() && !im.is_whole());
    }

    #[test]
    fn endo_commutativity() {
        let b = Bounds::default();
        assert!(is_endo_commutative(&z(&[7]), &b).unwrap());
        assert!(!is_endo_commutative(&z(&[2, 2]), &b).unwrap());
        assert!(is_endo_commutative(&z(&[6]), &b).unwrap());
    }

    #[test]
    fn main_theorem_examples() {
        let b = Bounds::default();
        let r = main_theorem_report(&z(&[2, 2]), &b).unwrap();
        assert!(r.predicates().iter().all(|p| !p.1));
        assert_eq!((r.s_order, r.t_order), (16, 2));
        let r = main_theorem_report(&z(&[6]), &b).unwrap();
        assert!(r.predicates().iter().all(|p| p.1));
        let r = main_theorem_report(&z(&[2, 4]), &b).unwrap();
        assert!(r.predicates().iter().all(|p| !p.1));
        assert_eq!(r.center.order(), 2);
    }

    #[test]
    fn corrupted_ring_is_caught() {
        let b = Bounds::default();
        let s = end_ring(&z(&[2, 2]), &b).unwrap();
        let t = s.commutant_ring().unwrap();
        let bad = s.with_ring_unchecked(s.ring().symmetrized_unchecked()).unwrap();
        let r = main_theorem_report_from(&bad, &t).unwrap();
        assert!(!r.violations().is_empty());
    }

    #[test]
    fn full_invariance() {
        let b = Bounds::default();
        let m = FinAbGroup::new(vec![2, 4]).unwrap();
        let a = z(&[2, 4]);
        let e = |v: &[i64]| m.element(v).unwrap();
        let socle = Subgroup::generated(&m, &[e(&[1, 0]), e(&[0, 2])]).unwrap();
        assert!(is_fully_invariant(&socle, &a, &b).unwrap());
        let first = Subgroup::generated(&m, &[e(&[1, 0])]).unwrap();
        assert!(!is_fully_invariant(&first, &a, &b).unwrap());
        let twice = Subgroup::generated(&m, &[e(&[0, 2])]).unwrap();
        assert!(is_fully_invariant(&twice, &a, &b).unwrap());
        assert!(is_fully_invariant(&center_of_module(&a, &b).unwrap(), &a, &b).unwrap());
    }

    #[test]
    fn fully_invariant_lattices() {
        let b = Bounds::default();
        for f in [vec![2, 4], vec![2, 2, 4], vec![4, 4], vec![2, 8], vec![6, 12]] {
            let a = z(&f);
            let s = end_ring(&a, &b).unwrap();
            let fast = fully_invariant_submodules(&s, &b).unwrap();
            let slow = crate::subgroup::enumerate_invariant_subgroups(a.carrier(), s.rep(), 4096).unwrap();
            assert_eq!(fast, slow, "{f:?}");
        }
    }

    #[test]
    fn fully_invariant_center_formula() {
        let b = Bounds::default();
        let m = FinAbGroup::new(vec![4, 4]).unwrap();
        let a = z(&[4, 4]);
        let twice = crate::subgroup::multiples(&m, 2);
        assert!(center_of_fully_invariant_submodule_check(&twice, &a, &b).unwrap());
        assert!(center_of_fully_invariant_submodule_check(&Subgroup::whole(&m), &a, &b).unwrap());
        let k = FinAbGroup::new(vec![2, 2]).unwrap();
        assert!(center_of_fully_invariant_submodule_check(&Subgroup::trivial(&k), &z(&[2, 2]), &b).unwrap());
        let m = FinAbGroup::new(vec![2, 4]).unwrap();
        let err = center_of_fully_invariant_submodule_check(&Subgroup::whole(&m), &z(&[2, 4]), &b);
        assert!(matches!(err, Err(Error::HypothesisUnmet(_))));
    }

    #[test]
    fn essential_center_lemma() {
        let b = Bounds::default();
        assert_eq!(essential_center_lemma_check(&z(&[6]), &b).unwrap(), CheckOutcome::Pass);
        let a = ModuleAction::over_residues(6, FinAbGroup::new(vec![6]).unwrap()).unwrap();
        assert_eq!(essential_center_lemma_check(&a, &b).unwrap(), CheckOutcome::Pass);
        let a = ModuleAction::over_residues(4, FinAbGroup::new(vec![2, 4]).unwrap()).unwrap();
        assert_eq!(essential_center_lemma_check(&a, &b).unwrap(), CheckOutcome::Vacuous);
    }
}
