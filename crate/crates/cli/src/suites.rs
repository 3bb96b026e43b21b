//! Theorem suites evaluated on single modules, direct sums and ideals.

use endocomm::center::{
    center_from_end, essential_center_lemma_check_with, fully_invariant_submodules, is_fully_invariant_in,
    main_theorem_report_from, submodule_center_check_with,
};
use endocomm::classify::{submodules, ClassifierReport};
use endocomm::int::{divisors, is_squarefree};
use endocomm::subgroup::multiples;
use endocomm::tower::classify_flags;
use endocomm::{
    classifier_report, direct_sum_action, end_of_direct_sum_check, end_ring, endo_tower, hom_module,
    is_endo_commutative, is_multiplication, s_module_multiplication_check, submodule_lattice_comparison, Bounds,
    CheckOutcome, Ecdim, EndRingResult, Error, FinAbGroup, LatticeComparison, ModuleAction, Subgroup, TowerClass,
};

/// Outcome of one suite on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Vacuous,
    Fail(String),
}

impl Outcome {
    fn check(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
        if ok {
            Outcome::Pass
        } else {
            Outcome::Fail(msg())
        }
    }

    fn when(hypothesis: bool, ok: impl FnOnce() -> bool, msg: impl FnOnce() -> String) -> Outcome {
        if !hypothesis {
            Outcome::Vacuous
        } else {
            Outcome::check(ok(), msg)
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Vacuous => "vacuous",
            Outcome::Fail(_) => "fail",
        }
    }
}

impl From<CheckOutcome> for Outcome {
    fn from(c: CheckOutcome) -> Self {
        match c {
            CheckOutcome::Pass => Outcome::Pass,
            CheckOutcome::Vacuous => Outcome::Vacuous,
            CheckOutcome::Fail => Outcome::Fail("check failed".into()),
        }
    }
}

/// Suites checked on every instance, in report order.
pub const INSTANCE_SUITES: &[&str] = &[
    "l1",
    "st1",
    "st2",
    "main",
    "ebe",
    "ess",
    "balanced_faithful",
    "generator",
    "srsub",
    "maj",
    "mul",
    "comul",
    "dissimilar",
    "l4_1",
    "endo_extendable_props",
    "qi_ee",
    "d_module",
    "tower",
    "triple_commutant",
];

/// Suites checked on direct sums of corpus instances.
pub const SUM_SUITES: &[&str] = &["dsum_corollary", "direct_sum_center", "sec"];

/// Suites checked on the ideals of `Z/n`.
pub const RING_SUITES: &[&str] = &["reduced_ideals"];

#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    pub depth: usize,
    /// Replace the multiplication table of `End_R(M)` by a corrupted one.
    pub inject_mutant: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { depth: 6, inject_mutant: false }
    }
}

pub type SuiteResults = Vec<(&'static str, Outcome)>;

fn ecdim_of(flags: &[bool]) -> Result<(Ecdim, TowerClass), Error> {
    classify_flags(flags)
}

/// Runs every instance suite on a module over `Z` or `Z/n`.
pub fn instance_suites(
    a: &ModuleAction,
    bounds: &Bounds,
    opts: &CheckOptions,
) -> Result<(SuiteResults, ClassifierReport), Error> {
    let s = end_ring(a, bounds)?;
    let t = s.commutant_ring()?;
    let probe = if opts.inject_mutant { s.with_ring_unchecked(s.ring().symmetrized_unchecked())? } else { s.clone() };
    let report = main_theorem_report_from(&probe, &t)?;
    let cr = classifier_report(a, bounds)?;
    let subs = submodules(a, bounds)?;
    let mut out: SuiteResults = Vec::new();
    let comm = s.is_commutative();

    out.push(("l1", Outcome::check(is_fully_invariant_in(&report.center, &s)?, || "C(M) is not fully invariant".into())));
    out.push((
        "st1",
        Outcome::check(report.center == report.commutator_kernel, || "C(M) differs from Ker{S,S}".into()),
    ));
    out.push(("st2", Outcome::check(report.ring_center_is_s_cap_t, || "C(S) differs from S ∩ T".into())));
    let preds = report.predicates();
    out.push((
        "main",
        Outcome::check(preds.iter().all(|p| p.1 == preds[0].1), || {
            let parts: Vec<String> = preds.iter().map(|(n, v)| format!("{n}: {v}")).collect();
            parts.join(", ")
        }),
    ));
    out.push((
        "ebe",
        Outcome::check((s.set() == t.set()) == comm, || format!("End = Biend is {} but S commutative is {comm}", s.set() == t.set())),
    ));
    out.push(("ess", essential_center_lemma_check_with(a, &s)?.into()));
    out.push((
        "balanced_faithful",
        Outcome::when(cr.faithful && cr.balanced, || t.is_commutative(), || "balanced faithful module with noncommutative Biend".into()),
    ));
    out.push((
        "generator",
        Outcome::when(
            cr.generator,
            || cr.faithful && cr.balanced && t.is_commutative(),
            || format!("generator with faithful={} balanced={} Biend commutative={}", cr.faithful, cr.balanced, t.is_commutative()),
        ),
    ));
    let lattices = submodule_lattice_comparison(a, bounds)?;
    out.push((
        "srsub",
        Outcome::check(lattices != LatticeComparison::Incomparable && lattices == cr.lattices, || {
            format!("lattice comparison {} (shortcut {})", lattices.as_str(), cr.lattices.as_str())
        }),
    ));
    out.push((
        "maj",
        Outcome::when(cr.multiplication, || lattices == LatticeComparison::Coincide, || format!("lattices {}", lattices.as_str())),
    ));
    let all_fi = subs.iter().map(|n| is_fully_invariant_in(n, &s)).collect::<Result<Vec<_>, _>>()?;
    out.push((
        "mul",
        Outcome::when(
            cr.multiplication,
            || comm && all_fi.iter().all(|&x| x),
            || "multiplication module that is not endo-commutative or has a submodule that is not fully invariant".into(),
        ),
    ));
    out.push(("comul", Outcome::when(cr.comultiplication, || comm, || "comultiplication module is not endo-commutative".into())));
    out.push((
        "dissimilar",
        Outcome::when(cr.dissimilar_semisimple, || comm, || "dissimilar semisimple module is not endo-commutative".into()),
    ));

    let tower = endo_tower(a, opts.depth.max(3), bounds)?;
    let (ecdim, class) = ecdim_of(&tower.commutative_flags)?;
    out.push((
        "l4_1",
        if cr.multiplication && cr.self_generator {
            let sm = s_module_multiplication_check(a, bounds)?;
            Outcome::check(sm && class == TowerClass::Strongly, || {
                format!("S-module multiplication {sm}, tower classification {class}")
            })
        } else {
            Outcome::Vacuous
        },
    ));
    out.push(("endo_extendable_props", endo_extendable_outcome(a, &s, &cr, bounds)?));
    out.push((
        "qi_ee",
        Outcome::check(cr.quasi_injective == cr.endo_extendable, || {
            format!("quasi-injective {} but endo-extendable {}", cr.quasi_injective, cr.endo_extendable)
        }),
    ));
    let mut all_mult = true;
    for n in subs.iter().rev() {
        if !is_multiplication(&a.restrict(n)?, bounds)? {
            all_mult = false;
            break;
        }
    }
    out.push((
        "d_module",
        Outcome::check(cr.d_module == all_mult, || format!("D-module {} but all submodules multiplication {all_mult}", cr.d_module)),
    ));

    let mut problems = tower.violations();
    problems.retain(|p| !p.contains("period two"));
    if (ecdim == Ecdim::Finite(1)) != comm {
        problems.push(format!("ecdim {ecdim} but S commutative is {comm}"));
    }
    let le2 = matches!(ecdim, Ecdim::Finite(n) if n <= 2);
    if le2 != (comm || t.is_commutative()) {
        problems.push(format!("ecdim {ecdim} disagrees with commutativity of S and Biend"));
    }
    if a.carrier().is_cyclic() && (ecdim != Ecdim::Finite(1) || class != TowerClass::Strongly) {
        problems.push(format!("cyclic module with ecdim {ecdim} and classification {class}"));
    }
    out.push(("tower", Outcome::check(problems.is_empty(), || problems.join("; "))));
    out.push((
        "triple_commutant",
        Outcome::check(tower.period_two_verified, || format!("stage sizes {:?}", tower.sizes())),
    ));
    debug_assert_eq!(out.iter().map(|x| x.0).collect::<Vec<_>>(), INSTANCE_SUITES);
    Ok((out, cr))
}

fn endo_extendable_outcome(
    a: &ModuleAction,
    s: &EndRingResult,
    cr: &ClassifierReport,
    bounds: &Bounds,
) -> Result<Outcome, Error> {
    if cr.quasi_injective && !cr.endo_extendable {
        return Ok(Outcome::Fail("quasi-injective but not endo-extendable".into()));
    }
    if !cr.endo_extendable {
        return Ok(Outcome::Vacuous);
    }
    let cm = center_from_end(s);
    for n in fully_invariant_submodules(s, bounds)? {
        let c = submodule_center_check_with(&n, a, s, &cm, bounds)?;
        if !c.holds() {
            return Ok(Outcome::Fail(format!(
                "fully invariant submodule {:?}: C(N) = N ∩ C(M) is {}, End(N) = S|N is {}",
                n.canonical_generators().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                c.center_formula,
                c.end_is_restriction
            )));
        }
    }
    Ok(Outcome::Pass)
}

/// Whether `Hom(M_i, M_j) = 0` for all `i ≠ j`.
pub fn cross_homs_vanish(parts: &[ModuleAction], bounds: &Bounds) -> Result<bool, Error> {
    for (i, x) in parts.iter().enumerate() {
        for (j, y) in parts.iter().enumerate() {
            if i != j && hom_module(x, y, bounds)?.0.order() != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Runs the direct-sum suites on `⊕ parts`.
pub fn sum_suites(parts: &[ModuleAction], bounds: &Bounds) -> Result<SuiteResults, Error> {
    let ds = direct_sum_action(parts)?;
    let cross_zero = cross_homs_vanish(parts, bounds)?;
    let s = end_ring(&ds.action, bounds)?;
    let mut out: SuiteResults = Vec::new();

    let blocks = end_of_direct_sum_check(parts, bounds)?;
    // ⊕ End(M_i) sits inside End(⊕ M_i), so equal additive groups mean equality
    let mut cyclic_orders = Vec::new();
    for p in parts {
        cyclic_orders.extend_from_slice(end_ring(p, bounds)?.ring().additive().factors());
    }
    let diagonal = FinAbGroup::from_cyclic_orders(&cyclic_orders)? == *s.ring().additive();
    out.push((
        "dsum_corollary",
        Outcome::check(blocks && diagonal == cross_zero, || {
            format!("block decomposition {blocks}, End(⊕) = ⊕End {diagonal}, cross Homs vanish {cross_zero}")
        }),
    ));

    let c = center_from_end(&s);
    let mut gens = Vec::new();
    for (p, inj) in parts.iter().zip(&ds.injections) {
        let cp = center_from_end(&end_ring(p, bounds)?);
        gens.extend(cp.canonical_generators().iter().map(|x| inj.apply(x)));
    }
    let sum_of_centers = Subgroup::generated(ds.action.carrier(), &gens)?;
    let inside = sum_of_centers.contains(&c)?;
    let equal = c == sum_of_centers;
    out.push((
        "direct_sum_center",
        Outcome::check(inside && (!cross_zero || equal), || {
            format!("C(⊕) ⊆ ⊕C is {inside}, equality {equal}, cross Homs vanish {cross_zero}")
        }),
    ));

    let whole = match is_endo_commutative(&ds.action, bounds) {
        Ok(x) => x,
        Err(Error::EquivalenceViolation(m)) => {
            out.push(("sec", Outcome::Fail(m)));
            return Ok(out);
        }
        Err(e) => return Err(e),
    };
    let mut each = true;
    for p in parts {
        each &= is_endo_commutative(p, bounds)?;
    }
    let hyp = whole || (cross_zero && each);
    out.push((
        "sec",
        Outcome::when(hyp, || (!whole || each) && (!(cross_zero && each) || whole), || {
            format!("sum endo-commutative {whole}, summands endo-commutative {each}, cross Homs vanish {cross_zero}")
        }),
    ));
    Ok(out)
}

/// Every ideal of `Z/n`, `n` squarefree, is endo-commutative over `Z/n`.
pub fn reduced_ideal_suite(n: i64, bounds: &Bounds) -> Result<SuiteResults, Error> {
    if !is_squarefree(n) {
        return Ok(vec![("reduced_ideals", Outcome::Vacuous)]);
    }
    let r = FinAbGroup::cyclic(n)?;
    let mut bad = Vec::new();
    for d in divisors(n) {
        let ideal = multiples(&r, d);
        let a = ModuleAction::over_residues(n, ideal.basis_group().clone())?;
        if !is_endo_commutative(&a, bounds)? {
            bad.push(d);
        }
    }
    Ok(vec![("reduced_ideals", Outcome::check(bad.is_empty(), || format!("ideals generated by {bad:?} in Z/{n}")))])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(f: &[i64]) -> ModuleAction {
        ModuleAction::over_integers(FinAbGroup::new(f.to_vec()).unwrap())
    }

    #[test]
    fn clean_instances_pass() {
        let b = Bounds::default();
        for f in [vec![], vec![2], vec![2, 2], vec![2, 4], vec![12], vec![3, 3]] {
            let (res, _) = instance_suites(&z(&f), &b, &CheckOptions::default()).unwrap();
            for (name, o) in res {
                assert!(!matches!(o, Outcome::Fail(_)), "{f:?} {name} {o:?}");
            }
        }
        let a = ModuleAction::over_residues(4, FinAbGroup::new(vec![2, 4]).unwrap()).unwrap();
        let (res, _) = instance_suites(&a, &b, &CheckOptions::default()).unwrap();
        assert_eq!(res.iter().find(|x| x.0 == "generator").unwrap().1, Outcome::Pass);
    }

    #[test]
    fn mutant_breaks_main() {
        let b = Bounds::default();
        let opts = CheckOptions { inject_mutant: true, ..CheckOptions::default() };
        let (res, _) = instance_suites(&z(&[2, 2]), &b, &opts).unwrap();
        assert!(matches!(res.iter().find(|x| x.0 == "main").unwrap().1, Outcome::Fail(_)));
    }

    #[test]
    fn sums() {
        let b = Bounds::default();
        let res = sum_suites(&[z(&[2]), z(&[2])], &b).unwrap();
        assert_eq!(res[1].1, Outcome::Pass);
        assert_eq!(res[2].1, Outcome::Vacuous);
        let res = sum_suites(&[z(&[2]), z(&[3])], &b).unwrap();
        assert!(res.iter().all(|x| x.1 == Outcome::Pass));
    }

    #[test]
    fn ideals() {
        let b = Bounds::default();
        assert_eq!(reduced_ideal_suite(30, &b).unwrap()[0].1, Outcome::Pass);
        assert_eq!(reduced_ideal_suite(12, &b).unwrap()[0].1, Outcome::Vacuous);
    }
}
