//! Decidable module predicates: multiplication, comultiplication,
//! distributivity, self-generation, extendability and relatives.
//!
//! Predicates that quantify over submodules enumerate them once; the
//! `*_with` helpers share that enumeration inside [`classifier_report`].

use crate::error::{Error, Result};
use crate::group::{Element, FinAbGroup};
use crate::hom::{AbHom, HomGroup};
use crate::int::{divisors, is_squarefree};
use crate::module::{
    annihilator_and_faithful, end_ring, hom_module_full, is_balanced, BaseRing, Bounds, EndRingResult, ModuleAction,
};
use crate::subgroup::{
    enumerate_invariant_subgroups_limited, image, multiples, torsion_part, Subgroup,
};

/// Submodules of `a`: subgroups invariant under the action.
pub fn submodules(a: &ModuleAction, bounds: &Bounds) -> Result<Vec<Subgroup>> {
    enumerate_invariant_subgroups_limited(a.carrier(), a.rep(), bounds.subgroup_order, bounds.max_subgroups)
}

fn require_scalar(a: &ModuleAction) -> Result<()> {
    if a.is_scalar() {
        Ok(())
    } else {
        Err(Error::NonScalarRing)
    }
}

/// The least positive `t` with `tM ⊆ N`; `(N : M)` is generated by it.
pub fn conductor(n: &Subgroup) -> Result<i64> {
    let m = n.ambient();
    for t in divisors(m.exponent()) {
        if n.contains(&multiples(m, t))? {
            return Ok(t);
        }
    }
    Err(Error::InternalInconsistency("exponent does not annihilate the group".into()))
}

fn is_multiplication_with(subs: &[Subgroup]) -> Result<bool> {
    for n in subs {
        let c = conductor(n)?;
        if &multiples(n.ambient(), c) != n {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_comultiplication_with(subs: &[Subgroup]) -> bool {
    subs.iter()
        .all(|n| &torsion_part(n.ambient(), n.basis_group().exponent()) == n)
}

/// Every submodule is `MI` for an ideal `I`; decided via `N = (N : M)M`.
pub fn is_multiplication(a: &ModuleAction, bounds: &Bounds) -> Result<bool> {
    require_scalar(a)?;
    is_multiplication_with(&submodules(a, bounds)?)
}

/// Every submodule is `Ann_M(I)` for an ideal `I`; decided via
/// `N = Ann_M(ann(N)) = M[exp N]`.
pub fn is_comultiplication(a: &ModuleAction, bounds: &Bounds) -> Result<bool> {
    require_scalar(a)?;
    Ok(is_comultiplication_with(&submodules(a, bounds)?))
}

fn distributive_at(x: &Subgroup, y: &Subgroup, z: &Subgroup) -> Result<bool> {
    let lhs = x.intersect(&y.sum(z)?)?;
    let rhs = x.intersect(y)?.sum(&x.intersect(z)?)?;
    Ok(lhs == rhs)
}

fn is_d_module_with(subs: &[Subgroup]) -> Result<bool> {
    // Triples are visited by their largest index so that small submodules,
    // where failures usually sit, are tried first.
    for m in 0..subs.len() {
        for i in 0..=m {
            for j in 0..=m {
                for k in j + 1..=m {
                    if i.max(k) != m {
                        continue;
                    }
                    let (b, c) = (&subs[j], &subs[k]);
                    if b.contains(c)? || c.contains(b)? {
                        continue;
                    }
                    if !distributive_at(&subs[i], b, c)? {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Whether the submodule lattice is distributive.
pub fn is_d_module(a: &ModuleAction, bounds: &Bounds) -> Result<bool> {
    is_d_module_with(&submodules(a, bounds)?)
}

/// `I_N = {f ∈ S : f(M) ⊆ N}` as a list of generating endomorphisms.
pub fn maps_into(s: &EndRingResult, n: &Subgroup) -> Result<Vec<AbHom>> {
    let m = s.carrier();
    if n.ambient() != m {
        return Err(Error::AmbientMismatch);
    }
    if n.is_whole() {
        return Ok(s.rep().to_vec());
    }
    let q = n.quotient();
    let hq = HomGroup::new(m, &q.group)?;
    let cols: Vec<Vec<i64>> = s
        .rep()
        .iter()
        .map(|h| Ok(hq.to_coords(&q.projection.compose(h)?)?.into_coords()))
        .collect::<Result<_>>()?;
    let psi = AbHom::from_columns(s.ring().additive(), hq.group(), &cols)?;
    let ker = crate::subgroup::kernel(&psi);
    Ok(ker.generators().iter().map(|x| s.hom_of(x)).collect())
}

/// `Σ_{f ∈ I_N} f(M)`.
pub fn trace_into(s: &EndRingResult, n: &Subgroup) -> Result<Subgroup> {
    let m = s.carrier();
    let mut acc = Subgroup::trivial(m);
    for f in maps_into(s, n)? {
        acc = acc.sum(&image(&f))?;
    }
    Ok(acc)
}

fn is_self_generator_with(s: &EndRingResult, subs: &[Subgroup]) -> Result<bool> {
    for n in subs {
        if &trace_into(s, n)? != n {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every submodule `N` is the sum of `f(M)` over `f ∈ S` with `f(M) ⊆ N`.
pub fn is_self_generator(a: &ModuleAction, bounds: &Bounds) -> Result<bool> {
    let s = end_ring(a, bounds)?;
    is_self_generator_with(&s, &submodules(a, bounds)?)
}

/// Whether `ann(x) ≠ 0`.
pub fn is_torsion_element(a: &ModuleAction, x: &Element) -> Result<bool> {
    let m = a.carrier();
    let x = m.element(x.coords())?;
    match a.ring() {
        BaseRing::Scalar(s) if s.is_integers() => Ok(true),
        BaseRing::Scalar(s) => Ok(m.element_order(&x) < s.modulus()),
        BaseRing::Finite(r) => {
            let cols: Vec<Vec<i64>> = a.rep().iter().map(|h| h.apply(&x).into_coords()).collect();
            let orbit = AbHom::from_columns(r.additive(), m, &cols)?;
            Ok(!crate::subgroup::kernel(&orbit).is_trivial())
        }
    }
}

/// `T(M) = {m : ann(m) ≠ 0}`, which need not be a subgroup.
pub fn torsion_subset(a: &ModuleAction, bounds: &Bounds) -> Result<Vec<Element>> {
    let m = a.carrier();
    if m.order() > bounds.carrier {
        return Err(Error::BoundExceeded { what: "carrier order", size: m.order(), bound: bounds.carrier });
    }
    let mut out = Vec::new();
    for x in m.elements() {
        if is_torsion_element(a, &x)? {
            out.push(x);
        }
    }
    Ok(out)
}

/// The trace ideal of `M` in `Z/n`, written as `generator·(Z/n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceIdeal {
    pub modulus: i64,
    /// A divisor of `modulus`.
    pub generator: i64,
}

impl TraceIdeal {
    pub fn is_whole(&self) -> bool {
        self.generator == 1
    }
}

/// The trace ideal `Σ f(M)` over `f ∈ Hom(M, R)` for `R = Z/n`, and
/// whether `M` is a generator (trace ideal equal to `R`).
pub fn trace_ideal_and_generator(a: &ModuleAction) -> Result<(TraceIdeal, bool)> {
    let n = match a.scalar_ring() {
        Some(s) if !s.is_integers() => s.modulus(),
        _ => return Err(Error::NonScalarRing),
    };
    let r = FinAbGroup::cyclic(n)?;
    let hg = HomGroup::new(a.carrier(), &r)?;
    let mut gens = Vec::new();
    for h in hg.basis() {
        for j in 0..a.carrier().rank() {
            gens.push(h.column(j));
        }
    }
    let trace = Subgroup::generated(&r, &gens)?;
    let generator = n / trace.order() as i64;
    let ideal = TraceIdeal { modulus: n, generator };
    Ok((ideal, ideal.is_whole()))
}

fn check_extendable_bound(a: &ModuleAction, bounds: &Bounds) -> Result<()> {
    let m = a.carrier();
    if m.order() > bounds.extendable {
        return Err(Error::BoundExceeded { what: "extendable carrier order", size: m.order(), bound: bounds.extendable });
    }
    Ok(())
}

/// The maps `X → M` that extend to endomorphisms of `M`, as a subgroup of
/// `Hom_Z(X, M)` (with `X` on its basis group).
fn extendable_maps(s: &EndRingResult, x: &Subgroup) -> Result<(HomGroup, Subgroup)> {
    let incl = x.inclusion();
    let hg = HomGroup::new(x.basis_group(), s.carrier())?;
    let gens: Vec<Element> = s.rep().iter().map(|f| hg.to_coords(&f.compose(incl)?)).collect::<Result<_>>()?;
    let set = Subgroup::generated(hg.group(), &gens)?;
    Ok((hg, set))
}

fn all_extend(hg: &HomGroup, ext: &Subgroup, maps: &[AbHom]) -> Result<bool> {
    for h in maps {
        if !ext.contains_element(&hg.to_coords(h)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_endo_extendable_with(a: &ModuleAction, s: &EndRingResult, subs: &[Subgroup], bounds: &Bounds) -> Result<bool> {
    for x in subs {
        if x.is_trivial() || x.is_whole() {
            continue;
        }
        let (hg, ext) = extendable_maps(s, x)?;
        let sx = end_ring(&a.restrict(x)?, bounds)?;
        let incl = x.inclusion();
        let targets: Vec<AbHom> = sx.rep().iter().map(|f| incl.compose(f)).collect::<Result<_>>()?;
        if !all_extend(&hg, &ext, &targets)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn is_quasi_injective_with(a: &ModuleAction, s: &EndRingResult, subs: &[Subgroup], bounds: &Bounds) -> Result<bool> {
    for x in subs {
        if x.is_trivial() || x.is_whole() {
            continue;
        }
        let (hg, ext) = extendable_maps(s, x)?;
        let homs = hom_module_full(&a.restrict(x)?, a, bounds)?;
        if !all_extend(&hg, &ext, &homs.basis())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every endomorphism of every submodule extends to `M`.
pub fn is_endo_extendable(a: &ModuleAction, bounds: &Bounds) -> Result<bool> {
    check_extendable_bound(a, bounds)?;
    let s = end_ring(a, bounds)?;
    is_endo_extendable_with(a, &s, &submodules(a, bounds)?, bounds)
}

/// Every hom from a submodule into `M` extends to `M`.
pub fn is_quasi_injective(a: &ModuleAction, bounds: &Bounds) -> Result<bool> {
    check_extendable_bound(a, bounds)?;
    let s = end_ring(a, bounds)?;
    is_quasi_injective_with(a, &s, &submodules(a, bounds)?, bounds)
}

/// A direct sum of pairwise non-isomorphic simple modules. Over `Z` and
/// `Z/n` the simples are the `Z/p`, so this means cyclic of squarefree
/// order.
pub fn is_dissimilar_semisimple(a: &ModuleAction) -> Result<bool> {
    require_scalar(a)?;
    let m = a.carrier();
    Ok(m.is_cyclic() && is_squarefree(m.exponent()))
}

/// How the lattices of `R`-submodules and `S`-submodules compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeComparison {
    Coincide,
    /// Every `S`-submodule is an `R`-submodule, but not conversely.
    RStrict,
    Incomparable,
}

impl LatticeComparison {
    pub fn as_str(&self) -> &'static str {
        match self {
            LatticeComparison::Coincide => "coincide",
            LatticeComparison::RStrict => "r_strict",
            LatticeComparison::Incomparable => "incomparable",
        }
    }
}

fn lattice_comparison_with(s: &EndRingResult, subs: &[Subgroup]) -> LatticeComparison {
    let s_count = subs.iter().filter(|n| s.rep().iter().all(|h| n.is_invariant_under(h))).count();
    if s_count == subs.len() {
        LatticeComparison::Coincide
    } else {
        // S contains the scalars, so S-submodules are always R-submodules
        LatticeComparison::RStrict
    }
}

/// Compares `R`-submodules with `S`-submodules, computing both lattices.
pub fn submodule_lattice_comparison(a: &ModuleAction, bounds: &Bounds) -> Result<LatticeComparison> {
    require_scalar(a)?;
    let s = end_ring(a, bounds)?;
    let r_lattice = submodules(a, bounds)?;
    let s_lattice = enumerate_invariant_subgroups_limited(
        a.carrier(),
        s.rep(),
        bounds.subgroup_order,
        bounds.max_subgroups,
    )?;
    let s_in_r = s_lattice.iter().all(|n| r_lattice.binary_search(n).is_ok());
    Ok(match (s_in_r, s_lattice.len() == r_lattice.len()) {
        (true, true) => LatticeComparison::Coincide,
        (true, false) => LatticeComparison::RStrict,
        (false, _) => LatticeComparison::Incomparable,
    })
}

/// For a self-generator multiplication module, checks `I_X M = X` for
/// every `S`-submodule `X`, i.e. that `M` is a multiplication `S`-module.
pub fn s_module_multiplication_check(a: &ModuleAction, bounds: &Bounds) -> Result<bool> {
    require_scalar(a)?;
    let s = end_ring(a, bounds)?;
    let subs = submodules(a, bounds)?;
    if !is_multiplication_with(&subs)? || !is_self_generator_with(&s, &subs)? {
        return Err(Error::HypothesisUnmet("module is not a self-generator multiplication module".into()));
    }
    let s_subs =
        enumerate_invariant_subgroups_limited(a.carrier(), s.rep(), bounds.subgroup_order, bounds.max_subgroups)?;
    for x in &s_subs {
        if &trace_into(&s, x)? != x {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifierReport {
    pub multiplication: bool,
    pub comultiplication: bool,
    pub d_module: bool,
    pub self_generator: bool,
    pub dissimilar_semisimple: bool,
    pub endo_extendable: bool,
    pub quasi_injective: bool,
    /// Always false over `Z`: no finite module generates all `Z`-modules.
    pub generator: bool,
    pub faithful: bool,
    pub balanced: bool,
    pub torsion_subset_size: u128,
    pub lattices: LatticeComparison,
}

/// Every classifier predicate of a module over `Z` or `Z/n`.
pub fn classifier_report(a: &ModuleAction, bounds: &Bounds) -> Result<ClassifierReport> {
    require_scalar(a)?;
    check_extendable_bound(a, bounds)?;
    let s = end_ring(a, bounds)?;
    let t = s.commutant_ring()?;
    let subs = submodules(a, bounds)?;
    let generator = match a.scalar_ring() {
        Some(r) if !r.is_integers() => trace_ideal_and_generator(a)?.1,
        _ => false,
    };
    let (_, faithful) = annihilator_and_faithful(a)?;
    Ok(ClassifierReport {
        multiplication: is_multiplication_with(&subs)?,
        comultiplication: is_comultiplication_with(&subs),
        d_module: is_d_module_with(&subs)?,
        self_generator: is_self_generator_with(&s, &subs)?,
        dissimilar_semisimple: is_dissimilar_semisimple(a)?,
        endo_extendable: is_endo_extendable_with(a, &s, &subs, bounds)?,
        quasi_injective: is_quasi_injective_with(a, &s, &subs, bounds)?,
        generator,
        faithful,
        balanced: is_balanced(a, &t)?,
        torsion_subset_size: torsion_subset(a, bounds)?.len() as u128,
        lattices: lattice_comparison_with(&s, &subs),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(f: &[i64]) -> FinAbGroup {
        FinAbGroup::new(f.to_vec()).unwrap()
    }

    fn z(f: &[i64]) -> ModuleAction {
        ModuleAction::over_integers(g(f))
    }

    fn zn(n: i64, f: &[i64]) -> ModuleAction {
        ModuleAction::over_residues(n, g(f)).unwrap()
    }

    #[test]
    fn multiplication_and_comultiplication() {
        let b = Bounds::default();
        for n in [2, 6, 8, 12] {
            assert!(is_multiplication(&z(&[n]), &b).unwrap());
        }
        assert!(!is_multiplication(&z(&[2, 2]), &b).unwrap());
        assert!(is_multiplication(&z(&[]), &b).unwrap());
        assert!(is_comultiplication(&z(&[8]), &b).unwrap());
        assert!(is_comultiplication(&z(&[9]), &b).unwrap());
        assert!(!is_comultiplication(&z(&[2, 2]), &b).unwrap());
        assert!(is_comultiplication(&z(&[]), &b).unwrap());
    }

    #[test]
    fn distributivity() {
        let b = Bounds::default();
        assert!(is_d_module(&z(&[12]), &b).unwrap());
        assert!(!is_d_module(&z(&[2, 2]), &b).unwrap());
        assert!(!is_d_module(&z(&[2, 4]), &b).unwrap());
        assert!(is_d_module(&z(&[]), &b).unwrap());
    }

    #[test]
    fn self_generators() {
        let b = Bounds::default();
        assert!(is_self_generator(&z(&[2, 2]), &b).unwrap());
        assert!(is_self_generator(&z(&[12]), &b).unwrap());
        assert!(is_self_generator(&zn(4, &[2]), &b).unwrap());
    }

    #[test]
    fn torsion_subsets() {
        let b = Bounds::default();
        assert_eq!(torsion_subset(&z(&[2, 4]), &b).unwrap().len(), 8);
        let t: Vec<i64> = torsion_subset(&zn(6, &[6]), &b).unwrap().iter().map(|x| x.coords()[0]).collect();
        assert_eq!(t, vec![0, 2, 3, 4]);
        assert_eq!(torsion_subset(&z(&[]), &b).unwrap().len(), 1);
    }

    #[test]
    fn trace_ideals() {
        let (t, gen) = trace_ideal_and_generator(&zn(4, &[2, 4])).unwrap();
        assert!(gen && t.is_whole());
        let (t, gen) = trace_ideal_and_generator(&zn(4, &[2])).unwrap();
        assert_eq!(t.generator, 2);
        assert!(!gen);
        assert!(trace_ideal_and_generator(&zn(6, &[6])).unwrap().1);
        assert!(matches!(trace_ideal_and_generator(&z(&[2])), Err(Error::NonScalarRing)));
    }

    #[test]
    fn extendability() {
        let b = Bounds::default();
        assert!(is_endo_extendable(&z(&[2, 2]), &b).unwrap());
        assert!(!is_endo_extendable(&z(&[2, 4]), &b).unwrap());
        assert!(is_endo_extendable(&z(&[12]), &b).unwrap());
        assert!(is_quasi_injective(&z(&[4, 4]), &b).unwrap());
        assert!(!is_quasi_injective(&z(&[2, 4]), &b).unwrap());
        assert!(is_quasi_injective(&z(&[5]), &b).unwrap());
        let big = z(&[2, 2, 2, 2, 2, 2, 2, 2, 2]);
        assert!(matches!(is_endo_extendable(&big, &b), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn dissimilar_semisimple() {
        assert!(is_dissimilar_semisimple(&z(&[30])).unwrap());
        assert!(!is_dissimilar_semisimple(&z(&[2, 2])).unwrap());
        assert!(!is_dissimilar_semisimple(&z(&[4])).unwrap());
    }

    #[test]
    fn lattice_comparisons() {
        let b = Bounds::default();
        assert_eq!(submodule_lattice_comparison(&z(&[12]), &b).unwrap(), LatticeComparison::Coincide);
        assert_eq!(submodule_lattice_comparison(&z(&[2, 2]), &b).unwrap(), LatticeComparison::RStrict);
    }

    #[test]
    fn s_multiplication() {
        let b = Bounds::default();
        for n in [7, 12, 30] {
            assert!(s_module_multiplication_check(&z(&[n]), &b).unwrap());
        }
        assert!(matches!(s_module_multiplication_check(&z(&[2, 2]), &b), Err(Error::HypothesisUnmet(_))));
    }

    #[test]
    fn reports() {
        let b = Bounds::default();
        let r = classifier_report(&z(&[2, 2]), &b).unwrap();
        assert!(!r.multiplication && r.self_generator && r.endo_extendable && r.quasi_injective);
        assert!(!r.faithful && r.balanced && !r.generator);
        assert_eq!(r.lattices, LatticeComparison::RStrict);
        let r = classifier_report(&zn(4, &[2, 4]), &b).unwrap();
        assert!(r.generator && r.faithful && r.balanced);
        let r = classifier_report(&z(&[6]), &b).unwrap();
        assert!(r.multiplication && r.comultiplication && r.d_module && r.dissimilar_semisimple);
        assert_eq!(r.torsion_subset_size, 6);
    }
}
