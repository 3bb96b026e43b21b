//! The `analyze` report.

use serde::{Deserialize, Serialize};

use endocomm::center::{center_from_end, commutator_image_from_end};
use endocomm::{end_ring, Bounds, EndRingResult, Subgroup};

use crate::instance::{probe_rows, InstanceSpec, ProbeRow};
use crate::suites::{instance_suites, CheckOptions, Outcome};
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSummary {
    pub additive_invariant_factors: Vec<i64>,
    pub order: u128,
    pub commutative: bool,
}

impl RingSummary {
    fn of(s: &EndRingResult) -> RingSummary {
        RingSummary {
            additive_invariant_factors: s.ring().additive().factors().to_vec(),
            order: s.order(),
            commutative: s.is_commutative(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupSummary {
    pub invariant_factors: Vec<i64>,
    pub order: u128,
    pub generators: Vec<Vec<i64>>,
}

impl SubgroupSummary {
    fn of(n: &Subgroup) -> SubgroupSummary {
        SubgroupSummary {
            invariant_factors: n.basis_group().factors().to_vec(),
            order: n.order(),
            generators: n.canonical_generators().into_iter().map(|g| g.into_coords()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerSection {
    pub sizes: Vec<u128>,
    pub commutative: Vec<bool>,
    pub stabilized_at: Option<usize>,
    pub period_two_verified: bool,
    pub ecdim: String,
    pub classification: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifierSection {
    pub multiplication: bool,
    pub comultiplication: bool,
    pub d_module: bool,
    pub self_generator: bool,
    pub dissimilar_semisimple: bool,
    pub endo_extendable: bool,
    pub quasi_injective: bool,
    pub generator: bool,
    pub faithful: bool,
    pub balanced: bool,
    pub torsion_subset_size: u128,
    pub lattices: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremEntry {
    pub name: String,
    pub outcome: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub instance: InstanceSpec,
    pub order: u128,
    pub end_ring: RingSummary,
    pub center: SubgroupSummary,
    pub commutator_image: SubgroupSummary,
    pub biend: RingSummary,
    pub balanced: bool,
    pub tower: TowerSection,
    pub classifier: ClassifierSection,
    pub theorems: Vec<TheoremEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe: Option<Vec<ProbeRow>>,
}

impl AnalysisReport {
    pub fn failures(&self) -> Vec<&TheoremEntry> {
        self.theorems.iter().filter(|t| t.outcome == "fail").collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub fn analyze(spec: &InstanceSpec, bounds: &Bounds, depth: usize) -> Result<AnalysisReport, CliError> {
    let instance = spec.canonical()?;
    let a = instance.build()?;
    let s = end_ring(&a, bounds)?;
    let t = s.commutant_ring()?;
    let opts = CheckOptions { depth, inject_mutant: false };
    let (results, cr) = instance_suites(&a, bounds, &opts)?;
    let tower = endocomm::tower_summary(&a, depth, bounds)?;
    let probe = instance.probe_maps(a.carrier())?.map(|(f, g)| probe_rows(a.carrier(), &f, &g));
    Ok(AnalysisReport {
        order: a.carrier().order(),
        end_ring: RingSummary::of(&s),
        center: SubgroupSummary::of(&center_from_end(&s)),
        commutator_image: SubgroupSummary::of(&commutator_image_from_end(&s)),
        biend: RingSummary::of(&t),
        balanced: cr.balanced,
        tower: TowerSection {
            sizes: tower.tower.sizes(),
            commutative: tower.tower.commutative_flags.clone(),
            stabilized_at: tower.tower.stabilized_at,
            period_two_verified: tower.tower.period_two_verified,
            ecdim: tower.ecdim.to_string(),
            classification: tower.classification.to_string(),
        },
        classifier: ClassifierSection {
            multiplication: cr.multiplication,
            comultiplication: cr.comultiplication,
            d_module: cr.d_module,
            self_generator: cr.self_generator,
            dissimilar_semisimple: cr.dissimilar_semisimple,
            endo_extendable: cr.endo_extendable,
            quasi_injective: cr.quasi_injective,
            generator: cr.generator,
            faithful: cr.faithful,
            balanced: cr.balanced,
            torsion_subset_size: cr.torsion_subset_size,
            lattices: cr.lattices.as_str().into(),
        },
        theorems: results
            .into_iter()
            .map(|(name, o)| TheoremEntry {
                name: name.into(),
                outcome: o.as_str().into(),
                detail: match o {
                    Outcome::Fail(m) => Some(m),
                    _ => None,
                },
            })
            .collect(),
        probe,
        instance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(json: &str) -> AnalysisReport {
        analyze(&InstanceSpec::from_json(json).unwrap(), &Bounds::default(), 6).unwrap()
    }

    #[test]
    fn klein_four() {
        let r = report(r#"{"ring":"Z","carrier":{"invariant_factors":[2,2]}}"#);
        assert_eq!(r.center.order, 1);
        assert_eq!(r.end_ring.order, 16);
        assert_eq!(r.tower.ecdim, "2");
        assert_eq!(r.tower.classification, "never");
        assert!(r.failures().is_empty());
    }

    #[test]
    fn cyclic_six() {
        let r = report(r#"{"ring":"Z","carrier":{"invariant_factors":[6]}}"#);
        assert!(r.end_ring.commutative && r.classifier.multiplication);
        assert_eq!(r.tower.ecdim, "1");
    }

    #[test]
    fn mixed_two_group() {
        let r = report(r#"{"ring":"Z","carrier":{"invariant_factors":[2,4]}}"#);
        assert_eq!(r.center.order, 2);
        assert_eq!(r.tower.ecdim, "2");
        assert!(!r.classifier.endo_extendable);
    }

    #[test]
    fn round_trips_and_is_deterministic() {
        let json = r#"{"ring":{"Zn":4},"carrier":{"presentation":[[2,0],[0,4]]},"label":"x"}"#;
        let a = report(json).to_json();
        let b = report(json).to_json();
        assert_eq!(a, b);
        let back: AnalysisReport = serde_json::from_str(&a).unwrap();
        assert_eq!(back.to_json(), a);
    }

    #[test]
    fn probe_values() {
        let r = report(
            r#"{"ring":"Z","carrier":{"invariant_factors":[2,2]},"probe":{"f":[[1,0],[0,0]],"g":[[0,1],[1,0]]}}"#,
        );
        let rows = r.probe.unwrap();
        let find = |m: &str| rows.iter().find(|x| x.m == m).unwrap().clone();
        assert_eq!((find("(1,0)").fg, find("(1,0)").gf), ("(0,0)".into(), "(0,1)".into()));
        assert_eq!((find("(0,1)").fg, find("(0,1)").gf), ("(1,0)".into(), "(0,0)".into()));
        // g(f(1,1)) = g(1,0) = (0,1)
        assert_eq!((find("(1,1)").fg, find("(1,1)").gf), ("(1,0)".into(), "(0,1)".into()));
    }
}
