//! One CSV row per abelian group of bounded order.

use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use endocomm::center::{center_from_end, commutator_image_from_end};
use endocomm::{abelian_groups_up_to, classifier_report, end_ring, tower_summary, Bounds, Error, FinAbGroup};

use crate::instance::RingSpec;
use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub invariant_factors: String,
    pub order: u128,
    pub ring: String,
    pub end_order: Option<u128>,
    pub center_order: Option<u128>,
    pub commutator_image_order: Option<u128>,
    pub biend_order: Option<u128>,
    pub ecdim: Option<String>,
    pub classification: Option<String>,
    pub multiplication: Option<bool>,
    pub comultiplication: Option<bool>,
    pub d_module: Option<bool>,
    pub self_generator: Option<bool>,
    pub dissimilar_semisimple: Option<bool>,
    pub endo_extendable: Option<bool>,
    pub quasi_injective: Option<bool>,
    pub generator: Option<bool>,
    pub faithful: Option<bool>,
    pub balanced: Option<bool>,
    pub status: String,
}

fn factors_label(g: &FinAbGroup) -> String {
    let parts: Vec<String> = g.factors().iter().map(|d| d.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn empty_row(g: &FinAbGroup, ring: RingSpec, status: String) -> SurveyRow {
    SurveyRow {
        invariant_factors: factors_label(g),
        order: g.order(),
        ring: ring.label(),
        end_order: None,
        center_order: None,
        commutator_image_order: None,
        biend_order: None,
        ecdim: None,
        classification: None,
        multiplication: None,
        comultiplication: None,
        d_module: None,
        self_generator: None,
        dissimilar_semisimple: None,
        endo_extendable: None,
        quasi_injective: None,
        generator: None,
        faithful: None,
        balanced: None,
        status,
    }
}

pub fn survey_row(g: &FinAbGroup, ring: RingSpec, bounds: &Bounds, depth: usize) -> Result<SurveyRow, CliError> {
    let a = ring.action(g.clone())?;
    let compute = || -> Result<SurveyRow, Error> {
        let s = end_ring(&a, bounds)?;
        let t = s.commutant_ring()?;
        let tower = tower_summary(&a, depth, bounds)?;
        let cr = classifier_report(&a, bounds)?;
        Ok(SurveyRow {
            end_order: Some(s.order()),
            center_order: Some(center_from_end(&s).order()),
            commutator_image_order: Some(commutator_image_from_end(&s).order()),
            biend_order: Some(t.order()),
            ecdim: Some(tower.ecdim.to_string()),
            classification: Some(tower.classification.to_string()),
            multiplication: Some(cr.multiplication),
            comultiplication: Some(cr.comultiplication),
            d_module: Some(cr.d_module),
            self_generator: Some(cr.self_generator),
            dissimilar_semisimple: Some(cr.dissimilar_semisimple),
            endo_extendable: Some(cr.endo_extendable),
            quasi_injective: Some(cr.quasi_injective),
            generator: Some(cr.generator),
            faithful: Some(cr.faithful),
            balanced: Some(cr.balanced),
            ..empty_row(g, ring, "ok".into())
        })
    };
    match compute() {
        Ok(row) => Ok(row),
        Err(e @ Error::BoundExceeded { .. }) => Ok(empty_row(g, ring, e.to_string())),
        Err(e) => Err(e.into()),
    }
}

/// The groups surveyed for a ring: all of order at most `max_order` that
/// the ring annihilates.
pub fn corpus(max_order: u64, ring: RingSpec) -> Vec<FinAbGroup> {
    abelian_groups_up_to(max_order).into_iter().filter(|g| ring.admits(g)).collect()
}

pub fn survey(max_order: u64, ring: RingSpec, bounds: &Bounds, depth: usize) -> Result<Vec<SurveyRow>, CliError> {
    corpus(max_order, ring).par_iter().map(|g| survey_row(g, ring, bounds, depth)).collect()
}

/// Writes the rows as CSV followed by `#` summary lines.
pub fn write_survey<W: Write>(rows: &[SurveyRow], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Io(e.to_string()))?;
    }
    let mut out = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    let skipped = rows.iter().filter(|r| r.status != "ok").count();
    let ecdim3: Vec<&str> = rows
        .iter()
        .filter(|r| r.ecdim.as_deref() == Some("3"))
        .map(|r| r.invariant_factors.as_str())
        .collect();
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    writeln!(out, "# rows: {}", rows.len()).map_err(io)?;
    writeln!(out, "# bound exceeded: {skipped}").map_err(io)?;
    if ecdim3.is_empty() {
        writeln!(out, "# ecdim 3: none").map_err(io)?;
    } else {
        writeln!(out, "# ecdim 3 FOUND: {}", ecdim3.join(" ")).map_err(io)?;
    }
    out.flush().map_err(io)
}
