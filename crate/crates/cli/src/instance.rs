//! Instance files: a base ring and a carrier group.

use serde::{Deserialize, Serialize};

use endocomm::{
    direct_sum_group, group_from_presentation, AbHom, Element, FinAbGroup, Matrix, ModuleAction,
};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RingSpec {
    Z,
    Zn(i64),
}

impl RingSpec {
    /// Parses `Z` or `Zn:<n>`.
    pub fn parse(s: &str) -> Result<RingSpec, CliError> {
        if s == "Z" {
            return Ok(RingSpec::Z);
        }
        match s.strip_prefix("Zn:").map(str::parse::<i64>) {
            Some(Ok(n)) if n >= 2 => Ok(RingSpec::Zn(n)),
            _ => Err(CliError::Usage(format!("ring must be Z or Zn:<n> with n >= 2, got {s:?}"))),
        }
    }

    /// Whether a group can carry a module over this ring.
    pub fn admits(&self, g: &FinAbGroup) -> bool {
        match self {
            RingSpec::Z => true,
            RingSpec::Zn(n) => n % g.exponent() == 0,
        }
    }

    pub fn action(&self, g: FinAbGroup) -> Result<ModuleAction, CliError> {
        Ok(match self {
            RingSpec::Z => ModuleAction::over_integers(g),
            RingSpec::Zn(n) => ModuleAction::over_residues(*n, g)?,
        })
    }

    pub fn label(&self) -> String {
        match self {
            RingSpec::Z => "Z".into(),
            RingSpec::Zn(n) => format!("Zn:{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CarrierSpec {
    InvariantFactors(Vec<i64>),
    /// Relations as rows; the group is `Z^n` modulo their span.
    Presentation(Vec<Vec<i64>>),
    DirectSum(Vec<CarrierSpec>),
}

impl CarrierSpec {
    pub fn build(&self) -> Result<FinAbGroup, CliError> {
        Ok(match self {
            CarrierSpec::InvariantFactors(f) => FinAbGroup::new(f.clone())?,
            CarrierSpec::Presentation(rows) => {
                let cols = rows.first().map_or(0, Vec::len);
                if rows.iter().any(|r| r.len() != cols) {
                    return Err(CliError::Spec("presentation rows have different lengths".into()));
                }
                if cols == 0 {
                    return Err(CliError::Spec("presentation has no generators".into()));
                }
                group_from_presentation(&Matrix::from_rows(rows, cols)?)?.group().clone()
            }
            CarrierSpec::DirectSum(parts) => {
                let groups = parts.iter().map(CarrierSpec::build).collect::<Result<Vec<_>, _>>()?;
                if groups.is_empty() {
                    return Err(CliError::Spec("direct sum of no carriers".into()));
                }
                direct_sum_group(&groups)?.group
            }
        })
    }
}

/// Two endomorphisms whose products are evaluated on every element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeSpec {
    pub f: Vec<Vec<i64>>,
    pub g: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub ring: RingSpec,
    pub carrier: CarrierSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probe: Option<ProbeSpec>,
}

impl InstanceSpec {
    pub fn new(ring: RingSpec, g: &FinAbGroup) -> InstanceSpec {
        InstanceSpec {
            ring,
            carrier: CarrierSpec::InvariantFactors(g.factors().to_vec()),
            label: None,
            probe: None,
        }
    }

    /// Parses JSON, reporting the line and column of syntax errors.
    pub fn from_json(text: &str) -> Result<InstanceSpec, CliError> {
        serde_json::from_str(text).map_err(|e| {
            let full = e.to_string();
            let suffix = format!(" at line {} column {}", e.line(), e.column());
            let message = full.strip_suffix(&suffix).unwrap_or(&full).to_string();
            CliError::Parse { line: e.line(), column: e.column(), message }
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instance specs serialize")
    }

    pub fn build(&self) -> Result<ModuleAction, CliError> {
        if let RingSpec::Zn(n) = self.ring {
            if n < 2 {
                return Err(CliError::Spec(format!("ring Zn needs n >= 2, got {n}")));
            }
        }
        self.ring.action(self.carrier.build()?)
    }

    /// The same instance with the carrier in invariant-factor form.
    pub fn canonical(&self) -> Result<InstanceSpec, CliError> {
        let a = self.build()?;
        Ok(InstanceSpec {
            ring: self.ring,
            carrier: CarrierSpec::InvariantFactors(a.carrier().factors().to_vec()),
            label: self.label.clone(),
            probe: self.probe.clone(),
        })
    }

    /// `f` and `g` of the probe as endomorphisms of the carrier.
    pub fn probe_maps(&self, carrier: &FinAbGroup) -> Result<Option<(AbHom, AbHom)>, CliError> {
        let Some(p) = &self.probe else { return Ok(None) };
        if !matches!(self.carrier, CarrierSpec::InvariantFactors(_)) {
            return Err(CliError::Spec("a probe needs a carrier given by invariant factors".into()));
        }
        let r = carrier.rank();
        let to_hom = |rows: &[Vec<i64>]| -> Result<AbHom, CliError> {
            if rows.len() != r || rows.iter().any(|x| x.len() != r) {
                return Err(CliError::Spec(format!("probe maps must be {r}x{r} matrices")));
            }
            Ok(AbHom::new(carrier, carrier, &Matrix::from_rows(rows, r)?)?)
        };
        Ok(Some((to_hom(&p.f)?, to_hom(&p.g)?)))
    }
}

/// `fg(m)` and `gf(m)` for one element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeRow {
    pub m: String,
    pub fg: String,
    pub gf: String,
}

pub fn probe_rows(carrier: &FinAbGroup, f: &AbHom, g: &AbHom) -> Vec<ProbeRow> {
    let fg = f.compose(g).expect("endomorphisms of one group");
    let gf = g.compose(f).expect("endomorphisms of one group");
    carrier
        .elements()
        .filter(|m: &Element| !m.is_zero())
        .map(|m| ProbeRow { m: m.to_string(), fg: fg.apply(&m).to_string(), gf: gf.apply(&m).to_string() })
        .collect()
}
