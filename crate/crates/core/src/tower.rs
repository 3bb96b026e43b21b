//! The tower `S_1 = End_R(M)`, `S_{n+1} = End_{S_n}(M)`.
//!
//! Each stage is the commutant of the previous one inside `End_Z(M)`.
//! Since `X''' = X'` for any set of maps and `S_1` is itself a commutant,
//! stages repeat with period two from the first one on. Nothing below
//! relies on that without checking it: every tower compares the computed
//! stages `n` and `n + 2` as sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::module::{end_ring, Bounds, EndRingResult, ModuleAction};

/// The biendomorphism ring `End_S(M)` with `S = End_R(M)`.
pub fn biend(a: &ModuleAction, bounds: &Bounds) -> Result<EndRingResult> {
    end_ring(a, bounds)?.commutant_ring()
}

#[derive(Debug, Clone)]
pub struct TowerResult {
    /// `S_1, …, S_depth`.
    pub stages: Vec<EndRingResult>,
    pub commutative_flags: Vec<bool>,
    /// `containments[n]` is `S_{n+1} ⊆ S_{n+2}` (zero-based `n`).
    pub containments: Vec<bool>,
    /// Least `n` (one-based) with `S_n = S_{n+1}`.
    pub stabilized_at: Option<usize>,
    /// `S_n = S_{n+2}` for every `n` within the computed depth.
    pub period_two_verified: bool,
}

impl TowerResult {
    pub fn sizes(&self) -> Vec<u128> {
        self.stages.iter().map(|s| s.order()).collect()
    }

    /// Breaches of the two tower theorems and of the period-two identity.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let f = &self.commutative_flags;
        for n in 0..self.containments.len() {
            if f[n] && !self.containments[n] {
                out.push(format!("S{} is commutative but not contained in S{}", n + 1, n + 2));
            }
        }
        for n in 0..f.len().saturating_sub(1) {
            if f[n] && f[n + 1] {
                for k in n + 2..self.stages.len() {
                    if self.stages[k].set() != self.stages[n + 1].set() {
                        out.push(format!("S{} and S{} are commutative but S{} ≠ S{}", n + 1, n + 2, k + 1, n + 2));
                    }
                }
            }
        }
        if !self.period_two_verified {
            out.push("stages do not repeat with period two".into());
        }
        out
    }
}

/// Stages `S_1 … S_depth` as iterated commutants.
pub fn endo_tower(a: &ModuleAction, depth: usize, bounds: &Bounds) -> Result<TowerResult> {
    if depth == 0 {
        return Err(Error::InvalidArgument("tower depth must be at least 1".into()));
    }
    let mut stages = vec![end_ring(a, bounds)?];
    while stages.len() < depth {
        let next = stages.last().expect("nonempty").commutant_ring()?;
        stages.push(next);
    }
    let commutative_flags = stages.iter().map(|s| s.is_commutative()).collect();
    let mut containments = Vec::with_capacity(depth.saturating_sub(1));
    for w in stages.windows(2) {
        containments.push(w[1].set().contains(w[0].set())?);
    }
    let stabilized_at = stages.windows(2).position(|w| w[0].set() == w[1].set()).map(|n| n + 1);
    let period_two_verified = stages.windows(3).all(|w| w[0].set() == w[2].set());
    Ok(TowerResult { stages, commutative_flags, containments, stabilized_at, period_two_verified })
}

/// The endo-commutativity dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ecdim {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Ecdim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ecdim::Finite(n) => write!(f, "{n}"),
            Ecdim::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TowerClass {
    Strongly,
    Eventually(usize),
    Never,
}

impl fmt::Display for TowerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerClass::Strongly => write!(f, "strongly"),
            TowerClass::Eventually(n) => write!(f, "eventually({n})"),
            TowerClass::Never => write!(f, "never"),
        }
    }
}

/// ecdim and classification from the commutativity of `S_1, S_2, S_3`.
///
/// With `S_{n+2} = S_n` no new commutative stage can appear after the
/// third, and a suffix of commutative stages must contain two consecutive
/// ones among `S_2, S_3`.
pub fn classify_flags(flags: &[bool]) -> Result<(Ecdim, TowerClass)> {
    if flags.len() < 3 {
        return Err(Error::InvalidArgument("three stages are needed".into()));
    }
    let ecdim = match flags[..3].iter().position(|&f| f) {
        Some(n) => Ecdim::Finite(n + 1),
        None => Ecdim::Infinite,
    };
    let class = if flags[0] && flags[1] && flags[2] {
        TowerClass::Strongly
    } else if flags[1] && flags[2] {
        TowerClass::Eventually(2)
    } else {
        TowerClass::Never
    };
    Ok((ecdim, class))
}

/// Tower to depth 5 with its ecdim and classification.
#[derive(Debug, Clone)]
pub struct TowerSummary {
    pub tower: TowerResult,
    pub ecdim: Ecdim,
    pub classification: TowerClass,
}

/// Computes the tower to `max(depth, 5)` and refuses to decide anything if
/// the period-two identity fails.
pub fn tower_summary(a: &ModuleAction, depth: usize, bounds: &Bounds) -> Result<TowerSummary> {
    let tower = endo_tower(a, depth.max(5), bounds)?;
    if !tower.period_two_verified {
        return Err(Error::EquivalenceViolation(format!(
            "tower of {} does not repeat with period two",
            a.carrier()
        )));
    }
    let (ecdim, classification) = classify_flags(&tower.commutative_flags)?;
    Ok(TowerSummary { tower, ecdim, classification })
}

pub fn ecdim(a: &ModuleAction, bounds: &Bounds) -> Result<Ecdim> {
    Ok(tower_summary(a, 5, bounds)?.ecdim)
}

pub fn tower_classification(a: &ModuleAction, bounds: &Bounds) -> Result<TowerClass> {
    Ok(tower_summary(a, 5, bounds)?.classification)
}
