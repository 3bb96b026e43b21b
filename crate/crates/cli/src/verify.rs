//! The verification harness: every theorem suite over a corpus.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use endocomm::int::is_squarefree;
use endocomm::{Bounds, Error, FinAbGroup};

use crate::instance::{CarrierSpec, InstanceSpec, RingSpec};
use crate::suites::{
    instance_suites, reduced_ideal_suite, sum_suites, CheckOptions, Outcome, SuiteResults, INSTANCE_SUITES,
    RING_SUITES, SUM_SUITES,
};
use crate::survey::corpus;
use crate::CliError;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub max_order: u64,
    pub ring: RingSpec,
    pub bounds: Bounds,
    pub depth: usize,
    /// Seeds the sample of three-fold direct sums.
    pub seed: u64,
    pub triples: usize,
    pub inject_mutant: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_order: 16,
            ring: RingSpec::Z,
            bounds: Bounds::default(),
            depth: 6,
            seed: 0,
            triples: 24,
            inject_mutant: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub instance: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteTally {
    pub name: &'static str,
    pub checked: usize,
    pub vacuous: usize,
    pub violations: Vec<Counterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    pub instances: usize,
    pub sums: usize,
    pub tallies: Vec<SuiteTally>,
    /// Instances skipped because a bound was exceeded.
    pub skipped: Vec<Counterexample>,
}

impl VerifySummary {
    pub fn violation_count(&self) -> usize {
        self.tallies.iter().map(|t| t.violations.len()).sum()
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "instances: {}  direct sums: {}", self.instances, self.sums);
        let _ = writeln!(s, "{:<24} {:>8} {:>8} {:>11}", "suite", "checked", "vacuous", "violations");
        for t in &self.tallies {
            let _ = writeln!(s, "{:<24} {:>8} {:>8} {:>11}", t.name, t.checked, t.vacuous, t.violations.len());
        }
        for t in &self.tallies {
            for v in &t.violations {
                let _ = writeln!(s, "VIOLATION {}: {}", t.name, v.message);
                let _ = writeln!(s, "  instance: {}", v.instance);
            }
        }
        for k in &self.skipped {
            let _ = writeln!(s, "SKIPPED {}: {}", k.instance, k.message);
        }
        let _ = writeln!(
            s,
            "suites: {}  violations: {}  skipped: {}",
            self.tallies.len(),
            self.violation_count(),
            self.skipped.len()
        );
        s
    }
}

enum Job {
    Single(FinAbGroup),
    Sum(Vec<FinAbGroup>),
    Ring(i64),
}

impl Job {
    fn spec(&self, ring: RingSpec) -> String {
        let carrier = match self {
            Job::Single(g) => CarrierSpec::InvariantFactors(g.factors().to_vec()),
            Job::Sum(parts) => {
                CarrierSpec::DirectSum(parts.iter().map(|g| CarrierSpec::InvariantFactors(g.factors().to_vec())).collect())
            }
            Job::Ring(n) => CarrierSpec::InvariantFactors(vec![*n]),
        };
        let ring = if let Job::Ring(n) = self { RingSpec::Zn(*n) } else { ring };
        InstanceSpec { ring, carrier, label: None, probe: None }.to_json()
    }

    fn run(&self, opts: &VerifyOptions) -> Result<SuiteResults, Error> {
        let check = CheckOptions { depth: opts.depth, inject_mutant: opts.inject_mutant };
        let action = |g: &FinAbGroup| match opts.ring {
            RingSpec::Z => Ok(endocomm::ModuleAction::over_integers(g.clone())),
            RingSpec::Zn(n) => endocomm::ModuleAction::over_residues(n, g.clone()),
        };
        match self {
            Job::Single(g) => Ok(instance_suites(&action(g)?, &opts.bounds, &check)?.0),
            Job::Sum(parts) => {
                let acts = parts.iter().map(action).collect::<Result<Vec<_>, _>>()?;
                sum_suites(&acts, &opts.bounds)
            }
            Job::Ring(n) => reduced_ideal_suite(*n, &opts.bounds),
        }
    }
}

fn jobs(opts: &VerifyOptions) -> Vec<Job> {
    let groups = corpus(opts.max_order, opts.ring);
    let nontrivial: Vec<&FinAbGroup> = groups.iter().filter(|g| !g.is_trivial()).collect();
    let mut out: Vec<Job> = groups.iter().cloned().map(Job::Single).collect();
    let fits = |parts: &[&FinAbGroup]| {
        parts.iter().map(|g| g.order()).product::<u128>() <= opts.max_order as u128
    };
    for i in 0..nontrivial.len() {
        for j in i..nontrivial.len() {
            if fits(&[nontrivial[i], nontrivial[j]]) {
                out.push(Job::Sum(vec![nontrivial[i].clone(), nontrivial[j].clone()]));
            }
        }
    }
    let mut triples = Vec::new();
    for i in 0..nontrivial.len() {
        for j in i..nontrivial.len() {
            for k in j..nontrivial.len() {
                if fits(&[nontrivial[i], nontrivial[j], nontrivial[k]]) {
                    triples.push([i, j, k]);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut picked: Vec<[usize; 3]> = triples.choose_multiple(&mut rng, opts.triples).copied().collect();
    picked.sort();
    for t in picked {
        out.push(Job::Sum(t.iter().map(|&x| nontrivial[x].clone()).collect()));
    }
    for n in 2..=100 {
        if is_squarefree(n) {
            out.push(Job::Ring(n));
        }
    }
    out
}

pub fn run_verify(opts: &VerifyOptions) -> Result<VerifySummary, CliError> {
    let jobs = jobs(opts);
    let results: Vec<Result<SuiteResults, Error>> = jobs.par_iter().map(|j| j.run(opts)).collect();
    let names: Vec<&'static str> = INSTANCE_SUITES.iter().chain(SUM_SUITES).chain(RING_SUITES).copied().collect();
    let mut tallies: Vec<SuiteTally> =
        names.iter().map(|&name| SuiteTally { name, checked: 0, vacuous: 0, violations: Vec::new() }).collect();
    let mut skipped = Vec::new();
    let (mut instances, mut sums) = (0, 0);
    for (job, res) in jobs.iter().zip(results) {
        match job {
            Job::Single(_) => instances += 1,
            Job::Sum(_) => sums += 1,
            Job::Ring(_) => {}
        }
        let res = match res {
            Ok(r) => r,
            Err(e @ Error::BoundExceeded { .. }) => {
                skipped.push(Counterexample { instance: job.spec(opts.ring), message: e.to_string() });
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        for (name, outcome) in res {
            let t = tallies.iter_mut().find(|t| t.name == name).expect("known suite");
            t.checked += 1;
            match outcome {
                Outcome::Pass => {}
                Outcome::Vacuous => t.vacuous += 1,
                Outcome::Fail(message) => t.violations.push(Counterexample { instance: job.spec(opts.ring), message }),
            }
        }
    }
    Ok(VerifySummary { instances, sums, tallies, skipped })
}
