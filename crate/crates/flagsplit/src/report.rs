//! Machine-readable verification reports.
//!
//! Every verification verb emits one of these shapes; a run fails exactly
//! when `failures` is nonempty. The structures round-trip through serde so
//! downstream consumers can parse them back.

use serde::{Deserialize, Serialize};

use crate::frobenius::bigcell::{BigCellModel, SplitSweep};
use crate::systems::{Axiom2Violation, Axiom3Violation, IntervalJson, StarFailure};

/// Normal-system verification: the subsystem comparison and the
/// singular-locus surrogate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NormalReport {
    pub r#type: String,
    pub cartan: String,
    pub rank: usize,
    /// Members of the system examined.
    pub members: usize,
    /// Comparisons performed across both axioms.
    pub checked: usize,
    pub failures: Vec<NormalFailure>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "axiom")]
pub enum NormalFailure {
    #[serde(rename = "subsystem-equality")]
    Axiom2(Axiom2Violation),
    #[serde(rename = "divisor-cover")]
    Axiom3(Axiom3Violation),
}

/// Star-condition sweep over intervals of dimension at least two.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StarReport {
    pub r#type: String,
    pub cartan: String,
    pub rank: usize,
    pub intervals: usize,
    pub checked: usize,
    pub failures: Vec<StarFailure>,
}

/// Closure run: seed, resulting members, and whether the result covers the
/// full Richardson family.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClosureReport {
    pub r#type: String,
    pub cartan: String,
    pub rank: usize,
    pub seed: Vec<IntervalJson>,
    pub members: Vec<IntervalJson>,
    pub full_family: bool,
}

/// Splitting-laboratory sweep over the candidate ideal family.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplitReport {
    pub r#type: String,
    pub n: usize,
    pub prime: u64,
    pub canonical_section: String,
    pub root: String,
    pub candidates: Vec<SplitCandidateJson>,
    pub failures: Vec<SplitFailureJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplitCandidateJson {
    pub label: String,
    pub ideal: String,
    pub split: bool,
    pub proper: bool,
    /// Desk-scale cell test: the zero locus is the closure of a single
    /// Schubert cell (meaningful for split candidates).
    pub cell_irreducible: bool,
    pub accepted: bool,
    pub matched: Option<IntervalJson>,
    /// For rejected candidates, the exact trace output that escaped.
    pub witness: Option<SplitWitnessJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplitWitnessJson {
    pub generator: String,
    pub shift: Vec<u32>,
    pub escaped: String,
}

/// A sweep failure: an accepted candidate that is not a Richardson
/// restriction, or a Richardson restriction that was rejected.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplitFailureJson {
    pub label: String,
    pub reason: String,
}

impl SplitReport {
    pub fn from_sweep(model: &BigCellModel, sweep: &SplitSweep) -> SplitReport {
        let g = model.group();
        let names = model.names();
        let candidates: Vec<SplitCandidateJson> = sweep
            .candidates
            .iter()
            .map(|c| SplitCandidateJson {
                label: c.label.clone(),
                ideal: c.ideal.display(names),
                split: c.split,
                proper: c.proper,
                cell_irreducible: c.cell_irreducible,
                accepted: c.accepted,
                matched: c.matched.map(|iv| IntervalJson::of(g, &iv)),
                witness: c.failure.as_ref().map(|f| SplitWitnessJson {
                    generator: c.ideal.generators()[f.generator].display(names),
                    shift: f.shift.clone(),
                    escaped: f.escaped.display(names),
                }),
            })
            .collect();
        // the desk-scale main theorem: accepted ⟺ matched a Richardson
        // restriction
        let mut failures = Vec::new();
        for c in &sweep.candidates {
            if c.accepted && c.matched.is_none() {
                failures.push(SplitFailureJson {
                    label: c.label.clone(),
                    reason: "accepted but equal to no Richardson restriction".into(),
                });
            }
            if !c.accepted && c.matched.is_some() {
                failures.push(SplitFailureJson {
                    label: c.label.clone(),
                    reason: "Richardson restriction was rejected".into(),
                });
            }
        }
        SplitReport {
            r#type: "verify-splitting".into(),
            n: model.n(),
            prime: model.prime(),
            canonical_section: model.canonical_section().poly().display(names),
            root: model.root().display(names),
            candidates,
            failures,
        }
    }
}
