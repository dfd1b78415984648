//! Cross-checks of the fast path against the brute-force oracle, run as
//! named suites.

use std::fmt;

use crate::bound::GenusBound;
use crate::counter::Counts;
use crate::error::Error;
use crate::explorer::{walk, Explorer};
use crate::kernel::Kernel;
use crate::known::KNOWN_COUNTS;
use crate::oracle::{
    apery_set, bitmap_bound, naive_decomp, naive_enumerate, naive_irreducibles, NaiveSemigroup,
};
use crate::parallel::parallel_count;
use crate::semigroup::{DecompTable, Semigroup, SemigroupView};

/// Largest genus the oracle suites are meant to run at.
pub const VERIFY_MAX_GENUS: u32 = 14;

/// Deliberate damage applied to every visited table before it is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Overwrite lane `lane` of every table with `value`.
    CorruptLane { lane: usize, value: u8 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    /// First failure, if any.
    pub failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {}", self.name),
            Some(why) => write!(f, "FAIL {}: {why}", self.name),
        }
    }
}

fn suite(name: &'static str, result: Result<(), String>) -> SuiteReport {
    SuiteReport {
        name,
        failure: result.err(),
    }
}

/// Runs every suite at genus bound `bound` (at most [`VERIFY_MAX_GENUS`]).
pub fn run_all(bound: GenusBound, fault: Option<Fault>) -> Vec<SuiteReport> {
    let nodes = collect_nodes(bound, fault);
    vec![
        suite("published counts", published_counts(bound)),
        suite("kernel agreement", kernel_agreement(bound)),
        suite("parallel agreement", parallel_agreement(bound)),
        suite("invariants", invariants(&nodes)),
        suite(
            "decomposition tables vs oracle",
            tables_vs_oracle(bound, &nodes),
        ),
        suite(
            "enumeration vs oracle",
            enumeration_vs_oracle(bound, &nodes),
        ),
    ]
}

fn collect_nodes(bound: GenusBound, fault: Option<Fault>) -> Vec<Semigroup> {
    let mut nodes = Vec::new();
    let mut keep = |node: &SemigroupView<'_>| -> Result<(), Error> {
        let mut s = node.to_owned();
        if let Some(Fault::CorruptLane { lane, value }) = fault {
            let mut delta = s.delta().clone();
            if let Some(slot) = delta.as_mut_slice().get_mut(lane) {
                *slot = value;
            }
            s = Semigroup::from_raw_parts(s.conductor(), s.genus(), s.multiplicity(), delta);
        }
        nodes.push(s);
        Ok(())
    };
    walk(bound, &mut keep).expect("collecting visitor never fails");
    nodes
}

fn published_counts(bound: GenusBound) -> Result<(), String> {
    let counts: Counts<u64> = Explorer::new(bound).count().map_err(|e| e.to_string())?;
    let g = bound.get() as usize;
    if g < KNOWN_COUNTS.len() && counts.as_slice() != &KNOWN_COUNTS[..=g] {
        return Err(format!(
            "counted {:?}, published {:?}",
            counts.as_slice(),
            &KNOWN_COUNTS[..=g]
        ));
    }
    Ok(())
}

fn kernel_agreement(bound: GenusBound) -> Result<(), String> {
    let scalar: Counts<u64> = Explorer::new(bound)
        .kernel(Kernel::Scalar)
        .count()
        .map_err(|e| e.to_string())?;
    let vector: Counts<u64> = Explorer::new(bound)
        .kernel(Kernel::Vector)
        .count()
        .map_err(|e| e.to_string())?;
    if scalar != vector {
        return Err(format!(
            "scalar {:?} vs vector {:?}",
            scalar.as_slice(),
            vector.as_slice()
        ));
    }
    Ok(())
}

fn parallel_agreement(bound: GenusBound) -> Result<(), String> {
    let serial: Counts<u64> = Explorer::new(bound).count().map_err(|e| e.to_string())?;
    for workers in [1, 2, 4] {
        let parallel = parallel_count(bound, workers).map_err(|e| e.to_string())?;
        if parallel != serial {
            return Err(format!("{workers} workers: {:?}", parallel.as_slice()));
        }
    }
    Ok(())
}

fn invariants(nodes: &[Semigroup]) -> Result<(), String> {
    for s in nodes {
        if let Some(v) = s.validate().first() {
            return Err(format!("{} at {:?}", v, s.gaps()));
        }
        let (c, g, m) = (s.conductor(), s.genus(), s.multiplicity());
        let candidates = s.son_candidates().len() as u32;
        if candidates > m || m > g + 1 {
            return Err(format!(
                "|sons| = {candidates}, m = {m}, g = {g} at {:?}",
                s.gaps()
            ));
        }
        if g >= 1 {
            for member in (0..c).filter(|&x| s.contains(x as u64)) {
                if s.contains((c - 1 - member) as u64) {
                    return Err(format!(
                        "gap symmetry: {member} and {} both members",
                        c - 1 - member
                    ));
                }
            }
        }
    }
    Ok(())
}

fn tables_vs_oracle(bound: GenusBound, nodes: &[Semigroup]) -> Result<(), String> {
    let width = bitmap_bound(bound.get());
    for s in nodes {
        let gaps = s.gaps();
        let naive = NaiveSemigroup::from_gaps(&gaps, width)
            .ok_or_else(|| format!("gap set {gaps:?} is not a numerical semigroup"))?;
        let expected: Vec<u8> = (0..s.delta().len() as u32)
            .map(|x| naive_decomp(&naive, x) as u8)
            .collect();
        if s.delta() != &DecompTable::from_vec(expected.clone()) {
            return Err(format!(
                "table of {:?} is {:?}, expected {expected:?}",
                gaps,
                s.delta()
            ));
        }
        let irreducibles = naive_irreducibles(&naive);
        if s.irreducibles() != irreducibles {
            return Err(format!(
                "generators of {gaps:?}: {:?} vs {irreducibles:?}",
                s.irreducibles()
            ));
        }
        let apery = apery_set(&naive).len() as u32;
        if apery != naive.multiplicity() {
            return Err(format!(
                "|Apery| = {apery} for m = {}",
                naive.multiplicity()
            ));
        }
    }
    Ok(())
}

fn enumeration_vs_oracle(bound: GenusBound, nodes: &[Semigroup]) -> Result<(), String> {
    let mut fast: Vec<Vec<Vec<u32>>> = vec![Vec::new(); bound.get() as usize + 1];
    for s in nodes {
        fast[s.genus() as usize].push(s.gaps());
    }
    for sets in &mut fast {
        sets.sort();
    }
    let naive = naive_enumerate(bound.get());
    for (g, (mine, theirs)) in fast.iter().zip(&naive).enumerate() {
        if mine != theirs {
            return Err(format!(
                "genus {g}: {} gap sets vs {} from the oracle",
                mine.len(),
                theirs.len()
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for g in [0, 1, 6] {
            for report in run_all(GenusBound::new(g).unwrap(), None) {
                assert!(report.passed(), "G = {g}: {report}");
            }
        }
    }

    #[test]
    fn corrupted_lane_is_caught_and_named() {
        let reports = run_all(
            GenusBound::new(4).unwrap(),
            Some(Fault::CorruptLane { lane: 0, value: 0 }),
        );
        let invariants = reports.iter().find(|r| r.name == "invariants").unwrap();
        assert!(
            invariants.failure.as_deref().unwrap().contains("d[0]=1"),
            "{invariants}"
        );
    }
}
