//! Pass/fail records for verified statements.

use std::time::Instant;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// How a sweep over basis tuples is performed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "mode")]
pub enum Mode {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

impl Mode {
    /// Index tuples of arity `K` over `0..dim`: every tuple, or `count`
    /// uniformly drawn ones from the seeded stream.
    pub fn tuples<const K: usize>(&self, dim: usize) -> Vec<[usize; K]> {
        match *self {
            Mode::Exhaustive => {
                let total = dim.pow(K as u32);
                (0..total)
                    .map(|mut t| {
                        let mut out = [0; K];
                        for slot in out.iter_mut().rev() {
                            *slot = t % dim;
                            t /= dim;
                        }
                        out
                    })
                    .collect()
            }
            Mode::Sampled { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count)
                    .map(|_| std::array::from_fn(|_| rng.gen_range(0..dim)))
                    .collect()
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome for one statement.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub claim_id: String,
    /// Human-readable name of the statement being checked.
    pub paper_anchor: String,
    pub status: Status,
    /// First failing case, in sweep order.
    pub witness: Option<String>,
    #[serde(skip)]
    pub checks: usize,
    pub elapsed_ms: Option<u64>,
}

impl ClaimResult {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claims: Vec<ClaimResult>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.claims.iter().all(ClaimResult::passed)
    }

    pub fn push(&mut self, c: ClaimResult) {
        self.claims.push(c);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.claims.extend(other.claims);
    }

    /// First failing claim, if any.
    pub fn first_failure(&self) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| !c.passed())
    }

    pub fn find(&self, claim_id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.claim_id == claim_id)
    }

    /// Records a single boolean fact.
    pub fn record(&mut self, id: &str, anchor: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.push(ClaimResult {
            claim_id: id.into(),
            paper_anchor: anchor.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: if ok { None } else { Some(witness()) },
            checks: 1,
            elapsed_ms: None,
        });
    }

    /// Runs `check` over `cases` in parallel and records the first failure
    /// in case order.
    pub fn sweep<T, C>(&mut self, id: &str, anchor: &str, cases: &[T], check: C)
    where
        T: Sync,
        C: Fn(&T) -> Option<String> + Sync + Send,
    {
        let start = Instant::now();
        let witness = cases.par_iter().find_map_first(check);
        self.push(ClaimResult {
            claim_id: id.into(),
            paper_anchor: anchor.into(),
            status: if witness.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            witness,
            checks: cases.len(),
            elapsed_ms: Some(start.elapsed().as_millis() as u64),
        });
    }

    /// Drops timing data so that identical runs serialize identically.
    pub fn without_timings(mut self) -> Self {
        for c in &mut self.claims {
            c.elapsed_ms = None;
        }
        self
    }

    /// Prefixes every claim id, e.g. with a suite name.
    pub fn prefixed(mut self, prefix: &str) -> Self {
        for c in &mut self.claims {
            c.claim_id = format!("{prefix}.{}", c.claim_id);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_tuples_enumerate_in_order() {
        let t = Mode::Exhaustive.tuples::<2>(3);
        assert_eq!(t.len(), 9);
        assert_eq!(t[0], [0, 0]);
        assert_eq!(t[5], [1, 2]);
    }

    #[test]
    fn sampled_tuples_are_reproducible() {
        let m = Mode::Sampled { count: 50, seed: 7 };
        assert_eq!(m.tuples::<3>(10), m.tuples::<3>(10));
        assert!(m.tuples::<3>(10).iter().all(|t| t.iter().all(|&i| i < 10)));
    }

    #[test]
    fn sweep_reports_first_failure_in_order() {
        let mut r = VerificationReport::new();
        let cases: Vec<usize> = (0..1000).collect();
        r.sweep("x", "test", &cases, |&i| {
            (i % 97 == 96).then(|| i.to_string())
        });
        assert_eq!(r.claims[0].witness.as_deref(), Some("96"));
        assert!(!r.passed());
    }
}
