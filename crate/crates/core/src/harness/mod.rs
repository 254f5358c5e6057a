//! Verification campaigns: each registered claim is checked point by point
//! over a range of sizes and reported in a fixed text or JSON-lines form.

mod claims;
pub mod oracles;
pub mod report;

use std::time::Instant;

pub use claims::{Claim, Sampling, Space, CLAIMS, EXHAUSTIVE_BINARY_MAX};
pub use report::{ClaimKind, Counterexample, Point, Status, VerificationReport};

use crate::error::{Error, Result};
use claims::Ctx;

pub const DEFAULT_SEED: u64 = 0x5eed_0123;
pub const DEFAULT_BUDGET: u128 = 10_000_000_000;
/// Environment variable naming the worker thread count.
pub const WORKERS_ENV: &str = "PARSEWORDS_WORKERS";

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub min_n: Option<usize>,
    pub max_n: Option<usize>,
    pub samples: Option<usize>,
    pub seed: u64,
    /// Largest estimated number of word checks a campaign may take.
    pub budget: u128,
    /// Worker threads; `None` reads `PARSEWORDS_WORKERS`, then uses every core.
    pub workers: Option<usize>,
    /// Pair space requested by the caller, if any.
    pub space: Option<Space>,
}

impl Default for RunConfig {
    fn default() -> RunConfig {
        RunConfig {
            min_n: None,
            max_n: None,
            samples: None,
            seed: DEFAULT_SEED,
            budget: DEFAULT_BUDGET,
            workers: None,
            space: None,
        }
    }
}

impl RunConfig {
    pub fn up_to(max_n: usize) -> RunConfig {
        RunConfig {
            max_n: Some(max_n),
            ..RunConfig::default()
        }
    }
}

/// Looks a claim up by id; en dashes are read as hyphens.
pub fn claim(id: &str) -> Result<&'static Claim> {
    let wanted = id.replace('\u{2013}', "-");
    CLAIMS
        .iter()
        .find(|c| c.id == wanted)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

pub fn claims(kind: ClaimKind) -> impl Iterator<Item = &'static Claim> {
    CLAIMS.iter().filter(move |c| c.kind == kind)
}

/// The sizes a campaign covers and its estimated cost.
pub fn plan(c: &Claim, cfg: &RunConfig) -> Result<(usize, usize, u128)> {
    let lo = cfg.min_n.unwrap_or(c.min_n).max(c.min_n);
    let hi = cfg.max_n.unwrap_or(c.default_max_n);
    if lo > hi {
        return Err(Error::bad(format!("empty range {lo}..{hi} for {}", c.id)));
    }
    let samples = cfg.samples.or(c.default_samples()).unwrap_or(0);
    let estimate = (lo..=hi)
        .map(|n| (c.cost)(n, samples))
        .fold(0u128, u128::saturating_add);
    Ok((lo, hi, estimate))
}

/// Runs one campaign. Output depends only on the claim, range, sample count
/// and seed, never on the worker count.
pub fn verify_claim(id: &str, cfg: &RunConfig) -> Result<VerificationReport> {
    let c = claim(id)?;
    if let (Some(want), Some(have)) = (cfg.space, c.space) {
        if want != have {
            return Err(Error::Unsupported(format!(
                "{} is stated over {have:?} pairs, not {want:?}",
                c.id
            )));
        }
    }
    let (lo, hi, estimate) = plan(c, cfg)?;
    if estimate > cfg.budget {
        return Err(Error::RangeTooLarge {
            estimate,
            budget: cfg.budget,
        });
    }
    let samples = cfg.samples.or(c.default_samples()).unwrap_or(0);
    let ctx = Ctx {
        samples,
        seed: cfg.seed,
    };
    let pool = pool(cfg.workers)?;
    let start = Instant::now();
    let points = pool.install(|| (lo..=hi).flat_map(|n| (c.run)(&ctx, n)).collect());
    let sampled = (lo..=hi).any(|n| c.samples_at(n));
    let mut range = format!("{}={lo}..{hi}", c.parameter);
    if sampled {
        range.push_str(&format!(", {samples} samples"));
    }
    Ok(VerificationReport {
        claim: c.id,
        kind: c.kind,
        statement: c.statement,
        range,
        seed: sampled.then_some(cfg.seed),
        points,
        wall: start.elapsed(),
    })
}

pub fn verify_theorem(id: &str, cfg: &RunConfig) -> Result<VerificationReport> {
    verify_kind(id, cfg, ClaimKind::Theorem)
}

pub fn verify_conjecture(id: &str, cfg: &RunConfig) -> Result<VerificationReport> {
    verify_kind(id, cfg, ClaimKind::Conjecture)
}

fn verify_kind(id: &str, cfg: &RunConfig, kind: ClaimKind) -> Result<VerificationReport> {
    if claim(id)?.kind != kind {
        return Err(Error::UnknownClaim(format!("{id} is not a {kind}")));
    }
    verify_claim(id, cfg)
}

fn pool(workers: Option<usize>) -> Result<rayon::ThreadPool> {
    let threads = workers
        .or_else(|| std::env::var(WORKERS_ENV).ok().and_then(|s| s.trim().parse().ok()))
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::bad(format!("worker pool: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_claim_is_rejected() {
        assert!(matches!(
            verify_claim("nope", &RunConfig::default()),
            Err(Error::UnknownClaim(_))
        ));
        assert!(verify_conjecture("comb-comb", &RunConfig::default()).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = RunConfig {
            max_n: Some(40),
            budget: 1_000,
            ..RunConfig::default()
        };
        assert!(matches!(
            verify_claim("total-ambiguity", &cfg),
            Err(Error::RangeTooLarge { .. })
        ));
    }

    #[test]
    fn space_mismatch_is_unsupported() {
        let cfg = RunConfig {
            space: Some(Space::Binary),
            ..RunConfig::up_to(5)
        };
        assert!(matches!(verify_claim("u00v", &cfg), Err(Error::Unsupported(_))));
    }

    #[test]
    fn small_campaigns_pass_and_ignore_worker_count() {
        for c in CLAIMS {
            let hi = (c.min_n + 1).min(c.default_max_n);
            let one = RunConfig {
                max_n: Some(hi),
                samples: Some(20),
                workers: Some(1),
                ..RunConfig::default()
            };
            let two = RunConfig {
                workers: Some(2),
                ..one.clone()
            };
            let a = verify_claim(c.id, &one).unwrap();
            let b = verify_claim(c.id, &two).unwrap();
            assert_eq!(a.to_text(), b.to_text(), "{}", c.id);
            assert_eq!(a.to_json_lines(), b.to_json_lines(), "{}", c.id);
            if c.kind == ClaimKind::Theorem {
                assert_eq!(a.status(), Status::Pass, "{}", a.to_text());
            }
        }
    }
}
