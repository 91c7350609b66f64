use serde::{Deserialize, Serialize};

use crate::bounds::{feasibility_report, KnownResult};
use crate::error::{Error, Result};
use crate::graph::MAX_ORDER;

use super::mutation::DEFAULT_RETRY_BUDGET;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MutationKind {
    #[serde(alias = "switch")]
    EdgeSwitch,
    Resize,
}

impl std::str::FromStr for MutationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "edge_switch" | "switch" => Ok(MutationKind::EdgeSwitch),
            "resize" => Ok(MutationKind::Resize),
            other => Err(Error::Config(format!(
                "unknown mutation {other:?} (expected edge_switch or resize)"
            ))),
        }
    }
}

fn default_population() -> usize {
    100
}
fn default_offspring() -> usize {
    70
}
fn default_carryover() -> f64 {
    0.15
}
fn default_mutations() -> Vec<MutationKind> {
    vec![MutationKind::EdgeSwitch]
}
fn default_retry() -> usize {
    DEFAULT_RETRY_BUDGET
}

/// Run parameters. Either `n` (fixed order) or `n_lo..=n_hi` (resizing)
/// must be given; at least one of `max_generations` and `time_budget`
/// bounds the run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    pub r: u64,
    #[serde(default)]
    pub n: Option<u64>,
    #[serde(default)]
    pub n_lo: Option<u64>,
    #[serde(default)]
    pub n_hi: Option<u64>,
    #[serde(default = "default_population")]
    pub population_size: usize,
    #[serde(default = "default_offspring")]
    pub offspring_factor: usize,
    #[serde(default = "default_carryover")]
    pub carryover_fraction: f64,
    #[serde(default = "default_mutations")]
    pub mutation_set: Vec<MutationKind>,
    #[serde(default)]
    pub max_generations: Option<u64>,
    /// Seconds.
    #[serde(default)]
    pub time_budget: Option<f64>,
    #[serde(default)]
    pub seed: u64,
    /// Switches applied to each ring lattice; `3·|E|` when unset.
    #[serde(default)]
    pub init_randomization_switches: Option<usize>,
    #[serde(default = "default_retry")]
    pub retry_budget: usize,
    /// Worker threads; never affects results.
    #[serde(default)]
    pub threads: Option<usize>,
}

impl SearchConfig {
    /// Fixed-order edge-switch search with default parameters.
    pub fn new(r: u64, n: u64) -> Self {
        SearchConfig {
            r,
            n: Some(n),
            n_lo: None,
            n_hi: None,
            population_size: default_population(),
            offspring_factor: default_offspring(),
            carryover_fraction: default_carryover(),
            mutation_set: default_mutations(),
            max_generations: None,
            time_budget: None,
            seed: 0,
            init_randomization_switches: None,
            retry_budget: default_retry(),
            threads: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn allows(&self, kind: MutationKind) -> bool {
        self.mutation_set.contains(&kind)
    }

    /// `⌈carryover_fraction · N⌉` parents survive into each pool.
    pub fn carryover_count(&self) -> usize {
        carryover_count(self.population_size, self.carryover_fraction)
    }

    /// Checks every invariant and the feasibility screens; returns the
    /// admissible order range.
    pub fn validate(&self) -> Result<OrderRange> {
        let fail = |msg: String| Err(Error::Config(msg));
        if self.r < 1 {
            return fail("r must be at least 1".into());
        }
        if self.population_size < 1 {
            return fail("population_size must be at least 1".into());
        }
        if self.offspring_factor < 1 {
            return fail("offspring_factor must be at least 1".into());
        }
        if !(0.0..1.0).contains(&self.carryover_fraction) {
            return fail(format!(
                "carryover_fraction {} must lie in [0, 1)",
                self.carryover_fraction
            ));
        }
        if self.mutation_set.is_empty() {
            return fail("mutation_set is empty".into());
        }
        if self.retry_budget < 1 {
            return fail("retry_budget must be at least 1".into());
        }
        if self.threads == Some(0) {
            return fail("threads must be positive".into());
        }
        if self.max_generations.is_none() && self.time_budget.is_none() {
            return fail("set max_generations or time_budget".into());
        }
        if let Some(t) = self.time_budget {
            if !(t.is_finite() && t >= 0.0) {
                return fail(format!(
                    "time_budget {t} must be a non-negative number of seconds"
                ));
            }
        }

        let range = match (self.n, self.n_lo, self.n_hi) {
            (Some(n), None, None) => OrderRange { lo: n, hi: n },
            (None, Some(lo), Some(hi)) if lo <= hi => OrderRange { lo, hi },
            (None, Some(lo), Some(hi)) => return fail(format!("n_lo {lo} exceeds n_hi {hi}")),
            _ => return fail("give either n or both n_lo and n_hi".into()),
        };
        let resize = self.allows(MutationKind::Resize);
        if range.lo < range.hi && !resize {
            return fail("an order range needs the resize mutation".into());
        }
        if resize && range.lo == range.hi {
            return fail("the resize mutation needs an order range n_lo < n_hi".into());
        }
        let r = self.r;
        if range.lo <= r {
            return fail(format!(
                "order {} is too small for regularity {r}",
                range.lo
            ));
        }
        if range.hi > MAX_ORDER as u64 {
            return fail(format!(
                "order {} exceeds the maximum {MAX_ORDER}",
                range.hi
            ));
        }
        if r % 2 == 1 && (range.lo % 2 == 1 || range.hi % 2 == 1) {
            return fail(format!(
                "odd regularity {r} needs even orders (parity screen); got {}..={}",
                range.lo, range.hi
            ));
        }

        let report = feasibility_report(r)?;
        match report.known {
            KnownResult::Nonexistent => {
                return fail(format!(
                    "no {r}-regular graph with distinct triangle-degrees exists (known result for r <= 7)"
                ));
            }
            KnownResult::Open { n_min, n_max, .. } if range.hi < n_min || range.lo > n_max => {
                return fail(format!(
                    "orders {}..={} lie outside the window {n_min}..={n_max} for r = {r} (known result)",
                    range.lo, range.hi
                ));
            }
            _ => {}
        }
        if !(range.lo..=range.hi).any(|n| report.candidate(n).is_some()) {
            let reasons: Vec<String> = (range.lo..=range.hi)
                .map(|n| match report.exclusion(n) {
                    Some(reason) => format!("n = {n}: {reason}"),
                    None => format!("n = {n}: above the order cap"),
                })
                .collect();
            let window = match report.known {
                KnownResult::Open { n_min, n_max, .. } => {
                    format!("; order window {n_min}..={n_max}")
                }
                _ => String::new(),
            };
            return fail(format!(
                "infeasible for r = {r} ({}){window}",
                reasons.join(", ")
            ));
        }
        Ok(range)
    }
}

/// Inclusive order range explored by a search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRange {
    pub lo: u64,
    pub hi: u64,
}

/// `⌈fraction · n⌉`, tolerant of floating-point noise (`0.15 · 100` is 15).
pub fn carryover_count(n: usize, fraction: f64) -> usize {
    let x = fraction * n as f64 - 1e-9;
    (x.ceil().max(0.0) as usize).min(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(r: u64, n: u64) -> SearchConfig {
        SearchConfig {
            max_generations: Some(1),
            ..SearchConfig::new(r, n)
        }
    }

    #[test]
    fn carryover_rounding() {
        assert_eq!(carryover_count(100, 0.15), 15);
        assert_eq!(carryover_count(10, 0.15), 2);
        assert_eq!(carryover_count(7, 0.0), 0);
        assert_eq!(carryover_count(1, 0.15), 1);
    }

    #[test]
    fn known_nonexistence_rejected() {
        let e = cfg(7, 16).validate().unwrap_err().to_string();
        assert!(e.contains("known result"), "{e}");
        assert!(cfg(6, 13).validate().is_err());
    }

    #[test]
    fn r8_window() {
        let e = cfg(8, 23).validate().unwrap_err().to_string();
        assert!(e.contains("17..=22"), "{e}");
        assert!(cfg(8, 16).validate().is_err());
        assert_eq!(
            cfg(8, 19).validate().unwrap(),
            OrderRange { lo: 19, hi: 19 }
        );
    }

    #[test]
    fn parity_and_shape() {
        assert!(cfg(9, 25).validate().is_err());
        assert!(cfg(9, 24).validate().is_ok());
        let mut c = cfg(10, 30);
        c.max_generations = None;
        assert!(c.validate().is_err());
        c.time_budget = Some(1.0);
        assert!(c.validate().is_ok());
        c.carryover_fraction = 1.0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn ranges_need_resize() {
        let mut c = cfg(10, 30);
        c.n = None;
        c.n_lo = Some(28);
        c.n_hi = Some(34);
        assert!(c.validate().is_err());
        c.mutation_set.push(MutationKind::Resize);
        assert_eq!(c.validate().unwrap(), OrderRange { lo: 28, hi: 34 });
        c.r = 9;
        c.n_hi = Some(33);
        assert!(c.validate().is_err());
    }

    #[test]
    fn json_defaults_and_alias() {
        let c = SearchConfig::from_json(
            r#"{"r": 9, "n": 24, "mutation_set": ["switch"], "max_generations": 5}"#,
        )
        .unwrap();
        assert_eq!(c.population_size, 100);
        assert_eq!(c.offspring_factor, 70);
        assert_eq!(c.mutation_set, vec![MutationKind::EdgeSwitch]);
        assert!(SearchConfig::from_json(r#"{"r": 9, "bogus": 1}"#).is_err());
    }
}
