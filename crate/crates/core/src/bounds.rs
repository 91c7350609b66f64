//! Closed-form bounds for regular graphs with pairwise distinct
//! triangle-degrees, and the feasibility screen built from them.
//!
//! Notation: `r` is the regularity, `n` the order and `d` the triangle-degree
//! of an anchor vertex `v`. Partitioning around `v` gives `A = N(v)` and
//! `B = V \ N[v]` with
//!
//! ```text
//! |A| = r            |E(A)| = d
//! |E(A,B)| = r(r-1) - 2d
//! |B| = n - r - 1    |E(B)| = nr/2 - r^2 + d
//! ```
//!
//! All arithmetic is exact integer arithmetic; every halving is checked.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn choose2(x: i64) -> i64 {
    if x < 2 {
        0
    } else {
        x * (x - 1) / 2
    }
}

fn check_r(r: u64) -> Result<()> {
    if r < 1 {
        return Err(Error::Input("regularity must be at least 1".into()));
    }
    Ok(())
}

fn check_parity(r: u64, n: u64) -> Result<()> {
    if !(r * n).is_multiple_of(2) {
        return Err(Error::Input(format!(
            "n*r = {n}*{r} is odd; no {r}-regular graph of order {n} exists"
        )));
    }
    Ok(())
}

/// Largest possible triangle-degree: `C(r,2) - ceil(r/2)`, floored at 0
/// (only `r = 1` hits the floor).
pub fn k3_upper_bound(r: u64) -> Result<u64> {
    check_r(r)?;
    Ok((r * (r - 1) / 2).saturating_sub(r.div_ceil(2)))
}

/// Largest possible order: `k3_upper_bound(r) + 1`.
pub fn order_upper_bound(r: u64) -> Result<u64> {
    Ok(k3_upper_bound(r)? + 1)
}

/// Smallest possible triangle-degree, `ceil((n-r-1)/2) - nr/2 + r^2`.
/// May be negative; feasibility ranges clamp it at zero.
pub fn k3_lower_bound(r: u64, n: u64) -> Result<i64> {
    check_r(r)?;
    if n <= r {
        return Err(Error::Input(format!(
            "order {n} must exceed regularity {r}"
        )));
    }
    check_parity(r, n)?;
    let (r, n) = (r as i64, n as i64);
    Ok((n - r - 1 + 1) / 2 - n * r / 2 + r * r)
}

/// The individual order screens; used to check that dropping screens never
/// rejects more orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Screens {
    pub parity: bool,
    pub order_cap: bool,
    pub degree_gap: bool,
}

impl Screens {
    pub const ALL: Screens = Screens {
        parity: true,
        order_cap: true,
        degree_gap: true,
    };
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExclusionReason {
    /// `n*r` odd.
    Parity,
    /// Not enough distinct triangle-degree values between the bounds.
    BoundGap,
    /// A forced consecutive range of triangle-degrees has sum not divisible by 3.
    Divisibility,
    /// Ruled out by a curated result.
    KnownResult,
}

impl std::fmt::Display for ExclusionReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ExclusionReason::Parity => "parity",
            ExclusionReason::BoundGap => "bound-gap",
            ExclusionReason::Divisibility => "divisibility",
            ExclusionReason::KnownResult => "known-result",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Feasibility {
    pub feasible: bool,
    /// First failing screen.
    pub reason: Option<ExclusionReason>,
}

impl Feasibility {
    fn ok() -> Self {
        Feasibility {
            feasible: true,
            reason: None,
        }
    }

    fn fail(reason: ExclusionReason) -> Self {
        Feasibility {
            feasible: false,
            reason: Some(reason),
        }
    }
}

/// Parity, order cap and the distinct-values inequality
/// `k3_upper_bound - k3_lower_bound + 1 >= n`.
pub fn order_feasible(r: u64, n: u64) -> Feasibility {
    order_feasible_with(r, n, Screens::ALL)
}

pub fn order_feasible_with(r: u64, n: u64, screens: Screens) -> Feasibility {
    if r < 1 || n < 1 {
        return Feasibility::fail(ExclusionReason::BoundGap);
    }
    if screens.parity && !(r * n).is_multiple_of(2) {
        return Feasibility::fail(ExclusionReason::Parity);
    }
    let hi = k3_upper_bound(r).expect("r >= 1") as i64;
    if screens.order_cap && n as i64 > hi + 1 {
        return Feasibility::fail(ExclusionReason::BoundGap);
    }
    if screens.degree_gap {
        // n <= r leaves no room for an r-regular graph at all
        if n <= r {
            return Feasibility::fail(ExclusionReason::BoundGap);
        }
        let lo = if (r * n).is_multiple_of(2) {
            k3_lower_bound(r, n).expect("checked")
        } else {
            // parity screen disabled: evaluate with nr/2 rounded down
            let (ri, ni) = (r as i64, n as i64);
            (ni - ri) / 2 - ni * ri / 2 + ri * ri
        };
        if hi - lo + 1 < n as i64 {
            return Feasibility::fail(ExclusionReason::BoundGap);
        }
    }
    Feasibility::ok()
}

/// Edge and vertex counts of the partition around an anchor vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionStats {
    pub size_a: i64,
    pub edges_a: i64,
    pub edges_ab: i64,
    pub size_b: i64,
    pub edges_b: i64,
    /// Some count is negative or `edges_b > C(size_b, 2)`.
    pub infeasible: bool,
}

impl PartitionStats {
    /// The edges at the anchor plus the three edge classes.
    pub fn total_edges(&self) -> i64 {
        self.size_a + self.edges_a + self.edges_ab + self.edges_b
    }
}

pub fn partition_stats(r: u64, n: u64, d: u64) -> Result<PartitionStats> {
    check_r(r)?;
    check_parity(r, n)?;
    let (ri, ni, di) = (r as i64, n as i64, d as i64);
    if di > choose2(ri) {
        return Err(Error::Input(format!("d = {d} exceeds C({r},2)")));
    }
    let size_b = ni - ri - 1;
    let edges_ab = ri * (ri - 1) - 2 * di;
    let edges_b = ni * ri / 2 - ri * ri + di;
    let infeasible = size_b < 0 || edges_ab < 0 || edges_b < 0 || edges_b > choose2(size_b);
    Ok(PartitionStats {
        size_a: ri,
        edges_a: di,
        edges_ab,
        size_b,
        edges_b,
        infeasible,
    })
}

/// Triangle-degree in the complement of an `r`-regular order-`n` graph of a
/// vertex whose triangle-degree is `d`:
/// `C(n-1,2) - 3r(n-r-1)/2 - d`.
pub fn complement_k3_degree(r: u64, n: u64, d: u64) -> Result<i64> {
    if n < r + 1 {
        return Err(Error::Input(format!(
            "order {n} must exceed regularity {r}"
        )));
    }
    let (ri, ni, di) = (r as i64, n as i64, d as i64);
    let triple = 3 * ri * (ni - ri - 1);
    if triple % 2 != 0 {
        return Err(Error::Input(format!(
            "3r(n-r-1)/2 is not an integer for r = {r}, n = {n}"
        )));
    }
    Ok(choose2(ni - 1) - triple / 2 - di)
}

/// `Σ degrees ≡ 0 (mod 3)`, the necessary condition for a triangle-degree sequence.
pub fn degree_sum_divisible<I>(degrees: I) -> bool
where
    I: IntoIterator,
    I::Item: Into<u64>,
{
    degrees.into_iter().map(Into::into).sum::<u64>() % 3 == 0
}

/// Curated status of a regularity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum KnownResult {
    /// Proven not to exist (r <= 7).
    Nonexistent,
    /// Existence unresolved; any example must have order in
    /// `[n_min, n_max]` and triangle-degrees at most `k3_cap`.
    Open { n_min: u64, n_max: u64, k3_cap: u64 },
    /// Examples are known; `witness_order` when a specific one ships here.
    Exists { witness_order: Option<u64> },
    /// Beyond the range of published examples.
    Unknown,
}

/// Highest regularity with a published example.
pub const MAX_KNOWN_REGULARITY: u64 = 30;

pub fn known_results(r: u64) -> Result<KnownResult> {
    check_r(r)?;
    Ok(match r {
        1..=7 => KnownResult::Nonexistent,
        8 => KnownResult::Open {
            n_min: 17,
            n_max: 22,
            k3_cap: 22,
        },
        9 => KnownResult::Exists {
            witness_order: Some(24),
        },
        10..=MAX_KNOWN_REGULARITY => KnownResult::Exists {
            witness_order: None,
        },
        _ => KnownResult::Unknown,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub n: u64,
    pub k3_lo: u64,
    pub k3_hi: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exclusion {
    pub n: u64,
    pub reason: ExclusionReason,
}

/// Orders `r+1 ..= order_upper_bound(r)` sorted into candidates (with their
/// triangle-degree range) and exclusions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityReport {
    pub r: u64,
    pub candidates: Vec<Candidate>,
    pub exclusions: Vec<Exclusion>,
    pub known: KnownResult,
}

impl FeasibilityReport {
    pub fn candidate(&self, n: u64) -> Option<&Candidate> {
        self.candidates.iter().find(|c| c.n == n)
    }

    pub fn exclusion(&self, n: u64) -> Option<ExclusionReason> {
        self.exclusions.iter().find(|e| e.n == n).map(|e| e.reason)
    }
}

/// Screens every order for regularity `r`.
///
/// Order-level screens: parity, the order cap and distinct-values gap, then
/// divisibility when the admissible range has exactly `n` values (all must
/// occur, so their sum must be divisible by 3). A curated order window (the
/// `Open` case) tightens the triangle-degree cap and excludes orders outside
/// it as `known-result`. A regularity proven nonexistent is reported through
/// `known` only, so the screen output stays visible.
pub fn feasibility_report(r: u64) -> Result<FeasibilityReport> {
    let known = known_results(r)?;
    let formula_hi = k3_upper_bound(r)?;
    let cap = match known {
        KnownResult::Open { k3_cap, .. } => formula_hi.min(k3_cap),
        _ => formula_hi,
    };
    let mut candidates = Vec::new();
    let mut exclusions = Vec::new();
    for n in (r + 1)..=order_upper_bound(r)? {
        let f = order_feasible(r, n);
        if let Some(reason) = f.reason {
            exclusions.push(Exclusion { n, reason });
            continue;
        }
        let lo = k3_lower_bound(r, n)?.max(0) as u64;
        if lo > cap || cap - lo + 1 < n {
            exclusions.push(Exclusion {
                n,
                reason: ExclusionReason::BoundGap,
            });
            continue;
        }
        if cap - lo + 1 == n && !degree_sum_divisible(lo..=cap) {
            exclusions.push(Exclusion {
                n,
                reason: ExclusionReason::Divisibility,
            });
            continue;
        }
        if let KnownResult::Open { n_min, n_max, .. } = known {
            if n < n_min || n > n_max {
                exclusions.push(Exclusion {
                    n,
                    reason: ExclusionReason::KnownResult,
                });
                continue;
            }
        }
        candidates.push(Candidate {
            n,
            k3_lo: lo,
            k3_hi: cap,
        });
    }
    Ok(FeasibilityReport {
        r,
        candidates,
        exclusions,
        known,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_bounds() {
        assert_eq!(k3_upper_bound(6).unwrap(), 12);
        assert_eq!(k3_upper_bound(7).unwrap(), 17);
        assert_eq!(k3_upper_bound(8).unwrap(), 24);
        assert_eq!(order_upper_bound(7).unwrap(), 18);
        assert_eq!(order_upper_bound(4).unwrap(), 5);
        assert_eq!(order_upper_bound(1).unwrap(), 1);
        assert!(k3_upper_bound(0).is_err());
    }

    #[test]
    fn lower_bound_formula() {
        assert_eq!(k3_lower_bound(6, 13).unwrap(), 0);
        assert_eq!(k3_lower_bound(9, 24).unwrap(), -20);
        // ceil(6/2) - 49 + 49
        assert_eq!(k3_lower_bound(7, 14).unwrap(), 3);
        assert!(k3_lower_bound(7, 15).is_err());
        assert!(k3_lower_bound(7, 7).is_err());
    }

    #[test]
    fn order_screens() {
        let f = order_feasible(7, 12);
        assert_eq!(f.reason, Some(ExclusionReason::BoundGap));
        assert_eq!(order_feasible(7, 15).reason, Some(ExclusionReason::Parity));
        assert!(order_feasible(6, 13).feasible);
        assert_eq!(
            order_feasible(6, 14).reason,
            Some(ExclusionReason::BoundGap)
        );
    }

    #[test]
    fn partition_examples() {
        let p = partition_stats(6, 13, 12).unwrap();
        assert_eq!((p.size_b, p.edges_b), (6, 15));
        assert!(!p.infeasible);
        let p = partition_stats(7, 14, 17).unwrap();
        assert_eq!((p.size_b, p.edges_b), (6, 17));
        assert!(p.infeasible);
        let p = partition_stats(7, 16, 17).unwrap();
        assert_eq!((p.size_b, p.edges_b), (8, 24));
        assert!(partition_stats(7, 15, 0).is_err());
    }

    #[test]
    fn complement_formula() {
        assert_eq!(complement_k3_degree(9, 24, 3).unwrap(), 61);
        assert_eq!(complement_k3_degree(5, 6, 10).unwrap(), 0);
        assert_eq!(complement_k3_degree(0, 7, 0).unwrap(), 15);
        assert!(complement_k3_degree(3, 7, 0).is_err());
    }

    #[test]
    fn divisibility() {
        assert!(!degree_sum_divisible(1u64..=16));
        assert!(!degree_sum_divisible(0u64..=22));
        assert!(degree_sum_divisible(3u64..=26));
    }

    #[test]
    fn known() {
        assert_eq!(known_results(7).unwrap(), KnownResult::Nonexistent);
        assert_eq!(
            known_results(8).unwrap(),
            KnownResult::Open {
                n_min: 17,
                n_max: 22,
                k3_cap: 22
            }
        );
        assert_eq!(
            known_results(9).unwrap(),
            KnownResult::Exists {
                witness_order: Some(24)
            }
        );
        assert_eq!(known_results(31).unwrap(), KnownResult::Unknown);
    }

    #[test]
    fn reports() {
        let r6 = feasibility_report(6).unwrap();
        assert_eq!(
            r6.candidates,
            vec![Candidate {
                n: 13,
                k3_lo: 0,
                k3_hi: 12
            }]
        );
        let r7 = feasibility_report(7).unwrap();
        let ns: Vec<_> = r7.candidates.iter().map(|c| c.n).collect();
        assert_eq!(ns, vec![14, 16, 18]);
        let r8 = feasibility_report(8).unwrap();
        let ns: Vec<_> = r8.candidates.iter().map(|c| c.n).collect();
        assert_eq!(ns, (17..=22).collect::<Vec<_>>());
        assert!(r8.candidates.iter().all(|c| c.k3_hi == 22));
        assert_eq!(r8.exclusion(23), Some(ExclusionReason::Divisibility));
        assert_eq!(r8.exclusion(16), Some(ExclusionReason::KnownResult));
        assert_eq!(r8.exclusion(24), Some(ExclusionReason::BoundGap));
        let r9 = feasibility_report(9).unwrap();
        assert!(r9.candidate(24).is_some());
    }
}
