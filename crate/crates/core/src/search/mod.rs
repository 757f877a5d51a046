//! The exception search: which simple groups `H` can have `cod(H)` inside
//! `cod(A_n)` at all, and the codegree checks that discharge the survivors.
//!
//! A candidate pair `(H, n)` survives when `|H|` divides `|A_n|` and
//! `|A_n| < |H|·k(H)`. Lie-type families are swept over a parameter box
//! derived from the second inequality; the box is a superset of the feasible
//! points and every point is re-tested exactly.

mod golden;
mod schur;
mod sieve;
mod subset;
mod sweep;
mod verify;

use std::fmt;

use serde::Serialize;

use crate::catalog::{Family, GroupId};
use crate::exactnum::Natural;

pub use golden::{golden_csv, GOLDEN_TARGETS};
pub use schur::{
    schur_a9_size_check, schur_degree_equation_solutions, SchurA9Check, SchurSolutions,
};
pub use sieve::{candidate_n_range, passes_sieves, search_n_min, CandidateRange, DEFAULT_N_CAP};
pub use subset::{check_subset, SubsetCheck, Verdict};
pub use sweep::{
    derive_family_bounds, literature_bounds, sweep_family, sweep_sporadic, sweep_target,
    BoundDerivation,
};
pub use verify::{run_full_verification, Check, MasterReport, VerifyConfig};

/// Upper ends of the parameter box for one family. `None` on an axis the
/// family does not have, or on every axis when the box is empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyBounds {
    pub m_max: Option<u32>,
    pub p_max: Option<u64>,
    pub k_max: Option<u32>,
}

impl FamilyBounds {
    pub const EMPTY: FamilyBounds = FamilyBounds {
        m_max: None,
        p_max: None,
        k_max: None,
    };

    pub fn is_empty(&self) -> bool {
        self.p_max.is_none()
    }
}

impl fmt::Display for FamilyBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("empty");
        }
        fn opt<T: fmt::Display>(x: Option<T>) -> String {
            x.map_or_else(|| "-".to_string(), |v| v.to_string())
        }
        write!(
            f,
            "({}, {}, {})",
            opt(self.m_max),
            opt(self.p_max),
            opt(self.k_max)
        )
    }
}

/// A pair `(H, n)` that passed both sieves, with its subset verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionRow {
    pub group: GroupId,
    /// Rank for classical families, `a` in `q = p^(2a+1)` for the twisted
    /// odd-power families.
    pub m: Option<u32>,
    #[serde(serialize_with = "crate::serde_natural::option")]
    pub q: Option<Natural>,
    pub n: u64,
    /// `|A_n| / |H|`.
    #[serde(serialize_with = "crate::serde_natural::single")]
    pub ratio: Natural,
    pub verdict: Verdict,
    #[serde(serialize_with = "crate::serde_natural::option")]
    pub witness: Option<Natural>,
}

impl ExceptionRow {
    fn sort_key(&self) -> (Option<Family>, GroupId, u64) {
        (self.group.family(), self.group, self.n)
    }
}

/// Outcome of sweeping one family or the sporadic groups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub target: String,
    /// The class-number bound used, as a polynomial in `q`.
    pub class_number_bound: Option<String>,
    pub bounds: Option<BoundDerivation>,
    pub points_examined: usize,
    pub frontier_points_checked: usize,
    /// Points just outside the box that pass the inequality.
    pub frontier_breaches: Vec<String>,
    /// Points where `v_p(|H|) != k·e`.
    pub p_part_violations: Vec<String>,
    /// Groups whose `n` scan hit the cap before the inequality failed.
    pub cap_hits: Vec<String>,
    pub rows: Vec<ExceptionRow>,
    pub notes: Vec<String>,
}

impl SearchReport {
    /// Rows in the golden-file layout.
    pub fn rows_csv(&self) -> String {
        let sporadic = self.target == "sporadic";
        let mut out = String::from(if sporadic {
            golden::SPORADIC_HEADER
        } else {
            golden::FAMILY_HEADER
        });
        out.push('\n');
        for r in &self.rows {
            let witness = r
                .witness
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default();
            let line = if sporadic {
                format!("{},{},{},{},{}", r.group, r.n, r.ratio, r.verdict, witness)
            } else {
                let m = r.m.map(|m| m.to_string()).unwrap_or_default();
                let q = r.q.as_ref().map(ToString::to_string).unwrap_or_default();
                format!("{m},{q},{},{},{},{}", r.n, r.ratio, r.verdict, witness)
            };
            out.push_str(&line);
            out.push('\n');
        }
        out
    }

    /// No frontier breach, no p-part violation, no cap hit, and every row
    /// discharged.
    pub fn is_clean(&self) -> bool {
        self.frontier_breaches.is_empty()
            && self.p_part_violations.is_empty()
            && self.cap_hits.is_empty()
            && self.rows.iter().all(|r| r.verdict.is_discharged())
    }
}
