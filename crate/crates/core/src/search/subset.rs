use std::fmt;

use serde::Serialize;

use crate::alt_codegrees::alt_codegree_set;
use crate::catalog::{Catalog, GroupId};
use crate::error::{Error, Result};
use crate::exactnum::Natural;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Same order and same codegree set as `A_n`.
    Isomorphic,
    /// Some codegree of `H` is not a codegree of `A_n`.
    SubsetRefuted,
    /// `cod(H) ⊆ cod(A_n)` with `H` not isomorphic to `A_n`. Never expected.
    SubsetHolds,
    /// No degree data for `H`.
    Unresolved,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Isomorphic => "isomorphic",
            Verdict::SubsetRefuted => "subset_refuted",
            Verdict::SubsetHolds => "subset_holds",
            Verdict::Unresolved => "unresolved",
        }
    }

    pub fn is_discharged(self) -> bool {
        matches!(self, Verdict::Isomorphic | Verdict::SubsetRefuted)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetCheck {
    pub group: GroupId,
    pub n: u64,
    pub verdict: Verdict,
    /// Smallest element of `cod(H) \ cod(A_n)` when refuted.
    #[serde(serialize_with = "crate::serde_natural::option")]
    pub witness: Option<Natural>,
    pub cod_h_size: usize,
    pub cod_a_size: usize,
}

/// Compares `cod(h)` against `cod(A_n)`.
pub fn check_subset(catalog: &Catalog, h: &GroupId, n: u64) -> Result<SubsetCheck> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!("A_{n} is not simple")));
    }
    let cod_h = catalog.simple_codegree_set(h)?;
    let cod_a = alt_codegree_set(n as usize)?;
    let witness = cod_h.missing_from(&cod_a).next().cloned();
    let verdict = if cod_h.order == cod_a.order && cod_h.values() == cod_a.values() {
        Verdict::Isomorphic
    } else if witness.is_some() {
        Verdict::SubsetRefuted
    } else {
        Verdict::SubsetHolds
    };
    Ok(SubsetCheck {
        group: *h,
        n,
        verdict,
        witness,
        cod_h_size: cod_h.len(),
        cod_a_size: cod_a.len(),
    })
}
