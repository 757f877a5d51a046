use serde::Serialize;

use crate::catalog::{legendre_n_min, Catalog, GroupId};
use crate::error::{Error, Result};
use crate::exactnum::{divides, factorial, Fraction, Natural};

/// Hard limit on `n` in any single scan.
pub const DEFAULT_N_CAP: u64 = 200;

/// The `n` values surviving both sieves for one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateRange {
    pub group: GroupId,
    pub start: u64,
    /// First `n >= start` with `n!/2 >= |g|·k`.
    pub cutoff: u64,
    pub ns: Vec<u64>,
}

/// First `n` worth testing: 5, or the Legendre bound for Lie type.
pub fn search_n_min(g: &GroupId) -> Result<u64> {
    Ok(match g {
        GroupId::Sporadic(_) => 5,
        GroupId::Alternating(_) => {
            return Err(Error::InvalidParameter(format!(
                "{g} is not a search candidate"
            )));
        }
        _ => legendre_n_min(g)?.max(5),
    })
}

/// `|A_n| < order·bound`, i.e. `n!·den < 2·order·num`.
fn inequality_holds(n_fact: &Natural, order: &Natural, bound: &Fraction) -> bool {
    n_fact * bound.denom() < (order * bound.numer()) << 1
}

/// `n!` if `n!·den < limit`, computed top-down with early exit so that huge
/// `n` cost only as many multiplications as the limit allows.
fn factorial_below(n: u64, den: &Natural, limit: &Natural) -> Option<Natural> {
    let mut acc = den.clone();
    for i in (2..=n).rev() {
        acc *= i;
        if &acc >= limit {
            return None;
        }
    }
    Some(acc / den)
}

/// Both sieves at a single `n`: `|g|` divides `n!/2` and `n!/2 < |g|·k(g)`.
pub fn passes_sieves(catalog: &Catalog, g: &GroupId, n: u64) -> Result<bool> {
    let order = catalog.group_order(g)?;
    let bound = catalog.class_number_bound(g)?;
    let f = factorial(n);
    Ok(inequality_holds(&f, &order, &bound) && divides(&(&order << 1u32), &f)?)
}

/// Every `n >= max(5, n_min(g))` passing both sieves. The scan stops at the
/// first `n` where the inequality fails; reaching `cap` first is an error.
pub fn candidate_n_range(catalog: &Catalog, g: &GroupId, cap: u64) -> Result<CandidateRange> {
    let start = search_n_min(g)?;
    let order = catalog.group_order(g)?;
    let bound = catalog.class_number_bound(g)?;
    let twice_order = &order << 1u32;
    let limit = &twice_order * bound.numer();
    let mut ns = Vec::new();
    let Some(mut f) = factorial_below(start, bound.denom(), &limit) else {
        return Ok(CandidateRange {
            group: *g,
            start,
            cutoff: start,
            ns,
        });
    };
    let mut n = start;
    loop {
        if !inequality_holds(&f, &order, &bound) {
            return Ok(CandidateRange {
                group: *g,
                start,
                cutoff: n,
                ns,
            });
        }
        if n >= cap {
            return Err(Error::CapReached {
                group: g.label(),
                cap,
            });
        }
        if divides(&twice_order, &f)? {
            ns.push(n);
        }
        n += 1;
        f *= n;
    }
}

/// `|g|` itself passes the inequality at its smallest admissible `n`.
pub(crate) fn feasible(catalog: &Catalog, g: &GroupId) -> Result<bool> {
    let start = search_n_min(g)?;
    let order = catalog.group_order(g)?;
    let bound = catalog.class_number_bound(g)?;
    let limit = (&order << 1u32) * bound.numer();
    Ok(factorial_below(start, bound.denom(), &limit).is_some())
}
