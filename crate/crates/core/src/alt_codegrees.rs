//! Character degrees and codegrees of `S_n` and `A_n` from the hook length
//! formula.
//!
//! An irreducible `V_λ` of `S_n` stays irreducible on `A_n` unless `λ` is
//! self-conjugate, in which case it splits into two constituents of half the
//! dimension. `λ` and `λ'` restrict to the same character, so `Irr(A_n)` is
//! indexed by conjugate pairs with the self-conjugate ones counted twice.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{divides, exact_div, factorial, Natural};
use crate::partitions::{enumerate_partitions, Partition};

/// Largest degree accepted by the monotonicity check.
pub const DESK_MAX_N: usize = 40;

/// The codegree set of a named group, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CodegreeSet {
    pub group_label: String,
    #[serde(serialize_with = "crate::serde_natural::single")]
    pub order: Natural,
    #[serde(serialize_with = "crate::serde_natural::list")]
    values: Vec<Natural>,
}

impl CodegreeSet {
    /// Builds the set from raw values, enforcing `1 ∈ values` and that every
    /// value divides the order.
    pub fn new(
        label: impl Into<String>,
        order: Natural,
        values: impl IntoIterator<Item = Natural>,
    ) -> Result<Self> {
        let group_label = label.into();
        let set: BTreeSet<Natural> = values.into_iter().collect();
        if !set.contains(&Natural::one()) {
            return Err(Error::InvalidParameter(format!(
                "codegree set of {group_label} lacks 1"
            )));
        }
        for v in &set {
            if !divides(v, &order)? {
                return Err(Error::InvalidParameter(format!(
                    "codegree {v} of {group_label} does not divide {order}"
                )));
            }
        }
        Ok(Self {
            group_label,
            order,
            values: set.into_iter().collect(),
        })
    }

    /// `{1} ∪ {order/d}` over the non-trivial degrees of a group whose
    /// non-trivial irreducibles are all faithful (any simple group).
    pub fn from_simple_degrees<'a>(
        label: impl Into<String>,
        order: Natural,
        degrees: impl IntoIterator<Item = &'a Natural>,
    ) -> Result<Self> {
        let mut values = vec![Natural::one()];
        let mut trivial_seen = false;
        for d in degrees {
            if d.is_one() && !trivial_seen {
                trivial_seen = true;
                continue;
            }
            values.push(exact_div(&order, d)?);
        }
        Self::new(label, order, values)
    }

    pub fn values(&self) -> &[Natural] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, x: &Natural) -> bool {
        self.values.binary_search(x).is_ok()
    }

    /// Elements of `self` missing from `other`, ascending.
    pub fn missing_from<'a>(
        &'a self,
        other: &'a CodegreeSet,
    ) -> impl Iterator<Item = &'a Natural> + 'a {
        self.values.iter().filter(move |v| !other.contains(v))
    }

    pub fn is_subset_of(&self, other: &CodegreeSet) -> bool {
        self.missing_from(other).next().is_none()
    }

    /// Smallest codegree other than 1.
    pub fn min_nontrivial(&self) -> Option<&Natural> {
        self.values.iter().find(|v| !v.is_one())
    }
}

/// `dim V_λ = n!/H_λ`.
pub fn sym_degree(lambda: &Partition) -> Natural {
    exact_div(&factorial(lambda.size() as u64), &lambda.hook_product())
        .expect("hook product divides n!")
}

/// One record per irreducible of `A_n` up to the split pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AltIrrEntry {
    /// Lexicographically smaller of `λ`, `λ'`.
    pub partition: Partition,
    /// Self-conjugate: stands for two constituents of equal dimension.
    pub split: bool,
    #[serde(serialize_with = "crate::serde_natural::single")]
    pub hook_product: Natural,
    #[serde(serialize_with = "crate::serde_natural::single")]
    pub dimension: Natural,
    /// `(n!/2)/dimension`, except 1 for the trivial character.
    #[serde(serialize_with = "crate::serde_natural::single")]
    pub codegree: Natural,
}

impl AltIrrEntry {
    pub fn is_trivial(&self) -> bool {
        self.dimension.is_one()
    }
}

fn check_alt_degree(n: usize) -> Result<()> {
    if n < 5 {
        return Err(Error::InvalidParameter(format!(
            "alternating degree must be >= 5, got {n}"
        )));
    }
    Ok(())
}

fn entry_for(n_fact: &Natural, lambda: Partition) -> AltIrrEntry {
    let split = lambda.is_self_conjugate();
    let hook = lambda.hook_product();
    let sym_dim = exact_div(n_fact, &hook).expect("hook product divides n!");
    let trivial = sym_dim.is_one();
    let (dimension, codegree) = if split {
        (
            exact_div(&sym_dim, &Natural::from(2u32)).expect("split degree is even"),
            hook.clone(),
        )
    } else if trivial {
        (sym_dim, Natural::one())
    } else {
        let (half, rem) = hook.div_rem(&Natural::from(2u32));
        assert!(
            rem == Natural::from(0u32),
            "odd hook product {hook} for non-split {lambda}"
        );
        (sym_dim, half)
    };
    AltIrrEntry {
        partition: lambda,
        split,
        hook_product: hook,
        dimension,
        codegree,
    }
}

/// Irreducibles of `A_n`, one record per conjugate pair, in the enumeration
/// order of the canonical representatives.
pub fn alt_irr_entries(n: usize) -> Result<Vec<AltIrrEntry>> {
    check_alt_degree(n)?;
    let n_fact = factorial(n as u64);
    let reps: Vec<Partition> = enumerate_partitions(n)
        .filter(|l| *l <= l.conjugate())
        .collect();
    Ok(reps
        .into_par_iter()
        .map(|l| entry_for(&n_fact, l))
        .collect())
}

/// `cod(A_n)`.
pub fn alt_codegree_set(n: usize) -> Result<CodegreeSet> {
    let entries = alt_irr_entries(n)?;
    let order = alt_order(n);
    CodegreeSet::new(
        format!("A{n}"),
        order,
        entries.into_iter().map(|e| e.codegree),
    )
}

/// `|A_n| = n!/2` for `n >= 2`.
pub fn alt_order(n: usize) -> Natural {
    factorial(n as u64) / 2u32
}

/// `a_n`, the least non-trivial codegree of `A_n`.
pub fn min_nontrivial_codegree(n: usize) -> Result<Natural> {
    let set = alt_codegree_set(n)?;
    Ok(set.min_nontrivial().cloned().expect("A_n is non-abelian"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotoneReport {
    pub holds: bool,
    /// `(n, a_n)` for every `n` in `[n_lo, n_hi]`.
    #[serde(serialize_with = "crate::serde_natural::pairs")]
    pub witness: Vec<(usize, Natural)>,
    /// First `n` with `a_{n-1} >= a_n`, if any.
    pub first_violation: Option<usize>,
}

/// Checks `a_{n-1} < a_n` for every `n` in `(n_lo, n_hi]`.
pub fn verify_min_codegree_monotone(n_lo: usize, n_hi: usize) -> Result<MonotoneReport> {
    if n_lo < 5 || n_lo >= n_hi || n_hi > DESK_MAX_N {
        return Err(Error::InvalidParameter(format!(
            "need 5 <= n_lo < n_hi <= {DESK_MAX_N}, got ({n_lo}, {n_hi})"
        )));
    }
    let witness = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| min_nontrivial_codegree(n).map(|a| (n, a)))
        .collect::<Result<Vec<_>>>()?;
    let first_violation = witness
        .windows(2)
        .find(|w| w[0].1 >= w[1].1)
        .map(|w| w[1].0);
    Ok(MonotoneReport {
        holds: first_violation.is_none(),
        witness,
        first_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(x: u64) -> Natural {
        Natural::from(x)
    }

    fn nats(xs: &[u64]) -> Vec<Natural> {
        xs.iter().copied().map(nat).collect()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn sym_degrees() {
        assert_eq!(sym_degree(&Partition::row(7)), nat(1));
        assert_eq!(sym_degree(&p(&[6, 1])), nat(6));
        assert_eq!(sym_degree(&p(&[3, 2])), nat(5));
    }

    #[test]
    fn a5_entries() {
        let entries = alt_irr_entries(5).unwrap();
        assert_eq!(entries.len(), 4);
        let mut dims: Vec<(Partition, bool, u64)> = entries
            .iter()
            .map(|e| {
                (
                    e.partition.clone(),
                    e.split,
                    e.dimension.to_string().parse().unwrap(),
                )
            })
            .collect();
        dims.sort_by_key(|d| d.2);
        assert_eq!(
            dims,
            vec![
                (Partition::column(5), false, 1),
                (p(&[3, 1, 1]), true, 3),
                (p(&[2, 1, 1, 1]), false, 4),
                (p(&[2, 2, 1]), false, 5),
            ]
        );
        let split = entries.iter().find(|e| e.split).unwrap();
        assert_eq!(split.codegree, nat(20));
        assert_eq!(split.hook_product, nat(20));
    }

    #[test]
    fn a6_degree_multiset() {
        let mut degrees: Vec<u64> = Vec::new();
        for e in alt_irr_entries(6).unwrap() {
            let d: u64 = e.dimension.to_string().parse().unwrap();
            degrees.push(d);
            if e.split {
                degrees.push(d);
            }
        }
        degrees.sort();
        assert_eq!(degrees, vec![1, 5, 5, 8, 8, 9, 10]);
        assert_eq!(degrees.iter().map(|d| d * d).sum::<u64>(), 360);
    }

    #[test]
    fn small_codegree_sets() {
        assert_eq!(
            alt_codegree_set(5).unwrap().values(),
            nats(&[1, 12, 15, 20]).as_slice()
        );
        assert_eq!(
            alt_codegree_set(6).unwrap().values(),
            nats(&[1, 36, 40, 45, 72]).as_slice()
        );
        assert_eq!(
            alt_codegree_set(8).unwrap().values(),
            nats(&[1, 288, 315, 360, 448, 576, 720, 960, 1008, 1440, 2880]).as_slice()
        );
    }

    #[test]
    fn minimal_codegrees() {
        assert_eq!(min_nontrivial_codegree(5).unwrap(), nat(12));
        assert_eq!(min_nontrivial_codegree(6).unwrap(), nat(36));
        assert_eq!(min_nontrivial_codegree(8).unwrap(), nat(288));
    }

    #[test]
    fn minimal_codegree_via_hook_products() {
        // a_n = min({H/2 : λ ≠ λ', λ ∉ {(n),(1^n)}} ∪ {H : λ = λ'})
        for n in 5..=16 {
            let row = Partition::row(n);
            let col = Partition::column(n);
            let best = enumerate_partitions(n)
                .filter(|l| *l != row && *l != col)
                .map(|l| {
                    if l.is_self_conjugate() {
                        l.hook_product()
                    } else {
                        l.hook_product() / 2u32
                    }
                })
                .min()
                .unwrap();
            assert_eq!(min_nontrivial_codegree(n).unwrap(), best, "n = {n}");
        }
    }

    #[test]
    fn monotone_small_ranges() {
        let r = verify_min_codegree_monotone(5, 6).unwrap();
        assert!(r.holds);
        assert_eq!(r.witness, vec![(5, nat(12)), (6, nat(36))]);
        assert!(verify_min_codegree_monotone(5, 12).unwrap().holds);
        assert!(verify_min_codegree_monotone(6, 5).is_err());
        assert!(verify_min_codegree_monotone(4, 6).is_err());
        assert!(verify_min_codegree_monotone(5, 41).is_err());
    }

    #[test]
    fn rejects_small_degree() {
        assert!(alt_codegree_set(4).is_err());
        assert!(alt_irr_entries(3).is_err());
    }

    #[test]
    fn codegree_set_validation() {
        assert!(CodegreeSet::new("X", nat(60), nats(&[12, 15])).is_err());
        assert!(CodegreeSet::new("X", nat(60), nats(&[1, 7])).is_err());
        let s = CodegreeSet::new("X", nat(60), nats(&[20, 1, 12, 12])).unwrap();
        assert_eq!(s.values(), nats(&[1, 12, 20]).as_slice());
    }
}
