//! Exact codegree sets of alternating groups, and the machinery that shows
//! no other simple group has its codegree set inside `cod(A_n)`.
//!
//! * [`exactnum`]: big-integer helpers (factorials, valuations, fractions).
//! * [`partitions`]: Young diagrams, hook lengths, corner removal.
//! * [`alt_codegrees`]: `cod(A_n)` via the hook length formula.
//! * [`catalog`]: simple-group orders, class-number bounds, degree data.
//! * [`search`]: the divisibility/bound sweeps and the subset verdicts.

pub mod alt_codegrees;
pub mod catalog;
pub mod error;
pub mod exactnum;
pub mod partitions;
pub mod search;
mod serde_natural;

pub use alt_codegrees::{
    alt_codegree_set, alt_irr_entries, min_nontrivial_codegree, sym_degree,
    verify_min_codegree_monotone, AltIrrEntry, CodegreeSet, MonotoneReport,
};
pub use catalog::{Catalog, Family, GroupId, Sporadic};
pub use error::{Error, Result};
pub use exactnum::{Fraction, Natural, PrimePower};
pub use partitions::{enumerate_partitions, Cell, Partition};
