//! The simple-group catalog: identifiers, order formulas, class-number
//! bounds and the embedded character degree data.

mod bounds;
mod data;
mod group;
mod order;

pub use bounds::{class_number_bound_poly, lie_class_number_bound, ClassNumberBound, Parity};
pub use data::{Catalog, DegreeRecord, DATA_ENV, DOUBLE_COVER_A9};
pub use group::{Family, GroupId, Shape, Sporadic};
pub use order::{legendre_n_min, lie_order, q_part_exponent};
