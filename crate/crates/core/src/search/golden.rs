//! Expected exception tables, one CSV per sweep target.

pub(crate) const FAMILY_HEADER: &str = "m,q,n,ratio,verdict,witness";
pub(crate) const SPORADIC_HEADER: &str = "group,n,ratio,verdict,witness";

/// Targets with a non-empty expected table.
pub const GOLDEN_TARGETS: [&str; 4] = ["psl", "omega", "psu", "sporadic"];

const PSL: &str = include_str!("../../data/golden/psl.csv");
const OMEGA: &str = include_str!("../../data/golden/omega.csv");
const PSU: &str = include_str!("../../data/golden/psu.csv");
const SPORADIC: &str = include_str!("../../data/golden/sporadic.csv");

/// The expected `rows_csv` output for a sweep target. Families without a
/// golden file expect no rows.
pub fn golden_csv(target: &str) -> String {
    match target {
        "psl" => PSL.to_string(),
        "omega" => OMEGA.to_string(),
        "psu" => PSU.to_string(),
        "sporadic" => SPORADIC.to_string(),
        _ => format!("{FAMILY_HEADER}\n"),
    }
}
