use serde::Serialize;

use crate::alt_codegrees::{verify_min_codegree_monotone, MonotoneReport};
use crate::catalog::{Catalog, Family};
use crate::error::Result;

use super::golden::golden_csv;
use super::schur::{
    schur_a9_size_check, schur_degree_equation_solutions, SchurA9Check, SchurSolutions,
};
use super::sieve::{passes_sieves, DEFAULT_N_CAP};
use super::sweep::{sweep_family, sweep_sporadic};
use super::SearchReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    /// `a_{n-1} < a_n` is checked for `5 < n <= monotone_hi`.
    pub monotone_hi: usize,
    pub n_cap: u64,
    pub schur_hi: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            monotone_hi: 30,
            n_cap: DEFAULT_N_CAP,
            schur_hi: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MasterReport {
    pub pass: bool,
    pub catalog_version: u32,
    pub checks: Vec<Check>,
    pub monotone: MonotoneReport,
    pub sporadic: SearchReport,
    pub families: Vec<SearchReport>,
    pub schur: SchurSolutions,
    pub a9: SchurA9Check,
}

impl MasterReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

fn sweep_checks(catalog: &Catalog, report: &SearchReport, checks: &mut Vec<Check>) -> Result<()> {
    let t = &report.target;
    let golden = golden_csv(t);
    let got = report.rows_csv();
    checks.push(Check::new(
        format!("{t}: rows match the expected table"),
        got == golden,
        format!(
            "{} rows, {} expected",
            report.rows.len(),
            golden.lines().count() - 1
        ),
    ));
    let mut sieve_ok = true;
    for r in &report.rows {
        sieve_ok &= passes_sieves(catalog, &r.group, r.n)?;
    }
    checks.push(Check::new(
        format!("{t}: rows pass both sieves"),
        sieve_ok,
        "",
    ));
    let undischarged: Vec<String> = report
        .rows
        .iter()
        .filter(|r| !r.verdict.is_discharged())
        .map(|r| format!("{} in A{}: {}", r.group, r.n, r.verdict))
        .collect();
    checks.push(Check::new(
        format!("{t}: survivors discharged"),
        undischarged.is_empty(),
        undischarged.join("; "),
    ));
    let mut problems = report
        .frontier_breaches
        .iter()
        .map(|g| format!("frontier breach {g}"))
        .collect::<Vec<_>>();
    problems.extend(report.p_part_violations.iter().cloned());
    problems.extend(report.cap_hits.iter().cloned());
    checks.push(Check::new(
        format!("{t}: box closed"),
        problems.is_empty(),
        if problems.is_empty() {
            format!(
                "{} points, {} frontier points",
                report.points_examined, report.frontier_points_checked
            )
        } else {
            problems.join("; ")
        },
    ));
    Ok(())
}

/// Monotonicity, every sweep, every subset check, the Schur case, and the
/// comparison against the expected tables. Passes iff every check passes.
pub fn run_full_verification(catalog: &Catalog, config: &VerifyConfig) -> Result<MasterReport> {
    let mut checks = Vec::new();

    let monotone = verify_min_codegree_monotone(5, config.monotone_hi)?;
    checks.push(Check::new(
        format!(
            "a_n strictly increasing for 5 <= n <= {}",
            config.monotone_hi
        ),
        monotone.holds,
        monotone
            .first_violation
            .map(|n| format!("fails at n = {n}"))
            .unwrap_or_default(),
    ));

    let sporadic = sweep_sporadic(catalog, config.n_cap)?;
    sweep_checks(catalog, &sporadic, &mut checks)?;
    let families = Family::all()
        .map(|f| sweep_family(catalog, f, config.n_cap))
        .collect::<Result<Vec<_>>>()?;
    for r in &families {
        sweep_checks(catalog, r, &mut checks)?;
    }
    let classical_rows: usize = families
        .iter()
        .filter(|r| matches!(r.target.as_str(), "psl" | "omega" | "psu"))
        .map(|r| r.rows.len())
        .sum();
    let other_rows: usize = families.iter().map(|r| r.rows.len()).sum::<usize>() - classical_rows;
    checks.push(Check::new(
        "exception row counts",
        classical_rows == 15 && other_rows == 0 && sporadic.rows.len() == 1,
        format!(
            "{classical_rows} PSL/Omega/PSU, {other_rows} other Lie type, {} sporadic",
            sporadic.rows.len()
        ),
    ));

    let schur = schur_degree_equation_solutions(8, config.schur_hi)?;
    checks.push(Check::new(
        format!("n - 1 = 2^e solutions on [8, {}]", config.schur_hi),
        schur.solutions == [9],
        schur.identities.join("; "),
    ));
    let a9 = schur_a9_size_check(catalog)?;
    checks.push(Check::new(
        "|cod(2.A9)| != |cod(A9)|",
        a9.passes(),
        format!("{} vs {}", a9.cod_2a9_size, a9.cod_a9_size),
    ));

    Ok(MasterReport {
        pass: checks.iter().all(|c| c.pass),
        catalog_version: catalog.version(),
        checks,
        monotone,
        sporadic,
        families,
        schur,
        a9,
    })
}
