use codlab_core::alt_codegrees::{alt_order, DESK_MAX_N};
use codlab_core::exactnum::{factored_form, Natural};
use codlab_core::search::{
    check_subset, golden_csv, run_full_verification, schur_a9_size_check,
    schur_degree_equation_solutions, sweep_target, MasterReport, SearchReport, Verdict,
    VerifyConfig, DEFAULT_N_CAP,
};
use codlab_core::{alt_codegree_set, verify_min_codegree_monotone, Catalog, Error, GroupId};
use serde::Serialize;

use crate::render::{self, number, opt};
use crate::{Cli, Command, Failure, Format};

const SCHUR_N_HI: u64 = 64;

type Outcome = Result<String, Failure>;

fn core_failure(e: Error) -> Failure {
    match e {
        Error::MissingData(_) | Error::CapReached { .. } => Failure::Unverifiable(e.to_string()),
        _ => Failure::Usage(e.to_string()),
    }
}

fn catalog() -> Result<Catalog, Failure> {
    Catalog::load().map_err(|e| Failure::Usage(format!("cannot load group data: {e}")))
}

fn degree_in_range(n: u64, max: u64) -> Result<(), Failure> {
    if (5..=max).contains(&n) {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "n must satisfy 5 <= n <= {max}, got {n}"
        )))
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Cod { n } => cod(cli, *n),
        Command::MinCod { n_lo, n_hi } => min_cod(cli, *n_lo, *n_hi),
        Command::Search { target } => search(cli, target),
        Command::Schur => schur(cli),
        Command::CheckSubset { group, n } => subset(cli, group, *n),
    }
}

#[derive(Serialize)]
struct CodOut {
    group: String,
    order: String,
    size: usize,
    values: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    factored: Option<Vec<String>>,
}

fn cod(cli: &Cli, n: u64) -> Outcome {
    degree_in_range(n, cli.max_n.unwrap_or(DESK_MAX_N as u64))?;
    let set = alt_codegree_set(n as usize).map_err(core_failure)?;
    let values: Vec<String> = set.values().iter().map(ToString::to_string).collect();
    let factored: Option<Vec<String>> = cli
        .factored
        .then(|| set.values().iter().map(factored_form).collect());
    let headers: &[&str] = if cli.factored {
        &["codegree", "factored"]
    } else {
        &["codegree"]
    };
    let rows: Vec<Vec<String>> = values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut r = vec![v.clone()];
            r.extend(factored.as_ref().map(|f| f[i].clone()));
            r
        })
        .collect();
    Ok(match cli.format {
        Format::Table => format!(
            "cod({}): {} values, |{}| = {}\n{}",
            set.group_label,
            set.len(),
            set.group_label,
            number(&set.order, cli.factored),
            render::table(headers, &rows)
        ),
        Format::Csv => render::csv(headers, &rows),
        Format::Json => render::json(&CodOut {
            group: set.group_label.clone(),
            order: set.order.to_string(),
            size: set.len(),
            values,
            factored,
        }),
    })
}

#[derive(Serialize)]
struct MinCodRow {
    n: usize,
    a_n: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    factored: Option<String>,
}

#[derive(Serialize)]
struct MinCodOut {
    n_lo: u64,
    n_hi: u64,
    holds: bool,
    first_violation: Option<usize>,
    rows: Vec<MinCodRow>,
}

fn min_cod(cli: &Cli, n_lo: u64, n_hi: u64) -> Outcome {
    let max = cli
        .max_n
        .unwrap_or(DESK_MAX_N as u64)
        .min(DESK_MAX_N as u64);
    if !(5 <= n_lo && n_lo < n_hi && n_hi <= max) {
        return Err(Failure::Usage(format!(
            "need 5 <= n_lo < n_hi <= {max}, got {n_lo} {n_hi}"
        )));
    }
    let report =
        verify_min_codegree_monotone(n_lo as usize, n_hi as usize).map_err(core_failure)?;
    let rows: Vec<MinCodRow> = report
        .witness
        .iter()
        .map(|(n, a)| MinCodRow {
            n: *n,
            a_n: a.to_string(),
            factored: cli.factored.then(|| factored_form(a)),
        })
        .collect();
    let headers: &[&str] = if cli.factored {
        &["n", "a_n", "factored"]
    } else {
        &["n", "a_n"]
    };
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut c = vec![r.n.to_string(), r.a_n.clone()];
            c.extend(r.factored.clone());
            c
        })
        .collect();
    let verdict = match report.first_violation {
        None => format!("PASS: a_n strictly increasing for {n_lo} <= n <= {n_hi}"),
        Some(v) => format!("FAIL: a_{} >= a_{v}", v - 1),
    };
    let output = match cli.format {
        Format::Table => format!("{}{verdict}\n", render::table(headers, &cells)),
        Format::Csv => render::csv(headers, &cells),
        Format::Json => render::json(&MinCodOut {
            n_lo,
            n_hi,
            holds: report.holds,
            first_violation: report.first_violation,
            rows,
        }),
    };
    if report.holds {
        Ok(output)
    } else {
        Err(Failure::Verification {
            output,
            message: verdict,
        })
    }
}

fn row_cells(report: &SearchReport, with_group: bool) -> (Vec<&'static str>, Vec<Vec<String>>) {
    let sporadic = report.target == "sporadic";
    let headers = match (sporadic, with_group) {
        (true, _) => vec!["group", "n", "ratio", "verdict", "witness"],
        (false, true) => vec!["group", "m", "q", "n", "ratio", "verdict", "witness"],
        (false, false) => vec!["m", "q", "n", "ratio", "verdict", "witness"],
    };
    let rows = report
        .rows
        .iter()
        .map(|r| {
            let mut c = Vec::new();
            if sporadic || with_group {
                c.push(r.group.label());
            }
            if !sporadic {
                c.push(opt(&r.m));
                c.push(opt(&r.q));
            }
            c.extend([
                r.n.to_string(),
                r.ratio.to_string(),
                r.verdict.to_string(),
                opt(&r.witness),
            ]);
            c
        })
        .collect();
    (headers, rows)
}

fn search_table(report: &SearchReport) -> String {
    let mut s = format!("search {}\n", report.target);
    if let Some(b) = &report.class_number_bound {
        s += &format!("class-number bound: {b}\n");
    }
    if let Some(d) = &report.bounds {
        s += &format!("derived box (m, p, k): {}\n", d.derived);
        if let Some(l) = d.literature {
            s += &format!("literature box (m, p, k): {l}\n");
        }
        s += &format!(
            "minimal point {}: inequality {}\n",
            d.minimal_point,
            if d.minimal_point_feasible {
                "holds"
            } else {
                "fails"
            }
        );
    }
    s += &format!("points examined: {}\n", report.points_examined);
    if report.bounds.is_some() {
        s += &format!(
            "frontier points checked: {}\n",
            report.frontier_points_checked
        );
    }
    for (label, items) in [
        ("frontier breach", &report.frontier_breaches),
        ("p-part violation", &report.p_part_violations),
        ("cap reached", &report.cap_hits),
        ("note", &report.notes),
    ] {
        for i in items {
            s += &format!("{label}: {i}\n");
        }
    }
    s += &format!("exception rows: {}\n", report.rows.len());
    if !report.rows.is_empty() {
        let (h, rows) = row_cells(report, true);
        s += &render::table(&h, &rows);
    }
    s
}

#[derive(Serialize)]
struct SearchOut<'a> {
    #[serde(flatten)]
    report: &'a SearchReport,
    matches_expected: bool,
    pass: bool,
}

fn master_table(m: &MasterReport) -> String {
    let mut s = String::new();
    for c in &m.checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        if c.detail.is_empty() {
            s += &format!("{status}  {}\n", c.name);
        } else {
            s += &format!("{status}  {} ({})\n", c.name, c.detail);
        }
    }
    for r in std::iter::once(&m.sporadic).chain(&m.families) {
        if !r.rows.is_empty() {
            s += &format!("\n{} rows\n", r.target);
            let (h, rows) = row_cells(r, true);
            s += &render::table(&h, &rows);
        }
    }
    s += &format!("\nsummary: {}\n", if m.pass { "PASS" } else { "FAIL" });
    s
}

fn search(cli: &Cli, target: &str) -> Outcome {
    let cap = cli.max_n.unwrap_or(DEFAULT_N_CAP);
    let catalog = catalog()?;
    if target == "all" {
        let config = VerifyConfig {
            n_cap: cap,
            ..VerifyConfig::default()
        };
        let m = run_full_verification(&catalog, &config).map_err(core_failure)?;
        let output = match cli.format {
            Format::Table => master_table(&m),
            Format::Json => render::json(&m),
            Format::Csv => {
                let rows: Vec<Vec<String>> = m
                    .checks
                    .iter()
                    .map(|c| {
                        vec![
                            c.name.clone(),
                            if c.pass { "PASS" } else { "FAIL" }.into(),
                            c.detail.clone(),
                        ]
                    })
                    .collect();
                render::csv(&["check", "result", "detail"], &rows)
            }
        };
        return if m.pass {
            Ok(output)
        } else {
            let failed: Vec<&str> = m.failed_checks().map(|c| c.name.as_str()).collect();
            Err(Failure::Verification {
                output,
                message: format!("verification failed: {}", failed.join("; ")),
            })
        };
    }
    let report = sweep_target(&catalog, target, cap).map_err(core_failure)?;
    let matches_expected = report.rows_csv() == golden_csv(&report.target);
    let pass = matches_expected && report.is_clean();
    let output = match cli.format {
        Format::Table => format!(
            "{}result: {}\n",
            search_table(&report),
            if pass { "PASS" } else { "FAIL" }
        ),
        Format::Json => render::json(&SearchOut {
            report: &report,
            matches_expected,
            pass,
        }),
        Format::Csv => {
            let (h, rows) = row_cells(&report, false);
            render::csv(&h, &rows)
        }
    };
    if pass {
        Ok(output)
    } else {
        let why = if matches_expected {
            "sweep left survivors or an open box"
        } else {
            "rows differ from the expected table"
        };
        Err(Failure::Verification {
            output,
            message: format!("search {}: {why}", report.target),
        })
    }
}

fn schur(cli: &Cli) -> Outcome {
    let n_hi = cli.max_n.unwrap_or(SCHUR_N_HI);
    let eq = schur_degree_equation_solutions(8, n_hi).map_err(core_failure)?;
    let catalog = catalog()?;
    let a9 = schur_a9_size_check(&catalog).map_err(core_failure)?;
    let pass = a9.passes() && eq.solutions == [9];
    let sols = eq
        .solutions
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    let kv: Vec<(&str, String)> = vec![
        ("solutions", sols.clone()),
        ("no_solutions_from", opt(&eq.no_solutions_from)),
        ("cod_a9_size", a9.cod_a9_size.to_string()),
        (
            "cod_a9_tabulated_size",
            a9.cod_a9_tabulated_size.to_string(),
        ),
        ("cod_2a9_size", a9.cod_2a9_size.to_string()),
        ("contained", a9.contained.to_string()),
        ("distinct_sizes", a9.distinct_sizes.to_string()),
        ("basic_spin_degree", a9.basic_spin_degree.to_string()),
        (
            "has_basic_spin_degree",
            a9.has_basic_spin_degree.to_string(),
        ),
    ];
    #[derive(Serialize)]
    struct SchurOut<'a> {
        equation: &'a codlab_core::search::SchurSolutions,
        a9: &'a codlab_core::search::SchurA9Check,
        pass: bool,
    }
    let output = match cli.format {
        Format::Json => render::json(&SchurOut {
            equation: &eq,
            a9: &a9,
            pass,
        }),
        Format::Csv => {
            let rows: Vec<Vec<String>> = kv
                .iter()
                .map(|(k, v)| vec![k.to_string(), v.clone()])
                .collect();
            render::csv(&["quantity", "value"], &rows)
        }
        Format::Table => {
            let mut s = format!(
                "n - 1 = 2^(floor((n-2)/2)-1) or 2^(floor(n/2)-1) on [8, {n_hi}]: {sols}\n"
            );
            for i in &eq.identities {
                s += &format!("  {i}\n");
            }
            if let Some(n0) = eq.no_solutions_from {
                s += &format!("  2^(floor((n-2)/2)-1) > n-1 for {n0} <= n <= {n_hi}\n");
            }
            s += &format!(
                "|cod(A9)| = {} (hook lengths), {} (degree table)\n|cod(2.A9)| = {}\n",
                a9.cod_a9_size, a9.cod_a9_tabulated_size, a9.cod_2a9_size
            );
            s += &format!("cod(A9) contained in cod(2.A9): {}\n", a9.contained);
            s += &format!(
                "2.A9 has a degree 2^floor((9-2)/2) = {}: {}\n",
                a9.basic_spin_degree, a9.has_basic_spin_degree
            );
            let extra = a9
                .extra_codegrees
                .iter()
                .map(Natural::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            s += &format!("codegrees of 2.A9 outside cod(A9): {extra}\n");
            s += &format!("distinct sizes: {}\n", a9.distinct_sizes);
            s
        }
    };
    if pass {
        Ok(output)
    } else {
        Err(Failure::Verification {
            output,
            message: "Schur-case check failed".into(),
        })
    }
}

fn subset(cli: &Cli, group: &str, n: u64) -> Outcome {
    let h: GroupId = group
        .parse()
        .map_err(|e: Error| Failure::Usage(e.to_string()))?;
    degree_in_range(n, cli.max_n.unwrap_or(DESK_MAX_N as u64))?;
    let catalog = catalog()?;
    let c = check_subset(&catalog, &h, n).map_err(core_failure)?;
    let order_h = catalog.group_order(&h).map_err(core_failure)?;
    let output = match cli.format {
        Format::Json => render::json(&c),
        Format::Csv => render::csv(
            &[
                "group",
                "n",
                "verdict",
                "witness",
                "cod_h_size",
                "cod_a_size",
            ],
            &[vec![
                h.label(),
                n.to_string(),
                c.verdict.to_string(),
                opt(&c.witness),
                c.cod_h_size.to_string(),
                c.cod_a_size.to_string(),
            ]],
        ),
        Format::Table => {
            let mut s = format!(
                "|{h}| = {}, |A{n}| = {}\n",
                number(&order_h, cli.factored),
                number(&alt_order(n as usize), cli.factored)
            );
            s += &format!(
                "|cod({h})| = {}, |cod(A{n})| = {}\n",
                c.cod_h_size, c.cod_a_size
            );
            if let Some(w) = &c.witness {
                s += &format!(
                    "witness: {} in cod({h}), not in cod(A{n})\n",
                    number(w, cli.factored)
                );
            }
            s += &format!("verdict: {}\n", c.verdict);
            s
        }
    };
    if c.verdict == Verdict::SubsetHolds {
        Err(Failure::Verification {
            output,
            message: format!("cod({h}) is contained in cod(A{n})"),
        })
    } else {
        Ok(output)
    }
}
