use rayon::prelude::*;
use serde::Serialize;

use crate::alt_codegrees::alt_order;
use crate::catalog::{
    class_number_bound_poly, q_part_exponent, Catalog, Family, GroupId, Shape, Sporadic,
};
use crate::error::{Error, Result};
use crate::exactnum::{exact_div, next_prime, valuation, PrimePower};

use super::sieve::{candidate_n_range, feasible};
use super::subset::{check_subset, Verdict};
use super::{ExceptionRow, FamilyBounds, SearchReport};

/// Upper limit on the number of points probed along one axis.
const SCAN_LIMIT: usize = 100_000;

/// How the parameter box of a family was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundDerivation {
    pub family: Family,
    pub derived: FamilyBounds,
    /// The box stated in the literature, where one is stated.
    pub literature: Option<FamilyBounds>,
    /// Smallest legal parameter point of the family.
    pub minimal_point: String,
    pub minimal_point_feasible: bool,
}

/// Published parameter boxes, used only to report deltas.
pub fn literature_bounds(family: Family) -> Option<FamilyBounds> {
    let b = |m, p, k| FamilyBounds {
        m_max: Some(m),
        p_max: Some(p),
        k_max: Some(k),
    };
    match family {
        Family::Psl => Some(b(6, 17, 63)),
        Family::Psu => Some(b(6, 7, 42)),
        Family::Psp => Some(b(4, 2, 2)),
        Family::OPlus => Some(b(4, 2, 1)),
        Family::OMinus => Some(b(5, 3, 3)),
        Family::Suzuki => Some(b(4, 2, 9)),
        _ => None,
    }
}

fn smallest_prime(family: Family) -> u64 {
    if family == Family::OmegaOdd {
        3
    } else {
        2
    }
}

fn primes_from(p: u64) -> impl Iterator<Item = u64> {
    std::iter::successors(Some(p), |&p| Some(next_prime(p)))
}

/// The group at `(m, p, k)`, or `None` when the parameters are not legal for
/// the family. For the odd-power families `m` is `a` and `k` is ignored.
fn member(family: Family, m: u32, p: u64, k: u32) -> Result<Option<GroupId>> {
    let (p, k) = match family.shape() {
        Shape::OddPower { p } => (p, 2 * m + 1),
        _ => (p, k),
    };
    let q = PrimePower::new(p, k)?;
    match family.member(m, q) {
        Ok(g) => Ok(Some(g)),
        Err(Error::InvalidParameter(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Largest axis value before the first legal point failing the inequality.
/// Illegal points are skipped.
fn scan<T: Copy>(
    catalog: &Catalog,
    family: Family,
    values: impl Iterator<Item = T>,
    point: impl Fn(T) -> (u32, u64, u32),
) -> Result<Option<T>> {
    let mut last = None;
    for v in values.take(SCAN_LIMIT) {
        let (m, p, k) = point(v);
        let Some(g) = member(family, m, p, k)? else {
            continue;
        };
        if feasible(catalog, &g)? {
            last = Some(v);
        } else {
            return Ok(last);
        }
    }
    Err(Error::InvalidParameter(format!(
        "{family}: bound scan did not terminate"
    )))
}

fn minimal_point(family: Family) -> Result<GroupId> {
    let (m0, p0) = match family.shape() {
        Shape::Classical { m_min } => (m_min, smallest_prime(family)),
        Shape::Exceptional => (0, 2),
        Shape::OddPower { p } => (1, p),
    };
    for m in m0.. {
        for p in primes_from(p0).take(8) {
            for k in 1..=8 {
                if let Some(g) = member(family, m, p, k)? {
                    return Ok(g);
                }
            }
        }
    }
    unreachable!("every family has a legal point")
}

/// Scans each axis with the other parameters at their smallest values and
/// stops at the first legal point where `|A_{n_min}| < |G|·k(G)` fails.
pub fn derive_family_bounds(catalog: &Catalog, family: Family) -> Result<BoundDerivation> {
    let derived = match family.shape() {
        Shape::Classical { m_min } => {
            let p0 = smallest_prime(family);
            let m_max = scan(catalog, family, m_min.., |m| (m, p0, 1))?;
            let p_max = scan(catalog, family, primes_from(p0), |p| (m_min, p, 1))?;
            let k_max = scan(catalog, family, 1u32.., |k| (m_min, p0, k))?;
            if m_max.is_none() && p_max.is_none() && k_max.is_none() {
                FamilyBounds::EMPTY
            } else {
                FamilyBounds {
                    m_max: Some(m_max.unwrap_or(m_min)),
                    p_max: Some(p_max.unwrap_or(p0)),
                    k_max: Some(k_max.unwrap_or(1)),
                }
            }
        }
        Shape::Exceptional => {
            let p_max = scan(catalog, family, primes_from(2), |p| (0, p, 1))?;
            let k_max = scan(catalog, family, 1u32.., |k| (0, 2, k))?;
            if p_max.is_none() && k_max.is_none() {
                FamilyBounds::EMPTY
            } else {
                FamilyBounds {
                    m_max: None,
                    p_max: Some(p_max.unwrap_or(2)),
                    k_max: Some(k_max.unwrap_or(1)),
                }
            }
        }
        Shape::OddPower { p } => match scan(catalog, family, 1u32.., |a| (a, p, 0))? {
            Some(a) => FamilyBounds {
                m_max: Some(a),
                p_max: Some(p),
                k_max: Some(2 * a + 1),
            },
            None => FamilyBounds::EMPTY,
        },
    };
    let min = minimal_point(family)?;
    Ok(BoundDerivation {
        family,
        derived,
        literature: literature_bounds(family),
        minimal_point: min.label(),
        minimal_point_feasible: feasible(catalog, &min)?,
    })
}

/// Legal points of the box, in `(m, p, k)` order.
fn box_points(family: Family, b: &FamilyBounds) -> Result<Vec<GroupId>> {
    let mut out = Vec::new();
    let (Some(p_max), Some(k_max)) = (b.p_max, b.k_max) else {
        return Ok(out);
    };
    match family.shape() {
        Shape::Classical { m_min } => {
            let m_max = b.m_max.expect("classical box has a rank bound");
            for m in m_min..=m_max {
                for p in primes_from(smallest_prime(family)).take_while(|&p| p <= p_max) {
                    for k in 1..=k_max {
                        out.extend(member(family, m, p, k)?);
                    }
                }
            }
        }
        Shape::Exceptional => {
            for p in primes_from(2).take_while(|&p| p <= p_max) {
                for k in 1..=k_max {
                    out.extend(member(family, 0, p, k)?);
                }
            }
        }
        Shape::OddPower { p } => {
            for a in 1..=b.m_max.expect("odd-power box has a bound on a") {
                out.extend(member(family, a, p, 0)?);
            }
        }
    }
    Ok(out)
}

/// Legal points one step beyond the box along each axis.
fn frontier_points(family: Family, b: &FamilyBounds) -> Result<Vec<GroupId>> {
    let mut out = Vec::new();
    let (Some(p_max), Some(k_max)) = (b.p_max, b.k_max) else {
        return Ok(out);
    };
    let p_next = next_prime(p_max);
    match family.shape() {
        Shape::Classical { m_min } => {
            let m_max = b.m_max.expect("classical box has a rank bound");
            let primes: Vec<u64> = primes_from(smallest_prime(family))
                .take_while(|&p| p <= p_max)
                .collect();
            for p in &primes {
                for k in 1..=k_max {
                    out.extend(member(family, m_max + 1, *p, k)?);
                }
            }
            for m in m_min..=m_max {
                for k in 1..=k_max {
                    out.extend(member(family, m, p_next, k)?);
                }
                for p in &primes {
                    out.extend(member(family, m, *p, k_max + 1)?);
                }
            }
        }
        Shape::Exceptional => {
            for k in 1..=k_max {
                out.extend(member(family, 0, p_next, k)?);
            }
            for p in primes_from(2).take_while(|&p| p <= p_max) {
                out.extend(member(family, 0, p, k_max + 1)?);
            }
        }
        Shape::OddPower { p } => {
            out.extend(member(
                family,
                b.m_max.expect("odd-power box has a bound on a") + 1,
                p,
                0,
            )?);
        }
    }
    Ok(out)
}

fn exception_row(catalog: &Catalog, g: &GroupId, n: u64) -> Result<ExceptionRow> {
    let ratio = exact_div(&alt_order(n as usize), &catalog.group_order(g)?)?;
    let (verdict, witness) = match check_subset(catalog, g, n) {
        Ok(c) => (c.verdict, c.witness),
        Err(Error::MissingData(_)) => (Verdict::Unresolved, None),
        Err(e) => return Err(e),
    };
    Ok(ExceptionRow {
        group: *g,
        m: g.m(),
        q: g.q().map(|q| q.natural()),
        n,
        ratio,
        verdict,
        witness,
    })
}

struct PointOutcome {
    rows: Vec<ExceptionRow>,
    p_part_violation: Option<String>,
    cap_hit: Option<String>,
}

fn examine(catalog: &Catalog, g: &GroupId, cap: u64) -> Result<PointOutcome> {
    let p_part_violation = match g.q() {
        Some(q) if g.is_lie_type() => {
            let expected = u64::from(q.k()) * u64::from(q_part_exponent(g)?);
            let v = valuation(&catalog.group_order(g)?, q.p())?;
            (v != expected).then(|| format!("{g}: v_{}(|G|) = {v}, expected {expected}", q.p()))
        }
        _ => None,
    };
    let (ns, cap_hit) = match candidate_n_range(catalog, g, cap) {
        Ok(r) => (r.ns, None),
        Err(Error::CapReached { group, cap }) => {
            (Vec::new(), Some(format!("{group}: n reached {cap}")))
        }
        Err(e) => return Err(e),
    };
    let rows = ns
        .into_iter()
        .map(|n| exception_row(catalog, g, n))
        .collect::<Result<_>>()?;
    Ok(PointOutcome {
        rows,
        p_part_violation,
        cap_hit,
    })
}

fn assemble(
    catalog: &Catalog,
    points: &[GroupId],
    cap: u64,
) -> Result<(Vec<ExceptionRow>, Vec<String>, Vec<String>)> {
    let outcomes = points
        .par_iter()
        .map(|g| examine(catalog, g, cap))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    let mut p_part = Vec::new();
    let mut caps = Vec::new();
    for o in outcomes {
        rows.extend(o.rows);
        p_part.extend(o.p_part_violation);
        caps.extend(o.cap_hit);
    }
    rows.sort_by_key(ExceptionRow::sort_key);
    Ok((rows, p_part, caps))
}

fn family_notes(family: Family, d: &BoundDerivation) -> Vec<String> {
    let mut notes = Vec::new();
    if d.derived.is_empty() {
        notes.push(format!(
            "inequality fails at the minimal point {}",
            d.minimal_point
        ));
    }
    if let Some(lit) = d.literature {
        if lit != d.derived {
            notes.push(format!(
                "derived box {} differs from the literature box {}",
                d.derived, lit
            ));
        }
    }
    match family {
        Family::G2 => notes.push("q = 2 swept as G2(2)' of order 6048".into()),
        Family::Suzuki | Family::TwistedF4 | Family::Ree => {
            if let Some(a) = d.derived.m_max {
                notes.push(format!("a <= {a}, a = {} fails the inequality", a + 1));
            }
        }
        Family::E7 => notes.push("bound q^7 + q^6 + 2q^5 + ... from the class-number table".into()),
        Family::TriD4 => {
            notes.push("bound q^4 + q^3 + q^2 + q + 6 from the class-number table".into())
        }
        Family::Psp | Family::OPlus | Family::OMinus => {
            notes.push("q-even class-number constant applied to every q".into())
        }
        Family::OmegaOdd => notes.push("q-odd class-number constant; q is always odd".into()),
        _ => {}
    }
    notes
}

/// Sweeps the full box of one Lie family.
pub fn sweep_family(catalog: &Catalog, family: Family, cap: u64) -> Result<SearchReport> {
    let bounds = derive_family_bounds(catalog, family)?;
    let points = box_points(family, &bounds.derived)?;
    let frontier = frontier_points(family, &bounds.derived)?;
    let breach_flags = frontier
        .par_iter()
        .map(|g| feasible(catalog, g))
        .collect::<Result<Vec<_>>>()?;
    let frontier_breaches = frontier
        .iter()
        .zip(&breach_flags)
        .filter(|(_, &b)| b)
        .map(|(g, _)| g.label())
        .collect();
    let (rows, p_part_violations, cap_hits) = assemble(catalog, &points, cap)?;
    let poly = class_number_bound_poly(&minimal_point(family)?)?;
    let bound_text = match family.shape() {
        Shape::Classical { .. } => format!("{}q^m", poly.terms[0].0),
        _ => poly.to_string(),
    };
    Ok(SearchReport {
        target: family.tag().into(),
        class_number_bound: Some(bound_text),
        notes: family_notes(family, &bounds),
        bounds: Some(bounds),
        points_examined: points.len(),
        frontier_points_checked: frontier.len(),
        frontier_breaches,
        p_part_violations,
        cap_hits,
        rows,
    })
}

/// Sweeps the 26 sporadic groups and the Tits group.
pub fn sweep_sporadic(catalog: &Catalog, cap: u64) -> Result<SearchReport> {
    let points: Vec<GroupId> = Sporadic::ALL.into_iter().map(GroupId::Sporadic).collect();
    let (rows, p_part_violations, cap_hits) = assemble(catalog, &points, cap)?;
    Ok(SearchReport {
        target: "sporadic".into(),
        class_number_bound: Some("exact class number".into()),
        bounds: None,
        points_examined: points.len(),
        frontier_points_checked: 0,
        frontier_breaches: Vec::new(),
        p_part_violations,
        cap_hits,
        rows,
        notes: Vec::new(),
    })
}

/// `sporadic` or a family tag.
pub fn sweep_target(catalog: &Catalog, target: &str, cap: u64) -> Result<SearchReport> {
    if target == "sporadic" {
        return sweep_sporadic(catalog, cap);
    }
    let family = Family::from_tag(target)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown search target {target:?}")))?;
    sweep_family(catalog, family, cap)
}
