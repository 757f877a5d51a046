//! The double-cover case: an extension `2.A_n` whose codegrees could mimic
//! those of `A_n` forces `n - 1` to equal a basic spin degree.

use serde::Serialize;

use crate::alt_codegrees::alt_codegree_set;
use crate::catalog::{Catalog, DOUBLE_COVER_A9};
use crate::error::{Error, Result};
use crate::exactnum::Natural;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurSolutions {
    pub n_lo: u64,
    pub n_hi: u64,
    pub solutions: Vec<u64>,
    /// One line per solution exhibiting the equality.
    pub identities: Vec<String>,
    /// Smallest `n` from which `2^(floor((n-2)/2)-1) > n-1` holds through
    /// `n_hi`; both exponents then exceed `n - 1`.
    pub no_solutions_from: Option<u64>,
}

fn exponents(n: u64) -> (u64, u64) {
    ((n - 2) / 2 - 1, n / 2 - 1)
}

fn pow2_exceeds(e: u64, x: u64) -> bool {
    e >= 64 || (1u64 << e) > x
}

/// All `n` in `[n_lo, n_hi]` with `n - 1 = 2^(floor((n-2)/2)-1)` or
/// `n - 1 = 2^(floor(n/2)-1)`.
pub fn schur_degree_equation_solutions(n_lo: u64, n_hi: u64) -> Result<SchurSolutions> {
    if n_lo < 8 || n_lo >= n_hi {
        return Err(Error::InvalidParameter(format!(
            "need 8 <= n_lo < n_hi, got ({n_lo}, {n_hi})"
        )));
    }
    let mut solutions = Vec::new();
    let mut identities = Vec::new();
    for n in n_lo..=n_hi {
        let (e1, e2) = exponents(n);
        let hit1 = !pow2_exceeds(e1, n - 1) && 1u64 << e1 == n - 1;
        let hit2 = !pow2_exceeds(e2, n - 1) && 1u64 << e2 == n - 1;
        if hit1 || hit2 {
            solutions.push(n);
            let (e, form) = if hit2 {
                (e2, format!("floor({n}/2)-1"))
            } else {
                (e1, format!("floor(({n}-2)/2)-1"))
            };
            identities.push(format!("{n}-1 = {} = 2^{e} = 2^({form})", n - 1));
        }
    }
    // 2^e1 doubles every two steps of n while n - 1 grows by 2, so once it
    // exceeds n - 1 at two consecutive n it does so for every larger n.
    let mut no_solutions_from = None;
    for n in (n_lo..=n_hi).rev() {
        if pow2_exceeds(exponents(n).0, n - 1) {
            no_solutions_from = Some(n);
        } else {
            break;
        }
    }
    if no_solutions_from.is_some_and(|n| n >= n_hi) {
        no_solutions_from = None;
    }
    Ok(SchurSolutions {
        n_lo,
        n_hi,
        solutions,
        identities,
        no_solutions_from,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchurA9Check {
    pub cod_a9_size: usize,
    /// `|cod(A9)|` from the tabulated degrees of `A9`.
    pub cod_a9_tabulated_size: usize,
    pub cod_2a9_size: usize,
    pub contained: bool,
    pub distinct_sizes: bool,
    pub basic_spin_degree: u64,
    pub has_basic_spin_degree: bool,
    /// Elements of `cod(2.A9)` outside `cod(A9)`.
    #[serde(serialize_with = "crate::serde_natural::list")]
    pub extra_codegrees: Vec<Natural>,
}

impl SchurA9Check {
    pub fn passes(&self) -> bool {
        self.distinct_sizes
            && self.contained
            && self.has_basic_spin_degree
            && self.cod_a9_size == self.cod_a9_tabulated_size
    }
}

/// `|cod(2.A9)| != |cod(A9)|`, with the containment and data cross-checks.
pub fn schur_a9_size_check(catalog: &Catalog) -> Result<SchurA9Check> {
    let cod_2a9 = catalog.twisted_codegree_set_2a9()?;
    let cod_a9 = alt_codegree_set(9)?;
    let tabulated = catalog
        .tabulated_alt_degrees(9)
        .ok_or_else(|| Error::MissingData("A9".into()))?;
    let cod_a9_tab = crate::alt_codegrees::CodegreeSet::from_simple_degrees(
        "A9",
        cod_a9.order.clone(),
        tabulated,
    )?;
    let faithful = &catalog
        .record(DOUBLE_COVER_A9)
        .expect("checked by the codegree set")
        .degrees;
    let basic_spin_degree = 1u64 << ((9 - 2) / 2);
    Ok(SchurA9Check {
        cod_a9_size: cod_a9.len(),
        cod_a9_tabulated_size: cod_a9_tab.len(),
        cod_2a9_size: cod_2a9.len(),
        contained: cod_a9.is_subset_of(&cod_2a9),
        distinct_sizes: cod_a9.len() != cod_2a9.len(),
        basic_spin_degree,
        has_basic_spin_degree: faithful.contains(&Natural::from(basic_spin_degree)),
        extra_codegrees: cod_2a9.missing_from(&cod_a9).cloned().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn only_nine() {
        let s = schur_degree_equation_solutions(8, 64).unwrap();
        assert_eq!(s.solutions, vec![9]);
        assert_eq!(
            s.identities,
            vec!["9-1 = 8 = 2^3 = 2^(floor(9/2)-1)".to_string()]
        );
        assert!(s.no_solutions_from.unwrap() <= 12);
        assert!(schur_degree_equation_solutions(10, 64)
            .unwrap()
            .solutions
            .is_empty());
        assert!(schur_degree_equation_solutions(7, 64).is_err());
        assert!(schur_degree_equation_solutions(20, 20).is_err());
    }

    #[test]
    fn a9_sizes() {
        let c = schur_a9_size_check(&Catalog::embedded()).unwrap();
        assert!(c.passes());
        assert_eq!(c.cod_a9_size, 16);
        assert_eq!(c.cod_2a9_size, 21);
    }

    #[test]
    fn missing_double_cover() {
        let c = Catalog::embedded().without(DOUBLE_COVER_A9);
        match schur_a9_size_check(&c) {
            Err(Error::MissingData(label)) => assert_eq!(label, "2.A9"),
            other => panic!("{other:?}"),
        }
    }
}
