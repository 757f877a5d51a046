//! Upper bounds on the number of conjugacy classes `k(G)` for the groups of
//! Lie type.
//!
//! Classical groups use the bound for the covering group (`k(PSL) <= k(SL)`
//! and so on). Where the tabulated constant depends on the parity of `q`, the
//! larger constant is applied to every `q`.

use std::fmt;

use num_traits::{Pow, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{Fraction, Natural};

use super::group::{Family, GroupId};

/// Which `q` a tabulated row was stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Any,
    Odd,
    Even,
}

/// A bound `Σ c_i q^{e_i}` with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassNumberBound {
    pub family: Family,
    /// `(coefficient, exponent)`, highest power first.
    pub terms: Vec<(Fraction, u32)>,
    pub parity: Parity,
    /// The group the tabulated bound was stated for.
    pub source_row: &'static str,
}

impl ClassNumberBound {
    pub fn evaluate(&self, q: &Natural) -> Fraction {
        let mut num = Natural::zero();
        let mut den = Natural::from(1u32);
        for (c, e) in &self.terms {
            let term_num = c.numer() * Pow::pow(q, *e);
            // num/den + term_num/c.den
            num = num * c.denom() + term_num * &den;
            den *= c.denom();
        }
        Fraction::new(num, den).expect("non-zero denominator")
    }
}

impl fmt::Display for ClassNumberBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, e)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let c = c.to_string();
            match (*e, c.as_str()) {
                (0, _) => write!(f, "{c}")?,
                (1, "1") => f.write_str("q")?,
                (1, _) => write!(f, "{c}q")?,
                (_, "1") => write!(f, "q^{e}")?,
                _ => write!(f, "{c}q^{e}")?,
            }
        }
        Ok(())
    }
}

fn dec(s: &str) -> Fraction {
    Fraction::from_decimal(s).expect("well-formed constant")
}

fn poly(family: Family, coeffs: &[(u32, u32)], row: &'static str) -> ClassNumberBound {
    ClassNumberBound {
        family,
        terms: coeffs
            .iter()
            .map(|&(c, e)| (Fraction::integer(Natural::from(c)), e))
            .collect(),
        parity: Parity::Any,
        source_row: row,
    }
}

/// The class-number bound applying to `g`, as a polynomial in `q`.
pub fn class_number_bound_poly(g: &GroupId) -> Result<ClassNumberBound> {
    g.validate()?;
    let family = g
        .family()
        .ok_or_else(|| Error::InvalidParameter(format!("{g} has no class-number polynomial")))?;
    let m = g.m().unwrap_or(0);
    let classical = |c: &str, parity: Parity, row: &'static str| ClassNumberBound {
        family,
        terms: vec![(dec(c), m)],
        parity,
        source_row: row,
    };
    Ok(match family {
        Family::Psl => classical("2.5", Parity::Any, "SL(n,q)"),
        Family::Psu => classical("8.26", Parity::Any, "SU(n,q)"),
        Family::Psp => classical("15.2", Parity::Even, "Sp(2n,q)"),
        Family::OmegaOdd => classical("7.3", Parity::Odd, "Omega(2n+1,q)"),
        Family::OPlus | Family::OMinus => classical("15", Parity::Even, "O±(2n,q)"),
        Family::Suzuki => poly(family, &[(1, 1), (3, 0)], "2B2(q)"),
        Family::Ree => poly(family, &[(1, 1), (8, 0)], "2G2(q)"),
        Family::G2 => poly(family, &[(1, 2), (2, 1), (9, 0)], "G2(q)"),
        Family::TwistedF4 => poly(family, &[(1, 2), (4, 1), (17, 0)], "2F4(q)"),
        Family::TriD4 => poly(family, &[(1, 4), (1, 3), (1, 2), (1, 1), (6, 0)], "3D4(q)"),
        Family::F4 => poly(family, &[(1, 4), (2, 3), (7, 2), (15, 1), (31, 0)], "F4(q)"),
        Family::E6 => poly(
            family,
            &[(1, 6), (1, 5), (2, 4), (2, 3), (15, 2), (21, 1), (60, 0)],
            "E6(q)",
        ),
        Family::TwistedE6 => poly(
            family,
            &[(1, 6), (1, 5), (2, 4), (4, 3), (18, 2), (26, 1), (62, 0)],
            "2E6(q)",
        ),
        Family::E7 => poly(
            family,
            &[
                (1, 7),
                (1, 6),
                (2, 5),
                (7, 4),
                (17, 3),
                (35, 2),
                (71, 1),
                (103, 0),
            ],
            "E7(q)",
        ),
        Family::E8 => poly(
            family,
            &[
                (1, 8),
                (1, 7),
                (2, 6),
                (3, 5),
                (10, 4),
                (16, 3),
                (40, 2),
                (67, 1),
                (112, 0),
            ],
            "E8(q)",
        ),
    })
}

/// `k(g) <=` this value for a Lie-type `g`.
pub fn lie_class_number_bound(g: &GroupId) -> Result<Fraction> {
    let b = class_number_bound_poly(g)?;
    Ok(b.evaluate(&g.q().expect("Lie type").natural()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bound(s: &str) -> String {
        lie_class_number_bound(&s.parse().unwrap())
            .unwrap()
            .to_string()
    }

    #[test]
    fn classical_rows() {
        assert_eq!(bound("PSL(2,5)"), "12.5");
        assert_eq!(bound("PSL(4,2)"), "20");
        assert_eq!(bound("PSU(3,3)"), "74.34");
        assert_eq!(bound("Omega(5,3)"), "65.7");
        assert_eq!(bound("PSp(6,2)"), "121.6");
        assert_eq!(bound("O+(8,2)"), "240");
    }

    #[test]
    fn exceptional_rows() {
        // 2^6 + 2^5 + 2·2^4 + 2·2^3 + 15·2^2 + 21·2 + 60
        assert_eq!(
            bound("E6(2)"),
            (64 + 32 + 32 + 16 + 60 + 42 + 60).to_string()
        );
        assert_eq!(
            bound("E7(2)"),
            (128 + 64 + 64 + 112 + 136 + 140 + 142 + 103).to_string()
        );
        assert_eq!(bound("3D4(2)"), (16 + 8 + 4 + 2 + 6).to_string());
        assert_eq!(bound("G2(2)'"), "17");
        assert_eq!(bound("2B2(8)"), "11");
        assert_eq!(bound("2G2(27)"), "35");
    }

    #[test]
    fn display() {
        let b = class_number_bound_poly(&"E6(3)".parse().unwrap()).unwrap();
        assert_eq!(b.to_string(), "q^6 + q^5 + 2q^4 + 2q^3 + 15q^2 + 21q + 60");
        let c = class_number_bound_poly(&"PSU(4,3)".parse().unwrap()).unwrap();
        assert_eq!(c.to_string(), "8.26q^3");
    }

    #[test]
    fn non_lie_rejected() {
        assert!(class_number_bound_poly(&GroupId::Alternating(7)).is_err());
    }
}
