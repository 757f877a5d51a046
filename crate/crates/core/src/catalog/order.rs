//! Order formulas for the groups of Lie type.
//!
//! Each order is `q^N · Π (q^d ± 1) / d_center`, with `N` the number of
//! positive roots and `d_center` the order of the centre of the simply
//! connected cover.

use num_integer::Integer;
use num_traits::Pow;

use crate::error::{Error, Result};
use crate::exactnum::{Natural, PrimePower};

use super::group::GroupId;

fn q_pow(q: &Natural, e: u32) -> Natural {
    Pow::pow(q, e)
}

/// `q^d - 1` or `q^d + 1`.
fn cyclo(q: &Natural, d: u32, plus: bool) -> Natural {
    let x = q_pow(q, d);
    if plus {
        x + 1u32
    } else {
        x - 1u32
    }
}

fn gcd_small(a: u64, b: &Natural) -> Natural {
    Natural::from(a).gcd(b)
}

/// `|G|` for a Lie-type `G` (including `G2(2)'`).
pub fn lie_order(g: &GroupId) -> Result<Natural> {
    g.validate()?;
    let q = match g.q() {
        Some(q) => q.natural(),
        None => return Err(Error::InvalidParameter(format!("{g} is not of Lie type"))),
    };
    let order = match *g {
        GroupId::Psl { m, .. } => {
            let mut x = q_pow(&q, m * (m + 1) / 2);
            for i in 2..=m + 1 {
                x *= cyclo(&q, i, false);
            }
            x / gcd_small(u64::from(m + 1), &(&q - 1u32))
        }
        GroupId::Psu { m, .. } => {
            let mut x = q_pow(&q, m * (m + 1) / 2);
            for i in 2..=m + 1 {
                x *= cyclo(&q, i, i % 2 == 1);
            }
            x / gcd_small(u64::from(m + 1), &(&q + 1u32))
        }
        GroupId::Psp { m, .. } | GroupId::OmegaOdd { m, .. } => {
            let mut x = q_pow(&q, m * m);
            for i in 1..=m {
                x *= cyclo(&q, 2 * i, false);
            }
            x / gcd_small(2, &(&q - 1u32))
        }
        GroupId::OPlus { m, .. } | GroupId::OMinus { m, .. } => {
            let plus = matches!(g, GroupId::OMinus { .. });
            let qm = cyclo(&q, m, plus);
            let mut x = q_pow(&q, m * (m - 1)) * &qm;
            for i in 1..m {
                x *= cyclo(&q, 2 * i, false);
            }
            x / gcd_small(4, &qm)
        }
        GroupId::E6(_) => {
            let x = [2, 5, 6, 8, 9, 12]
                .iter()
                .fold(q_pow(&q, 36), |acc, &d| acc * cyclo(&q, d, false));
            x / gcd_small(3, &(&q - 1u32))
        }
        GroupId::TwistedE6(_) => {
            let x = [
                (2, false),
                (5, true),
                (6, false),
                (8, false),
                (9, true),
                (12, false),
            ]
            .iter()
            .fold(q_pow(&q, 36), |acc, &(d, plus)| acc * cyclo(&q, d, plus));
            x / gcd_small(3, &(&q + 1u32))
        }
        GroupId::E7(_) => {
            let x = [2, 6, 8, 10, 12, 14, 18]
                .iter()
                .fold(q_pow(&q, 63), |acc, &d| acc * cyclo(&q, d, false));
            x / gcd_small(2, &(&q - 1u32))
        }
        GroupId::E8(_) => [2, 8, 12, 14, 18, 20, 24, 30]
            .iter()
            .fold(q_pow(&q, 120), |acc, &d| acc * cyclo(&q, d, false)),
        GroupId::F4(_) => [2, 6, 8, 12]
            .iter()
            .fold(q_pow(&q, 24), |acc, &d| acc * cyclo(&q, d, false)),
        GroupId::G2(_) => q_pow(&q, 6) * cyclo(&q, 6, false) * cyclo(&q, 2, false),
        GroupId::G2Prime2 => {
            let full = q_pow(&q, 6) * cyclo(&q, 6, false) * cyclo(&q, 2, false);
            full / 2u32
        }
        GroupId::TriD4(_) => {
            q_pow(&q, 12)
                * (q_pow(&q, 8) + q_pow(&q, 4) + 1u32)
                * cyclo(&q, 6, false)
                * cyclo(&q, 2, false)
        }
        GroupId::Suzuki(_) => q_pow(&q, 2) * cyclo(&q, 2, true) * (&q - 1u32),
        GroupId::Ree(_) => q_pow(&q, 3) * cyclo(&q, 3, true) * (&q - 1u32),
        GroupId::TwistedF4(_) => {
            q_pow(&q, 12)
                * cyclo(&q, 6, true)
                * cyclo(&q, 4, false)
                * cyclo(&q, 3, true)
                * (&q - 1u32)
        }
        GroupId::Alternating(_) | GroupId::Sporadic(_) => unreachable!("handled above"),
    };
    Ok(order)
}

/// Exponent `e` such that `q^e` is the power of `q` in the order formula.
///
/// `G2(2)'` has index 2 in `G2(2)`, so its 2-part is `2^5` rather than `2^6`;
/// the value returned is the exponent that actually divides its order.
pub fn q_part_exponent(g: &GroupId) -> Result<u32> {
    g.validate()?;
    Ok(match *g {
        GroupId::Psl { m, .. } | GroupId::Psu { m, .. } => m * (m + 1) / 2,
        GroupId::Psp { m, .. } | GroupId::OmegaOdd { m, .. } => m * m,
        GroupId::OPlus { m, .. } | GroupId::OMinus { m, .. } => m * (m - 1),
        GroupId::E6(_) | GroupId::TwistedE6(_) => 36,
        GroupId::E7(_) => 63,
        GroupId::E8(_) => 120,
        GroupId::F4(_) => 24,
        GroupId::G2(_) => 6,
        GroupId::G2Prime2 => 5,
        GroupId::TriD4(_) | GroupId::TwistedF4(_) => 12,
        GroupId::Suzuki(_) => 2,
        GroupId::Ree(_) => 3,
        GroupId::Alternating(_) | GroupId::Sporadic(_) => {
            return Err(Error::InvalidParameter(format!(
                "{g} has no q-part exponent"
            )))
        }
    })
}

/// Smallest degree `n` for which `q^e` can divide `n!`: Legendre gives
/// `v_p(n!) <= n/(p-1)`, so `e·k <= n/(p-1)`.
pub fn legendre_n_min(g: &GroupId) -> Result<u64> {
    let e = q_part_exponent(g)?;
    let q: PrimePower = g.q().expect("Lie type");
    Ok(u64::from(e) * u64::from(q.k()) * (q.p() - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::valuation;

    fn q(v: u64) -> PrimePower {
        PrimePower::from_value(v).unwrap()
    }

    fn order(s: &str) -> Natural {
        lie_order(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn classical_known_orders() {
        assert_eq!(order("PSL(2,4)"), Natural::from(60u32));
        assert_eq!(order("PSL(2,5)"), Natural::from(60u32));
        assert_eq!(order("PSL(2,7)"), Natural::from(168u32));
        assert_eq!(order("PSL(3,2)"), Natural::from(168u32));
        assert_eq!(order("PSL(2,8)"), Natural::from(504u32));
        assert_eq!(order("PSL(2,9)"), Natural::from(360u32));
        assert_eq!(order("PSL(3,4)"), Natural::from(20160u32));
        assert_eq!(order("PSL(4,2)"), Natural::from(20160u32));
        assert_eq!(order("PSL(3,3)"), Natural::from(5616u32));
        assert_eq!(order("PSU(3,3)"), Natural::from(6048u32));
        assert_eq!(order("PSU(4,2)"), Natural::from(25920u32));
        assert_eq!(order("Omega(5,3)"), Natural::from(25920u32));
        assert_eq!(order("PSp(6,2)"), Natural::from(1_451_520u32));
        assert_eq!(order("Omega(7,3)"), Natural::from(4_585_351_680u64));
        assert_eq!(order("O+(8,2)"), Natural::from(174_182_400u64));
        assert_eq!(order("O-(8,2)"), Natural::from(197_406_720u64));
        assert_eq!(order("PSU(5,2)"), Natural::from(13_685_760u64));
    }

    #[test]
    fn exceptional_known_orders() {
        assert_eq!(order("G2(3)"), Natural::from(4_245_696u64));
        assert_eq!(order("G2(4)"), Natural::from(251_596_800u64));
        assert_eq!(order("G2(2)'"), Natural::from(6048u32));
        assert_eq!(order("2B2(8)"), Natural::from(29120u32));
        assert_eq!(order("2B2(32)"), Natural::from(32_537_600u64));
        assert_eq!(order("3D4(2)"), Natural::from(211_341_312u64));
        assert_eq!(order("2F4(8)"), "264905352699586176614400".parse().unwrap());
        assert_eq!(order("2G2(27)"), Natural::from(10_073_444_472u64));
        assert_eq!(order("F4(2)"), Natural::from(3_311_126_603_366_400u64));
        assert_eq!(order("E6(2)"), "214841575522005575270400".parse().unwrap());
        assert_eq!(order("2E6(2)"), "76532479683774853939200".parse().unwrap());
        assert_eq!(
            order("E7(2)"),
            "7997476042075799759100487262680802918400".parse().unwrap()
        );
        assert_eq!(
            order("E8(2)"),
            "337804753143634806261388190614085595079991692242467651576160959909068800000"
                .parse()
                .unwrap()
        );
    }

    #[test]
    fn q_exponents() {
        assert_eq!(q_part_exponent(&GroupId::Psl { m: 3, q: q(5) }).unwrap(), 6);
        assert_eq!(q_part_exponent(&GroupId::E8(q(2))).unwrap(), 120);
        assert_eq!(
            q_part_exponent(&GroupId::OmegaOdd { m: 2, q: q(3) }).unwrap(),
            4
        );
        assert!(q_part_exponent(&GroupId::Alternating(6)).is_err());
        assert!(lie_order(&GroupId::Alternating(6)).is_err());
    }

    #[test]
    fn q_part_is_the_full_p_part() {
        let samples = [
            "PSL(2,4)",
            "PSL(2,9)",
            "PSL(5,3)",
            "PSU(4,2)",
            "PSU(6,4)",
            "PSp(8,3)",
            "Omega(7,5)",
            "O+(8,3)",
            "O-(10,2)",
            "E6(2)",
            "2E6(3)",
            "E7(3)",
            "E8(2)",
            "F4(3)",
            "G2(4)",
            "3D4(3)",
            "2B2(32)",
            "2F4(8)",
            "2G2(27)",
            "G2(2)'",
        ];
        for s in samples {
            let g: GroupId = s.parse().unwrap();
            let qq = g.q().unwrap();
            let v = valuation(&lie_order(&g).unwrap(), qq.p()).unwrap();
            assert_eq!(
                v,
                u64::from(qq.k()) * u64::from(q_part_exponent(&g).unwrap()),
                "{s}"
            );
        }
    }
}
