use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::PrimePower;

/// The 26 sporadic groups and the Tits group, in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sporadic {
    M11,
    M12,
    J1,
    M22,
    J2,
    M23,
    HS,
    J3,
    M24,
    McL,
    He,
    Ru,
    Suz,
    ON,
    Co3,
    Co2,
    Fi22,
    HN,
    Ly,
    Th,
    Fi23,
    Co1,
    J4,
    Fi24,
    B,
    M,
    Tits,
}

impl Sporadic {
    pub const ALL: [Sporadic; 27] = [
        Sporadic::M11,
        Sporadic::M12,
        Sporadic::J1,
        Sporadic::M22,
        Sporadic::J2,
        Sporadic::M23,
        Sporadic::HS,
        Sporadic::J3,
        Sporadic::M24,
        Sporadic::McL,
        Sporadic::He,
        Sporadic::Ru,
        Sporadic::Suz,
        Sporadic::ON,
        Sporadic::Co3,
        Sporadic::Co2,
        Sporadic::Fi22,
        Sporadic::HN,
        Sporadic::Ly,
        Sporadic::Th,
        Sporadic::Fi23,
        Sporadic::Co1,
        Sporadic::J4,
        Sporadic::Fi24,
        Sporadic::B,
        Sporadic::M,
        Sporadic::Tits,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Sporadic::M11 => "M11",
            Sporadic::M12 => "M12",
            Sporadic::J1 => "J1",
            Sporadic::M22 => "M22",
            Sporadic::J2 => "J2",
            Sporadic::M23 => "M23",
            Sporadic::HS => "HS",
            Sporadic::J3 => "J3",
            Sporadic::M24 => "M24",
            Sporadic::McL => "McL",
            Sporadic::He => "He",
            Sporadic::Ru => "Ru",
            Sporadic::Suz => "Suz",
            Sporadic::ON => "O'N",
            Sporadic::Co3 => "Co3",
            Sporadic::Co2 => "Co2",
            Sporadic::Fi22 => "Fi22",
            Sporadic::HN => "HN",
            Sporadic::Ly => "Ly",
            Sporadic::Th => "Th",
            Sporadic::Fi23 => "Fi23",
            Sporadic::Co1 => "Co1",
            Sporadic::J4 => "J4",
            Sporadic::Fi24 => "Fi24'",
            Sporadic::B => "B",
            Sporadic::M => "M",
            Sporadic::Tits => "2F4(2)'",
        }
    }

    pub fn from_label(s: &str) -> Option<Sporadic> {
        match s {
            "Tits" | "T" => return Some(Sporadic::Tits),
            "ON" => return Some(Sporadic::ON),
            "Fi24" => return Some(Sporadic::Fi24),
            _ => {}
        }
        Sporadic::ALL.into_iter().find(|g| g.label() == s)
    }
}

/// The sixteen infinite families of simple groups of Lie type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Psl,
    OmegaOdd,
    Psp,
    OPlus,
    Psu,
    OMinus,
    E6,
    E7,
    E8,
    F4,
    G2,
    TwistedE6,
    TriD4,
    Suzuki,
    TwistedF4,
    Ree,
}

/// How a family is parametrised in the sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// Rank `m >= m_min` and an arbitrary prime power `q = p^k`.
    Classical { m_min: u32 },
    /// Only `q = p^k`.
    Exceptional,
    /// `q = p^(2a+1)` with `a >= 1` and `p` fixed; `a` plays the role of `m`.
    OddPower { p: u64 },
}

impl Family {
    pub const CLASSICAL: [Family; 6] = [
        Family::Psl,
        Family::OmegaOdd,
        Family::Psp,
        Family::OPlus,
        Family::Psu,
        Family::OMinus,
    ];

    pub const EXCEPTIONAL: [Family; 10] = [
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
        Family::TwistedE6,
        Family::TriD4,
        Family::Suzuki,
        Family::TwistedF4,
        Family::Ree,
    ];

    pub fn all() -> impl Iterator<Item = Family> {
        Self::CLASSICAL.into_iter().chain(Self::EXCEPTIONAL)
    }

    pub fn tag(self) -> &'static str {
        match self {
            Family::Psl => "psl",
            Family::OmegaOdd => "omega",
            Family::Psp => "psp",
            Family::OPlus => "oplus",
            Family::Psu => "psu",
            Family::OMinus => "ominus",
            Family::E6 => "e6",
            Family::E7 => "e7",
            Family::E8 => "e8",
            Family::F4 => "f4",
            Family::G2 => "g2",
            Family::TwistedE6 => "2e6",
            Family::TriD4 => "3d4",
            Family::Suzuki => "2b2",
            Family::TwistedF4 => "2f4",
            Family::Ree => "2g2",
        }
    }

    pub fn from_tag(s: &str) -> Option<Family> {
        let lower = s.to_ascii_lowercase();
        let alias = match lower.as_str() {
            "sl" | "l" => "psl",
            "u" | "su" => "psu",
            "sp" | "s" | "symplectic" => "psp",
            "o+" | "omega+" => "oplus",
            "o-" | "omega-" => "ominus",
            "o" | "omegaodd" | "b" => "omega",
            "suzuki" | "sz" => "2b2",
            "ree" => "2g2",
            "tits-family" | "ree2f4" => "2f4",
            other => other,
        };
        Family::all().find(|f| f.tag() == alias)
    }

    pub fn shape(self) -> Shape {
        match self {
            Family::Psl => Shape::Classical { m_min: 1 },
            Family::Psu | Family::OmegaOdd => Shape::Classical { m_min: 2 },
            Family::Psp => Shape::Classical { m_min: 3 },
            Family::OPlus | Family::OMinus => Shape::Classical { m_min: 4 },
            Family::Suzuki | Family::TwistedF4 => Shape::OddPower { p: 2 },
            Family::Ree => Shape::OddPower { p: 3 },
            _ => Shape::Exceptional,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self.shape(), Shape::Classical { .. })
    }

    /// The simple group of this family at rank `m` (ignored by exceptional
    /// families; the twisted odd-power families ignore it too and read `q`)
    /// and field size `q`. `G2(2)` is replaced by its derived subgroup.
    pub fn member(self, m: u32, q: PrimePower) -> Result<GroupId> {
        let g = match self {
            Family::Psl => GroupId::Psl { m, q },
            Family::Psu => GroupId::Psu { m, q },
            Family::Psp => GroupId::Psp { m, q },
            Family::OmegaOdd => GroupId::OmegaOdd { m, q },
            Family::OPlus => GroupId::OPlus { m, q },
            Family::OMinus => GroupId::OMinus { m, q },
            Family::E6 => GroupId::E6(q),
            Family::E7 => GroupId::E7(q),
            Family::E8 => GroupId::E8(q),
            Family::F4 => GroupId::F4(q),
            Family::G2 if q.is(2) => GroupId::G2Prime2,
            Family::G2 => GroupId::G2(q),
            Family::TwistedE6 => GroupId::TwistedE6(q),
            Family::TriD4 => GroupId::TriD4(q),
            Family::Suzuki => GroupId::Suzuki(q),
            Family::TwistedF4 => GroupId::TwistedF4(q),
            Family::Ree => GroupId::Ree(q),
        };
        g.validate()?;
        Ok(g)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A finite simple group from the classification.
///
/// Variants are plain data; [`GroupId::validate`] enforces the parameter
/// ranges on which each family is simple, and every constructor and catalog
/// query runs it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    Alternating(u32),
    Sporadic(Sporadic),
    /// `PSL(m+1, q)`
    Psl {
        m: u32,
        q: PrimePower,
    },
    /// `PSU(m+1, q)`
    Psu {
        m: u32,
        q: PrimePower,
    },
    /// `PSp(2m, q)`
    Psp {
        m: u32,
        q: PrimePower,
    },
    /// `Ω(2m+1, q)`, `q` odd
    OmegaOdd {
        m: u32,
        q: PrimePower,
    },
    /// `PΩ⁺(2m, q)`
    OPlus {
        m: u32,
        q: PrimePower,
    },
    /// `PΩ⁻(2m, q)`
    OMinus {
        m: u32,
        q: PrimePower,
    },
    E6(PrimePower),
    E7(PrimePower),
    E8(PrimePower),
    F4(PrimePower),
    G2(PrimePower),
    TwistedE6(PrimePower),
    TriD4(PrimePower),
    Suzuki(PrimePower),
    TwistedF4(PrimePower),
    Ree(PrimePower),
    /// `G2(2)' ≅ PSU(3,3)`, standing in for the non-simple `G2(2)`.
    G2Prime2,
}

fn odd_power_of(q: PrimePower, p: u64) -> bool {
    q.p() == p && q.k() % 2 == 1 && q.k() >= 3
}

impl GroupId {
    pub fn alternating(n: u32) -> Result<Self> {
        let g = GroupId::Alternating(n);
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidParameter(format!("{self}: {why}")));
        match *self {
            GroupId::Alternating(n) if n < 5 => bad("alternating degree must be >= 5"),
            GroupId::Psl { m, q } if m < 1 || (m == 1 && q.k() == 1 && q.p() < 4) => {
                bad("needs m >= 1, and q >= 4 when m = 1")
            }
            GroupId::Psu { m, q } if m < 2 || (m == 2 && q.is(2)) => {
                bad("needs m >= 2, excluding PSU(3,2)")
            }
            GroupId::Psp { m, .. } if m < 3 => bad("needs m >= 3"),
            GroupId::OmegaOdd { m, q } if m < 2 || q.p() == 2 => bad("needs m >= 2 and q odd"),
            GroupId::OPlus { m, .. } | GroupId::OMinus { m, .. } if m < 4 => bad("needs m >= 4"),
            GroupId::G2(q) if q.is(2) => bad("G2(2) is not simple; use G2(2)'"),
            GroupId::Suzuki(q) | GroupId::TwistedF4(q) if !odd_power_of(q, 2) => {
                bad("needs q = 2^(2a+1), a >= 1")
            }
            GroupId::Ree(q) if !odd_power_of(q, 3) => bad("needs q = 3^(2a+1), a >= 1"),
            _ => Ok(()),
        }
    }

    pub fn family(&self) -> Option<Family> {
        Some(match self {
            GroupId::Alternating(_) | GroupId::Sporadic(_) => return None,
            GroupId::Psl { .. } => Family::Psl,
            GroupId::Psu { .. } => Family::Psu,
            GroupId::Psp { .. } => Family::Psp,
            GroupId::OmegaOdd { .. } => Family::OmegaOdd,
            GroupId::OPlus { .. } => Family::OPlus,
            GroupId::OMinus { .. } => Family::OMinus,
            GroupId::E6(_) => Family::E6,
            GroupId::E7(_) => Family::E7,
            GroupId::E8(_) => Family::E8,
            GroupId::F4(_) => Family::F4,
            GroupId::G2(_) | GroupId::G2Prime2 => Family::G2,
            GroupId::TwistedE6(_) => Family::TwistedE6,
            GroupId::TriD4(_) => Family::TriD4,
            GroupId::Suzuki(_) => Family::Suzuki,
            GroupId::TwistedF4(_) => Family::TwistedF4,
            GroupId::Ree(_) => Family::Ree,
        })
    }

    /// Field size of a Lie-type group.
    pub fn q(&self) -> Option<PrimePower> {
        match *self {
            GroupId::Psl { q, .. }
            | GroupId::Psu { q, .. }
            | GroupId::Psp { q, .. }
            | GroupId::OmegaOdd { q, .. }
            | GroupId::OPlus { q, .. }
            | GroupId::OMinus { q, .. }
            | GroupId::E6(q)
            | GroupId::E7(q)
            | GroupId::E8(q)
            | GroupId::F4(q)
            | GroupId::G2(q)
            | GroupId::TwistedE6(q)
            | GroupId::TriD4(q)
            | GroupId::Suzuki(q)
            | GroupId::TwistedF4(q)
            | GroupId::Ree(q) => Some(q),
            GroupId::G2Prime2 => Some(PrimePower::new(2, 1).expect("2 is prime")),
            GroupId::Alternating(_) | GroupId::Sporadic(_) => None,
        }
    }

    /// Rank parameter `m` of a classical group, or `a` in `q = p^(2a+1)` for
    /// the twisted odd-power families.
    pub fn m(&self) -> Option<u32> {
        match *self {
            GroupId::Psl { m, .. }
            | GroupId::Psu { m, .. }
            | GroupId::Psp { m, .. }
            | GroupId::OmegaOdd { m, .. }
            | GroupId::OPlus { m, .. }
            | GroupId::OMinus { m, .. } => Some(m),
            GroupId::Suzuki(q) | GroupId::TwistedF4(q) | GroupId::Ree(q) => Some((q.k() - 1) / 2),
            _ => None,
        }
    }

    pub fn is_lie_type(&self) -> bool {
        self.family().is_some()
    }

    /// Catalog label, e.g. `PSL(2,7)`, `O+(8,2)`, `2B2(8)`, `J2`.
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupId::Alternating(n) => write!(f, "A{n}"),
            GroupId::Sporadic(s) => f.write_str(s.label()),
            GroupId::Psl { m, q } => write!(f, "PSL({},{q})", m + 1),
            GroupId::Psu { m, q } => write!(f, "PSU({},{q})", m + 1),
            GroupId::Psp { m, q } => write!(f, "PSp({},{q})", 2 * m),
            GroupId::OmegaOdd { m, q } => write!(f, "Omega({},{q})", 2 * m + 1),
            GroupId::OPlus { m, q } => write!(f, "O+({},{q})", 2 * m),
            GroupId::OMinus { m, q } => write!(f, "O-({},{q})", 2 * m),
            GroupId::E6(q) => write!(f, "E6({q})"),
            GroupId::E7(q) => write!(f, "E7({q})"),
            GroupId::E8(q) => write!(f, "E8({q})"),
            GroupId::F4(q) => write!(f, "F4({q})"),
            GroupId::G2(q) => write!(f, "G2({q})"),
            GroupId::TwistedE6(q) => write!(f, "2E6({q})"),
            GroupId::TriD4(q) => write!(f, "3D4({q})"),
            GroupId::Suzuki(q) => write!(f, "2B2({q})"),
            GroupId::TwistedF4(q) => write!(f, "2F4({q})"),
            GroupId::Ree(q) => write!(f, "2G2({q})"),
            GroupId::G2Prime2 => f.write_str("G2(2)'"),
        }
    }
}

impl Serialize for GroupId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn parse_args(s: &str) -> Option<Vec<u64>> {
    s.split(',').map(|x| x.trim().parse().ok()).collect()
}

impl FromStr for GroupId {
    type Err = Error;

    /// Parses the labels produced by `Display`, plus the common ATLAS
    /// spellings `L2(7)`, `U3(3)`, `S6(2)`, `O5(3)`, `Sz(8)`.
    fn from_str(s: &str) -> Result<Self> {
        let unknown = || Error::UnknownGroup(s.to_string());
        let t = s.trim();
        if t == "G2(2)'" {
            return Ok(GroupId::G2Prime2);
        }
        if let Some(sp) = Sporadic::from_label(t) {
            return Ok(GroupId::Sporadic(sp));
        }
        if let Some(n) = t.strip_prefix('A').and_then(|r| r.parse::<u32>().ok()) {
            return GroupId::alternating(n);
        }
        let (head, rest) = t.split_once('(').ok_or_else(unknown)?;
        let args = parse_args(rest.strip_suffix(')').ok_or_else(unknown)?).ok_or_else(unknown)?;
        let pp = |q: u64| PrimePower::from_value(q);
        let g = match (head, args.as_slice()) {
            ("PSL" | "L", [d, q]) if *d >= 2 => GroupId::Psl {
                m: (*d - 1) as u32,
                q: pp(*q)?,
            },
            ("L2", [q]) => GroupId::Psl { m: 1, q: pp(*q)? },
            ("L3", [q]) => GroupId::Psl { m: 2, q: pp(*q)? },
            ("L4", [q]) => GroupId::Psl { m: 3, q: pp(*q)? },
            ("PSU" | "U", [d, q]) if *d >= 2 => GroupId::Psu {
                m: (*d - 1) as u32,
                q: pp(*q)?,
            },
            ("U3", [q]) => GroupId::Psu { m: 2, q: pp(*q)? },
            ("U4", [q]) => GroupId::Psu { m: 3, q: pp(*q)? },
            ("PSp" | "S", [d, q]) if d % 2 == 0 => GroupId::Psp {
                m: (*d / 2) as u32,
                q: pp(*q)?,
            },
            ("S6", [q]) => GroupId::Psp { m: 3, q: pp(*q)? },
            ("S8", [q]) => GroupId::Psp { m: 4, q: pp(*q)? },
            ("Omega" | "O", [d, q]) if d % 2 == 1 => GroupId::OmegaOdd {
                m: (*d / 2) as u32,
                q: pp(*q)?,
            },
            ("O5", [q]) => GroupId::OmegaOdd { m: 2, q: pp(*q)? },
            ("O7", [q]) => GroupId::OmegaOdd { m: 3, q: pp(*q)? },
            ("O+", [d, q]) if d % 2 == 0 => GroupId::OPlus {
                m: (*d / 2) as u32,
                q: pp(*q)?,
            },
            ("O-", [d, q]) if d % 2 == 0 => GroupId::OMinus {
                m: (*d / 2) as u32,
                q: pp(*q)?,
            },
            ("E6", [q]) => GroupId::E6(pp(*q)?),
            ("E7", [q]) => GroupId::E7(pp(*q)?),
            ("E8", [q]) => GroupId::E8(pp(*q)?),
            ("F4", [q]) => GroupId::F4(pp(*q)?),
            ("G2", [q]) => GroupId::G2(pp(*q)?),
            ("2E6", [q]) => GroupId::TwistedE6(pp(*q)?),
            ("3D4", [q]) => GroupId::TriD4(pp(*q)?),
            ("2B2" | "Sz", [q]) => GroupId::Suzuki(pp(*q)?),
            ("2F4", [q]) => GroupId::TwistedF4(pp(*q)?),
            ("2G2" | "R", [q]) => GroupId::Ree(pp(*q)?),
            _ => return Err(unknown()),
        };
        g.validate()?;
        Ok(g)
    }
}
