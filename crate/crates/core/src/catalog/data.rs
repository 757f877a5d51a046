//! The embedded group data file: sporadic orders and class numbers, and
//! character degree lists for the groups the sweeps need to discharge.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::alt_codegrees::{alt_codegree_set, alt_order, CodegreeSet};
use crate::error::{Error, Result};
use crate::exactnum::{divides, exact_div, Fraction, Natural};

use super::bounds::lie_class_number_bound;
use super::group::{GroupId, Sporadic};
use super::order::lie_order;

/// Environment variable overriding the embedded data file.
pub const DATA_ENV: &str = "CODLAB_DATA";

/// Label of the double cover record.
pub const DOUBLE_COVER_A9: &str = "2.A9";

const EMBEDDED: &str = include_str!("../../data/groups.json");
const FORMAT: &str = "codlab-groups";
const SUPPORTED_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
struct DataFile {
    format: String,
    version: u32,
    records: Vec<RawRecord>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawRecord {
    label: String,
    order: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    class_count: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    degrees: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    faithful_only: bool,
    provenance: String,
}

/// One group's entry in the data file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRecord {
    pub group_label: String,
    pub order: Natural,
    pub class_count: Option<u64>,
    /// Character degrees with multiplicity; empty when only the order and
    /// class number are recorded.
    pub degrees: Vec<Natural>,
    /// Only the faithful characters are listed (double covers).
    pub faithful_only: bool,
    pub provenance: String,
}

impl DegreeRecord {
    pub fn has_degrees(&self) -> bool {
        !self.degrees.is_empty()
    }

    fn sum_of_squares(&self) -> Natural {
        self.degrees.iter().map(|d| d * d).sum()
    }

    fn check(&self) -> Result<()> {
        let bad = |why: String| Err(Error::DataFile(format!("{}: {why}", self.group_label)));
        if self.order.is_zero() {
            return bad("zero order".into());
        }
        for d in &self.degrees {
            if d.is_zero() || !divides(d, &self.order)? {
                return bad(format!("degree {d} does not divide the order"));
            }
        }
        if self.has_degrees() {
            let sum = self.sum_of_squares();
            // Faithful characters of a double cover account for half the order.
            let expected = if self.faithful_only {
                &self.order / 2u32
            } else {
                self.order.clone()
            };
            if sum != expected {
                return bad(format!("sum of squared degrees {sum} != {expected}"));
            }
            if let Some(k) = self.class_count {
                if !self.faithful_only && k as usize != self.degrees.len() {
                    return bad(format!(
                        "class count {k} but {} degrees",
                        self.degrees.len()
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Immutable lookup over the group data file.
#[derive(Debug, Clone)]
pub struct Catalog {
    version: u32,
    records: BTreeMap<String, DegreeRecord>,
}

impl Catalog {
    /// The data file compiled into the library.
    pub fn embedded() -> Catalog {
        Self::from_json(EMBEDDED).expect("embedded group data is valid")
    }

    /// The file named by `CODLAB_DATA`, or the embedded data when unset.
    pub fn load() -> Result<Catalog> {
        match std::env::var_os(DATA_ENV) {
            Some(path) => Self::from_path(path),
            None => Ok(Self::embedded()),
        }
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Catalog> {
        let text = std::fs::read_to_string(path.as_ref())?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Catalog> {
        let file: DataFile = serde_json::from_str(text)?;
        if file.format != FORMAT {
            return Err(Error::DataFile(format!(
                "unexpected format tag {:?}",
                file.format
            )));
        }
        if file.version != SUPPORTED_VERSION {
            return Err(Error::DataFile(format!(
                "unsupported version {}",
                file.version
            )));
        }
        let mut records = BTreeMap::new();
        for raw in file.records {
            let parse = |s: &str| {
                s.parse::<Natural>().map_err(|_| {
                    Error::DataFile(format!("{}: {s:?} is not a decimal integer", raw.label))
                })
            };
            let record = DegreeRecord {
                group_label: raw.label.clone(),
                order: parse(&raw.order)?,
                class_count: raw.class_count,
                degrees: raw
                    .degrees
                    .iter()
                    .flatten()
                    .map(|d| parse(d))
                    .collect::<Result<_>>()?,
                faithful_only: raw.faithful_only,
                provenance: raw.provenance.clone(),
            };
            record.check()?;
            if records.insert(raw.label.clone(), record).is_some() {
                return Err(Error::DataFile(format!("duplicate record {}", raw.label)));
            }
        }
        Ok(Catalog {
            version: file.version,
            records,
        })
    }

    /// Serialises back to the data file format.
    pub fn to_json(&self) -> String {
        let file = DataFile {
            format: FORMAT.into(),
            version: self.version,
            records: self
                .records
                .values()
                .map(|r| RawRecord {
                    label: r.group_label.clone(),
                    order: r.order.to_string(),
                    class_count: r.class_count,
                    degrees: r
                        .has_degrees()
                        .then(|| r.degrees.iter().map(|d| d.to_string()).collect()),
                    faithful_only: r.faithful_only,
                    provenance: r.provenance.clone(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("serialisable")
    }

    pub fn version(&self) -> u32 {
        self.version
    }

    pub fn records(&self) -> impl Iterator<Item = &DegreeRecord> {
        self.records.values()
    }

    pub fn record(&self, label: &str) -> Option<&DegreeRecord> {
        self.records.get(label)
    }

    /// A copy with one record dropped.
    pub fn without(&self, label: &str) -> Catalog {
        let mut c = self.clone();
        c.records.remove(label);
        c
    }

    fn sporadic_record(&self, s: Sporadic) -> Result<&DegreeRecord> {
        self.record(s.label())
            .ok_or_else(|| Error::MissingData(s.label().into()))
    }

    /// `|g|`.
    pub fn group_order(&self, g: &GroupId) -> Result<Natural> {
        g.validate()?;
        match *g {
            GroupId::Alternating(n) => Ok(alt_order(n as usize)),
            GroupId::Sporadic(s) => Ok(self.sporadic_record(s)?.order.clone()),
            _ => lie_order(g),
        }
    }

    /// Upper bound on `k(g) = |Irr(g)|`: the exact class number for sporadic
    /// groups, the tabulated polynomial otherwise.
    pub fn class_number_bound(&self, g: &GroupId) -> Result<Fraction> {
        match *g {
            GroupId::Sporadic(s) => {
                let k = self
                    .sporadic_record(s)?
                    .class_count
                    .ok_or_else(|| Error::MissingData(format!("class number of {}", s.label())))?;
                Ok(Fraction::integer(Natural::from(k)))
            }
            GroupId::Alternating(_) => Err(Error::InvalidParameter(format!(
                "{g}: alternating groups are handled by the hook length formula"
            ))),
            _ => lie_class_number_bound(g),
        }
    }

    /// The degree record for `g`, if the data file carries its degrees.
    pub fn degree_record(&self, g: &GroupId) -> Option<&DegreeRecord> {
        self.record(&g.label())
            .filter(|r| r.has_degrees() && !r.faithful_only)
    }

    /// `cod(g)` for a simple group: `{1} ∪ {|g|/d}` over non-trivial degrees.
    /// Alternating groups go through the hook length formula.
    pub fn simple_codegree_set(&self, g: &GroupId) -> Result<CodegreeSet> {
        if let GroupId::Alternating(n) = *g {
            return alt_codegree_set(n as usize);
        }
        let rec = self
            .degree_record(g)
            .ok_or_else(|| Error::MissingData(g.label()))?;
        let order = self.group_order(g)?;
        if order != rec.order {
            return Err(Error::DataFile(format!(
                "{}: recorded order {} disagrees with the order formula {order}",
                rec.group_label, rec.order
            )));
        }
        CodegreeSet::from_simple_degrees(g.label(), order, &rec.degrees)
    }

    /// `cod(2.A9)`: characters with the centre in their kernel contribute
    /// `cod(A9)`, the faithful ones `|2.A9|/d`.
    pub fn twisted_codegree_set_2a9(&self) -> Result<CodegreeSet> {
        let rec = self
            .record(DOUBLE_COVER_A9)
            .filter(|r| r.has_degrees())
            .ok_or_else(|| Error::MissingData(DOUBLE_COVER_A9.into()))?;
        let base = alt_codegree_set(9)?;
        if rec.order != &base.order * 2u32 {
            return Err(Error::DataFile(format!(
                "{DOUBLE_COVER_A9}: order {} is not 2·|A9|",
                rec.order
            )));
        }
        let mut values: Vec<Natural> = base.values().to_vec();
        for d in &rec.degrees {
            values.push(exact_div(&rec.order, d)?);
        }
        CodegreeSet::new(DOUBLE_COVER_A9, rec.order.clone(), values)
    }

    /// Degrees of `A_n` from the data file, used as an independent check of
    /// the hook length computation.
    pub fn tabulated_alt_degrees(&self, n: u32) -> Option<&[Natural]> {
        self.record(&format!("A{n}"))
            .filter(|r| r.has_degrees())
            .map(|r| r.degrees.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::PrimePower;

    fn nat(x: u64) -> Natural {
        Natural::from(x)
    }

    fn nats(xs: &[u64]) -> Vec<Natural> {
        xs.iter().copied().map(nat).collect()
    }

    #[test]
    fn embedded_loads_and_validates() {
        let c = Catalog::embedded();
        assert_eq!(c.version(), 1);
        for s in Sporadic::ALL {
            let r = c.record(s.label()).unwrap();
            assert!(r.class_count.is_some(), "{}", s.label());
        }
    }

    #[test]
    fn orders() {
        let c = Catalog::embedded();
        assert_eq!(
            c.group_order(&GroupId::Alternating(10)).unwrap(),
            nat(1_814_400)
        );
        assert_eq!(
            c.group_order(&"PSL(2,4)".parse().unwrap()).unwrap(),
            nat(60)
        );
        assert_eq!(
            c.group_order(&GroupId::Sporadic(Sporadic::J2)).unwrap(),
            nat(604_800)
        );
        assert!(c.group_order(&GroupId::Alternating(4)).is_err());
    }

    #[test]
    fn bounds() {
        let c = Catalog::embedded();
        assert_eq!(
            c.class_number_bound(&GroupId::Sporadic(Sporadic::J2))
                .unwrap()
                .to_string(),
            "21"
        );
        assert_eq!(
            c.class_number_bound(&"PSL(2,5)".parse().unwrap())
                .unwrap()
                .to_string(),
            "12.5"
        );
        assert!(c.class_number_bound(&GroupId::Alternating(5)).is_err());
    }

    #[test]
    fn codegree_sets() {
        let c = Catalog::embedded();
        let psl27 = c.simple_codegree_set(&"PSL(2,7)".parse().unwrap()).unwrap();
        assert_eq!(psl27.values(), nats(&[1, 21, 24, 28, 56]).as_slice());
        let psl42 = c.simple_codegree_set(&"PSL(4,2)".parse().unwrap()).unwrap();
        assert_eq!(psl42.values(), alt_codegree_set(8).unwrap().values());
        let a8 = c.simple_codegree_set(&GroupId::Alternating(8)).unwrap();
        assert_eq!(a8.len(), 11);
        let missing = GroupId::Psl {
            m: 1,
            q: PrimePower::from_value(11).unwrap(),
        };
        assert!(matches!(
            c.simple_codegree_set(&missing),
            Err(Error::MissingData(_))
        ));
    }

    #[test]
    fn double_cover() {
        let c = Catalog::embedded();
        let cover = c.twisted_codegree_set_2a9().unwrap();
        let a9 = alt_codegree_set(9).unwrap();
        assert!(a9.is_subset_of(&cover));
        assert_ne!(a9.len(), cover.len());
        assert!(c.record(DOUBLE_COVER_A9).unwrap().degrees.contains(&nat(8)));
        let err = c
            .without(DOUBLE_COVER_A9)
            .twisted_codegree_set_2a9()
            .unwrap_err();
        assert!(matches!(err, Error::MissingData(ref l) if l == "2.A9"));
    }

    #[test]
    fn rejects_bad_files() {
        assert!(Catalog::from_json(r#"{"format":"x","version":1,"records":[]}"#).is_err());
        assert!(
            Catalog::from_json(r#"{"format":"codlab-groups","version":9,"records":[]}"#).is_err()
        );
        let bad_sum = r#"{"format":"codlab-groups","version":1,"records":[
            {"label":"A5","order":"60","degrees":["1","3","3","4","4"],"provenance":"x"}]}"#;
        assert!(matches!(
            Catalog::from_json(bad_sum),
            Err(Error::DataFile(_))
        ));
        let sci = r#"{"format":"codlab-groups","version":1,"records":[
            {"label":"A5","order":"6e1","provenance":"x"}]}"#;
        assert!(Catalog::from_json(sci).is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = Catalog::embedded();
        let again = Catalog::from_json(&c.to_json()).unwrap();
        assert_eq!(again.to_json(), c.to_json());
        assert_eq!(again.records().count(), c.records().count());
    }
}
