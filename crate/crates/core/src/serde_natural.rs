//! Serialise naturals as exact decimal strings.

use serde::ser::{SerializeSeq, SerializeTuple};
use serde::Serializer;

use crate::exactnum::Natural;

pub fn single<S: Serializer>(x: &Natural, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

pub fn option<S: Serializer>(x: &Option<Natural>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(x) => s.collect_str(x),
        None => s.serialize_none(),
    }
}

pub fn list<S: Serializer>(xs: &[Natural], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

pub fn pairs<S: Serializer>(xs: &[(usize, Natural)], s: S) -> Result<S::Ok, S::Error> {
    struct Pair<'a>(usize, &'a Natural);
    impl serde::Serialize for Pair<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            let mut t = s.serialize_tuple(2)?;
            t.serialize_element(&self.0)?;
            t.serialize_element(&self.1.to_string())?;
            t.end()
        }
    }
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for (n, x) in xs {
        seq.serialize_element(&Pair(*n, x))?;
    }
    seq.end()
}
