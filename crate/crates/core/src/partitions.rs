//! Integer partitions and Young diagram combinatorics: conjugation, hook
//! lengths and corner removal.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::Natural;

/// A partition of `n`: a weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

/// A cell of a Young diagram, 1-based `(row, col)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        let n = parts.iter().sum();
        Ok(Self { parts, n })
    }

    fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        let n = parts.iter().sum();
        Self { parts, n }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self::from_parts_unchecked(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_parts_unchecked(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.row <= self.parts.len() && c.col <= self.parts[c.row - 1]
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Self::from_parts_unchecked(parts)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    /// Arm + leg + 1 for the cell `c`.
    pub fn hook_length(&self, c: Cell) -> Result<usize> {
        if !self.contains_cell(c) {
            return Err(Error::BadCell {
                row: c.row,
                col: c.col,
                reason: "outside the diagram",
            });
        }
        let arm = self.parts[c.row - 1] - c.col;
        let leg = self.parts[c.row..]
            .iter()
            .take_while(|&&p| p >= c.col)
            .count();
        Ok(arm + leg + 1)
    }

    /// Iterates over every hook length, row by row.
    pub fn hook_lengths(&self) -> impl Iterator<Item = usize> + '_ {
        let conj = self.conjugate();
        self.parts.iter().enumerate().flat_map(move |(i, &len)| {
            let conj = conj.parts.clone();
            (0..len).map(move |j| (len - j - 1) + (conj[j] - i - 1) + 1)
        })
    }

    /// `H_λ`, the product of all hook lengths.
    pub fn hook_product(&self) -> Natural {
        let mut acc = Natural::from(1u32);
        // Batch the small factors into a u64 before touching the big integer.
        let mut chunk: u64 = 1;
        for h in self.hook_lengths() {
            let h = h as u64;
            match chunk.checked_mul(h) {
                Some(c) => chunk = c,
                None => {
                    acc *= chunk;
                    chunk = h;
                }
            }
        }
        acc * chunk
    }

    /// Removable cells, top row first.
    pub fn corners(&self) -> Vec<Cell> {
        let rows = self.parts.len();
        (0..rows)
            .filter(|&i| i + 1 == rows || self.parts[i + 1] < self.parts[i])
            .map(|i| Cell::new(i + 1, self.parts[i]))
            .collect()
    }

    /// Deletes a corner cell, giving a partition of `n - 1`. Removing the
    /// only cell of `(1)` is rejected since the empty partition is not
    /// representable.
    pub fn remove_corner(&self, c: Cell) -> Result<Partition> {
        if !self.corners().contains(&c) {
            return Err(Error::BadCell {
                row: c.row,
                col: c.col,
                reason: "not a removable corner",
            });
        }
        if self.n == 1 {
            return Err(Error::InvalidPartition(
                "cannot remove the last cell".into(),
            ));
        }
        let mut parts = self.parts.clone();
        parts[c.row - 1] -= 1;
        if parts[c.row - 1] == 0 {
            parts.pop();
        }
        Ok(Self::from_parts_unchecked(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,2]`, `(3,2)` or a bare `3,2`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
            .unwrap_or(t);
        let parts = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidPartition(format!("cannot parse {s:?}")))?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting at `(n)`
/// and ending at `(1^n)`. Yields nothing for `n = 0`.
pub fn enumerate_partitions(n: usize) -> PartitionIter {
    PartitionIter {
        next: (n > 0).then(|| vec![n]),
    }
}

pub struct PartitionIter {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: decrement the last part larger than one, then refill the
        // tail greedily with parts no larger than the decremented value.
        if let Some(pos) = current.iter().rposition(|&p| p > 1) {
            let mut succ = current[..pos].to_vec();
            let v = current[pos] - 1;
            let mut rest = current[pos + 1..].iter().sum::<usize>() + 1;
            succ.push(v);
            while rest > 0 {
                let take = rest.min(v);
                succ.push(take);
                rest -= take;
            }
            self.next = Some(succ);
        }
        Some(Partition::from_parts_unchecked(current))
    }
}
