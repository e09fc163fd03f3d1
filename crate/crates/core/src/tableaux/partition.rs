use std::cmp::Ordering;
use std::fmt;

use crate::error::TableauError;

/// A 1-based box position: row 1 is the top row, column 1 the leftmost column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoxCoord {
    pub row: usize,
    pub col: usize,
}

impl BoxCoord {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Weakly decreasing nonnegative parts. Trailing zeros are stripped, so `(4,2,2,0)`
/// and `(4,2,2)` are the same value.
///
/// The `Ord` impl is the canonical basis order: smaller `n` first, then descending
/// lexicographic, so `(3) < (2,1) < (1,1,1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, TableauError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(TableauError::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `row0` (0-based), zero past the last row.
    pub fn row(&self, row0: usize) -> u32 {
        self.0.get(row0).copied().unwrap_or(0)
    }

    pub fn padded(&self, len: usize) -> Vec<u32> {
        let mut parts = self.0.clone();
        parts.resize(len.max(parts.len()), 0);
        parts
    }

    /// Boxes whose removal leaves a partition, top to bottom.
    pub fn removable_boxes(&self) -> Vec<BoxCoord> {
        (0..self.0.len())
            .filter(|&i| self.row(i) > self.row(i + 1))
            .map(|i| BoxCoord::new(i + 1, self.row(i) as usize))
            .collect()
    }

    /// Positions where a box can be added, top to bottom. The row just below the last
    /// nonzero part is always addable.
    pub fn addable_boxes(&self) -> Vec<BoxCoord> {
        (0..=self.0.len())
            .filter(|&i| i == 0 || self.row(i) < self.row(i - 1))
            .map(|i| BoxCoord::new(i + 1, self.row(i) as usize + 1))
            .collect()
    }

    pub fn can_add(&self, row0: usize) -> bool {
        row0 <= self.0.len() && (row0 == 0 || self.row(row0) < self.row(row0 - 1))
    }

    pub fn can_remove(&self, row0: usize) -> bool {
        row0 < self.0.len() && self.row(row0) > self.row(row0 + 1)
    }

    pub fn with_box_added(&self, row0: usize) -> Option<Partition> {
        if !self.can_add(row0) {
            return None;
        }
        let mut parts = self.0.clone();
        if row0 == parts.len() {
            parts.push(1);
        } else {
            parts[row0] += 1;
        }
        Some(Self(parts))
    }

    pub fn with_box_removed(&self, row0: usize) -> Option<Partition> {
        if !self.can_remove(row0) {
            return None;
        }
        let mut parts = self.0.clone();
        parts[row0] -= 1;
        if parts[row0] == 0 {
            parts.pop();
        }
        Some(Self(parts))
    }

    /// `true` if every row of `self` fits inside the matching row of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `n` with at most `max_parts` nonzero parts, in canonical
/// (descending lexicographic) order.
pub fn partitions(n: usize, max_parts: usize) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let n = n as u32;
    go(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}
