use std::fmt;

use crate::error::TableauError;
use crate::tableaux::Partition;

/// A path `∅ = λ₀ ⊂ λ₁ ⊂ … ⊂ λₙ` through the Young graph, one box per step.
///
/// Stored as the row (0-based) receiving box `i` at step `i`. This is the canonical
/// form of a standard Young tableau; [`StandardYoungTableau`] is the grid view.
/// Paths are ordered lexicographically by their row sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrowthPath {
    steps: Vec<u16>,
}

impl GrowthPath {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a path from the rows (0-based) receiving boxes 1, 2, ….
    pub fn from_rows(rows: &[usize]) -> Result<Self, TableauError> {
        let mut shape = Partition::empty();
        for (step, &row) in rows.iter().enumerate() {
            shape = shape.with_box_added(row).ok_or(TableauError::NotSingleBoxStep { step: step + 1 })?;
        }
        Ok(Self { steps: rows.iter().map(|&r| r as u16).collect() })
    }

    /// Builds a path from its chain of shapes, which must start at `∅`.
    pub fn from_shapes(shapes: &[Partition]) -> Result<Self, TableauError> {
        match shapes.first() {
            Some(first) if first.is_empty() => {}
            _ => return Err(TableauError::NotSingleBoxStep { step: 0 }),
        }
        let mut steps = Vec::with_capacity(shapes.len().saturating_sub(1));
        for (step, pair) in shapes.windows(2).enumerate() {
            let (a, b) = (&pair[0], &pair[1]);
            let row = (0..=a.num_rows())
                .find(|&r| a.with_box_added(r).as_ref() == Some(b))
                .ok_or(TableauError::NotSingleBoxStep { step: step + 1 })?;
            steps.push(row as u16);
        }
        Ok(Self { steps })
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Rows (0-based) receiving each box in turn.
    pub fn rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.steps.iter().map(|&r| r as usize)
    }

    /// Final shape.
    pub fn shape(&self) -> Partition {
        let mut counts: Vec<u32> = Vec::new();
        for r in self.rows() {
            if r == counts.len() {
                counts.push(0);
            }
            counts[r] += 1;
        }
        Partition::new(counts).expect("growth path keeps a partition")
    }

    /// `(λ₀, λ₁, …, λₙ)` with `λ₀ = ∅`.
    pub fn shapes(&self) -> Vec<Partition> {
        let mut out = vec![Partition::empty()];
        let mut cur = Partition::empty();
        for r in self.rows() {
            cur = cur.with_box_added(r).expect("valid path");
            out.push(cur.clone());
        }
        out
    }

    /// Appends a box in row `row0`, if that keeps a partition.
    pub fn extended(&self, row0: usize) -> Option<Self> {
        self.shape().with_box_added(row0)?;
        let mut steps = self.steps.clone();
        steps.push(row0 as u16);
        Some(Self { steps })
    }

    /// Drops the last box, returning the shorter path and the row the box sat in.
    pub fn truncated(&self) -> Option<(Self, usize)> {
        let (&last, rest) = self.steps.split_last()?;
        Some((Self { steps: rest.to_vec() }, last as usize))
    }

    /// Every growth path ending at `shape`, in canonical order.
    pub fn enumerate(shape: &Partition) -> Vec<GrowthPath> {
        fn go(target: &Partition, cur: &Partition, steps: &mut Vec<u16>, out: &mut Vec<GrowthPath>) {
            if cur == target {
                out.push(GrowthPath { steps: steps.clone() });
                return;
            }
            for r in 0..=cur.num_rows() {
                if cur.row(r) >= target.row(r) {
                    continue;
                }
                if let Some(next) = cur.with_box_added(r) {
                    steps.push(r as u16);
                    go(target, &next, steps, out);
                    steps.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(shape, &Partition::empty(), &mut Vec::new(), &mut out);
        out
    }
}

/// A Young frame filled bijectively with `1..=n`, strictly increasing along rows and
/// down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardYoungTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardYoungTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, TableauError> {
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n];
        for row in &rows {
            for &e in row {
                let slot = (e as usize).checked_sub(1).and_then(|i| seen.get_mut(i));
                match slot {
                    Some(s) if !*s => *s = true,
                    _ => return Err(TableauError::NotBijective { n }),
                }
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(TableauError::RowNotStrictlyIncreasing { row: i + 1 });
            }
        }
        for pair in rows.windows(2) {
            if let Some(col) = pair[1].iter().zip(&pair[0]).position(|(lo, hi)| lo <= hi) {
                return Err(TableauError::ColumnNotStrictlyIncreasing { col: col + 1 });
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect()).expect("validated")
    }

    /// The chain of shapes of the sub-tableaux holding `1..=i`.
    pub fn to_path(&self) -> GrowthPath {
        let mut row_of = vec![0u16; self.size()];
        for (r, row) in self.rows.iter().enumerate() {
            for &e in row {
                row_of[e as usize - 1] = r as u16;
            }
        }
        GrowthPath { steps: row_of }
    }

    pub fn from_path(path: &GrowthPath) -> Self {
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for (i, r) in path.rows().enumerate() {
            if r == rows.len() {
                rows.push(Vec::new());
            }
            rows[r].push(i as u32 + 1);
        }
        Self { rows }
    }
}

impl fmt::Display for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::write_rows(f, self.rows.iter().map(|r| r.iter().map(|&e| e as u64)))
    }
}

impl From<&GrowthPath> for StandardYoungTableau {
    fn from(path: &GrowthPath) -> Self {
        Self::from_path(path)
    }
}

/// All standard Young tableaux of a shape, ordered by growth path.
pub fn enumerate_syt(shape: &Partition) -> Vec<StandardYoungTableau> {
    GrowthPath::enumerate(shape).iter().map(StandardYoungTableau::from_path).collect()
}
