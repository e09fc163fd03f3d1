use std::cmp::Ordering;
use std::fmt;

use crate::error::TableauError;
use crate::tableaux::Partition;

/// A Gelfand–Tsetlin pattern with `d` levels.
///
/// Level `j` holds `m_{1,j} ≥ … ≥ m_{j,j}` and adjacent levels interlace:
/// `m_{i,j} ≥ m_{i,j-1} ≥ m_{i+1,j}`. The top level `[m]_d` is the zero-padded shape.
///
/// `Ord` is the canonical basis order: the entries read top level to bottom level,
/// left to right, compared in descending lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GtPattern {
    // levels[j - 1] is level j
    levels: Vec<Vec<u32>>,
}

/// Index of the first violated interlacing condition between `upper` (level j) and
/// `lower` (level j-1), 1-based in `i`.
pub(crate) fn interlacing_violation(upper: &[u32], lower: &[u32]) -> Option<usize> {
    (0..lower.len()).find(|&i| !(upper[i] >= lower[i] && lower[i] >= upper[i + 1])).map(|i| i + 1)
}

impl GtPattern {
    /// Builds a pattern from its levels listed top (level d) to bottom (level 1),
    /// matching the way patterns are usually written: `[[2, 1], [2]]`.
    pub fn new(top_down: Vec<Vec<u32>>) -> Result<Self, TableauError> {
        let mut levels = top_down;
        levels.reverse();
        Self::from_levels(levels)
    }

    /// Builds a pattern from levels listed bottom (level 1) to top (level d).
    pub fn from_levels(levels: Vec<Vec<u32>>) -> Result<Self, TableauError> {
        if levels.is_empty() {
            return Err(TableauError::ZeroDimension);
        }
        for (idx, level) in levels.iter().enumerate() {
            if level.len() != idx + 1 {
                return Err(TableauError::LevelLength { level: idx + 1 });
            }
        }
        for j in 2..=levels.len() {
            if let Some(i) = interlacing_violation(&levels[j - 1], &levels[j - 2]) {
                return Err(TableauError::InBetweenness { i, j: j - 1 });
            }
        }
        Ok(Self { levels })
    }

    pub(crate) fn from_levels_unchecked(levels: Vec<Vec<u32>>) -> Self {
        debug_assert!(Self::from_levels(levels.clone()).is_ok());
        Self { levels }
    }

    /// The all-zero pattern with `d` levels (the empty tableau).
    pub fn zero(d: usize) -> Self {
        Self { levels: (1..=d).map(|j| vec![0; j]).collect() }
    }

    pub fn d(&self) -> usize {
        self.levels.len()
    }

    /// Level `j` (1-based), `[m]_j`.
    pub fn level(&self, j: usize) -> &[u32] {
        &self.levels[j - 1]
    }

    pub(crate) fn levels(&self) -> &[Vec<u32>] {
        &self.levels
    }

    /// `m_{i,j}` with 1-based indices.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.levels[j - 1][i - 1]
    }

    /// Levels listed top to bottom.
    pub fn top_down(&self) -> Vec<Vec<u32>> {
        self.levels.iter().rev().cloned().collect()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.levels[self.d() - 1].clone()).expect("top level interlaces")
    }

    /// Number of boxes, `Σ m_{i,d}`.
    pub fn size(&self) -> usize {
        self.levels[self.d() - 1].iter().map(|&m| m as usize).sum()
    }

    /// Every pattern with the given top row, in canonical order.
    pub fn enumerate(shape: &Partition, d: usize) -> Result<Vec<GtPattern>, TableauError> {
        if d == 0 {
            return Err(TableauError::ZeroDimension);
        }
        if shape.num_rows() > d {
            return Err(TableauError::TooManyRows { rows: shape.num_rows(), d: d as u8 });
        }
        fn fill(levels: &mut Vec<Vec<u32>>, out: &mut Vec<GtPattern>) {
            // levels are stored top-down while filling
            let upper = levels.last().expect("top level present").clone();
            if upper.len() == 1 {
                let mut bottom_up = levels.clone();
                bottom_up.reverse();
                out.push(GtPattern { levels: bottom_up });
                return;
            }
            let mut next = vec![0u32; upper.len() - 1];
            fn choose(
                i: usize,
                upper: &[u32],
                next: &mut Vec<u32>,
                levels: &mut Vec<Vec<u32>>,
                out: &mut Vec<GtPattern>,
            ) {
                if i == next.len() {
                    levels.push(next.clone());
                    fill(levels, out);
                    levels.pop();
                    return;
                }
                for v in (upper[i + 1]..=upper[i]).rev() {
                    next[i] = v;
                    choose(i + 1, upper, next, levels, out);
                }
            }
            choose(0, &upper, &mut next, levels, out);
        }
        let mut out = Vec::new();
        fill(&mut vec![shape.padded(d)], &mut out);
        Ok(out)
    }

    /// Centered multi-line rendering, top level first.
    pub fn render(&self) -> String {
        let width = self.levels.iter().flatten().map(|m| m.to_string().len()).max().unwrap_or(1);
        let field = width.max(2);
        let d = self.d();
        let mut lines = Vec::with_capacity(d);
        for j in (1..=d).rev() {
            let mut line = String::new();
            for (i, m) in self.level(j).iter().enumerate() {
                let start = ((d - j) + 2 * i) * field;
                while line.len() < start {
                    line.push(' ');
                }
                line.push_str(&format!("{m:>w$}", w = field));
            }
            lines.push(line.trim_end().to_string());
        }
        lines.join("\n")
    }
}

impl Ord for GtPattern {
    fn cmp(&self, other: &Self) -> Ordering {
        let mine = self.levels.iter().rev().flatten();
        let theirs = other.levels.iter().rev().flatten();
        theirs.cmp(mine).then_with(|| self.d().cmp(&other.d()))
    }
}

impl PartialOrd for GtPattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// One-line form `(2 1; 2)`: levels top to bottom separated by `;`.
impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, j) in (1..=self.d()).rev().enumerate() {
            if idx > 0 {
                f.write_str("; ")?;
            }
            let parts: Vec<String> = self.level(j).iter().map(u32::to_string).collect();
            f.write_str(&parts.join(" "))?;
        }
        f.write_str(")")
    }
}
