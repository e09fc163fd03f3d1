use std::fmt;

use crate::error::TableauError;
use crate::tableaux::{GtPattern, Partition};

/// Letter counts `(μ₁, …, μ_d)` of a Weyl tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContentVector(pub Vec<u32>);

impl ContentVector {
    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&c| c as usize).sum()
    }
}

/// Maps the internal alphabet `1..=d` to the one shown to users.
///
/// Qubits (`d = 2`) use `{0, 1}` so that tableau entries line up with computational
/// basis labels; every other `d` uses `1..=d` unchanged.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alphabet {
    d: u8,
}

impl Alphabet {
    pub fn new(d: u8) -> Self {
        Self { d }
    }

    pub fn d(&self) -> u8 {
        self.d
    }

    pub fn is_binary(&self) -> bool {
        self.d == 2
    }

    pub fn to_external(&self, letter: u8) -> u32 {
        if self.is_binary() {
            u32::from(letter) - 1
        } else {
            u32::from(letter)
        }
    }

    pub fn from_external(&self, value: u32) -> Result<u8, TableauError> {
        let internal = if self.is_binary() { value.checked_add(1) } else { Some(value) };
        match internal {
            Some(v) if v >= 1 && v <= u32::from(self.d) => Ok(v as u8),
            _ => Err(TableauError::NotInAlphabet { token: value.to_string(), d: self.d }),
        }
    }

    /// Renders a word: `0101` for qubits, `1,2,3` otherwise.
    pub fn format_word(&self, word: &[u8]) -> String {
        if self.is_binary() {
            word.iter().map(|&l| char::from(b'0' + l - 1)).collect()
        } else {
            word.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
        }
    }

    pub fn parse_word(&self, text: &str) -> Result<Vec<u8>, TableauError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Vec::new());
        }
        let tokens: Vec<&str> = if self.is_binary() && !text.contains(',') {
            text.split("").filter(|s| !s.is_empty()).collect()
        } else {
            text.split(',').map(str::trim).collect()
        };
        tokens
            .into_iter()
            .map(|tok| {
                let value: u32 =
                    tok.parse().map_err(|_| TableauError::NotInAlphabet { token: tok.to_string(), d: self.d })?;
                self.from_external(value)
            })
            .collect()
    }
}

/// A Young frame filled from `1..=d`, weakly increasing along rows and strictly
/// increasing down columns, with at most `d` rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylTableau {
    d: u8,
    rows: Vec<Vec<u8>>,
}

impl WeylTableau {
    pub fn new(d: u8, rows: Vec<Vec<u32>>) -> Result<Self, TableauError> {
        if d == 0 {
            return Err(TableauError::ZeroDimension);
        }
        let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
        Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        if rows.len() > d as usize {
            return Err(TableauError::TooManyRows { rows: rows.len(), d });
        }
        for &letter in rows.iter().flatten() {
            if letter == 0 || letter > u32::from(d) {
                return Err(TableauError::LetterOutOfRange { letter, d });
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(TableauError::RowNotWeaklyIncreasing { row: i + 1 });
            }
        }
        for pair in rows.windows(2) {
            if let Some(col) = pair[1].iter().zip(&pair[0]).position(|(lo, hi)| lo <= hi) {
                return Err(TableauError::ColumnNotStrictlyIncreasing { col: col + 1 });
            }
        }
        let rows = rows.into_iter().map(|r| r.into_iter().map(|l| l as u8).collect()).collect();
        Ok(Self { d, rows })
    }

    /// Builds a tableau from rows written in the external alphabet.
    pub fn from_external(d: u8, rows: Vec<Vec<u32>>) -> Result<Self, TableauError> {
        let alphabet = Alphabet::new(d);
        let rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(|v| alphabet.from_external(v).map(u32::from)).collect())
            .collect::<Result<Vec<Vec<u32>>, _>>()?;
        Self::new(d, rows)
    }

    pub fn empty(d: u8) -> Self {
        Self { d, rows: Vec::new() }
    }

    pub fn d(&self) -> u8 {
        self.d
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn external_rows(&self) -> Vec<Vec<u32>> {
        let alphabet = Alphabet::new(self.d);
        self.rows.iter().map(|r| r.iter().map(|&l| alphabet.to_external(l)).collect()).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect()).expect("validated")
    }

    pub fn content(&self) -> ContentVector {
        let mut counts = vec![0u32; self.d as usize];
        for &l in self.rows.iter().flatten() {
            counts[l as usize - 1] += 1;
        }
        ContentVector(counts)
    }

    /// `m_{i,j}` = number of entries `≤ j` in row `i`.
    pub fn to_gt(&self) -> GtPattern {
        let d = self.d as usize;
        let levels = (1..=d)
            .map(|j| {
                (0..j)
                    .map(|i| self.rows.get(i).map_or(0, |row| row.iter().filter(|&&l| l as usize <= j).count() as u32))
                    .collect()
            })
            .collect();
        GtPattern::from_levels_unchecked(levels)
    }

    /// Row `i` receives `m_{i,j} - m_{i,j-1}` copies of `j`, for `j = i..=d`.
    pub fn from_gt(pattern: &GtPattern) -> Self {
        let d = pattern.d();
        let mut rows: Vec<Vec<u8>> = Vec::new();
        for i in 1..=d {
            let mut row = Vec::new();
            for j in i..=d {
                let below = if j > i { pattern.entry(i, j - 1) } else { 0 };
                let count = pattern.entry(i, j) - below;
                row.extend(std::iter::repeat_n(j as u8, count as usize));
            }
            if row.is_empty() {
                break;
            }
            rows.push(row);
        }
        Self { d: d as u8, rows }
    }

    /// Every standard Weyl tableau of `shape` over `1..=d`, in canonical order.
    pub fn enumerate(shape: &Partition, d: u8) -> Result<Vec<WeylTableau>, TableauError> {
        Ok(GtPattern::enumerate(shape, d as usize)?.iter().map(Self::from_gt).collect())
    }
}

impl fmt::Display for WeylTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let alphabet = Alphabet::new(self.d);
        super::write_rows(f, self.rows.iter().map(|r| r.iter().map(move |&l| u64::from(alphabet.to_external(l)))))
    }
}
