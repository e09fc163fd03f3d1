//! The full transform: encode words into the Schur–Weyl basis, decode back, and
//! assemble and verify the exact transform matrix.

use std::collections::{BTreeMap, HashMap};

use crate::amplitude::EdgeAmplitudes;
use crate::branching::{branch_down_state, branch_up_state, HybridState, SchurWeylState, SchurWeylTriplet};
use crate::error::TransformError;
use crate::exec::{Config, Execution};
use crate::graph::{CachedAmplitudes, SwyGraph};
use crate::radical::Radical;
use crate::tableaux::{enumerate_syt, enumerate_weyl, partitions, GrowthPath, GtPattern};

/// A superposition of computational basis words over `1..=d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComputationalState {
    n: usize,
    d: usize,
    terms: BTreeMap<Vec<u8>, Radical>,
}

impl ComputationalState {
    pub fn new(n: usize, d: usize) -> Self {
        Self { n, d, terms: BTreeMap::new() }
    }

    pub fn basis(word: &[u8], d: usize) -> Result<Self, TransformError> {
        let mut s = Self::new(word.len(), d);
        s.add(word.to_vec(), Radical::one())?;
        Ok(s)
    }

    pub fn add(&mut self, word: Vec<u8>, amp: Radical) -> Result<(), TransformError> {
        if word.len() != self.n {
            return Err(TransformError::Inconsistent(format!(
                "word of length {} in a state with n={}",
                word.len(),
                self.n
            )));
        }
        check_word(&word, self.d)?;
        if amp.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(word).or_default();
        *entry += amp;
        self.terms.retain(|_, a| !a.is_zero());
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u8>, Radical> {
        &self.terms
    }

    pub fn amplitude(&self, word: &[u8]) -> Radical {
        self.terms.get(word).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn norm_squared(&self) -> Radical {
        self.terms.values().map(Radical::square).sum()
    }
}

fn check_word(word: &[u8], d: usize) -> Result<(), TransformError> {
    match word.iter().find(|&&l| l == 0 || l as usize > d) {
        Some(&bad) => Err(TransformError::BadLetter { letter: u32::from(bad), d: d as u8 }),
        None => Ok(()),
    }
}

/// Schur–Weyl expansion of a computational basis word, consuming the leftmost qudit first.
pub fn encode(word: &[u8], d: usize, amps: &dyn EdgeAmplitudes) -> Result<SchurWeylState, TransformError> {
    let mut state = HybridState::from_word(d, word)?;
    for _ in 0..word.len() {
        state = branch_up_state(&state, amps)?;
    }
    state.into_schur()
}

/// Computational expansion of a Schur–Weyl state.
pub fn decode(state: &SchurWeylState, amps: &dyn EdgeAmplitudes) -> Result<ComputationalState, TransformError> {
    let mut hybrid = HybridState::from_schur(state);
    for _ in 0..state.n() {
        hybrid = branch_down_state(&hybrid, amps)?;
    }
    let terms = hybrid.into_words()?;
    Ok(ComputationalState { n: state.n(), d: state.d(), terms })
}

/// Word with index `c` in lexicographic order: base-`d` digits, most significant first.
pub fn word_of_index(mut c: usize, d: usize, n: usize) -> Vec<u8> {
    let mut word = vec![1u8; n];
    for slot in word.iter_mut().rev() {
        *slot = (c % d) as u8 + 1;
        c /= d;
    }
    word
}

pub fn index_of_word(word: &[u8], d: usize) -> usize {
    word.iter().fold(0, |acc, &l| acc * d + (l as usize - 1))
}

/// `d^n`, or `None` on overflow.
pub fn hilbert_dimension(d: usize, n: usize) -> Option<u128> {
    (d as u128).checked_pow(u32::try_from(n).ok()?)
}

/// All Schur–Weyl triplets of `(ℂ^d)^{⊗n}` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurBasisIndex {
    d: usize,
    n: usize,
    triplets: Vec<SchurWeylTriplet>,
    positions: HashMap<SchurWeylTriplet, usize>,
}

impl SchurBasisIndex {
    pub fn new(d: usize, n: usize) -> Result<Self, TransformError> {
        let mut triplets = Vec::new();
        for shape in partitions(n, d) {
            let paths = GrowthPath::enumerate(&shape);
            for pattern in GtPattern::enumerate(&shape, d)? {
                for young in &paths {
                    triplets.push(SchurWeylTriplet::from_pattern(pattern.clone(), young.clone())?);
                }
            }
        }
        debug_assert!(triplets.windows(2).all(|w| w[0] < w[1]));
        let positions = triplets.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        Ok(Self { d, n, triplets, positions })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.triplets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triplets.is_empty()
    }

    pub fn triplets(&self) -> &[SchurWeylTriplet] {
        &self.triplets
    }

    pub fn get(&self, row: usize) -> Option<&SchurWeylTriplet> {
        self.triplets.get(row)
    }

    pub fn position(&self, triplet: &SchurWeylTriplet) -> Option<usize> {
        self.positions.get(triplet).copied()
    }
}

/// Square sparse matrix with exact entries; no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Radical>,
}

impl ExactSparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::new(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Radical::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Radical {
        self.entries.get(&(row, col)).cloned().unwrap_or_default()
    }

    /// Sets an entry; a zero value removes it.
    pub fn set(&mut self, row: usize, col: usize, value: Radical) {
        assert!(row < self.rows && col < self.cols, "entry ({row}, {col}) out of bounds");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    /// Flips the sign of one entry.
    pub fn negate_entry(&mut self, row: usize, col: usize) {
        if let Some(v) = self.entries.get_mut(&(row, col)) {
            *v = -v.clone();
        }
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), Radical> {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn column(&self, col: usize) -> Vec<(usize, Radical)> {
        self.entries.iter().filter(|((_, c), _)| *c == col).map(|(&(r, _), v)| (r, v.clone())).collect()
    }
}

/// Exact transform matrix for `(d, n)`: entry `(r, c)` is the amplitude of triplet `r`
/// in the encoding of word `c`.
pub fn schur_matrix(
    d: usize,
    n: usize,
    config: &Config,
) -> Result<(SchurBasisIndex, ExactSparseMatrix), TransformError> {
    let size = hilbert_dimension(d, n).unwrap_or(u128::MAX);
    if size > config.size_bound as u128 {
        return Err(TransformError::SizeBound { size, bound: config.size_bound });
    }
    let size = size as usize;
    let graph = SwyGraph::build_with(d, n, config)?;
    let amps = CachedAmplitudes { graph: &graph, fallback: config.engine };
    let index = SchurBasisIndex::new(d, n)?;
    if index.len() != size {
        return Err(TransformError::Inconsistent(format!("{} basis triplets for d^n = {size}", index.len())));
    }
    let columns = config.execution.map_range(size, |c| -> Result<Vec<(usize, Radical)>, TransformError> {
        let state = encode(&word_of_index(c, d, n), d, &amps)?;
        state
            .terms()
            .iter()
            .map(|(t, a)| {
                let row = index
                    .position(t)
                    .ok_or_else(|| TransformError::Inconsistent(format!("triplet outside the basis in column {c}")))?;
                Ok((row, a.clone()))
            })
            .collect()
    });
    let mut m = ExactSparseMatrix::new(size, size);
    for (c, column) in columns.into_iter().enumerate() {
        for (r, a) in column? {
            m.set(r, c, a);
        }
    }
    Ok((index, m))
}

/// `true` iff `M·Mᵀ = I` exactly. Entries are real, so this is unitarity.
pub fn verify_unitary(m: &ExactSparseMatrix, execution: Execution) -> bool {
    if m.rows != m.cols {
        return false;
    }
    let n = m.rows;
    let mut by_row: Vec<Vec<(usize, &Radical)>> = vec![Vec::new(); n];
    let mut by_col: Vec<Vec<(usize, &Radical)>> = vec![Vec::new(); n];
    for (&(r, c), v) in &m.entries {
        by_row[r].push((c, v));
        by_col[c].push((r, v));
    }
    execution.all(n, |i| {
        let mut acc: BTreeMap<usize, Radical> = BTreeMap::new();
        for &(k, a) in &by_row[i] {
            for &(j, b) in &by_col[k] {
                *acc.entry(j).or_default() += a * b;
            }
        }
        acc.iter().all(|(&j, v)| if j == i { v.is_one() } else { v.is_zero() })
            && acc.get(&i).is_some_and(Radical::is_one)
    })
}

/// `Σ_λ dim W^λ · dim S^λ` over `λ ⊢ n` with at most `d` rows.
pub fn dimension_sum(d: usize, n: usize) -> Result<u128, TransformError> {
    let d8 = u8::try_from(d).map_err(|_| TransformError::Inconsistent(format!("d = {d} too large to enumerate")))?;
    let mut total = 0u128;
    for shape in partitions(n, d) {
        let weyl = enumerate_weyl(&shape, d8)?.len() as u128;
        let syt = enumerate_syt(&shape).len() as u128;
        total += weyl * syt;
    }
    Ok(total)
}

/// `true` iff the Schur–Weyl basis has exactly `d^n` elements.
pub fn dimension_check(d: usize, n: usize) -> bool {
    match (dimension_sum(d, n), hilbert_dimension(d, n)) {
        (Ok(sum), Some(size)) => sum == size,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amplitude::AmplitudeEngine;
    use crate::tableaux::{StandardYoungTableau, WeylTableau};

    const LOUCK: AmplitudeEngine = AmplitudeEngine::Louck;

    fn triplet(rows: Vec<Vec<u32>>, young: Vec<Vec<u32>>) -> SchurWeylTriplet {
        let t = WeylTableau::from_external(2, rows).unwrap();
        SchurWeylTriplet::new(&t, StandardYoungTableau::new(young).unwrap().to_path()).unwrap()
    }

    #[test]
    fn word_indexing() {
        assert_eq!(word_of_index(5, 2, 4), vec![1, 2, 1, 2]);
        assert_eq!(index_of_word(&[1, 2, 1, 2], 2), 5);
        for c in 0..27 {
            assert_eq!(index_of_word(&word_of_index(c, 3, 3), 3), c);
        }
        assert_eq!(word_of_index(0, 2, 0), Vec::<u8>::new());
    }

    #[test]
    fn encode_all_zeros() {
        for n in 0..=5 {
            let s = encode(&vec![1; n], 2, &LOUCK).unwrap();
            assert_eq!(s.len(), 1);
            let (t, a) = s.terms().iter().next().unwrap();
            assert!(a.is_one());
            let expected: Vec<u32> = if n == 0 { vec![] } else { vec![n as u32] };
            assert_eq!(t.shape().parts(), &expected[..]);
        }
        assert!(matches!(encode(&[1, 3], 2, &LOUCK), Err(TransformError::BadLetter { letter: 3, .. })));
    }

    #[test]
    fn decode_rectangle() {
        let s = SchurWeylState::basis(triplet(vec![vec![0, 0], vec![1, 1]], vec![vec![1, 3], vec![2, 4]]));
        let out = decode(&s, &LOUCK).unwrap();
        let half = Radical::signed_sqrt_u64(1, 1, 4);
        let expected = [([1, 2, 1, 2], 1), ([1, 2, 2, 1], -1), ([2, 1, 1, 2], -1), ([2, 1, 2, 1], 1)];
        assert_eq!(out.len(), 4);
        for (w, sign) in expected {
            let a = if sign > 0 { half.clone() } else { -half.clone() };
            assert_eq!(out.amplitude(&w), a);
        }
    }

    #[test]
    fn two_qubit_matrix() {
        let (index, m) = schur_matrix(2, 2, &Config::default()).unwrap();
        let h = Radical::signed_sqrt_u64(1, 1, 2);
        assert_eq!(index.len(), 4);
        assert_eq!(m.get(0, 0), Radical::one());
        assert_eq!((m.get(1, 1), m.get(1, 2)), (h.clone(), h.clone()));
        assert_eq!(m.get(2, 3), Radical::one());
        assert_eq!((m.get(3, 1), m.get(3, 2)), (h.clone(), -h));
        assert_eq!(m.nnz(), 6);
        assert!(verify_unitary(&m, Execution::Sequential));

        let (_, id) = schur_matrix(2, 1, &Config::default()).unwrap();
        assert_eq!(id, ExactSparseMatrix::identity(2));
    }

    #[test]
    fn unitarity_detects_sign_flip() {
        let (_, mut m) = schur_matrix(2, 2, &Config::default()).unwrap();
        m.negate_entry(1, 2);
        assert!(!verify_unitary(&m, Execution::Sequential));
        assert!(verify_unitary(&ExactSparseMatrix::identity(1), Execution::Parallel));
        assert!(!verify_unitary(&ExactSparseMatrix::new(1, 1), Execution::Parallel));
        assert!(!verify_unitary(&ExactSparseMatrix::new(1, 2), Execution::Parallel));
    }

    #[test]
    fn size_bound_enforced() {
        let cfg = Config::default().with_size_bound(8);
        assert!(schur_matrix(2, 3, &cfg).is_ok());
        assert_eq!(schur_matrix(2, 4, &cfg).unwrap_err(), TransformError::SizeBound { size: 16, bound: 8 });
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension_sum(2, 3).unwrap(), 8);
        assert!(dimension_check(5, 0));
        assert!(dimension_check(3, 4));
    }
}
