//! The Schur–Weyl branching rule in both directions.
//!
//! Left to right: `|μ t y⟩ ⊗ |k⟩` becomes a superposition of `|λ t* y*⟩`, one term per
//! transition `t → t*` that inserts `k`, with `y*` extending `y` by the box that
//! changed the frame. Right to left: `|λ t y⟩` splits into pairs `|μ t* y*⟩ ⊗ |k⟩`
//! where `y*` drops the last box of `y` and `t*` ranges over removals of every letter
//! that free that same box.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::amplitude::{insertions, removals, EdgeAmplitudes};
use crate::error::{TableauError, TransformError};
use crate::radical::Radical;
use crate::tableaux::{GrowthPath, GtPattern, Partition, WeylTableau};

/// A Schur–Weyl basis label `|λ t y⟩`, with `t` held as its Gelfand–Tsetlin pattern.
///
/// Ordered canonically: frame, then Weyl tableau, then Young tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchurWeylTriplet {
    pattern: GtPattern,
    young: GrowthPath,
}

impl SchurWeylTriplet {
    pub fn new(weyl: &WeylTableau, young: GrowthPath) -> Result<Self, TableauError> {
        Self::from_pattern(weyl.to_gt(), young)
    }

    pub fn from_pattern(pattern: GtPattern, young: GrowthPath) -> Result<Self, TableauError> {
        let (shape, path_shape) = (pattern.shape(), young.shape());
        if shape != path_shape {
            return Err(TableauError::ShapeMismatch { expected: shape.to_string(), found: path_shape.to_string() });
        }
        Ok(Self { pattern, young })
    }

    /// The level-0 triplet `|∅⟩`.
    pub fn empty(d: usize) -> Self {
        Self { pattern: GtPattern::zero(d), young: GrowthPath::empty() }
    }

    pub fn shape(&self) -> Partition {
        self.pattern.shape()
    }

    pub fn pattern(&self) -> &GtPattern {
        &self.pattern
    }

    pub fn weyl(&self) -> WeylTableau {
        WeylTableau::from_gt(&self.pattern)
    }

    pub fn young(&self) -> &GrowthPath {
        &self.young
    }

    pub fn d(&self) -> usize {
        self.pattern.d()
    }

    /// Number of boxes.
    pub fn level(&self) -> usize {
        self.young.len()
    }
}

impl Ord for SchurWeylTriplet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shape()
            .cmp(&other.shape())
            .then_with(|| self.pattern.cmp(&other.pattern))
            .then_with(|| self.young.cmp(&other.young))
    }
}

impl PartialOrd for SchurWeylTriplet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn accumulate<K: Ord>(terms: &mut BTreeMap<K, Radical>, key: K, amp: Radical) {
    if amp.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(amp);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += amp;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

fn norm_squared<'a>(amps: impl Iterator<Item = &'a Radical>) -> Radical {
    amps.map(Radical::square).sum()
}

/// A superposition of Schur–Weyl basis states of `(ℂ^d)^{⊗n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurWeylState {
    n: usize,
    d: usize,
    terms: BTreeMap<SchurWeylTriplet, Radical>,
}

impl SchurWeylState {
    pub fn new(n: usize, d: usize) -> Self {
        Self { n, d, terms: BTreeMap::new() }
    }

    pub fn basis(triplet: SchurWeylTriplet) -> Self {
        let mut s = Self::new(triplet.level(), triplet.d());
        s.terms.insert(triplet, Radical::one());
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Adds `amp · |triplet⟩`, merging with an existing term and dropping exact zeros.
    pub fn add(&mut self, triplet: SchurWeylTriplet, amp: Radical) -> Result<(), TransformError> {
        if triplet.level() != self.n || triplet.d() != self.d {
            return Err(TransformError::Inconsistent(format!(
                "triplet with n={}, d={} in a state with n={}, d={}",
                triplet.level(),
                triplet.d(),
                self.n,
                self.d
            )));
        }
        accumulate(&mut self.terms, triplet, amp);
        Ok(())
    }

    pub fn terms(&self) -> &BTreeMap<SchurWeylTriplet, Radical> {
        &self.terms
    }

    pub fn amplitude(&self, triplet: &SchurWeylTriplet) -> Radical {
        self.terms.get(triplet).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn norm_squared(&self) -> Radical {
        norm_squared(self.terms.values())
    }

    /// Exact inner product (amplitudes are real).
    pub fn inner(&self, other: &Self) -> Radical {
        self.terms.iter().filter_map(|(t, a)| other.terms.get(t).map(|b| a * b)).sum()
    }
}

/// One summand of a right-to-left branching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DownBranch {
    pub triplet: SchurWeylTriplet,
    /// Letter split off into the qudit register, `1..=d`.
    pub k: u8,
    pub amplitude: Radical,
}

/// Left-to-right rule for a basis input `|triplet⟩ ⊗ |k⟩`.
pub fn branch_up(
    triplet: &SchurWeylTriplet,
    k: u8,
    amps: &dyn EdgeAmplitudes,
) -> Result<SchurWeylState, TransformError> {
    let d = triplet.d();
    if k == 0 || k as usize > d {
        return Err(TransformError::BadLetter { letter: u32::from(k), d: d as u8 });
    }
    let mut out = SchurWeylState::new(triplet.level() + 1, d);
    for (upper, tau) in insertions(&triplet.pattern, k as usize) {
        let row = tau[tau.len() - 1] - 1;
        let young = triplet.young.extended(row).expect("transition keeps a frame");
        let amp = amps.edge_amplitude(&triplet.pattern, &upper)?;
        accumulate(&mut out.terms, SchurWeylTriplet { pattern: upper, young }, amp);
    }
    Ok(out)
}

/// Right-to-left rule for a basis input `|triplet⟩`, sorted by letter then triplet.
pub fn branch_down(triplet: &SchurWeylTriplet, amps: &dyn EdgeAmplitudes) -> Result<Vec<DownBranch>, TransformError> {
    let (young, row) = triplet.young.truncated().ok_or(TransformError::EmptyRegister)?;
    let d = triplet.d();
    let mut out = Vec::new();
    for k in 1..=d {
        let mut lowers: Vec<GtPattern> =
            removals(&triplet.pattern, k, Some(row + 1)).into_iter().map(|(p, _)| p).collect();
        lowers.sort();
        for lower in lowers {
            let amplitude = amps.edge_amplitude(&lower, &triplet.pattern)?;
            if amplitude.is_zero() {
                continue;
            }
            out.push(DownBranch {
                triplet: SchurWeylTriplet { pattern: lower, young: young.clone() },
                k: k as u8,
                amplitude,
            });
        }
    }
    Ok(out)
}

/// A superposition of `|μ t y⟩ ⊗ |w⟩`: a Schur–Weyl register of `split` qudits
/// followed by a computational register holding the remaining word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HybridState {
    d: usize,
    split: usize,
    suffix_len: usize,
    terms: BTreeMap<(SchurWeylTriplet, Vec<u8>), Radical>,
}

impl HybridState {
    pub fn new(d: usize, split: usize, suffix_len: usize) -> Self {
        Self { d, split, suffix_len, terms: BTreeMap::new() }
    }

    /// `|∅⟩ ⊗ |word⟩`.
    pub fn from_word(d: usize, word: &[u8]) -> Result<Self, TransformError> {
        if let Some(&bad) = word.iter().find(|&&l| l == 0 || l as usize > d) {
            return Err(TransformError::BadLetter { letter: u32::from(bad), d: d as u8 });
        }
        let mut s = Self::new(d, 0, word.len());
        s.terms.insert((SchurWeylTriplet::empty(d), word.to_vec()), Radical::one());
        Ok(s)
    }

    /// A Schur–Weyl state with an empty computational register.
    pub fn from_schur(state: &SchurWeylState) -> Self {
        let mut s = Self::new(state.d, state.n, 0);
        for (t, a) in &state.terms {
            s.terms.insert((t.clone(), Vec::new()), a.clone());
        }
        s
    }

    pub fn add(&mut self, triplet: SchurWeylTriplet, word: Vec<u8>, amp: Radical) -> Result<(), TransformError> {
        if triplet.level() != self.split || word.len() != self.suffix_len || triplet.d() != self.d {
            return Err(TransformError::Inconsistent("term does not match the register sizes".into()));
        }
        if let Some(&bad) = word.iter().find(|&&l| l == 0 || l as usize > self.d) {
            return Err(TransformError::BadLetter { letter: u32::from(bad), d: self.d as u8 });
        }
        accumulate(&mut self.terms, (triplet, word), amp);
        Ok(())
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn split(&self) -> usize {
        self.split
    }

    pub fn suffix_len(&self) -> usize {
        self.suffix_len
    }

    pub fn terms(&self) -> &BTreeMap<(SchurWeylTriplet, Vec<u8>), Radical> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn norm_squared(&self) -> Radical {
        norm_squared(self.terms.values())
    }

    /// Drops the computational register once it is empty.
    pub fn into_schur(self) -> Result<SchurWeylState, TransformError> {
        if self.suffix_len != 0 {
            return Err(TransformError::Inconsistent(format!("{} qudits not yet consumed", self.suffix_len)));
        }
        let terms = self.terms.into_iter().map(|((t, _), a)| (t, a)).collect();
        Ok(SchurWeylState { n: self.split, d: self.d, terms })
    }

    /// Drops the Schur–Weyl register once it is empty, leaving word amplitudes.
    pub fn into_words(self) -> Result<BTreeMap<Vec<u8>, Radical>, TransformError> {
        if self.split != 0 {
            return Err(TransformError::Inconsistent(format!(
                "{} qudits still in the Schur-Weyl register",
                self.split
            )));
        }
        Ok(self.terms.into_iter().map(|((_, w), a)| (w, a)).collect())
    }
}

/// Moves the first qudit of the computational register into the Schur–Weyl register.
pub fn branch_up_state(state: &HybridState, amps: &dyn EdgeAmplitudes) -> Result<HybridState, TransformError> {
    if state.suffix_len == 0 {
        return Err(TransformError::EmptySuffix);
    }
    let mut out = HybridState::new(state.d, state.split + 1, state.suffix_len - 1);
    for ((triplet, word), amp) in &state.terms {
        let (&k, rest) = word.split_first().expect("suffix is nonempty");
        for (t, a) in branch_up(triplet, k, amps)?.terms {
            accumulate(&mut out.terms, (t, rest.to_vec()), amp * &a);
        }
    }
    Ok(out)
}

/// Moves the last qudit of the Schur–Weyl register to the front of the computational register.
pub fn branch_down_state(state: &HybridState, amps: &dyn EdgeAmplitudes) -> Result<HybridState, TransformError> {
    if state.split == 0 {
        return Err(TransformError::EmptyRegister);
    }
    let mut out = HybridState::new(state.d, state.split - 1, state.suffix_len + 1);
    for ((triplet, word), amp) in &state.terms {
        for b in branch_down(triplet, amps)? {
            let mut w = Vec::with_capacity(word.len() + 1);
            w.push(b.k);
            w.extend_from_slice(word);
            accumulate(&mut out.terms, (b.triplet, w), amp * &b.amplitude);
        }
    }
    Ok(out)
}
