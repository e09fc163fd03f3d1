//! JSON dumps of states and matrices. Tableau entries use the external alphabet;
//! every list is in canonical order, so output is byte-deterministic.

use serde::{Deserialize, Serialize};

use crate::branching::{SchurWeylState, SchurWeylTriplet};
use crate::error::{TableauError, TransformError};
use crate::radical::Radical;
use crate::tableaux::{Alphabet, GrowthPath, Partition, WeylTableau};
use crate::transform::{ComputationalState, ExactSparseMatrix, SchurBasisIndex};

/// A triplet as shape, Weyl rows and the chain of Young shapes from `[]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripletJson {
    pub shape: Vec<u32>,
    pub weyl_rows: Vec<Vec<u32>>,
    pub young_path: Vec<Vec<u32>>,
}

impl TripletJson {
    pub fn from_triplet(t: &SchurWeylTriplet) -> Self {
        Self {
            shape: t.shape().parts().to_vec(),
            weyl_rows: t.weyl().external_rows(),
            young_path: t.young().shapes().iter().map(|s| s.parts().to_vec()).collect(),
        }
    }

    pub fn to_triplet(&self, d: usize) -> Result<SchurWeylTriplet, TransformError> {
        let d8 = u8::try_from(d).map_err(|_| TransformError::Inconsistent(format!("d = {d} too large")))?;
        let shape = Partition::new(self.shape.clone())?;
        let weyl = WeylTableau::from_external(d8, self.weyl_rows.clone())?;
        if weyl.shape() != shape {
            return Err(
                TableauError::ShapeMismatch { expected: shape.to_string(), found: weyl.shape().to_string() }.into()
            );
        }
        let shapes = self.young_path.iter().map(|p| Partition::new(p.clone())).collect::<Result<Vec<_>, _>>()?;
        let young = GrowthPath::from_shapes(&shapes)?;
        Ok(SchurWeylTriplet::new(&weyl, young)?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateTermJson {
    #[serde(flatten)]
    pub triplet: TripletJson,
    pub amplitude: Radical,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateJson {
    pub d: usize,
    pub n: usize,
    pub terms: Vec<StateTermJson>,
}

impl StateJson {
    pub fn from_state(state: &SchurWeylState) -> Self {
        Self {
            d: state.d(),
            n: state.n(),
            terms: state
                .terms()
                .iter()
                .map(|(t, a)| StateTermJson { triplet: TripletJson::from_triplet(t), amplitude: a.clone() })
                .collect(),
        }
    }

    /// Validates every triplet; repeated triplets are summed.
    pub fn to_state(&self) -> Result<SchurWeylState, TransformError> {
        if self.d == 0 {
            return Err(TableauError::ZeroDimension.into());
        }
        let mut state = SchurWeylState::new(self.n, self.d);
        for term in &self.terms {
            state.add(term.triplet.to_triplet(self.d)?, term.amplitude.clone())?;
        }
        Ok(state)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WordTermJson {
    pub word: String,
    pub amplitude: Radical,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComputationalJson {
    pub d: usize,
    pub n: usize,
    pub terms: Vec<WordTermJson>,
}

impl ComputationalJson {
    pub fn from_state(state: &ComputationalState) -> Self {
        let alphabet = Alphabet::new(state.d() as u8);
        Self {
            d: state.d(),
            n: state.n(),
            terms: state
                .terms()
                .iter()
                .map(|(w, a)| WordTermJson { word: alphabet.format_word(w), amplitude: a.clone() })
                .collect(),
        }
    }

    pub fn to_state(&self) -> Result<ComputationalState, TransformError> {
        let alphabet = Alphabet::new(u8::try_from(self.d).map_err(|_| TableauError::ZeroDimension)?);
        let mut state = ComputationalState::new(self.n, self.d);
        for term in &self.terms {
            state.add(alphabet.parse_word(&term.word)?, term.amplitude.clone())?;
        }
        Ok(state)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixEntryJson {
    pub row: usize,
    pub col: usize,
    pub amplitude: Radical,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub d: usize,
    pub n: usize,
    pub order: String,
    pub basis: Vec<TripletJson>,
    pub entries: Vec<MatrixEntryJson>,
}

pub const TRIPLET_MAJOR: &str = "triplet-major";

impl MatrixJson {
    pub fn from_matrix(index: &SchurBasisIndex, m: &ExactSparseMatrix) -> Self {
        Self {
            d: index.d(),
            n: index.n(),
            order: TRIPLET_MAJOR.to_string(),
            basis: index.triplets().iter().map(TripletJson::from_triplet).collect(),
            entries: m
                .entries()
                .iter()
                .map(|(&(row, col), a)| MatrixEntryJson { row, col, amplitude: a.clone() })
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<(SchurBasisIndex, ExactSparseMatrix), TransformError> {
        if self.order != TRIPLET_MAJOR {
            return Err(TransformError::Inconsistent(format!("unknown order {:?}", self.order)));
        }
        let index = SchurBasisIndex::new(self.d, self.n)?;
        if index.len() != self.basis.len() {
            return Err(TransformError::Inconsistent(format!(
                "basis has {} triplets, expected {}",
                self.basis.len(),
                index.len()
            )));
        }
        for (row, t) in self.basis.iter().enumerate() {
            if index.position(&t.to_triplet(self.d)?) != Some(row) {
                return Err(TransformError::Inconsistent(format!("basis triplet {row} out of canonical order")));
            }
        }
        let mut m = ExactSparseMatrix::new(index.len(), index.len());
        for e in &self.entries {
            if e.row >= index.len() || e.col >= index.len() {
                return Err(TransformError::Inconsistent(format!("entry ({}, {}) out of bounds", e.row, e.col)));
            }
            m.set(e.row, e.col, e.amplitude.clone());
        }
        Ok((index, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::amplitude::AmplitudeEngine;
    use crate::exec::Config;
    use crate::transform::{decode, encode, schur_matrix};

    #[test]
    fn state_round_trip() {
        let state = encode(&[1, 2, 1, 2], 2, &AmplitudeEngine::Louck).unwrap();
        let json = StateJson::from_state(&state);
        let text = serde_json::to_string(&json).unwrap();
        let back: StateJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_state().unwrap(), state);
        assert_eq!(json.terms[0].triplet.young_path[0], Vec::<u32>::new());

        let words = decode(&state, &AmplitudeEngine::Louck).unwrap();
        let cj = ComputationalJson::from_state(&words);
        assert_eq!(cj.terms[0].word, "0101");
        assert_eq!(cj.to_state().unwrap(), words);
    }

    #[test]
    fn invalid_triplets_name_the_invariant() {
        let bad =
            TripletJson { shape: vec![2], weyl_rows: vec![vec![1, 0]], young_path: vec![vec![], vec![1], vec![2]] };
        let err = bad.to_triplet(2).unwrap_err().to_string();
        assert!(err.contains("invariant: weakly increasing rows"), "{err}");
        let mismatch =
            TripletJson { shape: vec![2], weyl_rows: vec![vec![0, 1]], young_path: vec![vec![], vec![1], vec![1, 1]] };
        assert!(mismatch.to_triplet(2).is_err());
    }

    #[test]
    fn matrix_round_trip() {
        let (index, m) = schur_matrix(2, 3, &Config::default()).unwrap();
        let json = MatrixJson::from_matrix(&index, &m);
        let text = serde_json::to_string(&json).unwrap();
        let back: MatrixJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_matrix().unwrap().1, m);
        assert_eq!(serde_json::to_string(&back).unwrap(), text);
    }
}
