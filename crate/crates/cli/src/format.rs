//! JSON shapes for words, factorizations, move sequences and corpora.

use serde::{Deserialize, Serialize};

use quasibraid::{
    random_corpus, Band, BraidError, BraidWord, CorpusParams, MoveSequence, MoveStep, QPFactorization,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub strands: usize,
    pub letters: Vec<i32>,
}

impl WordJson {
    pub fn from_word(w: &BraidWord) -> Self {
        WordJson { strands: w.strands(), letters: w.letters().to_vec() }
    }

    pub fn to_word(&self) -> Result<BraidWord, BraidError> {
        BraidWord::new(self.strands, self.letters.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandJson {
    pub conjugator: Vec<i32>,
    pub generator: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationJson {
    pub strands: usize,
    pub bands: Vec<BandJson>,
}

impl FactorizationJson {
    pub fn from_factorization(q: &QPFactorization) -> Self {
        FactorizationJson {
            strands: q.strands(),
            bands: q
                .bands()
                .iter()
                .map(|b| BandJson { conjugator: b.conjugator.letters().to_vec(), generator: b.generator })
                .collect(),
        }
    }

    pub fn to_factorization(&self) -> Result<QPFactorization, BraidError> {
        let bands = self
            .bands
            .iter()
            .map(|b| Band::new(BraidWord::new(self.strands, b.conjugator.clone())?, b.generator))
            .collect::<Result<Vec<_>, _>>()?;
        QPFactorization::new(self.strands, bands)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepJson {
    Conjugate {
        by: Vec<i32>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        into: Option<Vec<i32>>,
    },
    Stabilize { sign: i32 },
    Destabilize { sign: i32 },
    Exchange,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveSequenceJson {
    pub initial: WordJson,
    pub steps: Vec<StepJson>,
}

impl MoveSequenceJson {
    pub fn from_sequence(seq: &MoveSequence) -> Self {
        let steps = seq
            .steps
            .iter()
            .map(|s| match s {
                MoveStep::Conjugate { by, into } => StepJson::Conjugate {
                    by: by.letters().to_vec(),
                    into: into.as_ref().map(|w| w.letters().to_vec()),
                },
                MoveStep::Stabilize { sign } => StepJson::Stabilize { sign: *sign },
                MoveStep::Destabilize { sign } => StepJson::Destabilize { sign: *sign },
                MoveStep::Exchange => StepJson::Exchange,
            })
            .collect();
        MoveSequenceJson { initial: WordJson::from_word(&seq.initial), steps }
    }

    /// Words inside steps take the strand count current at that step.
    pub fn to_sequence(&self) -> Result<MoveSequence, BraidError> {
        let initial = self.initial.to_word()?;
        let mut n = initial.strands();
        let mut steps = Vec::with_capacity(self.steps.len());
        for s in &self.steps {
            steps.push(match s {
                StepJson::Conjugate { by, into } => MoveStep::Conjugate {
                    by: BraidWord::new(n, by.clone())?,
                    into: into.as_ref().map(|l| BraidWord::new(n, l.clone())).transpose()?,
                },
                StepJson::Stabilize { sign } => {
                    n += 1;
                    MoveStep::Stabilize { sign: *sign }
                }
                StepJson::Destabilize { sign } => {
                    n = n.checked_sub(1).filter(|&m| m > 0).ok_or(BraidError::ZeroStrands)?;
                    MoveStep::Destabilize { sign: *sign }
                }
                StepJson::Exchange => MoveStep::Exchange,
            });
        }
        Ok(MoveSequence { initial, steps })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusMetadata {
    pub seed: u64,
    pub count: usize,
    pub min_strands: usize,
    pub max_strands: usize,
    pub max_bands: usize,
    pub max_conjugator_length: usize,
}

#[cfg(test)]
impl CorpusMetadata {
    pub fn params(&self) -> CorpusParams {
        CorpusParams {
            count: self.count,
            min_strands: self.min_strands,
            max_strands: self.max_strands,
            max_bands: self.max_bands,
            max_conjugator_length: self.max_conjugator_length,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusFile {
    pub metadata: CorpusMetadata,
    pub items: Vec<FactorizationJson>,
}

impl CorpusFile {
    pub fn generate(params: &CorpusParams, seed: u64) -> Result<Self, BraidError> {
        let items = random_corpus(params, seed)?;
        Ok(CorpusFile {
            metadata: CorpusMetadata {
                seed,
                count: params.count,
                min_strands: params.min_strands,
                max_strands: params.max_strands,
                max_bands: params.max_bands,
                max_conjugator_length: params.max_conjugator_length,
            },
            items: items.iter().map(FactorizationJson::from_factorization).collect(),
        })
    }

    /// Validates every item.
    pub fn factorizations(&self) -> Result<Vec<QPFactorization>, String> {
        self.items
            .iter()
            .enumerate()
            .map(|(i, f)| f.to_factorization().map_err(|e| format!("corpus item {i}: {e}")))
            .collect()
    }
}
