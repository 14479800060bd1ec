//! Quasipositive band factorizations and a bounded search for them.
//!
//! A band is a conjugate `ω σⱼ ω⁻¹` of a positive generator. A braid is
//! quasipositive when it is a product of bands. Writhe is a homomorphism and
//! every band has writhe one, so a factorization of `β` has exactly
//! `writhe(β)` bands.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::BraidError;
use crate::garside::{to_normal_form, CanonicalForm};
use crate::moves::conjugate;
use crate::search::SearchBudget;
use crate::word::{check_same_strands, check_strands, free_reduce_letters, BraidWord};

/// One factor `ω σⱼ ω⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Band {
    pub conjugator: BraidWord,
    pub generator: usize,
}

impl Band {
    pub fn new(conjugator: BraidWord, generator: usize) -> Result<Self, BraidError> {
        let n = conjugator.strands();
        if generator == 0 || generator >= n {
            return Err(BraidError::GeneratorOutOfRange { generator: generator as i32, strands: n });
        }
        Ok(Band { conjugator, generator })
    }

    /// `ω σⱼ ω⁻¹` as a plain concatenation.
    pub fn letters(&self) -> Vec<i32> {
        let w = self.conjugator.letters();
        let mut out = Vec::with_capacity(2 * w.len() + 1);
        out.extend_from_slice(w);
        out.push(self.generator as i32);
        out.extend(w.iter().rev().map(|&l| -l));
        out
    }
}

/// A product of bands on a fixed number of strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPFactorization {
    strands: usize,
    bands: Vec<Band>,
}

impl QPFactorization {
    pub fn new(strands: usize, bands: Vec<Band>) -> Result<Self, BraidError> {
        check_strands(strands)?;
        for b in &bands {
            if b.conjugator.strands() != strands {
                return Err(BraidError::StrandMismatch { left: strands, right: b.conjugator.strands() });
            }
            if b.generator == 0 || b.generator >= strands {
                return Err(BraidError::GeneratorOutOfRange { generator: b.generator as i32, strands });
            }
        }
        let q = QPFactorization { strands, bands };
        if expand(&q).writhe() != q.bands.len() as i64 {
            return Err(BraidError::Invalid("expansion writhe differs from band count"));
        }
        Ok(q)
    }

    /// The factorization with no bands.
    pub fn trivial(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// One band `σᵢ` per letter of a positive word.
    pub fn from_positive_word(word: &BraidWord) -> Option<Self> {
        if !word.is_positive() {
            return None;
        }
        let n = word.strands();
        let empty = BraidWord::from_parts(n, Vec::new());
        let bands = word.letters().iter().map(|&l| Band { conjugator: empty.clone(), generator: l as usize }).collect();
        Some(QPFactorization { strands: n, bands })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    pub fn band_count(&self) -> usize {
        self.bands.len()
    }
}

/// The product of the bands, freely reduced.
pub fn expand(q: &QPFactorization) -> BraidWord {
    let letters: Vec<i32> = q.bands.iter().flat_map(|b| b.letters()).collect();
    BraidWord::from_parts(q.strands, free_reduce_letters(&letters))
}

/// Self-linking number of the closure, `band count − strands`.
pub fn qp_self_linking(q: &QPFactorization) -> i64 {
    q.bands.len() as i64 - q.strands as i64
}

/// Conjugates every band by `c`, so the expansion becomes `c β c⁻¹`.
pub fn qp_conjugate(q: &QPFactorization, c: &BraidWord) -> Result<QPFactorization, BraidError> {
    if c.strands() != q.strands {
        return Err(BraidError::StrandMismatch { left: q.strands, right: c.strands() });
    }
    let bands = q
        .bands
        .iter()
        .map(|b| {
            let mut l = c.letters().to_vec();
            l.extend_from_slice(b.conjugator.letters());
            Band { conjugator: BraidWord::from_parts(q.strands, l), generator: b.generator }
        })
        .collect();
    Ok(QPFactorization { strands: q.strands, bands })
}

/// Adds a strand and the band `σₙ`, matching a positive stabilization.
pub fn qp_stabilize_positive(q: &QPFactorization) -> Result<QPFactorization, BraidError> {
    let n = q.strands + 1;
    check_strands(n)?;
    let mut bands: Vec<Band> = q
        .bands
        .iter()
        .map(|b| Band {
            conjugator: BraidWord::from_parts(n, b.conjugator.letters().to_vec()),
            generator: b.generator,
        })
        .collect();
    bands.push(Band { conjugator: BraidWord::from_parts(n, Vec::new()), generator: q.strands });
    Ok(QPFactorization { strands: n, bands })
}

/// Seeded random factorization: each band gets a conjugator whose length is
/// uniform in `0..=conjugator_length` with uniform letters, and a uniform
/// generator.
pub fn random_qp(
    strands: usize,
    bands: usize,
    conjugator_length: usize,
    seed: u64,
) -> Result<QPFactorization, BraidError> {
    check_strands(strands)?;
    if strands == 1 && bands > 0 {
        return Err(BraidError::Invalid("a one-strand braid has no bands"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = strands as i32 - 1;
    let mut out = Vec::with_capacity(bands);
    for _ in 0..bands {
        let len = rng.gen_range(0..=conjugator_length);
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..=g);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        let generator = rng.gen_range(1..=g) as usize;
        out.push(Band { conjugator: BraidWord::from_parts(strands, letters), generator });
    }
    Ok(QPFactorization { strands, bands: out })
}

/// Parameters for a seeded batch of random factorizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusParams {
    pub count: usize,
    pub min_strands: usize,
    pub max_strands: usize,
    pub max_bands: usize,
    pub max_conjugator_length: usize,
}

impl Default for CorpusParams {
    fn default() -> Self {
        CorpusParams { count: 200, min_strands: 2, max_strands: 4, max_bands: 5, max_conjugator_length: 2 }
    }
}

/// A deterministic batch: strand count, band count and conjugator length are
/// drawn uniformly per item, then the item comes from [`random_qp`] with a
/// derived seed.
pub fn random_corpus(params: &CorpusParams, seed: u64) -> Result<Vec<QPFactorization>, BraidError> {
    if params.min_strands == 0 || params.min_strands > params.max_strands {
        return Err(BraidError::Invalid("strand range is empty"));
    }
    check_strands(params.max_strands)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..params.count)
        .map(|_| {
            let n = rng.gen_range(params.min_strands..=params.max_strands);
            let k = if n == 1 { 0 } else { rng.gen_range(0..=params.max_bands) };
            let l = rng.gen_range(0..=params.max_conjugator_length);
            random_qp(n, k, l, rng.gen())
        })
        .collect()
}

/// Whether a search looks for `β` itself or for any conjugate of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QpMode {
    Exact,
    /// Conjugate `β` by words up to the budget's conjugator length first.
    Conjugacy,
}

/// A factorization whose expansion equals `conjugate(β, witness)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QpCertificate {
    pub factorization: QPFactorization,
    pub witness: BraidWord,
}

impl QpCertificate {
    /// Re-checks the certificate against `beta`.
    pub fn check(&self, beta: &BraidWord) -> Result<bool, BraidError> {
        check_same_strands(beta, &self.witness)?;
        let target = conjugate(beta, &self.witness)?;
        Ok(to_normal_form(&expand(&self.factorization)) == to_normal_form(&target))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotQpReason {
    NegativeWrithe(i64),
    /// Writhe zero forces the empty factorization, but the braid is not trivial.
    ZeroWritheNontrivial,
    /// Every factorization with `bands` bands and conjugators of length at
    /// most `conjugator_length` was ruled out.
    NoFactorizationWithinBound { bands: usize, conjugator_length: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QpCertificateResult {
    Certificate(QpCertificate),
    NotQuasipositive(NotQpReason),
    Inconclusive,
}

impl QpCertificateResult {
    pub fn certificate(&self) -> Option<&QpCertificate> {
        match self {
            QpCertificateResult::Certificate(c) => Some(c),
            _ => None,
        }
    }
}

/// Searches for an exact factorization of `beta` with default bookkeeping.
pub fn qp_search(beta: &BraidWord, budget: &SearchBudget) -> QpCertificateResult {
    QpSearcher::new(*budget).search(beta, QpMode::Exact)
}

/// Searches for a factorization of some conjugate of `beta`.
pub fn qp_search_conjugate(beta: &BraidWord, budget: &SearchBudget) -> QpCertificateResult {
    QpSearcher::new(*budget).search(beta, QpMode::Conjugacy)
}

/// Bounded meet-in-the-middle search for band factorizations.
///
/// Bands `ω σⱼ ω⁻¹` with `|ω|` up to the conjugator bound are listed in
/// length-lexicographic order of `(ω, j)`, keeping the first band of each
/// braid. The last `⌈k/2⌉` bands are tabulated by normal form; the first
/// `⌊k/2⌋` are enumerated and the remainder looked up. Each product or
/// lookup counts as one node. Tables are cached between calls, but their
/// full size is charged on every call so results do not depend on history.
#[derive(Debug, Clone)]
pub struct QpSearcher {
    budget: SearchBudget,
    nodes: usize,
    bands: BTreeMap<(usize, usize), Vec<Band>>,
    tables: BTreeMap<(usize, usize, usize), SuffixTable>,
}

#[derive(Debug, Clone)]
struct SuffixTable {
    map: BTreeMap<Vec<u8>, Vec<u16>>,
    cost: usize,
}

/// Raised internally when the node budget runs out.
struct OutOfBudget;

impl QpSearcher {
    pub fn new(budget: SearchBudget) -> Self {
        QpSearcher { budget, nodes: 0, bands: BTreeMap::new(), tables: BTreeMap::new() }
    }

    /// Nodes charged by the most recent search.
    pub fn nodes_used(&self) -> usize {
        self.nodes
    }

    pub fn search(&mut self, beta: &BraidWord, mode: QpMode) -> QpCertificateResult {
        self.nodes = 0;
        let w = beta.writhe();
        if w < 0 {
            return QpCertificateResult::NotQuasipositive(NotQpReason::NegativeWrithe(w));
        }
        let n = beta.strands();
        let beta = beta.free_reduce();
        let empty = BraidWord::from_parts(n, Vec::new());
        if w == 0 {
            return if to_normal_form(&beta).is_identity() {
                QpCertificateResult::Certificate(QpCertificate {
                    factorization: QPFactorization { strands: n, bands: Vec::new() },
                    witness: empty,
                })
            } else {
                QpCertificateResult::NotQuasipositive(NotQpReason::ZeroWritheNontrivial)
            };
        }
        if let Some(q) = QPFactorization::from_positive_word(&beta) {
            return QpCertificateResult::Certificate(QpCertificate { factorization: q, witness: empty });
        }
        let conjugators = match mode {
            QpMode::Exact => vec![empty],
            QpMode::Conjugacy => distinct_conjugates(&beta, self.budget.max_conjugator_length),
        };
        // Cheap pass first: conjugates that are positive words.
        for c in &conjugators {
            let target = conjugate(&beta, c).expect("same strands").free_reduce();
            if let Some(q) = QPFactorization::from_positive_word(&target) {
                return QpCertificateResult::Certificate(QpCertificate { factorization: q, witness: c.clone() });
            }
        }
        for c in &conjugators {
            let target = conjugate(&beta, c).expect("same strands");
            match self.exact(&target, w as usize) {
                Ok(Some(q)) => {
                    return QpCertificateResult::Certificate(QpCertificate { factorization: q, witness: c.clone() })
                }
                Ok(None) => {}
                Err(OutOfBudget) => return QpCertificateResult::Inconclusive,
            }
        }
        QpCertificateResult::NotQuasipositive(NotQpReason::NoFactorizationWithinBound {
            bands: w as usize,
            conjugator_length: self.budget.max_conjugator_length,
        })
    }

    fn charge(&mut self, amount: usize) -> Result<(), OutOfBudget> {
        self.nodes += amount;
        if self.nodes > self.budget.max_nodes {
            Err(OutOfBudget)
        } else {
            Ok(())
        }
    }

    fn band_list(&mut self, n: usize) -> Vec<Band> {
        let len = self.budget.max_conjugator_length;
        self.bands.entry((n, len)).or_insert_with(|| distinct_bands(n, len)).clone()
    }

    fn exact(&mut self, beta: &BraidWord, k: usize) -> Result<Option<QPFactorization>, OutOfBudget> {
        let n = beta.strands();
        let bands = self.band_list(n);
        if bands.is_empty() {
            return Ok(None);
        }
        let k1 = k / 2;
        let k2 = k - k1;
        let key = (n, self.budget.max_conjugator_length, k2);
        if !self.tables.contains_key(&key) {
            let table = build_table(n, &bands, k2, self.budget.max_nodes.saturating_sub(self.nodes));
            match table {
                Some(t) => {
                    self.tables.insert(key, t);
                }
                None => {
                    self.nodes = self.budget.max_nodes + 1;
                    return Err(OutOfBudget);
                }
            }
        }
        let cost = self.tables[&key].cost;
        self.charge(cost)?;
        let target = to_normal_form(beta);
        let band_words: Vec<BraidWord> = bands.iter().map(|b| BraidWord::from_parts(n, b.letters())).collect();
        let inverse_words: Vec<Vec<i32>> =
            band_words.iter().map(|w| w.letters().iter().rev().map(|l| -l).collect()).collect();

        // Enumerate prefixes p in lex order and look up p⁻¹ β.
        let mut stack: Vec<u16> = Vec::with_capacity(k1);
        let mut rest: Vec<CanonicalForm> = vec![target];
        let mut index = 0u16;
        loop {
            if stack.len() == k1 {
                self.charge(1)?;
                let form = rest.last().expect("nonempty");
                if let Some(suffix) = self.tables[&key].map.get(&form.packed()) {
                    let mut chosen: Vec<Band> = stack.iter().map(|&i| bands[i as usize].clone()).collect();
                    chosen.extend(suffix.iter().map(|&i| bands[i as usize].clone()));
                    return Ok(Some(QPFactorization { strands: n, bands: chosen }));
                }
                // Backtrack.
                match advance(&mut stack, &mut rest, bands.len()) {
                    Some(next) => index = next,
                    None => return Ok(None),
                }
                continue;
            }
            if (index as usize) < bands.len() {
                self.charge(1)?;
                // rest holds p⁻¹ β; extending p by b gives b⁻¹ (p⁻¹ β).
                let prev = rest.last().expect("nonempty");
                let mut letters = inverse_words[index as usize].clone();
                letters.extend_from_slice(prev.to_word().letters());
                rest.push(to_normal_form(&BraidWord::from_parts(n, letters)));
                stack.push(index);
                index = 0;
            } else {
                match advance(&mut stack, &mut rest, bands.len()) {
                    Some(next) => index = next,
                    None => return Ok(None),
                }
            }
        }
    }
}

/// Pops the last choice and returns the next index to try at that depth.
fn advance(stack: &mut Vec<u16>, rest: &mut Vec<CanonicalForm>, count: usize) -> Option<u16> {
    loop {
        let last = stack.pop()?;
        rest.pop();
        if (last as usize) + 1 < count {
            return Some(last + 1);
        }
    }
}

/// Tabulates every product of `k` bands by normal form, keeping the
/// lexicographically first tuple. `None` if it would exceed `limit` products.
fn build_table(n: usize, bands: &[Band], k: usize, limit: usize) -> Option<SuffixTable> {
    let words: Vec<BraidWord> = bands.iter().map(|b| BraidWord::from_parts(n, b.letters())).collect();
    let mut map = BTreeMap::new();
    let mut cost = 0usize;
    let mut stack: Vec<u16> = Vec::new();
    let mut forms: Vec<CanonicalForm> = vec![CanonicalForm::identity(n)];
    let mut index = 0u16;
    loop {
        if stack.len() == k {
            map.entry(forms.last().expect("nonempty").packed()).or_insert_with(|| stack.clone());
            match advance(&mut stack, &mut forms, bands.len()) {
                Some(next) => index = next,
                None => break,
            }
            continue;
        }
        if (index as usize) < bands.len() {
            cost += 1;
            if cost > limit {
                return None;
            }
            let next = forms.last().expect("nonempty").multiply(&words[index as usize]).expect("same strands");
            forms.push(next);
            stack.push(index);
            index = 0;
        } else {
            match advance(&mut stack, &mut forms, bands.len()) {
                Some(next) => index = next,
                None => break,
            }
        }
    }
    Some(SuffixTable { map, cost })
}

/// All words of length at most `max_len` in length-lexicographic order, with
/// letters ordered `1, -1, 2, -2, …`.
pub(crate) fn words_up_to(n: usize, max_len: usize) -> Vec<BraidWord> {
    let alphabet: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![BraidWord::from_parts(n, Vec::new())];
    let mut layer: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for &a in &alphabet {
                if w.last() == Some(&-a) {
                    continue;
                }
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|l| BraidWord::from_parts(n, l.clone())));
        layer = next;
    }
    out
}

/// Bands with conjugators of length at most `max_len`, one per distinct braid.
fn distinct_bands(n: usize, max_len: usize) -> Vec<Band> {
    let mut seen = BTreeMap::new();
    let mut out = Vec::new();
    for w in words_up_to(n, max_len) {
        for j in 1..n {
            let band = Band { conjugator: w.clone(), generator: j };
            let form = to_normal_form(&BraidWord::from_parts(n, band.letters()));
            if seen.insert(form, ()).is_none() {
                out.push(band);
            }
        }
    }
    out
}

/// Conjugators of length at most `max_len` giving pairwise distinct conjugates.
fn distinct_conjugates(beta: &BraidWord, max_len: usize) -> Vec<BraidWord> {
    let mut seen = BTreeMap::new();
    let mut out = Vec::new();
    for c in words_up_to(beta.strands(), max_len) {
        let form = to_normal_form(&conjugate(beta, &c).expect("same strands"));
        if seen.insert(form, ()).is_none() {
            out.push(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::words_equal;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    fn band(n: usize, c: &[i32], j: usize) -> Band {
        Band::new(w(n, c), j).unwrap()
    }

    fn budget() -> SearchBudget {
        SearchBudget { max_nodes: 100_000, max_strands: 4, max_word_length: 20, max_conjugator_length: 2 }
    }

    #[test]
    fn expand_examples() {
        let q = QPFactorization::new(3, vec![band(3, &[1], 2)]).unwrap();
        assert_eq!(expand(&q), w(3, &[1, 2, -1]));
        let q = QPFactorization::new(2, vec![band(2, &[], 1); 3]).unwrap();
        assert_eq!(expand(&q), w(2, &[1, 1, 1]));
        assert!(expand(&QPFactorization::trivial(3).unwrap()).is_empty());
        assert!(Band::new(w(3, &[]), 3).is_err());
        assert!(QPFactorization::new(3, vec![band(2, &[], 1)]).is_err());
    }

    #[test]
    fn self_linking_examples() {
        let q = QPFactorization::new(2, vec![band(2, &[], 1); 3]).unwrap();
        assert_eq!(qp_self_linking(&q), 1);
        assert_eq!(qp_self_linking(&QPFactorization::trivial(1).unwrap()), -1);
        assert_eq!(qp_self_linking(&QPFactorization::trivial(2).unwrap()), -2);
    }

    #[test]
    fn transport() {
        let q = QPFactorization::new(2, vec![band(2, &[], 1); 3]).unwrap();
        let c = qp_conjugate(&q, &w(2, &[1])).unwrap();
        assert!(c.bands().iter().all(|b| b.conjugator == w(2, &[1])));
        assert!(words_equal(&expand(&c), &w(2, &[1, 1, 1])).unwrap());
        assert_eq!(qp_conjugate(&q, &w(2, &[])).unwrap(), q);
        let s = qp_stabilize_positive(&q).unwrap();
        assert_eq!(expand(&s), w(3, &[1, 1, 1, 2]));
        let s = qp_stabilize_positive(&QPFactorization::trivial(1).unwrap()).unwrap();
        assert_eq!(s.bands(), &[band(2, &[], 1)]);
    }

    #[test]
    fn search_examples() {
        let r = qp_search(&w(2, &[1, 1, 1]), &budget());
        assert_eq!(r.certificate().unwrap().factorization.band_count(), 3);
        assert_eq!(
            qp_search(&w(2, &[-1]), &budget()),
            QpCertificateResult::NotQuasipositive(NotQpReason::NegativeWrithe(-1))
        );
        assert_eq!(
            qp_search(&w(3, &[1, -2]), &budget()),
            QpCertificateResult::NotQuasipositive(NotQpReason::ZeroWritheNontrivial)
        );
        let beta = w(3, &[1, 2, -1, 2]);
        let r = qp_search(&beta, &budget());
        let cert = r.certificate().unwrap();
        assert!(cert.check(&beta).unwrap());
        // σ₁⁻¹σ₂³ is not a product of two bands with short conjugators in B₃.
        let beta = w(3, &[-1, 2, 2, 2]);
        assert!(matches!(
            qp_search(&beta, &budget()),
            QpCertificateResult::NotQuasipositive(NotQpReason::NoFactorizationWithinBound { bands: 2, .. })
        ));
    }

    #[test]
    fn conjugacy_mode_records_witness() {
        let beta = w(3, &[2, 2, -1, 2, 1]);
        let mut s = QpSearcher::new(budget());
        let r = s.search(&beta, QpMode::Conjugacy);
        let cert = r.certificate().unwrap();
        assert!(cert.check(&beta).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let tight = SearchBudget { max_nodes: 10, ..budget() };
        let beta = w(4, &[1, 2, -1, 3, 2, -3, -2, 1]);
        assert_eq!(qp_search(&beta, &tight), QpCertificateResult::Inconclusive);
    }

    #[test]
    fn random_generation() {
        let q = random_qp(2, 3, 0, 99).unwrap();
        assert_eq!(expand(&q), w(2, &[1, 1, 1]));
        assert_eq!(random_qp(4, 5, 2, 7).unwrap(), random_qp(4, 5, 2, 7).unwrap());
        let q = random_qp(4, 5, 2, 7).unwrap();
        assert_eq!(q.band_count(), 5);
        assert!(q.bands().iter().all(|b| (1..=3).contains(&b.generator) && b.conjugator.len() <= 2));
        assert!(random_qp(1, 1, 0, 0).is_err());
        assert!(random_qp(1, 0, 3, 0).unwrap().bands().is_empty());
    }
}
