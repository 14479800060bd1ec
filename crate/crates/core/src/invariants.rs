//! HOMFLY-PT polynomial of braid closures and the bounds derived from it.
//!
//! Skein convention: `v⁻¹ P(L₊) − v P(L₋) = z P(L₀)`, `P(unknot) = 1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::BraidError;
use crate::garside::{to_normal_form, words_equal, CanonicalForm};
use crate::moves::{self_linking, MoveSequence};
use crate::quasipositive::{expand, qp_self_linking, QPFactorization};
use crate::search::{explore_until, SearchBudget};
use crate::poly::HomflyPolynomial;
use crate::word::{free_reduce_letters, BraidWord};

/// Default cap on memoized subresults.
pub const DEFAULT_MEMO_LIMIT: usize = 1 << 20;

/// Memoizing HOMFLY evaluator. Results are cached by the normal form of the
/// (cyclically reduced) braid, so one engine can be reused across many words.
#[derive(Debug, Clone)]
pub struct HomflyEngine {
    memo: BTreeMap<CanonicalForm, HomflyPolynomial>,
    limit: usize,
}

impl Default for HomflyEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl HomflyEngine {
    pub fn new() -> Self {
        Self::with_limit(DEFAULT_MEMO_LIMIT)
    }

    pub fn with_limit(limit: usize) -> Self {
        HomflyEngine { memo: BTreeMap::new(), limit }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn homfly(&mut self, beta: &BraidWord) -> Result<HomflyPolynomial, BraidError> {
        self.eval(beta.strands(), beta.letters())
    }

    fn eval(&mut self, n: usize, letters: &[i32]) -> Result<HomflyPolynomial, BraidError> {
        let letters = cyclic_reduce(free_reduce_letters(letters));
        if letters.is_empty() {
            return Ok(HomflyPolynomial::delta().pow(n as u32 - 1));
        }
        let key = to_normal_form(&BraidWord::from_parts(n, letters.clone()));
        if let Some(p) = self.memo.get(&key) {
            return Ok(p.clone());
        }
        let p = self.compute(n, letters)?;
        if self.memo.len() >= self.limit {
            return Err(BraidError::BudgetExceeded);
        }
        self.memo.insert(key, p.clone());
        Ok(p)
    }

    fn compute(&mut self, n: usize, letters: Vec<i32>) -> Result<HomflyPolynomial, BraidError> {
        let mut counts = alloc::vec![0usize; n];
        for l in &letters {
            counts[l.unsigned_abs() as usize] += 1;
        }
        // A missing generator splits the closure into two pieces.
        if let Some(i) = (1..n).find(|&i| counts[i] == 0) {
            let left: Vec<i32> = letters.iter().copied().filter(|l| (l.unsigned_abs() as usize) < i).collect();
            let right: Vec<i32> = letters
                .iter()
                .filter(|l| (l.unsigned_abs() as usize) > i)
                .map(|&l| l - l.signum() * i as i32)
                .collect();
            let a = self.eval(i, &left)?;
            let b = self.eval(n - i, &right)?;
            return Ok(&(&a * &b) * &HomflyPolynomial::delta());
        }
        // A generator at either end used once can be destabilized.
        let top = (n - 1) as i32;
        let mut flipped = None;
        if counts[n - 1] == 1 {
            flipped = Some(letters.clone());
        } else if counts[1] == 1 {
            flipped = Some(letters.iter().map(|&l| l.signum() * (n as i32 - l.abs())).collect());
        }
        if let Some(mut w) = flipped {
            let pos = w.iter().position(|l| l.abs() == top).unwrap_or(0);
            w.rotate_left(pos + 1);
            w.pop();
            return self.eval(n - 1, &w);
        }
        match first_ascending_crossing(n, &letters) {
            None => {
                let components = component_count(n, &letters);
                Ok(HomflyPolynomial::delta().pow(components as u32 - 1))
            }
            Some(k) => {
                let e = letters[k];
                let mut switched = letters.clone();
                switched[k] = -e;
                let mut smoothed = letters;
                smoothed.remove(k);
                let ps = self.eval(n, &switched)?;
                let p0 = self.eval(n, &smoothed)?;
                Ok(if e > 0 {
                    // P₊ = v² P₋ + v z P₀
                    &ps.shifted(1, 2, 0) + &p0.shifted(1, 1, 1)
                } else {
                    // P₋ = v⁻² P₊ − v⁻¹ z P₀
                    &ps.shifted(1, -2, 0) + &p0.shifted(-1, -1, 1)
                })
            }
        }
    }
}

fn cyclic_reduce(mut letters: Vec<i32>) -> Vec<i32> {
    let mut start = 0;
    let mut end = letters.len();
    while end - start >= 2 && letters[start] == -letters[end - 1] {
        start += 1;
        end -= 1;
    }
    letters.truncate(end);
    letters.drain(..start);
    letters
}

fn component_count(n: usize, letters: &[i32]) -> usize {
    BraidWord::from_parts(n, letters.to_vec()).component_count()
}

/// Walks the closed braid diagram component by component, each starting at
/// its leftmost top endpoint, and returns the first crossing whose first
/// visit passes under. `None` means the diagram is descending, so its
/// closure is an unlink.
///
/// A positive letter `σᵢ` is drawn with the strand moving from position `i`
/// to `i + 1` on top.
fn first_ascending_crossing(n: usize, letters: &[i32]) -> Option<usize> {
    let mut seen = alloc::vec![false; letters.len()];
    let mut done = alloc::vec![false; n];
    for start in 0..n {
        if done[start] {
            continue;
        }
        let mut pos = start;
        loop {
            done[pos] = true;
            for (k, &l) in letters.iter().enumerate() {
                let i = l.unsigned_abs() as usize - 1;
                if pos != i && pos != i + 1 {
                    continue;
                }
                let over = (pos == i) == (l > 0);
                if !seen[k] {
                    if !over {
                        return Some(k);
                    }
                    seen[k] = true;
                }
                pos = if pos == i { i + 1 } else { i };
            }
            if pos == start {
                break;
            }
        }
    }
    None
}

/// HOMFLY-PT polynomial of the closure of `beta` with a fresh engine.
pub fn homfly(beta: &BraidWord) -> Result<HomflyPolynomial, BraidError> {
    HomflyEngine::new().homfly(beta)
}

/// Morton–Franks–Williams lower bound on braid index: half the `v`-breadth
/// plus one.
pub fn mfw_braid_index_lower(p: &HomflyPolynomial) -> Result<usize, BraidError> {
    let breadth = p.max_v()? - p.min_v()?;
    Ok(breadth as usize / 2 + 1)
}

/// Morton's upper bound on the self-linking number: lowest `v`-exponent minus one.
pub fn morton_sl_upper(p: &HomflyPolynomial) -> Result<i64, BraidError> {
    Ok(p.min_v()? as i64 - 1)
}

/// Polynomial of the mirror link.
pub fn homfly_mirror(p: &HomflyPolynomial) -> HomflyPolynomial {
    p.mirror()
}

/// Outcome of the unlink test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnlinkStatus {
    /// Moves taking the braid to the empty word on one strand per component.
    Unlink { witness: MoveSequence, nodes_used: usize },
    /// The HOMFLY polynomial differs from that of the unlink.
    NotUnlink,
    /// The polynomial matches but no trivializing moves were found in budget.
    Unknown { nodes_used: usize },
}

impl UnlinkStatus {
    pub fn nodes_used(&self) -> usize {
        match self {
            UnlinkStatus::Unlink { nodes_used, .. } | UnlinkStatus::Unknown { nodes_used } => *nodes_used,
            UnlinkStatus::NotUnlink => 0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            UnlinkStatus::Unlink { .. } => "unlink",
            UnlinkStatus::NotUnlink => "not-unlink",
            UnlinkStatus::Unknown { .. } => "unknown",
        }
    }
}

/// Decides whether the closure is an unlink, in three values.
pub fn unlink_status(beta: &BraidWord, budget: &SearchBudget) -> UnlinkStatus {
    let c = beta.component_count();
    match homfly(beta) {
        Ok(p) if p != HomflyPolynomial::delta().pow(c as u32 - 1) => return UnlinkStatus::NotUnlink,
        Ok(_) => {}
        Err(_) => return UnlinkStatus::Unknown { nodes_used: 0 },
    }
    let report = explore_until(beta, budget, |w| w.is_empty() && w.strands() == c);
    match report.goal {
        Some(i) => UnlinkStatus::Unlink { witness: report.path_to(i), nodes_used: report.nodes_used },
        None => UnlinkStatus::Unknown { nodes_used: report.nodes_used },
    }
}

/// Where a bound comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    /// No finite bound.
    Unbounded,
    /// Morton–Franks–Williams breadth bound.
    MfwFromHomfly,
    /// Morton's self-linking bound.
    MortonFromHomfly,
    /// A braid word of the same link realizing the bound.
    ExhibitedWord(BraidWord),
    /// A quasipositive factorization, whose self-linking number is maximal.
    QpFactorization(QPFactorization),
}

/// An integer invariant known to lie in `[lower, upper]`; `None` stands for
/// an infinite end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedInvariant {
    pub lower: Option<i64>,
    pub upper: Option<i64>,
    pub lower_certificate: Provenance,
    pub upper_certificate: Provenance,
    pub nodes_used: usize,
}

impl BoundedInvariant {
    pub fn is_exact(&self) -> bool {
        matches!((self.lower, self.upper), (Some(a), Some(b)) if a == b)
    }
}

/// Braid index bounds: MFW below, the fewest strands found by search above.
pub fn braid_index_bounds(beta: &BraidWord, budget: &SearchBudget) -> BoundedInvariant {
    let lower = homfly(beta).ok().and_then(|p| mfw_braid_index_lower(&p).ok());
    let target = lower.unwrap_or(1);
    let report = explore_until(beta, budget, |w| w.strands() <= target);
    let best = report.minimal_representatives().into_iter().next().unwrap_or_else(|| beta.clone());
    BoundedInvariant {
        lower: lower.map(|l| l as i64),
        upper: Some(best.strands() as i64),
        lower_certificate: if lower.is_some() { Provenance::MfwFromHomfly } else { Provenance::Unbounded },
        upper_certificate: Provenance::ExhibitedWord(best),
        nodes_used: report.nodes_used,
    }
}

/// Bounds on the maximal self-linking number: Morton above, the best
/// representative found (or a quasipositive factorization) below.
pub fn max_self_linking_bounds(
    beta: &BraidWord,
    budget: &SearchBudget,
    qp: Option<&QPFactorization>,
) -> Result<BoundedInvariant, BraidError> {
    let upper = morton_sl_upper(&homfly(beta)?)?;
    if let Some(q) = qp {
        if q.strands() != beta.strands() || !words_equal(&expand(q), beta)? {
            return Err(BraidError::FactorizationMismatch);
        }
        return Ok(BoundedInvariant {
            lower: Some(qp_self_linking(q)),
            upper: Some(upper),
            lower_certificate: Provenance::QpFactorization(q.clone()),
            upper_certificate: Provenance::MortonFromHomfly,
            nodes_used: 0,
        });
    }
    let report = explore_until(beta, budget, |w| self_linking(w) >= upper);
    Ok(BoundedInvariant {
        lower: Some(report.max_self_linking),
        upper: Some(upper),
        lower_certificate: Provenance::ExhibitedWord(report.max_self_linking_word().clone()),
        upper_certificate: Provenance::MortonFromHomfly,
        nodes_used: report.nodes_used,
    })
}
