//! Markov moves, exchange moves and the (writhe, strands) cone.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::BraidError;
use crate::garside::words_equal;
use crate::word::{check_same_strands, check_strands, free_reduce_letters, BraidWord};

/// A point `(w, n)` in the writhe/strand-count plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConePoint {
    pub w: i64,
    pub n: usize,
}

impl ConePoint {
    pub fn new(w: i64, n: usize) -> Result<Self, BraidError> {
        if n == 0 {
            return Err(BraidError::ZeroStrands);
        }
        Ok(ConePoint { w, n })
    }

    pub fn of(word: &BraidWord) -> Self {
        ConePoint { w: word.writhe(), n: word.strands() }
    }
}

/// Returns `c β c⁻¹` as a plain concatenation.
pub fn conjugate(beta: &BraidWord, c: &BraidWord) -> Result<BraidWord, BraidError> {
    check_same_strands(beta, c)?;
    let mut letters = Vec::with_capacity(beta.len() + 2 * c.len());
    letters.extend_from_slice(c.letters());
    letters.extend_from_slice(beta.letters());
    letters.extend(c.letters().iter().rev().map(|&l| -l));
    Ok(BraidWord::from_parts(beta.strands(), letters))
}

/// Adds a strand and appends `σₙ^sign`.
pub fn stabilize(beta: &BraidWord, sign: i32) -> Result<BraidWord, BraidError> {
    if sign != 1 && sign != -1 {
        return Err(BraidError::Invalid("stabilization sign must be +1 or -1"));
    }
    let n = beta.strands();
    check_strands(n + 1)?;
    let mut letters = beta.letters().to_vec();
    letters.push(sign * n as i32);
    Ok(BraidWord::from_parts(n + 1, letters))
}

/// Removes a final lone `σₙ₋₁^±1` and the last strand. The word is freely
/// reduced first.
pub fn destabilize(beta: &BraidWord) -> Result<(BraidWord, i32), BraidError> {
    let n = beta.strands();
    if n < 2 {
        return Err(BraidError::NotDestabilizable("a one-strand braid has no strand to remove"));
    }
    let top = (n - 1) as i32;
    let mut letters = free_reduce_letters(beta.letters());
    let count = letters.iter().filter(|l| l.abs() == top).count();
    match count {
        0 => return Err(BraidError::NotDestabilizable("top generator is absent")),
        1 => {}
        _ => return Err(BraidError::NotDestabilizable("top generator occurs more than once")),
    }
    let last = letters.pop().unwrap_or(0);
    if last.abs() != top {
        return Err(BraidError::NotDestabilizable("top generator is not the final letter"));
    }
    Ok((BraidWord::from_parts(n - 1, letters), last.signum()))
}

/// Bennequin's self-linking number `w − n` of the closure as a transverse link.
pub fn self_linking(beta: &BraidWord) -> i64 {
    beta.writhe() - beta.strands() as i64
}

/// Whether `p` is reachable from `apex` by stabilizations.
pub fn cone_contains(apex: ConePoint, p: ConePoint) -> bool {
    if p.n < apex.n {
        return false;
    }
    let dn = (p.n - apex.n) as i64;
    let dw = p.w - apex.w;
    dw.abs() <= dn && (dw - dn).rem_euclid(2) == 0
}

/// All points reachable from `apex` by at most `depth` stabilizations, found by
/// applying both stabilizations level by level. Sorted by `(n, w)`.
pub fn cone_points(apex: ConePoint, depth: usize) -> Vec<ConePoint> {
    let mut seen = BTreeSet::new();
    seen.insert((apex.n, apex.w));
    let mut frontier = vec![apex];
    for _ in 0..depth {
        let mut next = Vec::new();
        for p in frontier {
            for sign in [-1i64, 1] {
                let q = ConePoint { w: p.w + sign, n: p.n + 1 };
                if seen.insert((q.n, q.w)) {
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().map(|(n, w)| ConePoint { w, n }).collect()
}

/// `|w(β) − w(β₀)| ≤ n(β) − n(β₀)`.
pub fn jones_inequality_holds(beta: &BraidWord, beta0: &BraidWord) -> bool {
    let dw = (beta.writhe() - beta0.writhe()).abs();
    let dn = beta.strands() as i64 - beta0.strands() as i64;
    dw <= dn
}

/// Locates `α σₙ₋₁^ε γ σₙ₋₁^-ε` and returns the position of the first
/// distinguished letter.
fn exchange_split(beta: &BraidWord) -> Result<usize, BraidError> {
    let n = beta.strands();
    if n < 2 {
        return Err(BraidError::NotExchangeForm);
    }
    let top = (n - 1) as i32;
    let letters = beta.letters();
    let positions: Vec<usize> = (0..letters.len()).filter(|&i| letters[i].abs() == top).collect();
    if positions.len() != 2 || positions[1] != letters.len() - 1 {
        return Err(BraidError::NotExchangeForm);
    }
    if letters[positions[0]] != -letters[positions[1]] {
        return Err(BraidError::NotExchangeForm);
    }
    Ok(positions[0])
}

/// Whether the word has the shape `α σₙ₋₁^±1 γ σₙ₋₁^∓1` with `α`, `γ` on the
/// first `n − 1` strands.
pub fn is_exchange_form(beta: &BraidWord) -> bool {
    exchange_split(beta).is_ok()
}

/// Swaps the signs of the two distinguished letters of an exchange-form word.
pub fn exchange_move(beta: &BraidWord) -> Result<BraidWord, BraidError> {
    let i = exchange_split(beta)?;
    let mut letters = beta.letters().to_vec();
    let last = letters.len() - 1;
    letters[i] = -letters[i];
    letters[last] = -letters[last];
    Ok(BraidWord::from_parts(beta.strands(), letters))
}

/// One step of a [`MoveSequence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoveStep {
    /// Conjugate by `by`. When `into` is present the result is replaced by
    /// that word, which must represent the same braid.
    Conjugate { by: BraidWord, into: Option<BraidWord> },
    Stabilize { sign: i32 },
    /// Remove a final lone top generator, which must carry `sign`.
    Destabilize { sign: i32 },
    Exchange,
}

impl MoveStep {
    pub fn apply(&self, beta: &BraidWord) -> Result<BraidWord, BraidError> {
        match self {
            MoveStep::Conjugate { by, into } => {
                let conj = conjugate(beta, by)?;
                match into {
                    None => Ok(conj),
                    Some(target) => {
                        if words_equal(&conj, target)? {
                            Ok(target.clone())
                        } else {
                            Err(BraidError::RewriteMismatch)
                        }
                    }
                }
            }
            MoveStep::Stabilize { sign } => stabilize(beta, *sign),
            MoveStep::Destabilize { sign } => {
                let (out, got) = destabilize(beta)?;
                if got != *sign {
                    return Err(BraidError::NotDestabilizable("destabilization has the wrong sign"));
                }
                Ok(out)
            }
            MoveStep::Exchange => exchange_move(beta),
        }
    }
}

/// A starting word together with moves applied to it in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveSequence {
    pub initial: BraidWord,
    pub steps: Vec<MoveStep>,
}

impl MoveSequence {
    pub fn new(initial: BraidWord) -> Self {
        MoveSequence { initial, steps: Vec::new() }
    }

    /// Applies every step and returns the final word.
    pub fn replay(&self) -> Result<BraidWord, BraidError> {
        let mut current = self.initial.clone();
        for step in &self.steps {
            current = step.apply(&current)?;
        }
        Ok(current)
    }

    /// Every intermediate word, starting with the initial one.
    pub fn trace(&self) -> Result<Vec<BraidWord>, BraidError> {
        let mut out = vec![self.initial.clone()];
        for step in &self.steps {
            let next = step.apply(out.last().unwrap_or(&self.initial))?;
            out.push(next);
        }
        Ok(out)
    }
}

/// Realizes an exchange move by conjugations, one positive stabilization and
/// one positive destabilization.
///
/// Write the input as `α x γ x⁻¹` with `x = σₙ₋₁` (the signs-swapped case is
/// the same chain read backwards) and let `y = σₙ` on `n + 1` strands. With
/// `β₁ = x⁻² α x γ x` and `X = x γ x α x⁻²` the chain is
///
/// ```text
/// α x γ x⁻¹  ~  β₁  →  β₁ y  ~  X y  →  X  ~  α x⁻¹ γ x
/// ```
///
/// where the middle conjugation is by `x γ y² x y`. The final conjugation
/// is a rotation and is included as the last step, so the returned witness
/// is the empty word.
pub fn exchange_as_composite(beta: &BraidWord) -> Result<(MoveSequence, BraidWord), BraidError> {
    let i = exchange_split(beta)?;
    let n = beta.strands();
    let letters = beta.letters();
    let alpha = &letters[..i];
    let gamma = &letters[i + 1..letters.len() - 1];
    let top = (n - 1) as i32;
    let (x, xi, y) = ([top], [-top], [n as i32]);

    let cat = |parts: &[&[i32]]| -> Vec<i32> { parts.iter().flat_map(|p| p.iter().copied()).collect() };
    let inv = |w: &[i32]| -> Vec<i32> { w.iter().rev().map(|l| -l).collect() };
    let small = |l: Vec<i32>| BraidWord::from_parts(n, l);
    let big = |l: Vec<i32>| BraidWord::from_parts(n + 1, l);

    let beta1 = cat(&[&xi, &xi, alpha, &x, gamma, &x]);
    let top_word = cat(&[&x, gamma, &x, alpha, &xi, &xi]);
    let mid = cat(&[&x, gamma, &y, &y, &x, &y]);
    let target = exchange_move(beta)?;

    let mut seq = MoveSequence::new(beta.clone());
    if letters[i] > 0 {
        // α x γ x⁻¹ → α x⁻¹ γ x
        let rot = cat(&[&xi, &inv(gamma), &xi]);
        seq.steps = vec![
            MoveStep::Conjugate { by: small(cat(&[&xi, &xi])), into: Some(small(beta1.clone())) },
            MoveStep::Stabilize { sign: 1 },
            MoveStep::Conjugate { by: big(mid), into: Some(big(cat(&[&top_word, &y]))) },
            MoveStep::Destabilize { sign: 1 },
            MoveStep::Conjugate { by: small(rot), into: Some(target) },
        ];
    } else {
        // α x⁻¹ γ x → α x γ x⁻¹
        seq.steps = vec![
            MoveStep::Conjugate { by: small(cat(&[&x, gamma, &x])), into: Some(small(top_word)) },
            MoveStep::Stabilize { sign: 1 },
            MoveStep::Conjugate { by: big(inv(&mid)), into: Some(big(cat(&[&beta1, &y]))) },
            MoveStep::Destabilize { sign: 1 },
            MoveStep::Conjugate { by: small(cat(&[&x, &x])), into: Some(target) },
        ];
    }
    let witness = BraidWord::from_parts(n, Vec::new());
    Ok((seq, witness))
}
