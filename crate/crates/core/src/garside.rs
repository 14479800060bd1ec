//! Left normal form `Δ^p · A₁ ⋯ A_l` in the classical Garside structure of
//! the braid group.
//!
//! Permutation braids (positive braids in which every pair of strands
//! crosses at most once) are stored as their permutations, using the same
//! composition convention as [`BraidWord::underlying_permutation`]. For such
//! a braid `A` with permutation `π`:
//!
//! * `σ_i` left-divides `A` iff `π⁻¹(i) > π⁻¹(i+1)` (starting set),
//! * `σ_i` right-divides `A` iff `π(i) > π(i+1)` (finishing set).

use alloc::vec::Vec;

use crate::error::BraidError;
use crate::word::{check_same_strands, BraidWord, Permutation};

/// Garside left normal form of a braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    strands: usize,
    infimum: i64,
    factors: Vec<Permutation>,
}

impl CanonicalForm {
    pub fn identity(strands: usize) -> Self {
        Self { strands, infimum: 0, factors: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The power of the half twist `Δ`.
    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// `infimum + factor count`.
    pub fn supremum(&self) -> i64 {
        self.infimum + self.factors.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// Builds a form from raw parts, checking every normal-form invariant.
    pub fn from_parts(
        strands: usize,
        infimum: i64,
        factors: Vec<Permutation>,
    ) -> Result<Self, BraidError> {
        crate::word::check_strands(strands)?;
        if factors.iter().any(|f| f.len() != strands) {
            return Err(BraidError::InvalidPermutation);
        }
        let form = Self { strands, infimum, factors };
        if !form.is_valid() {
            return Err(BraidError::Invalid("factors are not in left normal form"));
        }
        Ok(form)
    }

    /// Checks the normal-form invariants: no factor is trivial or `Δ`, and
    /// consecutive factors are left-weighted.
    pub fn is_valid(&self) -> bool {
        let n = self.strands;
        if n == 1 {
            return self.infimum == 0 && self.factors.is_empty();
        }
        self.factors.iter().all(|f| !f.is_identity() && !is_delta(f))
            && self.factors.windows(2).all(|pair| {
                let finish = finishing_set(&pair[0]);
                starting_set(&pair[1]).iter().all(|i| finish.contains(i))
            })
    }

    /// Right multiplication by a word.
    pub fn multiply(&self, word: &BraidWord) -> Result<Self, BraidError> {
        if word.strands() != self.strands {
            return Err(BraidError::StrandMismatch { left: self.strands, right: word.strands() });
        }
        let mut builder = Builder::from_form(self.clone());
        builder.push_letters(word.letters());
        Ok(builder.finish())
    }

    /// Compact byte encoding, unique among forms with the same strand count.
    pub(crate) fn packed(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(4 + self.factors.len() * self.strands);
        out.extend_from_slice(&(self.infimum as i32).to_le_bytes());
        for f in &self.factors {
            out.extend_from_slice(&f.images);
        }
        out
    }

    /// A word representing this braid.
    ///
    /// Each factor is spelled through the parabolic decomposition
    /// `S_{k-1} · (σ_{k-1} σ_{k-2} ⋯ σ_m)`, so the top generator appears at
    /// most once per factor.
    pub fn to_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        if self.strands > 1 {
            let delta = permutation_word(&delta(self.strands));
            let count = self.infimum.unsigned_abs() as usize;
            for _ in 0..count {
                if self.infimum > 0 {
                    letters.extend_from_slice(&delta);
                } else {
                    letters.extend(delta.iter().rev().map(|&e| -e));
                }
            }
            for f in &self.factors {
                letters.extend(permutation_word(f));
            }
        }
        BraidWord::from_parts(self.strands, letters)
    }
}

/// Left normal form of the braid represented by `word`.
pub fn to_normal_form(word: &BraidWord) -> CanonicalForm {
    let mut builder = Builder::new(word.strands());
    builder.push_letters(word.letters());
    builder.finish()
}

/// A word whose normal form is `form`.
pub fn from_normal_form(form: &CanonicalForm) -> BraidWord {
    form.to_word()
}

/// Decides equality in the braid group.
pub fn words_equal(a: &BraidWord, b: &BraidWord) -> Result<bool, BraidError> {
    check_same_strands(a, b)?;
    Ok(to_normal_form(a) == to_normal_form(b))
}

/// `{i : σ_i left-divides A}`, one-based.
pub fn starting_set(simple: &Permutation) -> Vec<usize> {
    let inv = simple.inverse();
    (1..simple.len()).filter(|&i| inv.images[i - 1] > inv.images[i]).collect()
}

/// `{i : σ_i right-divides A}`, one-based.
pub fn finishing_set(simple: &Permutation) -> Vec<usize> {
    (1..simple.len()).filter(|&i| simple.images[i - 1] > simple.images[i]).collect()
}

/// Permutation of the half twist.
pub fn delta(n: usize) -> Permutation {
    Permutation { images: (0..n as u8).rev().collect() }
}

fn is_delta(p: &Permutation) -> bool {
    let n = p.images.len();
    p.images.iter().enumerate().all(|(i, &x)| x as usize == n - 1 - i)
}

/// `Δ⁻¹ A Δ`, which sends `σ_i` to `σ_{n-i}`.
fn flip(p: &mut Permutation) {
    let n = p.images.len();
    let old = p.images.clone();
    for (i, slot) in p.images.iter_mut().enumerate() {
        *slot = (n - 1) as u8 - old[n - 1 - i];
    }
}

/// Positive word for a permutation braid, via the parabolic decomposition.
pub(crate) fn permutation_word(p: &Permutation) -> Vec<i32> {
    let mut images = p.images.clone();
    let mut levels: Vec<Vec<i32>> = Vec::new();
    for k in (2..=images.len()).rev() {
        let m = images[..k].iter().position(|&x| x as usize == k - 1).unwrap() + 1;
        levels.push(((m as i32)..(k as i32)).rev().collect());
        images[m - 1..k].rotate_left(1);
    }
    levels.into_iter().rev().flatten().collect()
}

/// Has the side effect of making `(a, b)` left-weighted; reports whether
/// anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let n = a.images.len();
    let mut changed = false;
    loop {
        let inv_b = b.inverse();
        let moved = (0..n - 1).find(|&i| inv_b.images[i] > inv_b.images[i + 1] && a.images[i] < a.images[i + 1]);
        let Some(i) = moved else { return changed };
        // a ← a·σ_i, b ← σ_i⁻¹·b
        a.images.swap(i, i + 1);
        for x in b.images.iter_mut() {
            if *x as usize == i {
                *x = (i + 1) as u8;
            } else if *x as usize == i + 1 {
                *x = i as u8;
            }
        }
        changed = true;
    }
}

/// Incremental normal form: a left-weighted factor list that absorbs simple
/// elements on the right.
struct Builder {
    strands: usize,
    infimum: i64,
    factors: Vec<Permutation>,
}

impl Builder {
    fn new(strands: usize) -> Self {
        Self { strands, infimum: 0, factors: Vec::new() }
    }

    fn from_form(form: CanonicalForm) -> Self {
        Self { strands: form.strands, infimum: form.infimum, factors: form.factors }
    }

    fn push_letters(&mut self, letters: &[i32]) {
        if self.strands < 2 {
            return;
        }
        for &e in letters {
            let i = e.unsigned_abs() as usize;
            if e > 0 {
                let mut p = Permutation::identity(self.strands);
                p.images.swap(i - 1, i);
                self.push_simple(p);
            } else {
                // σ_i⁻¹ = Δ⁻¹·(Δσ_i⁻¹), and X·Δ⁻¹ = Δ⁻¹·flip(X)
                self.infimum -= 1;
                for f in self.factors.iter_mut() {
                    flip(f);
                }
                let mut p = delta(self.strands);
                p.images.swap(i - 1, i);
                self.push_simple(p);
            }
        }
    }

    fn push_simple(&mut self, simple: Permutation) {
        if simple.is_identity() {
            return;
        }
        if is_delta(&simple) {
            // X·Δ = Δ·flip(X)
            self.infimum += 1;
            for f in self.factors.iter_mut() {
                flip(f);
            }
            return;
        }
        self.factors.push(simple);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
        let leading = self.factors.iter().take_while(|f| is_delta(f)).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.infimum += leading as i64;
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    fn finish(self) -> CanonicalForm {
        CanonicalForm { strands: self.strands, infimum: self.infimum, factors: self.factors }
    }
}
