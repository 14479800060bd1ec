//! Open braid words on an explicit number of strands.
//!
//! A letter `e > 0` stands for the generator `σ_e` and `e < 0` for `σ_{-e}^{-1}`.
//! Words are read left to right.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::BraidError;
use crate::MAX_STRANDS;

/// A word in the braid group on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        check_strands(strands)?;
        for &letter in &letters {
            check_letter(letter, strands)?;
        }
        Ok(Self { strands, letters })
    }

    /// The trivial braid on `strands` strands.
    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// Constructor for callers that already maintain the letter invariant.
    pub(crate) fn from_parts(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters.iter().all(|&e| e != 0 && (e.unsigned_abs() as usize) < strands));
        Self { strands, letters }
    }

    /// Parses whitespace-separated signed generator indices.
    pub fn parse(text: &str, strands: usize) -> Result<Self, BraidError> {
        check_strands(strands)?;
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let letter: i32 = token
                .parse()
                .map_err(|_| BraidError::MalformedToken(String::from(token)))?;
            if letter == 0 {
                return Err(BraidError::MalformedToken(String::from(token)));
            }
            check_letter(letter, strands)?;
            letters.push(letter);
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&e| if e > 0 { 1 } else { -1 }).sum()
    }

    /// Image in the symmetric group, a product of adjacent transpositions
    /// composed in word order.
    pub fn underlying_permutation(&self) -> Permutation {
        let mut images: Vec<u8> = (0..self.strands as u8).collect();
        for &e in &self.letters {
            let i = e.unsigned_abs() as usize;
            images.swap(i - 1, i);
        }
        Permutation { images }
    }

    /// Number of components of the closure.
    pub fn component_count(&self) -> usize {
        self.underlying_permutation().cycle_count()
    }

    /// Every letter's sign flipped.
    pub fn mirror(&self) -> Self {
        Self::from_parts(self.strands, self.letters.iter().map(|&e| -e).collect())
    }

    /// Reversed word with every sign flipped.
    pub fn inverse(&self) -> Self {
        Self::from_parts(self.strands, self.letters.iter().rev().map(|&e| -e).collect())
    }

    /// Cancels adjacent `e, -e` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        Self::from_parts(self.strands, free_reduce_letters(&self.letters))
    }

    /// Free reduction followed by cancellation across the ends of the word.
    ///
    /// The result is conjugate to `self`, not equal to it.
    pub fn cyclic_reduce(&self) -> Self {
        let mut letters = free_reduce_letters(&self.letters);
        let mut start = 0;
        let mut end = letters.len();
        while end - start >= 2 && letters[start] == -letters[end - 1] {
            start += 1;
            end -= 1;
        }
        letters.truncate(end);
        letters.drain(..start);
        Self::from_parts(self.strands, letters)
    }

    /// The word `letters[k..] letters[..k]`, which equals `p⁻¹·self·p` for
    /// the prefix `p = letters[..k]`.
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        letters.rotate_left(k % self.letters.len().max(1));
        Self::from_parts(self.strands, letters)
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Self) -> Result<Self, BraidError> {
        check_same_strands(self, other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self::from_parts(self.strands, letters))
    }

    /// Same letters viewed on `strands` strands.
    pub fn with_strands(&self, strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, self.letters.clone())
    }

    /// Whether every letter is a positive generator.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&e| e > 0)
    }

    /// Largest generator index used, or 0 for the empty word.
    pub fn max_generator(&self) -> usize {
        self.letters.iter().map(|e| e.unsigned_abs() as usize).max().unwrap_or(0)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

pub(crate) fn free_reduce_letters(letters: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::with_capacity(letters.len());
    for &e in letters {
        if out.last() == Some(&-e) {
            out.pop();
        } else {
            out.push(e);
        }
    }
    out
}

pub(crate) fn check_strands(strands: usize) -> Result<(), BraidError> {
    if strands == 0 {
        return Err(BraidError::ZeroStrands);
    }
    if strands > MAX_STRANDS {
        return Err(BraidError::TooManyStrands(strands));
    }
    Ok(())
}

fn check_letter(letter: i32, strands: usize) -> Result<(), BraidError> {
    if letter == 0 || letter.unsigned_abs() as usize >= strands {
        return Err(BraidError::LetterOutOfRange { letter, strands });
    }
    Ok(())
}

pub(crate) fn check_same_strands(a: &BraidWord, b: &BraidWord) -> Result<(), BraidError> {
    if a.strands != b.strands {
        return Err(BraidError::StrandMismatch { left: a.strands, right: b.strands });
    }
    Ok(())
}

/// A permutation of `{1, …, n}`.
///
/// Products follow function composition: `a.compose(&b)` maps `x` to `a(b(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // zero-based images
    pub(crate) images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n as u8).collect() }
    }

    /// Builds a permutation from one-based images.
    pub fn from_images(images: &[usize]) -> Result<Self, BraidError> {
        let n = images.len();
        if n > MAX_STRANDS {
            return Err(BraidError::TooManyStrands(n));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(BraidError::InvalidPermutation);
            }
            seen[x - 1] = true;
            out.push((x - 1) as u8);
        }
        Ok(Self { images: out })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// One-based image of the one-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// One-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len(), other.len());
        Self { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Cycles in one-based notation, fixed points included, each starting
    /// at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            cycles.push(cycle);
        }
        cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    /// Number of inversions, the length of any positive braid lifting it.
    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }
}

/// Cycle notation with fixed points omitted; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(BraidWord::parse("1 1 1", 2).unwrap(), w(2, &[1, 1, 1]));
        assert_eq!(BraidWord::parse("", 1).unwrap(), w(1, &[]));
        assert_eq!(BraidWord::parse("1 -2", 3).unwrap(), w(3, &[1, -2]));
        assert_eq!(BraidWord::parse("  1\t-2\n", 3).unwrap(), w(3, &[1, -2]));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(BraidWord::parse("1 x", 3), Err(BraidError::MalformedToken(_))));
        assert!(matches!(BraidWord::parse("0", 3), Err(BraidError::MalformedToken(_))));
        assert!(matches!(
            BraidWord::parse("3", 3),
            Err(BraidError::LetterOutOfRange { letter: 3, strands: 3 })
        ));
        assert!(matches!(BraidWord::parse("-1", 1), Err(BraidError::LetterOutOfRange { .. })));
        assert_eq!(BraidWord::parse("", 0), Err(BraidError::ZeroStrands));
    }

    #[test]
    fn writhe_examples() {
        assert_eq!(w(2, &[1, 1, 1]).writhe(), 3);
        assert_eq!(w(3, &[]).writhe(), 0);
        assert_eq!(w(3, &[1, -2]).writhe(), 0);
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(w(2, &[1]).underlying_permutation().images(), vec![2, 1]);
        assert!(w(2, &[1, 1]).underlying_permutation().is_identity());
        // σ₁σ₂ sends 1→2→3→1
        let p = w(3, &[1, 2]).underlying_permutation();
        assert_eq!((p.apply(1), p.apply(2), p.apply(3)), (2, 3, 1));
        assert_eq!(p.to_string(), "(1 2 3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn component_examples() {
        assert_eq!(w(2, &[1, 1, 1]).component_count(), 1);
        assert_eq!(w(2, &[]).component_count(), 2);
        assert_eq!(w(2, &[1, 1]).component_count(), 2);
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(w(2, &[1, 1, 1]).mirror(), w(2, &[-1, -1, -1]));
        assert_eq!(w(1, &[]).mirror(), w(1, &[]));
        assert_eq!(w(3, &[1, -2]).mirror(), w(3, &[-1, 2]));
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w(2, &[1, -1]).free_reduce(), w(2, &[]));
        assert_eq!(w(3, &[1, 2, -2, 1]).free_reduce(), w(3, &[1, 1]));
        assert_eq!(w(3, &[1, 2, -1]).free_reduce(), w(3, &[1, 2, -1]));
        assert_eq!(w(3, &[1, 2, -1]).cyclic_reduce(), w(3, &[2]));
    }

    #[test]
    fn rotation_is_prefix_conjugation() {
        let b = w(4, &[1, -2, 3, 2]);
        assert_eq!(b.rotate(1), w(4, &[-2, 3, 2, 1]));
        assert_eq!(b.rotate(4), b);
        assert_eq!(w(2, &[]).rotate(3), w(2, &[]));
    }

    #[test]
    fn permutation_from_images_validates() {
        assert!(Permutation::from_images(&[2, 1, 3]).is_ok());
        assert_eq!(Permutation::from_images(&[2, 2, 3]), Err(BraidError::InvalidPermutation));
        assert_eq!(Permutation::from_images(&[0, 1]), Err(BraidError::InvalidPermutation));
    }
}
