//! Test-only oracles that do not go through the Garside machinery.
#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use quasibraid::BraidWord;

/// Laurent polynomial in one variable `t` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentT(BTreeMap<i32, i64>);

impl LaurentT {
    pub fn zero() -> Self {
        Self::default()
    }
    pub fn monomial(c: i64, e: i32) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(e, c);
        }
        Self(m)
    }
    pub fn add(&self, other: &Self) -> Self {
        let mut m = self.0.clone();
        for (&e, &c) in &other.0 {
            let slot = m.entry(e).or_insert(0);
            *slot += c;
            if *slot == 0 {
                m.remove(&e);
            }
        }
        Self(m)
    }
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&e1, &c1) in &self.0 {
            for (&e2, &c2) in &other.0 {
                out = out.add(&Self::monomial(c1 * c2, e1 + e2));
            }
        }
        out
    }
}

pub type Matrix = Vec<Vec<LaurentT>>;

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { LaurentT::monomial(1, 0) } else { LaurentT::zero() }).collect())
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(LaurentT::zero(), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

/// Unreduced Burau matrix of a word. Faithful on B₂ and B₃.
pub fn burau(word: &BraidWord) -> Matrix {
    let n = word.strands();
    let mut acc = identity(n);
    for &e in word.letters() {
        let i = e.unsigned_abs() as usize - 1;
        let mut g = identity(n);
        if e > 0 {
            g[i][i] = LaurentT::monomial(1, 0).add(&LaurentT::monomial(-1, 1));
            g[i][i + 1] = LaurentT::monomial(1, 1);
            g[i + 1][i] = LaurentT::monomial(1, 0);
            g[i + 1][i + 1] = LaurentT::zero();
        } else {
            g[i][i] = LaurentT::zero();
            g[i][i + 1] = LaurentT::monomial(1, 0);
            g[i + 1][i] = LaurentT::monomial(1, -1);
            g[i + 1][i + 1] = LaurentT::monomial(1, 0).add(&LaurentT::monomial(-1, -1));
        }
        acc = mat_mul(&acc, &g);
    }
    acc
}

pub fn word(n: usize, letters: &[i32]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

/// Random word on `n` strands of length at most `max_len`.
pub fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let g = (n - 1) as i32;
    proptest::collection::vec((1..=g, any::<bool>()), 0..=max_len).prop_map(move |v| {
        BraidWord::new(n, v.into_iter().map(|(i, s)| if s { i } else { -i }).collect()).unwrap()
    })
}

/// Random word with a random strand count in `2..=max_n`.
pub fn arb_word_any(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| arb_word(n, max_len))
}

/// Applies one braid relation, commutation, or free insertion chosen by
/// `choice` at position `pos`, if one applies there.
pub fn apply_relation(word: &BraidWord, pos: usize, choice: u8) -> BraidWord {
    let mut l = word.letters().to_vec();
    let n = word.strands();
    if l.is_empty() {
        return word.clone();
    }
    let p = pos % l.len();
    match choice % 3 {
        0 if p + 2 < l.len() => {
            let (a, b, c) = (l[p], l[p + 1], l[p + 2]);
            if a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1 {
                l[p] = b;
                l[p + 1] = a;
                l[p + 2] = b;
            }
        }
        1 if p + 1 < l.len() => {
            if (l[p].abs() - l[p + 1].abs()).abs() >= 2 {
                l.swap(p, p + 1);
            }
        }
        _ => {
            let g = ((pos / l.len()) % (n - 1)) as i32 + 1;
            let g = if choice.is_multiple_of(2) { g } else { -g };
            l.insert(p, -g);
            l.insert(p, g);
        }
    }
    BraidWord::new(n, l).unwrap()
}

/// Jones polynomial of the closure in the variable `A` (with `t = A⁻⁴`),
/// from the Kauffman bracket state sum over the closed braid diagram.
/// `a_vertical` selects which smoothing of a positive letter is the
/// A-smoothing.
pub fn jones_bracket(word: &BraidWord, a_vertical: bool) -> LaurentT {
    let n = word.strands();
    let letters = word.letters();
    let len = letters.len();
    let d = LaurentT::monomial(-1, 2).add(&LaurentT::monomial(-1, -2));
    let mut bracket = LaurentT::zero();
    for state in 0u64..(1u64 << len) {
        // Points (level, position); level `len` is glued to level 0.
        let id = |level: usize, p: usize| (level % len.max(1)) * n + p;
        let mut parent: Vec<usize> = (0..len.max(1) * n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let union = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            p[ra] = rb;
        };
        let mut a_count = 0i32;
        for (k, &e) in letters.iter().enumerate() {
            let i = e.unsigned_abs() as usize - 1;
            let a_smoothing = state >> k & 1 == 0;
            if a_smoothing {
                a_count += 1;
            }
            let vertical = a_smoothing == (a_vertical == (e > 0));
            for p in 0..n {
                if p == i || p == i + 1 {
                    continue;
                }
                union(&mut parent, id(k, p), id(k + 1, p));
            }
            if vertical {
                union(&mut parent, id(k, i), id(k + 1, i));
                union(&mut parent, id(k, i + 1), id(k + 1, i + 1));
            } else {
                union(&mut parent, id(k, i), id(k, i + 1));
                union(&mut parent, id(k + 1, i), id(k + 1, i + 1));
            }
        }
        let total = len.max(1) * n;
        let loops = (0..total).filter(|&x| find(&mut parent, x) == x).count();
        let b_count = len as i32 - a_count;
        let mut term = LaurentT::monomial(1, a_count - b_count);
        for _ in 1..loops {
            term = term.mul(&d);
        }
        bracket = bracket.add(&term);
    }
    let w = word.writhe() as i32;
    let sign = if w % 2 == 0 { 1 } else { -1 };
    bracket.mul(&LaurentT::monomial(sign, -3 * w))
}

/// Specializes a HOMFLY polynomial at `v = A⁻⁴`, `z = A⁻² − A²`. Negative
/// powers of `z` are cleared: returns `(z^m · J, m)`.
pub fn jones_from_homfly(p: &quasibraid::HomflyPolynomial) -> (LaurentT, u32) {
    use num_traits::ToPrimitive;
    let z = LaurentT::monomial(1, -2).add(&LaurentT::monomial(-1, 2));
    let m = p.terms().map(|(_, ze, _)| (-ze).max(0)).max().unwrap_or(0) as u32;
    let mut out = LaurentT::zero();
    for (v, ze, c) in p.terms() {
        let mut t = LaurentT::monomial(c.to_i64().unwrap(), -4 * v);
        for _ in 0..(ze + m as i32) {
            t = t.mul(&z);
        }
        out = out.add(&t);
    }
    (out, m)
}

/// `z^m` at `z = A⁻² − A²`.
pub fn z_power(m: u32) -> LaurentT {
    let z = LaurentT::monomial(1, -2).add(&LaurentT::monomial(-1, 2));
    (0..m).fold(LaurentT::monomial(1, 0), |acc, _| acc.mul(&z))
}
