//! Braid group action on tuples over a quandle and fixed points of braid
//! words.
//!
//! The generator `σ_i` acts on strands `i, i+1` (1-based) by
//! `(…, x_i, x_{i+1}, …) ↦ (…, x_{i+1}, x_i ▷ x_{i+1}, …)` and `σ_i⁻¹` by
//! `(…, u, v, …) ↦ (…, R_u⁻¹(v), u, …)`. Letters are applied left to right.
//! The strand swap makes this an action of `B_n` by bijections; the fixed
//! tuples of a word are the quandle colourings of its closure.

use alloc::vec::Vec;
use core::ops::Range;

use crate::continuum::{ContinuumError, ContinuumQuandle, Point};
use crate::finite::{FiniteError, FiniteQuandle};

/// Default cap on `|Q|^strands` for exhaustive enumeration.
pub const FIXED_POINT_BOUND: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BraidError {
    #[error("a braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("letter {letter} out of range for {strands} strands (need 1 <= |letter| <= {})", strands - 1)]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("tuple has length {got}, expected {expected}")]
    TupleLength { expected: usize, got: usize },
    #[error("entry {value} is outside the carrier of size {size}")]
    EntryOutOfRange { value: usize, size: usize },
    #[error("{size}^{strands} tuples exceed the enumeration bound {bound}")]
    BoundExceeded { size: usize, strands: usize, bound: u64 },
    #[error("words act on different strand counts ({0} and {1})")]
    StrandMismatch(usize, usize),
    #[error(transparent)]
    Finite(#[from] FiniteError),
    #[error(transparent)]
    Continuum(#[from] ContinuumError),
}

/// A word in the braid generators: letter `i > 0` is `σ_i`, `-i` is `σ_i⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        if let Some(&letter) =
            letters.iter().find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(BraidError::LetterOutOfRange { letter, strands });
        }
        Ok(BraidWord { strands, letters })
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

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// `α · self · α⁻¹`.
    pub fn conjugate_by(&self, alpha: &BraidWord) -> Result<BraidWord, BraidError> {
        alpha.concat(self)?.concat(&alpha.inverse())
    }

    /// The same word on one more strand, followed by `σ_n^{±1}`.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord { strands: self.strands + 1, letters }
    }
}

/// Precomputed operation and inverse tables for acting on tuples.
#[derive(Debug, Clone)]
pub struct BraidAction<'q> {
    q: &'q FiniteQuandle,
    inverse: Vec<u32>,
}

impl<'q> BraidAction<'q> {
    /// Fails unless every right multiplication of `q` is a bijection.
    pub fn new(q: &'q FiniteQuandle) -> Result<Self, BraidError> {
        Ok(BraidAction { q, inverse: q.right_inverse_table()? })
    }

    #[inline]
    fn apply_letter(&self, x: &mut [usize], letter: i32) {
        let i = letter.unsigned_abs() as usize - 1;
        let (a, b) = (x[i], x[i + 1]);
        if letter > 0 {
            x[i] = b;
            x[i + 1] = self.q.op(a, b);
        } else {
            x[i] = self.inverse[b * self.q.size() + a] as usize;
            x[i + 1] = a;
        }
    }

    /// Applies `w` to `x` in place. Inputs must already be validated.
    #[inline]
    pub fn apply_unchecked(&self, w: &BraidWord, x: &mut [usize]) {
        for &l in &w.letters {
            self.apply_letter(x, l);
        }
    }

    pub fn act(&self, w: &BraidWord, x: &[usize]) -> Result<Vec<usize>, BraidError> {
        if x.len() != w.strands {
            return Err(BraidError::TupleLength { expected: w.strands, got: x.len() });
        }
        let size = self.q.size();
        if let Some(&value) = x.iter().find(|&&v| v >= size) {
            return Err(BraidError::EntryOutOfRange { value, size });
        }
        let mut out = x.to_vec();
        self.apply_unchecked(w, &mut out);
        Ok(out)
    }
}

/// Action of `w` on the tuple `x` over a finite quandle.
pub fn act(q: &FiniteQuandle, w: &BraidWord, x: &[usize]) -> Result<Vec<usize>, BraidError> {
    BraidAction::new(q)?.act(w, x)
}

/// Action of `w` on a tuple of points of a continuum quandle.
pub fn act_continuum(
    q: &ContinuumQuandle,
    w: &BraidWord,
    x: &[Point],
) -> Result<Vec<Point>, BraidError> {
    if x.len() != w.strands {
        return Err(BraidError::TupleLength { expected: w.strands, got: x.len() });
    }
    let mut out = x.to_vec();
    for &l in &w.letters {
        let i = l.unsigned_abs() as usize - 1;
        let (a, b) = (out[i].clone(), out[i + 1].clone());
        if l > 0 {
            out[i + 1] = q.eval(&a, &b)?;
            out[i] = b;
        } else {
            out[i] = q.right_mul_inverse(&a, &b)?;
            out[i + 1] = a;
        }
    }
    Ok(out)
}

/// Tuples over the carrier fixed by a braid word, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointSet {
    pub strands: usize,
    pub tuples: Vec<Vec<usize>>,
}

impl FixedPointSet {
    pub fn count(&self) -> usize {
        self.tuples.len()
    }
}

fn tuple_space(q: &FiniteQuandle, w: &BraidWord, bound: u64) -> Result<u64, BraidError> {
    let size = q.size();
    let total = (size as u64).checked_pow(w.strands as u32).filter(|&t| t <= bound);
    total.ok_or(BraidError::BoundExceeded { size, strands: w.strands, bound })
}

/// Number of tuples to enumerate for `fixed_points_in_range`, or an error
/// when it exceeds `bound`.
pub fn tuple_count(q: &FiniteQuandle, w: &BraidWord, bound: u64) -> Result<u64, BraidError> {
    tuple_space(q, w, bound)
}

fn decode(mut index: u64, size: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = (index % size as u64) as usize;
        index /= size as u64;
    }
}

/// Fixed tuples whose lexicographic index lies in `range`.
pub fn fixed_points_in_range(
    action: &BraidAction<'_>,
    w: &BraidWord,
    range: Range<u64>,
) -> Vec<Vec<usize>> {
    let size = action.q.size();
    let mut x = alloc::vec![0usize; w.strands];
    let mut y = alloc::vec![0usize; w.strands];
    let mut out = Vec::new();
    for index in range {
        decode(index, size, &mut x);
        y.copy_from_slice(&x);
        action.apply_unchecked(w, &mut y);
        if x == y {
            out.push(x.clone());
        }
    }
    out
}

/// Exhaustive fixed-point enumeration, refusing more than `bound` tuples.
pub fn fixed_points_bounded(
    q: &FiniteQuandle,
    w: &BraidWord,
    bound: u64,
) -> Result<FixedPointSet, BraidError> {
    let total = tuple_space(q, w, bound)?;
    let action = BraidAction::new(q)?;
    Ok(FixedPointSet { strands: w.strands, tuples: fixed_points_in_range(&action, w, 0..total) })
}

pub fn fixed_points(q: &FiniteQuandle, w: &BraidWord) -> Result<FixedPointSet, BraidError> {
    fixed_points_bounded(q, w, FIXED_POINT_BOUND)
}
