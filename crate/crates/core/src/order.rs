//! Dehornoy ordering via handle reduction.
//!
//! A braid is positive when it has a representative word in which the
//! generator with the greatest index occurs only with positive exponents.
//! Handle reduction rewrites any word into an equivalent one that visibly
//! has this form (or is empty), which decides the sign, the word problem,
//! and comparisons `a < b ⇔ a⁻¹b > 1`.
//!
//! A `σ_i`-handle is a subword `σ_i^e u σ_i^{-e}` where `u` only involves
//! `σ_1, …, σ_{i-1}`. Reducing it replaces every `σ_{i-1}^d` in `u` by
//! `σ_{i-1}^{-e} σ_i^d σ_{i-1}^e`, drops the two outer letters and leaves
//! lower letters untouched. The engine always reduces the handle whose
//! closing letter is leftmost; such a handle never contains another handle.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::word::{free_reduce_letters, BraidWord};

/// Default number of handle reductions allowed before giving up.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

/// Outcome of the σ-sign analysis of a braid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SigmaSign {
    /// `i`-positive: `σ_i` is the main generator and occurs only positively.
    Positive(usize),
    /// `i`-negative.
    Negative(usize),
    /// The identity element.
    Trivial,
}

impl SigmaSign {
    /// Sign of a word that contains no handle.
    fn of_reduced(letters: &[i32]) -> SigmaSign {
        let mut best = 0i32;
        for &e in letters {
            if e.abs() > best.abs() {
                best = e;
            }
        }
        match best.signum() {
            1 => SigmaSign::Positive(best as usize),
            -1 => SigmaSign::Negative((-best) as usize),
            _ => SigmaSign::Trivial,
        }
    }

    pub fn flip(self) -> SigmaSign {
        match self {
            SigmaSign::Positive(i) => SigmaSign::Negative(i),
            SigmaSign::Negative(i) => SigmaSign::Positive(i),
            SigmaSign::Trivial => SigmaSign::Trivial,
        }
    }

    pub fn is_positive(self) -> bool {
        matches!(self, SigmaSign::Positive(_))
    }

    pub fn is_negative(self) -> bool {
        matches!(self, SigmaSign::Negative(_))
    }

    pub fn main_index(self) -> Option<usize> {
        match self {
            SigmaSign::Positive(i) | SigmaSign::Negative(i) => Some(i),
            SigmaSign::Trivial => None,
        }
    }
}

impl fmt::Display for SigmaSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigmaSign::Positive(i) => write!(f, "positive:{i}"),
            SigmaSign::Negative(i) => write!(f, "negative:{i}"),
            SigmaSign::Trivial => f.write_str("trivial"),
        }
    }
}

/// A fully reduced word together with the work it took to get there.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub word: BraidWord,
    /// Number of handles reduced (free cancellations count as handles).
    pub steps: u64,
    /// Longest intermediate word seen.
    pub max_len: usize,
}

impl Reduction {
    pub fn sign(&self) -> SigmaSign {
        SigmaSign::of_reduced(self.word.letters())
    }
}

/// Reduces `w` until it contains no handle.
pub fn handle_reduce(w: &BraidWord, step_budget: u64) -> Result<BraidWord> {
    handle_reduce_traced(w, step_budget).map(|r| r.word)
}

pub fn handle_reduce_traced(w: &BraidWord, step_budget: u64) -> Result<Reduction> {
    if step_budget == 0 {
        return Err(Error::Precondition("step budget must be positive".into()));
    }
    let n = w.n();
    let width = n.max(2);
    let mut word = free_reduce_letters(w.letters());
    let mut max_len = word.len().max(w.len());
    let mut steps = 0u64;

    // Row k of `snaps` holds, for every index j, the latest position before k
    // carrying a letter of index >= j (or -1).
    let mut snaps: Vec<i32> = vec![-1; width];
    let mut state: Vec<i32> = vec![-1; width];
    let mut q = 0usize;
    let mut repl: Vec<i32> = Vec::new();

    while q < word.len() {
        let x = word[q];
        let i = x.unsigned_abs() as usize;
        let p = state[i];
        if p >= 0 && word[p as usize] == -x {
            steps += 1;
            if steps > step_budget {
                return Err(Error::BudgetExceeded(step_budget));
            }
            let p = p as usize;
            let e = word[p].signum();
            let lower = (i - 1) as i32;
            repl.clear();
            for &y in &word[p + 1..q] {
                if y.abs() == lower {
                    push_reduced(&mut repl, -e * lower);
                    push_reduced(&mut repl, y.signum() * i as i32);
                    push_reduced(&mut repl, e * lower);
                } else {
                    push_reduced(&mut repl, y);
                }
            }
            word.splice(p..=q, repl.iter().copied());
            max_len = max_len.max(word.len());
            snaps.truncate((p + 1) * width);
            state.copy_from_slice(&snaps[p * width..(p + 1) * width]);
            q = p;
        } else {
            for slot in &mut state[1..=i] {
                *slot = q as i32;
            }
            snaps.extend_from_slice(&state);
            q += 1;
        }
    }

    Ok(Reduction {
        word: BraidWord::from_raw(n, word),
        steps,
        max_len,
    })
}

fn push_reduced(out: &mut Vec<i32>, e: i32) {
    if out.last() == Some(&-e) {
        out.pop();
    } else {
        out.push(e);
    }
}

pub fn sigma_sign(w: &BraidWord) -> Result<SigmaSign> {
    sigma_sign_with_budget(w, DEFAULT_STEP_BUDGET)
}

pub fn sigma_sign_with_budget(w: &BraidWord, step_budget: u64) -> Result<SigmaSign> {
    Ok(handle_reduce_traced(w, step_budget)?.sign())
}

/// Word problem: does `w` represent the identity?
pub fn is_trivial(w: &BraidWord) -> Result<bool> {
    Ok(sigma_sign(w)? == SigmaSign::Trivial)
}

/// Dehornoy comparison: `a < b` iff `a⁻¹ b` is σ-positive.
pub fn compare(a: &BraidWord, b: &BraidWord) -> Result<Ordering> {
    compare_with_budget(a, b, DEFAULT_STEP_BUDGET)
}

pub fn compare_with_budget(a: &BraidWord, b: &BraidWord, step_budget: u64) -> Result<Ordering> {
    let quotient = a.inverse().concat(b)?;
    Ok(match sigma_sign_with_budget(&quotient, step_budget)? {
        SigmaSign::Positive(_) => Ordering::Less,
        SigmaSign::Negative(_) => Ordering::Greater,
        SigmaSign::Trivial => Ordering::Equal,
    })
}

/// Element equality, decided by the word problem.
pub fn equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    Ok(compare(a, b)? == Ordering::Equal)
}

/// `LT`, `EQ` or `GT`.
pub fn ordering_token(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}
