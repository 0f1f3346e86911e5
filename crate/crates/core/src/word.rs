//! Braid words over the Artin generators and the combinatorial maps on them.
//!
//! A letter is a nonzero signed integer: `i` stands for `σ_i` and `-i` for
//! `σ_i⁻¹`. Strands are tracked top to bottom while the word is read left to
//! right, so `σ_i` exchanges whatever strands currently sit at positions `i`
//! and `i + 1`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};

/// A word in `σ_1^{±1}, …, σ_{n-1}^{±1}` with an explicit strand count.
///
/// Two different words may represent the same braid; use
/// [`crate::order::is_trivial`] to decide equality of elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

/// Notation used by [`BraidWord::format`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WordStyle {
    /// `1 -2 1`
    #[default]
    Integer,
    /// `s1 s2^-1 s1`
    Letter,
}

impl FromStr for WordStyle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "integer" => Ok(WordStyle::Integer),
            "letter" => Ok(WordStyle::Letter),
            other => Err(Error::MalformedToken(other.to_string())),
        }
    }
}

fn parse_token(tok: &str) -> Result<i64> {
    let malformed = || Error::MalformedToken(tok.to_string());
    if let Some(rest) = tok.strip_prefix('s') {
        let (digits, sign) = match rest.strip_suffix("^-1") {
            Some(d) => (d, -1),
            None => (rest, 1),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let k: i64 = digits.parse().map_err(|_| malformed())?;
        Ok(sign * k)
    } else {
        let body = tok.strip_prefix('-').unwrap_or(tok);
        if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        tok.parse().map_err(|_| malformed())
    }
}

impl BraidWord {
    /// Builds a word, checking every letter against the strand count.
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("strand count 0".into()));
        }
        for &e in &letters {
            let idx = e.unsigned_abs() as usize;
            if idx == 0 || idx >= n {
                return Err(Error::IndexOutOfRange { index: e as i64, n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub(crate) fn from_raw(n: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&e| e != 0 && (e.unsigned_abs() as usize) < n));
        BraidWord { n, letters }
    }

    pub fn identity(n: usize) -> Self {
        BraidWord {
            n: n.max(1),
            letters: Vec::new(),
        }
    }

    /// The single-letter word `σ_i^{sign}`.
    pub fn generator(n: usize, i: usize, inverse: bool) -> Result<Self> {
        let e = i as i32;
        Self::new(n, vec![if inverse { -e } else { e }])
    }

    pub fn n(&self) -> usize {
        self.n
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

    /// Largest generator index occurring in the word, 0 for the empty word.
    pub fn max_index(&self) -> usize {
        self.letters
            .iter()
            .map(|e| e.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Parses integer (`1 -2 1`) or letter (`s1 s2^-1 s1`) notation.
    ///
    /// Without an explicit `n` the strand count is one more than the largest
    /// index, so the empty word parses as the identity of `B_1`.
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let v = parse_token(tok)?;
            if v == 0 {
                return Err(Error::MalformedToken(tok.to_string()));
            }
            let letter = i32::try_from(v).map_err(|_| Error::MalformedToken(tok.to_string()))?;
            letters.push(letter);
        }
        let max = letters
            .iter()
            .map(|e| e.unsigned_abs() as usize)
            .max()
            .unwrap_or(0);
        let n = n.unwrap_or(max + 1);
        Self::new(n, letters)
    }

    pub fn format(&self, style: WordStyle) -> String {
        let toks: Vec<String> = self
            .letters
            .iter()
            .map(|&e| match style {
                WordStyle::Integer => e.to_string(),
                WordStyle::Letter if e < 0 => format!("s{}^-1", -e),
                WordStyle::Letter => format!("s{e}"),
            })
            .collect();
        toks.join(" ")
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Concatenation of same-strand words; panics on mismatch.
    pub(crate) fn mul(&self, other: &BraidWord) -> Self {
        self.concat(other).expect("strand counts agree")
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|&e| -e).collect(),
        }
    }

    /// `self^k`, using the inverse word for negative `k`.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let reps = k.unsigned_abs() as usize;
        let mut letters = Vec::with_capacity(base.len() * reps);
        for _ in 0..reps {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// `self · other · self⁻¹`.
    pub fn conjugate_by(&self, other: &BraidWord) -> Result<Self> {
        self.concat(other)?.concat(&self.inverse())
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(a: &BraidWord, b: &BraidWord) -> Result<Self> {
        a.concat(b)?.concat(&a.inverse())?.concat(&b.inverse())
    }

    /// Cancels adjacent `e, -e` pairs in a single stack pass.
    pub fn free_reduce(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: free_reduce_letters(&self.letters),
        }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&e| e.signum() as i64).sum()
    }

    pub fn permutation(&self) -> Permutation {
        // arrangement[pos] = starting position of the strand now at pos
        let mut arrangement: Vec<usize> = (0..self.n).collect();
        for &e in &self.letters {
            let i = e.unsigned_abs() as usize - 1;
            arrangement.swap(i, i + 1);
        }
        let mut images = vec![0; self.n];
        for (pos, &start) in arrangement.iter().enumerate() {
            images[start] = pos + 1;
        }
        Permutation { images }
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }

    /// Natural inclusion (`offset = 0`) or iterated shift `σ_i ↦ σ_{i+offset}`
    /// into `B_{target_n}`.
    pub fn embed_shift(&self, offset: usize, target_n: usize) -> Result<Self> {
        let needed = self.n + offset;
        if target_n < needed {
            return Err(Error::TargetTooSmall {
                target: target_n,
                needed,
            });
        }
        let off = offset as i32;
        Ok(BraidWord {
            n: target_n,
            letters: self
                .letters
                .iter()
                .map(|&e| if e > 0 { e + off } else { e - off })
                .collect(),
        })
    }

    /// Deletes the strand that starts at position `k` (1-based) and returns
    /// the resulting word in `B_{n-1}`.
    pub fn remove_strand(&self, k: usize) -> Result<Self> {
        if self.n < 2 {
            return Err(Error::OutOfRange(format!(
                "cannot remove a strand from B_{}",
                self.n
            )));
        }
        if k == 0 || k > self.n {
            return Err(Error::OutOfRange(format!("strand {k} of {}", self.n)));
        }
        let mut pos = k;
        let mut letters = Vec::new();
        for &e in &self.letters {
            let i = e.unsigned_abs() as usize;
            if i == pos {
                pos += 1;
            } else if i + 1 == pos {
                pos -= 1;
            } else if i + 1 < pos {
                letters.push(e);
            } else {
                letters.push(e - e.signum());
            }
        }
        Ok(BraidWord {
            n: self.n - 1,
            letters,
        })
    }

    pub fn crossing_table(&self) -> CrossingTable {
        let n = self.n;
        let mut e = vec![0i64; n * n];
        let mut arrangement: Vec<usize> = (0..n).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let (a, b) = (arrangement[i], arrangement[i + 1]);
            let s = l.signum() as i64;
            e[a * n + b] += s;
            e[b * n + a] += s;
            arrangement.swap(i, i + 1);
        }
        CrossingTable { n, e }
    }

    /// Uniformly random letters over `σ_1^{±1}, …, σ_{n-1}^{±1}`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, n: usize, len: usize) -> Self {
        if n < 2 {
            return Self::identity(n);
        }
        let top = (n - 1) as i32;
        let letters = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..=top);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord { n, letters }
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

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(WordStyle::Integer))
    }
}

/// Strand permutation of a braid: `images[k-1]` is the final position of the
/// strand that starts at position `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::Precondition(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Final position of the strand starting at `k` (1-based).
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    /// `self` followed by `next`; matches concatenation of words.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&p| next.apply(p)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p - 1] = i + 1;
        }
        Permutation { images }
    }

    /// A positive word realizing this permutation (bubble sort of the
    /// target arrangement).
    pub fn positive_word(&self) -> BraidWord {
        let n = self.images.len();
        // target[pos] = starting strand that must end up at pos
        let mut target = vec![0usize; n];
        for (start, &p) in self.images.iter().enumerate() {
            target[p - 1] = start;
        }
        // Sort `target` back to the identity with adjacent swaps, then read
        // the swaps in reverse: that sequence builds `target` from the identity.
        let mut swaps = Vec::new();
        let mut arr = target;
        for pass in 0..n {
            for i in 0..n.saturating_sub(1 + pass) {
                if arr[i] > arr[i + 1] {
                    arr.swap(i, i + 1);
                    swaps.push(i as i32 + 1);
                }
            }
        }
        swaps.reverse();
        BraidWord::from_raw(n.max(1), swaps)
    }
}

/// Signed crossing counts between strands, indexed by starting position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingTable {
    n: usize,
    e: Vec<i64>,
}

impl CrossingTable {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Signed crossings between the strands starting at `i` and `j` (1-based).
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.e[(i - 1) * self.n + (j - 1)]
    }

    /// Sum over unordered pairs; equals the exponent sum of the word.
    pub fn pair_sum(&self) -> i64 {
        let mut s = 0;
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                s += self.get(i, j);
            }
        }
        s
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|&v| v == 0)
    }

    /// Pairwise linking numbers, meaningful for pure braids only.
    pub fn linking_number(&self, i: usize, j: usize) -> i64 {
        self.get(i, j) / 2
    }
}
