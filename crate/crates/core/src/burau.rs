//! The unreduced Burau representation `ρ_n: B_n → GL_n(ℤ[t, t⁻¹])`.
//!
//! `σ_i` acts through the block `[[1-t, t], [1, 0]]` placed at rows and
//! columns `i, i+1`; `σ_i⁻¹` through its inverse `[[0, 1], [t⁻¹, 1-t⁻¹]]`.

use std::fmt;
use std::ops::Mul;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::word::BraidWord;

/// Square matrix over `ℤ[t, t⁻¹]`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurauMatrix {
    n: usize,
    entries: Vec<LaurentPoly>,
}

struct Blocks {
    forward: [LaurentPoly; 4],
    backward: [LaurentPoly; 4],
}

fn blocks() -> &'static Blocks {
    static BLOCKS: OnceLock<Blocks> = OnceLock::new();
    BLOCKS.get_or_init(|| {
        let one = LaurentPoly::one();
        let t = LaurentPoly::t();
        let t_inv = LaurentPoly::monomial(1, -1);
        Blocks {
            forward: [&one - &t, t, one.clone(), LaurentPoly::zero()],
            backward: [
                LaurentPoly::zero(),
                one.clone(),
                t_inv.clone(),
                &one - &t_inv,
            ],
        }
    })
}

impl BurauMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![LaurentPoly::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = LaurentPoly::one();
        }
        BurauMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Precondition("matrix is not square".into()));
        }
        Ok(BurauMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Image of the single generator `σ_i^{±1}` in `GL_n`.
    pub fn generator(n: usize, i: usize, inverse: bool) -> Result<Self> {
        let mut m = Self::identity(n);
        m.apply_generator(BraidWord::generator(n, i, inverse)?.letters()[0]);
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at row `i`, column `j`, both 1-based.
    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n;
        self.entries.iter().enumerate().all(|(k, e)| {
            if k / n == k % n {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }

    /// Right multiplication by the image of one letter, as a column operation.
    fn apply_generator(&mut self, letter: i32) {
        let n = self.n;
        let c = letter.unsigned_abs() as usize - 1;
        let b = if letter > 0 {
            &blocks().forward
        } else {
            &blocks().backward
        };
        for r in 0..n {
            let x = &self.entries[r * n + c];
            let y = &self.entries[r * n + c + 1];
            let new_x = &(x * &b[0]) + &(y * &b[2]);
            let new_y = &(x * &b[1]) + &(y * &b[3]);
            self.entries[r * n + c] = new_x;
            self.entries[r * n + c + 1] = new_y;
        }
    }

    /// Exact determinant by Laplace expansion over column subsets.
    pub fn det(&self) -> LaurentPoly {
        let n = self.n;
        if n == 0 {
            return LaurentPoly::one();
        }
        assert!(n <= 20, "determinant of a {n}x{n} matrix");
        // minors[S] = det of the first |S| rows restricted to the columns in S
        let mut minors: Vec<LaurentPoly> = vec![LaurentPoly::zero(); 1 << n];
        minors[0] = LaurentPoly::one();
        let mut masks: Vec<usize> = (1..1usize << n).collect();
        masks.sort_by_key(|m| m.count_ones());
        for mask in masks {
            let row = mask.count_ones() as usize - 1;
            let mut acc = LaurentPoly::zero();
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let a = &self.entries[row * n + j];
                let sub = &minors[mask & !(1 << j)];
                if a.is_zero() || sub.is_zero() {
                    continue;
                }
                let pos = (mask & ((1 << j) - 1)).count_ones() as usize;
                let term = a * sub;
                acc = if (row + pos).is_multiple_of(2) {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            minors[mask] = acc;
        }
        minors[(1 << n) - 1].clone()
    }
}

impl Mul for &BurauMatrix {
    type Output = BurauMatrix;

    fn mul(self, rhs: &BurauMatrix) -> BurauMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut entries = vec![LaurentPoly::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.entries[k * n + j];
                    if !b.is_zero() {
                        entries[i * n + j] = &entries[i * n + j] + &(a * b);
                    }
                }
            }
        }
        BurauMatrix { n, entries }
    }
}

/// One row per line, `[e11, e12, ...]`, entries in [`LaurentPoly`]'s notation.
impl fmt::Display for BurauMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.n {
            if r > 0 {
                f.write_str("\n")?;
            }
            f.write_str("[")?;
            for c in 0..self.n {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.entries[r * self.n + c])?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

pub fn burau_matrix(w: &BraidWord) -> BurauMatrix {
    let mut m = BurauMatrix::identity(w.n());
    for &e in w.letters() {
        m.apply_generator(e);
    }
    m
}

pub fn burau_det(w: &BraidWord) -> LaurentPoly {
    burau_matrix(w).det()
}

pub fn in_burau_kernel(w: &BraidWord) -> bool {
    burau_matrix(w).is_identity()
}
