//! Distinguished braids: half twists, full twists, elements of the
//! centralizer `C(r)` of `B_{r-1}` in `B_r`, least-element candidates,
//! the Shepperd generators and the homomorphism `h: B_4 → B_3`.
//!
//! Everything is emitted as an explicit word. Equality of the resulting
//! elements is left to [`crate::order`].

use crate::error::{Error, Result};
use crate::word::BraidWord;

fn check_target(k: usize, target_n: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::OutOfRange("half twist on 0 strands".into()));
    }
    if target_n < k {
        return Err(Error::TargetTooSmall {
            target: target_n,
            needed: k,
        });
    }
    Ok(())
}

/// Garside half twist `Δ_k = (σ_{k-1}⋯σ_1)(σ_{k-1}⋯σ_2)⋯(σ_{k-1})` in `B_{target_n}`.
pub fn delta(k: usize, target_n: usize) -> Result<BraidWord> {
    check_target(k, target_n)?;
    let mut letters = Vec::with_capacity(k * (k - 1) / 2);
    for low in 1..k {
        letters.extend((low..k).rev().map(|i| i as i32));
    }
    BraidWord::new(target_n, letters)
}

/// `Δ_k^{2·power}`.
pub fn full_twist(k: usize, target_n: usize, power: i64) -> Result<BraidWord> {
    Ok(delta(k, target_n)?.pow(2 * power))
}

/// Parametrization of an element of `C(r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralizerForm {
    /// `(σ_2σ_1²σ_2)^p σ_1^q` for `r = 3`,
    /// `(σ_{r-1}⋯σ_2σ_1²σ_2⋯σ_{r-1})^p Δ_{r-1}^{2q}` for `r > 3`.
    Frz { p: i64, q: i64 },
    /// `Δ_3^{2u} σ_1^v` for `r = 3`, `Δ_r^{2u} Δ_{r-1}^{2v}` for `r > 3`.
    Uv { u: i64, v: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CentralizerParams {
    pub r: usize,
    pub form: CentralizerForm,
}

impl CentralizerParams {
    pub fn frz(r: usize, p: i64, q: i64) -> Self {
        CentralizerParams {
            r,
            form: CentralizerForm::Frz { p, q },
        }
    }

    pub fn uv(r: usize, u: i64, v: i64) -> Self {
        CentralizerParams {
            r,
            form: CentralizerForm::Uv { u, v },
        }
    }

    /// The same element in the other parametrization
    /// (`u = p, v = q - 2p` for `r = 3`, `u = p, v = q - p` otherwise).
    pub fn converted(self) -> Self {
        let shift = if self.r == 3 { 2 } else { 1 };
        let form = match self.form {
            CentralizerForm::Frz { p, q } => CentralizerForm::Uv {
                u: p,
                v: q - shift * p,
            },
            CentralizerForm::Uv { u, v } => CentralizerForm::Frz {
                p: u,
                q: v + shift * u,
            },
        };
        CentralizerParams { r: self.r, form }
    }
}

/// The loop `σ_{r-1}⋯σ_2σ_1²σ_2⋯σ_{r-1}` of the last strand around the others.
fn last_strand_loop(r: usize, target_n: usize) -> Result<BraidWord> {
    let down = (1..r).rev().map(|i| i as i32);
    let up = (1..r).map(|i| i as i32);
    BraidWord::new(target_n, down.chain(up).collect())
}

pub fn centralizer_element(params: CentralizerParams, target_n: usize) -> Result<BraidWord> {
    let r = params.r;
    if r < 3 {
        return Err(Error::OutOfRange(format!("centralizer index r = {r}")));
    }
    if target_n < r {
        return Err(Error::TargetTooSmall {
            target: target_n,
            needed: r,
        });
    }
    let sigma1 = BraidWord::generator(target_n, 1, false)?;
    Ok(match (params.form, r) {
        (CentralizerForm::Frz { p, q }, 3) => {
            last_strand_loop(3, target_n)?.pow(p).mul(&sigma1.pow(q))
        }
        (CentralizerForm::Frz { p, q }, _) => last_strand_loop(r, target_n)?
            .pow(p)
            .mul(&full_twist(r - 1, target_n, q)?),
        (CentralizerForm::Uv { u, v }, 3) => full_twist(3, target_n, u)?.mul(&sigma1.pow(v)),
        (CentralizerForm::Uv { u, v }, _) => {
            full_twist(r, target_n, u)?.mul(&full_twist(r - 1, target_n, v)?)
        }
    })
}

/// Which family of least-positive-element candidates to list.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateFamily {
    /// `Δ_r^{2u}`, valid for `3 ≤ r ≤ n - 2`.
    FullTwist { r: usize },
    /// `σ_1^u`.
    SigmaOne,
}

/// The only possible least positive elements of a discretely ordered
/// nontrivial normal subgroup of `B_n`, for `u = 1..=u_max`.
pub fn least_element_candidates(
    n: usize,
    family: CandidateFamily,
    u_max: u32,
) -> Result<Vec<BraidWord>> {
    if u_max == 0 {
        return Err(Error::OutOfRange("u_max = 0".into()));
    }
    match family {
        CandidateFamily::FullTwist { r } => {
            if r < 3 || r + 2 > n {
                return Err(Error::OutOfRange(format!(
                    "r = {r} for n = {n} (need 3 <= r <= n - 2)"
                )));
            }
            (1..=u_max as i64).map(|u| full_twist(r, n, u)).collect()
        }
        CandidateFamily::SigmaOne => {
            let s = BraidWord::generator(n, 1, false)?;
            Ok((1..=u_max as i64).map(|u| s.pow(u)).collect())
        }
    }
}

/// `h: B_4 → B_3`, `σ_1 ↦ σ_1`, `σ_2 ↦ σ_2`, `σ_3 ↦ σ_1`.
pub fn homo_h(w: &BraidWord) -> Result<BraidWord> {
    if w.n() != 4 {
        return Err(Error::Precondition(format!(
            "h is defined on B_4, got B_{}",
            w.n()
        )));
    }
    let letters = w
        .letters()
        .iter()
        .map(|&e| if e.abs() == 3 { e.signum() } else { e })
        .collect();
    BraidWord::new(3, letters)
}

/// `β_i = Δ_i² · sh^i(Δ_{n-i})^{-2}` for `i < n` and `β_n = Δ_n²`.
pub fn shepperd_generator(n: usize, i: usize) -> Result<BraidWord> {
    if n < 3 {
        return Err(Error::OutOfRange(format!("Shepperd subgroup of B_{n}")));
    }
    if i == 0 || i > n {
        return Err(Error::OutOfRange(format!("Shepperd generator {i} of {n}")));
    }
    if i == n {
        return full_twist(n, n, 1);
    }
    let head = full_twist(i, n, 1)?;
    let tail = full_twist(n - i, n - i, -1)?.embed_shift(i, n)?;
    Ok(head.mul(&tail))
}

/// Product of Shepperd generators; a negative letter selects the inverse.
pub fn shepperd_word(n: usize, letters: &[i32]) -> Result<BraidWord> {
    let mut out = BraidWord::identity(n);
    for &l in letters {
        let i = l.unsigned_abs() as usize;
        let g = shepperd_generator(n, i)?;
        out = out.mul(&if l < 0 { g.inverse() } else { g });
    }
    Ok(out)
}
