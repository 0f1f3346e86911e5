//! Membership predicates and seeded samplers for normal subgroups of `B_n`.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::burau::in_burau_kernel;
use crate::error::{Error, Result};
use crate::garside::{homo_h, shepperd_word};
use crate::order::is_trivial;
use crate::word::BraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubgroupId {
    /// `[B_n, B_n]`: exponent sum zero.
    Commutator,
    /// `P_n`: trivial strand permutation.
    Pure,
    /// `[P_n, P_n]`, sampled as commutators of pure braids.
    PureCommutatorSampled,
    /// Braids that become trivial after deleting any one strand.
    Brunnian,
    /// Kernel of the Burau representation.
    BurauKernel,
    /// Kernel of `h: B_4 → B_3`.
    KerH4,
    /// Shepperd subgroup `H_n`, sampled from its generators.
    ShepperdSampled,
}

impl SubgroupId {
    pub const ALL: [SubgroupId; 7] = [
        SubgroupId::Commutator,
        SubgroupId::Pure,
        SubgroupId::PureCommutatorSampled,
        SubgroupId::Brunnian,
        SubgroupId::BurauKernel,
        SubgroupId::KerH4,
        SubgroupId::ShepperdSampled,
    ];

    pub fn token(self) -> &'static str {
        match self {
            SubgroupId::Commutator => "commutator",
            SubgroupId::Pure => "pure",
            SubgroupId::PureCommutatorSampled => "pure-commutator",
            SubgroupId::Brunnian => "brunnian",
            SubgroupId::BurauKernel => "burau-kernel",
            SubgroupId::KerH4 => "ker-h4",
            SubgroupId::ShepperdSampled => "shepperd",
        }
    }

    pub fn supports_decide(self) -> bool {
        !matches!(
            self,
            SubgroupId::PureCommutatorSampled | SubgroupId::ShepperdSampled
        )
    }

    pub fn supports_sample(self) -> bool {
        !matches!(self, SubgroupId::Brunnian | SubgroupId::BurauKernel)
    }
}

impl fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for SubgroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SubgroupId::ALL
            .into_iter()
            .find(|id| id.token() == s)
            .ok_or_else(|| Error::MalformedToken(s.to_string()))
    }
}

fn require_h4(w_n: usize) -> Result<()> {
    if w_n != 4 {
        return Err(Error::Precondition(format!(
            "ker-h4 lives in B_4, got B_{w_n}"
        )));
    }
    Ok(())
}

pub fn decide(id: SubgroupId, w: &BraidWord) -> Result<bool> {
    match id {
        SubgroupId::Commutator => Ok(w.exponent_sum() == 0),
        SubgroupId::Pure => Ok(w.is_pure()),
        SubgroupId::Brunnian => is_brunnian(w),
        SubgroupId::BurauKernel => Ok(in_burau_kernel(w)),
        SubgroupId::KerH4 => {
            require_h4(w.n())?;
            is_trivial(&homo_h(w)?)
        }
        SubgroupId::PureCommutatorSampled | SubgroupId::ShepperdSampled => {
            Err(Error::Unsupported {
                id: id.token(),
                what: "decide",
            })
        }
    }
}

fn is_brunnian(w: &BraidWord) -> Result<bool> {
    if w.n() == 1 {
        return Ok(true);
    }
    // Removing a strand can only give the identity if the braid is pure
    // (for n >= 3), which filters cheaply before the word problem.
    if w.n() >= 3 && !w.is_pure() {
        return Ok(false);
    }
    for k in 1..=w.n() {
        if !is_trivial(&w.remove_strand(k)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a pure braid, whether every pair of strands has zero crossing count.
pub fn linking_check_brunnian(w: &BraidWord) -> Result<bool> {
    if !w.is_pure() {
        return Err(Error::Precondition(
            "linking numbers need a pure braid".into(),
        ));
    }
    Ok(w.crossing_table().is_zero())
}

/// Every nontrivial Brunnian word in `B_n` of length at most `max_len`,
/// found by exhaustive enumeration of freely reduced words.
pub fn brunnian_search(n: usize, max_len: usize) -> Result<Vec<BraidWord>> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("Brunnian search in B_{n}")));
    }
    let alphabet: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
    let mut found = Vec::new();
    let mut layer: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * alphabet.len());
        for w in &layer {
            for &e in &alphabet {
                if w.last() != Some(&-e) {
                    let mut v = w.clone();
                    v.push(e);
                    next.push(v);
                }
            }
        }
        for v in &next {
            let word = BraidWord::from_raw(n, v.clone());
            if decide(SubgroupId::Brunnian, &word)? && !is_trivial(&word)? {
                found.push(word);
            }
        }
        layer = next;
    }
    Ok(found)
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_nonempty<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(1..=max_len.max(1));
    BraidWord::random(rng, n, len)
}

fn pure_sample<R: Rng>(rng: &mut R, n: usize, size: usize) -> BraidWord {
    let w = random_nonempty(rng, n, size.max(1));
    w.mul(&w.permutation().inverse().positive_word())
}

/// A seeded element of the subgroup; `size` controls the length of the
/// random words the construction starts from.
pub fn sample(id: SubgroupId, n: usize, size: usize, seed: u64) -> Result<BraidWord> {
    if !id.supports_sample() {
        return Err(Error::Unsupported {
            id: id.token(),
            what: "sample",
        });
    }
    if n < 2 {
        return Err(Error::OutOfRange(format!("sampling in B_{n}")));
    }
    let mut rng = rng_for(seed);
    let size = size.max(1);
    let w = match id {
        SubgroupId::Commutator => {
            let factors = rng.gen_range(1..=2);
            let mut acc = BraidWord::identity(n);
            for _ in 0..factors {
                let a = random_nonempty(&mut rng, n, size.div_ceil(2));
                let b = random_nonempty(&mut rng, n, size.div_ceil(2));
                acc = acc.mul(&BraidWord::commutator(&a, &b)?);
            }
            acc
        }
        SubgroupId::Pure => pure_sample(&mut rng, n, size),
        SubgroupId::PureCommutatorSampled => {
            let a = pure_sample(&mut rng, n, size.div_ceil(2));
            let b = pure_sample(&mut rng, n, size.div_ceil(2));
            BraidWord::commutator(&a, &b)?
        }
        SubgroupId::KerH4 => {
            require_h4(n)?;
            let core = BraidWord::new(4, vec![1, -3])?;
            let factors = rng.gen_range(1..=3);
            let mut acc = BraidWord::identity(4);
            for _ in 0..factors {
                let len = rng.gen_range(0..=size);
                let g = BraidWord::random(&mut rng, 4, len);
                let c = if rng.gen_bool(0.5) {
                    core.clone()
                } else {
                    core.inverse()
                };
                acc = acc.mul(&g.conjugate_by(&c)?);
            }
            acc
        }
        SubgroupId::ShepperdSampled => {
            if n < 3 {
                return Err(Error::OutOfRange(format!("Shepperd subgroup of B_{n}")));
            }
            let len = rng.gen_range(1..=size);
            let top = n as i32;
            let letters: Vec<i32> = (0..len)
                .map(|_| {
                    let i = rng.gen_range(1..=top);
                    if rng.gen_bool(0.5) {
                        i
                    } else {
                        -i
                    }
                })
                .collect();
            shepperd_word(n, &letters)?
        }
        SubgroupId::Brunnian | SubgroupId::BurauKernel => unreachable!(),
    };
    Ok(w.free_reduce())
}
