//! Computations in the Artin braid groups `B_n`.
//!
//! * [`word`]: braid words, permutations, crossing counts, shifts, strand removal.
//! * [`order`]: handle reduction, σ-signs, the word problem and the Dehornoy order.
//! * [`garside`]: half twists, centralizer elements, Shepperd generators, `h: B_4 → B_3`.
//! * [`laurent`], [`burau`]: the Burau representation over `ℤ[t, t⁻¹]`.
//! * [`subgroups`]: membership tests and samplers for normal subgroups.
//! * [`density`]: density witnesses and least-element checks.

pub mod burau;
pub mod density;
pub mod error;
pub mod garside;
pub mod laurent;
pub mod order;
pub mod subgroups;
pub mod word;

pub use burau::{burau_det, burau_matrix, in_burau_kernel, BurauMatrix};
pub use density::{
    between, smaller_positive, verify_dense, verify_least, DenseSummary, LeastSummary,
    WitnessReport,
};
pub use error::{Error, Result};
pub use garside::{CandidateFamily, CentralizerForm, CentralizerParams};
pub use laurent::LaurentPoly;
pub use order::{compare, handle_reduce, is_trivial, sigma_sign, SigmaSign, DEFAULT_STEP_BUDGET};
pub use subgroups::{decide, sample, SubgroupId};
pub use word::{BraidWord, CrossingTable, Permutation, WordStyle};
