//! Constructive density and discreteness checks.
//!
//! For a positive `β` in a normal subgroup `N`, every commutator
//! `β c β⁻¹ c⁻¹` or `β c⁻¹ β⁻¹ c` stays in `N`. Searching a fixed pool of
//! short words `c` for one whose commutator lands strictly between `1` and
//! `β` produces explicit density witnesses; `f < f·γ < g` then follows by
//! left invariance with `β = f⁻¹g`.
//!
//! Every witness is re-validated with the comparator and the membership
//! test before it is reported.

use std::cmp::Ordering;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::order::{compare, sigma_sign, SigmaSign};
use crate::subgroups::{decide, sample, SubgroupId};
use crate::word::BraidWord;

/// Comparator invocations allowed per witness search.
pub const DEFAULT_WITNESS_BUDGET: u64 = 10_000;

/// Longest candidate word in the commutator pool.
pub const POOL_LENGTH_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessReport {
    pub found: bool,
    pub witness: Option<BraidWord>,
    /// Commutator candidates examined (both orientations count).
    pub candidates_tried: u64,
    /// Comparator invocations spent.
    pub comparisons: u64,
    pub budget: u64,
}

impl WitnessReport {
    fn failed(candidates_tried: u64, comparisons: u64, budget: u64) -> Self {
        WitnessReport {
            found: false,
            witness: None,
            candidates_tried,
            comparisons,
            budget,
        }
    }
}

/// Membership test used for witnesses.
///
/// Decidable subgroups use [`decide`]. `[P_n, P_n]` has no public decider;
/// there the witnesses are commutators with a member of a normal subgroup,
/// and the test checks purity together with vanishing pairwise crossing
/// counts (the abelianization of `P_n`).
pub fn contains(id: SubgroupId, w: &BraidWord) -> Result<bool> {
    match id {
        SubgroupId::PureCommutatorSampled => Ok(w.is_pure() && w.crossing_table().is_zero()),
        _ if id.supports_decide() => decide(id, w),
        _ => Err(Error::Unsupported {
            id: id.token(),
            what: "witness membership",
        }),
    }
}

fn letter_order(n: usize) -> Vec<i32> {
    (1..n as i32).flat_map(|i| [i, -i]).collect()
}

/// Deterministic commutator pool: the generators `σ_1, …, σ_{n-1}` in
/// ascending order, then freely reduced words of length 2 up to
/// [`POOL_LENGTH_CAP`] in lexicographic order.
pub fn candidate_pool(n: usize) -> Vec<BraidWord> {
    if n < 2 {
        return Vec::new();
    }
    let alphabet = letter_order(n);
    let mut pool: Vec<BraidWord> = (1..n as i32)
        .map(|i| BraidWord::new(n, vec![i]).expect("valid generator"))
        .collect();
    let mut layer: Vec<Vec<i32>> = alphabet.iter().map(|&e| vec![e]).collect();
    for _ in 2..=POOL_LENGTH_CAP {
        let mut next = Vec::new();
        for w in &layer {
            for &e in &alphabet {
                if *w.last().unwrap() != -e {
                    let mut v = w.clone();
                    v.push(e);
                    next.push(v);
                }
            }
        }
        pool.extend(
            next.iter()
                .map(|v| BraidWord::new(n, v.clone()).expect("valid letters")),
        );
        layer = next;
    }
    pool
}

/// Searches for `γ` in the subgroup with `1 < γ < β`.
pub fn smaller_positive(id: SubgroupId, beta: &BraidWord, budget: u64) -> Result<WitnessReport> {
    if !contains(id, beta)? {
        return Err(Error::Precondition(format!("β is not in {id}")));
    }
    if !sigma_sign(beta)?.is_positive() {
        return Err(Error::Precondition("β is not positive".into()));
    }
    let identity = BraidWord::identity(beta.n());
    let beta_inv = beta.inverse();
    let mut tried = 0u64;
    let mut comparisons = 0u64;
    for c in candidate_pool(beta.n()) {
        let c_inv = c.inverse();
        let orientations = [
            beta.mul(&c).mul(&beta_inv).mul(&c_inv),
            beta.mul(&c_inv).mul(&beta_inv).mul(&c),
        ];
        for gamma in orientations {
            let gamma = gamma.free_reduce();
            tried += 1;
            if gamma.is_empty() || !contains(id, &gamma)? {
                continue;
            }
            if comparisons + 2 > budget {
                return Ok(WitnessReport::failed(tried, comparisons, budget));
            }
            comparisons += 1;
            if compare(&identity, &gamma)? != Ordering::Less {
                continue;
            }
            comparisons += 1;
            if compare(&gamma, beta)? == Ordering::Less {
                return Ok(WitnessReport {
                    found: true,
                    witness: Some(gamma),
                    candidates_tried: tried,
                    comparisons,
                    budget,
                });
            }
        }
    }
    Ok(WitnessReport::failed(tried, comparisons, budget))
}

/// Searches for `h` in the subgroup with `f < h < g`, as `h = f·γ`.
pub fn between(id: SubgroupId, f: &BraidWord, g: &BraidWord, budget: u64) -> Result<WitnessReport> {
    if !contains(id, f)? || !contains(id, g)? {
        return Err(Error::Precondition(format!("endpoints must lie in {id}")));
    }
    if compare(f, g)? != Ordering::Less {
        return Err(Error::Precondition("need f < g".into()));
    }
    let beta = f.inverse().concat(g)?.free_reduce();
    let mut report = smaller_positive(id, &beta, budget)?;
    if let Some(gamma) = report.witness.take() {
        let h = f.mul(&gamma).free_reduce();
        report.comparisons += 2;
        let valid = compare(f, &h)? == Ordering::Less
            && compare(&h, g)? == Ordering::Less
            && contains(id, &h)?;
        if valid {
            report.witness = Some(h);
        } else {
            report.found = false;
        }
    }
    Ok(report)
}

/// Outcome of a density run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseSummary {
    pub id: SubgroupId,
    pub n: usize,
    pub trials: usize,
    pub successes: usize,
    /// Budget exhaustions; never a disproof.
    pub failures: usize,
    pub total_candidates: u64,
    pub total_comparisons: u64,
    pub first_failure: Option<(BraidWord, BraidWord)>,
}

impl DenseSummary {
    pub fn success_rate(&self) -> f64 {
        if self.trials == 0 {
            1.0
        } else {
            self.successes as f64 / self.trials as f64
        }
    }

    pub fn all_succeeded(&self) -> bool {
        self.successes == self.trials
    }
}

impl fmt::Display for DenseSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "subgroup={}", self.id)?;
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "trials={}", self.trials)?;
        writeln!(f, "successes={}", self.successes)?;
        writeln!(f, "failures={}", self.failures)?;
        writeln!(f, "success_rate={:.4}", self.success_rate())?;
        writeln!(f, "candidates={}", self.total_candidates)?;
        write!(f, "comparisons={}", self.total_comparisons)?;
        if let Some((a, b)) = &self.first_failure {
            write!(f, "\nfirst_failure={a} | {b}")?;
        }
        Ok(())
    }
}

/// Starting word length handed to the samplers by the verifiers.
pub fn default_sample_size(id: SubgroupId) -> usize {
    match id {
        SubgroupId::Commutator => 6,
        SubgroupId::Pure => 8,
        SubgroupId::PureCommutatorSampled => 3,
        SubgroupId::KerH4 => 4,
        SubgroupId::ShepperdSampled => 3,
        SubgroupId::Brunnian | SubgroupId::BurauKernel => 0,
    }
}

fn trial_seed(seed: u64, trial: u64, slot: u64) -> u64 {
    // splitmix-style mixing keeps neighbouring trials independent
    let mut z = seed
        .wrapping_add(trial.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(slot.wrapping_mul(0xD1B5_4A32_D192_ED03));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Draws two distinct subgroup elements for `trial`, ordered `f < g`.
fn sample_pair(id: SubgroupId, n: usize, seed: u64, trial: u64) -> Result<(BraidWord, BraidWord)> {
    let size = default_sample_size(id);
    for attempt in 0..64u64 {
        let f = sample(id, n, size, trial_seed(seed, trial, 2 * attempt))?;
        let g = sample(id, n, size, trial_seed(seed, trial, 2 * attempt + 1))?;
        match compare(&f, &g)? {
            Ordering::Less => return Ok((f, g)),
            Ordering::Greater => return Ok((g, f)),
            Ordering::Equal => continue,
        }
    }
    Err(Error::Precondition(format!(
        "sampler for {id} keeps returning equal elements"
    )))
}

/// Runs [`between`] on explicit pairs (each ordered before use).
pub fn verify_dense_pairs(
    id: SubgroupId,
    n: usize,
    pairs: &[(BraidWord, BraidWord)],
    budget: u64,
) -> Result<DenseSummary> {
    let results: Vec<Result<(WitnessReport, (BraidWord, BraidWord))>> = pairs
        .par_iter()
        .map(|(a, b)| {
            let (f, g) = match compare(a, b)? {
                Ordering::Greater => (b.clone(), a.clone()),
                _ => (a.clone(), b.clone()),
            };
            Ok((between(id, &f, &g, budget)?, (f, g)))
        })
        .collect();
    let mut summary = DenseSummary {
        id,
        n,
        trials: pairs.len(),
        successes: 0,
        failures: 0,
        total_candidates: 0,
        total_comparisons: 0,
        first_failure: None,
    };
    for r in results {
        let (report, pair) = r?;
        summary.total_candidates += report.candidates_tried;
        summary.total_comparisons += report.comparisons;
        if report.found {
            summary.successes += 1;
        } else {
            summary.failures += 1;
            summary.first_failure.get_or_insert(pair);
        }
    }
    Ok(summary)
}

/// Samples `trials` ordered pairs from the subgroup and looks for an
/// element strictly between each.
pub fn verify_dense(id: SubgroupId, n: usize, trials: usize, seed: u64) -> Result<DenseSummary> {
    verify_dense_with_budget(id, n, trials, seed, DEFAULT_WITNESS_BUDGET)
}

pub fn verify_dense_with_budget(
    id: SubgroupId,
    n: usize,
    trials: usize,
    seed: u64,
    budget: u64,
) -> Result<DenseSummary> {
    if !id.supports_sample() || contains(id, &BraidWord::identity(n)).is_err() {
        return Err(Error::Unsupported {
            id: id.token(),
            what: "density verification",
        });
    }
    if n < 3 {
        return Err(Error::OutOfRange(format!("density check in B_{n}")));
    }
    let pairs: Vec<(BraidWord, BraidWord)> = (0..trials as u64)
        .into_par_iter()
        .map(|t| sample_pair(id, n, seed, t))
        .collect::<Result<_>>()?;
    verify_dense_pairs(id, n, &pairs, budget)
}

/// Outcome of a least-element run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeastSummary {
    pub id: SubgroupId,
    pub n: usize,
    pub trials: usize,
    /// Positive samples compared against the candidate.
    pub checked: usize,
    /// Samples equal to the identity.
    pub skipped_trivial: usize,
    pub violations: usize,
    pub first_counterexample: Option<BraidWord>,
}

impl LeastSummary {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

impl fmt::Display for LeastSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "subgroup={}", self.id)?;
        writeln!(f, "n={}", self.n)?;
        writeln!(f, "trials={}", self.trials)?;
        writeln!(f, "checked={}", self.checked)?;
        writeln!(f, "skipped_trivial={}", self.skipped_trivial)?;
        write!(f, "violations={}", self.violations)?;
        if let Some(w) = &self.first_counterexample {
            write!(f, "\nfirst_counterexample={w}")?;
        }
        Ok(())
    }
}

/// Checks `candidate ≤ w` for positive sampled `w` (negative samples are
/// inverted first).
pub fn verify_least(
    id: SubgroupId,
    candidate: &BraidWord,
    n: usize,
    trials: usize,
    seed: u64,
) -> Result<LeastSummary> {
    if !id.supports_sample() {
        return Err(Error::Unsupported {
            id: id.token(),
            what: "least-element verification",
        });
    }
    if candidate.n() != n {
        return Err(Error::StrandMismatch {
            left: candidate.n(),
            right: n,
        });
    }
    let member = match contains(id, candidate) {
        Ok(b) => b,
        // H_n ⊂ P_n is the only available check for the Shepperd subgroup
        Err(Error::Unsupported { .. }) => candidate.is_pure(),
        Err(e) => return Err(e),
    };
    if !member {
        return Err(Error::Precondition(format!("candidate is not in {id}")));
    }
    let size = default_sample_size(id);
    let outcomes: Vec<Result<Option<(bool, BraidWord)>>> = (0..trials as u64)
        .into_par_iter()
        .map(|t| {
            let w = sample(id, n, size, trial_seed(seed, t, 0))?;
            let w = match sigma_sign(&w)? {
                SigmaSign::Trivial => return Ok(None),
                SigmaSign::Negative(_) => w.inverse(),
                SigmaSign::Positive(_) => w,
            };
            let ok = compare(candidate, &w)? != Ordering::Greater;
            Ok(Some((ok, w)))
        })
        .collect();
    let mut summary = LeastSummary {
        id,
        n,
        trials,
        checked: 0,
        skipped_trivial: 0,
        violations: 0,
        first_counterexample: None,
    };
    for o in outcomes {
        match o? {
            None => summary.skipped_trivial += 1,
            Some((ok, w)) => {
                summary.checked += 1;
                if !ok {
                    summary.violations += 1;
                    summary.first_counterexample.get_or_insert(w);
                }
            }
        }
    }
    Ok(summary)
}
