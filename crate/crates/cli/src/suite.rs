//! The `braid verify` suite: a fixed list of checks over seeded samples.

use std::cmp::Ordering;
use std::fmt;

use braid_core::density::{verify_dense, verify_dense_pairs, verify_least, DEFAULT_WITNESS_BUDGET};
use braid_core::garside::{centralizer_element, full_twist};
use braid_core::order::{compare, equal, is_trivial, sigma_sign};
use braid_core::subgroups::brunnian_search;
use braid_core::{
    burau_det, decide, in_burau_kernel, sample, BraidWord, CentralizerParams, LaurentPoly,
    SigmaSign, SubgroupId,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Scale factor: density checks run this many pairs, word-level checks ten times as many words.
    pub trials: usize,
    pub seed: u64,
    pub max_n: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trials: 100,
            seed: 1,
            max_n: 6,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "[{tag}] {}: {}", c.name, c.detail)?;
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "summary: {passed}/{} checks passed", self.checks.len())
    }
}

type Check = Result<String, String>;
type CheckFn = fn(&SuiteConfig) -> Check;

fn err(e: braid_core::Error) -> String {
    e.to_string()
}

pub fn relators(n: usize) -> Vec<BraidWord> {
    let mut out = Vec::new();
    for i in 1..n as i32 {
        for j in i + 1..n as i32 {
            let rel = if j - i >= 2 {
                vec![i, j, -i, -j]
            } else {
                vec![i, j, i, -j, -i, -j]
            };
            out.push(BraidWord::new(n, rel).expect("indices in range"));
        }
    }
    out
}

fn check_relations(cfg: &SuiteConfig) -> Check {
    let mut count = 0;
    for n in 2..=cfg.max_n {
        for rel in relators(n) {
            if !is_trivial(&rel).map_err(err)? {
                return Err(format!("relator {rel} in B_{n} not trivial"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} relators trivial"))
}

fn random_words(cfg: &SuiteConfig, slot: u64, count: usize, max_len: usize) -> Vec<BraidWord> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (slot << 32));
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=cfg.max_n);
            let len = rng.gen_range(0..=max_len);
            BraidWord::random(&mut rng, n, len)
        })
        .collect()
}

fn check_trichotomy(cfg: &SuiteConfig) -> Check {
    let words = random_words(cfg, 1, cfg.trials * 10, 40);
    for w in &words {
        let s = sigma_sign(w).map_err(err)?;
        if sigma_sign(&w.inverse()).map_err(err)? != s.flip() {
            return Err(format!("sign of inverse of {w} is not flipped"));
        }
        if (s == SigmaSign::Trivial) != is_trivial(w).map_err(err)? {
            return Err(format!("trivial verdicts disagree on {w}"));
        }
    }
    Ok(format!("{} words", words.len()))
}

fn check_discreteness(cfg: &SuiteConfig) -> Check {
    let words = random_words(cfg, 2, cfg.trials * 10, 20);
    let mut checked = 0;
    for w in &words {
        if w.n() < 3 {
            continue;
        }
        let w = match sigma_sign(w).map_err(err)? {
            SigmaSign::Trivial => continue,
            SigmaSign::Negative(_) => w.inverse(),
            SigmaSign::Positive(_) => w.clone(),
        };
        let s1 = BraidWord::generator(w.n(), 1, false).map_err(err)?;
        if compare(&s1, &w).map_err(err)? == Ordering::Greater {
            return Err(format!("{w} is positive and below σ1"));
        }
        checked += 1;
    }
    Ok(format!("σ1 below {checked} positive braids"))
}

fn check_centralizer(_cfg: &SuiteConfig) -> Check {
    let mut count = 0;
    for r in 3..=5 {
        for p in -2..=2 {
            for q in -2..=2 {
                let frz = CentralizerParams::frz(r, p, q);
                let c = centralizer_element(frz, r).map_err(err)?;
                for i in 1..=r - 2 {
                    let g = BraidWord::generator(r, i, false).map_err(err)?;
                    if !is_trivial(&BraidWord::commutator(&c, &g).map_err(err)?).map_err(err)? {
                        return Err(format!("{frz:?} does not commute with σ{i}"));
                    }
                }
                let back = centralizer_element(frz.converted(), r).map_err(err)?;
                if !equal(&c, &back).map_err(err)? {
                    return Err(format!("{frz:?} differs after change of variables"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} parameter sets"))
}

fn check_burau(cfg: &SuiteConfig) -> Check {
    for n in 2..=cfg.max_n.max(7) {
        for rel in relators(n) {
            if !in_burau_kernel(&rel) {
                return Err(format!("relator {rel} in B_{n} has nontrivial Burau image"));
            }
        }
    }
    let words = random_words(cfg, 3, cfg.trials * 10, 20);
    for w in &words {
        if burau_det(w) != LaurentPoly::neg_t_pow(w.exponent_sum()) {
            return Err(format!("determinant law fails for {w}"));
        }
    }
    Ok(format!("relators and {} determinants", words.len()))
}

fn check_containments(cfg: &SuiteConfig) -> Check {
    let count = cfg.trials * 5;
    let seed = cfg.seed;
    for k in 0..count as u64 {
        let s = seed.wrapping_add(k);
        let kh = sample(SubgroupId::KerH4, 4, 4, s).map_err(err)?;
        if !decide(SubgroupId::Commutator, &kh).map_err(err)? {
            return Err(format!("ker h sample {kh} not a commutator"));
        }
        let pc = sample(SubgroupId::PureCommutatorSampled, 4, 3, s).map_err(err)?;
        if !decide(SubgroupId::Commutator, &pc).map_err(err)? || !pc.is_pure() {
            return Err(format!("[P,P] sample {pc} outside [B,B] ∩ P"));
        }
        let sh = sample(SubgroupId::ShepperdSampled, 4, 3, s).map_err(err)?;
        if !sh.is_pure() {
            return Err(format!("Shepperd sample {sh} not pure"));
        }
    }
    let brunnian = brunnian_search(3, 8).map_err(err)?;
    for b in &brunnian {
        if !b.is_pure() || !decide(SubgroupId::Commutator, b).map_err(err)? {
            return Err(format!("Brunnian braid {b} outside [B,B] ∩ P"));
        }
    }
    Ok(format!(
        "{count} samples per subgroup, {} Brunnian words",
        brunnian.len()
    ))
}

fn check_least(cfg: &SuiteConfig) -> Check {
    let mut details = Vec::new();
    for n in 3..=5 {
        let cand = BraidWord::new(n, vec![1, 1]).map_err(err)?;
        let s = verify_least(SubgroupId::Pure, &cand, n, cfg.trials * 10, cfg.seed).map_err(err)?;
        if !s.passed() {
            return Err(format!("σ1² not least in P_{n}: {s}"));
        }
        details.push(format!("P_{n}:{}", s.checked));
    }
    for n in 3..=4 {
        let cand = full_twist(n - 1, n, 1).map_err(err)?;
        let s = verify_least(
            SubgroupId::ShepperdSampled,
            &cand,
            n,
            cfg.trials * 5,
            cfg.seed,
        )
        .map_err(err)?;
        if !s.passed() {
            return Err(format!("Δ² not least in H_{n}: {s}"));
        }
        details.push(format!("H_{n}:{}", s.checked));
    }
    Ok(details.join(" "))
}

fn check_dense(cfg: &SuiteConfig) -> Check {
    let mut details = Vec::new();
    for (id, n) in [
        (SubgroupId::Commutator, 3),
        (SubgroupId::Commutator, 4),
        (SubgroupId::PureCommutatorSampled, 3),
        (SubgroupId::KerH4, 4),
    ] {
        let s = verify_dense(id, n, cfg.trials, cfg.seed).map_err(err)?;
        if !s.all_succeeded() {
            return Err(format!(
                "{id} in B_{n}: {} of {} pairs failed",
                s.failures, s.trials
            ));
        }
        details.push(format!("{id}/B{n}:{}", s.successes));
    }
    let brunnian = brunnian_search(3, 8).map_err(err)?;
    let pairs: Vec<(BraidWord, BraidWord)> = brunnian
        .iter()
        .zip(brunnian.iter().skip(1))
        .take(cfg.trials)
        .filter(|(a, b)| !equal(a, b).unwrap_or(true))
        .map(|(a, b)| (a.clone(), b.clone()))
        .collect();
    let s =
        verify_dense_pairs(SubgroupId::Brunnian, 3, &pairs, DEFAULT_WITNESS_BUDGET).map_err(err)?;
    if !s.all_succeeded() {
        return Err(format!(
            "brunnian in B_3: {} of {} pairs failed",
            s.failures, s.trials
        ));
    }
    details.push(format!("brunnian/B3:{}", s.successes));
    Ok(details.join(" "))
}

/// Runs every check in a fixed order.
pub fn run_verification_suite(cfg: &SuiteConfig) -> SuiteReport {
    let checks: [(&str, CheckFn); 8] = [
        ("relations", check_relations),
        ("trichotomy", check_trichotomy),
        ("discreteness", check_discreteness),
        ("centralizer", check_centralizer),
        ("burau", check_burau),
        ("containments", check_containments),
        ("least-element", check_least),
        ("density", check_dense),
    ];
    let mut report = SuiteReport::default();
    for (name, f) in checks {
        let (passed, detail) = match f(cfg) {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        report.checks.push(CheckResult {
            name: name.to_string(),
            passed,
            detail,
        });
    }
    report
}
