//! `braid bench`: seeded handle-reduction workload.

use std::fmt;
use std::time::Instant;

use braid_core::order::handle_reduce_traced;
use braid_core::{BraidWord, Result, SigmaSign};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub n: usize,
    pub len: usize,
    pub count: usize,
    pub seed: u64,
    pub budget: u64,
}

/// Everything except `words_per_sec` is a deterministic function of the config.
#[derive(Debug, Clone)]
pub struct BenchReport {
    pub config: BenchConfig,
    pub total_steps: u64,
    pub max_steps: u64,
    pub max_intermediate_len: usize,
    pub total_reduced_len: usize,
    pub positive: usize,
    pub negative: usize,
    pub trivial: usize,
    pub checksum: u64,
    pub words_per_sec: f64,
}

impl BenchReport {
    pub fn mean_steps(&self) -> f64 {
        if self.config.count == 0 {
            0.0
        } else {
            self.total_steps as f64 / self.config.count as f64
        }
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(f, "n={}", c.n)?;
        writeln!(f, "len={}", c.len)?;
        writeln!(f, "count={}", c.count)?;
        writeln!(f, "seed={}", c.seed)?;
        writeln!(f, "total_steps={}", self.total_steps)?;
        writeln!(f, "mean_steps={:.3}", self.mean_steps())?;
        writeln!(f, "max_steps={}", self.max_steps)?;
        writeln!(f, "max_intermediate_len={}", self.max_intermediate_len)?;
        writeln!(f, "total_reduced_len={}", self.total_reduced_len)?;
        writeln!(f, "positive={}", self.positive)?;
        writeln!(f, "negative={}", self.negative)?;
        writeln!(f, "trivial={}", self.trivial)?;
        writeln!(f, "checksum={:016x}", self.checksum)?;
        write!(f, "words_per_sec={:.1}", self.words_per_sec)
    }
}

/// The benchmark workload: `count` uniform words of length `len` in `B_n`.
pub fn workload(n: usize, len: usize, count: usize, seed: u64) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| BraidWord::random(&mut rng, n, len))
        .collect()
}

fn fnv(mut h: u64, letters: &[i32]) -> u64 {
    for &l in letters {
        for b in l.to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x100_0000_01b3);
        }
    }
    h ^= 0xff;
    h.wrapping_mul(0x100_0000_01b3)
}

pub fn run(cfg: &BenchConfig) -> Result<BenchReport> {
    let words = workload(cfg.n, cfg.len, cfg.count, cfg.seed);
    let mut report = BenchReport {
        config: cfg.clone(),
        total_steps: 0,
        max_steps: 0,
        max_intermediate_len: 0,
        total_reduced_len: 0,
        positive: 0,
        negative: 0,
        trivial: 0,
        checksum: 0xcbf2_9ce4_8422_2325,
        words_per_sec: 0.0,
    };
    let start = Instant::now();
    for w in &words {
        let r = handle_reduce_traced(w, cfg.budget)?;
        report.total_steps += r.steps;
        report.max_steps = report.max_steps.max(r.steps);
        report.max_intermediate_len = report.max_intermediate_len.max(r.max_len);
        report.total_reduced_len += r.word.len();
        match r.sign() {
            SigmaSign::Positive(_) => report.positive += 1,
            SigmaSign::Negative(_) => report.negative += 1,
            SigmaSign::Trivial => report.trivial += 1,
        }
        report.checksum = fnv(report.checksum, r.word.letters());
    }
    let secs = start.elapsed().as_secs_f64();
    report.words_per_sec = if secs > 0.0 {
        words.len() as f64 / secs
    } else {
        0.0
    };
    Ok(report)
}
