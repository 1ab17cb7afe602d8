//! Balanced intervals under random colorings.
//!
//! Discrete model: `m` of `m + n` equally spaced points are red, chosen
//! uniformly. Continuous model: `m` red and `n` blue points drawn
//! independently and uniformly from `[0, 1]`.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{prefix_sums, Color};

/// Point counts of the smallest and largest balanced index intervals.
///
/// Both come from the prefix sums: an interval is balanced iff its two
/// bounding prefix values agree, so the largest spans the first and last
/// occurrence of some value and the smallest spans two consecutive ones.
pub fn smallest_largest_balanced(colors: &[Color]) -> Result<(usize, usize)> {
    let has_red = colors.contains(&Color::Red);
    let has_blue = colors.contains(&Color::Blue);
    if !(has_red && has_blue) {
        return Err(Error::MonochromaticInput);
    }
    let len = colors.len();
    let prefix = prefix_sums(colors);
    let offset = len as i64;
    let mut first = vec![usize::MAX; 2 * len + 1];
    let mut last = vec![usize::MAX; 2 * len + 1];
    let mut smallest = usize::MAX;
    let mut largest = 0;
    for (i, &s) in prefix.iter().enumerate() {
        let slot = (s + offset) as usize;
        if last[slot] != usize::MAX {
            smallest = smallest.min(i - last[slot]);
        }
        if first[slot] == usize::MAX {
            first[slot] = i;
        } else {
            largest = largest.max(i - first[slot]);
        }
        last[slot] = i;
    }
    Ok((smallest, largest))
}

/// At least three blue points before the first red, after the last red, and
/// between every two consecutive reds.
pub fn event_e(colors: &[Color]) -> bool {
    let mut run = 0usize;
    let mut seen_red = false;
    for &c in colors {
        match c {
            Color::Blue => run += 1,
            Color::Red => {
                if run < 3 {
                    return false;
                }
                run = 0;
                seen_red = true;
            }
        }
    }
    seen_red && run >= 3
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiscreteTrial {
    pub m: usize,
    pub n: usize,
    pub t_stat: usize,
    pub s_stat: usize,
    pub event_e: bool,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContinuousTrial {
    pub m: usize,
    pub n: usize,
    pub t_stat: usize,
    pub s_stat: usize,
    pub event_e: bool,
    /// Shortest balanced span `c_j - c_i`.
    pub m_len: f64,
    /// Longest balanced interval, as the supremum over intervals realizing a
    /// balanced window: it may reach the neighbors outside the window, or the
    /// ends of `[0, 1]`.
    pub l_len: f64,
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn discrete_coloring(m: usize, n: usize, rng: &mut ChaCha8Rng) -> Vec<Color> {
    let mut colors = vec![Color::Blue; m + n];
    for i in rand::seq::index::sample(rng, m + n, m) {
        colors[i] = Color::Red;
    }
    colors
}

fn check_counts(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParams(format!("need m, n >= 1 (m = {m}, n = {n})")));
    }
    Ok(())
}

/// The random coloring behind `sample_discrete(m, n, seed)`.
pub fn sample_discrete_coloring(m: usize, n: usize, seed: u64) -> Result<Vec<Color>> {
    check_counts(m, n)?;
    Ok(discrete_coloring(m, n, &mut rng_for(seed)))
}

pub fn sample_discrete(m: usize, n: usize, seed: u64) -> Result<DiscreteTrial> {
    let colors = sample_discrete_coloring(m, n, seed)?;
    let (t_stat, s_stat) = smallest_largest_balanced(&colors)?;
    Ok(DiscreteTrial { m, n, t_stat, s_stat, event_e: event_e(&colors) })
}

/// `(shortest, longest)` balanced interval lengths of colored points in
/// `[0, 1]`.
pub fn continuous_lengths(points: &[(f64, Color)]) -> Result<(f64, f64)> {
    if points.iter().any(|&(x, _)| !(0.0..=1.0).contains(&x)) {
        return Err(Error::InvalidParams("coordinates must lie in [0, 1]".into()));
    }
    let mut sorted = points.to_vec();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
    let colors: Vec<Color> = sorted.iter().map(|p| p.1).collect();
    smallest_largest_balanced(&colors)?;

    // Balanced windows contain an adjacent opposite pair, so the shortest
    // span is the closest such pair.
    let shortest = sorted
        .windows(2)
        .filter(|w| w[0].1 != w[1].1)
        .map(|w| w[1].0 - w[0].0)
        .fold(f64::INFINITY, f64::min);

    // Window of points a+1..=b (1-based) is balanced iff s_a == s_b; its
    // supremal length is c_{b+1} - c_a with c_0 = 0 and c_{N+1} = 1.
    let len = sorted.len();
    let prefix = prefix_sums(&colors);
    let coord = |k: usize| match k {
        0 => 0.0,
        k if k > len => 1.0,
        k => sorted[k - 1].0,
    };
    let offset = len as i64;
    let mut first = vec![usize::MAX; 2 * len + 1];
    let mut longest: f64 = 0.0;
    for (b, &s) in prefix.iter().enumerate() {
        let slot = (s + offset) as usize;
        if first[slot] == usize::MAX {
            first[slot] = b;
        } else {
            longest = longest.max(coord(b + 1) - coord(first[slot]));
        }
    }
    Ok((shortest, longest))
}

/// The sorted random points behind `sample_continuous(m, n, seed)`.
pub fn sample_continuous_points(m: usize, n: usize, seed: u64) -> Result<Vec<(f64, Color)>> {
    check_counts(m, n)?;
    let mut rng = rng_for(seed);
    let mut points: Vec<(f64, Color)> = Vec::with_capacity(m + n);
    points.extend((0..m).map(|_| (rng.random::<f64>(), Color::Red)));
    points.extend((0..n).map(|_| (rng.random::<f64>(), Color::Blue)));
    points.sort_by(|a, b| a.0.total_cmp(&b.0));
    Ok(points)
}

pub fn sample_continuous(m: usize, n: usize, seed: u64) -> Result<ContinuousTrial> {
    let points = sample_continuous_points(m, n, seed)?;
    let (m_len, l_len) = continuous_lengths(&points)?;
    let colors: Vec<Color> = points.iter().map(|p| p.1).collect();
    let (t_stat, s_stat) = smallest_largest_balanced(&colors)?;
    Ok(ContinuousTrial { m, n, t_stat, s_stat, event_e: event_e(&colors), m_len, l_len })
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

fn check_e_params(m: usize, n: usize) -> Result<()> {
    if m == 0 || n <= 3 * (m + 2) {
        return Err(Error::InvalidParams(format!("need m >= 1 and n > 3(m + 2) (m = {m}, n = {n})")));
    }
    Ok(())
}

/// `P(E) = C(n - 2m - 3, m) / C(m + n, m)` as an exact fraction.
pub fn prob_e_exact(m: usize, n: usize) -> Result<BigRational> {
    check_e_params(m, n)?;
    let favorable = binomial(n - 2 * m - 3, m);
    let total = binomial(m + n, m);
    Ok(BigRational::new(favorable.into(), total.into()))
}

/// Above this many red points `P(E)` is evaluated through log-gamma instead
/// of exact big-integer binomials.
pub const EXACT_RED_LIMIT: usize = 2000;

/// `P(E)` as a float, from the exact fraction for `m <= EXACT_RED_LIMIT` and
/// through log-gamma beyond.
pub fn prob_e_closed_form(m: usize, n: usize) -> Result<f64> {
    check_e_params(m, n)?;
    if m <= EXACT_RED_LIMIT {
        let exact = prob_e_exact(m, n)?;
        return exact.to_f64().ok_or_else(|| Error::InvalidParams("ratio not representable".into()));
    }
    use statrs::function::factorial::ln_binomial;
    let log_ratio = ln_binomial((n - 2 * m - 3) as u64, m as u64) - ln_binomial((m + n) as u64, m as u64);
    Ok(log_ratio.exp())
}

/// `max(0, 1 - m (3m + 3) / (n + 1))`.
pub fn prob_e_lower_bound(m: usize, n: usize) -> Result<f64> {
    check_e_params(m, n)?;
    let (m, n) = (m as f64, n as f64);
    Ok((1.0 - m * (3.0 * m + 3.0) / (n + 1.0)).max(0.0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Discrete,
    Continuous,
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::Discrete => "discrete",
            Model::Continuous => "continuous",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrialRecord {
    pub index: u64,
    pub t_stat: usize,
    pub s_stat: usize,
    pub event_e: bool,
    pub m_len: Option<f64>,
    pub l_len: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Stat {
    pub mean: f64,
    pub min: f64,
    pub max: f64,
}

impl Stat {
    fn of(values: impl Iterator<Item = f64>) -> Option<Stat> {
        let mut count = 0usize;
        let mut sum = 0.0;
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for v in values {
            count += 1;
            sum += v;
            min = min.min(v);
            max = max.max(v);
        }
        (count > 0).then(|| Stat { mean: sum / count as f64, min, max })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Summary {
    pub model: Model,
    pub m: usize,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub t_stat: Stat,
    pub s_stat: Stat,
    pub m_len: Option<Stat>,
    pub l_len: Option<Stat>,
    /// Fraction of trials with largest balanced interval of 2 points.
    pub p_s_eq_2: f64,
    pub p_e: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Experiment {
    pub records: Vec<TrialRecord>,
    pub summary: Summary,
}

/// Seed of trial `index`; trials are independent of evaluation order.
pub fn trial_seed(seed: u64, index: u64) -> u64 {
    seed ^ index
}

fn run_trial(model: Model, m: usize, n: usize, seed: u64, index: u64) -> Result<TrialRecord> {
    let s = trial_seed(seed, index);
    Ok(match model {
        Model::Discrete => {
            let t = sample_discrete(m, n, s)?;
            TrialRecord { index, t_stat: t.t_stat, s_stat: t.s_stat, event_e: t.event_e, m_len: None, l_len: None }
        }
        Model::Continuous => {
            let t = sample_continuous(m, n, s)?;
            TrialRecord {
                index,
                t_stat: t.t_stat,
                s_stat: t.s_stat,
                event_e: t.event_e,
                m_len: Some(t.m_len),
                l_len: Some(t.l_len),
            }
        }
    })
}

/// Runs `trials` independent trials in parallel; the result depends only on
/// the arguments.
pub fn run_experiment(model: Model, m: usize, n: usize, trials: usize, seed: u64) -> Result<Experiment> {
    check_counts(m, n)?;
    if trials == 0 {
        return Err(Error::InvalidParams("need at least one trial".into()));
    }
    let records = (0..trials as u64)
        .into_par_iter()
        .map(|i| run_trial(model, m, n, seed, i))
        .collect::<Result<Vec<_>>>()?;
    let count = records.len() as f64;
    let summary = Summary {
        model,
        m,
        n,
        trials,
        seed,
        t_stat: Stat::of(records.iter().map(|r| r.t_stat as f64)).expect("trials >= 1"),
        s_stat: Stat::of(records.iter().map(|r| r.s_stat as f64)).expect("trials >= 1"),
        m_len: Stat::of(records.iter().filter_map(|r| r.m_len)),
        l_len: Stat::of(records.iter().filter_map(|r| r.l_len)),
        p_s_eq_2: records.iter().filter(|r| r.s_stat == 2).count() as f64 / count,
        p_e: records.iter().filter(|r| r.event_e).count() as f64 / count,
    };
    Ok(Experiment { records, summary })
}

impl Experiment {
    /// One row per trial, then a summary block of `stat,value` rows.
    pub fn to_csv(&self, summary_only: bool) -> String {
        let mut out = String::new();
        let continuous = self.summary.model == Model::Continuous;
        if !summary_only {
            out.push_str("trial,t,s,event_e");
            if continuous {
                out.push_str(",m_len,l_len");
            }
            out.push('\n');
            for r in &self.records {
                let _ = write!(out, "{},{},{},{}", r.index, r.t_stat, r.s_stat, u8::from(r.event_e));
                if let (Some(a), Some(b)) = (r.m_len, r.l_len) {
                    let _ = write!(out, ",{a},{b}");
                }
                out.push('\n');
            }
        }
        let s = &self.summary;
        out.push_str("summary,model,m,n,trials,seed,mean_t,min_t,max_t,mean_s,min_s,max_s,p_s_eq_2,p_e");
        if continuous {
            out.push_str(",mean_m_len,min_m_len,max_m_len,mean_l_len,min_l_len,max_l_len");
        }
        out.push('\n');
        let _ = write!(
            out,
            "summary,{},{},{},{},{},{},{},{},{},{},{},{},{}",
            s.model.name(),
            s.m,
            s.n,
            s.trials,
            s.seed,
            s.t_stat.mean,
            s.t_stat.min,
            s.t_stat.max,
            s.s_stat.mean,
            s.s_stat.min,
            s.s_stat.max,
            s.p_s_eq_2,
            s.p_e
        );
        if let (Some(a), Some(b)) = (s.m_len, s.l_len) {
            let _ = write!(out, ",{},{},{},{},{},{}", a.mean, a.min, a.max, b.mean, b.min, b.max);
        }
        out.push('\n');
        out
    }
}
