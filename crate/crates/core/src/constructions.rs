//! Explicit range systems that balance every bicoloring of a family, each
//! returned with a checked certificate.

use crate::error::{Error, Result};
use crate::gabriel::{gabriel_graph, spanning_tree};
use crate::model::{BicoloringFamily, ColorCount, GSur, PointSet, Range};

/// Which construction to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Adjacent,
    Size2k { k: usize },
    MRestricted { m: usize },
    Balls,
    Boxes,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Adjacent => "adjacent",
            Method::Size2k { .. } => "size2k",
            Method::MRestricted { .. } => "m-restricted",
            Method::Balls => "balls",
            Method::Boxes => "boxes",
        }
    }
}

pub fn construct(method: Method, ps: &PointSet, fam: &BicoloringFamily) -> Result<GSur> {
    match method {
        Method::Adjacent => consecutive_interval_gsur(ps, fam),
        Method::Size2k { k } => size2k_interval_gsur(ps, fam, k),
        Method::MRestricted { m } => m_restricted_gsur(ps, fam, m),
        Method::Balls => ball_gsur(ps, fam),
        Method::Boxes => box_gsur(ps, fam),
    }
}

fn require_line(ps: &PointSet) -> Result<()> {
    if ps.dim() != 1 {
        return Err(Error::Dimension { expected: 1, found: ps.dim() });
    }
    Ok(())
}

fn adjacent_pairs(points: usize) -> Vec<Range> {
    (0..points - 1).map(|i| Range::IndexInterval { lo: i, hi: i + 1 }).collect()
}

/// The `n - 1` intervals `[p_i, p_{i+1}]`. Some adjacent pair always has
/// opposite colors, so this balances every bicoloring.
pub fn consecutive_interval_gsur(ps: &PointSet, fam: &BicoloringFamily) -> Result<GSur> {
    require_line(ps)?;
    GSur::certify(adjacent_pairs(ps.len()), ps, fam)
}

/// Color counts of each bicoloring against the size-2k threshold
/// `floor(n / 2k + 1) * (k - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdReport {
    pub k: usize,
    pub threshold: usize,
    pub counts: Vec<ColorCount>,
    /// Both colors strictly exceed the threshold.
    pub qualifying: Vec<bool>,
}

impl ThresholdReport {
    pub fn new(fam: &BicoloringFamily, k: usize) -> Result<ThresholdReport> {
        if k == 0 {
            return Err(Error::InvalidParams("k must be positive".into()));
        }
        let threshold = size2k_threshold(fam.n(), k);
        let counts: Vec<ColorCount> = fam
            .iter()
            .map(|b| ColorCount { red: b.red_count(), blue: b.blue_count() })
            .collect();
        let qualifying = counts
            .iter()
            .map(|c| c.red > threshold && c.blue > threshold)
            .collect();
        Ok(ThresholdReport { k, threshold, counts, qualifying })
    }

    pub fn failing(&self) -> Vec<usize> {
        self.qualifying
            .iter()
            .enumerate()
            .filter_map(|(i, &q)| (!q).then_some(i))
            .collect()
    }
}

pub fn size2k_threshold(n: usize, k: usize) -> usize {
    (n / (2 * k) + 1) * (k - 1)
}

/// Sliding windows `[p_j, p_{j+2k-1}]` of exactly `2k` points.
///
/// Refuses families with a bicoloring at or below the color threshold, since
/// for those no window is guaranteed to be balanced.
pub fn size2k_interval_gsur(ps: &PointSet, fam: &BicoloringFamily, k: usize) -> Result<GSur> {
    require_line(ps)?;
    if k == 0 || ps.len() < 2 * k {
        return Err(Error::InvalidParams(format!(
            "size-2k windows need 1 <= k and 2k <= n (k = {k}, n = {})",
            ps.len()
        )));
    }
    let report = ThresholdReport::new(fam, k)?;
    let failing = report.failing();
    if !failing.is_empty() {
        return Err(Error::NonQualifyingBicoloring(failing));
    }
    let width = 2 * k;
    let ranges = (0..=ps.len() - width)
        .map(|j| Range::IndexInterval { lo: j, hi: j + width - 1 })
        .collect();
    GSur::certify(ranges, ps, fam)
}

/// Adjacent pairs among the first `n - m + 1` points, valid for bicolorings
/// with at least `m` points of each color. When `2m = n` the single full
/// interval suffices.
pub fn m_restricted_gsur(ps: &PointSet, fam: &BicoloringFamily, m: usize) -> Result<GSur> {
    require_line(ps)?;
    let n = ps.len();
    if m == 0 || 2 * m > n {
        return Err(Error::InvalidParams(format!("need 1 <= m <= n/2 (m = {m}, n = {n})")));
    }
    let short: Vec<usize> = fam
        .iter()
        .enumerate()
        .filter(|(_, b)| b.red_count() < m || b.blue_count() < m)
        .map(|(i, _)| i)
        .collect();
    if !short.is_empty() {
        return Err(Error::NotMRestricted { m, indices: short });
    }
    let ranges = if 2 * m == n {
        vec![Range::IndexInterval { lo: 0, hi: n - 1 }]
    } else {
        adjacent_pairs(n - m + 1)
    };
    GSur::certify(ranges, ps, fam)
}

/// Diametral balls of the edges of a spanning tree of the Gabriel graph.
pub fn ball_gsur(ps: &PointSet, fam: &BicoloringFamily) -> Result<GSur> {
    let gg = gabriel_graph(ps);
    let tree = spanning_tree(&gg.graph)?;
    let ranges = tree
        .edges()
        .iter()
        .map(|&(a, b)| Range::diametral_ball(ps.point(a), ps.point(b)))
        .collect();
    GSur::certify(ranges, ps, fam)
}

/// Slabs between consecutive points along the first axis with pairwise
/// distinct coordinates, spanning the full extent of every other axis.
/// In one dimension these are the adjacent coordinate intervals.
pub fn box_gsur(ps: &PointSet, fam: &BicoloringFamily) -> Result<GSur> {
    let d = ps.dim();
    let axis = (0..d)
        .find(|&a| {
            let mut vals: Vec<f64> = ps.iter().map(|p| p[a]).collect();
            vals.sort_by(f64::total_cmp);
            vals.windows(2).all(|w| w[0] != w[1])
        })
        .ok_or(Error::NoSeparatingAxis)?;

    let lo_all: Vec<f64> = (0..d).map(|a| ps.iter().map(|p| p[a]).fold(f64::INFINITY, f64::min)).collect();
    let hi_all: Vec<f64> = (0..d).map(|a| ps.iter().map(|p| p[a]).fold(f64::NEG_INFINITY, f64::max)).collect();
    let mut along: Vec<f64> = ps.iter().map(|p| p[axis]).collect();
    along.sort_by(f64::total_cmp);

    let ranges = along
        .windows(2)
        .map(|w| {
            if d == 1 {
                Range::CoordInterval { lo: w[0], hi: w[1] }
            } else {
                let mut lo = lo_all.clone();
                let mut hi = hi_all.clone();
                lo[axis] = w[0];
                hi[axis] = w[1];
                Range::Box { lo, hi }
            }
        })
        .collect();
    GSur::certify(ranges, ps, fam)
}
