//! Generators for the extremal instance families: instances whose optimal
//! G-SUR size is known, plus the size-2k threshold counterexample.

use crate::error::{Error, Result};
use crate::model::{Bicoloring, BicoloringFamily, Color, PointSet};
use crate::solver::{reduce_from_set_cover, SetCoverInstance};

/// How an expected optimum is known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Matching lower-bound family and construction.
    Theorem,
    /// Exhaustive search.
    BruteForce,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NamedInstance {
    pub name: String,
    pub ps: PointSet,
    pub fam: BicoloringFamily,
    pub expected_optimum: Option<(usize, Provenance)>,
}

fn coloring(colors: Vec<Color>) -> Bicoloring {
    Bicoloring::new(colors).expect("generators emit both colors")
}

fn red_block(n: usize, reds: std::ops::Range<usize>) -> Bicoloring {
    coloring((0..n).map(|i| if reds.contains(&i) { Color::Red } else { Color::Blue }).collect())
}

/// Points `1..n` with `B_i` coloring the first `i` points red, `1 <= i < n`.
/// Any interval G-SUR needs `n - 1` ranges.
pub fn gen_prefix_family(n: usize) -> Result<NamedInstance> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("prefix family needs n >= 2, got {n}")));
    }
    let fam = BicoloringFamily::new((1..n).map(|i| red_block(n, 0..i)).collect())?;
    Ok(NamedInstance {
        name: format!("prefix-n{n}"),
        ps: PointSet::integer_line(n)?,
        fam,
        expected_optimum: Some((n - 1, Provenance::Theorem)),
    })
}

/// The `n - m` m-restricted bicolorings that force `n - m` intervals.
///
/// For `i <= n - 2m + 1` the leftmost `m + i - 1` points are red; beyond
/// that the red block `{i - n + 2m, ..., i + m - 1}` (1-based) slides right,
/// leaving `m` blue points.
pub fn gen_m_restricted_family(n: usize, m: usize) -> Result<NamedInstance> {
    if m == 0 || 2 * m >= n {
        return Err(Error::InvalidParams(format!("need 1 <= m < n/2 (n = {n}, m = {m})")));
    }
    let members = (1..=n - m)
        .map(|i| {
            if i <= n - 2 * m + 1 {
                red_block(n, 0..m + i - 1)
            } else {
                // 1-based {i - n + 2m ..= i + m - 1} as a 0-based half-open range.
                red_block(n, i + 2 * m - n - 1..i + m - 1)
            }
        })
        .collect();
    Ok(NamedInstance {
        name: format!("m-restricted-n{n}-m{m}"),
        ps: PointSet::integer_line(n)?,
        fam: BicoloringFamily::new(members)?,
        expected_optimum: Some((n - m, Provenance::Theorem)),
    })
}

/// `3k - 1` points colored `B^{k-1} R^{k+1} B^{k-1}`: blue sits exactly at the
/// size-2k threshold and no window of `2k` points is balanced.
pub fn gen_2k_tightness(k: usize) -> Result<NamedInstance> {
    if k < 2 {
        return Err(Error::InvalidParams(format!("tightness example needs k >= 2, got {k}")));
    }
    let n = 3 * k - 1;
    Ok(NamedInstance {
        name: format!("2k-tight-k{k}"),
        ps: PointSet::integer_line(n)?,
        fam: BicoloringFamily::new(vec![red_block(n, k - 1..2 * k)])?,
        expected_optimum: None,
    })
}

/// The prefix family on points `i * direction`, `i = 1..n`, in `R^d`.
/// A ball meets the line in one interval, so ball G-SURs also need `n - 1`.
pub fn gen_embedded_line(n: usize, d: usize, direction: &[f64]) -> Result<NamedInstance> {
    if d < 2 {
        return Err(Error::InvalidParams(format!("embedding needs d >= 2, got {d}")));
    }
    if direction.len() != d {
        return Err(Error::Dimension { expected: d, found: direction.len() });
    }
    if direction.iter().all(|&x| x == 0.0) || direction.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidParams("direction must be a finite nonzero vector".into()));
    }
    let line = gen_prefix_family(n)?;
    let points = (1..=n)
        .map(|i| direction.iter().map(|x| i as f64 * x).collect())
        .collect();
    Ok(NamedInstance {
        name: format!("embedded-line-n{n}-d{d}"),
        ps: PointSet::new(d, points)?,
        fam: line.fam,
        expected_optimum: Some((n - 1, Provenance::Theorem)),
    })
}

/// Reduced instance of a set system; its optimum equals the minimum set
/// cover, computed here by brute force for small systems.
pub fn gen_from_set_cover(sc: &SetCoverInstance) -> NamedInstance {
    let ro = reduce_from_set_cover(sc);
    let expected_optimum = (sc.subsets().len() <= 20)
        .then(|| (sc.min_cover_brute_force().len(), Provenance::BruteForce));
    NamedInstance {
        name: format!("set-cover-u{}-m{}", sc.universe_size(), sc.subsets().len()),
        ps: ro.ps,
        fam: ro.fam,
        expected_optimum,
    }
}
