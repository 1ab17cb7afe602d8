//! Point sets, bicolorings, ranges, and the balance predicates everything
//! else is built on.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative slack on squared-distance comparisons for balls.
///
/// Exact for integer-valued inputs, where the boundary case compares equal
/// numbers; absorbs rounding of radii such as `sqrt(2) / 2` otherwise.
pub const BOUNDARY_RTOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn as_char(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Color> {
        match c {
            'R' | 'r' => Some(Color::Red),
            'B' | 'b' => Some(Color::Blue),
            _ => None,
        }
    }

    /// +1 for red, -1 for blue.
    pub fn sign(self) -> i64 {
        match self {
            Color::Red => 1,
            Color::Blue => -1,
        }
    }

    pub fn flipped(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// A set of `n >= 2` pairwise distinct points in `R^d`.
///
/// One-dimensional sets are kept in strictly increasing order, so index
/// intervals address consecutive points.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    dim: usize,
    coords: Vec<f64>,
}

impl PointSet {
    pub fn new(dim: usize, points: Vec<Vec<f64>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidPointSet("dimension must be positive".into()));
        }
        if points.len() < 2 {
            return Err(Error::InvalidPointSet(format!(
                "need at least 2 points, got {}",
                points.len()
            )));
        }
        let mut coords = Vec::with_capacity(dim * points.len());
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::Dimension { expected: dim, found: p.len() });
            }
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidPointSet(format!("point {i} has a non-finite coordinate")));
            }
            coords.extend_from_slice(p);
        }
        let ps = PointSet { dim, coords };
        if dim == 1 {
            if let Some(i) = (1..ps.len()).find(|&i| ps.coords[i - 1] >= ps.coords[i]) {
                let kind = if ps.coords[i - 1] == ps.coords[i] { "duplicate" } else { "unsorted" };
                return Err(Error::InvalidPointSet(format!(
                    "{kind} line coordinates at positions {} and {i}",
                    i - 1
                )));
            }
        } else {
            let mut order: Vec<usize> = (0..ps.len()).collect();
            order.sort_by(|&a, &b| {
                ps.point(a)
                    .iter()
                    .zip(ps.point(b))
                    .map(|(x, y)| x.total_cmp(y))
                    .find(|o| o.is_ne())
                    .unwrap_or(std::cmp::Ordering::Equal)
            });
            for w in order.windows(2) {
                if ps.point(w[0]) == ps.point(w[1]) {
                    return Err(Error::InvalidPointSet(format!(
                        "points {} and {} coincide",
                        w[0].min(w[1]),
                        w[0].max(w[1])
                    )));
                }
            }
        }
        Ok(ps)
    }

    /// Points on the real line, given in strictly increasing order.
    pub fn line(coords: Vec<f64>) -> Result<Self> {
        PointSet::new(1, coords.into_iter().map(|x| vec![x]).collect())
    }

    /// The points `1, 2, ..., n` on the line.
    pub fn integer_line(n: usize) -> Result<Self> {
        PointSet::line((1..=n).map(|i| i as f64).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.dim)
    }

    pub fn to_vecs(&self) -> Vec<Vec<f64>> {
        self.iter().map(<[f64]>::to_vec).collect()
    }

    fn require_line(&self) -> Result<()> {
        if self.dim != 1 {
            return Err(Error::Dimension { expected: 1, found: self.dim });
        }
        Ok(())
    }
}

/// A red/blue assignment with both colors present.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bicoloring {
    colors: Vec<Color>,
}

impl Bicoloring {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        let red = colors.iter().filter(|&&c| c == Color::Red).count();
        if red == 0 || red == colors.len() {
            return Err(Error::InvalidBicoloring(
                "a bicoloring needs at least one red and one blue point".into(),
            ));
        }
        Ok(Bicoloring { colors })
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn get(&self, i: usize) -> Color {
        self.colors[i]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn red_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == Color::Red).count()
    }

    pub fn blue_count(&self) -> usize {
        self.len() - self.red_count()
    }
}

impl FromStr for Bicoloring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let colors = s
            .chars()
            .map(|c| {
                Color::from_char(c)
                    .ok_or_else(|| Error::InvalidBicoloring(format!("unexpected symbol {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Bicoloring::new(colors)
    }
}

impl fmt::Display for Bicoloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.colors.iter().try_for_each(|c| write!(f, "{}", c.as_char()))
    }
}

/// A nonempty list of bicolorings over the same `n` points. Duplicates are
/// allowed.
#[derive(Clone, Debug, PartialEq)]
pub struct BicoloringFamily {
    members: Vec<Bicoloring>,
}

impl BicoloringFamily {
    pub fn new(members: Vec<Bicoloring>) -> Result<Self> {
        let Some(first) = members.first() else {
            return Err(Error::InvalidBicoloring("family is empty".into()));
        };
        let n = first.len();
        if let Some(i) = members.iter().position(|b| b.len() != n) {
            return Err(Error::InvalidBicoloring(format!(
                "bicoloring {i} has length {}, expected {n}",
                members[i].len()
            )));
        }
        Ok(BicoloringFamily { members })
    }

    pub fn parse<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        let members = items
            .iter()
            .map(|s| s.as_ref().parse())
            .collect::<Result<Vec<Bicoloring>>>()?;
        BicoloringFamily::new(members)
    }

    /// Number of points each member colors.
    pub fn n(&self) -> usize {
        self.members[0].len()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn get(&self, i: usize) -> &Bicoloring {
        &self.members[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Bicoloring> {
        self.members.iter()
    }

    pub fn members(&self) -> &[Bicoloring] {
        &self.members
    }

    pub(crate) fn check_against(&self, ps: &PointSet) -> Result<()> {
        if self.n() != ps.len() {
            return Err(Error::InvalidBicoloring(format!(
                "bicolorings have length {}, point set has {} points",
                self.n(),
                ps.len()
            )));
        }
        Ok(())
    }
}

/// A closed geometric range.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Range {
    /// Inclusive 0-based indices into a sorted 1D point set.
    IndexInterval { lo: usize, hi: usize },
    CoordInterval { lo: f64, hi: f64 },
    Box { lo: Vec<f64>, hi: Vec<f64> },
    Ball { center: Vec<f64>, radius: f64 },
}

impl Range {
    pub fn index_interval(lo: usize, hi: usize) -> Result<Range> {
        let r = Range::IndexInterval { lo, hi };
        r.validate()?;
        Ok(r)
    }

    pub fn coord_interval(lo: f64, hi: f64) -> Result<Range> {
        let r = Range::CoordInterval { lo, hi };
        r.validate()?;
        Ok(r)
    }

    pub fn aabb(lo: Vec<f64>, hi: Vec<f64>) -> Result<Range> {
        let r = Range::Box { lo, hi };
        r.validate()?;
        Ok(r)
    }

    pub fn ball(center: Vec<f64>, radius: f64) -> Result<Range> {
        let r = Range::Ball { center, radius };
        r.validate()?;
        Ok(r)
    }

    /// The ball having segment `pq` as a diameter.
    ///
    /// The radius is measured from the rounded midpoint to the farther
    /// endpoint, which is `|pq| / 2` up to rounding and keeps both endpoints
    /// inside when the points are close relative to their magnitude.
    pub fn diametral_ball(p: &[f64], q: &[f64]) -> Range {
        let center: Vec<f64> = p.iter().zip(q).map(|(a, b)| 0.5 * (a + b)).collect();
        let radius = squared_distance(p, &center).max(squared_distance(q, &center)).sqrt();
        Range::Ball { center, radius }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match self {
            Range::IndexInterval { lo, hi } => lo <= hi,
            Range::CoordInterval { lo, hi } => lo.is_finite() && hi.is_finite() && lo <= hi,
            Range::Box { lo, hi } => {
                if lo.len() != hi.len() {
                    return Err(Error::Dimension { expected: lo.len(), found: hi.len() });
                }
                !lo.is_empty()
                    && lo.iter().zip(hi).all(|(a, b)| a.is_finite() && b.is_finite() && a <= b)
            }
            Range::Ball { center, radius } => {
                !center.is_empty()
                    && center.iter().all(|x| x.is_finite())
                    && radius.is_finite()
                    && *radius >= 0.0
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidRange(format!("{self:?}")))
        }
    }

    /// Ambient dimension; index intervals live on the line.
    pub fn dim(&self) -> usize {
        match self {
            Range::IndexInterval { .. } | Range::CoordInterval { .. } => 1,
            Range::Box { lo, .. } => lo.len(),
            Range::Ball { center, .. } => center.len(),
        }
    }

    /// Closed containment of a coordinate vector.
    pub fn contains(&self, point: &[f64]) -> Result<bool> {
        if point.len() != self.dim() {
            return Err(Error::Dimension { expected: self.dim(), found: point.len() });
        }
        Ok(match self {
            Range::IndexInterval { .. } => return Err(Error::UnresolvedIndexRange),
            Range::CoordInterval { lo, hi } => *lo <= point[0] && point[0] <= *hi,
            Range::Box { lo, hi } => point
                .iter()
                .zip(lo.iter().zip(hi))
                .all(|(x, (a, b))| a <= x && x <= b),
            Range::Ball { center, radius } => {
                let r2 = radius * radius;
                squared_distance(point, center) - r2 <= BOUNDARY_RTOL * r2
            }
        })
    }

    /// Whether point `i` of `ps` lies in the range.
    pub fn contains_index(&self, ps: &PointSet, i: usize) -> Result<bool> {
        match *self {
            Range::IndexInterval { lo, hi } => {
                ps.require_line()?;
                self.check_bounds(ps)?;
                Ok(lo <= i && i <= hi)
            }
            _ => self.contains(ps.point(i)),
        }
    }

    /// Replaces an index interval by the coordinate interval it spans.
    pub fn resolve(&self, ps: &PointSet) -> Result<Range> {
        match *self {
            Range::IndexInterval { lo, hi } => {
                ps.require_line()?;
                self.check_bounds(ps)?;
                Ok(Range::CoordInterval { lo: ps.point(lo)[0], hi: ps.point(hi)[0] })
            }
            _ => Ok(self.clone()),
        }
    }

    fn check_bounds(&self, ps: &PointSet) -> Result<()> {
        if let Range::IndexInterval { hi, .. } = *self {
            if hi >= ps.len() {
                return Err(Error::InvalidRange(format!(
                    "index {hi} out of bounds for {} points",
                    ps.len()
                )));
            }
        }
        Ok(())
    }
}

pub(crate) fn squared_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct ColorCount {
    pub red: usize,
    pub blue: usize,
}

impl ColorCount {
    /// Equal and nonzero counts. Empty ranges are never balanced.
    pub fn is_balanced(&self) -> bool {
        self.red == self.blue && self.red > 0
    }
}

pub fn balance_count(range: &Range, ps: &PointSet, b: &Bicoloring) -> Result<ColorCount> {
    if b.len() != ps.len() {
        return Err(Error::InvalidBicoloring(format!(
            "bicoloring has length {}, point set has {} points",
            b.len(),
            ps.len()
        )));
    }
    let mut count = ColorCount::default();
    if let Range::IndexInterval { lo, hi } = *range {
        ps.require_line()?;
        range.check_bounds(ps)?;
        for &c in &b.colors()[lo..=hi] {
            match c {
                Color::Red => count.red += 1,
                Color::Blue => count.blue += 1,
            }
        }
        return Ok(count);
    }
    for (i, p) in ps.iter().enumerate() {
        if range.contains(p)? {
            match b.get(i) {
                Color::Red => count.red += 1,
                Color::Blue => count.blue += 1,
            }
        }
    }
    Ok(count)
}

pub fn is_balanced(range: &Range, ps: &PointSet, b: &Bicoloring) -> Result<bool> {
    Ok(balance_count(range, ps, b)?.is_balanced())
}

/// All `n(n+1)/2` index intervals of a 1D point set, lexicographically.
///
/// Every balanced interval can be shrunk to one whose endpoints are points of
/// the set, so this list is complete for interval problems.
pub fn enumerate_candidate_intervals(ps: &PointSet) -> Result<Vec<Range>> {
    ps.require_line()?;
    let n = ps.len();
    Ok((0..n)
        .flat_map(|lo| (lo..n).map(move |hi| Range::IndexInterval { lo, hi }))
        .collect())
}

/// Running red-minus-blue totals `s_0 = 0, ..., s_n`.
pub fn prefix_sums(colors: &[Color]) -> Vec<i64> {
    let mut s = Vec::with_capacity(colors.len() + 1);
    s.push(0);
    let mut acc = 0;
    for c in colors {
        acc += c.sign();
        s.push(acc);
    }
    s
}

pub fn prefix_balance(ps: &PointSet, b: &Bicoloring) -> Result<Vec<i64>> {
    ps.require_line()?;
    if b.len() != ps.len() {
        return Err(Error::InvalidBicoloring(format!(
            "bicoloring has length {}, point set has {} points",
            b.len(),
            ps.len()
        )));
    }
    Ok(prefix_sums(b.colors()))
}

/// Interval `[lo, hi]` is balanced iff `s[hi + 1] == s[lo]` with `hi > lo`.
#[inline]
pub fn prefix_interval_balanced(prefix: &[i64], lo: usize, hi: usize) -> bool {
    hi > lo && prefix[hi + 1] == prefix[lo]
}

/// A set of ranges together with, for each bicoloring of a family, the index
/// of a range balanced for it.
#[derive(Clone, Debug, PartialEq)]
pub struct GSur {
    pub ranges: Vec<Range>,
    pub certificate: Vec<usize>,
}

impl GSur {
    /// Certifies each bicoloring with the lowest-index balanced range.
    pub fn certify(ranges: Vec<Range>, ps: &PointSet, fam: &BicoloringFamily) -> Result<GSur> {
        fam.check_against(ps)?;
        let mut certificate = Vec::with_capacity(fam.len());
        for (bi, b) in fam.iter().enumerate() {
            let mut found = None;
            for (ri, r) in ranges.iter().enumerate() {
                if is_balanced(r, ps, b)? {
                    found = Some(ri);
                    break;
                }
            }
            certificate.push(found.ok_or(Error::MissingCertificate(bi))?);
        }
        Ok(GSur { ranges, certificate })
    }

    pub fn size(&self) -> usize {
        self.ranges.len()
    }

    /// First bicoloring whose certified range is missing or unbalanced.
    pub fn first_invalid(&self, ps: &PointSet, fam: &BicoloringFamily) -> Result<Option<usize>> {
        fam.check_against(ps)?;
        for (bi, b) in fam.iter().enumerate() {
            let ok = match self.certificate.get(bi).and_then(|&ri| self.ranges.get(ri)) {
                Some(r) => is_balanced(r, ps, b)?,
                None => false,
            };
            if !ok {
                return Ok(Some(bi));
            }
        }
        Ok(None)
    }

    pub fn is_valid(&self, ps: &PointSet, fam: &BicoloringFamily) -> Result<bool> {
        Ok(self.first_invalid(ps, fam)?.is_none())
    }
}

/// First bicoloring for which no range in `ranges` is balanced.
pub fn first_uncovered(
    ranges: &[Range],
    ps: &PointSet,
    fam: &BicoloringFamily,
) -> Result<Option<usize>> {
    fam.check_against(ps)?;
    for (bi, b) in fam.iter().enumerate() {
        let mut covered = false;
        for r in ranges {
            if is_balanced(r, ps, b)? {
                covered = true;
                break;
            }
        }
        if !covered {
            return Ok(Some(bi));
        }
    }
    Ok(None)
}
