//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the code paths it is used to check.
#![allow(dead_code)]

use gsur::{Bicoloring, BicoloringFamily, Color, PointSet};
use rand::Rng;

/// Every valid bicoloring of `n` points, as bit masks `1..2^n - 1`.
pub fn all_colorings(n: usize) -> Vec<Vec<Color>> {
    (1u32..(1 << n) - 1)
        .map(|mask| {
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { Color::Red } else { Color::Blue })
                .collect()
        })
        .collect()
}

pub fn all_bicolorings(n: usize) -> Vec<Bicoloring> {
    all_colorings(n).into_iter().map(|c| Bicoloring::new(c).unwrap()).collect()
}

/// Red and blue counts on `colors[lo..=hi]` by direct counting.
pub fn naive_counts(colors: &[Color], lo: usize, hi: usize) -> (usize, usize) {
    let mut red = 0;
    let mut blue = 0;
    for &c in &colors[lo..=hi] {
        if c == Color::Red {
            red += 1;
        } else {
            blue += 1;
        }
    }
    (red, blue)
}

pub fn naive_balanced(colors: &[Color], lo: usize, hi: usize) -> bool {
    let (r, b) = naive_counts(colors, lo, hi);
    r == b && r > 0
}

/// Smallest and largest point counts of balanced index intervals, O(n^3).
pub fn brute_smallest_largest(colors: &[Color]) -> (usize, usize) {
    let n = colors.len();
    let mut smallest = usize::MAX;
    let mut largest = 0;
    for lo in 0..n {
        for hi in lo..n {
            if naive_balanced(colors, lo, hi) {
                smallest = smallest.min(hi - lo + 1);
                largest = largest.max(hi - lo + 1);
            }
        }
    }
    (smallest, largest)
}

/// Smallest number of columns of a boolean matrix covering every row, by
/// enumerating column subsets in increasing size. `None` if infeasible.
pub fn brute_min_cover(covers: &[Vec<bool>], ncols: usize) -> Option<usize> {
    assert!(ncols <= 24);
    let rows = covers.len();
    let mut best = None;
    for mask in 0u32..(1 << ncols) {
        let size = mask.count_ones() as usize;
        if best.is_some_and(|b| b <= size) {
            continue;
        }
        if (0..rows).all(|r| (0..ncols).any(|c| mask >> c & 1 == 1 && covers[r][c])) {
            best = Some(size);
        }
    }
    best
}

/// Minimum set cover size by enumerating all subcollections.
pub fn brute_min_set_cover(universe: usize, subsets: &[Vec<usize>]) -> Option<usize> {
    let covers: Vec<Vec<bool>> = (0..universe)
        .map(|x| subsets.iter().map(|s| s.contains(&x)).collect())
        .collect();
    brute_min_cover(&covers, subsets.len())
}

pub fn random_coloring<R: Rng>(rng: &mut R, n: usize, reds: usize) -> Vec<Color> {
    let mut colors = vec![Color::Blue; n];
    for i in rand::seq::index::sample(rng, n, reds) {
        colors[i] = Color::Red;
    }
    colors
}

pub fn random_family<R: Rng>(rng: &mut R, n: usize, count: usize) -> BicoloringFamily {
    let members = (0..count)
        .map(|_| {
            let reds = rng.random_range(1..n);
            Bicoloring::new(random_coloring(rng, n, reds)).unwrap()
        })
        .collect();
    BicoloringFamily::new(members).unwrap()
}

pub fn random_points<R: Rng>(rng: &mut R, n: usize, d: usize) -> PointSet {
    let pts = (0..n)
        .map(|_| (0..d).map(|_| rng.random_range(-10.0..10.0)).collect())
        .collect();
    PointSet::new(d, pts).unwrap()
}

pub fn random_line<R: Rng>(rng: &mut R, n: usize) -> PointSet {
    let mut xs: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..100.0)).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    PointSet::line(xs).unwrap()
}

/// Random feasible set system with `universe` elements and `m` subsets.
pub fn random_set_system<R: Rng>(rng: &mut R, universe: usize, m: usize) -> Vec<Vec<usize>> {
    loop {
        let subsets: Vec<Vec<usize>> = (0..m)
            .map(|_| (0..universe).filter(|_| rng.random_bool(0.4)).collect())
            .collect();
        if (0..universe).all(|x| subsets.iter().any(|s| s.contains(&x))) {
            return subsets;
        }
    }
}

pub fn harmonic(k: usize) -> f64 {
    (1..=k).map(|i| 1.0 / i as f64).sum()
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}
