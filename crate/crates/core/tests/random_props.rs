mod common;

use common::*;
use gsur::random_sim::{
    event_e, prob_e_closed_form, prob_e_exact, prob_e_lower_bound, run_experiment, sample_continuous,
    sample_continuous_points, sample_discrete, sample_discrete_coloring, smallest_largest_balanced, Model,
};
use gsur::Color;
use num_bigint::BigInt;
use num_rational::BigRational;

/// Enumerates all C(m+n, m) placements of the red points.
fn enumerate_e(m: usize, n: usize) -> (u128, u128) {
    let total_len = m + n;
    let mut favorable = 0u128;
    let mut total = 0u128;
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        let mut colors = vec![Color::Blue; total_len];
        for &i in &idx {
            colors[i] = Color::Red;
        }
        total += 1;
        if event_e(&colors) {
            favorable += 1;
            let (t, s) = smallest_largest_balanced(&colors).unwrap();
            assert_eq!((t, s), (2, 2));
        }
        // Next combination.
        let mut i = m;
        loop {
            if i == 0 {
                return (favorable, total);
            }
            i -= 1;
            if idx[i] < total_len - m + i {
                idx[i] += 1;
                for j in i + 1..m {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn product_form(m: usize, n: usize) -> f64 {
    (0..m).map(|j| 1.0 - (3 * m + 3) as f64 / (m + n - j) as f64).product()
}

#[test]
fn statistics_match_brute_force() {
    for len in 2..=14 {
        for colors in all_colorings(len) {
            assert_eq!(smallest_largest_balanced(&colors).unwrap(), brute_smallest_largest(&colors));
        }
    }
}

#[test]
fn enumeration_reproduces_closed_form() {
    for (m, n) in [(1, 10), (1, 13), (1, 20), (2, 13), (2, 16), (2, 20), (3, 16), (3, 20)] {
        let (fav, total) = enumerate_e(m, n);
        assert_eq!(total, binomial((m + n) as u64, m as u64));
        let expected = BigRational::new(BigInt::from(fav), BigInt::from(total));
        assert_eq!(prob_e_exact(m, n).unwrap(), expected);
        let f = prob_e_closed_form(m, n).unwrap();
        assert!((f - fav as f64 / total as f64).abs() < 1e-15);
    }
}

#[test]
fn closed_form_agrees_with_product_and_dominates_bound() {
    for m in 1..=20 {
        for n in [3 * (m + 2) + 1, 100, 1_000, 10_000, 100_000, 1_000_000] {
            if n <= 3 * (m + 2) {
                continue;
            }
            let exact = prob_e_closed_form(m, n).unwrap();
            let product = product_form(m, n);
            assert!((exact - product).abs() <= 1e-12, "m={m} n={n}: {exact} vs {product}");
            assert!(exact + 1e-15 >= prob_e_lower_bound(m, n).unwrap());
        }
    }
}

#[test]
fn every_trial_has_smallest_two_and_e_implies_largest_two() {
    for seed in 0..300 {
        let t = sample_discrete(3, 60, seed).unwrap();
        assert_eq!(t.t_stat, 2);
        assert!(t.s_stat % 2 == 0 && 2 <= t.s_stat && t.s_stat <= 63);
        if t.event_e {
            assert_eq!(t.s_stat, 2);
        }
        let c = sample_continuous(3, 60, seed).unwrap();
        assert_eq!(c.t_stat, 2);
        assert!(0.0 < c.m_len && c.m_len <= c.l_len && c.l_len <= 1.0);
        if c.event_e {
            assert_eq!(c.s_stat, 2);
        }
    }
}

#[test]
fn discrete_sampler_is_uniform_over_placements() {
    // m = 2 of 6 positions: C(6, 2) = 15 equally likely placements.
    let trials = 30_000u64;
    let mut hits = std::collections::HashMap::new();
    for seed in 0..trials {
        let colors = sample_discrete_coloring(2, 4, seed).unwrap();
        assert_eq!(colors.iter().filter(|&&c| c == Color::Red).count(), 2);
        *hits.entry(colors).or_insert(0u64) += 1;
    }
    assert_eq!(hits.len(), 15);
    let expected = trials as f64 / 15.0;
    let chi2: f64 = hits.values().map(|&h| (h as f64 - expected).powi(2) / expected).sum();
    // 14 degrees of freedom, p = 0.001 critical value.
    assert!(chi2 < 36.12, "chi2 = {chi2}");
}

#[test]
fn continuous_orderings_are_uniform() {
    // m = 1, n = 3: the four orderings (red rank 0..3) are equally likely.
    let trials = 20_000u64;
    let mut ranks = [0u64; 4];
    for seed in 0..trials {
        let points = sample_continuous_points(1, 3, seed).unwrap();
        let rank = points.iter().position(|p| p.1 == Color::Red).unwrap();
        ranks[rank] += 1;
    }
    let expected = trials as f64 / 4.0;
    let chi2: f64 = ranks.iter().map(|&h| (h as f64 - expected).powi(2) / expected).sum();
    // 3 degrees of freedom, p = 0.001 critical value.
    assert!(chi2 < 16.27, "chi2 = {chi2}");
}

#[test]
fn experiment_is_reproducible_and_order_independent() {
    let a = run_experiment(Model::Discrete, 2, 50, 200, 5).unwrap();
    let b = run_experiment(Model::Discrete, 2, 50, 200, 5).unwrap();
    assert_eq!(a, b);
    let short = run_experiment(Model::Discrete, 2, 50, 100, 5).unwrap();
    assert_eq!(&a.records[..100], &short.records[..]);
}
