mod common;

use common::*;
use gsur::instances::{gen_embedded_line, gen_m_restricted_family, gen_prefix_family};
use gsur::model::enumerate_candidate_intervals;
use gsur::solver::{
    build_coverage, exact_cover, extract_set_cover, greedy_cover, reduce_from_set_cover,
    CandidateSet, SetCoverInstance,
};
use gsur::{Bicoloring, BicoloringFamily, PointSet, Range};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn coverage_matches_naive_counting() {
    for n in 2..=15 {
        let ps = PointSet::integer_line(n).unwrap();
        let colorings = all_colorings(n);
        let fam = BicoloringFamily::new(
            colorings.iter().cloned().map(|c| Bicoloring::new(c).unwrap()).collect(),
        )
        .unwrap();
        let cands = enumerate_candidate_intervals(&ps).unwrap();
        let cm = build_coverage(&ps, &fam, cands.clone()).unwrap();
        for (bi, colors) in colorings.iter().enumerate() {
            for (ci, r) in cands.iter().enumerate() {
                let Range::IndexInterval { lo, hi } = *r else { unreachable!() };
                assert_eq!(cm.bit(bi, ci), naive_balanced(colors, lo, hi));
            }
        }
    }
}

#[test]
fn coverage_of_geometric_candidates_matches_naive() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..30 {
        let n = rng.random_range(2..12);
        let ps = random_points(&mut rng, n, 2);
        let fam = random_family(&mut rng, n, 6);
        let cands = CandidateSet::DiametralBalls.ranges(&ps).unwrap();
        let cm = build_coverage(&ps, &fam, cands.clone()).unwrap();
        for (bi, b) in fam.iter().enumerate() {
            for (ci, r) in cands.iter().enumerate() {
                let inside: Vec<usize> = (0..n).filter(|&i| r.contains(ps.point(i)).unwrap()).collect();
                let red = inside.iter().filter(|&&i| b.get(i) == gsur::Color::Red).count();
                let balanced = red > 0 && 2 * red == inside.len();
                assert_eq!(cm.bit(bi, ci), balanced);
            }
        }
    }
}

/// Prefix-family optimum n - 1 and m-restricted optimum n - m, cross-checked
/// by exhaustive search over interval subsets where that is affordable.
#[test]
fn tight_families_reach_their_optimum() {
    for n in 2..=8 {
        let inst = gen_prefix_family(n).unwrap();
        let cm = build_coverage(&inst.ps, &inst.fam, enumerate_candidate_intervals(&inst.ps).unwrap()).unwrap();
        let g = exact_cover(&cm, n).unwrap();
        assert_eq!(g.size(), n - 1);
        assert!(g.is_valid(&inst.ps, &inst.fam).unwrap());
    }
    for (n, m) in [(5, 1), (5, 2), (7, 2), (9, 3), (11, 4)] {
        let inst = gen_m_restricted_family(n, m).unwrap();
        let cm = build_coverage(&inst.ps, &inst.fam, enumerate_candidate_intervals(&inst.ps).unwrap()).unwrap();
        assert_eq!(exact_cover(&cm, n).unwrap().size(), n - m);
    }
    // Exhaustive confirmation for the smallest cases (at most 21 intervals).
    for n in 2..=6 {
        let inst = gen_prefix_family(n).unwrap();
        let cands = enumerate_candidate_intervals(&inst.ps).unwrap();
        let covers: Vec<Vec<bool>> = inst
            .fam
            .iter()
            .map(|b| {
                cands.iter()
                    .map(|r| {
                        let Range::IndexInterval { lo, hi } = *r else { unreachable!() };
                        naive_balanced(b.colors(), lo, hi)
                    })
                    .collect()
            })
            .collect();
        assert_eq!(brute_min_cover(&covers, cands.len()), Some(n - 1));
    }
}

#[test]
fn exact_is_optimal_and_greedy_within_harmonic_factor() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    for _ in 0..150 {
        let n = rng.random_range(2..=5);
        let ps = PointSet::integer_line(n).unwrap();
        let count = rng.random_range(1..=10);
        let fam = random_family(&mut rng, n, count);
        let cands = enumerate_candidate_intervals(&ps).unwrap();
        assert!(cands.len() <= 20);
        let cm = build_coverage(&ps, &fam, cands.clone()).unwrap();
        let exact = exact_cover(&cm, cm.rows()).unwrap();
        let greedy = greedy_cover(&cm).unwrap();
        assert!(exact.is_valid(&ps, &fam).unwrap());
        assert!(greedy.is_valid(&ps, &fam).unwrap());

        let covers: Vec<Vec<bool>> = fam
            .iter()
            .map(|b| {
                cands.iter()
                    .map(|r| {
                        let Range::IndexInterval { lo, hi } = *r else { unreachable!() };
                        naive_balanced(b.colors(), lo, hi)
                    })
                    .collect()
            })
            .collect();
        assert_eq!(brute_min_cover(&covers, cands.len()), Some(exact.size()));
        assert!(exact.size() <= greedy.size());
        assert!(greedy.size() as f64 <= harmonic(cm.rows()) * exact.size() as f64 + 1e-9);
    }
}

#[test]
fn reduction_preserves_the_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..60 {
        let universe = rng.random_range(1..=6);
        let m = rng.random_range(1..=5);
        let subsets = random_set_system(&mut rng, universe, m);
        let expected = brute_min_set_cover(universe, &subsets).unwrap();
        let sc = SetCoverInstance::new(universe, subsets).unwrap();
        assert_eq!(sc.min_cover_brute_force().len(), expected);

        let ro = reduce_from_set_cover(&sc);
        assert_eq!(ro.ps.len(), 2 * m + 2 * (m - 1));
        let cm = build_coverage(&ro.ps, &ro.fam, enumerate_candidate_intervals(&ro.ps).unwrap()).unwrap();
        let g = exact_cover(&cm, universe).unwrap();
        assert_eq!(g.size(), expected);

        let cover = extract_set_cover(&ro, &g).unwrap();
        assert!(cover.len() <= g.size());
        assert!(sc.is_cover(&cover));

        let greedy = greedy_cover(&cm).unwrap();
        assert!(sc.is_cover(&extract_set_cover(&ro, &greedy).unwrap()));
    }
}

#[test]
fn embedded_line_needs_n_minus_one_balls() {
    for n in 2..=6 {
        for dir in [[1.0, 0.0, 0.0], [1.0, 2.0, -1.0], [0.0, 0.0, 3.0]] {
            let inst = gen_embedded_line(n, 3, &dir).unwrap();
            let cands = CandidateSet::DiametralBalls.ranges(&inst.ps).unwrap();
            let cm = build_coverage(&inst.ps, &inst.fam, cands).unwrap();
            assert_eq!(exact_cover(&cm, n).unwrap().size(), n - 1);
        }
    }
}
