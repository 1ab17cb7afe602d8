//! Minimal G-SUR search as set cover: bicolorings are the elements to cover,
//! candidate ranges are the sets. Also the reduction from set cover to
//! interval G-SUR and the map back.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{
    balance_count, enumerate_candidate_intervals, prefix_interval_balanced, prefix_sums,
    Bicoloring, BicoloringFamily, Color, GSur, PointSet, Range,
};

/// Fixed-size bit set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn new(len: usize) -> Bits {
        Bits { words: vec![0; len.div_ceil(64)] }
    }

    fn full(len: usize) -> Bits {
        let mut b = Bits::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn intersection_count(&self, other: &Bits) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    fn intersects(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    fn difference(&self, other: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect() }
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }
}

/// Which candidate ranges balance which bicolorings.
///
/// Identical bicolorings share a row; `row_of` maps each family member to its
/// row.
#[derive(Clone, Debug)]
pub struct CoverageMatrix {
    candidates: Vec<Range>,
    row_of: Vec<usize>,
    /// Per row, the candidates balanced for it.
    row_cols: Vec<Bits>,
    /// Per candidate, the rows it balances.
    col_rows: Vec<Bits>,
}

impl CoverageMatrix {
    pub fn rows(&self) -> usize {
        self.row_cols.len()
    }

    pub fn family_len(&self) -> usize {
        self.row_of.len()
    }

    pub fn candidates(&self) -> &[Range] {
        &self.candidates
    }

    pub fn row_of(&self, member: usize) -> usize {
        self.row_of[member]
    }

    /// Whether candidate `col` is balanced for family member `member`.
    pub fn bit(&self, member: usize, col: usize) -> bool {
        self.row_cols[self.row_of[member]].contains(col)
    }

    /// All family members balanced by no candidate.
    pub fn uncoverable(&self) -> Vec<usize> {
        (0..self.family_len())
            .filter(|&b| self.row_cols[self.row_of[b]].is_empty())
            .collect()
    }

    fn require_feasible(&self) -> Result<()> {
        let bad = self.uncoverable();
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::InfeasibleRow(bad))
        }
    }

    /// Builds a G-SUR from chosen candidate columns, certifying each member
    /// with the lowest-index chosen range.
    pub fn gsur_from_columns(&self, columns: &[usize]) -> Result<GSur> {
        let mut cols = columns.to_vec();
        cols.sort_unstable();
        cols.dedup();
        let certificate = (0..self.family_len())
            .map(|b| {
                let row = &self.row_cols[self.row_of[b]];
                cols.iter()
                    .position(|&c| row.contains(c))
                    .ok_or(Error::MissingCertificate(b))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GSur { ranges: cols.iter().map(|&c| self.candidates[c].clone()).collect(), certificate })
    }
}

pub fn build_coverage(
    ps: &PointSet,
    fam: &BicoloringFamily,
    candidates: Vec<Range>,
) -> Result<CoverageMatrix> {
    fam.check_against(ps)?;
    for r in &candidates {
        r.validate()?;
        if r.dim() != ps.dim() {
            return Err(Error::Dimension { expected: ps.dim(), found: r.dim() });
        }
        if let Range::IndexInterval { hi, .. } = *r {
            if hi >= ps.len() {
                return Err(Error::InvalidRange(format!("index {hi} out of bounds")));
            }
        }
    }

    let mut unique: Vec<&Bicoloring> = Vec::new();
    let mut seen: HashMap<&Bicoloring, usize> = HashMap::new();
    let row_of = fam
        .iter()
        .map(|b| {
            *seen.entry(b).or_insert_with(|| {
                unique.push(b);
                unique.len() - 1
            })
        })
        .collect();

    let ncols = candidates.len();
    let row_cols = unique
        .par_iter()
        .map(|b| -> Result<Bits> {
            let prefix = prefix_sums(b.colors());
            let mut bits = Bits::new(ncols);
            for (ci, r) in candidates.iter().enumerate() {
                let balanced = match *r {
                    Range::IndexInterval { lo, hi } => prefix_interval_balanced(&prefix, lo, hi),
                    _ => balance_count(r, ps, b)?.is_balanced(),
                };
                if balanced {
                    bits.insert(ci);
                }
            }
            Ok(bits)
        })
        .collect::<Result<Vec<_>>>()?;

    let mut col_rows = vec![Bits::new(unique.len()); ncols];
    for (ri, bits) in row_cols.iter().enumerate() {
        for c in bits.iter() {
            col_rows[c].insert(ri);
        }
    }
    Ok(CoverageMatrix { candidates, row_of, row_cols, col_rows })
}

/// Greedy columns: most newly covered rows first, ties to the lowest index.
fn greedy_columns(cm: &CoverageMatrix, mut uncovered: Bits, allowed: &[usize]) -> Option<Vec<usize>> {
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let (best, gain) = allowed
            .iter()
            .map(|&c| (c, cm.col_rows[c].intersection_count(&uncovered)))
            .fold((usize::MAX, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if gain == 0 {
            return None;
        }
        uncovered = uncovered.difference(&cm.col_rows[best]);
        chosen.push(best);
    }
    Some(chosen)
}

/// Standard greedy set cover over the coverage matrix.
pub fn greedy_cover(cm: &CoverageMatrix) -> Result<GSur> {
    cm.require_feasible()?;
    let all: Vec<usize> = (0..cm.candidates.len()).collect();
    let cols = greedy_columns(cm, Bits::full(cm.rows()), &all).ok_or_else(|| Error::InfeasibleRow(cm.uncoverable()))?;
    cm.gsur_from_columns(&cols)
}

struct Search<'a> {
    cm: &'a CoverageMatrix,
    live: Vec<usize>,
    /// Per row, the live columns covering it, ascending.
    row_live: Vec<Vec<usize>>,
    row_live_bits: Vec<Bits>,
    best: Option<Vec<usize>>,
    /// Only covers strictly smaller than this are of interest.
    limit: usize,
}

impl Search<'_> {
    fn lower_bound(&self, uncovered: &Bits) -> usize {
        let remaining = uncovered.count();
        let widest = self
            .live
            .iter()
            .map(|&c| self.cm.col_rows[c].intersection_count(uncovered))
            .max()
            .unwrap_or(0);
        if widest == 0 {
            return usize::MAX;
        }
        let by_width = remaining.div_ceil(widest);

        // Rows sharing no column each need their own column.
        let mut rows: Vec<usize> = uncovered.iter().collect();
        rows.sort_by_key(|&r| self.row_live[r].len());
        let mut used = Bits::new(self.cm.candidates.len());
        let mut packed = 0;
        for r in rows {
            if !self.row_live_bits[r].intersects(&used) {
                used.union_with(&self.row_live_bits[r]);
                packed += 1;
            }
        }
        by_width.max(packed)
    }

    fn run(&mut self, uncovered: Bits, chosen: &mut Vec<usize>) {
        if uncovered.is_empty() {
            if chosen.len() < self.limit {
                self.limit = chosen.len();
                self.best = Some(chosen.clone());
            }
            return;
        }
        let lb = self.lower_bound(&uncovered);
        if lb == usize::MAX || chosen.len() + lb >= self.limit {
            return;
        }
        if let Some(rest) = greedy_columns(self.cm, uncovered.clone(), &self.live) {
            if chosen.len() + rest.len() < self.limit {
                let mut full = chosen.clone();
                full.extend(rest);
                self.limit = full.len();
                self.best = Some(full);
                if chosen.len() + lb >= self.limit {
                    return;
                }
            }
        }
        let row = uncovered
            .iter()
            .min_by_key(|&r| (self.row_live[r].len(), r))
            .expect("nonempty");
        for ci in 0..self.row_live[row].len() {
            let col = self.row_live[row][ci];
            chosen.push(col);
            let next = uncovered.difference(&self.cm.col_rows[col]);
            self.run(next, chosen);
            chosen.pop();
            if chosen.len() + lb >= self.limit {
                break;
            }
        }
    }
}

/// Minimum-cardinality cover by branch and bound.
///
/// Branches on the uncovered row with the fewest covering candidates, trying
/// candidates in index order; prunes by a width bound and a disjoint-row
/// packing bound, with greedy completions as incumbents. Covers larger than
/// `budget_limit` are not searched. Practical up to a few dozen rows.
pub fn exact_cover(cm: &CoverageMatrix, budget_limit: usize) -> Result<GSur> {
    cm.require_feasible()?;
    let cols = exact_columns(cm, budget_limit)?;
    cm.gsur_from_columns(&cols)
}

fn exact_columns(cm: &CoverageMatrix, budget_limit: usize) -> Result<Vec<usize>> {
    // Drop empty columns and columns whose rows are contained in another
    // column's rows; ties keep the lowest index.
    let ncols = cm.candidates.len();
    let live: Vec<usize> = (0..ncols)
        .filter(|&c| {
            let rows = &cm.col_rows[c];
            !rows.is_empty()
                && !(0..ncols).any(|o| {
                    o != c
                        && rows.is_subset(&cm.col_rows[o])
                        && (o < c || !cm.col_rows[o].is_subset(rows))
                })
        })
        .collect();
    let mut row_live = vec![Vec::new(); cm.rows()];
    let mut row_live_bits = vec![Bits::new(ncols); cm.rows()];
    for &c in &live {
        for r in cm.col_rows[c].iter() {
            row_live[r].push(c);
            row_live_bits[r].insert(c);
        }
    }
    let mut search = Search {
        cm,
        live,
        row_live,
        row_live_bits,
        best: None,
        limit: budget_limit.saturating_add(1),
    };
    search.run(Bits::full(cm.rows()), &mut Vec::new());
    search.best.ok_or(Error::BudgetExceeded(budget_limit))
}

/// Candidate families for the solver.
#[derive(Clone, Debug, PartialEq)]
pub enum CandidateSet {
    /// Every index interval; complete for interval problems on the line.
    AllIntervals,
    /// Intervals of two consecutive points.
    Adjacent,
    /// Windows of exactly `2k` consecutive points.
    Windows { k: usize },
    /// Balls with diameter `pq` for every pair of points.
    DiametralBalls,
    Explicit(Vec<Range>),
}

impl CandidateSet {
    pub fn ranges(&self, ps: &PointSet) -> Result<Vec<Range>> {
        let n = ps.len();
        let need_line = || {
            if ps.dim() != 1 {
                Err(Error::Dimension { expected: 1, found: ps.dim() })
            } else {
                Ok(())
            }
        };
        match self {
            CandidateSet::AllIntervals => enumerate_candidate_intervals(ps),
            CandidateSet::Adjacent => {
                need_line()?;
                Ok((0..n - 1).map(|i| Range::IndexInterval { lo: i, hi: i + 1 }).collect())
            }
            CandidateSet::Windows { k } => {
                need_line()?;
                if *k == 0 || 2 * k > n {
                    return Err(Error::InvalidParams(format!("window size 2k = {} does not fit {n} points", 2 * k)));
                }
                Ok((0..=n - 2 * k).map(|j| Range::IndexInterval { lo: j, hi: j + 2 * k - 1 }).collect())
            }
            CandidateSet::DiametralBalls => Ok((0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .map(|(a, b)| Range::diametral_ball(ps.point(a), ps.point(b)))
                .collect()),
            CandidateSet::Explicit(ranges) => Ok(ranges.clone()),
        }
    }
}

/// A set cover instance over elements `0..universe_size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    universe_size: usize,
    subsets: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    pub fn new(universe_size: usize, subsets: Vec<Vec<usize>>) -> Result<SetCoverInstance> {
        if universe_size == 0 {
            return Err(Error::InvalidParams("universe must be nonempty".into()));
        }
        let mut covered = vec![false; universe_size];
        let mut subsets = subsets;
        for s in &mut subsets {
            s.sort_unstable();
            s.dedup();
            for &x in s.iter() {
                if x >= universe_size {
                    return Err(Error::InvalidParams(format!("element {x} outside universe of size {universe_size}")));
                }
                covered[x] = true;
            }
        }
        let missing: Vec<usize> = (0..universe_size).filter(|&x| !covered[x]).collect();
        if !missing.is_empty() {
            return Err(Error::UncoveredElements(missing));
        }
        Ok(SetCoverInstance { universe_size, subsets })
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn is_cover(&self, chosen: &[usize]) -> bool {
        let mut covered = vec![false; self.universe_size];
        for &i in chosen {
            for &x in &self.subsets[i] {
                covered[x] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }

    /// Smallest cover by enumerating subcollections in order of size.
    /// Intended for at most about 20 subsets.
    pub fn min_cover_brute_force(&self) -> Vec<usize> {
        let m = self.subsets.len();
        let mut best: Option<Vec<usize>> = None;
        for mask in 1u64..(1u64 << m) {
            let size = mask.count_ones() as usize;
            if best.as_ref().is_some_and(|b| b.len() <= size) {
                continue;
            }
            let chosen: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
            if self.is_cover(&chosen) {
                best = Some(chosen);
            }
        }
        best.expect("validated instances are coverable")
    }
}

/// Interval G-SUR instance built from a set system.
///
/// Each set `S_i` becomes a pair of consecutive points `(p_i, p_i')`, with two
/// always-blue dummy points between consecutive pairs. Element `x_j` becomes
/// the bicoloring coloring `p_i` red exactly when `x_j` is in `S_i`; every
/// other point is blue.
#[derive(Clone, Debug, PartialEq)]
pub struct ReductionOutput {
    pub ps: PointSet,
    pub fam: BicoloringFamily,
    /// Point indices of `(p_i, p_i')` for each set `i`.
    pub pair_index: Vec<(usize, usize)>,
}

pub const DUMMIES_PER_GAP: usize = 2;

pub fn reduce_from_set_cover(sc: &SetCoverInstance) -> ReductionOutput {
    let m = sc.subsets.len();
    let stride = 2 + DUMMIES_PER_GAP;
    let n = 2 * m + DUMMIES_PER_GAP * (m - 1);
    let pair_index: Vec<(usize, usize)> = (0..m).map(|i| (stride * i, stride * i + 1)).collect();
    let ps = PointSet::integer_line(n).expect("at least two points");
    let members = (0..sc.universe_size)
        .map(|x| {
            let mut colors = vec![Color::Blue; n];
            for (i, s) in sc.subsets.iter().enumerate() {
                if s.binary_search(&x).is_ok() {
                    colors[pair_index[i].0] = Color::Red;
                }
            }
            Bicoloring::new(colors).expect("every element lies in some set")
        })
        .collect();
    let fam = BicoloringFamily::new(members).expect("nonempty universe");
    ReductionOutput { ps, fam, pair_index }
}

/// Maps a G-SUR of a reduced instance back to a set cover.
///
/// Each balanced interval holds exactly one red point, which is some `p_i`;
/// that range contributes set `i`. Ranges balancing no bicoloring are
/// skipped. Returns sorted set indices.
pub fn extract_set_cover(ro: &ReductionOutput, gsur: &GSur) -> Result<Vec<usize>> {
    let mut sets = Vec::new();
    for (ri, r) in gsur.ranges.iter().enumerate() {
        let mut balancing = None;
        for b in ro.fam.iter() {
            if balance_count(r, &ro.ps, b)?.is_balanced() {
                balancing = Some(b);
                break;
            }
        }
        let Some(b) = balancing else { continue };
        let mut found = None;
        for (i, &(p, _)) in ro.pair_index.iter().enumerate() {
            if b.get(p) == Color::Red && r.contains_index(&ro.ps, p)? {
                found = Some(i);
                break;
            }
        }
        sets.push(found.ok_or(Error::UnmappableRange(ri))?);
    }
    sets.sort_unstable();
    sets.dedup();
    Ok(sets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::gen_prefix_family;

    fn five_elements() -> SetCoverInstance {
        SetCoverInstance::new(5, vec![vec![0, 1, 2], vec![0, 1, 3], vec![2, 3, 4], vec![0, 2, 3]]).unwrap()
    }

    #[test]
    fn bits_ops() {
        let mut a = Bits::new(130);
        a.insert(0);
        a.insert(64);
        a.insert(129);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(a.count(), 3);
        let f = Bits::full(130);
        assert!(a.is_subset(&f));
        assert_eq!(f.difference(&a).count(), 127);
    }

    #[test]
    fn coverage_prefix_family_row() {
        let inst = gen_prefix_family(4).unwrap();
        let cands = enumerate_candidate_intervals(&inst.ps).unwrap();
        let cm = build_coverage(&inst.ps, &inst.fam, cands.clone()).unwrap();
        let hits: Vec<usize> = (0..cands.len()).filter(|&c| cm.bit(0, c)).collect();
        assert_eq!(hits.len(), 1);
        assert_eq!(cands[hits[0]], Range::IndexInterval { lo: 0, hi: 1 });
    }

    #[test]
    fn coverage_empty_candidates() {
        let inst = gen_prefix_family(4).unwrap();
        let cm = build_coverage(&inst.ps, &inst.fam, vec![]).unwrap();
        assert_eq!(cm.uncoverable(), vec![0, 1, 2]);
        assert_eq!(greedy_cover(&cm), Err(Error::InfeasibleRow(vec![0, 1, 2])));
        assert_eq!(exact_cover(&cm, 10), Err(Error::InfeasibleRow(vec![0, 1, 2])));
    }

    #[test]
    fn coverage_dedups_rows() {
        let ps = PointSet::integer_line(3).unwrap();
        let fam = BicoloringFamily::parse(&["RBB", "BRB", "RBB"]).unwrap();
        let cm = build_coverage(&ps, &fam, CandidateSet::Adjacent.ranges(&ps).unwrap()).unwrap();
        assert_eq!(cm.rows(), 2);
        assert_eq!(cm.family_len(), 3);
        assert_eq!(cm.row_of(2), cm.row_of(0));
        let g = exact_cover(&cm, 3).unwrap();
        assert_eq!(g.size(), 1);
        assert_eq!(g.certificate, vec![0, 0, 0]);
    }

    #[test]
    fn single_candidate_covers_all() {
        let ps = PointSet::integer_line(4).unwrap();
        let fam = BicoloringFamily::parse(&["RRBB", "RBRB", "BBRR"]).unwrap();
        let cm = build_coverage(&ps, &fam, vec![Range::IndexInterval { lo: 0, hi: 3 }]).unwrap();
        assert_eq!(greedy_cover(&cm).unwrap().size(), 1);
    }

    #[test]
    fn prefix_family_four_greedy_and_exact() {
        let inst = gen_prefix_family(4).unwrap();
        let cm = build_coverage(&inst.ps, &inst.fam, enumerate_candidate_intervals(&inst.ps).unwrap()).unwrap();
        assert_eq!(greedy_cover(&cm).unwrap().size(), 3);
        assert_eq!(exact_cover(&cm, 10).unwrap().size(), 3);
    }

    #[test]
    fn budget_exceeded() {
        let inst = gen_prefix_family(5).unwrap();
        let cm = build_coverage(&inst.ps, &inst.fam, enumerate_candidate_intervals(&inst.ps).unwrap()).unwrap();
        assert_eq!(exact_cover(&cm, 3), Err(Error::BudgetExceeded(3)));
        assert_eq!(exact_cover(&cm, 4).unwrap().size(), 4);
    }

    #[test]
    fn reduction_layout() {
        let sc = SetCoverInstance::new(1, vec![vec![0]]).unwrap();
        let ro = reduce_from_set_cover(&sc);
        assert_eq!(ro.ps.len(), 2);
        assert_eq!(ro.fam.len(), 1);
        assert_eq!(ro.fam.get(0).to_string(), "RB");

        let ro = reduce_from_set_cover(&five_elements());
        assert_eq!(ro.ps.len(), 14);
        assert_eq!(ro.fam.len(), 5);
        assert_eq!(ro.pair_index, vec![(0, 1), (4, 5), (8, 9), (12, 13)]);
        assert_eq!(ro.fam.get(0).to_string(), "RBBBRBBBBBBBRB");
        // S_1 contains x_1, so the pair (p_1, p_1') is balanced for B_1.
        let pair = Range::IndexInterval { lo: 0, hi: 1 };
        let c = balance_count(&pair, &ro.ps, ro.fam.get(0)).unwrap();
        assert_eq!((c.red, c.blue), (1, 1));
    }

    #[test]
    fn reduction_red_counts_match_membership() {
        let sc = five_elements();
        let ro = reduce_from_set_cover(&sc);
        for (x, b) in ro.fam.iter().enumerate() {
            let memberships = sc.subsets().iter().filter(|s| s.contains(&x)).count();
            assert_eq!(b.red_count(), memberships);
        }
    }

    #[test]
    fn five_element_optimum_and_extraction() {
        let sc = five_elements();
        assert_eq!(sc.min_cover_brute_force().len(), 2);
        let ro = reduce_from_set_cover(&sc);
        let cm = build_coverage(&ro.ps, &ro.fam, enumerate_candidate_intervals(&ro.ps).unwrap()).unwrap();
        let g = exact_cover(&cm, 5).unwrap();
        assert_eq!(g.size(), 2);
        let cover = extract_set_cover(&ro, &g).unwrap();
        assert!(cover.len() <= 2);
        assert!(sc.is_cover(&cover));
    }

    #[test]
    fn extraction_of_chosen_pairs() {
        let sc = five_elements();
        let ro = reduce_from_set_cover(&sc);
        let pairs = |sets: &[usize]| {
            sets.iter()
                .map(|&i| Range::IndexInterval { lo: ro.pair_index[i].0, hi: ro.pair_index[i].1 })
                .collect::<Vec<_>>()
        };
        let g = GSur::certify(pairs(&[1, 2]), &ro.ps, &ro.fam).unwrap();
        assert_eq!(extract_set_cover(&ro, &g).unwrap(), vec![1, 2]);

        // A dummy-only range certifies nothing and is dropped.
        let mut ranges = pairs(&[1, 2]);
        ranges.push(Range::IndexInterval { lo: 2, hi: 3 });
        let g = GSur::certify(ranges, &ro.ps, &ro.fam).unwrap();
        assert_eq!(extract_set_cover(&ro, &g).unwrap(), vec![1, 2]);

        // (d, p_i) intervals map to set i as well.
        let g = GSur::certify(
            vec![Range::IndexInterval { lo: 3, hi: 4 }, Range::IndexInterval { lo: 8, hi: 9 }],
            &ro.ps,
            &ro.fam,
        )
        .unwrap();
        assert_eq!(extract_set_cover(&ro, &g).unwrap(), vec![1, 2]);
    }

    #[test]
    fn set_cover_validation() {
        assert_eq!(SetCoverInstance::new(3, vec![vec![0], vec![2]]), Err(Error::UncoveredElements(vec![1])));
        assert!(SetCoverInstance::new(2, vec![vec![0, 2]]).is_err());
        assert!(SetCoverInstance::new(0, vec![]).is_err());
    }

    #[test]
    fn window_candidates() {
        let ps = PointSet::integer_line(6).unwrap();
        let w = CandidateSet::Windows { k: 2 }.ranges(&ps).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w[2], Range::IndexInterval { lo: 2, hi: 5 });
        assert!(CandidateSet::Windows { k: 4 }.ranges(&ps).is_err());
        assert_eq!(CandidateSet::DiametralBalls.ranges(&ps).unwrap().len(), 15);
    }
}
