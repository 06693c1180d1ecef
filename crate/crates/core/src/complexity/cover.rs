//! Covering and packing of a finite point set under a distance matrix.
//!
//! Balls are closed and centered at the points themselves; a point always
//! belongs to its own ball. Packings require strict separation.

use super::bits::Bits;
use crate::matrix::SymMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverMethod {
    Exact,
    Greedy,
}

impl CoverMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            CoverMethod::Exact => "exact",
            CoverMethod::Greedy => "greedy",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverKind {
    Covering,
    Packing,
}

/// A set of centers realizing a cover or a packing at `radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverResult {
    pub radius: f64,
    pub size: usize,
    pub centers: Vec<usize>,
    pub method: CoverMethod,
    pub kind: CoverKind,
}

impl CoverResult {
    fn new(radius: f64, centers: Vec<usize>, method: CoverMethod, kind: CoverKind) -> Self {
        CoverResult {
            radius,
            size: centers.len(),
            centers,
            method,
            kind,
        }
    }

    /// Replays the postcondition against `dist`.
    pub fn verify(&self, dist: &SymMatrix) -> bool {
        if self.size != self.centers.len() {
            return false;
        }
        match self.kind {
            CoverKind::Covering => (0..dist.n()).all(|p| {
                self.centers
                    .iter()
                    .any(|&c| c == p || dist.get(c, p) <= self.radius)
            }),
            CoverKind::Packing => self.centers.iter().enumerate().all(|(a, &i)| {
                self.centers[a + 1..]
                    .iter()
                    .all(|&j| i != j && dist.get(i, j) > self.radius)
            }),
        }
    }
}

fn balls(dist: &SymMatrix, eps: f64) -> Vec<Vec<u32>> {
    let n = dist.n();
    (0..n)
        .map(|c| {
            dist.row(c)
                .iter()
                .enumerate()
                .filter(|&(p, &v)| p == c || v <= eps)
                .map(|(p, _)| p as u32)
                .collect()
        })
        .collect()
}

fn ball_bits(dist: &SymMatrix, eps: f64) -> Vec<Bits> {
    balls(dist, eps)
        .into_iter()
        .map(|b| {
            let mut bits = Bits::new(dist.n());
            b.into_iter().for_each(|p| bits.insert(p as usize));
            bits
        })
        .collect()
}

/// Greedy set cover: repeatedly take the ball holding the most uncovered
/// points, ties to the smallest center index.
pub fn greedy_cover(dist: &SymMatrix, eps: f64) -> CoverResult {
    let n = dist.n();
    let balls = balls(dist, eps);
    let mut gain: Vec<usize> = balls.iter().map(|b| b.len()).collect();
    let mut covered = vec![false; n];
    let mut left = n;
    let mut centers = Vec::new();
    while left > 0 {
        let mut best = 0;
        for c in 1..n {
            if gain[c] > gain[best] {
                best = c;
            }
        }
        centers.push(best);
        for &p in &balls[best] {
            let p = p as usize;
            if !covered[p] {
                covered[p] = true;
                left -= 1;
                // the balls containing p are the balls centered in p's ball
                for &q in &balls[p] {
                    gain[q as usize] -= 1;
                }
            }
        }
    }
    CoverResult::new(eps, centers, CoverMethod::Greedy, CoverKind::Covering)
}

/// Maximal packing built by scanning points in index order.
pub fn greedy_packing(dist: &SymMatrix, eps: f64) -> CoverResult {
    let mut kept: Vec<usize> = Vec::new();
    for i in 0..dist.n() {
        if kept.iter().all(|&k| dist.get(i, k) > eps) {
            kept.push(i);
        }
    }
    CoverResult::new(eps, kept, CoverMethod::Greedy, CoverKind::Packing)
}

/// Minimum cover by branch and bound. Exponential in the worst case.
///
/// The upper bound starts from the greedy cover; the lower bound counts
/// uncovered points whose candidate-center sets are pairwise disjoint.
pub fn exact_cover(dist: &SymMatrix, eps: f64) -> CoverResult {
    let n = dist.n();
    if n == 0 {
        return CoverResult::new(eps, vec![], CoverMethod::Exact, CoverKind::Covering);
    }
    let balls = ball_bits(dist, eps);
    let mut best = greedy_cover(dist, eps).centers;
    let mut chosen = Vec::new();
    cover_search(&balls, Bits::full(n), &mut chosen, &mut best);
    best.sort_unstable();
    CoverResult::new(eps, best, CoverMethod::Exact, CoverKind::Covering)
}

fn disjoint_lower_bound(balls: &[Bits], uncovered: &Bits) -> usize {
    let mut order: Vec<(usize, usize)> = uncovered.iter().map(|p| (balls[p].count(), p)).collect();
    order.sort_unstable();
    let mut used = Bits::new(balls.len());
    let mut lb = 0;
    for (_, p) in order {
        if !balls[p].intersects(&used) {
            used.union_with(&balls[p]);
            lb += 1;
        }
    }
    lb
}

fn cover_search(balls: &[Bits], uncovered: Bits, chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
    if uncovered.is_empty() {
        if chosen.len() < best.len() {
            *best = chosen.clone();
        }
        return;
    }
    if chosen.len() + disjoint_lower_bound(balls, &uncovered) >= best.len() {
        return;
    }
    // branch on the uncovered point with the fewest candidate centers
    let pivot = uncovered
        .iter()
        .min_by_key(|&p| (balls[p].count(), p))
        .expect("non-empty");
    let mut cands: Vec<(usize, usize)> = balls[pivot]
        .iter()
        .map(|c| (balls[c].and_count(&uncovered), c))
        .collect();
    cands.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for (_, c) in cands {
        chosen.push(c);
        cover_search(balls, uncovered.difference(&balls[c]), chosen, best);
        chosen.pop();
        if chosen.len() + 1 >= best.len() {
            return;
        }
    }
}

/// Maximum packing (maximum independent set of the `<= eps` conflict
/// graph) by branch and bound. Exponential in the worst case.
pub fn exact_packing(dist: &SymMatrix, eps: f64) -> CoverResult {
    let n = dist.n();
    let conflicts = ball_bits(dist, eps);
    let mut best = greedy_packing(dist, eps).centers;
    let mut current = Vec::new();
    packing_search(&conflicts, Bits::full(n), &mut current, &mut best);
    best.sort_unstable();
    CoverResult::new(eps, best, CoverMethod::Exact, CoverKind::Packing)
}

fn packing_search(conflicts: &[Bits], candidates: Bits, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let Some(v) = candidates.first() else {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    };
    if current.len() + candidates.count() <= best.len() {
        return;
    }
    current.push(v);
    packing_search(conflicts, candidates.difference(&conflicts[v]), current, best);
    current.pop();
    let mut rest = candidates;
    rest.remove(v);
    packing_search(conflicts, rest, current, best);
}
