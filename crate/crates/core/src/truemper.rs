//! Wheels, three-path configurations, and the local balanceability test.
//!
//! A graph is balanceable for a length-based rule iff every induced wheel and
//! every induced three-path configuration is. Detection here is exhaustive:
//! wheels come from the induced-cycle enumeration (one pass per hub, so
//! `O(#cycles * n)`), and three-path configurations are assembled from all
//! chordless paths between vertex pairs, which is exponential in the worst
//! case. That is fine for the graphs of at most a dozen vertices this is used
//! on.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph, InducedCycle};
use crate::signed::{find_balancing, BalanceRule};

/// An induced cycle plus an outside vertex seeing at least three of its vertices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct WheelWitness {
    pub cycle: InducedCycle,
    pub hub: usize,
    /// Exactly the cycle vertices adjacent to `hub`, ascending.
    pub spokes: Vec<usize>,
}

impl WheelWitness {
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = self.cycle.vertices().to_vec();
        v.push(self.hub);
        v.sort_unstable();
        v
    }

    /// Re-checks every defining condition against `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        if InducedCycle::new(g, self.cycle.vertices()).is_err() || self.hub >= g.order() {
            return false;
        }
        let cyc = self.cycle.mask();
        if cyc & bit(self.hub) != 0 {
            return false;
        }
        let seen: Vec<usize> = bits(g.neighbor_mask(self.hub) & cyc).collect();
        seen.len() >= 3 && seen == self.spokes
    }
}

/// Which of the three shapes a configuration has.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThreePathCase {
    /// Three chordless paths between two non-adjacent vertices.
    Theta = 1,
    /// Three paths from the corners of a triangle to a common apex.
    Pyramid = 2,
    /// Three disjoint paths joining the corners of two triangles.
    Prism = 3,
}

/// Three paths `P_i` from `x_i` to `y_i` plus the extra edge set `E`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ThreePathWitness {
    pub case: ThreePathCase,
    /// Vertex sequences, each running from `x_i` to `y_i`.
    pub paths: [Vec<usize>; 3],
    pub extra_edges: Vec<(usize, usize)>,
}

fn norm(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

impl ThreePathWitness {
    fn new(case: ThreePathCase, mut paths: [Vec<usize>; 3]) -> Self {
        paths.sort();
        let xs: Vec<usize> = paths.iter().map(|p| p[0]).collect();
        let ys: Vec<usize> = paths.iter().map(|p| *p.last().expect("non-empty")).collect();
        let mut extra_edges = Vec::new();
        if case != ThreePathCase::Theta {
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                extra_edges.push(norm(xs[i], xs[j]));
            }
        }
        if case == ThreePathCase::Prism {
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                extra_edges.push(norm(ys[i], ys[j]));
            }
        }
        extra_edges.sort_unstable();
        ThreePathWitness {
            case,
            paths,
            extra_edges,
        }
    }

    pub fn vertex_mask(&self) -> u64 {
        self.paths.iter().flatten().fold(0, |m, &v| m | bit(v))
    }

    pub fn vertices(&self) -> Vec<usize> {
        bits(self.vertex_mask()).collect()
    }

    /// Checks the definition literally against `g`: the vertex and edge
    /// decomposition, the pairwise intersection bound, and that exactly one
    /// case condition holds, namely `self.case`. Paths in the pyramid and
    /// prism cases must have distinct endpoints.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut path_edges = BTreeSet::new();
        for p in &self.paths {
            if p.is_empty() || p.iter().any(|&v| v >= g.order()) {
                return false;
            }
            let mask = p.iter().fold(0u64, |m, &v| m | bit(v));
            if mask.count_ones() as usize != p.len() {
                return false;
            }
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return false;
                }
                path_edges.insert(norm(w[0], w[1]));
            }
        }
        let masks: Vec<u64> = self
            .paths
            .iter()
            .map(|p| p.iter().fold(0, |m, &v| m | bit(v)))
            .collect();
        let x: Vec<usize> = self.paths.iter().map(|p| p[0]).collect();
        let y: Vec<usize> = self.paths.iter().map(|p| *p.last().unwrap()).collect();
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let allowed = bit(x[i]) | bit(x[j]) | bit(y[i]) | bit(y[j]);
            if masks[i] & masks[j] & !allowed != 0 {
                return false;
            }
        }
        let extra: BTreeSet<(usize, usize)> = self.extra_edges.iter().map(|&(a, b)| norm(a, b)).collect();
        if extra.iter().any(|&(a, b)| a == b || !g.has_edge(a, b)) {
            return false;
        }
        let union = masks[0] | masks[1] | masks[2];
        let (sub, map) = g.induced_on_mask(union);
        let induced: BTreeSet<(usize, usize)> = sub
            .edges()
            .iter()
            .map(|&(a, b)| (map[a], map[b]))
            .collect();
        let declared: BTreeSet<(usize, usize)> = path_edges.union(&extra).copied().collect();
        if induced != declared {
            return false;
        }

        let pairs = [(0, 1), (0, 2), (1, 2)];
        let triangle = |v: &[usize]| -> BTreeSet<(usize, usize)> {
            pairs.iter().map(|&(i, j)| norm(v[i], v[j])).collect()
        };
        let distinct = |v: &[usize]| v[0] != v[1] && v[0] != v[2] && v[1] != v[2];
        let long_paths = |min: usize| self.paths.iter().all(|p| p.len() >= min);

        let theta = x.iter().all(|&v| v == x[0])
            && y.iter().all(|&v| v == y[0])
            && long_paths(3)
            && extra.is_empty();
        let pyramid = y.iter().all(|&v| v == y[0])
            && distinct(&x)
            && extra == triangle(&x)
            && pairs.iter().all(|&(i, j)| masks[i] & masks[j] == bit(y[0]))
            && long_paths(2);
        let prism = pairs.iter().all(|&(i, j)| masks[i] & masks[j] == 0)
            && distinct(&x)
            && distinct(&y)
            && extra == triangle(&x).union(&triangle(&y)).copied().collect()
            && long_paths(2);

        let holds = [theta, pyramid, prism];
        holds.iter().filter(|&&h| h).count() == 1 && holds[self.case as usize - 1]
    }
}

/// Every wheel of `g`: each induced cycle with each qualifying hub, ordered
/// by cycle and then hub.
pub fn find_wheels(g: &Graph) -> Vec<WheelWitness> {
    let mut out = Vec::new();
    for cycle in g.induced_cycles(None) {
        let cyc = cycle.mask();
        for hub in bits(g.vertex_mask() & !cyc) {
            let seen = g.neighbor_mask(hub) & cyc;
            if seen.count_ones() >= 3 {
                out.push(WheelWitness {
                    cycle: cycle.clone(),
                    hub,
                    spokes: bits(seen).collect(),
                });
            }
        }
    }
    out
}

/// All chordless paths with at least two vertices, keyed by `(start, end)`.
fn chordless_paths(g: &Graph) -> BTreeMap<(usize, usize), Vec<Vec<usize>>> {
    fn grow(
        g: &Graph,
        path: &mut Vec<usize>,
        used: u64,
        out: &mut BTreeMap<(usize, usize), Vec<Vec<usize>>>,
    ) {
        let last = *path.last().unwrap();
        let before: u64 = path[..path.len() - 1].iter().fold(0, |m, &v| m | bit(v));
        for v in bits(g.neighbor_mask(last) & !used) {
            if g.neighbor_mask(v) & before != 0 {
                continue;
            }
            path.push(v);
            out.entry((path[0], v)).or_default().push(path.clone());
            grow(g, path, used | bit(v), out);
            path.pop();
        }
    }
    let mut out = BTreeMap::new();
    for s in 0..g.order() {
        let mut path = vec![s];
        grow(g, &mut path, bit(s), &mut out);
    }
    out
}

fn mask_of(p: &[usize]) -> u64 {
    p.iter().fold(0, |m, &v| m | bit(v))
}

/// Are there edges between `a` and `b` other than those in `allowed`?
fn extra_contact(g: &Graph, a: u64, b: u64, allowed: &[(usize, usize)]) -> bool {
    for u in bits(a) {
        for w in bits(g.neighbor_mask(u) & b) {
            if !allowed.contains(&norm(u, w)) {
                return true;
            }
        }
    }
    false
}

fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for &(a, b) in g.edges() {
        for c in bits(g.neighbor_mask(a) & g.neighbor_mask(b)) {
            if c > b {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Every induced three-path configuration of `g`, one lexicographically
/// least decomposition per vertex set and case, ordered by case and then by
/// vertex set.
pub fn find_3pcs(g: &Graph) -> Vec<ThreePathWitness> {
    let paths = chordless_paths(g);
    let empty = Vec::new();
    let between = |a: usize, b: usize| paths.get(&(a, b)).unwrap_or(&empty);
    let mut best: BTreeMap<(ThreePathCase, Vec<usize>), ThreePathWitness> = BTreeMap::new();
    let mut offer = |w: ThreePathWitness| {
        debug_assert!(w.validate(g), "invalid witness {w:?}");
        let key = (w.case, w.vertices());
        match best.get(&key) {
            Some(prev) if *prev <= w => {}
            _ => {
                best.insert(key, w);
            }
        }
    };

    // Theta: x < y non-adjacent, three chordless x-y paths with pairwise
    // disjoint, anticomplete interiors.
    for x in 0..g.order() {
        for y in x + 1..g.order() {
            if g.has_edge(x, y) {
                continue;
            }
            let ps = between(x, y);
            let ends = bit(x) | bit(y);
            let inner: Vec<u64> = ps.iter().map(|p| mask_of(p) & !ends).collect();
            let compatible = |i: usize, j: usize| {
                inner[i] & inner[j] == 0 && !extra_contact(g, inner[i], inner[j], &[])
            };
            for i in 0..ps.len() {
                for j in i + 1..ps.len() {
                    if !compatible(i, j) {
                        continue;
                    }
                    for k in j + 1..ps.len() {
                        if compatible(i, k) && compatible(j, k) {
                            offer(ThreePathWitness::new(
                                ThreePathCase::Theta,
                                [ps[i].clone(), ps[j].clone(), ps[k].clone()],
                            ));
                        }
                    }
                }
            }
        }
    }

    let tris = triangles(g);

    // Pyramid: a triangle x1 x2 x3 and an apex y, with paths x_i -> y that
    // meet only in y and touch each other only along the triangle.
    for t in &tris {
        let tmask = mask_of(t);
        let tri_edges = [norm(t[0], t[1]), norm(t[0], t[2]), norm(t[1], t[2])];
        for y in bits(g.vertex_mask() & !tmask) {
            let legs: Vec<Vec<&Vec<usize>>> = t
                .iter()
                .map(|&xi| {
                    let others = tmask & !bit(xi);
                    between(xi, y)
                        .iter()
                        .filter(|p| mask_of(p) & others == 0)
                        .collect()
                })
                .collect();
            let body = |p: &Vec<usize>| mask_of(p) & !bit(y);
            let compatible = |p: &Vec<usize>, q: &Vec<usize>| {
                body(p) & body(q) == 0 && !extra_contact(g, body(p), body(q), &tri_edges)
            };
            for p0 in &legs[0] {
                for p1 in legs[1].iter().filter(|p1| compatible(p0, p1)) {
                    for p2 in legs[2].iter().filter(|p2| compatible(p0, p2) && compatible(p1, p2)) {
                        offer(ThreePathWitness::new(
                            ThreePathCase::Pyramid,
                            [(*p0).clone(), (*p1).clone(), (*p2).clone()],
                        ));
                    }
                }
            }
        }
    }

    // Prism: disjoint triangles joined by three disjoint paths that touch
    // each other only along the triangles.
    const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for (ti, s) in tris.iter().enumerate() {
        for t in &tris[ti + 1..] {
            if mask_of(s) & mask_of(t) != 0 {
                continue;
            }
            let allowed: Vec<(usize, usize)> = [(0, 1), (0, 2), (1, 2)]
                .iter()
                .flat_map(|&(i, j)| [norm(s[i], s[j]), norm(t[i], t[j])])
                .collect();
            let corners = mask_of(s) | mask_of(t);
            for perm in PERMS {
                let legs: Vec<Vec<&Vec<usize>>> = (0..3)
                    .map(|i| {
                        let (a, b) = (s[i], t[perm[i]]);
                        let others = corners & !bit(a) & !bit(b);
                        between(a, b)
                            .iter()
                            .filter(|p| mask_of(p) & others == 0)
                            .collect()
                    })
                    .collect();
                let compatible = |p: &Vec<usize>, q: &Vec<usize>| {
                    mask_of(p) & mask_of(q) == 0 && !extra_contact(g, mask_of(p), mask_of(q), &allowed)
                };
                for p0 in &legs[0] {
                    for p1 in legs[1].iter().filter(|p1| compatible(p0, p1)) {
                        for p2 in legs[2].iter().filter(|p2| compatible(p0, p2) && compatible(p1, p2)) {
                            let fwd = ThreePathWitness::new(
                                ThreePathCase::Prism,
                                [(*p0).clone(), (*p1).clone(), (*p2).clone()],
                            );
                            let rev = |p: &Vec<usize>| p.iter().rev().copied().collect::<Vec<_>>();
                            let bwd = ThreePathWitness::new(
                                ThreePathCase::Prism,
                                [rev(p0), rev(p1), rev(p2)],
                            );
                            offer(fwd.min(bwd));
                        }
                    }
                }
            }
        }
    }

    best.into_values().collect()
}

/// Vertex sets of every wheel and three-path configuration, deduplicated.
fn obstruction_candidates(g: &Graph) -> BTreeSet<Vec<usize>> {
    let mut sets: BTreeSet<Vec<usize>> = find_wheels(g).iter().map(WheelWitness::vertices).collect();
    sets.extend(find_3pcs(g).iter().map(ThreePathWitness::vertices));
    sets
}

/// The first wheel or three-path configuration (by vertex set) whose induced
/// subgraph is not `rule`-balanceable.
pub fn find_local_obstruction(g: &Graph, rule: &BalanceRule) -> Result<Option<Vec<usize>>> {
    if !rule.is_length_based() {
        return Err(Error::UnsupportedRule);
    }
    for set in obstruction_candidates(g) {
        let (sub, _) = g.induced_subgraph(&set)?;
        if find_balancing(&sub, rule)?.is_none() {
            return Ok(Some(set));
        }
    }
    Ok(None)
}

/// Decides balanceability from wheels and three-path configurations alone.
pub fn truemper_balanceable(g: &Graph, rule: &BalanceRule) -> Result<bool> {
    Ok(find_local_obstruction(g, rule)?.is_none())
}
