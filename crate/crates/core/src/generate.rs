//! Graph enumeration up to isomorphism and seeded random instances.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::circle::RationalAngle;
use crate::error::Result;
use crate::graph::{bit, Graph};
use crate::relalg::{AtomSet, Network, RelationAlgebra};
use crate::sigma::sigma_model;
use crate::signed::{SignedGraph, SwitchSet};

/// Largest order [`graphs_up_to_iso`] supports (the upper triangle must fit in a u64).
pub const MAX_ENUMERATION_ORDER: usize = 11;

fn encode(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    let mut k = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if g.has_edge(order[i], order[j]) {
                code |= 1 << k;
            }
            k += 1;
        }
    }
    code
}

/// Splits cells by neighbour counts into every cell until stable. Pieces are
/// ordered by their count vectors, so the result is isomorphism-invariant.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let masks: Vec<u64> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | bit(v))).collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let key = masks.iter().map(|&m| (g.neighbor_mask(v) & m).count_ones()).collect();
                    (key, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn search_canonical(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<u64>) {
    let cells = refine(g, cells);
    let Some(split) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = encode(g, &order);
        if best.is_none_or(|b| code > b) {
            *best = Some(code);
        }
        return;
    };
    for &v in &cells[split] {
        let mut next = cells[..split].to_vec();
        next.push(vec![v]);
        next.push(cells[split].iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[split + 1..]);
        search_canonical(g, next, best);
    }
}

/// A code equal for two graphs of the same order iff they are isomorphic.
pub fn canonical_code(g: &Graph) -> u64 {
    assert!(g.order() <= MAX_ENUMERATION_ORDER, "canonical codes need order <= 11");
    let mut best = None;
    search_canonical(g, vec![(0..g.order()).collect()], &mut best);
    best.unwrap_or(0)
}

fn decode(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).expect("decoded graph fits")
}

/// One representative of every isomorphism class on `n` vertices, sorted by
/// canonical code. Built by adding a vertex in every way to the classes on
/// `n - 1` vertices.
pub fn graphs_up_to_iso(n: usize) -> Vec<Graph> {
    assert!(n <= MAX_ENUMERATION_ORDER);
    let mut level: Vec<u64> = vec![0];
    for k in 1..=n {
        let mut seen = HashSet::new();
        for &code in &level {
            let base = decode(k - 1, code);
            for nbrs in 0u64..1 << (k - 1) {
                let mut edges = base.edges().to_vec();
                edges.extend((0..k - 1).filter(|&u| nbrs >> u & 1 == 1).map(|u| (u, k - 1)));
                seen.insert(canonical_code(&Graph::new(k, edges).unwrap()));
            }
        }
        level = seen.into_iter().collect();
        level.sort_unstable();
    }
    level.into_iter().map(|c| decode(n, c)).collect()
}

/// Each edge present independently with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("random graph fits")
}

/// `k` distinct angles with denominators up to `max_den`, none divisible by 3,
/// so no two are a third of a turn apart.
pub fn random_points<R: Rng>(rng: &mut R, k: usize, max_den: i64) -> Vec<RationalAngle> {
    let mut out: Vec<RationalAngle> = Vec::with_capacity(k);
    while out.len() < k {
        let den = rng.gen_range(1..=max_den.max(2));
        if den % 3 == 0 {
            continue;
        }
        let a = RationalAngle::new(rng.gen_range(0..den), den).unwrap();
        if !out.contains(&a) {
            out.push(a);
        }
    }
    out
}

pub fn random_switch<R: Rng>(rng: &mut R, n: usize) -> SwitchSet {
    (0..n).filter(|_| rng.gen_bool(0.5)).collect()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// A signed graph realized by the universal labelling, then switched and
/// relabelled at random. Always independence number at most 2 and
/// anti-even-balancing.
pub fn random_sigma_model<R: Rng>(rng: &mut R, k: usize, max_den: i64) -> Result<SignedGraph> {
    let pts = random_points(rng, k, max_den);
    let sg = sigma_model(&pts)?.switch(&random_switch(rng, k))?;
    sg.permute(&random_permutation(rng, k))
}

/// A network on `n` variables with every off-diagonal pair drawn uniformly
/// from the non-empty elements, and the diagonal left at top.
pub fn random_network<R: Rng>(rng: &mut R, ra: &RelationAlgebra, n: usize) -> Network {
    let top = ra.top().0;
    let mut net = Network::new(ra, n);
    for x in 0..n {
        for y in x + 1..n {
            let set = AtomSet(rng.gen_range(1..=top));
            net.constrain(ra, x, y, set).expect("in range");
        }
    }
    net
}
