//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;

use circsign::relalg::{AtomSet, Network, RelationAlgebra, ATOM_ID, ATOM_N, ATOM_ONE};
use circsign::{BalanceRule, Graph, SignedGraph, SwitchSet};

pub fn random_labels<R: Rng>(rng: &mut R, m: usize) -> Vec<u8> {
    (0..m).map(|_| rng.gen_range(0..2)).collect()
}

/// The signed subgraph induced on `vertices`, renumbered in the given order.
pub fn restrict(sg: &SignedGraph, vertices: &[usize]) -> SignedGraph {
    let pos = |v: usize| vertices.iter().position(|&u| u == v);
    let edges: Vec<(usize, usize, u8)> = sg
        .labelled_edges()
        .filter_map(|(u, v, l)| Some((pos(u)?, pos(v)?, l)))
        .collect();
    SignedGraph::from_labelled_edges(vertices.len(), &edges).unwrap()
}

/// Tries every vertex subset as a switch.
pub fn brute_force_switch(a: &SignedGraph, b: &SignedGraph) -> bool {
    if a.graph() != b.graph() {
        return false;
    }
    let n = a.graph().order();
    (0u32..1 << n).any(|mask| {
        let s: SwitchSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        a.switch(&s).unwrap() == *b
    })
}

pub fn cycle_sums_agree(a: &SignedGraph, b: &SignedGraph) -> bool {
    a.graph()
        .induced_cycles(None)
        .iter()
        .all(|c| a.cycle_sum(c).unwrap() == b.cycle_sum(c).unwrap())
}

/// Every signed graph on 1 to 3 vertices without an independent triple and
/// without a triangle of sum 1.
pub fn all_signed_patterns() -> Vec<SignedGraph> {
    let mut out = Vec::new();
    for n in 1..=3usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        // each pair: 0 absent, 1 label 0, 2 label 1
        for code in 0..3usize.pow(pairs.len() as u32) {
            let edges: Vec<(usize, usize, u8)> = pairs
                .iter()
                .enumerate()
                .filter_map(|(i, &(u, v))| match code / 3usize.pow(i as u32) % 3 {
                    0 => None,
                    k => Some((u, v, k as u8 - 1)),
                })
                .collect();
            if n == 3 && edges.is_empty() {
                continue;
            }
            if edges.len() == 3 && edges.iter().map(|e| e.2).sum::<u8>() % 2 == 1 {
                continue;
            }
            out.push(SignedGraph::from_labelled_edges(n, &edges).unwrap());
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
        .collect()
}

/// No induced triangle, 2K2 + K1, C5 + K1 or C6, by degree sequences of
/// induced subgraphs.
pub fn forbidden_free_by_subsets(g: &Graph) -> bool {
    let n = g.order();
    let shape = |s: &[usize]| {
        let mut deg: Vec<usize> = s
            .iter()
            .map(|&u| s.iter().filter(|&&v| g.has_edge(u, v)).count())
            .collect();
        deg.sort_unstable();
        deg
    };
    let has_triangle = |s: &[usize]| {
        s.iter().any(|&a| {
            s.iter()
                .any(|&b| s.iter().any(|&c| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)))
        })
    };
    for s in subsets(n, 3) {
        if shape(&s) == [2, 2, 2] {
            return false;
        }
    }
    for s in subsets(n, 5) {
        if shape(&s) == [0, 1, 1, 1, 1] {
            return false;
        }
    }
    for s in subsets(n, 6) {
        let d = shape(&s);
        if d == [0, 2, 2, 2, 2, 2] || (d == [2; 6] && !has_triangle(&s)) {
            return false;
        }
    }
    true
}

struct Refinement<'a> {
    ra: &'a RelationAlgebra,
    net: &'a Network,
    n: usize,
    pairs: Vec<(usize, usize)>,
    atom: Vec<Option<usize>>,
}

impl Refinement<'_> {
    fn get(&self, x: usize, y: usize) -> Option<usize> {
        if x == y {
            return Some(ATOM_ID);
        }
        let (a, b) = (x.min(y), x.max(y));
        let a = self.atom[a * self.n + b]?;
        Some(if x < y { a } else { self.ra.converse_atom(a) })
    }

    fn triangles_ok(&self, x: usize, y: usize) -> bool {
        (0..self.n).filter(|&z| z != x && z != y).all(|z| {
            let (Some(xz), Some(zy), Some(xy)) = (self.get(x, z), self.get(z, y), self.get(x, y)) else {
                return true;
            };
            let (yz, zx, yx) = (self.get(y, z).unwrap(), self.get(z, x).unwrap(), self.get(y, x).unwrap());
            self.ra.is_allowed(xz, zy, xy) && self.ra.is_allowed(yz, zx, yx)
        })
    }

    fn leaf_ok(&self) -> bool {
        let n = self.n;
        let mut rep: Vec<usize> = (0..n).collect();
        for x in 0..n {
            for y in 0..x {
                if self.get(y, x) == Some(ATOM_ID) {
                    rep[x] = rep[y];
                    break;
                }
            }
        }
        let reps: Vec<usize> = (0..n).filter(|&x| rep[x] == x).collect();
        let mut edges = Vec::new();
        for (i, &x) in reps.iter().enumerate() {
            for (j, &y) in reps.iter().enumerate().skip(i + 1) {
                match self.get(x, y).unwrap() {
                    ATOM_N => {}
                    ATOM_ONE => edges.push((i, j, 1)),
                    _ => edges.push((i, j, 0)),
                }
            }
        }
        let sg = SignedGraph::from_labelled_edges(reps.len(), &edges).unwrap();
        sg.graph().independent_triple().is_none() && sg.is_balancing(&BalanceRule::AntiEven).unwrap()
    }

    fn search(&mut self, k: usize) -> bool {
        if k == self.pairs.len() {
            return self.leaf_ok();
        }
        let (x, y) = self.pairs[k];
        for a in self.net.get(x, y).iter() {
            self.atom[x * self.n + y] = Some(a);
            if self.triangles_ok(x, y) && self.search(k + 1) {
                return true;
            }
        }
        self.atom[x * self.n + y] = None;
        false
    }
}

/// Satisfiability by trying every atomic refinement, contracting identity
/// classes, and testing the resulting signed graph directly.
pub fn nsp_oracle(ra: &RelationAlgebra, net: &Network) -> bool {
    let n = net.vars();
    if (0..n).any(|x| !net.get(x, x).contains(ATOM_ID)) {
        return false;
    }
    let pairs = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    Refinement {
        ra,
        net,
        n,
        pairs,
        atom: vec![None; n * n],
    }
    .search(0)
}

/// Composition of elements computed from the allowed triples alone.
fn compose(ra: &RelationAlgebra, a: AtomSet, b: AtomSet) -> AtomSet {
    let mut out = 0;
    for x in a.iter() {
        for y in b.iter() {
            for z in 0..ra.atom_count() {
                if ra.is_allowed(x, y, z) {
                    out |= 1 << z;
                }
            }
        }
    }
    AtomSet(out)
}

fn converse_involution(ra: &RelationAlgebra) -> bool {
    let n = ra.atom_count();
    (0..n).all(|a| ra.converse_atom(ra.converse_atom(a)) == a) && ra.converse_atom(ra.id_atom()) == ra.id_atom()
}

fn identity_law(ra: &RelationAlgebra) -> bool {
    let n = ra.atom_count();
    let id = ra.id_atom();
    (0..n).all(|a| (0..n).all(|b| ra.is_allowed(a, id, b) == (a == b) && ra.is_allowed(id, a, b) == (a == b)))
}

fn peircean_closure(ra: &RelationAlgebra) -> bool {
    let n = ra.atom_count();
    let c = |a| ra.converse_atom(a);
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                !ra.is_allowed(x, y, z)
                    || [
                        (c(x), z, y),
                        (z, c(y), x),
                        (c(z), x, c(y)),
                        (y, c(z), c(x)),
                        (c(y), c(x), c(z)),
                    ]
                    .iter()
                    .all(|&(a, b, d)| ra.is_allowed(a, b, d))
            })
        })
    })
}

fn associativity_over_elements(ra: &RelationAlgebra) -> bool {
    let size = 1u32 << ra.atom_count();
    (0..size).all(|a| {
        (0..size).all(|b| {
            let ab = compose(ra, AtomSet(a), AtomSet(b));
            (0..size).all(|c| {
                let (c, bc) = (AtomSet(c), compose(ra, AtomSet(b), AtomSet(c)));
                compose(ra, ab, c) == compose(ra, AtomSet(a), bc)
            })
        })
    })
}

fn library_composition_agrees(ra: &RelationAlgebra) -> bool {
    let size = 1u32 << ra.atom_count();
    (0..size).all(|a| (0..size).all(|b| ra.compose_elements(AtomSet(a), AtomSet(b)) == compose(ra, AtomSet(a), AtomSet(b))))
}

pub type Law = fn(&RelationAlgebra) -> bool;

pub const ALGEBRA_LAWS: [(&str, Law); 5] = [
    ("converse involution", converse_involution),
    ("identity", identity_law),
    ("Peircean closure", peircean_closure),
    ("associativity over elements", associativity_over_elements),
    ("tabulated composition", library_composition_agrees),
];

pub mod strategy {
    use circsign::{Graph, SignedGraph};
    use proptest::prelude::*;

    pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    pub fn signed(max_n: usize) -> impl Strategy<Value = SignedGraph> {
        graph(max_n).prop_flat_map(|g| {
            let m = g.edge_count();
            proptest::collection::vec(0u8..2, m).prop_map(move |labels| SignedGraph::new(g.clone(), labels).unwrap())
        })
    }

    /// A vertex subset of `0..n`, ascending.
    pub fn subset_of(n: usize) -> impl Strategy<Value = Vec<usize>> {
        proptest::collection::vec(any::<bool>(), n)
            .prop_map(|bits| bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i).collect())
    }
}
