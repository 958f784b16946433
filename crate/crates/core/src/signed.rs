//! Z_2 edge labellings, switching, and balanceability.
//!
//! A labelling assigns `0` or `1` to every edge, stored in the graph's
//! sorted edge order. Balanceability with respect to a [`BalanceRule`] is a
//! linear system over GF(2): one unknown per edge, one equation per induced
//! cycle.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::gf2::Gf2System;
use crate::graph::{Graph, InducedCycle};

/// Prescribed cycle sums on induced cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BalanceRule {
    /// Triangles sum to 0, every longer induced cycle to 1.
    AntiEven,
    /// Triangles sum to 1, every longer induced cycle to 0.
    EvenSignable,
    /// Every induced cycle sums to 1.
    OddSignable,
    /// Per-cycle values; must cover every induced cycle of the graph.
    Explicit(BTreeMap<InducedCycle, u8>),
}

impl BalanceRule {
    /// The three rules that depend only on cycle length.
    pub const NAMED: [BalanceRule; 3] = [
        BalanceRule::AntiEven,
        BalanceRule::EvenSignable,
        BalanceRule::OddSignable,
    ];

    pub fn value(&self, cycle: &InducedCycle) -> Result<u8> {
        let triangle = cycle.len() == 3;
        Ok(match self {
            BalanceRule::AntiEven => u8::from(!triangle),
            BalanceRule::EvenSignable => u8::from(triangle),
            BalanceRule::OddSignable => 1,
            BalanceRule::Explicit(map) => *map
                .get(cycle)
                .ok_or_else(|| Error::RuleIncomplete(cycle.vertices().to_vec()))?,
        })
    }

    pub fn is_length_based(&self) -> bool {
        !matches!(self, BalanceRule::Explicit(_))
    }

    pub fn name(&self) -> &'static str {
        match self {
            BalanceRule::AntiEven => "anti-even",
            BalanceRule::EvenSignable => "even-signable",
            BalanceRule::OddSignable => "odd-signable",
            BalanceRule::Explicit(_) => "explicit",
        }
    }
}

impl std::str::FromStr for BalanceRule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "anti-even" => Ok(BalanceRule::AntiEven),
            "even-signable" | "even" => Ok(BalanceRule::EvenSignable),
            "odd-signable" | "odd" => Ok(BalanceRule::OddSignable),
            other => Err(Error::Parse(format!("unknown balance rule {other:?}"))),
        }
    }
}

/// A set of vertices to switch over.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SwitchSet(pub BTreeSet<usize>);

impl SwitchSet {
    pub fn empty() -> Self {
        SwitchSet(BTreeSet::new())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn symmetric_difference(&self, other: &SwitchSet) -> SwitchSet {
        SwitchSet(self.0.symmetric_difference(&other.0).copied().collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<usize> for SwitchSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        SwitchSet(iter.into_iter().collect())
    }
}

/// A graph together with a total Z_2 labelling of its edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    graph: Graph,
    labels: Vec<u8>,
}

impl SignedGraph {
    /// `labels[i]` labels `graph.edges()[i]`.
    pub fn new(graph: Graph, labels: Vec<u8>) -> Result<Self> {
        if labels.len() != graph.edge_count() {
            return Err(Error::LabelCount {
                expected: graph.edge_count(),
                got: labels.len(),
            });
        }
        if let Some(&bad) = labels.iter().find(|&&l| l > 1) {
            return Err(Error::InvalidLabel(bad));
        }
        Ok(SignedGraph { graph, labels })
    }

    /// Builds a signed graph from `(u, v, label)` triples.
    pub fn from_labelled_edges(order: usize, edges: &[(usize, usize, u8)]) -> Result<Self> {
        let graph = Graph::new(order, edges.iter().map(|&(u, v, _)| (u, v)))?;
        let mut labels = vec![None; graph.edge_count()];
        for &(u, v, l) in edges {
            if l > 1 {
                return Err(Error::InvalidLabel(l));
            }
            let i = graph.edge_index(u, v).expect("edge was just inserted");
            match labels[i] {
                Some(prev) if prev != l => {
                    return Err(Error::Validation(format!(
                        "edge ({u}, {v}) labelled both {prev} and {l}"
                    )))
                }
                _ => labels[i] = Some(l),
            }
        }
        let labels = labels.into_iter().map(|l| l.expect("every edge labelled")).collect();
        SignedGraph::new(graph, labels)
    }

    /// Labels every edge of `graph` with zero.
    pub fn all_zero(graph: Graph) -> Self {
        let labels = vec![0; graph.edge_count()];
        SignedGraph { graph, labels }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn into_parts(self) -> (Graph, Vec<u8>) {
        (self.graph, self.labels)
    }

    pub fn label(&self, u: usize, v: usize) -> Option<u8> {
        self.graph.edge_index(u, v).map(|i| self.labels[i])
    }

    /// `(u, v, label)` for every edge in edge order.
    pub fn labelled_edges(&self) -> impl Iterator<Item = (usize, usize, u8)> + '_ {
        self.graph
            .edges()
            .iter()
            .zip(&self.labels)
            .map(|(&(u, v), &l)| (u, v, l))
    }

    /// Z_2 sum of the labels along an induced cycle of the underlying graph.
    pub fn cycle_sum(&self, cycle: &InducedCycle) -> Result<u8> {
        InducedCycle::new(&self.graph, cycle.vertices())?;
        Ok(self.cycle_sum_unchecked(cycle))
    }

    pub(crate) fn cycle_sum_unchecked(&self, cycle: &InducedCycle) -> u8 {
        cycle.edges().fold(0, |acc, (u, v)| {
            acc ^ self.label(u, v).expect("cycle edge present")
        })
    }

    /// Flips every edge with exactly one endpoint in `s`.
    pub fn switch(&self, s: &SwitchSet) -> Result<SignedGraph> {
        for v in s.iter() {
            self.graph.check_vertex(v)?;
        }
        let labels = self
            .labelled_edges()
            .map(|(u, v, l)| l ^ u8::from(s.contains(u) != s.contains(v)))
            .collect();
        Ok(SignedGraph {
            graph: self.graph.clone(),
            labels,
        })
    }

    /// Does every induced cycle sum to the value `rule` prescribes?
    pub fn is_balancing(&self, rule: &BalanceRule) -> Result<bool> {
        for cycle in self.graph.induced_cycles(None) {
            if self.cycle_sum_unchecked(&cycle) != rule.value(&cycle)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<SignedGraph> {
        let edges: Vec<_> = self
            .labelled_edges()
            .map(|(u, v, l)| (perm[u], perm[v], l))
            .collect();
        SignedGraph::from_labelled_edges(self.graph.order(), &edges)
    }
}

fn cycle_system(g: &Graph, rule: &BalanceRule) -> Result<Gf2System> {
    let mut sys = Gf2System::new(g.edge_count());
    for cycle in g.induced_cycles(None) {
        let cols = cycle
            .edges()
            .map(|(u, v)| g.edge_index(u, v).expect("cycle edge present"));
        sys.push(cols, rule.value(&cycle)? == 1);
    }
    Ok(sys)
}

/// A `rule`-balancing labelling of `g`, or `None` if there is none.
///
/// The answer sets every free unknown of the elimination to zero, so it is
/// reproducible.
pub fn find_balancing(g: &Graph, rule: &BalanceRule) -> Result<Option<Vec<u8>>> {
    let sys = cycle_system(g, rule)?;
    Ok(sys
        .solve()
        .map(|sol| sol.values.into_iter().map(u8::from).collect()))
}

/// The unique `rule`-balancing labelling of `g` that agrees with
/// `tree_labels` on the maximal forest `tree_edges`.
pub fn tree_extend(
    g: &Graph,
    tree_edges: &[(usize, usize)],
    tree_labels: &[u8],
    rule: &BalanceRule,
) -> Result<Vec<u8>> {
    if tree_edges.len() != tree_labels.len() {
        return Err(Error::LabelCount {
            expected: tree_edges.len(),
            got: tree_labels.len(),
        });
    }
    let mut parent: Vec<usize> = (0..g.order()).collect();
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    let mut pinned = Vec::with_capacity(tree_edges.len());
    for (&(u, v), &l) in tree_edges.iter().zip(tree_labels) {
        if l > 1 {
            return Err(Error::InvalidLabel(l));
        }
        let idx = g
            .edge_index(u, v)
            .ok_or_else(|| Error::NotATree(format!("({u}, {v}) is not an edge")))?;
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return Err(Error::NotATree(format!("({u}, {v}) closes a cycle")));
        }
        parent[ru] = rv;
        pinned.push((idx, l));
    }
    let forest_size = g.order() - g.components().len();
    if tree_edges.len() != forest_size {
        return Err(Error::NotATree(format!(
            "{} edges, a spanning forest needs {forest_size}",
            tree_edges.len()
        )));
    }

    let mut sys = cycle_system(g, rule)?;
    if sys.solve().is_none() {
        return Err(Error::NotBalanceable);
    }
    for &(idx, l) in &pinned {
        sys.push([idx], l == 1);
    }
    let sol = sys.solve().ok_or_else(|| {
        Error::InternalInvariantViolation("pinned forest labels made a balanceable system inconsistent".into())
    })?;
    if !sol.free.is_empty() {
        return Err(Error::InternalInvariantViolation(format!(
            "forest labels leave {} edge labels undetermined",
            sol.free.len()
        )));
    }
    Ok(sol.values.into_iter().map(u8::from).collect())
}

/// A set `S` with `a` switched over `S` equal to `b`, or `None`.
///
/// Membership is propagated from the smallest vertex of each component,
/// which is never in `S`, along a breadth-first spanning tree; every edge is
/// then checked.
pub fn switching_witness(a: &SignedGraph, b: &SignedGraph) -> Result<Option<SwitchSet>> {
    if a.graph != b.graph {
        return Err(Error::GraphMismatch);
    }
    let g = &a.graph;
    let n = g.order();
    let mut side: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].expect("visited");
            for v in g.neighbors(u) {
                if side[v].is_none() {
                    let differ = a.label(u, v) != b.label(u, v);
                    side[v] = Some(su ^ differ);
                    queue.push_back(v);
                }
            }
        }
    }
    let s: SwitchSet = (0..n).filter(|&v| side[v] == Some(true)).collect();
    let consistent = a
        .labelled_edges()
        .zip(b.labels())
        .all(|((u, v, la), &lb)| (la ^ lb == 1) == (s.contains(u) != s.contains(v)));
    Ok(consistent.then_some(s))
}
