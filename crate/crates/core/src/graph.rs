//! Finite simple graphs on dense vertex indices.
//!
//! Adjacency is stored as one `u64` neighbourhood mask per vertex, which caps
//! the order at [`MAX_ORDER`]. Everything in this crate works at desk scale
//! (networks of a handful of variables, point sets of a dozen angles), so the
//! cap is never the binding constraint.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates over the set bits of a mask in ascending order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// An undirected simple graph on the vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
    /// Sorted `(u, v)` pairs with `u < v`; the position of a pair is its edge index.
    edges: Vec<(usize, usize)>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list, normalizing and deduplicating pairs.
    pub fn new(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge(order));
        }
        let mut adj = vec![0u64; order];
        for (a, b) in edges {
            if a == b {
                return Err(Error::LoopEdge(a));
            }
            for v in [a, b] {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
            }
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Builds a graph from symmetric, loop-free neighbourhood masks.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        let order = adj.len();
        debug_assert!(order <= MAX_ORDER);
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            debug_assert_eq!(row & bit(u), 0, "loop at {u}");
            for v in bits(row >> u >> 1) {
                let v = v + u + 1;
                debug_assert!(adj[v] & bit(u) != 0, "asymmetric adjacency");
                edges.push((u, v));
            }
        }
        Graph { order, adj, edges }
    }

    pub fn empty(order: usize) -> Self {
        assert!(order <= MAX_ORDER);
        Self::from_adjacency(vec![0; order])
    }

    pub fn complete(order: usize) -> Self {
        assert!(order <= MAX_ORDER);
        let all = full_mask(order);
        Self::from_adjacency((0..order).map(|v| all & !bit(v)).collect())
    }

    /// The path on `order` vertices `0 - 1 - ... - (order-1)`.
    pub fn path(order: usize) -> Self {
        Self::new(order, (1..order).map(|v| (v - 1, v))).expect("valid path")
    }

    /// The cycle `C_n` with edges `i (i+1 mod n)`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
    }

    /// `C_n` on vertices `0..n` plus a hub `n` adjacent to every rim vertex.
    pub fn wheel(n: usize) -> Self {
        let mut edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        edges.extend((0..n).map(|v| (v, n)));
        Self::new(n + 1, edges).expect("valid wheel")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::new(10, outer.chain(spokes).chain(inner)).expect("valid Petersen graph")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && self.adj[u] & bit(v) != 0
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Position of the edge `uv` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub(crate) fn vertex_mask(&self) -> u64 {
        full_mask(self.order)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        Graph::from_adjacency(
            self.adj
                .iter()
                .enumerate()
                .map(|(v, &row)| !row & all & !bit(v))
                .collect(),
        )
    }

    /// `self + other`, with `other`'s vertices shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.order;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(a, b)| (a + shift, b + shift)));
        Graph::new(self.order + other.order, edges)
    }

    /// The subgraph induced by `subset`. Vertex `i` of the result is the
    /// `i`-th smallest element of `subset`; that list is returned alongside.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut map = subset.to_vec();
        map.sort_unstable();
        map.dedup();
        for &v in &map {
            self.check_vertex(v)?;
        }
        Ok((self.induced_on_sorted(&map), map))
    }

    pub(crate) fn induced_on_sorted(&self, map: &[usize]) -> Graph {
        let adj = map
            .iter()
            .map(|&u| {
                map.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(u, w))
                    .fold(0u64, |m, (j, _)| m | bit(j))
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    pub(crate) fn induced_on_mask(&self, mask: u64) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = bits(mask).collect();
        (self.induced_on_sorted(&map), map)
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.order {
            return Err(Error::Validation(format!(
                "permutation of length {} for a graph of order {}",
                perm.len(),
                self.order
            )));
        }
        Graph::new(self.order, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.order {
            if seen & bit(start) != 0 {
                continue;
            }
            let mut comp = bit(start);
            let mut frontier = bit(start);
            while frontier != 0 {
                let mut next = 0;
                for v in bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            seen |= comp;
            out.push(bits(comp).collect());
        }
        out
    }

    /// Some independent set of size three, lexicographically least, if any.
    pub fn independent_triple(&self) -> Option<[usize; 3]> {
        let all = self.vertex_mask();
        for a in 0..self.order {
            let non_a = !self.adj[a] & all & !bit(a);
            for b in bits(non_a >> a >> 1).map(|b| b + a + 1) {
                let rest = non_a & !self.adj[b] & !bit(b) & !full_mask(b + 1);
                if rest != 0 {
                    return Some([a, b, rest.trailing_zeros() as usize]);
                }
            }
        }
        None
    }

    /// Some triangle, lexicographically least, if any.
    pub fn triangle(&self) -> Option<[usize; 3]> {
        for &(a, b) in &self.edges {
            let common = self.adj[a] & self.adj[b] & !full_mask(b + 1);
            if common != 0 {
                return Some([a, b, common.trailing_zeros() as usize]);
            }
        }
        None
    }

    /// Every induced cycle with at most `max_len` vertices (unbounded if
    /// `None`), each once in canonical form, sorted by length and then
    /// lexicographically.
    ///
    /// Grows chordless paths from their smallest vertex and closes them
    /// whenever the last vertex sees the start again. The canonical direction
    /// is the one whose second vertex is smaller than its last.
    pub fn induced_cycles(&self, max_len: Option<usize>) -> Vec<InducedCycle> {
        let max_len = max_len.unwrap_or(self.order).min(self.order);
        let mut out = Vec::new();
        if max_len < 3 {
            return out;
        }
        let mut path = Vec::with_capacity(max_len);
        for start in 0..self.order {
            // Only vertices larger than `start` may join the cycle.
            let allowed = self.vertex_mask() & !full_mask(start + 1);
            path.clear();
            path.push(start);
            for second in bits(self.adj[start] & allowed) {
                path.push(second);
                self.grow_cycles(&mut path, allowed & !bit(second), max_len, &mut out);
                path.pop();
            }
        }
        out.sort_by(|a, b| {
            a.vertices
                .len()
                .cmp(&b.vertices.len())
                .then_with(|| a.vertices.cmp(&b.vertices))
        });
        out
    }

    fn grow_cycles(
        &self,
        path: &mut Vec<usize>,
        free: u64,
        max_len: usize,
        out: &mut Vec<InducedCycle>,
    ) {
        let start = path[0];
        let second = path[1];
        let last = *path.last().expect("non-empty path");
        for v in bits(self.adj[last] & free) {
            // A chordless extension sees no vertex strictly inside the path.
            let interior_hit = path[1..path.len() - 1]
                .iter()
                .any(|&w| self.adj[v] & bit(w) != 0);
            if interior_hit {
                continue;
            }
            if self.adj[v] & bit(start) != 0 {
                if second < v {
                    let mut verts = path.clone();
                    verts.push(v);
                    out.push(InducedCycle { vertices: verts });
                }
                continue;
            }
            if path.len() + 1 < max_len {
                path.push(v);
                self.grow_cycles(path, free & !bit(v), max_len, out);
                path.pop();
            }
        }
    }

    /// An injective map `pattern -> self` witnessing an induced copy of
    /// `pattern`, lexicographically least, or `None`.
    pub fn find_induced(&self, pattern: &Graph) -> Option<Vec<usize>> {
        if pattern.order > self.order {
            return None;
        }
        let mut map = Vec::with_capacity(pattern.order);
        if self.extend_induced(pattern, &mut map, 0) {
            Some(map)
        } else {
            None
        }
    }

    fn extend_induced(&self, pattern: &Graph, map: &mut Vec<usize>, used: u64) -> bool {
        let i = map.len();
        if i == pattern.order {
            return true;
        }
        for v in bits(self.vertex_mask() & !used) {
            let ok = map
                .iter()
                .enumerate()
                .all(|(j, &w)| pattern.has_edge(i, j) == self.has_edge(v, w));
            if ok {
                map.push(v);
                if self.extend_induced(pattern, map, used | bit(v)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A chordless cycle of some host graph in canonical form: smallest vertex
/// first, followed by its smaller cycle neighbour.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InducedCycle {
    vertices: Vec<usize>,
}

impl InducedCycle {
    /// Validates `vertices` as a cyclically ordered induced cycle of `g` and
    /// returns its canonical form.
    pub fn new(g: &Graph, vertices: &[usize]) -> Result<Self> {
        let bad = || Error::NotACycle(vertices.to_vec());
        let k = vertices.len();
        if k < 3 {
            return Err(bad());
        }
        let mut mask = 0u64;
        for &v in vertices {
            if v >= g.order() || mask & bit(v) != 0 {
                return Err(bad());
            }
            mask |= bit(v);
        }
        for (i, &v) in vertices.iter().enumerate() {
            let prev = vertices[(i + k - 1) % k];
            let next = vertices[(i + 1) % k];
            // In a chordless cycle each vertex sees exactly its two neighbours.
            if g.neighbor_mask(v) & mask != bit(prev) | bit(next) {
                return Err(bad());
            }
        }
        Ok(Self::canonical(vertices))
    }

    fn canonical(vertices: &[usize]) -> Self {
        let k = vertices.len();
        let (pos, _) = vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| v)
            .expect("non-empty");
        let next = vertices[(pos + 1) % k];
        let prev = vertices[(pos + k - 1) % k];
        let verts = if next < prev {
            (0..k).map(|i| vertices[(pos + i) % k]).collect()
        } else {
            (0..k).map(|i| vertices[(pos + k - i) % k]).collect()
        };
        InducedCycle { vertices: verts }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// The cycle's edges as `(a, b)` pairs in cyclic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| (self.vertices[i], self.vertices[(i + 1) % k]))
    }

    pub(crate) fn mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | bit(v))
    }
}
