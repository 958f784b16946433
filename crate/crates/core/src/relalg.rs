//! Finite relation algebras given by atom tables, constraint networks, path
//! consistency, and a complete network-satisfaction solver for 56_65.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::circle::{circ_dist, RationalAngle};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sigma::{sigma_edge, universal_embed, CirclePoint};
use crate::signed::{BalanceRule, SignedGraph};

/// A set of atoms, as a bitmask over the algebra's atom list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AtomSet(pub u32);

impl AtomSet {
    pub const EMPTY: AtomSet = AtomSet(0);

    pub fn single(atom: usize) -> Self {
        AtomSet(1 << atom)
    }

    pub fn contains(self, atom: usize) -> bool {
        self.0 >> atom & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_atom(self) -> bool {
        self.len() == 1
    }

    pub fn union(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 | other.0)
    }

    pub fn intersect(self, other: AtomSet) -> AtomSet {
        AtomSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: AtomSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }

    /// The only atom of a singleton set.
    pub fn atom(self) -> Option<usize> {
        self.is_atom().then(|| self.0.trailing_zeros() as usize)
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Raw description of an algebra, validated by [`make_algebra`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub atoms: Vec<String>,
    pub id_atom: usize,
    /// `converse[a]` is the converse atom of `a`.
    pub converse: Vec<usize>,
    /// Allowed triples `(x, y, z)`, meaning `z <= x o y`.
    pub allowed: Vec<[usize; 3]>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationAlgebra {
    atoms: Vec<String>,
    id: usize,
    converse: Vec<usize>,
    /// `comp[x * n + y]` is `x o y` for atoms.
    comp: Vec<AtomSet>,
    /// Composition of arbitrary elements, tabulated for small algebras.
    elem_comp: Option<Vec<AtomSet>>,
}

const TABULATE_UP_TO: usize = 6;

/// Validates `spec` and builds the algebra.
pub fn make_algebra(spec: AlgebraSpec) -> Result<RelationAlgebra> {
    let n = spec.atoms.len();
    if n > 32 {
        return Err(Error::TooManyAtoms(n));
    }
    if n == 0 || spec.id_atom >= n || spec.converse.len() != n {
        return Err(Error::Validation("atom list, identity, and converse do not fit".into()));
    }
    let name = |a: usize| spec.atoms[a].clone();
    for a in 0..n {
        let c = spec.converse[a];
        if c >= n || spec.converse[c] != a {
            return Err(Error::BadConverse(name(a)));
        }
    }
    if spec.converse[spec.id_atom] != spec.id_atom {
        return Err(Error::BadConverse(name(spec.id_atom)));
    }
    let mut comp = vec![AtomSet::EMPTY; n * n];
    for &[x, y, z] in &spec.allowed {
        if x >= n || y >= n || z >= n {
            return Err(Error::Validation(format!("triple ({x}, {y}, {z}) names a missing atom")));
        }
        comp[x * n + y].0 |= 1 << z;
    }
    let allowed = |x: usize, y: usize, z: usize| comp[x * n + y].contains(z);
    let cv = &spec.converse;
    for x in 0..n {
        for y in 0..n {
            for z in comp[x * n + y].iter() {
                let images = [
                    (cv[x], z, y),
                    (z, cv[y], x),
                    (cv[z], x, cv[y]),
                    (y, cv[z], cv[x]),
                    (cv[y], cv[x], cv[z]),
                ];
                if images.iter().any(|&(a, b, c)| !allowed(a, b, c)) {
                    return Err(Error::NotPeirceanClosed(name(x), name(y), name(z)));
                }
            }
        }
    }
    for a in 0..n {
        let single = AtomSet::single(a);
        if comp[a * n + spec.id_atom] != single || comp[spec.id_atom * n + a] != single {
            return Err(Error::BadIdentity(name(a)));
        }
    }
    let mut ra = RelationAlgebra {
        atoms: spec.atoms,
        id: spec.id_atom,
        converse: spec.converse,
        comp,
        elem_comp: None,
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (a, b, c) = (AtomSet::single(x), AtomSet::single(y), AtomSet::single(z));
                let left = ra.compose_elements(ra.compose_elements(a, b), c);
                let right = ra.compose_elements(a, ra.compose_elements(b, c));
                if left != right {
                    return Err(Error::NotAssociative(
                        ra.atoms[x].clone(),
                        ra.atoms[y].clone(),
                        ra.atoms[z].clone(),
                    ));
                }
            }
        }
    }
    if n <= TABULATE_UP_TO {
        let size = 1usize << n;
        let mut table = vec![AtomSet::EMPTY; size * size];
        for a in 0..size {
            for b in 0..size {
                table[a * size + b] = ra.compose_elements(AtomSet(a as u32), AtomSet(b as u32));
            }
        }
        ra.elem_comp = Some(table);
    }
    Ok(ra)
}

pub const ATOM_ID: usize = 0;
pub const ATOM_N: usize = 1;
pub const ATOM_ZERO: usize = 2;
pub const ATOM_ONE: usize = 3;

/// The specification of 56_65: atoms `id, N, 0, 1`, all symmetric.
pub fn spec_56_65() -> AlgebraSpec {
    let forbidden_core = [
        [ATOM_N, ATOM_N, ATOM_N],
        [ATOM_ONE, ATOM_ONE, ATOM_ONE],
        [ATOM_ZERO, ATOM_ZERO, ATOM_ONE],
        [ATOM_ZERO, ATOM_ONE, ATOM_ZERO],
        [ATOM_ONE, ATOM_ZERO, ATOM_ZERO],
    ];
    let mut allowed = Vec::new();
    for x in 0..4 {
        for y in 0..4 {
            for z in 0..4 {
                let id_row = (x == ATOM_ID && y != z) || (y == ATOM_ID && x != z) || (z == ATOM_ID && x != y);
                if !id_row && !forbidden_core.contains(&[x, y, z]) {
                    allowed.push([x, y, z]);
                }
            }
        }
    }
    AlgebraSpec {
        atoms: ["id", "N", "0", "1"].map(String::from).to_vec(),
        id_atom: ATOM_ID,
        converse: vec![0, 1, 2, 3],
        allowed,
    }
}

fn canonical_56_65() -> &'static RelationAlgebra {
    static RA: OnceLock<RelationAlgebra> = OnceLock::new();
    RA.get_or_init(|| make_algebra(spec_56_65()).expect("56_65 is a relation algebra"))
}

pub fn ra_56_65() -> RelationAlgebra {
    canonical_56_65().clone()
}

impl RelationAlgebra {
    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn atom_names(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_index(&self, name: &str) -> Result<usize> {
        self.atoms
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }

    pub fn parse_set<S: AsRef<str>>(&self, names: &[S]) -> Result<AtomSet> {
        names
            .iter()
            .try_fold(AtomSet::EMPTY, |acc, s| Ok(acc.union(AtomSet::single(self.atom_index(s.as_ref())?))))
    }

    pub fn set_names(&self, set: AtomSet) -> Vec<String> {
        set.iter().map(|a| self.atoms[a].clone()).collect()
    }

    pub fn id_atom(&self) -> usize {
        self.id
    }

    pub fn id(&self) -> AtomSet {
        AtomSet::single(self.id)
    }

    pub fn top(&self) -> AtomSet {
        AtomSet(((1u64 << self.atoms.len()) - 1) as u32)
    }

    pub fn converse_atom(&self, a: usize) -> usize {
        self.converse[a]
    }

    pub fn converse(&self, set: AtomSet) -> AtomSet {
        set.iter().fold(AtomSet::EMPTY, |acc, a| acc.union(AtomSet::single(self.converse[a])))
    }

    pub fn is_allowed(&self, x: usize, y: usize, z: usize) -> bool {
        self.comp[x * self.atoms.len() + y].contains(z)
    }

    pub fn is_symmetric(&self) -> bool {
        self.converse.iter().enumerate().all(|(a, &c)| a == c)
    }

    /// Union over atom pairs of their composition.
    pub fn compose_elements(&self, a: AtomSet, b: AtomSet) -> AtomSet {
        if let Some(table) = &self.elem_comp {
            return table[((a.0 as usize) << self.atoms.len()) | b.0 as usize];
        }
        let n = self.atoms.len();
        let mut out = AtomSet::EMPTY;
        for x in a.iter() {
            for y in b.iter() {
                out = out.union(self.comp[x * n + y]);
            }
        }
        out
    }

    pub fn is_56_65(&self) -> bool {
        self == canonical_56_65()
    }
}

/// Variables `0..n` with an element of the algebra on every ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    n: usize,
    f: Vec<AtomSet>,
}

impl Network {
    /// Every pair, diagonal included, constrained to the top element.
    pub fn new(ra: &RelationAlgebra, n: usize) -> Self {
        Network {
            n,
            f: vec![ra.top(); n * n],
        }
    }

    pub fn vars(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> AtomSet {
        self.f[x * self.n + y]
    }

    /// Intersects `f(x, y)` with `set` and `f(y, x)` with its converse.
    pub fn constrain(&mut self, ra: &RelationAlgebra, x: usize, y: usize, set: AtomSet) -> Result<()> {
        for v in [x, y] {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
            }
        }
        if !set.is_subset(ra.top()) {
            return Err(Error::Validation(format!("atom set {set:?} outside the algebra")));
        }
        let n = self.n;
        self.f[x * n + y] = self.f[x * n + y].intersect(set);
        self.f[y * n + x] = self.f[y * n + x].intersect(ra.converse(set));
        Ok(())
    }

    pub fn from_constraints(
        ra: &RelationAlgebra,
        n: usize,
        constraints: &[(usize, usize, AtomSet)],
    ) -> Result<Self> {
        let mut net = Network::new(ra, n);
        for &(x, y, s) in constraints {
            net.constrain(ra, x, y, s)?;
        }
        Ok(net)
    }

    /// The constraints `(x, y, f(x, y))` for `x <= y` that differ from top.
    pub fn constraints(&self, ra: &RelationAlgebra) -> Vec<(usize, usize, AtomSet)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in x..self.n {
                let s = self.get(x, y);
                if s != ra.top() {
                    out.push((x, y, s));
                }
            }
        }
        out
    }

    pub fn is_atomic(&self) -> bool {
        self.f.iter().all(|s| s.is_atom())
    }
}

/// Revises `f` to the path-consistency fixpoint, starting from the pairs in
/// `queue`. Returns false when some constraint becomes empty.
fn close(ra: &RelationAlgebra, n: usize, f: &mut [AtomSet], mut queue: VecDeque<(usize, usize)>) -> bool {
    let mut queued = vec![false; n * n];
    for &(i, j) in &queue {
        queued[i * n + j] = true;
    }
    while let Some((i, j)) = queue.pop_front() {
        queued[i * n + j] = false;
        for k in 0..n {
            for (a, b, with) in [
                (i, k, ra.compose_elements(f[i * n + j], f[j * n + k])),
                (k, j, ra.compose_elements(f[k * n + i], f[i * n + j])),
            ] {
                let old = f[a * n + b];
                let new = old.intersect(with);
                if new == old {
                    continue;
                }
                if new.is_empty() {
                    return false;
                }
                f[a * n + b] = new;
                f[b * n + a] = ra.converse(new);
                for (p, q) in [(a, b), (b, a)] {
                    if !queued[p * n + q] {
                        queued[p * n + q] = true;
                        queue.push_back((p, q));
                    }
                }
            }
        }
    }
    true
}

/// The greatest path-consistent refinement of `net`, or `None` if some
/// constraint becomes empty.
pub fn path_consistency(ra: &RelationAlgebra, net: &Network) -> Option<Network> {
    let n = net.n;
    let mut f = net.f.clone();
    for x in 0..n {
        f[x * n + x] = f[x * n + x].intersect(ra.id());
    }
    if f.iter().any(|s| s.is_empty()) {
        return None;
    }
    let queue = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    close(ra, n, &mut f, queue).then_some(Network { n, f })
}

fn require_56_65(ra: &RelationAlgebra) -> Result<()> {
    if ra.is_56_65() {
        Ok(())
    } else {
        Err(Error::UnsupportedAlgebra)
    }
}

/// Reads an atomic 56_65 network as a signed graph: atoms 0 and 1 are edges
/// with that label, N is a non-edge.
pub fn network_to_signed(ra: &RelationAlgebra, net: &Network) -> Result<SignedGraph> {
    require_56_65(ra)?;
    let mut edges = Vec::new();
    for x in 0..net.n {
        for y in x..net.n {
            let atom = net.get(x, y).atom().ok_or(Error::NotAtomic(x, y))?;
            match (x == y, atom) {
                (true, ATOM_ID) | (false, ATOM_N) => {}
                (true, _) => return Err(Error::Validation(format!("diagonal ({x}, {x}) is not id"))),
                (false, ATOM_ID) => return Err(Error::IdOffDiagonal(x, y)),
                (false, ATOM_ZERO) => edges.push((x, y, 0)),
                (false, _) => edges.push((x, y, 1)),
            }
        }
    }
    SignedGraph::from_labelled_edges(net.n, &edges)
}

/// A satisfying assignment into the universal model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub assignment: Vec<CirclePoint>,
    /// Blocks of variables sharing a point, each ascending, ordered by first element.
    pub merged: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NspOutcome {
    Sat(Certificate),
    Unsat,
}

impl NspOutcome {
    pub fn is_sat(&self) -> bool {
        matches!(self, NspOutcome::Sat(_))
    }
}

/// A solved branch: the signed graph on the identity classes, the class
/// representatives in ascending order, and the atomic constraints.
type Leaf = (SignedGraph, Vec<usize>, Vec<AtomSet>);

struct Solver<'a> {
    ra: &'a RelationAlgebra,
    n: usize,
}

impl Solver<'_> {
    fn merged_into(&self, f: &[AtomSet], v: usize) -> Option<usize> {
        (0..v).find(|&u| f[u * self.n + v] == self.ra.id())
    }

    /// Vertices not identified with an earlier one.
    fn representatives(&self, f: &[AtomSet]) -> Vec<usize> {
        (0..self.n).filter(|&v| self.merged_into(f, v).is_none()).collect()
    }

    /// Decided induced 4- and 5-cycles among representatives sum to 1.
    fn parity_ok(&self, f: &[AtomSet]) -> bool {
        let n = self.n;
        let reps = self.representatives(f);
        let decided: Vec<usize> = reps
            .iter()
            .copied()
            .filter(|&v| reps.iter().any(|&u| u != v && f[u * n + v].is_atom()))
            .collect();
        let mut subset = Vec::with_capacity(5);
        for size in [4, 5] {
            if !self.subsets_ok(f, &decided, 0, size, &mut subset) {
                return false;
            }
        }
        true
    }

    fn subsets_ok(&self, f: &[AtomSet], pool: &[usize], from: usize, size: usize, cur: &mut Vec<usize>) -> bool {
        if cur.len() == size {
            return self.cycle_parity_ok(f, cur);
        }
        for i in from..pool.len() {
            let v = pool[i];
            if cur.iter().any(|&u| self.ra_atom(f, u, v).is_none()) {
                continue;
            }
            cur.push(v);
            let ok = self.subsets_ok(f, pool, i + 1, size, cur);
            cur.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    fn ra_atom(&self, f: &[AtomSet], u: usize, v: usize) -> Option<usize> {
        f[u * self.n + v].atom()
    }

    fn cycle_parity_ok(&self, f: &[AtomSet], vs: &[usize]) -> bool {
        let mut degree = [0u8; 5];
        let mut edges = 0;
        let mut sum = 0;
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                match self.ra_atom(f, vs[i], vs[j]) {
                    Some(ATOM_ZERO) | Some(ATOM_ONE) => {
                        degree[i] += 1;
                        degree[j] += 1;
                        edges += 1;
                        sum ^= (self.ra_atom(f, vs[i], vs[j]) == Some(ATOM_ONE)) as u8;
                    }
                    _ => {}
                }
            }
        }
        let is_cycle = edges == vs.len() && degree[..vs.len()].iter().all(|&d| d == 2);
        !is_cycle || sum == 1
    }

    fn leaf(&self, f: &[AtomSet]) -> Result<Option<(SignedGraph, Vec<usize>)>> {
        let n = self.n;
        let reps = self.representatives(f);
        let mut edges = Vec::new();
        for (i, &u) in reps.iter().enumerate() {
            for (j, &v) in reps.iter().enumerate().skip(i + 1) {
                match f[u * n + v].atom() {
                    Some(ATOM_ZERO) => edges.push((i, j, 0)),
                    Some(ATOM_ONE) => edges.push((i, j, 1)),
                    Some(ATOM_N) => {}
                    _ => return Err(Error::InternalInvariantViolation("leaf is not contracted".into())),
                }
            }
        }
        let sg = SignedGraph::from_labelled_edges(reps.len(), &edges)?;
        if sg.graph().independent_triple().is_some() || !sg.is_balancing(&BalanceRule::AntiEven)? {
            return Ok(None);
        }
        Ok(Some((sg, reps)))
    }

    fn search(&self, f: Vec<AtomSet>) -> Result<Option<Leaf>> {
        if !self.parity_ok(&f) {
            return Ok(None);
        }
        let n = self.n;
        let mut pick: Option<(usize, usize, usize)> = None;
        for x in 0..n {
            for y in x + 1..n {
                let c = f[x * n + y].len();
                if c > 1 && pick.is_none_or(|(_, _, best)| c < best) {
                    pick = Some((x, y, c));
                }
            }
        }
        let Some((x, y, _)) = pick else {
            return Ok(self.leaf(&f)?.map(|(sg, reps)| (sg, reps, f)));
        };
        for atom in f[x * n + y].iter() {
            let mut g = f.clone();
            g[x * n + y] = AtomSet::single(atom);
            g[y * n + x] = AtomSet::single(self.ra.converse_atom(atom));
            if !close(self.ra, n, &mut g, VecDeque::from([(x, y), (y, x)])) {
                continue;
            }
            if let Some(found) = self.search(g)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// Decides satisfiability of a 56_65 network in the universal model and
/// returns a certificate of points when satisfiable.
pub fn nsp_solve(ra: &RelationAlgebra, net: &Network) -> Result<NspOutcome> {
    require_56_65(ra)?;
    let Some(pc) = path_consistency(ra, net) else {
        return Ok(NspOutcome::Unsat);
    };
    let solver = Solver { ra, n: net.n };
    let Some((sg, reps, f)) = solver.search(pc.f)? else {
        return Ok(NspOutcome::Unsat);
    };
    let points = universal_embed(&sg).map_err(|e| match e {
        Error::WitnessSearchExhausted(_) | Error::NotBalanceable | Error::NotIndependenceTwo(_) => {
            Error::InternalInvariantViolation(format!("embedding a solved network failed: {e}"))
        }
        other => other,
    })?;
    let mut assignment = Vec::with_capacity(net.n);
    let mut merged: Vec<Vec<usize>> = reps.iter().map(|&r| vec![r]).collect();
    for v in 0..net.n {
        let rep = solver.merged_into(&f, v).unwrap_or(v);
        let block = reps.binary_search(&rep).expect("representative");
        if rep != v {
            merged[block].push(v);
        }
        assignment.push(CirclePoint::new(points[block]));
    }
    Ok(NspOutcome::Sat(Certificate { assignment, merged }))
}

/// The atom realized by two points of the universal model, if defined.
pub fn realized_atom(a: RationalAngle, b: RationalAngle) -> Option<usize> {
    if a == b {
        return Some(ATOM_ID);
    }
    if circ_dist(a, b) > num_rational::Ratio::new(1, 3) {
        return Some(ATOM_N);
    }
    match sigma_edge(a, b).ok()? {
        0 => Some(ATOM_ZERO),
        _ => Some(ATOM_ONE),
    }
}

/// Checks a certificate against the network using only the universal model.
pub fn verify_certificate(ra: &RelationAlgebra, net: &Network, cert: &Certificate) -> bool {
    if !ra.is_56_65() || cert.assignment.len() != net.n {
        return false;
    }
    let mut block_of = vec![usize::MAX; net.n];
    for (b, block) in cert.merged.iter().enumerate() {
        for &v in block {
            if v >= net.n || block_of[v] != usize::MAX {
                return false;
            }
            block_of[v] = b;
        }
    }
    if block_of.contains(&usize::MAX) {
        return false;
    }
    let pts: Vec<RationalAngle> = cert.assignment.iter().map(|p| p.angle).collect();
    if cert.assignment.iter().any(|p| *p != CirclePoint::new(p.angle)) {
        return false;
    }
    for x in 0..net.n {
        for y in 0..net.n {
            if (block_of[x] == block_of[y]) != (pts[x] == pts[y]) {
                return false;
            }
            match realized_atom(pts[x], pts[y]) {
                Some(atom) if net.get(x, y).contains(atom) => {}
                _ => return false,
            }
        }
    }
    true
}

/// The all-zero prism pattern: edges of the complement of C6 get `{0}`,
/// non-edges `{N}`.
pub fn prism_network(ra: &RelationAlgebra) -> Network {
    pattern_network(ra, &Graph::cycle(6).complement(), ATOM_ZERO)
}

/// Edges of `g` constrained to `{edge_atom}`, non-edges to `{N}`, diagonal to `{id}`.
pub fn pattern_network(ra: &RelationAlgebra, g: &Graph, edge_atom: usize) -> Network {
    let n = g.order();
    let mut net = Network::new(ra, n);
    for x in 0..n {
        for y in x..n {
            let atom = if x == y {
                ATOM_ID
            } else if g.has_edge(x, y) {
                edge_atom
            } else {
                ATOM_N
            };
            net.constrain(ra, x, y, AtomSet::single(atom)).expect("in range");
        }
    }
    net
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ra: &RelationAlgebra, names: &[&str]) -> AtomSet {
        ra.parse_set(names).unwrap()
    }

    #[test]
    fn algebra_examples() {
        let ra = ra_56_65();
        assert!(ra.is_symmetric());
        assert!(ra.is_allowed(ATOM_ZERO, ATOM_ZERO, ATOM_ZERO));
        assert!(!ra.is_allowed(ATOM_ZERO, ATOM_ZERO, ATOM_ONE));
        assert!(ra.is_allowed(ATOM_N, ATOM_ID, ATOM_N));
        assert!(ra.is_allowed(ATOM_ONE, ATOM_ONE, ATOM_ZERO));
        assert_eq!(ra.compose_elements(set(&ra, &["N"]), set(&ra, &["N"])), set(&ra, &["id", "0", "1"]));
        assert_eq!(ra.compose_elements(set(&ra, &["0"]), set(&ra, &["0"])), set(&ra, &["id", "N", "0"]));
        assert_eq!(ra.compose_elements(set(&ra, &["1"]), set(&ra, &["1"])), set(&ra, &["id", "N", "0"]));
        assert_eq!(ra.compose_elements(set(&ra, &["0"]), set(&ra, &["1"])), set(&ra, &["N", "1"]));
        for a in 0..4 {
            assert_eq!(ra.compose_elements(ra.id(), AtomSet::single(a)), AtomSet::single(a));
        }
        assert!(matches!(ra.atom_index("X"), Err(Error::UnknownAtom(_))));
    }

    #[test]
    fn trivial_and_broken_algebras() {
        let one = AlgebraSpec {
            atoms: vec!["id".into()],
            id_atom: 0,
            converse: vec![0],
            allowed: vec![[0, 0, 0]],
        };
        assert!(make_algebra(one).is_ok());

        let mut spec = spec_56_65();
        spec.allowed.retain(|t| *t != [ATOM_N, ATOM_ID, ATOM_N]);
        assert!(matches!(make_algebra(spec), Err(Error::NotPeirceanClosed(..))));

        let mut spec = spec_56_65();
        spec.converse = vec![0, 2, 1, 3];
        assert!(make_algebra(spec).is_err());

        let mut spec = spec_56_65();
        spec.converse[0] = 1;
        assert!(matches!(make_algebra(spec), Err(Error::BadConverse(_))));

        // Moving (N,N,N) to allowed and dropping (N,N,0), (N,N,1) with their
        // permutations: the validator decides.
        let mut spec = spec_56_65();
        let drop = |t: &[usize; 3]| {
            let mut s = *t;
            s.sort();
            s == [ATOM_N, ATOM_N, ATOM_ZERO] || s == [ATOM_N, ATOM_N, ATOM_ONE]
        };
        spec.allowed.retain(|t| !drop(t));
        spec.allowed.push([ATOM_N, ATOM_N, ATOM_N]);
        let verdict = make_algebra(spec);
        assert!(verdict.is_ok() || matches!(verdict, Err(Error::NotAssociative(..))));
    }

    #[test]
    fn path_consistency_examples() {
        let ra = ra_56_65();
        let one = set(&ra, &["1"]);
        let tri = Network::from_constraints(&ra, 3, &[(0, 1, one), (1, 2, one), (0, 2, one)]).unwrap();
        assert_eq!(path_consistency(&ra, &tri), None);

        let top = Network::new(&ra, 4);
        let pc = path_consistency(&ra, &top).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                let want = if x == y { ra.id() } else { ra.top() };
                assert_eq!(pc.get(x, y), want);
            }
        }

        let prism = prism_network(&ra);
        assert_eq!(path_consistency(&ra, &prism).unwrap(), prism);
    }

    #[test]
    fn conversion_examples() {
        let ra = ra_56_65();
        let k3 = pattern_network(&ra, &Graph::complete(3), ATOM_ZERO);
        assert_eq!(network_to_signed(&ra, &k3).unwrap(), SignedGraph::all_zero(Graph::complete(3)));
        let prism = network_to_signed(&ra, &prism_network(&ra)).unwrap();
        assert_eq!(prism, SignedGraph::all_zero(Graph::cycle(6).complement()));
        let nnn = pattern_network(&ra, &Graph::empty(3), ATOM_ZERO);
        assert!(network_to_signed(&ra, &nnn).is_ok());
        assert_eq!(network_to_signed(&ra, &Network::new(&ra, 2)), Err(Error::NotAtomic(0, 0)));
        let mut merged = pattern_network(&ra, &Graph::empty(2), ATOM_ZERO);
        merged.f = vec![ra.id(); 4];
        assert_eq!(network_to_signed(&ra, &merged), Err(Error::IdOffDiagonal(0, 1)));
    }

    #[test]
    fn solver_examples() {
        let ra = ra_56_65();
        assert_eq!(nsp_solve(&ra, &prism_network(&ra)).unwrap(), NspOutcome::Unsat);

        let k3 = pattern_network(&ra, &Graph::complete(3), ATOM_ZERO);
        let NspOutcome::Sat(cert) = nsp_solve(&ra, &k3).unwrap() else {
            panic!("triangle is satisfiable");
        };
        assert!(verify_certificate(&ra, &k3, &cert));

        let mut empty = Network::new(&ra, 2);
        empty.constrain(&ra, 0, 1, AtomSet::EMPTY).unwrap();
        assert_eq!(nsp_solve(&ra, &empty).unwrap(), NspOutcome::Unsat);

        let one = AlgebraSpec {
            atoms: vec!["id".into()],
            id_atom: 0,
            converse: vec![0],
            allowed: vec![[0, 0, 0]],
        };
        let trivial = make_algebra(one).unwrap();
        assert_eq!(nsp_solve(&trivial, &Network::new(&trivial, 2)), Err(Error::UnsupportedAlgebra));
    }

    #[test]
    fn merging_variables() {
        let ra = ra_56_65();
        let mut net = Network::new(&ra, 3);
        net.constrain(&ra, 0, 1, ra.id()).unwrap();
        net.constrain(&ra, 1, 2, set(&ra, &["1"])).unwrap();
        let NspOutcome::Sat(cert) = nsp_solve(&ra, &net).unwrap() else {
            panic!("satisfiable");
        };
        assert_eq!(cert.merged, vec![vec![0, 1], vec![2]]);
        assert_eq!(cert.assignment[0], cert.assignment[1]);
        assert!(verify_certificate(&ra, &net, &cert));
    }

    #[test]
    fn certificate_checks() {
        let ra = ra_56_65();
        let net = Network::from_constraints(&ra, 2, &[(0, 1, set(&ra, &["1"]))]).unwrap();
        let a = |s: &str| CirclePoint::new(s.parse().unwrap());
        let good = Certificate {
            assignment: vec![a("0"), a("1/10")],
            merged: vec![vec![0], vec![1]],
        };
        assert!(verify_certificate(&ra, &net, &good));
        let same = Certificate {
            assignment: vec![a("0"), a("0")],
            merged: vec![vec![0], vec![1]],
        };
        assert!(!verify_certificate(&ra, &net, &same));
        let wrong_label = Certificate {
            assignment: vec![a("0"), a("1/5")],
            merged: vec![vec![0], vec![1]],
        };
        assert!(!verify_certificate(&ra, &net, &wrong_label));
    }
}
