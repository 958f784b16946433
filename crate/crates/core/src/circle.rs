//! Exact rational points on the circle and the graphs C3 / complement of C3.
//!
//! Angles are measured in turns. Two points are adjacent in C3 when they are
//! strictly more than a third of a turn apart; the complement joins distinct
//! points at most a third apart.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A point at `num/den` of a full turn, kept reduced with `0 <= num < den`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalAngle {
    num: i64,
    den: i64,
}

impl RationalAngle {
    pub const ZERO: RationalAngle = RationalAngle { num: 0, den: 1 };

    /// Reduces `num/den` modulo one full turn.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den <= 0 {
            return Err(Error::InvalidAngle(format!("{num}/{den}")));
        }
        let num = num.rem_euclid(den);
        let g = num.gcd(&den);
        Ok(RationalAngle {
            num: num / g,
            den: den / g,
        })
    }

    pub fn from_ratio(r: Ratio<i64>) -> Self {
        RationalAngle::new(*r.numer(), *r.denom()).expect("ratio denominators are positive")
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn to_ratio(&self) -> Ratio<i64> {
        Ratio::new_raw(self.num, self.den)
    }

    /// The point shifted by `delta` turns.
    pub fn offset(&self, delta: Ratio<i64>) -> Self {
        RationalAngle::from_ratio(self.to_ratio() + delta)
    }
}

impl Ord for RationalAngle {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for RationalAngle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RationalAngle {
    type Err = Error;

    /// Accepts `num/den` or a bare integer; the value must lie in `[0, 1)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidAngle(s.to_string());
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: i64 = n.parse().map_err(|_| bad())?;
        let den: i64 = d.parse().map_err(|_| bad())?;
        if den <= 0 || num < 0 || num >= den {
            return Err(bad());
        }
        RationalAngle::new(num, den)
    }
}

impl Serialize for RationalAngle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RationalAngle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The five pentagon anchors `i/5`.
pub const PENTAGON: [RationalAngle; 5] = [
    RationalAngle { num: 0, den: 1 },
    RationalAngle { num: 1, den: 5 },
    RationalAngle { num: 2, den: 5 },
    RationalAngle { num: 3, den: 5 },
    RationalAngle { num: 4, den: 5 },
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CircleGraphKind {
    C3,
    C3Complement,
}

fn abs(r: Ratio<i64>) -> Ratio<i64> {
    if r < Ratio::from_integer(0) {
        -r
    } else {
        r
    }
}

fn third() -> Ratio<i64> {
    Ratio::new(1, 3)
}

/// Circular distance in turns, in `[0, 1/2]`.
pub fn circ_dist(a: RationalAngle, b: RationalAngle) -> Ratio<i64> {
    let d = abs(a.to_ratio() - b.to_ratio());
    let one = Ratio::from_integer(1);
    if d * 2 > one {
        one - d
    } else {
        d
    }
}

pub fn adjacent(kind: CircleGraphKind, a: RationalAngle, b: RationalAngle) -> bool {
    if a == b {
        return false;
    }
    let far = circ_dist(a, b) > third();
    match kind {
        CircleGraphKind::C3 => far,
        CircleGraphKind::C3Complement => !far,
    }
}

pub(crate) fn check_distinct(points: &[RationalAngle]) -> Result<()> {
    let mut sorted = points.to_vec();
    sorted.sort();
    match sorted.windows(2).find(|w| w[0] == w[1]) {
        Some(w) => Err(Error::DuplicatePoint(w[0].to_string())),
        None => Ok(()),
    }
}

/// The graph on `points` (vertex `i` is `points[i]`) under the kind's adjacency.
pub fn induced_model(kind: CircleGraphKind, points: &[RationalAngle]) -> Result<Graph> {
    check_distinct(points)?;
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if adjacent(kind, points[i], points[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(points.len(), edges)
}

/// The four minimal graphs that do not embed into C3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ForbiddenGraph {
    Triangle,
    TwoEdgesPlusVertex,
    PentagonPlusVertex,
    Hexagon,
}

impl ForbiddenGraph {
    pub const ALL: [ForbiddenGraph; 4] = [
        ForbiddenGraph::Triangle,
        ForbiddenGraph::TwoEdgesPlusVertex,
        ForbiddenGraph::PentagonPlusVertex,
        ForbiddenGraph::Hexagon,
    ];

    pub fn graph(self) -> Graph {
        match self {
            ForbiddenGraph::Triangle => Graph::complete(3),
            ForbiddenGraph::TwoEdgesPlusVertex => Graph::new(5, [(0, 1), (2, 3)]).unwrap(),
            ForbiddenGraph::PentagonPlusVertex => Graph::cycle(5).disjoint_union(&Graph::empty(1)).unwrap(),
            ForbiddenGraph::Hexagon => Graph::cycle(6),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ForbiddenGraph::Triangle => "K3",
            ForbiddenGraph::TwoEdgesPlusVertex => "2K2+K1",
            ForbiddenGraph::PentagonPlusVertex => "C5+K1",
            ForbiddenGraph::Hexagon => "C6",
        }
    }
}

/// A forbidden induced subgraph: `map[i]` is the host vertex playing pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenWitness {
    pub kind: ForbiddenGraph,
    pub map: Vec<usize>,
}

/// The first forbidden induced subgraph of `g`, checked in the order of
/// [`ForbiddenGraph::ALL`].
pub fn c3_obstruction(g: &Graph) -> Option<ForbiddenWitness> {
    ForbiddenGraph::ALL.iter().find_map(|&kind| {
        g.find_induced(&kind.graph())
            .map(|map| ForbiddenWitness { kind, map })
    })
}

pub fn embeds_in_c3(g: &Graph) -> bool {
    c3_obstruction(g).is_none()
}

pub fn default_den_cap(g: &Graph) -> u64 {
    60 * g.order().max(1) as u64
}

/// Which grid denominators the embedding search may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GridDenominators {
    /// Every `m` from 1 upward.
    #[default]
    All,
    /// Only `m` not divisible by 3. No two grid points, and no grid point and
    /// pentagon anchor, are then exactly a third of a turn apart.
    NoThirds,
}

/// Places the vertices of `g` on grid points `j/m` so that edges are exactly
/// the C3-adjacent pairs.
///
/// Returns `Ok(None)` when `g` has a forbidden induced subgraph, and
/// `WitnessSearchExhausted` when it has none but no grid up to `den_cap`
/// works.
pub fn find_c3_embedding(g: &Graph, den_cap: u64) -> Result<Option<Vec<RationalAngle>>> {
    find_c3_embedding_on(g, den_cap, GridDenominators::All)
}

pub fn find_c3_embedding_on(
    g: &Graph,
    den_cap: u64,
    grid: GridDenominators,
) -> Result<Option<Vec<RationalAngle>>> {
    if !embeds_in_c3(g) {
        return Ok(None);
    }
    let n = g.order();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for m in 1..=den_cap {
        if grid == GridDenominators::NoThirds && m % 3 == 0 {
            continue;
        }
        if (m as usize) < n {
            continue;
        }
        let mut slots = vec![usize::MAX; n];
        let mut used = vec![false; m as usize];
        slots[order[0]] = 0;
        used[0] = true;
        if place(g, &order, 1, m as usize, &mut slots, &mut used) {
            return Ok(Some(
                slots
                    .iter()
                    .map(|&j| RationalAngle::new(j as i64, m as i64).unwrap())
                    .collect(),
            ));
        }
    }
    Err(Error::WitnessSearchExhausted(den_cap))
}

fn place(g: &Graph, order: &[usize], k: usize, m: usize, slots: &mut [usize], used: &mut [bool]) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    'cand: for j in 0..m {
        if used[j] {
            continue;
        }
        for &u in &order[..k] {
            let diff = j.abs_diff(slots[u]);
            let d = diff.min(m - diff);
            if (3 * d > m) != g.has_edge(u, v) {
                continue 'cand;
            }
        }
        slots[v] = j;
        used[j] = true;
        if place(g, order, k + 1, m, slots, used) {
            return true;
        }
        used[j] = false;
    }
    slots[v] = usize::MAX;
    false
}

/// Half the smallest gap between a pairwise distance and a third of a turn,
/// over all pairs of `points` together with the pentagon anchors.
pub fn epsilon_bound(points: &[RationalAngle]) -> Result<Ratio<i64>> {
    epsilon_over(points, true)
}

/// As [`epsilon_bound`], but over `points` alone. With fewer than two points
/// there are no pairs and the bound is half a turn.
pub fn epsilon_bound_without_pentagon(points: &[RationalAngle]) -> Result<Ratio<i64>> {
    epsilon_over(points, false)
}

fn epsilon_over(points: &[RationalAngle], with_pentagon: bool) -> Result<Ratio<i64>> {
    check_distinct(points)?;
    let mut all = points.to_vec();
    if with_pentagon {
        all.extend(PENTAGON);
        all.sort();
        all.dedup();
    }
    let mut best: Option<Ratio<i64>> = None;
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            let gap = abs(third() - circ_dist(all[i], all[j]));
            if gap == Ratio::from_integer(0) {
                return Err(Error::DegenerateConfiguration(all[i].to_string(), all[j].to_string()));
            }
            best = Some(best.map_or(gap, |b| b.min(gap)));
        }
    }
    Ok(best.unwrap_or(Ratio::new(1, 1)) / 2)
}
