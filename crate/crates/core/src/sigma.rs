//! The universal anti-even-balancing labelling of the complement of C3.
//!
//! Points split into two dense classes by numerator parity, with the five
//! pentagon anchors forced into class 0. Every point is tied to its first
//! anchor neighbour by an edge labelled with its class, the pentagon carries
//! labels `0,0,0,1,0`, and every other label is forced by triangles summing
//! to zero.

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::circle::{
    adjacent, check_distinct, circ_dist, default_den_cap, epsilon_bound, find_c3_embedding_on,
    induced_model, CircleGraphKind, GridDenominators, RationalAngle, PENTAGON,
};
use crate::error::{Error, Result};
use crate::signed::{switching_witness, BalanceRule, SignedGraph, SwitchSet};

/// Label of the pentagon edge `p^i p^(i+1)`.
const PENTAGON_LABELS: [u8; 5] = [0, 0, 0, 1, 0];

fn anchor_index(x: RationalAngle) -> Option<usize> {
    PENTAGON.iter().position(|&p| p == x)
}

/// Class of a point: numerator parity, except that anchors are in class 0.
pub fn parity_class(a: RationalAngle) -> u8 {
    if anchor_index(a).is_some() {
        0
    } else {
        (a.num() & 1) as u8
    }
}

/// A point together with its class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPoint")]
pub struct CirclePoint {
    pub angle: RationalAngle,
    pub parity: u8,
}

#[derive(Deserialize)]
struct RawPoint {
    angle: RationalAngle,
    parity: u8,
}

impl TryFrom<RawPoint> for CirclePoint {
    type Error = Error;

    fn try_from(raw: RawPoint) -> Result<Self> {
        let p = CirclePoint::new(raw.angle);
        if p.parity != raw.parity {
            return Err(Error::Validation(format!(
                "point {} has class {}, not {}",
                raw.angle, p.parity, raw.parity
            )));
        }
        Ok(p)
    }
}

impl CirclePoint {
    pub fn new(angle: RationalAngle) -> Self {
        CirclePoint {
            angle,
            parity: parity_class(angle),
        }
    }
}

fn near(a: RationalAngle, b: RationalAngle) -> bool {
    adjacent(CircleGraphKind::C3Complement, a, b)
}

/// Indices of the anchors adjacent to `x` in the complement of C3.
fn anchor_mask(x: RationalAngle) -> u8 {
    (0..5).filter(|&i| near(x, PENTAGON[i])).fold(0, |m, i| m | 1 << i)
}

/// The least anchor index adjacent to `x`.
pub fn p_anchor(x: RationalAngle) -> usize {
    anchor_mask(x).trailing_zeros() as usize
}

/// Label of the edge from a non-anchor `x` to the adjacent anchor `p^i`.
fn label_to_anchor(x: RationalAngle, i: usize) -> u8 {
    let mask = anchor_mask(x);
    debug_assert!(mask >> i & 1 == 1);
    let start = p_anchor(x);
    let mut label = parity_class(x);
    // The anchor neighbours form a cyclic run; walk it forward from `start`,
    // and backward if `i` is not reached.
    let mut k = start;
    while k != i && mask >> ((k + 1) % 5) & 1 == 1 {
        label ^= PENTAGON_LABELS[k];
        k = (k + 1) % 5;
    }
    if k == i {
        return label;
    }
    let mut label = parity_class(x);
    let mut k = start;
    while k != i {
        let prev = (k + 4) % 5;
        label ^= PENTAGON_LABELS[prev];
        k = prev;
    }
    label
}

fn pentagon_label(i: usize, j: usize) -> u8 {
    if (i + 1) % 5 == j {
        PENTAGON_LABELS[i]
    } else {
        PENTAGON_LABELS[j]
    }
}

/// The universal label of the edge `xy`.
///
/// Pairs exactly a third of a turn apart are rejected: their anchor
/// neighbourhoods together wrap the whole pentagon, and no choice of label
/// keeps every triangle at sum zero.
pub fn sigma_edge(x: RationalAngle, y: RationalAngle) -> Result<u8> {
    if !near(x, y) {
        return Err(Error::NotAdjacent(x.to_string(), y.to_string()));
    }
    if circ_dist(x, y) == Ratio::new(1, 3) {
        return Err(Error::DegenerateConfiguration(x.to_string(), y.to_string()));
    }
    Ok(match (anchor_index(x), anchor_index(y)) {
        (Some(i), Some(j)) => pentagon_label(i, j),
        (None, Some(j)) => label_to_anchor(x, j),
        (Some(i), None) => label_to_anchor(y, i),
        (None, None) => {
            let p = (anchor_mask(x) & anchor_mask(y)).trailing_zeros() as usize;
            label_to_anchor(x, p) ^ label_to_anchor(y, p)
        }
    })
}

/// The complement-of-C3 graph on `points`, labelled by [`sigma_edge`].
pub fn sigma_model(points: &[RationalAngle]) -> Result<SignedGraph> {
    let graph = induced_model(CircleGraphKind::C3Complement, points)?;
    let labels = graph
        .edges()
        .iter()
        .map(|&(u, v)| sigma_edge(points[u], points[v]))
        .collect::<Result<Vec<_>>>()?;
    SignedGraph::new(graph, labels)
}

/// The first reduced fraction in the open interval `(center - eps, center + eps)`
/// of class `parity` that avoids `avoid` and the anchors, scanning
/// denominators upward and numerators ascending.
fn nearby_with_class(
    center: RationalAngle,
    eps: Ratio<i64>,
    parity: u8,
    avoid: &[RationalAngle],
) -> RationalAngle {
    let c = center.to_ratio();
    let (lo, hi) = (c - eps, c + eps);
    for m in 1i64.. {
        let first = (lo * m).floor().to_integer();
        let last = (hi * m).ceil().to_integer();
        for j in first..=last {
            let r = Ratio::new(j, m);
            if r <= lo || r >= hi || j.rem_euclid(m).gcd(&m) != 1 {
                continue;
            }
            let a = RationalAngle::new(j, m).unwrap();
            if a.den() == m
                && parity_class(a) == parity
                && anchor_index(a).is_none()
                && !avoid.contains(&a)
            {
                return a;
            }
        }
    }
    unreachable!()
}

/// Moves every point indexed by `s` to a nearby point of the other class.
///
/// Each moved point lands strictly within `epsilon_bound(points)` of where it
/// was, avoiding anchors and every other output point. Points outside `s`
/// stay put. The labels of the resulting model are those of the original
/// model switched over `s`.
pub fn perturb(points: &[RationalAngle], s: &SwitchSet) -> Result<Vec<RationalAngle>> {
    let eps = epsilon_bound(points)?;
    let mut out = points.to_vec();
    for i in s.iter() {
        if i >= points.len() {
            return Err(Error::VertexOutOfRange {
                vertex: i,
                order: points.len(),
            });
        }
        let x = points[i];
        out[i] = nearby_with_class(x, eps, 1 - parity_class(x), &out);
    }
    Ok(out)
}

/// Embeds a signed graph into the universal model, preserving labels.
///
/// `map[v]` is the point for vertex `v`.
pub fn universal_embed(sg: &SignedGraph) -> Result<Vec<RationalAngle>> {
    universal_embed_with_cap(sg, default_den_cap(sg.graph()))
}

pub fn universal_embed_with_cap(sg: &SignedGraph, den_cap: u64) -> Result<Vec<RationalAngle>> {
    let g = sg.graph();
    if let Some(t) = g.independent_triple() {
        return Err(Error::NotIndependenceTwo(t.to_vec()));
    }
    if !sg.is_balancing(&BalanceRule::AntiEven)? {
        return Err(Error::NotBalanceable);
    }
    let points = find_c3_embedding_on(&g.complement(), den_cap, GridDenominators::NoThirds)?
        .ok_or_else(|| {
            Error::InternalInvariantViolation("complement of a balanceable graph does not embed".into())
        })?;
    let model = sigma_model(&points)?;
    if model.graph() != g {
        return Err(Error::InternalInvariantViolation("grid embedding has the wrong graph".into()));
    }
    let s = switching_witness(&model, sg)?.ok_or_else(|| {
        Error::InternalInvariantViolation("universal model is not switching equivalent".into())
    })?;
    let moved = perturb(&points, &s)?;
    if sigma_model(&moved)? != *sg {
        return Err(Error::InternalInvariantViolation("perturbed model does not reproduce the input".into()));
    }
    Ok(moved)
}

/// Half the smallest gap to a third of a turn between `x` and any of `others`
/// or the anchors, or `None` if some gap is zero.
fn local_epsilon(x: RationalAngle, others: &[RationalAngle]) -> Option<Ratio<i64>> {
    let third = Ratio::new(1, 3);
    let mut best = Ratio::new(1, 1);
    for &q in others.iter().chain(PENTAGON.iter()) {
        if q == x {
            continue;
        }
        let d = circ_dist(x, q);
        let gap = if d > third { d - third } else { third - d };
        if gap == Ratio::from_integer(0) {
            return None;
        }
        best = best.min(gap);
    }
    Some(best / 2)
}

/// Places one new vertex against at most two placed points.
///
/// `target` has `host.len() + 1` vertices; the last one is new, the others
/// are the host points in order. The result realizes the adjacencies and
/// labels of `target` at the new vertex.
pub fn extend_3(host: &[RationalAngle], target: &SignedGraph) -> Result<RationalAngle> {
    let k = host.len();
    let g = target.graph();
    if k > 2 || g.order() != k + 1 {
        return Err(Error::HostMismatch(format!(
            "target has {} vertices for {} host points",
            g.order(),
            k
        )));
    }
    if g.edge_count() == 3 && target.labels().iter().fold(0, |a, l| a ^ l) == 1 {
        return Err(Error::InconsistentTriangle);
    }
    if let Some(t) = g.independent_triple() {
        return Err(Error::NotIndependenceTwo(t.to_vec()));
    }
    check_distinct(host)?;
    let placed: Vec<usize> = (0..k).collect();
    let (restricted, _) = target.graph().induced_subgraph(&placed)?;
    let restricted = SignedGraph::new(
        restricted.clone(),
        restricted
            .edges()
            .iter()
            .map(|&(u, v)| target.label(u, v).unwrap())
            .collect(),
    )?;
    if sigma_model(host)? != restricted {
        return Err(Error::HostMismatch("host points do not induce the target restriction".into()));
    }
    if k == 0 {
        return Ok(RationalAngle::ZERO);
    }

    let third = Ratio::new(1, 3);
    let mut breaks: Vec<RationalAngle> = Vec::new();
    for &q in host.iter().chain(PENTAGON.iter()) {
        breaks.extend([q, q.offset(third), q.offset(-third)]);
    }
    breaks.sort();
    breaks.dedup();
    let mut candidates = breaks.clone();
    for w in 0..breaks.len() {
        let a = breaks[w].to_ratio();
        let mut b = breaks[(w + 1) % breaks.len()].to_ratio();
        if b <= a {
            b += 1;
        }
        candidates.push(RationalAngle::from_ratio((a + b) / 2));
    }

    let fits = |c: RationalAngle| -> bool {
        if host.contains(&c) {
            return false;
        }
        (0..k).all(|i| {
            let want = g.has_edge(i, k);
            near(c, host[i]) == want
                && (!want || sigma_edge(c, host[i]).ok() == target.label(i, k))
        })
    };
    for c in candidates {
        if fits(c) {
            return Ok(c);
        }
        if let Some(eps) = local_epsilon(c, host) {
            let flipped = nearby_with_class(c, eps, 1 - parity_class(c), host);
            if fits(flipped) {
                return Ok(flipped);
            }
        }
    }
    Err(Error::InternalInvariantViolation("no extension point found".into()))
}

/// Convenience: the target pattern for [`extend_3`] from explicit edges.
pub fn extension_target(order: usize, edges: &[(usize, usize, u8)]) -> Result<SignedGraph> {
    SignedGraph::from_labelled_edges(order, edges)
}

/// Points of `sg`'s vertices are consistent with the universal model.
pub fn realizes(points: &[RationalAngle], sg: &SignedGraph) -> Result<bool> {
    Ok(points.len() == sg.graph().order() && sigma_model(points)? == *sg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::signed::tree_extend;

    fn a(s: &str) -> RationalAngle {
        s.parse().unwrap()
    }

    #[test]
    fn classes_and_anchors() {
        assert_eq!(parity_class(a("0")), 0);
        assert_eq!(parity_class(a("1/3")), 1);
        assert_eq!(parity_class(a("1/5")), 0);
        assert_eq!(parity_class(a("3/5")), 0);
        assert_eq!(p_anchor(PENTAGON[0]), 1);
        assert_eq!(p_anchor(PENTAGON[4]), 0);
        for (i, &p) in PENTAGON.iter().enumerate().take(4).skip(1) {
            assert_eq!(p_anchor(p), i - 1);
        }
        assert_eq!(p_anchor(a("1/2")), 1);
        assert_eq!(p_anchor(a("1/10")), 0);
    }

    #[test]
    fn pentagon_labels_match_tree_extension() {
        // Four edges labelled 0 force the fifth under the anti-even rule.
        let c5 = Graph::cycle(5);
        let tree = [(0, 1), (1, 2), (2, 3), (0, 4)];
        let labels = tree_extend(&c5, &tree, &[0, 0, 0, 0], &BalanceRule::AntiEven).unwrap();
        let idx = c5.edge_index(3, 4).unwrap();
        assert_eq!(labels[idx], 1);
        assert_eq!(sigma_edge(a("3/5"), a("4/5")).unwrap(), 1);
        assert_eq!(sigma_edge(a("0"), a("1/5")).unwrap(), 0);
        assert_eq!(sigma_edge(a("1/10"), a("0")).unwrap(), 1);
        assert!(matches!(sigma_edge(a("0"), a("1/2")), Err(Error::NotAdjacent(..))));
        assert!(matches!(
            sigma_edge(a("1/15"), a("11/15")),
            Err(Error::DegenerateConfiguration(..))
        ));
    }

    #[test]
    fn model_examples() {
        let m = sigma_model(&PENTAGON).unwrap();
        let order = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)];
        let labels: Vec<u8> = order.iter().map(|&(u, v)| m.label(u, v).unwrap()).collect();
        assert_eq!(labels, vec![0, 0, 0, 1, 0]);
        let t = sigma_model(&[a("0"), a("1/5"), a("1/10")]).unwrap();
        assert_eq!(t.graph().edge_count(), 3);
        assert_eq!(t.labels().iter().fold(0, |x, l| x ^ l), 0);
        assert_eq!(t.label(0, 2), Some(1));
        assert_eq!(t.label(0, 1), Some(0));
    }

    #[test]
    fn label_independent_of_common_anchor() {
        let pts: Vec<RationalAngle> = (0..70).map(|j| RationalAngle::new(j, 70).unwrap()).collect();
        for &x in &pts {
            for &y in &pts {
                if !near(x, y) || anchor_index(x).is_some() || anchor_index(y).is_some() {
                    continue;
                }
                let common = anchor_mask(x) & anchor_mask(y);
                let vals: Vec<u8> = (0..5)
                    .filter(|&i| common >> i & 1 == 1)
                    .map(|i| label_to_anchor(x, i) ^ label_to_anchor(y, i))
                    .collect();
                assert!(vals.windows(2).all(|w| w[0] == w[1]), "{x} {y}");
            }
        }
    }

    #[test]
    fn perturbation_examples() {
        let pts = [a("0"), a("1/2")];
        assert_eq!(perturb(&pts, &SwitchSet::empty()).unwrap(), pts.to_vec());
        let moved = perturb(&pts, &[1].into_iter().collect()).unwrap();
        assert_eq!(moved[0], pts[0]);
        let eps = Ratio::new(1, 60);
        let d = circ_dist(moved[1], pts[1]);
        assert!(d < eps && d > Ratio::from_integer(0));
        assert_eq!(moved[1].num() % 2, 0);
        assert_eq!(
            sigma_model(&moved).unwrap(),
            sigma_model(&pts).unwrap().switch(&[1].into_iter().collect()).unwrap()
        );
    }

    #[test]
    fn embedding_examples() {
        let k4 = SignedGraph::all_zero(Graph::complete(4));
        let pts = universal_embed(&k4).unwrap();
        assert_eq!(sigma_model(&pts).unwrap(), k4);

        let prism = SignedGraph::all_zero(Graph::cycle(6).complement());
        assert_eq!(universal_embed(&prism), Err(Error::NotBalanceable));

        let edge = SignedGraph::from_labelled_edges(2, &[(0, 1, 1)]).unwrap();
        let pts = universal_embed(&edge).unwrap();
        assert_eq!(sigma_model(&pts).unwrap(), edge);

        let empty3 = SignedGraph::all_zero(Graph::empty(3));
        assert!(matches!(universal_embed(&empty3), Err(Error::NotIndependenceTwo(_))));
    }

    #[test]
    fn extension_examples() {
        let single = SignedGraph::all_zero(Graph::empty(1));
        assert_eq!(extend_3(&[], &single).unwrap(), RationalAngle::ZERO);

        let joined = extension_target(2, &[(0, 1, 1)]).unwrap();
        let p = extend_3(&[a("0")], &joined).unwrap();
        assert!(realizes(&[a("0"), p], &joined).unwrap());

        let apart = SignedGraph::all_zero(Graph::empty(2));
        let p = extend_3(&[a("0")], &apart).unwrap();
        assert!(circ_dist(p, a("0")) > Ratio::new(1, 3));

        let bad = extension_target(3, &[(0, 1, 0), (0, 2, 0), (1, 2, 1)]).unwrap();
        assert_eq!(extend_3(&[a("0"), a("1/5")], &bad), Err(Error::InconsistentTriangle));

        let wrong = extension_target(3, &[(0, 1, 1), (0, 2, 0), (1, 2, 1)]).unwrap();
        assert!(matches!(extend_3(&[a("0"), a("1/5")], &wrong), Err(Error::HostMismatch(_))));

        // A path through the new vertex with each label combination.
        let host = [a("0"), a("2/5")];
        for (l, r) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let t = extension_target(3, &[(0, 2, l), (1, 2, r)]).unwrap();
            let p = extend_3(&host, &t).unwrap();
            assert!(realizes(&[host[0], host[1], p], &t).unwrap(), "{l}{r}");
        }
    }

    #[test]
    fn circle_point_serialization() {
        let p = CirclePoint::new(a("1/3"));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"angle":"1/3","parity":1}"#);
        assert_eq!(serde_json::from_str::<CirclePoint>(&s).unwrap(), p);
        assert!(serde_json::from_str::<CirclePoint>(r#"{"angle":"1/3","parity":0}"#).is_err());
    }
}
