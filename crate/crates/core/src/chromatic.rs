//! Circular cliques, homomorphism search, and the circular chromatic number.

use num_integer::Integer;
use num_rational::Ratio;

use crate::circle::{induced_model, CircleGraphKind, RationalAngle};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::signed::{find_balancing, BalanceRule};

/// The circular clique `K_{p/q}`: vertices `0..p`, with `i ~ j` iff
/// `q <= |i - j| <= p - q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularClique {
    pub p: usize,
    pub q: usize,
    /// `p/q` in lowest terms.
    pub reduced: (usize, usize),
}

impl CircularClique {
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if q == 0 || p < 2 * q {
            return Err(Error::BadParameters { p, q });
        }
        let g = p.gcd(&q);
        Ok(CircularClique {
            p,
            q,
            reduced: (p / g, q / g),
        })
    }

    pub fn graph(&self) -> Graph {
        let mut edges = Vec::new();
        for i in 0..self.p {
            for j in i + 1..self.p {
                let d = j - i;
                if self.q <= d && d <= self.p - self.q {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(self.p, edges).expect("circular clique fits")
    }
}

pub fn circular_clique(p: usize, q: usize) -> Result<Graph> {
    Ok(CircularClique::new(p, q)?.graph())
}

/// An edge-preserving map from `g` to `h`, found by backtracking over the
/// vertices of `g` in degree-descending order.
pub fn find_homomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n == 0 {
        return Some(Vec::new());
    }
    if h.order() == 0 {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut image = vec![usize::MAX; n];
    hom_step(g, h, &order, 0, &mut image).then_some(image)
}

fn hom_step(g: &Graph, h: &Graph, order: &[usize], k: usize, image: &mut [usize]) -> bool {
    if k == order.len() {
        return true;
    }
    let v = order[k];
    let mut allowed = if h.order() == 64 { u64::MAX } else { (1u64 << h.order()) - 1 };
    for u in g.neighbors(v) {
        if image[u] != usize::MAX {
            allowed &= h.neighbor_mask(image[u]);
        }
    }
    for c in bits(allowed) {
        image[v] = c;
        if hom_step(g, h, order, k + 1, image) {
            return true;
        }
    }
    image[v] = usize::MAX;
    false
}

/// Reduced fractions `p/q` with `2 <= p <= max_p` and `p >= 2q`, ascending
/// by value.
fn clique_parameters(max_p: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 2..=max_p {
        for q in 1..=p / 2 {
            if p.gcd(&q) == 1 {
                out.push((p, q));
            }
        }
    }
    out.sort_by_key(|&(p, q)| (Ratio::new(p as i64, q as i64), p));
    out
}

/// The least `p/q` such that `g` maps to `K_{p/q}`, over `p <= |V(g)|`.
/// Graphs without edges get 1.
pub fn circular_chromatic_number(g: &Graph) -> Ratio<i64> {
    circular_chromatic_number_bounded(g, g.order()).expect("p <= |V| always suffices")
}

/// As [`circular_chromatic_number`] with the scan limited to `p <= max_p`;
/// `None` if no such clique admits a homomorphism.
pub fn circular_chromatic_number_bounded(g: &Graph, max_p: usize) -> Option<Ratio<i64>> {
    if g.edge_count() == 0 {
        return Some(Ratio::from_integer(1));
    }
    clique_parameters(max_p)
        .into_iter()
        .find(|&(p, q)| find_homomorphism(g, &circular_clique(p, q).unwrap()).is_some())
        .map(|(p, q)| Ratio::new(p as i64, q as i64))
}

/// Evidence that a graph has circular chromatic number below 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualWitness {
    pub p: usize,
    pub q: usize,
    /// A homomorphism into `K_{p/q}`.
    pub hom: Vec<usize>,
    /// Distinct angles near `hom[v]/p`.
    pub angles: Vec<RationalAngle>,
    /// The C3-model of `angles`: triangle-free, containing `g` spanning,
    /// with an anti-even-signable complement.
    pub supergraph: Graph,
}

impl DualWitness {
    /// Re-checks every claim of the witness against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let Ok(clique) = circular_clique(self.p, self.q) else {
            return false;
        };
        let hom_ok = self.hom.len() == g.order()
            && g.edges().iter().all(|&(u, v)| clique.has_edge(self.hom[u], self.hom[v]));
        let Ok(h) = induced_model(CircleGraphKind::C3, &self.angles) else {
            return false;
        };
        hom_ok
            && h == self.supergraph
            && h.order() == g.order()
            && h.triangle().is_none()
            && g.edges().iter().all(|&(u, v)| h.has_edge(u, v))
            && matches!(find_balancing(&h.complement(), &BalanceRule::AntiEven), Ok(Some(_)))
    }
}

/// Decides whether `g` has circular chromatic number below 3; when it does,
/// returns the homomorphism together with an injective placement in C3.
pub fn chi_c_less_than_3(g: &Graph) -> Option<DualWitness> {
    let n = g.order();
    let params: Vec<(usize, usize)> = if g.edge_count() == 0 {
        vec![(2, 1)]
    } else {
        clique_parameters(n.max(2))
            .into_iter()
            .filter(|&(p, q)| p < 3 * q)
            .collect()
    };
    for (p, q) in params {
        let Some(hom) = find_homomorphism(g, &circular_clique(p, q).unwrap()) else {
            continue;
        };
        // Edges sit at least q/p > 1/3 apart; spread vertices sharing a slot
        // by less than half that margin and less than half a slot.
        let (pi, qi) = (p as i64, q as i64);
        let delta = Ratio::new(3 * qi - pi, 6 * pi).min(Ratio::new(1, 2 * pi));
        let step = delta / (n as i64).max(1);
        let mut used = vec![0i64; p];
        let angles: Vec<RationalAngle> = hom
            .iter()
            .map(|&k| {
                let t = used[k];
                used[k] += 1;
                RationalAngle::from_ratio(Ratio::new(k as i64, pi) + step * t)
            })
            .collect();
        let supergraph = induced_model(CircleGraphKind::C3, &angles).expect("angles are distinct");
        return Some(DualWitness {
            p,
            q,
            hom,
            angles,
            supergraph,
        });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_examples() {
        assert_eq!(circular_clique(3, 1).unwrap(), Graph::complete(3));
        let k52 = circular_clique(5, 2).unwrap();
        assert_eq!(k52.edge_count(), 5);
        assert!(k52.find_induced(&Graph::cycle(5)).is_some());
        let k73 = circular_clique(7, 3).unwrap();
        assert_eq!(k73.edge_count(), 7);
        assert!(k73.neighbors(0).eq([3, 4]));
        assert_eq!(circular_clique(3, 2), Err(Error::BadParameters { p: 3, q: 2 }));
        assert_eq!(circular_clique(0, 0), Err(Error::BadParameters { p: 0, q: 0 }));
        assert_eq!(CircularClique::new(10, 4).unwrap().reduced, (5, 2));
    }

    #[test]
    fn homomorphism_examples() {
        let c5 = Graph::cycle(5);
        assert!(find_homomorphism(&c5, &circular_clique(5, 2).unwrap()).is_some());
        assert_eq!(find_homomorphism(&Graph::complete(3), &c5), None);
        let colouring = find_homomorphism(&Graph::petersen(), &Graph::complete(3)).unwrap();
        let p = Graph::petersen();
        assert!(p.edges().iter().all(|&(u, v)| colouring[u] != colouring[v]));
    }

    #[test]
    fn chromatic_values() {
        assert_eq!(circular_chromatic_number(&Graph::cycle(5)), Ratio::new(5, 2));
        assert_eq!(circular_chromatic_number(&Graph::cycle(7)), Ratio::new(7, 3));
        assert_eq!(circular_chromatic_number(&Graph::complete(4)), Ratio::from_integer(4));
        assert_eq!(circular_chromatic_number(&Graph::petersen()), Ratio::from_integer(3));
        assert_eq!(circular_chromatic_number(&Graph::empty(3)), Ratio::from_integer(1));
        assert_eq!(circular_chromatic_number(&Graph::cycle(6)), Ratio::from_integer(2));
    }

    #[test]
    fn dual_witnesses() {
        for g in [Graph::cycle(5), Graph::cycle(7), Graph::cycle(4), Graph::empty(2)] {
            let w = chi_c_less_than_3(&g).unwrap();
            assert!(w.verify(&g), "{g:?}");
        }
        let w = chi_c_less_than_3(&Graph::cycle(7)).unwrap();
        assert_eq!((w.p, w.q), (7, 3));
        assert_eq!(chi_c_less_than_3(&Graph::complete(3)), None);
        assert_eq!(chi_c_less_than_3(&Graph::petersen()), None);
    }
}
