mod common;

use num_rational::Ratio;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use circsign::circle::{embeds_in_c3, epsilon_bound, induced_model, CircleGraphKind, RationalAngle};
use circsign::generate::random_points;
use circsign::sigma::{parity_class, perturb, sigma_edge, sigma_model};
use circsign::SwitchSet;

fn points(seed: u64, max_k: usize) -> Vec<RationalAngle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(1..=max_k);
    random_points(&mut rng, k, 80)
}

proptest! {
    #[test]
    fn small_moves_keep_the_model(seed in any::<u64>()) {
        let pts = points(seed, 10);
        let eps = epsilon_bound(&pts).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xff);
        let moved: Vec<RationalAngle> = pts
            .iter()
            .map(|p| p.offset(eps * Ratio::new(rng.gen_range(-999..=999), 1000)))
            .collect();
        let mut sorted = moved.clone();
        sorted.sort();
        sorted.dedup();
        prop_assume!(sorted.len() == moved.len());
        for kind in [CircleGraphKind::C3, CircleGraphKind::C3Complement] {
            prop_assert_eq!(induced_model(kind, &pts).unwrap(), induced_model(kind, &moved).unwrap());
        }
    }

    #[test]
    fn c3_is_the_complement_of_its_complement_model(seed in any::<u64>()) {
        let pts = points(seed, 12);
        let c3 = induced_model(CircleGraphKind::C3, &pts).unwrap();
        prop_assert_eq!(c3.complement(), induced_model(CircleGraphKind::C3Complement, &pts).unwrap());
        prop_assert!(embeds_in_c3(&c3));
    }

    #[test]
    fn perturbation_switches_labels(seed in any::<u64>(), mask in any::<u16>()) {
        let pts = points(seed, 10);
        let s: SwitchSet = (0..pts.len()).filter(|&v| mask >> v & 1 == 1).collect();
        let moved = perturb(&pts, &s).unwrap();
        let eps = epsilon_bound(&pts).unwrap();
        for (i, (a, b)) in pts.iter().zip(&moved).enumerate() {
            prop_assert_eq!(a == b, !s.contains(i));
            let d = circsign::circle::circ_dist(*a, *b);
            prop_assert!(d < eps);
        }
        let before = sigma_model(&pts).unwrap();
        prop_assert_eq!(sigma_model(&moved).unwrap(), before.switch(&s).unwrap());
    }

    #[test]
    fn perturbed_labels_shift_by_classes(seed in any::<u64>(), mask in any::<u16>()) {
        let pts = points(seed, 10);
        let s: SwitchSet = (0..pts.len()).filter(|&v| mask >> v & 1 == 1).collect();
        let moved = perturb(&pts, &s).unwrap();
        let model = sigma_model(&pts).unwrap();
        for (u, v, label) in model.labelled_edges() {
            let shift = parity_class(pts[u]) ^ parity_class(moved[u]) ^ parity_class(pts[v]) ^ parity_class(moved[v]);
            prop_assert_eq!(sigma_edge(moved[u], moved[v]).unwrap(), label ^ shift);
        }
    }
}
