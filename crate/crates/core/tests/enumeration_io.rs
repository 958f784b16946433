use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use circsign::generate::{graphs_up_to_iso, random_network, random_points, random_sigma_model};
use circsign::io::{emit, parse, Document};
use circsign::relalg::{nsp_solve, ra_56_65, NspOutcome};

#[test]
fn eight_vertex_class_count() {
    assert_eq!(graphs_up_to_iso(8).len(), 12346);
}

#[test]
fn generated_documents_round_trip() {
    let ra = ra_56_65();
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let net = random_network(&mut rng, &ra, n);
        let mut docs = vec![
            Document::Points(random_points(&mut rng, n, 40)),
            Document::SignedGraph(random_sigma_model(&mut rng, n, 40).unwrap()),
            Document::Network(net.clone()),
        ];
        if let NspOutcome::Sat(cert) = nsp_solve(&ra, &net).unwrap() {
            docs.push(Document::Certificate(cert));
        }
        for doc in docs {
            let text = emit(&doc);
            assert_eq!(parse(&text).unwrap(), doc);
            assert_eq!(emit(&parse(&text).unwrap()), text);
        }
    }
}
