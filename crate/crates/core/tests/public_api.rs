use comblab_core::blockade::{eh_certificate, kappa_superadditive_check, pattern_of, Blockade, EhOutcome};
use comblab_core::comb::{extract_comb, verify_comb, CombOutcome};
use comblab_core::decompose::{accounting, c5_scenario, comb_with_apex, sparse_decomposition, ApexRule, C5Outcome};
use comblab_core::extremal::{is_tau_critical, kappa};
use comblab_core::format::{from_graph6, to_graph6};
use comblab_core::search::{contains_induced, rainbow_copy, star_expansion, PatternGraph};
use comblab_core::sparsify::{density_subset, DensityOptions};
use comblab_core::{random, Graph, Rational, VertexSet};

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

fn set(xs: &[usize]) -> VertexSet {
    xs.iter().copied().collect()
}

#[test]
fn graph6_round_trip_preserves_kappa() {
    for seed in 0..20 {
        let g = random::gnp(11, 0.4, seed);
        let h = from_graph6(&to_graph6(&g)).unwrap();
        assert_eq!(g, h);
        assert_eq!(kappa(&g, &g.vertices()).unwrap().kappa, kappa(&h, &h.vertices()).unwrap().kappa);
    }
}

#[test]
fn c5_is_critical_and_petersen_is_not_small() {
    let c5 = Graph::cycle(5);
    assert!(is_tau_critical(&c5, &q("9/10"), 16).unwrap().is_critical());
    let p = Graph::petersen();
    assert_eq!(kappa(&p, &p.vertices()).unwrap().kappa, 8);
}

#[test]
fn comb_on_disjoint_stars() {
    // centres 0..3, each with four private leaves
    let mut g = Graph::new(16).unwrap();
    for c in 0..3 {
        for l in 0..4 {
            g.add_edge(c, 3 + 4 * c + l).unwrap();
        }
    }
    let (a, b) = (set(&[0, 1, 2]), (3..15).collect());
    match extract_comb(&g, &a, &b, &q("2"), &q("1/2")).unwrap() {
        CombOutcome::CombFound { comb, .. } => assert!(verify_comb(&g, &comb, 1, &q("1/2"))),
        other => panic!("{other:?}"),
    }
}

#[test]
fn join_of_blocks_is_superadditive_and_certified() {
    let blocks = [Graph::cycle(5), Graph::path(3)];
    let g = blocks[0].join(&blocks[1]).unwrap();
    let b = Blockade::new(&g, vec![(0..5).collect(), (5..8).collect()]).unwrap();
    assert_eq!(pattern_of(&g, &b).unwrap().unwrap().edge_count(), 1);
    let rep = kappa_superadditive_check(&g, &b).unwrap();
    assert!(rep.holds && rep.lhs >= rep.rhs);
    match eh_certificate(&g, &b, &q("1/2")).unwrap() {
        EhOutcome::Witness(w) => assert!(w.verify(&g)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn rainbow_star_expansion() {
    let p4: PatternGraph = "star:P4".parse().unwrap();
    let g = star_expansion(&Graph::path(4));
    assert!(contains_induced(&g, &p4.graph).is_some());
    let singletons = Blockade::new(&g, (0..g.n()).map(VertexSet::singleton).collect()).unwrap();
    let e = rainbow_copy(&g, &singletons, &p4.graph).unwrap().unwrap();
    assert!(e.verify(&g, &p4.graph));
}

#[test]
fn sparse_subset_on_a_sparse_graph() {
    let g = Graph::perfect_matching(6);
    let x = density_subset(&g, 5, &q("1/5"), &mut random::rng(0), &DensityOptions::default()).unwrap();
    assert_eq!(x.x.len(), 5);
    assert_eq!(g.max_degree(&x.x), 0);
}

#[test]
fn decomposition_end_to_end() {
    for seed in 0..10 {
        let g = random::gnp(20, 0.2, seed);
        let dec = sparse_decomposition(&g, &g.vertices(), &q("1/4"), &q("1/2"), &q("1/2")).unwrap();
        assert!(dec.violations(&g).is_empty());
        assert_eq!(accounting(&dec).unwrap().total, Rational::one());
        let rule = ApexRule::Fixed {
            gamma: Rational::one(),
            min_teeth: 2,
        };
        if let Some(ac) = comb_with_apex(&g, &dec, &rule).unwrap() {
            if let C5Outcome::C5Witness { embedding, .. } = c5_scenario(&g, &ac.comb).unwrap() {
                assert!(embedding.verify(&g, &Graph::cycle(5)));
            }
        }
    }
}
