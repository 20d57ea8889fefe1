use std::collections::BTreeMap;

use sl21_core::chainrep::*;
use sl21_core::fusion::chain_decompose;
use sl21_core::uqmod::{build_indecomp, weight_multiset, Gen};

fn failed(checks: &[RelationCheck]) -> Vec<String> {
    checks.iter().filter(|c| !c.holds).map(|c| format!("({},{}) {}", c.m, c.n, c.relation)).collect()
}

fn pairs(max: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=max).flat_map(|t| (0..=t).map(move |m| (m, t - m)))
}

#[test]
fn qwb_relations_hold_symbolically() {
    let params = QwbParams::chain();
    for (m, n) in pairs(5) {
        let checks = SymbolicBackend.check_qwb_relations(&ChainContext::new(m, n), &params).unwrap();
        assert!(failed(&checks).is_empty(), "{:?}", failed(&checks));
    }
}

#[test]
fn qwb_relations_hold_at_eval_points() {
    let params = QwbParams::chain();
    let backend = EvalBackend::seeded(7, 3);
    for (m, n) in pairs(7) {
        let checks = backend.check_qwb_relations(&ChainContext::new(m, n), &params).unwrap();
        assert!(failed(&checks).is_empty(), "{:?}", failed(&checks));
    }
}

#[test]
fn generators_commute_with_quantum_group() {
    for (m, n) in pairs(5) {
        let checks = SymbolicBackend.check_centralizer(&ChainContext::new(m, n)).unwrap();
        assert!(failed(&checks).is_empty(), "{:?}", failed(&checks));
    }
}

#[test]
fn relation_list_covers_expected_instances() {
    let checks = SymbolicBackend.check_qwb_relations(&ChainContext::new(2, 2), &QwbParams::chain()).unwrap();
    let names: Vec<&str> = checks.iter().map(|c| c.relation.as_str()).collect();
    for expected in ["E g1 E = E", "E h1 E = E", "EE = (θ+1)/(γ+δ) E", "E g1 h1^-1 E (g1 - h1) = 0", "g1h1 = h1g1"] {
        assert!(names.contains(&expected), "{expected} missing from {names:?}");
    }
    let braid = SymbolicBackend.check_qwb_relations(&ChainContext::new(3, 0), &QwbParams::chain()).unwrap();
    assert!(braid.iter().any(|c| c.relation == "g1g2g1 = g2g1g2" && c.holds));
}

#[test]
fn wrong_parameters_are_detected() {
    let mut params = QwbParams::chain();
    params.delta = sl21_core::qarith::QScalar::q_pow(2);
    let checks = SymbolicBackend.check_qwb_relations(&ChainContext::new(2, 1), &params).unwrap();
    assert!(!failed(&checks).is_empty());
}

#[test]
fn chain_action_matches_coproduct_and_weights() {
    let ctx = ChainContext::new(2, 0);
    let f = sl21_core::uqmod::fundamental_f();
    let id = sl21_core::sparse::SparseMatrix::identity(3);
    let expected = f.gen(Gen::B).kron(&id).add(&f.gen(Gen::SmallKinv).kron(f.gen(Gen::B)));
    assert_eq!(ctx.quantum_group_action(Gen::B).unwrap(), expected);

    for (m, n) in [(1, 1), (2, 1), (2, 2), (1, 3)] {
        let ctx = ChainContext::new(m, n);
        let mut from_fusion = BTreeMap::new();
        for (l, mult) in chain_decompose(m, n).iter() {
            for (w, c) in weight_multiset(&build_indecomp(l).unwrap()) {
                *from_fusion.entry(w).or_insert(0) += c * mult as usize;
            }
        }
        assert_eq!(weight_multiset(ctx.module().unwrap()), from_fusion);
    }
}
