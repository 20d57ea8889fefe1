//! Consistency of the bimodule decomposition: identities, projections, dimensions and duality.

use proptest::prelude::*;
use sl21_core::bimod::*;
use sl21_core::fusion::{chain_decompose, Groth};
use sl21_core::partitions::{atypical_set, cross_set, Bipartition};
use sl21_core::uqmod::{BarLabel, IndecompLabel};
use sl21_core::xcat::{self, Level, XMod};

fn levels(max: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max).flat_map(|t| (0..=t).map(move |m| (m, t - m)))
}

fn show(c: &IdentityCheck) -> Vec<String> {
    c.residual().iter().map(|(p, a, b)| format!("{p}: {a} vs {b}")).collect()
}

fn weighted_dim(g: &IndecompPairGroth, lv: Level) -> u64 {
    g.iter().map(|(p, c)| c * dim_x(&p.x, lv).unwrap() * p.z.dim() as u64).sum()
}

#[test]
fn tensor_identity_through_twenty() {
    for (m, n) in levels(20) {
        let c = identity_tensor(m, n).unwrap();
        assert!(c.holds(), "({m},{n}) {:?}", show(&c));
    }
}

#[test]
fn projective_identity_through_twenty() {
    for (m, n) in levels(20) {
        let c = identity_proj(m, n).unwrap();
        assert!(c.holds(), "({m},{n}) {:?}", show(&c));
    }
}

#[test]
fn identity_sides_carry_the_whole_chain() {
    for (m, n) in levels(11) {
        let lv = Level::new(m, n);
        let want = 3u64.pow((m + n + 1) as u32);
        assert_eq!(weighted_dim(&identity_tensor(m, n).unwrap().lhs, lv), want, "({m},{n})");
        assert_eq!(weighted_dim(&identity_proj(m, n).unwrap().rhs, lv), want, "({m},{n})");
    }
}

#[test]
fn graph_projections_match_closed_forms() {
    for (m, n) in levels(12) {
        let g = atypical_part(m, n).unwrap();
        assert_eq!(g.q_projection().unwrap(), q_closed_form(m, n), "ℚ at ({m},{n})");
        assert_eq!(g.p_projection().unwrap(), p_closed_form(m, n).unwrap(), "ℙ at ({m},{n})");
    }
}

#[test]
fn columns_are_the_atypical_set_minus_the_lone_vertex() {
    for (m, n) in levels(12) {
        let g = atypical_part(m, n).unwrap();
        let mut xs: Vec<Bipartition> = g.columns.iter().map(|c| c.x.clone()).collect();
        xs.extend(g.vertices.iter().filter(|v| v.layer == VLayer::Lone).map(|v| v.x.clone()));
        xs.sort();
        let mut want: Vec<Bipartition> = atypical_set(m, n).iter().map(|l| l.bipartition()).collect();
        want.sort();
        assert_eq!(xs, want, "({m},{n})");
        assert_eq!(g.vertices.len(), 4 * g.columns.len() + 1);
    }
}

#[test]
fn graph_edges_join_existing_vertices() {
    let g = atypical_part(6, 3).unwrap();
    assert_eq!(g.regime, Regime::R1);
    for (a, b, kind) in &g.edges {
        let (va, vb) = (&g.vertices[*a], &g.vertices[*b]);
        match kind {
            EdgeKind::QuantumGroup => assert_eq!(va.x, vb.x),
            EdgeKind::Centralizer => assert_eq!(va.z, vb.z),
        }
    }
    // K(Δ_{3,1}) = Δ_{3,1} → Δ_{3,0}, Δ_{3,2} → Δ_{3,1} puts the lone vertex in the middle
    let lone = g.vertices.iter().position(|v| v.layer == VLayer::Lone).unwrap();
    assert!(g.edges.iter().any(|e| e.0 == lone && e.2 == EdgeKind::Centralizer));
}

#[test]
fn weighted_images_recover_the_chain() {
    for (m, n) in levels(12) {
        let (q, p) = weighted_images(m, n).unwrap();
        let chain = chain_decompose(m, n);
        assert_eq!(q, chain, "ℚ at ({m},{n})");
        assert_eq!(p, p_functor_groth(&chain), "ℙ at ({m},{n})");
    }
}

#[test]
fn every_cross_label_is_paired_once() {
    for (m, n) in levels(12) {
        let ledger = dim_ledger(m, n).unwrap();
        let keys: Vec<Bipartition> = ledger.dims.keys().cloned().collect();
        let mut want = cross_set(m, n);
        want.sort();
        assert_eq!(keys, want, "({m},{n})");
        assert_eq!(ledger.dims.len(), chain_decompose(m, n).len());
    }
}

#[test]
fn dimension_audit_through_twelve() {
    for (m, n) in levels(12) {
        let a = dimension_audit(m, n).unwrap();
        assert!(a.holds(), "{a:?}");
    }
}

#[test]
fn algebra_dimension_matches_endomorphism_counts() {
    // dim End_U of the chain, solved directly on the quantum-group side by the Hom solver
    let frozen = [((1, 1), 2), ((2, 1), 6), ((3, 1), 24), ((3, 2), 120), ((3, 3), 695), ((4, 2), 695), ((4, 3), 4403)];
    for ((m, n), want) in frozen {
        let lv = Level::new(m, n);
        let total: u64 = cross_set(m, n)
            .into_iter()
            .map(|l| dim_x(&XMod::D(l.clone()), lv).unwrap() * dim_x(&XMod::K(l), lv).unwrap())
            .sum();
        assert_eq!(total, want, "({m},{n})");
    }
}

#[test]
fn restriction_preserves_dimension() {
    for (m, n) in levels(10) {
        let lv = Level::new(m, n);
        let targets: Vec<(Level, fn(&XMod, Level) -> Result<xcat::XGroth, xcat::XError>)> = [
            (n >= 1).then_some((Level::new(m, n.saturating_sub(1)), xcat::res_right as fn(&XMod, Level) -> _)),
            (m >= 1).then_some((Level::new(m.saturating_sub(1), n), xcat::res_left as fn(&XMod, Level) -> _)),
        ]
        .into_iter()
        .flatten()
        .filter(|(t, _)| t.m + t.n >= 1)
        .collect();
        let mut mods: Vec<XMod> = cross_set(m, n).into_iter().map(XMod::D).collect();
        mods.extend(atypical_set(m, n).iter().map(|a| XMod::K(a.bipartition())));
        for x in &mods {
            let dim = dim_x(x, lv).unwrap();
            for (target, res) in &targets {
                let r = res(x, lv).unwrap();
                assert_eq!(dim_x_groth(&r, *target).unwrap(), dim, "{x} at {lv} to {target}: {r}");
            }
        }
    }
}

#[test]
fn duality_swaps_the_two_sides() {
    let swap = |g: &PairGroth| -> PairGroth { g.iter().map(|(p, c)| (Pair::new(p.x.gswap(), p.z.gswap()), c)).collect() };
    for (m, n) in levels(12) {
        assert_eq!(swap(&q_image(m, n)), *q_image(n, m), "({m},{n})");
        assert_eq!(swap(&p_image(m, n).unwrap()), *p_image(n, m).unwrap(), "({m},{n})");
        let g = atypical_part(m, n).unwrap().p_projection().unwrap();
        assert_eq!(swap(&g), atypical_part(n, m).unwrap().p_projection().unwrap());
        let a = dim_ledger(m, n).unwrap();
        let b = dim_ledger(n, m).unwrap();
        for (l, (_, d)) in &a.dims {
            assert_eq!(b.dims[&l.gswap()].1, *d);
        }
    }
}

#[test]
fn lambda_tables_match_hand_copies() {
    let t = LambdaTable::new(5, 3);
    assert_eq!(t.ts, vec![-2, -1, 0, 1, 2, 3]);
    assert_eq!(t.rs, vec![5, 4, 3, 2, 1]);
    let cell = |t: &LambdaTable, tt: i32, r: i32| t.cell(tt, r).map(|b| b.to_string());
    assert_eq!(cell(&t, -1, 5).as_deref(), Some("[1^5 | 3]"));
    assert_eq!(cell(&t, 1, 1).as_deref(), Some("[3,2 | 1^3]"));
    assert_eq!(cell(&t, -1, 2).as_deref(), Some("[1^2 | ∅]"));
    assert_eq!(cell(&t, 0, 3), None);
    let u = LambdaTable::new(4, 4);
    assert_eq!(u.rs, vec![4, 3, 2, 1, 0, -1]);
    assert_eq!(cell(&u, -1, 2).as_deref(), Some("[1^4 | 2^2]"));
    assert_eq!(cell(&u, 2, -1).as_deref(), Some("[2^2 | 1^4]"));
    assert!(u.rs.iter().all(|&r| r != 0 || u.ts.iter().all(|&tt| u.cell(tt, 0).is_none())));
}

#[test]
fn semisimple_labels_are_typical_and_distinct() {
    for (m, n) in levels(12) {
        let part = semisimple_part(m, n);
        let lv = Level::new(m, n);
        for s in &part {
            assert!(!s.z.is_atypical(), "({m},{n}) {}", s.z);
            assert!(xcat::atypical_label(&s.x, lv).is_none(), "({m},{n}) {}", s.x);
        }
        let zs: std::collections::BTreeSet<BarLabel> = part.iter().map(|s| s.z).collect();
        assert_eq!(zs.len(), part.len());
    }
}

proptest! {
    #[test]
    fn k_dimension_is_sum_over_vertices(m in 0usize..8, n in 0usize..8, pick in 0usize..1000) {
        prop_assume!(m + n >= 1);
        let lv = Level::new(m, n);
        let set = cross_set(m, n);
        let l = &set[pick % set.len()];
        let g = xcat::proj_structure(l, lv).unwrap();
        let total: u64 = g.vertices().iter().map(|(v, _)| dim_simple_x(v, lv).unwrap()).sum();
        prop_assert_eq!(dim_x(&XMod::K(l.clone()), lv).unwrap(), total);
        prop_assert!(dim_x(&XMod::D(l.clone()), lv).unwrap() >= 1);
    }

    #[test]
    fn p_functor_keeps_dimension(m in 1usize..7, n in 0usize..7) {
        let chain = chain_decompose(m, n);
        let p: Groth<IndecompLabel> = p_functor_groth(&chain);
        prop_assert_eq!(sl21_core::fusion::dim_of_groth(&p), sl21_core::fusion::dim_of_groth(&chain));
    }
}

#[test]
fn worked_example_three_two() {
    let g = atypical_part(3, 2).unwrap();
    let col = |x: &Bipartition| -> Vec<(VLayer, BarLabel)> {
        g.vertices.iter().filter(|v| &v.x == x).map(|v| (v.layer, v.z)).collect()
    };
    let d12 = Bipartition::from_parts(&[1, 1, 1], &[2]);
    assert_eq!(
        col(&d12),
        vec![
            (VLayer::Top, BarLabel::z(2, 0, 2)),
            (VLayer::Middle, BarLabel::z(3, 0, 3)),
            (VLayer::Middle, BarLabel::z(1, 0, 1)),
            (VLayer::Bottom, BarLabel::z(2, 0, 2)),
        ]
    );
    let red = Bipartition::from_parts(&[1], &[]);
    assert_eq!(col(&red), vec![(VLayer::Lone, BarLabel::z(1, 0, 1))]);
    // K(Δ_{1,1}) is the fork through Δ_{1,2}, Δ_{1,0}: the red vertex takes two dashed edges
    let lone = g.vertices.iter().position(|v| v.x == red).unwrap();
    assert_eq!(g.edges.iter().filter(|e| (e.0 == lone || e.1 == lone) && e.2 == EdgeKind::Centralizer).count(), 2);
}

#[test]
fn small_cases() {
    let one = atypical_part(1, 1).unwrap();
    assert_eq!(one.vertices.len(), 1);
    assert_eq!(one.vertices[0].x, Bipartition::empty());
    assert_eq!(one.vertices[0].z, BarLabel::z(1, 0, 0));
    assert_eq!(dim_simple_x(&Bipartition::empty(), Level::new(1, 1)).unwrap(), 1);
    assert_eq!(dim_simple_x(&Bipartition::from_parts(&[1, 1], &[1]), Level::new(2, 1)).unwrap(), 1);
    let a = dimension_audit(2, 1).unwrap();
    assert_eq!((a.expected, a.from_q_image), (27, 27));
    assert!(matches!(
        dim_simple_x(&Bipartition::from_parts(&[2], &[]), Level::new(2, 1)),
        Err(BimodError::X(xcat::XError::LabelNotInBimodule(..)))
    ));
    assert!(verify_identity_tensor(1, 0) && verify_identity_tensor(2, 1));
    assert!(verify_identity_proj(1, 1) && verify_identity_proj(3, 2));
}

#[test]
fn q_closed_form_for_m_equal_n_is_self_dual() {
    for m in 1..=8 {
        let q = q_closed_form(m, m);
        let swapped: PairGroth = q.iter().map(|(p, c)| (Pair::new(p.x.gswap(), p.z.gswap()), c)).collect();
        assert_eq!(q, swapped, "({m},{m})");
    }
}
