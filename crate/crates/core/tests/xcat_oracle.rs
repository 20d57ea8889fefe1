//! Totality and symmetry of the structure and restriction tables on every cross label.

use proptest::prelude::*;
use sl21_core::partitions::{atypical_set, cross_set, AtypicalLabel, Bipartition};
use sl21_core::xcat::*;

fn levels(max: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max).flat_map(|t| (0..=t).map(move |m| (m, t - m)))
}

#[test]
fn every_cross_label_has_a_structure() {
    for (m, n) in levels(12) {
        let lv = Level::new(m, n);
        for l in cross_set(m, n) {
            let g = proj_structure(&l, lv).unwrap_or_else(|e| panic!("{lv} {l}: {e}"));
            for (v, _) in g.vertices() {
                assert!(v.in_lambda(m, n) && v.is_cross21(), "{lv} {l}: vertex {v}");
            }
            let atypical = atypical_label(&l, lv).is_some();
            assert!(atypical || g.shape == Shape::Simple, "{lv} {l}");
        }
    }
}

#[test]
fn every_cross_label_restricts() {
    for (m, n) in levels(12) {
        let lv = Level::new(m, n);
        for l in cross_set(m, n) {
            if n >= 1 {
                res_right_d(&l, lv).unwrap_or_else(|e| panic!("D{l} at {lv}: {e}"));
            }
            if m >= 1 {
                res_left(&XMod::D(l.clone()), lv).unwrap_or_else(|e| panic!("D{l} at {lv}: {e}"));
            }
        }
        for at in atypical_set(m, n) {
            let l = at.bipartition();
            if !l.is_cross21() {
                continue;
            }
            if n >= 1 {
                res_right_k(&l, lv).unwrap_or_else(|e| panic!("K({at}) at {lv}: {e}"));
            }
            if m >= 1 {
                res_left(&XMod::K(l.clone()), lv).unwrap_or_else(|e| panic!("K({at}) at {lv}: {e}"));
            }
        }
    }
}

#[test]
fn structure_commutes_with_swap() {
    for (m, n) in levels(12) {
        for l in cross_set(m, n) {
            let g = proj_structure(&l, Level::new(m, n)).unwrap().gswap();
            let h = proj_structure(&l.gswap(), Level::new(n, m)).unwrap();
            assert_eq!(g.shape, h.shape);
            assert_eq!(g.bottom, h.bottom);
            let (mut a, mut b) = (g.middles, h.middles);
            a.sort();
            b.sort();
            assert_eq!(a, b, "({m},{n}) {l}");
        }
    }
}

#[test]
fn loewy_graph_is_symmetric() {
    // μ is a middle vertex of K(λ) exactly when λ is a middle vertex of K(μ)
    for (m, n) in levels(12) {
        let lv = Level::new(m, n);
        for l in cross_set(m, n) {
            let g = proj_structure(&l, lv).unwrap();
            for mu in &g.middles {
                let h = proj_structure(mu, lv).unwrap();
                let back = h.middles.contains(&l) || (h.shape == Shape::Chain2 && h.bottom.as_ref() == Some(&l));
                assert!(back, "{lv}: {mu} in K({l}) but not conversely");
            }
            if g.shape == Shape::Chain2 {
                let mu = g.bottom.as_ref().unwrap();
                assert!(proj_structure(mu, lv).unwrap().middles.contains(&l), "{lv}: {l} -> {mu}");
            }
        }
    }
}

#[test]
fn invalid_inputs_are_rejected() {
    let lv = Level::new(3, 2);
    assert!(matches!(res_right_d(&Bipartition::from_parts(&[1], &[]), Level::new(1, 0)), Err(XError::NIsZero)));
    assert!(matches!(res_left(&XMod::D(Bipartition::empty()), Level::new(0, 0)), Err(XError::MIsZero)));
    assert!(matches!(proj_structure(&Bipartition::from_parts(&[2], &[]), lv), Err(XError::NotInLambda(..))));
    assert!(matches!(res_right_k(&Bipartition::from_parts(&[3], &[2]), lv), Err(XError::NotAtypical(..))));
    assert!(matches!(proj_structure(&Bipartition::from_parts(&[2, 2], &[2, 2]), Level::new(4, 4)), Err(XError::NotCross(..))));
}

proptest! {
    #[test]
    fn left_restriction_is_mirrored_right_restriction(m in 1usize..9, n in 0usize..9, pick in 0usize..10_000) {
        let set = cross_set(m, n);
        prop_assume!(!set.is_empty());
        let l = &set[pick % set.len()];
        let left = res_left(&XMod::D(l.clone()), Level::new(m, n)).unwrap();
        let right = res_right_d(&l.gswap(), Level::new(n, m)).unwrap();
        prop_assert_eq!(gswap_groth(&left), right);
    }

    #[test]
    fn q_of_projective_counts_vertices(m in 0usize..9, n in 0usize..9, pick in 0usize..10_000) {
        let set = cross_set(m, n);
        prop_assume!(!set.is_empty());
        let l = &set[pick % set.len()];
        let lv = Level::new(m, n);
        let g = proj_structure(l, lv).unwrap();
        let q = q_functor(&XMod::K(l.clone()), lv).unwrap();
        prop_assert_eq!(q.total() as usize, g.vertices().len());
        prop_assert!(q.get(l) >= 1);
    }
}

#[test]
fn named_restrictions() {
    let lv = Level::new(4, 3);
    let k = |l: AtypicalLabel| XMod::K(l.bipartition());
    let d = |l: Bipartition| XMod::D(l);
    let g = |items: Vec<(XMod, u64)>| -> XGroth { items.into_iter().collect() };
    assert_eq!(res_right(&k(AtypicalLabel::delta(0, 0)), Level::new(2, 2)).unwrap(), g(vec![(k(AtypicalLabel::delta(1, 0)), 1)]));
    let pp = res_right(&k(AtypicalLabel::delta_pp(0, 0)), Level::new(3, 3)).unwrap();
    let want = g(vec![
        (k(AtypicalLabel::delta(1, 1)), 1),
        (d(Bipartition::from_parts(&[2, 1], &[1, 1])), 1),
        (d(Bipartition::from_parts(&[1, 1, 1], &[1, 1])), 1),
    ]);
    assert_eq!(pp, want);
    // res K(Δ_{a,s}) for 2 ≤ s ≤ n-1 at a = 1, s = 2
    let r = res_right(&k(AtypicalLabel::delta(1, 2)), lv).unwrap();
    let want = g(vec![
        (k(AtypicalLabel::delta(2, 2)), 1),
        (d(Bipartition::from_parts(&[1, 1, 1, 1], &[2])), 1),
        (d(Bipartition::from_parts(&[1, 1, 1], &[1])), 2),
        (d(Bipartition::from_parts(&[1, 1], &[])), 1),
    ]);
    assert_eq!(r, want);
    let left = res_left(&XMod::D(AtypicalLabel::delta_bar(2, 0).bipartition()), Level::new(2, 4)).unwrap();
    assert_eq!(left, g(vec![(XMod::D(AtypicalLabel::delta_bar(3, 0).bipartition()), 1)]));
}

#[test]
fn q_of_named_projectives() {
    let lv = Level::new(4, 3);
    let q = q_functor(&XMod::K(AtypicalLabel::delta(1, 1).bipartition()), lv).unwrap();
    let want: sl21_core::fusion::Groth<Bipartition> = [
        (AtypicalLabel::delta(1, 1).bipartition(), 2),
        (AtypicalLabel::delta(1, 2).bipartition(), 1),
        (AtypicalLabel::delta(1, 0).bipartition(), 1),
        (AtypicalLabel::delta_pp(1, 1).bipartition(), 1),
    ]
    .into_iter()
    .collect();
    assert_eq!(q, want);
    let l = Bipartition::from_parts(&[3], &[2]);
    assert_eq!(q_functor(&XMod::D(l.clone()), lv).unwrap(), sl21_core::fusion::Groth::single(l));
    let k0 = q_functor(&XMod::K(AtypicalLabel::delta(2, 0).bipartition()), Level::new(4, 2)).unwrap();
    assert_eq!(k0.total(), 2);
    assert_eq!(k0.get(&AtypicalLabel::delta(2, 1).bipartition()), 1);
}
