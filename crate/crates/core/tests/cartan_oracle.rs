//! The Cartan matrix of the centralizer read off from the quantum-group side:
//! [K_i : D_j] = dim Hom_U(Z_i, Z_j) for indecomposable summands Z_i, Z_j of the chain.

use std::collections::HashMap;

use num::{BigRational, One, Zero};
use rayon::prelude::*;
use sl21_core::bimod::dim_ledger;
use sl21_core::partitions::Bipartition;
use sl21_core::qarith::EvalPoint;
use sl21_core::uqmod::{build_indecomp, ExplicitRep, Gen};
use sl21_core::xcat::{q_functor, Level, XMod};

fn dense(rep: &ExplicitRep, g: Gen, p: &EvalPoint) -> Vec<Vec<BigRational>> {
    let d = rep.dim();
    let mut out = vec![vec![BigRational::zero(); d]; d];
    for (i, j, x) in rep.gen(g).triplets() {
        out[i][j] = x.eval_at(p).unwrap();
    }
    out
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, piv);
        let inv = BigRational::one() / rows[r][c].clone();
        let pivot: Vec<BigRational> = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in c..ncols {
                    let t = &f * &pivot[k];
                    rows[i][k] -= t;
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

fn weights(rep: &ExplicitRep, p: &EvalPoint) -> Vec<(BigRational, BigRational)> {
    assert!(rep.gen(Gen::K).is_diagonal() && rep.gen(Gen::SmallK).is_diagonal());
    let ev = |g: Gen| -> Vec<BigRational> { rep.gen(g).diag().iter().map(|x| x.eval_at(p).unwrap()).collect() };
    ev(Gen::K).into_iter().zip(ev(Gen::SmallK)).collect()
}

/// dim Hom_U(X, Y): weight-preserving matrices M with M x_g = y_g M for the raising and lowering
/// generators; K and k act diagonally so weight preservation covers them.
fn hom_dim(x: &ExplicitRep, y: &ExplicitRep, p: &EvalPoint) -> usize {
    let (wx, wy) = (weights(x, p), weights(y, p));
    let mut unknown: HashMap<(usize, usize), usize> = HashMap::new();
    for (i, a) in wy.iter().enumerate() {
        for (j, b) in wx.iter().enumerate() {
            if a == b {
                let k = unknown.len();
                unknown.insert((i, j), k);
            }
        }
    }
    if unknown.is_empty() {
        return 0;
    }
    let mut rows = vec![];
    for g in [Gen::E, Gen::F, Gen::B, Gen::C] {
        let (xg, yg) = (dense(x, g, p), dense(y, g, p));
        for i in 0..y.dim() {
            for j in 0..x.dim() {
                let mut row = vec![BigRational::zero(); unknown.len()];
                for k in 0..x.dim() {
                    if let Some(&u) = unknown.get(&(i, k)) {
                        row[u] += &xg[k][j];
                    }
                }
                for k in 0..y.dim() {
                    if let Some(&u) = unknown.get(&(k, j)) {
                        row[u] -= &yg[i][k];
                    }
                }
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    unknown.len() - rank(rows)
}

/// [K(λ) : D(μ)] from the projective structure against dim Hom_U(Z_λ, Z_μ), where Z_λ is
/// the chain summand paired with λ.
fn check_level(m: usize, n: usize, p: &EvalPoint) {
    let lv = Level::new(m, n);
    let ledger = dim_ledger(m, n).unwrap();
    let entries: Vec<(&Bipartition, ExplicitRep)> =
        ledger.dims.iter().map(|(l, (z, _))| (l, build_indecomp(&z.to_indecomp()).unwrap())).collect();
    let pairs: Vec<(usize, usize)> = (0..entries.len()).flat_map(|i| (0..entries.len()).map(move |j| (i, j))).collect();
    pairs.par_iter().for_each(|&(i, j)| {
        let ((l, zl), (mu, zm)) = (&entries[i], &entries[j]);
        let k = q_functor(&XMod::K((*l).clone()), lv).unwrap();
        assert_eq!(k.get(mu) as usize, hom_dim(zl, zm, p), "({m},{n}) [K{l} : D{mu}]");
    });
}

#[test]
fn cartan_matrix_matches_hom_spaces() {
    let p = EvalPoint::ratio(3, 7).unwrap();
    for t in 1..=7usize {
        for m in 0..=t {
            check_level(m, t - m, &p);
        }
    }
}
