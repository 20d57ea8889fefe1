//! Coproduct, antipode and counit on generators, realized on explicit modules.

use super::build::{ExplicitRep, Gen, QMatrix};
use crate::qarith::QScalar;

/// Sweedler terms of Δ(x): pairs (x1, x2) with coefficient 1, given as generator words.
fn coproduct_terms(x: Gen) -> Vec<(Vec<Gen>, Vec<Gen>)> {
    match x {
        Gen::F => vec![(vec![Gen::F], vec![]), (vec![Gen::Kinv], vec![Gen::F])],
        Gen::E => vec![(vec![Gen::E], vec![Gen::K]), (vec![], vec![Gen::E])],
        Gen::B => vec![(vec![Gen::B], vec![]), (vec![Gen::SmallKinv], vec![Gen::B])],
        Gen::C => vec![(vec![Gen::C], vec![Gen::SmallK]), (vec![], vec![Gen::C])],
        g => vec![(vec![g], vec![g])],
    }
}

/// S(x) as a signed word: S(B) = -kB, S(F) = -KF, S(C) = -Ck⁻¹, S(E) = -EK⁻¹; group-likes invert.
pub fn antipode(x: Gen) -> (i64, Vec<Gen>) {
    match x {
        Gen::B => (-1, vec![Gen::SmallK, Gen::B]),
        Gen::F => (-1, vec![Gen::K, Gen::F]),
        Gen::C => (-1, vec![Gen::C, Gen::SmallKinv]),
        Gen::E => (-1, vec![Gen::E, Gen::Kinv]),
        Gen::K => (1, vec![Gen::Kinv]),
        Gen::Kinv => (1, vec![Gen::K]),
        Gen::SmallK => (1, vec![Gen::SmallKinv]),
        Gen::SmallKinv => (1, vec![Gen::SmallK]),
    }
}

/// ε(x): 1 on group-likes, 0 on E, F, B, C.
pub fn counit(x: Gen) -> i64 {
    match x {
        Gen::E | Gen::F | Gen::B | Gen::C => 0,
        _ => 1,
    }
}

fn word(rep: &ExplicitRep, w: &[Gen]) -> QMatrix {
    w.iter().fold(QMatrix::identity(rep.dim()), |acc, g| acc.mul(rep.gen(*g)))
}

/// S applied to a word reverses it.
fn antipode_word(rep: &ExplicitRep, w: &[Gen]) -> QMatrix {
    let mut acc = QMatrix::identity(rep.dim());
    let mut sign = 1;
    for g in w.iter().rev() {
        let (s, img) = antipode(*g);
        sign *= s;
        acc = acc.mul(&word(rep, &img));
    }
    acc.scale(&QScalar::from_int(sign))
}

/// Checks m(S⊗id)Δ(x) = ε(x) = m(id⊗S)Δ(x) on `rep` for every generator.
pub fn check_antipode_axioms(rep: &ExplicitRep) -> Vec<(Gen, bool)> {
    Gen::ALL
        .iter()
        .map(|&x| {
            let eps = QMatrix::identity(rep.dim()).scale(&QScalar::from_int(counit(x)));
            let mut left = QMatrix::zeros(rep.dim(), rep.dim());
            let mut right = QMatrix::zeros(rep.dim(), rep.dim());
            for (x1, x2) in coproduct_terms(x) {
                left = left.add(&antipode_word(rep, &x1).mul(&word(rep, &x2)));
                right = right.add(&word(rep, &x1).mul(&antipode_word(rep, &x2)));
            }
            (x, left.sub(&eps).is_zero() && right.sub(&eps).is_zero())
        })
        .collect()
}

/// Checks (ε⊗id)Δ(x) = x = (id⊗ε)Δ(x) on `rep`; ε of a word is the product of counits.
pub fn check_counit_axioms(rep: &ExplicitRep) -> Vec<(Gen, bool)> {
    let eps_word = |w: &[Gen]| w.iter().map(|g| counit(*g)).product::<i64>();
    Gen::ALL
        .iter()
        .map(|&x| {
            let mut left = QMatrix::zeros(rep.dim(), rep.dim());
            let mut right = QMatrix::zeros(rep.dim(), rep.dim());
            for (x1, x2) in coproduct_terms(x) {
                left = left.add(&word(rep, &x2).scale(&QScalar::from_int(eps_word(&x1))));
                right = right.add(&word(rep, &x1).scale(&QScalar::from_int(eps_word(&x2))));
            }
            let target = rep.gen(x);
            (x, left.sub(target).is_zero() && right.sub(target).is_zero())
        })
        .collect()
}

/// Coassociativity on a triple product: (A⊗B)⊗C and A⊗(B⊗C) give identical matrices.
pub fn check_coassociativity(a: &ExplicitRep, b: &ExplicitRep, c: &ExplicitRep) -> bool {
    let left = a.tensor(b).tensor(c);
    let right = a.tensor(&b.tensor(c));
    Gen::ALL.iter().all(|g| left.gen(*g) == right.gen(*g))
}
