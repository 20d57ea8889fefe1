use serde::Serialize;

use super::build::{ExplicitRep, Gen, QMatrix};
use crate::qarith::{qint, QScalar};

#[derive(Clone, Debug, Serialize)]
pub struct RelationResult {
    pub name: &'static str,
    pub holds: bool,
}

/// Evaluates every defining relation of U_q(sl(2|1)) on the given matrices.
pub fn check_relations(rep: &ExplicitRep) -> Vec<RelationResult> {
    let g = |x| rep.gen(x);
    let (e, f, k, ki, sk, ski, b, c) =
        (g(Gen::E), g(Gen::F), g(Gen::K), g(Gen::Kinv), g(Gen::SmallK), g(Gen::SmallKinv), g(Gen::B), g(Gen::C));
    let q = QScalar::q_pow(1);
    let qinv = QScalar::q_pow(-1);
    let inv_qq = (&q - &qinv).recip();
    let two = qint(2);
    let id = QMatrix::identity(rep.dim());
    // x*y - c*y*x
    let qcomm = |x: &QMatrix, y: &QMatrix, c: &QScalar| x.mul(y).sub(&y.mul(x).scale(c));
    let one = QScalar::from_int(1);
    let minus_one = QScalar::from_int(-1);
    let cubic = |x: &QMatrix, y: &QMatrix| x.mul(&x.mul(y)).sub(&x.mul(&y.mul(x)).scale(&two)).add(&y.mul(&x.mul(x)));
    let rels: Vec<(&'static str, QMatrix)> = vec![
        ("KK^-1 = 1", k.mul(ki).sub(&id)),
        ("kk^-1 = 1", sk.mul(ski).sub(&id)),
        ("KF = q^-2 FK", qcomm(k, f, &QScalar::q_pow(-2))),
        ("KE = q^2 EK", qcomm(k, e, &QScalar::q_pow(2))),
        ("EF - FE = (K - K^-1)/(q - q^-1)", qcomm(e, f, &one).sub(&k.sub(ki).scale(&inv_qq))),
        ("kF = q Fk", qcomm(sk, f, &q)),
        ("kE = q^-1 Ek", qcomm(sk, e, &qinv)),
        ("kK = Kk", qcomm(sk, k, &one)),
        ("kB = -Bk", qcomm(sk, b, &minus_one)),
        ("kC = -Ck", qcomm(sk, c, &minus_one)),
        ("KB = q BK", qcomm(k, b, &q)),
        ("KC = q^-1 CK", qcomm(k, c, &qinv)),
        ("B^2 = 0", b.mul(b)),
        ("C^2 = 0", c.mul(c)),
        ("BC - CB = (k - k^-1)/(q - q^-1)", qcomm(b, c, &one).sub(&sk.sub(ski).scale(&inv_qq))),
        ("FC = CF", qcomm(f, c, &one)),
        ("BE = EB", qcomm(b, e, &one)),
        ("FFB - [2]FBF + BFF = 0", cubic(f, b)),
        ("EEC - [2]ECE + CEE = 0", cubic(e, c)),
    ];
    rels.into_iter().map(|(name, m)| RelationResult { name, holds: m.is_zero() }).collect()
}
