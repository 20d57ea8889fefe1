//! The mixed chain 3^{⊗m} ⊗ 3̄^{⊗n}: walled Brauer generators, the quantum group action,
//! and exact checks of their relations and mutual commutation.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};
use std::time::Instant;

use num::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::qarith::{ArithError, EvalPoint, QScalar};
use crate::sparse::{Scalar, SparseMatrix};
use crate::uqmod::{fundamental_f, fundamental_v, ExplicitRep, Gen};

pub type QMatrix = SparseMatrix<QScalar>;

#[derive(Debug, Error, PartialEq)]
pub enum ChainError {
    #[error("operator index {0} out of range for chain ({1},{2})")]
    IndexOutOfRange(usize, usize, usize),
    #[error("singular parameters: {0}")]
    SingularParams(&'static str),
    #[error("empty chain")]
    EmptyChain,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Parameters (γ, δ, θ) of the walled Brauer relations.
#[derive(Clone, Debug, Serialize)]
pub struct QwbParams {
    pub gamma: QScalar,
    pub delta: QScalar,
    pub theta: QScalar,
}

impl QwbParams {
    /// (γ, δ, θ) = (-1, q^-2, -q^-2), the values realized on the chain.
    pub fn chain() -> Self {
        QwbParams { gamma: QScalar::from_int(-1), delta: QScalar::q_pow(-2), theta: -QScalar::q_pow(-2) }
    }
}

fn q(e: i32) -> QScalar {
    QScalar::q_pow(e)
}

fn neg_q(e: i32) -> QScalar {
    -QScalar::q_pow(e)
}

/// The 9×9 matrices g on 3⊗3, ℰ on 3⊗3̄ and h on 3̄⊗3̄.
/// Basis x_i⊗y_j has index 3(i-1)+(j-1); column c holds the image of basis vector c.
pub fn fundamental_ops() -> (QMatrix, QMatrix, QMatrix) {
    let idx = |i: usize, j: usize| 3 * (i - 1) + (j - 1);
    let qm2_minus_1 = q(-2) - QScalar::from_int(1);
    let minus_one = QScalar::from_int(-1);
    let mut g = Vec::new();
    let mut h = Vec::new();
    let put = |v: &mut Vec<(usize, usize, QScalar)>, src: (usize, usize), img: Vec<((usize, usize), QScalar)>| {
        for (dst, c) in img {
            v.push((idx(dst.0, dst.1), idx(src.0, src.1), c));
        }
    };
    put(&mut g, (1, 1), vec![((1, 1), q(-2))]);
    put(&mut g, (1, 2), vec![((2, 1), neg_q(-1))]);
    put(&mut g, (1, 3), vec![((3, 1), neg_q(-1))]);
    put(&mut g, (2, 1), vec![((2, 1), qm2_minus_1.clone()), ((1, 2), neg_q(-1))]);
    put(&mut g, (2, 2), vec![((2, 2), minus_one.clone())]);
    put(&mut g, (2, 3), vec![((3, 2), neg_q(-1))]);
    put(&mut g, (3, 1), vec![((3, 1), qm2_minus_1.clone()), ((1, 3), neg_q(-1))]);
    put(&mut g, (3, 2), vec![((3, 2), qm2_minus_1.clone()), ((2, 3), neg_q(-1))]);
    put(&mut g, (3, 3), vec![((3, 3), minus_one.clone())]);

    put(&mut h, (1, 1), vec![((1, 1), q(-2))]);
    put(&mut h, (1, 2), vec![((1, 2), qm2_minus_1.clone()), ((2, 1), neg_q(-1))]);
    put(&mut h, (1, 3), vec![((1, 3), qm2_minus_1.clone()), ((3, 1), neg_q(-1))]);
    put(&mut h, (2, 1), vec![((1, 2), neg_q(-1))]);
    put(&mut h, (2, 2), vec![((2, 2), minus_one.clone())]);
    put(&mut h, (2, 3), vec![((2, 3), qm2_minus_1), ((3, 2), neg_q(-1))]);
    put(&mut h, (3, 1), vec![((1, 3), neg_q(-1))]);
    put(&mut h, (3, 2), vec![((2, 3), neg_q(-1))]);
    put(&mut h, (3, 3), vec![((3, 3), minus_one)]);

    // ℰ(f_i⊗v_j) = δ_ij d_i (q² f1v1 + q f2v2 - f3v3)
    let d = [QScalar::from_int(1), neg_q(1), QScalar::from_int(1)];
    let w = [(idx(1, 1), q(2)), (idx(2, 2), q(1)), (idx(3, 3), QScalar::from_int(-1))];
    let mut e = Vec::new();
    for (i, di) in d.iter().enumerate() {
        for (row, c) in &w {
            e.push((*row, idx(i + 1, i + 1), di * c));
        }
    }
    (
        QMatrix::from_triplets(9, 9, g),
        QMatrix::from_triplets(9, 9, e),
        QMatrix::from_triplets(9, 9, h),
    )
}

/// A walled Brauer generator on the chain.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum ChainOp {
    /// g_j on the 3-slots m-j and m-j+1 (1-based from the left)
    G(usize),
    /// h_i on the 3̄-slots m+i and m+i+1
    H(usize),
    /// ℰ on slots m and m+1
    E,
}

impl std::fmt::Display for ChainOp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ChainOp::G(j) => write!(f, "g{j}"),
            ChainOp::H(i) => write!(f, "h{i}"),
            ChainOp::E => write!(f, "E"),
        }
    }
}

fn id_pow(k: usize) -> QMatrix {
    QMatrix::identity(3usize.pow(k as u32))
}

/// Chain 𝒯_{m,n} with lazily built, cached operator matrices.
pub struct ChainContext {
    pub m: usize,
    pub n: usize,
    ops: Mutex<HashMap<ChainOp, QMatrix>>,
    action: OnceLock<ExplicitRep>,
}

impl ChainContext {
    pub fn new(m: usize, n: usize) -> Self {
        ChainContext { m, n, ops: Mutex::new(HashMap::new()), action: OnceLock::new() }
    }

    pub fn dim(&self) -> usize {
        3usize.pow((self.m + self.n) as u32)
    }

    /// All generators present on this chain: g_1..g_{m-1}, h_1..h_{n-1}, and ℰ when m,n >= 1.
    pub fn generators(&self) -> Vec<ChainOp> {
        let mut v: Vec<ChainOp> = (1..self.m).map(ChainOp::G).collect();
        v.extend((1..self.n).map(ChainOp::H));
        if self.m >= 1 && self.n >= 1 {
            v.push(ChainOp::E);
        }
        v
    }

    /// Kronecker embedding of a generator at its slot.
    pub fn chain_operator(&self, op: ChainOp) -> Result<QMatrix, ChainError> {
        let (m, n) = (self.m, self.n);
        let (left, local, right) = match op {
            ChainOp::G(j) if j >= 1 && j < m => (m - j - 1, 0, n + j - 1),
            ChainOp::H(i) if i >= 1 && i < n => (m + i - 1, 2, n - i - 1),
            ChainOp::E if m >= 1 && n >= 1 => (m - 1, 1, n - 1),
            ChainOp::G(k) | ChainOp::H(k) => return Err(ChainError::IndexOutOfRange(k, m, n)),
            ChainOp::E => return Err(ChainError::IndexOutOfRange(0, m, n)),
        };
        if let Some(mat) = self.ops.lock().expect("op cache").get(&op) {
            return Ok(mat.clone());
        }
        let (g, e, h) = fundamental_ops();
        let core = vec![g, e, h].swap_remove(local);
        let mat = id_pow(left).kron(&core).kron(&id_pow(right));
        self.ops.lock().expect("op cache").insert(op, mat.clone());
        Ok(mat)
    }

    /// The chain as an explicit U_q(sl(2|1))-module via the iterated coproduct.
    pub fn module(&self) -> Result<&ExplicitRep, ChainError> {
        if self.m + self.n == 0 {
            return Err(ChainError::EmptyChain);
        }
        Ok(self.action.get_or_init(|| {
            let (f, v) = (fundamental_f(), fundamental_v());
            let mut factors = std::iter::repeat(&f).take(self.m).chain(std::iter::repeat(&v).take(self.n));
            let first = factors.next().expect("nonempty").clone();
            factors.fold(first, |acc, x| acc.tensor(x))
        }))
    }

    pub fn quantum_group_action(&self, gen: Gen) -> Result<QMatrix, ChainError> {
        Ok(self.module()?.gen(gen).clone())
    }
}

/// One relation or commutator evaluated as a matrix residual.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub m: usize,
    pub n: usize,
    pub backend: String,
    pub holds: bool,
    pub millis: f64,
}

/// Generator matrices over some exact scalar type.
pub struct OpSet<T: Scalar> {
    pub g: Vec<SparseMatrix<T>>,
    pub h: Vec<SparseMatrix<T>>,
    pub e: Option<SparseMatrix<T>>,
}

type Residual<'a, T> = Box<dyn Fn() -> SparseMatrix<T> + Send + Sync + 'a>;

/// Every walled Brauer relation instance on `ops`, as named residual closures.
fn qwb_residuals<'a, T: Scalar>(
    ops: &'a OpSet<T>,
    gamma: &'a T,
    delta: &'a T,
    theta: &'a T,
) -> Result<Vec<(String, Residual<'a, T>)>, ChainError> {
    let sum = gamma.add_ref(delta);
    let inv_sum = sum.checked_inv().ok_or(ChainError::SingularParams("γ+δ = 0"))?;
    let gd = gamma.mul_ref(delta);
    let inv_minus_gd = gd.neg_ref().checked_inv().ok_or(ChainError::SingularParams("γδ = 0"))?;
    let e_coef = theta.add_ref(&T::one()).mul_ref(&inv_sum);
    let mut out: Vec<(String, Residual<'a, T>)> = Vec::new();
    let quad = |x: &'a SparseMatrix<T>| -> Residual<'a, T> {
        Box::new(move || x.add_scalar(&gamma.neg_ref()).mul(&x.add_scalar(&delta.neg_ref())))
    };
    let comm = |x: &'a SparseMatrix<T>, y: &'a SparseMatrix<T>| -> Residual<'a, T> { Box::new(move || x.commutator(y)) };
    let braid = |x: &'a SparseMatrix<T>, y: &'a SparseMatrix<T>| -> Residual<'a, T> {
        Box::new(move || x.mul(y).mul(x).sub(&y.mul(x).mul(y)))
    };
    for (name, list) in [("g", &ops.g), ("h", &ops.h)] {
        for (i, x) in list.iter().enumerate() {
            out.push((format!("({name}{0}-γ)({name}{0}-δ) = 0", i + 1), quad(x)));
            if let Some(y) = list.get(i + 1) {
                out.push((format!("{name}{0}{name}{1}{name}{0} = {name}{1}{name}{0}{name}{1}", i + 1, i + 2), braid(x, y)));
            }
            for (j, y) in list.iter().enumerate().skip(i + 2) {
                out.push((format!("{name}{}{name}{} = {name}{}{name}{}", i + 1, j + 1, j + 1, i + 1), comm(x, y)));
            }
        }
    }
    for (i, x) in ops.g.iter().enumerate() {
        for (j, y) in ops.h.iter().enumerate() {
            out.push((format!("g{}h{} = h{}g{}", i + 1, j + 1, j + 1, i + 1), comm(x, y)));
        }
    }
    if let Some(e) = &ops.e {
        out.push(("EE = (θ+1)/(γ+δ) E".into(), Box::new(move || e.mul(e).sub(&e.scale(&e_coef)))));
        if let Some(g1) = ops.g.first() {
            out.push(("E g1 E = E".into(), Box::new(move || e.mul(g1).mul(e).sub(e))));
        }
        if let Some(h1) = ops.h.first() {
            out.push(("E h1 E = E".into(), Box::new(move || e.mul(h1).mul(e).sub(e))));
        }
        for (i, x) in ops.g.iter().enumerate().skip(1) {
            out.push((format!("E g{0} = g{0} E", i + 1), comm(e, x)));
        }
        for (i, x) in ops.h.iter().enumerate().skip(1) {
            out.push((format!("E h{0} = h{0} E", i + 1), comm(e, x)));
        }
        if let (Some(g1), Some(h1)) = (ops.g.first(), ops.h.first()) {
            // h1^-1 = (h1 - (γ+δ)) / (-γδ)
            let h1_inv = h1.add_scalar(&sum.neg_ref()).scale(&inv_minus_gd);
            let eghe = e.mul(g1).mul(&h1_inv).mul(e);
            let diff = g1.sub(h1);
            let (a, b) = (eghe.clone(), diff.clone());
            out.push(("E g1 h1^-1 E (g1 - h1) = 0".into(), Box::new(move || a.mul(&b))));
            out.push(("(g1 - h1) E g1 h1^-1 E = 0".into(), Box::new(move || diff.mul(&eghe))));
        }
    }
    Ok(out)
}

fn run_residuals<T: Scalar>(items: Vec<(String, Residual<'_, T>)>) -> Vec<(String, bool, f64)> {
    items
        .into_par_iter()
        .map(|(name, f)| {
            let t = Instant::now();
            let holds = f().is_zero();
            (name, holds, t.elapsed().as_secs_f64() * 1e3)
        })
        .collect()
}

/// Commutators of every chain generator with every quantum-group generator.
fn centralizer_residuals<'a, T: Scalar>(
    chain: &'a [(ChainOp, SparseMatrix<T>)],
    qg: &'a [(Gen, SparseMatrix<T>)],
) -> Vec<(String, Residual<'a, T>)> {
    let mut out: Vec<(String, Residual<'a, T>)> = Vec::new();
    for (op, x) in chain {
        for (gen, y) in qg {
            out.push((format!("[{op}, Δ({})] = 0", gen.name()), Box::new(move || x.commutator(y))));
        }
    }
    out
}

/// How matrix residuals are evaluated: exactly over Q(q), or at rational points of q.
pub trait Backend: Send + Sync {
    fn name(&self) -> &'static str;
    fn check_qwb_relations(&self, ctx: &ChainContext, params: &QwbParams) -> Result<Vec<RelationCheck>, ChainError>;
    fn check_centralizer(&self, ctx: &ChainContext) -> Result<Vec<RelationCheck>, ChainError>;
}

fn op_set(ctx: &ChainContext) -> Result<OpSet<QScalar>, ChainError> {
    Ok(OpSet {
        g: (1..ctx.m).map(|j| ctx.chain_operator(ChainOp::G(j))).collect::<Result<_, _>>()?,
        h: (1..ctx.n).map(|i| ctx.chain_operator(ChainOp::H(i))).collect::<Result<_, _>>()?,
        e: if ctx.m >= 1 && ctx.n >= 1 { Some(ctx.chain_operator(ChainOp::E)?) } else { None },
    })
}

fn qg_matrices(ctx: &ChainContext) -> Result<Vec<(Gen, QMatrix)>, ChainError> {
    Gen::SIX.iter().map(|g| Ok((*g, ctx.quantum_group_action(*g)?))).collect()
}

fn chain_matrices(ctx: &ChainContext) -> Result<Vec<(ChainOp, QMatrix)>, ChainError> {
    ctx.generators().into_iter().map(|op| Ok((op, ctx.chain_operator(op)?))).collect()
}

fn to_checks(ctx: &ChainContext, backend: &str, raw: Vec<(String, bool, f64)>) -> Vec<RelationCheck> {
    raw.into_iter()
        .map(|(relation, holds, millis)| RelationCheck { relation, m: ctx.m, n: ctx.n, backend: backend.into(), holds, millis })
        .collect()
}

/// Exact computation over Q(q).
pub struct SymbolicBackend;

impl Backend for SymbolicBackend {
    fn name(&self) -> &'static str {
        "symbolic"
    }

    fn check_qwb_relations(&self, ctx: &ChainContext, params: &QwbParams) -> Result<Vec<RelationCheck>, ChainError> {
        let ops = op_set(ctx)?;
        let items = qwb_residuals(&ops, &params.gamma, &params.delta, &params.theta)?;
        Ok(to_checks(ctx, self.name(), run_residuals(items)))
    }

    fn check_centralizer(&self, ctx: &ChainContext) -> Result<Vec<RelationCheck>, ChainError> {
        let (chain, qg) = (chain_matrices(ctx)?, qg_matrices(ctx)?);
        Ok(to_checks(ctx, self.name(), run_residuals(centralizer_residuals(&chain, &qg))))
    }
}

/// Exact rational arithmetic after substituting q at each point; a relation holds if it holds at all points.
pub struct EvalBackend {
    pub points: Vec<EvalPoint>,
}

impl EvalBackend {
    pub fn seeded(seed: u64, count: usize) -> Self {
        EvalBackend { points: EvalPoint::seeded(seed, count) }
    }

    fn at(m: &QMatrix, p: &EvalPoint) -> Result<SparseMatrix<BigRational>, ChainError> {
        Ok(m.map(|x| x.eval_at(p))?)
    }

    fn merge(&self, ctx: &ChainContext, per_point: Vec<Vec<(String, bool, f64)>>) -> Vec<RelationCheck> {
        let mut merged: Vec<(String, bool, f64)> = Vec::new();
        for run in per_point {
            if merged.is_empty() {
                merged = run;
            } else {
                for (acc, (_, holds, ms)) in merged.iter_mut().zip(run) {
                    acc.1 &= holds;
                    acc.2 += ms;
                }
            }
        }
        to_checks(ctx, self.name(), merged)
    }
}

impl Backend for EvalBackend {
    fn name(&self) -> &'static str {
        "eval"
    }

    fn check_qwb_relations(&self, ctx: &ChainContext, params: &QwbParams) -> Result<Vec<RelationCheck>, ChainError> {
        let ops = op_set(ctx)?;
        let mut runs = Vec::new();
        for p in &self.points {
            let conv = |v: &[QMatrix]| v.iter().map(|x| Self::at(x, p)).collect::<Result<Vec<_>, _>>();
            let ev = OpSet { g: conv(&ops.g)?, h: conv(&ops.h)?, e: ops.e.as_ref().map(|e| Self::at(e, p)).transpose()? };
            let (ga, de, th) = (params.gamma.eval_at(p)?, params.delta.eval_at(p)?, params.theta.eval_at(p)?);
            runs.push(run_residuals(qwb_residuals(&ev, &ga, &de, &th)?));
        }
        Ok(self.merge(ctx, runs))
    }

    fn check_centralizer(&self, ctx: &ChainContext) -> Result<Vec<RelationCheck>, ChainError> {
        let (chain, qg) = (chain_matrices(ctx)?, qg_matrices(ctx)?);
        let mut runs = Vec::new();
        for p in &self.points {
            let chain_p = chain.iter().map(|(o, x)| Ok((*o, Self::at(x, p)?))).collect::<Result<Vec<_>, ChainError>>()?;
            let qg_p = qg.iter().map(|(g, x)| Ok((*g, Self::at(x, p)?))).collect::<Result<Vec<_>, ChainError>>()?;
            runs.push(run_residuals(centralizer_residuals(&chain_p, &qg_p)));
        }
        Ok(self.merge(ctx, runs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_entries() {
        let (g, e, h) = fundamental_ops();
        assert_eq!(g.get(0, 0), QScalar::q_pow(-2));
        assert_eq!(h.get(8, 8), QScalar::from_int(-1));
        // ℰ(f2⊗v2) = -q(q² f1v1 + q f2v2 - f3v3)
        assert_eq!(e.get(0, 4), -QScalar::q_pow(3));
        assert_eq!(e.get(4, 4), -QScalar::q_pow(2));
        assert_eq!(e.get(8, 4), QScalar::q_pow(1));
    }

    #[test]
    fn placements() {
        let (g, e, h) = fundamental_ops();
        let id3 = QMatrix::identity(3);
        assert_eq!(ChainContext::new(2, 1).chain_operator(ChainOp::G(1)).unwrap(), g.kron(&id3));
        assert_eq!(ChainContext::new(1, 2).chain_operator(ChainOp::H(1)).unwrap(), id3.kron(&h));
        assert_eq!(ChainContext::new(1, 1).chain_operator(ChainOp::E).unwrap(), e);
        assert_eq!(ChainContext::new(2, 1).chain_operator(ChainOp::G(2)), Err(ChainError::IndexOutOfRange(2, 2, 1)));
        assert_eq!(ChainContext::new(0, 2).chain_operator(ChainOp::E), Err(ChainError::IndexOutOfRange(0, 0, 2)));
    }

    #[test]
    fn singular_params_rejected() {
        let ctx = ChainContext::new(1, 1);
        let p = QwbParams { gamma: QScalar::from_int(1), delta: QScalar::from_int(-1), theta: QScalar::from_int(0) };
        assert!(matches!(SymbolicBackend.check_qwb_relations(&ctx, &p), Err(ChainError::SingularParams(_))));
    }
}
