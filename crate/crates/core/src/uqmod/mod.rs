//! Modules over U_q(sl(2|1)): labels, dimensions, gl(2) content and explicit matrices.

mod build;
pub mod hopf;
mod relations;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use build::{
    build_indecomp, build_projective, build_simple, fundamental_f, fundamental_v, weight_multiset, BasisTag, Block, ExplicitRep,
    Gen, Layer, Weight,
};
pub use relations::{check_relations, RelationResult};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModError {
    #[error("unsupported label {0}")]
    UnsupportedLabel(String),
    #[error("cannot parse label '{0}'")]
    Parse(String),
}

/// Simple module Z^{α,β}_{s,r}.  Z^{α,β}_{0,0} is stored as Z^{α,-β}_{1,0}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ZLabel {
    pub alpha: i8,
    pub beta: i8,
    pub s: i32,
    pub r: i32,
}

impl ZLabel {
    pub fn new(alpha: i8, beta: i8, s: i32, r: i32) -> Self {
        debug_assert!(alpha.abs() == 1 && beta.abs() == 1);
        if s == 0 && r == 0 {
            return ZLabel { alpha, beta: -beta, s: 1, r: 0 };
        }
        ZLabel { alpha, beta, s, r }
    }

    pub fn is_valid(&self) -> bool {
        self.s >= 1 && self.alpha.abs() == 1 && self.beta.abs() == 1
    }

    pub fn is_atypical(&self) -> bool {
        self.r == 0 || self.r == self.s
    }

    pub fn dim(&self) -> usize {
        dim_z(self)
    }
}

/// Projective cover R^{α,β}_{s,r} of an atypical simple (r ∈ {0, s}).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RLabel {
    pub alpha: i8,
    pub beta: i8,
    pub s: i32,
    pub r: i32,
}

impl RLabel {
    pub fn new(alpha: i8, beta: i8, s: i32, r: i32) -> Self {
        RLabel { alpha, beta, s, r }
    }

    pub fn is_valid(&self) -> bool {
        self.s >= 1 && (self.r == 0 || self.r == self.s) && self.alpha.abs() == 1 && self.beta.abs() == 1
    }

    pub fn dim(&self) -> usize {
        dim_r(self)
    }

    /// Simple subquotients in the order top, left, right, bottom.
    pub fn subquotients(&self) -> [ZLabel; 4] {
        let (a, b, s) = (self.alpha, self.beta, self.s);
        if self.r == 0 {
            if s == 1 {
                [ZLabel::new(a, b, 1, 0), ZLabel::new(a, -b, 2, 0), ZLabel::new(a, b, 1, 1), ZLabel::new(a, b, 1, 0)]
            } else {
                [ZLabel::new(a, b, s, 0), ZLabel::new(a, -b, s + 1, 0), ZLabel::new(a, -b, s - 1, 0), ZLabel::new(a, b, s, 0)]
            }
        } else {
            [
                ZLabel::new(a, b, s, s),
                ZLabel::new(a, -b, s + 1, s + 1),
                ZLabel::new(a, -b, s - 1, s - 1),
                ZLabel::new(a, b, s, s),
            ]
        }
    }
}

/// Indecomposable module appearing in the chain: a simple or a projective cover.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum IndecompLabel {
    Z(ZLabel),
    R(RLabel),
}

impl IndecompLabel {
    pub fn z(alpha: i8, beta: i8, s: i32, r: i32) -> Self {
        IndecompLabel::Z(ZLabel::new(alpha, beta, s, r))
    }

    pub fn r(alpha: i8, beta: i8, s: i32, r: i32) -> Self {
        IndecompLabel::R(RLabel::new(alpha, beta, s, r))
    }

    pub fn dim(&self) -> usize {
        match self {
            IndecompLabel::Z(z) => z.dim(),
            IndecompLabel::R(r) => r.dim(),
        }
    }

    fn sort_key(&self) -> (u8, i32, i32, i8, i8) {
        match self {
            IndecompLabel::Z(z) => (0, z.s, z.r, z.alpha, z.beta),
            IndecompLabel::R(r) => (1, r.s, r.r, r.alpha, r.beta),
        }
    }

    /// Parses "Z[α,β;s,r]" or "R[α,β;s,r]".
    pub fn parse(text: &str) -> Result<Self, ModError> {
        let err = || ModError::Parse(text.to_string());
        let t = text.trim();
        let kind = t.chars().next().ok_or_else(err)?;
        let body = t[1..].trim().strip_prefix('[').and_then(|b| b.strip_suffix(']')).ok_or_else(err)?;
        let (signs, sr) = body.split_once(';').ok_or_else(err)?;
        let (a, b) = signs.split_once(',').ok_or_else(err)?;
        let (s, r) = sr.split_once(',').ok_or_else(err)?;
        let a: i8 = a.trim().parse().map_err(|_| err())?;
        let b: i8 = b.trim().parse().map_err(|_| err())?;
        let s: i32 = s.trim().parse().map_err(|_| err())?;
        let r: i32 = r.trim().parse().map_err(|_| err())?;
        if a.abs() != 1 || b.abs() != 1 {
            return Err(err());
        }
        let lab = match kind {
            'Z' => IndecompLabel::z(a, b, s, r),
            'R' => IndecompLabel::r(a, b, s, r),
            _ => return Err(err()),
        };
        let ok = match &lab {
            IndecompLabel::Z(z) => z.is_valid(),
            IndecompLabel::R(r) => r.is_valid(),
        };
        if ok {
            Ok(lab)
        } else {
            Err(ModError::UnsupportedLabel(text.to_string()))
        }
    }
}

impl PartialOrd for IndecompLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IndecompLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for ZLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[{},{};{},{}]", self.alpha, self.beta, self.s, self.r)
    }
}

impl fmt::Display for RLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R[{},{};{},{}]", self.alpha, self.beta, self.s, self.r)
    }
}

impl fmt::Display for IndecompLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndecompLabel::Z(z) => z.fmt(f),
            IndecompLabel::R(r) => r.fmt(f),
        }
    }
}

/// Simple gl(2) block X^{α,β}_{s,r}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GL2Label {
    pub alpha: i8,
    pub beta: i8,
    pub s: i32,
    pub r: i32,
}

impl fmt::Display for GL2Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X[{},{};{},{}]", self.alpha, self.beta, self.s, self.r)
    }
}

pub fn dim_z(z: &ZLabel) -> usize {
    let s = z.s as usize;
    if z.r == 0 {
        2 * s - 1
    } else if z.r == z.s {
        2 * s + 1
    } else {
        4 * s
    }
}

pub fn dim_r(r: &RLabel) -> usize {
    let s = r.s as usize;
    match (r.s, r.r) {
        (1, 0) => 8,
        (_, 0) => 8 * s - 4,
        _ => 8 * s + 4,
    }
}

/// gl(2) blocks of a simple module in basis order φ, ↑, ↓, β; empty blocks are omitted.
/// In the r = 0 family the second block carries k-sign -β (the sign forced by the
/// fermionic action; see the module builder tests).
pub fn gl2_decomposition_z(z: &ZLabel) -> Vec<GL2Label> {
    let (a, b, s, r) = (z.alpha, z.beta, z.s, z.r);
    let x = |beta: i8, s: i32, r: i32| GL2Label { alpha: a, beta, s, r };
    let blocks = if r == 0 {
        vec![x(b, s, 0), x(-b, s - 1, -1)]
    } else if r == s {
        vec![x(b, s, s), x(-b, s + 1, s)]
    } else {
        vec![x(b, s, r), x(-b, s + 1, r), x(-b, s - 1, r - 1), x(b, s, r - 1)]
    };
    blocks.into_iter().filter(|g| g.s >= 1).collect()
}

pub fn gl2_decomposition(label: &IndecompLabel) -> Vec<GL2Label> {
    match label {
        IndecompLabel::Z(z) => gl2_decomposition_z(z),
        IndecompLabel::R(r) => r.subquotients().iter().flat_map(gl2_decomposition_z).collect(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BarKind {
    Z,
    R,
}

/// Renamed families Z̄^p_{t,r} and R̄^p_{t,r}; the superscript is stored mod 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BarLabel {
    pub kind: BarKind,
    pub p: i32,
    pub t: i32,
    pub r: i32,
}

impl BarLabel {
    pub fn z(p: i32, t: i32, r: i32) -> Self {
        BarLabel { kind: BarKind::Z, p: p.rem_euclid(2), t, r }
    }

    pub fn r(p: i32, t: i32, r: i32) -> Self {
        BarLabel { kind: BarKind::R, p: p.rem_euclid(2), t, r }
    }

    fn sign(p: i32) -> i8 {
        if p.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// The Z- or R-label this name stands for.
    pub fn to_indecomp(&self) -> IndecompLabel {
        let (p, t, r) = (self.p, self.t, self.r);
        match self.kind {
            BarKind::Z if r != 0 => IndecompLabel::z(1, Self::sign(p), t + r, r),
            BarKind::Z => IndecompLabel::z(1, Self::sign(p + 1), t + 1, 0),
            BarKind::R if r != 0 => {
                assert_eq!(t, 0, "R̄ requires t = 0 or r = 0");
                IndecompLabel::r(1, Self::sign(p), r, r)
            }
            BarKind::R => IndecompLabel::r(1, Self::sign(p + 1), t + 1, 0),
        }
    }

    /// Inverse of `to_indecomp` for α = 1 labels.
    pub fn from_indecomp(label: &IndecompLabel) -> Option<Self> {
        let par = |beta: i8| if beta == 1 { 0 } else { 1 };
        match label {
            IndecompLabel::Z(z) if z.alpha == 1 => Some(if z.r != 0 {
                BarLabel::z(par(z.beta), z.s - z.r, z.r)
            } else {
                BarLabel::z(par(z.beta) + 1, z.s - 1, 0)
            }),
            IndecompLabel::R(r) if r.alpha == 1 => Some(if r.r != 0 {
                BarLabel::r(par(r.beta), 0, r.r)
            } else {
                BarLabel::r(par(r.beta) + 1, r.s - 1, 0)
            }),
            _ => None,
        }
    }

    pub fn dim(&self) -> usize {
        self.to_indecomp().dim()
    }

    pub fn is_atypical(&self) -> bool {
        match self.to_indecomp() {
            IndecompLabel::Z(z) => z.is_atypical(),
            IndecompLabel::R(_) => true,
        }
    }

    /// Ĝ on quantum-group labels: swaps t and r.
    pub fn gswap(&self) -> Self {
        BarLabel { kind: self.kind, p: self.p, t: self.r, r: self.t }
    }

    /// Loewy content of R̄: (top, middles, bottom) as Z̄ labels.
    pub fn loewy(&self) -> Option<(BarLabel, [BarLabel; 2], BarLabel)> {
        if self.kind != BarKind::R {
            return None;
        }
        let (p, t, r) = (self.p, self.t, self.r);
        let top = BarLabel::z(p, t, r);
        let mids = if t == 0 && r == 0 {
            [BarLabel::z(p + 1, 1, 0), BarLabel::z(p - 1, 0, 1)]
        } else if t == 0 {
            [BarLabel::z(p + 1, 0, r + 1), BarLabel::z(p - 1, 0, r - 1)]
        } else {
            [BarLabel::z(p + 1, t + 1, 0), BarLabel::z(p - 1, t - 1, 0)]
        };
        Some((top, mids, top))
    }
}

impl fmt::Display for BarLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            BarKind::Z => "Z̄",
            BarKind::R => "R̄",
        };
        write!(f, "{k}^{}_{{{},{}}}", self.p, self.t, self.r)
    }
}
