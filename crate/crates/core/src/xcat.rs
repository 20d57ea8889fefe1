//! Modules over the centralizer X_{m,n} at the level of labels: Specht S(λ), simple D(λ) and
//! projective K(λ). Loewy structure of projectives, restriction functors and the functor ℚ.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fusion::Groth;
use crate::partitions::{classify_atypical, AtypicalLabel, Bipartition, Family, Partition};

#[derive(Debug, Error, PartialEq)]
pub enum XError {
    #[error("{0} is not in Λ_{{{1},{2}}}")]
    NotInLambda(String, usize, usize),
    #[error("{0} is not a (2,1)-cross bipartition")]
    NotCross(String),
    #[error("{0} is not atypical at ({1},{2})")]
    NotAtypical(String, usize, usize),
    #[error("right restriction needs n >= 1")]
    NIsZero,
    #[error("left restriction needs m >= 1")]
    MIsZero,
    #[error("no rule for {0}")]
    NoRule(String),
    #[error("rules {1:?} all match {0}")]
    AmbiguousRule(String, Vec<&'static str>),
    #[error("rule {0} produced {1}, which is not a cross label at ({2},{3})")]
    BadOutput(&'static str, String, usize, usize),
    #[error("{0} does not occur in the bimodule at ({1},{2})")]
    LabelNotInBimodule(String, usize, usize),
}

/// The pair (m, n) fixing the algebra X_{m,n}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Level {
    pub m: usize,
    pub n: usize,
}

impl Level {
    pub fn new(m: usize, n: usize) -> Self {
        Level { m, n }
    }

    pub fn gswap(self) -> Self {
        Level { m: self.n, n: self.m }
    }

    pub fn a(self) -> usize {
        self.m.abs_diff(self.n)
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// A simple D(λ) or projective K(λ) module.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum XMod {
    D(Bipartition),
    K(Bipartition),
}

impl XMod {
    pub fn label(&self) -> &Bipartition {
        match self {
            XMod::D(l) | XMod::K(l) => l,
        }
    }

    pub fn gswap(&self) -> XMod {
        match self {
            XMod::D(l) => XMod::D(l.gswap()),
            XMod::K(l) => XMod::K(l.gswap()),
        }
    }
}

impl fmt::Display for XMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            XMod::D(l) => write!(f, "D{l}"),
            XMod::K(l) => write!(f, "K{l}"),
        }
    }
}

pub type XGroth = Groth<XMod>;

pub fn gswap_groth(g: &XGroth) -> XGroth {
    g.iter().map(|(x, m)| (x.gswap(), m)).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Shape {
    Simple,
    Chain2,
    Chain3,
    Diamond,
    Fork,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Layer {
    Top,
    Middle,
    Bottom,
}

/// Loewy graph of K(λ): head, middle layer and socle. For the two-step shape the socle differs
/// from the head; for Chain3, Diamond and Fork it equals the head.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LoewyGraph {
    pub shape: Shape,
    pub top: Bipartition,
    pub middles: Vec<Bipartition>,
    pub bottom: Option<Bipartition>,
}

impl LoewyGraph {
    pub fn vertices(&self) -> Vec<(Bipartition, Layer)> {
        let mut v = vec![(self.top.clone(), Layer::Top)];
        v.extend(self.middles.iter().map(|l| (l.clone(), Layer::Middle)));
        v.extend(self.bottom.iter().map(|l| (l.clone(), Layer::Bottom)));
        v
    }

    /// Arrows between vertex indices of `vertices()`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let k = self.middles.len();
        match self.shape {
            Shape::Simple => vec![],
            Shape::Chain2 => vec![(0, 1)],
            _ => (1..=k).flat_map(|i| [(0, i), (i, k + 1)]).collect(),
        }
    }

    pub fn gswap(&self) -> LoewyGraph {
        LoewyGraph {
            shape: self.shape,
            top: self.top.gswap(),
            middles: self.middles.iter().map(Bipartition::gswap).collect(),
            bottom: self.bottom.as_ref().map(Bipartition::gswap),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "shape": self.shape,
            "vertices": self.vertices().iter().map(|(l, layer)| serde_json::json!({"label": l.to_string(), "layer": layer})).collect::<Vec<_>>(),
            "edges": self.edges(),
        })
    }
}

// ---------------------------------------------------------------------------------------------
// label helpers; parameters are signed so that guards can be written without underflow

#[derive(Clone, Copy, Debug)]
struct P {
    a: i64,
    s: i64,
    m: i64,
    n: i64,
}

fn u(x: i64) -> usize {
    usize::try_from(x).unwrap_or_else(|_| panic!("negative index {x} in rule output"))
}

/// (a, 1^s); (0) is ∅.
fn hk(a: i64, s: i64) -> Partition {
    assert!(a >= 1 || s == 0, "hook ({a},1^{s})");
    Partition::hook(u(a), u(s))
}

fn col(s: i64) -> Partition {
    Partition::column(u(s))
}

fn row(s: i64) -> Partition {
    Partition::row(u(s))
}

/// (x, y) with x >= y; (x, 0) is (x).
fn two(x: i64, y: i64) -> Partition {
    assert!(x >= y && y >= 0, "two-row ({x},{y})");
    Partition::new(vec![u(x), u(y)])
}

fn b(l: Partition, r: Partition) -> Bipartition {
    Bipartition::new(l, r)
}

fn lab(f: Family, a: i64, s: i64) -> Bipartition {
    AtypicalLabel::new(f, u(a), u(s)).bipartition()
}

fn da(a: i64, s: i64) -> Bipartition {
    lab(Family::Delta, a, s)
}

fn dp(a: i64, s: i64) -> Bipartition {
    lab(Family::DeltaP, a, s)
}

fn dpp(a: i64, s: i64) -> Bipartition {
    lab(Family::DeltaPP, a, s)
}

fn dba(a: i64, s: i64) -> Bipartition {
    lab(Family::DeltaBar, a, s)
}

fn dbp(a: i64, s: i64) -> Bipartition {
    lab(Family::DeltaBarP, a, s)
}

fn dbpp(a: i64, s: i64) -> Bipartition {
    lab(Family::DeltaBarPP, a, s)
}

fn d1(l: Bipartition) -> (XMod, u64) {
    (XMod::D(l), 1)
}

fn d2(l: Bipartition) -> (XMod, u64) {
    (XMod::D(l), 2)
}

fn k1(l: Bipartition) -> (XMod, u64) {
    (XMod::K(l), 1)
}

fn check_cross(l: &Bipartition, lv: Level) -> Result<usize, XError> {
    let f = l.level(lv.m, lv.n).ok_or_else(|| XError::NotInLambda(l.to_string(), lv.m, lv.n))?;
    if !l.is_cross21() {
        return Err(XError::NotCross(l.to_string()));
    }
    Ok(f)
}

/// The atypical family member equal to λ at this level, if λ is atypical.
pub fn atypical_label(l: &Bipartition, lv: Level) -> Option<AtypicalLabel> {
    classify_atypical(l, lv.m, lv.n).ok().flatten()
}

fn params(l: &AtypicalLabel, lv: Level) -> P {
    P { a: l.a as i64, s: l.s as i64, m: lv.m as i64, n: lv.n as i64 }
}

fn unique<'a, R>(what: &str, rules: Vec<&'a R>, name: fn(&R) -> &'static str) -> Result<&'a R, XError> {
    match rules.len() {
        0 => Err(XError::NoRule(what.to_string())),
        1 => Ok(rules[0]),
        _ => Err(XError::AmbiguousRule(what.to_string(), rules.iter().map(|r| name(r)).collect())),
    }
}

// ---------------------------------------------------------------------------------------------
// structure of projectives

enum Layout {
    Simple,
    Chain2(Bipartition),
    Chain3(Bipartition),
    Diamond(Bipartition, Bipartition),
    Fork(Bipartition, Bipartition, Bipartition),
}

pub struct StructRule {
    pub name: &'static str,
    pub family: Family,
    guard: fn(P) -> bool,
    build: fn(P) -> Layout,
}

/// Rules for m >= n and unbarred families; everything else follows by swapping halves.
pub fn structure_rules() -> &'static [StructRule] {
    use Family::*;
    static RULES: OnceLock<Vec<StructRule>> = OnceLock::new();
    RULES.get_or_init(|| {
        vec![
            StructRule { name: "Δ_{a,s} diamond", family: Delta, guard: |p| p.a >= 1 && 2 <= p.s && p.s <= p.n - 1,
                build: |p| Layout::Diamond(da(p.a, p.s - 1), da(p.a, p.s + 1)) },
            StructRule { name: "Δ_{a,1} fork", family: Delta, guard: |p| p.s == 1 && p.a >= 2 && p.n >= 2,
                build: |p| Layout::Fork(da(p.a, 2), da(p.a, 0), dp(p.a, 2)) },
            StructRule { name: "Δ_{1,1} fork", family: Delta, guard: |p| p.s == 1 && p.a == 1 && p.n >= 3,
                build: |_| Layout::Fork(da(1, 2), da(1, 0), dpp(1, 1)) },
            StructRule { name: "Δ_{a,n} chain", family: Delta, guard: |p| p.a >= 1 && p.n >= 1 && p.s == p.n,
                build: |p| Layout::Chain3(da(p.a, p.n - 1)) },
            StructRule { name: "Δ_{a,0} chain", family: Delta, guard: |p| p.a >= 1 && p.n >= 1 && p.s == 0,
                build: |p| Layout::Chain2(da(p.a, 1)) },
            StructRule { name: "Δ′_{a,s} diamond", family: DeltaP, guard: |p| 2 <= p.s && p.s <= p.a.min(p.n) - 1,
                build: |p| Layout::Diamond(dp(p.a, p.s - 1), dp(p.a, p.s + 1)) },
            StructRule { name: "Δ′_{a,a} diamond", family: DeltaP, guard: |p| p.s == p.a && 2 <= p.a && p.a <= p.n - 2,
                build: |p| Layout::Diamond(dp(p.a, p.a - 1), dpp(p.a, p.a)) },
            StructRule { name: "Δ′_{a,a} chain, a=n-1", family: DeltaP, guard: |p| p.s == p.a && p.a == p.n - 1 && p.n >= 3,
                build: |p| Layout::Chain3(dp(p.a, p.a - 1)) },
            StructRule { name: "Δ′_{a,n} chain", family: DeltaP, guard: |p| p.s == p.n && p.a >= p.n && p.n >= 2,
                build: |p| Layout::Chain3(dp(p.a, p.n - 1)) },
            StructRule { name: "Δ″_{a,s} diamond", family: DeltaPP, guard: |p| p.a >= 1 && p.a + 1 <= p.s && p.s <= p.n - 3,
                build: |p| Layout::Diamond(dpp(p.a, p.s - 1), dpp(p.a, p.s + 1)) },
            StructRule { name: "Δ″_{a,a} diamond", family: DeltaPP, guard: |p| p.s == p.a && 2 <= p.a && p.a <= p.n - 3,
                build: |p| Layout::Diamond(dp(p.a, p.a), dpp(p.a, p.a + 1)) },
            StructRule { name: "Δ″_{1,1} diamond", family: DeltaPP, guard: |p| p.a == 1 && p.s == 1 && p.n >= 4,
                build: |_| Layout::Diamond(da(1, 1), dpp(1, 2)) },
            StructRule { name: "Δ″_{a,n-2} chain", family: DeltaPP, guard: |p| p.s == p.n - 2 && 1 <= p.a && p.a <= p.n - 3,
                build: |p| Layout::Chain3(dpp(p.a, p.n - 3)) },
            StructRule { name: "Δ″_{n-2,n-2} chain", family: DeltaPP, guard: |p| p.a >= 1 && p.s == p.a && p.a == p.n - 2 && p.n >= 3,
                build: |p| Layout::Chain3(dp(p.n - 2, p.n - 2)) },
            // m = n
            StructRule { name: "Δ_{0,0} chain", family: Delta, guard: |p| p.a == 0 && p.n >= 2,
                build: |_| Layout::Chain2(dpp(0, 0)) },
            StructRule { name: "Δ″_{0,0} fork", family: DeltaPP, guard: |p| p.a == 0 && p.s == 0 && p.n >= 3,
                build: |_| Layout::Fork(dbpp(0, 1), da(0, 0), dpp(0, 1)) },
            StructRule { name: "Δ″_{0,s} diamond", family: DeltaPP, guard: |p| p.a == 0 && 1 <= p.s && p.s <= p.n - 3,
                build: |p| Layout::Diamond(dpp(0, p.s - 1), dpp(0, p.s + 1)) },
            StructRule { name: "Δ″_{0,n-2} chain", family: DeltaPP, guard: |p| p.a == 0 && p.s == p.n - 2 && p.n >= 3,
                build: |p| Layout::Chain3(dpp(0, p.n - 3)) },
            // small chains outside the ranges above
            StructRule { name: "Δ_{1,1} diamond, n=2", family: Delta, guard: |p| p.a == 1 && p.s == 1 && p.n == 2,
                build: |_| Layout::Diamond(da(1, 2), da(1, 0)) },
            StructRule { name: "Δ″_{0,0} chain, n=2", family: DeltaPP, guard: |p| p.a == 0 && p.s == 0 && p.n == 2,
                build: |_| Layout::Chain3(da(0, 0)) },
            StructRule { name: "Δ_{0,0} simple, n=1", family: Delta, guard: |p| p.a == 0 && p.s == 0 && p.n == 1,
                build: |_| Layout::Simple },
            StructRule { name: "Δ_{a,0} simple, n=0", family: Delta, guard: |p| p.n == 0,
                build: |_| Layout::Simple },
        ]
    })
}

/// Loewy graph of K(λ) for a cross bipartition λ.
pub fn proj_structure(l: &Bipartition, lv: Level) -> Result<LoewyGraph, XError> {
    check_cross(l, lv)?;
    let simple = LoewyGraph { shape: Shape::Simple, top: l.clone(), middles: vec![], bottom: None };
    let Some(at) = atypical_label(l, lv) else {
        return Ok(simple);
    };
    if lv.m < lv.n || at.family.is_barred() {
        return Ok(proj_structure(&l.gswap(), lv.gswap())?.gswap());
    }
    let p = params(&at, lv);
    let what = format!("K({at}) at {lv}");
    let rules: Vec<&StructRule> = structure_rules().iter().filter(|r| r.family == at.family && (r.guard)(p)).collect();
    let rule = unique(&what, rules, |r| r.name)?;
    let top = l.clone();
    let g = |shape, middles, bottom| LoewyGraph { shape, top: top.clone(), middles, bottom };
    Ok(match (rule.build)(p) {
        Layout::Simple => simple,
        Layout::Chain2(x) => g(Shape::Chain2, vec![], Some(x)),
        Layout::Chain3(x) => g(Shape::Chain3, vec![x], Some(top.clone())),
        Layout::Diamond(x, y) => g(Shape::Diamond, vec![x, y], Some(top.clone())),
        Layout::Fork(x, y, z) => g(Shape::Fork, vec![x, y, z], Some(top.clone())),
    })
}

// ---------------------------------------------------------------------------------------------
// restriction

type Terms = Vec<(XMod, u64)>;

pub struct ResRule {
    pub name: &'static str,
    pub family: Family,
    guard: fn(P) -> bool,
    rhs: fn(P) -> Terms,
}

/// Restriction of atypical projectives along X_{m,n-1} ⊂ X_{m,n}.
pub fn res_k_rules() -> &'static [ResRule] {
    use Family::*;
    static RULES: OnceLock<Vec<ResRule>> = OnceLock::new();
    RULES.get_or_init(|| {
        vec![
            ResRule { name: "K Δ_{a,s}", family: Delta, guard: |p| 2 <= p.s && p.s <= p.n - 1 && p.a >= 1,
                rhs: |p| vec![k1(da(p.a + 1, p.s)), d1(b(hk(p.a, p.s + 1), row(p.s))), d2(b(hk(p.a, p.s), row(p.s - 1))), d1(b(hk(p.a, p.s - 1), row(p.s - 2)))] },
            // the printed "⊕ +2D[(a,1),∅]" is read as multiplicity 2
            ResRule { name: "K Δ_{a,1}", family: Delta, guard: |p| p.s == 1 && p.a >= 2 && p.n >= 2,
                rhs: |p| vec![k1(da(p.a + 1, 1)), d1(b(hk(p.a, 2), row(1))), d2(b(hk(p.a, 1), row(0))), d1(b(two(p.a, 2), row(1)))] },
            ResRule { name: "K Δ_{1,1}", family: Delta, guard: |p| p.s == 1 && p.a == 1 && p.n >= 2,
                rhs: |_| vec![k1(da(2, 1)), d1(b(col(3), row(1))), d2(b(col(2), row(0)))] },
            ResRule { name: "K Δ_{a,n}", family: Delta, guard: |p| p.s == p.n && p.n >= 2 && p.a >= 1,
                rhs: |p| vec![d1(da(p.a + 1, p.n - 1)), d2(b(hk(p.a, p.n), row(p.n - 1))), d1(b(hk(p.a, p.n - 1), row(p.n - 2)))] },
            ResRule { name: "K Δ_{a,1}, n=1", family: Delta, guard: |p| p.s == 1 && p.n == 1 && p.a >= 1,
                rhs: |p| vec![d1(da(p.a + 1, 0)), d2(b(hk(p.a, 1), row(0)))] },
            ResRule { name: "K Δ_{a,0}", family: Delta, guard: |p| p.s == 0 && p.a >= 1 && p.n >= 1,
                rhs: |p| vec![k1(da(p.a + 1, 0)), d1(b(hk(p.a, 1), row(0)))] },
            ResRule { name: "K Δ_{0,0}", family: Delta, guard: |p| p.s == 0 && p.a == 0 && p.n >= 1,
                rhs: |_| vec![k1(da(1, 0))] },
            ResRule { name: "K Δ′_{a,s}", family: DeltaP, guard: |p| 2 <= p.s && p.s <= p.a.min(p.n) - 1,
                rhs: |p| vec![k1(dp(p.a + 1, p.s)), d1(b(two(p.a, p.s + 1), col(p.s))), d2(b(two(p.a, p.s), col(p.s - 1))), d1(b(two(p.a, p.s - 1), col(p.s - 2)))] },
            ResRule { name: "K Δ′_{a,a}", family: DeltaP, guard: |p| p.s == p.a && 2 <= p.a && p.a <= p.n - 1,
                rhs: |p| vec![k1(dp(p.a + 1, p.a)), d2(b(two(p.a, p.a), col(p.a - 1))), d1(b(two(p.a, p.a - 1), col(p.a - 2)))] },
            ResRule { name: "K Δ′_{a,n}", family: DeltaP, guard: |p| p.s == p.n && 2 <= p.n && p.n <= p.a,
                rhs: |p| vec![d1(dp(p.a + 1, p.n - 1)), d2(b(two(p.a, p.n), col(p.n - 1))), d1(b(two(p.a, p.n - 1), col(p.n - 2)))] },
            ResRule { name: "K Δ″_{a,s}", family: DeltaPP, guard: |p| p.a + 2 <= p.s && p.s <= p.n - 3,
                rhs: |p| vec![k1(dpp(p.a + 1, p.s)), d1(b(two(p.s + 2, p.a + 1), col(p.s + 2))), d2(b(two(p.s + 1, p.a + 1), col(p.s + 1))), d1(b(two(p.s, p.a + 1), col(p.s)))] },
            ResRule { name: "K Δ″_{a,a}", family: DeltaPP, guard: |p| p.s == p.a && 2 <= p.a && p.a <= p.n - 3,
                rhs: |p| vec![k1(dp(p.a + 1, p.a + 1)), d1(b(two(p.a + 2, p.a + 1), col(p.a + 2))), d1(b(two(p.a, p.a), col(p.a - 1)))] },
            ResRule { name: "K Δ″_{a,a+1}", family: DeltaPP, guard: |p| p.s == p.a + 1 && p.a <= p.n - 4,
                rhs: |p| vec![k1(dpp(p.a + 1, p.a + 1)), d1(b(two(p.a + 3, p.a + 1), col(p.a + 3))), d2(b(two(p.a + 2, p.a + 1), col(p.a + 2)))] },
            ResRule { name: "K Δ″_{a,n-2}", family: DeltaPP, guard: |p| p.s == p.n - 2 && p.a <= p.n - 4,
                rhs: |p| vec![d1(dpp(p.a + 1, p.n - 3)), d2(b(two(p.n - 1, p.a + 1), col(p.n - 1))), d1(b(two(p.n - 2, p.a + 1), col(p.n - 2)))] },
            ResRule { name: "K Δ″_{n-3,n-2}", family: DeltaPP, guard: |p| p.s == p.n - 2 && p.a == p.n - 3 && p.n >= 3,
                rhs: |p| vec![d1(dp(p.n - 2, p.n - 2)), d2(b(two(p.n - 1, p.n - 2), col(p.n - 1)))] },
            ResRule { name: "K Δ″_{n-2,n-2}", family: DeltaPP, guard: |p| p.s == p.n - 2 && p.a == p.n - 2 && p.n >= 3,
                rhs: |p| vec![k1(dp(p.n - 1, p.n - 1)), d1(b(two(p.n - 2, p.n - 2), col(p.n - 3)))] },
            ResRule { name: "K Δ″_{1,1}", family: DeltaPP, guard: |p| p.a == 1 && p.s == 1 && p.n >= 4,
                rhs: |_| vec![k1(dp(2, 2)), d1(b(two(3, 2), col(3))), d1(b(col(2), row(0)))] },
            ResRule { name: "K Δ″_{0,0}", family: DeltaPP, guard: |p| p.a == 0 && p.s == 0 && p.n >= 3,
                rhs: |_| vec![k1(da(1, 1)), d1(b(two(2, 1), col(2))), d1(b(col(3), col(2)))] },
            ResRule { name: "K Δ″_{0,0}, n=2", family: DeltaPP, guard: |p| p.a == 0 && p.s == 0 && p.n == 2,
                rhs: |_| vec![k1(da(1, 1))] },
            // m <= n
            ResRule { name: "K Δ̄_{a,s}", family: DeltaBar, guard: |p| 2 <= p.s && p.s <= p.m - 1 && p.a >= 2,
                rhs: |p| vec![k1(dba(p.a - 1, p.s)), d1(b(row(p.s + 1), hk(p.a, p.s))), d2(b(row(p.s), hk(p.a, p.s - 1))), d1(b(row(p.s - 1), hk(p.a, p.s - 2)))] },
            ResRule { name: "K Δ̄_{a,1}", family: DeltaBar, guard: |p| p.s == 1 && p.a >= 2 && p.m >= 2,
                rhs: |p| vec![k1(dba(p.a - 1, 1)), d1(b(row(2), hk(p.a, 1))), d2(b(row(1), hk(p.a, 0))), d1(b(col(2), hk(p.a, 1)))] },
            ResRule { name: "K Δ̄_{a,1}, m=1", family: DeltaBar, guard: |p| p.s == 1 && p.a >= 2 && p.m == 1,
                rhs: |p| vec![k1(dba(p.a - 1, 1)), d2(b(row(1), hk(p.a, 0)))] },
            ResRule { name: "K Δ̄_{a,m}", family: DeltaBar, guard: |p| p.s == p.m && p.m >= 2 && p.a >= 2,
                rhs: |p| vec![k1(dba(p.a - 1, p.m)), d2(b(row(p.m), hk(p.a, p.m - 1))), d1(b(row(p.m - 1), hk(p.a, p.m - 2)))] },
            ResRule { name: "K Δ̄_{1,s}", family: DeltaBar, guard: |p| p.a == 1 && 2 <= p.s && p.s < p.m,
                rhs: |p| vec![k1(dpp(0, p.s - 1)), d1(b(row(p.s + 1), col(p.s + 1))), d2(b(row(p.s), col(p.s))), d1(b(row(p.s - 1), col(p.s - 1)))] },
            ResRule { name: "K Δ̄_{1,m}", family: DeltaBar, guard: |p| p.a == 1 && p.s == p.m && p.m >= 2,
                rhs: |p| vec![d1(dpp(0, p.m - 2)), d2(b(row(p.m), col(p.m))), d1(b(row(p.m - 1), col(p.m - 1)))] },
            ResRule { name: "K Δ̄_{1,1}", family: DeltaBar, guard: |p| p.a == 1 && p.s == 1 && p.m >= 2,
                rhs: |_| vec![k1(dpp(0, 0)), d1(b(row(2), col(2))), d2(b(row(1), row(1)))] },
            ResRule { name: "K Δ̄_{1,1}, m=1", family: DeltaBar, guard: |p| p.a == 1 && p.s == 1 && p.m == 1,
                rhs: |_| vec![d1(da(0, 0)), d2(b(row(1), row(1)))] },
            ResRule { name: "K Δ̄_{a,0}", family: DeltaBar, guard: |p| p.s == 0 && p.a >= 1 && p.m >= 1,
                rhs: |p| vec![k1(dba(p.a - 1, 0)), d1(b(row(1), row(p.a)))] },
            ResRule { name: "K Δ̄′_{a,s}", family: DeltaBarP, guard: |p| 2 <= p.s && p.s <= p.a.min(p.m) - 1,
                rhs: |p| vec![k1(dbp(p.a - 1, p.s)), d1(b(col(p.s + 1), two(p.a, p.s))), d2(b(col(p.s), two(p.a, p.s - 1))), d1(b(col(p.s - 1), two(p.a, p.s - 2)))] },
            ResRule { name: "K Δ̄′_{a,a}", family: DeltaBarP, guard: |p| p.s == p.a && 2 <= p.a && p.a <= p.m - 1,
                rhs: |p| vec![k1(dbpp(p.a - 1, p.a - 1)), d2(b(col(p.a), two(p.a, p.a - 1))), d1(b(col(p.a - 1), two(p.a, p.a - 2)))] },
            ResRule { name: "K Δ̄′_{a,m}", family: DeltaBarP, guard: |p| p.s == p.m && 2 <= p.m && p.m < p.a,
                rhs: |p| vec![k1(dbp(p.a - 1, p.m)), d2(b(col(p.m), two(p.a, p.m - 1))), d1(b(col(p.m - 1), two(p.a, p.m - 2)))] },
            ResRule { name: "K Δ̄′_{m,m}", family: DeltaBarP, guard: |p| p.s == p.m && p.a == p.m && p.m >= 2,
                rhs: |p| vec![d1(dbp(p.m - 1, p.m - 1)), d2(b(col(p.m), two(p.m, p.m - 1))), d1(b(col(p.m - 1), two(p.m, p.m - 2)))] },
            ResRule { name: "K Δ̄″_{a,s}", family: DeltaBarPP, guard: |p| p.a + 2 <= p.s && p.s <= p.m - 3 && p.a >= 1,
                rhs: |p| vec![k1(dbpp(p.a - 1, p.s)), d1(b(col(p.s + 3), two(p.s + 1, p.a + 1))), d2(b(col(p.s + 2), two(p.s, p.a + 1))), d1(b(col(p.s + 1), two(p.s - 1, p.a + 1)))] },
            ResRule { name: "K Δ̄″_{0,s}", family: DeltaBarPP, guard: |p| p.a == 0 && 2 <= p.s && p.s <= p.m - 3,
                rhs: |p| vec![k1(da(1, p.s + 1)), d1(b(col(p.s + 3), two(p.s + 1, 1))), d2(b(col(p.s + 2), two(p.s, 1))), d1(b(col(p.s + 1), two(p.s - 1, 1)))] },
            ResRule { name: "K Δ̄″_{a,a}", family: DeltaBarPP, guard: |p| p.s == p.a && 1 <= p.a && p.a <= p.m - 3,
                rhs: |p| vec![k1(dbpp(p.a - 1, p.a)), d1(b(col(p.a + 3), two(p.a + 1, p.a + 1))), d1(b(col(p.a), two(p.a, p.a - 1)))] },
            ResRule { name: "K Δ̄″_{a,a+1}", family: DeltaBarPP, guard: |p| p.s == p.a + 1 && 1 <= p.a && p.a <= p.m - 4,
                rhs: |p| vec![k1(dbpp(p.a - 1, p.a + 1)), d1(b(col(p.a + 4), two(p.a + 2, p.a + 1))), d2(b(col(p.a + 3), two(p.a + 1, p.a + 1)))] },
            ResRule { name: "K Δ̄″_{a,m-2}", family: DeltaBarPP, guard: |p| p.s == p.m - 2 && 1 <= p.a && p.a <= p.m - 4,
                rhs: |p| vec![k1(dbpp(p.a - 1, p.m - 2)), d2(b(col(p.m), two(p.m - 2, p.a + 1))), d1(b(col(p.m - 1), two(p.m - 3, p.a + 1)))] },
            ResRule { name: "K Δ̄″_{0,1}", family: DeltaBarPP, guard: |p| p.a == 0 && p.s == 1 && p.m >= 4,
                rhs: |_| vec![k1(da(1, 2)), d1(b(col(4), two(2, 1))), d2(b(col(3), two(1, 1)))] },
            ResRule { name: "K Δ̄″_{0,m-2}", family: DeltaBarPP, guard: |p| p.a == 0 && p.s == p.m - 2 && p.m >= 4,
                rhs: |p| vec![k1(da(1, p.m - 1)), d2(b(col(p.m), two(p.m - 2, 1))), d1(b(col(p.m - 1), two(p.m - 3, 1)))] },
            ResRule { name: "K Δ̄″_{m-3,m-2}", family: DeltaBarPP, guard: |p| p.a == p.m - 3 && p.s == p.m - 2 && p.m >= 4,
                rhs: |p| vec![k1(dbpp(p.m - 4, p.m - 2)), d2(b(col(p.m), two(p.m - 2, p.m - 2)))] },
            ResRule { name: "K Δ̄″_{m-2,m-2}", family: DeltaBarPP, guard: |p| p.a == p.m - 2 && p.s == p.m - 2 && p.m >= 3,
                rhs: |p| vec![k1(dbpp(p.m - 3, p.m - 2)), d1(b(col(p.m - 2), two(p.m - 2, p.m - 3)))] },
            ResRule { name: "K Δ̄″_{0,1}, m=3", family: DeltaBarPP, guard: |p| p.a == 0 && p.s == 1 && p.m == 3,
                rhs: |_| vec![k1(da(1, 2)), d2(b(col(3), two(1, 1)))] },
        ]
    })
}

/// Restriction of atypical simples along X_{m,n-1} ⊂ X_{m,n}.
pub fn res_d_rules() -> &'static [ResRule] {
    use Family::*;
    static RULES: OnceLock<Vec<ResRule>> = OnceLock::new();
    RULES.get_or_init(|| {
        vec![
            ResRule { name: "D Δ_{a,s}", family: Delta, guard: |p| p.a >= 1 && 1 <= p.s && p.s <= p.n - 1,
                rhs: |p| vec![d1(da(p.a + 1, p.s)), d1(b(hk(p.a, p.s), row(p.s - 1)))] },
            ResRule { name: "D Δ_{a,n}", family: Delta, guard: |p| p.a >= 1 && p.n >= 1 && p.s == p.n,
                rhs: |p| vec![d1(b(hk(p.a, p.n), row(p.n - 1)))] },
            ResRule { name: "D Δ_{a,0}", family: Delta, guard: |p| p.s == 0,
                rhs: |p| vec![d1(da(p.a + 1, 0))] },
            ResRule { name: "D Δ′_{a,s}", family: DeltaP, guard: |p| 1 <= p.s && p.s <= p.n - 1 && p.s <= p.a,
                rhs: |p| vec![d1(dp(p.a + 1, p.s)), d1(b(two(p.a, p.s), col(p.s - 1)))] },
            ResRule { name: "D Δ′_{a,n}", family: DeltaP, guard: |p| p.s == p.n && 1 <= p.n && p.n <= p.a,
                rhs: |p| vec![d1(b(two(p.a, p.n), col(p.n - 1)))] },
            ResRule { name: "D Δ″_{a,s}", family: DeltaPP, guard: |p| p.a + 1 <= p.s && p.s <= p.n - 3,
                rhs: |p| vec![d1(dpp(p.a + 1, p.s)), d1(b(two(p.s + 1, p.a + 1), col(p.s + 1)))] },
            ResRule { name: "D Δ″_{a,n-2}", family: DeltaPP, guard: |p| p.s == p.n - 2 && p.a <= p.n - 3,
                rhs: |p| vec![d1(b(two(p.n - 1, p.a + 1), col(p.n - 1)))] },
            ResRule { name: "D Δ″_{a,a}", family: DeltaPP, guard: |p| p.s == p.a && p.a <= p.n - 2,
                rhs: |p| vec![d1(dp(p.a + 1, p.a + 1))] },
            ResRule { name: "D Δ̄_{a,s}", family: DeltaBar, guard: |p| 1 <= p.s && p.s <= p.m && p.a >= 2,
                rhs: |p| vec![d1(dba(p.a - 1, p.s)), d1(b(row(p.s), hk(p.a, p.s - 1)))] },
            ResRule { name: "D Δ̄_{a,0}", family: DeltaBar, guard: |p| p.s == 0 && p.a >= 1,
                rhs: |p| vec![d1(dba(p.a - 1, 0))] },
            ResRule { name: "D Δ̄_{1,s}", family: DeltaBar, guard: |p| p.a == 1 && 1 <= p.s && p.s <= p.m - 1,
                rhs: |p| vec![d1(dpp(0, p.s - 1)), d1(b(row(p.s), col(p.s)))] },
            ResRule { name: "D Δ̄_{1,m}", family: DeltaBar, guard: |p| p.a == 1 && p.s == p.m && p.m >= 1,
                rhs: |p| vec![d1(b(row(p.m), col(p.m)))] },
            ResRule { name: "D Δ̄′_{a,s}", family: DeltaBarP, guard: |p| 2 <= p.s && p.s <= p.m && p.s < p.a,
                rhs: |p| vec![d1(dbp(p.a - 1, p.s)), d1(b(col(p.s), two(p.a, p.s - 1)))] },
            ResRule { name: "D Δ̄′_{a,a}", family: DeltaBarP, guard: |p| p.s == p.a && 2 <= p.a && p.a <= p.m - 1,
                rhs: |p| vec![d1(dbpp(p.a - 1, p.a - 1)), d1(b(col(p.a), two(p.a, p.a - 1)))] },
            ResRule { name: "D Δ̄′_{m,m}", family: DeltaBarP, guard: |p| p.s == p.m && p.a == p.m && p.m >= 1,
                rhs: |p| vec![d1(b(col(p.m), two(p.m, p.m - 1)))] },
            ResRule { name: "D Δ̄″_{a,s}", family: DeltaBarPP, guard: |p| p.a + 1 <= p.s && p.s <= p.m - 2 && p.a >= 1,
                rhs: |p| vec![d1(dbpp(p.a - 1, p.s)), d1(b(col(p.s + 2), two(p.s, p.a + 1)))] },
            ResRule { name: "D Δ̄″_{a,a}", family: DeltaBarPP, guard: |p| p.s == p.a && 1 <= p.a && p.a <= p.m - 2,
                rhs: |p| vec![d1(dbpp(p.a - 1, p.a))] },
            ResRule { name: "D Δ̄″_{0,s}", family: DeltaBarPP, guard: |p| p.a == 0 && 1 <= p.s && p.s <= p.m - 2,
                rhs: |p| vec![d1(da(1, p.s + 1)), d1(b(col(p.s + 2), two(p.s, 1)))] },
        ]
    })
}

/// Non-atypical simples whose restriction contains a projective; `a` holds a′ = |m-n+1|.
pub struct ExcRule {
    pub name: &'static str,
    guard: fn(P) -> bool,
    pattern: fn(P) -> Bipartition,
    rhs: fn(P) -> Terms,
}

pub fn res_d_exceptional_rules() -> &'static [ExcRule] {
    static RULES: OnceLock<Vec<ExcRule>> = OnceLock::new();
    RULES.get_or_init(|| {
        vec![
            ExcRule { name: "D[(a′,1^{s-1}),(s)]", guard: |p| p.m + 1 >= p.n && 1 <= p.s && p.s <= p.n - 1 && p.a >= 1,
                pattern: |p| b(hk(p.a, p.s - 1), row(p.s)),
                rhs: |p| vec![k1(da(p.a, p.s)), d1(b(hk(p.a + 1, p.s - 1), row(p.s)))] },
            ExcRule { name: "D[(a′,s),(1^{s+1})]", guard: |p| p.m + 1 >= p.n && 1 <= p.s && p.s <= p.a - 1 && p.s <= p.n - 2,
                pattern: |p| b(two(p.a, p.s), col(p.s + 1)),
                rhs: |p| vec![k1(dp(p.a, p.s + 1)), d1(b(two(p.a + 1, p.s), col(p.s + 1)))] },
            ExcRule { name: "D[(s,a′+1),(1^{s+2})]", guard: |p| p.m + 1 >= p.n && p.a + 2 <= p.s && p.s <= p.n - 3,
                pattern: |p| b(two(p.s, p.a + 1), col(p.s + 2)),
                rhs: |p| vec![k1(dpp(p.a, p.s)), d1(b(two(p.s, p.a + 2), col(p.s + 2)))] },
            ExcRule { name: "D[(a′+1,a′+1),(1^{a′+3})]", guard: |p| p.m + 1 >= p.n && p.s == 0 && p.a <= p.n - 4,
                pattern: |p| b(two(p.a + 1, p.a + 1), col(p.a + 3)),
                rhs: |p| vec![k1(dpp(p.a, p.a + 1))] },
            ExcRule { name: "D[(s),(a′,1^{s+1})]", guard: |p| p.m + 1 <= p.n && 0 <= p.s && p.s <= p.m - 1 && p.a >= 2,
                pattern: |p| b(row(p.s), hk(p.a, p.s + 1)),
                rhs: |p| vec![k1(dba(p.a, p.s + 1)), d1(b(row(p.s), hk(p.a - 1, p.s + 1)))] },
            ExcRule { name: "D[(s),(1^{s+2})]", guard: |p| p.m + 1 <= p.n && p.a == 1 && 1 <= p.s && p.s <= p.m - 1,
                pattern: |p| b(row(p.s), col(p.s + 2)),
                rhs: |p| vec![k1(dba(1, p.s + 1)), d1(b(two(p.s, 1), col(p.s + 2)))] },
            ExcRule { name: "D[(1^{s-1}),(a′,s)]", guard: |p| p.m + 1 <= p.n && 2 <= p.s && p.s <= p.a - 1 && p.s <= p.m,
                pattern: |p| b(col(p.s - 1), two(p.a, p.s)),
                rhs: |p| vec![k1(dbp(p.a, p.s)), d1(b(col(p.s - 1), two(p.a - 1, p.s)))] },
            ExcRule { name: "D[(1^{a′-1}),(a′,a′)]", guard: |p| p.m + 1 <= p.n && p.s == 0 && 1 <= p.a && p.a <= p.m,
                pattern: |p| b(col(p.a - 1), two(p.a, p.a)),
                rhs: |p| vec![k1(dbp(p.a, p.a))] },
            ExcRule { name: "D[(1^s),(s,a′+1)]", guard: |p| p.m + 1 <= p.n && p.a + 1 <= p.s && p.s <= p.m - 1,
                pattern: |p| b(col(p.s), two(p.s, p.a + 1)),
                rhs: |p| vec![k1(dbpp(p.a, p.s - 1)), d1(b(col(p.s), two(p.s, p.a)))] },
        ]
    })
}

/// res^{m,n}_{m,n-1} S(λ): box removals from λ^R, and for f > 0 box additions to λ^L that stay cross.
pub fn res_right_s(l: &Bipartition, lv: Level) -> Result<Groth<Bipartition>, XError> {
    if lv.n == 0 {
        return Err(XError::NIsZero);
    }
    let f = check_cross(l, lv)?;
    let mut out = Groth::new();
    if f > 0 {
        for left in l.left.add_boxes() {
            let mu = Bipartition::new(left, l.right.clone());
            if mu.is_cross21() {
                out.add(mu, 1);
            }
        }
    }
    for right in l.right.rem_boxes() {
        out.add(Bipartition::new(l.left.clone(), right), 1);
    }
    Ok(out)
}

fn apply_rule(name: &'static str, terms: Terms, target: Level) -> Result<XGroth, XError> {
    let mut out = XGroth::new();
    for (x, mult) in terms {
        let l = x.label();
        if !l.in_lambda(target.m, target.n) || !l.is_cross21() {
            return Err(XError::BadOutput(name, x.to_string(), target.m, target.n));
        }
        out.add(normalize(x, target)?, mult);
    }
    Ok(out)
}

/// K(λ) with trivial Loewy structure is written D(λ).
pub fn normalize(x: XMod, lv: Level) -> Result<XMod, XError> {
    match x {
        XMod::K(l) if proj_structure(&l, lv)?.shape == Shape::Simple => Ok(XMod::D(l)),
        x => Ok(x),
    }
}

fn atypical_rule<'a>(rules: &'a [ResRule], at: &AtypicalLabel, lv: Level, kind: &str) -> Result<&'a ResRule, XError> {
    let p = params(at, lv);
    let what = format!("{kind}({at}) at {lv}");
    unique(&what, rules.iter().filter(|r| r.family == at.family && (r.guard)(p)).collect(), |r| r.name)
}

/// The exceptional rule matching a non-atypical λ, if any.
pub fn exceptional_rule(l: &Bipartition, lv: Level) -> Result<Option<(&'static ExcRule, i64)>, XError> {
    let a1 = (lv.m as i64 - lv.n as i64 + 1).abs();
    let mut hits = Vec::new();
    for rule in res_d_exceptional_rules() {
        for s in 0..=(lv.m + lv.n + 2) as i64 {
            let p = P { a: a1, s, m: lv.m as i64, n: lv.n as i64 };
            if (rule.guard)(p) && &(rule.pattern)(p) == l {
                hits.push((rule, s));
            }
        }
    }
    match hits.len() {
        0 => Ok(None),
        1 => Ok(Some(hits[0])),
        _ => Err(XError::AmbiguousRule(l.to_string(), hits.iter().map(|(r, _)| r.name).collect())),
    }
}

/// res^{m,n}_{m,n-1} D(λ).
pub fn res_right_d(l: &Bipartition, lv: Level) -> Result<XGroth, XError> {
    if lv.n == 0 {
        return Err(XError::NIsZero);
    }
    check_cross(l, lv)?;
    let target = Level::new(lv.m, lv.n - 1);
    if let Some(at) = atypical_label(l, lv) {
        let rule = atypical_rule(res_d_rules(), &at, lv, "D")?;
        return apply_rule(rule.name, (rule.rhs)(params(&at, lv)), target);
    }
    if let Some((rule, s)) = exceptional_rule(l, lv)? {
        let a1 = (lv.m as i64 - lv.n as i64 + 1).abs();
        return apply_rule(rule.name, (rule.rhs)(P { a: a1, s, m: lv.m as i64, n: lv.n as i64 }), target);
    }
    let terms = res_right_s(l, lv)?.iter().map(|(mu, k)| (XMod::D(mu.clone()), k)).collect();
    apply_rule("generic", terms, target)
}

/// res^{m,n}_{m,n-1} K(λ); projectives with trivial structure restrict as simples.
pub fn res_right_k(l: &Bipartition, lv: Level) -> Result<XGroth, XError> {
    if lv.n == 0 {
        return Err(XError::NIsZero);
    }
    check_cross(l, lv)?;
    let at = atypical_label(l, lv).ok_or_else(|| XError::NotAtypical(l.to_string(), lv.m, lv.n))?;
    if proj_structure(l, lv)?.shape == Shape::Simple {
        return res_right_d(l, lv);
    }
    let rule = atypical_rule(res_k_rules(), &at, lv, "K")?;
    apply_rule(rule.name, (rule.rhs)(params(&at, lv)), Level::new(lv.m, lv.n - 1))
}

/// Right restriction of either kind; K of a non-atypical label is its simple.
pub fn res_right(x: &XMod, lv: Level) -> Result<XGroth, XError> {
    match x {
        XMod::D(l) => res_right_d(l, lv),
        XMod::K(l) if atypical_label(l, lv).is_some() => res_right_k(l, lv),
        XMod::K(l) => res_right_d(l, lv),
    }
}

/// res^{m,n}_{m-1,n} = Ĝ res^{n,m}_{n,m-1} Ĝ.
pub fn res_left(x: &XMod, lv: Level) -> Result<XGroth, XError> {
    if lv.m == 0 {
        return Err(XError::MIsZero);
    }
    Ok(gswap_groth(&res_right(&x.gswap(), lv.gswap())?))
}

/// ℚ: K(λ) goes to its Loewy vertices, D(λ) to itself.
pub fn q_functor(x: &XMod, lv: Level) -> Result<Groth<Bipartition>, XError> {
    match x {
        XMod::D(l) => {
            check_cross(l, lv)?;
            Ok(Groth::single(l.clone()))
        }
        XMod::K(l) => Ok(proj_structure(l, lv)?.vertices().into_iter().map(|(v, _)| (v, 1)).collect()),
    }
}

pub fn q_functor_groth(g: &XGroth, lv: Level) -> Result<Groth<Bipartition>, XError> {
    let mut out = Groth::new();
    for (x, k) in g.iter() {
        out.add_all(&q_functor(x, lv)?, k);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        Bipartition::parse(s).unwrap()
    }

    #[test]
    fn structure_examples() {
        let lv = Level::new(6, 4);
        let g = proj_structure(&AtypicalLabel::delta(2, 2).bipartition(), lv).unwrap();
        assert_eq!(g.shape, Shape::Diamond);
        assert_eq!(g.middles, vec![AtypicalLabel::delta(2, 1).bipartition(), AtypicalLabel::delta(2, 3).bipartition()]);
        let g = proj_structure(&bp("[1 | ∅]"), Level::new(2, 1)).unwrap();
        assert_eq!((g.shape, g.bottom), (Shape::Chain2, Some(bp("[1,1 | 1]"))));
        let g = proj_structure(&AtypicalLabel::delta_pp(0, 0).bipartition(), Level::new(3, 3)).unwrap();
        assert_eq!(g.shape, Shape::Fork);
        assert_eq!(g.edges().len(), 6);
        assert_eq!(proj_structure(&bp("[2 | 2]"), Level::new(2, 2)).unwrap().shape, Shape::Simple);
        assert!(matches!(proj_structure(&bp("[2,2 | 2,2]"), Level::new(4, 4)), Err(XError::NotCross(_))));
    }

    #[test]
    fn restriction_examples() {
        let s = |l: &str, m, n| res_right_s(&bp(l), Level::new(m, n)).unwrap();
        assert_eq!(s("[2 | 1]", 2, 1), Groth::single(bp("[2 | ∅]")));
        assert_eq!(s("[∅ | ∅]", 1, 1), Groth::single(bp("[1 | ∅]")));
        assert_eq!(s("[1 | ∅]", 2, 1), [(bp("[2 | ∅]"), 1), (bp("[1,1 | ∅]"), 1)].into_iter().collect());
        let lv = Level::new(5, 3);
        let d = res_right_d(&AtypicalLabel::delta(2, 0).bipartition(), lv).unwrap();
        assert_eq!(d, Groth::single(XMod::D(AtypicalLabel::delta(3, 0).bipartition())));
        let k = res_right_k(&bp("[∅ | ∅]"), Level::new(2, 2)).unwrap();
        assert_eq!(k, Groth::single(XMod::K(bp("[1 | ∅]"))));
        let k = res_right_k(&AtypicalLabel::delta(2, 2).bipartition(), Level::new(5, 3)).unwrap();
        assert_eq!(k.get(&XMod::D(bp("[2,1,1 | 1]"))), 2);
        assert_eq!(res_right_d(&bp("[1 | 1]"), Level::new(1, 0)), Err(XError::NIsZero));
    }

    #[test]
    fn left_restriction_mirrors_right() {
        let x = XMod::D(AtypicalLabel::delta_bar(2, 0).bipartition());
        let r = res_left(&x, Level::new(3, 5)).unwrap();
        assert_eq!(r, Groth::single(XMod::D(AtypicalLabel::delta_bar(3, 0).bipartition())));
    }

    #[test]
    fn q_examples() {
        let lv = Level::new(5, 3);
        let k = XMod::K(AtypicalLabel::delta(1, 1).bipartition());
        let lv4 = Level::new(5, 4);
        let q = q_functor(&k, lv4).unwrap();
        assert_eq!(q.total(), 5);
        assert_eq!(q.get(&AtypicalLabel::delta(1, 1).bipartition()), 2);
        assert_eq!(q.get(&AtypicalLabel::delta_pp(1, 1).bipartition()), 1);
        let k0 = XMod::K(AtypicalLabel::delta(2, 0).bipartition());
        assert_eq!(q_functor(&k0, lv).unwrap().total(), 2);
    }
}
