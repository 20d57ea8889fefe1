//! The chain as an X_{m,n} ⊗ U_q(sl(2|1)) bimodule: semisimple part, atypical graph, the
//! projections ℙ and ℚ, dimensions of simple X-modules and the two induction identities.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::Serialize;
use thiserror::Error;

use crate::fusion::{chain_decompose, fuse_with_v, Groth};
use crate::partitions::{AtypicalLabel, Bipartition, Partition};
use crate::uqmod::{BarLabel, IndecompLabel};
use crate::xcat::{self, Level, XError, XMod};

#[derive(Debug, Error, PartialEq)]
pub enum BimodError {
    #[error(transparent)]
    X(#[from] XError),
    #[error("projection at {0}: {1}")]
    Projection(Level, String),
    #[error("pairing at {0}: {1}")]
    Pairing(Level, String),
}

/// X-module ⊠ U-module.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct Pair<Z> {
    pub x: XMod,
    pub z: Z,
}

impl<Z> Pair<Z> {
    pub fn new(x: XMod, z: Z) -> Self {
        Pair { x, z }
    }
}

impl<Z: fmt::Display> fmt::Display for Pair<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊠ {}", self.x, self.z)
    }
}

pub type PairGroth = Groth<Pair<BarLabel>>;
pub type IndecompPairGroth = Groth<Pair<IndecompLabel>>;

fn d(l: Bipartition) -> XMod {
    XMod::D(l)
}

fn bp(l: Partition, r: Partition) -> Bipartition {
    Bipartition::new(l, r)
}

fn hook(k: i32, j: i32) -> Partition {
    Partition::hook(k as usize, j as usize)
}

fn row(s: i32) -> Partition {
    Partition::row(s as usize)
}

fn col(s: i32) -> Partition {
    Partition::column(s as usize)
}

fn two(s: i32, k: i32) -> Partition {
    Partition::new(vec![s as usize, k as usize])
}

/// A typical summand D(λ) ⊠ Z̄^p_{t,r}.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Summand {
    pub x: Bipartition,
    pub z: BarLabel,
}

/// The semisimple part of the bimodule.
pub fn semisimple_part(m: usize, n: usize) -> Vec<Summand> {
    if m < n {
        return semisimple_part(n, m)
            .into_iter()
            .map(|s| Summand { x: s.x.gswap(), z: s.z.gswap() })
            .collect();
    }
    let (m, n) = (m as i32, n as i32);
    let a = m - n;
    let mut out = Vec::new();
    let mut push = |x: Bipartition, p: i32, t: i32, r: i32| out.push(Summand { x, z: BarLabel::z(p, t, r) });
    if a > 0 {
        for s in 1..=n {
            for k in (1..=a + s).filter(|&k| k != a) {
                push(bp(hook(k, s - k + a), row(s)), s + k + a + 1, k - a, s + a);
            }
        }
        for s in a + 2..=m {
            for k in 1..=s - a - 1 {
                push(bp(row(s), hook(k, s - k - a)), s + k + a + 1, s - a, k + a);
            }
        }
        for s in 1..=n - 1 {
            for k in 1..=s.min(n - s) {
                push(bp(col(s + k + a), two(s, k)), s + k + a, 1 - k - a, s + a);
            }
        }
        for s in a + 1..=m - 1 {
            for k in (1..=s.min(m - s)).filter(|&k| k != a + 1) {
                push(bp(two(s, k), col(s + k - a)), s + k + a, s - a, 1 - k + a);
            }
        }
        for k in 1..=a / 2 {
            for s in k..=a - k {
                let mut parts = vec![s as usize, k as usize];
                parts.extend(std::iter::repeat(1).take((a - s - k) as usize));
                push(bp(Partition::new(parts), Partition::empty()), s + k + a, s - a, 1 - k + a);
            }
        }
        for s in a / 2 + 1..=a - 1 {
            for k in 1 - s + a..=s.min(m - s) {
                push(bp(two(s, k), col(s + k - a)), s + k + a, s - a, 1 - k + a);
            }
        }
    } else {
        for s in 1..=m {
            for k in 1..=s {
                push(bp(hook(k, s - k), row(s)), s + k + 1, k, s);
            }
        }
        for s in 2..=m {
            for k in 1..=s - 1 {
                push(bp(row(s), hook(k, s - k)), s + k + 1, s, k);
            }
        }
        for s in 2..=m - 1 {
            for k in 2..=s.min(m - s) {
                push(bp(col(s + k), two(s, k)), s + k, 1 - k, s);
            }
        }
        for s in 1..=m - 1 {
            for k in 2..=s.min(m - s) {
                push(bp(two(s, k), col(s + k)), s + k, s, 1 - k);
            }
        }
    }
    out
}

/// Cells λ_{m,n}(t, r) of the semisimple part, rows r descending and columns t ascending.
#[derive(Clone, Debug, Serialize)]
pub struct LambdaTable {
    pub m: usize,
    pub n: usize,
    pub ts: Vec<i32>,
    pub rs: Vec<i32>,
    pub cells: BTreeMap<(i32, i32), Bipartition>,
}

impl LambdaTable {
    pub fn new(m: usize, n: usize) -> Self {
        let mut cells = BTreeMap::new();
        for s in semisimple_part(m, n) {
            let prev = cells.insert((s.z.t, s.z.r), s.x.clone());
            assert!(prev.is_none(), "two summands at ({},{}) in the semisimple part", s.z.t, s.z.r);
        }
        let span = |f: fn(&(i32, i32)) -> i32| -> Vec<i32> {
            let lo = cells.keys().map(f).min();
            let hi = cells.keys().map(f).max();
            match (lo, hi) {
                (Some(lo), Some(hi)) => (lo..=hi).collect(),
                _ => Vec::new(),
            }
        };
        let ts = span(|k| k.0);
        let mut rs = span(|k| k.1);
        rs.reverse();
        LambdaTable { m, n, ts, rs, cells }
    }

    pub fn cell(&self, t: i32, r: i32) -> Option<&Bipartition> {
        self.cells.get(&(t, r))
    }

    /// Header row then one row per r; "0" marks an empty cell.
    pub fn rows(&self) -> Vec<Vec<String>> {
        let mut out = vec![std::iter::once("r\\t".to_string()).chain(self.ts.iter().map(i32::to_string)).collect()];
        for &r in &self.rs {
            let mut line = vec![r.to_string()];
            line.extend(self.ts.iter().map(|&t| self.cell(t, r).map_or("0".to_string(), |b| b.to_string())));
            out.push(line);
        }
        out
    }
}

/// Shape of the atypical graph, for m ≥ n after Ĝ.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Regime {
    /// n = 0 or m = n = 1: a single vertex.
    Lone,
    /// 1 ≤ n ≤ m/2
    R1,
    /// m/2 + 1 ≤ n ≤ m - 2
    R2,
    /// n = (m+1)/2, n ≥ 2
    R3,
    /// n = m - 1
    R4,
    /// m = n ≥ 2
    R5,
}

/// Regime of (m, n); the cases (2,1) and (3,2) sit in two regimes and are reported as R4.
pub fn regime(m: usize, n: usize) -> Regime {
    let (m, n) = if m < n { (n, m) } else { (m, n) };
    if n == 0 || (m, n) == (1, 1) {
        Regime::Lone
    } else if m == n {
        Regime::R5
    } else if n == m - 1 {
        Regime::R4
    } else if 2 * n == m + 1 {
        Regime::R3
    } else if 2 * n <= m {
        Regime::R1
    } else {
        Regime::R2
    }
}

/// A column of the atypical graph: D(λ) ⊠ R̄.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Column {
    pub label: AtypicalLabel,
    pub x: Bipartition,
    pub cover: BarLabel,
}

/// Columns and the lone vertex for m ≥ n.
fn columns_ge(m: usize, n: usize) -> (Vec<Column>, (AtypicalLabel, BarLabel)) {
    let c = |label: AtypicalLabel, cover: BarLabel| Column { x: label.bipartition(), label, cover };
    let (mi, ni) = (m as i32, n as i32);
    if n == 0 {
        return (Vec::new(), (AtypicalLabel::delta(m, 0), BarLabel::z(1, 0, mi)));
    }
    if m == n {
        let mut cols = Vec::new();
        if m >= 2 {
            for s in (1..=mi - 2).rev() {
                cols.push(c(AtypicalLabel::delta_bar_pp(0, s as usize), BarLabel::r(s - 1, 0, s)));
            }
            for s in 0..=mi - 2 {
                cols.push(c(AtypicalLabel::delta_pp(0, s as usize), BarLabel::r(s - 1, s, 0)));
            }
        }
        return (cols, (AtypicalLabel::delta(0, 0), BarLabel::z(1, 0, 0)));
    }
    let a = mi - ni;
    let mut cols = Vec::new();
    for s in (1..=ni).rev() {
        cols.push(c(AtypicalLabel::delta(a as usize, s as usize), BarLabel::r(s, 0, s + a - 1)));
    }
    for s in 2..=a.min(ni) {
        cols.push(c(AtypicalLabel::delta_p(a as usize, s as usize), BarLabel::r(s, 0, a - s + 1)));
    }
    for s in a..=ni - 2 {
        cols.push(c(AtypicalLabel::delta_pp(a as usize, s as usize), BarLabel::r(s + 1, s - a, 0)));
    }
    (cols, (AtypicalLabel::delta(a as usize, 0), BarLabel::z(1, 0, a)))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum VLayer {
    Top,
    Middle,
    Bottom,
    Lone,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GraphVertex {
    pub x: Bipartition,
    pub z: BarLabel,
    pub layer: VLayer,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum EdgeKind {
    /// Loewy arrow of R̄ inside a column.
    QuantumGroup,
    /// Loewy arrow of K(λ) at a fixed quantum-group label.
    Centralizer,
}

/// Subquotient graph of the atypical part T^at.
#[derive(Clone, Debug, Serialize)]
pub struct BimoduleGraph {
    pub level: Level,
    pub regime: Regime,
    pub columns: Vec<Column>,
    pub vertices: Vec<GraphVertex>,
    pub edges: Vec<(usize, usize, EdgeKind)>,
}

pub fn atypical_part(m: usize, n: usize) -> Result<BimoduleGraph, BimodError> {
    if m < n {
        let g = atypical_part(n, m)?;
        return Ok(BimoduleGraph {
            level: Level::new(m, n),
            regime: g.regime,
            columns: g
                .columns
                .into_iter()
                .map(|c| Column { label: c.label.gswap(), x: c.x.gswap(), cover: c.cover.gswap() })
                .collect(),
            vertices: g
                .vertices
                .into_iter()
                .map(|v| GraphVertex { x: v.x.gswap(), z: v.z.gswap(), layer: v.layer })
                .collect(),
            edges: g.edges,
        });
    }
    let lv = Level::new(m, n);
    let (columns, (red, red_z)) = columns_ge(m, n);
    let mut vertices = Vec::new();
    let mut edges = BTreeSet::new();
    for c in &columns {
        let (top, mids, bottom) = c.cover.loewy().expect("column covers are R̄ labels");
        let i = vertices.len();
        vertices.push(GraphVertex { x: c.x.clone(), z: top, layer: VLayer::Top });
        for z in mids {
            vertices.push(GraphVertex { x: c.x.clone(), z, layer: VLayer::Middle });
        }
        vertices.push(GraphVertex { x: c.x.clone(), z: bottom, layer: VLayer::Bottom });
        for k in [i + 1, i + 2] {
            edges.insert((i, k, EdgeKind::QuantumGroup));
            edges.insert((k, i + 3, EdgeKind::QuantumGroup));
        }
    }
    let red_x = red.bipartition();
    vertices.push(GraphVertex { x: red_x.clone(), z: red_z, layer: VLayer::Lone });
    let find = |x: &Bipartition, z: &BarLabel, layers: &[VLayer]| {
        vertices.iter().position(|v| &v.x == x && &v.z == z && layers.contains(&v.layer))
    };
    for (k, c) in columns.iter().enumerate() {
        let (top, bottom) = (4 * k, 4 * k + 3);
        let z = vertices[top].z;
        let g = xcat::proj_structure(&c.x, lv)?;
        for mu in &g.middles {
            if let Some(v) = find(mu, &z, &[VLayer::Middle, VLayer::Lone]) {
                edges.insert((top, v, EdgeKind::Centralizer));
                edges.insert((v, bottom, EdgeKind::Centralizer));
            }
        }
    }
    let g = xcat::proj_structure(&red_x, lv)?;
    if let (xcat::Shape::Chain2, Some(mu)) = (g.shape, g.bottom.as_ref()) {
        if let Some(v) = find(mu, &red_z, &[VLayer::Bottom]) {
            edges.insert((vertices.len() - 1, v, EdgeKind::Centralizer));
        }
    }
    Ok(BimoduleGraph { level: lv, regime: regime(m, n), columns, vertices, edges: edges.into_iter().collect() })
}

impl BimoduleGraph {
    /// Groups vertices by X-label: a full R̄ column becomes D(λ) ⊠ R̄, anything else D(λ) ⊠ Z̄.
    pub fn q_projection(&self) -> Result<PairGroth, BimodError> {
        let mut groups: BTreeMap<&Bipartition, Vec<&GraphVertex>> = BTreeMap::new();
        for v in &self.vertices {
            groups.entry(&v.x).or_default().push(v);
        }
        let mut out = PairGroth::new();
        for (x, vs) in groups {
            let tops: Vec<&&GraphVertex> = vs.iter().filter(|v| v.layer == VLayer::Top).collect();
            match tops.as_slice() {
                [] => {
                    for v in vs {
                        out.add(Pair::new(d(x.clone()), v.z), 1);
                    }
                }
                [t] => {
                    let cover = BarLabel::r(t.z.p, t.z.t, t.z.r);
                    let (top, mids, bottom) = cover.loewy().expect("R̄");
                    let want: Groth<BarLabel> = [top, mids[0], mids[1], bottom].into_iter().map(|z| (z, 1)).collect();
                    let have: Groth<BarLabel> = vs.iter().map(|v| (v.z, 1)).collect();
                    if want != have {
                        return Err(BimodError::Projection(self.level, format!("D{x}: {have} is not ℙ({cover})")));
                    }
                    out.add(Pair::new(d(x.clone()), cover), 1);
                }
                _ => return Err(BimodError::Projection(self.level, format!("D{x} heads two columns"))),
            }
        }
        Ok(out)
    }

    /// Groups vertices by quantum-group label: a group headed by a column top λ must be ℚK(λ).
    pub fn p_projection(&self) -> Result<PairGroth, BimodError> {
        let lv = self.level;
        let mut groups: BTreeMap<BarLabel, Vec<&GraphVertex>> = BTreeMap::new();
        for v in &self.vertices {
            groups.entry(v.z).or_default().push(v);
        }
        let mut out = PairGroth::new();
        for (z, vs) in groups {
            let tops: Vec<&&GraphVertex> = vs.iter().filter(|v| v.layer == VLayer::Top).collect();
            match tops.as_slice() {
                [] => {
                    for v in vs {
                        out.add(Pair::new(d(v.x.clone()), z), 1);
                    }
                }
                [t] => {
                    let k = XMod::K(t.x.clone());
                    let want = xcat::q_functor(&k, lv)?;
                    let have: Groth<Bipartition> = vs.iter().map(|v| (v.x.clone(), 1)).collect();
                    if want != have {
                        return Err(BimodError::Projection(lv, format!("{z}: {have} is not ℚ{k} = {want}")));
                    }
                    out.add(Pair::new(xcat::normalize(k, lv)?, z), 1);
                }
                _ => return Err(BimodError::Projection(lv, format!("{z} tops two columns"))),
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "level": [self.level.m, self.level.n],
            "regime": format!("{:?}", self.regime),
            "vertices": self.vertices.iter().map(|v| serde_json::json!({
                "x": v.x.to_string(),
                "z": v.z.to_string(),
                "layer": format!("{:?}", v.layer),
            })).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|(a, b, k)| serde_json::json!([a, b, format!("{k:?}")])).collect::<Vec<_>>(),
        })
    }
}

fn gswap_pairs(g: &PairGroth) -> PairGroth {
    g.iter().map(|(p, c)| (Pair::new(p.x.gswap(), p.z.gswap()), c)).collect()
}

fn push_d(out: &mut PairGroth, l: AtypicalLabel, z: BarLabel) {
    out.add(Pair::new(d(l.bipartition()), z), 1);
}

/// ℚT^at in closed form.
pub fn q_closed_form(m: usize, n: usize) -> PairGroth {
    if m < n {
        return gswap_pairs(&q_closed_form(n, m));
    }
    let mut out = PairGroth::new();
    let (mi, ni) = (m as i32, n as i32);
    if m == n {
        for s in 1..=mi - 2 {
            push_d(&mut out, AtypicalLabel::delta_bar_pp(0, s as usize), BarLabel::r(s - 1, 0, s));
        }
        for s in 0..=mi - 2 {
            push_d(&mut out, AtypicalLabel::delta_pp(0, s as usize), BarLabel::r(s - 1, s, 0));
        }
        push_d(&mut out, AtypicalLabel::delta(0, 0), BarLabel::z(1, 0, 0));
        return out;
    }
    let a = mi - ni;
    let au = a as usize;
    for s in 1..=ni {
        push_d(&mut out, AtypicalLabel::delta(au, s as usize), BarLabel::r(s, 0, a + s - 1));
    }
    for s in 2..=a.min(ni) {
        push_d(&mut out, AtypicalLabel::delta_p(au, s as usize), BarLabel::r(s, 0, a - s + 1));
    }
    for s in a..=ni - 2 {
        push_d(&mut out, AtypicalLabel::delta_pp(au, s as usize), BarLabel::r(s + 1, s - a, 0));
    }
    push_d(&mut out, AtypicalLabel::delta(au, 0), BarLabel::z(1, 0, a));
    out
}

/// ℙT^at in closed form, with K(λ) of simple structure written as D(λ).
pub fn p_closed_form(m: usize, n: usize) -> Result<PairGroth, BimodError> {
    if m < n {
        return Ok(gswap_pairs(&p_closed_form(n, m)?));
    }
    let lv = Level::new(m, n);
    let mut out = PairGroth::new();
    let push_k = |out: &mut PairGroth, l: AtypicalLabel, z: BarLabel| -> Result<(), BimodError> {
        out.add(Pair::new(xcat::normalize(XMod::K(l.bipartition()), lv)?, z), 1);
        Ok(())
    };
    let (mi, ni) = (m as i32, n as i32);
    if m == n {
        if m == 1 {
            push_d(&mut out, AtypicalLabel::delta(0, 0), BarLabel::z(1, 0, 0));
            return Ok(out);
        }
        for s in 1..=mi - 2 {
            push_k(&mut out, AtypicalLabel::delta_bar_pp(0, s as usize), BarLabel::z(s - 1, 0, s))?;
        }
        for s in 0..=mi - 2 {
            push_k(&mut out, AtypicalLabel::delta_pp(0, s as usize), BarLabel::z(s - 1, s, 0))?;
        }
        push_d(&mut out, AtypicalLabel::delta_bar_pp(0, m - 2), BarLabel::z(mi - 2, 0, mi - 1));
        push_d(&mut out, AtypicalLabel::delta_pp(0, m - 2), BarLabel::z(mi - 2, mi - 1, 0));
        return Ok(out);
    }
    let a = mi - ni;
    let au = a as usize;
    for s in 1..=ni {
        push_k(&mut out, AtypicalLabel::delta(au, s as usize), BarLabel::z(s, 0, a + s - 1))?;
    }
    for s in 2..=a.min(ni) {
        push_k(&mut out, AtypicalLabel::delta_p(au, s as usize), BarLabel::z(s, 0, a - s + 1))?;
    }
    for s in a..=ni - 2 {
        push_k(&mut out, AtypicalLabel::delta_pp(au, s as usize), BarLabel::z(s + 1, s - a, 0))?;
    }
    push_d(&mut out, AtypicalLabel::delta(au, n), BarLabel::z(ni + 1, 0, mi));
    if n >= 1 {
        if 2 * n <= m {
            push_d(&mut out, AtypicalLabel::delta_p(au, n), BarLabel::z(ni + 1, 0, mi - 2 * ni));
        } else if 2 * n == m + 1 && n >= 2 {
            push_d(&mut out, AtypicalLabel::delta_p(au, au), BarLabel::z(a + 1, 0, 0));
        } else if 2 * n >= m + 2 && n < m {
            push_d(&mut out, AtypicalLabel::delta_pp(au, n - 2), BarLabel::z(ni, 2 * ni - mi - 1, 0));
        }
    }
    Ok(out)
}

fn memo<T: Clone>(
    cell: &'static OnceLock<RwLock<HashMap<(usize, usize), T>>>,
    key: (usize, usize),
    make: impl FnOnce() -> Result<T, BimodError>,
) -> Result<T, BimodError> {
    let lock = cell.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = lock.read().expect("memo lock").get(&key) {
        return Ok(v.clone());
    }
    let v = make()?;
    lock.write().expect("memo lock").insert(key, v.clone());
    Ok(v)
}

fn semisimple_pairs(m: usize, n: usize) -> PairGroth {
    semisimple_part(m, n).into_iter().map(|s| (Pair::new(d(s.x), s.z), 1)).collect()
}

/// ℚ𝒯_{m,n}: simple X-modules against indecomposable quantum-group modules.
pub fn q_image(m: usize, n: usize) -> Arc<PairGroth> {
    static MEMO: OnceLock<RwLock<HashMap<(usize, usize), Arc<PairGroth>>>> = OnceLock::new();
    memo(&MEMO, (m, n), || {
        let mut out = semisimple_pairs(m, n);
        out.add_all(&q_closed_form(m, n), 1);
        Ok(Arc::new(out))
    })
    .expect("infallible")
}

/// ℙ𝒯_{m,n}: X-modules against simple quantum-group modules.
pub fn p_image(m: usize, n: usize) -> Result<Arc<PairGroth>, BimodError> {
    static MEMO: OnceLock<RwLock<HashMap<(usize, usize), Arc<PairGroth>>>> = OnceLock::new();
    memo(&MEMO, (m, n), || {
        let mut out = semisimple_pairs(m, n);
        out.add_all(&p_closed_form(m, n)?, 1);
        Ok(Arc::new(out))
    })
}

/// Dimensions of the simple X_{m,n}-modules read off the chain.
#[derive(Clone, Debug, Serialize)]
pub struct DimLedger {
    pub level: Level,
    /// λ ↦ (paired quantum-group label, dim D(λ))
    pub dims: BTreeMap<Bipartition, (BarLabel, u64)>,
}

/// Pairs each λ with the unique quantum-group label it meets in ℚ𝒯 and takes its chain multiplicity.
pub fn dim_ledger(m: usize, n: usize) -> Result<Arc<DimLedger>, BimodError> {
    static MEMO: OnceLock<RwLock<HashMap<(usize, usize), Arc<DimLedger>>>> = OnceLock::new();
    memo(&MEMO, (m, n), || {
        let lv = Level::new(m, n);
        let chain = if m + n == 0 { Groth::single(IndecompLabel::z(1, 1, 1, 0)) } else { chain_decompose(m, n) };
        let mut dims = BTreeMap::new();
        let mut seen = BTreeSet::new();
        for (p, c) in q_image(m, n).iter() {
            let x = p.x.label().clone();
            if c != 1 || dims.contains_key(&x) {
                return Err(BimodError::Pairing(lv, format!("{x} meets more than one label")));
            }
            if !seen.insert(p.z) {
                return Err(BimodError::Pairing(lv, format!("{} meets more than one label", p.z)));
            }
            let mult = chain.get(&p.z.to_indecomp());
            if mult == 0 {
                return Err(BimodError::Pairing(lv, format!("{} is not a chain summand", p.z)));
            }
            dims.insert(x, (p.z, mult));
        }
        Ok(Arc::new(DimLedger { level: lv, dims }))
    })
}

pub fn dim_simple_x(l: &Bipartition, lv: Level) -> Result<u64, BimodError> {
    dim_ledger(lv.m, lv.n)?
        .dims
        .get(l)
        .map(|e| e.1)
        .ok_or_else(|| XError::LabelNotInBimodule(l.to_string(), lv.m, lv.n).into())
}

/// dim D(λ), or for K(λ) the sum over its composition factors.
pub fn dim_x(x: &XMod, lv: Level) -> Result<u64, BimodError> {
    match x {
        XMod::D(l) => dim_simple_x(l, lv),
        XMod::K(_) => {
            let mut total = 0;
            for (l, c) in xcat::q_functor(x, lv)?.iter() {
                total += c * dim_simple_x(l, lv)?;
            }
            Ok(total)
        }
    }
}

pub fn dim_x_groth(g: &xcat::XGroth, lv: Level) -> Result<u64, BimodError> {
    let mut total = 0;
    for (x, c) in g.iter() {
        total += c * dim_x(x, lv)?;
    }
    Ok(total)
}

/// Both sides of an identity and whether they agree.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub level: Level,
    pub lhs: IndecompPairGroth,
    pub rhs: IndecompPairGroth,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Entries where the two sides differ, as (pair, lhs, rhs).
    pub fn residual(&self) -> Vec<(Pair<IndecompLabel>, u64, u64)> {
        let keys: BTreeSet<&Pair<IndecompLabel>> = self.lhs.iter().chain(self.rhs.iter()).map(|e| e.0).collect();
        keys.into_iter()
            .filter_map(|k| {
                let (a, b) = (self.lhs.get(k), self.rhs.get(k));
                (a != b).then(|| (k.clone(), a, b))
            })
            .collect()
    }
}

/// ℚ𝒯_{m,n} ⊗ 3̄ against the restriction of ℚ𝒯_{m,n+1} to X_{m,n}, composition factors on the X side.
pub fn identity_tensor(m: usize, n: usize) -> Result<IdentityCheck, BimodError> {
    let lv = Level::new(m, n);
    let up = Level::new(m, n + 1);
    let mut lhs = IndecompPairGroth::new();
    for (p, c) in q_image(m, n).iter() {
        for (w, k) in fuse_with_v(&p.z.to_indecomp(), 1, 1).iter() {
            lhs.add(Pair::new(p.x.clone(), *w), c * k);
        }
    }
    let mut rhs = IndecompPairGroth::new();
    for (p, c) in q_image(m, n + 1).iter() {
        let res = xcat::res_right_d(p.x.label(), up)?;
        for (mu, k) in xcat::q_functor_groth(&res, lv)?.iter() {
            rhs.add(Pair::new(d(mu.clone()), p.z.to_indecomp()), c * k);
        }
    }
    Ok(IdentityCheck { level: lv, lhs, rhs })
}

/// ℙ applied to a quantum-group module: R̄ splits into its four subquotients.
pub fn p_functor(z: &IndecompLabel) -> Vec<IndecompLabel> {
    match z {
        IndecompLabel::Z(_) => vec![*z],
        IndecompLabel::R(r) => r.subquotients().into_iter().map(IndecompLabel::Z).collect(),
    }
}

/// ℙ(ℙ𝒯_{m,n} ⊗ 3̄) against the restriction of ℙ𝒯_{m,n+1} to X_{m,n}.
pub fn identity_proj(m: usize, n: usize) -> Result<IdentityCheck, BimodError> {
    let lv = Level::new(m, n);
    let up = Level::new(m, n + 1);
    let mut lhs = IndecompPairGroth::new();
    for (p, c) in p_image(m, n)?.iter() {
        let x = xcat::normalize(p.x.clone(), lv)?;
        for (w, k) in fuse_with_v(&p.z.to_indecomp(), 1, 1).iter() {
            for u in p_functor(w) {
                lhs.add(Pair::new(x.clone(), u), c * k);
            }
        }
    }
    let mut rhs = IndecompPairGroth::new();
    for (p, c) in p_image(m, n + 1)?.iter() {
        for (y, k) in xcat::res_right(&p.x, up)?.iter() {
            rhs.add(Pair::new(y.clone(), p.z.to_indecomp()), c * k);
        }
    }
    Ok(IdentityCheck { level: lv, lhs, rhs })
}

pub fn verify_identity_tensor(m: usize, n: usize) -> bool {
    identity_tensor(m, n).map(|c| c.holds()).unwrap_or(false)
}

pub fn verify_identity_proj(m: usize, n: usize) -> bool {
    identity_proj(m, n).map(|c| c.holds()).unwrap_or(false)
}

/// Dimension totals of the chain computed four ways.
#[derive(Clone, Debug, Serialize)]
pub struct DimAudit {
    pub level: Level,
    pub expected: u64,
    pub from_chain: u64,
    pub from_q_image: u64,
    pub from_p_image: u64,
}

impl DimAudit {
    pub fn holds(&self) -> bool {
        [self.from_chain, self.from_q_image, self.from_p_image].iter().all(|&d| d == self.expected)
    }
}

pub fn dimension_audit(m: usize, n: usize) -> Result<DimAudit, BimodError> {
    let lv = Level::new(m, n);
    let total = |g: &PairGroth| -> Result<u64, BimodError> {
        let mut s = 0;
        for (p, c) in g.iter() {
            s += c * dim_x(&p.x, lv)? * p.z.dim() as u64;
        }
        Ok(s)
    };
    Ok(DimAudit {
        level: lv,
        expected: 3u64.pow((m + n) as u32),
        from_chain: crate::fusion::dim_of_groth(&chain_decompose(m, n)),
        from_q_image: total(&q_image(m, n))?,
        from_p_image: total(&*p_image(m, n)?)?,
    })
}

/// Σ dim(X) · z over ℚ𝒯 and over ℙ𝒯, as quantum-group Grothendieck vectors.
pub fn weighted_images(m: usize, n: usize) -> Result<(Groth<IndecompLabel>, Groth<IndecompLabel>), BimodError> {
    let lv = Level::new(m, n);
    let mut q = Groth::new();
    for (p, c) in q_image(m, n).iter() {
        q.add(p.z.to_indecomp(), c * dim_x(&p.x, lv)?);
    }
    let mut pv = Groth::new();
    for (p, c) in p_image(m, n)?.iter() {
        pv.add(p.z.to_indecomp(), c * dim_x(&p.x, lv)?);
    }
    Ok((q, pv))
}

/// ℙ of a quantum-group Grothendieck vector.
pub fn p_functor_groth(g: &Groth<IndecompLabel>) -> Groth<IndecompLabel> {
    g.map_linear(|z| p_functor(z).into_iter().map(|u| (u, 1)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_semisimple_parts() {
        assert!(semisimple_part(1, 0).is_empty());
        let s = semisimple_part(1, 1);
        assert_eq!(s, vec![Summand { x: Bipartition::from_parts(&[1], &[1]), z: BarLabel::z(3, 1, 1) }]);
        assert_eq!(semisimple_part(2, 0).len(), 1);
    }

    #[test]
    fn regimes() {
        assert_eq!(regime(5, 0), Regime::Lone);
        assert_eq!(regime(6, 2), Regime::R1);
        assert_eq!(regime(7, 5), Regime::R2);
        assert_eq!(regime(5, 3), Regime::R3);
        assert_eq!(regime(5, 4), Regime::R4);
        assert_eq!(regime(3, 3), Regime::R5);
        assert_eq!(regime(3, 5), Regime::R3);
    }

    #[test]
    fn two_one_graph() {
        let g = atypical_part(2, 1).unwrap();
        assert_eq!(g.vertices.len(), 5);
        assert_eq!(g.edges.iter().filter(|e| e.2 == EdgeKind::Centralizer).count(), 2);
        let p = g.p_projection().unwrap();
        assert_eq!(p, p_closed_form(2, 1).unwrap());
    }
}
