use std::collections::BTreeMap;
use std::fmt;

use num::One;
use serde::Serialize;

use super::{gl2_decomposition_z, IndecompLabel, ModError, RLabel, ZLabel};
use crate::qarith::{qint, QScalar};
use crate::sparse::SparseMatrix;

pub type QMatrix = SparseMatrix<QScalar>;

/// Largest s accepted by the builders.
pub const MAX_BUILD_S: i32 = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub enum Gen {
    E,
    F,
    K,
    Kinv,
    SmallK,
    SmallKinv,
    B,
    C,
}

impl Gen {
    pub const ALL: [Gen; 8] = [Gen::E, Gen::F, Gen::K, Gen::Kinv, Gen::SmallK, Gen::SmallKinv, Gen::B, Gen::C];
    /// The six algebra generators (inverses omitted).
    pub const SIX: [Gen; 6] = [Gen::E, Gen::F, Gen::K, Gen::SmallK, Gen::B, Gen::C];

    pub fn name(self) -> &'static str {
        match self {
            Gen::E => "E",
            Gen::F => "F",
            Gen::K => "K",
            Gen::Kinv => "K^-1",
            Gen::SmallK => "k",
            Gen::SmallKinv => "k^-1",
            Gen::B => "B",
            Gen::C => "C",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Block {
    Phi,
    Up,
    Down,
    Beta,
}

/// Loewy position of a subquotient inside a projective cover.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Layer {
    Top,
    Left,
    Right,
    Bottom,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct BasisTag {
    pub block: Block,
    pub index: usize,
    pub layer: Option<Layer>,
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = match self.block {
            Block::Phi => "φ",
            Block::Up => "↑",
            Block::Down => "↓",
            Block::Beta => "β",
        };
        let l = match self.layer {
            None => "",
            Some(Layer::Top) => "△",
            Some(Layer::Left) => "◁",
            Some(Layer::Right) => "▷",
            Some(Layer::Bottom) => "▽",
        };
        write!(f, "{b}_{}{l}", self.index)
    }
}

/// Matrices of all generators on an explicit basis.
#[derive(Clone, Debug)]
pub struct ExplicitRep {
    pub name: String,
    pub tags: Vec<BasisTag>,
    gens: Vec<QMatrix>,
}

/// Joint (K, k) eigenvalue pair.
pub type Weight = (QScalar, QScalar);

impl ExplicitRep {
    pub fn dim(&self) -> usize {
        self.tags.len()
    }

    pub fn gen(&self, g: Gen) -> &QMatrix {
        &self.gens[g.index()]
    }

    pub fn from_generators(name: String, tags: Vec<BasisTag>, e: QMatrix, f: QMatrix, k: QMatrix, sk: QMatrix, b: QMatrix, c: QMatrix) -> Self {
        let kinv = k.diag_inverse().expect("K diagonal and invertible");
        let skinv = sk.diag_inverse().expect("k diagonal and invertible");
        ExplicitRep { name, tags, gens: vec![e, f, k, kinv, sk, skinv, b, c] }
    }

    /// Tensor product via the coproduct
    /// Δ(F)=F⊗1+K⁻¹⊗F, Δ(E)=E⊗K+1⊗E, Δ(B)=B⊗1+k⁻¹⊗B, Δ(C)=C⊗k+1⊗C.
    pub fn tensor(&self, other: &ExplicitRep) -> ExplicitRep {
        let i1 = QMatrix::identity(self.dim());
        let i2 = QMatrix::identity(other.dim());
        let a = |g| self.gen(g);
        let b = |g| other.gen(g);
        let e = a(Gen::E).kron(b(Gen::K)).add(&i1.kron(b(Gen::E)));
        let f = a(Gen::F).kron(&i2).add(&a(Gen::Kinv).kron(b(Gen::F)));
        let bb = a(Gen::B).kron(&i2).add(&a(Gen::SmallKinv).kron(b(Gen::B)));
        let c = a(Gen::C).kron(b(Gen::SmallK)).add(&i1.kron(b(Gen::C)));
        let gens = vec![
            e,
            f,
            a(Gen::K).kron(b(Gen::K)),
            a(Gen::Kinv).kron(b(Gen::Kinv)),
            a(Gen::SmallK).kron(b(Gen::SmallK)),
            a(Gen::SmallKinv).kron(b(Gen::SmallKinv)),
            bb,
            c,
        ];
        let tags = self.tags.iter().flat_map(|_| other.tags.iter().copied()).collect();
        ExplicitRep { name: format!("{}⊗{}", self.name, other.name), tags, gens }
    }

    /// Reorders the basis: new vector i is old vector perm[i].
    pub fn permuted(&self, perm: &[usize]) -> ExplicitRep {
        let gens = self.gens.iter().map(|m| m.submatrix(perm, perm)).collect();
        let tags = perm.iter().map(|&i| self.tags[i]).collect();
        ExplicitRep { name: self.name.clone(), tags, gens }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut gens = serde_json::Map::new();
        for g in Gen::ALL {
            let entries: Vec<serde_json::Value> = self
                .gen(g)
                .triplets()
                .map(|(i, j, v)| serde_json::json!([i, j, v.to_string()]))
                .collect();
            gens.insert(g.name().to_string(), serde_json::Value::Array(entries));
        }
        serde_json::json!({
            "label": self.name,
            "dim": self.dim(),
            "basis": self.tags.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "generators": gens,
        })
    }
}

/// Multiset of joint (K, k) eigenvalues read from the diagonal.
pub fn weight_multiset(rep: &ExplicitRep) -> BTreeMap<Weight, usize> {
    assert!(rep.gen(Gen::K).is_diagonal() && rep.gen(Gen::SmallK).is_diagonal());
    let mut out = BTreeMap::new();
    for (kk, sk) in rep.gen(Gen::K).diag().into_iter().zip(rep.gen(Gen::SmallK).diag()) {
        *out.entry((kk, sk)).or_insert(0) += 1;
    }
    out
}

struct Triplets {
    dim: usize,
    e: Vec<(usize, usize, QScalar)>,
    f: Vec<(usize, usize, QScalar)>,
    k: Vec<QScalar>,
    sk: Vec<QScalar>,
    b: Vec<(usize, usize, QScalar)>,
    c: Vec<(usize, usize, QScalar)>,
}

impl Triplets {
    fn into_rep(self, name: String, tags: Vec<BasisTag>) -> ExplicitRep {
        let d = self.dim;
        ExplicitRep::from_generators(
            name,
            tags,
            QMatrix::from_triplets(d, d, self.e),
            QMatrix::from_triplets(d, d, self.f),
            QMatrix::diagonal(self.k),
            QMatrix::diagonal(self.sk),
            QMatrix::from_triplets(d, d, self.b),
            QMatrix::from_triplets(d, d, self.c),
        )
    }
}

/// Offsets of the gl(2) blocks of a simple module.
struct Layout {
    blocks: Vec<(Block, usize, usize)>,
}

impl Layout {
    fn index(&self, block: Block, i: i64) -> Option<usize> {
        let (_, off, len) = self.blocks.iter().find(|b| b.0 == block)?;
        if i >= 0 && (i as usize) < *len {
            Some(off + i as usize)
        } else {
            None
        }
    }
}

fn sign(s: i8) -> QScalar {
    QScalar::from_int(s as i64)
}

fn layout_of(z: &ZLabel) -> Layout {
    let names: &[Block] = if z.r == 0 {
        &[Block::Phi, Block::Beta]
    } else if z.r == z.s {
        &[Block::Phi, Block::Beta]
    } else {
        &[Block::Phi, Block::Up, Block::Down, Block::Beta]
    };
    let dims: Vec<usize> = if z.r == 0 {
        vec![z.s as usize, z.s as usize - 1]
    } else if z.r == z.s {
        vec![z.s as usize, z.s as usize + 1]
    } else {
        vec![z.s as usize, z.s as usize + 1, z.s as usize - 1, z.s as usize]
    };
    let mut off = 0;
    let mut blocks = Vec::new();
    for (b, d) in names.iter().zip(dims) {
        blocks.push((*b, off, d));
        off += d;
    }
    Layout { blocks }
}

fn simple_triplets(z: &ZLabel) -> (Triplets, Layout) {
    let layout = layout_of(z);
    let dim: usize = layout.blocks.iter().map(|b| b.2).sum();
    let mut t = Triplets { dim, e: vec![], f: vec![], k: vec![], sk: vec![], b: vec![], c: vec![] };
    // bosonic part: standard action inside each gl(2) block
    let gl2: Vec<_> = {
        let all = gl2_decomposition_z(z);
        let mut it = all.into_iter();
        layout.blocks.iter().map(|blk| if blk.2 > 0 { it.next() } else { None }).collect()
    };
    for (blk, x) in layout.blocks.iter().zip(gl2) {
        let (_, off, d) = *blk;
        let Some(x) = x else { continue };
        let alpha = sign(x.alpha);
        for n in 0..d {
            let n_i = n as i32;
            t.k.push(&alpha * &QScalar::q_pow(d as i32 - 1 - 2 * n_i));
            t.sk.push(&sign(x.beta) * &QScalar::q_pow(-x.r + n_i));
            if n + 1 < d {
                t.f.push((off + n + 1, off + n, QScalar::one()));
            }
            if n >= 1 {
                t.e.push((off + n - 1, off + n, &alpha * &(&qint(n_i) * &qint(d as i32 - n_i))));
            }
        }
    }
    let (s, r) = (z.s as i64, z.r as i64);
    let beta = sign(z.beta);
    let mut put = |which: char, src: Block, i: i64, dst: Block, j: i64, c: QScalar| {
        if let (Some(a), Some(b)) = (layout.index(src, i), layout.index(dst, j)) {
            let target = if which == 'B' { &mut t.b } else { &mut t.c };
            target.push((b, a, c));
        }
    };
    let qi = |n: i64| qint(n as i32);
    if r == 0 {
        for n in 0..s {
            put('B', Block::Phi, n, Block::Beta, n - 1, -qi(n));
        }
        for m in 0..s - 1 {
            put('C', Block::Beta, m, Block::Phi, m + 1, beta.clone());
        }
    } else if r == s {
        for n in 0..s {
            put('B', Block::Phi, n, Block::Beta, n, qi(s - n));
        }
        for m in 0..=s {
            put('C', Block::Beta, m, Block::Phi, m, beta.clone());
        }
    } else {
        let inv_s = QScalar::one().try_div(&qi(s)).expect("[s] nonzero");
        for j in 0..s {
            put('B', Block::Phi, j, Block::Down, j - 1, &qi(j) * &inv_s);
            put('B', Block::Phi, j, Block::Up, j, &(&beta * &(&qi(r) * &qi(s - j))) * &inv_s);
            put('C', Block::Beta, j, Block::Down, j, inv_s.clone());
            put('C', Block::Beta, j, Block::Up, j + 1, &(&beta * &qi(s - r)) * &inv_s);
        }
        for m in 0..=s {
            put('B', Block::Up, m, Block::Beta, m - 1, qi(m));
            put('C', Block::Up, m, Block::Phi, m, QScalar::one());
        }
        for n in 0..s - 1 {
            put('B', Block::Down, n, Block::Beta, n, &beta * &(&qi(r) * &qi(n + 1 - s)));
            put('C', Block::Down, n, Block::Phi, n + 1, &beta * &qi(r - s));
        }
    }
    (t, layout)
}

fn tags_of(layout: &Layout, layer: Option<Layer>) -> Vec<BasisTag> {
    layout
        .blocks
        .iter()
        .flat_map(|(b, _, d)| (0..*d).map(move |i| BasisTag { block: *b, index: i, layer }))
        .collect()
}

/// Explicit simple module Z^{α,β}_{s,r} in the basis φ, ↑, ↓, β.
pub fn build_simple(z: &ZLabel) -> Result<ExplicitRep, ModError> {
    if !z.is_valid() || z.s > MAX_BUILD_S {
        return Err(ModError::UnsupportedLabel(z.to_string()));
    }
    let (t, layout) = simple_triplets(z);
    Ok(t.into_rep(z.to_string(), tags_of(&layout, None)))
}

/// The fundamental module 3 = Z^{1,-1}_{1,1} with basis f1 = φ0, f2 = β0, f3 = β1.
pub fn fundamental_f() -> ExplicitRep {
    build_simple(&ZLabel::new(1, -1, 1, 1)).expect("valid label")
}

/// The dual fundamental 3̄ = Z^{1,1}_{2,0} with basis v1 = β0, v2 = φ1, v3 = φ0.
pub fn fundamental_v() -> ExplicitRep {
    build_simple(&ZLabel::new(1, 1, 2, 0)).expect("valid label").permuted(&[2, 1, 0])
}

/// A simple subquotient as seen by one extension map.  The `zero` view reads
/// Z^{α,β}_{1,0} as Z^{α,-β}_{0,0}, whose only basis vector is β_0.
struct View {
    z: ZLabel,
    layout: Layout,
    s: i64,
    zero: bool,
}

impl View {
    fn normal(z: ZLabel) -> View {
        View { z, layout: layout_of(&z), s: z.s as i64, zero: false }
    }

    fn zero(z: ZLabel) -> View {
        debug_assert!(z.s == 1 && z.r == 0);
        View { z, layout: layout_of(&z), s: 0, zero: true }
    }

    fn index(&self, block: Block, i: i64) -> Option<usize> {
        if self.zero {
            return (block == Block::Beta && i == 0).then_some(0);
        }
        self.layout.index(block, i)
    }

    fn dim(&self) -> usize {
        self.z.dim()
    }
}

/// The four Ext¹ maps between neighbouring atypicals.
#[derive(Clone, Copy)]
enum Xi {
    /// B: Z_{s,0} -> Z^{-β}_{s+1,0}
    BUp,
    /// C: Z_{s,0} -> Z^{-β}_{s-1,0}
    CDown,
    /// B: Z_{s,s} -> Z^{-β}_{s-1,s-1}
    BDown,
    /// C: Z_{s,s} -> Z^{-β}_{s+1,s+1}
    CUp,
}

fn xi_entries(kind: Xi, src: &View, dst: &View) -> (Gen, Vec<(usize, usize, QScalar)>) {
    let mut out = Vec::new();
    let n = (src.dim().max(dst.dim()) + 2) as i64;
    let s = src.s;
    let mut put = |b1: Block, i: i64, b2: Block, j: i64, c: QScalar| {
        if let (Some(a), Some(b)) = (src.index(b1, i), dst.index(b2, j)) {
            if !c.is_zero() {
                out.push((b, a, c));
            }
        }
    };
    let qi = |n: i64| qint(n as i32);
    let gen = match kind {
        Xi::BUp => {
            for m in -1..n {
                put(Block::Phi, m, Block::Phi, m, -qi(s - m));
                put(Block::Beta, m, Block::Beta, m, qi(s - m - 1));
            }
            Gen::B
        }
        Xi::CDown => {
            for m in -1..n {
                put(Block::Phi, m, Block::Phi, m, QScalar::one());
                put(Block::Beta, m, Block::Beta, m, QScalar::one());
            }
            Gen::C
        }
        Xi::BDown => {
            for m in -1..n {
                put(Block::Phi, m, Block::Phi, m - 1, -qi(m));
                put(Block::Beta, m, Block::Beta, m - 1, qi(m));
            }
            Gen::B
        }
        Xi::CUp => {
            for m in -1..n {
                put(Block::Phi, m, Block::Phi, m + 1, QScalar::one());
                put(Block::Beta, m, Block::Beta, m + 1, QScalar::one());
            }
            Gen::C
        }
    };
    (gen, out)
}

/// Edge of a projective Loewy graph: source and target layer, views, map and coefficient.
struct Edge {
    from: usize,
    to: usize,
    src: View,
    dst: View,
    kind: Xi,
    coeff: QScalar,
}

/// Explicit projective cover R^{α,β}_{s,r}; subquotients ordered top, left, right, bottom.
pub fn build_projective(label: &RLabel) -> Result<ExplicitRep, ModError> {
    if !label.is_valid() || label.s > MAX_BUILD_S {
        return Err(ModError::UnsupportedLabel(label.to_string()));
    }
    let (a, b, s) = (label.alpha, label.beta, label.s);
    let subs = label.subquotients();
    let one = QScalar::one;
    let neg = |x: QScalar| -x;
    let qi = |n: i32| qint(n);
    let z = |beta: i8, s: i32, r: i32| ZLabel::new(a, beta, s, r);
    let edges: Vec<Edge> = match (label.r == 0, s) {
        (true, 1) => {
            // top and bottom read either as Z^{α,β}_{1,0} or as Z^{α,-β}_{0,0}
            let zz = z(b, 1, 0);
            vec![
                Edge { from: 0, to: 1, src: View::normal(zz), dst: View::normal(subs[1]), kind: Xi::BUp, coeff: one() },
                Edge { from: 0, to: 2, src: View::zero(zz), dst: View::normal(subs[2]), kind: Xi::CUp, coeff: neg(one()) },
                Edge { from: 1, to: 3, src: View::normal(subs[1]), dst: View::normal(zz), kind: Xi::CDown, coeff: one() },
                Edge { from: 2, to: 3, src: View::normal(subs[2]), dst: View::zero(zz), kind: Xi::BDown, coeff: one() },
            ]
        }
        (true, _) => vec![
            Edge { from: 0, to: 1, src: View::normal(subs[0]), dst: View::normal(subs[1]), kind: Xi::BUp, coeff: neg(qi(s - 1)) },
            Edge { from: 0, to: 2, src: View::normal(subs[0]), dst: View::normal(subs[2]), kind: Xi::CDown, coeff: neg(qi(s)) },
            Edge { from: 1, to: 3, src: View::normal(subs[1]), dst: View::normal(subs[3]), kind: Xi::CDown, coeff: one() },
            Edge { from: 2, to: 3, src: View::normal(subs[2]), dst: View::normal(subs[3]), kind: Xi::BUp, coeff: one() },
        ],
        (false, _) => {
            // for s = 1 the right subquotient is Z^{α,-β}_{0,0}
            let right = if s == 1 { View::zero(subs[2]) } else { View::normal(subs[2]) };
            let right2 = if s == 1 { View::zero(subs[2]) } else { View::normal(subs[2]) };
            vec![
                Edge { from: 0, to: 1, src: View::normal(subs[0]), dst: View::normal(subs[1]), kind: Xi::CUp, coeff: neg(qi(s)) },
                Edge { from: 0, to: 2, src: View::normal(subs[0]), dst: right, kind: Xi::BDown, coeff: neg(qi(s + 1)) },
                Edge { from: 1, to: 3, src: View::normal(subs[1]), dst: View::normal(subs[3]), kind: Xi::BDown, coeff: one() },
                Edge { from: 2, to: 3, src: right2, dst: View::normal(subs[3]), kind: Xi::CUp, coeff: one() },
            ]
        }
    };

    let parts: Vec<(Triplets, Layout)> = subs.iter().map(simple_triplets).collect();
    let mut offs = vec![0usize];
    for (t, _) in &parts {
        offs.push(offs.last().unwrap() + t.dim);
    }
    let dim = *offs.last().unwrap();
    let mut all = Triplets { dim, e: vec![], f: vec![], k: vec![], sk: vec![], b: vec![], c: vec![] };
    let layers = [Layer::Top, Layer::Left, Layer::Right, Layer::Bottom];
    let mut tags = Vec::with_capacity(dim);
    for (idx, (t, layout)) in parts.iter().enumerate() {
        let o = offs[idx];
        for (src, dst) in [(&t.e, &mut all.e), (&t.f, &mut all.f), (&t.b, &mut all.b), (&t.c, &mut all.c)] {
            dst.extend(src.iter().map(|(i, j, c)| (i + o, j + o, c.clone())));
        }
        all.k.extend(t.k.iter().cloned());
        all.sk.extend(t.sk.iter().cloned());
        tags.extend(tags_of(layout, Some(layers[idx])));
    }
    for e in &edges {
        let (gen, entries) = xi_entries(e.kind, &e.src, &e.dst);
        let target = if gen == Gen::B { &mut all.b } else { &mut all.c };
        for (i, j, c) in entries {
            target.push((i + offs[e.to], j + offs[e.from], &e.coeff * &c));
        }
    }
    // η maps from the top straight to the bottom
    let top = View::normal(subs[0]);
    let bot = View::normal(subs[3]);
    if label.r == 0 && s >= 2 {
        for n in 0..s as i64 {
            if let (Some(i), Some(j)) = (top.index(Block::Phi, n), bot.index(Block::Beta, n - 1)) {
                all.b.push((j + offs[3], i + offs[0], -(&sign(b) * &qint(n as i32))));
            }
        }
    }
    if label.r != 0 {
        for n in 0..=s as i64 {
            if let (Some(i), Some(j)) = (top.index(Block::Beta, n), bot.index(Block::Phi, n)) {
                all.c.push((j + offs[3], i + offs[0], QScalar::one()));
            }
        }
    }
    Ok(all.into_rep(label.to_string(), tags))
}

/// Explicit module for any indecomposable label.
pub fn build_indecomp(label: &IndecompLabel) -> Result<ExplicitRep, ModError> {
    match label {
        IndecompLabel::Z(z) => build_simple(z),
        IndecompLabel::R(r) => build_projective(r),
    }
}
