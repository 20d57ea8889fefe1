//! Fusion with the two fundamentals and the Grothendieck decomposition of the chain.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::Serialize;

use crate::uqmod::{IndecompLabel, ZLabel};

/// Multiset of labels with positive multiplicities.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Groth<L: Ord> {
    entries: BTreeMap<L, u64>,
}

impl<L: Ord + Clone> Groth<L> {
    pub fn new() -> Self {
        Groth { entries: BTreeMap::new() }
    }

    pub fn single(label: L) -> Self {
        let mut g = Self::new();
        g.add(label, 1);
        g
    }

    pub fn add(&mut self, label: L, mult: u64) {
        if mult > 0 {
            *self.entries.entry(label).or_insert(0) += mult;
        }
    }

    pub fn add_all(&mut self, other: &Groth<L>, times: u64) {
        for (l, m) in &other.entries {
            self.add(l.clone(), m * times);
        }
    }

    pub fn get(&self, label: &L) -> u64 {
        self.entries.get(label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, u64)> {
        self.entries.iter().map(|(l, m)| (l, *m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Applies a linear map label by label.
    pub fn map_linear<M: Ord + Clone, F: FnMut(&L) -> Groth<M>>(&self, mut f: F) -> Groth<M> {
        let mut out = Groth::new();
        for (l, m) in &self.entries {
            out.add_all(&f(l), *m);
        }
        out
    }
}

impl<L: Ord + Clone> FromIterator<(L, u64)> for Groth<L> {
    fn from_iter<I: IntoIterator<Item = (L, u64)>>(iter: I) -> Self {
        let mut g = Groth::new();
        for (l, m) in iter {
            g.add(l, m);
        }
        g
    }
}

impl<L: Ord + Clone + fmt::Display> fmt::Display for Groth<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(l, m)| if m == 1 { l.to_string() } else { format!("{m}·{l}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub type GrothVector = Groth<IndecompLabel>;

/// Σ multiplicity · dim.
pub fn dim_of_groth(v: &GrothVector) -> u64 {
    v.iter().map(|(l, m)| m * l.dim() as u64).sum()
}

/// Which fundamental is being fused in.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Fundamental {
    /// Z_{1,1}
    F,
    /// Z_{2,0}
    V,
}

impl Fundamental {
    pub fn label(self, alpha: i8, beta: i8) -> ZLabel {
        match self {
            Fundamental::F => ZLabel::new(alpha, beta, 1, 1),
            Fundamental::V => ZLabel::new(alpha, beta, 2, 0),
        }
    }
}

type Term = (char, i8, i32, i32, u64);

/// One displayed fusion rule: a guard on (kind, s, r) and a right-hand side in
/// terms of (s, r), with signs relative to (α12, β12).
pub struct FusionRule {
    pub name: &'static str,
    pub fundamental: Fundamental,
    guard: fn(char, i32, i32) -> bool,
    rhs: fn(i32, i32) -> Vec<Term>,
}

impl FusionRule {
    pub fn matches(&self, label: &IndecompLabel) -> bool {
        let (k, s, r) = kind_s_r(label);
        (self.guard)(k, s, r)
    }
}

fn kind_s_r(label: &IndecompLabel) -> (char, i32, i32) {
    match label {
        IndecompLabel::Z(z) => ('Z', z.s, z.r),
        IndecompLabel::R(r) => ('R', r.s, r.r),
    }
}

macro_rules! rule {
    ($name:expr, $fund:ident, |$k:ident, $s:ident, $r:ident| $guard:expr, |$s2:ident, $r2:ident| $rhs:expr) => {
        FusionRule {
            name: $name,
            fundamental: Fundamental::$fund,
            guard: |$k, $s, $r| $guard,
            rhs: |$s2, $r2| $rhs,
        }
    };
}

/// All rules for tensoring with Z_{1,1} and Z_{2,0}, regular families first.
/// A term ('Z', σ, s, r, m) means m copies of Z^{α12, σβ12}_{s,r}.
pub fn fusion_rules() -> &'static [FusionRule] {
    static RULES: OnceLock<Vec<FusionRule>> = OnceLock::new();
    RULES.get_or_init(|| {
        vec![
            // ⊗ Z_{1,1}
            rule!("f: Z_{s,0}, s>=2", F, |k, s, r| k == 'Z' && r == 0 && s >= 2,
                |s, _r| vec![('Z', -1, s - 1, 0, 1), ('Z', 1, s, 1, 1)]),
            rule!("f: Z_{s,s}, s>=1", F, |k, s, r| k == 'Z' && r == s && s >= 1,
                |s, _r| vec![('Z', -1, s + 1, s + 1, 1), ('Z', 1, s, s + 1, 1)]),
            rule!("f: Z_{s,-1}, s>=2", F, |k, s, r| k == 'Z' && s >= 2 && r == -1,
                |s, _r| vec![('R', -1, s + 1, 0, 1), ('Z', -1, s - 1, -1, 1)]),
            rule!("f: Z_{s,s-1}, s>=2", F, |k, s, r| k == 'Z' && s >= 2 && r == s - 1,
                |s, _r| vec![('R', -1, s - 1, s - 1, 1), ('Z', -1, s + 1, s, 1)]),
            rule!("f: Z_{s,r} typical, s>=2", F,
                |k, s, r| k == 'Z' && s >= 2 && r != 0 && r != s && r != -1 && r != s - 1,
                |s, r| vec![('Z', 1, s, r + 1, 1), ('Z', -1, s + 1, r + 1, 1), ('Z', -1, s - 1, r, 1)]),
            rule!("f: R_{s,0}, s>=3", F, |k, s, r| k == 'R' && r == 0 && s >= 3,
                |s, _r| vec![('R', -1, s - 1, 0, 1), ('Z', 1, s, 1, 2), ('Z', -1, s - 1, 1, 1), ('Z', -1, s + 1, 1, 1)]),
            rule!("f: R_{s,s}, s>=2", F, |k, s, r| k == 'R' && r == s && s >= 2,
                |s, _r| vec![('R', -1, s + 1, s + 1, 1), ('Z', 1, s, s + 1, 2), ('Z', -1, s - 1, s, 1), ('Z', -1, s + 1, s + 2, 1)]),
            rule!("f: Z_{1,0}", F, |k, s, r| k == 'Z' && s == 1 && r == 0,
                |_s, _r| vec![('Z', 1, 1, 1, 1)]),
            rule!("f: Z_{1,-1}", F, |k, s, r| k == 'Z' && s == 1 && r == -1,
                |_s, _r| vec![('R', -1, 2, 0, 1)]),
            rule!("f: Z_{1,r}, r!=-1,0,1", F, |k, s, r| k == 'Z' && s == 1 && !(-1..=1).contains(&r),
                |_s, r| vec![('Z', 1, 1, r + 1, 1), ('Z', -1, 2, r + 1, 1)]),
            rule!("f: R_{2,0}", F, |k, s, r| k == 'R' && s == 2 && r == 0,
                |_s, _r| vec![('R', -1, 1, 0, 1), ('Z', 1, 2, 1, 2), ('Z', -1, 3, 1, 1)]),
            rule!("f: R_{1,0}", F, |k, s, r| k == 'R' && s == 1 && r == 0,
                |_s, _r| vec![('R', 1, 1, 1, 1), ('Z', 1, 1, 2, 1), ('Z', -1, 2, 1, 1)]),
            rule!("f: R_{1,1}", F, |k, s, r| k == 'R' && s == 1 && r == 1,
                |_s, _r| vec![('R', -1, 2, 2, 1), ('Z', 1, 1, 2, 2), ('Z', -1, 2, 3, 1)]),
            // ⊗ Z_{2,0}
            rule!("v: Z_{s,0}, s>=2", V, |k, s, r| k == 'Z' && r == 0 && s >= 2,
                |s, _r| vec![('Z', 1, s + 1, 0, 1), ('Z', 1, s - 1, -1, 1)]),
            rule!("v: Z_{s,s}, s>=2", V, |k, s, r| k == 'Z' && r == s && s >= 2,
                |s, _r| vec![('Z', 1, s - 1, s - 1, 1), ('Z', 1, s + 1, s, 1)]),
            rule!("v: Z_{s,1}, s>=2", V, |k, s, r| k == 'Z' && s >= 2 && r == 1,
                |s, _r| vec![('R', -1, s, 0, 1), ('Z', 1, s + 1, 1, 1)]),
            rule!("v: Z_{s,s+1}, s>=2", V, |k, s, r| k == 'Z' && s >= 2 && r == s + 1,
                |s, _r| vec![('R', -1, s, s, 1), ('Z', 1, s - 1, s, 1)]),
            rule!("v: Z_{s,r} typical, s>=2", V,
                |k, s, r| k == 'Z' && s >= 2 && r != 0 && r != s && r != 1 && r != s + 1,
                |s, r| vec![('Z', 1, s + 1, r, 1), ('Z', -1, s, r - 1, 1), ('Z', 1, s - 1, r - 1, 1)]),
            rule!("v: R_{s,0}, s>=3", V, |k, s, r| k == 'R' && r == 0 && s >= 3,
                |s, _r| vec![('R', 1, s + 1, 0, 1), ('Z', 1, s - 1, -1, 2), ('Z', -1, s, -1, 1), ('Z', -1, s - 2, -1, 1)]),
            rule!("v: R_{s,s}, s>=2", V, |k, s, r| k == 'R' && r == s && s >= 2,
                |s, _r| vec![('R', 1, s - 1, s - 1, 1), ('Z', 1, s + 1, s, 2), ('Z', -1, s + 2, s + 1, 1), ('Z', -1, s, s - 1, 1)]),
            rule!("v: Z_{1,0}", V, |k, s, r| k == 'Z' && s == 1 && r == 0,
                |_s, _r| vec![('Z', 1, 2, 0, 1)]),
            rule!("v: Z_{1,1}", V, |k, s, r| k == 'Z' && s == 1 && r == 1,
                |_s, _r| vec![('Z', -1, 1, 0, 1), ('Z', 1, 2, 1, 1)]),
            rule!("v: Z_{1,2}", V, |k, s, r| k == 'Z' && s == 1 && r == 2,
                |_s, _r| vec![('R', -1, 1, 1, 1)]),
            rule!("v: Z_{1,r}, r!=0,1,2", V, |k, s, r| k == 'Z' && s == 1 && !(0..=2).contains(&r),
                |_s, r| vec![('Z', -1, 1, r - 1, 1), ('Z', 1, 2, r, 1)]),
            rule!("v: R_{2,0}", V, |k, s, r| k == 'R' && s == 2 && r == 0,
                |_s, _r| vec![('R', 1, 3, 0, 1), ('Z', 1, 1, -1, 2), ('Z', -1, 2, -1, 1)]),
            rule!("v: R_{1,0}", V, |k, s, r| k == 'R' && s == 1 && r == 0,
                |_s, _r| vec![('R', 1, 2, 0, 1), ('Z', -1, 1, -1, 1), ('Z', 1, 2, 1, 1)]),
            rule!("v: R_{1,1}", V, |k, s, r| k == 'R' && s == 1 && r == 1,
                |_s, _r| vec![('R', -1, 1, 0, 1), ('Z', 1, 2, 1, 2), ('Z', -1, 3, 2, 1)]),
        ]
    })
}

/// Rules of the given table that match `label` (exactly one for every valid label).
pub fn matching_rules(label: &IndecompLabel, fund: Fundamental) -> Vec<&'static FusionRule> {
    fusion_rules().iter().filter(|r| r.fundamental == fund && r.matches(label)).collect()
}

fn signs(label: &IndecompLabel) -> (i8, i8) {
    match label {
        IndecompLabel::Z(z) => (z.alpha, z.beta),
        IndecompLabel::R(r) => (r.alpha, r.beta),
    }
}

/// label ⊗ fundamental^{α2,β2}.
pub fn fuse(label: &IndecompLabel, fund: Fundamental, alpha2: i8, beta2: i8) -> GrothVector {
    let rules = matching_rules(label, fund);
    assert_eq!(rules.len(), 1, "fusion of {label} with {fund:?}: {} rules match", rules.len());
    let (a1, b1) = signs(label);
    let (a, b) = (a1 * alpha2, b1 * beta2);
    let (_, s, r) = kind_s_r(label);
    (rules[0].rhs)(s, r)
        .into_iter()
        .map(|(k, sg, s, r, m)| {
            let l = if k == 'Z' { IndecompLabel::z(a, sg * b, s, r) } else { IndecompLabel::r(a, sg * b, s, r) };
            (l, m)
        })
        .collect()
}

/// label ⊗ Z^{α2,β2}_{1,1}
pub fn fuse_with_f(label: &IndecompLabel, alpha2: i8, beta2: i8) -> GrothVector {
    fuse(label, Fundamental::F, alpha2, beta2)
}

/// label ⊗ Z^{α2,β2}_{2,0}
pub fn fuse_with_v(label: &IndecompLabel, alpha2: i8, beta2: i8) -> GrothVector {
    fuse(label, Fundamental::V, alpha2, beta2)
}

/// The module 3 = Z^{1,-1}_{1,1}.
pub fn three() -> IndecompLabel {
    IndecompLabel::z(1, -1, 1, 1)
}

/// The module 3̄ = Z^{1,1}_{2,0}.
pub fn three_bar() -> IndecompLabel {
    IndecompLabel::z(1, 1, 2, 0)
}

/// V ⊗ 3
pub fn tensor_three(v: &GrothVector) -> GrothVector {
    v.map_linear(|l| fuse_with_f(l, 1, -1))
}

/// V ⊗ 3̄
pub fn tensor_three_bar(v: &GrothVector) -> GrothVector {
    v.map_linear(|l| fuse_with_v(l, 1, 1))
}

fn chain_memo() -> &'static RwLock<HashMap<(usize, usize), GrothVector>> {
    static MEMO: OnceLock<RwLock<HashMap<(usize, usize), GrothVector>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Decomposition of 3^{⊗m} ⊗ 3̄^{⊗n} into indecomposables (m + n >= 1).
pub fn chain_decompose(m: usize, n: usize) -> GrothVector {
    assert!(m + n >= 1, "empty chain");
    if let Some(v) = chain_memo().read().expect("memo lock").get(&(m, n)) {
        return v.clone();
    }
    let v = match (m, n) {
        (1, 0) => Groth::single(three()),
        (0, 1) => Groth::single(three_bar()),
        (_, 0) => tensor_three(&chain_decompose(m - 1, 0)),
        _ => tensor_three_bar(&chain_decompose(m, n - 1)),
    };
    chain_memo().write().expect("memo lock").insert((m, n), v.clone());
    v
}

/// Labels used to exercise the rule tables: Z with 1 <= s <= max_s, -3 <= r <= s+3, and all R.
pub fn sample_labels(max_s: i32) -> Vec<IndecompLabel> {
    let mut out = Vec::new();
    for s in 1..=max_s {
        for a in [1, -1] {
            for b in [1, -1] {
                for r in -3..=s + 3 {
                    out.push(IndecompLabel::z(a, b, s, r));
                }
                out.push(IndecompLabel::r(a, b, s, 0));
                out.push(IndecompLabel::r(a, b, s, s));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let z = |a, b, s, r| IndecompLabel::z(a, b, s, r);
        let r = |a, b, s, rr| IndecompLabel::r(a, b, s, rr);
        assert_eq!(fuse_with_f(&z(1, 1, 1, 0), 1, -1), Groth::single(z(1, -1, 1, 1)));
        assert_eq!(fuse_with_f(&z(1, 1, 1, -1), 1, 1), Groth::single(r(1, -1, 2, 0)));
        assert_eq!(
            fuse_with_f(&r(1, 1, 1, 1), 1, 1),
            [(r(1, -1, 2, 2), 1), (z(1, 1, 1, 2), 2), (z(1, -1, 2, 3), 1)].into_iter().collect()
        );
        assert_eq!(fuse_with_v(&z(1, 1, 1, 2), 1, 1), Groth::single(r(1, -1, 1, 1)));
        assert_eq!(
            chain_decompose(2, 1),
            [(z(1, -1, 1, 1), 1), (z(1, -1, 3, 2), 1), (r(1, -1, 1, 1), 1)].into_iter().collect()
        );
        assert_eq!(chain_decompose(1, 1), [(z(1, 1, 1, 0), 1), (z(1, -1, 2, 1), 1)].into_iter().collect());
        assert_eq!(dim_of_groth(&Groth::new()), 0);
        assert_eq!(dim_of_groth(&[(three(), 2)].into_iter().collect()), 6);
    }

    #[test]
    fn rules_are_total_and_disjoint() {
        for l in sample_labels(12) {
            for f in [Fundamental::F, Fundamental::V] {
                assert_eq!(matching_rules(&l, f).len(), 1, "{l} {f:?}");
            }
        }
    }
}
