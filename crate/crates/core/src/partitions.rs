//! Partitions, bipartitions, hook and cross tests, and the atypical families.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("f = {f} outside 0..=min({m},{n})")]
    InvalidF { m: usize, n: usize, f: usize },
    #[error("{0} is not in Lambda_{{{1},{2}}}")]
    NotInLambda(String, usize, usize),
    #[error("cannot parse partition '{0}'")]
    Parse(String),
}

/// Weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// (a, 1^s)
    pub fn hook(a: usize, s: usize) -> Self {
        let mut v = vec![a];
        v.extend(std::iter::repeat(1).take(s));
        Self::new(v)
    }

    /// (1^s)
    pub fn column(s: usize) -> Self {
        Partition(vec![1; s])
    }

    /// (s)
    pub fn row(s: usize) -> Self {
        Self::new(vec![s])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// i-th part (1-based), 0 beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// All partitions obtained by adding one box, in lexicographic order.
    pub fn add_boxes(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.0.len() {
            let cur = self.0.get(i).copied().unwrap_or(0);
            let above = if i == 0 { usize::MAX } else { self.0[i - 1] };
            if cur < above {
                let mut v = self.0.clone();
                if i == v.len() {
                    v.push(1);
                } else {
                    v[i] += 1;
                }
                out.push(Partition(v));
            }
        }
        out.sort();
        out
    }

    /// All partitions obtained by removing one box, in lexicographic order.
    pub fn rem_boxes(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.0.len() {
            let below = self.0.get(i + 1).copied().unwrap_or(0);
            if self.0[i] > below {
                let mut v = self.0.clone();
                v[i] -= 1;
                out.push(Partition::new(v));
            }
        }
        out.sort();
        out
    }

    /// True iff there is no box at position (p+1, q+1).
    pub fn is_hook(&self, p: usize, q: usize) -> bool {
        self.0.get(p).copied().unwrap_or(0) < q + 1
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((1..=w).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// All partitions of n in lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in 1..=n.min(max) {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// Parses "a,1^s" style text; "∅" or "" is the empty partition.
    pub fn parse(s: &str) -> Result<Partition, PartitionError> {
        let t = s.trim();
        if t.is_empty() || t == "∅" || t == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in t.trim_matches(|c| c == '(' || c == ')').split(',') {
            let tok = tok.trim();
            let (v, e) = match tok.split_once('^') {
                Some((v, e)) => (v, e),
                None => (tok, "1"),
            };
            let v: usize = v.trim().parse().map_err(|_| PartitionError::Parse(s.to_string()))?;
            let e: usize = e.trim().parse().map_err(|_| PartitionError::Parse(s.to_string()))?;
            parts.extend(std::iter::repeat(v).take(e));
        }
        Ok(Partition::new(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match groups.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => groups.push((p, 1)),
            }
        }
        let s: Vec<String> = groups
            .into_iter()
            .map(|(v, c)| if c == 1 { v.to_string() } else { format!("{v}^{c}") })
            .collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Pair (left, right) of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: Partition,
    pub right: Partition,
}

impl Bipartition {
    pub fn new(left: Partition, right: Partition) -> Self {
        Bipartition { left, right }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_parts(l: &[usize], r: &[usize]) -> Self {
        Self::new(Partition::new(l.to_vec()), Partition::new(r.to_vec()))
    }

    /// Swaps the two halves.
    pub fn gswap(&self) -> Bipartition {
        Bipartition { left: self.right.clone(), right: self.left.clone() }
    }

    /// The f with lambda in Lambda_{m,n}(f), if any.
    pub fn level(&self, m: usize, n: usize) -> Option<usize> {
        let (l, r) = (self.left.size(), self.right.size());
        if l <= m && r <= n && m - l == n - r {
            Some(m - l)
        } else {
            None
        }
    }

    pub fn in_lambda(&self, m: usize, n: usize) -> bool {
        self.level(m, n).is_some()
    }

    /// (p,q)-cross test: halves are (p1,q1)- and (p2,q2)-hooks with p1+p2 <= p, q1+q2 <= q.
    pub fn is_cross(&self, p: usize, q: usize) -> bool {
        (0..=p).any(|p1| {
            (0..=q).any(|q1| self.left.is_hook(p1, q1) && self.right.is_hook(p - p1, q - q1))
        })
    }

    pub fn is_cross21(&self) -> bool {
        self.is_cross(2, 1)
    }

    /// Parses "[L | R]".
    pub fn parse(s: &str) -> Result<Bipartition, PartitionError> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        let (l, r) = t.split_once('|').ok_or_else(|| PartitionError::Parse(s.to_string()))?;
        Ok(Bipartition::new(Partition::parse(l)?, Partition::parse(r)?))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} | {}]", self.left, self.right)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Lambda_{m,n}(f) in lexicographic order.
pub fn lambda_set(m: usize, n: usize, f: usize) -> Result<Vec<Bipartition>, PartitionError> {
    if f > m.min(n) {
        return Err(PartitionError::InvalidF { m, n, f });
    }
    let mut out = Vec::new();
    for l in Partition::all(m - f) {
        for r in Partition::all(n - f) {
            out.push(Bipartition::new(l.clone(), r));
        }
    }
    out.sort();
    Ok(out)
}

/// Lambda_{m,n}: union over all f.
pub fn lambda_all(m: usize, n: usize) -> Vec<Bipartition> {
    let mut out: Vec<Bipartition> =
        (0..=m.min(n)).flat_map(|f| lambda_set(m, n, f).expect("f in range")).collect();
    out.sort();
    out
}

/// The (2,1)-cross bipartitions in Lambda_{m,n}.
pub fn cross_set(m: usize, n: usize) -> Vec<Bipartition> {
    lambda_all(m, n).into_iter().filter(Bipartition::is_cross21).collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Family {
    /// ((a,1^s),(s))
    Delta,
    /// ((a,s),(1^s))
    DeltaP,
    /// ((s+1,a+1),(1^{s+2}))
    DeltaPP,
    DeltaBar,
    DeltaBarP,
    DeltaBarPP,
}

impl Family {
    pub fn is_barred(self) -> bool {
        matches!(self, Family::DeltaBar | Family::DeltaBarP | Family::DeltaBarPP)
    }

    pub fn mirror(self) -> Family {
        match self {
            Family::Delta => Family::DeltaBar,
            Family::DeltaP => Family::DeltaBarP,
            Family::DeltaPP => Family::DeltaBarPP,
            Family::DeltaBar => Family::Delta,
            Family::DeltaBarP => Family::DeltaP,
            Family::DeltaBarPP => Family::DeltaPP,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Family::Delta => "Δ",
            Family::DeltaP => "Δ′",
            Family::DeltaPP => "Δ″",
            Family::DeltaBar => "Δ̄",
            Family::DeltaBarP => "Δ̄′",
            Family::DeltaBarPP => "Δ̄″",
        }
    }
}

/// A member of one of the atypical families, stored canonically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct AtypicalLabel {
    pub family: Family,
    pub a: usize,
    pub s: usize,
}

impl AtypicalLabel {
    /// Canonical label: Δ′_{a,1} = Δ_{a,1}, Δ̄″_{0,0} = Δ″_{0,0}, Δ̄_{0,0} = Δ_{0,0}.
    pub fn new(family: Family, a: usize, s: usize) -> Self {
        let family = match (family, a, s) {
            (Family::DeltaP, _, 1) => Family::Delta,
            (Family::DeltaBarP, _, 1) => Family::DeltaBar,
            (Family::DeltaBarPP, 0, 0) => Family::DeltaPP,
            (Family::DeltaBar, 0, 0) => Family::Delta,
            (f, _, _) => f,
        };
        AtypicalLabel { family, a, s }
    }

    pub fn delta(a: usize, s: usize) -> Self {
        Self::new(Family::Delta, a, s)
    }

    pub fn delta_p(a: usize, s: usize) -> Self {
        Self::new(Family::DeltaP, a, s)
    }

    pub fn delta_pp(a: usize, s: usize) -> Self {
        Self::new(Family::DeltaPP, a, s)
    }

    pub fn delta_bar(a: usize, s: usize) -> Self {
        Self::new(Family::DeltaBar, a, s)
    }

    pub fn delta_bar_p(a: usize, s: usize) -> Self {
        Self::new(Family::DeltaBarP, a, s)
    }

    pub fn delta_bar_pp(a: usize, s: usize) -> Self {
        Self::new(Family::DeltaBarPP, a, s)
    }

    pub fn bipartition(&self) -> Bipartition {
        let (a, s) = (self.a, self.s);
        let unbarred = match self.family {
            Family::Delta | Family::DeltaBar => {
                if a == 0 && s == 0 {
                    Bipartition::empty()
                } else {
                    Bipartition::new(Partition::hook(a, s), Partition::row(s))
                }
            }
            Family::DeltaP | Family::DeltaBarP => {
                Bipartition::new(Partition::new(vec![a, s]), Partition::column(s))
            }
            Family::DeltaPP | Family::DeltaBarPP => {
                Bipartition::new(Partition::new(vec![s + 1, a + 1]), Partition::column(s + 2))
            }
        };
        if self.family.is_barred() {
            unbarred.gswap()
        } else {
            unbarred
        }
    }

    pub fn gswap(&self) -> AtypicalLabel {
        AtypicalLabel::new(self.family.mirror(), self.a, self.s)
    }
}

impl fmt::Display for AtypicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{{{},{}}}", self.family.symbol(), self.a, self.s)
    }
}

/// The atypical set At_{m,n} in family order.
pub fn atypical_set(m: usize, n: usize) -> Vec<AtypicalLabel> {
    use std::cmp::Ordering::*;
    match m.cmp(&n) {
        Greater => {
            let a = m - n;
            let mut out: Vec<AtypicalLabel> = (0..=n).map(|s| AtypicalLabel::delta(a, s)).collect();
            out.extend((2..=a.min(n)).map(|s| AtypicalLabel::delta_p(a, s)));
            if n >= 2 {
                out.extend((a..=n - 2).map(|s| AtypicalLabel::delta_pp(a, s)));
            }
            out
        }
        Equal => {
            let mut out = vec![AtypicalLabel::delta(0, 0)];
            if n >= 2 {
                out.extend((0..=n - 2).map(|s| AtypicalLabel::delta_pp(0, s)));
                out.extend((1..=n - 2).map(|s| AtypicalLabel::delta_bar_pp(0, s)));
            }
            out
        }
        Less => atypical_set(n, m).into_iter().map(|l| l.gswap()).collect(),
    }
}

/// The atypical label realizing lambda in At_{m,n}, if any.
pub fn classify_atypical(
    lambda: &Bipartition,
    m: usize,
    n: usize,
) -> Result<Option<AtypicalLabel>, PartitionError> {
    if !lambda.in_lambda(m, n) {
        return Err(PartitionError::NotInLambda(lambda.to_string(), m, n));
    }
    Ok(atypical_set(m, n).into_iter().find(|l| &l.bipartition() == lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_set(1, 1, 1).unwrap(), vec![Bipartition::empty()]);
        assert_eq!(lambda_set(2, 1, 1).unwrap(), vec![Bipartition::from_parts(&[1], &[])]);
        assert_eq!(lambda_set(3, 2, 0).unwrap().len(), 6);
        assert!(lambda_set(1, 2, 2).is_err());
    }

    #[test]
    fn boxes() {
        assert_eq!(p(&[2, 1]).add_boxes(), vec![p(&[2, 1, 1]), p(&[2, 2]), p(&[3, 1])]);
        assert_eq!(p(&[2, 1]).rem_boxes(), vec![p(&[1, 1]), p(&[2])]);
        assert!(Partition::empty().rem_boxes().is_empty());
    }

    #[test]
    fn hooks_and_crosses() {
        assert!(p(&[3, 1, 1]).is_hook(1, 1));
        assert!(!p(&[2, 2]).is_hook(1, 1));
        assert!(Partition::empty().is_hook(0, 0));
        assert!(Bipartition::from_parts(&[5], &[3]).is_cross21());
        assert!(!Bipartition::from_parts(&[2, 2], &[2, 2]).is_cross21());
        assert!(Bipartition::empty().is_cross21());
    }

    #[test]
    fn classification_examples() {
        let l = Bipartition::from_parts(&[2], &[1]);
        assert!(classify_atypical(&l, 3, 1).is_err());
        assert_eq!(classify_atypical(&l, 3, 2).unwrap(), None);
        assert_eq!(
            classify_atypical(&Bipartition::empty(), 2, 2).unwrap(),
            Some(AtypicalLabel::delta(0, 0))
        );
        let l = Bipartition::from_parts(&[1, 1, 1], &[1]);
        assert_eq!(classify_atypical(&l, 4, 2).unwrap(), None);
        assert!(classify_atypical(&l, 4, 4).is_err());
        let d = AtypicalLabel::delta(2, 1);
        assert_eq!(d.bipartition().gswap(), AtypicalLabel::delta_bar(2, 1).bipartition());
        assert_eq!(AtypicalLabel::delta_p(3, 1), AtypicalLabel::delta(3, 1));
        assert_eq!(AtypicalLabel::delta_bar_pp(0, 0), AtypicalLabel::delta_pp(0, 0));
    }

    #[test]
    fn rendering_round_trip() {
        let l = Bipartition::new(Partition::hook(3, 2), Partition::row(2));
        assert_eq!(l.to_string(), "[3,1^2 | 2]");
        assert_eq!(Bipartition::parse(&l.to_string()).unwrap(), l);
        assert_eq!(Bipartition::empty().to_string(), "[∅ | ∅]");
        assert_eq!(Bipartition::parse("[∅ | ∅]").unwrap(), Bipartition::empty());
    }
}
