//! Row-compressed sparse matrices over an exact scalar field.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num::{BigRational, One, Zero};
use rayon::prelude::*;

use crate::qarith::QScalar;

/// Exact field operations needed by the matrix kernels.
pub trait Scalar: Clone + Debug + PartialEq + Send + Sync + Zero + One {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn checked_inv(&self) -> Option<Self>;
}

macro_rules! impl_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn add_ref(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn sub_ref(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn mul_ref(&self, rhs: &Self) -> Self {
                self * rhs
            }
            fn neg_ref(&self) -> Self {
                -self
            }
            fn checked_inv(&self) -> Option<Self> {
                if self.is_zero() {
                    None
                } else {
                    Some(<$t>::one() / self.clone())
                }
            }
        }
    };
}

impl_scalar!(QScalar);
impl_scalar!(BigRational);

/// Sparse matrix; each row holds (column, value) pairs sorted by column with no zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct SparseMatrix<T: Scalar> {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, T)>>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal((0..n).map(|_| T::one()).collect())
    }

    pub fn diagonal(d: Vec<T>) -> Self {
        let n = d.len();
        let rows = d
            .into_iter()
            .enumerate()
            .map(|(i, v)| if v.is_zero() { Vec::new() } else { vec![(i, v)] })
            .collect();
        SparseMatrix { nrows: n, ncols: n, rows }
    }

    /// Builds from (row, col, value) triplets; repeated positions are summed.
    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, T)>>(nrows: usize, ncols: usize, it: I) -> Self {
        let mut acc: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); nrows];
        for (i, j, v) in it {
            assert!(i < nrows && j < ncols, "entry ({i},{j}) outside {nrows}x{ncols}");
            let slot = acc[i].entry(j).or_insert_with(T::zero);
            *slot = slot.add_ref(&v);
        }
        let rows = acc
            .into_iter()
            .map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix { nrows, ncols, rows }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.rows[i]
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        match self.rows[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.rows[i][k].1.clone(),
            Err(_) => T::zero(),
        }
    }

    /// (row, col, value) for every stored entry in row-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.triplets().all(|(i, j, _)| i == j)
    }

    pub fn diag(&self) -> Vec<T> {
        (0..self.nrows.min(self.ncols)).map(|i| self.get(i, i)).collect()
    }

    pub fn map<U: Scalar, E, F: Fn(&T) -> Result<U, E> + Sync>(&self, f: F) -> Result<SparseMatrix<U>, E>
    where
        E: Send,
    {
        let rows: Result<Vec<Vec<(usize, U)>>, E> = self
            .rows
            .iter()
            .map(|r| {
                let mut out = Vec::with_capacity(r.len());
                for (j, v) in r {
                    let u = f(v)?;
                    if !u.is_zero() {
                        out.push((*j, u));
                    }
                }
                Ok(out)
            })
            .collect();
        Ok(SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows: rows? })
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|(j, v)| (*j, v.mul_ref(c))).filter(|e| !e.1.is_zero()).collect())
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    fn merge(&self, other: &Self, sign: bool) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols), "shape mismatch");
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut k) = (0, 0);
                while i < a.len() || k < b.len() {
                    let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
                    let cb = b.get(k).map(|e| e.0).unwrap_or(usize::MAX);
                    if ca < cb {
                        out.push(a[i].clone());
                        i += 1;
                    } else if cb < ca {
                        out.push((cb, if sign { b[k].1.clone() } else { b[k].1.neg_ref() }));
                        k += 1;
                    } else {
                        let v = if sign { a[i].1.add_ref(&b[k].1) } else { a[i].1.sub_ref(&b[k].1) };
                        if !v.is_zero() {
                            out.push((ca, v));
                        }
                        i += 1;
                        k += 1;
                    }
                }
                out
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    /// self + c * I
    pub fn add_scalar(&self, c: &T) -> Self {
        self.add(&Self::identity(self.nrows).scale(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows, "shape mismatch in product");
        let rows = self
            .rows
            .par_iter()
            .map(|r| {
                let mut acc: BTreeMap<usize, T> = BTreeMap::new();
                for (k, a) in r {
                    for (j, b) in &other.rows[*k] {
                        let p = a.mul_ref(b);
                        match acc.get_mut(j) {
                            Some(v) => *v = v.add_ref(&p),
                            None => {
                                acc.insert(*j, p);
                            }
                        }
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: other.ncols, rows }
    }

    /// Kronecker product self ⊗ other (other is the fast index).
    pub fn kron(&self, other: &Self) -> Self {
        let mut rows = Vec::with_capacity(self.nrows * other.nrows);
        for ra in &self.rows {
            for rb in &other.rows {
                let mut out = Vec::with_capacity(ra.len() * rb.len());
                for (ja, a) in ra {
                    for (jb, b) in rb {
                        let v = a.mul_ref(b);
                        if !v.is_zero() {
                            out.push((ja * other.ncols + jb, v));
                        }
                    }
                }
                rows.push(out);
            }
        }
        SparseMatrix { nrows: self.nrows * other.nrows, ncols: self.ncols * other.ncols, rows }
    }

    pub fn transpose(&self) -> Self {
        let mut rows: Vec<Vec<(usize, T)>> = vec![Vec::new(); self.ncols];
        for (i, j, v) in self.triplets() {
            rows[j].push((i, v.clone()));
        }
        SparseMatrix { nrows: self.ncols, ncols: self.nrows, rows }
    }

    /// Restriction to the given rows and columns (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut pos = vec![usize::MAX; self.ncols];
        for (k, c) in cols.iter().enumerate() {
            pos[*c] = k;
        }
        let out = rows
            .iter()
            .map(|r| {
                let mut v: Vec<(usize, T)> = self.rows[*r]
                    .iter()
                    .filter(|(j, _)| pos[*j] != usize::MAX)
                    .map(|(j, x)| (pos[*j], x.clone()))
                    .collect();
                v.sort_by_key(|e| e.0);
                v
            })
            .collect();
        SparseMatrix { nrows: rows.len(), ncols: cols.len(), rows: out }
    }

    /// Commutator self*other - other*self.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Inverse of an invertible diagonal matrix.
    pub fn diag_inverse(&self) -> Option<Self>
    where
        T: std::ops::Div<Output = T>,
    {
        if !self.is_diagonal() {
            return None;
        }
        let d = self.diag();
        if d.iter().any(Zero::is_zero) {
            return None;
        }
        Some(Self::diagonal(d.into_iter().map(|x| T::one() / x).collect()))
    }
}
