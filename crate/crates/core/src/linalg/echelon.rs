//! Incremental reduced row-echelon builder over an abstract field.
//!
//! Rows are kept sparse and fully reduced at all times: every stored row has
//! a unit pivot and zeros in every other pivot column. Reducing an incoming
//! row then needs only the row's own entries at pivot columns as
//! coefficients, which keeps the large, very sparse derivation systems cheap.

use std::collections::BTreeMap;

use crate::linalg::{Echelon, SparseRow};
use crate::scalar::Scalar;

/// Field operations with an explicit context (needed for runtime moduli).
pub(crate) trait Arith {
    type E: Clone;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E {
        self.sub(&self.zero(), a)
    }
}

pub(crate) struct ScalarArith<T>(std::marker::PhantomData<T>);

impl<T> ScalarArith<T> {
    pub(crate) fn new() -> Self {
        ScalarArith(std::marker::PhantomData)
    }
}

impl<T: Scalar> Arith for ScalarArith<T> {
    type E = T;
    fn zero(&self) -> T {
        T::zero()
    }
    fn one(&self) -> T {
        T::one()
    }
    fn is_zero(&self, a: &T) -> bool {
        a.is_zero()
    }
    fn mul(&self, a: &T, b: &T) -> T {
        a.clone() * b.clone()
    }
    fn sub(&self, a: &T, b: &T) -> T {
        a.clone() - b.clone()
    }
    fn inv(&self, a: &T) -> T {
        T::one() / a.clone()
    }
}

pub(crate) struct Builder<A: Arith> {
    arith: A,
    cols: usize,
    rows: BTreeMap<usize, Vec<(usize, A::E)>>,
    is_pivot: Vec<bool>,
    scratch: Vec<A::E>,
    marked: Vec<bool>,
}

impl<A: Arith> Builder<A> {
    pub(crate) fn new(arith: A, cols: usize) -> Self {
        let zero = arith.zero();
        Builder {
            arith,
            cols,
            rows: BTreeMap::new(),
            is_pivot: vec![false; cols],
            scratch: vec![zero; cols],
            marked: vec![false; cols],
        }
    }

    /// Adds a row (entries may be unsorted and may contain zeros). Returns
    /// true when the rank grew.
    pub(crate) fn insert(&mut self, row: &[(usize, A::E)]) -> bool {
        if self.rows.len() == self.cols {
            return false;
        }
        let ar = &self.arith;
        let mut touched: Vec<usize> = Vec::with_capacity(row.len() * 4);
        let mut coefs: Vec<(usize, A::E)> = Vec::new();
        for (c, v) in row {
            if ar.is_zero(v) {
                continue;
            }
            if self.is_pivot[*c] {
                coefs.push((*c, v.clone()));
            } else {
                if !self.marked[*c] {
                    self.marked[*c] = true;
                    touched.push(*c);
                    self.scratch[*c] = ar.zero();
                }
                self.scratch[*c] = ar.sub(&self.scratch[*c], &ar.neg(v));
            }
        }
        for (p, coef) in &coefs {
            for (c, w) in &self.rows[p] {
                if c == p {
                    continue;
                }
                if !self.marked[*c] {
                    self.marked[*c] = true;
                    touched.push(*c);
                    self.scratch[*c] = ar.zero();
                }
                self.scratch[*c] = ar.sub(&self.scratch[*c], &ar.mul(coef, w));
            }
        }
        touched.sort_unstable();
        let mut reduced: Vec<(usize, A::E)> = Vec::with_capacity(touched.len());
        for c in touched {
            self.marked[c] = false;
            let v = std::mem::replace(&mut self.scratch[c], ar.zero());
            if !ar.is_zero(&v) {
                reduced.push((c, v));
            }
        }
        let Some((pivot, lead)) = reduced.first().cloned() else {
            return false;
        };
        let inv = ar.inv(&lead);
        for (c, v) in reduced.iter_mut() {
            *v = if *c == pivot { ar.one() } else { ar.mul(v, &inv) };
        }
        for row in self.rows.values_mut() {
            if let Ok(pos) = row.binary_search_by_key(&pivot, |(c, _)| *c) {
                let factor = row[pos].1.clone();
                *row = axpy(ar, row, &factor, &reduced);
            }
        }
        self.is_pivot[pivot] = true;
        self.rows.insert(pivot, reduced);
        true
    }

    pub(crate) fn finish(self) -> Echelon<A::E> {
        let pivots = self.rows.keys().copied().collect();
        Echelon {
            cols: self.cols,
            pivots,
            rows: self.rows.into_values().collect(),
        }
    }
}

/// `row - factor * other` for sorted sparse rows.
fn axpy<A: Arith>(ar: &A, row: &[(usize, A::E)], factor: &A::E, other: &[(usize, A::E)]) -> Vec<(usize, A::E)> {
    let mut out = Vec::with_capacity(row.len() + other.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < other.len() {
        let take_row = j >= other.len() || (i < row.len() && row[i].0 < other[j].0);
        let take_other = i >= row.len() || (j < other.len() && other[j].0 < row[i].0);
        let (c, v) = if take_row {
            i += 1;
            (row[i - 1].0, row[i - 1].1.clone())
        } else if take_other {
            j += 1;
            (other[j - 1].0, ar.neg(&ar.mul(factor, &other[j - 1].1)))
        } else {
            i += 1;
            j += 1;
            (row[i - 1].0, ar.sub(&row[i - 1].1, &ar.mul(factor, &other[j - 1].1)))
        };
        if !ar.is_zero(&v) {
            out.push((c, v));
        }
    }
    out
}

pub(crate) fn echelon_with<A: Arith>(arith: A, cols: usize, rows: &[Vec<(usize, A::E)>]) -> Echelon<A::E> {
    let mut b = Builder::new(arith, cols);
    for r in rows {
        b.insert(r);
    }
    b.finish()
}

/// Canonical echelon basis of the nullspace of an echelon form.
pub(crate) fn nullspace_with<A: Arith>(arith: A, ech: &Echelon<A::E>) -> Echelon<A::E> {
    let cols = ech.cols;
    let mut is_pivot = vec![false; cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    let mut per_free: Vec<Vec<(usize, A::E)>> = vec![Vec::new(); cols];
    for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
        for (c, v) in row {
            if *c != p {
                per_free[*c].push((p, arith.neg(v)));
            }
        }
    }
    let mut b = Builder::new(arith, cols);
    for f in (0..cols).filter(|&f| !is_pivot[f]) {
        let mut v = std::mem::take(&mut per_free[f]);
        v.push((f, b.arith.one()));
        b.insert(&v);
    }
    b.finish()
}

pub(crate) fn field_echelon<T: Scalar>(cols: usize, rows: &[SparseRow<T>]) -> Echelon<T> {
    echelon_with(ScalarArith::<T>::new(), cols, rows)
}
