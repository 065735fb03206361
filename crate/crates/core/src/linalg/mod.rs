//! Exact dense linear algebra: row reduction, nullspaces and the lattice of
//! subspaces in canonical (reduced row-echelon) form.

pub(crate) mod echelon;
pub(crate) mod fraction_free;
pub mod modular;

use std::fmt;

use crate::error::Error;
use crate::scalar::Scalar;

/// Sparse row: `(column, value)` pairs. Used for system assembly.
pub type SparseRow<T> = Vec<(usize, T)>;

/// Reduced row-echelon form in sparse storage, rows ordered by pivot.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    pub cols: usize,
    pub pivots: Vec<usize>,
    pub rows: Vec<Vec<(usize, E)>>,
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, Error> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| T::from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<T> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.zip_with(rhs, |a, b| a.clone() - b.clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    /// `self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn rows_vec(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub(crate) fn sparse_rows(&self) -> Vec<SparseRow<T>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect()
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(ToString::to_string)
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Nullspace solving strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Strategy {
    Dense,
    Modular,
    /// Modular for algebras of dimension ≥ [`Solver::AUTO_MODULAR_DIM`],
    /// dense below.
    #[default]
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Solver {
    pub strategy: Strategy,
    pub prime_budget: usize,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            strategy: Strategy::Auto,
            prime_budget: 32,
        }
    }
}

impl Solver {
    pub const AUTO_MODULAR_DIM: usize = 20;

    pub fn dense() -> Self {
        Solver {
            strategy: Strategy::Dense,
            ..Default::default()
        }
    }

    pub fn modular() -> Self {
        Solver {
            strategy: Strategy::Modular,
            ..Default::default()
        }
    }

    /// Pins `Auto` down for an algebra of the given dimension.
    pub fn resolve(self, algebra_dim: usize) -> Self {
        let strategy = match self.strategy {
            Strategy::Auto if algebra_dim >= Self::AUTO_MODULAR_DIM => Strategy::Modular,
            Strategy::Auto => Strategy::Dense,
            s => s,
        };
        Solver { strategy, ..self }
    }
}

/// Canonical basis of a subspace of `T^n`: the nonzero rows of its reduced
/// row-echelon form. Two values are equal iff they span the same subspace.
#[derive(Clone, PartialEq)]
pub struct RowBasis<T> {
    ambient_dim: usize,
    vectors: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: fmt::Display> fmt::Debug for RowBasis<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RowBasis(dim {} in {}) [", self.vectors.len(), self.ambient_dim)?;
        for v in &self.vectors {
            let s: Vec<String> = v.iter().map(ToString::to_string).collect();
            write!(f, "({}) ", s.join(","))?;
        }
        write!(f, "]")
    }
}

/// Result of comparing two subspaces.
#[derive(Clone, PartialEq)]
pub struct SubspaceRelation<T> {
    pub equal: bool,
    pub a_in_b: bool,
    pub b_in_a: bool,
    pub intersection: RowBasis<T>,
    pub sum: RowBasis<T>,
}

impl<T: fmt::Display> fmt::Debug for SubspaceRelation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubspaceRelation")
            .field("equal", &self.equal)
            .field("a_in_b", &self.a_in_b)
            .field("b_in_a", &self.b_in_a)
            .field("intersection", &self.intersection)
            .field("sum", &self.sum)
            .finish()
    }
}

impl<T: Scalar> RowBasis<T> {
    pub fn zero(ambient_dim: usize) -> Self {
        RowBasis {
            ambient_dim,
            vectors: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let vectors = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![T::zero(); ambient_dim];
                v[i] = T::one();
                v
            })
            .collect();
        RowBasis {
            ambient_dim,
            vectors,
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Canonical basis of the span of arbitrary vectors.
    pub fn span<V: AsRef<[T]>>(ambient_dim: usize, vectors: &[V]) -> Result<Self, Error> {
        let mut rows = Vec::with_capacity(vectors.len());
        for v in vectors {
            let v = v.as_ref();
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.len(),
                });
            }
            rows.push(to_sparse(v));
        }
        Ok(Self::from_echelon(&T::echelon(ambient_dim, &rows)))
    }

    pub(crate) fn from_echelon(ech: &Echelon<T>) -> Self {
        let vectors = ech
            .rows
            .iter()
            .map(|r| {
                let mut v = vec![T::zero(); ech.cols];
                for (c, x) in r {
                    v[*c] = x.clone();
                }
                v
            })
            .collect();
        RowBasis {
            ambient_dim: ech.cols,
            vectors,
            pivots: ech.pivots.clone(),
        }
    }

    /// Trusts the caller that `vectors` already are in reduced echelon form.
    pub(crate) fn from_canonical(ambient_dim: usize, vectors: Vec<Vec<T>>, pivots: Vec<usize>) -> Self {
        debug_assert_eq!(vectors.len(), pivots.len());
        RowBasis {
            ambient_dim,
            vectors,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_zero(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Vec<T>] {
        &self.vectors
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, n: usize) -> Result<(), Error> {
        if n == self.ambient_dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: n,
            })
        }
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &[T]) -> Result<Option<Vec<T>>, Error> {
        self.check_len(v.len())?;
        let coords: Vec<T> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut residue = v.to_vec();
        for (c, b) in coords.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residue.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r = r.clone() - c.clone() * x.clone();
                }
            }
        }
        Ok(residue.iter().all(T::is_zero).then_some(coords))
    }

    pub fn contains(&self, v: &[T]) -> Result<bool, Error> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// `Σ coords[i] · vectors[i]`.
    pub fn combine(&self, coords: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o = o.clone() + c.clone() * x.clone();
                }
            }
        }
        out
    }

    pub fn sum(&self, other: &Self) -> Result<Self, Error> {
        other.check_len(self.ambient_dim)?;
        let all: Vec<&Vec<T>> = self.vectors.iter().chain(&other.vectors).collect();
        Self::span(self.ambient_dim, &all)
    }

    /// Linear forms cutting out this subspace (a basis of its annihilator).
    pub fn annihilator(&self) -> RowBasis<T> {
        let rows: Vec<SparseRow<T>> = self.vectors.iter().map(|v| to_sparse(v)).collect();
        nullspace_from_echelon(&T::echelon(self.ambient_dim, &rows))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self, Error> {
        other.check_len(self.ambient_dim)?;
        let rows: Vec<SparseRow<T>> = self
            .annihilator()
            .vectors
            .iter()
            .chain(other.annihilator().vectors.iter())
            .map(|v| to_sparse(v))
            .collect();
        Ok(nullspace_from_echelon(&T::echelon(self.ambient_dim, &rows)))
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool, Error> {
        other.check_len(self.ambient_dim)?;
        for v in &self.vectors {
            if !other.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `self ⊕ other` inside `T^(n₁ + n₂)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n1, n2) = (self.ambient_dim, other.ambient_dim);
        let mut vectors = Vec::with_capacity(self.dim() + other.dim());
        for v in &self.vectors {
            let mut w = v.clone();
            w.resize(n1 + n2, T::zero());
            vectors.push(w);
        }
        for v in &other.vectors {
            let mut w = vec![T::zero(); n1];
            w.extend(v.iter().cloned());
            vectors.push(w);
        }
        let pivots = self.pivots.iter().copied().chain(other.pivots.iter().map(|p| p + n1)).collect();
        RowBasis::from_canonical(n1 + n2, vectors, pivots)
    }

    pub fn relation(&self, other: &Self) -> Result<SubspaceRelation<T>, Error> {
        subspace_ops(self, other)
    }
}

pub(crate) fn to_sparse<T: Scalar>(v: &[T]) -> SparseRow<T> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub(crate) fn nullspace_from_echelon<T: Scalar>(ech: &Echelon<T>) -> RowBasis<T> {
    let null = echelon::nullspace_with(echelon::ScalarArith::<T>::new(), ech);
    // The nullspace vectors are re-reduced over T itself, so for the
    // rationals this goes through the generic field path; sizes are small.
    RowBasis::from_echelon(&null)
}

/// Output of [`rref`].
#[derive(Clone, PartialEq)]
pub struct Rref<T> {
    pub reduced: Matrix<T>,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl<T: fmt::Display> fmt::Debug for Rref<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Rref")
            .field("reduced", &self.reduced)
            .field("rank", &self.rank)
            .field("pivot_cols", &self.pivot_cols)
            .finish()
    }
}

/// Reduced row-echelon form; zero rows are placed at the bottom.
pub fn rref<T: Scalar>(m: &Matrix<T>) -> Rref<T> {
    let ech = T::echelon(m.ncols(), &m.sparse_rows());
    let mut reduced = Matrix::zeros(m.nrows(), m.ncols());
    for (i, row) in ech.rows.iter().enumerate() {
        for (c, v) in row {
            reduced[(i, *c)] = v.clone();
        }
    }
    Rref {
        reduced,
        rank: ech.pivots.len(),
        pivot_cols: ech.pivots,
    }
}

/// Canonical basis of `{x : m·x = 0}`.
pub fn nullspace<T: Scalar>(m: &Matrix<T>, solver: &Solver) -> Result<RowBasis<T>, Error> {
    solve_nullspace(m.ncols(), &m.sparse_rows(), solver)
}

/// Nullspace of a system given as sparse rows over `cols` unknowns.
pub(crate) fn solve_nullspace<T: Scalar>(
    cols: usize,
    rows: &[SparseRow<T>],
    solver: &Solver,
) -> Result<RowBasis<T>, Error> {
    T::nullspace(cols, rows, solver)
}

pub fn subspace_ops<T: Scalar>(a: &RowBasis<T>, b: &RowBasis<T>) -> Result<SubspaceRelation<T>, Error> {
    b.check_len(a.ambient_dim)?;
    let sum = a.sum(b)?;
    let intersection = a.intersection(b)?;
    Ok(SubspaceRelation {
        equal: a == b,
        a_in_b: sum.dim() == b.dim(),
        b_in_a: sum.dim() == a.dim(),
        intersection,
        sum,
    })
}

pub fn contains_vector<T: Scalar>(a: &RowBasis<T>, v: &[T]) -> Result<bool, Error> {
    a.contains(v)
}
