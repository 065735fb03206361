//! Derivation, triple-derivation and inner-derivation spaces of Jordan
//! algebras, plus the commutator realizations `a ↦ [a, d]` coming from an
//! associative envelope.
//!
//! Every space is the nullspace of a linear system in the `n²` entries of an
//! unknown operator `D`, flattened row-major (`D[r][c]` at index `r·n + c`,
//! where column `c` holds the image of `e_c`). Equations are emitted in a
//! fixed order so results are reproducible.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::algebra::{accumulate, sparse_to_dense, JordanAlgebra, LinearOperator, SparseVec, StructureTable};
use crate::constructors::AssocContext;
use crate::error::Error;
use crate::linalg::{self, Matrix, RowBasis, Solver, SparseRow};
use crate::scalar::Scalar;
use crate::Q;

/// Subspace of `End(A)` for an algebra `A` of dimension `algebra_dim`,
/// stored as a canonical basis of flattened operator matrices.
#[derive(Clone, PartialEq)]
pub struct OperatorSubspace<T> {
    algebra_dim: usize,
    basis: RowBasis<T>,
}

impl<T: std::fmt::Display> std::fmt::Debug for OperatorSubspace<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "OperatorSubspace(n = {}) {:?}", self.algebra_dim, self.basis)
    }
}

impl<T: Scalar> OperatorSubspace<T> {
    pub fn new(algebra_dim: usize, basis: RowBasis<T>) -> Result<Self, Error> {
        if basis.ambient_dim() != algebra_dim * algebra_dim {
            return Err(Error::DimensionMismatch {
                expected: algebra_dim * algebra_dim,
                found: basis.ambient_dim(),
            });
        }
        Ok(OperatorSubspace { algebra_dim, basis })
    }

    pub fn zero(algebra_dim: usize) -> Self {
        OperatorSubspace {
            algebra_dim,
            basis: RowBasis::zero(algebra_dim * algebra_dim),
        }
    }

    pub fn full(algebra_dim: usize) -> Self {
        OperatorSubspace {
            algebra_dim,
            basis: RowBasis::full(algebra_dim * algebra_dim),
        }
    }

    /// Canonical span of a list of `n × n` operators.
    pub fn span(algebra_dim: usize, ops: &[LinearOperator<T>]) -> Result<Self, Error> {
        let flat: Vec<&[T]> = ops.iter().map(Matrix::as_slice).collect();
        Self::new(algebra_dim, RowBasis::span(algebra_dim * algebra_dim, &flat)?)
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn basis(&self) -> &RowBasis<T> {
        &self.basis
    }

    pub fn operator(&self, i: usize) -> LinearOperator<T> {
        let n = self.algebra_dim;
        Matrix::from_vec(n, n, self.basis.vectors()[i].clone()).expect("flattened operator")
    }

    pub fn operators(&self) -> Vec<LinearOperator<T>> {
        (0..self.dim()).map(|i| self.operator(i)).collect()
    }

    pub fn contains(&self, op: &LinearOperator<T>) -> Result<bool, Error> {
        self.basis.contains(op.as_slice())
    }

    pub fn coordinates(&self, op: &LinearOperator<T>) -> Result<Option<Vec<T>>, Error> {
        self.basis.coordinates(op.as_slice())
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool, Error> {
        self.basis.is_subspace_of(&other.basis)
    }

    pub fn sum(&self, other: &Self) -> Result<Self, Error> {
        Self::new(self.algebra_dim, self.basis.sum(&other.basis)?)
    }

    /// Block-diagonal embedding `D₁ ⊕ D₂` of two operator spaces.
    pub fn block_sum(&self, other: &Self) -> Self {
        let (n1, n2) = (self.algebra_dim, other.algebra_dim);
        let n = n1 + n2;
        let embed = |op: &LinearOperator<T>, off: usize| {
            let mut m = Matrix::zeros(n, n);
            for r in 0..op.nrows() {
                for c in 0..op.ncols() {
                    m[(off + r, off + c)] = op[(r, c)].clone();
                }
            }
            m
        };
        let ops: Vec<_> = self
            .operators()
            .iter()
            .map(|op| embed(op, 0))
            .chain(other.operators().iter().map(|op| embed(op, n1)))
            .collect();
        Self::span(n, &ops).expect("block operators have matching size")
    }
}

fn push_rows<T: Scalar>(out: &mut Vec<SparseRow<T>>, per_component: BTreeMap<usize, SparseRow<T>>) {
    out.extend(per_component.into_values().filter(|r| !r.is_empty()));
}

/// Rows of `D(e_i e_j) − D(e_i) e_j − e_i D(e_j) = 0` over the given pairs.
pub(crate) fn leibniz_system<T: Scalar>(
    t: &StructureTable<T>,
    pairs: impl Iterator<Item = (usize, usize)>,
) -> Vec<SparseRow<T>> {
    let n = t.dim();
    let mut rows = Vec::new();
    for (i, j) in pairs {
        let mut per_k: BTreeMap<usize, SparseRow<T>> = BTreeMap::new();
        for (m, v) in t.basis_product(i, j) {
            for k in 0..n {
                per_k.entry(k).or_default().push((k * n + m, v.clone()));
            }
        }
        for r in 0..n {
            for (k, v) in t.basis_product(r, j) {
                per_k.entry(*k).or_default().push((r * n + i, -v.clone()));
            }
            for (k, v) in t.basis_product(i, r) {
                per_k.entry(*k).or_default().push((r * n + j, -v.clone()));
            }
        }
        push_rows(&mut rows, per_k);
    }
    rows
}

/// Rows of `D((e_i e_j) e_k) = (D e_i · e_j) e_k + (e_i · D e_j) e_k + (e_i e_j) · D e_k`.
pub(crate) fn triple_system<T: Scalar>(
    t: &StructureTable<T>,
    pairs: impl Iterator<Item = (usize, usize)>,
) -> Vec<SparseRow<T>> {
    let n = t.dim();
    // triple[(a*n + b)*n + c] = (e_a e_b) e_c
    let mut triple: Vec<SparseVec<T>> = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            let ab = t.basis_product(a, b);
            for c in 0..n {
                triple.push(t.mul_basis_right(ab, c));
            }
        }
    }
    let tr = |a: usize, b: usize, c: usize| &triple[(a * n + b) * n + c];
    let mut rows = Vec::new();
    for (i, j) in pairs {
        for k in 0..n {
            let mut per_o: BTreeMap<usize, SparseRow<T>> = BTreeMap::new();
            for (m, v) in tr(i, j, k) {
                for o in 0..n {
                    per_o.entry(o).or_default().push((o * n + m, v.clone()));
                }
            }
            for r in 0..n {
                for (o, v) in tr(r, j, k) {
                    per_o.entry(*o).or_default().push((r * n + i, -v.clone()));
                }
                for (o, v) in tr(i, r, k) {
                    per_o.entry(*o).or_default().push((r * n + j, -v.clone()));
                }
                for (o, v) in tr(i, j, r) {
                    per_o.entry(*o).or_default().push((r * n + k, -v.clone()));
                }
            }
            push_rows(&mut rows, per_o);
        }
    }
    rows
}

pub(crate) fn upper_pairs(n: usize, strict: bool) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| ((if strict { i + 1 } else { i })..n).map(move |j| (i, j)))
}

fn solve<T: Scalar>(n: usize, rows: &[SparseRow<T>], solver: &Solver) -> Result<OperatorSubspace<T>, Error> {
    let basis = linalg::solve_nullspace(n * n, rows, &solver.resolve(n))?;
    OperatorSubspace::new(n, basis)
}

/// `Der(J)`.
pub fn der<T: Scalar>(j: &JordanAlgebra<T>, solver: &Solver) -> Result<OperatorSubspace<T>, Error> {
    let n = j.dim();
    let rows = leibniz_system(j.table(), upper_pairs(n, false));
    solve(n, &rows, solver)
}

/// `TDer(J)`: operators satisfying the Leibniz rule on `(x∘y)∘z`.
pub fn tder<T: Scalar>(j: &JordanAlgebra<T>, solver: &Solver) -> Result<OperatorSubspace<T>, Error> {
    let n = j.dim();
    let rows = triple_system(j.table(), upper_pairs(n, false));
    solve(n, &rows, solver)
}

/// `Inn(J) = span{[L_{e_i}, L_{e_j}] : i < j}`.
pub fn inn<T: Scalar>(j: &JordanAlgebra<T>) -> Result<OperatorSubspace<T>, Error> {
    let n = j.dim();
    let mults: Vec<LinearOperator<T>> = (0..n)
        .map(|i| j.left_mult(&j.basis_vector(i)))
        .collect::<Result<_, _>>()?;
    let ops: Vec<_> = upper_pairs(n, true)
        .map(|(a, b)| mults[a].commutator(&mults[b]))
        .collect();
    OperatorSubspace::span(n, &ops)
}

/// Whether `op` satisfies `D(xy) = D(x)y + xD(y)` on all basis pairs.
pub fn is_derivation<T: Scalar>(t: &StructureTable<T>, op: &LinearOperator<T>) -> bool {
    let n = t.dim();
    let column = |c: usize| -> SparseVec<T> {
        (0..n)
            .filter(|&r| !op[(r, c)].is_zero())
            .map(|r| (r, op[(r, c)].clone()))
            .collect()
    };
    let apply = |v: &[(usize, T)]| -> SparseVec<T> {
        let mut acc = BTreeMap::new();
        for (c, x) in v {
            for (r, y) in column(*c) {
                accumulate(&mut acc, r, x.clone() * y);
            }
        }
        acc.into_iter().collect()
    };
    upper_pairs(n, false).all(|(i, j)| {
        let lhs = apply(t.basis_product(i, j));
        let mut acc: BTreeMap<usize, T> = lhs.into_iter().collect();
        for (k, v) in t.mul_basis_right(&column(i), j) {
            accumulate(&mut acc, k, -v);
        }
        for (k, v) in t.mul_basis_left(i, &column(j)) {
            accumulate(&mut acc, k, -v);
        }
        acc.is_empty()
    })
}

/// The operator `a ↦ [a, d] = ad − da` on the Jordan algebra of `ctx`.
/// With an involution present, `d` must be skew.
pub fn d_assoc<T: Scalar>(ctx: &AssocContext<T>, d: &[T]) -> Result<LinearOperator<T>, Error> {
    let m = ctx.assoc_table().dim();
    if d.len() != m {
        return Err(Error::DimensionMismatch { expected: m, found: d.len() });
    }
    if let Some(p) = ctx.involution() {
        let pd = p.mul_vec(d);
        if pd.iter().zip(d).any(|(a, b)| !(a.clone() + b.clone()).is_zero()) {
            return Err(Error::NotSkew);
        }
    }
    let emb = ctx.jordan_embedding();
    let coords = ctx.jordan_coordinates();
    let n = emb.ncols();
    let sd = linalg::to_sparse(d);
    let at = ctx.assoc_table();
    let mut op = Matrix::zeros(n, n);
    for i in 0..n {
        let a: SparseVec<T> = (0..m)
            .filter(|&r| !emb[(r, i)].is_zero())
            .map(|r| (r, emb[(r, i)].clone()))
            .collect();
        let comm = crate::algebra::sparse_sub(&at.mul_sparse(&a, &sd), &at.mul_sparse(&sd, &a));
        let y = coords.mul_vec(&sparse_to_dense(&comm, m));
        for (r, v) in y.into_iter().enumerate() {
            op[(r, i)] = v;
        }
    }
    Ok(op)
}

/// Span of all admissible `D_d`: `d` ranging over the associative algebra,
/// or over its skew elements when an involution is present.
pub fn dd_span<T: Scalar>(ctx: &AssocContext<T>) -> Result<OperatorSubspace<T>, Error> {
    let m = ctx.assoc_table().dim();
    let elements: Vec<Vec<T>> = match ctx.involution() {
        None => (0..m).map(|i| unit_vector(m, i)).collect(),
        Some(_) => ctx.skew_basis().vectors().to_vec(),
    };
    let ops = elements
        .iter()
        .map(|d| d_assoc(ctx, d))
        .collect::<Result<Vec<_>, _>>()?;
    OperatorSubspace::span(ctx.jordan_embedding().ncols(), &ops)
}

pub(crate) fn unit_vector<T: Scalar>(n: usize, i: usize) -> Vec<T> {
    let mut v = vec![T::zero(); n];
    v[i] = T::one();
    v
}

fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Q::new(n, d))
}

/// Generators of the proper three-dimensional ideal of the derivation
/// algebra of a five-dimensional spin factor with parameters `alpha`, as
/// `4 × 4` matrices in the realization `E_ij − (α_j/α_i)E_ji`.
///
/// With `s = √(α₄α₁/α₂α₃)` and `t = √(α₃α₁/α₂α₄)` the generators are
/// `−s·b₁₂ + b₃₄`, `s·b₁₃ + b₂₄`, `−t·b₁₄ + b₂₃`. Both roots must be
/// rational.
pub fn so4_split_ideal(alpha: &[Q]) -> Result<Vec<Matrix<Q>>, Error> {
    if alpha.len() != 4 {
        return Err(Error::BadParameter(format!("expected 4 parameters, got {}", alpha.len())));
    }
    if let Some(index) = alpha.iter().position(Zero::is_zero) {
        return Err(Error::ZeroParameter { index });
    }
    let a = |i: usize| alpha[i - 1].clone();
    let s_sq = a(4) * a(1) / (a(2) * a(3));
    let t_sq = a(3) * a(1) / (a(2) * a(4));
    let s = rational_sqrt(&s_sq).ok_or_else(|| Error::IrrationalSurd(format!("sqrt({s_sq})")))?;
    let t = rational_sqrt(&t_sq).ok_or_else(|| Error::IrrationalSurd(format!("sqrt({t_sq})")))?;
    let b = |i: usize, j: usize| {
        let mut m = Matrix::<Q>::zeros(4, 4);
        m[(i - 1, j - 1)] = Q::one();
        m[(j - 1, i - 1)] = -(a(j) / a(i));
        m
    };
    Ok(vec![
        b(1, 2).scale(&-s.clone()).add(&b(3, 4)),
        b(1, 3).scale(&s).add(&b(2, 4)),
        b(1, 4).scale(&-t).add(&b(2, 3)),
    ])
}
