//! Builders for the standard families: matrix Jordan algebras with their
//! associative envelopes, spin factors, the Albert algebra over the
//! octonions, small fixtures, and the Lie algebras `so_α`, `gl_k`, `so_k`.

use crate::algebra::{sparse_to_dense, JordanAlgebra, SparseVec, StructureTable};
use crate::derivations::{unit_vector, OperatorSubspace};
use crate::error::{Error, ValidationKind};
use crate::lie::LieTable;
use crate::linalg::{self, Matrix, RowBasis, Solver};
use crate::scalar::Scalar;

/// Associative algebra realizing a Jordan algebra under `½(xy + yx)`,
/// optionally with an involution whose symmetric part carries the Jordan
/// algebra.
#[derive(Clone, PartialEq)]
pub struct AssocContext<T> {
    assoc_table: StructureTable<T>,
    involution: Option<Matrix<T>>,
    /// Columns are assoc coordinates of the Jordan basis vectors.
    jordan_embedding: Matrix<T>,
    /// Left inverse of the embedding on its image.
    jordan_coordinates: Matrix<T>,
}

impl<T: std::fmt::Display + std::fmt::Debug> std::fmt::Debug for AssocContext<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AssocContext")
            .field("assoc_table", &self.assoc_table)
            .field("involution", &self.involution)
            .field("jordan_embedding", &self.jordan_embedding)
            .finish()
    }
}

impl<T: Scalar> AssocContext<T> {
    pub fn new(
        assoc_table: StructureTable<T>,
        involution: Option<Matrix<T>>,
        jordan_embedding: Matrix<T>,
        jordan_coordinates: Matrix<T>,
    ) -> Result<Self, Error> {
        let m = assoc_table.dim();
        let n = jordan_embedding.ncols();
        if jordan_embedding.nrows() != m {
            return Err(Error::DimensionMismatch { expected: m, found: jordan_embedding.nrows() });
        }
        if (jordan_coordinates.nrows(), jordan_coordinates.ncols()) != (n, m) {
            return Err(Error::DimensionMismatch { expected: n * m, found: jordan_coordinates.as_slice().len() });
        }
        if let Some(p) = &involution {
            if (p.nrows(), p.ncols()) != (m, m) {
                return Err(Error::DimensionMismatch { expected: m * m, found: p.as_slice().len() });
            }
        }
        let ctx = AssocContext { assoc_table, involution, jordan_embedding, jordan_coordinates };
        ctx.check()?;
        Ok(ctx)
    }

    pub fn assoc_table(&self) -> &StructureTable<T> {
        &self.assoc_table
    }

    pub fn involution(&self) -> Option<&Matrix<T>> {
        self.involution.as_ref()
    }

    pub fn jordan_embedding(&self) -> &Matrix<T> {
        &self.jordan_embedding
    }

    pub fn jordan_coordinates(&self) -> &Matrix<T> {
        &self.jordan_coordinates
    }

    /// `{d : P(d) = −d}`; the whole algebra when there is no involution.
    pub fn skew_basis(&self) -> RowBasis<T> {
        let m = self.assoc_table.dim();
        match &self.involution {
            None => RowBasis::full(m),
            Some(p) => linalg::nullspace(&p.add(&Matrix::identity(m)), &Solver::dense())
                .expect("dense nullspace"),
        }
    }

    fn embed(&self, i: usize) -> SparseVec<T> {
        let e = &self.jordan_embedding;
        (0..e.nrows())
            .filter(|&r| !e[(r, i)].is_zero())
            .map(|r| (r, e[(r, i)].clone()))
            .collect()
    }

    /// Jordan structure table induced by `½(xy + yx)` on the embedded basis.
    pub fn jordan_table(&self) -> StructureTable<T> {
        let n = self.jordan_embedding.ncols();
        let m = self.assoc_table.dim();
        let half = T::half();
        let cols: Vec<SparseVec<T>> = (0..n).map(|i| self.embed(i)).collect();
        StructureTable::from_fn(n, |i, j| {
            let at = &self.assoc_table;
            let mut sym = sparse_to_dense(&at.mul_sparse(&cols[i], &cols[j]), m);
            for (k, v) in at.mul_sparse(&cols[j], &cols[i]) {
                sym[k] = sym[k].clone() + v;
            }
            let y = self.jordan_coordinates.mul_vec(&sym);
            y.into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(k, v)| (k, v * half.clone()))
                .collect()
        })
    }

    /// Associativity, involution laws, and that the Jordan basis embeds
    /// faithfully into a subspace closed under `½(xy + yx)`.
    pub fn check(&self) -> Result<(), Error> {
        let t = &self.assoc_table;
        let m = t.dim();
        if let Some((i, j, k)) = t.first_nonassociative_triple() {
            return Err(Error::Validation { kind: ValidationKind::NotAssociative, indices: vec![i, j, k] });
        }
        if let Some(p) = &self.involution {
            if p.mul(p) != Matrix::identity(m) {
                return Err(Error::Validation { kind: ValidationKind::BadInvolution, indices: vec![] });
            }
            let image = |i: usize| linalg::to_sparse(&p.mul_vec(&unit_vector(m, i)));
            for i in 0..m {
                for j in 0..m {
                    let lhs = p.mul_vec(&sparse_to_dense(t.basis_product(i, j), m));
                    let rhs = sparse_to_dense(&t.mul_sparse(&image(j), &image(i)), m);
                    if lhs != rhs {
                        return Err(Error::Validation { kind: ValidationKind::BadInvolution, indices: vec![i, j] });
                    }
                }
            }
        }
        let n = self.jordan_embedding.ncols();
        if self.jordan_coordinates.mul(&self.jordan_embedding) != Matrix::identity(n) {
            return Err(Error::BadParameter("coordinates are not a left inverse of the embedding".into()));
        }
        // Image closed under the symmetrized product: re-embedding the
        // coordinates must reproduce the product exactly.
        let image = RowBasis::span(m, &self.jordan_embedding.transpose().rows_vec())?;
        for i in 0..n {
            for j in i..n {
                let (a, b) = (self.embed(i), self.embed(j));
                let mut sym = sparse_to_dense(&t.mul_sparse(&a, &b), m);
                for (k, v) in t.mul_sparse(&b, &a) {
                    sym[k] = sym[k].clone() + v;
                }
                if !image.contains(&sym)? {
                    return Err(Error::NotClosed(i, j));
                }
            }
        }
        Ok(())
    }
}

/// `M_k` on the matrix units `E_pq` at index `p·k + q`.
pub fn matrix_algebra<T: Scalar>(k: usize) -> StructureTable<T> {
    let names = (0..k * k).map(|i| format!("E{}{}", i / k + 1, i % k + 1)).collect();
    StructureTable::from_fn(k * k, |i, j| {
        let (p, q) = (i / k, i % k);
        let (r, s) = (j / k, j % k);
        if q == r { vec![(p * k + s, T::one())] } else { vec![] }
    })
    .with_names(names)
}

/// `M_k` under `½(ab + ba)`, with `M_k` itself as associative envelope.
pub fn full_matrix_jordan<T: Scalar>(k: usize) -> Result<(JordanAlgebra<T>, AssocContext<T>), Error> {
    if k == 0 {
        return Err(Error::BadParameter("matrix size must be at least 1".into()));
    }
    let assoc = matrix_algebra::<T>(k);
    let names = assoc.basis_names().map(<[String]>::to_vec);
    let id = Matrix::identity(k * k);
    let ctx = AssocContext::new(assoc, None, id.clone(), id)?;
    let mut table = ctx.jordan_table();
    if let Some(names) = names {
        table = table.with_names(names);
    }
    Ok((JordanAlgebra::new(table)?, ctx))
}

/// Transpose on `M_k`: `E_pq ↦ E_qp`.
pub fn transpose_involution<T: Scalar>(k: usize) -> Matrix<T> {
    let mut p = Matrix::zeros(k * k, k * k);
    for a in 0..k {
        for b in 0..k {
            p[(b * k + a, a * k + b)] = T::one();
        }
    }
    p
}

/// Symmetric `k × k` matrices under `½(ab + ba)` on the basis
/// `S_pp = E_pp`, `S_pq = E_pq + E_qp` (`p < q`), row-major over `p ≤ q`.
pub fn hermitian_jordan<T: Scalar>(k: usize) -> Result<(JordanAlgebra<T>, AssocContext<T>), Error> {
    if k < 2 {
        return Err(Error::BadParameter("symmetric matrices need size at least 2".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|p| (p..k).map(move |q| (p, q))).collect();
    let n = pairs.len();
    let mut emb = Matrix::zeros(k * k, n);
    let mut coords = Matrix::zeros(n, k * k);
    for (c, &(p, q)) in pairs.iter().enumerate() {
        emb[(p * k + q, c)] = T::one();
        emb[(q * k + p, c)] = T::one();
        coords[(c, p * k + q)] = T::one();
    }
    let ctx = AssocContext::new(matrix_algebra(k), Some(transpose_involution(k)), emb, coords)?;
    let names = pairs.iter().map(|(p, q)| format!("S{}{}", p + 1, q + 1)).collect();
    let table = ctx.jordan_table().with_names(names);
    Ok((JordanAlgebra::new(table)?, ctx))
}

/// Basis `(1, u₁, …, u_n)` with `u_i² = α_i·1` and `u_i u_j = 0` for `i ≠ j`.
pub fn spin_factor<T: Scalar>(alpha: &[T]) -> Result<JordanAlgebra<T>, Error> {
    if let Some(index) = alpha.iter().position(T::is_zero) {
        return Err(Error::ZeroParameter { index });
    }
    let n = alpha.len() + 1;
    let names = std::iter::once("1".to_string())
        .chain((1..n).map(|i| format!("u{i}")))
        .collect();
    let table = StructureTable::from_fn(n, |i, j| match (i, j) {
        (0, x) | (x, 0) => vec![(x, T::one())],
        (a, b) if a == b => vec![(0, alpha[a - 1].clone())],
        _ => vec![],
    })
    .with_names(names);
    JordanAlgebra::new(table)
}

/// Two-dimensional nilpotent algebra: `e₁² = e₂² = e₁ + e₂`,
/// `e₁e₂ = −e₁ − e₂`.
pub fn nilpotent_two_dim<T: Scalar>() -> JordanAlgebra<T> {
    let one = T::one;
    let table = StructureTable::from_fn(2, |i, j| {
        if i == j {
            vec![(0, one()), (1, one())]
        } else {
            vec![(0, -one()), (1, -one())]
        }
    })
    .with_names(vec!["e1".into(), "e2".into()]);
    JordanAlgebra::new(table).expect("nilpotent table is Jordan")
}

/// Centerless, non-unital two-dimensional algebra: `e·e = e`, `e·v = ½v`,
/// `v·v = 0`.
pub fn halfspin<T: Scalar>() -> JordanAlgebra<T> {
    let table = StructureTable::from_fn(2, |i, j| match (i, j) {
        (0, 0) => vec![(0, T::one())],
        (0, 1) | (1, 0) => vec![(1, T::half())],
        _ => vec![],
    })
    .with_names(vec!["e".into(), "v".into()]);
    JordanAlgebra::new(table).expect("halfspin table is Jordan")
}

/// `e_i · e_j = sign · e_index` for the octonion units `e₀ = 1, e₁, …, e₇`,
/// obtained by Cayley–Dickson doubling of the quaternions `(1, i, j, k)`
/// with `(a, b)(c, d) = (ac − d̄b, da + bc̄)` and `e₄ = (0, 1)`.
pub const OCTONION_TABLE: [[(i8, u8); 8]; 8] = [
    [(1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)],
    [(1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)],
    [(1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)],
    [(1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)],
];

/// The octonions as a structure table.
pub fn octonions<T: Scalar>() -> StructureTable<T> {
    StructureTable::from_fn(8, |i, j| {
        let (s, k) = OCTONION_TABLE[i][j];
        vec![(k as usize, T::from_i64(s as i64))]
    })
}

/// Conjugation sign of an octonion unit.
fn conj_sign(u: usize) -> i64 {
    if u == 0 { 1 } else { -1 }
}

/// Coordinates of a Cayley–Dickson product of two vectors of length `2^m`
/// over the integers, starting from the reals.
pub fn cayley_dickson_mul(x: &[i64], y: &[i64]) -> Vec<i64> {
    let n = x.len();
    if n == 1 {
        return vec![x[0] * y[0]];
    }
    let h = n / 2;
    let (a, b) = x.split_at(h);
    let (c, d) = y.split_at(h);
    let conj = |v: &[i64]| -> Vec<i64> {
        v.iter().enumerate().map(|(i, &t)| if i == 0 { t } else { -t }).collect()
    };
    let sub = |u: Vec<i64>, v: Vec<i64>| -> Vec<i64> { u.iter().zip(&v).map(|(p, q)| p - q).collect() };
    let add = |u: Vec<i64>, v: Vec<i64>| -> Vec<i64> { u.iter().zip(&v).map(|(p, q)| p + q).collect() };
    let left = sub(cayley_dickson_mul(a, c), cayley_dickson_mul(&conj(d), b));
    let right = add(cayley_dickson_mul(d, a), cayley_dickson_mul(b, &conj(c)));
    left.into_iter().chain(right).collect()
}

/// Pairs `(p, q)`, `p < q`, indexing the off-diagonal octonion slots.
const ALBERT_PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

/// 3×3 Hermitian octonion matrices under `½(XY + YX)`. Basis: `E₁₁, E₂₂,
/// E₃₃`, then for each `(p, q) ∈ {(1,2), (1,3), (2,3)}` the eight matrices
/// with `e_u` at `(p, q)` and `ē_u` at `(q, p)`.
pub fn albert_algebra<T: Scalar>() -> JordanAlgebra<T> {
    // Each basis element as entries (row, col, unit, sign).
    let mut basis: Vec<Vec<(usize, usize, usize, i64)>> = (0..3).map(|p| vec![(p, p, 0, 1)]).collect();
    let mut names: Vec<String> = (1..=3).map(|p| format!("E{p}{p}")).collect();
    for &(p, q) in &ALBERT_PAIRS {
        for u in 0..8 {
            basis.push(vec![(p, q, u, 1), (q, p, u, conj_sign(u))]);
            names.push(format!("x{}{}.e{u}", p + 1, q + 1));
        }
    }
    let index = |p: usize, q: usize, u: usize| -> Option<usize> {
        if p == q {
            (u == 0).then_some(p)
        } else {
            let slot = ALBERT_PAIRS.iter().position(|&pq| pq == (p, q))?;
            Some(3 + slot * 8 + u)
        }
    };
    let half = T::half();
    let table = StructureTable::from_fn(27, |i, j| {
        // entry[(p, r, m)] of XY + YX
        let mut entry = std::collections::BTreeMap::<(usize, usize, usize), i64>::new();
        for (x, y) in [(&basis[i], &basis[j]), (&basis[j], &basis[i])] {
            for &(p, q, u, s) in x {
                for &(q2, r, w, t) in y {
                    if q != q2 {
                        continue;
                    }
                    let (sg, m) = OCTONION_TABLE[u][w];
                    *entry.entry((p, r, m as usize)).or_default() += s * t * sg as i64;
                }
            }
        }
        entry
            .into_iter()
            // The lower triangle mirrors the upper one; read p ≤ r only.
            .filter(|&((p, r, _), v)| v != 0 && p <= r)
            .map(|((p, r, m), v)| {
                let k = index(p, r, m).expect("diagonal of a Jordan product is real");
                (k, T::from_i64(v) * half.clone())
            })
            .collect()
    })
    .with_names(names);
    JordanAlgebra::new(table).expect("Albert table is Jordan")
}

/// `so_α(n)`: operators `b_ij = E_ij − (α_j/α_i)E_ji`, `i < j`, in
/// lexicographic order, under the commutator.
pub fn so_alpha<T: Scalar>(n: usize, alpha: &[T]) -> Result<LieTable<T>, Error> {
    if n < 2 {
        return Err(Error::BadParameter("so_alpha needs n >= 2".into()));
    }
    if alpha.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: alpha.len() });
    }
    if let Some(index) = alpha.iter().position(T::is_zero) {
        return Err(Error::ZeroParameter { index });
    }
    let ops = so_alpha_operators(alpha);
    LieTable::from_operators(&OperatorSubspace::span(n, &ops)?)
}

/// The matrices `b_ij`, `i < j`, in lexicographic order.
pub fn so_alpha_operators<T: Scalar>(alpha: &[T]) -> Vec<Matrix<T>> {
    let n = alpha.len();
    let mut ops = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut m = Matrix::zeros(n, n);
            m[(i, j)] = T::one();
            m[(j, i)] = -(alpha[j].clone() / alpha[i].clone());
            ops.push(m);
        }
    }
    ops
}

/// `gl_k`: all `k × k` matrices under the commutator.
pub fn assoc_lie<T: Scalar>(k: usize) -> Result<LieTable<T>, Error> {
    if k == 0 {
        return Err(Error::BadParameter("matrix size must be at least 1".into()));
    }
    LieTable::from_operators(&OperatorSubspace::full(k))
}

/// `so_k`: skew-symmetric `k × k` matrices under the commutator.
pub fn skew_lie<T: Scalar>(k: usize) -> Result<LieTable<T>, Error> {
    if k < 2 {
        return Err(Error::BadParameter("skew matrices need size at least 2".into()));
    }
    let ones = vec![T::one(); k];
    LieTable::from_operators(&OperatorSubspace::span(k, &so_alpha_operators(&ones))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn unit_octonion(i: usize) -> Vec<i64> {
        let mut v = vec![0; 8];
        v[i] = 1;
        v
    }

    #[test]
    fn octonion_table_matches_doubling() {
        for (i, row) in OCTONION_TABLE.iter().enumerate() {
            for (j, &(s, k)) in row.iter().enumerate() {
                let p = cayley_dickson_mul(&unit_octonion(i), &unit_octonion(j));
                let mut expect = vec![0; 8];
                expect[k as usize] = s as i64;
                assert_eq!(p, expect, "e{i} e{j}");
            }
        }
    }

    #[test]
    fn octonion_laws() {
        let o = octonions::<Q>();
        let e = |i: usize| -> Vec<Q> { unit_vector(8, i) };
        for i in 1..8 {
            assert_eq!(o.multiply(&e(i), &e(i)).unwrap(), e(0).iter().map(|x| -x).collect::<Vec<_>>());
        }
        let conj = |v: Vec<Q>| -> Vec<Q> {
            v.into_iter().enumerate().map(|(i, x)| if i == 0 { x } else { -x }).collect()
        };
        for i in 0..8 {
            for j in 0..8 {
                // alternative laws
                let xx = o.multiply(&e(i), &e(i)).unwrap();
                let xy = o.multiply(&e(i), &e(j)).unwrap();
                assert_eq!(o.multiply(&xx, &e(j)).unwrap(), o.multiply(&e(i), &xy).unwrap());
                let yx = o.multiply(&e(j), &e(i)).unwrap();
                assert_eq!(o.multiply(&yx, &e(i)).unwrap(), o.multiply(&e(j), &xx).unwrap());
                // conj(xy) = conj(y) conj(x)
                let lhs = conj(xy.clone());
                let rhs = o.multiply(&conj(e(j)), &conj(e(i))).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn octonion_norm_is_multiplicative() {
        let norm = |v: &[i64]| v.iter().map(|x| x * x).sum::<i64>();
        let samples: Vec<Vec<i64>> = vec![
            vec![1, 2, 0, -1, 3, 0, 1, 1],
            vec![0, -1, 4, 2, 0, 1, -2, 5],
            vec![3, 3, -3, 1, 1, -1, 0, 2],
        ];
        for i in 0..8 {
            for j in 0..8 {
                let p = cayley_dickson_mul(&unit_octonion(i), &unit_octonion(j));
                assert_eq!(norm(&p), 1);
            }
        }
        for x in &samples {
            for y in &samples {
                assert_eq!(norm(&cayley_dickson_mul(x, y)), norm(x) * norm(y));
            }
        }
    }

    #[test]
    fn full_matrix_examples() {
        let (j, ctx) = full_matrix_jordan::<Q>(1).unwrap();
        assert_eq!(j.table().basis_product(0, 0), &[(0, q(1))]);
        assert!(ctx.check().is_ok());

        let (j, _) = full_matrix_jordan::<Q>(2).unwrap();
        assert_eq!(j.dim(), 4);
        assert_eq!(j.unit().unwrap(), &[q(1), q(0), q(0), q(1)]);
        let half = Q::new(1.into(), 2.into());
        // E12 ∘ E21 = ½(E11 + E22)
        assert_eq!(j.table().basis_product(1, 2), &[(0, half.clone()), (3, half)]);
    }

    #[test]
    fn hermitian_examples() {
        let (j, ctx) = hermitian_jordan::<Q>(2).unwrap();
        assert_eq!(j.dim(), 3);
        assert_eq!(ctx.skew_basis().dim(), 1);
        let (j, _) = hermitian_jordan::<Q>(3).unwrap();
        assert_eq!(j.dim(), 6);
        // S11, S22, S33 at indices 0, 3, 5
        let mut unit = vec![q(0); 6];
        for i in [0, 3, 5] {
            unit[i] = q(1);
        }
        assert_eq!(j.unit().unwrap(), unit.as_slice());
        assert!(hermitian_jordan::<Q>(1).is_err());
    }

    #[test]
    fn embedding_intertwines_products() {
        for (j, ctx) in [full_matrix_jordan::<Q>(3).unwrap(), hermitian_jordan::<Q>(3).unwrap()] {
            let m = ctx.assoc_table().dim();
            let emb = ctx.jordan_embedding();
            let col = |i: usize| emb.mul_vec(&unit_vector(j.dim(), i));
            for a in 0..j.dim() {
                for b in 0..j.dim() {
                    let x = col(a);
                    let y = col(b);
                    let xy = ctx.assoc_table().multiply(&x, &y).unwrap();
                    let yx = ctx.assoc_table().multiply(&y, &x).unwrap();
                    let sym: Vec<Q> = xy.iter().zip(&yx).map(|(p, r)| (p + r) / q(2)).collect();
                    let prod = j.multiply(&unit_vector(j.dim(), a), &unit_vector(j.dim(), b)).unwrap();
                    assert_eq!(emb.mul_vec(&prod), sym);
                    assert_eq!(sym.len(), m);
                }
            }
        }
    }

    #[test]
    fn bad_contexts_are_rejected() {
        let mut bad = StructureTable::<Q>::zero(2);
        bad.add(0, 0, 1, q(1));
        bad.add(1, 0, 0, q(1));
        let id = Matrix::identity(2);
        assert!(matches!(
            AssocContext::new(bad, None, id.clone(), id.clone()),
            Err(Error::Validation { kind: ValidationKind::NotAssociative, .. })
        ));
        let swap = Matrix::<Q>::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let diag = StructureTable::from_fn(2, |i, j| if i == j { vec![(i, q(1))] } else { vec![] });
        // swapping the idempotents is an automorphism and anti-automorphism
        assert!(AssocContext::new(diag.clone(), Some(swap), id.clone(), id.clone()).is_ok());
        let scale = Matrix::<Q>::from_i64_rows(&[&[2, 0], &[0, 1]]);
        assert!(AssocContext::new(diag, Some(scale), id.clone(), id).is_err());
    }

    #[test]
    fn spin_examples() {
        let j = spin_factor(&[q(1), q(1), q(1)]).unwrap();
        let u2 = unit_vector::<Q>(4, 2);
        assert_eq!(j.multiply(&u2, &u2).unwrap(), unit_vector::<Q>(4, 0));
        assert_eq!(j.unit().unwrap(), unit_vector::<Q>(4, 0).as_slice());
        let j = spin_factor(&[q(2)]).unwrap();
        assert_eq!(j.dim(), 2);
        assert_eq!(j.table().basis_product(1, 1), &[(0, q(2))]);
        assert!(matches!(spin_factor(&[q(1), q(0)]), Err(Error::ZeroParameter { index: 1 })));
        let j = spin_factor(&[q(1), q(1)]).unwrap();
        let l = j.left_mult(&unit_vector(3, 1)).unwrap();
        assert_eq!(l, Matrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]));
    }

    #[test]
    fn nilpotent_example() {
        let j = nilpotent_two_dim::<Q>();
        let e = |i| unit_vector::<Q>(2, i);
        assert_eq!(j.multiply(&e(0), &e(1)).unwrap(), vec![q(-1), q(-1)]);
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    let ab = j.multiply(&e(a), &e(b)).unwrap();
                    assert!(j.multiply(&ab, &e(c)).unwrap().iter().all(|x| x == &q(0)));
                }
            }
        }
        assert!(j.unit().is_none());
        assert_eq!(j.center().dim(), 2);
    }

    #[test]
    fn halfspin_is_centerless() {
        let j = halfspin::<Q>();
        assert!(j.jordan_checked());
        assert_eq!(j.center().dim(), 0);
        assert!(j.unit().is_none());
        let sum = j.direct_sum(&j);
        let seed = RowBasis::span(4, &[unit_vector::<Q>(4, 0)]).unwrap();
        let ideal = sum.ideal_closure(&seed).unwrap();
        assert_eq!(ideal, RowBasis::span(4, &[unit_vector::<Q>(4, 0), unit_vector(4, 1)]).unwrap());
    }

    #[test]
    fn albert_basics() {
        let j = albert_algebra::<Q>();
        assert_eq!(j.dim(), 27);
        let mut unit = vec![q(0); 27];
        for u in unit.iter_mut().take(3) {
            *u = q(1);
        }
        assert_eq!(j.unit().unwrap(), unit.as_slice());
    }

    /// `b_ij` for any ordered pair of distinct indices, as a coordinate
    /// vector in the `i < j` basis; `b_ji = −(α_i/α_j) b_ij`.
    fn b(n: usize, alpha: &[Q], i: usize, j: usize) -> Vec<Q> {
        let pos = |i: usize, j: usize| (0..i).map(|r| n - 1 - r).sum::<usize>() + (j - i - 1);
        let mut v = vec![q(0); n * (n - 1) / 2];
        if i < j {
            v[pos(i, j)] = q(1);
        } else {
            v[pos(j, i)] = -(&alpha[j] / &alpha[i]);
        }
        v
    }

    /// Bracket case table: disjoint pairs commute, `[b_ij, b_jk] = b_ik`,
    /// and the other overlaps follow by flipping with `b_ji = −r_ji b_ij`.
    fn bracket_oracle(n: usize, alpha: &[Q], (i, j): (usize, usize), (k, l): (usize, usize)) -> Vec<Q> {
        let r = |x: usize, y: usize| &alpha[y] / &alpha[x];
        let scale = |s: Q, v: Vec<Q>| v.into_iter().map(|x| x * &s).collect::<Vec<_>>();
        let zero = vec![q(0); n * (n - 1) / 2];
        if (i, j) == (k, l) {
            zero
        } else if j == k {
            b(n, alpha, i, l)
        } else if i == l {
            scale(q(-1), b(n, alpha, k, j))
        } else if i == k {
            scale(-r(i, j), b(n, alpha, j, l))
        } else if j == l {
            scale(-r(k, j), b(n, alpha, i, k))
        } else {
            zero
        }
    }

    #[test]
    fn so_alpha_matches_case_table() {
        let third = Q::new(1.into(), 3.into());
        for alpha in [vec![q(1), q(1), q(1)], vec![q(2), q(-1), third.clone(), q(5)], vec![q(1), q(3), q(-2), q(1), third]] {
            let n = alpha.len();
            let l = so_alpha(n, &alpha).unwrap();
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            for (x, &p) in pairs.iter().enumerate() {
                for (y, &r) in pairs.iter().enumerate() {
                    let got = sparse_to_dense(l.table().basis_product(x, y), pairs.len());
                    assert_eq!(got, bracket_oracle(n, &alpha, p, r), "alpha {alpha:?}, {p:?} {r:?}");
                }
            }
        }
    }

    #[test]
    fn so_alpha_small_cases() {
        let l = so_alpha(2, &[q(1), q(3)]).unwrap();
        assert_eq!(l.dim(), 1);
        assert!(l.is_abelian());
        assert!(matches!(so_alpha(3, &[q(1), q(0), q(1)]), Err(Error::ZeroParameter { index: 1 })));
    }

    #[test]
    fn matrix_lie_algebras() {
        assert_eq!(skew_lie::<Q>(3).unwrap().dim(), 3);
        let gl = assoc_lie::<Q>(2).unwrap();
        assert_eq!(gl.dim(), 4);
        assert_eq!(gl.center().dim(), 1);
    }
}
