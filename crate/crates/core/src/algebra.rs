//! Structure-constant algebras and the commutative (Jordan) layer: products,
//! identity checks, unit, center, ideals, direct sums and multiplication
//! operators.

use std::collections::BTreeMap;

use crate::error::{Error, ValidationKind};
use crate::linalg::{self, Matrix, RowBasis, Solver, SparseRow};
use crate::scalar::Scalar;

/// Sparse coordinate vector, sorted by index, no explicit zeros.
pub type SparseVec<T> = Vec<(usize, T)>;

/// Linear operator on an algebra, as a matrix acting on coordinate columns:
/// entry `(r, c)` is the `e_r` coefficient of the image of `e_c`.
pub type LinearOperator<T> = Matrix<T>;

/// `e_i · e_j = Σ_k c[i][j][k] e_k`, stored sparsely per pair.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureTable<T> {
    dim: usize,
    products: Vec<SparseVec<T>>,
    basis_names: Option<Vec<String>>,
}

pub(crate) fn accumulate<T: Scalar>(acc: &mut BTreeMap<usize, T>, k: usize, v: T) {
    if v.is_zero() {
        return;
    }
    match acc.get_mut(&k) {
        Some(x) => {
            *x = x.clone() + v;
            if x.is_zero() {
                acc.remove(&k);
            }
        }
        None => {
            acc.insert(k, v);
        }
    }
}

pub(crate) fn sparse_from_map<T: Scalar>(acc: BTreeMap<usize, T>) -> SparseVec<T> {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

pub(crate) fn sparse_to_dense<T: Scalar>(v: &[(usize, T)], n: usize) -> Vec<T> {
    let mut d = vec![T::zero(); n];
    for (k, x) in v {
        d[*k] = x.clone();
    }
    d
}

pub(crate) fn sparse_sub<T: Scalar>(a: &[(usize, T)], b: &[(usize, T)]) -> SparseVec<T> {
    let mut acc: BTreeMap<usize, T> = a.iter().cloned().collect();
    for (k, v) in b {
        accumulate(&mut acc, *k, -v.clone());
    }
    sparse_from_map(acc)
}

impl<T: Scalar> StructureTable<T> {
    /// The zero product on `dim` basis vectors.
    pub fn zero(dim: usize) -> Self {
        StructureTable {
            dim,
            products: vec![Vec::new(); dim * dim],
            basis_names: None,
        }
    }

    /// Builds a table from a product function returning coordinate lists.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vec<(usize, T)>) -> Self {
        let mut t = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                for (k, v) in f(i, j) {
                    t.add(i, j, k, v);
                }
            }
        }
        t
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.basis_names = Some(names);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    pub fn name(&self, i: usize) -> String {
        self.basis_names
            .as_ref()
            .map_or_else(|| format!("e{}", i + 1), |n| n[i].clone())
    }

    /// Adds `v` to `c[i][j][k]`.
    pub fn add(&mut self, i: usize, j: usize, k: usize, v: T) {
        let slot = &mut self.products[i * self.dim + j];
        match slot.binary_search_by_key(&k, |(c, _)| *c) {
            Ok(pos) => {
                let x = slot[pos].1.clone() + v;
                if x.is_zero() {
                    slot.remove(pos);
                } else {
                    slot[pos].1 = x;
                }
            }
            Err(pos) => {
                if !v.is_zero() {
                    slot.insert(pos, (k, v));
                }
            }
        }
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> T {
        let slot = &self.products[i * self.dim + j];
        slot.binary_search_by_key(&k, |(c, _)| *c)
            .map_or_else(|_| T::zero(), |pos| slot[pos].1.clone())
    }

    /// `e_i · e_j` as a sparse vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, T)] {
        &self.products[i * self.dim + j]
    }

    /// Product of two sparse vectors.
    pub fn mul_sparse(&self, x: &[(usize, T)], y: &[(usize, T)]) -> SparseVec<T> {
        let mut acc = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                let ab = a.clone() * b.clone();
                for (k, c) in self.basis_product(*i, *j) {
                    accumulate(&mut acc, *k, ab.clone() * c.clone());
                }
            }
        }
        sparse_from_map(acc)
    }

    /// `x · e_j`.
    pub fn mul_basis_right(&self, x: &[(usize, T)], j: usize) -> SparseVec<T> {
        let mut acc = BTreeMap::new();
        for (i, a) in x {
            for (k, c) in self.basis_product(*i, j) {
                accumulate(&mut acc, *k, a.clone() * c.clone());
            }
        }
        sparse_from_map(acc)
    }

    /// `e_i · x`.
    pub fn mul_basis_left(&self, i: usize, x: &[(usize, T)]) -> SparseVec<T> {
        let mut acc = BTreeMap::new();
        for (j, a) in x {
            for (k, c) in self.basis_product(i, *j) {
                accumulate(&mut acc, *k, a.clone() * c.clone());
            }
        }
        sparse_from_map(acc)
    }

    /// Bilinear product of dense coordinate vectors.
    pub fn multiply(&self, x: &[T], y: &[T]) -> Result<Vec<T>, Error> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: v.len(),
                });
            }
        }
        let p = self.mul_sparse(&linalg::to_sparse(x), &linalg::to_sparse(y));
        Ok(sparse_to_dense(&p, self.dim))
    }

    /// First pair `(i, j)` with `e_i e_j ≠ e_j e_i`.
    pub fn first_noncommuting_pair(&self) -> Option<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (i + 1..self.dim).map(move |j| (i, j)))
            .find(|&(i, j)| self.basis_product(i, j) != self.basis_product(j, i))
    }

    pub fn is_commutative(&self) -> bool {
        self.first_noncommuting_pair().is_none()
    }

    /// First pair `(i, j)`, `i ≤ j`, with `e_i e_j ≠ −e_j e_i`.
    pub fn first_nonantisymmetric_pair(&self) -> Option<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (i..self.dim).map(move |j| (i, j)))
            .find(|&(i, j)| {
                let neg: SparseVec<T> = self
                    .basis_product(j, i)
                    .iter()
                    .map(|(k, v)| (*k, -v.clone()))
                    .collect();
                self.basis_product(i, j) != neg.as_slice()
            })
    }

    /// First basis triple violating associativity.
    pub fn first_nonassociative_triple(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j).to_vec();
                for k in 0..n {
                    let lhs = self.mul_basis_right(&ij, k);
                    let rhs = self.mul_basis_left(i, self.basis_product(j, k));
                    if lhs != rhs {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First quadruple `(a, b, c, l)` on which the fully linearized Jordan
    /// identity fails:
    /// `Σ_{ {p,q},r } ((e_p e_q) e_l) e_r − (e_p e_q)(e_r e_l) = 0`,
    /// summed over the three ways of splitting `{a, b, c}` into a pair and a
    /// single index. Assumes commutativity.
    pub fn first_jordan_violation(&self) -> Option<(usize, usize, usize, usize)> {
        let n = self.dim;
        // pl[(p*n + q)*n + l] = (e_p e_q) e_l for p ≤ q.
        let mut pl: Vec<SparseVec<T>> = vec![Vec::new(); n * n * n];
        for p in 0..n {
            for q in p..n {
                let pq = self.basis_product(p, q);
                for l in 0..n {
                    pl[(p * n + q) * n + l] = self.mul_basis_right(pq, l);
                }
            }
        }
        let key = |p: usize, q: usize| if p <= q { p * n + q } else { q * n + p };
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let splits = [(a, b, c), (a, c, b), (b, c, a)];
                    for l in 0..n {
                        let mut acc = BTreeMap::new();
                        for &(p, q, r) in &splits {
                            for (k, v) in self.mul_basis_right(&pl[key(p, q) * n + l], r) {
                                accumulate(&mut acc, k, v);
                            }
                            let pq = self.basis_product(p, q);
                            let rl = self.basis_product(r, l);
                            for (k, v) in self.mul_sparse(pq, rl) {
                                accumulate(&mut acc, k, -v);
                            }
                        }
                        if !acc.is_empty() {
                            return Some((a, b, c, l));
                        }
                    }
                }
            }
        }
        None
    }

    /// First basis triple violating the Jacobi identity
    /// `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0`.
    pub fn first_jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let mut acc = BTreeMap::new();
                    for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, v) in self.mul_basis_right(self.basis_product(x, y), z) {
                            accumulate(&mut acc, m, v);
                        }
                    }
                    if !acc.is_empty() {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Block-diagonal table on `dim₁ + dim₂`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n1, n2) = (self.dim, other.dim);
        let mut t = Self::zero(n1 + n2);
        for i in 0..n1 {
            for j in 0..n1 {
                t.products[i * (n1 + n2) + j] = self.basis_product(i, j).to_vec();
            }
        }
        for i in 0..n2 {
            for j in 0..n2 {
                t.products[(n1 + i) * (n1 + n2) + n1 + j] = other
                    .basis_product(i, j)
                    .iter()
                    .map(|(k, v)| (n1 + k, v.clone()))
                    .collect();
            }
        }
        if self.basis_names.is_some() || other.basis_names.is_some() {
            let names = (0..n1)
                .map(|i| format!("{}⊕0", self.name(i)))
                .chain((0..n2).map(|i| format!("0⊕{}", other.name(i))))
                .collect();
            t.basis_names = Some(names);
        }
        t
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mult(&self, a: &[T]) -> Result<LinearOperator<T>, Error> {
        if a.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: a.len(),
            });
        }
        let sa = linalg::to_sparse(a);
        let mut m = Matrix::zeros(self.dim, self.dim);
        for c in 0..self.dim {
            for (r, v) in self.mul_basis_right(&sa, c) {
                m[(r, c)] = v;
            }
        }
        Ok(m)
    }

    /// Number of nonzero structure constants.
    pub fn nnz(&self) -> usize {
        self.products.iter().map(Vec::len).sum()
    }
}

/// Commutative algebra validated against the Jordan identity.
#[derive(Clone, Debug, PartialEq)]
pub struct JordanAlgebra<T> {
    table: StructureTable<T>,
    commutative_checked: bool,
    jordan_checked: bool,
    unit: Option<Vec<T>>,
}

impl<T: Scalar> JordanAlgebra<T> {
    /// Validates commutativity and the Jordan identity, then locates the
    /// unit.
    pub fn new(table: StructureTable<T>) -> Result<Self, Error> {
        if let Some((i, j)) = table.first_noncommuting_pair() {
            return Err(Error::Validation {
                kind: ValidationKind::NotCommutative,
                indices: vec![i, j],
            });
        }
        if let Some((a, b, c, l)) = table.first_jordan_violation() {
            return Err(Error::Validation {
                kind: ValidationKind::NotJordan,
                indices: vec![a, b, c, l],
            });
        }
        let unit = find_unit_of(&table);
        Ok(JordanAlgebra {
            table,
            commutative_checked: true,
            jordan_checked: true,
            unit,
        })
    }

    /// Validates commutativity only; the Jordan identity is left unchecked.
    pub fn commutative(table: StructureTable<T>) -> Result<Self, Error> {
        if let Some((i, j)) = table.first_noncommuting_pair() {
            return Err(Error::Validation {
                kind: ValidationKind::NotCommutative,
                indices: vec![i, j],
            });
        }
        let unit = find_unit_of(&table);
        Ok(JordanAlgebra {
            table,
            commutative_checked: true,
            jordan_checked: false,
            unit,
        })
    }

    pub fn table(&self) -> &StructureTable<T> {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.table.dim
    }

    pub fn jordan_checked(&self) -> bool {
        self.jordan_checked
    }

    pub fn commutative_checked(&self) -> bool {
        self.commutative_checked
    }

    pub fn unit(&self) -> Option<&[T]> {
        self.unit.as_deref()
    }

    pub fn multiply(&self, x: &[T], y: &[T]) -> Result<Vec<T>, Error> {
        self.table.multiply(x, y)
    }

    pub fn left_mult(&self, a: &[T]) -> Result<LinearOperator<T>, Error> {
        self.table.left_mult(a)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<T> {
        let mut v = vec![T::zero(); self.dim()];
        v[i] = T::one();
        v
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let table = self.table.direct_sum(&other.table);
        let unit = match (&self.unit, &other.unit) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        JordanAlgebra {
            table,
            commutative_checked: self.commutative_checked && other.commutative_checked,
            jordan_checked: self.jordan_checked && other.jordan_checked,
            unit,
        }
    }

    /// Center `{a : (a e_i) e_j = (a e_j) e_i = (e_i e_j) a}`.
    pub fn center(&self) -> RowBasis<T> {
        center_of(&self.table)
    }

    /// Smallest ideal containing `seed`.
    pub fn ideal_closure(&self, seed: &RowBasis<T>) -> Result<RowBasis<T>, Error> {
        ideal_closure(&self.table, seed, |t, x, i| t.mul_basis_right(x, i))
    }

    /// Solves for the unit; see [`find_unit`].
    pub fn find_unit(&self) -> Option<Vec<T>> {
        find_unit_of(&self.table)
    }
}

pub fn check_commutative<T: Scalar>(t: &StructureTable<T>) -> bool {
    t.is_commutative()
}

pub fn check_jordan_identity<T: Scalar>(t: &StructureTable<T>) -> Result<bool, Error> {
    if let Some((i, j)) = t.first_noncommuting_pair() {
        return Err(Error::NotCommutative(i, j));
    }
    Ok(t.first_jordan_violation().is_none())
}

/// The unique `e` with `e·e_i = e_i` for all `i`, if one exists.
pub fn find_unit<T: Scalar>(j: &JordanAlgebra<T>) -> Option<Vec<T>> {
    j.find_unit()
}

fn find_unit_of<T: Scalar>(t: &StructureTable<T>) -> Option<Vec<T>> {
    let n = t.dim;
    // Unknowns (e_0..e_{n-1}, s): Σ_m e_m c[m][i][k] − s·δ_ik = 0.
    let mut rows: Vec<SparseRow<T>> = Vec::new();
    for i in 0..n {
        let mut per_k: BTreeMap<usize, SparseRow<T>> = BTreeMap::new();
        for m in 0..n {
            for (k, v) in t.basis_product(m, i) {
                per_k.entry(*k).or_default().push((m, v.clone()));
            }
        }
        per_k.entry(i).or_default().push((n, -T::one()));
        rows.extend(per_k.into_values());
    }
    let null = linalg::solve_nullspace(n + 1, &rows, &Solver::dense()).ok()?;
    // A unit is unique when it exists, so a solution forces a 1-dim space.
    let v = null.vectors().iter().find(|v| !v[n].is_zero())?;
    debug_assert_eq!(null.dim(), 1);
    let s = v[n].clone();
    Some(v[..n].iter().map(|x| x.clone() / s.clone()).collect())
}

fn center_of<T: Scalar>(t: &StructureTable<T>) -> RowBasis<T> {
    let n = t.dim;
    let basis: Vec<SparseVec<T>> = (0..n).map(|i| vec![(i, T::one())]).collect();
    // prod[m][i] = e_m e_i
    let prod: Vec<Vec<&[(usize, T)]>> = (0..n)
        .map(|m| (0..n).map(|i| t.basis_product(m, i)).collect())
        .collect();
    let mut rows: Vec<SparseRow<T>> = Vec::new();
    for i in 0..n {
        for j in i..n {
            let ij = t.basis_product(i, j);
            let mut first: BTreeMap<usize, SparseRow<T>> = BTreeMap::new();
            let mut second: BTreeMap<usize, SparseRow<T>> = BTreeMap::new();
            for m in 0..n {
                let a = t.mul_basis_right(prod[m][i], j); // (e_m e_i) e_j
                let b = t.mul_basis_right(prod[m][j], i); // (e_m e_j) e_i
                let c = t.mul_sparse(ij, &basis[m]); // (e_i e_j) e_m
                for (k, v) in sparse_sub(&a, &b) {
                    first.entry(k).or_default().push((m, v));
                }
                for (k, v) in sparse_sub(&a, &c) {
                    second.entry(k).or_default().push((m, v));
                }
            }
            rows.extend(first.into_values());
            rows.extend(second.into_values());
        }
    }
    linalg::solve_nullspace(n, &rows, &Solver::dense()).expect("dense nullspace is infallible")
}

/// Fixed-point closure of `seed` under `x ↦ mul(x, e_i)` for all basis `i`.
pub(crate) fn ideal_closure<T: Scalar, A>(
    algebra: &A,
    seed: &RowBasis<T>,
    mul: impl Fn(&A, &[(usize, T)], usize) -> SparseVec<T>,
) -> Result<RowBasis<T>, Error> {
    let n = seed.ambient_dim();
    let mut current = seed.clone();
    loop {
        let mut vectors: Vec<Vec<T>> = current.vectors().to_vec();
        for v in current.vectors() {
            let sv = linalg::to_sparse(v);
            for i in 0..n {
                vectors.push(sparse_to_dense(&mul(algebra, &sv, i), n));
            }
        }
        let next = RowBasis::span(n, &vectors)?;
        if next.dim() == current.dim() {
            return Ok(next);
        }
        current = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    fn dual_numbers() -> StructureTable<Q> {
        // e·e = e, e·v = v, v·v = 0
        StructureTable::from_fn(2, |i, j| match (i, j) {
            (0, 0) => vec![(0, q(1))],
            (0, 1) | (1, 0) => vec![(1, q(1))],
            _ => vec![],
        })
    }

    #[test]
    fn commutativity_detection() {
        let mut t = dual_numbers();
        assert!(check_commutative(&t));
        t.add(0, 1, 0, q(1));
        assert!(!check_commutative(&t));
        assert_eq!(t.first_noncommuting_pair(), Some((0, 1)));
        assert!(matches!(check_jordan_identity(&t), Err(Error::NotCommutative(0, 1))));
    }

    #[test]
    fn dual_numbers_are_jordan() {
        // Associative and commutative, hence Jordan.
        assert!(check_jordan_identity(&dual_numbers()).unwrap());
    }

    #[test]
    fn non_jordan_table_is_rejected() {
        // e·e = v, v·v = e, e·v = 0: commutative but fails the identity.
        let t = StructureTable::from_fn(2, |i, j| match (i, j) {
            (0, 0) => vec![(1, q(1))],
            (1, 1) => vec![(0, q(1))],
            _ => vec![],
        });
        assert!(!check_jordan_identity(&t).unwrap());
        assert!(matches!(
            JordanAlgebra::new(t),
            Err(Error::Validation { kind: ValidationKind::NotJordan, .. })
        ));
    }

    #[test]
    fn zero_dimensional_algebra() {
        let j = JordanAlgebra::<Q>::new(StructureTable::zero(0)).unwrap();
        assert_eq!(j.center().dim(), 0);
        assert_eq!(j.unit(), Some(&[][..]));
    }

    #[test]
    fn left_mult_of_zero_is_zero() {
        let j = JordanAlgebra::new(dual_numbers()).unwrap();
        assert!(j.left_mult(&[q(0), q(0)]).unwrap().is_zero());
        assert!(j.left_mult(&[q(0)]).is_err());
        assert_eq!(j.left_mult(j.unit().unwrap()).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn ideal_closure_of_unit_is_everything() {
        let j = JordanAlgebra::new(dual_numbers()).unwrap();
        let seed = RowBasis::span(2, &[j.unit().unwrap().to_vec()]).unwrap();
        assert_eq!(j.ideal_closure(&seed).unwrap().dim(), 2);
        assert_eq!(j.ideal_closure(&RowBasis::zero(2)).unwrap().dim(), 0);
        let nil = RowBasis::span(2, &[vec![q(0), q(1)]]).unwrap();
        assert_eq!(j.ideal_closure(&nil).unwrap(), nil);
    }
}
