//! Lie algebras given by structure constants: centers, derived algebras,
//! Killing form, centroid, ideals, quotients, inner/derivation/triple
//! derivation spaces and a simplicity certificate.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{self, accumulate, sparse_to_dense, StructureTable};
use crate::derivations::{leibniz_system, triple_system, upper_pairs, OperatorSubspace};
use crate::error::{Error, ValidationKind};
use crate::linalg::{self, rref, Matrix, RowBasis, Solver, SparseRow};
use crate::scalar::Scalar;
use crate::Q;

/// Antisymmetric structure table satisfying the Jacobi identity, with an
/// optional operator realization whose basis matches index-wise.
#[derive(Clone, PartialEq)]
pub struct LieTable<T> {
    table: StructureTable<T>,
    realization: Option<OperatorSubspace<T>>,
}

impl<T: std::fmt::Display + std::fmt::Debug> std::fmt::Debug for LieTable<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LieTable")
            .field("table", &self.table)
            .field("realization", &self.realization)
            .finish()
    }
}

impl<T: Scalar> LieTable<T> {
    /// Validates antisymmetry and Jacobi on all basis triples.
    pub fn new(table: StructureTable<T>) -> Result<Self, Error> {
        if let Some((i, j)) = table.first_nonantisymmetric_pair() {
            return Err(Error::Validation {
                kind: ValidationKind::NotAntisymmetric,
                indices: vec![i, j],
            });
        }
        if let Some((i, j, k)) = table.first_jacobi_violation() {
            return Err(Error::Validation {
                kind: ValidationKind::NotJacobi,
                indices: vec![i, j, k],
            });
        }
        Ok(LieTable {
            table,
            realization: None,
        })
    }

    pub fn abelian(dim: usize) -> Self {
        LieTable {
            table: StructureTable::zero(dim),
            realization: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn table(&self) -> &StructureTable<T> {
        &self.table
    }

    pub fn realization(&self) -> Option<&OperatorSubspace<T>> {
        self.realization.as_ref()
    }

    pub fn bracket(&self, x: &[T], y: &[T]) -> Result<Vec<T>, Error> {
        self.table.multiply(x, y)
    }

    /// Matrix of `ad e_i`.
    pub fn ad(&self, i: usize) -> Matrix<T> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for c in 0..n {
            for (r, v) in self.table.basis_product(i, c) {
                m[(*r, c)] = v.clone();
            }
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        self.table.nnz() == 0
    }

    /// Structure constants of the bracket on a commutator-closed operator
    /// space, in its canonical basis.
    pub fn from_operators(s: &OperatorSubspace<T>) -> Result<Self, Error> {
        let ops = s.operators();
        let d = ops.len();
        let mut table = StructureTable::zero(d);
        for i in 0..d {
            for j in i + 1..d {
                let b = ops[i].commutator(&ops[j]);
                let coords = s.coordinates(&b)?.ok_or(Error::NotClosed(i, j))?;
                for (k, v) in coords.into_iter().enumerate() {
                    if !v.is_zero() {
                        table.add(j, i, k, -v.clone());
                        table.add(i, j, k, v);
                    }
                }
            }
        }
        let mut l = LieTable::new(table)?;
        l.realization = Some(s.clone());
        Ok(l)
    }

    /// `Z(L) = {x : [x, e_i] = 0 ∀i}`.
    pub fn center(&self) -> RowBasis<T> {
        let n = self.dim();
        let mut rows: Vec<SparseRow<T>> = Vec::new();
        for i in 0..n {
            let mut per_k: BTreeMap<usize, SparseRow<T>> = BTreeMap::new();
            for m in 0..n {
                for (k, v) in self.table.basis_product(m, i) {
                    per_k.entry(*k).or_default().push((m, v.clone()));
                }
            }
            rows.extend(per_k.into_values());
        }
        linalg::solve_nullspace(n, &rows, &Solver::dense()).expect("dense solve")
    }

    /// `[L, L]`.
    pub fn derived(&self) -> RowBasis<T> {
        let n = self.dim();
        let vs: Vec<Vec<T>> = upper_pairs(n, true)
            .map(|(i, j)| sparse_to_dense(self.table.basis_product(i, j), n))
            .collect();
        RowBasis::span(n, &vs).expect("vectors of ambient length")
    }

    /// `κ(e_i, e_j) = tr(ad e_i · ad e_j)`.
    pub fn killing(&self) -> Matrix<T> {
        let n = self.dim();
        let t = &self.table;
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                // tr(ad_i ad_j) = Σ_{m,k} c[i][m][k] · c[j][k][m]
                let mut acc = T::zero();
                for m in 0..n {
                    for (kk, v) in t.basis_product(i, m) {
                        let w = t.coeff(j, *kk, m);
                        if !w.is_zero() {
                            acc = acc + v.clone() * w;
                        }
                    }
                }
                k[(i, j)] = acc.clone();
                k[(j, i)] = acc;
            }
        }
        k
    }

    /// Linear maps commuting with every `ad e_i`, flattened row-major.
    pub fn centroid(&self, solver: &Solver) -> Result<RowBasis<T>, Error> {
        let n = self.dim();
        let mut rows: Vec<SparseRow<T>> = Vec::new();
        for x in 0..n {
            // (φ ad_x − ad_x φ)[r][c] = Σ_s φ[r][s] ad_x[s][c] − ad_x[r][s] φ[s][c]
            let mut per: BTreeMap<(usize, usize), SparseRow<T>> = BTreeMap::new();
            for c in 0..n {
                for (s, v) in self.table.basis_product(x, c) {
                    for r in 0..n {
                        per.entry((r, c)).or_default().push((r * n + s, v.clone()));
                    }
                }
            }
            for s in 0..n {
                for (r, v) in self.table.basis_product(x, s) {
                    for c in 0..n {
                        per.entry((*r, c)).or_default().push((s * n + c, -v.clone()));
                    }
                }
            }
            rows.extend(per.into_values());
        }
        linalg::solve_nullspace(n * n, &rows, &solver.resolve(n))
    }

    /// Smallest ideal containing `seed`.
    pub fn ideal_generated(&self, seed: &RowBasis<T>) -> Result<RowBasis<T>, Error> {
        algebra::ideal_closure(&self.table, seed, |t, x, i| t.mul_basis_right(x, i))
    }

    /// Whether a subspace is closed under bracketing with every basis vector.
    pub fn is_ideal(&self, s: &RowBasis<T>) -> Result<bool, Error> {
        Ok(self.ideal_generated(s)?.dim() == s.dim())
    }

    /// `L / Z(L)` on the complement spanned by the non-pivot coordinates of
    /// the center's echelon basis.
    pub fn quotient_by_center(&self) -> Self {
        let n = self.dim();
        let z = self.center();
        let complement: Vec<usize> = (0..n).filter(|c| !z.pivots().contains(c)).collect();
        let reduce = |v: Vec<T>| -> Vec<T> {
            let mut v = v;
            for (b, &p) in z.vectors().iter().zip(z.pivots()) {
                let coef = v[p].clone();
                if coef.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(b) {
                    *x = x.clone() - coef.clone() * y.clone();
                }
            }
            complement.iter().map(|&c| v[c].clone()).collect()
        };
        let d = complement.len();
        let mut table = StructureTable::zero(d);
        for a in 0..d {
            for b in 0..d {
                let v = sparse_to_dense(self.table.basis_product(complement[a], complement[b]), n);
                for (k, x) in reduce(v).into_iter().enumerate() {
                    table.add(a, b, k, x);
                }
            }
        }
        LieTable {
            table,
            realization: None,
        }
    }

    /// `ad(L) = span{ad e_i}`.
    pub fn ad_span(&self) -> OperatorSubspace<T> {
        let ops: Vec<_> = (0..self.dim()).map(|i| self.ad(i)).collect();
        OperatorSubspace::span(self.dim(), &ops).expect("square operators")
    }

    pub fn der(&self, solver: &Solver) -> Result<OperatorSubspace<T>, Error> {
        let n = self.dim();
        let rows = leibniz_system(&self.table, upper_pairs(n, true));
        OperatorSubspace::new(n, linalg::solve_nullspace(n * n, &rows, &solver.resolve(n))?)
    }

    /// Operators with `D[[x,y],z] = [[Dx,y],z] + [[x,Dy],z] + [[x,y],Dz]`.
    pub fn tder(&self, solver: &Solver) -> Result<OperatorSubspace<T>, Error> {
        let n = self.dim();
        let rows = triple_system(&self.table, upper_pairs(n, true));
        OperatorSubspace::new(n, linalg::solve_nullspace(n * n, &rows, &solver.resolve(n))?)
    }

    /// Block-diagonal bracket on `L₁ ⊕ L₂`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let realization = match (&self.realization, &other.realization) {
            (Some(a), Some(b)) => Some(a.block_sum(b)),
            _ => None,
        };
        LieTable {
            table: self.table.direct_sum(&other.table),
            realization,
        }
        .drop_mismatched_realization()
    }

    fn drop_mismatched_realization(mut self) -> Self {
        // Block sums of canonical bases are canonical, but keep the
        // invariant explicit in case either summand was not.
        if let Some(r) = &self.realization {
            if r.dim() != self.dim() {
                self.realization = None;
            }
        }
        self
    }
}

pub fn lie_center<T: Scalar>(l: &LieTable<T>) -> RowBasis<T> {
    l.center()
}

pub fn lie_direct_sum<T: Scalar>(a: &LieTable<T>, b: &LieTable<T>) -> LieTable<T> {
    a.direct_sum(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SimplicityStatus {
    Simple,
    NotSimple,
    Inconclusive,
}

impl std::fmt::Display for SimplicityStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub killing_nondegenerate: bool,
    pub centroid_dim: usize,
}

#[derive(Clone, Debug)]
pub struct SimplicityVerdict {
    pub status: SimplicityStatus,
    /// A proper nonzero ideal; present for `NotSimple` whenever one exists
    /// (a one-dimensional algebra has none).
    pub witness: Option<RowBasis<Q>>,
    pub certificate: Certificate,
}

/// Number of extra centroid combinations tried when hunting idempotents.
const IDEMPOTENT_TRIES: usize = 32;

impl LieTable<Q> {
    /// Simplicity certificate: nondegenerate Killing form plus a
    /// one-dimensional centroid proves simplicity in characteristic 0; a
    /// degenerate Killing form or a centroid idempotent yields an explicit
    /// proper ideal.
    pub fn simplicity(&self, solver: &Solver) -> Result<SimplicityVerdict, Error> {
        let n = self.dim();
        let kill = self.killing();
        let killing_nondegenerate = rref(&kill).rank == n;
        let centroid = self.centroid(solver)?;
        let certificate = Certificate {
            killing_nondegenerate,
            centroid_dim: centroid.dim(),
        };
        let verdict = |status, witness| SimplicityVerdict {
            status,
            witness,
            certificate,
        };

        if n <= 1 {
            return Ok(verdict(SimplicityStatus::NotSimple, None));
        }
        if self.is_abelian() {
            let line = RowBasis::span(n, &[crate::derivations::unit_vector::<Q>(n, 0)])?;
            return Ok(verdict(SimplicityStatus::NotSimple, Some(line)));
        }
        if !killing_nondegenerate {
            let radical = linalg::nullspace(&kill, &Solver::dense())?;
            let ideal = self.ideal_generated(&radical)?;
            if ideal.dim() < n {
                return Ok(verdict(SimplicityStatus::NotSimple, Some(ideal)));
            }
            // Killing form identically zero: L is solvable, so [L, L] is a
            // proper ideal; it is nonzero because L is not abelian.
            let derived = self.derived();
            if derived.dim() < n && !derived.is_zero() {
                return Ok(verdict(SimplicityStatus::NotSimple, Some(derived)));
            }
            return Ok(verdict(SimplicityStatus::Inconclusive, None));
        }
        if centroid.dim() == 1 {
            return Ok(verdict(SimplicityStatus::Simple, None));
        }
        match self.centroid_split(&centroid)? {
            Some(w) => Ok(verdict(SimplicityStatus::NotSimple, Some(w))),
            None => Ok(verdict(SimplicityStatus::Inconclusive, None)),
        }
    }

    /// Searches the centroid for an element whose minimal polynomial has a
    /// simple rational root λ of a nonlinear polynomial; the image of the
    /// corresponding spectral idempotent is a proper ideal.
    fn centroid_split(&self, centroid: &RowBasis<Q>) -> Result<Option<RowBasis<Q>>, Error> {
        let n = self.dim();
        let basis = centroid.vectors();
        let mut candidates: Vec<Vec<Q>> = basis.to_vec();
        for t in 0..IDEMPOTENT_TRIES {
            let coeffs: Vec<Q> = (0..basis.len())
                .map(|i| Q::from_i64(((t * 7 + i * 3 + 1) % 5) as i64 - 2))
                .collect();
            candidates.push(centroid.combine(&coeffs));
        }
        for flat in candidates {
            let phi = Matrix::from_vec(n, n, flat)?;
            let mu = minimal_polynomial(&phi);
            if mu.len() <= 2 {
                continue;
            }
            for root in rational_roots(&mu) {
                let cofactor = deflate(&mu, &root);
                if eval_poly(&cofactor, &root).is_zero() {
                    continue;
                }
                let proj = eval_matrix_poly(&cofactor, &phi);
                let image = RowBasis::span(n, &proj.transpose().rows_vec())?;
                if !image.is_zero() && image.dim() < n && self.is_ideal(&image)? {
                    return Ok(Some(image));
                }
            }
        }
        Ok(None)
    }
}

/// Monic minimal polynomial, coefficients from the constant term upwards.
pub fn minimal_polynomial<T: Scalar>(m: &Matrix<T>) -> Vec<T> {
    let n = m.nrows();
    let mut powers: Vec<Vec<T>> = vec![Matrix::<T>::identity(n).into_vec()];
    let mut current = Matrix::<T>::identity(n);
    loop {
        let span = RowBasis::span(n * n, &powers).expect("square powers");
        current = current.mul(m);
        if let Some(coords) = span_coordinates(&powers, &span, current.as_slice()) {
            let mut poly: Vec<T> = coords.into_iter().map(|c| -c).collect();
            poly.push(T::one());
            return poly;
        }
        powers.push(current.as_slice().to_vec());
    }
}

/// Coordinates of `v` with respect to the (independent) list `vectors`.
fn span_coordinates<T: Scalar>(vectors: &[Vec<T>], span: &RowBasis<T>, v: &[T]) -> Option<Vec<T>> {
    span.coordinates(v).ok()??;
    // Solve Σ c_i vectors[i] = v via the nullspace of [vectors | −v]ᵀ.
    let k = vectors.len();
    let len = v.len();
    let rows: Vec<SparseRow<T>> = (0..len)
        .map(|r| {
            let mut row: SparseRow<T> = (0..k)
                .filter(|&i| !vectors[i][r].is_zero())
                .map(|i| (i, vectors[i][r].clone()))
                .collect();
            if !v[r].is_zero() {
                row.push((k, -v[r].clone()));
            }
            row
        })
        .collect();
    let null = linalg::solve_nullspace(k + 1, &rows, &Solver::dense()).ok()?;
    let sol = null.vectors().iter().find(|s| !s[k].is_zero())?;
    let scale = sol[k].clone();
    Some(sol[..k].iter().map(|c| c.clone() / scale.clone()).collect())
}

fn eval_poly<T: Scalar>(p: &[T], x: &T) -> T {
    p.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
}

fn eval_matrix_poly<T: Scalar>(p: &[T], m: &Matrix<T>) -> Matrix<T> {
    let n = m.nrows();
    p.iter().rev().fold(Matrix::zeros(n, n), |acc, c| {
        acc.mul(m).add(&Matrix::identity(n).scale(c))
    })
}

/// `p(x) / (x − root)` by synthetic division (remainder discarded).
fn deflate<T: Scalar>(p: &[T], root: &T) -> Vec<T> {
    let d = p.len() - 1;
    let mut q = vec![T::zero(); d];
    let mut carry = T::zero();
    for i in (0..d).rev() {
        carry = p[i + 1].clone() + carry * root.clone();
        q[i] = carry.clone();
    }
    q
}

/// Largest coefficient magnitude for which divisors are enumerated.
const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&v| v <= DIVISOR_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots of a polynomial (constant term first) by the rational
/// root theorem. Sorted, without multiplicity.
pub fn rational_roots(p: &[Q]) -> Vec<Q> {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = p.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut roots = Vec::new();
    if ints.len() <= 1 {
        return roots;
    }
    let shift = ints.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(Q::zero());
        ints.drain(..shift);
    }
    if ints.len() > 1 {
        let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
            return roots;
        };
        let poly: Vec<Q> = ints.iter().map(|c| Q::from_integer(c.clone())).collect();
        for pn in &ps {
            for qd in &qs {
                for sign in [1, -1] {
                    let cand = Q::new(pn * sign, qd.clone());
                    if !roots.contains(&cand) && eval_poly(&poly, &cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Accumulates `Σ coords[i] · ops[i]`.
pub fn combine_operators<T: Scalar>(ops: &[Matrix<T>], coords: &[T]) -> Matrix<T> {
    let n = ops.first().map_or(0, Matrix::nrows);
    let mut acc: BTreeMap<usize, T> = BTreeMap::new();
    for (op, c) in ops.iter().zip(coords) {
        for (idx, v) in op.as_slice().iter().enumerate() {
            if !v.is_zero() {
                accumulate(&mut acc, idx, c.clone() * v.clone());
            }
        }
    }
    let flat = sparse_to_dense(&acc.into_iter().collect::<Vec<_>>(), n * n);
    Matrix::from_vec(n, n, flat).expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_i64(n)
    }

    /// Two-dimensional non-abelian algebra [x, y] = y.
    fn affine_line() -> LieTable<Q> {
        LieTable::new(StructureTable::from_fn(2, |i, j| match (i, j) {
            (0, 1) => vec![(1, q(1))],
            (1, 0) => vec![(1, q(-1))],
            _ => vec![],
        }))
        .unwrap()
    }

    #[test]
    fn rejects_non_antisymmetric_tables() {
        let t = StructureTable::from_fn(2, |i, j| if (i, j) == (0, 1) { vec![(1, q(1))] } else { vec![] });
        assert!(matches!(
            LieTable::new(t),
            Err(Error::Validation { kind: ValidationKind::NotAntisymmetric, .. })
        ));
    }

    #[test]
    fn solvable_algebra_is_not_simple() {
        let l = affine_line();
        let v = l.simplicity(&Solver::dense()).unwrap();
        assert_eq!(v.status, SimplicityStatus::NotSimple);
        let w = v.witness.unwrap();
        assert_eq!(w.dim(), 1);
        assert!(l.is_ideal(&w).unwrap());
    }

    #[test]
    fn abelian_conventions() {
        let one = LieTable::<Q>::abelian(1);
        let v = one.simplicity(&Solver::dense()).unwrap();
        assert_eq!(v.status, SimplicityStatus::NotSimple);
        assert!(v.witness.is_none());
        assert_eq!(one.center().dim(), 1);

        let three = LieTable::<Q>::abelian(3);
        assert_eq!(three.der(&Solver::dense()).unwrap().dim(), 9);
        assert_eq!(three.ad_span().dim(), 0);
        assert_eq!(three.quotient_by_center().dim(), 0);
    }

    #[test]
    fn rational_roots_by_divisors() {
        // (x − 1)(x + 1/2)(x) = x³ − x²/2 − x/2
        let p = vec![q(0), Q::new((-1).into(), 2.into()), Q::new((-1).into(), 2.into()), q(1)];
        assert_eq!(rational_roots(&p), vec![Q::new((-1).into(), 2.into()), q(0), q(1)]);
        // x² − 2
        assert!(rational_roots(&[q(-2), q(0), q(1)]).is_empty());
    }

    #[test]
    fn minimal_polynomial_of_projection() {
        let p = Matrix::<Q>::from_i64_rows(&[&[1, 0], &[0, 0]]);
        assert_eq!(minimal_polynomial(&p), vec![q(0), q(-1), q(1)]);
        assert_eq!(minimal_polynomial(&Matrix::<Q>::identity(3)), vec![q(-1), q(1)]);
    }

    #[test]
    fn deflation() {
        // x² − 1 = (x − 1)(x + 1)
        assert_eq!(deflate(&[q(-1), q(0), q(1)], &q(1)), vec![q(1), q(1)]);
    }
}
