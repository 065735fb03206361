use num_traits::Zero;
use proptest::prelude::*;

use jordan_core::constructors::{
    full_matrix_jordan, halfspin, hermitian_jordan, nilpotent_two_dim, so_alpha, spin_factor,
};
use jordan_core::derivations::{der, inn, is_derivation, tder};
use jordan_core::linalg::{nullspace, rref};
use jordan_core::{Fp, JordanAlgebra, LieTable, Matrix, RowBasis, Scalar, Solver, StructureTable, Q};

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

fn qvec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

fn matrix_strategy(max: usize) -> impl Strategy<Value = Matrix<Q>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-3i64..=3, r * c).prop_map(move |d| Matrix::from_vec(r, c, qvec(&d)).unwrap())
    })
}

fn fixtures() -> Vec<JordanAlgebra<Q>> {
    vec![
        spin_factor(&[q(1), q(-2), Q::new(1.into(), 3.into())]).unwrap(),
        full_matrix_jordan(2).unwrap().0,
        hermitian_jordan(3).unwrap().0,
        nilpotent_two_dim(),
        halfspin(),
    ]
}

fn fixture_and_vectors() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, Vec<i64>)> {
    (0..5usize).prop_flat_map(|i| {
        let n = fixtures()[i].dim();
        let v = || proptest::collection::vec(-5i64..=5, n);
        (Just(i), v(), v(), v())
    })
}

fn jordan_defect(t: &StructureTable<Q>, x: &[Q], y: &[Q]) -> Vec<Q> {
    let x2 = t.multiply(x, x).unwrap();
    let lhs = t.multiply(&t.multiply(&x2, y).unwrap(), x).unwrap();
    let rhs = t.multiply(&x2, &t.multiply(x, y).unwrap()).unwrap();
    lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in matrix_strategy(7)) {
        let once = rref(&m);
        prop_assert_eq!(rref(&once.reduced).reduced, once.reduced.clone());
    }

    #[test]
    fn rank_plus_nullity(m in matrix_strategy(7)) {
        let ns = nullspace(&m, &Solver::dense()).unwrap();
        prop_assert_eq!(rref(&m).rank + ns.dim(), m.ncols());
        prop_assert_eq!(ns, nullspace(&m, &Solver::modular()).unwrap());
    }

    #[test]
    fn subspace_dimension_law(a in matrix_strategy(6), b in matrix_strategy(6)) {
        let n = a.ncols().min(b.ncols());
        let trim = |m: &Matrix<Q>| m.rows_vec().into_iter().map(|r| r[..n].to_vec()).collect::<Vec<_>>();
        let u = RowBasis::span(n, &trim(&a)).unwrap();
        let w = RowBasis::span(n, &trim(&b)).unwrap();
        let sum = u.sum(&w).unwrap();
        let meet = u.intersection(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(meet.is_subspace_of(&u).unwrap() && u.is_subspace_of(&sum).unwrap());
    }

    #[test]
    fn multiply_is_bilinear_and_symmetric((i, x, y, z) in fixture_and_vectors(), s in -4i64..=4) {
        let t = fixtures()[i].table().clone();
        let (x, y, z) = (qvec(&x), qvec(&y), qvec(&z));
        let xy = t.multiply(&x, &y).unwrap();
        prop_assert_eq!(&xy, &t.multiply(&y, &x).unwrap());
        let sx_plus_z: Vec<Q> = x.iter().zip(&z).map(|(a, b)| a * q(s) + b).collect();
        let lhs = t.multiply(&sx_plus_z, &y).unwrap();
        let zy = t.multiply(&z, &y).unwrap();
        let rhs: Vec<Q> = xy.iter().zip(&zy).map(|(a, b)| a * q(s) + b).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jordan_identity_holds_pointwise((i, x, y, _z) in fixture_and_vectors()) {
        let t = fixtures()[i].table().clone();
        prop_assert!(jordan_defect(&t, &qvec(&x), &qvec(&y)).iter().all(Zero::is_zero));
    }

    #[test]
    fn ideal_closure_is_idempotent((i, x, _y, _z) in fixture_and_vectors()) {
        let j = &fixtures()[i];
        let seed = RowBasis::span(j.dim(), &[qvec(&x)]).unwrap();
        let once = j.ideal_closure(&seed).unwrap();
        prop_assert!(seed.is_subspace_of(&once).unwrap());
        prop_assert_eq!(j.ideal_closure(&once).unwrap(), once);
    }

    #[test]
    fn derivations_act_by_leibniz((i, x, y, _z) in fixture_and_vectors()) {
        let j = &fixtures()[i];
        let t = j.table();
        let (x, y) = (qvec(&x), qvec(&y));
        for d in der(j, &Solver::default()).unwrap().operators() {
            let lhs = d.mul_vec(&t.multiply(&x, &y).unwrap());
            let a = t.multiply(&d.mul_vec(&x), &y).unwrap();
            let b = t.multiply(&x, &d.mul_vec(&y)).unwrap();
            prop_assert!(lhs.iter().zip(a.iter().zip(&b)).all(|(l, (a, b))| (l - a - b).is_zero()));
        }
    }
}

/// `(x²y)x − x²(xy)` on a commutative non-Jordan table must be caught by the
/// checker exactly when direct evaluation finds a violation.
#[test]
fn jordan_check_agrees_with_direct_evaluation() {
    // e·e = v, v·v = e, e·v = 0
    let mut t = StructureTable::<Q>::zero(2);
    t.add(0, 0, 1, q(1));
    t.add(1, 1, 0, q(1));
    assert!(t.first_jordan_violation().is_some());
    let mut found = false;
    for a in -5..=5 {
        for b in -4..=4 {
            found |= !jordan_defect(&t, &qvec(&[a, b]), &qvec(&[b, a])).iter().all(Zero::is_zero);
        }
    }
    assert!(found);
    for j in fixtures() {
        assert!(j.table().first_jordan_violation().is_none());
    }
}

#[test]
fn center_contains_unit() {
    for j in fixtures() {
        if let Some(u) = j.unit() {
            assert!(j.center().contains(u).unwrap());
        }
    }
}

#[test]
fn inn_within_der_within_tder() {
    let s = Solver::default();
    for j in &fixtures() {
        let (i, d, t) = (inn(j).unwrap(), der(j, &s).unwrap(), tder(j, &s).unwrap());
        assert!(i.is_subspace_of(&d).unwrap());
        assert!(d.is_subspace_of(&t).unwrap());
        assert!(d.operators().iter().all(|op| is_derivation(j.table(), op)));
    }
}

#[test]
fn killing_is_symmetric_and_invariant() {
    let l = so_alpha(4, &qvec(&[1, 2, -1, 3])).unwrap();
    let k = l.killing();
    assert_eq!(k, k.transpose());
    let n = l.dim();
    let e = |i: usize| {
        let mut v = vec![q(0); n];
        v[i] = q(1);
        v
    };
    let form = |x: &[Q], y: &[Q]| -> Q { x.iter().zip(k.mul_vec(y)).map(|(a, b)| a * b).sum() };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                // K([a,b], c) = K(a, [b,c])
                let left = form(&l.bracket(&e(a), &e(b)).unwrap(), &e(c));
                let right = form(&e(a), &l.bracket(&e(b), &e(c)).unwrap());
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn ad_within_der_within_tder() {
    let s = Solver::default();
    let lies: Vec<LieTable<Q>> = vec![
        so_alpha(3, &qvec(&[1, 1, 1])).unwrap(),
        so_alpha(4, &qvec(&[1, 1, 1, 1])).unwrap(),
        LieTable::from_operators(&der(&nilpotent_two_dim(), &s).unwrap()).unwrap(),
    ];
    for l in lies {
        let (ad, d, t) = (l.ad_span(), l.der(&s).unwrap(), l.tder(&s).unwrap());
        assert!(ad.is_subspace_of(&d).unwrap());
        assert!(d.is_subspace_of(&t).unwrap());
        assert!(l.table().first_jacobi_violation().is_none());
    }
}

#[test]
fn finite_field_scalars() {
    type F = Fp<1_000_003>;
    let one = F::new(1);
    let j = spin_factor(&[one, one, F::new(-1)]).unwrap();
    assert_eq!(der(&j, &Solver::default()).unwrap().dim(), 3);
    assert_eq!(tder(&j, &Solver::default()).unwrap().dim(), 3);
    let (full, _) = full_matrix_jordan::<F>(2).unwrap();
    assert_eq!(der(&full, &Solver::default()).unwrap().dim(), 3);
}
