use proptest::prelude::*;
use ratlin::{quotient_dim, rref, split_idempotent, subspace_ops, RatMatrix, SparseVec, Subspace, Q};

fn small_matrix(max_rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), 0..=max_rows)
        .prop_map(move |rows| {
            if rows.is_empty() {
                RatMatrix::zeros(0, cols)
            } else {
                RatMatrix::from_int_rows(&rows)
            }
        })
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in small_matrix(6, 5)) {
        let (r, s, _) = rref(&m);
        let again = RatMatrix::from_rows(5, s.basis().to_vec()).unwrap();
        let (r2, s2, _) = rref(&again);
        prop_assert_eq!(r, r2);
        prop_assert_eq!(s, s2);
    }

    #[test]
    fn rref_spans_original_rows(m in small_matrix(6, 5)) {
        let (_, s, _) = rref(&m);
        for row in m.row_vecs() {
            prop_assert!(s.contains(row));
        }
    }

    #[test]
    fn quotient_dim_bounded(a in small_matrix(5, 4), b in small_matrix(5, 4)) {
        let q = quotient_dim(4, a.row_vecs(), b.row_vecs()).unwrap();
        let (ra, _, _) = rref(&a);
        prop_assert!(q <= ra);
    }

    #[test]
    fn sum_and_intersection_dimensions(a in small_matrix(4, 5), b in small_matrix(4, 5)) {
        let sa = Subspace::span(5, a.row_vecs()).unwrap();
        let sb = Subspace::span(5, b.row_vecs()).unwrap();
        let ops = subspace_ops(&sa, &sb).unwrap();
        prop_assert_eq!(ops.sum.dim() + ops.intersection.dim(), sa.dim() + sb.dim());
        prop_assert!(sa.contains_subspace(&ops.intersection));
        prop_assert!(sb.contains_subspace(&ops.intersection));
        prop_assert!(ops.sum.contains_subspace(&sa));
    }

    #[test]
    fn projections_split_and_reassemble(a in small_matrix(3, 4)) {
        // The projection onto a row space along its orthogonal complement.
        let s = Subspace::span(4, a.row_vecs()).unwrap();
        let basis = s.basis().to_vec();
        let k = basis.len();
        let b = RatMatrix::from_rows(4, basis.clone()).unwrap();
        let bt = b.transpose();
        // P = Bᵀ (B Bᵀ)⁻¹ B computed via solving Gram system by RREF of [G | I].
        let g = b.mul(&bt).unwrap();
        let mut aug = Vec::new();
        for i in 0..k {
            let mut row: Vec<Q> = (0..k).map(|j| g.get(i, j)).collect();
            row.extend((0..k).map(|j| if i == j { Q::one() } else { Q::zero() }));
            aug.push(row);
        }
        let inv_rows: Vec<Vec<Q>> = if k == 0 { vec![] } else {
            let (_, r, _) = rref(&RatMatrix::from_dense(&aug));
            r.basis().iter().map(|row| (k..2 * k).map(|j| row.get(j)).collect()).collect()
        };
        let p = if k == 0 { RatMatrix::zeros(4, 4) } else {
            let ginv = RatMatrix::from_dense(&inv_rows);
            bt.mul(&ginv).unwrap().mul(&b).unwrap()
        };
        let (im, ker) = split_idempotent(&p).unwrap();
        prop_assert_eq!(im.dim() + ker.dim(), 4);
        prop_assert_eq!(&im, &s);
        for x in ker.basis() {
            prop_assert!(p.mul_vec(x).is_zero());
        }
        for x in im.basis() {
            prop_assert_eq!(p.mul_vec(x), x.clone());
        }
    }

    #[test]
    fn rational_field_axioms(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        let x = Q::new(a, b);
        let y = Q::new(c, d);
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        if !y.is_zero() {
            prop_assert_eq!(&(&x * &y) / &y, x.clone());
        }
        let v = SparseVec::from_dense(&[x.clone(), y.clone()]);
        prop_assert_eq!(v.add_scaled(&-Q::one(), &v), SparseVec::new());
    }
}
