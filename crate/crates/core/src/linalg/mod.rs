//! Exact dense linear algebra over prime fields.

mod echelon;
mod field;
mod lazy;
mod matrix;

pub use echelon::Echelon;
pub use field::{FieldScalar, PrimeField};
pub use matrix::Matrix;

#[allow(unused_imports)]
pub(crate) use matrix::{axpy, kernel_from_rref};

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
        (0usize..6, 0usize..6).prop_flat_map(|(r, c)| {
            (Just(r), Just(c), prop::collection::vec(0i64..7, r * c))
        })
    }

    fn build(r: usize, c: usize, data: &[i64]) -> Matrix {
        let f = PrimeField::new(7).unwrap();
        let rows: Vec<Vec<i64>> = (0..r).map(|i| data[i * c..(i + 1) * c].to_vec()).collect();
        if r == 0 {
            return Matrix::zeros(f, 0, c);
        }
        Matrix::from_rows(f, &rows)
    }

    proptest! {
        #[test]
        fn kernel_vectors_are_annihilated((r, c, data) in small_matrix()) {
            let m = build(r, c, &data);
            let kernel = m.kernel_basis();
            prop_assert_eq!(kernel.len() + m.rank(), c);
            for v in &kernel {
                prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
            }
        }

        #[test]
        fn rref_is_reduced_and_preserves_row_space((r, c, data) in small_matrix()) {
            let m = build(r, c, &data);
            let (red, pivots) = m.rref();
            prop_assert!(pivots.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(pivots.len() <= r.min(c));
            for (i, &p) in pivots.iter().enumerate() {
                prop_assert_eq!(red.get(i, p), 1);
                for k in 0..r {
                    if k != i {
                        prop_assert_eq!(red.get(k, p), 0);
                    }
                }
            }
            // row space preserved: stacking does not raise the rank
            prop_assert_eq!(m.vstack(&red).rank(), pivots.len());
        }

        #[test]
        fn solve_is_exact((r, c, data) in small_matrix(), rhs in prop::collection::vec(0u32..7, 6)) {
            let m = build(r, c, &data);
            let rhs = &rhs[..r];
            match m.solve(rhs) {
                Some(x) => prop_assert_eq!(m.mul_vec(&x), rhs.to_vec()),
                None => {
                    let col = Matrix::from_columns(m.field(), r, &[rhs.to_vec()]);
                    prop_assert!(m.hstack(&col).rank() > m.rank());
                }
            }
        }
    }
}
