//! Cramer's rule for 3x3 systems over any `Scalar` domain.

use super::scalar::Scalar;
use crate::error::{Error, Result};

fn det2<T: Scalar>(a: &T, b: &T, c: &T, d: &T) -> T {
    a.times(d).minus(&b.times(c))
}

fn det3<T: Scalar>(m: &[[T; 3]; 3]) -> T {
    let t0 = m[0][0].times(&det2(&m[1][1], &m[1][2], &m[2][1], &m[2][2]));
    let t1 = m[0][1].times(&det2(&m[1][0], &m[1][2], &m[2][0], &m[2][2]));
    let t2 = m[0][2].times(&det2(&m[1][0], &m[1][1], &m[2][0], &m[2][1]));
    t0.minus(&t1).plus(&t2)
}

/// Solves `m * x = rhs`. Over a ring, a determinant that is a zero divisor
/// surfaces as `Error::Split`.
pub fn linsolve3<T: Scalar>(m: &[[T; 3]; 3], rhs: &[T; 3]) -> Result<[T; 3]> {
    let det = det3(m);
    if det.is_zero() {
        return Err(Error::SingularSystem);
    }
    let inv = det.inverse()?;
    let solve = |col: usize| {
        let mut mc = m.clone();
        for (row, r) in mc.iter_mut().zip(rhs) {
            row[col] = r.clone();
        }
        det3(&mc).times(&inv)
    };
    Ok([solve(0), solve(1), solve(2)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{q, Rat};
    use crate::polyalg::{ring_make, UniPoly};
    use proptest::prelude::*;

    fn r(n: i64) -> Rat {
        Rat::from(n)
    }

    fn mat(rows: [[i64; 3]; 3]) -> [[Rat; 3]; 3] {
        rows.map(|row| row.map(r))
    }

    #[test]
    fn identity() {
        let b = [q(1, 2), q(-3, 7), r(5)];
        assert_eq!(linsolve3(&mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), &b).unwrap(), b);
    }

    #[test]
    fn completion_instance() {
        let m = mat([[1, 1, 1], [0, -1, 1], [-1, 0, 0]]);
        let x = linsolve3(&m, &[r(1), r(0), r(-1)]).unwrap();
        assert_eq!(x, [r(1), r(0), r(0)]);
    }

    #[test]
    fn repeated_column_is_singular() {
        let m = mat([[1, 1, 2], [3, 3, 4], [5, 5, 7]]);
        assert!(matches!(linsolve3(&m, &[r(1), r(1), r(1)]), Err(Error::SingularSystem)));
    }

    #[test]
    fn ring_system_splits_on_zero_divisor() {
        // det = w - 1 modulo w^2 - 1
        let w = ring_make(UniPoly::x(), UniPoly::from_ints(&[-1, 0, 1])).unwrap();
        let one = w.embed(&r(1));
        let zero = w.embed(&r(0));
        let m = [
            [w.minus(&one), zero.clone(), zero.clone()],
            [zero.clone(), one.clone(), zero.clone()],
            [zero.clone(), zero.clone(), one.clone()],
        ];
        let rhs = [one.clone(), one.clone(), one];
        assert!(matches!(linsolve3(&m, &rhs), Err(Error::Split(_))));
    }

    #[test]
    fn ring_system_over_field_extension() {
        let w = ring_make(UniPoly::x(), UniPoly::from_ints(&[-2, 0, 1])).unwrap();
        let one = w.embed(&r(1));
        let zero = w.embed(&r(0));
        let m = [
            [w.clone(), one.clone(), zero.clone()],
            [zero.clone(), w.clone(), one.clone()],
            [one.clone(), zero.clone(), w.clone()],
        ];
        let rhs = [one.clone(), w.clone(), w.square()];
        let x = linsolve3(&m, &rhs).unwrap();
        for (row, b) in m.iter().zip(&rhs) {
            let lhs = row[0].times(&x[0]).plus(&row[1].times(&x[1])).plus(&row[2].times(&x[2]));
            assert_eq!(&lhs, b);
        }
    }

    fn gauss(mut a: [[Rat; 3]; 3], mut b: [Rat; 3]) -> Option<[Rat; 3]> {
        for col in 0..3 {
            let piv = (col..3).find(|&i| !a[i][col].is_zero())?;
            a.swap(col, piv);
            b.swap(col, piv);
            for i in 0..3 {
                if i != col {
                    let f = a[i][col].checked_div(&a[col][col]).unwrap();
                    let pivot = a[col].clone();
                    for (x, v) in a[i].iter_mut().zip(&pivot) {
                        *x -= &(&f * v);
                    }
                    let t = &f * &b[col];
                    b[i] -= &t;
                }
            }
        }
        Some([0, 1, 2].map(|i| b[i].checked_div(&a[i][i]).unwrap()))
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| q(n, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn agrees_with_gaussian_elimination(
            entries in proptest::collection::vec(small_rat(), 9),
            rhs in proptest::collection::vec(small_rat(), 3),
        ) {
            let m = [0, 1, 2].map(|i| [0, 1, 2].map(|j| entries[3 * i + j].clone()));
            let b = [rhs[0].clone(), rhs[1].clone(), rhs[2].clone()];
            match gauss(m.clone(), b.clone()) {
                Some(expected) => prop_assert_eq!(linsolve3(&m, &b).unwrap(), expected),
                None => prop_assert!(matches!(linsolve3(&m, &b), Err(Error::SingularSystem))),
            }
        }
    }
}
