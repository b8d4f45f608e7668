use crate::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

fn matrix<const N: usize>(rows: [[i64; N]; N]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

/// Coefficient matrix of the eight degree-`d` flag relations.
pub fn det8_matrix(d: i64) -> Vec<Vec<BigInt>> {
    matrix([
        [2 * (3 * d - 3), -d, 0, 0, 0, 0, 0, 0],
        [0, 3 * d - 4, -2 * d, 0, 0, 0, 0, 0],
        [2 * (d - 2), 0, 0, -d * (3 * d - 2), d * d, 0, 0, 0],
        [0, 0, 2 * (3 * d - 5), 0, 0, 0, -d, 0],
        [0, 0, 2 * (3 * d - 5), 0, 0, -(3 * d - 5), 0, 0],
        [0, 3 * d - 3, -4 * d + 4, 0, (3 * d - 4) * (3 * d - 3), 0, 0, -(3 * d - 4) * d],
        [0, d - 2, 0, 0, -d * (3 * d - 3), 0, 0, d * d],
        [0, 0, 0, 0, -(3 * d - 4) * d, d * d, 0, 0],
    ])
}

/// Coefficient matrix of the three tangency relations.
pub fn det3_matrix(d: i64) -> Vec<Vec<BigInt>> {
    matrix([
        [(3 * d - 1) * d * (4 - 3 * d), d * d, 1],
        [-(3 * d - 2) * (3 * d - 1) * d, d * d, 0],
        [(3 * d - 3) * (3 * d - 2) * (3 * d - 1), (3 * d - 3) * (7 * d + 2), (3 * d - 3) * (3 * d - 2)],
    ])
}

/// `-12 d⁶ (3d-5)(d-1)(3d-4)(3d-2)`.
pub fn det8_closed_form(d: i64) -> BigInt {
    let d6 = BigInt::from(d).pow(6);
    BigInt::from(-12) * d6 * BigInt::from((3 * d - 5) * (d - 1) * (3 * d - 4) * (3 * d - 2))
}

/// `6 d (d-1)(3d-1)(3d-2)(d²-4d-1)`.
pub fn det3_closed_form(d: i64) -> BigInt {
    BigInt::from(6 * d * (d - 1)) * BigInt::from((3 * d - 1) * (3 * d - 2)) * BigInt::from(d * d - 4 * d - 1)
}

pub fn det_check_8x8(d: i64) -> Rational {
    Rational::from_integer(determinant(det8_matrix(d)))
}

pub fn det_check_3x3(d: i64) -> Rational {
    Rational::from_integer(determinant(det3_matrix(d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    #[test]
    fn low_degree_values() {
        assert_eq!(det_check_8x8(2), int(-6144));
        // 6·2·1·5·4·(4 - 8 - 1)
        assert_eq!(det_check_3x3(2), int(-1200));
        assert_eq!(det_check_3x3(3), int(-8064));
        assert_eq!(det_check_8x8(12), int(-13293887422464));
        assert_eq!(det_check_3x3(12), int(89535600));
    }

    #[test]
    fn matrices_match_closed_forms() {
        for d in 2..=12 {
            assert_eq!(determinant(det8_matrix(d)), det8_closed_form(d), "8x8 at d = {d}");
            assert_eq!(determinant(det3_matrix(d)), det3_closed_form(d), "3x3 at d = {d}");
            assert!(!det8_closed_form(d).is_zero() && !det3_closed_form(d).is_zero());
        }
    }

    #[test]
    fn pivoting() {
        let m = matrix([[0, 1], [1, 0]]);
        assert_eq!(determinant(m), BigInt::from(-1));
        assert_eq!(determinant(matrix([[1, 2], [2, 4]])), BigInt::zero());
    }

    proptest! {
        #[test]
        fn agrees_with_cofactor_expansion(v in prop::collection::vec(-9i64..10, 9)) {
            let m = matrix([[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]]);
            let expected = v[0] * (v[4] * v[8] - v[5] * v[7]) - v[1] * (v[3] * v[8] - v[5] * v[6])
                + v[2] * (v[3] * v[7] - v[4] * v[6]);
            prop_assert_eq!(determinant(m), BigInt::from(expected));
        }
    }
}
