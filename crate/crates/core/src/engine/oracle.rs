use crate::rational::{binomial, int, Rational};

/// Number of rational plane curves of degree `d` through `3d - 1` general
/// points, by the classical quadratic recursion. Shares no code with the
/// flag and tangency recursions.
pub fn kontsevich_oracle(d: i32) -> Rational {
    assert!(d >= 1, "degree must be positive");
    let mut n: Vec<Rational> = vec![int(0), int(1)];
    for e in 2..=d as i64 {
        let mut total = int(0);
        for d1 in 1..e {
            let d2 = e - d1;
            let weight = binomial(3 * e - 4, 3 * d1 - 2) * int(d1 * d1 * d2 * d2)
                - binomial(3 * e - 4, 3 * d1 - 1) * int(d1 * d1 * d1 * d2);
            total += &n[d1 as usize] * &n[d2 as usize] * weight;
        }
        n.push(total);
    }
    n.swap_remove(d as usize)
}
