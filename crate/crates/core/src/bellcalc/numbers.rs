use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::bases::Monomial;
use crate::linalg::LinComb;
use crate::scalar::Rational;

/// Stirling numbers of the second kind, `S(n, k)`: partitions of an
/// `n`-set into `k` non-empty blocks.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    stirling2_row(n).into_iter().nth(k).unwrap_or_else(BigUint::zero)
}

/// `[S(n,0), …, S(n,n)]` from `S(n,k) = k·S(n−1,k) + S(n−1,k−1)`.
pub fn stirling2_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m + 1];
        for k in 1..=m {
            let stay = if k < m { &row[k] * BigUint::from(k) } else { BigUint::zero() };
            next[k] = stay + &row[k - 1];
        }
        row = next;
    }
    row
}

/// Bell numbers by the Bell triangle.
pub fn bell(n: usize) -> BigUint {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("non-empty").clone());
        for x in &row {
            let v = next.last().expect("non-empty") + x;
            next.push(v);
        }
        row = next;
    }
    row.swap_remove(0)
}

/// `B_n(y) = Σ_k S(n,k) yᵏ`, as a polynomial in the variable `y`.
pub fn bell_polynomial(n: usize) -> LinComb<Monomial<char>> {
    stirling2_row(n)
        .into_iter()
        .enumerate()
        .map(|(k, s)| (Monomial::power('y', k as u32), Rational::from_integer(s.into())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bellcalc::partition::for_each_set_partition;
    use crate::scalar::int;

    #[test]
    fn stirling_examples() {
        for n in 1..8 {
            assert_eq!(stirling2(n, n), BigUint::one());
            assert_eq!(stirling2(n, 0), BigUint::zero());
        }
        assert_eq!(stirling2(0, 0), BigUint::one());
        assert_eq!(stirling2(3, 2), BigUint::from(3u32));
        assert_eq!(stirling2(4, 2), BigUint::from(7u32));
        assert_eq!(stirling2(2, 5), BigUint::zero());
    }

    #[test]
    fn stirling_matches_enumeration() {
        for n in 0..=8 {
            let mut counts = vec![0u64; n + 1];
            for_each_set_partition(n, |p| counts[p.num_blocks()] += 1);
            for (k, c) in counts.into_iter().enumerate() {
                assert_eq!(stirling2(n, k), BigUint::from(c), "S({n},{k})");
            }
        }
    }

    #[test]
    fn bell_examples() {
        let small: Vec<BigUint> = (0..=3).map(bell).collect();
        assert_eq!(small, [1u32, 1, 2, 5].map(BigUint::from));
        assert_eq!(bell(10), BigUint::from(115_975u32));
        for n in 0..=12 {
            assert_eq!(bell(n), stirling2_row(n).into_iter().sum::<BigUint>());
        }
    }

    #[test]
    fn bell_polynomial_examples() {
        let y = |k| Monomial::power('y', k);
        assert_eq!(bell_polynomial(1), LinComb::basis(y(1)));
        let b3 = bell_polynomial(3);
        assert_eq!(b3.len(), 3);
        assert_eq!(b3.coeff(&y(2)), int(3));
        assert_eq!(b3.to_string(), "y + 3*y^2 + y^3");
        let at_one: Rational = bell_polynomial(2).iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(at_one, int(2));
    }
}
