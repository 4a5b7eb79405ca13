use num_bigint::BigInt;
use num_traits::Zero;

/// Binomial coefficient with the convention `C(n,k) = 0` unless `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k.min(n - k)))
}

/// [`binom`] for unsigned arguments.
pub fn binom_u(n: usize, k: usize) -> BigInt {
    binom(n as i64, k as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binom(4, 2), BigInt::from(6));
        assert_eq!(binom(-1, 0), BigInt::from(0));
        assert_eq!(binom(3, -1), BigInt::from(0));
        assert_eq!(binom(3, 4), BigInt::from(0));
        assert_eq!(binom(0, 0), BigInt::from(1));
    }

    #[test]
    fn pascal_rows() {
        // independent oracle: build rows by addition
        let mut row = alloc::vec![BigInt::from(1)];
        for n in 1..=30i64 {
            let mut next = alloc::vec![BigInt::from(1); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for k in 0..=n {
                assert_eq!(binom(n, k), row[k as usize]);
            }
        }
        assert_eq!(binom(6, 3), BigInt::from(20));
    }
}
