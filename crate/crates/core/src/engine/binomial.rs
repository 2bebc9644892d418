use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Arbitrary-precision nonnegative integer used for every coefficient and count.
pub type BigCount = BigUint;

/// Exact `C(n, k)`, zero when `k > n`.
///
/// Uses the multiply-then-divide recurrence `C(n-k+i, i) = C(n-k+i-1, i-1)·(n-k+i)/i`,
/// so every intermediate value is itself a binomial coefficient and each
/// division is exact. Runs in machine words until the value no longer fits.
pub fn binomial(n: u64, k: u64) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    let k = k.min(n - k);
    let base = n - k;
    let mut small: u128 = 1;
    for i in 1..=k {
        let factor = u128::from(base + i);
        match small.checked_mul(factor) {
            Some(v) => small = v / u128::from(i),
            None => {
                let mut big = BigCount::from(small);
                for j in i..=k {
                    big *= base + j;
                    big /= j;
                }
                return big;
            }
        }
    }
    BigCount::from(small)
}

/// Multinomial coefficient `d! / (k₁!⋯k_ξ!)`, evaluated as the telescoping
/// product `Π_i C(k₁+⋯+k_i, k_i)`. Zero when the parts do not sum to `d`.
pub fn multinomial(d: usize, parts: &[usize]) -> BigCount {
    if parts.iter().sum::<usize>() != d {
        return BigCount::zero();
    }
    let mut prefix = 0u64;
    let mut acc = BigCount::one();
    for &k in parts {
        if k == 0 {
            continue;
        }
        prefix += k as u64;
        acc *= binomial(prefix, k as u64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Pascal's triangle by additions only.
    fn pascal_row(n: usize) -> Vec<BigCount> {
        let mut row = vec![BigCount::one()];
        for _ in 0..n {
            let mut next = vec![BigCount::one(); row.len() + 1];
            for k in 1..row.len() {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
        row
    }

    fn factorial(n: usize) -> BigCount {
        (1..=n).fold(BigCount::one(), |acc, i| acc * i)
    }

    #[test]
    fn small_values() {
        assert_eq!(binomial(4, 2), BigCount::from(6u32));
        for n in 0..30 {
            assert_eq!(binomial(n, 0), BigCount::one());
            assert_eq!(binomial(n, n), BigCount::one());
            assert_eq!(binomial(n, n + 1), BigCount::zero());
        }
    }

    #[test]
    fn matches_pascal_oracle() {
        let row = pascal_row(100);
        let c = binomial(100, 50);
        assert_eq!(c, row[50]);
        assert_eq!(c.bits(), 97);
        assert_eq!(c.to_string(), "100891344545564193334812497256");
        for n in [0usize, 1, 7, 33, 64, 67, 130] {
            let row = pascal_row(n);
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(&binomial(n as u64, k as u64), expected, "C({n},{k})");
            }
        }
    }

    #[test]
    fn multinomial_cases() {
        assert_eq!(multinomial(4, &[2, 2]), BigCount::from(6u32));
        assert_eq!(multinomial(9, &[9]), BigCount::one());
        assert_eq!(multinomial(3, &[1, 1, 1]), BigCount::from(6u32));
        assert_eq!(multinomial(3, &[1, 1]), BigCount::zero());
        assert_eq!(multinomial(0, &[]), BigCount::one());
        assert_eq!(multinomial(5, &[0, 5, 0]), BigCount::one());
    }

    #[test]
    fn three_distinct_labels_arrangements() {
        // brute force: arrangements of labels a, b, c in three slots
        let mut count = 0;
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    if a != b && b != c && a != c {
                        count += 1;
                    }
                }
            }
        }
        assert_eq!(multinomial(3, &[1, 1, 1]), BigCount::from(count as u32));
    }

    #[test]
    fn multinomial_matches_factorials_exhaustively() {
        for d in 0..=20usize {
            for k1 in 0..=d {
                for k2 in 0..=d - k1 {
                    let k3 = d - k1 - k2;
                    let naive = factorial(d) / (factorial(k1) * factorial(k2) * factorial(k3));
                    assert_eq!(multinomial(d, &[k1, k2, k3]), naive);
                }
            }
        }
    }
}
