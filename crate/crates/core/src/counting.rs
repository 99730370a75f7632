//! Exact counts of lone-child-avoiding trees on `[n]` rooted at 1.
//!
//! The closed form is the alternating sum
//!
//! ```text
//! a(n) = (1/n) * sum_{k=1..n} (-1)^(n-k) * C(n,k) * (n-1)!/(k-1)! * k^(k-1)
//! ```
//!
//! evaluated with arbitrary-precision integers. Two enumeration-based
//! oracles sit next to it: direct counting over all trees, and the signed
//! total over all G-configurations.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::enumerate::{
    all_gconfigs, mask_partitions, run_partitioned, tree_partitions, EnumError, GConfigEnumerator,
    Guard,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("size must be at least 1")]
    ZeroSize,
    #[error("k = {k} is outside 1..={n}")]
    KOutOfRange { n: usize, k: usize },
    #[error("alternating sum {sum} for n = {n} is not divisible by n")]
    NotDivisible { n: usize, sum: BigInt },
    #[error(transparent)]
    Enumeration(#[from] EnumError),
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `n (n-1) ... (n-len+1)`.
pub fn falling_factorial(n: u64, len: u64) -> BigInt {
    debug_assert!(len <= n);
    (0..len).fold(BigInt::one(), |acc, i| acc * (n - i))
}

/// Multiplicative binomial; every intermediate division is exact.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn power(base: u64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// Signed summand `(-1)^(n-k) * C(n,k) * (n-1)!/(k-1)! * k^(k-1)`, without
/// the leading `1/n`.
pub fn formula_term(n: usize, k: usize) -> Result<BigInt, CountError> {
    if k == 0 || k > n {
        return Err(CountError::KOutOfRange { n, k });
    }
    let (n64, k64) = (n as u64, k as u64);
    let magnitude =
        binomial(n64, k64) * falling_factorial(n64 - 1, n64 - k64) * power(k64, (k - 1) as u32);
    Ok(if (n - k).is_multiple_of(2) {
        magnitude
    } else {
        -magnitude
    })
}

/// Number of lone-child-avoiding trees on `[n]` rooted at 1.
pub fn formula_count(n: usize) -> Result<BigInt, CountError> {
    if n == 0 {
        return Err(CountError::ZeroSize);
    }
    let mut sum = BigInt::zero();
    for k in 1..=n {
        sum += formula_term(n, k)?;
    }
    let (quotient, remainder) = sum.div_rem(&BigInt::from(n));
    if !remainder.is_zero() {
        return Err(CountError::NotDivisible { n, sum });
    }
    Ok(quotient)
}

/// Lone-child-avoiding trees on `[n]` with any root.
pub fn rooted_count(n: usize) -> Result<BigInt, CountError> {
    Ok(formula_count(n)? * n)
}

/// Counts lone-child-avoiding trees among all `n^(n-2)` trees rooted at 1.
pub fn brute_force_count(n: usize, guard: &Guard) -> Result<BigInt, CountError> {
    brute_force_count_jobs(n, guard, 1)
}

pub fn brute_force_count_jobs(n: usize, guard: &Guard, jobs: usize) -> Result<BigInt, CountError> {
    let parts = tree_partitions(n, guard)?;
    let counts = run_partitioned(parts, jobs, |trees| {
        trees.filter(|t| t.is_lone_child_avoiding()).count() as u64
    });
    Ok(BigInt::from(counts.into_iter().sum::<u64>()))
}

/// Per-`k` tallies over all G-configurations of size `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigTally {
    pub n: usize,
    /// `per_k[k - 1]` configurations have `k` tree vertices.
    pub per_k: Vec<u64>,
}

impl ConfigTally {
    pub fn total(&self) -> u64 {
        self.per_k.iter().sum()
    }

    /// Sum of `(-1)^(n-k)` over all configurations.
    pub fn signed_total(&self) -> BigInt {
        self.per_k
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                let c = BigInt::from(c);
                if (self.n - (i + 1)).is_multiple_of(2) {
                    c
                } else {
                    -c
                }
            })
            .sum()
    }
}

pub fn tally_gconfigs(n: usize, guard: &Guard, jobs: usize) -> Result<ConfigTally, CountError> {
    // Fails early on guard violations.
    all_gconfigs(n, guard)?;
    let ranges = mask_partitions(n, jobs.max(1) * 16);
    let partials = run_partitioned(ranges, jobs, |masks| {
        let mut per_k = vec![0u64; n];
        for c in GConfigEnumerator::mask_range(n, masks, guard).expect("guard checked") {
            per_k[c.k() - 1] += 1;
        }
        per_k
    });
    let mut per_k = vec![0u64; n];
    for part in partials {
        for (acc, x) in per_k.iter_mut().zip(part) {
            *acc += x;
        }
    }
    Ok(ConfigTally { n, per_k })
}

/// Sum of weights over every G-configuration of size `n`.
pub fn signed_weight_total(n: usize, guard: &Guard) -> Result<BigInt, CountError> {
    Ok(tally_gconfigs(n, guard, 1)?.signed_total())
}

pub fn signed_weight_total_jobs(
    n: usize,
    guard: &Guard,
    jobs: usize,
) -> Result<BigInt, CountError> {
    Ok(tally_gconfigs(n, guard, jobs)?.signed_total())
}

/// `a(1), ..., a(n_max)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    rows: Vec<(usize, BigInt)>,
}

impl SequenceTable {
    pub fn rows(&self) -> &[(usize, BigInt)] {
        &self.rows
    }

    pub fn values(&self) -> impl Iterator<Item = &BigInt> {
        self.rows.iter().map(|(_, a)| a)
    }

    /// OEIS b-file text: `n a(n)` per line, newline-terminated.
    pub fn to_bfile(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SequenceTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, a) in &self.rows {
            writeln!(f, "{n} {a}")?;
        }
        Ok(())
    }
}

pub fn sequence(n_max: usize) -> Result<SequenceTable, CountError> {
    if n_max == 0 {
        return Err(CountError::ZeroSize);
    }
    let rows = (1..=n_max)
        .map(|n| formula_count(n).map(|a| (n, a)))
        .collect::<Result<_, _>>()?;
    Ok(SequenceTable { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent route: factorial-quotient binomial and repeated
    /// multiplication, in plain i128.
    fn term_oracle(n: i128, k: i128) -> i128 {
        let fact = |m: i128| (1..=m).product::<i128>();
        let binom = fact(n) / (fact(k) * fact(n - k));
        let ratio = fact(n - 1) / fact(k - 1);
        let pow = (0..k - 1).fold(1i128, |acc, _| acc * k);
        let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
        sign * binom * ratio * pow
    }

    #[test]
    fn term_examples() {
        assert_eq!(term_oracle(5, 2), -480);
        assert_eq!(term_oracle(5, 3), 1080);
        assert_eq!(formula_term(5, 2).unwrap(), BigInt::from(-480));
        assert_eq!(formula_term(5, 3).unwrap(), BigInt::from(1080));
        for n in 1..=12usize {
            assert_eq!(
                formula_term(n, n).unwrap(),
                BigInt::from(n).pow(n as u32 - 1)
            );
        }
    }

    #[test]
    fn terms_match_oracle() {
        for n in 1..=20i128 {
            for k in 1..=n {
                assert_eq!(
                    formula_term(n as usize, k as usize).unwrap(),
                    BigInt::from(term_oracle(n, k)),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn term_range_errors() {
        assert_eq!(
            formula_term(3, 0),
            Err(CountError::KOutOfRange { n: 3, k: 0 })
        );
        assert_eq!(
            formula_term(3, 4),
            Err(CountError::KOutOfRange { n: 3, k: 4 })
        );
        assert_eq!(formula_count(0), Err(CountError::ZeroSize));
        assert_eq!(sequence(0), Err(CountError::ZeroSize));
    }

    #[test]
    fn five_by_hand() {
        // 120 - 480 + 1080 - 1280 + 625 = 65
        let terms: Vec<BigInt> = (1..=5).map(|k| formula_term(5, k).unwrap()).collect();
        let expect: Vec<BigInt> = [120, -480, 1080, -1280, 625].map(BigInt::from).to_vec();
        assert_eq!(terms, expect);
        assert_eq!(formula_count(5).unwrap(), BigInt::from(13));
        assert_eq!(rooted_count(5).unwrap(), BigInt::from(65));
    }

    #[test]
    fn small_counts() {
        assert_eq!(formula_count(1).unwrap(), BigInt::from(1));
        assert_eq!(formula_count(8).unwrap(), BigInt::from(4803));
        assert_eq!(rooted_count(1).unwrap(), BigInt::from(1));
        assert_eq!(rooted_count(3).unwrap(), BigInt::from(3));
    }

    #[test]
    fn helpers() {
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(falling_factorial(7, 3), BigInt::from(210));
        assert_eq!(falling_factorial(7, 0), BigInt::from(1));
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(power(3, 4), BigInt::from(81));
        assert_eq!(
            binomial(100, 50),
            factorial(100) / (factorial(50) * factorial(50))
        );
    }

    #[test]
    fn brute_force_small() {
        let g = Guard::default();
        assert_eq!(brute_force_count(2, &g).unwrap(), BigInt::from(0));
        assert_eq!(brute_force_count(4, &g).unwrap(), BigInt::from(1));
        assert_eq!(brute_force_count(6, &g).unwrap(), BigInt::from(51));
        assert_eq!(brute_force_count_jobs(6, &g, 3).unwrap(), BigInt::from(51));
        assert!(matches!(
            brute_force_count(11, &g),
            Err(CountError::Enumeration(EnumError::LimitExceeded { .. }))
        ));
    }

    #[test]
    fn signed_totals_small() {
        let g = Guard::default();
        assert_eq!(signed_weight_total(2, &g).unwrap(), BigInt::from(0));
        assert_eq!(signed_weight_total(3, &g).unwrap(), BigInt::from(1));
        let tally = tally_gconfigs(3, &g, 1).unwrap();
        assert_eq!(tally.per_k, vec![2, 4, 3]);
        assert_eq!(tally.total(), 9);
        assert_eq!(
            tally_gconfigs(5, &g, 4).unwrap(),
            tally_gconfigs(5, &g, 1).unwrap()
        );
    }

    #[test]
    fn sequence_and_bfile() {
        let s = sequence(10).unwrap();
        let got: Vec<String> = s.values().map(|a| a.to_string()).collect();
        assert_eq!(
            got,
            ["1", "0", "1", "1", "13", "51", "601", "4803", "63673", "775351"]
        );
        assert_ne!(s.rows()[7].1, BigInt::from(4806));
        assert_ne!(s.rows()[8].1, BigInt::from(39173));
        assert_eq!(sequence(1).unwrap().to_bfile(), "1 1\n");
        assert!(s.to_bfile().ends_with("10 775351\n"));
    }
}
