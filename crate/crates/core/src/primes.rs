//! Prime generation and primorial numbers.

use num_bigint::BigInt;
use num_traits::One;
use std::fmt;

/// Deterministic primality check by trial division.
///
/// Intended for the small moduli used throughout this crate (primes up to a
/// few thousand); it is exact for all `u64` inputs, just not fast for large
/// ones.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The ordered set of the first `k` primes, 1-indexed like the usual p_i
/// convention: `prime(1) == 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSet {
    primes: Vec<u64>,
}

impl PrimeSet {
    /// Generates the first `k` primes by an incremental trial-division sieve.
    pub fn first(k: usize) -> PrimeSet {
        let mut primes: Vec<u64> = Vec::with_capacity(k);
        let mut candidate = 2u64;
        while primes.len() < k {
            if primes
                .iter()
                .take_while(|&&p| p * p <= candidate)
                .all(|&p| candidate % p != 0)
            {
                primes.push(candidate);
            }
            candidate += if candidate == 2 { 1 } else { 2 };
        }
        PrimeSet { primes }
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// The i-th prime, 1-indexed. Panics if `i` is 0 or out of range.
    pub fn prime(&self, i: usize) -> u64 {
        assert!(i >= 1 && i <= self.primes.len(), "prime index {i} out of range");
        self.primes[i - 1]
    }

    pub fn last(&self) -> Option<u64> {
        self.primes.last().copied()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.primes
    }

    /// The odd primes p_2..p_k (everything after 2).
    pub fn odd_primes(&self) -> &[u64] {
        if self.primes.is_empty() {
            &[]
        } else {
            &self.primes[1..]
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }

    /// Product of all members as a big integer.
    pub fn product(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &p in &self.primes {
            acc *= p;
        }
        acc
    }
}

/// Returns the first `k` primes in order.
pub fn primes_upto_index(k: usize) -> PrimeSet {
    PrimeSet::first(k)
}

/// The k-th primorial: the product of the first `k` primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Primorial {
    pub k: usize,
    pub value: BigInt,
}

impl fmt::Display for Primorial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Computes the k-th primorial exactly.
pub fn primorial(k: usize) -> Primorial {
    Primorial {
        k,
        value: PrimeSet::first(k).product(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn first_prime_is_two() {
        assert_eq!(PrimeSet::first(1).as_slice(), &[2]);
    }

    #[test]
    fn first_six_primes() {
        assert_eq!(PrimeSet::first(6).as_slice(), &[2, 3, 5, 7, 11, 13]);
    }

    #[test]
    fn forty_fourth_prime_is_193() {
        let ps = PrimeSet::first(44);
        assert_eq!(ps.prime(44), 193);
        assert_eq!(ps.last(), Some(193));
    }

    #[test]
    fn primes_are_strictly_increasing_and_prime() {
        let ps = PrimeSet::first(100);
        for w in ps.as_slice().windows(2) {
            assert!(w[0] < w[1]);
        }
        for p in ps.iter() {
            assert!(is_prime(p), "{p} not prime");
        }
    }

    #[test]
    fn odd_primes_drop_two() {
        let ps = PrimeSet::first(4);
        assert_eq!(ps.odd_primes(), &[3, 5, 7]);
        assert_eq!(PrimeSet::first(1).odd_primes(), &[] as &[u64]);
    }

    #[test]
    fn primorial_of_one_is_two() {
        assert_eq!(primorial(1).value, BigInt::from(2));
    }

    #[test]
    fn primorial_of_four_is_210() {
        assert_eq!(primorial(4).value, BigInt::from(2 * 3 * 5 * 7));
    }

    #[test]
    fn primorial_of_nine_matches_direct_product() {
        // Independent route: multiply the nine hardcoded primes in u128.
        let direct: u128 = [2u128, 3, 5, 7, 11, 13, 17, 19, 23].iter().product();
        assert_eq!(direct, 223092870);
        assert_eq!(primorial(9).value.to_u128().unwrap(), direct);
    }

    #[test]
    fn primorial_recurrence() {
        for k in 1..20usize {
            let lhs = primorial(k + 1).value;
            let rhs = primorial(k).value * PrimeSet::first(k + 1).prime(k + 1);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn primorials_are_even() {
        for k in 1..10usize {
            assert!(primorial(k).value.to_u128().unwrap() % 2 == 0);
        }
    }

    #[test]
    fn is_prime_small_values() {
        let known = [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];
        for n in 0..32u64 {
            assert_eq!(is_prime(n), known.contains(&n), "n={n}");
        }
    }
}
