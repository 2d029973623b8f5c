//! Simultaneous congruences over pairwise coprime moduli.

use crate::error::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A system of congruences x ≡ r_i (mod m_i) with pairwise coprime moduli.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CongruenceSystem {
    entries: Vec<(BigInt, BigInt)>,
}

impl CongruenceSystem {
    /// Builds a system from `(residue, modulus)` pairs. Each residue must
    /// satisfy `0 <= r < m`. Pairwise coprimality is checked by `crt_solve`.
    pub fn new(entries: Vec<(BigInt, BigInt)>) -> Result<Self, Error> {
        for (r, m) in &entries {
            if m <= &BigInt::zero() || r < &BigInt::zero() || r >= m {
                return Err(Error::InvalidCongruence {
                    residue: r.clone(),
                    modulus: m.clone(),
                });
            }
        }
        Ok(CongruenceSystem { entries })
    }

    /// Convenience constructor from machine-word pairs.
    pub fn from_u64(entries: &[(u64, u64)]) -> Result<Self, Error> {
        Self::new(
            entries
                .iter()
                .map(|&(r, m)| (BigInt::from(r), BigInt::from(m)))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[(BigInt, BigInt)] {
        &self.entries
    }

    pub fn push(&mut self, residue: BigInt, modulus: BigInt) -> Result<(), Error> {
        if modulus <= BigInt::zero() || residue < BigInt::zero() || residue >= modulus {
            return Err(Error::InvalidCongruence { residue, modulus });
        }
        self.entries.push((residue, modulus));
        Ok(())
    }
}

/// Solves the system, returning the unique `0 <= r < M` with `r ≡ r_i (mod m_i)`
/// for all entries, together with `M`, the product of the moduli.
///
/// The empty system yields `(0, 1)`. Moduli sharing a factor are rejected.
pub fn crt_solve(system: &CongruenceSystem) -> Result<(BigInt, BigInt), Error> {
    let entries = system.entries();
    for (i, (_, mi)) in entries.iter().enumerate() {
        for (_, mj) in &entries[i + 1..] {
            if !mi.gcd(mj).is_one() {
                return Err(Error::NonCoprimeModuli {
                    a: mi.clone(),
                    b: mj.clone(),
                });
            }
        }
    }

    let mut r = BigInt::zero();
    let mut m = BigInt::one();
    for (ri, mi) in entries {
        if mi.is_one() {
            continue;
        }
        // Combine x ≡ r (mod m) with x ≡ ri (mod mi): x = r + m*t where
        // t ≡ (ri - r) * m^{-1} (mod mi).
        let egcd = m.extended_gcd(mi);
        debug_assert!(egcd.gcd.is_one());
        let t = ((ri - &r) * egcd.x).mod_floor(mi);
        r += &m * t;
        m *= mi;
        r = r.mod_floor(&m);
    }
    Ok((r, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    /// Independent oracle: scan [0, M) for the unique solution.
    fn brute_solve(entries: &[(u64, u64)]) -> Option<(u64, u64)> {
        let m: u64 = entries.iter().map(|&(_, m)| m).product();
        let mut found = None;
        for x in 0..m.max(1) {
            if entries.iter().all(|&(r, mi)| x % mi == r) {
                if found.is_some() {
                    return None; // not unique: moduli were not coprime
                }
                found = Some(x);
            }
        }
        found.map(|x| (x, m.max(1)))
    }

    fn solve_u64(entries: &[(u64, u64)]) -> Result<(u64, u64), Error> {
        let sys = CongruenceSystem::from_u64(entries).unwrap();
        let (r, m) = crt_solve(&sys)?;
        Ok((r.to_u64().unwrap(), m.to_u64().unwrap()))
    }

    #[test]
    fn two_entry_example() {
        assert_eq!(solve_u64(&[(0, 2), (1, 3)]).unwrap(), (4, 6));
    }

    #[test]
    fn three_entry_example_matches_scan() {
        // Independent check by brute scan of 0..29.
        assert_eq!(brute_solve(&[(0, 2), (1, 3), (4, 5)]), Some((4, 30)));
        assert_eq!(solve_u64(&[(0, 2), (1, 3), (4, 5)]).unwrap(), (4, 30));
    }

    #[test]
    fn empty_system() {
        assert_eq!(solve_u64(&[]).unwrap(), (0, 1));
    }

    #[test]
    fn shared_factor_rejected() {
        let err = solve_u64(&[(1, 4), (3, 6)]).unwrap_err();
        assert!(matches!(err, Error::NonCoprimeModuli { .. }));
    }

    #[test]
    fn out_of_range_residue_rejected() {
        assert!(CongruenceSystem::from_u64(&[(5, 3)]).is_err());
    }

    #[test]
    fn big_moduli_roundtrip() {
        // Verify r mod m_i directly for a product beyond u64.
        let sys = CongruenceSystem::new(vec![
            (BigInt::from(1u8), BigInt::from(u64::MAX - 58)), // 2^64-59 is prime
            (BigInt::from(7u8), BigInt::from(u64::MAX)),      // coprime to the above
        ])
        .unwrap();
        let (r, m) = crt_solve(&sys).unwrap();
        assert_eq!(m, BigInt::from(u64::MAX - 58) * BigInt::from(u64::MAX));
        assert_eq!(r.mod_floor(&BigInt::from(u64::MAX - 58)), BigInt::from(1u8));
        assert_eq!(r.mod_floor(&BigInt::from(u64::MAX)), BigInt::from(7u8));
    }

    #[test]
    fn random_systems_match_scan() {
        // Small deterministic sweep over valid systems with product <= 10^6.
        let moduli_sets: &[&[u64]] = &[&[2, 3], &[3, 5, 7], &[2, 5, 9], &[4, 9, 25], &[2, 3, 5, 7, 11]];
        for (seed, moduli) in moduli_sets.iter().enumerate() {
            let entries: Vec<(u64, u64)> = moduli
                .iter()
                .enumerate()
                .map(|(i, &m)| ((seed as u64 * 13 + i as u64 * 7 + 3) % m, m))
                .collect();
            let expected = brute_solve(&entries).unwrap();
            assert_eq!(solve_u64(&entries).unwrap(), expected, "moduli {moduli:?}");
        }
    }
}
