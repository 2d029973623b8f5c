//! Coverings of integer windows by residue classes with distinct prime
//! moduli, and their correspondence with consecutive-coprime pairs.
//!
//! A set of classes `{a_i mod p_i}` covers the window `<a>_m` (the `m`
//! consecutive integers starting at `a`) when every position is congruent to
//! some class. A covering is *restricted* when no class additionally covers
//! either position just outside the window; restricted coverings of `<1>_L`
//! over the first k primes are exactly the gaps of length `L+1` between
//! consecutive integers coprime to the k-th primorial.

use crate::crt::{crt_solve, CongruenceSystem};
use crate::error::Error;
use crate::primes::{is_prime, PrimeSet};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt;

/// Windows longer than this are rejected by the checkers to keep scans cheap.
pub const MAX_WINDOW_LEN: u64 = 1 << 24;

/// A residue `a` modulo a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct ResidueClass {
    residue: u64,
    modulus: u64,
}

impl ResidueClass {
    pub fn new(residue: u64, modulus: u64) -> Result<Self, Error> {
        if residue >= modulus || !is_prime(modulus) {
            return Err(Error::InvalidResidueClass { residue, modulus });
        }
        Ok(ResidueClass { residue, modulus })
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Whether the class contains the given integer.
    pub fn contains(&self, n: &BigInt) -> bool {
        mod_u64(n, self.modulus) == self.residue
    }
}

impl fmt::Display for ResidueClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.modulus)
    }
}

/// The window `<start>_length`: the integers start, start+1, ..., start+length-1.
/// Length 0 denotes the empty window.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    start: BigInt,
    length: u64,
}

impl Window {
    pub fn new(start: impl Into<BigInt>, length: u64) -> Self {
        Window {
            start: start.into(),
            length,
        }
    }

    pub fn start(&self) -> &BigInt {
        &self.start
    }

    pub fn length(&self) -> u64 {
        self.length
    }

    /// One past the last position.
    pub fn end(&self) -> BigInt {
        &self.start + self.length
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>_{}", self.start, self.length)
    }
}

fn mod_u64(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits u64")
}

fn check_distinct_moduli(classes: &[ResidueClass]) -> Result<(), Error> {
    let mut seen: Vec<u64> = classes.iter().map(|c| c.modulus).collect();
    seen.sort_unstable();
    for w in seen.windows(2) {
        if w[0] == w[1] {
            return Err(Error::DuplicateModulus(w[0]));
        }
    }
    Ok(())
}

/// Marks covered offsets; shared by the checkers below.
fn coverage_map(classes: &[ResidueClass], window: &Window) -> Result<Vec<bool>, Error> {
    if window.length > MAX_WINDOW_LEN {
        return Err(Error::WindowTooLong {
            length: window.length,
            max: MAX_WINDOW_LEN,
        });
    }
    let len = window.length as usize;
    let mut hit = vec![false; len];
    for class in classes {
        let p = class.modulus;
        let start_mod = mod_u64(&window.start, p);
        // Smallest offset j with start + j ≡ residue (mod p).
        let mut j = (class.residue + p - start_mod) % p;
        while (j as usize) < len {
            hit[j as usize] = true;
            j += p;
        }
    }
    Ok(hit)
}

/// True iff every window position belongs to some class.
/// Classes must have pairwise distinct prime moduli.
pub fn covers(classes: &[ResidueClass], window: &Window) -> Result<bool, Error> {
    check_distinct_moduli(classes)?;
    Ok(coverage_map(classes, window)?.iter().all(|&h| h))
}

/// True iff `covers` holds and no class contains `start-1` or `start+length`.
pub fn is_restricted(classes: &[ResidueClass], window: &Window) -> Result<bool, Error> {
    if !covers(classes, window)? {
        return Ok(false);
    }
    let before = &window.start - 1;
    let after = window.end();
    Ok(classes
        .iter()
        .all(|c| !c.contains(&before) && !c.contains(&after)))
}

/// A set of residue classes with pairwise distinct prime moduli together with
/// a target window. Construction enforces distinctness; whether the classes
/// actually cover the window is checked by the operations that need it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Covering {
    classes: Vec<ResidueClass>,
    window: Window,
}

impl Covering {
    pub fn new(mut classes: Vec<ResidueClass>, window: Window) -> Result<Self, Error> {
        check_distinct_moduli(&classes)?;
        classes.sort_by_key(|c| c.modulus);
        Ok(Covering { classes, window })
    }

    pub fn classes(&self) -> &[ResidueClass] {
        &self.classes
    }

    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn moduli(&self) -> impl Iterator<Item = u64> + '_ {
        self.classes.iter().map(|c| c.modulus)
    }

    pub fn covers(&self) -> bool {
        covers(&self.classes, &self.window).expect("moduli distinct by construction")
    }

    pub fn is_restricted(&self) -> bool {
        is_restricted(&self.classes, &self.window).expect("moduli distinct by construction")
    }

    fn require_covering(&self) -> Result<(), Error> {
        if self.covers() {
            Ok(())
        } else {
            Err(Error::NotACovering)
        }
    }

    /// Shifts the covering to a window of the same length starting at
    /// `new_start`, adjusting every residue by the same offset.
    pub fn relocate(&self, new_start: impl Into<BigInt>) -> Result<Covering, Error> {
        self.require_covering()?;
        let new_start = new_start.into();
        let delta = &new_start - &self.window.start;
        let classes = self
            .classes
            .iter()
            .map(|c| {
                let shift = mod_u64(&delta, c.modulus);
                ResidueClass::new((c.residue + shift) % c.modulus, c.modulus)
                    .expect("shifted residue stays in range")
            })
            .collect();
        let out = Covering::new(classes, Window::new(new_start, self.window.length))?;
        if !out.covers() {
            return Err(Error::VerificationFailed("relocated covering must cover"));
        }
        Ok(out)
    }

    /// Returns the start `b` (least non-negative mod the product of moduli)
    /// such that the all-zero classes `{0 mod p_i}` cover `<b>_m`.
    pub fn zero_align(&self) -> Result<BigInt, Error> {
        self.require_covering()?;
        let mut system = CongruenceSystem::default();
        for c in &self.classes {
            let r = (&self.window.start - c.residue).mod_floor(&BigInt::from(c.modulus));
            system.push(r, BigInt::from(c.modulus))?;
        }
        let (b, _) = crt_solve(&system)?;
        let zero_classes: Vec<ResidueClass> = self
            .classes
            .iter()
            .map(|c| ResidueClass::new(0, c.modulus).expect("0 is a valid residue"))
            .collect();
        let ok = covers(&zero_classes, &Window::new(b.clone(), self.window.length))?;
        if !ok {
            return Err(Error::VerificationFailed("zero-aligned classes must cover"));
        }
        Ok(b)
    }

    /// Slides the window left until the position before it is uncovered, then
    /// relocates to start 1. The result covers `<1>_m` with every residue
    /// nonzero.
    pub fn normalize_nonzero(&self) -> Result<Covering, Error> {
        self.require_covering()?;
        let mut start = self.window.start.clone();
        let mut steps = 0u64;
        loop {
            let before = &start - 1;
            if !self.classes.iter().any(|c| c.contains(&before)) {
                break;
            }
            start = before;
            steps += 1;
            if steps > MAX_WINDOW_LEN {
                return Err(Error::VerificationFailed(
                    "slide did not reach an uncovered position",
                ));
            }
        }
        let slid = Covering::new(self.classes.clone(), Window::new(start, self.window.length))?;
        let out = slid.relocate(1)?;
        let nonzero = out.classes.iter().all(|c| c.residue != 0);
        if !nonzero || !out.covers() {
            return Err(Error::VerificationFailed(
                "normalized covering must cover <1>_m with nonzero residues",
            ));
        }
        Ok(out)
    }

    /// Lifts a covering over odd primes to one over the same primes plus 2,
    /// covering a window of length `2m+1`: the even positions are taken by
    /// `0 mod 2` and each odd-prime residue is doubled.
    pub fn double_lift(&self) -> Result<Covering, Error> {
        if self.classes.iter().any(|c| c.modulus == 2) {
            return Err(Error::EvenModulusPresent);
        }
        self.require_covering()?;
        let mut system = CongruenceSystem::default();
        system.push(BigInt::zero(), BigInt::from(2u8))?;
        let two_start = BigInt::from(2) * &self.window.start - 1;
        for c in &self.classes {
            let r = two_start.mod_floor(&BigInt::from(c.modulus));
            system.push(r, BigInt::from(c.modulus))?;
        }
        let (b, _) = crt_solve(&system)?;

        let mut classes = vec![ResidueClass::new(0, 2).expect("0 mod 2")];
        for c in &self.classes {
            classes.push(
                ResidueClass::new((2 * c.residue) % c.modulus, c.modulus)
                    .expect("doubled residue stays in range"),
            );
        }
        let out = Covering::new(classes, Window::new(b, 2 * self.window.length + 1))?;
        if !out.covers() {
            return Err(Error::VerificationFailed("doubled covering must cover"));
        }
        Ok(out)
    }

    /// Inverse of [`double_lift`](Self::double_lift): projects a covering that
    /// contains a modulus-2 class and has odd window length onto the odd
    /// primes alone. The positions not taken by the modulus-2 class form an
    /// arithmetic progression of step 2; those are halved into the output
    /// window.
    pub fn halve_project(&self) -> Result<Covering, Error> {
        let even_class = self
            .classes
            .iter()
            .find(|c| c.modulus == 2)
            .copied()
            .ok_or(Error::NoEvenClass)?;
        if self.window.length % 2 == 0 {
            return Err(Error::EvenLength(self.window.length));
        }
        self.require_covering()?;

        let start_parity = mod_u64(&self.window.start, 2);
        // Positions of the parity NOT covered by the modulus-2 class.
        let (first_odd_pos, count) = if start_parity == even_class.residue {
            (&self.window.start + 1, self.window.length / 2)
        } else {
            (self.window.start.clone(), self.window.length / 2 + 1)
        };

        let mut classes = Vec::new();
        let mut system = CongruenceSystem::default();
        for c in &self.classes {
            if c.modulus == 2 {
                continue;
            }
            let inv2 = (c.modulus + 1) / 2;
            classes.push(
                ResidueClass::new((c.residue * inv2) % c.modulus, c.modulus)
                    .expect("halved residue stays in range"),
            );
            let r = (&first_odd_pos * BigInt::from(inv2)).mod_floor(&BigInt::from(c.modulus));
            system.push(r, BigInt::from(c.modulus))?;
        }
        let (a, _) = crt_solve(&system)?;
        let out = Covering::new(classes, Window::new(a, count))?;
        if !out.covers() {
            return Err(Error::VerificationFailed("projected covering must cover"));
        }
        Ok(out)
    }

    /// Converts a restricted covering over exactly the first k primes into
    /// the consecutive-coprime pair it certifies. The covering is relocated
    /// to start 1 if needed; `x` is the least positive solution of
    /// `x ≡ -a_i (mod p_i)` and `y = x + L + 1`.
    pub fn to_coprime_pair(&self, primes: &PrimeSet) -> Result<CoprimePair, Error> {
        let moduli: Vec<u64> = self.moduli().collect();
        if moduli != primes.as_slice() {
            return Err(Error::ModulusSetMismatch);
        }
        let cov = if self.window.start.is_one() {
            self.clone()
        } else {
            self.relocate(1)?
        };
        if !cov.is_restricted() {
            return Err(Error::NotRestricted);
        }
        let mut system = CongruenceSystem::default();
        for c in &cov.classes {
            let r = (BigInt::from(c.modulus) - c.residue).mod_floor(&BigInt::from(c.modulus));
            system.push(r, BigInt::from(c.modulus))?;
        }
        let (x, modulus) = crt_solve(&system)?;
        let y = &x + cov.window.length + 1;
        CoprimePair::new(x, y, modulus)
    }
}

impl fmt::Display for Covering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}} on {}", self.window)
    }
}

/// Two consecutive integers coprime to a squarefree modulus: both endpoints
/// are coprime to it and everything strictly between shares a factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoprimePair {
    x: BigInt,
    y: BigInt,
    modulus: BigInt,
}

impl CoprimePair {
    /// Verifies all pair invariants before constructing.
    pub fn new(x: BigInt, y: BigInt, modulus: BigInt) -> Result<Self, Error> {
        if x >= y {
            return Err(Error::InvalidPair(format!("x={x} must be below y={y}")));
        }
        if &y - &x > BigInt::from(MAX_WINDOW_LEN) {
            return Err(Error::InvalidPair("gap too large to verify".into()));
        }
        if !x.gcd(&modulus).is_one() {
            return Err(Error::InvalidPair(format!("gcd(x, modulus) > 1 for x={x}")));
        }
        if !y.gcd(&modulus).is_one() {
            return Err(Error::InvalidPair(format!("gcd(y, modulus) > 1 for y={y}")));
        }
        let mut z = &x + 1;
        while z < y {
            if z.gcd(&modulus).is_one() {
                return Err(Error::InvalidPair(format!(
                    "interior value {z} is coprime to the modulus"
                )));
            }
            z += 1;
        }
        Ok(CoprimePair { x, y, modulus })
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn gap(&self) -> BigInt {
        &self.y - &self.x
    }

    /// The restricted covering of `<1>_{y-x-1}` certified by this pair:
    /// `a_i ≡ -x (mod p_i)` for each prime.
    pub fn to_covering(&self, primes: &PrimeSet) -> Result<Covering, Error> {
        if primes.product() != self.modulus {
            return Err(Error::InvalidPair(
                "pair modulus does not match the prime set".into(),
            ));
        }
        let classes = primes
            .iter()
            .map(|p| {
                let r = (-&self.x).mod_floor(&BigInt::from(p));
                ResidueClass::new(r.to_u64().expect("residue fits u64"), p)
                    .expect("reduced residue is valid")
            })
            .collect();
        let gap = self.gap().to_u64().ok_or_else(|| {
            Error::InvalidPair("gap too large for a window length".into())
        })?;
        let out = Covering::new(classes, Window::new(1, gap - 1))?;
        if !out.is_restricted() {
            return Err(Error::VerificationFailed(
                "pair-derived covering must be restricted",
            ));
        }
        Ok(out)
    }
}

impl fmt::Display for CoprimePair {
    fmt_pair!();
}

macro_rules! fmt_pair {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "({}, {})", self.x, self.y)
        }
    };
}
use fmt_pair;
