use num_bigint::BigInt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("moduli {a} and {b} are not coprime")]
    NonCoprimeModuli { a: BigInt, b: BigInt },

    #[error("congruence residue {residue} is out of range for modulus {modulus}")]
    InvalidCongruence { residue: BigInt, modulus: BigInt },

    #[error("residue {residue} mod {modulus} is not a valid class (need a prime modulus and residue < modulus)")]
    InvalidResidueClass { residue: u64, modulus: u64 },

    #[error("duplicate modulus {0} among residue classes")]
    DuplicateModulus(u64),

    #[error("the classes do not cover the window")]
    NotACovering,

    #[error("the covering is not restricted")]
    NotRestricted,

    #[error("operation requires odd prime moduli, found modulus 2")]
    EvenModulusPresent,

    #[error("no class with modulus 2 present")]
    NoEvenClass,

    #[error("window length {0} must be odd")]
    EvenLength(u64),

    #[error("gap {0} is odd; only even gaps can occur")]
    OddGap(u64),

    #[error("not a consecutive-coprime pair: {0}")]
    InvalidPair(String),

    #[error("covering moduli do not match the expected prime set")]
    ModulusSetMismatch,

    #[error("witness construction failed at k={k}: {reason}")]
    ConstructionFailed { k: u32, reason: &'static str },

    #[error("sieve period for k={k} exceeds the configured cap (max k={max_k})")]
    PeriodTooLarge { k: u32, max_k: u32 },

    #[error("window length {length} exceeds the supported maximum {max}")]
    WindowTooLong { length: u64, max: u64 },

    #[error("invalid search problem: {0}")]
    InvalidSearchProblem(String),

    #[error("reports must cover consecutive k starting at 1: expected k={expected}, found k={found}")]
    GapInReportSequence { expected: u32, found: u32 },

    #[error("witness cache is at level {found}, cannot analyze k={requested}")]
    WitnessCacheOutOfSync { requested: u32, found: u32 },

    #[error("time budget exceeded")]
    TimeBudgetExceeded,

    #[error("internal verification failed: {0}")]
    VerificationFailed(&'static str),
}
