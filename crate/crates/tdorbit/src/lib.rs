//! Exact computations for the two-diagonal unitriangular groups `G_n = TD_n(F_q)`:
//! coadjoint orbits, conjugacy classes, irreducible characters built by the orbit
//! method, and a multiplicity-one model assembled from container stabilizers.
//!
//! Everything is integer-exact: scalars live in `F_p`, character values in the
//! cyclotomic ring `Z[zeta_p]`, and inner products are exact rationals. There is
//! no floating point anywhere in this crate.

// parity tests and closed-form counts read better as `% 2` and `(2^n + 2) / 3`
#![allow(clippy::manual_is_multiple_of, clippy::manual_div_ceil)]

pub mod classes;
pub mod cyclo;
pub mod fq;
pub mod group;
pub mod liealg;
pub mod model;
pub mod oracle;
pub mod orbits;
pub mod par;
pub mod partitions;
pub mod reps;
pub mod verify;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operands live in different prime fields (p = {0} vs p = {1})")]
    ModulusMismatch(u32, u32),
    #[error("division by zero in F_{0}")]
    DivisionByZero(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("segment ({lo}, {hi}] has even length")]
    EvenSegment { lo: usize, hi: usize },
    #[error("zero y inside segment ({lo}, {hi}] at position {at}")]
    ZeroInteriorY { lo: usize, hi: usize, at: usize },
    #[error("value lists have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("inner product is not rational: {0}")]
    RationalityViolation(String),
    #[error("compositions are not comparable")]
    NotComparable,
    #[error("composition does not have the requested type")]
    TypeMismatch,
    #[error("orbit is not basic: {0}")]
    NotBasicOrbit(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("parity violation: {0}")]
    ParityViolation(String),
    #[error("invalid stabilizer character: {0}")]
    InvalidStabCharacter(String),
    #[error("slot count mismatch: {0}")]
    SlotCountMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Caps on enumeration sizes. Everything in this crate is desk-scale; the caps
/// exist so a typo in `n` or `q` fails fast instead of allocating forever.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Largest number of elements/points a single enumeration may produce.
    pub max_elements: u64,
    /// Largest number of elementary operations a scan may perform.
    pub max_ops: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_elements: 1 << 22,
            max_ops: 1 << 28,
        }
    }
}

impl Budget {
    pub fn with_limit(limit: u64) -> Self {
        Budget {
            max_elements: limit,
            max_ops: limit.saturating_mul(64),
        }
    }

    pub(crate) fn check_elements(&self, count: u128, what: &str) -> Result<()> {
        if count > self.max_elements as u128 {
            return Err(Error::BudgetExceeded(format!(
                "{what} needs {count} elements, budget allows {}",
                self.max_elements
            )));
        }
        Ok(())
    }

    pub(crate) fn check_ops(&self, count: u128, what: &str) -> Result<()> {
        if count > self.max_ops as u128 {
            return Err(Error::BudgetExceeded(format!(
                "{what} needs {count} operations, budget allows {}",
                self.max_ops
            )));
        }
        Ok(())
    }
}

/// `q^e` as an exact `u128`; panics on overflow in every build profile.
pub fn qpow(q: u32, e: u32) -> u128 {
    (q as u128).checked_pow(e).expect("count exceeds u128")
}

/// Binomial coefficient with the convention `C(a, b) = 0` for `b < 0` or `b > a`.
pub fn binomial(a: i64, b: i64) -> u128 {
    if b < 0 || b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut acc: u128 = 1;
    for i in 0..b {
        acc = acc * (a - i) as u128 / (i + 1) as u128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_convention() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, -1), 0);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn budget_rejects_oversized() {
        let b = Budget::with_limit(10);
        assert!(b.check_elements(11, "test").is_err());
        assert!(b.check_elements(10, "test").is_ok());
    }
}
