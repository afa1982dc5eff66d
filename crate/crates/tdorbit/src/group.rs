//! The group `G_n = TD_n(F_q)`: elements, multiplication, inverse, conjugation
//! and deterministic enumeration.
//!
//! An element is a coordinate pair `g(alpha; beta)` with `alpha` of length `n`
//! and `beta` of length `n - 1`; the two-diagonal matrix realization is never
//! materialized outside of tests.

use crate::fq::FieldElement;
use crate::{Budget, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub alpha: Vec<FieldElement>,
    pub beta: Vec<FieldElement>,
}

impl GroupElement {
    pub fn new(alpha: Vec<FieldElement>, beta: Vec<FieldElement>) -> Self {
        assert!(!alpha.is_empty(), "n must be at least 1");
        assert_eq!(alpha.len(), beta.len() + 1, "beta must have length n - 1");
        let p = alpha[0].modulus();
        assert!(
            alpha.iter().chain(&beta).all(|e| e.modulus() == p),
            "mixed moduli in group element"
        );
        GroupElement { alpha, beta }
    }

    pub fn identity(n: usize, q: u32) -> Self {
        GroupElement::new(
            vec![FieldElement::zero(q); n],
            vec![FieldElement::zero(q); n - 1],
        )
    }

    pub fn n(&self) -> usize {
        self.alpha.len()
    }

    pub fn q(&self) -> u32 {
        self.alpha[0].modulus()
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.iter().all(|e| e.is_zero()) && self.beta.iter().all(|e| e.is_zero())
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() || self.q() != other.q() {
            return Err(Error::ShapeMismatch(format!(
                "(n, q) = ({}, {}) vs ({}, {})",
                self.n(),
                self.q(),
                other.n(),
                other.q()
            )));
        }
        Ok(())
    }

    /// Group law: alphas add, beta_i picks up the cross term alpha_i * alpha'_(i+1).
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let alpha = self
            .alpha
            .iter()
            .zip(&other.alpha)
            .map(|(a, b)| *a + *b)
            .collect();
        let beta = (0..self.beta.len())
            .map(|i| self.beta[i] + other.beta[i] + self.alpha[i] * other.alpha[i + 1])
            .collect();
        Ok(GroupElement::new(alpha, beta))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.multiply(other).expect("group element shapes differ")
    }

    pub fn inverse(&self) -> Self {
        let alpha: Vec<FieldElement> = self.alpha.iter().map(|a| -*a).collect();
        let beta = (0..self.beta.len())
            .map(|i| -self.beta[i] + self.alpha[i] * self.alpha[i + 1])
            .collect();
        GroupElement::new(alpha, beta)
    }

    /// `by^(-1) * self * by`, via the closed-form shift: alpha is fixed and
    /// beta_i moves by `alpha_i * by_(i+1) - alpha_(i+1) * by_i`.
    pub fn conjugate(&self, by: &Self) -> Result<Self> {
        self.same_shape(by)?;
        let beta = (0..self.beta.len())
            .map(|i| {
                self.beta[i] + self.alpha[i] * by.alpha[i + 1] - self.alpha[i + 1] * by.alpha[i]
            })
            .collect();
        Ok(GroupElement::new(self.alpha.clone(), beta))
    }

    /// Index of this element in the lexicographic enumeration.
    pub fn index(&self) -> usize {
        let q = self.q() as usize;
        let mut idx = 0usize;
        for e in self.alpha.iter().chain(&self.beta) {
            idx = idx * q + e.value() as usize;
        }
        idx
    }

    /// Inverse of [`GroupElement::index`].
    pub fn from_index(mut idx: usize, n: usize, q: u32) -> Self {
        let qu = q as usize;
        let mut digits = vec![0u32; 2 * n - 1];
        for d in digits.iter_mut().rev() {
            *d = (idx % qu) as u32;
            idx /= qu;
        }
        let alpha = digits[..n]
            .iter()
            .map(|&v| FieldElement::new(v, q))
            .collect();
        let beta = digits[n..]
            .iter()
            .map(|&v| FieldElement::new(v, q))
            .collect();
        GroupElement::new(alpha, beta)
    }
}

impl std::fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "g({:?}; {:?})", self.alpha, self.beta)
    }
}

/// Order of `G_n` over `F_q`: `q^(2n-1)`.
pub fn group_order(n: usize, q: u32) -> u128 {
    crate::qpow(q, 2 * n as u32 - 1)
}

/// All `q^(2n-1)` elements, lexicographic in `(alpha, beta)`.
pub fn enumerate_group(n: usize, q: u32, budget: &Budget) -> Result<Vec<GroupElement>> {
    assert!(n >= 1);
    assert!(crate::fq::is_prime(q), "q must be prime");
    let count = group_order(n, q);
    budget.check_elements(count, "group enumeration")?;
    Ok((0..count as usize)
        .map(|i| GroupElement::from_index(i, n, q))
        .collect())
}
