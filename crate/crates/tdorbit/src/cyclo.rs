//! Exact arithmetic in the cyclotomic ring `Z[zeta_p]` and exact rational inner
//! products of class functions.
//!
//! Elements are stored on the power basis `{1, zeta, ..., zeta^(p-2)}`, reduced
//! via `1 + zeta + ... + zeta^(p-1) = 0`. The representation is unique, so
//! equality of coefficient vectors is equality in the ring, and no floating
//! point is ever involved.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::fq::FieldElement;
use crate::{Error, Result};

/// An element of `Z[zeta_p]` in the reduced power basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    p: u32,
    coeffs: Vec<i64>, // length p - 1
}

impl CycInt {
    pub fn zero(p: u32) -> Self {
        assert!(crate::fq::is_prime(p));
        CycInt {
            p,
            coeffs: vec![0; (p - 1) as usize],
        }
    }

    pub fn one(p: u32) -> Self {
        Self::from_integer(1, p)
    }

    pub fn from_integer(k: i64, p: u32) -> Self {
        let mut c = Self::zero(p);
        c.coeffs[0] = k;
        c
    }

    /// Build from coefficients of `zeta^0 .. zeta^(p-1)` (length `p`), folding
    /// the `zeta^(p-1)` term through the minimal polynomial.
    pub fn from_exponents(p: u32, exps: &[i64]) -> Self {
        assert_eq!(exps.len(), p as usize);
        let top = exps[p as usize - 1];
        let mut coeffs = vec![0i64; (p - 1) as usize];
        for (j, c) in coeffs.iter_mut().enumerate() {
            *c = exps[j] - top;
        }
        CycInt { p, coeffs }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            Err(Error::ModulusMismatch(self.p, other.p))
        } else {
            Ok(())
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("cyclotomic moduli differ")
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycInt { p: self.p, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_ring(other).expect("cyclotomic moduli differ");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        CycInt { p: self.p, coeffs }
    }

    pub fn neg(&self) -> Self {
        CycInt {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("cyclotomic moduli differ")
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let p = self.p as usize;
        // convolve on exponents mod p, then reduce the zeta^(p-1) slot
        let mut exps = vec![0i64; p];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                exps[(i + j) % p] += a * b;
            }
        }
        Ok(Self::from_exponents(self.p, &exps))
    }

    pub fn scale(&self, k: i64) -> Self {
        CycInt {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Complex conjugation, `zeta^j -> zeta^(p-j)`.
    pub fn conj(&self) -> Self {
        let p = self.p as usize;
        let mut exps = vec![0i64; p];
        for (j, &c) in self.coeffs.iter().enumerate() {
            exps[(p - j) % p] += c;
        }
        Self::from_exponents(self.p, &exps)
    }

    /// The rational part if the element is rational, i.e. a multiple of 1.
    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    /// Exact division by an integer; panics if any coefficient is not divisible.
    pub fn div_exact(&self, k: i64) -> Self {
        assert!(k != 0);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                assert_eq!(c % k, 0, "inexact division of cyclotomic integer by {k}");
                c / k
            })
            .collect();
        CycInt { p: self.p, coeffs }
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc(p={}; {:?})", self.p, self.coeffs)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{j}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The fixed additive character `e: F_p -> Z[zeta_p]`, `x -> zeta_p^x`.
pub fn e_char(x: FieldElement) -> CycInt {
    let p = x.modulus();
    let mut exps = vec![0i64; p as usize];
    exps[x.value() as usize] = 1;
    CycInt::from_exponents(p, &exps)
}

/// A reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactRational {
    num: BigInt,
    den: BigInt,
}

impl ExactRational {
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut num = num;
        let mut den = den;
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_zero() {
            num /= &g;
            den /= &g;
        }
        ExactRational { num, den }
    }

    pub fn from_integer(k: i64) -> Self {
        ExactRational {
            num: BigInt::from(k),
            den: BigInt::one(),
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `(numerator, denominator)` as machine integers when they fit.
    pub fn as_i64_parts(&self) -> Option<(i64, i64)> {
        use num_traits::ToPrimitive;
        Some((self.num.to_i64()?, self.den.to_i64()?))
    }
}

impl fmt::Debug for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Hermitian inner product `(1/|G|) * sum_g v1(g) * conj(v2(g))` over a full
/// group enumeration. The accumulated cyclotomic value must be rational, which
/// it always is for characters of one group; anything else is an error.
pub fn hermitian_inner(
    vals1: &[CycInt],
    vals2: &[CycInt],
    group_order: usize,
) -> Result<ExactRational> {
    if vals1.len() != vals2.len() {
        return Err(Error::LengthMismatch(vals1.len(), vals2.len()));
    }
    if vals1.len() != group_order {
        return Err(Error::LengthMismatch(vals1.len(), group_order));
    }
    let p = vals1.first().map(|v| v.modulus()).unwrap_or(2);
    let mut acc = CycInt::zero(p);
    for (a, b) in vals1.iter().zip(vals2) {
        acc = acc.add(&a.checked_mul(&b.conj())?);
    }
    rational_part(&acc, group_order as i64)
}

/// Inner product over conjugacy classes: `(1/|G|) * sum_c |c| * v1(c) * conj(v2(c))`.
pub fn hermitian_inner_classes(
    vals1: &[CycInt],
    vals2: &[CycInt],
    class_sizes: &[u64],
    group_order: u128,
) -> Result<ExactRational> {
    if vals1.len() != vals2.len() {
        return Err(Error::LengthMismatch(vals1.len(), vals2.len()));
    }
    if vals1.len() != class_sizes.len() {
        return Err(Error::LengthMismatch(vals1.len(), class_sizes.len()));
    }
    let p = vals1.first().map(|v| v.modulus()).unwrap_or(2);
    let mut acc = CycInt::zero(p);
    for ((a, b), &sz) in vals1.iter().zip(vals2).zip(class_sizes) {
        acc = acc.add(&a.checked_mul(&b.conj())?.scale(sz as i64));
    }
    rational_part(&acc, group_order as i64)
}

fn rational_part(acc: &CycInt, group_order: i64) -> Result<ExactRational> {
    match acc.as_integer() {
        Some(k) => Ok(ExactRational::new(
            BigInt::from(k),
            BigInt::from(group_order),
        )),
        None => Err(Error::RationalityViolation(format!("{acc}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fe(v: u32, p: u32) -> FieldElement {
        FieldElement::new(v, p)
    }

    #[test]
    fn e_char_examples() {
        for p in [2u32, 3, 5, 7] {
            assert_eq!(e_char(fe(0, p)), CycInt::one(p));
        }
        // p = 3: zeta * zeta^2 = zeta^3 = 1
        assert_eq!(e_char(fe(1, 3)).mul(&e_char(fe(2, 3))), CycInt::one(3));
        // p = 2: zeta reduces to -1 on the basis {1}
        assert_eq!(e_char(fe(1, 2)), CycInt::from_integer(-1, 2));
    }

    #[test]
    fn e_is_additive_character() {
        for p in [2u32, 3, 5, 7] {
            for x in 0..p {
                for y in 0..p {
                    let lhs = e_char(fe(x, p) + fe(y, p));
                    let rhs = e_char(fe(x, p)).mul(&e_char(fe(y, p)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    /// sum over x in F_p of e(gamma * x) is p when gamma = 0 and 0 otherwise.
    #[test]
    fn character_sum_exhaustive() {
        for p in [2u32, 3, 5] {
            for g in 0..p {
                let gamma = fe(g, p);
                let mut acc = CycInt::zero(p);
                for x in 0..p {
                    acc = acc.add(&e_char(gamma * fe(x, p)));
                }
                let expected = if g == 0 {
                    CycInt::from_integer(p as i64, p)
                } else {
                    CycInt::zero(p)
                };
                assert_eq!(acc, expected);
            }
        }
    }

    #[test]
    fn conj_of_character() {
        for p in [2u32, 3, 5, 7] {
            for x in 0..p {
                assert_eq!(e_char(fe(x, p)).conj(), e_char(-fe(x, p)));
            }
        }
    }

    #[test]
    fn modulus_mismatch_detected() {
        let a = CycInt::one(3);
        let b = CycInt::one(5);
        assert_eq!(a.checked_mul(&b), Err(Error::ModulusMismatch(3, 5)));
    }

    #[test]
    fn inner_product_examples() {
        // trivial character of a group of order 6
        let triv: Vec<CycInt> = (0..6).map(|_| CycInt::one(5)).collect();
        assert!(hermitian_inner(&triv, &triv, 6).unwrap().is_one());

        // two distinct additive characters of F_3 are orthogonal
        let p = 3;
        let chi_a: Vec<CycInt> = (0..3).map(|x| e_char(fe(1, p) * fe(x, p))).collect();
        let chi_b: Vec<CycInt> = (0..3).map(|x| e_char(fe(2, p) * fe(x, p))).collect();
        assert!(hermitian_inner(&chi_a, &chi_b, 3).unwrap().is_zero());
        assert!(hermitian_inner(&chi_a, &chi_a, 3).unwrap().is_one());

        // regular character of F_2 against the trivial one
        let reg = vec![CycInt::from_integer(2, 2), CycInt::zero(2)];
        let one = vec![CycInt::one(2), CycInt::one(2)];
        assert!(hermitian_inner(&reg, &one, 2).unwrap().is_one());
    }

    #[test]
    fn inner_product_errors() {
        let a = vec![CycInt::one(3)];
        let b = vec![CycInt::one(3), CycInt::one(3)];
        assert_eq!(hermitian_inner(&a, &b, 1), Err(Error::LengthMismatch(1, 2)));
        // zeta_3 alone is not rational
        let z = vec![e_char(fe(1, 3))];
        assert!(matches!(
            hermitian_inner(&z, &[CycInt::one(3)], 1),
            Err(Error::RationalityViolation(_))
        ));
    }

    #[test]
    fn rational_reduction() {
        let r = ExactRational::new(BigInt::from(6), BigInt::from(-4));
        assert_eq!(format!("{r}"), "-3/2");
        assert!(ExactRational::new(BigInt::from(5), BigInt::from(5)).is_one());
    }

    fn arb_cyc(p: u32) -> impl Strategy<Value = CycInt> {
        proptest::collection::vec(-6i64..6, (p - 1) as usize)
            .prop_map(move |coeffs| CycInt { p, coeffs })
    }

    proptest! {
        /// Ring axioms on random small-coefficient triples in Z[zeta_5].
        #[test]
        fn ring_axioms(a in arb_cyc(5), b in arb_cyc(5), c in arb_cyc(5)) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&CycInt::one(5)), a.clone());
            prop_assert_eq!(a.add(&a.neg()), CycInt::zero(5));
        }

        /// Conjugation is an involutive ring automorphism.
        #[test]
        fn conj_automorphism(a in arb_cyc(7), b in arb_cyc(7)) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
            prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        }

        /// zeta^p = 1 after reduction: multiplying p copies of e(1) gives 1.
        #[test]
        fn zeta_p_is_one(p in prop::sample::select(vec![2u32, 3, 5, 7])) {
            let z = e_char(FieldElement::new(1, p));
            let mut acc = CycInt::one(p);
            for _ in 0..p {
                acc = acc.mul(&z);
            }
            prop_assert_eq!(acc, CycInt::one(p));
        }
    }
}
