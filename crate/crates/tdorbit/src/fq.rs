//! Exact arithmetic in the prime field `F_p` and exact linear algebra over it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{Error, Result};

/// Trial-division primality test. Moduli stay tiny at desk scale, so nothing
/// fancier is warranted.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue in the prime field `F_p`. The modulus travels with the value so
/// that mixing fields is caught instead of silently wrapping.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    value: u32,
    p: u32,
}

impl FieldElement {
    /// A residue in `F_p`. Panics unless `p` is prime and `value < p`.
    pub fn new(value: u32, p: u32) -> Self {
        assert!(is_prime(p), "modulus {p} is not prime");
        assert!(value < p, "value {value} out of range for F_{p}");
        FieldElement { value, p }
    }

    /// Reduce an arbitrary signed integer into `F_p`.
    pub fn from_int(value: i64, p: u32) -> Self {
        assert!(is_prime(p), "modulus {p} is not prime");
        let m = p as i64;
        let v = ((value % m) + m) % m;
        FieldElement { value: v as u32, p }
    }

    pub fn zero(p: u32) -> Self {
        Self::new(0, p)
    }

    pub fn one(p: u32) -> Self {
        assert!(is_prime(p), "modulus {p} is not prime");
        FieldElement { value: 1 % p, p }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.p != other.p {
            Err(Error::ModulusMismatch(self.p, other.p))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        self.same_field(&rhs)?;
        Ok(FieldElement {
            value: ((self.value as u64 + rhs.value as u64) % self.p as u64) as u32,
            p: self.p,
        })
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.same_field(&rhs)?;
        Ok(self.checked_add(-rhs).expect("same modulus"))
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        self.same_field(&rhs)?;
        Ok(FieldElement {
            value: ((self.value as u64 * rhs.value as u64) % self.p as u64) as u32,
            p: self.p,
        })
    }

    /// Multiplicative inverse by Fermat exponentiation.
    pub fn inv(self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero(self.p));
        }
        Ok(self.pow(self.p - 2))
    }

    #[allow(clippy::should_implement_trait)] // fallible, unlike std::ops::Div
    pub fn div(self, rhs: Self) -> Result<Self> {
        self.same_field(&rhs)?;
        Ok(self * rhs.inv()?)
    }

    pub fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = FieldElement::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// All elements of `F_p` in ascending order.
    pub fn all(p: u32) -> Vec<Self> {
        (0..p).map(|v| Self::new(v, p)).collect()
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("field moduli differ")
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("field moduli differ")
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("field moduli differ")
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> Self {
        FieldElement {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Dense matrix over `F_p`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct FqMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl FqMatrix {
    pub fn zero(rows: usize, cols: usize, p: u32) -> Self {
        FqMatrix {
            rows,
            cols,
            data: vec![FieldElement::zero(p); rows * cols],
        }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = Self::zero(n, n, p);
        for i in 0..n {
            m.set(i, i, FieldElement::one(p));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let nrows = rows.len();
        FqMatrix {
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> FqMatrix {
        let p = self.modulus();
        let mut t = FqMatrix::zero(self.cols, self.rows, p);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    fn modulus(&self) -> u32 {
        self.data
            .first()
            .map(|e| e.modulus())
            .expect("empty matrix")
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (FqMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pivot_row) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            // swap into place, normalize, eliminate everywhere else
            for j in 0..m.cols {
                let a = m.get(r, j);
                let b = m.get(pivot_row, j);
                m.set(r, j, b);
                m.set(pivot_row, j, a);
            }
            let inv = m.get(r, c).inv().expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(r, j) * inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let f = m.get(i, c);
                    for j in 0..m.cols {
                        let v = m.get(i, j) - f * m.get(r, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the column space in reduced echelon form, plus the canonical
    /// representative of `v` modulo that column space; the representative is
    /// obtained by zeroing the pivot coordinates, so two vectors reduce to the
    /// same representative exactly when they differ by a column-space element.
    pub fn image_and_coset(
        &self,
        v: &[FieldElement],
    ) -> Result<(Vec<Vec<FieldElement>>, Vec<FieldElement>)> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "vector has length {}, matrix has {} rows",
                v.len(),
                self.rows
            )));
        }
        let (echelon, pivots) = self.transpose().rref();
        let basis: Vec<Vec<FieldElement>> =
            (0..pivots.len()).map(|i| echelon.row(i).to_vec()).collect();
        let rep = reduce_mod_span(&basis, &pivots, v);
        Ok((basis, rep))
    }
}

/// Reduce `v` against echelon-form `basis` rows with the given pivot columns.
pub(crate) fn reduce_mod_span(
    basis: &[Vec<FieldElement>],
    pivots: &[usize],
    v: &[FieldElement],
) -> Vec<FieldElement> {
    let mut rep = v.to_vec();
    for (row, &c) in basis.iter().zip(pivots) {
        let f = rep[c];
        if !f.is_zero() {
            for (r, b) in rep.iter_mut().zip(row) {
                *r = *r - f * *b;
            }
        }
    }
    rep
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: u32, p: u32) -> FieldElement {
        FieldElement::new(v, p)
    }

    #[test]
    fn small_primality() {
        let primes: Vec<u32> = (0..60).filter(|&p| is_prime(p)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }

    #[test]
    #[should_panic(expected = "not prime")]
    fn composite_modulus_rejected() {
        fe(1, 6);
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(fe(2, 3) + fe(2, 3), fe(1, 3));
        assert_eq!(fe(2, 5).inv().unwrap(), fe(3, 5));
        assert_eq!(fe(0, 7).inv(), Err(Error::DivisionByZero(7)));
        assert_eq!(
            fe(1, 3).checked_add(fe(1, 5)),
            Err(Error::ModulusMismatch(3, 5))
        );
    }

    /// Exhaustive field-axiom suite for tiny primes.
    #[test]
    fn field_axioms_exhaustive() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            let all = FieldElement::all(p);
            for &a in &all {
                assert_eq!(a + FieldElement::zero(p), a);
                assert_eq!(a * FieldElement::one(p), a);
                assert_eq!(a + (-a), FieldElement::zero(p));
                if !a.is_zero() {
                    assert_eq!(a * a.inv().unwrap(), FieldElement::one(p));
                }
                for &b in &all {
                    assert_eq!(a + b, b + a);
                    assert_eq!(a * b, b * a);
                    for &c in &all {
                        assert_eq!((a + b) + c, a + (b + c));
                        assert_eq!((a * b) * c, a * (b * c));
                        assert_eq!(a * (b + c), a * b + a * c);
                    }
                }
            }
        }
    }

    #[test]
    fn rref_is_idempotent() {
        let p = 5;
        let m = FqMatrix::from_rows(vec![
            vec![fe(2, p), fe(1, p), fe(3, p)],
            vec![fe(4, p), fe(2, p), fe(1, p)],
            vec![fe(1, p), fe(3, p), fe(0, p)],
        ]);
        let (e, piv) = m.rref();
        let (e2, piv2) = e.rref();
        assert_eq!(e, e2);
        assert_eq!(piv, piv2);
        assert!(m.rank() <= 3);
    }

    #[test]
    fn image_and_coset_zero_matrix() {
        let p = 3;
        let m = FqMatrix::zero(2, 3, p);
        let v = vec![fe(1, p), fe(2, p)];
        let (basis, rep) = m.image_and_coset(&v).unwrap();
        assert!(basis.is_empty());
        assert_eq!(rep, v);
    }

    #[test]
    fn image_and_coset_identity() {
        let p = 3;
        let m = FqMatrix::identity(3, p);
        let v = vec![fe(2, p), fe(1, p), fe(2, p)];
        let (basis, rep) = m.image_and_coset(&v).unwrap();
        assert_eq!(basis.len(), 3);
        assert!(rep.iter().all(|e| e.is_zero()));
    }

    #[test]
    fn image_and_coset_dim_mismatch() {
        let p = 3;
        let m = FqMatrix::zero(2, 2, p);
        let v = vec![fe(0, p)];
        assert!(matches!(
            m.image_and_coset(&v),
            Err(Error::DimensionMismatch(_))
        ));
    }

    /// Coset representatives are constant on cosets: rep(v + M u) = rep(v),
    /// exhaustively for a small matrix.
    #[test]
    fn representative_constant_on_cosets() {
        let p = 3;
        let m = FqMatrix::from_rows(vec![
            vec![fe(1, p), fe(2, p)],
            vec![fe(2, p), fe(1, p)],
            vec![fe(0, p), fe(1, p)],
        ]);
        let vectors: Vec<Vec<FieldElement>> = (0..27)
            .map(|i| vec![fe(i % 3, p), fe(i / 3 % 3, p), fe(i / 9 % 3, p)])
            .collect();
        let us: Vec<Vec<FieldElement>> = (0..9)
            .map(|i| vec![fe(i % 3, p), fe(i / 3 % 3, p)])
            .collect();
        for v in &vectors {
            let (_, rep) = m.image_and_coset(v).unwrap();
            for u in &us {
                let mv: Vec<FieldElement> = (0..3)
                    .map(|i| v[i] + m.get(i, 0) * u[0] + m.get(i, 1) * u[1])
                    .collect();
                let (_, rep2) = m.image_and_coset(&mv).unwrap();
                assert_eq!(rep, rep2);
            }
        }
    }

    /// Two vectors reduce to equal representatives iff they differ by a
    /// column-space element (checked by brute span enumeration).
    #[test]
    fn representative_separates_cosets() {
        let p = 2;
        let m = FqMatrix::from_rows(vec![
            vec![fe(1, p), fe(1, p)],
            vec![fe(0, p), fe(1, p)],
            vec![fe(1, p), fe(0, p)],
        ]);
        let span: Vec<Vec<u32>> = (0..4)
            .map(|i| {
                let u = [fe(i % 2, p), fe(i / 2, p)];
                (0..3)
                    .map(|r| (m.get(r, 0) * u[0] + m.get(r, 1) * u[1]).value())
                    .collect()
            })
            .collect();
        let all: Vec<Vec<FieldElement>> = (0..8)
            .map(|i| vec![fe(i % 2, p), fe(i / 2 % 2, p), fe(i / 4 % 2, p)])
            .collect();
        for v in &all {
            for w in &all {
                let diff: Vec<u32> = v.iter().zip(w).map(|(a, b)| (*a - *b).value()).collect();
                let same_coset = span.contains(&diff);
                let (_, rv) = m.image_and_coset(v).unwrap();
                let (_, rw) = m.image_and_coset(w).unwrap();
                assert_eq!(rv == rw, same_coset);
            }
        }
    }

    /// For a = (a1, 0, a3) with a1, a3 nonzero the shift image is a line and
    /// b1*a3 + b2*a1 is constant on cosets (enumerated for p = 3).
    #[test]
    fn two_diagonal_shift_invariant() {
        let p = 3;
        for a1 in 1..3u32 {
            for a3 in 1..3u32 {
                let a1 = fe(a1, p);
                let a3 = fe(a3, p);
                // columns are the shift images of the alpha unit vectors
                let m = FqMatrix::from_rows(vec![
                    vec![fe(0, p), a1, fe(0, p)],
                    vec![fe(0, p), -a3, fe(0, p)],
                ]);
                assert_eq!(m.rank(), 1);
                for b1 in 0..3 {
                    for b2 in 0..3 {
                        let v = vec![fe(b1, p), fe(b2, p)];
                        let (_, rep) = m.image_and_coset(&v).unwrap();
                        let inv_v = v[0] * a3 + v[1] * a1;
                        let inv_rep = rep[0] * a3 + rep[1] * a1;
                        assert_eq!(inv_v, inv_rep);
                    }
                }
            }
        }
    }
}
