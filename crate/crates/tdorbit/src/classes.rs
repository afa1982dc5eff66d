//! Conjugacy classes of `G_n`: canonical labels, named invariants, structural
//! enumeration, and the two ways of counting classes per dimension (dot-string
//! sum and recursion).

use crate::fq::{FieldElement, FqMatrix};
use crate::group::GroupElement;
use crate::{qpow, Budget, Result};

/// Canonical conjugacy-class label: the fixed alpha-string plus the canonical
/// representative of beta modulo the conjugation-shift image.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ClassDescriptor {
    pub a: Vec<FieldElement>,
    pub b_coset: Vec<FieldElement>,
}

/// Matrix of the shift map `alpha -> (a_i alpha_(i+1) - a_(i+1) alpha_i)_i`
/// whose image is the set of beta-moves available inside the class of `a`.
/// Rows are indexed by the beta coordinates, columns by alpha.
pub fn shift_matrix(a: &[FieldElement]) -> FqMatrix {
    let n = a.len();
    let q = a[0].modulus();
    let mut m = FqMatrix::zero(n - 1, n, q);
    for i in 0..n - 1 {
        m.set(i, i + 1, a[i]);
        m.set(i, i, -a[i + 1]);
    }
    m
}

/// Canonical label of the conjugacy class of `g`.
pub fn class_of(g: &GroupElement) -> ClassDescriptor {
    if g.n() == 1 {
        return ClassDescriptor {
            a: g.alpha.clone(),
            b_coset: vec![],
        };
    }
    let m = shift_matrix(&g.alpha);
    let (_, b_coset) = m
        .image_and_coset(&g.beta)
        .expect("shapes agree by construction");
    ClassDescriptor {
        a: g.alpha.clone(),
        b_coset,
    }
}

/// Size of the conjugacy class of `g`: `q^rank` of the shift map.
pub fn class_size(g: &GroupElement) -> u128 {
    if g.n() == 1 {
        return 1;
    }
    qpow(g.q(), shift_matrix(&g.alpha).rank() as u32)
}

/// The named class invariants of the alpha-pattern of `g`, each tagged with
/// the smallest beta index it involves:
/// an interior isolated zero at `i` yields `b_(i-1) a_(i+1) + b_i a_(i-1)`;
/// a zero run yields every `b_j` with both neighbors in the run.
pub fn named_invariants(g: &GroupElement) -> Vec<(usize, FieldElement)> {
    let n = g.n();
    let q = g.q();
    let a = &g.alpha;
    let b = &g.beta;
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        if !a[i].is_zero() {
            i += 1;
            continue;
        }
        let start = i;
        while i < n && a[i].is_zero() {
            i += 1;
        }
        let len = i - start;
        let interior = start > 0 && i < n;
        if len == 1 && interior {
            // positions are 1-based in the formulas; start is 0-based
            let inv = b[start - 1] * a[start + 1] + b[start] * a[start - 1];
            out.push((start, inv));
        } else {
            // every b_j with a_j = a_(j+1) = 0, 1-based beta index j
            for j in start + 1..start + len {
                out.push((j, b[j - 1]));
            }
        }
        let _ = q;
    }
    out
}

/// Number of invariants determined by a heavy/light dot pattern alone.
pub fn ell_of_pattern(pattern: &[bool]) -> usize {
    let n = pattern.len();
    let mut ell = 0;
    let mut i = 0;
    while i < n {
        if pattern[i] {
            i += 1;
            continue;
        }
        let start = i;
        while i < n && !pattern[i] {
            i += 1;
        }
        let len = i - start;
        let interior = start > 0 && i < n;
        if len == 1 && interior {
            ell += 1;
        } else {
            ell += len - 1;
        }
    }
    ell
}

/// One conjugacy class: canonical representative, descriptor, and size.
#[derive(Clone, Debug)]
pub struct ClassInfo {
    pub rep: GroupElement,
    pub descriptor: ClassDescriptor,
    pub size: u64,
}

/// Structural enumeration of all conjugacy classes, ordered by the canonical
/// representative's lexicographic position. No closure computation: for each
/// alpha-string the classes are the cosets of the shift image, represented by
/// vectors vanishing on the pivot coordinates.
pub fn conjugacy_classes(n: usize, q: u32, budget: &Budget) -> Result<Vec<ClassInfo>> {
    assert!(n >= 1);
    assert!(crate::fq::is_prime(q));
    budget.check_elements(crate::group::group_order(n, q), "class enumeration")?;
    let qu = q as usize;
    let mut out = Vec::new();
    let a_count = qpow(q, n as u32) as usize;
    for ai in 0..a_count {
        let mut digits = vec![0u32; n];
        let mut rem = ai;
        for d in digits.iter_mut().rev() {
            *d = (rem % qu) as u32;
            rem /= qu;
        }
        let a: Vec<FieldElement> = digits.iter().map(|&v| FieldElement::new(v, q)).collect();
        if n == 1 {
            out.push(ClassInfo {
                rep: GroupElement::new(a.clone(), vec![]),
                descriptor: ClassDescriptor { a, b_coset: vec![] },
                size: 1,
            });
            continue;
        }
        let (echelon, pivots) = shift_matrix(&a).transpose().rref();
        let _ = echelon;
        let rank = pivots.len();
        let free: Vec<usize> = (0..n - 1).filter(|j| !pivots.contains(j)).collect();
        let reps = qpow(q, free.len() as u32) as usize;
        for bi in 0..reps {
            let mut b = vec![FieldElement::zero(q); n - 1];
            let mut rem = bi;
            for &pos in free.iter().rev() {
                b[pos] = FieldElement::new((rem % qu) as u32, q);
                rem /= qu;
            }
            let rep = GroupElement::new(a.clone(), b.clone());
            out.push(ClassInfo {
                rep,
                descriptor: ClassDescriptor {
                    a: a.clone(),
                    b_coset: b,
                },
                size: qpow(q, rank as u32) as u64,
            });
        }
    }
    Ok(out)
}

/// Class-count tables `d_n(k)` split by whether the first dot is heavy.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassCountTable {
    pub n: usize,
    pub q: u32,
    /// `d^o(k)`: classes with `a_1 = 0`, indexed by dimension `k`.
    pub light: Vec<u128>,
    /// `d^*(k)`: classes with `a_1 != 0`.
    pub heavy: Vec<u128>,
}

impl ClassCountTable {
    pub fn total(&self, k: usize) -> u128 {
        self.light[k] + self.heavy[k]
    }

    pub fn totals(&self) -> Vec<u128> {
        (0..self.light.len()).map(|k| self.total(k)).collect()
    }

    pub fn grand_total(&self) -> u128 {
        self.totals().iter().sum()
    }
}

/// Direct dot-string sum: every one of the `2^n` heavy/light patterns
/// contributes `(q-1)^m q^ell` classes of dimension `k = n - 1 - ell`.
pub fn count_classes_by_strings(n: usize, q: u32, budget: &Budget) -> Result<ClassCountTable> {
    assert!(n >= 1);
    assert!(n < 64, "dot-string sum needs 2^n patterns");
    budget.check_ops(1u128 << n, "dot-string class count")?;
    let rows = crate::par::map_range(0..1usize << n, |mask| {
        let pattern: Vec<bool> = (0..n).map(|i| mask >> (n - 1 - i) & 1 == 1).collect();
        let m = pattern.iter().filter(|&&h| h).count();
        let ell = ell_of_pattern(&pattern);
        let k = n - 1 - ell;
        (pattern[0], k, qpow(q - 1, m as u32) * qpow(q, ell as u32))
    });
    let mut table = ClassCountTable {
        n,
        q,
        light: vec![0; n.max(1)],
        heavy: vec![0; n.max(1)],
    };
    for (heavy_first, k, contribution) in rows {
        if heavy_first {
            table.heavy[k] += contribution;
        } else {
            table.light[k] += contribution;
        }
    }
    Ok(table)
}

/// Class counts by the two-term recursion on `n`, with the `n = 2, 3` base
/// tables taken from direct string enumeration. Cutting the leading dot(s)
/// off a pattern rescales its `(q-1)^m q^ell` contribution, so the recursion
/// carries the matching scalar factors:
/// `d_n^o(k) = d_(n-1)^*(k-1) + q * d_(n-1)^o(k)` and
/// `d_n^*(k) = (q-1) * d_(n-1)^*(k-1) + q(q-1) * d_(n-2)(k-1)`.
pub fn count_classes_recursive(n: usize, q: u32) -> ClassCountTable {
    assert!(n >= 2);
    let budget = Budget::default();
    let mut prev2 = count_classes_by_strings(2, q, &budget).unwrap();
    if n == 2 {
        return prev2;
    }
    let mut prev1 = count_classes_by_strings(3, q, &budget).unwrap();
    if n == 3 {
        return prev1;
    }
    for m in 4..=n {
        let mut table = ClassCountTable {
            n: m,
            q,
            light: vec![0; m],
            heavy: vec![0; m],
        };
        for k in 0..m {
            let heavy_prev = if k >= 1 && k - 1 < prev1.heavy.len() {
                prev1.heavy[k - 1]
            } else {
                0
            };
            let light_prev = if k < prev1.light.len() {
                prev1.light[k]
            } else {
                0
            };
            table.light[k] = heavy_prev + q as u128 * light_prev;
            let total_prev2 = if k >= 1 && k - 1 < prev2.light.len() {
                prev2.total(k - 1)
            } else {
                0
            };
            table.heavy[k] =
                (q - 1) as u128 * heavy_prev + (q as u128) * (q - 1) as u128 * total_prev2;
        }
        prev2 = prev1;
        prev1 = table;
    }
    prev1
}
