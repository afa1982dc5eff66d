//! Ordered partitions (compositions): the refinement order and its intervals,
//! even/odd types, closed-form counts, the Fibonacci families, sparse
//! sequences, flocks, and the flock <-> container correspondence.

use crate::{Error, Result};

/// An ordered partition of `n` into positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            !parts.is_empty() && parts.iter().all(|&p| p >= 1),
            "parts must be positive"
        );
        Composition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// Number of odd parts.
    pub fn nu(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Number of even parts.
    pub fn mu(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 0).count()
    }

    /// Half the even coordinate count: `k = (n - nu) / 2`.
    pub fn k(&self) -> usize {
        (self.n() - self.nu()) / 2
    }

    pub fn is_all_ones(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Divider positions: after how many dots each internal divider sits
    /// (the partial sums except the last).
    pub fn breaks(&self) -> Vec<usize> {
        let mut acc = 0;
        self.parts[..self.parts.len() - 1]
            .iter()
            .map(|&p| {
                acc += p;
                acc
            })
            .collect()
    }

    /// Rebuild a composition of `n` from its divider-position set.
    pub fn from_breaks(n: usize, breaks: &[usize]) -> Self {
        let mut parts = Vec::with_capacity(breaks.len() + 1);
        let mut prev = 0;
        for &b in breaks {
            assert!(b > prev && b < n);
            parts.push(b - prev);
            prev = b;
        }
        parts.push(n - prev);
        Composition::new(parts)
    }

    pub fn to_string_compact(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(if self.parts.iter().any(|&p| p > 9) {
                "+"
            } else {
                ""
            })
    }
}

impl std::fmt::Debug for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}",
            self.parts
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join("+")
        )
    }
}

/// All `2^(n-1)` compositions of `n`, in divider-mask order: mask bit `i`
/// (low to high) places a divider after dot `i + 1`.
pub fn all_compositions(n: usize) -> Vec<Composition> {
    assert!((1..64).contains(&n), "composition enumeration needs 2^(n-1) entries");
    (0u64..(1 << (n - 1)))
        .map(|mask| {
            let breaks: Vec<usize> = (0..n - 1)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| i + 1)
                .collect();
            Composition::from_breaks(n, &breaks)
        })
        .collect()
}

/// Refinement order: `p1` precedes `p2` when `p2` subdivides `p1`, i.e. the
/// divider set of `p1` is contained in that of `p2`.
pub fn preceq(p1: &Composition, p2: &Composition) -> bool {
    assert_eq!(
        p1.n(),
        p2.n(),
        "compositions of different n are incomparable"
    );
    let b2 = p2.breaks();
    p1.breaks().iter().all(|b| b2.contains(b))
}

/// The interval `[p1, p2]` in refinement order; `2^(m2 - m1)` compositions.
pub fn interval(p1: &Composition, p2: &Composition) -> Result<Vec<Composition>> {
    if !preceq(p1, p2) {
        return Err(Error::NotComparable);
    }
    let base = p1.breaks();
    let extra: Vec<usize> = p2
        .breaks()
        .into_iter()
        .filter(|b| !base.contains(b))
        .collect();
    let n = p1.n();
    let mut members = Vec::with_capacity(1 << extra.len());
    for mask in 0u64..(1 << extra.len()) {
        let mut breaks = base.clone();
        for (i, &e) in extra.iter().enumerate() {
            if mask >> i & 1 == 1 {
                breaks.push(e);
            }
        }
        breaks.sort_unstable();
        members.push(Composition::from_breaks(n, &breaks));
    }
    Ok(members)
}

/// Even/odd type of a composition: decided by the parity of the first part
/// that is not 1; the all-ones composition has both types.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum CompositionType {
    Even,
    Odd,
    Both,
}

/// Which side of the flock construction a composition belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum FlockType {
    Even,
    Odd,
}

pub fn type_of(p: &Composition) -> CompositionType {
    match p.parts().iter().find(|&&x| x != 1) {
        None => CompositionType::Both,
        Some(&x) if x % 2 == 0 => CompositionType::Even,
        Some(_) => CompositionType::Odd,
    }
}

pub fn has_type(p: &Composition, ty: FlockType) -> bool {
    matches!(
        (type_of(p), ty),
        (CompositionType::Both, _)
            | (CompositionType::Even, FlockType::Even)
            | (CompositionType::Odd, FlockType::Odd)
    )
}

/// Closed-form count of even-type compositions of `n`.
pub fn q_even(n: usize) -> u128 {
    assert!(n >= 1);
    let two_n = 1u128 << n;
    if n % 2 == 0 {
        (two_n + 2) / 3
    } else {
        (two_n + 1) / 3
    }
}

/// Closed-form count of odd-type compositions of `n`.
pub fn q_odd(n: usize) -> u128 {
    assert!(n >= 1);
    let half = 1u128 << (n - 1);
    if n % 2 == 0 {
        (half + 1) / 3
    } else {
        (half + 2) / 3
    }
}

/// Fibonacci numbers with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(n: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        let c = a + b;
        a = b;
        b = c;
    }
    a
}

/// Number of compositions of `n` into 1's and 2's (`F_(n+1)`).
pub fn count_ones_twos(n: usize) -> u128 {
    fibonacci(n + 1)
}

/// Number of compositions of `n` into odd parts (`F_n`).
pub fn count_all_odd(n: usize) -> u128 {
    fibonacci(n)
}

/// A maximal interval of same-type compositions sharing `nu`; carries the
/// dotted-divider picture used by the model assignment.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Flock {
    pub head: Composition,
    pub tail: Composition,
    pub ty: FlockType,
    /// Divider positions present in the tail but not the head; `k - 1` of
    /// them, or none when `k = 0`.
    pub dotted: Vec<usize>,
}

impl Flock {
    fn new(head: Composition, tail: Composition, ty: FlockType) -> Self {
        let solid = head.breaks();
        let dotted: Vec<usize> = tail
            .breaks()
            .into_iter()
            .filter(|b| !solid.contains(b))
            .collect();
        let k = head.k();
        assert_eq!(head.nu(), tail.nu(), "head and tail must share nu");
        assert_eq!(
            dotted.len(),
            k.saturating_sub(1),
            "dotted divider count must be k - 1"
        );
        Flock {
            head,
            tail,
            ty,
            dotted,
        }
    }

    pub fn k(&self) -> usize {
        self.head.k()
    }

    pub fn members(&self) -> Vec<Composition> {
        interval(&self.head, &self.tail).expect("head precedes tail by construction")
    }

    pub fn size(&self) -> usize {
        1 << self.dotted.len()
    }
}

/// Tail of the flock with the given head.
///
/// Odd type: the head is a composition into odd parts; the first part `>= 3`
/// becomes `3 + 2 + ... + 2`, every other part `p` becomes `1 + 2 + ... + 2`.
/// Even type: the head is `1 + ... + 1 + even + odd + ... + odd` (or all
/// ones); the even part becomes `2 + ... + 2` and every odd part `>= 3`
/// becomes `1 + 2 + ... + 2`.
pub fn flock_tail(head: &Composition, ty: FlockType) -> Result<Composition> {
    if !valid_head(head, ty) {
        return Err(Error::TypeMismatch);
    }
    let mut parts = Vec::new();
    match ty {
        FlockType::Odd => {
            let mut seen_big = false;
            for &p in head.parts() {
                if p % 2 == 1 && p >= 3 && !seen_big {
                    seen_big = true;
                    parts.push(3);
                    parts.extend(std::iter::repeat_n(2, (p - 3) / 2));
                } else {
                    parts.push(1);
                    parts.extend(std::iter::repeat_n(2, (p - 1) / 2));
                }
            }
        }
        FlockType::Even => {
            for &p in head.parts() {
                if p % 2 == 0 {
                    parts.extend(std::iter::repeat_n(2, p / 2));
                } else {
                    parts.push(1);
                    parts.extend(std::iter::repeat_n(2, (p - 1) / 2));
                }
            }
        }
    }
    Ok(Composition::new(parts))
}

/// Is `head` a legal flock head for the given type?
fn valid_head(head: &Composition, ty: FlockType) -> bool {
    match ty {
        FlockType::Odd => head.parts().iter().all(|&p| p % 2 == 1),
        FlockType::Even => {
            if head.is_all_ones() {
                return true;
            }
            // leading ones, one even part, then odd parts only
            let first_big = head.parts().iter().position(|&p| p != 1).unwrap();
            head.parts()[first_big] % 2 == 0
                && head.parts()[first_big + 1..].iter().all(|&p| p % 2 == 1)
        }
    }
}

/// Head of the flock containing `p`, for the given type.
///
/// Odd type: every odd part absorbs the even parts after it.
/// Even type: leading 1's stay; the run of even parts after them merges into
/// one even part; after that every odd part absorbs the even parts behind it.
pub fn flock_head(p: &Composition, ty: FlockType) -> Result<Composition> {
    if !has_type(p, ty) {
        return Err(Error::TypeMismatch);
    }
    if p.is_all_ones() {
        return Ok(p.clone());
    }
    let parts = p.parts();
    let mut head = Vec::new();
    match ty {
        FlockType::Odd => {
            let mut cur: Option<usize> = None;
            for &x in parts {
                if x % 2 == 1 {
                    if let Some(c) = cur.take() {
                        head.push(c);
                    }
                    cur = Some(x);
                } else {
                    *cur.as_mut()
                        .expect("even part before any odd part in odd-type composition") += x;
                }
            }
            if let Some(c) = cur {
                head.push(c);
            }
        }
        FlockType::Even => {
            let first_big = parts.iter().position(|&x| x != 1).unwrap();
            head.extend_from_slice(&parts[..first_big]);
            let mut i = first_big;
            let mut even_sum = 0;
            while i < parts.len() && parts[i] % 2 == 0 {
                even_sum += parts[i];
                i += 1;
            }
            head.push(even_sum);
            let mut cur: Option<usize> = None;
            for &x in &parts[i..] {
                if x % 2 == 1 {
                    if let Some(c) = cur.take() {
                        head.push(c);
                    }
                    cur = Some(x);
                } else {
                    *cur.as_mut().expect("stray even part") += x;
                }
            }
            if let Some(c) = cur {
                head.push(c);
            }
        }
    }
    Ok(Composition::new(head))
}

/// The flock of the given type containing `p`.
pub fn flock_of(p: &Composition, ty: FlockType) -> Result<Flock> {
    let head = flock_head(p, ty)?;
    let tail = flock_tail(&head, ty)?;
    let flock = Flock::new(head, tail, ty);
    debug_assert!(flock.members().contains(p));
    Ok(flock)
}

/// All flocks of one type, sorted by head: odd-type flocks are generated from
/// their heads (compositions into odd parts), even-type flocks from their
/// tails (compositions into 1's and 2's).
pub fn flocks(n: usize, ty: FlockType) -> Vec<Flock> {
    let mut out: Vec<Flock> = match ty {
        FlockType::Odd => all_compositions(n)
            .into_iter()
            .filter(|p| p.parts().iter().all(|&x| x % 2 == 1))
            .map(|head| {
                let tail = flock_tail(&head, FlockType::Odd).expect("all-odd head");
                Flock::new(head, tail, FlockType::Odd)
            })
            .collect(),
        FlockType::Even => all_compositions(n)
            .into_iter()
            .filter(|p| p.parts().iter().all(|&x| x == 1 || x == 2))
            .map(|tail| {
                let head = flock_head(&tail, FlockType::Even).expect("1-2 tail");
                Flock::new(head, tail, FlockType::Even)
            })
            .collect(),
    };
    out.sort_by(|a, b| a.head.cmp(&b.head));
    out
}

/// A strictly increasing index set in `[1, n]` with gaps of at least 2.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SparseSequence {
    indices: Vec<usize>,
    n: usize,
}

impl SparseSequence {
    pub fn new(indices: Vec<usize>, n: usize) -> Self {
        for w in indices.windows(2) {
            assert!(w[1] > w[0] + 1, "sparse sequence needs gaps of at least 2");
        }
        assert!(indices.iter().all(|&i| i >= 1 && i <= n));
        SparseSequence { indices, n }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    /// Neighbors of the sequence: indices adjacent to a member.
    pub fn i_minus(&self) -> Vec<usize> {
        (1..=self.n)
            .filter(|&i| (i >= 2 && self.contains(i - 1)) || self.contains(i + 1))
            .collect()
    }

    /// Complement of the neighbor set; always contains the sequence itself.
    pub fn i_plus(&self) -> Vec<usize> {
        let minus = self.i_minus();
        (1..=self.n).filter(|i| !minus.contains(i)).collect()
    }
}

impl std::fmt::Debug for SparseSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "C({})",
            self.indices
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// All sparse sequences in `[1, n]`, sorted; there are `F_(n+2)` of them.
pub fn sparse_sequences(n: usize) -> Vec<SparseSequence> {
    let mut out: Vec<Vec<usize>> = vec![vec![]];
    let mut i = 1;
    while i <= n {
        let mut next = Vec::new();
        for s in &out {
            // either skip i or take it (allowed when the last entry is < i - 1)
            next.push(s.clone());
            if s.last().is_none_or(|&l| l + 1 < i) {
                let mut t = s.clone();
                t.push(i);
                next.push(t);
            }
        }
        out = next;
        i += 1;
    }
    let mut seqs: Vec<SparseSequence> =
        out.into_iter().map(|s| SparseSequence::new(s, n)).collect();
    seqs.sort();
    seqs
}

/// The container assigned to a flock, read off the tail partition.
///
/// Even type: 2-parts at part indices `i_1 < ... < i_k` give
/// `C(i_1 + 1, ..., i_k + k)`. Odd type: the 3-part at index `i_1` and
/// 2-parts at `i_2 < ... < i_k` give `C(1, i_1 + 2, i_2 + 3, ..., i_k + (k+1))`.
/// The all-ones flocks go to `C(1)` (odd) and `C()` (even).
pub fn container_of_flock(f: &Flock) -> SparseSequence {
    let n = f.head.n();
    match f.ty {
        FlockType::Even => {
            let mut idx = Vec::new();
            let mut count = 0;
            for (i, &p) in f.tail.parts().iter().enumerate() {
                if p == 2 {
                    count += 1;
                    idx.push(i + 1 + count);
                }
            }
            SparseSequence::new(idx, n)
        }
        FlockType::Odd => {
            let mut idx = vec![1];
            let mut shift = 2;
            for (i, &p) in f.tail.parts().iter().enumerate() {
                if p >= 2 {
                    idx.push(i + 1 + shift);
                    shift += 1;
                }
            }
            SparseSequence::new(idx, n)
        }
    }
}

/// Count of compositions of `n` with `mu` even and `nu` odd parts:
/// `C(mu + nu, mu) * C((n + nu)/2 - 1, mu + nu - 1)`.
pub fn count_partitions_even_odd(n: usize, mu: usize, nu: usize) -> Result<u128> {
    if n % 2 != nu % 2 {
        return Err(Error::ParityViolation(format!(
            "n = {n} and nu = {nu} must have equal parity"
        )));
    }
    if n < 2 * mu + nu {
        return Err(Error::ParityViolation(format!(
            "need n >= 2*mu + nu, got n = {n}, mu = {mu}, nu = {nu}"
        )));
    }
    Ok(crate::binomial((mu + nu) as i64, mu as i64)
        * crate::binomial(((n + nu) / 2) as i64 - 1, (mu + nu) as i64 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec())
    }

    #[test]
    fn composition_counts() {
        assert_eq!(all_compositions(1), vec![c(&[1])]);
        assert_eq!(all_compositions(3).len(), 4);
        assert_eq!(all_compositions(10).len(), 512);
    }

    #[test]
    fn order_and_intervals() {
        let p = c(&[2, 3]);
        assert!(preceq(&p, &c(&[2, 1, 2])));
        assert!(!preceq(&c(&[2, 1, 2]), &p));
        assert_eq!(interval(&p, &p).unwrap(), vec![p.clone()]);
        let all = interval(&c(&[5]), &c(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(all.len(), 16);
        assert!(matches!(
            interval(&c(&[2, 3]), &c(&[3, 2])),
            Err(Error::NotComparable)
        ));
        // interval size 2^(m2 - m1)
        let i = interval(&c(&[2, 3]), &c(&[1, 1, 1, 2])).unwrap();
        assert_eq!(i.len(), 4);
    }

    #[test]
    fn nu_monotone_along_refinement() {
        for n in 1..=10 {
            let all = all_compositions(n);
            for p1 in &all {
                for p2 in &all {
                    if preceq(p1, p2) {
                        assert!(p1.nu() <= p2.nu());
                    }
                }
            }
        }
    }

    #[test]
    fn types() {
        assert_eq!(type_of(&c(&[1, 1, 1, 1, 1])), CompositionType::Both);
        assert_eq!(type_of(&c(&[2, 3])), CompositionType::Even);
        assert_eq!(type_of(&c(&[3, 2])), CompositionType::Odd);
        // n = 5: 11 even-type, 6 odd-type compositions
        let all = all_compositions(5);
        assert_eq!(
            all.iter().filter(|p| has_type(p, FlockType::Even)).count(),
            11
        );
        assert_eq!(
            all.iter().filter(|p| has_type(p, FlockType::Odd)).count(),
            6
        );
    }

    #[test]
    fn q_counts_table_and_enumeration() {
        let even: Vec<u128> = (1..=5).map(q_even).collect();
        let odd: Vec<u128> = (1..=5).map(q_odd).collect();
        assert_eq!(even, vec![1, 2, 3, 6, 11]);
        assert_eq!(odd, vec![1, 1, 2, 3, 6]);
        for n in 1..=16 {
            let all = all_compositions(n);
            let ce = all.iter().filter(|p| has_type(p, FlockType::Even)).count() as u128;
            let co = all.iter().filter(|p| has_type(p, FlockType::Odd)).count() as u128;
            assert_eq!(q_even(n), ce);
            assert_eq!(q_odd(n), co);
            assert_eq!(q_even(n) + q_odd(n), (1 << (n - 1)) + 1);
            assert_eq!(q_even(n), q_odd(n + 1));
            // even count is twice the odd count, one less when n is odd
            if n % 2 == 0 {
                assert_eq!(q_even(n), 2 * q_odd(n));
            } else {
                assert_eq!(q_even(n), 2 * q_odd(n) - 1);
            }
        }
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(0), 0);
        assert_eq!(fibonacci(1), 1);
        assert_eq!(fibonacci(6), 8);
        assert_eq!(fibonacci(12), 144);
    }

    #[test]
    fn fibonacci_families() {
        assert_eq!(count_ones_twos(1), 1);
        assert_eq!(count_all_odd(1), 1);
        assert_eq!(count_ones_twos(4), 5);
        assert_eq!(count_all_odd(4), 3);
        assert_eq!(count_ones_twos(5), 8);
        assert_eq!(count_all_odd(5), 5);
        for n in 1..=20 {
            let all = all_compositions(n);
            let ones_twos = all
                .iter()
                .filter(|p| p.parts().iter().all(|&x| x <= 2))
                .count() as u128;
            let all_odd = all
                .iter()
                .filter(|p| p.parts().iter().all(|&x| x % 2 == 1))
                .count() as u128;
            assert_eq!(ones_twos, count_ones_twos(n));
            assert_eq!(all_odd, count_all_odd(n));
        }
    }

    #[test]
    fn flock_tail_examples() {
        let t = flock_tail(&c(&[1, 7, 3, 1, 3]), FlockType::Odd).unwrap();
        assert_eq!(t, c(&[1, 3, 2, 2, 1, 2, 1, 1, 2]));
        let t = flock_tail(&c(&[1, 1, 4, 3, 5]), FlockType::Even).unwrap();
        assert_eq!(t, c(&[1, 1, 2, 2, 1, 2, 1, 2, 2]));
        assert!(matches!(
            flock_tail(&c(&[2, 3]), FlockType::Odd),
            Err(Error::TypeMismatch)
        ));
    }

    #[test]
    fn flock_of_example() {
        let f = flock_of(&c(&[1, 2, 4, 5, 2, 3]), FlockType::Even).unwrap();
        assert_eq!(f.head, c(&[1, 6, 7, 3]));
        assert_eq!(f.tail, c(&[1, 2, 2, 2, 1, 2, 2, 2, 1, 2]));
        assert!(matches!(
            flock_of(&c(&[1, 2, 4, 5, 2, 3]), FlockType::Odd),
            Err(Error::TypeMismatch)
        ));
    }

    #[test]
    fn flocks_partition_each_type() {
        for n in 1..=14 {
            for ty in [FlockType::Even, FlockType::Odd] {
                let fs = flocks(n, ty);
                let mut seen = std::collections::HashMap::new();
                for f in &fs {
                    assert_eq!(f.dotted.len(), f.k().saturating_sub(1));
                    let members = f.members();
                    assert_eq!(members.len(), 1 << f.dotted.len());
                    for m in &members {
                        assert!(has_type(m, ty));
                        assert_eq!(m.nu(), f.head.nu(), "nu fixed within a flock");
                        assert_eq!(flock_of(m, ty).unwrap(), *f);
                        assert!(
                            seen.insert(m.clone(), ()).is_none(),
                            "flocks overlap at {m:?}"
                        );
                    }
                }
                let total = all_compositions(n)
                    .into_iter()
                    .filter(|p| has_type(p, ty))
                    .count();
                assert_eq!(seen.len(), total, "flocks must cover the type");
                let expected = match ty {
                    FlockType::Odd => count_all_odd(n),
                    FlockType::Even => count_ones_twos(n),
                };
                assert_eq!(fs.len() as u128, expected);
            }
        }
    }

    #[test]
    fn sparse_sequence_basics() {
        let s3: Vec<Vec<usize>> = sparse_sequences(3)
            .iter()
            .map(|s| s.indices().to_vec())
            .collect();
        assert_eq!(s3, vec![vec![], vec![1], vec![1, 3], vec![2], vec![3]]);
        for n in 1..=20 {
            assert_eq!(sparse_sequences(n).len() as u128, fibonacci(n + 2));
        }
        let empty = SparseSequence::new(vec![], 4);
        assert!(empty.i_minus().is_empty());
        assert_eq!(empty.i_plus(), vec![1, 2, 3, 4]);
        let s = SparseSequence::new(vec![3, 5, 8, 11], 11);
        assert_eq!(s.i_minus(), vec![2, 4, 6, 7, 9, 10]);
        assert_eq!(s.i_plus(), vec![1, 3, 5, 8, 11]);
    }

    #[test]
    fn container_examples() {
        // n = 6 odd-type flock {15, 132} -> C(1,4,6)
        let f = flock_of(&c(&[1, 5]), FlockType::Odd).unwrap();
        assert_eq!(container_of_flock(&f).indices(), &[1, 4, 6]);
        // n = 6 even-type flock {114, 1122} -> C(4,6)
        let f = flock_of(&c(&[1, 1, 4]), FlockType::Even).unwrap();
        assert_eq!(container_of_flock(&f).indices(), &[4, 6]);
        // n = 7 odd-type flock with head 2+5 is even type; head 25 is even:
        let f = flock_of(&c(&[2, 5]), FlockType::Even).unwrap();
        assert_eq!(container_of_flock(&f).indices(), &[2, 5, 7]);
        // all-ones flocks
        let ones = c(&[1, 1, 1, 1, 1, 1]);
        let fo = flock_of(&ones, FlockType::Odd).unwrap();
        assert_eq!(container_of_flock(&fo).indices(), &[1]);
        let fe_ = flock_of(&ones, FlockType::Even).unwrap();
        assert!(container_of_flock(&fe_).indices().is_empty());
    }

    #[test]
    fn container_bijection() {
        for n in 1..=14 {
            let odd: Vec<SparseSequence> = flocks(n, FlockType::Odd)
                .iter()
                .map(container_of_flock)
                .collect();
            let even: Vec<SparseSequence> = flocks(n, FlockType::Even)
                .iter()
                .map(container_of_flock)
                .collect();
            assert!(odd.iter().all(|s| s.contains(1)));
            assert!(even.iter().all(|s| !s.contains(1)));
            assert_eq!(odd.len() as u128, fibonacci(n));
            assert_eq!(even.len() as u128, fibonacci(n + 1));
            let mut all: Vec<SparseSequence> = odd.into_iter().chain(even).collect();
            all.sort();
            all.dedup();
            assert_eq!(
                all.len() as u128,
                fibonacci(n + 2),
                "containers hit every sparse sequence once"
            );
        }
    }

    #[test]
    fn even_odd_partition_count_formula() {
        // mu = 0, nu = n: only the all-ones composition
        assert_eq!(count_partitions_even_odd(6, 0, 6).unwrap(), 1);
        // formula agrees with direct enumeration wherever defined
        for n in 1..=9usize {
            let all = all_compositions(n);
            for mu in 0..=n / 2 {
                for nu in 0..=n {
                    if n % 2 != nu % 2 || n < 2 * mu + nu {
                        assert!(count_partitions_even_odd(n, mu, nu).is_err());
                        continue;
                    }
                    let direct =
                        all.iter().filter(|p| p.mu() == mu && p.nu() == nu).count() as u128;
                    assert_eq!(
                        count_partitions_even_odd(n, mu, nu).unwrap(),
                        direct,
                        "n={n} mu={mu} nu={nu}"
                    );
                }
            }
        }
        // the n = 5, mu = 1, nu = 1 case: 4+1, 1+4, 2+3, 3+2
        assert_eq!(count_partitions_even_odd(5, 1, 1).unwrap(), 4);
    }
}
