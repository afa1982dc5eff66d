//! Classification, canonical labeling, enumeration, and counting of coadjoint
//! orbits of `G_n`.
//!
//! An orbit is determined by the y-coordinates (invariant under the action; the
//! zero positions cut `[1, n]` into the parts of a composition) together with
//! one scalar invariant for every odd part. The descriptor stores exactly that
//! data, so descriptor equality is orbit equality.

use crate::fq::FieldElement;
use crate::liealg::{segment_coefficients, segment_invariant, CoadjointPoint};
use crate::partitions::Composition;
use crate::{qpow, Budget, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrbitDescriptor {
    pub n: usize,
    pub q: u32,
    pub partition: Composition,
    /// Full y-tuple; zero exactly at the break positions of the partition.
    pub y: Vec<FieldElement>,
    /// `(r, v_r)` for every part index `r` whose part is odd, ascending in `r`.
    pub odd_invariants: Vec<(usize, FieldElement)>,
}

impl OrbitDescriptor {
    /// Orbit dimension `n - nu`; always even.
    pub fn dimension(&self) -> usize {
        self.n - self.partition.nu()
    }

    /// `k = dimension / 2`; the corresponding representation has dimension `q^k`.
    pub fn k(&self) -> usize {
        self.dimension() / 2
    }

    /// Segment bounds `(lo, hi]` for every part, in order.
    pub fn segments(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.partition.num_parts());
        let mut lo = 0;
        for &p in self.partition.parts() {
            out.push((lo, lo + p));
            lo += p;
        }
        out
    }

    /// The invariant attached to part `r`, if that part is odd.
    pub fn invariant_of_part(&self, r: usize) -> Option<FieldElement> {
        self.odd_invariants
            .iter()
            .find(|(i, _)| *i == r)
            .map(|(_, v)| *v)
    }

    /// Canonical orbit representative: all non-invariant x-coordinates zero,
    /// and in each odd segment the leading x chosen so the segment invariant
    /// equals `v_r`.
    pub fn representative(&self) -> CoadjointPoint {
        let q = self.q;
        let mut x = vec![FieldElement::zero(q); self.n];
        for (r, (lo, hi)) in self.segments().into_iter().enumerate() {
            if (hi - lo) % 2 == 1 {
                let v = self
                    .invariant_of_part(r)
                    .expect("odd part carries an invariant");
                let c = segment_coefficients(&self.y, lo, hi, q);
                x[lo] = v
                    .div(c[0])
                    .expect("coefficient is a product of nonzero y's");
            }
        }
        CoadjointPoint::new(x, self.y.clone())
    }

    fn sort_key(&self) -> (Vec<usize>, Vec<u32>, Vec<u32>) {
        (
            self.partition.parts().to_vec(),
            self.y.iter().map(|e| e.value()).collect(),
            self.odd_invariants.iter().map(|(_, v)| v.value()).collect(),
        )
    }
}

/// Canonical label of the orbit through `f`.
pub fn classify(f: &CoadjointPoint) -> OrbitDescriptor {
    let n = f.n();
    let q = f.q();
    let breaks: Vec<usize> = (1..n).filter(|&i| f.y[i - 1].is_zero()).collect();
    let partition = Composition::from_breaks(n, &breaks);
    let mut odd_invariants = Vec::new();
    let mut lo = 0;
    for (r, &p) in partition.parts().iter().enumerate() {
        if p % 2 == 1 {
            let v = segment_invariant(f, lo, lo + p)
                .expect("segment bounds come from the zero pattern");
            odd_invariants.push((r, v));
        }
        lo += p;
    }
    OrbitDescriptor {
        n,
        q,
        partition,
        y: f.y.clone(),
        odd_invariants,
    }
}

/// Number of orbits attached to one composition: `(q-1)^(n-1-m) * q^nu`,
/// where `m` is the number of breaks.
pub fn count_for_partition(partition: &Composition, q: u32) -> u128 {
    let n = partition.n();
    let m = partition.num_parts() - 1;
    qpow(q - 1, (n - 1 - m) as u32) * qpow(q, partition.nu() as u32)
}

/// All orbit descriptors of `G_n(F_q)`, ordered by partition, then y, then the
/// odd invariants, each lexicographically.
pub fn enumerate_descriptors(n: usize, q: u32, budget: &Budget) -> Result<Vec<OrbitDescriptor>> {
    assert!(n >= 1);
    assert!(crate::fq::is_prime(q));
    let total: u128 = crate::partitions::all_compositions(n)
        .iter()
        .map(|p| count_for_partition(p, q))
        .sum();
    budget.check_elements(total, "orbit descriptor enumeration")?;

    let mut partitions = crate::partitions::all_compositions(n);
    partitions.sort();
    let mut out = Vec::with_capacity(total as usize);
    for partition in partitions {
        let breaks = partition.breaks();
        let free: Vec<usize> = (1..n).filter(|i| !breaks.contains(i)).collect();
        let odd_parts: Vec<usize> = partition
            .parts()
            .iter()
            .enumerate()
            .filter(|(_, &p)| p % 2 == 1)
            .map(|(r, _)| r)
            .collect();
        let y_choices = qpow(q - 1, free.len() as u32) as usize;
        let v_choices = qpow(q, odd_parts.len() as u32) as usize;
        for yi in 0..y_choices {
            let mut y = vec![FieldElement::zero(q); n - 1];
            let mut rem = yi;
            for &pos in free.iter().rev() {
                y[pos - 1] = FieldElement::new(1 + (rem % (q - 1) as usize) as u32, q);
                rem /= (q - 1) as usize;
            }
            for vi in 0..v_choices {
                let mut odd_invariants = Vec::with_capacity(odd_parts.len());
                let mut rem = vi;
                for &r in odd_parts.iter().rev() {
                    odd_invariants.push((r, FieldElement::new((rem % q as usize) as u32, q)));
                    rem /= q as usize;
                }
                odd_invariants.reverse();
                out.push(OrbitDescriptor {
                    n,
                    q,
                    partition: partition.clone(),
                    y: y.clone(),
                    odd_invariants,
                });
            }
        }
    }
    out.sort_by_key(|d| d.sort_key());
    Ok(out)
}

/// Closed-form number of `2k`-dimensional orbits:
/// `q^(n-k-1) (q-1)^k (C(n-k-1, k) q + C(n-k-1, k-1))`.
pub fn count_by_dimension(n: usize, q: u32, k: usize) -> Result<u128> {
    if k > n / 2 {
        return Err(Error::OutOfRange(format!(
            "k = {k} exceeds n/2 = {}",
            n / 2
        )));
    }
    let nk = (n - k) as i64 - 1;
    Ok(qpow(q, (n - k - 1) as u32)
        * qpow(q - 1, k as u32)
        * (crate::binomial(nk, k as i64) * q as u128 + crate::binomial(nk, k as i64 - 1)))
}

/// Orbit census by dimension, from the descriptor data (not the closed form).
pub fn census_by_dimension(n: usize, q: u32) -> Vec<u128> {
    let mut counts = vec![0u128; n / 2 + 1];
    for partition in crate::partitions::all_compositions(n) {
        let k = partition.k();
        counts[k] += count_for_partition(&partition, q);
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::all_compositions;

    fn fe(v: u32, p: u32) -> FieldElement {
        FieldElement::new(v, p)
    }

    #[test]
    fn classify_zero_point() {
        let f = CoadjointPoint::zero(4, 3);
        let d = classify(&f);
        assert_eq!(d.partition.parts(), &[1, 1, 1, 1]);
        assert_eq!(d.dimension(), 0);
        assert!(d.odd_invariants.iter().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn classify_basic_example() {
        let f = CoadjointPoint::new(vec![fe(1, 2), fe(0, 2), fe(0, 2)], vec![fe(1, 2), fe(1, 2)]);
        let d = classify(&f);
        assert_eq!(d.partition.parts(), &[3]);
        assert_eq!(d.odd_invariants, vec![(0, fe(1, 2))]);
        assert_eq!(d.dimension(), 2);
    }

    #[test]
    fn representative_classifies_back() {
        for (n, q) in [(3usize, 3u32), (4, 2), (5, 2)] {
            for d in enumerate_descriptors(n, q, &Budget::default()).unwrap() {
                let f = d.representative();
                assert_eq!(classify(&f), d);
            }
        }
    }

    #[test]
    fn dimension_examples() {
        let d = classify(&CoadjointPoint::zero(5, 2));
        assert_eq!(d.dimension(), 0);
        // single even part: n-dimensional orbit
        let f = CoadjointPoint::new(vec![fe(0, 3); 4], vec![fe(1, 3), fe(2, 3), fe(1, 3)]);
        assert_eq!(classify(&f).dimension(), 4);
        // n = 5, partition 1+4: nu = 1, dim 4
        let f = CoadjointPoint::new(
            vec![fe(0, 2); 5],
            vec![fe(0, 2), fe(1, 2), fe(1, 2), fe(1, 2)],
        );
        let d = classify(&f);
        assert_eq!(d.partition.parts(), &[1, 4]);
        assert_eq!(d.dimension(), 4);
    }

    #[test]
    fn enumeration_counts_small() {
        let d32 = enumerate_descriptors(3, 2, &Budget::default()).unwrap();
        assert_eq!(d32.len(), 14);
        assert_eq!(d32.iter().filter(|d| d.dimension() == 0).count(), 8);
        assert_eq!(d32.iter().filter(|d| d.dimension() == 2).count(), 6);

        let d23 = enumerate_descriptors(2, 3, &Budget::default()).unwrap();
        assert_eq!(d23.len(), 11);
        assert_eq!(d23.iter().filter(|d| d.dimension() == 2).count(), 2);
        assert_eq!(d23.iter().filter(|d| d.dimension() == 0).count(), 9);
    }

    #[test]
    fn per_partition_count() {
        for q in [2u32, 3, 5] {
            for n in 1..=6 {
                for p in all_compositions(n) {
                    let m = p.num_parts() - 1;
                    assert_eq!(
                        count_for_partition(&p, q),
                        qpow(q - 1, (n - 1 - m) as u32) * qpow(q, p.nu() as u32)
                    );
                }
            }
        }
    }

    #[test]
    fn closed_form_matches_enumeration() {
        for q in [2u32, 3, 5] {
            for n in 1..=8 {
                let census = census_by_dimension(n, q);
                for (k, &c) in census.iter().enumerate() {
                    assert_eq!(count_by_dimension(n, q, k).unwrap(), c, "n={n} q={q} k={k}");
                }
            }
        }
        assert_eq!(count_by_dimension(3, 2, 1).unwrap(), 6);
        // k = 0 orbits are the q^n fixed points
        for q in [2u32, 3] {
            for n in 1..=6 {
                assert_eq!(count_by_dimension(n, q, 0).unwrap(), qpow(q, n as u32));
            }
        }
        assert!(matches!(
            count_by_dimension(4, 2, 3),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn theorem_sum_over_even_odd_partitions() {
        // sum over mu of (partition count) * (q-1)^(2k-mu) q^(n-2k) equals the
        // closed form, for n <= 8
        for q in [2u32, 3] {
            for n in 1..=8usize {
                for k in 0..=n / 2 {
                    let nu = n - 2 * k;
                    let mut total = 0u128;
                    for mu in 0..=k {
                        if n >= 2 * mu + nu {
                            total += crate::partitions::count_partitions_even_odd(n, mu, nu)
                                .unwrap()
                                * qpow(q - 1, (2 * k - mu) as u32)
                                * qpow(q, nu as u32);
                        }
                    }
                    assert_eq!(
                        total,
                        count_by_dimension(n, q, k).unwrap(),
                        "n={n} q={q} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_is_deterministic_and_unique() {
        let a = enumerate_descriptors(4, 3, &Budget::default()).unwrap();
        let b = enumerate_descriptors(4, 3, &Budget::default()).unwrap();
        assert_eq!(a, b);
        let mut dedup = a.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), a.len());
    }
}
