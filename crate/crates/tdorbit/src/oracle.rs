//! Independent brute-force ground truth: orbit and class enumeration by
//! closure under generators, and raw Frobenius induction. Nothing here shares
//! code with the structural classification modules; only the field, group and
//! action primitives are reused.

use crate::cyclo::CycInt;
use crate::group::{enumerate_group, group_order, GroupElement};
use crate::liealg::{coadjoint_act, CoadjointPoint};
use crate::{Budget, Result};

/// A partition of `{0, .., size-1}` produced by union-find; block
/// representatives are canonicalized to the minimum element, so the result is
/// independent of merge order.
pub struct PartitionOfSet {
    parent: Vec<usize>,
}

impl PartitionOfSet {
    pub fn new(size: usize) -> Self {
        PartitionOfSet {
            parent: (0..size).collect(),
        }
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    pub fn union(&mut self, i: usize, j: usize) {
        let ri = self.find(i);
        let rj = self.find(j);
        match ri.cmp(&rj) {
            std::cmp::Ordering::Less => self.parent[rj] = ri,
            std::cmp::Ordering::Greater => self.parent[ri] = rj,
            std::cmp::Ordering::Equal => {}
        }
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        let find = |mut i: usize| {
            while self.parent[i] != i {
                i = self.parent[i];
            }
            i
        };
        find(i) == find(j)
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    /// Canonical block id (the minimum member) for every element.
    pub fn block_ids(&mut self) -> Vec<usize> {
        (0..self.parent.len()).map(|i| self.find(i)).collect()
    }

    pub fn block_count(&self) -> usize {
        (0..self.parent.len())
            .filter(|&i| self.parent[i] == i)
            .count()
    }

    pub fn block_sizes(&mut self) -> Vec<usize> {
        let ids = self.block_ids();
        let mut sizes = std::collections::BTreeMap::new();
        for id in ids {
            *sizes.entry(id).or_insert(0usize) += 1;
        }
        sizes.into_values().collect()
    }
}

/// Orbit partition of all `q^(2n-1)` coadjoint points under closure by the
/// `q^n` generators `g(alpha; 0)`; the actions do not depend on beta, so
/// these generators suffice.
pub fn brute_coadjoint_orbits(n: usize, q: u32, budget: &Budget) -> Result<PartitionOfSet> {
    let points = group_order(n, q);
    budget.check_elements(points, "brute coadjoint orbits")?;
    budget.check_ops(points * crate::qpow(q, n as u32), "brute coadjoint orbits")?;
    let generators = alpha_generators(n, q);
    let edges = crate::par::map_range(0..points as usize, |i| {
        let f = CoadjointPoint::from_index(i, n, q);
        generators
            .iter()
            .map(|g| coadjoint_act(g, &f).expect("shapes match").index())
            .collect::<Vec<_>>()
    });
    let mut uf = PartitionOfSet::new(points as usize);
    for (i, images) in edges.into_iter().enumerate() {
        for j in images {
            uf.union(i, j);
        }
    }
    Ok(uf)
}

/// Conjugacy-class partition of all group elements by closure under
/// conjugation with the generators `g(alpha; 0)` (conjugation is also
/// beta-independent).
pub fn brute_conjugacy_classes(n: usize, q: u32, budget: &Budget) -> Result<PartitionOfSet> {
    let size = group_order(n, q);
    budget.check_elements(size, "brute conjugacy classes")?;
    budget.check_ops(size * crate::qpow(q, n as u32), "brute conjugacy classes")?;
    let generators = alpha_generators(n, q);
    let edges = crate::par::map_range(0..size as usize, |i| {
        let x = GroupElement::from_index(i, n, q);
        generators
            .iter()
            .map(|g| x.conjugate(g).expect("shapes match").index())
            .collect::<Vec<_>>()
    });
    let mut uf = PartitionOfSet::new(size as usize);
    for (i, images) in edges.into_iter().enumerate() {
        for j in images {
            uf.union(i, j);
        }
    }
    Ok(uf)
}

fn alpha_generators(n: usize, q: u32) -> Vec<GroupElement> {
    let count = crate::qpow(q, n as u32) as usize;
    (0..count)
        .map(|i| {
            // alpha digits, beta zero
            let beta_digits = crate::qpow(q, (n - 1) as u32) as usize;
            GroupElement::from_index(i * beta_digits, n, q)
        })
        .collect()
}

/// Raw Frobenius induction: `chi_hat(s) = (1/|H|) sum over t with t^-1 s t in H
/// of chi(t^-1 s t)`. `H` is given by a membership predicate, `chi` by a value
/// function on `H`; normality is not assumed.
pub fn brute_induce<H, C>(
    n: usize,
    q: u32,
    in_subgroup: H,
    chi: C,
    budget: &Budget,
) -> Result<Vec<CycInt>>
where
    H: Fn(&GroupElement) -> bool + Sync,
    C: Fn(&GroupElement) -> CycInt + Sync,
{
    let all = enumerate_group(n, q, budget)?;
    budget.check_ops((all.len() as u128).pow(2), "brute induction")?;
    let subgroup_order = all.iter().filter(|t| in_subgroup(t)).count() as i64;
    assert!(subgroup_order > 0, "subgroup must contain the identity");
    let values = crate::par::map_slice(&all, |s| {
        let mut acc = CycInt::zero(q);
        for t in &all {
            let conj = s.conjugate(t).expect("same shape");
            if in_subgroup(&conj) {
                acc = acc.add(&chi(&conj));
            }
        }
        acc.div_exact(subgroup_order)
    });
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::e_char;
    use crate::fq::FieldElement;

    #[test]
    fn orbits_n1_are_singletons() {
        let mut uf = brute_coadjoint_orbits(1, 3, &Budget::default()).unwrap();
        assert_eq!(uf.block_count(), 3);
        assert!(uf.block_sizes().iter().all(|&s| s == 1));
    }

    #[test]
    fn orbit_count_n3_q2() {
        let uf = brute_coadjoint_orbits(3, 2, &Budget::default()).unwrap();
        assert_eq!(uf.block_count(), 14);
    }

    #[test]
    fn orbit_sizes_are_q_powers() {
        for (n, q) in [(2usize, 3u32), (3, 2), (3, 3), (4, 2)] {
            let mut uf = brute_coadjoint_orbits(n, q, &Budget::default()).unwrap();
            for s in uf.block_sizes() {
                let mut s = s;
                while s > 1 {
                    assert_eq!(s % q as usize, 0);
                    s /= q as usize;
                }
            }
        }
    }

    #[test]
    fn identity_class_is_singleton() {
        let mut uf = brute_conjugacy_classes(3, 2, &Budget::default()).unwrap();
        let ids = uf.block_ids();
        let e = GroupElement::identity(3, 2);
        assert_eq!(ids.iter().filter(|&&b| b == ids[e.index()]).count(), 1);
    }

    #[test]
    fn class_count_equals_orbit_count() {
        for (n, q) in [(3usize, 2u32), (3, 3), (4, 2), (4, 3), (5, 2)] {
            let orbits = brute_coadjoint_orbits(n, q, &Budget::default()).unwrap();
            let classes = brute_conjugacy_classes(n, q, &Budget::default()).unwrap();
            assert_eq!(orbits.block_count(), classes.block_count(), "n={n} q={q}");
        }
    }

    #[test]
    fn induce_trivial_from_whole_group() {
        let vals = brute_induce(
            2,
            3,
            |_: &GroupElement| true,
            |_: &GroupElement| CycInt::one(3),
            &Budget::default(),
        )
        .unwrap();
        assert!(vals.iter().all(|v| *v == CycInt::one(3)));
    }

    #[test]
    fn induce_from_identity_gives_regular() {
        let (n, q) = (2usize, 2u32);
        let vals = brute_induce(
            n,
            q,
            |t: &GroupElement| t.is_identity(),
            |_: &GroupElement| CycInt::one(q),
            &Budget::default(),
        )
        .unwrap();
        let order = group_order(n, q) as i64;
        for (i, v) in vals.iter().enumerate() {
            if i == 0 {
                assert_eq!(*v, CycInt::from_integer(order, q));
            } else {
                assert!(v.is_zero());
            }
        }
    }

    #[test]
    fn induce_additive_character_of_center() {
        // H = center of G_2(F_3) (alpha = 0); inducing e(beta_1) gives a value
        // supported on H with q * e on it
        let (n, q) = (2usize, 3u32);
        let chi = |t: &GroupElement| e_char(t.beta[0]);
        let in_h = |t: &GroupElement| t.alpha.iter().all(FieldElement::is_zero);
        let vals = brute_induce(n, q, in_h, chi, &Budget::default()).unwrap();
        let all = enumerate_group(n, q, &Budget::default()).unwrap();
        // the center is fixed by conjugation, so the induced value on H is
        // [G : H] * chi = q^2 * chi, and zero off H
        for (t, v) in all.iter().zip(&vals) {
            if in_h(t) {
                assert_eq!(*v, chi(t).scale((q * q) as i64));
            } else {
                assert!(v.is_zero());
            }
        }
    }
}
