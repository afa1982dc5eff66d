//! The orbit method for `G_n`: basic representations from polarizations and
//! the master equation, closed-form characters, tensor assembly over the
//! segment projection, the exact character table, and the completeness
//! identity.
//!
//! Representation matrices are monomial (one nonzero entry per row and
//! column) and are stored as an index map plus a coefficient per column;
//! dimensions are `q^k`, so nothing dense is ever needed.

use crate::classes::{class_of, conjugacy_classes, ClassInfo};
use crate::cyclo::{e_char, hermitian_inner_classes, CycInt, ExactRational};
use crate::fq::FieldElement;
use crate::group::{group_order, GroupElement};
use crate::liealg::segment_coefficients;
use crate::orbits::{enumerate_descriptors, OrbitDescriptor};
use crate::partitions::Composition;
use crate::{qpow, Budget, Error, Result};

/// A monomial matrix over `Z[zeta_p]`: column `c` has its unique nonzero
/// entry in row `target[c]` with value `coeff[c]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialMatrix {
    pub target: Vec<usize>,
    pub coeff: Vec<CycInt>,
}

impl MonomialMatrix {
    pub fn identity(dim: usize, p: u32) -> Self {
        MonomialMatrix {
            target: (0..dim).collect(),
            coeff: vec![CycInt::one(p); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.target.len()
    }

    pub fn is_identity(&self) -> bool {
        self.target.iter().enumerate().all(|(c, &r)| c == r)
            && self.coeff.iter().all(|c| *c == CycInt::one(c.modulus()))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim(), rhs.dim());
        let target = rhs.target.iter().map(|&k| self.target[k]).collect();
        let coeff = rhs
            .target
            .iter()
            .zip(&rhs.coeff)
            .map(|(&k, c)| self.coeff[k].mul(c))
            .collect();
        MonomialMatrix { target, coeff }
    }

    pub fn trace(&self) -> CycInt {
        let p = self.coeff[0].modulus();
        let mut acc = CycInt::zero(p);
        for (c, &r) in self.target.iter().enumerate() {
            if c == r {
                acc = acc.add(&self.coeff[c]);
            }
        }
        acc
    }

    /// Kronecker product; index order is `self` outer, `rhs` inner.
    pub fn tensor(&self, rhs: &Self) -> Self {
        let d2 = rhs.dim();
        let mut target = Vec::with_capacity(self.dim() * d2);
        let mut coeff = Vec::with_capacity(self.dim() * d2);
        for c1 in 0..self.dim() {
            for c2 in 0..d2 {
                target.push(self.target[c1] * d2 + rhs.target[c2]);
                coeff.push(self.coeff[c1].mul(&rhs.coeff[c2]));
            }
        }
        MonomialMatrix { target, coeff }
    }
}

/// A basic representation of `G_m`: the orbit has no zero y's, so the whole
/// interval is one segment. For odd `m` the orbit also carries the invariant
/// value, and the representative has `x_1 = invariant / (y_2 y_4 ... y_(m-1))`.
#[derive(Clone, Debug)]
pub struct BasicRepresentation {
    n: usize,
    q: u32,
    y: Vec<FieldElement>,
    invariant: Option<FieldElement>,
    /// 0-based alpha positions of the transversal coordinates (local even
    /// positions 2, 4, ...).
    t_positions: Vec<usize>,
    /// representative x_1 (zero for even m).
    x1: FieldElement,
}

impl BasicRepresentation {
    pub fn new(
        n: usize,
        q: u32,
        y: Vec<FieldElement>,
        invariant: Option<FieldElement>,
    ) -> Result<Self> {
        if y.len() != n - 1 {
            return Err(Error::ShapeMismatch(format!(
                "y has length {}, expected {}",
                y.len(),
                n - 1
            )));
        }
        if let Some(j) = y.iter().position(|e| e.is_zero()) {
            return Err(Error::NotBasicOrbit(format!("y_{} = 0", j + 1)));
        }
        if (n % 2 == 1) != invariant.is_some() {
            return Err(Error::NotBasicOrbit(
                "odd length needs an invariant value, even length has none".into(),
            ));
        }
        let x1 = match invariant {
            Some(v) => {
                let c = segment_coefficients(&y, 0, n, q);
                v.div(c[0]).expect("products of nonzero y's")
            }
            None => FieldElement::zero(q),
        };
        Ok(BasicRepresentation {
            n,
            q,
            y,
            invariant,
            t_positions: (1..n).step_by(2).collect(),
            x1,
        })
    }

    pub fn from_descriptor(d: &OrbitDescriptor) -> Result<Self> {
        if d.partition.num_parts() != 1 {
            return Err(Error::NotBasicOrbit(format!(
                "partition {:?} has more than one part",
                d.partition
            )));
        }
        Self::new(d.n, d.q, d.y.clone(), d.invariant_of_part(0))
    }

    pub fn dim(&self) -> usize {
        qpow(self.q, self.t_positions.len() as u32) as usize
    }

    fn decode(&self, mut idx: usize) -> Vec<FieldElement> {
        let qu = self.q as usize;
        let mut t = vec![FieldElement::zero(self.q); self.t_positions.len()];
        for slot in t.iter_mut().rev() {
            *slot = FieldElement::new((idx % qu) as u32, self.q);
            idx /= qu;
        }
        t
    }

    fn encode(&self, t: &[FieldElement]) -> usize {
        let qu = self.q as usize;
        t.iter()
            .fold(0usize, |acc, e| acc * qu + e.value() as usize)
    }

    /// The transversal element `s(t)`: t-values at the even alpha positions,
    /// everything else zero.
    fn transversal(&self, t: &[FieldElement]) -> GroupElement {
        let mut alpha = vec![FieldElement::zero(self.q); self.n];
        for (&pos, &v) in self.t_positions.iter().zip(t) {
            alpha[pos] = v;
        }
        GroupElement::new(alpha, vec![FieldElement::zero(self.q); self.n - 1])
    }

    /// The polarization character `rho(h) = e(x_1 h.alpha_1 + sum y_j h.beta_j)`
    /// for `h` in the polarization subgroup (alpha vanishing at even positions).
    fn rho(&self, h: &GroupElement) -> CycInt {
        debug_assert!(self.t_positions.iter().all(|&p| h.alpha[p].is_zero()));
        let mut s = self.x1 * h.alpha[0];
        for (y, b) in self.y.iter().zip(&h.beta) {
            s = s + *y * *b;
        }
        e_char(s)
    }

    /// The representation matrix of `g`, built by solving the master equation
    /// `s(t) g = h' s(t')` with `t' = t + g.alpha` on the transversal
    /// coordinates and `h' = s(t) g s(t')^(-1)` in the polarization subgroup.
    pub fn matrix(&self, g: &GroupElement) -> MonomialMatrix {
        assert_eq!(g.n(), self.n);
        assert_eq!(g.q(), self.q);
        let dim = self.dim();
        let mut target = Vec::with_capacity(dim);
        let mut coeff = Vec::with_capacity(dim);
        for col in 0..dim {
            let t_prime = self.decode(col);
            let t: Vec<FieldElement> = self
                .t_positions
                .iter()
                .zip(&t_prime)
                .map(|(&pos, &v)| v - g.alpha[pos])
                .collect();
            let h = self
                .transversal(&t)
                .mul(g)
                .mul(&self.transversal(&t_prime).inverse());
            target.push(self.encode(&t));
            coeff.push(self.rho(&h));
        }
        MonomialMatrix { target, coeff }
    }

    /// Closed-form character. Even length: `q^(m/2) prod e(y_j beta_j)` when
    /// all alphas vanish, zero otherwise. Odd length: `q^((m-1)/2) e(kappa v)
    /// prod e(y_j beta_j)` when the even-position alphas vanish and the
    /// odd-position alphas lie on the stabilizer line with parameter `kappa`,
    /// zero otherwise.
    pub fn character(&self, g: &GroupElement) -> CycInt {
        assert_eq!(g.n(), self.n);
        let q = self.q;
        let zero = CycInt::zero(q);
        if self.t_positions.iter().any(|&p| !g.alpha[p].is_zero()) {
            return zero;
        }
        let scale = qpow(q, (self.n / 2) as u32) as i64;
        let mut phase = FieldElement::zero(q);
        if self.n % 2 == 1 {
            let c = segment_coefficients(&self.y, 0, self.n, q);
            let kappa = g.alpha[0].div(c[0]).expect("nonzero coefficient");
            for (i, &cs) in c.iter().enumerate() {
                if g.alpha[2 * i] != kappa * cs {
                    return zero;
                }
            }
            phase = kappa * self.invariant.expect("odd basic orbit has an invariant");
        } else if g.alpha.iter().any(|a| !a.is_zero()) {
            return zero;
        }
        for (y, b) in self.y.iter().zip(&g.beta) {
            phase = phase + *y * *b;
        }
        e_char(phase).scale(scale)
    }
}

/// Projection of `g` onto the component groups of a composition: component
/// `r` receives the alphas of its segment and the betas strictly inside it;
/// the betas at break positions span the central kernel and are dropped.
pub fn project(g: &GroupElement, partition: &Composition) -> Result<Vec<GroupElement>> {
    if partition.n() != g.n() {
        return Err(Error::ShapeMismatch(format!(
            "composition of {} does not fit n = {}",
            partition.n(),
            g.n()
        )));
    }
    let mut out = Vec::with_capacity(partition.num_parts());
    let mut lo = 0;
    for &p in partition.parts() {
        let alpha = g.alpha[lo..lo + p].to_vec();
        let beta = g.beta[lo..lo + p - 1].to_vec();
        out.push(GroupElement::new(alpha, beta));
        lo += p;
    }
    Ok(out)
}

/// Per-segment basic representations of an orbit descriptor.
fn component_reps(d: &OrbitDescriptor) -> Vec<BasicRepresentation> {
    d.segments()
        .iter()
        .enumerate()
        .map(|(r, &(lo, hi))| {
            BasicRepresentation::new(
                hi - lo,
                d.q,
                d.y[lo..hi - 1].to_vec(),
                d.invariant_of_part(r),
            )
            .expect("segment y's are nonzero by construction")
        })
        .collect()
}

/// The irreducible character attached to an orbit descriptor, evaluated at a
/// single group element: the product of the component basic characters under
/// the segment projection.
pub fn irreducible_character_at(d: &OrbitDescriptor, g: &GroupElement) -> CycInt {
    let comps = project(g, &d.partition).expect("descriptor and element share n");
    let reps = component_reps(d);
    let mut acc = CycInt::one(d.q);
    for (rep, comp) in reps.iter().zip(&comps) {
        let v = rep.character(comp);
        if v.is_zero() {
            return CycInt::zero(d.q);
        }
        acc = acc.mul(&v);
    }
    acc
}

/// The full monomial representation matrix of `g` for an orbit descriptor:
/// the tensor product of the component basic matrices, components ordered
/// left to right by segment.
pub fn rep_matrix(d: &OrbitDescriptor, g: &GroupElement) -> MonomialMatrix {
    let comps = project(g, &d.partition).expect("descriptor and element share n");
    let reps = component_reps(d);
    let mut acc: Option<MonomialMatrix> = None;
    for (rep, comp) in reps.iter().zip(&comps) {
        let m = rep.matrix(comp);
        acc = Some(match acc {
            None => m,
            Some(prev) => prev.tensor(&m),
        });
    }
    acc.expect("at least one segment")
}

/// The exact character table: rows are orbit descriptors, columns are
/// conjugacy classes.
pub struct CharacterTable {
    pub n: usize,
    pub q: u32,
    pub classes: Vec<ClassInfo>,
    pub irreps: Vec<OrbitDescriptor>,
    /// `values[i][c]` is the i-th character at the c-th class representative.
    pub values: Vec<Vec<CycInt>>,
}

impl CharacterTable {
    pub fn class_sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn inner(&self, i: usize, j: usize) -> Result<ExactRational> {
        hermitian_inner_classes(
            &self.values[i],
            &self.values[j],
            &self.class_sizes(),
            group_order(self.n, self.q),
        )
    }

    /// Inner product of an arbitrary class function against row `i`.
    pub fn inner_with(&self, vals: &[CycInt], i: usize) -> Result<ExactRational> {
        hermitian_inner_classes(
            vals,
            &self.values[i],
            &self.class_sizes(),
            group_order(self.n, self.q),
        )
    }

    pub fn dims(&self) -> Vec<u128> {
        self.irreps
            .iter()
            .map(|d| qpow(self.q, d.k() as u32))
            .collect()
    }

    /// The column index of the class of `g`.
    pub fn class_index_of(&self, g: &GroupElement) -> usize {
        let d = class_of(g);
        self.classes
            .iter()
            .position(|c| c.descriptor == d)
            .expect("every element belongs to a class")
    }
}

pub fn character_table(n: usize, q: u32, budget: &Budget) -> Result<CharacterTable> {
    let classes = conjugacy_classes(n, q, budget)?;
    let irreps = enumerate_descriptors(n, q, budget)?;
    let values = crate::par::map_slice(&irreps, |d| {
        classes
            .iter()
            .map(|c| irreducible_character_at(d, &c.rep))
            .collect::<Vec<_>>()
    });
    Ok(CharacterTable {
        n,
        q,
        classes,
        irreps,
        values,
    })
}

/// The completeness identity and its supporting recurrence, checked as exact
/// integer arithmetic.
#[derive(Clone, Debug)]
pub struct CompletenessReport {
    pub n: usize,
    pub q: u32,
    pub sum_of_squared_dims: u128,
    pub group_order: u128,
    pub identity_holds: bool,
    pub recurrence_holds: bool,
}

fn p_value(i: usize, q: u32) -> u128 {
    let mut acc = 0u128;
    for k in 0..=i {
        let b = crate::binomial(i as i64 - k as i64 - 1, k as i64);
        if b != 0 {
            acc += qpow(q, (i + k) as u32) * qpow(q - 1, k as u32) * b;
        }
    }
    acc
}

/// Check `sum over orbits of q^(2k) = q^(2n-1)` from the closed-form orbit
/// counts, together with the recurrence `P_i = q P_(i-1) + q^3 (q-1) P_(i-2)`
/// and `P_n + q(q-1) P_(n-1) = q^(2n-1)`.
pub fn completeness_check(n: usize, q: u32) -> CompletenessReport {
    let mut sum = 0u128;
    for k in 0..=n / 2 {
        sum +=
            crate::orbits::count_by_dimension(n, q, k).expect("k in range") * qpow(q, 2 * k as u32);
    }
    let order = group_order(n, q);
    let mut recurrence_holds = p_value(1, q) == q as u128 && p_value(2, q) == qpow(q, 2);
    for i in 3..=n {
        recurrence_holds &= p_value(i, q)
            == q as u128 * p_value(i - 1, q) + qpow(q, 3) * (q - 1) as u128 * p_value(i - 2, q);
    }
    if n >= 2 {
        recurrence_holds &=
            p_value(n, q) + q as u128 * (q - 1) as u128 * p_value(n - 1, q) == order;
    }
    CompletenessReport {
        n,
        q,
        sum_of_squared_dims: sum,
        group_order: order,
        identity_holds: sum == order,
        recurrence_holds,
    }
}
