//! The multiplicity-one model for `G_n`: containers of sparse-support classes,
//! their common stabilizers, one stabilizer character per class read off the
//! flock diagram, induced characters in closed form, and the exact
//! multiplicity verification.

use std::collections::BTreeMap;

use crate::classes::{conjugacy_classes, named_invariants, ClassDescriptor, ClassInfo};
use crate::cyclo::{e_char, CycInt, ExactRational};
use crate::fq::FieldElement;
use crate::group::GroupElement;
use crate::partitions::{
    container_of_flock, flocks, sparse_sequences, Flock, FlockType, SparseSequence,
};
use crate::reps::CharacterTable;
use crate::{qpow, Budget, Error, Result};

/// One class with sparse alpha-support: its representative, canonical label,
/// size, and the invariant values that label it inside its container.
#[derive(Clone, Debug)]
pub struct MClass {
    pub rep: GroupElement,
    pub descriptor: ClassDescriptor,
    pub size: u64,
    /// `(i, a_i)` for the support positions `i` (1-based), ascending.
    pub a_invariants: Vec<(usize, FieldElement)>,
    /// Named beta-invariants with their smallest beta index, ascending.
    pub b_invariants: Vec<(usize, FieldElement)>,
}

/// All classes whose alpha-support is exactly one sparse sequence.
#[derive(Clone, Debug)]
pub struct Container {
    pub seq: SparseSequence,
    pub i_minus: Vec<usize>,
    pub i_plus: Vec<usize>,
    pub classes: Vec<MClass>,
}

impl Container {
    /// `|Stab(I)| = q^(n - 1 + |I^+|)`.
    pub fn stabilizer_order(&self, q: u32) -> u128 {
        qpow(q, (self.seq.n() - 1 + self.i_plus.len()) as u32)
    }

    /// Membership predicate of the common stabilizer: alpha vanishes on `I^-`.
    pub fn in_stabilizer(&self, g: &GroupElement) -> bool {
        self.i_minus.iter().all(|&i| g.alpha[i - 1].is_zero())
    }
}

/// The containers of `G_n(F_q)`, ordered by sparse sequence. Classes inside a
/// container are ordered by their canonical representatives.
pub fn containers(n: usize, q: u32, budget: &Budget) -> Result<Vec<Container>> {
    let all_classes = conjugacy_classes(n, q, budget)?;
    let mut by_support: BTreeMap<Vec<usize>, Vec<MClass>> = BTreeMap::new();
    for info in all_classes {
        let support: Vec<usize> = (1..=n)
            .filter(|&i| !info.descriptor.a[i - 1].is_zero())
            .collect();
        if support.windows(2).any(|w| w[1] == w[0] + 1) {
            continue; // support not sparse: not an M-class
        }
        let a_invariants = support
            .iter()
            .map(|&i| (i, info.descriptor.a[i - 1]))
            .collect();
        let b_invariants = named_invariants(&info.rep);
        by_support.entry(support).or_default().push(MClass {
            rep: info.rep,
            descriptor: info.descriptor,
            size: info.size,
            a_invariants,
            b_invariants,
        });
    }
    Ok(sparse_sequences(n)
        .into_iter()
        .map(|seq| {
            let classes = by_support.remove(seq.indices()).unwrap_or_default();
            Container {
                i_minus: seq.i_minus(),
                i_plus: seq.i_plus(),
                seq,
                classes,
            }
        })
        .collect())
}

/// A one-dimensional character of `Stab(I)`:
/// `g(a; b) -> prod e(A_i a_i) * prod e(B_j b_j)`, with `A_i = 0` on `I^-`
/// and `B_j = 0` whenever `j, j+1` both lie in `I^+` (the coefficient would
/// otherwise see the commutator subgroup of the stabilizer).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabCharacter {
    pub seq: SparseSequence,
    pub a_coeffs: Vec<FieldElement>,
    pub b_coeffs: Vec<FieldElement>,
}

impl StabCharacter {
    pub fn new(
        seq: SparseSequence,
        a_coeffs: Vec<FieldElement>,
        b_coeffs: Vec<FieldElement>,
    ) -> Result<Self> {
        let n = seq.n();
        if a_coeffs.len() != n || b_coeffs.len() != n.saturating_sub(1) {
            return Err(Error::InvalidStabCharacter(format!(
                "coefficient lengths ({}, {}) do not match n = {n}",
                a_coeffs.len(),
                b_coeffs.len()
            )));
        }
        let i_plus = seq.i_plus();
        for &i in &seq.i_minus() {
            if !a_coeffs[i - 1].is_zero() {
                return Err(Error::InvalidStabCharacter(format!(
                    "A_{i} must vanish: {i} is adjacent to the support"
                )));
            }
        }
        for j in 1..n {
            if i_plus.contains(&j) && i_plus.contains(&(j + 1)) && !b_coeffs[j - 1].is_zero() {
                return Err(Error::InvalidStabCharacter(format!(
                    "B_{j} must vanish: positions {j}, {} both lie outside the neighbor set",
                    j + 1
                )));
            }
        }
        Ok(StabCharacter {
            seq,
            a_coeffs,
            b_coeffs,
        })
    }

    pub fn trivial(seq: SparseSequence, q: u32) -> Self {
        let n = seq.n();
        StabCharacter {
            seq,
            a_coeffs: vec![FieldElement::zero(q); n],
            b_coeffs: vec![FieldElement::zero(q); n - 1],
        }
    }

    /// Value on a stabilizer element (defined on all of `G_n` by the same
    /// formula; only the restriction to `Stab(I)` is a homomorphism).
    pub fn eval(&self, g: &GroupElement) -> CycInt {
        let q = g.q();
        let mut s = FieldElement::zero(q);
        for (coef, a) in self.a_coeffs.iter().zip(&g.alpha) {
            s = s + *coef * *a;
        }
        for (coef, b) in self.b_coeffs.iter().zip(&g.beta) {
            s = s + *coef * *b;
        }
        e_char(s)
    }
}

/// Closed-form induced character from `Stab(I)` to `G_n`:
/// `q^|I^-| * chi(g)` when for every `j in I^-` both `a_j = 0` and
/// `B_(j-1) a_(j-1) = B_j a_(j+1)` (boundary terms read as zero), else 0.
pub fn induced_character_at(chi: &StabCharacter, g: &GroupElement) -> CycInt {
    let n = g.n();
    let q = g.q();
    let b_at = |j: usize| -> FieldElement {
        if j >= 1 && j < n {
            chi.b_coeffs[j - 1]
        } else {
            FieldElement::zero(q)
        }
    };
    let a_at = |i: usize| -> FieldElement {
        if i >= 1 && i <= n {
            g.alpha[i - 1]
        } else {
            FieldElement::zero(q)
        }
    };
    for &j in &chi.seq.i_minus() {
        if !g.alpha[j - 1].is_zero() {
            return CycInt::zero(q);
        }
        if b_at(j - 1) * a_at(j - 1) != b_at(j) * a_at(j + 1) {
            return CycInt::zero(q);
        }
    }
    chi.eval(g)
        .scale(qpow(q, chi.seq.i_minus().len() as u32) as i64)
}

/// One assignment row: the container index, class index, and the stabilizer
/// character chosen for that class.
#[derive(Clone, Debug)]
pub struct Assignment {
    pub container: usize,
    pub class: usize,
    pub chi: StabCharacter,
}

/// The full model assignment for `G_n(F_q)`.
pub struct ModelAssignment {
    pub n: usize,
    pub q: u32,
    pub containers: Vec<Container>,
    pub assignments: Vec<Assignment>,
}

/// Slot layout of a flock diagram, relative to its container.
struct SlotLayout {
    /// Beta positions receiving the (nonzero) support values, ascending.
    plain_beta: Vec<usize>,
    /// Receivers for the beta-invariants, ascending along the diagram:
    /// alpha slots (`true`) before beta slots (`false`) at equal index.
    invariant_slots: Vec<(usize, bool)>,
}

fn slot_layout(flock: &Flock, seq: &SparseSequence) -> Result<SlotLayout> {
    let n = flock.head.n();
    let i_plus = seq.i_plus();
    let i_minus = seq.i_minus();
    let k = flock.k();

    if flock.head.is_all_ones() {
        // Degenerate flocks: no beta factors at all. The odd-type flock puts
        // its support value at alpha slot 1; the even-type flock leaves slot 1
        // at zero. Beta-invariants fill the remaining I^+ alpha slots
        // ascending, so together the two flocks hit every linear character
        // exactly once (slot 1 nonzero versus zero).
        let invariant_slots: Vec<(usize, bool)> = i_plus
            .iter()
            .filter(|&&i| i != 1)
            .map(|&i| (i, true))
            .collect();
        return Ok(SlotLayout {
            plain_beta: vec![],
            invariant_slots,
        });
    }

    let solid = flock.head.breaks();
    let dotted = &flock.dotted;
    let plain_beta: Vec<usize> = (1..n)
        .filter(|j| !solid.contains(j) && !dotted.contains(j))
        .collect();
    // first dot of every odd part of the head
    let mut overlined = Vec::new();
    let mut pos = 1;
    for &part in flock.head.parts() {
        if part % 2 == 1 {
            overlined.push(pos);
        }
        pos += part;
    }
    let shared_alpha: Vec<usize> = overlined
        .iter()
        .copied()
        .filter(|i| i_plus.contains(i))
        .collect();

    if plain_beta.len() != seq.len() {
        return Err(Error::SlotCountMismatch(format!(
            "{} plain beta slots for {} support values in {:?}",
            plain_beta.len(),
            seq.len(),
            seq
        )));
    }
    if dotted.len() + shared_alpha.len() != i_plus.len() - 1 {
        return Err(Error::SlotCountMismatch(format!(
            "{} + {} invariant slots for {} beta-invariants in {:?}",
            dotted.len(),
            shared_alpha.len(),
            i_plus.len() - 1,
            seq
        )));
    }
    let freed = overlined.iter().filter(|i| i_minus.contains(i)).count();
    if freed != i_minus.len() - k {
        return Err(Error::SlotCountMismatch(format!(
            "{freed} freed alpha slots, expected |I^-| - k = {}",
            i_minus.len() - k
        )));
    }

    let mut invariant_slots: Vec<(usize, bool)> = shared_alpha
        .into_iter()
        .map(|i| (i, true))
        .chain(dotted.iter().map(|&j| (j, false)))
        .collect();
    invariant_slots.sort_by_key(|&(idx, is_alpha)| (idx, !is_alpha));
    Ok(SlotLayout {
        plain_beta,
        invariant_slots,
    })
}

fn assign_for_class(
    flock: &Flock,
    seq: &SparseSequence,
    layout: &SlotLayout,
    class: &MClass,
    q: u32,
) -> Result<StabCharacter> {
    let n = seq.n();
    let mut a_coeffs = vec![FieldElement::zero(q); n];
    let mut b_coeffs = vec![FieldElement::zero(q); n - 1];

    if flock.head.is_all_ones() {
        if flock.ty == FlockType::Odd {
            let (_, a1) = class.a_invariants[0];
            a_coeffs[0] = a1;
        }
        if class.b_invariants.len() != layout.invariant_slots.len() {
            return Err(Error::SlotCountMismatch(format!(
                "{} beta-invariants for {} alpha slots in {:?}",
                class.b_invariants.len(),
                layout.invariant_slots.len(),
                seq
            )));
        }
        for (&(slot, _), &(_, v)) in layout.invariant_slots.iter().zip(&class.b_invariants) {
            a_coeffs[slot - 1] = v;
        }
        return StabCharacter::new(seq.clone(), a_coeffs, b_coeffs);
    }

    for (&slot, &(_, v)) in layout.plain_beta.iter().zip(&class.a_invariants) {
        b_coeffs[slot - 1] = v;
    }
    if class.b_invariants.len() != layout.invariant_slots.len() {
        return Err(Error::SlotCountMismatch(format!(
            "{} beta-invariants for {} slots in {:?}",
            class.b_invariants.len(),
            layout.invariant_slots.len(),
            seq
        )));
    }
    for (&(slot, is_alpha), &(_, v)) in layout.invariant_slots.iter().zip(&class.b_invariants) {
        if is_alpha {
            a_coeffs[slot - 1] = v;
        } else {
            b_coeffs[slot - 1] = v;
        }
    }
    StabCharacter::new(seq.clone(), a_coeffs, b_coeffs)
}

/// Choose one stabilizer character per M-class. Every container corresponds
/// to exactly one flock (odd-type flocks take the sparse sequences containing
/// 1, even-type the rest); inside a container, slots are matched to invariant
/// values in ascending order.
pub fn assign_characters(n: usize, q: u32, budget: &Budget) -> Result<ModelAssignment> {
    let containers = containers(n, q, budget)?;
    let mut flock_of_seq: BTreeMap<Vec<usize>, Flock> = BTreeMap::new();
    for ty in [FlockType::Odd, FlockType::Even] {
        for f in flocks(n, ty) {
            let seq = container_of_flock(&f);
            let prev = flock_of_seq.insert(seq.indices().to_vec(), f);
            assert!(prev.is_none(), "two flocks map to one container");
        }
    }
    let mut assignments = Vec::new();
    for (ci, cont) in containers.iter().enumerate() {
        let flock = flock_of_seq
            .get(cont.seq.indices())
            .ok_or_else(|| Error::SlotCountMismatch(format!("no flock for {:?}", cont.seq)))?;
        let layout = slot_layout(flock, &cont.seq)?;
        for (ki, class) in cont.classes.iter().enumerate() {
            assignments.push(Assignment {
                container: ci,
                class: ki,
                chi: assign_for_class(flock, &cont.seq, &layout, class, q)?,
            });
        }
    }
    Ok(ModelAssignment {
        n,
        q,
        containers,
        assignments,
    })
}

/// The model character evaluated on every conjugacy class (aligned with the
/// class list of the character table): the sum of the induced characters of
/// all assigned stabilizer characters.
pub fn model_character_values(
    assignments: &[Assignment],
    classes: &[ClassInfo],
    q: u32,
) -> Vec<CycInt> {
    let rows = crate::par::map_slice(assignments, |a| {
        classes
            .iter()
            .map(|c| induced_character_at(&a.chi, &c.rep))
            .collect::<Vec<CycInt>>()
    });
    let mut total = vec![CycInt::zero(q); classes.len()];
    for row in rows {
        for (t, v) in total.iter_mut().zip(row) {
            *t = t.add(&v);
        }
    }
    total
}

/// Multiplicity report: the exact inner product of the model character with
/// every irreducible.
pub struct ModelReport {
    pub n: usize,
    pub q: u32,
    /// Per irreducible (by table row): the multiplicity.
    pub multiplicities: Vec<ExactRational>,
    /// Rows whose multiplicity is not exactly 1.
    pub deviations: Vec<usize>,
    pub model_dimension: u128,
    pub sum_of_irreducible_dimensions: u128,
}

impl ModelReport {
    pub fn is_model(&self) -> bool {
        self.deviations.is_empty() && self.model_dimension == self.sum_of_irreducible_dimensions
    }
}

/// Decompose a class-function given by values on class representatives
/// against the irreducible table.
pub fn multiplicities_against_table(
    values: &[CycInt],
    table: &CharacterTable,
) -> Result<Vec<ExactRational>> {
    let idx: Vec<usize> = (0..table.irreps.len()).collect();
    let out = crate::par::map_slice(&idx, |&i| table.inner_with(values, i));
    out.into_iter().collect()
}

/// Build the model and verify multiplicity one against the full character
/// table.
pub fn verify_model(n: usize, q: u32, budget: &Budget) -> Result<ModelReport> {
    let table = crate::reps::character_table(n, q, budget)?;
    let assignment = assign_characters(n, q, budget)?;
    verify_model_with(&assignment.assignments, &table)
}

/// Same check against a caller-supplied assignment (used by the mutation
/// controls).
pub fn verify_model_with(
    assignments: &[Assignment],
    table: &CharacterTable,
) -> Result<ModelReport> {
    let values = model_character_values(assignments, &table.classes, table.q);
    let multiplicities = multiplicities_against_table(&values, table)?;
    let deviations: Vec<usize> = multiplicities
        .iter()
        .enumerate()
        .filter(|(_, m)| !m.is_one())
        .map(|(i, _)| i)
        .collect();
    let model_dimension = assignments
        .iter()
        .map(|a| qpow(table.q, a.chi.seq.i_minus().len() as u32))
        .sum();
    let sum_of_irreducible_dimensions = table.dims().iter().sum();
    Ok(ModelReport {
        n: table.n,
        q: table.q,
        multiplicities,
        deviations,
        model_dimension,
        sum_of_irreducible_dimensions,
    })
}
