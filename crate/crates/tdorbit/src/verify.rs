//! Verification suites: every check is an exact integer or exact-rational
//! identity. The CLI `verify` subcommand runs these for one `(n, q)`; the
//! acceptance tests sweep them over the full desk-scale grid.

use crate::classes::{conjugacy_classes, count_classes_by_strings, count_classes_recursive};
use crate::cyclo::CycInt;
use crate::group::{enumerate_group, group_order};
use crate::model::{assign_characters, induced_character_at, verify_model_with, StabCharacter};
use crate::oracle::{brute_coadjoint_orbits, brute_conjugacy_classes, brute_induce};
use crate::orbits::{census_by_dimension, count_by_dimension};
use crate::partitions::{
    all_compositions, container_of_flock, count_all_odd, count_ones_twos, fibonacci, flocks,
    has_type, q_even, q_odd, sparse_sequences, FlockType,
};
use crate::reps::{character_table, completeness_check, irreducible_character_at, rep_matrix};
use crate::{qpow, Budget, Result};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checks: Vec::new(),
        }
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, details: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            details: details.into(),
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Deterministic pseudo-random stream for sampled checks.
pub(crate) struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed)
    }

    pub fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

/// Orbit counting: closed form vs descriptor census vs brute-force closure,
/// and the orbit/class count agreement.
pub fn orbits_suite(n: usize, q: u32, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("orbits");
    let census = census_by_dimension(n, q);
    let mut closed = Vec::with_capacity(census.len());
    for k in 0..=n / 2 {
        closed.push(count_by_dimension(n, q, k)?);
    }
    report.push(
        format!("closed-form orbit counts match descriptor census (n={n}, q={q})"),
        closed == census,
        format!("census by dimension: {census:?}"),
    );

    let mut brute = brute_coadjoint_orbits(n, q, budget)?;
    let sizes = brute.block_sizes();
    let mut brute_by_dim = vec![0u128; n / 2 + 1];
    let mut pow_ok = true;
    for s in &sizes {
        let mut k = 0u32;
        let mut v = *s;
        while v > 1 {
            pow_ok &= v % q as usize == 0;
            v /= q as usize;
            k += 1;
        }
        // orbit of size q^(2k) has dimension 2k
        if k % 2 != 0 {
            pow_ok = false;
        } else {
            brute_by_dim[(k / 2) as usize] += 1;
        }
    }
    report.push(
        format!("brute orbit census agrees per dimension (n={n}, q={q})"),
        pow_ok && brute_by_dim == census,
        format!("brute: {brute_by_dim:?}"),
    );

    // descriptor equality must induce exactly the brute-force orbit partition
    let ids = brute.block_ids();
    let mut desc_to_block: std::collections::HashMap<Vec<u32>, usize> =
        std::collections::HashMap::new();
    let mut block_to_desc: std::collections::HashMap<usize, Vec<u32>> =
        std::collections::HashMap::new();
    let mut partition_ok = true;
    for (i, &block) in ids.iter().enumerate() {
        let d = crate::orbits::classify(&crate::liealg::CoadjointPoint::from_index(i, n, q));
        let mut key: Vec<u32> = d.y.iter().map(|e| e.value()).collect();
        key.extend(
            d.odd_invariants
                .iter()
                .flat_map(|(r, v)| [*r as u32, v.value()]),
        );
        partition_ok &= *desc_to_block.entry(key.clone()).or_insert(block) == block;
        partition_ok &= *block_to_desc.entry(block).or_insert(key.clone()) == key;
    }
    report.push(
        format!("descriptors induce exactly the brute orbit partition (n={n}, q={q})"),
        partition_ok,
        format!("{} labels", desc_to_block.len()),
    );

    let classes = brute_conjugacy_classes(n, q, budget)?;
    report.push(
        format!("total orbit count equals total class count (n={n}, q={q})"),
        brute.block_count() == classes.block_count(),
        format!(
            "{} orbits, {} classes",
            brute.block_count(),
            classes.block_count()
        ),
    );
    Ok(report)
}

/// Class counting: recursion vs dot-string sum vs structural enumeration vs
/// brute conjugation closure.
pub fn classes_suite(n: usize, q: u32, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("classes");
    let strings = count_classes_by_strings(n, q, budget)?;
    if n >= 2 {
        let rec = count_classes_recursive(n, q);
        report.push(
            format!("recursion equals dot-string sum (n={n}, q={q})"),
            rec == strings,
            format!("totals: {:?}", strings.totals()),
        );
    }
    report.push(
        format!("no zero-dimensional class has a_1 != 0 (n={n}, q={q})"),
        n < 2 || strings.heavy[0] == 0,
        String::new(),
    );

    let structural = conjugacy_classes(n, q, budget)?;
    report.push(
        format!("string totals equal structural class count (n={n}, q={q})"),
        strings.grand_total() == structural.len() as u128,
        format!("{} classes", structural.len()),
    );

    let brute = brute_conjugacy_classes(n, q, budget)?;
    report.push(
        format!("structural class count equals brute closure (n={n}, q={q})"),
        structural.len() == brute.block_count(),
        String::new(),
    );

    if n == 3 {
        let q128 = q as u128;
        let expected_light = vec![q128 * q128, q128 * (q128 - 1), q128 * (q128 - 1)];
        let expected_heavy = vec![0, q128 * q128 * (q128 - 1), q128 * (q128 - 1) * (q128 - 1)];
        report.push(
            format!("worked n=3 table reproduced (q={q})"),
            strings.light == expected_light && strings.heavy == expected_heavy,
            format!("light {:?}, heavy {:?}", strings.light, strings.heavy),
        );
    }
    Ok(report)
}

/// Characters: trace agreement, orthonormality, the completeness identity,
/// and the homomorphism property.
pub fn chars_suite(n: usize, q: u32, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("chars");
    let table = character_table(n, q, budget)?;
    let order = group_order(n, q);

    let all = enumerate_group(n, q, budget)?;
    let trace_ok = table.irreps.iter().all(|d| {
        all.iter()
            .all(|g| rep_matrix(d, g).trace() == irreducible_character_at(d, g))
    });
    report.push(
        format!("closed-form character equals matrix trace everywhere (n={n}, q={q})"),
        trace_ok,
        format!(
            "{} irreducibles x {} elements",
            table.irreps.len(),
            all.len()
        ),
    );

    let mut ortho_ok = true;
    for i in 0..table.irreps.len() {
        for j in i..table.irreps.len() {
            let ip = table.inner(i, j)?;
            ortho_ok &= if i == j { ip.is_one() } else { ip.is_zero() };
        }
    }
    report.push(
        format!("characters are exactly orthonormal (n={n}, q={q})"),
        ortho_ok,
        format!("{} rows", table.irreps.len()),
    );

    let sum_sq: u128 = table.dims().iter().map(|d| d * d).sum();
    let completeness = completeness_check(n, q);
    report.push(
        format!("sum of squared dimensions is the group order (n={n}, q={q})"),
        sum_sq == order && completeness.identity_holds && completeness.recurrence_holds,
        format!("{sum_sq} = {order}"),
    );

    // homomorphism: exhaustive when the group is tiny, sampled otherwise
    let mut hom_ok = true;
    if all.len() <= 32 {
        for d in &table.irreps {
            let mats: Vec<_> = all.iter().map(|g| rep_matrix(d, g)).collect();
            for (i, a) in all.iter().enumerate() {
                for (j, b) in all.iter().enumerate() {
                    hom_ok &= mats[i].mul(&mats[j]) == rep_matrix(d, &a.mul(b));
                }
            }
        }
        report.push(
            format!("matrices are homomorphisms, exhaustive (n={n}, q={q})"),
            hom_ok,
            format!("{} pairs per irreducible", all.len() * all.len()),
        );
    } else {
        let mut rng = Lcg::new(0x7d0_c0ffee ^ (n as u64) << 8 ^ q as u64);
        let pairs = 10_000;
        for _ in 0..pairs {
            let d = &table.irreps[rng.below(table.irreps.len())];
            let a = &all[rng.below(all.len())];
            let b = &all[rng.below(all.len())];
            hom_ok &= rep_matrix(d, a).mul(&rep_matrix(d, b)) == rep_matrix(d, &a.mul(b));
        }
        report.push(
            format!("matrices are homomorphisms, {pairs} sampled pairs (n={n}, q={q})"),
            hom_ok,
            String::new(),
        );
    }
    Ok(report)
}

/// The composition / flock / container combinatorics for one `n`.
pub fn combinatorics_suite(n: usize) -> SuiteReport {
    let mut report = SuiteReport::new("combinatorics");
    let all = all_compositions(n);
    report.push(
        format!("2^(n-1) compositions (n={n})"),
        all.len() as u128 == 1u128 << (n - 1),
        format!("{}", all.len()),
    );

    let ce = all.iter().filter(|p| has_type(p, FlockType::Even)).count() as u128;
    let co = all.iter().filter(|p| has_type(p, FlockType::Odd)).count() as u128;
    report.push(
        format!("type counts match closed forms (n={n})"),
        ce == q_even(n) && co == q_odd(n) && ce + co == (1u128 << (n - 1)) + 1,
        format!("even {ce}, odd {co}"),
    );

    let ones_twos = all
        .iter()
        .filter(|p| p.parts().iter().all(|&x| x <= 2))
        .count() as u128;
    let all_odd = all
        .iter()
        .filter(|p| p.parts().iter().all(|&x| x % 2 == 1))
        .count() as u128;
    report.push(
        format!("Fibonacci composition families (n={n})"),
        ones_twos == count_ones_twos(n) && all_odd == count_all_odd(n),
        format!("1s/2s: {ones_twos} = F_(n+1), odd parts: {all_odd} = F_n"),
    );

    let sparse = sparse_sequences(n);
    report.push(
        format!("sparse sequences counted by F_(n+2) (n={n})"),
        sparse.len() as u128 == fibonacci(n + 2),
        format!("{}", sparse.len()),
    );

    let mut flocks_ok = true;
    let mut containers_ok = true;
    let mut seen_containers = Vec::new();
    for ty in [FlockType::Odd, FlockType::Even] {
        let fs = flocks(n, ty);
        let mut covered = 0usize;
        for f in &fs {
            flocks_ok &= f.members().len() == 1 << f.k().saturating_sub(1);
            flocks_ok &= f.members().iter().all(|m| m.nu() == f.head.nu());
            covered += f.members().len();
            seen_containers.push(container_of_flock(f));
        }
        let type_total = all.iter().filter(|p| has_type(p, ty)).count();
        flocks_ok &= covered == type_total;
        let expected = match ty {
            FlockType::Odd => count_all_odd(n),
            FlockType::Even => count_ones_twos(n),
        };
        flocks_ok &= fs.len() as u128 == expected;
    }
    seen_containers.sort();
    let dedup_len = {
        let mut s = seen_containers.clone();
        s.dedup();
        s.len()
    };
    containers_ok &= dedup_len == seen_containers.len();
    containers_ok &= seen_containers.len() as u128 == fibonacci(n + 2);
    report.push(
        format!("flocks partition each type with sizes 2^(k-1) (n={n})"),
        flocks_ok,
        String::new(),
    );
    report.push(
        format!("flock-to-container map is a bijection (n={n})"),
        containers_ok,
        format!("{} containers", dedup_len),
    );
    report
}

/// The model: container cardinalities, induced characters against brute
/// Frobenius induction, exact multiplicity one, and the negative controls.
pub fn model_suite(n: usize, q: u32, budget: &Budget) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("model");
    let assignment = assign_characters(n, q, budget)?;

    let mut card_ok = true;
    let mut details = String::new();
    for cont in &assignment.containers {
        let i = cont.seq.len() as u32;
        let expected_classes = qpow(q - 1, i) * qpow(q, (cont.i_plus.len() - 1) as u32);
        let expected_size = qpow(q, cont.i_minus.len() as u32);
        card_ok &= cont.classes.len() as u128 == expected_classes;
        card_ok &= cont.classes.iter().all(|c| c.size as u128 == expected_size);
        card_ok &= cont
            .classes
            .iter()
            .all(|c| c.b_invariants.len() == cont.i_plus.len() - 1);
        card_ok &= cont.stabilizer_order(q) == qpow(q, (n - 1 + cont.i_plus.len()) as u32);
        if !card_ok && details.is_empty() {
            details = format!("first failure at container {:?}", cont.seq);
        }
    }
    report.push(
        format!("container cardinalities (n={n}, q={q})"),
        card_ok,
        details,
    );

    // stabilizer order by direct count over alpha patterns
    let mut stab_ok = true;
    let alpha_patterns = qpow(q, n as u32) as usize;
    for cont in &assignment.containers {
        let mut count = 0u128;
        for idx in 0..alpha_patterns {
            let g = crate::group::GroupElement::from_index(
                idx * qpow(q, (n - 1) as u32) as usize,
                n,
                q,
            );
            if cont.in_stabilizer(&g) {
                count += 1;
            }
        }
        stab_ok &= count * qpow(q, (n - 1) as u32) == cont.stabilizer_order(q);
    }
    report.push(
        format!("stabilizer orders by direct count (n={n}, q={q})"),
        stab_ok,
        String::new(),
    );

    let table = character_table(n, q, budget)?;
    let model_report = verify_model_with(&assignment.assignments, &table)?;
    report.push(
        format!("every irreducible appears exactly once (n={n}, q={q})"),
        model_report.is_model(),
        format!(
            "model dim {} = sum of irreducible dims {}; deviations {:?}",
            model_report.model_dimension,
            model_report.sum_of_irreducible_dimensions,
            model_report.deviations
        ),
    );

    // closed-form induction against the raw Frobenius sum on sampled
    // stabilizer characters (feasible only at small orders)
    if group_order(n, q) <= 512 {
        let all = enumerate_group(n, q, budget)?;
        let mut frob_ok = true;
        let mut rng = Lcg::new(0xfeed ^ (n as u64) << 16 ^ q as u64);
        for cont in &assignment.containers {
            let mut chis: Vec<StabCharacter> = assignment
                .assignments
                .iter()
                .filter(|a| assignment.containers[a.container].seq == cont.seq)
                .map(|a| a.chi.clone())
                .take(2)
                .collect();
            // one synthetic character per container as well
            if let Some(first) = chis.first() {
                let mut a_coeffs = first.a_coeffs.clone();
                let mut b_coeffs = first.b_coeffs.clone();
                for v in a_coeffs.iter_mut().chain(b_coeffs.iter_mut()) {
                    if !v.is_zero() {
                        *v =
                            crate::fq::FieldElement::new(1 + rng.below((q - 1) as usize) as u32, q);
                    }
                }
                if let Ok(chi) = StabCharacter::new(cont.seq.clone(), a_coeffs, b_coeffs) {
                    chis.push(chi);
                }
            }
            for chi in &chis {
                let brute = brute_induce(
                    n,
                    q,
                    |t: &crate::group::GroupElement| cont.in_stabilizer(t),
                    |t: &crate::group::GroupElement| chi.eval(t),
                    budget,
                )?;
                for (g, expected) in all.iter().zip(&brute) {
                    frob_ok &= induced_character_at(chi, g) == *expected;
                }
            }
        }
        report.push(
            format!("closed-form induction equals brute Frobenius (n={n}, q={q})"),
            frob_ok,
            String::new(),
        );
    }

    // negative control: a wrong character assignment must break the model
    let mut mutated = assignment.assignments.clone();
    if let Some(idx) = mutated.iter().position(|a| !a.chi.seq.is_empty()) {
        let seq = mutated[idx].chi.seq.clone();
        mutated[idx].chi = StabCharacter::trivial(seq, q);
        let broken = verify_model_with(&mutated, &table)?;
        report.push(
            format!("mutated assignment breaks multiplicity one (n={n}, q={q})"),
            !broken.is_model(),
            format!("deviations {:?}", broken.deviations),
        );
    }

    // negative control: invalid stabilizer characters are rejected
    let invalid = assignment
        .containers
        .iter()
        .find(|c| !c.i_minus.is_empty())
        .map(|cont| {
            let mut a_coeffs = vec![crate::fq::FieldElement::zero(q); n];
            a_coeffs[cont.i_minus[0] - 1] = crate::fq::FieldElement::one(q);
            StabCharacter::new(
                cont.seq.clone(),
                a_coeffs,
                vec![crate::fq::FieldElement::zero(q); n - 1],
            )
        });
    if let Some(res) = invalid {
        report.push(
            format!("invalid stabilizer character is rejected (n={n}, q={q})"),
            matches!(res, Err(crate::Error::InvalidStabCharacter(_))),
            String::new(),
        );
    }
    Ok(report)
}

/// Model character values summed against every irreducible; exposed for the
/// CLI multiplicity listing.
pub fn model_values_for_cli(
    n: usize,
    q: u32,
    budget: &Budget,
) -> Result<(
    crate::reps::CharacterTable,
    Vec<CycInt>,
    crate::model::ModelAssignment,
)> {
    let table = character_table(n, q, budget)?;
    let assignment = assign_characters(n, q, budget)?;
    let values = crate::model::model_character_values(&assignment.assignments, &table.classes, q);
    Ok((table, values, assignment))
}

/// Run the named suite(s) for one `(n, q)`.
pub fn run_suite(suite: &str, n: usize, q: u32, budget: &Budget) -> Result<Vec<SuiteReport>> {
    let mut reports = Vec::new();
    match suite {
        "orbits" => reports.push(orbits_suite(n, q, budget)?),
        "classes" => reports.push(classes_suite(n, q, budget)?),
        "chars" => reports.push(chars_suite(n, q, budget)?),
        "combinatorics" => reports.push(combinatorics_suite(n)),
        "model" => reports.push(model_suite(n, q, budget)?),
        "all" => {
            reports.push(orbits_suite(n, q, budget)?);
            reports.push(classes_suite(n, q, budget)?);
            reports.push(chars_suite(n, q, budget)?);
            reports.push(combinatorics_suite(n));
            reports.push(model_suite(n, q, budget)?);
        }
        other => {
            return Err(crate::Error::OutOfRange(format!("unknown suite {other}")));
        }
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_n3_q2() {
        let budget = Budget::default();
        for r in run_suite("all", 3, 2, &budget).unwrap() {
            for c in &r.checks {
                assert!(c.passed, "{}: {}", c.name, c.details);
            }
        }
    }

    #[test]
    fn unknown_suite_rejected() {
        assert!(run_suite("nope", 2, 2, &Budget::default()).is_err());
    }
}
