//! Cyclotomic numbers `(a,b)_e`: the count of field elements `v` outside
//! `{0,-1}` whose index and the index of `v+1` land in prescribed residue
//! classes mod `e`.
//!
//! Three routes produce the same `e × e` table: a direct O(q) counting pass,
//! conversion from a Jacobi-sum matrix, and direct counting restricted to
//! symmetry-class representatives followed by orbit expansion.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cycint::CycRing;
use crate::error::Error;
use crate::field::{build_index_table, find_generator, FieldElement, FieldSpec, IndexTable};
use crate::jacobi::JacobiMatrix;
use crate::orbits::{enumerate_classes, select_case, Family, SymmetryCase};
use crate::Result;

/// A finite field together with a verified generator, the full index table,
/// and an order `e` dividing `q - 1`. This fixes the character
/// `χ_e(γ^t) = ζ_e^t` shared by both computation families.
#[derive(Debug, Clone)]
pub struct CharacterSetup {
    field: FieldSpec,
    e: u64,
    k: u64,
    index: IndexTable,
}

impl CharacterSetup {
    /// Build a setup, finding the least generator when none is supplied.
    /// Requires `e ≥ 2` and `e | q - 1`; a supplied element is verified to
    /// generate `F_q^*`.
    pub fn new(field: FieldSpec, e: u64, generator: Option<FieldElement>) -> Result<Self> {
        if e < 2 {
            return Err(Error::InvalidOrder { e });
        }
        if (field.q() - 1) % e != 0 {
            return Err(Error::OrderDoesNotDivide { e, q: field.q() });
        }
        let g = match generator {
            Some(g) => field.element(g.coeffs())?,
            None => find_generator(&field),
        };
        let index = build_index_table(&field, &g)?;
        let k = (field.q() - 1) / e;
        Ok(CharacterSetup { field, e, k, index })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    /// The cofactor `k` with `q = ek + 1`.
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn generator(&self) -> &FieldElement {
        self.index.generator()
    }

    pub fn index(&self) -> &IndexTable {
        &self.index
    }

    /// The rule regime this setup falls under.
    pub fn symmetry_case(&self) -> SymmetryCase {
        select_case(self.e, self.k, self.field.p())
            .expect("a valid setup always selects a rule regime")
    }
}

/// The `e × e` table of cyclotomic numbers, row `a`, column `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycNumMatrix {
    e: u64,
    entries: Vec<u64>,
}

impl CycNumMatrix {
    pub(crate) fn from_entries(e: u64, entries: Vec<u64>) -> Self {
        debug_assert_eq!(entries.len() as u64, e * e);
        CycNumMatrix { e, entries }
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn get(&self, a: u64, b: u64) -> u64 {
        self.entries[(a * self.e + b) as usize]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().sum()
    }
}

/// How much of a table was computed directly versus filled in by orbit
/// expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpansionStats {
    pub direct_entries: usize,
    pub expanded_entries: usize,
}

/// Count every `v ∉ {0,-1}` into its `(ind v mod e, ind(v+1) mod e)` cell in
/// one pass over the index table.
pub fn cyclotomic_direct(s: &CharacterSetup) -> CycNumMatrix {
    let f = s.field();
    let e = s.e();
    let q = f.q() as usize;
    let neg_one = f.encode(&f.minus_one());
    let index = s.index();
    let mut entries = vec![0u64; (e * e) as usize];
    for code in 0..q {
        if code == 0 || code == neg_one {
            continue;
        }
        let a = index.index_of_code(code).expect("nonzero element is indexed") as u64 % e;
        let b = index
            .index_of_code(f.succ_code(code))
            .expect("v+1 is nonzero when v != -1") as u64
            % e;
        entries[(a * e + b) as usize] += 1;
    }
    CycNumMatrix::from_entries(e, entries)
}

/// Direct counting restricted to class representatives, then orbit
/// expansion. Equals [`cyclotomic_direct`] entrywise; the saving is the
/// number of cells that ever need counting.
pub fn cyclotomic_via_reps_stats(s: &CharacterSetup) -> (CycNumMatrix, ExpansionStats) {
    let f = s.field();
    let e = s.e();
    let q = f.q() as usize;
    let case = s.symmetry_case();
    let classes = enumerate_classes(e, &case, Family::Cyclotomic, s.k());

    let mut is_rep = vec![false; (e * e) as usize];
    for class in &classes {
        let (a, b) = class.representative();
        is_rep[(a * e + b) as usize] = true;
    }

    let neg_one = f.encode(&f.minus_one());
    let index = s.index();
    let mut counted = vec![0u64; (e * e) as usize];
    for code in 0..q {
        if code == 0 || code == neg_one {
            continue;
        }
        let a = index.index_of_code(code).expect("nonzero element is indexed") as u64 % e;
        let b = index
            .index_of_code(f.succ_code(code))
            .expect("v+1 is nonzero when v != -1") as u64
            % e;
        let cell = (a * e + b) as usize;
        if is_rep[cell] {
            counted[cell] += 1;
        }
    }

    let mut entries = vec![0u64; (e * e) as usize];
    for class in &classes {
        let (ra, rb) = class.representative();
        let value = counted[(ra * e + rb) as usize];
        for &(a, b) in class.members() {
            entries[(a * e + b) as usize] = value;
        }
    }

    let stats = ExpansionStats {
        direct_entries: classes.len(),
        expanded_entries: (e * e) as usize - classes.len(),
    };
    (CycNumMatrix::from_entries(e, entries), stats)
}

pub fn cyclotomic_via_reps(s: &CharacterSetup) -> CycNumMatrix {
    cyclotomic_via_reps_stats(s).0
}

/// Invert a Jacobi matrix into cyclotomic numbers: for each `(a,b)`,
/// accumulate `Σ_{i,j} ζ^{-(ai+bj)} J(i,j)` in `Z[ζ_e]`, require it to be a
/// rational integer, non-negative and divisible by `e²`, and divide. The
/// final table must sum to `q - 2`. Failures mean the input matrix is
/// inconsistent and are reported, never clamped.
pub fn cyclotomic_from_jacobi(jm: &JacobiMatrix, s: &CharacterSetup) -> Result<CycNumMatrix> {
    let e = s.e();
    if jm.e() != e {
        return Err(Error::OrderMismatch { left: jm.e(), right: e });
    }
    let ring = CycRing::new(e);
    let e_sq = BigInt::from(e * e);
    let mut entries = vec![0u64; (e * e) as usize];
    for a in 0..e {
        for b in 0..e {
            let mut acc = ring.zero();
            for i in 0..e {
                for j in 0..e {
                    let m = (e * e - (a * i + b * j) % e) % e; // -(ai+bj) mod e
                    let term = ring.mul(&ring.zeta_pow(m), jm.get(i, j))?;
                    acc = ring.add(&acc, &term)?;
                }
            }
            let n = acc
                .as_integer()
                .map_err(|_| Error::NonIntegerAccumulation { a, b })?;
            if !(&n % &e_sq).is_zero() {
                return Err(Error::NotDivisibleByOrderSquared { a, b });
            }
            if n.is_negative() {
                return Err(Error::NegativeEntry { a, b });
            }
            let value: u64 = (&n / &e_sq)
                .try_into()
                .map_err(|_| Error::NegativeEntry { a, b })?;
            entries[(a * e + b) as usize] = value;
        }
    }
    let matrix = CycNumMatrix::from_entries(e, entries);
    if matrix.sum() != s.field().q() - 2 {
        return Err(Error::CensusMismatch { expected: s.field().q() - 2 });
    }
    Ok(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jacobi::jacobi_all_direct;

    fn setup(p: u64, r: u32, e: u64, gen: Option<&[u64]>) -> CharacterSetup {
        let f = FieldSpec::build(p, r, None).unwrap();
        let g = gen.map(|c| f.element(c).unwrap());
        CharacterSetup::new(f, e, g).unwrap()
    }

    #[test]
    fn setup_examples() {
        let s = setup(7, 1, 3, Some(&[3]));
        assert_eq!(s.k(), 2);

        let f7 = FieldSpec::build(7, 1, None).unwrap();
        assert_eq!(
            CharacterSetup::new(f7, 4, None).unwrap_err(),
            Error::OrderDoesNotDivide { e: 4, q: 7 }
        );

        let s5 = setup(5, 1, 2, None);
        assert_eq!(s5.k(), 2);
        assert_eq!(s5.generator().coeffs(), &[2]);
    }

    #[test]
    fn setup_rejects_non_generator() {
        let f = FieldSpec::build(7, 1, None).unwrap();
        let two = f.element(&[2]).unwrap();
        assert_eq!(
            CharacterSetup::new(f, 3, Some(two)).unwrap_err(),
            Error::NotAGenerator
        );
    }

    #[test]
    fn golden_matrix_q7() {
        let s = setup(7, 1, 3, Some(&[3]));
        let m = cyclotomic_direct(&s);
        assert_eq!(m.entries(), &[0, 0, 1, 0, 1, 1, 1, 1, 0]);
        assert_eq!(m.sum(), 5);
    }

    #[test]
    fn matrix_q5_e2() {
        let s = setup(5, 1, 2, None);
        let m = cyclotomic_direct(&s);
        assert_eq!(m.get(0, 0), 0);
        assert_eq!(m.get(0, 1), 1);
        assert_eq!(m.get(1, 0), 1);
        assert_eq!(m.get(1, 1), 1);
    }

    #[test]
    fn census_totals() {
        for (p, r, e) in [(7, 1, 3), (13, 1, 4), (3, 2, 8), (2, 4, 5)] {
            let s = setup(p, r, e, None);
            assert_eq!(cyclotomic_direct(&s).sum(), s.field().q() - 2);
        }
    }

    #[test]
    fn reps_route_matches_direct() {
        for (p, r, e) in [(7, 1, 3), (13, 1, 4), (2, 2, 3), (3, 2, 8), (13, 1, 12)] {
            let s = setup(p, r, e, None);
            let direct = cyclotomic_direct(&s);
            let (via_reps, stats) = cyclotomic_via_reps_stats(&s);
            assert_eq!(direct, via_reps, "p={p} r={r} e={e}");
            assert_eq!(
                stats.direct_entries + stats.expanded_entries,
                (e * e) as usize
            );
            assert_eq!(stats.direct_entries as u64, crate::orbits::class_count(e));
        }
    }

    #[test]
    fn golden_reps_stats_q7() {
        let s = setup(7, 1, 3, Some(&[3]));
        let (_, stats) = cyclotomic_via_reps_stats(&s);
        assert_eq!(stats.direct_entries, 4);
        assert_eq!(stats.expanded_entries, 5);
    }

    #[test]
    fn from_jacobi_golden() {
        let s = setup(7, 1, 3, Some(&[3]));
        let jm = jacobi_all_direct(&s);
        let m = cyclotomic_from_jacobi(&jm, &s).unwrap();
        // the nine values recovered through e²(a,b)_e
        assert_eq!(m.entries(), &[0, 0, 1, 0, 1, 1, 1, 1, 0]);
    }

    #[test]
    fn inverse_relation_accumulation_is_nine_at_02() {
        // For the q=7 golden setup the accumulation Σ ζ^{-(0i+2j)} J(i,j)
        // must come out as the rational integer 9 = e²·(0,2)_3.
        let s = setup(7, 1, 3, Some(&[3]));
        let jm = jacobi_all_direct(&s);
        let ring = CycRing::new(3);
        let (a, b) = (0u64, 2u64);
        let mut acc = ring.zero();
        for i in 0..3 {
            for j in 0..3 {
                let m = (9 - (a * i + b * j) % 3) % 3;
                let term = ring.mul(&ring.zeta_pow(m), jm.get(i, j)).unwrap();
                acc = ring.add(&acc, &term).unwrap();
            }
        }
        assert_eq!(acc.as_integer().unwrap(), BigInt::from(9));
    }

    #[test]
    fn from_jacobi_rejects_perturbed_input() {
        let s = setup(7, 1, 3, Some(&[3]));
        let mut jm = jacobi_all_direct(&s);
        jm.perturb_for_test(1, 2, 1);
        let err = cyclotomic_from_jacobi(&jm, &s).unwrap_err();
        assert!(
            matches!(
                err,
                Error::NotDivisibleByOrderSquared { .. } | Error::NonIntegerAccumulation { .. }
            ),
            "got {err:?}"
        );
    }

    #[test]
    fn orbit_constancy() {
        for (p, r, e) in [(7u64, 1u32, 3u64), (13, 1, 4), (5, 1, 4), (3, 2, 8)] {
            let s = setup(p, r, e, None);
            let m = cyclotomic_direct(&s);
            let case = s.symmetry_case();
            let classes = enumerate_classes(e, &case, Family::Cyclotomic, s.k());
            for class in classes {
                let (ra, rb) = class.representative();
                for &(a, b) in class.members() {
                    assert_eq!(
                        m.get(a, b),
                        m.get(ra, rb),
                        "p={p} e={e} orbit of {:?}",
                        class.representative()
                    );
                }
            }
        }
    }
}
