//! The dense-solitary-subgroups property.
//!
//! A group `G` has *dense* solitary subgroups when for every pair of
//! subgroups `H < K` with `H` not maximal in `K` there is a solitary
//! subgroup strictly between them. Maximal inclusions are exempt: their open
//! interval is empty, so nothing could possibly interpolate.

use crate::bitset::ElementSet;
use crate::group::FiniteGroup;
use crate::lattice::{all_subgroups_with_cap, Subgroup, SubgroupLattice};
use crate::solitary::solitary_flags;
use crate::{LatticeError, DEFAULT_ORDER_CAP};

/// Outcome of the density check.
#[derive(Debug, Clone)]
pub struct DensityReport {
    pub verdict: bool,
    /// For a false verdict, the first failing pair `(H, K)` in scan order:
    /// `K` ascending over canonical lattice indices, `H` ascending within.
    pub counterexample: Option<(Subgroup, Subgroup)>,
    /// Number of non-maximal strict pairs examined (up to and including the
    /// failing pair, when one exists).
    pub checked_pairs: usize,
}

/// Decides density from a precomputed lattice and solitary flags.
pub fn density_from_parts(lat: &SubgroupLattice, flags: &[bool]) -> DensityReport {
    assert_eq!(flags.len(), lat.len(), "flags misaligned with lattice");
    let n = lat.len();
    let mut sol_mask = ElementSet::empty(n);
    for (i, &f) in flags.iter().enumerate() {
        if f {
            sol_mask.insert(i);
        }
    }
    let mut checked = 0usize;
    for k in 0..n {
        for h in 0..n {
            if h == k || !lat.leq(h, k) {
                continue;
            }
            let between = lat.open_interval_set(h, k);
            if between.is_empty() {
                continue; // maximal inclusion, exempt
            }
            checked += 1;
            if between.intersection(&sol_mask).is_empty() {
                return DensityReport {
                    verdict: false,
                    counterexample: Some((lat.node(h).clone(), lat.node(k).clone())),
                    checked_pairs: checked,
                };
            }
        }
    }
    DensityReport {
        verdict: true,
        counterexample: None,
        checked_pairs: checked,
    }
}

/// Decides whether `g` has dense solitary subgroups, computing the lattice
/// and solitary set on the way. Respects [`DEFAULT_ORDER_CAP`].
pub fn has_dense_solitary(g: &FiniteGroup) -> Result<DensityReport, LatticeError> {
    has_dense_solitary_with_cap(g, DEFAULT_ORDER_CAP)
}

/// [`has_dense_solitary`] with an explicit order cap.
pub fn has_dense_solitary_with_cap(
    g: &FiniteGroup,
    cap: usize,
) -> Result<DensityReport, LatticeError> {
    let lat = all_subgroups_with_cap(g, cap)?;
    let flags = solitary_flags(g, &lat);
    Ok(density_from_parts(&lat, &flags))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    #[test]
    fn cyclic_groups_are_dense() {
        for n in [1, 2, 6, 12, 30, 128] {
            let g = FiniteGroup::cyclic(n).unwrap();
            let report = has_dense_solitary(&g).unwrap();
            assert!(report.verdict, "C{n} must be dense");
            assert!(report.counterexample.is_none());
        }
    }

    #[test]
    fn smallest_dihedral_is_dense() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        let report = has_dense_solitary(&d6).unwrap();
        assert!(report.verdict);
        // only one non-maximal strict pair exists: trivial < whole
        assert_eq!(report.checked_pairs, 1);
    }

    #[test]
    fn quaternion_of_order_8_fails_between_center_and_top() {
        let q8 = FiniteGroup::generalized_quaternion(3).unwrap();
        let report = has_dense_solitary(&q8).unwrap();
        assert!(!report.verdict);
        let (h, k) = report.counterexample.expect("false verdict carries a witness");
        assert_eq!(h.order(), 2);
        assert_eq!(k.order(), 8);
        assert!(h.is_subset_of(&k));
        assert_eq!(h.check_in(&q8), Ok(()));
        assert_eq!(k.check_in(&q8), Ok(()));
        assert_eq!(report.checked_pairs, 5);
    }

    #[test]
    fn klein_four_group_fails_at_the_bottom() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let klein = FiniteGroup::direct_product(&c2, &c2).unwrap();
        let report = has_dense_solitary(&klein).unwrap();
        assert!(!report.verdict);
        let (h, k) = report.counterexample.unwrap();
        assert_eq!((h.order(), k.order()), (1, 4));
    }

    #[test]
    fn larger_quaternion_and_dihedral_groups_fail() {
        for g in [
            FiniteGroup::generalized_quaternion(4).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::dihedral(8).unwrap(),
        ] {
            assert!(!has_dense_solitary(&g).unwrap().verdict, "{} must fail", g.label());
        }
    }

    #[test]
    fn cap_is_respected() {
        let g = FiniteGroup::cyclic(64).unwrap();
        assert!(matches!(
            has_dense_solitary_with_cap(&g, 32),
            Err(LatticeError::OrderCapExceeded { order: 64, cap: 32 })
        ));
    }
}
