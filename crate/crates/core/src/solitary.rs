//! Solitary subgroups: subgroups no *other* subgroup is isomorphic to.
//!
//! A subgroup `H <= G` is solitary when every `K <= G` with `K ≅ H` equals
//! `H`. Detection partitions the lattice nodes into isomorphism classes — a
//! cheap invariant fingerprint first, an explicit isomorphism search only
//! within equal-fingerprint buckets — and flags the singleton classes. The
//! trivial subgroup and the whole group sit in singleton order-buckets, so
//! they are solitary without any search.

use std::collections::BTreeMap;

use crate::bitset::ElementSet;
use crate::group::FiniteGroup;
use crate::lattice::{closure_idx, Subgroup, SubgroupLattice};

/// Cheap isomorphism invariants. Unequal fingerprints prove two groups
/// non-isomorphic; equal fingerprints decide nothing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IsoFingerprint {
    order: usize,
    /// `(element order, multiplicity)` pairs, ascending.
    element_orders: Vec<(usize, usize)>,
    abelian: bool,
    center_order: usize,
}

/// Computes the invariant fingerprint of `g`.
pub fn fingerprint(g: &FiniteGroup) -> IsoFingerprint {
    let n = g.order();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..n as u16 {
        *counts.entry(g.element_order_idx(i)).or_insert(0) += 1;
    }
    let mut center_order = 0usize;
    for a in 0..n as u16 {
        if (0..n as u16).all(|b| g.mul_idx(a, b) == g.mul_idx(b, a)) {
            center_order += 1;
        }
    }
    IsoFingerprint {
        order: n,
        element_orders: counts.into_iter().collect(),
        abelian: center_order == n,
        center_order,
    }
}

/// Partial map `a -> b` under construction, closed under multiplication.
#[derive(Clone)]
struct PartialIso {
    fwd: Vec<u16>,
    bwd: Vec<u16>,
    /// Indices of `a` with an image assigned, in assignment order.
    mapped: Vec<u16>,
}

const UNSET: u16 = u16::MAX;

impl PartialIso {
    fn new(n: usize) -> Self {
        PartialIso {
            fwd: vec![UNSET; n],
            bwd: vec![UNSET; n],
            mapped: Vec::with_capacity(n),
        }
    }

    /// Extends the map with `g -> t` and closes under products. Returns
    /// `false` on any homomorphism or injectivity conflict.
    fn assign(&mut self, a: &FiniteGroup, b: &FiniteGroup, g: u16, t: u16) -> bool {
        debug_assert!(self.fwd[g as usize] == UNSET && self.bwd[t as usize] == UNSET);
        self.fwd[g as usize] = t;
        self.bwd[t as usize] = g;
        self.mapped.push(g);
        let mut work = vec![g];
        while let Some(x) = work.pop() {
            let fx = self.fwd[x as usize];
            let mut i = 0;
            while i < self.mapped.len() {
                let y = self.mapped[i];
                let fy = self.fwd[y as usize];
                for (p, fp) in [
                    (a.mul_idx(x, y), b.mul_idx(fx, fy)),
                    (a.mul_idx(y, x), b.mul_idx(fy, fx)),
                ] {
                    let existing = self.fwd[p as usize];
                    if existing == UNSET {
                        if self.bwd[fp as usize] != UNSET {
                            return false; // two preimages for fp
                        }
                        self.fwd[p as usize] = fp;
                        self.bwd[fp as usize] = p;
                        self.mapped.push(p);
                        work.push(p);
                    } else if existing != fp {
                        return false; // product images disagree
                    }
                }
                i += 1;
            }
        }
        true
    }
}

/// Decides whether `a` and `b` are isomorphic groups.
///
/// After a fingerprint filter, searches for an isomorphism by assigning
/// images to a short greedy generating sequence of `a` (each generator
/// chosen outside the span of the previous ones, so there are at most
/// `log2 |a|` of them), extending every assignment to the generated span and
/// backtracking on conflicts.
pub fn are_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    if a.order() != b.order() {
        return false;
    }
    if fingerprint(a) != fingerprint(b) {
        return false;
    }
    let n = a.order();
    if n == 1 {
        return true;
    }
    let ord_a: Vec<usize> = (0..n as u16).map(|i| a.element_order_idx(i)).collect();
    let ord_b: Vec<usize> = (0..n as u16).map(|i| b.element_order_idx(i)).collect();

    let mut gens: Vec<u16> = Vec::new();
    let mut span = closure_idx(a, &gens);
    for i in 0..n as u16 {
        if span.len() == n {
            break;
        }
        if !span.contains(i as usize) {
            gens.push(i);
            span = closure_idx(a, &gens);
        }
    }

    let mut root = PartialIso::new(n);
    if !root.assign(a, b, a.identity_idx(), b.identity_idx()) {
        return false;
    }
    search(a, b, &ord_a, &ord_b, &gens, &root, 0)
}

fn search(
    a: &FiniteGroup,
    b: &FiniteGroup,
    ord_a: &[usize],
    ord_b: &[usize],
    gens: &[u16],
    state: &PartialIso,
    level: usize,
) -> bool {
    if level == gens.len() {
        debug_assert_eq!(state.mapped.len(), a.order());
        return true;
    }
    let g = gens[level];
    if state.fwd[g as usize] != UNSET {
        // an earlier extension already reached this generator
        return search(a, b, ord_a, ord_b, gens, state, level + 1);
    }
    let want = ord_a[g as usize];
    for t in 0..b.order() as u16 {
        if ord_b[t as usize] != want || state.bwd[t as usize] != UNSET {
            continue;
        }
        let mut next = state.clone();
        if next.assign(a, b, g, t) && search(a, b, ord_a, ord_b, gens, &next, level + 1) {
            return true;
        }
    }
    false
}

/// For each lattice node, whether that subgroup is solitary. Flags align
/// with the lattice's canonical node order.
pub fn solitary_flags(g: &FiniteGroup, lat: &SubgroupLattice) -> Vec<bool> {
    assert_eq!(lat.group_id(), g.id(), "lattice of a different group");
    let n = lat.len();
    let mut flags = vec![true; n];
    let mut by_order: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, node) in lat.nodes().iter().enumerate() {
        by_order.entry(node.order()).or_default().push(i);
    }
    for bucket in by_order.values().filter(|b| b.len() > 1) {
        let groups: Vec<FiniteGroup> = bucket.iter().map(|&i| lat.node(i).as_group(g)).collect();
        let prints: Vec<IsoFingerprint> = groups.iter().map(fingerprint).collect();

        // union-find over bucket positions
        let mut parent: Vec<usize> = (0..bucket.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for i in 0..bucket.len() {
            for j in 0..i {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj && prints[i] == prints[j] && are_isomorphic(&groups[i], &groups[j]) {
                    parent[ri] = rj;
                }
            }
        }
        let mut class_size: BTreeMap<usize, usize> = BTreeMap::new();
        for i in 0..bucket.len() {
            *class_size.entry(find(&mut parent, i)).or_insert(0) += 1;
        }
        for (pos, &node_idx) in bucket.iter().enumerate() {
            if class_size[&find(&mut parent, pos)] > 1 {
                flags[node_idx] = false;
            }
        }
    }
    flags
}

/// The solitary subgroups of `g`, in canonical lattice order.
pub fn solitary_subgroups(g: &FiniteGroup, lat: &SubgroupLattice) -> Vec<Subgroup> {
    let flags = solitary_flags(g, lat);
    lat.nodes()
        .iter()
        .zip(flags)
        .filter(|(_, f)| *f)
        .map(|(node, _)| node.clone())
        .collect()
}

/// Outcome of checking whether the solitary subgroups form a lattice under
/// inclusion (every pair has a greatest lower and least upper bound *within*
/// the solitary set).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolitaryLatticeReport {
    pub is_lattice: bool,
    /// Whenever a pair's greatest lower bound exists, it equals the plain
    /// intersection of the two subgroups.
    pub meets_are_intersections: bool,
}

/// Checks the lattice property of the solitary set given precomputed flags.
pub fn solitary_lattice_report(lat: &SubgroupLattice, flags: &[bool]) -> SolitaryLatticeReport {
    assert_eq!(flags.len(), lat.len());
    let n = lat.len();
    let mut sol_mask = ElementSet::empty(n);
    for (i, &f) in flags.iter().enumerate() {
        if f {
            sol_mask.insert(i);
        }
    }
    let sol: Vec<usize> = sol_mask.to_vec();
    let mut is_lattice = true;
    let mut meets_are_intersections = true;
    for (pos, &i) in sol.iter().enumerate() {
        for &j in &sol[..pos] {
            let lower = lat
                .below_set(i)
                .intersection(lat.below_set(j))
                .intersection(&sol_mask);
            match lower.iter().find(|&x| lower.is_subset(lat.below_set(x))) {
                Some(meet) => {
                    let plain = lat.node(i).members().intersection(lat.node(j).members());
                    if *lat.node(meet).members() != plain {
                        meets_are_intersections = false;
                    }
                }
                None => is_lattice = false,
            }
            let upper = lat
                .above_set(i)
                .intersection(lat.above_set(j))
                .intersection(&sol_mask);
            if !upper.iter().any(|x| upper.is_subset(lat.above_set(x))) {
                is_lattice = false;
            }
        }
    }
    SolitaryLatticeReport {
        is_lattice,
        meets_are_intersections,
    }
}

/// Do the solitary subgroups of this lattice form a lattice under inclusion?
pub fn check_solitary_lattice(lat: &SubgroupLattice, flags: &[bool]) -> bool {
    solitary_lattice_report(lat, flags).is_lattice
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::lattice::all_subgroups;

    fn solitary_orders(g: &FiniteGroup) -> Vec<usize> {
        let lat = all_subgroups(g).unwrap();
        solitary_subgroups(g, &lat)
            .iter()
            .map(|h| h.order())
            .collect()
    }

    #[test]
    fn fingerprint_separates_c4_from_klein() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let klein = FiniteGroup::direct_product(&c2, &c2).unwrap();
        assert_ne!(fingerprint(&c4), fingerprint(&klein));
        assert!(!are_isomorphic(&c4, &klein));
    }

    #[test]
    fn cyclic_groups_of_equal_order_are_isomorphic() {
        let c6 = FiniteGroup::cyclic(6).unwrap();
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let c2xc3 = FiniteGroup::direct_product(&c2, &c3).unwrap();
        assert!(are_isomorphic(&c6, &c2xc3));
        assert!(are_isomorphic(&c2xc3, &c6));
    }

    #[test]
    fn dihedral_vs_cyclic() {
        let d6 = FiniteGroup::dihedral(3).unwrap();
        let c6 = FiniteGroup::cyclic(6).unwrap();
        assert!(!are_isomorphic(&d6, &c6));
        let d6b = FiniteGroup::dihedral(3).unwrap();
        assert!(are_isomorphic(&d6, &d6b));
    }

    #[test]
    fn dihedral_vs_quaternion_of_order_8() {
        let d8 = FiniteGroup::dihedral(4).unwrap();
        let q8 = FiniteGroup::generalized_quaternion(3).unwrap();
        assert!(!are_isomorphic(&d8, &q8));
    }

    #[test]
    fn quaternion_order_4_subgroups_are_isomorphic() {
        let q8 = FiniteGroup::generalized_quaternion(3).unwrap();
        let lat = all_subgroups(&q8).unwrap();
        let fours: Vec<FiniteGroup> = lat
            .nodes()
            .iter()
            .filter(|h| h.order() == 4)
            .map(|h| h.as_group(&q8))
            .collect();
        assert_eq!(fours.len(), 3);
        assert!(are_isomorphic(&fours[0], &fours[1]));
        assert!(are_isomorphic(&fours[1], &fours[2]));
        assert!(are_isomorphic(&fours[0], &fours[2]));
    }

    #[test]
    fn isomorphism_is_symmetric_on_a_mixed_pool() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let pool = vec![
            FiniteGroup::cyclic(8).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::generalized_quaternion(3).unwrap(),
            FiniteGroup::direct_product(&c2, &FiniteGroup::cyclic(4).unwrap()).unwrap(),
        ];
        for x in &pool {
            for y in &pool {
                assert_eq!(are_isomorphic(x, y), are_isomorphic(y, x));
            }
        }
        // all four order-8 groups above are pairwise non-isomorphic
        for (i, x) in pool.iter().enumerate() {
            for (j, y) in pool.iter().enumerate() {
                assert_eq!(are_isomorphic(x, y), i == j);
            }
        }
    }

    #[test]
    fn solitary_sets_of_known_groups() {
        assert_eq!(solitary_orders(&FiniteGroup::dihedral(3).unwrap()), vec![1, 3, 6]);
        assert_eq!(
            solitary_orders(&FiniteGroup::generalized_quaternion(3).unwrap()),
            vec![1, 2, 8]
        );
        // cyclic: every subgroup is the unique one of its order
        assert_eq!(solitary_orders(&FiniteGroup::cyclic(12).unwrap()), vec![1, 2, 3, 4, 6, 12]);
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let klein = FiniteGroup::direct_product(&c2, &c2).unwrap();
        assert_eq!(solitary_orders(&klein), vec![1, 4]);
        // dihedral of order 8: only the cyclic order-4 subgroup survives
        assert_eq!(solitary_orders(&FiniteGroup::dihedral(4).unwrap()), vec![1, 4, 8]);
    }

    #[test]
    fn flags_align_with_nodes() {
        let q8 = FiniteGroup::generalized_quaternion(3).unwrap();
        let lat = all_subgroups(&q8).unwrap();
        let flags = solitary_flags(&q8, &lat);
        assert_eq!(flags.len(), lat.len());
        for (node, flag) in lat.nodes().iter().zip(&flags) {
            assert_eq!(*flag, matches!(node.order(), 1 | 2 | 8));
        }
    }

    #[test]
    fn solitary_lattice_property_on_small_groups() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        for g in [
            FiniteGroup::dihedral(3).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::generalized_quaternion(3).unwrap(),
            FiniteGroup::cyclic(12).unwrap(),
            FiniteGroup::direct_product(&c2, &c2).unwrap(),
        ] {
            let lat = all_subgroups(&g).unwrap();
            let flags = solitary_flags(&g, &lat);
            let report = solitary_lattice_report(&lat, &flags);
            assert!(report.is_lattice, "solitary set of {} is not a lattice", g.label());
            assert!(report.meets_are_intersections);
            assert!(check_solitary_lattice(&lat, &flags));
        }
    }
}
