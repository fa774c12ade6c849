//! Complete subgroup lattices of small finite groups.
//!
//! [`all_subgroups`] enumerates every subgroup by seeding with the cyclic
//! subgroups and closing under pairwise joins, then freezes the result into a
//! [`SubgroupLattice`]: nodes in a canonical order (ascending subgroup order,
//! ties broken lexicographically by member list) plus packed containment and
//! cover relations. The canonical order makes every report deterministic and
//! independent of discovery order.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::bitset::ElementSet;
use crate::group::{FiniteGroup, GroupElement, GroupId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("group order {order} exceeds the lattice cap of {cap} elements")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("subgroup does not belong to this lattice's group")]
    ForeignSubgroup,
    #[error("the first subgroup is not contained in the second")]
    NotComparable,
    #[error("expected strict containment between distinct subgroups")]
    NotProper,
}

/// A subgroup of one fixed [`FiniteGroup`], stored as its member set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subgroup {
    // Field order matters: derived comparisons sort by order first, then by
    // the lexicographic member list, giving the crate-wide canonical order.
    order: usize,
    members: ElementSet,
    group: GroupId,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(order {}, {:?})", self.order, self.members)
    }
}

impl Subgroup {
    pub(crate) fn from_parts(g: &FiniteGroup, members: ElementSet) -> Subgroup {
        debug_assert_eq!(members.universe(), g.order());
        Subgroup {
            order: members.len(),
            members,
            group: g.id(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    /// Member element indices, ascending.
    pub fn member_indices(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn group_id(&self) -> GroupId {
        self.group
    }

    pub fn contains(&self, e: GroupElement) -> bool {
        e.group_id() == self.group && self.members.contains(e.index())
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        assert_eq!(self.group, other.group, "subgroups of different groups");
        self.members.is_subset(&other.members)
    }

    /// Realizes this subgroup as a standalone group with elements re-indexed
    /// by rank in the member list. Panics if `g` is not the parent group.
    pub fn as_group(&self, g: &FiniteGroup) -> FiniteGroup {
        assert_eq!(self.group, g.id(), "subgroup belongs to a different group");
        g.restriction(&self.members)
    }

    /// Verifies that this value really is a subgroup of `g`: right universe,
    /// contains the identity, closed under products and inverses.
    pub fn check_in(&self, g: &FiniteGroup) -> Result<(), &'static str> {
        if self.group != g.id() {
            return Err("subgroup belongs to a different group");
        }
        if self.members.universe() != g.order() || self.order != self.members.len() {
            return Err("member set is inconsistent");
        }
        if !self.members.contains(g.identity().index()) {
            return Err("missing the identity");
        }
        let elems = self.members.to_vec();
        for &a in &elems {
            if !self.members.contains(g.inv_idx(a as u16) as usize) {
                return Err("not closed under inverses");
            }
            for &b in &elems {
                if !self.members.contains(g.mul_idx(a as u16, b as u16) as usize) {
                    return Err("not closed under products");
                }
            }
        }
        Ok(())
    }
}

/// Closure of `gens` under multiplication, starting from the identity.
/// Finiteness makes the result closed under inverses as well.
pub(crate) fn closure_idx(g: &FiniteGroup, gens: &[u16]) -> ElementSet {
    let mut set = ElementSet::empty(g.order());
    let identity = g.identity_idx();
    set.insert(identity as usize);
    let mut stack = vec![identity];
    while let Some(x) = stack.pop() {
        for &gen in gens {
            let y = g.mul_idx(x, gen);
            if set.insert(y as usize) {
                stack.push(y);
            }
        }
    }
    set
}

/// The subgroup generated by `gens`; empty `gens` gives the trivial subgroup.
/// Panics if a generator belongs to a different group.
pub fn generated_subgroup(g: &FiniteGroup, gens: &[GroupElement]) -> Subgroup {
    let idxs: Vec<u16> = gens
        .iter()
        .map(|e| {
            assert_eq!(e.group_id(), g.id(), "generator from a different group");
            e.index() as u16
        })
        .collect();
    Subgroup::from_parts(g, closure_idx(g, &idxs))
}

/// Keeps a small generating subsequence of `gens` spanning `target`: drop
/// every generator already inside the span of the kept prefix. Each kept
/// generator at least doubles the span, so the result has at most
/// `log2(|target|)` entries.
fn prune_generators(g: &FiniteGroup, target: &ElementSet, gens: &[u16]) -> Vec<u16> {
    let mut kept: Vec<u16> = Vec::new();
    let mut span = closure_idx(g, &kept);
    for &gen in gens {
        if span.len() == target.len() {
            break;
        }
        if !span.contains(gen as usize) {
            kept.push(gen);
            span = closure_idx(g, &kept);
        }
    }
    debug_assert_eq!(span.len(), target.len(), "pruned generators lost the span");
    kept
}

/// Every subgroup of `g`, subject to [`crate::DEFAULT_ORDER_CAP`].
pub fn all_subgroups(g: &FiniteGroup) -> Result<SubgroupLattice, LatticeError> {
    all_subgroups_with_cap(g, crate::DEFAULT_ORDER_CAP)
}

/// Every subgroup of `g`, rejecting groups larger than `cap`.
///
/// Seeds with all cyclic subgroups and closes under pairwise joins; every
/// subgroup is the join of the cyclic subgroups of its elements, so the fixed
/// point is the complete lattice.
pub fn all_subgroups_with_cap(
    g: &FiniteGroup,
    cap: usize,
) -> Result<SubgroupLattice, LatticeError> {
    if g.order() > cap {
        return Err(LatticeError::OrderCapExceeded {
            order: g.order(),
            cap,
        });
    }
    let mut sets: Vec<ElementSet> = Vec::new();
    let mut gens_list: Vec<Vec<u16>> = Vec::new();
    let mut seen: HashMap<ElementSet, usize> = HashMap::new();
    let mut queue: VecDeque<usize> = VecDeque::new();

    for e in 0..g.order() as u16 {
        let set = closure_idx(g, &[e]);
        if !seen.contains_key(&set) {
            let gens = if e == g.identity_idx() { vec![] } else { vec![e] };
            seen.insert(set.clone(), sets.len());
            queue.push_back(sets.len());
            sets.push(set);
            gens_list.push(gens);
        }
    }

    while let Some(i) = queue.pop_front() {
        let mut j = 0;
        while j < sets.len() {
            if i != j && !sets[i].is_subset(&sets[j]) && !sets[j].is_subset(&sets[i]) {
                let mut gens = gens_list[i].clone();
                gens.extend_from_slice(&gens_list[j]);
                let joined = closure_idx(g, &gens);
                if !seen.contains_key(&joined) {
                    let pruned = prune_generators(g, &joined, &gens);
                    seen.insert(joined.clone(), sets.len());
                    queue.push_back(sets.len());
                    sets.push(joined);
                    gens_list.push(pruned);
                }
            }
            j += 1;
        }
    }

    let mut nodes: Vec<Subgroup> = sets
        .into_iter()
        .map(|members| Subgroup::from_parts(g, members))
        .collect();
    nodes.sort_unstable();
    Ok(SubgroupLattice::from_nodes(g, nodes))
}

/// The complete subgroup lattice of one group, with containment and cover
/// relations precomputed over canonical node indices.
pub struct SubgroupLattice {
    group: GroupId,
    group_order: usize,
    nodes: Vec<Subgroup>,
    index: HashMap<ElementSet, usize>,
    /// `above[i]` = indices `j` with `nodes[i] <= nodes[j]` (includes `i`).
    above: Vec<ElementSet>,
    /// `below[i]` = indices `j` with `nodes[j] <= nodes[i]` (includes `i`).
    below: Vec<ElementSet>,
    /// `covers_up[i]` = indices `j` such that `j` covers `i` in the Hasse
    /// diagram: `i < j` with nothing strictly between.
    covers_up: Vec<ElementSet>,
}

impl SubgroupLattice {
    fn from_nodes(g: &FiniteGroup, nodes: Vec<Subgroup>) -> SubgroupLattice {
        let n = nodes.len();
        let mut index = HashMap::with_capacity(n);
        for (i, node) in nodes.iter().enumerate() {
            index.insert(node.members().clone(), i);
        }
        let mut above = vec![ElementSet::empty(n); n];
        let mut below = vec![ElementSet::empty(n); n];
        for i in 0..n {
            for j in 0..n {
                if nodes[i].members().is_subset(nodes[j].members()) {
                    above[i].insert(j);
                    below[j].insert(i);
                }
            }
        }
        let mut covers_up = vec![ElementSet::empty(n); n];
        for i in 0..n {
            for j in above[i].iter() {
                if j != i && above[i].intersection(&below[j]).len() == 2 {
                    covers_up[i].insert(j);
                }
            }
        }
        SubgroupLattice {
            group: g.id(),
            group_order: g.order(),
            nodes,
            index,
            above,
            below,
            covers_up,
        }
    }

    pub fn group_id(&self) -> GroupId {
        self.group
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    /// Number of subgroups.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a group always has at least the trivial subgroup
    }

    /// All subgroups in canonical order (ascending order, then member list).
    pub fn nodes(&self) -> &[Subgroup] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &Subgroup {
        &self.nodes[i]
    }

    /// Canonical index of a subgroup, if it belongs to this lattice's group.
    pub fn index_of(&self, h: &Subgroup) -> Result<usize, LatticeError> {
        if h.group_id() != self.group {
            return Err(LatticeError::ForeignSubgroup);
        }
        self.index
            .get(h.members())
            .copied()
            .ok_or(LatticeError::ForeignSubgroup)
    }

    /// Index of the trivial subgroup (always 0 in canonical order).
    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of the whole group (always the last node).
    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Containment by canonical indices.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.above[i].contains(j)
    }

    /// Hasse cover relation by canonical indices: `j` covers `i`.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        self.covers_up[i].contains(j)
    }

    /// All indices `j` with `i <= j`.
    pub fn above_set(&self, i: usize) -> &ElementSet {
        &self.above[i]
    }

    /// All indices `j` with `j <= i`.
    pub fn below_set(&self, i: usize) -> &ElementSet {
        &self.below[i]
    }

    /// Hasse edges `(from, to)` with `to` covering `from`, sorted.
    pub fn cover_edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for i in 0..self.len() {
            for j in self.covers_up[i].iter() {
                edges.push((i, j));
            }
        }
        edges
    }

    /// Indices strictly between `i` and `j`, assuming `i <= j`.
    pub(crate) fn open_interval_set(&self, i: usize, j: usize) -> ElementSet {
        debug_assert!(self.leq(i, j));
        let mut between = self.above[i].intersection(&self.below[j]);
        between.remove(i);
        between.remove(j);
        between
    }

    /// Is `h` maximal in `k`, i.e. `h < k` with nothing strictly between?
    /// Errors if `h` and `k` coincide or `h` is not contained in `k`.
    pub fn is_maximal_in(&self, h: &Subgroup, k: &Subgroup) -> Result<bool, LatticeError> {
        let hi = self.index_of(h)?;
        let ki = self.index_of(k)?;
        if hi == ki {
            return Err(LatticeError::NotProper);
        }
        if !self.leq(hi, ki) {
            return Err(LatticeError::NotComparable);
        }
        Ok(self.open_interval_set(hi, ki).is_empty())
    }

    /// Subgroups strictly between `h` and `k`, in canonical order. Requires
    /// `h <= k`; equal arguments give an empty interval.
    pub fn interval(&self, h: &Subgroup, k: &Subgroup) -> Result<Vec<Subgroup>, LatticeError> {
        let hi = self.index_of(h)?;
        let ki = self.index_of(k)?;
        if hi == ki {
            return Ok(Vec::new());
        }
        if !self.leq(hi, ki) {
            return Err(LatticeError::NotComparable);
        }
        Ok(self
            .open_interval_set(hi, ki)
            .iter()
            .map(|x| self.nodes[x].clone())
            .collect())
    }
}

/// The distinct conjugates `x H x^-1` of `h` in `g`, in canonical order.
pub fn conjugates(g: &FiniteGroup, h: &Subgroup) -> Vec<Subgroup> {
    assert_eq!(h.group_id(), g.id(), "subgroup of a different group");
    let members = h.member_indices();
    let mut seen: Vec<ElementSet> = Vec::new();
    for x in 0..g.order() as u16 {
        let xinv = g.inv_idx(x);
        let mut conj = ElementSet::empty(g.order());
        for &m in &members {
            conj.insert(g.mul_idx(g.mul_idx(x, m as u16), xinv) as usize);
        }
        if !seen.contains(&conj) {
            seen.push(conj);
        }
    }
    seen.sort_unstable();
    seen.into_iter()
        .map(|set| Subgroup::from_parts(g, set))
        .collect()
}

/// Is `h` normal in `g`?
pub fn is_normal(g: &FiniteGroup, h: &Subgroup) -> bool {
    assert_eq!(h.group_id(), g.id(), "subgroup of a different group");
    let members = h.member_indices();
    for x in 0..g.order() as u16 {
        let xinv = g.inv_idx(x);
        for &m in &members {
            if !h.members().contains(g.mul_idx(g.mul_idx(x, m as u16), xinv) as usize) {
                return false;
            }
        }
    }
    true
}
