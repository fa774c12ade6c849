//! Finite groups as explicit Cayley tables.
//!
//! A [`FiniteGroup`] stores the full multiplication table of a group of at
//! most [`MAX_GROUP_ORDER`] elements, indexed `0..order`. Constructors for
//! cyclic, dihedral, and generalized quaternion groups plus direct products
//! cover the test families used throughout the crate; the metacyclic family
//! lives in [`crate::zm`].
//!
//! Element index layouts (the canonical labelings reports refer to):
//! * cyclic `C_n`: index `i` is the `i`-th power of the generator;
//! * dihedral `D_{2n}` with rotation `a` and reflection `b`: `a^i` at index
//!   `i`, `b·a^i` at index `n + i`;
//! * generalized quaternion `Q_{2^k}` with `|a| = 2^(k-1)`: `a^i` at index
//!   `i`, `b·a^i` at index `2^(k-1) + i`;
//! * direct product `G × H`: `(g, h)` at index `g·|H| + h`.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::bitset::ElementSet;
use crate::lattice::Subgroup;

/// Default ceiling on group orders for lattice-level computations.
pub const DEFAULT_ORDER_CAP: usize = 512;

/// Hard structural ceiling on constructed group orders. A Cayley table of
/// this size occupies 32 MiB; anything larger is outside this crate's scope.
pub const MAX_GROUP_ORDER: usize = 4096;

/// Opaque identity of one constructed [`FiniteGroup`], used to detect when a
/// [`Subgroup`] or [`GroupElement`] is applied to the wrong group.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct GroupId(u64);

fn next_group_id() -> GroupId {
    static NEXT: AtomicU64 = AtomicU64::new(0);
    GroupId(NEXT.fetch_add(1, Ordering::Relaxed))
}

/// An element of one specific [`FiniteGroup`], carrying the group's identity
/// so cross-group mixups fail fast instead of returning garbage.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroupElement {
    group: GroupId,
    index: u16,
}

impl GroupElement {
    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub fn group_id(&self) -> GroupId {
        self.group
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("cyclic group order must be at least 1")]
    ZeroOrder,
    #[error("dihedral parameter must be at least 2, got {0}")]
    DihedralTooSmall(usize),
    #[error("generalized quaternion exponent must be at least 3, got {0}")]
    QuaternionExponentTooSmall(u32),
    #[error("group order {order} exceeds the cap of {cap} elements")]
    OrderCapExceeded { order: usize, cap: usize },
}

/// A finite group given by its full multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    id: GroupId,
    order: usize,
    identity: u16,
    table: Vec<u16>,
    inverse: Vec<u16>,
    label: String,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a raw table (row-major, `table[a*order + b] = ab`).
    /// The caller guarantees the table is a group; inverses and the identity
    /// are derived here, and basic structure is checked in debug builds.
    fn from_table(label: String, order: usize, table: Vec<u16>) -> Self {
        assert!(order >= 1 && table.len() == order * order);
        let mut identity = None;
        for e in 0..order {
            if table[e * order] == 0 && table[e] == e as u16 {
                // e * first == first and first * e == e; verify fully below.
                if (0..order).all(|x| table[e * order + x] == x as u16)
                    && (0..order).all(|x| table[x * order + e] == x as u16)
                {
                    identity = Some(e as u16);
                    break;
                }
            }
        }
        let identity = identity.expect("multiplication table has no identity");
        let mut inverse = vec![u16::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if table[a * order + b] == identity {
                    inverse[a] = b as u16;
                }
            }
        }
        assert!(
            inverse.iter().all(|&v| v != u16::MAX),
            "multiplication table has a non-invertible element"
        );
        let group = FiniteGroup {
            id: next_group_id(),
            order,
            identity,
            table,
            inverse,
            label,
        };
        debug_assert_eq!(group.verify_axioms(), Ok(()));
        group
    }

    /// Cyclic group `C_n` on indices `0..n` with `i · j = (i + j) mod n`.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::ZeroOrder);
        }
        check_max_order(n)?;
        let mut table = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = ((i + j) % n) as u16;
            }
        }
        Ok(FiniteGroup::from_table(format!("C{n}"), n, table))
    }

    /// Dihedral group `D_{2n}` of order `2n`, `n >= 2`: symmetries of the
    /// regular `n`-gon. Index layout `(i, eps) -> eps·n + i` with
    /// `(i,0)(j,eps) = (i+j, eps)`, `(i,1)(j,0) = (i-j, 1)`,
    /// `(i,1)(j,1) = (i-j, 0)`, all rotation indices mod `n`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n < 2 {
            return Err(GroupError::DihedralTooSmall(n));
        }
        let order = 2 * n;
        check_max_order(order)?;
        let idx = |i: usize, eps: usize| eps * n + i;
        let mut table = vec![0u16; order * order];
        for i in 0..n {
            for j in 0..n {
                for (eps_a, eps_b) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                    let (k, eps) = if eps_a == 0 {
                        ((i + j) % n, eps_b)
                    } else {
                        ((n + i - j) % n, 1 - eps_b)
                    };
                    table[idx(i, eps_a) * order + idx(j, eps_b)] = idx(k, eps) as u16;
                }
            }
        }
        Ok(FiniteGroup::from_table(format!("D{order}"), order, table))
    }

    /// Generalized quaternion group `Q_{2^k}`, `k >= 3`, of order `2^k`:
    /// `<a, b | a^(2^(k-1)) = 1, b^2 = a^(2^(k-2)), b a b^-1 = a^-1>`.
    /// Index layout `(i, eps) -> eps·2^(k-1) + i` for `b^eps · a^i`.
    pub fn generalized_quaternion(k: u32) -> Result<Self, GroupError> {
        if k < 3 {
            return Err(GroupError::QuaternionExponentTooSmall(k));
        }
        let order = 1usize
            .checked_shl(k)
            .filter(|&o| o <= MAX_GROUP_ORDER)
            .ok_or(GroupError::OrderCapExceeded {
                order: usize::MAX,
                cap: MAX_GROUP_ORDER,
            })?;
        let m = order / 2; // |a| = 2^(k-1)
        let half = m / 2; // b^2 = a^(2^(k-2))
        let idx = |i: usize, eps: usize| eps * m + i;
        let mut table = vec![0u16; order * order];
        for i in 0..m {
            for j in 0..m {
                // Left-normal forms b^e a^i, using b a b^-1 = a^-1 and
                // b^2 = a^half:
                // (a^i)(b^f a^j)    = b^f a^(i·(-1)^f + j)
                // (b a^i)(a^j)      = b a^(i+j)
                // (b a^i)(b a^j)    = b^2 a^(-i+j) = a^(half - i + j)
                for (e, f) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                    let (eps, rot) = match (e, f) {
                        (0, 0) => (0, (i + j) % m),
                        (0, 1) => (1, (m - i + j) % m),
                        (1, 0) => (1, (i + j) % m),
                        _ => (0, (half + m - i + j) % m),
                    };
                    table[idx(i, e) * order + idx(j, f)] = idx(rot, eps) as u16;
                }
            }
        }
        let group = FiniteGroup::from_table(format!("Q{order}"), order, table);
        group
            .verify_axioms()
            .expect("generalized quaternion table failed the group axioms");
        Ok(group)
    }

    /// Direct product `G × H` on indices `g·|H| + h`, subject to
    /// [`DEFAULT_ORDER_CAP`].
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self, GroupError> {
        FiniteGroup::direct_product_with_cap(g, h, DEFAULT_ORDER_CAP)
    }

    /// Direct product with an explicit order cap.
    pub fn direct_product_with_cap(
        g: &FiniteGroup,
        h: &FiniteGroup,
        cap: usize,
    ) -> Result<Self, GroupError> {
        let order = g.order * h.order;
        if order > cap.min(MAX_GROUP_ORDER) {
            return Err(GroupError::OrderCapExceeded {
                order,
                cap: cap.min(MAX_GROUP_ORDER),
            });
        }
        let nh = h.order;
        let idx = |a: usize, b: usize| a * nh + b;
        let mut table = vec![0u16; order * order];
        for a1 in 0..g.order {
            for b1 in 0..h.order {
                for a2 in 0..g.order {
                    for b2 in 0..h.order {
                        let prod = idx(
                            g.mul_idx(a1 as u16, a2 as u16) as usize,
                            h.mul_idx(b1 as u16, b2 as u16) as usize,
                        );
                        table[idx(a1, b1) * order + idx(a2, b2)] = prod as u16;
                    }
                }
            }
        }
        let label = format!("{}x{}", g.label, h.label);
        Ok(FiniteGroup::from_table(label, order, table))
    }

    /// Builds a group directly from a closed multiplication table. Intended
    /// for other modules of this crate constructing validated tables.
    pub(crate) fn from_raw_table(label: String, order: usize, table: Vec<u16>) -> Self {
        FiniteGroup::from_table(label, order, table)
    }

    /// The subgroup on `members` as a standalone group. Members are re-indexed
    /// by their rank in the ascending member list. Panics if `members` is not
    /// closed under multiplication.
    pub fn restriction(&self, members: &ElementSet) -> FiniteGroup {
        assert_eq!(members.universe(), self.order, "member set universe mismatch");
        let elems = members.to_vec();
        let k = elems.len();
        assert!(k >= 1, "a subgroup is never empty");
        let mut rank = vec![u16::MAX; self.order];
        for (pos, &e) in elems.iter().enumerate() {
            rank[e] = pos as u16;
        }
        let mut table = vec![0u16; k * k];
        for (pa, &a) in elems.iter().enumerate() {
            for (pb, &b) in elems.iter().enumerate() {
                let prod = self.mul_idx(a as u16, b as u16);
                let pr = rank[prod as usize];
                assert!(pr != u16::MAX, "member set is not closed under multiplication");
                table[pa * k + pb] = pr;
            }
        }
        FiniteGroup::from_table(format!("{}[{}]", self.label, k), k, table)
    }

    pub fn id(&self) -> GroupId {
        self.id
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The element at `index`. Panics if `index >= order`.
    pub fn element(&self, index: usize) -> GroupElement {
        assert!(index < self.order, "element index {index} out of range");
        GroupElement {
            group: self.id,
            index: index as u16,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(|i| self.element(i))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            group: self.id,
            index: self.identity,
        }
    }

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.check_binding(a);
        self.check_binding(b);
        GroupElement {
            group: self.id,
            index: self.mul_idx(a.index, b.index),
        }
    }

    pub fn inverse(&self, a: GroupElement) -> GroupElement {
        self.check_binding(a);
        GroupElement {
            group: self.id,
            index: self.inv_idx(a.index),
        }
    }

    /// Order of `a` as a group element: least `k >= 1` with `a^k = 1`.
    pub fn element_order(&self, a: GroupElement) -> usize {
        self.check_binding(a);
        self.element_order_idx(a.index)
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.order as u16 {
            for b in 0..a {
                if self.mul_idx(a, b) != self.mul_idx(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// The center `Z(G)` as a subgroup.
    pub fn center(&self) -> Subgroup {
        let mut members = ElementSet::empty(self.order);
        for a in 0..self.order as u16 {
            if (0..self.order as u16).all(|b| self.mul_idx(a, b) == self.mul_idx(b, a)) {
                members.insert(a as usize);
            }
        }
        Subgroup::from_parts(self, members)
    }

    /// Exhaustively checks the group axioms on the stored table. The full
    /// associativity scan is cubic in the order, so this is meant for tests
    /// and constructor self-checks, not hot paths.
    pub fn verify_axioms(&self) -> Result<(), &'static str> {
        let n = self.order;
        if self.table.len() != n * n {
            return Err("table size mismatch");
        }
        if self.table.iter().any(|&v| v as usize >= n) {
            return Err("table entry out of range");
        }
        // Latin square: rows and columns are permutations.
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                let v = self.table[a * n + b] as usize;
                if seen[v] {
                    return Err("row repeats an entry");
                }
                seen[v] = true;
            }
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..n {
                let v = self.table[b * n + a] as usize;
                if seen[v] {
                    return Err("column repeats an entry");
                }
                seen[v] = true;
            }
        }
        let e = self.identity as usize;
        for a in 0..n {
            if self.table[e * n + a] != a as u16 || self.table[a * n + e] != a as u16 {
                return Err("identity fails");
            }
            let inv = self.inverse[a] as usize;
            if self.table[a * n + inv] != self.identity || self.table[inv * n + a] != self.identity
            {
                return Err("inverse fails");
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.table[a * n + b] as usize;
                for c in 0..n {
                    let bc = self.table[b * n + c] as usize;
                    if self.table[ab * n + c] != self.table[a * n + bc] {
                        return Err("associativity fails");
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn mul_idx(&self, a: u16, b: u16) -> u16 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub(crate) fn inv_idx(&self, a: u16) -> u16 {
        self.inverse[a as usize]
    }

    #[inline]
    pub(crate) fn identity_idx(&self) -> u16 {
        self.identity
    }

    pub(crate) fn element_order_idx(&self, a: u16) -> usize {
        let mut power = a;
        let mut k = 1usize;
        while power != self.identity {
            power = self.mul_idx(power, a);
            k += 1;
            debug_assert!(k <= self.order);
        }
        k
    }

    #[inline]
    fn check_binding(&self, e: GroupElement) {
        assert!(
            e.group == self.id,
            "element belongs to a different group instance"
        );
    }
}

fn check_max_order(order: usize) -> Result<(), GroupError> {
    if order > MAX_GROUP_ORDER {
        return Err(GroupError::OrderCapExceeded {
            order,
            cap: MAX_GROUP_ORDER,
        });
    }
    Ok(())
}
