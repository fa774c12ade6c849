//! Construction and analysis of small finite groups.
//!
//! The crate builds concrete groups as Cayley tables (cyclic, dihedral,
//! generalized quaternion, direct products, and the metacyclic family
//! `ZM(m, n, r)` with cyclic Sylow subgroups), enumerates their full subgroup
//! lattices, identifies *solitary* subgroups (subgroups no other subgroup is
//! isomorphic to), and decides whether the solitary subgroups sit *densely*
//! in the lattice: every strict chain `H < K` with `H` non-maximal in `K`
//! must be interpolated by a solitary subgroup.
//!
//! For the metacyclic family the density property admits a purely arithmetic
//! classification; [`classify::verify_classification`] checks that
//! classification against brute force over every group in a given order
//! range.
//!
//! Everything is exact and deterministic: lattices are reported in a
//! canonical order, and repeated runs produce identical output.

pub mod bitset;
pub mod classify;
pub mod density;
pub mod group;
pub mod lattice;
pub mod numtheory;
pub mod solitary;
pub mod zm;

pub use bitset::ElementSet;
pub use classify::{
    classify_group, classify_zm, enumerate_zm_triples, verify_classification, ClassificationBranch,
    ClassificationResult, Disagreement, SweepCase, SweepReport, ZmShape,
};
pub use density::{density_from_parts, has_dense_solitary, DensityReport};
pub use group::{FiniteGroup, GroupElement, GroupError, GroupId, DEFAULT_ORDER_CAP, MAX_GROUP_ORDER};
pub use lattice::{
    all_subgroups, all_subgroups_with_cap, conjugates, generated_subgroup, is_normal, LatticeError,
    Subgroup, SubgroupLattice,
};
pub use solitary::{
    are_isomorphic, check_solitary_lattice, fingerprint, solitary_flags, solitary_lattice_report,
    solitary_subgroups, IsoFingerprint, SolitaryLatticeReport,
};
pub use zm::{SubgroupTriple, ZmElement, ZmError, ZmParams};
