//! Arithmetic classification of the dense-solitary-subgroups property, and
//! its brute-force verification.
//!
//! A finite group has dense solitary subgroups exactly when it is cyclic, or
//! it is a `ZM(m, n, r)` group whose parameters satisfy: `m` prime, the
//! multiplicative order `d` of `r` mod `m` prime, and `n = d^alpha · p^beta`
//! with `alpha >= 1`, `beta` in `{0, 1}`, and `p` a prime different from
//! `d`. [`classify_zm`] evaluates that arithmetic condition;
//! [`verify_classification`] replays it against the brute-force lattice
//! computation for every valid parameter triple up to a given order, plus a
//! corpus of cyclic and non-cyclic p-groups.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::density::density_from_parts;
use crate::group::FiniteGroup;
use crate::lattice::all_subgroups_with_cap;
use crate::numtheory::{divisors, is_prime};
use crate::solitary::solitary_flags;
use crate::zm::{ZmError, ZmParams};

/// Which arm of the classification applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassificationBranch {
    /// The group is cyclic: always dense.
    Cyclic,
    /// The group is `ZM(m, n, r)` with parameters of the accepted shape.
    ZmClassified,
    /// Neither cyclic nor an accepted `ZM` shape: not dense.
    Rejected,
}

/// The accepted parameter shape `m` prime, `d` prime, `n = d^alpha · p^beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZmShape {
    pub m: u64,
    pub d: u64,
    pub alpha: u32,
    /// The second prime factor of `n`, present exactly when `beta == 1`.
    pub p: Option<u64>,
    pub beta: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassificationResult {
    /// Does the group have dense solitary subgroups?
    pub verdict: bool,
    pub branch: ClassificationBranch,
    /// Populated exactly for [`ClassificationBranch::ZmClassified`].
    pub shape: Option<ZmShape>,
}

fn rejected() -> ClassificationResult {
    ClassificationResult {
        verdict: false,
        branch: ClassificationBranch::Rejected,
        shape: None,
    }
}

/// The accepted shape of validated parameters, if they have it.
fn zm_shape(p: &ZmParams) -> Option<ZmShape> {
    if !is_prime(p.m()) || !is_prime(p.d()) {
        return None;
    }
    let d = p.d();
    let mut rest = p.n();
    let mut alpha = 0u32;
    while rest.is_multiple_of(d) {
        rest /= d;
        alpha += 1;
    }
    debug_assert!(alpha >= 1, "d always divides n for valid parameters");
    if rest == 1 {
        Some(ZmShape {
            m: p.m(),
            d,
            alpha,
            p: None,
            beta: 0,
        })
    } else if is_prime(rest) {
        Some(ZmShape {
            m: p.m(),
            d,
            alpha,
            p: Some(rest),
            beta: 1,
        })
    } else {
        None
    }
}

/// Classifies validated `ZM` parameters.
pub fn classify_params(p: &ZmParams) -> ClassificationResult {
    match zm_shape(p) {
        Some(shape) => ClassificationResult {
            verdict: true,
            branch: ClassificationBranch::ZmClassified,
            shape: Some(shape),
        },
        None => rejected(),
    }
}

/// Classifies the group `ZM(m, n, r)` directly from its parameters,
/// validating them first.
pub fn classify_zm(m: u64, n: u64, r: u64) -> Result<ClassificationResult, ZmError> {
    Ok(classify_params(&ZmParams::new(m, n, r)?))
}

/// Classifies an arbitrary Cayley-table group: detects cyclicity, then tries
/// to recognize the group as some `ZM(m, n, r)` by scanning generator pairs,
/// and applies the arithmetic classification on success.
///
/// The verdict equals the density verdict for every group (that is what
/// [`verify_classification`] confirms by brute force).
pub fn classify_group(g: &FiniteGroup) -> ClassificationResult {
    let n = g.order();
    if (0..n as u16).any(|i| g.element_order_idx(i) == n) {
        return ClassificationResult {
            verdict: true,
            branch: ClassificationBranch::Cyclic,
            shape: None,
        };
    }
    if g.is_abelian() {
        return rejected();
    }
    let orders: Vec<usize> = (0..n as u16).map(|i| g.element_order_idx(i)).collect();
    for m in divisors(n as u64) {
        let nn = n as u64 / m;
        if m < 2 || nn < 2 || crate::numtheory::gcd(m, nn) != 1 {
            continue;
        }
        for a in 0..n as u16 {
            if orders[a as usize] as u64 != m {
                continue;
            }
            // powers[j] = a^j, for the discrete log below
            let mut powers = Vec::with_capacity(m as usize);
            let mut p = g.identity_idx();
            for _ in 0..m {
                powers.push(p);
                p = g.mul_idx(p, a);
            }
            for b in 0..n as u16 {
                if orders[b as usize] as u64 != nn {
                    continue;
                }
                let conj = g.mul_idx(g.mul_idx(g.inv_idx(b), a), b);
                let Some(r) = powers.iter().position(|&q| q == conj) else {
                    continue;
                };
                if r < 2 {
                    continue;
                }
                if let Ok(params) = ZmParams::new(m, nn, r as u64) {
                    // <a> is normal (b conjugates it into itself) and
                    // gcd(m, nn) = 1, so <a, b> has order m·nn = |G|: the
                    // relations of ZM(m, nn, r) hold and the orders match.
                    return classify_params(&params);
                }
            }
        }
    }
    rejected()
}

/// Every valid parameter triple with `m·n <= max_order`, ordered
/// lexicographically by `(m, n, r)`.
pub fn enumerate_zm_triples(max_order: u64) -> Vec<ZmParams> {
    let mut out = Vec::new();
    let mut m = 2;
    while m * 2 <= max_order {
        for n in 2..=max_order / m {
            for r in 2..m {
                if let Ok(p) = ZmParams::new(m, n, r) {
                    out.push(p);
                }
            }
        }
        m += 1;
    }
    out
}

/// A case where the arithmetic classification and brute force were compared.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum SweepCase {
    Zm { m: u64, n: u64, r: u64 },
    Corpus { label: String },
}

impl std::fmt::Display for SweepCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SweepCase::Zm { m, n, r } => write!(f, "ZM({m},{n},{r})"),
            SweepCase::Corpus { label } => write!(f, "{label}"),
        }
    }
}

/// A case where the two sides disagreed (expected never).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Disagreement {
    pub case: SweepCase,
    pub classified_dense: bool,
    pub brute_force_dense: bool,
}

/// Outcome of [`verify_classification`].
#[derive(Debug, Clone)]
pub struct SweepReport {
    pub max_order: u64,
    /// Number of valid `ZM` parameter triples swept.
    pub zm_triples: usize,
    /// Number of corpus groups swept (cyclic plus non-cyclic p-groups).
    pub corpus_cases: usize,
    pub agreements: usize,
    /// Sorted list of disagreements; empty unless something is wrong.
    pub disagreements: Vec<Disagreement>,
    /// First swept triple classified dense with `beta = 0`.
    pub beta0_witness: Option<(u64, u64, u64)>,
    /// First swept triple classified dense with `beta = 1`.
    pub beta1_witness: Option<(u64, u64, u64)>,
    pub elapsed: Duration,
}

/// Non-cyclic p-groups with known density behavior (all fail): generalized
/// quaternion and dihedral 2-groups plus elementary abelian squares.
pub fn noncyclic_p_group_corpus() -> Vec<FiniteGroup> {
    let c2 = FiniteGroup::cyclic(2).unwrap();
    let c3 = FiniteGroup::cyclic(3).unwrap();
    let c5 = FiniteGroup::cyclic(5).unwrap();
    vec![
        FiniteGroup::generalized_quaternion(3).unwrap(),
        FiniteGroup::generalized_quaternion(4).unwrap(),
        FiniteGroup::generalized_quaternion(5).unwrap(),
        FiniteGroup::dihedral(4).unwrap(),
        FiniteGroup::dihedral(8).unwrap(),
        FiniteGroup::direct_product(&c2, &c2).unwrap(),
        FiniteGroup::direct_product(&c3, &c3).unwrap(),
        FiniteGroup::direct_product(&c5, &c5).unwrap(),
    ]
}

/// Compares the arithmetic classification against brute-force density for
/// every valid `ZM` triple with `m·n <= max_order`, for cyclic groups up to
/// order `min(max_order, 64)`, and for the non-cyclic p-group corpus (its
/// members of order `<= max_order`). `ZM` triples are processed in parallel;
/// the report is deterministic regardless of thread scheduling.
pub fn verify_classification(max_order: u64) -> SweepReport {
    let start = Instant::now();
    let params = enumerate_zm_triples(max_order);
    let cap = (max_order as usize).max(1);
    let zm_outcomes: Vec<(ClassificationResult, bool)> = params
        .par_iter()
        .map(|p| {
            let g = p
                .group_with_cap(cap)
                .expect("triple order is bounded by max_order");
            let lat = all_subgroups_with_cap(&g, cap).expect("same bound");
            let flags = solitary_flags(&g, &lat);
            let density = density_from_parts(&lat, &flags);
            (classify_params(p), density.verdict)
        })
        .collect();

    let mut agreements = 0usize;
    let mut disagreements = Vec::new();
    let mut beta0_witness = None;
    let mut beta1_witness = None;
    for (p, (classified, dense)) in params.iter().zip(&zm_outcomes) {
        if classified.verdict == *dense {
            agreements += 1;
        } else {
            disagreements.push(Disagreement {
                case: SweepCase::Zm {
                    m: p.m(),
                    n: p.n(),
                    r: p.r(),
                },
                classified_dense: classified.verdict,
                brute_force_dense: *dense,
            });
        }
        if let Some(shape) = classified.shape {
            let witness = match shape.beta {
                0 => &mut beta0_witness,
                _ => &mut beta1_witness,
            };
            if witness.is_none() {
                *witness = Some((p.m(), p.n(), p.r()));
            }
        }
    }

    let mut corpus: Vec<FiniteGroup> = Vec::new();
    for n in 1..=64.min(max_order) {
        corpus.push(FiniteGroup::cyclic(n as usize).unwrap());
    }
    corpus.extend(
        noncyclic_p_group_corpus()
            .into_iter()
            .filter(|g| g.order() as u64 <= max_order),
    );
    let corpus_cases = corpus.len();
    for g in &corpus {
        let lat = all_subgroups_with_cap(g, cap).expect("corpus orders are small");
        let flags = solitary_flags(g, &lat);
        let dense = density_from_parts(&lat, &flags).verdict;
        let classified = classify_group(g).verdict;
        if classified == dense {
            agreements += 1;
        } else {
            disagreements.push(Disagreement {
                case: SweepCase::Corpus {
                    label: g.label().to_string(),
                },
                classified_dense: classified,
                brute_force_dense: dense,
            });
        }
    }

    disagreements.sort();
    SweepReport {
        max_order,
        zm_triples: params.len(),
        corpus_cases,
        agreements,
        disagreements,
        beta0_witness,
        beta1_witness,
        elapsed: start.elapsed(),
    }
}
