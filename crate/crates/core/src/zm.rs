//! The metacyclic family `ZM(m, n, r)`: finite groups all of whose Sylow
//! subgroups are cyclic.
//!
//! `ZM(m, n, r)` is presented as
//! `<a, b | a^m = b^n = 1, b^-1 a b = a^r>` subject to
//! `gcd(m, n) = gcd(m, r - 1) = 1` and `r^n ≡ 1 (mod m)`, with `r >= 2` so
//! the group is nonabelian. Elements are normal forms `b^x a^y` stored as
//! pairs `(x, y)` with `0 <= x < n`, `0 <= y < m`, multiplied by
//! `(x, y)·(u, v) = ((x + u) mod n, (y·r^u + v) mod m)`.
//!
//! Every subgroup is `<a^m1, b^n1 a^s>` for exactly one parameter triple
//! `(m1, n1, s)` with `m1 | m`, `n1 | n`, `0 <= s < m1`, and
//! `m1 | s·(r^n - 1)/(r^n1 - 1)`; [`ZmParams::triple_set`] enumerates these
//! and [`ZmParams::subgroup_for_triple`] realizes them in the Cayley-table
//! group, giving a bijection onto the subgroup lattice. The quotient
//! `(r^n - 1)/(r^n1 - 1)` equals the geometric sum over `r^n1`, so the
//! divisibility test stays in 64-bit arithmetic.

use thiserror::Error;

use crate::group::FiniteGroup;
use crate::lattice::{generated_subgroup, Subgroup};
use crate::numtheory::{divisors, gcd, mod_pow, multiplicative_order};
use crate::DEFAULT_ORDER_CAP;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZmError {
    #[error("parameters out of range: need m >= 2, n >= 2, 1 <= r < m, got (m={m}, n={n}, r={r})")]
    ParameterRange { m: u64, n: u64, r: u64 },
    #[error("r = 1 makes the presentation abelian (a direct product of cyclic groups)")]
    AbelianParameters,
    #[error("coprimality violated: gcd({m}, {value}) = {gcd} taking {what}, expected 1")]
    GcdViolation {
        m: u64,
        what: &'static str,
        value: u64,
        gcd: u64,
    },
    #[error("{r}^{n} ≡ {found} (mod {m}), expected 1")]
    OrderViolation { m: u64, n: u64, r: u64, found: u64 },
    #[error("group order {order} exceeds the cap of {cap} elements")]
    OrderCapExceeded { order: u64, cap: usize },
    #[error("element component out of range: ({x}, {y}) needs x < {n}, y < {m}")]
    ElementRange { x: u64, y: u64, m: u64, n: u64 },
    #[error("({m1}, {n1}, {s}) is not a subgroup triple for these parameters")]
    NotInTripleSet { m1: u64, n1: u64, s: u64 },
}

/// Validated parameters of one `ZM(m, n, r)` group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZmParams {
    m: u64,
    n: u64,
    r: u64,
    /// Multiplicative order of `r` modulo `m`; always `>= 2` and divides `n`.
    d: u64,
    /// `r_pow[u] = r^u mod m` for `u` in `0..n`.
    r_pow: Vec<u64>,
}

/// A normal form `b^x a^y` in one `ZM(m, n, r)` group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZmElement {
    x: u64,
    y: u64,
}

impl ZmElement {
    pub fn x(&self) -> u64 {
        self.x
    }

    pub fn y(&self) -> u64 {
        self.y
    }
}

/// Parameters `(m1, n1, s)` selecting the subgroup `<a^m1, b^n1 a^s>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupTriple {
    pub m1: u64,
    pub n1: u64,
    pub s: u64,
}

impl ZmParams {
    /// Validates `(m, n, r)` and precomputes the powers of `r`.
    ///
    /// Checks run in a fixed order: parameter ranges, then `r = 1`
    /// (abelian), then the two coprimality conditions, then `r^n ≡ 1`.
    pub fn new(m: u64, n: u64, r: u64) -> Result<ZmParams, ZmError> {
        if m < 2 || n < 2 || r < 1 || r >= m {
            return Err(ZmError::ParameterRange { m, n, r });
        }
        if r == 1 {
            return Err(ZmError::AbelianParameters);
        }
        let g = gcd(m, n);
        if g != 1 {
            return Err(ZmError::GcdViolation {
                m,
                what: "n",
                value: n,
                gcd: g,
            });
        }
        let g = gcd(m, r - 1);
        if g != 1 {
            return Err(ZmError::GcdViolation {
                m,
                what: "r - 1",
                value: r - 1,
                gcd: g,
            });
        }
        let found = mod_pow(r, n, m);
        if found != 1 {
            return Err(ZmError::OrderViolation { m, n, r, found });
        }
        // r^n ≡ 1 makes r invertible mod m, so the order exists; r != 1 with
        // r < m makes it at least 2.
        let d = multiplicative_order(r, m).expect("r is invertible modulo m");
        debug_assert!(d >= 2 && n.is_multiple_of(d));
        let mut r_pow = Vec::with_capacity(n as usize);
        let mut p = 1u64;
        for _ in 0..n {
            r_pow.push(p);
            p = p * r % m;
        }
        Ok(ZmParams { m, n, r, d, r_pow })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn r(&self) -> u64 {
        self.r
    }

    /// Multiplicative order of `r` modulo `m`.
    pub fn d(&self) -> u64 {
        self.d
    }

    /// Group order `m·n`.
    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    /// Order of the center, `n / d`.
    pub fn center_order(&self) -> u64 {
        self.n / self.d
    }

    /// The normal form `b^x a^y`; components must satisfy `x < n`, `y < m`.
    pub fn element(&self, x: u64, y: u64) -> Result<ZmElement, ZmError> {
        if x >= self.n || y >= self.m {
            return Err(ZmError::ElementRange {
                x,
                y,
                m: self.m,
                n: self.n,
            });
        }
        Ok(ZmElement { x, y })
    }

    pub fn identity(&self) -> ZmElement {
        ZmElement { x: 0, y: 0 }
    }

    /// Normal-form product `(x, y)·(u, v) = ((x+u) mod n, (y·r^u + v) mod m)`.
    pub fn mul(&self, a: ZmElement, b: ZmElement) -> ZmElement {
        debug_assert!(a.x < self.n && a.y < self.m && b.x < self.n && b.y < self.m);
        ZmElement {
            x: (a.x + b.x) % self.n,
            y: (a.y * self.r_pow[b.x as usize] + b.y) % self.m,
        }
    }

    /// Canonical element index `x·m + y`.
    pub fn index_of(&self, e: ZmElement) -> usize {
        debug_assert!(e.x < self.n && e.y < self.m);
        (e.x * self.m + e.y) as usize
    }

    /// Inverse of [`ZmParams::index_of`].
    pub fn element_at(&self, index: usize) -> ZmElement {
        assert!((index as u64) < self.order(), "element index out of range");
        ZmElement {
            x: index as u64 / self.m,
            y: index as u64 % self.m,
        }
    }

    /// Builds the Cayley-table group, subject to [`DEFAULT_ORDER_CAP`].
    pub fn group(&self) -> Result<FiniteGroup, ZmError> {
        self.group_with_cap(DEFAULT_ORDER_CAP)
    }

    /// Builds the Cayley-table group with an explicit order cap.
    pub fn group_with_cap(&self, cap: usize) -> Result<FiniteGroup, ZmError> {
        let cap = cap.min(crate::MAX_GROUP_ORDER);
        let order = self.order();
        if order > cap as u64 {
            return Err(ZmError::OrderCapExceeded { order, cap });
        }
        let order = order as usize;
        let mut table = vec![0u16; order * order];
        for i in 0..order {
            let a = self.element_at(i);
            for j in 0..order {
                let b = self.element_at(j);
                table[i * order + j] = self.index_of(self.mul(a, b)) as u16;
            }
        }
        Ok(FiniteGroup::from_raw_table(self.label(), order, table))
    }

    /// The label `ZM(m,n,r)` used by the group constructor.
    pub fn label(&self) -> String {
        format!("ZM({},{},{})", self.m, self.n, self.r)
    }

    /// `(r^n - 1)/(r^n1 - 1) mod m1`, computed as the geometric sum
    /// `sum_{k < n/n1} (r^n1)^k mod m1`.
    fn quotient_mod(&self, m1: u64, n1: u64) -> u64 {
        debug_assert!(self.m.is_multiple_of(m1) && self.n.is_multiple_of(n1));
        let t = mod_pow(self.r, n1, m1);
        let mut q = 0u64;
        let mut tk = 1 % m1;
        for _ in 0..self.n / n1 {
            q = (q + tk) % m1;
            tk = tk * t % m1;
        }
        q
    }

    fn triple_is_valid(&self, t: SubgroupTriple) -> bool {
        t.m1 >= 1
            && t.n1 >= 1
            && self.m.is_multiple_of(t.m1)
            && self.n.is_multiple_of(t.n1)
            && t.s < t.m1
            && (t.s * self.quotient_mod(t.m1, t.n1)).is_multiple_of(t.m1)
    }

    /// Every subgroup triple `(m1, n1, s)`, in lexicographic order.
    pub fn triple_set(&self) -> Vec<SubgroupTriple> {
        let mut out = Vec::new();
        for &m1 in &divisors(self.m) {
            for &n1 in &divisors(self.n) {
                let q = self.quotient_mod(m1, n1);
                for s in 0..m1 {
                    if (s * q).is_multiple_of(m1) {
                        out.push(SubgroupTriple { m1, n1, s });
                    }
                }
            }
        }
        out
    }

    /// Realizes a triple as the subgroup `<a^m1, b^n1 a^s>` of `g`, which
    /// must be the group built by [`ZmParams::group`] (the canonical index
    /// layout is assumed). The result has order `m·n/(m1·n1)`.
    pub fn subgroup_for_triple(
        &self,
        g: &FiniteGroup,
        t: SubgroupTriple,
    ) -> Result<Subgroup, ZmError> {
        assert_eq!(
            g.order() as u64,
            self.order(),
            "group was not built from these parameters"
        );
        assert_eq!(g.label(), self.label(), "group was not built from these parameters");
        if !self.triple_is_valid(t) {
            return Err(ZmError::NotInTripleSet {
                m1: t.m1,
                n1: t.n1,
                s: t.s,
            });
        }
        let a_pow = ZmElement {
            x: 0,
            y: t.m1 % self.m,
        };
        let b_shift = ZmElement {
            x: t.n1 % self.n,
            y: t.s,
        };
        let gens = [
            g.element(self.index_of(a_pow)),
            g.element(self.index_of(b_shift)),
        ];
        let sub = generated_subgroup(g, &gens);
        debug_assert_eq!(
            sub.order() as u64,
            self.order() / (t.m1 * t.n1),
            "subgroup order formula failed for {t:?}"
        );
        Ok(sub)
    }

    /// Triples of the solitary subgroups: `(m1, n1, 0)` with
    /// `r^n1 ≡ 1 (mod m1)`, in lexicographic order.
    pub fn solitary_triples(&self) -> Vec<SubgroupTriple> {
        let mut out = Vec::new();
        for &m1 in &divisors(self.m) {
            for &n1 in &divisors(self.n) {
                if mod_pow(self.r, n1, m1) == 1 % m1 {
                    out.push(SubgroupTriple { m1, n1, s: 0 });
                }
            }
        }
        out
    }
}
