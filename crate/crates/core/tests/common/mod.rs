//! Independent brute-force oracle used by the integration tests.
//!
//! Deliberately naive algorithms, sharing no code with the library: subgroup
//! enumeration scans every subset of the group, and isomorphism testing
//! tries bijections element-by-element in index order. Exponential, so only
//! usable for tiny groups — which is the point: the values it produces are
//! easy to trust and pin the library's fast paths down.

use sollat::FiniteGroup;

/// Raw multiplication table on `0..n`, extracted via the public API.
pub type Table = Vec<Vec<usize>>;

pub fn full_table(g: &FiniteGroup) -> Table {
    let n = g.order();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| g.mul(g.element(a), g.element(b)).index())
                .collect()
        })
        .collect()
}

/// The table of a subgroup given by its member list, reindexed by rank.
pub fn sub_table(g: &FiniteGroup, members: &[usize]) -> Table {
    let mut rank = vec![usize::MAX; g.order()];
    for (pos, &m) in members.iter().enumerate() {
        rank[m] = pos;
    }
    members
        .iter()
        .map(|&a| {
            members
                .iter()
                .map(|&b| {
                    let p = g.mul(g.element(a), g.element(b)).index();
                    assert!(rank[p] != usize::MAX, "member list is not closed");
                    rank[p]
                })
                .collect()
        })
        .collect()
}

/// All subgroups as ascending member lists, by scanning all 2^n subsets.
/// A nonempty subset of a finite group closed under multiplication is a
/// subgroup, and it necessarily contains the identity.
pub fn oracle_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    assert!(n <= 20, "subset scan is exponential; group too large");
    let table = full_table(g);
    let e = g.identity().index();
    let mut found = Vec::new();
    for mask in 0u32..1 << n {
        if mask & (1 << e) == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| mask & (1 << table[a][b]) != 0));
        if closed {
            found.push(members);
        }
    }
    found.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    found
}

/// Isomorphism by backtracking over all index-order bijections, checking
/// every already-determined product along the way.
pub fn oracle_isomorphic(a: &Table, b: &Table) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, &mut map, &mut used, 0)
}

fn extend(a: &Table, b: &Table, map: &mut Vec<usize>, used: &mut Vec<bool>, pos: usize) -> bool {
    let n = a.len();
    if pos == n {
        return true;
    }
    'candidates: for t in 0..n {
        if used[t] {
            continue;
        }
        map[pos] = t;
        used[t] = true;
        for x in 0..=pos {
            for y in 0..=pos {
                let p = a[x][y];
                if p <= pos && b[map[x]][map[y]] != map[p] {
                    map[pos] = usize::MAX;
                    used[t] = false;
                    continue 'candidates;
                }
            }
        }
        if extend(a, b, map, used, pos + 1) {
            return true;
        }
        map[pos] = usize::MAX;
        used[t] = false;
    }
    false
}

/// Member lists of the solitary subgroups: subgroups isomorphic to no other
/// subgroup, determined entirely by the oracle's own enumeration and
/// isomorphism test.
pub fn oracle_solitary(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let subs = oracle_subgroups(g);
    let tables: Vec<Table> = subs.iter().map(|m| sub_table(g, m)).collect();
    let mut solitary = vec![true; subs.len()];
    for i in 0..subs.len() {
        for j in 0..i {
            if subs[i].len() == subs[j].len()
                && (solitary[i] || solitary[j])
                && oracle_isomorphic(&tables[i], &tables[j])
            {
                solitary[i] = false;
                solitary[j] = false;
            }
        }
    }
    subs.into_iter()
        .zip(solitary)
        .filter(|(_, s)| *s)
        .map(|(m, _)| m)
        .collect()
}
