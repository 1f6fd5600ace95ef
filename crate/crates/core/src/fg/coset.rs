//! Todd–Coxeter coset enumeration (HLT strategy) and the finite permutation
//! group a complete coset table defines.

use super::{FgError, Presentation, Word};
use crate::group::{permutation_closure, FiniteGroup, Subgroup, DEFAULT_MAX_ORDER};

const NONE: usize = usize::MAX;

/// Default cap on the number of cosets defined during one enumeration.
pub const DEFAULT_MAX_COSETS: usize = 100_000;

/// Action of the generators on right cosets of a subgroup.
///
/// Column `2i` is generator `i`, column `2i + 1` its inverse. Coset `0` is
/// the subgroup itself.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CosetTable {
    rank: usize,
    rows: Vec<Vec<Option<usize>>>,
}

impl CosetTable {
    pub(crate) fn from_raw(rank: usize, rows: Vec<Vec<usize>>) -> Self {
        let rows = rows.into_iter().map(|r| r.into_iter().map(|e| (e != NONE).then_some(e)).collect()).collect();
        Self { rank, rows }
    }

    /// Number of cosets.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rows(&self) -> &[Vec<Option<usize>>] {
        &self.rows
    }

    pub fn entry(&self, coset: usize, column: usize) -> Option<usize> {
        self.rows[coset][column]
    }

    pub fn is_complete(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Option::is_some))
    }

    /// Image of every coset under generator `i`; requires a complete table.
    pub fn generator_permutation(&self, i: usize) -> Vec<usize> {
        self.rows.iter().map(|r| r[2 * i].expect("complete table")).collect()
    }

    /// Coset reached from `coset` by reading `w` left to right.
    pub fn trace(&self, coset: usize, w: &Word) -> Option<usize> {
        w.columns().into_iter().try_fold(coset, |c, x| self.rows[c][x])
    }

    /// Renumbers a complete table so that `start` becomes coset 0 and the rest
    /// follow in order of first appearance (rows, then columns).
    pub fn standardized_from(&self, start: usize) -> CosetTable {
        let n = self.len();
        let mut new_of = vec![NONE; n];
        let mut old_of = Vec::with_capacity(n);
        new_of[start] = 0;
        old_of.push(start);
        let mut i = 0;
        while i < old_of.len() {
            for e in self.rows[old_of[i]].iter().flatten() {
                if new_of[*e] == NONE {
                    new_of[*e] = old_of.len();
                    old_of.push(*e);
                }
            }
            i += 1;
        }
        let rows = old_of.iter().map(|&o| self.rows[o].iter().map(|e| e.map(|x| new_of[x])).collect()).collect();
        CosetTable { rank: self.rank, rows }
    }

    /// Number of distinct conjugates of the subgroup this complete table
    /// describes: `[G : N_G(H)]`, the index over the number of cosets whose
    /// stabilizer is `H` itself.
    pub fn conjugate_count(&self) -> usize {
        let same = (0..self.len()).filter(|&a| a == 0 || self.standardized_from(a) == *self).count();
        self.len() / same
    }

    /// Checks that the table is complete, its columns are mutually inverse
    /// permutations, every relator fixes every coset, every subgroup word
    /// fixes coset 0, and the action is transitive.
    pub fn verify(&self, presentation: &Presentation) -> Result<(), String> {
        if !self.is_complete() {
            return Err("table has undefined entries".into());
        }
        for (c, row) in self.rows.iter().enumerate() {
            for (x, e) in row.iter().enumerate() {
                let d = e.expect("complete");
                if self.rows[d][x ^ 1] != Some(c) {
                    return Err(format!("column {x} is not inverse-consistent at coset {c}"));
                }
            }
        }
        for r in &presentation.relators {
            for c in 0..self.len() {
                if self.trace(c, r) != Some(c) {
                    return Err(format!("relator {} moves coset {c}", presentation.format_word(r)));
                }
            }
        }
        for w in presentation.subgroup_words.iter().flatten() {
            if self.trace(0, w) != Some(0) {
                return Err(format!("subgroup word {} moves coset 0", presentation.format_word(w)));
            }
        }
        if self.standardized_from(0).len() != self.len() {
            return Err("action is not transitive".into());
        }
        Ok(())
    }
}

struct Enumerator {
    cols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    max_cosets: usize,
}

impl Enumerator {
    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = c;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn alive(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), FgError> {
        if self.table.len() >= self.max_cosets {
            return Err(FgError::CosetLimitExceeded { limit: self.max_cosets });
        }
        let d = self.table.len();
        self.table.push(vec![NONE; self.cols]);
        self.parent.push(d);
        self.table[c][x] = d;
        self.table[d][x ^ 1] = c;
        Ok(())
    }

    fn merge(&mut self, a: usize, b: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (keep, drop) = (a.min(b), a.max(b));
            self.parent[drop] = keep;
            queue.push(drop);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.table[e][x];
                if f == NONE {
                    continue;
                }
                self.table[f][x ^ 1] = NONE;
                let (e1, f1) = (self.rep(e), self.rep(f));
                if self.table[e1][x] != NONE {
                    let t = self.table[e1][x];
                    self.merge(f1, t, &mut queue);
                } else if self.table[f1][x ^ 1] != NONE {
                    let t = self.table[f1][x ^ 1];
                    self.merge(e1, t, &mut queue);
                } else {
                    self.table[e1][x] = f1;
                    self.table[f1][x ^ 1] = e1;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, alpha: usize, w: &[usize]) -> Result<(), FgError> {
        let r = w.len();
        let (mut f, mut b) = (alpha, alpha);
        let (mut i, mut j) = (0usize, r);
        loop {
            while i < r && self.table[f][w[i]] != NONE {
                f = self.table[f][w[i]];
                i += 1;
            }
            if i == r {
                if f != alpha {
                    self.coincidence(f, alpha);
                }
                return Ok(());
            }
            while j > i && self.table[b][w[j - 1] ^ 1] != NONE {
                b = self.table[b][w[j - 1] ^ 1];
                j -= 1;
            }
            if j < i + 1 {
                // Both scans met with an entry left over: j == i.
                self.coincidence(f, b);
                return Ok(());
            } else if j == i + 1 {
                self.table[f][w[i]] = b;
                self.table[b][w[i] ^ 1] = f;
                return Ok(());
            } else {
                self.define(f, w[i])?;
            }
        }
    }
}

/// Enumerates the right cosets of `H = ⟨subgroup_words⟩` (trivial if absent)
/// in the presented group.
///
/// Fails with [`FgError::CosetLimitExceeded`] if more than `max_cosets`
/// cosets get defined, which happens both for infinite index and for finite
/// index with an insufficient budget.
pub fn coset_enumerate(p: &Presentation, max_cosets: usize) -> Result<CosetTable, FgError> {
    let cols = 2 * p.rank();
    let relators: Vec<Vec<usize>> = p.relators.iter().map(Word::columns).collect();
    let subgroup: Vec<Vec<usize>> = p.subgroup_words.iter().flatten().map(Word::columns).collect();
    let mut e = Enumerator { cols, table: vec![vec![NONE; cols]], parent: vec![0], max_cosets: max_cosets.max(1) };
    for w in &subgroup {
        e.scan_and_fill(0, w)?;
    }
    let mut alpha = 0;
    while alpha < e.table.len() {
        for r in &relators {
            if !e.alive(alpha) {
                break;
            }
            e.scan_and_fill(alpha, r)?;
        }
        if e.alive(alpha) {
            for x in 0..cols {
                if e.table[alpha][x] == NONE {
                    e.define(alpha, x)?;
                }
            }
        }
        alpha += 1;
    }

    let live: Vec<usize> = (0..e.table.len()).filter(|&c| e.alive(c)).collect();
    let mut compact = vec![NONE; e.table.len()];
    for (i, &c) in live.iter().enumerate() {
        compact[c] = i;
    }
    let rows = live.iter().map(|&c| e.table[c].iter().map(|&d| compact[d]).collect()).collect();
    let table = CosetTable::from_raw(p.rank(), rows);
    debug_assert!(table.is_complete());
    Ok(table.standardized_from(0))
}

/// The permutation group induced on the cosets, and the stabilizer of coset 0.
///
/// The kernel of this action is the core of `H`, which lies inside `H`, so
/// the interval above the stabilizer in the image matches the interval
/// `[H, G]` together with all indices.
pub fn coset_action_group(table: &CosetTable) -> Result<(FiniteGroup, Subgroup), FgError> {
    coset_action_group_with_limit(table, DEFAULT_MAX_ORDER)
}

pub fn coset_action_group_with_limit(table: &CosetTable, max_order: usize) -> Result<(FiniteGroup, Subgroup), FgError> {
    if !table.is_complete() {
        return Err(FgError::IncompleteTable);
    }
    let gens: Vec<Vec<usize>> = (0..table.rank()).map(|i| table.generator_permutation(i)).collect();
    let (group, perms) = permutation_closure(table.len(), &gens, None, max_order)?;
    let stab: Vec<usize> = perms.iter().enumerate().filter(|(_, p)| p[0] == 0).map(|(g, _)| g).collect();
    let h = Subgroup::from_members(&group, &stab)?;
    Ok((group, h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fg::parse_presentation;

    fn enumerate(text: &str) -> CosetTable {
        let p = parse_presentation(text).unwrap();
        let t = coset_enumerate(&p, DEFAULT_MAX_COSETS).unwrap();
        t.verify(&p).unwrap();
        t
    }

    #[test]
    fn cyclic_and_symmetric() {
        assert_eq!(enumerate("< a | a^4 >").len(), 4);
        assert_eq!(enumerate("< a, b | a^2, b^3, (a b)^2 >").len(), 6);
        assert_eq!(enumerate("< a, b | [a,b] > ; H = a^2, b").len(), 2);
        assert_eq!(enumerate("< a, b | a^2, b^3, (a b)^2 > ; H = a").len(), 3);
        assert_eq!(enumerate("< | >").len(), 1);
    }

    #[test]
    fn larger_enumerations() {
        // A5 = <a, b | a^2, b^3, (ab)^5>
        assert_eq!(enumerate("< a, b | a^2, b^3, (a b)^5 >").len(), 60);
        // Q8
        assert_eq!(enumerate("< a, b | a^4, a^2 = b^2, b^-1 a b = a^-1 >").len(), 8);
        // Z2 x Z2 quotient of Z^2
        assert_eq!(enumerate("< a, b | [a,b] > ; H = a^2, b^2").len(), 4);
        // Coincidences collapse everything: <a | a^3, a^2> is trivial.
        assert_eq!(enumerate("< a | a^3, a^2 >").len(), 1);
    }

    #[test]
    fn infinite_index_does_not_close() {
        let p = parse_presentation("< a | >").unwrap();
        assert_eq!(coset_enumerate(&p, 50), Err(FgError::CosetLimitExceeded { limit: 50 }));
        let p = parse_presentation("< a, b | [a,b] > ; H = a").unwrap();
        assert!(coset_enumerate(&p, 200).is_err());
    }

    #[test]
    fn action_groups() {
        let t = enumerate("< a | a^4 > ; H = a^2");
        let (g, h) = coset_action_group(&t).unwrap();
        assert_eq!(g.order(), 2);
        assert!(h.is_trivial());

        let t = enumerate("< a, b | a^2, b^3, (a b)^2 > ; H = a");
        let (g, h) = coset_action_group(&t).unwrap();
        assert_eq!((g.order(), h.order(), h.index()), (6, 2, 3));

        let t = enumerate("< a, b | a^2, b^3, (a b)^2 >");
        let (g, h) = coset_action_group(&t).unwrap();
        assert_eq!(g.order(), 6);
        assert!(h.is_trivial());
    }

    #[test]
    fn conjugate_counts() {
        // Order-2 subgroups of S3 have 3 conjugates; A3 is normal.
        assert_eq!(enumerate("< a, b | a^2, b^3, (a b)^2 > ; H = a").conjugate_count(), 3);
        assert_eq!(enumerate("< a, b | a^2, b^3, (a b)^2 > ; H = b").conjugate_count(), 1);
    }
}
