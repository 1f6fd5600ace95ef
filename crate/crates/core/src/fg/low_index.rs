//! Subgroups of small index, one per conjugacy class, by backtracking over
//! partial coset tables.

use super::{CosetTable, FgError, Presentation, Word};

const NONE: usize = usize::MAX;

/// Largest `max_index` accepted by [`low_index_subgroups`].
pub const DEFAULT_LOW_INDEX_BUDGET: usize = 12;

struct Search<'a> {
    cols: usize,
    max_index: usize,
    relators: &'a [Vec<usize>],
    subgroup: &'a [Vec<usize>],
    found: Vec<CosetTable>,
}

#[derive(Clone)]
struct Partial {
    rows: Vec<Vec<usize>>,
}

enum Scan {
    Ok,
    Deduced,
    Conflict,
}

impl Partial {
    fn set(&mut self, c: usize, x: usize, d: usize) {
        self.rows[c][x] = d;
        self.rows[d][x ^ 1] = c;
    }

    fn scan(&mut self, c: usize, w: &[usize]) -> Scan {
        let r = w.len();
        let (mut f, mut i) = (c, 0);
        while i < r && self.rows[f][w[i]] != NONE {
            f = self.rows[f][w[i]];
            i += 1;
        }
        if i == r {
            return if f == c { Scan::Ok } else { Scan::Conflict };
        }
        let (mut b, mut j) = (c, r);
        while j > i && self.rows[b][w[j - 1] ^ 1] != NONE {
            b = self.rows[b][w[j - 1] ^ 1];
            j -= 1;
        }
        if j == i {
            if f == b {
                Scan::Ok
            } else {
                Scan::Conflict
            }
        } else if j == i + 1 {
            if self.rows[b][w[i] ^ 1] != NONE {
                return Scan::Conflict;
            }
            self.set(f, w[i], b);
            Scan::Deduced
        } else {
            Scan::Ok
        }
    }

    /// Scans every relator at every coset (and subgroup words at coset 0)
    /// until nothing more can be deduced.
    fn propagate(&mut self, relators: &[Vec<usize>], subgroup: &[Vec<usize>]) -> bool {
        loop {
            let mut changed = false;
            for w in subgroup {
                match self.scan(0, w) {
                    Scan::Conflict => return false,
                    Scan::Deduced => changed = true,
                    Scan::Ok => {}
                }
            }
            for c in 0..self.rows.len() {
                for w in relators {
                    match self.scan(c, w) {
                        Scan::Conflict => return false,
                        Scan::Deduced => changed = true,
                        Scan::Ok => {}
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn first_undefined(&self) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(c, row)| row.iter().position(|&e| e == NONE).map(|x| (c, x)))
    }

    /// False when renumbering from some other coset gives a table that is
    /// lexicographically smaller on the part defined so far.
    fn first_in_class(&self, subgroup: &[Vec<usize>]) -> bool {
        let n = self.rows.len();
        'start: for a in 1..n {
            // The new base point must contain the subgroup generators too.
            for w in subgroup {
                let mut c = a;
                for &x in w {
                    c = self.rows[c][x];
                    if c == NONE {
                        continue 'start;
                    }
                }
                if c != a {
                    continue 'start;
                }
            }
            let mut new_of = vec![NONE; n];
            let mut old_of = vec![a];
            new_of[a] = 0;
            for i in 0..n {
                for x in 0..self.cols() {
                    let ours = self.rows[i][x];
                    let theirs = self.rows[old_of[i]][x];
                    if ours == NONE || theirs == NONE {
                        continue 'start;
                    }
                    if new_of[theirs] == NONE {
                        new_of[theirs] = old_of.len();
                        old_of.push(theirs);
                    }
                    match new_of[theirs].cmp(&ours) {
                        std::cmp::Ordering::Less => return false,
                        std::cmp::Ordering::Greater => continue 'start,
                        std::cmp::Ordering::Equal => {}
                    }
                }
            }
        }
        true
    }

    fn cols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

impl Search<'_> {
    fn run(&mut self, mut t: Partial) {
        if !t.propagate(self.relators, self.subgroup) || !t.first_in_class(self.subgroup) {
            return;
        }
        let Some((c, x)) = t.first_undefined() else {
            self.found.push(CosetTable::from_raw(self.cols / 2, t.rows));
            return;
        };
        for d in 0..t.rows.len() {
            if t.rows[d][x ^ 1] == NONE {
                let mut next = t.clone();
                next.set(c, x, d);
                self.run(next);
            }
        }
        if t.rows.len() < self.max_index {
            let mut next = t;
            next.rows.push(vec![NONE; self.cols]);
            let d = next.rows.len() - 1;
            next.set(c, x, d);
            self.run(next);
        }
    }
}

/// Subgroups of index at most `max_index`, one per conjugacy class, ordered
/// by index and then by table.
///
/// When the presentation names subgroup words, only subgroups containing
/// them are listed.
pub fn low_index_subgroups(p: &Presentation, max_index: usize) -> Result<Vec<CosetTable>, FgError> {
    low_index_subgroups_with_budget(p, max_index, DEFAULT_LOW_INDEX_BUDGET)
}

pub fn low_index_subgroups_with_budget(
    p: &Presentation,
    max_index: usize,
    budget: usize,
) -> Result<Vec<CosetTable>, FgError> {
    if max_index == 0 || max_index > budget {
        return Err(FgError::BudgetExceeded { max_index, budget });
    }
    let cols = 2 * p.rank();
    let relators: Vec<Vec<usize>> = p.relators.iter().map(Word::columns).collect();
    let subgroup: Vec<Vec<usize>> = p.subgroup_words.iter().flatten().map(Word::columns).collect();
    let mut search = Search { cols, max_index, relators: &relators, subgroup: &subgroup, found: Vec::new() };
    search.run(Partial { rows: vec![vec![NONE; cols]] });
    let mut found = search.found;
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(found)
}
