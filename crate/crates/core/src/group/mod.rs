//! Finite groups as explicit multiplication tables, their subgroups, and the
//! subgroup lattice with its Möbius function.

mod io;
mod lattice;
mod structure;
mod subgroup;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

pub use io::{parse_cayley_table, parse_permutations, PermutationInput};
pub use lattice::{SubgroupId, SubgroupLattice, DEFAULT_LATTICE_LIMIT};
pub use structure::GroupDescriptor;
pub use subgroup::{BitSet, Subgroup};

/// Groups up to this order get the O(n³) associativity check on construction.
pub const DEFAULT_ASSOCIATIVITY_BOUND: usize = 256;
/// Largest closure [`FiniteGroup::from_permutations`] will build by default.
pub const DEFAULT_MAX_ORDER: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Line::Row => "row",
            Line::Column => "column",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("empty multiplication table")]
    EmptyTable,
    #[error("row {row} has {len} entries, expected {expected}")]
    RaggedTable { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is outside 0..{order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("not a Latin square: {line} {index} repeats element {element}")]
    NotLatinSquare { line: Line, index: usize, element: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("generator {generator} is not a permutation of 0..{degree}")]
    NotAPermutation { generator: usize, degree: usize },
    #[error("group order exceeds the limit of {limit}")]
    OrderLimitExceeded { limit: usize },
    #[error("group of order {order} exceeds the subgroup lattice limit of {limit}")]
    LatticeLimitExceeded { order: usize, limit: usize },
    #[error("element set is not a subgroup")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not in this lattice")]
    UnknownSubgroup,
    #[error("subgroups {lower} and {upper} are not comparable")]
    NotComparable { lower: usize, upper: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A finite group on the element ids `0..n`, with `0` the identity.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    label: Option<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("label", &self.label).field("order", &self.order).finish()
    }
}

impl FiniteGroup {
    /// Validates a Cayley table and relabels elements so the identity is `0`.
    pub fn from_cayley_table(table: &[Vec<usize>], label: Option<&str>) -> Result<Self, GroupError> {
        Self::from_cayley_table_checked(table, label, DEFAULT_ASSOCIATIVITY_BOUND)
    }

    /// Like [`FiniteGroup::from_cayley_table`] with an explicit bound for the
    /// associativity check.
    pub fn from_cayley_table_checked(
        table: &[Vec<usize>],
        label: Option<&str>,
        associativity_bound: usize,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::EmptyTable);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::RaggedTable { row, len: r.len(), expected: n });
            }
            if let Some((col, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::EntryOutOfRange { row, col, value, order: n });
            }
        }

        let mut seen = vec![usize::MAX; n];
        for (i, r) in table.iter().enumerate() {
            for &v in r {
                if seen[v] == i {
                    return Err(GroupError::NotLatinSquare { line: Line::Row, index: i, element: v });
                }
                seen[v] = i;
            }
        }
        seen.fill(usize::MAX);
        for c in 0..n {
            for r in table {
                let v = r[c];
                if seen[v] == c {
                    return Err(GroupError::NotLatinSquare { line: Line::Column, index: c, element: v });
                }
                seen[v] = c;
            }
        }

        let e = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g)).ok_or(GroupError::NoIdentity)?;
        for (g, r) in table.iter().enumerate() {
            let right = r.iter().position(|&v| v == e);
            match right {
                Some(h) if table[h][g] == e => {}
                _ => return Err(GroupError::NoInverse { element: g }),
            }
        }
        if n <= associativity_bound {
            for a in 0..n {
                for b in 0..n {
                    let ab = table[a][b];
                    for c in 0..n {
                        if table[ab][c] != table[a][table[b][c]] {
                            return Err(GroupError::NotAssociative { a, b, c });
                        }
                    }
                }
            }
        }

        // Swap e and 0 so the identity becomes element 0.
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[relabel(a) * n + relabel(b)] = relabel(table[a][b]) as u32;
            }
        }
        Ok(Self::from_flat_table(n, mul, label.map(str::to_owned)))
    }

    /// Closes permutations of `0..degree` under composition.
    ///
    /// Products follow the right-action convention: `a * b` applies `a` first,
    /// then `b`. Elements are numbered identity first, then in breadth-first
    /// discovery order.
    pub fn from_permutations(
        degree: usize,
        generators: &[Vec<usize>],
        label: Option<&str>,
    ) -> Result<Self, GroupError> {
        Self::from_permutations_with_limit(degree, generators, label, DEFAULT_MAX_ORDER)
    }

    pub fn from_permutations_with_limit(
        degree: usize,
        generators: &[Vec<usize>],
        label: Option<&str>,
        max_order: usize,
    ) -> Result<Self, GroupError> {
        permutation_closure(degree, generators, label, max_order).map(|(g, _)| g)
    }

    pub(crate) fn from_flat_table(order: usize, mul: Vec<u32>, label: Option<String>) -> Self {
        let mut inv = vec![0u32; order];
        for a in 0..order {
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        Self { order, mul, inv, label }
    }

    /// The cyclic group of order `n` (addition modulo `n`).
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs positive order");
        let mul = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        Self::from_flat_table(n, mul, Some(format!("Z{n}")))
    }

    /// The direct sum `Z_{m_1} ⊕ … ⊕ Z_{m_k}` in mixed-radix element order
    /// (first factor most significant).
    pub fn abelian(moduli: &[u64], max_order: usize) -> Result<Self, GroupError> {
        let mut order: usize = 1;
        for &m in moduli {
            order = order
                .checked_mul(m as usize)
                .filter(|&o| o <= max_order)
                .ok_or(GroupError::OrderLimitExceeded { limit: max_order })?;
        }
        let digits = |mut x: usize| {
            let mut d = vec![0usize; moduli.len()];
            for (slot, &m) in d.iter_mut().zip(moduli).rev() {
                *slot = x % m as usize;
                x /= m as usize;
            }
            d
        };
        let coords: Vec<Vec<usize>> = (0..order).map(digits).collect();
        let mut mul = vec![0u32; order * order];
        for a in 0..order {
            for b in 0..order {
                let mut x = 0usize;
                for (i, &m) in moduli.iter().enumerate() {
                    x = x * m as usize + (coords[a][i] + coords[b][i]) % m as usize;
                }
                mul[a * order + b] = x as u32;
            }
        }
        let name = moduli.iter().filter(|&&m| m > 1).map(|m| format!("Z{m}")).collect::<Vec<_>>().join("x");
        let label = if name.is_empty() { "1".to_owned() } else { name };
        Ok(Self::from_flat_table(order, mul, Some(label)))
    }

    pub fn trivial() -> Self {
        Self::from_flat_table(1, vec![0], Some("1".to_owned()))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn display_label(&self) -> String {
        self.label.clone().unwrap_or_else(|| format!("G{}", self.order))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// The multiplication table as rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup generated by `gens`.
    pub fn generated_by(&self, gens: &[usize]) -> Subgroup {
        let mut bits = BitSet::new(self.order);
        bits.insert(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if bits.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Subgroup::from_bits_unchecked(bits, self.order)
    }

    pub fn whole(&self) -> Subgroup {
        let mut bits = BitSet::new(self.order);
        (0..self.order).for_each(|g| {
            bits.insert(g);
        });
        Subgroup::from_bits_unchecked(bits, self.order)
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        self.generated_by(&[])
    }

    /// `g H g⁻¹`.
    pub fn conjugate_subgroup(&self, g: usize, h: &Subgroup) -> Subgroup {
        let mut bits = BitSet::new(self.order);
        for &x in h.members() {
            bits.insert(self.conjugate(g, x));
        }
        Subgroup::from_bits_unchecked(bits, self.order)
    }

    /// `N_G(H) = {g : gHg⁻¹ = H}`.
    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let mut bits = BitSet::new(self.order);
        for g in 0..self.order {
            if h.members().iter().all(|&x| h.contains(self.conjugate(g, x))) {
                bits.insert(g);
            }
        }
        Subgroup::from_bits_unchecked(bits, self.order)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        (0..self.order).all(|g| h.members().iter().all(|&x| h.contains(self.conjugate(g, x))))
    }

    /// `G / N` on the cosets of `N`; cosets are numbered by their smallest
    /// member, so the coset `N` itself is element 0.
    pub fn quotient(&self, n: &Subgroup) -> Result<FiniteGroup, GroupError> {
        if n.group_order() != self.order {
            return Err(GroupError::NotASubgroup);
        }
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset_of[g] == usize::MAX {
                let id = reps.len();
                reps.push(g);
                for &x in n.members() {
                    coset_of[self.mul(g, x)] = id;
                }
            }
        }
        let m = reps.len();
        let mut mul = vec![0u32; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                mul[i * m + j] = coset_of[self.mul(a, b)] as u32;
            }
        }
        let label = format!("{}/N{}", self.display_label(), n.order());
        Ok(FiniteGroup::from_flat_table(m, mul, Some(label)))
    }

    /// The subgroup `s` as a group in its own right; element `i` of the result
    /// is `s.members()[i]`.
    pub fn restrict(&self, s: &Subgroup) -> FiniteGroup {
        let members = s.members();
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let m = members.len();
        let mut mul = vec![0u32; m * m];
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                mul[i * m + j] = pos[&self.mul(a, b)] as u32;
            }
        }
        FiniteGroup::from_flat_table(m, mul, None)
    }

    /// The section `upper / lower`, for `lower` normal in `upper`.
    pub fn section(&self, upper: &Subgroup, lower: &Subgroup) -> Result<FiniteGroup, GroupError> {
        if !lower.is_subgroup_of(upper) {
            return Err(GroupError::NotASubgroup);
        }
        let sub = self.restrict(upper);
        let pos: Vec<usize> =
            lower.members().iter().map(|g| upper.members().binary_search(g).expect("lower ⊆ upper")).collect();
        let lower_in_sub = Subgroup::from_members(&sub, &pos)?;
        sub.quotient(&lower_in_sub)
    }
}

/// Closure of a permutation generating set; also returns the permutation of
/// every element, in element-id order.
pub(crate) fn permutation_closure(
    degree: usize,
    generators: &[Vec<usize>],
    label: Option<&str>,
    max_order: usize,
) -> Result<(FiniteGroup, Vec<Vec<u32>>), GroupError> {
    let degree = degree.max(1);
    let mut gens: Vec<Vec<u32>> = Vec::with_capacity(generators.len());
    for (i, g) in generators.iter().enumerate() {
        let mut hit = vec![false; degree];
        if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut hit[x], true)) {
            return Err(GroupError::NotAPermutation { generator: i, degree });
        }
        gens.push(g.iter().map(|&x| x as u32).collect());
    }

    let identity: Vec<u32> = (0..degree as u32).collect();
    let mut index: HashMap<Vec<u32>, usize> = HashMap::from([(identity.clone(), 0)]);
    let mut elements = vec![identity];
    let mut next = 0;
    while next < elements.len() {
        for g in &gens {
            let p: Vec<u32> = elements[next].iter().map(|&x| g[x as usize]).collect();
            if !index.contains_key(&p) {
                if elements.len() == max_order {
                    return Err(GroupError::OrderLimitExceeded { limit: max_order });
                }
                index.insert(p.clone(), elements.len());
                elements.push(p);
            }
        }
        next += 1;
    }

    let n = elements.len();
    let mut mul = vec![0u32; n * n];
    let mut scratch = vec![0u32; degree];
    for (a, pa) in elements.iter().enumerate() {
        for (b, pb) in elements.iter().enumerate() {
            for (s, &x) in scratch.iter_mut().zip(pa) {
                *s = pb[x as usize];
            }
            mul[a * n + b] = index[&scratch] as u32;
        }
    }
    let group = FiniteGroup::from_flat_table(n, mul, label.map(str::to_owned));
    Ok((group, elements))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_mod(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    #[test]
    fn trivial_table() {
        let g = FiniteGroup::from_cayley_table(&[vec![0]], None).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.inv(0), 0);
    }

    #[test]
    fn z2_and_z6_tables() {
        let g = FiniteGroup::from_cayley_table(&[vec![0, 1], vec![1, 0]], Some("Z2")).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.mul(1, 1), 0);
        let z6 = FiniteGroup::from_cayley_table(&z_mod(6), None).unwrap();
        assert_eq!(z6.inv(2), 4);
        assert!(z6.is_abelian());
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // Z3 written with identity 2: x*y = (x + y + 1) mod 3.
        let t: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b + 1) % 3).collect()).collect();
        let g = FiniteGroup::from_cayley_table(&t, None).unwrap();
        for x in 0..3 {
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, g.inv(x)), 0);
        }
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(
            FiniteGroup::from_cayley_table(&[vec![0, 0], vec![1, 0]], None),
            Err(GroupError::NotLatinSquare { line: Line::Row, index: 0, element: 0 })
        );
        assert!(matches!(
            FiniteGroup::from_cayley_table(&[vec![0, 2], vec![1, 0]], None),
            Err(GroupError::EntryOutOfRange { row: 0, col: 1, value: 2, .. })
        ));
        // Latin square without identity: x*y = -(x+y) mod 3.
        assert_eq!(
            FiniteGroup::from_cayley_table(&[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]], None),
            Err(GroupError::NoIdentity)
        );
        // A loop of order 5 that is a Latin square with identity but not associative.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_cayley_table(&loop5, None), Err(GroupError::NotAssociative { .. })));
    }

    #[test]
    fn permutation_closures() {
        let z2 = FiniteGroup::from_permutations(2, &[vec![1, 0]], None).unwrap();
        assert_eq!(z2.order(), 2);
        let s3 = FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], None).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        let one = FiniteGroup::from_permutations(1, &[], None).unwrap();
        assert_eq!(one.order(), 1);
        assert_eq!(
            FiniteGroup::from_permutations_with_limit(4, &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]], None, 10),
            Err(GroupError::OrderLimitExceeded { limit: 10 })
        );
        assert!(matches!(
            FiniteGroup::from_permutations(3, &[vec![0, 0, 1]], None),
            Err(GroupError::NotAPermutation { generator: 0, .. })
        ));
    }

    #[test]
    fn s3_by_brute_composition() {
        // All 6 permutations of 3 points are reached, and the table is a group.
        let s3 = FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], None).unwrap();
        let again = FiniteGroup::from_cayley_table(&s3.table(), None).unwrap();
        assert_eq!(again, s3);
        let orders: Vec<usize> = (0..6).map(|g| s3.element_order(g)).collect();
        let mut sorted = orders.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn quotients() {
        let z6 = FiniteGroup::cyclic(6);
        let n = z6.generated_by(&[3]);
        let q = z6.quotient(&n).unwrap();
        assert_eq!(q.order(), 3);
        assert_eq!(q.element_order(1), 3);
        assert_eq!(z6.quotient(&z6.whole()).unwrap().order(), 1);
        let same = z6.quotient(&z6.trivial_subgroup()).unwrap();
        assert_eq!(same.table(), z6.table());

        let s3 = FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], None).unwrap();
        let t = (0..6).find(|&g| s3.element_order(g) == 2).unwrap();
        assert_eq!(s3.quotient(&s3.generated_by(&[t])), Err(GroupError::NotNormal));
    }

    #[test]
    fn normalizers() {
        let s3 = FiniteGroup::from_permutations(3, &[vec![1, 2, 0], vec![1, 0, 2]], None).unwrap();
        let t = (0..6).find(|&g| s3.element_order(g) == 2).unwrap();
        let h = s3.generated_by(&[t]);
        assert_eq!(s3.normalizer(&h), h);
        let r = (0..6).find(|&g| s3.element_order(g) == 3).unwrap();
        let a3 = s3.generated_by(&[r]);
        assert_eq!(s3.normalizer(&a3), s3.whole());
        assert_eq!(s3.normalizer(&s3.whole()), s3.whole());
    }

    #[test]
    fn abelian_direct_sum() {
        let g = FiniteGroup::abelian(&[2, 4], 64).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.label(), Some("Z2xZ4"));
        assert!(g.is_abelian());
        assert_eq!((0..8).map(|x| g.element_order(x)).max(), Some(4));
        assert_eq!(FiniteGroup::abelian(&[], 4).unwrap().order(), 1);
        assert!(FiniteGroup::abelian(&[100, 100], 1024).is_err());
    }
}
