use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BitSet, FiniteGroup, GroupError, Subgroup};

/// Default bound on the group order for exhaustive subgroup enumeration.
pub const DEFAULT_LATTICE_LIMIT: usize = 128;

/// Position of a subgroup in a lattice's canonical list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupId(pub usize);

impl SubgroupId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Every subgroup of a finite group, ordered canonically, with inclusion,
/// conjugacy classes, normalizers and a memoized Möbius function.
pub struct SubgroupLattice {
    group: FiniteGroup,
    subgroups: Vec<Subgroup>,
    lookup: HashMap<BitSet, SubgroupId>,
    /// `above[h]`: every K ⊇ H, in canonical order (H first).
    above: Vec<Vec<SubgroupId>>,
    below: Vec<Vec<SubgroupId>>,
    class_of: Vec<usize>,
    classes: Vec<Vec<SubgroupId>>,
    normalizers: Vec<SubgroupId>,
    /// `mu_rows[h][i] = μ(H, above[h][i])`, filled on first use.
    mu_rows: Vec<OnceLock<Vec<BigInt>>>,
}

impl fmt::Debug for SubgroupLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupLattice")
            .field("group", &self.group)
            .field("subgroups", &self.subgroups.len())
            .field("classes", &self.classes.len())
            .finish()
    }
}

impl SubgroupLattice {
    pub fn new(group: FiniteGroup) -> Result<Self, GroupError> {
        Self::with_limit(group, DEFAULT_LATTICE_LIMIT)
    }

    /// Enumerates all subgroups: cyclic subgroups first, then joins with cyclic
    /// subgroups until nothing new appears.
    pub fn with_limit(group: FiniteGroup, limit: usize) -> Result<Self, GroupError> {
        let n = group.order();
        if n > limit {
            return Err(GroupError::LatticeLimitExceeded { order: n, limit });
        }

        let mut found: HashMap<BitSet, Vec<usize>> = HashMap::new();
        let mut cyclic: Vec<(usize, Subgroup)> = Vec::new();
        for g in 0..n {
            let c = group.generated_by(&[g]);
            if !found.contains_key(c.bits()) {
                found.insert(c.bits().clone(), vec![g]);
                cyclic.push((g, c));
            }
        }
        let mut work: Vec<(Subgroup, Vec<usize>)> = cyclic.iter().map(|(g, c)| (c.clone(), vec![*g])).collect();
        while let Some((h, gens)) = work.pop() {
            for (g, c) in &cyclic {
                if c.is_subgroup_of(&h) {
                    continue;
                }
                let mut joined_gens = gens.clone();
                joined_gens.push(*g);
                let j = group.generated_by(&joined_gens);
                if !found.contains_key(j.bits()) {
                    found.insert(j.bits().clone(), joined_gens.clone());
                    work.push((j, joined_gens));
                }
            }
        }

        let mut subgroups: Vec<Subgroup> = found.into_keys().map(|b| Subgroup::from_bits_unchecked(b, n)).collect();
        subgroups.sort();
        let lookup: HashMap<BitSet, SubgroupId> =
            subgroups.iter().enumerate().map(|(i, s)| (s.bits().clone(), SubgroupId(i))).collect();

        let m = subgroups.len();
        let mut above = vec![Vec::new(); m];
        let mut below = vec![Vec::new(); m];
        for i in 0..m {
            for j in i..m {
                if subgroups[i].is_subgroup_of(&subgroups[j]) {
                    above[i].push(SubgroupId(j));
                    below[j].push(SubgroupId(i));
                }
            }
        }

        let mut class_of = vec![usize::MAX; m];
        let mut classes = Vec::new();
        let mut normalizers = Vec::with_capacity(m);
        for i in 0..m {
            let norm = group.normalizer(&subgroups[i]);
            normalizers.push(lookup[norm.bits()]);
            if class_of[i] != usize::MAX {
                continue;
            }
            let mut members = BTreeSet::new();
            for g in 0..n {
                let c = group.conjugate_subgroup(g, &subgroups[i]);
                members.insert(lookup[c.bits()]);
            }
            for id in &members {
                class_of[id.0] = classes.len();
            }
            classes.push(members.into_iter().collect::<Vec<_>>());
        }

        Ok(Self {
            group,
            subgroups,
            lookup,
            above,
            below,
            class_of,
            classes,
            normalizers,
            mu_rows: (0..m).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = SubgroupId> + '_ {
        (0..self.subgroups.len()).map(SubgroupId)
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, id: SubgroupId) -> &Subgroup {
        &self.subgroups[id.0]
    }

    pub fn id_of(&self, h: &Subgroup) -> Option<SubgroupId> {
        self.lookup.get(h.bits()).copied()
    }

    /// Looks up a subgroup by member list, validating it first.
    pub fn find(&self, members: &[usize]) -> Result<SubgroupId, GroupError> {
        let h = Subgroup::from_members(&self.group, members)?;
        self.id_of(&h).ok_or(GroupError::UnknownSubgroup)
    }

    pub fn trivial(&self) -> SubgroupId {
        SubgroupId(0)
    }

    pub fn whole(&self) -> SubgroupId {
        SubgroupId(self.subgroups.len() - 1)
    }

    pub fn leq(&self, h: SubgroupId, k: SubgroupId) -> bool {
        self.subgroups[h.0].is_subgroup_of(&self.subgroups[k.0])
    }

    /// All K with H ≤ K, in canonical order.
    pub fn above(&self, h: SubgroupId) -> &[SubgroupId] {
        &self.above[h.0]
    }

    /// All J with J ≤ K, in canonical order.
    pub fn below(&self, k: SubgroupId) -> &[SubgroupId] {
        &self.below[k.0]
    }

    /// The closed interval `[H, K]`.
    pub fn interval(&self, h: SubgroupId, k: SubgroupId) -> Result<Vec<SubgroupId>, GroupError> {
        if !self.leq(h, k) {
            return Err(GroupError::NotComparable { lower: h.0, upper: k.0 });
        }
        Ok(self.above[h.0].iter().copied().filter(|&j| self.leq(j, k)).collect())
    }

    pub fn meet(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        let bits = self.subgroups[a.0].bits().intersection(self.subgroups[b.0].bits());
        self.lookup[&bits]
    }

    pub fn join(&self, a: SubgroupId, b: SubgroupId) -> SubgroupId {
        // Least common element of both up-sets; `above` is sorted by order.
        *self.above[a.0].iter().find(|&&k| self.leq(b, k)).expect("the whole group lies above everything")
    }

    pub fn normalizer(&self, h: SubgroupId) -> SubgroupId {
        self.normalizers[h.0]
    }

    pub fn is_normal(&self, h: SubgroupId) -> bool {
        self.normalizers[h.0] == self.whole()
    }

    pub fn class_id(&self, h: SubgroupId) -> usize {
        self.class_of[h.0]
    }

    /// Conjugacy classes, each in canonical order; classes are ordered by their
    /// first member.
    pub fn classes(&self) -> &[Vec<SubgroupId>] {
        &self.classes
    }

    /// `[H] = {gHg⁻¹}` in canonical order.
    pub fn conjugacy_class(&self, h: SubgroupId) -> &[SubgroupId] {
        &self.classes[self.class_of[h.0]]
    }

    pub fn class_size(&self, h: SubgroupId) -> usize {
        self.conjugacy_class(h).len()
    }

    /// Möbius function of the subgroup lattice; zero unless `H ≤ K`.
    pub fn mobius(&self, h: SubgroupId, k: SubgroupId) -> BigInt {
        let up = &self.above[h.0];
        match up.binary_search(&k) {
            Ok(pos) => self.mobius_row(h)[pos].clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// `μ(H, K)` for every `K` in [`SubgroupLattice::above`]`(H)`, same order.
    ///
    /// μ(H,H) = 1 and μ(H,K) = −Σ_{H ≤ J < K} μ(H,J). Every J below K precedes
    /// it in canonical order, so one forward pass suffices.
    pub fn mobius_row(&self, h: SubgroupId) -> &[BigInt] {
        self.mu_rows[h.0].get_or_init(|| {
            let up = &self.above[h.0];
            let mut row: Vec<BigInt> = Vec::with_capacity(up.len());
            for (i, &k) in up.iter().enumerate() {
                if i == 0 {
                    row.push(BigInt::one());
                    continue;
                }
                let mut sum = BigInt::zero();
                for (j, &jd) in up[..i].iter().enumerate() {
                    if self.leq(jd, k) {
                        sum += &row[j];
                    }
                }
                row.push(-sum);
            }
            row
        })
    }
}
