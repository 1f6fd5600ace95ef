//! Brute-force ground truth for the counting formulas.
//!
//! Configurations `x: G → {0..q}` of a small finite group are enumerated
//! explicitly, the shift action `(g·x)(h) = x(g⁻¹h)` is applied position by
//! position, and stabilizers are read off directly. Nothing here touches the
//! Möbius function.
//!
//! A configuration is encoded as the integer `Σ_h x(h) · q^h`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::exec::Exec;
use crate::group::{FiniteGroup, Subgroup, SubgroupLattice};

/// Default cap on the number of configurations any oracle routine visits.
pub const DEFAULT_BUDGET: u64 = 1 << 24;

const CHUNK: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{needed} configurations exceed the enumeration budget of {budget}")]
    BudgetExceeded { needed: BigUint, budget: u64 },
    #[error("alphabet must have at least one letter")]
    EmptyAlphabet,
    #[error("subgroup belongs to a group of order {found}, expected {expected}")]
    ForeignSubgroup { found: usize, expected: usize },
}

fn check_budget(base: u64, exp: usize, budget: u64) -> Result<u64, OracleError> {
    if base == 0 {
        return Err(OracleError::EmptyAlphabet);
    }
    let needed = BigUint::from(base).pow(exp as u32);
    if needed > BigUint::from(budget) {
        return Err(OracleError::BudgetExceeded { needed, budget });
    }
    Ok(u64::try_from(needed).expect("within budget"))
}

/// Base-`q` digits of `code`, least significant first.
fn decode_into(mut code: u64, q: u64, digits: &mut [u64]) {
    for d in digits.iter_mut() {
        *d = code % q;
        code /= q;
    }
}

/// Advances base-`q` digits to the next code; wraps to zero after the last.
fn increment(digits: &mut [u64], q: u64) {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < q {
            return;
        }
        *d = 0;
    }
}

/// An element of `A^G`: `letters[h] = x(h)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub letters: Vec<u64>,
    pub q: u64,
}

impl Configuration {
    pub fn new(letters: Vec<u64>, q: u64) -> Self {
        assert!(letters.iter().all(|&a| a < q), "letter out of range");
        Self { letters, q }
    }

    pub fn constant(n: usize, letter: u64, q: u64) -> Self {
        Self::new(vec![letter; n], q)
    }

    pub fn decode(mut code: u64, n: usize, q: u64) -> Self {
        let letters = (0..n)
            .map(|_| {
                let d = code % q;
                code /= q;
                d
            })
            .collect();
        Self { letters, q }
    }

    /// `Σ_h x(h) q^h`, if it fits in a `u64`.
    pub fn encode(&self) -> Option<u64> {
        self.letters.iter().rev().try_fold(0u64, |acc, &a| acc.checked_mul(self.q)?.checked_add(a))
    }
}

/// Position permutations of the shift: `perms[g][h] = g·h`, so that
/// `(g·x)(g·h) = x(h)`.
pub struct ShiftTables<'a> {
    group: &'a FiniteGroup,
    perms: Vec<Vec<u32>>,
}

impl<'a> ShiftTables<'a> {
    pub fn new(group: &'a FiniteGroup) -> Self {
        let n = group.order();
        let perms = (0..n).map(|g| (0..n).map(|h| group.mul(g, h) as u32).collect()).collect();
        Self { group, perms }
    }

    pub fn group(&self) -> &FiniteGroup {
        self.group
    }

    pub fn perm(&self, g: usize) -> &[u32] {
        &self.perms[g]
    }

    /// `g·x`, with `(g·x)(h) = x(g⁻¹h)`.
    pub fn shift(&self, x: &Configuration, g: usize) -> Configuration {
        let mut letters = vec![0; x.letters.len()];
        for (h, &a) in x.letters.iter().enumerate() {
            letters[self.perms[g][h] as usize] = a;
        }
        Configuration { letters, q: x.q }
    }

    fn fixes(&self, x: &[u64], g: usize) -> bool {
        self.perms[g].iter().enumerate().all(|(h, &gh)| x[gh as usize] == x[h])
    }

    /// `G_x = {g : g·x = x}`.
    pub fn stabilizer(&self, x: &Configuration) -> Subgroup {
        let members: Vec<usize> = (0..self.group.order()).filter(|&g| self.fixes(&x.letters, g)).collect();
        Subgroup::from_members(self.group, &members).expect("stabilizers are subgroups")
    }

    /// Encoded `g·x` from encoded `x`, given `powers[h] = q^h`.
    fn shift_code(&self, letters: &[u64], g: usize, powers: &[u64]) -> u64 {
        letters.iter().zip(&self.perms[g]).map(|(&a, &gh)| a * powers[gh as usize]).sum()
    }
}

/// `ψ_H(G; q)` by enumeration.
///
/// Only `Fix(H)` is visited: an `H`-periodic configuration is constant on
/// each right coset `Hy`, so labelings of the `[G:H]` right cosets enumerate
/// it exactly. Each candidate's stabilizer is then compared with `H`.
pub fn brute_psi(group: &FiniteGroup, h: &Subgroup, q: u64, budget: u64, exec: Exec) -> Result<BigUint, OracleError> {
    let n = group.order();
    if h.group_order() != n {
        return Err(OracleError::ForeignSubgroup { found: h.group_order(), expected: n });
    }
    let total = check_budget(q, h.index(), budget)?;

    let mut coset_of = vec![usize::MAX; n];
    let mut cosets = 0;
    for y in 0..n {
        if coset_of[y] == usize::MAX {
            for &k in h.members() {
                coset_of[group.mul(k, y)] = cosets;
            }
            cosets += 1;
        }
    }
    // For each g outside H, the coset pairs (Hh, H(gh)) it must preserve.
    let outside: Vec<Vec<(usize, usize)>> = (0..n)
        .filter(|&g| !h.contains(g))
        .map(|g| {
            let mut pairs: Vec<(usize, usize)> = (0..n).map(|y| (coset_of[y], coset_of[group.mul(g, y)])).collect();
            pairs.sort_unstable();
            pairs.dedup();
            pairs.retain(|(a, b)| a != b);
            pairs
        })
        .collect();

    let count = exec.fold_range(
        0..total,
        CHUNK,
        0u64,
        |range| {
            let mut label = vec![0u64; cosets];
            decode_into(range.start, q, &mut label);
            let mut hits = 0;
            for _ in range {
                let exact = outside.iter().all(|pairs| pairs.iter().any(|&(a, b)| label[a] != label[b]));
                hits += exact as u64;
                increment(&mut label, q);
            }
            hits
        },
        |a, b| a + b,
    );
    Ok(BigUint::from(count))
}

/// `|Fix(H)| = |{x : H ≤ G_x}|` by scanning all of `A^G`.
pub fn brute_fix_count(
    group: &FiniteGroup,
    h: &Subgroup,
    q: u64,
    budget: u64,
    exec: Exec,
) -> Result<BigUint, OracleError> {
    let n = group.order();
    let total = check_budget(q, n, budget)?;
    let tables = ShiftTables::new(group);
    let count = exec.fold_range(
        0..total,
        CHUNK,
        0u64,
        |range| {
            let mut x = vec![0u64; n];
            decode_into(range.start, q, &mut x);
            let mut hits = 0;
            for _ in range {
                hits += h.members()[1..].iter().all(|&g| tables.fixes(&x, g)) as u64;
                increment(&mut x, q);
            }
            hits
        },
        |a, b| a + b,
    );
    Ok(BigUint::from(count))
}

/// Per-class totals from [`brute_orbit_census`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusEntry {
    /// `ψ_[H]`: configurations whose stabilizer lies in the class.
    pub psi_class: BigUint,
    /// `α_[H]`: orbits whose stabilizers lie in the class.
    pub alpha: BigUint,
}

/// Partitions all of `A^G` into orbits and tallies them by the conjugacy class
/// (as numbered by `lattice`) of their stabilizers.
///
/// Panics if an orbit's size differs from the index of its stabilizer.
pub fn brute_orbit_census(
    lattice: &SubgroupLattice,
    q: u64,
    budget: u64,
) -> Result<BTreeMap<usize, CensusEntry>, OracleError> {
    let group = lattice.group();
    let n = group.order();
    let total = check_budget(q, n, budget)?;
    let tables = ShiftTables::new(group);
    let powers: Vec<u64> = (0..n).map(|h| q.pow(h as u32)).collect();
    let mut visited = vec![0u64; (total as usize).div_ceil(64)];
    let mut census: BTreeMap<usize, CensusEntry> = BTreeMap::new();
    let mut orbit = Vec::with_capacity(n);

    for code in 0..total {
        let (w, b) = ((code / 64) as usize, code % 64);
        if visited[w] >> b & 1 == 1 {
            continue;
        }
        let x = Configuration::decode(code, n, q);
        orbit.clear();
        let mut stab = Vec::new();
        for g in 0..n {
            let y = tables.shift_code(&x.letters, g, &powers);
            if y == code {
                stab.push(g);
            }
            orbit.push(y);
        }
        orbit.sort_unstable();
        orbit.dedup();
        for &y in &orbit {
            visited[(y / 64) as usize] |= 1 << (y % 64);
        }
        let stab = Subgroup::from_members(group, &stab).expect("stabilizers are subgroups");
        assert_eq!(orbit.len(), stab.index(), "orbit size must equal the stabilizer index");
        let id = lattice.id_of(&stab).expect("every subgroup is in the lattice");
        let entry = census
            .entry(lattice.class_id(id))
            .or_insert(CensusEntry { psi_class: BigUint::zero(), alpha: BigUint::zero() });
        entry.psi_class += orbit.len();
        entry.alpha += 1u32;
    }
    Ok(census)
}

/// Number of `G`-orbits on `A^G` by Burnside's lemma:
/// `(1/|G|) Σ_g q^c(g)` with `c(g)` the cycle count of `h ↦ g·h`.
pub fn burnside_orbit_count(group: &FiniteGroup, q: u64, exec: Exec) -> BigUint {
    let n = group.order();
    let elements: Vec<usize> = (0..n).collect();
    let terms = exec.map(&elements, |&g| {
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut h = start;
            while !seen[h] {
                seen[h] = true;
                h = group.mul(g, h);
            }
        }
        BigUint::from(q).pow(cycles)
    });
    let sum: BigUint = terms.into_iter().sum();
    let (orbits, rem) = sum.div_rem(&BigUint::from(n));
    assert!(rem.is_zero(), "Burnside sum must be divisible by |G|");
    orbits
}
