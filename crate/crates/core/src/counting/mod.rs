//! Counting configurations by least period.
//!
//! The generic route is [`psi`]: Möbius inversion over the interval `[H, G]`
//! of the subgroup lattice. [`closed_form`] holds the fast paths for cyclic
//! and elementary abelian quotients, [`aut`] the orbit-class decomposition
//! of `Aut(A^G)`, and [`classify`] / [`table`] the small-value scans.

pub mod aut;
pub mod classify;
pub mod closed_form;
pub mod necklace;
pub mod table;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError, Subgroup, SubgroupId, SubgroupLattice};

pub use aut::{aut_structure, AutDescription, AutFactor};
pub use classify::{classify_small_alpha, Catalog, Classification, ClassifiedCell, ScanCertificate};
pub use closed_form::{classical_mobius, is_prime, psi_cyclic, psi_elementary_p2, psi_prime_power};
pub use necklace::{is_lyndon, lyndon_words, necklace_count};
pub use table::{table_small_values, SmallValueTable, TABLE_ROWS};

/// Largest index `[G:H]` any counting routine will exponentiate by.
pub const MAX_INDEX: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("alphabet size {q} is below 2")]
    AlphabetTooSmall { q: u64 },
    #[error("index {index} exceeds the limit of {limit}")]
    IndexLimitExceeded { index: u64, limit: usize },
    #[error("interval [H, G] is not a chain")]
    NotAChain,
    #[error("invalid chain indices: [G:H] = {index}, [G:H1] = {cover_index}")]
    InvalidChain { index: u64, cover_index: u64 },
    #[error("{p} is not prime")]
    NotPrime { p: u64 },
    #[error("{numerator} is not divisible by {denominator}")]
    DivisibilityViolation { numerator: BigUint, denominator: u64 },
    #[error("catalog does not contain every group of order {order}")]
    CatalogIncomplete { order: usize },
    #[error("enumeration budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Serde helpers writing big integers (and `q`) as decimal strings.
pub(crate) mod decimal {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// One summand `μ(H, K) · q^[G:K]` of the inversion formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub subgroup_members: Vec<usize>,
    #[serde(with = "decimal")]
    pub mu: BigInt,
    pub index: usize,
}

/// Least-period counts for one subgroup `H` of one group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub group: String,
    pub subgroup_members: Vec<usize>,
    #[serde(with = "decimal")]
    pub q: u64,
    /// `[G:H]`
    pub index: usize,
    /// `|[H]|`
    pub class_size: usize,
    /// `ψ_H`
    #[serde(with = "decimal")]
    pub psi: BigUint,
    /// `ψ_[H]`
    #[serde(with = "decimal")]
    pub psi_class: BigUint,
    /// `α_[H]`
    #[serde(with = "decimal")]
    pub alpha: BigUint,
    pub terms: Vec<Term>,
}

impl CountReport {
    /// Re-evaluates `Σ μ(H,K) q^[G:K]` from the stored terms.
    pub fn term_sum(&self) -> BigInt {
        self.terms.iter().map(|t| &t.mu * BigInt::from(fix_count(t.index, self.q))).sum()
    }
}

/// `|Fix(H)| = q^[G:H]`.
pub fn fix_count(index: usize, q: u64) -> BigUint {
    BigUint::from(q).pow(index as u32)
}

pub(crate) fn check_q(q: u64) -> Result<(), CountError> {
    if q < 2 {
        Err(CountError::AlphabetTooSmall { q })
    } else {
        Ok(())
    }
}

pub(crate) fn check_index(index: u64) -> Result<(), CountError> {
    if index as u128 > MAX_INDEX as u128 {
        Err(CountError::IndexLimitExceeded { index, limit: MAX_INDEX })
    } else {
        Ok(())
    }
}

fn to_nonnegative(v: BigInt) -> BigUint {
    match v.sign() {
        Sign::Minus => panic!("negative least-period count {v}"),
        _ => v.magnitude().clone(),
    }
}

/// `ψ_H(G;A)` alone, without building a report.
pub fn psi_value(lattice: &SubgroupLattice, h: SubgroupId, q: u64) -> Result<BigUint, CountError> {
    check_q(q)?;
    let mu = lattice.mobius_row(h);
    let mut sum = BigInt::zero();
    for (k, m) in lattice.above(h).iter().zip(mu) {
        if !m.is_zero() {
            sum += m * BigInt::from(fix_count(lattice.subgroup(*k).index(), q));
        }
    }
    Ok(to_nonnegative(sum))
}

/// Full report for `H`: `ψ_H`, `ψ_[H]`, `α_[H]` and the expanded summands.
pub fn psi(lattice: &SubgroupLattice, h: SubgroupId, q: u64) -> Result<CountReport, CountError> {
    check_q(q)?;
    let sub = lattice.subgroup(h);
    check_index(sub.index() as u64)?;
    let terms: Vec<Term> = lattice
        .above(h)
        .iter()
        .zip(lattice.mobius_row(h))
        .map(|(&k, mu)| {
            let ks = lattice.subgroup(k);
            Term { subgroup_members: ks.members().to_vec(), mu: mu.clone(), index: ks.index() }
        })
        .collect();
    let sum: BigInt = terms.iter().map(|t| &t.mu * BigInt::from(fix_count(t.index, q))).sum();
    let report = CountReport {
        group: lattice.group().display_label(),
        subgroup_members: sub.members().to_vec(),
        q,
        index: sub.index(),
        class_size: lattice.class_size(h),
        psi: to_nonnegative(sum),
        psi_class: BigUint::zero(),
        alpha: BigUint::zero(),
        terms,
    };
    alpha_from_psi(report)
}

/// Fills `psi_class = |[H]| ψ_H` and `alpha = ψ_[H] / [G:H]`.
pub fn alpha_from_psi(mut report: CountReport) -> Result<CountReport, CountError> {
    report.psi_class = &report.psi * BigUint::from(report.class_size);
    let (alpha, rem) = report.psi_class.div_rem(&BigUint::from(report.index));
    if !rem.is_zero() {
        return Err(CountError::DivisibilityViolation {
            numerator: report.psi_class.clone(),
            denominator: report.index as u64,
        });
    }
    report.alpha = alpha;
    Ok(report)
}

/// `q^[G:H] − q^[G:H₁]` for an interval `[H, G]` that is a chain with `H₁`
/// covering `H`.
pub fn psi_chain(index: u64, cover_index: u64, q: u64) -> Result<BigUint, CountError> {
    check_q(q)?;
    if cover_index == 0 || cover_index >= index || !index.is_multiple_of(cover_index) {
        return Err(CountError::InvalidChain { index, cover_index });
    }
    check_index(index)?;
    Ok(fix_count(index as usize, q) - fix_count(cover_index as usize, q))
}

/// [`psi_chain`] after checking against the lattice that `[H, G]` really is a
/// chain of length at least one.
pub fn psi_chain_checked(lattice: &SubgroupLattice, h: SubgroupId, q: u64) -> Result<BigUint, CountError> {
    let up = lattice.above(h);
    if up.windows(2).any(|w| !lattice.leq(w[0], w[1])) {
        return Err(CountError::NotAChain);
    }
    let index = lattice.subgroup(h).index() as u64;
    let cover_index = up.get(1).map_or(index, |&k| lattice.subgroup(k).index() as u64);
    psi_chain(index, cover_index, q)
}

/// Least-period count for a normal subgroup via its quotient: the report for
/// the trivial subgroup of `quotient = G/H`.
pub fn psi_normal(quotient: &FiniteGroup, q: u64) -> Result<CountReport, CountError> {
    let lattice = SubgroupLattice::new(quotient.clone())?;
    psi(&lattice, lattice.trivial(), q)
}

/// [`psi_normal`] for `G/N`, forming the quotient first.
pub fn psi_normal_subgroup(group: &FiniteGroup, n: &Subgroup, q: u64) -> Result<CountReport, CountError> {
    psi_normal(&group.quotient(n)?, q)
}
