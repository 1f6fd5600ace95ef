//! Exhaustive scan for small orbit counts `α_[H](G;A)` with `H` a proper
//! normal subgroup of finite index.
//!
//! With `H` normal, `α_[H](G;A) = α_[1](G/H;A)`, so the scan runs over finite
//! quotients `Q` of order `n ≥ 2`. Aperiodic configurations satisfy
//! `ψ_1(Q;q) ≥ q^n − q^(n−1)` and each orbit has `n` elements, hence
//!
//! ```text
//! α_[1](Q; q) ≥ (q^n − q^(n−1)) / n =: bound(n, q).
//! ```
//!
//! `bound` increases with `q`, and with `n` for `q = 2` (the ratio
//! `bound(n+1,2)/bound(n,2) = 2n/(n+1) ≥ 1`), while `bound(n, q) ≥ bound(n, 2)`.
//! So once `bound(n, 2) > α_max` no larger order can contribute, and for each
//! order only `q` up to the first failing value needs examining.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{decimal, fix_count, psi_value, CountError};
use crate::builtin::builtin;
use crate::exec::Exec;
use crate::group::{FiniteGroup, SubgroupLattice};

/// Number of isomorphism types of groups of order `n`, for `n < 32`.
const GROUP_COUNTS: [usize; 32] =
    [0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1];

/// A list of finite groups, claimed complete for some orders.
#[derive(Debug, Clone)]
pub struct Catalog {
    groups: Vec<FiniteGroup>,
}

/// Isomorphism invariant used to tell catalog entries apart: sorted element
/// orders, abelianization, and number of subgroups.
fn fingerprint(g: &FiniteGroup) -> (Vec<usize>, Vec<u64>, usize) {
    let mut orders: Vec<usize> = (0..g.order()).map(|x| g.element_order(x)).collect();
    orders.sort_unstable();
    let subgroups = SubgroupLattice::new(g.clone()).map_or(0, |l| l.len());
    (orders, g.descriptor().abelian_invariants, subgroups)
}

impl Catalog {
    pub fn new(groups: Vec<FiniteGroup>) -> Self {
        Self { groups }
    }

    /// Every group of order 2 through 7: `ℤ₂ … ℤ₇`, `ℤ₂⊕ℤ₂`, `S₃`.
    pub fn small() -> Self {
        let names = ["Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3", "Z7"];
        Self::new(names.iter().map(|n| builtin(n).expect("builtin")).collect())
    }

    pub fn groups(&self) -> &[FiniteGroup] {
        &self.groups
    }

    pub fn of_order(&self, n: usize) -> Vec<&FiniteGroup> {
        self.groups.iter().filter(|g| g.order() == n).collect()
    }

    /// Checks that the catalog holds pairwise non-isomorphic groups of order
    /// `n`, as many as there are isomorphism types.
    pub fn check_complete(&self, n: usize) -> Result<(), CountError> {
        let incomplete = CountError::CatalogIncomplete { order: n };
        let expected = *GROUP_COUNTS.get(n).ok_or(incomplete.clone())?;
        let groups = self.of_order(n);
        if groups.len() != expected {
            return Err(incomplete);
        }
        let mut prints: Vec<_> = groups.iter().map(|g| fingerprint(g)).collect();
        prints.sort();
        prints.dedup();
        if prints.len() != expected {
            return Err(incomplete);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassifiedCell {
    #[serde(with = "decimal")]
    pub alpha: BigUint,
    pub order: usize,
    #[serde(with = "decimal")]
    pub q: u64,
    pub group: String,
}

/// One order's slice of the scanned region.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScannedOrder {
    pub order: usize,
    /// Largest `q` examined; `bound(order, q) ≤ α_max` for every `q` up to it.
    pub q_max: u64,
    /// `q_max + 1`, where `bound` first exceeds `α_max`, as `numerator/order`.
    #[serde(with = "decimal")]
    pub excluded_bound_numerator: BigUint,
    pub groups: Vec<String>,
}

/// Evidence that the scan covered every cell that could reach `α_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanCertificate {
    pub alpha_max: u64,
    pub orders: Vec<ScannedOrder>,
    /// First order with `bound(order, 2) > α_max`; every larger order is
    /// excluded by monotonicity.
    pub stop_order: usize,
    #[serde(with = "decimal")]
    pub stop_bound_numerator: BigUint,
    pub cells_examined: usize,
    /// Every examined cell satisfied `ψ_1 ≥ q^n − q^(n−1)`.
    pub lower_bound_respected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub cells: Vec<ClassifiedCell>,
    pub certificate: ScanCertificate,
}

impl Classification {
    /// Cells attaining each value `1..=α_max`; empty lists are unattained.
    pub fn by_value(&self) -> BTreeMap<u64, Vec<&ClassifiedCell>> {
        let mut out: BTreeMap<u64, Vec<&ClassifiedCell>> =
            (1..=self.certificate.alpha_max).map(|v| (v, Vec::new())).collect();
        for c in &self.cells {
            let v: u64 = c.alpha.clone().try_into().expect("α ≤ α_max fits in u64");
            out.entry(v).or_default().push(c);
        }
        out
    }

    pub fn unattained(&self) -> Vec<u64> {
        self.by_value().into_iter().filter(|(_, c)| c.is_empty()).map(|(v, _)| v).collect()
    }
}

/// `q^n − q^(n−1)`; the orbit-count bound is this divided by `n`.
fn bound_numerator(n: usize, q: u64) -> BigUint {
    fix_count(n, q) - fix_count(n - 1, q)
}

fn within(n: usize, q: u64, alpha_max: u64) -> bool {
    bound_numerator(n, q) <= BigUint::from(alpha_max) * BigUint::from(n)
}

pub fn classify_small_alpha(alpha_max: u64, catalog: &Catalog, exec: Exec) -> Result<Classification, CountError> {
    assert!(alpha_max >= 1, "alpha_max must be positive");
    let mut orders = Vec::new();
    let mut cells: Vec<(&FiniteGroup, usize, u64)> = Vec::new();
    let mut n = 2;
    while within(n, 2, alpha_max) {
        catalog.check_complete(n)?;
        let groups = catalog.of_order(n);
        let mut q = 2;
        while within(n, q, alpha_max) {
            cells.extend(groups.iter().map(|g| (*g, n, q)));
            q += 1;
        }
        orders.push(ScannedOrder {
            order: n,
            q_max: q - 1,
            excluded_bound_numerator: bound_numerator(n, q),
            groups: groups.iter().map(|g| g.display_label()).collect(),
        });
        n += 1;
    }

    let lattices: Vec<(String, SubgroupLattice)> = catalog
        .groups()
        .iter()
        .filter(|g| g.order() < n)
        .map(|g| Ok((g.display_label(), SubgroupLattice::new(g.clone())?)))
        .collect::<Result<_, CountError>>()?;
    let lattice_for = |label: &str| &lattices.iter().find(|(l, _)| l == label).expect("scanned").1;

    let evaluated = exec.map(&cells, |&(g, n, q)| -> Result<_, CountError> {
        let label = g.display_label();
        let lattice = lattice_for(&label);
        let psi = psi_value(lattice, lattice.trivial(), q)?;
        let respected = psi >= bound_numerator(n, q);
        let alpha = psi / BigUint::from(n);
        Ok((ClassifiedCell { alpha, order: n, q, group: label }, respected))
    });

    let mut found = Vec::new();
    let mut lower_bound_respected = true;
    let cells_examined = evaluated.len();
    for r in evaluated {
        let (cell, respected) = r?;
        lower_bound_respected &= respected;
        if cell.alpha <= BigUint::from(alpha_max) {
            found.push(cell);
        }
    }
    found.sort();

    Ok(Classification {
        cells: found,
        certificate: ScanCertificate {
            alpha_max,
            orders,
            stop_order: n,
            stop_bound_numerator: bound_numerator(n, 2),
            cells_examined,
            lower_bound_respected,
        },
    })
}
