//! Orbit-class decomposition of the automorphism group of `A^G`, finite `G`:
//! one factor `(N_G(H)/H) ≀ Sym_α` per conjugacy class `[H]`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{decimal, fix_count, psi, CountError};
use crate::group::{GroupDescriptor, SubgroupLattice};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutFactor {
    /// First subgroup of the class in canonical order.
    pub representative: Vec<usize>,
    pub class_size: usize,
    /// `[G:H]`, the orbit size for this class.
    pub index: usize,
    /// `N_G(H)/H`.
    pub quotient: GroupDescriptor,
    #[serde(with = "decimal")]
    pub alpha: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutDescription {
    pub group: String,
    #[serde(with = "decimal")]
    pub q: u64,
    pub factors: Vec<AutFactor>,
}

impl AutDescription {
    /// `Σ α_i [G:H_i]`, which equals `q^|G|`.
    pub fn configuration_total(&self) -> BigUint {
        self.factors.iter().map(|f| &f.alpha * BigUint::from(f.index)).sum()
    }
}

pub fn aut_structure(lattice: &SubgroupLattice, q: u64) -> Result<AutDescription, CountError> {
    let g = lattice.group();
    let mut factors = Vec::with_capacity(lattice.classes().len());
    for class in lattice.classes() {
        let h = class[0];
        let report = psi(lattice, h, q)?;
        let n = lattice.subgroup(lattice.normalizer(h));
        let quotient = g.section(n, lattice.subgroup(h))?.descriptor();
        factors.push(AutFactor {
            representative: report.subgroup_members,
            class_size: report.class_size,
            index: report.index,
            quotient,
            alpha: report.alpha,
        });
    }
    let desc = AutDescription { group: g.display_label(), q, factors };
    debug_assert_eq!(desc.configuration_total(), fix_count(g.order(), q));
    Ok(desc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin;
    use crate::group::FiniteGroup;

    fn summary(d: &AutDescription) -> Vec<(String, u64)> {
        d.factors.iter().map(|f| (f.quotient.name.clone(), f.alpha.clone().try_into().unwrap())).collect()
    }

    #[test]
    fn cyclic_examples() {
        let l = SubgroupLattice::new(builtin("Z2").unwrap()).unwrap();
        let d = aut_structure(&l, 2).unwrap();
        assert_eq!(summary(&d), vec![("Z2".into(), 1), ("1".into(), 2)]);

        let l = SubgroupLattice::new(builtin("Z3").unwrap()).unwrap();
        assert_eq!(summary(&aut_structure(&l, 2).unwrap()), vec![("Z3".into(), 2), ("1".into(), 2)]);

        let l = SubgroupLattice::new(FiniteGroup::trivial()).unwrap();
        assert_eq!(summary(&aut_structure(&l, 5).unwrap()), vec![("1".into(), 5)]);
    }

    #[test]
    fn s3_factors_cover_the_shift() {
        let l = SubgroupLattice::new(builtin("S3").unwrap()).unwrap();
        let d = aut_structure(&l, 2).unwrap();
        assert_eq!(d.factors.len(), 4);
        assert_eq!(d.configuration_total(), BigUint::from(64u32));
        // N(1)/1 = S3, N(C2)/C2 = 1, N(A3)/A3 = Z2, G/G = 1.
        let orders: Vec<usize> = d.factors.iter().map(|f| f.quotient.order).collect();
        assert_eq!(orders, vec![6, 1, 2, 1]);
        assert_eq!(summary(&d)[0].1, 7);
        assert_eq!(summary(&d)[1].1, 6);
    }
}
