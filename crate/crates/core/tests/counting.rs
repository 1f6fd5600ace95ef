//! Counting formulas against independent oracles and as properties.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Pow};
use periodica::builtin::{all_builtins, builtin};
use periodica::counting::{
    aut_structure, is_lyndon, lyndon_words, necklace_count, psi, psi_chain, psi_chain_checked, psi_cyclic,
    psi_elementary_p2, psi_normal_subgroup, psi_prime_power, psi_value, CountError,
};
use periodica::oracle::{brute_psi, DEFAULT_BUDGET};
use periodica::{Exec, FiniteGroup, SubgroupId, SubgroupLattice};
use proptest::prelude::*;

fn pow(q: u64, e: usize) -> BigUint {
    BigUint::from(q).pow(e)
}

fn lattices() -> &'static [SubgroupLattice] {
    static CASES: OnceLock<Vec<SubgroupLattice>> = OnceLock::new();
    CASES.get_or_init(|| all_builtins().into_iter().map(|g| SubgroupLattice::new(g).unwrap()).collect())
}

/// ψ_1(Z_n) from the inclusion–exclusion over divisors, without Möbius:
/// g(n) = q^n − Σ_{d | n, d < n} g(d).
fn cyclic_by_recursion(n: u64, q: u64) -> BigUint {
    let mut g: Vec<BigUint> = vec![BigUint::default(); n as usize + 1];
    for m in 1..=n {
        let mut v = pow(q, m as usize);
        for d in 1..m {
            if m % d == 0 {
                v -= &g[d as usize];
            }
        }
        g[m as usize] = v;
    }
    g[n as usize].clone()
}

#[test]
fn cyclic_closed_form_matches_generic_and_recursion() {
    for n in 1..=30u64 {
        let l = SubgroupLattice::new(FiniteGroup::cyclic(n as usize)).unwrap();
        for q in 2..=5 {
            let generic = psi_value(&l, l.trivial(), q).unwrap();
            assert_eq!(psi_cyclic(n, q).unwrap(), generic, "n={n} q={q}");
            assert_eq!(cyclic_by_recursion(n, q), generic, "n={n} q={q}");
        }
    }
}

#[test]
fn prime_power_and_elementary_forms() {
    for (p, k) in [(2u64, 1u32), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)] {
        let n = p.pow(k) as usize;
        let l = SubgroupLattice::new(FiniteGroup::cyclic(n)).unwrap();
        for q in 2..=5 {
            assert_eq!(psi_prime_power(p, k, q).unwrap(), psi_value(&l, l.trivial(), q).unwrap());
        }
    }
    for (name, p) in [("Z2xZ2", 2u64), ("Z3xZ3", 3)] {
        let l = SubgroupLattice::new(builtin(name).unwrap()).unwrap();
        for q in 2..=5 {
            assert_eq!(psi_elementary_p2(p, q).unwrap(), psi_value(&l, l.trivial(), q).unwrap());
        }
    }
    assert_eq!(psi_prime_power(6, 1, 2), Err(CountError::NotPrime { p: 6 }));
}

#[test]
fn chain_form_on_every_chain_interval() {
    let mut checked = 0;
    for l in lattices() {
        for h in l.ids() {
            if h == l.whole() {
                continue;
            }
            for q in 2..=5 {
                match psi_chain_checked(l, h, q) {
                    Ok(v) => {
                        assert_eq!(v, psi_value(l, h, q).unwrap());
                        checked += 1;
                    }
                    Err(CountError::NotAChain) => {}
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
    assert!(checked > 0);
    // Z8 ⊃ 2Z8 ⊃ 4Z8 ⊃ 0 is a chain with H1 of index 4 over the trivial subgroup.
    assert_eq!(psi_chain(8, 4, 2).unwrap(), BigUint::from(240u32));
}

#[test]
fn normal_reduction() {
    for l in lattices() {
        let g = l.group();
        for h in l.ids().filter(|&h| l.is_normal(h)) {
            for q in 2..=3 {
                let via_quotient = psi_normal_subgroup(g, l.subgroup(h), q).unwrap();
                assert_eq!(via_quotient.psi, psi_value(l, h, q).unwrap());
            }
        }
    }
}

#[test]
fn lyndon_generation_matches_counts() {
    for n in 1..=12usize {
        for q in 2..=4u64 {
            let words = lyndon_words(n, q, u64::MAX).unwrap();
            assert_eq!(BigUint::from(words.len()), necklace_count(n as u64, q).unwrap());
            assert!(words.iter().all(|w| is_lyndon(w)));
            assert!(words.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn aut_decomposition_covers_the_shift() {
    for l in lattices().iter().filter(|l| l.group().order() <= 12) {
        let d = aut_structure(l, 2).unwrap();
        assert_eq!(d.configuration_total(), pow(2, l.group().order()));
    }
}

fn pick(gi: usize, hi: prop::sample::Index) -> (&'static SubgroupLattice, SubgroupId) {
    let ls = lattices();
    let l = &ls[gi % ls.len()];
    (l, SubgroupId(hi.index(l.len())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn dual_inversion(gi in 0usize..18, hi in any::<prop::sample::Index>(), q in 2u64..=5) {
        let (l, h) = pick(gi, hi);
        let total: BigUint = l.interval(h, l.whole()).unwrap().into_iter().map(|k| psi_value(l, k, q).unwrap()).sum();
        prop_assert_eq!(total, pow(q, l.subgroup(h).index()));
    }

    #[test]
    fn full_shift_partition(gi in 0usize..18, q in 2u64..=5) {
        let ls = lattices();
        let l = &ls[gi % ls.len()];
        let total: BigUint = l.classes().iter().map(|c| psi(l, c[0], q).unwrap().psi_class).sum();
        prop_assert_eq!(total, pow(q, l.group().order()));
    }

    #[test]
    fn conjugation_invariance(gi in 0usize..18, hi in any::<prop::sample::Index>(), x in any::<prop::sample::Index>(), q in 2u64..=5) {
        let (l, h) = pick(gi, hi);
        let g = l.group();
        let conj = l.id_of(&g.conjugate_subgroup(x.index(g.order()), l.subgroup(h))).unwrap();
        prop_assert_eq!(psi_value(l, h, q).unwrap(), psi_value(l, conj, q).unwrap());
    }

    #[test]
    fn alpha_is_exact(gi in 0usize..18, hi in any::<prop::sample::Index>(), q in 2u64..=5) {
        let (l, h) = pick(gi, hi);
        let r = psi(l, h, q).unwrap();
        prop_assert_eq!(&r.alpha * BigUint::from(r.index), r.psi_class.clone());
        prop_assert_eq!(r.term_sum(), r.psi.clone().into());
    }

    #[test]
    fn aperiodic_lower_bound(gi in 0usize..18, q in 2u64..=5) {
        let ls = lattices();
        let l = &ls[gi % ls.len()];
        let n = l.group().order();
        let psi1 = psi_value(l, l.trivial(), q).unwrap();
        prop_assert!(psi1 >= pow(q, n) - pow(q, n - 1));
    }

    #[test]
    fn cyclic_alpha_grows_with_q(n in 2u64..=30, q in 2u64..=9) {
        let a = psi_cyclic(n, q).unwrap() / n;
        let b = psi_cyclic(n, q + 1).unwrap() / n;
        prop_assert!(a < b);
    }

    #[test]
    fn necklaces_sum_to_the_shift(n in 1u64..=40, q in 2u64..=6) {
        // Every word of length n has a unique primitive period d | n.
        let total: BigUint = (1..=n).filter(|d| n % d == 0).map(|d| psi_cyclic(d, q).unwrap()).sum();
        prop_assert_eq!(total, pow(q, n as usize));
    }
}

#[test]
fn table_columns_increase_downward() {
    let rows = ["Z2", "Z3", "Z2xZ2", "Z4", "Z5", "S3", "Z6", "Z7"];
    for q in 2..=5 {
        let col: Vec<BigUint> = rows
            .iter()
            .map(|r| {
                let l = SubgroupLattice::new(builtin(r).unwrap()).unwrap();
                psi(&l, l.trivial(), q).unwrap().alpha
            })
            .collect();
        // Z3 and Z2xZ2 tie at q = 2; every other step is strict.
        assert!(col.windows(2).all(|w| w[0] <= w[1]), "q={q}: {col:?}");
        let strict = col.windows(2).filter(|w| w[0] < w[1]).count();
        assert_eq!(strict, if q == 2 { 6 } else { 7 }, "q={q}: {col:?}");
    }
}

#[test]
fn generic_psi_matches_oracle_on_small_groups() {
    for l in lattices().iter().filter(|l| l.group().order() <= 8) {
        for h in l.ids() {
            let expected = brute_psi(l.group(), l.subgroup(h), 2, DEFAULT_BUDGET, Exec::default()).unwrap();
            assert_eq!(psi_value(l, h, 2).unwrap(), expected);
        }
    }
    let one = BigUint::one();
    let l = SubgroupLattice::new(FiniteGroup::trivial()).unwrap();
    assert_eq!(psi_value(&l, l.trivial(), 7).unwrap(), &one * 7u32);
}
