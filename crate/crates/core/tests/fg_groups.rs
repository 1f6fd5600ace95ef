//! Presentations and lattices against independent oracles.

use num_bigint::{BigInt, BigUint};
use num_traits::Pow;
use periodica::counting::{psi, psi_normal, psi_value};
use periodica::fg::{
    coset_action_group, coset_enumerate, hnf_sublattices, low_index_subgroups, parse_presentation, smith_normal_form,
    smith_quotient, CosetTable, IntegerMatrix, DEFAULT_MAX_COSETS,
};
use periodica::oracle::{brute_psi, DEFAULT_BUDGET};
use periodica::{Exec, SubgroupLattice};
use proptest::prelude::*;

/// Hall's count of index-n subgroups of the free group of rank r.
fn hall(r: u32, n_max: usize) -> Vec<BigUint> {
    let fact = |k: usize| (1..=k).map(BigUint::from).product::<BigUint>();
    let mut out: Vec<BigUint> = Vec::new();
    for n in 1..=n_max {
        let mut v = BigUint::from(n) * fact(n).pow(r - 1);
        for i in 1..n {
            v -= fact(n - i).pow(r - 1) * &out[i - 1];
        }
        out.push(v);
    }
    out
}

fn sigma(n: u64) -> usize {
    (1..=n).filter(|d| n.is_multiple_of(*d)).sum::<u64>() as usize
}

fn totals(tables: &[CosetTable], n_max: usize) -> Vec<usize> {
    let mut out = vec![0; n_max];
    for t in tables {
        out[t.len() - 1] += t.conjugate_count();
    }
    out
}

#[test]
fn hall_oracle_values() {
    let expected: Vec<BigUint> = [1u32, 3, 13, 71, 461, 3447].map(BigUint::from).to_vec();
    assert_eq!(hall(2, 6), expected);
}

#[test]
fn free_group_matches_hall() {
    let p = parse_presentation("< a, b | >").unwrap();
    let tables = low_index_subgroups(&p, 6).unwrap();
    let got: Vec<BigUint> = totals(&tables, 6).into_iter().map(BigUint::from).collect();
    assert_eq!(got, hall(2, 6));
}

#[test]
fn free_abelian_rank_two_two_ways() {
    let p = parse_presentation("< a, b | [a,b] >").unwrap();
    let tables = low_index_subgroups(&p, 12).unwrap();
    let via_backtracking = totals(&tables, 12);
    for n in 1..=12u64 {
        assert_eq!(via_backtracking[n as usize - 1], sigma(n), "n={n}");
        assert_eq!(hnf_sublattices(2, n).len(), sigma(n), "n={n}");
    }
    // Abelian: every subgroup is normal, so no class has more than one member.
    assert!(tables.iter().all(|t| t.conjugate_count() == 1));
}

#[test]
fn presentations_reduce_to_table_values() {
    let p = parse_presentation("< a, b | a^2, b^3, (a b)^2 >").unwrap();
    let t = coset_enumerate(&p, DEFAULT_MAX_COSETS).unwrap();
    let (g, h) = coset_action_group(&t).unwrap();
    let l = SubgroupLattice::new(g).unwrap();
    let r = psi(&l, l.id_of(&h).unwrap(), 2).unwrap();
    assert_eq!((r.psi, r.alpha), (BigUint::from(42u32), BigUint::from(7u32)));

    let p = parse_presentation("< a, b | [a,b] > ; H = a^2, b^2").unwrap();
    let t = coset_enumerate(&p, DEFAULT_MAX_COSETS).unwrap();
    let (g, h) = coset_action_group(&t).unwrap();
    assert!(h.is_trivial());
    let l = SubgroupLattice::new(g).unwrap();
    let alphas: Vec<BigUint> = (2..=5).map(|q| psi(&l, l.trivial(), q).unwrap().alpha).collect();
    assert_eq!(alphas, [2u32, 15, 54, 140].map(BigUint::from).to_vec());
}

#[test]
fn non_normal_reduction() {
    let p = parse_presentation("< a, b | a^2, b^3, (a b)^2 > ; H = a").unwrap();
    let t = coset_enumerate(&p, DEFAULT_MAX_COSETS).unwrap();
    let (g, h) = coset_action_group(&t).unwrap();
    assert_eq!((g.order(), h.index()), (6, t.len()));
    let l = SubgroupLattice::new(g.clone()).unwrap();
    let id = l.id_of(&h).unwrap();
    for q in 2..=5u64 {
        let expected = BigUint::from(q).pow(3u32) - BigUint::from(q);
        assert_eq!(psi_value(&l, id, q).unwrap(), expected);
        assert_eq!(brute_psi(&g, &h, q, DEFAULT_BUDGET, Exec::default()).unwrap(), expected);
    }
}

#[test]
fn normal_subgroup_reduction() {
    // H = <a^2> is normal in Z: the action image is Z/2 and H maps to 1.
    let p = parse_presentation("< a | a^4 > ; H = a^2").unwrap();
    let (g, h) = coset_action_group(&coset_enumerate(&p, 100).unwrap()).unwrap();
    assert!(h.is_trivial());
    let l = SubgroupLattice::new(g.clone()).unwrap();
    for q in 2..=5u64 {
        let expected = BigUint::from(q * q - q);
        assert_eq!(psi_value(&l, l.trivial(), q).unwrap(), expected);
        assert_eq!(psi_normal(&g, q).unwrap().psi, expected);
    }
}

#[test]
fn every_low_index_subgroup_reduces_consistently() {
    // Over all subgroups of index ≤ 4 in the free group of rank 2: the reduced
    // pair keeps the index and formula equals oracle.
    let p = parse_presentation("< a, b | >").unwrap();
    for t in low_index_subgroups(&p, 4).unwrap() {
        let (g, h) = coset_action_group(&t).unwrap();
        assert_eq!(h.index(), t.len());
        let l = SubgroupLattice::new(g.clone()).unwrap();
        let id = l.id_of(&h).unwrap();
        for q in 2..=3 {
            let brute = brute_psi(&g, &h, q, DEFAULT_BUDGET, Exec::default()).unwrap();
            assert_eq!(psi_value(&l, id, q).unwrap(), brute);
        }
    }
}

#[test]
fn smith_examples() {
    let z2z2 = smith_quotient(&IntegerMatrix::diagonal(&[2, 2])).unwrap();
    let l = SubgroupLattice::new(z2z2).unwrap();
    assert_eq!(psi(&l, l.trivial(), 2).unwrap().alpha, BigUint::from(2u32));
    let z6 = smith_quotient(&IntegerMatrix::diagonal(&[2, 3])).unwrap();
    let l = SubgroupLattice::new(z6).unwrap();
    assert_eq!(psi(&l, l.trivial(), 2).unwrap().alpha, BigUint::from(9u32));
    let m: IntegerMatrix = "2,1;0,3".parse().unwrap();
    assert_eq!(smith_normal_form(&m).unwrap(), vec![BigInt::from(1), BigInt::from(6)]);
}

/// A random unimodular matrix as a product of elementary operations.
fn unimodular(n: usize, ops: &[(usize, usize, i64, bool)]) -> IntegerMatrix {
    let mut m = IntegerMatrix::identity(n);
    for &(i, j, k, swap) in ops {
        let (i, j) = (i % n, j % n);
        let mut e = IntegerMatrix::identity(n);
        if swap {
            e[(i, i)] = 0.into();
            e[(j, j)] = 0.into();
            e[(i, j)] = 1.into();
            e[(j, i)] = 1.into();
        } else if i != j {
            e[(i, j)] = k.into();
        } else {
            e[(i, i)] = (-1).into();
        }
        m = m.mul(&e);
    }
    m
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn smith_invariant_under_unimodular_change(
        n in 1usize..=3,
        diag in prop::collection::vec(1i64..=6, 3),
        upper in prop::collection::vec(-5i64..=5, 3),
        left in prop::collection::vec((0usize..3, 0usize..3, -3i64..=3, any::<bool>()), 0..8),
        right in prop::collection::vec((0usize..3, 0usize..3, -3i64..=3, any::<bool>()), 0..8),
    ) {
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = diag[i].into();
            for j in i + 1..n {
                m[(i, j)] = upper[i + j - 1].into();
            }
        }
        let (u, v) = (unimodular(n, &left), unimodular(n, &right));
        let det_u = u.determinant().unwrap();
        prop_assert_eq!(det_u.magnitude(), &BigUint::from(1u32));
        let moved = u.mul(&m).mul(&v);
        let a = smith_quotient(&m).unwrap().descriptor();
        let b = smith_quotient(&moved).unwrap().descriptor();
        prop_assert_eq!(&a.abelian_invariants, &b.abelian_invariants);
        prop_assert_eq!(smith_normal_form(&m).unwrap(), smith_normal_form(&moved).unwrap());
        let det = moved.determinant().unwrap();
        prop_assert_eq!(det.magnitude(), &BigUint::from(a.order));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_sublattices_reduce_to_their_quotient(n in 1u64..=12, pick in any::<prop::sample::Index>()) {
        // Z^2 with H given by generator words from an HNF basis: the coset
        // action image has order n and formula equals oracle at q = 2.
        let all = hnf_sublattices(2, n);
        let m = &all[pick.index(all.len())];
        let word = |x: &BigInt, y: &BigInt| format!("a^{x} b^{y}");
        let text = format!("< a, b | [a,b] > ; H = {}, {}", word(&m[(0, 0)], &m[(1, 0)]), word(&m[(0, 1)], &m[(1, 1)]));
        let p = parse_presentation(&text).unwrap();
        let t = coset_enumerate(&p, DEFAULT_MAX_COSETS).unwrap();
        prop_assert_eq!(t.len() as u64, n);
        let (g, h) = coset_action_group(&t).unwrap();
        prop_assert!(h.is_trivial());
        let snf = smith_quotient(m).unwrap();
        prop_assert_eq!(g.descriptor().abelian_invariants, snf.descriptor().abelian_invariants);
        let l = SubgroupLattice::new(g.clone()).unwrap();
        prop_assert_eq!(
            psi_value(&l, l.trivial(), 2).unwrap(),
            brute_psi(&g, &h, 2, DEFAULT_BUDGET, Exec::Sequential).unwrap()
        );
    }
}
