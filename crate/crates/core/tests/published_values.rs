//! Published small values and the small-α classification.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use periodica::counting::{classify_small_alpha, table_small_values, Catalog};
use periodica::Exec;

const TABLE: [(&str, [u32; 4]); 8] = [
    ("Z2", [1, 3, 6, 10]),
    ("Z3", [2, 8, 20, 40]),
    ("Z2xZ2", [2, 15, 54, 140]),
    ("Z4", [3, 18, 60, 150]),
    ("Z5", [6, 48, 204, 624]),
    ("S3", [7, 108, 650, 2540]),
    ("Z6", [9, 116, 670, 2580]),
    ("Z7", [18, 312, 2340, 11160]),
];

#[test]
fn small_value_table() {
    for exec in [Exec::Sequential, Exec::default()] {
        let t = table_small_values(5, exec).unwrap();
        assert_eq!(t.q, vec![2, 3, 4, 5]);
        for (name, row) in TABLE {
            for (q, v) in (2..=5).zip(row) {
                assert_eq!(t.get(name, q), Some(&BigUint::from(v)), "{name} q={q}");
            }
        }
    }
}

#[test]
fn classification_up_to_ten() {
    let c = classify_small_alpha(10, &Catalog::small(), Exec::default()).unwrap();
    let got: BTreeMap<u64, Vec<(String, u64)>> = c
        .by_value()
        .into_iter()
        .map(|(v, cells)| {
            let mut cells: Vec<(String, u64)> = cells.iter().map(|c| (c.group.clone(), c.q)).collect();
            cells.sort();
            (v, cells)
        })
        .collect();
    let cell = |g: &str, q: u64| (g.to_owned(), q);
    let expected: BTreeMap<u64, Vec<(String, u64)>> = [
        (1, vec![cell("Z2", 2)]),
        (2, vec![cell("Z2xZ2", 2), cell("Z3", 2)]),
        (3, vec![cell("Z2", 3), cell("Z4", 2)]),
        (4, vec![]),
        (5, vec![]),
        (6, vec![cell("Z2", 4), cell("Z5", 2)]),
        (7, vec![cell("S3", 2)]),
        (8, vec![cell("Z3", 3)]),
        (9, vec![cell("Z6", 2)]),
        (10, vec![cell("Z2", 5)]),
    ]
    .into_iter()
    .collect();
    assert_eq!(got, expected);
    assert_eq!(c.unattained(), vec![4, 5]);

    let cert = &c.certificate;
    assert!(cert.lower_bound_respected);
    // (2^8 − 2^7)/8 = 16 > 10 closes the scan; order 7 is the last one open.
    assert_eq!(cert.stop_order, 8);
    assert_eq!(cert.stop_bound_numerator, BigUint::from(128u32));
    assert_eq!(cert.orders.last().unwrap().order, 7);
    for o in &cert.orders {
        assert!(o.excluded_bound_numerator > BigUint::from(10 * o.order as u64));
    }
}
