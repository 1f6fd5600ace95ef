//! Shipped Cayley tables for the named groups used by the CLI, the test
//! suites and the classification scan.

use crate::group::{parse_cayley_table, FiniteGroup};

macro_rules! builtins {
    ($($name:literal),* $(,)?) => {
        /// Builtin group names, in catalog order.
        pub const BUILTIN_NAMES: &[&str] = &[$($name),*];

        fn table_text(name: &str) -> Option<&'static str> {
            match name {
                $($name => Some(include_str!(concat!("../data/", $name, ".txt"))),)*
                _ => None,
            }
        }
    };
}

builtins!(
    "Z2", "Z3", "Z4", "Z5", "Z6", "Z7", "Z8", "Z9", "Z10", "Z11", "Z12", "Z2xZ2", "Z2xZ4", "Z3xZ3", "S3", "D4", "Q8",
    "S4",
);

/// Loads a builtin group by name (e.g. `"S3"`, `"Z2xZ2"`).
pub fn builtin(name: &str) -> Option<FiniteGroup> {
    let text = table_text(name)?;
    let table = parse_cayley_table(text).expect("shipped table parses");
    Some(FiniteGroup::from_cayley_table(&table, Some(name)).expect("shipped table is a group"))
}

/// All builtin groups, in catalog order.
pub fn all_builtins() -> Vec<FiniteGroup> {
    BUILTIN_NAMES.iter().map(|n| builtin(n).expect("listed name")).collect()
}
