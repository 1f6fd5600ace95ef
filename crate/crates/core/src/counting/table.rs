//! The table of small orbit counts `α_[1](Q; q)` for quotients of order ≤ 7.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::{psi, CountError};
use crate::builtin::builtin;
use crate::exec::Exec;
use crate::group::SubgroupLattice;

/// Row order of the table.
pub const TABLE_ROWS: [&str; 8] = ["Z2", "Z3", "Z2xZ2", "Z4", "Z5", "S3", "Z6", "Z7"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub group: String,
    #[serde(with = "decimal_vec")]
    pub alpha: Vec<BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallValueTable {
    pub q: Vec<u64>,
    pub rows: Vec<TableRow>,
}

mod decimal_vec {
    use num_bigint::BigUint;
    use serde::{ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&x.to_string())?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
        Vec::<String>::deserialize(d)?.iter().map(|s| s.parse().map_err(serde::de::Error::custom)).collect()
    }
}

impl SmallValueTable {
    /// CSV with header `group,q2,q3,…`; one line per row, `\n` terminated.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("group");
        for q in &self.q {
            out.push_str(&format!(",q{q}"));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.group);
            for a in &row.alpha {
                out.push(',');
                out.push_str(&a.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn get(&self, group: &str, q: u64) -> Option<&BigUint> {
        let col = self.q.iter().position(|&x| x == q)?;
        self.rows.iter().find(|r| r.group == group).map(|r| &r.alpha[col])
    }
}

/// Computes `α_[1](Q; q)` for every row group and `q = 2..=q_max` through the
/// generic lattice route.
pub fn table_small_values(q_max: u64, exec: Exec) -> Result<SmallValueTable, CountError> {
    super::check_q(q_max)?;
    let lattices: Vec<SubgroupLattice> = TABLE_ROWS
        .iter()
        .map(|name| SubgroupLattice::new(builtin(name).expect("builtin")))
        .collect::<Result<_, _>>()?;
    let qs: Vec<u64> = (2..=q_max).collect();
    let cells: Vec<(usize, u64)> = (0..TABLE_ROWS.len()).flat_map(|r| qs.iter().map(move |&q| (r, q))).collect();
    let values = exec.map(&cells, |&(r, q)| {
        let l = &lattices[r];
        psi(l, l.trivial(), q).map(|rep| rep.alpha)
    });
    let values: Vec<BigUint> = values.into_iter().collect::<Result<_, _>>()?;
    let rows = TABLE_ROWS
        .iter()
        .zip(values.chunks(qs.len()))
        .map(|(name, alpha)| TableRow { group: (*name).to_owned(), alpha: alpha.to_vec() })
        .collect();
    Ok(SmallValueTable { q: qs, rows })
}
