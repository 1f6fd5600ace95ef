//! Sublattices of `ℤ^d`: Hermite normal forms for enumeration, Smith normal
//! form for the quotient group.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::FgError;
use crate::counting::closed_form::divisors;
use crate::group::{FiniteGroup, DEFAULT_MAX_ORDER};

/// Dense integer matrix, row-major. Its columns span a sublattice of `ℤ^rows`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn diagonal(values: &[i64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v.into();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have the same length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, FgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(FgError::MatrixParse { message: "rows have different lengths".into() });
        }
        let entries = rows.iter().flatten().cloned().map(Into::into).collect();
        Ok(Self { rows: rows.len(), cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, FgError> {
        if !self.is_square() {
            return Err(FgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * &a[(n - 1, n - 1)] })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] -= k · row[source]
    fn sub_row(&mut self, target: usize, source: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(source, j)] * k;
            self[(target, j)] -= v;
        }
    }

    /// col[target] -= k · col[source]
    fn sub_col(&mut self, target: usize, source: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, source)] * k;
            self[(i, target)] -= v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

/// Rows separated by `;`, entries by `,`: `2,1;0,3`.
impl FromStr for IntegerMatrix {
    type Err = FgError;

    fn from_str(s: &str) -> Result<Self, FgError> {
        let rows: Vec<Vec<BigInt>> = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        let e = e.trim();
                        e.parse::<BigInt>().map_err(|_| FgError::MatrixParse { message: format!("bad entry `{e}`") })
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        IntegerMatrix::from_rows(&rows)
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(";")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        Ok(())
    }
}

/// Every sublattice of `ℤ^d` of the given index, as an upper triangular
/// basis matrix (basis vectors in columns) with `0 ≤ M[i][j] < M[i][i]` for
/// `j > i`. Ordered by diagonal, then by the off-diagonal entries.
pub fn hnf_sublattices(d: usize, index: u64) -> Vec<IntegerMatrix> {
    assert!(d >= 1 && index >= 1, "need d ≥ 1 and index ≥ 1");
    let mut diagonals = Vec::new();
    ordered_factorizations(index, d, &mut Vec::new(), &mut diagonals);
    let mut out = Vec::new();
    for diag in diagonals {
        let free: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
        let mut m = IntegerMatrix::zeros(d, d);
        for (i, &v) in diag.iter().enumerate() {
            m[(i, i)] = v.into();
        }
        fill_offdiagonal(&mut m, &diag, &free, &mut out);
    }
    out
}

fn ordered_factorizations(n: u64, parts: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if parts == 1 {
        prefix.push(n);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for a in divisors(n) {
        prefix.push(a);
        ordered_factorizations(n / a, parts - 1, prefix, out);
        prefix.pop();
    }
}

fn fill_offdiagonal(m: &mut IntegerMatrix, diag: &[u64], free: &[(usize, usize)], out: &mut Vec<IntegerMatrix>) {
    let Some((&(i, j), rest)) = free.split_first() else {
        out.push(m.clone());
        return;
    };
    for v in 0..diag[i] {
        m[(i, j)] = v.into();
        fill_offdiagonal(m, diag, rest, out);
    }
    m[(i, j)] = BigInt::zero();
}

/// Diagonal `d_1 | d_2 | … | d_n` of the Smith normal form, all nonnegative.
pub fn smith_normal_form(m: &IntegerMatrix) -> Result<Vec<BigInt>, FgError> {
    if !m.is_square() {
        return Err(FgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut a = m.clone();
    for t in 0..n {
        // Pivot: smallest nonzero absolute value in the trailing block.
        loop {
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&p| !a[p].is_zero())
                .min_by(|&p, &q| a[p].abs().cmp(&a[q].abs()));
            let Some((pi, pj)) = pivot else {
                return Err(FgError::SingularMatrix);
            };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..n {
                let k = a[(i, t)].div_floor(&a[(t, t)]);
                a.sub_row(i, t, &k);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let k = a[(t, j)].div_floor(&a[(t, t)]);
                a.sub_col(j, t, &k);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Divisibility: fold any entry the pivot does not divide into row t.
            let bad =
                (t + 1..n).flat_map(|i| (t + 1..n).map(move |j| (i, j))).find(|&p| !a[p].is_multiple_of(&a[(t, t)]));
            match bad {
                Some((i, _)) => {
                    let one = BigInt::from(-1);
                    a.sub_row(t, i, &one);
                }
                None => break,
            }
        }
    }
    Ok((0..n).map(|i| a[(i, i)].abs()).collect())
}

/// The quotient `ℤ^d / M ℤ^d` as a direct sum of cyclic groups.
pub fn smith_quotient(m: &IntegerMatrix) -> Result<FiniteGroup, FgError> {
    smith_quotient_with_limit(m, DEFAULT_MAX_ORDER)
}

pub fn smith_quotient_with_limit(m: &IntegerMatrix, max_order: usize) -> Result<FiniteGroup, FgError> {
    let diag = smith_normal_form(m)?;
    let limit = crate::group::GroupError::OrderLimitExceeded { limit: max_order };
    let moduli: Vec<u64> = diag
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_u64().filter(|&v| v as u128 <= max_order as u128).ok_or(limit.clone()))
        .collect::<Result<_, _>>()?;
    Ok(FiniteGroup::abelian(&moduli, max_order)?)
}
