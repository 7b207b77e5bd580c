//! Row-factorization matrices attached to a pseudo-Frobenius number.
//!
//! An RF⁺ matrix for `f` has `-1` on the diagonal and row `i` holds a
//! factorization of `f + n_i` that does not use `n_i`. An RF⁻ matrix for `f`
//! relative to an NG-vector `(f_1, …, f_ν)` has a zero row wherever
//! `f_i = f`, and otherwise row `i` holds a factorization of `n_i + f_i − f`
//! avoiding `n_i`, again with `-1` on the diagonal.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::nearly::{cartesian_product, validate_ng_vector, NgVector};
use crate::semigroup::{NumericalSemigroup, DEFAULT_FACTORIZATION_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RfKind {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RfMatrix {
    pub kind: RfKind,
    pub f: i64,
    pub ng_vector: Option<NgVector>,
    pub entries: Vec<Vec<i64>>,
}

impl RfMatrix {
    pub fn order(&self) -> usize {
        self.entries.len()
    }

    /// Re-checks the row identities against `S` from scratch.
    pub fn satisfies_row_identities(&self, s: &NumericalSemigroup) -> bool {
        let gens = s.generators();
        if self.entries.len() != gens.len() || self.entries.iter().any(|r| r.len() != gens.len()) {
            return false;
        }
        self.entries.iter().enumerate().all(|(i, row)| {
            let target = match (self.kind, &self.ng_vector) {
                (RfKind::Plus, _) => self.f,
                (RfKind::Minus, Some(v)) if v.0[i] == self.f => {
                    return row.iter().all(|&x| x == 0);
                }
                (RfKind::Minus, Some(v)) => v.0[i] - self.f,
                (RfKind::Minus, None) => return false,
            };
            let off_diag_ok = row
                .iter()
                .enumerate()
                .all(|(j, &x)| if i == j { x == -1 } else { x >= 0 });
            let sum: i64 = row.iter().zip(gens).map(|(&a, &n)| a * n).sum();
            off_diag_ok && sum == target
        })
    }
}

/// Every factorization of `z` avoiding `index`, as matrix rows ascending, with `-1` at `index`.
fn rows_for(s: &NumericalSemigroup, z: i64, index: usize, cap: usize) -> Result<Vec<Vec<i64>>> {
    let mut rows: Vec<Vec<i64>> = s
        .factorizations_avoiding_with_cap(z, index, cap)?
        .into_iter()
        .map(|fac| {
            let mut row: Vec<i64> = fac.coefficients.iter().map(|&a| a as i64).collect();
            row[index] = -1;
            row
        })
        .collect();
    rows.reverse();
    Ok(rows)
}

pub fn rf_plus_matrices(s: &NumericalSemigroup, f: i64) -> Result<Vec<RfMatrix>> {
    rf_plus_matrices_with_cap(s, f, DEFAULT_FACTORIZATION_CAP)
}

/// All RF⁺ matrices for `f`, ordered lexicographically by concatenated rows.
pub fn rf_plus_matrices_with_cap(
    s: &NumericalSemigroup,
    f: i64,
    cap: usize,
) -> Result<Vec<RfMatrix>> {
    let per_row = rf_plus_rows(s, f, cap)?;
    Ok(cartesian_product(&per_row, cap)?
        .into_iter()
        .map(|entries| RfMatrix {
            kind: RfKind::Plus,
            f,
            ng_vector: None,
            entries,
        })
        .collect())
}

/// Candidate rows of RF⁺ matrices for `f`, one list per generator.
pub fn rf_plus_rows(s: &NumericalSemigroup, f: i64, cap: usize) -> Result<Vec<Vec<Vec<i64>>>> {
    if !s.is_pseudo_frobenius(f) {
        return Err(Error::NotPseudoFrobenius(f));
    }
    s.generators()
        .iter()
        .enumerate()
        .map(|(i, &n)| rows_for(s, f + n, i, cap))
        .collect()
}

pub fn rf_minus_matrices(s: &NumericalSemigroup, v: &NgVector, f: i64) -> Result<Vec<RfMatrix>> {
    rf_minus_matrices_with_cap(s, v, f, DEFAULT_FACTORIZATION_CAP)
}

/// All RF⁻ matrices for `f` relative to the NG-vector `v`.
pub fn rf_minus_matrices_with_cap(
    s: &NumericalSemigroup,
    v: &NgVector,
    f: i64,
    cap: usize,
) -> Result<Vec<RfMatrix>> {
    if !s.is_pseudo_frobenius(f) {
        return Err(Error::NotPseudoFrobenius(f));
    }
    validate_ng_vector(s, v)?;
    let per_row = s
        .generators()
        .iter()
        .enumerate()
        .map(|(i, &n)| rf_minus_row(s, i, n, v.0[i], f, cap))
        .collect::<Result<Vec<_>>>()?;
    Ok(cartesian_product(&per_row, cap)?
        .into_iter()
        .map(|entries| RfMatrix {
            kind: RfKind::Minus,
            f,
            ng_vector: Some(v.clone()),
            entries,
        })
        .collect())
}

/// Candidate rows at position `index` of RF⁻ matrices for `f` when the
/// NG-vector entry there is `fi`.
pub fn rf_minus_row(
    s: &NumericalSemigroup,
    index: usize,
    n: i64,
    fi: i64,
    f: i64,
    cap: usize,
) -> Result<Vec<Vec<i64>>> {
    if fi == f {
        Ok(vec![vec![0; s.embedding_dimension()]])
    } else {
        rows_for(s, n + fi - f, index, cap)
    }
}

/// Product condition `a_{jk} · b_{kj} = 0` for all `j ≠ k`.
pub fn check_coppie(a: &RfMatrix, b: &RfMatrix) -> Result<bool> {
    if a.kind != RfKind::Plus || b.kind != RfKind::Minus {
        return Err(Error::MatrixMismatch(
            "expected an RF+ and an RF- matrix".into(),
        ));
    }
    if a.f != b.f {
        return Err(Error::MatrixMismatch(format!(
            "pseudo-Frobenius numbers differ: {} vs {}",
            a.f, b.f
        )));
    }
    let nu = a.order();
    if b.order() != nu || a.entries.iter().chain(&b.entries).any(|r| r.len() != nu) {
        return Err(Error::MatrixMismatch("orders differ".into()));
    }
    Ok((0..nu).all(|j| (0..nu).all(|k| j == k || a.entries[j][k] * b.entries[k][j] == 0)))
}

/// A pair `(A, B)` breaking `a_{jk} · b_{kj} = 0`, located by position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductViolation {
    pub f: i64,
    pub j: usize,
    pub k: usize,
    /// The NG-vector entry at `k` for which the RF⁻ row is nonzero at `j`.
    pub fk: i64,
}

/// Checks `a_{jk} · b_{kj} = 0` over every `f ∈ PF(S)`, every NG-vector, every
/// RF⁺ matrix and every RF⁻ matrix, one row at a time.
///
/// Rows of both matrix families are chosen independently, and every candidate
/// row list is nonempty, so a bad pair exists iff some RF⁺ row `j` is positive
/// at `k` while some RF⁻ row `k` (for some admissible `f_k`) is positive at `j`.
/// Returns `Ok(None)` when `S` is not nearly Gorenstein.
pub fn product_condition_violation(
    s: &NumericalSemigroup,
    cap: usize,
) -> Result<Option<ProductViolation>> {
    let candidates = crate::nearly::all_ng_candidates(s);
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }
    let gens = s.generators();
    let nu = gens.len();
    for &f in s.pseudo_frobenius() {
        let plus = rf_plus_rows(s, f, cap)?;
        // reach_plus[j][k]: some RF⁺ row j has a positive entry at k
        let reach_plus: Vec<Vec<bool>> = plus
            .iter()
            .map(|rows| (0..nu).map(|k| rows.iter().any(|r| r[k] > 0)).collect())
            .collect();
        for k in 0..nu {
            for &fk in &candidates[k] {
                if fk == f {
                    continue;
                }
                for row in rf_minus_row(s, k, gens[k], fk, f, cap)? {
                    if let Some(j) = (0..nu).find(|&j| j != k && row[j] > 0 && reach_plus[j][k]) {
                        return Ok(Some(ProductViolation { f, j, k, fk }));
                    }
                }
            }
        }
    }
    Ok(None)
}
