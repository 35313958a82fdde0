//! Exact Gauss-Jordan elimination over sparse rational rows.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensorcat::Mor;

/// A sparse row: `(column, value)` pairs, columns strictly ascending, no zeros.
pub type SparseRow = Vec<(usize, Scalar)>;

fn lookup(row: &SparseRow, col: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&col, |(c, _)| *c).ok().map(|k| &row[k].1)
}

/// `row - factor * pivot`, merged.
fn axpy(row: &SparseRow, factor: &Scalar, pivot: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_piv = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i].clone());
            i += 1;
        } else if take_piv {
            out.push((pivot[j].0, -(factor * &pivot[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - &(factor * &pivot[j].1);
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduces the augmented system `[A | B]` where `A` occupies columns
/// `0..unknowns` and each of the `rhs` trailing columns is a right-hand side.
///
/// Pivots on the first row holding a nonzero in the current column. Returns
/// the unique solution (one vector per right-hand side) or `NotInvertible`
/// with the rank of `A` when the system is inconsistent or underdetermined.
pub fn solve_augmented(mut rows: Vec<SparseRow>, unknowns: usize, rhs: usize) -> Result<Vec<Vec<Scalar>>> {
    let size = unknowns;
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; unknowns];
    let mut done = vec![false; rows.len()];
    let mut rank = 0;
    for (col, slot) in pivot_of_col.iter_mut().enumerate() {
        let Some(p) = (0..rows.len()).find(|&r| !done[r] && lookup(&rows[r], col).is_some()) else {
            continue;
        };
        let inv = lookup(&rows[p], col).and_then(Scalar::recip).expect("nonzero pivot");
        let pivot: SparseRow = rows[p].iter().map(|(c, v)| (*c, v * &inv)).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == p {
                continue;
            }
            if let Some(f) = lookup(row, col).cloned() {
                *row = axpy(row, &f, &pivot);
            }
        }
        rows[p] = pivot;
        done[p] = true;
        *slot = Some(p);
        rank += 1;
    }
    let consistent = rows
        .iter()
        .enumerate()
        .all(|(r, row)| done[r] || row.iter().all(|(c, _)| *c < unknowns));
    if rank < unknowns || !consistent {
        return Err(Error::NotInvertible { rank, size });
    }
    let solutions = (0..rhs)
        .map(|k| {
            pivot_of_col
                .iter()
                .map(|p| {
                    let row = &rows[p.expect("full rank")];
                    lookup(row, unknowns + k).cloned().unwrap_or_else(Scalar::zero)
                })
                .collect()
        })
        .collect();
    Ok(solutions)
}

/// Matrix inverse of a square morphism, `NotInvertible` when singular.
pub fn invert(f: &Mor) -> Result<Mor> {
    let n = f.rows();
    if !f.is_square() {
        return Err(Error::NotInvertible { rank: 0, size: n.max(f.cols()) });
    }
    let mut rows: Vec<SparseRow> = vec![Vec::new(); n];
    for (r, c, v) in f.nonzero_entries() {
        rows[r].push((c, v.clone()));
    }
    for (r, row) in rows.iter_mut().enumerate() {
        row.sort_by_key(|(c, _)| *c);
        row.push((n + r, Scalar::one()));
    }
    let sol = solve_augmented(rows, n, n)?;
    // sol[k] is column k of the inverse
    Ok(Mor::from_columns(f.cod(), f.dom(), |k| {
        sol[k].iter().cloned().enumerate().filter(|(_, v)| !v.is_zero()).collect::<Vec<_>>()
    }))
}
