use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::FieldSpec;

/// Exact rank of an integer matrix over the given field. Rows may be empty.
///
/// Characteristic 0 first eliminates on `±1` pivots, which keeps the entries
/// integral without division; whatever block has no unit entry left goes to
/// fraction-free (Bareiss) elimination, on `i128` while the entries fit and on
/// big integers otherwise.
pub fn matrix_rank(rows: &[Vec<i64>], field: FieldSpec) -> usize {
    match field {
        FieldSpec::Prime(p) => rank_mod_p(rows, u64::from(p)),
        FieldSpec::Rationals => match eliminate_unit_pivots(rows) {
            Some((rank, rest)) if rest.is_empty() => rank,
            Some((rank, rest)) => {
                rank + rank_bareiss_i128(&rest).unwrap_or_else(|| rank_bareiss_big(&rest))
            }
            None => rank_bareiss_i128(rows).unwrap_or_else(|| rank_bareiss_big(rows)),
        },
    }
}

/// Pivots on entries `±1` while any remain. Returns the number of pivots and
/// the rows not used as pivots, or `None` on `i64` overflow.
fn eliminate_unit_pivots(rows: &[Vec<i64>]) -> Option<(usize, Vec<Vec<i64>>)> {
    let mut a: Vec<Vec<i64>> = rows.to_vec();
    let mut rank = 0;
    loop {
        let found = a.iter().enumerate().find_map(|(r, row)| {
            row.iter().position(|x| x.abs() == 1).map(|c| (r, c))
        });
        let Some((r, c)) = found else {
            break;
        };
        let pivot_row = a.swap_remove(r);
        let unit = pivot_row[c];
        for row in a.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            // row -= (f / unit) * pivot_row, and 1/unit = unit.
            let f = f.checked_mul(unit)?;
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                if y != 0 {
                    *x = x.checked_sub(f.checked_mul(y)?)?;
                }
            }
        }
        rank += 1;
    }
    a.retain(|row| row.iter().any(|&x| x != 0));
    Some((rank, a))
}

fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = inverse_mod(a[rank][col], p);
        for j in col..ncols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        for r in rank + 1..nrows {
            let factor = a[r][col];
            if factor == 0 {
                continue;
            }
            for j in col..ncols {
                let sub = factor * a[rank][j] % p;
                a[r][j] = (a[r][j] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// `None` on overflow.
fn rank_bareiss_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let piv = a[rank][col];
        for r in rank + 1..nrows {
            let lead = a[r][col];
            for j in col + 1..ncols {
                let t = piv
                    .checked_mul(a[r][j])?
                    .checked_sub(lead.checked_mul(a[rank][j])?)?;
                a[r][j] = t / prev;
            }
            a[r][col] = 0;
        }
        prev = piv;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Some(rank)
}

fn rank_bareiss_big(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let piv = a[rank][col].clone();
        for r in rank + 1..nrows {
            let lead = a[r][col].clone();
            for j in col + 1..ncols {
                let t = &piv * &a[r][j] - &lead * &a[rank][j];
                a[r][j] = t / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = piv;
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}
