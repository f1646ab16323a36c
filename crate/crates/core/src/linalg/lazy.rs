//! Elimination kernels with delayed modular reduction.
//!
//! Entries are held as `u64` and updated with `d += f * s` where `f, s < p`;
//! a full reduction is only needed once the number of pending updates could
//! overflow. For small primes this is effectively never, and the inner loop
//! compiles to plain vector multiply-adds.

use super::field::PrimeField;

/// How many `(p-1)^2` products may be added to a value below `p` before a
/// `u64` could overflow.
pub(crate) fn capacity(field: PrimeField) -> u64 {
    let p = field.modulus() as u64;
    let sq = ((p - 1) * (p - 1)).max(1);
    ((u64::MAX - p) / sq).max(1)
}

#[inline]
fn madd(dst: &mut [u64], src: &[u64], f: u64) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d += f * s;
    }
}

/// In-place reduced row-echelon form of a row-major `rows × cols` matrix.
/// Pivots are chosen as the first nonzero entry at or below the current row.
pub(crate) fn rref(field: PrimeField, rows: usize, cols: usize, data: &mut [u32]) -> Vec<usize> {
    let p = field.modulus() as u64;
    let cap = capacity(field);
    let mut w: Vec<u64> = data.iter().map(|&x| x as u64).collect();
    let mut pivots = Vec::new();
    let mut pending = 0u64;
    let mut pivot_row = vec![0u64; cols];
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !w[i * cols + c].is_multiple_of(p)) else {
            continue;
        };
        if pr != r {
            let (a, b) = w.split_at_mut(pr * cols);
            a[r * cols..(r + 1) * cols].swap_with_slice(&mut b[..cols]);
        }
        if pending >= cap {
            for x in w.iter_mut() {
                *x %= p;
            }
            pending = 0;
        }
        let inv = field.inv((w[r * cols + c] % p) as u32) as u64;
        for (j, x) in w[r * cols..(r + 1) * cols].iter_mut().enumerate() {
            *x = if j < c { 0 } else { (*x % p) * inv % p };
            pivot_row[j] = *x;
        }
        for i in (0..rows).filter(|&i| i != r) {
            let row = &mut w[i * cols..(i + 1) * cols];
            let a = row[c] % p;
            if a != 0 {
                madd(&mut row[c..], &pivot_row[c..], p - a);
            }
        }
        pending += 1;
        pivots.push(c);
        r += 1;
    }
    for (d, x) in data.iter_mut().zip(&w) {
        *d = (x % p) as u32;
    }
    pivots
}

/// Reduces `v` against echelon rows given as `(pivot, row)` with unit
/// pivots, in the iteration order supplied.
pub(crate) fn reduce_against<'a>(
    field: PrimeField,
    v: &mut [u32],
    rows: impl Iterator<Item = (usize, &'a Vec<u32>)>,
) {
    let p = field.modulus() as u64;
    let cap = capacity(field);
    let mut w: Vec<u64> = v.iter().map(|&x| x as u64).collect();
    let mut pending = 0u64;
    for (piv, row) in rows {
        let a = w[piv] % p;
        if a == 0 {
            continue;
        }
        if pending >= cap {
            for x in w[piv..].iter_mut() {
                *x %= p;
            }
            pending = 0;
        }
        let f = p - a;
        for (d, &s) in w[piv..].iter_mut().zip(&row[piv..]) {
            *d += f * s as u64;
        }
        pending += 1;
    }
    for (d, x) in v.iter_mut().zip(&w) {
        *d = (x % p) as u32;
    }
}
