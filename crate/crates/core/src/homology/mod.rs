//! Lengths of Tor and Ext computed from a minimal resolution of the first
//! argument, and Bass numbers via Matlis duality.

use serde::Serialize;

use crate::algebra::{add_degrees, sub_degrees, Degree, SparseVec};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::modrep::ModuleRep;
use crate::resolution::{resolve_with, FreeResolution, ResolveOptions};

/// `ℓ Tor_i(M, N)` for `0 ≤ i ≤ N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorProfile {
    pub depth: usize,
    pub lengths: Vec<usize>,
    /// Least `w` with `Tor_i = 0` for every `w ≤ i ≤ depth`.
    pub vanishing_from: Option<usize>,
}

/// Bass numbers `r_n(N) = ℓ Ext^n(k, N)`, computed directly and through
/// `β_n(N^∨)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BassSequence {
    pub values: Vec<usize>,
    pub via_dual: Vec<usize>,
}

pub fn tor_lengths(m: &ModuleRep, n: &ModuleRep, depth: usize) -> Result<TorProfile> {
    tor_lengths_with(m, n, depth, ResolveOptions::default())
}

pub fn tor_lengths_with(
    m: &ModuleRep,
    n: &ModuleRep,
    depth: usize,
    opts: ResolveOptions,
) -> Result<TorProfile> {
    m.same_algebra(n)?;
    let res = resolve_with(m, depth + 1, opts)?;
    let lengths = tor_from_resolution(&res, n, depth);
    let vanishing_from = vanishing_scan(&lengths, 1);
    Ok(TorProfile {
        depth,
        lengths,
        vanishing_from,
    })
}

/// Tor lengths from an existing resolution of depth at least `depth + 1`.
pub fn tor_from_resolution(res: &FreeResolution, n: &ModuleRep, depth: usize) -> Vec<usize> {
    assert!(res.depth() > depth, "resolution too short for Tor at {depth}");
    // rank of d_i ⊗ N : N^{β_i} → N^{β_{i-1}}, for i = 1..=depth+1
    let ranks: Vec<usize> = (1..=depth + 1).map(|i| tor_boundary_rank(res, n, i)).collect();
    (0..=depth)
        .map(|i| {
            let dim = res.betti()[i] * n.length();
            let into = if i == 0 { 0 } else { ranks[i - 1] };
            dim - into - ranks[i]
        })
        .collect()
}

pub fn ext_lengths(m: &ModuleRep, n: &ModuleRep, depth: usize) -> Result<Vec<usize>> {
    ext_lengths_with(m, n, depth, ResolveOptions::default())
}

pub fn ext_lengths_with(
    m: &ModuleRep,
    n: &ModuleRep,
    depth: usize,
    opts: ResolveOptions,
) -> Result<Vec<usize>> {
    m.same_algebra(n)?;
    let res = resolve_with(m, depth + 1, opts)?;
    Ok(ext_from_resolution(&res, n, depth))
}

pub fn ext_from_resolution(res: &FreeResolution, n: &ModuleRep, depth: usize) -> Vec<usize> {
    assert!(res.depth() > depth, "resolution too short for Ext at {depth}");
    // rank of δ^i : N^{β_i} → N^{β_{i+1}}, for i = 0..=depth
    let ranks: Vec<usize> = (0..=depth).map(|i| ext_coboundary_rank(res, n, i)).collect();
    (0..=depth)
        .map(|i| {
            let dim = res.betti()[i] * n.length();
            let from = if i == 0 { 0 } else { ranks[i - 1] };
            dim - from - ranks[i]
        })
        .collect()
}

pub fn bass_sequence(n: &ModuleRep, depth: usize) -> Result<BassSequence> {
    bass_sequence_with(n, depth, ResolveOptions::default())
}

pub fn bass_sequence_with(n: &ModuleRep, depth: usize, opts: ResolveOptions) -> Result<BassSequence> {
    let k = ModuleRep::residue_field(n.algebra().clone())?;
    let values = ext_lengths_with(&k, n, depth, opts)?;
    let via_dual = resolve_with(&n.matlis_dual(), depth, opts)?.betti().to_vec();
    if values != via_dual {
        return Err(Error::Mismatch(format!(
            "Bass numbers {values:?} disagree with Betti numbers of the dual {via_dual:?}"
        )));
    }
    Ok(BassSequence { values, via_dual })
}

/// Least `w` such that `seq[w..]` is all zero and has at least `window`
/// entries.
pub fn vanishing_scan(seq: &[usize], window: usize) -> Option<usize> {
    let w = seq.iter().rposition(|&x| x != 0).map_or(0, |i| i + 1);
    (w < seq.len() && seq.len() - w >= window.max(1)).then_some(w)
}

/// Rank of a map `N^{src} → N^{tgt}` given column by column, computed one
/// degree block at a time when degrees are supplied.
fn blocked_rank(
    field: crate::linalg::PrimeField,
    src_degrees: Option<Vec<Degree>>,
    tgt_degrees: Option<Vec<Degree>>,
    tgt_len: usize,
    columns: Vec<SparseVec>,
) -> usize {
    let (src_deg, tgt_deg) = match (src_degrees, tgt_degrees) {
        (Some(s), Some(t)) => (s, t),
        _ => (vec![Vec::new(); columns.len()], vec![Vec::new(); tgt_len]),
    };
    let src_blocks = crate::resolution::Blocks::new(src_deg.into_iter());
    let tgt_blocks = crate::resolution::Blocks::new(tgt_deg.into_iter());
    let mut rank = 0;
    for (b, members) in src_blocks.members().iter().enumerate() {
        let Some(tb) = tgt_blocks.block_of_key(src_blocks.key(b)) else {
            continue;
        };
        let rows = tgt_blocks.members()[tb].len();
        let cols = members.len();
        let mut data = vec![0u32; rows * cols];
        let mut any = false;
        for (c, &q) in members.iter().enumerate() {
            for &(r, v) in &columns[q] {
                let (bb, l) = tgt_blocks.position(r);
                debug_assert_eq!(bb, tb);
                data[l * cols + c] = v;
                any = true;
            }
        }
        if any {
            rank += Matrix::from_flat(field, rows, cols, data).rank();
        }
    }
    rank
}

fn tor_boundary_rank(res: &FreeResolution, n: &ModuleRep, i: usize) -> usize {
    let len = res.algebra().basis().len();
    let nl = n.length();
    let (src, tgt) = (res.betti()[i], res.betti()[i - 1]);
    if src == 0 || tgt == 0 || nl == 0 {
        return 0;
    }
    let field = n.field();
    let mono = n.monomial_actions();
    let mut columns = vec![SparseVec::new(); src * nl];
    for j in 0..src {
        let g = res.boundary_column(i - 1, j);
        for s in 0..nl {
            let mut acc = vec![0u32; tgt * nl];
            for &(q, c) in g {
                let (jp, t) = (q / len, q % len);
                for r in 0..nl {
                    let e = mono[t].get(r, s);
                    if e != 0 {
                        let idx = jp * nl + r;
                        acc[idx] = field.add(acc[idx], field.mul(c, e));
                    }
                }
            }
            columns[j * nl + s] = crate::resolution::to_sparse(&acc);
        }
    }
    let (sd, td) = match (res.is_graded(), n.degrees()) {
        (true, Some(nd)) => (
            Some(shifted(res.generator_degrees(i), nd, false)),
            Some(shifted(res.generator_degrees(i - 1), nd, false)),
        ),
        _ => (None, None),
    };
    blocked_rank(field, sd, td, tgt * nl, columns)
}

fn ext_coboundary_rank(res: &FreeResolution, n: &ModuleRep, i: usize) -> usize {
    let len = res.algebra().basis().len();
    let nl = n.length();
    let (src, tgt) = (res.betti()[i], res.betti()[i + 1]);
    if src == 0 || tgt == 0 || nl == 0 {
        return 0;
    }
    let field = n.field();
    let mono = n.monomial_actions();
    // (δφ)_j = Σ_{j'} a_{j'j} φ_{j'}; source index j'·ℓN + s, target j·ℓN + r
    let mut dense: Vec<Vec<u32>> = vec![vec![0u32; tgt * nl]; src * nl];
    for j in 0..tgt {
        for &(q, c) in res.boundary_column(i, j) {
            let (jp, t) = (q / len, q % len);
            for s in 0..nl {
                let col = &mut dense[jp * nl + s];
                for r in 0..nl {
                    let e = mono[t].get(r, s);
                    if e != 0 {
                        let idx = j * nl + r;
                        col[idx] = field.add(col[idx], field.mul(c, e));
                    }
                }
            }
        }
    }
    let columns = dense.iter().map(|c| crate::resolution::to_sparse(c)).collect();
    let (sd, td) = match (res.is_graded(), n.degrees()) {
        (true, Some(nd)) => (
            Some(shifted(res.generator_degrees(i), nd, true)),
            Some(shifted(res.generator_degrees(i + 1), nd, true)),
        ),
        _ => (None, None),
    };
    blocked_rank(field, sd, td, tgt * nl, columns)
}

/// Degrees of `N^{β}` with generator degrees `gens`: `g + d` for tensor,
/// `d - g` for Hom.
fn shifted(gens: &[Degree], nd: &[Degree], hom: bool) -> Vec<Degree> {
    gens.iter()
        .flat_map(|g| {
            nd.iter().map(move |d| if hom { sub_degrees(d, g) } else { add_degrees(g, d) })
        })
        .collect()
}

#[cfg(test)]
mod tests;
