//! Minimal free resolutions over artinian algebras by exact linear algebra.
//!
//! Every free module `A^b` is handled as the k-space `k^{b·ℓ(A)}`, with basis
//! vector `(j, t)` at index `j·ℓ(A) + t` standing for `basis[t]·e_j`. When the
//! module is graded for the torus grading of `A`, all maps are homogeneous and
//! every kernel and span is computed one degree block at a time.

mod blocks;

pub(crate) use blocks::Blocks;

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Degree, QuotientAlgebra, SparseVec};
use crate::error::{Error, Result};
use crate::linalg::{kernel_from_rref, Echelon, Matrix, PrimeField};
use crate::modrep::{ModuleRep, PresentationMatrix};

/// Default cap on the k-dimension of any free module in a resolution.
pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResolveOptions {
    /// Largest allowed `β_i·ℓ(A)`.
    pub budget: usize,
    /// Shuffles the order in which kernel vectors are offered as generators.
    pub seed: Option<u64>,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions {
            budget: DEFAULT_BUDGET,
            seed: None,
        }
    }
}

/// A minimal free resolution `F_N → ... → F_0 → M → 0`, truncated at depth `N`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    module: ModuleRep,
    depth: usize,
    graded: bool,
    betti: Vec<usize>,
    /// `ℓ(Ω^i)` for `i ≤ N`.
    lengths: Vec<usize>,
    /// `dim mΩ^i`.
    mk_dims: Vec<usize>,
    /// Rank of `F_i → Ω^i` computed from scratch, for `i < N`.
    image_ranks: Vec<usize>,
    /// Minimal generators of `Ω^i`, in the coordinates of `M` for `i = 0`
    /// and of `F_{i-1}` otherwise.
    generators: Vec<Vec<SparseVec>>,
    generator_degrees: Vec<Vec<Degree>>,
}

/// Resolves `m` to depth `steps` with default options.
pub fn resolve(m: &ModuleRep, steps: usize) -> Result<FreeResolution> {
    resolve_with(m, steps, ResolveOptions::default())
}

/// `(b0, b1)`-presentation of `m` taken from the first step of its resolution.
pub fn minimal_presentation(m: &ModuleRep) -> Result<PresentationMatrix> {
    let res = resolve(m, 1)?;
    if res.betti[0] == 0 {
        return PresentationMatrix::new(m.algebra(), Vec::new());
    }
    Ok(res.boundary(0))
}

pub fn resolve_with(m: &ModuleRep, steps: usize, opts: ResolveOptions) -> Result<FreeResolution> {
    let alg = m.algebra().clone();
    let len = alg.require_artinian()?;
    let field = alg.field();
    let graded = m.is_graded();
    let mut rng = opts.seed.map(ChaCha8Rng::seed_from_u64);

    // Stage 0: generators of M itself.
    let m_degrees: Vec<Degree> = match m.degrees() {
        Some(d) => d.to_vec(),
        None => vec![Vec::new(); m.length()],
    };
    let m_blocks = Blocks::new(m_degrees.iter().cloned());
    let unit_basis: Vec<Vec<SparseVec>> = m_blocks
        .members()
        .iter()
        .map(|mem| mem.iter().map(|&q| vec![(q, 1)]).collect())
        .collect();
    let act_m = |v: usize, x: &SparseVec| -> SparseVec {
        let a = m.action(v);
        let mut acc = vec![0u32; m.length()];
        for &(q, c) in x {
            for r in 0..m.length() {
                let e = a.get(r, q);
                if e != 0 {
                    acc[r] = field.add(acc[r], field.mul(c, e));
                }
            }
        }
        to_sparse(&acc)
    };
    let (gens, degs, mk) = select_generators(
        field,
        &alg,
        &m_blocks,
        unit_basis,
        act_m,
        rng.as_mut(),
    );
    let mut res = FreeResolution {
        module: m.clone(),
        depth: steps,
        graded,
        betti: vec![gens.len()],
        lengths: vec![m.length()],
        mk_dims: vec![mk],
        image_ranks: Vec::new(),
        generators: vec![gens],
        generator_degrees: vec![degs],
    };

    let mut ambient_blocks = m_blocks;
    for i in 0..steps {
        let beta = res.betti[i];
        if beta.saturating_mul(len) > opts.budget {
            return Err(Error::BudgetExceeded {
                stage: i,
                dim: beta * len,
                budget: opts.budget,
            });
        }
        if beta == 0 {
            for _ in i..steps {
                res.betti.push(0);
                res.lengths.push(0);
                res.mk_dims.push(0);
                res.image_ranks.push(0);
                res.generators.push(Vec::new());
                res.generator_degrees.push(Vec::new());
            }
            break;
        }
        let free_blocks = Blocks::new(free_degrees(&alg, &res.generator_degrees[i], graded));
        let gens = &res.generators[i];
        let ambient_is_module = i == 0;

        // kernel of F_i → ambient, block by block
        let mut kernel: Vec<Vec<SparseVec>> = Vec::with_capacity(free_blocks.len());
        let mut rank_total = 0;
        for (b, members) in free_blocks.members().iter().enumerate() {
            let key = free_blocks.key(b);
            let (rows, row_members): (usize, Option<&Vec<usize>>) = match ambient_blocks.block_of_key(key) {
                Some(ab) => (ambient_blocks.members()[ab].len(), Some(&ambient_blocks.members()[ab])),
                None => (0, None),
            };
            let cols = members.len();
            let mut data = vec![0u32; rows * cols];
            for (col, &q) in members.iter().enumerate() {
                let (j, t) = (q / len, q % len);
                let image = if ambient_is_module {
                    to_sparse(&m.apply_monomial(t, &to_dense(&gens[j], m.length())))
                } else {
                    mono_times(&alg, t, &gens[j])
                };
                for (g, c) in image {
                    let (ab, local) = ambient_blocks.position(g);
                    debug_assert_eq!(Some(&ambient_blocks.members()[ab]), row_members);
                    let _ = ab;
                    data[local * cols + col] = c;
                }
            }
            let mut mat = Matrix::from_flat(field, rows, cols, data);
            let pivots = mat.rref_in_place();
            rank_total += pivots.len();
            let ker = kernel_from_rref(&mat, &pivots)
                .into_iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(l, &c)| (members[l], c))
                        .collect()
                })
                .collect();
            kernel.push(ker);
        }
        res.image_ranks.push(rank_total);
        let kernel_dim: usize = kernel.iter().map(Vec::len).sum();
        res.lengths.push(kernel_dim);

        let act_f = |v: usize, x: &SparseVec| var_times(&alg, v, x);
        let (g, d, mk) = select_generators(field, &alg, &free_blocks, kernel, act_f, rng.as_mut());
        res.betti.push(g.len());
        res.mk_dims.push(mk);
        res.generators.push(g);
        res.generator_degrees.push(d);
        ambient_blocks = free_blocks;
    }
    if let Some(&beta) = res.betti.last() {
        if beta.saturating_mul(len) > opts.budget {
            return Err(Error::BudgetExceeded {
                stage: steps,
                dim: beta * len,
                budget: opts.budget,
            });
        }
    }
    res.check_invariants()?;
    Ok(res)
}

/// Picks a complement of `mK` inside `K` in every block. Returns the chosen
/// generators (global sparse vectors), their degrees and `dim mK`.
fn select_generators<F>(
    field: PrimeField,
    alg: &QuotientAlgebra,
    blocks: &Blocks,
    mut kernel: Vec<Vec<SparseVec>>,
    act: F,
    rng: Option<&mut ChaCha8Rng>,
) -> (Vec<SparseVec>, Vec<Degree>, usize)
where
    F: Fn(usize, &SparseVec) -> SparseVec,
{
    // spanning vectors of mK grouped by target block
    let mut span: Vec<Vec<SparseVec>> = vec![Vec::new(); blocks.len()];
    for basis in &kernel {
        for k in basis {
            for v in 0..alg.nvars() {
                let img = act(v, k);
                if let Some(&(q, _)) = img.first() {
                    span[blocks.position(q).0].push(img);
                }
            }
        }
    }
    if let Some(rng) = rng {
        for basis in kernel.iter_mut() {
            basis.shuffle(rng);
        }
    }
    let mut gens = Vec::new();
    let mut degs = Vec::new();
    let mut mk_dim = 0;
    for (b, basis) in kernel.iter().enumerate() {
        if basis.is_empty() {
            continue;
        }
        let width = blocks.members()[b].len();
        let mut ech = Echelon::new(field, width);
        for s in &span[b] {
            if ech.dim() == basis.len() {
                break;
            }
            ech.insert(blocks.localize(b, s));
        }
        mk_dim += ech.dim();
        for k in basis {
            if ech.dim() == basis.len() {
                break;
            }
            if ech.insert(blocks.localize(b, k)) {
                gens.push(k.clone());
                degs.push(blocks.key(b).clone());
            }
        }
    }
    (gens, degs, mk_dim)
}

fn free_degrees<'a>(
    alg: &'a QuotientAlgebra,
    gen_degrees: &'a [Degree],
    graded: bool,
) -> impl Iterator<Item = Degree> + 'a {
    gen_degrees.iter().flat_map(move |d| {
        (0..alg.basis().len()).map(move |t| {
            if graded {
                crate::algebra::add_degrees(d, alg.basis_degree(t))
            } else {
                Vec::new()
            }
        })
    })
}

/// `basis[t] · x` for `x` in a free module.
pub(crate) fn mono_times(alg: &QuotientAlgebra, t: usize, x: &SparseVec) -> SparseVec {
    let len = alg.basis().len();
    let mut out = Vec::new();
    for &(q, c) in x {
        let (j, s) = (q / len, q % len);
        for &(u, d) in alg.mono_mult(t, s) {
            out.push((j * len + u, alg.field().mul(c, d)));
        }
    }
    merge(alg.field(), out)
}

/// `x_v · x` for `x` in a free module.
pub(crate) fn var_times(alg: &QuotientAlgebra, v: usize, x: &SparseVec) -> SparseVec {
    let len = alg.basis().len();
    let mut out = Vec::new();
    for &(q, c) in x {
        let (j, s) = (q / len, q % len);
        for &(u, d) in alg.var_mult(v, s) {
            out.push((j * len + u, alg.field().mul(c, d)));
        }
    }
    merge(alg.field(), out)
}

fn merge(field: PrimeField, mut v: SparseVec) -> SparseVec {
    v.sort_unstable_by_key(|&(i, _)| i);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, d)) if *j == i => *d = field.add(*d, c),
            _ => out.push((i, c)),
        }
    }
    out.retain(|&(_, c)| c != 0);
    out
}

pub(crate) fn to_sparse(v: &[u32]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect()
}

pub(crate) fn to_dense(v: &SparseVec, n: usize) -> Vec<u32> {
    let mut out = vec![0; n];
    for &(i, c) in v {
        out[i] = c;
    }
    out
}

impl FreeResolution {
    pub fn module(&self) -> &ModuleRep {
        &self.module
    }

    pub fn algebra(&self) -> &Arc<QuotientAlgebra> {
        self.module.algebra()
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// `β_0, ..., β_N`.
    pub fn betti(&self) -> &[usize] {
        &self.betti
    }

    /// `ℓ(Ω^0), ..., ℓ(Ω^N)`.
    pub fn syzygy_lengths(&self) -> &[usize] {
        &self.lengths
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    /// Rank of `F_i → Ω^i` measured on the A-span of the generators, `i < N`.
    pub fn image_ranks(&self) -> &[usize] {
        &self.image_ranks
    }

    /// Curvature interval of the Betti sequence.
    pub fn curvature(&self, window: usize) -> Result<crate::asymptotics::CurvatureInterval> {
        crate::asymptotics::curvature_estimate(&self.betti, window)
    }

    /// Index of the first vanishing Betti number, i.e. the projective
    /// dimension plus one, when it is within the computed range.
    pub fn first_zero(&self) -> Option<usize> {
        self.betti.iter().position(|&b| b == 0)
    }

    /// Degrees of the generators of `F_i`.
    pub fn generator_degrees(&self, i: usize) -> &[Degree] {
        &self.generator_degrees[i]
    }

    /// Column `j` of the boundary `F_{i+1} → F_i` as a sparse vector in `F_i`.
    pub(crate) fn boundary_column(&self, i: usize, j: usize) -> &SparseVec {
        &self.generators[i + 1][j]
    }

    /// The boundary `F_{i+1} → F_i` as a `β_i × β_{i+1}` matrix over `A`.
    pub fn boundary(&self, i: usize) -> PresentationMatrix {
        let alg = self.algebra();
        let len = alg.basis().len();
        let (rows, cols) = (self.betti[i], self.betti[i + 1]);
        let mut entries = vec![vec![vec![0u32; len]; cols]; rows];
        for (c, g) in self.generators[i + 1].iter().enumerate() {
            for &(q, v) in g {
                entries[q / len][c][q % len] = v;
            }
        }
        PresentationMatrix::new(alg, entries).expect("boundary has consistent shape")
    }

    /// The boundary `F_{i+1} → F_i` expanded to a k-matrix of size
    /// `β_i·ℓ(A) × β_{i+1}·ℓ(A)`.
    pub fn expanded_boundary(&self, i: usize) -> Matrix {
        let alg = self.algebra();
        let len = alg.basis().len();
        let (rows, cols) = (self.betti[i] * len, self.betti[i + 1] * len);
        let mut m = Matrix::zeros(alg.field(), rows, cols);
        for (j, g) in self.generators[i + 1].iter().enumerate() {
            for t in 0..len {
                for (q, c) in mono_times(alg, t, g) {
                    m.set(q, j * len + t, c);
                }
            }
        }
        m
    }

    /// The augmentation `F_0 → M` as a k-matrix.
    pub fn augmentation(&self) -> Matrix {
        let alg = self.algebra();
        let len = alg.basis().len();
        let n = self.module.length();
        let mut m = Matrix::zeros(alg.field(), n, self.betti[0] * len);
        for (j, g) in self.generators[0].iter().enumerate() {
            let dense = to_dense(g, n);
            for t in 0..len {
                let img = self.module.apply_monomial(t, &dense);
                for (r, &c) in img.iter().enumerate() {
                    m.set(r, j * len + t, c);
                }
            }
        }
        m
    }

    /// The syzygy `Ω^i(M)` as a module; `Ω^0 = M`.
    pub fn syzygy(&self, i: usize) -> Result<ModuleRep> {
        if i > self.depth {
            return Err(Error::DepthExceeded {
                index: i,
                depth: self.depth,
            });
        }
        if i == 0 {
            return Ok(self.module.clone());
        }
        let alg = self.algebra().clone();
        let field = alg.field();
        let len = alg.basis().len();
        if self.betti[i] == 0 {
            return Ok(ModuleRep::zero(alg));
        }
        let blocks = Blocks::new(free_degrees(&alg, &self.generator_degrees[i - 1], self.graded));
        let mut span: Vec<Vec<SparseVec>> = vec![Vec::new(); blocks.len()];
        for g in &self.generators[i] {
            for t in 0..len {
                let img = mono_times(&alg, t, g);
                if let Some(&(q, _)) = img.first() {
                    span[blocks.position(q).0].push(img);
                }
            }
        }
        // basis: RREF rows per block; coordinates are read off at pivots
        let mut basis: Vec<SparseVec> = Vec::new();
        let mut degrees: Vec<Degree> = Vec::new();
        let mut coord_of: std::collections::HashMap<usize, usize> = Default::default();
        for (b, vecs) in span.iter().enumerate() {
            if vecs.is_empty() {
                continue;
            }
            let width = blocks.members()[b].len();
            let mut data = Vec::with_capacity(vecs.len() * width);
            for v in vecs {
                data.extend(blocks.localize(b, v));
            }
            let mut mat = Matrix::from_flat(field, vecs.len(), width, data);
            let pivots = mat.rref_in_place();
            for (r, &p) in pivots.iter().enumerate() {
                coord_of.insert(blocks.members()[b][p], basis.len());
                basis.push(
                    mat.row(r)
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(l, &c)| (blocks.members()[b][l], c))
                        .collect(),
                );
                degrees.push(blocks.key(b).clone());
            }
        }
        let n = basis.len();
        let actions = (0..alg.nvars())
            .map(|v| {
                let mut m = Matrix::zeros(field, n, n);
                for (c, b) in basis.iter().enumerate() {
                    for (q, val) in var_times(&alg, v, b) {
                        if let Some(&r) = coord_of.get(&q) {
                            m.set(r, c, val);
                        }
                    }
                }
                m
            })
            .collect();
        let degrees = self.graded.then_some(degrees);
        let out = ModuleRep::new(alg, actions, degrees)?;
        Ok(out.with_tag(format!("syzygy {i}")))
    }

    /// Re-checks minimality, exactness, `μ(Ω^i) = β_i` and the length
    /// identity `ℓ(Ω^i) + ℓ(Ω^{i+1}) = ℓ(A)·β_i`.
    pub fn check_invariants(&self) -> Result<()> {
        let len = self.algebra().basis().len();
        for i in 1..=self.depth {
            for g in &self.generators[i] {
                if g.iter().any(|&(q, _)| q % len == 0) {
                    return Err(Error::Mismatch(format!("boundary {i} has a unit entry")));
                }
            }
        }
        for i in 0..self.depth {
            if self.image_ranks[i] != self.lengths[i] {
                return Err(Error::Mismatch(format!(
                    "stage {i}: image rank {} but syzygy length {}",
                    self.image_ranks[i], self.lengths[i]
                )));
            }
            if self.lengths[i] + self.lengths[i + 1] != len * self.betti[i] {
                return Err(Error::Mismatch(format!("length identity fails at {i}")));
            }
        }
        for i in 0..=self.depth {
            if self.betti[i] + self.mk_dims[i] != self.lengths[i] {
                return Err(Error::Mismatch(format!("generator count fails at {i}")));
            }
            if self.betti[i] != self.generators[i].len() {
                return Err(Error::Mismatch(format!("betti/generator count at {i}")));
            }
        }
        if let Some(z) = self.first_zero() {
            if self.betti[z..].iter().any(|&b| b != 0) {
                return Err(Error::Mismatch("betti numbers revive after a zero".into()));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests;
