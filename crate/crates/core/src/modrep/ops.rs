use super::ModuleRep;
use crate::algebra::{add_degrees, sub_degrees};
use crate::error::Result;
use crate::linalg::{kernel_from_rref, Matrix};

impl ModuleRep {
    /// `mM` as a list of spanning vectors.
    fn maximal_ideal_image(&self) -> Matrix {
        let f = self.field();
        self.actions
            .iter()
            .fold(Matrix::zeros(f, self.dim, 0), |acc, x| acc.hstack(x))
    }

    /// `μ(M) = dim M/mM`.
    pub fn min_gens(&self) -> usize {
        self.dim - self.maximal_ideal_image().rank()
    }

    /// `dim (0 :_M m)`, the socle dimension.
    pub fn socle_dim(&self) -> usize {
        let f = self.field();
        let stacked = self
            .actions
            .iter()
            .fold(Matrix::zeros(f, 0, self.dim), |acc, x| acc.vstack(x));
        self.dim - stacked.rank()
    }

    pub fn direct_sum(&self, other: &ModuleRep) -> Result<ModuleRep> {
        self.same_algebra(other)?;
        let f = self.field();
        let (a, b) = (self.dim, other.dim);
        let actions = self
            .actions
            .iter()
            .zip(&other.actions)
            .map(|(x, y)| {
                let mut m = Matrix::zeros(f, a + b, a + b);
                for r in 0..a {
                    for c in 0..a {
                        m.set(r, c, x.get(r, c));
                    }
                }
                for r in 0..b {
                    for c in 0..b {
                        m.set(a + r, a + c, y.get(r, c));
                    }
                }
                m
            })
            .collect();
        let degrees = match (&self.degrees, &other.degrees) {
            (Some(d), Some(e)) => Some(d.iter().chain(e).cloned().collect()),
            _ => None,
        };
        let mut out = ModuleRep::from_parts(self.algebra.clone(), actions, degrees, None);
        out.dim = a + b;
        Ok(out)
    }

    /// `M ⊗_A N`: the quotient of `M ⊗_k N` by `x·u ⊗ w − u ⊗ x·w`.
    pub fn tensor(&self, other: &ModuleRep) -> Result<ModuleRep> {
        self.same_algebra(other)?;
        let f = self.field();
        let (a, b) = (self.dim, other.dim);
        let idx = |i: usize, j: usize| i * b + j;
        let mut relations = Vec::new();
        for (x, y) in self.actions.iter().zip(&other.actions) {
            for i in 0..a {
                for j in 0..b {
                    let mut rel = vec![0u32; a * b];
                    for r in 0..a {
                        let c = x.get(r, i);
                        if c != 0 {
                            rel[idx(r, j)] = f.add(rel[idx(r, j)], c);
                        }
                    }
                    for s in 0..b {
                        let c = y.get(s, j);
                        if c != 0 {
                            rel[idx(i, s)] = f.sub(rel[idx(i, s)], c);
                        }
                    }
                    if rel.iter().any(|&v| v != 0) {
                        relations.push(rel);
                    }
                }
            }
        }
        let actions = self
            .actions
            .iter()
            .map(|x| {
                let mut m = Matrix::zeros(f, a * b, a * b);
                for i in 0..a {
                    for r in 0..a {
                        let c = x.get(r, i);
                        if c != 0 {
                            for j in 0..b {
                                m.set(idx(r, j), idx(i, j), c);
                            }
                        }
                    }
                }
                m
            })
            .collect();
        let degrees = match (&self.degrees, &other.degrees) {
            (Some(d), Some(e)) => Some(
                (0..a)
                    .flat_map(|i| (0..b).map(move |j| add_degrees(&d[i], &e[j])))
                    .collect(),
            ),
            _ => None,
        };
        let mut big = ModuleRep::from_parts(self.algebra.clone(), actions, degrees, None);
        big.dim = a * b;
        Ok(big.quotient(&relations).with_tag("tensor"))
    }

    /// `Hom_A(M, N)` as the space of k-linear maps commuting with every action.
    pub fn hom(&self, other: &ModuleRep) -> Result<ModuleRep> {
        self.same_algebra(other)?;
        let f = self.field();
        let (a, b) = (self.dim, other.dim);
        // unknown F is b × a, stored row-major at r·a + c
        let unknowns = a * b;
        let nv = self.actions.len();
        let mut constraints = Matrix::zeros(f, nv * unknowns, unknowns);
        for (v, (x, y)) in self.actions.iter().zip(&other.actions).enumerate() {
            for r in 0..b {
                for c in 0..a {
                    let row = v * unknowns + r * a + c;
                    // (F X)[r,c] = Σ_k F[r,k] X[k,c]
                    for k in 0..a {
                        let val = x.get(k, c);
                        if val != 0 {
                            let col = r * a + k;
                            constraints.set(row, col, f.add(constraints.get(row, col), val));
                        }
                    }
                    // (Y F)[r,c] = Σ_k Y[r,k] F[k,c]
                    for k in 0..b {
                        let val = y.get(r, k);
                        if val != 0 {
                            let col = k * a + c;
                            constraints.set(row, col, f.sub(constraints.get(row, col), val));
                        }
                    }
                }
            }
        }
        let pivots = constraints.rref_in_place();
        let basis = kernel_from_rref(&constraints, &pivots);
        let free: Vec<usize> = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
        let h = basis.len();
        let actions = other
            .actions
            .iter()
            .map(|y| {
                let mut m = Matrix::zeros(f, h, h);
                for (t, vecf) in basis.iter().enumerate() {
                    let fm = Matrix::from_flat(f, b, a, vecf.clone());
                    let img = y.mul(&fm);
                    for (s, &col) in free.iter().enumerate() {
                        m.set(s, t, img.get(col / a, col % a));
                    }
                }
                m
            })
            .collect();
        let degrees = match (&self.degrees, &other.degrees) {
            (Some(d), Some(e)) => Some(
                free.iter()
                    .map(|&col| sub_degrees(&e[col / a], &d[col % a]))
                    .collect(),
            ),
            _ => None,
        };
        let mut out = ModuleRep::from_parts(self.algebra.clone(), actions, degrees, Some("hom".into()));
        out.dim = h;
        Ok(out)
    }

    /// `Hom_k(M, k)` with the transposed actions.
    pub fn matlis_dual(&self) -> ModuleRep {
        let actions = self.actions.iter().map(Matrix::transpose).collect();
        let degrees = self
            .degrees
            .as_ref()
            .map(|d| d.iter().map(|x| x.iter().map(|v| -v).collect()).collect());
        let mut out = ModuleRep::from_parts(self.algebra.clone(), actions, degrees, Some("dual".into()));
        out.dim = self.dim;
        out
    }
}
