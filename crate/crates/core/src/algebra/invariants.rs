use std::collections::HashMap;

use super::QuotientAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix};
use crate::poly::{standard_monomials, Monomial};

/// Values `dim_k A_t` of the Hilbert function of the associated graded ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    pub values: Vec<usize>,
    /// Value taken beyond the computed range: 0 when artinian, the stable
    /// value in dimension one.
    pub tail: usize,
}

impl HilbertFunction {
    pub fn sum(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn at(&self, t: usize) -> usize {
        self.values.get(t).copied().unwrap_or(self.tail)
    }
}

impl QuotientAlgebra {
    /// Hilbert function. For artinian algebras this is computed from the
    /// m-adic filtration (so it does not rely on homogeneity) and runs until
    /// it reaches 0. For dimension one it counts standard monomials per
    /// degree until the value has been constant over four consecutive degrees.
    pub fn hilbert_function(&self) -> Result<HilbertFunction> {
        if self.is_artinian() {
            return Ok(HilbertFunction {
                values: self.madic_dims(),
                tail: 0,
            });
        }
        if !self.is_standard_graded() {
            return Err(Error::NotStandardGraded);
        }
        let leading = self.groebner().leading_monomials();
        let mut cap = self.degree_bound().max(8);
        loop {
            let mut values = vec![0usize; cap as usize + 1];
            for m in standard_monomials(&leading, self.nvars(), self.ring().order(), cap) {
                values[m.degree() as usize] += 1;
            }
            let tail = &values[values.len() - 4..];
            if self.krull_dim() > 1 || tail.iter().all(|&v| v == tail[0]) {
                let tail = if self.krull_dim() == 1 { tail[0] } else { 0 };
                return Ok(HilbertFunction { values, tail });
            }
            if cap > 256 {
                return Err(Error::Mismatch("Hilbert function did not stabilize".into()));
            }
            cap *= 2;
        }
    }

    /// `dim m^t A / m^{t+1} A` for `t = 0, 1, ...` while nonzero.
    fn madic_dims(&self) -> Vec<usize> {
        let len = self.basis().len();
        let f = self.field();
        let identity: Vec<Vec<u32>> = (0..len)
            .map(|i| {
                let mut e = vec![0; len];
                e[i] = 1;
                e
            })
            .collect();
        let mut layer = identity;
        let mut dims = vec![len];
        loop {
            let mut next = Echelon::new(f, len);
            for v in 0..self.nvars() {
                for u in &layer {
                    let mut w = vec![0u32; len];
                    for (i, &c) in u.iter().enumerate().filter(|(_, &c)| c != 0) {
                        for &(k, d) in self.var_mult(v, i) {
                            w[k] = f.add(w[k], f.mul(c, d));
                        }
                    }
                    next.insert(w);
                }
            }
            dims.push(next.dim());
            if next.dim() == 0 {
                break;
            }
            layer = next.basis().cloned().collect();
        }
        dims.windows(2).map(|w| w[0] - w[1]).collect()
    }

    /// Multiplicity `e(A)`: the length for artinian algebras, the stable
    /// Hilbert function value in dimension one.
    pub fn multiplicity(&self) -> Result<usize> {
        match self.krull_dim() {
            0 => Ok(self.basis().len()),
            1 => {
                let hf = self.hilbert_function()?;
                Ok(*hf.values.last().unwrap())
            }
            d => Err(Error::UnsupportedDimension(d)),
        }
    }

    /// `μ(I) = dim_k I/mI`, computed in `k[x]/m^T` where `m^T ⊆ mI`.
    pub fn minimal_ideal_generators(&self) -> usize {
        if self.ideal().is_empty() {
            return 0;
        }
        let truncation = if self.is_artinian() {
            // m^N A = 0 gives m^N ⊆ I, hence m^{N+1} ⊆ mI
            self.madic_dims().len() as u32 + 1
        } else {
            self.ideal().iter().filter_map(|g| g.total_degree()).max().unwrap() + 1
        };
        let n = self.nvars();
        let order = self.ring().order();
        let monomials = standard_monomials(&[], n, order, truncation - 1);
        let index: HashMap<&Monomial, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let width = monomials.len();
        let field = self.field();
        let mut all = Echelon::new(field, width);
        let mut shifted = Echelon::new(field, width);
        for g in self.ideal() {
            for u in &monomials {
                let mut v = vec![0u32; width];
                let mut any = false;
                for (m, c) in g.terms() {
                    let prod = m.mul(u);
                    if let Some(&i) = index.get(&prod) {
                        v[i] = field.add(v[i], *c);
                        any = true;
                    }
                }
                if !any {
                    continue;
                }
                if !u.is_one() {
                    shifted.insert(v.clone());
                }
                all.insert(v);
            }
        }
        all.dim() - shifted.dim()
    }

    /// Complete intersection test: `μ(I) = n - dim A`.
    pub fn is_complete_intersection(&self) -> bool {
        self.minimal_ideal_generators() == self.nvars() - self.krull_dim()
    }

    /// Rank of multiplication by `x` from degree `t` to degree `t + 1`, for
    /// standard graded algebras.
    pub(crate) fn graded_mult_rank(&self, x: &crate::poly::Polynomial, t: u32) -> (usize, usize) {
        let leading = self.groebner().leading_monomials();
        let all = standard_monomials(&leading, self.nvars(), self.ring().order(), t + 1);
        let source: Vec<&Monomial> = all.iter().filter(|m| m.degree() == t).collect();
        let target: Vec<&Monomial> = all.iter().filter(|m| m.degree() == t + 1).collect();
        let tindex: HashMap<&Monomial, usize> =
            target.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut mat = Matrix::zeros(self.field(), target.len(), source.len());
        for (j, m) in source.iter().enumerate() {
            let prod = x.mul_term(m, 1);
            let nf = self.normal_form(&prod);
            for (mm, c) in nf.terms() {
                mat.set(tindex[mm], j, *c);
            }
        }
        (mat.rank(), source.len())
    }
}
