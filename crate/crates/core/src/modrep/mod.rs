//! Finitely generated modules over an artinian algebra, represented as
//! finite-dimensional vector spaces with one action matrix per variable.

mod construct;
mod ops;
pub mod random;

use std::sync::{Arc, OnceLock};

pub use construct::PresentationMatrix;

use crate::algebra::{Degree, QuotientAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix, PrimeField};

/// A module `M` over `A` given by `ℓ(M) × ℓ(M)` action matrices, one per
/// algebra variable; column `j` of `actions[v]` is `x_v · e_j`.
///
/// `degrees`, when present, assigns each basis vector a multidegree under
/// the algebra's torus grading so that every action is homogeneous.
#[derive(Clone, Debug)]
pub struct ModuleRep {
    algebra: Arc<QuotientAlgebra>,
    dim: usize,
    actions: Vec<Matrix>,
    degrees: Option<Vec<Degree>>,
    tag: Option<String>,
    monomial_actions: OnceLock<Vec<Matrix>>,
}

impl ModuleRep {
    /// Assembles a module from action matrices and checks the module axioms.
    pub fn new(
        algebra: Arc<QuotientAlgebra>,
        actions: Vec<Matrix>,
        degrees: Option<Vec<Degree>>,
    ) -> Result<Self> {
        let m = Self::from_parts(algebra, actions, degrees, None);
        m.verify()?;
        Ok(m)
    }

    pub(crate) fn from_parts(
        algebra: Arc<QuotientAlgebra>,
        actions: Vec<Matrix>,
        degrees: Option<Vec<Degree>>,
        tag: Option<String>,
    ) -> Self {
        let dim = actions.first().map_or_else(
            || degrees.as_ref().map_or(0, |d| d.len()),
            |m| m.rows(),
        );
        assert_eq!(actions.len(), algebra.nvars());
        ModuleRep {
            algebra,
            dim,
            actions,
            degrees,
            tag,
            monomial_actions: OnceLock::new(),
        }
    }

    pub fn zero(algebra: Arc<QuotientAlgebra>) -> Self {
        let f = algebra.field();
        let actions = (0..algebra.nvars()).map(|_| Matrix::zeros(f, 0, 0)).collect();
        let degrees = Some(Vec::new());
        let mut m = Self::from_parts(algebra, actions, degrees, Some("zero".into()));
        m.dim = 0;
        m
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = Some(tag.into());
        self
    }

    pub fn algebra(&self) -> &Arc<QuotientAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    /// `ℓ(M)`, the k-dimension.
    pub fn length(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.actions
    }

    pub fn action(&self, v: usize) -> &Matrix {
        &self.actions[v]
    }

    pub fn degrees(&self) -> Option<&[Degree]> {
        self.degrees.as_deref()
    }

    pub fn is_graded(&self) -> bool {
        self.degrees.is_some()
    }

    pub fn tag(&self) -> Option<&str> {
        self.tag.as_deref()
    }

    /// Drops the grading, for callers that want the single-block code path.
    pub fn ungraded(&self) -> ModuleRep {
        let mut m = self.clone();
        m.degrees = None;
        m
    }

    pub(crate) fn same_algebra(&self, other: &ModuleRep) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Matrices of multiplication by each basis monomial of the algebra.
    pub fn monomial_actions(&self) -> &[Matrix] {
        self.monomial_actions.get_or_init(|| {
            let alg = &self.algebra;
            let len = alg.basis().len();
            let mut out: Vec<Matrix> = Vec::with_capacity(len);
            for i in 0..len {
                let m = match alg.factorization(i) {
                    None => Matrix::identity(self.field(), self.dim),
                    Some((v, parent)) => self.actions[v].mul(&out[parent]),
                };
                out.push(m);
            }
            out
        })
    }

    /// Matrix of multiplication by an algebra element in dense coordinates.
    pub fn element_action(&self, element: &[u32]) -> Matrix {
        let mono = self.monomial_actions();
        let mut acc = Matrix::zeros(self.field(), self.dim, self.dim);
        for (i, &c) in element.iter().enumerate().filter(|(_, &c)| c != 0) {
            acc = acc.add(&mono[i].scale(c));
        }
        acc
    }

    /// Applies basis monomial `i` of the algebra to `v`.
    pub fn apply_monomial(&self, i: usize, v: &[u32]) -> Vec<u32> {
        self.monomial_actions()[i].mul_vec(v)
    }

    /// Checks that the actions commute and satisfy every ideal generator,
    /// and that the grading (if any) makes every action homogeneous.
    pub fn verify(&self) -> Result<()> {
        let n = self.actions.len();
        for m in &self.actions {
            if m.rows() != self.dim || m.cols() != self.dim {
                return Err(Error::Shape("action matrices must be square of equal size".into()));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&self.actions[i], &self.actions[j]);
                if a.mul(b) != b.mul(a) {
                    return Err(Error::Mismatch(format!("actions of variables {i} and {j} do not commute")));
                }
            }
        }
        for g in self.algebra.ideal() {
            let mut acc = Matrix::zeros(self.field(), self.dim, self.dim);
            for (mono, c) in g.terms() {
                let mut term = Matrix::identity(self.field(), self.dim).scale(*c);
                for (v, &e) in mono.exponents().iter().enumerate() {
                    for _ in 0..e {
                        term = self.actions[v].mul(&term);
                    }
                }
                acc = acc.add(&term);
            }
            if !acc.is_zero() {
                return Err(Error::Mismatch(format!(
                    "generator {} does not act as zero",
                    self.algebra.ring().format(g)
                )));
            }
        }
        if let Some(deg) = &self.degrees {
            if deg.len() != self.dim {
                return Err(Error::Shape("one degree per basis vector required".into()));
            }
            for (v, m) in self.actions.iter().enumerate() {
                let shift = self.algebra.var_degree(v);
                for r in 0..self.dim {
                    for c in 0..self.dim {
                        if m.get(r, c) != 0
                            && deg[r] != crate::algebra::add_degrees(&deg[c], shift)
                        {
                            return Err(Error::Mismatch("action is not homogeneous".into()));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `M / U` for an A-stable subspace `U` spanned by `generators`.
    pub(crate) fn quotient(&self, generators: &[Vec<u32>]) -> ModuleRep {
        let f = self.field();
        let mut span = Echelon::new(f, self.dim);
        for g in generators {
            span.insert(g.clone());
        }
        let rows: Vec<Vec<u32>> = span.basis().cloned().collect();
        let pivots: Vec<usize> = span.pivots().collect();
        // fully reduce so each row vanishes at the other pivots
        let reduced = full_reduce(f, rows, &pivots);
        let keep: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let reduce = |w: &mut Vec<u32>| {
            for (row, &p) in reduced.iter().zip(&pivots) {
                let a = w[p];
                if a != 0 {
                    crate::linalg::axpy(f, w, row, f.neg(a));
                }
            }
        };
        let q = keep.len();
        let actions = self
            .actions
            .iter()
            .map(|x| {
                let mut m = Matrix::zeros(f, q, q);
                for (j, &c) in keep.iter().enumerate() {
                    let mut w = x.column(c);
                    reduce(&mut w);
                    for (i, &r) in keep.iter().enumerate() {
                        m.set(i, j, w[r]);
                    }
                }
                m
            })
            .collect();
        let degrees = self
            .degrees
            .as_ref()
            .map(|d| keep.iter().map(|&c| d[c].clone()).collect());
        let mut out = ModuleRep::from_parts(self.algebra.clone(), actions, degrees, None);
        out.dim = q;
        out
    }

    /// Conjugates every action by an invertible matrix `p` (new basis vectors
    /// are the columns of `p`). The grading is dropped.
    pub fn change_basis(&self, p: &Matrix) -> Result<ModuleRep> {
        let f = self.field();
        let n = self.dim;
        let inv_cols: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                p.solve(&e).ok_or_else(|| Error::Shape("basis change is singular".into()))
            })
            .collect::<Result<_>>()?;
        let inv = Matrix::from_columns(f, n, &inv_cols);
        let actions = self.actions.iter().map(|x| inv.mul(&x.mul(p))).collect();
        let mut out = ModuleRep::from_parts(self.algebra.clone(), actions, None, self.tag.clone());
        out.dim = n;
        Ok(out)
    }
}

pub(crate) fn full_reduce(f: PrimeField, mut rows: Vec<Vec<u32>>, pivots: &[usize]) -> Vec<Vec<u32>> {
    for i in (0..rows.len()).rev() {
        let p = pivots[i];
        let (head, tail) = rows.split_at_mut(i);
        let pivot_row = &tail[0];
        for r in head.iter_mut() {
            let a = r[p];
            if a != 0 {
                crate::linalg::axpy(f, r, pivot_row, f.neg(a));
            }
        }
    }
    rows
}
