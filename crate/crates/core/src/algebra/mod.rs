//! Quotient algebras `A = k[x_1..x_n]/I` with their standard-monomial basis,
//! multiplication tables and numerical invariants.

mod grading;
mod invariants;
mod regular;

use std::collections::HashMap;

pub use grading::{add_degrees, sub_degrees, Degree, Grading};
pub use invariants::HilbertFunction;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};
use crate::poly::{
    buchberger, monomial_ideal_dimension, standard_monomials, GroebnerBasis, Monomial,
    MonomialOrder, PolyRing, Polynomial, DEFAULT_DEGREE_GUARD,
};

/// Sparse coordinate vector: `(basis index, coefficient)` pairs.
pub type SparseVec = Vec<(usize, u32)>;

/// `k[x_1..x_n]/I` with `I ⊆ m^2`.
///
/// When the Krull dimension is 0 the basis is the full (finite) set of
/// standard monomials and every multiplication table is populated. For
/// positive dimension the basis is truncated at the regularity degree bound
/// and only normal forms are available.
#[derive(Debug)]
pub struct QuotientAlgebra {
    ring: PolyRing,
    ideal: Vec<Polynomial>,
    groebner: GroebnerBasis,
    krull_dim: usize,
    grading: Grading,
    standard_graded: bool,
    degree_bound: u32,
    basis: Vec<Monomial>,
    basis_index: HashMap<Monomial, usize>,
    basis_degrees: Vec<Degree>,
    var_degrees: Vec<Degree>,
    factorization: Vec<Option<(usize, usize)>>,
    var_mult: Vec<Vec<SparseVec>>,
    mono_mult: Vec<Vec<SparseVec>>,
    embedding_dim: usize,
}

impl QuotientAlgebra {
    /// Parses the generators and builds the algebra under grevlex.
    pub fn build(p: u32, vars: &[&str], ideal: &[&str]) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let ring = PolyRing::new(
            field,
            vars.iter().map(|s| s.to_string()).collect(),
            MonomialOrder::Grevlex,
        )?;
        let gens = ideal.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::from_polynomials(ring, gens, DEFAULT_DEGREE_GUARD)
    }

    pub fn from_polynomials(ring: PolyRing, gens: Vec<Polynomial>, guard: u32) -> Result<Self> {
        let n = ring.nvars();
        let ideal: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &ideal {
            if g.min_degree().unwrap() < 2 {
                return Err(Error::NotInMSquared(ring.format(g)));
            }
        }
        let groebner = if ideal.is_empty() {
            GroebnerBasis::empty(ring.order(), n)
        } else {
            buchberger(&ideal, guard)?
        };
        let leading = groebner.leading_monomials();
        let krull_dim = monomial_ideal_dimension(&leading, n);
        let grading = Grading::from_generators(&ideal, n);
        let standard_graded = ideal.iter().all(|g| g.is_homogeneous());
        if krull_dim > 0 && !standard_graded {
            return Err(Error::NotStandardGraded);
        }
        let max_gen_degree = ideal.iter().filter_map(|g| g.total_degree()).max().unwrap_or(1);
        let degree_bound = 2 * max_gen_degree + 4;
        let cap = if krull_dim == 0 { guard.max(64) * 4 } else { degree_bound };
        let basis = standard_monomials(&leading, n, ring.order(), cap);
        let basis_index: HashMap<Monomial, usize> =
            basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let basis_degrees = basis.iter().map(|m| grading.degree(m)).collect();
        let var_degrees = (0..n).map(|v| grading.degree(&Monomial::var(n, v))).collect();
        let factorization = basis
            .iter()
            .map(|m| {
                let v = m.exponents().iter().position(|&e| e > 0)?;
                let parent = Monomial::var(n, v).quotient_of(m);
                Some((v, basis_index[&parent]))
            })
            .collect();
        let embedding_dim = basis.iter().filter(|m| m.degree() == 1).count();

        let mut alg = QuotientAlgebra {
            ring,
            ideal,
            groebner,
            krull_dim,
            grading,
            standard_graded,
            degree_bound,
            basis,
            basis_index,
            basis_degrees,
            var_degrees,
            factorization,
            var_mult: Vec::new(),
            mono_mult: Vec::new(),
            embedding_dim,
        };
        if krull_dim == 0 {
            alg.populate_tables();
            alg.check_local()?;
        }
        Ok(alg)
    }

    fn populate_tables(&mut self) {
        let n = self.nvars();
        let mut var_mult = Vec::with_capacity(n);
        for v in 0..n {
            let xv = Monomial::var(n, v);
            let col: Vec<SparseVec> = self
                .basis
                .iter()
                .map(|m| {
                    let p = Polynomial::monomial(self.field(), self.ring.order(), m.mul(&xv), 1);
                    self.sparse_coords(&self.groebner.normal_form(&p))
                })
                .collect();
            var_mult.push(col);
        }
        self.var_mult = var_mult;
        let len = self.basis.len();
        let mut mono_mult: Vec<Vec<SparseVec>> = Vec::with_capacity(len);
        for i in 0..len {
            let row = match self.factorization[i] {
                None => (0..len).map(|j| vec![(j, 1)]).collect(),
                Some((v, parent)) => (0..len)
                    .map(|j| self.apply_var_sparse(v, &mono_mult[parent][j]))
                    .collect(),
            };
            mono_mult.push(row);
        }
        self.mono_mult = mono_mult;
    }

    fn check_local(&self) -> Result<()> {
        let len = self.basis.len();
        for v in 0..self.nvars() {
            let x = self.mult_matrix(v);
            let mut power = Matrix::identity(self.field(), len);
            for _ in 0..len {
                power = power.mul(&x);
            }
            if !power.is_zero() {
                return Err(Error::NotLocal(self.ring.var_names()[v].clone()));
            }
        }
        Ok(())
    }

    fn apply_var_sparse(&self, v: usize, x: &SparseVec) -> SparseVec {
        let f = self.field();
        let mut acc = vec![0u32; self.basis.len()];
        for &(k, c) in x {
            for &(t, d) in &self.var_mult[v][k] {
                acc[t] = f.add(acc[t], f.mul(c, d));
            }
        }
        to_sparse(&acc)
    }

    fn sparse_coords(&self, nf: &Polynomial) -> SparseVec {
        let mut out: SparseVec = nf
            .terms()
            .iter()
            .map(|(m, c)| (self.basis_index[m], *c))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn field(&self) -> PrimeField {
        self.ring.field()
    }

    pub fn characteristic(&self) -> u32 {
        self.field().modulus()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn var_names(&self) -> &[String] {
        self.ring.var_names()
    }

    pub fn ideal(&self) -> &[Polynomial] {
        &self.ideal
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.groebner
    }

    pub fn krull_dim(&self) -> usize {
        self.krull_dim
    }

    pub fn is_artinian(&self) -> bool {
        self.krull_dim == 0
    }

    pub fn is_standard_graded(&self) -> bool {
        self.standard_graded
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    /// Degree bound `D` used for regularity checks: twice the largest
    /// generator degree plus four.
    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    /// Standard monomials; the full basis when artinian, the part of degree
    /// at most [`Self::degree_bound`] otherwise.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn basis_degree(&self, i: usize) -> &Degree {
        &self.basis_degrees[i]
    }

    pub fn var_degree(&self, v: usize) -> &Degree {
        &self.var_degrees[v]
    }

    pub fn basis_index(&self, m: &Monomial) -> Option<usize> {
        self.basis_index.get(m).copied()
    }

    /// `basis[i] = x_v * basis[parent]`, or `None` for the monomial 1.
    pub fn factorization(&self, i: usize) -> Option<(usize, usize)> {
        self.factorization[i]
    }

    /// `ℓ(A)`; `None` unless artinian.
    pub fn length(&self) -> Option<usize> {
        self.is_artinian().then_some(self.basis.len())
    }

    pub(crate) fn require_artinian(&self) -> Result<usize> {
        self.length().ok_or(Error::NotArtinian)
    }

    pub fn embedding_dim(&self) -> usize {
        self.embedding_dim
    }

    /// Expansion of `x_v * basis[i]` in the basis.
    pub fn var_mult(&self, v: usize, i: usize) -> &SparseVec {
        &self.var_mult[v][i]
    }

    /// Expansion of `basis[i] * basis[j]` in the basis.
    pub fn mono_mult(&self, i: usize, j: usize) -> &SparseVec {
        &self.mono_mult[i][j]
    }

    /// Matrix of multiplication by `x_v` (artinian only).
    pub fn mult_matrix(&self, v: usize) -> Matrix {
        let len = self.basis.len();
        let mut m = Matrix::zeros(self.field(), len, len);
        for (j, col) in self.var_mult[v].iter().enumerate() {
            for &(i, c) in col {
                m.set(i, j, c);
            }
        }
        m
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.groebner.normal_form(f)
    }

    /// Dense coordinates of `f` in the basis (artinian only).
    pub fn element(&self, f: &Polynomial) -> Result<Vec<u32>> {
        let len = self.require_artinian()?;
        let mut out = vec![0; len];
        for (i, c) in self.sparse_coords(&self.normal_form(f)) {
            out[i] = c;
        }
        Ok(out)
    }

    pub fn parse_element(&self, text: &str) -> Result<Vec<u32>> {
        self.element(&self.ring.parse(text)?)
    }

    pub fn element_to_polynomial(&self, coords: &[u32]) -> Polynomial {
        let terms = coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.basis[i].clone(), c))
            .collect();
        Polynomial::from_terms(self.field(), self.ring.order(), self.nvars(), terms)
    }

    /// Product of two elements given in dense coordinates.
    pub fn multiply(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = self.field();
        let mut out = vec![0; self.basis.len()];
        for (i, &ca) in a.iter().enumerate().filter(|(_, &c)| c != 0) {
            for (j, &cb) in b.iter().enumerate().filter(|(_, &c)| c != 0) {
                let s = f.mul(ca, cb);
                for &(k, c) in &self.mono_mult[i][j] {
                    out[k] = f.add(out[k], f.mul(s, c));
                }
            }
        }
        out
    }

    /// Membership in the maximal ideal: the coefficient of `1` vanishes.
    pub fn in_maximal_ideal(&self, element: &[u32]) -> bool {
        element.first().is_none_or(|&c| c == 0)
    }

    /// Degree of a homogeneous element under the torus grading.
    pub fn element_degree(&self, element: &[u32]) -> Option<Degree> {
        let mut it = element
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| &self.basis_degrees[i]);
        let first = it.next()?;
        it.all(|d| d == first).then(|| first.clone())
    }

    pub fn summary(&self) -> String {
        let gens: Vec<String> = self.ideal.iter().map(|g| self.ring.format(g)).collect();
        format!(
            "F_{}[{}]/({})",
            self.characteristic(),
            self.var_names().join(","),
            gens.join(", ")
        )
    }
}

fn to_sparse(dense: &[u32]) -> SparseVec {
    dense
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| (i, c))
        .collect()
}
