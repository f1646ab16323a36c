use std::collections::VecDeque;
use std::sync::Arc;

use super::ModuleRep;
use crate::algebra::{add_degrees, sub_degrees, Degree, QuotientAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A `b0 × b1` matrix over `A` whose columns generate a submodule of `A^b0`.
#[derive(Clone, Debug)]
pub struct PresentationMatrix {
    rows: usize,
    cols: usize,
    /// `entries[r][c]` in dense algebra coordinates.
    entries: Vec<Vec<Vec<u32>>>,
}

impl PresentationMatrix {
    pub fn new(algebra: &QuotientAlgebra, entries: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let len = algebra.require_artinian()?;
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        for r in &entries {
            if r.len() != cols || r.iter().any(|e| e.len() != len) {
                return Err(Error::Shape("ragged presentation matrix".into()));
            }
        }
        Ok(PresentationMatrix { rows, cols, entries })
    }

    /// Parses a matrix of polynomial strings, given row by row.
    pub fn parse(algebra: &QuotientAlgebra, rows: &[Vec<String>]) -> Result<Self> {
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|s| algebra.parse_element(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(algebra, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &[u32] {
        &self.entries[r][c]
    }

    /// Every entry lies in the maximal ideal.
    pub fn is_minimal(&self, algebra: &QuotientAlgebra) -> bool {
        self.entries.iter().flatten().all(|e| algebra.in_maximal_ideal(e))
    }

    /// Degrees making the matrix homogeneous as a map `⊕A(-s_c) → ⊕A(-d_r)`,
    /// found by propagating constraints through nonzero entries.
    fn degrees(&self, algebra: &QuotientAlgebra) -> Option<(Vec<Degree>, Vec<Degree>)> {
        let rank = algebra.grading().rank();
        let mut row_deg: Vec<Option<Degree>> = vec![None; self.rows];
        let mut col_deg: Vec<Option<Degree>> = vec![None; self.cols];
        let mut entry_deg = vec![vec![None; self.cols]; self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = &self.entries[r][c];
                if e.iter().any(|&x| x != 0) {
                    entry_deg[r][c] = Some(algebra.element_degree(e)?);
                }
            }
        }
        // node ids: rows are 0..rows, columns are rows..rows+cols
        for start in 0..self.rows + self.cols {
            let seeded = if start < self.rows {
                row_deg[start].is_some()
            } else {
                col_deg[start - self.rows].is_some()
            };
            if seeded {
                continue;
            }
            if start < self.rows {
                row_deg[start] = Some(vec![0; rank]);
            } else {
                col_deg[start - self.rows] = Some(vec![0; rank]);
            }
            let mut queue = VecDeque::from([start]);
            while let Some(node) = queue.pop_front() {
                if node < self.rows {
                    let r = node;
                    let d = row_deg[r].clone().unwrap();
                    for c in 0..self.cols {
                        if let Some(delta) = &entry_deg[r][c] {
                            let want = add_degrees(&d, delta);
                            match &col_deg[c] {
                                None => {
                                    col_deg[c] = Some(want);
                                    queue.push_back(self.rows + c);
                                }
                                Some(have) if *have != want => return None,
                                _ => {}
                            }
                        }
                    }
                } else {
                    let c = node - self.rows;
                    let s = col_deg[c].clone().unwrap();
                    for r in 0..self.rows {
                        if let Some(delta) = &entry_deg[r][c] {
                            let want = sub_degrees(&s, delta);
                            match &row_deg[r] {
                                None => {
                                    row_deg[r] = Some(want);
                                    queue.push_back(r);
                                }
                                Some(have) if *have != want => return None,
                                _ => {}
                            }
                        }
                    }
                }
            }
        }
        Some((
            row_deg.into_iter().map(Option::unwrap).collect(),
            col_deg.into_iter().map(Option::unwrap).collect(),
        ))
    }
}

impl ModuleRep {
    /// The free module `A^rank`; basis vector `(r, i)` sits at index `r·ℓ(A) + i`.
    pub fn free(algebra: Arc<QuotientAlgebra>, rank: usize) -> Result<Self> {
        let row_degrees = vec![vec![0; algebra.grading().rank()]; rank];
        Self::free_with_degrees(algebra, &row_degrees)
    }

    pub(crate) fn free_with_degrees(
        algebra: Arc<QuotientAlgebra>,
        row_degrees: &[Degree],
    ) -> Result<Self> {
        let len = algebra.require_artinian()?;
        let rank = row_degrees.len();
        let f = algebra.field();
        let dim = rank * len;
        let actions = (0..algebra.nvars())
            .map(|v| {
                let mut m = Matrix::zeros(f, dim, dim);
                for r in 0..rank {
                    for j in 0..len {
                        for &(i, c) in algebra.var_mult(v, j) {
                            m.set(r * len + i, r * len + j, c);
                        }
                    }
                }
                m
            })
            .collect();
        let degrees = row_degrees
            .iter()
            .flat_map(|d| (0..len).map(|i| add_degrees(d, algebra.basis_degree(i))))
            .collect();
        let mut m = Self::from_parts(algebra, actions, Some(degrees), Some(format!("A^{rank}")));
        m.dim = dim;
        Ok(m)
    }

    /// The residue field `k = A/m`.
    pub fn residue_field(algebra: Arc<QuotientAlgebra>) -> Result<Self> {
        algebra.require_artinian()?;
        let f = algebra.field();
        let actions = (0..algebra.nvars()).map(|_| Matrix::zeros(f, 1, 1)).collect();
        let degrees = Some(vec![vec![0; algebra.grading().rank()]]);
        Ok(Self::from_parts(algebra, actions, degrees, Some("k".into())))
    }

    /// `A / (g_1, ..., g_s)` for elements given in dense coordinates.
    pub fn cyclic_module(algebra: Arc<QuotientAlgebra>, generators: &[Vec<u32>]) -> Result<Self> {
        let len = algebra.require_artinian()?;
        if generators.iter().any(|g| g.len() != len) {
            return Err(Error::Shape("generator has wrong length".into()));
        }
        if generators.iter().any(|g| !algebra.in_maximal_ideal(g)) {
            return Err(Error::UnitIdeal);
        }
        let entries = vec![generators.to_vec()];
        let pres = if generators.is_empty() {
            PresentationMatrix { rows: 1, cols: 0, entries: vec![Vec::new()] }
        } else {
            PresentationMatrix::new(&algebra, entries)?
        };
        Ok(Self::cokernel_module(algebra, &pres)?.with_tag("cyclic"))
    }

    /// Parses generators such as `["a", "b^2 - c"]` and builds `A/(gens)`.
    pub fn cyclic_from_strs(algebra: Arc<QuotientAlgebra>, generators: &[&str]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|s| algebra.parse_element(s))
            .collect::<Result<Vec<_>>>()?;
        Self::cyclic_module(algebra, &gens)
    }

    /// `coker(A^b1 → A^b0)` for the given presentation matrix.
    pub fn cokernel_module(algebra: Arc<QuotientAlgebra>, pres: &PresentationMatrix) -> Result<Self> {
        let len = algebra.require_artinian()?;
        let (row_degrees, graded) = match pres.degrees(&algebra) {
            Some((rows, _)) => (rows, true),
            None => (vec![vec![0; algebra.grading().rank()]; pres.rows], false),
        };
        let free = Self::free_with_degrees(algebra.clone(), &row_degrees)?;
        let mut relations = Vec::with_capacity(pres.cols * len);
        for c in 0..pres.cols {
            let mut column = vec![0u32; pres.rows * len];
            for r in 0..pres.rows {
                column[r * len..(r + 1) * len].copy_from_slice(&pres.entries[r][c]);
            }
            for i in 0..len {
                relations.push(free.apply_monomial(i, &column));
            }
        }
        let mut out = free.quotient(&relations);
        if !graded {
            out.degrees = None;
        }
        out.tag = Some("cokernel".into());
        Ok(out)
    }
}
