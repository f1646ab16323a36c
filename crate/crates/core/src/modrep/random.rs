//! Seeded random modules for invariant testing.

use std::sync::Arc;

use rand::Rng;

use super::{ModuleRep, PresentationMatrix};
use crate::algebra::QuotientAlgebra;
use crate::error::Result;

/// A random element of the maximal ideal with roughly `density` of its
/// non-constant coordinates nonzero.
pub fn random_element_in_m<R: Rng>(algebra: &QuotientAlgebra, rng: &mut R, density: f64) -> Vec<u32> {
    let len = algebra.basis().len();
    let p = algebra.characteristic();
    let mut out = vec![0u32; len];
    loop {
        for c in out.iter_mut().skip(1) {
            *c = if rng.gen_bool(density) { rng.gen_range(1..p) } else { 0 };
        }
        if len <= 1 || out.iter().any(|&c| c != 0) {
            return out;
        }
    }
}

/// A random homogeneous element of the maximal ideal of a given basis
/// monomial's degree, or a plain random element when the grading is trivial.
fn random_homogeneous<R: Rng>(algebra: &QuotientAlgebra, rng: &mut R) -> Vec<u32> {
    let len = algebra.basis().len();
    let p = algebra.characteristic();
    let pick = rng.gen_range(1..len);
    let deg = algebra.basis_degree(pick).clone();
    let mut out = vec![0u32; len];
    for (i, c) in out.iter_mut().enumerate().skip(1) {
        if *algebra.basis_degree(i) == deg && (i == pick || rng.gen_bool(0.5)) {
            *c = rng.gen_range(1..p);
        }
    }
    out
}

/// `A/(g_1, ..., g_s)` with one or two random generators in `m`.
pub fn random_cyclic<R: Rng>(algebra: &Arc<QuotientAlgebra>, rng: &mut R) -> Result<ModuleRep> {
    let s = rng.gen_range(1..=2);
    let gens: Vec<Vec<u32>> = (0..s).map(|_| pick_entry(algebra, rng)).collect();
    Ok(ModuleRep::cyclic_module(algebra.clone(), &gens)?.with_tag("random cyclic"))
}

/// The cokernel of a random `b0 × b1` matrix with entries in `m`.
pub fn random_cokernel<R: Rng>(algebra: &Arc<QuotientAlgebra>, rng: &mut R) -> Result<ModuleRep> {
    let b0 = rng.gen_range(1..=2);
    let b1 = rng.gen_range(1..=2);
    let entries = (0..b0)
        .map(|_| (0..b1).map(|_| pick_entry(algebra, rng)).collect())
        .collect();
    let pres = PresentationMatrix::new(algebra, entries)?;
    Ok(ModuleRep::cokernel_module(algebra.clone(), &pres)?.with_tag("random cokernel"))
}

/// Either kind of random module, with equal probability.
pub fn random_module<R: Rng>(algebra: &Arc<QuotientAlgebra>, rng: &mut R) -> Result<ModuleRep> {
    if rng.gen_bool(0.5) {
        random_cyclic(algebra, rng)
    } else {
        random_cokernel(algebra, rng)
    }
}

/// A random graded module: a cyclic quotient by homogeneous elements, or the
/// cokernel of a matrix whose columns are homogeneous of one degree each.
pub fn random_graded_module<R: Rng>(algebra: &Arc<QuotientAlgebra>, rng: &mut R) -> Result<ModuleRep> {
    if algebra.basis().len() <= 1 {
        return ModuleRep::free(algebra.clone(), 1);
    }
    if rng.gen_bool(0.5) {
        let s = rng.gen_range(1..=2);
        let gens: Vec<Vec<u32>> = (0..s).map(|_| random_homogeneous(algebra, rng)).collect();
        return Ok(ModuleRep::cyclic_module(algebra.clone(), &gens)?.with_tag("random graded cyclic"));
    }
    let b0 = rng.gen_range(1..=2);
    let b1 = rng.gen_range(1..=2);
    let len = algebra.basis().len();
    let p = algebra.characteristic();
    let mut entries = vec![vec![Vec::new(); b1]; b0];
    for c in 0..b1 {
        let deg = algebra.basis_degree(rng.gen_range(1..len)).clone();
        for row in entries.iter_mut() {
            let mut v = vec![0u32; len];
            for (i, x) in v.iter_mut().enumerate().skip(1) {
                if *algebra.basis_degree(i) == deg && rng.gen_bool(0.6) {
                    *x = rng.gen_range(1..p);
                }
            }
            row[c] = v;
        }
    }
    let pres = PresentationMatrix::new(algebra, entries)?;
    Ok(ModuleRep::cokernel_module(algebra.clone(), &pres)?.with_tag("random graded cokernel"))
}

fn pick_entry<R: Rng>(algebra: &QuotientAlgebra, rng: &mut R) -> Vec<u32> {
    if algebra.basis().len() <= 1 {
        return vec![0; algebra.basis().len()];
    }
    if rng.gen_bool(0.5) {
        random_homogeneous(algebra, rng)
    } else {
        random_element_in_m(algebra, rng, 0.4)
    }
}
