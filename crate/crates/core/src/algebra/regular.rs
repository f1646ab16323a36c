use rand::Rng;

use super::QuotientAlgebra;
use crate::error::{Error, Result};
use crate::poly::{Monomial, PolyRing, Polynomial};

impl QuotientAlgebra {
    /// Checks that multiplication by the linear form `x` is injective on
    /// `A_t` for every `t <= bound`. Standard graded algebras only.
    pub fn is_regular_up_to(&self, x: &Polynomial, bound: u32) -> Result<bool> {
        self.check_linear(x)?;
        if !self.is_standard_graded() {
            return Err(Error::NotStandardGraded);
        }
        for t in 0..=bound {
            let (rank, dim) = self.graded_mult_rank(x, t);
            if rank < dim {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Draws up to `attempts` random linear forms (coefficients uniform in
    /// `[0, p)`) and returns the first one that is regular up to `bound`.
    pub fn find_linear_regular_element<R: Rng>(
        &self,
        bound: u32,
        attempts: usize,
        rng: &mut R,
    ) -> Result<Option<Polynomial>> {
        if self.is_artinian() {
            return Err(Error::ZeroDimensional);
        }
        let n = self.nvars();
        let p = self.characteristic();
        for _ in 0..attempts {
            let terms: Vec<(Monomial, u32)> =
                (0..n).map(|v| (Monomial::var(n, v), rng.gen_range(0..p))).collect();
            let x = Polynomial::from_terms(self.field(), self.ring().order(), n, terms);
            if x.is_zero() {
                continue;
            }
            if self.is_regular_up_to(&x, bound)? {
                return Ok(Some(x));
            }
        }
        Ok(None)
    }

    fn check_linear(&self, x: &Polynomial) -> Result<()> {
        if x.is_zero() || x.terms().iter().any(|(m, _)| m.degree() != 1) {
            return Err(Error::NotLinearForm(self.ring().format(x)));
        }
        Ok(())
    }

    /// `A/(x)` for a nonzero linear form `x`, rebuilt from scratch by
    /// eliminating the first variable that occurs in `x`.
    pub fn quotient_by_linear_form(&self, x: &Polynomial) -> Result<QuotientAlgebra> {
        self.check_linear(x)?;
        let f = self.field();
        let n = self.nvars();
        let pivot = (0..n)
            .find(|&v| x.coefficient(&Monomial::var(n, v)) != 0)
            .expect("nonzero linear form");
        let names: Vec<String> = self
            .var_names()
            .iter()
            .enumerate()
            .filter(|&(v, _)| v != pivot)
            .map(|(_, s)| s.clone())
            .collect();
        let target = PolyRing::new(f, names, self.ring().order())?;
        let scale = f.neg(f.inv(x.coefficient(&Monomial::var(n, pivot))));
        let mut images = Vec::with_capacity(n);
        let mut next = 0;
        for v in 0..n {
            if v == pivot {
                let mut img = target.zero();
                for (w, _) in (0..n).enumerate().filter(|&(w, _)| w != pivot) {
                    let c = x.coefficient(&Monomial::var(n, w));
                    let idx = if w < pivot { w } else { w - 1 };
                    img = img.add(&target.var(idx).scale(f.mul(c, scale)));
                }
                images.push(img);
            } else {
                images.push(target.var(next));
                next += 1;
            }
        }
        let gens = self
            .ideal()
            .iter()
            .map(|g| g.substitute(&images, target.nvars()))
            .collect();
        QuotientAlgebra::from_polynomials(target, gens, crate::poly::DEFAULT_DEGREE_GUARD)
    }
}
