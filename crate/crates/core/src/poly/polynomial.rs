use std::cmp::Ordering;

use super::monomial::{Monomial, MonomialOrder};
use crate::linalg::PrimeField;

/// Multivariate polynomial over `F_p`. Terms are kept sorted in strictly
/// decreasing order under `order`, with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: PrimeField,
    order: MonomialOrder,
    nvars: usize,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero(field: PrimeField, order: MonomialOrder, nvars: usize) -> Self {
        Polynomial {
            field,
            order,
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: PrimeField, order: MonomialOrder, nvars: usize, c: u32) -> Self {
        Self::from_terms(field, order, nvars, vec![(Monomial::one(nvars), c)])
    }

    pub fn monomial(field: PrimeField, order: MonomialOrder, m: Monomial, c: u32) -> Self {
        let nvars = m.nvars();
        Self::from_terms(field, order, nvars, vec![(m, c)])
    }

    /// Collects like terms, drops zeros and sorts.
    pub fn from_terms(
        field: PrimeField,
        order: MonomialOrder,
        nvars: usize,
        mut terms: Vec<(Monomial, u32)>,
    ) -> Self {
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut merged: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(*lc, c),
                _ => merged.push((m, c % field.modulus())),
            }
        }
        merged.retain(|(_, c)| *c != 0);
        Polynomial {
            field,
            order,
            nvars,
            terms: merged,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Smallest total degree of a term (the order of vanishing at 0).
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms.iter().find(|(t, _)| t == m).map_or(0, |(_, c)| *c)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        Self::from_terms(self.field, order, self.nvars, self.terms.clone())
    }

    fn merge(&self, other: &Polynomial, factor: u32) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        let f = self.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = match (self.terms.get(i), other.terms.get(j)) {
                (Some(a), Some(b)) => self.order.cmp(&a.0, &b.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), f.mul(*c, factor)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(self.terms[i].1, f.mul(other.terms[j].1, factor));
                    if c != 0 {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.retain(|(_, c)| *c != 0);
        Polynomial {
            terms: out,
            ..self.clone_shell()
        }
    }

    fn clone_shell(&self) -> Polynomial {
        Polynomial {
            field: self.field,
            order: self.order,
            nvars: self.nvars,
            terms: Vec::new(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, 1 % self.field.modulus())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.merge(other, self.field.neg(1 % self.field.modulus()))
    }

    /// `self + c * m * other`.
    pub fn add_scaled_shifted(&self, other: &Polynomial, c: u32, m: &Monomial) -> Polynomial {
        self.merge(&other.mul_term(m, 1), c)
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let f = self.field;
        let c = c % f.modulus();
        if c == 0 {
            return self.clone_shell();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), f.mul(*a, c))).collect(),
            ..self.clone_shell()
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: u32) -> Polynomial {
        let f = self.field;
        let c = c % f.modulus();
        if c == 0 {
            return self.clone_shell();
        }
        // multiplication by a monomial preserves the term order
        Polynomial {
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), f.mul(*a, c))).collect(),
            ..self.clone_shell()
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                acc.push((m1.mul(m2), self.field.mul(*c1, *c2)));
            }
        }
        Self::from_terms(self.field, self.order, self.nvars, acc)
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field.inv(*c)),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.iter().map(|(m, _)| m.degree());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// Substitutes polynomials for every variable (the images must share a
    /// ring, which becomes the ring of the result).
    pub fn substitute(&self, images: &[Polynomial], target_nvars: usize) -> Polynomial {
        assert_eq!(images.len(), self.nvars);
        let (field, order) = (self.field, self.order);
        let one = Polynomial::constant(field, order, target_nvars, 1);
        let mut acc = Polynomial::zero(field, order, target_nvars);
        for (m, c) in &self.terms {
            let mut term = one.scale(*c);
            for (i, &e) in m.exponents().iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&images[i]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    pub fn format(&self, vars: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let p = self.field.modulus();
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if *c > p / 2 { (true, p - c) } else { (false, *c) };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag.to_string());
            } else if mag == 1 {
                out.push_str(&m.format(vars));
            } else {
                out.push_str(&format!("{}*{}", mag, m.format(vars)));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn p(terms: &[(&[u32], u32)]) -> Polynomial {
        Polynomial::from_terms(
            f(),
            MonomialOrder::Grevlex,
            2,
            terms.iter().map(|(e, c)| (Monomial::from_exponents(e.to_vec()), *c)).collect(),
        )
    }

    #[test]
    fn arithmetic() {
        let a = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = p(&[(&[1, 0], 1), (&[0, 1], 100)]);
        let prod = a.mul(&b);
        assert_eq!(prod, p(&[(&[2, 0], 1), (&[0, 2], 100)]));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.add(&b), p(&[(&[1, 0], 2)]));
    }

    #[test]
    fn from_terms_collects() {
        let q = p(&[(&[1, 0], 50), (&[1, 0], 51), (&[0, 0], 3)]);
        assert_eq!(q.terms().len(), 1);
        assert_eq!(q.leading_monomial().unwrap().exponents(), &[0, 0]);
    }

    #[test]
    fn formatting() {
        let vars = vec!["x".to_string(), "y".to_string()];
        let q = p(&[(&[2, 0], 1), (&[1, 1], 100), (&[0, 0], 3)]);
        assert_eq!(q.format(&vars), "x^2 - x*y + 3");
    }
}
