//! Polynomials over `F_p`, monomial orders, Buchberger's algorithm and
//! monomial-ideal combinatorics.

mod groebner;
mod monomial;
mod parse;
mod polynomial;

use std::collections::HashSet;

pub use groebner::{buchberger, normal_form, GroebnerBasis, DEFAULT_DEGREE_GUARD};
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::Polynomial;

use crate::error::{Error, Result};
use crate::linalg::PrimeField;

/// Coefficient field, variable names and active order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: PrimeField,
    vars: Vec<String>,
    order: MonomialOrder,
}

impl PolyRing {
    pub fn new(field: PrimeField, vars: Vec<String>, order: MonomialOrder) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vars {
            let valid = v
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::Config(format!("invalid variable name `{v}`")));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::Config(format!("duplicate variable `{v}`")));
            }
        }
        Ok(PolyRing { field, vars, order })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse::parse_polynomial(self, text)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.field, self.order, self.nvars())
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self.field, self.order, self.nvars(), 1)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(self.field, self.order, Monomial::var(self.nvars(), i), 1)
    }

    pub fn format(&self, p: &Polynomial) -> String {
        p.format(&self.vars)
    }
}

/// Sort key for bases: total degree ascending, then the active order
/// descending inside each degree.
pub fn basis_order(order: MonomialOrder, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    a.degree().cmp(&b.degree()).then_with(|| order.cmp(b, a))
}

/// Monomials of degree at most `degree_cap` divisible by no leading monomial.
pub fn standard_monomials(
    leading: &[Monomial],
    nvars: usize,
    order: MonomialOrder,
    degree_cap: u32,
) -> Vec<Monomial> {
    let divisible = |m: &Monomial| leading.iter().any(|l| l.divides(m));
    let one = Monomial::one(nvars);
    if divisible(&one) {
        return Vec::new();
    }
    let mut all = vec![one.clone()];
    let mut layer = vec![one];
    for _ in 0..degree_cap {
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for m in &layer {
            for i in 0..nvars {
                let cand = m.mul(&Monomial::var(nvars, i));
                if !divisible(&cand) && seen.insert(cand.clone()) {
                    next.push(cand);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(|a, b| basis_order(order, a, b));
    all
}

/// Krull dimension of `k[x]/(leading)`: `n` minus the least number of
/// variables meeting the support of every generator.
pub fn monomial_ideal_dimension(leading: &[Monomial], nvars: usize) -> usize {
    if leading.iter().any(|m| m.is_one()) {
        // unit ideal: the empty ring, conventionally dimension 0 here
        return 0;
    }
    let supports: Vec<u64> = leading
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    assert!(nvars < 64, "too many variables for cover search");
    let mut best = nvars;
    for subset in 0u64..(1u64 << nvars) {
        let size = subset.count_ones() as usize;
        if size >= best {
            continue;
        }
        if supports.iter().all(|s| s & subset != 0) {
            best = size;
        }
    }
    nvars - best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn standard_monomials_examples() {
        let o = MonomialOrder::Grevlex;
        let sm = standard_monomials(&[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])], 2, o, 32);
        assert_eq!(sm, vec![m(&[0, 0]), m(&[1, 0]), m(&[0, 1])]);
        assert_eq!(standard_monomials(&[m(&[1])], 1, o, 32), vec![m(&[0])]);
        let r3 = [m(&[2, 0, 0]), m(&[0, 2, 0]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        let sm = standard_monomials(&r3, 3, o, 32);
        let expect = [
            [0, 0, 0],
            [1, 0, 0],
            [0, 1, 0],
            [0, 0, 1],
            [1, 1, 0],
            [1, 0, 1],
        ];
        assert_eq!(sm, expect.iter().map(|e| m(e)).collect::<Vec<_>>());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(monomial_ideal_dimension(&[m(&[2, 0]), m(&[1, 1]), m(&[0, 2])], 2), 0);
        assert_eq!(monomial_ideal_dimension(&[m(&[0, 2])], 2), 1);
        assert_eq!(monomial_ideal_dimension(&[], 4), 4);
        assert_eq!(monomial_ideal_dimension(&[m(&[1, 1])], 2), 1);
    }
}
