use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

pub const DEFAULT_DEGREE_GUARD: u32 = 32;

/// A reduced Groebner basis: monic generators, no term of any generator
/// divisible by another generator's leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    nvars: usize,
    generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    /// The basis of the zero ideal.
    pub fn empty(order: MonomialOrder, nvars: usize) -> Self {
        GroebnerBasis {
            order,
            nvars,
            generators: Vec::new(),
        }
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.leading_monomial().unwrap().clone())
            .collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.generators)
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.leading_monomial().unwrap().is_one())
    }
}

/// Full reduction of `f` by `basis` (every term, not just the leading one).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let field = f.field();
    let mut rest = f.clone();
    let mut remainder = Vec::new();
    while let Some((m, c)) = rest.leading_term().cloned() {
        let divisor = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading_term().unwrap();
                let factor = field.neg(field.mul(c, field.inv(*lc)));
                rest = rest.add_scaled_shifted(g, factor, &lm.quotient_of(&m));
            }
            None => {
                remainder.push((m.clone(), c));
                rest = Polynomial::from_terms(
                    field,
                    f.order(),
                    f.nvars(),
                    rest.terms()[1..].to_vec(),
                );
            }
        }
    }
    Polynomial::from_terms(field, f.order(), f.nvars(), remainder)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.field();
    let (mf, cf) = f.leading_term().unwrap();
    let (mg, cg) = g.leading_term().unwrap();
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.quotient_of(&l), field.inv(*cf));
    let b = g.mul_term(&mg.quotient_of(&l), field.inv(*cg));
    a.sub(&b)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Buchberger's algorithm with the normal selection strategy and both of
/// Buchberger's criteria. Returns the reduced basis.
///
/// Fails with [`Error::GuardExceeded`] when an input generator or a pair's
/// lcm exceeds `degree_guard`.
pub fn buchberger(gens: &[Polynomial], degree_guard: u32) -> Result<GroebnerBasis> {
    let first = gens.first().expect("buchberger needs at least one generator");
    let (order, nvars) = (first.order(), first.nvars());
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        let d = g.total_degree().unwrap_or(0);
        if d > degree_guard {
            return Err(Error::GuardExceeded {
                guard: degree_guard,
                degree: d,
            });
        }
        if !g.is_zero() {
            basis.push(g.monic());
        }
    }

    let mut pairs: Vec<Pair> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push(make_pair(&basis, i, j));
        }
    }
    let mut done: std::collections::HashSet<(usize, usize)> = Default::default();

    while !pairs.is_empty() {
        // normal strategy: least lcm under the order, ties by index
        let pos = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                order
                    .cmp(&pa.lcm, &pb.lcm)
                    .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
            })
            .unwrap();
        let pair = pairs.swap_remove(pos);
        done.insert((pair.i, pair.j));

        let (lm_i, lm_j) = (
            basis[pair.i].leading_monomial().unwrap(),
            basis[pair.j].leading_monomial().unwrap(),
        );
        if lm_i.is_coprime(lm_j) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != pair.i
                && k != pair.j
                && basis[k].leading_monomial().unwrap().divides(&pair.lcm)
                && is_done(&done, pair.i, k)
                && is_done(&done, pair.j, k)
        });
        if chain {
            continue;
        }
        if pair.lcm.degree() > degree_guard {
            return Err(Error::GuardExceeded {
                guard: degree_guard,
                degree: pair.lcm.degree(),
            });
        }
        let s = s_polynomial(&basis[pair.i], &basis[pair.j]);
        let h = normal_form(&s, &basis);
        if h.is_zero() {
            continue;
        }
        if let Some(d) = h.total_degree() {
            if d > degree_guard {
                return Err(Error::GuardExceeded {
                    guard: degree_guard,
                    degree: d,
                });
            }
        }
        basis.push(h.monic());
        let new = basis.len() - 1;
        for i in 0..new {
            pairs.push(make_pair(&basis, i, new));
        }
    }

    Ok(GroebnerBasis {
        order,
        nvars,
        generators: reduce_basis(basis),
    })
}

fn is_done(done: &std::collections::HashSet<(usize, usize)>, a: usize, b: usize) -> bool {
    done.contains(&(a.min(b), a.max(b)))
}

fn make_pair(basis: &[Polynomial], i: usize, j: usize) -> Pair {
    let lcm = basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap());
    Pair { i, j, lcm }
}

fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let order = basis.first().map(|g| g.order()).unwrap_or_default();
    // minimal: drop generators whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let lk = h.leading_monomial().unwrap();
            k != idx && lk.divides(lm) && (lk != lm || k < idx)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != idx)
            .map(|(_, h)| h.clone())
            .collect();
        let g = &minimal[idx];
        let (lm, lc) = g.leading_term().unwrap().clone();
        let tail = Polynomial::from_terms(g.field(), order, g.nvars(), g.terms()[1..].to_vec());
        let tail = normal_form(&tail, &others);
        let lead = Polynomial::monomial(g.field(), order, lm, lc);
        reduced.push(lead.add(&tail).monic());
    }
    reduced.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    reduced
}
