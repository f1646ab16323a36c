use num_rational::Ratio;

use crate::poly::{Monomial, Polynomial};

/// Multidegree of a monomial under a [`Grading`].
pub type Degree = Vec<i64>;

/// The finest torus grading making every ideal generator homogeneous.
///
/// Two monomials get the same degree exactly when their exponent difference
/// lies in the rational span of the differences of terms inside the
/// generators. Degrees are `weights · exponents` for an integer basis of the
/// orthogonal complement of that span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    weights: Vec<Vec<i64>>,
}

impl Grading {
    pub fn trivial() -> Self {
        Grading { weights: Vec::new() }
    }

    pub fn from_generators(gens: &[Polynomial], nvars: usize) -> Self {
        let mut diffs: Vec<Vec<i64>> = Vec::new();
        for g in gens {
            let terms = g.terms();
            if let Some((first, _)) = terms.first() {
                for (m, _) in &terms[1..] {
                    diffs.push(
                        m.exponents()
                            .iter()
                            .zip(first.exponents())
                            .map(|(&a, &b)| a as i64 - b as i64)
                            .collect(),
                    );
                }
            }
        }
        Grading {
            weights: rational_kernel(&diffs, nvars),
        }
    }

    pub fn rank(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    pub fn degree(&self, m: &Monomial) -> Degree {
        self.weights
            .iter()
            .map(|w| w.iter().zip(m.exponents()).map(|(a, &e)| a * e as i64).sum())
            .collect()
    }

    pub fn is_homogeneous(&self, p: &Polynomial) -> bool {
        let mut degs = p.terms().iter().map(|(m, _)| self.degree(m));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Degree of a homogeneous polynomial; `None` if zero or inhomogeneous.
    pub fn degree_of(&self, p: &Polynomial) -> Option<Degree> {
        if p.is_zero() || !self.is_homogeneous(p) {
            return None;
        }
        Some(self.degree(&p.terms()[0].0))
    }
}

pub fn add_degrees(a: &[i64], b: &[i64]) -> Degree {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_degrees(a: &[i64], b: &[i64]) -> Degree {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Integer basis of `{ w in Q^n : row · w = 0 for every row }`.
fn rational_kernel(rows: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    type Q = Ratio<i128>;
    let mut m: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x as i128)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..m.len()).find(|&i| m[i][c] != Q::from_integer(0)) else {
            continue;
        };
        m.swap(r, pr);
        let inv = Q::from_integer(1) / m[r][c];
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != Q::from_integer(0) {
                let f = m[i][c];
                for k in 0..n {
                    let delta = f * m[r][k];
                    m[i][k] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::from_integer(0); n];
        v[free] = Q::from_integer(1);
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[i][free];
        }
        let lcm = v.iter().fold(1i128, |acc, q| lcm(acc, *q.denom()));
        let ints: Vec<i128> = v.iter().map(|q| (q * Q::from_integer(lcm)).to_integer()).collect();
        let g = ints.iter().fold(0i128, |acc, &x| gcd(acc, x.abs())).max(1);
        basis.push(ints.iter().map(|&x| (x / g) as i64).collect());
    }
    basis
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: i128, b: i128) -> i128 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::PrimeField;
    use crate::poly::{MonomialOrder, PolyRing};

    #[test]
    fn r3_has_a_rank_two_grading() {
        let r = PolyRing::new(
            PrimeField::new(101).unwrap(),
            vec!["a".into(), "b".into(), "c".into()],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        let gens: Vec<_> = ["a^2", "b*c", "c^2", "b^2 - a*c"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let g = Grading::from_generators(&gens, 3);
        assert_eq!(g.rank(), 2);
        for p in &gens {
            assert!(g.is_homogeneous(p));
        }
        // semigroup weights 3,4,5 and the standard grading both factor through it
        let a = g.degree(&Monomial::from_exponents(vec![1, 0, 0]));
        let b = g.degree(&Monomial::from_exponents(vec![0, 1, 0]));
        let c = g.degree(&Monomial::from_exponents(vec![0, 0, 1]));
        assert_ne!(a, b);
        assert_ne!(b, c);
        assert_eq!(add_degrees(&b, &b), add_degrees(&a, &c));
        assert!(!g.is_homogeneous(&r.parse("a + b").unwrap()));
    }

    #[test]
    fn inhomogeneous_ideal_collapses() {
        let r = PolyRing::new(
            PrimeField::new(101).unwrap(),
            vec!["x".into()],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        let g = Grading::from_generators(&[r.parse("x^2 - x^3").unwrap()], 1);
        assert_eq!(g.rank(), 0);
    }
}
