use std::collections::BTreeMap;

use super::field::PrimeField;

/// An incrementally built row-echelon basis of a subspace of `F_p^n`.
///
/// Rows are normalized so their leading entry is 1. Vectors are reduced by
/// eliminating pivots in increasing column order.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: PrimeField,
    width: usize,
    rows: BTreeMap<usize, Vec<u32>>,
}

impl Echelon {
    pub fn new(field: PrimeField, width: usize) -> Self {
        Echelon {
            field,
            width,
            rows: BTreeMap::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    /// Reduces `v` in place against the basis; the result is zero iff `v` was
    /// in the span.
    pub fn reduce(&self, v: &mut [u32]) {
        debug_assert_eq!(v.len(), self.width);
        super::lazy::reduce_against(self.field, v, self.rows.iter().map(|(&p, r)| (p, r)));
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span. Returns `true` if the dimension grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        self.reduce(&mut v);
        self.insert_reduced(v)
    }

    fn insert_reduced(&mut self, mut v: Vec<u32>) -> bool {
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[p]);
        for x in &mut v[p..] {
            *x = self.field.mul(*x, inv);
        }
        self.rows.insert(p, v);
        true
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<u32>> {
        self.rows.values()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_tracks_dimension() {
        let f = PrimeField::new(7).unwrap();
        let mut e = Echelon::new(f, 3);
        assert!(e.insert(vec![0, 1, 2]));
        assert!(e.insert(vec![1, 1, 1]));
        assert!(!e.insert(vec![1, 2, 3]));
        assert!(!e.insert(vec![0, 0, 0]));
        assert_eq!(e.dim(), 2);
        assert!(e.contains(&[2, 3, 4]));
        assert!(!e.contains(&[0, 0, 1]));
        assert_eq!(e.pivots().collect::<Vec<_>>(), vec![0, 1]);
    }
}
