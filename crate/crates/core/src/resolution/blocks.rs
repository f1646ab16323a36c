use std::collections::HashMap;

use crate::algebra::{Degree, SparseVec};

/// Partition of a basis into degree blocks, in order of first appearance.
#[derive(Clone, Debug)]
pub(crate) struct Blocks {
    keys: Vec<Degree>,
    index: HashMap<Degree, usize>,
    members: Vec<Vec<usize>>,
    /// `(block, position within block)` for each basis index.
    position: Vec<(usize, usize)>,
}

impl Blocks {
    pub(crate) fn new(degrees: impl Iterator<Item = Degree>) -> Self {
        let mut b = Blocks {
            keys: Vec::new(),
            index: HashMap::new(),
            members: Vec::new(),
            position: Vec::new(),
        };
        for (q, d) in degrees.enumerate() {
            let id = match b.index.get(&d) {
                Some(&id) => id,
                None => {
                    let id = b.keys.len();
                    b.index.insert(d.clone(), id);
                    b.keys.push(d);
                    b.members.push(Vec::new());
                    id
                }
            };
            b.position.push((id, b.members[id].len()));
            b.members[id].push(q);
        }
        b
    }

    pub(crate) fn len(&self) -> usize {
        self.keys.len()
    }

    pub(crate) fn key(&self, b: usize) -> &Degree {
        &self.keys[b]
    }

    pub(crate) fn block_of_key(&self, key: &Degree) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub(crate) fn members(&self) -> &[Vec<usize>] {
        &self.members
    }

    pub(crate) fn position(&self, q: usize) -> (usize, usize) {
        self.position[q]
    }

    /// Dense local coordinates of a vector supported in block `b`.
    pub(crate) fn localize(&self, b: usize, v: &SparseVec) -> Vec<u32> {
        let mut out = vec![0; self.members[b].len()];
        for &(q, c) in v {
            let (bb, l) = self.position[q];
            debug_assert_eq!(bb, b, "vector is not homogeneous");
            out[l] = c;
        }
        out
    }
}
