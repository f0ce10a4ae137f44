//! Linear algebra over the field with two elements.

use fixedbitset::FixedBitSet;

/// Incrementally built row-echelon basis of a subspace of `GF(2)^len`.
#[derive(Clone, Debug)]
pub struct Gf2Basis {
    len: usize,
    // (pivot, vector) with distinct pivots; each vector's lowest set bit is its pivot
    rows: Vec<(usize, FixedBitSet)>,
}

impl Gf2Basis {
    pub fn new(len: usize) -> Self {
        Gf2Basis { len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut FixedBitSet) {
        for (pivot, row) in &self.rows {
            if v.contains(*pivot) {
                v.symmetric_difference_with(row);
            }
        }
    }

    /// Adds `v`; returns whether it was independent of the current basis.
    pub fn insert(&mut self, mut v: FixedBitSet) -> bool {
        debug_assert_eq!(v.len(), self.len);
        self.reduce(&mut v);
        match v.minimum() {
            Some(p) => {
                // keep the basis fully reduced so `reduce` needs one pass
                for (_, row) in &mut self.rows {
                    if row.contains(p) {
                        row.symmetric_difference_with(&v);
                    }
                }
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &FixedBitSet) -> bool {
        let mut v = v.clone();
        self.reduce(&mut v);
        v.is_clear()
    }
}

/// Rank of a family of bit vectors of common length `len`.
pub fn gf2_rank<'a>(len: usize, vectors: impl IntoIterator<Item = &'a FixedBitSet>) -> usize {
    let mut basis = Gf2Basis::new(len);
    for v in vectors {
        basis.insert(v.clone());
    }
    basis.dim()
}
