//! Sparse Gaussian elimination over `F_p`, used for degreewise graded
//! Nakayama computations.

use std::collections::{BTreeMap, HashMap};

use crate::arith::PrimeField;

pub type SparseRow = Vec<(usize, u32)>;

/// Incrementally built row echelon form. Every stored row is monic at its
/// smallest column, which is its pivot.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    field: PrimeField,
    rows: Vec<SparseRow>,
    pivots: HashMap<usize, usize>,
}

impl RowEchelon {
    pub fn new(field: PrimeField) -> Self {
        RowEchelon {
            field,
            rows: Vec::new(),
            pivots: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    /// Remainder of `row` after eliminating all pivot columns.
    pub fn reduce(&self, row: &[(usize, u32)]) -> SparseRow {
        let f = &self.field;
        let mut acc: BTreeMap<usize, u32> = BTreeMap::new();
        for &(c, v) in row {
            let e = acc.entry(c).or_insert(0);
            *e = f.add(*e, v % f.characteristic());
        }
        acc.retain(|_, v| *v != 0);
        let mut cursor = 0usize;
        loop {
            let next = acc
                .range(cursor..)
                .find(|(c, _)| self.pivots.contains_key(c))
                .map(|(c, v)| (*c, *v));
            let Some((col, val)) = next else { break };
            let prow = &self.rows[self.pivots[&col]];
            let neg = f.neg(val);
            for &(c, v) in prow {
                let e = acc.entry(c).or_insert(0);
                *e = f.add(*e, f.mul(neg, v));
                if *e == 0 {
                    acc.remove(&c);
                }
            }
            cursor = col + 1;
        }
        acc.into_iter().collect()
    }

    /// Adds `row` if it is independent of the stored rows; returns whether it was.
    pub fn insert(&mut self, row: &[(usize, u32)]) -> bool {
        let r = self.reduce(row);
        if r.is_empty() {
            return false;
        }
        let inv = self.field.inv(r[0].1);
        let r: SparseRow = r
            .into_iter()
            .map(|(c, v)| (c, self.field.mul(v, inv)))
            .collect();
        self.pivots.insert(r[0].0, self.rows.len());
        self.rows.push(r);
        true
    }
}

/// Basis of the kernel `{a : Σ a_i rows[i] = 0}` of a list of sparse rows.
pub fn left_kernel(field: PrimeField, rows: &[SparseRow], ncols: usize) -> Vec<SparseRow> {
    // augment with an identity block shifted past the data columns
    let mut ech = RowEchelon::new(field);
    let mut kernel = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut aug = row.clone();
        aug.push((ncols + i, 1));
        let r = ech.reduce(&aug);
        if r.first().is_some_and(|(c, _)| *c >= ncols) {
            kernel.push(r.iter().map(|(c, v)| (c - ncols, *v)).collect());
        } else {
            ech.insert(&r);
        }
    }
    kernel
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let f = PrimeField::new(7).unwrap();
        let rows = vec![vec![(0, 1), (1, 1)], vec![(0, 1), (1, 6)], vec![(0, 1)]];
        let mut e = RowEchelon::new(f);
        let independent: Vec<bool> = rows.iter().map(|r| e.insert(r)).collect();
        assert_eq!(independent, vec![true, true, false]);
        let k = left_kernel(f, &rows, 2);
        assert_eq!(k.len(), 1);
        // check the combination vanishes
        let mut sum = [0u32; 2];
        for &(i, a) in &k[0] {
            for &(c, v) in &rows[i] {
                sum[c] = f.add(sum[c], f.mul(a, v));
            }
        }
        assert_eq!(sum, [0, 0]);
    }
}
