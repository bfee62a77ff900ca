//! Small square matrices over F2 acting on column vectors packed into `u32`.

use serde::{Deserialize, Serialize};

/// Row `i` is a bit mask; `(M v)_i` is the parity of `row_i & v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BitMatrix {
    dim: usize,
    rows: Vec<u32>,
}

impl BitMatrix {
    pub fn from_rows(dim: usize, rows: Vec<u32>) -> Self {
        assert_eq!(rows.len(), dim);
        BitMatrix { dim, rows }
    }

    /// Builds a matrix from the images of the standard basis vectors.
    pub fn from_columns(dim: usize, columns: &[u32]) -> Self {
        let rows = (0..dim)
            .map(|i| columns.iter().enumerate().fold(0u32, |acc, (j, c)| acc | ((c >> i & 1) << j)))
            .collect();
        BitMatrix { dim, rows }
    }

    /// Parses rows given as 0/1 entries.
    pub fn from_entries(entries: &[Vec<u8>]) -> Option<Self> {
        let dim = entries.len();
        let mut rows = Vec::with_capacity(dim);
        for row in entries {
            if row.len() != dim || row.iter().any(|&b| b > 1) {
                return None;
            }
            rows.push(row.iter().enumerate().fold(0u32, |acc, (j, &b)| acc | ((b as u32) << j)));
        }
        Some(BitMatrix { dim, rows })
    }

    pub fn identity(dim: usize) -> Self {
        BitMatrix { dim, rows: (0..dim).map(|i| 1u32 << i).collect() }
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &BitMatrix) -> Self {
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << self.dim));
        BitMatrix { dim: self.dim + other.dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> u8 {
        (self.rows[i] >> j & 1) as u8
    }

    #[inline]
    pub fn apply(&self, v: u32) -> u32 {
        self.rows.iter().enumerate().fold(0u32, |acc, (i, r)| acc | (((r & v).count_ones() & 1) << i))
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        // Column j of the product is self applied to column j of other.
        let cols: Vec<u32> = (0..self.dim).map(|j| self.apply(other.apply(1 << j))).collect();
        BitMatrix::from_columns(self.dim, &cols)
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.dim {
            if let Some(p) = (rank..self.dim).find(|&r| rows[r] >> col & 1 == 1) {
                rows.swap(rank, p);
                for r in 0..self.dim {
                    if r != rank && rows[r] >> col & 1 == 1 {
                        rows[r] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.dim
    }

    pub fn multiplicative_order(&self) -> Option<usize> {
        if !self.is_invertible() {
            return None;
        }
        let id = BitMatrix::identity(self.dim);
        let mut x = self.clone();
        let mut k = 1;
        while x != id {
            x = x.mul(self);
            k += 1;
        }
        Some(k)
    }

    pub fn to_entries(&self) -> Vec<Vec<u8>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// Compact label: rows as hex digits joined by dots.
    pub fn short_label(&self) -> String {
        self.rows.iter().map(|r| format!("{r:x}")).collect::<Vec<_>>().join(".")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn companion_matrix_has_order_seven() {
        // Multiplication by x on F2[x]/(x^3+x+1).
        let m = BitMatrix::from_columns(3, &[0b010, 0b100, 0b011]);
        assert_eq!(m.multiplicative_order(), Some(7));
    }

    #[test]
    fn entries_round_trip() {
        let m = BitMatrix::from_columns(3, &[0b010, 0b100, 0b011]);
        assert_eq!(BitMatrix::from_entries(&m.to_entries()), Some(m));
    }

    #[test]
    fn singular_matrix_detected() {
        assert!(!BitMatrix::from_rows(2, vec![0b01, 0b01]).is_invertible());
        assert_eq!(BitMatrix::from_rows(2, vec![0b01, 0b01]).multiplicative_order(), None);
    }

    #[test]
    fn mul_matches_apply() {
        let a = BitMatrix::from_columns(3, &[0b010, 0b100, 0b011]);
        let b = BitMatrix::from_columns(3, &[0b001, 0b100, 0b110]);
        let ab = a.mul(&b);
        for v in 0..8 {
            assert_eq!(ab.apply(v), a.apply(b.apply(v)));
        }
    }
}
