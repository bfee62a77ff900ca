//! Integer lattices with a canonical Hermite-normal-form basis.
//!
//! The basis is in row echelon form with strictly increasing pivot columns,
//! positive pivots, and every entry above a pivot reduced into
//! `[0, pivot)`. Two lattices are equal iff their bases are equal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLattice {
    dim: usize,
    basis: Vec<Vec<BigInt>>,
}

impl IntLattice {
    /// The lattice spanned by `gens`, each of length `dim`.
    pub fn from_generators(dim: usize, gens: &[Vec<BigInt>]) -> Self {
        let mut rows: Vec<Vec<BigInt>> =
            gens.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
        for r in &rows {
            assert_eq!(r.len(), dim, "generator length");
        }
        let rank = echelonize(&mut rows, 0..dim, true);
        rows.truncate(rank);
        IntLattice { dim, basis: rows }
    }

    /// `{x in Z^dim : A x = 0}` for the constraint rows `A`.
    pub fn kernel(dim: usize, constraints: &[Vec<BigInt>]) -> Self {
        let m = constraints.len();
        // Row j of [A^T | I]; unimodular row operations on it keep the right
        // block a basis change, and rows whose left block vanishes span the kernel.
        let mut rows: Vec<Vec<BigInt>> = (0..dim)
            .map(|j| {
                let mut row: Vec<BigInt> = constraints.iter().map(|c| c[j].clone()).collect();
                row.extend((0..dim).map(|k| BigInt::from((k == j) as i32)));
                row
            })
            .collect();
        let rank = echelonize(&mut rows, 0..m, false);
        let gens: Vec<Vec<BigInt>> = rows[rank..].iter().map(|r| r[m..].to_vec()).collect();
        IntLattice::from_generators(dim, &gens)
    }

    pub fn full(dim: usize) -> Self {
        let gens: Vec<Vec<BigInt>> =
            (0..dim).map(|i| (0..dim).map(|k| BigInt::from((k == i) as i32)).collect()).collect();
        IntLattice::from_generators(dim, &gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// Integer coordinates of `v` in the basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut rest = v.to_vec();
        let mut coords = Vec::with_capacity(self.basis.len());
        for row in &self.basis {
            let p = pivot(row).expect("basis rows are nonzero");
            if rest[..p].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let (q, r) = rest[p].div_rem(&row[p]);
            if !r.is_zero() {
                return None;
            }
            for (x, y) in rest.iter_mut().zip(row) {
                *x -= &q * y;
            }
            coords.push(q);
        }
        rest.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Whether `other` is a sublattice of `self`.
    pub fn contains(&self, other: &IntLattice) -> bool {
        other.basis.iter().all(|v| self.contains_vector(v))
    }

    /// The lattice spanned by both.
    pub fn sum(&self, other: &IntLattice) -> IntLattice {
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        IntLattice::from_generators(self.dim, &gens)
    }
}

fn pivot(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

/// Row-reduces `rows` over the given columns using only unimodular operations.
/// Returns the number of pivot rows, which come first; the remaining rows
/// vanish on `cols`. With `reduce_above`, entries above pivots are reduced
/// into `[0, pivot)` and pivots made positive.
fn echelonize(rows: &mut [Vec<BigInt>], cols: std::ops::Range<usize>, reduce_above: bool) -> usize {
    let mut r = 0;
    for col in cols {
        if r == rows.len() {
            break;
        }
        loop {
            let best = (r..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(best) = best else { break };
            rows.swap(r, best);
            let mut clean = true;
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[r][col]);
                let (head, tail) = rows.split_at_mut(i);
                for (x, y) in tail[0].iter_mut().zip(&head[r]) {
                    *x -= &q * y;
                }
                if !tail[0][col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if rows[r][col].is_zero() {
            continue;
        }
        if reduce_above {
            if rows[r][col].is_negative() {
                for x in rows[r].iter_mut() {
                    *x = -&*x;
                }
            }
            for i in 0..r {
                let q = rows[i][col].div_floor(&rows[r][col]);
                if q.is_zero() {
                    continue;
                }
                let (head, tail) = rows.split_at_mut(r);
                for (x, y) in head[i].iter_mut().zip(&tail[0]) {
                    *x -= &q * y;
                }
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_is_canonical() {
        let a = IntLattice::from_generators(3, &[v(&[2, 4, 6]), v(&[0, 3, 3])]);
        let b = IntLattice::from_generators(3, &[v(&[2, 7, 9]), v(&[0, -3, -3]), v(&[4, 11, 15])]);
        assert_eq!(a, b);
        assert_eq!(a.basis(), &[v(&[2, 1, 3]), v(&[0, 3, 3])]);
    }

    #[test]
    fn kernel_of_difference_constraint() {
        // x0 + 2 x1 - x2 = 0
        let k = IntLattice::kernel(3, &[v(&[1, 2, -1])]);
        assert_eq!(k.rank(), 2);
        assert!(k.contains_vector(&v(&[1, 0, 1])));
        assert!(k.contains_vector(&v(&[0, 1, 2])));
        assert!(!k.contains_vector(&v(&[1, 1, 1])));
    }

    #[test]
    fn containment_and_coordinates() {
        let full = IntLattice::full(2);
        let sub = IntLattice::from_generators(2, &[v(&[2, 0]), v(&[0, 2])]);
        assert!(full.contains(&sub));
        assert!(!sub.contains(&full));
        assert_eq!(sub.coordinates(&v(&[4, -2])), Some(v(&[2, -1])));
        assert_eq!(sub.sum(&full), full);
    }
}
