//! The stable subring `B(F) ⊆ B(S)` and its units.

mod units;

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::burnside::{ghost_biset, BisetMapKind, BurnsideElement, MarkVector, MarksTable, UnitGroup};
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
pub use crate::fusion::StabilityMode;
use crate::linalg::IntLattice;

pub use units::{act_by_automorphism, automorphism_class_permutation, MaximalRow, MaximalsReport, OutAction};

/// A sublattice of `B(S)` with a chosen basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableLattice {
    /// The lattice in `[S/K]` coordinates, kept in Hermite normal form.
    pub lattice: IntLattice,
    pub basis: Vec<BurnsideElement>,
    /// Marks of each basis element, one entry per F-class.
    pub marks: Vec<MarkVector>,
    pub labels: Vec<String>,
}

impl StableLattice {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `b` in this basis, if `b` lies in the lattice.
    pub fn coordinates(&self, b: &BurnsideElement) -> Option<Vec<BigInt>> {
        solve_integral(&self.basis, &b.coefficients)
    }
}

/// `B(S)` together with a fusion system and cached derived data.
#[derive(Debug)]
pub struct StableRing {
    fusion: Arc<FusionSystem>,
    table: MarksTable,
    units: OnceLock<UnitGroup>,
}

impl StableRing {
    pub fn new(fusion: Arc<FusionSystem>) -> Self {
        let table = MarksTable::new(fusion.lattice().clone());
        StableRing { fusion, table, units: OnceLock::new() }
    }

    /// A ring over an arbitrary marks table; only for exercising failure paths.
    #[doc(hidden)]
    pub fn with_table(fusion: Arc<FusionSystem>, table: MarksTable) -> Self {
        StableRing { fusion, table, units: OnceLock::new() }
    }

    pub fn fusion(&self) -> &Arc<FusionSystem> {
        &self.fusion
    }

    pub fn table(&self) -> &MarksTable {
        &self.table
    }

    /// First S-class of each F-class; marks of stable elements are read there.
    fn f_class_columns(&self) -> Vec<usize> {
        self.fusion.s_classes().iter().map(|cs| cs[0]).collect()
    }

    fn f_labels(&self) -> Vec<String> {
        (0..self.fusion.class_count()).map(|f| self.fusion.class_label(f).to_string()).collect()
    }

    fn describe(&self, lattice: IntLattice, basis: Vec<BurnsideElement>) -> StableLattice {
        let cols = self.f_class_columns();
        let marks = basis
            .iter()
            .map(|b| {
                let m = self.table.mark(b);
                MarkVector { values: cols.iter().map(|&k| m.values[k].clone()).collect() }
            })
            .collect();
        StableLattice { lattice, basis, marks, labels: self.f_labels() }
    }

    /// Kernel of the mark-equality conditions, in Hermite normal form.
    pub fn stable_lattice(&self) -> Result<StableLattice> {
        let c = self.table.class_count();
        let constraints: Vec<Vec<BigInt>> = self
            .fusion
            .f_class_pairs()
            .into_iter()
            .map(|(a, b)| (0..c).map(|k| BigInt::from(self.table.entry(k, a) - self.table.entry(k, b))).collect())
            .collect();
        let lattice = IntLattice::kernel(c, &constraints);
        if lattice.rank() != self.fusion.class_count() {
            return Err(Error::Invariant(format!(
                "stable lattice has rank {} but there are {} F-classes",
                lattice.rank(),
                self.fusion.class_count()
            )));
        }
        let basis = lattice.basis().iter().map(|v| BurnsideElement { coefficients: v.clone() }).collect();
        Ok(self.describe(lattice, basis))
    }

    /// Fully normalized S-class of each F-class: largest `|N_S(Q)|`, then least class.
    pub fn fully_normalized_classes(&self) -> Vec<usize> {
        let l = self.fusion.lattice();
        self.fusion
            .s_classes()
            .iter()
            .map(|cs| {
                *cs.iter()
                    .min_by_key(|&&k| (std::cmp::Reverse(l.order_of(l.normalizer(l.class_rep(k)))), k))
                    .expect("non-empty class")
            })
            .collect()
    }

    /// The canonical basis `α_P`: `α_P` has coefficient 1 at `[S/P]` for the
    /// fully normalized `P`, and 0 at the fully normalized representative of
    /// every other F-class.
    pub fn reeh_basis(&self) -> Result<StableLattice> {
        let stable = self.stable_lattice()?;
        let reps = self.fully_normalized_classes();
        let r = reps.len();
        let coeff: Vec<Vec<BigInt>> =
            stable.basis.iter().map(|b| reps.iter().map(|&k| b.coefficients[k].clone()).collect()).collect();
        let inverse = invert(&coeff).ok_or_else(|| Error::Invariant("Reeh coefficient matrix is singular".into()))?;
        let c = self.table.class_count();
        let mut basis = Vec::with_capacity(r);
        for row in &inverse {
            let mut v = vec![BigRational::zero(); c];
            for (x, b) in row.iter().zip(&stable.basis) {
                if x.is_zero() {
                    continue;
                }
                for (acc, y) in v.iter_mut().zip(&b.coefficients) {
                    *acc += x * BigRational::from_integer(y.clone());
                }
            }
            if !v.iter().all(|x| x.is_integer()) {
                return Err(Error::Invariant("Reeh basis element is not integral".into()));
            }
            basis.push(BurnsideElement { coefficients: v.into_iter().map(|x| x.to_integer()).collect() });
        }
        Ok(self.describe(stable.lattice, basis))
    }

    /// Stability via restriction: `Res^S_P(b)` must be `Out_F(P)`-fixed for
    /// every visited `P`.
    pub fn is_stable(&self, b: &BurnsideElement, mode: StabilityMode) -> Result<bool> {
        self.is_stable_marks(&self.table.mark(b), mode)
    }

    pub fn is_stable_marks(&self, marks: &MarkVector, mode: StabilityMode) -> Result<bool> {
        for p in self.visited(mode)? {
            let local = self.fusion.local(p)?;
            let restricted = ghost_biset(BisetMapKind::Res(&local.embedded), marks)?;
            for &a in &local.out_reps {
                let action = &local.class_action[a];
                if action.iter().enumerate().any(|(c, &d)| restricted.values[c] != restricted.values[d]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn visited(&self, mode: StabilityMode) -> Result<Vec<usize>> {
        Ok(match mode {
            StabilityMode::AllSubgroups => (0..self.fusion.lattice().len()).collect(),
            StabilityMode::EssentialsOnly => {
                let mut v = vec![self.fusion.lattice().top()];
                v.extend(self.fusion.essentials()?);
                v
            }
        })
    }

    /// Direct F-constancy of marks, independent of restriction.
    pub fn marks_are_f_constant(&self, marks: &MarkVector) -> bool {
        self.fusion.f_class_pairs().iter().all(|&(a, b)| marks.values[a] == marks.values[b])
    }
}

/// Gauss-Jordan inverse over the rationals.
fn invert(m: &[Vec<BigInt>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.iter().map(|x| BigRational::from_integer(x.clone())).collect();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Integer `x` with `sum x_i basis_i = target`, if one exists.
pub(crate) fn solve_integral(basis: &[BurnsideElement], target: &[BigInt]) -> Option<Vec<BigInt>> {
    let rows: Vec<Vec<BigInt>> = basis.iter().map(|b| b.coefficients.clone()).collect();
    rational_solve(&rows, target)
}

/// Unique rational solution of `x · rows = target` for linearly independent
/// `rows`, required to be integral.
fn rational_solve(rows: &[Vec<BigInt>], target: &[BigInt]) -> Option<Vec<BigInt>> {
    let k = rows.len();
    let dim = target.len();
    let mut a: Vec<Vec<BigRational>> = (0..dim)
        .map(|j| {
            let mut r: Vec<BigRational> = rows.iter().map(|row| BigRational::from_integer(row[j].clone())).collect();
            r.push(BigRational::from_integer(target[j].clone()));
            r
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..k {
        let p = (pivot_row..dim).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for x in a[pivot_row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..dim {
            if r != pivot_row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                let pr = a[pivot_row].clone();
                for (x, y) in a[r].iter_mut().zip(&pr) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if a[pivot_row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    let x: Vec<BigRational> = pivots.iter().map(|&r| a[r][k].clone()).collect();
    if !x.iter().all(|v| v.is_integer()) {
        return None;
    }
    Some(x.into_iter().map(|v| v.to_integer()).collect())
}

#[cfg(test)]
mod tests;
