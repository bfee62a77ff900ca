//! The Burnside ring `B(G)` in the basis of transitive sets `[G/K]`, and its
//! embedding into the ghost ring by fixed-point counts.

pub mod biset;
pub mod congruence;
pub mod io;
pub mod units;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::SubgroupLattice;

pub use biset::{ghost_biset, BisetMapKind};
pub use congruence::congruence_member;
pub use units::{maximal_unit_signs, sign_string, unit_group, unit_group_with_cap, Unit, UnitGroup, UNIT_CLASS_CAP};

/// Coefficients of `[G/K]` per subgroup class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BurnsideElement {
    pub coefficients: Vec<BigInt>,
}

/// Fixed-point counts `|a^H|` per subgroup class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MarkVector {
    pub values: Vec<BigInt>,
}

impl BurnsideElement {
    pub fn zero(classes: usize) -> Self {
        BurnsideElement { coefficients: vec![BigInt::zero(); classes] }
    }

    pub fn from_i64(coefficients: &[i64]) -> Self {
        BurnsideElement { coefficients: coefficients.iter().map(|&c| BigInt::from(c)).collect() }
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        BurnsideElement { coefficients: self.coefficients.iter().map(|c| c * k).collect() }
    }
}

impl MarkVector {
    pub fn from_i64(values: &[i64]) -> Self {
        MarkVector { values: values.iter().map(|&v| BigInt::from(v)).collect() }
    }

    pub fn constant(classes: usize, value: i64) -> Self {
        MarkVector { values: vec![BigInt::from(value); classes] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `Some(signs)` with bit `i` set where the mark is `-1`, if every mark is `±1`.
    pub fn as_signs(&self) -> Option<crate::bitset::BitSet> {
        let mut signs = crate::bitset::BitSet::new(self.values.len());
        for (i, v) in self.values.iter().enumerate() {
            if *v == -BigInt::one() {
                signs.insert(i);
            } else if !v.is_one() {
                return None;
            }
        }
        Some(signs)
    }

    pub fn from_signs(signs: &crate::bitset::BitSet) -> Self {
        MarkVector {
            values: (0..signs.len()).map(|i| if signs.contains(i) { -BigInt::one() } else { BigInt::one() }).collect(),
        }
    }
}

macro_rules! pointwise {
    ($ty:ident, $field:ident, $tr:ident, $f:ident, $op:tt) => {
        impl $tr for &$ty {
            type Output = $ty;
            fn $f(self, rhs: &$ty) -> $ty {
                assert_eq!(self.$field.len(), rhs.$field.len(), "length mismatch");
                $ty { $field: self.$field.iter().zip(&rhs.$field).map(|(a, b)| a $op b).collect() }
            }
        }
    };
}
pointwise!(BurnsideElement, coefficients, Add, add, +);
pointwise!(BurnsideElement, coefficients, Sub, sub, -);
pointwise!(MarkVector, values, Add, add, +);
pointwise!(MarkVector, values, Sub, sub, -);
pointwise!(MarkVector, values, Mul, mul, *);

impl Neg for &BurnsideElement {
    type Output = BurnsideElement;
    fn neg(self) -> BurnsideElement {
        BurnsideElement { coefficients: self.coefficients.iter().map(|c| -c).collect() }
    }
}

impl Neg for &MarkVector {
    type Output = MarkVector;
    fn neg(self) -> MarkVector {
        MarkVector { values: self.values.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for MarkVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The table of marks. Row `k` is the mark vector of `[G/K_k]`:
/// `matrix[k][h] = |(G/K_k)^{H_h}|`, lower triangular in the canonical
/// class order.
#[derive(Clone, Debug)]
pub struct MarksTable {
    lattice: Arc<SubgroupLattice>,
    matrix: Vec<Vec<i64>>,
}

impl MarksTable {
    pub fn new(lattice: Arc<SubgroupLattice>) -> Self {
        let c = lattice.class_count();
        let mut matrix = vec![vec![0i64; c]; c];
        for (k, class) in lattice.classes().iter().enumerate() {
            let rep = class.representative;
            // |(G/K)^H| = #{conjugates K' of K with H <= K'} * [N_G(K) : K]
            let weight = (lattice.order_of(lattice.normalizer(rep)) / lattice.order_of(rep)) as i64;
            for &member in &class.members {
                for h in lattice.below(member).iter() {
                    if lattice.class_rep(lattice.class_of(h)) == h {
                        matrix[k][lattice.class_of(h)] += weight;
                    }
                }
            }
        }
        MarksTable { lattice, matrix }
    }

    /// A table with arbitrary entries; only for exercising failure paths.
    #[doc(hidden)]
    pub fn with_matrix(lattice: Arc<SubgroupLattice>, matrix: Vec<Vec<i64>>) -> Self {
        MarksTable { lattice, matrix }
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    pub fn class_count(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn entry(&self, k: usize, h: usize) -> i64 {
        self.matrix[k][h]
    }

    pub fn labels(&self) -> Vec<String> {
        self.lattice.class_labels()
    }

    /// Checks lower-triangularity and the diagonal `[N_G(H) : H]`.
    pub fn check_invariants(&self) -> Result<()> {
        let l = &self.lattice;
        for (k, row) in self.matrix.iter().enumerate() {
            for (h, &v) in row.iter().enumerate() {
                if h > k && v != 0 {
                    return Err(Error::Invariant(format!("marks table not triangular at ({k},{h})")));
                }
            }
            let rep = l.class_rep(k);
            let diag = (l.order_of(l.normalizer(rep)) / l.order_of(rep)) as i64;
            if row[k] != diag {
                return Err(Error::Invariant(format!("diagonal entry {k} is {} not {diag}", row[k])));
            }
        }
        Ok(())
    }

    pub fn zero(&self) -> BurnsideElement {
        BurnsideElement::zero(self.class_count())
    }

    /// `[G/G]`.
    pub fn one(&self) -> BurnsideElement {
        self.transitive(self.class_count() - 1)
    }

    /// `[G/K]` for the class `k`.
    pub fn transitive(&self, k: usize) -> BurnsideElement {
        let mut b = self.zero();
        b.coefficients[k] = BigInt::one();
        b
    }

    pub fn mark(&self, b: &BurnsideElement) -> MarkVector {
        let c = self.class_count();
        assert_eq!(b.len(), c, "element over a different group");
        let mut values = vec![BigInt::zero(); c];
        for (k, coeff) in b.coefficients.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (h, &m) in self.matrix[k].iter().enumerate().take(k + 1) {
                if m != 0 {
                    values[h] += coeff * m;
                }
            }
        }
        MarkVector { values }
    }

    /// Inverts [`mark`](Self::mark) by back-substitution from the top class
    /// down; fails at the first coordinate whose coefficient is not integral.
    pub fn from_marks(&self, v: &MarkVector) -> Result<BurnsideElement> {
        let c = self.class_count();
        if v.len() != c {
            return Err(Error::Dimension { expected: c, got: v.len() });
        }
        let mut x = vec![BigInt::zero(); c];
        for h in (0..c).rev() {
            let mut rest = v.values[h].clone();
            for k in h + 1..c {
                let m = self.matrix[k][h];
                if m != 0 && !x[k].is_zero() {
                    rest -= &x[k] * m;
                }
            }
            let (q, r) = rest.div_rem(&BigInt::from(self.matrix[h][h]));
            if !r.is_zero() {
                return Err(Error::NotIntegral { coordinate: h });
            }
            x[h] = q;
        }
        Ok(BurnsideElement { coefficients: x })
    }

    pub fn mul(&self, a: &BurnsideElement, b: &BurnsideElement) -> BurnsideElement {
        let product = &self.mark(a) * &self.mark(b);
        self.from_marks(&product).expect("the ghost image is closed under products")
    }

    pub fn is_unit(&self, b: &BurnsideElement) -> bool {
        self.mark(b).as_signs().is_some()
    }
}
