//! The unit group `B(G)^×`, an F2-vector space of `±1` mark vectors.
//!
//! Generic search: assign signs from the top class down. Back-substitution
//! for the coefficient at class `h` only involves classes `>= h`, so every
//! prefix whose coefficients are already non-integral is cut at once.
//!
//! Canonical basis: `-1` first, then the reduced echelon basis (pivots
//! chosen from the top class down) of the units with mark `+1` at `G`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{BurnsideElement, MarkVector, MarksTable};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::linalg::F2Space;

/// Largest number of subgroup classes for the generic search.
pub const UNIT_CLASS_CAP: usize = 24;

/// A unit with its certified preimage in `B(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unit {
    /// Bit `h` is set iff the mark at class `h` is `-1`.
    pub signs: BitSet,
    pub preimage: BurnsideElement,
}

impl Unit {
    pub fn certify(table: &MarksTable, signs: BitSet) -> Result<Unit> {
        let preimage = table.from_marks(&MarkVector::from_signs(&signs))?;
        Ok(Unit { signs, preimage })
    }

    pub fn marks(&self) -> MarkVector {
        MarkVector::from_signs(&self.signs)
    }

    /// Signs as `+`/`-` separated by spaces.
    pub fn sign_string(&self) -> String {
        sign_string(&self.signs)
    }
}

pub fn sign_string(signs: &BitSet) -> String {
    (0..signs.len()).map(|i| if signs.contains(i) { "-" } else { "+" }).collect::<Vec<_>>().join(" ")
}

/// A subgroup of `B(G)^×` containing `-1`, with a canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitGroup {
    classes: usize,
    space: F2Space,
    basis: Vec<Unit>,
}

impl UnitGroup {
    /// Builds the canonical basis of the span of `generators` together with `-1`.
    pub fn from_signs(table: &MarksTable, generators: impl IntoIterator<Item = BitSet>) -> Result<Self> {
        let c = table.class_count();
        let top = c - 1;
        let minus_one = BitSet::full(c);
        let mut normalized = F2Space::top_down(c);
        for mut v in generators {
            if v.len() != c {
                return Err(Error::Dimension { expected: c, got: v.len() });
            }
            if v.contains(top) {
                v.xor_with(&minus_one);
            }
            normalized.insert(v);
        }
        let mut basis = vec![Unit::certify(table, minus_one.clone())?];
        for v in normalized.basis() {
            basis.push(Unit::certify(table, v.clone())?);
        }
        let space = F2Space::spanned_by(c, (0..c).rev().collect(), basis.iter().map(|u| u.signs.clone()));
        Ok(UnitGroup { classes: c, space, basis })
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Unit] {
        &self.basis
    }

    pub fn space(&self) -> &F2Space {
        &self.space
    }

    pub fn contains(&self, signs: &BitSet) -> bool {
        self.space.contains(signs)
    }

    pub fn contains_minus_one(&self) -> bool {
        self.contains(&BitSet::full(self.classes))
    }

    pub fn is_subgroup_of(&self, other: &UnitGroup) -> bool {
        self.space.is_subspace_of(&other.space)
    }

    pub fn same_group(&self, other: &UnitGroup) -> bool {
        self.space.same_space(&other.space)
    }

    /// All `2^rank` sign vectors.
    pub fn elements(&self) -> Vec<BitSet> {
        self.space.elements()
    }

    /// The units whose signs satisfy `bit[a] == bit[b]` for every pair.
    pub fn subgroup_where_equal(&self, table: &MarksTable, pairs: &[(usize, usize)]) -> Result<UnitGroup> {
        let constraints: Vec<BitSet> = pairs
            .iter()
            .filter(|(a, b)| a != b)
            .map(|&(a, b)| {
                BitSet::from_indices(
                    self.basis.len(),
                    self.basis.iter().enumerate().filter(|(_, u)| u.signs.contains(a) != u.signs.contains(b)).map(|(i, _)| i),
                )
            })
            .collect();
        let kernel = crate::linalg::null_space(&constraints, self.basis.len());
        let gens = kernel.into_iter().map(|coeffs| {
            let mut v = BitSet::new(self.classes);
            for i in coeffs.iter() {
                v.xor_with(&self.basis[i].signs);
            }
            v
        });
        UnitGroup::from_signs(table, gens)
    }
}

pub fn unit_group(table: &MarksTable) -> Result<UnitGroup> {
    unit_group_with_cap(table, UNIT_CLASS_CAP)
}

pub fn unit_group_with_cap(table: &MarksTable, cap: usize) -> Result<UnitGroup> {
    let lattice = table.lattice();
    let group = lattice.group();
    if group.is_abelian() && group.order().is_power_of_two() {
        return abelian_two_group_units(table);
    }
    let c = table.class_count();
    if c > cap {
        return Err(Error::CapExceeded { what: "subgroup classes for unit enumeration", size: c, cap });
    }
    let mut found = F2Space::top_down(c);
    let mut signs = BitSet::new(c);
    let mut coeffs = vec![BigInt::zero(); c];
    search(table, c, &mut signs, &mut coeffs, &mut found);
    UnitGroup::from_signs(table, found.basis().cloned().collect::<Vec<_>>())
}

/// For abelian 2-groups the units are spanned by `-1` and the maximal units `v_M`.
fn abelian_two_group_units(table: &MarksTable) -> Result<UnitGroup> {
    let lattice = table.lattice();
    let gens: Vec<BitSet> = lattice.maximals().iter().map(|&m| maximal_unit_signs(lattice, m)).collect();
    UnitGroup::from_signs(table, gens)
}

/// Signs of `v_M`: `-1` exactly on classes of subgroups of `M` (normal, index 2).
pub fn maximal_unit_signs(lattice: &crate::group::SubgroupLattice, m: usize) -> BitSet {
    BitSet::from_indices(
        lattice.class_count(),
        (0..lattice.class_count()).filter(|&k| lattice.leq(lattice.class_rep(k), m)),
    )
}

fn search(table: &MarksTable, h: usize, signs: &mut BitSet, coeffs: &mut [BigInt], found: &mut F2Space) {
    if h == 0 {
        found.insert(signs.clone());
        return;
    }
    let h = h - 1;
    let c = table.class_count();
    let mut rest = BigInt::zero();
    for k in h + 1..c {
        let m = table.entry(k, h);
        if m != 0 && !coeffs[k].is_zero() {
            rest += &coeffs[k] * m;
        }
    }
    let diag = BigInt::from(table.entry(h, h));
    for negative in [false, true] {
        let value = if negative { -BigInt::one() } else { BigInt::one() };
        let (q, r) = (value - &rest).div_rem(&diag);
        if r.is_zero() {
            signs.set(h, negative);
            coeffs[h] = q;
            search(table, h, signs, coeffs, found);
        }
    }
    signs.set(h, false);
    coeffs[h] = BigInt::zero();
}
