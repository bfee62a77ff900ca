//! Membership in the image of the mark homomorphism via Möbius congruences:
//! `v` is a mark vector iff for every `H`, every prime `q` and every
//! `Q` with `Q/H` a Sylow `q`-subgroup of `N_G(H)/H`,
//! `sum_{H <= I <= Q} mu(H, I) v_I ≡ 0 (mod [Q:H])`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::MarkVector;
use crate::group::{p_part, prime_factors, SubgroupLattice};

pub fn congruence_member(lattice: &SubgroupLattice, v: &MarkVector) -> bool {
    first_failure(lattice, v).is_none()
}

/// The first failing `(H, Q)` pair as subgroup ids, if any.
pub fn first_failure(lattice: &SubgroupLattice, v: &MarkVector) -> Option<(usize, usize)> {
    assert_eq!(v.len(), lattice.class_count(), "vector over a different group");
    for class in lattice.classes() {
        let h = class.representative;
        let norm = lattice.normalizer(h);
        let index = lattice.order_of(norm) / lattice.order_of(h);
        let mu = lattice.mobius_row(h);
        for q in prime_factors(index) {
            let qpart = p_part(index, q);
            let target = lattice.order_of(h) * qpart;
            let modulus = BigInt::from(qpart);
            let candidates = lattice.above(h).intersect(lattice.below(norm));
            for big_q in candidates.iter().filter(|&x| lattice.order_of(x) == target) {
                let mut sum = BigInt::zero();
                for i in candidates.intersect(lattice.below(big_q)).iter() {
                    if mu[i] != 0 {
                        sum += &v.values[lattice.class_of(i)] * mu[i];
                    }
                }
                if !sum.mod_floor(&modulus).is_zero() {
                    return Some((h, big_q));
                }
            }
        }
    }
    None
}
