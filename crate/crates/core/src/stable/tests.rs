use std::sync::Arc;

use num_bigint::BigInt;

use super::*;
use crate::bitset::BitSet;
use crate::burnside::maximal_unit_signs;
use crate::group::catalog::catalog_group;
use crate::group::{automorphism_group, SubgroupLattice};

fn lattice(name: &str) -> Arc<SubgroupLattice> {
    Arc::new(SubgroupLattice::build(catalog_group(name).unwrap()).unwrap())
}

fn frobenius(name: &str) -> StableRing {
    StableRing::new(Arc::new(FusionSystem::frobenius_at_prime(&lattice(name), 2).unwrap()))
}

fn trivial(name: &str) -> StableRing {
    StableRing::new(Arc::new(FusionSystem::trivial(lattice(name)).unwrap()))
}

fn rows(s: &StableLattice) -> Vec<MarkVector> {
    s.marks.clone()
}

#[test]
fn reeh_tables_for_v4_in_a4_and_c4() {
    let a = frobenius("A4").reeh_basis().unwrap();
    assert_eq!(
        rows(&a),
        vec![MarkVector::from_i64(&[4, 0, 0]), MarkVector::from_i64(&[6, 2, 0]), MarkVector::from_i64(&[1, 1, 1])]
    );
    let c = trivial("C4").reeh_basis().unwrap();
    assert_eq!(
        rows(&c),
        vec![MarkVector::from_i64(&[4, 0, 0]), MarkVector::from_i64(&[2, 2, 0]), MarkVector::from_i64(&[1, 1, 1])]
    );
}

#[test]
fn trivial_reeh_basis_is_transitive_basis() {
    for name in ["V4", "D8", "Q8", "C4xC2"] {
        let r = trivial(name);
        let basis = r.reeh_basis().unwrap().basis;
        let expected: Vec<_> = (0..r.table().class_count()).map(|k| r.table().transitive(k)).collect();
        assert_eq!(basis, expected, "{name}");
    }
}

#[test]
fn reeh_and_hnf_span_the_same_lattice() {
    for r in [frobenius("A4"), frobenius("S4"), frobenius("C2^3:C7"), frobenius("S5")] {
        let stable = r.stable_lattice().unwrap();
        let reeh = r.reeh_basis().unwrap();
        let gens: Vec<Vec<BigInt>> = reeh.basis.iter().map(|b| b.coefficients.clone()).collect();
        assert_eq!(IntLattice::from_generators(r.table().class_count(), &gens), stable.lattice);
        assert_eq!(stable.rank(), r.fusion().class_count());
        for b in &reeh.basis {
            assert!(r.marks_are_f_constant(&r.table().mark(b)));
        }
    }
}

#[test]
fn stable_lattice_is_a_ring() {
    let r = frobenius("S4");
    let s = r.stable_lattice().unwrap();
    for a in &s.basis {
        for b in &s.basis {
            assert!(s.coordinates(&r.table().mul(a, b)).is_some());
        }
    }
}

#[test]
fn stability_checks() {
    let r = frobenius("A4");
    let reeh = r.reeh_basis().unwrap();
    for mode in [StabilityMode::AllSubgroups, StabilityMode::EssentialsOnly] {
        assert!(r.is_stable(&reeh.basis[1], mode).unwrap());
    }
    let l = r.fusion().lattice();
    let m1 = l.maximals()[0];
    let t = r.table().transitive(l.class_of(m1));
    let marks = r.table().mark(&t);
    assert_eq!(marks.values.iter().filter(|v| **v == BigInt::from(2)).count(), 2);
    assert!(!r.is_stable(&t, StabilityMode::AllSubgroups).unwrap());
    assert!(!r.is_stable(&t, StabilityMode::EssentialsOnly).unwrap());
    let triv = trivial("D8");
    assert!(triv.is_stable(&triv.table().transitive(1), StabilityMode::AllSubgroups).unwrap());
}

#[test]
fn unit_ranks() {
    assert_eq!(frobenius("A4").stable_units().unwrap().rank(), 2);
    assert_eq!(frobenius("C2^4:C7").stable_units().unwrap().rank(), 4);
    assert_eq!(frobenius("C2^4:(C7:C3)").stable_units().unwrap().rank(), 4);
    let t = trivial("D8");
    assert!(t.stable_units().unwrap().same_group(t.ambient_units().unwrap()));
}

#[test]
fn unit_routes_agree() {
    for r in [frobenius("A4"), frobenius("S4"), frobenius("C2^3:C7"), frobenius("S5"), trivial("Q8")] {
        let fast = r.stable_units().unwrap();
        let all = r.stable_units_all_kernels().unwrap();
        assert!(fast.same_group(&all));
        let mut elems = fast.elements();
        elems.sort();
        assert_eq!(elems, r.stable_units_by_filter().unwrap());
        let fixed = r.out_fixed_units_of_s().unwrap();
        assert!(fast.is_subgroup_of(&fixed));
        if r.fusion().essentials().unwrap().is_empty() {
            assert!(fast.same_group(&fixed));
        }
    }
}

#[test]
fn out_fixed_units() {
    let r = frobenius("A4");
    let action = r.out_action(r.fusion().lattice().top()).unwrap();
    assert_eq!(action.fixed_units(&[0]).unwrap().rank(), 4);
    assert_eq!(action.fixed_units(&action.full()).unwrap().rank(), 2);
    let r = frobenius("C2^3:C7");
    let action = r.out_action(r.fusion().lattice().top()).unwrap();
    assert_eq!(action.fixed_units(&action.full()).unwrap().rank(), 2);
}

#[test]
fn trace_examples() {
    for r in [frobenius("A4"), frobenius("C2^3:C7"), frobenius("C2^4:C7")] {
        let l = r.fusion().lattice().clone();
        let action = r.out_action(l.top()).unwrap();
        let local = action.local.clone();
        let ll = local.lattice();
        let (gamma, delta) = (action.full(), action.out_s());
        let minus = BitSet::full(ll.class_count());
        assert_eq!(action.trace(&gamma, &delta, &minus).unwrap(), minus);
        for &m in ll.maximals() {
            let v = maximal_unit_signs(ll, m);
            let tr = action.trace(&gamma, &delta, &v).unwrap();
            let ambient_m = local.embedded.to_parent[m];
            let mut expected = BitSet::new(l.class_count());
            for &n in &r.fusion().classes()[r.fusion().class_of(ambient_m)] {
                expected.xor_with(&maximal_unit_signs(&l, n));
            }
            assert_eq!(r.top_local_to_ambient(&local, &tr), expected);
        }
    }
}

#[test]
fn trace_rejects_unfixed_units() {
    let r = frobenius("S4");
    let e = r.fusion().essentials().unwrap()[0];
    let action = r.out_action(e).unwrap();
    let ll = action.local.lattice().clone();
    let out_s = action.out_s();
    let v = ll
        .maximals()
        .iter()
        .map(|&m| maximal_unit_signs(&ll, m))
        .find(|v| !action.is_fixed(&out_s, v))
        .expect("Out_S(V4) moves a maximal subgroup");
    assert!(matches!(action.trace(&action.full(), &out_s, &v), Err(Error::Precondition(_))));
}

#[test]
fn maximal_units() {
    let r = trivial("V4");
    let l = r.fusion().lattice().clone();
    let m1 = l.maximals()[0];
    let v = r.maximal_unit(m1).unwrap();
    let expected = BitSet::from_indices(5, [0, l.class_of(m1)]);
    assert_eq!(v.signs, expected);
    assert_eq!(r.table().mul(&v.preimage, &v.preimage), r.table().one());
    assert!(matches!(r.maximal_unit(0), Err(Error::NotMaximal(0))));
}

#[test]
fn automorphisms_permute_maximal_units() {
    for name in ["V4", "D8", "Q8", "C4xC2", "C2^3"] {
        let r = trivial(name);
        let l = r.fusion().lattice().clone();
        let aut = automorphism_group(l.group()).unwrap();
        for alpha in aut.maps() {
            for &m in l.maximals() {
                let v = r.maximal_unit(m).unwrap();
                let image = BitSet::from_indices(l.group().order(), l.members(m).iter().map(|x| alpha[x] as usize));
                let am = l.id_of(&image).unwrap();
                assert_eq!(act_by_automorphism(&l, alpha, &v.signs), r.maximal_unit(am).unwrap().signs, "{name}");
            }
        }
    }
}

#[test]
fn classify_maximals_examples() {
    let a4 = frobenius("A4").classify_maximals().unwrap();
    assert!(a4.rows.iter().all(|row| !row.unit_stable && !row.strongly_closed));
    assert_eq!(a4.frattini_strongly_closed, None);
    let t = trivial("D8").classify_maximals().unwrap();
    assert!(t.rows.iter().all(|row| row.unit_stable && row.strongly_closed));
    assert_eq!(t.frattini_strongly_closed, Some(true));
    let s4 = frobenius("S4");
    let rep = s4.classify_maximals().unwrap();
    let l = s4.fusion().lattice();
    for row in &rep.rows {
        assert_eq!(row.unit_stable, row.strongly_closed);
        let normal_v4 = l.order_of(row.subgroup) == 4 && s4.fusion().essentials().unwrap().contains(&row.subgroup);
        assert_eq!(row.unit_stable, normal_v4);
    }
}

#[test]
fn abelian_basis_matches_stable_units() {
    for r in [frobenius("A4"), frobenius("C2^3:C7"), frobenius("C2^4:C7"), frobenius("C2^4:(C7:C3)"), trivial("C2^3")] {
        let basis = r.abelian_unit_basis().unwrap();
        assert!(basis.same_group(&r.stable_units().unwrap()));
        assert_eq!(basis.rank(), r.maximal_class_count() + 1);
    }
    assert!(matches!(trivial("D8").abelian_unit_basis(), Err(Error::Precondition(_))));
}
