use super::*;
use crate::group::catalog::catalog_group;
use crate::stable::StabilityMode;

fn ctx(name: &str) -> FrobeniusContext {
    FrobeniusContext::new(Arc::new(SubgroupLattice::build(catalog_group(name).unwrap()).unwrap()), 2).unwrap()
}

#[test]
fn restriction_image_equals_stable_lattice() {
    for name in ["A4", "S4", "C2^3:C7", "S5", "A5"] {
        let c = ctx(name);
        let image = c.restriction_image().unwrap();
        assert_eq!(image.rank(), c.fusion().class_count(), "{name}");
    }
    let c = ctx("D8");
    assert_eq!(c.restriction_image().unwrap().lattice, IntLattice::full(c.s_table().class_count()));
}

#[test]
fn star_product_examples() {
    let c = ctx("A4");
    let reeh = c.ring().reeh_basis().unwrap();
    let alpha_m = &reeh.basis[1];
    assert_eq!(c.star_marks(&c.group_table().one(), alpha_m).unwrap(), MarkVector::from_i64(&[6, 2, 6, 0, 0]));
    assert_eq!(c.transfer(alpha_m).unwrap(), BurnsideElement::from_i64(&[-2, 1, 6, 0, 0]));
    assert_eq!(c.star_marks(&c.group_table().one(), &reeh.basis[0]).unwrap(), MarkVector::from_i64(&[4, 0, 4, 0, 0]));
    assert_eq!(c.transfer(&reeh.basis[2]).unwrap(), c.group_table().one());
    for k in 0..c.group_table().class_count() {
        let a = c.group_table().transitive(k);
        assert_eq!(c.star(&a, &c.s_table().one()).unwrap(), a);
    }
    let l = c.fusion().lattice();
    let t = c.s_table().transitive(l.class_of(l.maximals()[0]));
    assert!(matches!(c.transfer(&t), Err(Error::StabilityRequired)));
}

#[test]
fn transfer_is_a_section_of_restriction() {
    for name in ["A4", "S4", "C2^3:C7", "S5"] {
        let c = ctx(name);
        let reeh = c.ring().reeh_basis().unwrap();
        let images: Vec<_> = reeh.basis.iter().map(|b| c.transfer(b).unwrap()).collect();
        for (b, t) in reeh.basis.iter().zip(&images) {
            assert_eq!(&c.restrict(t).unwrap(), b, "{name}");
        }
        for i in 0..images.len() {
            for j in 0..i {
                assert_ne!(images[i], images[j]);
            }
            for j in 0..images.len() {
                let prod = c.s_table().mul(&reeh.basis[i], &reeh.basis[j]);
                let lhs = c.transfer(&prod).unwrap();
                assert_eq!(lhs, c.group_table().mul(&images[i], &images[j]), "{name}");
            }
        }
    }
}

#[test]
fn star_marks_need_no_choice() {
    for name in ["S4", "S5", "C2^3:C7"] {
        let c = ctx(name);
        let s = c.fusion().lattice();
        for b in c.ring().reeh_basis().unwrap().basis {
            let m = c.s_table().mark(&b);
            for k in 0..c.group_table().class_count() {
                let values: std::collections::BTreeSet<_> =
                    c.sylow_choices(k).into_iter().map(|p| m.values[s.class_of(p)].clone()).collect();
                assert_eq!(values.len(), 1, "{name}");
            }
        }
    }
}

#[test]
fn bouc_examples() {
    for (name, rank) in [("C2^3:C7", 2), ("C6", 2), ("A4", 2)] {
        let r = ctx(name).bouc_check().unwrap();
        assert!(r.holds(), "{name}: {r:?}");
        assert_eq!((r.group_unit_rank, r.fixed_unit_rank), (rank, rank), "{name}");
    }
    let r = ctx("D8").bouc_check().unwrap();
    assert!(r.holds());
    assert_eq!(r.group_unit_rank, r.fixed_unit_rank);
    assert!(matches!(ctx("S4").bouc_check(), Err(Error::NotNormal(_))));
}

#[test]
fn normalizer_reports() {
    let a4 = ctx("A4").normalizer_diagram().unwrap();
    assert!(a4.normalizer_restriction_onto && a4.normalizer_units_agree && a4.controls_fusion);
    assert_eq!(a4.normalizer_order, 12);
    let a5 = ctx("A5").normalizer_diagram().unwrap();
    assert!(a5.normalizer_restriction_onto && a5.normalizer_units_agree && a5.controls_fusion);
    assert_eq!(a5.normalizer_order, 12);
    let s4 = ctx("S4").normalizer_diagram().unwrap();
    assert_eq!(s4.normalizer_order, 8);
    assert_eq!(s4.normalizer_restriction_onto, s4.normalizer_units_agree);
}

#[test]
fn witnesses() {
    let c = ctx("S5");
    let d8_1 = c.s_table().transitive(0);
    assert!(c.ring().is_stable(&d8_1, StabilityMode::AllSubgroups).unwrap());
    assert!(c.transfer(&d8_1).is_ok());
    assert_eq!(c.genuine_witness(&d8_1).unwrap(), None);

    let c = ctx("A4");
    let reeh = c.ring().reeh_basis().unwrap();
    let top = c.group_table().class_count() - 1;
    assert_eq!(c.genuine_witness(&reeh.basis[2]).unwrap(), Some(c.group_table().transitive(top)));
    assert_eq!(c.genuine_witness(&reeh.basis[1]).unwrap(), Some(c.group_table().transitive(1)));
}
