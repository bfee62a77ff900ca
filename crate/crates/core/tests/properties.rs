//! Randomized and exhaustive properties, each checked against an independent
//! model: explicit G-sets for ring and biset structure, brute force for
//! units, and classical closed forms for Möbius values.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use burnside::acceptance::catalog_fusion_systems;
use burnside::bitset::BitSet;
use burnside::burnside::{congruence_member, ghost_biset, unit_group, BisetMapKind, BurnsideElement, MarkVector, MarksTable};
use burnside::frobenius::FrobeniusContext;
use burnside::group::catalog::catalog_group;
use burnside::group::{FiniteGroup, SubgroupLattice};
use burnside::gset::GSet;
use burnside::stable::{StabilityMode, StableRing};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::sample::{select, Index};

fn lattice(name: &str) -> Arc<SubgroupLattice> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<SubgroupLattice>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(l) = cache.lock().unwrap().get(name) {
        return l.clone();
    }
    let l = Arc::new(SubgroupLattice::build(catalog_group(name).unwrap()).unwrap());
    cache.lock().unwrap().insert(name.to_string(), l.clone());
    l
}

fn rings() -> &'static [(&'static str, StableRing)] {
    static RINGS: OnceLock<Vec<(&'static str, StableRing)>> = OnceLock::new();
    RINGS.get_or_init(|| catalog_fusion_systems().unwrap())
}

const SMALL: &[&str] = &["C2", "C3", "C4", "V4", "S3", "C6", "D8", "Q8", "C4xC2", "C2^3", "D10", "A4", "S4"];

fn element(coeffs: &[i64], classes: usize) -> BurnsideElement {
    BurnsideElement::from_i64(&coeffs[..classes])
}

/// `sum_K c_K [G/K]` as an explicit G-set, for non-negative coefficients.
fn gset(l: &SubgroupLattice, b: &BurnsideElement) -> GSet {
    let g = l.group();
    let mut x = GSet::empty(g);
    for (k, c) in b.coefficients.iter().enumerate() {
        let cosets = GSet::cosets(g, l.members(l.class_rep(k)));
        for _ in 0..u32::try_from(c).unwrap() {
            x = x.disjoint_union(&cosets);
        }
    }
    x
}

fn usize_marks(m: &MarkVector) -> Vec<usize> {
    m.values.iter().map(|v| usize::try_from(v).unwrap()).collect()
}

/// `G ×_H Y`: points `(i, y)` for a left transversal `t_i` of `H`.
fn induce(g: &FiniteGroup, h: &BitSet, from_parent: &[usize], y: &GSet) -> GSet {
    let mut reps = Vec::new();
    let mut covered = BitSet::new(g.order());
    for x in 0..g.order() {
        if !covered.contains(x) {
            reps.push(x);
            for k in h.iter() {
                covered.insert(g.mul(x, k));
            }
        }
    }
    let n = y.len();
    let coset = |x: usize| reps.iter().position(|&t| h.contains(g.mul(g.inv(t), x))).unwrap();
    GSet::from_action(g, reps.len() * n, |a, p| {
        let (i, pt) = (p / n, p % n);
        let gt = g.mul(a, reps[i]);
        let j = coset(gt);
        let k = g.mul(g.inv(reps[j]), gt);
        j * n + y.act(from_parent[k], pt)
    })
}

fn config() -> ProptestConfig {
    ProptestConfig { cases: 48, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn product_of_gsets_matches_ring_product(
        name in select(SMALL),
        a in prop::collection::vec(0i64..=2, 16),
        b in prop::collection::vec(0i64..=2, 16),
    ) {
        let l = lattice(name);
        let t = MarksTable::new(l.clone());
        let c = t.class_count();
        let (a, b) = (element(&a, c), element(&b, c));
        let (x, y) = (gset(&l, &a), gset(&l, &b));
        prop_assert_eq!(usize_marks(&t.mark(&a)), x.marks(&l));
        let decomposed: Vec<i64> = x.product(&y).decompose(&l).iter().map(|&n| n as i64).collect();
        prop_assert_eq!(t.mul(&a, &b), BurnsideElement::from_i64(&decomposed));
    }

    #[test]
    fn mark_is_injective(name in select(SMALL), a in prop::collection::vec(-9i64..=9, 16)) {
        let t = MarksTable::new(lattice(name));
        let a = element(&a, t.class_count());
        prop_assert_eq!(t.from_marks(&t.mark(&a)).unwrap(), a);
    }

    #[test]
    fn congruences_decide_the_image(
        name in select(SMALL),
        a in prop::collection::vec(-5i64..=5, 16),
        at in any::<Index>(),
        bump in 0i64..=12,
    ) {
        let l = lattice(name);
        let t = MarksTable::new(l.clone());
        let c = t.class_count();
        let mut v = t.mark(&element(&a, c));
        v.values[at.index(c)] += bump;
        prop_assert_eq!(congruence_member(&l, &v), t.from_marks(&v).is_ok());
    }

    #[test]
    fn restriction_and_induction_match_gsets(
        name in select(SMALL),
        sub in any::<Index>(),
        a in prop::collection::vec(0i64..=2, 16),
    ) {
        let l = lattice(name);
        let h = sub.index(l.len());
        let emb = l.embed(h).unwrap();
        let t = MarksTable::new(l.clone());
        let a = element(&a, t.class_count());
        let x = gset(&l, &a);
        let res = ghost_biset(BisetMapKind::Res(&emb), &t.mark(&a)).unwrap();
        prop_assert_eq!(usize_marks(&res), x.restrict(&emb.embedding).marks(&emb.lattice));

        let th = MarksTable::new(emb.lattice.clone());
        let y_elem = th.from_marks(&res).unwrap();
        let y = gset(&emb.lattice, &y_elem);
        let ind = ghost_biset(BisetMapKind::Ind(&emb), &res).unwrap();
        let induced = induce(l.group(), l.members(h), &emb.from_parent, &y);
        prop_assert_eq!(usize_marks(&ind), induced.marks(&l));
    }

    #[test]
    fn inflation_and_deflation_match_gsets(
        name in select(SMALL),
        pick in any::<Index>(),
        a in prop::collection::vec(0i64..=2, 16),
    ) {
        let l = lattice(name);
        let normals: Vec<usize> = (0..l.len()).filter(|&n| l.is_normal(n)).collect();
        let q = l.quotient(normals[pick.index(normals.len())]).unwrap();
        let t = MarksTable::new(l.clone());
        let tq = MarksTable::new(q.lattice.clone());

        let y_elem = element(&a, tq.class_count());
        let y = gset(&q.lattice, &y_elem);
        let inf = ghost_biset(BisetMapKind::Inf(&q), &tq.mark(&y_elem)).unwrap();
        prop_assert_eq!(usize_marks(&inf), y.inflate(&q.projection).marks(&l));

        let x_elem = element(&a, t.class_count());
        let x = gset(&l, &x_elem);
        let def = ghost_biset(BisetMapKind::Def(&q), &t.mark(&x_elem)).unwrap();
        let (fixed, _) = x.fixed_subset(l.members(q.normal));
        let lift: Vec<usize> = (0..q.lattice.group().order())
            .map(|c| q.projection.iter().position(|&p| p == c).unwrap())
            .collect();
        let over_quotient = GSet::from_action(q.lattice.group(), fixed.len(), |c, p| fixed.act(lift[c], p));
        prop_assert_eq!(usize_marks(&def), over_quotient.marks(&q.lattice));
    }

    #[test]
    fn tensor_and_induction_agree_on_single_double_cosets(
        name in select(SMALL),
        sub in any::<Index>(),
        a in prop::collection::vec(-3i64..=3, 16),
    ) {
        let l = lattice(name);
        let g = l.group();
        let h = sub.index(l.len());
        let emb = l.embed(h).unwrap();
        let th = MarksTable::new(emb.lattice.clone());
        let v = th.mark(&element(&a, th.class_count()));
        let ind = ghost_biset(BisetMapKind::Ind(&emb), &v).unwrap();
        let ten = ghost_biset(BisetMapKind::Ten(&emb), &v).unwrap();
        for (k, class) in l.classes().iter().enumerate() {
            let s = l.members(class.representative);
            let reps = g.double_coset_reps(s, l.members(h));
            let inside = |x: usize| g.conjugate_set(g.inv(x), s).is_subset(l.members(h));
            if reps.len() == 1 && inside(reps[0]) {
                prop_assert_eq!(&ind.values[k], &ten.values[k]);
            }
        }
    }

    #[test]
    fn units_form_an_elementary_abelian_group(name in select(SMALL), i in any::<Index>(), j in any::<Index>()) {
        let t = MarksTable::new(lattice(name));
        let units = unit_group(&t).unwrap();
        let elements = units.elements();
        let (u, v) = (&elements[i.index(elements.len())], &elements[j.index(elements.len())]);
        let mut uv = u.clone();
        uv.xor_with(v);
        prop_assert!(units.contains(&uv));
        let pre = t.from_marks(&MarkVector::from_signs(&uv)).unwrap();
        let square = t.mul(&pre, &pre);
        prop_assert_eq!(square, t.one());
    }

    #[test]
    fn stability_modes_agree(sys in any::<Index>(), a in prop::collection::vec(-3i64..=3, 80), reeh in any::<bool>()) {
        let (_, ring) = &rings()[sys.index(rings().len())];
        let t = ring.table();
        let b = if reeh {
            let basis = ring.reeh_basis().unwrap().basis;
            let mut out = t.zero();
            for (c, e) in a.iter().zip(&basis) {
                for (acc, y) in out.coefficients.iter_mut().zip(&e.coefficients) {
                    *acc += BigInt::from(*c) * y;
                }
            }
            out
        } else {
            element(&a, t.class_count())
        };
        let m = t.mark(&b);
        let all = ring.is_stable_marks(&m, StabilityMode::AllSubgroups).unwrap();
        prop_assert_eq!(all, ring.is_stable_marks(&m, StabilityMode::EssentialsOnly).unwrap());
        prop_assert_eq!(all, ring.marks_are_f_constant(&m));
        if reeh {
            prop_assert!(all);
        }
    }

    #[test]
    fn trace_is_linear_and_independent_of_representatives(
        sys in any::<Index>(),
        which in any::<Index>(),
        i in any::<Index>(),
        j in any::<Index>(),
        picks in prop::collection::vec(any::<Index>(), 64),
    ) {
        let two: Vec<_> = rings().iter().filter(|(_, r)| r.fusion().prime() == 2).collect();
        let (_, ring) = two[sys.index(two.len())];
        let mut candidates = vec![ring.fusion().lattice().top()];
        candidates.extend(ring.fusion().essentials().unwrap());
        let action = ring.out_action(candidates[which.index(candidates.len())]).unwrap();
        let (gamma, delta) = (action.full(), action.out_s());
        let fixed = action.fixed_units(&delta).unwrap().elements();
        let (u, v) = (&fixed[i.index(fixed.len())], &fixed[j.index(fixed.len())]);
        let mut uv = u.clone();
        uv.xor_with(v);
        let mut product = action.trace(&gamma, &delta, u).unwrap();
        product.xor_with(&action.trace(&gamma, &delta, v).unwrap());
        prop_assert_eq!(action.trace(&gamma, &delta, &uv).unwrap(), product);

        let out = &action.local.out_group;
        let reps: Vec<usize> = action
            .transversal(&gamma, &delta)
            .iter()
            .zip(&picks)
            .map(|(&g, pick)| out.mul(g, delta[pick.index(delta.len())]))
            .collect();
        prop_assert_eq!(action.trace_with(&reps, &gamma, &delta, u).unwrap(), action.trace(&gamma, &delta, u).unwrap());
    }

    #[test]
    fn star_products_satisfy_the_congruences(
        name in select(&["A4", "S4", "C2^3:C7", "S5"][..]),
        a in prop::collection::vec(-2i64..=2, 32),
        b in prop::collection::vec(-2i64..=2, 16),
    ) {
        let ctx = FrobeniusContext::new(lattice(name), 2).unwrap();
        let a = element(&a, ctx.group_table().class_count());
        let reeh = ctx.ring().reeh_basis().unwrap().basis;
        let mut stable = ctx.s_table().zero();
        for (c, e) in b.iter().zip(&reeh) {
            for (acc, y) in stable.coefficients.iter_mut().zip(&e.coefficients) {
                *acc += BigInt::from(*c) * y;
            }
        }
        let marks = ctx.star_marks(&a, &stable).unwrap();
        prop_assert!(congruence_member(ctx.group_lattice(), &marks));
        let t = ctx.transfer(&stable).unwrap();
        prop_assert_eq!(ctx.restrict(&t).unwrap(), stable);
    }
}

#[test]
fn moebius_sums_vanish_on_every_proper_interval() {
    for name in ["C2", "C4", "V4", "S3", "C6", "D8", "Q8", "C2^3", "C4xC2", "D10", "A4", "C2^4", "C7:C3", "S4", "C2^3:C7"] {
        let l = lattice(name);
        for h in 0..l.len() {
            let row = l.mobius_row(h);
            for q in l.above(h).iter().filter(|&q| q != h) {
                let sum: i64 = l.above(h).intersect(l.below(q)).iter().map(|i| row[i]).sum();
                assert_eq!(sum, 0, "{name}: ({h}, {q})");
            }
        }
    }
}

#[test]
fn moebius_matches_classical_values() {
    // Number-theoretic mu for cyclic groups; (-1)^k 2^(k(k-1)/2) for C2^k;
    // 4 for A4.
    for (name, expected) in [("C2", -1), ("C4", 0), ("C6", 1), ("C8", 0), ("V4", 2), ("C2^3", -8), ("C2^4", 64), ("A4", 4)] {
        let l = lattice(name);
        assert_eq!(l.moebius(l.trivial(), l.top()).unwrap(), expected, "{name}");
    }
}

#[test]
fn lattices_do_not_depend_on_presentation() {
    fn sizes(name: &str) -> Vec<usize> {
        let l = lattice(name);
        let mut v: Vec<usize> = l.classes().iter().map(|c| c.members.len()).collect();
        v.sort_unstable();
        v
    }
    for (a, b) in [("S3", "D6"), ("V4", "C2^2"), ("C6", "C3xC2"), ("V4", "C2xC2"), ("C4xC2", "C2xC4")] {
        assert_eq!(sizes(a), sizes(b), "{a} vs {b}");
        assert_eq!(lattice(a).len(), lattice(b).len());
    }
}

#[test]
fn class_lengths_times_normalizer_orders() {
    for name in ["S4", "A5", "S5", "C2^4:(C7:C3)", "D16", "C4xC4"] {
        let l = lattice(name);
        for c in l.classes() {
            assert_eq!(c.members.len() * l.order_of(l.normalizer(c.representative)), l.group().order(), "{name}");
        }
    }
}
