//! The acceptance suite: fourteen end-to-end checks over the catalog.
//!
//! Each criterion returns a deterministic detail string; timing is reported
//! separately so that summaries are byte-identical across runs.

use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bitset::BitSet;
use crate::burnside::{congruence_member, unit_group, BurnsideElement, MarkVector, MarksTable, UnitGroup};
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusContext;
use crate::fusion::{load_fusion, FusionDescriptor, FusionSystem, Origin, StabilityMode};
use crate::group::catalog::catalog_group;
use crate::group::{automorphism_group, DEFAULT_ORDER_CAP, SubgroupLattice};
use crate::linalg::IntLattice;
use crate::stable::{automorphism_class_permutation, StableRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Examples,
    Properties,
    All,
}

impl Suite {
    pub fn parse(s: &str) -> Option<Suite> {
        match s {
            "paper-examples" => Some(Suite::Examples),
            "properties" => Some(Suite::Properties),
            "all" => Some(Suite::All),
            _ => None,
        }
    }

    pub fn criteria(self) -> Vec<usize> {
        match self {
            Suite::Examples => vec![1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13],
            Suite::Properties => vec![7, 14],
            Suite::All => (1..=14).collect(),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    pub seed: u64,
    /// Replace the marks table of `V4` by a corrupted one wherever it is used.
    pub tamper: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub budget: Option<Duration>,
}

impl Outcome {
    pub fn line(&self) -> String {
        format!("{} {:02} {} {}", if self.passed { "PASS" } else { "FAIL" }, self.id, self.name, self.detail)
    }
}

struct Criterion {
    name: &'static str,
    budget: Option<u64>,
    run: fn(&Options) -> Result<Check>,
}

/// `Err` carries the reason for failure.
type Check = std::result::Result<String, String>;

const CRITERIA: [Criterion; 14] = [
    Criterion { name: "reeh-tables", budget: Some(1), run: reeh_tables },
    Criterion { name: "odd-dihedral", budget: Some(1), run: odd_dihedral },
    Criterion { name: "rank3-pair", budget: Some(10), run: rank3_pair },
    Criterion { name: "rank4-pair", budget: Some(60), run: rank4_pair },
    Criterion { name: "restriction-image", budget: Some(120), run: restriction_image },
    Criterion { name: "non-realizable", budget: Some(30), run: non_realizable },
    Criterion { name: "stability-modes", budget: Some(60), run: stability_modes },
    Criterion { name: "stable-units", budget: None, run: stable_units },
    Criterion { name: "trace", budget: None, run: trace },
    Criterion { name: "maximal-units", budget: None, run: maximal_units },
    Criterion { name: "abelian-units", budget: None, run: abelian_units },
    Criterion { name: "normal-sylow-units", budget: None, run: normal_sylow_units },
    Criterion { name: "odd-order-units", budget: None, run: odd_order_units },
    Criterion { name: "congruences", budget: None, run: congruences },
];

pub fn criterion_name(id: usize) -> Option<&'static str> {
    CRITERIA.get(id.wrapping_sub(1)).map(|c| c.name)
}

pub fn run_criterion(id: usize, opts: &Options) -> Outcome {
    let c = &CRITERIA[id - 1];
    let start = Instant::now();
    let result = (c.run)(opts);
    let elapsed = start.elapsed();
    let budget = c.budget.map(Duration::from_secs);
    let (mut passed, mut detail) = match result {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(e) => (false, format!("error: {e}")),
    };
    if passed && budget.is_some_and(|b| elapsed > b) {
        passed = false;
        detail = format!("{detail}; over the {}s budget", budget.unwrap().as_secs());
    }
    Outcome { id, name: c.name, passed, detail, elapsed, budget }
}

pub fn run_suite(suite: Suite, opts: &Options) -> Vec<Outcome> {
    suite.criteria().into_iter().map(|id| run_criterion(id, opts)).collect()
}

/// Fusion systems exercised by the property criteria, as descriptors.
pub const FUSION_CATALOG: &[&str] = &[
    "frobenius:A4:2",
    "frobenius:S4:2",
    "frobenius:A5:2",
    "frobenius:S5:2",
    "frobenius:S3:2",
    "frobenius:C6:2",
    "frobenius:C2^3:C7:2",
    "frobenius:C2^3:(C7:C3):2",
    "frobenius:C2^4:C7:2",
    "frobenius:C2^4:(C7:C3):2",
    "frobenius:S3:3",
    "frobenius:A4:3",
    "frobenius:D10:5",
    "frobenius:C7:C3:7",
    "trivial:C2",
    "trivial:C4",
    "trivial:V4",
    "trivial:C8",
    "trivial:C4xC2",
    "trivial:C2^3",
    "trivial:D8",
    "trivial:Q8",
    "trivial:C2^4",
];

pub fn catalog_fusion_systems() -> Result<Vec<(&'static str, StableRing)>> {
    FUSION_CATALOG
        .iter()
        .map(|&d| {
            let f = load_fusion(&FusionDescriptor::parse(d)?, DEFAULT_ORDER_CAP)?;
            Ok((d, StableRing::new(Arc::new(f))))
        })
        .collect()
}

fn catalog_2_systems() -> Result<Vec<(&'static str, StableRing)>> {
    Ok(catalog_fusion_systems()?.into_iter().filter(|(_, r)| r.fusion().prime() == 2).collect())
}

fn lattice(name: &str) -> Result<Arc<SubgroupLattice>> {
    Ok(Arc::new(SubgroupLattice::build(catalog_group(name)?)?))
}

/// The marks table of `lattice`; for `V4` under tampering, the mark of
/// `[V4/1]` at the trivial subgroup is corrupted.
fn table_for(lattice: &Arc<SubgroupLattice>, opts: &Options) -> MarksTable {
    let table = MarksTable::new(lattice.clone());
    let is_v4 = lattice.group().order() == 4 && lattice.class_count() == 5;
    if !opts.tamper || !is_v4 {
        return table;
    }
    let mut matrix = table.matrix().to_vec();
    matrix[0][0] += 1;
    MarksTable::with_matrix(lattice.clone(), matrix)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rows(marks: &[MarkVector]) -> Vec<Vec<BigInt>> {
    marks.iter().map(|m| m.values.clone()).collect()
}

fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

fn add(a: &BurnsideElement, b: &BurnsideElement) -> BurnsideElement {
    BurnsideElement { coefficients: a.coefficients.iter().zip(&b.coefficients).map(|(x, y)| x + y).collect() }
}

fn combine(coeffs: &[BigInt], basis: &[BurnsideElement]) -> BurnsideElement {
    let mut out = BurnsideElement::zero(basis[0].len());
    for (c, b) in coeffs.iter().zip(basis) {
        for (acc, y) in out.coefficients.iter_mut().zip(&b.coefficients) {
            *acc += c * y;
        }
    }
    out
}

fn reeh_tables(opts: &Options) -> Result<Check> {
    let f = FusionSystem::frobenius_at_prime(&lattice("A4")?, 2)?;
    let s = f.lattice().clone();
    let a4 = StableRing::with_table(Arc::new(f), table_for(&s, opts));
    let c4 = StableRing::new(Arc::new(FusionSystem::trivial(lattice("C4")?)?));
    let alpha = a4.reeh_basis()?;
    let beta = c4.reeh_basis()?;
    let check = || -> std::result::Result<(), String> {
        ensure(rows(&alpha.marks) == ints(&[&[4, 0, 0], &[6, 2, 0], &[1, 1, 1]]), || {
            format!("A4 table {:?}", rows(&alpha.marks))
        })?;
        ensure(rows(&beta.marks) == ints(&[&[4, 0, 0], &[2, 2, 0], &[1, 1, 1]]), || {
            format!("C4 table {:?}", rows(&beta.marks))
        })?;
        // alpha_1 -> beta_1, alpha_M -> beta_N + beta_1, alpha_S -> beta_T
        let b = &beta.basis;
        let image = [b[0].clone(), add(&b[1], &b[0]), b[2].clone()];
        let phi = |x: &BurnsideElement| -> std::result::Result<BurnsideElement, String> {
            let coords = alpha.coordinates(x).ok_or("product left B(F)")?;
            Ok(combine(&coords, &image))
        };
        for i in 0..3 {
            for j in i..3 {
                let lhs = phi(&a4.table().mul(&alpha.basis[i], &alpha.basis[j]))?;
                let rhs = c4.table().mul(&image[i], &image[j]);
                ensure(lhs == rhs, || format!("product ({i},{j}) not preserved"))?;
            }
        }
        Ok(())
    };
    Ok(check().map(|()| "both tables exact; 6 products preserved".into()))
}

fn odd_dihedral(_: &Options) -> Result<Check> {
    let mut parts = Vec::new();
    for (name, p) in [("D6", 3), ("D10", 5)] {
        let g = lattice(name)?;
        let frob = FusionSystem::frobenius_at_prime(&g, p)?;
        let trivial = FusionSystem::trivial(frob.lattice().clone())?;
        let (fa, ta) = (frob.automorphisms(frob.lattice().top()).len(), trivial.automorphisms(trivial.lattice().top()).len());
        let full = IntLattice::full(frob.lattice().class_count());
        let lf = StableRing::new(Arc::new(frob)).stable_lattice()?.lattice;
        let lt = StableRing::new(Arc::new(trivial)).stable_lattice()?.lattice;
        if lf != full || lt != full {
            return Ok(Err(format!("{name}: stable lattice is not all of B(C{p})")));
        }
        if (fa, ta) != (2, 1) {
            return Ok(Err(format!("{name}: |Aut(S)| = {fa} and {ta}, expected 2 and 1")));
        }
        parts.push(format!("p={p}: B(F)=B(C{p}), |Aut|=2 vs 1"));
    }
    Ok(Ok(parts.join("; ")))
}

/// `F_S(K)` and `F_S(G)` on the same lattice of `S`, where `K` is the unique
/// index-3 subgroup of `G` containing `S`.
fn nested_pair(small: &str, big: &str) -> Result<(FusionSystem, FusionSystem)> {
    let g = lattice(big)?;
    let f2 = FusionSystem::frobenius_at_prime(&g, 2)?;
    let standalone = FusionSystem::frobenius_at_prime(&lattice(small)?, 2)?;
    let Origin::Frobenius(emb) = f2.origin() else { unreachable!("Frobenius origin") };
    let s = emb.parent_id;
    let target = g.order_of(g.top()) / 3;
    let ks: Vec<usize> = g.above(s).iter().filter(|&k| g.order_of(k) == target).collect();
    let [k] = ks[..] else {
        return Err(Error::Invariant(format!("{} subgroups of order {target} above S in {big}", ks.len())));
    };
    let f1 = f2.frobenius_subsystem(k)?;
    if f1.class_count() != standalone.class_count() {
        return Err(Error::Invariant(format!("F_S({small}) has inconsistent class counts")));
    }
    Ok((f1, f2))
}

fn rank3_pair(_: &Options) -> Result<Check> {
    let (f1, f2) = nested_pair("C2^3:C7", "C2^3:(C7:C3)")?;
    let top = f1.lattice().top();
    let (a1, a2) = (f1.automorphisms(top).len(), f2.automorphisms(top).len());
    let (c1, c2) = (f1.class_count(), f2.class_count());
    let l1 = StableRing::new(Arc::new(f1)).stable_lattice()?.lattice;
    let l2 = StableRing::new(Arc::new(f2)).stable_lattice()?.lattice;
    Ok((|| {
        ensure(c1 == 4 && c2 == 4, || format!("class counts {c1}, {c2}"))?;
        ensure(l1 == l2, || "stable lattices differ".into())?;
        ensure(a1 == 7 && a2 == 21, || format!("|Aut(S)| = {a1}, {a2}"))?;
        Ok("4 classes each; B(F1)=B(F2); |Aut|=7,21".into())
    })())
}

fn rank4_pair(_: &Options) -> Result<Check> {
    let (f1, f2) = nested_pair("C2^4:C7", "C2^4:(C7:C3)")?;
    let r1 = StableRing::new(Arc::new(f1));
    let r2 = StableRing::new(Arc::new(f2));
    let (c1, c2) = (r1.fusion().class_count(), r2.fusion().class_count());
    let (m1, m2) = (r1.maximal_class_count(), r2.maximal_class_count());
    let (l1, l2) = (r1.stable_lattice()?.lattice, r2.stable_lattice()?.lattice);
    let (u1, u2) = (r1.stable_units()?.rank(), r2.stable_units()?.rank());
    Ok((|| {
        ensure(c1 == 13 && c2 == 11, || format!("class counts {c1}, {c2}"))?;
        ensure(m1 == 3 && m2 == 3, || format!("maximal classes {m1}, {m2}"))?;
        ensure(l1.rank() == c1 && l2.rank() == c2, || "lattice rank differs from class count".into())?;
        ensure(l1.contains(&l2) && l1 != l2, || "B(F2) is not strictly inside B(F1)".into())?;
        ensure(u1 == 4 && u2 == 4, || format!("unit ranks {u1}, {u2}"))?;
        Ok("13 vs 11 classes; 3 maximal classes each; B(F2) < B(F1); unit rank 4 each".into())
    })())
}

fn restriction_image(_: &Options) -> Result<Check> {
    let mut parts = Vec::new();
    for name in ["A4", "S4", "C2^3:C7", "S5"] {
        let ctx = FrobeniusContext::new(lattice(name)?, 2)?;
        match ctx.restriction_image() {
            Ok(l) => parts.push(format!("{name}={}", l.rank())),
            Err(Error::Invariant(m)) => return Ok(Err(format!("{name}: {m}"))),
            Err(e) => return Err(e),
        }
    }
    Ok(Ok(format!("image = B(F) with ranks {}", parts.join(" "))))
}

fn non_realizable(_: &Options) -> Result<Check> {
    let ctx = FrobeniusContext::new(lattice("S5")?, 2)?;
    let b = ctx.s_table().transitive(0);
    let ring = ctx.ring();
    let stable = ring.is_stable(&b, StabilityMode::AllSubgroups)? && ring.is_stable(&b, StabilityMode::EssentialsOnly)?;
    if !stable {
        return Ok(Err("[D8/1] is not stable".into()));
    }
    let t = ctx.transfer(&b)?;
    if ctx.restrict(&t)? != b {
        return Ok(Err("transfer is not a preimage".into()));
    }
    Ok(match ctx.genuine_witness(&b)? {
        None => Ok("[D8/1] stable, transfer exists, no S5-set restricts to it".into()),
        Some(w) => Err(format!("unexpected witness {:?}", w.coefficients)),
    })
}

fn rng_for(opts: &Options, stream: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(opts.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(stream as u64))
}

fn random_element(rng: &mut ChaCha8Rng, classes: usize, bound: i64) -> BurnsideElement {
    BurnsideElement { coefficients: (0..classes).map(|_| BigInt::from(rng.gen_range(-bound..=bound))).collect() }
}

fn stability_modes(opts: &Options) -> Result<Check> {
    let mut checked = 0usize;
    let mut stable = 0usize;
    for (i, (desc, ring)) in catalog_fusion_systems()?.iter().enumerate() {
        let table = ring.table();
        let c = table.class_count();
        let reeh = ring.reeh_basis()?.basis;
        let mut elements: Vec<MarkVector> = reeh.iter().map(|b| table.mark(b)).collect();
        if ring.fusion().prime() == 2 {
            for &m in ring.fusion().lattice().maximals() {
                elements.push(ring.maximal_unit(m)?.marks());
            }
        }
        let mut rng = rng_for(opts, i);
        for k in 0..200 {
            let b = if k % 2 == 0 {
                random_element(&mut rng, c, 3)
            } else {
                let coeffs: Vec<BigInt> = (0..reeh.len()).map(|_| BigInt::from(rng.gen_range(-3..=3))).collect();
                combine(&coeffs, &reeh)
            };
            elements.push(table.mark(&b));
        }
        for m in &elements {
            let all = ring.is_stable_marks(m, StabilityMode::AllSubgroups)?;
            let ess = ring.is_stable_marks(m, StabilityMode::EssentialsOnly)?;
            let direct = ring.marks_are_f_constant(m);
            if all != ess || all != direct {
                return Ok(Err(format!("{desc}: modes disagree ({all}, {ess}, direct {direct})")));
            }
            stable += usize::from(all);
            checked += 1;
        }
    }
    Ok(Ok(format!("{} systems, {checked} elements, {stable} stable", FUSION_CATALOG.len())))
}

fn stable_units(_: &Options) -> Result<Check> {
    let mut n = 0;
    for (desc, ring) in catalog_fusion_systems()? {
        let units = ring.stable_units()?;
        let mut by_definition: Vec<BitSet> = ring
            .ambient_units()?
            .elements()
            .into_iter()
            .filter(|s| ring.marks_are_f_constant(&MarkVector::from_signs(s)))
            .collect();
        by_definition.sort();
        let mut listed = units.elements();
        listed.sort();
        if listed != by_definition || ring.stable_units_by_filter()? != by_definition {
            return Ok(Err(format!("{desc}: stable units differ from the exhaustive filter")));
        }
        if ring.fusion().essentials()?.is_empty() {
            if !units.same_group(&ring.out_fixed_units_of_s()?) {
                return Ok(Err(format!("{desc}: stable units differ from Out_F(S)-fixed units")));
            }
            n += 1;
        }
    }
    Ok(Ok(format!("{} systems match the filter; {n} without essentials match the fixed units", FUSION_CATALOG.len())))
}

fn trace(_: &Options) -> Result<Check> {
    let mut n = 0;
    for (desc, ring) in catalog_2_systems()? {
        let mut subgroups = vec![ring.fusion().lattice().top()];
        subgroups.extend(ring.fusion().essentials()?);
        for p in subgroups {
            let action = ring.out_action(p)?;
            if !action.local.fully_automized {
                continue;
            }
            let (gamma, delta) = (action.full(), action.out_s());
            let fixed = action.fixed_units(&gamma)?;
            for u in fixed.elements() {
                if action.trace(&gamma, &delta, &u)? != u {
                    return Ok(Err(format!("{desc}: trace moves a fixed unit")));
                }
            }
            let images = action
                .fixed_units(&delta)?
                .basis()
                .iter()
                .map(|u| action.trace(&gamma, &delta, &u.signs))
                .collect::<Result<Vec<_>>>()?;
            if !UnitGroup::from_signs(&action.table, images)?.same_group(&fixed) {
                return Ok(Err(format!("{desc}: trace image differs from the fixed units")));
            }
            n += 1;
        }
    }
    Ok(Ok(format!("{n} subgroups: trace is the identity on fixed units and onto them")))
}

pub const SMALL_2_GROUPS: &[&str] =
    &["C2", "C4", "V4", "C8", "C4xC2", "C2^3", "D8", "Q8", "C16", "C8xC2", "C4xC4", "C2^4", "D16"];

fn maximal_units(_: &Options) -> Result<Check> {
    let mut automorphisms = 0usize;
    for name in SMALL_2_GROUPS {
        let l = lattice(name)?;
        let ring = StableRing::new(Arc::new(FusionSystem::trivial(l.clone())?));
        let n = l.group().order();
        let mut units = Vec::new();
        for &m in l.maximals() {
            let v = ring.maximal_unit(m)?;
            for k in 0..l.class_count() {
                let p = l.class_rep(k);
                let meet = l.members(p).intersect(l.members(m)).count();
                let pm = l.order_of(p) * l.order_of(m) / meet;
                let expected = if (pm / l.order_of(m)) % 2 == 1 { -1 } else { 1 };
                if v.marks().values[k] != BigInt::from(expected) {
                    return Ok(Err(format!("{name}: mark of v_M at class {k}")));
                }
            }
            units.push((m, v.signs));
        }
        let aut = automorphism_group(l.group())?;
        for images in aut.maps() {
            let perm = automorphism_class_permutation(&l, images);
            for (m, signs) in &units {
                let acted = BitSet::from_indices(signs.len(), (0..signs.len()).filter(|&k| signs.contains(perm[k])));
                let image = BitSet::from_indices(n, l.members(*m).iter().map(|x| images[x] as usize));
                let am = l.id_of(&image).ok_or_else(|| Error::Invariant("image of a maximal".into()))?;
                if units.iter().find(|(x, _)| *x == am).map(|(_, s)| s) != Some(&acted) {
                    return Ok(Err(format!("{name}: automorphism does not carry v_M to v_alpha(M)")));
                }
            }
        }
        automorphisms += aut.order();
    }
    let mut rows = 0;
    for (desc, ring) in catalog_2_systems()? {
        for row in ring.classify_maximals()?.rows {
            let v = ring.maximal_unit(row.subgroup)?.marks();
            let essential_mode = ring.is_stable_marks(&v, StabilityMode::EssentialsOnly)?;
            if row.unit_stable != row.strongly_closed || essential_mode != row.unit_stable {
                return Ok(Err(format!("{desc}: v_{} stable={} but strongly closed={}", row.label, row.unit_stable, row.strongly_closed)));
            }
            rows += 1;
        }
    }
    Ok(Ok(format!(
        "{} groups, {automorphisms} automorphisms; {rows} maximal subgroups classified",
        SMALL_2_GROUPS.len()
    )))
}

/// Every sign vector over `table`'s classes that is a unit satisfying `keep`, by brute force.
fn enumerate_units(table: &MarksTable, keep: impl Fn(&MarkVector) -> bool) -> Vec<BitSet> {
    let c = table.class_count();
    let mut out = Vec::new();
    for mask in 0u64..(1 << c) {
        let signs = BitSet::from_indices(c, (0..c).filter(|&i| mask >> i & 1 == 1));
        let marks = MarkVector::from_signs(&signs);
        if table.from_marks(&marks).is_ok() && keep(&marks) {
            out.push(signs);
        }
    }
    out.sort();
    out
}

fn abelian_units(_: &Options) -> Result<Check> {
    let (mut systems, mut enumerated) = (0, 0);
    for (desc, ring) in catalog_2_systems()? {
        if !ring.fusion().lattice().group().is_abelian() {
            continue;
        }
        let units = ring.stable_units()?;
        let s = ring.maximal_class_count();
        if units.rank() != s + 1 {
            return Ok(Err(format!("{desc}: rank {} but {s} maximal classes", units.rank())));
        }
        if !units.same_group(&ring.abelian_unit_basis()?) {
            return Ok(Err(format!("{desc}: orbit products do not span the stable units")));
        }
        let everything = units.same_group(ring.ambient_units()?);
        if everything != ring.fusion().is_trivial() {
            return Ok(Err(format!("{desc}: B(F)^x = B(S)^x is {everything} but trivial is {}", ring.fusion().is_trivial())));
        }
        if ring.table().class_count() <= 12 {
            let mut listed = units.elements();
            listed.sort();
            if enumerate_units(ring.table(), |m| ring.marks_are_f_constant(m)) != listed {
                return Ok(Err(format!("{desc}: enumeration disagrees")));
            }
            enumerated += 1;
        }
        systems += 1;
    }
    Ok(Ok(format!("{systems} abelian systems; {enumerated} cross-checked by enumeration")))
}

fn normal_sylow_units(_: &Options) -> Result<Check> {
    let mut parts = Vec::new();
    for name in ["C2^3:C7", "C6", "A4"] {
        let report = FrobeniusContext::new(lattice(name)?, 2)?.bouc_check()?;
        if !report.holds() {
            return Ok(Err(format!("{name}: {report:?}")));
        }
        parts.push(format!("{name}={}", report.group_unit_rank));
    }
    Ok(Ok(format!("restriction and tensor induction inverse; unit ranks {}", parts.join(" "))))
}

fn odd_order_units(_: &Options) -> Result<Check> {
    for name in ["C3", "C5", "C7", "C7:C3"] {
        let l = lattice(name)?;
        let table = MarksTable::new(l);
        let rank = unit_group(&table)?.rank();
        let count = enumerate_units(&table, |_| true).len();
        if rank != 1 || count != 2 {
            return Ok(Err(format!("{name}: rank {rank}, {count} units by enumeration")));
        }
    }
    Ok(Ok("B(G)^x = {+1,-1} for C3 C5 C7 C7:C3".into()))
}

pub const CONGRUENCE_GROUPS: &[&str] = &[
    "C2", "C3", "C4", "V4", "C5", "C6", "S3", "C7", "C8", "C4xC2", "C2^3", "D8", "Q8", "D10", "D12", "A4", "C16",
    "C8xC2", "C4xC4", "C2^4", "D16", "C7:C3", "S4",
];

fn congruences(opts: &Options) -> Result<Check> {
    let mut total = 0usize;
    let mut members = 0usize;
    let mut agree = |l: &SubgroupLattice, table: &MarksTable, v: &MarkVector| -> bool {
        let a = congruence_member(l, v);
        total += 1;
        members += usize::from(a);
        a == table.from_marks(v).is_ok()
    };
    for (i, name) in CONGRUENCE_GROUPS.iter().enumerate() {
        let l = lattice(name)?;
        let table = table_for(&l, opts);
        let c = table.class_count();
        let mut rng = rng_for(opts, 1000 + i);
        for k in 0..1000 {
            let v = match k % 3 {
                0 => MarkVector { values: (0..c).map(|_| BigInt::from(rng.gen_range(-12..=12))).collect() },
                1 => MarksTable::new(l.clone()).mark(&random_element(&mut rng, c, 4)),
                _ => {
                    let mut v = MarksTable::new(l.clone()).mark(&random_element(&mut rng, c, 4));
                    let at = rng.gen_range(0..c);
                    v.values[at] += rng.gen_range(1..=6);
                    v
                }
            };
            if !agree(&l, &table, &v) {
                return Ok(Err(format!("{name}: disagreement on {:?}", v.values)));
            }
        }
    }
    for name in ["V4", "C4", "C2^3", "D8", "Q8"] {
        let l = lattice(name)?;
        let table = table_for(&l, opts);
        let c = table.class_count();
        for mask in 0u64..(1 << c) {
            let v = MarkVector::from_signs(&BitSet::from_indices(c, (0..c).filter(|&j| mask >> j & 1 == 1)));
            if !agree(&l, &table, &v) {
                return Ok(Err(format!("{name}: disagreement on signs {mask:b}")));
            }
        }
    }
    Ok(Ok(format!("{} groups, {total} vectors, {members} in the image", CONGRUENCE_GROUPS.len())))
}
