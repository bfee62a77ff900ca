use std::sync::Arc;

use burnside::acceptance::{self, Options, Suite};
use burnside::bitset::BitSet;
use burnside::burnside::{unit_group, BurnsideElement, MarkVector, MarksTable, UnitGroup};
use burnside::frobenius::FrobeniusContext;
use burnside::fusion::{load_fusion, FusionDescriptor, FusionSystem};
use burnside::group::descriptor::{load_group_with_cap, GroupDescriptor};
use burnside::group::SubgroupLattice;
use burnside::stable::StableRing;
use burnside::Error;

use crate::report::{Report, Section};
use crate::{Args, CliError, Verb};

type Out = Result<Report, CliError>;

/// A descriptor argument is either a path to a file holding one or the text itself.
fn read_descriptor(arg: &str) -> Result<String, CliError> {
    let path = std::path::Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| CliError::Compute(e.into()));
    }
    Ok(arg.to_string())
}

fn group_lattice(args: &Args) -> Result<Arc<SubgroupLattice>, CliError> {
    let text = read_descriptor(args.group.as_deref().ok_or(CliError::Usage("this verb needs --group".into()))?)?;
    let group = load_group_with_cap(&GroupDescriptor::parse(&text)?, args.cap)?;
    Ok(Arc::new(SubgroupLattice::build_with_cap(group, args.cap)?))
}

fn fusion(args: &Args) -> Result<FusionSystem, CliError> {
    let text = read_descriptor(args.fusion.as_deref().ok_or(CliError::Usage("this verb needs --fusion".into()))?)?;
    Ok(load_fusion(&FusionDescriptor::parse(&text)?, args.cap)?)
}

fn ring(args: &Args) -> Result<StableRing, CliError> {
    Ok(StableRing::new(Arc::new(fusion(args)?)))
}

fn frobenius(args: &Args) -> Result<FrobeniusContext, CliError> {
    Ok(FrobeniusContext::from_fusion(fusion(args)?)?)
}

fn inputs(args: &Args) -> Vec<(String, String)> {
    let mut v = Vec::new();
    let mut add = |k: &str, x: &Option<String>| {
        if let Some(x) = x {
            v.push((k.to_string(), x.clone()));
        }
    };
    add("group", &args.group);
    add("fusion", &args.fusion);
    add("subgroup", &args.subgroup);
    add("element", &args.element);
    add("g-element", &args.g_element);
    v
}

/// A class index given as a label such as `V4#1` or as a number.
fn class_index(lattice: &SubgroupLattice, arg: &str) -> Result<usize, CliError> {
    let c = lattice.class_count();
    if let Some(k) = lattice.class_labels().iter().position(|l| l == arg) {
        return Ok(k);
    }
    match arg.parse::<usize>() {
        Ok(k) if k < c => Ok(k),
        _ => Err(CliError::Usage(format!("unknown subgroup class {arg:?}"))),
    }
}

/// An element as comma-separated coefficients over the classes, or a class
/// label standing for the transitive set `[G/H]`.
fn element(table: &MarksTable, arg: &str) -> Result<BurnsideElement, CliError> {
    if arg.contains('#') {
        return Ok(table.transitive(class_index(table.lattice(), arg)?));
    }
    let coeffs: Vec<i64> = arg
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("bad element {arg:?}")))?;
    if coeffs.len() != table.class_count() {
        return Err(CliError::Usage(format!("element has {} coefficients, expected {}", coeffs.len(), table.class_count())));
    }
    Ok(BurnsideElement::from_i64(&coeffs))
}

fn required<'a>(x: &'a Option<String>, flag: &str) -> Result<&'a str, CliError> {
    x.as_deref().ok_or_else(|| CliError::Usage(format!("this verb needs --{flag}")))
}

fn with_label(label: &str, values: impl IntoIterator<Item = String>) -> Vec<String> {
    std::iter::once(label.to_string()).chain(values).collect()
}

fn header(first: &str, labels: &[String]) -> Vec<String> {
    with_label(first, labels.iter().cloned())
}

fn signs_row(label: &str, signs: &BitSet) -> Vec<String> {
    with_label(label, (0..signs.len()).map(|i| if signs.contains(i) { "-" } else { "+" }.to_string()))
}

fn element_section(title: &str, labels: &[String], rows: &[(String, &BurnsideElement)]) -> Section {
    let mut s = Section::new(title, header("element", labels));
    for (name, b) in rows {
        s.push(with_label(name, b.coefficients.iter().map(|x| x.to_string())));
    }
    s
}

fn marks_section(title: &str, labels: &[String], rows: &[(String, &MarkVector)]) -> Section {
    let mut s = Section::new(title, header("element", labels));
    for (name, m) in rows {
        s.push(with_label(name, m.values.iter().map(|x| x.to_string())));
    }
    s
}

fn units_section(title: &str, labels: &[String], units: &UnitGroup) -> Section {
    let mut s = Section::new(title, header("unit", labels));
    for (i, u) in units.basis().iter().enumerate() {
        s.push(signs_row(&format!("u{}", i + 1), &u.signs));
    }
    s
}

fn yes(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

pub fn run(verb: Verb, args: &Args) -> Out {
    let mut r = Report::new(&verb.name(), inputs(args));
    match verb {
        Verb::Marks => {
            let l = group_lattice(args)?;
            let table = MarksTable::new(l.clone());
            table.check_invariants()?;
            let labels = l.class_labels();
            let mut s = Section::new("marks", header("G/K \\ H", &labels));
            for (k, row) in table.matrix().iter().enumerate() {
                s.push(with_label(&labels[k], row.iter().map(|x| x.to_string())));
            }
            r.section(s);
            r.check("triangular with diagonal [N(H):H]");
        }
        Verb::Lattice => {
            let l = group_lattice(args)?;
            let head = ["class", "order", "length", "normalizer", "normal", "maximal"];
            let mut s = Section::new("classes", head.iter().map(|x| x.to_string()).collect());
            for (k, c) in l.classes().iter().enumerate() {
                let rep = c.representative;
                s.push(vec![
                    l.class_label(k).into(),
                    l.order_of(rep).to_string(),
                    c.members.len().to_string(),
                    l.order_of(l.normalizer(rep)).to_string(),
                    yes(l.is_normal(rep)),
                    yes(l.maximals().contains(&rep)),
                ]);
                if c.members.len() * l.order_of(l.normalizer(rep)) != l.group().order() {
                    return Err(Error::Invariant(format!("class {} violates |class|·|N| = |G|", c.label)).into());
                }
            }
            r.section(s);
            r.section(Section::facts(
                "summary",
                vec![
                    ("group", l.group().name().to_string()),
                    ("order", l.group().order().to_string()),
                    ("subgroups", l.len().to_string()),
                    ("classes", l.class_count().to_string()),
                ],
            ));
            r.check("|class|·|N(H)| = |G| for every class");
        }
        Verb::Classes => {
            let f = fusion(args)?;
            let l = f.lattice();
            let mut s = Section::new("subgroup classes", ["f-class", "order", "s-classes", "subgroups", "strongly-closed"].map(String::from).to_vec());
            for (i, cs) in f.s_classes().iter().enumerate() {
                let rep = f.classes()[i][0];
                s.push(vec![
                    f.class_label(i).into(),
                    l.order_of(rep).to_string(),
                    cs.iter().map(|&k| l.class_label(k)).collect::<Vec<_>>().join(" "),
                    f.classes()[i].len().to_string(),
                    yes(f.is_strongly_closed(rep)),
                ]);
            }
            r.section(s);
            let g = l.group();
            let mut e = Section::new("element classes", ["class", "order", "elements"].map(String::from).to_vec());
            for (i, members) in f.element_classes().iter().enumerate() {
                e.push(vec![
                    format!("x{}", i + 1),
                    g.element_order(members[0]).to_string(),
                    members.iter().map(|&x| g.label(x)).collect::<Vec<_>>().join(" "),
                ]);
            }
            r.section(e);
            r.section(Section::facts(
                "summary",
                vec![("fusion", f.name().to_string()), ("subgroup classes", f.class_count().to_string()), ("trivial", yes(f.is_trivial()))],
            ));
        }
        Verb::Local => {
            let f = fusion(args)?;
            let l = f.lattice();
            let subgroups: Vec<usize> = match &args.subgroup {
                Some(a) => vec![l.class_rep(class_index(l, a)?)],
                None => f.s_classes().iter().map(|cs| l.class_rep(cs[0])).collect(),
            };
            let head = ["subgroup", "order", "aut_F", "aut_S", "out_F", "out_S", "fully-automized", "centric"];
            let mut s = Section::new("local data", head.map(String::from).to_vec());
            for p in subgroups {
                let local = f.local(p)?;
                s.push(vec![
                    l.class_label(l.class_of(p)).into(),
                    l.order_of(p).to_string(),
                    local.aut_order().to_string(),
                    local.aut_s.count().to_string(),
                    local.out_order().to_string(),
                    local.out_s.count().to_string(),
                    yes(local.fully_automized),
                    yes(f.is_centric(p)),
                ]);
            }
            r.section(s);
        }
        Verb::Essentials => {
            let f = fusion(args)?;
            let l = f.lattice();
            let mut s = Section::new("essentials", ["subgroup", "order", "out_F"].map(String::from).to_vec());
            for p in f.essentials()? {
                s.push(vec![l.class_label(l.class_of(p)).into(), l.order_of(p).to_string(), f.local(p)?.out_order().to_string()]);
            }
            r.section(s);
        }
        Verb::StableBasis | Verb::ReehBasis => {
            let ring = ring(args)?;
            let (basis, prefix) = if verb == Verb::ReehBasis {
                (ring.reeh_basis()?, "alpha_")
            } else {
                (ring.stable_lattice()?, "b")
            };
            let names: Vec<String> = if verb == Verb::ReehBasis {
                basis.labels.iter().map(|l| format!("{prefix}{l}")).collect()
            } else {
                (1..=basis.rank()).map(|i| format!("{prefix}{i}")).collect()
            };
            let marks: Vec<(String, &MarkVector)> = names.iter().cloned().zip(&basis.marks).collect();
            r.section(marks_section("marks", &basis.labels, &marks));
            let coeffs: Vec<(String, &BurnsideElement)> = names.iter().cloned().zip(&basis.basis).collect();
            r.section(element_section("coefficients", &ring.table().labels(), &coeffs));
            for b in &basis.basis {
                if !ring.marks_are_f_constant(&ring.table().mark(b)) {
                    return Err(Error::Invariant("basis element is not F-stable".into()).into());
                }
            }
            r.check("every basis element has F-constant marks");
            if verb == Verb::ReehBasis {
                if basis.lattice != ring.stable_lattice()?.lattice {
                    return Err(Error::Invariant("Reeh basis spans a different lattice".into()).into());
                }
                r.check("spans the Hermite normal form lattice");
            }
        }
        Verb::Units => {
            let l = group_lattice(args)?;
            let table = MarksTable::new(l.clone());
            let units = unit_group(&table)?;
            let describe = if units.rank() == 1 { "{±1}".to_string() } else { format!("(Z/2)^{}", units.rank()) };
            r.section(Section::facts("summary", vec![("rank", units.rank().to_string()), ("group", describe)]));
            r.section(units_section("basis", &l.class_labels(), &units));
            r.check("each basis unit has an integral preimage");
        }
        Verb::StableUnits => {
            let ring = ring(args)?;
            let units = ring.stable_units()?;
            if !units.same_group(&ring.stable_units_all_kernels()?) {
                return Err(Error::Invariant("essential and all-subgroup kernels disagree".into()).into());
            }
            r.section(Section::facts("summary", vec![("rank", units.rank().to_string())]));
            r.section(units_section("basis", &ring.table().labels(), &units));
            r.check("kernels over S and essentials = kernels over all subgroups");
        }
        Verb::MaxUnits => {
            let (ring, stable) = match (&args.fusion, &args.group) {
                (Some(_), _) => (ring(args)?, true),
                (None, Some(_)) => (StableRing::new(Arc::new(FusionSystem::trivial(group_lattice(args)?)?)), false),
                _ => return Err(CliError::Usage("this verb needs --group or --fusion".into())),
            };
            let l = ring.fusion().lattice().clone();
            let mut h = header("maximal", &l.class_labels());
            if stable {
                h.push("stable".into());
            }
            let mut s = Section::new("maximal units", h);
            for &m in l.maximals() {
                let v = ring.maximal_unit(m)?;
                let mut row = signs_row(&format!("v_{}", l.class_label(l.class_of(m))), &v.signs);
                if stable {
                    row.push(yes(ring.is_stable_marks(&v.marks(), burnside::stable::StabilityMode::AllSubgroups)?));
                }
                s.push(row);
            }
            r.section(s);
        }
        Verb::ClassifyMaximals => {
            let ring = ring(args)?;
            let report = ring.classify_maximals()?;
            let head = ["maximal", "unit-stable", "strongly-closed", "normal"];
            let mut s = Section::new("maximals", head.map(String::from).to_vec());
            for row in &report.rows {
                if row.unit_stable != row.strongly_closed {
                    return Err(Error::Invariant(format!("v_{} stability differs from strong closure", row.label)).into());
                }
                s.push(vec![
                    row.label.clone(),
                    yes(row.unit_stable),
                    yes(row.strongly_closed),
                    row.normal.map_or("-".into(), yes),
                ]);
            }
            r.section(s);
            let frattini = report.frattini_strongly_closed.map_or("-".into(), yes);
            r.section(Section::facts("summary", vec![("frattini strongly closed", frattini)]));
            r.check("v_M stable exactly when M is strongly closed");
        }
        Verb::Star => {
            let ctx = frobenius(args)?;
            let a = element(ctx.group_table(), required(&args.g_element, "g-element")?)?;
            let b = element(ctx.s_table(), required(&args.element, "element")?)?;
            let marks = ctx.star_marks(&a, &b)?;
            let product = ctx.star(&a, &b)?;
            let labels = ctx.group_table().labels();
            r.section(marks_section("marks", &labels, &[("a*b".into(), &marks)]));
            r.section(element_section("coefficients", &labels, &[("a*b".into(), &product)]));
        }
        Verb::Transfer => {
            let ctx = frobenius(args)?;
            let b = element(ctx.s_table(), required(&args.element, "element")?)?;
            let t = ctx.transfer(&b)?;
            if ctx.restrict(&t)? != b {
                return Err(Error::Invariant("transfer does not restrict back".into()).into());
            }
            r.section(element_section("transfer", &ctx.group_table().labels(), &[("t(b)".into(), &t)]));
            r.check("Res(t(b)) = b");
        }
        Verb::Witness => {
            let ctx = frobenius(args)?;
            let b = element(ctx.s_table(), required(&args.element, "element")?)?;
            match ctx.genuine_witness(&b)? {
                Some(x) => {
                    if ctx.restrict(&x)? != b {
                        return Err(Error::Invariant("witness does not restrict to b".into()).into());
                    }
                    r.section(Section::facts("summary", vec![("realizable", "yes".into())]));
                    r.section(element_section("witness", &ctx.group_table().labels(), &[("X".into(), &x)]));
                    r.check("Res(X) = b");
                }
                None => r.section(Section::facts("summary", vec![("realizable", "no".into())])),
            }
        }
        Verb::NormalizerReport => {
            let n = frobenius(args)?.normalizer_diagram()?;
            r.section(Section::facts(
                "normalizer",
                vec![
                    ("normalizer order", n.normalizer_order.to_string()),
                    ("restriction from N onto B(F)^x", yes(n.normalizer_restriction_onto)),
                    ("B(F)^x = B(F_S(N))^x", yes(n.normalizer_units_agree)),
                    ("N controls fusion", yes(n.controls_fusion)),
                    ("S abelian", yes(n.s_abelian)),
                    ("stable unit rank", n.stable_unit_rank.to_string()),
                    ("normalizer stable unit rank", n.normalizer_stable_unit_rank.to_string()),
                ],
            ));
        }
        Verb::BoucCheck => {
            let b = frobenius(args)?.bouc_check()?;
            r.section(Section::facts(
                "units",
                vec![
                    ("B(G)^x rank", b.group_unit_rank.to_string()),
                    ("fixed B(S)^x rank", b.fixed_unit_rank.to_string()),
                    ("restriction bijective", yes(b.restriction_bijective)),
                    ("tensor induction inverts", yes(b.tensor_induction_inverts)),
                    ("transfer = tensor induction", yes(b.transfer_matches_tensor_induction)),
                    ("holds", yes(b.holds())),
                ],
            ));
        }
        Verb::Verify => unreachable!("handled by verify"),
    }
    Ok(r)
}

/// Runs a suite; the report lists one row per criterion and timing goes to stderr.
pub fn verify(args: &Args, suite: Suite) -> (Report, bool) {
    let mut r = Report::new("verify", vec![("suite".into(), args.suite.clone()), ("seed".into(), args.seed.to_string())]);
    let opts = Options { seed: args.seed, tamper: args.tamper };
    let mut s = Section::new("criteria", ["id", "criterion", "status", "detail"].map(String::from).to_vec());
    let mut ok = true;
    for o in acceptance::run_suite(suite, &opts) {
        eprintln!("{:02} {}\t{:.3}s", o.id, o.name, o.elapsed.as_secs_f64());
        ok &= o.passed;
        s.push(vec![format!("{:02}", o.id), o.name.into(), if o.passed { "PASS" } else { "FAIL" }.into(), o.detail]);
    }
    r.section(s);
    (r, ok)
}
