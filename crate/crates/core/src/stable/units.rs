//! Units of `B(F)`: Out-actions on `B(P)^×`, restriction kernels, traces
//! and the maximal units `v_M`.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::StableRing;
use crate::bitset::BitSet;
use crate::burnside::{ghost_biset, maximal_unit_signs, unit_group, BisetMapKind, MarkVector, MarksTable, Unit, UnitGroup};
use crate::error::{Error, Result};
use crate::fusion::LocalData;
use crate::group::SubgroupLattice;

/// `Out_F(P)` acting on the subgroup classes of `P` by `Q ↦ α^{-1}(Q)`,
/// hence on sign vectors by `(α·u)_Q = u_{α^{-1}(Q)}`.
#[derive(Clone, Debug)]
pub struct OutAction {
    pub local: Arc<LocalData>,
    pub table: Arc<MarksTable>,
    /// `perm[o][c]`: class of `α^{-1}(Q)` for `Q` in class `c`, `α` over `o`.
    perm: Vec<Vec<usize>>,
}

impl OutAction {
    pub fn new(local: Arc<LocalData>) -> Self {
        let table = Arc::new(MarksTable::new(local.lattice().clone()));
        let perm = local
            .out_reps
            .iter()
            .map(|&a| local.class_action[local.aut_group.inv(a)].clone())
            .collect();
        OutAction { local, table, perm }
    }

    pub fn out_order(&self) -> usize {
        self.perm.len()
    }

    /// All of `Out_F(P)`.
    pub fn full(&self) -> Vec<usize> {
        (0..self.out_order()).collect()
    }

    /// `Out_S(P)`.
    pub fn out_s(&self) -> Vec<usize> {
        self.local.out_s.to_vec()
    }

    pub fn permutation(&self, o: usize) -> &[usize] {
        &self.perm[o]
    }

    pub fn act(&self, o: usize, signs: &BitSet) -> BitSet {
        BitSet::from_indices(signs.len(), (0..signs.len()).filter(|&c| signs.contains(self.perm[o][c])))
    }

    pub fn is_fixed(&self, group: &[usize], signs: &BitSet) -> bool {
        group.iter().all(|&o| self.act(o, signs) == *signs)
    }

    /// `(B(P)^×)^Γ`.
    pub fn fixed_units(&self, group: &[usize]) -> Result<UnitGroup> {
        let all = unit_group(&self.table)?;
        let pairs: Vec<(usize, usize)> =
            group.iter().flat_map(|&o| self.perm[o].iter().enumerate().map(|(c, &d)| (c, d))).collect();
        all.subgroup_where_equal(&self.table, &pairs)
    }

    /// Left coset representatives of `Δ` in `Γ`, least element of each coset.
    pub fn transversal(&self, gamma: &[usize], delta: &[usize]) -> Vec<usize> {
        let out = &self.local.out_group;
        let mut sorted = gamma.to_vec();
        sorted.sort_unstable();
        let mut covered = BTreeSet::new();
        let mut reps = Vec::new();
        for &g in &sorted {
            if covered.contains(&g) {
                continue;
            }
            reps.push(g);
            covered.extend(delta.iter().map(|&d| out.mul(g, d)));
        }
        reps
    }

    /// `tr_Δ^Γ(u) = prod over γ ∈ Γ/Δ of γ·u`.
    pub fn trace(&self, gamma: &[usize], delta: &[usize], u: &BitSet) -> Result<BitSet> {
        self.trace_with(&self.transversal(gamma, delta), gamma, delta, u)
    }

    /// The trace over an explicit transversal, checked to be one.
    pub fn trace_with(&self, reps: &[usize], gamma: &[usize], delta: &[usize], u: &BitSet) -> Result<BitSet> {
        if !self.is_fixed(delta, u) {
            return Err(Error::Precondition("unit is not fixed by the smaller group".into()));
        }
        let out = &self.local.out_group;
        let mut covered = BitSet::new(out.order());
        for &g in reps {
            for &d in delta {
                if !covered.insert(out.mul(g, d)) {
                    return Err(Error::Precondition("representatives overlap".into()));
                }
            }
        }
        if covered != BitSet::from_indices(out.order(), gamma.iter().copied()) {
            return Err(Error::Precondition("not a transversal".into()));
        }
        let mut acc = BitSet::new(u.len());
        for &g in reps {
            acc.xor_with(&self.act(g, u));
        }
        Ok(acc)
    }
}

/// `α·u` for `α ∈ Aut(S)` given on all elements: `(α·u)_Q = u_{α^{-1}(Q)}`.
pub fn act_by_automorphism(lattice: &SubgroupLattice, images: &[u32], signs: &BitSet) -> BitSet {
    let perm = automorphism_class_permutation(lattice, images);
    BitSet::from_indices(signs.len(), (0..signs.len()).filter(|&k| signs.contains(perm[k])))
}

/// Class `k` of `Q` -> class of `α^{-1}(Q)`.
pub fn automorphism_class_permutation(lattice: &SubgroupLattice, images: &[u32]) -> Vec<usize> {
    let n = lattice.group().order();
    let mut inverse = vec![0usize; n];
    for (x, &y) in images.iter().enumerate() {
        inverse[y as usize] = x;
    }
    (0..lattice.class_count())
        .map(|k| {
            let pre = BitSet::from_indices(n, lattice.members(lattice.class_rep(k)).iter().map(|x| inverse[x]));
            lattice.class_of(lattice.id_of(&pre).expect("preimage of a subgroup"))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalRow {
    pub subgroup: usize,
    pub label: String,
    pub unit_stable: bool,
    pub strongly_closed: bool,
    /// Present only for abelian `M`, where strong closure is normality.
    pub normal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalsReport {
    pub rows: Vec<MaximalRow>,
    /// Whether `Φ(S)` is strongly closed, when every `v_M` is stable.
    pub frattini_strongly_closed: Option<bool>,
}

impl StableRing {
    /// `B(S)^×`.
    pub fn ambient_units(&self) -> Result<&UnitGroup> {
        if let Some(u) = self.units.get() {
            return Ok(u);
        }
        let u = unit_group(&self.table)?;
        Ok(self.units.get_or_init(|| u))
    }

    pub fn out_action(&self, p: usize) -> Result<OutAction> {
        Ok(OutAction::new(self.fusion.local(p)?))
    }

    /// Pairs of S-classes whose signs must agree for `Res^S_P(u)` to be
    /// `Out_F(P)`-fixed, i.e. `Ker(d^F_P)`.
    fn kernel_pairs(&self, p: usize) -> Result<Vec<(usize, usize)>> {
        let local = self.fusion.local(p)?;
        let l = self.fusion.lattice();
        let s_class = |c: usize| l.class_of(local.embedded.to_parent[local.lattice().class_rep(c)]);
        let mut pairs = BTreeSet::new();
        for &a in &local.out_reps {
            for (c, &d) in local.class_action[a].iter().enumerate() {
                let (x, y) = (s_class(c), s_class(d));
                if x != y {
                    pairs.insert((x.min(y), x.max(y)));
                }
            }
        }
        Ok(pairs.into_iter().collect())
    }

    /// `∩ Ker(d^F_R)` over `R = S` and the essentials.
    pub fn stable_units(&self) -> Result<UnitGroup> {
        let mut pairs = self.kernel_pairs(self.fusion.lattice().top())?;
        for e in self.fusion.essentials()? {
            pairs.extend(self.kernel_pairs(e)?);
        }
        self.ambient_units()?.subgroup_where_equal(&self.table, &pairs)
    }

    /// `∩ Ker(d^F_P)` over every `P <= S`.
    pub fn stable_units_all_kernels(&self) -> Result<UnitGroup> {
        let mut pairs = Vec::new();
        for p in 0..self.fusion.lattice().len() {
            pairs.extend(self.kernel_pairs(p)?);
        }
        self.ambient_units()?.subgroup_where_equal(&self.table, &pairs)
    }

    /// `(B(S)^×)^{Out_F(S)}`, computed on `S`'s own lattice and carried back.
    pub fn out_fixed_units_of_s(&self) -> Result<UnitGroup> {
        let action = self.out_action(self.fusion.lattice().top())?;
        let fixed = action.fixed_units(&action.full())?;
        let gens: Vec<BitSet> = fixed.basis().iter().map(|u| self.top_local_to_ambient(&action.local, &u.signs)).collect();
        UnitGroup::from_signs(&self.table, gens)
    }

    /// Sign vector over `S`'s rebuilt lattice, re-indexed by the ambient classes.
    pub fn top_local_to_ambient(&self, local: &LocalData, signs: &BitSet) -> BitSet {
        let l = self.fusion.lattice();
        let lat = local.lattice();
        BitSet::from_indices(
            l.class_count(),
            (0..lat.class_count()).filter(|&c| signs.contains(c)).map(|c| l.class_of(local.embedded.to_parent[lat.class_rep(c)])),
        )
    }

    /// All units of `B(S)` passing `is_stable`.
    pub fn stable_units_by_filter(&self) -> Result<Vec<BitSet>> {
        let mut out = Vec::new();
        for signs in self.ambient_units()?.elements() {
            if self.is_stable_marks(&MarkVector::from_signs(&signs), super::StabilityMode::EssentialsOnly)? {
                out.push(signs);
            }
        }
        out.sort();
        Ok(out)
    }

    /// `v_M = Inf^S_{S/M}([C2/C2] - [C2/1])`.
    pub fn maximal_unit(&self, m: usize) -> Result<Unit> {
        let l = self.fusion.lattice();
        if !l.maximals().contains(&m) || l.order_of(l.top()) != 2 * l.order_of(m) {
            return Err(Error::NotMaximal(m));
        }
        let q = l.quotient(m)?;
        let u = MarkVector::from_i64(&[-1, 1]);
        let marks = ghost_biset(BisetMapKind::Inf(&q), &u)?;
        let signs = marks.as_signs().ok_or_else(|| Error::Invariant("inflated unit is not ±1".into()))?;
        Unit::certify(&self.table, signs)
    }

    pub fn classify_maximals(&self) -> Result<MaximalsReport> {
        let l = self.fusion.lattice();
        let mut rows = Vec::new();
        for &m in l.maximals() {
            let v = self.maximal_unit(m)?;
            let unit_stable = self.is_stable_marks(&v.marks(), super::StabilityMode::AllSubgroups)?;
            let strongly_closed = self.fusion.is_strongly_closed(m);
            let abelian = is_abelian_subgroup(l, m);
            rows.push(MaximalRow {
                subgroup: m,
                label: l.class_label(l.class_of(m)).to_string(),
                unit_stable,
                strongly_closed,
                normal: abelian.then_some(strongly_closed),
            });
        }
        let frattini_strongly_closed =
            rows.iter().all(|r| r.unit_stable).then(|| self.fusion.is_strongly_closed(l.frattini()));
        Ok(MaximalsReport { rows, frattini_strongly_closed })
    }

    /// `{-1} ∪ {prod over N ∈ M_i^F of v_N}` for F-class representatives `M_i`
    /// of the maximal subgroups.
    pub fn abelian_unit_basis(&self) -> Result<UnitGroup> {
        let l = self.fusion.lattice();
        if !l.group().is_abelian() {
            return Err(Error::Precondition("S is not abelian".into()));
        }
        let mut seen = BTreeSet::new();
        let mut gens = Vec::new();
        for &m in l.maximals() {
            let class = self.fusion.class_of(m);
            if !seen.insert(class) {
                continue;
            }
            let mut product = BitSet::new(l.class_count());
            for &n in &self.fusion.classes()[class] {
                product.xor_with(&maximal_unit_signs(l, n));
            }
            gens.push(product);
        }
        UnitGroup::from_signs(&self.table, gens)
    }

    /// Number of F-classes of maximal subgroups.
    pub fn maximal_class_count(&self) -> usize {
        let l = self.fusion.lattice();
        l.maximals().iter().map(|&m| self.fusion.class_of(m)).collect::<BTreeSet<_>>().len()
    }
}

fn is_abelian_subgroup(l: &SubgroupLattice, h: usize) -> bool {
    let g = l.group();
    let members = l.members(h).to_vec();
    members.iter().all(|&a| members.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}
