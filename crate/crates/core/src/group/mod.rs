//! Finite groups given by explicit multiplication tables.
//!
//! Elements are the integers `0..order`, with `0` the identity. Every
//! constructor funnels through [`FiniteGroup::from_table`], which validates
//! the group axioms exhaustively.

pub mod aut;
pub mod catalog;
pub mod descriptor;
pub mod f2matrix;
pub mod hom;
pub mod lattice;
pub mod naming;

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub use aut::{automorphism_group, AutomorphismGroup};
pub use f2matrix::BitMatrix;
pub use hom::{hom_by_conjugation, GroupMap};
pub use lattice::{EmbeddedSubgroup, Quotient, SubgroupLattice};

/// Default bound on group orders accepted by the constructors.
pub const DEFAULT_ORDER_CAP: usize = 512;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<usize>,
    element_order: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table whose first row and
    /// column are the identity. Associativity is checked exhaustively.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > cap {
            return Err(Error::CapExceeded { what: "group order", size: n, cap });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has length {}", row.len())));
            }
            for &x in row {
                if x >= n {
                    return Err(Error::NotAGroup(format!("entry {x} out of range in row {i}")));
                }
                flat.push(x as u32);
            }
        }
        for a in 0..n {
            if flat[a] as usize != a || flat[a * n] as usize != a {
                return Err(Error::NotAGroup("element 0 is not the identity".into()));
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            let row = &flat[a * n..(a + 1) * n];
            let mut seen = BitSet::new(n);
            for (b, &c) in row.iter().enumerate() {
                if !seen.insert(c as usize) {
                    return Err(Error::NotAGroup(format!("row {a} repeats entry {c}")));
                }
                if c == 0 {
                    inverse[a] = b;
                }
            }
        }
        for a in 0..n {
            if flat[inverse[a] * n + a] != 0 {
                return Err(Error::NotAGroup(format!("element {a} has no two-sided inverse")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = flat[a * n + b] as usize;
                for c in 0..n {
                    let bc = flat[b * n + c] as usize;
                    if flat[ab * n + c] != flat[a * n + bc] {
                        return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        let mut element_order = vec![1; n];
        for (a, ord) in element_order.iter_mut().enumerate() {
            let mut x = a;
            while x != 0 {
                x = flat[x * n + a] as usize;
                *ord += 1;
            }
        }
        Ok(FiniteGroup { name: name.into(), order: n, table: flat, inverse, element_order, labels: None })
    }

    /// Breadth-first closure of `gens` under right multiplication, starting
    /// from `identity`. Returns the group and the element list in id order.
    pub fn from_generators<T, F>(
        name: impl Into<String>,
        identity: T,
        gens: &[T],
        mul: F,
        cap: usize,
    ) -> Result<(Self, Vec<T>)>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<T, usize> = HashMap::new();
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let x = mul(&elements[i], g);
                if !index.contains_key(&x) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded { what: "generator closure", size: elements.len() + 1, cap });
                    }
                    index.insert(x.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(x);
                }
            }
        }
        let n = elements.len();
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| index[&mul(&elements[a], &elements[b])]).collect())
            .collect();
        let group = FiniteGroup::from_table(name, table, cap)?;
        Ok((group, elements))
    }

    /// Permutation group on `degree` points; generators are 0-based image
    /// arrays. Element labels are in 1-based cycle notation.
    pub fn from_permutations(name: impl Into<String>, degree: usize, gens: &[Vec<usize>], cap: usize) -> Result<Self> {
        for g in gens {
            let mut seen = BitSet::new(degree);
            if g.len() != degree || g.iter().any(|&x| x >= degree || !seen.insert(x)) {
                return Err(Error::Descriptor(format!("not a permutation of {degree} points: {g:?}")));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        // (p*q)(x) = p(q(x)): the left factor is applied last.
        let (mut group, elems) =
            Self::from_generators(name, id, gens, |p: &Vec<usize>, q: &Vec<usize>| q.iter().map(|&x| p[x]).collect(), cap)?;
        group.labels = Some(elems.iter().map(|p| cycle_notation(p)).collect());
        Ok(group)
    }

    /// The semidirect product `C2^rank ⋊ <action>` where each matrix acts on
    /// column vectors over F2.
    pub fn semidirect(name: impl Into<String>, rank: usize, action: &[BitMatrix], cap: usize) -> Result<Self> {
        if rank == 0 || rank > 16 {
            return Err(Error::Descriptor(format!("unsupported rank {rank}")));
        }
        for (i, m) in action.iter().enumerate() {
            if m.dim() != rank {
                return Err(Error::Descriptor(format!("matrix {i} has dimension {} != {rank}", m.dim())));
            }
            if !m.is_invertible() {
                return Err(Error::SingularMatrix { index: i });
            }
        }
        let identity = (0u32, BitMatrix::identity(rank));
        let mut gens: Vec<(u32, BitMatrix)> = (0..rank).map(|i| (1u32 << i, BitMatrix::identity(rank))).collect();
        gens.extend(action.iter().map(|m| (0u32, m.clone())));
        let mul = |x: &(u32, BitMatrix), y: &(u32, BitMatrix)| (x.0 ^ x.1.apply(y.0), x.1.mul(&y.1));
        let (mut group, elems) = Self::from_generators(name, identity, &gens, mul, cap)?;
        group.labels = Some(
            elems
                .iter()
                .map(|(v, m)| {
                    let bits: String = (0..rank).map(|i| if v >> i & 1 == 1 { '1' } else { '0' }).collect();
                    format!("{bits}|{}", m.short_label())
                })
                .collect(),
        );
        Ok(group)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Left conjugation `g h g^{-1}`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inverse[g])
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_order[a]
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => format!("g{a}"),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        debug_assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// Member mask of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> BitSet {
        let mut set = BitSet::from_indices(self.order, [0]);
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// Fast path for `<H, x>` when `x` normalizes `H`: the union of the cosets `H x^i`.
    pub fn extend_by_normalizing(&self, base: &BitSet, x: usize) -> BitSet {
        let mut set = base.clone();
        let mut power = x;
        while !base.contains(power) {
            for h in base.iter() {
                set.insert(self.mul(h, power));
            }
            power = self.mul(power, x);
        }
        set
    }

    pub fn is_subgroup(&self, set: &BitSet) -> bool {
        set.contains(0) && set.iter().all(|a| set.iter().all(|b| set.contains(self.mul(a, b))))
    }

    pub fn conjugate_set(&self, g: usize, set: &BitSet) -> BitSet {
        BitSet::from_indices(self.order, set.iter().map(|h| self.conj(g, h)))
    }

    pub fn normalizes(&self, g: usize, set: &BitSet) -> bool {
        set.iter().all(|h| set.contains(self.conj(g, h)))
    }

    /// Least element of each double coset `A g B`, in increasing order.
    pub fn double_coset_reps(&self, a: &BitSet, b: &BitSet) -> Vec<usize> {
        let mut seen = BitSet::new(self.order);
        let mut reps = Vec::new();
        for g in 0..self.order {
            if seen.contains(g) {
                continue;
            }
            reps.push(g);
            for x in a.iter() {
                let xg = self.mul(x, g);
                for y in b.iter() {
                    seen.insert(self.mul(xg, y));
                }
            }
        }
        reps
    }

    pub fn center(&self) -> BitSet {
        BitSet::from_indices(self.order, (0..self.order).filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a))))
    }

    /// Regroups the elements of a subgroup as a group in its own right.
    /// Local element `i` corresponds to parent element `embedding[i]`;
    /// the identity stays first and the remaining members keep their order.
    pub fn restrict(&self, members: &BitSet, name: impl Into<String>) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(members) {
            return Err(Error::Precondition("member set is not a subgroup".into()));
        }
        let embedding = members.to_vec();
        let mut local = vec![usize::MAX; self.order];
        for (i, &g) in embedding.iter().enumerate() {
            local[g] = i;
        }
        let table = embedding.iter().map(|&a| embedding.iter().map(|&b| local[self.mul(a, b)]).collect()).collect();
        let mut group = FiniteGroup::from_table(name, table, usize::MAX)?;
        if self.labels.is_some() {
            group.labels = Some(embedding.iter().map(|&g| self.label(g)).collect());
        }
        Ok((group, embedding))
    }

    /// The quotient by a normal subgroup. Cosets are numbered by their least
    /// element's first appearance; `projection[g]` is the coset of `g`.
    pub fn quotient(&self, normal: &BitSet, name: impl Into<String>) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(normal) || !(0..self.order).all(|g| self.normalizes(g, normal)) {
            return Err(Error::Precondition("quotient by a non-normal subset".into()));
        }
        let mut projection = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if projection[g] == usize::MAX {
                for n in normal.iter() {
                    projection[self.mul(g, n)] = reps.len();
                }
                reps.push(g);
            }
        }
        let table = reps.iter().map(|&a| reps.iter().map(|&b| projection[self.mul(a, b)]).collect()).collect();
        let group = FiniteGroup::from_table(name, table, usize::MAX)?;
        Ok((group, projection))
    }
}

/// 1-based cycle notation, e.g. `(1,2,3)(4,5)`; the identity is `()`.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = perm[start];
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = perm[x];
        }
        out.push('(');
        out.push_str(&cycle.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Converts 1-based cycles into a 0-based image array on `degree` points.
pub fn perm_from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..degree).collect();
    for cycle in cycles {
        for (k, &p) in cycle.iter().enumerate() {
            let q = cycle[(k + 1) % cycle.len()];
            if p == 0 || q == 0 || p > degree || q > degree {
                return Err(Error::Descriptor(format!("cycle point out of range 1..={degree}: {cycle:?}")));
            }
            perm[p - 1] = q - 1;
        }
    }
    // Overlapping cycles would silently produce a non-bijection.
    let mut seen = BitSet::new(degree);
    if !perm.iter().all(|&x| seen.insert(x)) {
        return Err(Error::Descriptor(format!("cycles {cycles:?} do not describe a permutation")));
    }
    Ok(perm)
}

pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut r = 1;
    while n.is_multiple_of(p) {
        n /= p;
        r *= p;
    }
    r
}
