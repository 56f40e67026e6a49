//! Subgroups of an enumerated group, stored as element-index bitsets.

use std::sync::Arc;

use crate::bits::Bits;
use crate::error::{GroupError, Result};
use crate::finite::FiniteGroup;
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone)]
pub struct SubgroupSet {
    group: Arc<FiniteGroup>,
    bits: Bits,
    order: usize,
    gens: Vec<u32>,
}

/// Subgroup closure of `gens`, listing members in discovery order.
pub(crate) fn closure(group: &FiniteGroup, gens: &[u32]) -> (Bits, Vec<u32>) {
    let mut bits = Bits::new(group.order());
    bits.insert(0);
    let mut list = vec![0u32];
    let mut k = 0;
    while k < list.len() {
        let x = list[k] as usize;
        for &g in gens {
            let y = group.mul(x, g as usize);
            if bits.insert(y) {
                list.push(y as u32);
            }
        }
        k += 1;
    }
    (bits, list)
}

impl SubgroupSet {
    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        Self {
            group: Arc::clone(group),
            bits: Bits::from_indices(group.order(), [0]),
            order: 1,
            gens: Vec::new(),
        }
    }

    pub fn whole(group: &Arc<FiniteGroup>) -> Self {
        Self {
            group: Arc::clone(group),
            bits: Bits::full(group.order()),
            order: group.order(),
            gens: group
                .generator_indices()
                .iter()
                .copied()
                .filter(|&g| g != 0)
                .collect(),
        }
    }

    /// Subgroup generated by element indices.
    pub fn generated(group: &Arc<FiniteGroup>, gens: &[usize]) -> Self {
        let gens: Vec<u32> = gens.iter().filter(|&&g| g != 0).map(|&g| g as u32).collect();
        let (bits, list) = closure(group, &gens);
        Self {
            group: Arc::clone(group),
            bits,
            order: list.len(),
            gens,
        }
    }

    /// Subgroup generated by permutations, which must lie in the ambient group.
    pub fn from_permutations(group: &Arc<FiniteGroup>, perms: &[Permutation]) -> Result<Self> {
        let idx = perms
            .iter()
            .map(|p| group.index_of(p).ok_or(GroupError::NotSubgroup))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::generated(group, &idx))
    }

    /// Validates that `bits` is a subgroup and picks a small generating set.
    pub fn from_bits(group: &Arc<FiniteGroup>, bits: Bits) -> Result<Self> {
        if bits.len() != group.order() || !bits.contains(0) {
            return Err(GroupError::NotSubgroup);
        }
        let members: Vec<usize> = bits.ones().collect();
        for &a in &members {
            for &b in &members {
                if !bits.contains(group.mul(a, b)) {
                    return Err(GroupError::NotSubgroup);
                }
            }
        }
        Ok(Self::from_bits_unchecked(group, bits))
    }

    /// Trusts that `bits` is closed under multiplication.
    pub(crate) fn from_bits_unchecked(group: &Arc<FiniteGroup>, bits: Bits) -> Self {
        let mut gens = Vec::new();
        let mut span = Bits::from_indices(group.order(), [0]);
        for i in bits.ones() {
            if !span.contains(i) {
                gens.push(i as u32);
                span = closure(group, &gens).0;
            }
        }
        let order = bits.count();
        Self {
            group: Arc::clone(group),
            bits,
            order,
            gens,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn generator_permutations(&self) -> Vec<Permutation> {
        self.gens
            .iter()
            .map(|&g| self.group.element(g as usize).clone())
            .collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn same_ambient(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group)
    }

    pub(crate) fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(GroupError::AmbientMismatch)
        }
    }

    /// This subgroup as a standalone permutation group.
    pub fn to_perm_group(&self) -> PermGroup {
        let degree = self.group.degree();
        let gens = if self.gens.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            self.generator_permutations()
        };
        PermGroup::new(degree, gens).expect("generators come from the ambient group")
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        Ok(Self::from_bits_unchecked(&self.group, self.bits.and(&other.bits)))
    }

    /// Subgroup generated by the union.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        if other.is_subgroup_of(self) {
            return Ok(self.clone());
        }
        if self.is_subgroup_of(other) {
            return Ok(other.clone());
        }
        let gens: Vec<usize> = self
            .gens
            .iter()
            .chain(other.gens.iter())
            .map(|&g| g as usize)
            .collect();
        Ok(Self::generated(&self.group, &gens))
    }

    /// The element set `XY` and whether it is a subgroup (`XY = YX`).
    pub fn set_product(&self, other: &Self) -> Result<(Bits, bool)> {
        self.check_ambient(other)?;
        let g = &self.group;
        let mut prod = Bits::new(g.order());
        for x in self.elements() {
            for y in other.elements() {
                prod.insert(g.mul(x, y));
            }
        }
        let mut reverse = Bits::new(g.order());
        for y in other.elements() {
            for x in self.elements() {
                reverse.insert(g.mul(y, x));
            }
        }
        let is_subgroup = prod == reverse;
        Ok((prod, is_subgroup))
    }

    /// `XY = YX`; checks that `XY` is closed under left multiplication by
    /// the generators of `Y`, which forces `XY = ⟨X, Y⟩`.
    pub fn permutes_with(&self, other: &Self) -> Result<bool> {
        self.check_ambient(other)?;
        if self.is_trivial() || other.is_trivial() {
            return Ok(true);
        }
        let g = &self.group;
        let joined = self.order * other.order / self.bits.and(&other.bits).count();
        if !g.order().is_multiple_of(joined) {
            return Ok(false);
        }
        let mut prod = Bits::new(g.order());
        let mut members = Vec::with_capacity(joined);
        for x in self.elements() {
            for y in other.elements() {
                let m = g.mul(x, y);
                if prod.insert(m) {
                    members.push(m);
                }
            }
        }
        for &y in &other.gens {
            for &m in &members {
                if !prod.contains(g.mul(y as usize, m)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `g⁻¹ X g` for an ambient element index `g`.
    pub fn conjugate_by(&self, g: usize) -> Self {
        let bits = Bits::from_indices(
            self.group.order(),
            self.elements().map(|x| self.group.conj(x, g)),
        );
        let gens = self
            .gens
            .iter()
            .map(|&x| self.group.conj(x as usize, g) as u32)
            .collect();
        Self {
            group: Arc::clone(&self.group),
            bits,
            order: self.order,
            gens,
        }
    }

    /// Whether `x` is normalized by every generator of `self`.
    pub fn normalizes(&self, x: &Self) -> Result<bool> {
        self.check_ambient(x)?;
        let g = &self.group;
        Ok(self.gens.iter().all(|&s| {
            x.elements().all(|e| x.contains(g.conj(e, s as usize)))
        }))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.group;
        self.gens.iter().enumerate().all(|(k, &a)| {
            self.gens[k + 1..]
                .iter()
                .all(|&b| g.mul(a as usize, b as usize) == g.mul(b as usize, a as usize))
        })
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|e| self.group.element_order(e) == self.order)
    }

    pub fn centralizer(&self, x: &Self) -> Result<Self> {
        self.check_ambient(x)?;
        let g = &self.group;
        let bits = Bits::from_indices(
            g.order(),
            self.elements().filter(|&e| {
                x.gens
                    .iter()
                    .all(|&s| g.mul(e, s as usize) == g.mul(s as usize, e))
            }),
        );
        Ok(Self::from_bits_unchecked(g, bits))
    }

    pub fn normalizer(&self, x: &Self) -> Result<Self> {
        self.check_ambient(x)?;
        let g = &self.group;
        let bits = Bits::from_indices(
            g.order(),
            self.elements().filter(|&e| {
                x.gens.iter().all(|&s| x.contains(g.conj(s as usize, e)))
            }),
        );
        Ok(Self::from_bits_unchecked(g, bits))
    }

    pub fn centre(&self) -> Self {
        self.centralizer(self).expect("same ambient")
    }

    /// Smallest subgroup of `self` containing `gens` and normalized by `self`.
    pub fn normal_closure(&self, gens: &[usize]) -> Self {
        let g = &self.group;
        let mut current = Self::generated(g, gens);
        loop {
            let mut extra = Vec::new();
            for &s in &self.gens {
                for &x in &current.gens {
                    let c = g.conj(x as usize, s as usize);
                    if !current.contains(c) && !extra.contains(&c) {
                        extra.push(c);
                    }
                }
            }
            if extra.is_empty() {
                return current;
            }
            let all: Vec<usize> = current
                .gens
                .iter()
                .map(|&x| x as usize)
                .chain(extra)
                .collect();
            current = Self::generated(g, &all);
        }
    }

    /// `[self, other]` for `other ≤ self`.
    pub fn commutator_with(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let g = &self.group;
        let mut comms = Vec::new();
        for &a in &self.gens {
            for &b in &other.gens {
                let c = g.commutator(a as usize, b as usize);
                if c != 0 && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        Ok(self.normal_closure(&comms))
    }

    pub fn derived_subgroup(&self) -> Self {
        self.commutator_with(self).expect("same ambient")
    }

    /// `self ≥ self' ≥ self'' ≥ …` up to the first repeated term.
    pub fn derived_series(&self) -> Vec<Self> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = last.derived_subgroup();
            if next.order == last.order {
                return series;
            }
            series.push(next);
        }
    }

    /// `γ₁ = self`, `γ_{i+1} = [self, γ_i]` up to the first repeated term.
    pub fn lower_central_series(&self) -> Vec<Self> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.commutator_with(last).expect("same ambient");
            if next.order == last.order {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_soluble(&self) -> bool {
        self.derived_series().last().expect("nonempty").is_trivial()
    }

    /// Generators printed in cycle notation, for reports.
    pub fn describe(&self) -> String {
        if self.gens.is_empty() {
            return "<()>".to_string();
        }
        let parts: Vec<String> = self
            .generator_permutations()
            .iter()
            .map(|p| p.to_string())
            .collect();
        format!("<{}>", parts.join(", "))
    }
}

impl PartialEq for SubgroupSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_ambient(other) && self.bits == other.bits
    }
}

impl Eq for SubgroupSet {}

impl std::fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubgroupSet(order {}, {})", self.order, self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{Caps, PermGroup};

    fn group(degree: usize, gens: &[&str]) -> Arc<FiniteGroup> {
        let gens = gens.iter().map(|s| Permutation::parse_cycles(degree, s).unwrap()).collect();
        Arc::new(FiniteGroup::new(PermGroup::new(degree, gens).unwrap(), Caps::default()).unwrap())
    }

    fn sub(g: &Arc<FiniteGroup>, gens: &[&str]) -> SubgroupSet {
        let perms: Vec<Permutation> = gens.iter().map(|s| Permutation::parse_cycles(g.degree(), s).unwrap()).collect();
        SubgroupSet::from_permutations(g, &perms).unwrap()
    }

    #[test]
    fn generated_subgroups() {
        let g = group(4, &["(1 2)", "(1 2 3 4)"]);
        assert_eq!(SubgroupSet::whole(&g).order(), 24);
        assert!(SubgroupSet::trivial(&g).is_trivial());
        let v4 = sub(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian() && !v4.is_cyclic());
        assert!(sub(&g, &["(1 2 3 4)"]).is_cyclic());
        assert_eq!(sub(&g, &["(1 2 3)", "(1 2)(3 4)"]).order(), 12);
        assert!(v4.is_subgroup_of(&SubgroupSet::whole(&g)));
    }

    #[test]
    fn from_bits_rejects_non_subgroups() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        let bits = Bits::from_indices(6, [0, 1, 2]);
        let closed = sub(&g, &["(1 2 3)"]);
        assert_eq!(SubgroupSet::from_bits(&g, closed.bits().clone()).unwrap(), closed);
        assert_ne!(&bits, closed.bits());
        assert_eq!(SubgroupSet::from_bits(&g, bits).unwrap_err(), GroupError::NotSubgroup);
        assert!(SubgroupSet::from_bits(&g, Bits::new(6)).is_err());
    }

    #[test]
    fn meet_join_and_products() {
        let g = group(4, &["(1 2)", "(1 2 3 4)"]);
        let a = sub(&g, &["(1 2)"]);
        let b = sub(&g, &["(3 4)"]);
        let c = sub(&g, &["(2 3)"]);
        assert!(a.intersection(&b).unwrap().is_trivial());
        assert_eq!(a.join(&b).unwrap().order(), 4);
        assert_eq!(a.join(&c).unwrap().order(), 6);
        assert!(a.permutes_with(&b).unwrap());
        assert!(!a.permutes_with(&c).unwrap());
        let (ac, is_subgroup) = a.set_product(&c).unwrap();
        assert_eq!((ac.count(), is_subgroup), (4, false));
    }

    #[test]
    fn centralizers_normalizers_and_series() {
        let g = group(4, &["(1 2)", "(1 2 3 4)"]);
        let whole = SubgroupSet::whole(&g);
        let t = sub(&g, &["(1 2)"]);
        assert_eq!(whole.centralizer(&t).unwrap().order(), 4);
        assert_eq!(whole.normalizer(&t).unwrap().order(), 4);
        assert!(whole.centre().is_trivial());
        let derived: Vec<usize> = whole.derived_series().iter().map(|s| s.order()).collect();
        assert_eq!(derived, [24, 12, 4, 1]);
        assert!(whole.is_soluble());
        let lower: Vec<usize> = whole.lower_central_series().iter().map(|s| s.order()).collect();
        assert_eq!(lower, [24, 12]);
        assert_eq!(whole.normal_closure(&[t.generators()[0] as usize]).order(), 24);
    }

    #[test]
    fn conjugation() {
        let g = group(4, &["(1 2)", "(1 2 3 4)"]);
        let t = sub(&g, &["(1 2)"]);
        let h = g.index_of(&Permutation::parse_cycles(4, "(1 2 3 4)").unwrap()).unwrap();
        assert_eq!(t.conjugate_by(h), sub(&g, &["(2 3)"]));
        let v4 = sub(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        assert!(SubgroupSet::whole(&g).normalizes(&v4).unwrap());
        assert!(!SubgroupSet::whole(&g).normalizes(&t).unwrap());
    }

    #[test]
    fn ambients_must_match() {
        let g = group(3, &["(1 2)", "(1 2 3)"]);
        let h = group(3, &["(1 2)", "(1 2 3)"]);
        let a = SubgroupSet::whole(&g);
        let b = SubgroupSet::whole(&h);
        assert_ne!(a, b);
        assert_eq!(a.intersection(&b).unwrap_err(), GroupError::AmbientMismatch);
        assert_eq!(a.describe(), "<(1 2), (1 2 3)>");
    }
}
