//! Full subgroup lattices of small groups and the objects derived from them.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use crate::arith::{factorize, is_prime, p_part, prime_power_base};
use crate::bits::Bits;
use crate::error::{GroupError, Result};
use crate::finite::FiniteGroup;
use crate::group::{Caps, PermGroup};
use crate::subgroup::SubgroupSet;

/// Every subgroup of `top`, sorted by `(order, bitset)`.
#[derive(Clone, Debug)]
pub struct Lattice {
    top: SubgroupSet,
    subgroups: Vec<SubgroupSet>,
}

/// All Sylow `p`-subgroups of some group.
#[derive(Clone, Debug)]
pub struct SylowFamily {
    pub prime: u64,
    pub members: Vec<SubgroupSet>,
}

impl SylowFamily {
    /// `n_p`.
    pub fn count(&self) -> usize {
        self.members.len()
    }

    pub fn representative(&self) -> &SubgroupSet {
        &self.members[0]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChiefFactor {
    pub order: usize,
    /// `Some(p)` when the factor is a `p`-group.
    pub prime: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct ChiefSeries {
    /// Descending from the group to the trivial subgroup.
    pub chain: Vec<SubgroupSet>,
    /// `chain[i] / chain[i + 1]`.
    pub factors: Vec<ChiefFactor>,
}

/// Cyclic extension: every subgroup is reached from the trivial one by
/// repeatedly joining cyclic subgroups of prime-power order, processed in
/// layers of increasing order.
fn enumerate(group: &Arc<FiniteGroup>) -> Vec<SubgroupSet> {
    let mut cyclic_seen = HashSet::new();
    let mut cyclics = Vec::new();
    for e in 1..group.order() {
        if prime_power_base(group.element_order(e) as u64).is_none() {
            continue;
        }
        let z = SubgroupSet::generated(group, &[e]);
        if cyclic_seen.insert(z.bits().clone()) {
            cyclics.push(z);
        }
    }

    let mut seen: HashSet<Bits> = HashSet::new();
    let mut layers: BTreeMap<usize, Vec<SubgroupSet>> = BTreeMap::new();
    let trivial = SubgroupSet::trivial(group);
    seen.insert(trivial.bits().clone());
    layers.entry(1).or_default().push(trivial);

    let mut all = Vec::new();
    while let Some((_, layer)) = layers.pop_first() {
        for h in &layer {
            for z in &cyclics {
                if z.is_subgroup_of(h) {
                    continue;
                }
                let j = h.join(z).expect("same ambient");
                if seen.insert(j.bits().clone()) {
                    layers.entry(j.order()).or_default().push(j);
                }
            }
        }
        all.extend(layer);
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.bits().cmp(b.bits())));
    all
}

impl Lattice {
    /// Lattice of the whole ambient group.
    pub fn new(group: &Arc<FiniteGroup>) -> Self {
        let subgroups = enumerate(group);
        let top = subgroups.last().expect("group itself").clone();
        Self { top, subgroups }
    }

    /// Builds the enumerated group and its lattice, enforcing `caps`.
    pub fn of_group(perm: PermGroup, caps: Caps) -> Result<Self> {
        Ok(Self::new(&Arc::new(FiniteGroup::new(perm, caps)?)))
    }

    /// Lattice of a subgroup, sharing the ambient group.
    pub fn sublattice(&self, h: &SubgroupSet) -> Result<Self> {
        self.top.check_ambient(h)?;
        if !h.is_subgroup_of(&self.top) {
            return Err(GroupError::NotSubgroup);
        }
        Ok(Self {
            top: h.clone(),
            subgroups: self.subgroups_of(h).cloned().collect(),
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.top.group()
    }

    pub fn top(&self) -> &SubgroupSet {
        &self.top
    }

    pub fn order(&self) -> usize {
        self.top.order()
    }

    pub fn trivial(&self) -> &SubgroupSet {
        &self.subgroups[0]
    }

    pub fn subgroups(&self) -> &[SubgroupSet] {
        &self.subgroups
    }

    /// Subgroups of `h` (for `h` in this lattice) in lattice order.
    pub fn subgroups_of<'a>(&'a self, h: &'a SubgroupSet) -> impl Iterator<Item = &'a SubgroupSet> {
        self.subgroups
            .iter()
            .filter(move |s| h.order().is_multiple_of(s.order()) && s.is_subgroup_of(h))
    }

    /// Looks up the lattice member with the same elements as `x`.
    pub fn find(&self, x: &SubgroupSet) -> Option<&SubgroupSet> {
        self.subgroups.iter().find(|s| s == &x)
    }

    fn check_member(&self, x: &SubgroupSet) -> Result<()> {
        self.top.check_ambient(x)?;
        if x.is_subgroup_of(&self.top) {
            Ok(())
        } else {
            Err(GroupError::NotSubgroup)
        }
    }

    pub fn is_normal(&self, x: &SubgroupSet) -> Result<bool> {
        self.check_member(x)?;
        self.top.normalizes(x)
    }

    pub fn normal_subgroups(&self) -> Vec<SubgroupSet> {
        self.subgroups
            .iter()
            .filter(|s| self.top.normalizes(s).expect("same ambient"))
            .cloned()
            .collect()
    }

    /// Proper subgroups contained in no other proper subgroup.
    pub fn maximal_subgroups(&self) -> Vec<SubgroupSet> {
        let n = self.order();
        let proper: Vec<&SubgroupSet> = self.subgroups.iter().filter(|s| s.order() < n).collect();
        proper
            .iter()
            .filter(|h| {
                !proper.iter().any(|k| {
                    k.order() > h.order() && k.order() % h.order() == 0 && h.is_subgroup_of(k)
                })
            })
            .map(|h| (*h).clone())
            .collect()
    }

    pub fn minimal_normal_subgroups(&self) -> Vec<SubgroupSet> {
        let normals: Vec<SubgroupSet> = self
            .normal_subgroups()
            .into_iter()
            .filter(|s| !s.is_trivial())
            .collect();
        normals
            .iter()
            .filter(|n| {
                !normals
                    .iter()
                    .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
            })
            .cloned()
            .collect()
    }

    pub fn sylow_subgroups(&self, p: u64) -> Result<SylowFamily> {
        self.sylow_subgroups_of(&self.top, p)
    }

    /// Sylow `p`-subgroups of a member `b` of this lattice. When `p` does not
    /// divide `|b|` the family is the trivial subgroup alone.
    pub fn sylow_subgroups_of(&self, b: &SubgroupSet, p: u64) -> Result<SylowFamily> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        self.check_member(b)?;
        let target = p_part(b.order() as u64, p) as usize;
        let members = self
            .subgroups_of(b)
            .filter(|s| s.order() == target)
            .cloned()
            .collect();
        Ok(SylowFamily { prime: p, members })
    }

    /// Subgroups whose order is the full `primes`-part of the group order.
    pub fn hall_subgroups(&self, primes: &[u64]) -> Vec<SubgroupSet> {
        let target: u64 = factorize(self.order() as u64)
            .into_iter()
            .filter(|(p, _)| primes.contains(p))
            .map(|(p, e)| p.pow(e))
            .product();
        self.subgroups
            .iter()
            .filter(|s| s.order() as u64 == target)
            .cloned()
            .collect()
    }

    pub fn derived_series(&self) -> Vec<SubgroupSet> {
        self.top.derived_series()
    }

    /// Built upward from the trivial subgroup: each step adds the
    /// lexicographically least normal subgroup minimal above the current term,
    /// i.e. the preimage of a minimal normal subgroup of the quotient.
    pub fn chief_series(&self) -> ChiefSeries {
        let normals = self.normal_subgroups();
        let mut chain = vec![self.trivial().clone()];
        loop {
            let current = chain.last().expect("nonempty");
            if current.order() == self.order() {
                break;
            }
            let above: Vec<&SubgroupSet> = normals
                .iter()
                .filter(|n| n.order() > current.order() && current.is_subgroup_of(n))
                .collect();
            let next = above
                .iter()
                .filter(|n| {
                    !above
                        .iter()
                        .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
                })
                .min_by(|a, b| a.bits().cmp(b.bits()))
                .expect("the group itself lies above any proper normal subgroup");
            chain.push((*next).clone());
        }
        chain.reverse();
        let factors = chain
            .windows(2)
            .map(|w| {
                let order = w[0].order() / w[1].order();
                ChiefFactor {
                    order,
                    prime: prime_power_base(order as u64),
                }
            })
            .collect();
        ChiefSeries { chain, factors }
    }
}
