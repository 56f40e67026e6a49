//! Quotients `G/N` realized by the action of `G` on the right cosets of `N`.

use std::sync::Arc;

use crate::bits::Bits;
use crate::error::{GroupError, Result};
use crate::finite::FiniteGroup;
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::subgroup::SubgroupSet;

pub struct Quotient {
    source: SubgroupSet,
    kernel: SubgroupSet,
    group: Arc<FiniteGroup>,
    /// Ambient element index to quotient element index; `u32::MAX` outside `source`.
    map: Vec<u32>,
}

/// `G/N` where `G` and `N` are subgroups of one ambient group and `N ⊴ G`.
pub fn quotient_group(g: &SubgroupSet, n: &SubgroupSet) -> Result<Quotient> {
    g.check_ambient(n)?;
    if !n.is_subgroup_of(g) {
        return Err(GroupError::NotSubgroup);
    }
    if !g.normalizes(n)? {
        return Err(GroupError::NotNormal);
    }
    let amb = g.group();
    let mut coset_of = vec![u32::MAX; amb.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != u32::MAX {
            continue;
        }
        let id = reps.len() as u32;
        for m in n.elements() {
            coset_of[amb.mul(m, x)] = id;
        }
        reps.push(x);
    }
    let degree = reps.len();
    let action = |x: usize| -> Permutation {
        let images = reps.iter().map(|&r| coset_of[amb.mul(r, x)]).collect();
        Permutation::from_images(images).expect("right multiplication permutes cosets")
    };
    let mut gens: Vec<Permutation> = g.generators().iter().map(|&s| action(s as usize)).collect();
    if gens.is_empty() {
        gens.push(Permutation::identity(degree));
    }
    let perm = PermGroup::new(degree, gens)?;
    let group = Arc::new(FiniteGroup::new(perm, amb.caps())?);
    let mut map = vec![u32::MAX; amb.order()];
    for x in g.elements() {
        map[x] = group.index_of(&action(x)).expect("image lies in the quotient") as u32;
    }
    Ok(Quotient {
        source: g.clone(),
        kernel: n.clone(),
        group,
        map,
    })
}

impl Quotient {
    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn source(&self) -> &SubgroupSet {
        &self.source
    }

    pub fn kernel(&self) -> &SubgroupSet {
        &self.kernel
    }

    /// Image of an ambient element index, if it lies in the source group.
    pub fn map_element(&self, x: usize) -> Option<usize> {
        match self.map.get(x) {
            Some(&m) if m != u32::MAX => Some(m as usize),
            _ => None,
        }
    }

    /// `AN/N` for a subgroup `A` of the source group.
    pub fn image(&self, a: &SubgroupSet) -> Result<SubgroupSet> {
        self.source.check_ambient(a)?;
        if !a.is_subgroup_of(&self.source) {
            return Err(GroupError::NotSubgroup);
        }
        let bits = Bits::from_indices(
            self.group.order(),
            a.elements().map(|x| self.map[x] as usize),
        );
        Ok(SubgroupSet::from_bits_unchecked(&self.group, bits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Caps;

    fn ambient(degree: usize, gens: &[&str]) -> Arc<FiniteGroup> {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse_cycles(degree, s).unwrap())
            .collect();
        Arc::new(FiniteGroup::new(PermGroup::new(degree, gens).unwrap(), Caps::default()).unwrap())
    }

    fn sub(g: &Arc<FiniteGroup>, gens: &[&str]) -> SubgroupSet {
        let perms: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse_cycles(g.degree(), s).unwrap())
            .collect();
        SubgroupSet::from_permutations(g, &perms).unwrap()
    }

    #[test]
    fn s3_mod_a3() {
        let g = ambient(3, &["(1 2)", "(1 2 3)"]);
        let q = quotient_group(&SubgroupSet::whole(&g), &sub(&g, &["(1 2 3)"])).unwrap();
        assert_eq!(q.group().order(), 2);
    }

    #[test]
    fn s4_mod_v4_is_nonabelian_of_order_6() {
        let g = ambient(4, &["(1 2)", "(1 2 3 4)"]);
        let v4 = sub(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let q = quotient_group(&SubgroupSet::whole(&g), &v4).unwrap();
        assert_eq!(q.group().order(), 6);
        assert!(!SubgroupSet::whole(q.group()).is_abelian());
    }

    #[test]
    fn trivial_kernel_and_full_kernel() {
        let g = ambient(4, &["(1 2)", "(1 2 3 4)"]);
        let whole = SubgroupSet::whole(&g);
        let q = quotient_group(&whole, &SubgroupSet::trivial(&g)).unwrap();
        assert_eq!(q.group().order(), 24);
        let q = quotient_group(&whole, &whole).unwrap();
        assert_eq!(q.group().order(), 1);
        assert_eq!(q.group().degree(), 1);
    }

    #[test]
    fn rejects_non_normal() {
        let g = ambient(3, &["(1 2)", "(1 2 3)"]);
        let err = quotient_group(&SubgroupSet::whole(&g), &sub(&g, &["(1 2)"])).err();
        assert_eq!(err, Some(GroupError::NotNormal));
    }

    #[test]
    fn coset_map_is_a_homomorphism_with_kernel_n() {
        let g = ambient(4, &["(1 2)", "(1 2 3 4)"]);
        let v4 = sub(&g, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let q = quotient_group(&SubgroupSet::whole(&g), &v4).unwrap();
        let qg = q.group();
        for x in 0..g.order() {
            for y in 0..g.order() {
                let lhs = q.map_element(g.mul(x, y)).unwrap();
                let rhs = qg.mul(q.map_element(x).unwrap(), q.map_element(y).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
        let kernel: Vec<usize> = (0..g.order()).filter(|&x| q.map_element(x) == Some(0)).collect();
        assert_eq!(kernel, v4.elements().collect::<Vec<_>>());
        let a4 = sub(&g, &["(1 2 3)", "(2 3 4)"]);
        assert_eq!(q.image(&a4).unwrap().order(), 3);
    }
}
