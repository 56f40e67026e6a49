//! Structural classifiers. Lattice-based predicates describe the lattice's
//! top group, so a subgroup is classified through [`Lattice::sublattice`].

use serde::Serialize;

use crate::arith::{is_prime, p_part, prime_divisors, prime_power_base};
use crate::error::{GroupError, Result};
use crate::lattice::Lattice;
use crate::subgroup::SubgroupSet;

pub fn is_cyclic(x: &SubgroupSet) -> bool {
    x.is_cyclic()
}

pub fn is_abelian(x: &SubgroupSet) -> bool {
    x.is_abelian()
}

pub fn is_soluble(x: &SubgroupSet) -> bool {
    x.is_soluble()
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(lat: &Lattice) -> bool {
    prime_divisors(lat.order() as u64).into_iter().all(|p| {
        lat.sylow_subgroups(p).expect("prime").count() == 1
    })
}

/// Lower central series reaches the trivial subgroup.
pub fn is_nilpotent_by_central_series(x: &SubgroupSet) -> bool {
    x.lower_central_series().last().expect("nonempty").is_trivial()
}

/// Soluble with every chief factor of prime order.
pub fn is_supersoluble(lat: &Lattice) -> bool {
    lat.top().is_soluble()
        && lat
            .chief_series()
            .factors
            .iter()
            .all(|f| is_prime(f.order as u64))
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(GroupError::NotPrime(p))
    }
}

/// Every chief factor is a `p`-group or a `p'`-group.
pub fn is_p_soluble(lat: &Lattice, p: u64) -> Result<bool> {
    check_prime(p)?;
    Ok(lat
        .chief_series()
        .factors
        .iter()
        .all(|f| f.prime == Some(p) || !(f.order as u64).is_multiple_of(p)))
}

/// `p`-soluble with every `p`-chief factor of order exactly `p`.
pub fn is_p_supersoluble(lat: &Lattice, p: u64) -> Result<bool> {
    check_prime(p)?;
    Ok(lat.chief_series().factors.iter().all(|f| {
        if f.prime == Some(p) {
            f.order as u64 == p
        } else {
            !(f.order as u64).is_multiple_of(p)
        }
    }))
}

/// Has a normal subgroup of order `|G|/p^a`.
pub fn is_p_nilpotent(lat: &Lattice, p: u64) -> Result<bool> {
    check_prime(p)?;
    let n = lat.order() as u64;
    let complement = (n / p_part(n, p)) as usize;
    Ok(lat
        .subgroups()
        .iter()
        .filter(|s| s.order() == complement)
        .any(|s| lat.top().normalizes(s).expect("same ambient")))
}

/// The largest normal soluble subgroup.
pub fn soluble_radical(lat: &Lattice) -> SubgroupSet {
    let mut radical = lat.trivial().clone();
    for n in lat.normal_subgroups() {
        if n.is_soluble() && !n.is_subgroup_of(&radical) {
            radical = radical.join(&n).expect("same ambient");
        }
    }
    radical
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MaximalIndex {
    pub index: usize,
    pub is_prime: bool,
    pub is_prime_power: bool,
}

/// One entry per maximal subgroup, in lattice order.
pub fn maximal_index_profile(lat: &Lattice) -> Vec<MaximalIndex> {
    lat.maximal_subgroups()
        .iter()
        .map(|m| {
            let index = lat.order() / m.order();
            MaximalIndex {
                index,
                is_prime: is_prime(index as u64),
                is_prime_power: prime_power_base(index as u64).is_some(),
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeFlags {
    pub prime: u64,
    pub p_soluble: bool,
    pub p_supersoluble: bool,
    pub p_nilpotent: bool,
    pub sylow_count: usize,
    pub sylow_cyclic: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureProfile {
    pub order: usize,
    pub cyclic: bool,
    pub abelian: bool,
    pub nilpotent: bool,
    pub soluble: bool,
    pub supersoluble: bool,
    pub primes: Vec<PrimeFlags>,
    pub soluble_radical_order: usize,
    #[serde(skip)]
    pub soluble_radical: Option<SubgroupSet>,
    pub maximal_index_profile: Vec<MaximalIndex>,
    pub chief_factor_orders: Vec<usize>,
}

impl StructureProfile {
    pub fn compute(lat: &Lattice) -> Self {
        let top = lat.top();
        let primes = prime_divisors(lat.order() as u64)
            .into_iter()
            .map(|p| {
                let family = lat.sylow_subgroups(p).expect("prime");
                PrimeFlags {
                    prime: p,
                    p_soluble: is_p_soluble(lat, p).expect("prime"),
                    p_supersoluble: is_p_supersoluble(lat, p).expect("prime"),
                    p_nilpotent: is_p_nilpotent(lat, p).expect("prime"),
                    sylow_count: family.count(),
                    sylow_cyclic: family.representative().is_cyclic(),
                }
            })
            .collect();
        let radical = soluble_radical(lat);
        Self {
            order: lat.order(),
            cyclic: is_cyclic(top),
            abelian: is_abelian(top),
            nilpotent: is_nilpotent(lat),
            soluble: is_soluble(top),
            supersoluble: is_supersoluble(lat),
            primes,
            soluble_radical_order: radical.order(),
            soluble_radical: Some(radical),
            maximal_index_profile: maximal_index_profile(lat),
            chief_factor_orders: lat.chief_series().factors.iter().map(|f| f.order).collect(),
        }
    }
}
