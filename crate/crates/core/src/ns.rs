//! NS-permutability and NS-supplements.
//!
//! `B` is an NS-supplement of `A` in `G` when `G = AB` and every normal
//! subgroup `X` of `A` permutes with some Sylow `p`-subgroup of `B`, for each
//! prime `p` dividing `|B|`. Both `B = G` and `B = 1` are admissible.

use crate::arith::prime_divisors;
use crate::error::{GroupError, Result};
use crate::lattice::{Lattice, SylowFamily};
use crate::subgroup::SubgroupSet;

/// A normal subgroup `X` of `A` together with a Sylow `p`-subgroup of `B`
/// that permutes with it.
#[derive(Clone, Debug)]
pub struct PermutabilityWitness {
    pub x_subgroup: SubgroupSet,
    pub prime: u64,
    pub sylow_member: SubgroupSet,
    pub product_order: usize,
}

#[derive(Clone, Debug)]
pub struct NsVerdict {
    pub holds: bool,
    pub supplement: Option<SubgroupSet>,
    pub witnesses: Vec<PermutabilityWitness>,
    /// A normal `X ≤ A` and prime `p` for which no Sylow `p`-subgroup of `B` permutes with `X`.
    pub counterexample: Option<Obstruction>,
    /// `G = AB`.
    pub factorization_ok: bool,
}

/// A normal subgroup of `A` and a prime with no permuting Sylow subgroup of `B`.
pub type Obstruction = (SubgroupSet, u64);

pub fn permutes(x: &SubgroupSet, y: &SubgroupSet) -> Result<bool> {
    x.permutes_with(y)
}

fn witness_in(
    x: &SubgroupSet,
    family: &SylowFamily,
) -> Result<Option<PermutabilityWitness>> {
    for member in &family.members {
        if x.permutes_with(member)? {
            let inter = x.intersection(member)?.order();
            return Ok(Some(PermutabilityWitness {
                x_subgroup: x.clone(),
                prime: family.prime,
                sylow_member: member.clone(),
                product_order: x.order() * member.order() / inter,
            }));
        }
    }
    Ok(None)
}

/// The first Sylow `p`-subgroup of `b` (in lattice order) permuting with `x`.
pub fn sylow_permuting_witness(
    lat: &Lattice,
    x: &SubgroupSet,
    b: &SubgroupSet,
    p: u64,
) -> Result<Option<PermutabilityWitness>> {
    if !(b.order() as u64).is_multiple_of(p) {
        return Err(GroupError::PrimeNotInOrder(p));
    }
    x.check_ambient(b)?;
    let family = lat.sylow_subgroups_of(b, p)?;
    witness_in(x, &family)
}

fn factorizes(lat: &Lattice, a: &SubgroupSet, b: &SubgroupSet) -> Result<bool> {
    let inter = a.intersection(b)?.order();
    Ok(a.order() * b.order() / inter == lat.order())
}

/// Checks condition (2) of an NS-supplement for precomputed normal subgroups
/// of `A`, stopping at the first obstruction unless it holds.
fn check_condition(
    lat: &Lattice,
    normals_of_a: &[SubgroupSet],
    b: &SubgroupSet,
) -> Result<(Vec<PermutabilityWitness>, Option<Obstruction>)> {
    let families = prime_divisors(b.order() as u64)
        .into_iter()
        .map(|p| lat.sylow_subgroups_of(b, p))
        .collect::<Result<Vec<_>>>()?;
    let mut witnesses = Vec::new();
    for x in normals_of_a {
        for family in &families {
            match witness_in(x, family)? {
                Some(w) => witnesses.push(w),
                None => return Ok((witnesses, Some((x.clone(), family.prime)))),
            }
        }
    }
    Ok((witnesses, None))
}

fn normals_of(lat: &Lattice, a: &SubgroupSet) -> Result<Vec<SubgroupSet>> {
    Ok(lat.sublattice(a)?.normal_subgroups())
}

fn verdict_for(
    lat: &Lattice,
    normals_of_a: &[SubgroupSet],
    a: &SubgroupSet,
    b: &SubgroupSet,
) -> Result<NsVerdict> {
    if !factorizes(lat, a, b)? {
        return Ok(NsVerdict {
            holds: false,
            supplement: Some(b.clone()),
            witnesses: Vec::new(),
            counterexample: None,
            factorization_ok: false,
        });
    }
    let (witnesses, counterexample) = check_condition(lat, normals_of_a, b)?;
    Ok(NsVerdict {
        holds: counterexample.is_none(),
        supplement: Some(b.clone()),
        witnesses,
        counterexample,
        factorization_ok: true,
    })
}

/// Decides whether `b` is an NS-supplement of `a` in the lattice's top group.
pub fn verify_ns_supplement(lat: &Lattice, a: &SubgroupSet, b: &SubgroupSet) -> Result<NsVerdict> {
    let normals = normals_of(lat, a)?;
    lat.sublattice(b)?;
    verdict_for(lat, &normals, a, b)
}

/// Searches for an NS-supplement of `a`: `G` first, then by descending order
/// and lattice order, skipping candidates with `AB ≠ G`.
pub fn find_ns_supplement(lat: &Lattice, a: &SubgroupSet) -> Result<Option<NsVerdict>> {
    let normals = normals_of(lat, a)?;
    let n = lat.order();
    let mut candidates: Vec<&SubgroupSet> = lat.subgroups().iter().collect();
    candidates.sort_by(|x, y| y.order().cmp(&x.order()).then_with(|| x.bits().cmp(y.bits())));
    for b in candidates {
        let inter = a.bits().and(b.bits()).count();
        if a.order() * b.order() / inter != n {
            continue;
        }
        let verdict = verdict_for(lat, &normals, a, b)?;
        if verdict.holds {
            return Ok(Some(verdict));
        }
    }
    Ok(None)
}

/// Both conditions of NS-permutability, with `G = AB` not required.
pub fn is_ns_permutable_pair(lat: &Lattice, a: &SubgroupSet, b: &SubgroupSet) -> Result<bool> {
    a.check_ambient(b)?;
    let forward = check_condition(lat, &normals_of(lat, a)?, b)?.1.is_none();
    if !forward {
        return Ok(false);
    }
    Ok(check_condition(lat, &normals_of(lat, b)?, a)?.1.is_none())
}

/// For each `p` dividing `|B|`, a Sylow `p`-subgroup of `B` permuting with
/// `A` itself; requires `B` to be an NS-supplement of `A`.
pub fn lemma1_witnesses(
    lat: &Lattice,
    a: &SubgroupSet,
    b: &SubgroupSet,
) -> Result<Vec<PermutabilityWitness>> {
    if !verify_ns_supplement(lat, a, b)?.holds {
        return Err(GroupError::Precondition(
            "B is not an NS-supplement of A".into(),
        ));
    }
    prime_divisors(b.order() as u64)
        .into_iter()
        .map(|p| {
            sylow_permuting_witness(lat, a, b, p)?.ok_or_else(|| {
                GroupError::Precondition(format!("no Sylow {p}-subgroup of B permutes with A"))
            })
        })
        .collect()
}
