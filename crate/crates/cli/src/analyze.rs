use std::collections::BTreeMap;

use anyhow::Result;
use grouplab::corpus::{resolve_group, CorpusEntry};
use grouplab::{Caps, Lattice, StructureProfile};
use serde_json::json;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run(reference: &str, as_json: bool, caps: Caps, corpus: &[CorpusEntry]) -> Result<()> {
    let group = resolve_group(reference, corpus)?;
    let degree = group.degree();
    let lat = Lattice::of_group(group, caps)?;
    let profile = StructureProfile::compute(&lat);
    let maximal: Vec<_> = lat
        .maximal_subgroups()
        .iter()
        .map(|m| json!({ "order": m.order(), "index": lat.order() / m.order(), "normal": lat.is_normal(m).unwrap_or(false) }))
        .collect();

    if as_json {
        let out = json!({
            "group": reference,
            "degree": degree,
            "subgroups": lat.subgroups().len(),
            "normal_subgroups": lat.normal_subgroups().len(),
            "profile": profile,
            "maximal_subgroups": maximal,
        });
        println!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(());
    }

    println!("{reference}: order {}, degree {degree}", profile.order);
    println!(
        "subgroups: {} ({} normal)",
        lat.subgroups().len(),
        lat.normal_subgroups().len()
    );
    println!(
        "cyclic: {}  abelian: {}  nilpotent: {}  supersoluble: {}  soluble: {}",
        yes(profile.cyclic),
        yes(profile.abelian),
        yes(profile.nilpotent),
        yes(profile.supersoluble),
        yes(profile.soluble)
    );
    println!("soluble radical order: {}", profile.soluble_radical_order);
    println!("chief factor orders: {:?}", profile.chief_factor_orders);
    if !profile.primes.is_empty() {
        println!("p   n_p  cyclic  p-nilpotent  p-supersoluble  p-soluble");
        for f in &profile.primes {
            println!(
                "{:<3} {:<4} {:<7} {:<12} {:<15} {}",
                f.prime,
                f.sylow_count,
                yes(f.sylow_cyclic),
                yes(f.p_nilpotent),
                yes(f.p_supersoluble),
                yes(f.p_soluble)
            );
        }
    }
    let mut by_index: BTreeMap<usize, usize> = BTreeMap::new();
    for m in &profile.maximal_index_profile {
        *by_index.entry(m.index).or_default() += 1;
    }
    let indices: Vec<String> = by_index.iter().map(|(i, n)| format!("index {i} x{n}")).collect();
    println!(
        "maximal subgroups: {} ({})",
        profile.maximal_index_profile.len(),
        indices.join(", ")
    );
    Ok(())
}
