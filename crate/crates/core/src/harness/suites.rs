//! One function per suite. Every entry is an implication: `hypothesis`
//! states that the result applies, `conclusion` that its claim was observed.
//! Fixed fact checks use `hypothesis = true`.

use serde_json::{json, Value};

use super::{subgroup_json, Analysis, Entry, Harness};
use crate::arith::{is_prime, prime_divisors};
use crate::error::Result;
use crate::lattice::Lattice;
use crate::ns::{find_ns_supplement, lemma1_witnesses, verify_ns_supplement, NsVerdict};
use crate::predicates::{
    is_abelian, is_cyclic, is_nilpotent, is_nilpotent_by_central_series, is_p_nilpotent,
    is_p_soluble, is_p_supersoluble, is_soluble, is_supersoluble, maximal_index_profile,
    soluble_radical,
};
use crate::quotient::quotient_group;
use crate::subgroup::SubgroupSet;

fn supplement_json(v: &Option<NsVerdict>) -> Value {
    v.as_ref()
        .and_then(|v| v.supplement.as_ref())
        .map_or(Value::Null, subgroup_json)
}

fn obstruction_json(v: &NsVerdict) -> Value {
    v.counterexample
        .as_ref()
        .map_or(Value::Null, |(x, p)| json!({ "x": subgroup_json(x), "prime": p }))
}

fn primes_of(lat: &Lattice) -> Vec<u64> {
    prime_divisors(lat.order() as u64)
}

pub fn theorem1(h: &Harness) -> Vec<Entry> {
    h.per_group(|name, a| {
        let lat = &a.lattice;
        let mut out = Vec::new();
        for case in a.sylow_cases()? {
            let p = case.prime;
            let supplemented = case.supplement.is_some();
            let three_soluble = if p == 3 { Some(is_p_soluble(lat, 3)?) } else { None };
            let hypothesis = supplemented && three_soluble != Some(false);
            let conclusion = is_p_supersoluble(lat, p)?;
            let mut cert = json!({
                "prime": p,
                "sylow": subgroup_json(case.family.representative()),
                "ns_supplement": supplement_json(&case.supplement),
                "p_supersoluble": conclusion,
            });
            if let Some(s) = three_soluble {
                cert["three_soluble"] = json!(s);
            }
            if supplemented && !hypothesis {
                cert["note"] = json!("Sylow subgroup NS-supplemented but G is not 3-soluble");
            }
            out.push(Entry::implication(name, format!("p={p}"), hypothesis, conclusion, cert));
        }
        Ok(out)
    })
}

pub fn corollary(h: &Harness) -> Vec<Entry> {
    h.per_group(|name, a| {
        let mut hypothesis = true;
        let mut primes = Vec::new();
        for case in a.sylow_cases()? {
            let cyclic = case.family.representative().is_cyclic();
            let supplemented = case.supplement.is_some();
            hypothesis &= cyclic || supplemented;
            primes.push(json!({
                "prime": case.prime,
                "cyclic": cyclic,
                "ns_supplemented": supplemented,
            }));
        }
        let conclusion = is_supersoluble(&a.lattice);
        let cert = json!({ "sylow": primes, "supersoluble": conclusion });
        Ok(vec![Entry::implication(name, "non-cyclic Sylow subgroups", hypothesis, conclusion, cert)])
    })
}

pub fn theorem2(h: &Harness) -> Vec<Entry> {
    let mut out = h.per_group(|name, a| {
        let lat = &a.lattice;
        let cases = a.maximal_cases()?;
        let mut orders: Vec<usize> = cases.iter().map(|c| c.subgroup.order()).collect();
        orders.sort_unstable();
        let failing = cases.iter().find(|c| c.supplement.is_none());
        let hypothesis = failing.is_none();
        let conclusion = lat.top().is_soluble();
        let mut cert = json!({
            "maximal_orders": orders,
            "ns_supplemented": cases.iter().filter(|c| c.supplement.is_some()).count(),
            "soluble": conclusion,
        });
        if let Some(c) = failing {
            let v = verify_ns_supplement(lat, &c.subgroup, lat.top())?;
            cert["unsupplemented"] = json!({
                "subgroup": subgroup_json(&c.subgroup),
                "obstruction_with_b_equal_g": obstruction_json(&v),
            });
        }
        Ok(vec![Entry::implication(name, "all maximal subgroups", hypothesis, conclusion, cert)])
    });
    out.extend(h.builtin_psl27().run(|name, a| {
        let lat = &a.lattice;
        let hall = lat.hall_subgroups(&[2, 7]);
        let h21 = lat.maximal_subgroups().into_iter().find(|m| m.order() == 21);
        let h21_supplemented = match &h21 {
            Some(m) => Some(find_ns_supplement(lat, m)?.is_some()),
            None => None,
        };
        let conclusion = hall.is_empty() && h21_supplemented == Some(false);
        let cert = json!({
            "hall_2_7_count": hall.len(),
            "order21_maximal": h21.as_ref().map_or(Value::Null, subgroup_json),
            "order21_ns_supplemented": h21_supplemented,
        });
        Ok(vec![Entry::implication(name, "proof facts", true, conclusion, cert)])
    }));
    out
}

/// Rechecks that `member` is a Sylow subgroup of `b` whose product with `x`
/// is a subgroup of the recorded order, via the set product.
fn witness_sound(lat: &Lattice, x: &SubgroupSet, b: &SubgroupSet, p: u64, member: &SubgroupSet, order: usize) -> Result<bool> {
    let family = lat.sylow_subgroups_of(b, p)?;
    let (bits, is_subgroup) = x.set_product(member)?;
    Ok(family.members.contains(member) && is_subgroup && bits.count() == order)
}

pub fn lemma1(h: &Harness) -> Vec<Entry> {
    h.per_group(|name, a| {
        let lat = &a.lattice;
        let pairs = a.verified_pairs()?;
        let mut certs = Vec::new();
        let mut ok = true;
        for pair in &pairs {
            let verdict = verify_ns_supplement(lat, &pair.a, &pair.b)?;
            let mut sound = verdict.holds && verdict.factorization_ok;
            for w in &verdict.witnesses {
                sound &= pair.a.normalizes(&w.x_subgroup)?
                    && witness_sound(lat, &w.x_subgroup, &pair.b, w.prime, &w.sylow_member, w.product_order)?;
            }
            let (witnesses, lemma_ok) = match lemma1_witnesses(lat, &pair.a, &pair.b) {
                Ok(ws) => {
                    let mut good = true;
                    for w in &ws {
                        good &= witness_sound(lat, &pair.a, &pair.b, w.prime, &w.sylow_member, w.product_order)?;
                    }
                    let list: Vec<Value> = ws
                        .iter()
                        .map(|w| json!({ "prime": w.prime, "product_order": w.product_order }))
                        .collect();
                    (Value::Array(list), good)
                }
                Err(e) => (json!(e.to_string()), false),
            };
            ok &= sound && lemma_ok;
            certs.push(json!({
                "a": pair.label,
                "a_order": pair.a.order(),
                "b_order": pair.b.order(),
                "verdict_sound": sound,
                "witnesses": witnesses,
            }));
        }
        let case = format!("{} verified pairs", pairs.len());
        Ok(vec![Entry::implication(name, case, !pairs.is_empty(), ok, json!({ "pairs": certs }))])
    })
}

pub fn lemma2(h: &Harness) -> Vec<Entry> {
    h.per_group(|name, a| {
        let pairs = a.verified_pairs()?;
        let quotients = if pairs.is_empty() { &[][..] } else { a.quotients()? };
        let mut checks = 0usize;
        let mut failures = Vec::new();
        for pair in &pairs {
            for q in quotients {
                let ia = q.quotient.image(&pair.a)?;
                let ib = q.quotient.image(&pair.b)?;
                checks += 1;
                let v = verify_ns_supplement(&q.lattice, &ia, &ib)?;
                if !v.holds {
                    failures.push(json!({
                        "a": pair.label,
                        "kernel_order": q.quotient.kernel().order(),
                        "factorization_ok": v.factorization_ok,
                        "obstruction": obstruction_json(&v),
                    }));
                }
            }
        }
        let cert = json!({
            "pairs": pairs.len(),
            "normal_subgroups": quotients.len(),
            "quotient_checks": checks,
            "failures": failures,
        });
        let case = format!("{} pairs x {} quotients", pairs.len(), quotients.len());
        Ok(vec![Entry::implication(name, case, !pairs.is_empty(), failures.is_empty(), cert)])
    })
}

pub fn tk(h: &Harness) -> Vec<Entry> {
    h.per_group(|name, a| {
        let lat = &a.lattice;
        let primes = primes_of(lat);
        let mut out = Vec::new();
        for &p in primes.iter().filter(|&&p| p != 3) {
            let missing: Vec<u64> = primes
                .iter()
                .copied()
                .filter(|&r| r != p && lat.hall_subgroups(&[p.min(r), p.max(r)]).is_empty())
                .collect();
            let conclusion = is_p_soluble(lat, p)?;
            let cert = json!({ "missing_hall_partners": missing, "p_soluble": conclusion });
            out.push(Entry::implication(name, format!("p={p}"), missing.is_empty(), conclusion, cert));
        }
        Ok(out)
    })
}

pub fn gur(h: &Harness) -> Vec<Entry> {
    h.per_group(|name, a| {
        let lat = &a.lattice;
        let profile = maximal_index_profile(lat);
        let hypothesis = profile.iter().all(|m| m.is_prime_power);
        let mut indices: Vec<usize> = profile.iter().map(|m| m.index).collect();
        indices.sort_unstable();
        indices.dedup();
        let radical = soluble_radical(lat);
        let (branch, conclusion) = if &radical == lat.top() {
            ("G = S(G)", true)
        } else {
            let q = quotient_group(lat.top(), &radical)?;
            let simple = Lattice::new(q.group()).normal_subgroups().len() == 2;
            if q.group().order() == 168 && simple {
                ("G/S(G) simple of order 168", true)
            } else {
                ("neither", false)
            }
        };
        let cert = json!({
            "maximal_indices": indices,
            "soluble_radical_order": radical.order(),
            "branch": branch,
        });
        Ok(vec![Entry::implication(name, "prime-power maximal indices", hypothesis, conclusion, cert)])
    })
}

pub fn zassenhaus(h: &Harness) -> Vec<Entry> {
    h.per_group(|name, a| {
        let cyclic: Vec<Value> = a
            .sylow_cases()?
            .iter()
            .map(|c| json!({ "prime": c.prime, "cyclic": c.family.representative().is_cyclic() }))
            .collect();
        let hypothesis = cyclic.iter().all(|c| c["cyclic"] == json!(true));
        let conclusion = is_supersoluble(&a.lattice);
        let cert = json!({ "sylow": cyclic, "supersoluble": conclusion });
        Ok(vec![Entry::implication(name, "all Sylow subgroups cyclic", hypothesis, conclusion, cert)])
    })
}

pub fn example1(h: &Harness) -> Vec<Entry> {
    h.builtin_psl27().run(|name, a| {
        let lat = &a.lattice;
        let p3 = lat.sylow_subgroups(3)?.representative().clone();
        let verdict = verify_ns_supplement(lat, &p3, lat.top())?;
        let witnesses: Vec<(u64, usize)> = if verdict.holds {
            lemma1_witnesses(lat, &p3, lat.top())?
                .iter()
                .map(|w| (w.prime, w.product_order))
                .collect()
        } else {
            Vec::new()
        };
        let three_soluble = is_p_soluble(lat, 3)?;
        let three_supersoluble = is_p_supersoluble(lat, 3)?;
        let conclusion = verdict.holds
            && witnesses == [(2, 24), (3, 3), (7, 21)]
            && !three_soluble
            && !three_supersoluble;
        let cert = json!({
            "order": lat.order(),
            "sylow3": subgroup_json(&p3),
            "supplement_is_g": verdict.holds,
            "witness_product_orders": witnesses
                .iter()
                .map(|(p, o)| json!({ "prime": p, "product_order": o }))
                .collect::<Vec<_>>(),
            "three_soluble": three_soluble,
            "three_supersoluble": three_supersoluble,
        });
        Ok(vec![Entry::implication(name, "Sylow 3-subgroup with B = G", true, conclusion, cert)])
    })
}

pub fn example2(h: &Harness) -> Vec<Entry> {
    h.builtin_paper72().run(|name, a| {
        let lat = &a.lattice;
        let cases = a.maximal_cases()?;
        let mut orders: Vec<usize> = cases.iter().map(|c| c.subgroup.order()).collect();
        orders.sort_unstable();
        let all_supplemented = cases.iter().all(|c| c.supplement.is_some());
        let m1 = cases.iter().find(|c| c.subgroup.order() == 36).map(|c| &c.subgroup);
        let m1_supersoluble = match m1 {
            Some(m) => Some(is_supersoluble(&lat.sublattice(m)?)),
            None => None,
        };
        let soluble = lat.top().is_soluble();
        let supersoluble = is_supersoluble(lat);
        let sylow3 = a.sylow_cases()?.iter().find(|c| c.prime == 3);
        let sylow3_cyclic = sylow3.map(|c| c.family.representative().is_cyclic());
        let sylow3_supplemented = sylow3.map(|c| c.supplement.is_some());
        let expected: Vec<usize> = [vec![8; 9], vec![36]].concat();
        let conclusion = lat.order() == 72
            && orders == expected
            && all_supplemented
            && m1_supersoluble == Some(false)
            && soluble
            && !supersoluble
            && sylow3_cyclic == Some(false)
            && sylow3_supplemented == Some(false);
        let cert = json!({
            "order": lat.order(),
            "maximal_orders": orders,
            "all_maximal_ns_supplemented": all_supplemented,
            "m1": m1.map_or(Value::Null, subgroup_json),
            "m1_supersoluble": m1_supersoluble,
            "soluble": soluble,
            "supersoluble": supersoluble,
            "sylow3_cyclic": sylow3_cyclic,
            "sylow3_ns_supplemented": sylow3_supplemented,
        });
        Ok(vec![Entry::implication(name, "all maximal subgroups NS-supplemented", true, conclusion, cert)])
    })
}

fn fact(name: &str, case: &str, holds: bool, cert: Value) -> Entry {
    Entry::implication(name, case, true, holds, cert)
}

fn product_identity(lat: &Lattice) -> Result<(usize, Vec<Value>)> {
    let subs = lat.subgroups();
    let mut failures = Vec::new();
    for x in subs {
        for y in subs {
            let (xy, is_subgroup) = x.set_product(y)?;
            let (yx, _) = y.set_product(x)?;
            let inter = x.intersection(y)?.order();
            if xy.count() * inter != x.order() * y.order()
                || is_subgroup != (xy == yx)
                || is_subgroup != x.permutes_with(y)?
            {
                failures.push(json!({ "x": subgroup_json(x), "y": subgroup_json(y) }));
            }
        }
    }
    Ok((subs.len() * subs.len(), failures))
}

fn sylow_checks(lat: &Lattice, a: &Analysis) -> Result<(bool, Value)> {
    let n = lat.order();
    let mut ok = true;
    let mut counts = Vec::new();
    for case in a.sylow_cases()? {
        let p = case.prime;
        let np = case.family.count();
        let rep = case.family.representative();
        let class_ok = lat
            .top()
            .elements()
            .map(|g| rep.conjugate_by(g))
            .all(|c| case.family.members.contains(&c));
        let congruent = np as u64 % p == 1 && (n / rep.order()).is_multiple_of(np);
        ok &= congruent && class_ok;
        counts.push(json!({ "prime": p, "count": np, "congruent": congruent, "single_class": class_ok }));
    }
    Ok((ok, Value::Array(counts)))
}

fn conjugation_invariance(lat: &Lattice, a: &Analysis) -> Result<(bool, Value)> {
    let mut ok = true;
    let mut out = Vec::new();
    for case in a.sylow_cases()? {
        let expected = case.supplement.is_some();
        let mut agree = true;
        for m in &case.family.members[1..] {
            agree &= find_ns_supplement(lat, m)?.is_some() == expected;
        }
        ok &= agree;
        out.push(json!({ "prime": case.prime, "ns_supplemented": expected, "all_members_agree": agree }));
    }
    Ok((ok, Value::Array(out)))
}

/// Each maximal subgroup is proper and lies in no proper subgroup but itself.
fn maximality(lat: &Lattice) -> (bool, Value) {
    let maximal = lat.maximal_subgroups();
    let ok = maximal.iter().all(|m| {
        m != lat.top()
            && lat
                .subgroups()
                .iter()
                .filter(|s| m.is_subgroup_of(s))
                .all(|s| s == m || s == lat.top())
    });
    let proper_tops = lat
        .subgroups()
        .iter()
        .filter(|s| *s != lat.top())
        .filter(|s| {
            lat.subgroups()
                .iter()
                .all(|t| t == *s || t == lat.top() || !s.is_subgroup_of(t))
        })
        .count();
    let ok = ok && (lat.order() == 1 || proper_tops == maximal.len());
    (ok, json!({ "maximal": maximal.len() }))
}

/// Rescans every Sylow subgroup of `B` for each recorded obstruction and
/// rechecks every recorded witness with fresh set products.
fn verdict_soundness(lat: &Lattice, a: &Analysis) -> Result<(bool, Value)> {
    let mut ok = true;
    let mut obstructions = 0usize;
    let mut witnesses = 0usize;
    let sylow = a.sylow_cases()?.iter().map(|c| (c.family.representative(), &c.supplement));
    let maximal = a.maximal_cases()?.iter().map(|c| (&c.subgroup, &c.supplement));
    for (sub, found) in sylow.chain(maximal) {
        let verdict = match found {
            Some(v) => v.clone(),
            None => verify_ns_supplement(lat, sub, lat.top())?,
        };
        let b = verdict.supplement.as_ref().unwrap_or(lat.top());
        for w in &verdict.witnesses {
            witnesses += 1;
            ok &= witness_sound(lat, &w.x_subgroup, b, w.prime, &w.sylow_member, w.product_order)?;
        }
        if let Some((x, p)) = &verdict.counterexample {
            obstructions += 1;
            for member in lat.sylow_subgroups_of(b, *p)?.members {
                ok &= !x.set_product(&member)?.1;
            }
        }
        ok &= found.is_some() == verdict.holds;
    }
    Ok((ok, json!({ "witnesses": witnesses, "obstructions": obstructions })))
}

fn implication_chain(lat: &Lattice) -> Result<(bool, Value)> {
    let top = lat.top();
    let flags = [
        is_cyclic(top),
        is_abelian(top),
        is_nilpotent(lat),
        is_supersoluble(lat),
        is_soluble(top),
    ];
    let mut ok = flags.windows(2).all(|w| !w[0] || w[1]);
    let mut per_prime = Vec::new();
    for p in primes_of(lat) {
        let nilpotent = is_p_nilpotent(lat, p)?;
        let supersoluble = is_p_supersoluble(lat, p)?;
        let soluble = is_p_soluble(lat, p)?;
        ok &= (!flags[2] || nilpotent)
            && (!flags[3] || supersoluble)
            && (!flags[4] || soluble)
            && (!supersoluble || soluble)
            && (!nilpotent || soluble);
        per_prime.push(json!({
            "prime": p,
            "p_nilpotent": nilpotent,
            "p_supersoluble": supersoluble,
            "p_soluble": soluble,
        }));
    }
    let cert = json!({
        "cyclic": flags[0],
        "abelian": flags[1],
        "nilpotent": flags[2],
        "supersoluble": flags[3],
        "soluble": flags[4],
        "primes": per_prime,
    });
    Ok((ok, cert))
}

fn series_checks(lat: &Lattice) -> Result<(bool, Value)> {
    let chief = lat.chief_series();
    let mut ok = chief.factors.iter().map(|f| f.order).product::<usize>() == lat.order();
    for term in &chief.chain {
        ok &= lat.is_normal(term)?;
    }
    let radical = soluble_radical(lat);
    ok &= lat.is_normal(&radical)? && radical.is_soluble();
    for n in lat.normal_subgroups() {
        ok &= !n.is_soluble() || n.is_subgroup_of(&radical);
    }
    let orders: Vec<usize> = chief.factors.iter().map(|f| f.order).collect();
    Ok((ok, json!({ "chief_factor_orders": orders, "soluble_radical_order": radical.order() })))
}

pub fn properties(h: &Harness) -> Vec<Entry> {
    let pairwise_max = h.options().pairwise_max_order;
    h.per_group(|name, a| {
        let lat = &a.lattice;
        let mut out = Vec::new();
        if lat.order() <= pairwise_max {
            let (pairs, failures) = product_identity(lat)?;
            let cert = json!({ "pairs": pairs, "failures": failures });
            out.push(fact(name, "product-order identity", failures.is_empty(), cert));
        }
        let (ok, cert) = sylow_checks(lat, a)?;
        out.push(fact(name, "Sylow congruence and conjugacy", ok, cert));
        let (ok, cert) = conjugation_invariance(lat, a)?;
        out.push(fact(name, "NS-supplement conjugation invariance", ok, cert));

        let profile = maximal_index_profile(lat);
        let prime_indices = profile.iter().all(|m| m.is_prime && is_prime(m.index as u64));
        let supersoluble = is_supersoluble(lat);
        let cert = json!({ "supersoluble": supersoluble, "all_maximal_indices_prime": prime_indices });
        out.push(fact(name, "supersoluble iff prime maximal indices", supersoluble == prime_indices, cert));

        let (ok, cert) = implication_chain(lat)?;
        out.push(fact(name, "predicate implication chain", ok, cert));

        let by_sylow = is_nilpotent(lat);
        let by_series = is_nilpotent_by_central_series(lat.top());
        let cert = json!({ "normal_sylows": by_sylow, "lower_central_series": by_series });
        out.push(fact(name, "nilpotency routes agree", by_sylow == by_series, cert));

        let (ok, cert) = maximality(lat);
        out.push(fact(name, "maximal subgroups are maximal", ok, cert));
        let (ok, cert) = verdict_soundness(lat, a)?;
        out.push(fact(name, "NS verdicts re-checked", ok, cert));

        let (ok, cert) = series_checks(lat)?;
        out.push(fact(name, "chief series and soluble radical", ok, cert));
        Ok(out)
    })
}
