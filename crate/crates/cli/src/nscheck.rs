use anyhow::{anyhow, bail, Result};
use clap::Args;
use grouplab::arith::prime_divisors;
use grouplab::corpus::{resolve_group, CorpusEntry};
use grouplab::ns::{find_ns_supplement, verify_ns_supplement};
use grouplab::{Caps, Lattice, NsVerdict, Permutation, SubgroupSet};

#[derive(Args)]
pub struct NsCheckArgs {
    /// Corpus name, group file or recipe.
    group: String,
    #[command(flatten)]
    selector: Selector,
    /// Check this subgroup as the supplement instead of searching.
    #[arg(long, value_name = "PERMS")]
    against: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Selector {
    /// A Sylow p-subgroup (first in lattice order).
    #[arg(long, value_name = "P")]
    sylow: Option<u64>,
    /// The k-th maximal subgroup in lattice order, counting from 1.
    #[arg(long, value_name = "K")]
    maximal: Option<usize>,
    /// Subgroup generated by `;`-separated permutations.
    #[arg(long, value_name = "PERMS")]
    generated: Option<String>,
}

fn valid_selectors(lat: &Lattice) -> String {
    let primes: Vec<String> = prime_divisors(lat.order() as u64).iter().map(u64::to_string).collect();
    let maximal = lat.maximal_subgroups().len();
    let mut out = Vec::new();
    if !primes.is_empty() {
        out.push(format!("--sylow {}", primes.join("|")));
    }
    if maximal > 0 {
        out.push(format!("--maximal 1..={maximal}"));
    }
    out.push(format!(
        "--generated \"<perm>;<perm>\" (cycles on 1..={})",
        lat.group().degree()
    ));
    out.join(", ")
}

fn generated(lat: &Lattice, spec: &str) -> Result<SubgroupSet> {
    let degree = lat.group().degree();
    let perms = spec
        .split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Permutation::parse_cycles(degree, s))
        .collect::<grouplab::Result<Vec<_>>>()?;
    Ok(SubgroupSet::from_permutations(lat.group(), &perms)?)
}

fn select(lat: &Lattice, sel: &Selector) -> Result<SubgroupSet> {
    let mut detail = String::new();
    let found = if let Some(p) = sel.sylow {
        lat.sylow_subgroups(p)
            .ok()
            .filter(|_| (lat.order() as u64).is_multiple_of(p))
            .map(|f| f.representative().clone())
    } else if let Some(k) = sel.maximal {
        k.checked_sub(1).and_then(|i| lat.maximal_subgroups().into_iter().nth(i))
    } else {
        match generated(lat, sel.generated.as_deref().unwrap_or("")) {
            Ok(s) => Some(s),
            Err(e) => {
                detail = format!(" ({e})");
                None
            }
        }
    };
    found.ok_or_else(|| {
        anyhow!(
            "selector matches no subgroup{detail}; valid selectors: {}",
            valid_selectors(lat)
        )
    })
}

fn print_verdict(v: &NsVerdict) {
    if let Some(b) = &v.supplement {
        println!("B: order {} {}", b.order(), b.describe());
    }
    println!("G = AB: {}", if v.factorization_ok { "yes" } else { "no" });
    for w in &v.witnesses {
        println!(
            "  X order {:<4} p={:<3} Sylow {} |XP| = {}",
            w.x_subgroup.order(),
            w.prime,
            w.sylow_member.describe(),
            w.product_order
        );
    }
    if let Some((x, p)) = &v.counterexample {
        println!(
            "obstruction: X = {} (order {}) permutes with no Sylow {p}-subgroup of B",
            x.describe(),
            x.order()
        );
    }
}

pub fn run(args: &NsCheckArgs, caps: Caps, corpus: &[CorpusEntry]) -> Result<()> {
    let lat = Lattice::of_group(resolve_group(&args.group, corpus)?, caps)?;
    let a = select(&lat, &args.selector)?;
    println!("G: {} of order {}", args.group, lat.order());
    println!("A: order {} {}", a.order(), a.describe());
    if let Some(spec) = &args.against {
        let b = generated(&lat, spec)?;
        let v = verify_ns_supplement(&lat, &a, &b)?;
        println!("NS-supplement: {}", if v.holds { "yes" } else { "no" });
        print_verdict(&v);
        return Ok(());
    }
    match find_ns_supplement(&lat, &a)? {
        Some(v) => {
            println!("supplement found: yes");
            print_verdict(&v);
        }
        None => {
            println!("supplement found: no");
            let v = verify_ns_supplement(&lat, &a, lat.top())?;
            if v.counterexample.is_none() {
                bail!("internal error: no supplement but B = G has no obstruction");
            }
            println!("with B = G:");
            print_verdict(&v);
        }
    }
    Ok(())
}
