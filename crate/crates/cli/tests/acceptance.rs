//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach stdout.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use grouplab::corpus::{default_manifest, paper72, psl27};
use grouplab::ns::{find_ns_supplement, lemma1_witnesses, verify_ns_supplement};
use grouplab::predicates::{is_p_soluble, is_supersoluble};
use grouplab::{Caps, Lattice, PermGroup, Permutation, SubgroupSet};
use serde_json::Value;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration, what: &str) -> Check {
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:.2?}, limit {limit:?}");
    Ok(())
}

// ---------------------------------------------------------------- oracles

/// All elements of the group generated by `gens`, by breadth-first closure.
fn brute_elements(gens: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(gens[0].degree());
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g).unwrap();
            if seen.insert(y.clone()) {
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    out
}

struct BruteGroup {
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    mul: Vec<Vec<usize>>,
}

impl BruteGroup {
    fn new(g: &PermGroup) -> Self {
        let elements = brute_elements(g.generators());
        let index: HashMap<Permutation, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mul = elements
            .iter()
            .map(|x| elements.iter().map(|y| index[&x.compose(y).unwrap()]).collect())
            .collect();
        Self { elements, index, mul }
    }

    fn closure(&self, base: &[usize], extra: usize) -> Vec<usize> {
        let gens: Vec<usize> = base.iter().copied().chain([extra]).collect();
        let mut seen = vec![false; self.elements.len()];
        seen[0] = true;
        let mut out = vec![0];
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in &gens {
                let y = self.mul[x][g];
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Every subgroup, grown one element at a time from the trivial group.
    fn subgroups(&self) -> BTreeSet<Vec<usize>> {
        let mut found = BTreeSet::from([vec![0]]);
        let mut queue = VecDeque::from([vec![0]]);
        while let Some(h) = queue.pop_front() {
            for g in 0..self.elements.len() {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let k = self.closure(&h, g);
                if found.insert(k.clone()) {
                    queue.push_back(k);
                }
            }
        }
        found
    }

    fn indices_of(&self, s: &SubgroupSet) -> Vec<usize> {
        let g = s.group();
        let mut v: Vec<usize> = s.elements().map(|i| self.index[g.element(i)]).collect();
        v.sort_unstable();
        v
    }

    fn conjugacy_class_sizes(&self) -> Vec<usize> {
        let n = self.elements.len();
        let inv: Vec<usize> = (0..n).map(|x| (0..n).find(|&y| self.mul[x][y] == 0).unwrap()).collect();
        let mut done = vec![false; n];
        let mut sizes = Vec::new();
        for x in 0..n {
            if done[x] {
                continue;
            }
            let mut size = 0;
            for (g, &g_inv) in inv.iter().enumerate() {
                let c = self.mul[self.mul[g_inv][x]][g];
                if !done[c] {
                    done[c] = true;
                    size += 1;
                }
            }
            sizes.push(size);
        }
        sizes
    }
}

fn product_size(x: &SubgroupSet, y: &SubgroupSet) -> usize {
    let g = x.group();
    let ys: Vec<&Permutation> = y.elements().map(|j| g.element(j)).collect();
    let mut set = HashSet::new();
    for i in x.elements() {
        for b in &ys {
            set.insert(g.element(i).compose(b).unwrap());
        }
    }
    set.len()
}

fn maximal_class_orders(lat: &Lattice) -> Vec<usize> {
    let maximal = lat.maximal_subgroups();
    let mut seen: Vec<SubgroupSet> = Vec::new();
    let mut orders = Vec::new();
    for m in &maximal {
        if seen.contains(m) {
            continue;
        }
        orders.push(m.order());
        for g in lat.top().elements() {
            let c = m.conjugate_by(g);
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
    }
    orders.sort_unstable();
    orders
}

// ---------------------------------------------------------------- CLI runs

struct VerifyRun {
    status: Option<i32>,
    json: Vec<u8>,
    elapsed: Duration,
}

fn scratch() -> &'static Path {
    static DIR: OnceLock<tempfile::TempDir> = OnceLock::new();
    DIR.get_or_init(|| tempfile::tempdir().unwrap()).path()
}

fn verify_all(out: PathBuf) -> VerifyRun {
    let start = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_grouplab"))
        .args(["verify", "--suite", "all", "--quiet", "--json"])
        .arg(&out)
        .env_remove("GROUPLAB_CORPUS")
        .status()
        .expect("grouplab runs");
    VerifyRun {
        status: status.code(),
        json: std::fs::read(&out).unwrap_or_default(),
        elapsed: start.elapsed(),
    }
}

fn first_run() -> &'static VerifyRun {
    static RUN: OnceLock<VerifyRun> = OnceLock::new();
    RUN.get_or_init(|| verify_all(scratch().join("first.json")))
}

fn report() -> Result<Value, String> {
    serde_json::from_slice(&first_run().json).map_err(|e| format!("report is not JSON: {e}"))
}

fn suite<'a>(report: &'a Value, name: &str) -> Result<&'a [Value], String> {
    report["suites"]
        .as_array()
        .and_then(|s| s.iter().find(|s| s["suite"] == name))
        .and_then(|s| s["entries"].as_array())
        .map(Vec::as_slice)
        .ok_or_else(|| format!("suite {name} missing"))
}

fn entry<'a>(entries: &'a [Value], group: &str, case: &str) -> Result<&'a Value, String> {
    entries
        .iter()
        .find(|e| e["group"] == group && e["case"] == case)
        .ok_or_else(|| format!("no entry {group} / {case}"))
}

// ---------------------------------------------------------------- criteria

fn criterion1() -> Check {
    let start = Instant::now();
    let group = psl27();
    let lat = Lattice::of_group(group.clone(), Caps::default()).map_err(|e| e.to_string())?;
    ensure!(lat.order() == 168, "order {}", lat.order());
    let normal: Vec<usize> = lat.normal_subgroups().iter().map(|n| n.order()).collect();
    ensure!(normal == [1, 168], "normal subgroup orders {normal:?}");
    let n7 = lat.sylow_subgroups(7).map_err(|e| e.to_string())?.count();
    ensure!(n7 == 8, "n_7 = {n7}");
    let classes = maximal_class_orders(&lat);
    ensure!(classes == [21, 24, 24], "maximal class orders {classes:?}");
    within(start, Duration::from_secs(10), "psl27 lattice")?;

    // Brute-force cross-checks: eight subgroups of order 7 from the 48
    // elements of order 7, and simplicity from the class equation.
    let brute = BruteGroup::new(&group);
    let order7 = brute.elements.iter().filter(|p| p.order() == 7).count();
    ensure!(order7 / 6 == 8, "{order7} elements of order 7");
    let sizes = brute.conjugacy_class_sizes();
    let others: Vec<usize> = sizes[1..].to_vec();
    for mask in 1..(1u32 << others.len()) - 1 {
        let total = 1 + (0..others.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| others[i])
            .sum::<usize>();
        ensure!(168 % total != 0, "classes {sizes:?} admit a normal subgroup of order {total}");
    }
    Ok(())
}

fn criterion2() -> Check {
    let lat = Lattice::of_group(psl27(), Caps::default()).map_err(|e| e.to_string())?;
    let hall = lat.hall_subgroups(&[2, 7]);
    ensure!(hall.is_empty(), "{} Hall {{2,7}}-subgroups", hall.len());
    let h = lat
        .maximal_subgroups()
        .into_iter()
        .find(|m| m.order() == 21)
        .ok_or("no maximal subgroup of order 21")?;
    let found = find_ns_supplement(&lat, &h).map_err(|e| e.to_string())?;
    ensure!(found.is_none(), "order-21 maximal subgroup has an NS-supplement");
    Ok(())
}

fn criterion3() -> Check {
    let lat = Lattice::of_group(psl27(), Caps::default()).map_err(|e| e.to_string())?;
    let p3 = lat.sylow_subgroups(3).map_err(|e| e.to_string())?.representative().clone();
    let verdict = verify_ns_supplement(&lat, &p3, lat.top()).map_err(|e| e.to_string())?;
    ensure!(verdict.holds, "G is not an NS-supplement of its Sylow 3-subgroup");
    let w = lemma1_witnesses(&lat, &p3, lat.top()).map_err(|e| e.to_string())?;
    let got: Vec<(u64, usize)> = w.iter().map(|w| (w.prime, w.product_order)).collect();
    ensure!(got == [(2, 24), (3, 3), (7, 21)], "witness product orders {got:?}");
    for w in &w {
        let size = product_size(&p3, &w.sylow_member);
        ensure!(size == w.product_order, "p={}: brute product size {size}", w.prime);
    }
    ensure!(!is_p_soluble(&lat, 3).map_err(|e| e.to_string())?, "psl27 reported 3-soluble");
    Ok(())
}

fn criterion4() -> Check {
    let start = Instant::now();
    let lat = Lattice::of_group(paper72(), Caps::default()).map_err(|e| e.to_string())?;
    ensure!(lat.order() == 72, "order {}", lat.order());
    let maximal = lat.maximal_subgroups();
    let mut orders: Vec<usize> = maximal.iter().map(|m| m.order()).collect();
    orders.sort_unstable();
    ensure!(orders == [8, 8, 8, 8, 8, 8, 8, 8, 8, 36], "maximal orders {orders:?}");
    for (i, m) in maximal.iter().enumerate() {
        let found = find_ns_supplement(&lat, m).map_err(|e| e.to_string())?;
        ensure!(found.is_some(), "maximal subgroup {} (order {}) not NS-supplemented", i + 1, m.order());
    }
    let m1 = maximal.iter().find(|m| m.order() == 36).unwrap();
    let sub = lat.sublattice(m1).map_err(|e| e.to_string())?;
    ensure!(!is_supersoluble(&sub), "M1 reported supersoluble");
    ensure!(lat.top().is_soluble(), "paper72 not soluble");
    ensure!(!is_supersoluble(&lat), "paper72 reported supersoluble");
    within(start, Duration::from_secs(30), "paper72 checks")
}

fn criterion5() -> Check {
    let run = first_run();
    ensure!(run.status == Some(0), "verify exited with {:?}", run.status);
    within(Instant::now() - run.elapsed, Duration::from_secs(300), "verify --suite all")?;
    let report = report()?;
    let violations = report["summary"]["violation"].as_u64();
    ensure!(violations == Some(0), "violations: {violations:?}");

    let t2 = suite(&report, "theorem2")?;
    let confirmed: Vec<&str> = t2
        .iter()
        .filter(|e| e["case"] == "all maximal subgroups" && e["status"] == "confirmed")
        .filter_map(|e| e["group"].as_str())
        .collect();
    ensure!(confirmed.contains(&"paper72"), "paper72 not confirmed in theorem2");
    ensure!(confirmed.len() >= 2, "only {confirmed:?} confirmed in theorem2");

    let psl = entry(t2, "psl27", "all maximal subgroups")?;
    ensure!(psl["status"] == "vacuous" && psl["hypothesis"] == false, "theorem2 psl27: {psl}");
    let facts = entry(t2, "psl27", "proof facts")?;
    ensure!(facts["status"] == "confirmed", "theorem2 proof facts: {facts}");
    let t1 = entry(suite(&report, "theorem1")?, "psl27", "p=3")?;
    ensure!(
        t1["status"] == "vacuous" && t1["certificates"]["three_soluble"] == false && t1["conclusion"] == false,
        "theorem1 psl27 p=3: {t1}"
    );
    let t1_7 = entry(suite(&report, "theorem1")?, "psl27", "p=7")?;
    ensure!(t1_7["certificates"]["ns_supplement"].is_null(), "Sylow 7 of psl27 supplemented");
    let tk = entry(suite(&report, "tk")?, "psl27", "p=7")?;
    ensure!(tk["status"] == "vacuous", "tk psl27 p=7: {tk}");
    let gur = entry(suite(&report, "gur")?, "psl27", "prime-power maximal indices")?;
    ensure!(gur["status"] == "confirmed", "gur psl27: {gur}");
    Ok(())
}

fn criterion6() -> Check {
    let report = report()?;
    let props = suite(&report, "properties")?;
    let corpus = default_manifest();
    for e in corpus.iter().filter(|e| e.lattice_eligible()) {
        let mut cases = vec![
            "Sylow congruence and conjugacy",
            "supersoluble iff prime maximal indices",
            "predicate implication chain",
        ];
        if e.order <= 72 {
            cases.push("product-order identity");
        }
        for case in cases {
            let x = entry(props, &e.name, case)?;
            ensure!(x["status"] == "confirmed", "{} {case}: {}", e.name, x["certificates"]);
        }
    }
    let lemma2 = suite(&report, "lemma2")?;
    for e in lemma2 {
        ensure!(
            e["status"] == "confirmed" || e["status"] == "vacuous" || e["skip"] == "over-cap",
            "lemma2 {}: {}",
            e["group"],
            e["certificates"]
        );
    }
    ensure!(
        lemma2.iter().filter(|e| e["status"] == "confirmed").count() >= 10,
        "too few lemma2 confirmations"
    );

    // Independent product-order identity on every subgroup pair up to order 72.
    for e in corpus.iter().filter(|e| e.order <= 72) {
        let lat = Lattice::of_group(e.group.clone(), Caps::default()).map_err(|e| e.to_string())?;
        for x in lat.subgroups() {
            for y in lat.subgroups() {
                let inter = x.elements().filter(|&i| y.contains(i)).count();
                let xy = product_size(x, y);
                ensure!(
                    xy * inter == x.order() * y.order(),
                    "{}: |XY|={xy}, |X|={}, |Y|={}, |X∩Y|={inter}",
                    e.name,
                    x.order(),
                    y.order()
                );
            }
        }
    }
    Ok(())
}

fn criterion7() -> Check {
    for e in default_manifest().iter().filter(|e| e.order <= 48) {
        let brute = BruteGroup::new(&e.group);
        ensure!(brute.elements.len() as u128 == e.order, "{}: brute order", e.name);
        let expected = brute.subgroups();
        let lat = Lattice::of_group(e.group.clone(), Caps::default()).map_err(|e| e.to_string())?;
        let got: BTreeSet<Vec<usize>> = lat.subgroups().iter().map(|s| brute.indices_of(s)).collect();
        ensure!(got.len() == lat.subgroups().len(), "{}: duplicate subgroups", e.name);
        ensure!(
            got == expected,
            "{}: lattice has {} subgroups, brute force {}",
            e.name,
            got.len(),
            expected.len()
        );
    }
    Ok(())
}

fn criterion8() -> Check {
    let first = first_run();
    ensure!(!first.json.is_empty(), "first run wrote no JSON");
    let second = verify_all(scratch().join("second.json"));
    ensure!(second.status == first.status, "exit codes differ");
    ensure!(first.json == second.json, "JSON reports differ");
    Ok(())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("psl27 construction and lattice facts", criterion1),
        ("psl27 proof facts: no Hall {2,7}, order-21 maximal not NS-supplemented", criterion2),
        ("Sylow 3 of psl27 has psl27 as NS-supplement", criterion3),
        ("order-72 example: maximal subgroups all NS-supplemented", criterion4),
        ("theorem suites over the default corpus", criterion5),
        ("property suites", criterion6),
        ("lattice matches brute-force enumeration up to order 48", criterion7),
        ("verify JSON is byte-identical across runs", criterion8),
    ];
    let mut failed = 0;
    for (i, (desc, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match result {
            Ok(()) => println!("criterion {}: PASS  {desc} [{took:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {desc} [{took:.2?}]\n    {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
