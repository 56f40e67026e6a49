//! Batch verification suites over a corpus.
//!
//! Each corpus entry is prepared once (lattice, Sylow and maximal NS-supplement
//! searches, quotients) and shared by every suite. Suites fan out over entries
//! with rayon; results are collected in manifest order.

mod report;
pub mod suites;

use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;

pub use report::{subgroup_json, Entry, SkipKind, Status, SuiteReport, Summary, VerifyReport};

use crate::arith::prime_divisors;
use crate::corpus::{self, CorpusEntry};
use crate::error::{GroupError, Result};
use crate::group::Caps;
use crate::lattice::{Lattice, SylowFamily};
use crate::ns::{find_ns_supplement, NsVerdict};
use crate::quotient::{quotient_group, Quotient};
use crate::subgroup::SubgroupSet;

pub const SUITES: &[&str] = &[
    "theorem1",
    "corollary",
    "theorem2",
    "lemma1",
    "lemma2",
    "tk",
    "gur",
    "zassenhaus",
    "example1",
    "example2",
    "properties",
];

/// Expands `all` and validates suite names.
pub fn resolve_suites(name: &str) -> Result<Vec<&'static str>> {
    if name == "all" {
        return Ok(SUITES.to_vec());
    }
    SUITES
        .iter()
        .find(|s| **s == name)
        .map(|s| vec![*s])
        .ok_or_else(|| {
            GroupError::InvalidParameter(format!(
                "unknown suite `{name}` (expected one of: all, {})",
                SUITES.join(", ")
            ))
        })
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub max_order: u128,
    pub caps: Caps,
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    /// Largest order on which the product-order identity is checked on all pairs.
    pub pairwise_max_order: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_order: corpus::LATTICE_ELIGIBLE_ORDER,
            caps: Caps::default(),
            jobs: None,
            pairwise_max_order: 72,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SylowCase {
    pub prime: u64,
    pub family: SylowFamily,
    pub supplement: Option<NsVerdict>,
}

#[derive(Clone, Debug)]
pub struct MaximalCase {
    pub subgroup: SubgroupSet,
    pub supplement: Option<NsVerdict>,
}

/// A verified NS-supplement pair drawn from the Sylow and maximal searches.
#[derive(Clone, Debug)]
pub struct VerifiedPair {
    pub label: String,
    pub a: SubgroupSet,
    pub b: SubgroupSet,
}

pub struct QuotientCase {
    pub quotient: Quotient,
    pub lattice: Lattice,
}

pub struct Analysis {
    pub lattice: Lattice,
    sylow: OnceLock<Result<Vec<SylowCase>>>,
    maximal: OnceLock<Result<Vec<MaximalCase>>>,
    quotients: OnceLock<Result<Vec<QuotientCase>>>,
}

fn cached<T>(cell: &OnceLock<Result<Vec<T>>>, f: impl FnOnce() -> Result<Vec<T>>) -> Result<&[T]> {
    cell.get_or_init(f).as_deref().map_err(Clone::clone)
}

impl Analysis {
    fn new(lattice: Lattice) -> Self {
        Self {
            lattice,
            sylow: OnceLock::new(),
            maximal: OnceLock::new(),
            quotients: OnceLock::new(),
        }
    }

    /// One Sylow family per prime divisor, with the NS-supplement search run
    /// on the family's representative.
    pub fn sylow_cases(&self) -> Result<&[SylowCase]> {
        cached(&self.sylow, || {
            let lat = &self.lattice;
            prime_divisors(lat.order() as u64)
                .into_iter()
                .map(|p| {
                    let family = lat.sylow_subgroups(p)?;
                    let supplement = find_ns_supplement(lat, family.representative())?;
                    Ok(SylowCase {
                        prime: p,
                        family,
                        supplement,
                    })
                })
                .collect()
        })
    }

    pub fn maximal_cases(&self) -> Result<&[MaximalCase]> {
        cached(&self.maximal, || {
            let lat = &self.lattice;
            lat.maximal_subgroups()
                .into_iter()
                .map(|m| {
                    let supplement = find_ns_supplement(lat, &m)?;
                    Ok(MaximalCase { subgroup: m, supplement })
                })
                .collect()
        })
    }

    /// `G/K` with its lattice for every normal `K`, in lattice order.
    pub fn quotients(&self) -> Result<&[QuotientCase]> {
        cached(&self.quotients, || {
            let lat = &self.lattice;
            lat.normal_subgroups()
                .iter()
                .map(|k| {
                    let quotient = quotient_group(lat.top(), k)?;
                    let lattice = Lattice::new(quotient.group());
                    Ok(QuotientCase { quotient, lattice })
                })
                .collect()
        })
    }

    pub fn verified_pairs(&self) -> Result<Vec<VerifiedPair>> {
        let mut pairs: Vec<VerifiedPair> = Vec::new();
        let mut push = |label: String, a: &SubgroupSet, v: &Option<NsVerdict>| {
            if let Some(b) = v.as_ref().and_then(|v| v.supplement.as_ref()) {
                if !pairs.iter().any(|p| &p.a == a && &p.b == b) {
                    pairs.push(VerifiedPair {
                        label,
                        a: a.clone(),
                        b: b.clone(),
                    });
                }
            }
        };
        for c in self.sylow_cases()? {
            push(format!("sylow-{}", c.prime), c.family.representative(), &c.supplement);
        }
        for (i, c) in self.maximal_cases()?.iter().enumerate() {
            push(format!("maximal-{}", i + 1), &c.subgroup, &c.supplement);
        }
        Ok(pairs)
    }
}

pub struct Prepared {
    pub entry: CorpusEntry,
    analysis: std::result::Result<Analysis, (SkipKind, String)>,
}

impl Prepared {
    pub fn new(entry: CorpusEntry, opts: &VerifyOptions) -> Self {
        let analysis = if entry.order > opts.max_order {
            Err((
                SkipKind::OverCap,
                format!("order {} exceeds max order {}", entry.order, opts.max_order),
            ))
        } else {
            match Lattice::of_group(entry.group.clone(), opts.caps) {
                Ok(lat) => Ok(Analysis::new(lat)),
                Err(e @ GroupError::TooLarge { .. }) => Err((SkipKind::OverCap, e.to_string())),
                Err(e) => Err((SkipKind::Error, e.to_string())),
            }
        };
        Self { entry, analysis }
    }

    pub fn name(&self) -> &str {
        &self.entry.name
    }

    pub fn analysis(&self) -> Option<&Analysis> {
        self.analysis.as_ref().ok()
    }

    /// Runs `f` on the analysed entry, turning skips and errors into
    /// skipped entries.
    pub(crate) fn run(&self, f: impl Fn(&str, &Analysis) -> Result<Vec<Entry>>) -> Vec<Entry> {
        match &self.analysis {
            Err((kind, reason)) => vec![Entry::skipped(self.name(), *kind, reason.clone())],
            Ok(a) => f(self.name(), a)
                .unwrap_or_else(|e| vec![Entry::skipped(self.name(), SkipKind::Error, e.to_string())]),
        }
    }
}

fn builtin(name: &str, recipe: &str) -> CorpusEntry {
    let group = corpus::parse_recipe(recipe).expect("built-in recipe");
    CorpusEntry {
        name: name.to_string(),
        recipe: recipe.to_string(),
        order: group.order(),
        notes: None,
        group,
    }
}

pub struct Harness {
    opts: VerifyOptions,
    prepared: Vec<Prepared>,
    psl27: OnceLock<Prepared>,
    paper72: OnceLock<Prepared>,
}

impl Harness {
    pub fn new(corpus: Vec<CorpusEntry>, opts: VerifyOptions) -> Self {
        let prepared = corpus.into_par_iter().map(|e| Prepared::new(e, &opts)).collect();
        Self {
            opts,
            prepared,
            psl27: OnceLock::new(),
            paper72: OnceLock::new(),
        }
    }

    pub fn options(&self) -> &VerifyOptions {
        &self.opts
    }

    pub fn prepared(&self) -> &[Prepared] {
        &self.prepared
    }

    /// The built-in PSL(2,7) used by the fixed example and proof-fact entries.
    pub fn builtin_psl27(&self) -> &Prepared {
        self.psl27
            .get_or_init(|| Prepared::new(builtin("psl27", "psl27"), &self.opts))
    }

    pub fn builtin_paper72(&self) -> &Prepared {
        self.paper72
            .get_or_init(|| Prepared::new(builtin("paper72", "paper72"), &self.opts))
    }

    /// Applies `f` to every entry in parallel; output keeps manifest order.
    pub(crate) fn per_group(
        &self,
        f: impl Fn(&str, &Analysis) -> Result<Vec<Entry>> + Sync,
    ) -> Vec<Entry> {
        self.prepared
            .par_iter()
            .map(|p| p.run(&f))
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    }

    pub fn run_suite(&self, name: &str) -> Result<SuiteReport> {
        let start = Instant::now();
        let entries = match name {
            "theorem1" => suites::theorem1(self),
            "corollary" => suites::corollary(self),
            "theorem2" => suites::theorem2(self),
            "lemma1" => suites::lemma1(self),
            "lemma2" => suites::lemma2(self),
            "tk" => suites::tk(self),
            "gur" => suites::gur(self),
            "zassenhaus" => suites::zassenhaus(self),
            "example1" => suites::example1(self),
            "example2" => suites::example2(self),
            "properties" => suites::properties(self),
            other => return Err(resolve_suites(other).unwrap_err()),
        };
        Ok(SuiteReport::new(name, entries, start.elapsed()))
    }

    pub fn run(&self, names: &[&str]) -> Result<VerifyReport> {
        let suites = names
            .iter()
            .map(|n| self.run_suite(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(VerifyReport::new(suites))
    }
}

/// Prepares `corpus` and runs the named suites, on a dedicated pool when
/// `opts.jobs` is set.
pub fn verify(corpus: Vec<CorpusEntry>, names: &[&str], opts: VerifyOptions) -> Result<VerifyReport> {
    let go = || Harness::new(corpus, opts).run(names);
    match opts.jobs {
        None => go(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map_err(|e| GroupError::InvalidParameter(format!("thread pool: {e}")))?
            .install(go),
    }
}
