//! Parallel candidate search and the conjecture checker.

use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use schinzel_core::dihedral::dihedral_group;
use schinzel_core::schinzel::{is_reducible_pair, PairSetup, Verdict};
use schinzel_core::search::{
    candidate_pool, candidates_from_seed, classify_normal_sigma_infty, evaluate_candidate,
    CandidateEvaluation, NormalKind,
};
use schinzel_core::{BranchTuple, ClassTable, Perm};

use crate::cache::{cache_key, Cache};
use crate::json::{AutomorphismJson, CharSchinzelJson, GroupJson, TupleJson, WitnessJson};
use crate::{CliError, CliResult};

/// Largest degree accepted without raising the guard.
pub const MAX_DEGREE_GUARD: usize = 12;
pub const DEFAULT_MAX_DEGREE: usize = 8;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub max_degree: usize,
    pub v: usize,
    pub order_bound: usize,
    pub jobs: usize,
    pub report_path: Option<PathBuf>,
    /// `None` disables caching.
    pub cache_dir: Option<PathBuf>,
    pub timings: bool,
}

impl SearchConfig {
    pub fn new(max_degree: usize, v: usize) -> Self {
        SearchConfig {
            max_degree,
            v,
            order_bound: schinzel_core::DEFAULT_ORDER_BOUND,
            jobs: 1,
            report_path: None,
            cache_dir: None,
            timings: false,
        }
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.jobs == 0 {
            return Err(CliError::Usage("jobs must be at least 1".into()));
        }
        if self.v == 0 {
            return Err(CliError::Usage("v must be at least 1".into()));
        }
        if self.max_degree > MAX_DEGREE_GUARD {
            return Err(CliError::Bound(format!(
                "max degree {} above guard {MAX_DEGREE_GUARD}",
                self.max_degree
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateVerdicts {
    pub genus: Option<usize>,
    pub polynomial: bool,
    pub normal_sigma_infinity: Option<bool>,
    pub charschinzel: Option<CharSchinzelJson>,
    pub gamma: Option<AutomorphismJson>,
    pub reducible: Option<bool>,
    pub orbit_lengths: Vec<usize>,
    pub newly_reducible: Option<String>,
    pub witness_intermediate: Option<WitnessJson>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub evaluate_us: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub degree: usize,
    pub group: Option<GroupJson>,
    /// Class labels of the entries in `G`, sorted.
    pub class_multiset: Vec<String>,
    pub tuple: TupleJson,
    pub verdicts: CandidateVerdicts,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl CandidateReport {
    pub fn from_evaluation(e: &CandidateEvaluation) -> CliResult<Self> {
        let t = &e.tuple;
        let class_multiset = match &e.group {
            Some(g) => {
                let table = ClassTable::new(g);
                let mut labels: Vec<String> = t
                    .entries()
                    .iter()
                    .map(|x| table.class(table.class_of(x).expect("entry in G")).label())
                    .collect();
                labels.sort();
                labels
            }
            None => Vec::new(),
        };
        let mut reducible = None;
        if let (Some(g), Some(q)) = (&e.group, &e.qualifying) {
            reducible = Some(is_reducible_pair(&PairSetup::natural(g, &q.gamma)?)?);
        }
        let nr = e.newly_reducible.as_ref();
        Ok(CandidateReport {
            degree: t.degree(),
            group: e.group.as_ref().map(GroupJson::from_group),
            class_multiset,
            tuple: TupleJson::from_tuple(t),
            verdicts: CandidateVerdicts {
                genus: e.genus,
                polynomial: e.polynomial_slot.is_some(),
                normal_sigma_infinity: e.normal_sigma_infinity,
                charschinzel: e.qualifying.as_ref().map(|q| CharSchinzelJson::from(&q.report)),
                gamma: e
                    .qualifying
                    .as_ref()
                    .map(|q| AutomorphismJson::from_automorphism(&q.gamma)),
                reducible,
                orbit_lengths: nr.map(|r| r.orbit_lengths.clone()).unwrap_or_default(),
                newly_reducible: nr.map(|r| r.verdict.as_str().to_string()),
                witness_intermediate: nr
                    .and_then(|r| r.witness.as_ref())
                    .map(|(side, g)| WitnessJson {
                        side: match side {
                            schinzel_core::schinzel::Side::F => "f".into(),
                            schinzel_core::schinzel::Side::G => "g".into(),
                        },
                        group: GroupJson::from_group(g),
                    }),
                error: e.error.as_ref().map(|x| x.to_string()),
            },
            timings: None,
        })
    }

    pub fn is_newly_reducible(&self) -> bool {
        self.verdicts.newly_reducible.as_deref() == Some(Verdict::NewlyReducible.as_str())
    }

    /// Reruns the verdict pipeline on the stored tuple alone.
    pub fn replay(&self, v: usize, order_bound: usize) -> CliResult<CandidateReport> {
        let t = self.tuple.to_tuple()?;
        let mut again = CandidateReport::from_evaluation(&evaluate_candidate(&t, v, order_bound))?;
        again.timings = self.timings.clone();
        Ok(again)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub n: usize,
    pub examined: usize,
    pub survivors: usize,
    pub errors: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub max_degree: usize,
    pub v: usize,
    pub order_bound: usize,
    pub degrees: Vec<DegreeSummary>,
    pub candidates: Vec<CandidateReport>,
}

#[derive(Serialize)]
struct CandidateKey<'a> {
    kind: &'static str,
    format: u32,
    v: usize,
    order_bound: usize,
    tuple: &'a TupleJson,
}

/// Survivors (qualifying `γ` found) and per-candidate failures for every
/// degree up to `max_degree`, sorted by degree then tuple.
pub fn search_schinzel(config: &SearchConfig) -> CliResult<SearchReport> {
    config.validate()?;
    let cache = match &config.cache_dir {
        Some(d) => Some(Cache::new(d)?),
        None => None,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let mut degrees = Vec::new();
    let mut candidates = Vec::new();
    for n in 2..=config.max_degree {
        let start = Instant::now();
        let (examined, mut kept) =
            pool.install(|| search_one_degree(n, config, cache.as_ref()))?;
        kept.sort_by(|a, b| a.0.cmp(&b.0));
        let survivors = kept.iter().filter(|(_, r)| r.verdicts.error.is_none()).count();
        degrees.push(DegreeSummary {
            n,
            examined,
            survivors,
            errors: kept.len() - survivors,
            elapsed_ms: config.timings.then(|| start.elapsed().as_millis()),
        });
        candidates.extend(kept.into_iter().map(|(_, r)| r));
    }
    let report = SearchReport {
        max_degree: config.max_degree,
        v: config.v,
        order_bound: config.order_bound,
        degrees,
        candidates,
    };
    if let Some(path) = &config.report_path {
        std::fs::write(path, serde_json::to_vec_pretty(&report)?)?;
    }
    Ok(report)
}

type Keyed = (Vec<u32>, CandidateReport);

fn search_one_degree(
    n: usize,
    config: &SearchConfig,
    cache: Option<&Cache>,
) -> CliResult<(usize, Vec<Keyed>)> {
    let v = config.v;
    let pool = candidate_pool(n, v);
    let seeds: Vec<Perm> = if v == 1 {
        vec![Perm::identity(n)]
    } else {
        pool.clone()
    };
    let tuples: Vec<BranchTuple> = seeds
        .par_iter()
        .flat_map_iter(|s| candidates_from_seed(n, v, s, &pool))
        .collect();
    let examined = tuples.len();
    let results: Vec<Option<Keyed>> = tuples
        .par_iter()
        .map(|t| evaluate_cached(t, config, cache).map(|r| r.map(|r| (t.key(), r))))
        .collect::<CliResult<_>>()?;
    Ok((examined, results.into_iter().flatten().collect()))
}

fn evaluate_cached(
    t: &BranchTuple,
    config: &SearchConfig,
    cache: Option<&Cache>,
) -> CliResult<Option<CandidateReport>> {
    let tuple = TupleJson::from_tuple(t);
    let key = cache_key(&CandidateKey {
        kind: "candidate",
        format: 1,
        v: config.v,
        order_bound: config.order_bound,
        tuple: &tuple,
    })?;
    let start = Instant::now();
    let cached: Option<Option<CandidateReport>> = cache.and_then(|c| c.get(&key));
    let mut report = match cached {
        Some(r) => r,
        None => {
            let e = evaluate_candidate(t, config.v, config.order_bound);
            let r = if e.survives() || e.error.is_some() {
                Some(CandidateReport::from_evaluation(&e)?)
            } else {
                None
            };
            if let Some(c) = cache {
                c.put(&key, &r)?;
            }
            r
        }
    };
    if config.timings {
        if let Some(r) = report.as_mut() {
            r.timings = Some(Timings {
                evaluate_us: start.elapsed().as_micros(),
            });
        }
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub n: usize,
    pub v: usize,
    pub cyclic: usize,
    pub dihedral: usize,
    pub pairable_dihedral: usize,
    pub exceptions: Vec<TupleJson>,
    pub index_mismatches: usize,
    pub index_skipped: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub fn classification(n: usize, v: usize) -> CliResult<ClassificationJson> {
    let c = classify_normal_sigma_infty(n, v)?;
    let dihedral = c.count(NormalKind::Dihedral);
    let pairable = c.tuples.iter().filter(|t| t.pairable).count();
    let note = (dihedral > 0 && pairable == 0).then(|| {
        "dihedral classes have conjugate involution stabilizers: no paired classes".to_string()
    });
    Ok(ClassificationJson {
        n,
        v,
        cyclic: c.count(NormalKind::Cyclic),
        dihedral,
        pairable_dihedral: pairable,
        exceptions: c.exceptions().map(|t| TupleJson::from_tuple(&t.tuple)).collect(),
        index_mismatches: c.index_mismatches.len(),
        index_skipped: c.index_skipped,
        note,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub max_n: usize,
    pub v: usize,
    pub examined: usize,
    /// Survivors with `⟨σ_∞⟩` normal in `G`.
    pub criterion_survivors: Vec<CandidateReport>,
    pub newly_reducible: Vec<CandidateReport>,
    pub d4_unique: bool,
    /// Survivors outside the criterion's reach, for inspection.
    pub non_normal: Vec<CandidateReport>,
    pub classification: Vec<ClassificationJson>,
    /// Non-normal survivors, failed candidates, classification exceptions,
    /// index mismatches and newly-reducible survivors other than `D_4`.
    pub unexplained: usize,
    pub verdict: String,
}

/// Runs the search and sorts survivors by the normal-`⟨σ_∞⟩` criterion.
/// Reports evidence only.
pub fn verify_normal_infinity_conjecture(config: &SearchConfig) -> CliResult<ConjectureReport> {
    let report = search_schinzel(config)?;
    let examined = report.degrees.iter().map(|d| d.examined).sum();
    let mut criterion_survivors = Vec::new();
    let mut non_normal = Vec::new();
    let mut failed = 0;
    for c in report.candidates {
        match c.verdicts.normal_sigma_infinity {
            _ if c.verdicts.error.is_some() => failed += 1,
            Some(true) => criterion_survivors.push(c),
            _ => non_normal.push(c),
        }
    }
    let d4 = GroupJson::from_group(&dihedral_group(4)?).to_group(config.order_bound)?;
    let newly_reducible: Vec<CandidateReport> = criterion_survivors
        .iter()
        .filter(|c| c.is_newly_reducible())
        .cloned()
        .collect();
    let mut other_newly = 0;
    for c in &newly_reducible {
        let is_d4 = c.degree == 4
            && match &c.group {
                Some(g) => g.to_group(config.order_bound)? == d4,
                None => false,
            };
        if !is_d4 {
            other_newly += 1;
        }
    }
    let d4_unique = !newly_reducible.is_empty() && other_newly == 0;
    let mut classes = Vec::new();
    for n in 2..=config.max_degree {
        classes.push(classification(n, config.v)?);
    }
    let class_issues: usize = classes
        .iter()
        .map(|c| c.exceptions.len() + c.index_mismatches)
        .sum();
    let unexplained = non_normal.len() + failed + class_issues + other_newly;
    let verdict = if d4_unique && unexplained == 0 {
        "consistent: D_4 is the unique newly-reducible survivor"
    } else if newly_reducible.is_empty() && unexplained == 0 {
        "consistent: no newly-reducible survivor"
    } else {
        "inspect: unexplained candidates present"
    };
    Ok(ConjectureReport {
        max_n: config.max_degree,
        v: config.v,
        examined,
        criterion_survivors,
        newly_reducible,
        d4_unique,
        non_normal,
        classification: classes,
        unexplained,
        verdict: verdict.into(),
    })
}
