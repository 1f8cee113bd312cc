//! Verification suites over a resolved corpus and their JSON reports.
//!
//! A task is one (entry, subgroup, suite) triple. Tasks run on a small pool
//! of scoped threads; the Fox setting and the degree three presentation of
//! each (entry, subgroup) pair are built once and shared. Records are merged
//! in canonical order, so the payload does not depend on scheduling.

use crate::corpus::ResolvedEntry;
use crate::exactla::FgAbGroup;
use crate::groupring::FoxSetting;
use crate::lie::{self, LieError, U3Pres};
use crate::tensor_h::{self, corrupt_sweep, Diagram23, Square24, TensorError, Verdict};
use serde::Serialize;
use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Mutex, OnceLock};
use std::time::Instant;

/// Suite ids in canonical order.
pub const SUITES: &[&str] = &[
    "prop3.1", "cor3.2", "lemma1.1", "thm1.5", "thm1.10", "thm3.3", "thm3.6", "cor2.4", "thm6.6", "prop5.3", "thm6.1", "r3",
    "cor6.2", "cor6.5", "controls",
];

/// Filtration depth the suites need.
pub const SUITE_DEGREE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// Invariant factors as a sorted divisor list plus the free rank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub torsion: Vec<String>,
    pub free_rank: usize,
}

impl From<&FgAbGroup> for Invariants {
    fn from(a: &FgAbGroup) -> Self {
        let (t, f) = a.invariants();
        Invariants { torsion: t.iter().map(ToString::to_string).collect(), free_rank: f }
    }
}

/// One check on one instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub suite: String,
    pub entry: String,
    pub subgroup: String,
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub details: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntrySummary {
    pub id: String,
    pub group: String,
    pub order: usize,
    pub series: String,
    pub series_orders: Vec<usize>,
    pub abelianization: Invariants,
    pub subgroups: BTreeMap<String, usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

/// Everything that must be identical across runs on identical inputs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Payload {
    pub suites: Vec<String>,
    pub entries: Vec<EntrySummary>,
    pub records: Vec<Record>,
    pub totals: Totals,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct WallTime {
    pub total_ms: u128,
    pub tasks_ms: BTreeMap<String, u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub payload: Payload,
    pub wall_time: WallTime,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.payload.totals.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn payload_json(&self) -> String {
        serde_json::to_string_pretty(&self.payload).expect("payload serializes")
    }

    /// Records of one suite.
    pub fn suite(&self, id: &str) -> impl Iterator<Item = &Record> {
        let id = id.to_string();
        self.payload.records.iter().filter(move |r| r.suite == id)
    }
}

/// Checks that every requested suite id is known; `None` selects all.
pub fn select_suites(ids: Option<&[String]>) -> Result<Vec<String>, String> {
    match ids {
        None => Ok(SUITES.iter().map(|s| s.to_string()).collect()),
        Some(ids) => {
            for id in ids {
                if !SUITES.contains(&id.as_str()) {
                    return Err(format!("unknown suite `{id}`; known suites: {}", SUITES.join(", ")));
                }
            }
            Ok(SUITES.iter().filter(|s| ids.iter().any(|i| i == *s)).map(|s| s.to_string()).collect())
        }
    }
}

/// Shared per-instance data, built on first use.
struct Instance<'a> {
    entry: &'a ResolvedEntry,
    index: usize,
    n_max: usize,
    setting: OnceLock<Result<FoxSetting, String>>,
    pres: OnceLock<Result<U3Pres, String>>,
}

impl<'a> Instance<'a> {
    fn setting(&self) -> Result<&FoxSetting, String> {
        self.setting.get_or_init(|| self.entry.setting(self.index, self.n_max).map_err(|e| e.to_string())).as_ref().map_err(Clone::clone)
    }

    fn pres(&self) -> Result<&U3Pres, String> {
        self.pres
            .get_or_init(|| {
                let s = self.setting()?;
                U3Pres::build(s).map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn subgroup(&self) -> &str {
        &self.entry.subgroups[self.index].0
    }
}

enum Outcome {
    Verdicts(Vec<Verdict>),
    Skip(String),
}

fn tensor_outcome(r: Result<Vec<Verdict>, TensorError>) -> Outcome {
    match r {
        Ok(v) => Outcome::Verdicts(v),
        Err(TensorError::Precondition(m)) => Outcome::Skip(m),
        Err(e) => Outcome::Verdicts(vec![Verdict::fail("computation", e.to_string())]),
    }
}

fn lie_outcome(r: Result<Vec<Verdict>, LieError>) -> Outcome {
    match r {
        Ok(v) => Outcome::Verdicts(v),
        Err(LieError::Precondition(m)) => Outcome::Skip(m),
        Err(e) => Outcome::Verdicts(vec![Verdict::fail("computation", e.to_string())]),
    }
}

fn prefixed(prefix: &str, vs: Vec<Verdict>) -> Vec<Verdict> {
    vs.into_iter()
        .map(|v| {
            let name = format!("{prefix}: {}", v.name);
            v.renamed(name)
        })
        .collect()
}

/// The subgroups `K ∈ {1, Z(G), H}` of the second-quotient squares.
fn k_choices(s: &FoxSetting) -> Vec<(&'static str, crate::groups::Subgroup)> {
    let mut out: Vec<(&'static str, crate::groups::Subgroup)> = vec![("K=1", s.g.trivial_subgroup())];
    let z = s.g.center();
    if !out.iter().any(|(_, k)| k == &z) {
        out.push(("K=Z(G)", z));
    }
    if !out.iter().any(|(_, k)| k == &s.h) {
        out.push(("K=H", s.h.clone()));
    }
    out
}

fn run_suite(inst: &Instance, suite: &str) -> Outcome {
    if SUITE_DEGREE > inst.n_max {
        return Outcome::Skip(format!("needs filtration degree {SUITE_DEGREE}"));
    }
    let s = match inst.setting() {
        Ok(s) => s,
        Err(e) => return Outcome::Verdicts(vec![Verdict::fail("setting", e)]),
    };
    let pres = || inst.pres().map_err(|e| Outcome::Verdicts(vec![Verdict::fail("degree three presentation", e)]));
    match suite {
        "prop3.1" => tensor_outcome((|| {
            Ok(vec![
                tensor_h::prop31(s, &s.ih)?.renamed("J=I(H): inclusion induces an isomorphism"),
                tensor_h::prop31(s, &s.ih_power(2))?.renamed("J=I^2(H): inclusion induces an isomorphism"),
            ])
        })()),
        "cor3.2" => Outcome::Verdicts(vec![tensor_h::cor32(s, &s.ih)]),
        "lemma1.1" => tensor_outcome(tensor_h::lemma11(s, &s.ih).map(|v| vec![v])),
        "thm1.5" => Outcome::Verdicts(vec![tensor_h::thm15(s, &s.ih)]),
        "thm1.10" => tensor_outcome(tensor_h::thm110(s, &s.ih)),
        "thm3.3" => tensor_outcome((|| {
            let mut out = Vec::new();
            for (name, k) in k_choices(s) {
                out.extend(prefixed(name, tensor_h::thm33(s, &k, &s.ih)?));
            }
            Ok(out)
        })()),
        "thm3.6" => tensor_outcome((|| {
            let mut out = Vec::new();
            for (name, k) in k_choices(s) {
                out.extend(prefixed(name, tensor_h::thm36(s, &k)?));
            }
            Ok(out)
        })()),
        "cor2.4" => {
            let cyclic = s.h.elements().iter().any(|&a| s.g.elem_order(a) == s.h.order());
            let abelian = s.h.elements().iter().all(|&a| s.h.elements().iter().all(|&b| s.g.comm(a, b) == 0));
            if !abelian {
                return Outcome::Skip("H is not abelian".into());
            }
            tensor_outcome((|| {
                let mut out = Vec::new();
                for (nname, n) in inst.entry.normal_choices() {
                    for deg in [2, 3] {
                        let p = format!("N={nname}, n={deg}");
                        if cyclic {
                            out.push(tensor_h::cor24_cyclic(s, &n, deg)?.renamed(format!("{p}: cyclic formula")));
                        }
                        out.extend(prefixed(&p, tensor_h::cor24_abelian(s, &n, deg)?));
                    }
                }
                Ok(out)
            })())
        }
        "thm6.6" => tensor_outcome((|| {
            let mut out = Vec::new();
            for (nname, n) in inst.entry.normal_choices() {
                out.extend(prefixed(&format!("N={nname}"), tensor_h::thm66(s, &n)?));
            }
            Ok(out)
        })()),
        "prop5.3" => match pres() {
            Ok(p) => lie_outcome(lie::low_degree_isos(p)),
            Err(o) => o,
        },
        "thm6.1" => match pres() {
            Ok(p) => lie_outcome(lie::thm61(p, None)),
            Err(o) => o,
        },
        "r3" => match pres() {
            Ok(p) => lie_outcome(lie::r3_checks(p)),
            Err(o) => o,
        },
        "cor6.2" => match pres() {
            Ok(p) => lie_outcome(lie::u3bar_finite(p).map(|v| vec![v])),
            Err(o) => o,
        },
        "cor6.5" => {
            if s.h != s.g.whole() {
                return Outcome::Skip("needs H = G".into());
            }
            match pres() {
                Ok(p) => lie_outcome(lie::cor65(p)),
                Err(o) => o,
            }
        }
        "controls" => controls(s, pres()),
        other => Outcome::Skip(format!("unknown suite {other}")),
    }
}

/// Negative controls: a corrupted map must turn each verdict into a failure
/// with a witness. A control passes when the corruption is caught.
fn controls(s: &FoxSetting, pres: Result<&U3Pres, Outcome>) -> Outcome {
    let mut out = Vec::new();
    let caught = |name: &str, count: usize, survivors: Vec<Verdict>| {
        if count == 0 {
            return Verdict::pass(name).with("corruptions", 0);
        }
        Verdict::from_bool(name, survivors.is_empty(), || format!("{} corruptions went unnoticed, first at {}", survivors.len(), survivors[0].details.get("entry").cloned().unwrap_or_default()))
            .with("corruptions", count)
    };
    let one = s.g.trivial_subgroup();
    match Square24::new(s, &one) {
        Ok(sq) => {
            let (n, surv) = corrupt_sweep("degree two square", &sq.square);
            out.push(caught("corrupted degree two square is rejected", n, surv));
        }
        Err(e) => out.push(Verdict::fail("corrupted degree two square is rejected", e.to_string())),
    }
    match Diagram23::new(s, &one, &s.ih) {
        Ok(dg) => {
            let (n, surv) = corrupt_sweep("middle square", &dg.square);
            out.push(caught("corrupted middle square is rejected", n, surv));
        }
        Err(e) => out.push(Verdict::fail("corrupted middle square is rejected", e.to_string())),
    }
    let name = "corrupted delta1 is rejected";
    match pres {
        Ok(p) => match lie::delta1_corruption(p) {
            Ok(None) => out.push(Verdict::pass(name).with("corruptions", 0)),
            Ok(Some(c)) => match lie::thm61(p, Some(c)) {
                Ok(v) => {
                    let k = &v[1];
                    out.push(Verdict::from_bool(name, !k.pass && k.witness.is_some(), || "kernel equality survived the corruption".into()).with("corruptions", 1));
                }
                Err(e) => out.push(Verdict::fail(name, e.to_string())),
            },
            Err(e) => out.push(Verdict::fail(name, e.to_string())),
        },
        Err(Outcome::Verdicts(v)) => out.extend(v),
        Err(Outcome::Skip(m)) => return Outcome::Skip(m),
    }
    Outcome::Verdicts(out)
}

fn summarize(e: &ResolvedEntry) -> EntrySummary {
    let g = &e.group;
    EntrySummary {
        id: e.id.clone(),
        group: g.name().to_string(),
        order: g.order(),
        series: e.series_name.clone(),
        series_orders: e.series.orders(),
        abelianization: Invariants::from(g.abelianize().group().as_ref()),
        subgroups: e.subgroups.iter().map(|(n, h)| (n.clone(), h.order())).collect(),
    }
}

/// Options of a verification run.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub suites: Vec<String>,
    pub jobs: usize,
    pub n_max: usize,
    /// Prints one line per finished task to stderr.
    pub verbose: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { suites: SUITES.iter().map(|s| s.to_string()).collect(), jobs: 1, n_max: SUITE_DEGREE, verbose: false }
    }
}

/// Runs the selected suites over every (entry, subgroup) instance.
pub fn verify(entries: &[ResolvedEntry], opts: &VerifyOptions) -> Report {
    let start = Instant::now();
    let instances: Vec<Instance> = entries
        .iter()
        .flat_map(|e| {
            (0..e.subgroups.len()).map(move |index| Instance { entry: e, index, n_max: opts.n_max, setting: OnceLock::new(), pres: OnceLock::new() })
        })
        .collect();
    let mut tasks = Vec::new();
    for (i, inst) in instances.iter().enumerate() {
        for (k, suite) in opts.suites.iter().enumerate() {
            let wanted = inst.entry.suites.as_ref().is_none_or(|only| only.iter().any(|x| x == suite));
            if wanted {
                tasks.push((i, k));
            }
        }
    }
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, usize, Vec<Record>, u128)>> = Mutex::new(Vec::new());
    let jobs = opts.jobs.max(1).min(tasks.len().max(1));
    std::thread::scope(|scope| {
        for _ in 0..jobs {
            scope.spawn(|| loop {
                let t = next.fetch_add(1, Ordering::SeqCst);
                let Some(&(i, k)) = tasks.get(t) else { break };
                let inst = &instances[i];
                let suite = &opts.suites[k];
                let t0 = Instant::now();
                let records = records_for(inst, suite, run_suite(inst, suite));
                let ms = t0.elapsed().as_millis();
                if opts.verbose {
                    let fails = records.iter().filter(|r| r.status == Status::Fail).count();
                    eprintln!("{} [H={}] {suite}: {} checks, {fails} failed, {ms} ms", inst.entry.id, inst.subgroup(), records.len());
                }
                results.lock().expect("no poisoned lock").push((i, k, records, ms));
            });
        }
    });
    let mut results = results.into_inner().expect("no poisoned lock");
    results.sort_by_key(|(i, k, _, _)| (*i, *k));
    let mut records = Vec::new();
    let mut tasks_ms = BTreeMap::new();
    for (i, k, rs, ms) in results {
        let inst = &instances[i];
        tasks_ms.insert(format!("{}/{}/{}", inst.entry.id, inst.subgroup(), opts.suites[k]), ms);
        records.extend(rs);
    }
    let mut totals = Totals::default();
    for r in &records {
        match r.status {
            Status::Pass => totals.pass += 1,
            Status::Fail => totals.fail += 1,
            Status::Skip => totals.skip += 1,
        }
    }
    Report {
        payload: Payload { suites: opts.suites.clone(), entries: entries.iter().map(summarize).collect(), records, totals },
        wall_time: WallTime { total_ms: start.elapsed().as_millis(), tasks_ms },
    }
}

fn records_for(inst: &Instance, suite: &str, outcome: Outcome) -> Vec<Record> {
    let base = |check: String, status: Status| Record {
        suite: suite.to_string(),
        entry: inst.entry.id.clone(),
        subgroup: inst.subgroup().to_string(),
        check,
        status,
        witness: None,
        details: BTreeMap::new(),
    };
    match outcome {
        Outcome::Skip(reason) => {
            let mut r = base("skipped".into(), Status::Skip);
            r.details.insert("reason".into(), reason);
            vec![r]
        }
        Outcome::Verdicts(vs) => vs
            .into_iter()
            .map(|v| {
                let mut r = base(v.name, if v.pass { Status::Pass } else { Status::Fail });
                r.witness = v.witness;
                r.details = v.details;
                r
            })
            .collect(),
    }
}
