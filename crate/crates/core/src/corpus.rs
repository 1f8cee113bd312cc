//! Corpus files: which groups, series and subgroups the verification suites
//! run over, resolved to validated objects before any computation starts.

use crate::groupring::FoxSetting;
use crate::groups::{build_preset, FiniteGroup, GroupError, GroupSeries, SeriesKind, Subgroup};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use thiserror::Error;

/// The corpus shipped with the crate.
pub const DEFAULT_CORPUS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/data/corpus.json");

/// Environment variable overriding [`DEFAULT_CORPUS`].
pub const CORPUS_ENV: &str = "FOXCALC_CORPUS";

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CorpusError {
    #[error("cannot read corpus {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("cannot parse corpus: {0}")]
    Parse(String),
    #[error("entry {id}: {msg}")]
    Entry { id: String, msg: String },
    #[error("entry {id}: {source}")]
    Group { id: String, source: GroupError },
}

impl CorpusError {
    /// True when the error is a resource bound rather than bad input.
    pub fn is_bound(&self) -> bool {
        matches!(self, CorpusError::Group { source: GroupError::BoundExceeded { .. }, .. })
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CorpusFile {
    pub entries: Vec<CorpusEntry>,
}

/// One group with a series and a list of subgroups `H`.
///
/// The ambient group is a preset or a table file. With `within`, the group
/// `G` under study is that subgroup of the ambient group, and the series is
/// computed in the ambient group before it is transported to `G`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub within: Option<String>,
    #[serde(default = "gamma")]
    pub series: SeriesSpec,
    pub subgroups: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub normals: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suites: Option<Vec<String>>,
}

/// `"gamma"`, `"intersect"`, `"intersect:<labels>"`, `"action"`,
/// `"action:<labels>"`, `"custom:<file>"`, or an explicit list of terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SeriesSpec {
    Named(String),
    Terms(Vec<String>),
}

fn gamma() -> SeriesSpec {
    SeriesSpec::Named("gamma".into())
}

impl SeriesSpec {
    pub fn parse_flag(s: &str) -> SeriesSpec {
        SeriesSpec::Named(s.to_string())
    }

    pub fn describe(&self) -> String {
        match self {
            SeriesSpec::Named(s) => s.clone(),
            SeriesSpec::Terms(t) => format!("custom[{}]", t.join(" > ")),
        }
    }
}

/// An entry with its group, series and subgroups validated.
#[derive(Clone, Debug)]
pub struct ResolvedEntry {
    pub id: String,
    pub group: Arc<FiniteGroup>,
    pub series: GroupSeries,
    pub series_name: String,
    pub subgroups: Vec<(String, Subgroup)>,
    pub normals: Vec<(String, Subgroup)>,
    pub suites: Option<Vec<String>>,
}

impl ResolvedEntry {
    /// The Fox setting for the `i`-th subgroup.
    pub fn setting(&self, i: usize, n_max: usize) -> Result<FoxSetting, GroupError> {
        FoxSetting::new(self.group.clone(), self.series.clone(), self.subgroups[i].1.clone(), n_max)
    }

    /// The trivial subgroup followed by the listed normal subgroups.
    pub fn normal_choices(&self) -> Vec<(String, Subgroup)> {
        let mut out = vec![("1".to_string(), self.group.trivial_subgroup())];
        out.extend(self.normals.iter().filter(|(_, n)| !n.is_trivial()).cloned());
        out
    }
}

impl CorpusFile {
    pub fn from_json_str(s: &str) -> Result<Self, CorpusError> {
        serde_json::from_str(s).map_err(|e| CorpusError::Parse(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self, CorpusError> {
        let s = std::fs::read_to_string(path).map_err(|e| CorpusError::Io { path: path.display().to_string(), msg: e.to_string() })?;
        Self::from_json_str(&s)
    }

    /// Resolves every entry; relative table paths are taken from `base`.
    pub fn resolve(&self, base: &Path, max_order: usize) -> Result<Vec<ResolvedEntry>, CorpusError> {
        let mut seen = std::collections::BTreeSet::new();
        for e in &self.entries {
            if !seen.insert(e.id.as_str()) {
                return Err(CorpusError::Entry { id: e.id.clone(), msg: "duplicate id".into() });
            }
        }
        self.entries.iter().map(|e| e.resolve(base, max_order)).collect()
    }
}

/// Default corpus path: the environment override or the shipped file.
pub fn default_corpus_path() -> PathBuf {
    std::env::var_os(CORPUS_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(DEFAULT_CORPUS))
}

/// Loads and resolves a corpus file.
pub fn load_corpus(path: &Path, max_order: usize) -> Result<Vec<ResolvedEntry>, CorpusError> {
    let file = CorpusFile::load(path)?;
    file.resolve(path.parent().unwrap_or(Path::new(".")), max_order)
}

/// Builds the ambient group from a preset or a table file.
pub fn build_group(preset: Option<&str>, table: Option<&Path>, max_order: usize) -> Result<FiniteGroup, GroupError> {
    match (preset, table) {
        (Some(p), None) => build_preset(p, max_order),
        (None, Some(t)) => FiniteGroup::load_table(t, max_order),
        _ => Err(GroupError::InvalidParams("exactly one of a preset and a table is required".into())),
    }
}

/// Resolves a series choice on the ambient group `x` for the subgroup `g`
/// and transports it to `g` as a group in its own right. A `custom:<file>`
/// choice reads a JSON list of terms from `base/<file>`.
pub fn resolve_series(x: &FiniteGroup, g: &Subgroup, spec: &SeriesSpec, base: &Path) -> Result<(FiniteGroup, GroupSeries), GroupError> {
    let in_x = |s: &str| x.parse_subgroup(s);
    let series = match spec {
        SeriesSpec::Terms(t) => custom_in(x, g, t)?,
        SeriesSpec::Named(name) => {
            let (kind, arg) = match name.split_once(':') {
                Some((k, a)) => (k, Some(a)),
                None => (name.as_str(), None),
            };
            match (kind, arg) {
                ("gamma", None) => x.lower_central_series_of(g),
                ("intersect", parent) => {
                    let p = parent.map(in_x).transpose()?.unwrap_or_else(|| x.whole());
                    if !g.is_subset_of(&p) {
                        return Err(GroupError::InvalidSeries("the group is not inside the parent".into()));
                    }
                    let induced = x.induced_series(&x.lower_central_series_of(&p), g);
                    GroupSeries::new(x, induced.stored().to_vec(), SeriesKind::Intersected)?
                }
                ("action", ambient) => {
                    let a = ambient.map(in_x).transpose()?.unwrap_or_else(|| x.whole());
                    x.action_series(g, &a)?
                }
                ("custom", Some(file)) => {
                    let path = base.join(file);
                    let s = std::fs::read_to_string(&path).map_err(|e| GroupError::Io(format!("{}: {e}", path.display())))?;
                    let terms: Vec<String> = serde_json::from_str(&s).map_err(|e| GroupError::InvalidSeries(e.to_string()))?;
                    custom_in(x, g, &terms)?
                }
                _ => return Err(GroupError::InvalidSeries(format!("unknown series choice `{name}`"))),
            }
        }
    };
    if g == &x.whole() {
        return Ok((x.clone(), series));
    }
    x.transport_series(g, &series)
}

fn custom_in(x: &FiniteGroup, g: &Subgroup, terms: &[String]) -> Result<GroupSeries, GroupError> {
    let mut subs = Vec::with_capacity(terms.len());
    for (i, t) in terms.iter().enumerate() {
        // "G" names the group under study, not the ambient group.
        let s = if t.trim() == "G" { g.clone() } else { x.parse_subgroup(t)? };
        if i == 0 && &s != g {
            return Err(GroupError::InvalidSeries("the first term must be the whole group".into()));
        }
        subs.push(s);
    }
    GroupSeries::new(x, subs, SeriesKind::Custom)
}

/// Parses a subgroup of the ambient group `x` and moves it into `g`, whose
/// element i is the i-th element of `within`.
pub fn subgroup_in(x: &FiniteGroup, within: &Subgroup, g: &FiniteGroup, spec: &str) -> Result<Subgroup, GroupError> {
    if spec.trim() == "G" {
        return Ok(g.whole());
    }
    let s = x.parse_subgroup(spec)?;
    if !s.is_subset_of(within) {
        return Err(GroupError::NotSubgroup);
    }
    if within == &x.whole() {
        return Ok(s);
    }
    let (_, emb) = x.subgroup_group(within)?;
    g.pull_back_subgroup(&emb, &s)
}

impl CorpusEntry {
    pub fn resolve(&self, base: &Path, max_order: usize) -> Result<ResolvedEntry, CorpusError> {
        let wrap = |source: GroupError| CorpusError::Group { id: self.id.clone(), source };
        let table = self.table.as_ref().map(|t| base.join(t));
        let x = build_group(self.preset.as_deref(), table.as_deref(), max_order).map_err(wrap)?;
        let within = match &self.within {
            Some(w) => x.parse_subgroup(w).map_err(wrap)?,
            None => x.whole(),
        };
        let (g, series) = resolve_series(&x, &within, &self.series, base).map_err(wrap)?;
        if self.subgroups.is_empty() {
            return Err(CorpusError::Entry { id: self.id.clone(), msg: "no subgroups listed".into() });
        }
        let subgroups = self
            .subgroups
            .iter()
            .map(|s| Ok((s.clone(), subgroup_in(&x, &within, &g, s)?)))
            .collect::<Result<Vec<_>, GroupError>>()
            .map_err(wrap)?;
        let mut normals = Vec::new();
        for s in &self.normals {
            let n = subgroup_in(&x, &within, &g, s).map_err(wrap)?;
            if !g.is_normal(&n) {
                return Err(CorpusError::Entry { id: self.id.clone(), msg: format!("`{s}` is not normal") });
            }
            normals.push((s.clone(), n));
        }
        let name = match &self.within {
            Some(w) => format!("{}<{}>", self.preset.as_deref().unwrap_or("table"), w),
            None => self.preset.clone().unwrap_or_else(|| "table".into()),
        };
        Ok(ResolvedEntry {
            id: self.id.clone(),
            group: Arc::new(g.with_name(name)),
            series,
            series_name: self.series.describe(),
            subgroups,
            normals,
            suites: self.suites.clone(),
        })
    }
}
