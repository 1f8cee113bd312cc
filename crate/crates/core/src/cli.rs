//! Command implementations behind the `foxcalc` binary. Every command
//! returns a JSON value with deterministic content, or an error that maps to
//! an exit code.

use crate::corpus::{self, build_group, resolve_series, subgroup_in, CorpusError, SeriesSpec};
use crate::exactla::{tensor, tor, FgAbGroup, Lattice, LatticeQuotient};
use crate::groupring::{convolve, elem_minus_one, FoxSetting};
use crate::groups::{FiniteGroup, GroupError, GroupSeries, Subgroup};
use crate::lie::GradedLieRing;
use crate::report::{self, Invariants, Report, VerifyOptions};
use crate::tensor_h;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::sync::Arc;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Bound(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Bound(_) => EXIT_BOUND,
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::BoundExceeded { .. } => CliError::Bound(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<CorpusError> for CliError {
    fn from(e: CorpusError) -> Self {
        if e.is_bound() {
            CliError::Bound(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

fn input(e: impl ToString) -> CliError {
    CliError::Input(e.to_string())
}

/// The group, series and subgroup selected on the command line.
#[derive(Clone, Debug)]
pub struct GroupChoice {
    pub preset: Option<String>,
    pub table: Option<PathBuf>,
    pub series: String,
    pub subgroup: Option<String>,
    pub max_order: usize,
    pub max_degree: usize,
}

impl Default for GroupChoice {
    fn default() -> Self {
        GroupChoice {
            preset: None,
            table: None,
            series: "gamma".into(),
            subgroup: None,
            max_order: crate::groups::DEFAULT_MAX_ORDER,
            max_degree: 4,
        }
    }
}

struct Resolved {
    g: Arc<FiniteGroup>,
    series: GroupSeries,
    h: Subgroup,
}

impl GroupChoice {
    fn resolve(&self) -> Result<Resolved, CliError> {
        let g = build_group(self.preset.as_deref(), self.table.as_deref(), self.max_order)?;
        let spec = SeriesSpec::parse_flag(&self.series);
        let (g, series) = resolve_series(&g, &g.whole(), &spec, Path::new("."))?;
        let h = match &self.subgroup {
            Some(s) => subgroup_in(&g, &g.whole(), &g, s)?,
            None => g.whole(),
        };
        Ok(Resolved { g: Arc::new(g), series, h })
    }

    fn setting(&self, depth: usize) -> Result<FoxSetting, CliError> {
        if depth > self.max_degree {
            return Err(CliError::Bound(format!("filtration degree {depth} exceeds --max-degree {}", self.max_degree)));
        }
        let r = self.resolve()?;
        Ok(FoxSetting::new(r.g, r.series, r.h, depth)?)
    }
}

fn inv(a: &FgAbGroup) -> Value {
    serde_json::to_value(Invariants::from(a)).expect("invariants serialize")
}

fn ring_elem(g: &FiniteGroup, v: &[BigInt]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| if c.is_one() { g.label(i).to_string() } else { format!("{c}*{}", g.label(i)) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

fn basis_json(g: &FiniteGroup, l: &Lattice) -> Value {
    Value::Array(l.basis().iter().map(|v| Value::String(ring_elem(g, v))).collect())
}

fn quotient_json(g: &FiniteGroup, q: &LatticeQuotient, big: &Lattice, small: &Lattice, verbose: bool) -> Value {
    let mut v = json!({ "invariants": inv(q.group()), "description": q.group().describe() });
    if verbose {
        v["numerator_basis"] = basis_json(g, big);
        v["denominator_basis"] = basis_json(g, small);
    }
    v
}

/// Order, series, abelianization and the first graded pieces.
pub fn describe(c: &GroupChoice) -> Result<Value, CliError> {
    let r = c.resolve()?;
    let g = &r.g;
    let lcs = g.lower_central_series();
    let ab = g.abelianize();
    let mut out = json!({
        "group": g.name(),
        "order": g.order(),
        "exponent": g.exponent(),
        "abelian": g.is_abelian(),
        "center_order": g.center().order(),
        "lower_central_series": lcs.describe(g),
        "lower_central_orders": lcs.orders(),
        "series": c.series,
        "series_terms": r.series.describe(g),
        "series_orders": r.series.orders(),
        "abelianization": inv(ab.group()),
    });
    match GradedLieRing::new(g.clone(), &r.series) {
        Ok(l) => {
            out["graded_lie_ring"] = json!({
                "L1": inv(l.piece(1).group()),
                "L2": inv(l.piece(2).group()),
                "L3": inv(l.piece(3).group()),
                "antisymmetric": l.antisymmetric(),
                "jacobi": l.jacobi(),
            });
        }
        Err(e) => out["graded_lie_ring"] = json!({ "error": e.to_string() }),
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientKind {
    /// `F^{n-1}I(H) / F^nI(H)`.
    Fox,
    /// `F^n / F^{n+1}`.
    Aug,
    /// `F^1 / F^{n+1}`.
    Poly,
    /// `Z(G)I(H) / (Z(G)I(N)I(H) + F^nI(H))`.
    RelPoly,
}

impl std::str::FromStr for QuotientKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "fox" => Ok(QuotientKind::Fox),
            "aug" => Ok(QuotientKind::Aug),
            "poly" => Ok(QuotientKind::Poly),
            "rel-poly" => Ok(QuotientKind::RelPoly),
            _ => Err(format!("unknown quotient kind `{s}` (fox, aug, poly, rel-poly)")),
        }
    }
}

pub fn quotient(c: &GroupChoice, kind: QuotientKind, n: usize, normal: Option<&str>, verbose: bool) -> Result<Value, CliError> {
    if n == 0 {
        return Err(input("n must be at least 1"));
    }
    let depth = match kind {
        QuotientKind::Fox | QuotientKind::RelPoly => n,
        QuotientKind::Aug | QuotientKind::Poly => n + 1,
    };
    let s = c.setting(depth)?;
    let g = &s.g;
    let (big, small) = match kind {
        QuotientKind::Fox => (s.f_ih(n - 1), s.f_ih(n)),
        QuotientKind::Aug => (s.f(n).clone(), s.f(n + 1).clone()),
        QuotientKind::Poly => (s.f(1).clone(), s.f(n + 1).clone()),
        QuotientKind::RelPoly => {
            let nsub = match normal {
                Some(spec) => g.parse_subgroup(spec)?,
                None => g.trivial_subgroup(),
            };
            if !g.is_normal(&nsub) {
                return Err(input("the subgroup given by --normal is not normal"));
            }
            let big = s.ring.left_ideal_of(&s.ih);
            (big, s.sum(&[&s.prod(&s.left_ideal(&nsub), &s.ih), &s.f_ih(n)]))
        }
    };
    let q = s.quot(&big, &small);
    let mut out = json!({
        "group": g.name(),
        "order": g.order(),
        "subgroup": g.describe_subgroup(&s.h),
        "series": c.series,
        "n": n,
        "kind": format!("{kind:?}").to_lowercase(),
        "quotient": quotient_json(g, &q, &big, &small, verbose),
    });
    if kind == QuotientKind::Fox {
        let z = tensor_h::zeta_n(&s, n).map_err(input)?;
        out["zeta_surjective"] = json!(z.is_surjective());
    }
    Ok(out)
}

/// `M` from a named construction: `zero`, `aug`, `ig-ih`, `filtration:<n>`,
/// `fox:<n>` (`F^{n-1}I(H)`), `ih-power:<n>`.
pub fn subgroup(c: &GroupChoice, module: &str) -> Result<Value, CliError> {
    let (name, arg) = match module.split_once(':') {
        Some((a, b)) => (a, Some(b.parse::<usize>().map_err(|_| input(format!("bad degree in `{module}`")))?)),
        None => (module, None),
    };
    let depth = match (name, arg) {
        ("zero" | "aug" | "ig-ih", None) => 1,
        ("filtration", Some(n)) => n,
        ("fox", Some(n)) if n >= 1 => n - 1,
        ("ih-power", Some(n)) if n >= 1 => 1,
        _ => return Err(input(format!("unknown module construction `{module}`"))),
    };
    let s = c.setting(depth.max(1))?;
    let m = match (name, arg) {
        ("zero", _) => s.ring.zero(),
        ("aug", _) => s.ig(),
        ("ig-ih", _) => s.prod(&s.ig(), &s.ih),
        ("filtration", Some(n)) => s.f(n).clone(),
        ("fox", Some(n)) => s.f_ih(n - 1),
        ("ih-power", Some(n)) => s.ih_power(n),
        _ => unreachable!("checked above"),
    };
    let g = &s.g;
    let (set, closed) = s.ring.unit_coset_subgroup(&m);
    let mut out = json!({
        "group": g.name(),
        "module": module,
        "elements": set.iter().map(|&a| g.label(a)).collect::<Vec<_>>(),
        "order": set.len(),
        "is_subgroup": closed,
    });
    let mut checks = Vec::new();
    if name == "ig-ih" {
        checks.push(tensor_h::cor32(&s, &s.ih));
    }
    if name == "filtration" && c.series == "gamma" {
        let n = arg.expect("degree");
        if n <= 3 {
            // Dimension subgroups agree with the lower central series up to degree 3.
            let gamma = g.lower_central_series().term(n.max(1)).elements().to_vec();
            checks.push(tensor_h::Verdict::from_bool("dimension subgroup equals the lower central term", gamma == set, || {
                format!("orders {} vs {}", set.len(), gamma.len())
            }));
        }
    }
    if !checks.is_empty() {
        out["checks"] = serde_json::to_value(&checks).expect("verdicts serialize");
    }
    Ok(out)
}

/// Options of the `verify` command.
#[derive(Clone, Debug)]
pub struct VerifyArgs {
    pub corpus: Option<PathBuf>,
    pub suites: Option<Vec<String>>,
    pub jobs: usize,
    pub verbose: bool,
    pub max_order: usize,
    pub max_degree: usize,
}

/// Resolves the whole corpus first, so bad input never yields a partial report.
pub fn verify(a: &VerifyArgs) -> Result<Report, CliError> {
    let path = a.corpus.clone().unwrap_or_else(corpus::default_corpus_path);
    let entries = corpus::load_corpus(&path, a.max_order)?;
    let suites = report::select_suites(a.suites.as_deref()).map_err(CliError::Input)?;
    if a.max_degree < report::SUITE_DEGREE {
        return Err(CliError::Bound(format!("the suites need --max-degree {} or more", report::SUITE_DEGREE)));
    }
    let opts = VerifyOptions { suites, jobs: a.jobs, n_max: report::SUITE_DEGREE, verbose: a.verbose };
    Ok(report::verify(&entries, &opts))
}

/// Parses `Z/4`, `4`, `Z` or `0` into one cyclic factor (`0` is free).
fn parse_factor(s: &str) -> Result<i64, CliError> {
    let t = s.trim();
    let t = t.strip_prefix("Z/").unwrap_or(t);
    if t == "Z" {
        return Ok(0);
    }
    t.parse::<i64>().ok().filter(|&d| d >= 0).ok_or_else(|| input(format!("bad cyclic factor `{s}`")))
}

/// A group from `2,4` or `Z/2+Z/4`.
fn parse_abelian(s: &str) -> Result<FgAbGroup, CliError> {
    let ds = s.split([',', '+']).filter(|p| !p.trim().is_empty()).map(parse_factor).collect::<Result<Vec<_>, _>>()?;
    Ok(FgAbGroup::from_i64_divisors(&ds))
}

/// Brute-force and closed-form computations for independent inspection:
/// `filtration`, `q3`, `tensor <A> <B>`, `tor <A> <B>`.
pub fn oracle(c: &GroupChoice, id: &str, args: &[String], n: Option<usize>, verbose: bool) -> Result<Value, CliError> {
    match id {
        "filtration" => {
            let n = n.ok_or_else(|| input("oracle filtration needs --n"))?;
            let s = c.setting(n)?;
            let brute = brute_filtration(&s.g, &s.series, n);
            Ok(json!({
                "group": s.g.name(),
                "series": c.series,
                "n": n,
                "basis": basis_json(&s.g, &brute),
                "agrees_with_recursion": &brute == s.f(n),
            }))
        }
        "q3" => {
            let s = c.setting(3)?;
            let (big, small) = (s.f_ih(2), s.f_ih(3));
            let q = s.quot(&big, &small);
            Ok(json!({
                "group": s.g.name(),
                "subgroup": s.g.describe_subgroup(&s.h),
                "quotient": quotient_json(&s.g, &q, &big, &small, verbose),
            }))
        }
        "tensor" | "tor" => {
            let [a, b] = args else {
                return Err(input(format!("oracle {id} needs two groups such as Z/2 Z/4")));
            };
            let (a, b) = (parse_abelian(a)?, parse_abelian(b)?);
            let r = if id == "tensor" { tensor(&a, &b) } else { tor(&a, &b).0 };
            Ok(json!({ "computation": id, "left": a.describe(), "right": b.describe(), "result": inv(&r), "description": r.describe() }))
        }
        _ => Err(input(format!("unknown oracle `{id}` (filtration, q3, tensor, tor)"))),
    }
}

/// `F^n` as the span of all products `(a_1 - 1)...(a_r - 1)` whose series
/// weights add up to at least `n`, grouped by accumulated weight (capped at
/// `n`) so that only spanning sets are carried along.
pub fn brute_filtration(g: &FiniteGroup, series: &GroupSeries, n: usize) -> Lattice {
    let dim = g.order();
    if n == 0 {
        return Lattice::full(dim);
    }
    let w: Vec<usize> = g.elements().map(|a| series.weight(a, n)).collect();
    let mut one = vec![BigInt::zero(); dim];
    one[0] = BigInt::one();
    let mut layers: Vec<Vec<Vec<BigInt>>> = vec![Vec::new(); n + 1];
    layers[0].push(one);
    for wt in 0..n {
        let span = Lattice::new(dim, std::mem::take(&mut layers[wt]));
        for p in span.basis() {
            for a in g.elements().skip(1) {
                layers[(wt + w[a]).min(n)].push(convolve(g, p, &elem_minus_one(dim, a)));
            }
        }
    }
    Lattice::new(dim, std::mem::take(&mut layers[n]))
}
