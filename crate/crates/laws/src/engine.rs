//! Checking laws: pinned instances, exhaustive or seeded random search,
//! and shrinking of the first failing instance.
//!
//! Exhaustive search walks the product of the per-slot instance spaces with
//! slot 0 as the least significant digit. Random instance `i` draws slot `s`
//! from stream `i · slots + s`. Both are split across rayon workers and
//! merged by instance index, so a report depends only on the law, the sizes
//! and the seed.

use std::collections::BTreeMap;
use std::time::Instant;

use multirel::generate::{rng_for, Instance};
use multirel::{Kind, MRel, Space, SubsetMask};
use multirel_dsl::{DslError, Program, Slot, TyExpr, Typed, Value};
use rayon::prelude::*;
use serde::Serialize;

use crate::law::{parse_value, Law, LawKind, Verdict};
use crate::registry::registry;

/// Largest instance-tuple space searched exhaustively.
pub const EXHAUSTIVE_LIMIT: u128 = 1 << 18;
pub const DEFAULT_SAMPLES: usize = 2000;
pub const DEFAULT_DENSITY: f64 = 0.5;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, thiserror::Error)]
pub enum EngineError {
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error(transparent)]
    Dsl(#[from] DslError),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOptions {
    /// Positional carrier sizes; the last one repeats.
    pub sizes: Option<Vec<usize>>,
    pub seed: u64,
    /// Forces random mode with `(count, density)`.
    pub random: Option<(usize, f64)>,
    pub timing: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { sizes: None, seed: DEFAULT_SEED, random: None, timing: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random,
    Pinned,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counterexample {
    pub sizes: BTreeMap<String, usize>,
    pub bindings: BTreeMap<String, serde_json::Value>,
    pub lhs: Option<serde_json::Value>,
    pub rhs: Option<serde_json::Value>,
    #[serde(skip)]
    pub values: Vec<(String, Value)>,
}

impl Counterexample {
    /// Total number of pairs over all bindings.
    pub fn pair_count(&self) -> usize {
        self.values.iter().map(|(_, v)| v.pair_count()).sum()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub law: String,
    pub kind: &'static str,
    pub mode: Mode,
    pub sizes: BTreeMap<String, usize>,
    pub checked: u64,
    pub skipped_by_condition: u64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub expected: Verdict,
    pub as_declared: bool,
    pub counterexamples: Vec<Counterexample>,
    pub seed: u64,
    pub elapsed_ms: Option<u64>,
}

pub fn find_law(id: &str) -> Result<&'static Law, EngineError> {
    registry().iter().find(|l| l.id == id).ok_or_else(|| EngineError::UnknownLaw(id.to_string()))
}

pub fn check_id(id: &str, opts: &CheckOptions) -> Result<Report, EngineError> {
    check(find_law(id)?, opts)
}

/// Outcome of one evaluation.
enum Outcome {
    Holds,
    Fails,
    Error(String),
}

fn judge(program: &Program, values: &[Value]) -> Outcome {
    match program.eval_bool(0, values) {
        Ok(true) => Outcome::Holds,
        Ok(false) => Outcome::Fails,
        Err(e) => Outcome::Error(e.to_string()),
    }
}

/// Cap errors while compiling become a skipped verdict; others are errors.
fn compile(typed: &Typed, sizes: &BTreeMap<String, usize>) -> Result<Result<Program, String>, EngineError> {
    match Law::compile(typed, sizes) {
        Ok(p) => Ok(Ok(p)),
        Err(e) if e.is_cap() => Ok(Err(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

struct Run {
    report: Report,
    start: Instant,
    timing: bool,
}

impl Run {
    fn finish(mut self, verdict: Verdict, reason: Option<String>) -> Report {
        let r = &mut self.report;
        r.verdict = verdict;
        r.reason = reason;
        r.as_declared = verdict == r.expected;
        r.counterexamples.sort_by_key(|c| serde_json::to_string(c).expect("counterexamples serialize"));
        if self.timing {
            r.elapsed_ms = Some(self.start.elapsed().as_millis() as u64);
        }
        self.report
    }
}

pub fn check(law: &Law, opts: &CheckOptions) -> Result<Report, EngineError> {
    let typed = law.typed()?;
    let expected = law.kind.expected();
    let mut run = Run {
        report: Report {
            law: law.id.clone(),
            kind: law.kind.name(),
            mode: Mode::Pinned,
            sizes: BTreeMap::new(),
            checked: 0,
            skipped_by_condition: 0,
            verdict: Verdict::Skipped,
            reason: None,
            expected,
            as_declared: false,
            counterexamples: Vec::new(),
            seed: opts.seed,
            elapsed_ms: None,
        },
        start: Instant::now(),
        timing: opts.timing,
    };

    for pin in &law.pinned {
        let program = match compile(&typed, &pin.sizes)? {
            Ok(p) => p,
            Err(reason) => return Ok(run.finish(Verdict::Skipped, Some(reason))),
        };
        let values = pinned_values(law, &program, &pin.bindings)?;
        if !law.admits(program.slots(), &values) {
            return Err(EngineError::Invalid(format!("{}: a pinned instance violates the side conditions", law.id)));
        }
        run.report.checked += 1;
        match judge(&program, &values) {
            Outcome::Holds => {}
            Outcome::Fails => run.report.counterexamples.push(counterexample(&program, values)),
            Outcome::Error(reason) => return Ok(run.finish(Verdict::Skipped, Some(reason))),
        }
    }
    let pinned_failed = !run.report.counterexamples.is_empty();
    if matches!(law.kind, LawKind::Regression(_)) || (law.kind == LawKind::NonTheorem && pinned_failed) {
        if let [pin, ..] = law.pinned.as_slice() {
            run.report.sizes = pin.sizes.clone();
        }
        let v = if pinned_failed { Verdict::Fail } else { Verdict::Pass };
        return Ok(run.finish(v, None));
    }

    let sizes = law.resolve_sizes(&typed, opts.sizes.as_deref());
    run.report.sizes = sizes.clone();
    let program = match compile(&typed, &sizes)? {
        Ok(p) => p,
        Err(reason) => return Ok(run.finish(Verdict::Skipped, Some(reason))),
    };
    let spaces = match slot_spaces(law, program.slots()) {
        Ok(s) => s,
        Err(reason) => return Ok(run.finish(Verdict::Skipped, Some(reason))),
    };
    let total = spaces.iter().try_fold(1u128, |acc, s| s.len().and_then(|n| acc.checked_mul(n)));
    let search = match (opts.random, total) {
        (None, Some(n)) if n <= EXHAUSTIVE_LIMIT => {
            run.report.mode = Mode::Exhaustive;
            exhaustive(&program, &spaces, n)
        }
        (random, _) => {
            let (count, density) = random.unwrap_or((DEFAULT_SAMPLES, DEFAULT_DENSITY));
            multirel::generate::check_density(density).map_err(|e| EngineError::Invalid(e.to_string()))?;
            run.report.mode = Mode::Random;
            sampled(&program, &spaces, count, density, opts.seed)
        }
    };
    run.report.checked += search.checked;
    run.report.skipped_by_condition = search.rejected;
    if let Some((_, reason)) = search.error.filter(|(i, _)| search.fail.as_ref().is_none_or(|(f, _)| i < f)) {
        return Ok(run.finish(Verdict::Skipped, Some(reason)));
    }
    if let Some((_, values)) = search.fail {
        let (sizes, program, values) = shrink(law, &typed, sizes, program, values);
        let mut cex = counterexample(&program, values);
        cex.sizes = sizes;
        run.report.counterexamples.push(cex);
    }
    if run.report.counterexamples.is_empty() && search.checked == 0 {
        return Ok(run.finish(Verdict::Skipped, Some("no instance satisfies the side conditions".into())));
    }
    let v = if run.report.counterexamples.is_empty() { Verdict::Pass } else { Verdict::Fail };
    Ok(run.finish(v, None))
}

fn pinned_values(law: &Law, program: &Program, bindings: &[(String, String)]) -> Result<Vec<Value>, EngineError> {
    program
        .slots()
        .iter()
        .map(|slot| {
            let text = bindings
                .iter()
                .find(|(n, _)| *n == slot.name)
                .map(|(_, t)| t.as_str())
                .ok_or_else(|| EngineError::Invalid(format!("{}: no pinned value for {}", law.id, slot.name)))?;
            parse_value(text, slot).map_err(|e| EngineError::Invalid(format!("{}: {}: {e}", law.id, slot.name)))
        })
        .collect()
}

fn counterexample(program: &Program, values: Vec<Value>) -> Counterexample {
    let side = |i: usize| (program.root_count() > i).then(|| program.eval(i, &values).ok()).flatten();
    Counterexample {
        sizes: program.carriers().iter().cloned().collect(),
        bindings: program.slots().iter().zip(&values).map(|(s, v)| (s.name.clone(), v.to_json())).collect(),
        lhs: side(1).map(|v| v.to_json()),
        rhs: side(2).map(|v| v.to_json()),
        values: program.slots().iter().map(|s| s.name.clone()).zip(values).collect(),
    }
}

fn slot_spaces(law: &Law, slots: &[Slot]) -> Result<Vec<Space>, String> {
    slots
        .iter()
        .map(|slot| {
            let (src, dst) = slot.shape().ok_or_else(|| format!("slot {} is too large to generate", slot.name))?;
            let kind = if slot.is_mrel() { Kind::MRel } else { Kind::Rel };
            Space::new(kind, src, dst, law.conditions(&slot.name)).map_err(|e| e.to_string())
        })
        .collect()
}

fn to_value(inst: Instance) -> Value {
    match inst {
        Instance::Rel(r) => Value::Rel(r),
        Instance::MRel(m) => Value::MRel(m),
    }
}

#[derive(Default)]
struct Search {
    checked: u64,
    rejected: u64,
    /// Earliest failing instance.
    fail: Option<(u128, Vec<Value>)>,
    /// Earliest evaluation error.
    error: Option<(u128, String)>,
}

impl Search {
    fn merge(mut self, other: Search) -> Search {
        self.checked += other.checked;
        self.rejected += other.rejected;
        self.fail = earliest(self.fail, other.fail);
        self.error = earliest(self.error, other.error);
        self
    }

    fn record(mut self, index: u128, values: Option<Vec<Value>>, program: &Program) -> Search {
        let Some(values) = values else {
            self.rejected += 1;
            return self;
        };
        match judge(program, &values) {
            Outcome::Holds => self.checked += 1,
            Outcome::Fails => {
                self.checked += 1;
                self.fail = earliest(self.fail, Some((index, values)));
            }
            Outcome::Error(e) => self.error = earliest(self.error, Some((index, e))),
        }
        self
    }
}

fn earliest<T>(a: Option<(u128, T)>, b: Option<(u128, T)>) -> Option<(u128, T)> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if b.0 < a.0 { b } else { a }),
        (a, b) => a.or(b),
    }
}

fn exhaustive(program: &Program, spaces: &[Space], total: u128) -> Search {
    (0..total as u64)
        .into_par_iter()
        .fold(Search::default, |acc, i| {
            let mut rest = i as u128;
            let values = spaces
                .iter()
                .map(|space| {
                    let n = space.len().expect("bounded space");
                    let inst = space.get(rest % n);
                    rest /= n;
                    space.accepts(&inst).then(|| to_value(inst))
                })
                .collect::<Option<Vec<_>>>();
            acc.record(i as u128, values, program)
        })
        .reduce(Search::default, Search::merge)
}

fn sampled(program: &Program, spaces: &[Space], count: usize, density: f64, seed: u64) -> Search {
    let n = spaces.len() as u64;
    (0..count as u64)
        .into_par_iter()
        .fold(Search::default, |acc, i| {
            let values = spaces
                .iter()
                .enumerate()
                .map(|(s, space)| space.sample(&mut rng_for(seed, i * n + s as u64), density).map(to_value))
                .collect::<Option<Vec<_>>>();
            acc.record(i as u128, values, program)
        })
        .reduce(Search::default, Search::merge)
}

/// Smallest form of a failing instance under the reduction order: remove
/// pairs, then shrink masks one element at a time, then drop unused top
/// elements of carriers. Every step is re-validated against the side
/// conditions and the claim.
pub fn shrink(
    law: &Law,
    typed: &Typed,
    mut sizes: BTreeMap<String, usize>,
    mut program: Program,
    mut values: Vec<Value>,
) -> (BTreeMap<String, usize>, Program, Vec<Value>) {
    let fails = |p: &Program, v: &[Value]| law.admits(p.slots(), v) && matches!(judge(p, v), Outcome::Fails);
    debug_assert!(fails(&program, &values));
    let shapes: BTreeMap<String, (Option<TyExpr>, Option<TyExpr>)> =
        typed.var_types().into_iter().map(|(n, s, d)| (n, (s, d))).collect();
    loop {
        if let Some(v) = first_success(&values, remove_pair, |v| fails(&program, v)) {
            values = v;
            continue;
        }
        if let Some(v) = first_success(&values, shrink_mask, |v| fails(&program, v)) {
            values = v;
            continue;
        }
        let mut dropped = false;
        for carrier in Law::carrier_order(typed) {
            let n = sizes[&carrier];
            if n <= 1 {
                continue;
            }
            let Some(smaller) = drop_top(&carrier, n, program.slots(), &values, &shapes) else { continue };
            let mut s = sizes.clone();
            s.insert(carrier, n - 1);
            if let Ok(p) = Law::compile(typed, &s) {
                if fails(&p, &smaller) {
                    (sizes, program, values) = (s, p, smaller);
                    dropped = true;
                    break;
                }
            }
        }
        if !dropped {
            return (sizes, program, values);
        }
    }
}

/// The first single-step candidate (by slot, then by candidate order) that
/// still fails.
fn first_success(
    values: &[Value],
    candidates: fn(&Value) -> Vec<Value>,
    fails: impl Fn(&[Value]) -> bool,
) -> Option<Vec<Value>> {
    for (k, v) in values.iter().enumerate() {
        for c in candidates(v) {
            let mut next = values.to_vec();
            next[k] = c;
            if fails(&next) {
                return Some(next);
            }
        }
    }
    None
}

fn remove_pair(v: &Value) -> Vec<Value> {
    match v {
        Value::Rel(r) => r
            .pairs()
            .map(|(a, b)| {
                let mut r = r.clone();
                r.remove(a, b);
                Value::Rel(r)
            })
            .collect(),
        Value::MRel(m) => m.pairs().map(|p| Value::MRel(rebuild(m, m.pairs().filter(|&q| q != p)))).collect(),
        Value::Bool(_) => Vec::new(),
    }
}

fn shrink_mask(v: &Value) -> Vec<Value> {
    let Value::MRel(m) = v else { return Vec::new() };
    m.pairs()
        .flat_map(|(a, mask)| {
            mask.elems().map(move |e| {
                let pairs = m.pairs().filter(move |&q| q != (a, mask)).chain([(a, mask.without(e))]);
                Value::MRel(rebuild(m, pairs))
            })
        })
        .collect()
}

fn rebuild(m: &MRel, pairs: impl IntoIterator<Item = (usize, SubsetMask)>) -> MRel {
    MRel::from_pairs(m.src(), m.dst(), pairs).expect("pairs stay in range")
}

/// Values with the top element of `carrier` (size `n`) removed, provided
/// no value uses it and every mention of the carrier is a plain source,
/// target or mask dimension.
fn drop_top(
    carrier: &str,
    n: usize,
    slots: &[Slot],
    values: &[Value],
    shapes: &BTreeMap<String, (Option<TyExpr>, Option<TyExpr>)>,
) -> Option<Vec<Value>> {
    let named = |t: &TyExpr| matches!(t, TyExpr::Named(c) if c == carrier);
    let top = n - 1;
    slots
        .iter()
        .zip(values)
        .map(|(slot, v)| {
            let (src, dst) = shapes.get(&slot.name)?;
            let (src, dst) = (src.as_ref()?, dst.as_ref()?);
            let rows = named(src);
            if !rows && mentions(src, carrier) {
                return None;
            }
            match v {
                Value::Rel(r) => {
                    let cols = named(dst);
                    if !cols && mentions(dst, carrier) {
                        return None;
                    }
                    if r.pairs().any(|(a, b)| (rows && a == top) || (cols && b == top)) {
                        return None;
                    }
                    let (s, d) = (r.src() - rows as usize, r.dst() - cols as usize);
                    Some(Value::Rel(multirel::Rel::from_pairs(s, d, r.pairs()).ok()?))
                }
                Value::MRel(m) => {
                    let bits = matches!(dst, TyExpr::Pow(t) if named(t));
                    if !bits && mentions(dst, carrier) {
                        return None;
                    }
                    if m.pairs().any(|(a, mask)| (rows && a == top) || (bits && mask.contains(top))) {
                        return None;
                    }
                    let (s, d) = (m.src() - rows as usize, m.dst() - bits as usize);
                    Some(Value::MRel(MRel::from_pairs(s, d, m.pairs()).ok()?))
                }
                Value::Bool(_) => Some(v.clone()),
            }
        })
        .collect()
}

fn mentions(t: &TyExpr, carrier: &str) -> bool {
    match t {
        TyExpr::Named(c) => c == carrier,
        TyExpr::Size(_) => false,
        TyExpr::Pow(t) => mentions(t, carrier),
    }
}
