//! Law records: typed variables, side conditions, a claim and pinned instances.

use std::collections::BTreeMap;

use multirel::generate::Instance;
use multirel::{Class, MRel, Rel, SubsetMask};
use multirel_dsl::{infer, parse, parse_type, Context, DslError, Program, Slot, Term, TyExpr, Typed, Value};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

/// What a law is declared to do.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LawKind {
    /// Holds on every instance honouring the side conditions.
    Theorem,
    /// Fails; a stored witness is checked before any search.
    NonTheorem,
    /// Evaluated on its pinned instances only, with a declared outcome.
    Regression(Verdict),
}

impl LawKind {
    pub fn name(self) -> &'static str {
        match self {
            LawKind::Theorem => "theorem",
            LawKind::NonTheorem => "non-theorem",
            LawKind::Regression(_) => "regression",
        }
    }

    pub fn expected(self) -> Verdict {
        match self {
            LawKind::Theorem => Verdict::Pass,
            LawKind::NonTheorem => Verdict::Fail,
            LawKind::Regression(v) => v,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VarDecl {
    pub name: String,
    pub src: TyExpr,
    pub dst: TyExpr,
    pub conditions: Vec<Class>,
}

/// One fixed instance: carrier sizes and a value per variable, written in
/// the compact notation of [`parse_value`].
#[derive(Debug, Clone)]
pub struct Pinned {
    pub sizes: BTreeMap<String, usize>,
    pub bindings: Vec<(String, String)>,
}

#[derive(Debug, Clone)]
pub struct Law {
    pub id: String,
    pub kind: LawKind,
    /// The claim in mathematical notation.
    pub statement: String,
    pub vars: Vec<VarDecl>,
    pub claim: Term,
    pub sizes: BTreeMap<String, usize>,
    pub pinned: Vec<Pinned>,
    pub note: String,
}

/// Builder used by the registry; panics on malformed data, which the
/// registry tests catch.
pub struct LawBuilder(Law);

pub fn law(id: &str, kind: LawKind, statement: &str) -> LawBuilder {
    LawBuilder(Law {
        id: id.to_string(),
        kind,
        statement: statement.to_string(),
        vars: Vec::new(),
        claim: Term::Bool(true),
        sizes: BTreeMap::new(),
        pinned: Vec::new(),
        note: String::new(),
    })
}

impl LawBuilder {
    pub fn var(mut self, name: &str, src: &str, dst: &str) -> Self {
        let ty = |t: &str| parse_type(t).unwrap_or_else(|e| panic!("{}: type {t}: {e}", self.0.id));
        let (src, dst) = (ty(src), ty(dst));
        self.0.vars.push(VarDecl { name: name.to_string(), src, dst, conditions: Vec::new() });
        self
    }

    /// A relation `src ↔ dst`.
    pub fn rel(self, name: &str, src: &str, dst: &str) -> Self {
        self.var(name, src, dst)
    }

    /// A multirelation `src ↔ P dst`.
    pub fn mrel(self, name: &str, src: &str, dst: &str) -> Self {
        self.var(name, src, &format!("P {dst}"))
    }

    /// Same condition on several variables.
    pub fn conds(mut self, names: &[&str], class: Class) -> Self {
        for n in names {
            self = self.cond(n, class);
        }
        self
    }

    pub fn cond(mut self, name: &str, class: Class) -> Self {
        let id = self.0.id.clone();
        let v = self.0.vars.iter_mut().find(|v| v.name == name).unwrap_or_else(|| panic!("{id}: no variable {name}"));
        v.conditions.push(class);
        self
    }

    pub fn claim(mut self, text: &str) -> Self {
        self.0.claim = parse(text).unwrap_or_else(|e| panic!("{}: claim {text}: {e}", self.0.id));
        self
    }

    pub fn sizes(mut self, sizes: &[(&str, usize)]) -> Self {
        self.0.sizes.extend(sizes.iter().map(|(n, s)| (n.to_string(), *s)));
        self
    }

    pub fn pin(mut self, sizes: &[(&str, usize)], bindings: &[(&str, &str)]) -> Self {
        self.0.pinned.push(Pinned {
            sizes: sizes.iter().map(|(n, s)| (n.to_string(), *s)).collect(),
            bindings: bindings.iter().map(|(n, v)| (n.to_string(), v.to_string())).collect(),
        });
        self
    }

    pub fn note(mut self, text: &str) -> Self {
        self.0.note = text.to_string();
        self
    }

    pub fn build(self) -> Law {
        self.0
    }
}

/// Default size of a carrier a law does not size explicitly.
pub const DEFAULT_SIZE: usize = 2;

impl Law {
    /// An ad hoc law over undeclared variables, as used by `find-cex`.
    pub fn adhoc(claim: Term) -> Law {
        Law {
            id: "adhoc".to_string(),
            kind: LawKind::Theorem,
            statement: claim.to_string(),
            vars: Vec::new(),
            claim,
            sizes: BTreeMap::new(),
            pinned: Vec::new(),
            note: String::new(),
        }
    }

    pub fn decl(&self, name: &str) -> Option<&VarDecl> {
        self.vars.iter().find(|v| v.name == name)
    }

    /// The claim with its two sides; sides are `None` unless the claim is a
    /// comparison or a binary connective.
    pub fn sides(&self) -> (Option<&Term>, Option<&Term>) {
        match &self.claim {
            Term::Cmp(_, l, r) | Term::Logic(_, l, r) => (Some(l), Some(r)),
            _ => (None, None),
        }
    }

    /// Infers types for the claim; its sides become roots 1 and 2.
    pub fn typed(&self) -> Result<Typed, DslError> {
        let vars = self.vars.iter().map(|v| (v.name.clone(), (v.src.clone(), v.dst.clone()))).collect();
        let ctx = Context { carriers: BTreeMap::new(), vars, allow_free: true };
        if let Some(v) = self.claim.variables().into_iter().find(|n| self.decl(n).is_none() && !self.vars.is_empty()) {
            return Err(DslError::UnboundVariable(v));
        }
        Ok(infer(&[&self.claim], &ctx)?.with_sides())
    }

    /// Carrier names in `--sizes` order: named carriers alphabetically, then
    /// anonymous ones in order of appearance.
    pub fn carrier_order(typed: &Typed) -> Vec<String> {
        let mut names = typed.free_carriers().to_vec();
        names.sort_by_key(|n| match n.strip_prefix('_').and_then(|i| i.parse::<usize>().ok()) {
            Some(i) => (1, i, String::new()),
            None => (0, 0, n.clone()),
        });
        names
    }

    /// Sizes per carrier: positional `overrides` (last repeated), else the
    /// law's declared size, else [`DEFAULT_SIZE`].
    pub fn resolve_sizes(&self, typed: &Typed, overrides: Option<&[usize]>) -> BTreeMap<String, usize> {
        Law::carrier_order(typed)
            .into_iter()
            .enumerate()
            .map(|(i, name)| {
                let size = match overrides {
                    Some(o) if !o.is_empty() => o[i.min(o.len() - 1)],
                    _ => self.sizes.get(&name).copied().unwrap_or(DEFAULT_SIZE),
                };
                (name, size)
            })
            .collect()
    }

    pub fn compile(typed: &Typed, sizes: &BTreeMap<String, usize>) -> Result<Program, DslError> {
        let fixed: Vec<usize> =
            typed.free_carriers().iter().map(|n| sizes.get(n).copied().unwrap_or(DEFAULT_SIZE)).collect();
        typed.compile(&fixed)
    }

    pub fn conditions(&self, name: &str) -> &[Class] {
        self.decl(name).map_or(&[], |v| &v.conditions)
    }

    /// Whether `values` (in slot order) honour every side condition.
    pub fn admits(&self, slots: &[Slot], values: &[Value]) -> bool {
        slots.iter().zip(values).all(|(slot, v)| {
            let inst = match v {
                Value::Rel(r) => Instance::Rel(r.clone()),
                Value::MRel(m) => Instance::MRel(m.clone()),
                Value::Bool(_) => return true,
            };
            self.conditions(&slot.name).iter().all(|&c| inst.satisfies(c))
        })
    }
}

/// Parses the compact instance notation against a slot's shape.
///
/// Relations are whitespace-separated `a:b` pairs, multirelations `a:{b,c}`
/// pairs; the empty string is the empty value.
pub fn parse_value(text: &str, slot: &Slot) -> Result<Value, String> {
    let (src, dst) = slot.shape().ok_or_else(|| format!("slot {} has no fixed shape", slot.name))?;
    let mut rel_pairs = Vec::new();
    let mut mrel_pairs = Vec::new();
    for tok in text.split_whitespace() {
        let (a, rest) = tok.split_once(':').ok_or_else(|| format!("pair `{tok}` lacks `:`"))?;
        let a: usize = a.parse().map_err(|_| format!("bad element in `{tok}`"))?;
        if slot.is_mrel() {
            let inner = rest
                .strip_prefix('{')
                .and_then(|r| r.strip_suffix('}'))
                .ok_or_else(|| format!("pair `{tok}` needs a braced set"))?;
            let elems = inner
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| format!("bad element in `{tok}`")))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(e) = elems.iter().find(|&&e| e >= dst) {
                return Err(format!("element {e} outside carrier of size {dst}"));
            }
            mrel_pairs.push((a, SubsetMask::from_elems(elems)));
        } else {
            rel_pairs.push((a, rest.parse::<usize>().map_err(|_| format!("bad element in `{tok}`"))?));
        }
    }
    if slot.is_mrel() {
        MRel::from_pairs(src, dst, mrel_pairs).map(Value::MRel).map_err(|e| e.to_string())
    } else {
        Rel::from_pairs(src, dst, rel_pairs).map(Value::Rel).map_err(|e| e.to_string())
    }
}
