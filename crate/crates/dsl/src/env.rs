//! Evaluation environments: `{"carriers": {...}, "rels": {...}, "mrels": {...}}`.
//!
//! A carrier is given by its size or by its list of element names.

use std::collections::BTreeMap;

use multirel::{Carrier, MRel, Rel};
use serde::{Deserialize, Serialize};

use crate::ast::{Term, TyExpr};
use crate::error::{DslError, Result};
use crate::eval::Value;
use crate::types::{infer, Context};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Env {
    pub carriers: BTreeMap<String, Carrier>,
    pub rels: BTreeMap<String, Rel>,
    pub mrels: BTreeMap<String, MRel>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CarrierJson {
    Size(usize),
    Names(Vec<String>),
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct EnvJson {
    #[serde(default)]
    carriers: BTreeMap<String, CarrierJson>,
    #[serde(default)]
    rels: BTreeMap<String, Rel>,
    #[serde(default)]
    mrels: BTreeMap<String, MRel>,
}

impl Env {
    pub fn from_json(text: &str) -> Result<Env> {
        let j: EnvJson = serde_json::from_str(text).map_err(|e| DslError::Env(e.to_string()))?;
        let mut carriers = BTreeMap::new();
        for (name, c) in j.carriers {
            let c = match c {
                CarrierJson::Size(n) => Carrier::new(n),
                CarrierJson::Names(names) => Carrier::named(names).map_err(|e| DslError::Env(e.to_string()))?,
            };
            carriers.insert(name, c);
        }
        let env = Env { carriers, rels: j.rels, mrels: j.mrels };
        env.check_names()?;
        Ok(env)
    }

    pub fn to_json(&self) -> String {
        let carriers = self
            .carriers
            .iter()
            .map(|(n, c)| {
                let j = match c.names() {
                    Some(names) => CarrierJson::Names(names.to_vec()),
                    None => CarrierJson::Size(c.size()),
                };
                (n.clone(), j)
            })
            .collect();
        let j = EnvJson { carriers, rels: self.rels.clone(), mrels: self.mrels.clone() };
        serde_json::to_string(&j).expect("environments serialize")
    }

    fn check_names(&self) -> Result<()> {
        let mut seen = std::collections::BTreeSet::new();
        let names = self.carriers.keys().chain(self.rels.keys()).chain(self.mrels.keys());
        for n in names {
            if !seen.insert(n) {
                return Err(DslError::Env(format!("name `{n}` is bound twice")));
            }
        }
        Ok(())
    }

    pub fn value(&self, name: &str) -> Option<Value> {
        self.rels
            .get(name)
            .map(|r| Value::Rel(r.clone()))
            .or_else(|| self.mrels.get(name).map(|m| Value::MRel(m.clone())))
    }

    /// Typing context: carriers by size, variables by their value shapes.
    pub fn context(&self) -> Context {
        let mut vars = BTreeMap::new();
        for (n, r) in &self.rels {
            vars.insert(n.clone(), (TyExpr::Size(r.src()), TyExpr::Size(r.dst())));
        }
        for (n, m) in &self.mrels {
            vars.insert(n.clone(), (TyExpr::Size(m.src()), TyExpr::Pow(Box::new(TyExpr::Size(m.dst())))));
        }
        let carriers = self.carriers.iter().map(|(n, c)| (n.clone(), c.size())).collect();
        Context { carriers, vars, allow_free: false }
    }
}

/// Evaluates a closed term against an environment.
pub fn eval(term: &Term, env: &Env) -> Result<Value> {
    env.check_names()?;
    let typed = infer(&[term], &env.context())?;
    let program = typed.compile(&[])?;
    let values = program
        .slots()
        .iter()
        .map(|s| env.value(&s.name).ok_or_else(|| DslError::UnboundVariable(s.name.clone())))
        .collect::<Result<Vec<_>>>()?;
    program.eval(0, &values)
}
