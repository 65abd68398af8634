//! Carrier inference.
//!
//! Every relational term has a type `S ↔ D` over carrier types built from
//! named or sized carriers and `P`. Types are unified by size: a sized
//! carrier `n` unifies with `P t` exactly when `n = 2^|t|`. Carrier
//! variables left open after inference are the term's free carriers, in
//! order of first appearance among the leaves.

use std::collections::BTreeMap;
use std::fmt;

use crate::ast::{BinOp, CmpOp, Const, LogicOp, Pred, Term, TyExpr, UnOp};
use crate::error::{DslError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Ty {
    Var(usize),
    Base(usize),
    Pow(Box<Ty>),
}

fn pow(t: Ty) -> Ty {
    Ty::Pow(Box::new(t))
}

/// A fully resolved carrier type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CTy {
    Base(usize),
    Pow(Box<CTy>),
}

impl CTy {
    /// Number of elements; `None` when it does not fit a machine word.
    pub fn size(&self) -> Option<usize> {
        match self {
            CTy::Base(n) => Some(*n),
            CTy::Pow(t) => {
                let n = t.size()?;
                (n < usize::BITS as usize - 1).then(|| 1usize << n)
            }
        }
    }

    /// Width of the subset masks when this is a destination `P t`.
    pub fn power_of(&self) -> Option<&CTy> {
        match self {
            CTy::Pow(t) => Some(t),
            CTy::Base(_) => None,
        }
    }
}

impl fmt::Display for CTy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CTy::Base(n) => write!(f, "{n}"),
            CTy::Pow(t) => write!(f, "P {t}"),
        }
    }
}

/// Declared carriers and variable types for inference.
#[derive(Debug, Clone, Default)]
pub struct Context {
    pub carriers: BTreeMap<String, usize>,
    pub vars: BTreeMap<String, (TyExpr, TyExpr)>,
    /// Undeclared variables and carrier names become free instead of errors.
    pub allow_free: bool,
}

#[derive(Debug, Clone)]
pub(crate) enum Shape {
    Rel(Ty, Ty),
    Bool,
}

#[derive(Debug, Clone)]
pub(crate) enum TOp {
    Var(String),
    Const(Const),
    Bool(bool),
    Unary(UnOp),
    Binary(BinOp),
    Pred(Pred),
    Cmp(CmpOp),
    Not,
    Logic(LogicOp),
}

/// A term annotated with (possibly open) types.
#[derive(Debug, Clone)]
pub(crate) struct TNode {
    pub op: TOp,
    pub shape: Shape,
    pub kids: Vec<TNode>,
    pub text: String,
}

/// Result of inference over one or more terms sharing variables.
#[derive(Debug, Clone)]
pub struct Typed {
    pub(crate) roots: Vec<TNode>,
    pub(crate) bind: Vec<Option<Ty>>,
    /// Variables in first-appearance order with their types.
    pub(crate) vars: Vec<(String, Ty, Ty)>,
    pub(crate) free: Vec<usize>,
    pub(crate) free_names: Vec<String>,
}

impl Typed {
    /// Adds the two operands of a binary root 0 as roots 1 and 2, typed
    /// consistently with the whole claim.
    pub fn with_sides(mut self) -> Self {
        if let Some(root) = self.roots.first() {
            if let [l, r] = root.kids.as_slice() {
                let sides = [l.clone(), r.clone()];
                self.roots.extend(sides);
            }
        }
        self
    }

    /// Names of the free carriers; anonymous ones are `_0`, `_1`, ...
    pub fn free_carriers(&self) -> &[String] {
        &self.free_names
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.vars.iter().map(|(n, _, _)| n.as_str())
    }

    /// Variable types with free carriers written by name; `None` for a type
    /// that stays open without being a free carrier.
    pub fn var_types(&self) -> Vec<(String, Option<TyExpr>, Option<TyExpr>)> {
        self.vars.iter().map(|(n, s, d)| (n.clone(), self.symbolic(s), self.symbolic(d))).collect()
    }

    fn symbolic(&self, t: &Ty) -> Option<TyExpr> {
        match self.resolve(t) {
            Ty::Var(v) => {
                let i = self.free.iter().position(|&f| f == v)?;
                Some(TyExpr::Named(self.free_names[i].clone()))
            }
            Ty::Base(n) => Some(TyExpr::Size(n)),
            Ty::Pow(t) => Some(TyExpr::Pow(Box::new(self.symbolic(&t)?))),
        }
    }

    pub(crate) fn resolve(&self, t: &Ty) -> Ty {
        resolve(&self.bind, t)
    }
}

fn resolve(bind: &[Option<Ty>], t: &Ty) -> Ty {
    match t {
        Ty::Var(v) => match &bind[*v] {
            Some(b) => resolve(bind, b),
            None => t.clone(),
        },
        Ty::Base(n) => Ty::Base(*n),
        Ty::Pow(t) => pow(resolve(bind, t)),
    }
}

fn show(bind: &[Option<Ty>], t: &Ty) -> String {
    match resolve(bind, t) {
        Ty::Var(v) => format!("?{v}"),
        Ty::Base(n) => n.to_string(),
        Ty::Pow(t) => format!("P {}", show(bind, &t)),
    }
}

fn free_vars(bind: &[Option<Ty>], t: &Ty, out: &mut Vec<usize>) {
    match resolve(bind, t) {
        Ty::Var(v) => {
            if !out.contains(&v) {
                out.push(v)
            }
        }
        Ty::Base(_) => {}
        Ty::Pow(t) => free_vars(bind, &t, out),
    }
}

pub fn infer(terms: &[&Term], ctx: &Context) -> Result<Typed> {
    let mut inf = Infer { ctx, bind: Vec::new(), named: BTreeMap::new(), vars: Vec::new(), leaves: Vec::new() };
    let roots = terms.iter().map(|t| inf.term(t)).collect::<Result<Vec<_>>>()?;
    let mut free = Vec::new();
    for t in &inf.leaves {
        free_vars(&inf.bind, t, &mut free);
    }
    let free_names = free
        .iter()
        .enumerate()
        .map(|(i, v)| {
            inf.named
                .iter()
                .find(|(_, id)| resolve(&inf.bind, &Ty::Var(**id)) == Ty::Var(*v))
                .map_or_else(|| format!("_{i}"), |(n, _)| n.clone())
        })
        .collect();
    Ok(Typed { roots, bind: inf.bind, vars: inf.vars, free, free_names })
}

struct Infer<'a> {
    ctx: &'a Context,
    bind: Vec<Option<Ty>>,
    named: BTreeMap<String, usize>,
    vars: Vec<(String, Ty, Ty)>,
    /// Leaf types in visiting order, for ordering free carriers.
    leaves: Vec<Ty>,
}

impl Infer<'_> {
    fn fresh(&mut self) -> Ty {
        self.bind.push(None);
        Ty::Var(self.bind.len() - 1)
    }

    fn occurs(&self, v: usize, t: &Ty) -> bool {
        match resolve(&self.bind, t) {
            Ty::Var(w) => v == w,
            Ty::Base(_) => false,
            Ty::Pow(t) => self.occurs(v, &t),
        }
    }

    fn unify(&mut self, a: &Ty, b: &Ty) -> std::result::Result<(), String> {
        let (a, b) = (resolve(&self.bind, a), resolve(&self.bind, b));
        match (&a, &b) {
            (Ty::Var(v), Ty::Var(w)) if v == w => Ok(()),
            (Ty::Var(v), t) | (t, Ty::Var(v)) => {
                if self.occurs(*v, t) {
                    return Err("recursive carrier type".into());
                }
                self.bind[*v] = Some(t.clone());
                Ok(())
            }
            (Ty::Base(n), Ty::Base(m)) if n == m => Ok(()),
            (Ty::Pow(x), Ty::Pow(y)) => self.unify(x, y),
            (Ty::Base(n), Ty::Pow(t)) | (Ty::Pow(t), Ty::Base(n)) if n.is_power_of_two() => {
                self.unify(t, &Ty::Base(n.trailing_zeros() as usize))
            }
            _ => Err(format!("carrier {} does not match {}", show(&self.bind, &a), show(&self.bind, &b))),
        }
    }

    fn carrier(&mut self, e: &TyExpr) -> Result<Ty> {
        Ok(match e {
            TyExpr::Size(n) => Ty::Base(*n),
            TyExpr::Pow(t) => pow(self.carrier(t)?),
            TyExpr::Named(n) => match self.ctx.carriers.get(n) {
                Some(&size) => Ty::Base(size),
                None if self.ctx.allow_free => match self.named.get(n) {
                    Some(&v) => Ty::Var(v),
                    None => {
                        let t = self.fresh();
                        let Ty::Var(v) = t else { unreachable!() };
                        self.named.insert(n.clone(), v);
                        t
                    }
                },
                None => return Err(DslError::UnknownCarrier(n.clone())),
            },
        })
    }

    fn rel<'t>(&self, node: &'t TNode) -> Result<(&'t Ty, &'t Ty)> {
        match &node.shape {
            Shape::Rel(s, d) => Ok((s, d)),
            Shape::Bool => Err(DslError::ty(&node.text, "expected a relation, found a boolean")),
        }
    }

    fn boolean(&self, node: &TNode) -> Result<()> {
        match node.shape {
            Shape::Bool => Ok(()),
            Shape::Rel(..) => Err(DslError::ty(&node.text, "expected a boolean, found a relation")),
        }
    }

    fn term(&mut self, t: &Term) -> Result<TNode> {
        let text = t.to_string();
        let at = |msg: String| DslError::ty(t, msg);
        let (op, shape, kids) = match t {
            Term::Var(name) => {
                let (s, d) = if let Some((_, s, d)) = self.vars.iter().find(|(n, _, _)| n == name) {
                    (s.clone(), d.clone())
                } else {
                    let (s, d) = match self.ctx.vars.get(name) {
                        Some((s, d)) => (self.carrier(s)?, self.carrier(d)?),
                        None if self.ctx.allow_free => (self.fresh(), self.fresh()),
                        None => return Err(DslError::UnboundVariable(name.clone())),
                    };
                    self.vars.push((name.clone(), s.clone(), d.clone()));
                    self.leaves.extend([s.clone(), d.clone()]);
                    (s, d)
                };
                (TOp::Var(name.clone()), Shape::Rel(s, d), vec![])
            }
            Term::Bool(b) => (TOp::Bool(*b), Shape::Bool, vec![]),
            Term::Const(c, args) => {
                let mut cs = Vec::new();
                for a in args {
                    cs.push(self.carrier(a)?);
                }
                while cs.len() < c.arity() {
                    cs.push(self.fresh());
                }
                if cs.len() != c.arity() {
                    return Err(at(format!("`{}` takes {} carrier annotation(s)", c.token(), c.arity())));
                }
                let x = cs[0].clone();
                let (s, d) = match c {
                    Const::Id => (x.clone(), x),
                    Const::Empty | Const::Universal => (x, cs[1].clone()),
                    Const::Eta | Const::Mem => (x.clone(), pow(x)),
                    Const::ILow | Const::IHigh | Const::Atoms | Const::Coatoms => (x, pow(cs[1].clone())),
                    Const::Omega | Const::Ccomp => (pow(x.clone()), pow(x)),
                    Const::Mu => (pow(pow(x.clone())), pow(x)),
                };
                self.leaves.extend([s.clone(), d.clone()]);
                (TOp::Const(*c), Shape::Rel(s, d), vec![])
            }
            Term::Unary(op, arg) => {
                let k = self.term(arg)?;
                let (s, d) = self.rel(&k)?;
                let (s, d) = (s.clone(), d.clone());
                let shape = match op {
                    UnOp::Converse => (d, s),
                    UnOp::Complement => (s, d),
                    UnOp::Domain => (s.clone(), s),
                    UnOp::Lambda => (s, pow(d)),
                    UnOp::Image => (pow(s), pow(d)),
                    UnOp::Alpha => {
                        let y = self.fresh();
                        self.unify(&d, &pow(y.clone())).map_err(at)?;
                        (s, y)
                    }
                    UnOp::KleisliLift | UnOp::PelegLift => {
                        let y = self.fresh();
                        self.unify(&d, &pow(y.clone())).map_err(at)?;
                        (pow(s), pow(y))
                    }
                    _ => {
                        let y = self.fresh();
                        self.unify(&d, &pow(y)).map_err(at)?;
                        (s, d)
                    }
                };
                (TOp::Unary(*op), Shape::Rel(shape.0, shape.1), vec![k])
            }
            Term::Binary(op, l, r) => {
                let kl = self.term(l)?;
                let kr = self.term(r)?;
                let (ls, ld) = self.rel(&kl)?;
                let (rs, rd) = self.rel(&kr)?;
                let (ls, ld, rs, rd) = (ls.clone(), ld.clone(), rs.clone(), rd.clone());
                let shape = match op {
                    BinOp::Compose => {
                        self.unify(&ld, &rs).map_err(at)?;
                        (ls, rd)
                    }
                    BinOp::Peleg | BinOp::Kleisli | BinOp::Odot => {
                        let y = self.fresh();
                        let z = self.fresh();
                        self.unify(&ld, &pow(y.clone())).map_err(at)?;
                        self.unify(&rs, &y).map_err(at)?;
                        self.unify(&rd, &pow(z)).map_err(at)?;
                        (ls, rd)
                    }
                    BinOp::Inter | BinOp::Union | BinOp::Minus => {
                        self.unify(&ls, &rs).map_err(at)?;
                        self.unify(&ld, &rd).map_err(at)?;
                        (ls, ld)
                    }
                    BinOp::InnerUnion | BinOp::InnerInter => {
                        self.unify(&ls, &rs).map_err(at)?;
                        self.unify(&ld, &rd).map_err(at)?;
                        let y = self.fresh();
                        self.unify(&ld, &pow(y)).map_err(at)?;
                        (ls, ld)
                    }
                    BinOp::RightResidual | BinOp::Syq => {
                        self.unify(&ls, &rs).map_err(at)?;
                        (ld, rd)
                    }
                    BinOp::LeftResidual => {
                        self.unify(&ld, &rd).map_err(at)?;
                        (ls, rs)
                    }
                };
                (TOp::Binary(*op), Shape::Rel(shape.0, shape.1), vec![kl, kr])
            }
            Term::Pred(p, arg) => {
                let k = self.term(arg)?;
                let (s, d) = self.rel(&k)?;
                let (s, d) = (s.clone(), d.clone());
                if p.needs_power() {
                    let y = self.fresh();
                    self.unify(&d, &pow(y)).map_err(at)?;
                }
                if *p == Pred::Test {
                    self.unify(&s, &d).map_err(at)?;
                }
                (TOp::Pred(*p), Shape::Bool, vec![k])
            }
            Term::Cmp(op, l, r) => {
                let kl = self.term(l)?;
                let kr = self.term(r)?;
                match (&kl.shape, &kr.shape) {
                    (Shape::Bool, Shape::Bool) if *op == CmpOp::Eq => {}
                    _ => {
                        let (ls, ld) = self.rel(&kl)?;
                        let (rs, rd) = self.rel(&kr)?;
                        let (ls, ld, rs, rd) = (ls.clone(), ld.clone(), rs.clone(), rd.clone());
                        self.unify(&ls, &rs).map_err(at)?;
                        self.unify(&ld, &rd).map_err(at)?;
                        if op.needs_power() {
                            let y = self.fresh();
                            self.unify(&ld, &pow(y)).map_err(at)?;
                        }
                    }
                }
                (TOp::Cmp(*op), Shape::Bool, vec![kl, kr])
            }
            Term::Not(arg) => {
                let k = self.term(arg)?;
                self.boolean(&k)?;
                (TOp::Not, Shape::Bool, vec![k])
            }
            Term::Logic(op, l, r) => {
                let kl = self.term(l)?;
                let kr = self.term(r)?;
                self.boolean(&kl)?;
                self.boolean(&kr)?;
                (TOp::Logic(*op), Shape::Bool, vec![kl, kr])
            }
        };
        Ok(TNode { op, shape, kids, text })
    }
}
