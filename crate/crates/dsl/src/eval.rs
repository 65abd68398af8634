//! Compilation of typed terms to concrete carriers, and evaluation.

use std::fmt;

use multirel::peleg::{kleisli_compose, kleisli_lift_mrel, odot, peleg_compose, peleg_lift_mrel};
use multirel::power::{ccomp_mrel, eta, image_functor_mrel, member_mrel, mu_mrel, omega_mrel};
use multirel::{alpha, determinise, power_transpose, DetMode, Error, MRel, MRelConst, Preorder, Rel, SubsetMask};

use crate::ast::{BinOp, CmpOp, Const, LogicOp, Pred, UnOp};
use crate::error::{DslError, Result};
use crate::types::{CTy, Shape, TNode, TOp, Ty, Typed};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value {
    Rel(Rel),
    MRel(MRel),
    Bool(bool),
}

impl Value {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Value::Rel(r) => serde_json::to_value(r).expect("relations serialize"),
            Value::MRel(m) => serde_json::to_value(m).expect("multirelations serialize"),
            Value::Bool(b) => serde_json::Value::Bool(*b),
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    /// Number of pairs; booleans count as zero.
    pub fn pair_count(&self) -> usize {
        match self {
            Value::Rel(r) => r.len(),
            Value::MRel(m) => m.len(),
            Value::Bool(_) => 0,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Rel(r) => write!(f, "{r}"),
            Value::MRel(m) => write!(f, "{m}"),
            Value::Bool(b) => write!(f, "{b}"),
        }
    }
}

impl From<Rel> for Value {
    fn from(r: Rel) -> Self {
        Value::Rel(r)
    }
}

impl From<MRel> for Value {
    fn from(m: MRel) -> Self {
        Value::MRel(m)
    }
}

/// A variable slot of a compiled program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slot {
    pub name: String,
    pub src: CTy,
    pub dst: CTy,
}

impl Slot {
    /// Whether values of this slot are multirelations.
    pub fn is_mrel(&self) -> bool {
        self.dst.power_of().is_some()
    }

    /// `(rows, columns-or-mask-width)`.
    pub fn shape(&self) -> Option<(usize, usize)> {
        let dst = self.dst.power_of().unwrap_or(&self.dst);
        Some((self.src.size()?, dst.size()?))
    }
}

#[derive(Debug, Clone)]
enum Op {
    Var(usize),
    Value(Value),
    Unary(UnOp),
    Binary(BinOp),
    Pred(Pred),
    Cmp(CmpOp),
    Not,
    Logic(LogicOp),
}

#[derive(Debug, Clone)]
struct Node {
    op: Op,
    shape: Option<(CTy, CTy)>,
    kids: Vec<Node>,
    text: String,
}

/// Typed terms with every carrier fixed and every constant materialized.
#[derive(Debug, Clone)]
pub struct Program {
    roots: Vec<Node>,
    slots: Vec<Slot>,
    carriers: Vec<(String, usize)>,
}

impl Typed {
    /// Fixes the free carriers to `sizes` in order; when fewer sizes than
    /// free carriers are given the last size is repeated.
    pub fn compile(&self, sizes: &[usize]) -> Result<Program> {
        let fixed: Vec<usize> = (0..self.free.len())
            .map(|i| sizes.get(i).or(sizes.last()).copied())
            .collect::<Option<_>>()
            .ok_or_else(|| {
                DslError::ty(
                    self.roots.first().map_or("", |r| r.text.as_str()),
                    format!("carriers {} are not determined", self.free_names.join(", ")),
                )
            })?;
        let c = Compiler { typed: self, fixed: &fixed };
        let slots = self
            .vars
            .iter()
            .map(|(name, s, d)| Ok(Slot { name: name.clone(), src: c.concrete(s, name)?, dst: c.concrete(d, name)? }))
            .collect::<Result<Vec<_>>>()?;
        let roots = self.roots.iter().map(|r| c.node(r, &slots)).collect::<Result<Vec<_>>>()?;
        let carriers = self.free_names.iter().cloned().zip(fixed.iter().copied()).collect();
        Ok(Program { roots, slots, carriers })
    }
}

struct Compiler<'a> {
    typed: &'a Typed,
    fixed: &'a [usize],
}

impl Compiler<'_> {
    fn concrete(&self, t: &Ty, at: &str) -> Result<CTy> {
        match self.typed.resolve(t) {
            Ty::Var(v) => {
                let i = self
                    .typed
                    .free
                    .iter()
                    .position(|&f| f == v)
                    .ok_or_else(|| DslError::ty(at, "carrier is not determined by the term's leaves"))?;
                Ok(CTy::Base(self.fixed[i]))
            }
            Ty::Base(n) => Ok(CTy::Base(n)),
            Ty::Pow(t) => Ok(CTy::Pow(Box::new(self.concrete(&t, at)?))),
        }
    }

    fn node(&self, n: &TNode, slots: &[Slot]) -> Result<Node> {
        let shape = match &n.shape {
            Shape::Rel(s, d) => Some((self.concrete(s, &n.text)?, self.concrete(d, &n.text)?)),
            Shape::Bool => None,
        };
        let kids = n.kids.iter().map(|k| self.node(k, slots)).collect::<Result<Vec<_>>>()?;
        let op = match &n.op {
            TOp::Var(name) => Op::Var(slots.iter().position(|s| &s.name == name).expect("typed variable has a slot")),
            TOp::Bool(b) => Op::Value(Value::Bool(*b)),
            TOp::Const(c) => {
                let (s, d) = shape.as_ref().expect("constants are relations");
                Op::Value(constant(*c, s, d).map_err(|e| at(&n.text, e))?)
            }
            TOp::Unary(op) => Op::Unary(*op),
            TOp::Binary(op) => Op::Binary(*op),
            TOp::Pred(p) => Op::Pred(*p),
            TOp::Cmp(c) => Op::Cmp(*c),
            TOp::Not => Op::Not,
            TOp::Logic(l) => Op::Logic(*l),
        };
        Ok(Node { op, shape, kids, text: n.text.clone() })
    }
}

fn at(text: &str, source: Error) -> DslError {
    DslError::Eval { term: text.to_string(), source }
}

fn size(t: &CTy) -> Result<usize, Error> {
    t.size().ok_or(Error::PowersetTooLarge { size: usize::MAX, cap: multirel::POW_CAP })
}

/// Mask width of a multirelation destination.
fn width(dst: &CTy) -> Result<usize, Error> {
    match dst {
        CTy::Pow(t) => size(t),
        CTy::Base(n) if n.is_power_of_two() => Ok(n.trailing_zeros() as usize),
        CTy::Base(n) => Err(Error::Invalid(format!("a carrier of size {n} is not a powerset"))),
    }
}

fn constant(c: Const, s: &CTy, d: &CTy) -> Result<Value, Error> {
    let v: Value = match c {
        Const::Id => Rel::identity(size(s)?).into(),
        Const::Empty | Const::Universal => {
            let kind = if c == Const::Empty { MRelConst::Empty } else { MRelConst::Universal };
            match d.power_of() {
                Some(t) => MRel::constant(kind, size(s)?, size(t)?)?.into(),
                None if c == Const::Empty => Rel::empty(size(s)?, size(d)?).into(),
                None => Rel::universal(size(s)?, size(d)?).into(),
            }
        }
        Const::Eta => eta(size(s)?)?.into(),
        Const::Mem => member_mrel(size(s)?)?.into(),
        Const::ILow | Const::IHigh | Const::Atoms | Const::Coatoms => {
            let kind = match c {
                Const::ILow => MRelConst::InnerUnit,
                Const::IHigh => MRelConst::InnerCounit,
                Const::Atoms => MRelConst::Atoms,
                _ => MRelConst::Coatoms,
            };
            MRel::constant(kind, size(s)?, width(d)?)?.into()
        }
        Const::Omega => omega_mrel(width(d)?)?.into(),
        Const::Ccomp => ccomp_mrel(width(d)?)?.into(),
        Const::Mu => mu_mrel(width(d)?)?.into(),
    };
    fit(v, d)
}

/// Brings a value into the canonical kind for destination `dst`.
fn fit(v: Value, dst: &CTy) -> Result<Value, Error> {
    Ok(match (v, dst) {
        (Value::Rel(r), CTy::Pow(t)) => Value::MRel(MRel::from_rel(&r, size(t)?)?),
        (Value::MRel(m), CTy::Base(_)) => Value::Rel(m.to_rel()?),
        (v, _) => v,
    })
}

fn to_rel(v: &Value) -> Result<Rel, Error> {
    match v {
        Value::Rel(r) => Ok(r.clone()),
        Value::MRel(m) => m.to_rel(),
        Value::Bool(_) => Err(Error::Invalid("expected a relation".into())),
    }
}

fn to_mrel(v: &Value, dst: &CTy) -> Result<MRel, Error> {
    match v {
        Value::MRel(m) => Ok(m.clone()),
        Value::Rel(r) => MRel::from_rel(r, width(dst)?),
        Value::Bool(_) => Err(Error::Invalid("expected a multirelation".into())),
    }
}

/// Relational composition where either side may be a multirelation, whose
/// masks then index the rows or columns of a powerset carrier.
fn compose(l: &Value, r: &Value) -> Result<Value, Error> {
    let shape_err = |l: (usize, usize), r: (usize, usize)| Error::ShapeMismatch { op: "compose", left: l, right: r };
    let powered = |m: &MRel| 1usize.checked_shl(m.dst() as u32).unwrap_or(0);
    Ok(match (l, r) {
        (Value::Rel(a), Value::Rel(b)) => a.compose(b)?.into(),
        (Value::Rel(a), Value::MRel(b)) => {
            if a.dst() != b.src() {
                return Err(shape_err(a.shape(), b.shape()));
            }
            let rows = (0..a.src()).map(|x| a.row(x).flat_map(|y| b.row(y).iter().copied()).collect()).collect();
            MRel::new(a.src(), b.dst(), rows)?.into()
        }
        (Value::MRel(a), Value::Rel(b)) => {
            if powered(a) != b.src() {
                return Err(shape_err(a.shape(), b.shape()));
            }
            let mut out = Rel::empty(a.src(), b.dst());
            for (x, m) in a.pairs() {
                for z in b.row(m.bits() as usize) {
                    out.insert(x, z);
                }
            }
            out.into()
        }
        (Value::MRel(a), Value::MRel(b)) => {
            if powered(a) != b.src() {
                return Err(shape_err(a.shape(), b.shape()));
            }
            let rows: Vec<Vec<SubsetMask>> = a
                .rows()
                .iter()
                .map(|row| row.iter().flat_map(|m| b.row(m.bits() as usize).iter().copied()).collect())
                .collect();
            MRel::new(a.src(), b.dst(), rows)?.into()
        }
        _ => return Err(Error::Invalid("expected relations".into())),
    })
}

fn domain(v: &Value) -> Result<Rel, Error> {
    Ok(match v {
        Value::Rel(r) => r.domain(),
        Value::MRel(m) => {
            let mut out = Rel::empty(m.src(), m.src());
            for a in (0..m.src()).filter(|&a| !m.row(a).is_empty()) {
                out.insert(a, a);
            }
            out
        }
        Value::Bool(_) => return Err(Error::Invalid("expected a relation".into())),
    })
}

/// Puts two same-typed values into the same representation.
fn align(l: &Value, r: &Value, dst: &CTy) -> Result<(Value, Value), Error> {
    Ok(match (l, r) {
        (Value::Rel(_), Value::MRel(_)) | (Value::MRel(_), Value::Rel(_)) => {
            (Value::MRel(to_mrel(l, dst)?), Value::MRel(to_mrel(r, dst)?))
        }
        _ => (l.clone(), r.clone()),
    })
}

impl Program {
    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// The free carriers with the sizes they were fixed to.
    pub fn carriers(&self) -> &[(String, usize)] {
        &self.carriers
    }

    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    /// Evaluates root `i` with `values[k]` bound to slot `k`.
    pub fn eval(&self, i: usize, values: &[Value]) -> Result<Value> {
        self.eval_node(&self.roots[i], values)
    }

    pub fn eval_bool(&self, i: usize, values: &[Value]) -> Result<bool> {
        let v = self.eval(i, values)?;
        v.as_bool().ok_or_else(|| DslError::ty(&self.roots[i].text, "expected a boolean claim"))
    }

    fn eval_node(&self, n: &Node, values: &[Value]) -> Result<Value> {
        let wrap = |e: Error| at(&n.text, e);
        let dst = n.shape.as_ref().map(|(_, d)| d);
        let v = match &n.op {
            Op::Var(k) => return Ok(values[*k].clone()),
            Op::Value(v) => return Ok(v.clone()),
            Op::Not => {
                let b = self.eval_node(&n.kids[0], values)?;
                return Ok(Value::Bool(!b.as_bool().unwrap_or(false)));
            }
            Op::Logic(op) => {
                let l = self.eval_node(&n.kids[0], values)?.as_bool().unwrap_or(false);
                let short = match op {
                    LogicOp::And if !l => Some(false),
                    LogicOp::Or if l => Some(true),
                    LogicOp::Implies if !l => Some(true),
                    _ => None,
                };
                if let Some(b) = short {
                    return Ok(Value::Bool(b));
                }
                let r = self.eval_node(&n.kids[1], values)?.as_bool().unwrap_or(false);
                return Ok(Value::Bool(match op {
                    LogicOp::Iff => l == r,
                    _ => r,
                }));
            }
            Op::Unary(op) => {
                let kid = &n.kids[0];
                let x = self.eval_node(kid, values)?;
                let kdst = &kid.shape.as_ref().expect("typed").1;
                self.unary(*op, &x, kdst).map_err(wrap)?
            }
            Op::Binary(op) => {
                let (kl, kr) = (&n.kids[0], &n.kids[1]);
                let l = self.eval_node(kl, values)?;
                let r = self.eval_node(kr, values)?;
                let (ld, rd) = (&kl.shape.as_ref().expect("typed").1, &kr.shape.as_ref().expect("typed").1);
                binary(*op, &l, &r, ld, rd).map_err(wrap)?
            }
            Op::Pred(p) => {
                let kid = &n.kids[0];
                let x = self.eval_node(kid, values)?;
                let kdst = &kid.shape.as_ref().expect("typed").1;
                Value::Bool(predicate(*p, &x, kdst).map_err(wrap)?)
            }
            Op::Cmp(op) => {
                let l = self.eval_node(&n.kids[0], values)?;
                let r = self.eval_node(&n.kids[1], values)?;
                let Some((_, d)) = &n.kids[0].shape else {
                    return Ok(Value::Bool(l == r));
                };
                Value::Bool(compare(*op, &l, &r, d).map_err(wrap)?)
            }
        };
        match dst {
            Some(d) => fit(v, d).map_err(wrap),
            None => Ok(v),
        }
    }

    fn unary(&self, op: UnOp, x: &Value, xdst: &CTy) -> Result<Value, Error> {
        let m = || to_mrel(x, xdst);
        Ok(match op {
            UnOp::Converse => to_rel(x)?.converse().into(),
            UnOp::Complement => match x {
                Value::MRel(m) => m.complement()?.into(),
                _ => to_rel(x)?.complement().into(),
            },
            UnOp::Domain => domain(x)?.into(),
            UnOp::Lambda => power_transpose(&to_rel(x)?)?.into(),
            UnOp::Image => image_functor_mrel(&to_rel(x)?)?.into(),
            UnOp::Alpha => alpha(&m()?).into(),
            UnOp::KleisliLift => kleisli_lift_mrel(&m()?)?.into(),
            UnOp::PelegLift => peleg_lift_mrel(&m()?)?.into(),
            UnOp::InnerComplement => m()?.inner_complement().into(),
            UnOp::Up => m()?.up()?.into(),
            UnOp::Down => m()?.down()?.into(),
            UnOp::Convex => m()?.convex()?.into(),
            UnOp::Dual => m()?.inner_dual()?.into(),
            UnOp::Nu => m()?.nu().into(),
            UnOp::Tau => m()?.tau().into(),
            UnOp::Fusion => determinise(DetMode::Fusion, &m()?).into(),
            UnOp::Fission => determinise(DetMode::Fission, &m()?).into(),
            UnOp::Cofusion => determinise(DetMode::Cofusion, &m()?).into(),
            UnOp::Cofission => determinise(DetMode::Cofission, &m()?).into(),
        })
    }
}

fn binary(op: BinOp, l: &Value, r: &Value, ld: &CTy, rd: &CTy) -> Result<Value, Error> {
    let ml = || to_mrel(l, ld);
    let mr = || to_mrel(r, rd);
    Ok(match op {
        BinOp::Compose => compose(l, r)?,
        BinOp::Peleg => peleg_compose(&ml()?, &mr()?)?.into(),
        BinOp::Kleisli => kleisli_compose(&ml()?, &mr()?)?.into(),
        BinOp::Odot => odot(&ml()?, &mr()?)?.into(),
        BinOp::InnerUnion => ml()?.inner_union(&mr()?)?.into(),
        BinOp::InnerInter => ml()?.inner_intersection(&mr()?)?.into(),
        BinOp::Inter | BinOp::Union | BinOp::Minus => match align(l, r, ld)? {
            (Value::Rel(a), Value::Rel(b)) => match op {
                BinOp::Inter => a.intersection(&b)?,
                BinOp::Union => a.union(&b)?,
                _ => a.minus(&b)?,
            }
            .into(),
            (Value::MRel(a), Value::MRel(b)) => match op {
                BinOp::Inter => a.intersection(&b)?,
                BinOp::Union => a.union(&b)?,
                _ => a.minus(&b)?,
            }
            .into(),
            _ => return Err(Error::Invalid("expected relations".into())),
        },
        BinOp::RightResidual => Rel::right_residual(&to_rel(l)?, &to_rel(r)?)?.into(),
        BinOp::LeftResidual => Rel::left_residual(&to_rel(l)?, &to_rel(r)?)?.into(),
        BinOp::Syq => Rel::syq(&to_rel(l)?, &to_rel(r)?)?.into(),
    })
}

fn predicate(p: Pred, x: &Value, xdst: &CTy) -> Result<bool, Error> {
    if let Value::Rel(r) = x {
        let f = r.classify();
        match p {
            Pred::OuterUnivalent => return Ok(f.univalent),
            Pred::OuterTotal => return Ok(f.total),
            Pred::OuterDeterministic => return Ok(f.deterministic),
            Pred::Test => return Ok(f.test),
            _ => {}
        }
    }
    if p == Pred::Test {
        return Ok(to_rel(x)?.is_test());
    }
    let m = to_mrel(x, xdst)?;
    Ok(match p {
        Pred::OuterUnivalent => m.is_outer_univalent(),
        Pred::OuterTotal => m.is_outer_total(),
        Pred::OuterDeterministic => m.is_outer_univalent() && m.is_outer_total(),
        Pred::InnerUnivalent => m.is_inner_univalent(),
        Pred::InnerTotal => m.is_inner_total(),
        Pred::InnerDeterministic => m.is_inner_univalent() && m.is_inner_total(),
        Pred::UpClosed => m.is_up_closed(),
        Pred::DownClosed => m.is_down_closed(),
        Pred::UnionClosed => m.is_union_closed(),
        Pred::Test => unreachable!("handled above"),
    })
}

fn compare(op: CmpOp, l: &Value, r: &Value, dst: &CTy) -> Result<bool, Error> {
    let order = match op {
        CmpOp::Smyth => Some(Preorder::Smyth),
        CmpOp::Hoare => Some(Preorder::Hoare),
        CmpOp::EgliMilner => Some(Preorder::EgliMilner),
        _ => None,
    };
    if let Some(order) = order {
        return MRel::preorder(order, &to_mrel(l, dst)?, &to_mrel(r, dst)?);
    }
    match align(l, r, dst)? {
        (a, b) if op == CmpOp::Eq => Ok(a == b),
        (Value::Rel(a), Value::Rel(b)) => match op {
            CmpOp::Subset => a.is_subset(&b),
            _ => b.is_subset(&a),
        },
        (Value::MRel(a), Value::MRel(b)) => match op {
            CmpOp::Subset => a.is_subset(&b),
            _ => b.is_subset(&a),
        },
        _ => Err(Error::Invalid("expected relations".into())),
    }
}
