//! Term trees and the canonical printer.
//!
//! The printer emits the minimal parenthesization the grammar needs, so
//! `parse(print(t)) == t` for every tree the parser can produce.

use std::fmt;

/// A carrier annotation on a constant: a named or literal carrier, or a
/// powerset of one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TyExpr {
    Named(String),
    Size(usize),
    Pow(Box<TyExpr>),
}

impl fmt::Display for TyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TyExpr::Named(n) => f.write_str(n),
            TyExpr::Size(n) => write!(f, "{n}"),
            TyExpr::Pow(t) => write!(f, "P {t}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Const {
    Id,
    Empty,
    Universal,
    /// `1`, also spelled `eta`.
    Eta,
    ILow,
    IHigh,
    Atoms,
    Coatoms,
    Mem,
    Omega,
    Ccomp,
    Mu,
}

impl Const {
    pub const ALL: [Const; 12] = [
        Const::Id,
        Const::Empty,
        Const::Universal,
        Const::Eta,
        Const::ILow,
        Const::IHigh,
        Const::Atoms,
        Const::Coatoms,
        Const::Mem,
        Const::Omega,
        Const::Ccomp,
        Const::Mu,
    ];

    pub fn token(self) -> &'static str {
        match self {
            Const::Id => "Id",
            Const::Empty => "0",
            Const::Universal => "U",
            Const::Eta => "1",
            Const::ILow => "ilow",
            Const::IHigh => "ihigh",
            Const::Atoms => "At",
            Const::Coatoms => "coAt",
            Const::Mem => "mem",
            Const::Omega => "Om",
            Const::Ccomp => "Cc",
            Const::Mu => "mu",
        }
    }

    pub fn from_token(s: &str) -> Option<Const> {
        match s {
            "eta" => Some(Const::Eta),
            _ => Const::ALL.into_iter().find(|c| c.token() == s),
        }
    }

    /// Number of carrier annotations the constant takes.
    pub fn arity(self) -> usize {
        match self {
            Const::Empty | Const::Universal | Const::ILow | Const::IHigh | Const::Atoms | Const::Coatoms => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnOp {
    Converse,
    Complement,
    InnerComplement,
    Up,
    Down,
    Convex,
    Dual,
    Nu,
    Tau,
    Domain,
    Lambda,
    Alpha,
    Image,
    KleisliLift,
    PelegLift,
    Fusion,
    Fission,
    Cofusion,
    Cofission,
}

impl UnOp {
    pub const ALL: [UnOp; 19] = [
        UnOp::Converse,
        UnOp::Complement,
        UnOp::InnerComplement,
        UnOp::Up,
        UnOp::Down,
        UnOp::Convex,
        UnOp::Dual,
        UnOp::Nu,
        UnOp::Tau,
        UnOp::Domain,
        UnOp::Lambda,
        UnOp::Alpha,
        UnOp::Image,
        UnOp::KleisliLift,
        UnOp::PelegLift,
        UnOp::Fusion,
        UnOp::Fission,
        UnOp::Cofusion,
        UnOp::Cofission,
    ];

    /// Function-call spelling.
    pub fn name(self) -> &'static str {
        match self {
            UnOp::Converse => "cnv",
            UnOp::Complement => "cpl",
            UnOp::InnerComplement => "icpl",
            UnOp::Up => "up",
            UnOp::Down => "down",
            UnOp::Convex => "convex",
            UnOp::Dual => "dual",
            UnOp::Nu => "nu",
            UnOp::Tau => "tau",
            UnOp::Domain => "dom",
            UnOp::Lambda => "L",
            UnOp::Alpha => "a",
            UnOp::Image => "Pf",
            UnOp::KleisliLift => "kl",
            UnOp::PelegLift => "pl",
            UnOp::Fusion => "do",
            UnOp::Fission => "di",
            UnOp::Cofusion => "cfo",
            UnOp::Cofission => "cfi",
        }
    }

    pub fn from_name(s: &str) -> Option<UnOp> {
        UnOp::ALL.into_iter().find(|op| op.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinOp {
    Compose,
    Peleg,
    Kleisli,
    Inter,
    Union,
    Minus,
    /// `T \ S`
    RightResidual,
    /// `T / S`
    LeftResidual,
    InnerUnion,
    InnerInter,
    Odot,
    Syq,
}

impl BinOp {
    /// Infix token, for the operators that have one.
    pub fn infix(self) -> Option<&'static str> {
        Some(match self {
            BinOp::Compose => ";",
            BinOp::Peleg => "*",
            BinOp::Kleisli => "@",
            BinOp::Inter => "&",
            BinOp::Union => "|",
            BinOp::Minus => "-",
            BinOp::RightResidual => "\\",
            BinOp::LeftResidual => "/",
            _ => return None,
        })
    }

    pub fn function(self) -> Option<&'static str> {
        Some(match self {
            BinOp::InnerUnion => "icup",
            BinOp::InnerInter => "icap",
            BinOp::Odot => "odot",
            BinOp::Syq => "syq",
            _ => return None,
        })
    }

    pub fn from_function(s: &str) -> Option<BinOp> {
        [BinOp::InnerUnion, BinOp::InnerInter, BinOp::Odot, BinOp::Syq].into_iter().find(|op| op.function() == Some(s))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pred {
    OuterUnivalent,
    OuterTotal,
    OuterDeterministic,
    Test,
    InnerUnivalent,
    InnerTotal,
    InnerDeterministic,
    UpClosed,
    DownClosed,
    UnionClosed,
}

impl Pred {
    pub const ALL: [Pred; 10] = [
        Pred::OuterUnivalent,
        Pred::OuterTotal,
        Pred::OuterDeterministic,
        Pred::Test,
        Pred::InnerUnivalent,
        Pred::InnerTotal,
        Pred::InnerDeterministic,
        Pred::UpClosed,
        Pred::DownClosed,
        Pred::UnionClosed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pred::OuterUnivalent => "ouni",
            Pred::OuterTotal => "otot",
            Pred::OuterDeterministic => "odet",
            Pred::Test => "test",
            Pred::InnerUnivalent => "iuni",
            Pred::InnerTotal => "itot",
            Pred::InnerDeterministic => "idet",
            Pred::UpClosed => "upclosed",
            Pred::DownClosed => "downclosed",
            Pred::UnionClosed => "unionclosed",
        }
    }

    pub fn from_name(s: &str) -> Option<Pred> {
        Pred::ALL.into_iter().find(|p| p.name() == s)
    }

    /// Whether the predicate only makes sense on multirelations.
    pub fn needs_power(self) -> bool {
        !matches!(self, Pred::OuterUnivalent | Pred::OuterTotal | Pred::OuterDeterministic | Pred::Test)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CmpOp {
    Eq,
    Subset,
    Superset,
    Smyth,
    Hoare,
    EgliMilner,
}

impl CmpOp {
    pub const ALL: [CmpOp; 6] =
        [CmpOp::Eq, CmpOp::Subset, CmpOp::Superset, CmpOp::Smyth, CmpOp::Hoare, CmpOp::EgliMilner];

    pub fn token(self) -> &'static str {
        match self {
            CmpOp::Eq => "==",
            CmpOp::Subset => "<=",
            CmpOp::Superset => ">=",
            CmpOp::Smyth => "<u=",
            CmpOp::Hoare => "<d=",
            CmpOp::EgliMilner => "<ud=",
        }
    }

    pub fn from_token(s: &str) -> Option<CmpOp> {
        CmpOp::ALL.into_iter().find(|c| c.token() == s)
    }

    pub fn needs_power(self) -> bool {
        matches!(self, CmpOp::Smyth | CmpOp::Hoare | CmpOp::EgliMilner)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LogicOp {
    And,
    Or,
    Implies,
    Iff,
}

impl LogicOp {
    pub fn token(self) -> &'static str {
        match self {
            LogicOp::And => "&&",
            LogicOp::Or => "||",
            LogicOp::Implies => "=>",
            LogicOp::Iff => "<=>",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Const(Const, Vec<TyExpr>),
    Bool(bool),
    Unary(UnOp, Box<Term>),
    Binary(BinOp, Box<Term>, Box<Term>),
    Pred(Pred, Box<Term>),
    Cmp(CmpOp, Box<Term>, Box<Term>),
    Not(Box<Term>),
    Logic(LogicOp, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn unary(op: UnOp, t: Term) -> Term {
        Term::Unary(op, Box::new(t))
    }

    pub fn binary(op: BinOp, l: Term, r: Term) -> Term {
        Term::Binary(op, Box::new(l), Box::new(r))
    }

    pub fn cmp(op: CmpOp, l: Term, r: Term) -> Term {
        Term::Cmp(op, Box::new(l), Box::new(r))
    }

    pub fn logic(op: LogicOp, l: Term, r: Term) -> Term {
        Term::Logic(op, Box::new(l), Box::new(r))
    }

    /// Immediate sub-terms, left to right.
    pub fn children(&self) -> Vec<&Term> {
        match self {
            Term::Var(_) | Term::Const(..) | Term::Bool(_) => vec![],
            Term::Unary(_, t) | Term::Pred(_, t) | Term::Not(t) => vec![t],
            Term::Binary(_, l, r) | Term::Cmp(_, l, r) | Term::Logic(_, l, r) => vec![l, r],
        }
    }

    /// Variable names in order of first appearance.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        if let Term::Var(v) = self {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        for c in self.children() {
            c.collect_vars(out);
        }
    }

    fn prec(&self) -> u8 {
        match self {
            Term::Logic(LogicOp::Implies | LogicOp::Iff, ..) => prec::IMPLIES,
            Term::Logic(LogicOp::Or, ..) => prec::OR,
            Term::Logic(LogicOp::And, ..) => prec::AND,
            Term::Not(_) => prec::NOT,
            Term::Cmp(..) => prec::CMP,
            Term::Binary(op, ..) => match op {
                BinOp::RightResidual | BinOp::LeftResidual => prec::RESIDUAL,
                BinOp::Union => prec::UNION,
                BinOp::Inter | BinOp::Minus => prec::INTER,
                BinOp::Compose | BinOp::Peleg | BinOp::Kleisli => prec::SEQ,
                _ => prec::ATOM,
            },
            Term::Unary(UnOp::Complement, _) => prec::PREFIX,
            Term::Unary(UnOp::Converse, _) => prec::POSTFIX,
            _ => prec::ATOM,
        }
    }
}

pub(crate) mod prec {
    pub const IMPLIES: u8 = 1;
    pub const OR: u8 = 2;
    pub const AND: u8 = 3;
    pub const NOT: u8 = 4;
    pub const CMP: u8 = 5;
    pub const RESIDUAL: u8 = 6;
    pub const UNION: u8 = 7;
    pub const INTER: u8 = 8;
    pub const SEQ: u8 = 9;
    pub const PREFIX: u8 = 10;
    pub const POSTFIX: u8 = 11;
    pub const ATOM: u8 = 12;
}

struct Wrap<'a>(&'a Term, bool);

impl fmt::Display for Wrap<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.1 {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.prec();
        // Left-associative levels allow an equal-precedence left child.
        let infix = |f: &mut fmt::Formatter<'_>, l: &Term, tok: &str, r: &Term, assoc: bool| {
            let lp = if assoc { l.prec() < p } else { l.prec() <= p };
            write!(f, "{} {tok} {}", Wrap(l, lp), Wrap(r, r.prec() <= p))
        };
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Bool(b) => write!(f, "{b}"),
            Term::Const(c, args) => {
                f.write_str(c.token())?;
                if !args.is_empty() {
                    let args: Vec<String> = args.iter().map(|a| a.to_string()).collect();
                    write!(f, "[{}]", args.join(","))?;
                }
                Ok(())
            }
            Term::Unary(UnOp::Converse, t) => write!(f, "{}^", Wrap(t, t.prec() < prec::POSTFIX)),
            Term::Unary(UnOp::Complement, t) => write!(f, "-{}", Wrap(t, t.prec() < prec::PREFIX)),
            Term::Unary(op, t) => write!(f, "{}({t})", op.name()),
            Term::Pred(pr, t) => write!(f, "{}({t})", pr.name()),
            Term::Binary(op, l, r) => match (op.infix(), op.function()) {
                (Some(tok), _) => {
                    let assoc = !matches!(op, BinOp::RightResidual | BinOp::LeftResidual);
                    infix(f, l, tok, r, assoc)
                }
                (None, Some(name)) => write!(f, "{name}({l}, {r})"),
                (None, None) => unreachable!("every binary operator has a spelling"),
            },
            Term::Cmp(op, l, r) => infix(f, l, op.token(), r, false),
            Term::Not(t) => write!(f, "!{}", Wrap(t, t.prec() < prec::NOT)),
            Term::Logic(op, l, r) => {
                let assoc = matches!(op, LogicOp::And | LogicOp::Or);
                infix(f, l, op.token(), r, assoc)
            }
        }
    }
}
