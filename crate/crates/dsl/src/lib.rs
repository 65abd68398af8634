//! A small term language over relations and multirelations.
//!
//! Terms are parsed, typed by carrier inference, compiled against fixed
//! carrier sizes and evaluated through the `multirel` operations. The same
//! pipeline serves one-off evaluation against an [`Env`] and the law
//! engine, which compiles a claim once per size assignment and evaluates
//! it on many instances.

pub mod ast;
mod env;
mod error;
mod eval;
mod lexer;
mod parser;
mod types;

pub use ast::{BinOp, CmpOp, Const, LogicOp, Pred, Term, TyExpr, UnOp};
pub use env::{eval, Env};
pub use error::{DslError, Result};
pub use eval::{Program, Slot, Value};
pub use parser::{parse, parse_type};
pub use types::{infer, CTy, Context, Typed};
