//! Recursive-descent parser.
//!
//! Levels, loosest first: `=> <=>` (non-associative), `||`, `&&`, prefix
//! `!`, comparisons (non-associative), `\ /` (non-associative), `|`,
//! `& -`, `; * @`, prefix `-`, postfix `^`, atoms.

use crate::ast::{BinOp, CmpOp, Const, LogicOp, Pred, Term, TyExpr, UnOp};
use crate::error::{DslError, Result};
use crate::lexer::{lex, Spanned, Tok};

pub fn parse(text: &str) -> Result<Term> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let t = p.formula()?;
    p.expect(Tok::Eof, "an operator or end of input")?;
    Ok(t)
}

/// Parses a carrier annotation such as `X`, `P Y` or `3`.
pub fn parse_type(text: &str) -> Result<TyExpr> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let t = p.ty()?;
    p.expect(Tok::Eof, "end of input")?;
    Ok(t)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn peek_at(&self, n: usize) -> &Tok {
        &self.toks[(self.pos + n).min(self.toks.len() - 1)].tok
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> DslError {
        let s = &self.toks[self.pos];
        DslError::Syntax {
            line: s.line,
            column: s.column,
            expected: expected.iter().map(|e| e.to_string()).collect(),
            found: s.tok.describe(),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[what]))
        }
    }

    fn formula(&mut self) -> Result<Term> {
        let l = self.disjunction()?;
        let op = match self.peek() {
            Tok::Implies => LogicOp::Implies,
            Tok::Iff => LogicOp::Iff,
            _ => return Ok(l),
        };
        self.bump();
        let r = self.disjunction()?;
        if matches!(self.peek(), Tok::Implies | Tok::Iff) {
            return Err(self.error(&["parentheses around a chained `=>`/`<=>`"]));
        }
        Ok(Term::logic(op, l, r))
    }

    fn disjunction(&mut self) -> Result<Term> {
        let mut l = self.conjunction()?;
        while *self.peek() == Tok::OrOr {
            self.bump();
            l = Term::logic(LogicOp::Or, l, self.conjunction()?);
        }
        Ok(l)
    }

    fn conjunction(&mut self) -> Result<Term> {
        let mut l = self.negation()?;
        while *self.peek() == Tok::AndAnd {
            self.bump();
            l = Term::logic(LogicOp::And, l, self.negation()?);
        }
        Ok(l)
    }

    fn negation(&mut self) -> Result<Term> {
        if *self.peek() == Tok::Bang {
            self.bump();
            return Ok(Term::Not(Box::new(self.negation()?)));
        }
        self.comparison()
    }

    fn comparison(&mut self) -> Result<Term> {
        let l = self.residual()?;
        let Tok::Cmp(tok) = *self.peek() else { return Ok(l) };
        let op = CmpOp::from_token(tok).expect("lexer only emits known comparisons");
        self.bump();
        let r = self.residual()?;
        if matches!(self.peek(), Tok::Cmp(_)) {
            return Err(self.error(&["parentheses around a chained comparison"]));
        }
        Ok(Term::cmp(op, l, r))
    }

    fn residual(&mut self) -> Result<Term> {
        let l = self.union()?;
        let op = match self.peek() {
            Tok::Backslash => BinOp::RightResidual,
            Tok::Slash => BinOp::LeftResidual,
            _ => return Ok(l),
        };
        self.bump();
        let r = self.union()?;
        if matches!(self.peek(), Tok::Backslash | Tok::Slash) {
            return Err(self.error(&["parentheses around a chained residual"]));
        }
        Ok(Term::binary(op, l, r))
    }

    fn union(&mut self) -> Result<Term> {
        let mut l = self.intersection()?;
        while *self.peek() == Tok::Pipe {
            self.bump();
            l = Term::binary(BinOp::Union, l, self.intersection()?);
        }
        Ok(l)
    }

    fn intersection(&mut self) -> Result<Term> {
        let mut l = self.sequence()?;
        loop {
            let op = match self.peek() {
                Tok::Amp => BinOp::Inter,
                Tok::Minus => BinOp::Minus,
                _ => return Ok(l),
            };
            self.bump();
            l = Term::binary(op, l, self.sequence()?);
        }
    }

    fn sequence(&mut self) -> Result<Term> {
        let mut l = self.prefix()?;
        loop {
            let op = match self.peek() {
                Tok::Semi => BinOp::Compose,
                Tok::Star => BinOp::Peleg,
                Tok::At => BinOp::Kleisli,
                _ => return Ok(l),
            };
            self.bump();
            l = Term::binary(op, l, self.prefix()?);
        }
    }

    fn prefix(&mut self) -> Result<Term> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Term::unary(UnOp::Complement, self.prefix()?));
        }
        self.postfix()
    }

    fn postfix(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        while *self.peek() == Tok::Caret {
            self.bump();
            t = Term::unary(UnOp::Converse, t);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let t = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Tok::Int(n @ (0 | 1)) => {
                self.bump();
                let c = if n == 0 { Const::Empty } else { Const::Eta };
                self.constant(c)
            }
            Tok::Ident(name) => {
                if *self.peek_at(1) == Tok::LParen {
                    return self.call(&name);
                }
                self.bump();
                match name.as_str() {
                    "true" => Ok(Term::Bool(true)),
                    "false" => Ok(Term::Bool(false)),
                    _ => match Const::from_token(&name) {
                        Some(c) => self.constant(c),
                        None => Ok(Term::Var(name)),
                    },
                }
            }
            _ => Err(self.error(&["a variable", "a constant", "a function call", "`(`"])),
        }
    }

    fn constant(&mut self, c: Const) -> Result<Term> {
        let mut args = Vec::new();
        if *self.peek() == Tok::LBrack {
            self.bump();
            loop {
                args.push(self.ty()?);
                match self.bump() {
                    Tok::Comma => continue,
                    Tok::RBrack => break,
                    _ => {
                        self.pos -= 1;
                        return Err(self.error(&["`,`", "`]`"]));
                    }
                }
            }
            if args.len() != c.arity() {
                return Err(DslError::ty(
                    Term::Const(c, args.clone()),
                    format!("`{}` takes {} carrier annotation(s)", c.token(), c.arity()),
                ));
            }
        }
        Ok(Term::Const(c, args))
    }

    fn ty(&mut self) -> Result<TyExpr> {
        match self.peek().clone() {
            Tok::Ident(n) if n == "P" => {
                self.bump();
                Ok(TyExpr::Pow(Box::new(self.ty()?)))
            }
            Tok::Ident(n) => {
                self.bump();
                Ok(TyExpr::Named(n))
            }
            Tok::Int(n) => {
                self.bump();
                Ok(TyExpr::Size(n))
            }
            Tok::LParen => {
                self.bump();
                let t = self.ty()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            _ => Err(self.error(&["a carrier"])),
        }
    }

    fn call(&mut self, name: &str) -> Result<Term> {
        let at = self.pos;
        self.bump();
        self.bump();
        let first = self.formula()?;
        let second = if *self.peek() == Tok::Comma {
            self.bump();
            Some(self.formula()?)
        } else {
            None
        };
        self.expect(Tok::RParen, "`)`")?;
        let unary = |p: &Parser| -> Result<Term> {
            second.clone().map_or(Ok(first.clone()), |_| {
                let s = &p.toks[at];
                Err(DslError::Syntax {
                    line: s.line,
                    column: s.column,
                    expected: vec![format!("one argument to `{name}`")],
                    found: "two".into(),
                })
            })
        };
        if let Some(op) = UnOp::from_name(name) {
            return Ok(Term::unary(op, unary(self)?));
        }
        if let Some(p) = Pred::from_name(name) {
            return Ok(Term::Pred(p, Box::new(unary(self)?)));
        }
        if let Some(op) = BinOp::from_function(name) {
            let s = &self.toks[at];
            let Some(second) = second else {
                return Err(DslError::Syntax {
                    line: s.line,
                    column: s.column,
                    expected: vec![format!("two arguments to `{name}`")],
                    found: "one".into(),
                });
            };
            return Ok(Term::binary(op, first, second));
        }
        let s = &self.toks[at];
        Err(DslError::Syntax {
            line: s.line,
            column: s.column,
            expected: vec!["a known function".into()],
            found: format!("`{name}`"),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Term {
        Term::var(n)
    }

    #[test]
    fn applications() {
        assert_eq!(parse("do(R)").unwrap(), Term::unary(UnOp::Fusion, v("R")));
        assert_eq!(parse("di(R) * S").unwrap(), Term::binary(BinOp::Peleg, Term::unary(UnOp::Fission, v("R")), v("S")));
        assert_eq!(parse("syq(T, S)").unwrap(), Term::binary(BinOp::Syq, v("T"), v("S")));
    }

    #[test]
    fn grouping_is_kept() {
        let l = parse("(R * S) * T").unwrap();
        let r = parse("R * (S * T)").unwrap();
        assert_ne!(l, r);
        assert_eq!(l, parse("R * S * T").unwrap());
    }

    #[test]
    fn precedence() {
        // ^ > prefix - > ; > & > | > \
        assert_eq!(parse("-R^").unwrap(), Term::unary(UnOp::Complement, Term::unary(UnOp::Converse, v("R"))));
        assert_eq!(
            parse("R ; S & T | Q").unwrap(),
            Term::binary(
                BinOp::Union,
                Term::binary(BinOp::Inter, Term::binary(BinOp::Compose, v("R"), v("S")), v("T")),
                v("Q")
            )
        );
        assert_eq!(
            parse("R | S \\ T").unwrap(),
            Term::binary(BinOp::RightResidual, Term::binary(BinOp::Union, v("R"), v("S")), v("T"))
        );
        assert_eq!(parse("R - -S").unwrap(), Term::binary(BinOp::Minus, v("R"), Term::unary(UnOp::Complement, v("S"))));
    }

    #[test]
    fn residual_chains_need_parentheses() {
        let err = parse("T / S / Q").unwrap_err();
        assert!(matches!(err, DslError::Syntax { line: 1, column: 7, .. }), "{err}");
        assert!(parse("(T / S) / Q").is_ok());
        assert!(parse("T \\ (S / Q)").is_ok());
    }

    #[test]
    fn constants_and_annotations() {
        assert_eq!(parse("0").unwrap(), Term::Const(Const::Empty, vec![]));
        assert_eq!(parse("eta").unwrap(), parse("1").unwrap());
        assert_eq!(
            parse("ilow[X, P Y]").unwrap(),
            Term::Const(Const::ILow, vec![TyExpr::Named("X".into()), TyExpr::Pow(Box::new(TyExpr::Named("Y".into())))])
        );
        assert!(parse("Id[X, Y]").is_err());
        assert!(parse("2").is_err());
    }

    #[test]
    fn formulas() {
        let t = parse("a(R) <= T <=> R <d= L(T)").unwrap();
        assert!(matches!(t, Term::Logic(LogicOp::Iff, ..)));
        let t = parse("!ouni(R) || R == S && true").unwrap();
        assert!(matches!(t, Term::Logic(LogicOp::Or, ..)));
        assert!(parse("R == S == T").is_err());
        assert!(parse("A => B => C").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        match parse("R ;\n  (S | )").unwrap_err() {
            DslError::Syntax { line, column, found, .. } => {
                assert_eq!((line, column), (2, 8));
                assert_eq!(found, "`)`");
            }
            e => panic!("{e}"),
        }
        assert!(matches!(parse("R # S"), Err(DslError::Syntax { column: 3, .. })));
        assert!(matches!(parse("foo(R)"), Err(DslError::Syntax { .. })));
        assert!(matches!(parse("icup(R)"), Err(DslError::Syntax { .. })));
        assert!(matches!(parse("do(R, S)"), Err(DslError::Syntax { .. })));
    }

    #[test]
    fn function_names_are_variables_without_arguments() {
        assert_eq!(parse("a ; L").unwrap(), Term::binary(BinOp::Compose, v("a"), v("L")));
    }
}
