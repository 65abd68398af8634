use crate::error::{DslError, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(usize),
    LParen,
    RParen,
    LBrack,
    RBrack,
    Comma,
    Semi,
    Star,
    At,
    Amp,
    Pipe,
    Backslash,
    Slash,
    Minus,
    Caret,
    Bang,
    /// One of the comparison tokens, spelled as written.
    Cmp(&'static str),
    Implies,
    Iff,
    AndAnd,
    OrOr,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Eof => "end of input".to_string(),
            other => format!("`{}`", other.spelling()),
        }
    }

    fn spelling(&self) -> &'static str {
        match self {
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::LBrack => "[",
            Tok::RBrack => "]",
            Tok::Comma => ",",
            Tok::Semi => ";",
            Tok::Star => "*",
            Tok::At => "@",
            Tok::Amp => "&",
            Tok::Pipe => "|",
            Tok::Backslash => "\\",
            Tok::Slash => "/",
            Tok::Minus => "-",
            Tok::Caret => "^",
            Tok::Bang => "!",
            Tok::Cmp(s) => s,
            Tok::Implies => "=>",
            Tok::Iff => "<=>",
            Tok::AndAnd => "&&",
            Tok::OrOr => "||",
            Tok::Ident(_) | Tok::Int(_) | Tok::Eof => "",
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

/// Multi-character operators, longest first.
const OPERATORS: [(&str, Tok); 12] = [
    ("<=>", Tok::Iff),
    ("<ud=", Tok::Cmp("<ud=")),
    ("<u=", Tok::Cmp("<u=")),
    ("<d=", Tok::Cmp("<d=")),
    ("<=", Tok::Cmp("<=")),
    (">=", Tok::Cmp(">=")),
    ("==", Tok::Cmp("==")),
    ("=>", Tok::Implies),
    ("&&", Tok::AndAnd),
    ("||", Tok::OrOr),
    ("&", Tok::Amp),
    ("|", Tok::Pipe),
];

pub(crate) fn lex(text: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut column) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        let syntax = |found: String| DslError::Syntax { line, column, expected: vec!["a term".into()], found };
        let (tok, len) = if c.is_ascii_alphabetic() || c == '_' {
            let len = chars[i..].iter().take_while(|c| c.is_ascii_alphanumeric() || **c == '_').count();
            (Tok::Ident(chars[i..i + len].iter().collect()), len)
        } else if c.is_ascii_digit() {
            let len = chars[i..].iter().take_while(|c| c.is_ascii_digit()).count();
            let word: String = chars[i..i + len].iter().collect();
            let n = word.parse().map_err(|_| syntax(format!("`{word}`")))?;
            (Tok::Int(n), len)
        } else if let Some((s, tok)) = OPERATORS.iter().find(|(s, _)| {
            let s: Vec<char> = s.chars().collect();
            chars[i..].starts_with(&s)
        }) {
            (tok.clone(), s.len())
        } else {
            let tok = match c {
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '[' => Tok::LBrack,
                ']' => Tok::RBrack,
                ',' => Tok::Comma,
                ';' => Tok::Semi,
                '*' => Tok::Star,
                '@' => Tok::At,
                '\\' => Tok::Backslash,
                '/' => Tok::Slash,
                '-' => Tok::Minus,
                '^' => Tok::Caret,
                '!' => Tok::Bang,
                _ => return Err(syntax(format!("`{c}`"))),
            };
            (tok, 1)
        };
        out.push(Spanned { tok, line, column });
        i += len;
        column += len;
    }
    out.push(Spanned { tok: Tok::Eof, line, column });
    Ok(out)
}
