//! Lexer and recursive-descent parser for category files.
//!
//! ```text
//! file      = category decl*
//! category  = "category" NAME "{" "objects" NAME+ ";"
//!             ["arrows" (NAME ":" NAME "->" NAME ";")*]
//!             ["relations" (expr ["=" expr] ";")*] "}"
//! decl      = "let" NAME ":" tuple "->" tuple "=" matrix ";"
//!           | "object" NAME "=" ("emb" tuple | "(" NAME "|" NAME ")") ";"
//!           | "morphism" NAME ":" NAME "->" NAME "=" (NAME | matrix) ";"
//! tuple     = NAME | "(" [NAME ("," NAME)*] ")"
//! matrix    = "[" [row ("," row)*] "]"      row = "[" [expr ("," expr)*] "]"
//! expr      = ["-"] term (("+" | "-") term)*
//! term      = INT ["*" factor] | factor
//! factor    = "id" ["(" NAME ")"] | NAME ("*" NAME)*
//! ```
//!
//! `#` and `//` start comments that run to the end of the line.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ast::*;
use crate::error::{CliError, CliResult, Pos};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(&'static str),
    Eof,
}

const SYMBOLS: [&str; 15] = ["->", "{", "}", "(", ")", "[", "]", ";", ":", ",", "*", "+", "-", "=", "|"];

const KEYWORDS: [&str; 9] = [
    "category", "objects", "arrows", "relations", "let", "object", "morphism", "emb", "id",
];

fn describe(t: &Tok) -> String {
    match t {
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Int(n) => format!("`{n}`"),
        Tok::Sym(s) => format!("`{s}`"),
        Tok::Eof => "end of input".into(),
    }
}

fn lex(src: &str) -> CliResult<Vec<(Tok, Pos)>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            col += i - start;
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            col += i - start;
            let text: String = chars[start..i].iter().collect();
            out.push((Tok::Int(text.parse().expect("digits")), pos));
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
        match SYMBOLS.iter().find(|s| rest.starts_with(*s)) {
            Some(s) => {
                i += s.len();
                col += s.len();
                out.push((Tok::Sym(s), pos));
            }
            None => return Err(CliError::syntax(pos, format!("unexpected character `{c}`"))),
        }
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn new(src: &str) -> CliResult<Self> {
        Ok(Self { toks: lex(src)?, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(x) if *x == s)
    }

    fn is_kw(&self, k: &str) -> bool {
        matches!(self.peek(), Tok::Ident(x) if x == k)
    }

    fn error<T>(&self, expected: &str) -> CliResult<T> {
        Err(CliError::syntax(
            self.pos(),
            format!("expected {expected}, found {}", describe(self.peek())),
        ))
    }

    fn sym(&mut self, s: &str) -> CliResult<()> {
        if self.is_sym(s) {
            self.bump();
            Ok(())
        } else {
            self.error(&format!("`{s}`"))
        }
    }

    fn kw(&mut self, k: &str) -> CliResult<()> {
        if self.is_kw(k) {
            self.bump();
            Ok(())
        } else {
            self.error(&format!("`{k}`"))
        }
    }

    fn name(&mut self) -> CliResult<String> {
        match self.peek() {
            Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => self.error("a name"),
        }
    }

    fn is_name(&self) -> bool {
        matches!(self.peek(), Tok::Ident(s) if !KEYWORDS.contains(&s.as_str()))
    }

    fn file(&mut self) -> CliResult<SpecFile> {
        let category = self.category()?;
        let mut decls = Vec::new();
        while *self.peek() != Tok::Eof {
            decls.push(self.decl()?);
        }
        Ok(SpecFile { category, decls })
    }

    fn category(&mut self) -> CliResult<CategorySpec> {
        let pos = self.pos();
        self.kw("category")?;
        let name = self.name()?;
        self.sym("{")?;
        self.kw("objects")?;
        let mut objects = vec![self.name()?];
        while self.is_name() {
            objects.push(self.name()?);
        }
        self.sym(";")?;
        let mut arrows = Vec::new();
        if self.is_kw("arrows") {
            self.bump();
            while self.is_name() {
                let pos = self.pos();
                let label = self.name()?;
                self.sym(":")?;
                let source = self.name()?;
                self.sym("->")?;
                let target = self.name()?;
                self.sym(";")?;
                arrows.push(ArrowSpec {
                    label,
                    source,
                    target,
                    pos,
                });
            }
        }
        let mut relations = Vec::new();
        if self.is_kw("relations") {
            self.bump();
            while !self.is_sym("}") {
                let pos = self.pos();
                let lhs = self.expr()?;
                let rhs = if self.is_sym("=") {
                    self.bump();
                    self.expr()?
                } else {
                    Expr {
                        terms: vec![],
                        pos: self.pos(),
                    }
                };
                self.sym(";")?;
                relations.push(RelationSpec { lhs, rhs, pos });
            }
        }
        self.sym("}")?;
        Ok(CategorySpec {
            name,
            objects,
            arrows,
            relations,
            pos,
        })
    }

    fn decl(&mut self) -> CliResult<Decl> {
        let pos = self.pos();
        if self.is_kw("let") {
            self.bump();
            let name = self.name()?;
            self.sym(":")?;
            let source = self.tuple()?;
            self.sym("->")?;
            let target = self.tuple()?;
            self.sym("=")?;
            let rows = self.matrix()?;
            self.sym(";")?;
            Ok(Decl::Let {
                name,
                source,
                target,
                rows,
                pos,
            })
        } else if self.is_kw("object") {
            self.bump();
            let name = self.name()?;
            self.sym("=")?;
            let def = if self.is_kw("emb") {
                self.bump();
                ObjectDef::Emb(self.tuple()?)
            } else {
                self.sym("(")?;
                let rel = self.name()?;
                self.sym("|")?;
                let corel = self.name()?;
                self.sym(")")?;
                ObjectDef::Pair { rel, corel }
            };
            self.sym(";")?;
            Ok(Decl::Object { name, def, pos })
        } else if self.is_kw("morphism") {
            self.bump();
            let name = self.name()?;
            self.sym(":")?;
            let source = self.name()?;
            self.sym("->")?;
            let target = self.name()?;
            self.sym("=")?;
            let datum = if self.is_sym("[") {
                MatRef::Literal(self.matrix()?)
            } else {
                MatRef::Named(self.name()?)
            };
            self.sym(";")?;
            Ok(Decl::Morphism {
                name,
                source,
                target,
                datum,
                pos,
            })
        } else {
            self.error("`let`, `object` or `morphism`")
        }
    }

    fn tuple(&mut self) -> CliResult<Vec<String>> {
        if !self.is_sym("(") {
            return Ok(vec![self.name()?]);
        }
        self.bump();
        let mut out = Vec::new();
        if !self.is_sym(")") {
            out.push(self.name()?);
            while self.is_sym(",") {
                self.bump();
                out.push(self.name()?);
            }
        }
        self.sym(")")?;
        Ok(out)
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> CliResult<T>) -> CliResult<Vec<T>> {
        self.sym("[")?;
        let mut out = Vec::new();
        if !self.is_sym("]") {
            out.push(item(self)?);
            while self.is_sym(",") {
                self.bump();
                out.push(item(self)?);
            }
        }
        self.sym("]")?;
        Ok(out)
    }

    fn matrix(&mut self) -> CliResult<Vec<Vec<Expr>>> {
        self.list(|p| p.list(Self::expr))
    }

    fn expr(&mut self) -> CliResult<Expr> {
        let pos = self.pos();
        let mut terms = Vec::new();
        let mut negate = false;
        if self.is_sym("-") {
            self.bump();
            negate = true;
        }
        loop {
            if let Some(mut t) = self.term()? {
                if negate {
                    t.coeff = -t.coeff;
                }
                terms.push(t);
            }
            if self.is_sym("+") {
                negate = false;
            } else if self.is_sym("-") {
                negate = true;
            } else {
                break;
            }
            self.bump();
        }
        Ok(Expr { terms, pos })
    }

    /// `None` for a bare `0`.
    fn term(&mut self) -> CliResult<Option<Term>> {
        if let Tok::Int(n) = self.peek().clone() {
            self.bump();
            if self.is_sym("*") {
                self.bump();
                let factor = self.factor()?;
                return Ok(Some(Term { coeff: n, factor }));
            }
            return Ok(if n.is_zero() {
                None
            } else {
                Some(Term {
                    coeff: n,
                    factor: Factor::Identity(None),
                })
            });
        }
        let factor = self.factor()?;
        Ok(Some(Term {
            coeff: BigInt::one(),
            factor,
        }))
    }

    fn factor(&mut self) -> CliResult<Factor> {
        if self.is_kw("id") {
            self.bump();
            if self.is_sym("(") {
                self.bump();
                let v = self.name()?;
                self.sym(")")?;
                return Ok(Factor::Identity(Some(v)));
            }
            return Ok(Factor::Identity(None));
        }
        if !self.is_name() {
            return self.error("a path, `id` or an integer");
        }
        let mut labels = vec![self.name()?];
        while self.is_sym("*") && matches!(self.peek2(), Tok::Ident(_)) {
            self.bump();
            labels.push(self.name()?);
        }
        Ok(Factor::Path(labels))
    }

    fn finish(&mut self) -> CliResult<()> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            self.error("end of input")
        }
    }
}

/// Parses a category file.
pub fn parse_file(src: &str) -> CliResult<SpecFile> {
    let mut p = Parser::new(src)?;
    p.file()
}

/// Parses a category file that must consist of the category block alone.
pub fn parse_category(src: &str) -> CliResult<CategorySpec> {
    let f = parse_file(src)?;
    if let Some(d) = f.decls.first() {
        let pos = match d {
            Decl::Let { pos, .. } | Decl::Object { pos, .. } | Decl::Morphism { pos, .. } => *pos,
        };
        return Err(CliError::syntax(pos, "declarations after the category block"));
    }
    Ok(f.category)
}

/// Parses a standalone linear expression such as `alpha*beta - 2*gamma`.
pub fn parse_expr(src: &str) -> CliResult<Expr> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a standalone matrix literal `[[..], ..]`.
pub fn parse_matrix(src: &str) -> CliResult<Vec<Vec<Expr>>> {
    let mut p = Parser::new(src)?;
    let m = p.matrix()?;
    p.finish()?;
    Ok(m)
}
