//! Syntax trees for category files, as produced by the parser and consumed
//! by the printer and the session builder.

use num_bigint::BigInt;

use crate::error::Pos;

/// A category block followed by optional declarations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecFile {
    pub category: CategorySpec,
    pub decls: Vec<Decl>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategorySpec {
    pub name: String,
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowSpec>,
    pub relations: Vec<RelationSpec>,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowSpec {
    pub label: String,
    pub source: String,
    pub target: String,
    pub pos: Pos,
}

/// `lhs = rhs`; an omitted right side is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpec {
    pub lhs: Expr,
    pub rhs: Expr,
    pub pos: Pos,
}

/// A Z-linear combination; no terms means zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<Term>,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigInt,
    pub factor: Factor,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    /// Diagrammatic composite of arrow labels.
    Path(Vec<String>),
    /// `id(v)`, or bare `id` inside a matrix where the vertex is implied.
    Identity(Option<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    /// `let m : (a, b) -> c = [[..], [..]];`
    Let {
        name: String,
        source: Vec<String>,
        target: Vec<String>,
        rows: Vec<Vec<Expr>>,
        pos: Pos,
    },
    /// `object X = emb(a, b);` or `object X = (rho | gamma);`
    Object {
        name: String,
        def: ObjectDef,
        pos: Pos,
    },
    /// `morphism f : X -> Y = m;` with a matrix name or literal.
    Morphism {
        name: String,
        source: String,
        target: String,
        datum: MatRef,
        pos: Pos,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObjectDef {
    Emb(Vec<String>),
    Pair { rel: String, corel: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatRef {
    Named(String),
    Literal(Vec<Vec<Expr>>),
}
