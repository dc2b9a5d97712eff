//! Semantic layer: turns a parsed file into a path category plus named
//! matrices, Adelman objects and morphisms.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use freeabel::addclosure::{MatMorphism, TupleObject};
use freeabel::adelman::{Adel, AdelMorphism, AdelObject};
use freeabel::quivercat::{LinMorphism, Path, PathCategory, Quiver, Relation};
use freeabel::{catalog, Error};

use crate::ast::*;
use crate::error::{CliError, CliResult, Pos};
use crate::parser::{parse_expr, parse_file};

/// Everything a command can refer to by name.
#[derive(Clone, Debug)]
pub struct Session {
    pub adel: Adel,
    pub matrices: BTreeMap<String, MatMorphism>,
    pub objects: BTreeMap<String, AdelObject>,
    pub morphisms: BTreeMap<String, AdelMorphism>,
}

fn at<T>(pos: Pos, r: freeabel::Result<T>) -> CliResult<T> {
    r.map_err(|e| CliError::at(pos, e))
}

fn factor_path(cat: &PathCategory, f: &Factor, implied: Option<(usize, usize)>, pos: Pos) -> CliResult<Path> {
    match f {
        Factor::Path(labels) => {
            let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
            at(pos, cat.quiver().path_from_labels(&labels))
        }
        Factor::Identity(Some(v)) => Ok(Path::identity(at(pos, cat.vertex(v))?)),
        Factor::Identity(None) => match implied {
            Some((a, b)) if a == b => Ok(Path::identity(a)),
            Some(_) => Err(CliError::at(
                pos,
                Error::EndpointMismatch("`id` between distinct vertices".into()),
            )),
            None => Err(CliError::at(
                pos,
                Error::UnknownVertex("bare `id` needs a vertex here; write id(v)".into()),
            )),
        },
    }
}

fn expr_terms(
    cat: &PathCategory,
    e: &Expr,
    implied: Option<(usize, usize)>,
) -> CliResult<Vec<(BigInt, Path)>> {
    e.terms
        .iter()
        .map(|t| Ok((t.coeff.clone(), factor_path(cat, &t.factor, implied, e.pos)?)))
        .collect()
}

/// The element of `Hom(a, b)` denoted by `e`.
pub fn eval_expr(cat: &PathCategory, e: &Expr, a: usize, b: usize) -> CliResult<LinMorphism> {
    let terms = expr_terms(cat, e, Some((a, b)))?;
    at(e.pos, cat.lin_from_terms(a, b, &terms))
}

fn build_relation(cat_quiver: &Quiver, r: &RelationSpec) -> CliResult<Relation> {
    // Relations are checked before the category exists, so resolve paths
    // against the quiver directly.
    let mut terms = Vec::new();
    for (sign, e) in [(1, &r.lhs), (-1, &r.rhs)] {
        for t in &e.terms {
            let path = match &t.factor {
                Factor::Path(labels) => {
                    let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
                    at(e.pos, cat_quiver.path_from_labels(&labels))?
                }
                Factor::Identity(Some(v)) => Path::identity(at(e.pos, cat_quiver.vertex(v))?),
                Factor::Identity(None) => {
                    return Err(CliError::at(
                        e.pos,
                        Error::UnknownVertex("bare `id` in a relation; write id(v)".into()),
                    ))
                }
            };
            terms.push((BigInt::from(sign) * &t.coeff, path));
        }
    }
    if terms.is_empty() {
        return Err(CliError::at(
            r.pos,
            Error::NonParallelRelation("relation without terms".into()),
        ));
    }
    at(r.pos, Relation::new(terms))
}

/// Builds the path category of a category block.
pub fn build_category(c: &CategorySpec) -> CliResult<PathCategory> {
    for (i, v) in c.objects.iter().enumerate() {
        if c.objects[..i].contains(v) {
            return Err(CliError::at(c.pos, Error::DuplicateLabel(format!("vertex {v}"))));
        }
    }
    for a in &c.arrows {
        for v in [&a.source, &a.target] {
            if !c.objects.contains(v) {
                return Err(CliError::at(a.pos, Error::UnknownVertex(v.clone())));
            }
        }
    }
    let arrows: Vec<(&str, &str, &str)> = c
        .arrows
        .iter()
        .map(|a| (a.label.as_str(), a.source.as_str(), a.target.as_str()))
        .collect();
    let objects: Vec<&str> = c.objects.iter().map(String::as_str).collect();
    let q = Quiver::new(&objects, &arrows).map_err(|e| {
        let pos = match &e {
            Error::DuplicateLabel(l) => c
                .arrows
                .iter()
                .filter(|a| &a.label == l)
                .nth(1)
                .map_or(c.pos, |a| a.pos),
            _ => c.pos,
        };
        CliError::at(pos, e)
    })?;
    let relations = c
        .relations
        .iter()
        .map(|r| build_relation(&q, r))
        .collect::<CliResult<Vec<_>>>()?;
    at(c.pos, PathCategory::new(c.name.clone(), q, relations))
}

fn tuple(cat: &PathCategory, names: &[String], pos: Pos) -> CliResult<TupleObject> {
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    at(pos, catalog::tuple(cat, &names))
}

fn build_matrix(
    cat: &PathCategory,
    source: &TupleObject,
    target: &TupleObject,
    rows: &[Vec<Expr>],
    pos: Pos,
) -> CliResult<MatMorphism> {
    if rows.len() != source.len() || rows.iter().any(|r| r.len() != target.len()) {
        return Err(CliError::at(
            pos,
            Error::DimensionMismatch(format!(
                "expected a {}x{} matrix",
                source.len(),
                target.len()
            )),
        ));
    }
    let entries = rows
        .iter()
        .zip(&source.summands)
        .map(|(row, &a)| {
            row.iter()
                .zip(&target.summands)
                .map(|(e, &b)| eval_expr(cat, e, a, b))
                .collect::<CliResult<Vec<_>>>()
        })
        .collect::<CliResult<Vec<_>>>()?;
    at(pos, MatMorphism::new(source.clone(), target.clone(), entries))
}

impl Session {
    pub fn from_category(cat: PathCategory) -> Self {
        Self {
            adel: Adel::new(cat),
            matrices: BTreeMap::new(),
            objects: BTreeMap::new(),
            morphisms: BTreeMap::new(),
        }
    }

    pub fn parse(src: &str) -> CliResult<Self> {
        Self::build(&parse_file(src)?)
    }

    pub fn build(file: &SpecFile) -> CliResult<Self> {
        let mut s = Self::from_category(build_category(&file.category)?);
        for d in &file.decls {
            s.declare(d)?;
        }
        Ok(s)
    }

    pub fn cat(&self) -> &PathCategory {
        self.adel.cat()
    }

    fn declare(&mut self, d: &Decl) -> CliResult<()> {
        match d {
            Decl::Let {
                name,
                source,
                target,
                rows,
                pos,
            } => {
                let (s, t) = (tuple(self.cat(), source, *pos)?, tuple(self.cat(), target, *pos)?);
                let m = build_matrix(self.cat(), &s, &t, rows, *pos)?;
                insert_new(&mut self.matrices, name, m, *pos)
            }
            Decl::Object { name, def, pos } => {
                let o = match def {
                    ObjectDef::Emb(t) => self.adel.emb_object(&tuple(self.cat(), t, *pos)?),
                    ObjectDef::Pair { rel, corel } => {
                        let get = |n: &String| {
                            self.matrices
                                .get(n)
                                .cloned()
                                .ok_or_else(|| CliError::at(*pos, Error::UnknownArrow(format!("matrix {n}"))))
                        };
                        at(*pos, AdelObject::new(get(rel)?, get(corel)?))?
                    }
                };
                insert_new(&mut self.objects, name, o, *pos)
            }
            Decl::Morphism {
                name,
                source,
                target,
                datum,
                pos,
            } => {
                let x = self.object(source).map_err(|e| relocate(e, *pos))?;
                let y = self.object(target).map_err(|e| relocate(e, *pos))?;
                let m = match datum {
                    MatRef::Named(n) => self
                        .matrices
                        .get(n)
                        .cloned()
                        .ok_or_else(|| CliError::at(*pos, Error::UnknownArrow(format!("matrix {n}"))))?,
                    MatRef::Literal(rows) => build_matrix(self.cat(), x.mid(), y.mid(), rows, *pos)?,
                };
                let f = at(*pos, self.adel.morphism(&x, &y, &m))?;
                insert_new(&mut self.morphisms, name, f, *pos)
            }
        }
    }

    /// A declared object, a vertex (embedded), `emb(v, ..)`, or
    /// `(rho | gamma)` with each side a matrix name or path expression.
    pub fn object(&self, name: &str) -> CliResult<AdelObject> {
        if let Some(o) = self.objects.get(name) {
            return Ok(o.clone());
        }
        if let Some((rel, corel)) = name
            .trim()
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .and_then(|r| r.split_once('|'))
        {
            let (rel, corel) = (self.matrix(rel.trim())?, self.matrix(corel.trim())?);
            return Ok(AdelObject::new(rel, corel)?);
        }
        let inner = name
            .strip_prefix("emb(")
            .and_then(|r| r.strip_suffix(')'))
            .map(|r| r.split(',').map(str::trim).filter(|s| !s.is_empty()).collect::<Vec<_>>());
        let names = inner.unwrap_or_else(|| vec![name]);
        let t = catalog::tuple(self.cat(), &names)
            .map_err(|_| CliError::Usage(format!("unknown object `{name}`")))?;
        Ok(self.adel.emb_object(&t))
    }

    /// A declared morphism, the embedding of a declared matrix, or the
    /// embedding of a path expression such as `alpha*beta - gamma`.
    pub fn morphism(&self, text: &str) -> CliResult<AdelMorphism> {
        if let Some(f) = self.morphisms.get(text) {
            return Ok(f.clone());
        }
        if let Some(m) = self.matrices.get(text) {
            return Ok(self.adel.emb(m));
        }
        Ok(self.adel.emb(&MatMorphism::single(self.lin(text)?)))
    }

    /// A single path expression as a morphism of the path category.
    pub fn lin(&self, text: &str) -> CliResult<LinMorphism> {
        let e = parse_expr(text)?;
        let cat = self.cat();
        let terms = expr_terms(cat, &e, None)?;
        let Some((_, p)) = terms.first() else {
            return Err(CliError::Usage(format!(
                "cannot infer the endpoints of `{text}`"
            )));
        };
        at(e.pos, cat.lin_from_terms(p.source, p.target, &terms))
    }

    /// A matrix name or a single path expression, as a matrix.
    pub fn matrix(&self, text: &str) -> CliResult<MatMorphism> {
        match self.matrices.get(text) {
            Some(m) => Ok(m.clone()),
            None => Ok(MatMorphism::single(self.lin(text)?)),
        }
    }
}

/// The category block describing `cat`, with relations written `... = 0`.
pub fn spec_of(cat: &PathCategory) -> CategorySpec {
    let q = cat.quiver();
    let expr = |terms: &[(BigInt, Path)]| Expr {
        terms: terms
            .iter()
            .map(|(c, p)| Term {
                coeff: c.clone(),
                factor: if p.arrows.is_empty() {
                    Factor::Identity(Some(q.vertex_name(p.source).to_string()))
                } else {
                    Factor::Path(p.arrows.iter().map(|&a| q.arrows()[a].label.clone()).collect())
                },
            })
            .collect(),
        pos: Pos::default(),
    };
    CategorySpec {
        name: cat.name().to_string(),
        objects: q.vertices().to_vec(),
        arrows: q
            .arrows()
            .iter()
            .map(|a| ArrowSpec {
                label: a.label.clone(),
                source: q.vertex_name(a.source).to_string(),
                target: q.vertex_name(a.target).to_string(),
                pos: Pos::default(),
            })
            .collect(),
        relations: cat
            .relations()
            .iter()
            .map(|r| RelationSpec {
                lhs: expr(&r.terms),
                rhs: expr(&[]),
                pos: Pos::default(),
            })
            .collect(),
        pos: Pos::default(),
    }
}

fn relocate(e: CliError, pos: Pos) -> CliError {
    match e {
        CliError::Usage(msg) => CliError::at(pos, Error::UnknownVertex(msg)),
        other => other,
    }
}

fn insert_new<T>(map: &mut BTreeMap<String, T>, name: &str, v: T, pos: Pos) -> CliResult<()> {
    if map.contains_key(name) {
        return Err(CliError::at(pos, Error::DuplicateLabel(name.to_string())));
    }
    map.insert(name.to_string(), v);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const SNAKE: &str = "category S { objects a b c d; arrows alpha: a->b; beta: b->c; gamma: c->d; relations alpha*beta*gamma = 0; }";

    #[test]
    fn snake_example_matches_catalog() {
        let s = Session::parse(SNAKE).unwrap();
        let builtin = catalog::snake();
        assert_eq!(s.cat().quiver(), builtin.quiver());
        assert_eq!(s.cat().relations(), builtin.relations());
    }

    #[test]
    fn empty_relations_give_free_category() {
        let s = Session::parse("category F { objects a b; arrows x: a -> b; y: a -> b; relations }").unwrap();
        let h = s.cat().hom(0, 1);
        assert_eq!(h.dim(), 2);
        assert_eq!(h.group().invariants().describe(), "Z^2");
    }

    #[test]
    fn semantic_errors() {
        let err = Session::parse("category S { objects a b; arrows alpha: a -> b; beta: b -> a; }").unwrap_err();
        assert!(matches!(err, CliError::Semantic { source: Error::Cyclic(_), .. }), "{err}");
        let err = Session::parse("category S { objects a b c; arrows alpha: a -> b; beta: b -> c; relations alpha = beta; }")
            .unwrap_err();
        assert!(matches!(err, CliError::Semantic { source: Error::NonParallelRelation(_), .. }), "{err}");
        assert!(err.to_string().starts_with("1:"), "{err}");
        let err = Session::parse("category S { objects a; arrows x: a -> q; }").unwrap_err();
        assert!(matches!(err, CliError::Semantic { source: Error::UnknownVertex(_), .. }));
        let err = Session::parse("category S { objects a b; arrows x: a -> b; x: a -> b; }").unwrap_err();
        assert!(matches!(err, CliError::Semantic { source: Error::DuplicateLabel(_), .. }));
    }

    #[test]
    fn declarations_build_adel_data() {
        let src = format!(
            "{SNAKE}
             let al : a -> b = [[alpha]];
             let bg : b -> d = [[beta*gamma]];
             let ab : a -> c = [[alpha*beta]];
             let g : c -> d = [[gamma]];
             object K = (al | bg);
             object C = (ab | g);
             morphism conn : K -> C = [[beta]];
             morphism bad_ok : K -> C = [[2*beta]];"
        );
        let s = Session::parse(&src).unwrap();
        assert_eq!(s.objects.len(), 2);
        let f = s.morphism("conn").unwrap();
        assert!(s.adel.is_zero_morphism(&f).unwrap().is_none());
        let g = s.morphism("alpha*beta").unwrap();
        assert_eq!(g.source(), &s.object("a").unwrap());
        assert_eq!(s.object("emb(a, b)").unwrap().mid().len(), 2);
        let ill = format!("{SNAKE}\nlet al : a -> b = [[alpha]];\nlet z : b -> () = [[]];\nobject X = (al | z);\nmorphism f : X -> b = [[id]];");
        let err = Session::parse(&ill).unwrap_err();
        assert!(matches!(err, CliError::Semantic { source: Error::IllDefined(_), .. }), "{err}");
        assert!(err.to_string().starts_with("5:"), "{err}");
    }
}
