//! The `Z`-linear category `C(Q, R)` of a finite acyclic quiver `Q` modulo
//! a set of `Z`-linear relations `R`.
//!
//! Every Hom-set is a finitely presented abelian group: free on the paths
//! between the two vertices, modulo the two-sided ideal generated by `R`.
//! Acyclicity makes the path sets finite, so the ideal restricted to a
//! Hom-set is spanned by the finitely many products `p * r * q`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::intlinalg::{FpAbGroup, IntMatrix};

pub type VertexId = usize;
pub type ArrowId = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// Finite acyclic quiver with uniquely labelled vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(label, source, target)`
    /// triples, rejecting duplicate labels and cycles.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(S, S, S)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::DuplicateLabel(v.clone()));
            }
        }
        let lookup = |name: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| Error::UnknownVertex(name.to_string()))
        };
        let mut built = Vec::with_capacity(arrows.len());
        for (label, s, t) in arrows {
            let label = label.as_ref().to_string();
            if built.iter().any(|a: &Arrow| a.label == label) || vertices.contains(&label) {
                return Err(Error::DuplicateLabel(label));
            }
            built.push(Arrow {
                label,
                source: lookup(s.as_ref())?,
                target: lookup(t.as_ref())?,
            });
        }
        let q = Self {
            vertices,
            arrows: built,
        };
        q.check_acyclic()?;
        Ok(q)
    }

    fn check_acyclic(&self) -> Result<()> {
        // Kahn's algorithm; whatever is left over lies on a cycle.
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<VertexId> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        if seen < n {
            let v = (0..n).find(|&v| indeg[v] > 0).expect("some vertex is left");
            return Err(Error::Cyclic(self.vertices[v].clone()));
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow(&self, label: &str) -> Result<ArrowId> {
        self.arrows
            .iter()
            .position(|a| a.label == label)
            .ok_or_else(|| Error::UnknownArrow(label.to_string()))
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    /// Same vertices, every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    label: a.label.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Every path from `a` to `b`, ordered by length and then
    /// lexicographically by arrow index. Includes the identity iff `a == b`.
    pub fn enumerate_paths(&self, a: VertexId, b: VertexId) -> Vec<Path> {
        let mut out = Vec::new();
        let mut stack = vec![(a, Vec::<ArrowId>::new())];
        while let Some((v, arrows)) = stack.pop() {
            if v == b {
                out.push(Path {
                    source: a,
                    target: b,
                    arrows: arrows.clone(),
                });
            }
            for (i, arr) in self.arrows.iter().enumerate() {
                if arr.source == v {
                    let mut next = arrows.clone();
                    next.push(i);
                    stack.push((arr.target, next));
                }
            }
        }
        out.sort_by(|x, y| (x.arrows.len(), &x.arrows).cmp(&(y.arrows.len(), &y.arrows)));
        out
    }

    pub fn path_from_labels(&self, labels: &[&str]) -> Result<Path> {
        let mut iter = labels.iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::NotComposable("empty label list".into()))?;
        let mut p = Path::arrow(self, self.arrow(first)?);
        for l in iter {
            p = p.concat(&Path::arrow(self, self.arrow(l)?))?;
        }
        Ok(p)
    }

    pub fn format_path(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            format!("id({})", self.vertices[p.source])
        } else {
            p.arrows
                .iter()
                .map(|&a| self.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A composable sequence of arrows; the empty sequence is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: VertexId,
    pub target: VertexId,
    pub arrows: Vec<ArrowId>,
}

impl Path {
    pub fn identity(v: VertexId) -> Self {
        Self {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn arrow(q: &Quiver, a: ArrowId) -> Self {
        let arr = &q.arrows[a];
        Self {
            source: arr.source,
            target: arr.target,
            arrows: vec![a],
        }
    }

    /// Diagrammatic concatenation: `self` then `next`.
    pub fn concat(&self, next: &Path) -> Result<Path> {
        if self.target != next.source {
            return Err(Error::NotComposable(format!(
                "path ending at vertex {} followed by one starting at {}",
                self.target, next.source
            )));
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&next.arrows);
        Ok(Path {
            source: self.source,
            target: next.target,
            arrows,
        })
    }

    pub fn reversed(&self) -> Path {
        Path {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// `sum c_i * p_i = 0` with all paths parallel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub source: VertexId,
    pub target: VertexId,
    pub terms: Vec<(BigInt, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(BigInt, Path)>) -> Result<Self> {
        let Some((_, first)) = terms.first() else {
            return Err(Error::NonParallelRelation("relation without terms".into()));
        };
        let (source, target) = (first.source, first.target);
        if let Some((_, p)) = terms
            .iter()
            .find(|(_, p)| p.source != source || p.target != target)
        {
            return Err(Error::NonParallelRelation(format!(
                "term from vertex {} to {} among terms from {source} to {target}",
                p.source, p.target
            )));
        }
        Ok(Self {
            source,
            target,
            terms,
        })
    }

    pub fn reversed(&self) -> Relation {
        Relation {
            source: self.target,
            target: self.source,
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.reversed()))
                .collect(),
        }
    }
}

/// `Hom(source, target)`: its ordered path basis and relation subgroup.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: VertexId,
    pub target: VertexId,
    basis: Vec<Path>,
    index: HashMap<Vec<ArrowId>, usize>,
    group: FpAbGroup,
}

impl HomSpace {
    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, p: &Path) -> Option<usize> {
        self.index.get(&p.arrows).copied()
    }

    pub(crate) fn index_of_arrows(&self, arrows: &[ArrowId]) -> usize {
        self.index[arrows]
    }

    /// The Hom-set as a finitely presented abelian group on the path basis.
    pub fn group(&self) -> &FpAbGroup {
        &self.group
    }
}

/// Morphism of `C(Q, R)`: integer coefficients on the path basis of
/// `Hom(source, target)`, always stored reduced modulo the relations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMorphism {
    pub source: VertexId,
    pub target: VertexId,
    pub coeffs: Vec<BigInt>,
}

impl LinMorphism {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// The category `C(Q, R)` with every Hom-set closure precomputed.
#[derive(Clone, Debug)]
pub struct PathCategory {
    name: String,
    quiver: Quiver,
    relations: Vec<Relation>,
    homs: Vec<HomSpace>,
}

impl PartialEq for PathCategory {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations
    }
}

impl PathCategory {
    pub fn new(name: impl Into<String>, quiver: Quiver, relations: Vec<Relation>) -> Result<Self> {
        let n = quiver.vertices.len();
        for r in &relations {
            for (_, p) in &r.terms {
                check_path(&quiver, p)?;
            }
        }
        let mut homs = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                homs.push(build_hom(&quiver, &relations, a, b));
            }
        }
        Ok(Self {
            name: name.into(),
            quiver,
            relations,
            homs,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn hom(&self, a: VertexId, b: VertexId) -> &HomSpace {
        &self.homs[a * self.num_vertices() + b]
    }

    /// Rows generate the relation subgroup of `Z^{paths(a, b)}`.
    pub fn relation_subgroup(&self, a: VertexId, b: VertexId) -> &IntMatrix {
        self.hom(a, b).group.relations()
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId> {
        self.quiver.vertex(name)
    }

    pub fn arrow_path(&self, label: &str) -> Result<Path> {
        Ok(Path::arrow(&self.quiver, self.quiver.arrow(label)?))
    }

    /// The opposite category: reversed quiver, reversed relations.
    pub fn opposite(&self) -> PathCategory {
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        PathCategory::new(
            name,
            self.quiver.opposite(),
            self.relations.iter().map(Relation::reversed).collect(),
        )
        .expect("opposite of a valid category is valid")
    }

    pub fn lin_zero(&self, a: VertexId, b: VertexId) -> LinMorphism {
        LinMorphism {
            source: a,
            target: b,
            coeffs: vec![BigInt::zero(); self.hom(a, b).dim()],
        }
    }

    pub fn lin_identity(&self, a: VertexId) -> LinMorphism {
        self.lin_from_path(&Path::identity(a))
    }

    pub fn lin_from_path(&self, p: &Path) -> LinMorphism {
        self.lin_from_terms(p.source, p.target, &[(BigInt::one(), p.clone())])
            .expect("a single path is parallel to itself")
    }

    /// Linear combination of parallel paths from `a` to `b`.
    pub fn lin_from_terms(
        &self,
        a: VertexId,
        b: VertexId,
        terms: &[(BigInt, Path)],
    ) -> Result<LinMorphism> {
        let hom = self.hom(a, b);
        let mut coeffs = vec![BigInt::zero(); hom.dim()];
        for (c, p) in terms {
            if p.source != a || p.target != b {
                return Err(Error::EndpointMismatch(format!(
                    "path {} is not a morphism {} -> {}",
                    self.quiver.format_path(p),
                    self.quiver.vertex_name(a),
                    self.quiver.vertex_name(b)
                )));
            }
            check_path(&self.quiver, p)?;
            let i = hom.index_of(p).expect("valid paths are enumerated");
            coeffs[i] += c;
        }
        Ok(self.canonical(a, b, coeffs))
    }

    /// Builds a morphism from raw coefficients on the path basis.
    pub fn lin_from_coeffs(&self, a: VertexId, b: VertexId, coeffs: Vec<BigInt>) -> Result<LinMorphism> {
        if coeffs.len() != self.hom(a, b).dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} coefficients for a Hom-set with {} paths",
                coeffs.len(),
                self.hom(a, b).dim()
            )));
        }
        Ok(self.canonical(a, b, coeffs))
    }

    fn canonical(&self, a: VertexId, b: VertexId, mut coeffs: Vec<BigInt>) -> LinMorphism {
        self.hom(a, b).group.canonical_in_place(&mut coeffs);
        LinMorphism {
            source: a,
            target: b,
            coeffs,
        }
    }

    /// Diagrammatic composite `f * g` ("f, then g").
    pub fn compose_lin(&self, f: &LinMorphism, g: &LinMorphism) -> Result<LinMorphism> {
        if f.target != g.source {
            return Err(Error::EndpointMismatch(format!(
                "composing a morphism into {} with one out of {}",
                self.quiver.vertex_name(f.target),
                self.quiver.vertex_name(g.source)
            )));
        }
        let coeffs = self.raw_compose(f, g);
        Ok(self.canonical(f.source, g.target, coeffs))
    }

    /// Composite coefficients before reduction modulo relations.
    pub(crate) fn raw_compose(&self, f: &LinMorphism, g: &LinMorphism) -> Vec<BigInt> {
        let left = self.hom(f.source, f.target);
        let right = self.hom(g.source, g.target);
        let out = self.hom(f.source, g.target);
        let mut coeffs = vec![BigInt::zero(); out.dim()];
        for (i, c) in f.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, d) in g.coeffs.iter().enumerate() {
                if d.is_zero() {
                    continue;
                }
                let mut arrows = left.basis[i].arrows.clone();
                arrows.extend_from_slice(&right.basis[j].arrows);
                let k = out.index[&arrows];
                coeffs[k] += c * d;
            }
        }
        coeffs
    }

    fn check_parallel(&self, f: &LinMorphism, g: &LinMorphism) -> Result<()> {
        if f.source != g.source || f.target != g.target {
            return Err(Error::EndpointMismatch("morphisms are not parallel".into()));
        }
        Ok(())
    }

    pub fn add_lin(&self, f: &LinMorphism, g: &LinMorphism) -> Result<LinMorphism> {
        self.check_parallel(f, g)?;
        let coeffs = f.coeffs.iter().zip(&g.coeffs).map(|(x, y)| x + y).collect();
        Ok(self.canonical(f.source, f.target, coeffs))
    }

    pub fn neg_lin(&self, f: &LinMorphism) -> LinMorphism {
        self.scale_lin(f, &BigInt::from(-1))
    }

    pub fn scale_lin(&self, f: &LinMorphism, s: &BigInt) -> LinMorphism {
        let coeffs = f.coeffs.iter().map(|x| x * s).collect();
        self.canonical(f.source, f.target, coeffs)
    }

    /// Equality in `C(Q, R)`: the difference lies in the relation subgroup.
    pub fn lin_equal(&self, f: &LinMorphism, g: &LinMorphism) -> Result<bool> {
        self.check_parallel(f, g)?;
        let diff: Vec<BigInt> = f.coeffs.iter().zip(&g.coeffs).map(|(x, y)| x - y).collect();
        self.hom(f.source, f.target).group.is_zero_element(&diff)
    }

    /// The same morphism read in the opposite category `op`.
    pub fn lin_to_opposite(&self, f: &LinMorphism, op: &PathCategory) -> LinMorphism {
        let hom = self.hom(f.source, f.target);
        let terms: Vec<(BigInt, Path)> = f
            .coeffs
            .iter()
            .zip(&hom.basis)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, p)| (c.clone(), p.reversed()))
            .collect();
        op.lin_from_terms(f.target, f.source, &terms)
            .expect("reversed paths live in the opposite quiver")
    }

    pub fn format_lin(&self, f: &LinMorphism) -> String {
        let basis = &self.hom(f.source, f.target).basis;
        format_terms(
            f.coeffs
                .iter()
                .zip(basis)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, p)| (c.clone(), self.quiver.format_path(p))),
        )
    }
}

/// Renders `c1*p1 + c2*p2 - ...`, or `0` for the empty sum.
pub fn format_terms(terms: impl Iterator<Item = (BigInt, String)>) -> String {
    let mut out = String::new();
    for (c, p) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&format!("{abs}*"));
        }
        out.push_str(&p);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn check_path(q: &Quiver, p: &Path) -> Result<()> {
    let mut at = p.source;
    for &a in &p.arrows {
        let arr = q
            .arrows
            .get(a)
            .ok_or_else(|| Error::UnknownArrow(format!("#{a}")))?;
        if arr.source != at {
            return Err(Error::NotComposable(format!(
                "arrow {} does not start at {}",
                arr.label, q.vertices[at]
            )));
        }
        at = arr.target;
    }
    if at != p.target {
        return Err(Error::NotComposable("path endpoints are inconsistent".into()));
    }
    Ok(())
}

fn build_hom(q: &Quiver, relations: &[Relation], a: VertexId, b: VertexId) -> HomSpace {
    let basis = q.enumerate_paths(a, b);
    let index: HashMap<Vec<ArrowId>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, p)| (p.arrows.clone(), i))
        .collect();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for r in relations {
        let prefixes = q.enumerate_paths(a, r.source);
        if prefixes.is_empty() {
            continue;
        }
        let suffixes = q.enumerate_paths(r.target, b);
        for p in &prefixes {
            for s in &suffixes {
                let mut row = vec![BigInt::zero(); basis.len()];
                for (c, term) in &r.terms {
                    let mut arrows = p.arrows.clone();
                    arrows.extend_from_slice(&term.arrows);
                    arrows.extend_from_slice(&s.arrows);
                    row[index[&arrows]] += c;
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let matrix = IntMatrix::from_rows(basis.len(), &rows).expect("rows have basis length");
    let group = FpAbGroup::new(basis.len(), matrix).expect("shape is consistent");
    HomSpace {
        source: a,
        target: b,
        basis,
        index,
        group,
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "objects {};", self.vertices.join(" "))?;
        for a in &self.arrows {
            write!(
                f,
                " {}: {} -> {};",
                a.label, self.vertices[a.source], self.vertices[a.target]
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snake_quiver() -> Quiver {
        Quiver::new(
            &["a", "b", "c", "d"],
            &[("alpha", "a", "b"), ("beta", "b", "c"), ("gamma", "c", "d")],
        )
        .unwrap()
    }

    fn snake() -> PathCategory {
        let q = snake_quiver();
        let p = q.path_from_labels(&["alpha", "beta", "gamma"]).unwrap();
        let r = Relation::new(vec![(BigInt::one(), p)]).unwrap();
        PathCategory::new("snake", q, vec![r]).unwrap()
    }

    fn int(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn cyclic_and_duplicate_rejected() {
        let cyc = Quiver::new(&["a", "b"], &[("x", "a", "b"), ("y", "b", "a")]);
        assert!(matches!(cyc, Err(Error::Cyclic(_))));
        let dup = Quiver::new(&["a", "b"], &[("x", "a", "b"), ("x", "a", "b")]);
        assert!(matches!(dup, Err(Error::DuplicateLabel(_))));
        let unknown = Quiver::new(&["a"], &[("x", "a", "z")]);
        assert!(matches!(unknown, Err(Error::UnknownVertex(_))));
        let lp = Quiver::new(&["a"], &[("x", "a", "a")]);
        assert!(matches!(lp, Err(Error::Cyclic(_))));
    }

    #[test]
    fn path_enumeration() {
        let q = snake_quiver();
        let (a, b, c, d) = (0, 1, 2, 3);
        assert!(q.enumerate_paths(b, a).is_empty());
        assert_eq!(q.enumerate_paths(c, c), vec![Path::identity(c)]);
        let ac = q.enumerate_paths(a, c);
        assert_eq!(ac.len(), 1);
        assert_eq!(q.format_path(&ac[0]), "alpha*beta");
        assert_eq!(q.enumerate_paths(a, d).len(), 1);
    }

    #[test]
    fn paths_ordered_by_length_then_index() {
        let q = Quiver::new(
            &["s", "m", "t"],
            &[("long1", "s", "m"), ("long2", "m", "t"), ("short", "s", "t"), ("other", "s", "t")],
        )
        .unwrap();
        let ps: Vec<String> = q
            .enumerate_paths(0, 2)
            .iter()
            .map(|p| q.format_path(p))
            .collect();
        assert_eq!(ps, vec!["short", "other", "long1*long2"]);
    }

    #[test]
    fn snake_relation_subgroup() {
        let cat = snake();
        let rel = cat.relation_subgroup(0, 3);
        assert_eq!(rel, &IntMatrix::from_i64(&[&[1]]));
        assert!(cat.relation_subgroup(0, 2).rows() == 0);
        assert!(cat.hom(0, 3).group().is_trivial());
        let free = PathCategory::new("free", snake_quiver(), vec![]).unwrap();
        assert_eq!(free.relation_subgroup(0, 3).rows(), 0);
    }

    #[test]
    fn two_torsion_hom() {
        let q = Quiver::new(&["a", "b"], &[("x", "a", "b")]).unwrap();
        let x = q.path_from_labels(&["x"]).unwrap();
        let r = Relation::new(vec![(int(2), x.clone())]).unwrap();
        let cat = PathCategory::new("z2", q, vec![r]).unwrap();
        assert_eq!(cat.hom(0, 1).group().invariants().torsion(), vec![int(2)]);
        let one = cat.lin_from_path(&x);
        let three = cat.scale_lin(&one, &int(3));
        assert!(cat.lin_equal(&one, &three).unwrap());
        assert_eq!(one, three);
    }

    #[test]
    fn composition_examples() {
        let cat = snake();
        let alpha = cat.lin_from_path(&cat.arrow_path("alpha").unwrap());
        let beta = cat.lin_from_path(&cat.arrow_path("beta").unwrap());
        let gamma = cat.lin_from_path(&cat.arrow_path("gamma").unwrap());
        let id_a = cat.lin_identity(0);
        assert_eq!(cat.compose_lin(&id_a, &alpha).unwrap(), alpha);
        let ab = cat.compose_lin(&alpha, &beta).unwrap();
        assert_eq!(cat.format_lin(&ab), "alpha*beta");
        let abc = cat.compose_lin(&ab, &gamma).unwrap();
        assert!(abc.is_zero());
        assert!(cat.compose_lin(&beta, &alpha).is_err());
        let zero = cat.lin_zero(0, 1);
        assert!(!cat.lin_equal(&alpha, &zero).unwrap());
    }

    #[test]
    fn non_parallel_relation_rejected() {
        let q = snake_quiver();
        let a = q.path_from_labels(&["alpha"]).unwrap();
        let b = q.path_from_labels(&["beta"]).unwrap();
        let r = Relation::new(vec![(int(1), a), (int(-1), b)]);
        assert!(matches!(r, Err(Error::NonParallelRelation(_))));
    }

    #[test]
    fn opposite_round_trip() {
        let cat = snake();
        let op = cat.opposite();
        assert_eq!(op.opposite(), cat);
        assert_eq!(op.opposite().name(), "snake");
        let ab = cat.lin_from_path(&cat.quiver().path_from_labels(&["alpha", "beta"]).unwrap());
        let back = op.lin_to_opposite(&cat.lin_to_opposite(&ab, &op), &cat);
        assert_eq!(back, ab);
        assert_eq!(op.format_lin(&cat.lin_to_opposite(&ab, &op)), "beta*alpha");
    }

    #[test]
    fn formatting() {
        let terms = vec![(int(-1), "x".to_string()), (int(2), "y".into()), (int(-3), "z".into())];
        assert_eq!(format_terms(terms.into_iter()), "-x + 2*y - 3*z");
        assert_eq!(format_terms(std::iter::empty()), "0");
    }
}
