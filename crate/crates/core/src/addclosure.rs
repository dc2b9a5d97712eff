//! The additive closure `C(Q, R)^+`: finite tuples of vertices and matrices
//! of morphisms between them, composed in diagrammatic order.
//!
//! The homotopy solver [`decide_homotopy`] lives here. Every decision in the
//! Adelman category reduces to it.

use std::ops::Range;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::intlinalg::{solve_left, IntMatrix};
use crate::quivercat::{LinMorphism, PathCategory, VertexId};

/// Formal direct sum of vertices; the empty tuple is the zero object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TupleObject {
    pub summands: Vec<VertexId>,
}

impl TupleObject {
    pub fn new(summands: Vec<VertexId>) -> Self {
        Self { summands }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(v: VertexId) -> Self {
        Self { summands: vec![v] }
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn sum(&self, other: &TupleObject) -> TupleObject {
        let mut summands = self.summands.clone();
        summands.extend_from_slice(&other.summands);
        TupleObject { summands }
    }

    pub fn slice(&self, range: Range<usize>) -> TupleObject {
        TupleObject {
            summands: self.summands[range].to_vec(),
        }
    }

    pub fn format(&self, cat: &PathCategory) -> String {
        if self.summands.is_empty() {
            return "0".into();
        }
        self.summands
            .iter()
            .map(|&v| cat.quiver().vertex_name(v))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Matrix morphism; entry `(i, j)` maps summand `i` of the source to
/// summand `j` of the target. Entries are kept canonical, so structural
/// equality is equality in the category.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatMorphism {
    source: TupleObject,
    target: TupleObject,
    entries: Vec<LinMorphism>,
}

impl MatMorphism {
    /// Validates entry endpoints and stores the grid.
    pub fn new(source: TupleObject, target: TupleObject, rows: Vec<Vec<LinMorphism>>) -> Result<Self> {
        if rows.len() != source.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} rows for a source with {} summands",
                rows.len(),
                source.len()
            )));
        }
        let mut entries = Vec::with_capacity(source.len() * target.len());
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != target.len() {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries for a target with {} summands",
                    row.len(),
                    target.len()
                )));
            }
            for (j, e) in row.into_iter().enumerate() {
                if e.source != source.summands[i] || e.target != target.summands[j] {
                    return Err(Error::EndpointMismatch(format!(
                        "entry ({i}, {j}) has the wrong endpoints"
                    )));
                }
                entries.push(e);
            }
        }
        Ok(Self {
            source,
            target,
            entries,
        })
    }

    /// A 1x1 matrix.
    pub fn single(f: LinMorphism) -> Self {
        Self {
            source: TupleObject::single(f.source),
            target: TupleObject::single(f.target),
            entries: vec![f],
        }
    }

    pub fn source(&self) -> &TupleObject {
        &self.source
    }

    pub fn target(&self) -> &TupleObject {
        &self.target
    }

    pub fn nrows(&self) -> usize {
        self.source.len()
    }

    pub fn ncols(&self) -> usize {
        self.target.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &LinMorphism {
        &self.entries[i * self.ncols() + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(LinMorphism::is_zero)
    }

    pub fn zero(cat: &PathCategory, source: &TupleObject, target: &TupleObject) -> Self {
        let mut entries = Vec::with_capacity(source.len() * target.len());
        for &a in &source.summands {
            for &b in &target.summands {
                entries.push(cat.lin_zero(a, b));
            }
        }
        Self {
            source: source.clone(),
            target: target.clone(),
            entries,
        }
    }

    pub fn identity(cat: &PathCategory, x: &TupleObject) -> Self {
        let mut m = Self::zero(cat, x, x);
        for (i, &v) in x.summands.iter().enumerate() {
            m.entries[i * x.len() + i] = cat.lin_identity(v);
        }
        m
    }

    /// Diagrammatic composite `self * next`.
    pub fn compose(&self, cat: &PathCategory, next: &MatMorphism) -> Result<MatMorphism> {
        if self.target != next.source {
            return Err(Error::EndpointMismatch(format!(
                "cannot compose a morphism into {} with one out of {}",
                self.target.format(cat),
                next.source.format(cat)
            )));
        }
        let (m, n, k) = (self.nrows(), self.ncols(), next.ncols());
        let mut entries = Vec::with_capacity(m * k);
        for i in 0..m {
            for j in 0..k {
                let (a, b) = (self.source.summands[i], next.target.summands[j]);
                let mut acc = vec![BigInt::zero(); cat.hom(a, b).dim()];
                for l in 0..n {
                    let (f, g) = (self.entry(i, l), next.entry(l, j));
                    if f.is_zero() || g.is_zero() {
                        continue;
                    }
                    for (x, y) in acc.iter_mut().zip(cat.raw_compose(f, g)) {
                        *x += y;
                    }
                }
                entries.push(cat.lin_from_coeffs(a, b, acc)?);
            }
        }
        Ok(MatMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            entries,
        })
    }

    fn check_parallel(&self, cat: &PathCategory, other: &MatMorphism) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::EndpointMismatch(format!(
                "morphisms {} -> {} and {} -> {} are not parallel",
                self.source.format(cat),
                self.target.format(cat),
                other.source.format(cat),
                other.target.format(cat)
            )));
        }
        Ok(())
    }

    pub fn add(&self, cat: &PathCategory, other: &MatMorphism) -> Result<MatMorphism> {
        self.check_parallel(cat, other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(f, g)| cat.add_lin(f, g))
            .collect::<Result<_>>()?;
        Ok(MatMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            entries,
        })
    }

    pub fn sub(&self, cat: &PathCategory, other: &MatMorphism) -> Result<MatMorphism> {
        self.add(cat, &other.negate(cat))
    }

    pub fn negate(&self, cat: &PathCategory) -> MatMorphism {
        self.scale(cat, &BigInt::from(-1))
    }

    pub fn scale(&self, cat: &PathCategory, s: &BigInt) -> MatMorphism {
        MatMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            entries: self.entries.iter().map(|f| cat.scale_lin(f, s)).collect(),
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, cat: &PathCategory, other: &MatMorphism) -> MatMorphism {
        let z1 = MatMorphism::zero(cat, &self.source, &other.target);
        let z2 = MatMorphism::zero(cat, &other.source, &self.target);
        block(cat, &[vec![self, &z1], vec![&z2, other]]).expect("block shapes are consistent")
    }

    /// The entries with source summands in `rows` and target summands in `cols`.
    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> MatMorphism {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for i in rows.clone() {
            for j in cols.clone() {
                entries.push(self.entry(i, j).clone());
            }
        }
        MatMorphism {
            source: self.source.slice(rows),
            target: self.target.slice(cols),
            entries,
        }
    }

    /// The same morphism read in the opposite category: transposed grid,
    /// every entry reversed.
    pub fn to_opposite(&self, cat: &PathCategory, op: &PathCategory) -> MatMorphism {
        let (m, n) = (self.nrows(), self.ncols());
        let mut entries = Vec::with_capacity(m * n);
        for j in 0..n {
            for i in 0..m {
                entries.push(cat.lin_to_opposite(self.entry(i, j), op));
            }
        }
        MatMorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            entries,
        }
    }

    /// Rendering as nested rows, e.g. `[[alpha, 0], [0, id(b)]]`.
    pub fn format(&self, cat: &PathCategory) -> String {
        let rows: Vec<String> = (0..self.nrows())
            .map(|i| {
                let cells: Vec<String> = (0..self.ncols())
                    .map(|j| cat.format_lin(self.entry(i, j)))
                    .collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

/// Assembles a block matrix. Block `(I, J)` maps source block `I` to
/// target block `J`; source blocks are read off the first column and
/// target blocks off the first row.
pub fn block(cat: &PathCategory, blocks: &[Vec<&MatMorphism>]) -> Result<MatMorphism> {
    let Some(first) = blocks.first() else {
        return Err(Error::DimensionMismatch("block matrix without block rows".into()));
    };
    let width = first.len();
    if width == 0 {
        return Err(Error::DimensionMismatch("block matrix without block columns".into()));
    }
    let mut source = TupleObject::zero();
    for row in blocks {
        if row.len() != width {
            return Err(Error::DimensionMismatch("ragged block matrix".into()));
        }
        source = source.sum(row[0].source());
    }
    let mut target = TupleObject::zero();
    for b in first.iter() {
        target = target.sum(b.target());
    }
    let mut grid: Vec<Vec<LinMorphism>> = Vec::with_capacity(source.len());
    for row in blocks {
        for (jb, b) in row.iter().enumerate() {
            if b.source() != row[0].source() || b.target() != first[jb].target() {
                return Err(Error::EndpointMismatch(format!(
                    "block {} -> {} does not fit its row and column",
                    b.source().format(cat),
                    b.target().format(cat)
                )));
            }
        }
        for i in 0..row[0].nrows() {
            let mut line = Vec::with_capacity(target.len());
            for b in row {
                for j in 0..b.ncols() {
                    line.push(b.entry(i, j).clone());
                }
            }
            grid.push(line);
        }
    }
    MatMorphism::new(source, target, grid)
}

/// Offsets of the blocks `Hom(source_i, target_j)` (row-major) inside the
/// flattened coefficient vector of a morphism `source -> target`.
pub fn flat_offsets(cat: &PathCategory, source: &TupleObject, target: &TupleObject) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(source.len() * target.len() + 1);
    let mut at = 0;
    offsets.push(0);
    for &a in &source.summands {
        for &b in &target.summands {
            at += cat.hom(a, b).dim();
            offsets.push(at);
        }
    }
    offsets
}

pub fn flat_dim(cat: &PathCategory, source: &TupleObject, target: &TupleObject) -> usize {
    *flat_offsets(cat, source, target).last().expect("offsets are nonempty")
}

/// All path coefficients of `f`, entry by entry in row-major order.
pub fn flatten(f: &MatMorphism) -> Vec<BigInt> {
    f.entries.iter().flat_map(|e| e.coeffs.iter().cloned()).collect()
}

/// Inverse of [`flatten`]; the result is reduced to canonical form.
pub fn unflatten(
    cat: &PathCategory,
    source: &TupleObject,
    target: &TupleObject,
    v: &[BigInt],
) -> Result<MatMorphism> {
    let offsets = flat_offsets(cat, source, target);
    if v.len() != *offsets.last().expect("offsets are nonempty") {
        return Err(Error::DimensionMismatch(format!(
            "{} coefficients for a morphism space of dimension {}",
            v.len(),
            offsets.last().expect("offsets are nonempty")
        )));
    }
    let mut entries = Vec::with_capacity(source.len() * target.len());
    let mut k = 0;
    for &a in &source.summands {
        for &b in &target.summands {
            entries.push(cat.lin_from_coeffs(a, b, v[offsets[k]..offsets[k + 1]].to_vec())?);
            k += 1;
        }
    }
    Ok(MatMorphism {
        source: source.clone(),
        target: target.clone(),
        entries,
    })
}

/// Integer matrix of the linear map `X |-> left * X * right` on unknowns
/// `X: left.target -> right.source`, in flattened path coordinates and
/// before reduction modulo relations. One row per basis element of the
/// unknown's morphism space.
pub fn sandwich_matrix(cat: &PathCategory, left: &MatMorphism, right: &MatMorphism) -> IntMatrix {
    let (p, q) = (left.target(), right.source());
    let (s, t) = (left.source(), right.target());
    let out_offsets = flat_offsets(cat, s, t);
    let ncols = *out_offsets.last().expect("offsets are nonempty");
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (ip, &pv) in p.summands.iter().enumerate() {
        for (iq, &qv) in q.summands.iter().enumerate() {
            for path in cat.hom(pv, qv).basis() {
                let mut row = vec![BigInt::zero(); ncols];
                for (is, &sv) in s.summands.iter().enumerate() {
                    let l = left.entry(is, ip);
                    if l.is_zero() {
                        continue;
                    }
                    let lbasis = cat.hom(sv, pv).basis();
                    for (it, &tv) in t.summands.iter().enumerate() {
                        let r = right.entry(iq, it);
                        if r.is_zero() {
                            continue;
                        }
                        let rbasis = cat.hom(qv, tv).basis();
                        let out = cat.hom(sv, tv);
                        let base = out_offsets[is * t.len() + it];
                        for (lc, lp) in l.coeffs.iter().zip(lbasis) {
                            if lc.is_zero() {
                                continue;
                            }
                            for (rc, rp) in r.coeffs.iter().zip(rbasis) {
                                if rc.is_zero() {
                                    continue;
                                }
                                let mut arrows = lp.arrows.clone();
                                arrows.extend_from_slice(&path.arrows);
                                arrows.extend_from_slice(&rp.arrows);
                                row[base + out.index_of_arrows(&arrows)] += lc * rc;
                            }
                        }
                    }
                }
                rows.push(row);
            }
        }
    }
    IntMatrix::from_rows(ncols, &rows).expect("rows have the flattened length")
}

/// Generators of the relation subgroup of the flattened morphism space
/// `source -> target` (block diagonal in the entries).
pub fn relation_rows(cat: &PathCategory, source: &TupleObject, target: &TupleObject) -> IntMatrix {
    let offsets = flat_offsets(cat, source, target);
    let ncols = *offsets.last().expect("offsets are nonempty");
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let mut k = 0;
    for &a in &source.summands {
        for &b in &target.summands {
            let basis = cat.hom(a, b).group().relation_basis();
            for r in 0..basis.rows() {
                let mut row = vec![BigInt::zero(); ncols];
                row[offsets[k]..offsets[k + 1]].clone_from_slice(basis.row(r));
                rows.push(row);
            }
            k += 1;
        }
    }
    IntMatrix::from_rows(ncols, &rows).expect("rows have the flattened length")
}

/// Solution `(sigma1, sigma2)` of `alpha = sigma1 * beta + gamma * sigma2`
/// for `alpha: a -> b`, `beta: d -> b`, `gamma: a -> c`, or `None` when the
/// equation has no solution. A returned pair has been checked.
pub fn decide_homotopy(
    cat: &PathCategory,
    alpha: &MatMorphism,
    beta: &MatMorphism,
    gamma: &MatMorphism,
) -> Result<Option<(MatMorphism, MatMorphism)>> {
    let (a, b) = (alpha.source(), alpha.target());
    if beta.target() != b || gamma.source() != a {
        return Err(Error::EndpointMismatch(format!(
            "homotopy equation for {} -> {} with beta into {} and gamma out of {}",
            a.format(cat),
            b.format(cat),
            beta.target().format(cat),
            gamma.source().format(cat)
        )));
    }
    let (d, c) = (beta.source(), gamma.target());
    let id_a = MatMorphism::identity(cat, a);
    let id_b = MatMorphism::identity(cat, b);
    let s1 = sandwich_matrix(cat, &id_a, beta);
    let s2 = sandwich_matrix(cat, gamma, &id_b);
    let (n1, n2) = (s1.rows(), s2.rows());
    let system = s1.vstack(&s2)?.vstack(&relation_rows(cat, a, b))?;
    let rhs = IntMatrix::row_vector(flatten(alpha));
    let Some(x) = solve_left(&system, &rhs)? else {
        return Ok(None);
    };
    let x = x.row(0);
    let sigma1 = unflatten(cat, a, d, &x[..n1])?;
    let sigma2 = unflatten(cat, c, b, &x[n1..n1 + n2])?;
    let check = sigma1.compose(cat, beta)?.add(cat, &gamma.compose(cat, &sigma2)?)?;
    if &check != alpha {
        return Err(Error::InvalidWitness(
            "homotopy solver produced a non-solution".into(),
        ));
    }
    Ok(Some((sigma1, sigma2)))
}

/// Whether `alpha = sigma1 * beta + gamma * sigma2` holds.
pub fn check_homotopy(
    cat: &PathCategory,
    alpha: &MatMorphism,
    beta: &MatMorphism,
    gamma: &MatMorphism,
    sigma1: &MatMorphism,
    sigma2: &MatMorphism,
) -> Result<bool> {
    let rhs = sigma1.compose(cat, beta)?.add(cat, &gamma.compose(cat, sigma2)?)?;
    rhs.check_parallel(cat, alpha)?;
    Ok(&rhs == alpha)
}

/// `n * id` as a 1x1 scalar helper on a single vertex.
pub fn scalar(cat: &PathCategory, v: VertexId, n: i64) -> MatMorphism {
    MatMorphism::single(cat.scale_lin(&cat.lin_identity(v), &BigInt::from(n)))
}

/// `id` on a single vertex as a 1x1 matrix.
pub fn unit(cat: &PathCategory, v: VertexId) -> MatMorphism {
    MatMorphism::single(cat.lin_identity(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quivercat::{Quiver, Relation};
    use num_traits::One;

    fn snake() -> PathCategory {
        let q = Quiver::new(
            &["a", "b", "c", "d"],
            &[("alpha", "a", "b"), ("beta", "b", "c"), ("gamma", "c", "d")],
        )
        .unwrap();
        let p = q.path_from_labels(&["alpha", "beta", "gamma"]).unwrap();
        let r = Relation::new(vec![(BigInt::one(), p)]).unwrap();
        PathCategory::new("snake", q, vec![r]).unwrap()
    }

    fn arrow(cat: &PathCategory, l: &str) -> MatMorphism {
        MatMorphism::single(cat.lin_from_path(&cat.arrow_path(l).unwrap()))
    }

    #[test]
    fn arithmetic() {
        let cat = snake();
        let (al, be) = (arrow(&cat, "alpha"), arrow(&cat, "beta"));
        let ab = al.compose(&cat, &be).unwrap();
        assert_eq!(ab.format(&cat), "[[alpha*beta]]");
        let id = MatMorphism::identity(&cat, al.source());
        assert_eq!(id.compose(&cat, &al).unwrap(), al);
        assert!(al.add(&cat, &al.negate(&cat)).unwrap().is_zero());
        assert!(be.compose(&cat, &al).is_err());
    }

    #[test]
    fn sums_and_blocks() {
        let cat = snake();
        let (al, be) = (arrow(&cat, "alpha"), arrow(&cat, "beta"));
        let s = al.direct_sum(&cat, &be);
        assert_eq!(s.format(&cat), "[[alpha, 0], [0, beta]]");
        let ia = MatMorphism::identity(&cat, &TupleObject::single(0));
        let ib = MatMorphism::identity(&cat, &TupleObject::single(1));
        let iab = MatMorphism::identity(&cat, &TupleObject::new(vec![0, 1]));
        assert_eq!(ia.direct_sum(&cat, &ib), iab);
        let z = MatMorphism::identity(&cat, &TupleObject::zero());
        assert_eq!(al.direct_sum(&cat, &z), al);
        assert_eq!(s.submatrix(1..2, 1..2), be);
    }

    #[test]
    fn empty_grids() {
        let cat = snake();
        let zero = TupleObject::zero();
        let a = TupleObject::single(0);
        let f = MatMorphism::zero(&cat, &a, &zero);
        let g = MatMorphism::zero(&cat, &zero, &a);
        let fg = f.compose(&cat, &g).unwrap();
        assert!(fg.is_zero());
        assert_eq!(fg.nrows(), 1);
        assert_eq!(g.compose(&cat, &f).unwrap().nrows(), 0);
    }

    #[test]
    fn homotopy_examples() {
        let cat = snake();
        let al = arrow(&cat, "alpha");
        let (a, b) = (al.source().clone(), al.target().clone());
        let zero = TupleObject::zero();
        let id_b = MatMorphism::identity(&cat, &b);
        let to_zero = MatMorphism::zero(&cat, &a, &zero);
        let (s1, s2) = decide_homotopy(&cat, &al, &id_b, &to_zero).unwrap().unwrap();
        assert_eq!(s1, al);
        assert_eq!(s2.nrows(), 0);
        let from_zero = MatMorphism::zero(&cat, &zero, &b);
        assert!(decide_homotopy(&cat, &al, &from_zero, &to_zero).unwrap().is_none());
        let z = MatMorphism::zero(&cat, &a, &b);
        let (s1, s2) = decide_homotopy(&cat, &z, &from_zero, &to_zero).unwrap().unwrap();
        assert!(s1.is_zero() && s2.is_zero());
    }

    #[test]
    fn homotopy_through_relation() {
        // alpha*beta*gamma = 0 makes alpha*beta*gamma trivially solvable and
        // alpha*beta factor through beta but not through gamma's source.
        let cat = snake();
        let (al, be) = (arrow(&cat, "alpha"), arrow(&cat, "beta"));
        let ab = al.compose(&cat, &be).unwrap();
        let zero = TupleObject::zero();
        let to_zero = MatMorphism::zero(&cat, ab.source(), &zero);
        let (s1, _) = decide_homotopy(&cat, &ab, &be, &to_zero).unwrap().unwrap();
        assert_eq!(s1, al);
        let (s1, s2) = decide_homotopy(&cat, &ab, &MatMorphism::zero(&cat, &zero, ab.target()), &al)
            .unwrap()
            .unwrap();
        assert_eq!(s1.nrows(), 1);
        assert_eq!(s2, be);
    }

    #[test]
    fn two_torsion_is_not_zero() {
        let q = Quiver::new(&["a", "b"], &[("x", "a", "b")]).unwrap();
        let x = q.path_from_labels(&["x"]).unwrap();
        let r = Relation::new(vec![(BigInt::from(2), x.clone())]).unwrap();
        let cat = PathCategory::new("z2", q, vec![r]).unwrap();
        let f = MatMorphism::single(cat.lin_from_path(&x));
        let zero = TupleObject::zero();
        let beta = MatMorphism::zero(&cat, &zero, f.target());
        let gamma = MatMorphism::zero(&cat, f.source(), &zero);
        assert!(decide_homotopy(&cat, &f, &beta, &gamma).unwrap().is_none());
        let two_f = f.scale(&cat, &BigInt::from(2));
        assert!(two_f.is_zero());
    }

    #[test]
    fn opposite_transposes() {
        let cat = snake();
        let op = cat.opposite();
        let s = arrow(&cat, "alpha").direct_sum(&cat, &arrow(&cat, "beta"));
        let t = s.to_opposite(&cat, &op);
        assert_eq!(t.source(), s.target());
        assert_eq!(t.to_opposite(&op, &cat), s);
    }

    #[test]
    fn flatten_round_trip() {
        let cat = snake();
        let s = arrow(&cat, "alpha").direct_sum(&cat, &arrow(&cat, "beta"));
        let v = flatten(&s);
        assert_eq!(v.len(), flat_dim(&cat, s.source(), s.target()));
        assert_eq!(unflatten(&cat, s.source(), s.target(), &v).unwrap(), s);
    }
}
