use num_bigint::BigInt;
use num_traits::Zero;

use super::hermite::{hnf, lattice_basis, left_kernel, reduce_against, solve_left};
use super::smith::{snf, SmithInvariants};
use super::IntMatrix;
use crate::error::{Error, Result};

/// Finitely presented abelian group `Z^ngens / rowspan(relations)`.
#[derive(Clone, Debug)]
pub struct FpAbGroup {
    ngens: usize,
    relations: IntMatrix,
    reduced: IntMatrix,
    pivots: Vec<usize>,
}

impl PartialEq for FpAbGroup {
    fn eq(&self, other: &Self) -> bool {
        self.ngens == other.ngens && self.reduced == other.reduced
    }
}

impl Eq for FpAbGroup {}

impl FpAbGroup {
    pub fn new(ngens: usize, relations: IntMatrix) -> Result<Self> {
        if relations.cols() != ngens {
            return Err(Error::DimensionMismatch(format!(
                "relation matrix has {} columns for {ngens} generators",
                relations.cols()
            )));
        }
        let form = hnf(&relations);
        let reduced = form.basis();
        Ok(Self {
            ngens,
            relations,
            reduced,
            pivots: form.pivots,
        })
    }

    pub fn free(ngens: usize) -> Self {
        Self::new(ngens, IntMatrix::zeros(0, ngens)).expect("shape is consistent")
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// HNF basis of the relation lattice.
    pub fn relation_basis(&self) -> &IntMatrix {
        &self.reduced
    }

    fn check_len(&self, v: &[BigInt]) -> Result<()> {
        if v.len() != self.ngens {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in a group with {} generators",
                v.len(),
                self.ngens
            )));
        }
        Ok(())
    }

    /// Unique coset representative: `v` reduced against the HNF of the
    /// relations, so every pivot coordinate lands in `[0, pivot)`.
    pub fn canonical_rep(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        self.check_len(v)?;
        Ok(reduce_against(&self.reduced, &self.pivots, v).0)
    }

    pub(crate) fn canonical_in_place(&self, v: &mut Vec<BigInt>) {
        if !self.pivots.is_empty() {
            *v = reduce_against(&self.reduced, &self.pivots, v).0;
        }
    }

    /// Solution `x` of `x * relations == v` if `v` represents zero.
    pub fn membership(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        self.check_len(v)?;
        let b = IntMatrix::row_vector(v.to_vec());
        Ok(solve_left(&self.relations, &b)?.map(|x| x.row(0).to_vec()))
    }

    pub fn is_zero_element(&self, v: &[BigInt]) -> Result<bool> {
        Ok(self.canonical_rep(v)?.iter().all(Zero::is_zero))
    }

    pub fn elements_equal(&self, u: &[BigInt], v: &[BigInt]) -> Result<bool> {
        Ok(self.canonical_rep(u)? == self.canonical_rep(v)?)
    }

    pub fn invariants(&self) -> SmithInvariants {
        snf(&self.relations)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants().is_trivial()
    }

    pub fn direct_sum(&self, other: &FpAbGroup) -> FpAbGroup {
        let n = self.ngens + other.ngens;
        let left = self
            .reduced
            .hstack(&IntMatrix::zeros(self.reduced.rows(), other.ngens))
            .expect("rows agree");
        let right = IntMatrix::zeros(other.reduced.rows(), self.ngens)
            .hstack(&other.reduced)
            .expect("rows agree");
        FpAbGroup::new(n, left.vstack(&right).expect("cols agree")).expect("shape is consistent")
    }
}

/// `N / (N ∩ D)` for lattices in a common `Z^n` given by spanning rows.
///
/// Generators are the HNF basis rows of `N`; the returned matrix holds them.
pub fn subquotient(numerator: &IntMatrix, denominator: &IntMatrix) -> Result<(FpAbGroup, IntMatrix)> {
    if numerator.cols() != denominator.cols() {
        return Err(Error::DimensionMismatch(
            "subquotient of lattices in different ambient spaces".into(),
        ));
    }
    let nb = lattice_basis(numerator);
    let k = nb.rows();
    let stacked = nb.vstack(denominator)?;
    let ker = left_kernel(&stacked);
    let rels = ker.select_cols(0..k);
    Ok((FpAbGroup::new(k, rels)?, nb))
}

/// Whether two row sets span the same lattice.
pub fn same_lattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.cols() == b.cols() && lattice_basis(a) == lattice_basis(b)
}

/// Homomorphism between finitely presented abelian groups, given by the
/// images of the source generators (rows of `matrix`).
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub source: FpAbGroup,
    pub target: FpAbGroup,
    pub matrix: IntMatrix,
}

impl GroupHom {
    /// Checks shapes and that source relations land in target relations.
    pub fn new(source: FpAbGroup, target: FpAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != source.ngens() || matrix.cols() != target.ngens() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix for a map Z^{} -> Z^{}",
                matrix.rows(),
                matrix.cols(),
                source.ngens(),
                target.ngens()
            )));
        }
        let images = &source.relations * &matrix;
        for i in 0..images.rows() {
            if !target.is_zero_element(images.row(i))? {
                return Err(Error::IllDefined(
                    "group homomorphism does not respect relations".into(),
                ));
            }
        }
        Ok(Self {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(g: &FpAbGroup) -> Self {
        Self {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(g.ngens()),
        }
    }

    pub fn compose(&self, next: &GroupHom) -> Result<GroupHom> {
        if self.target != next.source {
            return Err(Error::EndpointMismatch("composing group maps".into()));
        }
        Ok(GroupHom {
            source: self.source.clone(),
            target: next.target.clone(),
            matrix: self.matrix.checked_mul(&next.matrix)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        (0..self.matrix.rows()).all(|i| {
            self.target
                .is_zero_element(self.matrix.row(i))
                .expect("row length equals target generators")
        })
    }

    /// Equality as maps on cosets.
    pub fn equals(&self, other: &GroupHom) -> bool {
        self.source == other.source
            && self.target == other.target
            && (0..self.matrix.rows()).all(|i| {
                self.target
                    .elements_equal(self.matrix.row(i), other.matrix.row(i))
                    .expect("row length equals target generators")
            })
    }

    /// Lattice of source coordinate vectors mapped to zero (contains the
    /// source relations).
    pub fn kernel_lattice(&self) -> IntMatrix {
        let n = self.source.ngens();
        let stacked = self
            .matrix
            .vstack(self.target.relation_basis())
            .expect("columns agree");
        lattice_basis(&left_kernel(&stacked).select_cols(0..n))
    }

    /// Lattice `im + relations` in the target coordinates.
    pub fn image_lattice(&self) -> IntMatrix {
        lattice_basis(
            &self
                .matrix
                .vstack(self.target.relation_basis())
                .expect("columns agree"),
        )
    }

    pub fn kernel(&self) -> FpAbGroup {
        subquotient(&self.kernel_lattice(), self.source.relation_basis())
            .expect("same ambient space")
            .0
    }

    pub fn cokernel(&self) -> FpAbGroup {
        FpAbGroup::new(
            self.target.ngens(),
            self.target
                .relation_basis()
                .vstack(&self.matrix)
                .expect("columns agree"),
        )
        .expect("shape is consistent")
    }

    pub fn image(&self) -> FpAbGroup {
        FpAbGroup::new(self.source.ngens(), self.kernel_lattice()).expect("shape is consistent")
    }

    pub fn is_injective(&self) -> bool {
        same_lattice(&self.kernel_lattice(), self.source.relation_basis())
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().is_trivial()
    }
}

/// Homology `ker(g) / (im(f) ∩ ker(g))` of a composable pair of group maps.
pub fn homology_of(f: &GroupHom, g: &GroupHom) -> Result<FpAbGroup> {
    if f.target != g.source {
        return Err(Error::EndpointMismatch("homology of non-composable maps".into()));
    }
    Ok(subquotient(&g.kernel_lattice(), &f.image_lattice())?.0)
}

/// Exactness of `A -f-> B -g-> C` at `B`: `ker g == im f` (requires `f g = 0`).
pub fn is_exact_at(f: &GroupHom, g: &GroupHom) -> Result<bool> {
    if f.target != g.source {
        return Err(Error::EndpointMismatch("exactness of non-composable maps".into()));
    }
    Ok(same_lattice(&g.kernel_lattice(), &f.image_lattice()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn canonical_reps() {
        let free = FpAbGroup::free(3);
        assert_eq!(free.canonical_rep(&ints(&[4, -1, 7])).unwrap(), ints(&[4, -1, 7]));
        let z2 = FpAbGroup::new(1, IntMatrix::from_i64(&[&[2]])).unwrap();
        assert_eq!(z2.canonical_rep(&ints(&[3])).unwrap(), ints(&[1]));
        assert_eq!(z2.canonical_rep(&ints(&[-3])).unwrap(), ints(&[1]));
        let g = FpAbGroup::new(2, IntMatrix::from_i64(&[&[2, 4]])).unwrap();
        assert_eq!(g.canonical_rep(&ints(&[2, 4])).unwrap(), ints(&[0, 0]));
        assert_eq!(g.membership(&ints(&[2, 4])).unwrap(), Some(ints(&[1])));
        assert!(g.canonical_rep(&ints(&[1])).is_err());
    }

    #[test]
    fn multiplication_by_two_on_z() {
        let z = FpAbGroup::free(1);
        let two = GroupHom::new(z.clone(), z.clone(), IntMatrix::from_i64(&[&[2]])).unwrap();
        assert!(two.kernel().is_trivial());
        assert!(two.is_injective());
        assert_eq!(two.cokernel().invariants().torsion(), ints(&[2]));
        assert!(!two.is_surjective());
    }

    #[test]
    fn ill_defined_map_rejected() {
        let z2 = FpAbGroup::new(1, IntMatrix::from_i64(&[&[2]])).unwrap();
        let z = FpAbGroup::free(1);
        assert!(GroupHom::new(z2, z, IntMatrix::from_i64(&[&[1]])).is_err());
    }

    #[test]
    fn exactness_of_short_sequence() {
        // 0 -> Z -2-> Z -> Z/2 -> 0
        let z = FpAbGroup::free(1);
        let z2 = FpAbGroup::new(1, IntMatrix::from_i64(&[&[2]])).unwrap();
        let f = GroupHom::new(z.clone(), z.clone(), IntMatrix::from_i64(&[&[2]])).unwrap();
        let g = GroupHom::new(z.clone(), z2, IntMatrix::from_i64(&[&[1]])).unwrap();
        assert!(is_exact_at(&f, &g).unwrap());
        assert!(homology_of(&f, &g).unwrap().is_trivial());
        let id = GroupHom::identity(&z);
        assert!(!is_exact_at(&f, &id).unwrap());
    }
}
