//! `Hom_Adel(X, Y)` as a finitely presented abelian group.
//!
//! In flattened path coordinates of `Hom(x, y)` (the middle objects), the
//! well-defined data form the lattice `W` of those `alpha` admitting
//! witnesses `omega`, `psi`; the null-homotopic data form the lattice `N`
//! spanned by `sigma1 * rho_y + gamma_x * sigma2` and the relations. The
//! Hom-set is `W / N`.

use num_bigint::BigInt;

use crate::addclosure::{flat_dim, flatten, relation_rows, sandwich_matrix, unflatten, MatMorphism};
use crate::adelman::{Adel, AdelMorphism, AdelObject};
use crate::error::{Error, Result};
use crate::intlinalg::{lattice_basis, left_kernel, solve_left, subquotient, FpAbGroup, IntMatrix, SmithInvariants};

/// `Hom(X, Y)` with one well-defined morphism per group generator.
#[derive(Clone, Debug)]
pub struct HomGroupPresentation {
    pub source: AdelObject,
    pub target: AdelObject,
    pub group: FpAbGroup,
    /// Generator data as rows, in flattened coordinates of `Hom(x, y)`.
    pub basis: IntMatrix,
    pub generators: Vec<AdelMorphism>,
}

impl HomGroupPresentation {
    pub fn invariants(&self) -> SmithInvariants {
        self.group.invariants()
    }

    /// Canonical coordinates of `f` in the group.
    pub fn coordinates(&self, f: &AdelMorphism) -> Result<Vec<BigInt>> {
        if f.source() != &self.source || f.target() != &self.target {
            return Err(Error::EndpointMismatch("morphism outside this Hom-set".into()));
        }
        let v = IntMatrix::row_vector(flatten(f.datum()));
        let x = solve_left(&self.basis, &v)?.ok_or_else(|| {
            Error::IllDefined("datum outside the lattice of well-defined data".into())
        })?;
        self.group.canonical_rep(x.row(0))
    }

    /// The morphism with the given coordinates.
    pub fn element(&self, adel: &Adel, coords: &[BigInt]) -> Result<AdelMorphism> {
        if coords.len() != self.generators.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for {} generators",
                coords.len(),
                self.generators.len()
            )));
        }
        let data = self.basis.left_apply(coords);
        let datum = unflatten(adel.cat(), self.source.mid(), self.target.mid(), &data)?;
        adel.morphism(&self.source, &self.target, &datum)
    }
}

fn zero_block(rows: usize, cols: usize) -> IntMatrix {
    IntMatrix::zeros(rows, cols)
}

fn row_block(parts: &[&IntMatrix]) -> IntMatrix {
    parts[1..]
        .iter()
        .fold(parts[0].clone(), |acc, m| acc.hstack(m).expect("row counts agree"))
}

fn stack(parts: &[IntMatrix]) -> IntMatrix {
    parts[1..]
        .iter()
        .fold(parts[0].clone(), |acc, m| acc.vstack(m).expect("column counts agree"))
}

/// Lattice of well-defined data `alpha: x -> y` (contains the relations).
pub fn well_defined_lattice(adel: &Adel, x: &AdelObject, y: &AdelObject) -> IntMatrix {
    let cat = adel.cat();
    let id = |t| MatMorphism::identity(cat, t);
    let neg = |m: IntMatrix| m.scale(&BigInt::from(-1));
    // Columns: rho_x * alpha - omega * rho_y in Hom(r_x, y), then
    // gamma_x * psi - alpha * gamma_y in Hom(x, c_y).
    let e1 = flat_dim(cat, x.r(), y.mid());
    let e2 = flat_dim(cat, x.mid(), y.c());
    let alpha_rows = row_block(&[
        &sandwich_matrix(cat, x.rel(), &id(y.mid())),
        &neg(sandwich_matrix(cat, &id(x.mid()), y.corel())),
    ]);
    let n_alpha = alpha_rows.rows();
    let omega = neg(sandwich_matrix(cat, &id(x.r()), y.rel()));
    let omega_rows = row_block(&[&omega, &zero_block(omega.rows(), e2)]);
    let psi = sandwich_matrix(cat, x.corel(), &id(y.c()));
    let psi_rows = row_block(&[&zero_block(psi.rows(), e1), &psi]);
    let r1 = relation_rows(cat, x.r(), y.mid());
    let r2 = relation_rows(cat, x.mid(), y.c());
    let aux1 = row_block(&[&r1, &zero_block(r1.rows(), e2)]);
    let aux2 = row_block(&[&zero_block(r2.rows(), e1), &r2]);
    let system = stack(&[alpha_rows, omega_rows, psi_rows, aux1, aux2]);
    let ker = left_kernel(&system);
    lattice_basis(&ker.select_cols(0..n_alpha))
}

/// Lattice of null-homotopic data `sigma1 * rho_y + gamma_x * sigma2`
/// together with the relations of `Hom(x, y)`.
pub fn null_homotopy_lattice(adel: &Adel, x: &AdelObject, y: &AdelObject) -> IntMatrix {
    let cat = adel.cat();
    let s1 = sandwich_matrix(cat, &MatMorphism::identity(cat, x.mid()), y.rel());
    let s2 = sandwich_matrix(cat, x.corel(), &MatMorphism::identity(cat, y.mid()));
    let rel = relation_rows(cat, x.mid(), y.mid());
    lattice_basis(&stack(&[s1, s2, rel]))
}

/// Presents `Hom_Adel(x, y)`.
pub fn hom_group(adel: &Adel, x: &AdelObject, y: &AdelObject) -> Result<HomGroupPresentation> {
    let w = well_defined_lattice(adel, x, y);
    let n = null_homotopy_lattice(adel, x, y);
    let (group, basis) = subquotient(&w, &n)?;
    let generators = (0..basis.rows())
        .map(|i| {
            let datum = unflatten(adel.cat(), x.mid(), y.mid(), basis.row(i))?;
            adel.morphism(x, y, &datum)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomGroupPresentation {
        source: x.clone(),
        target: y.clone(),
        group,
        basis,
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::addclosure::TupleObject;
    use crate::catalog;

    fn arrow(adel: &Adel, l: &str) -> MatMorphism {
        let cat = adel.cat();
        MatMorphism::single(cat.lin_from_path(&cat.arrow_path(l).unwrap()))
    }

    #[test]
    fn emb_is_full() {
        for cat in [catalog::snake(), catalog::two_torsion_arrow()] {
            let adel = Adel::new(cat);
            let n = adel.cat().num_vertices();
            for a in 0..n {
                for b in 0..n {
                    let x = adel.emb_object(&TupleObject::single(a));
                    let y = adel.emb_object(&TupleObject::single(b));
                    let h = hom_group(&adel, &x, &y).unwrap();
                    assert_eq!(h.invariants(), adel.cat().hom(a, b).group().invariants());
                }
            }
        }
    }

    #[test]
    fn dowker_hom_is_z_generated_by_beta() {
        let adel = Adel::new(catalog::snake());
        let (al, be, ga) = (arrow(&adel, "alpha"), arrow(&adel, "beta"), arrow(&adel, "gamma"));
        let d = adel.connecting_homomorphism(&al, &be, &ga).unwrap();
        let h = hom_group(&adel, d.source(), d.target()).unwrap();
        assert_eq!(h.invariants().describe(), "Z");
        let c = h.coordinates(&d).unwrap();
        assert!(c == vec![BigInt::from(1)] || c == vec![BigInt::from(-1)]);
        let g = &h.generators[0];
        assert!(adel.is_equal(g, &d).unwrap().is_some() || adel.is_equal(g, &adel.negate(&d)).unwrap().is_some());
        let twice = adel.add(&d, &d).unwrap();
        assert_eq!(h.coordinates(&twice).unwrap(), vec![&c[0] * 2]);
    }

    #[test]
    fn hom_into_zero_is_trivial() {
        let adel = Adel::new(catalog::snake());
        let al = arrow(&adel, "alpha");
        let x = adel.cokernel(&adel.emb(&al)).unwrap().object;
        let zero = adel.emb_object(&TupleObject::zero());
        assert!(hom_group(&adel, &x, &zero).unwrap().group.is_trivial());
    }

    #[test]
    fn zero_coset_iff_zero_morphism() {
        let adel = Adel::new(catalog::snake());
        let al = arrow(&adel, "alpha");
        let b = TupleObject::single(1);
        let coka = AdelObject::new(al.clone(), MatMorphism::zero(adel.cat(), &b, &TupleObject::zero())).unwrap();
        let src = adel.emb_object(&TupleObject::single(0));
        let h = hom_group(&adel, &src, &coka).unwrap();
        assert!(h.group.is_trivial());
        let f = adel.morphism(&src, &coka, &al).unwrap();
        assert!(h.group.is_zero_element(&h.coordinates(&f).unwrap()).unwrap());
        assert!(adel.is_zero_morphism(&f).unwrap().is_some());
    }
}
