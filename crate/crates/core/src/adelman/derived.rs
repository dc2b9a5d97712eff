//! Decisions and constructions derived from kernels and cokernels:
//! predicates, epis as cokernels of their kernels, (co)lifts, homology,
//! exactness and the connecting morphism.

use super::{Adel, AdelMorphism, AdelObject, Cokernel, Kernel, WitnessPair};
use crate::addclosure::MatMorphism;
use crate::error::{Error, Result};

/// The data identifying an epi `eps: A -> B` with the cokernel projection
/// of its kernel.
#[derive(Clone, Debug)]
pub struct EpiComparison {
    pub kernel: Kernel,
    pub cokernel_of_kernel: Cokernel,
    /// Certificate that the cokernel projection of `eps` vanishes.
    pub epi_witness: WitnessPair,
    /// `B -> coker(ker eps)`.
    pub comparison: AdelMorphism,
    /// Certificate for `eps * comparison = proj(ker eps)`.
    pub triangle_witness: WitnessPair,
}

/// Homology of `X --phi--> Y --psi--> Z`, realized as the image of
/// `ker(psi) -> Y -> coker(phi)`.
#[derive(Clone, Debug)]
pub struct Homology {
    pub composite: AdelMorphism,
    pub object: AdelObject,
    /// `H -> coker(phi)`.
    pub embedding: AdelMorphism,
    /// `ker(psi) -> H`.
    pub onto: AdelMorphism,
}

/// Outcome of an exactness test at the middle of `phi, psi`.
#[derive(Clone, Debug)]
pub struct Exactness {
    pub composite_witness: WitnessPair,
    /// Certificate that `ker(psi) -> coker(phi)` vanishes, if it does.
    pub homology_witness: Option<WitnessPair>,
}

impl Exactness {
    pub fn is_exact(&self) -> bool {
        self.homology_witness.is_some()
    }
}

impl Adel {
    /// `X = 0` iff `id_X = 0`.
    pub fn is_zero_object(&self, x: &AdelObject) -> Result<bool> {
        Ok(self.is_zero_morphism(&self.identity(x))?.is_some())
    }

    pub fn is_mono(&self, f: &AdelMorphism) -> Result<bool> {
        self.is_zero_object(&self.kernel(f)?.object)
    }

    pub fn is_epi(&self, f: &AdelMorphism) -> Result<bool> {
        self.is_zero_object(&self.cokernel(f)?.object)
    }

    pub fn is_iso(&self, f: &AdelMorphism) -> Result<bool> {
        Ok(self.is_mono(f)? && self.is_epi(f)?)
    }

    /// For monos into a common object: `i1 <= i2` iff `i1 * coker(i2) = 0`.
    pub fn subobject_leq(&self, i1: &AdelMorphism, i2: &AdelMorphism) -> Result<bool> {
        if i1.target() != i2.target() {
            return Err(Error::EndpointMismatch(
                "subobjects of different objects".into(),
            ));
        }
        for i in [i1, i2] {
            if !self.is_mono(i)? {
                return Err(Error::NotMono(self.format_morphism(i)));
            }
        }
        let p = self.cokernel(i2)?.proj;
        Ok(self.is_zero_morphism(&self.compose(i1, &p)?)?.is_some())
    }

    /// Builds the comparison `B -> coker(ker eps)` from a certificate that
    /// the cokernel projection of `eps` vanishes.
    pub fn epi_comparison(&self, eps: &AdelMorphism) -> Result<EpiComparison> {
        let (a, b) = (eps.source(), eps.target());
        let alpha = eps.datum();
        let proj = self.cokernel(eps)?.proj;
        let epi_witness = self
            .is_zero_morphism(&proj)?
            .ok_or_else(|| Error::NotEpi(self.format_morphism(eps)))?;
        let (nr, nb) = (b.r().len(), b.mid().len());
        let (ncol_s1, ncol_s2) = (epi_witness.sigma1.ncols(), epi_witness.sigma2.ncols());
        let s7 = epi_witness.sigma1.submatrix(0..nb, 0..nr);
        let s8 = epi_witness.sigma1.submatrix(0..nb, nr..ncol_s1);
        let s5 = epi_witness.sigma2.submatrix(0..b.c().len(), 0..nb);
        let s6 = epi_witness.sigma2.submatrix(0..b.c().len(), nb..ncol_s2);

        let kernel = self.kernel(eps)?;
        let cokernel_of_kernel = self.cokernel(&kernel.embedding)?;
        let target = &cokernel_of_kernel.object;

        let g_s6 = self.neg(&self.mul(b.corel(), &s6)?);
        let g_s5 = self.neg(&self.mul(b.corel(), &s5)?);
        let datum = self.blocks(&[vec![&s8, &g_s6, &g_s5]])?;
        let r_s8 = self.mul(b.rel(), &s8)?;
        let r_s7 = self.minus(&self.mul(b.rel(), &s7)?, &self.id(b.r()))?;
        let omega = self.blocks(&[vec![&self.zero(b.r(), a.r()), &r_s8, &r_s7]])?;
        let neg_s6 = self.neg(&s6);
        let psi = self.blocks(&[vec![&neg_s6, &neg_s6, &self.neg(&s5)]])?;
        let comparison = self.morphism_with_witnesses(b, target, datum, omega, psi)?;

        let a_s8 = self.minus(&self.mul(alpha, &s8)?, &self.id(a.mid()))?;
        let a_s7 = self.mul(alpha, &s7)?;
        let triangle_witness = WitnessPair {
            sigma1: self.blocks(&[vec![&self.zero(a.mid(), a.r()), &a_s8, &a_s7]])?,
            sigma2: self.blocks(&[vec![
                &self.zero(a.c(), a.mid()),
                &self.id(a.c()),
                &self.zero(a.c(), b.mid()),
            ]])?,
        };
        let diff = self.sub(&self.compose(eps, &comparison)?, &cokernel_of_kernel.proj)?;
        if !self.check_zero_witness(&diff, &triangle_witness)? {
            return Err(Error::InvalidWitness(
                "epi comparison triangle does not commute".into(),
            ));
        }
        Ok(EpiComparison {
            kernel,
            cokernel_of_kernel,
            epi_witness,
            comparison,
            triangle_witness,
        })
    }

    /// The unique `B -> T` whose precomposite with the epi `eps` is `tau`.
    pub fn colift_along_epi(&self, eps: &AdelMorphism, tau: &AdelMorphism) -> Result<AdelMorphism> {
        if eps.source() != tau.source() {
            return Err(Error::EndpointMismatch("epi and map have different sources".into()));
        }
        let cmp = self.epi_comparison(eps)?;
        let wp = self.certify_zero_composite(&cmp.kernel.embedding, tau)?;
        let colift = self.cokernel_colift(&cmp.kernel.embedding, tau, &wp)?;
        let out = self.compose(&cmp.comparison, &colift)?;
        if self.is_equal(&self.compose(eps, &out)?, tau)?.is_none() {
            return Err(Error::InvalidWitness("colift does not recover the map".into()));
        }
        Ok(out)
    }

    /// The unique `T -> K` whose composite with the mono `iota` is `tau`,
    /// obtained by dualizing [`Adel::colift_along_epi`].
    pub fn lift_along_mono(&self, iota: &AdelMorphism, tau: &AdelMorphism) -> Result<AdelMorphism> {
        if iota.target() != tau.target() {
            return Err(Error::EndpointMismatch("mono and map have different targets".into()));
        }
        let dual = self.dual();
        let colift = dual
            .colift_along_epi(&self.dualize_morphism(iota), &self.dualize_morphism(tau))
            .map_err(|e| match e {
                Error::NotEpi(_) => Error::NotMono(self.format_morphism(iota)),
                other => other,
            })?;
        let out = dual.dualize_morphism(&colift);
        if self.is_equal(&self.compose(&out, iota)?, tau)?.is_none() {
            return Err(Error::InvalidWitness("lift does not recover the map".into()));
        }
        Ok(out)
    }

    /// Homology at `Y` of `X --phi--> Y --psi--> Z`; `phi * psi = 0` is not required.
    pub fn homology(&self, phi: &AdelMorphism, psi: &AdelMorphism) -> Result<Homology> {
        if phi.target() != psi.source() {
            return Err(Error::EndpointMismatch("homology of non-composable morphisms".into()));
        }
        let emb = self.kernel(psi)?.embedding;
        let proj = self.cokernel(phi)?.proj;
        let composite = self.compose(&emb, &proj)?;
        let coker = self.cokernel(&composite)?;
        let image = self.kernel(&coker.proj)?;
        let onto = self.kernel_lift(&coker.proj, &composite, &coker.zero_witness)?;
        Ok(Homology {
            composite,
            object: image.object,
            embedding: image.embedding,
            onto,
        })
    }

    /// Lifts `f: O -> coker(phi)` into the homology object `h` of
    /// `phi, psi`, provided `f` lands in the image. An iso result exhibits
    /// `O` as that homology.
    pub fn homology_comparison(&self, h: &Homology, f: &AdelMorphism) -> Result<AdelMorphism> {
        let q = self.cokernel(&h.composite)?.proj;
        let wp = self.certify_zero_composite(f, &q)?;
        self.kernel_lift(&q, f, &wp)
    }

    /// Exactness test; fails with [`Error::NonZeroComposite`] unless
    /// `phi * psi = 0` is certified.
    pub fn exactness(&self, phi: &AdelMorphism, psi: &AdelMorphism) -> Result<Exactness> {
        let composite_witness = self.certify_zero_composite(phi, psi)?;
        let emb = self.kernel(psi)?.embedding;
        let proj = self.cokernel(phi)?.proj;
        let homology_witness = self.is_zero_morphism(&self.compose(&emb, &proj)?)?;
        Ok(Exactness {
            composite_witness,
            homology_witness,
        })
    }

    pub fn is_exact(&self, phi: &AdelMorphism, psi: &AdelMorphism) -> Result<bool> {
        Ok(self.exactness(phi, psi)?.is_exact())
    }

    /// `[beta]: (a --alpha--> b --beta*gamma--> d) -> (a --alpha*beta--> c --gamma--> d)`
    /// for `alpha * beta * gamma = 0`.
    pub fn connecting_homomorphism(
        &self,
        alpha: &MatMorphism,
        beta: &MatMorphism,
        gamma: &MatMorphism,
    ) -> Result<AdelMorphism> {
        let ab = self.mul(alpha, beta)?;
        let bg = self.mul(beta, gamma)?;
        if !self.mul(&ab, gamma)?.is_zero() {
            return Err(Error::NonZeroComposite(format!(
                "{} * {} * {} is not zero",
                alpha.format(self.cat()),
                beta.format(self.cat()),
                gamma.format(self.cat())
            )));
        }
        let source = AdelObject::new(alpha.clone(), bg)?;
        let target = AdelObject::new(ab, gamma.clone())?;
        self.morphism_with_witnesses(
            &source,
            &target,
            beta.clone(),
            self.id(alpha.source()),
            self.id(gamma.target()),
        )
    }
}
