//! Cokernels, kernels, their universal maps, and dualization.

use super::{Adel, AdelMorphism, AdelObject, WitnessPair};
use crate::error::{Error, Result};

/// Cokernel object, its projection `p`, and a certificate for `phi * p = 0`.
#[derive(Clone, Debug)]
pub struct Cokernel {
    pub object: AdelObject,
    pub proj: AdelMorphism,
    pub zero_witness: WitnessPair,
}

/// Kernel object, its embedding `e`, and a certificate for `e * phi = 0`.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub object: AdelObject,
    pub embedding: AdelMorphism,
    pub zero_witness: WitnessPair,
}

impl Adel {
    /// For `phi: A -> B` with datum `alpha` the cokernel is
    /// `(r_b + a --[[rho_b, 0], [alpha, gamma_a]]--> b + c_a --[[gamma_b, 0], [0, 1]]--> c_b + c_a)`.
    pub fn cokernel(&self, phi: &AdelMorphism) -> Result<Cokernel> {
        let (a, b) = (phi.source(), phi.target());
        let alpha = phi.datum();
        let rel = self.blocks(&[
            vec![b.rel(), &self.zero(b.r(), a.c())],
            vec![alpha, a.corel()],
        ])?;
        let corel = self.blocks(&[
            vec![b.corel(), &self.zero(b.mid(), a.c())],
            vec![&self.zero(a.c(), b.c()), &self.id(a.c())],
        ])?;
        let object = AdelObject::new(rel, corel)?;
        let first = |x| self.blocks(&[vec![&self.id(x), &self.zero(x, a.c())]]);
        let first_r = self.blocks(&[vec![&self.id(b.r()), &self.zero(b.r(), a.mid())]])?;
        let proj = self.morphism_with_witnesses(
            b,
            &object,
            first(b.mid())?,
            first_r,
            first(b.c())?,
        )?;
        let zero_witness = WitnessPair {
            sigma1: self.blocks(&[vec![&self.zero(a.mid(), b.r()), &self.id(a.mid())]])?,
            sigma2: self.blocks(&[vec![
                &self.zero(a.c(), b.mid()),
                &self.neg(&self.id(a.c())),
            ]])?,
        };
        Ok(Cokernel {
            object,
            proj,
            zero_witness,
        })
    }

    /// The map `coker(phi) -> T` induced by `tau: B -> T`, given a
    /// certificate `wp` for `phi * tau = 0`. Datum `[tau; -sigma2]`.
    pub fn cokernel_colift(
        &self,
        phi: &AdelMorphism,
        tau: &AdelMorphism,
        wp: &WitnessPair,
    ) -> Result<AdelMorphism> {
        let composite = self.compose(phi, tau)?;
        if !self.check_zero_witness(&composite, wp)? {
            return Err(Error::InvalidWitness(
                "pair does not certify that phi * tau vanishes".into(),
            ));
        }
        let coker = self.cokernel(phi)?;
        let t = tau.target();
        let neg_s2 = self.neg(&wp.sigma2);
        let datum = self.blocks(&[vec![tau.datum()], vec![&neg_s2]])?;
        let omega = self.blocks(&[vec![tau.omega()], vec![&wp.sigma1]])?;
        let psi_low = self.neg(&self.mul(&wp.sigma2, t.corel())?);
        let psi = self.blocks(&[vec![tau.psi()], vec![&psi_low]])?;
        self.morphism_with_witnesses(&coker.object, t, datum, omega, psi)
    }

    /// For `phi: A -> B` the kernel is
    /// `(r_a + r_b --[[rho_a, 0], [0, 1]]--> a + r_b --[[gamma_a, alpha], [0, rho_b]]--> c_a + b)`.
    pub fn kernel(&self, phi: &AdelMorphism) -> Result<Kernel> {
        let (a, b) = (phi.source(), phi.target());
        let alpha = phi.datum();
        let rel = self.blocks(&[
            vec![a.rel(), &self.zero(a.r(), b.r())],
            vec![&self.zero(b.r(), a.mid()), &self.id(b.r())],
        ])?;
        let corel = self.blocks(&[
            vec![a.corel(), alpha],
            vec![&self.zero(b.r(), a.c()), b.rel()],
        ])?;
        let object = AdelObject::new(rel, corel)?;
        let first = |x| self.blocks(&[vec![&self.id(x)], vec![&self.zero(b.r(), x)]]);
        let first_c = self.blocks(&[vec![&self.id(a.c())], vec![&self.zero(b.mid(), a.c())]])?;
        let embedding = self.morphism_with_witnesses(
            &object,
            a,
            first(a.mid())?,
            first(a.r())?,
            first_c,
        )?;
        let zero_witness = WitnessPair {
            sigma1: self.blocks(&[
                vec![&self.zero(a.mid(), b.r())],
                vec![&self.neg(&self.id(b.r()))],
            ])?,
            sigma2: self.blocks(&[vec![&self.zero(a.c(), b.mid())], vec![&self.id(b.mid())]])?,
        };
        Ok(Kernel {
            object,
            embedding,
            zero_witness,
        })
    }

    /// The map `T -> ker(phi)` induced by `tau: T -> A`, given a certificate
    /// `wp` for `tau * phi = 0`. Datum `[tau, -sigma1]`.
    pub fn kernel_lift(
        &self,
        phi: &AdelMorphism,
        tau: &AdelMorphism,
        wp: &WitnessPair,
    ) -> Result<AdelMorphism> {
        let composite = self.compose(tau, phi)?;
        if !self.check_zero_witness(&composite, wp)? {
            return Err(Error::InvalidWitness(
                "pair does not certify that tau * phi vanishes".into(),
            ));
        }
        let ker = self.kernel(phi)?;
        let t = tau.source();
        let neg_s1 = self.neg(&wp.sigma1);
        let datum = self.blocks(&[vec![tau.datum(), &neg_s1]])?;
        let omega_right = self.neg(&self.mul(t.rel(), &wp.sigma1)?);
        let omega = self.blocks(&[vec![tau.omega(), &omega_right]])?;
        let psi = self.blocks(&[vec![tau.psi(), &wp.sigma2]])?;
        self.morphism_with_witnesses(t, &ker.object, datum, omega, psi)
    }

    /// `(c --gamma^op--> a --rho^op--> r)` over the opposite category.
    pub fn dualize_object(&self, x: &AdelObject) -> AdelObject {
        let (cat, op) = (self.cat(), &*self.op);
        AdelObject {
            rel: x.corel().to_opposite(cat, op),
            corel: x.rel().to_opposite(cat, op),
        }
    }

    /// `{psi^op, alpha^op, omega^op}`, reversing source and target.
    pub fn dualize_morphism(&self, f: &AdelMorphism) -> AdelMorphism {
        let (cat, op) = (self.cat(), &*self.op);
        AdelMorphism {
            source: self.dualize_object(f.target()),
            target: self.dualize_object(f.source()),
            datum: f.datum().to_opposite(cat, op),
            omega: f.psi().to_opposite(cat, op),
            psi: f.omega().to_opposite(cat, op),
        }
    }

    /// A zero certificate for `f` turned into one for its dual.
    pub fn dualize_witness(&self, wp: &WitnessPair) -> WitnessPair {
        let (cat, op) = (self.cat(), &*self.op);
        WitnessPair {
            sigma1: wp.sigma2.to_opposite(cat, op),
            sigma2: wp.sigma1.to_opposite(cat, op),
        }
    }
}
