//! The Adelman category `Adel(C(Q, R)^+)`.
//!
//! An object is a composable pair `r --rho--> a --gamma--> c` in the additive
//! closure; a morphism is a matrix `alpha: a -> b` for which witnesses
//! `omega` and `psi` with `rho_a * alpha = omega * rho_b` and
//! `gamma_a * psi = alpha * gamma_b` exist. Two morphisms agree when their
//! difference has the form `sigma1 * rho_b + gamma_a * sigma2`. All decisions
//! reduce to [`decide_homotopy`].

mod derived;
mod limits;

use std::sync::Arc;

use num_bigint::BigInt;

use crate::addclosure::{block, check_homotopy, decide_homotopy, MatMorphism, TupleObject};
use crate::error::{Error, Result};
use crate::quivercat::PathCategory;

pub use derived::{EpiComparison, Exactness, Homology};
pub use limits::{Cokernel, Kernel};

/// Object `r --rel--> a --corel--> c`; nothing is assumed of the composite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdelObject {
    rel: MatMorphism,
    corel: MatMorphism,
}

impl AdelObject {
    pub fn new(rel: MatMorphism, corel: MatMorphism) -> Result<Self> {
        if rel.target() != corel.source() {
            return Err(Error::EndpointMismatch(
                "relation and corelation do not meet in a common middle object".into(),
            ));
        }
        Ok(Self { rel, corel })
    }

    pub fn rel(&self) -> &MatMorphism {
        &self.rel
    }

    pub fn corel(&self) -> &MatMorphism {
        &self.corel
    }

    /// The relation object `r`.
    pub fn r(&self) -> &TupleObject {
        self.rel.source()
    }

    /// The middle object `a`.
    pub fn mid(&self) -> &TupleObject {
        self.rel.target()
    }

    /// The corelation object `c`.
    pub fn c(&self) -> &TupleObject {
        self.corel.target()
    }

    pub fn format(&self, cat: &PathCategory) -> String {
        format!(
            "({} -{}-> {} -{}-> {})",
            self.r().format(cat),
            self.rel.format(cat),
            self.mid().format(cat),
            self.corel.format(cat),
            self.c().format(cat)
        )
    }
}

/// `{omega, alpha, psi}` with both squares verified at construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdelMorphism {
    source: AdelObject,
    target: AdelObject,
    datum: MatMorphism,
    omega: MatMorphism,
    psi: MatMorphism,
}

impl AdelMorphism {
    pub fn source(&self) -> &AdelObject {
        &self.source
    }

    pub fn target(&self) -> &AdelObject {
        &self.target
    }

    pub fn datum(&self) -> &MatMorphism {
        &self.datum
    }

    /// Relation witness `omega: r_source -> r_target`.
    pub fn omega(&self) -> &MatMorphism {
        &self.omega
    }

    /// Corelation witness `psi: c_source -> c_target`.
    pub fn psi(&self) -> &MatMorphism {
        &self.psi
    }
}

/// `(sigma1, sigma2)` certifying `alpha - alpha' = sigma1 * rho_b + gamma_a * sigma2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WitnessPair {
    pub sigma1: MatMorphism,
    pub sigma2: MatMorphism,
}

/// The Adelman category over a fixed `C(Q, R)`, together with its opposite
/// for dualization.
#[derive(Clone, Debug)]
pub struct Adel {
    cat: Arc<PathCategory>,
    op: Arc<PathCategory>,
}

impl Adel {
    pub fn new(cat: PathCategory) -> Self {
        let op = cat.opposite();
        Self {
            cat: Arc::new(cat),
            op: Arc::new(op),
        }
    }

    pub fn cat(&self) -> &PathCategory {
        &self.cat
    }

    /// The Adelman category over the opposite path category.
    pub fn dual(&self) -> Adel {
        Adel {
            cat: Arc::clone(&self.op),
            op: Arc::clone(&self.cat),
        }
    }

    pub(crate) fn id(&self, x: &TupleObject) -> MatMorphism {
        MatMorphism::identity(&self.cat, x)
    }

    pub(crate) fn zero(&self, x: &TupleObject, y: &TupleObject) -> MatMorphism {
        MatMorphism::zero(&self.cat, x, y)
    }

    pub(crate) fn mul(&self, f: &MatMorphism, g: &MatMorphism) -> Result<MatMorphism> {
        f.compose(&self.cat, g)
    }

    pub(crate) fn plus(&self, f: &MatMorphism, g: &MatMorphism) -> Result<MatMorphism> {
        f.add(&self.cat, g)
    }

    pub(crate) fn minus(&self, f: &MatMorphism, g: &MatMorphism) -> Result<MatMorphism> {
        f.sub(&self.cat, g)
    }

    pub(crate) fn neg(&self, f: &MatMorphism) -> MatMorphism {
        f.negate(&self.cat)
    }

    pub(crate) fn blocks(&self, rows: &[Vec<&MatMorphism>]) -> Result<MatMorphism> {
        block(&self.cat, rows)
    }

    /// `(0 -> x -> 0)`.
    pub fn emb_object(&self, x: &TupleObject) -> AdelObject {
        let z = TupleObject::zero();
        AdelObject {
            rel: self.zero(&z, x),
            corel: self.zero(x, &z),
        }
    }

    /// `emb(f)` with zero witnesses.
    pub fn emb(&self, f: &MatMorphism) -> AdelMorphism {
        let z = TupleObject::zero();
        AdelMorphism {
            source: self.emb_object(f.source()),
            target: self.emb_object(f.target()),
            datum: f.clone(),
            omega: self.zero(&z, &z),
            psi: self.zero(&z, &z),
        }
    }

    /// The morphism with the given datum if it is well defined; witnesses
    /// are found by one-sided homotopy problems.
    pub fn make_morphism(
        &self,
        source: &AdelObject,
        target: &AdelObject,
        datum: &MatMorphism,
    ) -> Result<Option<AdelMorphism>> {
        self.check_datum(source, target, datum)?;
        let z = TupleObject::zero();
        let lhs = self.mul(source.rel(), datum)?;
        let Some((omega, _)) =
            decide_homotopy(&self.cat, &lhs, target.rel(), &self.zero(source.r(), &z))?
        else {
            return Ok(None);
        };
        let rhs = self.mul(datum, target.corel())?;
        let Some((_, psi)) =
            decide_homotopy(&self.cat, &rhs, &self.zero(&z, target.c()), source.corel())?
        else {
            return Ok(None);
        };
        Ok(Some(AdelMorphism {
            source: source.clone(),
            target: target.clone(),
            datum: datum.clone(),
            omega,
            psi,
        }))
    }

    /// Like [`Adel::make_morphism`] but failing with [`Error::IllDefined`].
    pub fn morphism(
        &self,
        source: &AdelObject,
        target: &AdelObject,
        datum: &MatMorphism,
    ) -> Result<AdelMorphism> {
        self.make_morphism(source, target, datum)?.ok_or_else(|| {
            Error::IllDefined(format!(
                "{} does not induce a morphism {} -> {}",
                datum.format(&self.cat),
                source.format(&self.cat),
                target.format(&self.cat)
            ))
        })
    }

    /// A morphism with explicitly supplied witnesses, which are checked.
    pub fn morphism_with_witnesses(
        &self,
        source: &AdelObject,
        target: &AdelObject,
        datum: MatMorphism,
        omega: MatMorphism,
        psi: MatMorphism,
    ) -> Result<AdelMorphism> {
        self.check_datum(source, target, &datum)?;
        let ok_rel = self.mul(source.rel(), &datum)? == self.mul(&omega, target.rel())?;
        let ok_corel = self.mul(source.corel(), &psi)? == self.mul(&datum, target.corel())?;
        if !ok_rel || !ok_corel {
            return Err(Error::InvalidWitness(format!(
                "witnesses for {} do not make the squares commute",
                datum.format(&self.cat)
            )));
        }
        Ok(AdelMorphism {
            source: source.clone(),
            target: target.clone(),
            datum,
            omega,
            psi,
        })
    }

    fn check_datum(&self, source: &AdelObject, target: &AdelObject, datum: &MatMorphism) -> Result<()> {
        if datum.source() != source.mid() || datum.target() != target.mid() {
            return Err(Error::EndpointMismatch(format!(
                "datum {} -> {} between objects with middles {} and {}",
                datum.source().format(&self.cat),
                datum.target().format(&self.cat),
                source.mid().format(&self.cat),
                target.mid().format(&self.cat)
            )));
        }
        Ok(())
    }

    pub fn identity(&self, x: &AdelObject) -> AdelMorphism {
        AdelMorphism {
            source: x.clone(),
            target: x.clone(),
            datum: self.id(x.mid()),
            omega: self.id(x.r()),
            psi: self.id(x.c()),
        }
    }

    pub fn zero_morphism(&self, x: &AdelObject, y: &AdelObject) -> AdelMorphism {
        AdelMorphism {
            source: x.clone(),
            target: y.clone(),
            datum: self.zero(x.mid(), y.mid()),
            omega: self.zero(x.r(), y.r()),
            psi: self.zero(x.c(), y.c()),
        }
    }

    /// Diagrammatic composite `f * g`; witnesses compose componentwise.
    pub fn compose(&self, f: &AdelMorphism, g: &AdelMorphism) -> Result<AdelMorphism> {
        if f.target != g.source {
            return Err(Error::EndpointMismatch(format!(
                "cannot compose a morphism into {} with one out of {}",
                f.target.format(&self.cat),
                g.source.format(&self.cat)
            )));
        }
        Ok(AdelMorphism {
            source: f.source.clone(),
            target: g.target.clone(),
            datum: self.mul(&f.datum, &g.datum)?,
            omega: self.mul(&f.omega, &g.omega)?,
            psi: self.mul(&f.psi, &g.psi)?,
        })
    }

    /// Composite of a nonempty chain.
    pub fn compose_all(&self, chain: &[&AdelMorphism]) -> Result<AdelMorphism> {
        let (first, rest) = chain
            .split_first()
            .ok_or_else(|| Error::NotComposable("empty chain".into()))?;
        rest.iter()
            .try_fold((*first).clone(), |acc, g| self.compose(&acc, g))
    }

    fn check_parallel(&self, f: &AdelMorphism, g: &AdelMorphism) -> Result<()> {
        if f.source != g.source || f.target != g.target {
            return Err(Error::EndpointMismatch("morphisms are not parallel".into()));
        }
        Ok(())
    }

    pub fn add(&self, f: &AdelMorphism, g: &AdelMorphism) -> Result<AdelMorphism> {
        self.check_parallel(f, g)?;
        Ok(AdelMorphism {
            source: f.source.clone(),
            target: f.target.clone(),
            datum: self.plus(&f.datum, &g.datum)?,
            omega: self.plus(&f.omega, &g.omega)?,
            psi: self.plus(&f.psi, &g.psi)?,
        })
    }

    pub fn negate(&self, f: &AdelMorphism) -> AdelMorphism {
        self.scale(f, &BigInt::from(-1))
    }

    pub fn scale(&self, f: &AdelMorphism, s: &BigInt) -> AdelMorphism {
        AdelMorphism {
            source: f.source.clone(),
            target: f.target.clone(),
            datum: f.datum.scale(&self.cat, s),
            omega: f.omega.scale(&self.cat, s),
            psi: f.psi.scale(&self.cat, s),
        }
    }

    pub fn sub(&self, f: &AdelMorphism, g: &AdelMorphism) -> Result<AdelMorphism> {
        self.add(f, &self.negate(g))
    }

    /// A certificate that `f = 0`, or `None` if `f` is nonzero.
    pub fn is_zero_morphism(&self, f: &AdelMorphism) -> Result<Option<WitnessPair>> {
        Ok(
            decide_homotopy(&self.cat, &f.datum, f.target.rel(), f.source.corel())?
                .map(|(sigma1, sigma2)| WitnessPair { sigma1, sigma2 }),
        )
    }

    /// Re-checks a certificate for `f = 0` by matrix arithmetic alone.
    pub fn check_zero_witness(&self, f: &AdelMorphism, wp: &WitnessPair) -> Result<bool> {
        if wp.sigma1.source() != f.source.mid()
            || wp.sigma1.target() != f.target.r()
            || wp.sigma2.source() != f.source.c()
            || wp.sigma2.target() != f.target.mid()
        {
            return Ok(false);
        }
        check_homotopy(
            &self.cat,
            &f.datum,
            f.target.rel(),
            f.source.corel(),
            &wp.sigma1,
            &wp.sigma2,
        )
    }

    /// A certificate for `f = g`.
    pub fn is_equal(&self, f: &AdelMorphism, g: &AdelMorphism) -> Result<Option<WitnessPair>> {
        self.is_zero_morphism(&self.sub(f, g)?)
    }

    /// `f * g`, insisting on a certified zero; returns the certificate.
    pub fn certify_zero_composite(&self, f: &AdelMorphism, g: &AdelMorphism) -> Result<WitnessPair> {
        let fg = self.compose(f, g)?;
        self.is_zero_morphism(&fg)?.ok_or_else(|| {
            Error::NonZeroComposite(format!(
                "composite {} is not zero",
                fg.datum.format(&self.cat)
            ))
        })
    }

    pub fn format_morphism(&self, f: &AdelMorphism) -> String {
        format!(
            "{}: {} -> {}",
            f.datum.format(&self.cat),
            f.source.format(&self.cat),
            f.target.format(&self.cat)
        )
    }
}

#[cfg(test)]
mod tests;
