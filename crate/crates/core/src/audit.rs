//! Seeded randomized self-checks: certificates, universal properties and
//! duality on random instances, and comparison of `Adel` constructions
//! with their evaluations at random representations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::addclosure::{MatMorphism, TupleObject};
use crate::adelman::{Adel, AdelMorphism, AdelObject};
use crate::catalog;
use crate::error::Result;
use crate::evalfunctor::{eval_morphism, eval_object, oracle_compare, oracle_exactness, random_representation};
use crate::homgroups::hom_group;
use crate::intlinalg::homology_of;
use crate::provers::{five_figure, snake_figure};
use crate::quivercat::{LinMorphism, PathCategory};

pub fn random_lin<R: Rng>(cat: &PathCategory, rng: &mut R, a: usize, b: usize) -> LinMorphism {
    let coeffs = (0..cat.hom(a, b).dim())
        .map(|_| BigInt::from(rng.gen_range(-2i64..=2)))
        .collect();
    cat.lin_from_coeffs(a, b, coeffs).expect("dimension matches")
}

pub fn random_tuple<R: Rng>(cat: &PathCategory, rng: &mut R, max_len: usize) -> TupleObject {
    let n = rng.gen_range(0..=max_len);
    TupleObject::new((0..n).map(|_| rng.gen_range(0..cat.num_vertices())).collect())
}

pub fn random_mat<R: Rng>(cat: &PathCategory, rng: &mut R, s: &TupleObject, t: &TupleObject) -> MatMorphism {
    let rows = s
        .summands
        .iter()
        .map(|&a| t.summands.iter().map(|&b| random_lin(cat, rng, a, b)).collect())
        .collect();
    MatMorphism::new(s.clone(), t.clone(), rows).expect("shapes match")
}

/// An arbitrary pair `r -> a -> c` with short tuples.
pub fn random_object<R: Rng>(adel: &Adel, rng: &mut R) -> AdelObject {
    let cat = adel.cat();
    let (r, a, c) = (
        random_tuple(cat, rng, 2),
        random_tuple(cat, rng, 2),
        random_tuple(cat, rng, 2),
    );
    AdelObject::new(random_mat(cat, rng, &r, &a), random_mat(cat, rng, &a, &c)).expect("composable")
}

/// A random element of `Hom(x, y)` drawn from its presentation.
pub fn random_morphism<R: Rng>(adel: &Adel, rng: &mut R, x: &AdelObject, y: &AdelObject) -> Result<AdelMorphism> {
    let h = hom_group(adel, x, y)?;
    let coords: Vec<BigInt> = (0..h.generators.len())
        .map(|_| BigInt::from(rng.gen_range(-2i64..=2)))
        .collect();
    h.element(adel, &coords)
}

/// An embedded object, a cokernel or kernel of an embedded matrix, or an
/// arbitrary pair.
pub fn random_source_object<R: Rng>(adel: &Adel, rng: &mut R) -> Result<AdelObject> {
    let cat = adel.cat();
    Ok(match rng.gen_range(0..4) {
        0 => adel.emb_object(&random_tuple(cat, rng, 2)),
        1 | 2 => {
            let (s, t) = (random_tuple(cat, rng, 2), random_tuple(cat, rng, 2));
            let f = adel.emb(&random_mat(cat, rng, &s, &t));
            if rng.gen_bool(0.5) {
                adel.cokernel(&f)?.object
            } else {
                adel.kernel(&f)?.object
            }
        }
        _ => random_object(adel, rng),
    })
}

/// A random morphism between random objects, redrawn a few times to
/// avoid zero morphisms (most random Hom-sets are trivial).
pub fn random_instance<R: Rng>(adel: &Adel, rng: &mut R) -> Result<AdelMorphism> {
    let mut f = None;
    for _ in 0..16 {
        let x = random_source_object(adel, rng)?;
        let y = random_source_object(adel, rng)?;
        let g = random_morphism(adel, rng, &x, &y)?;
        if adel.is_zero_morphism(&g)?.is_none() {
            return Ok(g);
        }
        f = Some(g);
    }
    Ok(f.expect("at least one draw"))
}

/// Pass counts per named check.
#[derive(Clone, Debug, Default)]
pub struct AuditReport {
    pub instances: usize,
    pub checks: BTreeMap<String, (usize, usize)>,
    pub failures: Vec<String>,
    /// Descriptive counters that are not pass/fail.
    pub tallies: BTreeMap<String, usize>,
}

impl AuditReport {
    fn record(&mut self, name: &str, ok: bool, context: impl FnOnce() -> String) {
        let e = self.checks.entry(name.to_string()).or_default();
        e.1 += 1;
        if ok {
            e.0 += 1;
        } else {
            self.failures.push(format!("{name}: {}", context()));
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn total_checks(&self) -> usize {
        self.checks.values().map(|c| c.1).sum()
    }

    fn tally(&mut self, name: &str) {
        *self.tallies.entry(name.to_string()).or_default() += 1;
    }

    fn absorb(&mut self, other: AuditReport) {
        self.instances += other.instances;
        for (k, v) in other.tallies {
            *self.tallies.entry(k).or_default() += v;
        }
        for (k, (p, t)) in other.checks {
            let e = self.checks.entry(k).or_default();
            e.0 += p;
            e.1 += t;
        }
        self.failures.extend(other.failures);
    }
}

fn audit_instance<R: Rng>(adel: &Adel, rng: &mut R, f: &AdelMorphism, out: &mut AuditReport) -> Result<()> {
    let ctx = || adel.format_morphism(f);
    let dual = adel.dual();

    let wd = adel
        .morphism_with_witnesses(f.source(), f.target(), f.datum().clone(), f.omega().clone(), f.psi().clone())
        .is_ok();
    out.record("stored witnesses re-verify", wd, ctx);

    let zero = adel.is_zero_morphism(f)?;
    if zero.is_none() {
        out.tally("nonzero instances");
    }
    if let Some(wp) = &zero {
        out.record("zero certificate re-verifies", adel.check_zero_witness(f, wp)?, ctx);
    }
    let coords = hom_group(adel, f.source(), f.target())?.coordinates(f)?;
    out.record(
        "zero decision agrees with Hom-group coordinates",
        zero.is_some() == coords.iter().all(|c| c == &BigInt::from(0)),
        ctx,
    );

    let ker = adel.kernel(f)?;
    let coker = adel.cokernel(f)?;
    let kf = adel.compose(&ker.embedding, f)?;
    out.record("kernel certificate re-verifies", adel.check_zero_witness(&kf, &ker.zero_witness)?, ctx);
    let fc = adel.compose(f, &coker.proj)?;
    out.record("cokernel certificate re-verifies", adel.check_zero_witness(&fc, &coker.zero_witness)?, ctx);
    out.record("kernel embedding is mono", adel.is_mono(&ker.embedding)?, ctx);
    out.record("cokernel projection is epi", adel.is_epi(&coker.proj)?, ctx);

    let lift = adel.kernel_lift(f, &ker.embedding, &ker.zero_witness)?;
    out.record(
        "lifting the kernel embedding gives the identity",
        adel.is_equal(&lift, &adel.identity(&ker.object))?.is_some(),
        ctx,
    );
    let colift = adel.cokernel_colift(f, &coker.proj, &coker.zero_witness)?;
    out.record(
        "colifting the cokernel projection gives the identity",
        adel.is_equal(&colift, &adel.identity(&coker.object))?.is_some(),
        ctx,
    );

    let t = adel.emb_object(&random_tuple(adel.cat(), rng, 1));
    let h = random_morphism(adel, rng, &t, &ker.object)?;
    let tau = adel.compose(&h, &ker.embedding)?;
    let wp = adel.certify_zero_composite(&tau, f)?;
    let l = adel.kernel_lift(f, &tau, &wp)?;
    out.record(
        "lift through the kernel is unique",
        adel.is_equal(&l, &h)?.is_some(),
        ctx,
    );
    let h = random_morphism(adel, rng, &coker.object, &t)?;
    let tau = adel.compose(&coker.proj, &h)?;
    let wp = adel.certify_zero_composite(f, &tau)?;
    let c = adel.cokernel_colift(f, &tau, &wp)?;
    out.record(
        "colift through the cokernel is unique",
        adel.is_equal(&c, &h)?.is_some(),
        ctx,
    );

    let fop = adel.dualize_morphism(f);
    out.record(
        "kernel dualizes to the cokernel of the dual",
        adel.dualize_object(&ker.object) == dual.cokernel(&fop)?.object,
        ctx,
    );
    out.record(
        "dualization is an involution",
        dual.dualize_morphism(&fop) == *f,
        ctx,
    );
    let dual_zero = dual.is_zero_morphism(&fop)?;
    out.record("zero decision is self-dual", dual_zero.is_some() == zero.is_some(), ctx);
    if let Some(wp) = &zero {
        out.record(
            "dualized zero certificate re-verifies",
            dual.check_zero_witness(&fop, &adel.dualize_witness(wp))?,
            ctx,
        );
    }

    let cmp = adel.epi_comparison(&coker.proj)?;
    let diff = adel.sub(
        &adel.compose(&coker.proj, &cmp.comparison)?,
        &cmp.cokernel_of_kernel.proj,
    )?;
    out.record(
        "epi triangle witness re-verifies",
        adel.check_zero_witness(&diff, &cmp.triangle_witness)?,
        ctx,
    );
    out.record("epi comparison is an iso", adel.is_iso(&cmp.comparison)?, ctx);
    Ok(())
}

/// Runs the computability checks on `n` random instances per category of
/// the snake and five lemma quivers.
pub fn computability_audit(seed: u64, n: usize) -> Result<AuditReport> {
    let mut out = AuditReport::default();
    for (k, cat) in [catalog::snake(), catalog::five_lemma()].into_iter().enumerate() {
        let adel = Adel::new(cat);
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        for _ in 0..n {
            let f = random_instance(&adel, &mut rng)?;
            audit_instance(&adel, &mut rng, &f, &mut out)?;
            out.instances += 1;
        }
    }
    Ok(out)
}

/// Largest vertex rank of the random representations.
pub const MAX_RANK: usize = 3;

fn oracle_pass(
    adel: &Adel,
    maps: &[(String, AdelMorphism)],
    sequences: &[(String, AdelMorphism, AdelMorphism)],
    seed: u64,
    reps: usize,
) -> Result<AuditReport> {
    let cat = adel.cat();
    let mut out = AuditReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..reps {
        let rep = random_representation(cat, &mut rng, MAX_RANK);
        if rep.matrices.iter().any(|m| !m.is_zero()) {
            out.tally("representations with a nonzero arrow");
        }
        let ctx = |name: &str| format!("{name} at ranks {:?}", rep.ranks);
        for (name, f) in maps {
            for c in oracle_compare(&rep, adel, f)? {
                out.record(&format!("{} commutes with evaluation", c.name), c.ok, || ctx(name));
            }
        }
        for (name, phi, psi) in sequences {
            let ex = oracle_exactness(&rep, adel, phi, psi)?;
            out.record("exactness transports", ex.ok, || ctx(name));
            let h = adel.homology(phi, psi)?;
            let direct = homology_of(&eval_morphism(&rep, cat, phi)?, &eval_morphism(&rep, cat, psi)?)?;
            let via = eval_object(&rep, cat, &h.object)?.group;
            out.record(
                "homology commutes with evaluation",
                direct.invariants() == via.invariants(),
                || ctx(name),
            );
        }
        out.instances += 1;
    }
    Ok(out)
}

/// Evaluates the snake and five lemma diagrams at `reps` random
/// representations each and compares kernels, cokernels, images,
/// homology and exactness.
pub fn oracle_audit(seed: u64, reps: usize) -> Result<AuditReport> {
    let mut out = AuditReport::default();

    let adel = Adel::new(catalog::snake());
    let fig = snake_figure(1)?;
    let maps: Vec<(String, AdelMorphism)> = fig
        .arrows
        .iter()
        .map(|a| (format!("{} -> {}", a.source, a.target), a.morphism.clone()))
        .collect();
    let mut seqs = vec![];
    for (name, seq) in &fig.sequences {
        for w in seq.windows(2) {
            let (phi, psi) = (&fig.arrows[w[0]], &fig.arrows[w[1]]);
            seqs.push((format!("{name} at {}", phi.target), phi.morphism.clone(), psi.morphism.clone()));
        }
    }
    out.absorb(oracle_pass(&adel, &maps, &seqs, seed, reps)?);

    let adel = Adel::new(catalog::five_lemma());
    let maps = five_figure()?;
    let get = |n: &str| maps.iter().find(|(k, _)| k == n).map(|(_, f)| f.clone()).expect("named map");
    let seqs = vec![
        ("top row at b".to_string(), get("alpha"), get("beta")),
        ("top row at c".to_string(), get("beta"), get("zeta kappa")),
        ("bottom row at f".to_string(), get("alpha epsilon"), get("iota")),
        ("bottom row at g".to_string(), get("iota"), get("kappa")),
        ("step 2 sequence".to_string(), get("step 2 beta"), get("step 2 unit")),
    ];
    let mut five = oracle_pass(&adel, &maps, &seqs, seed ^ 0x5f5f, reps)?;
    // The refined five lemma, evaluated: the step 4 chain map is injective,
    // the free rank of ker(zeta) is bounded by the three graded pieces, and
    // the classical five lemma follows when those pieces vanish.
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xa5a5);
    let phi = get("step 4 chain map");
    let cat = adel.cat();
    for _ in 0..reps {
        let rep = random_representation(cat, &mut rng, MAX_RANK);
        let ctx = || format!("ranks {:?}", rep.ranks);
        let ok = eval_morphism(&rep, cat, &phi)?.is_injective();
        five.record("evaluated chain map is injective", ok, ctx);
        let ev = |n: &str| eval_morphism(&rep, cat, &get(n));
        let (eps, zeta) = (ev("epsilon")?, ev("zeta")?);
        let top = homology_of(&ev("beta")?, &ev("zeta kappa")?)?;
        let bottom = homology_of(&ev("alpha epsilon")?, &ev("iota")?)?;
        let pieces = eps.kernel().invariants().free_rank
            + top.invariants().free_rank
            + bottom.invariants().free_rank;
        five.record(
            "free rank of ker(zeta) is bounded by the graded pieces",
            zeta.kernel().invariants().free_rank <= pieces,
            ctx,
        );
        if eps.is_injective() && top.is_trivial() && bottom.is_trivial() {
            five.tally("representations meeting the classical hypotheses");
            five.record("classical five lemma under evaluation", zeta.is_injective(), ctx);
        }
    }
    out.absorb(five);
    Ok(out)
}
