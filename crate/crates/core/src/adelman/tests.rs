use num_bigint::BigInt;

use super::*;
use crate::catalog;

fn arrow(adel: &Adel, label: &str) -> MatMorphism {
    let cat = adel.cat();
    MatMorphism::single(cat.lin_from_path(&cat.arrow_path(label).unwrap()))
}

fn path(adel: &Adel, labels: &[&str]) -> MatMorphism {
    let cat = adel.cat();
    MatMorphism::single(cat.lin_from_path(&cat.quiver().path_from_labels(labels).unwrap()))
}

fn vertex(adel: &Adel, name: &str) -> TupleObject {
    TupleObject::single(adel.cat().vertex(name).unwrap())
}

fn snake() -> Adel {
    Adel::new(catalog::snake())
}

fn dowker(adel: &Adel) -> AdelMorphism {
    let (al, be, ga) = (arrow(adel, "alpha"), arrow(adel, "beta"), arrow(adel, "gamma"));
    adel.connecting_homomorphism(&al, &be, &ga).unwrap()
}

#[test]
fn emb_is_functorial() {
    let adel = snake();
    let (al, be) = (arrow(&adel, "alpha"), arrow(&adel, "beta"));
    let lhs = adel.compose(&adel.emb(&al), &adel.emb(&be)).unwrap();
    let rhs = adel.emb(&al.compose(adel.cat(), &be).unwrap());
    assert_eq!(lhs, rhs);
    let a = vertex(&adel, "a");
    assert_eq!(adel.emb(&adel.id(&a)), adel.identity(&adel.emb_object(&a)));
    assert!(adel.is_zero_object(&adel.emb_object(&TupleObject::zero())).unwrap());
    assert!(!adel.is_zero_object(&adel.emb_object(&a)).unwrap());
}

#[test]
fn make_morphism_examples() {
    let adel = snake();
    let (al, b) = (arrow(&adel, "alpha"), vertex(&adel, "b"));
    let coka = AdelObject::new(al.clone(), adel.zero(&b, &TupleObject::zero())).unwrap();
    let emb_b = adel.emb_object(&b);
    assert!(adel.make_morphism(&emb_b, &coka, &adel.id(&b)).unwrap().is_some());
    // The other direction would need alpha = 0.
    assert!(adel.make_morphism(&coka, &emb_b, &adel.id(&b)).unwrap().is_none());
    let z = adel.zero(&b, &b);
    let f = adel.make_morphism(&coka, &emb_b, &z).unwrap().unwrap();
    assert!(adel.is_zero_morphism(&f).unwrap().is_some());
    let d = dowker(&adel);
    let again = adel.make_morphism(d.source(), d.target(), d.datum()).unwrap();
    assert!(again.is_some());
    assert!(adel.make_morphism(&coka, &emb_b, &al).is_err());
}

#[test]
fn dowker_generator_is_not_its_negative() {
    let adel = snake();
    let d = dowker(&adel);
    assert!(adel.is_zero_morphism(&d).unwrap().is_none());
    assert!(adel.is_equal(&d, &adel.negate(&d)).unwrap().is_none());
    assert!(adel.is_equal(&d, &d).unwrap().is_some());
}

#[test]
fn equality_up_to_relation_term() {
    // Data differing by sigma1 * rho_b give the same morphism.
    let adel = snake();
    let al = arrow(&adel, "alpha");
    let (a, b) = (vertex(&adel, "a"), vertex(&adel, "b"));
    let coka = AdelObject::new(al.clone(), adel.zero(&b, &TupleObject::zero())).unwrap();
    let src = adel.emb_object(&a);
    let f = adel.morphism(&src, &coka, &adel.zero(&a, &b)).unwrap();
    let three_al = al.scale(adel.cat(), &BigInt::from(3));
    let g = adel.morphism(&src, &coka, &three_al).unwrap();
    let wp = adel.is_equal(&f, &g).unwrap().unwrap();
    assert!(adel.check_zero_witness(&adel.sub(&f, &g).unwrap(), &wp).unwrap());
    let emb_b = adel.emb_object(&b);
    let f2 = adel.morphism(&src, &emb_b, &adel.zero(&a, &b)).unwrap();
    let g2 = adel.morphism(&src, &emb_b, &three_al).unwrap();
    assert!(adel.is_equal(&f2, &g2).unwrap().is_none());
}

#[test]
fn cokernel_of_emb_alpha() {
    let adel = snake();
    let al = arrow(&adel, "alpha");
    let coker = adel.cokernel(&adel.emb(&al)).unwrap();
    let expected = AdelObject::new(al.clone(), adel.zero(al.target(), &TupleObject::zero())).unwrap();
    assert_eq!(coker.object, expected);
    let comp = adel.compose(&adel.emb(&al), &coker.proj).unwrap();
    assert!(adel.check_zero_witness(&comp, &coker.zero_witness).unwrap());
    assert!(adel.is_epi(&coker.proj).unwrap());
}

#[test]
fn cokernel_of_identity_and_zero() {
    let adel = snake();
    let x = adel.emb_object(&vertex(&adel, "b"));
    let c = adel.cokernel(&adel.identity(&x)).unwrap();
    assert!(adel.is_zero_object(&c.object).unwrap());
    let y = adel.emb_object(&vertex(&adel, "c"));
    let c = adel.cokernel(&adel.zero_morphism(&x, &y)).unwrap();
    assert!(adel.is_iso(&c.proj).unwrap());
    let k = adel.kernel(&adel.zero_morphism(&x, &y)).unwrap();
    assert!(adel.is_iso(&k.embedding).unwrap());
    let k = adel.kernel(&adel.identity(&x)).unwrap();
    assert!(adel.is_zero_object(&k.object).unwrap());
}

#[test]
fn kernel_of_emb_beta() {
    let adel = snake();
    let be = arrow(&adel, "beta");
    let ker = adel.kernel(&adel.emb(&be)).unwrap();
    let expected = AdelObject::new(adel.zero(&TupleObject::zero(), be.source()), be.clone()).unwrap();
    assert_eq!(ker.object, expected);
    let comp = adel.compose(&ker.embedding, &adel.emb(&be)).unwrap();
    assert!(adel.check_zero_witness(&comp, &ker.zero_witness).unwrap());
    assert!(adel.is_mono(&ker.embedding).unwrap());
}

#[test]
fn kernel_is_dual_of_cokernel() {
    let adel = snake();
    let dual = adel.dual();
    for phi in [dowker(&adel), adel.emb(&arrow(&adel, "beta"))] {
        let ker = adel.kernel(&phi).unwrap();
        let dc = dual.cokernel(&adel.dualize_morphism(&phi)).unwrap();
        assert_eq!(dual.dualize_object(&dc.object), ker.object);
        assert_eq!(dual.dualize_morphism(&dc.proj), ker.embedding);
        let x = phi.source();
        assert_eq!(&dual.dualize_object(&adel.dualize_object(x)), x);
    }
}

#[test]
fn colift_and_lift_round_trips() {
    let adel = snake();
    let d = dowker(&adel);
    let coker = adel.cokernel(&d).unwrap();
    let back = adel.cokernel_colift(&d, &coker.proj, &coker.zero_witness).unwrap();
    assert!(adel.is_equal(&back, &adel.identity(&coker.object)).unwrap().is_some());
    let ker = adel.kernel(&d).unwrap();
    let back = adel.kernel_lift(&d, &ker.embedding, &ker.zero_witness).unwrap();
    assert!(adel.is_equal(&back, &adel.identity(&ker.object)).unwrap().is_some());
    let bogus = WitnessPair {
        sigma1: ker.zero_witness.sigma1.clone(),
        sigma2: adel.zero(ker.zero_witness.sigma2.source(), ker.zero_witness.sigma2.target()),
    };
    assert!(adel.kernel_lift(&d, &ker.embedding, &bogus).is_err());
}

#[test]
fn figure_colift_beta_gamma() {
    // [beta*gamma]: (a -alpha-> b -> 0) -> emb(d) is the colift of emb(beta*gamma).
    let adel = snake();
    let al = adel.emb(&arrow(&adel, "alpha"));
    let bg = adel.emb(&path(&adel, &["beta", "gamma"]));
    let wp = adel.certify_zero_composite(&al, &bg).unwrap();
    let colift = adel.cokernel_colift(&al, &bg, &wp).unwrap();
    let coker = adel.cokernel(&al).unwrap();
    let recovered = adel.compose(&coker.proj, &colift).unwrap();
    assert!(adel.is_equal(&recovered, &bg).unwrap().is_some());
}

#[test]
fn epi_comparison_and_colift() {
    let adel = snake();
    let al = adel.emb(&arrow(&adel, "alpha"));
    let p = adel.cokernel(&al).unwrap().proj;
    let cmp = adel.epi_comparison(&p).unwrap();
    assert!(adel.is_iso(&cmp.comparison).unwrap());
    let same = adel.colift_along_epi(&p, &p).unwrap();
    assert!(adel.is_equal(&same, &adel.identity(p.target())).unwrap().is_some());
    assert!(matches!(adel.epi_comparison(&al), Err(Error::NotEpi(_))));
}

#[test]
fn lift_along_mono_examples() {
    let adel = snake();
    let be = adel.emb(&arrow(&adel, "beta"));
    let k = adel.kernel(&be).unwrap().embedding;
    let id = adel.identity(k.target());
    assert!(adel.lift_along_mono(&id, &k).is_ok());
    let lifted = adel.lift_along_mono(&k, &k).unwrap();
    assert!(adel.is_equal(&lifted, &adel.identity(k.source())).unwrap().is_some());
    assert!(adel.lift_along_mono(&be, &adel.identity(be.source())).is_err());
}

#[test]
fn five_lemma_predicates() {
    let adel = Adel::new(catalog::five_lemma());
    let lam = arrow(&adel, "lambda");
    let a = vertex(&adel, "a");
    let e = AdelObject::new(lam, adel.zero(&a, &TupleObject::zero())).unwrap();
    let delta = adel.morphism(&adel.emb_object(&a), &e, &adel.id(&a)).unwrap();
    assert!(adel.is_epi(&delta).unwrap());
    assert!(!adel.is_mono(&delta).unwrap());
    assert!(!adel.is_mono(&adel.emb(&arrow(&adel, "zeta"))).unwrap());
}

#[test]
fn subobject_order() {
    let adel = snake();
    let k1 = adel.kernel(&adel.emb(&arrow(&adel, "beta"))).unwrap().embedding;
    let k2 = adel.kernel(&adel.emb(&path(&adel, &["beta", "gamma"]))).unwrap().embedding;
    assert!(adel.subobject_leq(&k1, &k2).unwrap());
    assert!(!adel.subobject_leq(&k2, &k1).unwrap());
    assert!(adel.subobject_leq(&k1, &k1).unwrap());
    let zero = adel.emb_object(&TupleObject::zero());
    let z = adel.zero_morphism(&zero, k1.target());
    assert!(adel.subobject_leq(&z, &k2).unwrap());
    let not_mono = adel.emb(&arrow(&adel, "alpha"));
    assert!(matches!(adel.subobject_leq(&not_mono, &k1), Err(Error::NotMono(_))));
}

#[test]
fn homology_of_embedded_pair() {
    let adel = snake();
    let (al, be) = (arrow(&adel, "alpha"), arrow(&adel, "beta"));
    let h = adel.homology(&adel.emb(&al), &adel.emb(&be)).unwrap();
    assert!(adel.is_mono(&h.embedding).unwrap());
    assert!(adel.is_epi(&h.onto).unwrap());
    // Compare with (a -alpha-> b -beta-> c) through coker(emb alpha).
    let obj = AdelObject::new(al.clone(), be.clone()).unwrap();
    let coker = adel.cokernel(&adel.emb(&al)).unwrap();
    let f = adel.morphism(&obj, &coker.object, &adel.id(al.target())).unwrap();
    let q = adel.cokernel(&h.composite).unwrap().proj;
    let wp = adel.certify_zero_composite(&f, &q).unwrap();
    let to_h = adel.kernel_lift(&q, &f, &wp).unwrap();
    assert!(adel.is_iso(&to_h).unwrap());
}

#[test]
fn homology_of_zero_maps() {
    let adel = snake();
    let y = adel.emb_object(&vertex(&adel, "b"));
    let zero = adel.emb_object(&TupleObject::zero());
    let into = adel.zero_morphism(&zero, &y);
    let out = adel.zero_morphism(&y, &zero);
    let h = adel.homology(&into, &out).unwrap();
    assert!(adel.is_iso(&h.onto).unwrap());
    assert!(adel.is_iso(&h.embedding).unwrap());
    assert!(!adel.is_exact(&into, &out).unwrap());
    let zz = adel.zero_morphism(&zero, &zero);
    assert!(adel.is_exact(&zz, &zz).unwrap());
}

#[test]
fn exactness_requires_zero_composite() {
    let adel = snake();
    let (al, be) = (adel.emb(&arrow(&adel, "alpha")), adel.emb(&arrow(&adel, "beta")));
    assert!(matches!(adel.is_exact(&al, &be), Err(Error::NonZeroComposite(_))));
}

#[test]
fn connecting_homomorphism_requires_complex() {
    let adel = Adel::new(crate::catalog::five_lemma_three_relations());
    let (la, al) = (arrow(&adel, "lambda"), arrow(&adel, "alpha"));
    let ep = arrow(&adel, "epsilon");
    assert!(adel.connecting_homomorphism(&la, &al, &ep).is_err());
    let adel = snake();
    let a = vertex(&adel, "a");
    let z = adel.zero(&a, &a);
    let d = adel.connecting_homomorphism(&z, &z, &z).unwrap();
    assert!(adel.is_zero_morphism(&d).unwrap().is_some());
    let s = adel.scale(&dowker(&adel), &BigInt::from(0));
    assert!(adel.is_zero_morphism(&s).unwrap().is_some());
}
