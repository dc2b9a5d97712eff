//! Evaluation of the exact functor `Adel(C(Q, R)^+) -> Ab` induced by a
//! representation of `(Q, R)` on free abelian groups.
//!
//! Matrices act on row vectors: an arrow `x: u -> v` is a
//! `rank(u) x rank(v)` matrix and the path `x * y` evaluates to `M_x M_y`.
//! An object `r -> a -> c` evaluates to `ker(F gamma) / (ker(F gamma) ∩ im(F rho))`.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;

use crate::addclosure::{MatMorphism, TupleObject};
use crate::adelman::{Adel, AdelMorphism, AdelObject};
use crate::error::{Error, Result};
use crate::intlinalg::{left_kernel, solve_left, subquotient, FpAbGroup, GroupHom, IntMatrix};
use crate::quivercat::{ArrowId, LinMorphism, Path, PathCategory, VertexId};

/// A `Z`-free representation: one rank per vertex, one matrix per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub ranks: Vec<usize>,
    pub matrices: Vec<IntMatrix>,
}

impl Representation {
    /// Checks shapes against the quiver.
    pub fn new(cat: &PathCategory, ranks: Vec<usize>, matrices: Vec<IntMatrix>) -> Result<Self> {
        let q = cat.quiver();
        if ranks.len() != q.vertices().len() || matrices.len() != q.arrows().len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} ranks and {} matrices for a quiver with {} vertices and {} arrows",
                ranks.len(),
                matrices.len(),
                q.vertices().len(),
                q.arrows().len()
            )));
        }
        for (arr, m) in q.arrows().iter().zip(&matrices) {
            if m.rows() != ranks[arr.source] || m.cols() != ranks[arr.target] {
                return Err(Error::InvalidRepresentation(format!(
                    "matrix for {} is {}x{}, expected {}x{}",
                    arr.label,
                    m.rows(),
                    m.cols(),
                    ranks[arr.source],
                    ranks[arr.target]
                )));
            }
        }
        Ok(Self { ranks, matrices })
    }

    /// The zero representation on the given ranks.
    pub fn zero(cat: &PathCategory, ranks: Vec<usize>) -> Self {
        let matrices = cat
            .quiver()
            .arrows()
            .iter()
            .map(|a| IntMatrix::zeros(ranks[a.source], ranks[a.target]))
            .collect();
        Self { ranks, matrices }
    }

    pub fn eval_path(&self, p: &Path) -> IntMatrix {
        p.arrows.iter().fold(IntMatrix::identity(self.ranks[p.source]), |acc, &a| {
            &acc * &self.matrices[a]
        })
    }

    pub fn eval_lin(&self, cat: &PathCategory, f: &LinMorphism) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.ranks[f.source], self.ranks[f.target]);
        for (c, p) in f.coeffs.iter().zip(cat.hom(f.source, f.target).basis()) {
            if !c.is_zero() {
                out = &out + &self.eval_path(p).scale(c);
            }
        }
        out
    }

    pub fn tuple_rank(&self, x: &TupleObject) -> usize {
        x.summands.iter().map(|&v| self.ranks[v]).sum()
    }

    /// Block matrix of a matrix morphism.
    pub fn eval_mat(&self, cat: &PathCategory, f: &MatMorphism) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.tuple_rank(f.source()), self.tuple_rank(f.target()));
        let mut r0 = 0;
        for i in 0..f.nrows() {
            let mut c0 = 0;
            for j in 0..f.ncols() {
                let m = self.eval_lin(cat, f.entry(i, j));
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        out.set(r0 + r, c0 + c, m.get(r, c).clone());
                    }
                }
                c0 += m.cols();
            }
            r0 += self.ranks[f.source().summands[i]];
        }
        out
    }

    /// Whether every relation evaluates to zero.
    pub fn check(&self, cat: &PathCategory) -> bool {
        self.first_violation(cat).is_none()
    }

    fn first_violation(&self, cat: &PathCategory) -> Option<usize> {
        cat.relations().iter().position(|r| {
            let mut acc = IntMatrix::zeros(self.ranks[r.source], self.ranks[r.target]);
            for (c, p) in &r.terms {
                acc = &acc + &self.eval_path(p).scale(c);
            }
            !acc.is_zero()
        })
    }

    pub fn validate(&self, cat: &PathCategory) -> Result<()> {
        match self.first_violation(cat) {
            None => Ok(()),
            Some(i) => Err(Error::InvalidRepresentation(format!(
                "relation {} does not evaluate to zero",
                i + 1
            ))),
        }
    }
}

/// `F(X)` as a group, with the lattice basis of `ker(F gamma)` whose rows
/// are its generators (in coordinates of `F(middle)`).
#[derive(Clone, Debug)]
pub struct EvalObject {
    pub group: FpAbGroup,
    pub generators: IntMatrix,
}

pub fn eval_object(rep: &Representation, cat: &PathCategory, x: &AdelObject) -> Result<EvalObject> {
    let rho = rep.eval_mat(cat, x.rel());
    let gamma = rep.eval_mat(cat, x.corel());
    let ker = left_kernel(&gamma);
    let (group, generators) = subquotient(&ker, &rho)?;
    Ok(EvalObject { group, generators })
}

/// `F(phi)` between the presentations of [`eval_object`].
pub fn eval_morphism(rep: &Representation, cat: &PathCategory, f: &AdelMorphism) -> Result<GroupHom> {
    let src = eval_object(rep, cat, f.source())?;
    let tgt = eval_object(rep, cat, f.target())?;
    let alpha = rep.eval_mat(cat, f.datum());
    let images = src.generators.checked_mul(&alpha)?;
    let matrix = solve_left(&tgt.generators, &images)?.ok_or_else(|| {
        Error::InvalidRepresentation("image of a cycle is not a cycle".into())
    })?;
    GroupHom::new(src.group, tgt.group, matrix)
}

/// Random valid representation with ranks in `0..=max_rank` and small
/// entries. Arrows are drawn in index order; once a relation involves only
/// drawn arrows, its last arrow is solved for instead of drawn.
pub fn random_representation<R: Rng>(cat: &PathCategory, rng: &mut R, max_rank: usize) -> Representation {
    let n = cat.num_vertices();
    for _ in 0..64 {
        let ranks: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=max_rank)).collect();
        if let Some(rep) = attempt(cat, rng, ranks.clone()) {
            return rep;
        }
    }
    let ranks: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=max_rank)).collect();
    let zero = Representation::zero(cat, ranks);
    if zero.check(cat) {
        zero
    } else {
        Representation::zero(cat, vec![0; n])
    }
}

fn last_arrow(r: &crate::quivercat::Relation) -> Option<ArrowId> {
    r.terms.iter().flat_map(|(_, p)| p.arrows.iter().copied()).max()
}

fn attempt<R: Rng>(cat: &PathCategory, rng: &mut R, ranks: Vec<usize>) -> Option<Representation> {
    let mut rep = Representation::zero(cat, ranks);
    let arrows = cat.quiver().arrows().to_vec();
    for (k, arr) in arrows.iter().enumerate() {
        let (rs, rt) = (rep.ranks[arr.source], rep.ranks[arr.target]);
        let constrained: Vec<_> = cat
            .relations()
            .iter()
            .filter(|r| last_arrow(r) == Some(k))
            .collect();
        let random = |rng: &mut R| {
            let rows: Vec<Vec<i64>> = (0..rs)
                .map(|_| (0..rt).map(|_| rng.gen_range(-2..=2)).collect())
                .collect();
            IntMatrix::from_rows(rt, &rows).expect("shape is consistent")
        };
        if constrained.is_empty() {
            rep.matrices[k] = random(rng);
            continue;
        }
        // Each constraint is affine in M_k: sum c L M_k R + const = 0.
        let mut system: Vec<IntMatrix> = Vec::new();
        let mut rhs: Vec<BigInt> = Vec::new();
        for r in constrained {
            let (ru, rv) = (rep.ranks[r.source], rep.ranks[r.target]);
            let mut lin = IntMatrix::zeros(rs * rt, ru * rv);
            let mut constant = IntMatrix::zeros(ru, rv);
            for (c, p) in &r.terms {
                match p.arrows.iter().position(|&a| a == k) {
                    None => constant = &constant + &rep.eval_path(p).scale(c),
                    Some(pos) => {
                        let left = eval_arrows(&rep, p.source, &p.arrows[..pos]);
                        let right = eval_arrows(&rep, arr.target, &p.arrows[pos + 1..]);
                        for pi in 0..rs {
                            for qi in 0..rt {
                                for i in 0..ru {
                                    let l = left.get(i, pi);
                                    if l.is_zero() {
                                        continue;
                                    }
                                    for j in 0..rv {
                                        let v = c * l * right.get(qi, j);
                                        let cur = lin.get(pi * rt + qi, i * rv + j) + v;
                                        lin.set(pi * rt + qi, i * rv + j, cur);
                                    }
                                }
                            }
                        }
                    }
                }
            }
            system.push(lin);
            rhs.extend(constant.entries().iter().map(|x| -x));
        }
        let a = system
            .into_iter()
            .reduce(|acc, m| acc.hstack(&m).expect("row counts agree"))
            .expect("at least one constraint");
        let b = IntMatrix::row_vector(rhs);
        let x = solve_left(&a, &b).ok()??;
        let kernel = left_kernel(&a);
        let mut v = x.row(0).to_vec();
        for i in 0..kernel.rows() {
            let t: i64 = rng.gen_range(-1..=1);
            if t != 0 {
                for (e, kv) in v.iter_mut().zip(kernel.row(i)) {
                    *e += kv * t;
                }
            }
        }
        rep.matrices[k] = IntMatrix::new(rs, rt, v).expect("shape is consistent");
    }
    rep.check(cat).then_some(rep)
}

fn eval_arrows(rep: &Representation, start: VertexId, arrows: &[ArrowId]) -> IntMatrix {
    arrows
        .iter()
        .fold(IntMatrix::identity(rep.ranks[start]), |acc, &a| &acc * &rep.matrices[a])
}

/// One comparison between a construction in `Adel` and its evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCheck {
    pub name: String,
    pub ok: bool,
}

/// Evaluation commutes with kernels, cokernels and images of `phi`
/// (compared via Smith invariants).
pub fn oracle_compare(rep: &Representation, adel: &Adel, phi: &AdelMorphism) -> Result<Vec<OracleCheck>> {
    let cat = adel.cat();
    let f = eval_morphism(rep, cat, phi)?;
    let ker = adel.kernel(phi)?;
    let coker = adel.cokernel(phi)?;
    let image = adel.kernel(&coker.proj)?;
    let inv = |x: &AdelObject| eval_object(rep, cat, x).map(|e| e.group.invariants());
    Ok(vec![
        OracleCheck {
            name: "kernel".into(),
            ok: inv(&ker.object)? == f.kernel().invariants(),
        },
        OracleCheck {
            name: "cokernel".into(),
            ok: inv(&coker.object)? == f.cokernel().invariants(),
        },
        OracleCheck {
            name: "image".into(),
            ok: inv(&image.object)? == f.image().invariants(),
        },
    ])
}

/// If `phi, psi` is exact in `Adel`, its evaluation must be exact.
pub fn oracle_exactness(
    rep: &Representation,
    adel: &Adel,
    phi: &AdelMorphism,
    psi: &AdelMorphism,
) -> Result<OracleCheck> {
    let cat = adel.cat();
    let exact_adel = adel.is_exact(phi, psi)?;
    let f = eval_morphism(rep, cat, phi)?;
    let g = eval_morphism(rep, cat, psi)?;
    let exact_eval = crate::intlinalg::is_exact_at(&f, &g)?;
    Ok(OracleCheck {
        name: "exactness transport".into(),
        ok: !exact_adel || exact_eval,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    fn snake_rep(gamma: i64) -> Representation {
        let cat = catalog::snake();
        Representation::new(&cat, vec![1, 1, 1, 1], vec![m(&[&[2]]), m(&[&[1]]), m(&[&[gamma]])]).unwrap()
    }

    #[test]
    fn relation_check() {
        let cat = catalog::snake();
        assert!(Representation::zero(&cat, vec![2, 1, 0, 3]).check(&cat));
        assert!(snake_rep(0).check(&cat));
        assert!(!snake_rep(1).check(&cat));
        assert!(Representation::new(&cat, vec![1, 1, 1, 1], vec![m(&[&[1, 1]]), m(&[&[1]]), m(&[&[1]])]).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let cat = catalog::snake();
        let adel = Adel::new(cat.clone());
        let rep = Representation::new(&cat, vec![1, 3, 1, 1], vec![
            m(&[&[2, 0, 0]]),
            m(&[&[0], &[0], &[0]]),
            m(&[&[0]]),
        ])
        .unwrap();
        let b = adel.emb_object(&TupleObject::single(1));
        assert_eq!(eval_object(&rep, &cat, &b).unwrap().group.invariants().describe(), "Z^3");
        let zero = adel.emb_object(&TupleObject::zero());
        assert!(eval_object(&rep, &cat, &zero).unwrap().group.is_trivial());
        let al = MatMorphism::single(cat.lin_from_path(&cat.arrow_path("alpha").unwrap()));
        let coka = adel.cokernel(&adel.emb(&al)).unwrap().object;
        assert_eq!(eval_object(&rep, &cat, &coka).unwrap().group.invariants().describe(), "Z^2 + Z/2");
        let rep1 = snake_rep(0);
        assert_eq!(eval_object(&rep1, &cat, &coka).unwrap().group.invariants().describe(), "Z/2");
    }

    #[test]
    fn morphism_evaluation_is_functorial() {
        let cat = catalog::snake();
        let adel = Adel::new(cat.clone());
        let rep = snake_rep(0);
        let al = MatMorphism::single(cat.lin_from_path(&cat.arrow_path("alpha").unwrap()));
        let p = adel.cokernel(&adel.emb(&al)).unwrap().proj;
        let id = adel.identity(p.source());
        let fid = eval_morphism(&rep, &cat, &id).unwrap();
        assert!(fid.equals(&GroupHom::identity(&fid.source)));
        let comp = adel.compose(&adel.emb(&al), &p).unwrap();
        assert!(eval_morphism(&rep, &cat, &comp).unwrap().is_zero());
        let fp = eval_morphism(&rep, &cat, &p).unwrap();
        assert!(fp.is_surjective());
    }

    #[test]
    fn random_representations_are_valid() {
        for cat in [catalog::snake(), catalog::five_lemma(), catalog::two_torsion_arrow()] {
            let mut rng = ChaCha8Rng::seed_from_u64(7);
            let mut nonzero = 0;
            for _ in 0..20 {
                let rep = random_representation(&cat, &mut rng, 3);
                assert!(rep.check(&cat));
                if rep.matrices.iter().any(|m| !m.is_zero()) {
                    nonzero += 1;
                }
            }
            if cat.name() != "z2" {
                assert!(nonzero > 10);
            }
        }
    }

    #[test]
    fn oracle_on_identity_and_dowker() {
        let cat = catalog::snake();
        let adel = Adel::new(cat.clone());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let arrow = |l: &str| MatMorphism::single(cat.lin_from_path(&cat.arrow_path(l).unwrap()));
        let d = adel.connecting_homomorphism(&arrow("alpha"), &arrow("beta"), &arrow("gamma")).unwrap();
        for _ in 0..20 {
            let rep = random_representation(&cat, &mut rng, 3);
            for phi in [adel.identity(d.source()), d.clone()] {
                for check in oracle_compare(&rep, &adel, &phi).unwrap() {
                    assert!(check.ok, "{}", check.name);
                }
            }
        }
    }
}
