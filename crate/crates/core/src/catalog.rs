//! The path categories used by the provers and the test suites.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::addclosure::{MatMorphism, TupleObject};
use crate::error::{Error, Result};
use crate::quivercat::{LinMorphism, Path, PathCategory, Quiver, Relation};

/// Builds `sum c_i * p_i = 0` from labelled paths.
pub fn relation(q: &Quiver, terms: &[(i64, &[&str])]) -> Result<Relation> {
    let terms = terms
        .iter()
        .map(|(c, labels)| Ok((BigInt::from(*c), q.path_from_labels(labels)?)))
        .collect::<Result<Vec<_>>>()?;
    Relation::new(terms)
}

/// Tuple of named vertices.
pub fn tuple(cat: &PathCategory, names: &[&str]) -> Result<TupleObject> {
    Ok(TupleObject::new(
        names.iter().map(|n| cat.vertex(n)).collect::<Result<_>>()?,
    ))
}

/// One matrix entry: `0`, or `[-][n*]id`, `[-]n`, `[-][n*]l1*l2*...`.
fn entry(cat: &PathCategory, a: usize, b: usize, text: &str) -> Result<LinMorphism> {
    let t = text.trim();
    let (mut coeff, t) = match t.strip_prefix('-') {
        Some(rest) => (-BigInt::one(), rest.trim()),
        None => (BigInt::one(), t),
    };
    let mut factors: Vec<&str> = t.split('*').map(str::trim).collect();
    if let Ok(n) = factors[0].parse::<BigInt>() {
        coeff *= n;
        factors.remove(0);
    }
    if coeff.is_zero() {
        return Ok(cat.lin_zero(a, b));
    }
    let path = match factors.as_slice() {
        [] | ["id"] if a == b => Path::identity(a),
        [] | ["id"] => {
            return Err(Error::EndpointMismatch(format!(
                "identity entry {text} between distinct vertices"
            )))
        }
        labels => cat.quiver().path_from_labels(labels)?,
    };
    cat.lin_from_terms(a, b, &[(coeff, path)])
}

/// Matrix `source -> target` from entry strings, one row per source summand.
pub fn matrix(
    cat: &PathCategory,
    source: &[&str],
    target: &[&str],
    rows: &[&[&str]],
) -> Result<MatMorphism> {
    let (s, t) = (tuple(cat, source)?, tuple(cat, target)?);
    if rows.len() != s.len() || rows.iter().any(|r| r.len() != t.len()) {
        return Err(Error::DimensionMismatch(format!(
            "expected a {}x{} matrix",
            s.len(),
            t.len()
        )));
    }
    let entries = rows
        .iter()
        .zip(&s.summands)
        .map(|(row, &a)| {
            row.iter()
                .zip(&t.summands)
                .map(|(e, &b)| entry(cat, a, b, e))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    MatMorphism::new(s, t, entries)
}

/// `a --alpha--> b --beta--> c --gamma--> d` with `alpha * beta * gamma = 0`.
pub fn snake() -> PathCategory {
    let q = Quiver::new(
        &["a", "b", "c", "d"],
        &[("alpha", "a", "b"), ("beta", "b", "c"), ("gamma", "c", "d")],
    )
    .expect("snake quiver is valid");
    let r = relation(&q, &[(1, &["alpha", "beta", "gamma"])]).expect("valid relation");
    PathCategory::new("snake", q, vec![r]).expect("valid category")
}

fn five_quiver() -> Quiver {
    Quiver::new(
        &["i", "a", "b", "c", "f", "g", "h", "j"],
        &[
            ("lambda", "i", "a"),
            ("alpha", "a", "b"),
            ("beta", "b", "c"),
            ("epsilon", "b", "f"),
            ("zeta", "c", "g"),
            ("iota", "f", "g"),
            ("kappa", "g", "h"),
            ("mu", "h", "j"),
        ],
    )
    .expect("five lemma quiver is valid")
}

fn five_base_relations(q: &Quiver) -> Vec<Relation> {
    vec![
        relation(q, &[(1, &["alpha", "beta"])]).expect("valid relation"),
        relation(q, &[(1, &["iota", "kappa"])]).expect("valid relation"),
        relation(q, &[(1, &["beta", "zeta"]), (-1, &["epsilon", "iota"])]).expect("valid relation"),
    ]
}

/// The universal refined five lemma category: `alpha * beta = 0`,
/// `iota * kappa = 0`, `beta * zeta = epsilon * iota`, together with
/// `lambda * alpha * epsilon = 0` and `zeta * kappa * mu = 0`. The last two
/// make the bottom-left and top-right maps well defined.
pub fn five_lemma() -> PathCategory {
    let q = five_quiver();
    let mut rels = five_base_relations(&q);
    rels.push(relation(&q, &[(1, &["lambda", "alpha", "epsilon"])]).expect("valid relation"));
    rels.push(relation(&q, &[(1, &["zeta", "kappa", "mu"])]).expect("valid relation"));
    PathCategory::new("five", q, rels).expect("valid category")
}

/// The same quiver with only the three commutativity/complex relations.
pub fn five_lemma_three_relations() -> PathCategory {
    let q = five_quiver();
    let rels = five_base_relations(&q);
    PathCategory::new("five3", q, rels).expect("valid category")
}

/// `x: a -> b` with `2 x = 0`, so `Hom(a, b) = Z/2`.
pub fn two_torsion_arrow() -> PathCategory {
    let q = Quiver::new(&["a", "b"], &[("x", "a", "b")]).expect("valid quiver");
    let r = relation(&q, &[(2, &["x"])]).expect("valid relation");
    PathCategory::new("z2", q, vec![r]).expect("valid category")
}
