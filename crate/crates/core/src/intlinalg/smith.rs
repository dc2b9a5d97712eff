use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use super::{hermite::lattice_basis, IntMatrix};

/// Isomorphism type of `Z^cols / rowspan(M)`: cyclic factors `Z/d_i` with
/// `1 < d_1 | d_2 | ...` plus a free part. Equal invariants mean isomorphic
/// groups.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SmithInvariants {
    #[serde(serialize_with = "serialize_bigints")]
    pub factors: Vec<BigInt>,
    pub free_rank: usize,
}

fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&x.to_string())?;
    }
    seq.end()
}

impl SmithInvariants {
    /// The nontrivial torsion coefficients (factors greater than one).
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.factors.iter().all(One::is_one)
    }

    /// Invariants of the direct sum of two groups.
    pub fn direct_sum(&self, other: &SmithInvariants) -> SmithInvariants {
        let n = self.factors.len() + other.factors.len();
        let mut diag = IntMatrix::zeros(n, n);
        for (i, d) in self.factors.iter().chain(&other.factors).enumerate() {
            diag.set(i, i, d.clone());
        }
        let mut s = snf(&diag);
        s.free_rank += self.free_rank + other.free_rank;
        s
    }

    /// Compact notation such as `Z^2 + Z/2 + Z/6`; `0` for the trivial group.
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".into());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion().iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Smith invariants of the abelian group presented by the rows of `m`.
///
/// Alternates row and column Hermite passes until the matrix is diagonal,
/// then enforces the divisibility chain with gcd/lcm swaps.
pub fn snf(m: &IntMatrix) -> SmithInvariants {
    let mut cur = lattice_basis(m);
    loop {
        let t = lattice_basis(&cur.transpose());
        cur = t.transpose();
        if is_diagonal(&cur) {
            break;
        }
        cur = lattice_basis(&cur);
        if is_diagonal(&cur) {
            break;
        }
    }
    let mut diag: Vec<BigInt> = (0..cur.rows().min(cur.cols()))
        .map(|i| cur.get(i, i).clone())
        .filter(|d| !d.is_zero())
        .collect();
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let g = diag[i].gcd(&diag[j]);
            if g != diag[i] {
                let l = diag[i].lcm(&diag[j]);
                diag[i] = g;
                diag[j] = l;
            }
        }
    }
    let free_rank = m.cols() - diag.len();
    diag.retain(|d| !d.is_one());
    SmithInvariants {
        factors: diag,
        free_rank,
    }
}

fn is_diagonal(m: &IntMatrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m.get(i, j).is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn identity_and_free() {
        let s = snf(&IntMatrix::identity(2));
        assert!(s.factors.is_empty());
        assert_eq!(s.free_rank, 0);
        assert!(s.is_trivial());
        let z = snf(&IntMatrix::zeros(1, 1));
        assert_eq!(z.free_rank, 1);
        assert!(z.factors.is_empty());
        let none = snf(&IntMatrix::zeros(0, 3));
        assert_eq!(none.free_rank, 3);
    }

    #[test]
    fn coprime_diagonal() {
        // Oracle by hand: row/column operations turn diag(2,3) into diag(1,6).
        let s = snf(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.factors, ints(&[6]));
        assert_eq!(s.describe(), "Z/6");
    }

    #[test]
    fn non_diagonal_input() {
        let s = snf(&IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(s.factors, ints(&[2, 6, 12]));
        assert_eq!(s.free_rank, 0);
    }

    #[test]
    fn direct_sum_merges() {
        let a = snf(&IntMatrix::from_i64(&[&[2]]));
        let b = snf(&IntMatrix::from_i64(&[&[3, 0]]));
        let s = a.direct_sum(&b);
        assert_eq!(s.torsion(), ints(&[6]));
        assert_eq!(s.free_rank, 1);
    }
}
