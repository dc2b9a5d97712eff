//! Row-style Hermite normal form and everything built on it: integer
//! system solving, left kernels and lattice bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Result of [`hnf`]: `u * m == h` with `u` unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Column index of the pivot of each nonzero row of `h`.
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// The nonzero rows of `h`, a basis of the row lattice of the input.
    pub fn basis(&self) -> IntMatrix {
        self.h.select_rows(0..self.rank())
    }
}

/// Computes the row Hermite normal form `H = U * M`.
///
/// `H` is in row echelon form with positive pivots, every entry above a
/// pivot lies in `[0, pivot)`, and zero rows sit at the bottom. Under these
/// conventions `H` depends only on the row lattice of `M`.
pub fn hnf(m: &IntMatrix) -> HermiteForm {
    echelon(m, true)
}

/// The unique HNF basis of the row lattice of `m`, skipping the transform.
pub fn lattice_basis(m: &IntMatrix) -> IntMatrix {
    echelon(m, false).basis()
}

fn echelon(m: &IntMatrix, track: bool) -> HermiteForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut h = m.clone();
    let mut u = if track {
        IntMatrix::identity(rows)
    } else {
        IntMatrix::zeros(0, 0)
    };
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..cols {
        if pr == rows {
            break;
        }
        loop {
            // Euclid on the column: move the smallest nonzero entry up and
            // reduce the rest modulo it until only the pivot survives.
            let best = (pr..rows)
                .filter(|&r| !h.get(r, c).is_zero())
                .min_by(|&x, &y| h.get(x, c).abs().cmp(&h.get(y, c).abs()));
            let Some(best) = best else { break };
            h.swap_rows(pr, best);
            if track {
                u.swap_rows(pr, best);
            }
            let mut clean = true;
            for r in pr + 1..rows {
                if h.get(r, c).is_zero() {
                    continue;
                }
                let q = h.get(r, c).div_floor(h.get(pr, c));
                h.sub_row_multiple(r, pr, &q);
                if track {
                    u.sub_row_multiple(r, pr, &q);
                }
                if !h.get(r, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.get(pr, c).is_zero() {
            continue;
        }
        if h.get(pr, c).is_negative() {
            h.negate_row(pr);
            if track {
                u.negate_row(pr);
            }
        }
        for r in 0..pr {
            let q = h.get(r, c).div_floor(h.get(pr, c));
            if !q.is_zero() {
                h.sub_row_multiple(r, pr, &q);
                if track {
                    u.sub_row_multiple(r, pr, &q);
                }
            }
        }
        pivots.push(c);
        pr += 1;
    }
    HermiteForm { h, u, pivots }
}

/// Reduces the row vector `v` against an HNF basis (rows of `basis` with
/// the given pivots). Returns the remainder and the quotient coefficients.
pub(crate) fn reduce_against(
    basis: &IntMatrix,
    pivots: &[usize],
    v: &[BigInt],
) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut rem = v.to_vec();
    let mut coeffs = vec![BigInt::zero(); pivots.len()];
    for (i, &p) in pivots.iter().enumerate() {
        let q = rem[p].div_floor(basis.get(i, p));
        if !q.is_zero() {
            for (x, b) in rem.iter_mut().zip(basis.row(i)) {
                if !b.is_zero() {
                    *x -= &q * b;
                }
            }
        }
        coeffs[i] = q;
    }
    (rem, coeffs)
}

/// Solves `X * a == b` over the integers.
///
/// Returns `Ok(None)` exactly when no integer solution exists.
pub fn solve_left(a: &IntMatrix, b: &IntMatrix) -> Result<Option<IntMatrix>> {
    if a.cols() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "solve_left: A has {} columns, B has {}",
            a.cols(),
            b.cols()
        )));
    }
    let form = hnf(a);
    let rank = form.rank();
    let mut y = IntMatrix::zeros(b.rows(), rank);
    for k in 0..b.rows() {
        let mut res = b.row(k).to_vec();
        for (i, &p) in form.pivots.iter().enumerate() {
            let piv = form.h.get(i, p);
            let (q, r) = res[p].div_rem(piv);
            if !r.is_zero() {
                return Ok(None);
            }
            if !q.is_zero() {
                for (x, hv) in res.iter_mut().zip(form.h.row(i)) {
                    if !hv.is_zero() {
                        *x -= &q * hv;
                    }
                }
            }
            y.set(k, i, q);
        }
        if res.iter().any(|x| !x.is_zero()) {
            return Ok(None);
        }
    }
    let top = form.u.select_rows(0..rank);
    Ok(Some(&y * &top))
}

/// HNF basis of the lattice `{x : x * m == 0}`.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let form = hnf(m);
    let k = form.u.select_rows(form.rank()..m.rows());
    lattice_basis(&k)
}

/// Expresses each row of `v` in the coordinates of the basis rows of
/// `basis`, or `None` if some row is outside the lattice.
pub fn coordinates(basis: &IntMatrix, v: &IntMatrix) -> Result<Option<IntMatrix>> {
    solve_left(basis, v)
}
