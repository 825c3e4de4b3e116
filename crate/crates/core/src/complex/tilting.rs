//! Partial tilting test and the generation surrogate.

use alloc::vec;
use alloc::vec::Vec;

use super::{hom_dim, ProjComplex};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Shifts `n` for which `Hom_K(c, d[n])` can be nonzero:
/// `[min(d) - max(c), max(d) - min(c)]`. `None` if either complex is zero.
pub fn shift_range(c: &ProjComplex, d: &ProjComplex) -> Option<(i32, i32)> {
    let (cmin, cmax) = (c.min_degree()?, c.max_degree()?);
    let (dmin, dmax) = (d.min_degree()?, d.max_degree()?);
    Some((dmin - cmax, dmax - cmin))
}

/// True iff `Hom_K(X, Y[n]) = 0` for all members `X`, `Y` and all `n != 0`.
pub fn is_partial_tilting(family: &[ProjComplex]) -> bool {
    first_violation(family).is_none()
}

/// A witness `(i, j, n)` with `Hom_K(family[i], family[j][n]) != 0`, `n != 0`.
pub fn first_violation(family: &[ProjComplex]) -> Option<(usize, usize, i32)> {
    for (i, x) in family.iter().enumerate() {
        for (j, y) in family.iter().enumerate() {
            let Some((lo, hi)) = shift_range(x, y) else { continue };
            for n in lo..=hi {
                if n != 0 && hom_dim(x, y, n) != 0 {
                    return Some((i, j, n));
                }
            }
        }
    }
    None
}

/// `chi[i][j] = sum_n (-1)^n * (multiplicity of P_{j+1} in degree n of family[i])`.
pub fn euler_matrix(family: &[ProjComplex], e: u32) -> Vec<Vec<i64>> {
    family
        .iter()
        .map(|c| {
            let mut row = vec![0i64; e as usize];
            for (&n, t) in c.terms() {
                let s = if n.rem_euclid(2) == 0 { 1 } else { -1 };
                for &p in t {
                    row[p as usize - 1] += s;
                }
            }
            row
        })
        .collect()
}

/// Heuristic stand-in for "the family generates the homotopy category":
/// exactly `e` members and a unimodular Euler matrix. Not a proof.
pub fn generates_heuristically(family: &[ProjComplex], e: u32) -> bool {
    if family.len() != e as usize {
        return false;
    }
    let chi = euler_matrix(family, e);
    let rows: Vec<Vec<Scalar>> = chi.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect();
    let det = Matrix::from_rows(&rows, e as usize).determinant();
    det.is_one() || (-det).is_one()
}
