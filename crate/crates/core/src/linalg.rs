//! Small dense complex helpers shared by the physics modules.

use nalgebra::{DMatrix, Dim, Matrix, RawStorage};

use crate::C64;

/// Largest entrywise modulus of `a - b`.
pub fn max_abs_diff<R: Dim, C: Dim, S1, S2>(a: &Matrix<C64, R, C, S1>, b: &Matrix<C64, R, C, S2>) -> f64
where
    S1: RawStorage<C64, R, C>,
    S2: RawStorage<C64, R, C>,
{
    assert_eq!(a.shape(), b.shape(), "shape mismatch");
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Rotates `v` by the global phase that makes its first entry with modulus
/// above `tol` (in canonical order) positive real.
pub fn canonical_phase(v: &[C64], tol: f64) -> Vec<C64> {
    match v.iter().find(|x| x.norm() > tol) {
        Some(lead) => {
            let rot = lead.conj() / lead.norm();
            v.iter().map(|x| x * rot).collect()
        }
        None => v.to_vec(),
    }
}

/// Equality up to a global phase under the canonical-phase rule.
pub fn equal_up_to_phase(a: &[C64], b: &[C64], tol: f64) -> bool {
    a.len() == b.len()
        && canonical_phase(a, tol)
            .iter()
            .zip(canonical_phase(b, tol).iter())
            .all(|(x, y)| (x - y).norm() <= tol)
}

pub fn normalize(v: &[C64]) -> Vec<C64> {
    let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    v.iter().map(|x| x / norm).collect()
}

/// `|<a|b>|^2` for normalized vectors.
pub fn fidelity(a: &[C64], b: &[C64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum::<C64>().norm_sqr()
}

pub fn hermiticity_residual(m: &DMatrix<C64>) -> f64 {
    max_abs_diff(m, &m.adjoint())
}

/// Smallest eigenvalue of the Hermitian part of `m`.
pub fn min_eigenvalue(m: &DMatrix<C64>) -> f64 {
    if m.nrows() == 0 {
        return 0.0;
    }
    let h = (m + m.adjoint()) * C64::new(0.5, 0.0);
    h.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min)
}

/// Matrix of `[re, im]` pairs, the on-disk form of complex matrices.
pub fn to_pairs<R: Dim, C: Dim, S: RawStorage<C64, R, C>>(m: &Matrix<C64, R, C, S>) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

pub fn vec_to_pairs(v: &[C64]) -> Vec<[f64; 2]> {
    v.iter().map(|x| [x.re, x.im]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phase_rule_ignores_global_phase() {
        let a = [C64::new(0.6, 0.0), C64::new(0.0, 0.8)];
        let phase = C64::from_polar(1.0, 1.234);
        let b: Vec<_> = a.iter().map(|x| x * phase).collect();
        assert!(equal_up_to_phase(&a, &b, 1e-12));
        let c = [C64::new(0.6, 0.0), C64::new(0.0, -0.8)];
        assert!(!equal_up_to_phase(&a, &c, 1e-12));
    }

    #[test]
    fn phase_rule_skips_leading_zeros() {
        let a = [C64::new(0.0, 0.0), C64::new(0.0, 1.0)];
        let b = [C64::new(0.0, 0.0), C64::new(-1.0, 0.0)];
        assert!(equal_up_to_phase(&a, &b, 1e-12));
    }

    #[test]
    fn min_eigenvalue_of_projector() {
        let m = DMatrix::from_row_slice(
            2,
            2,
            &[
                C64::new(0.5, 0.0),
                C64::new(0.5, 0.0),
                C64::new(0.5, 0.0),
                C64::new(0.5, 0.0),
            ],
        );
        assert!(min_eigenvalue(&m).abs() < 1e-12);
    }
}
