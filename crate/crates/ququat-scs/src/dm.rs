//! Reduced density matrices in the `{|alpha_j>}` basis and the analytic
//! partial trace used for Bob's conditional states.

use nalgebra::Matrix4;
use num_complex::Complex64 as C64;

use crate::algebra::{coherent_overlap, i_pow, CoherentSuperposition};
use crate::basis::{AlphaBasis, QuquatVector};
use crate::error::{Error, Result};

/// A 4x4 density matrix in the ordered basis `{|alpha_0>, .., |alpha_3>}`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix4(pub Matrix4<C64>);

impl DensityMatrix4 {
    pub fn trace(&self) -> f64 {
        (self.0[(0, 0)] + self.0[(1, 1)] + self.0[(2, 2)] + self.0[(3, 3)]).re
    }

    /// `Tr(rho^2) / Tr(rho)^2`; 1 for pure states.
    pub fn purity(&self) -> f64 {
        let t = self.trace();
        if t <= 0.0 {
            return 0.0;
        }
        let sq = self.0 * self.0;
        (sq[(0, 0)] + sq[(1, 1)] + sq[(2, 2)] + sq[(3, 3)]).re / (t * t)
    }

    pub fn normalized(&self) -> Result<Self> {
        let t = self.trace();
        if t <= 1e-300 {
            return Err(Error::UndefinedBobState);
        }
        Ok(Self(self.0 * C64::new(1.0 / t, 0.0)))
    }

    pub fn hermiticity_defect(&self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                d = d.max((self.0[(i, j)] - self.0[(j, i)].conj()).norm());
            }
        }
        d
    }

    /// Smallest eigenvalue of the (Hermitian) matrix.
    pub fn min_eigenvalue(&self) -> f64 {
        let herm = (self.0 + self.0.adjoint()) * C64::new(0.5, 0.0);
        let eig = nalgebra::linalg::SymmetricEigen::new(herm);
        eig.eigenvalues.iter().fold(f64::INFINITY, |m, &e| m.min(e))
    }

    /// `<v| rho |v>` for a pure probe in the `{|alpha_j>}` basis.
    pub fn expectation(&self, v: &QuquatVector) -> f64 {
        let mut acc = C64::new(0.0, 0.0);
        for j in 0..4 {
            for k in 0..4 {
                acc += v.0[j].conj() * self.0[(j, k)] * v.0[k];
            }
        }
        acc.re
    }

    /// Dominant eigenvector (for near-pure states), with the first component
    /// of nonnegligible magnitude made real positive.
    pub fn dominant_eigenvector(&self) -> QuquatVector {
        let herm = (self.0 + self.0.adjoint()) * C64::new(0.5, 0.0);
        let eig = nalgebra::linalg::SymmetricEigen::new(herm);
        let mut imax = 0;
        for i in 1..4 {
            if eig.eigenvalues[i] > eig.eigenvalues[imax] {
                imax = i;
            }
        }
        let col = eig.eigenvectors.column(imax);
        let mut v = [col[0], col[1], col[2], col[3]];
        let norm: f64 = v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        let lead = v.iter().find(|c| c.norm() > 1e-8 * norm).copied().unwrap_or(v[0]);
        let phase = lead / lead.norm();
        for c in v.iter_mut() {
            *c /= phase;
        }
        QuquatVector(v)
    }
}

/// Classify a coherent amplitude as `i^p alpha`; errors outside that family.
pub(crate) fn phase_class(amp: C64, alpha: C64) -> Result<i64> {
    let tol = 1e-9 * alpha.norm().max(1.0);
    for p in 0..4_i64 {
        if (amp - i_pow(p) * alpha).norm() < tol {
            return Ok(p);
        }
    }
    Err(Error::UnsupportedSupport(format!(
        "amplitude {amp} is not i^p * {alpha} for any p"
    )))
}

/// Unnormalized cross density matrix `Tr_rest |s1><s2|` of `keep_mode` in the
/// `{|alpha_j>}` basis.
///
/// Every kept-mode amplitude must lie in `{alpha, i alpha, -alpha, -i alpha}`;
/// the decomposition `|i^p alpha> = (1/2) sum_j r_j i^{pj} |alpha_j>` is exact
/// on that support, so the reduced matrix is exact too. The traced-out modes
/// enter through their analytic Gram matrix.
pub fn dm4_cross(
    s1: &CoherentSuperposition,
    s2: &CoherentSuperposition,
    keep_mode: usize,
    basis: &AlphaBasis,
) -> Result<DensityMatrix4> {
    if s1.mode_count() != s2.mode_count() {
        return Err(Error::ArityMismatch { left: s1.mode_count(), right: s2.mode_count() });
    }
    if keep_mode >= s1.mode_count() {
        return Err(Error::InvalidMode { index: keep_mode, mode_count: s1.mode_count() });
    }
    let r = basis.alpha_block.r;
    // per-term decomposition row D[t][j] = r_j i^{p_t j} / 2
    let decomp = |s: &CoherentSuperposition| -> Result<Vec<[C64; 4]>> {
        s.terms()
            .iter()
            .map(|t| {
                let p = phase_class(t.amps[keep_mode], basis.alpha)?;
                let mut row = [C64::new(0.0, 0.0); 4];
                for (j, rj) in r.iter().enumerate() {
                    row[j] = i_pow(p * j as i64) * (rj / 2.0);
                }
                Ok(row)
            })
            .collect()
    };
    let d1 = decomp(s1)?;
    let d2 = decomp(s2)?;
    let mut rho = Matrix4::<C64>::zeros();
    for (t1, row1) in s1.terms().iter().zip(&d1) {
        for (t2, row2) in s2.terms().iter().zip(&d2) {
            // <rest_2 | rest_1>
            let mut ov = t1.coeff * t2.coeff.conj();
            for m in 0..s1.mode_count() {
                if m != keep_mode {
                    ov *= coherent_overlap(t2.amps[m], t1.amps[m]);
                }
            }
            for j in 0..4 {
                for k in 0..4 {
                    rho[(j, k)] += ov * row1[j] * row2[k].conj();
                }
            }
        }
    }
    Ok(DensityMatrix4(rho))
}

/// Unnormalized reduced density matrix `Tr_rest |s><s|` of `keep_mode`.
pub fn trace_out_to_dm4(
    s: &CoherentSuperposition,
    keep_mode: usize,
    basis: &AlphaBasis,
) -> Result<DensityMatrix4> {
    dm4_cross(s, s, keep_mode, basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::make_basis;

    #[test]
    fn product_state_traces_to_projector_onto_coherent_coefficients() {
        // |chi>_A (x) |alpha>_B -> pure projector with Eq-(3) coefficients
        let b = make_basis(C64::new(1.1, 0.0)).unwrap();
        let chi = CoherentSuperposition::product(&[C64::new(0.4, 0.2)]);
        let bob = CoherentSuperposition::product(&[b.alpha]);
        let joint = chi.tensor(&bob);
        let rho = trace_out_to_dm4(&joint, 1, &b).unwrap().normalized().unwrap();
        assert!((rho.purity() - 1.0).abs() < 1e-12);
        let r = b.r();
        let c = QuquatVector([
            C64::new(r[0] / 2.0, 0.0),
            C64::new(r[1] / 2.0, 0.0),
            C64::new(r[2] / 2.0, 0.0),
            C64::new(r[3] / 2.0, 0.0),
        ]);
        assert!((rho.expectation(&c) - 1.0).abs() < 1e-12);
        assert!(rho.hermiticity_defect() < 1e-12);
        assert!(rho.min_eigenvalue() > -1e-12);
    }

    #[test]
    fn unsupported_bob_amplitude_errors() {
        let b = make_basis(C64::new(1.0, 0.0)).unwrap();
        let s = CoherentSuperposition::product(&[C64::new(0.5, 0.0), C64::new(0.3, 0.0)]);
        assert!(matches!(
            trace_out_to_dm4(&s, 1, &b),
            Err(Error::UnsupportedSupport(_))
        ));
    }
}
