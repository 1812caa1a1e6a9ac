//! The ququat number system: the orthonormal multi-photon states `|alpha_j>`,
//! their normalization constants, the vacuum-separated expansion constants,
//! and the encodings between epsilon- and c-coefficients.

use num_complex::Complex64 as C64;

use crate::algebra::{i_pow, CoherentSuperposition, CoherentTerm};
use crate::error::{Error, Result};

/// Smallest coherent amplitude magnitude the basis supports; below this the
/// `|alpha_j>` normalizers degenerate.
pub const MIN_ALPHA_ABS: f64 = 0.1;

/// Normalization constants for one amplitude magnitude.
///
/// `n[j]` are the `|alpha_j>` normalizers, `r[j] = 1/(2 n[j])`, `n4` is the
/// normalizer of the vacuum-orthogonal `|alpha_4>`, and `a` are the
/// coefficients of the vacuum-separated expansion
/// `|alpha> = a0|0> + a1|a_1> + a2|a_2> + a3|a_3> + a4|a_4>`.
#[derive(Debug, Clone, Copy)]
pub struct BlockConsts {
    pub x: f64,
    pub n: [f64; 4],
    pub r: [f64; 4],
    pub n4: f64,
    pub a: [f64; 5],
    /// `r0^2 - 4x`, evaluated cancellation-free.
    pub r0_sq_minus_4x: f64,
}

impl BlockConsts {
    /// Constants for squared amplitude magnitude `mag2 = |gamma|^2`.
    pub fn from_mag2(mag2: f64) -> Self {
        let t = mag2;
        let x = (-t).exp();
        let r = [
            (1.0 + x * x + 2.0 * x * t.cos()).sqrt(),
            (1.0 - x * x + 2.0 * x * t.sin()).sqrt(),
            (1.0 + x * x - 2.0 * x * t.cos()).sqrt(),
            (1.0 - x * x - 2.0 * x * t.sin()).sqrt(),
        ];
        let n = [1.0 / (2.0 * r[0]), 1.0 / (2.0 * r[1]), 1.0 / (2.0 * r[2]), 1.0 / (2.0 * r[3])];
        // r0^2 - 4x = (1-x)^2 - 4x sin^2(t/2); the rewritten form avoids the
        // catastrophic cancellation of 1 + x^2 + 2x cos t - 4x at small t.
        let one_minus_x = -(-t).exp_m1();
        let s = (0.5 * t).sin();
        let r0_sq_minus_4x = one_minus_x * one_minus_x - 4.0 * x * s * s;
        let a4 = r0_sq_minus_4x.max(0.0).sqrt() / 2.0;
        let n4 = if a4 > 0.0 { 1.0 / (4.0 * a4) } else { f64::INFINITY };
        let a = [x.sqrt(), r[1] / 2.0, r[2] / 2.0, r[3] / 2.0, a4];
        Self { x, n, r, n4, a, r0_sq_minus_4x }
    }
}

/// Per-`|alpha|` constants for the ququat basis, plus the same constants for
/// the beam-splitter half-amplitude `beta = (1+i) alpha / 2`.
#[derive(Debug, Clone)]
pub struct AlphaBasis {
    pub alpha: C64,
    pub beta: C64,
    pub alpha_block: BlockConsts,
    pub beta_block: BlockConsts,
}

/// Build the basis constants for a coherent amplitude.
///
/// Errors with [`Error::Singularity`] for `|alpha| < 0.1`, where the odd-part
/// normalizers diverge.
pub fn make_basis(alpha: C64) -> Result<AlphaBasis> {
    let abs = alpha.norm();
    if !abs.is_finite() || abs < MIN_ALPHA_ABS {
        return Err(Error::Singularity {
            alpha_abs: abs,
            reason: format!("|alpha| must be at least {MIN_ALPHA_ABS}"),
        });
    }
    let beta = alpha * C64::new(0.5, 0.5);
    Ok(AlphaBasis {
        alpha,
        beta,
        alpha_block: BlockConsts::from_mag2(abs * abs),
        beta_block: BlockConsts::from_mag2(abs * abs / 2.0),
    })
}

impl AlphaBasis {
    pub fn x(&self) -> f64 {
        self.alpha_block.x
    }

    pub fn r(&self) -> [f64; 4] {
        self.alpha_block.r
    }

    pub fn a(&self) -> [f64; 5] {
        self.alpha_block.a
    }

    /// The unit-norm multi-photon state `|alpha_j>` (photon numbers `4n+j`).
    pub fn alpha_j_state(&self, j: u8) -> CoherentSuperposition {
        debug_assert!(j < 4);
        let nj = self.alpha_block.n[j as usize];
        let terms = (0..4_i64)
            .map(|k| CoherentTerm {
                coeff: i_pow(-(j as i64) * k) * nj,
                amps: vec![i_pow(k) * self.alpha],
            })
            .collect();
        CoherentSuperposition::new(1, terms).expect("arity 1")
    }

    /// The unit-norm state `|alpha_4>`: photon numbers `4n`, `n > 0`
    /// (the mod-4-zero content of `|alpha>` with the vacuum removed).
    pub fn alpha4_state(&self) -> Result<CoherentSuperposition> {
        let b = &self.alpha_block;
        if b.r0_sq_minus_4x <= 0.0 {
            return Err(Error::Singularity {
                alpha_abs: self.alpha.norm(),
                reason: "a4 would be imaginary (r0^2 - 4x <= 0)".into(),
            });
        }
        let n4 = b.n4;
        let mut terms: Vec<CoherentTerm> = (0..4_i64)
            .map(|k| CoherentTerm { coeff: C64::new(n4, 0.0), amps: vec![i_pow(k) * self.alpha] })
            .collect();
        terms.push(CoherentTerm {
            coeff: C64::new(-4.0 * b.x.sqrt() * n4, 0.0),
            amps: vec![C64::new(0.0, 0.0)],
        });
        CoherentSuperposition::new(1, terms)
    }

    /// The bipartite four-component entangled coherent state `|E_j>`,
    /// normalized numerically.
    pub fn ecs_state(&self, j: u8) -> CoherentSuperposition {
        debug_assert!(j < 4);
        let terms = (0..4_i64)
            .map(|k| CoherentTerm {
                coeff: i_pow(-(j as i64) * k),
                amps: vec![i_pow(k) * self.alpha, i_pow(k) * self.alpha],
            })
            .collect();
        let raw = CoherentSuperposition::new(2, terms).expect("arity 2");
        raw.normalized().expect("ECS has nonzero norm")
    }
}

/// A ququat in the orthonormal basis `{|alpha_0>, .., |alpha_3>}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuquatVector(pub [C64; 4]);

/// Weights of an information state on the non-orthogonal coherent kets
/// `{|alpha>, |i alpha>, |-alpha>, |-i alpha>}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EpsilonCoeffs(pub [C64; 4]);

impl QuquatVector {
    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum()
    }

    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm_sq().sqrt();
        if n < 1e-150 {
            return Err(Error::DegenerateInput("zero ququat vector".into()));
        }
        let inv = C64::new(1.0 / n, 0.0);
        Ok(Self([self.0[0] * inv, self.0[1] * inv, self.0[2] * inv, self.0[3] * inv]))
    }

    /// The information state as a coherent superposition in one mode.
    pub fn to_superposition(&self, basis: &AlphaBasis) -> CoherentSuperposition {
        let mut terms = Vec::with_capacity(4);
        for k in 0..4_i64 {
            let mut coeff = C64::new(0.0, 0.0);
            for j in 0..4_i64 {
                coeff += self.0[j as usize] * basis.alpha_block.n[j as usize] * i_pow(-j * k);
            }
            terms.push(CoherentTerm { coeff, amps: vec![i_pow(k) * basis.alpha] });
        }
        CoherentSuperposition::new(1, terms).expect("arity 1")
    }
}

/// Epsilon weights to orthonormal c-coefficients: `c_j = (r_j/2) sum_k i^{jk} eps_k`.
pub fn encode_info(eps: &EpsilonCoeffs, basis: &AlphaBasis) -> QuquatVector {
    let r = basis.alpha_block.r;
    let mut c = [C64::new(0.0, 0.0); 4];
    for (j, cj) in c.iter_mut().enumerate() {
        let mut s = C64::new(0.0, 0.0);
        for (k, ek) in eps.0.iter().enumerate() {
            s += i_pow((j * k) as i64) * ek;
        }
        *cj = s * (r[j] / 2.0);
    }
    QuquatVector(c)
}

/// Inverse of [`encode_info`]: `eps_k = (1/2) sum_j i^{-jk} c_j / r_j`.
pub fn decode_info(c: &QuquatVector, basis: &AlphaBasis) -> Result<EpsilonCoeffs> {
    if c.norm_sq() < 1e-300 {
        return Err(Error::DegenerateInput("zero ququat vector".into()));
    }
    let r = basis.alpha_block.r;
    let mut eps = [C64::new(0.0, 0.0); 4];
    for (k, ek) in eps.iter_mut().enumerate() {
        let mut s = C64::new(0.0, 0.0);
        for (j, cj) in c.0.iter().enumerate() {
            s += i_pow(-((j * k) as i64)) * cj / r[j];
        }
        *ek = s * 0.5;
    }
    Ok(EpsilonCoeffs(eps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(alpha: f64) -> AlphaBasis {
        make_basis(C64::new(alpha, 0.0)).unwrap()
    }

    #[test]
    fn r1_at_alpha_one() {
        // direct high-precision evaluation of the Eq-form normalizer
        let b = basis(1.0);
        let x = (-1.0_f64).exp();
        let expected = (1.0 - x * x + 2.0 * x * 1.0_f64.sin()).sqrt();
        assert!((b.r()[1] - expected).abs() < 1e-15);
        assert!((b.r()[1] - 1.2181).abs() < 1e-4);
    }

    #[test]
    fn r_squares_sum_to_four() {
        for alpha in [0.5, 1.0, 2.0, 3.2] {
            let b = basis(alpha);
            let s: f64 = b.r().iter().map(|r| r * r).sum();
            assert!((s - 4.0).abs() < 1e-12, "alpha={alpha}: {s}");
        }
    }

    #[test]
    fn a_squares_sum_to_one() {
        for alpha in [0.15, 0.5, 1.0, 2.0, 3.2] {
            let b = basis(alpha);
            let s: f64 = b.a().iter().map(|a| a * a).sum();
            assert!((s - 1.0).abs() < 1e-12, "alpha={alpha}: {s}");
        }
    }

    #[test]
    fn domain_guard() {
        assert!(matches!(make_basis(C64::new(0.05, 0.0)), Err(Error::Singularity { .. })));
        assert!(make_basis(C64::new(0.1, 0.0)).is_ok());
    }

    #[test]
    fn alpha_j_orthonormality() {
        for alpha in [0.5, 1.0, 2.0, 3.2] {
            let b = basis(alpha);
            for j in 0..4u8 {
                for k in 0..4u8 {
                    let ov = b.alpha_j_state(j).inner_product(&b.alpha_j_state(k)).unwrap();
                    let expect = if j == k { 1.0 } else { 0.0 };
                    assert!(
                        (ov - C64::new(expect, 0.0)).norm() < 1e-12,
                        "alpha={alpha} j={j} k={k}: {ov}"
                    );
                }
            }
        }
    }

    #[test]
    fn alpha_j_equals_normalized_projection() {
        let b = basis(1.5);
        let coherent = CoherentSuperposition::product(&[b.alpha]);
        for j in 0..4u8 {
            let proj = coherent.project_mod4(0, j, false).unwrap().normalized().unwrap();
            let ov = proj.inner_product(&b.alpha_j_state(j)).unwrap();
            assert!((ov.norm() - 1.0).abs() < 1e-12, "j={j}");
            // squared norm of the unnormalized projection is (r_j/2)^2
            let p = coherent.project_mod4(0, j, false).unwrap().norm_sq();
            let rj = b.r()[j as usize];
            assert!((p - rj * rj / 4.0).abs() < 1e-13);
        }
    }

    #[test]
    fn alpha4_orthogonal_to_vacuum_and_odd_states() {
        let b = basis(2.0);
        let a4 = b.alpha4_state().unwrap();
        assert!((a4.norm_sq() - 1.0).abs() < 1e-12);
        let vac = CoherentSuperposition::vacuum(1);
        assert!(a4.inner_product(&vac).unwrap().norm() < 1e-12);
        for j in 1..4u8 {
            assert!(a4.inner_product(&b.alpha_j_state(j)).unwrap().norm() < 1e-12);
        }
    }

    #[test]
    fn vacuum_separated_expansion_reassembles_coherent_state() {
        // |alpha> = a0|0> + a1|a1> + a2|a2> + a3|a3> + a4|a4>
        for alpha in [1.0, 2.0] {
            let b = basis(alpha);
            let a = b.a();
            let mut s = CoherentSuperposition::vacuum(1).scale(C64::new(a[0], 0.0));
            for j in 1..4u8 {
                s = s.add(&b.alpha_j_state(j).scale(C64::new(a[j as usize], 0.0))).unwrap();
            }
            s = s.add(&b.alpha4_state().unwrap().scale(C64::new(a[4], 0.0))).unwrap();
            let target = CoherentSuperposition::product(&[b.alpha]);
            let diff = s.add(&target.scale(C64::new(-1.0, 0.0))).unwrap();
            assert!(diff.norm_sq() < 1e-14, "alpha={alpha}: {}", diff.norm_sq());
        }
    }

    #[test]
    fn ecs_schmidt_coefficients_match_r_products() {
        // |E_0> expands on (|a0,a0>, |a1,a3>, |a2,a2>, |a3,a1>) with weights
        // proportional to (r0^2, r1 r3, r2^2, r3 r1)
        let b = basis(1.2);
        let e0 = b.ecs_state(0);
        assert!((e0.norm_sq() - 1.0).abs() < 1e-12);
        let r = b.r();
        let pairs = [(0u8, 0u8), (1, 3), (2, 2), (3, 1)];
        let weights = [r[0] * r[0], r[1] * r[3], r[2] * r[2], r[3] * r[1]];
        let mut coeffs = Vec::new();
        for (m, n) in pairs {
            let ket = b.alpha_j_state(m).tensor(&b.alpha_j_state(n));
            coeffs.push(ket.inner_product(&e0).unwrap());
        }
        let ratio = coeffs[0] / weights[0];
        for (cf, w) in coeffs.iter().zip(weights) {
            assert!((cf - ratio * w).norm() < 1e-12);
        }
        // large-amplitude limit: all four weights approach 1/2
        let b4 = basis(4.0);
        let e0 = b4.ecs_state(0);
        for (m, n) in pairs {
            let ket = b4.alpha_j_state(m).tensor(&b4.alpha_j_state(n));
            let cf = ket.inner_product(&e0).unwrap().norm();
            assert!((cf - 0.5).abs() < 1e-3, "coef {cf}");
        }
    }

    #[test]
    fn encode_decode_round_trip() {
        let b = basis(1.7);
        let eps = EpsilonCoeffs([
            C64::new(0.3, 0.1),
            C64::new(-0.2, 0.4),
            C64::new(0.05, -0.6),
            C64::new(0.9, 0.0),
        ]);
        let c = encode_info(&eps, &b);
        let eps2 = decode_info(&c, &b).unwrap();
        for k in 0..4 {
            assert!((eps.0[k] - eps2.0[k]).norm() < 1e-12);
        }
        // norm agreement with the coherent-algebra inner product
        let mut terms = Vec::new();
        for (k, ek) in eps.0.iter().enumerate() {
            terms.push(CoherentTerm { coeff: *ek, amps: vec![i_pow(k as i64) * b.alpha] });
        }
        let s = CoherentSuperposition::new(1, terms).unwrap();
        assert!((c.norm_sq() - s.norm_sq()).abs() < 1e-12);
    }

    #[test]
    fn plain_coherent_state_encodes_to_half_r() {
        let b = basis(1.0);
        let one = C64::new(1.0, 0.0);
        let zero = C64::new(0.0, 0.0);
        let c = encode_info(&EpsilonCoeffs([one, zero, zero, zero]), &b);
        for j in 0..4 {
            assert!((c.0[j] - C64::new(b.r()[j] / 2.0, 0.0)).norm() < 1e-14);
        }
        // even cat has no odd components
        let c = encode_info(&EpsilonCoeffs([one, zero, one, zero]), &b);
        assert!(c.0[1].norm() < 1e-14 && c.0[3].norm() < 1e-14);
    }

    #[test]
    fn decode_zero_vector_errors() {
        let b = basis(1.0);
        let z = QuquatVector([C64::new(0.0, 0.0); 4]);
        assert!(matches!(decode_info(&z, &b), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn beta_block_matches_basis_at_beta() {
        let b = basis(1.9);
        let bb = make_basis(b.beta).unwrap();
        for i in 0..5 {
            assert!((b.beta_block.a[i] - bb.alpha_block.a[i]).abs() < 1e-12);
        }
    }
}
