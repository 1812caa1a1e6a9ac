//! Linear-optics generation of the heralded `|alpha_j>` states and of the
//! bipartite four-component entangled coherent states.
//!
//! Two even cat states are mixed on a beam splitter, one output is phase
//! shifted and the pair is mixed again; photon counting modulo 4 on the first
//! output then heralds `|alpha_j>` in the second output with probability
//! `N_e^4 r_j^4`. Splitting a heralded state with a vacuum ancilla produces
//! the entangled channel state at amplitude `|alpha|/sqrt(2)`.

use num_complex::Complex64 as C64;

use crate::algebra::{CoherentSuperposition, CoherentTerm};
use crate::basis::AlphaBasis;
use crate::error::{Error, Result};

/// One heralded photon-counting class of the generation circuit.
#[derive(Debug, Clone)]
pub struct GenerationOutcome {
    pub j: u8,
    /// Probability of heralding class `j` (the four values sum to 1).
    pub probability: f64,
    /// Unit-norm conditional state of the unmeasured mode; equals
    /// `|alpha_j>` with the `|alpha>`-component coefficient real positive.
    pub heralded_state: CoherentSuperposition,
}

/// Even cat state `N_e (|g> + |-g>)` for amplitude `g`.
fn even_cat(g: C64) -> CoherentSuperposition {
    // <g|-g> = exp(-2|g|^2) = x^2
    let x2 = (-2.0 * g.norm_sqr()).exp();
    let ne = 1.0 / (2.0 * (1.0 + x2)).sqrt();
    let coeff = C64::new(ne, 0.0);
    CoherentSuperposition::new(
        1,
        vec![
            CoherentTerm { coeff, amps: vec![g] },
            CoherentTerm { coeff, amps: vec![-g] },
        ],
    )
    .expect("arity 1")
}

/// The two-mode pre-measurement state of the generation circuit:
/// even cats in, then BS, phase shifter on the second mode, BS.
pub fn pre_measurement_state(basis: &AlphaBasis) -> Result<CoherentSuperposition> {
    let cat0 = even_cat(basis.alpha);
    let cat1 = even_cat(C64::new(0.0, -1.0) * basis.alpha);
    cat0.tensor(&cat1)
        .apply_beam_splitter(0, 1)?
        .apply_phase_shifter(1)?
        .apply_beam_splitter(0, 1)
}

/// Rotate the global phase so that the coefficient of the `|alpha>`
/// component is real positive.
fn fix_heralded_phase(s: &CoherentSuperposition, basis: &AlphaBasis) -> Result<CoherentSuperposition> {
    let tol = 1e-9 * basis.alpha.norm().max(1.0);
    let lead = s
        .terms()
        .iter()
        .find(|t| (t.amps[0] - basis.alpha).norm() < tol)
        .ok_or_else(|| Error::UnsupportedInput("heralded state has no |alpha> component".into()))?;
    let phase = lead.coeff / lead.coeff.norm();
    Ok(s.scale(phase.conj()))
}

/// Run the full generation circuit and condition on each photon-counting
/// class of the measured mode.
pub fn run_generation(basis: &AlphaBasis) -> Result<Vec<GenerationOutcome>> {
    let pre = pre_measurement_state(basis)?;
    let mut out = Vec::with_capacity(4);
    for j in 0..4u8 {
        let probability = pre.project_mod4(0, j, false)?.norm_sq();
        // The measured-mode content of class j is exactly |alpha_j>, so the
        // conditional state is the contraction against that bra.
        let heralded = pre.contract_mode(0, &basis.alpha_j_state(j))?.normalized()?;
        let heralded_state = fix_heralded_phase(&heralded, basis)?;
        out.push(GenerationOutcome { j, probability, heralded_state });
    }
    Ok(out)
}

/// Split a heralded `|alpha_j>` (or the vacuum) on a 50-50 beam splitter with
/// a vacuum ancilla, then phase shift the second output; the result is the
/// entangled channel state `|E_j>` at amplitude `|alpha|/sqrt(2)`.
pub fn ecs_from_heralded(
    heralded: &CoherentSuperposition,
    basis: &AlphaBasis,
) -> Result<CoherentSuperposition> {
    if heralded.mode_count() != 1 {
        return Err(Error::ArityMismatch { left: heralded.mode_count(), right: 1 });
    }
    let vacuum = CoherentSuperposition::vacuum(1);
    let vac_overlap = heralded.inner_product(&vacuum)?.norm();
    let is_vacuum = (vac_overlap - 1.0).abs() < 1e-8 && (heralded.norm_sq() - 1.0).abs() < 1e-8;
    if !is_vacuum {
        let supported = (0..4u8).any(|j| {
            heralded
                .inner_product(&basis.alpha_j_state(j))
                .map(|ov| (ov.norm() - 1.0).abs() < 1e-8)
                .unwrap_or(false)
        }) && (heralded.norm_sq() - 1.0).abs() < 1e-8;
        if !supported {
            return Err(Error::UnsupportedInput(
                "ecs_from_heralded expects a unit-norm |alpha_j> or the vacuum".into(),
            ));
        }
    }
    let split = heralded
        .tensor(&vacuum)
        .apply_beam_splitter(0, 1)?
        .apply_phase_shifter(1)?;
    split.normalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::i_pow;
    use crate::basis::make_basis;

    fn basis(alpha: f64) -> AlphaBasis {
        make_basis(C64::new(alpha, 0.0)).unwrap()
    }

    #[test]
    fn first_beam_splitter_matches_term_pattern() {
        // after the first BS the four amplitude tuples are
        // {(sqrt2 a, 0), (0, i sqrt2 a), (0, -i sqrt2 a), (-sqrt2 a, 0)}
        let b = basis(1.3);
        let cat0 = even_cat(b.alpha);
        let cat1 = even_cat(C64::new(0.0, -1.0) * b.alpha);
        let mid = cat0.tensor(&cat1).apply_beam_splitter(0, 1).unwrap();
        let s2a = b.alpha * 2.0_f64.sqrt();
        let i = C64::new(0.0, 1.0);
        let expected = [
            [s2a, C64::new(0.0, 0.0)],
            [C64::new(0.0, 0.0), i * s2a],
            [C64::new(0.0, 0.0), -i * s2a],
            [-s2a, C64::new(0.0, 0.0)],
        ];
        for pair in expected {
            assert!(
                mid.terms()
                    .iter()
                    .any(|t| (t.amps[0] - pair[0]).norm() < 1e-12
                        && (t.amps[1] - pair[1]).norm() < 1e-12),
                "missing tuple {pair:?}"
            );
        }
        assert_eq!(mid.terms().len(), 4);
    }

    #[test]
    fn circuit_is_unitary() {
        let b = basis(1.1);
        let cat0 = even_cat(b.alpha);
        let cat1 = even_cat(C64::new(0.0, -1.0) * b.alpha);
        let input = cat0.tensor(&cat1);
        let out = pre_measurement_state(&b).unwrap();
        assert!((input.norm_sq() - out.norm_sq()).abs() < 1e-12);
        assert!((out.norm_sq() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pre_measurement_state_is_diagonal_with_i_powers() {
        // N_e^2 (r0^2 |a0,a0> + i r1^2 |a1,a1> - r2^2 |a2,a2> - i r3^2 |a3,a3>)
        let b = basis(1.4);
        let out = pre_measurement_state(&b).unwrap();
        let x = b.x();
        let ne2 = 1.0 / (2.0 * (1.0 + x * x));
        let r = b.r();
        let mut recon = CoherentSuperposition::vacuum(2).scale(C64::new(0.0, 0.0));
        for j in 0..4u8 {
            let ket = b.alpha_j_state(j).tensor(&b.alpha_j_state(j));
            let coeff = i_pow(j as i64) * (ne2 * r[j as usize] * r[j as usize]);
            recon = recon.add(&ket.scale(coeff)).unwrap();
        }
        let diff = out.add(&recon.scale(C64::new(-1.0, 0.0))).unwrap();
        assert!(diff.norm_sq() < 1e-14, "defect {}", diff.norm_sq());
    }

    #[test]
    fn probabilities_match_closed_form_and_sum_to_one() {
        for alpha in [0.8, 1.5, 3.0] {
            let b = basis(alpha);
            let outcomes = run_generation(&b).unwrap();
            let x = b.x();
            let ne4 = 1.0 / (2.0 * (1.0 + x * x)).powi(2);
            let mut total = 0.0;
            for o in &outcomes {
                let rj = b.r()[o.j as usize];
                assert!(
                    (o.probability - ne4 * rj.powi(4)).abs() < 1e-12,
                    "alpha={alpha} j={}",
                    o.j
                );
                total += o.probability;
            }
            assert!((total - 1.0).abs() < 1e-10, "alpha={alpha}: {total}");
        }
    }

    #[test]
    fn probabilities_approach_one_quarter_at_large_alpha() {
        let outcomes = run_generation(&basis(3.0)).unwrap();
        for o in &outcomes {
            assert!((o.probability - 0.25).abs() <= 0.01, "j={}: {}", o.j, o.probability);
        }
    }

    #[test]
    fn heralded_states_are_alpha_j_with_positive_lead_coefficient() {
        let b = basis(1.2);
        for o in run_generation(&b).unwrap() {
            assert!((o.heralded_state.norm_sq() - 1.0).abs() < 1e-12);
            let target = b.alpha_j_state(o.j);
            let diff = o
                .heralded_state
                .add(&target.scale(C64::new(-1.0, 0.0)))
                .unwrap();
            assert!(diff.norm_sq() < 1e-14, "j={} defect {}", o.j, diff.norm_sq());
        }
    }

    #[test]
    fn split_heralded_state_matches_channel_at_half_amplitude() {
        for alpha in [1.3, 2.0] {
            let b = basis(alpha);
            let half = make_basis(b.alpha / 2.0_f64.sqrt()).unwrap();
            for j in 0..4u8 {
                let out = ecs_from_heralded(&b.alpha_j_state(j), &b).unwrap();
                let ov = half.ecs_state(j).inner_product(&out).unwrap();
                assert!((ov.norm() - 1.0).abs() < 1e-12, "alpha={alpha} j={j}: {}", ov.norm());
            }
        }
    }

    #[test]
    fn vacuum_passes_through_the_splitter() {
        let b = basis(1.0);
        let out = ecs_from_heralded(&CoherentSuperposition::vacuum(1), &b).unwrap();
        let ov = out.inner_product(&CoherentSuperposition::vacuum(2)).unwrap();
        assert!((ov.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn non_family_input_is_rejected() {
        let b = basis(1.0);
        let stray = CoherentSuperposition::product(&[C64::new(0.4, 0.1)]);
        assert!(matches!(
            ecs_from_heralded(&stray, &b),
            Err(Error::UnsupportedInput(_))
        ));
    }
}
