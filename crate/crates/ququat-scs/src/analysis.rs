//! Closed-form probabilities and fidelities, the MASFI/MAVFI minimizations,
//! and the amplitude sweeps behind the paper's figures.

use num_complex::Complex64 as C64;

use crate::basis::{AlphaBasis, QuquatVector};
use crate::error::{Error, Result};
use crate::teleport::{FailPolicy, TeleportContext};

/// The eleven named fidelity forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum Form {
    F0,
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
}

impl Form {
    pub const ALL: [Form; 11] = [
        Form::F0,
        Form::F1,
        Form::F2,
        Form::F3,
        Form::F4,
        Form::F5,
        Form::F6,
        Form::F7,
        Form::F8,
        Form::F9,
        Form::F10,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "F0" => Ok(Form::F0),
            "F1" => Ok(Form::F1),
            "F2" => Ok(Form::F2),
            "F3" => Ok(Form::F3),
            "F4" => Ok(Form::F4),
            "F5" => Ok(Form::F5),
            "F6" => Ok(Form::F6),
            "F7" => Ok(Form::F7),
            "F8" => Ok(Form::F8),
            "F9" => Ok(Form::F9),
            "F10" => Ok(Form::F10),
            other => Err(Error::UnknownForm(other.to_string())),
        }
    }
}

impl std::fmt::Display for Form {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Form::F0 => "F0",
            Form::F1 => "F1",
            Form::F2 => "F2",
            Form::F3 => "F3",
            Form::F4 => "F4",
            Form::F5 => "F5",
            Form::F6 => "F6",
            Form::F7 => "F7",
            Form::F8 => "F8",
            Form::F9 => "F9",
            Form::F10 => "F10",
        };
        f.write_str(s)
    }
}

/// The three closed-form class probabilities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProbForm {
    /// Class (0,0,0,0).
    PI,
    /// Class (4,0,0,0).
    PII4000,
    /// Class (4,0,4,0).
    PIII14040,
}

impl ProbForm {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "PI" => Ok(ProbForm::PI),
            "PII_4000" | "PII4000" => Ok(ProbForm::PII4000),
            "PIII1_4040" | "PIII14040" => Ok(ProbForm::PIII14040),
            other => Err(Error::UnknownForm(other.to_string())),
        }
    }
}

/// Closed-form probability of the named class for information state `c`.
pub fn closed_form_probability(form: ProbForm, c: &QuquatVector, basis: &AlphaBasis) -> f64 {
    let t = basis.alpha.norm_sqr();
    let x = basis.alpha_block.x;
    let w: Vec<f64> = c.0.iter().map(|z| z.norm_sqr()).collect();
    // corrected channel normalizer: |N_E0|^2 = 1 / [4 (1 + x^4 + 2 x^2 cos 2t)]
    let ne0_sq = 1.0 / (4.0 * (1.0 + x.powi(4) + 2.0 * x * x * (2.0 * t).cos()));
    let a4 = basis.alpha_block.a[4];
    let b4 = basis.beta_block.a[4];
    // cos(t/2) cosh(t/2) - 1 from the beta-block interference terms
    let cc = (0.5 * t).cos() * (0.5 * t).cosh() - 1.0;
    match form {
        ProbForm::PI => 4.0 * x * x * w[0] / (1.0 + x.powi(4) + 2.0 * x * x * (2.0 * t).cos()),
        ProbForm::PII4000 => {
            ne0_sq
                * (a4 * a4 * x
                    + 4.0 * b4 * b4 * x.powf(1.5) * (w[0] + w[2])
                    + 4.0 * x * x * cc * (w[0] - w[2]))
        }
        ProbForm::PIII14040 => {
            2.0 * ne0_sq * (a4 * a4 * b4 * b4 * x.sqrt() + x * x * cc * cc * (w[0] - w[2]))
        }
    }
}

/// The common ratio form `(sum_l w_l u_l)^2 / (sum_l w_l u_l^2)` with
/// `u_l = r_{(l-k)%4} / r_l` and `w_l = |c_l|^2`, optionally restricted to a
/// support set; 0 when the restricted weights vanish.
fn ratio_form(k: usize, support: Option<&[usize]>, c: &QuquatVector, r: &[f64; 4]) -> f64 {
    let mut num = 0.0;
    let mut den = 0.0;
    for l in 0..4 {
        if let Some(sup) = support {
            if !sup.contains(&l) {
                continue;
            }
        }
        let w = c.0[l].norm_sqr();
        let u = r[(l + 4 - k) % 4] / r[l];
        num += w * u;
        den += w * u * u;
    }
    if den < 1e-300 {
        0.0
    } else {
        num * num / den
    }
}

/// Evaluate a named fidelity form for information state `c`.
pub fn fidelity_form(form: Form, c: &QuquatVector, basis: &AlphaBasis) -> Result<f64> {
    let r = &basis.alpha_block.r;
    let w: Vec<f64> = c.0.iter().map(|z| z.norm_sqr()).collect();
    Ok(match form {
        Form::F0 => w[0],
        Form::F1 => w[0] + w[2],
        Form::F2 => w[1] + w[3],
        Form::F3 => ratio_form(2, Some(&[1, 3]), c, r),
        Form::F4 => ratio_form(2, Some(&[0, 2]), c, r),
        Form::F5 | Form::F8 => ratio_form(1, None, c, r),
        Form::F6 | Form::F10 => ratio_form(3, None, c, r),
        Form::F7 => 1.0,
        Form::F9 => ratio_form(2, None, c, r),
    })
}

/// The six-angle parametrization of an information state (unit norm by
/// construction).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InfoParams {
    pub theta: f64,
    pub phi1: f64,
    pub phi2: f64,
    pub xi1: f64,
    pub xi2: f64,
    pub xi3: f64,
}

impl InfoParams {
    pub fn from_array(p: [f64; 6]) -> Self {
        Self { theta: p[0], phi1: p[1], phi2: p[2], xi1: p[3], xi2: p[4], xi3: p[5] }
    }

    pub fn to_array(self) -> [f64; 6] {
        [self.theta, self.phi1, self.phi2, self.xi1, self.xi2, self.xi3]
    }

    /// The induced c-vector: `(cos t cos p1, cos t sin p1 e^{i x1},
    /// sin t cos p2 e^{i x2}, sin t sin p2 e^{i x3})`.
    pub fn to_c(self) -> QuquatVector {
        let (ct, st) = (self.theta.cos(), self.theta.sin());
        let e = |x: f64| C64::new(x.cos(), x.sin());
        QuquatVector([
            C64::new(ct * self.phi1.cos(), 0.0),
            e(self.xi1) * (ct * self.phi1.sin()),
            e(self.xi2) * (st * self.phi2.cos()),
            e(self.xi3) * (st * self.phi2.sin()),
        ])
    }
}

/// Deterministic derivative-free minimization over information states:
/// a fixed 4-value lattice per angle (4^6 starts), keep the best 32, refine
/// each by coordinate-wise golden-section descent down to 1e-6 spans.
pub fn minimize_over_infos<F: Fn(&QuquatVector) -> f64>(f: F) -> (f64, InfoParams) {
    let eval = |p: &[f64; 6]| f(&InfoParams::from_array(*p).to_c());
    let angle_grid: [f64; 4] = std::array::from_fn(|i| (2 * i + 1) as f64 * std::f64::consts::PI / 8.0);
    let phase_grid: [f64; 4] = std::array::from_fn(|i| i as f64 * std::f64::consts::FRAC_PI_2);
    let mut starts: Vec<([f64; 6], f64)> = Vec::with_capacity(4096);
    for &th in &angle_grid {
        for &p1 in &angle_grid {
            for &p2 in &angle_grid {
                for &x1 in &phase_grid {
                    for &x2 in &phase_grid {
                        for &x3 in &phase_grid {
                            let p = [th, p1, p2, x1, x2, x3];
                            starts.push((p, eval(&p)));
                        }
                    }
                }
            }
        }
    }
    starts.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
    starts.truncate(32);

    let golden = 0.5 * (5.0_f64.sqrt() - 1.0);
    let mut best_val = f64::INFINITY;
    let mut best_p = starts[0].0;
    for (start, _) in &starts {
        let mut p = *start;
        let mut val = eval(&p);
        let mut span = std::f64::consts::FRAC_PI_2;
        while span > 1e-6 {
            for coord in 0..6 {
                // golden-section line search on [p_c - span, p_c + span]
                let (mut a, mut b) = (p[coord] - span, p[coord] + span);
                let mut c1 = b - golden * (b - a);
                let mut c2 = a + golden * (b - a);
                let at = |coord: usize, v: f64, p: &[f64; 6]| {
                    let mut q = *p;
                    q[coord] = v;
                    q
                };
                let mut f1 = eval(&at(coord, c1, &p));
                let mut f2 = eval(&at(coord, c2, &p));
                while b - a > 1e-7 {
                    if f1 < f2 {
                        b = c2;
                        c2 = c1;
                        f2 = f1;
                        c1 = b - golden * (b - a);
                        f1 = eval(&at(coord, c1, &p));
                    } else {
                        a = c1;
                        c1 = c2;
                        f1 = f2;
                        c2 = a + golden * (b - a);
                        f2 = eval(&at(coord, c2, &p));
                    }
                }
                let mid = 0.5 * (a + b);
                let fm = eval(&at(coord, mid, &p));
                if fm < val {
                    p[coord] = mid;
                    val = fm;
                }
            }
            span *= 0.5;
        }
        if val < best_val {
            best_val = val;
            best_p = p;
        }
    }
    (best_val, InfoParams::from_array(best_p))
}

/// Maximize instead of minimize (negated objective).
pub fn maximize_over_infos<F: Fn(&QuquatVector) -> f64>(f: F) -> (f64, InfoParams) {
    let (neg, p) = minimize_over_infos(|c| -f(c));
    (-neg, p)
}

/// Minimum assured fidelity: the named form minimized over all information
/// states.
pub fn masfi(form: Form, basis: &AlphaBasis) -> Result<f64> {
    let (val, _) = minimize_over_infos(|c| fidelity_form(form, c, basis).unwrap_or(0.0));
    Ok(val.clamp(0.0, 1.0))
}

/// Probability-weighted average fidelity over all 369 classes for one
/// information state. Builds a fresh context; prefer
/// [`TeleportContext::favg`] when evaluating many states.
pub fn favg(c: &QuquatVector, basis: &AlphaBasis, fail_policy: FailPolicy) -> Result<f64> {
    let ctx = TeleportContext::new(basis)?;
    Ok(ctx.favg(c, fail_policy))
}

/// Minimum average fidelity: `favg` minimized over information states with
/// the given failure policy.
pub fn mavfi_with_policy(basis: &AlphaBasis, fail_policy: FailPolicy) -> Result<f64> {
    let ctx = TeleportContext::new(basis)?;
    let (val, _) = minimize_over_infos(|c| ctx.favg(c, fail_policy));
    Ok(val.clamp(0.0, 1.0))
}

/// Minimum average fidelity with the default (zero) failure policy.
pub fn mavfi(basis: &AlphaBasis) -> Result<f64> {
    mavfi_with_policy(basis, FailPolicy::Zero)
}

/// Quantities available to [`sweep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantity {
    PIMax,
    PIIMax,
    PIII1Max,
    PIVSumMin,
    MasfiF5,
    MasfiF6,
    MasfiF8,
    MasfiF9,
    MasfiF10,
    Mavfi,
}

impl Quantity {
    pub const ALL: [Quantity; 10] = [
        Quantity::PIMax,
        Quantity::PIIMax,
        Quantity::PIII1Max,
        Quantity::PIVSumMin,
        Quantity::MasfiF5,
        Quantity::MasfiF6,
        Quantity::MasfiF8,
        Quantity::MasfiF9,
        Quantity::MasfiF10,
        Quantity::Mavfi,
    ];

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().replace('-', "_").as_str() {
            "P_I_MAX" => Ok(Quantity::PIMax),
            "P_II_MAX" => Ok(Quantity::PIIMax),
            "P_III1_MAX" => Ok(Quantity::PIII1Max),
            "P_IV_SUM_MIN" => Ok(Quantity::PIVSumMin),
            "MASFI_F5" => Ok(Quantity::MasfiF5),
            "MASFI_F6" => Ok(Quantity::MasfiF6),
            "MASFI_F8" => Ok(Quantity::MasfiF8),
            "MASFI_F9" => Ok(Quantity::MasfiF9),
            "MASFI_F10" => Ok(Quantity::MasfiF10),
            "MAVFI" => Ok(Quantity::Mavfi),
            other => Err(Error::UnknownForm(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Quantity::PIMax => "P_I_max",
            Quantity::PIIMax => "P_II_max",
            Quantity::PIII1Max => "P_III1_max",
            Quantity::PIVSumMin => "P_IV_sum_min",
            Quantity::MasfiF5 => "MASFI_F5",
            Quantity::MasfiF6 => "MASFI_F6",
            Quantity::MasfiF8 => "MASFI_F8",
            Quantity::MasfiF9 => "MASFI_F9",
            Quantity::MasfiF10 => "MASFI_F10",
            Quantity::Mavfi => "MAVFI",
        }
    }
}

/// One point of an amplitude sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRecord {
    pub alpha: f64,
    pub quantity: Quantity,
    pub value: f64,
}

/// Evaluate a sweep quantity at one basis.
pub fn evaluate_quantity(quantity: Quantity, basis: &AlphaBasis) -> Result<f64> {
    Ok(match quantity {
        // Eq. (30) is maximized at |c_0| = 1
        Quantity::PIMax => {
            let e0 = QuquatVector([
                C64::new(1.0, 0.0),
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
            ]);
            closed_form_probability(ProbForm::PI, &e0, basis)
        }
        Quantity::PIIMax => {
            maximize_over_infos(|c| closed_form_probability(ProbForm::PII4000, c, basis)).0
        }
        Quantity::PIII1Max => {
            maximize_over_infos(|c| closed_form_probability(ProbForm::PIII14040, c, basis)).0
        }
        Quantity::PIVSumMin => TeleportContext::new(basis)?.min_group_iv_probability(),
        Quantity::MasfiF5 => masfi(Form::F5, basis)?,
        Quantity::MasfiF6 => masfi(Form::F6, basis)?,
        Quantity::MasfiF8 => masfi(Form::F8, basis)?,
        Quantity::MasfiF9 => masfi(Form::F9, basis)?,
        Quantity::MasfiF10 => masfi(Form::F10, basis)?,
        Quantity::Mavfi => mavfi(basis)?,
    })
}

/// Evaluate one quantity over an amplitude grid.
pub fn sweep(quantity: Quantity, alpha_grid: &[f64]) -> Result<Vec<SweepRecord>> {
    let mut out = Vec::with_capacity(alpha_grid.len());
    for &alpha in alpha_grid {
        let basis = crate::basis::make_basis(C64::new(alpha, 0.0))?;
        let value = evaluate_quantity(quantity, &basis)?;
        out.push(SweepRecord { alpha, quantity, value });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::make_basis;
    use crate::teleport::{circuit_map, group_of, joint_initial, measure, PCClass};

    fn basis(alpha: f64) -> AlphaBasis {
        make_basis(C64::new(alpha, 0.0)).unwrap()
    }

    fn samples() -> Vec<QuquatVector> {
        let c = |re: f64, im: f64| C64::new(re, im);
        vec![
            QuquatVector([c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]),
            QuquatVector([c(0.5, 0.1), c(-0.3, 0.45), c(0.2, -0.4), c(0.35, 0.25)])
                .normalized()
                .unwrap(),
            QuquatVector([c(0.1, -0.6), c(0.44, 0.0), c(-0.2, 0.3), c(0.0, 0.55)])
                .normalized()
                .unwrap(),
        ]
    }

    #[test]
    fn closed_forms_match_simulation() {
        let cases = [
            (ProbForm::PI, [0u8, 0, 0, 0]),
            (ProbForm::PII4000, [4, 0, 0, 0]),
            (ProbForm::PIII14040, [4, 0, 4, 0]),
        ];
        for alpha in [0.8, 1.5, 2.5] {
            let b = basis(alpha);
            for c in samples() {
                let out = circuit_map(&joint_initial(&c, &b, 0).unwrap()).unwrap();
                for (form, symbols) in cases {
                    let class = PCClass { symbols, group: group_of(symbols).unwrap() };
                    let sim = measure(&out, &class, &b).unwrap().probability;
                    let cf = closed_form_probability(form, &c, &b);
                    assert!(
                        (sim - cf).abs() < 1e-10,
                        "alpha={alpha} {form:?}: sim {sim} vs closed {cf}"
                    );
                }
            }
        }
    }

    #[test]
    fn pi_at_alpha_one_with_c0_one() {
        let b = basis(1.0);
        let e0 = QuquatVector([
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        ]);
        let p = closed_form_probability(ProbForm::PI, &e0, &b);
        assert!((p - 0.598).abs() < 5e-4, "P_I(1) = {p}");
    }

    #[test]
    fn fidelity_form_identities() {
        let b = basis(1.4);
        for c in samples() {
            let f1 = fidelity_form(Form::F1, &c, &b).unwrap();
            assert!((f1 - (c.0[0].norm_sqr() + c.0[2].norm_sqr())).abs() < 1e-14);
            assert!((fidelity_form(Form::F7, &c, &b).unwrap() - 1.0).abs() == 0.0);
            // Eq. (44): F8 = F5, F10 = F6 as functions
            let f5 = fidelity_form(Form::F5, &c, &b).unwrap();
            let f8 = fidelity_form(Form::F8, &c, &b).unwrap();
            assert!((f5 - f8).abs() < 1e-12);
            let f6 = fidelity_form(Form::F6, &c, &b).unwrap();
            let f10 = fidelity_form(Form::F10, &c, &b).unwrap();
            assert!((f6 - f10).abs() < 1e-12);
        }
        // F9 collapses to 1 for a single-component state
        let e0 = QuquatVector([
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        ]);
        assert!((fidelity_form(Form::F9, &e0, &b).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn info_params_produce_unit_vectors() {
        let p = InfoParams {
            theta: 0.7,
            phi1: 1.2,
            phi2: 2.3,
            xi1: 0.4,
            xi2: 5.0,
            xi3: 3.3,
        };
        assert!((p.to_c().norm_sq() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn minimizer_finds_quadratic_minimum() {
        // fidelity_form(F1) has minimum 0 at c = (0, 1, 0, 0)
        let b = basis(1.5);
        let m = masfi(Form::F1, &b).unwrap();
        assert!(m < 1e-9, "MASFI(F1) = {m}");
        let m7 = masfi(Form::F7, &b).unwrap();
        assert!((m7 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn masfi_is_a_lower_bound() {
        let b = basis(1.7);
        for form in [Form::F5, Form::F9] {
            let m = masfi(form, &b).unwrap();
            for c in samples() {
                let f = fidelity_form(form, &c, &b).unwrap();
                assert!(m <= f + 1e-9, "{form} MASFI {m} > sample {f}");
            }
        }
    }

    #[test]
    fn masfi_f5_threshold_at_1p7() {
        let b = basis(1.7);
        let m = masfi(Form::F5, &b).unwrap();
        assert!(m >= 0.99, "MASFI(F5)(1.7) = {m}");
    }

    #[test]
    fn minimizer_is_deterministic() {
        let b = basis(1.3);
        let a = masfi(Form::F9, &b).unwrap();
        let bb = masfi(Form::F9, &b).unwrap();
        assert!(a.to_bits() == bb.to_bits());
    }

    #[test]
    fn sweep_shape_and_domain_guard() {
        let recs = sweep(Quantity::PIMax, &[0.5, 1.0, 1.5]).unwrap();
        assert_eq!(recs.len(), 3);
        assert!(recs.iter().all(|r| (0.0..=1.0).contains(&r.value)));
        assert!(sweep(Quantity::PIMax, &[0.05]).is_err());
    }
}
