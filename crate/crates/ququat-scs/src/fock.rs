//! Truncated photon-number-basis simulator, used as an independent
//! brute-force oracle for the exact coherent-state algebra.
//!
//! Everything here works with literal number-state amplitudes and literal
//! summation over photon numbers, so agreement with the closed-form algebra
//! is evidence for both.

use std::collections::HashMap;

use num_complex::Complex64 as C64;

use crate::algebra::CoherentSuperposition;
use crate::basis::{AlphaBasis, QuquatVector};
use crate::error::{Error, Result};
use crate::generation;
use crate::teleport::{self, circuit_map, enumerate_pc_classes, joint_initial};

/// Largest coherent amplitude the oracle accepts; beyond this the truncated
/// arrays stop being desk-scale.
pub const MAX_ORACLE_ALPHA: f64 = 3.5;

/// Default per-mode cutoff: eight Poisson standard deviations above the mean
/// plus margin, so truncation leakage stays below 1e-10 for `|gamma| <= 5`.
pub fn default_cutoff(gamma_abs: f64) -> usize {
    (gamma_abs * gamma_abs + 8.0 * gamma_abs + 10.0).ceil() as usize
}

/// `ln(n!)` for `0..=n_max`.
fn ln_factorials(n_max: usize) -> Vec<f64> {
    let mut lf = vec![0.0; n_max + 1];
    for n in 1..=n_max {
        lf[n] = lf[n - 1] + (n as f64).ln();
    }
    lf
}

/// Number-basis amplitudes `<n|gamma>` for `n = 0..=cutoff`.
fn coherent_fock_amps(gamma: C64, cutoff: usize) -> Vec<C64> {
    let mut amps = Vec::with_capacity(cutoff + 1);
    let mut a = C64::new((-0.5 * gamma.norm_sqr()).exp(), 0.0);
    amps.push(a);
    for n in 1..=cutoff {
        a *= gamma / C64::new((n as f64).sqrt(), 0.0);
        amps.push(a);
    }
    amps
}

/// A dense state over the truncated multimode number basis (row-major, last
/// mode fastest).
#[derive(Debug, Clone)]
pub struct FockVector {
    pub cutoffs: Vec<usize>,
    pub amps: Vec<C64>,
}

impl FockVector {
    fn dims(&self) -> Vec<usize> {
        self.cutoffs.iter().map(|&c| c + 1).collect()
    }

    pub fn mode_count(&self) -> usize {
        self.cutoffs.len()
    }

    pub fn norm_sq(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn inner_product(&self, other: &Self) -> Result<C64> {
        if self.cutoffs != other.cutoffs {
            return Err(Error::ArityMismatch {
                left: self.mode_count(),
                right: other.mode_count(),
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    /// Keep only amplitudes whose photon number in `mode` lies in the symbol
    /// set (0: `n = 0`; 1..3: `n % 4 = symbol`; 4: `n % 4 = 0, n > 0`).
    pub fn project_symbol(&self, mode: usize, symbol: u8) -> Result<Self> {
        if mode >= self.mode_count() {
            return Err(Error::InvalidMode { index: mode, mode_count: self.mode_count() });
        }
        let dims = self.dims();
        let mut out = self.clone();
        for (idx, amp) in out.amps.iter_mut().enumerate() {
            let n = decompose(idx, &dims)[mode];
            let keep = match symbol {
                0 => n == 0,
                4 => n > 0 && n.is_multiple_of(4),
                s => n % 4 == s as usize,
            };
            if !keep {
                *amp = C64::new(0.0, 0.0);
            }
        }
        Ok(out)
    }

    /// `-pi/2` phase shifter: amplitude of `|n>` gains `(-i)^n`.
    pub fn phase_shifter(&self, mode: usize) -> Result<Self> {
        if mode >= self.mode_count() {
            return Err(Error::InvalidMode { index: mode, mode_count: self.mode_count() });
        }
        let dims = self.dims();
        let mut out = self.clone();
        for (idx, amp) in out.amps.iter_mut().enumerate() {
            let n = decompose(idx, &dims)[mode];
            *amp *= crate::algebra::i_pow(-(n as i64));
        }
        Ok(out)
    }
}

fn decompose(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut ns = vec![0; dims.len()];
    for m in (0..dims.len()).rev() {
        ns[m] = idx % dims[m];
        idx /= dims[m];
    }
    ns
}

fn compose(ns: &[usize], dims: &[usize]) -> usize {
    let mut idx = 0;
    for (n, d) in ns.iter().zip(dims) {
        idx = idx * d + n;
    }
    idx
}

/// Expand a coherent superposition in the truncated number basis.
pub fn to_fock(s: &CoherentSuperposition, cutoffs: &[usize]) -> Result<FockVector> {
    if cutoffs.len() != s.mode_count() {
        return Err(Error::ArityMismatch { left: cutoffs.len(), right: s.mode_count() });
    }
    let dims: Vec<usize> = cutoffs.iter().map(|&c| c + 1).collect();
    let total: usize = dims.iter().product();
    let mut amps = vec![C64::new(0.0, 0.0); total];
    for term in s.terms() {
        let per_mode: Vec<Vec<C64>> = term
            .amps
            .iter()
            .zip(cutoffs)
            .map(|(&g, &c)| coherent_fock_amps(g, c))
            .collect();
        for (idx, amp) in amps.iter_mut().enumerate() {
            let ns = decompose(idx, &dims);
            let mut a = term.coeff;
            for (m, &n) in ns.iter().enumerate() {
                a *= per_mode[m][n];
            }
            *amp += a;
        }
    }
    Ok(FockVector { cutoffs: cutoffs.to_vec(), amps })
}

/// 50-50 beam splitter in the number basis, from the creation-operator
/// binomial expansion of `a^dag -> (a^dag + i b^dag)/sqrt 2`,
/// `b^dag -> (i a^dag + b^dag)/sqrt 2`. Output components beyond the cutoffs
/// are dropped (truncation leakage).
pub fn fock_beam_splitter(v: &FockVector, mode_a: usize, mode_b: usize) -> Result<FockVector> {
    let mc = v.mode_count();
    if mode_a >= mc || mode_b >= mc || mode_a == mode_b {
        return Err(Error::InvalidMode { index: mode_b, mode_count: mc });
    }
    let dims = v.dims();
    let (ca, cb) = (v.cutoffs[mode_a], v.cutoffs[mode_b]);
    let lf = ln_factorials(ca + cb);
    let half_ln2 = 0.5 * 2.0_f64.ln();
    let mut out = FockVector { cutoffs: v.cutoffs.clone(), amps: vec![C64::new(0.0, 0.0); v.amps.len()] };
    for (idx, &amp) in v.amps.iter().enumerate() {
        if amp.norm_sqr() == 0.0 {
            continue;
        }
        let mut ns = decompose(idx, &dims);
        let (n1, n2) = (ns[mode_a], ns[mode_b]);
        for p in 0..=n1 {
            for q in 0..=n2 {
                let (m1, m2) = (p + q, n1 - p + n2 - q);
                if m1 > ca || m2 > cb {
                    continue;
                }
                let ln_mag = lf[n1] - lf[p] - lf[n1 - p] + lf[n2] - lf[q] - lf[n2 - q]
                    + 0.5 * (lf[m1] + lf[m2] - lf[n1] - lf[n2])
                    - (n1 + n2) as f64 * half_ln2;
                let phase = crate::algebra::i_pow((n1 - p + q) as i64);
                ns[mode_a] = m1;
                ns[mode_b] = m2;
                out.amps[compose(&ns, &dims)] += amp * phase * ln_mag.exp();
            }
        }
    }
    Ok(out)
}

/// `<bra| Pi_symbol |ket>` for two coherent amplitudes, by literal summation
/// over the symbol's photon numbers up to the cutoff.
fn fock_symbol_overlap(bra: C64, ket: C64, symbol: u8, cutoff: usize) -> C64 {
    let ab = coherent_fock_amps(bra, cutoff);
    let ak = coherent_fock_amps(ket, cutoff);
    let mut acc = C64::new(0.0, 0.0);
    for n in 0..=cutoff {
        let keep = match symbol {
            0 => n == 0,
            4 => n > 0 && n % 4 == 0,
            s => n % 4 == s as usize,
        };
        if keep {
            acc += ab[n].conj() * ak[n];
        }
    }
    acc
}

/// Deviations between the exact algebra and the Fock oracle.
#[derive(Debug, Clone)]
pub struct OracleReport {
    /// Largest of all the part deviations.
    pub max_deviation: f64,
    /// Gram matrix of the four basis states vs the identity.
    pub gram_deviation: f64,
    /// Generation-circuit output amplitudes, Fock evolution vs exact.
    pub generation_deviation: f64,
    /// The 369 class probabilities, factorized Fock sums vs exact.
    pub class_probability_deviation: f64,
    /// Completeness defect of the oracle class probabilities.
    pub class_probability_sum: f64,
    /// Mod-4 component norms of `|alpha>` vs the exact projector norms.
    pub mod4_deviation: f64,
    /// Per-mode cutoff used for the single-amplitude parts.
    pub cutoff: usize,
}

/// Compare the exact algebra against the Fock oracle at one basis and one
/// information state.
pub fn oracle_compare(
    basis: &AlphaBasis,
    c: &QuquatVector,
    cutoff_override: Option<usize>,
) -> Result<OracleReport> {
    let alpha_abs = basis.alpha.norm();
    if alpha_abs > MAX_ORACLE_ALPHA {
        return Err(Error::Resource(format!(
            "oracle limited to |alpha| <= {MAX_ORACLE_ALPHA}; |alpha| = {alpha_abs} would need \
             cutoff {}",
            default_cutoff(2.0_f64.sqrt() * alpha_abs)
        )));
    }
    let cutoff = cutoff_override.unwrap_or_else(|| default_cutoff(alpha_abs));

    // (a) Gram matrix of the four multi-photon basis states
    let mut gram_deviation: f64 = 0.0;
    let fock_states: Vec<FockVector> = (0..4u8)
        .map(|j| to_fock(&basis.alpha_j_state(j), &[cutoff]))
        .collect::<Result<_>>()?;
    for (j, fj) in fock_states.iter().enumerate() {
        for (k, fk) in fock_states.iter().enumerate() {
            let expect = if j == k { 1.0 } else { 0.0 };
            let ov = fj.inner_product(fk)?;
            gram_deviation = gram_deviation.max((ov - C64::new(expect, 0.0)).norm());
        }
    }

    // (b) generation circuit evolved in the number basis vs the exact output
    // (intermediate amplitudes reach sqrt2 |alpha|)
    let gen_cutoff = cutoff_override.unwrap_or_else(|| default_cutoff(2.0_f64.sqrt() * alpha_abs));
    let cat0 = generation_input(basis);
    let fock_in = to_fock(&cat0, &[gen_cutoff, gen_cutoff])?;
    let evolved = fock_beam_splitter(
        &fock_beam_splitter(&fock_in, 0, 1)?.phase_shifter(1)?,
        0,
        1,
    )?;
    // the second beam splitter acts before reordering fixes: the circuit is
    // BS, PS on the second mode, BS -- same order as the exact map
    let exact_out = to_fock(&generation::pre_measurement_state(basis)?, &[gen_cutoff, gen_cutoff])?;
    let mut generation_deviation: f64 = 0.0;
    for (a, b) in evolved.amps.iter().zip(&exact_out.amps) {
        generation_deviation = generation_deviation.max((a - b).norm());
    }

    // (c) the 369 class probabilities, factorized per measured mode
    let out5 = circuit_map(&joint_initial(c, basis, 0)?)?;
    let mut memo: HashMap<(u64, u64, u64, u64, u8), C64> = HashMap::new();
    let mut class_probability_deviation: f64 = 0.0;
    let mut class_probability_sum = 0.0;
    for class in enumerate_pc_classes() {
        let mut p = C64::new(0.0, 0.0);
        for tp in out5.terms() {
            for tq in out5.terms() {
                let mut w = tp.coeff * tq.coeff.conj();
                for m in 0..4 {
                    let (bra, ket) = (tq.amps[m], tp.amps[m]);
                    let key = (
                        bra.re.to_bits(),
                        bra.im.to_bits(),
                        ket.re.to_bits(),
                        ket.im.to_bits(),
                        class.symbols[m],
                    );
                    let ov = *memo
                        .entry(key)
                        .or_insert_with(|| fock_symbol_overlap(bra, ket, class.symbols[m], cutoff));
                    w *= ov;
                }
                // Bob mode overlap by literal summation as well
                let key =
                    (tq.amps[4].re.to_bits(), tq.amps[4].im.to_bits(), tp.amps[4].re.to_bits(), tp.amps[4].im.to_bits(), 255);
                let ov = *memo.entry(key).or_insert_with(|| {
                    let ab = coherent_fock_amps(tq.amps[4], cutoff);
                    let ak = coherent_fock_amps(tp.amps[4], cutoff);
                    ab.iter().zip(&ak).map(|(a, b)| a.conj() * b).sum()
                });
                p += w * ov;
            }
        }
        let exact = teleport::tuple_probability(&out5, class.symbols, basis)?;
        class_probability_deviation = class_probability_deviation.max((p.re - exact).abs());
        class_probability_sum += p.re;
    }

    // (d) mod-4 content of |alpha| vs the exact projector norms
    let coherent = CoherentSuperposition::product(&[basis.alpha]);
    let fock_coherent = to_fock(&coherent, &[cutoff])?;
    let mut mod4_deviation: f64 = 0.0;
    for j in 0..4usize {
        let literal: f64 = fock_coherent
            .amps
            .iter()
            .enumerate()
            .filter(|(n, _)| n % 4 == j)
            .map(|(_, a)| a.norm_sqr())
            .sum();
        let exact = coherent.project_mod4(0, j as u8, false)?.norm_sq();
        mod4_deviation = mod4_deviation.max((literal - exact).abs());
    }

    let max_deviation = gram_deviation
        .max(generation_deviation)
        .max(class_probability_deviation)
        .max((class_probability_sum - 1.0).abs())
        .max(mod4_deviation);
    Ok(OracleReport {
        max_deviation,
        gram_deviation,
        generation_deviation,
        class_probability_deviation,
        class_probability_sum,
        mod4_deviation,
        cutoff,
    })
}

/// The two even cats entering the generation circuit, as a 2-mode state.
fn generation_input(basis: &AlphaBasis) -> CoherentSuperposition {
    use crate::algebra::CoherentTerm;
    let g0 = basis.alpha;
    let g1 = C64::new(0.0, -1.0) * basis.alpha;
    let ne = |g: C64| 1.0 / (2.0 * (1.0 + (-2.0 * g.norm_sqr()).exp())).sqrt();
    let cat = |g: C64| {
        CoherentSuperposition::new(
            1,
            vec![
                CoherentTerm { coeff: C64::new(ne(g), 0.0), amps: vec![g] },
                CoherentTerm { coeff: C64::new(ne(g), 0.0), amps: vec![-g] },
            ],
        )
        .expect("arity 1")
    };
    cat(g0).tensor(&cat(g1))
}
