//! Exact linear algebra over multimode superpositions of coherent states.
//!
//! Every state is a finite weighted sum of products of coherent kets. Beam
//! splitters, phase shifters and the modulo-4 / vacuum projectors all map
//! such sums to such sums, so the whole protocol stays inside this algebra
//! and overlaps are evaluated with the analytic coherent-state kernel.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// `<gamma|delta>` for two single-mode coherent states.
///
/// Standard kernel `exp(-|gamma|^2/2 - |delta|^2/2 + gamma^* delta)`; this is
/// the convention that reproduces `x = exp(-|alpha|^2)` overlaps.
pub fn coherent_overlap(gamma: C64, delta: C64) -> C64 {
    (C64::new(-0.5 * gamma.norm_sqr() - 0.5 * delta.norm_sqr(), 0.0) + gamma.conj() * delta).exp()
}

/// Powers of the imaginary unit, `i^k` with `k` taken modulo 4.
pub fn i_pow(k: i64) -> C64 {
    match k.rem_euclid(4) {
        0 => C64::new(1.0, 0.0),
        1 => C64::new(0.0, 1.0),
        2 => C64::new(-1.0, 0.0),
        _ => C64::new(0.0, -1.0),
    }
}

/// One product ket `coeff * |amps[0], amps[1], ...>`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoherentTerm {
    pub coeff: C64,
    pub amps: Vec<C64>,
}

/// A multimode state as a weighted sum of coherent-amplitude tuples.
#[derive(Debug, Clone, PartialEq)]
pub struct CoherentSuperposition {
    mode_count: usize,
    terms: Vec<CoherentTerm>,
}

/// Default relative tolerance for merging equal amplitude tuples.
pub const MERGE_TOL: f64 = 1e-12;

impl CoherentSuperposition {
    pub fn new(mode_count: usize, terms: Vec<CoherentTerm>) -> Result<Self> {
        if mode_count == 0 {
            return Err(Error::DegenerateInput("state must have at least one mode".into()));
        }
        for t in &terms {
            if t.amps.len() != mode_count {
                return Err(Error::ArityMismatch { left: t.amps.len(), right: mode_count });
            }
            if !t.coeff.re.is_finite()
                || !t.coeff.im.is_finite()
                || t.amps.iter().any(|a| !a.re.is_finite() || !a.im.is_finite())
            {
                return Err(Error::NonFinite);
            }
        }
        Ok(Self { mode_count, terms })
    }

    /// A single product ket `|amps...>` with unit coefficient.
    pub fn product(amps: &[C64]) -> Self {
        Self::new(
            amps.len(),
            vec![CoherentTerm { coeff: C64::new(1.0, 0.0), amps: amps.to_vec() }],
        )
        .expect("nonempty product ket")
    }

    /// The multimode vacuum `|0, 0, ...>`.
    pub fn vacuum(mode_count: usize) -> Self {
        Self::product(&vec![C64::new(0.0, 0.0); mode_count])
    }

    pub fn mode_count(&self) -> usize {
        self.mode_count
    }

    pub fn terms(&self) -> &[CoherentTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_mode(&self, mode: usize) -> Result<()> {
        if mode >= self.mode_count {
            Err(Error::InvalidMode { index: mode, mode_count: self.mode_count })
        } else {
            Ok(())
        }
    }

    pub fn scale(&self, factor: C64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| CoherentTerm { coeff: factor * t.coeff, amps: t.amps.clone() })
            .collect();
        Self { mode_count: self.mode_count, terms }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.mode_count != other.mode_count {
            return Err(Error::ArityMismatch { left: self.mode_count, right: other.mode_count });
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Self { mode_count: self.mode_count, terms })
    }

    /// Tensor product: `self` modes first, then `other` modes.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for t1 in &self.terms {
            for t2 in &other.terms {
                let mut amps = t1.amps.clone();
                amps.extend_from_slice(&t2.amps);
                terms.push(CoherentTerm { coeff: t1.coeff * t2.coeff, amps });
            }
        }
        Self { mode_count: self.mode_count + other.mode_count, terms }
    }

    /// Merge terms whose amplitude tuples agree componentwise within
    /// `tol * max(1, |amp|)` and drop terms with negligible coefficients.
    pub fn canonicalize(&self, tol: f64) -> Self {
        let mut merged: Vec<CoherentTerm> = Vec::with_capacity(self.terms.len());
        'outer: for t in &self.terms {
            for m in merged.iter_mut() {
                let close = t
                    .amps
                    .iter()
                    .zip(&m.amps)
                    .all(|(a, b)| (a - b).norm() <= tol * a.norm().max(1.0));
                if close {
                    m.coeff += t.coeff;
                    continue 'outer;
                }
            }
            merged.push(t.clone());
        }
        let scale = self
            .terms
            .iter()
            .map(|t| t.coeff.norm())
            .fold(0.0_f64, f64::max)
            .max(1.0);
        merged.retain(|t| t.coeff.norm() > 1e-15 * scale);
        Self { mode_count: self.mode_count, terms: merged }
    }

    /// Sesquilinear inner product `<self|other>` (conjugate-linear in `self`).
    pub fn inner_product(&self, other: &Self) -> Result<C64> {
        if self.mode_count != other.mode_count {
            return Err(Error::ArityMismatch { left: self.mode_count, right: other.mode_count });
        }
        let mut acc = C64::new(0.0, 0.0);
        for t1 in &self.terms {
            for t2 in &other.terms {
                let mut ov = t1.coeff.conj() * t2.coeff;
                for (g, d) in t1.amps.iter().zip(&t2.amps) {
                    ov *= coherent_overlap(*g, *d);
                }
                acc += ov;
            }
        }
        Ok(acc)
    }

    pub fn norm_sq(&self) -> f64 {
        self.inner_product(self).expect("same arity").re
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().max(0.0).sqrt()
    }

    /// Normalize to unit norm; errors if the state is (numerically) zero.
    pub fn normalized(&self) -> Result<Self> {
        let n = self.norm();
        if n < 1e-150 {
            return Err(Error::DegenerateInput("cannot normalize zero state".into()));
        }
        Ok(self.scale(C64::new(1.0 / n, 0.0)))
    }

    /// 50-50 beam splitter: per term `(a, b) -> ((a+ib)/sqrt2, (ia+b)/sqrt2)`.
    pub fn apply_beam_splitter(&self, mode_a: usize, mode_b: usize) -> Result<Self> {
        self.check_mode(mode_a)?;
        self.check_mode(mode_b)?;
        if mode_a == mode_b {
            return Err(Error::InvalidMode { index: mode_b, mode_count: self.mode_count });
        }
        let s = 1.0 / 2.0_f64.sqrt();
        let i = C64::new(0.0, 1.0);
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut amps = t.amps.clone();
                let (a, b) = (amps[mode_a], amps[mode_b]);
                amps[mode_a] = (a + i * b) * s;
                amps[mode_b] = (i * a + b) * s;
                CoherentTerm { coeff: t.coeff, amps }
            })
            .collect();
        Ok(Self { mode_count: self.mode_count, terms })
    }

    /// `-pi/2` phase shifter: per term `a -> -i a` in the given mode.
    pub fn apply_phase_shifter(&self, mode: usize) -> Result<Self> {
        self.check_mode(mode)?;
        let mi = C64::new(0.0, -1.0);
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut amps = t.amps.clone();
                amps[mode] = mi * amps[mode];
                CoherentTerm { coeff: t.coeff, amps }
            })
            .collect();
        Ok(Self { mode_count: self.mode_count, terms })
    }

    /// Modulo-4 photon-number projector on one mode.
    ///
    /// Uses `P_j |g> = (1/4) sum_k i^{-jk} |i^k g>`, which keeps the result in
    /// the coherent algebra. With `exclude_vacuum` and `j = 0` the `|0><0|`
    /// component is subtracted (the projector heralding nonzero counts that
    /// are 0 modulo 4). The result is unnormalized.
    pub fn project_mod4(&self, mode: usize, j: u8, exclude_vacuum: bool) -> Result<Self> {
        self.check_mode(mode)?;
        debug_assert!(j < 4);
        let mut terms = Vec::with_capacity(self.terms.len() * 4);
        for t in &self.terms {
            let g = t.amps[mode];
            for k in 0..4_i64 {
                let mut amps = t.amps.clone();
                amps[mode] = i_pow(k) * g;
                terms.push(CoherentTerm { coeff: t.coeff * i_pow(-(j as i64) * k) * 0.25, amps });
            }
            if exclude_vacuum && j == 0 {
                let mut amps = t.amps.clone();
                amps[mode] = C64::new(0.0, 0.0);
                let vac = (-0.5 * g.norm_sqr()).exp();
                terms.push(CoherentTerm { coeff: -t.coeff * vac, amps });
            }
        }
        Ok(Self { mode_count: self.mode_count, terms }.canonicalize(MERGE_TOL))
    }

    /// Vacuum projector `|0><0|` on one mode (unnormalized result).
    pub fn project_vacuum(&self, mode: usize) -> Result<Self> {
        self.check_mode(mode)?;
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut amps = t.amps.clone();
                let vac = (-0.5 * amps[mode].norm_sqr()).exp();
                amps[mode] = C64::new(0.0, 0.0);
                CoherentTerm { coeff: t.coeff * vac, amps }
            })
            .collect();
        Ok(Self { mode_count: self.mode_count, terms }.canonicalize(MERGE_TOL))
    }

    /// Contract one mode against a single-mode bra, returning the state on the
    /// remaining modes: `<phi|_mode |self>`.
    pub fn contract_mode(&self, mode: usize, bra: &Self) -> Result<Self> {
        self.check_mode(mode)?;
        if bra.mode_count != 1 {
            return Err(Error::ArityMismatch { left: bra.mode_count, right: 1 });
        }
        if self.mode_count == 1 {
            return Err(Error::DegenerateInput("cannot contract the only mode".into()));
        }
        let mut terms = Vec::with_capacity(self.terms.len() * bra.terms.len());
        for t in &self.terms {
            for b in &bra.terms {
                let ov = b.coeff.conj() * coherent_overlap(b.amps[0], t.amps[mode]);
                let mut amps = t.amps.clone();
                amps.remove(mode);
                terms.push(CoherentTerm { coeff: t.coeff * ov, amps });
            }
        }
        Ok(Self { mode_count: self.mode_count - 1, terms }.canonicalize(MERGE_TOL))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn coherent_overlap_self_is_one() {
        let a = c(1.0, 0.0);
        let s = CoherentSuperposition::product(&[a]);
        assert!((s.inner_product(&s).unwrap().re - 1.0).abs() < 1e-14);
    }

    #[test]
    fn opposite_phase_overlap_is_x_squared() {
        let a = c(1.3, 0.0);
        let s1 = CoherentSuperposition::product(&[a]);
        let s2 = CoherentSuperposition::product(&[-a]);
        let ov = s1.inner_product(&s2).unwrap();
        let x = (-a.norm_sqr()).exp();
        assert!((ov.re - x * x).abs() < 1e-14);
        assert!(ov.im.abs() < 1e-14);
    }

    #[test]
    fn beam_splitter_examples() {
        let a = c(0.9, 0.4);
        // |a, 0> -> |a/sqrt2, i a/sqrt2>
        let s = CoherentSuperposition::product(&[a, c(0.0, 0.0)]);
        let out = s.apply_beam_splitter(0, 1).unwrap();
        let t = &out.terms()[0];
        let s2 = 1.0 / 2.0_f64.sqrt();
        assert!((t.amps[0] - a * s2).norm() < 1e-15);
        assert!((t.amps[1] - C64::new(0.0, 1.0) * a * s2).norm() < 1e-15);
        // |a, -ia> -> |sqrt2 a, 0>
        let s = CoherentSuperposition::product(&[a, C64::new(0.0, -1.0) * a]);
        let out = s.apply_beam_splitter(0, 1).unwrap();
        let t = &out.terms()[0];
        assert!((t.amps[0] - a * 2.0_f64.sqrt()).norm() < 1e-15);
        assert!(t.amps[1].norm() < 1e-15);
        // vacuum fixed point
        let v = CoherentSuperposition::vacuum(2);
        let out = v.apply_beam_splitter(0, 1).unwrap();
        assert!(out.terms()[0].amps.iter().all(|x| x.norm() == 0.0));
    }

    #[test]
    fn phase_shifter_twice_flips_sign() {
        let a = c(0.7, -0.2);
        let s = CoherentSuperposition::product(&[a]);
        let out = s.apply_phase_shifter(0).unwrap().apply_phase_shifter(0).unwrap();
        assert!((out.terms()[0].amps[0] + a).norm() < 1e-15);
    }

    #[test]
    fn projector_mod4_on_vacuum() {
        let v = CoherentSuperposition::vacuum(1);
        let p = v.project_mod4(0, 1, false).unwrap();
        assert!(p.norm_sq() < 1e-28);
    }

    #[test]
    fn project_vacuum_squared_norm() {
        let a = c(1.1, 0.0);
        let s = CoherentSuperposition::product(&[a]);
        let p = s.project_vacuum(0).unwrap();
        let x = (-a.norm_sqr()).exp();
        assert!((p.norm_sq() - x).abs() < 1e-14);
    }

    #[test]
    fn mode_mismatch_errors() {
        let s1 = CoherentSuperposition::vacuum(1);
        let s2 = CoherentSuperposition::vacuum(2);
        assert!(matches!(s1.inner_product(&s2), Err(Error::ArityMismatch { .. })));
        assert!(matches!(s1.apply_phase_shifter(3), Err(Error::InvalidMode { .. })));
        assert!(matches!(s2.apply_beam_splitter(0, 0), Err(Error::InvalidMode { .. })));
    }

    #[test]
    fn canonicalize_merges_cancelling_terms() {
        let a = c(0.5, 0.5);
        let term = |coeff: C64| CoherentTerm { coeff, amps: vec![a] };
        let s = CoherentSuperposition::new(1, vec![term(c(1.0, 0.0)), term(c(-1.0, 0.0))]).unwrap();
        assert!(s.canonicalize(MERGE_TOL).is_zero());
    }
}
