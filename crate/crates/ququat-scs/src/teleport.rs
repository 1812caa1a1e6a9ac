//! The teleportation machine: linear-optics circuit, the 369-outcome
//! photon-counting taxonomy, conditional Bob states, correction unitaries,
//! and the printed correction tables as verifiable data.
//!
//! Alice interferes the information mode with her half of the entangled
//! channel and counts photons on four output modes; each count is classified
//! as zero, or nonzero with its value taken modulo 4. The taxonomy groups the
//! classes by their zero pattern, and for every pure-outcome class a 4x4
//! correction acting on Bob's ququat is derived from simulation and diffed
//! against the paper-table claims.

use nalgebra::Matrix4;
use num_complex::Complex64 as C64;

use crate::algebra::{coherent_overlap, i_pow, CoherentSuperposition, CoherentTerm};
use crate::analysis::Form;
use crate::basis::{AlphaBasis, QuquatVector};
use crate::dm::{phase_class, DensityMatrix4};
use crate::error::{Error, Result};
use crate::tables::{TABLE1, TABLE2};

/// Outcomes with probability below this floor are treated as unreachable for
/// the given information state (Bob's conditional state is undefined).
pub const PROB_FLOOR: f64 = 1e-13;

/// Taxonomy of photon-counting classes by zero pattern.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Group {
    /// All four counts zero.
    I,
    /// Exactly three counts zero.
    II,
    /// Two counts zero, in a pair other than (8,9) or (10,11).
    IIIi,
    /// Two counts zero, in modes (8,9) or (10,11).
    IIIii,
    /// Exactly one count zero.
    IV,
}

impl std::fmt::Display for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Group::I => "I",
            Group::II => "II",
            Group::IIIi => "III.I",
            Group::IIIii => "III.II",
            Group::IV => "IV",
        };
        f.write_str(s)
    }
}

/// One photon-counting class: a symbol per measured mode (in mode order
/// 8, 9, 10, 11), where 0 means zero counts, 1/2/3 mean nonzero counts equal
/// to 1/2/3 modulo 4 and 4 means nonzero counts equal to 0 modulo 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PCClass {
    pub symbols: [u8; 4],
    pub group: Group,
}

/// Group of a symbol tuple, or `None` for unreachable tuples (no zero).
pub fn group_of(symbols: [u8; 4]) -> Option<Group> {
    let zeros: Vec<usize> = (0..4).filter(|&i| symbols[i] == 0).collect();
    match zeros.len() {
        0 => None,
        4 => Some(Group::I),
        3 => Some(Group::II),
        1 => Some(Group::IV),
        _ => {
            if zeros == [0, 1] || zeros == [2, 3] {
                Some(Group::IIIii)
            } else {
                Some(Group::IIIi)
            }
        }
    }
}

/// All 369 reachable classes in lexicographic symbol order.
pub fn enumerate_pc_classes() -> Vec<PCClass> {
    let mut out = Vec::with_capacity(369);
    for s0 in 0..5u8 {
        for s1 in 0..5u8 {
            for s2 in 0..5u8 {
                for s3 in 0..5u8 {
                    let symbols = [s0, s1, s2, s3];
                    if let Some(group) = group_of(symbols) {
                        out.push(PCClass { symbols, group });
                    }
                }
            }
        }
    }
    out
}

/// Lexicographic index of a reachable symbol tuple among the 369 classes.
pub fn class_index(symbols: [u8; 4]) -> Option<usize> {
    group_of(symbols)?;
    let mut idx = 0;
    for s0 in 0..5u8 {
        for s1 in 0..5u8 {
            for s2 in 0..5u8 {
                for s3 in 0..5u8 {
                    let t = [s0, s1, s2, s3];
                    if t == symbols {
                        return Some(idx);
                    }
                    if group_of(t).is_some() {
                        idx += 1;
                    }
                }
            }
        }
    }
    None
}

/// 9-bit big-endian wire code of a class (its lexicographic index).
pub fn wire_encode(class: &PCClass) -> [u8; 9] {
    let idx = class_index(class.symbols).expect("reachable class") as u16;
    let mut bits = [0u8; 9];
    for (b, bit) in bits.iter_mut().enumerate() {
        *bit = ((idx >> (8 - b)) & 1) as u8;
    }
    bits
}

/// Inverse of [`wire_encode`]; errors on codes outside 0..369.
pub fn wire_decode(bits: [u8; 9]) -> Result<PCClass> {
    let mut idx = 0usize;
    for bit in bits {
        if bit > 1 {
            return Err(Error::UnsupportedInput("wire code bits must be 0 or 1".into()));
        }
        idx = (idx << 1) | bit as usize;
    }
    enumerate_pc_classes()
        .into_iter()
        .nth(idx)
        .ok_or_else(|| Error::UnsupportedInput(format!("wire code {idx} out of range")))
}

/// Closed-form circuit map: per term, amplitudes `(a, b, c)` of modes
/// (1, 2, 3) go to `(i(a+b)/2, (a-b)/2, (a+ib)/2, (ia+b)/2, c)` on modes
/// (8, 9, 10, 11, 3).
pub fn circuit_map(s: &CoherentSuperposition) -> Result<CoherentSuperposition> {
    if s.mode_count() != 3 {
        return Err(Error::ArityMismatch { left: s.mode_count(), right: 3 });
    }
    let i = C64::new(0.0, 1.0);
    let terms = s
        .terms()
        .iter()
        .map(|t| {
            let (a, b, c) = (t.amps[0], t.amps[1], t.amps[2]);
            CoherentTerm {
                coeff: t.coeff,
                amps: vec![
                    i * (a + b) * 0.5,
                    (a - b) * 0.5,
                    (a + i * b) * 0.5,
                    (i * a + b) * 0.5,
                    c,
                ],
            }
        })
        .collect();
    CoherentSuperposition::new(5, terms)
}

/// Reorder modes so that `new mode i = old mode perm[i]`.
fn permute_modes(s: &CoherentSuperposition, perm: &[usize]) -> CoherentSuperposition {
    let terms = s
        .terms()
        .iter()
        .map(|t| CoherentTerm {
            coeff: t.coeff,
            amps: perm.iter().map(|&p| t.amps[p]).collect(),
        })
        .collect();
    CoherentSuperposition::new(perm.len(), terms).expect("permutation preserves arity")
}

/// The same circuit as [`circuit_map`], but composed from its five named
/// elements (BS on the information mode, BS on Alice's channel mode, phase
/// shifter, then the two recombining beam splitters). Used as an oracle for
/// the fused map.
pub fn circuit_map_elements(s: &CoherentSuperposition) -> Result<CoherentSuperposition> {
    if s.mode_count() != 3 {
        return Err(Error::ArityMismatch { left: s.mode_count(), right: 3 });
    }
    // mode layout (4, 5, 6, 7, 3): information and channel modes each split
    // against a vacuum ancilla
    let five = permute_modes(&s.tensor(&CoherentSuperposition::vacuum(2)), &[0, 3, 1, 4, 2]);
    let out = five
        .apply_beam_splitter(0, 1)? // BS1: modes 4, 5
        .apply_beam_splitter(2, 3)? // BS2: modes 6, 7
        .apply_phase_shifter(1)? // PS on mode 5
        .apply_beam_splitter(1, 3)? // BS-57 -> (9, 8)
        .apply_beam_splitter(0, 2)?; // BS-46 -> (10, 11)
    // reorder to (8, 9, 10, 11, 3)
    Ok(permute_modes(&out, &[3, 1, 0, 2, 4]))
}

/// Initial joint state `|I>_1 (x) |E_channel>_{2,3}` of Alice and Bob.
pub fn joint_initial(
    c: &QuquatVector,
    basis: &AlphaBasis,
    channel: u8,
) -> Result<CoherentSuperposition> {
    if channel > 3 {
        return Err(Error::UnsupportedInput(format!("channel index {channel} out of range")));
    }
    Ok(c.to_superposition(basis).tensor(&basis.ecs_state(channel)))
}

/// Project one measured mode onto a photon-counting symbol subspace
/// (unnormalized result).
pub fn apply_symbol(s: &CoherentSuperposition, mode: usize, symbol: u8) -> Result<CoherentSuperposition> {
    match symbol {
        0 => s.project_vacuum(mode),
        4 => s.project_mod4(mode, 0, true),
        1..=3 => s.project_mod4(mode, symbol, false),
        _ => Err(Error::UnsupportedInput(format!("symbol {symbol} out of range"))),
    }
}

/// `<bra| Pi_symbol |ket>` for one measured mode, in closed form. The
/// projector identities keep everything inside the coherent kernel:
/// `P_j = (1/4) sum_k i^{-jk} (rotation by i^k)` and symbol 4 subtracts the
/// vacuum component from `P_0`.
fn symbol_overlap(bra: C64, ket: C64, symbol: u8) -> C64 {
    let vac = |g: C64| (-0.5 * g.norm_sqr()).exp();
    match symbol {
        0 => C64::new(vac(bra) * vac(ket), 0.0),
        4 => {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..4_i64 {
                acc += coherent_overlap(bra, i_pow(k) * ket);
            }
            acc * 0.25 - vac(bra) * vac(ket)
        }
        s => {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..4_i64 {
                acc += i_pow(-(s as i64) * k) * coherent_overlap(bra, i_pow(k) * ket);
            }
            acc * 0.25
        }
    }
}

/// Unnormalized Bob-mode cross matrix
/// `Tr_{Alice} [ Pi_symbols |sp><sq| Pi_symbols ]` in the `{|alpha_j>}` basis,
/// for two 5-mode post-circuit states. Modes 0..3 are measured; mode 4 is
/// Bob's, decomposed exactly on its `i^p alpha` support.
pub(crate) fn projected_cross_rho(
    sp: &CoherentSuperposition,
    sq: &CoherentSuperposition,
    symbols: [u8; 4],
    basis: &AlphaBasis,
) -> Result<Matrix4<C64>> {
    for s in [sp, sq] {
        if s.mode_count() != 5 {
            return Err(Error::ArityMismatch { left: s.mode_count(), right: 5 });
        }
    }
    let r = basis.alpha_block.r;
    let decomp = |s: &CoherentSuperposition| -> Result<Vec<[C64; 4]>> {
        s.terms()
            .iter()
            .map(|t| {
                let p = phase_class(t.amps[4], basis.alpha)?;
                let mut row = [C64::new(0.0, 0.0); 4];
                for (j, rj) in r.iter().enumerate() {
                    row[j] = i_pow(p * j as i64) * (rj / 2.0);
                }
                Ok(row)
            })
            .collect()
    };
    let dp = decomp(sp)?;
    let dq = decomp(sq)?;
    let mut rho = Matrix4::<C64>::zeros();
    for (tp, rowp) in sp.terms().iter().zip(&dp) {
        for (tq, rowq) in sq.terms().iter().zip(&dq) {
            let mut w = tp.coeff * tq.coeff.conj();
            for (m, &sym) in symbols.iter().enumerate() {
                w *= symbol_overlap(tq.amps[m], tp.amps[m], sym);
                if w.norm_sqr() == 0.0 {
                    break;
                }
            }
            if w.norm_sqr() == 0.0 {
                continue;
            }
            for j in 0..4 {
                for k in 0..4 {
                    rho[(j, k)] += w * rowp[j] * rowq[k].conj();
                }
            }
        }
    }
    Ok(rho)
}

/// Result of conditioning the post-circuit state on one photon-counting class.
#[derive(Debug, Clone)]
pub struct MeasurementOutcome {
    pub pc_class: PCClass,
    pub probability: f64,
    /// Bob's normalized conditional state; `None` when the probability is
    /// below [`PROB_FLOOR`].
    pub bob_dm: Option<DensityMatrix4>,
    pub purity: Option<f64>,
}

/// Probability of an arbitrary symbol tuple (including unreachable ones,
/// which come out at zero).
pub fn tuple_probability(
    out_state: &CoherentSuperposition,
    symbols: [u8; 4],
    basis: &AlphaBasis,
) -> Result<f64> {
    let rho = projected_cross_rho(out_state, out_state, symbols, basis)?;
    Ok(DensityMatrix4(rho).trace().max(0.0))
}

/// Condition a post-circuit 5-mode state on a photon-counting class.
pub fn measure(
    out_state: &CoherentSuperposition,
    pc_class: &PCClass,
    basis: &AlphaBasis,
) -> Result<MeasurementOutcome> {
    let raw = DensityMatrix4(projected_cross_rho(out_state, out_state, pc_class.symbols, basis)?);
    let probability = raw.trace().max(0.0);
    if probability < PROB_FLOOR {
        return Ok(MeasurementOutcome {
            pc_class: *pc_class,
            probability,
            bob_dm: None,
            purity: None,
        });
    }
    let bob = raw.normalized()?;
    let purity = bob.purity();
    Ok(MeasurementOutcome {
        pc_class: *pc_class,
        probability,
        bob_dm: Some(bob),
        purity: Some(purity),
    })
}

/// Kind of recovery operation attached to a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrectionKind {
    Identity,
    Ujk,
    Ujkm,
    NoneFail,
}

/// Bob's recovery operation in the `{|alpha_j>}` basis.
#[derive(Debug, Clone, Copy)]
pub struct Correction {
    pub kind: CorrectionKind,
    pub j: u8,
    pub k: u8,
    pub m: u8,
    /// Scalar applied in front of `matrix` when the correction is used
    /// (`sqrt 2` for the odd-m combinations).
    pub prefactor: C64,
    pub matrix: Matrix4<C64>,
}

/// `U^{(j,k)}[(k+l)%4][l] = (-i)^{jl}`.
pub fn matrix_u_jk(j: u8, k: u8) -> Matrix4<C64> {
    let mut m = Matrix4::<C64>::zeros();
    for l in 0..4usize {
        m[((k as usize + l) % 4, l)] = i_pow(-((j as i64) * l as i64));
    }
    m
}

/// `U^{(j,k,m)} = (1/2)[U^{(j,k)} + (-i)^m U^{(j+2,k)}]`.
pub fn matrix_u_jkm(j: u8, k: u8, m: u8) -> Matrix4<C64> {
    (matrix_u_jk(j, k) + matrix_u_jk((j + 2) % 4, k) * i_pow(-(m as i64)))
        * C64::new(0.5, 0.0)
}

/// The single-index correction `U^{(j,k)}` (identity for `j = k = 0`).
pub fn unitary_u(j: u8, k: u8) -> Correction {
    let kind = if j == 0 && k == 0 { CorrectionKind::Identity } else { CorrectionKind::Ujk };
    Correction {
        kind,
        j,
        k,
        m: 0,
        prefactor: C64::new(1.0, 0.0),
        matrix: matrix_u_jk(j, k),
    }
}

/// The combined correction `U^{(j,k,m)}`; for odd `m` the applied operator is
/// `sqrt 2 * U^{(j,k,m)}`, which is unitary.
pub fn unitary_u_jkm(j: u8, k: u8, m: u8) -> Correction {
    let prefactor = if m % 2 == 1 { C64::new(2.0_f64.sqrt(), 0.0) } else { C64::new(1.0, 0.0) };
    Correction {
        kind: CorrectionKind::Ujkm,
        j,
        k,
        m,
        prefactor,
        matrix: matrix_u_jkm(j, k, m),
    }
}

/// The no-correction marker for failure classes.
pub fn correction_none() -> Correction {
    Correction {
        kind: CorrectionKind::NoneFail,
        j: 0,
        k: 0,
        m: 0,
        prefactor: C64::new(0.0, 0.0),
        matrix: Matrix4::zeros(),
    }
}

impl Correction {
    /// The operator actually applied by Bob (`None` for failure classes).
    pub fn applied(&self) -> Option<Matrix4<C64>> {
        match self.kind {
            CorrectionKind::NoneFail => None,
            _ => Some(self.matrix * self.prefactor),
        }
    }

    /// Stable identifier used in reports and CLI output.
    pub fn label(&self) -> String {
        match self.kind {
            CorrectionKind::Identity => "I".to_string(),
            CorrectionKind::Ujk => format!("U({},{})", self.j, self.k),
            CorrectionKind::Ujkm => {
                if self.m % 2 == 1 {
                    format!("sqrt2*U({},{},{})", self.j, self.k, self.m)
                } else {
                    format!("U({},{},{})", self.j, self.k, self.m)
                }
            }
            CorrectionKind::NoneFail => "none".to_string(),
        }
    }
}

/// Bob-state form `B^{(j,k)}`: component `l` is
/// `c_{(l+k)%4} (r_l / r_{(l+k)%4}) i^{jl}`.
pub fn bob_form_jk(j: u8, k: u8, c: &QuquatVector, basis: &AlphaBasis) -> QuquatVector {
    let r = basis.alpha_block.r;
    let mut v = [C64::new(0.0, 0.0); 4];
    for (l, vl) in v.iter_mut().enumerate() {
        let lk = (l + k as usize) % 4;
        *vl = c.0[lk] * (r[l] / r[lk]) * i_pow((j as i64) * l as i64);
    }
    QuquatVector(v)
}

/// Bob-state form `B^{(j,k,m)} = (1/2)[B^{(j,k)} + i^m B^{(j+2,k)}]`.
pub fn bob_form_jkm(j: u8, k: u8, m: u8, c: &QuquatVector, basis: &AlphaBasis) -> QuquatVector {
    let b1 = bob_form_jk(j, k, c, basis);
    let b2 = bob_form_jk((j + 2) % 4, k, c, basis);
    let ph = i_pow(m as i64);
    let mut v = [C64::new(0.0, 0.0); 4];
    for (vl, (b1l, b2l)) in v.iter_mut().zip(b1.0.iter().zip(&b2.0)) {
        *vl = (b1l + ph * b2l) * 0.5;
    }
    QuquatVector(v)
}

/// If `v` is parallel to `b`, the phase `ph` with `v ~ ph * b / |b|`;
/// `None` otherwise (or when `b` vanishes).
pub fn parallel_phase(v: &QuquatVector, b: &QuquatVector) -> Option<C64> {
    let nb = b.norm_sq().sqrt();
    if nb < 1e-12 {
        return None;
    }
    let nv = v.norm_sq().sqrt();
    let mut ov = C64::new(0.0, 0.0);
    for l in 0..4 {
        ov += (b.0[l] / nb).conj() * v.0[l];
    }
    let mut resid = 0.0;
    for l in 0..4 {
        resid += (v.0[l] - ov * b.0[l] / nb).norm_sqr();
    }
    if resid.sqrt() < 1e-8 * nv {
        Some(ov / ov.norm())
    } else {
        None
    }
}

/// Which Bob-state form a pure class realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BobFormId {
    Jk { j: u8, k: u8 },
    Jkm { j: u8, k: u8, m: u8 },
}

/// One derived row of the correction table.
#[derive(Debug, Clone)]
pub struct TableEntry {
    pub class: PCClass,
    pub correction: Correction,
    /// Fidelity form achieved by the correction (successes), or the form the
    /// paper reports for the 16 failing two-zero rows.
    pub form: Option<Form>,
    pub bob_form: Option<BobFormId>,
}

/// The full simulation-derived correction table over all 369 classes.
#[derive(Debug, Clone)]
pub struct CorrectionTable {
    pub entries: Vec<TableEntry>,
}

impl CorrectionTable {
    pub fn lookup(&self, symbols: [u8; 4]) -> Option<&TableEntry> {
        class_index(symbols).map(|i| &self.entries[i])
    }
}

/// Fixed diverse information states used to derive and audit the tables.
pub fn default_sample_infos() -> Vec<QuquatVector> {
    let c = |re: f64, im: f64| C64::new(re, im);
    [
        [c(0.60, 0.00), c(0.30, 0.40), c(-0.25, 0.10), c(0.40, -0.20)],
        [c(0.20, -0.50), c(0.70, 0.00), c(0.00, 0.35), c(-0.30, 0.10)],
        [c(-0.45, 0.00), c(0.15, -0.30), c(0.55, 0.20), c(0.25, 0.35)],
    ]
    .iter()
    .map(|v| QuquatVector(*v).normalized().expect("nonzero sample"))
    .collect()
}

/// All candidate form ids a Bob vector matches for a given information state.
fn identify_forms(vec: &QuquatVector, c: &QuquatVector, basis: &AlphaBasis) -> Vec<BobFormId> {
    let mut out = Vec::new();
    for j in 0..4u8 {
        for k in 0..4u8 {
            if parallel_phase(vec, &bob_form_jk(j, k, c, basis)).is_some() {
                out.push(BobFormId::Jk { j, k });
            }
            for m in 0..4u8 {
                if parallel_phase(vec, &bob_form_jkm(j, k, m, c, basis)).is_some() {
                    out.push(BobFormId::Jkm { j, k, m });
                }
            }
        }
    }
    out
}

/// Fidelity form associated with a Group IV correction index `k`.
fn group_iv_form(k: u8) -> Form {
    match k {
        0 => Form::F7,
        1 => Form::F8,
        2 => Form::F9,
        _ => Form::F10,
    }
}

/// Fidelity form of a two-zero class from its derived `(k, m)`.
fn group_iii_ii_form(k: u8, m: u8) -> Form {
    match (k, m) {
        (0, 0) => Form::F1,
        (0, 2) => Form::F2,
        (2, 2) => Form::F3,
        (2, 0) => Form::F4,
        (1, _) => Form::F5,
        _ => Form::F6,
    }
}

/// Below this amplitude the extreme classes are too ill conditioned in f64 to
/// identify Bob forms; table content is amplitude independent, so derivation
/// falls back to a reference amplitude instead.
pub const MIN_TABLE_ALPHA: f64 = 0.5;

/// Basis actually used for table derivation/audit: the caller's when it is
/// well conditioned, otherwise a reference-amplitude stand-in.
fn derivation_basis(basis: &AlphaBasis) -> Result<std::borrow::Cow<'_, AlphaBasis>> {
    if basis.alpha.norm() < MIN_TABLE_ALPHA {
        Ok(std::borrow::Cow::Owned(crate::basis::make_basis(C64::new(1.0, 0.0))?))
    } else {
        Ok(std::borrow::Cow::Borrowed(basis))
    }
}

/// Derive the correction table from simulation at the given basis, using the
/// sample information states to identify each pure class's Bob form.
///
/// The table (corrections and form labels) does not depend on the amplitude;
/// below [`MIN_TABLE_ALPHA`] derivation runs at a reference amplitude where
/// the identification is numerically well posed.
pub fn derive_table(basis: &AlphaBasis, sample_infos: &[QuquatVector]) -> Result<CorrectionTable> {
    if sample_infos.len() < 3 {
        return Err(Error::DegenerateInput("need at least 3 sample information states".into()));
    }
    let basis = &*derivation_basis(basis)?;
    let s5s: Vec<CoherentSuperposition> = sample_infos
        .iter()
        .map(|c| circuit_map(&joint_initial(c, basis, 0)?))
        .collect::<Result<_>>()?;
    let mut entries = Vec::with_capacity(369);
    for class in enumerate_pc_classes() {
        let entry = match class.group {
            Group::I => TableEntry {
                class,
                correction: unitary_u(0, 0),
                form: Some(Form::F0),
                bob_form: None,
            },
            Group::II | Group::IIIi => TableEntry {
                class,
                correction: correction_none(),
                form: None,
                bob_form: None,
            },
            Group::IIIii | Group::IV => {
                let mut common: Option<Vec<BobFormId>> = None;
                for (c, s5) in sample_infos.iter().zip(&s5s) {
                    // go through the analytic cross-rho rather than `measure`:
                    // the class structure is well conditioned even when the
                    // probability itself is far below the reporting floor
                    let raw = projected_cross_rho(s5, s5, class.symbols, basis)?;
                    let raw = DensityMatrix4(raw);
                    if raw.trace() < 1e-250 {
                        continue;
                    }
                    let bob = raw.normalized()?;
                    let purity = bob.purity();
                    // genuinely mixed classes sit far from 1; the slack only
                    // absorbs cancellation noise at small amplitudes
                    if (purity - 1.0).abs() > 1e-6 {
                        return Err(Error::DegenerateInput(format!(
                            "class {:?} expected pure, purity {purity}",
                            class.symbols
                        )));
                    }
                    let vec = bob.dominant_eigenvector();
                    let ids = identify_forms(&vec, c, basis);
                    common = Some(match common {
                        None => ids,
                        Some(prev) => prev.into_iter().filter(|id| ids.contains(id)).collect(),
                    });
                }
                let common = common.ok_or_else(|| {
                    Error::DegenerateInput(format!(
                        "class {:?} unreachable for all sample infos",
                        class.symbols
                    ))
                })?;
                match class.group {
                    Group::IV => {
                        let jks: Vec<(u8, u8)> = common
                            .iter()
                            .filter_map(|id| match id {
                                BobFormId::Jk { j, k } => Some((*j, *k)),
                                _ => None,
                            })
                            .collect();
                        if jks.len() != 1 {
                            return Err(Error::DegenerateInput(format!(
                                "class {:?}: ambiguous correction {jks:?}",
                                class.symbols
                            )));
                        }
                        let (j, k) = jks[0];
                        TableEntry {
                            class,
                            correction: unitary_u(j, k),
                            form: Some(group_iv_form(k)),
                            bob_form: Some(BobFormId::Jk { j, k }),
                        }
                    }
                    _ => {
                        let mut jkms: Vec<(u8, u8, u8)> = common
                            .iter()
                            .filter_map(|id| match id {
                                BobFormId::Jkm { j, k, m } => Some((*j, *k, *m)),
                                _ => None,
                            })
                            .collect();
                        jkms.sort_unstable();
                        let Some(&(j, k, m)) = jkms.first() else {
                            return Err(Error::DegenerateInput(format!(
                                "class {:?}: no B(j,k,m) form found",
                                class.symbols
                            )));
                        };
                        let correction =
                            if m % 2 == 1 { unitary_u_jkm(j, k, m) } else { correction_none() };
                        TableEntry {
                            class,
                            correction,
                            form: Some(group_iii_ii_form(k, m)),
                            bob_form: Some(BobFormId::Jkm { j, k, m }),
                        }
                    }
                }
            }
        };
        entries.push(entry);
    }
    Ok(CorrectionTable { entries })
}

/// Post-correction fidelity `<I| A rho_B A^dag |I>` for a measurement outcome.
pub fn teleport_fidelity(
    outcome: &MeasurementOutcome,
    correction: &Correction,
    c: &QuquatVector,
) -> Result<f64> {
    let bob = outcome.bob_dm.as_ref().ok_or(Error::UndefinedBobState)?;
    let a = correction
        .applied()
        .ok_or_else(|| Error::UnsupportedInput("failure class has no unitary correction".into()))?;
    let rho = a * bob.0 * a.adjoint();
    Ok(DensityMatrix4(rho).expectation(c))
}

/// One Table-2 row whose printed correction disagrees with simulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Table2Diff {
    pub symbols: [u8; 4],
    pub printed: (u8, u8),
    pub derived: (u8, u8),
}

/// Outcome of auditing the printed tables against the derived ones.
#[derive(Debug, Clone)]
pub struct TableAuditReport {
    pub derived: CorrectionTable,
    pub table1_checked: usize,
    pub table1_mismatches: Vec<String>,
    pub table2_checked: usize,
    pub table2_diffs: Vec<Table2Diff>,
    pub table2_duplicates: Vec<[u8; 4]>,
    pub table2_missing: Vec<[u8; 4]>,
}

/// Audit every printed table row against simulation: Bob-state form, stated
/// correction (including optimality within the table's unitary family), and
/// stated fidelity form. Mismatches are report content, not errors.
pub fn verify_tables(basis: &AlphaBasis, sample_infos: &[QuquatVector]) -> Result<TableAuditReport> {
    let derived = derive_table(basis, sample_infos)?;
    // audit at the derivation basis: table claims are amplitude independent
    let basis = &*derivation_basis(basis)?;
    let s5s: Vec<CoherentSuperposition> = sample_infos
        .iter()
        .map(|c| circuit_map(&joint_initial(c, basis, 0)?))
        .collect::<Result<_>>()?;

    // the family of unitaries the tables draw from
    let mut family: Vec<Matrix4<C64>> = Vec::new();
    for j in 0..4u8 {
        for k in 0..4u8 {
            family.push(matrix_u_jk(j, k));
            for m in [1u8, 3] {
                family.push(matrix_u_jkm(j, k, m) * C64::new(2.0_f64.sqrt(), 0.0));
            }
        }
    }

    let mut table1_mismatches = Vec::new();
    for row in TABLE1 {
        let class = PCClass { symbols: row.symbols, group: group_of(row.symbols).unwrap() };
        let stated: Matrix4<C64> = if row.m % 2 == 1 {
            matrix_u_jkm(row.j, row.k, row.m) * C64::new(2.0_f64.sqrt(), 0.0)
        } else {
            matrix_u_jk(row.j, row.k)
        };
        let mut stated_fs = Vec::new();
        let mut family_fs = vec![Vec::new(); family.len()];
        for (c, s5) in sample_infos.iter().zip(&s5s) {
            let outcome = measure(s5, &class, basis)?;
            let Some(bob) = outcome.bob_dm.as_ref() else { continue };
            let vec = bob.dominant_eigenvector();
            let expected_b = bob_form_jkm(row.j, row.k, row.m, c, basis);
            if parallel_phase(&vec, &expected_b).is_none() {
                table1_mismatches.push(format!(
                    "{:?}: Bob state not parallel to B({},{},{})",
                    row.symbols, row.j, row.k, row.m
                ));
                break;
            }
            let f_stated = DensityMatrix4(stated * bob.0 * stated.adjoint()).expectation(c);
            let f_form = crate::analysis::fidelity_form(row.form, c, basis)?;
            if (f_stated - f_form).abs() > 1e-9 {
                table1_mismatches.push(format!(
                    "{:?}: fidelity {f_stated} != form {} = {f_form}",
                    row.symbols, row.form
                ));
                break;
            }
            stated_fs.push(f_stated);
            for (u, fs) in family.iter().zip(family_fs.iter_mut()) {
                fs.push(DensityMatrix4(u * bob.0 * u.adjoint()).expectation(c));
            }
        }
        // optimality within the family: the stated correction must not be
        // strictly beaten on every sample at once (a rival winning on one
        // particular info state is expected, dominance is not)
        if row.m % 2 == 1 && !stated_fs.is_empty() {
            let dominated = family_fs.iter().any(|fs| {
                fs.iter().zip(&stated_fs).all(|(f, s)| *f > s + 1e-9)
            });
            if dominated {
                table1_mismatches.push(format!(
                    "{:?}: stated U dominated within the unitary family",
                    row.symbols
                ));
            }
        }
    }

    // Table 2: duplicates, missing tuples, and printed-vs-derived corrections
    let mut counts: std::collections::HashMap<[u8; 4], usize> = std::collections::HashMap::new();
    for row in TABLE2 {
        *counts.entry(row.symbols).or_insert(0) += 1;
    }
    let mut table2_duplicates: Vec<[u8; 4]> =
        counts.iter().filter(|(_, &n)| n > 1).map(|(&t, _)| t).collect();
    table2_duplicates.sort_unstable();
    let mut table2_missing: Vec<[u8; 4]> = enumerate_pc_classes()
        .iter()
        .filter(|cl| cl.group == Group::IV && !counts.contains_key(&cl.symbols))
        .map(|cl| cl.symbols)
        .collect();
    table2_missing.sort_unstable();
    let mut table2_diffs = Vec::new();
    for row in TABLE2 {
        let entry = derived.lookup(row.symbols).expect("Group IV tuple is reachable");
        let derived_jk = (entry.correction.j, entry.correction.k);
        if (row.j, row.k) != derived_jk {
            let diff = Table2Diff { symbols: row.symbols, printed: (row.j, row.k), derived: derived_jk };
            if !table2_diffs.contains(&diff) {
                table2_diffs.push(diff);
            }
        }
    }

    Ok(TableAuditReport {
        derived,
        table1_checked: TABLE1.len(),
        table1_mismatches,
        table2_checked: TABLE2.len(),
        table2_diffs,
        table2_duplicates,
        table2_missing,
    })
}

/// How failure classes score when averaging fidelity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailPolicy {
    /// Failures contribute fidelity 0 (conservative lower bound).
    Zero,
    /// Failures contribute the best-effort overlap `<I| rho_B |I>`.
    Overlap,
}

/// Per-class data of a [`TeleportContext`]: the cross matrices
/// `R_pq = Tr_Alice [ Pi |psi_p><psi_q| Pi ]` over the four basis inputs
/// `e_p`, so that for information state `c` the unnormalized Bob matrix is
/// `sum_pq c_p conj(c_q) R_pq`.
#[derive(Debug, Clone)]
pub struct ContextEntry {
    pub table: TableEntry,
    pub r: [[Matrix4<C64>; 4]; 4],
    /// `tr[(p,q)] = trace(R_pq)`; probability is the quadratic form in `c`.
    pub tr: Matrix4<C64>,
}

/// Precomputed machinery for fast probability and average-fidelity evaluation
/// over all 369 classes at a fixed basis.
#[derive(Debug, Clone)]
pub struct TeleportContext {
    pub basis: AlphaBasis,
    pub entries: Vec<ContextEntry>,
    /// `w_success[p][q] = sum over success classes of U R_pq U^dag`.
    w_success: [[Matrix4<C64>; 4]; 4],
    /// `w_fail[p][q] = sum over failure classes of R_pq`.
    w_fail: [[Matrix4<C64>; 4]; 4],
    /// Quadratic form of the total Group IV probability.
    h_group_iv: Matrix4<C64>,
}

impl TeleportContext {
    pub fn new(basis: &AlphaBasis) -> Result<Self> {
        let table = derive_table(basis, &default_sample_infos())?;
        let mut base = Vec::with_capacity(4);
        for p in 0..4 {
            let mut e = [C64::new(0.0, 0.0); 4];
            e[p] = C64::new(1.0, 0.0);
            base.push(circuit_map(&joint_initial(&QuquatVector(e), basis, 0)?)?);
        }
        let zeros = || [[Matrix4::<C64>::zeros(); 4]; 4];
        let mut w_success = zeros();
        let mut w_fail = zeros();
        let mut h_group_iv = Matrix4::<C64>::zeros();
        let mut entries = Vec::with_capacity(table.entries.len());
        for te in &table.entries {
            let mut r = zeros();
            let mut tr = Matrix4::<C64>::zeros();
            for p in 0..4 {
                for q in 0..4 {
                    let m = projected_cross_rho(&base[p], &base[q], te.class.symbols, basis)?;
                    tr[(p, q)] = m[(0, 0)] + m[(1, 1)] + m[(2, 2)] + m[(3, 3)];
                    r[p][q] = m;
                }
            }
            match te.correction.applied() {
                Some(u) => {
                    for p in 0..4 {
                        for q in 0..4 {
                            w_success[p][q] += u * r[p][q] * u.adjoint();
                        }
                    }
                }
                None => {
                    for p in 0..4 {
                        for q in 0..4 {
                            w_fail[p][q] += r[p][q];
                        }
                    }
                }
            }
            if te.class.group == Group::IV {
                h_group_iv += tr;
            }
            entries.push(ContextEntry { table: te.clone(), r, tr });
        }
        Ok(Self { basis: basis.clone(), entries, w_success, w_fail, h_group_iv })
    }

    /// Unnormalized Bob matrix of one class for information state `c`.
    pub fn rho_tilde(&self, idx: usize, c: &QuquatVector) -> Matrix4<C64> {
        let mut rho = Matrix4::<C64>::zeros();
        for p in 0..4 {
            for q in 0..4 {
                rho += self.entries[idx].r[p][q] * (c.0[p] * c.0[q].conj());
            }
        }
        rho
    }

    /// Probability of one class for information state `c`.
    pub fn class_probability(&self, idx: usize, c: &QuquatVector) -> f64 {
        quadratic_form(&self.entries[idx].tr, c).max(0.0)
    }

    /// Probability-weighted average fidelity over all 369 classes.
    pub fn favg(&self, c: &QuquatVector, policy: FailPolicy) -> f64 {
        let mut acc = 0.0;
        for p in 0..4 {
            for q in 0..4 {
                let mut w = self.w_success[p][q];
                if policy == FailPolicy::Overlap {
                    w += self.w_fail[p][q];
                }
                let mut inner = C64::new(0.0, 0.0);
                for j in 0..4 {
                    for k in 0..4 {
                        inner += c.0[j].conj() * w[(j, k)] * c.0[k];
                    }
                }
                acc += (c.0[p] * c.0[q].conj() * inner).re;
            }
        }
        acc
    }

    /// Total Group IV probability for information state `c`.
    pub fn group_iv_probability(&self, c: &QuquatVector) -> f64 {
        quadratic_form(&self.h_group_iv, c).max(0.0)
    }

    /// Worst-case (over information states) total Group IV probability:
    /// the smallest eigenvalue of its quadratic form.
    pub fn min_group_iv_probability(&self) -> f64 {
        DensityMatrix4(self.h_group_iv).min_eigenvalue()
    }
}

fn quadratic_form(m: &Matrix4<C64>, c: &QuquatVector) -> f64 {
    let mut acc = C64::new(0.0, 0.0);
    for p in 0..4 {
        for q in 0..4 {
            acc += c.0[p] * c.0[q].conj() * m[(p, q)];
        }
    }
    acc.re
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::make_basis;

    fn basis(alpha: f64) -> AlphaBasis {
        make_basis(C64::new(alpha, 0.0)).unwrap()
    }

    fn sample_c() -> QuquatVector {
        QuquatVector([
            C64::new(0.5, 0.1),
            C64::new(-0.3, 0.45),
            C64::new(0.2, -0.4),
            C64::new(0.35, 0.25),
        ])
        .normalized()
        .unwrap()
    }

    #[test]
    fn taxonomy_counts() {
        let classes = enumerate_pc_classes();
        assert_eq!(classes.len(), 369);
        let count = |g: Group| classes.iter().filter(|c| c.group == g).count();
        assert_eq!(count(Group::I), 1);
        assert_eq!(count(Group::II), 16);
        assert_eq!(count(Group::IIIi), 64);
        assert_eq!(count(Group::IIIii), 32);
        assert_eq!(count(Group::IV), 256);
        assert!(group_of([1, 2, 3, 4]).is_none());
    }

    #[test]
    fn wire_code_round_trip() {
        for (i, class) in enumerate_pc_classes().iter().enumerate() {
            assert_eq!(class_index(class.symbols), Some(i));
            let bits = wire_encode(class);
            assert_eq!(wire_decode(bits).unwrap().symbols, class.symbols);
        }
        assert!(wire_decode([1, 1, 1, 1, 1, 1, 1, 1, 1]).is_err());
    }

    #[test]
    fn circuit_map_on_equal_amplitudes() {
        // |a,a,a> -> |ia, 0, beta, beta, a> with beta = (1+i)a/2
        let b = basis(1.1);
        let a = b.alpha;
        let s = CoherentSuperposition::product(&[a, a, a]);
        let out = circuit_map(&s).unwrap();
        let t = &out.terms()[0];
        let beta = b.beta;
        let i = C64::new(0.0, 1.0);
        assert!((t.amps[0] - i * a).norm() < 1e-15);
        assert!(t.amps[1].norm() < 1e-15);
        assert!((t.amps[2] - beta).norm() < 1e-15);
        assert!((t.amps[3] - beta).norm() < 1e-15);
        assert!((t.amps[4] - a).norm() < 1e-15);
    }

    #[test]
    fn fused_map_equals_elementwise_circuit() {
        let amps = [
            [C64::new(0.7, 0.2), C64::new(-0.4, 0.9), C64::new(0.1, -0.6)],
            [C64::new(1.3, 0.0), C64::new(0.0, 1.3), C64::new(-1.3, 0.0)],
            [C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)],
        ];
        for a in amps {
            let s = CoherentSuperposition::product(&a);
            let fused = circuit_map(&s).unwrap();
            let elems = circuit_map_elements(&s).unwrap();
            let tf = &fused.terms()[0];
            let te = &elems.terms()[0];
            for m in 0..5 {
                assert!((tf.amps[m] - te.amps[m]).norm() < 1e-14, "mode {m}");
            }
        }
        // norm preservation on a superposition input
        let b = basis(1.2);
        let joint = joint_initial(&sample_c(), &b, 0).unwrap();
        let out = circuit_map(&joint).unwrap();
        assert!((out.norm_sq() - joint.norm_sq()).abs() < 1e-12);
    }

    #[test]
    fn joint_initial_structure() {
        let b = basis(2.0);
        let c = QuquatVector([
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        ]);
        let joint = joint_initial(&c, &b, 0).unwrap();
        assert_eq!(joint.mode_count(), 3);
        assert_eq!(joint.terms().len(), 16);
        assert!((joint.norm_sq() - 1.0).abs() < 1e-12);
        assert!(joint_initial(&c, &b, 4).is_err());
    }

    #[test]
    fn completeness_over_all_symbol_tuples() {
        let b = basis(1.3);
        let out = circuit_map(&joint_initial(&sample_c(), &b, 0).unwrap()).unwrap();
        let mut total = 0.0;
        for s0 in 0..5u8 {
            for s1 in 0..5u8 {
                for s2 in 0..5u8 {
                    for s3 in 0..5u8 {
                        let sym = [s0, s1, s2, s3];
                        let p = tuple_probability(&out, sym, &b).unwrap();
                        if group_of(sym).is_none() {
                            assert!(p < 1e-12, "{sym:?}: {p}");
                        }
                        total += p;
                    }
                }
            }
        }
        assert!((total - 1.0).abs() < 1e-10, "total {total}");
    }

    #[test]
    fn measure_agrees_with_explicit_projection_chain() {
        let b = basis(1.1);
        let c = sample_c();
        let out = circuit_map(&joint_initial(&c, &b, 0).unwrap()).unwrap();
        for symbols in [[0, 0, 0, 0], [4, 0, 0, 0], [4, 1, 0, 0], [4, 0, 2, 3]] {
            let class = PCClass { symbols, group: group_of(symbols).unwrap() };
            let fast = measure(&out, &class, &b).unwrap();
            let mut projected = out.clone();
            for (m, &s) in symbols.iter().enumerate() {
                projected = apply_symbol(&projected, m, s).unwrap();
            }
            assert!(
                (fast.probability - projected.norm_sq()).abs() < 1e-12,
                "{symbols:?}: {} vs {}",
                fast.probability,
                projected.norm_sq()
            );
            if fast.probability > PROB_FLOOR {
                let slow = crate::dm::trace_out_to_dm4(&projected, 4, &b)
                    .unwrap()
                    .normalized()
                    .unwrap();
                let fastdm = fast.bob_dm.unwrap();
                for j in 0..4 {
                    for k in 0..4 {
                        assert!((slow.0[(j, k)] - fastdm.0[(j, k)]).norm() < 1e-10);
                    }
                }
            }
        }
    }

    #[test]
    fn all_zero_class_yields_alpha0_with_closed_form_probability() {
        let b = basis(1.0);
        let c = QuquatVector([
            C64::new(1.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
            C64::new(0.0, 0.0),
        ]);
        let out = circuit_map(&joint_initial(&c, &b, 0).unwrap()).unwrap();
        let class = PCClass { symbols: [0, 0, 0, 0], group: Group::I };
        let o = measure(&out, &class, &b).unwrap();
        let t = b.alpha.norm_sqr();
        let x = b.x();
        let expected = 4.0 * x * x / (1.0 + x.powi(4) + 2.0 * x * x * (2.0 * t).cos());
        assert!((o.probability - expected).abs() < 1e-12);
        let bob = o.bob_dm.unwrap();
        assert!((o.purity.unwrap() - 1.0).abs() < 1e-10);
        // Bob holds |alpha_0>
        assert!((bob.0[(0, 0)].re - 1.0).abs() < 1e-10);
    }

    #[test]
    fn mixed_outcome_in_group_ii() {
        let b = basis(1.0);
        let c = sample_c();
        let out = circuit_map(&joint_initial(&c, &b, 0).unwrap()).unwrap();
        let class = PCClass { symbols: [4, 0, 0, 0], group: Group::II };
        let o = measure(&out, &class, &b).unwrap();
        assert!(o.purity.unwrap() < 1.0 - 1e-6, "purity {}", o.purity.unwrap());
    }

    #[test]
    fn correction_matrices_have_table_structure() {
        // all U(j,k) unitary; sqrt2 U(j,k,m) unitary for odd m; even m has
        // singular values {1, 1, 0, 0}
        let id = Matrix4::<C64>::identity();
        let defect = |m: &Matrix4<C64>| {
            let d = m.adjoint() * m - id;
            d.iter().map(|z| z.norm()).fold(0.0_f64, f64::max)
        };
        for j in 0..4u8 {
            for k in 0..4u8 {
                assert!(defect(&matrix_u_jk(j, k)) < 1e-12, "U({j},{k})");
                for m in 0..4u8 {
                    let u = matrix_u_jkm(j, k, m);
                    if m % 2 == 1 {
                        assert!(defect(&(u * C64::new(2.0_f64.sqrt(), 0.0))) < 1e-12);
                    } else {
                        let svd = u.svd(false, false);
                        let mut sv: Vec<f64> = svd.singular_values.iter().copied().collect();
                        sv.sort_by(|a, b| b.partial_cmp(a).unwrap());
                        assert!((sv[0] - 1.0).abs() < 1e-10 && (sv[1] - 1.0).abs() < 1e-10);
                        assert!(sv[2] < 1e-10 && sv[3] < 1e-10);
                    }
                }
            }
        }
        assert_eq!(unitary_u(0, 0).kind, CorrectionKind::Identity);
        assert!((unitary_u(0, 0).matrix - id).iter().all(|z| z.norm() < 1e-15));
    }

    #[test]
    fn derived_group_iv_k0_classes_are_perfect() {
        let b = basis(0.8);
        let table = derive_table(&b, &default_sample_infos()).unwrap();
        let c = sample_c();
        let out = circuit_map(&joint_initial(&c, &b, 0).unwrap()).unwrap();
        let mut k0 = 0;
        for entry in &table.entries {
            if entry.class.group != Group::IV || entry.correction.k != 0 {
                continue;
            }
            k0 += 1;
            let o = measure(&out, &entry.class, &b).unwrap();
            let f = teleport_fidelity(&o, &entry.correction, &c).unwrap();
            assert!((f - 1.0).abs() < 1e-10, "{:?}: F = {f}", entry.class.symbols);
        }
        assert_eq!(k0, 64);
    }

    #[test]
    fn teleport_fidelity_guards() {
        let b = basis(1.0);
        let c = sample_c();
        let out = circuit_map(&joint_initial(&c, &b, 0).unwrap()).unwrap();
        let class = PCClass { symbols: [1, 2, 3, 4], group: Group::IV };
        // unreachable tuple forced through measure: probability ~ 0
        let o = measure(&out, &PCClass { symbols: [1, 1, 1, 0], group: Group::IV }, &b).unwrap();
        assert!(o.probability >= 0.0);
        let undefined = MeasurementOutcome {
            pc_class: class,
            probability: 0.0,
            bob_dm: None,
            purity: None,
        };
        assert!(matches!(
            teleport_fidelity(&undefined, &unitary_u(0, 0), &c),
            Err(Error::UndefinedBobState)
        ));
        let ok = measure(&out, &PCClass { symbols: [4, 1, 2, 0], group: Group::IV }, &b).unwrap();
        assert!(matches!(
            teleport_fidelity(&ok, &correction_none(), &c),
            Err(Error::UnsupportedInput(_))
        ));
    }

    #[test]
    fn context_probabilities_match_direct_measurement() {
        let b = basis(1.2);
        let ctx = TeleportContext::new(&b).unwrap();
        let c = sample_c();
        let out = circuit_map(&joint_initial(&c, &b, 0).unwrap()).unwrap();
        let mut total = 0.0;
        for (idx, entry) in ctx.entries.iter().enumerate().step_by(37) {
            let direct = measure(&out, &entry.table.class, &b).unwrap();
            let fast = ctx.class_probability(idx, &c);
            assert!((direct.probability - fast).abs() < 1e-12);
        }
        for idx in 0..ctx.entries.len() {
            total += ctx.class_probability(idx, &c);
        }
        assert!((total - 1.0).abs() < 1e-10);
    }

    #[test]
    fn favg_bounds_and_policies() {
        let b = basis(2.0);
        let ctx = TeleportContext::new(&b).unwrap();
        let c = sample_c();
        let zero = ctx.favg(&c, FailPolicy::Zero);
        let overlap = ctx.favg(&c, FailPolicy::Overlap);
        assert!((0.0..=1.0 + 1e-12).contains(&zero));
        assert!(overlap >= zero - 1e-12);
        // perfect-fidelity floor: sum of k = 0 Group IV probabilities
        let mut floor = 0.0;
        for (idx, entry) in ctx.entries.iter().enumerate() {
            if entry.table.class.group == Group::IV && entry.table.correction.k == 0 {
                floor += ctx.class_probability(idx, &c);
            }
        }
        assert!(zero >= floor - 1e-12);
        // group IV probability machinery is consistent
        let mut direct = 0.0;
        for (idx, entry) in ctx.entries.iter().enumerate() {
            if entry.table.class.group == Group::IV {
                direct += ctx.class_probability(idx, &c);
            }
        }
        assert!((ctx.group_iv_probability(&c) - direct).abs() < 1e-10);
        assert!(ctx.min_group_iv_probability() <= direct + 1e-12);
    }
}
