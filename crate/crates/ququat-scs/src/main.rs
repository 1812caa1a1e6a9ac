//! Command-line surface: generation, teleportation, table verification,
//! amplitude sweeps and oracle checks, emitting stable comma-separated files.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64 as C64;

use ququat_scs::analysis::{self, Quantity};
use ququat_scs::basis::{decode_info, encode_info, make_basis, AlphaBasis, EpsilonCoeffs, QuquatVector};
use ququat_scs::dm::DensityMatrix4;
use ququat_scs::error::Error;
use ququat_scs::fock;
use ququat_scs::generation;
use ququat_scs::teleport::{self, FailPolicy, TeleportContext};

#[derive(Parser)]
#[command(name = "ququat-scs", version, about = "Exact ququat teleportation simulator")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct InfoArgs {
    /// Information state as four comma-separated complex c-coefficients
    /// ("re+imi" each), normalized on ingest.
    #[arg(long)]
    info_c: Option<String>,
    /// Information state as four comma-separated complex epsilon-weights on
    /// the coherent kets, normalized on ingest.
    #[arg(long)]
    info_eps: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print basis constants and the Gram matrix of the four basis states.
    States {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the full protocol: one row per reachable photon-counting class.
    Teleport {
        #[arg(long)]
        alpha: f64,
        #[command(flatten)]
        info: InfoArgs,
        /// Channel state index (|E_j>).
        #[arg(long, default_value_t = 0)]
        channel: u8,
        #[arg(long, default_value = "zero")]
        fail_policy: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simulate the heralded state-generation circuit.
    Generate {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate one figure quantity over an amplitude grid.
    Sweep {
        #[arg(long)]
        quantity: String,
        #[arg(long, default_value_t = 0.2)]
        alpha_start: f64,
        #[arg(long, default_value_t = 4.0)]
        alpha_stop: f64,
        #[arg(long, default_value_t = 0.1)]
        alpha_step: f64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also emit a gnuplot-compatible two-column data file.
        #[arg(long)]
        plot_out: Option<PathBuf>,
    },
    /// Audit the printed correction tables against simulation.
    VerifyTables {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the exact algebra against the truncated Fock oracle.
    OracleCheck {
        #[arg(long)]
        alpha: f64,
        #[command(flatten)]
        info: InfoArgs,
        #[arg(long)]
        cutoff_override: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum CliError {
    Usage(String),
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

/// Lossless scalar formatting (17 significant digits).
fn fmt_f(x: f64) -> String {
    format!("{x:.16e}")
}

/// Complex formatting as "re+imi" with 17 significant digits per part.
fn fmt_c(z: C64) -> String {
    let sign = if z.im.is_sign_negative() { "-" } else { "+" };
    format!("{}{}{}i", fmt_f(z.re), sign, fmt_f(z.im.abs()))
}

/// Parse one complex scalar in "re", "imi", or "re+imi" form.
fn parse_complex(s: &str) -> Result<C64, CliError> {
    let bad = |s: &str| CliError::Usage(format!("cannot parse complex number '{s}'"));
    let t = s.trim();
    if t.is_empty() {
        return Err(bad(s));
    }
    if let Some(body) = t.strip_suffix(['i', 'I']) {
        // find the split between re and im: the last +/- not in an exponent
        // and not leading
        let bytes = body.as_bytes();
        let mut split = None;
        for p in (1..bytes.len()).rev() {
            let c = bytes[p] as char;
            if (c == '+' || c == '-') && !matches!(bytes[p - 1] as char, 'e' | 'E') {
                split = Some(p);
                break;
            }
        }
        match split {
            Some(p) => {
                let re: f64 = body[..p].parse().map_err(|_| bad(s))?;
                let im: f64 = body[p..].parse().map_err(|_| bad(s))?;
                Ok(C64::new(re, im))
            }
            None => {
                let im: f64 = body.parse().map_err(|_| bad(s))?;
                Ok(C64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = t.parse().map_err(|_| bad(s))?;
        Ok(C64::new(re, 0.0))
    }
}

fn parse_quadruple(s: &str) -> Result<[C64; 4], CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(CliError::Usage(format!(
            "expected four comma-separated components, got {}",
            parts.len()
        )));
    }
    let mut out = [C64::new(0.0, 0.0); 4];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = parse_complex(p)?;
    }
    Ok(out)
}

/// Resolve the information state (normalized) from the c / epsilon flags.
fn resolve_info(info: &InfoArgs, basis: &AlphaBasis) -> Result<QuquatVector, CliError> {
    match (&info.info_c, &info.info_eps) {
        (Some(_), Some(_)) => {
            Err(CliError::Usage("give exactly one of --info-c or --info-eps".into()))
        }
        (Some(s), None) => {
            let c = QuquatVector(parse_quadruple(s)?);
            Ok(c.normalized().map_err(CliError::Domain)?)
        }
        (None, Some(s)) => {
            let eps = EpsilonCoeffs(parse_quadruple(s)?);
            let c = encode_info(&eps, basis);
            Ok(c.normalized().map_err(CliError::Domain)?)
        }
        (None, None) => Err(CliError::Usage("an information state is required: --info-c or --info-eps".into())),
    }
}

fn parse_fail_policy(s: &str) -> Result<FailPolicy, CliError> {
    match s {
        "zero" => Ok(FailPolicy::Zero),
        "overlap" => Ok(FailPolicy::Overlap),
        other => Err(CliError::Usage(format!("unknown fail policy '{other}' (zero|overlap)"))),
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            std::fs::write(path, content)?;
        }
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

fn cmd_states(alpha: f64, out: &Option<PathBuf>) -> Result<(), CliError> {
    let basis = make_basis(C64::new(alpha, 0.0))?;
    let mut s = String::from("name,value\n");
    let block = &basis.alpha_block;
    for j in 0..4 {
        s.push_str(&format!("N_{j},{}\n", fmt_f(block.n[j])));
    }
    for j in 0..4 {
        s.push_str(&format!("r_{j},{}\n", fmt_f(block.r[j])));
    }
    for i in 0..5 {
        s.push_str(&format!("a_{i},{}\n", fmt_f(block.a[i])));
    }
    let mut defect: f64 = 0.0;
    for j in 0..4u8 {
        for k in 0..4u8 {
            let ov = basis
                .alpha_j_state(j)
                .inner_product(&basis.alpha_j_state(k))
                .map_err(CliError::Domain)?;
            let expect = if j == k { 1.0 } else { 0.0 };
            defect = defect.max((ov - C64::new(expect, 0.0)).norm());
            s.push_str(&format!("gram_{j}{k},{}\n", fmt_c(ov)));
        }
    }
    s.push_str(&format!("orthonormality_defect,{}\n", fmt_f(defect)));
    emit(out, &s)?;
    if defect > 1e-10 {
        return Err(CliError::Domain(Error::DegenerateInput(format!(
            "orthonormality defect {defect} exceeds 1e-10"
        ))));
    }
    Ok(())
}

fn cmd_teleport(
    alpha: f64,
    info: &InfoArgs,
    channel: u8,
    fail_policy: &str,
    out: &Option<PathBuf>,
) -> Result<(), CliError> {
    let policy = parse_fail_policy(fail_policy)?;
    let basis = make_basis(C64::new(alpha, 0.0))?;
    let c = resolve_info(info, &basis)?;
    if channel > 3 {
        return Err(CliError::Usage(format!("channel {channel} out of range 0..3")));
    }
    // class data (corrections, groupings) is channel-independent; the
    // probabilities and Bob states below use the requested channel
    let ctx = TeleportContext::new(&basis)?;
    let out5 = teleport::circuit_map(&teleport::joint_initial(&c, &basis, channel)?)?;
    let mut s = String::from("symbols,group,probability,purity,correction,fidelity,code\n");
    let mut favg = 0.0;
    let mut total = 0.0;
    for entry in &ctx.entries {
        let class = &entry.table.class;
        let outcome = teleport::measure(&out5, class, &basis)?;
        total += outcome.probability;
        let code: String = teleport::wire_encode(class).iter().map(|b| b.to_string()).collect();
        let symbols: String = class.symbols.iter().map(|x| x.to_string()).collect();
        let (purity_s, fid_s) = match &outcome.bob_dm {
            Some(bob) => {
                let fidelity = match entry.table.correction.applied() {
                    Some(u) => DensityMatrix4(u * bob.0 * u.adjoint()).expectation(&c),
                    None => match policy {
                        FailPolicy::Zero => 0.0,
                        FailPolicy::Overlap => bob.expectation(&c),
                    },
                };
                favg += outcome.probability * fidelity;
                (fmt_f(outcome.purity.unwrap_or(0.0)), fmt_f(fidelity))
            }
            None => (String::new(), String::new()),
        };
        s.push_str(&format!(
            "{symbols},{},{},{purity_s},{},{fid_s},{code}\n",
            class.group,
            fmt_f(outcome.probability),
            entry.table.correction.label(),
        ));
    }
    s.push_str(&format!("favg,{},{},,,,\n", fail_policy, fmt_f(favg)));
    s.push_str(&format!("total_probability,,{},,,,\n", fmt_f(total)));
    emit(out, &s)
}

fn cmd_generate(alpha: f64, out: &Option<PathBuf>) -> Result<(), CliError> {
    let basis = make_basis(C64::new(alpha, 0.0))?;
    let outcomes = generation::run_generation(&basis)?;
    let total: f64 = outcomes.iter().map(|o| o.probability).sum();
    let half = make_basis(basis.alpha / 2.0_f64.sqrt())?;
    let mut s = String::from("j,probability,conditional_probability,ecs_overlap\n");
    for o in &outcomes {
        let split = generation::ecs_from_heralded(&o.heralded_state, &basis)?;
        let ov = half
            .ecs_state(o.j)
            .inner_product(&split)
            .map_err(CliError::Domain)?
            .norm();
        s.push_str(&format!(
            "{},{},{},{}\n",
            o.j,
            fmt_f(o.probability),
            fmt_f(o.probability / total),
            fmt_f(ov)
        ));
    }
    emit(out, &s)
}

fn cmd_sweep(
    quantity: &str,
    alpha_start: f64,
    alpha_stop: f64,
    alpha_step: f64,
    out: &Option<PathBuf>,
    plot_out: &Option<PathBuf>,
) -> Result<(), CliError> {
    let q = Quantity::parse(quantity).map_err(|_| {
        CliError::Usage(format!(
            "unknown quantity '{quantity}'; expected one of {}",
            Quantity::ALL.map(|q| q.name()).join(", ")
        ))
    })?;
    if !alpha_step.is_finite() || alpha_step <= 0.0 || alpha_stop < alpha_start {
        return Err(CliError::Usage("need alpha_step > 0 and alpha_stop >= alpha_start".into()));
    }
    let mut grid = Vec::new();
    let mut k = 0usize;
    loop {
        let a = alpha_start + k as f64 * alpha_step;
        if a > alpha_stop + 1e-9 {
            break;
        }
        grid.push(a);
        k += 1;
    }
    let records = analysis::sweep(q, &grid)?;
    let mut s = String::from("alpha,quantity,value\n");
    let mut plot = String::new();
    for r in &records {
        s.push_str(&format!("{},{},{}\n", fmt_f(r.alpha), r.quantity.name(), fmt_f(r.value)));
        plot.push_str(&format!("{} {}\n", fmt_f(r.alpha), fmt_f(r.value)));
    }
    emit(out, &s)?;
    if let Some(path) = plot_out {
        std::fs::write(path, plot)?;
    }
    Ok(())
}

fn cmd_verify_tables(alpha: f64, out: &Option<PathBuf>) -> Result<(), CliError> {
    let basis = make_basis(C64::new(alpha, 0.0))?;
    let report = teleport::verify_tables(&basis, &teleport::default_sample_infos())?;
    let mut s = String::from("record,detail\n");
    s.push_str(&format!("table1_checked,{}\n", report.table1_checked));
    s.push_str(&format!("table1_mismatch_count,{}\n", report.table1_mismatches.len()));
    for m in &report.table1_mismatches {
        s.push_str(&format!("table1_mismatch,{}\n", m.replace(',', ";")));
    }
    s.push_str(&format!("table2_checked,{}\n", report.table2_checked));
    for d in &report.table2_duplicates {
        let sym: String = d.iter().map(|x| x.to_string()).collect();
        s.push_str(&format!("table2_duplicate,{sym}\n"));
    }
    for d in &report.table2_missing {
        let sym: String = d.iter().map(|x| x.to_string()).collect();
        s.push_str(&format!("table2_missing,{sym}\n"));
    }
    for d in &report.table2_diffs {
        let sym: String = d.symbols.iter().map(|x| x.to_string()).collect();
        s.push_str(&format!(
            "table2_diff,{sym} printed U({};{}) derived U({};{})\n",
            d.printed.0, d.printed.1, d.derived.0, d.derived.1
        ));
    }
    emit(out, &s)
}

fn cmd_oracle_check(
    alpha: f64,
    info: &InfoArgs,
    cutoff_override: Option<usize>,
    out: &Option<PathBuf>,
) -> Result<(), CliError> {
    let basis = make_basis(C64::new(alpha, 0.0))?;
    let c = resolve_info(info, &basis)?;
    // keep the epsilon decomposition exercised so both ingest paths stay
    // equivalent (decode of a normalized c always exists)
    let _ = decode_info(&c, &basis).map_err(CliError::Domain)?;
    let report = fock::oracle_compare(&basis, &c, cutoff_override)?;
    let mut s = String::from("name,value\n");
    s.push_str(&format!("cutoff,{}\n", report.cutoff));
    s.push_str(&format!("gram_deviation,{}\n", fmt_f(report.gram_deviation)));
    s.push_str(&format!("generation_deviation,{}\n", fmt_f(report.generation_deviation)));
    s.push_str(&format!(
        "class_probability_deviation,{}\n",
        fmt_f(report.class_probability_deviation)
    ));
    s.push_str(&format!("class_probability_sum,{}\n", fmt_f(report.class_probability_sum)));
    s.push_str(&format!("mod4_deviation,{}\n", fmt_f(report.mod4_deviation)));
    s.push_str(&format!("max_deviation,{}\n", fmt_f(report.max_deviation)));
    emit(out, &s)
}

fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.cmd {
        Cmd::States { alpha, out } => cmd_states(*alpha, out),
        Cmd::Teleport { alpha, info, channel, fail_policy, out } => {
            cmd_teleport(*alpha, info, *channel, fail_policy, out)
        }
        Cmd::Generate { alpha, out } => cmd_generate(*alpha, out),
        Cmd::Sweep { quantity, alpha_start, alpha_stop, alpha_step, out, plot_out } => {
            cmd_sweep(quantity, *alpha_start, *alpha_stop, *alpha_step, out, plot_out)
        }
        Cmd::VerifyTables { alpha, out } => cmd_verify_tables(*alpha, out),
        Cmd::OracleCheck { alpha, info, cutoff_override, out } => {
            cmd_oracle_check(*alpha, info, *cutoff_override, out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(CliError::Io(e)) => {
            eprintln!("io error: {e}");
            ExitCode::from(3)
        }
    }
}
