//! End-to-end CLI checks: determinism, exit codes, and output shape.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ququat-scs"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "teleport",
        "--alpha",
        "1.7",
        "--info-c",
        "0.41+0.1i,-0.3,0.2-0.7i,0.45",
        "--fail-policy",
        "overlap",
    ];
    let (c1, o1, _) = run(&args);
    let (c2, o2, _) = run(&args);
    assert_eq!(c1, 0);
    assert_eq!(c2, 0);
    assert!(!o1.is_empty());
    assert_eq!(o1, o2, "repeated runs must be byte-identical");

    let sweep = ["sweep", "--quantity", "P_I_max", "--alpha-stop", "1.0"];
    let (c1, o1, _) = run(&sweep);
    let (c2, o2, _) = run(&sweep);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(o1, o2);
}

#[test]
fn exit_codes_follow_the_contract() {
    // success
    assert_eq!(run(&["states", "--alpha", "1.0"]).0, 0);
    // usage: unknown flag (handled by the arg parser)
    assert_eq!(run(&["states", "--no-such-flag"]).0, 2);
    // usage: malformed information state
    assert_eq!(run(&["teleport", "--alpha", "1.0", "--info-c", "1,0"]).0, 2);
    // usage: both ingest forms at once
    assert_eq!(
        run(&["teleport", "--alpha", "1.0", "--info-c", "1,0,0,0", "--info-eps", "1,0,0,0"]).0,
        2
    );
    // usage: unknown sweep quantity
    assert_eq!(run(&["sweep", "--quantity", "bogus"]).0, 2);
    // domain: amplitude below the singular-basis floor
    assert_eq!(run(&["states", "--alpha", "0.01"]).0, 3);
    // domain: oracle resource limit
    assert_eq!(run(&["oracle-check", "--alpha", "3.8", "--info-c", "1,0,0,0"]).0, 3);
}

#[test]
fn teleport_rows_cover_all_classes_and_sum_to_one() {
    let (code, out, _) = run(&["teleport", "--alpha", "2.0", "--info-c", "1,0,0,0"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "symbols,group,probability,purity,correction,fidelity,code");
    // header + 369 classes + favg + total rows
    assert_eq!(lines.len(), 1 + 369 + 2);
    let total: f64 = lines[1..370]
        .iter()
        .map(|l| l.split(',').nth(2).unwrap().parse::<f64>().unwrap())
        .sum();
    assert!((total - 1.0).abs() < 1e-9, "probabilities sum to {total}");
    // the all-success input state teleports perfectly through (4,0,4,4)
    let perfect = lines.iter().find(|l| l.starts_with("4044,")).unwrap();
    let f: f64 = perfect.split(',').nth(5).unwrap().parse().unwrap();
    assert!((f - 1.0).abs() < 1e-9);
}

#[test]
fn sweep_default_grid_emits_39_rows() {
    let (code, out, _) = run(&["sweep", "--quantity", "P_IV_sum_min"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1 + 39);
}

#[test]
fn complex_output_round_trips() {
    let (code, out, _) = run(&["states", "--alpha", "1.3"]);
    assert_eq!(code, 0);
    for line in out.lines().skip(1) {
        let val = line.split(',').nth(1).unwrap();
        if let Some(body) = val.strip_suffix('i') {
            // split into re and the signed im part at the final +/- sign
            let pivot = body
                .char_indices()
                .rev()
                .find(|(i, ch)| {
                    (*ch == '+' || *ch == '-')
                        && *i > 0
                        && !matches!(body.as_bytes()[i - 1], b'e' | b'E')
                })
                .map(|(i, _)| i)
                .unwrap();
            assert!(body[..pivot].parse::<f64>().is_ok(), "re part of {val}");
            assert!(body[pivot..].parse::<f64>().is_ok(), "im part of {val}");
        } else {
            assert!(val.parse::<f64>().is_ok(), "scalar {val}");
        }
    }
}
