use std::process::{Command, Output};

use trigsum_core::exact_values::{frak_d, PiPolynomial};
use trigsum_core::identity_registry::VerificationReport;

fn trigsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trigsum")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let o = trigsum(&["exact", "frakd", "--n", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"terms\":[{\"power\":6,\"num\":\"361\",\"den\":\"491520\"}]}\n");
    assert_eq!(PiPolynomial::from_json(stdout(&o).trim()).unwrap(), frak_d(3).unwrap());

    assert_eq!(stdout(&trigsum(&["exact", "harmonic", "--n", "2"])), "3/2\n");

    let o = trigsum(&["zeta-odd", "--r", "1", "--method", "thm15-zeta", "--digits", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let (value, bound) = out.trim().split_once(" ± ").unwrap();
    assert_eq!(value, "1.20205690315959428539973816151");
    assert!(bound.parse::<f64>().unwrap() < 1e-30);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["verify", "--id", "cor8", "--r", "2", "--format", "csv"][..],
        &["oracle", "--series", "cald", "--s", "3", "--digits", "35"],
        &["map", "fourier", "--sum", "-ln(1-t)", "--kind", "sin", "--c", "c", "--format", "json"],
    ] {
        let a = trigsum(args);
        let b = trigsum(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn verify_report_round_trips() {
    let o = trigsum(&["verify", "--id", "eq59", "--r", "1", "--x0", "1/4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let r: VerificationReport = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(r.pass);
    assert_eq!(r.id, "eq59");
    assert_eq!(serde_json::to_string(&r).unwrap(), stdout(&o).trim());
}

#[test]
fn exit_codes() {
    let fail = trigsum(&["verify", "--id", "thm16", "--r", "1", "--terms", "5", "--tol", "1e-12"]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(stdout(&fail).contains("FAIL"));
    for bad in [
        &["exact"][..],
        &["exact", "frakd", "--n", "x"],
        &["exact", "frakd", "--n", "0"],
        &["oracle", "--series", "nope", "--s", "2"],
        &["zeta-odd", "--r", "1", "--digits", "0"],
        &["verify", "--all", "--id", "cor7"],
        &["map", "fourier", "--sum", "ln(", "--kind", "cos"],
    ] {
        let o = trigsum(bad);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(!o.stderr.is_empty(), "{bad:?}");
        assert!(o.stdout.is_empty(), "{bad:?}");
    }
}
