//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Runs under `cargo test` with its own harness.

use std::process::{Command, ExitCode};
use std::time::Instant;

use num::BigInt;
use symvertex::tableaux::{bounded_height_pairs, CountMethod};
use symvertex::verify::{suite, Bounds};
use symvertex::Exec;

struct Outcome {
    ok: bool,
    detail: String,
}

fn run_suite(name: &str) -> Outcome {
    let report = suite(name)
        .expect("registered suite")
        .run(&Bounds::default(), Exec::default());
    let mut detail = format!("{report}");
    for note in &report.notes {
        detail.push_str(&format!("\n      note: {note}"));
    }
    for failure in report.failures.iter().take(10) {
        detail.push_str(&format!("\n      failure: {failure}"));
    }
    Outcome {
        ok: report.passed(),
        detail,
    }
}

fn quantitative() -> Outcome {
    let mut outcome = run_suite("counts");
    let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
    let mut bad = Vec::new();
    for (n, &c) in catalan.iter().enumerate() {
        for method in CountMethod::ALL {
            let n = n as u32;
            if bounded_height_pairs(n, 2, method) != BigInt::from(c) {
                bad.push(format!("k=2 n={n} {method}"));
            }
            if bounded_height_pairs(n, 1, method) != BigInt::from(1) {
                bad.push(format!("k=1 n={n} {method}"));
            }
        }
    }
    if !bad.is_empty() {
        outcome.ok = false;
        outcome
            .detail
            .push_str(&format!("\n      frozen values differ: {bad:?}"));
    }
    outcome
}

fn cli(args: &[&str]) -> (Option<i32>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_symvertex"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn command_line() -> Outcome {
    let cases: [(&[&str], &str); 3] = [
        (&["count", "--n", "4", "--k", "2"], "14\n"),
        (
            &[
                "apply", "--op", "CS", "--a", "0", "--k", "2", "h[1]^4", "--basis", "s",
            ],
            "2*s[2,2] + 3*s[3,1] + s[4]\n",
        ),
        (&["expand", "--basis", "h", "e[2]"], "h[1,1] - h[2]\n"),
    ];
    let mut ok = true;
    let mut detail = String::new();
    for (args, expected) in cases {
        let (code, stdout) = cli(args);
        let good = code == Some(0) && stdout == expected;
        ok &= good;
        detail.push_str(&format!(
            "\n      {} symvertex {} -> {:?}",
            if good { "ok " } else { "BAD" },
            args.join(" "),
            stdout
        ));
    }
    let (code, stdout) = cli(&["verify"]);
    let good = code == Some(0);
    ok &= good;
    detail.push_str(&format!(
        "\n      {} symvertex verify -> exit {:?}",
        if good { "ok " } else { "BAD" },
        code
    ));
    if !good {
        detail.push_str(&format!("\n{stdout}"));
    }
    Outcome { ok, detail }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("1 vertex-operator action laws", || run_suite("actions")),
        ("2 operator identities", || run_suite("identities")),
        ("3 core-ring properties", || run_suite("ring")),
        ("4 bounded-height counts", quantitative),
        ("5 Schur-sum lemma and RS_0 expansion", || {
            run_suite("lemma")
        }),
        ("6 polynomial oracle sweep", || run_suite("oracle")),
        ("7 command line", command_line),
    ];
    let mut all = true;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        all &= outcome.ok;
        println!(
            "{} criterion {name} ({:.1}s)\n      {}",
            if outcome.ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            outcome.detail.trim_start()
        );
    }
    if all {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
