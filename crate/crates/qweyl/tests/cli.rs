//! End-to-end tests of the `qweyl` binary: real process spawns, argument
//! parsing, output formats, exit codes, and file output.

mod common;

use std::process::{Command, Output};

use qweyl::{
    parse_element, random_element, rng_from_seed, Family, Form, ParamContext, PresentationId,
};

fn qweyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qweyl"))
        .args(args)
        .output()
        .expect("binary spawns")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn code_of(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn normalize_round_trips_through_the_binary() {
    let mut rng = rng_from_seed(0xabcd);
    let combos = [
        (Family::AkhavizadeganJordan, Form::Polynomial, "aj", false),
        (Family::AkhavizadeganJordan, Form::Localized, "aj", true),
        (
            Family::Maltsiniotis,
            Form::Polynomial,
            "maltsiniotis",
            false,
        ),
        (Family::Maltsiniotis, Form::Localized, "maltsiniotis", true),
    ];
    for (family, form, family_arg, localized) in combos {
        let ctx = ParamContext::symbolic(2, 2).expect("context");
        let pres = PresentationId::new(family, form, ctx);
        let elems: Vec<_> = (0..12)
            .map(|_| random_element(&mut rng, &pres, 2, 2))
            .collect();
        let srcs: Vec<String> = elems.iter().map(|e| e.to_string()).collect();

        let mut args = vec!["normalize", "--n", "2", "--family", family_arg];
        if localized {
            args.push("--localized");
        }
        let mut human = args.clone();
        human.extend(srcs.iter().map(String::as_str));
        let out = qweyl(&human);
        assert_eq!(code_of(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        let text = stdout_of(&out);
        let lines: Vec<&str> = text.lines().map(str::trim).collect();
        assert_eq!(lines.len(), elems.len());
        for ((line, src), elem) in lines.iter().zip(&srcs).zip(&elems) {
            assert_eq!(line, src, "normal forms print canonically");
            assert_eq!(&parse_element(line, &pres).expect("reparse"), elem);
        }

        let mut json = args.clone();
        json.extend(["--format", "json"]);
        json.extend(srcs.iter().map(String::as_str));
        let out = qweyl(&json);
        assert_eq!(code_of(&out), 0);
        for (line, src) in stdout_of(&out).lines().zip(&srcs) {
            let v: serde_json::Value = serde_json::from_str(line).expect("json line");
            assert_eq!(v["input"].as_str().expect("input"), src);
            assert_eq!(v["normal"].as_str().expect("normal"), src);
        }
    }
}

#[test]
fn relcheck_exit_codes_and_json() {
    for family in ["aj", "maltsiniotis"] {
        for extra in [&[][..], &["--localized"][..]] {
            let mut args = vec!["relcheck", "--n", "2", "--family", family];
            args.extend_from_slice(extra);
            let out = qweyl(&args);
            assert_eq!(
                code_of(&out),
                0,
                "clean relcheck fails for {family} {extra:?}"
            );
        }
    }

    let out = qweyl(&["relcheck", "--n", "1", "--perturb"]);
    assert_eq!(code_of(&out), 1, "perturbed relations must exit 1");

    let out = qweyl(&["relcheck", "--n", "0"]);
    assert_eq!(code_of(&out), 2, "rank 0 is a usage error");
    let out = qweyl(&["relcheck", "--no-such-flag"]);
    assert_eq!(code_of(&out), 2, "unknown flags are usage errors");
    let out = qweyl(&["no-such-command"]);
    assert_eq!(code_of(&out), 2, "unknown subcommands are usage errors");

    let out = qweyl(&["relcheck", "--n", "2", "--format", "json"]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    assert!(!text.trim().is_empty());
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("json line");
        assert_eq!(v["status"], "pass");
        assert_eq!(v["expected"], "pass");
        assert!(v["identity"].as_str().is_some());
    }

    let out = qweyl(&["relcheck", "--n", "1", "--perturb", "--format", "json"]);
    assert_eq!(code_of(&out), 1);
    let text = stdout_of(&out);
    let mut failures = 0;
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("json line");
        if v["status"] == "fail" {
            failures += 1;
            assert!(v["witness"].as_str().is_some(), "failures carry witnesses");
        }
    }
    assert_eq!(failures, 1, "exactly the perturbed identity fails");
}

#[test]
fn module_graph_emits_valid_dot_and_json() {
    let out = qweyl(&[
        "module-graph",
        "--n",
        "1",
        "--phi",
        "[q^2]",
        "--radius",
        "4",
    ]);
    assert_eq!(code_of(&out), 0);
    let dot = stdout_of(&out);
    common::assert_valid_dot(&dot);
    // The vertices beyond the wall k = 2 belong to the maximal submodule
    // and are drawn dashed; the simple quotient drops them entirely.
    assert!(dot.contains("style=dashed"));
    let out = qweyl(&[
        "module-graph",
        "--n",
        "1",
        "--phi",
        "[q^2]",
        "--radius",
        "4",
        "--kind",
        "S",
    ]);
    let quotient = stdout_of(&out);
    common::assert_valid_dot(&quotient);
    assert!(!quotient.contains("style=dashed"));
    assert!(!quotient.contains("\"(3)\""), "masked vertices disappear");

    let out = qweyl(&[
        "module-graph",
        "--n",
        "2",
        "--phi",
        "[q^1, c1]",
        "--radius",
        "2",
    ]);
    assert_eq!(code_of(&out), 0);
    common::assert_valid_dot(&stdout_of(&out));

    let out = qweyl(&[
        "module-graph",
        "--n",
        "1",
        "--phi",
        "[q^2]",
        "--radius",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(code_of(&out), 0);
    let mut nodes = 0;
    let mut edges = 0;
    for line in stdout_of(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("json line");
        match v["type"].as_str().expect("type tag") {
            "node" => {
                nodes += 1;
                assert!(v["k"].is_array());
                assert!(v["weight"].is_array());
                assert!(v["in_max_submodule"].is_boolean());
            }
            "edge" => {
                edges += 1;
                assert!(v["from"].is_array() && v["to"].is_array());
                assert!(v["gen"].as_str().is_some());
                assert!(v["coeff"].as_str().is_some());
            }
            other => panic!("unexpected line type {other}"),
        }
    }
    assert_eq!(nodes, 7, "radius-3 rank-one window");
    // Six ascending edges stay inside the window; the descending edge at
    // the wall k = 3 is the only one missing.
    assert_eq!(edges, 6 + 5);
}

#[test]
fn check_subcommands_pass_and_shift_iso_degenerates() {
    let passing: &[&[&str]] = &[
        &["theta-check", "--n", "2"],
        &["twist-check", "--n", "2"],
        &[
            "twist-check",
            "--n",
            "2",
            "--phi",
            "[q^1, c1]",
            "--radius",
            "2",
        ],
        &[
            "tensor-check",
            "--n",
            "2",
            "--phi",
            "[q^2, c1]",
            "--radius",
            "3",
        ],
        &["qdiff-check", "--n", "1", "--degree", "3", "--radius", "3"],
        &["shift-iso", "--n", "1", "--phi", "[q^2]", "--radius", "3"],
        &[
            "classify",
            "--n",
            "1",
            "--phi",
            "[c1]",
            "--certify",
            "--radius",
            "3",
        ],
        &["iso", "--n", "1", "--phi", "[q^2]", "--psi", "[q^5]"],
    ];
    for args in passing {
        let out = qweyl(args);
        assert_eq!(
            code_of(&out),
            0,
            "{args:?}\n{}{}",
            stdout_of(&out),
            String::from_utf8_lossy(&out.stderr)
        );
    }

    // qdiff-check in JSON mode keeps the recorded failure of the
    // uncorrected derivative constant as an expected-fail line.
    let out = qweyl(&[
        "qdiff-check",
        "--n",
        "1",
        "--degree",
        "3",
        "--radius",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(code_of(&out), 0);
    let mut expected_failures = 0;
    for line in stdout_of(&out).lines() {
        let v: serde_json::Value = serde_json::from_str(line).expect("json line");
        if v["expected"] == "fail" {
            assert_eq!(v["status"], "fail");
            expected_failures += 1;
        } else {
            assert_eq!(v["status"], "pass");
        }
    }
    assert_eq!(expected_failures, 1);

    // The shift map degenerates on the wall phi(z_1) = 1: honest exit 1.
    let out = qweyl(&["shift-iso", "--n", "1", "--phi", "[q^0]", "--radius", "3"]);
    assert_eq!(code_of(&out), 1);

    // Usage errors: tensor split out of range, iso P-kind beyond rank one.
    let out = qweyl(&[
        "tensor-check",
        "--n",
        "2",
        "--phi",
        "[q^2, c1]",
        "--split",
        "2",
    ]);
    assert_eq!(code_of(&out), 2);
    let out = qweyl(&[
        "iso",
        "--n",
        "2",
        "--phi",
        "[q^2, c1]",
        "--psi",
        "[c1, q^0]",
        "--kind",
        "P",
    ]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn classify_and_iso_json_shapes() {
    let out = qweyl(&[
        "classify",
        "--n",
        "2",
        "--phi",
        "[q^2, c1]",
        "--format",
        "json",
    ]);
    assert_eq!(code_of(&out), 0);
    let text = stdout_of(&out);
    let v: serde_json::Value =
        serde_json::from_str(text.lines().next().expect("one line")).expect("json object");
    assert_eq!(v["character"], "[q^2, c1]");
    assert_eq!(v["p_simple"], false);
    assert!(v["support"].as_str().expect("support").contains("k1 <= 2"));
    assert!(v["weights"].as_str().is_some());

    let out = qweyl(&[
        "iso", "--n", "1", "--phi", "[q^2]", "--psi", "[q^-1]", "--format", "json",
    ]);
    assert_eq!(code_of(&out), 0);
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).expect("json object");
    assert_eq!(v["kind"], "S");
    assert_eq!(v["isomorphic"], false);

    let out = qweyl(&[
        "iso",
        "--n",
        "1",
        "--phi",
        "[c1]",
        "--psi",
        "[c1*q^-1]",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out).trim()).expect("json object");
    assert_eq!(v["isomorphic"], true);
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let path = std::env::temp_dir().join(format!("qweyl-cli-test-{}.dot", std::process::id()));
    let path_str = path.to_str().expect("utf-8 temp path");
    let out = qweyl(&[
        "module-graph",
        "--n",
        "1",
        "--phi",
        "[c1]",
        "--radius",
        "2",
        "--out",
        path_str,
    ]);
    assert_eq!(code_of(&out), 0);
    assert!(stdout_of(&out).is_empty(), "--out suppresses stdout");
    let written = std::fs::read_to_string(&path).expect("output file exists");
    common::assert_valid_dot(&written);
    std::fs::remove_file(&path).ok();
}
