//! End-to-end runs of the binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    run_env(args, stdin, &[])
}

fn run_env(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_brickyard"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove("BRICKYARD_CHAR");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    {
        let mut pipe = child.stdin.take().expect("stdin");
        if let Some(s) = stdin {
            pipe.write_all(s.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stdout));
    })
}

const A4_PAIR: &str = r#"{"universe":"RA","n":4,"D":["2>3>4"],"U":["4","1<2<3"]}"#;
const FULL_PAIR: &str = r#"{"universe":"RA","n":4,"D":["1<2>3","3<4"],"U":["1","3"]}"#;
const EXT_PAIR: &str = r#"{"universe":"RA","n":4,"D":["2>3<4"],"U":["1<2>3"]}"#;

#[test]
fn brick_listing() {
    for (n, count) in [(1, 1), (2, 4), (3, 11)] {
        let out = run(&["bricks", "--n", &n.to_string()], None);
        assert!(out.status.success());
        assert_eq!(json_of(&out)["count"], count);
    }
    let table = run(&["bricks", "--n", "3", "--format", "table"], None);
    assert!(String::from_utf8_lossy(&table.stdout).ends_with("count: 11\n"));
    assert_eq!(run(&["bricks", "--n", "0"], None).status.code(), Some(2));
}

#[test]
fn smc_of_a_permutation() {
    let out = run(&["smc", "--perm", "53412"], None);
    assert!(out.status.success());
    let v = json_of(&out);
    let full = run(&["check", "--input", "-"], Some(&v.to_string()));
    let expected = json_of(&run(&["check", "--input", "-"], Some(FULL_PAIR)));
    assert_eq!(json_of(&full)["pair"], expected["pair"]);
    assert_eq!(v["permutation"], serde_json::json!([5, 3, 4, 1, 2]));
    let id = json_of(&run(&["smc", "--perm", "123"], None));
    assert_eq!(id["D"].as_array().unwrap().len(), 0);
    assert_eq!(id["U"].as_array().unwrap().len(), 2);
    let all = run(&["smc", "--n", "3", "--all"], None);
    assert_eq!(String::from_utf8_lossy(&all.stdout).lines().count(), 24);
    assert_eq!(run(&["smc", "--perm", "1224"], None).status.code(), Some(2));
}

#[test]
fn every_smc_checks_out() {
    let all = run(&["smc", "--n", "3", "--all"], None);
    for line in String::from_utf8_lossy(&all.stdout).lines() {
        let out = run(&["check", "--input", "-", "--assert", "completable"], Some(line));
        assert!(out.status.success(), "{line}");
        let r = json_of(&out);
        assert_eq!((r["semibrick_pair"].clone(), r["pairwise"].clone()), (Value::Bool(true), Value::Bool(true)));
    }
}

#[test]
fn check_reports() {
    let r = json_of(&run(&["check", "--input", "-"], Some(A4_PAIR)));
    assert_eq!(r["semibrick_pair"], true);
    assert_eq!(r["pairwise"], true);
    assert_eq!(r["completable"], false);
    assert!(r["obstruction"].is_string());

    let r = json_of(&run(&["check", "--input", "-"], Some(FULL_PAIR)));
    assert_eq!((r["semibrick_pair"].as_bool(), r["pairwise"].as_bool(), r["completable"].as_bool()), (Some(true), Some(true), Some(true)));

    let r = json_of(&run(&["check", "--input", "-"], Some(EXT_PAIR)));
    assert_eq!(r["semibrick_pair"], false);
    assert!(r["violation"].as_str().unwrap().starts_with("Ext"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["check", "--input", "-", "--assert", "completable"], Some(A4_PAIR)).status.code(), Some(1));
    assert_eq!(run(&["check", "--input", "-", "--assert", "pairwise"], Some(A4_PAIR)).status.code(), Some(0));
    assert_eq!(run(&["check", "--input", "-"], Some("{not json")).status.code(), Some(2));
    assert_eq!(run(&["check", "--input", "-"], Some(r#"{"universe":"RA","n":2,"D":["1>2>3"],"U":[]}"#)).status.code(), Some(2));
    assert_eq!(run(&["check", "--input", "/no/such/file"], None).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"], None).status.code(), Some(2));
}

#[test]
fn mutation_and_completion() {
    let out = run(&["mutate", "--input", "-", "--left", "0"], Some(A4_PAIR));
    assert!(out.status.success());
    let x1 = json_of(&out).to_string();
    let r = json_of(&run(&["check", "--input", "-"], Some(&x1)));
    assert_eq!(r["pair"], "{2/3} ⊔ {3/2/1, 2/3/4}[1]");
    assert_eq!(r["pairwise"], false);
    // 3/2/1 -> 2/3 is neither mono nor epi.
    assert_eq!(run(&["mutate", "--input", "-", "--left", "0"], Some(&x1)).status.code(), Some(1));
    let back = json_of(&run(&["mutate", "--input", "-", "--right", "1"], Some(&x1)));
    let r = json_of(&run(&["check", "--input", "-"], Some(&back.to_string())));
    assert_eq!(r["pair"], "{2/3/4} ⊔ {3/2/1, 4}[1]");

    let c = json_of(&run(&["complete", "--input", "-"], Some(FULL_PAIR)));
    assert_eq!(c["smc"]["permutation"], serde_json::json!([5, 3, 4, 1, 2]));
    assert_eq!(run(&["complete", "--input", "-"], Some(A4_PAIR)).status.code(), Some(1));
    let partial = json_of(&run(&["complete", "--input", "-"], Some(r#"{"universe":"RA","n":3,"D":["1"],"U":[]}"#)));
    assert_eq!(partial["completable"], true);
}

#[test]
fn d4_pairs_over_several_fields() {
    let x = r#"{"universe":"PiD4","D":["M","N"],"U":["E"]}"#;
    for p in ["2", "3", "101"] {
        let r = json_of(&run_env(&["check", "--input", "-"], Some(x), &[("BRICKYARD_CHAR", p)]));
        assert_eq!(r["semibrick_pair"], true, "p = {p}");
        assert_eq!(r["completable"], false, "p = {p}");
    }
    let out = run(&["mutate", "--input", "-", "--left", "0"], Some(x));
    assert!(out.status.success());
    let r = json_of(&run(&["check", "--input", "-"], Some(&json_of(&out).to_string())));
    assert_eq!(r["pairwise"], false);
    assert_eq!(run_env(&["bricks", "--n", "2"], None, &[("BRICKYARD_CHAR", "4")]).status.code(), Some(0));
    assert_eq!(run_env(&["check", "--input", "-"], Some(x), &[("BRICKYARD_CHAR", "4")]).status.code(), Some(2));
}

#[test]
fn rendering() {
    let empty = run(&["render", "--input", "-"], Some(r#"{"nodes":3,"arcs":[]}"#));
    assert_eq!(String::from_utf8_lossy(&empty.stdout), "3 o\n2 o\n1 o\n");
    let single = run(&["render", "--input", "-"], Some(r#"{"nodes":2,"arcs":[{"color":"green","bottom":1,"top":2,"sides":[]}]}"#));
    assert_eq!(String::from_utf8_lossy(&single.stdout), "    a\n2 o *\n1 o *\na = g1-2\n");
    let fig = run(&["render", "--perm", "53412"], None);
    let text = String::from_utf8_lossy(&fig.stdout).to_string();
    assert_eq!(text.lines().filter(|l| l.contains(" = ")).count(), 4);
    // 4>1 sits at position 3; value 2 comes later (R), value 3 earlier (L).
    assert!(text.contains("g1-4[RL]") && text.contains("g3-5[R]") && text.contains("r1-2"));
    let tikz = run(&["render", "--perm", "53412", "--format", "tikz"], None);
    let t = String::from_utf8_lossy(&tikz.stdout).to_string();
    assert!(t.starts_with("\\documentclass[tikz]{standalone}") && t.trim_end().ends_with("\\end{document}"));
    assert_eq!(t.matches("\\draw").count(), 4);
    assert_eq!(run(&["render", "--input", "-"], Some(r#"{"nodes":2,"arcs":[{"color":"blue","bottom":1,"top":2,"sides":[]}]}"#)).status.code(), Some(2));
}

#[test]
fn verify_and_determinism() {
    for suite in ["a4-counterexample", "d4-counterexample"] {
        let out = run(&["verify", "--suite", suite], None);
        assert!(out.status.success(), "{suite}");
        assert_eq!(json_of(&out)["pass"], true);
    }
    let hom = json_of(&run(&["verify", "--suite", "oracle-hom", "--n", "3"], None));
    assert_eq!(hom["checked"], 121);
    let a = run(&["verify", "--suite", "oracle-perm", "--n", "4", "--seed", "11"], None);
    let b = run(&["verify", "--suite", "oracle-perm", "--n", "4", "--seed", "11"], None);
    assert_eq!(a.stdout, b.stdout);
    let r1 = run(&["render", "--perm", "53412", "--format", "tikz"], None);
    let r2 = run(&["render", "--perm", "53412", "--format", "tikz"], None);
    assert_eq!(r1.stdout, r2.stdout);
    assert!(json_of(&run(&["verify", "--list"], None)).as_array().unwrap().len() >= 13);
}
