use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use vclp::{fixtures, io, Graph};

fn write_graph(name: &str, g: &Graph) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-graphs");
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, io::to_dimacs(g)).unwrap();
    p
}

fn vclp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vclp"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn five_cycle_decisions() {
    let c5 = write_graph("c5.col", &fixtures::cycle(5));
    let c5 = c5.to_str().unwrap();
    let out = vclp(&["solve-vc", c5, "-k", "3", "--json"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["answer"], "yes");
    assert_eq!(r["witness"].as_array().unwrap().len(), 3);
    assert_eq!(r["vc_star"], "2.5");
    assert_eq!(r["mu"], "0.5");
    assert_eq!(code(&vclp(&["solve-vc", c5, "-k", "2"])), 1);
    assert_eq!(
        code(&vclp(&["solve-vc", c5, "-k", "3", "--variant", "simple"])),
        0
    );
    // |M| = 2 but vc = 3
    assert_eq!(code(&vclp(&["solve-agvc", c5, "-l", "0"])), 1);
    assert_eq!(code(&vclp(&["solve-agvc", c5, "-l", "1"])), 0);
}

#[test]
fn minimum_and_report_round_trip() {
    let p = write_graph("petersen.col", &fixtures::petersen());
    let out = vclp(&["solve-vc", p.to_str().unwrap(), "--minimum", "--json"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let r: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(r["k"], 6);
    assert_eq!(r["vc_star"], "5.0");
    assert_eq!(r["mu"], "1.0");
    assert!(r["stats"]["nodes_visited"].as_u64().unwrap() >= 1);
    let labels: Vec<u64> = r["witness"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert!(labels.iter().all(|&l| (1..=10).contains(&l)));
    let again = serde_json::to_string(&r).unwrap();
    assert_eq!(serde_json::from_str::<Value>(&again).unwrap(), r);
}

#[test]
fn transversal_commands() {
    let c5 = write_graph("c5-oct.col", &fixtures::cycle(5));
    let c5 = c5.to_str().unwrap();
    assert_eq!(code(&vclp(&["solve-oct", c5, "-k", "0"])), 1);
    let out = vclp(&["solve-oct", c5, "-k", "1", "--json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["witness"].as_array().unwrap().len(), 1);
    assert_eq!(code(&vclp(&["solve-svd", c5, "-k", "1"])), 0);
    assert_eq!(code(&vclp(&["solve-svd", c5, "-k", "0"])), 1);
    assert_eq!(
        code(&vclp(&[
            "vc-param", c5, "--set", "1", "--kind", "oct", "-l", "3"
        ])),
        0
    );
    assert_eq!(
        code(&vclp(&[
            "vc-param", c5, "--set", "1", "--kind", "kvd", "-l", "2"
        ])),
        1
    );
    // an empty set leaves an odd cycle
    assert_eq!(
        code(&vclp(&[
            "vc-param", c5, "--set", "", "--kind", "oct", "-l", "3"
        ])),
        2
    );
}

#[test]
fn kernelize_cubic_graph() {
    let mut rng = fixtures::rng(3);
    let p = write_graph("cubic80.col", &fixtures::random_cubic(80, &mut rng));
    let p = p.to_str().unwrap();
    // measure 0 at k = 40: solved outright
    let out = vclp(&["kernelize", p, "-k", "40", "-c", "1", "--json"]);
    let r = json(&out);
    match r["answer"].as_str().unwrap() {
        "kernel" => assert!(r["kernel"]["vertices"].as_u64().unwrap() <= 80 - 2 * 6),
        "no" => assert_eq!(code(&out), 1),
        other => panic!("unexpected answer {other}"),
    }
    let out = vclp(&["kernelize", p, "-k", "50", "--json"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["answer"], "kernel");
    let kp = r["kernel"]["k_prime"].as_i64().unwrap();
    assert!(r["kernel"]["vertices"].as_i64().unwrap() <= 2 * kp - 2 * 6);
    assert!(r["kernel"]["dimacs"]
        .as_str()
        .unwrap()
        .starts_with("p edge"));
    assert_eq!(code(&vclp(&["kernelize", p, "-k", "50", "-c", "0"])), 2);
}

#[test]
fn oracle_and_errors() {
    let k4 = write_graph("k4.col", &fixtures::complete(4));
    let k4 = k4.to_str().unwrap();
    let out = vclp(&["oracle", "vc", k4, "--json"]);
    assert_eq!(json(&out)["value"], 3);
    assert_eq!(json(&vclp(&["oracle", "lp", k4, "--json"]))["value"], "2.0");
    assert_eq!(
        json(&vclp(&["oracle", "konig", k4, "--json"]))["value"],
        false
    );
    assert_eq!(
        code(&vclp(&["solve-vc", "/nonexistent/graph.col", "-k", "1"])),
        2
    );
    assert_eq!(code(&vclp(&["solve-vc", k4])), 2);
    assert_eq!(code(&vclp(&["frobnicate"])), 2);
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "1 2\n2 x\n").unwrap();
    assert_eq!(
        code(&vclp(&["solve-vc", bad.to_str().unwrap(), "-k", "1"])),
        2
    );
    let mcgee = write_graph("mcgee.col", &fixtures::mcgee());
    assert_eq!(code(&vclp(&["oracle", "lp", mcgee.to_str().unwrap()])), 2);
}

#[test]
fn bench_directory_in_order() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("bench-dir");
    std::fs::create_dir_all(&dir).unwrap();
    for (name, g) in [
        ("a.col", fixtures::cycle(7)),
        ("b.col", fixtures::petersen()),
        ("c.col", fixtures::cube()),
    ] {
        std::fs::write(dir.join(name), io::to_dimacs(&g)).unwrap();
    }
    let out = vclp(&["bench", dir.to_str().unwrap(), "--jobs", "2", "--json"]);
    assert_eq!(code(&out), 0);
    let rows = json(&out);
    let got: Vec<(String, i64)> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            (
                r["problem"].as_str().unwrap().to_string(),
                r["k"].as_i64().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        got,
        vec![
            ("a.col".into(), 4),
            ("b.col".into(), 6),
            ("c.col".into(), 4)
        ]
    );
}
