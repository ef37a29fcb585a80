use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use kordered::io::decode_graph6;

fn kordered(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kordered"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().expect("wait")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn sharpness_row_for_ten_four() {
    let o = kordered(&["sharpness", "--n", "10", "--k", "4"], None);
    assert!(o.status.success());
    let out = stdout(&o);
    let row = out.lines().nth(1).unwrap();
    assert!(
        row.starts_with("0,10,4,5,no_s_cycle,1 7 2 8,false"),
        "{row}"
    );
}

#[test]
fn infeasible_parameters_exit_3() {
    for args in [
        &["sharpness", "--n-max", "40"][..],
        &["sharpness", "--n", "10", "--k", "6"],
        &["extremal", "dense", "--n", "60", "--r", "1"],
        &["gen", "sharpness", "--n", "9", "--k", "5"],
    ] {
        let o = kordered(args, None);
        assert_eq!(o.status.code(), Some(3), "{args:?}");
    }
}

#[test]
fn malformed_graph_exits_1() {
    let o = kordered(&["ordered", "--k", "3"], Some("D~|\n"));
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
}

#[test]
fn c6_is_not_four_ordered() {
    // C6 as an edge list
    let c6 = "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
    let o = kordered(&["ordered", "--k", "4", "--format", "json"], Some(c6));
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"][0]["outcome"], "not_k_ordered");
    assert_eq!(v["rows"][0]["witness"], serde_json::json!([0, 1, 3, 2]));
    let o = kordered(&["scycle", "--seq", "0,2,1,3"], Some(c6));
    assert!(stdout(&o).contains("no_s_cycle"));
}

#[test]
fn gen_writes_graph6_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let g6 = dir.path().join("s.g6");
    let side = dir.path().join("s.json");
    let o = kordered(
        &[
            "gen",
            "sharpness",
            "--n",
            "10",
            "--k",
            "4",
            "--out",
            g6.to_str().unwrap(),
            "--sidecar",
            side.to_str().unwrap(),
        ],
        None,
    );
    assert!(o.status.success());
    let g = decode_graph6(fs::read_to_string(&g6).unwrap().trim().as_bytes()).unwrap();
    assert_eq!(g.min_degree(), 5);
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&side).unwrap()).unwrap();
    assert_eq!(meta["witness"], serde_json::json!([1, 7, 2, 8]));
    assert_eq!(meta["density"], "13/25");
    assert_eq!(meta["min_degree"], 5);

    // the emitted graph feeds straight back into scycle
    let o = kordered(
        &[
            "scycle",
            "--seq",
            "1,7,2,8",
            "--graph",
            g6.to_str().unwrap(),
        ],
        None,
    );
    assert!(stdout(&o).contains("no_s_cycle"));
}

#[test]
fn regular_flags_the_perfect_matching() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pm.txt");
    let mut text = String::from("12\n");
    for i in 0..6 {
        text.push_str(&format!("{i} {}\n", i + 6));
    }
    fs::write(&path, text).unwrap();
    let o = kordered(
        &[
            "regular",
            "--graph",
            path.to_str().unwrap(),
            "--eps",
            "3/10",
        ],
        None,
    );
    assert!(o.status.success());
    let row = stdout(&o).lines().nth(1).unwrap().to_string();
    assert!(row.starts_with("false,exact,false,"), "{row}");
}

#[test]
fn seeds_change_scan_output_and_repeat_it() {
    let run = |seed: &str| {
        stdout(&kordered(
            &[
                "scan", "--n", "8", "--k", "3", "--trials", "4", "--seed", seed,
            ],
            None,
        ))
    };
    assert_eq!(run("5"), run("5"));
    assert_ne!(run("5"), run("6"));
}

#[test]
fn timings_add_a_column() {
    let o = kordered(
        &["extremal", "sparse", "--n", "60", "--k", "4", "--timings"],
        None,
    );
    assert!(stdout(&o).lines().next().unwrap().contains("wall_us"));
}
