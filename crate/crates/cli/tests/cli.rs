use std::process::{Command, Output};

use cidim_core::{dimension, ExponentTriple};

fn cidim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cidim"))
        .arg("--quiet")
        .args(args)
        .env_remove("CIDIM_ORACLE_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn dim_default_is_formula() {
    let o = cidim(&["dim", "5", "6", "7"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "27\n");
    assert_eq!(stdout(&cidim(&["dim", "0", "5", "5"])), "0\n");
    assert_eq!(
        stdout(&cidim(&["dim", "9", "9", "9", "--method", "oracle"])),
        "67\n"
    );
}

#[test]
fn dim_both_agrees() {
    let o = cidim(&["dim", "3", "3", "3", "--method", "both"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "formula: 7\noracle: 7\n");
}

#[test]
fn dim_json_round_trips() {
    let o = cidim(&["dim", "5", "9", "12", "--json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["dimension"], 44);
    assert!(v.get("dimension_oracle").is_none());
    assert_eq!(v["trace"].as_array().unwrap().len(), 2);
    assert_eq!(v["trace"][0]["branch"], "PROP_II");
    assert_eq!(v["trace"][0]["summand"], 40);

    for args in [["7", "3", "12"], ["33", "40", "61"], ["1", "1", "1"]] {
        let mut full = vec!["dim"];
        full.extend(args);
        full.push("--json");
        let v: serde_json::Value = serde_json::from_str(&stdout(&cidim(&full))).unwrap();
        let t: ExponentTriple = serde_json::from_value(v["triple"].clone()).unwrap();
        assert_eq!(v["dimension"], dimension(t).dimension);
        assert!(v["deviation_doubled"].is_u64());
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&cidim(&["dim", "a", "1", "1"])), 2);
    assert_eq!(code(&cidim(&["dim", "1", "1"])), 2);
    assert_eq!(
        code(&cidim(&["dim", "600", "1", "1", "--method", "oracle"])),
        2
    );
    assert_eq!(code(&cidim(&["dim", "600", "1", "1"])), 0);
    assert_eq!(code(&cidim(&["verify", "--max", "0"])), 2);
    assert_eq!(code(&cidim(&["deviation", "0", "2", "2"])), 2);
    assert_eq!(code(&cidim(&["colon", "0", "2", "2"])), 2);
    assert_eq!(code(&cidim(&["frobnicate"])), 2);
}

#[test]
fn oracle_cap_flag_and_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_cidim"))
        .args(["-q", "hilbert", "12", "1", "1"])
        .env("CIDIM_ORACLE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_cidim"))
        .args(["-q", "--oracle-cap", "20", "hilbert", "12", "1", "1"])
        .env("CIDIM_ORACLE_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("total,1\n"));
}

#[test]
fn verify_small() {
    let o = cidim(&["verify", "--max", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "checked 1 sorted triples\nresult: ok\n");
}

#[test]
fn verify_is_independent_of_jobs() {
    let one = cidim(&["verify", "--max", "20", "--jobs", "1"]);
    let many = cidim(&["verify", "--max", "20", "--jobs", "5"]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, many.stdout);
    assert_eq!(stdout(&one), "checked 1540 sorted triples\nresult: ok\n");
}

#[test]
fn hilbert_output() {
    let o = cidim(&["hilbert", "2", "2", "2"]);
    assert_eq!(stdout(&o), "degree,dimension\n0,1\n1,2\n2,1\ntotal,4\n");
    let o = cidim(&["hilbert", "1", "1", "1"]);
    assert_eq!(stdout(&o), "degree,dimension\n0,1\ntotal,1\n");
    let o = stdout(&cidim(&["hilbert", "3", "3", "3"]));
    let body: Vec<&str> = o.lines().skip(1).collect();
    let (total_line, degrees) = body.split_last().unwrap();
    let sum: u64 = degrees
        .iter()
        .map(|l| l.split(',').nth(1).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(sum, 7);
    assert_eq!(*total_line, "total,7");
}

#[test]
fn deviation_output() {
    assert_eq!(stdout(&cidim(&["deviation", "2", "2", "2"])), "1\n");
    assert_eq!(stdout(&cidim(&["deviation", "1", "1", "1"])), "1/2\n");
    assert_eq!(stdout(&cidim(&["deviation", "3", "4", "10"])), "3/2\n");
}

#[test]
fn colon_output() {
    let o = cidim(&["colon", "2", "2", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "triple: 2 2 2\nfirst_jump_degree: 0\npredicted: 0\n"
    );
    let o = cidim(&["colon", "9", "7", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("triple: 5 7 9\n"));
}

#[test]
fn table_to_file_and_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("diff.csv");
    let o = cidim(&[
        "table",
        "--max-i",
        "8",
        "--max-j",
        "8",
        "--diff",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        csv,
        stdout(&cidim(&["table", "--max-i", "8", "--max-j", "8", "--diff"]))
    );
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "j\\i,1,2,3,4,5,6,7,8");
    assert_eq!(lines.len(), 9);
    assert!(!csv.contains('\r') && !csv.contains('"'));
    // (i=2, j=2) and (i=1, j=1)
    assert_eq!(lines[2].split(',').nth(2), Some("3"));
    assert_eq!(lines[1].split(',').nth(1), Some("1"));
}

#[test]
fn table_columns_sum_to_dim() {
    let diff = stdout(&cidim(&[
        "table", "--max-i", "10", "--max-j", "12", "--diff",
    ]));
    let cells: Vec<Vec<i64>> = diff
        .lines()
        .skip(1)
        .map(|l| l.split(',').skip(1).map(|c| c.parse().unwrap()).collect())
        .collect();
    for i in 1..=10usize {
        let mut running = 0;
        for j in 1..=12usize {
            running += cells[j - 1][i - 1];
            let o = cidim(&["dim", &i.to_string(), &j.to_string(), &j.to_string()]);
            assert_eq!(stdout(&o).trim().parse::<i64>().unwrap(), running);
        }
    }
}

#[test]
fn table_unwritable_path_exits_2() {
    let o = cidim(&[
        "table",
        "--max-i",
        "2",
        "--max-j",
        "2",
        "--out",
        "/nonexistent-dir/x/y.csv",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn banner_only_without_quiet() {
    let loud = Command::new(env!("CARGO_BIN_EXE_cidim"))
        .args(["dim", "2", "2", "2"])
        .output()
        .unwrap();
    let quiet = cidim(&["dim", "2", "2", "2"]);
    assert_eq!(loud.stdout, quiet.stdout);
    assert!(String::from_utf8_lossy(&loud.stderr).starts_with("cidim "));
    assert!(quiet.stderr.is_empty());
}
