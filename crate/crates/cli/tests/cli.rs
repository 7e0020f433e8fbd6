use std::process::{Command, Output};

use serde_json::Value;

fn anchored(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_anchored")).args(args).output().expect("spawn anchored")
}

fn json(args: &[&str]) -> Value {
    let out = anchored(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn critical_counts_n5() {
    let v = json(&["critical", "--n", "5"]);
    let counts = &v["result"]["counts"];
    let got: Vec<u64> = (0..4).map(|d| counts[d.to_string()].as_u64().unwrap()).collect();
    assert_eq!(got, vec![1, 5, 10, 36]);
    assert_eq!(v["result"]["cells"].as_array().unwrap().len(), 52);
    assert!(v["verdicts"].as_array().unwrap().iter().all(|x| x["pass"] == true));
}

#[test]
fn omega_boundary_example() {
    let v = json(&["boundary", "--n", "5", "--space", "omega", "--cell", "A:1|B:2,3|C:4|D:5"]);
    let faces: Vec<&str> =
        v["result"]["faces"].as_array().unwrap().iter().map(|f| f["text"].as_str().unwrap()).collect();
    assert_eq!(faces.len(), 6);
    assert!(faces.contains(&"A:1,2|B:3|C:4|D:5"));
    assert!(faces.contains(&"A:1|B:2,3|C:4,5|D:"));
}

#[test]
fn tcs_n5_s3_is_sharp() {
    let v = json(&["tcs", "--n", "5", "--s", "3"]);
    let r = &v["result"];
    assert_eq!(r["lower"], 9);
    assert_eq!(r["upper"], 9);
    assert_eq!(r["sharp"], true);
}

#[test]
fn tc_n4_and_explicit_j() {
    let v = json(&["tc", "--n", "4"]);
    assert_eq!(v["result"]["lower"], 4);
    assert_eq!(v["result"]["upper"], 4);
    let v = json(&["tcs", "--n", "6", "--s", "2", "--j", "3"]);
    assert_eq!(v["result"]["lower"], 6);
    assert_eq!(v["result"]["j_used"], 3);
}

#[test]
fn output_is_byte_identical() {
    for args in [&["ring", "--n", "4"][..], &["critical", "--n", "4", "--format", "csv"], &["tcs", "--n", "4", "--s", "3"]] {
        let a = anchored(args);
        let b = anchored(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn empty_csv_has_header_only() {
    let out = anchored(&["cells", "--n", "3", "--dim", "5", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "id,dim,cell\n");
}

#[test]
fn cup_and_factorize() {
    let v = json(&["cup", "--n", "5", "--cell", "x1:|y1:|x2:|y2:|x3:5|y3:|x4:1,2,3|y4:4", "--cell",
        "x1:|y1:|x2:|y2:|x3:5|y3:|x4:1,2,4|y4:3", "--oracle"]);
    let product: Vec<&str> =
        v["result"]["product"].as_array().unwrap().iter().map(|f| f["text"].as_str().unwrap()).collect();
    assert_eq!(product, vec!["x1:|y1:|x2:|y2:|x3:5|y3:|x4:1,2|y4:3,4"]);
    assert!(v["verdicts"].as_array().unwrap().iter().all(|x| x["pass"] == true));
    let v = json(&["factorize", "--n", "5", "--cell", "x1:|y1:|x2:|y2:|x3:5|y3:|x4:1,2|y4:3,4"]);
    assert_eq!(v["result"]["factors"].as_array().unwrap().len(), 2);
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("anchored-cli-{}.json", std::process::id()));
    let out = anchored(&["betti", "--n", "4", "--oracle", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["result"]["betti"], serde_json::json!([1, 4, 17]));
    assert_eq!(v["result"]["euler_characteristic"], 14);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| anchored(args).status.code().unwrap();
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["critical"]), 1);
    assert_eq!(code(&["critical", "--n", "2"]), 1);
    assert_eq!(code(&["tc", "--n", "3"]), 1);
    assert_eq!(code(&["boundary", "--n", "4", "--cell", "garbage"]), 1);
    assert_eq!(code(&["factorize", "--n", "4", "--cell", "x1:|y1:|x2:|y2:|x3:4|y3:|x4:1,2,3|y4:"]), 0);
    assert_eq!(code(&["ring", "--n", "7"]), 3);
    assert_eq!(code(&["critical", "--n", "9"]), 3);
    assert_eq!(code(&["tcs", "--n", "5", "--s", "2", "--j", "3"]), 1);
}
