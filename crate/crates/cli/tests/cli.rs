use std::process::{Command, Output};

fn flopkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flopkit"))
        .args(args)
        .env("FLOPKIT_COLOR", "never")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = flopkit(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    flopkit(args).status.code().unwrap()
}

#[test]
fn labels_tables() {
    assert_eq!(
        stdout(&["labels", "E", "6"]),
        "E6 highest-root labels\nvertex\tlabel\n1\t1\n2\t2\n3\t3\n4\t2\n5\t1\n6\t2\n"
    );
    let a4 = stdout(&["labels", "A", "4"]);
    let labels: Vec<&str> = a4.lines().skip(2).map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(labels, ["1", "1", "1", "1"]);
}

#[test]
fn equator_by_length_and_by_vertex_agree() {
    let by_ell = stdout(&["equator", "--ell", "3"]);
    let json: serde_json::Value = serde_json::from_str(&by_ell).unwrap();
    assert_eq!(json["N"], 4);
    assert_eq!(json["punctures"], 6);
    assert_eq!(json["equatorLabels"], serde_json::json!([1, 3, 2, 3]));
    // E7 vertex 2 also carries label 3
    assert_eq!(stdout(&["equator", "--diagram", "E7", "--vertex", "2"]), by_ell);
}

#[test]
fn arrangement_json_and_svg() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&[
        "arrangement", "--diagram", "E6", "--vertices", "3", "--window", "0,1", "--format", "json",
    ]))
    .unwrap();
    let labels: Vec<u64> = json["walls"].as_array().unwrap().iter().map(|w| w["label"].as_u64().unwrap()).collect();
    assert_eq!(labels, [1, 3, 2, 3]);

    let svg = stdout(&[
        "arrangement", "--diagram", "A2", "--vertices", "1,2", "--window", "0,0,2,2", "--format", "svg", "--scale", "50",
    ]);
    assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
    assert!(svg.contains(r#"viewBox="0 0 100 100""#));
    assert_eq!(svg.matches("<polyline").count(), 7);
}

#[test]
fn arrangement_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e8.svg");
    let out = stdout(&[
        "arrangement", "--diagram", "E8", "--vertices", "2,7", "--window", "0,0,1,1",
        "--format", "svg", "--output", path.to_str().unwrap(),
    ]);
    assert!(out.is_empty());
    let svg = std::fs::read_to_string(&path).unwrap();
    // 22 lines meet the cell; x+y=0, 2x+y=0, 3x+y=0 and 4x+y=0 only touch its corner
    assert_eq!(svg.matches("<polyline").count(), 18);
}

#[test]
fn chambers_counts() {
    assert!(stdout(&["chambers", "--diagram", "A2", "--vertices", "1,2"]).starts_with("chambers: 2\n"));
    assert!(stdout(&["chambers", "--diagram", "E8", "--vertices", "2,7"]).starts_with("chambers: 28\n"));
    assert_eq!(
        stdout(&["chambers", "--diagram", "E6", "--vertices", "3"]),
        "chambers: 4\n[0, 1/3)\n[1/3, 1/2)\n[1/2, 2/3)\n[2/3, 1)\n"
    );
}

#[test]
fn helix_range() {
    let out = stdout(&["helix", "--ell", "5", "--range", "0..9"]);
    assert_eq!(out.lines().count(), 10);
    assert!(out.contains("\tZ") && out.contains("\tZ^ω"));
    assert_eq!(stdout(&["helix", "--ell", "1", "--range", "-1..1"]), "S_-1\tO_C(-2)\nS_0\tO_C(-1)\nS_1\tO_C\n");
}

#[test]
fn pi1_words() {
    let out = stdout(&["pi1", "--ell", "3", "--word", "c b0 b1 b2 b3 a"]);
    assert_eq!(out.lines().next(), Some("trivial"));
    assert_eq!(
        stdout(&["pi1", "--ell", "1", "--word", "c"]),
        "normal form: a^-1 b0^-1\nmonodromy: F^-1 ∘ O(-1) ∘ F\n"
    );
}

#[test]
fn gv_csv() {
    assert_eq!(
        stdout(&["gv", "--ell", "4"]),
        "ell,gv_lower_bound,dim_acon_lower_bound\n4,\"(6,4,2,1)\",56\n"
    );
    let table = stdout(&["gv"]);
    let mut reader = csv::Reader::from_reader(table.as_bytes());
    let dims: Vec<u32> = reader.records().map(|r| r.unwrap()[2].parse().unwrap()).collect();
    assert_eq!(dims, [1, 8, 26, 56, 124, 200]);
    let deform = stdout(&["gv", "--ell", "3", "--deform", "2"]);
    assert!(deform.lines().skip(2).all(|l| l.ends_with(": false")));
}

#[test]
fn walk_and_graph() {
    assert_eq!(stdout(&["walk", "--diagram", "E6", "--vertex", "3", "--count", "8"]), "3 2 3 1 3 2 3 1\n");
    let g: serde_json::Value = serde_json::from_str(&stdout(&["graph", "--diagram", "A2", "--vertices", "1,2"])).unwrap();
    assert_eq!(g["nodes"].as_array().unwrap().len(), 1);
    assert_eq!(g["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn conventions_and_involution() {
    assert!(stdout(&["conventions"]).contains("E_n"));
    assert_eq!(stdout(&["involution", "--diagram", "D5"]), "1 -> 1\n2 -> 2\n3 -> 3\n4 -> 5\n5 -> 4\n");
    assert!(stdout(&["roots", "--diagram", "E8"]).starts_with("positive roots: 120\n"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["graph", "--diagram", "E8", "--vertices", "2,7", "--depth", "8"][..],
        &["arrangement", "--diagram", "E7", "--vertices", "3,6", "--window", "-1,-1,1,1", "--format", "svg"],
        &["gv"],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["labels", "D", "3"]), 2);
    assert_eq!(code(&["labels", "F", "4"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["arrangement", "--diagram", "E6", "--vertices", "3", "--window", "1,0"]), 2);
    assert_eq!(code(&["arrangement", "--diagram", "E6", "--vertices", "1,2,3", "--window", "0,1"]), 2);
    assert_eq!(code(&["helix", "--ell", "2", "--range", "3..1"]), 2);
    assert_eq!(code(&["equator", "--ell", "7"]), 3);
    assert_eq!(code(&["equator", "--diagram", "A3", "--vertex", "9"]), 3);
    assert_eq!(code(&["pi1", "--ell", "2", "--word", "b5"]), 3);
    assert_eq!(code(&["gv", "--ell", "3", "--deform", "4"]), 3);
}

#[test]
fn colour_is_off_when_piped() {
    let out = Command::new(env!("CARGO_BIN_EXE_flopkit"))
        .args(["labels", "A", "2"])
        .env("FLOPKIT_COLOR", "auto")
        .output()
        .unwrap();
    assert!(!String::from_utf8(out.stdout).unwrap().contains('\x1b'));
}
