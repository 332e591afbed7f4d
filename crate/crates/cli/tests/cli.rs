use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcrystal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn graph_json_counts() {
    let o = run(&[
        "graph",
        "--type",
        "A2",
        "--colours",
        "1,0;0,1",
        "--bound",
        "1,1",
        "--emit",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    let paths = v["paths"].as_array().unwrap();
    let count = |d: [u64; 2]| {
        paths
            .iter()
            .filter(|p| p["degree"] == serde_json::json!(d))
            .count()
    };
    assert_eq!((count([1, 0]), count([0, 1])), (12, 12));
}

#[test]
fn braiding_table_has_nine_rows() {
    let o = run(&["braiding", "--type", "A2", "--pair", "1,0;0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 9);
    assert!(rows.contains(&"(1,3) -> 0"));
    assert!(rows.contains(&"(2,2) -> (3,1)"));
}

#[test]
fn verify_all_c2() {
    let o = run(&["verify", "--type", "C2", "--suite", "all", "--bound", "1,1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failures\n"));
}

#[test]
fn verify_with_word_override() {
    let o = run(&["verify", "--type", "A2", "--suite", "kp", "--word", "2,1,2"]);
    assert_eq!(o.status.code(), Some(0));
    let bad = run(&["verify", "--type", "A2", "--suite", "kp", "--word", "1,1,2"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--type", "Q7"][..],
        &["graph", "--type", "A2", "--bound", "1"],
        &["graph", "--type", "A2", "--colours", "1,0;2,0"],
        &["crystal", "--type", "A2", "--weight", "-1,0"],
        &["nonsense"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["graph", "--type", "C2", "--bound", "1,1", "--emit", "dot"][..],
        &[
            "crystal", "--type", "G2", "--weight", "1,0", "--emit", "json",
        ],
        &[
            "verify", "--type", "A2", "--suite", "graph", "--emit", "json",
        ],
    ] {
        assert_eq!(stdout(&run(args)), stdout(&run(args)), "{args:?}");
    }
}

#[test]
fn info_and_out_file() {
    let o = run(&["info", "--type", "C2"]);
    let text = stdout(&o);
    assert!(text.contains("|W| 8"));
    assert!(text.contains("vertices 10"));
    let dir = std::env::temp_dir().join(format!("qcrystal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("b.dot");
    let o = run(&[
        "crystal",
        "--type",
        "A2",
        "--weight",
        "1,0",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    let dot = std::fs::read_to_string(&file).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 2);
    std::fs::remove_dir_all(dir).unwrap();
}
