use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn interbody(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_interbody"))
        .args(args)
        .env("INTERBODY_SEED", "3")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn report_exit_codes() {
    let sq = data("square.json");
    let sq = sq.to_str().unwrap();
    let o = interbody(&["report", sq, "--t", "0,0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["verdict"], "convex");

    let o = interbody(&["report", sq, "--t", "1,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["verdict"], "non_convex");

    let o = interbody(&["report", data("triangle.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["reason"], "witness");
    assert!(v["witness"]["q"].is_array());
}

#[test]
fn parse_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("interbody-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"dim\": 2,\n \"vertices\": [[0, 0], [1 0]]}").unwrap();
    let o = interbody(&["report", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let wrong = dir.join("wrong.json");
    std::fs::write(&wrong, r#"{"dim": 2, "vertices": [[0, 0, 1], [1, 0], [0, 1]]}"#).unwrap();
    let o = interbody(&["report", wrong.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn radial_and_chambers() {
    let tri = data("triangle.json");
    let o = interbody(&["radial", tri.to_str().unwrap(), "--x", "2,1"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["value"], "3/4");

    let o = interbody(&["chambers", tri.to_str().unwrap()]);
    assert_eq!(json(&o).as_array().unwrap().len(), 6);

    let o = interbody(&["arrangement", tri.to_str().unwrap(), "--affine"]);
    assert_eq!(json(&o).as_array().unwrap().len(), 3);
}

#[test]
fn boundary_outputs() {
    let o = interbody(&["boundary", data("square.json").to_str().unwrap(), "--samples", "8", "--format", "csv"]);
    let text = stdout(&o);
    for row in ["0,2,0", "2,0,2", "4,-2,0", "6,0,-2"] {
        assert!(text.lines().any(|l| l == row), "missing {row} in\n{text}");
    }
    let o = interbody(&["boundary", data("square.json").to_str().unwrap(), "--samples", "7"]);
    assert_eq!(o.status.code(), Some(2));

    let o = interbody(&["boundary", data("cube.json").to_str().unwrap(), "--samples", "42", "--format", "off"]);
    assert!(stdout(&o).starts_with("OFF\n42 80 0\n"));
}

#[test]
fn sweep_grid() {
    let sq = data("square.json");
    let o = interbody(&["sweep", sq.to_str().unwrap(), "--grid", "-1.5:1.5:5,-1.5:1.5:5"]);
    let text = stdout(&o);
    let convex: Vec<&str> = text.lines().filter(|l| l.contains(",convex,")).collect();
    assert_eq!(convex.len(), 1, "{text}");
    assert!(convex[0].starts_with("2,2,0,0,"));

    let o = interbody(&["sweep", sq.to_str().unwrap(), "--grid", ""]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let ico = data("icosahedron.json");
    let a = interbody(&["report", ico.to_str().unwrap()]);
    let b = interbody(&["report", ico.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}
