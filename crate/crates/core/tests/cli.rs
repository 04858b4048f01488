use std::path::PathBuf;

use satelim::cli::run_command;

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("satelim").chain(args.iter().copied());
    let code = run_command(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write_problem(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn eliminate_both_on_twisted_cubic() {
    let file = corpus("twisted_cubic.ideal");
    let (code, out, _) = run(&["eliminate", "--method", "both", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "b1^2 - b2\nb1*b2 - b3\nb2^2 - b1*b3\nAGREE\n");
}

#[test]
fn saturate_satex_by_x0() {
    let file = corpus("satex.ideal");
    let (code, out, err) = run(&["saturate", "--by", "x0", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "x1^2\nx2\n");
    assert!(err.contains("saturation steps: 1"));
}

#[test]
fn empty_generator_list() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_problem(&dir, "empty.ideal", "field QQ\nvars x, y\ngens:\n");
    let (code, out, _) = run(&["gb", "--order", "degrevlex", &f]);
    assert_eq!((code, out.as_str()), (0, ""));
}

#[test]
fn gb_of_satex_example() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_problem(&dir, "g.ideal", "field QQ\nvars x1, x2\ngens:\nx1^2\nx2 - x1^2\n");
    let (code, out, _) = run(&["gb", &f]);
    assert_eq!((code, out.as_str()), (0, "x1^2\nx2\n"));
}

#[test]
fn quotient_and_homogenize() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_problem(&dir, "q.ideal", "field QQ\nvars x, y\ngens:\nx*y\ny^2\n");
    let (code, out, _) = run(&["quotient", "--by", "y", &f]);
    assert_eq!((code, out.as_str()), (0, "x\ny\n"));

    let g = write_problem(&dir, "h.ideal", "field QQ\nvars x1, x2\ngens:\nx1^2\nx2 - x1^2\n");
    let (code, out, err) = run(&["homogenize", "--var", "x0", &g]);
    assert_eq!((code, out.as_str()), (0, "x1^2\nx2\n"));
    assert!(err.contains("saturation steps: 1"));
}

#[test]
fn syzygies_of_two_monomials() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_problem(&dir, "s.ideal", "field QQ\nvars x, y\ngens:\nx\ny\n");
    let (code, out, _) = run(&["syz", &f]);
    assert_eq!((code, out.as_str()), (0, "[-y, x]\n"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_problem(&dir, "bad.ideal", "field QQ\nvars x\ngens:\nx^^2\n");
    let (code, _, err) = run(&["gb", &bad]);
    assert_eq!(code, 1);
    assert!(err.contains("satelim:"));

    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 1);

    let (code, _, _) = run(&["quotient", "--by", "z", corpus("satex.ideal").to_str().unwrap()]);
    assert_eq!(code, 1);

    let big = corpus("twisted_cubic.ideal");
    let (code, _, err) = run(&["--max-pairs", "1", "eliminate", "--method", "block", big.to_str().unwrap()]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn output_is_deterministic() {
    for name in ["module_pair.ideal", "folium_fp.ideal", "circle_line.ideal"] {
        let f = corpus(name);
        let first = run(&["eliminate", "--method", "both", f.to_str().unwrap()]);
        let second = run(&["eliminate", "--method", "both", f.to_str().unwrap()]);
        assert_eq!(first.0, 0, "{name}: {}", first.2);
        assert!(first.1.ends_with("AGREE\n"));
        assert_eq!(first, second);
    }
}

#[test]
fn bench_writes_fixed_schema() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = run(&["bench", "--corpus", dir.path().to_str().unwrap(), "--repeats", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out, "instance,method,order,time_ms,sat_steps,gb_size,max_deg,outcome\n");

    let (code, out, _) = run(&["bench", "--curves", "4", "--repeats", "1"]);
    assert_eq!(code, 0);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.ends_with(",ok")));
}

#[test]
fn binary_runs() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_satelim"))
        .args(["eliminate", corpus("circle_line.ideal").to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "x^2 - 1/2\n");
}
