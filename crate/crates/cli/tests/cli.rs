use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn agraded(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agraded")).args(args).output().unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).to_string_lossy().into_owned()
}

fn scratch(name: &str, text: &str) -> String {
    let dir: PathBuf = std::env::temp_dir().join(format!("agraded-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn std_pairs_of_x2y() {
    let f = scratch("x2y.ideal", "vars: x y\nx^2 y\n");
    let o = agraded(&["std-pairs", &f]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1 + <x>\n1 + <y>\nx + <y>\n# faces=2\n# pairs=3\n");
}

#[test]
fn chain_check_fails_at_the_empty_face() {
    let o = agraded(&["chain-check", &data("counterexample.ideal")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("violation face {} ")), "{out}");
    assert!(out.contains("# violations=1"));
}

#[test]
fn counterexample_verifies() {
    let o = agraded(&["counterexample", "verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("# passed=true"));
}

#[test]
fn shipped_files_are_what_the_binary_prints() {
    let ideal = agraded(&["counterexample", "ideal"]);
    let file = std::fs::read_to_string(data("counterexample.ideal")).unwrap();
    // same lines up to order; the file keeps the listing order of the construction
    let body = |s: &str| {
        let mut v: Vec<String> = s.lines().filter(|l| !l.starts_with('#')).map(str::to_string).collect();
        v.sort();
        v
    };
    assert_eq!(body(&stdout(&ideal)), body(&file));
    let matrix = agraded(&["counterexample", "matrix"]);
    let file = std::fs::read_to_string(data("counterexample.matrix")).unwrap();
    assert_eq!(body(&stdout(&matrix)), body(&file));
}

#[test]
fn toric_initial_ideal_round_trips() {
    let a = scratch("cubic.matrix", "2 4\n1 1 1 1\n0 1 2 3\n");
    let o = agraded(&["initial", &a, "--weights", "1,1,1,1", "--tiebreak", "3,2,1,0"]);
    assert_eq!(o.status.code(), Some(0));
    let init = scratch("cubic-init.ideal", &stdout(&o));
    let t = agraded(&["triangulate", &init, &a]);
    assert_eq!(t.status.code(), Some(0), "{}", stdout(&t));
    let v = agraded(&["verify-agraded", &init, &a, "--box", "6,12"]);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
}

#[test]
fn violations_exit_with_one() {
    let c = scratch("c.ideal", "vars: x y\nx^2 - x y\n");
    assert_eq!(agraded(&["saturated-check", &c, "--box", "4,4"]).status.code(), Some(1));
    let bad = scratch("not-primary.ideal", "vars: x y\ny^2\nx^2 - x y\n");
    assert_eq!(agraded(&["verify-decomposition", &bad, "--box", "4,4"]).status.code(), Some(1));
    let x = scratch("x.ideal", "vars: x y z\nx\n");
    let a = scratch("cubic3.matrix", "2 3\n1 1 1\n0 1 2\n");
    assert_eq!(agraded(&["verify-agraded", &x, &a, "--box", "4,8"]).status.code(), Some(1));
}

#[test]
fn bad_input_exits_with_two() {
    let f = scratch("bad.ideal", "vars: x\nx y\n");
    let o = agraded(&["std-pairs", &f]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(agraded(&["std-pairs", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(agraded(&["no-such-command"]).status.code(), Some(2));
    let unit = scratch("unit.ideal", "vars: x\n1\n");
    assert_eq!(agraded(&["std-pairs", &unit]).status.code(), Some(2));
}
