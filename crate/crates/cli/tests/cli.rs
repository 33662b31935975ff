use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z2steenrod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn reduce_prints_the_relation() {
    let o = run(&["reduce", "t0^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "a*t1 + s*x1 + a*t0*x1\n");
}

#[test]
fn malformed_expression_exits_2_with_column() {
    let o = run(&["reduce", "t0^^"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("syntax error at column 4"), "{err}");
    assert!(err.contains("     ^"), "{err}");
}

#[test]
fn unknown_flags_and_subcommands_are_usage_errors() {
    assert_eq!(
        run(&["reduce", "--frobnicate", "t0"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["primitives", "--deg", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["profile", "check-free", "h=[1|2] k=[|0]"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn json_output_is_versioned() {
    let o = run(&["--json", "mul", "t0", "t0"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "mul");
    assert_eq!(v["result"]["text"], "a*t1 + s*x1 + a*t0*x1");
}

#[test]
fn out_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("z2steenrod-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("coproduct.json");
    let o = run(&["coproduct", "t1", "--json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["text"], "(t1) # (1) + (x1) # (t0) + (1) # (t1)");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn antipode_and_primitives() {
    assert_eq!(stdout(&run(&["antipode", "t1"])), "t1 + t0*x1\n");
    let o = run(&["primitives", "--deg", "1,1"]);
    assert_eq!(stdout(&o), "degree 1+α: 1 primitives\nx1\n");
}

#[test]
fn basis_lists_degrees() {
    let o = run(&["basis", "--window", "1"]);
    let s = stdout(&o);
    assert!(s.contains("1\tt0"), "{s}");
    assert!(s.lines().all(|l| l.contains('\t')));
}

#[test]
fn profile_commands() {
    assert_eq!(
        stdout(&run(&["profile", "minimize", "h=[0|inf] k=[inf,0|inf]"])),
        "h=[0|inf] k=[1,0|inf]\n"
    );

    let o = run(&["profile", "check-free", "E(1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "h=[|0] k=[2,1|0]: free pair, finite quotient\n");
    assert_eq!(
        run(&["profile", "check-free", "h=[2|0] k=[2,1|0]"])
            .status
            .code(),
        Some(1)
    );

    let o = run(&["profile", "basis", "A(2)", "--window", "40"]);
    assert!(stdout(&o).starts_with("64 monomials\n"));
    let o = run(&["profile", "basis", "E(1)", "--literal"]);
    assert!(stdout(&o).starts_with("2 monomials\n"));

    let o = run(&["profile", "check-hopf", "h=[2|0] k=[|0]"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("generator x2 fails Coproduct"));
    assert_eq!(
        run(&["profile", "check-hopf", "A(1)"]).status.code(),
        Some(0)
    );

    let o = run(&["profile", "members", "E(1)", "--window", "4"]);
    assert_eq!(stdout(&o), "1+α\tx1\n4\tt0^4\n");
    let o = run(&["profile", "members", "E(1)", "--element", "a*t1 + s*x1"]);
    assert!(stdout(&o).ends_with("is not in I\n"));
}

#[test]
fn verify_commands() {
    let o = run(&[
        "verify",
        "cofree",
        "--B",
        "A(1)",
        "--C",
        "E(1)",
        "--generators",
        "1,x1",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("bijective (margin 2"));
    let o = run(&["verify", "cofree", "--B", "E(1)", "--C", "A(1)"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["verify", "paper"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(
        s.lines()
            .all(|l| l.starts_with("PASS") || l.starts_with("info")),
        "{s}"
    );
    assert!(s.contains("minimize(h,k₂) = (h,k₁)"));
}

#[test]
fn compare_maps() {
    assert_eq!(stdout(&run(&["compare", "r", "t1 + a*t2"])), "X2\n");
    assert_eq!(stdout(&run(&["compare", "rho", "t1*x1"])), "S^2*X1^2*X2\n");
}

#[test]
fn selftest_subset() {
    let o = run(&["selftest", "--criteria", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("criterion  1 PASS relation fidelity"), "{s}");
    assert_eq!(s.lines().count(), 2);
    assert_eq!(
        run(&["selftest", "--criteria", "11"]).status.code(),
        Some(2)
    );
}
