use std::io::Write;
use std::process::{Command, Output};

fn superlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superlie")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn temp_file(content: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(content.as_bytes()).unwrap();
    f
}

#[test]
fn sec10_counterexample() {
    let o = superlie(&["counterexample", "sec10"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("[v,v] = 2x + 4y"));
    assert!(text.contains("verdict: NotAlgebraic"));
}

#[test]
fn analyze_bundled_sl2_as_json() {
    let o = superlie(&["analyze", "@sl2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["commutant_dim"], 3);
    assert_eq!(v["radical_dim"], 0);
    assert_eq!(v["quasireductive"], true);
}

#[test]
fn duplicate_triple_is_an_input_error() {
    let f = temp_file("dims 2 0\nlabels h e\nh e e 1\nh e e 1\n");
    let o = superlie(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}

#[test]
fn jacobi_failure_exits_one() {
    let f = temp_file("dims 3 0\n1 2 2 2\n2 1 2 -2\n1 3 3 -3\n3 1 3 3\n2 3 1 1\n3 2 1 -1\n");
    let o = superlie(&["validate", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness"));
}

#[test]
fn missing_file_is_an_input_error() {
    let o = superlie(&["analyze", "/nonexistent/algebra.alg"]);
    assert_eq!(o.status.code(), Some(2));
    let o = superlie(&["analyze", "@nothing"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn kac_verdicts_do_not_change_the_exit_code() {
    for subalgebra in ["@notalg", "@inner2"] {
        let o = superlie(&["kac", "@sl2", subalgebra]);
        assert_eq!(o.status.code(), Some(0), "{subalgebra}");
    }
    let text = stdout(&superlie(&["kac", "@sl2", "@inner2"]));
    assert!(text.contains("semisimple: false"));
}

#[test]
fn coaction_and_counterexamples() {
    assert_eq!(superlie(&["coaction", "@sec8", "--truncation", "3"]).status.code(), Some(0));
    let broken = "source 1 1 2\ntarget u:odd v:odd\nf 1 1 = 1\nf 1 2 = v\nf 1 3 = u\nf 2 2 = 1\nf 3 3 = 1\nchar 1 1 = uv\nchar 1 2 = u\nchar 1 3 = v\n";
    let f = temp_file(broken);
    let o = superlie(&["coaction", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    for which in ["sec8", "notalg"] {
        assert_eq!(superlie(&["counterexample", which, "--seed", "9"]).status.code(), Some(0));
    }
}

#[test]
fn jordan_and_derivations() {
    let o = superlie(&["jordan", "@a"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: NotAlgebraic"));
    let f = temp_file("1 2\n3 4\n5 6\n");
    assert_eq!(superlie(&["jordan", f.path().to_str().unwrap()]).status.code(), Some(2));
    let o = superlie(&["derivations", "@gl11", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["outer_dims"], "2|0");
}

#[test]
fn generator_budget_is_enforced() {
    let o = Command::new(env!("CARGO_BIN_EXE_superlie"))
        .args(["counterexample", "sec10"])
        .env("SUPERLIE_GENERATOR_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2), "{}", stdout(&o));
}
