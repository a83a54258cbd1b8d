use std::io::Write;
use std::process::{Command, Output, Stdio};

use circloid::verify::worked;

fn circloid(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_circloid"));
    cmd.args(args).env_remove("CIRCLOID_MAX_N").stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("binary runs");
    if let Some(s) = stdin {
        child.stdin.take().unwrap().write_all(s.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_kostka_foulkes() {
    let o = circloid(&["expand", "kostka-foulkes", "--lambda", "2,1", "--mu", "1,1,1"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t + t^2\n");
}

#[test]
fn expand_macdonald_formats() {
    let o = circloid(&["expand", "macdonald", "--mu", "2,1", "--method", "hhl", "--basis", "schur"], None);
    assert_eq!(stdout(&o), "s[3] : 1\ns[2,1] : t + q\ns[1,1,1] : q*t\n");
    let o = circloid(&["expand", "macdonald", "--mu", "1", "--basis", "monomial"], None);
    assert_eq!(stdout(&o), "m[1] : 1\n");
    let o = circloid(&["expand", "macdonald", "--mu", "2", "--format", "csv"], None);
    assert_eq!(stdout(&o), "label,q,t,coeff\ns[2],0,0,1\n\"s[1,1]\",1,0,1\n");
    let o = circloid(&["expand", "macdonald", "--mu", "2,1", "--format", "json"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["basis"], "schur");
    assert_eq!(v["terms"][0]["coeff"][0], serde_json::json!({ "q": 1, "t": 1, "coeff": "1" }));
    let o = circloid(&["expand", "macdonald", "--mu", "2", "--basis", "fundamental"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Q{} : 1\nQ{1} : q\n");
}

#[test]
fn identical_invocations_give_identical_output() {
    let args = ["expand", "dual-grothendieck", "--shape", "3,2/1", "--vars", "3"];
    let a = circloid(&args, None);
    let b = circloid(&args, None);
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
}

#[test]
fn stats_of_worked_objects() {
    let c1 = serde_json::json!({ "circloid": worked::c1() }).to_string();
    let o = circloid(&["stats"], Some(&c1));
    assert!(stdout(&o).contains("cocharge=4 betrayal=2"), "{}", stdout(&o));

    let f = serde_json::json!({ "filling": worked::square_filling() }).to_string();
    let o = circloid(&["stats", "-"], Some(&f));
    assert!(stdout(&o).contains("inv=4 maj=4"), "{}", stdout(&o));

    let o = circloid(&["stats"], Some(r#"{"word": "6714235"}"#));
    assert!(stdout(&o).contains("cocharge=6"));

    let o = circloid(&["stats"], Some("{not json"));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = circloid(&["verify", "rjformula", "--max-n", "4"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS rjformula"));
    let o = circloid(&["verify", "rjformula", "--max-n", "9"], None);
    assert_eq!(o.status.code(), Some(3));
    let o = circloid(&["--cap", "9", "verify", "examples", "--max-n", "9"], None);
    assert_eq!(o.status.code(), Some(0));
    let o = circloid(&["verify", "nonsense"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = circloid(&["verify", "companions", "--max-n", "3"], None);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn counterexamples_replay_through_stats() {
    let o = circloid(&["verify", "companions", "--max-n", "3", "--json"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let c = v[0]["counterexample"].to_string();
    let o = circloid(&["stats"], Some(&c));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("column_strict=false"), "{}", stdout(&o));
}

#[test]
fn crystal_exports() {
    let o = circloid(&["crystal", "word", "--m", "2", "--n", "2"], None);
    let dot = stdout(&o);
    assert_eq!(dot.matches("->").count(), 2);
    assert_eq!(dot.matches("[label=").count(), 6);

    let o = circloid(&["crystal", "dagger", "--gamma", "1,1", "--m", "2", "--format", "json"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);

    let o = circloid(&["crystal", "circloid", "--gamma", "1", "--format", "json"], None);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 1);

    let o = circloid(&["crystal", "word", "--m", "2", "--n", "12"], None);
    assert_eq!(o.status.code(), Some(3));
}
