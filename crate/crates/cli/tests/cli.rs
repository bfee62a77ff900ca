use std::process::{Command, Output};

fn fb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fb")).args(args).output().expect("run fb")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn section<'a>(text: &'a str, title: &str) -> Vec<&'a str> {
    let start = format!("[{title}]");
    text.lines().skip_while(|l| *l != start).skip(2).take_while(|l| !l.is_empty()).collect()
}

#[test]
fn reeh_basis_of_v4_in_a4() {
    let o = fb(&["reeh-basis", "--fusion", "frobenius:A4:2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(
        section(&text, "marks"),
        vec!["alpha_1#1\t4\t0\t0", "alpha_C2#1\t6\t2\t0", "alpha_V4#1\t1\t1\t1"]
    );
}

#[test]
fn reeh_basis_of_c4() {
    let text = stdout(&fb(&["reeh-basis", "--fusion", "trivial:C4"]));
    assert_eq!(section(&text, "marks"), vec!["alpha_1#1\t4\t0\t0", "alpha_C2#1\t2\t2\t0", "alpha_C4#1\t1\t1\t1"]);
}

#[test]
fn units_of_odd_order_group() {
    let o = fb(&["units", "--group", "catalog:C3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(section(&text, "summary").contains(&"group\t{±1}"));
}

#[test]
fn stable_units_rank() {
    let text = stdout(&fb(&["stable-units", "--fusion", "frobenius:A4:2"]));
    assert_eq!(section(&text, "summary"), vec!["rank\t2"]);
    assert_eq!(section(&text, "basis").len(), 2);
}

#[test]
fn json_output_parses() {
    let o = fb(&["marks", "--group", "catalog:S3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verb"], "marks");
    assert_eq!(v["sections"][0]["rows"].as_array().unwrap().len(), 4);
}

#[test]
fn descriptor_files_are_read() {
    let dir = std::env::temp_dir().join(format!("fb-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.json");
    std::fs::write(&path, r#"{"kind":"permutation","name":"S3","degree":3,"generators":[[[1,2]],[[1,2,3]]]}"#).unwrap();
    let from_file = fb(&["marks", "--group", path.to_str().unwrap()]);
    let from_catalog = fb(&["marks", "--group", "catalog:S3"]);
    assert_eq!(from_file.status.code(), Some(0));
    let (a, b) = (stdout(&from_file), stdout(&from_catalog));
    assert_eq!(section(&a, "marks"), section(&b, "marks"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(fb(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(fb(&["marks", "--bogus"]).status.code(), Some(2));
    assert_eq!(fb(&["marks"]).status.code(), Some(2));
    assert_eq!(fb(&["local", "--fusion", "frobenius:A4:2", "--subgroup", "Q8#7"]).status.code(), Some(2));
    assert_eq!(fb(&["marks", "--group", "catalog:S5", "--cap", "60"]).status.code(), Some(1));
    let unstable = fb(&["transfer", "--fusion", "frobenius:A4:2", "--element", "C2#1"]);
    assert_eq!(unstable.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&unstable.stderr).contains("not stable"));
    assert_eq!(fb(&["bouc-check", "--fusion", "frobenius:S4:2"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["classes", "--fusion", "frobenius:S4:2", "--format", "json"][..],
        &["stable-units", "--fusion", "frobenius:C2^4:(C7:C3):2"][..],
        &["verify", "--suite", "properties", "--seed", "7"][..],
    ] {
        let (a, b) = (fb(args), fb(args));
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn verify_paper_examples_lists_twelve_criteria() {
    let o = fb(&["verify", "--suite", "paper-examples"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows = section(&text, "criteria");
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().all(|r| r.contains("\tPASS\t")));
}

#[test]
fn tampered_marks_table_fails_verify() {
    let o = fb(&["verify", "--suite", "all", "--tamper"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let failed: Vec<&str> = section(&text, "criteria").into_iter().filter(|r| r.contains("\tFAIL\t")).collect();
    assert_eq!(failed.len(), 2);
    assert!(failed[0].starts_with("01\treeh-tables"));
    assert!(failed[1].starts_with("14\tcongruences"));
}
