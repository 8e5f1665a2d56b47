use std::process::{Command, Output};

fn glnchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glnchar"))
        .args(args)
        .env("GLNCHAR_THREADS", "2")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classes_lists_every_class() {
    let o = glnchar(&["classes", "2", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 8);
    let o = glnchar(&["--format", "csv", "classes", "2", "3"]);
    assert_eq!(stdout(&o).lines().count(), 9);
}

#[test]
fn verify_reports_pass() {
    let o = glnchar(&["verify", "sigmamax", "--n", "2", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS sigmamax"));
    let o = glnchar(&["--format", "json", "verify", "typedim", "--n", "2", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v.to_string().contains("typedim"));
}

#[test]
fn usage_errors() {
    let o = glnchar(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(glnchar(&["classes", "2"]).status.code(), Some(2));
    assert_eq!(glnchar(&["classes", "2", "6"]).status.code(), Some(2));
    assert_eq!(glnchar(&["verify", "nosuchsuite"]).status.code(), Some(2));
    assert_eq!(glnchar(&["jordan", "/nonexistent/m.json"]).status.code(), Some(2));
    assert_eq!(glnchar(&["--help"]).status.code(), Some(0));
}

#[test]
fn resource_limits() {
    assert_eq!(glnchar(&["table", "3", "4"]).status.code(), Some(3));
}

#[test]
fn tables_and_characters() {
    let o = glnchar(&["table", "2", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 4);
    assert!(out.starts_with("character,"));

    let o = glnchar(&["--format", "json", "table", "2", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["characters"].as_array().unwrap().len(), 8);

    let o = glnchar(&["--format", "json", "dlchar", "2", "3", "1"]);
    assert_eq!(o.status.code(), Some(0));
    serde_json::from_str::<serde_json::Value>(&stdout(&o)).unwrap();

    let o = glnchar(&["series", "2", "3", "1", "1"]);
    assert_eq!(
        stdout(&o),
        "sigma,\"pi(2)\",\"pi(1,1)\"\n\"sigma(2)\",1,1\n\"sigma(1,1)\",0,1\n"
    );
    assert_eq!(glnchar(&["series", "2", "3", "2", "4"]).status.code(), Some(2));
}

#[test]
fn transfer_commands() {
    let o = glnchar(&["jlp", "2", "3", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 7);
    let o = glnchar(&["jlell", "2", "5", "3", "1", "17"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("true,true"));
    let o = glnchar(&["--format", "json", "compare", "2", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let verdicts = v.as_array().unwrap();
    assert_eq!(verdicts.len(), 8);
    assert!(verdicts.iter().all(|x| x["pass"] == serde_json::json!(true)));
    let o = glnchar(&["serre", "2", "5", "1"]);
    assert!(stdout(&o).contains("20 weights, 20 semisimple classes"));
    let o = glnchar(&["kostka", "3"]);
    assert!(stdout(&o).contains("\"(2,1)\",0,1,2"));
}

#[test]
fn jordan_reads_a_file_and_writes_output() {
    let dir = std::env::temp_dir().join(format!("glnchar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("m.json");
    std::fs::write(&input, r#"{"p": 2, "matrix": [[0,1,0,0],[0,0,0,0],[0,0,0,1],[0,0,0,0]]}"#).unwrap();
    let out = dir.join("out.txt");
    let o = glnchar(&["--output", out.to_str().unwrap(), "jordan", input.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap().trim(), "(2,2)");
    std::fs::remove_dir_all(&dir).unwrap();
}
