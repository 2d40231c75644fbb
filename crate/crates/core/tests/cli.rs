use etale_core::workbench::parse_document;
use std::path::Path;
use std::process::{Command, Output};

fn workbench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_etale-workbench"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_owned()
}

fn fixtures() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let out = workbench(&["corpus", "write", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    dir
}

#[test]
fn commands_and_exit_codes() {
    let dir = fixtures();
    let d = dir.path();

    let out = workbench(&["roundtrip", &path(d, "pair2.cat")]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains(": ok"));

    let out = workbench(&["validate", &path(d, "m3-lattice.frame")]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("frame.distributive"));

    let out = workbench(&["adjoint", &path(d, "empty.cat"), &path(d, "trivial.rqf")]);
    assert_eq!(code(&out), 0);

    let out = workbench(&["crm", &path(d, "pi-pair2.crm")]);
    assert_eq!(code(&out), 0);

    let out = workbench(&["validate", &path(d, "missing.cat")]);
    assert_eq!(code(&out), 2);

    let bad = d.join("broken.json");
    std::fs::write(&bad, "{\"kind\": \"poset\", \"size\": }").unwrap();
    assert_eq!(code(&workbench(&["validate", bad.to_str().unwrap()])), 2);

    let out = workbench(&["--max-elements", "4", "cpoints", &path(d, "omega-pair2.rqf")]);
    assert_eq!(code(&out), 3);

    assert_eq!(code(&workbench(&["frobnicate"])), 4);
    assert_eq!(code(&workbench(&["--help"])), 0);
}

#[test]
fn omega_then_cpoints_through_files() {
    let dir = fixtures();
    let d = dir.path();
    let om = path(d, "om.rqf");
    let out = workbench(&["omega", &path(d, "pair2.cat"), "-o", &om]);
    assert_eq!(code(&out), 0);
    let read = |p: &Path| parse_document(&std::fs::read_to_string(p).unwrap()).unwrap();
    assert_eq!(read(Path::new(&om)).body, read(&d.join("omega-pair2.rqf")).body);
    let pts = path(d, "pts.cat");
    assert_eq!(code(&workbench(&["cpoints", &om, "-o", &pts])), 0);
    assert_eq!(code(&workbench(&["roundtrip", &pts])), 0);
    let out = workbench(&["--format", "json", "validate", &pts]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["ok"], true);
}

#[test]
fn corpus_run_over_fixture_directory_is_stable() {
    let dir = fixtures();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_etale-workbench"))
            .args(["--format", "json", "corpus", "run"])
            .env("WORKBENCH_CORPUS_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    assert_eq!(code(&first), 0, "{}", String::from_utf8_lossy(&first.stderr));
    let second = run();
    assert_eq!(first.stdout, second.stdout);
}
