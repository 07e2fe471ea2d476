use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgedepth"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn fixtures() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "p3.json", r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
    write(dir.path(), "p5.json", r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4]]}"#);
    write(dir.path(), "c5.json", r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[3,4],[0,4]]}"#);
    write(dir.path(), "k3.txt", "3 3\n0 1\n0 2\n1 2\n");
    write(dir.path(), "loop.json", r#"{"n":2,"edges":[[0,0]]}"#);
    dir
}

#[test]
fn computations_print_expected_values() {
    let d = fixtures();
    let o = run(&["symbolic-power", "p3.json", "-s", "2"], d.path());
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(x1^2*x2^2, x1*x2^2*x3, x2^2*x3^2)\n");

    let o = run(&["alpha2", "p5.json"], d.path());
    assert_eq!(stdout(&o), "2  witness: {0,3}\n");

    assert_eq!(stdout(&run(&["edge-ideal", "k3.txt"], d.path())), "(x1*x2, x1*x3, x2*x3)\n");
    assert_eq!(stdout(&run(&["covers", "p3.json"], d.path())), "{1}\n{0,2}\n");
    assert_eq!(stdout(&run(&["depth", "--graph", "c5.json"], d.path())), "2\n");
    assert_eq!(stdout(&run(&["depth", "--graph", "p3.json"], d.path())), "1\n");
    assert_eq!(
        stdout(&run(&["depth", "--graph", "p5.json", "--symbolic", "2", "--char", "2"], d.path())),
        stdout(&run(&["depth", "--graph", "p5.json", "--power", "2"], d.path()))
    );
    assert!(stdout(&run(&["chordal", "c5.json"], d.path())).starts_with("not chordal"));
    assert!(stdout(&run(&["chordal", "p5.json"], d.path())).starts_with("chordal"));
}

#[test]
fn depth_of_ideal_files() {
    let d = fixtures();
    write(d.path(), "i.txt", "(x1*x2, x2*x3)\n");
    write(d.path(), "i.json", r#"{"n":4,"generators":["x1*x2","x2*x3"]}"#);
    assert_eq!(stdout(&run(&["depth", "--ideal", "i.txt"], d.path())), "1\n");
    assert_eq!(stdout(&run(&["depth", "--ideal", "i.txt", "--vars", "5"], d.path())), "3\n");
    assert_eq!(stdout(&run(&["depth", "--ideal", "i.json"], d.path())), "2\n");
    let o = run(&["depth", "--ideal", "i.txt", "--betti"], d.path());
    assert!(stdout(&o).starts_with(r#"{"n":3,"entries":[{"i":0,"b":[0,0,0],"rank":1}"#));
}

#[test]
fn verify_reports_one_line() {
    let d = fixtures();
    let o = run(&["verify", "--theorem", "thm42", "--graph", "c5.json"], d.path());
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o);
    assert!(line.contains("alpha2=1") && line.contains("bound=0") && line.contains("verdict=holds"), "{}", line);

    let o = run(&["verify", "--theorem", "cor22", "--graph", "p3.json"], d.path());
    assert!(stdout(&o).contains("slack=0"));
    let o = run(&["verify", "--theorem", "lem41", "--graph", "k3.txt", "--edge", "0,1", "-s", "2"], d.path());
    assert!(stdout(&o).contains("verdict=holds"));
    let o = run(&["verify", "--theorem", "forest", "--graph", "p5.json", "-s", "3"], d.path());
    assert!(stdout(&o).contains("verdict=holds"));
    write(d.path(), "h.json", r#"{"n":3,"edges":[[0,1]]}"#);
    write(d.path(), "hp.json", r#"{"n":3,"edges":[[1,2]]}"#);
    let o = run(&["verify", "--theorem", "prop33", "--h", "h.json", "--h-prime", "hp.json", "-s", "2"], d.path());
    assert!(stdout(&o).contains("bound=0"), "{}", stdout(&o));
    let o = run(&["verify", "--theorem", "lem31", "--graph", "p5.json", "--w", "2", "--a", "1,2,3"], d.path());
    assert!(stdout(&o).contains("alpha2=2 alpha2_after=2 bound=1"), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    let d = fixtures();
    let code = |args: &[&str]| run(args, d.path()).status.code();
    assert_eq!(code(&["frobnicate"]), Some(1));
    assert_eq!(code(&["alpha2"]), Some(1));
    assert_eq!(code(&["depth", "--graph", "p3.json", "--bogus"]), Some(1));
    assert_eq!(code(&["alpha2", "missing.json"]), Some(1));
    assert_eq!(code(&["alpha2", "loop.json"]), Some(1));
    // Non-chordal input violates the hypothesis of the chordal check.
    assert_eq!(code(&["verify", "--theorem", "thm34", "--graph", "c5.json", "-s", "3"]), Some(1));
    assert_eq!(code(&["verify", "--theorem", "lem31", "--graph", "p5.json", "--w", "2", "--a", "0"]), Some(1));
    assert_eq!(code(&["--help"]), Some(0));

    let o = run(&["alpha2", "loop.json"], d.path());
    assert!(String::from_utf8_lossy(&o.stderr).contains("self-loop"));
}

#[test]
fn experiment_writes_reproducible_outputs() {
    let d = fixtures();
    let cfg = r#"{"suite":"thm34","family":{"kind":"random_chordal"},"n":{"min":2,"max":6},
        "s":{"min":1,"max":3},"count":25,"seed":11,"cross_check":true,
        "outputs":{"csv":"out.csv","json":"out.json"}}"#;
    write(d.path(), "cfg.json", cfg);
    let o = run(&["experiment", "--config", "cfg.json"], d.path());
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let first = fs::read(d.path().join("out.csv")).unwrap();
    let json_first = fs::read(d.path().join("out.json")).unwrap();
    let o = run(&["experiment", "--config", "cfg.json"], d.path());
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read(d.path().join("out.csv")).unwrap(), first);
    assert_eq!(fs::read(d.path().join("out.json")).unwrap(), json_first);

    let text = String::from_utf8(first).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("id,n,edges,chordal,s,alpha2,depth,bound,slack,verdict,char,ms"));
    assert_eq!(lines.count(), 75);

    write(d.path(), "bad.json", r#"{"suite":"thm34","family":{"kind":"random_chordal"},"n":{"min":1,"max":20},"seed":1}"#);
    assert_eq!(run(&["experiment", "--config", "bad.json"], d.path()).status.code(), Some(1));
}
