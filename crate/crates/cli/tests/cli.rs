use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hampreserve"));
    c.env_remove("HAMPRESERVE_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

#[test]
fn kappa_of_a_cycle() {
    let d = TempDir::new().unwrap();
    let c6 = write(&d, "c6.txt", "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    let o = run(&["kappa", &c6]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "kappa 2");

    let dimacs = write(&d, "c4.col", "c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
    assert_eq!(stdout(&run(&["kappa", &dimacs])).trim(), "kappa 2");
}

#[test]
fn kappa_cut_of_a_barbell() {
    let d = TempDir::new().unwrap();
    let g = path(&d, "b.txt");
    assert_eq!(run(&["gen", "barbell", "--n", "24", "--k", "3", "--seed", "4", "--out", &g]).status.code(), Some(0));
    let o = run(&["kappa", &g, "--cut"]);
    let out = stdout(&o);
    assert!(out.contains("kappa 3"), "{out}");
    let cut = out.lines().find(|l| l.starts_with("cut ")).unwrap();
    assert_eq!(cut.split_whitespace().count(), 4);
}

#[test]
fn malformed_input_exits_two() {
    let d = TempDir::new().unwrap();
    let bad = write(&d, "bad.txt", "3 2\n0 1\n1 9\n");
    let o = run(&["kappa", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    assert_eq!(run(&["kappa", &path(&d, "missing.txt")]).status.code(), Some(2));
}

#[test]
fn pairs_commands() {
    let d = TempDir::new().unwrap();
    let c4 = write(&d, "c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let o = run(&["pairs", &c4, "--decompose"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pairs 2\n"));

    let star = write(&d, "star.txt", "5 4\n0 1\n0 2\n0 3\n0 4\n");
    let o = run(&["pairs", &star, "--max"]);
    assert_eq!(stdout(&o).trim(), "max 0");

    let k3 = write(&d, "k3.txt", "3 3\n0 1\n1 2\n0 2\n");
    let o = run(&["pairs", &k3, "--max"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "exceptional: K3 ∪ (n−3)K1");

    let o = run(&["pairs", &star, "--decompose"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not decomposable"));
}

fn complete(n: usize) -> String {
    let mut s = format!("{n} {}\n", n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            s += &format!("{u} {v}\n");
        }
    }
    s
}

#[test]
fn preserve_and_verify() {
    let d = TempDir::new().unwrap();
    let k7 = write(&d, "k7.txt", &complete(7));
    let cert = path(&d, "cert.json");
    let o = run(&["preserve", &k7, "--k", "2", "--out", &cert]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verification passed"));
    assert!(fs::read_to_string(&cert).unwrap().contains("preserve-cert/1"));

    let o = run(&["verify", &k7, &cert]);
    assert_eq!(o.status.code(), Some(0));
    // K7 minus a Hamiltonian cycle is 4-connected, not exactly 2.
    let o = run(&["verify", &k7, &cert, "--exact"]);
    assert_eq!(o.status.code(), Some(1));

    let k8 = write(&d, "k8.txt", &complete(8));
    let o = run(&["verify", &k8, &cert]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("certificate does not match"));
}

#[test]
fn preserve_barbells() {
    let d = TempDir::new().unwrap();
    let g = path(&d, "b40.txt");
    run(&["gen", "barbell", "--n", "40", "--k", "2", "--seed", "1", "--out", &g]);
    let o = run(&["preserve", &g, "--k", "2", "-v"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("| direct:"));

    let g = path(&d, "rich28.txt");
    run(&["gen", "barbell-rich", "--n", "28", "--k", "3", "--seed", "1", "--out", &g]);
    let o = run(&["preserve", &g, "--k", "3", "-v"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("branch Repair"));

    let g = path(&d, "b60.txt");
    run(&["gen", "barbell", "--n", "60", "--k", "3", "--seed", "2", "--out", &g]);
    let o = run(&["preserve", &g, "--exact", "--ell", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("kappa before 3 after 3"));
}

#[test]
fn preserve_reports_bound_violations() {
    let d = TempDir::new().unwrap();
    let c8 = write(&d, "c8.txt", "8 8\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 0\n");
    let o = run(&["preserve", &c8, "--k", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("minimum degree 2 is below n/2 = 4"));
    assert_eq!(run(&["preserve", &c8]).status.code(), Some(2));
}

#[test]
fn gen_families() {
    let d = TempDir::new().unwrap();
    let g = path(&d, "d.txt");
    assert_eq!(run(&["gen", "dirac", "--n", "50", "--seed", "1", "--out", &g]).status.code(), Some(0));
    let text = fs::read_to_string(&g).unwrap();
    assert!(text.starts_with("# instance family=dirac n=50 k=2 ell=1 seed=1 surplus=0\n50 "));

    let o = run(&["gen", "ch-tight", "--n", "9", "--k", "2"]);
    assert!(stdout(&o).contains("\n9 20\n"));
    assert_eq!(run(&["gen", "ch-tight", "--n", "10", "--k", "2"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "wheel", "--n", "10"]).status.code(), Some(2));
}

#[test]
fn seed_comes_from_environment() {
    let a = bin().args(["gen", "dirac", "--n", "20"]).env("HAMPRESERVE_SEED", "9").output().unwrap();
    let b = run(&["gen", "dirac", "--n", "20", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(stdout(&run(&["gen", "dirac", "--n", "20"])), stdout(&b));
}

#[test]
fn experiment_suites() {
    let o = run(&["experiment", "degree-tightness", "pairs-max", "--trials", "50", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("2 of 2 suites passed"));
    assert_eq!(run(&["experiment", "no-such-suite"]).status.code(), Some(2));
    let o = run(&["experiment", "n7-tightness", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn manifest_replay_reproduces_outputs() {
    let d = TempDir::new().unwrap();
    let g = path(&d, "g.txt");
    let m = path(&d, "run.json");
    let o = bin()
        .args(["gen", "barbell-rich", "--n", "30", "--k", "3", "--out", &g, "--manifest", &m])
        .env("HAMPRESERVE_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let first = fs::read(&g).unwrap();
    let manifest = fs::read_to_string(&m).unwrap();
    assert!(manifest.contains("\"subcommand\": \"gen\""));
    fs::remove_file(&g).unwrap();
    assert!(!Path::new(&g).exists());
    assert_eq!(run(&["replay", &m]).status.code(), Some(0));
    assert_eq!(fs::read(&g).unwrap(), first);
}
