use std::fs;
use std::path::{Path, PathBuf};

use hampreserve_core::connectivity::{kappa as kappa_of, min_vertex_cut};
use hampreserve_core::experiments::{expand_suite_name, run_suite, SUITES};
use hampreserve_core::instances::{Family, InstanceSpec};
use hampreserve_core::io::{parse_graph, write_edge_list};
use hampreserve_core::oracle::{verify_certificate, VerificationReport};
use hampreserve_core::pairs::{decompose_into_pairs, max_edge_disjoint_pairs, EdgePair};
use hampreserve_core::preserve::{preserve_exact, preserve_many, preserve_many_high_degree, preserve_one};
use hampreserve_core::{Error, Graph, PreserveCertificate};

use crate::{GenArgs, Outcome, PreserveArgs};

fn read_graph(path: &Path) -> Result<Graph, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_graph(&text)
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    fs::write(path, text + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn outcome(verified: bool, summary: String, input: Option<&Path>, outputs: Vec<PathBuf>) -> Outcome {
    Outcome { verified, summary, input: input.map(Path::to_path_buf), outputs, seed: None }
}

pub fn kappa(input: &Path, cut: bool) -> Result<Outcome, Error> {
    let g = read_graph(input)?;
    let k = kappa_of(&g)?;
    println!("kappa {k}");
    if cut {
        match min_vertex_cut(&g) {
            Ok(c) => {
                let w: Vec<String> = c.cut.iter().map(|v| v.to_string()).collect();
                println!("cut {}", w.join(" "));
                println!("sides {} {}", c.side_a.count(), c.side_b.count());
            }
            Err(Error::NoCut) => println!("cut none (complete graph)"),
            Err(e) => return Err(e),
        }
    }
    Ok(outcome(true, format!("kappa {k}"), Some(input), vec![]))
}

fn print_pairs(pairs: &[EdgePair]) {
    for p in pairs {
        println!("{} {}", p.first(), p.second());
    }
}

pub fn pairs(input: &Path, max: bool) -> Result<Outcome, Error> {
    let g = read_graph(input)?;
    if max {
        match max_edge_disjoint_pairs(&g) {
            Ok(p) => {
                println!("max {}", p.len());
                print_pairs(&p);
                Ok(outcome(true, format!("max {}", p.len()), Some(input), vec![]))
            }
            Err(Error::Exceptional(name)) => {
                println!("exceptional: {name}");
                Ok(outcome(false, format!("exceptional: {name}"), Some(input), vec![]))
            }
            Err(e) => Err(e),
        }
    } else {
        match decompose_into_pairs(&g) {
            Ok(p) => {
                println!("pairs {}", p.len());
                print_pairs(&p);
                Ok(outcome(true, format!("pairs {}", p.len()), Some(input), vec![]))
            }
            Err(Error::Undecomposable(conds)) => {
                let why: Vec<String> = conds.iter().map(|c| c.to_string()).collect();
                println!("not decomposable: {}", why.join("; "));
                Ok(outcome(false, format!("not decomposable: {}", why.join("; ")), Some(input), vec![]))
            }
            Err(e) => Err(e),
        }
    }
}

fn print_report(report: &VerificationReport) {
    for c in &report.checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        match &c.witness {
            Some(w) => println!("{mark} {}: {} ({w:?})", c.name, c.detail),
            None => println!("{mark} {}: {}", c.name, c.detail),
        }
    }
    println!("verification {}", if report.passed() { "passed" } else { "failed" });
}

pub fn preserve(a: &PreserveArgs) -> Result<Outcome, Error> {
    let g = read_graph(&a.input)?;
    let cert = if a.exact {
        let cert = preserve_exact(&g, a.ell)?;
        if let Some(k) = a.k.filter(|&k| k != cert.k) {
            return Err(Error::Domain(format!("--k {k} differs from the connectivity {} of the input", cert.k)));
        }
        cert
    } else {
        let k = a.k.ok_or_else(|| Error::Domain("--k is required unless --exact is given".into()))?;
        if a.high_degree {
            preserve_many_high_degree(&g, k, a.ell)?
        } else if a.ell == 1 {
            preserve_one(&g, k)?
        } else {
            preserve_many(&g, k, a.ell)?
        }
    };
    println!("branch {:?}", cert.branch);
    println!("cycles {}", cert.cycles.len());
    println!("kappa before {} after {}", cert.kappa_before, cert.kappa_after);
    for w in &cert.warnings {
        println!("warning: {w}");
    }
    if a.verbose {
        for line in &cert.stage_log {
            println!("  | {line}");
        }
    } else if let Some(line) = cert.stage_log.iter().find(|l| l.starts_with("direct:")) {
        println!("  | {line}");
    }
    let mut outputs = Vec::new();
    if let Some(path) = &a.out {
        write_json(path, &cert)?;
        outputs.push(path.clone());
    }
    let report = verify_certificate(&g, &cert, cert.k, cert.exact)?;
    print_report(&report);
    if let Some(path) = &a.report {
        write_json(path, &report)?;
        outputs.push(path.clone());
    }
    let summary = format!(
        "{:?} branch, kappa {} -> {}, verification {}",
        cert.branch,
        cert.kappa_before,
        cert.kappa_after,
        if report.passed() { "passed" } else { "failed" }
    );
    Ok(outcome(report.passed(), summary, Some(&a.input), outputs))
}

pub fn verify(
    input: &Path,
    certificate: &Path,
    k: Option<usize>,
    exact: bool,
    report_path: Option<&Path>,
) -> Result<Outcome, Error> {
    let g = read_graph(input)?;
    let text = fs::read_to_string(certificate).map_err(|e| Error::Io(format!("{}: {e}", certificate.display())))?;
    let cert: PreserveCertificate =
        serde_json::from_str(&text).map_err(|e| Error::Domain(format!("{}: {e}", certificate.display())))?;
    let k = k.unwrap_or(cert.k);
    let report = verify_certificate(&g, &cert, k, exact || cert.exact)?;
    print_report(&report);
    let mut outputs = Vec::new();
    if let Some(path) = report_path {
        write_json(path, &report)?;
        outputs.push(path.to_path_buf());
    }
    let summary = format!("verification {}", if report.passed() { "passed" } else { "failed" });
    Ok(outcome(report.passed(), summary, Some(input), outputs))
}

pub fn gen(a: &GenArgs) -> Result<Outcome, Error> {
    let family: Family = a.family.parse()?;
    let spec = InstanceSpec { family, n: a.n, k: a.k, ell: a.ell, seed: a.seed, surplus: a.surplus };
    let g = spec.generate()?;
    let text = write_edge_list(&g, &[spec.header()]);
    let summary = format!("{} n={} m={} min degree {}", family, g.n(), g.edge_count(), g.min_degree());
    let mut outputs = Vec::new();
    match &a.out {
        Some(path) => {
            fs::write(path, &text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            eprintln!("wrote {}: {summary}", path.display());
            outputs.push(path.clone());
        }
        None => print!("{text}"),
    }
    Ok(Outcome { verified: true, summary, input: None, outputs, seed: Some(a.seed) })
}

pub fn experiment(
    names: &[String],
    trials: Option<usize>,
    seed: u64,
    jobs: Option<usize>,
    report_path: Option<&Path>,
) -> Result<Outcome, Error> {
    let suites: Vec<String> = names.iter().flat_map(|n| expand_suite_name(n)).collect();
    if let Some(bad) = suites.iter().find(|s| !SUITES.contains(&s.as_str())) {
        return Err(Error::Domain(format!("unknown suite '{bad}'; known: {}", SUITES.join(", "))));
    }
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let mut reports = Vec::new();
    for s in &suites {
        let r = run_suite(s, trials, seed, jobs)?;
        println!("{r}");
        for note in &r.notes {
            println!("    note: {note}");
        }
        for f in r.failures().take(5) {
            println!("    fail: {}: {}", f.label, f.detail);
        }
        reports.push(r);
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let mut outputs = Vec::new();
    if let Some(path) = report_path {
        write_json(path, &reports)?;
        outputs.push(path.to_path_buf());
    }
    let summary = format!("{} of {} suites passed", reports.len() - failed, reports.len());
    println!("{summary}");
    Ok(Outcome { verified: failed == 0, summary, input: None, outputs, seed: Some(seed) })
}
