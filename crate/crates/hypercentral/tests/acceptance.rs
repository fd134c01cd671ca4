//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (visible with `cargo test --test acceptance -- --nocapture`).

use std::process::Command;

use hypercentral::catalog::Catalog;
use hypercentral::fileio::{parse_cayley_str, write_cayley_str};
use hypercentral::morphisms::automorphism_group;
use hypercentral::report::ReportDocument;
use hypercentral::series::upper_central_series;
use hypercentral::sweeps::{run_check, SweepOptions};
use hypercentral::theorems::bounds::{bound_f, bound_g, bound_kos};
use hypercentral::theorems::example::verify_example;
use hypercentral::theorems::Verdict;

fn conclude(n: usize, name: &str, problems: Vec<String>) {
    let status = if problems.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {n} ({name}): {status}");
    assert!(problems.is_empty(), "criterion {n} failed: {problems:?}");
}

fn opts() -> SweepOptions {
    SweepOptions { max_order: 64 }
}

#[test]
fn criterion_1_theorem1_sweep_with_equality_case() {
    let catalog = Catalog::standard();
    let reports = run_check("theorem1", &catalog, opts()).expect("sweep runs");
    let mut problems = Vec::new();
    if reports.is_empty() {
        problems.push("no instances generated".to_string());
    }
    for r in &reports {
        if r.verdict != Verdict::Holds {
            problems.push(format!("{} does not hold", r.group_name));
        }
    }
    // the S3 with L = S3 instance must be present with 6 = 6
    let equality = reports.iter().any(|r| {
        r.group_name.starts_with("S3|")
            && r.int_quantity("l_order") == Some(6)
            && r.int_quantity("lhs_index") == Some(6)
            && r.int_quantity("rhs_bound") == Some(6)
    });
    if !equality {
        problems.push("missing the S3 equality case".to_string());
    }
    println!("  theorem1 instances: {}", reports.len());
    conclude(1, "theorem 1 sweep", problems);
}

#[test]
fn criterion_2_kos_sweep() {
    let catalog = Catalog::standard();
    let reports = run_check("kos", &catalog, opts()).expect("sweep runs");
    let mut problems = Vec::new();
    for r in &reports {
        if r.verdict != Verdict::Holds {
            problems.push(format!("{} does not hold", r.group_name));
        }
    }
    if reports.len() < 400 {
        problems.push(format!("only {} instances", reports.len()));
    }
    conclude(2, "minimal witness within the explicit bound", problems);
}

#[test]
fn criterion_3_corollary2_sweep() {
    let catalog = Catalog::standard();
    let reports = run_check("corollary2", &catalog, opts()).expect("sweep runs");
    let mut problems = Vec::new();
    for r in &reports {
        if r.verdict != Verdict::Holds {
            problems.push(format!("{} does not hold", r.group_name));
        }
    }
    if reports.is_empty() {
        problems.push("no instances generated".to_string());
    }
    println!("  corollary2 instances: {}", reports.len());
    conclude(3, "series stabilizes within d + m steps", problems);
}

#[test]
fn criterion_4_claim_star_sweep() {
    let catalog = Catalog::standard();
    let reports = run_check("claim_star", &catalog, opts()).expect("sweep runs");
    let mut problems = Vec::new();
    for r in &reports {
        if r.verdict != Verdict::Holds {
            problems.push(format!("{} does not hold", r.group_name));
        }
    }
    // both action branches must be exercised
    if !reports.iter().any(|r| r.group_name.ends_with("|A=aut")) {
        problems.push("no full-automorphism branch ran".to_string());
    }
    // the largest holomorph subgroups reach the cap exactly (D64 gives 2048)
    let max_s = reports
        .iter()
        .filter_map(|r| r.int_quantity("s_order"))
        .max()
        .unwrap_or(0);
    if max_s < 2048 {
        problems.push(format!("largest S has order {max_s}, expected 2048"));
    }
    println!("  claim_star instances: {}", reports.len());
    conclude(4, "central products stay inside the centers of S", problems);
}

#[test]
fn criterion_5_coprime_sweep() {
    let catalog = Catalog::standard();
    let reports = run_check("coprime", &catalog, opts()).expect("sweep runs");
    let mut problems = Vec::new();
    let mut tested = 0;
    for r in &reports {
        match r.verdict {
            Verdict::Holds => tested += 1,
            Verdict::Fails => problems.push(format!("{} fails", r.group_name)),
            Verdict::PremisesUnmet => {} // non-coprime pairs are recorded, not tested
        }
    }
    if tested < 50 {
        problems.push(format!("only {tested} coprime pairs tested"));
    }
    println!("  coprime pairs tested: {tested}");
    conclude(5, "coprime action splits abelian groups", problems);
}

#[test]
fn criterion_6_example_family() {
    let mut problems = Vec::new();
    for (p, n) in [(3u64, 1usize), (3, 2), (5, 1)] {
        match verify_example(p, n) {
            Ok(r) if r.holds() => {}
            Ok(r) => problems.push(format!("({p},{n}) verdict {:?}", r.verdict)),
            Err(e) => problems.push(format!("({p},{n}) error {e}")),
        }
    }
    conclude(6, "example family resists hypercentral quotients", problems);
}

#[test]
fn criterion_7_bound_functions() {
    let mut problems = Vec::new();
    let expect = [
        ("g(2)", bound_g(2).unwrap().ceil, 4u128),
        ("g(4)", bound_g(4).unwrap().ceil, 64),
        ("kos(2)", bound_kos(2).unwrap().ceil, 2),
        ("kos(4)", bound_kos(4).unwrap().ceil, 8),
        ("f(1)", bound_f(1).unwrap().ceil, 1),
        ("f(2)", bound_f(2).unwrap().ceil, 2),
        ("f(3)", bound_f(3).unwrap().ceil, 192),
    ];
    for (label, got, want) in expect {
        if got != want {
            problems.push(format!("{label} = {got}, expected {want}"));
        }
    }
    let mut prev_g = bound_g(1).unwrap().raw;
    let mut prev_kos = bound_kos(1).unwrap().raw;
    for t in 2..=1024 {
        let g = bound_g(t).unwrap();
        let kos = bound_kos(t).unwrap();
        if g.raw <= prev_g {
            problems.push(format!("g not strictly increasing at {t}"));
        }
        if kos.raw <= prev_kos {
            problems.push(format!("kos not strictly increasing at {t}"));
        }
        if kos.raw > g.raw {
            problems.push(format!("kos exceeds g at {t}"));
        }
        prev_g = g.raw;
        prev_kos = kos.raw;
    }
    conclude(7, "bound functions", problems);
}

#[test]
fn criterion_8_oracle_equivalences() {
    let mut problems = Vec::new();
    let catalog = Catalog::standard();
    let expect_aut = [("S3", 6usize), ("Q8", 24), ("D8", 8), ("C2^3", 168)];
    for (name, want) in expect_aut {
        let g = catalog.find(name).unwrap().build().unwrap();
        let got = automorphism_group(&g).unwrap().order();
        if got != want {
            problems.push(format!("|Aut({name})| = {got}, expected {want}"));
        }
    }
    // independent oracle for the last: invertible 3x3 matrices over F2
    let mut invertible = 0u32;
    for mask in 0u32..512 {
        let mut rows: Vec<u32> = (0..3).map(|r| (mask >> (3 * r)) & 7).collect();
        let mut rank = 0;
        for col in 0..3 {
            if let Some(p) = (rank..3).find(|&r| rows[r] >> col & 1 == 1) {
                rows.swap(rank, p);
                for r in 0..3 {
                    if r != rank && rows[r] >> col & 1 == 1 {
                        rows[r] ^= rows[rank];
                    }
                }
                rank += 1;
            }
        }
        if rank == 3 {
            invertible += 1;
        }
    }
    if invertible != 168 {
        problems.push(format!("matrix-count oracle says {invertible}"));
    }
    for (name, want_steps) in [("D8", 2usize), ("D16", 3)] {
        let g = catalog.find(name).unwrap().build().unwrap();
        let s = upper_central_series(&g);
        if !s.reaches_group() || s.steps() != want_steps {
            problems.push(format!(
                "upper central series of {name} has {} steps, expected {want_steps}",
                s.steps()
            ));
        }
    }
    conclude(8, "automorphism and series oracles", problems);
}

#[test]
fn criterion_9_infrastructure() {
    let mut problems = Vec::new();
    let catalog = Catalog::standard();

    // Cayley round-trip identity over the full catalog
    for entry in catalog.entries() {
        let g = entry.build().expect("catalog entries build");
        let text = write_cayley_str(&g);
        match parse_cayley_str(&text) {
            Ok(back) => {
                if &*back != &*g || back.name() != g.name() || back.identity() != g.identity() {
                    problems.push(format!("round trip differs for {}", entry.name));
                }
            }
            Err(e) => problems.push(format!("round trip fails for {}: {e}", entry.name)),
        }
    }

    // deterministic report bodies across two runs (timestamp excluded)
    let reports1 = run_check("kos", &catalog, SweepOptions { max_order: 32 }).unwrap();
    let reports2 = run_check("kos", &catalog, SweepOptions { max_order: 32 }).unwrap();
    let doc1 = ReportDocument::new(reports1).without_timestamp();
    let doc2 = ReportDocument::new(reports2).without_timestamp();
    if doc1.to_json() != doc2.to_json() {
        problems.push("sweep reports differ between runs".to_string());
    }
    if doc1.to_csv() != doc2.to_csv() {
        problems.push("csv reports differ between runs".to_string());
    }

    // CLI exit-code contract on crafted fixtures
    let bin = env!("CARGO_BIN_EXE_hypercentral");
    let code = |args: &[&str]| {
        Command::new(bin)
            .args(args)
            .output()
            .expect("binary runs")
            .status
            .code()
            .unwrap_or(-1)
    };
    // passing fixture
    if code(&["verify", "theorem1", "--group", "S3"]) != 0 {
        problems.push("passing fixture did not exit 0".to_string());
    }
    // failing fixture: conjugation does not stabilize 1 < A3 < S3
    let s3 = catalog.find("S3").unwrap().build().unwrap();
    let three_cycle = s3
        .elements()
        .find(|&x| s3.element_order(x) == 3)
        .unwrap()
        .to_string();
    let chain = format!("e;{three_cycle};all");
    if code(&["verify", "stabilized", "--group", "S3", "--chain", &chain]) != 1 {
        problems.push("failing fixture did not exit 1".to_string());
    }
    // premises-unmet-only fixture under strict mode
    if code(&["verify", "coprime", "--group", "C4", "--strict-premises"]) != 3 {
        problems.push("premises-unmet fixture did not exit 3".to_string());
    }
    conclude(9, "round-trip, determinism, exit codes", problems);
}
