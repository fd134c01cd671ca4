//! Command-line driver: group inspection, series display, automorphism
//! counts, bound evaluation, and the verification sweeps.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hypercentral::catalog::Catalog;
use hypercentral::error::Error;
use hypercentral::group::{Group, SubgroupRef};
use hypercentral::morphisms::{automorphism_group, automorphism_order, inner_automorphisms};
use hypercentral::report::ReportDocument;
use hypercentral::series::{a_center_series, nilpotency_class, stabilizes_series, upper_central_series};
use hypercentral::sweeps::{run_all, run_check, SweepOptions, CHECK_NAMES};
use hypercentral::theorems::bounds::{bound_f, bound_g, bound_kos};
use hypercentral::theorems::checks::{
    coprime_decomposition, search_kos_witness, verify_claim_star, verify_theorem1,
};
use hypercentral::theorems::example::verify_example;
use hypercentral::theorems::CheckReport;
use hypercentral::{generated_subgroup, Quantity};

#[derive(Parser)]
#[command(
    name = "hypercentral",
    version,
    about = "Finite-group central series toolkit and verification harness"
)]
struct Cli {
    /// Write the report document as JSON to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Write the report document as CSV to this path.
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,

    /// Exit 3 when premises-unmet results are the only outcomes.
    #[arg(long, global = true)]
    strict_premises: bool,

    /// Sweep catalog entries only up to this order.
    #[arg(long, global = true, value_name = "N")]
    max_order: Option<usize>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct Target {
    /// A catalog entry by name (see `catalog`).
    #[arg(long)]
    group: Option<String>,

    /// A Cayley table file.
    #[arg(long)]
    file: Option<PathBuf>,

    /// A permutation generator file.
    #[arg(long)]
    perm: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Order, center, nilpotency class, and automorphism count of a group.
    Info {
        #[command(flatten)]
        target: Target,
    },
    /// The central series of a group under the chosen action.
    Series {
        #[command(flatten)]
        target: Target,
        /// inn (default) or aut
        #[arg(long, default_value = "inn")]
        action: String,
    },
    /// Automorphism group summary.
    Aut {
        #[command(flatten)]
        target: Target,
    },
    /// Run one verification check (or `all`) over the catalog or a group.
    Verify {
        /// One of the named checks, `stabilized`, or `all`.
        check: String,
        /// Sweep the whole standard catalog (default when no target given).
        #[arg(long)]
        catalog: bool,
        #[command(flatten)]
        target: Target,
        /// For `stabilized`: semicolon-separated chain, each term `e`,
        /// `all`, or generator indices (`e;3;all`).
        #[arg(long)]
        chain: Option<String>,
        /// For `stabilized` and `claim_star` on a single group: inn or aut.
        #[arg(long, default_value = "inn")]
        action: String,
    },
    /// Build and verify one example-family truncation.
    Example {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
    },
    /// Evaluate the bound functions at t.
    Bounds {
        #[arg(long)]
        t: u64,
    },
    /// List the standard catalog.
    Catalog,
}

fn resolve_target(target: &Target, catalog: &Catalog) -> Result<Group, String> {
    match (&target.group, &target.file, &target.perm) {
        (Some(name), None, None) => catalog
            .find(name)
            .ok_or_else(|| format!("no catalog entry named {name}"))?
            .build()
            .map_err(|e| e.to_string()),
        (None, Some(path), None) => {
            hypercentral::fileio::parse_cayley_file(path).map_err(|e| e.to_string())
        }
        (None, None, Some(path)) => {
            hypercentral::fileio::parse_permutation_file(path).map_err(|e| e.to_string())
        }
        _ => Err("specify exactly one of --group, --file, --perm".to_string()),
    }
}

fn emit(doc: &ReportDocument, cli: &Cli) -> std::io::Result<()> {
    if let Some(path) = &cli.json {
        std::fs::write(path, doc.to_json())?;
    }
    if let Some(path) = &cli.csv {
        std::fs::write(path, doc.to_csv())?;
    }
    Ok(())
}

fn finish_with_reports(reports: Vec<CheckReport>, cli: &Cli) -> ExitCode {
    let doc = ReportDocument::new(reports);
    for r in &doc.reports {
        let verdict = match r.verdict {
            hypercentral::Verdict::Holds => "holds",
            hypercentral::Verdict::Fails => "FAILS",
            hypercentral::Verdict::PremisesUnmet => "premises unmet",
        };
        println!("{:<12} {:<28} {}", r.check_name, r.group_name, verdict);
    }
    println!(
        "summary: {} holds, {} fails, {} premises unmet",
        doc.summary.holds, doc.summary.fails, doc.summary.premises_unmet
    );
    if let Err(e) = emit(&doc, cli) {
        eprintln!("error writing reports: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(doc.exit_code(cli.strict_premises) as u8)
}

fn parse_chain(spec: &str, g: &Group) -> Result<Vec<SubgroupRef>, String> {
    let mut terms = Vec::new();
    for part in spec.split(';') {
        let part = part.trim();
        let term = match part {
            "e" | "1" => SubgroupRef::trivial(g),
            "all" => SubgroupRef::whole(g),
            _ => {
                let gens: Result<Vec<usize>, _> = part
                    .split([' ', ','])
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<usize>())
                    .collect();
                let gens = gens.map_err(|_| format!("bad chain term {part:?}"))?;
                if gens.iter().any(|&x| x >= g.order()) {
                    return Err(format!("chain term {part:?} has out-of-range indices"));
                }
                generated_subgroup(g, &gens)
            }
        };
        terms.push(term);
    }
    Ok(terms)
}

fn pick_action(
    g: &Group,
    which: &str,
) -> Result<hypercentral::AutSubgroup, String> {
    match which {
        "inn" => Ok(inner_automorphisms(g).0),
        "aut" => automorphism_group(g).map_err(|e| e.to_string()),
        other => Err(format!("unknown action {other:?}; use inn or aut")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let catalog = Catalog::standard();
    let opts = SweepOptions {
        max_order: cli.max_order.unwrap_or(64),
    };

    match &cli.cmd {
        Cmd::Info { target } => {
            let g = match resolve_target(target, &catalog) {
                Ok(g) => g,
                Err(e) => return usage_error(&e),
            };
            println!("name:            {}", g.name());
            println!("order:           {}", g.order());
            println!("abelian:         {}", g.is_abelian());
            println!("center order:    {}", hypercentral::center(&g).order());
            match nilpotency_class(&g) {
                Some(c) => println!("nilpotency class: {c}"),
                None => println!("nilpotency class: - (not nilpotent)"),
            }
            match automorphism_order(&g) {
                Ok(n) => println!("|Aut|:           {n}"),
                Err(e) => println!("|Aut|:           unavailable ({e})"),
            }
            ExitCode::SUCCESS
        }
        Cmd::Series { target, action } => {
            let g = match resolve_target(target, &catalog) {
                Ok(g) => g,
                Err(e) => return usage_error(&e),
            };
            let series = if action == "inn" {
                upper_central_series(&g)
            } else {
                let a = match pick_action(&g, action) {
                    Ok(a) => a,
                    Err(e) => return usage_error(&e),
                };
                a_center_series(&g, &a)
            };
            for (i, term) in series.terms().iter().enumerate() {
                println!("Z_{i}: order {} (index {})", term.order(), term.index_in_parent());
            }
            if series.reaches_group() {
                println!("reaches the group: type {}", series.steps());
            } else {
                println!(
                    "stabilizes below the group at index {}",
                    series.hypercenter().index_in_parent()
                );
            }
            ExitCode::SUCCESS
        }
        Cmd::Aut { target } => {
            let g = match resolve_target(target, &catalog) {
                Ok(g) => g,
                Err(e) => return usage_error(&e),
            };
            match automorphism_order(&g) {
                Ok(n) => println!("|Aut({})| = {n}", g.name()),
                Err(e) => {
                    eprintln!("automorphism count unavailable: {e}");
                    return ExitCode::from(2);
                }
            }
            if let Ok(aut) = automorphism_group(&g) {
                let (inn, _) = inner_automorphisms(&g);
                println!("generators: {}", aut.generator_indices().len());
                println!("inner: {} of {}", inn.order(), aut.order());
            }
            ExitCode::SUCCESS
        }
        Cmd::Verify {
            check,
            catalog: sweep_catalog,
            target,
            chain,
            action,
        } => {
            let single_target =
                target.group.is_some() || target.file.is_some() || target.perm.is_some();
            if check == "stabilized" {
                let g = match resolve_target(target, &catalog) {
                    Ok(g) => g,
                    Err(e) => return usage_error(&e),
                };
                let Some(spec) = chain else {
                    return usage_error("stabilized needs --chain");
                };
                let terms = match parse_chain(spec, &g) {
                    Ok(t) => t,
                    Err(e) => return usage_error(&e),
                };
                let a = match pick_action(&g, action) {
                    Ok(a) => a,
                    Err(e) => return usage_error(&e),
                };
                let report = match stabilizes_series(&a, &terms) {
                    Ok(stable) => {
                        let mut q = std::collections::BTreeMap::new();
                        q.insert("terms".to_string(), Quantity::Int(terms.len() as i64));
                        CheckReport::concluded("stabilized", g.name(), stable, q, None)
                    }
                    Err(e) => {
                        CheckReport::premises_unmet("stabilized", g.name(), &e.to_string())
                    }
                };
                return finish_with_reports(vec![report], &cli);
            }
            if single_target {
                let g = match resolve_target(target, &catalog) {
                    Ok(g) => g,
                    Err(e) => return usage_error(&e),
                };
                match single_group_check(check, &g, target, &catalog, action) {
                    Ok(reports) => finish_with_reports(reports, &cli),
                    Err(e) => usage_error(&e),
                }
            } else {
                let _ = sweep_catalog;
                let result = if check == "all" {
                    run_all(&catalog, opts)
                } else if CHECK_NAMES.contains(&check.as_str()) {
                    run_check(check, &catalog, opts)
                } else {
                    return usage_error(&format!(
                        "unknown check {check:?}; one of {CHECK_NAMES:?}, stabilized, all"
                    ));
                };
                match result {
                    Ok(reports) => finish_with_reports(reports, &cli),
                    Err(e) => {
                        eprintln!("sweep failed: {e}");
                        ExitCode::from(2)
                    }
                }
            }
        }
        Cmd::Example { p, n } => match verify_example(*p, *n) {
            Ok(report) => finish_with_reports(vec![report], &cli),
            Err(e) => usage_error(&e.to_string()),
        },
        Cmd::Bounds { t } => {
            if *t < 1 {
                return usage_error("t must be at least 1");
            }
            match (bound_g(*t), bound_kos(*t)) {
                (Ok(g), Ok(kos)) => {
                    println!("g({t})   = {} (ceil {})", g.raw, g.ceil);
                    println!("kos({t}) = {} (ceil {})", kos.raw, kos.ceil);
                }
                (g, kos) => {
                    if let Err(e) = g {
                        println!("g({t})   = overflow ({e})");
                    }
                    if let Err(e) = kos {
                        println!("kos({t}) = overflow ({e})");
                    }
                }
            }
            match bound_f(*t) {
                Ok(f) => println!("f({t})   = {}", f.ceil),
                Err(Error::Overflow { t: at }) => {
                    println!("f({t})   = overflow (recursion exceeds the representable range at t = {at})")
                }
                Err(e) => println!("f({t})   = error ({e})"),
            }
            ExitCode::SUCCESS
        }
        Cmd::Catalog => {
            for entry in catalog.entries() {
                println!(
                    "{:<16} order {}",
                    entry.name,
                    entry
                        .order()
                        .map_or_else(|| "?".to_string(), |o| o.to_string())
                );
            }
            ExitCode::SUCCESS
        }
    }
}

/// Single-group variants of the sweepable checks.
fn single_group_check(
    check: &str,
    g: &Group,
    target: &Target,
    catalog: &Catalog,
    action: &str,
) -> Result<Vec<CheckReport>, String> {
    let mut out = Vec::new();
    match check {
        "theorem1" => {
            let normals = g.normal_subgroups().map_err(|e| e.to_string())?.to_vec();
            for (i, elems) in normals.iter().enumerate() {
                let l = SubgroupRef::new(g, elems).map_err(|e| e.to_string())?;
                let report = verify_theorem1(g, &l).map_err(|e| e.to_string())?;
                if report.premises_ok {
                    out.push(report.rename_group(&format!("{}|N{i:03}", g.name())));
                }
            }
        }
        "kos" => out.push(search_kos_witness(g).map_err(|e| e.to_string())?),
        "claim_star" => {
            let a = pick_action(g, action)?;
            out.push(verify_claim_star(g, &a).map_err(|e| e.to_string())?);
        }
        "coprime" => {
            // stored actions exist only for catalog entries
            let entry = target
                .group
                .as_ref()
                .and_then(|name| catalog.find(name))
                .ok_or("coprime needs a catalog entry with stored actions")?;
            for (label, q) in entry.stored_actions(g) {
                let report = coprime_decomposition(g, &q).map_err(|e| e.to_string())?;
                out.push(report.rename_group(&format!("{}|Q={label}", g.name())));
            }
        }
        other => {
            return Err(format!(
                "check {other:?} has no single-group form; run it as a catalog sweep"
            ))
        }
    }
    Ok(out)
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}
