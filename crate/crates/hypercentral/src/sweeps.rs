//! Sweep runner: instantiates every check over the catalog, in parallel,
//! with deterministic report ordering restored afterwards.

use rayon::prelude::*;

use crate::catalog::{Catalog, CatalogEntry};
use crate::error::{Error, Result};
use crate::group::{Group, SubgroupRef};
use crate::morphisms::{
    a_invariant_normal_subgroups, automorphism_group_limited, inner_automorphisms,
};
use crate::series::nilpotency_class;
use crate::theorems::checks::{
    coprime_decomposition, search_kos_witness, verify_claim_star, verify_corollary2,
    verify_corollary3, verify_corollary4, verify_lemma1, verify_theorem1, verify_theorem2_b,
    verify_theorem2_h,
};
use crate::theorems::example::verify_example;
use crate::theorems::CheckReport;

/// Which checks the runner knows how to sweep.
pub const CHECK_NAMES: &[&str] = &[
    "theorem1",
    "lemma1",
    "coprime",
    "corollary2",
    "kos",
    "claim_star",
    "theorem2_b",
    "theorem2_h",
    "example",
    "corollary3",
    "corollary4",
];

#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    /// Only catalog entries up to this order are swept (checks with their
    /// own tighter internal caps stay tighter).
    pub max_order: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { max_order: 64 }
    }
}

/// Upper bound for the holomorph subgroups of the claim-(*) sweep.
const CLAIM_STAR_S_CAP: usize = 2048;

/// The pair sweeps get expensive fast; lemma 1 caps tighter.
const LEMMA1_ORDER_CAP: usize = 24;

/// Abelian entries up to this order enter the coprime sweep.
const COPRIME_ORDER_CAP: usize = 81;

fn entries_up_to(catalog: &Catalog, cap: usize) -> Vec<&CatalogEntry> {
    catalog
        .entries()
        .iter()
        .filter(|e| e.order().is_some_and(|o| o <= cap))
        .collect()
}

/// All normal subgroups as `SubgroupRef`s with their enumeration index.
fn indexed_normals(g: &Group) -> Result<Vec<(usize, SubgroupRef)>> {
    Ok(g.normal_subgroups()?
        .iter()
        .enumerate()
        .map(|(i, elems)| (i, SubgroupRef::from_sorted_unchecked(g.clone(), elems.clone())))
        .collect())
}

fn sweep_entry(check: &str, entry: &CatalogEntry, opts: SweepOptions) -> Result<Vec<CheckReport>> {
    let g = entry.build()?;
    let mut out = Vec::new();
    match check {
        "theorem1" => {
            for (i, l) in indexed_normals(&g)? {
                let report = verify_theorem1(&g, &l)?;
                if report.premises_ok {
                    out.push(report.rename_group(&format!("{}|N{i:03}", entry.name)));
                }
            }
        }
        "kos" => {
            out.push(search_kos_witness(&g)?);
        }
        "corollary2" => {
            for (i, l) in indexed_normals(&g)? {
                let (q, _) = crate::group::quotient(&g, &l)?;
                if let Some(m) = nilpotency_class(&q) {
                    let report = verify_corollary2(&g, &l, m)?;
                    if report.premises_ok {
                        out.push(report.rename_group(&format!("{}|N{i:03}|m{m}", entry.name)));
                    }
                }
            }
        }
        "coprime" => {
            for (label, action) in entry.stored_actions(&g) {
                let report = coprime_decomposition(&g, &action)?;
                out.push(report.rename_group(&format!("{}|Q={label}", entry.name)));
            }
        }
        "claim_star" => {
            let (inn, _) = inner_automorphisms(&g);
            if g.order() * inn.order() <= CLAIM_STAR_S_CAP {
                let report = verify_claim_star(&g, &inn)?;
                out.push(report.rename_group(&format!("{}|A=inn", entry.name)));
                // the full automorphism group branch, when it fits
                let limit = CLAIM_STAR_S_CAP / g.order();
                if let Ok(aut) = automorphism_group_limited(&g, limit) {
                    if aut.order() != inn.order() {
                        let report = verify_claim_star(&g, &aut)?;
                        out.push(report.rename_group(&format!("{}|A=aut", entry.name)));
                    }
                }
            }
        }
        "theorem2_b" => {
            let (inn, _) = inner_automorphisms(&g);
            let report = verify_theorem2_b(&g, &inn)?;
            out.push(report.rename_group(&format!("{}|A=inn", entry.name)));
            for (label, action) in entry.stored_actions(&g) {
                if label != "A" {
                    continue;
                }
                let report = verify_theorem2_b(&g, &action)?;
                out.push(report.rename_group(&format!("{}|A={label}", entry.name)));
            }
        }
        "theorem2_h" => {
            let actions = {
                let (inn, _) = inner_automorphisms(&g);
                let mut v = vec![("inn".to_string(), inn)];
                v.extend(entry.stored_actions(&g).into_iter().filter(|(l, _)| l == "A"));
                v
            };
            for (label, action) in actions {
                for (i, l) in a_invariant_normal_subgroups(&g, &action)?
                    .into_iter()
                    .enumerate()
                {
                    let report = verify_theorem2_h(&g, &action, &l)?;
                    if report.premises_ok {
                        out.push(
                            report.rename_group(&format!("{}|A={label}|N{i:03}", entry.name)),
                        );
                    }
                }
            }
        }
        "lemma1" => {
            let normals = indexed_normals(&g)?;
            for (i, a_sub) in &normals {
                for (j, h) in &normals {
                    if !a_sub.is_subset_of(h) {
                        continue;
                    }
                    let report = verify_lemma1(&g, a_sub, h)?;
                    if report.premises_ok {
                        out.push(report.rename_group(&format!("{}|A{i:03}|H{j:03}", entry.name)));
                    }
                }
            }
        }
        "corollary3" => {
            // canonical single-stage chain G >= G >= 1
            let chain = vec![(SubgroupRef::whole(&g), SubgroupRef::trivial(&g))];
            let report = verify_corollary3(&g, &chain)?;
            if report.premises_ok {
                out.push(report);
            }
        }
        "corollary4" => {
            let (inn, _) = inner_automorphisms(&g);
            let chain = vec![SubgroupRef::trivial(&g), SubgroupRef::whole(&g)];
            let report = verify_corollary4(&g, &inn, &chain, &[0])?;
            out.push(report.rename_group(&format!("{}|A=inn", entry.name)));
        }
        other => {
            return Err(Error::PremiseFailed {
                reason: format!("unknown check {other}"),
            })
        }
    }
    let _ = opts;
    Ok(out)
}

/// Runs one named check across the catalog.
pub fn run_check(check: &str, catalog: &Catalog, opts: SweepOptions) -> Result<Vec<CheckReport>> {
    if check == "example" {
        // the example family is its own instance list
        let mut out = Vec::new();
        for (p, rank) in [(3u64, 1usize), (3, 2), (5, 1), (5, 2)] {
            out.push(verify_example(p, rank)?);
        }
        return Ok(out);
    }
    let cap = match check {
        // these two carry their own criteria-pinned scopes
        "coprime" => COPRIME_ORDER_CAP,
        "claim_star" => usize::MAX,
        "lemma1" => LEMMA1_ORDER_CAP.min(opts.max_order),
        _ => opts.max_order,
    };
    let entries = entries_up_to(catalog, cap);
    let results: Vec<Result<Vec<CheckReport>>> = entries
        .par_iter()
        .map(|entry| sweep_entry(check, entry, opts))
        .collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

/// Runs every check the runner knows.
pub fn run_all(catalog: &Catalog, opts: SweepOptions) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for check in CHECK_NAMES {
        out.extend(run_check(check, catalog, opts)?);
    }
    Ok(out)
}
