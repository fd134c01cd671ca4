//! The counterexample family: an elementary abelian p-group with an
//! action that is not normalized by the inner automorphisms (vacuously
//! here, the group being abelian) and whose point is that no proper
//! invariant subgroup yields a hypercentral quotient.
//!
//! The group is `G = <a_0> x <a_1> x ... x <a_n>` of order `p^(n+1)`, the
//! action is generated by `tau: a_0 -> a_0^2` and `gamma_i: a_0 -> a_0 a_i`,
//! all centralizing `Z = <a_1, ..., a_n>`.

use std::collections::{BTreeMap, HashSet};

use crate::catalog::elementary_abelian;
use crate::error::{Error, Result};
use crate::group::{mult_closure, Group, SubgroupRef, TABLE_CAP};
use crate::morphisms::{restrict_action_to_quotient, AutSubgroup, Automorphism};
use crate::series::{a_center_series, hypercentral_type};
use crate::theorems::{CheckReport, Quantity};

fn is_odd_prime(p: u64) -> bool {
    p >= 3 && p % 2 == 1 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Builds the truncation with `rank = n` copies of `<a_i>` beside `<a_0>`.
/// Element `x` encodes coefficients base p with `a_0` in the lowest digit.
pub fn build_example(p: u64, rank: usize) -> Result<(Group, AutSubgroup)> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime { value: p });
    }
    let pu = p as usize;
    let order = pu
        .checked_pow(rank as u32 + 1)
        .filter(|&o| o <= TABLE_CAP)
        .ok_or(Error::CapExceeded {
            what: "example truncation",
            size: usize::MAX,
            cap: TABLE_CAP,
        })?;
    let g = elementary_abelian(pu, rank as u32 + 1)?;
    let g = crate::group::GroupTable::from_flat_renamed(&g, &format!("ex-{p}-{rank}"));

    // tau doubles the a_0 coordinate
    let tau_image: Vec<usize> = (0..order).map(|x| (x % pu * 2) % pu + x / pu * pu).collect();
    let tau = Automorphism::new(&g, tau_image)?;
    let mut gens = vec![tau];
    // gamma_i adds the a_0 coordinate onto coordinate i
    for i in 1..=rank {
        let place = pu.pow(i as u32);
        let image: Vec<usize> = (0..order)
            .map(|x| {
                let c0 = x % pu;
                let ci = x / place % pu;
                x - ci * place + (ci + c0) % pu * place
            })
            .collect();
        gens.push(Automorphism::new(&g, image)?);
    }
    let action = AutSubgroup::from_generators(&g, &gens);
    Ok((g, action))
}

/// All subgroups of an elementary abelian group, by closure lattice
/// breadth-first search. Small inputs only; the counterexample family
/// needs at most `5^3`.
pub fn all_subgroups(g: &Group) -> Vec<SubgroupRef> {
    let trivial = vec![g.identity()];
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    seen.insert(trivial.clone());
    let mut queue = vec![trivial];
    let mut found = Vec::new();
    while let Some(current) = queue.pop() {
        found.push(current.clone());
        for x in g.elements() {
            if current.binary_search(&x).is_ok() {
                continue;
            }
            let mut gens = current.clone();
            gens.push(x);
            let closure = mult_closure(g, &gens);
            if seen.insert(closure.clone()) {
                queue.push(closure);
            }
        }
    }
    found.sort_unstable_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
    found
        .into_iter()
        .map(|elems| SubgroupRef::from_sorted_unchecked(g.clone(), elems))
        .collect()
}

/// Checks the three assertions of the counterexample on a truncation:
/// the first A-center is `Z` of index p, every proper invariant subgroup
/// lies inside `Z`, and no such subgroup gives a hypercentral quotient.
pub fn verify_example(p: u64, rank: usize) -> Result<CheckReport> {
    let check = "example";
    let name = format!("ex-{p}-{rank}");
    let (g, action) = build_example(p, rank)?;
    let pu = p as usize;

    let series = a_center_series(&g, &action);
    let z = series.terms()[1.min(series.terms().len() - 1)].clone();
    // Z = <a_1, ..., a_n> is everything with vanishing a_0 coordinate
    let expected_z: Vec<usize> = g.elements().filter(|x| x % pu == 0).collect();
    let z_correct = z.elems() == expected_z.as_slice() && z.index_in_parent() == pu;

    let invariant = |k: &SubgroupRef| {
        action
            .members()
            .iter()
            .all(|m| k.elems().iter().all(|&x| k.contains(m.apply(x))))
    };
    let mut proper_invariant = Vec::new();
    for k in all_subgroups(&g) {
        if !k.is_whole_group() && invariant(&k) {
            proper_invariant.push(k);
        }
    }
    let all_inside_z = proper_invariant.iter().all(|k| k.is_subset_of(&z));

    let mut none_hypercentral = true;
    for k in &proper_invariant {
        let (q, _, induced) = restrict_action_to_quotient(&g, k, &action)?;
        if hypercentral_type(&q, &induced).is_some() {
            none_hypercentral = false;
            break;
        }
    }

    let mut q = BTreeMap::new();
    q.insert("g_order".into(), Quantity::Int(g.order() as i64));
    q.insert("z_index".into(), Quantity::Int(z.index_in_parent() as i64));
    q.insert("a_order".into(), Quantity::Int(action.order() as i64));
    // recorded, not asserted: the truncated action is not abelian
    q.insert(
        "a_is_abelian".into(),
        Quantity::Int(action.is_abelian_action() as i64),
    );
    q.insert(
        "proper_invariant_subgroups".into(),
        Quantity::Int(proper_invariant.len() as i64),
    );
    q.insert("z_layer_correct".into(), Quantity::Int(z_correct as i64));
    q.insert("all_inside_z".into(), Quantity::Int(all_inside_z as i64));
    q.insert(
        "no_hypercentral_quotient".into(),
        Quantity::Int(none_hypercentral as i64),
    );
    let holds = z_correct && all_inside_z && none_hypercentral;
    Ok(CheckReport::concluded(
        check,
        &name,
        holds,
        q,
        Some(format!("Z={}", z.descriptor())),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_odd_primes() {
        assert_eq!(build_example(2, 1).unwrap_err(), Error::NotOddPrime { value: 2 });
        assert_eq!(build_example(9, 1).unwrap_err(), Error::NotOddPrime { value: 9 });
        assert_eq!(build_example(1, 1).unwrap_err(), Error::NotOddPrime { value: 1 });
    }

    #[test]
    fn smallest_truncation_has_order_nine_and_two_generator_maps() {
        let (g, a) = build_example(3, 1).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(a.generator_indices().len(), 2);
        // |A| = ord(2 mod 3) * 3 = 6
        assert_eq!(a.order(), 6);
    }

    #[test]
    fn rank_two_truncation_at_three_has_index_three_center() {
        let (g, a) = build_example(3, 2).unwrap();
        assert_eq!(g.order(), 27);
        let z = crate::morphisms::fixed_points(&g, &a);
        assert_eq!(z.index_in_parent(), 3);
    }

    #[test]
    fn tau_at_five_has_multiplicative_order_four() {
        let (g, _) = build_example(5, 1).unwrap();
        assert_eq!(g.order(), 25);
        // iterate tau on a_0 (index 1): doubling mod 5 cycles 1,2,4,3
        let tau_image: Vec<usize> = (0..25).map(|x| (x % 5 * 2) % 5 + x / 5 * 5).collect();
        let tau = Automorphism::new(&g, tau_image).unwrap();
        assert_eq!(tau.order(), 4);
    }

    #[test]
    fn orbit_of_a0_is_the_whole_group() {
        let (g, a) = build_example(3, 2).unwrap();
        let closure = crate::morphisms::a_invariant_closure(&g, &a, &[1]);
        assert!(closure.is_whole_group());
    }

    #[test]
    fn orbit_of_a1_is_just_its_line() {
        let (g, a) = build_example(3, 2).unwrap();
        // a_1 has index 3 (coefficient 1 in the p^1 digit); the action
        // centralizes Z, so the closure is the line through a_1
        let closure = crate::morphisms::a_invariant_closure(&g, &a, &[3]);
        assert_eq!(closure.order(), 3);
        assert_eq!(closure.elems(), &[0, 3, 6]);
    }

    #[test]
    fn subgroup_counts_of_small_elementary_abelian_groups() {
        // subspace counts: F3^2 has 1 + 4 + 1, F3^3 has 1 + 13 + 13 + 1
        let e9 = elementary_abelian(3, 2).unwrap();
        assert_eq!(all_subgroups(&e9).len(), 6);
        let e27 = elementary_abelian(3, 3).unwrap();
        assert_eq!(all_subgroups(&e27).len(), 28);
        let e25 = elementary_abelian(5, 2).unwrap();
        assert_eq!(all_subgroups(&e25).len(), 8);
    }

    #[test]
    fn induced_action_on_g_mod_z_is_nontrivial_for_tau() {
        let (g, a) = build_example(3, 2).unwrap();
        let z = crate::morphisms::fixed_points(&g, &a);
        let (q, proj, induced) = restrict_action_to_quotient(&g, &z, &a).unwrap();
        assert_eq!(q.order(), 3);
        // gamma maps collapse, tau survives as the doubling map: the
        // induced group is the image of <tau> on G/Z, of order 2
        assert_eq!(induced.order(), 2);
        let a0_bar = proj.apply(1);
        let tau_bar = induced
            .members()
            .iter()
            .find(|m| !m.is_identity())
            .unwrap();
        assert_eq!(tau_bar.apply(a0_bar), q.mul(a0_bar, a0_bar));
        assert_ne!(tau_bar.apply(a0_bar), a0_bar);
    }

    #[test]
    fn family_verdicts_hold() {
        for (p, rank) in [(3, 1), (3, 2), (5, 1), (5, 2)] {
            let report = verify_example(p, rank).unwrap();
            assert!(report.holds(), "{p},{rank}: {report:?}");
        }
    }

    #[test]
    fn proper_invariant_subgroup_count_at_rank_two_matches_z_lattice() {
        // every proper invariant subgroup lies in Z = (Z/3)^2, and all six
        // of its subgroups are invariant
        let report = verify_example(3, 2).unwrap();
        assert_eq!(report.int_quantity("proper_invariant_subgroups"), Some(6));
    }
}
