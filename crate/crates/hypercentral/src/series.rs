//! Ascending central series: the classical upper central series, the
//! A-center series under an automorphism action, hypercenters, and
//! stabilized-series predicates.
//!
//! All series here are towers `1 = Z_0 <= Z_1 <= ...` of normal subgroups
//! where each factor `Z_{i+1}/Z_i` is the full fixed-point subgroup of the
//! induced action on `G/Z_i`. On finite groups every such tower
//! stabilizes; terms are stored as subgroups of the original group, so
//! chain comparisons are direct.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Group, SubgroupRef};
use crate::morphisms::{inner_automorphisms, AutSubgroup};

/// The action a series was computed under.
#[derive(Clone, Debug)]
pub enum SeriesAction {
    /// Conjugation by the group itself; gives the classical series.
    Inner,
    /// An explicit automorphism subgroup.
    Action(AutSubgroup),
}

/// A computed tower `1 = Z_0 < Z_1 < ... < Z_k` with `Z_{k+1} = Z_k`;
/// the repeated stabilized term is not stored.
#[derive(Clone, Debug)]
pub struct AscendingSeries {
    group: Group,
    action: SeriesAction,
    terms: Vec<SubgroupRef>,
}

impl AscendingSeries {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn action(&self) -> &SeriesAction {
        &self.action
    }

    /// The strictly increasing terms, starting at the trivial subgroup.
    pub fn terms(&self) -> &[SubgroupRef] {
        &self.terms
    }

    /// The stabilized last term.
    pub fn hypercenter(&self) -> &SubgroupRef {
        self.terms.last().expect("series always has Z_0")
    }

    /// Number of strict steps taken before stabilization.
    pub fn steps(&self) -> usize {
        self.terms.len() - 1
    }

    /// Whether the tower reaches the whole group.
    pub fn reaches_group(&self) -> bool {
        self.hypercenter().is_whole_group()
    }

    /// The term at ordinal `i`, clamped at stabilization.
    pub fn term_at(&self, i: usize) -> &SubgroupRef {
        &self.terms[i.min(self.terms.len() - 1)]
    }

    /// Materializes the acting automorphism subgroup.
    pub fn action_subgroup(&self) -> AutSubgroup {
        match &self.action {
            SeriesAction::Inner => inner_automorphisms(&self.group).0,
            SeriesAction::Action(a) => a.clone(),
        }
    }

    /// `Z_0 < Z_1 < ...` as orders, for display.
    pub fn order_profile(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.order()).collect()
    }
}

/// The A-center tower of `g` under `a`, run to stabilization.
///
/// Each layer is `{ x : x^-1 a(x) in Z for all a }`, the preimage of the
/// fixed points of the induced action on the quotient by the previous
/// term. Layers must come out normal, which holds whenever the action is
/// normalized by the inner automorphisms (and always on abelian groups);
/// the harness only calls it that way.
pub fn a_center_series(g: &Group, a: &AutSubgroup) -> AscendingSeries {
    assert!(Arc::ptr_eq(g, a.group()), "action on a different group");
    let mut terms = vec![SubgroupRef::trivial(g)];
    loop {
        let current = terms.last().unwrap();
        let next: Vec<usize> = g
            .elements()
            .filter(|&x| {
                a.members()
                    .iter()
                    .all(|m| current.contains(g.mul(g.inv(x), m.apply(x))))
            })
            .collect();
        if next.len() == current.order() {
            break;
        }
        let sub = SubgroupRef::from_sorted_unchecked(g.clone(), next);
        assert!(
            sub.is_normal(),
            "A-center layer of {} is not normal; the action is not normalized by Inn",
            g.name()
        );
        terms.push(sub);
    }
    AscendingSeries {
        group: g.clone(),
        action: SeriesAction::Action(a.clone()),
        terms,
    }
}

/// The classical upper central series, computed layer by layer as
/// `Z_{i+1} = { x : [x, y] in Z_i for all y }`. Agrees with
/// `a_center_series(g, Inn(g))` term by term.
pub fn upper_central_series(g: &Group) -> AscendingSeries {
    let mut terms = vec![SubgroupRef::trivial(g)];
    loop {
        let current = terms.last().unwrap();
        let next: Vec<usize> = g
            .elements()
            .filter(|&x| g.elements().all(|y| current.contains(g.comm(x, y))))
            .collect();
        if next.len() == current.order() {
            break;
        }
        terms.push(SubgroupRef::from_sorted_unchecked(g.clone(), next));
    }
    AscendingSeries {
        group: g.clone(),
        action: SeriesAction::Inner,
        terms,
    }
}

/// Last term of the A-center tower.
pub fn hypercenter(g: &Group, a: &AutSubgroup) -> SubgroupRef {
    a_center_series(g, a).hypercenter().clone()
}

/// Last term of the classical upper central series.
pub fn classical_hypercenter(g: &Group) -> SubgroupRef {
    upper_central_series(g).hypercenter().clone()
}

/// Number of steps for the A-center tower to reach the whole group, or
/// None when it stabilizes early.
pub fn hypercentral_type(g: &Group, a: &AutSubgroup) -> Option<usize> {
    let s = a_center_series(g, a);
    s.reaches_group().then(|| s.steps())
}

/// Nilpotency class: the type of the classical series, absent for
/// non-nilpotent groups.
pub fn nilpotency_class(g: &Group) -> Option<usize> {
    let s = upper_central_series(g);
    s.reaches_group().then(|| s.steps())
}

pub fn is_nilpotent(g: &Group) -> bool {
    upper_central_series(g).reaches_group()
}

/// True iff every member of `a` fixes every coset of `N` inside `M` for
/// each consecutive pair `N <= M` of the chain, i.e. `a` acts trivially
/// on all factors.
pub fn stabilizes_series(a: &AutSubgroup, terms: &[SubgroupRef]) -> Result<bool> {
    let g = a.group();
    for (i, t) in terms.iter().enumerate() {
        if !Arc::ptr_eq(t.parent(), g) {
            return Err(Error::NotAChain { position: i });
        }
        if i + 1 < terms.len() && !t.is_subset_of(&terms[i + 1]) {
            return Err(Error::NotAChain { position: i });
        }
        for (ai, m) in a.members().iter().enumerate() {
            if let Some(&bad) = t.elems().iter().find(|&&x| !t.contains(m.apply(x))) {
                return Err(Error::NotInvariant { auto: ai, elem: bad });
            }
        }
    }
    for pair in terms.windows(2) {
        let (lower, upper) = (&pair[0], &pair[1]);
        for m in a.members() {
            for &x in upper.elems() {
                if !lower.contains(g.mul(m.apply(x), g.inv(x))) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
