//! Finite-group central-series toolkit.
//!
//! Groups live as validated Cayley tables ([`group::GroupTable`]);
//! automorphism subgroups act on them ([`morphisms::AutSubgroup`]); the
//! [`series`] module climbs central towers under those actions; and the
//! [`theorems`] module turns structural claims about finite-by-hypercentral
//! groups into exhaustively checked reports, driven over the standard
//! [`catalog`] by [`sweeps`].
//!
//! The `hypercentral` binary exposes the same machinery as a CLI; the
//! `book/` directory at the repository root walks through the concepts
//! with runnable examples, which double as this crate's doctests.

pub mod catalog;
pub mod error;
pub mod fileio;
pub mod group;
pub mod morphisms;
pub mod report;
pub mod series;
pub mod sweeps;
pub mod theorems;

pub use error::{Error, Result};
pub use group::{
    center, centralizer, commutator_subgroup, direct_product, generated_subgroup, quotient,
    subgroup_as_group, Group, GroupMap, GroupTable, SubgroupRef,
};
pub use morphisms::{
    a_invariant_closure, automorphism_group, automorphism_order, fixed_points,
    inner_automorphisms, is_normalized_by_inner, restrict_action_to_quotient, semidirect_product,
    AutSubgroup, Automorphism,
};
pub use report::ReportDocument;
pub use series::{
    a_center_series, classical_hypercenter, hypercenter, hypercentral_type, is_nilpotent,
    nilpotency_class, stabilizes_series, upper_central_series, AscendingSeries,
};
pub use theorems::{CheckReport, Quantity, Verdict};

// The book chapters double as doctests so the guide can never drift from
// the library.
#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }
    chapter!(introduction, "../../../book/src/introduction.md");
    chapter!(groups, "../../../book/src/groups.md");
    chapter!(actions, "../../../book/src/actions.md");
    chapter!(series, "../../../book/src/series.md");
    chapter!(verification, "../../../book/src/verification.md");
}
