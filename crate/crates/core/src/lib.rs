//! Computational toolkit for the Artin braid groups `B_n`.
//!
//! The crate decides the word problem (Garside left normal form, with an
//! independent Dehornoy handle-reduction decider), compares braids in the
//! Dehornoy left order and in the exponent-sum partial bi-order, models the
//! intermediate subgroups `P_n ⊊ H ⊂ B_n` through their image in `S_n`, and
//! builds checkable certificates showing that every such subgroup has
//! non-unique roots and a generalized torsion element.
//!
//! Everything here is pure computation over `alloc` collections; IO, JSON and
//! the command-line front end live in the `braid-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

mod error;
pub mod garside;
pub mod handle;
pub mod identities;
pub mod lattice;
pub mod order;
pub mod perm;
pub mod problem;
pub mod subgroup;
pub mod torsion;
pub mod word;

pub use error::{BraidError, Result};
pub use garside::{normal_form, GarsideNormalForm};
pub use handle::{handle_reduce, handle_reduce_trivial, HandleReduction, DEFAULT_STEP_BUDGET};
pub use identities::{run_identity_suite, IdentityCheck, IdentityReport};
pub use lattice::{enumerate_intermediate, SubgroupDescriptor};
pub use order::{dehornoy_compare, partial_compare, root_clash, OrderVerdict, PartialVerdict};
pub use perm::{CycleType, Permutation};
pub use problem::{commutator, conjugate, equal, is_trivial, EqualityVerdict};
pub use subgroup::{
    canonical_representative, conjugacy_witness, lift_permutation, member, subgroup_of,
    ConjugacyWitness, IntermediateSubgroup,
};
pub use torsion::{
    build_certificate, build_certificate_infinite, expand_power_commutator, verify_certificate,
    CaseTag, CertificateCheck, CertificateReport, FormalWord, TorsionCertificate,
};
pub use word::{BraidWord, InfiniteBraidWord, Letter};
