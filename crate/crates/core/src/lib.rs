//! Finite permutation groups, full subgroup lattices of small groups, and
//! decision procedures for NS-permutability and NS-supplements.
//!
//! Permutations act on the right throughout: `p.compose(q)` applies `p` first.

pub mod arith;
pub mod bits;
pub mod chain;
pub mod corpus;
pub mod error;
pub mod finite;
pub mod group;
pub mod groupfile;
pub mod harness;
pub mod lattice;
pub mod ns;
pub mod perm;
pub mod predicates;
pub mod quotient;
pub mod subgroup;

pub use bits::Bits;
pub use chain::StabilizerChain;
pub use error::{GroupError, Result};
pub use finite::FiniteGroup;
pub use group::{Caps, ElementTable, PermGroup};
pub use lattice::{ChiefFactor, ChiefSeries, Lattice, SylowFamily};
pub use ns::{NsVerdict, PermutabilityWitness};
pub use perm::Permutation;
pub use predicates::StructureProfile;
pub use quotient::{quotient_group, Quotient};
pub use subgroup::SubgroupSet;
