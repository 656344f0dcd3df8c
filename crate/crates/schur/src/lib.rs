//! Computing with finite permutation groups, association schemes, Schur
//! rings, and difference-set designs, at the scale of a desk experiment.
//!
//! The crate builds finite groups as explicit multiplication tables, turns
//! group actions into association schemes, decides schurity of S-rings via the
//! Galois correspondence between schemes and their automorphism groups, and
//! exhaustively enumerates all S-rings over small groups. Difference sets
//! (Paley, Singer) and their symmetric 2-design developments tie the schurity
//! question over generalized dihedral groups to design transitivity.
//!
//! Entry points by theme:
//!
//! - [`perm`]: permutations, stabilizer chains, orbits, standard actions.
//! - [`groups`]: multiplication-table groups and a catalogue of constructors.
//! - [`scheme`]: association schemes, orbital schemes, fusions, wreath products.
//! - [`autsearch`]: scheme automorphisms by refinement-pruned backtracking.
//! - [`sring`]: S-rings, the Cayley-scheme correspondence, schurity decisions.
//! - [`designs`]: difference sets and symmetric 2-designs.
//! - [`enumerate`]: exhaustive S-ring enumeration with a brute-force oracle.
//! - [`io`]: file formats for schemes, permutation groups, and result tables.
//! - [`witness`]: non-schurian fusion witnesses and the small-group catalogue.
//!
//! Each major capability also has a runnable example under `examples/`, and
//! [`cli`] exposes the pipelines behind the `schur` binary.

pub mod autsearch;
pub mod cli;
pub mod designs;
pub mod enumerate;
pub mod error;
pub mod ff;
pub mod groups;
pub mod io;
pub mod perm;
pub mod scheme;
pub mod sring;
pub mod witness;

pub use error::{Error, Result};
