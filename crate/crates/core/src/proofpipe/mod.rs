//! Exact replay of the two elimination arguments (planar and general case),
//! producing a ledger of every named coefficient compared against the stated
//! values, and ending in the torsion contradiction.

pub mod ledger;
pub mod pqr;
pub mod runner;
pub mod stages;
mod stated;

pub use ledger::{Ledger, LedgerEntry, Stated, Status};
pub use pqr::{build_pqr_general, build_pqr_planar, specialize_general_to_planar, Case, PqrTriple};
pub use runner::{run_general_case, run_planar_case, ProofRun};
pub use stages::{
    derive_relation, eliminant, eliminate_trig, rationalize, square_relation, DerivedRelation,
    EliminantParts, TrigQuadratic,
};
