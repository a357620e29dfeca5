//! Linking numbers between lifts of curves in the 3-fold irregular dihedral
//! branched cover of a 3-colored knot, computed from a combinatorial
//! encoding of the diagram.
//!
//! The pipeline: [`diagram::parse_scene`] reads the encoding,
//! [`prepared::PreparedScene`] checks it and traces the lifts,
//! [`chains`] solves for bounding 2-chains and [`linking`] intersects them
//! with the other curve's lifts.

pub mod chains;
pub mod cli;
pub mod diagram;
pub mod lifts;
pub mod linalg;
pub mod linking;
pub mod prepared;

pub use chains::{BranchIndex, ChainResult, Convention};
pub use diagram::{parse_scene, validate_scene, Scene};
pub use lifts::Cell;
pub use linalg::Rational;
pub use linking::{Entry, LinkingMatrix};
pub use prepared::PreparedScene;
