//! Signed graphs with cycle-sum constraints, the generic circular
//! triangle-free graph C3 and its universal signing, and network
//! satisfaction for the relation algebra 56_65.

pub mod chromatic;
pub mod circle;
pub mod cli;
pub mod error;
pub mod generate;
pub mod gf2;
pub mod graph;
pub mod io;
pub mod relalg;
pub mod sigma;
pub mod signed;
pub mod truemper;

pub use circle::{CircleGraphKind, RationalAngle};
pub use error::{Error, Result};
pub use graph::{Graph, InducedCycle};
pub use relalg::{AtomSet, Certificate, Network, NspOutcome, RelationAlgebra};
pub use sigma::CirclePoint;
pub use signed::{BalanceRule, SignedGraph, SwitchSet};
