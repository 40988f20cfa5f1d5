//! Weyl-group combinatorics of positive (admissible) diagrams over reduced
//! words: root systems, the positivity test, the bijections onto Bruhat
//! intervals, and the type-A quantum-matrices grid with Le-diagrams and pipe
//! dreams.

pub mod cartan;
pub mod cli;
pub mod diagrams;
pub mod error;
pub mod grassmann;
pub mod root_system;
pub mod verify;
pub mod words;

pub use cartan::{CartanType, Family};
pub use diagrams::{Diagram, GammaTrace, Obstruction, ReducedExpression, SubexpressionTrace};
pub use error::{Error, ErrorKind, Result};
pub use root_system::{Root, RootSystem, WeylElement};
pub use grassmann::{GridDiagram, GridShape};
pub use verify::{Census, OrderStats, VerificationReport, VerifyOptions};
pub use words::{RootSequence, Word};
