//! The crystal `B(∞)` of type `D_n`, realized by marginally large tableaux and
//! by Kostant partitions, with the explicit isomorphism between them.

pub mod bracket;
pub mod cartan;
pub mod cli;
pub mod crystalgraph;
pub mod error;
pub mod isomorphism;
pub mod kostant;
pub mod tableaux;

pub use cartan::{Rank, Root, RootKind, WeightVector};
pub use crystalgraph::{Crystal, CrystalGraph, Realization, VerificationReport};
pub use error::{Error, Result};
pub use isomorphism::{psi, psi_inverse};
pub use kostant::KostantPartition;
pub use tableaux::{Letter, MLTableau, Reading};
