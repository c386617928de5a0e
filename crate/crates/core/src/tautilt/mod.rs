//! The ideal semigroup `⟨I_1, …, I_n⟩`, support τ-tilting pairs and their
//! mutation graph.

mod graph;
mod ideal;
mod identities;
mod mutation;
mod report;
mod stt;

pub use graph::{Catalogue, GraphEdge, GraphNode, MutationGraph, NamedModule};
pub use ideal::Ideal;
pub use identities::IdentityCheck;
pub use report::{ClassificationReport, ReportOptions};
pub use stt::{IdealSemigroup, SttFailure, SttPair};
