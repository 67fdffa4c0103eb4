//! Enumeration of minimal dominating sets and minimal transversals.
//!
//! The two problems are the same problem in different clothes: the minimal
//! dominating sets of a graph are the minimal transversals of its
//! closed-neighbourhood hypergraph, and conversely every hypergraph can be
//! planted inside a graph (co-bipartite, split) so that domination recovers
//! its transversals. This crate provides both directions, plus the machinery
//! that makes the graph side genuinely fast where it can be:
//!
//! - [`split_enum::dominant_split`] — linear-delay enumeration of minimal
//!   dominating sets of split graphs, in an order controlled by a
//!   permutation of the clique.
//! - [`completion::completion_graph`] — the completion G_co, which preserves
//!   the minimal dominating sets and turns every P6-free chordal graph into
//!   a split graph; [`trans_enum::dom_enum`] dispatches through it.
//! - [`trans_enum::trans_enum`] — sequential-antichain transversal
//!   enumeration for arbitrary hypergraphs (correct everywhere, fast
//!   nowhere in particular).
//! - [`reductions`] — the incidence constructions N(G), N_o(G), I(H),
//!   I'(H), B(H) tying the two worlds together.
//! - [`separators::cdom_enum`] / [`trans_enum::tdom_enum`] — connected and
//!   total domination, again as transversal problems (minimal separators,
//!   open neighbourhoods).
//! - [`oracles::SubsetOracle`] — exhaustive subset-lattice brute force at
//!   desk scale, the reference everything else is tested against.
//!
//! Results stream through [`stream::VertexSetStream`], which counts
//! operations between emissions so delay claims are measurable rather than
//! aspirational. The `examples/` directory walks through each capability;
//! the `domenum` binary exposes them on files.

pub mod classify;
pub mod cli;
pub mod completion;
pub mod error;
pub mod gen;
pub mod graph;
pub mod hypergraph;
pub mod io;
pub mod oracles;
pub mod reductions;
pub mod separators;
pub mod set;
pub mod split_enum;
pub mod stream;
pub mod trans_enum;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use set::VertexSet;
