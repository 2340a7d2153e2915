//! Exact computation in the cover groups of graphs: the Coxeter group on the
//! edges of a graph, modulo the fork relations, embedded in
//! `S_n ⋉ (F_t)^n`.
//!
//! ```
//! use coxcover::{graph::named, Context, Verdict};
//!
//! let ctx = Context::build(named::cycle(3)).unwrap();
//! let w = ctx.parse_word("a c a c a c").unwrap();
//! assert_eq!(ctx.is_trivial(&w), Verdict::Trivial);
//! ```

pub mod cli;
pub mod coxy;
pub mod error;
pub mod freeprod;
pub mod graph;
pub mod oracle;
pub mod perm;
pub mod presentation;

pub use coxy::{Classification, Context, StructureReport, Verdict};
pub use error::{Error, Result};
pub use freeprod::{AbVector, Chord, FStarElement, Letter, ReducedWord, SemidirectElement};
pub use graph::{EdgeId, EdgeWord, Graph, SpanningTree};
pub use perm::{perm_of_word, Permutation};
pub use presentation::{mu, AGenerator, AWord, Presentation, RelatorSet};
