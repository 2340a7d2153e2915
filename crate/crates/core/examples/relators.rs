//! Relators of the four presentations for a graph.
//!
//! cargo run --example relators

use coxcover::graph::named;
use coxcover::presentation::relators;
use coxcover::Presentation;

fn main() -> coxcover::Result<()> {
    let g = named::k4_minus_edge();
    for which in [Presentation::Coxeter, Presentation::Coxy, Presentation::Symmetric, Presentation::Atn] {
        let rels = relators(&g, which)?;
        println!("{which} ({} relators)\n{}", rels.len(), rels.to_text(&g));
    }
    Ok(())
}
