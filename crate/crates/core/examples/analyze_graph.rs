//! Structure report for a few small graphs.
//!
//! cargo run --example analyze_graph

use coxcover::graph::named;
use coxcover::Context;

fn main() -> coxcover::Result<()> {
    let graphs = [
        ("path P5", named::path(5)),
        ("star Y", named::star(3)),
        ("cycle C6", named::cycle(6)),
        ("K4 minus an edge", named::k4_minus_edge()),
        ("K4", named::complete(4)),
    ];
    for (name, g) in graphs {
        let ctx = Context::build(g)?;
        println!("{name}\n{}\n", ctx.structure_report());
    }
    Ok(())
}
