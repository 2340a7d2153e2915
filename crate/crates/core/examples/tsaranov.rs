//! The graph and relator family behind a Tsaranov group.
//!
//! cargo run --example tsaranov -- 3 3 3

use coxcover::graph::dual_graph;
use coxcover::presentation::tsaranov_presentation;
use coxcover::Context;

fn main() -> coxcover::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let (a, b, t) = match args[..] {
        [a, b, t] => (a, b, t),
        _ => (3, 3, 3),
    };
    let report = tsaranov_presentation(a, b, t)?;
    println!("{report}");
    println!("dual graph:\n{}", dual_graph(&report.graph).to_text());
    println!("{}", Context::build(report.graph)?.structure_report());
    Ok(())
}
