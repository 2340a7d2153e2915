//! Edge-adjacency graphs and the claw test.
//!
//! cargo run --example dual_graph

use coxcover::graph::{dual_graph, forbidden_fork, named};

fn main() {
    for (name, g) in [("Y", named::star(3)), ("C5", named::cycle(5)), ("sixpts", named::sixpts())] {
        let d = dual_graph(&g);
        println!("{name}: {} edges, dual has {} vertices and {} edges", g.edge_count(), d.n(), d.edge_count());
    }
    let claw = named::star(3);
    match forbidden_fork(&claw) {
        Some(f) => println!("Y contains a fork at {} with leaves {:?}, so it is no dual graph", f.centre, f.leaves),
        None => println!("Y has no fork"),
    }
}
