//! Words on a connected subgraph: the answer in the big group matches the
//! answer in the subgraph's own group.
//!
//! cargo run --example parabolic

use coxcover::graph::named;
use coxcover::oracle::parabolic_check_labels;
use coxcover::Context;

fn main() -> coxcover::Result<()> {
    let ctx = Context::with_tree_labels(named::sixpts(), &named::SIXPTS_TREE)?;
    for sub in [&["a", "c", "e", "x"][..], &["b", "d", "a", "y"], &["a", "b", "c", "d", "e", "x", "y"]] {
        let report = parabolic_check_labels(&ctx, sub, 300, 11)?;
        println!("{:<16} {report}", sub.join(" "));
    }
    Ok(())
}
