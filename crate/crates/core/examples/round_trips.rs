//! Normal form words: every element maps back to itself.
//!
//! cargo run --example round_trips

use coxcover::oracle::{check_gamma_laws, check_round_trips, corpus};

fn main() {
    for (name, ctx) in corpus() {
        let trips = check_round_trips(&ctx, 100, 3);
        let gamma = check_gamma_laws(&ctx);
        println!("{name:>12}  {trips}  {gamma}");
    }
}
