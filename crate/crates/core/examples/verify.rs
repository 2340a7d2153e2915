//! Every oracle check over the built-in corpus.
//!
//! cargo run --release --example verify

use coxcover::oracle::{corpus, verify_all};

fn main() {
    let mut failed = 0;
    for (name, ctx) in corpus() {
        for report in verify_all(&ctx, 5, 100) {
            if !report.passed() {
                failed += 1;
            }
            println!("{name:>12}  {report}");
        }
    }
    println!("{failed} failing reports");
    std::process::exit(if failed == 0 { 0 } else { 1 });
}
