//! Decide triviality and equality of edge words.
//!
//! cargo run --example word_problem

use coxcover::graph::named;
use coxcover::{Context, Verdict};

fn main() -> coxcover::Result<()> {
    let ctx = Context::with_tree_labels(named::sixpts(), &named::SIXPTS_TREE)?;
    for text in ["a a", "a b a b a b", "c e c x", "x c e c x c e c", "a d"] {
        let w = ctx.parse_word(text)?;
        match ctx.is_trivial(&w) {
            Verdict::Trivial => println!("{text:>20}  trivial"),
            Verdict::Nontrivial(img) => {
                let nf = ctx.psi(&img)?;
                println!("{text:>20}  {img}  (normal form {})", ctx.word_to_string(&nf));
            }
            Verdict::TrivialInQuotient => println!("{text:>20}  trivial in the quotient"),
        }
    }

    let u = ctx.parse_word("a b a")?;
    let v = ctx.parse_word("b a b")?;
    println!("a b a == b a b: {}", ctx.equal(&u, &v).is_trivial());
    Ok(())
}
