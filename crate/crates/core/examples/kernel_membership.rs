//! Words in the kernel of the map to the symmetric group, written in the
//! generators x_{ij}.
//!
//! cargo run --example kernel_membership

use coxcover::graph::named;
use coxcover::presentation::factor_ftn;
use coxcover::Context;

fn main() -> coxcover::Result<()> {
    let ctx = Context::with_tree_labels(named::sixpts(), &named::SIXPTS_TREE)?;
    for text in ["c e c x", "b d b y", "c a d a c z", "c e c x b d b y", "a b"] {
        let w = ctx.parse_word(text)?;
        let (inside, f) = ctx.in_kernel(&w);
        if inside {
            println!("{text:>16}  in kernel: {}  =  {}", f, factor_ftn(&f)?);
        } else {
            println!("{text:>16}  permutation {}", ctx.phi(&w).perm);
        }
    }
    Ok(())
}
