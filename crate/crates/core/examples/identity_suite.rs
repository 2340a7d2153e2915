//! Randomized checks of the commutation identities among the x_{ij}.
//!
//! cargo run --example identity_suite -- [seed]

use coxcover::oracle::identity_suite;

fn main() -> coxcover::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    for (n, t) in [(4, 1), (4, 2), (5, 3), (6, 3)] {
        let report = identity_suite(seed, n, t, 500)?;
        println!("n={n} t={t}: {report}");
    }
    Ok(())
}
