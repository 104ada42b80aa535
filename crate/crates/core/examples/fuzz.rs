//! Random mutation walks with a reproducible token.

use pseudo_acyclic::{build_pseudo_acyclic_ordering, random_walk_fuzz, QuiverMatrix};

fn main() -> pseudo_acyclic::Result<()> {
    let token: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2026);
    let b = QuiverMatrix::from_arrows(5, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5)])?;
    let good = build_pseudo_acyclic_ordering(&b)?;
    let r = random_walk_fuzz(&b, &good, 60, 200, token)?;
    println!("ordering {good}: {} violations, {} identity hits, {} permutation hits (token {token})",
        r.violations.len(), r.identity_hits, r.permutation_hits);

    let bad = "1,2,3,4,5".parse()?;
    let r = random_walk_fuzz(&b, &bad, 60, 200, token)?;
    if let Some(v) = r.violations.first() {
        println!("ordering {bad}: first violation along {}", v.walk());
    }
    Ok(())
}
