//! Explores the labelled exchange graph and checks `pi` on every seed.

use pseudo_acyclic::{bfs_verify, build_pseudo_acyclic_ordering, BfsOptions, QuiverMatrix};

fn main() -> pseudo_acyclic::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    let b = QuiverMatrix::path(n);
    let ord = build_pseudo_acyclic_ordering(&b)?;
    let report = bfs_verify(&b, &ord, BfsOptions::default())?;
    print!("{}", report.to_text());

    let tri = pseudo_acyclic::QuiverMatrix::oriented_triangle();
    for o in ["1,3,2", "1,2,3"] {
        let r = bfs_verify(&tri, &o.parse()?, BfsOptions::default())?;
        println!("triangle under {o}: {:?} ({} seeds, {} violations)", r.verdict, r.seeds, r.violation_count);
    }
    Ok(())
}
