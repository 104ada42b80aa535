//! Constructs a pseudo-acyclic ordering and lists every valid ordering for small quivers.

use pseudo_acyclic::{build_pseudo_acyclic_ordering, enumerate_valid_orderings, find_triangles, ordering_valid, QuiverMatrix};

fn main() -> pseudo_acyclic::Result<()> {
    // Two triangles glued at vertex 3 with a tail 5 - 6.
    let b = QuiverMatrix::from_arrows(6, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3), (5, 6)])?;
    for t in find_triangles(&b) {
        println!("triangle {:?}, epsilon {}, allowed {:?}", t.labels(), t.epsilon, t.allowed_orders());
    }
    let ord = build_pseudo_acyclic_ordering(&b)?;
    println!("constructed ordering: {ord}");
    assert!(ordering_valid(&b, &ord).valid);

    let tri = QuiverMatrix::oriented_triangle();
    let all = enumerate_valid_orderings(&tri, 7)?;
    println!("valid orderings of the triangle: {}", all.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(" | "));
    Ok(())
}
