//! Builds the generalized intersection matrix and its reflection representation.

use pseudo_acyclic::{build_gim, relation_failures, GimRep, LinearOrdering, QuiverMatrix};

fn main() -> pseudo_acyclic::Result<()> {
    let b = QuiverMatrix::oriented_triangle();
    for ord in ["1,3,2", "1,2,3"] {
        let ord: LinearOrdering = ord.parse()?;
        let a = build_gim(&b, &ord)?;
        println!("ordering {ord}\nA =\n{}", a.matrix().to_text());
        let rep = GimRep::new(a);
        for (i, g) in rep.generators().iter().enumerate() {
            println!("pi(s_{}) =\n{}", i + 1, g.to_text());
        }
        let bad = relation_failures(&b, rep.generators())?;
        if bad.is_empty() {
            println!("all pair and triangle relations hold\n");
        }
        for (rel, m) in bad {
            println!("fails {rel}; the square is\n{}\n", m.to_text());
        }
    }
    Ok(())
}
