//! Tracks mutated reflections and conjugators along a walk on the oriented triangle.

use pseudo_acyclic::{apply_sequence_with_reflections, GimRep, MutationSequence, QuiverMatrix, ReflectionState, Seed};

fn main() -> pseudo_acyclic::Result<()> {
    let b = QuiverMatrix::oriented_triangle();
    let w: MutationSequence = "2,1,3,2".parse()?;
    let (seed, r) = apply_sequence_with_reflections(&Seed::initial(b.clone()), &ReflectionState::initial(3), &w)?;
    r.check_consistency()?;
    println!("walk {w}\nB =\n{}\nC =\n{}", seed.b.to_text(), seed.c.to_text());
    for i in 1..=3 {
        println!("r_{i} = {}   g_{i} = {}", r.reflection(i), r.conjugator(i));
    }

    let rep = GimRep::from_quiver(&b, &"1,3,2".parse()?)?;
    println!("L matrix:\n{}", rep.l_matrix(&r)?.matrix().to_text());
    Ok(())
}
