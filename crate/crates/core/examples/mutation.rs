//! Mutates the A2 seed around the pentagon and prints each `[B|C]`.

use pseudo_acyclic::{MutationSequence, QuiverMatrix, Seed};

fn main() -> pseudo_acyclic::Result<()> {
    let mut s = Seed::initial(QuiverMatrix::path(2));
    for (step, k) in [1, 2, 1, 2, 1].into_iter().enumerate() {
        s = s.mutate(k)?;
        println!("after mu_{k} (step {}):\n{}\n", step + 1, s.extended().to_text());
    }
    // Five mutations return the seed with its labels swapped.
    let back = Seed::initial(QuiverMatrix::path(2)).apply(&MutationSequence::new(vec![1, 2, 1, 2, 1]))?;
    assert_eq!(back, s);
    println!("C is the permutation matrix of (1 2): {}", s.c.to_text().replace('\n', " / "));
    Ok(())
}
