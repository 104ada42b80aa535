//! Elementary swaps and stable walks on A3.

use pseudo_acyclic::{
    check_stable_walk, check_swap_effect, check_swap_lemma_forms, elementary_swap_sequence,
    build_pseudo_acyclic_ordering, MutationSequence, QuiverMatrix, Seed,
};

fn main() -> pseudo_acyclic::Result<()> {
    let b = QuiverMatrix::path(3);
    let ord = build_pseudo_acyclic_ordering(&b)?;
    let p: MutationSequence = "1,2".parse()?;

    let v = elementary_swap_sequence(&p, 1, 2, &Seed::initial(b.clone()))?;
    let end = Seed::initial(b.clone()).apply(&v)?;
    println!("[1,2]_p = {v}\nC at the end =\n{}", end.c.to_text());

    let effect = check_swap_effect(&b, &ord, &p, 1, 2)?;
    println!("B transposed: {}, C transposed: {}, pi mismatches: {:?}", effect.b_transposed, effect.c_transposed, effect.pi_mismatches);

    let forms = check_swap_lemma_forms(&b, &ord, &p, 1, 2)?;
    for f in &forms.forms {
        println!("index {} case {:?} matched {:?}", f.index, f.case, f.matched);
    }

    // b_13 = 0 at the start, so the loop [1,3,1,3] is stable.
    let e = MutationSequence::empty();
    let walk = check_stable_walk(&b, &ord, &e, 1, 3, &e, &"2,1".parse()?)?;
    println!("stable walk {} vs {}: passed {}", walk.with_loop, walk.without_loop, walk.passed());
    Ok(())
}
