//! Shows that ordering choice matters on the oriented triangle.

use pseudo_acyclic::{GimRep, LinearOrdering, MutationSequence, QuiverMatrix, WalkState};

fn main() -> pseudo_acyclic::Result<()> {
    let b = QuiverMatrix::oriented_triangle();
    // After mutating at 2 the vertices 1 and 3 are disconnected.
    let w = MutationSequence::new(vec![2]);
    println!("B after mu_2:\n{}", b.mutate(2)?.to_text());
    let mut identity = Vec::new();
    let mut other = Vec::new();
    for ord in LinearOrdering::all(3) {
        let rep = GimRep::from_quiver(&b, &ord)?;
        let st = WalkState::initial(&b, &rep).run(&w)?;
        let sq = st.pi_of(1).mul(st.pi_of(3))?.pow(2)?;
        if sq.is_identity() {
            identity.push(ord.to_string());
        } else {
            println!("ordering {ord}: (pi(r_1 r_3))^2 =\n{}", sq.to_text());
            other.push(ord.to_string());
        }
    }
    println!("identity: {}", identity.join(" | "));
    println!("not identity: {}", other.join(" | "));
    Ok(())
}
