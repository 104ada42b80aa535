//! Recognises type A quivers and compares against the exhaustive oracle.

use pseudo_acyclic::{an_membership_oracle, validate_type_an, QuiverMatrix};

fn main() -> pseudo_acyclic::Result<()> {
    let cases = [
        ("path", QuiverMatrix::path(5)),
        ("oriented triangle", QuiverMatrix::oriented_triangle()),
        ("acyclic triangle", QuiverMatrix::from_arrows(3, &[(1, 2), (2, 3), (1, 3)])?),
        ("square", QuiverMatrix::from_arrows(4, &[(1, 2), (2, 3), (3, 4), (4, 1)])?),
        ("D4 star", QuiverMatrix::from_arrows(4, &[(1, 2), (1, 3), (1, 4)])?),
    ];
    for (name, b) in cases {
        let rep = validate_type_an(&b);
        let oracle = an_membership_oracle(&b, 6)?;
        let why: Vec<String> = rep.reasons.iter().map(|r| r.to_string()).collect();
        println!("{name:18} accepted {:5} oracle {:5} m={} q={} {}", rep.accepted, oracle,
            rep.triangle_count(), rep.outside_count(), why.join("; "));
    }
    Ok(())
}
