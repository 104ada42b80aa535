use serde::Serialize;

use super::WalkState;
use crate::error::{Error, Result};
use crate::gim::{GimRep, LinearOrdering, PiMatrix};
use crate::matrix::IntMatrix;
use crate::quiver::{check_label, MutationSequence, Permutation, QuiverMatrix, Seed};

/// `p ++ [i,j,i,j,i] ++ reverse(p)` with the tail relabelled by `(i j)`.
pub fn elementary_swap_sequence(
    p: &MutationSequence,
    i: usize,
    j: usize,
    s0: &Seed,
) -> Result<MutationSequence> {
    let n = s0.n();
    check_pair(i, j, n)?;
    p.validate(n)?;
    let sp = s0.apply(p)?;
    let bij = sp.b.b(i, j);
    if bij.abs() != 1 {
        return Err(Error::Precondition(format!(
            "elementary swap needs |b_{i}{j}| = 1 after {p}, found {bij}"
        )));
    }
    let sigma = Permutation::transposition(n, i, j)?;
    Ok(p.then(&MutationSequence::new(vec![i, j, i, j, i])).then(&p.reversed_relabelled(&sigma)))
}

fn check_pair(i: usize, j: usize, n: usize) -> Result<()> {
    check_label(i, n)?;
    check_label(j, n)?;
    if i == j {
        return Err(Error::Precondition(format!("swap pair needs distinct labels, got ({i},{i})")));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwapEffectReport {
    pub sequence: MutationSequence,
    pub b_transposed: bool,
    pub c_transposed: bool,
    /// Labels `k` with `π(r_k^v) != π(s_(ij)k)`.
    pub pi_mismatches: Vec<usize>,
}

impl SwapEffectReport {
    pub fn passed(&self) -> bool {
        self.b_transposed && self.c_transposed && self.pi_mismatches.is_empty()
    }
}

/// Runs `[i,j]_p` from `[B | I]` and checks that it acts as the transposition
/// of labels `i` and `j`.
pub fn check_swap_effect(
    b: &QuiverMatrix,
    ord: &LinearOrdering,
    p: &MutationSequence,
    i: usize,
    j: usize,
) -> Result<SwapEffectReport> {
    let n = b.n();
    let start = Seed::initial(b.clone());
    let v = elementary_swap_sequence(p, i, j, &start)?;
    let rep = GimRep::from_quiver(b, ord)?;
    let end = WalkState::initial(b, &rep).run(&v)?;
    let sigma = Permutation::transposition(n, i, j)?;
    let pi_mismatches = (1..=n)
        .filter(|&k| end.pi_of(k) != rep.generator(sigma.apply(k)))
        .collect();
    Ok(SwapEffectReport {
        b_transposed: end.seed.b == b.permuted(&sigma),
        c_transposed: end.seed.c == sigma.matrix(),
        pi_mismatches,
        sequence: v,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StableWalkReport {
    pub with_loop: MutationSequence,
    pub without_loop: MutationSequence,
    pub same_c: bool,
    pub pi_mismatches: Vec<usize>,
}

impl StableWalkReport {
    pub fn passed(&self) -> bool {
        self.same_c && self.pi_mismatches.is_empty()
    }
}

/// Compares `u ++ p ++ [i,j,i,j] ++ p⁻¹ ++ w` against `u ++ w`.
#[allow(clippy::too_many_arguments)]
pub fn check_stable_walk(
    b: &QuiverMatrix,
    ord: &LinearOrdering,
    p: &MutationSequence,
    i: usize,
    j: usize,
    u: &MutationSequence,
    w: &MutationSequence,
) -> Result<StableWalkReport> {
    let n = b.n();
    check_pair(i, j, n)?;
    for s in [p, u, w] {
        s.validate(n)?;
    }
    let rep = GimRep::from_quiver(b, ord)?;
    let root = WalkState::initial(b, &rep);
    let at_u = root.run(u)?;
    let at_up = at_u.run(p)?;
    let bij = at_up.seed.b.b(i, j);
    if bij != 0 {
        return Err(Error::Precondition(format!(
            "stable walk needs b_{i}{j} = 0 after {}, found {bij}",
            u.then(p)
        )));
    }
    let with_loop = u
        .then(p)
        .then(&MutationSequence::new(vec![i, j, i, j]))
        .then(&p.inverse())
        .then(w);
    let without_loop = u.then(w);
    let long = root.run(&with_loop)?;
    let short = at_u.run(w)?;
    Ok(StableWalkReport {
        same_c: long.seed.c == short.seed.c,
        pi_mismatches: (0..n).filter(|&k| long.pi[k] != short.pi[k]).map(|k| k + 1).collect(),
        with_loop,
        without_loop,
    })
}

/// Which closed-form family applies to one index after `p ++ [i,j,i,j,i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FormCase {
    /// The index `i` itself.
    I,
    /// The index `j` itself.
    J,
    /// `b_ki = 0 = b_kj`.
    A,
    /// `b_ki = 0`, `b_kj != 0`.
    B,
    /// `b_ki != 0`, `b_kj = 0`.
    C,
    /// `b_ki != 0`, `b_kj != 0`.
    D,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexForm {
    pub index: usize,
    pub case: FormCase,
    /// Name of the first candidate equal to the computed image.
    pub matched: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwapFormsReport {
    pub prefix: MutationSequence,
    pub i: usize,
    pub j: usize,
    pub forms: Vec<IndexForm>,
}

impl SwapFormsReport {
    pub fn unmatched(&self) -> impl Iterator<Item = &IndexForm> {
        self.forms.iter().filter(|f| f.matched.is_none())
    }

    pub fn passed(&self) -> bool {
        self.unmatched().next().is_none()
    }
}

fn product(ms: &[&IntMatrix]) -> Result<IntMatrix> {
    let n = ms[0].rows();
    ms.iter().try_fold(IntMatrix::identity(n), |acc, m| acc.mul(m))
}

/// Matches `π(r_i)`, `π(r_j)` and every `π(r_k)` after `p ++ [i,j,i,j,i]`
/// against the closed forms written in the images `P_x = π(r_x^p)`.
pub fn check_swap_lemma_forms(
    b: &QuiverMatrix,
    ord: &LinearOrdering,
    p: &MutationSequence,
    i: usize,
    j: usize,
) -> Result<SwapFormsReport> {
    let n = b.n();
    check_pair(i, j, n)?;
    p.validate(n)?;
    let rep = GimRep::from_quiver(b, ord)?;
    let at_p = WalkState::initial(b, &rep).run(p)?;
    let bij = at_p.seed.b.b(i, j);
    if bij.abs() != 1 {
        return Err(Error::Precondition(format!(
            "swap forms need |b_{i}{j}| = 1 after {p}, found {bij}"
        )));
    }
    let after = at_p.run(&MutationSequence::new(vec![i, j, i, j, i]))?;

    let pi = at_p.pi_of(i);
    let pj = at_p.pi_of(j);
    let ij3 = pi.mul(pj)?.pow(3)?;
    let ji3 = pj.mul(pi)?.pow(3)?;

    let pick = |found: &PiMatrix, cands: Vec<(&str, IntMatrix)>| -> Option<String> {
        cands.into_iter().find(|(_, m)| m == found).map(|(name, _)| name.to_string())
    };

    let mut forms = Vec::with_capacity(n);
    for k in 1..=n {
        let found = after.pi_of(k);
        let (case, cands) = if k == i {
            (FormCase::I, vec![("(PiPj)^3 Pj", ij3.mul(pj)?), ("(PjPi)^3 Pj", ji3.mul(pj)?)])
        } else if k == j {
            (FormCase::J, vec![("(PiPj)^3 Pi", ij3.mul(pi)?), ("(PjPi)^3 Pi", ji3.mul(pi)?)])
        } else {
            let pk = at_p.pi_of(k);
            let (bki, bkj) = (at_p.seed.b.b(k, i), at_p.seed.b.b(k, j));
            match (bki != 0, bkj != 0) {
                (false, false) => (FormCase::A, vec![("Pk", pk.clone())]),
                (ci, cj) if ci != cj => {
                    let (case, other, sq) = if cj {
                        (FormCase::B, pi, "(PiPk)^2 Pk")
                    } else {
                        (FormCase::C, pj, "(PjPk)^2 Pk")
                    };
                    let sq_m = other.mul(pk)?.pow(2)?.mul(pk)?;
                    let conj = if cj {
                        "(PiPj)^3 (PiPk)^2 Pk (PjPi)^3"
                    } else {
                        "(PiPj)^3 (PjPk)^2 Pk (PjPi)^3"
                    };
                    (
                        case,
                        vec![
                            ("Pk", pk.clone()),
                            ("(PiPj)^3 Pk (PjPi)^3", product(&[&ij3, pk, &ji3])?),
                            ("(PjPi)^3 Pk (PiPj)^3", product(&[&ji3, pk, &ij3])?),
                            (sq, sq_m.clone()),
                            (conj, product(&[&ij3, &sq_m, &ji3])?),
                        ],
                    )
                }
                _ => (
                    FormCase::D,
                    vec![
                        ("Pk", pk.clone()),
                        ("(PjPiPjPk)^2 Pk", product(&[pj, pi, pj, pk])?.pow(2)?.mul(pk)?),
                    ],
                ),
            }
        };
        forms.push(IndexForm { index: k, case, matched: pick(found, cands) });
    }
    Ok(SwapFormsReport { prefix: p.clone(), i, j, forms })
}
