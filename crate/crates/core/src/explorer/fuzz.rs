use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{relation_failures, Relation, WalkState};
use crate::error::{Error, Result};
use crate::gim::{GimRep, LinearOrdering};
use crate::matrix::IntMatrix;
use crate::quiver::{MutationSequence, QuiverMatrix};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FuzzViolation {
    /// `C` is a permutation matrix but `π(r_index)` is not the matching generator.
    Image {
        trial: usize,
        walk: MutationSequence,
        index: usize,
        expected: Vec<Vec<i64>>,
        found: Vec<Vec<i64>>,
    },
    /// A pair or triangle relation fails at the seed reached by `walk`.
    Relation {
        trial: usize,
        walk: MutationSequence,
        #[serde(flatten)]
        relation: Relation,
        power: Vec<Vec<i64>>,
    },
}

impl FuzzViolation {
    /// The walk up to and including the step where the check failed.
    pub fn walk(&self) -> &MutationSequence {
        match self {
            FuzzViolation::Image { walk, .. } | FuzzViolation::Relation { walk, .. } => walk,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub token: u64,
    pub trials: usize,
    pub length: usize,
    /// Steps at which `C` was the identity.
    pub identity_hits: usize,
    /// Steps at which `C` was a permutation matrix other than the identity.
    pub permutation_hits: usize,
    pub violations: Vec<FuzzViolation>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Row `k` of a permutation matrix is `e_m`; returns `m` for each row, or
/// `None` if `c` is not a permutation matrix.
fn permutation_rows(c: &IntMatrix) -> Option<Vec<usize>> {
    let n = c.rows();
    let mut out = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for k in 0..n {
        let row = c.row(k);
        let m = row.iter().position(|&x| x == 1)?;
        if row.iter().enumerate().any(|(t, &x)| t != m && x != 0) || seen[m] {
            return None;
        }
        seen[m] = true;
        out.push(m);
    }
    Some(out)
}

/// Random non-backtracking mutation walks. Whenever `C` becomes a
/// permutation matrix with row `k` equal to `e_m`, `π(r_k)` must equal
/// `π(s_m)`; the identity case is the closed-walk statement. The pair and
/// triangle relations are checked at every step. A trial stops at its first
/// violation.
pub fn random_walk_fuzz(
    b: &QuiverMatrix,
    ord: &LinearOrdering,
    length: usize,
    trials: usize,
    token: u64,
) -> Result<FuzzReport> {
    let n = b.n();
    let rep = GimRep::from_quiver(b, ord)?;
    let root = WalkState::initial(b, &rep);
    let mut rng = ChaCha8Rng::seed_from_u64(token);
    let mut report = FuzzReport {
        token,
        trials,
        length,
        identity_hits: 0,
        permutation_hits: 0,
        violations: Vec::new(),
    };
    for trial in 0..trials {
        let mut st = root.clone();
        let mut walk = MutationSequence::empty();
        let mut last = 0;
        for _ in 0..length {
            let k = if n == 1 {
                1
            } else {
                loop {
                    let k = rng.gen_range(1..=n);
                    if k != last {
                        break k;
                    }
                }
            };
            st = st.step(k)?;
            walk.push(k);
            last = k;
            if let Some((relation, power)) = relation_failures(&st.seed.b, &st.pi)?.into_iter().next() {
                report.violations.push(FuzzViolation::Relation {
                    trial,
                    walk: walk.clone(),
                    relation,
                    power: power.to_rows(),
                });
                break;
            }
            let Some(rows) = permutation_rows(&st.seed.c) else { continue };
            if rows.iter().enumerate().all(|(k, &m)| k == m) {
                report.identity_hits += 1;
            } else {
                report.permutation_hits += 1;
            }
            if let Some((k, &m)) =
                rows.iter().enumerate().find(|&(k, &m)| &st.pi[k] != rep.generator(m + 1))
            {
                report.violations.push(FuzzViolation::Image {
                    trial,
                    walk: walk.clone(),
                    index: k + 1,
                    expected: rep.generator(m + 1).to_rows(),
                    found: st.pi[k].to_rows(),
                });
                break;
            }
        }
    }
    Ok(report)
}

/// For a walk `w` with `C^w = I`, returns whether every `π(r_k^w)` equals
/// `π(s_k)`.
pub fn check_closed_walk(b: &QuiverMatrix, ord: &LinearOrdering, w: &MutationSequence) -> Result<bool> {
    w.validate(b.n())?;
    let rep = GimRep::from_quiver(b, ord)?;
    let st = WalkState::initial(b, &rep).run(w)?;
    if !st.seed.c.is_identity() {
        return Err(Error::Precondition(format!("walk {w} does not return C to the identity")));
    }
    Ok(st.pi.as_slice() == rep.generators())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_walks_pass() {
        let r = random_walk_fuzz(&QuiverMatrix::path(3), &LinearOrdering::identity(3), 0, 5, 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.identity_hits, 0);
    }

    #[test]
    fn double_pentagon_closes() {
        let w: MutationSequence = "1,2,1,2,1,2,1,2,1,2".parse().unwrap();
        assert!(check_closed_walk(&QuiverMatrix::path(2), &LinearOrdering::identity(2), &w).unwrap());
        let open: MutationSequence = "1,2".parse().unwrap();
        assert!(check_closed_walk(&QuiverMatrix::path(2), &LinearOrdering::identity(2), &open).is_err());
    }

    #[test]
    fn good_ordering_survives_fuzzing() {
        let t = QuiverMatrix::oriented_triangle();
        let r = random_walk_fuzz(&t, &"1,3,2".parse().unwrap(), 40, 200, 7).unwrap();
        assert!(r.passed(), "{:?}", r.violations.first());
        assert!(r.identity_hits + r.permutation_hits > 0);
    }

    #[test]
    fn bad_ordering_is_caught() {
        let t = QuiverMatrix::oriented_triangle();
        let r = random_walk_fuzz(&t, &"1,2,3".parse().unwrap(), 40, 200, 7).unwrap();
        let v = r.violations.first().expect("violation");
        let FuzzViolation::Relation { walk, power, .. } = v else { panic!("{v:?}") };
        let rep = GimRep::from_quiver(&t, &"1,2,3".parse().unwrap()).unwrap();
        let st = WalkState::initial(&t, &rep).run(walk).unwrap();
        let fails = relation_failures(&st.seed.b, &st.pi).unwrap();
        assert_eq!(&fails[0].1.to_rows(), power);
    }

    #[test]
    fn token_reproducible() {
        let b = QuiverMatrix::path(4);
        let o = LinearOrdering::identity(4);
        assert_eq!(
            random_walk_fuzz(&b, &o, 30, 20, 99).unwrap(),
            random_walk_fuzz(&b, &o, 30, 20, 99).unwrap()
        );
    }
}
