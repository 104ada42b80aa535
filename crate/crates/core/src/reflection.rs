//! Mutated reflections `r_i = g_i s_i g_i^{-1}` and their conjugators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quiver::{check_label, MutationSequence, Seed};
use crate::word::GroupWord;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ReflectionState {
    reflections: Vec<GroupWord>,
    conjugators: Vec<GroupWord>,
}

/// Which reflections a mutation at `k` conjugates: index `i` (0-based) is
/// flagged iff `b_ik` is nonzero with the same sign as `c_k`.
pub(crate) fn conjugated_indices(seed: &Seed, k: usize) -> Result<Vec<bool>> {
    let kk = check_label(k, seed.n())?;
    let sign = seed.c_sign(k)?.as_i64();
    Ok((0..seed.n()).map(|i| seed.b.at(i, kk).signum() == sign).collect())
}

impl ReflectionState {
    /// `r_i = s_i`, `g_i = e`.
    pub fn initial(n: usize) -> Self {
        ReflectionState {
            reflections: (1..=n).map(GroupWord::generator).collect(),
            conjugators: vec![GroupWord::identity(); n],
        }
    }

    /// Builds a state from conjugators alone; reflections are derived.
    pub fn from_conjugators(conjugators: Vec<GroupWord>) -> Self {
        let reflections = conjugators
            .iter()
            .enumerate()
            .map(|(i, g)| g.conjugate(&GroupWord::generator(i + 1)))
            .collect();
        ReflectionState { reflections, conjugators }
    }

    pub fn n(&self) -> usize {
        self.reflections.len()
    }

    /// `r_i` for a 1-based label.
    pub fn reflection(&self, i: usize) -> &GroupWord {
        &self.reflections[i - 1]
    }

    /// `g_i` for a 1-based label.
    pub fn conjugator(&self, i: usize) -> &GroupWord {
        &self.conjugators[i - 1]
    }

    pub fn reflections(&self) -> &[GroupWord] {
        &self.reflections
    }

    pub fn conjugators(&self) -> &[GroupWord] {
        &self.conjugators
    }

    pub fn check_consistency(&self) -> Result<()> {
        for (i, (r, g)) in self.reflections.iter().zip(&self.conjugators).enumerate() {
            if *r != g.conjugate(&GroupWord::generator(i + 1)) {
                return Err(Error::Invariant(format!(
                    "r_{} = {r} is not g s g^-1 for g = {g}",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// Mutation of reflections at `k`, read against `seed`, the seed *before*
    /// mutating at `k`: `r_i <- r_k r_i r_k` and `g_i <- r_k g_i` whenever
    /// `b_ik c_k > 0`.
    pub fn mutate(&self, seed: &Seed, k: usize) -> Result<ReflectionState> {
        if seed.n() != self.n() {
            return Err(Error::Dimension(format!(
                "seed has {} vertices, reflection state {}",
                seed.n(),
                self.n()
            )));
        }
        let flags = conjugated_indices(seed, k)?;
        let rk = self.reflections[k - 1].clone();
        let mut out = self.clone();
        for (i, flag) in flags.into_iter().enumerate() {
            if flag {
                out.reflections[i] = rk.mul(&self.reflections[i]).mul(&rk);
                out.conjugators[i] = rk.mul(&self.conjugators[i]);
            }
        }
        out.check_consistency()?;
        Ok(out)
    }
}

pub fn mutate_reflections(r: &ReflectionState, s: &Seed, k: usize) -> Result<ReflectionState> {
    r.mutate(s, k)
}

/// Interleaved fold: at each step the condition is read from the current
/// seed, the reflections are updated, then the seed is mutated.
pub fn apply_sequence_with_reflections(
    seed: &Seed,
    r: &ReflectionState,
    w: &MutationSequence,
) -> Result<(Seed, ReflectionState)> {
    w.iter().try_fold((seed.clone(), r.clone()), |(s, st), k| {
        let st = st.mutate(&s, k)?;
        Ok((s.mutate(k)?, st))
    })
}
