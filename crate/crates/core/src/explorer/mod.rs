//! Exchange-graph exploration and the verification harness.

mod bfs;
mod fuzz;
mod swap;

pub use bfs::{bfs_verify, BfsOptions, LabelledSeedRecord, Verdict, VerificationReport, Violation};
pub use fuzz::{check_closed_walk, random_walk_fuzz, FuzzReport, FuzzViolation};
pub use swap::{
    check_stable_walk, check_swap_effect, check_swap_lemma_forms, elementary_swap_sequence,
    FormCase, IndexForm, StableWalkReport, SwapEffectReport, SwapFormsReport,
};

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::gim::{GimRep, PiMatrix};
use crate::matrix::IntMatrix;
use crate::quiver::{MutationSequence, QuiverMatrix, Seed};
use crate::reflection::{conjugated_indices, ReflectionState};

/// Seed, reflection words and their images under one representation, moved
/// together along a mutation walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalkState {
    pub seed: Seed,
    pub reflections: ReflectionState,
    pub pi: Vec<PiMatrix>,
    /// Row `i` is `l_i = π(g_i)(α_i)`.
    pub l: IntMatrix,
}

impl WalkState {
    pub fn initial(b: &QuiverMatrix, rep: &GimRep) -> Self {
        WalkState {
            seed: Seed::initial(b.clone()),
            reflections: ReflectionState::initial(b.n()),
            pi: rep.generators().to_vec(),
            l: IntMatrix::identity(b.n()),
        }
    }

    /// One mutation. Matrices are updated as `π(r_i) <- π(r_k) π(r_i) π(r_k)`
    /// and `l_i <- π(r_k) l_i` alongside the words.
    pub fn step(&self, k: usize) -> Result<WalkState> {
        let reflections = self.reflections.mutate(&self.seed, k)?;
        let (seed, pi, l) = step_images(&self.seed, &self.pi, &self.l, k)?;
        Ok(WalkState { seed, reflections, pi, l })
    }

    pub fn run(&self, w: &MutationSequence) -> Result<WalkState> {
        w.iter().try_fold(self.clone(), |s, k| s.step(k))
    }

    pub fn pi_of(&self, i: usize) -> &PiMatrix {
        &self.pi[i - 1]
    }
}

/// The matrix part of one mutation step, without the group words.
pub(crate) fn step_images(
    seed: &Seed,
    pi: &[PiMatrix],
    l: &IntMatrix,
    k: usize,
) -> Result<(Seed, Vec<PiMatrix>, IntMatrix)> {
    let flags = conjugated_indices(seed, k)?;
    let pk = &pi[k - 1];
    let mut next_pi = pi.to_vec();
    let mut next_l = l.clone();
    for (i, flag) in flags.into_iter().enumerate() {
        if flag {
            next_pi[i] = pk.mul(&pi[i])?.mul(pk)?;
            for (col, x) in pk.mul_vec(l.row(i))?.into_iter().enumerate() {
                next_l.set(i, col, x);
            }
        }
    }
    Ok((seed.mutate(k)?, next_pi, next_l))
}

/// Which relation of the pair/triangle suite failed. Labels are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "relation", rename_all = "snake_case")]
pub enum Relation {
    /// `b_ij = 0` but `(π(r_i r_j))^2 != I`.
    Commuting { i: usize, j: usize },
    /// `|b_ij| = 1` but `(π(r_i r_j))^3 != I`.
    Braid { i: usize, j: usize },
    /// `b_ki = b_ij = b_jk = ±1` but `(π(r_j r_i r_j r_k))^2 != I`.
    Triangle { i: usize, j: usize, k: usize },
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::Commuting { i, j } => write!(f, "(pi(r_{i} r_{j}))^2 = I"),
            Relation::Braid { i, j } => write!(f, "(pi(r_{i} r_{j}))^3 = I"),
            Relation::Triangle { i, j, k } => write!(f, "(pi(r_{j} r_{i} r_{j} r_{k}))^2 = I"),
        }
    }
}

/// Checks the pair and triangle relations at one seed. Returns each failing
/// relation with the offending power.
pub fn relation_failures(b: &QuiverMatrix, pi: &[PiMatrix]) -> Result<Vec<(Relation, IntMatrix)>> {
    let n = b.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let bij = b.at(i, j).abs();
            if bij > 1 {
                continue;
            }
            let prod = pi[i].mul(&pi[j])?;
            let (exp, rel) = if bij == 0 {
                (2, Relation::Commuting { i: i + 1, j: j + 1 })
            } else {
                (3, Relation::Braid { i: i + 1, j: j + 1 })
            };
            let p = prod.pow(exp)?;
            if !p.is_identity() {
                out.push((rel, p));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i == j || j == k || i == k {
                    continue;
                }
                let e = b.at(k, i);
                if e.abs() != 1 || b.at(i, j) != e || b.at(j, k) != e {
                    continue;
                }
                let m = pi[j].mul(&pi[i])?.mul(&pi[j])?.mul(&pi[k])?;
                let sq = m.mul(&m)?;
                if !sq.is_identity() {
                    out.push((Relation::Triangle { i: i + 1, j: j + 1, k: k + 1 }, sq));
                }
            }
        }
    }
    Ok(out)
}
