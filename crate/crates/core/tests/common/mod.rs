#![allow(dead_code)]

use std::collections::BTreeSet;

use pseudo_acyclic::{IntMatrix, MutationSequence, QuiverMatrix};
use rand::seq::SliceRandom;
use rand::Rng;

/// Every skew-symmetric `n x n` matrix with entries in `{-1,0,1}`.
pub fn all_unit_skew(n: usize) -> impl Iterator<Item = QuiverMatrix> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let total = 3usize.pow(pairs.len() as u32);
    (0..total).map(move |mut code| {
        let mut m = IntMatrix::zeros(n, n);
        for &(i, j) in &pairs {
            let v = (code % 3) as i64 - 1;
            code /= 3;
            m.set(i, j, v);
            m.set(j, i, -v);
        }
        QuiverMatrix::new(m).expect("skew by construction")
    })
}

/// A random walk of `len` non-repeating labels.
pub fn random_walk(rng: &mut impl Rng, n: usize, len: usize) -> MutationSequence {
    let mut out = Vec::with_capacity(len);
    while out.len() < len {
        let k = rng.gen_range(1..=n);
        if n == 1 || out.last() != Some(&k) {
            out.push(k);
        }
    }
    MutationSequence::new(out)
}

/// A random member of the A_n mutation class: a random orientation of the
/// path, relabelled, then mutated along a random walk.
pub fn random_type_a(rng: &mut impl Rng, n: usize) -> QuiverMatrix {
    let mask = rng.gen_range(0..1u64 << (n - 1));
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    let sigma = pseudo_acyclic::Permutation::from_images(&images).unwrap();
    let mut b = QuiverMatrix::path_with_orientation(n, mask).permuted(&sigma);
    let len = rng.gen_range(0..3 * n);
    for k in random_walk(rng, n, len).iter() {
        b = b.mutate(k).unwrap();
    }
    b
}

/// `count` distinct quivers of size `n` from [`random_type_a`].
pub fn distinct_type_a(rng: &mut impl Rng, n: usize, count: usize) -> Vec<QuiverMatrix> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 100_000 {
        attempts += 1;
        let b = random_type_a(rng, n);
        if seen.insert(b.matrix().clone()) {
            out.push(b);
        }
    }
    out
}
