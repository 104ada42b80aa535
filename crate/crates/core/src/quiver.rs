//! Exchange matrices, seeds and the mutation rule.
//!
//! Vertex labels are 1-based everywhere in the public API.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{parse_int_row, IntMatrix};

pub(crate) fn check_label(label: usize, n: usize) -> Result<usize> {
    if label == 0 || label > n {
        Err(Error::LabelOutOfRange { label, n })
    } else {
        Ok(label - 1)
    }
}

fn sgn(x: i64) -> i64 {
    x.signum()
}

/// Mutation of an `n x n` or `n x 2n` integer matrix at label `k`.
///
/// Entry `(i,j)` is negated when `i = k` or `j = k`; otherwise it becomes
/// `m_ij + sgn(m_ik) * max(m_ik * m_kj, 0)`. Only the first `n` columns can
/// coincide with `k`, so for an extended matrix `[B | C]` the `C` block is
/// touched by the row rule alone.
pub fn mutate_matrix(m: &IntMatrix, k: usize) -> Result<IntMatrix> {
    let n = m.rows();
    if m.cols() != n && m.cols() != 2 * n {
        return Err(Error::Dimension(format!(
            "mutation needs an n x n or n x 2n matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let k = check_label(k, n)?;
    let mut out = m.clone();
    for i in 0..n {
        for j in 0..m.cols() {
            let v = if i == k || j == k {
                m.get(i, j).checked_neg().ok_or(Error::Overflow("mutation"))?
            } else {
                let mik = m.get(i, k);
                let prod = mik.checked_mul(m.get(k, j)).ok_or(Error::Overflow("mutation"))?;
                let delta = sgn(mik).checked_mul(prod.max(0)).ok_or(Error::Overflow("mutation"))?;
                m.get(i, j).checked_add(delta).ok_or(Error::Overflow("mutation"))?
            };
            out.set(i, j, v);
        }
    }
    Ok(out)
}

/// A skew-symmetric integer exchange matrix, i.e. a quiver without loops or
/// 2-cycles. `b_ij > 0` means `b_ij` arrows from `i` to `j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuiverMatrix(IntMatrix);

impl QuiverMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::Dimension(format!("exchange matrix is {}x{}", m.rows(), m.cols())));
        }
        if m.rows() == 0 {
            return Err(Error::Dimension("exchange matrix needs at least one vertex".into()));
        }
        let n = m.rows();
        for i in 0..n {
            for j in i..n {
                let (bij, bji) = (m.get(i, j), m.get(j, i));
                if Some(bij) != bji.checked_neg() || (i == j && bij != 0) {
                    return Err(Error::NotSkewSymmetric { i: i + 1, j: j + 1, bij, bji });
                }
            }
        }
        Ok(QuiverMatrix(m))
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    /// Builds a quiver from arrows `(from, to)` given with 1-based labels.
    /// Repeated arrows accumulate.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut m = IntMatrix::zeros(n, n);
        for &(a, b) in arrows {
            let (i, j) = (check_label(a, n)?, check_label(b, n)?);
            if i == j {
                return Err(Error::Precondition(format!("loop at vertex {a}")));
            }
            m.set(i, j, m.get(i, j) + 1);
            m.set(j, i, m.get(j, i) - 1);
        }
        Self::new(m)
    }

    /// The linearly oriented path `1 -> 2 -> ... -> n`.
    pub fn path(n: usize) -> Self {
        let arrows: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Self::from_arrows(n, &arrows).expect("path quiver is well formed")
    }

    /// Path `1 - 2 - ... - n` with edge `(i, i+1)` pointing forward iff bit
    /// `i-1` of `mask` is set.
    pub fn path_with_orientation(n: usize, mask: u64) -> Self {
        let arrows: Vec<_> = (1..n)
            .map(|i| if mask >> (i - 1) & 1 == 1 { (i, i + 1) } else { (i + 1, i) })
            .collect();
        Self::from_arrows(n, &arrows).expect("path quiver is well formed")
    }

    /// The oriented triangle `1 -> 2 -> 3 -> 1`.
    pub fn oriented_triangle() -> Self {
        Self::from_arrows(3, &[(1, 2), (2, 3), (3, 1)]).expect("triangle is well formed")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.0.rows()
    }

    /// Entry `b_ij` for 1-based labels.
    pub fn b(&self, i: usize, j: usize) -> i64 {
        self.0.get(i - 1, j - 1)
    }

    #[inline]
    pub(crate) fn at(&self, i: usize, j: usize) -> i64 {
        self.0.get(i, j)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn has_unit_entries(&self) -> bool {
        self.0.as_slice().iter().all(|x| x.abs() <= 1)
    }

    pub fn mutate(&self, k: usize) -> Result<Self> {
        Ok(QuiverMatrix(mutate_matrix(&self.0, k)?))
    }

    /// Relabels vertices: the result has `b'_{σ(i) σ(j)} = b_ij`.
    pub fn permuted(&self, sigma: &Permutation) -> Self {
        let n = self.n();
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(sigma.images[i], sigma.images[j], self.at(i, j));
            }
        }
        QuiverMatrix(m)
    }

    /// Neighbour lists of the underlying simple graph (0-based).
    pub(crate) fn adjacency(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        (0..n).map(|i| (0..n).filter(|&j| self.at(i, j) != 0).collect()).collect()
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Parses the quiver text format: optional `#` comment lines, a line with
    /// `n`, then `n` rows of `n` space-separated integers.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end()))
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let (nline, first) =
            lines.next().ok_or_else(|| Error::parse(1, 1, "missing vertex count"))?;
        let n: usize = first.trim().parse().map_err(|e| {
            Error::parse(nline, 1, format!("vertex count {:?} is not a positive integer: {e}", first.trim()))
        })?;
        if n == 0 {
            return Err(Error::parse(nline, 1, "vertex count must be at least 1"));
        }
        let mut rows = Vec::with_capacity(n);
        let mut last_line = nline;
        for (lineno, line) in lines {
            if rows.len() == n {
                return Err(Error::parse(lineno, 1, format!("unexpected data after {n} matrix rows")));
            }
            let row = parse_int_row(line, lineno)?;
            if row.len() != n {
                return Err(Error::parse(
                    lineno,
                    1,
                    format!("expected {n} entries, found {}", row.len()),
                ));
            }
            rows.push(row);
            last_line = lineno;
        }
        if rows.len() < n {
            return Err(Error::parse(last_line + 1, 1, format!("expected {n} rows, found {}", rows.len())));
        }
        Self::from_rows(rows)
    }

    /// Serializes to the quiver text format (no comments).
    pub fn to_text(&self) -> String {
        format!("{}\n{}", self.n(), self.0.to_text())
    }
}

impl fmt::Debug for QuiverMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuiverMatrix({:?})", self.0)
    }
}

impl FromStr for QuiverMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Sign of a sign-coherent c-vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

/// Sign of a nonzero sign-coherent integer vector.
pub fn vector_sign(v: &[i64]) -> Option<Sign> {
    if v.iter().all(|&x| x == 0) {
        None
    } else if v.iter().all(|&x| x >= 0) {
        Some(Sign::Positive)
    } else if v.iter().all(|&x| x <= 0) {
        Some(Sign::Negative)
    } else {
        None
    }
}

/// An exchange matrix together with its C-matrix, whose rows are the
/// c-vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed {
    pub b: QuiverMatrix,
    pub c: IntMatrix,
}

impl Seed {
    /// The seed `[B | I]`.
    pub fn initial(b: QuiverMatrix) -> Self {
        let n = b.n();
        Seed { b, c: IntMatrix::identity(n) }
    }

    pub fn n(&self) -> usize {
        self.b.n()
    }

    pub fn extended(&self) -> IntMatrix {
        self.b.matrix().hstack(&self.c).expect("blocks share the row count")
    }

    /// Mutates `[B | C]` at `k`. The output C-matrix is checked for row sign
    /// coherence; a failure there is an internal error.
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let n = self.n();
        let m = mutate_matrix(&self.extended(), k)?;
        let b = QuiverMatrix::new(m.column_block(0, n))
            .map_err(|e| Error::Invariant(format!("mutation broke skew-symmetry: {e}")))?;
        let out = Seed { b, c: m.column_block(n, 2 * n) };
        out.check_sign_coherence()?;
        Ok(out)
    }

    pub fn check_sign_coherence(&self) -> Result<()> {
        for i in 0..self.n() {
            if vector_sign(self.c.row(i)).is_none() {
                return Err(Error::Invariant(format!(
                    "c-vector {} = {:?} is not sign-coherent",
                    i + 1,
                    self.c.row(i)
                )));
            }
        }
        Ok(())
    }

    pub fn apply(&self, w: &MutationSequence) -> Result<Seed> {
        w.iter().try_fold(self.clone(), |s, k| s.mutate(k))
    }

    /// Sign of the c-vector `c_k`.
    pub fn c_sign(&self, k: usize) -> Result<Sign> {
        let idx = check_label(k, self.n())?;
        vector_sign(self.c.row(idx)).ok_or_else(|| {
            Error::Invariant(format!("c-vector {k} = {:?} is zero or mixed-sign", self.c.row(idx)))
        })
    }
}

pub fn mutate_seed(s: &Seed, k: usize) -> Result<Seed> {
    s.mutate(k)
}

pub fn apply_sequence(s: &Seed, w: &MutationSequence) -> Result<Seed> {
    s.apply(w)
}

pub fn c_sign(s: &Seed, k: usize) -> Result<Sign> {
    s.c_sign(k)
}

/// An ordered list of 1-based mutation labels.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MutationSequence(Vec<usize>);

impl MutationSequence {
    pub fn empty() -> Self {
        MutationSequence(Vec::new())
    }

    pub fn new(labels: Vec<usize>) -> Self {
        MutationSequence(labels)
    }

    /// Like [`MutationSequence::new`] but checks every label against `n`.
    pub fn checked(labels: Vec<usize>, n: usize) -> Result<Self> {
        for &l in &labels {
            check_label(l, n)?;
        }
        Ok(MutationSequence(labels))
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        self.0.iter().try_for_each(|&l| check_label(l, n).map(|_| ()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn push(&mut self, k: usize) {
        self.0.push(k);
    }

    pub fn then(&self, other: &MutationSequence) -> MutationSequence {
        MutationSequence(self.0.iter().chain(&other.0).copied().collect())
    }

    /// `p^{-1}`: the labels in reverse order.
    pub fn inverse(&self) -> MutationSequence {
        MutationSequence(self.0.iter().rev().copied().collect())
    }

    /// Every label replaced by its image under `sigma`.
    pub fn relabelled(&self, sigma: &Permutation) -> MutationSequence {
        MutationSequence(self.0.iter().map(|&k| sigma.apply(k)).collect())
    }

    /// Reverse order and relabel by `sigma`.
    pub fn reversed_relabelled(&self, sigma: &Permutation) -> MutationSequence {
        self.inverse().relabelled(sigma)
    }
}

impl From<Vec<usize>> for MutationSequence {
    fn from(v: Vec<usize>) -> Self {
        MutationSequence(v)
    }
}

impl fmt::Display for MutationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for MutationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts `i,j,k`, optionally wrapped in brackets; the empty string or `[]`
/// is the empty sequence.
impl FromStr for MutationSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if body.is_empty() {
            return Ok(MutationSequence::empty());
        }
        let mut column = 1;
        let mut labels = Vec::new();
        for tok in body.split(',') {
            let t = tok.trim();
            let v: usize = t
                .parse()
                .map_err(|_| Error::parse(1, column, format!("bad mutation label {t:?}")))?;
            labels.push(v);
            column += tok.len() + 1;
        }
        Ok(MutationSequence(labels))
    }
}

/// A bijection on `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// From 1-based images `[σ(1), ..., σ(n)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            let i = check_label(x, n)?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::Precondition(format!("{x} appears twice in permutation")));
            }
            out.push(i);
        }
        Ok(Permutation { images: out })
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        let (a, b) = (check_label(i, n)?, check_label(j, n)?);
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] + 1
    }

    /// Permutation matrix with a 1 in row `σ(j)`, column `j`.
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::permutation(&self.images)
    }
}
