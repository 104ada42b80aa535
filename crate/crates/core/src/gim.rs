//! Generalized intersection matrices built from a linear ordering, and the
//! integer reflection representation of the universal Coxeter group.
//!
//! Convention: `π(s_i)` acts on coordinate columns of `Γ = ⊕ Z α_i` and sends
//! `e_j` to `e_j - a_ji e_i`. As a matrix this is `I + A_i`, where `A_i` has
//! `(i,k)` entry `-a_ki` and zeros elsewhere.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::quiver::{check_label, QuiverMatrix};
use crate::reflection::ReflectionState;
use crate::word::GroupWord;

pub type PiMatrix = IntMatrix;

/// A total order `≺` on `{1..n}`, stored as the ascending chain.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearOrdering {
    chain: Vec<usize>,
    rank: Vec<usize>,
}

impl LinearOrdering {
    /// From the `≺`-ascending list of 1-based labels.
    pub fn from_chain(chain: Vec<usize>) -> Result<Self> {
        let n = chain.len();
        let mut rank = vec![usize::MAX; n];
        for (pos, &label) in chain.iter().enumerate() {
            let i = check_label(label, n).map_err(|_| {
                Error::Ordering(format!("label {label} out of range for an ordering of {n} labels"))
            })?;
            if rank[i] != usize::MAX {
                return Err(Error::Ordering(format!("label {label} appears twice")));
            }
            rank[i] = pos;
        }
        Ok(LinearOrdering { chain, rank })
    }

    /// `1 ≺ 2 ≺ ... ≺ n`.
    pub fn identity(n: usize) -> Self {
        Self::from_chain((1..=n).collect()).expect("identity chain is a permutation")
    }

    pub fn n(&self) -> usize {
        self.chain.len()
    }

    pub fn chain(&self) -> &[usize] {
        &self.chain
    }

    /// Position of a label in the chain (0-based).
    pub fn rank(&self, label: usize) -> usize {
        self.rank[label - 1]
    }

    /// `i ≺ j`.
    pub fn precedes(&self, i: usize, j: usize) -> bool {
        self.rank(i) < self.rank(j)
    }

    /// All `n!` orderings in lexicographic order of their chains.
    pub fn all(n: usize) -> impl Iterator<Item = LinearOrdering> {
        use itertools::Itertools;
        (1..=n)
            .permutations(n)
            .map(|c| LinearOrdering::from_chain(c).expect("permutation"))
    }
}

impl fmt::Display for LinearOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.chain.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for LinearOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.chain.iter().map(usize::to_string).collect();
        f.write_str(&parts.join("≺"))
    }
}

impl FromStr for LinearOrdering {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let chain = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Ordering(format!("bad label {:?} in ordering {s:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        LinearOrdering::from_chain(chain)
    }
}

/// A generalized intersection matrix: `a_ii = 2`, and `a_ij`, `a_ji` share
/// their sign (both positive, both negative, or both zero).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Gim(IntMatrix);

impl Gim {
    pub fn new(a: IntMatrix) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Dimension("GIM must be square".into()));
        }
        let n = a.rows();
        for i in 0..n {
            if a.get(i, i) != 2 {
                return Err(Error::Invariant(format!("a_{0}{0} = {1}, expected 2", i + 1, a.get(i, i))));
            }
            for j in i + 1..n {
                if a.get(i, j).signum() != a.get(j, i).signum() {
                    return Err(Error::Invariant(format!(
                        "a_{}{} = {} and a_{}{} = {} differ in sign",
                        i + 1,
                        j + 1,
                        a.get(i, j),
                        j + 1,
                        i + 1,
                        a.get(j, i)
                    )));
                }
            }
        }
        Ok(Gim(a))
    }

    pub fn n(&self) -> usize {
        self.0.rows()
    }

    /// `a_ij` for 1-based labels.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.0.get(i - 1, j - 1)
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }
}

/// `a_ij = b_ij` if `i ≺ j`, `2` on the diagonal, `-b_ij` if `i ≻ j`.
pub fn build_gim(b: &QuiverMatrix, ord: &LinearOrdering) -> Result<Gim> {
    let n = b.n();
    if ord.n() != n {
        return Err(Error::Dimension(format!("ordering of {} labels for {n} vertices", ord.n())));
    }
    let mut a = IntMatrix::zeros(n, n);
    for i in 1..=n {
        for j in 1..=n {
            let v = if i == j {
                2
            } else if ord.precedes(i, j) {
                b.b(i, j)
            } else {
                -b.b(i, j)
            };
            a.set(i - 1, j - 1, v);
        }
    }
    Gim::new(a)
}

/// `π(s_i)`: column `j` is `e_j - a_ji e_i`.
pub fn pi_generator(a: &Gim, i: usize) -> Result<PiMatrix> {
    let n = a.n();
    let ii = check_label(i, n)?;
    let mut m = IntMatrix::identity(n);
    for k in 0..n {
        m.set(ii, k, m.get(ii, k) - a.matrix().get(k, ii));
    }
    Ok(m)
}

/// The representation attached to one GIM, with generator images cached.
#[derive(Clone, Debug)]
pub struct GimRep {
    gim: Gim,
    generators: Vec<PiMatrix>,
}

impl GimRep {
    pub fn new(gim: Gim) -> Self {
        let generators = (1..=gim.n())
            .map(|i| pi_generator(&gim, i).expect("label in range"))
            .collect();
        GimRep { gim, generators }
    }

    pub fn from_quiver(b: &QuiverMatrix, ord: &LinearOrdering) -> Result<Self> {
        Ok(Self::new(build_gim(b, ord)?))
    }

    pub fn gim(&self) -> &Gim {
        &self.gim
    }

    pub fn n(&self) -> usize {
        self.gim.n()
    }

    pub fn generator(&self, i: usize) -> &PiMatrix {
        &self.generators[i - 1]
    }

    pub fn generators(&self) -> &[PiMatrix] {
        &self.generators
    }

    /// Ordered product `π(s_{w_1}) ... π(s_{w_l})`; the empty word maps to
    /// the identity.
    pub fn word(&self, w: &GroupWord) -> Result<PiMatrix> {
        let n = self.n();
        w.letters().iter().try_fold(IntMatrix::identity(n), |acc, &i| {
            check_label(i, n)?;
            acc.mul(&self.generators[i - 1])
        })
    }

    /// `π(r_i)` for every `i`.
    pub fn reflections(&self, r: &ReflectionState) -> Result<Vec<PiMatrix>> {
        r.reflections().iter().map(|w| self.word(w)).collect()
    }

    /// Row `i` is `l_i = π(g_i)(α_i)`.
    pub fn l_matrix(&self, r: &ReflectionState) -> Result<LMatrix> {
        let n = self.n();
        let mut rows = Vec::with_capacity(n);
        for (i, g) in r.conjugators().iter().enumerate() {
            rows.push(self.word(g)?.column(i));
        }
        LMatrix::new(IntMatrix::from_rows(rows)?)
    }
}

pub fn pi_of_word(a: &Gim, w: &GroupWord) -> Result<PiMatrix> {
    GimRep::new(a.clone()).word(w)
}

pub fn l_matrix(a: &Gim, r: &ReflectionState) -> Result<LMatrix> {
    GimRep::new(a.clone()).l_matrix(r)
}

/// Matrix whose `i`-th row is the l-vector `l_i`. Rows are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct LMatrix(IntMatrix);

impl LMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        for i in 0..m.rows() {
            if m.row(i).iter().all(|&x| x == 0) {
                return Err(Error::Invariant(format!("l-vector {} is zero", i + 1)));
            }
        }
        Ok(LMatrix(m))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn row(&self, i: usize) -> &[i64] {
        self.0.row(i - 1)
    }
}

/// True iff every row of `x` equals plus or minus the same row of `y`.
pub fn rows_equal_up_to_sign(x: &LMatrix, y: &LMatrix) -> bool {
    let (x, y) = (&x.0, &y.0);
    x.rows() == y.rows()
        && x.cols() == y.cols()
        && (0..x.rows()).all(|i| {
            let (a, b) = (x.row(i), y.row(i));
            a == b || a.iter().zip(b).all(|(p, q)| *p == -*q)
        })
}

/// JSON view: `{"gim": [[...]], "pi": [[[...]]], "L": [[...]]}`.
#[derive(Clone, Debug, Serialize)]
pub struct RepresentationJson {
    pub gim: Vec<Vec<i64>>,
    pub pi: Vec<Vec<Vec<i64>>>,
    #[serde(rename = "L")]
    pub l: Vec<Vec<i64>>,
}

impl RepresentationJson {
    pub fn new(rep: &GimRep, state: &ReflectionState) -> Result<Self> {
        Ok(RepresentationJson {
            gim: rep.gim().matrix().to_rows(),
            pi: rep.reflections(state)?.iter().map(IntMatrix::to_rows).collect(),
            l: rep.l_matrix(state)?.matrix().to_rows(),
        })
    }
}
