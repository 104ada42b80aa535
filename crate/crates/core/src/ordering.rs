//! Triangle constraints on linear orderings and the construction of a
//! pseudo-acyclic ordering for type-A_n quivers.

use serde::Serialize;

use crate::an_type::{cliques3, is_cyclically_oriented, validate_type_an};
use crate::error::{Error, Result};
use crate::gim::LinearOrdering;
use crate::quiver::QuiverMatrix;

/// Default cap on `n` for brute-force enumeration of orderings.
pub const ENUMERATION_LIMIT: usize = 8;

/// An oriented triangle `(i, j, k)` with `b_ki = b_ij = b_jk = epsilon`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TriangleConstraint {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub epsilon: i64,
}

impl TriangleConstraint {
    pub fn new(b: &QuiverMatrix, i: usize, j: usize, k: usize) -> Option<Self> {
        let e = b.b(k, i);
        (e.abs() == 1 && b.b(i, j) == e && b.b(j, k) == e)
            .then_some(TriangleConstraint { i, j, k, epsilon: e })
    }

    /// The three linear orders of `{i, j, k}` under which the triangle
    /// relation holds.
    pub fn allowed_orders(&self) -> [[usize; 3]; 3] {
        let (i, j, k) = (self.i, self.j, self.k);
        if self.epsilon > 0 {
            [[i, k, j], [j, i, k], [k, j, i]]
        } else {
            [[i, j, k], [j, k, i], [k, i, j]]
        }
    }

    pub fn labels(&self) -> [usize; 3] {
        [self.i, self.j, self.k]
    }

    pub fn is_satisfied_by(&self, ord: &LinearOrdering) -> bool {
        let mut restricted = self.labels();
        restricted.sort_by_key(|&v| ord.rank(v));
        self.allowed_orders().contains(&restricted)
    }
}

/// Every oriented 3-cycle, reported once as the rotation with `epsilon = 1`
/// and `k` the smallest label.
pub fn find_triangles(b: &QuiverMatrix) -> Vec<TriangleConstraint> {
    cliques3(b)
        .into_iter()
        .filter(|&t| is_cyclically_oriented(b, t))
        .filter_map(|t| {
            let [x, y, z] = t.map(|v| v + 1);
            // x is the smallest label; follow the arrows out of it.
            let (i, j) = if b.b(x, y) > 0 { (y, z) } else { (z, y) };
            TriangleConstraint::new(b, i, j, x)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderingCheck {
    pub valid: bool,
    pub violations: Vec<TriangleConstraint>,
}

pub fn ordering_valid(b: &QuiverMatrix, ord: &LinearOrdering) -> OrderingCheck {
    let violations: Vec<_> =
        find_triangles(b).into_iter().filter(|t| !t.is_satisfied_by(ord)).collect();
    OrderingCheck { valid: violations.is_empty(), violations }
}

/// Builds an ordering satisfying every triangle constraint.
///
/// Triangles are processed by ascending smallest label. A triangle with no
/// placed vertex is appended using its allowed order that starts with its
/// smallest label. A triangle sharing one placed vertex replaces that vertex
/// by the allowed 3-chain through it. With two placed vertices the first
/// allowed order consistent with their relative position is used and the
/// third vertex is inserted next to them. Vertices outside all triangles are
/// appended in ascending order.
pub fn build_pseudo_acyclic_ordering(b: &QuiverMatrix) -> Result<LinearOrdering> {
    let report = validate_type_an(b);
    if !report.accepted {
        let reasons: Vec<String> = report.reasons.iter().map(ToString::to_string).collect();
        return Err(Error::Precondition(format!("quiver is not of type A_n: {}", reasons.join("; "))));
    }
    let n = b.n();
    let mut triangles = find_triangles(b);
    triangles.sort_by_key(|t| {
        let mut l = t.labels();
        l.sort_unstable();
        l
    });

    let mut chain: Vec<usize> = Vec::with_capacity(n);
    for t in &triangles {
        let preference = preferred_orders(t);
        let placed: Vec<usize> = t.labels().into_iter().filter(|v| chain.contains(v)).collect();
        match placed.len() {
            0 => chain.extend_from_slice(&preference[0]),
            1 => {
                let shared = placed[0];
                let pos = chain.iter().position(|&v| v == shared).expect("placed");
                chain.splice(pos..=pos, preference[0]);
            }
            2 => {
                let (x, y) = (placed[0], placed[1]);
                let pos = |c: &[usize], v| c.iter().position(|&u| u == v).expect("placed");
                let x_first = pos(&chain, x) < pos(&chain, y);
                let order = preference
                    .iter()
                    .find(|o| (pos(&o[..], x) < pos(&o[..], y)) == x_first)
                    .ok_or_else(|| Error::Construction(format!("no allowed order for {t:?}")))?;
                let new = *order.iter().find(|v| !placed.contains(v)).expect("one new vertex");
                let (first, second) = if x_first { (x, y) } else { (y, x) };
                let at = match order.iter().position(|&v| v == new).expect("in order") {
                    0 => pos(&chain, first),
                    1 => pos(&chain, first) + 1,
                    _ => pos(&chain, second) + 1,
                };
                chain.insert(at, new);
            }
            _ => {
                if !t.is_satisfied_by(&partial_ordering(&chain, n)) {
                    return Err(Error::Construction(format!(
                        "triangle {:?} closes a cycle of triangles with an incompatible order",
                        t.labels()
                    )));
                }
            }
        }
    }
    for v in 1..=n {
        if !chain.contains(&v) {
            chain.push(v);
        }
    }
    let ord = LinearOrdering::from_chain(chain)?;
    let check = ordering_valid(b, &ord);
    if !check.valid {
        return Err(Error::Construction(format!("constructed {ord} violates {:?}", check.violations)));
    }
    Ok(ord)
}

/// Allowed orders, the one starting with the smallest label first; the rest
/// follow in their cyclic position.
fn preferred_orders(t: &TriangleConstraint) -> [[usize; 3]; 3] {
    let mut orders = t.allowed_orders();
    let min = *t.labels().iter().min().expect("three labels");
    let start = orders.iter().position(|o| o[0] == min).expect("each label starts one rotation");
    orders.rotate_left(start);
    orders
}

/// Completes a partial chain with the missing labels appended, for checking
/// constraints whose vertices are all placed.
fn partial_ordering(chain: &[usize], n: usize) -> LinearOrdering {
    let mut full = chain.to_vec();
    full.extend((1..=n).filter(|v| !chain.contains(v)));
    LinearOrdering::from_chain(full).expect("chain plus complement is a permutation")
}

/// Brute force over all `n!` orderings, keeping those that pass
/// [`ordering_valid`].
pub fn enumerate_valid_orderings(b: &QuiverMatrix, n_max: usize) -> Result<Vec<LinearOrdering>> {
    if b.n() > n_max {
        return Err(Error::Budget { budget: n_max });
    }
    let triangles = find_triangles(b);
    Ok(LinearOrdering::all(b.n())
        .filter(|o| triangles.iter().all(|t| t.is_satisfied_by(o)))
        .collect())
}
