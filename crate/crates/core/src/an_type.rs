//! Structural recognition of type-A_n quivers, with a mutation-class search
//! used as an independent oracle.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::QuiverMatrix;

/// Default node budget for the mutation-class search.
pub const DEFAULT_CLASS_BUDGET: usize = 200_000;

/// Why a quiver was rejected. Labels are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Rejection {
    EntryOutOfRange { i: usize, j: usize, value: i64 },
    Disconnected,
    ChordlessCycle { cycle: Vec<usize> },
    UnorientedTriangle { triangle: [usize; 3] },
    DegreeTooHigh { vertex: usize, degree: usize },
    DegreeFourTriangles { vertex: usize },
    DegreeThreeTriangles { vertex: usize, triangles: usize },
    CycleOfTriangles,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::EntryOutOfRange { i, j, value } => {
                write!(f, "entry b_{i}{j} = {value} is outside {{-1,0,1}}")
            }
            Rejection::Disconnected => write!(f, "underlying graph is disconnected"),
            Rejection::ChordlessCycle { cycle } => {
                write!(f, "chordless cycle of length {} through {:?}", cycle.len(), cycle)
            }
            Rejection::UnorientedTriangle { triangle } => {
                write!(f, "triangle {triangle:?} is not cyclically oriented")
            }
            Rejection::DegreeTooHigh { vertex, degree } => {
                write!(f, "vertex {vertex} has degree {degree} > 4")
            }
            Rejection::DegreeFourTriangles { vertex } => {
                write!(f, "degree-4 vertex {vertex} is not covered by exactly two triangles")
            }
            Rejection::DegreeThreeTriangles { vertex, triangles } => {
                write!(f, "degree-3 vertex {vertex} lies in {triangles} triangles, expected 1")
            }
            Rejection::CycleOfTriangles => write!(f, "triangles and edges form a cycle of cycles"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeAReport {
    pub accepted: bool,
    /// All 3-cliques of the underlying graph, sorted labels.
    pub triangles: Vec<[usize; 3]>,
    /// Vertices that lie in no triangle.
    pub outside: Vec<usize>,
    pub reasons: Vec<Rejection>,
}

impl TypeAReport {
    /// Number of triangles (`m`).
    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    /// Number of vertices outside every triangle (`q`).
    pub fn outside_count(&self) -> usize {
        self.outside.len()
    }
}

/// 0-based sorted 3-cliques of the underlying graph.
pub(crate) fn cliques3(b: &QuiverMatrix) -> Vec<[usize; 3]> {
    let n = b.n();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if b.at(x, y) == 0 {
                continue;
            }
            for z in y + 1..n {
                if b.at(x, z) != 0 && b.at(y, z) != 0 {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

pub(crate) fn is_cyclically_oriented(b: &QuiverMatrix, t: [usize; 3]) -> bool {
    let [x, y, z] = t;
    let (s1, s2, s3) = (b.at(x, y).signum(), b.at(y, z).signum(), b.at(z, x).signum());
    s1 != 0 && s1 == s2 && s2 == s3
}

/// Finds an induced cycle of length at least 4, if any (0-based labels).
fn chordless_cycle(adj: &[Vec<usize>], nbr: &[Vec<bool>]) -> Option<Vec<usize>> {
    fn extend(path: &mut Vec<usize>, adj: &[Vec<usize>], nbr: &[Vec<bool>]) -> Option<Vec<usize>> {
        let s = path[0];
        let last = *path.last().unwrap();
        for &v in &adj[last] {
            if v <= s || path.contains(&v) {
                continue;
            }
            let inner = if path.len() > 1 { &path[1..path.len() - 1] } else { &[][..] };
            if inner.iter().any(|&u| nbr[u][v]) {
                continue;
            }
            if path.len() > 1 && nbr[s][v] {
                if path.len() >= 3 {
                    let mut cyc = path.clone();
                    cyc.push(v);
                    return Some(cyc);
                }
                continue;
            }
            path.push(v);
            if let Some(c) = extend(path, adj, nbr) {
                return Some(c);
            }
            path.pop();
        }
        None
    }
    (0..adj.len()).find_map(|s| extend(&mut vec![s], adj, nbr))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    /// Returns false when `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Structural test for mutation type A_n.
///
/// Accepts iff all entries are in `{-1,0,1}`, the underlying graph is
/// connected, every chordless cycle is a cyclically oriented triangle, every
/// vertex has degree at most 4, a degree-4 vertex is covered by exactly two
/// triangles, a degree-3 vertex lies in exactly one triangle, and the
/// vertex/triangle incidence graph (triangle edges replaced by a hub node) is
/// a forest.
pub fn validate_type_an(b: &QuiverMatrix) -> TypeAReport {
    let n = b.n();
    let mut reasons = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if b.at(i, j).abs() > 1 {
                reasons.push(Rejection::EntryOutOfRange { i: i + 1, j: j + 1, value: b.at(i, j) });
            }
        }
    }
    if !b.is_connected() {
        reasons.push(Rejection::Disconnected);
    }
    let adj = b.adjacency();
    let nbr: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| b.at(i, j) != 0).collect()).collect();
    if let Some(cycle) = chordless_cycle(&adj, &nbr) {
        reasons.push(Rejection::ChordlessCycle { cycle: cycle.into_iter().map(|v| v + 1).collect() });
    }

    let tris = cliques3(b);
    for &t in &tris {
        if !is_cyclically_oriented(b, t) {
            reasons.push(Rejection::UnorientedTriangle { triangle: t.map(|v| v + 1) });
        }
    }

    let mut per_vertex: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (idx, t) in tris.iter().enumerate() {
        for &v in t {
            per_vertex[v].push(idx);
        }
    }
    for v in 0..n {
        let deg = adj[v].len();
        let count = per_vertex[v].len();
        match deg {
            0..=2 => {}
            3 if count != 1 => {
                reasons.push(Rejection::DegreeThreeTriangles { vertex: v + 1, triangles: count })
            }
            3 => {}
            4 => {
                let covered: HashSet<usize> = per_vertex[v]
                    .iter()
                    .flat_map(|&t| tris[t].iter().copied())
                    .filter(|&u| u != v)
                    .collect();
                if count != 2 || covered.len() != 4 {
                    reasons.push(Rejection::DegreeFourTriangles { vertex: v + 1 });
                }
            }
            _ => reasons.push(Rejection::DegreeTooHigh { vertex: v + 1, degree: deg }),
        }
    }

    // Incidence graph: vertices 0..n, triangle hubs n..n+m. Triangle edges go
    // through the hub; every other edge is kept. A cycle here is a cycle of
    // cycles.
    let mut in_triangle = vec![vec![false; n]; n];
    for t in &tris {
        for a in 0..3 {
            for c in 0..3 {
                in_triangle[t[a]][t[c]] = true;
            }
        }
    }
    let mut uf = UnionFind::new(n + tris.len());
    let mut acyclic = true;
    for (idx, t) in tris.iter().enumerate() {
        for &v in t {
            acyclic &= uf.union(v, n + idx);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if nbr[i][j] && !in_triangle[i][j] {
                acyclic &= uf.union(i, j);
            }
        }
    }
    if !acyclic {
        reasons.push(Rejection::CycleOfTriangles);
    }

    let outside = (0..n).filter(|&v| per_vertex[v].is_empty()).map(|v| v + 1).collect();
    TypeAReport {
        accepted: reasons.is_empty(),
        triangles: tris.into_iter().map(|t| t.map(|v| v + 1)).collect(),
        outside,
        reasons,
    }
}

/// True iff the underlying graph is a path and all entries are `±1`.
pub fn is_path_orientation(b: &QuiverMatrix) -> bool {
    let n = b.n();
    if !b.has_unit_entries() || !b.is_connected() {
        return false;
    }
    let adj = b.adjacency();
    let edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    edges + 1 == n && adj.iter().all(|a| a.len() <= 2)
}

/// Mutation-class search deciding membership in the A_n class.
///
/// A breadth-first search over all mutations of `b`, succeeding as soon as a
/// path orientation is reached. Every quiver of type A_n has entries in
/// `{-1,0,1}`, so reaching a larger entry ends the search with `false`; this
/// also keeps the explored set finite.
#[derive(Debug)]
pub struct MembershipOracle {
    n_max: usize,
    budget: usize,
    known: HashMap<QuiverMatrix, bool>,
}

impl MembershipOracle {
    pub fn new(n_max: usize) -> Self {
        Self::with_budget(n_max, DEFAULT_CLASS_BUDGET)
    }

    pub fn with_budget(n_max: usize, budget: usize) -> Self {
        MembershipOracle { n_max, budget, known: HashMap::new() }
    }

    pub fn is_type_a(&mut self, b: &QuiverMatrix) -> Result<bool> {
        let n = b.n();
        if n > self.n_max {
            return Err(Error::Precondition(format!(
                "membership search limited to n <= {}, got {n}",
                self.n_max
            )));
        }
        if let Some(&v) = self.known.get(b) {
            return Ok(v);
        }
        let mut seen: HashSet<QuiverMatrix> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(b.clone());
        queue.push_back(b.clone());
        let mut verdict = false;
        while let Some(q) = queue.pop_front() {
            if let Some(&v) = self.known.get(&q) {
                verdict = v;
                break;
            }
            if !q.has_unit_entries() {
                verdict = false;
                break;
            }
            if is_path_orientation(&q) {
                verdict = true;
                break;
            }
            for k in 1..=n {
                let next = q.mutate(k)?;
                if seen.insert(next.clone()) {
                    if seen.len() > self.budget {
                        return Err(Error::Budget { budget: self.budget });
                    }
                    queue.push_back(next);
                }
            }
        }
        for q in seen {
            self.known.insert(q, verdict);
        }
        Ok(verdict)
    }
}

/// One-shot form of [`MembershipOracle::is_type_a`].
pub fn an_membership_oracle(b: &QuiverMatrix, n_max: usize) -> Result<bool> {
    MembershipOracle::new(n_max).is_type_a(b)
}
