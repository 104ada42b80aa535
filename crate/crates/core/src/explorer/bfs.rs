use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use super::{relation_failures, step_images, Relation};
use crate::error::{Error, Result};
use crate::gim::{rows_equal_up_to_sign, GimRep, LMatrix, LinearOrdering, PiMatrix};
use crate::matrix::IntMatrix;
use crate::quiver::{MutationSequence, QuiverMatrix, Seed};

/// One labelled seed of the exchange graph, keyed by its C-matrix.
#[derive(Clone, Debug)]
pub struct LabelledSeedRecord {
    pub c_key: IntMatrix,
    pub b: QuiverMatrix,
    pub pi_images: Vec<PiMatrix>,
    pub l: LMatrix,
    pub witness: MutationSequence,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Two walks reach the same C-matrix with different `π(r_i)`.
    Mismatch {
        stored_witness: MutationSequence,
        new_witness: MutationSequence,
        index: usize,
        stored: Vec<Vec<i64>>,
        found: Vec<Vec<i64>>,
        l_rows_agree_up_to_sign: bool,
    },
    /// A pair or triangle relation fails at a seed.
    Relation {
        witness: MutationSequence,
        #[serde(flatten)]
        relation: Relation,
        power: Vec<Vec<i64>>,
    },
}

impl Violation {
    pub fn witness(&self) -> &MutationSequence {
        match self {
            Violation::Mismatch { new_witness, .. } => new_witness,
            Violation::Relation { witness, .. } => witness,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub verdict: Verdict,
    pub seeds: usize,
    pub edges: usize,
    /// Total number of violations found; `violations` keeps the first
    /// `BfsOptions::max_violations` of them in discovery order.
    pub violation_count: usize,
    pub violations: Vec<Violation>,
    pub ordering: String,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(s, "verdict: {verdict}");
        let _ = writeln!(s, "ordering: {}", self.ordering);
        let _ = writeln!(s, "seeds: {}", self.seeds);
        let _ = writeln!(s, "edges: {}", self.edges);
        let _ = writeln!(s, "violations: {}", self.violation_count);
        if self.violations.len() < self.violation_count {
            let _ = writeln!(s, "showing the first {}", self.violations.len());
        }
        for v in &self.violations {
            match v {
                Violation::Mismatch { stored_witness, new_witness, index, stored, found, l_rows_agree_up_to_sign } => {
                    let _ = writeln!(
                        s,
                        "  mismatch of pi(r_{index}) between {stored_witness} and {new_witness} (L rows agree up to sign: {l_rows_agree_up_to_sign})"
                    );
                    let _ = writeln!(s, "    stored: {stored:?}");
                    let _ = writeln!(s, "    found:  {found:?}");
                }
                Violation::Relation { witness, relation, power } => {
                    let _ = writeln!(s, "  {relation} fails at {witness}: {power:?}");
                }
            }
        }
        s
    }
}

#[derive(Clone, Copy, Debug)]
pub struct BfsOptions {
    pub budget: usize,
    pub parallel: bool,
    pub max_violations: usize,
}

impl Default for BfsOptions {
    fn default() -> Self {
        BfsOptions { budget: 1_000_000, parallel: false, max_violations: 64 }
    }
}

struct Node {
    seed: Seed,
    pi: Vec<PiMatrix>,
    l: IntMatrix,
}

struct Explorer {
    records: Vec<LabelledSeedRecord>,
    index: HashMap<IntMatrix, usize>,
    violations: Vec<Violation>,
    violation_count: usize,
    max_violations: usize,
    transitions: usize,
}

impl Explorer {
    fn record(&mut self, v: Violation) {
        self.violation_count += 1;
        if self.violations.len() < self.max_violations {
            self.violations.push(v);
        }
    }

    fn make_record(&self, st: Node, witness: MutationSequence) -> Result<LabelledSeedRecord> {
        let det = st.seed.c.determinant()?;
        if det.abs() != 1 {
            return Err(Error::Invariant(format!("det C = {det} at {witness}")));
        }
        let l = LMatrix::new(st.l)?;
        Ok(LabelledSeedRecord {
            c_key: st.seed.c,
            b: st.seed.b,
            pi_images: st.pi,
            l,
            witness,
        })
    }

    /// Compares a rediscovered seed with the committed record.
    fn compare(&mut self, existing: usize, st: &Node, witness: &MutationSequence) -> Result<()> {
        let rec = &self.records[existing];
        if rec.b != st.seed.b {
            return Err(Error::Invariant(format!(
                "C-matrix reached by {} and {witness} with different B",
                rec.witness
            )));
        }
        let Some(idx) = (0..st.pi.len()).find(|&i| rec.pi_images[i] != st.pi[i]) else {
            return Ok(());
        };
        let l = LMatrix::new(st.l.clone())?;
        let v = Violation::Mismatch {
            stored_witness: rec.witness.clone(),
            new_witness: witness.clone(),
            index: idx + 1,
            stored: rec.pi_images[idx].to_rows(),
            found: st.pi[idx].to_rows(),
            l_rows_agree_up_to_sign: rows_equal_up_to_sign(&rec.l, &l),
        };
        self.record(v);
        Ok(())
    }
}

/// Breadth-first search of the labelled exchange graph from `[B | I]`.
///
/// Every rediscovered C-matrix is checked for equal `π(r_i)` images, and every
/// new seed is checked against the pair and triangle relations. Layers are
/// expanded in order of discovery and, within a node, by ascending mutation
/// label, so reports are reproducible; with `parallel` set the successors of
/// a layer are computed on the rayon pool and committed in the same order.
pub fn bfs_verify(
    b: &QuiverMatrix,
    ord: &LinearOrdering,
    opts: BfsOptions,
) -> Result<VerificationReport> {
    let n = b.n();
    let rep = GimRep::from_quiver(b, ord)?;
    let mut ex = Explorer {
        records: Vec::new(),
        index: HashMap::new(),
        violations: Vec::new(),
        violation_count: 0,
        max_violations: opts.max_violations,
        transitions: 0,
    };

    let start = Node {
        seed: Seed::initial(b.clone()),
        pi: rep.generators().to_vec(),
        l: IntMatrix::identity(n),
    };
    let root = ex.make_record(start, MutationSequence::empty())?;
    ex.index.insert(root.c_key.clone(), 0);
    ex.records.push(root);
    check_relations(&mut ex, &[0], opts.parallel)?;

    let mut frontier = vec![0usize];
    while !frontier.is_empty() {
        let expand = |&idx: &usize| -> Result<Vec<(usize, Node)>> {
            let rec = &ex.records[idx];
            let seed = Seed { b: rec.b.clone(), c: rec.c_key.clone() };
            (1..=n)
                .map(|k| {
                    let (seed, pi, l) = step_images(&seed, &rec.pi_images, rec.l.matrix(), k)?;
                    Ok((k, Node { seed, pi, l }))
                })
                .collect()
        };
        let children: Vec<Vec<(usize, Node)>> = if opts.parallel {
            frontier.par_iter().map(expand).collect::<Result<_>>()?
        } else {
            frontier.iter().map(expand).collect::<Result<_>>()?
        };

        let mut next = Vec::new();
        for (&parent, kids) in frontier.iter().zip(children) {
            for (k, st) in kids {
                ex.transitions += 1;
                let mut witness = ex.records[parent].witness.clone();
                witness.push(k);
                if let Some(&existing) = ex.index.get(&st.seed.c) {
                    ex.compare(existing, &st, &witness)?;
                } else {
                    if ex.records.len() >= opts.budget {
                        return Err(Error::Budget { budget: opts.budget });
                    }
                    let rec = ex.make_record(st, witness)?;
                    ex.index.insert(rec.c_key.clone(), ex.records.len());
                    next.push(ex.records.len());
                    ex.records.push(rec);
                }
            }
        }
        check_relations(&mut ex, &next, opts.parallel)?;
        frontier = next;
    }

    Ok(VerificationReport {
        verdict: if ex.violation_count == 0 { Verdict::Pass } else { Verdict::Fail },
        seeds: ex.records.len(),
        edges: ex.transitions / 2,
        violation_count: ex.violation_count,
        violations: ex.violations,
        ordering: ord.to_string(),
    })
}

fn check_relations(ex: &mut Explorer, new: &[usize], parallel: bool) -> Result<()> {
    let run = |&idx: &usize| relation_failures(&ex.records[idx].b, &ex.records[idx].pi_images);
    let found: Vec<Vec<(Relation, IntMatrix)>> = if parallel {
        new.par_iter().map(run).collect::<Result<_>>()?
    } else {
        new.iter().map(run).collect::<Result<_>>()?
    };
    for (&idx, fails) in new.iter().zip(found) {
        for (relation, power) in fails {
            let witness = ex.records[idx].witness.clone();
            ex.record(Violation::Relation { witness, relation, power: power.to_rows() });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_pentagon_graph() {
        let r = bfs_verify(&QuiverMatrix::path(2), &LinearOrdering::identity(2), BfsOptions::default())
            .unwrap();
        assert!(r.passed(), "{}", r.to_text());
        assert_eq!(r.seeds, 10);
        assert_eq!(r.edges, 10);
    }

    #[test]
    fn triangle_good_and_bad() {
        let t = QuiverMatrix::oriented_triangle();
        let good = bfs_verify(&t, &"1,3,2".parse().unwrap(), BfsOptions::default()).unwrap();
        assert!(good.passed(), "{}", good.to_text());
        let bad = bfs_verify(&t, &"1,2,3".parse().unwrap(), BfsOptions::default()).unwrap();
        assert_eq!(bad.verdict, Verdict::Fail);
        let at_two = bad.violations.iter().any(|v| {
            matches!(v, Violation::Relation { witness, relation: Relation::Commuting { i: 1, j: 3 }, .. }
                if witness.labels() == [2])
        });
        assert!(at_two, "{}", bad.to_text());
    }

    #[test]
    fn parallel_matches_serial() {
        let b = QuiverMatrix::from_arrows(4, &[(1, 2), (2, 3), (3, 1), (3, 4)]).unwrap();
        for ord in ["1,3,2,4", "1,2,3,4"] {
            let o: LinearOrdering = ord.parse().unwrap();
            let serial = bfs_verify(&b, &o, BfsOptions::default()).unwrap();
            let par = bfs_verify(&b, &o, BfsOptions { parallel: true, ..Default::default() }).unwrap();
            assert_eq!(serial, par);
        }
    }

    #[test]
    fn budget_exhaustion() {
        let r = bfs_verify(
            &QuiverMatrix::path(3),
            &LinearOrdering::identity(3),
            BfsOptions { budget: 5, ..Default::default() },
        );
        assert_eq!(r, Err(Error::Budget { budget: 5 }));
    }

    #[test]
    fn json_report_keys() {
        let r = bfs_verify(&QuiverMatrix::path(2), &LinearOrdering::identity(2), BfsOptions::default())
            .unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["seeds"], 10);
        assert_eq!(v["edges"], 10);
        assert_eq!(v["violations"], serde_json::json!([]));
    }
}
