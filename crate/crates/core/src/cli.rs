//! Command-line driver. `run` parses arguments, executes one command and
//! returns the process exit code: 0 ok, 1 verification violation, 2 usage,
//! input or budget error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::an_type::validate_type_an;
use crate::error::{Error, Result};
use crate::explorer::{
    bfs_verify, check_stable_walk, check_swap_effect, check_swap_lemma_forms, random_walk_fuzz,
    BfsOptions, WalkState,
};
use crate::gim::{GimRep, LinearOrdering, RepresentationJson};
use crate::matrix::IntMatrix;
use crate::ordering::{build_pseudo_acyclic_ordering, find_triangles, ordering_valid};
use crate::quiver::{MutationSequence, QuiverMatrix, Seed};
use crate::reflection::apply_sequence_with_reflections;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "pseudo-acyclic", version, about = "Quiver mutation, mutated reflections and GIM representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Quiver file: optional `#` comments, then `n`, then n rows of B.
    pub quiver: PathBuf,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct OrderingArg {
    /// Linear ordering as the ascending chain, e.g. `1,3,2`. Constructed if absent.
    #[arg(long)]
    pub ordering: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply a mutation sequence to [B | I] and print B and C.
    Mutate {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "")]
        seq: String,
    },
    /// Print mutated reflection words, their images and the L-matrix.
    Reflections {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        ordering: OrderingArg,
        #[arg(long, default_value = "")]
        seq: String,
    },
    /// Print the GIM, the images of the reflections and the L-matrix.
    Gim {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        ordering: OrderingArg,
        #[arg(long, default_value = "")]
        seq: String,
    },
    /// Construct a pseudo-acyclic ordering.
    Ordering {
        #[command(flatten)]
        common: Common,
    },
    /// Structural type-A check.
    ValidateAn {
        #[command(flatten)]
        common: Common,
    },
    /// Breadth-first verification of the labelled exchange graph.
    Verify {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        ordering: OrderingArg,
        #[arg(long, default_value_t = 1_000_000)]
        budget: usize,
        /// Expand BFS layers on the thread pool.
        #[arg(long)]
        parallel: bool,
    },
    /// Run the elementary swap `[i,j]_p` and check its effect and closed forms.
    Swap {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        ordering: OrderingArg,
        /// The prefix p.
        #[arg(long, default_value = "")]
        seq: String,
        /// The pair `i,j`.
        #[arg(long)]
        pair: String,
    },
    /// Check that `u p [i,j,i,j] p^-1 w` and `u w` give the same images.
    StableWalk {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        ordering: OrderingArg,
        /// The prefix p.
        #[arg(long, default_value = "")]
        seq: String,
        #[arg(long)]
        pair: String,
        /// The walk u before the loop.
        #[arg(long, default_value = "")]
        before: String,
        /// The walk w after the loop.
        #[arg(long, default_value = "")]
        after: String,
    },
    /// Random mutation walks checking images at returns to a relabelled initial seed.
    Fuzz {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        ordering: OrderingArg,
        #[arg(long, default_value_t = 50)]
        len: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        /// Reproducibility token; generated and echoed if absent.
        #[arg(long)]
        token: Option<u64>,
    },
    /// The oriented triangle under all six orderings.
    Counterexample {
        #[arg(long)]
        json: bool,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut ctx = Context { warnings: Vec::new() };
    let result = ctx.dispatch(cli.command);
    for w in &ctx.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

struct Context {
    warnings: Vec<String>,
}

fn read_quiver(path: &PathBuf) -> Result<QuiverMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    QuiverMatrix::parse(&text)
}

fn parse_seq(s: &str, n: usize) -> Result<MutationSequence> {
    let w: MutationSequence = s.parse()?;
    w.validate(n)?;
    Ok(w)
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let w: MutationSequence = s.parse()?;
    match w.labels() {
        [i, j] => Ok((*i, *j)),
        _ => Err(Error::Precondition(format!("--pair expects two labels `i,j`, got {s:?}"))),
    }
}

fn grid(m: &IntMatrix, indent: &str) -> String {
    m.to_text().lines().map(|l| format!("{indent}{l}\n")).collect()
}

fn to_json(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

impl Context {
    fn ordering(&mut self, b: &QuiverMatrix, arg: &OrderingArg) -> Result<LinearOrdering> {
        let Some(s) = &arg.ordering else {
            return build_pseudo_acyclic_ordering(b);
        };
        let ord: LinearOrdering = s.parse()?;
        if ord.n() != b.n() {
            return Err(Error::Ordering(format!("ordering has {} labels, quiver has {}", ord.n(), b.n())));
        }
        let check = ordering_valid(b, &ord);
        for t in &check.violations {
            let [i, j, k] = t.labels();
            self.warnings.push(format!(
                "ordering {ord} violates the triangle constraint on ({i},{j},{k}); results may show violations"
            ));
        }
        Ok(ord)
    }

    fn dispatch(&mut self, cmd: Command) -> Result<(String, i32)> {
        match cmd {
            Command::Mutate { common, seq } => {
                let b = read_quiver(&common.quiver)?;
                let w = parse_seq(&seq, b.n())?;
                let s = Seed::initial(b).apply(&w)?;
                let text = if common.json {
                    to_json(&json!({"seq": w.to_string(), "B": s.b.matrix().to_rows(), "C": s.c.to_rows()}))
                } else {
                    format!("B:\n{}C:\n{}", grid(s.b.matrix(), "  "), grid(&s.c, "  "))
                };
                Ok((text, EXIT_OK))
            }
            Command::Reflections { common, ordering, seq } | Command::Gim { common, ordering, seq } => {
                let b = read_quiver(&common.quiver)?;
                let ord = self.ordering(&b, &ordering)?;
                let w = parse_seq(&seq, b.n())?;
                let rep = GimRep::from_quiver(&b, &ord)?;
                let (_, st) = apply_sequence_with_reflections(
                    &Seed::initial(b.clone()),
                    &crate::reflection::ReflectionState::initial(b.n()),
                    &w,
                )?;
                let view = RepresentationJson::new(&rep, &st)?;
                if common.json {
                    let words: Vec<String> = st.reflections().iter().map(ToString::to_string).collect();
                    let mut v = serde_json::to_value(&view).expect("serializable");
                    v["ordering"] = json!(ord.to_string());
                    v["reflections"] = json!(words);
                    return Ok((to_json(&v), EXIT_OK));
                }
                let mut s = String::new();
                let _ = writeln!(s, "ordering: {ord}");
                let _ = write!(s, "gim:\n{}", grid(rep.gim().matrix(), "  "));
                for (i, r) in st.reflections().iter().enumerate() {
                    let _ = writeln!(s, "r_{} = {r}", i + 1);
                    let _ = write!(s, "{}", grid(&IntMatrix::from_rows(view.pi[i].clone())?, "  "));
                }
                let _ = write!(s, "L:\n{}", grid(rep.l_matrix(&st)?.matrix(), "  "));
                Ok((s, EXIT_OK))
            }
            Command::Ordering { common } => {
                let b = read_quiver(&common.quiver)?;
                let report = validate_type_an(&b);
                if !report.accepted {
                    let reasons: Vec<String> = report.reasons.iter().map(ToString::to_string).collect();
                    return Err(Error::Precondition(format!(
                        "quiver is not of type A_n: {}",
                        reasons.join("; ")
                    )));
                }
                let ord = build_pseudo_acyclic_ordering(&b)?;
                let tris = find_triangles(&b);
                let text = if common.json {
                    to_json(&json!({"ordering": ord.to_string(), "triangles": tris}))
                } else {
                    let mut s = format!("{ord}\n");
                    for t in &tris {
                        let [i, j, k] = t.labels();
                        let _ = writeln!(s, "triangle ({i},{j},{k}) epsilon {:+}", t.epsilon);
                    }
                    s
                };
                Ok((text, EXIT_OK))
            }
            Command::ValidateAn { common } => {
                let b = read_quiver(&common.quiver)?;
                let r = validate_type_an(&b);
                let code = if r.accepted { EXIT_OK } else { EXIT_VIOLATION };
                let text = if common.json {
                    to_json(&json!({
                        "accepted": r.accepted,
                        "m": r.triangle_count(),
                        "q": r.outside_count(),
                        "triangles": r.triangles,
                        "outside": r.outside,
                        "reasons": r.reasons.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    }))
                } else {
                    let mut s = format!(
                        "{}\nm = {}\nq = {}\n",
                        if r.accepted { "accepted" } else { "rejected" },
                        r.triangle_count(),
                        r.outside_count()
                    );
                    for t in &r.triangles {
                        let _ = writeln!(s, "triangle {},{},{}", t[0], t[1], t[2]);
                    }
                    for reason in &r.reasons {
                        let _ = writeln!(s, "reason: {reason}");
                    }
                    s
                };
                Ok((text, code))
            }
            Command::Verify { common, ordering, budget, parallel } => {
                let b = read_quiver(&common.quiver)?;
                if !validate_type_an(&b).accepted {
                    self.warnings.push("quiver fails the type A_n check; the search may exhaust the budget".into());
                }
                let ord = match &ordering.ordering {
                    None if !validate_type_an(&b).accepted => LinearOrdering::identity(b.n()),
                    _ => self.ordering(&b, &ordering)?,
                };
                let max_violations = BfsOptions::default().max_violations;
                let r = bfs_verify(&b, &ord, BfsOptions { budget, parallel, max_violations })?;
                let code = if r.passed() { EXIT_OK } else { EXIT_VIOLATION };
                Ok((if common.json { format!("{}\n", r.to_json()) } else { r.to_text() }, code))
            }
            Command::Swap { common, ordering, seq, pair } => {
                let b = read_quiver(&common.quiver)?;
                let ord = self.ordering(&b, &ordering)?;
                let p = parse_seq(&seq, b.n())?;
                let (i, j) = parse_pair(&pair)?;
                let effect = check_swap_effect(&b, &ord, &p, i, j)?;
                let forms = check_swap_lemma_forms(&b, &ord, &p, i, j)?;
                let ok = effect.passed() && forms.passed();
                let code = if ok { EXIT_OK } else { EXIT_VIOLATION };
                if common.json {
                    let v = json!({
                        "verdict": if ok { "pass" } else { "fail" },
                        "ordering": ord.to_string(),
                        "effect": effect,
                        "forms": forms,
                    });
                    return Ok((to_json(&v), code));
                }
                let mut s = String::new();
                let _ = writeln!(s, "verdict: {}", if ok { "PASS" } else { "FAIL" });
                let _ = writeln!(s, "ordering: {ord}");
                let _ = writeln!(s, "sequence: {}", effect.sequence);
                let _ = writeln!(s, "B transposed: {}", effect.b_transposed);
                let _ = writeln!(s, "C transposed: {}", effect.c_transposed);
                let _ = writeln!(s, "image mismatches: {:?}", effect.pi_mismatches);
                for f in &forms.forms {
                    let m = f.matched.as_deref().unwrap_or("no candidate matched");
                    let _ = writeln!(s, "r_{} case {:?}: {m}", f.index, f.case);
                }
                Ok((s, code))
            }
            Command::StableWalk { common, ordering, seq, pair, before, after } => {
                let b = read_quiver(&common.quiver)?;
                let ord = self.ordering(&b, &ordering)?;
                let n = b.n();
                let (p, u, w) = (parse_seq(&seq, n)?, parse_seq(&before, n)?, parse_seq(&after, n)?);
                let (i, j) = parse_pair(&pair)?;
                let r = check_stable_walk(&b, &ord, &p, i, j, &u, &w)?;
                let code = if r.passed() { EXIT_OK } else { EXIT_VIOLATION };
                let text = if common.json {
                    to_json(&json!({"verdict": if r.passed() { "pass" } else { "fail" }, "report": r}))
                } else {
                    format!(
                        "verdict: {}\nwith loop: {}\nwithout loop: {}\nsame C: {}\nimage mismatches: {:?}\n",
                        if r.passed() { "PASS" } else { "FAIL" },
                        r.with_loop,
                        r.without_loop,
                        r.same_c,
                        r.pi_mismatches
                    )
                };
                Ok((text, code))
            }
            Command::Fuzz { common, ordering, len, trials, token } => {
                let b = read_quiver(&common.quiver)?;
                let ord = self.ordering(&b, &ordering)?;
                let token = token.unwrap_or_else(rand::random);
                let r = random_walk_fuzz(&b, &ord, len, trials, token)?;
                let code = if r.passed() { EXIT_OK } else { EXIT_VIOLATION };
                if common.json {
                    let mut v = serde_json::to_value(&r).expect("serializable");
                    v["verdict"] = json!(if r.passed() { "pass" } else { "fail" });
                    v["ordering"] = json!(ord.to_string());
                    return Ok((to_json(&v), code));
                }
                let mut s = String::new();
                let _ = writeln!(s, "verdict: {}", if r.passed() { "PASS" } else { "FAIL" });
                let _ = writeln!(s, "token: {}", r.token);
                let _ = writeln!(s, "ordering: {ord}");
                let _ = writeln!(s, "trials: {}", r.trials);
                let _ = writeln!(s, "length: {}", r.length);
                let _ = writeln!(s, "identity hits: {}", r.identity_hits);
                let _ = writeln!(s, "permutation hits: {}", r.permutation_hits);
                let _ = writeln!(s, "violations: {}", r.violations.len());
                if let Some(v) = r.violations.first() {
                    let _ = writeln!(s, "first witness: {}", v.walk());
                }
                Ok((s, code))
            }
            Command::Counterexample { json: as_json } => counterexample(as_json),
        }
    }
}

/// `(π(r_1^[2] r_3^[2]))^2` for each ordering of the oriented triangle.
fn counterexample(as_json: bool) -> Result<(String, i32)> {
    let b = QuiverMatrix::oriented_triangle();
    let w = MutationSequence::new(vec![2]);
    let mut rows = Vec::new();
    for ord in LinearOrdering::all(3) {
        let rep = GimRep::from_quiver(&b, &ord)?;
        let st = WalkState::initial(&b, &rep).run(&w)?;
        let sq = st.pi_of(1).mul(st.pi_of(3))?.pow(2)?;
        rows.push((ord, sq));
    }
    if as_json {
        let v: Vec<_> = rows
            .iter()
            .map(|(o, m)| json!({"ordering": o.to_string(), "identity": m.is_identity(), "square": m.to_rows()}))
            .collect();
        return Ok((to_json(&json!({ "results": v })), EXIT_OK));
    }
    let mut s = String::from("oriented triangle 1->2->3->1, w = [2]\n");
    for (o, m) in &rows {
        let verdict = if m.is_identity() { "= I" } else { "!= I" };
        let _ = writeln!(s, "{o:?}: (pi(r_1 r_3))^2 {verdict}");
        if !m.is_identity() {
            let _ = write!(s, "{}", grid(m, "    "));
        }
    }
    let pass: Vec<String> = rows.iter().filter(|r| r.1.is_identity()).map(|r| r.0.to_string()).collect();
    let fail: Vec<String> = rows.iter().filter(|r| !r.1.is_identity()).map(|r| r.0.to_string()).collect();
    let _ = writeln!(s, "identity: {}", pass.join(" | "));
    let _ = writeln!(s, "not identity: {}", fail.join(" | "));
    Ok((s, EXIT_OK))
}
