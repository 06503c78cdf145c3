//! Batch runner: loads a job file, executes its commands in order and
//! collects a text report and a JSON report.

pub mod job;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use loopreps::exact::MatrixL;
use loopreps::galois::GaloisContext;
use loopreps::json::{
    character_to_json, context_from_json, context_to_json, decomposition_to_json, lweight_from_json,
    lweight_to_json, matrix_to_json,
};
use loopreps::kxmod::{tensor_embedding_rank, KXModule};
use loopreps::lweight::LWeight;
use loopreps::repclass::{
    chain_check, classify, compositum_degree, dim_weyl, tensor_decompose_k, tp_irreducible_criterion,
    wtp_criterion,
};
use loopreps::rootsystem::{LieType, RootSystem, Weight};
use loopreps::series::{self, check_suite};
use loopreps::specchar::{partition_blocks, spectral_character};
use loopreps::Error;
use serde_json::{json, Value};

use crate::job::{parse_command, Command, JobFile};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_MAX_STEPS: usize = 10;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub json: Option<PathBuf>,
    pub quiet: bool,
    pub max_steps: Option<usize>,
    pub order: Option<usize>,
}

#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub text: String,
    /// `None` when the job file could not be parsed at all.
    pub report: Option<Value>,
    pub error: Option<String>,
}

impl Outcome {
    fn malformed(msg: String) -> Self {
        Outcome { code: EXIT_MALFORMED, text: String::new(), report: None, error: Some(msg) }
    }
}

struct Env {
    ctx: Arc<GaloisContext>,
    rs: Arc<RootSystem>,
    names: BTreeMap<String, LWeight>,
}

impl Env {
    fn get(&self, name: &str) -> &LWeight {
        // names were checked against the declarations before execution
        &self.names[name]
    }
}

struct Output {
    text: String,
    json: Value,
}

pub fn run_file(path: &Path, opts: &Options) -> Outcome {
    match std::fs::read_to_string(path) {
        Ok(text) => run_str(&text, opts),
        Err(e) => Outcome::malformed(format!("cannot read {}: {e}", path.display())),
    }
}

pub fn run_str(text: &str, opts: &Options) -> Outcome {
    let job: JobFile = match serde_json::from_str(text) {
        Ok(j) => j,
        Err(e) => return Outcome::malformed(format!("malformed job file: {e}")),
    };
    let mut commands = Vec::with_capacity(job.commands.len());
    for (i, entry) in job.commands.iter().enumerate() {
        let tokens = entry.tokens();
        let cmd = match parse_command(&tokens) {
            Ok(c) => c,
            Err(e) => return Outcome::malformed(format!("command {i} ({}): {e}", tokens.join(" "))),
        };
        for n in cmd.names() {
            if !job.lweights.0.iter().any(|(k, _)| k == n) {
                return Outcome::malformed(format!("command {i} ({}): undeclared name {n:?}", tokens.join(" ")));
            }
        }
        commands.push((tokens.join(" "), cmd));
    }

    let mut report = BTreeMap::new();
    report.insert("schemaVersion".to_string(), json!(SCHEMA_VERSION));
    report.insert("lieType".to_string(), json!(job.lie_type));
    let mut text = String::new();

    let fail = |mut report: BTreeMap<String, Value>, text: String, what: String, e: &Error| {
        let msg = format!("{what}: {}: {e}", e.name());
        report.insert("error".into(), json!({"at": what, "name": e.name(), "message": e.to_string()}));
        Outcome { code: EXIT_VALIDATION, text, report: Some(Value::Object(report.into_iter().collect())), error: Some(msg) }
    };

    let ctx = match context_from_json(&job.field) {
        Ok(c) => Arc::new(c),
        Err(e) => return fail(report, text, "field".into(), &e),
    };
    report.insert("field".into(), json!(context_to_json(&ctx)));
    let rs = match RootSystem::from_name(&job.lie_type) {
        Ok(r) => Arc::new(r),
        Err(e) => return fail(report, text, "lieType".into(), &e),
    };
    let mut names = BTreeMap::new();
    for (name, j) in &job.lweights.0 {
        match lweight_from_json(&ctx, &rs, j) {
            Ok(w) => {
                names.insert(name.clone(), w);
            }
            Err(e) => return fail(report, text, format!("lweight {name:?}"), &e),
        }
    }
    let env = Env { ctx, rs, names };

    let mut results = Vec::new();
    for (i, (line, cmd)) in commands.iter().enumerate() {
        match execute(&env, cmd, opts) {
            Ok(out) => {
                let _ = writeln!(text, "[{i}] {line}");
                text.push_str(&out.text);
                results.push(json!({"index": i, "command": line, "result": out.json}));
            }
            Err(e) => {
                report.insert("results".into(), Value::Array(results));
                return fail(report, text, format!("command {i} ({line})"), &e);
            }
        }
    }
    report.insert("results".into(), Value::Array(results));
    Outcome {
        code: EXIT_OK,
        text,
        report: Some(Value::Object(report.into_iter().collect())),
        error: None,
    }
}

/// Pretty JSON with a trailing newline.
pub fn render_report(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().map(|l| format!("  {l}\n")).collect()
}

fn weight_json(w: &Weight) -> Value {
    json!(w.coords())
}

fn execute(env: &Env, cmd: &Command, opts: &Options) -> loopreps::Result<Output> {
    match cmd {
        Command::ValidateField => {
            let ctx = &env.ctx;
            let h = ctx.base_group();
            let fixed = ctx.fixed_space_dim(h);
            Ok(Output {
                text: lines([format!(
                    "degree {}, |G| = {}, H = {h}, [K:Q] = {fixed}",
                    ctx.field().degree(),
                    ctx.order()
                )]),
                json: json!({
                    "degree": ctx.field().degree(),
                    "groupOrder": ctx.order(),
                    "subgroup": h.elements(),
                    "baseDegree": fixed,
                }),
            })
        }
        Command::LwInfo(n) => {
            let w = env.get(n);
            let c = classify(w)?;
            let weyl = if env.rs.lie_type() == LieType::A(1) { Some(dim_weyl(w)?) } else { None };
            let mut text = vec![
                format!("{w}"),
                format!("class key {}", c.key),
                format!("degree {}, wt {}, dimF {}, dimK {}", c.degree, c.weight, c.dim_f, c.dim_k),
            ];
            if let Some((f, k)) = weyl {
                text.push(format!("Weyl module: dimF {f}, dimK {k}"));
            }
            Ok(Output {
                text: lines(text),
                json: json!({
                    "lweight": lweight_to_json(w),
                    "class": lweight_to_json(&c.key),
                    "orbit": c.orbit.iter().map(lweight_to_json).collect::<Vec<_>>(),
                    "degree": c.degree,
                    "wt": weight_json(&c.weight),
                    "dimF": c.dim_f,
                    "dimK": c.dim_k,
                    "weylDimF": weyl.map(|x| x.0),
                    "weylDimK": weyl.map(|x| x.1),
                    "character": character_to_json(&spectral_character(w)),
                }),
            })
        }
        Command::Conjugates(n) => {
            let w = env.get(n);
            let (orbit, degree) = w.conj_class()?;
            let stab = w.stabilizer();
            let mut text: Vec<String> = orbit.iter().map(|o| o.to_string()).collect();
            text.push(format!("degree {degree}, stabilizer {stab}"));
            Ok(Output {
                text: lines(text),
                json: json!({
                    "orbit": orbit.iter().map(lweight_to_json).collect::<Vec<_>>(),
                    "degree": degree,
                    "stabilizer": stab.elements(),
                }),
            })
        }
        Command::Tensor(a, b) => {
            let (x, y) = (env.get(a), env.get(b));
            let d = tensor_decompose_k(x, y)?;
            let irreducible = tp_irreducible_criterion(x, y)?;
            let wtp = wtp_criterion(x, y)?;
            let comp = compositum_degree(x, y)?;
            let chain = chain_check(x, y)?;
            let mut text: Vec<String> = d
                .parts
                .iter()
                .map(|(c, m)| format!("[{}] x{m}: degree {}, dimK {}", c.key, c.degree, c.dim_k))
                .collect();
            text.push(format!(
                "total dimK {}; irreducible criterion {irreducible}; Weyl criterion {wtp}; compositum degree {comp}",
                d.total_dim_k()
            ));
            Ok(Output {
                text: lines(text),
                json: json!({
                    "decomposition": decomposition_to_json(&d),
                    "totalDimK": d.total_dim_k(),
                    "tpIrreducible": irreducible,
                    "wtpCriterion": wtp,
                    "compositumDegree": comp,
                    "chainHolds": chain,
                }),
            })
        }
        Command::RationalSplit(n) => {
            let (r, rest) = env.get(n).rational_split()?;
            Ok(Output {
                text: lines([format!("rational part {r}"), format!("remainder {rest}")]),
                json: json!({"rational": lweight_to_json(&r), "remainder": lweight_to_json(&rest)}),
            })
        }
        Command::Dual(n) => {
            let d = env.get(n).dual()?;
            Ok(Output { text: lines([d.to_string()]), json: json!({"dual": lweight_to_json(&d)}) })
        }
        Command::Blocks(ns) => {
            let items: Vec<LWeight> = ns.iter().map(|n| env.get(n).clone()).collect();
            let groups = partition_blocks(&items)?;
            // recover names: members keep input order, so match the first unused index
            let mut used = vec![false; ns.len()];
            let mut named = Vec::new();
            for g in &groups {
                let mut row = Vec::new();
                for w in g {
                    let k = (0..ns.len()).find(|&k| !used[k] && items[k] == *w).expect("member of input");
                    used[k] = true;
                    row.push(ns[k].clone());
                }
                named.push(row);
            }
            let text = named.iter().map(|r| format!("{{{}}}", r.join(", ")));
            Ok(Output {
                text: lines(text),
                json: json!({
                    "blocks": groups.iter().map(|g| g.iter().map(lweight_to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "names": named,
                    "characters": ns.iter().zip(&items).map(|(n, w)| (n.clone(), json!(character_to_json(&spectral_character(w))))).collect::<serde_json::Map<_, _>>(),
                }),
            })
        }
        Command::KxMatrix { name, coeff } => {
            let w = env.get(name);
            let m = KXModule::build(w)?;
            let f = env.ctx.field();
            let (matrix, label, split): (MatrixL, String, Option<bool>) = match coeff {
                None => (m.primitive_matrix()?, format!("primitive element {}", m.primitive), None),
                Some((i, r)) => {
                    let g = m.generators.get(&(i - 1, *r)).cloned().ok_or_else(|| {
                        Error::InvalidLWeight(format!("no coefficient {r} at node {i}"))
                    })?;
                    (g, format!("coefficient {r} at node {i}"), Some(m.charpoly_split_check(i - 1, *r)?))
                }
            };
            let fixed = matrix.entries().iter().all(|e| env.ctx.is_fixed_by(env.ctx.base_group(), e));
            let minpoly = matrix.minpoly_degree(f)?;
            let charpoly = matrix.charpoly(f)?;
            let mut text = vec![format!("{label}, dimension {}", m.dim)];
            for r in matrix.to_rows() {
                text.push(format!("[{}]", r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")));
            }
            text.push(format!("fixed by H: {fixed}; minimal polynomial degree {minpoly}"));
            if let Some(s) = split {
                text.push(format!("characteristic polynomial splits over the conjugates: {s}"));
            }
            Ok(Output {
                text: lines(text),
                json: json!({
                    "dim": m.dim,
                    "primitive": loopreps::json::elem_to_json(&m.primitive),
                    "matrix": matrix_to_json(&matrix, fixed),
                    "charpoly": charpoly.iter().map(loopreps::json::elem_to_json).collect::<Vec<_>>(),
                    "minpolyDegree": minpoly,
                    "charpolySplits": split,
                }),
            })
        }
        Command::EmbeddingRank(a, b) => {
            let (x, y) = (env.get(a), env.get(b));
            let (rank, injective) = tensor_embedding_rank(x, y)?;
            let comp = compositum_degree(x, y)?;
            Ok(Output {
                text: lines([format!("rank {rank}, injective {injective}, compositum degree {comp}")]),
                json: json!({"rank": rank, "injective": injective, "compositumDegree": comp}),
            })
        }
        Command::LinkChain { lie, lambda, mu, max_steps } => {
            let rs = RootSystem::from_name(lie)?;
            let steps = max_steps.or(opts.max_steps).unwrap_or(DEFAULT_MAX_STEPS);
            let (l, m) = (Weight(lambda.clone()), Weight(mu.clone()));
            let chain = rs.link_chain(&l, &m, steps)?;
            let mut linked = true;
            for pair in chain.windows(2) {
                linked &= rs.directly_linked(&pair[1], &pair[0])?;
            }
            if !linked {
                return Err(Error::CheckFailed("consecutive chain weights are not directly linked".into()));
            }
            let text = chain.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" -> ");
            Ok(Output {
                text: lines([text]),
                json: json!({
                    "chain": chain.iter().map(weight_json).collect::<Vec<_>>(),
                    "maxSteps": steps,
                    "directlyLinked": linked,
                }),
            })
        }
        Command::SeriesCheck { order, lie } => {
            let n = order.or(opts.order).unwrap_or(series::DEFAULT_ORDER);
            let rs = match lie {
                Some(t) => Arc::new(RootSystem::from_name(t)?),
                None => Arc::clone(&env.rs),
            };
            let checks = check_suite(&rs, n)?;
            let failed = checks.iter().filter(|c| !c.passed).count();
            let text = checks.iter().map(|c| format!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name));
            let out = Output {
                text: lines(text),
                json: json!({
                    "type": rs.lie_type().to_string(),
                    "order": n,
                    "checks": checks.iter().map(|c| json!({"name": c.name, "passed": c.passed})).collect::<Vec<_>>(),
                }),
            };
            if failed > 0 {
                return Err(Error::CheckFailed(format!("{failed} of {} series checks failed", checks.len())));
            }
            Ok(out)
        }
    }
}
