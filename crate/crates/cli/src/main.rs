//! `pursuit`: generate random graphs, solve pursuit games, evaluate
//! first-order sentences, estimate probabilities and compute thresholds.
//!
//! Every output starts with (or embeds) the canonical command line that
//! reproduces it. Exit codes: 0 success, 1 usage error, 2 domain or budget error.

mod config;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use pursuit_core::game::{
    build_arena, check_budget, cop_number_with_budget, game_value_with_budget, solve, CopNumber, Variant, Winner,
    DEFAULT_MAX_STATES,
};
use pursuit_core::graph::{named, Graph};
use pursuit_core::lab::{exact_mu, fmt_sig, sweep, sweep_csv, EstimateOptions, PSpec, Target};
use pursuit_core::logic::{extension_axiom, parse_sentence, Builtin, Formula, Sentence};
use pursuit_core::threshold::{mad, threshold, Convention, RootedGraph};

use config::{Config, Usage};

const DEFAULT_MAX_SAMPLES: u64 = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "pursuit", version, about = "Pursuit games and first-order properties of random graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Global {
    /// Machine-readable output instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for sampling; does not change results.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Largest game arena allowed.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STATES)]
    max_states: u64,
    /// Largest sample count allowed.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_SAMPLES)]
    max_samples: u64,
    /// Master seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Sample a random graph and write it as an edge list.
    Gen {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        p: PArgs,
        /// Output file; the edge list goes to stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide the winner of a game on one graph.
    Solve {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        variant: VariantArgs,
        /// Also compute the classic cop number up to --k-max.
        #[arg(long)]
        cop_number: bool,
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        /// Use the explicit state graph instead of the bitset solver.
        #[arg(long)]
        explicit: bool,
    },
    /// Evaluate a sentence on one graph.
    Eval {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        sentence: SentenceArgs,
    },
    /// Estimate a probability at one size.
    Mu {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        p: OptPArgs,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
        /// Enumerate all labeled graphs at p = 1/2 instead of sampling.
        #[arg(long)]
        exact: bool,
    },
    /// Estimate a probability over several sizes, as CSV.
    Sweep {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[command(flatten)]
        p: PArgs,
        #[arg(long, default_value_t = 1000)]
        samples: u64,
    },
    /// Threshold function of an extension statement.
    Threshold {
        /// Rooted graph file: an edge list followed by `roots ...`.
        file: PathBuf,
        #[arg(long, default_value = "paper")]
        convention: Convention,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct PArgs {
    /// Constant edge probability.
    #[arg(long)]
    p: Option<String>,
    /// Edge probability `c * N^-alpha * (ln N)^beta` given as `c,alpha,beta`.
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct OptPArgs {
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    family: Option<String>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphArgs {
    /// Edge-list file.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Built-in graph such as c4, petersen or complete(5).
    #[arg(long)]
    named: Option<String>,
}

#[derive(Args, Debug)]
struct VariantArgs {
    /// classic, traps, roadblocks, complementary or tandem (or a compact form like traps:1:2).
    #[arg(long)]
    variant: Option<String>,
    /// Cops in the classic game.
    #[arg(long)]
    k: Option<usize>,
    /// Cops in the traps and roadblocks games.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    traps: Option<usize>,
    #[arg(long)]
    blocks: Option<usize>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("sentence").required(true).multiple(false).args(["formula", "axiom", "builtin"])))]
struct SentenceArgs {
    /// Sentence text, e.g. "forall x exists y E(x,y)".
    #[arg(long)]
    formula: Option<String>,
    /// Extension axiom given as `m,n`.
    #[arg(long)]
    axiom: Option<String>,
    /// Named sentence such as escape_1 or isolated_vertices_2.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("target").required(true).multiple(false).args(["formula", "axiom", "builtin", "variant"])))]
struct TargetArgs {
    #[arg(long)]
    formula: Option<String>,
    #[arg(long)]
    axiom: Option<String>,
    #[arg(long)]
    builtin: Option<String>,
    /// Count wins of --winner in this game instead of a sentence.
    #[arg(long)]
    variant: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    traps: Option<usize>,
    #[arg(long)]
    blocks: Option<usize>,
    #[arg(long, default_value = "robber")]
    winner: String,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(1)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let g = &cli.global;
    let mut cfg = Config::new(&cli.cmd, g);
    match cli.cmd {
        Cmd::Gen { n, p, out } => {
            let (raw, spec) = p.resolve()?;
            cfg.flag("--n", n).flag(raw.0, raw.1);
            let graph = spec.sample(n, g.seed)?;
            let text = graph.to_edge_list();
            match out {
                Some(path) => {
                    cfg.flag("--out", path.display());
                    fs::write(&path, &text).with_context(|| format!("cannot write {}", path.display()))?;
                    if g.json {
                        let body = json!({"out": path.display().to_string(), "n": n, "edges": graph.edge_count()});
                        println!("{}", cfg.wrap_json(body));
                    } else {
                        println!("{}", cfg.header());
                    }
                }
                None => {
                    eprintln!("{}", cfg.header());
                    print!("{text}");
                }
            }
        }
        Cmd::Solve { graph, variant, cop_number, k_max, explicit } => {
            let h = graph.load(&mut cfg)?;
            let v = variant.resolve(&mut cfg)?;
            if v.is_none() && !cop_number {
                return Err(Usage("solve needs --variant or --cop-number".into()).into());
            }
            if cop_number {
                cfg.switch("--cop-number").flag("--k-max", k_max);
            }
            if explicit {
                cfg.switch("--explicit");
            }
            let mut body = serde_json::Map::new();
            let mut text = Vec::new();
            if let Some(v) = v {
                let (winner, states, backend) = if explicit {
                    check_budget(&h, v, g.max_states)?;
                    let arena = build_arena(&h, v, g.max_states)?;
                    (solve(&arena).winner(arena.initial()), arena.len() as u128, "explicit")
                } else {
                    let bound = check_budget(&h, v, g.max_states)?;
                    (game_value_with_budget(&h, v, g.max_states)?, bound, "bitset")
                };
                body.insert("variant".into(), json!(v.to_string()));
                body.insert("winner".into(), json!(winner.to_string()));
                body.insert("state_count".into(), json!(states));
                body.insert("backend".into(), json!(backend));
                text.push(format!("variant: {v}"));
                text.push(format!("winner: {winner}"));
                text.push(format!("state_count: {states} ({backend})"));
            }
            if cop_number {
                // Exceeding k_max is reported as the string ">k_max".
                let (c, shown) = match cop_number_with_budget(&h, k_max, g.max_states)? {
                    CopNumber::Exactly(k) => (json!(k), k.to_string()),
                    CopNumber::Exceeds(k) => (json!(format!(">{k}")), format!(">{k}")),
                };
                body.insert("cop_number".into(), c);
                text.push(format!("cop_number: {shown}"));
            }
            cfg.emit(Value::Object(body), &text.join("\n"));
        }
        Cmd::Eval { graph, sentence } => {
            let h = graph.load(&mut cfg)?;
            let (_, f) = sentence.resolve(&mut cfg)?;
            let value = Sentence::new(f)?.holds(&h);
            cfg.emit(json!({"value": value}), &value.to_string());
        }
        Cmd::Mu { target, n, p, samples, exact } => {
            let target = target.resolve(&mut cfg)?;
            cfg.flag("--n", n);
            if exact {
                if p.p.is_some() || p.family.is_some() {
                    return Err(Usage("--exact enumerates at p = 1/2 and takes no --p or --family".into()).into());
                }
                let Target::Formula { id, sentence } = &target else {
                    return Err(Usage("--exact needs a sentence target".into()).into());
                };
                cfg.switch("--exact");
                let r = exact_mu(sentence.formula(), n)?;
                let value = *r.numer() as f64 / *r.denom() as f64;
                let body = json!({
                    "target_id": id,
                    "n": n,
                    "exact_num": r.numer(),
                    "exact_den": r.denom(),
                    "value": fmt_sig(value).parse::<f64>().expect("formatted float parses"),
                });
                cfg.emit(body, &format!("exact: {r}\nvalue: {}", fmt_sig(value)));
                return Ok(());
            }
            let (raw, spec) = PArgs { p: p.p, family: p.family }.resolve()?;
            cfg.flag(raw.0, raw.1).flag("--samples", samples);
            let opts = sample_options(g, samples)?;
            let rows = sweep(&target, &[n], &spec, &opts);
            let report = match &rows[0].result {
                Ok(r) => r.clone(),
                Err(e) => return Err(anyhow!("{e}")),
            };
            if g.json {
                println!("{}", cfg.wrap_json(report.to_json()));
            } else {
                println!("{}", cfg.header());
                print!("{}", sweep_csv(&target, &spec, &opts, &rows));
            }
        }
        Cmd::Sweep { target, n_list, p, samples } => {
            let target = target.resolve(&mut cfg)?;
            let (raw, spec) = p.resolve()?;
            let sizes: Vec<String> = n_list.iter().map(|n| n.to_string()).collect();
            cfg.flag("--n-list", sizes.join(",")).flag(raw.0, raw.1).flag("--samples", samples);
            let opts = sample_options(g, samples)?;
            let rows = sweep(&target, &n_list, &spec, &opts);
            if g.json {
                let rows: Vec<Value> = rows
                    .iter()
                    .map(|row| match &row.result {
                        Ok(r) => r.to_json(),
                        Err(e) => json!({"n": row.n, "error": e.kind(), "message": e.to_string()}),
                    })
                    .collect();
                println!("{}", cfg.wrap_json(json!({"rows": rows})));
            } else {
                println!("{}", cfg.header());
                print!("{}", sweep_csv(&target, &spec, &opts, &rows));
            }
        }
        Cmd::Threshold { file, convention } => {
            cfg.positional(file.display()).flag("--convention", convention);
            let text = fs::read_to_string(&file).with_context(|| format!("cannot read {}", file.display()))?;
            let rg = RootedGraph::from_text(&text)?;
            let t = threshold(&rg, convention)?;
            let m = mad(&rg, convention)?;
            let mut body = t.to_json();
            body["mad_num"] = json!(m.numer());
            body["mad_den"] = json!(m.denom());
            body["function"] = json!(t.to_string());
            cfg.emit(body, &format!("threshold: {t}\nmad: {m}\nconvention: {convention}"));
        }
    }
    Ok(())
}

fn sample_options(g: &Global, samples: u64) -> Result<EstimateOptions> {
    if samples > g.max_samples {
        return Err(anyhow!("{samples} samples exceed the budget of {}", g.max_samples));
    }
    let mut opts = EstimateOptions::new(samples, g.seed).jobs(g.jobs);
    opts.max_states = g.max_states;
    Ok(opts)
}

impl PArgs {
    /// The flag as given (for the config line) and its parsed value.
    fn resolve(self) -> Result<((&'static str, String), PSpec)> {
        match (self.p, self.family) {
            (Some(p), None) if !p.contains(',') => {
                let spec = p.parse::<PSpec>()?;
                Ok((("--p", p), spec))
            }
            (None, Some(f)) if f.contains(',') => {
                let spec = f.parse::<PSpec>()?;
                Ok((("--family", f), spec))
            }
            (Some(p), None) => Err(anyhow!("--p takes a single probability, got `{p}`")),
            (None, Some(f)) => Err(anyhow!("--family takes `c,alpha,beta`, got `{f}`")),
            _ => Err(Usage("exactly one of --p or --family is required".into()).into()),
        }
    }
}

impl GraphArgs {
    fn load(&self, cfg: &mut Config) -> Result<Graph> {
        match (&self.graph, &self.named) {
            (Some(path), None) => {
                cfg.flag("--graph", path.display());
                let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
                Ok(Graph::from_edge_list(&text)?)
            }
            (None, Some(name)) => {
                cfg.flag("--named", name);
                Ok(named(name)?)
            }
            _ => Err(Usage("exactly one of --graph or --named is required".into()).into()),
        }
    }
}

/// Builds a variant from its name plus the count flags, or from a compact form.
fn parse_variant(
    name: &str,
    k: Option<usize>,
    m: Option<usize>,
    traps: Option<usize>,
    blocks: Option<usize>,
) -> Result<Variant> {
    if name.contains(':') {
        if k.is_some() || m.is_some() || traps.is_some() || blocks.is_some() {
            return Err(Usage("a compact variant takes no --k, --m, --traps or --blocks".into()).into());
        }
        return Ok(name.parse()?);
    }
    let v = match name.to_ascii_lowercase().as_str() {
        "classic" => Variant::Classic { k: k.unwrap_or(1) },
        "traps" => Variant::Traps { m: m.unwrap_or(1), t: traps.unwrap_or(1) },
        "roadblocks" => Variant::Roadblocks { m: m.unwrap_or(1), b: blocks.unwrap_or(1) },
        "complementary" => Variant::Complementary,
        "tandem" => Variant::Tandem,
        _ => return Err(Usage(format!("unknown variant `{name}`")).into()),
    };
    Ok(v.validate()?)
}

impl VariantArgs {
    fn resolve(&self, cfg: &mut Config) -> Result<Option<Variant>> {
        let Some(name) = &self.variant else {
            if self.k.is_some() || self.m.is_some() || self.traps.is_some() || self.blocks.is_some() {
                return Err(Usage("--k, --m, --traps and --blocks need --variant".into()).into());
            }
            return Ok(None);
        };
        let v = parse_variant(name, self.k, self.m, self.traps, self.blocks)?;
        cfg.flag("--variant", v);
        Ok(Some(v))
    }
}

impl SentenceArgs {
    /// Target id and formula.
    fn resolve(&self, cfg: &mut Config) -> Result<(String, Formula)> {
        sentence_from(&self.formula, &self.axiom, &self.builtin, cfg)
    }
}

fn sentence_from(
    formula: &Option<String>,
    axiom: &Option<String>,
    builtin: &Option<String>,
    cfg: &mut Config,
) -> Result<(String, Formula)> {
    if let Some(text) = formula {
        cfg.flag("--formula", text);
        return Ok((text.clone(), parse_sentence(text)?));
    }
    if let Some(spec) = axiom {
        let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
        let (m, n) = match parts.as_slice() {
            [m, n] => (
                m.parse::<usize>().map_err(|_| Usage(format!("bad --axiom `{spec}`")))?,
                n.parse::<usize>().map_err(|_| Usage(format!("bad --axiom `{spec}`")))?,
            ),
            _ => return Err(Usage(format!("--axiom takes `m,n`, got `{spec}`")).into()),
        };
        cfg.flag("--axiom", format!("{m},{n}"));
        return Ok((format!("ea_{m}_{n}"), extension_axiom(m, n)?));
    }
    if let Some(name) = builtin {
        let b: Builtin = name.parse()?;
        cfg.flag("--builtin", b);
        return Ok((b.to_string(), b.formula()));
    }
    Err(Usage("one of --formula, --axiom or --builtin is required".into()).into())
}

impl TargetArgs {
    fn resolve(&self, cfg: &mut Config) -> Result<Target> {
        if let Some(name) = &self.variant {
            let v = parse_variant(name, self.k, self.m, self.traps, self.blocks)?;
            let who: Winner = self.winner.parse().map_err(|_| Usage(format!("unknown winner `{}`", self.winner)))?;
            cfg.flag("--variant", v).flag("--winner", who.to_string().to_ascii_lowercase());
            return Ok(Target::Win { variant: v, winner: who });
        }
        let (id, f) = sentence_from(&self.formula, &self.axiom, &self.builtin, cfg)?;
        Ok(Target::formula(id, f)?)
    }
}
