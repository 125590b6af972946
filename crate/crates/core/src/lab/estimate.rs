use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::game::{check_budget, game_value_with_budget, Variant, Winner, DEFAULT_MAX_STATES};
use crate::graph::{gnp_sample, gnpn_sample, Graph, GraphError, PFamily};
use crate::logic::{Formula, Sentence};

use super::format::fmt_sig;
use super::seed::trial_seed;
use super::stats::wilson_interval;
use super::LabError;

/// Edge probability: fixed, or a function of the graph size.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PSpec {
    Const(f64),
    Family(PFamily),
}

impl PSpec {
    pub fn sample(&self, n: usize, seed: u64) -> Result<Graph, GraphError> {
        match self {
            PSpec::Const(p) => gnp_sample(n, *p, seed),
            PSpec::Family(f) => gnpn_sample(n, f, seed),
        }
    }

    pub fn at(&self, n: usize) -> f64 {
        match self {
            PSpec::Const(p) => *p,
            PSpec::Family(f) => f.eval(n),
        }
    }
}

impl fmt::Display for PSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PSpec::Const(p) => f.write_str(&fmt_sig(*p)),
            PSpec::Family(fam) => write!(f, "{},{},{}", fmt_sig(fam.c), fmt_sig(fam.alpha), fmt_sig(fam.beta)),
        }
    }
}

impl FromStr for PSpec {
    type Err = GraphError;

    /// A single number is a constant probability, `c,alpha,beta` a family.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.contains(',') {
            return Ok(PSpec::Family(s.parse()?));
        }
        let p: f64 = s.trim().parse().map_err(|_| GraphError::InvalidProbability(f64::NAN))?;
        if !(0.0..=1.0).contains(&p) {
            return Err(GraphError::InvalidProbability(p));
        }
        Ok(PSpec::Const(p))
    }
}

/// What a trial counts as a success.
#[derive(Clone, Debug)]
pub enum Target {
    Formula { id: String, sentence: Sentence },
    Win { variant: Variant, winner: Winner },
}

impl Target {
    pub fn formula(id: impl Into<String>, f: Formula) -> Result<Target, LabError> {
        Ok(Target::Formula { id: id.into(), sentence: Sentence::new(f)? })
    }

    pub fn id(&self) -> String {
        match self {
            Target::Formula { id, .. } => id.clone(),
            Target::Win { variant, winner } => format!("win:{variant}:{winner}"),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct EstimateOptions {
    pub samples: u64,
    pub master_seed: u64,
    /// Worker threads; results do not depend on this.
    pub jobs: usize,
    pub max_states: u64,
}

impl EstimateOptions {
    pub fn new(samples: u64, master_seed: u64) -> EstimateOptions {
        EstimateOptions { samples, master_seed, jobs: 1, max_states: DEFAULT_MAX_STATES }
    }

    pub fn jobs(self, jobs: usize) -> EstimateOptions {
        EstimateOptions { jobs, ..self }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EstimateReport {
    pub target_id: String,
    pub n: usize,
    pub p_or_family: String,
    pub samples: u64,
    pub successes: u64,
    pub estimate: f64,
    /// 95% Wilson interval.
    pub ci_low: f64,
    pub ci_high: f64,
    pub master_seed: u64,
    pub wall_ms: u64,
}

impl EstimateReport {
    pub fn exact_estimate(&self) -> Ratio<u64> {
        Ratio::new(self.successes, self.samples)
    }

    /// JSON object with floats rounded to six significant digits.
    pub fn to_json(&self) -> Value {
        let round = |x: f64| fmt_sig(x).parse::<f64>().expect("formatted float parses");
        json!({
            "target_id": self.target_id,
            "n": self.n,
            "p_or_family": self.p_or_family,
            "samples": self.samples,
            "successes": self.successes,
            "estimate": round(self.estimate),
            "ci_low": round(self.ci_low),
            "ci_high": round(self.ci_high),
            "master_seed": self.master_seed,
            "wall_ms": self.wall_ms,
        })
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            csv_field(&self.target_id),
            self.n,
            csv_field(&self.p_or_family),
            self.samples,
            self.successes,
            fmt_sig(self.estimate),
            fmt_sig(self.ci_low),
            fmt_sig(self.ci_high),
            self.master_seed,
            self.wall_ms
        )
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn with_pool<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> Result<T, LabError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| LabError::BadParameter(format!("thread pool: {e}")))?;
    Ok(pool.install(work))
}

/// Counts successes over `samples` independent graphs drawn from `p`.
pub fn estimate(target: &Target, n: usize, p: &PSpec, opts: &EstimateOptions) -> Result<EstimateReport, LabError> {
    if opts.samples == 0 {
        return Err(LabError::BadParameter("samples must be at least 1".into()));
    }
    let started = Instant::now();
    p.sample(n, opts.master_seed)?;
    if let Target::Win { variant, .. } = target {
        // Worst case over all graphs on n vertices.
        check_budget(&Graph::complete(n)?, variant.validate()?, opts.max_states)?;
    }
    let trial = |i: u64| -> Result<bool, LabError> {
        let g = p.sample(n, trial_seed(opts.master_seed, i))?;
        Ok(match target {
            Target::Formula { sentence, .. } => sentence.holds(&g),
            Target::Win { variant, winner } => game_value_with_budget(&g, *variant, opts.max_states)? == *winner,
        })
    };
    let outcomes: Vec<bool> =
        with_pool(opts.jobs, || (0..opts.samples).into_par_iter().map(trial).collect::<Result<Vec<_>, _>>())??;
    let successes = outcomes.iter().filter(|&&b| b).count() as u64;
    let (ci_low, ci_high) = wilson_interval(successes, opts.samples, 0.95);
    Ok(EstimateReport {
        target_id: target.id(),
        n,
        p_or_family: p.to_string(),
        samples: opts.samples,
        successes,
        estimate: successes as f64 / opts.samples as f64,
        ci_low,
        ci_high,
        master_seed: opts.master_seed,
        wall_ms: started.elapsed().as_millis() as u64,
    })
}

/// Monte Carlo estimate of `μ_n(f)` under `G(n, p)`.
pub fn estimate_mu(
    id: &str,
    f: &Formula,
    n: usize,
    p: &PSpec,
    opts: &EstimateOptions,
) -> Result<EstimateReport, LabError> {
    estimate(&Target::formula(id, f.clone())?, n, p, opts)
}

/// Fraction of sampled graphs on which `who` wins `v`.
pub fn estimate_win(
    v: Variant,
    who: Winner,
    n: usize,
    p: &PSpec,
    opts: &EstimateOptions,
) -> Result<EstimateReport, LabError> {
    estimate(&Target::Win { variant: v, winner: who }, n, p, opts)
}

pub struct SweepRow {
    pub n: usize,
    pub result: Result<EstimateReport, LabError>,
}

/// One report per size, in the given order; failures stay in their row.
pub fn sweep(target: &Target, sizes: &[usize], p: &PSpec, opts: &EstimateOptions) -> Vec<SweepRow> {
    sizes
        .iter()
        .map(|&n| SweepRow { n, result: estimate(target, n, p, opts) })
        .collect()
}

pub const CSV_HEADER: &str = "target_id,n,p_or_family,samples,successes,estimate,ci_low,ci_high,master_seed,wall_ms";

/// CSV body (header line included) for a sweep.
pub fn sweep_csv(target: &Target, p: &PSpec, opts: &EstimateOptions, rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        match &row.result {
            Ok(r) => out.push_str(&r.csv_line()),
            Err(e) => out.push_str(&format!(
                "{},{},{},,,ERR:{},,,{},",
                csv_field(&target.id()),
                row.n,
                csv_field(&p.to_string()),
                e.kind(),
                opts.master_seed
            )),
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::lab::exact_mu;
    use crate::logic::{extension_axiom, parse_sentence, Builtin};

    #[test]
    fn empty_graph_never_at_p_one() {
        let f = Builtin::EmptyGraph.formula();
        let r = estimate_mu("empty_graph", &f, 5, &PSpec::Const(1.0), &EstimateOptions::new(50, 1)).unwrap();
        assert_eq!(r.successes, 0);
        assert_eq!(r.estimate, 0.0);
        assert!(r.ci_low <= r.estimate && r.estimate <= r.ci_high);
    }

    #[test]
    fn degenerate_p_reproduces_game_value() {
        // p = 1 always yields K4, p = 0 the empty graph.
        let opts = EstimateOptions::new(20, 3);
        let r = estimate_win(Variant::Classic { k: 1 }, Winner::Cop, 4, &PSpec::Const(1.0), &opts).unwrap();
        assert_eq!(r.successes, 20);
        let r = estimate_win(Variant::Classic { k: 1 }, Winner::Robber, 4, &PSpec::Const(0.0), &opts).unwrap();
        assert_eq!(r.successes, 20);
        let c4 = named("c4").unwrap();
        assert_eq!(crate::game::game_value(&c4, Variant::Classic { k: 1 }).unwrap(), Winner::Robber);
    }

    #[test]
    fn reports_do_not_depend_on_jobs() {
        let f = extension_axiom(1, 2).unwrap();
        let strip = |mut r: EstimateReport| {
            r.wall_ms = 0;
            r
        };
        let a = estimate_mu("ea_1_2", &f, 12, &PSpec::Const(0.5), &EstimateOptions::new(300, 9)).unwrap();
        let b = estimate_mu("ea_1_2", &f, 12, &PSpec::Const(0.5), &EstimateOptions::new(300, 9).jobs(4)).unwrap();
        assert_eq!(strip(a), strip(b));
    }

    #[test]
    fn monte_carlo_brackets_exact_value() {
        let f = parse_sentence("forall x exists y E(x,y)").unwrap();
        let exact = exact_mu(&f, 5).unwrap();
        let exact = *exact.numer() as f64 / *exact.denom() as f64;
        let r = estimate_mu("no_isolated", &f, 5, &PSpec::Const(0.5), &EstimateOptions::new(4000, 5)).unwrap();
        let (lo, hi) = wilson_interval(r.successes, r.samples, 0.999);
        assert!(lo <= exact && exact <= hi, "{lo} {exact} {hi}");
    }

    #[test]
    fn budget_is_checked_before_sampling() {
        let err = estimate_win(
            Variant::Classic { k: 4 },
            Winner::Robber,
            60,
            &PSpec::Const(0.5),
            &EstimateOptions::new(10, 1),
        )
        .unwrap_err();
        assert_eq!(err.kind(), "budget");
    }

    #[test]
    fn sweep_keeps_going_after_errors() {
        let target = Target::Win { variant: Variant::Classic { k: 3 }, winner: Winner::Robber };
        let opts = EstimateOptions { max_states: 100_000, ..EstimateOptions::new(3, 2) };
        let rows = sweep(&target, &[8, 200, 9], &PSpec::Const(0.5), &opts);
        assert!(rows[0].result.is_ok() && rows[1].result.is_err() && rows[2].result.is_ok());
        let csv = sweep_csv(&target, &PSpec::Const(0.5), &opts, &rows);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines[2], "win:classic:3:Robber,200,0.5,,,ERR:budget,,,2,");
        assert_eq!(lines[1].split(',').count(), 10);
    }

    #[test]
    fn family_specs_quote_in_csv() {
        let p: PSpec = "1,2.5,0".parse().unwrap();
        assert_eq!(p.to_string(), "1,2.5,0");
        let f = Builtin::EmptyGraph.formula();
        let r = estimate_mu("empty_graph", &f, 30, &p, &EstimateOptions::new(5, 1)).unwrap();
        assert!(r.csv_line().starts_with("empty_graph,30,\"1,2.5,0\",5,"));
        assert!("1.5".parse::<PSpec>().is_err());
    }
}
