//! Canonical command line embedded in every output.

use std::fmt::{self, Display};

use serde_json::{json, Value};

use super::{Cmd, Global};

/// Error caused by how the command was invoked rather than by its inputs.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// Arguments that reproduce a run. `--jobs` is left out since it never
/// changes the output.
pub struct Config {
    subcommand: &'static str,
    args: Vec<String>,
    json: bool,
    seed: u64,
    max_states: u64,
    max_samples: u64,
}

impl Config {
    pub fn new(cmd: &Cmd, g: &Global) -> Config {
        let subcommand = match cmd {
            Cmd::Gen { .. } => "gen",
            Cmd::Solve { .. } => "solve",
            Cmd::Eval { .. } => "eval",
            Cmd::Mu { .. } => "mu",
            Cmd::Sweep { .. } => "sweep",
            Cmd::Threshold { .. } => "threshold",
        };
        Config {
            subcommand,
            args: Vec::new(),
            json: g.json,
            seed: g.seed,
            max_states: g.max_states,
            max_samples: g.max_samples,
        }
    }

    pub fn flag(&mut self, name: &str, value: impl Display) -> &mut Config {
        self.args.push(name.to_string());
        self.args.push(value.to_string());
        self
    }

    pub fn switch(&mut self, name: &str) -> &mut Config {
        self.args.push(name.to_string());
        self
    }

    pub fn positional(&mut self, value: impl Display) -> &mut Config {
        self.args.push(value.to_string());
        self
    }

    /// Shell-quoted command line.
    pub fn command(&self) -> String {
        let mut words = vec!["pursuit".to_string(), self.subcommand.to_string()];
        words.extend(self.args.iter().cloned());
        words.extend([
            "--seed".to_string(),
            self.seed.to_string(),
            "--max-states".to_string(),
            self.max_states.to_string(),
            "--max-samples".to_string(),
            self.max_samples.to_string(),
        ]);
        if self.json {
            words.push("--json".to_string());
        }
        shlex::try_join(words.iter().map(String::as_str)).expect("arguments contain no NUL bytes")
    }

    /// `# cmd: ...` line for text and CSV output.
    pub fn header(&self) -> String {
        format!("# cmd: {}", self.command())
    }

    /// Adds a `config` object to a JSON body.
    pub fn wrap_json(&self, mut body: Value) -> Value {
        body["config"] = json!({
            "cmd": self.command(),
            "seed": self.seed,
            "max_states": self.max_states,
            "max_samples": self.max_samples,
        });
        body
    }

    /// Prints `body` as JSON or `text` under the header line.
    pub fn emit(&self, body: Value, text: &str) {
        if self.json {
            println!("{}", self.wrap_json(body));
        } else {
            println!("{}\n{text}", self.header());
        }
    }
}
