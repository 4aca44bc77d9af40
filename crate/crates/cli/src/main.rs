//! `gencircuits`: command-line front end.
//!
//! Every command reads an ideal file, runs one computation and writes a JSON
//! document that echoes the resolved configuration. Exit code 0 means a
//! result, 2 an outcome the method could not certify, 1 bad input.

mod commands;
mod input;
mod json;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

pub use input::{parse_field, parse_ideal_file, read_ideal_file};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] gencircuits::Error),
}

/// Environment variable holding the default seed.
pub const SEED_ENV: &str = "GENCIRCUITS_SEED";

#[derive(Parser, Debug)]
#[command(name = "gencircuits", version, about = "Circuits sets, weight initial ideals and Groebner-fan cells")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Serialize)]
pub struct Common {
    /// Ideal file.
    pub input: PathBuf,
    /// Coefficient field overriding the file header: `q` or `gf:<p>`.
    #[arg(long)]
    pub field: Option<String>,
    /// Write the JSON document here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    /// Leave out the `generated_at` field.
    #[arg(long)]
    pub no_timestamp: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct Randomness {
    #[arg(long, env = SEED_ENV, default_value_t = 0)]
    pub seed: u64,
    /// Entries of random matrices are drawn from `[-b, b]` over Q.
    #[arg(long, default_value_t = gencircuits::generic::DEFAULT_ENTRY_BOUND)]
    pub entry_bound: u64,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Reduced Groebner basis.
    Gb {
        #[command(flatten)]
        common: Common,
        /// `lex`, `drl` or `w:<weights>;tie=<order>`.
        #[arg(long, default_value = "drl")]
        order: String,
    },
    /// Weight initial ideal.
    Inw {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value = "drl")]
        tie: String,
    },
    /// Circuits of the ideal up to a degree, or in one degree.
    Circuits {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "degree", required_unless_present = "degree")]
        trunc: Option<u32>,
        #[arg(long)]
        degree: Option<u32>,
        /// Largest circuit size to enumerate; smaller than needed gives exit 2.
        #[arg(long)]
        size_cap: Option<usize>,
    },
    /// Certified truncated generic circuits set.
    Gcs {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        trunc: u32,
        #[command(flatten)]
        random: Randomness,
        #[arg(long, default_value_t = 8)]
        retries: u32,
    },
    /// Rank vector of a graded piece; the weight is sorted first.
    Alpha {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        degree: u32,
    },
    /// Gröbner-fan cell of a weight.
    FanCell {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value = "drl")]
        tie: String,
    },
    /// Cells met by a box of sampled weights.
    FanEnum {
        #[command(flatten)]
        common: Common,
        #[arg(long = "box", default_value_t = 4)]
        bound: i64,
        #[arg(long, default_value_t = 1)]
        step: i64,
        #[arg(long, default_value = "drl")]
        tie: String,
        #[arg(long, env = SEED_ENV, default_value_t = 0)]
        seed: u64,
    },
    /// Fan comparison through circuits sets truncated at the lex bound.
    FanCompare {
        #[command(flatten)]
        common: Common,
        /// The second ideal file.
        #[arg(long)]
        other: PathBuf,
        /// Compare `cs` instead of `gcs`.
        #[arg(long, conflicts_with = "generic")]
        deterministic: bool,
        /// Compare `gcs` (the default).
        #[arg(long)]
        generic: bool,
        #[command(flatten)]
        random: Randomness,
        #[arg(long, default_value_t = 8)]
        retries: u32,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Invariance of `in_w(gI)` under the unipotent group of the weight.
    Stab {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long, default_value_t = 2)]
        gtrials: u32,
        #[arg(long, default_value_t = 5)]
        btrials: u32,
        #[command(flatten)]
        random: Randomness,
    },
    /// Hilbert function.
    Hf {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Lex-segment ideal with the same Hilbert function.
    Lexseg {
        #[command(flatten)]
        common: Common,
        /// Certify at exactly this cap.
        #[arg(long, conflicts_with = "max_cap")]
        cap: Option<u32>,
        /// Raise the cap from the default until certified, up to this value.
        #[arg(long)]
        max_cap: Option<u32>,
    },
    /// Union of the reduced bases of the cells met by a box.
    Ugb {
        #[command(flatten)]
        common: Common,
        #[arg(long = "box", default_value_t = 4)]
        bound: i64,
        #[arg(long, default_value_t = 1)]
        step: i64,
    },
    /// The flat family joining `I` to `in_w(I)` and some of its fibres.
    Flatfam {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Comma-separated values of `t`.
        #[arg(long, default_value = "0,1,2", allow_hyphen_values = true)]
        at: String,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Gb { common, .. }
            | Command::Inw { common, .. }
            | Command::Circuits { common, .. }
            | Command::Gcs { common, .. }
            | Command::Alpha { common, .. }
            | Command::FanCell { common, .. }
            | Command::FanEnum { common, .. }
            | Command::FanCompare { common, .. }
            | Command::Stab { common, .. }
            | Command::Hf { common, .. }
            | Command::Lexseg { common, .. }
            | Command::Ugb { common, .. }
            | Command::Flatfam { common, .. } => common,
        }
    }

    /// The subcommand name with its resolved flags.
    fn config(&self) -> (String, Value) {
        match serde_json::to_value(self).expect("arguments serialize") {
            Value::Object(map) if map.len() == 1 => {
                let (name, mut cfg) = map.into_iter().next().unwrap();
                flatten_config(&mut cfg);
                (name, cfg)
            }
            other => (String::new(), other),
        }
    }
}

/// Lifts the shared groups (`common`, `random`) into the top level.
fn flatten_config(cfg: &mut Value) {
    let Value::Object(map) = cfg else { return };
    for group in ["common", "random"] {
        if let Some(Value::Object(inner)) = map.remove(group) {
            map.extend(inner);
        }
    }
    map.remove("no_timestamp");
    map.remove("output");
}

/// What a command produced.
pub enum Outcome {
    Done(Value),
    /// A certification the method could not give, with a short reason code.
    Uncertified { reason: &'static str, message: String, result: Value },
}

fn timestamp() -> u64 {
    std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

/// Runs one command and returns the JSON document and the exit code.
pub fn run(cmd: &Command) -> (Value, u8) {
    let (name, config) = cmd.config();
    let mut doc = json!({ "command": name, "config": config });
    let code = match commands::dispatch(cmd) {
        Ok((ring, Outcome::Done(result))) => {
            doc["status"] = json!("ok");
            doc["ring"] = ring;
            doc["result"] = result;
            0
        }
        Ok((ring, Outcome::Uncertified { reason, message, result })) => {
            doc["status"] = json!("uncertified");
            doc["reason"] = json!(reason);
            doc["message"] = json!(message);
            doc["ring"] = ring;
            doc["result"] = result;
            2
        }
        Err(CliError::Core(e)) if commands::certification_reason(&e).is_some() => {
            doc["status"] = json!("uncertified");
            doc["reason"] = json!(commands::certification_reason(&e));
            doc["message"] = json!(e.to_string());
            2
        }
        Err(e) => {
            doc["status"] = json!("error");
            doc["message"] = json!(e.to_string());
            1
        }
    };
    if let Some(field) = doc.get("ring").map(|r| r["field"].clone()) {
        doc["config"]["field"] = field;
    }
    if !cmd.common().no_timestamp {
        doc["generated_at"] = json!(timestamp());
    }
    (doc, code)
}

fn main() -> ExitCode {
    // Usage errors are malformed input; clap's own code 2 is reserved here.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (doc, code) = run(&cli.command);
    if code == 1 {
        eprintln!("gencircuits: {}", doc["message"].as_str().unwrap_or("error"));
    }
    let text = serde_json::to_string_pretty(&doc).expect("JSON values serialize") + "\n";
    let written = match &cli.command.common().output {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("gencircuits: cannot write output: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(code)
}
