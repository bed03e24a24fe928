//! The `ncsym` command-line front end.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failure, 2 on any parse
//! or usage error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::combinatorics::{
    anchored_set_compositions, atomic_set_partitions, set_compositions, set_partitions, SetComposition,
    SetPartition,
};
use crate::error::{Error, Result};
use crate::freeword::{hall_tree, is_lyndon, left_quasi_shuffle, lyndon_factorize, quasi_shuffle, Word};
use crate::hopf::json::{ElementJson, TensorJson};
use crate::hopf::{antipode_of, hall_primitive, primitive, AntipodeMethod, NCSymElement};
use crate::verify::{self, Check};

/// Antipode sums grow like the ordered Bell numbers; warn past this many blocks.
const WARN_PARTS: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "ncsym",
    version,
    about = "Exact computation in NCSym, the power-sum basis"
)]
pub struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Factored,
    Oracle,
}

impl From<Method> for AntipodeMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Direct => AntipodeMethod::Direct,
            Method::Factored => AntipodeMethod::Factored,
            Method::Oracle => AntipodeMethod::Oracle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Partitions,
    Atomic,
    Compositions,
    Anchored,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply elements left to right.
    Product {
        #[arg(required = true, allow_hyphen_values = true)]
        elements: Vec<String>,
    },
    /// Coproduct of an element.
    Coproduct {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Counit of an element.
    Counit {
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Antipode of an element.
    Antipode {
        #[arg(allow_hyphen_values = true)]
        element: String,
        #[arg(long, value_enum, default_value_t = Method::Factored)]
        method: Method,
    },
    /// The primitive p(A) attached to a set partition.
    Primitive { partition: String },
    /// Maximal splitting into atomic pieces.
    Atoms { partition: String },
    /// Whether a set partition is atomic.
    IsAtomic { partition: String },
    /// Apply a set composition to a set partition.
    Eval { composition: String, partition: String },
    /// Quasi-shuffles of two disjoint words.
    Qshuffle {
        u: String,
        v: String,
        /// Only the left quasi-shuffles.
        #[arg(long)]
        left: bool,
    },
    /// Lyndon test and standard factorization of a word of characters.
    Lyndon { word: String },
    /// Hall bracketing of a Lyndon word of characters, or with `--atoms` the
    /// Hall primitive of a Lyndon word of atomic set partitions.
    Hall {
        #[arg(required = true)]
        word: Vec<String>,
        #[arg(long)]
        atoms: bool,
    },
    /// List combinatorial families.
    Enumerate {
        #[arg(value_enum)]
        family: Family,
        n: usize,
        /// Print only the cardinality.
        #[arg(long)]
        count: bool,
    },
    /// Run the verification sweeps.
    Verify {
        #[arg(long)]
        max_weight: usize,
        /// Comma-separated check names (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        /// Seed for spot checks above the exhaustive weight.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Partitions sampled per spot-checked weight.
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
}

fn element(text: &str) -> Result<NCSymElement> {
    NCSymElement::from_text(text)
}

fn partition(text: &str) -> Result<SetPartition> {
    let a: SetPartition = text.parse()?;
    if !a.is_standard() {
        return Err(Error::NotStandard(a.to_string()));
    }
    Ok(a)
}

fn blocks_json(blocks: &[Vec<u32>]) -> serde_json::Value {
    json!(blocks)
}

enum Output {
    Text(String),
    Json(serde_json::Value),
}

struct Reply {
    text: String,
    json: serde_json::Value,
    code: i32,
}

impl Reply {
    fn ok(text: impl Into<String>, json: serde_json::Value) -> Self {
        Reply {
            text: text.into(),
            json,
            code: 0,
        }
    }

    fn element(x: &NCSymElement) -> Self {
        Reply::ok(
            x.to_text(),
            serde_json::to_value(ElementJson::from(x)).expect("json"),
        )
    }

    fn render(self, format: Format) -> (Output, i32) {
        let out = match format {
            Format::Text => Output::Text(self.text),
            Format::Json => Output::Json(self.json),
        };
        (out, self.code)
    }
}

fn warn_parts(x: &NCSymElement, err: &mut impl Write) {
    if let Some(a) = x.support().find(|a| a.len() > WARN_PARTS) {
        let _ = writeln!(
            err,
            "warning: {a} has {} blocks; sums over set compositions grow very quickly",
            a.len()
        );
    }
}

fn execute(command: Command, err: &mut impl Write) -> Result<Reply> {
    Ok(match command {
        Command::Product { elements } => {
            let mut acc = crate::hopf::unit();
            for e in &elements {
                acc = acc.product(&element(e)?);
            }
            Reply::element(&acc)
        }
        Command::Coproduct { element: e } => {
            let t = element(&e)?.coproduct();
            Reply::ok(
                t.to_text(),
                serde_json::to_value(TensorJson::from(&t)).expect("json"),
            )
        }
        Command::Counit { element: e } => {
            let c = element(&e)?.counit().to_string();
            Reply::ok(c.clone(), json!(c))
        }
        Command::Antipode { element: e, method } => {
            let x = element(&e)?;
            warn_parts(&x, err);
            Reply::element(&antipode_of(&x, method.into())?)
        }
        Command::Primitive { partition: p } => {
            let a = partition(&p)?;
            warn_parts(&NCSymElement::basis(a.clone()), err);
            Reply::element(&primitive(&a)?)
        }
        Command::Atoms { partition: p } => {
            let f = partition(&p)?.atomic_factorization()?;
            let j: Vec<_> = f.atoms().iter().map(|a| blocks_json(a.blocks())).collect();
            Reply::ok(f.to_string(), json!(j))
        }
        Command::IsAtomic { partition: p } => {
            let b = partition(&p)?.is_atomic()?;
            Reply::ok(b.to_string(), json!(b))
        }
        Command::Eval {
            composition,
            partition: p,
        } => {
            let g: SetComposition = composition.parse()?;
            let a: SetPartition = p.parse()?;
            let r = g.evaluate(&a)?;
            Reply::ok(r.to_string(), blocks_json(r.blocks()))
        }
        Command::Qshuffle { u, v, left } => {
            let (u, v): (Word, Word) = (u.parse()?, v.parse()?);
            let set = if left {
                left_quasi_shuffle(&u, &v)?
            } else {
                quasi_shuffle(&u, &v)?
            };
            let text: Vec<String> = set.iter().map(ToString::to_string).collect();
            let j: Vec<_> = set.iter().map(|w| blocks_json(w.letters())).collect();
            Reply::ok(text.join("\n"), json!(j))
        }
        Command::Lyndon { word } => {
            let letters: Vec<char> = word.chars().collect();
            let lyndon = is_lyndon(&letters)?;
            let factors = if lyndon && letters.len() > 1 {
                let (u, v) = lyndon_factorize(&letters)?;
                Some((u.iter().collect::<String>(), v.iter().collect::<String>()))
            } else {
                None
            };
            let mut text = lyndon.to_string();
            if let Some((u, v)) = &factors {
                text.push_str(&format!("\n({u}, {v})"));
            }
            Reply::ok(
                text,
                json!({ "lyndon": lyndon, "factorization": factors.map(|(u, v)| vec![u, v]) }),
            )
        }
        Command::Hall { word, atoms } => {
            if atoms {
                let atoms = word.iter().map(|s| partition(s)).collect::<Result<Vec<_>>>()?;
                Reply::element(&hall_primitive(&atoms)?)
            } else {
                if word.len() != 1 {
                    return Err(Error::parse(word.join(" "), "expected a single word"));
                }
                let letters: Vec<char> = word[0].chars().collect();
                let tree = hall_tree(&letters)?.to_string();
                Reply::ok(tree.clone(), json!(tree))
            }
        }
        Command::Enumerate { family, n, count } => {
            let items: Vec<(String, Vec<Vec<u32>>)> = match family {
                Family::Partitions => listing(set_partitions(n)),
                Family::Atomic => listing(atomic_set_partitions(n)),
                Family::Compositions => listing_c(set_compositions(n)),
                Family::Anchored => listing_c(anchored_set_compositions(n)),
            };
            if count {
                Reply::ok(items.len().to_string(), json!(items.len()))
            } else {
                let text: Vec<&str> = items.iter().map(|(s, _)| s.as_str()).collect();
                let j: Vec<_> = items.iter().map(|(_, b)| blocks_json(b)).collect();
                Reply::ok(text.join("\n"), json!(j))
            }
        }
        Command::Verify {
            max_weight,
            checks,
            seed,
            samples,
        } => {
            let mut config = verify::Config::new(max_weight);
            config.seed = seed;
            config.samples = samples;
            if let Some(names) = checks {
                config.checks = names
                    .iter()
                    .map(|s| s.trim().parse::<Check>())
                    .collect::<Result<_>>()?;
            }
            let outcomes = verify::run(&config);
            let passed = outcomes.iter().all(verify::Outcome::passed);
            for f in outcomes.iter().flat_map(|o| &o.failures) {
                let _ = writeln!(err, "{}", serde_json::to_string(f).expect("json"));
            }
            let mut lines: Vec<String> = outcomes.iter().map(ToString::to_string).collect();
            lines.push(format!(
                "verify max-weight={max_weight}: {}",
                if passed { "ok" } else { "FAILED" }
            ));
            let j = json!({
                "max_weight": max_weight,
                "passed": passed,
                "checks": outcomes.iter().map(|o| json!({
                    "check": o.check.name(),
                    "cases": o.cases,
                    "failures": o.failures.len(),
                })).collect::<Vec<_>>(),
            });
            Reply {
                text: lines.join("\n"),
                json: j,
                code: if passed { 0 } else { 1 },
            }
        }
    })
}

fn listing(v: Vec<SetPartition>) -> Vec<(String, Vec<Vec<u32>>)> {
    v.into_iter()
        .map(|a| (a.to_string(), a.blocks().to_vec()))
        .collect()
}

fn listing_c(v: Vec<SetComposition>) -> Vec<(String, Vec<Vec<u32>>)> {
    v.into_iter()
        .map(|g| (g.to_string(), g.parts().to_vec()))
        .collect()
}

/// Parse `args` (including the program name) and run, writing to `out` and
/// `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command, err) {
        Ok(reply) => {
            let (output, code) = reply.render(cli.format);
            let _ = match output {
                Output::Text(s) => writeln!(out, "{s}"),
                Output::Json(v) => writeln!(out, "{v}"),
            };
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

pub fn main_entry() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
