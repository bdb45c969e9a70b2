use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use belnap_core::database::{
    canonical_values, is_consistent_db, parse_database_file, theory_entails,
    theory_entails_generic, DatabaseError, DatabaseFile, DEFAULT_MAX_STRUCTURES,
    DEFAULT_MAX_UNIVERSE,
};
use belnap_core::proof::{check_derivation, parse_proof_file, ProofError, RuleSystem};
use belnap_core::query::{
    answers, consistent_answers, repairs, repairs_exhaustive, strongly_consistent_answers,
    without_nulls, AnswerTuple,
};
use belnap_core::syntax::parse_formula;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "belnap",
    version,
    about = "Four-valued databases, query answering and proof checking"
)]
struct Cli {
    /// Refuse enumerations over more structures than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STRUCTURES)]
    max_structures: u64,
    /// Refuse exhaustive repair search over more ground atoms than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_UNIVERSE)]
    max_universe: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report whether a database's facts satisfy its constraints.
    Check { file: PathBuf },
    /// Answer a query declared in the database file.
    Answer {
        file: PathBuf,
        #[arg(long)]
        query: String,
        #[arg(long, value_enum, default_value_t = Mode::Plain)]
        mode: Mode,
        /// Drop tuples that mention `nil`.
        #[arg(long)]
        no_nulls: bool,
    },
    /// List the repairs of a database, one fact base per line.
    Repairs {
        file: PathBuf,
        /// Search change sets by size instead of using the solver.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Check a derivation file.
    Prove {
        file: PathBuf,
        #[arg(long, default_value = "bd")]
        system: String,
    },
    /// Print a closed formula's value in each canonical model of a database,
    /// labelled by the facts that model makes both true and false.
    Eval {
        file: PathBuf,
        #[arg(long)]
        formula: String,
        /// Print whether the facts entail the formula instead of its values.
        #[arg(long)]
        entails: bool,
        /// Decide entailment by enumerating all relational structures.
        #[arg(long)]
        generic: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Plain,
    Consistent,
    Strong,
}

/// Exit statuses.
const INVALID_PROOF: u8 = 1;
const PARSE_ERROR: u8 = 2;
const VALIDATION_ERROR: u8 = 3;
const RESOURCE_LIMIT: u8 = 4;

struct Failure {
    code: u8,
    message: String,
}

impl From<DatabaseError> for Failure {
    fn from(e: DatabaseError) -> Self {
        let code = if e.is_resource_limit() {
            RESOURCE_LIMIT
        } else if e.is_parse_error() {
            PARSE_ERROR
        } else {
            VALIDATION_ERROR
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| fail(PARSE_ERROR, format!("{}: {e}", path.display())))
}

fn load_database(path: &Path) -> Result<DatabaseFile, Failure> {
    Ok(parse_database_file(&read(path)?)?)
}

fn tuple_line(t: &AnswerTuple) -> String {
    if t.is_empty() {
        "()".to_owned()
    } else {
        t.join(",")
    }
}

fn run(cli: Cli) -> Result<Vec<String>, Failure> {
    let mut out = Vec::new();
    match cli.command {
        Command::Check { file } => {
            let db = load_database(&file)?.database;
            let report = is_consistent_db(&db)?;
            if report.consistent {
                out.push("consistent".to_owned());
            } else {
                out.push("inconsistent".to_owned());
                for &i in &report.violated {
                    out.push(format!("violated: {}", db.constraints()[i]));
                }
                if let Some(w) = report.witness {
                    out.push(format!("conflict: {w}"));
                }
                if !report.theory_satisfiable {
                    out.push("the facts have no model satisfying the constraints".to_owned());
                }
            }
        }
        Command::Answer {
            file,
            query,
            mode,
            no_nulls,
        } => {
            let parsed = load_database(&file)?;
            let q = parsed
                .query(&query)
                .ok_or_else(|| fail(VALIDATION_ERROR, format!("no query named `{query}`")))?;
            let db = &parsed.database;
            let mut tuples = match mode {
                Mode::Plain => answers(db, q)?,
                Mode::Consistent => consistent_answers(db, q)?,
                Mode::Strong => {
                    let strong = strongly_consistent_answers(db, q)?;
                    if strong.vacuous {
                        eprintln!(
                            "note: the database has no repairs; every tuple qualifies vacuously"
                        );
                    }
                    strong.tuples
                }
            };
            if no_nulls {
                tuples = without_nulls(tuples);
            }
            out.extend(tuples.iter().map(tuple_line));
        }
        Command::Repairs { file, exhaustive } => {
            let db = load_database(&file)?.database;
            let found = if exhaustive {
                repairs_exhaustive(&db, cli.max_universe)?
            } else {
                repairs(&db)?
            };
            out.extend(found.iter().map(|r| r.to_string()));
        }
        Command::Prove { file, system } => {
            let system: RuleSystem = system
                .parse()
                .map_err(|e: String| fail(VALIDATION_ERROR, e))?;
            let proof = parse_proof_file(&read(&file)?).map_err(|e| match e {
                ProofError::Parse { .. } => fail(PARSE_ERROR, e.to_string()),
                other => fail(INVALID_PROOF, format!("invalid: {other}")),
            })?;
            let d = &proof.derivation;
            let hypotheses: Vec<_> = d.hypotheses().into_iter().cloned().collect();
            if let Err(e) = check_derivation(system, d, &hypotheses) {
                let message = match e {
                    ProofError::InvalidStep { step, reason } => {
                        format!("invalid at step {step}: {reason}")
                    }
                    other => format!("invalid: {other}"),
                };
                return Err(fail(INVALID_PROOF, message));
            }
            out.push("valid".to_owned());
            out.extend(hypotheses.iter().map(|h| format!("assuming: {h}")));
        }
        Command::Eval {
            file,
            formula,
            entails,
            generic,
        } => {
            let db = load_database(&file)?.database;
            let lang = db.language();
            let a = parse_formula(&formula, lang.signature())
                .map_err(|e| fail(PARSE_ERROR, format!("formula: {e}")))?;
            if entails || generic {
                let entailed = if generic {
                    theory_entails_generic(lang, db.basis(), &a, cli.max_structures)?
                } else {
                    theory_entails(lang, db.basis(), &a)?
                };
                out.push(if entailed { "entailed" } else { "not entailed" }.to_owned());
            } else {
                // the k-th canonical model makes the i-th fact glutted iff bit i of k is set
                let facts: Vec<_> = db.basis().iter().collect();
                for (k, v) in canonical_values(lang, db.basis(), &a, cli.max_structures)?
                    .iter()
                    .enumerate()
                {
                    let glutted: Vec<String> = facts
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| k >> i & 1 == 1)
                        .map(|(_, f)| f.to_string())
                        .collect();
                    out.push(format!("{{{}}}: {v}", glutted.join(", ")));
                }
            }
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(lines) => {
            for line in lines {
                println!("{line}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure { code, message }) => {
            // a rejected proof is a verdict, not a malfunction
            if code == INVALID_PROOF {
                println!("{message}");
            } else {
                eprintln!("{message}");
            }
            ExitCode::from(code)
        }
    }
}
