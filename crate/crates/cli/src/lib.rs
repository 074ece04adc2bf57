//! Command-line front end for `flypecheck`.

pub mod report;

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use flypecheck::diagram::CodeFormat;
use flypecheck::flype::DEFAULT_BUDGET;

use report::{analyse, render_text, MethodChoice, Options, Report, Section};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Pd,
    Gauss,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    Oracle,
    Structured,
    Both,
}

#[derive(Debug, Parser)]
#[command(name = "flypecheck", version, about = "Flypes, decompositions and achirality of alternating knot diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Input code format.
    #[arg(long, value_enum, default_value = "pd", global = true)]
    pub format: FormatArg,
    /// Emit the JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, value_enum, default_value = "both", global = true)]
    pub method: MethodArg,
    /// Maximum number of diagrams in a flype closure.
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    pub budget: usize,
    /// Seed for greedy orders and random flype walks.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Include wall-clock timings (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a code and print it back.
    Parse { code: Option<String> },
    /// Check the hypotheses: connected, prime, reduced, alternating, knot.
    Validate { code: Option<String> },
    /// Canonical Haseman family and piece classes.
    Decompose { code: Option<String> },
    /// Structure tree term.
    Tree { code: Option<String> },
    /// Flype sites, orbits and closure size.
    Flypes { code: Option<String> },
    /// Decide +/- achirality.
    Achiral { code: Option<String> },
    /// Synthesize and verify the involution of a minus-achiral knot.
    TaitWitness { code: Option<String> },
    /// Checkerboard graphs and their equivalence.
    Checkerboard { code: Option<String> },
    /// Full report for every line of a file (`-` for stdin).
    Corpus { path: String },
}

/// Counts over a corpus run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub lines: usize,
    pub malformed: usize,
    pub rows: usize,
    pub invalid: usize,
    pub budget_exceeded: usize,
    pub chiral: usize,
    pub plus_only: usize,
    pub minus_only: usize,
    pub fully_achiral: usize,
    pub disagreements: usize,
    pub witnesses_verified: usize,
    pub witness_failures: usize,
}

impl Summary {
    fn add(&mut self, r: &Report) {
        self.lines += 1;
        match r.exit_code() {
            2 => {
                self.malformed += 1;
                return;
            }
            3 => self.budget_exceeded += 1,
            1 if r.achirality.is_none() => self.invalid += 1,
            _ => {}
        }
        self.rows += 1;
        if let Some(a) = &r.achirality {
            match (a.plus, a.minus) {
                (false, false) => self.chiral += 1,
                (true, false) => self.plus_only += 1,
                (false, true) => self.minus_only += 1,
                (true, true) => self.fully_achiral += 1,
            }
            if a.agree == Some(false) {
                self.disagreements += 1;
            }
            if a.minus {
                match &r.tait_witness {
                    Some(w) if w.verified => self.witnesses_verified += 1,
                    _ => self.witness_failures += 1,
                }
            }
        }
    }

    pub fn table(&self) -> String {
        let rows = [
            ("lines", self.lines),
            ("malformed", self.malformed),
            ("reported", self.rows),
            ("invalid", self.invalid),
            ("budget exceeded", self.budget_exceeded),
            ("chiral", self.chiral),
            ("+achiral only", self.plus_only),
            ("-achiral only", self.minus_only),
            ("fully achiral", self.fully_achiral),
            ("method disagreements", self.disagreements),
            ("witnesses verified", self.witnesses_verified),
            ("witness failures", self.witness_failures),
        ];
        rows.iter().map(|(k, v)| format!("{k:<22}{v:>6}\n")).collect()
    }
}

/// A corpus line: the code and an optional `# name` comment. Blank lines
/// and lines starting with `#` are skipped.
pub fn corpus_entries(text: &str) -> Vec<(String, Option<String>)> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| match l.split_once('#') {
            Some((code, name)) => (code.trim().to_string(), Some(name.trim().to_string())),
            None => (l.to_string(), None),
        })
        .collect()
}

fn read_input(arg: Option<&str>, stdin: &mut dyn Read) -> std::io::Result<String> {
    match arg {
        Some(s) if s != "-" => Ok(s.to_string()),
        _ => {
            let mut buf = String::new();
            stdin.read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

fn options(cli: &Cli) -> Options {
    Options {
        format: match cli.format {
            FormatArg::Pd => CodeFormat::Pd,
            FormatArg::Gauss => CodeFormat::Gauss,
        },
        method: match cli.method {
            MethodArg::Oracle => MethodChoice::Oracle,
            MethodArg::Structured => MethodChoice::Structured,
            MethodArg::Both => MethodChoice::Both,
        },
        budget: cli.budget,
        seed: cli.seed,
        timings: cli.timings,
    }
}

fn emit(out: &mut dyn Write, r: &Report, json: bool) -> std::io::Result<()> {
    if json {
        writeln!(out, "{}", serde_json::to_string(r).expect("report serializes"))
    } else {
        write!(out, "{}", render_text(r))
    }
}

/// Runs a parsed command, returning the exit status.
pub fn run(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> std::io::Result<i32> {
    let opts = options(cli);
    let (code, sections): (&Option<String>, &[Section]) = match &cli.command {
        Command::Parse { code } => (code, &[Section::Diagram]),
        Command::Validate { code } => (code, &[Section::Diagram, Section::Validation]),
        Command::Decompose { code } => (code, &[Section::Validation, Section::Decomposition]),
        Command::Tree { code } => (code, &[Section::Validation, Section::Tree]),
        Command::Flypes { code } => (code, &[Section::Validation, Section::Flypes]),
        Command::Achiral { code } => (code, &[Section::Validation, Section::Achirality]),
        Command::TaitWitness { code } => (code, &[Section::Validation, Section::Witness]),
        Command::Checkerboard { code } => (code, &[Section::Validation, Section::Checkerboard]),
        Command::Corpus { path } => return run_corpus(path, cli.json, &opts, stdin, out),
    };
    let input = read_input(code.as_deref(), stdin)?;
    let r = analyse(input.trim(), None, sections, &opts);
    emit(out, &r, cli.json)?;
    Ok(r.exit_code())
}

fn run_corpus(
    path: &str,
    json: bool,
    opts: &Options,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
) -> std::io::Result<i32> {
    let text = if path == "-" {
        read_input(None, stdin)?
    } else {
        std::fs::read_to_string(path)?
    };
    let entries = corpus_entries(&text);
    let reports: Vec<Report> = entries
        .par_iter()
        .map(|(code, name)| analyse(code, name.clone(), &Section::ALL, opts))
        .collect();
    let mut summary = Summary::default();
    for r in &reports {
        summary.add(r);
        if json {
            emit(out, r, true)?;
        } else {
            let label = r.name.clone().unwrap_or_else(|| r.input.clone());
            let row = match (&r.achirality, &r.error) {
                (Some(a), _) => format!(
                    "{label:<12} plus={:<5} minus={:<5} agree={:<5} witness={}",
                    a.plus,
                    a.minus,
                    a.agree.map_or("-".to_string(), |b| b.to_string()),
                    r.tait_witness.as_ref().map_or("-".to_string(), |w| w.verified.to_string()),
                ),
                (None, Some(e)) => format!("{label:<12} error: {}", e.message),
                (None, None) => format!("{label:<12} -"),
            };
            writeln!(out, "{row}")?;
        }
    }
    if json {
        writeln!(out, "{}", serde_json::json!({ "summary": summary }))?;
    } else {
        write!(out, "{}", summary.table())?;
    }
    let ok = summary.disagreements == 0 && summary.witness_failures == 0;
    Ok(if summary.budget_exceeded > 0 {
        3
    } else if ok {
        0
    } else {
        1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_lines_and_names() {
        let e = corpus_entries("# header\n\nX[1,2,3,4]  # a\n  O1+ U1+\n");
        assert_eq!(
            e,
            vec![("X[1,2,3,4]".to_string(), Some("a".to_string())), ("O1+ U1+".to_string(), None)]
        );
    }

    #[test]
    fn exit_code_mapping() {
        use flypecheck::error::Error;
        assert_eq!(report::exit_code(&Error::MalformedCode("x".into())), 2);
        assert_eq!(report::exit_code(&Error::EmptyDiagram), 2);
        assert_eq!(report::exit_code(&Error::ClosureBudgetExceeded(5)), 3);
        assert_eq!(report::exit_code(&Error::NotMinusAchiral), 1);
        assert_eq!(report::exit_code(&Error::NotAlternating), 1);
    }

    #[test]
    fn summary_skips_malformed() {
        let opts = Options {
            format: CodeFormat::Pd,
            method: MethodChoice::Both,
            budget: DEFAULT_BUDGET,
            seed: 0,
            timings: false,
        };
        let mut s = Summary::default();
        for code in ["X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "X[1,2"] {
            s.add(&analyse(code, None, &Section::ALL, &opts));
        }
        assert_eq!((s.lines, s.malformed, s.rows, s.chiral), (2, 1, 1, 1));
    }
}
