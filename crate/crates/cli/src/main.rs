//! `longknot`: compute and verify long-knot invariants from the command line.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on bad input.

mod input;
mod output;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use longknot::fixtures::{example, NAMES, SIX_CROSSING_PD};
use longknot::invariants::{verify_bundle, InvariantBundle, VerificationReport};
use longknot::random::random_long_knots;
use longknot::LongKnotDiagram;
use rayon::prelude::*;

use input::{expand_paths, load_file, Loaded, Source};
use output::{Format, Row};

#[derive(Debug, Parser)]
#[command(name = "longknot", version, about = "Exact long-knot invariants and their verification")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, env = "LONGKNOT_FORMAT", default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print T, Sigma, D, S, A, W, beta and Delta for one diagram.
    Compute {
        #[command(flatten)]
        source: Source,
    },
    /// Check every identity on one diagram; the report is JSON unless --format csv.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Flip entry (i,j) of T (1-based) before verifying.
        #[arg(long, value_name = "I,J", hide = true)]
        corrupt_t: Option<String>,
    },
    /// Verify many diagrams in parallel: the given files and directories, or
    /// seeded random knots when none are given.
    Batch {
        paths: Vec<PathBuf>,
        #[command(flatten)]
        gen: GenArgs,
    },
    /// Write seeded random knots as `.pd` files.
    Gen {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
    },
    /// List the built-in examples, or print one as PD text.
    Example { name: Option<String> },
}

#[derive(Debug, Clone, clap::Args)]
struct GenArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    count: u64,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..))]
    max_crossings: u64,
}

/// Failures that are the input's fault map to exit status 2.
struct InputError(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => code,
        Err(InputError(e)) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<ExitCode, InputError> {
    let format = cli.format;
    match cli.command {
        Command::Compute { source } => {
            let Loaded { id, knot } = source.load()?;
            let bundle = match InvariantBundle::compute(&knot) {
                Ok(b) => b,
                Err(e) => return Ok(computation_failure(&id, &e)),
            };
            match format {
                Format::Text => output::compute_text(out, &id, &bundle)?,
                Format::Json => output::compute_json(out, &id, &bundle)?,
                Format::Csv => {
                    let report = verify_bundle(&bundle).map_err(anyhow::Error::from)?;
                    output::csv_rows(out, &[Row::new(&id, &bundle, &report)])?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { source, corrupt_t } => {
            let Loaded { id, knot } = source.load()?;
            let flip = corrupt_t.as_deref().map(parse_pair).transpose()?;
            let bundle = match InvariantBundle::compute(&knot) {
                Ok(b) => b,
                Err(e) => return Ok(computation_failure(&id, &e)),
            };
            let bundle = match flip {
                Some((i, j)) => bundle.with_corrupted_t(i - 1, j - 1).context("--corrupt-t")?,
                None => bundle,
            };
            let report = match verify_bundle(&bundle) {
                Ok(r) => r,
                Err(e) => return Ok(computation_failure(&id, &e)),
            };
            match format {
                Format::Csv => output::csv_rows(out, &[Row::new(&id, &bundle, &report)])?,
                Format::Text | Format::Json => output::report_json(out, &report)?,
            }
            Ok(status(report.all_hold()))
        }
        Command::Batch { paths, gen } => batch(out, format, &paths, &gen),
        Command::Gen { gen, out_dir } => {
            fs::create_dir_all(&out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
            let knots = generate(&gen)?;
            for (id, header, knot) in &knots {
                let path = out_dir.join(format!("{id}.pd"));
                fs::write(&path, pd_text(header, knot)).with_context(|| format!("writing {}", path.display()))?;
            }
            writeln!(out, "wrote {} files to {}", knots.len(), out_dir.display())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Example { name: None } => {
            for name in NAMES {
                writeln!(out, "{name}")?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Example { name: Some(name) } => {
            let text = match name.as_str() {
                "paper" => SIX_CROSSING_PD.to_owned(),
                other => match example(other) {
                    Some(knot) => pd_text(other, &knot),
                    None => return Err(anyhow!("unknown example {other:?}; known: {}", NAMES.join(", ")).into()),
                },
            };
            write!(out, "{text}")?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn computation_failure(id: &str, e: &longknot::InvariantError) -> ExitCode {
    eprintln!("{id}: {e}");
    ExitCode::from(1)
}

fn parse_pair(s: &str) -> Result<(usize, usize)> {
    let parsed = s.split_once(',').and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)));
    match parsed {
        Some((i, j)) if i >= 1 && j >= 1 => Ok((i, j)),
        _ => bail!("--corrupt-t expects two 1-based indices \"i,j\", got {s:?}"),
    }
}

/// PD text with the braid or name as a comment header and an explicit basepoint.
fn pd_text(header: &str, knot: &LongKnotDiagram) -> String {
    format!("# {header}\n{}basepoint {}\n", knot.diagram().render(), knot.basepoint())
}

fn generate(gen: &GenArgs) -> Result<Vec<(String, String, LongKnotDiagram)>> {
    let knots = random_long_knots(gen.seed, gen.count as usize, gen.max_crossings as usize)?;
    Ok(knots
        .into_iter()
        .enumerate()
        .map(|(k, (word, knot))| (format!("knot-{:04}", k + 1), word.to_string(), knot))
        .collect())
}

fn batch(out: &mut impl Write, format: Format, paths: &[PathBuf], gen: &GenArgs) -> Result<ExitCode, InputError> {
    let items: Vec<(String, LongKnotDiagram)> = if paths.is_empty() {
        generate(gen)?.into_iter().map(|(id, _, knot)| (id, knot)).collect()
    } else {
        let files = expand_paths(paths)?;
        if files.is_empty() {
            return Err(anyhow!("no .pd or .braid files found").into());
        }
        files.iter().map(|p| load_file(p, None).map(|l| (l.id, l.knot))).collect::<Result<_>>()?
    };

    // par_iter keeps results in input order
    let results: Vec<(Row, VerificationReport)> = items.par_iter().map(|(id, knot)| evaluate(id, knot)).collect();

    let failed = results.iter().filter(|(_, r)| !r.all_hold()).count();
    match format {
        Format::Csv => output::csv_rows(out, &results.iter().map(|(row, _)| row.clone()).collect::<Vec<_>>())?,
        Format::Json => {
            let doc: Vec<serde_json::Value> =
                results.iter().map(|(row, report)| serde_json::json!({ "id": row.id, "report": report })).collect();
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(anyhow::Error::from)?;
            writeln!(out)?;
        }
        Format::Text => {
            for (row, report) in &results {
                output::row_text(out, row, report.all_hold())?;
            }
            writeln!(out, "{} diagrams, {} passed, {failed} failed", results.len(), results.len() - failed)?;
        }
    }
    Ok(status(failed == 0))
}

/// Runs the full pipeline on one diagram. Computation errors become a failed
/// row rather than aborting the batch.
fn evaluate(id: &str, knot: &LongKnotDiagram) -> (Row, VerificationReport) {
    let result = InvariantBundle::compute(knot).and_then(|b| verify_bundle(&b).map(|r| (b, r)));
    match result {
        Ok((b, r)) => (Row::new(id, &b, &r), r),
        Err(e) => {
            let report = VerificationReport {
                theorem_holds: false,
                sign: 0,
                l: 0,
                proposition_holds: false,
                lemma1_holds: false,
                lemma2_holds: false,
                det_w: 0,
                failures: vec![longknot::invariants::Witness {
                    location: "pipeline".into(),
                    expected: "invariants computable".into(),
                    actual: e.to_string(),
                }],
            };
            let row = Row {
                id: id.to_owned(),
                n: knot.crossing_count(),
                l: 0,
                sign: 0,
                beta: String::new(),
                delta: String::new(),
                theorem_ok: false,
                proposition_ok: false,
                det_w: 0,
            };
            (row, report)
        }
    }
}
