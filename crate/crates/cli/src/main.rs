use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use curvefree_cli::inline::{self, Inline, Variant};
use curvefree_cli::{analyze, render_text, AnalyzeOptions, ArrangementFile, CliError, Verdict};

#[derive(Parser)]
#[command(name = "curvefree", version, about = "Freeness of line, conic and curve arrangements, decided algebraically and combinatorially")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an arrangement file, or every `*.arr` file in a directory with --self-test.
    Analyze {
        /// Arrangement file (`.arr`).
        path: Option<PathBuf>,
        /// Seed for the random change of coordinates.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Refuse arrangements of larger total degree.
        #[arg(long, default_value_t = 16)]
        max_degree: u32,
        /// Human-readable text or a JSON report.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Use the file's expect_W instead of computing the singular locus.
        #[arg(long)]
        skip_singlocus: bool,
        /// Check every fixture in the directory (default `fixtures`) against its expectations.
        #[arg(long, value_name = "DIR", num_args = 0..=1, default_missing_value = "fixtures")]
        self_test: Option<PathBuf>,
    },
    /// Print a Poincaré-type polynomial and its rational splitting.
    #[command(group(ArgGroup::new("variant").required(true).args(["lines", "cl", "conics", "general"])))]
    Poincare {
        /// Line arrangement: k1, n2, n3, ...
        #[arg(long)]
        lines: bool,
        /// Lines and conics: k1, k2, n2, n3, ...
        #[arg(long)]
        cl: bool,
        /// Conics with A3, A5, A7 points: k, n2, n3, n4, t3, t5, t7
        #[arg(long)]
        conics: bool,
        /// Any reduced curve: d, tau
        #[arg(long)]
        general: bool,
        /// key=value pairs: k1, k2 (or k), n2, n3, ..., t3, t5, t7, d, tau
        #[arg(required = true)]
        values: Vec<String>,
    },
    /// Evaluate the necessary inequality for free d-arrangements: d=, k=, n2=, ...
    Ddcheck {
        /// key=value pairs: d, k, n2, n3, ...
        values: Vec<String>,
    },
    /// Euler number of the complement of a conic-line arrangement: k1=, k2=, n2=, ...
    Euler {
        /// key=value pairs: k1, k2, n2, n3, ...
        values: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}

fn run(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Analyze { path, seed, max_degree, format, skip_singlocus, self_test } => {
            let opts = AnalyzeOptions { seed, max_degree, skip_singlocus };
            if let Some(dir) = self_test {
                return self_test_dir(&dir, &opts);
            }
            let path = path.ok_or_else(|| CliError::Precondition("analyze needs a file path".into()))?;
            let file = ArrangementFile::load(&path)?;
            let report = analyze(&file, &opts)?;
            match format {
                Format::Text => print!("{}", render_text(&report)),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
            }
            Ok(report.verdict.exit_code())
        }
        Command::Poincare { lines, cl, conics, general: _, values } => {
            let variant = match (lines, cl, conics) {
                (true, _, _) => Variant::Lines,
                (_, true, _) => Variant::ConicLine,
                (_, _, true) => Variant::Conics,
                _ => Variant::General,
            };
            println!("{}", inline::poincare(variant, &Inline::parse(&values)?)?);
            Ok(0)
        }
        Command::Ddcheck { values } => {
            println!("{}", inline::ddcheck(&Inline::parse(&values)?)?);
            Ok(0)
        }
        Command::Euler { values } => {
            println!("{}", inline::euler(&Inline::parse(&values)?)?);
            Ok(0)
        }
    }
}

/// Runs every fixture in name order; exit code 2 if any expectation fails.
fn self_test_dir(dir: &Path, opts: &AnalyzeOptions) -> Result<i32, CliError> {
    let io = |e: std::io::Error| CliError::Io(dir.display().to_string(), e.to_string());
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "arr"))
        .collect();
    paths.sort();
    let mut failures = 0;
    for path in &paths {
        let outcome = ArrangementFile::load(path).and_then(|f| analyze(&f, opts).map(|r| (f, r)));
        match outcome {
            Ok((file, report)) => {
                let ok = report.expectation_checks.values().all(|&v| v) && report.verdict != Verdict::InconsistentInput;
                if !ok {
                    failures += 1;
                }
                println!("{} {:<40} {}", if ok { "PASS" } else { "FAIL" }, file.name, report.verdict.as_str());
            }
            Err(e) => {
                failures += 1;
                println!("FAIL {:<40} {e}", path.display());
            }
        }
    }
    println!("{} fixtures, {} failed", paths.len(), failures);
    Ok(if failures == 0 { 0 } else { 2 })
}
