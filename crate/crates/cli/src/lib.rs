//! Command-line front end: `ccuc analyze` scores one sequence, `ccuc rank`
//! orders several by their most abrupt change.

pub mod plot;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use ccuc::analysis::{analyze_frames, compare_sequences, SequenceReport, DEFAULT_RECIPROCAL_CAP};
use ccuc::infotheory::NormalizationMode;
use ccuc::ingest::{decode_sequence, PreprocessConfig, SequenceSource};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ccuc",
    version,
    about = "Rank image sequences by their most abrupt change"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score adjacent frames of one sequence and locate the most abrupt change.
    Analyze(AnalyzeArgs),
    /// Rank two or more sequences, most abrupt change first.
    Rank(RankArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Animated GIF, single image, or directory of frames.
    pub input: PathBuf,
    #[command(flatten)]
    pub options: CommonOptions,
    /// Write an SVG plot of 1/score with the target marked.
    #[arg(long, value_name = "PATH")]
    pub plot: Option<PathBuf>,
    /// Plot value used where the score is zero or its reciprocal is larger.
    #[arg(long, value_name = "X", default_value_t = DEFAULT_RECIPROCAL_CAP, value_parser = parse_cap)]
    pub reciprocal_cap: f64,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    /// Sequences to compare (at least two).
    #[arg(required = true, num_args = 2.., value_name = "INPUT")]
    pub inputs: Vec<PathBuf>,
    #[command(flatten)]
    pub options: CommonOptions,
}

#[derive(Debug, Args)]
pub struct CommonOptions {
    /// Intensity levels after quantization.
    #[arg(long, value_name = "N", default_value_t = 256, value_parser = clap::value_parser!(u32).range(2..=256))]
    pub bins: u32,
    /// Spatial downscale factor in (0, 1].
    #[arg(long, value_name = "F", default_value_t = 1.0, value_parser = parse_scale)]
    pub scale: f64,
    #[arg(long, value_enum, default_value_t = ModeArg::Uc)]
    pub mode: ModeArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// I / H(previous)
    Uc,
    /// I / sqrt(H(previous) H(later))
    Symmetric,
    /// raw mutual information, bits
    Mi,
}

impl From<ModeArg> for NormalizationMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Uc => NormalizationMode::UcPrev,
            ModeArg::Symmetric => NormalizationMode::Symmetric,
            ModeArg::Mi => NormalizationMode::RawMi,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

fn parse_scale(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v <= 1.0 {
        Ok(v)
    } else {
        Err(format!("{v} is not in (0, 1]"))
    }
}

fn parse_cap(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("{v} is not a positive finite number"))
    }
}

impl CommonOptions {
    fn preprocess(&self) -> Result<PreprocessConfig> {
        Ok(PreprocessConfig::new(self.scale, self.bins)?)
    }
}

/// Decodes and analyzes one input, labelled by its path.
pub fn analyze_path(
    path: &Path,
    mode: NormalizationMode,
    cfg: PreprocessConfig,
) -> Result<SequenceReport> {
    let src = SequenceSource::resolve(path)?;
    let frames = decode_sequence(&src, &cfg)?;
    Ok(analyze_frames(src.id, &frames, mode, cfg)?)
}

fn cmd_analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<()> {
    let cfg = args.options.preprocess()?;
    let report = analyze_path(&args.input, args.options.mode.into(), cfg)
        .with_context(|| format!("cannot analyze {}", args.input.display()))?;
    if let Some(path) = &args.plot {
        let svg = plot::reciprocal_svg(&report, args.reciprocal_cap)?;
        std::fs::write(path, svg).with_context(|| format!("cannot write {}", path.display()))?;
    }
    let text = match args.options.format {
        Format::Json => report::report_to_json(&report)?,
        Format::Csv => report::series_csv(&report)?,
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

fn cmd_rank(args: &RankArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let cfg = args.options.preprocess()?;
    let mode = args.options.mode.into();
    let results: Vec<Result<SequenceReport>> = args
        .inputs
        .par_iter()
        .map(|p| {
            analyze_path(p, mode, cfg).with_context(|| format!("cannot analyze {}", p.display()))
        })
        .collect();
    let reports = results.into_iter().collect::<Result<Vec<_>>>()?;
    let ranking = compare_sequences(reports)?;

    for (rank, e) in ranking.entries.iter().enumerate() {
        writeln!(
            err,
            "{}. {}: target_value={} at t={} ({} frames)",
            rank + 1,
            e.id,
            report::fmt_num(e.target_value),
            e.target_index,
            e.frame_count
        )?;
    }
    let text = match args.options.format {
        Format::Json => report::ranking_to_json(&ranking)?,
        Format::Csv => report::ranking_csv(&ranking)?,
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let result = match &cli.command {
        Command::Analyze(args) => cmd_analyze(args, &mut stdout.lock()),
        Command::Rank(args) => cmd_rank(args, &mut stdout.lock(), &mut stderr.lock()),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_FAILURE
        }
    }
}
