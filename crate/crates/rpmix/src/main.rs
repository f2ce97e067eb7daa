use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rpmix::config::{ConfigLayer, CsvLayer, MixupLayer, MixupModeName};
use rpmix::selfcheck::{self, SelfcheckOptions};
use rpmix::{corpus_stats, run_encode, DatasetKind, EncodingKind};

const EXIT_FATAL: u8 = 1;
const EXIT_PARTIAL: u8 = 2;

#[derive(Parser)]
#[command(name = "rpmix", version, about = "Encode accelerometer episodes as recurrence-plot images")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encode a corpus into PNGs plus a JSON-lines manifest.
    Encode(EncodeArgs),
    /// Per-class episode counts and length statistics.
    Stats(StatsArgs),
    /// Run the embedded oracle checks.
    Selfcheck(SelfcheckArgs),
}

#[derive(Args)]
struct CorpusArgs {
    /// Input directory.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Input layout (default adl).
    #[arg(long, value_enum)]
    dataset: Option<DatasetArg>,
    /// Comma-separated list of class labels to keep.
    #[arg(long, value_delimiter = ',')]
    classes: Option<Vec<String>>,
    /// CSV column holding the x axis.
    #[arg(long)]
    csv_x: Option<String>,
    /// CSV column holding the y axis.
    #[arg(long)]
    csv_y: Option<String>,
    /// CSV column holding the z axis.
    #[arg(long)]
    csv_z: Option<String>,
    /// CSV column holding the class label.
    #[arg(long)]
    csv_label_column: Option<String>,
    /// Take CSV labels from this hyphen-separated field of the file name.
    #[arg(long)]
    csv_label_field: Option<usize>,
    /// Sample rate of CSV episodes in Hz.
    #[arg(long)]
    sample_rate: Option<f64>,
    /// Worker threads (defaults to all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Abort on the first bad input file.
    #[arg(long)]
    fail_fast: bool,
    /// TOML config file; flags take precedence over it.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum DatasetArg {
    Adl,
    Csv,
}

#[derive(Args)]
struct EncodeArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Output directory.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Window length L after resampling (images are (L-1)x(L-1)).
    #[arg(long)]
    length: Option<usize>,
    /// Comma-separated subset of trp, mtrp, frp, mix.
    #[arg(long, value_delimiter = ',')]
    encodings: Option<Vec<String>>,
    /// Beta distribution alpha for the mixup weight.
    #[arg(long)]
    mix_alpha: Option<f64>,
    /// Beta distribution beta for the mixup weight.
    #[arg(long)]
    mix_beta: Option<f64>,
    /// Use this fixed lambda instead of sampling from Beta(alpha, beta).
    #[arg(long)]
    mix_fixed_lambda: Option<f64>,
    /// Mixup variants per episode.
    #[arg(long)]
    mix_variants: Option<usize>,
    /// Training fraction of the stratified split.
    #[arg(long)]
    split: Option<f64>,
    /// Base seed for the split and mixup weights.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Print a single JSON document instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SelfcheckArgs {
    #[arg(long)]
    json: bool,
    /// Replace the sign rule with a cosine comparison at this threshold
    /// (fault injection).
    #[arg(long, hide = true, allow_negative_numbers = true)]
    sign_threshold: Option<f64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Encode(args) => encode(args),
        Command::Stats(args) => stats(args),
        Command::Selfcheck(args) => Ok(selfcheck(args)),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FATAL)
        }
    }
}

fn corpus_layer(args: &CorpusArgs) -> rpmix::Result<ConfigLayer> {
    let file = match &args.config {
        Some(path) => ConfigLayer::read(path)?,
        None => ConfigLayer::default(),
    };
    let flags = ConfigLayer {
        input_dir: args.input.clone(),
        dataset_kind: args.dataset.map(|d| match d {
            DatasetArg::Adl => DatasetKind::Adl,
            DatasetArg::Csv => DatasetKind::Csv,
        }),
        jobs: args.jobs,
        fail_fast: args.fail_fast.then_some(true),
        classes: args.classes.clone(),
        csv: CsvLayer {
            x_column: args.csv_x.clone(),
            y_column: args.csv_y.clone(),
            z_column: args.csv_z.clone(),
            label_column: args.csv_label_column.clone(),
            label_field: args.csv_label_field,
            label_delimiter: None,
            sample_rate_hz: args.sample_rate,
        },
        ..ConfigLayer::default()
    };
    Ok(file.overlay(flags))
}

fn encode(args: EncodeArgs) -> rpmix::Result<ExitCode> {
    let encodings = args
        .encodings
        .map(|list| list.iter().map(|s| s.parse::<EncodingKind>()).collect::<rpmix::Result<Vec<_>>>())
        .transpose()?;
    let flags = ConfigLayer {
        output_dir: args.output,
        window_length: args.length,
        encodings,
        split_ratio: args.split,
        seed: args.seed,
        mixup: MixupLayer {
            alpha: args.mix_alpha,
            beta: args.mix_beta,
            mode: args.mix_fixed_lambda.map(|_| MixupModeName::Fixed),
            fixed_lambda: args.mix_fixed_lambda,
            variants: args.mix_variants,
        },
        ..ConfigLayer::default()
    };
    let config = corpus_layer(&args.corpus)?.overlay(flags).into_encode_config()?;
    let report = run_encode(&config)?;
    for failure in &report.failures {
        eprintln!("skipped {}: {}", failure.path.display(), failure.error);
    }
    println!(
        "encoded {} episodes into {} images; manifest {}",
        report.episodes,
        report.images,
        report.manifest_path.display()
    );
    if report.failures.is_empty() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("{} file(s) skipped", report.failures.len());
        Ok(ExitCode::from(EXIT_PARTIAL))
    }
}

fn stats(args: StatsArgs) -> rpmix::Result<ExitCode> {
    let layer = corpus_layer(&args.corpus)?;
    let input = layer
        .input_dir
        .clone()
        .ok_or_else(|| rpmix::Error::Config("an input directory is required (--input)".into()))?;
    let fail_fast = layer.fail_fast.unwrap_or(false);
    let stats = corpus_stats(&input, &layer.corpus_config(), layer.jobs)?;
    for skipped in &stats.skipped {
        eprintln!("skipped {}: {}", skipped.path, skipped.error);
    }
    if fail_fast && !stats.skipped.is_empty() {
        return Ok(ExitCode::from(EXIT_FATAL));
    }
    if stats.total_episodes == 0 {
        eprintln!("warning: no episodes found in {}", input.display());
    }
    if args.json {
        println!("{}", stats.to_json());
    } else {
        print!("{}", stats.render_table());
    }
    Ok(if stats.skipped.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_PARTIAL)
    })
}

fn selfcheck(args: SelfcheckArgs) -> ExitCode {
    let mut options = SelfcheckOptions::default();
    if let Some(threshold) = args.sign_threshold {
        options.sign_rule = selfcheck::cosine_sign_rule(threshold);
    }
    let report = selfcheck::run(&options);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        for check in &report.checks {
            let status = if check.passed { "PASS" } else { "FAIL" };
            println!("{status} {:<28} {}", check.name, check.detail);
        }
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FATAL)
    }
}
