use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use gridforge_core::pipeline::{
    default_max_attempts, measure_throughput, read_examples, read_jsonl, write_jsonl,
    write_records, BandMetric, Format, Record,
};
use gridforge_core::{run_generation, DifficultyBounds, Grid, RunConfig, Task};

/// Procedural example generator for ARC-style grid tasks.
#[derive(Parser)]
#[command(name = "gridforge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List archetypes and their difficulty-driven degrees of freedom.
    List,
    /// Generate a verified, deduplicated dataset.
    Generate(GenerateArgs),
    /// Run a task's verifier over the examples in a file.
    Verify(VerifyArgs),
    /// Split a JSONL dataset into difficulty bands.
    Band(BandArgs),
    /// Measure verified unique examples per second.
    Bench(BenchArgs),
    /// Print an example as text or write it as a PGM image.
    Render(RenderArgs),
}

#[derive(Args)]
struct Sampling {
    /// Master seed.
    #[arg(long, env = "GRIDFORGE_SEED", default_value_t = 0)]
    seed: u64,
    /// Lower difficulty bound in [0, 1].
    #[arg(long = "diff-lb", default_value_t = 0.0)]
    diff_lb: f64,
    /// Upper difficulty bound in [0, 1].
    #[arg(long = "diff-ub", default_value_t = 1.0)]
    diff_ub: f64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
}

impl Sampling {
    fn bounds(&self) -> Result<DifficultyBounds> {
        DifficultyBounds::new(self.diff_lb, self.diff_ub).with_context(|| {
            format!(
                "invalid difficulty bounds --diff-lb {} --diff-ub {}",
                self.diff_lb, self.diff_ub
            )
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Jsonl,
    #[value(name = "arc_json", alias = "arc-json")]
    ArcJson,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Jsonl => Format::Jsonl,
            OutputFormat::ArcJson => Format::ArcJson,
        }
    }
}

#[derive(Args)]
struct GenerateArgs {
    /// Task id, comma-separated ids, or `all`.
    #[arg(long, required = true)]
    task: Vec<String>,
    /// Unique verified examples per task.
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[command(flatten)]
    sampling: Sampling,
    /// Attempt budget per task [default: 20 x count].
    #[arg(long = "max-attempts")]
    max_attempts: Option<u64>,
    #[arg(long, value_enum, default_value = "jsonl")]
    format: OutputFormat,
    /// Output file; `-` writes to stdout.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    task: String,
    /// ARC task file, list of examples, keyed export or JSONL records.
    #[arg(long)]
    file: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Rng,
    Pso,
}

#[derive(Args)]
struct BandArgs {
    /// JSONL dataset.
    #[arg(long)]
    file: PathBuf,
    #[arg(long, value_enum, default_value = "pso")]
    metric: MetricArg,
    /// Number of equal-width bands.
    #[arg(long, default_value_t = 2)]
    bands: usize,
    /// Writes `<out>.band<i>.jsonl` for each band when given.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value = "all")]
    task: Vec<String>,
    /// Measurement window per task.
    #[arg(long, default_value_t = 10.0)]
    seconds: f64,
    #[command(flatten)]
    sampling: Sampling,
}

#[derive(Args)]
struct RenderArgs {
    /// JSONL dataset.
    #[arg(long)]
    file: PathBuf,
    /// Record index to show; defaults to the first record.
    #[arg(long)]
    index: Option<u64>,
    /// Also write the pair side by side as a grayscale PGM.
    #[arg(long)]
    pgm: Option<PathBuf>,
}

fn parse_tasks(specs: &[String]) -> Result<Vec<Task>> {
    let mut tasks = Vec::new();
    for id in specs.iter().flat_map(|s| s.split(',')).map(str::trim) {
        if id == "all" {
            tasks.extend(Task::ALL);
        } else {
            tasks.push(id.parse::<Task>()?);
        }
    }
    let mut seen = Vec::new();
    tasks.retain(|t| {
        let fresh = !seen.contains(t);
        seen.push(*t);
        fresh
    });
    if tasks.is_empty() {
        bail!("no task selected");
    }
    Ok(tasks)
}

fn create(path: &Path) -> Result<Box<dyn Write>> {
    if path == Path::new("-") {
        return Ok(Box::new(io::stdout().lock()));
    }
    let file = File::create(path)
        .with_context(|| format!("cannot write output file {}", path.display()))?;
    Ok(Box::new(BufWriter::new(file)))
}

fn open(path: &Path) -> Result<BufReader<File>> {
    let file =
        File::open(path).with_context(|| format!("cannot read input file {}", path.display()))?;
    Ok(BufReader::new(file))
}

fn list() -> Result<i32> {
    for task in Task::ALL {
        let (h, w) = task.min_dims();
        println!("{:<18} min {h}x{w:<3} {}", task.id(), task.summary());
        for draw in task.draws() {
            println!("{:<18}   - {draw}", "");
        }
    }
    Ok(0)
}

fn generate(args: GenerateArgs) -> Result<i32> {
    let tasks = parse_tasks(&args.task)?;
    let bounds = args.sampling.bounds()?;
    let cfg = RunConfig {
        tasks,
        count: args.count,
        bounds,
        master_seed: args.sampling.seed,
        max_attempts: args.max_attempts.unwrap_or(default_max_attempts(args.count)),
        workers: args.sampling.workers,
    };
    cfg.validate()?;
    // Open the destination first so an unwritable path fails fast.
    let out = create(&args.out)?;
    let run = run_generation(&cfg)?;
    write_records(&run.records, args.format.into(), out)
        .with_context(|| format!("cannot write output file {}", args.out.display()))?;

    eprintln!(
        "{:<18} {:>9} {:>9} {:>9} {:>9} {:>9} {:>7} {:>9}",
        "task", "attempts", "failures", "rejected", "dupes", "accepted", "eff", "per_sec"
    );
    for r in &run.runs {
        let s = &r.stats;
        eprintln!(
            "{:<18} {:>9} {:>9} {:>9} {:>9} {:>9} {:>6.1}% {:>9.0}{}",
            r.task.id(),
            s.attempts,
            s.generator_failures,
            s.verifier_rejections,
            s.duplicates,
            s.accepted,
            100.0 * s.efficiency(),
            s.throughput(),
            if r.shortfall > 0 {
                format!("  SHORTFALL {} (attempt budget exhausted)", r.shortfall)
            } else {
                String::new()
            }
        );
    }
    Ok(0)
}

fn verify(args: VerifyArgs) -> Result<i32> {
    let task: Task = args.task.parse()?;
    let text = std::fs::read_to_string(&args.file)
        .with_context(|| format!("cannot read input file {}", args.file.display()))?;
    let examples = read_examples(&text, task.id())?;
    let mut failed = 0;
    for (i, e) in examples.iter().enumerate() {
        match task.verify(&e.input) {
            Ok(out) if out == e.output => println!("example {i}: pass"),
            Ok(_) => {
                failed += 1;
                println!("example {i}: FAIL (output differs)");
            }
            Err(err) => {
                failed += 1;
                println!("example {i}: FAIL ({err})");
            }
        }
    }
    println!(
        "{}: {} of {} examples pass",
        task.id(),
        examples.len() - failed,
        examples.len()
    );
    Ok(i32::from(failed > 0))
}

fn band(args: BandArgs) -> Result<i32> {
    let records = read_jsonl(open(&args.file)?)?;
    let metric = match args.metric {
        MetricArg::Rng => BandMetric::Rng,
        MetricArg::Pso => BandMetric::Pso,
    };
    let bands = gridforge_core::band_by_difficulty(&records, metric, args.bands)?;
    println!("{:<6} {:>8} {:>10} {:>10}", "band", "records", "min", "max");
    for (i, band) in bands.iter().enumerate() {
        let values = band.iter().map(|r| metric.of(r));
        let lo = values.clone().fold(f64::NAN, f64::min);
        let hi = values.fold(f64::NAN, f64::max);
        println!("{i:<6} {:>8} {lo:>10.4} {hi:>10.4}", band.len());
        if let Some(prefix) = &args.out {
            let path = PathBuf::from(format!("{}.band{i}.jsonl", prefix.display()));
            write_jsonl(band, create(&path)?)?;
        }
    }
    Ok(0)
}

fn bench(args: BenchArgs) -> Result<i32> {
    let tasks = parse_tasks(&args.task)?;
    let bounds = args.sampling.bounds()?;
    if args.seconds.is_nan() || args.seconds <= 0.0 {
        bail!("--seconds must be positive");
    }
    let window = Duration::from_secs_f64(args.seconds);
    println!(
        "{:<18} {:>10} {:>10} {:>7} {:>10}",
        "task", "accepted", "attempts", "eff", "per_sec"
    );
    let mut rates = Vec::new();
    for task in tasks {
        let s = measure_throughput(task, &bounds, args.sampling.seed, window, args.sampling.workers)?;
        rates.push(s.throughput());
        println!(
            "{:<18} {:>10} {:>10} {:>6.1}% {:>10.0}",
            task.id(),
            s.accepted,
            s.attempts,
            100.0 * s.efficiency(),
            s.throughput()
        );
    }
    rates.sort_by(f64::total_cmp);
    let n = rates.len();
    let median = if n % 2 == 1 {
        rates[n / 2]
    } else {
        (rates[n / 2 - 1] + rates[n / 2]) / 2.0
    };
    println!(
        "median {median:.0}/s (reference ~1000/s: {}), min {:.0}/s",
        if median >= 1000.0 { "met" } else { "not met" },
        rates[0]
    );
    Ok(0)
}

fn ascii_rows(g: &Grid) -> Vec<String> {
    g.rows()
        .map(|row| {
            row.iter()
                .map(|s| match s.value() {
                    0 => '.',
                    v => char::from(b'0' + v),
                })
                .collect()
        })
        .collect()
}

/// Input and output side by side, separated by a two-cell gap of mid grey,
/// each cell drawn as a `scale × scale` block.
fn write_pgm(path: &Path, record: &Record, scale: usize) -> Result<()> {
    let (a, b) = (&record.input, &record.output);
    let gap = 2;
    let cols = a.width() + gap + b.width();
    let rows = a.height().max(b.height());
    let mut out = create(path)?;
    writeln!(out, "P2\n{} {}\n255", cols * scale, rows * scale)?;
    for r in 0..rows * scale {
        let mut line = Vec::with_capacity(cols * scale);
        for c in 0..cols * scale {
            let (gr, gc) = (r / scale, c / scale);
            let level = if gc < a.width() {
                (gr < a.height()).then(|| a.get(gr, gc).value())
            } else if gc >= a.width() + gap {
                let gc = gc - a.width() - gap;
                (gr < b.height()).then(|| b.get(gr, gc).value())
            } else {
                None
            };
            let v = level.map_or(128, |v| u32::from(v) * 255 / 9);
            line.push(v.to_string());
        }
        writeln!(out, "{}", line.join(" "))?;
    }
    out.flush()?;
    Ok(())
}

fn render(args: RenderArgs) -> Result<i32> {
    let records = read_jsonl(open(&args.file)?)?;
    let record = match args.index {
        Some(i) => records.iter().find(|r| r.index == i),
        None => records.first(),
    }
    .context("no matching record in file")?;
    println!(
        "{} #{}  rng_difficulty {:.3}  pso_difficulty {:.3}",
        record.task, record.index, record.rng_difficulty, record.pso_difficulty
    );
    let (a, b) = (ascii_rows(&record.input), ascii_rows(&record.output));
    let width = record.input.width();
    for i in 0..a.len().max(b.len()) {
        let left = a.get(i).map_or("", String::as_str);
        let arrow = if i == 0 { "->" } else { "  " };
        let right = b.get(i).map_or("", String::as_str);
        println!("{left:<width$}  {arrow}  {right}");
    }
    if let Some(path) = &args.pgm {
        write_pgm(path, record, 8)?;
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List => list(),
        Command::Generate(a) => generate(a),
        Command::Verify(a) => verify(a),
        Command::Band(a) => band(a),
        Command::Bench(a) => bench(a),
        Command::Render(a) => render(a),
    };
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
