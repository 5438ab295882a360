use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use zdlab::builders::{Builder, DEFAULT_BUILD_CAP};
use zdlab::enumerate::{enumerate_rings, EnumerationTask, DEFAULT_ENUM_CAP, MAX_ENUM_ORDER};
use zdlab::graph::{to_dot, Convention, GraphJson};
use zdlab::verify::{run_suite, SuiteConfig, CLAIMS};
use zdlab::{build_graph, FiniteRing};

/// Finite rings and their directed zero-divisor graphs.
#[derive(Debug, Parser)]
#[command(name = "zdlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a ring from a family and print it as JSON.
    Build {
        #[command(subcommand)]
        family: Family,
        /// Largest ring order the builders accept.
        #[arg(long, env = "ZDLAB_BUILD_CAP", default_value_t = DEFAULT_BUILD_CAP, global = true)]
        cap: usize,
    },
    /// Enumerate every ring of one order, one JSON ring per line.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Keep every structure-constant table instead of one ring per isomorphism class.
        #[arg(long)]
        no_dedup: bool,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        threads: usize,
        #[command(flatten)]
        caps: EnumCaps,
    },
    /// Print the zero-divisor graph of a ring read from FILE or stdin.
    Graph {
        file: Option<PathBuf>,
        /// Emit Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Write the graph of a ring to a file.
    Export {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
        format: ExportFormat,
        #[arg(long, short)]
        output: PathBuf,
    },
    /// Run the claim checks over enumerated rings and builder families.
    Verify {
        /// Inclusive order range such as `2..8`, or a single order.
        #[arg(long, default_value = "2..8")]
        orders: String,
        /// Comma-separated claim ids; a prefix like `Prop2.5` selects its parts.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = ConventionArg::Both)]
        convention: ConventionArg,
        #[arg(long)]
        fail_fast: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
        /// Skip the builder-family rings.
        #[arg(long)]
        no_families: bool,
        /// Include per-check timings (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        caps: EnumCaps,
    },
    /// List the claim ids known to `verify`.
    Claims,
}

#[derive(Debug, clap::Args)]
struct EnumCaps {
    /// Largest order enumerated without `--large`.
    #[arg(long = "enum-cap", env = "ZDLAB_ENUM_CAP", default_value_t = DEFAULT_ENUM_CAP)]
    cap: usize,
    /// Allow orders up to the hard limit.
    #[arg(long)]
    large: bool,
}

impl EnumCaps {
    fn effective(&self) -> usize {
        if self.large {
            MAX_ENUM_ORDER
        } else {
            self.cap.min(MAX_ENUM_ORDER)
        }
    }
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Z/n.
    Cyclic { n: usize },
    /// Zero multiplication on Z/d1 x ... x Z/dk.
    Null {
        #[arg(required = true)]
        factors: Vec<usize>,
    },
    /// k x k matrices over Z/n that vanish outside the first row.
    FirstRow { k: usize, n: usize },
    /// All k x k matrices over F_q, q prime.
    FullMatrix { k: usize, q: usize },
    /// Direct product; each operand is a JSON file or a spec like `cyclic:2`.
    Product { a: String, b: String },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Jsonl,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConventionArg {
    Simple,
    Loop,
    Both,
}

impl ConventionArg {
    fn conventions(self) -> Vec<Convention> {
        match self {
            ConventionArg::Simple => vec![Convention::Simple],
            ConventionArg::Loop => vec![Convention::Loop],
            ConventionArg::Both => Convention::ALL.to_vec(),
        }
    }
}

/// Parses `a..b`, `a..=b` (both inclusive) or a single order.
fn parse_orders(s: &str) -> Result<Vec<usize>> {
    let parse = |t: &str| t.trim().parse::<usize>().with_context(|| format!("bad order {t:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let n = parse(s)?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi {
        bail!("empty or invalid order range {s:?}");
    }
    Ok((lo..=hi).collect())
}

fn build_family(builder: &Builder, family: &Family) -> Result<FiniteRing> {
    Ok(match family {
        Family::Cyclic { n } => builder.cyclic(*n)?,
        Family::Null { factors } => builder.null(factors)?,
        Family::FirstRow { k, n } => builder.first_row(*k, *n)?,
        Family::FullMatrix { k, q } => builder.full_matrix(*k, *q)?,
        Family::Product { a, b } => {
            let a = operand(builder, a)?;
            let b = operand(builder, b)?;
            builder.product(&a, &b)?
        }
    })
}

/// A product operand: an existing file, or `family:p1:p2...`.
fn operand(builder: &Builder, spec: &str) -> Result<FiniteRing> {
    if Path::new(spec).is_file() {
        return read_ring(Some(Path::new(spec)));
    }
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default();
    let nums: Vec<usize> = parts
        .map(|p| p.parse::<usize>().with_context(|| format!("bad parameter in {spec:?}")))
        .collect::<Result<_>>()?;
    let family = match (name, nums.as_slice()) {
        ("cyclic", [n]) => Family::Cyclic { n: *n },
        ("null", f) if !f.is_empty() => Family::Null { factors: f.to_vec() },
        ("first_row", [k, n]) => Family::FirstRow { k: *k, n: *n },
        ("full_matrix", [k, q]) => Family::FullMatrix { k: *k, q: *q },
        _ => bail!("{spec:?} is neither a file nor a family spec like cyclic:2"),
    };
    build_family(builder, &family)
}

fn read_ring(path: Option<&Path>) -> Result<FiniteRing> {
    let text = match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading stdin")?;
            s
        }
    };
    FiniteRing::from_json_str(text.trim()).map_err(|e| anyhow!("invalid ring JSON: {e}"))
}

fn graph_output(ring: &FiniteRing, dot: bool) -> String {
    let graph = build_graph(ring);
    if dot {
        to_dot(ring, &graph)
    } else {
        let mut s = GraphJson::of(&graph).to_json_string();
        s.push('\n');
        s
    }
}

/// Exit status: 0 success, 1 a verification failed.
fn run(cli: Cli) -> Result<u8> {
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Build { family, cap } => {
            let ring = build_family(&Builder::with_cap(cap), &family)?;
            writeln!(out, "{}", ring.to_json_string())?;
        }
        Command::Enumerate { order, no_dedup, threads, caps } => {
            let task = EnumerationTask::new(order)
                .dedup(!no_dedup)
                .threads(threads)
                .cap(caps.effective());
            let found = enumerate_rings(&task)?;
            for ring in &found.rings {
                writeln!(out, "{}", ring.to_json_string())?;
            }
            eprintln!(
                "order {order}: {} rings ({} tables, {} search nodes)",
                found.stats.yielded, found.stats.tables, found.stats.nodes
            );
        }
        Command::Graph { file, dot } => {
            let ring = read_ring(file.as_deref())?;
            out.write_all(graph_output(&ring, dot).as_bytes())?;
        }
        Command::Export { file, format, output } => {
            let ring = read_ring(file.as_deref())?;
            let text = graph_output(&ring, matches!(format, ExportFormat::Dot));
            fs::write(&output, text).with_context(|| format!("writing {}", output.display()))?;
        }
        Command::Verify {
            orders,
            claims,
            convention,
            fail_fast,
            format,
            no_families,
            timing,
            caps,
        } => {
            let config = SuiteConfig {
                orders: parse_orders(&orders)?,
                families: !no_families,
                claims,
                conventions: convention.conventions(),
                fail_fast,
                record_timing: timing,
                enum_cap: caps.effective(),
            };
            let report = run_suite(&config)?;
            match format {
                ReportFormat::Table => out.write_all(report.render_table().as_bytes())?,
                ReportFormat::Jsonl => out.write_all(report.to_jsonl().as_bytes())?,
            }
            if report.has_failures() {
                return Ok(1);
            }
        }
        Command::Claims => {
            for c in CLAIMS {
                writeln!(out, "{:<20} {}", c.id, c.summary)?;
            }
        }
    }
    out.flush()?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_ranges() {
        assert_eq!(parse_orders("2..4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_orders("2..=3").unwrap(), vec![2, 3]);
        assert_eq!(parse_orders("5").unwrap(), vec![5]);
        assert!(parse_orders("4..2").is_err());
        assert!(parse_orders("x").is_err());
    }

    #[test]
    fn operand_specs() {
        let b = Builder::default();
        assert_eq!(operand(&b, "cyclic:3").unwrap().order(), 3);
        assert_eq!(operand(&b, "null:2:2").unwrap().order(), 4);
        assert_eq!(operand(&b, "first_row:2:3").unwrap().order(), 9);
        assert!(operand(&b, "bogus:1").is_err());
    }

    #[test]
    fn cli_parses() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
