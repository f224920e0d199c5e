//! Command-line front end.
//!
//! All computation lives in the library modules; this file parses flags,
//! serializes results (plain text for humans, CSV/JSON for machines), and
//! maps failures to exit codes: 2 for usage errors (via clap), 1 for domain
//! errors with a one-line diagnostic on stderr.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use crate::curve::{self, CurvePolyline};
use crate::entropy;
use crate::error::{Error, Result};
use crate::farey::FareySequence;
use crate::rational::Fraction;
use crate::spectrum::{self, FillingFactor, HausdorffLabel};
use crate::statistics::{self, FractonPoint};

const CLASSIC_KOCH_DIMENSION: f64 = 1.261_859_507_142_914_8; // ln 4 / ln 3

#[derive(Parser)]
#[command(
    name = "fracton",
    version,
    about = "Farey series, Hausdorff-dimension classes of filling factors, \
             fracton occupation statistics, and fractal curve dimension"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
    /// Significant digits for real-valued output
    #[arg(long, global = true, default_value_t = 12,
          value_parser = clap::value_parser!(u32).range(1..=17))]
    precision: u32,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Generator {
    Koch,
}

#[derive(Clone, Copy, Debug)]
struct GridSpec {
    start: f64,
    stop: f64,
    steps: usize,
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(text: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = text.split(':').collect();
        let [start, stop, steps] = parts[..] else {
            return Err(format!("expected min:max:steps, got `{text}`"));
        };
        let start: f64 = start.parse().map_err(|_| format!("bad grid start `{start}`"))?;
        let stop: f64 = stop.parse().map_err(|_| format!("bad grid stop `{stop}`"))?;
        let steps: usize = steps.parse().map_err(|_| format!("bad grid steps `{steps}`"))?;
        if steps < 2 {
            return Err("grid needs at least 2 steps".to_string());
        }
        if !start.is_finite() || !stop.is_finite() {
            return Err("grid bounds must be finite".to_string());
        }
        Ok(GridSpec { start, stop, steps })
    }
}

/// `p/q` or a real literal, for the label flag.
fn parse_label(text: &str) -> std::result::Result<f64, String> {
    if let Ok(fraction) = text.parse::<Fraction>() {
        return Ok(fraction.to_f64());
    }
    text.parse::<f64>()
        .map_err(|_| format!("expected a fraction p/q or a real number, got `{text}`"))
}

fn parse_fraction(text: &str) -> std::result::Result<Fraction, String> {
    text.parse::<Fraction>().map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Generate the Farey series of a given order
    Farey {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        order: u32,
    },
    /// Hausdorff label of a filling factor
    Classify {
        #[arg(value_name = "NU", value_parser = parse_fraction, allow_hyphen_values = true)]
        filling: Fraction,
    },
    /// Dual filling factor (reflection within its unit interval)
    Dual {
        #[arg(value_name = "NU", value_parser = parse_fraction, allow_hyphen_values = true)]
        filling: Fraction,
    },
    /// Ascending members of one fractal class
    Class {
        #[arg(value_name = "H", value_parser = parse_fraction, allow_hyphen_values = true)]
        label: Fraction,
        #[arg(long, default_value_t = 11, value_parser = clap::value_parser!(u64).range(1..=100_000))]
        count: u64,
    },
    /// Check the second-member theorem over a Farey series
    Theorem {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        order: u32,
    },
    /// Tabulate class members per unit interval
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        order: u32,
        #[arg(long, default_value_t = 18, value_parser = clap::value_parser!(u32).range(1..))]
        rows: u32,
    },
    /// Solve the occupation distribution at (h, xi)
    #[command(group = ArgGroup::new("target").required(true).args(["xi", "grid"]))]
    Occupation {
        #[arg(long = "h", value_name = "H", value_parser = parse_label, allow_hyphen_values = true)]
        label: f64,
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<f64>,
        /// Sweep xi over min:max:steps instead of a single point
        #[arg(long)]
        grid: Option<GridSpec>,
        /// Space the sweep logarithmically
        #[arg(long, requires = "grid")]
        log: bool,
    },
    /// Entropy per state at an occupation, or at the equilibrium
    /// occupation of a given xi
    #[command(group = ArgGroup::new("state").required(true).args(["n", "xi"]))]
    Entropy {
        #[arg(long = "h", value_name = "H", value_parser = parse_label, allow_hyphen_values = true)]
        label: f64,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<f64>,
    },
    /// Generate a fractal test curve, optionally estimating its dimension
    Curve {
        #[arg(long, value_enum, default_value_t = Generator::Koch)]
        generator: Generator,
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = CLASSIC_KOCH_DIMENSION)]
        dimension: f64,
        /// Run a divider sweep and report the fitted dimension
        #[arg(long)]
        estimate: bool,
        /// Comma-separated opening sizes for the sweep (defaults to the
        /// generator-matched geometric grid)
        #[arg(long, value_delimiter = ',', requires = "estimate")]
        resolutions: Option<Vec<f64>>,
    },
}

pub fn run() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(1)
        }
    }
}

fn execute(cli: &Cli) -> Result<String> {
    let fmt = RealFormat {
        significant: cli.precision as usize,
    };
    match &cli.command {
        Command::Farey { order } => farey_output(*order, cli.format),
        Command::Classify { filling } => classify_output(filling, cli.format),
        Command::Dual { filling } => dual_output(filling, cli.format),
        Command::Class { label, count } => class_output(label, *count as usize, cli.format),
        Command::Theorem { order } => theorem_output(*order, cli.format),
        Command::Table { order, rows } => table_output(*order, *rows, cli.format),
        Command::Occupation {
            label,
            xi,
            grid,
            log,
        } => occupation_output(*label, *xi, *grid, *log, cli.format, fmt),
        Command::Entropy { label, n, xi } => entropy_output(*label, *n, *xi, cli.format, fmt),
        Command::Curve {
            generator: Generator::Koch,
            level,
            dimension,
            estimate,
            resolutions,
        } => curve_output(*level, *dimension, *estimate, resolutions.as_deref(), cli.format, fmt),
    }
}

// ---------------------------------------------------------------- formatting

/// Significant-digit real formatter; trailing zeros trimmed, scientific
/// notation outside the window [1e-4, 10^digits).
#[derive(Clone, Copy)]
struct RealFormat {
    significant: usize,
}

impl RealFormat {
    fn real(&self, value: f64) -> String {
        format_real(value, self.significant)
    }
}

fn format_real(value: f64, significant: usize) -> String {
    let digits = significant.max(1);
    if value == 0.0 {
        return "0".to_string();
    }
    if value.is_nan() {
        return "nan".to_string();
    }
    if value.is_infinite() {
        return if value > 0.0 { "inf" } else { "-inf" }.to_string();
    }

    let scientific = format!("{:.*e}", digits - 1, value);
    let (mantissa, exponent) = scientific.split_once('e').expect("e-notation");
    let exponent: i32 = exponent.parse().expect("exponent");
    let negative = mantissa.starts_with('-');
    let digit_run: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();

    let body = if exponent >= -4 && (exponent as i64) < digits as i64 {
        if exponent >= 0 {
            let split = exponent as usize + 1;
            let integer = &digit_run[..split];
            let fraction = digit_run[split..].trim_end_matches('0');
            if fraction.is_empty() {
                integer.to_string()
            } else {
                format!("{integer}.{fraction}")
            }
        } else {
            let leading = "0".repeat((-exponent - 1) as usize);
            let fraction = format!("{leading}{digit_run}");
            format!("0.{}", fraction.trim_end_matches('0'))
        }
    } else {
        let head = &digit_run[..1];
        let tail = digit_run[1..].trim_end_matches('0');
        if tail.is_empty() {
            format!("{head}e{exponent}")
        } else {
            format!("{head}.{tail}e{exponent}")
        }
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

fn json_string(text: &str) -> String {
    let escaped: String = text
        .chars()
        .flat_map(|c| match c {
            '"' | '\\' => vec!['\\', c],
            _ => vec![c],
        })
        .collect();
    format!("\"{escaped}\"")
}

fn json_fraction_array(fractions: &[Fraction]) -> String {
    let items: Vec<String> = fractions.iter().map(|f| json_string(&f.wire())).collect();
    format!("[{}]", items.join(","))
}

// ---------------------------------------------------------------- commands

fn farey_output(order: u32, format: OutputFormat) -> Result<String> {
    let seq = FareySequence::generate(order)?;
    Ok(match format {
        OutputFormat::Plain | OutputFormat::Csv => {
            let mut out = String::new();
            for f in seq.elements() {
                out.push_str(&f.wire());
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => format!("{}\n", json_fraction_array(seq.elements())),
    })
}

fn classify_output(filling: &Fraction, format: OutputFormat) -> Result<String> {
    let label = spectrum::classify_fraction(filling)?;
    Ok(match format {
        OutputFormat::Plain => format!("h = {}\n", label.fraction()),
        OutputFormat::Csv => format!("nu,h\n{},{}\n", filling.wire(), label.fraction().wire()),
        OutputFormat::Json => format!(
            "{{\"nu\":{},\"h\":{}}}\n",
            json_string(&filling.wire()),
            json_string(&label.fraction().wire())
        ),
    })
}

fn dual_output(filling: &Fraction, format: OutputFormat) -> Result<String> {
    let dual = spectrum::dual_filling(&FillingFactor::new(filling.clone())?);
    let dual = dual.fraction();
    Ok(match format {
        OutputFormat::Plain => format!("dual = {dual}\n"),
        OutputFormat::Csv => format!("nu,dual\n{},{}\n", filling.wire(), dual.wire()),
        OutputFormat::Json => format!(
            "{{\"nu\":{},\"dual\":{}}}\n",
            json_string(&filling.wire()),
            json_string(&dual.wire())
        ),
    })
}

fn class_output(label: &Fraction, count: usize, format: OutputFormat) -> Result<String> {
    let label = HausdorffLabel::new(label.clone())?;
    let members = spectrum::class_members(&label, count);
    Ok(match format {
        OutputFormat::Plain => {
            let items: Vec<String> = members.iter().map(Fraction::to_string).collect();
            format!("{}\n", items.join(" "))
        }
        OutputFormat::Csv => {
            let mut out = String::new();
            for m in &members {
                out.push_str(&m.wire());
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => format!(
            "{{\"h\":{},\"members\":{}}}\n",
            json_string(&label.fraction().wire()),
            json_fraction_array(&members)
        ),
    })
}

fn theorem_output(order: u32, format: OutputFormat) -> Result<String> {
    let report = spectrum::check_second_member_theorem(order)?;
    Ok(match format {
        OutputFormat::Plain => {
            let mut out = String::new();
            for entry in &report.entries {
                out.push_str(&format!(
                    "{} h={} second={} {}\n",
                    entry.filling,
                    entry.label,
                    entry.second_member,
                    if entry.holds { "ok" } else { "FAIL" }
                ));
            }
            let passing = report.entries.iter().filter(|e| e.holds).count();
            out.push_str(&format!(
                "{passing}/{} interior fractions of F_{order} satisfy the second-member theorem\n",
                report.entries.len()
            ));
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("f,h,second,holds\n");
            for entry in &report.entries {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    entry.filling.wire(),
                    entry.label.wire(),
                    entry.second_member.wire(),
                    entry.holds
                ));
            }
            out
        }
        OutputFormat::Json => {
            let entries: Vec<String> = report
                .entries
                .iter()
                .map(|entry| {
                    format!(
                        "{{\"f\":{},\"h\":{},\"second\":{},\"holds\":{}}}",
                        json_string(&entry.filling.wire()),
                        json_string(&entry.label.wire()),
                        json_string(&entry.second_member.wire()),
                        entry.holds
                    )
                })
                .collect();
            format!(
                "{{\"order\":{},\"all_hold\":{},\"entries\":[{}]}}\n",
                report.order,
                report.all_hold(),
                entries.join(",")
            )
        }
    })
}

fn table_output(order: u32, rows: u32, format: OutputFormat) -> Result<String> {
    let table = spectrum::class_table(order, rows)?;
    Ok(match format {
        OutputFormat::Csv => {
            let mut out = String::from("interval");
            for label in &table.labels {
                out.push(',');
                out.push_str(&label.wire());
            }
            out.push('\n');
            for row in &table.rows {
                out.push_str(&row.interval_label());
                for cell in &row.cells {
                    out.push(',');
                    out.push_str(&cell.wire());
                }
                out.push('\n');
            }
            out
        }
        OutputFormat::Plain => {
            let mut grid: Vec<Vec<String>> = Vec::new();
            let mut header = vec!["interval".to_string()];
            header.extend(table.labels.iter().map(Fraction::wire));
            grid.push(header);
            for row in &table.rows {
                let mut cells = vec![row.interval_label()];
                cells.extend(row.cells.iter().map(Fraction::wire));
                grid.push(cells);
            }
            let columns = grid[0].len();
            let widths: Vec<usize> = (0..columns)
                .map(|c| grid.iter().map(|r| r[c].len()).max().unwrap_or(0))
                .collect();
            let mut out = String::new();
            for row in &grid {
                let line: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, width)| format!("{cell:>width$}"))
                    .collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            }
            out
        }
        OutputFormat::Json => {
            let rows_json: Vec<String> = table
                .rows
                .iter()
                .map(|row| {
                    format!(
                        "{{\"interval\":{},\"cells\":{}}}",
                        json_string(&row.interval_label()),
                        json_fraction_array(&row.cells)
                    )
                })
                .collect();
            format!(
                "{{\"labels\":{},\"rows\":[{}]}}\n",
                json_fraction_array(&table.labels),
                rows_json.join(",")
            )
        }
    })
}

fn occupation_rows(label: f64, xis: &[f64]) -> Result<Vec<FractonPoint>> {
    xis.iter().map(|&xi| statistics::solve_point(label, xi)).collect()
}

fn occupation_output(
    label: f64,
    xi: Option<f64>,
    grid: Option<GridSpec>,
    log: bool,
    format: OutputFormat,
    fmt: RealFormat,
) -> Result<String> {
    let xis: Vec<f64> = match (xi, grid) {
        (Some(point), None) => vec![point],
        (None, Some(spec)) => grid_points(spec, log)?,
        _ => unreachable!("clap group enforces exactly one"),
    };
    let points = occupation_rows(label, &xis)?;

    Ok(match format {
        OutputFormat::Plain if points.len() == 1 => {
            let p = &points[0];
            format!(
                "h = {}\nxi = {}\nY = {}\nn = {}\nresidual = {}\n",
                fmt.real(p.h),
                fmt.real(p.xi),
                fmt.real(p.y),
                fmt.real(p.n),
                fmt.real(p.residual)
            )
        }
        OutputFormat::Plain | OutputFormat::Csv => {
            let mut out = String::from("h,xi,Y,n,residual\n");
            for p in &points {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    fmt.real(p.h),
                    fmt.real(p.xi),
                    fmt.real(p.y),
                    fmt.real(p.n),
                    fmt.real(p.residual)
                ));
            }
            out
        }
        OutputFormat::Json => {
            let objects: Vec<String> = points
                .iter()
                .map(|p| {
                    format!(
                        "{{\"h\":{},\"xi\":{},\"Y\":{},\"n\":{},\"residual\":{}}}",
                        fmt.real(p.h),
                        fmt.real(p.xi),
                        fmt.real(p.y),
                        fmt.real(p.n),
                        fmt.real(p.residual)
                    )
                })
                .collect();
            if objects.len() == 1 {
                format!("{}\n", objects[0])
            } else {
                format!("[{}]\n", objects.join(","))
            }
        }
    })
}

fn grid_points(spec: GridSpec, log: bool) -> Result<Vec<f64>> {
    if log && (spec.start <= 0.0 || spec.stop <= 0.0 || spec.start.is_nan() || spec.stop.is_nan()) {
        return Err(Error::NegativeWeight(spec.start.min(spec.stop)));
    }
    let count = spec.steps;
    let points = (0..count)
        .map(|i| {
            let fraction = i as f64 / (count - 1) as f64;
            if log {
                (spec.start.ln() + fraction * (spec.stop.ln() - spec.start.ln())).exp()
            } else {
                spec.start + fraction * (spec.stop - spec.start)
            }
        })
        .collect();
    Ok(points)
}

fn entropy_output(
    label: f64,
    n: Option<f64>,
    xi: Option<f64>,
    format: OutputFormat,
    fmt: RealFormat,
) -> Result<String> {
    let occupation = match (n, xi) {
        (Some(n), None) => n,
        (None, Some(xi)) => statistics::occupation(label, xi)?,
        _ => unreachable!("clap group enforces exactly one"),
    };
    let entropy = entropy::entropy_per_state(label, occupation, 1.0)?;
    Ok(match format {
        OutputFormat::Plain => format!(
            "h = {}\nn = {}\nS = {}\n",
            fmt.real(label),
            fmt.real(occupation),
            fmt.real(entropy)
        ),
        OutputFormat::Csv => format!(
            "h,n,S\n{},{},{}\n",
            fmt.real(label),
            fmt.real(occupation),
            fmt.real(entropy)
        ),
        OutputFormat::Json => format!(
            "{{\"h\":{},\"n\":{},\"S\":{}}}\n",
            fmt.real(label),
            fmt.real(occupation),
            fmt.real(entropy)
        ),
    })
}

fn curve_output(
    level: u32,
    dimension: f64,
    estimate: bool,
    resolutions: Option<&[f64]>,
    format: OutputFormat,
    fmt: RealFormat,
) -> Result<String> {
    let polyline = curve::generate_koch(level, dimension)?;
    if !estimate {
        return Ok(emit_points(&polyline, level, dimension, format, fmt));
    }

    let grid: Vec<f64> = match resolutions {
        Some(given) => given.to_vec(),
        None => curve::geometric_resolutions(curve::koch_ratio(dimension)?, 6),
    };
    let est = curve::estimate_dimension(&polyline, &grid)?;
    Ok(match format {
        OutputFormat::Plain => {
            let mut out = format!(
                "h = {}\nstderr = {}\nsamples:\n",
                fmt.real(est.dimension),
                fmt.real(est.std_error)
            );
            for s in &est.samples {
                out.push_str(&format!(
                    "  R={} L={}\n",
                    fmt.real(s.resolution),
                    fmt.real(s.length)
                ));
            }
            out
        }
        OutputFormat::Csv => format!(
            "h,stderr\n{},{}\n",
            fmt.real(est.dimension),
            fmt.real(est.std_error)
        ),
        OutputFormat::Json => {
            let samples: Vec<String> = est
                .samples
                .iter()
                .map(|s| {
                    format!(
                        "{{\"resolution\":{},\"length\":{}}}",
                        fmt.real(s.resolution),
                        fmt.real(s.length)
                    )
                })
                .collect();
            format!(
                "{{\"h\":{},\"stderr\":{},\"samples\":[{}]}}\n",
                fmt.real(est.dimension),
                fmt.real(est.std_error),
                samples.join(",")
            )
        }
    })
}

fn emit_points(
    polyline: &CurvePolyline,
    level: u32,
    dimension: f64,
    format: OutputFormat,
    fmt: RealFormat,
) -> String {
    match format {
        OutputFormat::Plain | OutputFormat::Csv => {
            let mut out = String::new();
            for p in polyline.points() {
                out.push_str(&format!("{},{}\n", fmt.real(p[0]), fmt.real(p[1])));
            }
            out
        }
        OutputFormat::Json => {
            let points: Vec<String> = polyline
                .points()
                .iter()
                .map(|p| format!("[{},{}]", fmt.real(p[0]), fmt.real(p[1])))
                .collect();
            format!(
                "{{\"generator\":{},\"level\":{},\"dimension\":{},\"points\":[{}]}}\n",
                json_string(polyline.generator()),
                level,
                fmt.real(dimension),
                points.join(",")
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_real(0.0, 12), "0");
        assert_eq!(format_real(-0.0, 12), "0");
        assert_eq!(format_real(1.0, 12), "1");
        assert_eq!(format_real(2.618033988749895, 12), "2.61803398875");
        assert_eq!(format_real(0.8944271909999159, 12), "0.894427191");
        assert_eq!(format_real(1e8, 12), "100000000");
        assert_eq!(format_real(-1.5, 12), "-1.5");
        assert_eq!(format_real(1e-6, 12), "1e-6");
        assert_eq!(format_real(1e-4, 12), "0.0001");
        assert_eq!(format_real(1.23e-7, 12), "1.23e-7");
        assert_eq!(format_real(4.440892098500626e-16, 12), "4.4408920985e-16");
        assert_eq!(format_real(1e12, 12), "1e12");
        assert_eq!(format_real(0.5, 3), "0.5");
        assert_eq!(format_real(1.0 / 3.0, 12), "0.333333333333");
        assert_eq!(format_real(2.0 / 3.0, 4), "0.6667");
    }

    #[test]
    fn grid_specs_parse_and_reject() {
        let spec: GridSpec = "0.5:4:8".parse().unwrap();
        assert_eq!(spec.steps, 8);
        assert!("1:2".parse::<GridSpec>().is_err());
        assert!("1:2:1".parse::<GridSpec>().is_err());
        assert!("a:2:5".parse::<GridSpec>().is_err());
    }

    #[test]
    fn grid_points_cover_both_spacings() {
        let spec = GridSpec { start: 1.0, stop: 100.0, steps: 3 };
        let linear = grid_points(spec, false).unwrap();
        assert_eq!(linear, vec![1.0, 50.5, 100.0]);
        let logarithmic = grid_points(spec, true).unwrap();
        assert!((logarithmic[1] - 10.0).abs() < 1e-12);
    }

    #[test]
    fn label_flag_accepts_both_notations() {
        assert_eq!(parse_label("3/2").unwrap(), 1.5);
        assert_eq!(parse_label("1.5").unwrap(), 1.5);
        assert!(parse_label("three").is_err());
    }

    #[test]
    fn cli_structure_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
