use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use trilength::embedding::psi_closed_form;
use trilength::hstar::{is_proper, qr_decode, qr_encode, ty, HstarError};
use trilength::outerplanar::{is_outerplanar, Verdict};
use trilength::pipeline::{draw_graph, draw_tstar, DrawOutcome, ParamSource};
use trilength::realize::{emit_json, emit_svg, TorusParams};
use trilength::selftest::{self, SelftestConfig};
use trilength::{parse_labeled_graph, Address, Error, QrEncoding};

#[derive(Parser)]
#[command(
    name = "trilength",
    version,
    about = "Three-length drawings of outerplanar graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is outerplanar.
    Check {
        /// Graph file, or `-` for standard input.
        input: PathBuf,
    },
    /// Draw an outerplanar graph using at most three edge lengths.
    Draw {
        /// Graph file, or `-` for standard input.
        input: PathBuf,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Show the run-length encoding of a rhombus-tree address.
    Encode {
        /// Comma-separated labels from F, L, R; empty for the root.
        address: String,
    },
    /// Rebuild an address from its run-length encoding.
    Decode {
        /// Forward-run lengths, m + 1 comma-separated values.
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        q: Vec<u64>,
        /// Turn bits (0 = L, 1 = R), m comma-separated values.
        #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "")]
        rho: Vec<String>,
        #[arg(long)]
        m: usize,
    },
    /// Draw every rhombus node up to a depth.
    Tstar {
        #[arg(long, default_value_t = 0)]
        depth: usize,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run the built-in property suite.
    Selftest {
        #[arg(long, default_value_t = SelftestConfig::default().max_n)]
        max_n: usize,
        #[arg(long, default_value_t = SelftestConfig::default().depth)]
        depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Swap in a stepper with a broken right-turn parity rule.
        #[arg(long, hide = true)]
        mutate_right_turn_parity: bool,
    },
}

#[derive(Args)]
struct ParamArgs {
    /// Seed for sampled angles [default: $TRILENGTH_SEED, else 0].
    #[arg(long, conflicts_with_all = ["lengths", "theta0"])]
    seed: Option<u64>,
    /// Target edge lengths `a,b,c`.
    #[arg(long, value_delimiter = ',', conflicts_with = "theta0")]
    lengths: Option<Vec<f64>>,
    /// Angle of `x0` in radians.
    #[arg(long, requires = "theta1", allow_negative_numbers = true)]
    theta0: Option<f64>,
    /// Angle of `x1` in radians.
    #[arg(long, requires = "theta0", allow_negative_numbers = true)]
    theta1: Option<f64>,
    /// Overall scale; only with explicit angles.
    #[arg(long, requires = "theta0")]
    scale: Option<f64>,
}

impl ParamArgs {
    fn source(&self) -> Result<ParamSource, String> {
        if let Some(l) = &self.lengths {
            let [a, b, c] = l[..] else {
                return Err(format!("--lengths takes exactly 3 values, got {}", l.len()));
            };
            return Ok(ParamSource::Lengths([a, b, c]));
        }
        if let (Some(theta0), Some(theta1)) = (self.theta0, self.theta1) {
            let scale = self.scale.unwrap_or(1.0);
            for (name, v) in [("theta0", theta0), ("theta1", theta1)] {
                if !v.is_finite() || v.rem_euclid(std::f64::consts::TAU) == 0.0 {
                    return Err(format!("{name} must be finite and not a multiple of 2 pi"));
                }
            }
            if !(scale > 0.0 && scale.is_finite()) {
                return Err("scale must be positive".into());
            }
            return Ok(ParamSource::Explicit(TorusParams {
                theta0,
                theta1,
                scale,
            }));
        }
        let seed = match (self.seed, std::env::var(SEED_ENV)) {
            (Some(s), _) => s,
            (None, Ok(v)) => v
                .trim()
                .parse()
                .map_err(|_| format!("{SEED_ENV} is not an unsigned integer: {v:?}"))?,
            (None, Err(_)) => 0,
        };
        Ok(ParamSource::Seed(seed))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Svg,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Svg)]
    format: Format,
    /// Output file; standard output when absent.
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
}

const SEED_ENV: &str = "TRILENGTH_SEED";
const EXIT_REJECTED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_VERIFY: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: e.exit_code() as u8,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("trilength: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Check { input } => {
            let g = parse_labeled_graph(&read_input(&input)?).map_err(Error::from)?;
            match is_outerplanar(&g.graph) {
                Verdict::Outerplanar => {
                    println!("outerplanar");
                    Ok(())
                }
                Verdict::NotOuterplanar(why) => {
                    println!("not outerplanar: {why}");
                    Err(Failure {
                        code: EXIT_REJECTED,
                        message: String::new(),
                    })
                }
            }
        }
        Command::Draw { input, params, out } => {
            let source = params.source().map_err(input_error)?;
            let g = parse_labeled_graph(&read_input(&input)?).map_err(Error::from)?;
            let mut outcome = draw_graph(&g.graph, source)?;
            if let Some(labels) = g.labels {
                outcome.drawing.labels = labels.into_iter().enumerate().collect();
            }
            emit(&outcome, &out)
        }
        Command::Encode { address } => {
            let a: Address = address
                .parse()
                .map_err(|e: HstarError| input_error(e.to_string()))?;
            report_address(&a, &qr_encode(&a))
        }
        Command::Decode { q, rho, m } => {
            let rho = rho
                .iter()
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<u8>()
                        .map_err(|_| input_error(format!("bad rho bit {s:?}")))
                })
                .collect::<Result<Vec<u8>, _>>()?;
            let e = QrEncoding::new(q, rho, m).map_err(Error::from)?;
            report_address(&qr_decode(&e), &e)
        }
        Command::Tstar { depth, params, out } => {
            let source = params.source().map_err(input_error)?;
            let outcome = draw_tstar(depth, source)?;
            emit(&outcome, &out)
        }
        Command::Selftest {
            max_n,
            depth,
            seed,
            mutate_right_turn_parity,
        } => {
            let cfg = SelftestConfig { max_n, depth, seed };
            let report = if mutate_right_turn_parity {
                selftest::run_with_stepper(&cfg, selftest::mutant_right_turn_parity)
            } else {
                selftest::run(&cfg)
            }
            .map_err(input_error)?;
            for o in &report.outcomes {
                let status = if o.result.is_ok() { "PASS" } else { "FAIL" };
                println!("{status} {} ({:.2?})", o.name, o.elapsed);
                if let Err(why) = &o.result {
                    println!("     {why}");
                }
            }
            if report.passed() {
                Ok(())
            } else {
                let names: Vec<&str> = report.failures().map(|o| o.name).collect();
                Err(Failure {
                    code: EXIT_VERIFY,
                    message: format!("failing properties: {}", names.join(", ")),
                })
            }
        }
    }
}

fn report_address(a: &Address, e: &QrEncoding) -> Result<(), Failure> {
    let psi = psi_closed_form(e).map_err(Error::from)?;
    println!("address: {a}");
    println!("encoding: {e}");
    println!("proper: {}", is_proper(e));
    println!("ty: {}", ty(a));
    println!("psi: {psi}");
    Ok(())
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn emit(outcome: &DrawOutcome, out: &OutputArgs) -> Result<(), Failure> {
    let text = match out.format {
        Format::Svg => emit_svg(&outcome.drawing),
        Format::Json => emit_json(&outcome.drawing, &outcome.placement),
    };
    let res = match &out.output {
        Some(path) => fs::write(path, text),
        None => io::stdout().write_all(text.as_bytes()),
    };
    res.map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("writing output: {e}"),
    })
}
