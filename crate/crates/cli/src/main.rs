use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use tropconn::io::{
    matrix_document, parse_complex, parse_matrix, parse_polynomial, parse_univariate, parse_vector,
    serialize_complex, slice_document, to_json,
};
use tropconn::pipeline::DEFAULT_MAX_DENOMINATOR;
use tropconn::{
    choose_slicing_translate, generic_basis, golden, linear_image, properness_check, root_valuations, slice,
    theorem_walk, tropical_hypersurface, uniform_bergman_fan, walk_bfs, Error, PolyhedralComplex,
};

/// Exact polyhedral and tropical computations.
///
/// Inputs are JSON documents read from a file, or from standard input when
/// the path is omitted or `-`. Boolean queries exit with 0 for true and 1 for
/// false; bad input exits with 2 and internal failures with 3.
#[derive(Parser)]
#[command(name = "tropconn", version)]
struct Cli {
    /// Seed for every randomized choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the cells form a polyhedral complex.
    Validate { input: Option<PathBuf> },
    /// Print both connectivity verdicts.
    Connectivity { input: Option<PathBuf> },
    /// Shortest walk between two facets in the facet graph.
    Walk { from: usize, to: usize, input: Option<PathBuf> },
    /// Tropical hypersurface of a tropical polynomial document.
    Hypersurface { input: Option<PathBuf> },
    /// Root valuations of a valued univariate polynomial.
    Newton { input: Option<PathBuf> },
    /// The uniform Bergman fan of dimension `d` in ℝⁿ.
    Bergman { n: usize, d: usize },
    /// Translate every cell by a vector such as `1,-1/2,3`.
    Translate {
        #[arg(long, allow_hyphen_values = true)]
        vector: String,
        input: Option<PathBuf>,
    },
    /// Cartesian product of two complexes.
    Product { left: PathBuf, right: PathBuf },
    /// Image under an integer matrix.
    Image {
        #[arg(long)]
        matrix: PathBuf,
        input: Option<PathBuf>,
    },
    /// A unimodular basis generic for the complex.
    Basis { input: Option<PathBuf> },
    /// Common refinement of two complexes.
    Intersect { left: PathBuf, right: PathBuf },
    /// Whether two pure complexes meet in the expected dimension.
    Properness { left: PathBuf, right: PathBuf },
    /// Intersect with the tropical hyperplane `Δ − v`.
    ///
    /// Without `--vector` a generic translate meeting facets `--from` and
    /// `--to` is chosen from the seed.
    Slice {
        #[arg(long, allow_hyphen_values = true)]
        vector: Option<String>,
        #[arg(long, default_value_t = 0)]
        from: usize,
        #[arg(long, default_value_t = 0)]
        to: usize,
        input: Option<PathBuf>,
    },
    /// Walk between two facets by repeated slicing.
    TheoremWalk {
        from: usize,
        to: usize,
        /// Maximum number of slicing levels; defaults to the dimension.
        #[arg(long)]
        depth: Option<usize>,
        input: Option<PathBuf>,
    },
    /// Run one of the worked examples.
    Example { name: ExampleName },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleName {
    Ex13,
    Ex14,
}

enum Outcome {
    Done,
    Verdict(bool),
}

fn read_input(path: Option<&PathBuf>) -> Result<String, Error> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = fs::read_to_string(p).map_err(|e| Error::InvalidInput(format!("{}: {e}", p.display())))?
        }
        _ => {
            io::stdin().read_to_string(&mut text).map_err(|e| Error::InvalidInput(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn read_complex(path: Option<&PathBuf>) -> Result<PolyhedralComplex, Error> {
    parse_complex(&read_input(path)?)?.validated()
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let seed = cli.seed;
    match cli.command {
        Command::Validate { input } => {
            let report = parse_complex(&read_input(input.as_ref())?)?.validate();
            if report.is_ok() {
                println!("valid");
            } else {
                for (i, j) in &report.violations {
                    println!("cells {i} and {j} do not meet in a common face");
                }
                println!("invalid");
            }
            Ok(Outcome::Verdict(report.is_ok()))
        }
        Command::Connectivity { input } => {
            let c = read_complex(input.as_ref())?;
            let connected = c.is_connected()?;
            println!("connected: {connected}");
            let codim1 = match c.is_connected_through_codim1() {
                Ok(b) => b,
                Err(Error::NotPure) => {
                    println!("connected-through-codim-1: false (complex is not pure)");
                    return Ok(Outcome::Verdict(false));
                }
                Err(e) => return Err(e),
            };
            println!("connected-through-codim-1: {codim1}");
            Ok(Outcome::Verdict(connected && codim1))
        }
        Command::Walk { from, to, input } => {
            let c = read_complex(input.as_ref())?;
            match walk_bfs(&c, from, to)? {
                Some(w) => {
                    println!("{w}");
                    Ok(Outcome::Verdict(true))
                }
                None => {
                    println!("unreachable");
                    Ok(Outcome::Verdict(false))
                }
            }
        }
        Command::Hypersurface { input } => {
            let f = parse_polynomial(&read_input(input.as_ref())?)?;
            print!("{}", serialize_complex(&tropical_hypersurface(&f)?));
            Ok(Outcome::Done)
        }
        Command::Newton { input } => {
            let f = parse_univariate(&read_input(input.as_ref())?)?;
            println!("{}", root_valuations(&f)?);
            Ok(Outcome::Done)
        }
        Command::Bergman { n, d } => {
            print!("{}", serialize_complex(&uniform_bergman_fan(n, d)?));
            Ok(Outcome::Done)
        }
        Command::Translate { vector, input } => {
            let v = parse_vector(&vector)?;
            print!("{}", serialize_complex(&read_complex(input.as_ref())?.translate(&v)?));
            Ok(Outcome::Done)
        }
        Command::Product { left, right } => {
            let (a, b) = (read_complex(Some(&left))?, read_complex(Some(&right))?);
            print!("{}", serialize_complex(&a.cartesian_product(&b)?));
            Ok(Outcome::Done)
        }
        Command::Image { matrix, input } => {
            let m = parse_matrix(&read_input(Some(&matrix))?)?;
            print!("{}", serialize_complex(&linear_image(&read_complex(input.as_ref())?, &m)?));
            Ok(Outcome::Done)
        }
        Command::Basis { input } => {
            let m = generic_basis(&read_complex(input.as_ref())?)?;
            print!("{}", to_json(&matrix_document(&m)));
            Ok(Outcome::Done)
        }
        Command::Intersect { left, right } => {
            let (a, b) = (read_complex(Some(&left))?, read_complex(Some(&right))?);
            print!("{}", serialize_complex(&a.common_refinement(&b)?));
            Ok(Outcome::Done)
        }
        Command::Properness { left, right } => {
            let (a, b) = (read_complex(Some(&left))?, read_complex(Some(&right))?);
            let report = properness_check(&a, &b)?;
            for (i, j, dim) in &report.violations {
                println!("cells {i} and {j} meet in dimension {dim}, expected {}", report.expected_dim);
            }
            println!("proper: {}", report.proper);
            Ok(Outcome::Verdict(report.proper))
        }
        Command::Slice { vector, from, to, input } => {
            let c = read_complex(input.as_ref())?;
            let v = match vector {
                Some(text) => parse_vector(&text)?,
                None => choose_slicing_translate(&c, from, to, DEFAULT_MAX_DENOMINATOR, seed)?,
            };
            print!("{}", to_json(&slice_document(&slice(&c, &v)?)));
            Ok(Outcome::Done)
        }
        Command::TheoremWalk { from, to, depth, input } => {
            let c = read_complex(input.as_ref())?;
            let depth = depth.unwrap_or(c.dimension().max(0) as usize);
            println!("{}", theorem_walk(&c, from, to, depth, seed)?);
            Ok(Outcome::Done)
        }
        Command::Example { name } => {
            match name {
                ExampleName::Ex13 => println!("{}", golden::ex13()?),
                ExampleName::Ex14 => println!("{}", golden::ex14()?),
            }
            Ok(Outcome::Done)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Done | Outcome::Verdict(true)) => ExitCode::SUCCESS,
        Ok(Outcome::Verdict(false)) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 3 })
        }
    }
}
