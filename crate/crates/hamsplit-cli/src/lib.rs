//! Command-line surface for the hamsplit library: single-value queries,
//! equation and spectrum dumps, dimension tables, monodromy sampling, and
//! the verification sweep.

pub mod report;
pub mod suites;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use hamsplit::correspondence::{b_equation, even_sigma_equation, odd_equation, p_equation};
use hamsplit::covering::{random_simple_monodromy, SignedPerm};
use hamsplit::dimensions::{dim_table, DimTable};
use hamsplit::exactalg::{AffineExpr, IntPoly, Rational};
use hamsplit::hamming::{char_and_min_poly, krawtchouk, subspace_spectrum, SubspaceName};
use hamsplit::tridiag::cnplus;
use hamsplit::Error;

use report::VerifyReport;
use suites::{registry, suite_by_name, Suite};

#[derive(Parser)]
#[command(
    name = "hamsplit",
    version,
    about = "Exact arithmetic for split equations of distance transforms on Hamming fibers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Component {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "odd")]
    Odd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Odd,
    Even,
    Hamming,
    Dims,
    Tridiag,
    Covering,
    All,
}

impl SuiteArg {
    fn as_str(self) -> &'static str {
        match self {
            SuiteArg::Odd => "odd",
            SuiteArg::Even => "even",
            SuiteArg::Hamming => "hamming",
            SuiteArg::Dims => "dims",
            SuiteArg::Tridiag => "tridiag",
            SuiteArg::Covering => "covering",
            SuiteArg::All => "all",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalue of the distance-k transform: one value with --ell, else
    /// the full row over ell = 0..=n.
    Krawtchouk {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        ell: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Assembled annihilating equation, or the symbol-valued form with
    /// --sigma (even n only).
    Equation {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        component: Option<Component>,
        #[arg(long, conflicts_with = "component")]
        sigma: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Spectrum of the distance-k quotient action on one invariant
    /// subspace (+, -, e, o, +e, +o, -e, -o).
    Spectrum {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        subspace: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Dimension table at degree n: symbolic affine expressions, or values
    /// at --gx/--gy.
    Dims {
        #[arg(long)]
        n: u32,
        #[arg(long, requires = "gy", conflicts_with = "symbolic")]
        gx: Option<i64>,
        #[arg(long, requires = "gx", conflicts_with = "symbolic")]
        gy: Option<i64>,
        /// Print coefficient form (the default when --gx/--gy are absent).
        #[arg(long)]
        symbolic: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Sample a seeded random simple-type monodromy instance as JSON.
    Covering {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        branches: u32,
        #[arg(long, default_value_t = 1)]
        genus_y: u32,
        #[arg(long)]
        seed: u64,
    },
    /// Characteristic polynomial of the tridiagonal determinant identity
    /// at odd n.
    Tridiag {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification suites over a degree range.
    Verify {
        #[arg(long)]
        n_from: u32,
        #[arg(long)]
        n_to: u32,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

/// Parses argv (including the program name) and runs one subcommand.
/// Returns the process exit code: 0 on success, 1 on verification or
/// search failure, 2 on usage errors.
pub fn run(argv: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidArgument(_) | Error::Unsupported(_) => 2,
                _ => 1,
            }
        }
    }
}

fn poly_json(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

fn affine_json(e: &AffineExpr) -> Value {
    json!({
        "gx": e.gx.to_string(),
        "gy": e.gy.to_string(),
        "c": e.c.to_string(),
    })
}

fn signed_perm_json(p: &SignedPerm) -> Value {
    let (perm, signs) = p.to_one_based();
    json!([perm, signs])
}

fn unsupported_format(command: &str, format: &str) -> Error {
    Error::InvalidArgument(format!("{format} output is not available for {command}"))
}

fn dispatch(command: Command) -> Result<i32, Error> {
    match command {
        Command::Krawtchouk { n, k, ell, format } => {
            if let Some(l) = ell {
                let v = krawtchouk(n, k, l)?;
                match format {
                    Format::Text => println!("{v}"),
                    Format::Json => println!(
                        "{}",
                        json!({
                            "command": "krawtchouk",
                            "n": n,
                            "k": k,
                            "ell": l,
                            "value": v.to_string(),
                        })
                    ),
                    Format::Csv => {
                        println!("n,k,ell,value");
                        println!("{n},{k},{l},{v}");
                    }
                }
            } else {
                let values: Vec<BigInt> = (0..=n)
                    .map(|l| krawtchouk(n, k, l))
                    .collect::<Result<_, _>>()?;
                match format {
                    Format::Text => {
                        println!("ell lambda");
                        for (l, v) in values.iter().enumerate() {
                            println!("{l} {v}");
                        }
                    }
                    Format::Json => {
                        let strings: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                        println!(
                            "{}",
                            json!({
                                "command": "krawtchouk",
                                "n": n,
                                "k": k,
                                "values": strings,
                            })
                        );
                    }
                    Format::Csv => {
                        println!("n,k,ell,value");
                        for (l, v) in values.iter().enumerate() {
                            println!("{n},{k},{l},{v}");
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Equation { n, component, sigma, format } => {
            if format == Format::Csv {
                return Err(unsupported_format("equation", "csv"));
            }
            if sigma {
                let symbol = even_sigma_equation(n)?;
                match format {
                    Format::Text => println!("{symbol}"),
                    Format::Json => {
                        let coeffs: Vec<Value> = symbol
                            .coeffs()
                            .iter()
                            .map(|(id, sig)| json!([id.to_string(), sig.to_string()]))
                            .collect();
                        println!(
                            "{}",
                            json!({
                                "command": "equation",
                                "n": n,
                                "sigma": true,
                                "coeffs": coeffs,
                            })
                        );
                    }
                    Format::Csv => unreachable!(),
                }
                return Ok(0);
            }
            let component = match component {
                Some(c) => c,
                None if n % 2 == 1 => Component::Odd,
                None => {
                    return Err(Error::InvalidArgument(
                        "even n requires --component B or --component P".to_string(),
                    ))
                }
            };
            let (label, poly) = match component {
                Component::B => ("B", b_equation(n)?),
                Component::P => ("P", p_equation(n)?),
                Component::Odd => ("odd", odd_equation(n)?),
            };
            match format {
                Format::Text => println!("{poly}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "command": "equation",
                        "n": n,
                        "component": label,
                        "coeffs": poly_json(&poly),
                    })
                ),
                Format::Csv => unreachable!(),
            }
            Ok(0)
        }
        Command::Spectrum { n, k, subspace, format } => {
            if format == Format::Csv {
                return Err(unsupported_format("spectrum", "csv"));
            }
            let name: SubspaceName = subspace.parse()?;
            let spec = subspace_spectrum(n, k, name)?;
            let (char_poly, min_poly) = char_and_min_poly(n, k, name)?;
            match format {
                Format::Json => {
                    let eigen: Vec<Value> = spec
                        .eigen_list
                        .iter()
                        .map(|(l, v)| json!([l, v.to_string()]))
                        .collect();
                    println!(
                        "{}",
                        json!({
                            "command": "spectrum",
                            "n": n,
                            "k": k,
                            "subspace": name.to_string(),
                            "dimension": spec.dimension,
                            "eigen_list": eigen,
                            "char_poly": poly_json(&char_poly),
                            "min_poly": poly_json(&min_poly),
                        })
                    );
                }
                Format::Text => {
                    println!("subspace {name}: dimension {}", spec.dimension);
                    for (l, v) in &spec.eigen_list {
                        println!("l={l} lambda={v}");
                    }
                    println!("char_poly: {char_poly}");
                    println!("min_poly: {min_poly}");
                }
                Format::Csv => unreachable!(),
            }
            Ok(0)
        }
        Command::Dims { n, gx, gy, symbolic: _, format } => {
            let table = dim_table(n)?;
            match (gx, gy) {
                (Some(x), Some(y)) => {
                    let gx_val = Rational::from_integer(BigInt::from(x));
                    let gy_val = Rational::from_integer(BigInt::from(y));
                    let rows: Vec<(String, String)> = table
                        .entries()
                        .iter()
                        .map(|((side, eig), expr)| {
                            (
                                DimTable::label(*side, eig),
                                expr.eval(&gx_val, &gy_val).to_string(),
                            )
                        })
                        .collect();
                    match format {
                        Format::Json => {
                            let mut obj = serde_json::Map::new();
                            obj.insert("command".to_string(), json!("dims"));
                            obj.insert("n".to_string(), json!(n));
                            obj.insert("gx".to_string(), json!(x.to_string()));
                            obj.insert("gy".to_string(), json!(y.to_string()));
                            for (label, value) in &rows {
                                obj.insert(label.clone(), json!(value));
                            }
                            println!("{}", Value::Object(obj));
                        }
                        Format::Text => {
                            for (label, value) in &rows {
                                println!("{label} = {value}");
                            }
                        }
                        Format::Csv => {
                            println!("label,value");
                            for (label, value) in &rows {
                                println!("{label},{value}");
                            }
                        }
                    }
                }
                _ => {
                    match format {
                        Format::Json => {
                            let mut obj = serde_json::Map::new();
                            obj.insert("command".to_string(), json!("dims"));
                            obj.insert("n".to_string(), json!(n));
                            for ((side, eig), expr) in table.entries() {
                                obj.insert(DimTable::label(*side, eig), affine_json(expr));
                            }
                            println!("{}", Value::Object(obj));
                        }
                        Format::Text => {
                            for ((side, eig), expr) in table.entries() {
                                println!("{} = {expr}", DimTable::label(*side, eig));
                            }
                        }
                        Format::Csv => {
                            println!("label,gx,gy,c");
                            for ((side, eig), expr) in table.entries() {
                                println!(
                                    "{},{},{},{}",
                                    DimTable::label(*side, eig),
                                    expr.gx,
                                    expr.gy,
                                    expr.c
                                );
                            }
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Covering { n, branches, genus_y, seed } => {
            let data = random_simple_monodromy(n, branches, genus_y, seed)?;
            let handles: Vec<Value> = data.handles.iter().map(signed_perm_json).collect();
            let branch_list: Vec<Value> = data.branches.iter().map(signed_perm_json).collect();
            println!(
                "{}",
                json!({
                    "n": data.n,
                    "genus_Y": data.genus_y,
                    "handles": handles,
                    "branches": branch_list,
                })
            );
            Ok(0)
        }
        Command::Tridiag { n, format } => {
            if format == Format::Csv {
                return Err(unsupported_format("tridiag", "csv"));
            }
            let poly = cnplus(n)?;
            match format {
                Format::Text => println!("{poly}"),
                Format::Json => println!(
                    "{}",
                    json!({
                        "command": "tridiag",
                        "n": n,
                        "coeffs": poly_json(&poly),
                    })
                ),
                Format::Csv => unreachable!(),
            }
            Ok(0)
        }
        Command::Verify { n_from, n_to, suite, format } => {
            if n_from > n_to {
                return Err(Error::InvalidArgument(format!(
                    "empty range: --n-from {n_from} exceeds --n-to {n_to}"
                )));
            }
            let suites: Vec<Box<dyn Suite>> = match suite {
                SuiteArg::All => registry(),
                other => vec![suite_by_name(other.as_str())
                    .expect("registry covers every suite flag value")],
            };
            let mut checks = Vec::new();
            for s in &suites {
                for n in n_from..=n_to {
                    checks.extend(s.run(n));
                }
            }
            let report = VerifyReport::new(suite.as_str(), n_from, n_to, checks);
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Csv => print!("{}", report.to_csv()),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(if report.all_pass() { 0 } else { 1 })
        }
    }
}
