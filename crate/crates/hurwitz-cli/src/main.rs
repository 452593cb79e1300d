//! `hurwitz` — exact genus computation for algebraic curves from the
//! command line.
//!
//! Exit codes: 0 on success, 1 on a mathematical/domain error
//! (degeneracy, reducibility, unsupported case), 2 on a parse or usage
//! error. JSON goes to stdout, diagnostics to stderr.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use hurwitz_core::error::{Error, Result};
use hurwitz_core::parse;
use hurwitz_core::plane_curve::{genus_simple_branching, interior_lattice_count, newton_polygon};
use hurwitz_core::report::*;
use hurwitz_core::riemann_hurwitz::{kowalewski_genus, rh_genus};
use hurwitz_core::riemann_roch::{lspace_basis_p1, riemann_roch_verify_p1};
use hurwitz_core::superelliptic::{genus_superelliptic, ramification_profile, SuperCurve};
use hurwitz_core::CoveringData;

/// Exact-arithmetic genus computations on algebraic curves.
///
/// Polynomial syntax: `+ - * / ^` with nonnegative integer exponents,
/// variables z and w, rational constants as `p/q`, and implicit
/// multiplication between a literal or group and a variable (`2z`,
/// `(z+1)w`). In Newton polygon output the first lattice coordinate is
/// the w-exponent. Divisors are written like `2*(z) + 1*(z^2+1) - 3*inf`.
#[derive(Parser)]
#[command(name = "hurwitz", version, about)]
struct Cli {
    /// Emit a machine-readable JSON report on stdout
    #[arg(long, global = true, conflicts_with = "quiet")]
    json: bool,

    /// Print only the principal value of the result
    #[arg(long, global = true)]
    quiet: bool,

    /// Process whole command lines from a file, one per line, output in
    /// input order; stops at the first failing line
    #[arg(long, value_name = "FILE")]
    batch: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Genus of a curve, by various methods
    #[command(subcommand)]
    Genus(GenusCommand),

    /// Riemann-Hurwitz formula g(X) = m(g(Y)-1) + 1 + V/2 on covering data
    #[command(group(
        ArgGroup::new("index_input").required(true).args(["ramification", "total_v"])
    ))]
    Rh {
        /// Sheet count m of the covering
        #[arg(long)]
        sheets: u32,
        /// Genus g(Y) of the base
        #[arg(long = "base-genus")]
        base_genus: u32,
        /// Comma-separated positive ramification indices
        #[arg(long, value_delimiter = ',')]
        ramification: Option<Vec<i64>>,
        /// Total ramification V directly
        #[arg(long = "total-v")]
        total_v: Option<i64>,
    },

    /// Genus of the Kowalewski curve for nonzero parameters a, b, c
    Kowalewski {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
    },

    /// Divisor arithmetic on the projective line
    #[command(subcommand)]
    Divisor(DivisorCommand),

    /// Explicit basis and dimension of L(D) on the line
    Lspace {
        /// Divisor expression, e.g. "2*(z) + 1*(z^2+1) - 3*inf"
        divisor: String,
    },

    /// Verify dim L(D) - dim L(K-D) = deg D + 1 on the line
    RrCheck {
        /// Divisor expression
        divisor: String,
    },
}

#[derive(Subcommand)]
enum GenusCommand {
    /// Superelliptic curve given as "w^m = f(z)"
    Super { equation: String },
    /// Newton polygon interior-point count: an upper bound, not a genus
    Newton { poly: String },
    /// Simple-branching Riemann-Hurwitz via the squarefree w-discriminant;
    /// the ramification total at infinity is supplied by --v-inf
    Branching {
        poly: String,
        #[arg(long = "v-inf", default_value_t = 0)]
        v_inf: u32,
    },
}

#[derive(Subcommand)]
enum DivisorCommand {
    /// Parse and normalize a divisor expression; report degree and
    /// effectivity
    Eval { expr: String },
    /// Divisor of zeros and poles of a rational function of z
    Principal { fun: String },
}

/// One line of a batch file: a bare subcommand invocation.
#[derive(Parser)]
struct BatchLine {
    #[command(subcommand)]
    command: Command,
}

/// How the selected output mode renders one computation.
struct Rendered {
    json: String,
    text: String,
    quiet: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<()> {
    match (&cli.batch, &cli.command) {
        (Some(path), None) => run_batch(cli, path),
        (None, Some(command)) => {
            let rendered = execute(command)?;
            emit(cli, &rendered);
            Ok(())
        }
        _ => Err(Error::Parse {
            offset: 0,
            expected: "either a subcommand or --batch <FILE>".to_string(),
            found: "both or neither".to_string(),
        }),
    }
}

fn run_batch(cli: &Cli, path: &PathBuf) -> Result<()> {
    let contents = std::fs::read_to_string(path).map_err(|e| Error::Parse {
        offset: 0,
        expected: format!("a readable batch file at {}", path.display()),
        found: e.to_string(),
    })?;
    for (lineno, line) in contents.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let words = split_command_line(line).ok_or_else(|| Error::Parse {
            offset: 0,
            expected: format!("a closed quote on batch line {}", lineno + 1),
            found: "an unterminated quote".to_string(),
        })?;
        let mut argv = vec!["hurwitz".to_string()];
        argv.extend(words);
        let line_cli = BatchLine::try_parse_from(&argv).map_err(|e| Error::Parse {
            offset: 0,
            expected: format!("a valid command on batch line {}", lineno + 1),
            found: e.to_string(),
        })?;
        let rendered = execute(&line_cli.command)?;
        emit(cli, &rendered);
    }
    Ok(())
}

/// Minimal shell-like word splitting: whitespace-separated, double
/// quotes group. Returns None on an unterminated quote.
fn split_command_line(line: &str) -> Option<Vec<String>> {
    let mut words = Vec::new();
    let mut current = String::new();
    let mut in_quotes = false;
    let mut has_word = false;
    for c in line.chars() {
        match c {
            '"' => {
                in_quotes = !in_quotes;
                has_word = true;
            }
            c if c.is_whitespace() && !in_quotes => {
                if has_word {
                    words.push(std::mem::take(&mut current));
                    has_word = false;
                }
            }
            c => {
                current.push(c);
                has_word = true;
            }
        }
    }
    if in_quotes {
        return None;
    }
    if has_word {
        words.push(current);
    }
    Some(words)
}

fn emit(cli: &Cli, rendered: &Rendered) {
    if cli.json {
        println!("{}", rendered.json);
    } else if cli.quiet {
        println!("{}", rendered.quiet);
    } else {
        println!("{}", rendered.text);
    }
}

fn execute(command: &Command) -> Result<Rendered> {
    match command {
        Command::Genus(GenusCommand::Super { equation }) => genus_super(equation),
        Command::Genus(GenusCommand::Newton { poly }) => genus_newton(poly),
        Command::Genus(GenusCommand::Branching { poly, v_inf }) => genus_branching(poly, *v_inf),
        Command::Rh {
            sheets,
            base_genus,
            ramification,
            total_v,
        } => rh(*sheets, *base_genus, ramification.as_deref(), *total_v),
        Command::Kowalewski { a, b, c } => kowalewski(a, b, c),
        Command::Divisor(DivisorCommand::Eval { expr }) => divisor_eval(expr),
        Command::Divisor(DivisorCommand::Principal { fun }) => divisor_principal(fun),
        Command::Lspace { divisor } => lspace(divisor),
        Command::RrCheck { divisor } => rr_check(divisor),
    }
}

fn genus_super(equation: &str) -> Result<Rendered> {
    let (m, f) = parse::parse_curve_equation(equation)?;
    let curve = SuperCurve::new(m, f)?;
    let profile = ramification_profile(&curve)?;
    let genus = genus_superelliptic(&curve)?;
    let report = GenusReport::superelliptic(equation, genus, &profile);
    let mut text = format!(
        "input: {equation}\nmethod: superelliptic\ngenus: {genus}\nramification: V = {} over {} sheets",
        profile.total_index, profile.sheets
    );
    for e in &profile.entries {
        text.push_str(&format!(
            "\n  {}: weight {}, {} point(s) per root, index {}",
            e.locus, e.base_weight, e.points_per_root, e.index_per_point
        ));
    }
    Ok(Rendered {
        json: to_json(&report),
        text,
        quiet: genus.to_string(),
    })
}

fn genus_newton(poly: &str) -> Result<Rendered> {
    let f = parse::parse_bpoly(poly)?;
    let polygon = newton_polygon(&f)?;
    let bound = interior_lattice_count(&polygon)?;
    let report = GenusReport::newton_bound(poly, bound, polygon.hull.len());
    let text = format!(
        "input: {poly}\nmethod: newton-bound\nbound: {bound}\nwarning: {NEWTON_BOUND_WARNING}"
    );
    Ok(Rendered {
        json: to_json(&report),
        text,
        quiet: bound.to_string(),
    })
}

fn genus_branching(poly: &str, v_inf: u32) -> Result<Rendered> {
    let f = parse::parse_bpoly(poly)?;
    let result = genus_simple_branching(&f, v_inf)?;
    let report = GenusReport::simple_branching(poly, &result);
    let text = format!(
        "input: {poly}\nmethod: simple-branching\ngenus: {}\nsheets: {}\ndiscriminant degree: {} (squarefree)\nV = {} ({} at infinity)",
        result.genus, result.sheets, result.discriminant_degree, result.total_index, result.infinity_index
    );
    Ok(Rendered {
        json: to_json(&report),
        text,
        quiet: result.genus.to_string(),
    })
}

fn rh(
    sheets: u32,
    base_genus: u32,
    ramification: Option<&[i64]>,
    total_v: Option<i64>,
) -> Result<Rendered> {
    let data = match (ramification, total_v) {
        (Some(indices), None) => CoveringData::from_indices(sheets, base_genus, indices)?,
        (None, Some(v)) => CoveringData::from_total(sheets, base_genus, v)?,
        _ => unreachable!("clap enforces exactly one of the two"),
    };
    let genus = rh_genus(&data);
    let input = format!(
        "m={sheets}, g(Y)={base_genus}, V={}",
        data.total_index()
    );
    let report = GenusReport::riemann_hurwitz(&input, &data, genus);
    let text = format!(
        "input: {input}\nmethod: riemann-hurwitz\ngenus: {genus}"
    );
    Ok(Rendered {
        json: to_json(&report),
        text,
        quiet: genus.to_string(),
    })
}

fn kowalewski(a: &str, b: &str, c: &str) -> Result<Rendered> {
    let a = parse::parse_rat(a)?;
    let b = parse::parse_rat(b)?;
    let c = parse::parse_rat(c)?;
    let result = kowalewski_genus(&a, &b, &c)?;
    let input = format!(
        "a={}, b={}, c={}",
        hurwitz_core::rat::format_rat(&a),
        hurwitz_core::rat::format_rat(&b),
        hurwitz_core::rat::format_rat(&c)
    );
    let report = GenusReport::kowalewski(&input, &result);
    let text = format!(
        "input: {input}\nmethod: kowalewski\ngenus: {}\nquotient curve: u^2 = {} (genus {})\nbranch points: {} roots of {}",
        result.genus, result.quotient_rhs, result.base_genus, result.branch_count, result.branch_poly
    );
    Ok(Rendered {
        json: to_json(&report),
        text,
        quiet: result.genus.to_string(),
    })
}

fn divisor_eval(expr: &str) -> Result<Rendered> {
    let d = parse::parse_divisor(expr)?;
    let report = DivisorReport {
        schema: SCHEMA_VERSION,
        input: expr.to_string(),
        divisor: d.to_string(),
        degree: d.degree(),
        effective: d.is_effective(),
    };
    let text = format!(
        "input: {expr}\ndivisor: {}\ndegree: {}\neffective: {}",
        report.divisor, report.degree, report.effective
    );
    Ok(Rendered {
        json: to_json(&report),
        text,
        quiet: report.degree.to_string(),
    })
}

fn divisor_principal(fun: &str) -> Result<Rendered> {
    let f = parse::parse_ratfun(fun)?;
    let d = f.principal_divisor()?;
    let report = PrincipalDivisorReport {
        schema: SCHEMA_VERSION,
        input: fun.to_string(),
        divisor: d.to_string(),
        degree: d.degree(),
    };
    let text = format!(
        "input: {fun}\n(f) = {}\ndegree: {}",
        report.divisor, report.degree
    );
    Ok(Rendered {
        json: to_json(&report),
        text,
        quiet: report.divisor.clone(),
    })
}

fn lspace(divisor: &str) -> Result<Rendered> {
    let d = parse::parse_divisor(divisor)?;
    let basis = lspace_basis_p1(&d)?;
    let report = LSpaceReport {
        schema: SCHEMA_VERSION,
        input: divisor.to_string(),
        divisor: d.to_string(),
        degree: d.degree(),
        dimension: basis.dimension,
        basis: basis.basis.iter().map(|f| f.to_string()).collect(),
    };
    let text = format!(
        "input: {divisor}\ndivisor: {}\ndimension: {}\nbasis: [{}]",
        report.divisor,
        report.dimension,
        report.basis.join(", ")
    );
    Ok(Rendered {
        json: to_json(&report),
        text,
        quiet: report.dimension.to_string(),
    })
}

fn rr_check(divisor: &str) -> Result<Rendered> {
    let d = parse::parse_divisor(divisor)?;
    let check = riemann_roch_verify_p1(&d)?;
    let report = RiemannRochReport {
        schema: SCHEMA_VERSION,
        input: divisor.to_string(),
        divisor: d.to_string(),
        degree: check.divisor_degree,
        genus: 0,
        dim_l_d: check.dim_l_d,
        dim_l_k_minus_d: check.dim_l_k_minus_d,
        lhs: check.lhs,
        rhs: check.rhs,
        ok: check.lhs == check.rhs,
    };
    let text = format!(
        "input: {divisor}\ndivisor: {}\ndim L(D) = {}, dim L(K-D) = {}\nlhs: {}\nrhs: {}\nok: {}",
        report.divisor, report.dim_l_d, report.dim_l_k_minus_d, report.lhs, report.rhs, report.ok
    );
    Ok(Rendered {
        json: to_json(&report),
        text,
        quiet: if report.ok { "ok".into() } else { "FAIL".into() },
    })
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("reports serialize")
}
