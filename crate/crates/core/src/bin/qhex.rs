use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qhex::exact::{rational_fn_to_json, rf_eq, to_json, RationalFn};
use qhex::lgv::{reduce, tiling_gf};
use qhex::oracle::{family_count, family_gf, nth_family, RegionSpec, DEFAULT_CAP};
use qhex::paths::{gf_closed, gf_dp, PathSpec};
use qhex::render::{render_svg, SvgOptions};
use qhex::verify::{closed_gf, run_suite, Suite, VerifyConfig};
use qhex::{Error, LaurentPoly};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DISAGREE: u8 = 3;
const EXIT_CAP: u8 = 4;

/// Generating functions of weighted lozenge tilings of quartered hexagons
/// with dents.
#[derive(Parser, Debug)]
#[command(name = "qhex", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weighted paths from (A, B) to (C, D).
    Gf {
        #[arg(allow_hyphen_values = true)]
        a: i64,
        #[arg(allow_hyphen_values = true)]
        b: i64,
        #[arg(allow_hyphen_values = true)]
        c: i64,
        #[arg(allow_hyphen_values = true)]
        d: i64,
        #[arg(long, value_enum, default_value_t = Method::Dp)]
        method: Method,
    },
    /// Tiling generating function by enumerating path families.
    Family(RegionArgs),
    /// Tiling generating function as a determinant.
    Lgv(RegionArgs),
    /// Tiling generating function from the product formula.
    Closed(RegionArgs),
    /// Tiling generating function by the chosen route.
    Region {
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long, value_enum, default_value_t = Route::Lgv)]
        route: Route,
    },
    /// Run a verification suite (or `all`).
    Verify {
        suite: String,
        #[arg(long, default_value_t = 3)]
        max_m: usize,
        #[arg(long, default_value_t = 2)]
        max_k: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Draw a path family on its lozenge tiling as SVG.
    Render {
        #[command(flatten)]
        region: RegionSpecArgs,
        /// Index of the family in enumeration order.
        #[arg(long, default_value_t = 0)]
        family: u64,
        /// Draw the tiling without the path overlay.
        #[arg(long)]
        tiling: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Dp,
    Closed,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Route {
    Family,
    Lgv,
    Closed,
}

#[derive(Args, Debug)]
struct RegionSpecArgs {
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Comma-separated, strictly increasing.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    dents: Vec<i64>,
}

#[derive(Args, Debug)]
struct RegionArgs {
    #[command(flatten)]
    spec: RegionSpecArgs,
    /// Compute every applicable route and require agreement.
    #[arg(long)]
    all: bool,
    /// Also print a human-readable form.
    #[arg(long)]
    pretty: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::InexactDivision => EXIT_DISAGREE,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn cap() -> Result<u64, Failure> {
    match std::env::var("QHEX_CAP") {
        Ok(v) => {
            v.trim().parse().map_err(|_| fail(EXIT_USAGE, format!("QHEX_CAP must be a nonnegative integer, got {v:?}")))
        }
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn region(args: &RegionSpecArgs) -> Result<RegionSpec, Failure> {
    Ok(RegionSpec::new(args.m, args.k, args.dents.clone())?)
}

fn closed_route(r: &RegionSpec) -> Result<(RationalFn, LaurentPoly), Failure> {
    if !r.last_path_feasible() {
        return Err(fail(
            EXIT_USAGE,
            format!("product formula needs the last dent below {}; use the family or lgv route", r.m()),
        ));
    }
    let f = closed_gf(r);
    let poly = f.to_laurent().ok_or_else(|| fail(EXIT_DISAGREE, "product formula is not a Laurent polynomial"))?;
    Ok((f, poly))
}

fn compute(r: &RegionSpec, route: Route) -> Result<LaurentPoly, Failure> {
    match route {
        Route::Family => Ok(family_gf(r, cap()?)?),
        Route::Lgv => Ok(tiling_gf(r)),
        Route::Closed => Ok(closed_route(r)?.1),
    }
}

fn cmd_region(args: &RegionArgs, route: Route) -> Result<(), Failure> {
    let r = region(&args.spec)?;
    let value = compute(&r, route)?;
    if args.all {
        let mut routes = vec![Route::Family, Route::Lgv];
        if r.last_path_feasible() {
            routes.push(Route::Closed);
        }
        for other in routes.into_iter().filter(|&o| o != route) {
            let v = compute(&r, other)?;
            if v != value {
                return Err(fail(EXIT_DISAGREE, format!("routes {route:?} and {other:?} disagree: {value} vs {v}")));
            }
        }
    }
    println!("{}", to_json(&value));
    if args.pretty {
        if route == Route::Closed {
            let (p, _) = reduce(&r);
            let (_, poly) = closed_route(&r)?;
            let inner = poly_over(&poly, &p);
            println!("({p}) * ({inner})");
        } else {
            println!("{value}");
        }
    }
    Ok(())
}

// `value / prefactor`, exact by construction
fn poly_over(value: &LaurentPoly, p: &RationalFn) -> LaurentPoly {
    (value * p.den()).div_exact(p.num()).expect("prefactor divides the product formula")
}

fn cmd_gf(a: i64, b: i64, c: i64, d: i64, method: Method) -> Result<(), Failure> {
    let spec = PathSpec::new(a, b, c, d);
    let dp = gf_dp(&spec);
    match method {
        Method::Dp => println!("{}", to_json(&dp)),
        Method::Closed => {
            let closed = gf_closed(&spec)?;
            println!("{}", rational_fn_to_json(&closed));
            let agree = rf_eq(&closed, &RationalFn::from_poly(dp));
            println!("rf_eq(closed, dp) = {agree}");
            if !agree {
                return Err(fail(EXIT_DISAGREE, "closed form disagrees with the recursion"));
            }
        }
    }
    Ok(())
}

fn cmd_verify(suite: &str, cfg: VerifyConfig) -> Result<(), Failure> {
    let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse::<Suite>()?] };
    let mut failed = false;
    let mut capped = false;
    for s in suites {
        let report = run_suite(s, &cfg);
        println!("{report}");
        failed |= report.failed > 0;
        capped |= report.capped > 0;
    }
    if failed {
        Err(fail(EXIT_VERIFY, "verification failed"))
    } else if capped {
        Err(fail(EXIT_CAP, "some cases exceeded the enumeration cap (raise QHEX_CAP)"))
    } else {
        Ok(())
    }
}

fn cmd_render(args: &RegionSpecArgs, index: u64, tiling: bool, out: &PathBuf) -> Result<(), Failure> {
    let r = region(args)?;
    let cap = cap()?;
    let family = nth_family(&r, index, cap)?.ok_or_else(|| {
        let count = family_count(&r, cap).map_or_else(|_| "?".to_string(), |n| n.to_string());
        fail(EXIT_USAGE, format!("family index {index} out of range (region has {count} families)"))
    })?;
    let svg = render_svg(&r, &family, SvgOptions { tiling_only: tiling });
    std::fs::write(out, svg).map_err(|e| fail(EXIT_USAGE, format!("cannot write {}: {e}", out.display())))?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gf { a, b, c, d, method } => cmd_gf(a, b, c, d, method),
        Command::Family(args) => cmd_region(&args, Route::Family),
        Command::Lgv(args) => cmd_region(&args, Route::Lgv),
        Command::Closed(args) => cmd_region(&args, Route::Closed),
        Command::Region { region, route } => cmd_region(&region, route),
        Command::Verify { suite, max_m, max_k, seed, samples } => {
            cmd_verify(&suite, VerifyConfig { max_m, max_k, seed, cap: cap()?, samples })
        }
        Command::Render { region, family, tiling, out } => cmd_render(&region, family, tiling, &out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("qhex: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
