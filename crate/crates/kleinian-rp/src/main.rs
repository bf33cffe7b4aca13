//! Command-line front end.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use kleinian_rp::census::{finite_volume_census, CensusFilter};
use kleinian_rp::expr;
use kleinian_rp::orbifold::{ambient_space, gram_det, gram_is_hyperbolic};
use kleinian_rp::presentation::build;
use kleinian_rp::realize::realize;
use kleinian_rp::table::{classify, enumerate_instances, two_elliptic_discreteness, ROW_COUNT};
use kleinian_rp::trace::{beta_elliptic, reduce_to_primitive, Parameters};
use kleinian_rp::verify::verify_relators;
use kleinian_rp::{ClassificationResult, Config, Schema};

const EXIT_USAGE: u8 = 64;
const EXIT_DOMAIN: u8 = 65;

#[derive(Parser)]
#[command(
    name = "kleinian-rp",
    about = "Discreteness, presentations, matrix realizations, and orbifold data \
             for two-generator groups with real trace parameters",
    version
)]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct GlobalOpts {
    /// Relative tolerance for matching reals to table formulas.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tolerance: f64,
    /// Tolerance for relator matrices against ±identity.
    #[arg(long, global = true, default_value_t = 1e-8)]
    relator_tolerance: f64,
    /// Integer search bound for row inversion.
    #[arg(long, global = true, default_value_t = 200)]
    bound: u32,
    /// Enumeration bound for infinite census families.
    #[arg(long, global = true, default_value_t = 50)]
    census_bound: u32,
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

impl GlobalOpts {
    fn config(&self) -> Result<Config, String> {
        if !(self.tolerance > 0.0 && self.relator_tolerance > 0.0) {
            return Err("tolerances must be positive".into());
        }
        if self.bound < 3 || self.census_bound < 3 {
            return Err("bounds must be at least 3".into());
        }
        Ok(Config {
            tol: self.tolerance,
            relator_tol: self.relator_tolerance,
            int_bound: self.bound,
            census_bound: self.census_bound,
            ..Config::default()
        })
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a parameter triple (β, β′, γ) against the family table.
    ///
    /// Values may be expressions over +,-,*,/,^, sin, cos, sqrt, pi, sqrt5.
    /// Exit code: 0 discrete, 1 not discrete, 2 not in class D, 3 unresolved.
    Classify {
        beta: String,
        beta_prime: String,
        gamma: String,
    },
    /// Print an explicit SL(2,C) matrix pair with the given parameters.
    Realize {
        beta: String,
        beta_prime: String,
        gamma: String,
    },
    /// Classify, realize, and verify the relators of every match.
    Verify {
        beta: String,
        beta_prime: String,
        gamma: String,
    },
    /// Discreteness for two primitive elliptic generators of orders n, m.
    #[command(name = "two-elliptic")]
    TwoElliptic {
        n: u32,
        m: u32,
        /// γ value or expression; required unless --gamma-from-clause3.
        gamma: Option<String>,
        /// Use γ = −(β+2)², the equal-order square-of-primitive clause.
        #[arg(long)]
        gamma_from_clause3: bool,
    },
    /// List the finite-volume census.
    Census {
        #[arg(long, conflicts_with = "cusped")]
        compact: bool,
        #[arg(long)]
        cusped: bool,
        /// Restrict to one schema (GT, PH, H, P, Tet, Tet6, GTet1, GTet2, S2, S3, R).
        #[arg(long)]
        schema: Option<String>,
    },
    /// Gram-matrix determinant and hyperbolicity for the R[n,m;q] orbifold.
    Gram { n: u32, m: u32, q: u32 },
    /// Rewrite a non-primitive elliptic (order n, q turns) as a primitive
    /// power, rescaling γ.
    Reduce { n: u32, q: u32, gamma: String },
    /// Enumerate admissible table-row instances with small integer slots.
    #[command(name = "enumerate-families")]
    EnumerateFamilies {
        /// Largest integer slot / angle denominator.
        #[arg(long, default_value_t = 8)]
        max_int: u32,
        /// Restrict to one table row (1..=24).
        #[arg(long)]
        row: Option<u8>,
        /// Include presentations in the output.
        #[arg(long)]
        presentations: bool,
    },
}

fn parse_real(src: &str) -> Result<f64, String> {
    expr::eval(src).map_err(|e| format!("cannot parse {src:?}: {e}"))
}

fn classification_json(res: &ClassificationResult) -> serde_json::Value {
    let mut v = serde_json::to_value(res).expect("classification serializes");
    if let ClassificationResult::DiscreteInD { matches } = res {
        let names: Vec<String> = matches.iter().map(|m| m.group_name()).collect();
        v["groups"] = json!(names);
    }
    v["exit_code"] = json!(res.code());
    v
}

fn print_classification(res: &ClassificationResult, as_json: bool) {
    if as_json {
        println!("{}", classification_json(res));
    } else {
        print!("{res}");
        if !matches!(res, ClassificationResult::DiscreteInD { .. }) {
            println!();
        }
    }
}

fn run() -> Result<u8, (u8, String)> {
    let cli = Cli::try_parse().map_err(|e| {
        // clap renders its own usage text
        (EXIT_USAGE, e.to_string())
    })?;
    let usage = |msg: String| (EXIT_USAGE, msg);
    let domain = |msg: String| (EXIT_DOMAIN, msg);
    let cfg = cli.opts.config().map_err(usage)?;
    let as_json = cli.opts.json;

    match cli.cmd {
        Cmd::Classify {
            beta,
            beta_prime,
            gamma,
        } => {
            let p = Parameters::new(
                parse_real(&beta).map_err(usage)?,
                parse_real(&beta_prime).map_err(usage)?,
                parse_real(&gamma).map_err(usage)?,
            );
            let res = classify(p, &cfg);
            print_classification(&res, as_json);
            Ok(res.code() as u8)
        }
        Cmd::Realize {
            beta,
            beta_prime,
            gamma,
        } => {
            let p = Parameters::new(
                parse_real(&beta).map_err(usage)?,
                parse_real(&beta_prime).map_err(usage)?,
                parse_real(&gamma).map_err(usage)?,
            );
            let pair = realize(p, &cfg);
            let measured = pair.measured_params();
            if as_json {
                println!(
                    "{}",
                    json!({
                        "f": pair.f,
                        "g": pair.g,
                        "params": p,
                        "measured": measured,
                        "reducible": pair.is_reducible(&cfg),
                    })
                );
            } else {
                println!("F = {}", pair.f);
                println!("G = {}", pair.g);
                println!("measured: {measured}");
                if pair.is_reducible(&cfg) {
                    println!("warning: γ ≈ 0, the pair is reducible");
                }
            }
            Ok(0)
        }
        Cmd::Verify {
            beta,
            beta_prime,
            gamma,
        } => {
            let p = Parameters::new(
                parse_real(&beta).map_err(usage)?,
                parse_real(&beta_prime).map_err(usage)?,
                parse_real(&gamma).map_err(usage)?,
            );
            let res = classify(p, &cfg);
            let matches = res.matches();
            if matches.is_empty() {
                print_classification(&res, as_json);
                return Ok(res.code() as u8);
            }
            let mut all_pass = true;
            let mut reports = Vec::new();
            for m in matches {
                let report = verify_relators(m, &cfg).map_err(|e| domain(e.to_string()))?;
                all_pass &= report.all_pass;
                reports.push(report);
            }
            if as_json {
                println!("{}", json!({ "verdict": "discrete", "reports": reports }));
            } else {
                for r in &reports {
                    let status = if r.all_pass { "ok" } else { "FAILED" };
                    let partial = if r.partial {
                        " (partial: generator orders only)"
                    } else {
                        ""
                    };
                    println!(
                        "{}: {} relator checks, max deviation {:.3e} {}{}",
                        r.group,
                        r.checks.len(),
                        r.max_identity_deviation,
                        status,
                        partial
                    );
                    for c in &r.checks {
                        println!(
                            "  {:<28} {:>12.3e}  {}",
                            c.name,
                            c.deviation,
                            if c.pass { "ok" } else { "FAILED" }
                        );
                    }
                }
            }
            Ok(if all_pass { 0 } else { 1 })
        }
        Cmd::TwoElliptic {
            n,
            m,
            gamma,
            gamma_from_clause3,
        } => {
            let gamma = if gamma_from_clause3 {
                let b = beta_elliptic(n);
                -(b + 2.0) * (b + 2.0)
            } else {
                let src = gamma.ok_or_else(|| {
                    usage("two-elliptic needs a γ value or --gamma-from-clause3".into())
                })?;
                parse_real(&src).map_err(usage)?
            };
            let res = two_elliptic_discreteness(n, m, gamma, &cfg);
            print_classification(&res, as_json);
            Ok(res.code() as u8)
        }
        Cmd::Census {
            compact,
            cusped,
            schema,
        } => {
            let filter = match (compact, cusped) {
                (true, _) => CensusFilter::Compact,
                (_, true) => CensusFilter::Cusped,
                _ => CensusFilter::All,
            };
            let schema = match schema {
                Some(s) => Some(s.parse::<Schema>().map_err(usage)?),
                None => None,
            };
            for entry in finite_volume_census(filter, schema, cfg.census_bound) {
                if as_json {
                    println!(
                        "{}",
                        serde_json::to_string(&entry).expect("census serializes")
                    );
                } else {
                    println!(
                        "{:<24} {:<8} in {}",
                        entry.group_name(),
                        if entry.compact { "compact" } else { "cusped" },
                        ambient_space(entry.schema)
                    );
                }
            }
            Ok(0)
        }
        Cmd::Gram { n, m, q } => {
            let det = gram_det(n, m, q).map_err(|e| domain(e.to_string()))?;
            let hyperbolic = gram_is_hyperbolic(n, m, q).unwrap();
            if as_json {
                println!(
                    "{}",
                    json!({ "n": n, "m": m, "q": q, "det": det, "hyperbolic": hyperbolic })
                );
            } else {
                println!("det = {det}");
                println!("hyperbolic: {hyperbolic}");
            }
            Ok(0)
        }
        Cmd::Reduce { n, q, gamma } => {
            let gamma = parse_real(&gamma).map_err(usage)?;
            let (r, gamma_prim) =
                reduce_to_primitive(n, q, gamma).map_err(|e| domain(e.to_string()))?;
            let beta_prim = beta_elliptic(n);
            if as_json {
                println!(
                    "{}",
                    json!({ "r": r, "gamma_prim": gamma_prim, "beta_prim": beta_prim })
                );
            } else {
                println!("r = {r}");
                println!("β(f^r) = {beta_prim}");
                println!("γ(f^r, g) = {gamma_prim}");
            }
            Ok(0)
        }
        Cmd::EnumerateFamilies {
            max_int,
            row,
            presentations,
        } => {
            let rows: Vec<u8> = match row {
                Some(r) if (1..=ROW_COUNT).contains(&r) => vec![r],
                Some(r) => return Err(domain(format!("rows are 1..={ROW_COUNT}, got {r}"))),
                None => (1..=ROW_COUNT).collect(),
            };
            for r in rows {
                for inst in
                    enumerate_instances(r, max_int, &[], &cfg).map_err(|e| domain(e.to_string()))?
                {
                    if as_json {
                        let mut v = serde_json::to_value(&inst).expect("instance serializes");
                        v["group"] = json!(inst.group_name());
                        if presentations {
                            let pres = build(inst.id.schema, &inst.exponents)
                                .map_err(|e| domain(e.to_string()))?;
                            v["presentation"] = json!(pres.text());
                        }
                        println!("{v}");
                    } else {
                        print!("{inst}  {}", inst.params);
                        if presentations {
                            let pres = build(inst.id.schema, &inst.exponents)
                                .map_err(|e| domain(e.to_string()))?;
                            print!("  {}", pres.text());
                        }
                        println!();
                    }
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err((code, msg)) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
    }
}
