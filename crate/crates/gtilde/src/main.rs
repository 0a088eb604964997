//! Thin command-line front end; all mathematics lives in the library.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gtilde::grassmann::{
    basis_in_degree, betti_table, claimed_gb, f_poly, g_poly, verify_reduced_gb, wbar, CohRing,
    TowerConfig,
};
use gtilde::groebner::Budget;
use gtilde::report::{run_suite, Suite};
use gtilde::steenrod::sq_on_coh;
use gtilde::Error;

/// Generators, Groebner bases and Steenrod squares for the mod-2 cohomology
/// of oriented Grassmannians of 3-planes in 2^t dimensions.
#[derive(Parser)]
#[command(name = "gtilde", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one polynomial from the generator families
    Poly {
        /// Dual-class generator by weighted degree (up to 3*2^16)
        #[arg(long, value_name = "R")]
        g: Option<u64>,
        /// Basis member: tower exponent and index
        #[arg(long, num_args = 2, value_names = ["T", "I"])]
        f: Option<Vec<u32>>,
        /// Dual Stiefel-Whitney class: degree (<= 512) and rank (<= 8)
        #[arg(long, num_args = 2, value_names = ["R", "K"])]
        wbar: Option<Vec<u64>>,
    },
    /// Print the reduced Groebner basis claimed for a tower
    Gb {
        /// Tower exponent t (the manifold sits in 2^t dimensions)
        #[arg(long)]
        t: u32,
        /// Recompute the basis from the ideal generators and compare
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate the additive basis of the cohomology
    Basis {
        #[arg(long)]
        t: u32,
        /// Restrict to one cohomological degree
        #[arg(long)]
        degree: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Print the dimension of every graded piece
    Betti {
        #[arg(long)]
        t: u32,
        /// Also check the Poincare-duality symmetry of the table
        #[arg(long)]
        symmetry: bool,
        #[arg(long)]
        json: bool,
    },
    /// Apply a Steenrod square to a class and reduce to normal form
    Sq {
        /// Which square: 1 or 2
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
        op: u32,
        #[arg(long)]
        t: u32,
        /// The class, e.g. "w2^3 + a*w3"
        #[arg(long)]
        input: String,
    },
    /// Run verification suites and report per-check outcomes
    Verify {
        /// all, gb, spoly, bounds, lemma or a2
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest tower exponent (for the lemma suite: largest power index)
        #[arg(long)]
        t_max: Option<u32>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = match Budget::from_env() {
        Ok(budget) => budget,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command, budget) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if matches!(e, Error::Indeterminate(_)) {
                println!("indeterminate");
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::InvalidArgument(_)
        | Error::InvalidTower { .. }
        | Error::GeneratorIndex { .. }
        | Error::EmptyComposition => 2,
        Error::BudgetExceeded { .. } => 3,
        Error::Indeterminate(_) => 4,
        _ => 1,
    }
}

fn run(command: Command, budget: Budget) -> Result<(), Error> {
    match command {
        Command::Poly { g, f, wbar } => cmd_poly(g, f, wbar),
        Command::Gb { t, verify, json } => cmd_gb(t, verify, json, budget),
        Command::Basis { t, degree, json } => cmd_basis(t, degree, json),
        Command::Betti { t, symmetry, json } => cmd_betti(t, symmetry, json),
        Command::Sq { op, t, input } => cmd_sq(op, t, &input),
        Command::Verify { suite, t_max, json } => cmd_verify(&suite, t_max, json, budget),
    }
}

fn cmd_poly(g: Option<u64>, f: Option<Vec<u32>>, w: Option<Vec<u64>>) -> Result<(), Error> {
    let chosen = [g.is_some(), f.is_some(), w.is_some()]
        .iter()
        .filter(|&&on| on)
        .count();
    if chosen != 1 {
        return Err(Error::InvalidArgument(
            "pass exactly one of --g, --f, --wbar".into(),
        ));
    }
    if let Some(r) = g {
        if r > 3 << 16 {
            return Err(Error::InvalidArgument(format!(
                "generator degree {r} is out of the supported range (<= {})",
                3 << 16
            )));
        }
        println!("{}", g_poly(r));
    } else if let Some(args) = f {
        let cfg = TowerConfig::new(args[0])?;
        println!("{}", f_poly(cfg, args[1])?);
    } else if let Some(args) = w {
        let rank = usize::try_from(args[1]).expect("flag fits");
        println!("{}", wbar(args[0], rank)?);
    }
    Ok(())
}

fn cmd_gb(t: u32, verify: bool, json: bool, budget: Budget) -> Result<(), Error> {
    let cfg = TowerConfig::new(t)?;
    if verify {
        verify_reduced_gb(cfg, budget)?;
    }
    let basis = claimed_gb(cfg);
    if json {
        let polys: Vec<String> = basis.polys().iter().map(|p| p.to_string()).collect();
        let mut value = serde_json::json!({ "t": t, "basis": polys });
        if verify {
            value["verified"] = serde_json::json!(true);
        }
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        for p in basis.polys() {
            println!("{p}");
        }
        if verify {
            println!("verify: pass");
        }
    }
    Ok(())
}

fn cmd_basis(t: u32, degree: Option<u64>, json: bool) -> Result<(), Error> {
    let cfg = TowerConfig::new(t)?;
    let top = cfg.manifold_dim();
    if degree.is_some_and(|d| d > top) {
        eprintln!(
            "warning: degree {} exceeds the manifold dimension {top}; \
             every class there is zero",
            degree.expect("checked")
        );
    }
    let range = match degree {
        Some(d) => d..=d,
        None => 0..=top,
    };
    let degrees: BTreeMap<u64, Vec<String>> = range
        .map(|d| {
            let names = basis_in_degree(cfg, d)
                .iter()
                .map(|m| m.to_string())
                .collect();
            (d, names)
        })
        .collect();
    if json {
        let value = serde_json::json!({ "t": t, "degrees": degrees });
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        let flat: Vec<String> = degrees.into_values().flatten().collect();
        println!("{}", flat.join(", "));
    }
    Ok(())
}

fn cmd_betti(t: u32, symmetry: bool, json: bool) -> Result<(), Error> {
    let cfg = TowerConfig::new(t)?;
    let table = betti_table(cfg);
    if json {
        let value = serde_json::json!({
            "t": t,
            "n": cfg.n(),
            "dimManifold": cfg.manifold_dim(),
            "totalDim": table.total(),
            "betti": table.dims(),
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        for (degree, dim) in table.dims().iter().enumerate() {
            println!("{degree}: {dim}");
        }
        println!("total: {}", table.total());
        if symmetry {
            println!(
                "symmetry: {}",
                if table.is_symmetric() { "pass" } else { "fail" }
            );
        }
    }
    if symmetry && !table.is_symmetric() {
        return Err(Error::Verification {
            check: "betti-symmetry".into(),
            witness: format!("t={t}: dimensions are not palindromic"),
        });
    }
    Ok(())
}

fn cmd_sq(op: u32, t: u32, input: &str) -> Result<(), Error> {
    let cfg = TowerConfig::new(t)?;
    let ring = CohRing::new(cfg);
    let x = ring.parse(input)?;
    let y = sq_on_coh(&ring, op, &x)?;
    println!("{y}");
    Ok(())
}

fn cmd_verify(suite: &str, t_max: Option<u32>, json: bool, budget: Budget) -> Result<(), Error> {
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite, t_max, budget)?;
    if json {
        println!("{}", report.to_json());
    } else {
        println!("{report}");
    }
    let millis: u128 = report.checks.iter().map(|c| c.millis).sum();
    eprintln!("{} checks in {millis} ms", report.checks.len());
    if !report.passed() {
        return Err(Error::Verification {
            check: "suite".into(),
            witness: format!("{} failed", report.suite),
        });
    }
    Ok(())
}
