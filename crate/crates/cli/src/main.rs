use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use osc_core::combinat::{complex_count, predicted_real_counts, sign_imbalance, SchubertProblemSpec, SkewShape};
use osc_core::exper::{check_structures, read_log, run_experiment, tabulate, ExecMode, ExperimentConfig, TableFormat};
use osc_core::groebner::{solution_wronskian_orders, solve_instance_detailed, MonomialOrder, SolveOptions};
use osc_core::hookfam::{spot_check_det_identity, verify_det_identity_with};
use osc_core::schubert::{OsculatingInstance, OsculationPoint};
use osc_core::Error;

mod selftest;

#[derive(Parser)]
#[command(name = "oscsolve", version, about = "Real solutions of osculating Schubert problems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Complex count, sign-imbalance bound and factorization counts.
    Predict {
        /// e.g. "GR(4,8): 3.3.3, 1^7"
        problem: String,
    },
    /// Solve one instance from explicit osculation points.
    Solve {
        problem: String,
        /// Comma-separated points in condition order: inf, 0, 3/2, 1+2*i, ...
        #[arg(long)]
        points: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also print the eliminant and the Wronskian orders.
        #[arg(long)]
        verbose: bool,
        /// Compute a lex basis directly instead of going through grevlex.
        #[arg(long)]
        lex: bool,
    },
    /// Run or resume an experiment described by a JSON config.
    Run {
        config: PathBuf,
        /// Override the record log location.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        sequential: bool,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Render the frequency table of a record log.
    Table {
        log: PathBuf,
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Check a record log against the structural laws; exit 3 on a violation.
    Check {
        log: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Verify the determinant identity for the hook family.
    VerifyIdentity {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        /// Largest n expanded symbolically; larger sizes are spot-checked.
        #[arg(long, default_value_t = 9)]
        max_symbolic_n: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Quick invariant suites.
    Selftest,
}

enum Failure {
    Usage(String),
    Resource(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Resource(_) | Error::Degenerate(_) => Failure::Resource(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CliResult = Result<(), Failure>;

fn parse_problem(text: &str) -> Result<SchubertProblemSpec, Failure> {
    text.parse().map_err(Failure::from)
}

fn predict(problem: &str) -> CliResult {
    let p = parse_problem(problem)?;
    println!("{p}");
    println!("complex solutions: {}", complex_count(&p)?);
    let (k, n) = (p.k(), p.n());
    let one: osc_core::combinat::Partition = "1".parse()?;
    let big: Vec<_> = p.conditions().iter().filter(|(c, _)| *c != one).collect();
    if big.len() <= 2 && big.iter().all(|(_, m)| *m == 1) {
        let lambda = big.first().map(|(c, _)| c.clone()).unwrap_or_default();
        let mu = big.get(1).map(|(c, _)| c.clone()).unwrap_or_default();
        let shape = SkewShape::new(lambda.complement(k, n)?, mu.clone())
            .or_else(|_| SkewShape::new(mu.complement(k, n)?, lambda))?;
        match sign_imbalance(&shape) {
            Ok(s) => println!("sign-imbalance lower bound: {s}"),
            Err(Error::Resource(m)) => println!("sign-imbalance lower bound: not computed ({m})"),
            Err(e) => return Err(e.into()),
        }
    }
    if k >= 2 && n >= k + 2 && SchubertProblemSpec::hook_family(k, n).is_ok_and(|h| h == p) {
        println!("factorization counts by real points among the simple conditions:");
        for r_box in (0..n).rev().filter(|r| (n - 1 - r) % 2 == 0) {
            let set = predicted_real_counts(k, n, r_box)?;
            let items: Vec<String> = set.iter().map(u64::to_string).collect();
            println!("  {r_box:>3}: {{{}}}", items.join(", "));
        }
    }
    Ok(())
}

fn solve(problem: &str, points: &str, seed: u64, verbose: bool, lex: bool) -> CliResult {
    let p = parse_problem(problem)?;
    let pts = points
        .split(',')
        .map(|s| s.trim().parse::<OsculationPoint>())
        .collect::<Result<Vec<_>, _>>()?;
    let inst = OsculatingInstance::new(p.clone(), pts)?;
    let expected = complex_count(&p)?;
    let order = if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex };
    let sol = solve_instance_detailed(&inst, expected, &SolveOptions { seed, order, ..SolveOptions::default() })?;
    let r = &sol.report;
    println!("{p}");
    println!("osculation type: {}", inst.osculation_type());
    println!("chart: {}", r.chart);
    println!("complex: {} (expected {expected}, with multiplicity {})", r.num_complex, r.multiplicity_count);
    println!("real: {}", r.num_real);
    println!("transversal: {}", r.transversal);
    if !r.randomization.is_empty() {
        let terms: Vec<String> = r.randomization.iter().map(|(v, c)| format!("{c}*{v}")).collect();
        println!("randomization: {} += {}", r.variables.last().cloned().unwrap_or_default(), terms.join(" + "));
    }
    if verbose {
        let var = r.variables.last().cloned().unwrap_or_else(|| "y".into());
        println!("eliminant: {}", r.eliminant.to_text(&var));
        if r.transversal {
            for w in solution_wronskian_orders(&sol)? {
                let verdict = if w.exact { "exactly" } else { "NOT exactly" };
                println!("wronskian at {} (condition {}): vanishes to order {verdict} {}", w.point, w.condition, w.expected);
            }
        }
    }
    Ok(())
}

fn run(config: &PathBuf, output: Option<PathBuf>, sequential: bool, format: &str) -> CliResult {
    let text = std::fs::read_to_string(config).map_err(|e| Failure::Usage(format!("{}: {e}", config.display())))?;
    let mut cfg = ExperimentConfig::from_json(&text)?;
    if let Some(o) = output {
        cfg.output_path = o;
    }
    if sequential {
        cfg.mode = ExecMode::Sequential;
    }
    let format: TableFormat = format.parse()?;
    let report = run_experiment(&cfg)?;
    eprintln!(
        "{} new records, {} discarded samples, {} exhausted slots; log {}",
        report.new_records,
        report.discarded,
        report.exhausted.len(),
        cfg.output_path.display()
    );
    print!("{}", tabulate(&report.records)?.render(format)?);
    Ok(())
}

fn load_log(log: &Path) -> Result<Vec<osc_core::exper::InstanceRecord>, Failure> {
    if !log.is_file() {
        return Err(Failure::Usage(format!("{}: no such log", log.display())));
    }
    Ok(read_log(log)?)
}

fn table(log: &Path, format: &str) -> CliResult {
    let format: TableFormat = format.parse()?;
    print!("{}", tabulate(&load_log(log)?)?.render(format)?);
    Ok(())
}

fn check(log: &Path, json: bool) -> CliResult {
    let records = load_log(log)?;
    let Some(first) = records.first() else {
        return Err(Failure::Usage(format!("{} holds no records", log.display())));
    };
    let problem = parse_problem(&first.problem)?;
    let bad: Vec<String> = records
        .iter()
        .filter(|r| !r.is_consistent())
        .map(|r| format!("{:?}#{}", r.osculation_type, r.instance_index))
        .collect();
    let report = check_structures(&tabulate(&records)?, &problem)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report).map_err(|e| Failure::Usage(e.to_string()))?);
    } else {
        print!("{report}");
    }
    if !bad.is_empty() {
        return Err(Failure::Violation(format!("inconsistent records: {}", bad.join(", "))));
    }
    match report.violations() {
        0 => Ok(()),
        v => Err(Failure::Violation(format!("{v} structural law(s) violated"))),
    }
}

fn verify_identity(k: usize, n: usize, max_n: usize, trials: usize) -> CliResult {
    if n <= max_n {
        let ok = verify_det_identity_with(k, n, None, max_n)?;
        println!("symbolic identity for (k,n) = ({k},{n}): {}", if ok { "holds" } else { "FAILS" });
        let control = verify_det_identity_with(k, n, Some(1), max_n)?;
        println!("perturbed c_1 control: {}", if control { "unexpectedly holds" } else { "fails as it should" });
        if ok && !control {
            Ok(())
        } else {
            Err(Failure::Violation("determinant identity check failed".into()))
        }
    } else {
        let ok = spot_check_det_identity(k, n, trials, 0)?;
        println!("spot check for (k,n) = ({k},{n}) at {trials} random points: {}", if ok { "holds" } else { "FAILS" });
        if ok {
            Ok(())
        } else {
            Err(Failure::Violation("determinant identity spot check failed".into()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Predict { problem } => predict(problem),
        Command::Solve { problem, points, seed, verbose, lex } => solve(problem, points, *seed, *verbose, *lex),
        Command::Run { config, output, sequential, format } => run(config, output.clone(), *sequential, format),
        Command::Table { log, format } => table(log, format),
        Command::Check { log, json } => check(log, *json),
        Command::VerifyIdentity { k, n, max_symbolic_n, trials } => verify_identity(*k, *n, *max_symbolic_n, *trials),
        Command::Selftest => selftest::run(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Resource(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Violation(m)) => {
            eprintln!("violation: {m}");
            ExitCode::from(3)
        }
    }
}
