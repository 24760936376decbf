mod args;
mod commands;
mod config;
mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use newton_schur::arith::is_prime;
use rayon::prelude::*;
use serde_json::{json, Value};

use args::{parse_range, Cli, Command, Format, SweepTarget};
use commands::{skip_on_ceiling, CliError, CmdResult};
use output::{Emitter, Record, Verdict};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn run_single(cli: &Cli) -> CmdResult {
    let ceiling = cli.ceiling;
    let res = match &cli.command {
        Command::Tpoly { pair, field } => commands::tpoly(pair.a, pair.b, field),
        Command::Rpoly { pair, field } => commands::rpoly(pair.a, pair.b, field),
        Command::Schur { parts, d, field } => commands::schur(parts, *d, field),
        Command::Factor { pair, p, r } => commands::factor(pair.a, pair.b, *p, *r, ceiling),
        Command::Signature { pair, field } => commands::signature(pair.a, pair.b, field),
        Command::VerifyFact { which, p, r } => commands::verify_fact(*which, *p, *r, ceiling),
        Command::Counterexample { p, m, mode } => commands::counterexample(*p, m, *mode),
        Command::Degree { p, r, s, mode } => commands::degree(*p, *r, *s, *mode, ceiling),
        Command::Identity { k_max, samples, field } => {
            commands::identity(*k_max, *samples, cli.seed, field)
        }
        Command::Sweep { .. } => unreachable!("handled by sweep"),
    };
    skip_on_ceiling(res, json!({}))
}

/// One grid point: a label for text output, its parameters, and the work.
struct Point {
    label: String,
    params: Value,
    run: Box<dyn Fn() -> CmdResult + Send + Sync>,
}

fn range(name: &str, s: &str) -> Result<Vec<u64>, CliError> {
    parse_range(s).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

fn primes(s: &str) -> Result<Vec<u64>, CliError> {
    let ps = range("p", s)?;
    if let Some(bad) = ps.iter().find(|&&p| !is_prime(p)) {
        return Err(CliError::Usage(format!("--p: {bad} is not prime")));
    }
    Ok(ps)
}

fn small(name: &str, v: u64) -> Result<u32, CliError> {
    u32::try_from(v).map_err(|_| CliError::Usage(format!("--{name}: {v} is too large")))
}

fn sweep_grid(target: &SweepTarget, ceiling: Option<u64>) -> Result<Vec<Point>, CliError> {
    let mut grid = Vec::new();
    match target {
        SweepTarget::VerifyFact { which, p, r } => {
            let which = *which;
            for p in primes(p)? {
                for r in range("r", r)? {
                    let r = small("r", r)?;
                    if r == 0 {
                        continue;
                    }
                    grid.push(Point {
                        label: String::new(),
                        params: json!({"p": p, "r": r}),
                        run: Box::new(move || commands::verify_fact(which, p, r, ceiling)),
                    });
                }
            }
        }
        SweepTarget::Degree { p, r, s, mode } => {
            let mode = *mode;
            for p in primes(p)? {
                for r in range("r", r)? {
                    let r = small("r", r)?;
                    let ss = match s {
                        Some(s) => range("s", s)?,
                        None => (1..r as u64).collect(),
                    };
                    for s in ss {
                        let s = small("s", s)?;
                        if s == 0 || s >= r {
                            continue;
                        }
                        grid.push(Point {
                            label: format!("p={p} r={r} s={s}: "),
                            params: json!({"p": p, "r": r, "s": s}),
                            run: Box::new(move || commands::degree(p, r, s, mode, ceiling)),
                        });
                    }
                }
            }
        }
        SweepTarget::Signature { a, b, field } => {
            for a in range("A", a)? {
                for b in range("B", b)? {
                    let (a, b) = (small("A", a)?, small("B", b)?);
                    if b == 0 || b >= a {
                        continue;
                    }
                    let field = field.clone();
                    grid.push(Point {
                        label: String::new(),
                        params: json!({"A": a, "B": b}),
                        run: Box::new(move || commands::signature(a, b, &field)),
                    });
                }
            }
        }
        SweepTarget::Eisenstein { p, r } => {
            for p in primes(p)? {
                for r in range("r", r)? {
                    let r = small("r", r)?;
                    if r == 0 {
                        continue;
                    }
                    grid.push(Point {
                        label: String::new(),
                        params: json!({"p": p, "r": r}),
                        run: Box::new(move || commands::eisenstein(p, r)),
                    });
                }
            }
        }
    }
    if grid.is_empty() {
        return Err(CliError::Usage("the sweep grid is empty".into()));
    }
    Ok(grid)
}

/// Runs one point; errors other than usage errors become a skip so a grid
/// crossing a hypothesis boundary still completes.
fn run_point(pt: &Point) -> Result<Record, CliError> {
    let Value::Object(params) = pt.params.clone() else { unreachable!() };
    let rec = match (pt.run)() {
        Ok(mut recs) => recs.remove(0),
        Err(CliError::Usage(u)) => return Err(CliError::Usage(u)),
        Err(CliError::Lib(e)) => Record::skip(e.to_string(), params.clone()),
    };
    let mut fields = params;
    fields.extend(rec.fields);
    let first = rec.text.lines().next().unwrap_or_default();
    Ok(Record {
        verdict: rec.verdict,
        text: format!("{}{}", pt.label, first),
        fields,
    })
}

fn run_sweep(cli: &Cli, target: &SweepTarget) -> CmdResult {
    let grid = sweep_grid(target, cli.ceiling)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let results: Vec<Result<Record, CliError>> = pool.install(|| grid.par_iter().map(run_point).collect());
    results.into_iter().collect()
}

fn summary(records: &[Record]) -> Record {
    let count = |v: Verdict| records.iter().filter(|r| r.verdict == v).count();
    let (pass, fail, skip) = (count(Verdict::Pass), count(Verdict::Fail), count(Verdict::Skip));
    Record::new(
        Verdict::Info,
        format!("summary: {} points, {pass} pass, {fail} fail, {skip} skip", records.len()),
        json!({"summary": {"points": records.len(), "pass": pass, "fail": fail, "skip": skip}}),
    )
}

fn main() -> ExitCode {
    let argv = match config::merge(std::env::args().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let cli = Cli::parse_from(argv);

    let res = match &cli.command {
        Command::Sweep { target } => run_sweep(&cli, target),
        _ => run_single(&cli),
    };
    let records = match res {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };

    let stdout = io::stdout();
    let mut emitter = Emitter::new(stdout.lock(), cli.format);
    for rec in &records {
        if emitter.emit(rec).is_err() {
            return ExitCode::from(EXIT_USAGE);
        }
    }
    if matches!(cli.command, Command::Sweep { .. }) {
        let s = summary(&records);
        if cli.format == Format::Tsv {
            eprintln!("{}", s.text);
        } else if emitter.emit(&s).is_err() {
            return ExitCode::from(EXIT_USAGE);
        }
    }
    drop(emitter);
    let _ = io::stdout().flush();

    let failed = records
        .iter()
        .any(|r| r.verdict == Verdict::Fail || (cli.strict && r.verdict == Verdict::Skip));
    if failed {
        ExitCode::from(EXIT_FAIL)
    } else {
        ExitCode::SUCCESS
    }
}
