//! Command dispatch for the `synthcap` binary.

pub mod cli;
pub mod output;
pub mod report;
pub mod verify;

use std::fmt;

use clap::Parser;

use synthcap_core::greedy_recovery::{
    count_valid_matrices, greedy_supersequence, masterless_bounds, masterless_census,
};
use synthcap_core::master_census::{
    count_pairs_exact, count_tuples_exact, growth_rates, pair_bounds, tuple_bounds, CensusResult,
};
use synthcap_core::qbonacci::{
    fib_q, growth_root, growth_root_cfrac, growth_root_cfrac_until, prefix_sum_fib_q, RootResult,
};
use synthcap_core::sequences::{cyclic_lineup, synthesis_time, Alphabet, MasterLineup, Strand};
use synthcap_core::subseq_census::{distinct_subsequences, length_histogram, time_histogram};
use synthcap_core::{BigCount, Budget, Error};

use cli::{CensusCommand, Cli, Command, Format, RootMethodArg, ScaleArg};
use output::{Report, Val};
use verify::Scale;

/// Dispatch-level error: either a usage problem or a library error.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(err) => write!(f, "{err}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        CliError::Core(err)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::BudgetExceeded { .. }) => 3,
            _ => 1,
        }
    }
}

/// Entry point: returns the process exit code.
/// 0 ok, 1 usage error, 2 verification failure, 3 budget exceeded.
pub fn run() -> i32 {
    if let Ok(threads) = std::env::var("SYNTHCAP_THREADS") {
        match threads.parse::<usize>() {
            Ok(k) if k >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build_global();
            }
            _ => {
                eprintln!("error: SYNTHCAP_THREADS must be a positive integer");
                return 1;
            }
        }
    }
    let budget = match std::env::var("SYNTHCAP_BUDGET") {
        Ok(raw) => match raw.parse::<u128>() {
            Ok(steps) => Budget::with_max_steps(steps),
            Err(_) => {
                eprintln!("error: SYNTHCAP_BUDGET must be an integer step count");
                return 1;
            }
        },
        Err(_) => Budget::default(),
    };

    let parsed = match Cli::try_parse() {
        Ok(parsed) => parsed,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    0
                }
                _ => {
                    eprint!("{e}");
                    1
                }
            };
        }
    };

    match dispatch(parsed.command, parsed.format, &budget) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

fn dispatch(command: Command, format: Format, budget: &Budget) -> Result<i32, CliError> {
    let report = match command {
        Command::Qbonacci { q, t, sum } => qbonacci_report(q, t, sum)?,
        Command::Phi {
            q,
            method,
            tol,
            iters,
        } => phi_report(q, method, tol, iters)?,
        Command::Count {
            master,
            alphabet,
            by_tau,
            by_length,
        } => count_report(&master, alphabet.as_deref(), by_tau, by_length)?,
        Command::Tau {
            strand,
            master,
            cyclic,
        } => tau_report(&strand, master.as_deref(), cyclic.as_deref())?,
        Command::Census(census) => census_report(census, budget)?,
        Command::Greedy { strands, alphabet } => greedy_report(&strands, alphabet.as_deref())?,
        Command::Capacity { q, t, n, exact } => capacity_cmd(q, t, n, exact, budget)?,
        Command::Verify { scale } => {
            let scale = match scale {
                ScaleArg::Small => Scale::Small,
                ScaleArg::Full => Scale::Full,
            };
            return Ok(verify_cmd(scale, format));
        }
    };
    print!("{}", report.render(format));
    Ok(0)
}

fn qbonacci_report(q: u32, t: i64, sum: bool) -> Result<Report, CliError> {
    let mut report = Report::new(if sum { "qbonacci sum" } else { "qbonacci" })
        .param("q", Val::Int(q as i64))
        .param("t", Val::Int(t));
    if sum {
        if t < 0 {
            return Err(CliError::Usage("--sum needs t >= 0".into()));
        }
        report.push_result(
            "value",
            Val::count(&prefix_sum_fib_q::<BigCount>(q, t as u64)),
        );
    } else {
        report.push_result("value", Val::count(&fib_q::<BigCount>(q, t)));
    }
    Ok(report)
}

fn phi_report(
    q: u32,
    method: RootMethodArg,
    tol: f64,
    iters: Option<u32>,
) -> Result<Report, CliError> {
    if tol <= 0.0 {
        return Err(CliError::Usage("--tol must be positive".into()));
    }
    let root: RootResult = match method {
        RootMethodArg::Bisect => growth_root(q, tol),
        RootMethodArg::Cfrac => match iters {
            Some(0) => return Err(CliError::Usage("--iters must be at least 1".into())),
            Some(iters) => growth_root_cfrac(q, iters),
            None => growth_root_cfrac_until(q, tol, 10_000),
        },
    };
    let mut report = Report::new("phi")
        .param("q", Val::Int(q as i64))
        .param("method", Val::Text(root.method.to_string()))
        .param("tol", Val::Real(tol));
    report.push_result("value", Val::Real(root.value));
    report.push_result("residual", Val::Real(root.residual));
    report.push_result("iterations", Val::Int(root.iterations as i64));
    Ok(report)
}

/// Alphabet implied by lineup/strand text: the distinct tokens in order of
/// first appearance. Comma anywhere switches every text to token mode.
fn union_alphabet(texts: &[&str]) -> Result<Alphabet, Error> {
    let comma_mode = texts.iter().any(|t| t.contains(','));
    let mut seen: Vec<String> = Vec::new();
    for text in texts {
        if text.is_empty() {
            continue;
        }
        if comma_mode {
            for tok in text.split(',') {
                if !seen.iter().any(|s| s == tok) {
                    seen.push(tok.to_owned());
                }
            }
        } else {
            for c in text.chars() {
                let tok = c.to_string();
                if !seen.contains(&tok) {
                    seen.push(tok);
                }
            }
        }
    }
    if seen.is_empty() {
        seen.push("A".into()); // empty lineup over a placeholder symbol
    }
    Alphabet::new(seen)
}

fn count_report(
    master: &str,
    alphabet: Option<&str>,
    by_tau: bool,
    by_length: bool,
) -> Result<Report, CliError> {
    let alphabet = match alphabet {
        Some(text) => Alphabet::parse(text)?,
        None => union_alphabet(&[master])?,
    };
    let m = alphabet.parse_strand(master)?;
    let mut report = Report::new("count")
        .param("master", Val::Text(alphabet.format_strand(&m)))
        .param("alphabet", Val::Text(alphabet.to_string()));
    if by_tau {
        let hist = time_histogram::<BigCount>(&m);
        for (s, c) in hist.counts().iter().enumerate() {
            report.push_result(format!("tau[{s}]"), Val::count(c));
        }
        report.push_diag("total", Val::count(&hist.total()));
    } else if by_length {
        let hist = length_histogram::<BigCount>(&m);
        for (l, c) in hist.counts().iter().enumerate() {
            report.push_result(format!("length[{l}]"), Val::count(c));
        }
        report.push_diag("total", Val::count(&hist.total()));
    } else {
        report.push_result(
            "distinct",
            Val::count(&distinct_subsequences::<BigCount>(&m)),
        );
    }
    Ok(report)
}

fn tau_report(
    strand: &str,
    master: Option<&str>,
    cyclic: Option<&str>,
) -> Result<Report, CliError> {
    let (alphabet, lineup, lineup_text) = match (master, cyclic) {
        (Some(master), None) => {
            let alphabet = union_alphabet(&[master, strand])?;
            let m = alphabet.parse_strand(master)?;
            let text = alphabet.format_strand(&m);
            (alphabet, MasterLineup::finite(m), text)
        }
        (None, Some(cyclic_alphabet)) => {
            let alphabet = Alphabet::parse(cyclic_alphabet)?;
            let base = cyclic_lineup(&alphabet, alphabet.size());
            let lineup = MasterLineup::cyclic(base)?;
            let text = format!("cyclic {alphabet}");
            (alphabet, lineup, text)
        }
        _ => unreachable!("clap enforces exactly one of --master/--cyclic"),
    };
    let x = alphabet.parse_strand(strand)?;
    let mut report = Report::new("tau")
        .param("strand", Val::Text(alphabet.format_strand(&x)))
        .param("master", Val::Text(lineup_text));
    match synthesis_time(&x, &lineup) {
        Some(s) => report.push_result("tau", Val::Int(s as i64)),
        None => report.push_result("tau", Val::Text("none".into())),
    }
    Ok(report)
}

fn push_census_bounds(report: &mut Report, bounds: &CensusResult) {
    report.push_bound("upper", Val::count(&bounds.upper));
    for (p, low) in &bounds.lowers {
        report.push_bound(format!("lower[p={p}]"), Val::count(low));
    }
    if let Some(nr) = &bounds.lower_no_repeat {
        report.push_bound("lower_no_repeat", Val::count(nr));
    }
}

fn push_growth_diags(report: &mut Report, q: u32) {
    let rates = growth_rates(q);
    report.push_diag("growth.upper", Val::Real(rates.upper));
    for (p, rate) in &rates.lowers {
        report.push_diag(format!("growth.lower[p={p}]"), Val::Real(*rate));
    }
}

fn require_bounds_q(q: u32) -> Result<(), CliError> {
    if q < 2 {
        Err(CliError::Usage(
            "closed-form bounds need q >= 2; pass --exact for the q = 1 census".into(),
        ))
    } else {
        Ok(())
    }
}

fn census_report(census: CensusCommand, budget: &Budget) -> Result<Report, CliError> {
    match census {
        CensusCommand::Pairs {
            q,
            t,
            exact,
            bounds,
        } => {
            let want_bounds = bounds || !exact;
            let mut report = Report::new("census pairs")
                .param("q", Val::Int(q as i64))
                .param("t", Val::Int(t as i64));
            if exact {
                let alphabet = Alphabet::of_size(q);
                report.push_result(
                    "exact",
                    Val::count(&count_pairs_exact(&alphabet, t, budget)?),
                );
            }
            if want_bounds {
                require_bounds_q(q)?;
                push_census_bounds(&mut report, &pair_bounds(q, t));
                push_growth_diags(&mut report, q);
            }
            Ok(report)
        }
        CensusCommand::Tuples {
            q,
            t,
            n,
            exact,
            bounds,
        } => {
            let want_bounds = bounds || !exact;
            let mut report = Report::new("census tuples")
                .param("q", Val::Int(q as i64))
                .param("t", Val::Int(t as i64))
                .param("n", Val::Int(n as i64));
            if exact {
                let alphabet = Alphabet::of_size(q);
                report.push_result(
                    "exact",
                    Val::count(&count_tuples_exact(&alphabet, t, n, budget)?),
                );
            }
            if want_bounds {
                require_bounds_q(q)?;
                push_census_bounds(&mut report, &tuple_bounds(q, t, n));
                push_growth_diags(&mut report, q);
            }
            Ok(report)
        }
        CensusCommand::Matrices { t, n, p, .. } => {
            let census = count_valid_matrices(t, n, p, budget)?;
            let mut report = Report::new("census matrices")
                .param("t", Val::Int(t as i64))
                .param("n", Val::Int(n as i64))
                .param("p", Val::Int(p as i64));
            report.push_result("valid", Val::count(&census.exact_valid));
            report.push_result("ef", Val::ratio(&census.ef));
            report.push_result("eg", Val::ratio(&census.eg));
            report.push_result("efg", Val::ratio(&census.efg));
            report.push_bound("lower", Val::ratio(&census.bound_lower));
            Ok(report)
        }
        CensusCommand::MasterlessTuples {
            q,
            t,
            n,
            exact,
            bounds,
        } => {
            let want_bounds = bounds || !exact;
            let mut report = Report::new("census masterless-tuples")
                .param("q", Val::Int(q as i64))
                .param("t", Val::Int(t as i64))
                .param("n", Val::Int(n as i64));
            if exact {
                let alphabet = Alphabet::of_size(q);
                let census = masterless_census(&alphabet, t, n, budget)?;
                report.push_result("tuples", Val::count(&census.tuples));
            }
            if want_bounds {
                require_bounds_q(q)?;
                let b = masterless_bounds(q, t, n)?;
                for (p, low) in &b.tuple_lowers {
                    report.push_bound(format!("lower[p={p}]"), Val::ratio(low));
                }
            }
            Ok(report)
        }
        CensusCommand::MasterlessSets {
            q,
            t,
            n,
            exact,
            bounds,
        } => {
            let want_bounds = bounds || !exact;
            let mut report = Report::new("census masterless-sets")
                .param("q", Val::Int(q as i64))
                .param("t", Val::Int(t as i64))
                .param("n", Val::Int(n as i64));
            if exact {
                let alphabet = Alphabet::of_size(q);
                let census = masterless_census(&alphabet, t, n, budget)?;
                report.push_result("sets", Val::count(&census.sets));
                report.push_diag("multisets", Val::count(&census.multisets));
            }
            if want_bounds {
                require_bounds_q(q)?;
                let b = masterless_bounds(q, t, n)?;
                for (p, low) in &b.set_lowers {
                    report.push_bound(format!("lower[p={p}]"), Val::ratio(low));
                    report.push_bound(
                        format!("lower_floor[p={p}]"),
                        Val::count(&b.set_lower_floors[p]),
                    );
                }
                report.push_bound("upper", Val::count(&b.set_upper));
            }
            Ok(report)
        }
    }
}

fn greedy_report(strands: &[String], alphabet: Option<&str>) -> Result<Report, CliError> {
    let alphabet = match alphabet {
        Some(text) => Alphabet::parse(text)?,
        None => Alphabet::dna(),
    };
    let parsed: Vec<Strand> = strands
        .iter()
        .map(|text| alphabet.parse_strand(text))
        .collect::<Result<_, Error>>()?;
    let m = greedy_supersequence(&parsed, &alphabet)?;
    let mut report = Report::new("greedy")
        .param("strands", Val::Text(strands.join(" ")))
        .param("alphabet", Val::Text(alphabet.to_string()));
    report.push_result("supersequence", Val::Text(alphabet.format_strand(&m)));
    report.push_result("length", Val::Int(m.len() as i64));
    Ok(report)
}

fn capacity_cmd(q: u32, t: u32, n: u32, exact: bool, budget: &Budget) -> Result<Report, CliError> {
    let cap = report::capacity_report(q, t, n, exact, budget)?;
    let mut out = Report::new("capacity")
        .param("q", Val::Int(q as i64))
        .param("t", Val::Int(t as i64))
        .param("n", Val::Int(n as i64));
    out.push_result("upper_bits", Val::Real(cap.upper_bits));
    for (p, bits) in &cap.lower_bits_by_p {
        out.push_result(format!("lower_bits[p={p}]"), Val::Real(*bits));
    }
    if let Some(bits) = cap.exact_bits {
        out.push_result("exact_bits", Val::Real(bits));
    }
    out.push_diag(
        "bits_note",
        Val::Text(
            "bits = log2 of exact counts via bit length plus correction; <= 1e-12 relative error"
                .into(),
        ),
    );
    out.push_diag("best_p", Val::Int(cap.best_p as i64));
    out.push_diag("phi_q", Val::Real(cap.phi_q));
    out.push_diag("phi_best_p", Val::Real(cap.phi_best_p));
    out.push_diag("best_objective_log2", Val::Real(cap.best_objective_log2));
    out.push_diag("log_qn", Val::Real(cap.log_qn));
    // Both normalizations, since "information" is quoted per strand and per
    // time unit in different places.
    out.push_diag(
        "upper_bits_per_strand",
        Val::Real(cap.upper_bits / n as f64),
    );
    out.push_diag("upper_bits_per_time", Val::Real(cap.upper_bits / t as f64));
    let best_lower = cap.best_lower_bits();
    out.push_diag("lower_bits_per_strand", Val::Real(best_lower / n as f64));
    out.push_diag("lower_bits_per_time", Val::Real(best_lower / t as f64));
    if let Some(bits) = cap.exact_bits {
        out.push_diag("exact_bits_per_strand", Val::Real(bits / n as f64));
        out.push_diag("exact_bits_per_time", Val::Real(bits / t as f64));
    }
    Ok(out)
}

fn verify_cmd(scale: Scale, format: Format) -> i32 {
    let outcomes = verify::run_all(scale);
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    match format {
        Format::Table => print!("{}", verify::format_outcomes(&outcomes, scale)),
        Format::Json => {
            let list: Vec<serde_json::Value> = outcomes
                .iter()
                .map(|o| {
                    serde_json::json!({
                        "id": o.id,
                        "name": o.name,
                        "pass": o.pass,
                        "millis": o.millis,
                        "details": o.details,
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "command": "verify",
                "scale": match scale { Scale::Small => "small", Scale::Full => "full" },
                "criteria": list,
                "passed": outcomes.len() - failed,
                "failed": failed,
                "provenance": {
                    "version": env!("CARGO_PKG_VERSION"),
                    "git": env!("SYNTHCAP_GIT_HASH"),
                },
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializes")
            );
        }
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(Vec::new());
            wtr.write_record(["id", "name", "pass", "millis", "details"])
                .expect("csv header");
            for o in &outcomes {
                wtr.write_record([
                    o.id.to_string(),
                    o.name.to_string(),
                    o.pass.to_string(),
                    o.millis.to_string(),
                    o.details.clone(),
                ])
                .expect("csv row");
            }
            print!(
                "{}",
                String::from_utf8(wtr.into_inner().expect("flush")).expect("utf-8")
            );
        }
    }
    if failed > 0 {
        2
    } else {
        0
    }
}
