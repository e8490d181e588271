//! `latcoh` command-line front end.
//!
//! Reports go to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 invalid input, 2 search exhausted, 3 verification failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use latcoh::cohomology::{h1, obstruction_scan, CohomologyConfig, GLattice};
use latcoh::linalg::char_poly;
use latcoh::picard::{
    bertini_involution, charpoly_order, dejonquieres_with_section, geiser_involution, q_sublattice,
    verify_row_with, weyl_search, PicardLattice, TableCase, WeylSearchConfig, DEFAULT_SEED,
};
use latcoh::report::{
    h1_verdict, to_json_string, BuiltinReport, ComputeReport, RowJson, ScanJson, SearchJson,
    TableJson,
};
use latcoh::{parse_input, Error, FinAbGroup, InputDocument};

#[derive(Parser, Debug)]
#[command(
    name = "latcoh",
    version,
    about = "Cohomology of G-lattices and Picard lattices of rational surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    out: Output,
}

#[derive(Args, Debug, Clone, Copy)]
struct Output {
    /// Print a JSON report instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock time (elapsed_ms) in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Recompute every row of the prime-order classification table.
    VerifyTable {
        /// Largest genus of the de Jonquieres rows.
        #[arg(long, default_value_t = 5)]
        genus_max: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        max_trials: u64,
        #[arg(long)]
        parallel: bool,
    },
    /// H^1 of a G-lattice read from a JSON document.
    Compute {
        #[arg(long)]
        input: PathBuf,
        /// Include the kernel/image bases behind the quotient.
        #[arg(long)]
        witness: bool,
    },
    /// H^1 of the whole group and of every cyclic subgroup.
    Scan {
        #[arg(long)]
        input: PathBuf,
    },
    /// A built-in involution on a Picard lattice.
    Builtin {
        #[command(subcommand)]
        action: Builtin,
    },
    /// Seeded search for a Weyl group element of prime order.
    Search {
        #[arg(long)]
        degree: i64,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        max_trials: u64,
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Builtin {
    /// Geiser involution, degree 2.
    Geiser,
    /// Bertini involution, degree 1.
    Bertini,
    /// de Jonquieres involution on a conic bundle.
    Dejonquieres {
        #[arg(long)]
        genus: i64,
        /// Self-intersection of the chosen section.
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        section_square: i64,
    },
}

enum Failure {
    Lib(Error),
    Io(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Io(_) => 1,
            Failure::Mismatch(_) => 3,
            Failure::Lib(e) => match e {
                Error::SearchExhausted { .. } => 2,
                Error::Verification(_) | Error::NotDivisible(_) => 3,
                _ => 1,
            },
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(m) | Failure::Mismatch(m) => m.clone(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command, cli.out) {
        Ok(stdout) => {
            print!("{}", stdout);
            ExitCode::SUCCESS
        }
        Err((stdout, failure)) => {
            print!("{}", stdout);
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

type Outcome = std::result::Result<String, (String, Failure)>;

fn run(command: Command, out: Output) -> Outcome {
    let start = Instant::now();
    let elapsed = || out.timing.then(|| start.elapsed().as_millis() as u64);
    let fail = |f: Failure| (String::new(), f);
    match command {
        Command::VerifyTable {
            genus_max,
            seed,
            max_trials,
            parallel,
        } => {
            let search = WeylSearchConfig {
                seed,
                max_trials,
                parallel,
                ..Default::default()
            };
            let cfg = CohomologyConfig::default();
            let mut rows = Vec::new();
            for case in TableCase::all(genus_max) {
                let r = verify_row_with(case, &search, &cfg).map_err(|e| fail(e.into()))?;
                for c in r.checks.iter().filter(|c| !c.passed) {
                    eprintln!("{}: check `{}` failed: {}", case, c.name, c.detail);
                }
                rows.push(RowJson::new(&r, seed));
            }
            let passed = rows.iter().all(|r| r.status == "PASS");
            let report = TableJson {
                command: "verify-table",
                genus_max,
                verdict: if passed {
                    "all rows match".into()
                } else {
                    "mismatch against expected values".into()
                },
                passed,
                rows,
                elapsed_ms: elapsed(),
            };
            let text = if out.json {
                to_json_string(&report)
            } else {
                table_text(&report)
            };
            if passed {
                Ok(text)
            } else {
                Err((text, Failure::Mismatch(report.verdict)))
            }
        }
        Command::Compute { input, witness } => {
            let (doc, m) = load(&input).map_err(fail)?;
            let cfg = CohomologyConfig {
                witness,
                ..Default::default()
            };
            let r = h1(&m, &cfg).map_err(|e| fail(e.into()))?;
            let mut report = ComputeReport::new(doc.to_json(), &r);
            report.elapsed_ms = elapsed();
            Ok(if out.json {
                to_json_string(&report)
            } else {
                let mut s = format!(
                    "group order  {}\nrank M^G     {}\nH^1          {}\nmethod       {}\n",
                    report.group_order, report.h0_rank, report.h1.pretty, report.method
                );
                s += &format!("verdict      {}\n", report.verdict);
                s + &timing_line(report.elapsed_ms)
            })
        }
        Command::Scan { input } => {
            let (doc, m) = load(&input).map_err(fail)?;
            let s =
                obstruction_scan(&m, &CohomologyConfig::default()).map_err(|e| fail(e.into()))?;
            let mut report = ScanJson::new(doc.to_json(), &s);
            report.elapsed_ms = elapsed();
            Ok(if out.json {
                to_json_string(&report)
            } else {
                let mut t = format!(
                    "group order {}, rank M^G {}, H^1 = {}\n\n{:>9}  {:>5}  H^1\n",
                    report.group_order, report.h0_rank, report.h1.pretty, "generator", "order"
                );
                for sub in &report.subgroups {
                    t += &format!(
                        "{:>9}  {:>5}  {}\n",
                        sub.generator_index, sub.order, sub.h1.pretty
                    );
                }
                t += &format!("\nverdict: {}\n", report.verdict);
                t + &timing_line(report.elapsed_ms)
            })
        }
        Command::Builtin { action } => {
            let mut report = builtin(action).map_err(|e| fail(e.into()))?;
            report.elapsed_ms = elapsed();
            Ok(if out.json {
                to_json_string(&report)
            } else {
                let mut t = format!("action       {}\n", report.action);
                if let Some(g) = report.genus {
                    t += &format!("genus        {}\n", g);
                }
                t += &format!(
                    "K^2          {}\nbasis        {}\ngroup order  {}\nrank Pic^G   {}\nH^1(Pic)     {}\nH^1(Q)       {}\nverdict      {}\n",
                    report.k_squared,
                    report.basis.join(" "),
                    report.group_order,
                    report.h0_rank,
                    report.h1.pretty,
                    report.h1_q.pretty,
                    report.verdict
                );
                t + &timing_line(report.elapsed_ms)
            })
        }
        Command::Search {
            degree,
            prime,
            seed,
            max_trials,
            parallel,
        } => {
            let cfg = WeylSearchConfig {
                seed,
                max_trials,
                parallel,
                ..Default::default()
            };
            let mut report = search(degree, prime, &cfg).map_err(|e| fail(e.into()))?;
            report.elapsed_ms = elapsed();
            Ok(if out.json {
                to_json_string(&report)
            } else {
                let mut t = format!(
                    "degree {}, p = {}, seed {}: hit at trial {} (word length {})\n",
                    report.degree, report.prime, report.seed, report.trial, report.word_length
                );
                t += &format!(
                    "matrix       {}\nchi on Q     {}\nH^1(Pic)     {}\nH^1(Q)       {}\n|chi(1)|/d   {}\nverdict      {}\n",
                    serde_json::to_string(&report.matrix).expect("json"),
                    report.char_poly_q,
                    report.h1.pretty,
                    report.h1_q.pretty,
                    report.charpoly_order,
                    report.verdict
                );
                t + &timing_line(report.elapsed_ms)
            })
        }
    }
}

fn timing_line(ms: Option<u64>) -> String {
    ms.map(|m| format!("elapsed      {} ms\n", m))
        .unwrap_or_default()
}

fn load(path: &PathBuf) -> std::result::Result<(InputDocument, GLattice), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {}", path.display(), e)))?;
    let doc = parse_input(&text)?;
    let m = doc.to_glattice()?;
    Ok((doc, m))
}

fn q_h1(pic: &PicardLattice, m: &GLattice, cfg: &CohomologyConfig) -> latcoh::Result<FinAbGroup> {
    Ok(h1(&m.sublattice(&q_sublattice(pic).basis)?, cfg)?.h1)
}

fn builtin(action: Builtin) -> latcoh::Result<BuiltinReport> {
    use latcoh::input::matrix_json;
    let cfg = CohomologyConfig::default();
    let (name, genus, k2, basis, gram, m, h1_q) = match action {
        Builtin::Geiser | Builtin::Bertini => {
            let (name, (pic, m)) = match action {
                Builtin::Geiser => ("geiser", geiser_involution()?),
                _ => ("bertini", bertini_involution()?),
            };
            let h1_q = q_h1(&pic, &m, &cfg)?;
            (
                name,
                None,
                pic.degree(),
                pic.labels(),
                pic.gram().clone(),
                m,
                h1_q,
            )
        }
        Builtin::Dejonquieres {
            genus,
            section_square,
        } => {
            let cb = dejonquieres_with_section(genus, section_square)?;
            let m = cb.to_glattice()?;
            let h1_q = h1(&cb.q_glattice()?, &cfg)?.h1;
            (
                "dejonquieres",
                Some(cb.genus()),
                cb.k_squared(),
                cb.labels(),
                cb.gram().clone(),
                m,
                h1_q,
            )
        }
    };
    let r = h1(&m, &cfg)?;
    Ok(BuiltinReport {
        command: "builtin",
        action: name.to_string(),
        genus,
        k_squared: k2,
        basis,
        gram: matrix_json(&gram),
        matrix: matrix_json(&m.generators()[0]),
        group_order: r.group_order,
        h0_rank: r.h0_rank,
        h1: (&r.h1).into(),
        h1_q: (&h1_q).into(),
        verdict: h1_verdict(&r.h1),
        elapsed_ms: None,
    })
}

fn search(degree: i64, prime: u64, cfg: &WeylSearchConfig) -> latcoh::Result<SearchJson> {
    let hit = weyl_search(degree, prime, cfg)?;
    let coh = CohomologyConfig::default();
    let r = h1(&hit.lattice, &coh)?;
    let q = hit.lattice.sublattice(&q_sublattice(&hit.picard).basis)?;
    let chi = char_poly(&q.generators()[0])?;
    let h1_q = h1(&q, &coh)?.h1;
    let order = charpoly_order(&hit.lattice, &hit.picard)?;
    if r.h1.order().as_ref() != Some(&order) {
        return Err(Error::Verification(format!(
            "|H^1| = {} but |chi(1)|/d = {}",
            r.h1, order
        )));
    }
    Ok(SearchJson::new(
        &hit,
        prime,
        cfg.seed,
        cfg.max_trials,
        chi.to_string(),
        &r,
        &h1_q,
        &order,
    ))
}

fn table_text(report: &TableJson) -> String {
    let mut t = format!(
        "{:>2}  {:>2}  {:>3}  {:<14}  {:<26}  {:<10}  {}\n",
        "p", "g", "K²", "model", "action", "H¹", "status"
    );
    for r in &report.rows {
        let model = if r.model == "conic bundle" {
            "conic bundle".to_string()
        } else {
            format!("dP{}", r.k_squared)
        };
        let action = match r.search_trial {
            Some(trial) => format!("{} (trial {})", r.action, trial),
            None => r.action.to_string(),
        };
        t += &format!(
            "{:>2}  {:>2}  {:>3}  {:<14}  {:<26}  {:<10}  {}\n",
            r.p, r.g, r.k_squared, model, action, r.h1.pretty, r.status
        );
    }
    t += &format!("\n{}\n", report.verdict);
    t + &timing_line(report.elapsed_ms)
}
