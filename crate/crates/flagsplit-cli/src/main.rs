//! Command-line front door: generate groups, query Bruhat and Richardson
//! data, run closure and verification sweeps, drive the F_p splitting
//! laboratory, and export graphs.
//!
//! Exit status: 0 on success, 1 when a verification ran and reported
//! failures (counterexamples are printed), 2 on usage or input errors.

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use flagsplit::export::{hasse_dot, hasse_json, system_dot};
use flagsplit::frobenius::{parse_poly, BigCellModel, ChartIdeal, FpMatrix};
use flagsplit::report::{NormalFailure, NormalReport, SplitReport, StarReport};
use flagsplit::systems::{
    canonical_seed, check_axiom3_surrogate, check_normal_axiom2, sweep_star, IntervalJson,
};
use flagsplit::{
    all_intervals, CartanType, CellModel, Error, Interval, System, UnionVariety, WeylGroup,
};

#[derive(Parser)]
#[command(name = "flagsplit", version, about = "Weyl groups, Richardson intervals, and Frobenius splittings over F_p", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a Weyl group and print its headline data
    Generate {
        /// Cartan type, e.g. A3, B2, G2
        cartan: String,
        /// Override the group-order cap (default 10^6)
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Decide Bruhat order between two elements given as reduced words
    Leq {
        cartan: String,
        /// Word for the smaller element, e.g. 1 or e
        v: String,
        /// Word for the larger element, e.g. 12
        w: String,
        #[arg(long)]
        json: bool,
    },
    /// Intersect Richardson intervals (each as v:w) and print the components
    Intersect {
        cartan: String,
        /// Two or more intervals like e:12
        #[arg(num_args = 2..)]
        intervals: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// List the Richardson divisors of an interval
    Divisors {
        cartan: String,
        /// Interval as v:w
        interval: String,
        #[arg(long)]
        json: bool,
    },
    /// Close a seed family under intersection-and-components
    Closure {
        cartan: String,
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check the normal-system axioms on a closed family
    VerifyNormal {
        cartan: String,
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check the star condition on divisor pairs across intervals
    VerifyStar {
        cartan: String,
        #[command(flatten)]
        seed: SeedArgs,
        #[arg(long)]
        json: bool,
    },
    /// Build the SL_n big-cell model and sweep the candidate ideals
    VerifySplitting {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        prime: u64,
        /// JSON file with extra candidate ideals: a list of lists of
        /// polynomials like "x21*x32 - x31"
        #[arg(long)]
        candidates: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Bruhat-decompose an invertible matrix over F_p
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        prime: u64,
        /// Rows separated by ';', entries by ',', e.g. "1,0,0;2,1,0;1,2,1"
        matrix: String,
        #[arg(long)]
        json: bool,
    },
    /// Export the Bruhat Hasse diagram or a system-containment diagram
    Export {
        cartan: String,
        #[arg(long, value_enum, default_value_t = What::Hasse)]
        what: What,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[command(flatten)]
        seed: SeedArgs,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Args)]
struct SeedArgs {
    /// Seed with every nonempty interval
    #[arg(long, conflicts_with = "seed_list")]
    seed_all: bool,
    /// Seed with a comma-separated list of intervals like e:12,1:121
    #[arg(long)]
    seed_list: Option<String>,
}

#[derive(Copy, Clone, ValueEnum)]
enum What {
    Hasse,
    System,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Serialize, Deserialize)]
struct GenerateJson {
    cartan: String,
    rank: usize,
    order: usize,
    positive_roots: usize,
    longest_word: String,
}

#[derive(Serialize, Deserialize)]
struct LeqJson {
    cartan: String,
    v: String,
    w: String,
    leq: bool,
}

#[derive(Serialize, Deserialize)]
struct ComponentsJson {
    cartan: String,
    components: Vec<IntervalJson>,
}

#[derive(Serialize, Deserialize)]
struct ClosureJson {
    r#type: String,
    cartan: String,
    rank: usize,
    seed: Vec<IntervalJson>,
    members: Vec<IntervalJson>,
    full_family: bool,
}

#[derive(Serialize, Deserialize)]
struct DecomposeJson {
    prime: u64,
    schubert_word: String,
    schubert_one_line: Vec<usize>,
    opposite_word: String,
    opposite_one_line: Vec<usize>,
}

fn main() -> ExitCode {
    // die quietly on closed pipes, like the usual unix tools
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        // failed geometric constructions are verification failures
        Some(Error::Construction(_) | Error::TheoremViolation(_) | Error::NotASplitting) => 1,
        _ => 2,
    }
}

/// Runs a command, returning the number of verification failures.
fn run(command: Command) -> anyhow::Result<usize> {
    match command {
        Command::Generate { cartan, cap, json } => {
            let t: CartanType = cartan.parse()?;
            let g = match cap {
                Some(cap) => WeylGroup::generate_with_cap(t, cap)?,
                None => WeylGroup::generate(t)?,
            };
            let payload = GenerateJson {
                cartan: t.to_string(),
                rank: g.rank(),
                order: g.order(),
                positive_roots: g.reflections().len(),
                longest_word: g.word_string(g.longest()),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&payload)?);
            } else {
                println!(
                    "W({}): order {}, {} positive roots, longest element {}",
                    payload.cartan, payload.order, payload.positive_roots, payload.longest_word
                );
            }
            Ok(0)
        }
        Command::Leq { cartan, v, w, json } => {
            let g = group(&cartan)?;
            let ev = g.element_from_word_str(&v)?;
            let ew = g.element_from_word_str(&w)?;
            let leq = g.bruhat_leq(ev, ew);
            if json {
                let payload = LeqJson {
                    cartan: g.cartan().to_string(),
                    v: g.word_string(ev),
                    w: g.word_string(ew),
                    leq,
                };
                println!("{}", serde_json::to_string_pretty(&payload)?);
            } else {
                println!("{leq}");
            }
            Ok(0)
        }
        Command::Intersect {
            cartan,
            intervals,
            json,
        } => {
            let g = group(&cartan)?;
            let mut acc: Option<UnionVariety> = None;
            for s in &intervals {
                let next = UnionVariety::from_components(&g, vec![Interval::parse(&g, s)?]);
                acc = Some(match acc {
                    None => next,
                    Some(cur) => cur.intersect(&g, &next),
                });
            }
            let result = acc.expect("clap enforces at least two intervals");
            if json {
                let payload = ComponentsJson {
                    cartan: g.cartan().to_string(),
                    components: result
                        .components()
                        .iter()
                        .map(|x| IntervalJson::of(&g, x))
                        .collect(),
                };
                println!("{}", serde_json::to_string_pretty(&payload)?);
            } else {
                println!("{}", result.label(&g));
            }
            Ok(0)
        }
        Command::Divisors {
            cartan,
            interval,
            json,
        } => {
            let g = group(&cartan)?;
            let x = Interval::parse(&g, &interval)?;
            let divisors = x.divisors(&g);
            if json {
                let payload = ComponentsJson {
                    cartan: g.cartan().to_string(),
                    components: divisors.iter().map(|d| IntervalJson::of(&g, d)).collect(),
                };
                println!("{}", serde_json::to_string_pretty(&payload)?);
            } else if divisors.is_empty() {
                println!("(none)");
            } else {
                for d in divisors {
                    println!("{}", d.label(&g));
                }
            }
            Ok(0)
        }
        Command::Closure { cartan, seed, json } => {
            let g = group(&cartan)?;
            let model = CellModel::new(&g);
            let seed = resolve_seed(&g, &seed, canonical_seed(&g))?;
            let sys = System::closure(&model, seed.clone());
            let full = all_intervals(&g);
            let payload = ClosureJson {
                r#type: "closure".into(),
                cartan: g.cartan().to_string(),
                rank: g.rank(),
                seed: seed.iter().map(|x| IntervalJson::of(&g, x)).collect(),
                members: sys
                    .members()
                    .iter()
                    .map(|x| IntervalJson::of(&g, x))
                    .collect(),
                full_family: sys.members().len() == full.len(),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&payload)?);
            } else {
                println!(
                    "closure of {} seeds has {} members ({}the full Richardson family)",
                    payload.seed.len(),
                    payload.members.len(),
                    if payload.full_family { "" } else { "not " },
                );
                for x in sys.members() {
                    println!("  {}", x.label(&g));
                }
            }
            Ok(0)
        }
        Command::VerifyNormal { cartan, seed, json } => {
            let g = group(&cartan)?;
            let model = CellModel::new(&g);
            let seed = resolve_seed(&g, &seed, all_intervals(&g))?;
            let sys = System::closure(&model, seed);
            let a2 = check_normal_axiom2(&model, &sys);
            let a3 = check_axiom3_surrogate(&g, &sys);
            let mut failures: Vec<NormalFailure> = Vec::new();
            failures.extend(a2.violations.into_iter().map(NormalFailure::Axiom2));
            failures.extend(a3.violations.into_iter().map(NormalFailure::Axiom3));
            let report = NormalReport {
                r#type: "verify-normal".into(),
                cartan: g.cartan().to_string(),
                rank: g.rank(),
                members: sys.members().len(),
                checked: a2.checked + a3.checked,
                failures,
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!(
                    "checked {} members ({} comparisons), {} failures",
                    report.members,
                    report.checked,
                    report.failures.len()
                );
                for f in &report.failures {
                    println!("  violation: {}", serde_json::to_string(f)?);
                }
            }
            Ok(report.failures.len())
        }
        Command::VerifyStar { cartan, seed, json } => {
            let g = group(&cartan)?;
            let model = CellModel::new(&g);
            let restrict = match (&seed.seed_list, seed.seed_all) {
                (Some(_), _) => Some(resolve_seed(&g, &seed, vec![])?),
                _ => None,
            };
            let sweep = sweep_star(&model, restrict.as_deref());
            let report = StarReport {
                r#type: "verify-star".into(),
                cartan: g.cartan().to_string(),
                rank: g.rank(),
                intervals: sweep.intervals,
                checked: sweep.checked,
                failures: sweep.failures,
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!(
                    "checked {} divisor pairs across {} intervals, {} failures",
                    report.checked,
                    report.intervals,
                    report.failures.len()
                );
                for f in &report.failures {
                    println!("  failure: {}", serde_json::to_string(f)?);
                }
            }
            Ok(report.failures.len())
        }
        Command::VerifySplitting {
            n,
            prime,
            candidates,
            json,
        } => {
            let model = BigCellModel::build(n, prime)?;
            let extras = match candidates {
                None => Vec::new(),
                Some(path) => load_candidates(&model, &path)?,
            };
            let sweep = model.enumerate_split_primes(&extras);
            let report = SplitReport::from_sweep(&model, &sweep);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!(
                    "SL_{} over F_{}: canonical section {} = ({})^{}",
                    report.n,
                    report.prime,
                    report.canonical_section,
                    report.root,
                    prime - 1
                );
                println!(
                    "{:<28} {:<30} {:>6} {:>9} {:>9}",
                    "candidate", "ideal", "split", "accepted", "matched"
                );
                for c in &report.candidates {
                    println!(
                        "{:<28} {:<30} {:>6} {:>9} {:>9}",
                        c.label,
                        c.ideal,
                        c.split,
                        c.accepted,
                        c.matched
                            .as_ref()
                            .map(|m| format!("{}:{}", m.v, m.w))
                            .unwrap_or_else(|| "-".into()),
                    );
                }
                println!("{} failures", report.failures.len());
                for f in &report.failures {
                    println!("  failure: {} — {}", f.label, f.reason);
                }
            }
            Ok(report.failures.len())
        }
        Command::Decompose {
            n,
            prime,
            matrix,
            json,
        } => {
            let entries = parse_matrix(&matrix, n)?;
            let m = FpMatrix::new(prime, n, entries);
            let g = WeylGroup::generate(CartanType::new(flagsplit::Family::A, n - 1)?)?;
            let schubert = m.bruhat_cell()?;
            let opposite = m.opposite_cell()?;
            let payload = DecomposeJson {
                prime,
                schubert_word: g.word_string(schubert.to_element(&g)?),
                schubert_one_line: schubert.one_line(),
                opposite_word: g.word_string(opposite.to_element(&g)?),
                opposite_one_line: opposite.one_line(),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&payload)?);
            } else {
                println!(
                    "Schubert cell: w = {} (one-line {:?}); opposite cell: a = {} (one-line {:?})",
                    payload.schubert_word,
                    payload.schubert_one_line,
                    payload.opposite_word,
                    payload.opposite_one_line
                );
            }
            Ok(0)
        }
        Command::Export {
            cartan,
            what,
            format,
            seed,
            out,
        } => {
            let g = group(&cartan)?;
            let text = match (what, format) {
                (What::Hasse, Format::Dot) => hasse_dot(&g),
                (What::Hasse, Format::Json) => {
                    serde_json::to_string_pretty(&hasse_json(&g))?
                }
                (What::System, fmt) => {
                    let model = CellModel::new(&g);
                    let seed = resolve_seed(&g, &seed, canonical_seed(&g))?;
                    let sys = System::closure(&model, seed);
                    match fmt {
                        Format::Dot => system_dot(&g, &sys),
                        Format::Json => {
                            let members: Vec<IntervalJson> = sys
                                .members()
                                .iter()
                                .map(|x| IntervalJson::of(&g, x))
                                .collect();
                            serde_json::to_string_pretty(&members)?
                        }
                    }
                }
            };
            match out {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}

fn group(cartan: &str) -> anyhow::Result<WeylGroup> {
    let t: CartanType = cartan.parse()?;
    Ok(WeylGroup::generate(t)?)
}

fn resolve_seed(
    g: &WeylGroup,
    args: &SeedArgs,
    default: Vec<Interval>,
) -> anyhow::Result<Vec<Interval>> {
    if args.seed_all {
        return Ok(all_intervals(g));
    }
    match &args.seed_list {
        None => Ok(default),
        Some(list) => list
            .split(',')
            .map(|s| Ok(Interval::parse(g, s.trim())?))
            .collect(),
    }
}

fn parse_matrix(src: &str, n: usize) -> anyhow::Result<Vec<u64>> {
    let mut entries = Vec::with_capacity(n * n);
    let rows: Vec<&str> = src.split(';').collect();
    if rows.len() != n {
        anyhow::bail!("expected {n} rows separated by ';', got {}", rows.len());
    }
    for row in rows {
        let cells: Vec<&str> = row.split(',').collect();
        if cells.len() != n {
            anyhow::bail!("expected {n} entries per row, got {}", cells.len());
        }
        for cell in cells {
            entries.push(cell.trim().parse::<u64>()?);
        }
    }
    Ok(entries)
}

fn load_candidates(
    model: &BigCellModel,
    path: &str,
) -> anyhow::Result<Vec<(String, ChartIdeal)>> {
    let text = fs::read_to_string(path)?;
    let lists: Vec<Vec<String>> = serde_json::from_str(&text)?;
    let mut out = Vec::new();
    for (k, gens) in lists.into_iter().enumerate() {
        let polys = gens
            .iter()
            .map(|s| Ok(parse_poly(s, model.prime(), model.names())?))
            .collect::<anyhow::Result<Vec<_>>>()?;
        out.push((
            format!("user-candidate {k}"),
            ChartIdeal::new(model.prime(), model.nvars(), polys),
        ));
    }
    Ok(out)
}
