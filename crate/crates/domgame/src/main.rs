use clap::{Parser, Subcommand, ValueEnum};
use domgame::bounds::{self, Verdict};
use domgame::error::Result;
use domgame::game::Player;
use domgame::gen::{gen_min_degree_graph, GenModel};
use domgame::graph::Graph;
use domgame::scheme::{Family, Params};
use domgame::solver;
use domgame::strategy::{self, Policy};
use domgame::verify::{load_corpus, verify_corpus, VerifyConfig};
use num::ToPrimitive;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "domgame",
    about = "Domination-game solver, greedy strategy simulator and bound verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Auto,
    TwoThirds,
    Deg3,
    Mindeg,
}

#[derive(Clone, Copy, ValueEnum)]
enum StallerArg {
    Random,
    MinGain,
    Worst,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    RegularPairing,
    DegreeFloorRepair,
}

#[derive(Subcommand)]
enum Command {
    /// Exact domination number of the graph in FILE.
    Gamma { file: PathBuf },
    /// Exact game domination number (Staller-start with the flag).
    Solve {
        file: PathBuf,
        #[arg(long)]
        staller_start: bool,
    },
    /// Simulate one greedy-Dominator game and print (or save) its trace.
    Play {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        family: FamilyArg,
        /// Degree parameter for --family mindeg (default: the graph's
        /// minimum degree).
        #[arg(long)]
        d: Option<i64>,
        #[arg(long, value_enum, default_value = "worst")]
        staller: StallerArg,
        /// Seed for --staller random; falls back to DOMGAME_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        staller_start: bool,
        /// Write the JSON trace here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Longest game the worst-case Staller forces against the greedy
    /// Dominator.
    Worst {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        family: FamilyArg,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        staller_start: bool,
    },
    /// Value-assignment coefficients for minimum degree d.
    Params {
        #[arg(long)]
        d: i64,
    },
    /// Compare the polynomial and logarithmic bound coefficients.
    Bounds {
        /// Inclusive degree range, e.g. 3..21.
        #[arg(long, value_parser = parse_range)]
        d_range: (i64, i64),
    },
    /// Generate minimum-degree graphs as graph6 lines.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, value_enum, default_value = "regular-pairing")]
        model: ModelArg,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value = "1")]
        count: u64,
    },
    /// Verify every graph in a corpus directory against all applicable
    /// bounds and lemma checks.
    Verify {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value = "22")]
        cap: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

fn parse_range(s: &str) -> std::result::Result<(i64, i64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s}"))?;
    let lo = lo.trim().parse().map_err(|e| format!("{e}"))?;
    let hi = hi.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((lo, hi))
}

fn default_seed(cli_seed: Option<u64>) -> u64 {
    cli_seed.or_else(|| {
        std::env::var("DOMGAME_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(0)
}

/// Reads a graph file: `.g6` extension (or a parseable graph6 line)
/// means graph6, anything else is an edge list.
fn read_graph(path: &PathBuf) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "g6") {
        return Graph::parse_graph6(text.trim());
    }
    match Graph::parse_edge_list(&text) {
        Ok(g) => Ok(g),
        Err(e) => Graph::parse_graph6(text.trim()).map_err(|_| e),
    }
}

fn pick_family(g: &Graph, arg: FamilyArg, d: Option<i64>) -> Result<Family> {
    match arg {
        FamilyArg::Auto => Family::auto(g),
        FamilyArg::TwoThirds => Ok(Family::TwoThirds),
        FamilyArg::Deg3 => Ok(Family::Deg3),
        FamilyArg::Mindeg => {
            let d = d.unwrap_or(g.min_degree() as i64);
            Family::min_deg(d)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Gamma { file } => {
            let g = read_graph(&file)?;
            println!("{}", solver::domination_number(&g)?);
        }
        Command::Solve {
            file,
            staller_start,
        } => {
            let g = read_graph(&file)?;
            let first = if staller_start {
                Player::Staller
            } else {
                Player::Dominator
            };
            println!("{}", solver::game_value(&g, first)?);
        }
        Command::Play {
            file,
            family,
            d,
            staller,
            seed,
            staller_start,
            json,
        } => {
            let g = read_graph(&file)?;
            let fam = pick_family(&g, family, d)?;
            let staller = match staller {
                StallerArg::Random => Policy::RandomStaller {
                    seed: default_seed(seed),
                },
                StallerArg::MinGain => Policy::MinGainStaller,
                StallerArg::Worst => Policy::WorstCaseStaller,
            };
            let first = if staller_start {
                Player::Staller
            } else {
                Player::Dominator
            };
            let trace =
                strategy::play_game(&g, fam, &Policy::GreedyDominator, &staller, first)?;
            let body = trace.to_json()?;
            match json {
                Some(path) => std::fs::write(path, body)?,
                None => println!("{body}"),
            }
            if !trace.violations.is_empty() {
                eprintln!("{} lemma violation(s)", trace.violations.len());
                return Ok(ExitCode::from(1));
            }
        }
        Command::Worst {
            file,
            family,
            d,
            staller_start,
        } => {
            let g = read_graph(&file)?;
            let fam = pick_family(&g, family, d)?;
            let first = if staller_start {
                Player::Staller
            } else {
                Player::Dominator
            };
            let len = strategy::worst_case_length_vs_greedy(
                &g,
                fam,
                first,
                strategy::DEFAULT_SEARCH_BUDGET,
            )?;
            println!("{len}");
        }
        Command::Params { d } => {
            let p = Params::new(d)?;
            println!("{}", serde_json::to_string_pretty(&p)?);
        }
        Command::Bounds { d_range } => {
            let rows = bounds::compare_bounds(d_range.0, d_range.1)?;
            println!("{:>3} {:>22} {:>12} {:>12}  verdict", "d", "polynomial", "poly~", "log~");
            for row in rows {
                let verdict = match row.verdict {
                    Verdict::PolynomialWins => "polynomial",
                    Verdict::LogWins => "log",
                    Verdict::Indecisive => "indecisive",
                };
                println!(
                    "{:>3} {:>22} {:>12.6} {:>12.6}  {verdict}",
                    row.d,
                    row.poly.to_string(),
                    row.poly.to_f64().unwrap_or(f64::NAN),
                    row.log_hi.to_f64().unwrap_or(f64::NAN),
                );
            }
        }
        Command::Gen {
            n,
            delta,
            model,
            seed,
            count,
        } => {
            let model = match model {
                ModelArg::RegularPairing => GenModel::RegularPairing,
                ModelArg::DegreeFloorRepair => GenModel::DegreeFloorRepair,
            };
            let base = default_seed(seed);
            for i in 0..count {
                let g = gen_min_degree_graph(n, delta, model, base.wrapping_add(i))?;
                println!("{}", g.to_graph6());
            }
        }
        Command::Verify {
            corpus,
            cap,
            csv,
            json,
        } => {
            let entries = load_corpus(&corpus)?;
            let cfg = VerifyConfig {
                cap,
                ..Default::default()
            };
            let report = verify_corpus(&entries, cfg);
            if let Some(path) = csv {
                std::fs::write(path, report.to_csv())?;
            }
            if let Some(path) = json {
                std::fs::write(path, report.to_json()?)?;
            }
            println!(
                "graphs: {}  rows: {}  passed: {}  failed: {}",
                report.graphs,
                report.rows.len(),
                report.passed,
                report.failed
            );
            if !report.all_pass() {
                for row in report.rows.iter().filter(|r| !r.pass) {
                    eprintln!(
                        "FAIL {} [{}] {}",
                        row.graph_id, row.bound_family, row.note
                    );
                }
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

// Keep clap's derive honest about the argument surface.
#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_parses() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn range_parser() {
        assert_eq!(parse_range("3..21").unwrap(), (3, 21));
        assert!(parse_range("7").is_err());
    }
}
