use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use moead_workbench::error::{Error, Result};
use moead_workbench::formats::{read_objective_vectors, read_solution_file};
use moead_workbench::harness::{self, GridStudySpec};
use moead_workbench::indicators::igd_points;
use moead_workbench::moead::{self, RunConfig};
use moead_workbench::problems::{
    front_file_name, sample_reference_front, write_front_file, ProblemId, ProblemInstance,
    DEFAULT_FRONT_SIZE,
};
use moead_workbench::subset::{dss_select, write_selected_file, SelectionRequest};
use moead_workbench::tuner::{self, TunerConfig};

#[derive(Parser)]
#[command(name = "moead-workbench", version, about = "MOEA/D experiments: runs, grid studies, tuning and statistics")]
struct Cli {
    /// Overrides the seed (run seed, grid base seed or tuner master seed).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads for batch commands.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run MOEA/D once from a RunConfig JSON file.
    Run {
        config: PathBuf,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Execute a grid study from a GridStudySpec JSON file.
    Grid {
        spec: PathBuf,
        #[arg(long, short)]
        out: PathBuf,
        /// Also persist every run's result set here.
        #[arg(long)]
        artifacts: Option<PathBuf>,
    },
    /// Run the configuration tuner from a TunerConfig JSON file.
    Tune {
        config: PathBuf,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// Pick k well-spread members from an archive file.
    Select {
        archive: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long, short)]
        out: PathBuf,
    },
    /// IGD of a result or archive file against a front file.
    Igd { result: PathBuf, front: PathBuf },
    /// Sample reference-front files.
    Fronts {
        #[arg(long, short)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_FRONT_SIZE)]
        size: usize,
        /// Problems to sample; all eight by default.
        #[arg(long, value_delimiter = ',')]
        problems: Vec<ProblemId>,
    },
    /// Rank-sum test between two columns of a CSV file (A relative to B).
    Stats {
        csv: PathBuf,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value_t = 0.05)]
        alpha: f64,
    },
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn column(path: &Path, name: &str) -> Result<Vec<f64>> {
    let mut rdr = csv::Reader::from_path(path)?;
    let idx = rdr
        .headers()?
        .iter()
        .position(|h| h == name)
        .ok_or_else(|| Error::InvalidInput(format!("no column '{name}' in {}", path.display())))?;
    let mut out = Vec::new();
    for rec in rdr.records() {
        let rec = rec?;
        let cell = rec.get(idx).unwrap_or("").trim();
        if cell.is_empty() {
            continue;
        }
        out.push(cell.parse().map_err(|_| Error::Format {
            path: path.to_path_buf(),
            reason: format!("'{cell}' in column '{name}' is not a number"),
        })?);
    }
    Ok(out)
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run { config, out } => {
            let mut cfg: RunConfig = read_json(&config)?;
            if let Some(s) = cli.seed {
                cfg.seed = s;
            }
            let result = moead::run(&cfg)?;
            harness::write_run_outputs(&out, &result)?;
            println!(
                "evaluations={} archive={} -> {}",
                result.evaluations_used,
                result.archive.members.len(),
                out.display()
            );
        }
        Command::Grid { spec, out, artifacts } => {
            let mut spec: GridStudySpec = read_json(&spec)?;
            if let Some(s) = cli.seed {
                spec.base_seed = s;
            }
            let table = harness::run_grid(&spec, artifacts.as_deref())?;
            harness::write_grid_outputs(&out, &spec, &table)?;
            println!("{} runs, {} cells -> {}", table.rows.len(), table.summaries.len(), out.display());
        }
        Command::Tune { config, out } => {
            let mut cfg: TunerConfig = read_json(&config)?;
            if let Some(s) = cli.seed {
                cfg.master_seed = s;
            }
            let outcome = tuner::tune(&cfg)?;
            std::fs::create_dir_all(&out)?;
            tuner::write_log_csv(std::fs::File::create(out.join("log.csv"))?, &outcome.log)?;
            let best = serde_json::json!({
                "problem": cfg.problem,
                "framework": cfg.framework,
                "bits": outcome.best.label(),
                "decoded": outcome.best.decoded,
                "fitness": outcome.best.fitness,
                "genome_evaluations": outcome.genome_evaluations,
                "moead_runs": outcome.moead_runs,
            });
            std::fs::write(out.join("best.json"), serde_json::to_string_pretty(&best)? + "\n")?;
            println!("best {} {} fitness={}", outcome.best.label(), outcome.best.decoded, outcome.best.fitness);
        }
        Command::Select { archive, k, out } => {
            let file = read_solution_file(&archive)?;
            let selected = dss_select(&SelectionRequest::from_solutions(&file.solutions, k))?;
            let name = archive.file_name().map_or_else(String::new, |n| n.to_string_lossy().into_owned());
            write_selected_file(&out, &name, k, &selected)?;
            println!("selected {} of {} -> {}", selected.len(), file.solutions.len(), out.display());
        }
        Command::Igd { result, front } => {
            let set = read_objective_vectors(&result)?;
            let reference = read_objective_vectors(&front)?;
            println!("{}", igd_points(&set, &reference)?);
        }
        Command::Fronts { out, size, problems } => {
            std::fs::create_dir_all(&out)?;
            let list = if problems.is_empty() { ProblemId::ALL.to_vec() } else { problems };
            for id in list {
                let points = sample_reference_front(&ProblemInstance::standard(id), size)?;
                let path = out.join(front_file_name(id));
                write_front_file(&path, id, &points)?;
                println!("{id}: {} points -> {}", points.len(), path.display());
            }
        }
        Command::Stats { csv, a, b, alpha } => {
            let r = harness::wilcoxon_rank_sum(&column(&csv, &a)?, &column(&csv, &b)?, alpha)?;
            println!("statistic={} p_value={} verdict={}", r.statistic, r.p_value, r.verdict);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
