use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use simple_games::coalition::Coalition;
use simple_games::games::{CarrierWitness, Game, TraceStep, ValidationReport, Verdict};
use simple_games::io::{GameSpec, ProfileSpec};
use simple_games::nakamura::{nakamura_grounded, NakamuraResult};
use simple_games::properties::{
    all_reports, find_min_carrier, veto_players, PropertyReport, DEFAULT_MAX_SUPPORT,
};
use simple_games::social_choice::{
    cycle_profile_witness, dominance, find_cycle, verify_acyclicity_bound, verify_nakamura,
    Alternatives, Profile, SearchConfig, SearchMode, VerificationReport,
};
use simple_games::Error;

#[derive(Parser)]
#[command(
    name = "sgames",
    version,
    about = "Analyze simple games given as JSON files"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every property checker
    Analyze {
        #[command(flatten)]
        game: GameArg,
        /// Largest permutation support tried by the anonymity check
        #[arg(long, default_value_t = DEFAULT_MAX_SUPPORT)]
        max_support: usize,
    },
    /// Print the determining-string form of a game
    Extract {
        #[command(flatten)]
        game: GameArg,
    },
    /// Nakamura number with a witness family
    Nakamura {
        #[command(flatten)]
        game: GameArg,
    },
    /// Dominance relation and core of a profile
    Core {
        #[command(flatten)]
        game: GameArg,
        #[arg(long)]
        profile: PathBuf,
    },
    /// Profile whose dominance relation is a full cycle
    WitnessCycle {
        #[command(flatten)]
        game: GameArg,
        #[command(flatten)]
        alternatives: AlternativesArg,
    },
    /// Check core nonemptiness below the Nakamura number and emptiness from it on
    VerifyNakamura {
        #[command(flatten)]
        game: GameArg,
        /// Largest number of alternatives checked
        #[arg(long, default_value_t = 4)]
        alternatives: usize,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check acyclicity of dominance instead of core nonemptiness
        #[arg(long)]
        acyclicity: bool,
    },
    /// Trace the construction from an `enum_construction` game file
    EnumSim {
        #[command(flatten)]
        game: GameArg,
    },
    /// Verdict of one coalition
    Eval {
        #[command(flatten)]
        game: GameArg,
        /// `{0,2}`, `co{1}` or `0110+0`
        #[arg(long)]
        coalition: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct GameArg {
    #[arg(long = "game")]
    path: PathBuf,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct AlternativesArg {
    /// Use alternatives x1, ..., xN
    #[arg(long)]
    alternatives: Option<usize>,
    /// Take the alternatives from a profile file
    #[arg(long)]
    profile: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Analysis(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Analysis(e.to_string())
        }
    }
}

type Outcome = Result<String, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
}

fn load_spec(arg: &GameArg) -> Result<GameSpec, Failure> {
    Ok(GameSpec::from_json(&read(&arg.path)?)?)
}

fn load_game(arg: &GameArg) -> Result<Game, Failure> {
    Ok(load_spec(arg)?.game()?)
}

fn load_profile(path: &Path) -> Result<Profile, Failure> {
    Ok(ProfileSpec::from_json(&read(path)?)?.to_profile()?)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

#[derive(Serialize)]
struct AnalyzeReport {
    properties: Vec<PropertyReport>,
    veto_players: Coalition,
    min_carrier: Option<Coalition>,
}

fn analyze(game: &GameArg, max_support: usize) -> Outcome {
    let g = load_game(game)?.ground()?;
    Ok(json(&AnalyzeReport {
        properties: all_reports(&g, max_support),
        veto_players: veto_players(&g),
        min_carrier: find_min_carrier(&g),
    }))
}

fn extract(game: &GameArg) -> Outcome {
    let prefix = load_game(game)?.to_prefix()?;
    Ok(GameSpec::from_game(&prefix.into()).to_json())
}

fn nakamura(game: &GameArg) -> Outcome {
    let result: NakamuraResult = nakamura_grounded(&load_game(game)?.ground()?)?;
    Ok(json(&result))
}

#[derive(Serialize)]
struct LabelledPair {
    winner: String,
    loser: String,
    coalition: Vec<usize>,
}

#[derive(Serialize)]
struct CoreReport {
    dominance: Vec<LabelledPair>,
    core: Vec<String>,
    cycle: Option<Vec<String>>,
}

fn labels(alternatives: &Alternatives, xs: impl IntoIterator<Item = usize>) -> Vec<String> {
    xs.into_iter()
        .map(|x| alternatives.label(x).to_string())
        .collect()
}

fn core(game: &GameArg, profile: &Path) -> Outcome {
    let g = load_game(game)?.ground()?;
    let p = load_profile(profile)?;
    let d = dominance(&g, &p)?;
    let alternatives = p.alternatives();
    let pairs = d
        .pairs()
        .iter()
        .map(|pair| LabelledPair {
            winner: alternatives.label(pair.winner).to_string(),
            loser: alternatives.label(pair.loser).to_string(),
            coalition: pair.coalition.prefix_members().collect(),
        })
        .collect();
    Ok(json(&CoreReport {
        dominance: pairs,
        core: labels(alternatives, simple_games::social_choice::core_of(&d)),
        cycle: find_cycle(&d).map(|c| labels(alternatives, c)),
    }))
}

#[derive(Serialize)]
struct CycleReport {
    family: Vec<Vec<usize>>,
    partition: Vec<Vec<usize>>,
    profile: ProfileSpec,
    cycle: Vec<String>,
    core: Vec<String>,
}

fn witness_cycle(game: &GameArg, arg: &AlternativesArg) -> Outcome {
    let g = load_game(game)?.ground()?;
    let alternatives = match (&arg.alternatives, &arg.profile) {
        (Some(r), _) => Alternatives::indexed(*r)?,
        (None, Some(path)) => load_profile(path)?.alternatives().clone(),
        (None, None) => unreachable!("clap requires one of the two"),
    };
    let w = cycle_profile_witness(&g, &alternatives)?;
    let members = |cs: &[Coalition]| cs.iter().map(|c| c.prefix_members().collect()).collect();
    let cycle = find_cycle(&w.dominance).expect("the witness dominance is a cycle");
    Ok(json(&CycleReport {
        family: members(&w.family),
        partition: members(&w.partition),
        profile: ProfileSpec::from_profile(&w.profile),
        cycle: labels(&alternatives, cycle),
        core: labels(&alternatives, w.core.iter().copied()),
    }))
}

fn verify(game: &GameArg, r_max: usize, config: SearchConfig, acyclicity: bool) -> Outcome {
    let g = load_game(game)?.ground()?;
    let report: VerificationReport = if acyclicity {
        verify_acyclicity_bound(&g, r_max, &config)?
    } else {
        verify_nakamura(&g, r_max, &config)?
    };
    if !report.passed() {
        return Err(Failure::Analysis(format!(
            "{} violation(s) found\n{}",
            report.total_violations(),
            json(&report)
        )));
    }
    Ok(json(&report))
}

#[derive(Serialize)]
struct EnumReport {
    entries: Vec<(usize, u8)>,
    trace: Vec<TraceStep>,
    game: GameSpec,
    validation: ValidationReport,
    /// The determining strings cover the injected entries only; totality is
    /// relative to them.
    relative_to_entries: bool,
    no_finite_carrier_witness: Vec<CarrierWitness>,
}

fn enum_sim(game: &GameArg) -> Outcome {
    let (_, construction) = load_spec(game)?.build()?;
    let c = construction.ok_or_else(|| {
        Failure::Input("enum-sim needs a game file of type enum_construction".into())
    })?;
    Ok(json(&EnumReport {
        entries: c
            .enumeration
            .entries()
            .iter()
            .map(|&(k, v)| (k, v as u8))
            .collect(),
        trace: c.trace.clone(),
        game: GameSpec::from_game(&c.game.clone().into()),
        validation: c.game.validate(),
        relative_to_entries: true,
        no_finite_carrier_witness: c.no_finite_carrier_witness(),
    }))
}

#[derive(Serialize)]
struct EvalReport {
    coalition: Coalition,
    verdict: Verdict,
}

fn eval(game: &GameArg, coalition: &str, as_json: bool) -> Outcome {
    let g = load_game(game)?;
    let c: Coalition = coalition.parse()?;
    let verdict = g.eval(&c)?;
    if let Verdict::Undetermined(reason) = &verdict {
        return Err(Failure::Analysis(format!(
            "coalition {c} is undetermined: {reason}"
        )));
    }
    Ok(if as_json {
        json(&EvalReport {
            coalition: c,
            verdict,
        })
    } else {
        verdict.to_string()
    })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Analyze { game, max_support } => analyze(&game, max_support),
        Command::Extract { game } => extract(&game),
        Command::Nakamura { game } => nakamura(&game),
        Command::Core { game, profile } => core(&game, &profile),
        Command::WitnessCycle { game, alternatives } => witness_cycle(&game, &alternatives),
        Command::VerifyNakamura {
            game,
            alternatives,
            mode,
            samples,
            seed,
            acyclicity,
        } => {
            let mode = match mode {
                Mode::Exhaustive => SearchMode::Exhaustive,
                Mode::Sampled => SearchMode::Sampled,
            };
            let config = SearchConfig {
                mode,
                samples,
                seed,
                ..SearchConfig::default()
            };
            verify(&game, alternatives, config, acyclicity)
        }
        Command::EnumSim { game } => enum_sim(&game),
        Command::Eval {
            game,
            coalition,
            json,
        } => eval(&game, &coalition, json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            // a closed pipe is not an error worth reporting
            let _ = writeln!(io::stdout().lock(), "{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Analysis(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
