//! Command-line front end for the `anyonsim` binary.
//!
//! A run is described by a [`RunConfig`], read from an optional JSON file and
//! then overridden by flags. Results go to the `--out` directory:
//!
//! | subcommand  | files |
//! |-------------|-------|
//! | `validate`  | none; the consistency report is printed |
//! | `interfere` | `trajectories.jsonl`, `summary.csv`, `asymptotic.json` |
//! | `twisted`   | `twisted_histogram.csv`, `twisted_posts.json`, `magic.json` |
//! | `protocol`  | `protocol.json` |
//! | `sweep`     | `sweep.csv` |
//! | `dump`      | `dump.json` |
//!
//! Exit codes: 0 success, 1 validation failure, 2 usage error, 3 numeric error.
//! Config twists `[l, r]` name the left and right arm twists; `[0, 2]` is the
//! double twist of the Ising qubit protocol and routes `interfere` to `twisted`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nalgebra::DMatrix;
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::gates::{
    clifford_library, magic_state, protocol_check, protocol_unitary, sample_twisted, synthesize_magic_state,
    twisted_measure, ProtocolOutcome, QubitCharge, QubitDensity, TwistRules, TwistedQubitChannel,
};
use crate::interferometer::{
    asymptotic_measure, equivalence_classes, probe_probability, simulate_batch, AnyonicDensityMatrix,
    EquivalenceClasses, InterferometerConfig, ProbeOutcome,
};
use crate::linalg::{to_pairs, vec_to_pairs};
use crate::model::{build_model, ising, load_model, trivial, verify_consistency, AnyonModel, ModelSpec};
use crate::rng::mix_seed;
use crate::surgery::{modular_b_alias, modular_matrices, twisted_operator};
use crate::{Error, Result, C64};

const FIBONACCI_JSON: &str = include_str!("../models/fibonacci.json");
const SEMION_JSON: &str = include_str!("../models/semion.json");

#[derive(Debug, Parser)]
#[command(name = "anyonsim", version, about = "Anyonic interferometry simulator")]
pub struct Cli {
    #[command(flatten)]
    pub flags: Flags,
    #[command(subcommand)]
    pub command: Command,
}

/// Flags shared by every subcommand; each overrides the config file.
#[derive(Debug, Clone, Default, Args)]
pub struct Flags {
    /// Built-in model (ising, trivial, fibonacci, semion) or a model JSON path.
    #[arg(long, global = true)]
    pub model: Option<String>,
    /// JSON run configuration.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Probes per trajectory (N).
    #[arg(long, global = true)]
    pub probes: Option<usize>,
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Output directory.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Arm twists as `l,r`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub twists: Option<TwistPair>,
    /// Initial qubit population of |0>.
    #[arg(long, global = true)]
    pub rho00: Option<f64>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check the model axioms.
    Validate,
    /// Seeded untwisted probe streams.
    Interfere,
    /// Twisted-interferometry statistics on the Ising qubit.
    Twisted,
    /// Phase-gate protocol table and first-principles check.
    Protocol,
    /// Scan one scalar parameter.
    Sweep(SweepArgs),
    /// Modular matrices and twisted operators as JSON.
    Dump,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub param: SweepParam,
    #[arg(long, allow_negative_numbers = true)]
    pub from: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub to: f64,
    #[arg(long, default_value_t = 11)]
    pub steps: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    /// Path-phase difference theta_I - theta_II.
    Delta,
    /// Initial population of |0>.
    Rho00,
    /// `|t1|^2 = |t2|^2` with real splitter amplitudes.
    Transmissivity,
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepParam::Delta => "delta",
            SweepParam::Rho00 => "rho00",
            SweepParam::Transmissivity => "transmissivity",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistPair(pub i32, pub i32);

impl FromStr for TwistPair {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let (l, r) = s.split_once(',').ok_or_else(|| format!("expected `l,r`, got `{s}`"))?;
        let parse = |x: &str| x.trim().parse::<i32>().map_err(|e| format!("`{x}`: {e}"));
        Ok(TwistPair(parse(l)?, parse(r)?))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ModelSource {
    Builtin(String),
    File(PathBuf),
}

impl ModelSource {
    pub const BUILTINS: [&'static str; 4] = ["ising", "trivial", "fibonacci", "semion"];

    pub fn parse(s: &str) -> Self {
        if Self::BUILTINS.contains(&s) {
            ModelSource::Builtin(s.to_string())
        } else {
            ModelSource::File(PathBuf::from(s))
        }
    }

    pub fn load(&self) -> Result<AnyonModel> {
        match self {
            ModelSource::Builtin(name) => match name.as_str() {
                "ising" => Ok(ising()),
                "trivial" => Ok(trivial()),
                "fibonacci" => build_model(&ModelSpec::from_json(FIBONACCI_JSON)?),
                "semion" => build_model(&ModelSpec::from_json(SEMION_JSON)?),
                other => Err(Error::Usage(format!("unknown built-in model `{other}`"))),
            },
            ModelSource::File(path) => load_model(path),
        }
    }
}

/// Keys accepted in a JSON run configuration.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    model: Option<String>,
    t1: Option<[f64; 2]>,
    r1: Option<[f64; 2]>,
    t2: Option<[f64; 2]>,
    r2: Option<[f64; 2]>,
    #[serde(rename = "theta_I")]
    theta_i: Option<f64>,
    #[serde(rename = "theta_II")]
    theta_ii: Option<f64>,
    probe: Option<String>,
    twists: Option<[i32; 2]>,
    #[serde(rename = "N")]
    n: Option<usize>,
    trials: Option<usize>,
    seed: Option<u64>,
    out: Option<PathBuf>,
    rho00: Option<f64>,
    rho01: Option<[f64; 2]>,
}

/// A validated run description.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub model: ModelSource,
    pub t1: C64,
    pub r1: C64,
    pub t2: C64,
    pub r2: C64,
    pub theta_i: f64,
    pub theta_ii: f64,
    pub probe: String,
    pub twists: (i32, i32),
    /// Probes per trajectory.
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub out: PathBuf,
    /// Initial Ising-qubit state.
    pub rho00: f64,
    pub rho01: C64,
}

impl Default for RunConfig {
    fn default() -> Self {
        let h = C64::new(FRAC_1_SQRT_2, 0.0);
        RunConfig {
            model: ModelSource::Builtin("ising".into()),
            t1: h,
            r1: h,
            t2: h,
            r2: h,
            theta_i: 0.0,
            theta_ii: 0.0,
            probe: "sigma".into(),
            twists: (0, 0),
            n: 100,
            trials: 1,
            seed: 0,
            out: PathBuf::from("anyonsim-out"),
            rho00: 0.5,
            rho01: C64::new(0.0, 0.0),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Usage("trials must be at least 1".into()));
        }
        if let ModelSource::File(path) = &self.model {
            if !path.is_file() {
                return Err(Error::Usage(format!("model file `{}` does not exist", path.display())));
            }
        }
        self.splitters(crate::Charge::VACUUM).validate()?;
        self.qubit_density()?;
        Ok(())
    }

    fn splitters(&self, probe: crate::Charge) -> InterferometerConfig {
        InterferometerConfig {
            t1: self.t1,
            r1: self.r1,
            t2: self.t2,
            r2: self.r2,
            theta_i: self.theta_i,
            theta_ii: self.theta_ii,
            probe,
            twists: (0, 0),
        }
    }

    /// Untwisted interferometer for `model`, with the probe resolved by name.
    pub fn interferometer(&self, model: &AnyonModel) -> Result<InterferometerConfig> {
        let config = self.splitters(model.charge(&self.probe)?);
        config.validate()?;
        Ok(config)
    }

    pub fn qubit_density(&self) -> Result<QubitDensity> {
        QubitDensity::from_entries(self.rho00, self.rho01)
    }

    pub fn twist_rules(&self) -> TwistRules {
        match self.twists {
            (0, 0) => TwistRules::DOUBLE_RIGHT,
            (l, r) => TwistRules { l, r },
        }
    }
}

fn complex(pair: [f64; 2]) -> C64 {
    C64::new(pair[0], pair[1])
}

/// Reads `path` (if any), applies `flags` on top, and validates the result.
pub fn parse_config(path: Option<&Path>, flags: &Flags) -> Result<RunConfig> {
    let file = match path {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Usage(format!("cannot read config `{}`: {e}", path.display())))?;
            serde_json::from_str::<FileConfig>(&text).map_err(|e| {
                Error::Parse(format!(
                    "{}: line {}, column {}: {e}",
                    path.display(),
                    e.line(),
                    e.column()
                ))
            })?
        }
        None => FileConfig::default(),
    };
    let mut config = RunConfig::default();
    if let Some(m) = file.model {
        config.model = ModelSource::parse(&m);
    }
    for (slot, value) in [
        (&mut config.t1, file.t1),
        (&mut config.r1, file.r1),
        (&mut config.t2, file.t2),
        (&mut config.r2, file.r2),
    ] {
        if let Some(v) = value {
            *slot = complex(v);
        }
    }
    config.theta_i = file.theta_i.unwrap_or(config.theta_i);
    config.theta_ii = file.theta_ii.unwrap_or(config.theta_ii);
    config.probe = file.probe.unwrap_or(config.probe);
    if let Some([l, r]) = file.twists {
        config.twists = (l, r);
    }
    config.n = file.n.unwrap_or(config.n);
    config.trials = file.trials.unwrap_or(config.trials);
    config.seed = file.seed.unwrap_or(config.seed);
    config.out = file.out.unwrap_or(config.out);
    config.rho00 = file.rho00.unwrap_or(config.rho00);
    config.rho01 = file.rho01.map(complex).unwrap_or(config.rho01);

    if let Some(m) = &flags.model {
        config.model = ModelSource::parse(m);
    }
    config.n = flags.probes.unwrap_or(config.n);
    config.trials = flags.trials.unwrap_or(config.trials);
    config.seed = flags.seed.unwrap_or(config.seed);
    if let Some(out) = &flags.out {
        config.out = out.clone();
    }
    if let Some(TwistPair(l, r)) = flags.twists {
        config.twists = (l, r);
    }
    config.rho00 = flags.rho00.unwrap_or(config.rho00);
    config.validate()?;
    Ok(config)
}

/// Process exit code for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Usage(_) | Error::Parse(_) => 2,
        Error::ZeroProbability(_) | Error::DegenerateTuning { .. } => 3,
        _ => 1,
    }
}

/// Files written by one run, removed again if the run fails.
#[derive(Debug)]
struct Artifacts {
    dir: PathBuf,
    written: Vec<PathBuf>,
}

impl Artifacts {
    fn new(dir: &Path) -> Self {
        Artifacts {
            dir: dir.to_path_buf(),
            written: Vec::new(),
        }
    }

    fn write(&mut self, name: &str, contents: &[u8]) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.dir.join(name);
        self.written.push(path.clone());
        fs::write(&path, contents)?;
        Ok(())
    }

    fn write_json(&mut self, name: &str, value: &Value) -> Result<()> {
        let mut text = serde_json::to_string_pretty(value).expect("JSON values serialize");
        text.push('\n');
        self.write(name, text.as_bytes())
    }

    fn discard(&mut self) {
        for path in self.written.drain(..) {
            let _ = fs::remove_file(path);
        }
    }
}

/// Runs `command` and returns the exit code; the error path removes partial output.
pub fn execute(config: &RunConfig, command: &Command) -> Result<i32> {
    let mut artifacts = Artifacts::new(&config.out);
    let result = match command {
        Command::Validate => validate(config),
        Command::Interfere if config.twists != (0, 0) => twisted(config, &mut artifacts),
        Command::Interfere => interfere(config, &mut artifacts),
        Command::Twisted => twisted(config, &mut artifacts),
        Command::Protocol => protocol(&mut artifacts),
        Command::Sweep(args) => sweep(config, args, &mut artifacts),
        Command::Dump => dump(config, &mut artifacts),
    };
    if result.is_err() {
        artifacts.discard();
    }
    result
}

/// Entry point for the binary.
pub fn run(cli: &Cli) -> i32 {
    let outcome = parse_config(cli.flags.config.as_deref(), &cli.flags).and_then(|c| execute(&c, &cli.command));
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code(&err)
        }
    }
}

fn validate(config: &RunConfig) -> Result<i32> {
    match config.model.load() {
        Ok(model) => {
            let report = verify_consistency(&model);
            println!("{report}");
            println!("max residual {:e}", report.max_residual());
            Ok(if report.passed() { 0 } else { 1 })
        }
        Err(Error::ConsistencyViolation(report)) => {
            println!("{report}");
            println!("max residual {:e}", report.max_residual());
            Ok(1)
        }
        Err(e) => Err(e),
    }
}

fn class_label(model: &AnyonModel, members: &[crate::Charge]) -> String {
    members
        .iter()
        .map(|&c| model.charge_name(c))
        .collect::<Vec<_>>()
        .join("+")
}

fn dominant_class(model: &AnyonModel, rho: &AnyonicDensityMatrix, classes: &EquivalenceClasses) -> String {
    let mut best = (f64::NEG_INFINITY, String::new());
    for class in &classes.classes {
        let w = rho.weight_of(&class.members);
        if w > best.0 {
            best = (w, class_label(model, &class.members));
        }
    }
    best.1
}

fn csv_bytes(header: &[String], rows: &[Vec<String>]) -> Result<Vec<u8>> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let to_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
    writer.write_record(header).map_err(to_err)?;
    for row in rows {
        writer.write_record(row).map_err(to_err)?;
    }
    writer
        .into_inner()
        .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))
}

fn interfere(config: &RunConfig, artifacts: &mut Artifacts) -> Result<i32> {
    let model = config.model.load()?;
    let ic = config.interferometer(&model)?;
    let rho = AnyonicDensityMatrix::ising_qubit_entries(&model, config.rho00, config.rho01)?;
    let batch = simulate_batch(&model, &rho, &ic, config.n, config.trials, config.seed)?;
    let classes = equivalence_classes(&model, ic.probe, &ic);
    let asymptotic = asymptotic_measure(&model, &rho, &ic)?;

    let mut lines = String::new();
    for (trial, t) in batch.iter().enumerate() {
        for step in &t.steps {
            let line = json!({
                "trial": trial,
                "k": step.k,
                "s": step.outcome.symbol(),
                "p_s": step.probability,
                "coherence": step.coherence,
            });
            lines.push_str(&line.to_string());
            lines.push('\n');
        }
    }
    let header = ["trial", "seed", "n", "N", "fraction", "collapsed_class"].map(String::from);
    let rows: Vec<Vec<String>> = batch
        .iter()
        .enumerate()
        .map(|(trial, t)| {
            vec![
                trial.to_string(),
                t.seed.to_string(),
                t.n_transmitted.to_string(),
                t.len().to_string(),
                t.fraction().to_string(),
                dominant_class(&model, &t.final_state, &classes),
            ]
        })
        .collect();
    let table: Vec<Value> = asymptotic
        .iter()
        .map(|o| {
            json!({
                "class": o.class.members.iter().map(|&c| model.charge_name(c)).collect::<Vec<_>>(),
                "transmission": o.class.transmission,
                "probability": o.probability,
                "state": to_pairs(o.state.matrix()),
            })
        })
        .collect();

    artifacts.write("trajectories.jsonl", lines.as_bytes())?;
    artifacts.write("summary.csv", &csv_bytes(&header, &rows)?)?;
    artifacts.write_json("asymptotic.json", &Value::Array(table))?;

    let mean = batch.iter().map(|t| t.fraction()).sum::<f64>() / batch.len() as f64;
    println!(
        "{} trials x {} probes, probe {}: mean transmitted fraction {mean}",
        config.trials, config.n, config.probe
    );
    for o in &asymptotic {
        println!(
            "class {} (p = {}): probability {}",
            class_label(&model, &o.class.members),
            o.class.transmission,
            o.probability
        );
    }
    Ok(0)
}

fn twisted(config: &RunConfig, artifacts: &mut Artifacts) -> Result<i32> {
    let model = config.model.load()?;
    let rules = config.twist_rules();
    let channel = TwistedQubitChannel::new(&model, rules)?;
    let extrapolated = channel.is_extrapolated();
    if extrapolated {
        eprintln!(
            "warning: twists ({}, {}) give total {}; only the double twist is established",
            rules.l,
            rules.r,
            rules.total()
        );
    }
    let rho = config.qubit_density()?;
    let samples: Vec<(QubitCharge, QubitDensity)> = (0..config.trials as u64)
        .into_par_iter()
        .map(|i| {
            let seed = mix_seed(config.seed, i);
            if extrapolated {
                channel.sample(&rho, seed)
            } else {
                sample_twisted(&rho, seed)
            }
        })
        .collect::<Result<_>>()?;

    let mut rows = Vec::new();
    let mut posts = Vec::new();
    let mut magic = Vec::new();
    for a in QubitCharge::BOTH {
        let measured = if extrapolated {
            channel.measure(&rho, a)
        } else {
            twisted_measure(&rho, a)
        };
        let (probability, post) = match measured {
            Ok((p, post)) => (p, Some(post)),
            Err(Error::ZeroProbability(p)) => (p, None),
            Err(e) => return Err(e),
        };
        let count = samples.iter().filter(|(b, _)| *b == a).count();
        rows.push(vec![
            a.name().to_string(),
            count.to_string(),
            (count as f64 / samples.len() as f64).to_string(),
            probability.to_string(),
        ]);
        posts.push(json!({
            "a": a.name(),
            "probability": probability,
            "post": post.map(|p| to_pairs(p.matrix())),
        }));
        let target = magic_state(a);
        let made = synthesize_magic_state(&channel, a);
        magic.push(json!({
            "a": a.name(),
            "magic_state": vec_to_pairs(&target.amplitudes()),
            "synthesized": vec_to_pairs(&made.amplitudes()),
            "fidelity": target.fidelity(&made),
        }));
        println!("a = {a}: {count}/{} draws, Pr = {probability}", samples.len());
    }
    let header = ["outcome", "count", "frequency", "probability"].map(String::from);
    artifacts.write("twisted_histogram.csv", &csv_bytes(&header, &rows)?)?;
    artifacts.write_json(
        "twisted_posts.json",
        &json!({ "twists": [rules.l, rules.r], "extrapolated": extrapolated, "outcomes": posts }),
    )?;
    artifacts.write_json("magic.json", &Value::Array(magic))?;
    Ok(0)
}

fn protocol(artifacts: &mut Artifacts) -> Result<i32> {
    let mut table = Vec::new();
    println!("a    alpha  U_11 phase/pi  evaluated phase/pi  residual");
    for outcome in ProtocolOutcome::all() {
        let u = protocol_unitary(outcome);
        let check = protocol_check(outcome);
        let residual = check.residual();
        println!(
            "{:<4} {:<6} {:>+14.6} {:>+19.6}  {residual:.3e}",
            outcome.a.name(),
            outcome.alpha.name(),
            u[(1, 1)].arg() / std::f64::consts::PI,
            check.ratio().arg() / std::f64::consts::PI,
        );
        table.push(json!({
            "a": outcome.a.name(),
            "alpha": outcome.alpha.name(),
            "unitary": to_pairs(&u),
            "evaluated": to_pairs(&check.operator()),
            "raw": vec_to_pairs(&check.raw),
            "residual": residual,
        }));
    }
    let lib = clifford_library();
    let gates = json!({
        "H": to_pairs(&lib.h),
        "sigma_x": to_pairs(&lib.sigma_x),
        "Pi0": to_pairs(&lib.pi0),
        "Pi1": to_pairs(&lib.pi1),
        "R_pi_4": to_pairs(&lib.phase(std::f64::consts::FRAC_PI_4)),
    });
    artifacts.write_json("protocol.json", &json!({ "outcomes": table, "gates": gates }))?;
    Ok(0)
}

fn grid(from: f64, to: f64, steps: usize) -> Result<Vec<f64>> {
    match steps {
        0 => Err(Error::Usage("sweep needs at least one step".into())),
        1 => Ok(vec![from]),
        _ => Ok((0..steps)
            .map(|i| from + (to - from) * i as f64 / (steps - 1) as f64)
            .collect()),
    }
}

fn sweep(config: &RunConfig, args: &SweepArgs, artifacts: &mut Artifacts) -> Result<i32> {
    let model = config.model.load()?;
    let base = config.interferometer(&model)?;
    let classes = equivalence_classes(&model, base.probe, &base);
    let mut header = vec![args.param.to_string(), "pr_transmit".to_string()];
    header.extend(
        classes
            .classes
            .iter()
            .map(|k| format!("p_{}", class_label(&model, &k.members))),
    );
    header.push("mean_fraction".into());

    let mut rows = Vec::new();
    for x in grid(args.from, args.to, args.steps)? {
        let mut point = config.clone();
        match args.param {
            SweepParam::Delta => {
                point.theta_i = x;
                point.theta_ii = 0.0;
            }
            SweepParam::Rho00 => point.rho00 = x,
            SweepParam::Transmissivity => {
                if !(0.0..=1.0).contains(&x) {
                    return Err(Error::Usage(format!("transmissivity {x} outside [0, 1]")));
                }
                let (t, r) = (C64::new(x.sqrt(), 0.0), C64::new((1.0 - x).sqrt(), 0.0));
                (point.t1, point.r1, point.t2, point.r2) = (t, r, t, r);
            }
        }
        let ic = point.interferometer(&model)?;
        let rho = AnyonicDensityMatrix::ising_qubit_entries(&model, point.rho00, point.rho01)?;
        let mut row = vec![
            x.to_string(),
            probe_probability(&model, &rho, &ic, ProbeOutcome::Transmitted)?.to_string(),
        ];
        row.extend(
            equivalence_classes(&model, ic.probe, &ic)
                .classes
                .iter()
                .map(|k| k.transmission.to_string()),
        );
        let batch = simulate_batch(&model, &rho, &ic, point.n, point.trials, point.seed)?;
        let mean = batch.iter().map(|t| t.fraction()).sum::<f64>() / batch.len() as f64;
        row.push(mean.to_string());
        rows.push(row);
    }
    artifacts.write("sweep.csv", &csv_bytes(&header, &rows)?)?;
    println!("{} points over {}", rows.len(), args.param);
    Ok(0)
}

fn dump(config: &RunConfig, artifacts: &mut Artifacts) -> Result<i32> {
    let model = config.model.load()?;
    let rules = config.twist_rules();
    let mm = modular_matrices(&model);
    let twisted: serde_json::Map<String, Value> = model
        .charges()
        .map(|c| {
            let op = twisted_operator(&model, c, rules.total());
            (model.charge_name(c).to_string(), json!(vec_to_pairs(op.entries())))
        })
        .collect();
    let as_dense = |m: &DMatrix<C64>| to_pairs(m);
    let value = json!({
        "model": model.name(),
        "charges": model.charge_names(),
        "S": as_dense(&mm.s),
        "T": as_dense(&mm.t),
        "B": as_dense(&mm.b),
        "B_alias": as_dense(&modular_b_alias(&model)),
        "monodromy": as_dense(model.monodromy_matrix()),
        "total_twists": rules.total(),
        "O_t": twisted,
    });
    artifacts.write_json("dump.json", &value)?;
    println!("wrote {}", config.out.join("dump.json").display());
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_pair_parsing() {
        assert_eq!("0,2".parse::<TwistPair>().unwrap(), TwistPair(0, 2));
        assert_eq!("-1, 3".parse::<TwistPair>().unwrap(), TwistPair(-1, 3));
        assert!("2".parse::<TwistPair>().is_err());
    }

    #[test]
    fn defaults_without_config() {
        let c = parse_config(None, &Flags::default()).unwrap();
        assert_eq!(c.n, 100);
        assert_eq!(c.trials, 1);
        assert_eq!(c.seed, 0);
        assert_eq!(c.theta_i - c.theta_ii, 0.0);
        assert!((c.t1.re - FRAC_1_SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn zero_trials_is_usage_error() {
        let flags = Flags {
            trials: Some(0),
            ..Flags::default()
        };
        let err = parse_config(None, &flags).unwrap_err();
        assert_eq!(exit_code(&err), 2);
    }

    #[test]
    fn grid_endpoints() {
        assert_eq!(grid(0.0, 1.0, 3).unwrap(), vec![0.0, 0.5, 1.0]);
        assert_eq!(grid(2.0, 5.0, 1).unwrap(), vec![2.0]);
        assert!(grid(0.0, 1.0, 0).is_err());
    }

    #[test]
    fn builtin_models_load() {
        for name in ModelSource::BUILTINS {
            assert!(ModelSource::parse(name).load().is_ok(), "{name}");
        }
    }
}
