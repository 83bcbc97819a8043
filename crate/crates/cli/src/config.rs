//! The experiment description, parsed from the command line and echoed
//! verbatim into every report.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, ValueEnum};
use serde::{Deserialize, Serialize};

use schreier_core::montecarlo::DEFAULT_TRIALS;
use schreier_core::permcore::{DEFAULT_ORDER_CAP, DEFAULT_SUBGROUP_LIMIT};
use schreier_core::spectral::DEFAULT_DIM_CAP;
use schreier_core::sweep::DEFAULT_SEED;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Walk-matrix spectrum of each connection multiset.
    Spectrum,
    /// Every closed-form gap bound next to the measured gap.
    Bounds,
    /// The Θ profile over the subgroups between Y and G.
    Theta,
    /// Reidemeister–Schreier image of each multiset in --subgroup.
    RsInduce,
    /// Monte Carlo check of the random-multiset expansion bound.
    VerifyThm1,
    /// Nilpotent gap bound and derived-index inequality.
    VerifyNilpotent,
    /// Exhaustive search for deduplication counterexamples.
    SearchCounterexample,
    /// The full acceptance matrix.
    Sweep,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Bounds => "bounds",
            Command::Theta => "theta",
            Command::RsInduce => "rs-induce",
            Command::VerifyThm1 => "verify-thm1",
            Command::VerifyNilpotent => "verify-nilpotent",
            Command::SearchCounterexample => "search-counterexample",
            Command::Sweep => "sweep",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

/// Which point stabilizer `Y` the group acts through.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum ActionSpec {
    #[default]
    Regular,
    /// Stabilizer of the first point.
    Natural,
    /// Subgroup generated by the permutations in a group-spec file.
    CosetsOf(PathBuf),
}

impl FromStr for ActionSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "regular" => Ok(ActionSpec::Regular),
            "natural" => Ok(ActionSpec::Natural),
            _ => match s.strip_prefix("cosets-of:") {
                Some(path) if !path.is_empty() => Ok(ActionSpec::CosetsOf(path.into())),
                _ => Err(format!("expected regular, natural or cosets-of:<file>, got `{s}`")),
            },
        }
    }
}

impl fmt::Display for ActionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionSpec::Regular => write!(f, "regular"),
            ActionSpec::Natural => write!(f, "natural"),
            ActionSpec::CosetsOf(p) => write!(f, "cosets-of:{}", p.display()),
        }
    }
}

/// Where the connection multisets come from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum SetSpec {
    /// The group's own generators, as given.
    #[default]
    Gens,
    /// A multiset file, one `cycles * multiplicity` entry per line.
    File(PathBuf),
    /// Entries separated by `;`, in the same syntax as a multiset file.
    Inline(String),
    /// `samples` multisets `S ⊔ S⁻¹`, each from `draws` uniform draws.
    Random { draws: usize, samples: usize },
    AllSymmetricSubsets,
}

impl FromStr for SetSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "gens" {
            return Ok(SetSpec::Gens);
        }
        if s == "all-symmetric-subsets" {
            return Ok(SetSpec::AllSymmetricSubsets);
        }
        if let Some(body) = s.strip_prefix("inline:") {
            return Ok(SetSpec::Inline(body.to_string()));
        }
        if let Some(body) = s.strip_prefix("random:") {
            let bad = || format!("expected random:<draws> or random:<draws>:<samples>, got `{s}`");
            let mut parts = body.split(':');
            let draws: usize = parts.next().and_then(|d| d.parse().ok()).ok_or_else(bad)?;
            let samples: usize = match parts.next() {
                Some(k) => k.parse().map_err(|_| bad())?,
                None => 1,
            };
            if draws == 0 || samples == 0 || parts.next().is_some() {
                return Err(bad());
            }
            return Ok(SetSpec::Random { draws, samples });
        }
        if s.is_empty() {
            return Err("empty set spec".into());
        }
        Ok(SetSpec::File(s.into()))
    }
}

impl fmt::Display for SetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetSpec::Gens => write!(f, "gens"),
            SetSpec::File(p) => write!(f, "{}", p.display()),
            SetSpec::Inline(body) => write!(f, "inline:{body}"),
            SetSpec::Random { draws, samples: 1 } => write!(f, "random:{draws}"),
            SetSpec::Random { draws, samples } => write!(f, "random:{draws}:{samples}"),
            SetSpec::AllSymmetricSubsets => write!(f, "all-symmetric-subsets"),
        }
    }
}

macro_rules! string_conversions {
    ($t:ty) => {
        impl TryFrom<String> for $t {
            type Error = String;
            fn try_from(s: String) -> Result<Self, String> {
                s.parse()
            }
        }
        impl From<$t> for String {
            fn from(v: $t) -> String {
                v.to_string()
            }
        }
    };
}

string_conversions!(ActionSpec);
string_conversions!(SetSpec);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Args)]
pub struct Caps {
    /// Largest group order that will be enumerated.
    #[arg(long = "cap-order", default_value_t = DEFAULT_ORDER_CAP, value_parser = positive)]
    pub order: usize,
    /// Largest number of subgroups in an interval [Y, G].
    #[arg(long = "cap-subgroups", default_value_t = DEFAULT_SUBGROUP_LIMIT, value_parser = positive)]
    pub subgroups: usize,
    /// Largest walk-matrix dimension.
    #[arg(long = "cap-dim", default_value_t = DEFAULT_DIM_CAP, value_parser = positive)]
    pub dim: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { order: DEFAULT_ORDER_CAP, subgroups: DEFAULT_SUBGROUP_LIMIT, dim: DEFAULT_DIM_CAP }
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize, Parser)]
#[command(name = "schreier", version, about = "Spectra and expansion bounds of Schreier graphs")]
pub struct ExperimentConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Catalog name (e.g. `sym:4`, `dihedral:8`, `cyclic:4×cyclic:2`) or a group-spec file.
    #[arg(long)]
    pub group: Option<String>,
    /// regular | natural | cosets-of:<file>
    #[arg(long, default_value = "regular")]
    pub action: ActionSpec,
    /// gens | <file> | inline:<entries> | random:<m>[:<k>] | all-symmetric-subsets
    #[arg(long, default_value = "gens")]
    pub set: SetSpec,
    /// Replace each multiset S by S ⊔ S⁻¹.
    #[arg(long)]
    pub symmetrize: bool,
    /// H for rs-induce and search-counterexample: a catalog name or group-spec file.
    #[arg(long)]
    pub subgroup: Option<String>,
    #[arg(long)]
    pub epsilon: Option<f64>,
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_TRIALS, value_parser = positive)]
    pub trials: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Report path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
    #[command(flatten)]
    pub caps: Caps,
    /// Write each walk matrix to this path (suffixed `.i` when there are several).
    #[arg(long)]
    pub dump_matrix: Option<PathBuf>,
}

/// Default ε and δ for verify-thm1.
pub const DEFAULT_EPSILON: f64 = 0.25;
pub const DEFAULT_DELTA: f64 = 0.25;

impl ExperimentConfig {
    /// A config for `command` with every other field at its default.
    pub fn new(command: Command) -> Self {
        ExperimentConfig {
            command,
            group: None,
            action: ActionSpec::default(),
            set: SetSpec::default(),
            symmetrize: false,
            subgroup: None,
            epsilon: None,
            delta: None,
            trials: DEFAULT_TRIALS,
            seed: DEFAULT_SEED,
            out: None,
            format: OutputFormat::Json,
            caps: Caps::default(),
            dump_matrix: None,
        }
    }

    /// Command-line arguments (without the program name) that parse back to `self`.
    pub fn to_args(&self) -> Vec<String> {
        let mut a = vec![self.command.name().to_string()];
        let mut push = |flag: &str, value: String| {
            a.push(format!("--{flag}"));
            a.push(value);
        };
        if let Some(g) = &self.group {
            push("group", g.clone());
        }
        push("action", self.action.to_string());
        push("set", self.set.to_string());
        if let Some(h) = &self.subgroup {
            push("subgroup", h.clone());
        }
        if let Some(e) = self.epsilon {
            push("epsilon", format!("{e:?}"));
        }
        if let Some(d) = self.delta {
            push("delta", format!("{d:?}"));
        }
        push("trials", self.trials.to_string());
        push("seed", self.seed.to_string());
        if let Some(o) = &self.out {
            push("out", o.display().to_string());
        }
        push("format", match self.format {
            OutputFormat::Json => "json".into(),
            OutputFormat::Csv => "csv".into(),
        });
        push("cap-order", self.caps.order.to_string());
        push("cap-subgroups", self.caps.subgroups.to_string());
        push("cap-dim", self.caps.dim.to_string());
        if let Some(d) = &self.dump_matrix {
            push("dump-matrix", d.display().to_string());
        }
        if self.symmetrize {
            a.push("--symmetrize".into());
        }
        a
    }

    /// Checks the cross-field requirements clap cannot express.
    pub fn validate(&self) -> Result<(), String> {
        if self.command != Command::Sweep && self.group.is_none() {
            return Err(format!("--group is required for {}", self.command.name()));
        }
        if matches!(self.command, Command::RsInduce | Command::SearchCounterexample) && self.subgroup.is_none() {
            return Err(format!("--subgroup is required for {}", self.command.name()));
        }
        Ok(())
    }

    pub fn epsilon_or_default(&self) -> f64 {
        self.epsilon.unwrap_or(DEFAULT_EPSILON)
    }

    pub fn delta_or_default(&self) -> f64 {
        self.delta.unwrap_or(DEFAULT_DELTA)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> ExperimentConfig {
        ExperimentConfig::try_parse_from(std::iter::once("schreier").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn defaults() {
        let c = parse(&["bounds", "--group", "sym:4"]);
        assert_eq!(c.action, ActionSpec::Regular);
        assert_eq!(c.set, SetSpec::Gens);
        assert_eq!(c.seed, DEFAULT_SEED);
        assert_eq!(c.trials, DEFAULT_TRIALS);
        assert_eq!(c.caps, Caps::default());
        assert!(c.validate().is_ok());
    }

    #[test]
    fn spec_strings_round_trip() {
        for s in ["regular", "natural", "cosets-of:y.txt"] {
            assert_eq!(s.parse::<ActionSpec>().unwrap().to_string(), s);
        }
        for s in ["gens", "all-symmetric-subsets", "random:5", "random:5:7", "inline:(1 2);(2 3) * 2", "sets/s.txt"] {
            assert_eq!(s.parse::<SetSpec>().unwrap().to_string(), s);
        }
        assert_eq!("random:3:1".parse::<SetSpec>().unwrap(), SetSpec::Random { draws: 3, samples: 1 });
        for bad in ["random:0", "random:x", "random:2:0", "random:1:2:3", ""] {
            assert!(bad.parse::<SetSpec>().is_err(), "{bad}");
        }
        assert!("cosets-of:".parse::<ActionSpec>().is_err());
        assert!("orbit".parse::<ActionSpec>().is_err());
    }

    #[test]
    fn args_and_json_round_trip() {
        let c = parse(&[
            "verify-thm1", "--group", "sym:6", "--action", "natural", "--set", "random:4:3", "--epsilon", "0.1",
            "--delta", "0.3", "--trials", "12", "--seed", "9", "--format", "csv", "--cap-dim", "50", "--symmetrize",
            "--subgroup", "alt:6", "--dump-matrix", "m.txt", "--out", "r.csv",
        ]);
        let again = ExperimentConfig::try_parse_from(std::iter::once("schreier".to_string()).chain(c.to_args())).unwrap();
        assert_eq!(again, c);
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<ExperimentConfig>(&json).unwrap(), c);
        assert!(json.contains("\"set\":\"random:4:3\""));
    }

    #[test]
    fn rejects_bad_fields() {
        let err = ExperimentConfig::try_parse_from(["schreier", "bounds", "--cap-order", "0"]).unwrap_err();
        assert!(err.to_string().contains("--cap-order"));
        let err = ExperimentConfig::try_parse_from(["schreier", "bounds", "--action", "orbit"]).unwrap_err();
        assert!(err.to_string().contains("--action"));
        assert!(parse(&["bounds"]).validate().unwrap_err().contains("--group"));
        assert!(parse(&["rs-induce", "--group", "sym:3"]).validate().unwrap_err().contains("--subgroup"));
        assert!(parse(&["sweep"]).validate().is_ok());
    }
}
