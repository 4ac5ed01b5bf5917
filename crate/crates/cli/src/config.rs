//! Argument parsing, config files and validation.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use partpoly::cyclo::{is_prime, Divisor};
use partpoly::genfun::{stanton_scope, StantonKind};
use partpoly::{Error, Statistic};

#[derive(Parser, Debug)]
#[command(name = "partpoly", version, about = "Exact partition polynomials from the command line")]
struct Cli {
    /// File of `key = value` lines pre-setting any flag; flags given on the
    /// command line win.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "PARTPOLY_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Debug, Clone)]
struct FamilyArgs {
    /// rank, crank, spt-crank, o-rank, unimodal, strongly-unimodal,
    /// tcore-crank, thook, wagner, wagner-printed or parts.
    #[arg(long)]
    family: String,

    /// Parameter of tcore-crank and thook.
    #[arg(long)]
    t: Option<u32>,
}

#[derive(Args, Debug, Clone)]
struct OutArgs {
    /// Output file (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum DivisorArg {
    Cyclotomic,
    Phi2W2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Rank,
    Crank,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Expand a generating function into rows `n,m,count`.
    #[command(args_override_self = true)]
    Expand {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n_max: u32,
        /// Series truncation; defaults to --n-max.
        #[arg(long)]
        truncation: Option<u32>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Tabulate a statistic by enumeration and compare it with the series.
    #[command(args_override_self = true)]
    Oracle {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Certify that Phi_l divides every row on a progression.
    #[command(args_override_self = true)]
    Divide {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long = "mod")]
        modulus: u32,
        #[arg(long)]
        residue: u32,
        #[arg(long, default_value_t = 0)]
        n_min: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        truncation: Option<u32>,
        /// Also require non-negative quotients.
        #[arg(long)]
        require_nonnegative: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check that the values at w = 1 vanish mod l along a progression.
    #[command(args_override_self = true)]
    Congruence {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long = "mod")]
        modulus: u32,
        #[arg(long)]
        residue: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        truncation: Option<u32>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Report which residue classes mod l have every row divisible.
    #[command(args_override_self = true)]
    Search {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long = "mod")]
        modulus: u32,
        #[arg(long)]
        n_max: u32,
        #[arg(long)]
        truncation: Option<u32>,
        #[arg(long, value_enum, default_value = "cyclotomic")]
        divisor: DivisorArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Certify the modified rank and crank polynomials.
    #[command(args_override_self = true)]
    Stanton {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long = "mod")]
        modulus: u32,
        #[arg(long)]
        n_max: u32,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Crank classes of t-cores, t in {5, 7, 11}.
    #[command(args_override_self = true)]
    Tcore {
        #[arg(long)]
        t: u32,
        /// A single size.
        #[arg(long, conflicts_with = "n_max")]
        n: Option<u32>,
        /// Every size up to this one.
        #[arg(long)]
        n_max: Option<u32>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Roots of a principal polynomial and their distribution.
    #[command(args_override_self = true)]
    Roots {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = partpoly::roots::DEFAULT_TOLERANCE)]
        tolerance: f64,
        /// Skip the double-precision stage.
        #[arg(long)]
        force_extended: bool,
        #[arg(long, default_value_t = 30)]
        bins: usize,
        /// Half-width of the annulus around |z| = 1 outside which roots count
        /// as sporadic.
        #[arg(long, default_value_t = partpoly::roots::DEFAULT_SPORADIC_DELTA)]
        delta: f64,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Star discrepancy and log L / d along several n.
    #[command(args_override_self = true)]
    Discrepancy {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_delimiter = ',', default_value = "50,100,150,200")]
        n_list: Vec<u32>,
        #[arg(long, default_value_t = partpoly::roots::DEFAULT_TOLERANCE)]
        tolerance: f64,
        /// Exit 1 unless the discrepancy strictly decreases.
        #[arg(long)]
        require_decreasing: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Draw roots as SVG or CSV, from a roots CSV file or from a family.
    #[command(args_override_self = true)]
    Figure {
        /// Roots CSV as written by `roots --csv`.
        #[arg(long, conflicts_with_all = ["family", "n"])]
        input: Option<PathBuf>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = partpoly::roots::DEFAULT_TOLERANCE)]
        tolerance: f64,
        #[arg(long, value_enum, default_value = "svg")]
        format: Format,
        #[arg(long)]
        title: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Expand,
    Oracle,
    Divide,
    Congruence,
    Search,
    Stanton,
    Tcore,
    Roots,
    Discrepancy,
    Figure,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Expand => "expand",
            CommandKind::Oracle => "oracle",
            CommandKind::Divide => "divide",
            CommandKind::Congruence => "congruence",
            CommandKind::Search => "search",
            CommandKind::Stanton => "stanton",
            CommandKind::Tcore => "tcore",
            CommandKind::Roots => "roots",
            CommandKind::Discrepancy => "discrepancy",
            CommandKind::Figure => "figure",
        }
    }

    const ALL: [CommandKind; 10] = [
        CommandKind::Expand,
        CommandKind::Oracle,
        CommandKind::Divide,
        CommandKind::Congruence,
        CommandKind::Search,
        CommandKind::Stanton,
        CommandKind::Tcore,
        CommandKind::Roots,
        CommandKind::Discrepancy,
        CommandKind::Figure,
    ];
}

/// A fully validated invocation.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub family: Option<Statistic>,
    pub kind: Option<StantonKind>,
    pub t: Option<u32>,
    pub modulus: Option<u32>,
    pub residue: Option<u32>,
    pub n: Option<u32>,
    pub n_min: u32,
    pub n_max: Option<u32>,
    pub n_list: Vec<u32>,
    pub truncation: Option<u32>,
    pub tolerance: f64,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    pub csv: Option<PathBuf>,
    pub input: Option<PathBuf>,
    pub format: Format,
    pub divisor: Divisor,
    pub require_nonnegative: bool,
    pub require_decreasing: bool,
    pub force_extended: bool,
    pub bins: usize,
    pub delta: f64,
    pub title: Option<String>,
    pub jobs: Option<usize>,
}

impl RunConfig {
    fn new(command: CommandKind, jobs: Option<usize>) -> Self {
        RunConfig {
            command,
            family: None,
            kind: None,
            t: None,
            modulus: None,
            residue: None,
            n: None,
            n_min: 0,
            n_max: None,
            n_list: Vec::new(),
            truncation: None,
            tolerance: partpoly::roots::DEFAULT_TOLERANCE,
            out: None,
            svg: None,
            csv: None,
            input: None,
            format: Format::Json,
            divisor: Divisor::Cyclotomic,
            require_nonnegative: false,
            require_decreasing: false,
            force_extended: false,
            bins: 30,
            delta: partpoly::roots::DEFAULT_SPORADIC_DELTA,
            title: None,
            jobs,
        }
    }

    /// Rows to expand: the truncation, or `n_max` when none was given.
    pub fn rows_needed(&self) -> usize {
        self.truncation.or(self.n_max).or(self.n).unwrap_or(0) as usize
    }

    /// Invariants checked before any computation.
    pub fn validate(&self) -> Result<(), String> {
        if !(self.tolerance > 0.0 && self.tolerance <= 1e-4) {
            return Err(format!("tolerance {} must lie in (0, 1e-4]", self.tolerance));
        }
        if let (Some(t), Some(n)) = (self.truncation, self.n_max) {
            if t < n {
                return Err(format!("truncation {t} is below n-max {n}"));
            }
        }
        if let Some(family) = self.family {
            check_family(family)?;
        }
        match self.command {
            CommandKind::Oracle => {
                if matches!(
                    self.family,
                    Some(Statistic::WagnerCrank | Statistic::WagnerCrankPrinted)
                ) {
                    return Err("no enumeration oracle for the wagner families".into());
                }
            }
            CommandKind::Divide => {
                let l = self.modulus.unwrap_or(0);
                if !is_prime(l as u64) {
                    return Err(Error::NotPrime(l as u64).to_string());
                }
                if self.n_min > self.n_max.unwrap_or(0) {
                    return Err("n-min exceeds n-max".into());
                }
            }
            CommandKind::Congruence => {
                if self.modulus == Some(0) {
                    return Err("modulus must be positive".into());
                }
            }
            CommandKind::Search => {
                let l = self.modulus.unwrap_or(0);
                if l == 0 || self.n_max.unwrap_or(0) < l {
                    return Err(format!("search mod {l} needs n-max >= {l}"));
                }
            }
            CommandKind::Stanton => {
                stanton_scope(self.kind.unwrap(), self.modulus.unwrap_or(0))
                    .map_err(|e| e.to_string())?;
            }
            CommandKind::Tcore => {
                if self.n.is_none() && self.n_max.is_none() {
                    return Err("tcore needs --n or --n-max".into());
                }
            }
            CommandKind::Roots => {
                if self.n == Some(0) {
                    return Err("roots need n >= 1".into());
                }
            }
            CommandKind::Discrepancy => {
                if self.n_list.is_empty() || self.n_list.contains(&0) {
                    return Err("n-list must hold positive sizes".into());
                }
            }
            CommandKind::Figure => {
                if self.input.is_none() && (self.family.is_none() || self.n.is_none()) {
                    return Err("figure needs --input or both --family and --n".into());
                }
                if self.format == Format::Json {
                    return Err("figure writes svg or csv".into());
                }
            }
            CommandKind::Expand => {}
        }
        if matches!(self.command, CommandKind::Tcore | CommandKind::Expand | CommandKind::Oracle)
            && self.format == Format::Svg
        {
            return Err(format!("{} writes csv or json", self.command.name()));
        }
        if !(self.delta > 0.0) || self.bins == 0 {
            return Err("bins and delta must be positive".into());
        }
        Ok(())
    }
}

fn check_family(family: Statistic) -> Result<(), String> {
    match family {
        Statistic::TCoreCrank(t) if !matches!(t, 5 | 7 | 11) => {
            Err(Error::UnsupportedModulus(t).to_string())
        }
        Statistic::THook(t) if t < 2 => Err(Error::UnsupportedModulus(t).to_string()),
        _ => Ok(()),
    }
}

fn family(args: &FamilyArgs) -> Result<Statistic, String> {
    Statistic::from_name(&args.family, args.t).map_err(|e| e.to_string())
}

/// Why parsing stopped.
#[derive(Debug)]
pub enum ParseError {
    /// Usage errors, and also `--help` and `--version`.
    Clap(clap::Error),
    Invalid(String),
}

impl ParseError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ParseError::Clap(e) if !e.use_stderr() => 0,
            _ => 2,
        }
    }
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Clap(e) => write!(f, "{e}"),
            ParseError::Invalid(m) => write!(f, "error: {m}"),
        }
    }
}

/// `key = value` lines; `#` starts a comment. Keys are flag names without the
/// leading dashes. `true` turns a switch on, `false` leaves it off, and the
/// key `command` names the subcommand.
fn read_config(path: &Path) -> Result<Vec<(String, String)>, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read config file {}: {e}", path.display()))?;
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("{}:{}: expected key = value", path.display(), i + 1))?;
        let k = k.trim().trim_start_matches("--").replace('_', "-");
        pairs.push((k, v.trim().to_string()));
    }
    Ok(pairs)
}

fn config_path(argv: &[OsString]) -> Option<PathBuf> {
    let mut it = argv.iter().skip(1);
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(p) = s.strip_prefix("--config=") {
            return Some(PathBuf::from(p));
        }
    }
    None
}

/// Splices config-file flags in right after the subcommand name so that
/// anything on the command line comes later and overrides them.
fn merge_config(argv: Vec<OsString>) -> Result<Vec<OsString>, String> {
    let Some(path) = config_path(&argv) else {
        return Ok(argv);
    };
    let pairs = read_config(&path)?;
    let names: Vec<&str> = CommandKind::ALL.iter().map(|c| c.name()).collect();
    let mut argv = argv;
    let mut pos = argv
        .iter()
        .position(|a| names.contains(&a.to_string_lossy().as_ref()));
    let mut flags: Vec<OsString> = Vec::new();
    for (k, v) in pairs {
        if k == "command" {
            if pos.is_none() {
                argv.insert(1, OsString::from(&v));
                pos = Some(1);
            }
            continue;
        }
        match v.as_str() {
            "true" => flags.push(format!("--{k}").into()),
            "false" => {}
            _ => {
                flags.push(format!("--{k}").into());
                flags.push(v.into());
            }
        }
    }
    let Some(pos) = pos else {
        return Err("no subcommand given on the command line or in the config file".into());
    };
    argv.splice(pos + 1..pos + 1, flags);
    Ok(argv)
}

/// Parses and validates a full argument vector, program name first.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, ParseError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let argv = merge_config(argv).map_err(ParseError::Invalid)?;
    let cli = Cli::try_parse_from(argv).map_err(ParseError::Clap)?;
    let cfg = build(cli).map_err(ParseError::Invalid)?;
    cfg.validate().map_err(ParseError::Invalid)?;
    Ok(cfg)
}

fn build(cli: Cli) -> Result<RunConfig, String> {
    let jobs = cli.jobs;
    if jobs == Some(0) {
        return Err("--jobs must be at least 1".into());
    }
    let cfg = match cli.command {
        Cmd::Expand { family: f, n_max, truncation, format, out } => RunConfig {
            family: Some(family(&f)?),
            t: f.t,
            n_max: Some(n_max),
            truncation,
            format,
            out: out.out,
            ..RunConfig::new(CommandKind::Expand, jobs)
        },
        Cmd::Oracle { family: f, n, format, out } => RunConfig {
            family: Some(family(&f)?),
            t: f.t,
            n: Some(n),
            format,
            out: out.out,
            ..RunConfig::new(CommandKind::Oracle, jobs)
        },
        Cmd::Divide { family: f, modulus, residue, n_min, n_max, truncation, require_nonnegative, out } => {
            RunConfig {
                family: Some(family(&f)?),
                t: f.t,
                modulus: Some(modulus),
                residue: Some(residue),
                n_min,
                n_max: Some(n_max),
                truncation,
                require_nonnegative,
                out: out.out,
                ..RunConfig::new(CommandKind::Divide, jobs)
            }
        }
        Cmd::Congruence { family: f, modulus, residue, n_max, truncation, out } => RunConfig {
            family: Some(family(&f)?),
            t: f.t,
            modulus: Some(modulus),
            residue: Some(residue),
            n_max: Some(n_max),
            truncation,
            out: out.out,
            ..RunConfig::new(CommandKind::Congruence, jobs)
        },
        Cmd::Search { family: f, modulus, n_max, truncation, divisor, out } => RunConfig {
            family: Some(family(&f)?),
            t: f.t,
            modulus: Some(modulus),
            n_max: Some(n_max),
            truncation,
            divisor: match divisor {
                DivisorArg::Cyclotomic => Divisor::Cyclotomic,
                DivisorArg::Phi2W2 => Divisor::PhiTwoOfWSquared,
            },
            out: out.out,
            ..RunConfig::new(CommandKind::Search, jobs)
        },
        Cmd::Stanton { kind, modulus, n_max, out } => RunConfig {
            kind: Some(match kind {
                KindArg::Rank => StantonKind::Rank,
                KindArg::Crank => StantonKind::Crank,
            }),
            modulus: Some(modulus),
            n_max: Some(n_max),
            out: out.out,
            ..RunConfig::new(CommandKind::Stanton, jobs)
        },
        Cmd::Tcore { t, n, n_max, format, out } => RunConfig {
            family: Some(Statistic::TCoreCrank(t)),
            t: Some(t),
            n,
            n_max,
            format,
            out: out.out,
            ..RunConfig::new(CommandKind::Tcore, jobs)
        },
        Cmd::Roots { family: f, n, tolerance, force_extended, bins, delta, svg, csv, out } => {
            RunConfig {
                family: Some(family(&f)?),
                t: f.t,
                n: Some(n),
                tolerance,
                force_extended,
                bins,
                delta,
                svg,
                csv,
                out: out.out,
                ..RunConfig::new(CommandKind::Roots, jobs)
            }
        }
        Cmd::Discrepancy { family: f, n_list, tolerance, require_decreasing, out } => RunConfig {
            family: Some(family(&f)?),
            t: f.t,
            n_list,
            tolerance,
            require_decreasing,
            out: out.out,
            ..RunConfig::new(CommandKind::Discrepancy, jobs)
        },
        Cmd::Figure { input, family: name, t, n, tolerance, format, title, out } => RunConfig {
            family: match name {
                Some(name) => Some(Statistic::from_name(&name, t).map_err(|e| e.to_string())?),
                None => None,
            },
            t,
            n,
            input,
            tolerance,
            format,
            title,
            out: Some(out),
            ..RunConfig::new(CommandKind::Figure, jobs)
        },
    };
    Ok(cfg)
}
