//! Command-line interface over the library: enumeration, counting,
//! statistics, parking functions, the recursive formulas, and the verifier.
//!
//! Output is deterministic.  Rows are JSON-lines by default; `--format csv`
//! and `--format table` flatten the same rows (nested values are printed as
//! compact JSON).  The first line of every run echoes the effective
//! configuration.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use schroder_lab::counting::{count_parking_closed, count_schroder};
use schroder_lab::lattice::{enumerate_paths, PathSpec, Rat, SlopeMode};
use schroder_lab::parking::{brute_count_parking, is_parking, parking_set};
use schroder_lab::recursions::{
    BetaIndexMode, Evaluator, PschBoundaryMode, SplitIndexMode, VariantConfig,
};
use schroder_lab::stats::{area, dinv, DinvVariant, Interpretation};
use schroder_lab::verifier::{self, CheckReport, Status, VerifyLimits};

#[derive(Parser)]
#[command(name = "schroder-lab", version, about = "Exact (r-)Schröder path laboratory")]
struct Cli {
    /// Output format for data rows.
    #[arg(long, global = true, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
    /// Write rows to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    #[value(alias = "integer", alias = "intslope")]
    IntegerSlope,
    #[value(alias = "unitfrac")]
    UnitFraction,
}

impl From<ModeArg> for SlopeMode {
    fn from(m: ModeArg) -> SlopeMode {
        match m {
            ModeArg::IntegerSlope => SlopeMode::IntegerSlope,
            ModeArg::UnitFraction => SlopeMode::UnitFraction,
        }
    }
}

#[derive(Debug, Clone, Args)]
struct FamilyArgs {
    /// Path family kind.
    #[arg(long, value_enum, default_value_t = ModeArg::IntegerSlope)]
    mode: ModeArg,
    /// Size parameter n.
    #[arg(long)]
    n: u64,
    /// Number of down steps d.
    #[arg(long)]
    d: u64,
    /// Slope parameter r.
    #[arg(long, default_value_t = 1)]
    r: u64,
    /// Constraint offset: forbid vertices more than h units below the
    /// boundary line.
    #[arg(long = "h")]
    constraint: Option<u64>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<PathSpec, String> {
        let spec = PathSpec::new(self.mode.into(), self.n, self.d, self.r)
            .map_err(|e| e.to_string())?;
        match self.constraint {
            Some(h) => spec.with_constraint(h).map_err(|e| e.to_string()),
            None => Ok(spec),
        }
    }

    fn describe(&self) -> Value {
        json!({
            "mode": format!("{:?}", self.mode),
            "n": self.n,
            "d": self.d,
            "r": self.r,
            "h": self.constraint,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CountKind {
    Closed,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    SchroderR1,
    Haiman,
    ProposedD1,
}

impl From<VariantArg> for DinvVariant {
    fn from(v: VariantArg) -> DinvVariant {
        match v {
            VariantArg::SchroderR1 => DinvVariant::SchroderR1,
            VariantArg::Haiman => DinvVariant::Haiman,
            VariantArg::ProposedD1 => DinvVariant::ProposedD1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InterpArg {
    LeftArea,
    /// Default: the interpretation the verifier validates for the proved
    /// identities.
    LineArea,
}

impl From<InterpArg> for Interpretation {
    fn from(v: InterpArg) -> Interpretation {
        match v {
            InterpArg::LeftArea => Interpretation::LeftArea,
            InterpArg::LineArea => Interpretation::LineArea,
        }
    }
}

#[derive(Debug, Clone, Args)]
struct VariantFlags {
    /// Reading of beta_i in the composition sums.
    #[arg(long, value_enum, default_value_t = BetaArg::PartialSum)]
    beta: BetaArg,
    /// Handling of families with no diagonal group.
    #[arg(long, value_enum, default_value_t = BoundaryArg::RegionFallback)]
    boundary: BoundaryArg,
    /// Outer binomial indexing of the pentagon splits.
    #[arg(long, value_enum, default_value_t = SplitArg::Repaired)]
    split: SplitArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BetaArg {
    Literal,
    PartialSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundaryArg {
    Literal,
    RegionFallback,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SplitArg {
    Literal,
    Repaired,
}

impl VariantFlags {
    fn config(&self) -> VariantConfig {
        VariantConfig {
            beta_index_mode: match self.beta {
                BetaArg::Literal => BetaIndexMode::LiteralBetaI,
                BetaArg::PartialSum => BetaIndexMode::PartialSumBeta,
            },
            psch_degenerate_mode: match self.boundary {
                BoundaryArg::Literal => PschBoundaryMode::LiteralFormula,
                BoundaryArg::RegionFallback => PschBoundaryMode::RegionFallback,
            },
            split_index_mode: match self.split {
                SplitArg::Literal => SplitIndexMode::LiteralShift,
                SplitArg::Repaired => SplitIndexMode::Repaired,
            },
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Stream every path of a family.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        /// Stop after this many paths.
        #[arg(long)]
        max_items: Option<u64>,
    },
    /// Count a family, by closed form or by enumeration.
    Count {
        #[arg(value_enum)]
        kind: CountKind,
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Per-path area and dinv statistics.
    Stats {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_enum)]
        variant: VariantArg,
        #[arg(long, value_enum, default_value_t = InterpArg::LineArea)]
        interpretation: InterpArg,
        #[arg(long)]
        max_items: Option<u64>,
    },
    /// Parking functions of a family.
    Parking {
        #[command(subcommand)]
        action: ParkingAction,
    },
    /// Evaluate one of the recursive formulas.
    Formula {
        #[command(subcommand)]
        formula: FormulaCmd,
    },
    /// Run the adjudication checks and emit reports.
    Verify {
        #[arg(value_enum)]
        scope: VerifyScope,
        #[arg(long, default_value_t = 4)]
        max_n: u64,
        #[arg(long, default_value_t = 2)]
        max_r: u64,
    },
}

#[derive(Subcommand)]
enum ParkingAction {
    /// Closed-form and brute-force parking counts.
    Count {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// List every parking function, path by path.
    List {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        max_items: Option<u64>,
    },
    /// Factor a sequence such as "0b,4,0,4,2b" into path and permutation.
    Factor {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        seq: String,
    },
}

#[derive(Subcommand)]
enum FormulaCmd {
    /// Unit-fraction pentagon count.
    G {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        /// Rational corner, e.g. "3/2" or "2".
        #[arg(long, default_value = "0")]
        p: String,
        #[arg(long, default_value_t = 1)]
        r: i64,
        #[arg(long, default_value_t = 0)]
        q: i64,
    },
    /// Integer-slope pentagon count.
    E {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long, default_value = "0")]
        p: String,
        #[arg(long, default_value_t = 1)]
        r: i64,
        #[arg(long, default_value_t = 0)]
        q: i64,
    },
    /// Hexagon count.
    H {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long, default_value = "0")]
        p: String,
        #[arg(long, default_value_t = 1)]
        r: i64,
        #[arg(long, default_value_t = 0)]
        q: i64,
        #[arg(long, default_value_t = 0)]
        s: i64,
    },
    /// Composition sum over i pentagons.
    F {
        #[arg(long)]
        i: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 1)]
        r: u64,
        #[command(flatten)]
        variant: VariantFlags,
    },
    /// Parking count of the unit-fraction family.
    Psch {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 1)]
        r: u64,
        #[command(flatten)]
        variant: VariantFlags,
    },
    /// Constrained parking count of the unit-fraction family.
    Chsch {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, default_value_t = 1)]
        r: u64,
        #[arg(long = "h")]
        constraint: u64,
        #[command(flatten)]
        variant: VariantFlags,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyScope {
    All,
    Annexe1,
    Qidentity,
    Symmetry,
    Pentagon,
    Psch,
    Hexagon,
    Chsch,
}

struct Sink {
    out: Box<dyn Write>,
    format: Format,
}

impl Sink {
    fn new(path: &Option<PathBuf>, format: Format) -> io::Result<Sink> {
        let out: Box<dyn Write> = match path {
            Some(p) => Box::new(BufWriter::new(File::create(p)?)),
            None => Box::new(BufWriter::new(io::stdout())),
        };
        Ok(Sink { out, format })
    }

    fn emit(&mut self, value: &Value) -> io::Result<()> {
        match self.format {
            Format::Jsonl => writeln!(self.out, "{}", serde_json::to_string(value)?),
            Format::Csv => {
                let row = flatten(value)
                    .into_iter()
                    .map(|(_, v)| csv_field(&v))
                    .collect::<Vec<_>>()
                    .join(",");
                writeln!(self.out, "{row}")
            }
            Format::Table => {
                let row = flatten(value)
                    .into_iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join("  ");
                writeln!(self.out, "{row}")
            }
        }
    }
}

/// Flatten one JSON object into (key, rendered value) pairs in key order.
fn flatten(value: &Value) -> Vec<(String, String)> {
    match value {
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| {
                let rendered = match v {
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                };
                (k.clone(), rendered)
            })
            .collect(),
        other => vec![("value".into(), other.to_string())],
    }
}

fn csv_field(v: &str) -> String {
    if v.contains(',') || v.contains('"') {
        format!("\"{}\"", v.replace('"', "\"\""))
    } else {
        v.to_string()
    }
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    match s.split_once('/') {
        Some((num, den)) => {
            let n: i64 = num.trim().parse().map_err(|e| format!("bad numerator: {e}"))?;
            let d: i64 = den.trim().parse().map_err(|e| format!("bad denominator: {e}"))?;
            if d == 0 {
                return Err("zero denominator".into());
            }
            Ok(Rat::new(n, d))
        }
        None => s
            .trim()
            .parse::<i64>()
            .map(Rat::from_integer)
            .map_err(|e| format!("bad rational: {e}")),
    }
}

/// Parse a sequence such as "0b,4,0,4,2b" into (value, bar) symbols.
fn parse_seq(s: &str) -> Result<Vec<(u64, bool)>, String> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            let (digits, bar) = match tok.strip_suffix(['b', 'B']) {
                Some(rest) => (rest, true),
                None => (tok, false),
            };
            digits
                .parse::<u64>()
                .map(|v| (v, bar))
                .map_err(|e| format!("bad symbol {tok:?}: {e}"))
        })
        .collect()
}

fn code_json(code: &schroder_lab::lattice::AreaCode) -> Value {
    Value::Array(
        code.entries
            .iter()
            .map(|e| json!({"v": e.value, "bar": e.bar}))
            .collect(),
    )
}

fn report_json(r: &CheckReport) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let mut sink = Sink::new(&cli.out, cli.format).map_err(|e| e.to_string())?;
    let emit = |sink: &mut Sink, v: &Value| sink.emit(v).map_err(|e| e.to_string());

    match cli.command {
        Command::Enumerate { family, max_items } => {
            let spec = family.spec()?;
            emit(
                &mut sink,
                &json!({"config": {"command": "enumerate", "family": family.describe(), "max_items": max_items}}),
            )?;
            let limit = max_items.unwrap_or(u64::MAX);
            for (i, path) in enumerate_paths(&spec).enumerate() {
                if i as u64 >= limit {
                    break;
                }
                let code = path.encode();
                emit(
                    &mut sink,
                    &json!({"steps": path.steps_string(), "code": code_json(&code)}),
                )?;
            }
        }
        Command::Count { kind, family } => {
            let spec = family.spec()?;
            emit(
                &mut sink,
                &json!({"config": {"command": "count", "kind": format!("{kind:?}"), "family": family.describe()}}),
            )?;
            let value = match kind {
                CountKind::Closed => {
                    if family.constraint.is_some() {
                        return Err("closed-form counts have no constraint parameter".into());
                    }
                    match spec.mode {
                        SlopeMode::IntegerSlope => count_schroder(family.n, family.d, family.r),
                        SlopeMode::UnitFraction => {
                            if family.d % family.r != 0 {
                                num_bigint::BigUint::from(0u32)
                            } else {
                                count_schroder(family.n, family.d / family.r, family.r)
                            }
                        }
                    }
                    .to_string()
                }
                CountKind::Brute => enumerate_paths(&spec).count().to_string(),
            };
            emit(&mut sink, &json!({"count": value}))?;
        }
        Command::Stats {
            family,
            variant,
            interpretation,
            max_items,
        } => {
            let spec = family.spec()?;
            let variant: DinvVariant = variant.into();
            let interp: Interpretation = interpretation.into();
            emit(
                &mut sink,
                &json!({"config": {"command": "stats", "family": family.describe(),
                         "variant": variant.label(), "interpretation": interp.label()}}),
            )?;
            let limit = max_items.unwrap_or(u64::MAX);
            for (i, path) in enumerate_paths(&spec).enumerate() {
                if i as u64 >= limit {
                    break;
                }
                let code = path.encode();
                let a = area(&code).map_err(|e| e.to_string())?;
                let dv = dinv(&code, variant, interp).map_err(|e| e.to_string())?;
                emit(
                    &mut sink,
                    &json!({
                        "steps": path.steps_string(),
                        "code": code.to_string(),
                        "area": a,
                        "dinv": dv,
                        "variant": variant.label(),
                        "interpretation": interp.label(),
                    }),
                )?;
            }
        }
        Command::Parking { action } => match action {
            ParkingAction::Count { family } => {
                let spec = family.spec()?;
                emit(
                    &mut sink,
                    &json!({"config": {"command": "parking-count", "family": family.describe()}}),
                )?;
                let brute = brute_count_parking(&spec).to_string();
                let closed = if spec.mode == SlopeMode::IntegerSlope && family.constraint.is_none()
                {
                    match count_parking_closed(family.n, family.d, family.r) {
                        Ok(v) => v.to_string(),
                        Err(e) => format!("error: {e}"),
                    }
                } else {
                    "n/a".to_string()
                };
                emit(&mut sink, &json!({"brute": brute, "closed": closed}))?;
            }
            ParkingAction::List { family, max_items } => {
                let spec = family.spec()?;
                emit(
                    &mut sink,
                    &json!({"config": {"command": "parking-list", "family": family.describe(), "max_items": max_items}}),
                )?;
                let limit = max_items.unwrap_or(u64::MAX);
                let mut emitted = 0u64;
                'outer: for path in enumerate_paths(&spec) {
                    for seq in parking_set(&path) {
                        if emitted >= limit {
                            break 'outer;
                        }
                        emitted += 1;
                        let rendered: Vec<String> = seq
                            .iter()
                            .map(|&(v, bar)| if bar { format!("{v}b") } else { v.to_string() })
                            .collect();
                        emit(
                            &mut sink,
                            &json!({"path": path.steps_string(), "seq": rendered.join(",")}),
                        )?;
                    }
                }
            }
            ParkingAction::Factor { family, seq } => {
                let spec = family.spec()?;
                let symbols = parse_seq(&seq)?;
                emit(
                    &mut sink,
                    &json!({"config": {"command": "parking-factor", "family": family.describe(), "seq": seq}}),
                )?;
                match is_parking(&symbols, &spec) {
                    Some(fact) => emit(
                        &mut sink,
                        &json!({
                            "parking": true,
                            "path": fact.path.steps_string(),
                            "code": fact.path.encode().to_string(),
                            "sigma": fact.sigma,
                        }),
                    )?,
                    None => emit(&mut sink, &json!({"parking": false}))?,
                }
            }
        },
        Command::Formula { formula } => {
            let mut ev = Evaluator::new();
            let (params, result): (Value, Result<num_bigint::BigUint, _>) = match formula {
                FormulaCmd::G { a, b, p, r, q } => {
                    let p = parse_rat(&p)?;
                    (
                        json!({"formula": "g", "a": a, "b": b, "p": p.to_string(), "r": r, "q": q}),
                        ev.g(a, b, p, r, q),
                    )
                }
                FormulaCmd::E { a, b, p, r, q } => {
                    let p = parse_rat(&p)?;
                    (
                        json!({"formula": "e", "a": a, "b": b, "p": p.to_string(), "r": r, "q": q}),
                        ev.e(a, b, p, r, q),
                    )
                }
                FormulaCmd::H { a, b, p, r, q, s } => {
                    let p = parse_rat(&p)?;
                    (
                        json!({"formula": "h", "a": a, "b": b, "p": p.to_string(), "r": r, "q": q, "s": s}),
                        ev.h(a, b, p, r, q, s),
                    )
                }
                FormulaCmd::F { i, d, r, variant } => {
                    let cfg = variant.config();
                    (
                        json!({"formula": "f", "i": i, "d": d, "r": r, "variant": cfg.label()}),
                        ev.f(i, d, r, &cfg),
                    )
                }
                FormulaCmd::Psch { n, d, r, variant } => {
                    let cfg = variant.config();
                    (
                        json!({"formula": "psch", "n": n, "d": d, "r": r, "variant": cfg.label()}),
                        ev.psch(n, d, r, &cfg),
                    )
                }
                FormulaCmd::Chsch {
                    n,
                    d,
                    r,
                    constraint,
                    variant,
                } => {
                    let cfg = variant.config();
                    (
                        json!({"formula": "chsch", "n": n, "d": d, "r": r, "h": constraint, "variant": cfg.label()}),
                        ev.chsch(n, d, r, constraint, &cfg),
                    )
                }
            };
            emit(&mut sink, &json!({"config": {"command": "formula", "params": params}}))?;
            match result {
                Ok(v) => emit(&mut sink, &json!({"value": v.to_string()}))?,
                Err(e) => emit(&mut sink, &json!({"error": e.to_string()}))?,
            }
        }
        Command::Verify {
            scope,
            max_n,
            max_r,
        } => {
            emit(
                &mut sink,
                &json!({"config": {"command": "verify", "scope": format!("{scope:?}"),
                         "max_n": max_n, "max_r": max_r}}),
            )?;
            let limits = VerifyLimits {
                max_n,
                max_r,
                region_max: 3,
            };
            let reports: Vec<CheckReport> = match scope {
                VerifyScope::All => verifier::run_all(&limits),
                VerifyScope::Annexe1 => {
                    let mut r = verifier::annexe1();
                    r.push(verifier::check_no_symmetric_dinv());
                    r
                }
                VerifyScope::Qidentity => {
                    let mut r = Vec::new();
                    for n in 1..=max_n {
                        for d in 0..=n {
                            r.push(verifier::check_q_identity(n, d));
                        }
                    }
                    r
                }
                VerifyScope::Symmetry => {
                    let mut r = vec![verifier::check_no_symmetric_dinv()];
                    for n in 1..=max_n.min(4) {
                        for rr in 1..=max_r {
                            r.push(verifier::check_haiman_equidistribution(n, rr));
                        }
                    }
                    r.push(verifier::proposed_d1_witness(max_n.min(4), max_r));
                    r
                }
                VerifyScope::Pentagon => {
                    let mut r = verifier::concordance_pentagon_tier1(5, 3);
                    r.extend(verifier::concordance_pentagon_general(4, max_r as i64));
                    r
                }
                VerifyScope::Psch => verifier::concordance_psch(max_n.min(3), max_r),
                VerifyScope::Hexagon => verifier::concordance_hexagon(3, max_r as i64),
                VerifyScope::Chsch => verifier::concordance_chsch(max_n.min(3), max_r),
            };
            let mut counts = std::collections::BTreeMap::new();
            for report in &reports {
                emit(&mut sink, &report_json(report))?;
                let status = serde_json::to_value(report.status)
                    .ok()
                    .and_then(|v| v.as_str().map(str::to_string))
                    .unwrap_or_else(|| format!("{:?}", report.status));
                *counts.entry(status).or_insert(0u64) += 1;
            }
            emit(&mut sink, &json!({"summary": counts}))?;
            sink.out.flush().map_err(|e| e.to_string())?;
            let failed = reports.iter().any(|r| r.status == Status::Fail);
            return Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS });
        }
    }
    sink.out.flush().map_err(|e| e.to_string())?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("SCHRODER_LAB_THREADS") {
        if let Ok(k) = threads.trim().parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(k.max(1))
                .build_global();
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
