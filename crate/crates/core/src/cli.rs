//! The `beatty` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 precision exhausted,
//! 3 a verify subcommand found a violation.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::beatty::BeattySpec;
use crate::contfrac::{cf_expand, check_spacing, ostrowski_expand, validate_ostrowski, CfKind};
use crate::error::{Error, Result};
use crate::exactreal::{RealValue, DEFAULT_PRECISION};
use crate::fraenkel::{
    brute_force_tiling, brute_force_tiling_z, check_conditions, check_conditions_z, truth_name, TilePair, TilingStatus,
    Verdict,
};
use crate::sturmian::{apply_morphism, Morphism, Sturmian, Word};
use crate::svg::circle_svg;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PRECISION: i32 = 2;
pub const EXIT_VERDICT_NO: i32 = 3;

/// Quotients computed before a quadratic expansion is declared truncated.
const CF_SEARCH_LIMIT: usize = 4096;

#[derive(Parser, Debug)]
#[command(
    name = "beatty",
    version,
    about = "Exact Beatty sequences, tilings and characteristic words"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Fractional digits kept by decimal interval literals.
    #[arg(long, env = "BEATTY_PRECISION", default_value_t = DEFAULT_PRECISION, global = true)]
    pub precision: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Plain,
}

#[derive(Args, Debug)]
pub struct SpecArgs {
    /// Density α.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    /// Offset α′.
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    pub offset: String,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha_offset: String,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
    #[arg(long, allow_hyphen_values = true)]
    pub beta_offset: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Whether k belongs to B(α, α′).
    Member {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// All terms of B(α, α′) up to a bound.
    Enumerate {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        bound: i64,
    },
    /// Number of terms below k.
    Count {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// The n-th term.
    Term {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        n: i64,
    },
    /// Decides whether the pair tiles ℕ.
    TileCheck {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Checks a tiling on a finite window; exits 3 on a violation.
    TileVerify {
        #[command(flatten)]
        pair: PairArgs,
        /// Last integer of the window.
        #[arg(long, allow_hyphen_values = true)]
        window: i64,
        /// First integer of a two-sided window; omit for [1, window].
        #[arg(long, allow_hyphen_values = true)]
        start: Option<i64>,
    },
    /// Decides whether the two-sided sequences tile ℤ.
    TileCheckZ {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Continued fraction of a number in (0, 1).
    Cf {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Most quotients to report.
        #[arg(long, default_value_t = 32)]
        terms: usize,
    },
    /// Continuants q_0, …, q_count.
    Continuants {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Ostrowski digits of m.
    Ostrowski {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        m: u64,
    },
    /// The characteristic word C_m.
    Word {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        m: usize,
    },
    /// Factors C_m into continuant-length prefixes.
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        m: u64,
    },
    /// Checks the factorization of C_m for every m up to a bound; exits 3 on a mismatch.
    VerifyDecompose {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        m_max: u64,
    },
    /// Checks that no |s| < q_{t+1} other than q_t brings sα closer to ℤ than q_t α.
    Spacing {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long)]
        t: usize,
    },
    /// Applies a morphism letter by letter (default 1 → 10, 0 → 1).
    Morphism {
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "10")]
        one: String,
        #[arg(long, default_value = "1")]
        zero: String,
    },
    /// SVG diagram of the arcs A, B and the points kα.
    CircleSvg {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 16)]
        k_max: u32,
    },
}

/// What one invocation produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    json: Value,
    plain: String,
    code: i32,
}

impl Report {
    fn ok(json: Value, plain: impl Into<String>) -> Self {
        Report {
            json,
            plain: plain.into(),
            code: EXIT_OK,
        }
    }
}

/// The exit code an error maps to.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::PrecisionExhausted(_) => EXIT_PRECISION,
        _ => EXIT_USAGE,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::PrecisionExhausted(_) => "precision_exhausted",
        Error::IncompatibleSurds(..) => "incompatible_surds",
        Error::DensityOutOfRange(_) => "density_out_of_range",
        Error::NotRationalDensity => "not_rational_density",
        Error::RequiresIrrational => "requires_irrational",
        Error::IntervalNotSupported => "interval_not_supported",
        Error::InsufficientQuotients { .. } => "insufficient_quotients",
        Error::DivisionByZero => "division_by_zero",
        Error::Overflow(_) => "overflow",
        Error::InvalidValue(_) => "invalid_value",
        Error::InvalidArgument(_) => "invalid_argument",
        Error::Parse { .. } => "parse",
    }
}

/// Parses arguments (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            return Outcome {
                code: EXIT_OK,
                stdout: e.render().to_string(),
                stderr: String::new(),
            }
        }
        Err(e) => {
            let text = e.render().to_string();
            let stdout = match requested_format(&args) {
                Format::Json => {
                    let head: Vec<&str> = text
                        .lines()
                        .take_while(|l| !l.trim().is_empty())
                        .map(str::trim)
                        .collect();
                    let joined = head.join(" ");
                    let message = joined.strip_prefix("error: ").unwrap_or(&joined);
                    format!("{}\n", json!({"error": {"kind": "usage", "message": message}}))
                }
                Format::Plain => String::new(),
            };
            return Outcome {
                code: EXIT_USAGE,
                stdout,
                stderr: text,
            };
        }
    };
    let format = cli.format;
    match execute(&cli) {
        Ok(report) => Outcome {
            code: report.code,
            stdout: match format {
                Format::Json => format!("{}\n", report.json),
                Format::Plain => format!("{}\n", report.plain),
            },
            stderr: String::new(),
        },
        Err(e) => {
            let stdout = match format {
                Format::Json => format!(
                    "{}\n",
                    json!({"error": {"kind": error_kind(&e), "message": e.to_string()}})
                ),
                Format::Plain => String::new(),
            };
            Outcome {
                code: exit_code(&e),
                stdout,
                stderr: format!("error: {e} [{}]\n", error_kind(&e)),
            }
        }
    }
}

/// The `--format` value among raw arguments that failed to parse; the last one wins.
fn requested_format(args: &[OsString]) -> Format {
    let mut format = Format::Json;
    let mut iter = args.iter().skip(1).filter_map(|a| a.to_str());
    while let Some(arg) = iter.next() {
        let value = match arg.strip_prefix("--format") {
            Some("") => iter.next(),
            Some(rest) => rest.strip_prefix('='),
            None => None,
        };
        if let Some(v) = value.and_then(|v| Format::from_str(v, false).ok()) {
            format = v;
        }
    }
    format
}

fn literal(s: &str, precision: u32) -> Result<RealValue> {
    RealValue::parse_with_precision(s, precision)
}

fn spec_of(a: &SpecArgs, precision: u32) -> Result<BeattySpec> {
    BeattySpec::new(literal(&a.alpha, precision)?, literal(&a.offset, precision)?)
}

fn pair_of(p: &PairArgs, precision: u32) -> Result<TilePair> {
    Ok(TilePair::new(
        BeattySpec::new(literal(&p.alpha, precision)?, literal(&p.alpha_offset, precision)?)?,
        BeattySpec::new(literal(&p.beta, precision)?, literal(&p.beta_offset, precision)?)?,
    ))
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn verdict_report(v: &Verdict) -> Report {
    let mut plain = format!("tiles: {}\nfailed: {}", truth_name(v.tiles), join(&v.failed));
    if let Some(k) = &v.witness {
        plain.push_str(&format!("\nwitness: {k}"));
    }
    if !v.undecided.is_empty() {
        plain.push_str(&format!("\nundecided: {}", join(&v.undecided)));
    }
    Report::ok(v.to_json(), plain)
}

fn execute(cli: &Cli) -> Result<Report> {
    let precision = cli.precision;
    Ok(match &cli.command {
        Command::Member { spec, k } => {
            let member = spec_of(spec, precision)?.membership(*k)?;
            Report::ok(json!({ "member": member }), format!("member: {member}"))
        }
        Command::Enumerate { spec, bound } => {
            let terms = spec_of(spec, precision)?.enumerate(*bound)?;
            Report::ok(json!({ "terms": terms }), format!("terms: {}", join(&terms)))
        }
        Command::Count { spec, k } => {
            let count = spec_of(spec, precision)?.count_below(*k)?;
            Report::ok(json!({ "count": count }), format!("count: {count}"))
        }
        Command::Term { spec, n } => {
            let term = spec_of(spec, precision)?.term(*n)?;
            Report::ok(json!({ "term": term }), format!("term: {term}"))
        }
        Command::TileCheck { pair } => verdict_report(&check_conditions(&pair_of(pair, precision)?)?),
        Command::TileCheckZ { pair } => verdict_report(&check_conditions_z(&pair_of(pair, precision)?)?),
        Command::TileVerify { pair, window, start } => {
            let pair = pair_of(pair, precision)?;
            let report = match start {
                Some(s) => brute_force_tiling_z(&pair, *s, *window)?,
                None => brute_force_tiling(&pair, *window)?,
            };
            let json = report.to_json();
            let mut plain = format!(
                "window: {} {}\nstatus: {}",
                report.window_start,
                report.window_end,
                json["status"].as_str().unwrap_or_default()
            );
            if let Some(k) = json.get("k") {
                plain.push_str(&format!("\nk: {k}"));
            }
            Report {
                json,
                plain,
                code: if report.status == TilingStatus::Tiles {
                    EXIT_OK
                } else {
                    EXIT_VERDICT_NO
                },
            }
        }
        Command::Cf { x, terms } => {
            let x = literal(x, precision)?;
            let cf = cf_expand(&x, CF_SEARCH_LIMIT)?;
            let (kind, pre, period) = match cf.kind() {
                CfKind::FiniteExact => ("finite", None, None),
                CfKind::PeriodicExact {
                    preperiod_len,
                    period_len,
                } => ("periodic", Some(preperiod_len), Some(period_len)),
                CfKind::Truncated => ("truncated", None, None),
            };
            let count = match cf.available() {
                Some(n) => n.min(*terms),
                None => *terms,
            };
            let quotients: Vec<u64> = (1..=count).filter_map(|i| cf.quotient(i)).collect();
            let mut json = json!({ "kind": kind, "quotients": quotients, "notation": cf.to_string() });
            let mut plain = format!("{cf}\nkind: {kind}\nquotients: {}", join(&quotients));
            if let (Some(p), Some(l)) = (pre, period) {
                json["preperiod"] = json!(p);
                json["period"] = json!(l);
                plain.push_str(&format!("\npreperiod: {p}\nperiod: {l}"));
            }
            Report::ok(json, plain)
        }
        Command::Continuants { alpha, count } => {
            let cf = cf_expand(&literal(alpha, precision)?, CF_SEARCH_LIMIT)?;
            let q = cf.continuants(*count)?;
            Report::ok(json!({ "q": q.as_slice() }), format!("q: {}", join(q.as_slice())))
        }
        Command::Ostrowski { alpha, m } => {
            let cf = cf_expand(&literal(alpha, precision)?, CF_SEARCH_LIMIT)?;
            let digits = ostrowski_expand(*m, &cf)?;
            let valid = validate_ostrowski(&digits, &cf);
            let json = json!({ "m": m, "digits": digits.digits(), "repr": digits.to_string(), "valid": valid });
            let plain = format!("{digits}\nm: {m}\ndigits: {}\nvalid: {valid}", join(digits.digits()));
            Report::ok(json, plain)
        }
        Command::Word { alpha, m } => {
            let word = crate::sturmian::char_word(&literal(alpha, precision)?, *m)?;
            Report::ok(json!({ "word": word.to_string() }), word.to_string())
        }
        Command::Decompose { alpha, m } => {
            let d = Sturmian::new(&literal(alpha, precision)?)?.decompose(*m)?;
            Report::ok(d.to_json(), d.to_string())
        }
        Command::VerifyDecompose { alpha, m_max } => {
            let mut st = Sturmian::new(&literal(alpha, precision)?)?;
            let mut mismatch = None;
            for m in 1..=*m_max {
                let d = st.decompose(m)?;
                let m_len = usize::try_from(m).map_err(|_| Error::Overflow("word length"))?;
                if st.expand(&d)? != st.prefix(m_len)? {
                    mismatch = Some(m);
                    break;
                }
            }
            let ok = mismatch.is_none();
            let mut json = json!({ "ok": ok, "checked": m_max });
            let mut plain = format!("ok: {ok}\nchecked: {m_max}");
            if let Some(m) = mismatch {
                json["first_mismatch"] = json!(m);
                plain.push_str(&format!("\nfirst_mismatch: {m}"));
            }
            Report {
                json,
                plain,
                code: if ok { EXIT_OK } else { EXIT_VERDICT_NO },
            }
        }
        Command::Spacing { alpha, t } => {
            let cf = cf_expand(&literal(alpha, precision)?, CF_SEARCH_LIMIT)?;
            let holds = check_spacing(&cf, *t)?;
            Report::ok(json!({ "holds": holds }), format!("holds: {holds}"))
        }
        Command::Morphism { word, one, zero } => {
            let w: Word = word.parse()?;
            let h = Morphism::new(one.parse()?, zero.parse()?);
            let image = apply_morphism(&w, &h);
            Report::ok(json!({ "word": image.to_string() }), image.to_string())
        }
        Command::CircleSvg { pair, k_max } => {
            let svg = circle_svg(&pair_of(pair, precision)?, *k_max)?;
            Report::ok(json!({ "svg": svg }), svg.trim_end().to_string())
        }
    })
}
