//! Command-line front end. Results go to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 = claim certified or computation done, 1 = claim refuted,
//! 2 = inconclusive, 3 = input error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arith::rat_to_string;
use crate::bn;
use crate::certify::{self, DMProblem, MinStatus, Variant};
use crate::error::{Error, Result};
use crate::lattice::PicardLattice;
use crate::mukai::{self, MukaiVector};
use crate::qform::{self, BinaryQForm, RepStatus};
use crate::report::{
    emit_report, load_config_from_env, CaseOutcome, FileConfig, Format, Report, ResultItem,
    ThresholdRow, Verdict,
};
use crate::stacks;

pub const EXIT_CERTIFIED: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_UNKNOWN: i32 = 2;
pub const EXIT_INPUT_ERROR: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Markdown,
    Plain,
}

#[derive(Debug, Parser)]
#[command(
    name = "k3cert",
    version,
    about = "Exact-arithmetic certificates for Picard lattices, Mukai pairings, \
             Brill-Noether thresholds and quadratic-form representability",
    after_help = "Exit codes: 0 certified/computed, 1 refuted, 2 inconclusive, 3 input error.\n\
                  A JSON config file (search_bound, n_window, modulus_list) is read from the\n\
                  path in K3CERT_CONFIG, if set."
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: FormatArg,
    /// Shorthand for --format json
    #[arg(long, global = true)]
    json: bool,
    /// Stamp the report with the current unix time
    #[arg(long, global = true)]
    timestamps: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct LatticeArgs {
    /// Lattice spec file: {"h_sq": 6, "c_sq": 20, "hc": 13}
    #[arg(long, value_name = "FILE", conflicts_with_all = ["hsq", "csq", "hc"])]
    lattice: Option<PathBuf>,
    /// H^2 (even)
    #[arg(long, allow_negative_numbers = true, requires_all = ["csq", "hc"])]
    hsq: Option<i128>,
    /// C^2 (even, >= 2)
    #[arg(long, allow_negative_numbers = true)]
    csq: Option<i128>,
    /// C.H
    #[arg(long, allow_negative_numbers = true)]
    hc: Option<i128>,
}

impl LatticeArgs {
    fn resolve(&self) -> Result<PicardLattice> {
        match (&self.lattice, self.hsq, self.csq, self.hc) {
            (Some(path), None, None, None) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::InvalidArgument(format!("cannot read {}: {e}", path.display()))
                })?;
                PicardLattice::from_json(&text)
            }
            (None, Some(h), Some(c), Some(x)) => PicardLattice::new(h, c, x),
            _ => Err(Error::InvalidArgument(
                "provide either --lattice FILE or all of --hsq --csq --hc".into(),
            )),
        }
    }
}

fn parse_mukai_vector(text: &str) -> std::result::Result<MukaiVector, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected rank,m,n,s, got {text:?}"));
    }
    let nums: std::result::Result<Vec<i128>, _> =
        parts.iter().map(|p| p.trim().parse::<i128>()).collect();
    let nums = nums.map_err(|e| format!("bad integer in {text:?}: {e}"))?;
    MukaiVector::new(nums[0], crate::lattice::DivisorClass::new(nums[1], nums[2]), nums[3])
        .map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Brill-Noether number rho(g, r, d) = g - (r+1)(g-d+r)
    Rho {
        #[arg(long)]
        g: i128,
        #[arg(long)]
        r: i128,
        #[arg(long)]
        d: i128,
    },
    /// Mukai-vector arithmetic
    Mukai {
        #[command(subcommand)]
        op: MukaiOp,
    },
    /// Quadratic-form representability
    Qform {
        #[command(subcommand)]
        op: QformOp,
    },
    /// Certify that a lattice carries no class of square -2
    MinusTwoFree {
        #[command(flatten)]
        lat: LatticeArgs,
        /// Witness search bound (default 1000 or config)
        #[arg(long)]
        bound: Option<i128>,
    },
    /// Candidate and surviving (g, d) pairs of the borderline analysis
    ExceptionalPairs {
        #[arg(long, default_value_t = 30)]
        gmax: i128,
    },
    /// Certified constrained minimization of f(m,n) = D.(C-D)
    Certify {
        #[command(subcommand)]
        problem: CertifyOp,
    },
    /// Run the genus-11 checklist on the lattice (6, 20, 13)
    Genus11,
    /// Lattice computations
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
    /// Evaluate the named inequality table at (g, r, d, k)
    Thresholds {
        #[arg(long)]
        g: i128,
        #[arg(long)]
        d: i128,
        /// Gonality; defaults to the maximal gonality floor((g+3)/2)
        #[arg(long)]
        k: Option<i128>,
        /// Series rank, echoed in the report (no current row depends on it)
        #[arg(long, default_value_t = 2)]
        r: i128,
    },
}

#[derive(Debug, Subcommand)]
enum MukaiOp {
    /// Mukai pairing and Euler pairing of two vectors rank,m,n,s
    Pair {
        #[command(flatten)]
        lat: LatticeArgs,
        #[arg(long, value_parser = parse_mukai_vector, allow_hyphen_values = true)]
        v: MukaiVector,
        #[arg(long, value_parser = parse_mukai_vector, allow_hyphen_values = true)]
        w: MukaiVector,
    },
    /// Lazarsfeld-Mukai vector (r+1, C, g-d+r) and its self-pairing
    Lm {
        #[command(flatten)]
        lat: LatticeArgs,
        #[arg(long)]
        g: i128,
        #[arg(long)]
        r: i128,
        #[arg(long)]
        d: i128,
    },
}

#[derive(Debug, Subcommand)]
enum QformOp {
    /// Does a m^2 + b mn + c n^2 represent the target?
    Represents {
        #[arg(long, allow_negative_numbers = true)]
        a: i128,
        #[arg(long, allow_negative_numbers = true)]
        b: i128,
        #[arg(long, allow_negative_numbers = true)]
        c: i128,
        #[arg(long, allow_negative_numbers = true)]
        target: i128,
        /// Witness search bound (default 1000 or config)
        #[arg(long)]
        bound: Option<i128>,
    },
}

#[derive(Debug, Args)]
struct ProblemArgs {
    #[arg(long)]
    g: i128,
    #[arg(long)]
    r: i128,
    #[arg(long)]
    d: i128,
    /// Enumeration window for n (default 4(g+d+r) or config)
    #[arg(long)]
    window: Option<i128>,
}

#[derive(Debug, Subcommand)]
enum CertifyOp {
    /// Gonality variant: degree bound md + (2n-1)(g-1) <= 0
    Gonality(ProblemArgs),
    /// Clifford-net variant: degree bound 3md + (6n-4)(g-1) <= 0
    CliffordNet(ProblemArgs),
}

#[derive(Debug, Subcommand)]
enum LatticeOp {
    /// All divisor classes with C.D = deg and D^2 = selfint (complete)
    Solve {
        #[command(flatten)]
        lat: LatticeArgs,
        #[arg(long, allow_negative_numbers = true)]
        deg: i128,
        #[arg(long, allow_negative_numbers = true)]
        selfint: i128,
    },
}

/// Parse argv, dispatch, print the report, and return the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(argv.clone()) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return EXIT_CERTIFIED;
            }
            eprint!("{e}");
            return EXIT_INPUT_ERROR;
        }
    };
    let config = match load_config_from_env() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INPUT_ERROR;
        }
    };
    let command_echo = argv
        .iter()
        .skip(1)
        .map(|s| s.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let format = if cli.json {
        Format::Json
    } else {
        match cli.format {
            FormatArg::Json => Format::Json,
            FormatArg::Markdown => Format::Markdown,
            FormatArg::Plain => Format::Plain,
        }
    };
    match dispatch(&cli.command, &config) {
        Ok((results, verdict, code)) => {
            let mut report = Report::new(command_echo, results, verdict);
            if cli.timestamps {
                report = report.with_timestamp();
            }
            print!("{}", emit_report(&report, format));
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT_ERROR
        }
    }
}

type Outcome = (Vec<ResultItem>, Verdict, i32);

fn dispatch(cmd: &Command, config: &FileConfig) -> Result<Outcome> {
    match cmd {
        Command::Rho { g, r, d } => {
            let value = bn::rho(*g, *r, *d)?;
            Ok((
                vec![ResultItem::Scalar { name: "rho".into(), value }],
                Verdict::Computed,
                EXIT_CERTIFIED,
            ))
        }
        Command::Mukai { op } => mukai_op(op),
        Command::Qform { op } => qform_op(op, config),
        Command::MinusTwoFree { lat, bound } => {
            let lat = lat.resolve()?;
            let bound = resolve_bound(*bound, config)?;
            let cert = qform::minus_two_free_with_bound(&lat, bound)?;
            let (verdict, code) = match cert.status {
                RepStatus::No => (Verdict::Certified, EXIT_CERTIFIED),
                RepStatus::Yes => (Verdict::Refuted, EXIT_REFUTED),
                RepStatus::Unknown => (Verdict::Unknown, EXIT_UNKNOWN),
            };
            Ok((
                vec![ResultItem::Representation {
                    name: "minus-two-free".into(),
                    certificate: cert,
                }],
                verdict,
                code,
            ))
        }
        Command::ExceptionalPairs { gmax } => {
            let report = stacks::exceptional_pairs(*gmax)?;
            Ok((
                vec![ResultItem::ExceptionalPairs { name: "exceptional-pairs".into(), report }],
                Verdict::Computed,
                EXIT_CERTIFIED,
            ))
        }
        Command::Certify { problem } => {
            let (args, variant) = match problem {
                CertifyOp::Gonality(a) => (a, Variant::Gonality),
                CertifyOp::CliffordNet(a) => (a, Variant::CliffordNet),
            };
            let p = DMProblem::new(args.g, args.r, args.d, variant)?;
            let window = match args.window.or(config.n_window) {
                Some(w) => w,
                None => p.default_n_window(),
            };
            let cert = certify::certify_min(&p, window)?;
            let (verdict, code) = match cert.status {
                MinStatus::Proved => (Verdict::Certified, EXIT_CERTIFIED),
                MinStatus::Refuted => (Verdict::Refuted, EXIT_REFUTED),
                MinStatus::Unknown => (Verdict::Unknown, EXIT_UNKNOWN),
            };
            let bound = resolve_bound(None, config)?;
            let hyp = p.minus_one_hypothesis(bound)?;
            Ok((
                vec![
                    ResultItem::Minimization { name: "certify-min".into(), certificate: cert },
                    ResultItem::Representation {
                        name: "minus-one-representability".into(),
                        certificate: hyp,
                    },
                ],
                verdict,
                code,
            ))
        }
        Command::Genus11 => {
            let report = certify::genus11_suite()?;
            let (verdict, code) = if report.all_pass {
                (Verdict::Certified, EXIT_CERTIFIED)
            } else {
                (Verdict::Refuted, EXIT_REFUTED)
            };
            Ok((
                vec![ResultItem::Suite { name: "genus11".into(), report }],
                verdict,
                code,
            ))
        }
        Command::Lattice { op } => match op {
            LatticeOp::Solve { lat, deg, selfint } => {
                let lat = lat.resolve()?;
                let out = certify::solve_deg_selfint(&lat, *deg, *selfint)?;
                Ok((
                    vec![ResultItem::CaseAnalysis {
                        name: "lattice-solve".into(),
                        cases: vec![CaseOutcome {
                            deg: *deg,
                            s_int: *selfint,
                            c2_quot: None,
                            solutions: out.solutions,
                            note: out.note,
                        }],
                    }],
                    Verdict::Computed,
                    EXIT_CERTIFIED,
                ))
            }
        },
        Command::Thresholds { g, d, k, r } => {
            let k = match k {
                Some(k) => *k,
                None => bn::max_gonality(*g)?,
            };
            let rows = bn::thresholds(*g, *r, *d, k)?
                .into_iter()
                .map(|(t, satisfied)| ThresholdRow {
                    name: t.name.to_string(),
                    value: rat_to_string(&t.value),
                    direction: t.direction,
                    satisfied,
                })
                .collect();
            Ok((
                vec![ResultItem::Thresholds { name: "thresholds".into(), rows }],
                Verdict::Computed,
                EXIT_CERTIFIED,
            ))
        }
    }
}

fn mukai_op(op: &MukaiOp) -> Result<Outcome> {
    match op {
        MukaiOp::Pair { lat, v, w } => {
            let lat = lat.resolve()?;
            let pairing = mukai::pairing(&lat, v, w)?;
            let euler = mukai::euler_pair(&lat, v, w)?;
            Ok((
                vec![
                    ResultItem::Scalar { name: "pairing".into(), value: pairing },
                    ResultItem::Scalar { name: "euler-pair".into(), value: euler },
                ],
                Verdict::Computed,
                EXIT_CERTIFIED,
            ))
        }
        MukaiOp::Lm { lat, g, r, d } => {
            let lat = lat.resolve()?;
            let v = mukai::lm_vector(&lat, *g, *r, *d)?;
            let self_pair = mukai::pairing(&lat, &v, &v)?;
            Ok((
                vec![
                    ResultItem::Vector { name: "lm-vector".into(), vector: v },
                    ResultItem::Scalar { name: "self-pairing".into(), value: self_pair },
                    ResultItem::Scalar { name: "rho".into(), value: bn::rho(*g, *r, *d)? },
                ],
                Verdict::Computed,
                EXIT_CERTIFIED,
            ))
        }
    }
}

fn qform_op(op: &QformOp, config: &FileConfig) -> Result<Outcome> {
    match op {
        QformOp::Represents { a, b, c, target, bound } => {
            let q = BinaryQForm::new(*a, *b, *c);
            let bound = resolve_bound(*bound, config)?;
            let cert = match &config.modulus_list {
                Some(moduli) => qform::represents_with_moduli(&q, *target, bound, moduli)?,
                None => qform::represents(&q, *target, bound)?,
            };
            // exit 0 means "decision reached"; the decision itself is in
            // the payload. Unknown is the inconclusive case.
            let (verdict, code) = match cert.status {
                RepStatus::Yes | RepStatus::No => (Verdict::Certified, EXIT_CERTIFIED),
                RepStatus::Unknown => (Verdict::Unknown, EXIT_UNKNOWN),
            };
            Ok((
                vec![ResultItem::Representation { name: "represents".into(), certificate: cert }],
                verdict,
                code,
            ))
        }
    }
}

fn resolve_bound(cli_bound: Option<i128>, config: &FileConfig) -> Result<i128> {
    let bound = cli_bound.or(config.search_bound).unwrap_or(qform::DEFAULT_SEARCH_BOUND);
    if bound < 1 {
        return Err(Error::InvalidArgument(format!("search bound {bound} < 1")));
    }
    Ok(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_parses_spec_surface() {
        for argv in [
            vec!["k3cert", "rho", "--g", "11", "--r", "2", "--d", "9"],
            vec!["k3cert", "qform", "represents", "--a", "1", "--b", "0", "--c", "1", "--target", "-1"],
            vec!["k3cert", "minus-two-free", "--hsq", "6", "--csq", "20", "--hc", "13"],
            vec!["k3cert", "exceptional-pairs", "--gmax", "30"],
            vec!["k3cert", "certify", "gonality", "--g", "21", "--r", "4", "--d", "18"],
            vec!["k3cert", "certify", "clifford-net", "--g", "21", "--r", "4", "--d", "18"],
            vec!["k3cert", "genus11", "--json"],
            vec!["k3cert", "lattice", "solve", "--hsq", "6", "--csq", "20", "--hc", "13", "--deg", "9", "--selfint", "2"],
            vec!["k3cert", "thresholds", "--g", "11", "--d", "10", "--k", "7"],
            vec![
                "k3cert", "mukai", "pair", "--hsq", "6", "--csq", "20", "--hc", "13",
                "--v", "3,0,1,3", "--w", "3,0,1,3",
            ],
        ] {
            assert!(Cli::try_parse_from(&argv).is_ok(), "failed to parse {argv:?}");
        }
    }

    #[test]
    fn bad_arguments_fail_to_parse() {
        assert!(Cli::try_parse_from(["k3cert", "rho", "--g", "11"]).is_err());
        assert!(Cli::try_parse_from(["k3cert", "nonsense"]).is_err());
        assert!(Cli::try_parse_from(["k3cert", "rho", "--g", "11", "--r", "2", "--d", "9", "--x"])
            .is_err());
    }

    #[test]
    fn run_reports_exit_codes_in_process() {
        assert_eq!(run(["k3cert", "rho", "--g", "11", "--r", "2", "--d", "9"]), EXIT_CERTIFIED);
        assert_eq!(
            run(["k3cert", "minus-two-free", "--hsq", "-2", "--csq", "2", "--hc", "0"]),
            EXIT_REFUTED
        );
        assert_eq!(run(["k3cert", "genus11"]), EXIT_CERTIFIED);
        assert_eq!(run(["k3cert", "rho", "--g", "oops"]), EXIT_INPUT_ERROR);
    }
}
