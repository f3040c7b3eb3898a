//! `seqcong`: command-line front end for the partition toolkit.
//!
//! Partitions are read as JSON, from `--input` or one per line on stdin, and
//! every result is written as one line of JSON (the default) or text.
//! Exit status is 0 on success, 1 when the library rejects an input and 2 on
//! usage errors.

mod input;
mod text;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use seqcong::general::{
    eta, is_in_sba, pi_ab, pi_prime_ab, psi_k, sigma_ab, sigma_k, sigma_prime_ab, tau,
    DEFAULT_HORIZON,
};
use seqcong::ideal::{
    andrews_decompose, check_ideal_closure, check_modulus, compute_l, infer_linking_with_cap,
    linking_counterexample, order_estimate, order_refute, weak_order_estimate, weak_order_refute,
    DEFAULT_SPAN_CAP,
};
use seqcong::partition::{render_diagram, FrequencyMap};
use seqcong::seqcong::render_square_decomposition;
use seqcong::{
    conjugate, count_members, count_parity_ideal, enumerate_seqcong_by_largest,
    enumerate_seqcong_by_size, enumerate_sk_by_largest, enumerate_sk_by_size, pi_map,
    pi_sigma_closed_form, psi_inverse, psi_map, sigma_map, to_c_notation, AnalysisBound, GenSpec,
    IdealSpec, Partition, Predicate, Sequence,
};
use serde::Serialize;

use crate::input::{read_inputs, Input};

/// Environment variable overriding how many terms of `A` and `B` may be used.
const HORIZON_VAR: &str = "SEQCONG_HORIZON";

#[derive(Parser, Debug)]
#[command(
    name = "seqcong",
    version,
    about = "Sequentially congruent partitions and partition ideals"
)]
#[command(
    after_help = "Inputs: a JSON partition [7,5,5,4,1], c-notation {\"c\":[2,1,0,1]}, \
frequency notation {\"f\":[[1,2],[3,1]]} or n-notation {\"n\":[0,1],\"A\":\"nat\",\"B\":\"nat\"}.\n\
Without --input, one value is read per stdin line.\n\
Sequences for --A/--B: nat | pow:k | arith:a | comma list such as 1,2,4.\n\
SEQCONG_HORIZON sets how many sequence terms may be used (default 64)."
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct InputArg {
    /// A single JSON input; stdin is read when omitted.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Args, Debug)]
struct SpecArgs {
    /// The sequence A.
    #[arg(long = "A", value_name = "SEQ")]
    a: Option<Sequence>,
    /// The sequence B.
    #[arg(long = "B", value_name = "SEQ")]
    b: Option<Sequence>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Re-encode partitions.
    Convert {
        #[arg(long, value_enum)]
        to: Notation,
        #[command(flatten)]
        input: InputArg,
    },
    /// Apply one of the classical maps.
    Map {
        #[arg(long = "fn", value_enum)]
        func: ClassicalFn,
        #[command(flatten)]
        input: InputArg,
    },
    /// Apply one of the maps on the families S_B(A).
    Gmap {
        #[arg(long = "fn", value_enum)]
        func: GeneralFn,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        #[command(flatten)]
        input: InputArg,
    },
    /// Test a predicate: all, seqcong, squares, powers:k, sk:k, sjk:j:k,
    /// selfconj or an ideal kind.
    Check {
        #[arg(long, default_value = "seqcong")]
        pred: Predicate,
        #[command(flatten)]
        input: InputArg,
    },
    /// Test membership in S_B(A).
    Gcheck {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        input: InputArg,
    },
    /// Draw Young diagrams.
    Diagram {
        /// Show the square tiling of a sequentially congruent partition.
        #[arg(long)]
        squares: bool,
        #[command(flatten)]
        input: InputArg,
    },
    /// List the partitions satisfying a predicate, in reverse lexicographic order.
    Enumerate {
        #[arg(long)]
        pred: Predicate,
        /// Partitions of this size.
        #[arg(long, conflicts_with = "largest", required_unless_present = "largest")]
        size: Option<u64>,
        /// Partitions with this largest part (seqcong and sk:k only).
        #[arg(long)]
        largest: Option<u64>,
        /// Stop after this many partitions.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Count partitions of 0, 1, …, n satisfying a predicate.
    Count {
        #[arg(long)]
        pred: Predicate,
        #[arg(long)]
        upto: u64,
    },
    /// Bounded analysis of partition ideals.
    Ideal {
        #[command(subcommand)]
        action: IdealAction,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Notation {
    Standard,
    Frequency,
    Cnotation,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassicalFn {
    Pi,
    Sigma,
    Pisigma,
    Psi,
    PsiInv,
    Conjugate,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GeneralFn {
    #[value(name = "sigmaAB")]
    SigmaAB,
    #[value(name = "piAB")]
    PiAB,
    #[value(name = "piPrimeAB")]
    PiPrimeAB,
    #[value(name = "sigmaPrimeAB")]
    SigmaPrimeAB,
    #[value(name = "sigmak")]
    Sigmak,
    #[value(name = "psik")]
    Psik,
    #[value(name = "eta")]
    Eta,
    #[value(name = "tau")]
    Tau,
}

#[derive(Args, Debug)]
struct IdealArgs {
    /// SA, SA_maxlen:r, S, D, R, Rprime, Adiff, N_maxlen:n, P_parity, P_mod:k or Pprime.
    #[arg(long)]
    ideal: IdealSpec,
    #[arg(long, default_value_t = 12)]
    max_part: u64,
    #[arg(long, default_value_t = 8)]
    max_len: usize,
}

#[derive(Subcommand, Debug)]
enum IdealAction {
    /// Membership of each input.
    Check {
        #[command(flatten)]
        ideal: IdealArgs,
        #[command(flatten)]
        input: InputArg,
    },
    /// Closure under removal of parts.
    Closure {
        #[command(flatten)]
        ideal: IdealArgs,
    },
    /// Order estimate, or a witness against one window width.
    Order {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Weak-order estimate, or a witness against one window width.
    WeakOrder {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Whether m is a modulus.
    Modulus {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        modulus: u64,
    },
    /// Members whose parts are all at most m.
    #[command(name = "Lset", alias = "lset")]
    Lset {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        modulus: u64,
    },
    /// Split inputs into blocks of width m.
    Decompose {
        #[arg(long)]
        modulus: u64,
        #[command(flatten)]
        input: InputArg,
    },
    /// Infer spans and linking sets.
    Link {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        modulus: u64,
        #[arg(long, default_value_t = DEFAULT_SPAN_CAP)]
        span_cap: u64,
    },
    /// The obstruction to linking SA_maxlen:r.
    Counterexample {
        #[arg(long)]
        r: usize,
    },
}

/// Why a run failed, and so which exit status it gets.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
}

impl From<seqcong::Error> for Failure {
    fn from(e: seqcong::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Collects output lines in the chosen format.
struct Out {
    format: Format,
    buf: String,
}

impl Out {
    fn emit<T: Serialize + ?Sized>(&mut self, value: &T, text: impl FnOnce() -> String) {
        let line = match self.format {
            Format::Json => serde_json::to_string(value).expect("values serialize"),
            Format::Text => text(),
        };
        self.buf.push_str(&line);
        self.buf.push('\n');
    }

    fn raw(&mut self, json: String, text: impl FnOnce() -> String) {
        let line = match self.format {
            Format::Json => json,
            Format::Text => text(),
        };
        self.buf.push_str(&line);
        self.buf.push('\n');
    }

    fn partition(&mut self, p: &Partition) {
        self.emit(p, || p.to_string());
    }
}

fn horizon() -> Result<usize, Failure> {
    match std::env::var(HORIZON_VAR) {
        Err(_) => Ok(DEFAULT_HORIZON),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(h) if h > 0 => Ok(h),
            _ => Err(Failure::Usage(format!(
                "{HORIZON_VAR} must be a positive integer, got {v:?}"
            ))),
        },
    }
}

fn spec(args: &SpecArgs, horizon: usize) -> Result<Option<GenSpec>, Failure> {
    match (&args.a, &args.b) {
        (Some(a), Some(b)) => Ok(Some(
            GenSpec::new(a.clone(), b.clone())?.with_horizon(horizon),
        )),
        (None, None) => Ok(None),
        _ => Err(Failure::Usage("--A and --B must be given together".into())),
    }
}

fn need<T: Copy>(value: Option<T>, flag: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("this function needs {flag}")))
}

fn bound(args: &IdealArgs) -> Result<AnalysisBound, Failure> {
    Ok(AnalysisBound::new(args.max_part, args.max_len)?)
}

/// Runs one command, appending to `out`. Lines produced before a failure
/// stay in `out`.
fn run(cli: Cli, out: &mut Out) -> Result<(), Failure> {
    let h = horizon()?;
    match cli.command {
        Command::Convert { to, input } => {
            for item in read_inputs(input.input.as_deref(), h)? {
                let p = item.to_partition()?;
                match to {
                    Notation::Standard => out.partition(&p),
                    Notation::Frequency => {
                        let f = FrequencyMap::from(&p);
                        out.raw(text::frequency_json(&f), || f.to_string());
                    }
                    Notation::Cnotation => {
                        let c = to_c_notation(&p)?;
                        out.emit(&c, || c.to_string());
                    }
                }
            }
        }
        Command::Map { func, input } => {
            for item in read_inputs(input.input.as_deref(), h)? {
                let p = item.to_partition()?;
                let image = match func {
                    ClassicalFn::Pi => pi_map(&p)?,
                    ClassicalFn::Sigma => sigma_map(&p)?,
                    ClassicalFn::Pisigma => pi_sigma_closed_form(&p)?,
                    ClassicalFn::Psi => psi_map(&p)?,
                    ClassicalFn::PsiInv => psi_inverse(&p)?,
                    ClassicalFn::Conjugate => conjugate(&p),
                };
                out.partition(&image);
            }
        }
        Command::Gmap {
            func,
            spec: spec_args,
            k,
            p,
            q,
            input,
        } => {
            let s = spec(&spec_args, h)?;
            for item in read_inputs(input.input.as_deref(), h)? {
                gmap(out, func, s.as_ref(), (k, p, q), &item)?;
            }
        }
        Command::Check { pred, input } => {
            for item in read_inputs(input.input.as_deref(), h)? {
                let verdict = pred.test(item.to_partition()?.parts());
                out.emit(&verdict, || verdict.to_string());
            }
        }
        Command::Gcheck {
            spec: spec_args,
            input,
        } => {
            let s = spec(&spec_args, h)?
                .ok_or_else(|| Failure::Usage("gcheck needs --A and --B".into()))?;
            for item in read_inputs(input.input.as_deref(), h)? {
                let verdict = is_in_sba(&item.to_partition()?, &s)?;
                out.emit(&verdict, || verdict.to_string());
            }
        }
        Command::Diagram { squares, input } => {
            for item in read_inputs(input.input.as_deref(), h)? {
                let p = item.to_partition()?;
                let picture = if squares {
                    render_square_decomposition(&p)?
                } else {
                    render_diagram(&p)
                };
                let rows: Vec<&str> = picture.lines().collect();
                out.emit(&rows, || picture.clone());
            }
        }
        Command::Enumerate {
            pred,
            size,
            largest,
            limit,
        } => {
            let list = enumerate(&pred, size, largest)?;
            for p in list.iter().take(limit.unwrap_or(usize::MAX)) {
                out.partition(p);
            }
        }
        Command::Count { pred, upto } => {
            let counts = count(&pred, upto)?;
            let json = format!("[{}]", counts.join(","));
            out.raw(json, || {
                let mut t = String::new();
                for (n, c) in counts.iter().enumerate() {
                    let _ = writeln!(t, "{n}\t{c}");
                }
                t.truncate(t.trim_end().len());
                t
            });
        }
        Command::Ideal { action } => ideal(out, action, h)?,
    }
    Ok(())
}

fn gmap(
    out: &mut Out,
    func: GeneralFn,
    s: Option<&GenSpec>,
    (k, p, q): (Option<u32>, Option<u32>, Option<u32>),
    item: &Input,
) -> Result<(), Failure> {
    let need_spec = || s.ok_or_else(|| Failure::Usage("this function needs --A and --B".into()));
    match func {
        GeneralFn::SigmaAB => out.partition(&sigma_ab(&item.to_n_notation(s)?)?),
        GeneralFn::PiAB => {
            let n = pi_ab(&item.to_partition()?, need_spec()?)?;
            out.emit(&n, || text::n_notation(&n));
        }
        GeneralFn::PiPrimeAB => out.partition(&pi_prime_ab(&item.to_partition()?, need_spec()?)?),
        GeneralFn::SigmaPrimeAB => {
            out.partition(&sigma_prime_ab(&item.to_partition()?, need_spec()?)?)
        }
        GeneralFn::Sigmak => out.partition(&sigma_k(&item.to_n_notation(s)?, need(k, "--k")?)?),
        GeneralFn::Psik => out.partition(&psi_k(&item.to_n_notation(s)?, need(k, "--k")?)?),
        GeneralFn::Eta => {
            let n = eta(&item.to_n_notation(s)?, need(k, "--k")?, need(p, "--p")?)?;
            out.emit(&n, || text::n_notation(&n));
        }
        GeneralFn::Tau => {
            let n = tau(
                &item.to_n_notation(s)?,
                need(k, "--k")?,
                need(p, "--p")?,
                need(q, "--q")?,
            )?;
            out.emit(&n, || text::n_notation(&n));
        }
    }
    Ok(())
}

fn enumerate(
    pred: &Predicate,
    size: Option<u64>,
    largest: Option<u64>,
) -> Result<Vec<Partition>, Failure> {
    if let Some(n) = largest {
        return match pred {
            Predicate::SeqCong => Ok(enumerate_seqcong_by_largest(n)),
            Predicate::Sk(k) => Ok(enumerate_sk_by_largest(n, *k)?),
            _ => Err(Failure::Usage(
                "--largest is only available for seqcong and sk:k".into(),
            )),
        };
    }
    let n = size.expect("clap requires --size or --largest");
    Ok(match pred {
        Predicate::SeqCong => enumerate_seqcong_by_size(n),
        Predicate::Sk(k) => enumerate_sk_by_size(n, *k)?,
        _ => {
            let mut out = Vec::new();
            seqcong::enumerate::visit_partitions(n, n, n as usize, &mut |parts| {
                if pred.test(parts) {
                    out.push(
                        Partition::new(parts.to_vec()).expect("enumerated partitions are valid"),
                    );
                }
            });
            out
        }
    })
}

/// Generating-function coefficients where a product formula exists, and
/// exhaustive counts otherwise.
fn count(pred: &Predicate, upto: u64) -> Result<Vec<String>, Failure> {
    let product = match pred {
        Predicate::All => Some(1),
        Predicate::Squares => Some(2),
        Predicate::Powers(k) => Some(*k),
        _ => None,
    };
    if let Some(k) = product {
        let series = seqcong::count::series_into_powers(upto, k)?;
        return Ok(series
            .coefficients()
            .iter()
            .map(|c| c.to_string())
            .collect());
    }
    (0..=upto)
        .map(|n| {
            Ok(match pred {
                Predicate::SeqCong => enumerate_seqcong_by_size(n).len().to_string(),
                Predicate::Sk(k) => enumerate_sk_by_size(n, *k)?.len().to_string(),
                Predicate::Ideal(IdealSpec::PParity) => count_parity_ideal(n).to_string(),
                _ => count_members(pred, n).to_string(),
            })
        })
        .collect()
}

fn ideal(out: &mut Out, action: IdealAction, h: usize) -> Result<(), Failure> {
    match action {
        IdealAction::Check { ideal, input } => {
            for item in read_inputs(input.input.as_deref(), h)? {
                let verdict = ideal.ideal.contains(item.to_partition()?.parts());
                out.emit(&verdict, || verdict.to_string());
            }
        }
        IdealAction::Closure { ideal } => {
            let v = check_ideal_closure(&ideal.ideal, &bound(&ideal)?);
            out.emit(&v, || text::closure(&v));
        }
        IdealAction::Order { ideal, k } => {
            let b = bound(&ideal)?;
            match k {
                Some(k) => {
                    let w = order_refute(&ideal.ideal, k, &b);
                    out.emit(&serde_json::json!({ "k": k, "witness": w }), || {
                        text::refutation(k, w.as_ref())
                    });
                }
                None => {
                    let e = order_estimate(&ideal.ideal, &b);
                    out.emit(&e, || text::order(&e));
                }
            }
        }
        IdealAction::WeakOrder { ideal, k } => {
            let b = bound(&ideal)?;
            match k {
                Some(k) => {
                    let w = weak_order_refute(&ideal.ideal, k as usize, &b);
                    out.emit(&serde_json::json!({ "k": k, "witness": w }), || {
                        text::refutation(k, w.as_ref())
                    });
                }
                None => {
                    let e = weak_order_estimate(&ideal.ideal, &b);
                    out.emit(&e, || text::order(&e));
                }
            }
        }
        IdealAction::Modulus { ideal, modulus } => {
            let v = check_modulus(&ideal.ideal, modulus, &bound(&ideal)?);
            out.emit(&v, || text::modulus(modulus, &v));
        }
        IdealAction::Lset { ideal, modulus } => {
            let l = compute_l(&ideal.ideal, modulus, &bound(&ideal)?);
            out.emit(&l, || text::l_set(&l));
        }
        IdealAction::Decompose { modulus, input } => {
            for item in read_inputs(input.input.as_deref(), h)? {
                let pieces = andrews_decompose(&item.to_partition()?, modulus)?;
                out.emit(&pieces, || {
                    let items: Vec<String> = pieces.iter().map(Partition::to_string).collect();
                    items.join(" ⊕ ")
                });
            }
        }
        IdealAction::Link {
            ideal,
            modulus,
            span_cap,
        } => {
            if span_cap == 0 {
                return Err(Failure::Usage("--span-cap must be at least 1".into()));
            }
            let r = infer_linking_with_cap(&ideal.ideal, modulus, &bound(&ideal)?, span_cap);
            out.emit(&r, || text::link(&r));
        }
        IdealAction::Counterexample { r } => {
            let c = linking_counterexample(r)?;
            out.emit(&c, || text::counterexample(&c));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out {
        format: cli.format,
        buf: String::new(),
    };
    let result = run(cli, &mut out);
    print!("{}", out.buf);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
