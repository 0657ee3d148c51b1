//! `hkq`: exact Hilbert–Kunz multiplicities of quadrics from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hkq::appendix::{corrected_leading_coeff, leading_coeff_q, stated_leading_coeff};
use hkq::arith::json::RationalJson;
use hkq::arith::{decimal_approx, interpolate_samples};
use hkq::combinatorics::{cached_swap_table, swap_table, Limits};
use hkq::hk::{ehk, ehk_ehrhart, ehk_function, ehrhart_polynomial, Method};
use hkq::polytope::{brute_force_count, count_region, LatticeCountQuery, Relation, DEFAULT_BUDGET};
use hkq::rep_ring::is_prime;
use hkq::report::Report;
use hkq::verify::{self, Bounds, Suite};
use hkq::{Error, Integer, QPolynomial, Rational};

const DIGITS: usize = 20;

#[derive(Parser)]
#[command(name = "hkq", version, about = "Exact Hilbert–Kunz multiplicity of quadrics A_{p,d}")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Repring,
    Matrix,
    Ehrhart,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Polytope {
    Fibonacci,
    Extended,
    Region,
}

#[derive(Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// e_HK(A_{p,d}) by one or all methods.
    Ehk {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// e_HK(A_{p,d}) as a rational function of p.
    Function {
        #[arg(long)]
        d: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Lattice points in the k-th dilate of a polytope.
    Count {
        #[arg(long, value_enum)]
        polytope: Polytope,
        /// Dimension (ignored for regions, which take it from the pattern).
        #[arg(long, default_value_t = 0)]
        d: usize,
        #[arg(long)]
        k: usize,
        /// Relation word over {<, >} for `--polytope region`.
        #[arg(long)]
        pattern: Option<String>,
        /// Cross-check against brute-force enumeration.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Ehrhart polynomial coefficients, ascending degree.
    Ehrhart {
        #[arg(long, value_enum)]
        polytope: Polytope,
        #[arg(long, default_value_t = 0)]
        d: usize,
        #[arg(long)]
        pattern: Option<String>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Swap-statistic histogram over alternating permutations of [d].
    Swap {
        #[arg(long)]
        d: usize,
        #[arg(long, env = "HKQ_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Grid of e_HK values over 1 <= d <= d-max and odd 3 <= p <= p-max.
    Scan {
        #[arg(long)]
        d_max: usize,
        #[arg(long)]
        p_max: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Leading coefficient of [Q(q,k)^(n+1)]_11 in k against the closed forms.
    Leading {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[command(flatten)]
        fmt: FormatArg,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[arg(long)]
        d_max: Option<usize>,
        #[arg(long)]
        p_max: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, env = "HKQ_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
        #[command(flatten)]
        fmt: FormatArg,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistent(_) => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Output text plus whether the run verified.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn rational_json(r: &Rational) -> Value {
    serde_json::to_value(RationalJson::from(r)).expect("plain strings")
}

fn fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn to_json<T: serde::Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn to_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn cmd_ehk(p: usize, d: usize, method: MethodArg, format: Format) -> Result<Output, Failure> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Failure::Usage(format!("p = {p} must be odd and at least 3")));
    }
    if d == 0 {
        return Err(Failure::Usage("d must be at least 1".into()));
    }
    let methods: Vec<Method> = match method {
        MethodArg::Repring => vec![Method::Repring],
        MethodArg::Matrix => vec![Method::Matrix],
        MethodArg::Ehrhart => vec![Method::Ehrhart],
        MethodArg::All if is_prime(p as u64) => Method::ALL.to_vec(),
        MethodArg::All => vec![Method::Matrix, Method::Ehrhart],
    };
    if methods == [Method::Repring] && !is_prime(p as u64) {
        return Err(Failure::Usage(format!("the representation ring needs a prime p, got {p}")));
    }
    let results = methods.iter().map(|&m| ehk(p, d, m)).collect::<hkq::Result<Vec<_>>>()?;
    let agree = results.windows(2).all(|w| w[0].value == w[1].value);

    let text = match format {
        Format::Text => {
            let mut s = String::new();
            for r in &results {
                let _ = writeln!(s, "{:<8} e_HK(A_{{{p},{d}}}) = {}  ~ {}", r.method.name(), r.value, decimal_approx(&r.value, DIGITS));
            }
            if !agree {
                s.push_str("methods disagree\n");
            }
            s
        }
        Format::Json => {
            let v: Vec<Value> = results
                .iter()
                .map(|r| json!({"p": r.p, "d": r.d, "method": r.method, "value": rational_json(&r.value)}))
                .collect();
            to_json(&json!({"results": v, "agree": agree}))
        }
        Format::Csv => to_csv(
            &["p", "d", "method", "num", "den", "decimal_approx_20digits"],
            results.iter().map(|r| {
                vec![
                    p.to_string(),
                    d.to_string(),
                    r.method.to_string(),
                    r.value.numer().to_string(),
                    r.value.denom().to_string(),
                    decimal_approx(&r.value, DIGITS),
                ]
            }),
        ),
    };
    Ok(Output { text, ok: agree })
}

fn cmd_function(d: usize, format: Format) -> Result<Output, Failure> {
    let f = ehk_function(d)?;
    let text = match format {
        Format::Text => format!(
            "reduced: {}\nunreduced: 1 + ({}) / ({})\n",
            f.reduced, f.unreduced_num, f.unreduced_den
        ),
        Format::Json => to_json(&f),
        Format::Csv => {
            let deg = |p: &QPolynomial| p.degree().map_or(String::from("-1"), |d| d.to_string());
            to_csv(
                &["d", "reduced", "unreduced_num", "unreduced_den", "deg_num", "deg_den"],
                [vec![
                    d.to_string(),
                    f.reduced.to_string(),
                    f.unreduced_num.to_string(),
                    f.unreduced_den.to_string(),
                    deg(&f.unreduced_num),
                    deg(&f.unreduced_den),
                ]],
            )
        }
    };
    Ok(Output::ok(text))
}

fn pattern_arg(pattern: Option<&str>) -> Result<Vec<Relation>, Failure> {
    let text = pattern.ok_or_else(|| Failure::Usage("--polytope region needs --pattern".into()))?;
    Ok(Relation::parse_pattern(text)?)
}

fn query(polytope: Polytope, d: usize, k: usize, pattern: Option<&str>) -> Result<LatticeCountQuery, Failure> {
    Ok(match polytope {
        Polytope::Fibonacci => LatticeCountQuery::fibonacci(d, k)?,
        Polytope::Extended => LatticeCountQuery::extended(d, k)?,
        Polytope::Region => LatticeCountQuery::region(pattern_arg(pattern)?, k)?,
    })
}

fn cmd_count(
    polytope: Polytope,
    d: usize,
    k: usize,
    pattern: Option<&str>,
    oracle: bool,
    budget: u64,
    format: Format,
) -> Result<Output, Failure> {
    let q = query(polytope, d, k, pattern)?;
    let count: Integer = q.count();
    let brute = if oracle { Some(brute_force_count(&q, budget)?) } else { None };
    let ok = brute.as_ref().is_none_or(|b| *b == count);
    let brute_text = brute.as_ref().map(ToString::to_string);
    let text = match format {
        Format::Text => {
            let mut s = format!("{count}\n");
            if let Some(b) = &brute_text {
                let _ = writeln!(s, "oracle: {b} ({})", if ok { "agrees" } else { "DISAGREES" });
            }
            s
        }
        Format::Json => to_json(&json!({
            "query": q.to_string(),
            "d": q.d(),
            "k": k,
            "count": count.to_string(),
            "oracle": brute_text,
        })),
        Format::Csv => to_csv(
            &["query", "d", "k", "count", "oracle"],
            [vec![q.to_string(), q.d().to_string(), k.to_string(), count.to_string(), brute_text.unwrap_or_default()]],
        ),
    };
    Ok(Output { text, ok })
}

fn cmd_ehrhart(polytope: Polytope, d: usize, pattern: Option<&str>, format: Format) -> Result<Output, Failure> {
    let (d, poly) = match polytope {
        Polytope::Fibonacci => (d, ehrhart_polynomial(d, false)),
        Polytope::Extended => (d, ehrhart_polynomial(d, true)),
        Polytope::Region => {
            let pat = pattern_arg(pattern)?;
            let n = pat.len() + 1;
            (n, interpolate_samples(n, |k| count_region::<Rational>(&pat, k))?)
        }
    };
    let coeffs: Vec<Rational> = (0..=d).map(|i| poly.coeff(i)).collect();
    let text = match format {
        Format::Text => {
            let list: Vec<String> = coeffs.iter().map(ToString::to_string).collect();
            format!("[{}]\n", list.join(", "))
        }
        Format::Json => to_json(&json!({"d": d, "polynomial": poly})),
        Format::Csv => to_csv(&["degree", "coeff"], coeffs.iter().enumerate().map(|(i, c)| vec![i.to_string(), fraction(c)])),
    };
    Ok(Output::ok(text))
}

fn cmd_swap(d: usize, cache: Option<&Path>, format: Format) -> Result<Output, Failure> {
    let t = match cache {
        Some(dir) => cached_swap_table(dir, d, Limits::default().swap_d)?,
        None => swap_table(d)?,
    };
    let text = match format {
        Format::Text => {
            let list: Vec<String> = t.s.iter().map(ToString::to_string).collect();
            format!("[{}]\n", list.join(", "))
        }
        Format::Json => to_json(&t),
        Format::Csv => to_csv(&["m", "s"], t.s.iter().enumerate().map(|(m, s)| vec![m.to_string(), s.to_string()])),
    };
    Ok(Output::ok(text))
}

fn cmd_scan(d_max: usize, p_max: usize, format: Format) -> Result<Output, Failure> {
    let mut rows = Vec::new();
    for d in 1..=d_max {
        for p in (3..=p_max).step_by(2) {
            rows.push((d, p, ehk_ehrhart(p, d)?));
        }
    }
    let text = match format {
        Format::Text => rows.iter().fold(String::new(), |mut s, (d, p, v)| {
            let _ = writeln!(s, "d={d} p={p} {v} ~ {}", decimal_approx(v, DIGITS));
            s
        }),
        Format::Json => {
            let v: Vec<Value> = rows.iter().map(|(d, p, v)| json!({"d": d, "p": p, "value": rational_json(v)})).collect();
            to_json(&v)
        }
        Format::Csv => to_csv(
            &["d", "p", "num", "den", "decimal_approx_20digits"],
            rows.iter().map(|(d, p, v)| {
                vec![d.to_string(), p.to_string(), v.numer().to_string(), v.denom().to_string(), decimal_approx(v, DIGITS)]
            }),
        ),
    };
    Ok(Output::ok(text))
}

fn cmd_leading(q: u64, n_max: usize, format: Format) -> Result<Output, Failure> {
    let qi = Integer::from(q);
    let mut rows = Vec::new();
    for n in 1..=n_max {
        rows.push((n, leading_coeff_q(&qi, n)?, stated_leading_coeff(&qi, n)?, corrected_leading_coeff(&qi, n)?));
    }
    let text = match format {
        Format::Text => rows.iter().fold(String::new(), |mut s, (n, got, stated, corrected)| {
            let _ = writeln!(s, "q={q} n={n} interpolated {got} stated {stated} corrected {corrected}");
            s
        }),
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(n, a, b, c)| {
                    json!({"q": q, "n": n, "interpolated": rational_json(a), "stated": rational_json(b), "corrected": rational_json(c)})
                })
                .collect();
            to_json(&v)
        }
        Format::Csv => to_csv(
            &["q", "n", "interpolated", "stated", "corrected"],
            rows.iter().map(|(n, a, b, c)| vec![q.to_string(), n.to_string(), fraction(a), fraction(b), fraction(c)]),
        ),
    };
    Ok(Output::ok(text))
}

fn cmd_verify(suite: Suite, bounds: Bounds, cache: Option<&Path>, format: Format) -> Result<Output, Failure> {
    let report: Report = verify::run(suite, bounds, cache)?;
    let ok = report.passed();
    let text = match format {
        Format::Text => {
            let mut s = report.to_string();
            if let Some(c) = report.failures().next() {
                let _ = writeln!(s, "first failure: {}: {}", c.name, c.detail);
            }
            s
        }
        Format::Json => to_json(&json!({"suite": suite.name(), "passed": ok, "report": report})),
        Format::Csv => to_csv(
            &["suite", "check", "asserted", "passed", "detail"],
            report.checks.iter().map(|c| {
                vec![suite.name().into(), c.name.clone(), c.asserted.to_string(), c.passed.to_string(), c.detail.clone()]
            }),
        ),
    };
    Ok(Output { text, ok })
}

fn dispatch(cmd: Command) -> Result<Output, Failure> {
    match cmd {
        Command::Ehk { p, d, method, fmt } => cmd_ehk(p, d, method, fmt.format),
        Command::Function { d, fmt } => cmd_function(d, fmt.format),
        Command::Count { polytope, d, k, pattern, oracle, budget, fmt } => {
            cmd_count(polytope, d, k, pattern.as_deref(), oracle, budget, fmt.format)
        }
        Command::Ehrhart { polytope, d, pattern, fmt } => cmd_ehrhart(polytope, d, pattern.as_deref(), fmt.format),
        Command::Swap { d, cache_dir, fmt } => cmd_swap(d, cache_dir.as_deref(), fmt.format),
        Command::Scan { d_max, p_max, fmt } => cmd_scan(d_max, p_max, fmt.format),
        Command::Leading { q, n_max, fmt } => cmd_leading(q, n_max, fmt.format),
        Command::Verify { suite, d_max, p_max, n_max, cache_dir, fmt } => {
            let def = suite.default_bounds();
            let bounds = Bounds {
                d_max: d_max.unwrap_or(def.d_max),
                p_max: p_max.unwrap_or(def.p_max),
                n_max: n_max.unwrap_or(def.n_max),
            };
            cmd_verify(suite, bounds, cache_dir.as_deref(), fmt.format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
    }
}
