//! `recip` — command-line front end for reciprocal-complement computations.
//!
//! Every command prints a single JSON line to stdout on success, or a JSON
//! error object to stderr with a nonzero exit status: 1 for domain/math
//! errors, 2 for usage errors (bad flags, malformed encodings). Output is
//! byte-stable for fixed inputs. `--json-in` runs a batch of commands from a
//! JSON array.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use recip_core::decompose::{
    decomposition_from_json, decomposition_to_json, distinctify_z, euclid_decompose,
    greedy_decompose_z, integer_expand, verify,
};
use recip_core::extension::{
    extension_from_json, extension_to_json, reciprocal_in_dx, verify_extension,
};
use recip_core::instances::{AnyDomain, PolyRing, Rationals};
use recip_core::recip::{
    bonaccian_split, classification_to_json, classify, d_intersect_r_check, is_in_r,
    membership_to_json, units_field_check, valuation, valuation_to_json,
};
use recip_core::search::{
    cross_check, cross_check_to_json, exhaustive_search, search_to_json, SearchSpec,
};
use recip_core::with_domain;
use recip_core::{EuclideanDomain, Fraction};

const DEFAULT_MAX_STATES: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "recip",
    version,
    about = "Unit-fraction decomposition, membership and valuation in reciprocal complements, \
             and the Egyptian/DVR dichotomy classifier, over Z, Z[i], F_p[x] and Q[x]"
)]
struct Cli {
    /// Batch mode: run a JSON array of command objects from FILE ("-" = stdin)
    #[arg(long, value_name = "FILE")]
    json_in: Option<String>,

    #[command(subcommand)]
    verb: Option<Verb>,
}

#[derive(Subcommand, Deserialize)]
#[serde(tag = "verb", rename_all = "lowercase")]
enum Verb {
    /// Decompose a fraction into a verified sum of unit fractions
    Decompose(DecomposeArgs),
    /// Decompose whichever of a fraction and its inverse is guaranteed Egyptian
    Split(ValueArgs),
    /// Decide membership in R(D), with certificate or refusal reason
    Member(ValueArgs),
    /// Uniformizer-adic valuation on a DVR-branch instance
    Val(ValueArgs),
    /// The Egyptian-vs-DVR verdict for an instance
    Classify(DomainArg),
    /// Re-verify a certificate produced by decompose/split/member/extend
    Verify(VerifyArgs),
    /// Expand 1/g, g over Q, into unit fractions from Z\[x\]
    Extend(ExtendArgs),
    /// Bounded exhaustive search for a unit-fraction representation
    Search(SearchArgs),
    /// Consistency sweeps: cross, units, intersect
    Check(CheckArgs),
}

#[derive(Args, Deserialize)]
struct DomainArg {
    /// Domain selector: z, zi, fp:P (P prime), qx
    #[arg(long)]
    domain: String,
}

#[derive(Args, Deserialize)]
struct DecomposeArgs {
    /// Domain selector: z, zi, fp:P (P prime), qx
    #[arg(long)]
    domain: String,
    /// Fraction, e.g. "4/5" or "(x+1)/(x+2)"; alternative to --num/--den
    #[arg(long)]
    value: Option<String>,
    /// Numerator element
    #[arg(long)]
    num: Option<String>,
    /// Denominator element
    #[arg(long)]
    den: Option<String>,
    /// euclid | greedy | integer (greedy and integer are z-only)
    #[arg(long, default_value = "euclid")]
    #[serde(default = "default_method")]
    method: String,
    /// Post-process into pairwise distinct denominators (z only)
    #[arg(long)]
    #[serde(default)]
    distinct: bool,
}

fn default_method() -> String {
    "euclid".to_string()
}

#[derive(Args, Deserialize)]
struct ValueArgs {
    /// Domain selector: z, zi, fp:P (P prime), qx
    #[arg(long)]
    domain: String,
    /// Fraction, e.g. "4/5" or "(x^2+1)/x"; alternative to --num/--den
    #[arg(long)]
    value: Option<String>,
    /// Numerator element
    #[arg(long)]
    num: Option<String>,
    /// Denominator element
    #[arg(long)]
    den: Option<String>,
}

#[derive(Args, Deserialize)]
struct VerifyArgs {
    /// Certificate file ("-" = stdin)
    #[arg(long)]
    cert: String,
}

#[derive(Args, Deserialize)]
struct ExtendArgs {
    /// Polynomial over Q, e.g. "x+1/3"
    #[arg(long)]
    g: String,
}

#[derive(Args, Deserialize)]
struct SearchArgs {
    /// Domain selector (must be enumerable: z, zi, fp:P)
    #[arg(long)]
    domain: String,
    /// Target fraction
    #[arg(long)]
    target: String,
    /// Bound on the euclidean value of each denominator
    #[arg(long)]
    max_value: i64,
    /// Maximum number of terms
    #[arg(long)]
    max_terms: usize,
    /// Require pairwise distinct denominators (default: multisets allowed)
    #[arg(long)]
    #[serde(default)]
    sets: bool,
}

#[derive(Args, Deserialize)]
struct CheckArgs {
    /// Domain selector
    #[arg(long)]
    domain: String,
    /// cross | units | intersect
    #[arg(long, default_value = "cross")]
    #[serde(default = "default_check")]
    what: String,
    /// Euclidean-value bound (cross, intersect)
    #[arg(long)]
    bound: Option<i64>,
    /// Term bound for the embedded search (cross)
    #[arg(long)]
    max_terms: Option<usize>,
}

fn default_check() -> String {
    "cross".to_string()
}

enum FailKind {
    Usage,
    Domain,
}

struct Failure {
    kind: FailKind,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            kind: FailKind::Usage,
            message: message.into(),
        }
    }

    fn to_json(&self) -> Value {
        json!({
            "error": {
                "kind": match self.kind {
                    FailKind::Usage => "usage",
                    FailKind::Domain => "domain",
                },
                "message": self.message,
            }
        })
    }
}

impl From<recip_core::Error> for Failure {
    fn from(e: recip_core::Error) -> Self {
        let kind = match e {
            recip_core::Error::Parse(_) | recip_core::Error::UnknownDomain(_) => FailKind::Usage,
            _ => FailKind::Domain,
        };
        Failure {
            kind,
            message: e.to_string(),
        }
    }
}

impl From<recip_core::ParseError> for Failure {
    fn from(e: recip_core::ParseError) -> Self {
        Failure::usage(e.to_string())
    }
}

fn parse_fraction<D: EuclideanDomain>(
    dom: &D,
    value: &Option<String>,
    num: &Option<String>,
    den: &Option<String>,
) -> Result<Fraction<D::Elem>, Failure> {
    match (value, num, den) {
        (Some(v), None, None) => Ok(Fraction::parse(dom, v)?),
        (None, Some(n), Some(d)) => {
            let n = dom.parse_elem(n)?;
            let d = dom.parse_elem(d)?;
            Ok(Fraction::reduce(dom, n, d)?)
        }
        (None, Some(n), None) => {
            let n = dom.parse_elem(n)?;
            Ok(Fraction::from_elem(dom, n))
        }
        _ => Err(Failure::usage("give either --value or --num [--den]")),
    }
}

fn state_budget() -> u64 {
    std::env::var("RECIP_MAX_STATES")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_STATES)
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {path:?}: {e}")))
    }
}

fn cmd_decompose(args: &DecomposeArgs) -> Result<Value, Failure> {
    let any = AnyDomain::from_selector(&args.domain)?;
    let mut out = match args.method.as_str() {
        "euclid" => with_domain!(&any, |dom| {
            let alpha = parse_fraction(dom, &args.value, &args.num, &args.den)?;
            let dec = euclid_decompose(dom, &alpha)?;
            decomposition_to_json(dom, &dec)
        }),
        "greedy" | "integer" => {
            let AnyDomain::Z(z) = &any else {
                return Err(Failure::usage(format!(
                    "method {:?} is only available on domain z",
                    args.method
                )));
            };
            let alpha = parse_fraction(z, &args.value, &args.num, &args.den)?;
            let dec = if args.method == "greedy" {
                greedy_decompose_z(&alpha)?
            } else {
                integer_expand(&alpha)?
            };
            decomposition_to_json(z, &dec)
        }
        other => {
            return Err(Failure::usage(format!(
                "unknown method {other:?} (expected euclid, greedy or integer)"
            )))
        }
    };
    if args.distinct {
        let AnyDomain::Z(z) = &any else {
            return Err(Failure::usage("--distinct is only available on domain z"));
        };
        let dec = decomposition_from_json(z, &out)?;
        let dec = distinctify_z(&dec)?;
        out = decomposition_to_json(z, &dec);
    }
    Ok(out)
}

fn cmd_split(args: &ValueArgs) -> Result<Value, Failure> {
    let any = AnyDomain::from_selector(&args.domain)?;
    with_domain!(&any, |dom| {
        let alpha = parse_fraction(dom, &args.value, &args.num, &args.den)?;
        let out = bonaccian_split(dom, &alpha)?;
        Ok(json!({
            "side": out.side.as_str(),
            "certificate": decomposition_to_json(dom, &out.certificate),
        }))
    })
}

fn cmd_member(args: &ValueArgs) -> Result<Value, Failure> {
    let any = AnyDomain::from_selector(&args.domain)?;
    with_domain!(&any, |dom| {
        let alpha = parse_fraction(dom, &args.value, &args.num, &args.den)?;
        Ok(membership_to_json(dom, &is_in_r(dom, &alpha)))
    })
}

fn cmd_val(args: &ValueArgs) -> Result<Value, Failure> {
    let any = AnyDomain::from_selector(&args.domain)?;
    with_domain!(&any, |dom| {
        let alpha = parse_fraction(dom, &args.value, &args.num, &args.den)?;
        Ok(valuation_to_json(&valuation(dom, &alpha)?))
    })
}

fn cmd_classify(args: &DomainArg) -> Result<Value, Failure> {
    let any = AnyDomain::from_selector(&args.domain)?;
    with_domain!(&any, |dom| Ok(classification_to_json(dom, &classify(dom))))
}

fn cmd_verify(args: &VerifyArgs) -> Result<Value, Failure> {
    let text = read_input(&args.cert)?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::usage(format!("certificate is not valid JSON: {e}")))?;
    if v.get("final_denominators").is_some() {
        let cert = extension_from_json(&v)?;
        return Ok(json!({ "valid": verify_extension(&cert) }));
    }
    let selector = v
        .get("domain")
        .and_then(Value::as_str)
        .ok_or_else(|| Failure::usage("certificate is missing \"domain\""))?;
    let any = AnyDomain::from_selector(selector)?;
    with_domain!(&any, |dom| {
        let dec = decomposition_from_json(dom, &v)?;
        let report = verify(dom, &dec);
        Ok(json!({
            "valid": report.valid,
            "distinct": report.distinct,
            "sum": report.sum.as_ref().map(|s| s.to_json(dom)),
            "reason": report.reason,
        }))
    })
}

fn cmd_extend(args: &ExtendArgs) -> Result<Value, Failure> {
    let qx = PolyRing::new(Rationals);
    let g = qx.parse_elem(&args.g)?;
    let cert = reciprocal_in_dx(&g)?;
    Ok(extension_to_json(&cert))
}

fn cmd_search(args: &SearchArgs) -> Result<Value, Failure> {
    let any = AnyDomain::from_selector(&args.domain)?;
    with_domain!(&any, |dom| {
        let target = Fraction::parse(dom, &args.target)?;
        let spec = SearchSpec {
            target,
            max_value: args.max_value,
            max_terms: args.max_terms,
            multiset_allowed: !args.sets,
        };
        let outcome = exhaustive_search(dom, &spec, Some(state_budget()))?;
        Ok(search_to_json(dom, &spec, &outcome))
    })
}

fn cmd_check(args: &CheckArgs) -> Result<Value, Failure> {
    let any = AnyDomain::from_selector(&args.domain)?;
    match args.what.as_str() {
        "cross" => {
            let bound = args
                .bound
                .ok_or_else(|| Failure::usage("--bound is required for --what cross"))?;
            let max_terms = args
                .max_terms
                .ok_or_else(|| Failure::usage("--max-terms is required for --what cross"))?;
            with_domain!(&any, |dom| {
                let report = cross_check(dom, bound, max_terms, Some(state_budget()))?;
                Ok(cross_check_to_json(&report))
            })
        }
        "units" => with_domain!(&any, |dom| {
            let r = units_field_check(dom);
            Ok(json!({
                "domain": dom.selector(),
                "is_field": r.is_field,
                "witness": r
                    .witness
                    .as_ref()
                    .map(|(a, b)| vec![dom.elem_to_json(a), dom.elem_to_json(b)]),
                "units": r.description,
            }))
        }),
        "intersect" => {
            let bound = args
                .bound
                .ok_or_else(|| Failure::usage("--bound is required for --what intersect"))?;
            with_domain!(&any, |dom| {
                let r = d_intersect_r_check(dom, bound)?;
                Ok(json!({
                    "pass": r.pass,
                    "checked": r.checked,
                    "counterexample": r.counterexample.as_ref().map(|e| dom.elem_to_json(e)),
                }))
            })
        }
        other => Err(Failure::usage(format!(
            "unknown check {other:?} (expected cross, units or intersect)"
        ))),
    }
}

fn run(verb: &Verb) -> Result<Value, Failure> {
    match verb {
        Verb::Decompose(a) => cmd_decompose(a),
        Verb::Split(a) => cmd_split(a),
        Verb::Member(a) => cmd_member(a),
        Verb::Val(a) => cmd_val(a),
        Verb::Classify(a) => cmd_classify(a),
        Verb::Verify(a) => cmd_verify(a),
        Verb::Extend(a) => cmd_extend(a),
        Verb::Search(a) => cmd_search(a),
        Verb::Check(a) => cmd_check(a),
    }
}

fn run_batch(path: &str) -> ExitCode {
    let text = match read_input(path) {
        Ok(t) => t,
        Err(f) => return fail(&f),
    };
    let commands: Vec<Verb> = match serde_json::from_str(&text) {
        Ok(c) => c,
        Err(e) => return fail(&Failure::usage(format!("batch input is not valid: {e}"))),
    };
    let mut all_ok = true;
    let results: Vec<Value> = commands
        .iter()
        .map(|verb| match run(verb) {
            Ok(v) => json!({ "ok": v }),
            Err(f) => {
                all_ok = false;
                f.to_json()
            }
        })
        .collect();
    println!("{}", serde_json::to_string(&results).expect("serializable"));
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn fail(f: &Failure) -> ExitCode {
    eprintln!("{}", f.to_json());
    match f.kind {
        FailKind::Usage => ExitCode::from(2),
        FailKind::Domain => ExitCode::from(1),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help and version print to stdout with status 0
            if e.kind() == clap::error::ErrorKind::DisplayHelp
                || e.kind() == clap::error::ErrorKind::DisplayVersion
            {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            return fail(&Failure::usage(e.to_string()));
        }
    };
    match (&cli.json_in, &cli.verb) {
        (Some(path), None) => run_batch(path),
        (None, Some(verb)) => match run(verb) {
            Ok(v) => {
                println!("{}", serde_json::to_string(&v).expect("serializable"));
                ExitCode::SUCCESS
            }
            Err(f) => fail(&f),
        },
        _ => fail(&Failure::usage(
            "give exactly one of a subcommand or --json-in (see --help)",
        )),
    }
}
