//! Command-line front end. Every subcommand prints one self-describing
//! report (`schema_version`, echoed inputs, results) as JSON or text.
//!
//! Exit codes: `0` success, `1` usage error, `2` validation error, `3` the
//! computed character disagrees with the tabulated one on a documented row.

use crate::arthur_params::{ArthurParameter, ParseError};
use crate::cohomological_data::{
    aqlambda_regular, induction_weights_with, ktype_inequality_general, ktype_inequality_scalar, lambda_of,
    rho_vectors, weakly_fair, WeightShift,
};
use crate::component_chars::{
    component_group, cross_check_table, rho_pi_general, rho_sigma_general, Module, PacketCharacter,
};
use crate::error::Error;
use crate::langlands_data::{max_exponent, standard_pi, standard_sigma};
use crate::membership::{decide_pi, decide_regular, decide_sigma, enumerate_packets_pi, enumerate_packets_sigma};
use crate::orbit_tableaux::{av_scalar, pminus_rank, validate_tableau};
use crate::quadratic_invariants::{
    det_class, discriminant, first_occurrence, hasse_from_diagonal, hasse_normalized, howe_degree, howe_ktype,
    o_characters, signature_diagonal, OrthCharacter,
};
use crate::weights::{HighestWeight, InfinitesimalCharacter};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::Write;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_DISCREPANCY: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hwpack", version, about = "Arthur packets of unitary holomorphic modules of Sp(2n,R)")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleArg {
    Pi,
    Sigma,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftArg {
    /// `(t − a + 1)/2`
    TMinusA,
    /// `(t + a − 1)/2`
    TPlusA,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parameters whose packet contains π_n(m).
    EnumeratePi { n: usize, m: i64 },
    /// Parameters whose packet contains σ_{n,k}.
    EnumerateSigma { n: usize, k: i64 },
    /// Decide membership of a module in the packet of a parameter.
    Decide(DecideArgs),
    /// Character of the component group attached to a module in a packet.
    Rho(RhoArgs),
    /// Discriminant, Hasse invariant and characters of O(p,q).
    Invariants {
        p: u32,
        q: u32,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true, value_parser = parse_sign)]
        delta: i8,
    },
    /// Distinguished U(n)-type of the Howe lift of a character of O(p,q).
    Howe {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        /// triv, det, sgn1, sgn-1, sgn1det or sgn-1det.
        #[arg(long = "char", allow_hyphen_values = true)]
        character: String,
        #[arg(long)]
        rank: usize,
    },
    /// Langlands data of π_n(m) or σ_{n,k}.
    Standard {
        #[arg(value_enum)]
        module: ModuleArg,
        n: usize,
        /// m for π, k for σ.
        index: i64,
    },
    /// Associated variety of π_n(m) as a signed tableau.
    Tableau { n: usize, m: i64 },
    /// Data of θ-stable parabolic pairs and cohomological induction.
    Cohind {
        #[command(subcommand)]
        what: Cohind,
    },
}

#[derive(Args, Debug)]
pub struct DecideArgs {
    /// Parameter JSON, inline or a path to a file.
    #[arg(long)]
    pub param: String,
    #[command(flatten)]
    pub target: Target,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Target {
    #[arg(long)]
    pub pi: Option<i64>,
    #[arg(long)]
    pub sigma: Option<i64>,
    #[arg(long)]
    pub regular: Option<usize>,
}

#[derive(Args, Debug)]
pub struct RhoArgs {
    #[arg(long)]
    pub param: String,
    #[arg(long, value_enum)]
    pub module: ModuleArg,
    /// Whittaker normalization δ = ±1.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_sign)]
    pub whittaker: i8,
    /// m for π_n(m), k for σ_{n,k}; inferred from membership if omitted.
    #[arg(long)]
    pub index: Option<i64>,
}

#[derive(Subcommand, Debug)]
pub enum Cohind {
    /// Half-sums of roots for the pair (n, p, q).
    Rho { n: usize, p: usize, q: usize },
    /// λ(t) and the weakly fair test.
    Lambda {
        n: usize,
        p: usize,
        q: usize,
        #[arg(allow_hyphen_values = true)]
        t: i64,
    },
    /// The K-type inequality, for a scalar type (--m) or a weight (--weight).
    Inequality {
        p: usize,
        q: usize,
        #[arg(allow_hyphen_values = true)]
        t: i64,
        #[arg(long, conflicts_with = "weight", required_unless_present = "weight")]
        m: Option<i64>,
        /// Comma-separated (m_1, …, m_n).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weight: Option<Vec<i64>>,
    },
    /// Characters induced from the U(a_j) factors for a parameter.
    Weights {
        #[arg(long)]
        param: String,
        #[arg(long, value_enum, default_value_t = ShiftArg::TMinusA)]
        shift: ShiftArg,
    },
    /// A_q(λ) data of π_a for a regular infinitesimal character.
    Aq {
        /// Comma-separated χ_1 > … > χ_n > 0.
        #[arg(long, value_delimiter = ',')]
        chi: Vec<i64>,
        #[arg(long)]
        a: usize,
    },
}

fn parse_sign(s: &str) -> Result<i8, String> {
    match s {
        "1" | "+1" => Ok(1),
        "-1" => Ok(-1),
        _ => Err(format!("expected 1 or -1, got {s}")),
    }
}

/// A validation failure with machine-readable codes.
#[derive(Debug, Serialize)]
struct Failure {
    codes: Vec<String>,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let codes = match &e {
            Error::InvalidParameter(v) => v.iter().map(|x| x.code().to_string()).collect(),
            Error::ZeroRank | Error::OutOfRange { .. } => vec!["RANGE".into()],
            Error::NotDecreasing(_) | Error::InfChar(_) => vec!["INPUT".into()],
            Error::NotUnitary(_) => vec!["NOT_UNITARY".into()],
            Error::Precondition(_) => vec!["PRECONDITION".into()],
        };
        Failure { codes, message: e.to_string() }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        let codes = match &e {
            ParseError::Syntax(_) => vec!["PARSE".into()],
            ParseError::Invalid(v) => v.iter().map(|x| x.code().to_string()).collect(),
        };
        Failure { codes, message: e.to_string() }
    }
}

/// Successful output of a subcommand.
struct Outcome {
    inputs: Value,
    result: Value,
    text: Vec<String>,
    flags: Vec<String>,
}

impl Outcome {
    fn new(inputs: Value, result: Value, text: Vec<String>) -> Self {
        Outcome { inputs, result, text, flags: Vec::new() }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::EnumeratePi { .. } => "enumerate-pi",
        Command::EnumerateSigma { .. } => "enumerate-sigma",
        Command::Decide(_) => "decide",
        Command::Rho(_) => "rho",
        Command::Invariants { .. } => "invariants",
        Command::Howe { .. } => "howe",
        Command::Standard { .. } => "standard",
        Command::Tableau { .. } => "tableau",
        Command::Cohind { .. } => "cohind",
    }
}

/// Parses `args` (including the program name), runs the subcommand and
/// writes the report to `out`; diagnostics go to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return code;
        }
    };
    let name = command_name(&cli.command);
    match execute(&cli.command) {
        Ok(o) => {
            let code = if o.flags.iter().any(|f| f == "TABLE_DISCREPANCY") { EXIT_DISCREPANCY } else { EXIT_OK };
            let report = json!({
                "schema_version": SCHEMA_VERSION,
                "command": name,
                "inputs": o.inputs,
                "result": o.result,
                "flags": o.flags,
            });
            emit(out, cli.format, &report, name, &o.text, &o.flags);
            code
        }
        Err(f) => {
            let report = json!({
                "schema_version": SCHEMA_VERSION,
                "command": name,
                "error": f,
            });
            let text = vec![format!("error [{}]: {}", f.codes.join(", "), f.message)];
            emit(out, cli.format, &report, name, &text, &[]);
            let _ = writeln!(err, "hwpack {name}: {}", f.message);
            EXIT_VALIDATION
        }
    }
}

fn emit(out: &mut dyn Write, format: Format, report: &Value, name: &str, text: &[String], flags: &[String]) {
    let _ = match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(report).expect("serializable")),
        Format::Text => {
            let mut s = format!("# {name} (schema {SCHEMA_VERSION})\n");
            for l in text {
                s.push_str(l);
                s.push('\n');
            }
            for f in flags {
                s.push_str(&format!("flag: {f}\n"));
            }
            write!(out, "{s}")
        }
    };
}

fn load_param(arg: &str) -> Result<ArthurParameter, Failure> {
    let body = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Failure { codes: vec!["IO".into()], message: format!("cannot read {arg}: {e}") })?
    };
    Ok(ArthurParameter::from_json(&body)?)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn execute(cmd: &Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::EnumeratePi { n, m } => {
            let all = enumerate_packets_pi(*n, *m)?;
            Ok(packet_listing(json!({"n": n, "m": m}), all.len(), all.into_iter().filter(|e| e.verdict.member)))
        }
        Command::EnumerateSigma { n, k } => {
            let all = enumerate_packets_sigma(*n, *k)?;
            Ok(packet_listing(json!({"n": n, "k": k}), all.len(), all.into_iter().filter(|e| e.verdict.member)))
        }
        Command::Decide(a) => decide(a),
        Command::Rho(a) => rho(a),
        Command::Invariants { p, q, delta } => invariants(*p, *q, *delta),
        Command::Howe { p, q, character, rank } => howe(*p, *q, character, *rank),
        Command::Standard { module, n, index } => {
            let sm = match module {
                ModuleArg::Pi => standard_pi(*n, *index)?,
                ModuleArg::Sigma => standard_sigma(*n, *index)?,
            };
            let e = max_exponent(&sm);
            Ok(Outcome::new(
                json!({"module": format!("{module:?}").to_lowercase(), "n": n, "index": index}),
                json!({"standard_module": sm, "exponents": sm.exponents(), "max_exponent": e}),
                vec![format!("standard module: {sm}"), format!("max exponent: {e}")],
            ))
        }
        Command::Tableau { n, m } => {
            let t = av_scalar(*n, *m)?;
            let r = pminus_rank(&t);
            Ok(Outcome::new(
                json!({"n": n, "m": m}),
                json!({"rows": t, "boxes": t.total_boxes(), "pminus_rank": r, "valid": validate_tableau(&t, *n).is_ok()}),
                vec![format!("associated variety: {t}"), format!("rank in p⁻ chain: {}", r.unwrap_or_default())],
            ))
        }
        Command::Cohind { what } => cohind(what),
    }
}

fn packet_listing(inputs: Value, considered: usize, members: impl Iterator<Item = crate::membership::PacketEntry>) -> Outcome {
    let members: Vec<_> = members.collect();
    let text = members
        .iter()
        .map(|e| format!("{}  [{}]", e.psi, e.verdict.route.map_or("", |r| r.tag())))
        .collect();
    let rows: Vec<Value> = members
        .iter()
        .map(|e| json!({"parameter": e.psi, "route": e.verdict.route, "multiplicity": e.verdict.multiplicity}))
        .collect();
    Outcome::new(inputs, json!({"candidates": considered, "count": rows.len(), "packets": rows}), text)
}

fn decide(a: &DecideArgs) -> Result<Outcome, Failure> {
    let psi = load_param(&a.param)?;
    let n = psi.n;
    let t = &a.target;
    let (target, verdict) = if let Some(m) = t.pi {
        (json!({"module": "pi", "index": m}), to_value(&decide_pi(&psi, n, m)?))
    } else if let Some(k) = t.sigma {
        (json!({"module": "sigma", "index": k}), to_value(&decide_sigma(&psi, n, k)?))
    } else {
        let r = t.regular.expect("clap enforces one target");
        let member = decide_regular(&psi, r)?;
        let route = member.then_some("REGULAR");
        (json!({"module": "regular", "index": r}), json!({"member": member, "route": route, "multiplicity": u32::from(member)}))
    };
    let text = vec![
        format!("parameter: {psi}"),
        format!("member: {}", verdict["member"]),
        format!("route: {}", verdict["route"].as_str().unwrap_or("-")),
    ];
    Ok(Outcome::new(json!({"parameter": psi, "target": target}), verdict, text))
}

fn rho(a: &RhoArgs) -> Result<Outcome, Failure> {
    let psi = load_param(&a.param)?;
    let n = psi.n;
    let index = match a.index {
        Some(i) => i,
        None => infer_index(&psi, a.module)?,
    };
    let (computed, module): (PacketCharacter, Module) = match a.module {
        ModuleArg::Pi => (rho_pi_general(&psi, n, index, a.whittaker)?, Module::Pi),
        ModuleArg::Sigma => (rho_sigma_general(&psi, n, index, a.whittaker)?, Module::Sigma),
    };
    let cmp = cross_check_table(&psi, n, module, index, &computed)?;
    let mut text = vec![format!("parameter: {psi}"), format!("character: {computed}")];
    let mut flags = Vec::new();
    if let Some(c) = &cmp {
        text.push(format!("table row ({:?}, {:?}, m={}): {} — agrees: {}", c.form, c.column, c.m, c.table, c.agrees));
        if !c.agrees {
            flags.push("TABLE_DISCREPANCY".to_string());
        }
    }
    let g = component_group(&psi);
    Ok(Outcome {
        inputs: json!({"parameter": psi, "module": module, "index": index, "whittaker": a.whittaker}),
        result: json!({"character": computed, "component_group_order": g.order(), "table_comparison": cmp}),
        text,
        flags,
    })
}

fn infer_index(psi: &ArthurParameter, module: ModuleArg) -> Result<i64, Failure> {
    let n = psi.n;
    for i in 0..=n as i64 {
        let hit = match module {
            ModuleArg::Pi => decide_pi(psi, n, i)?.member,
            ModuleArg::Sigma => i >= 1 && 2 * i <= n as i64 && decide_sigma(psi, n, i)?.member,
        };
        if hit {
            return Ok(i);
        }
    }
    Err(Failure { codes: vec!["NOT_MEMBER".into()], message: format!("no module of this family lies in the packet of {psi}") })
}

fn invariants(p: u32, q: u32, delta: i8) -> Result<Outcome, Failure> {
    let eps = hasse_normalized(p, q, delta);
    let diag = hasse_from_diagonal(&signature_diagonal(p, q), delta);
    let chars = if (p + q) % 2 == 0 { Some(o_characters(p, q)?) } else { None };
    let mut text = vec![
        format!("discriminant: {}", discriminant(p, q)),
        format!("determinant class: {}", det_class(p, q)),
        format!("hasse ε (δ = {delta}): {eps}"),
    ];
    if let Some(cs) = &chars {
        text.push(format!(
            "characters of O({p},{q}): {}",
            cs.iter().map(|c| c.character.to_string()).collect::<Vec<_>>().join(", ")
        ));
    }
    Ok(Outcome::new(
        json!({"p": p, "q": q, "delta": delta}),
        json!({
            "discriminant": discriminant(p, q),
            "det_class": det_class(p, q),
            "hasse": eps,
            "hasse_from_diagonal": diag,
            "o_characters": chars,
        }),
        text,
    ))
}

fn howe(p: u32, q: u32, character: &str, rank: usize) -> Result<Outcome, Failure> {
    let c: OrthCharacter = character.parse()?;
    let w = howe_ktype(&c, p, q, rank)?;
    let first = first_occurrence(&c, p, q)?;
    let degree = w.as_ref().map(|w| howe_degree(w, p, q)).transpose()?;
    let text = vec![
        format!("character: {c} of O({p},{q})"),
        format!("first occurrence: {first}"),
        match &w {
            Some(w) => format!("U({rank})-type: {w:?}"),
            None => format!("no lift to rank {rank}"),
        },
    ];
    Ok(Outcome::new(
        json!({"p": p, "q": q, "char": c.to_string(), "rank": rank}),
        json!({"ktype": w, "first_occurrence": first, "degree": degree}),
        text,
    ))
}

fn cohind(what: &Cohind) -> Result<Outcome, Failure> {
    match what {
        Cohind::Rho { n, p, q } => {
            let r = rho_vectors(*n, *p, *q)?;
            let text = vec![
                format!("δ(l) = {}", r.delta_l),
                format!("δ(u∩p) = {}", r.delta_u_p),
                format!("δ(u∩k) = {}", r.delta_u_k),
                format!("δ(u) = {}", r.delta_u),
                format!("δ_pq = {}", r.delta_pq),
                format!("S = {}", r.s),
            ];
            Ok(Outcome::new(json!({"n": n, "p": p, "q": q}), to_value(&r), text))
        }
        Cohind::Lambda { n, p, q, t } => {
            let l = lambda_of(*n, *p, *q, *t)?;
            let fair = weakly_fair(*t);
            let text = vec![format!("λ = {l}"), format!("weakly fair: {fair}")];
            Ok(Outcome::new(json!({"n": n, "p": p, "q": q, "t": t}), json!({"lambda": l, "weakly_fair": fair}), text))
        }
        Cohind::Inequality { p, q, t, m, weight } => {
            let (inputs, holds) = match (m, weight) {
                (Some(m), _) => (json!({"p": p, "q": q, "t": t, "m": m}), ktype_inequality_scalar(*m, *p as i64, *q as i64, *t)),
                (None, Some(w)) => {
                    let mu = HighestWeight::new(w.clone())?;
                    (json!({"p": p, "q": q, "t": t, "weight": w}), ktype_inequality_general(&mu, mu.n(), *p, *q, *t)?)
                }
                (None, None) => unreachable!("clap requires --m or --weight"),
            };
            Ok(Outcome::new(inputs, json!({"holds": holds}), vec![format!("inequality holds: {holds}")]))
        }
        Cohind::Weights { param, shift } => {
            let psi = load_param(param)?;
            let s = match shift {
                ShiftArg::TMinusA => WeightShift::TMinusA,
                ShiftArg::TPlusA => WeightShift::TPlusA,
            };
            let w = induction_weights_with(&psi, psi.n, s)?;
            let text = w.iter().map(|x| format!("δ_{}⊠R[{}]: λ = {:?}", x.t, x.a, x.lambda())).collect();
            Ok(Outcome::new(json!({"parameter": psi, "shift": s}), json!({"weights": w}), text))
        }
        Cohind::Aq { chi, a } => {
            let c = InfinitesimalCharacter::from_half(chi);
            let aq = aqlambda_regular(&c, *a)?;
            let text = vec![
                format!("μ = {:?}", aq.mu.entries()),
                format!("λ = {}", aq.lambda),
                format!("λ + ρ = {}", aq.lambda_plus_rho),
            ];
            Ok(Outcome::new(json!({"chi": chi, "a": a}), to_value(&aq), text))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["hwpack"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn parses_negative_signs() {
        let (code, out) = call(&["invariants", "2", "0", "--delta", "-1"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["hasse"], -1);
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(call(&["decide", "--param", "{}"]).0, EXIT_USAGE);
        assert_eq!(call(&["nonsense"]).0, EXIT_USAGE);
        assert_eq!(call(&["invariants", "1", "1", "--delta", "2"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn text_format() {
        let (code, out) = call(&["--format", "text", "tableau", "3", "1"]);
        assert_eq!(code, 0);
        assert!(out.contains("+- +- + -"));
    }
}
