//! Command-line front end for `braid-core`.
//!
//! [`run`] executes one parsed [`Cli`] invocation and returns the exit code
//! with everything that would have been printed, so the binary is a thin
//! wrapper and tests can drive commands in-process.

use std::fmt::Write as _;
use std::io::BufRead;
use std::path::{Path, PathBuf};

use braid_core::{
    build_certificate, canonical_representative, dehornoy_compare, enumerate_intermediate,
    handle_reduce_trivial, is_trivial, lift_permutation, member, normal_form, partial_compare,
    run_identity_suite, subgroup_of, verify_certificate, BraidError, BraidWord, CaseTag, CycleType,
    OrderVerdict, PartialVerdict, Permutation, TorsionCertificate,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "braid", version, about = "Braid group computations")]
pub struct Cli {
    /// Strand count for every word (default: 1 + largest generator index).
    #[arg(long, global = true)]
    pub n: Option<usize>,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Garside left normal form; reads one word per line from stdin when no
    /// word is given.
    Nf { word: Option<String> },
    /// Decide whether two words represent the same braid.
    Eq { left: String, right: String },
    /// Decide whether a word is the identity braid.
    Trivial {
        word: String,
        #[arg(long, value_enum, default_value_t = Method::Garside)]
        method: Method,
    },
    /// Permutation of a word; batch mode like `nf`.
    Perm { word: Option<String> },
    /// Cycle type of the permutation of a word.
    CycleType { word: String },
    /// Exponent sum.
    Exp { word: String },
    /// Compare two braids.
    Cmp {
        #[arg(long, value_enum, default_value_t = Order::Dehornoy)]
        order: Order,
        left: String,
        right: String,
    },
    /// Intermediate subgroups.
    Subgroup {
        #[command(subcommand)]
        action: SubgroupAction,
    },
    /// Build or check a generalized torsion certificate.
    Witness(WitnessArgs),
    /// Run the identity suite.
    Identities {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
    /// Forget one strand of a (pure) braid.
    Forget {
        word: String,
        #[arg(long)]
        strand: usize,
    },
    /// Positive permutation braid for a permutation given by its images.
    Lift {
        /// Images of 1..n, e.g. "3 1 2".
        images: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Garside,
    Handle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Dehornoy,
    Partial,
}

#[derive(Debug, Subcommand)]
pub enum SubgroupAction {
    /// Whether `word` lies in the subgroup generated by `beta` and the pure braids.
    Member {
        #[arg(long)]
        beta: String,
        word: String,
    },
    /// Fixed representative of a cycle type.
    Canon {
        /// Cycle lengths, e.g. "3,2".
        #[arg(long = "type", value_delimiter = ',', required = true)]
        parts: Vec<usize>,
    },
    /// Descriptor of the subgroup generated by `beta` and the pure braids.
    Show {
        #[arg(long)]
        beta: String,
    },
    /// One subgroup per conjugacy class of subgroups of S_n (3 <= n <= 6).
    Enumerate,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct WitnessArgs {
    #[arg(long)]
    pub beta: Option<String>,
    /// Certificates for every non-pure cycle type on this many strands.
    #[arg(long)]
    pub scan: Option<usize>,
    /// Re-verify a certificate previously written with `--json`.
    #[arg(long)]
    pub verify_file: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("invalid certificate file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Json(_) | CliError::Braid(BraidError::Parse(_)) => 2,
            _ => 1,
        }
    }
}

/// What a command printed and how it ended.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn parse_word(text: &str, n: Option<usize>) -> Result<BraidWord, BraidError> {
    BraidWord::parse(text, n)
}

/// Text syntax of a word; `parse_word` reads it back letter for letter.
pub fn format_word(w: &BraidWord) -> String {
    w.to_string()
}

/// Parses several words onto a common strand count.
fn parse_words(texts: &[&str], n: Option<usize>) -> Result<Vec<BraidWord>, BraidError> {
    let n = match n {
        Some(n) => n,
        None => texts
            .iter()
            .map(|t| parse_word(t, None).map(|w| w.strands()))
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .max()
            .unwrap_or(1),
    };
    texts.iter().map(|t| parse_word(t, Some(n))).collect()
}

pub fn run(cli: &Cli, stdin: &mut dyn BufRead) -> Outcome {
    let mut out = Outcome::default();
    match dispatch(cli, stdin, &mut out.stdout) {
        Ok(code) => out.code = code,
        Err(e) => {
            out.code = e.exit_code();
            out.stderr = format!("error: {e}\n");
        }
    }
    out
}

fn dispatch(cli: &Cli, stdin: &mut dyn BufRead, out: &mut String) -> Result<i32, CliError> {
    let n = cli.n;
    let json = cli.json;
    match &cli.command {
        Command::Nf { word } => batch(word.as_deref(), stdin, out, |line| {
            let nf = normal_form(&parse_word(line, n)?);
            Ok(if json {
                let factors: Vec<Vec<usize>> =
                    nf.factors().iter().map(Permutation::one_line).collect();
                json!({ "n": nf.strands(), "delta_power": nf.delta_power(), "factors": factors })
                    .to_string()
            } else {
                nf.to_string()
            })
        }),
        Command::Perm { word } => batch(word.as_deref(), stdin, out, |line| {
            let p = parse_word(line, n)?.permutation();
            Ok(if json {
                json!({ "n": p.degree(), "images": p.one_line(), "cycles": p.to_string() })
                    .to_string()
            } else {
                format!("{} {}", p.one_line_string(), p)
            })
        }),
        Command::Eq { left, right } => {
            let words = parse_words(&[left, right], n)?;
            let v = braid_core::equal(&words[0], &words[1])?;
            if json {
                let value = json!({
                    "equal": v.equal,
                    "left": v.left_normal_form.to_string(),
                    "right": v.right_normal_form.to_string(),
                });
                writeln!(out, "{value}").unwrap();
            } else {
                writeln!(out, "{}", if v.equal { "equal" } else { "not equal" }).unwrap();
            }
            Ok(0)
        }
        Command::Trivial { word, method } => {
            let w = parse_word(word, n)?;
            let verdict = match method {
                Method::Garside => is_trivial(&w),
                Method::Handle => handle_reduce_trivial(&w)?,
                Method::Both => {
                    let (a, b) = (is_trivial(&w), handle_reduce_trivial(&w)?);
                    if a != b {
                        return Err(CliError::Usage(format!("deciders disagree on `{w}`")));
                    }
                    a
                }
            };
            line(
                out,
                json,
                json!({ "trivial": verdict }),
                if verdict { "trivial" } else { "nontrivial" },
            );
            Ok(0)
        }
        Command::CycleType { word } => {
            let t = parse_word(word, n)?.permutation().cycle_type();
            line(
                out,
                json,
                json!({ "n": t.degree(), "parts": t.parts() }),
                &t.to_string(),
            );
            Ok(0)
        }
        Command::Exp { word } => {
            let e = parse_word(word, n)?.exponent_sum();
            line(out, json, json!({ "exponent_sum": e }), &e.to_string());
            Ok(0)
        }
        Command::Cmp { order, left, right } => {
            let words = parse_words(&[left, right], n)?;
            let text = match order {
                Order::Dehornoy => match dehornoy_compare(&words[0], &words[1])? {
                    OrderVerdict::Less => "<",
                    OrderVerdict::Equal => "=",
                    OrderVerdict::Greater => ">",
                },
                Order::Partial => match partial_compare(&words[0], &words[1])? {
                    PartialVerdict::Less => "<",
                    PartialVerdict::Equal => "=",
                    PartialVerdict::Greater => ">",
                    PartialVerdict::Incomparable => "incomparable",
                },
            };
            line(
                out,
                json,
                json!({ "order": format!("{order:?}").to_lowercase(), "verdict": text }),
                text,
            );
            Ok(0)
        }
        Command::Subgroup { action } => subgroup(action, n, json, out),
        Command::Witness(args) => witness(args, n, json, out),
        Command::Identities { n_max } => {
            let report = run_identity_suite(*n_max)?;
            if json {
                let checks: Vec<_> = report
                    .checks
                    .iter()
                    .map(|c| json!({ "identity": c.identity, "parameters": c.parameters, "passed": c.passed }))
                    .collect();
                let value = json!({ "all_passed": report.all_passed(), "checks": checks });
                writeln!(out, "{value}").unwrap();
            } else {
                writeln!(out, "{report}").unwrap();
            }
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Command::Forget { word, strand } => {
            let image = parse_word(word, n)?.forget_strand(*strand)?;
            let value = json!({ "n": image.strands(), "word": format_word(&image) });
            line(out, json, value, &format_word(&image));
            Ok(0)
        }
        Command::Lift { images } => {
            let images = images
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| CliError::Usage(format!("bad image `{s}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let w = lift_permutation(&Permutation::from_images(&images)?);
            line(
                out,
                json,
                json!({ "n": w.strands(), "word": format_word(&w) }),
                &format_word(&w),
            );
            Ok(0)
        }
    }
}

fn line(out: &mut String, json: bool, value: serde_json::Value, text: &str) {
    if json {
        writeln!(out, "{value}").unwrap();
    } else {
        writeln!(out, "{text}").unwrap();
    }
}

/// Applies `f` to the given word, or to every line of `stdin` when there is
/// none. Lines starting with `#` are skipped.
fn batch(
    word: Option<&str>,
    stdin: &mut dyn BufRead,
    out: &mut String,
    f: impl Fn(&str) -> Result<String, BraidError>,
) -> Result<i32, CliError> {
    if let Some(word) = word {
        writeln!(out, "{}", f(word)?).unwrap();
        return Ok(0);
    }
    for (k, text) in stdin.lines().enumerate() {
        let text = text?;
        if text.trim_start().starts_with('#') {
            continue;
        }
        let result = f(&text).map_err(|e| match e {
            BraidError::Parse(t) => BraidError::Parse(format!("{t}` on line {}", k + 1)),
            other => other,
        })?;
        writeln!(out, "{result}").unwrap();
    }
    Ok(0)
}

/// JSON descriptor of an intermediate subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescriptorJson {
    pub n: usize,
    pub generator_perm: Vec<usize>,
    pub order: usize,
}

fn subgroup(
    action: &SubgroupAction,
    n: Option<usize>,
    json: bool,
    out: &mut String,
) -> Result<i32, CliError> {
    match action {
        SubgroupAction::Member { beta, word } => {
            let words = parse_words(&[beta, word], n)?;
            let verdict = member(&subgroup_of(&words[0]), &words[1])?;
            line(
                out,
                json,
                json!({ "member": verdict }),
                if verdict { "member" } else { "not a member" },
            );
        }
        SubgroupAction::Canon { parts } => {
            let n = n.unwrap_or_else(|| parts.iter().sum());
            let t = CycleType::new(n, parts)?;
            let rep = canonical_representative(&t)?;
            line(
                out,
                json,
                json!({ "n": n, "type": t.to_string(), "word": format_word(&rep) }),
                &format_word(&rep),
            );
        }
        SubgroupAction::Show { beta } => {
            let h = subgroup_of(&parse_word(beta, n)?);
            let d = DescriptorJson {
                n: h.strands(),
                generator_perm: h.generator_perm().one_line(),
                order: h.order(),
            };
            if json {
                writeln!(out, "{}", serde_json::to_string(&d)?).unwrap();
            } else {
                let elements: Vec<String> = h
                    .cyclic_elements()
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                writeln!(
                    out,
                    "n = {}, generator {}, order {}",
                    d.n,
                    h.generator_perm(),
                    d.order
                )
                .unwrap();
                writeln!(out, "elements: {}", elements.join(" ")).unwrap();
            }
        }
        SubgroupAction::Enumerate => {
            let n = n.ok_or_else(|| CliError::Usage("`subgroup enumerate` needs --n".into()))?;
            let all = enumerate_intermediate(n)?;
            for d in &all {
                let gens: Vec<String> = d.generators.iter().map(ToString::to_string).collect();
                let lifts: Vec<String> = d.generator_braids.iter().map(format_word).collect();
                let value = json!({ "n": d.n, "order": d.order, "generators": gens, "generator_braids": lifts });
                let text = format!("order {:>3}: generators [{}]", d.order, gens.join(", "));
                line(out, json, value, &text);
            }
            if !json {
                writeln!(out, "{} classes", all.len()).unwrap();
            }
        }
    }
    Ok(0)
}

/// A torsion certificate as exchanged in JSON; braid words use the text
/// syntax.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub n: usize,
    pub beta: String,
    pub case: String,
    pub x: String,
    pub y: String,
    pub p: u32,
    pub commutator: String,
    pub conjugators: Vec<String>,
    pub verified: bool,
}

impl WitnessJson {
    pub fn from_certificate(c: &TorsionCertificate, verified: bool) -> Self {
        Self {
            n: c.n,
            beta: format_word(&c.beta),
            case: c.case.to_string(),
            x: format_word(&c.x),
            y: format_word(&c.y),
            p: c.p,
            commutator: format_word(&c.g),
            conjugators: c.conjugators.iter().map(format_word).collect(),
            verified,
        }
    }

    pub fn to_certificate(&self) -> Result<TorsionCertificate, BraidError> {
        let word = |t: &str| parse_word(t, Some(self.n));
        Ok(TorsionCertificate {
            n: self.n,
            beta: word(&self.beta)?,
            case: self.case.parse::<CaseTag>()?,
            x: word(&self.x)?,
            y: word(&self.y)?,
            p: self.p,
            g: word(&self.commutator)?,
            conjugators: self
                .conjugators
                .iter()
                .map(|t| word(t))
                .collect::<Result<_, _>>()?,
        })
    }
}

fn read_certificate(path: &Path) -> Result<WitnessJson, CliError> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn witness(
    args: &WitnessArgs,
    n: Option<usize>,
    json: bool,
    out: &mut String,
) -> Result<i32, CliError> {
    if let Some(beta) = &args.beta {
        let c = build_certificate(&parse_word(beta, n)?)?;
        let report = verify_certificate(&c);
        if json {
            let value = WitnessJson::from_certificate(&c, report.all_passed());
            writeln!(out, "{}", serde_json::to_string_pretty(&value)?).unwrap();
        } else {
            writeln!(out, "n: {}\nbeta: {}\ncase: {}", c.n, c.beta, c.case).unwrap();
            writeln!(
                out,
                "x: {}\ny: {}\np: {}\ncommutator: {}",
                c.x, c.y, c.p, c.g
            )
            .unwrap();
            writeln!(out, "conjugators: {}", c.conjugators.len()).unwrap();
            write!(out, "{report}").unwrap();
        }
        return Ok(if report.all_passed() { 0 } else { 1 });
    }
    if let Some(strands) = args.scan {
        let mut failures = 0;
        let mut rows = Vec::new();
        for t in CycleType::all_nontrivial(strands) {
            let c = build_certificate(&canonical_representative(&t)?)?;
            let passed = verify_certificate(&c).all_passed();
            failures += usize::from(!passed);
            if json {
                rows.push(json!({ "type": t.to_string(), "case": c.case.to_string(), "p": c.p, "verified": passed }));
            } else {
                let verdict = if passed { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict} {t} {} p={}", c.case, c.p).unwrap();
            }
        }
        if json {
            writeln!(
                out,
                "{}",
                json!({ "n": strands, "types": rows, "failures": failures })
            )
            .unwrap();
        }
        return Ok(if failures == 0 { 0 } else { 1 });
    }
    if let Some(path) = &args.verify_file {
        let stored = read_certificate(path)?;
        let report = verify_certificate(&stored.to_certificate()?);
        if json {
            let checks: Vec<_> = report
                .checks
                .iter()
                .map(|c| json!({ "check": c.name, "passed": c.passed }))
                .collect();
            writeln!(
                out,
                "{}",
                json!({ "verified": report.all_passed(), "checks": checks })
            )
            .unwrap();
        } else {
            write!(out, "{report}").unwrap();
        }
        return Ok(if report.all_passed() { 0 } else { 1 });
    }
    Err(CliError::Usage(
        "witness needs one of --beta, --scan, --verify-file".into(),
    ))
}
