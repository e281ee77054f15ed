//! The `hopfforge` command line: element parsing, presentation files and
//! subcommand dispatch with plain-text or JSON output.

mod parse;
mod presentation;

pub use parse::{parse_element, parse_free, parse_word};
pub use presentation::{
    load_presentation, FieldSpec, GeneratorSpec, KindSpec, PresentationFile, RuleSpec,
};

use std::fmt::Write as _;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::freealg::Word;
use crate::growth::{
    ball_growth, gk_estimate, span_dimension_sequence, standard_generating_set,
    verify_hopf_subalgebra, DimSequence, DEFAULT_DIMENSION_CAP,
};
use crate::hopfstruct::{grading_check, hopf_axiom_report, GenKind, Grading, HopfPresentation};
use crate::liealg::LieAlgebra;
use crate::presets::build_str;
use crate::solver::{
    classify_skew_primitive, find_subalgebra_data, group_like_space, orbit_check,
    skew_primitive_space, MultiIndex, Window,
};

#[derive(Parser, Debug)]
#[command(
    name = "hopfforge",
    version,
    about = "Exact computation in pointed Hopf algebras"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Preset selector (F:t=1, A:b=1,xi=2, C:m=2, E:n=1, Zn:n=2, heis,
    /// zxz2, env:sl2, env:heis, env:<file>) or a presentation file.
    #[arg(long, global = true)]
    algebra: Option<String>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of an element.
    Nf { expr: String },
    /// Coproduct of an element.
    Coprod { expr: String },
    /// Antipode of an element.
    Antipode { expr: String },
    /// Counit of an element.
    Counit { expr: String },
    /// Randomized Hopf axiom report.
    CheckHopf {
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Randomized check that a grading is compatible with Δ and ε.
    CheckGrading {
        /// `y` (weight 1 on y) or `xy` (x-degree and y-degree).
        #[arg(long, default_value = "y")]
        grading: String,
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
    /// Skew-primitive elements for a pair of group-likes over a window.
    SkewPrim {
        #[arg(long = "pair-u", default_value = "1", allow_hyphen_values = true)]
        pair_u: String,
        #[arg(long = "pair-v", default_value = "1", allow_hyphen_values = true)]
        pair_v: String,
        #[arg(long, default_value_t = 1)]
        ydeg: u32,
        #[arg(long, default_value_t = 2)]
        ebound: i64,
    },
    /// Group-like words over a window.
    GroupLike {
        #[arg(long, default_value_t = 0)]
        ydeg: u32,
        #[arg(long, default_value_t = 2)]
        ebound: i64,
    },
    /// Normal shape of a skew-primitive element of F(t).
    Classify { expr: String },
    /// Orbit of a multi-index under τ^-1 σ.
    Orbit {
        /// Comma separated entries, e.g. `0,0,0`.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        #[arg(long, default_value_t = 10)]
        smax: usize,
    },
    /// Subalgebra data (f, ξ, β) from a group-like g and a skew-primitive y.
    FindSub {
        #[arg(long)]
        g: String,
        #[arg(long)]
        y: String,
        #[arg(long, default_value_t = crate::solver::DEFAULT_RELATION_CAP)]
        cap: usize,
    },
    /// Span dimensions of V^n and the GK-dimension estimate.
    Gk {
        /// Comma separated generating elements; default 1, generators and inverses.
        #[arg(long)]
        gens: Option<String>,
        #[arg(long = "N", default_value_t = 16)]
        n: usize,
    },
    /// Word-metric ball sizes of a group algebra.
    Ball {
        /// Comma separated group-like words; default all generators.
        #[arg(long)]
        gens: Option<String>,
        #[arg(long = "N", default_value_t = 12)]
        n: usize,
    },
    /// Two-dimensional subalgebra of a Lie algebra.
    LieSub {
        /// JSON file, or `sl2` / `heis`.
        #[arg(long)]
        lie: String,
    },
    /// Hopf-subalgebra closure check for the span of products of gens.
    VerifySub {
        #[arg(long)]
        gens: String,
        #[arg(long, default_value_t = 4)]
        cap: usize,
    },
}

/// Loads a preset selector or, if the argument names a file, a
/// presentation file.
pub fn load_algebra(sel: &str) -> Result<HopfPresentation> {
    if sel.ends_with(".json") || (Path::new(sel).is_file() && !sel.contains(':')) {
        load_presentation(sel)
    } else {
        build_str(sel)
    }
}

fn load_lie(sel: &str) -> Result<LieAlgebra> {
    match sel {
        "sl2" => Ok(LieAlgebra::sl2()),
        "heis" => Ok(LieAlgebra::heisenberg()),
        path => LieAlgebra::from_json(&std::fs::read_to_string(path)?),
    }
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|p| !p.is_empty())
}

/// Output text and whether the command found violations.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

fn emit(json: bool, v: Value, text: String) -> String {
    if json {
        let mut s = serde_json::to_string(&v).expect("serializable");
        s.push('\n');
        s
    } else {
        text
    }
}

fn dims_text(d: &DimSequence, estimate: String) -> String {
    let mut out = d.to_csv();
    let _ = writeln!(out, "# gk estimate: {estimate}");
    out
}

fn execute(cli: Cli) -> Result<Outcome> {
    let c = &cli.common;
    let algebra = || -> Result<HopfPresentation> {
        load_algebra(
            c.algebra
                .as_deref()
                .ok_or_else(|| Error::InvalidParameter("--algebra is required".into()))?,
        )
    };
    let out = match cli.cmd {
        Command::Nf { expr } => {
            let h = algebra()?;
            let p = parse_element(&expr, &h)?;
            let s = h.fmt(&p);
            Outcome::ok(emit(
                c.json,
                json!({"input": expr, "normal_form": s}),
                format!("{s}\n"),
            ))
        }
        Command::Coprod { expr } => {
            let h = algebra()?;
            let t = h.coproduct(&parse_element(&expr, &h)?)?;
            let s = t.display(h.alphabet());
            Outcome::ok(emit(
                c.json,
                json!({"input": expr, "coproduct": s, "terms": t.to_json(h.alphabet())}),
                format!("{s}\n"),
            ))
        }
        Command::Antipode { expr } => {
            let h = algebra()?;
            let s = h.fmt(&h.antipode(&parse_element(&expr, &h)?)?);
            Outcome::ok(emit(
                c.json,
                json!({"input": expr, "antipode": s}),
                format!("{s}\n"),
            ))
        }
        Command::Counit { expr } => {
            let h = algebra()?;
            let e = h.counit(&parse_element(&expr, &h)?).to_string();
            Outcome::ok(emit(
                c.json,
                json!({"input": expr, "counit": e}),
                format!("{e}\n"),
            ))
        }
        Command::CheckHopf { degree, trials } => {
            let h = algebra()?;
            let vs = hopf_axiom_report(&h, degree, trials, c.seed);
            let mut text = String::new();
            for v in &vs {
                let _ = writeln!(text, "{v}");
            }
            if vs.is_empty() {
                let _ = writeln!(
                    text,
                    "{}: all Hopf axiom checks pass ({trials} trials, degree {degree})",
                    h.name()
                );
            }
            Outcome {
                text: emit(
                    c.json,
                    json!({"algebra": h.name(), "passed": vs.is_empty(), "violations": vs}),
                    text,
                ),
                ok: vs.is_empty(),
            }
        }
        Command::CheckGrading { grading, trials } => {
            let h = algebra()?;
            let g = match grading.as_str() {
                "y" => Grading::y_grading(&h)?,
                "xy" => Grading::xy_bigrading(&h)?,
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "unknown grading '{other}'"
                    )))
                }
            };
            let vs = grading_check(&h, &g, trials, c.seed)?;
            let mut text = String::new();
            for v in &vs {
                let _ = writeln!(text, "{} fails on {}: {}", v.check, v.element, v.detail);
            }
            if vs.is_empty() {
                let _ = writeln!(
                    text,
                    "{}: {grading}-grading passes on {trials} words",
                    h.name()
                );
            }
            Outcome {
                text: emit(
                    c.json,
                    json!({"algebra": h.name(), "passed": vs.is_empty(), "violations": vs}),
                    text,
                ),
                ok: vs.is_empty(),
            }
        }
        Command::SkewPrim {
            pair_u,
            pair_v,
            ydeg,
            ebound,
        } => {
            let h = algebra()?;
            let u = parse_word(&pair_u, h.alphabet())?;
            let v = parse_word(&pair_v, h.alphabet())?;
            let sp = skew_primitive_space(&h, &u, &v, Window::new(ydeg, ebound))?;
            let mut text = format!(
                "dimension {} for pair ({}, {})\n",
                sp.dimension(),
                h.fmt_word(&sp.pair.0),
                h.fmt_word(&sp.pair.1)
            );
            for b in &sp.basis {
                let _ = writeln!(text, "{}", h.fmt(b));
            }
            Outcome::ok(emit(c.json, sp.to_json(&h), text))
        }
        Command::GroupLike { ydeg, ebound } => {
            let h = algebra()?;
            let ws: Vec<String> = group_like_space(&h, Window::new(ydeg, ebound))?
                .iter()
                .map(|w| h.fmt_word(w))
                .collect();
            let text = ws.iter().map(|w| format!("{w}\n")).collect();
            Outcome::ok(emit(
                c.json,
                json!({"window": {"max_y": ydeg, "ebound": ebound}, "count": ws.len(), "group_likes": ws}),
                text,
            ))
        }
        Command::Classify { expr } => {
            let h = algebra()?;
            let t = f_parameter(&h)?;
            let cl = classify_skew_primitive(&h, t, &parse_element(&expr, &h)?)?;
            Outcome::ok(emit(
                c.json,
                cl.to_json(&h),
                format!("{}\n", cl.describe(&h)),
            ))
        }
        Command::Orbit { beta, t, smax } => {
            let entries = split_list(&beta)
                .map(|s| {
                    s.parse::<i64>()
                        .map_err(|_| Error::InvalidParameter(format!("bad entry '{s}'")))
                })
                .collect::<Result<Vec<_>>>()?;
            let r = orbit_check(&MultiIndex::new(entries)?, t, smax)?;
            let mut text = String::new();
            for (s, im) in r.images.iter().enumerate() {
                let _ = writeln!(text, "s = {s}: {im}");
            }
            for m in &r.mismatches {
                let _ = writeln!(
                    text,
                    "mismatch at s = {}: {} vs closed form {}",
                    m.s, m.iterated, m.closed_form
                );
            }
            let _ = writeln!(
                text,
                "b = {}, closed form {}, distinct {}",
                r.b,
                if r.mismatches.is_empty() {
                    "matches"
                } else {
                    "fails"
                },
                r.distinct
            );
            let v = json!({
                "beta": r.beta.entries(),
                "t": r.t,
                "b": r.b,
                "images": r.images.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>(),
                "mismatches": r.mismatches.iter().map(|m| json!({"s": m.s, "iterated": m.iterated.entries(), "closed_form": m.closed_form.entries()})).collect::<Vec<_>>(),
                "distinct": r.distinct,
                "passed": r.passed(),
            });
            Outcome {
                text: emit(c.json, v, text),
                ok: r.passed(),
            }
        }
        Command::FindSub { g, y, cap } => {
            let h = algebra()?;
            let gw = parse_word(&g, h.alphabet())?;
            let yp = parse_element(&y, &h)?;
            let d = find_subalgebra_data(&h, &gw, &yp, cap)?;
            Outcome::ok(emit(c.json, d.to_json(&h), format!("{}\n", d.describe(&h))))
        }
        Command::Gk { gens, n } => {
            let h = algebra()?;
            let v = match gens {
                Some(s) => split_list(&s)
                    .map(|e| parse_element(e, &h))
                    .collect::<Result<Vec<_>>>()?,
                None => standard_generating_set(&h),
            };
            let d = span_dimension_sequence(&h, &v, n, DEFAULT_DIMENSION_CAP)?;
            sequence_outcome(c.json, d)?
        }
        Command::Ball { gens, n } => {
            let h = algebra()?;
            let words: Vec<Word> = match gens {
                Some(s) => split_list(&s)
                    .map(|e| parse_word(e, h.alphabet()))
                    .collect::<Result<_>>()?,
                None => (0..h.alphabet().generators().len())
                    .map(|g| h.alphabet().generator_word(g))
                    .collect(),
            };
            let d = ball_growth(&h, &words, n, DEFAULT_DIMENSION_CAP)?;
            sequence_outcome(c.json, d)?
        }
        Command::LieSub { lie } => {
            let l = load_lie(&lie)?;
            let (u, v) = l.two_dim_subalgebra()?;
            let w = l.bracket(&u, &v)?;
            let (us, vs, ws) = (l.fmt_vector(&u), l.fmt_vector(&v), l.fmt_vector(&w));
            Outcome::ok(emit(
                c.json,
                json!({"u": us, "v": vs, "bracket": ws}),
                format!("u = {us}, v = {vs}, [u,v] = {ws}\n"),
            ))
        }
        Command::VerifySub { gens, cap } => {
            let h = algebra()?;
            let g = split_list(&gens)
                .map(|e| parse_element(e, &h))
                .collect::<Result<Vec<_>>>()?;
            let r = verify_hopf_subalgebra(&h, &g, cap)?;
            let mut text = String::new();
            for v in &r.violations {
                let _ = writeln!(text, "{}: {}", v.element, v.detail);
            }
            if r.passed() {
                let _ = writeln!(
                    text,
                    "closed at cap {cap}: span dimension {}",
                    r.sequence.dims.last().copied().unwrap_or(0)
                );
            }
            Outcome {
                text: emit(c.json, r.to_json(), text),
                ok: r.passed(),
            }
        }
    };
    Ok(out)
}

fn sequence_outcome(json: bool, d: DimSequence) -> Result<Outcome> {
    let report = if d.dims.len() >= 8 {
        Some(gk_estimate(&d)?)
    } else {
        None
    };
    let v = match &report {
        Some(r) => r.to_json(),
        None => json!({"dims": d.dims, "description": d.description}),
    };
    let note = match report {
        Some(r) => r.describe(),
        None => "needs at least 8 terms".to_string(),
    };
    Ok(Outcome::ok(emit(json, v, dims_text(&d, note))))
}

/// `t` with `Δy = y ⊗ 1 + x^t ⊗ y`.
fn f_parameter(h: &HopfPresentation) -> Result<i64> {
    let x = h.gen_index("x")?;
    match &h.kinds()[h.gen_index("y")?] {
        GenKind::SkewPrimitive { pair } => Ok(h.alphabet().exponent_sums(pair)[x]),
        GenKind::GroupLike => Err(Error::Precondition("y is group-like".into())),
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit status with everything to print.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let json = cli.common.json;
    match execute(cli) {
        Ok(o) => (if o.ok { 0 } else { 1 }, o.text),
        Err(e) if json => (1, format!("{}\n", json!({"error": e.to_string()}))),
        Err(e) => (1, format!("error: {e}\n")),
    }
}
