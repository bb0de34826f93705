//! The `ordlen` command line.
//!
//! Exit codes: 0 on success, 1 when the computation rejects its input, 2 when
//! the input does not parse. Human output is colored only if `ORDLEN_COLOR=1`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::length::{
    self, check_semi_additivity, closure, dimension_filtration, fundamental_cycle_with_threads,
    grassmannian_oracle, is_closed, is_equilateral, is_parameter, open_report,
    polynomial_extension_length, polynomial_extension_length_recomputed, standard_pairs,
    FundamentalCycle, Subquotient,
};
use crate::monomial::{monomials_up_to, Monomial, MonomialIdeal, Ring};
use crate::ordinal::Ordinal;
use crate::poset::{format_poset, parse_poset, random_poset, FinitePoset};

#[derive(Debug, Parser)]
#[command(
    name = "ordlen",
    version,
    about = "Ordinal length of monomial subquotients"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Length of I/J.
    Length {
        #[command(flatten)]
        module: ModuleArgs,
        /// Also report the length after adjoining this many variables.
        #[arg(long)]
        extra_vars: Option<usize>,
    },
    /// Fundamental cycle (local multiplicities) of I/J.
    Cycle {
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Associated primes of I/J.
    Assoc {
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Dimension filtration of I/J with the length of each step.
    Dimfil {
        #[command(flatten)]
        module: ModuleArgs,
    },
    /// Whether the submodule generated by --sub is open.
    Open {
        #[command(flatten)]
        module: ModuleArgs,
        /// Generators of the submodule.
        #[arg(long)]
        sub: String,
    },
    /// Closure of the submodule generated by --sub.
    Closure {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        sub: String,
    },
    /// Parameter criterion for --element, or for every monomial up to --max-degree.
    Parameter {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        element: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
    },
    /// Semi-additivity checks for J ⊆ K ⊆ I, with K given by --sub (plus J).
    Semiadd {
        #[command(flatten)]
        module: ModuleArgs,
        #[arg(long)]
        sub: String,
    },
    /// Standard pairs of the ideal J.
    Stdpairs {
        #[arg(long)]
        vars: String,
        #[arg(long)]
        ideal: String,
    },
    /// Foundation ranks of a finite poset read from a file (or stdin), or of a
    /// random one when --seed is given.
    Poset {
        file: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 6)]
        size: usize,
        #[arg(long, default_value_t = 0.4)]
        edge_prob: f64,
    },
    /// Submodule-lattice length over F_2, for small Artinian I/J.
    Oracle {
        #[command(flatten)]
        module: ModuleArgs,
    },
}

#[derive(Debug, Args)]
pub struct ModuleArgs {
    /// Comma-separated variable names.
    #[arg(long)]
    pub vars: String,
    /// The lower ideal J.
    #[arg(long)]
    pub ideal: String,
    /// The upper ideal I; defaults to the whole ring.
    #[arg(long)]
    pub upper: Option<String>,
    /// Replace the module by its quotient by these generators.
    #[arg(long)]
    pub quotient_by: Option<String>,
    /// Worker threads for the prime scan.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

/// Wraps an error with the flag whose value caused it.
fn at(flag: &'static str) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Syntax { position, message } => Error::Syntax {
            position,
            message: format!("{message} (in --{flag})"),
        },
        other => other,
    }
}

struct Context {
    ring: Ring,
    module: Subquotient,
    threads: usize,
}

impl ModuleArgs {
    fn load(&self) -> Result<Context> {
        let ring = Ring::parse_vars(&self.vars).map_err(at("vars"))?;
        let lower = ring.parse_ideal(&self.ideal).map_err(at("ideal"))?;
        let upper = match &self.upper {
            Some(text) => ring.parse_ideal(text).map_err(at("upper"))?,
            None => MonomialIdeal::unit(ring.nvars()),
        };
        let mut module = Subquotient::new(upper, lower)?;
        if let Some(text) = &self.quotient_by {
            let gens = parse_generators(&ring, text, "quotient-by")?;
            module = module.quotient_by(&gens)?;
        }
        Ok(Context {
            ring,
            module,
            threads: self.threads.max(1),
        })
    }
}

fn parse_generators(ring: &Ring, text: &str, flag: &'static str) -> Result<Vec<Monomial>> {
    let ideal = ring.parse_ideal(text).map_err(at(flag))?;
    Ok(ideal.generators().to_vec())
}

struct Style {
    color: bool,
}

impl Style {
    fn from_env() -> Self {
        Style {
            color: std::env::var("ORDLEN_COLOR").is_ok_and(|v| v == "1"),
        }
    }

    fn label(&self, s: &str) -> String {
        if self.color {
            format!("\x1b[1m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }
}

fn cycle_json(ring: &Ring, cycle: &FundamentalCycle) -> Value {
    Value::Array(
        cycle
            .iter()
            .map(|(p, &mult)| json!({ "prime": ring.prime_names(p), "mult": mult }))
            .collect(),
    )
}

fn ordinal_json(a: &Ordinal) -> Value {
    serde_json::to_value(a).expect("ordinals serialize")
}

fn module_json(ring: &Ring, m: &Subquotient) -> Value {
    json!({
        "upper": ring.format_ideal(m.upper()),
        "lower": ring.format_ideal(m.lower()),
    })
}

/// A finished report: JSON payload plus its text rendering.
struct Report {
    json: Value,
    text: String,
}

fn execute(cli: &Cli, style: &Style) -> Result<Report> {
    let l = |s: &str| style.label(s);
    match &cli.command {
        Command::Length { module, extra_vars } => {
            let ctx = module.load()?;
            let cycle = fundamental_cycle_with_threads(&ctx.module, ctx.threads)?;
            let len = cycle.to_ordinal()?;
            let mut json = json!({
                "cycle": cycle_json(&ctx.ring, &cycle),
                "length": ordinal_json(&len),
                "pretty": len.to_string(),
            });
            let mut text = format!("{len}\n");
            if let Some(extra) = *extra_vars {
                let shortcut = polynomial_extension_length(&ctx.module, extra)?;
                let recomputed = polynomial_extension_length_recomputed(&ctx.module, extra)?;
                json["extension"] = json!({
                    "extra_vars": extra,
                    "shortcut": ordinal_json(&shortcut),
                    "recomputed": ordinal_json(&recomputed),
                    "pretty": shortcut.to_string(),
                    "agree": shortcut == recomputed,
                });
                text.push_str(&format!(
                    "{} {shortcut}\n{} {}\n",
                    l("extended:"),
                    l("recomputed agrees:"),
                    shortcut == recomputed
                ));
            }
            Ok(Report { json, text })
        }
        Command::Cycle { module } => {
            let ctx = module.load()?;
            let cycle = fundamental_cycle_with_threads(&ctx.module, ctx.threads)?;
            let len = cycle.to_ordinal()?;
            let mut text = String::new();
            for (p, mult) in cycle.iter() {
                text.push_str(&format!(
                    "{} {mult}\n",
                    l(&format!("{}:", ctx.ring.format_prime(p)))
                ));
            }
            text.push_str(&format!("{} {len}\n", l("length:")));
            Ok(Report {
                json: json!({
                    "cycle": cycle_json(&ctx.ring, &cycle),
                    "length": ordinal_json(&len),
                    "pretty": len.to_string(),
                }),
                text,
            })
        }
        Command::Assoc { module } => {
            let ctx = module.load()?;
            let primes = fundamental_cycle_with_threads(&ctx.module, ctx.threads)?.primes();
            let text: String = primes
                .iter()
                .map(|p| format!("{}\n", ctx.ring.format_prime(p)))
                .collect();
            let names: Vec<Vec<String>> = primes.iter().map(|p| ctx.ring.prime_names(p)).collect();
            Ok(Report {
                json: json!({ "primes": names }),
                text,
            })
        }
        Command::Dimfil { module } => {
            let ctx = module.load()?;
            let f = dimension_filtration(&ctx.module)?;
            let mut steps = Vec::new();
            let mut text = String::new();
            for (i, (step, len)) in f.steps.iter().zip(&f.lengths).enumerate() {
                steps.push(json!({
                    "dim": i,
                    "module": module_json(&ctx.ring, step),
                    "length": ordinal_json(len),
                    "pretty": len.to_string(),
                }));
                text.push_str(&format!(
                    "{} {} / {}  {} {len}\n",
                    l(&format!("fl d_{i}:")),
                    ctx.ring.format_ideal(step.upper()),
                    ctx.ring.format_ideal(step.lower()),
                    l("length")
                ));
            }
            text.push_str(&format!(
                "{} {}\n{} {}\n",
                l("truncations match:"),
                f.truncations_match,
                l("reconstruction:"),
                f.reconstruction
            ));
            Ok(Report {
                json: json!({
                    "steps": steps,
                    "total": ordinal_json(&f.total),
                    "truncations_match": f.truncations_match,
                    "reconstruction": ordinal_json(&f.reconstruction),
                    "reconstruction_matches": f.reconstruction_matches,
                }),
                text,
            })
        }
        Command::Open { module, sub } => {
            let ctx = module.load()?;
            let gens = parse_generators(&ctx.ring, sub, "sub")?;
            let r = open_report(&gens, &ctx.module)?;
            if r.by_length != r.by_valence || r.by_length != r.by_cycle {
                return Err(Error::Internal("openness criteria disagree".into()));
            }
            let equilateral = is_equilateral(&gens, &ctx.module)?;
            Ok(Report {
                text: format!(
                    "{} {}\n{} {}\n{} {}\n{} {equilateral}\n",
                    l("open:"),
                    r.by_length,
                    l("submodule length:"),
                    r.len_sub,
                    l("module length:"),
                    r.len_module,
                    l("equilateral:")
                ),
                json: json!({
                    "open": r.by_length,
                    "by_valence": r.by_valence,
                    "by_cycle": r.by_cycle,
                    "equilateral": equilateral,
                    "submodule_length": ordinal_json(&r.len_sub),
                    "module_length": ordinal_json(&r.len_module),
                }),
            })
        }
        Command::Closure { module, sub } => {
            let ctx = module.load()?;
            let gens = parse_generators(&ctx.ring, sub, "sub")?;
            let c = closure(&gens, &ctx.module)?;
            let closed = is_closed(&gens, &ctx.module)?;
            Ok(Report {
                text: format!(
                    "{} {}\n{} {closed}\n",
                    l("closure:"),
                    ctx.ring.format_ideal(c.upper()),
                    l("closed:")
                ),
                json: json!({
                    "closure": module_json(&ctx.ring, &c),
                    "closed": closed,
                }),
            })
        }
        Command::Parameter {
            module,
            element,
            max_degree,
        } => {
            let ctx = module.load()?;
            let elements = match element {
                Some(text) => vec![ctx.ring.parse_monomial(text).map_err(at("element"))?],
                None => monomials_up_to(ctx.ring.nvars(), *max_degree),
            };
            let mut rows = Vec::new();
            let mut text = String::new();
            for f in &elements {
                let r = is_parameter(f, &ctx.module)?;
                let name = ctx.ring.format_monomial(f);
                text.push_str(&format!(
                    "{} {}  (dim M = {}, dim M/fM = {}, dim ann = {})\n",
                    l(&format!("{name}:")),
                    r.is_parameter,
                    r.module_dim,
                    r.quotient_dim,
                    r.annihilator_dim
                ));
                let mut row = serde_json::to_value(&r).expect("report serializes");
                row["element"] = json!(name);
                rows.push(row);
            }
            Ok(Report {
                json: json!({ "elements": rows }),
                text,
            })
        }
        Command::Semiadd { module, sub } => {
            let ctx = module.load()?;
            let gens = parse_generators(&ctx.ring, sub, "sub")?;
            let middle = ctx.module.submodule(&gens)?;
            let r = check_semi_additivity(ctx.module.lower(), middle.upper(), ctx.module.upper())?;
            let text = format!(
                "{} {}\n{} {}\n{} {}\n{} {}\n{} {}\n{} {}\n{} {}\n{} {}\n{} {}\n",
                l("len N:"),
                r.len_sub,
                l("len M:"),
                r.len_module,
                l("len Q:"),
                r.len_quotient,
                l("len Q + len N <= len M:"),
                r.lower_holds,
                l("len M <= len Q # len N:"),
                r.upper_holds,
                l("sharpened lower bound:"),
                r.sharpened_lower_holds,
                l("len N weaker than len M:"),
                r.sub_weaker_holds,
                l("top additivity:"),
                r.top_additivity_holds,
                l("all hold:"),
                r.all_hold()
            );
            let mut json = serde_json::to_value(&r).expect("report serializes");
            json["all_hold"] = json!(r.all_hold());
            Ok(Report { json, text })
        }
        Command::Stdpairs { vars, ideal } => {
            let ring = Ring::parse_vars(vars).map_err(at("vars"))?;
            let i = ring.parse_ideal(ideal).map_err(at("ideal"))?;
            let pairs = standard_pairs(&i)?;
            let mut rows = Vec::new();
            let mut text = String::new();
            for p in &pairs {
                let free: Vec<String> = p
                    .free_variables()
                    .into_iter()
                    .map(|v| ring.names()[v].clone())
                    .collect();
                let mono = ring.format_monomial(&p.monomial);
                text.push_str(&format!("({mono}, {{{}}})\n", free.join(",")));
                rows.push(json!({ "monomial": mono, "free": free }));
            }
            let cycle = length::cycle_from_standard_pairs(&i)?;
            Ok(Report {
                json: json!({
                    "pairs": rows,
                    "cycle": cycle_json(&ring, &cycle),
                }),
                text,
            })
        }
        Command::Poset {
            file,
            seed,
            size,
            edge_prob,
        } => {
            let poset = match seed {
                Some(seed) => {
                    if !(0.0..=1.0).contains(edge_prob) {
                        return Err(Error::Precondition("--edge-prob must lie in [0, 1]".into()));
                    }
                    let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                    random_poset(*size, *edge_prob, &mut rng)?
                }
                None => parse_poset(&read_input(file.as_ref())?)?,
            };
            Ok(poset_report(&poset, seed.is_some(), style))
        }
        Command::Oracle { module } => {
            let ctx = module.load()?;
            let oracle = grassmannian_oracle(&ctx.module)?;
            let len = length::length_of(&ctx.module)?;
            let kdim = ctx.module.k_dimension()?;
            Ok(Report {
                text: format!(
                    "{} {oracle}\n{} {len}\n{} {kdim}\n",
                    l("oracle:"),
                    l("length:"),
                    l("k-dimension:")
                ),
                json: json!({
                    "oracle": ordinal_json(&oracle),
                    "length": ordinal_json(&len),
                    "k_dimension": kdim,
                    "agree": oracle == len && len == Ordinal::finite(kdim),
                }),
            })
        }
    }
}

fn poset_report(poset: &FinitePoset, show: bool, style: &Style) -> Report {
    let ranks = poset.ranks();
    let len = poset.length();
    let mut text = String::new();
    if show {
        text.push_str(&format_poset(poset));
    }
    text.push_str(&format!("{} {len}\n", style.label("length:")));
    for (i, r) in ranks.iter().enumerate() {
        text.push_str(&format!("{} {r}\n", style.label(&format!("rank {i}:"))));
    }
    Report {
        json: json!({
            "size": poset.len(),
            "relations": poset.relations(),
            "ranks": ranks,
            "length": ordinal_json(&len),
        }),
        text,
    }
}

fn read_input(file: Option<&PathBuf>) -> Result<String> {
    let read = match file {
        Some(path) => std::fs::read_to_string(path),
        None => std::io::read_to_string(std::io::stdin()),
    };
    read.map_err(|e| Error::Precondition(format!("cannot read poset input: {e}")))
}

/// Runs the CLI on `args` (including the program name), writing to the given
/// streams, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let style = Style::from_env();
    match execute(&cli, &style) {
        Ok(report) => {
            let written = if cli.json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&report.json).expect("json renders")
                )
            } else {
                write!(out, "{}", report.text)
            };
            if written.is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_parse_error() {
                2
            } else {
                1
            }
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
