//! The `reflekt` command line: `reflekt <verb> [input] [flags]`.
//!
//! Inputs are poset or space JSON files, or `builtin:<tag>` for the example
//! spaces. With `--trunc n` a builtin is replaced by its level-`n` fragment.

use std::io::Write;
use std::path::Path;

use clap::{Parser, ValueEnum};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::certificate::Certificate;
use crate::dot;
use crate::error::{Error, Result};
use crate::laws::{self, Scale};
use crate::order::{unlabeled_posets, FinitePoset, PosetJson};
use crate::reflect::{self, KindTag, Report};
use crate::symbolic::{self, closed_catalog, irc_extras, irreducible, SpaceId, JOHNSTONE_BOUND};
use crate::topology::{self, continuous_maps, ContinuousMap, FiniteSpace, Property, SpaceJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Topology,
    Irreducibles,
    Sobrify,
    Dcomplete,
    Ideals,
    Reflect,
    Complete,
    Check,
    Witness,
    Laws,
    Truncate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TopologyKind {
    Alexandroff,
    Scott,
    Upper,
}

#[derive(Debug, Parser)]
#[command(name = "reflekt", version, about = "Scott topologies, sobrification and K-reflections")]
pub struct Args {
    pub verb: Verb,
    /// Poset or space JSON file, or builtin:<tag>.
    pub input: Option<String>,
    /// Same as the positional input.
    #[arg(long)]
    pub space: Option<String>,
    /// Emit Graphviz instead of JSON.
    #[arg(long, conflicts_with = "json")]
    pub dot: bool,
    /// Emit JSON (the default).
    #[arg(long)]
    pub json: bool,
    /// Replace a builtin space by its level-n fragment.
    #[arg(long)]
    pub trunc: Option<u64>,
    /// Law scale override, key=value; repeatable.
    #[arg(long = "scale")]
    pub scale: Vec<String>,
    /// Expected verdict of `check`; a mismatch exits with 1.
    #[arg(long)]
    pub expect: Option<bool>,
    /// Seed for sampled maps in `reflect`.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of sampled maps when --seed is given.
    #[arg(long, default_value_t = 8)]
    pub samples: usize,
    /// Law ids to run; repeatable. All laws when absent.
    #[arg(long = "law")]
    pub law: Vec<String>,
    /// Property for `check`: sober, well-filtered or d-space.
    #[arg(long)]
    pub property: Option<String>,
    /// Reflection kind: sob, d or wf.
    #[arg(long)]
    pub kind: Option<String>,
    /// How a poset file becomes a space.
    #[arg(long, value_enum, default_value_t = TopologyKind::Alexandroff)]
    pub topology: TopologyKind,
    /// Description bound for symbolic enumerations.
    #[arg(long, default_value_t = JOHNSTONE_BOUND)]
    pub bound: u64,
}

/// What an input resolved to.
#[derive(Clone, Debug)]
pub enum Input {
    Poset(FinitePoset),
    Space(FiniteSpace),
    Builtin(SpaceId),
}

enum Output {
    Json(Value),
    Dot(String),
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

/// Runs the command line, writing the report to `out` and diagnostics to `err`.
pub fn run_with<W: Write, E: Write>(argv: &[String], out: &mut W, err: &mut E) -> i32 {
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let first = e.to_string().lines().next().unwrap_or_default().to_string();
                    let _ = writeln!(err, "reflekt: {}", first.trim_start_matches("error: "));
                    2
                }
            };
        }
    };
    match execute(&args) {
        Ok((output, code)) => {
            let _ = match output {
                Output::Json(v) => writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json")),
                Output::Dot(d) => write!(out, "{d}"),
            };
            code
        }
        Err(f) => {
            let _ = writeln!(err, "reflekt: {}", f.message);
            f.code
        }
    }
}

/// Runs against the process's standard streams.
pub fn run(argv: &[String]) -> i32 {
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// Resolves a builtin tag or reads a JSON file.
pub fn load_input(arg: &str, trunc: Option<u64>) -> Result<Input> {
    if arg.starts_with("builtin:") || !Path::new(arg).exists() && arg.parse::<SpaceId>().is_ok() {
        let id: SpaceId = arg.parse()?;
        return match trunc {
            Some(n) => Ok(Input::Poset(symbolic::truncate(id, n)?)),
            None => Ok(Input::Builtin(id)),
        };
    }
    let text = std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
    let raw: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
    if raw.get("elements").is_some() {
        let p: PosetJson = serde_json::from_value(raw).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
        Ok(Input::Poset(FinitePoset::from_json(&p)?))
    } else if raw.get("carrier").is_some() {
        let s: SpaceJson = serde_json::from_value(raw).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
        Ok(Input::Space(FiniteSpace::from_json(&s)?))
    } else {
        Err(Error::Parse(format!("{arg}: expected a poset (`elements`) or a space (`carrier`)")))
    }
}

fn kind_of(args: &Args) -> std::result::Result<KindTag, Failure> {
    match &args.kind {
        Some(k) => k.parse().map_err(|e: Error| usage(e.to_string())),
        None => Ok(KindTag::Sob),
    }
}

fn kind_for(property: Property) -> KindTag {
    match property {
        Property::Sober => KindTag::Sob,
        Property::WellFiltered => KindTag::Wf,
        Property::DSpace => KindTag::D,
    }
}

fn as_space(input: &Input, topology: TopologyKind) -> Result<FiniteSpace> {
    match input {
        Input::Space(x) => Ok(x.clone()),
        Input::Poset(p) => match topology {
            TopologyKind::Alexandroff => Ok(topology::alexandroff(p)),
            TopologyKind::Scott => topology::scott_space(p),
            TopologyKind::Upper => Ok(topology::upper_space(p)),
        },
        Input::Builtin(id) => Err(Error::Unsupported(format!("{id} is symbolic; pass --trunc n for a finite fragment"))),
    }
}

fn as_poset(input: &Input, verb: &str) -> std::result::Result<FinitePoset, Failure> {
    match input {
        Input::Poset(p) => Ok(p.clone()),
        _ => Err(usage(format!("`{verb}` needs a poset file or a truncated builtin"))),
    }
}

fn labels(x: &FiniteSpace, sets: &[crate::Subset]) -> Value {
    json!(sets.iter().map(|&s| x.labels_of(s)).collect::<Vec<_>>())
}

fn dot_or_json(args: &Args, dot: impl FnOnce() -> String, value: impl FnOnce() -> Value) -> Output {
    if args.dot {
        Output::Dot(dot())
    } else {
        Output::Json(value())
    }
}

fn no_dot(args: &Args) -> std::result::Result<(), Failure> {
    if args.dot {
        Err(usage(format!("--dot is not available for `{}`", verb_name(args.verb))))
    } else {
        Ok(())
    }
}

fn verb_name(v: Verb) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

fn execute(args: &Args) -> std::result::Result<(Output, i32), Failure> {
    if args.verb == Verb::Laws {
        no_dot(args)?;
        return laws_verb(args);
    }
    let arg = match (&args.input, &args.space) {
        (Some(_), Some(_)) => return Err(usage("give the input either positionally or with --space")),
        (Some(s), None) | (None, Some(s)) => s.clone(),
        (None, None) => return Err(usage(format!("`{}` needs an input", verb_name(args.verb)))),
    };
    let input = load_input(&arg, args.trunc).map_err(|e| usage(e.to_string()))?;
    let name = arg.trim_start_matches("builtin:").to_string();
    let ok = |o: Output| Ok((o, 0));
    match args.verb {
        Verb::Laws => unreachable!(),
        Verb::Truncate => {
            let Input::Poset(p) = &input else {
                return Err(usage("`truncate` needs a builtin space and --trunc n"));
            };
            if args.trunc.is_none() {
                return Err(usage("`truncate` needs --trunc n"));
            }
            ok(dot_or_json(args, || dot::poset(p, &name), || json!(p.to_json(false))))
        }
        Verb::Topology => match &input {
            Input::Builtin(id) => {
                no_dot(args)?;
                let forms: Vec<String> = closed_catalog(*id, args.bound).iter().map(|c| c.to_string()).collect();
                ok(Output::Json(json!({ "space": id, "bound": args.bound, "closed": forms })))
            }
            _ => {
                let x = as_space(&input, args.topology)?;
                ok(dot_or_json(args, || dot::closed_lattice(&x, &name), || json!(x.to_json())))
            }
        },
        Verb::Irreducibles => {
            no_dot(args)?;
            match &input {
                Input::Builtin(id) => {
                    let extras: Vec<Value> = irc_extras(*id, args.bound)?
                        .iter()
                        .map(|c| Ok(json!({ "set": c.to_string(), "irreducibility": irreducible(c)? })))
                        .collect::<Result<_>>()?;
                    ok(Output::Json(json!({
                        "space": id,
                        "bound": args.bound,
                        "principal": "every point closure",
                        "non_principal": extras,
                    })))
                }
                _ => {
                    let x = as_space(&input, args.topology)?;
                    ok(Output::Json(json!({ "irreducibles": labels(&x, &x.irreducibles()) })))
                }
            }
        }
        Verb::Sobrify | Verb::Reflect => {
            let kind = if args.verb == Verb::Sobrify { KindTag::Sob } else { kind_of(args)? };
            match &input {
                Input::Builtin(id) => {
                    no_dot(args)?;
                    let outcome = reflect::scott_kreflection(*id, kind)?;
                    ok(Output::Json(json!({ "report": Report::from(&outcome), "outcome": outcome })))
                }
                _ => {
                    let x = as_space(&input, args.topology)?;
                    let r = reflect::k_reflection(&x, kind)?;
                    if args.dot {
                        return ok(Output::Dot(dot::specialization(&r.target, &format!("{name}-{kind}"))));
                    }
                    let mut report = json!(Report::from(&r));
                    if let Some(seed) = args.seed {
                        report["sampled_extensions"] = sample_extensions(&r, seed, args.samples)?;
                    }
                    ok(Output::Json(report))
                }
            }
        }
        Verb::Dcomplete | Verb::Complete => {
            let kind = if args.verb == Verb::Dcomplete { KindTag::D } else { kind_of(args)? };
            match &input {
                Input::Builtin(id) => {
                    no_dot(args)?;
                    let c = reflect::ks_completion_symbolic(*id, kind)?;
                    ok(Output::Json(json!(Report::from(&c))))
                }
                _ => {
                    let p = as_poset(&input, &verb_name(args.verb))?;
                    let c = if kind == KindTag::D {
                        reflect::d_completion_alexandroff(&p)?
                    } else {
                        reflect::ks_completion(&p, kind)?
                    };
                    ok(dot_or_json(args, || dot::poset(&c.target, &name), || json!(Report::from(&c))))
                }
            }
        }
        Verb::Ideals => match &input {
            Input::Builtin(id) => {
                no_dot(args)?;
                ok(Output::Json(json!(reflect::symbolic_ideals(*id)?)))
            }
            _ => {
                let p = as_poset(&input, "ideals")?;
                let fam = p.ideals()?;
                let q = fam.poset(&p);
                let ideals: Vec<Value> = fam
                    .ideals
                    .iter()
                    .map(|&i| json!({ "ideal": p.labels_of(i), "principal": p.greatest(i).map(|g| p.label(g)) }))
                    .collect();
                ok(dot_or_json(args, || dot::poset(&q, &name), || json!({ "ideals": ideals, "order": q.to_json(false) })))
            }
        },
        Verb::Check => {
            no_dot(args)?;
            let property: Property = args
                .property
                .as_deref()
                .ok_or_else(|| usage("`check` needs --property"))?
                .parse()
                .map_err(|e: Error| usage(e.to_string()))?;
            let report = match &input {
                Input::Builtin(id) => {
                    let v = reflect::is_k_space(*id, kind_for(property))?;
                    json!({
                        "space": id,
                        "property": property,
                        "verdict": v.holds,
                        "witness": v.witness.map(|w| json!(w)).or(v.certificate.witness.clone()),
                        "certificate": v.certificate,
                    })
                }
                _ => {
                    let x = as_space(&input, args.topology)?;
                    let c = topology::check(&x, property)?;
                    json!({
                        "space": x.to_json(),
                        "property": property,
                        "verdict": c.holds,
                        "witness": c.witness,
                        "counts": c.counts,
                    })
                }
            };
            let code = match args.expect {
                Some(e) if report["verdict"].as_bool() != Some(e) => 1,
                _ => 0,
            };
            Ok((Output::Json(report), code))
        }
        Verb::Witness => {
            no_dot(args)?;
            match &input {
                Input::Builtin(id) => {
                    let w = symbolic::wf_witness(*id)?;
                    let code = if w.verified() { 0 } else { 1 };
                    Ok((Output::Json(json!({ "verified": w.verified(), "witness": w })), code))
                }
                _ => {
                    let x = as_space(&input, args.topology)?;
                    let c = topology::check(&x, Property::WellFiltered)?;
                    match c.witness {
                        Some(w) if !c.holds => ok(Output::Json(json!({ "verified": true, "witness": w }))),
                        _ => Err(Error::NoneKnown(format!("a well-filtered space on {} points", x.len())).into()),
                    }
                }
            }
        }
    }
}

fn laws_verb(args: &Args) -> std::result::Result<(Output, i32), Failure> {
    let mut scale = Scale::default();
    for kv in &args.scale {
        scale.apply(kv).map_err(|e| usage(e.to_string()))?;
    }
    let certs: Vec<Certificate> = if args.law.is_empty() {
        laws::run_all(&scale)
    } else {
        for id in &args.law {
            laws::find(id).map_err(|e| usage(e.to_string()))?;
        }
        args.law.iter().map(|id| laws::run_law(id, &scale)).collect::<Result<_>>()?
    };
    let code = if certs.iter().all(Certificate::passed) { 0 } else { 1 };
    Ok((Output::Json(json!(certs)), code))
}

/// Extends seeded random maps into small sober targets through the reflection.
fn sample_extensions(r: &reflect::Reflection, seed: u64, samples: usize) -> Result<Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..samples {
        let n = rng.gen_range(1..=3);
        let shapes = unlabeled_posets(n)?;
        let q = shapes.choose(&mut rng).expect("posets exist").clone();
        let y = topology::alexandroff(&q);
        let graphs = continuous_maps(&r.source, &y)?;
        let Some(g) = graphs.choose(&mut rng) else { continue };
        let f = ContinuousMap::new(r.source.clone(), y.clone(), g.clone())?;
        let ext = reflect::extend_map(r, &f)?;
        let show = |m: &ContinuousMap| -> Value {
            let x = m.source();
            json!((0..x.len()).map(|i| (x.label(i).to_string(), y.label(m.apply(i)).to_string())).collect::<std::collections::BTreeMap<_, _>>())
        };
        out.push(json!({
            "target": y.to_json(),
            "map": show(&f),
            "extension": show(&ext.map),
            "factorings": ext.factorings,
        }));
    }
    Ok(json!(out))
}
