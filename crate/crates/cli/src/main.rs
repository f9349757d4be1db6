use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use bstar_core::constructions::{named, product, stacked_sphere};
use bstar_core::properties::{self as props, Verdict};
use bstar_core::verify::{self, SuiteOptions};
use bstar_core::{homology, io, limits, rigidity, vectors, Complex, FieldSpec};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "bstar",
    version,
    about = "Homological properties of simplicial complexes"
)]
struct Cli {
    /// Coefficient field: `q` or `gf:<p>`. Repeatable; defaults to q and gf:2.
    #[arg(long = "field", global = true, value_parser = parse_field)]
    fields: Vec<FieldSpec>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Refuse complexes with more faces than this (also BSTAR_MAX_FACES).
    #[arg(long, global = true)]
    max_faces: Option<usize>,

    /// Refuse m-fold deletion checks needing more vertex subsets than this.
    #[arg(long, global = true)]
    max_subsets: Option<u64>,

    /// Seed for randomized rigidity placements.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Decide properties of a complex.
    Check {
        /// A facet file (JSON or text) or `named:<name>`.
        input: String,
        /// Only these properties. `m_cohen_macaulay:M`, `m_buchsbaum:M` and
        /// `m_buchsbaum_star:M` take a multiplicity.
        #[arg(long = "property")]
        properties: Vec<String>,
        /// Also report vertex connectivity and generic rigidity of the graph.
        #[arg(long)]
        graph: bool,
        /// Rigidity trials per field.
        #[arg(long, default_value_t = rigidity::DEFAULT_TRIALS)]
        trials: usize,
    },
    /// f, h, h', h'' and g vectors.
    Vectors { input: String },
    /// Reduced Betti numbers.
    Homology { input: String },
    /// Build a complex and write it as canonical JSON.
    Construct {
        #[command(subcommand)]
        op: Construct,
        /// Output file; standard output if omitted.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Run the full consistency suite over a corpus.
    Verify {
        /// Corpus directory of facet files.
        dir: Option<PathBuf>,
        /// Use the built-in corpus.
        #[arg(long, conflicts_with = "dir")]
        builtin: bool,
        #[arg(long, default_value_t = rigidity::DEFAULT_TRIALS)]
        trials: usize,
    },
}

#[derive(Subcommand)]
enum Construct {
    Join {
        a: String,
        b: String,
    },
    Product {
        a: String,
        b: String,
    },
    Skeleton {
        a: String,
        dim: isize,
    },
    Cone {
        a: String,
    },
    Stacked {
        n: usize,
        d: usize,
    },
    Named {
        name: String,
    },
    /// Write the built-in corpus under `<out>/corpus-v1/`.
    Corpus,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse::<FieldSpec>().map_err(|e| e.to_string())
}

fn load(source: &str) -> Result<Complex> {
    io::load(source).with_context(|| format!("cannot load {source}"))
}

fn emit(format: Format, value: &Value, text: impl FnOnce() -> String) {
    match format {
        Format::Json => print!("{}", io::to_canonical_string(value)),
        Format::Text => print!("{}", text()),
    }
}

fn property_verdict(c: &Complex, field: FieldSpec, name: &str) -> Result<Verdict> {
    let (base, m) = match name.split_once(':') {
        Some((b, m)) => (
            b,
            Some(
                m.parse::<usize>()
                    .with_context(|| format!("bad multiplicity in {name}"))?,
            ),
        ),
        None => (name, None),
    };
    let v = match (base, m) {
        ("cohen_macaulay" | "cm", None) => props::is_cohen_macaulay(c, field)?,
        ("doubly_cohen_macaulay", None) => props::is_doubly_cohen_macaulay(c, field)?,
        ("buchsbaum", None) => props::is_buchsbaum(c, field)?,
        ("doubly_buchsbaum", None) => props::is_doubly_buchsbaum(c, field)?,
        ("buchsbaum_star" | "buchsbaum*", None) => props::is_buchsbaum_star(c, field)?,
        ("doubly_buchsbaum_star", None) => props::is_m_buchsbaum_star(c, field, 2)?,
        ("gorenstein_star" | "gorenstein*", None) => props::is_gorenstein_star(c, field)?,
        ("m_cohen_macaulay", Some(m)) => props::is_m_cohen_macaulay(c, field, m)?,
        ("m_buchsbaum", Some(m)) => props::is_m_buchsbaum(c, field, m)?,
        ("m_buchsbaum_star", Some(m)) => props::is_m_buchsbaum_star(c, field, m)?,
        ("homology_manifold" | "orientable_homology_manifold", None) => {
            let info = match props::homology_manifold(c, field) {
                Err(bstar_core::Error::NotPure) => {
                    return Ok(Verdict {
                        holds: false,
                        witness: props::is_buchsbaum(c, field)?.witness,
                    })
                }
                other => other?,
            };
            let holds = info.manifold && (base == "homology_manifold" || info.orientable);
            Verdict {
                holds,
                witness: info.witness,
            }
        }
        _ => bail!(
            "unknown property {name}; known: {}",
            props::PROPERTIES.join(", ")
        ),
    };
    Ok(v)
}

fn cmd_check(
    cli: &Cli,
    fields: &[FieldSpec],
    input: &str,
    properties: &[String],
    graph: bool,
    trials: usize,
) -> Result<()> {
    let c = load(input)?;
    let mut per_field = serde_json::Map::new();
    let mut text = String::new();
    for &f in fields {
        let (mut entry, witnesses) = if properties.is_empty() {
            let r = props::property_report(&c, f)?;
            (io::to_canonical_value(&r), r.witnesses)
        } else {
            let mut verdicts = BTreeMap::new();
            let mut witnesses = BTreeMap::new();
            for name in properties {
                let v = property_verdict(&c, f, name)?;
                verdicts.insert(name.clone(), v.holds);
                if let Some(w) = v.witness {
                    witnesses.insert(name.clone(), w);
                }
            }
            let value = json!({"field": f, "verdicts": verdicts, "witnesses": witnesses});
            (io::to_canonical_value(&value), witnesses)
        };
        // Plain-language witnesses next to the structured ones.
        let explained: BTreeMap<String, String> = witnesses
            .iter()
            .map(|(k, w)| (k.clone(), w.to_string()))
            .collect();
        let _ = writeln!(text, "field {f}");
        if let Some(v) = entry["verdicts"].as_object() {
            for (k, holds) in v {
                let why = explained
                    .get(k)
                    .map(|w| format!(" ({w})"))
                    .unwrap_or_default();
                let _ = writeln!(
                    text,
                    "  {k}: {}{why}",
                    if holds == &Value::Bool(true) {
                        "yes"
                    } else {
                        "no"
                    }
                );
            }
        }
        entry["explanations"] = json!(explained);
        per_field.insert(f.to_string(), entry);
    }
    let mut out = json!({"input": input, "fields": per_field});
    if graph {
        let g = c.graph();
        let d = (c.dim() + 1).max(1) as usize;
        let conn = if g.node_count() >= 2 {
            Some(rigidity::vertex_connectivity(&g)?)
        } else {
            None
        };
        let rig = rigidity::rigidity_report(&g, d, trials, cli.seed)?;
        let _ = writeln!(
            text,
            "graph: connectivity {conn:?}, generically {d}-rigid: {}",
            rig.rigid
        );
        out["graph"] = io::to_canonical_value(&json!({"connectivity": conn, "rigidity": rig}));
    }
    emit(cli.format, &out, || text);
    Ok(())
}

fn cmd_vectors(cli: &Cli, fields: &[FieldSpec], input: &str) -> Result<()> {
    let c = load(input)?;
    let mut out = serde_json::Map::new();
    let mut text = String::new();
    for &f in fields {
        let v = vectors::face_vectors(&c, f)?;
        let _ = writeln!(
            text,
            "field {f}\n  f   = {:?}\n  h   = {:?}\n  h'  = {:?}\n  h'' = {:?}\n  g   = {:?}\n  g'  = {:?}\n  g'' = {:?}",
            v.f, v.h, v.h_prime, v.h_double_prime, v.g, v.g_prime, v.g_double_prime
        );
        out.insert(f.to_string(), io::to_canonical_value(&v));
    }
    emit(cli.format, &json!({"input": input, "fields": out}), || text);
    Ok(())
}

fn cmd_homology(cli: &Cli, fields: &[FieldSpec], input: &str) -> Result<()> {
    let c = load(input)?;
    let mut out = serde_json::Map::new();
    let mut text = String::new();
    for &f in fields {
        let b = homology::betti(&c, f)?;
        let _ = writeln!(
            text,
            "field {f}: reduced Betti numbers from degree -1: {:?}",
            b.betti
        );
        out.insert(f.to_string(), io::to_canonical_value(&b));
    }
    let summary = json!({
        "input": input,
        "dim": c.dim(),
        "f": c.f_vector(),
        "reduced_euler": homology::reduced_euler(&c),
        "fields": out,
    });
    emit(cli.format, &summary, || text);
    Ok(())
}

fn cmd_construct(cli: &Cli, op: &Construct, out: Option<&PathBuf>) -> Result<()> {
    let c = match op {
        Construct::Join { a, b } => load(a)?.join(&load(b)?)?,
        Construct::Product { a, b } => product(&load(a)?, &load(b)?)?,
        Construct::Skeleton { a, dim } => {
            if *dim < 0 {
                bail!("skeleton dimension must be nonnegative");
            }
            load(a)?.skeleton(*dim)?
        }
        Construct::Cone { a } => load(a)?.cone()?,
        Construct::Stacked { n, d } => stacked_sphere(*n, *d)?,
        Construct::Named { name } => named(name.strip_prefix("named:").unwrap_or(name))?,
        Construct::Corpus => {
            let dir = out.context("construct corpus needs --out DIR")?;
            let paths = verify::write_builtin_corpus(dir)?;
            let names: Vec<String> = paths.iter().map(|p| p.display().to_string()).collect();
            emit(cli.format, &json!({"written": names}), || {
                names.join("\n") + "\n"
            });
            return Ok(());
        }
    };
    let body = match cli.format {
        Format::Json => io::to_json(&c),
        Format::Text => io::to_text(&c),
    };
    match out {
        Some(path) => std::fs::write(path, body)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => print!("{body}"),
    }
    Ok(())
}

fn cmd_verify(
    cli: &Cli,
    fields: &[FieldSpec],
    dir: Option<&PathBuf>,
    builtin: bool,
    trials: usize,
) -> Result<bool> {
    let entries = match (dir, builtin) {
        (Some(d), false) => {
            verify::load_corpus_dir(d).with_context(|| format!("cannot read {}", d.display()))?
        }
        (None, _) => verify::builtin_corpus()?
            .into_iter()
            .map(|(n, c)| (n, Ok(c)))
            .collect(),
        (Some(_), true) => unreachable!("clap rejects both"),
    };
    let report = verify::run_suite(
        entries,
        fields,
        SuiteOptions {
            seed: cli.seed,
            trials,
        },
    );
    let text = || {
        let mut t = String::new();
        for (name, tally) in &report.summary {
            let mark = if tally.fail == 0 { "ok  " } else { "FAIL" };
            let _ = writeln!(
                t,
                "{mark} {name}: {} pass, {} fail, {} skipped",
                tally.pass, tally.fail, tally.skipped
            );
        }
        for e in &report.entries {
            if let Some(err) = &e.error {
                let _ = writeln!(t, "ERROR {}: {err}", e.name);
            }
            for (f, checks) in &e.checks {
                for (k, o) in checks.iter().filter(|(_, o)| o.is_fail()) {
                    let _ = writeln!(t, "FAIL {} [{f}] {k}: {o}", e.name);
                }
            }
        }
        let _ = writeln!(
            t,
            "{}",
            if report.all_pass {
                "all checks pass"
            } else {
                "failures found"
            }
        );
        t
    };
    emit(cli.format, &io::to_canonical_value(&report), text);
    Ok(report.all_pass)
}

fn run(cli: &Cli) -> Result<ExitCode> {
    if let Ok(v) = std::env::var("BSTAR_MAX_FACES") {
        limits::set_max_faces(
            v.parse()
                .with_context(|| format!("BSTAR_MAX_FACES={v} is not a number"))?,
        );
    }
    if let Some(n) = cli.max_faces {
        limits::set_max_faces(n);
    }
    if let Some(n) = cli.max_subsets {
        limits::set_max_subsets(n);
    }
    let fields = if cli.fields.is_empty() {
        vec![FieldSpec::Rationals, FieldSpec::prime(2)?]
    } else {
        cli.fields.clone()
    };
    match &cli.command {
        Command::Check {
            input,
            properties,
            graph,
            trials,
        } => cmd_check(cli, &fields, input, properties, *graph, *trials)?,
        Command::Vectors { input } => cmd_vectors(cli, &fields, input)?,
        Command::Homology { input } => cmd_homology(cli, &fields, input)?,
        Command::Construct { op, out } => cmd_construct(cli, op, out.as_ref())?,
        Command::Verify {
            dir,
            builtin,
            trials,
        } => {
            if !cmd_verify(cli, &fields, dir.as_ref(), *builtin, *trials)? {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
