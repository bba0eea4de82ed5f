//! uvw: command-line workbench for u-equations, F-hat polynomials, rational
//! parametrizations, g-vector fans and the associated verification suites.

mod emit;
mod verify;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use uvw_core::equations::EquationSet;
use uvw_core::io::load_catalog_anywhere;
use uvw_core::Catalog;

#[derive(Parser)]
#[command(name = "uvw", version, about = "workbench for u-equations of finite representation type algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EqKind {
    U,
    Fhat,
    V,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Parametrization,
    Exchange,
    Tropical,
    Jasso,
    Quotient,
    Dilog,
    Positivity,
    All,
}

#[derive(Args)]
struct OutOpts {
    /// output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the objects of a catalog with their invariants
    List {
        #[arg(long)]
        catalog: String,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Emit the u-equations, F-hat polynomials or v-formulas
    Equations {
        #[arg(long)]
        catalog: String,
        #[arg(long, value_enum)]
        kind: EqKind,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Run a verification suite; exit 0 iff every check passes
    Verify {
        #[arg(long)]
        catalog: String,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// samples for the dilogarithm / positivity / fan suites
        #[arg(long)]
        trials: Option<usize>,
        /// numeric tolerance for the dilogarithm suite
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Evaluate a stringy integral
    Amplitude {
        #[arg(long)]
        catalog: Option<String>,
        /// JSON spec file { "catalog": ..., "exponents": {label: x}, ... }
        #[arg(long)]
        spec: Option<PathBuf>,
        /// inline exponent assignment, label=value (repeatable)
        #[arg(long = "exponent")]
        exponents: Vec<String>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Compute a Jasso divisor map (--focus) or a quotient monomial map (--ideal)
    Reduce {
        #[arg(long)]
        catalog: String,
        /// rigid object label for a Jasso reduction
        #[arg(long)]
        focus: Option<String>,
        /// ideal generators: comma-separated arrow paths like "a2*a1", or "v1"
        /// for the first vertex idempotent
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        target: String,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Emit the g-vector fan
    Fan {
        #[arg(long)]
        catalog: String,
        /// also emit a polymake-style block in text mode
        #[arg(long)]
        polymake: bool,
        #[command(flatten)]
        out: OutOpts,
    },
    /// Tropical evaluation of the v-functions at a lattice point
    Trop {
        #[arg(long)]
        catalog: String,
        /// restrict to one object
        #[arg(long)]
        object: Option<String>,
        /// comma-separated integer vector
        #[arg(long)]
        point: String,
        #[command(flatten)]
        out: OutOpts,
    },
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {:#}", e);
            std::process::ExitCode::from(2)
        }
    }
}

fn load(name: &str) -> Result<(Catalog, EquationSet)> {
    let cat = load_catalog_anywhere(name).with_context(|| format!("loading catalog {}", name))?;
    let eq = EquationSet::build(&cat).context("building equation data")?;
    Ok((cat, eq))
}

fn write_out(out: &OutOpts, content: &str) -> Result<()> {
    match &out.out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{}", content),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<std::process::ExitCode> {
    let ok = std::process::ExitCode::from(0);
    let failed = std::process::ExitCode::from(1);
    match cli.cmd {
        Cmd::List { catalog, out } => {
            let (cat, eq) = load(&catalog)?;
            let content = match out.format {
                Format::Json => emit::list_json(&cat, &eq)?,
                Format::Text => emit::list_text(&cat),
                Format::Latex => emit::list_text(&cat),
            };
            write_out(&out, &content)?;
            Ok(ok)
        }
        Cmd::Equations { catalog, kind, out } => {
            let (cat, eq) = load(&catalog)?;
            let content = match kind {
                EqKind::U => emit::u_equations(&cat, &eq, out.format.into())?,
                EqKind::Fhat => emit::fhat_polynomials(&cat, &eq, out.format.into())?,
                EqKind::V => emit::v_formulas(&cat, &eq, out.format.into())?,
            };
            write_out(&out, &content)?;
            Ok(ok)
        }
        Cmd::Verify {
            catalog,
            suite,
            seed,
            trials,
            tol,
            out,
        } => {
            let (cat, eq) = load(&catalog)?;
            let report = verify::run_suite(&cat, &eq, suite, seed, trials, tol)?;
            let passed = report.passed();
            let content = match out.format {
                Format::Json => verify::report_json(&cat, &report, seed, tol)?,
                _ => verify::report_text(&cat, &report, seed, tol),
            };
            write_out(&out, &content)?;
            Ok(if passed { ok } else { failed })
        }
        Cmd::Amplitude {
            catalog,
            spec,
            exponents,
            tol,
            out,
        } => {
            let (name, assignment, opts) = parse_amplitude_input(catalog, spec, &exponents, tol)?;
            let (cat, eq) = load(&name)?;
            let mut expo = vec![0.0; cat.len()];
            for (label, value) in assignment {
                let idx = cat
                    .find_label(&label)
                    .ok_or_else(|| anyhow!("no object {} in {}", label, name))?;
                expo[idx] = value;
            }
            let spec = uvw_core::numerics::AmplitudeSpec {
                catalog: &cat,
                eq: &eq,
                exponents: expo.clone(),
                opts,
            };
            let value = uvw_core::numerics::amplitude(&spec)?;
            let content = match out.format {
                Format::Json => {
                    let body = serde_json::json!({
                        "tool": "uvw",
                        "version": env!("CARGO_PKG_VERSION"),
                        "catalog": cat.name,
                        "catalog_hash": format!("{:016x}", uvw_core::io::catalog_hash(&cat)),
                        "tolerance": tol,
                        "exponents": cat.labels().iter().zip(&expo)
                            .map(|(l, x)| (l.to_string(), serde_json::json!(*x)))
                            .collect::<serde_json::Map<_, _>>(),
                        "value": value,
                    });
                    serde_json::to_string_pretty(&body)? + "\n"
                }
                _ => format!("A_{} = {:.9}\n", cat.name, value),
            };
            write_out(&out, &content)?;
            Ok(ok)
        }
        Cmd::Reduce {
            catalog,
            focus,
            ideal,
            target,
            out,
        } => {
            let (src, src_eq) = load(&catalog)?;
            let (tgt, tgt_eq) = load(&target)?;
            let content = match (focus, ideal) {
                (Some(label), None) => {
                    let fidx = src
                        .find_label(&label)
                        .ok_or_else(|| anyhow!("no object {}", label))?;
                    let map = uvw_core::reductions::jasso_match(&src, fidx, &tgt)?;
                    let rep = uvw_core::reductions::jasso_substitution_check(
                        &src, &src_eq, &tgt, &tgt_eq, &map,
                    )?;
                    if !rep.passed() {
                        return Err(anyhow!("substitution check failed:\n{}", rep));
                    }
                    emit::reduction_doc(&src, &tgt, &map, out.format.into())?
                }
                (None, Some(gens)) => {
                    let quot = parse_ideal(&src.algebra, &gens)?;
                    let (rep, mults) = uvw_core::reductions::quotient_map_check(
                        &src, &src_eq, &tgt, &tgt_eq, &quot,
                    )?;
                    if !rep.passed() {
                        return Err(anyhow!("quotient check failed:\n{}", rep));
                    }
                    emit::quotient_map_doc(&src, &tgt, &mults, out.format.into())?
                }
                _ => return Err(anyhow!("pass exactly one of --focus or --ideal")),
            };
            write_out(&out, &content)?;
            Ok(ok)
        }
        Cmd::Fan {
            catalog,
            polymake,
            out,
        } => {
            let (cat, _) = load(&catalog)?;
            let fan = uvw_core::fan::build_fan(&cat)?;
            let content = match out.format {
                Format::Json => {
                    serde_json::to_string_pretty(&uvw_core::io::fan_to_json(&cat, &fan))? + "\n"
                }
                _ => {
                    let mut s = emit::fan_text(&cat, &fan);
                    if polymake {
                        s.push('\n');
                        s.push_str(&uvw_core::io::fan_to_polymake(&fan));
                    }
                    s
                }
            };
            write_out(&out, &content)?;
            Ok(ok)
        }
        Cmd::Trop {
            catalog,
            object,
            point,
            out,
        } => {
            let (cat, eq) = load(&catalog)?;
            let g: Vec<i64> = point
                .split(',')
                .map(|s| s.trim().parse().map_err(|_| anyhow!("bad point {}", point)))
                .collect::<Result<_>>()?;
            if g.len() != cat.n() {
                return Err(anyhow!("point has arity {} but n = {}", g.len(), cat.n()));
            }
            let objects: Vec<usize> = match object {
                Some(label) => vec![cat
                    .find_label(&label)
                    .ok_or_else(|| anyhow!("no object {}", label))?],
                None => (0..cat.len()).collect(),
            };
            let mut rows = Vec::new();
            for x in objects {
                let t = uvw_core::fan::trop_eval(eq.v_rational(x), &g);
                rows.push((cat.objects[x].label.clone(), t));
            }
            let content = match out.format {
                Format::Json => {
                    let body: serde_json::Map<String, serde_json::Value> = rows
                        .into_iter()
                        .map(|(l, t)| (l, serde_json::json!(t)))
                        .collect();
                    serde_json::to_string_pretty(&serde_json::Value::Object(body))? + "\n"
                }
                _ => rows
                    .into_iter()
                    .map(|(l, t)| format!("trop v[{}]({:?}) = {}\n", l, g, t))
                    .collect(),
            };
            write_out(&out, &content)?;
            Ok(ok)
        }
    }
}

impl From<Format> for emit::Style {
    fn from(f: Format) -> emit::Style {
        match f {
            Format::Text => emit::Style::Text,
            Format::Json => emit::Style::Json,
            Format::Latex => emit::Style::Latex,
        }
    }
}

fn parse_amplitude_input(
    catalog: Option<String>,
    spec: Option<PathBuf>,
    exponents: &[String],
    tol: f64,
) -> Result<(String, Vec<(String, f64)>, uvw_core::numerics::QuadOptions)> {
    let mut opts = uvw_core::numerics::QuadOptions {
        tol,
        ..Default::default()
    };
    if let Some(path) = spec {
        let text = std::fs::read_to_string(&path)?;
        let v: serde_json::Value = serde_json::from_str(&text)?;
        let name = v["catalog"]
            .as_str()
            .ok_or_else(|| anyhow!("spec file needs a catalog"))?
            .to_string();
        let mut assignment = Vec::new();
        for (label, value) in v["exponents"]
            .as_object()
            .ok_or_else(|| anyhow!("spec file needs exponents"))?
        {
            assignment.push((
                label.clone(),
                value.as_f64().ok_or_else(|| anyhow!("bad exponent"))?,
            ));
        }
        if let Some(t) = v["t_max"].as_f64() {
            opts.t_max = t;
        }
        if let Some(t) = v["tol"].as_f64() {
            opts.tol = t;
        }
        if let Some(k) = v["nodes_per_panel"].as_u64() {
            opts.nodes_per_panel = k as usize;
        }
        return Ok((name, assignment, opts));
    }
    let name = catalog.ok_or_else(|| anyhow!("pass --catalog or --spec"))?;
    let assignment = exponents
        .iter()
        .map(|s| {
            let (label, value) = s
                .split_once('=')
                .ok_or_else(|| anyhow!("exponents look like label=value"))?;
            Ok((label.trim().to_string(), value.trim().parse::<f64>()?))
        })
        .collect::<Result<_>>()?;
    Ok((name, assignment, opts))
}

fn parse_ideal(
    a: &uvw_core::QuiverAlgebra,
    gens: &str,
) -> Result<uvw_core::algebra::AlgebraQuotient> {
    use uvw_core::algebra::{IdealGen, Relation, RelationTerm};
    let mut list = Vec::new();
    for gen in gens.split(',') {
        let gen = gen.trim();
        if let Some(v) = gen.strip_prefix('v') {
            let v: usize = v
                .parse()
                .map_err(|_| anyhow!("bad vertex generator {}", gen))?;
            if v == 0 || v > a.vertex_count() {
                return Err(anyhow!("vertex {} out of range", v));
            }
            list.push(IdealGen::Vertex(v - 1));
            continue;
        }
        let path: Vec<usize> = gen
            .split('*')
            .map(|id| {
                a.arrow_index(id.trim())
                    .ok_or_else(|| anyhow!("unknown arrow {}", id))
            })
            .collect::<Result<_>>()?;
        list.push(IdealGen::Element(Relation {
            terms: vec![RelationTerm {
                coef: uvw_core::rat::rat(1),
                path,
            }],
        }));
    }
    Ok(a.quotient(&list)?)
}
