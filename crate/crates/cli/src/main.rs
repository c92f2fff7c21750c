//! `ramyip`: compute Macdonald-Koornwinder polynomials, list alcove paths, export graphs, run checks.

mod job;

use clap::{Args, Parser, Subcommand, ValueEnum};
use job::{parse_weight, parse_word, CliError, CliResult, Format, JobSpec, Params, Resolved, Spec};
use ramyip::duality::{check_dual_coefficients, check_path_duality, check_star};
use ramyip::hecke::Ctx;
use ramyip::names::{weight_to_output, AffineName};
use ramyip::qbg::*;
use ramyip::ram_yip::*;
use ramyip::render::{poly_json, poly_text};
use ramyip::root_data::{Datum, ParamMode, Side};
use ramyip::weyl::{FinElem, WeylElem};
use ramyip::{CoeffRat, Error, LaurentPoly, XPoly};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "ramyip", version, about = "Exact nonsymmetric and symmetric Macdonald-Koornwinder polynomials")]
struct Cli {
    /// Worker threads for path enumeration (output does not depend on it).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Clone)]
struct DatumArgs {
    /// Affine type: A2, G2^1, D3^2, A5^2, E6^2, D4^3, K2, A4^2, A4^2dag, ...
    #[arg(long = "type")]
    type_name: String,
    /// Lattice of X (P or Q).
    #[arg(long)]
    lattice_x: Option<String>,
    /// Lattice of Y (P or Q).
    #[arg(long)]
    lattice_y: Option<String>,
    /// Coordinates for weights: `ambient` (B, C, D) or `omega`.
    #[arg(long)]
    basis: Option<String>,
}

#[derive(Args, Clone)]
struct Target {
    #[command(flatten)]
    datum: DatumArgs,
    /// Weight λ as comma-separated integers.
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    /// Hecke parameters.
    #[arg(long, value_enum, default_value = "equal")]
    params: Params,
    /// Reduced word for m_λ (comma-separated nodes after the length-zero part).
    #[arg(long)]
    word: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PathFilter {
    All,
    Quantum,
    Reverse,
}

#[derive(Subcommand)]
enum Command {
    /// Nonsymmetric E_λ, or X^u E_λ with --u.
    ComputeE {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "full")]
        spec: Spec,
        /// Word for u in W(Ỹ), comma-separated.
        #[arg(long)]
        u: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Print the job as JSON instead of running it.
        #[arg(long)]
        emit_job: bool,
    },
    /// Symmetric P_λ for dominant λ.
    ComputeP {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "full")]
        spec: Spec,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        emit_job: bool,
    },
    /// Run a job stored as JSON.
    Run { path: String },
    /// Alcove paths of m_λ.
    Paths {
        #[command(subcommand)]
        cmd: PathsCmd,
    },
    /// The quantum Bruhat graph of W_0.
    Qbg {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Consistency checks.
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum PathsCmd {
    /// Every fold subset with its data.
    List {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        u: Option<String>,
        #[arg(long, value_enum, default_value = "all")]
        filter: PathFilter,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// DOT tree of the quantum alcove paths.
    Tree {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        u: Option<String>,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Y-eigenvalue equations for E_λ.
    Eigen {
        #[command(flatten)]
        target: Target,
    },
    /// The four limits against their path formulas.
    Limits {
        #[command(flatten)]
        target: Target,
    },
    /// Coefficient, star and path dualities.
    Duality {
        #[command(flatten)]
        target: Target,
    },
    /// Minimal order exactly on quantum paths.
    Ord {
        #[command(flatten)]
        target: Target,
    },
}

fn job_from(target: &Target, spec: Spec, symmetric: bool, u: Option<&str>, format: Format) -> CliResult<JobSpec> {
    Ok(JobSpec {
        type_name: target.datum.type_name.clone(),
        lattice_x: target.datum.lattice_x.clone(),
        lattice_y: target.datum.lattice_y.clone(),
        weight: parse_weight(&target.weight)?,
        basis: target.datum.basis.clone(),
        spec,
        symmetric,
        params: target.params,
        u: u.map(|s| parse_word("u", s)).transpose()?,
        word: target.word.as_deref().map(|s| parse_word("word", s)).transpose()?,
        format,
    })
}

/// Attach a field name to errors caused by the input.
fn blame(e: Error, field: &'static str) -> CliError {
    match e {
        Error::WordNotReduced { .. } => CliError::field("word", e),
        Error::NotDominant(_) | Error::Invalid(_) | Error::LatticeUnsupported(_) => CliError::field(field, e),
        other => CliError::Lib(other),
    }
}

fn y_elem(d: &Datum, u: &Option<Vec<usize>>) -> WeylElem {
    match u {
        Some(w) => WeylElem::from_word(d, Side::Y, w),
        None => WeylElem::identity(d, Side::Y),
    }
}

fn finite_u(d: &Datum, u: &Option<Vec<usize>>) -> CliResult<FinElem> {
    match u {
        Some(w) if w.contains(&0) => Err(CliError::field("u", "the q -> 0 limit needs u in W_0 (no node 0)")),
        Some(w) => Ok(FinElem::from_word(d, w)),
        None => Ok(FinElem::identity(d.n)),
    }
}

fn no_u(job: &JobSpec, spec: &str) -> CliResult<()> {
    if job.u.is_some() {
        return Err(CliError::field("u", format!("--u is not supported with --spec {spec}")));
    }
    Ok(())
}

fn compute(job: &JobSpec) -> CliResult<String> {
    let r = job.resolve()?;
    let d = &r.datum;
    let word = job.word.as_deref();
    let ctx = Ctx::new(d, job.mode());
    let poly: XPoly<CoeffRat> = if job.symmetric {
        no_u(job, "of compute-p")?;
        match job.spec {
            Spec::Full => p_lambda(&ctx, &r.lambda).map_err(|e| blame(e, "weight"))?.to_rat(),
            Spec::V0 => p_at_v0(d, &r.lambda).map_err(|e| blame(e, "weight"))?,
            other => return Err(CliError::field("spec", format!("{other:?} is not available for compute-p"))),
        }
    } else {
        match job.spec {
            Spec::Full => {
                let u = y_elem(d, &job.u);
                x_e_lambda(&ctx, &u, &r.lambda, Formula::General, word).map_err(|e| blame(e, "weight"))?.to_rat()
            }
            Spec::V0 => e_at_v0(d, &y_elem(d, &job.u), &r.lambda, word).map_err(|e| blame(e, "weight"))?,
            Spec::Vinf => {
                no_u(job, "vinf")?;
                e_at_vinf(d, &r.lambda, word).map_err(|e| blame(e, "weight"))?
            }
            Spec::Q0 => e_at_q0(d, &finite_u(d, &job.u)?, &r.lambda, word).map_err(|e| blame(e, "weight"))?,
            Spec::Qinf => {
                no_u(job, "qinf")?;
                e_at_qinf(d, &r.lambda, word).map_err(|e| blame(e, "weight"))?
            }
        }
    };
    match job.format {
        Format::Text => Ok(poly_text(d, r.basis, &poly)?),
        Format::Json => {
            let norm = LaurentPoly::mono(normalization(&ctx, &r.lambda)).render(d.m);
            let mut v = poly_json(d, &job.datum_ref(d), r.basis, &poly, &norm)?;
            v["job"] = serde_json::to_value(job).expect("jobs serialize");
            Ok(serde_json::to_string_pretty(&v).expect("values serialize"))
        }
        Format::Dot => Err(CliError::field("format", "dot output is only available for qbg and paths tree")),
    }
}

fn resolve_target(target: &Target) -> CliResult<(JobSpec, Resolved)> {
    let job = job_from(target, Spec::Full, false, None, Format::Text)?;
    let r = job.resolve()?;
    Ok((job, r))
}

fn kinds(c: &Classification) -> String {
    let s: String = c.steps.iter().map(|k| if *k == EdgeKind::Bruhat { 'B' } else { 'Q' }).collect();
    match c.rejected_at {
        Some(m) => format!("{s}x@{m}"),
        None if s.is_empty() => "-".into(),
        None => s,
    }
}

fn paths_list(target: &Target, u: Option<&str>, filter: PathFilter, format: Format) -> CliResult<String> {
    let job = job_from(target, Spec::Full, false, u, format)?;
    let r = job.resolve()?;
    let d = &r.datum;
    let ctx = Ctx::new(d, ParamMode::Equal);
    let sp = PathSpace::for_weight(&ctx, y_elem(d, &job.u), &r.lambda, job.word.as_deref())
        .map_err(|e| blame(e, "weight"))?;
    let f = mixed_formula(d.class).unwrap_or(Formula::General);
    let mut rows = Vec::new();
    let mut err = None;
    sp.for_each(|p| {
        let fwd = classify_path(&sp, p, Direction::Forward, f);
        let rev = classify_path(&sp, p, Direction::Reverse, f);
        let keep = match filter {
            PathFilter::All => true,
            PathFilter::Quantum => fwd.accepted(),
            PathFilter::Reverse => rev.accepted(),
        };
        if !keep {
            return;
        }
        match weight_to_output(d, r.basis, &p.wt) {
            Ok(wt) => rows.push((p.clone(), wt, fwd, rev)),
            Err(e) => {
                err.get_or_insert(e);
            }
        }
    });
    if let Some(e) = err {
        return Err(e.into());
    }
    match format {
        Format::Text => {
            let mut out = vec![format!("word {}  ({} folds)", sp.word.render(), sp.len())];
            for (p, wt, fwd, rev) in &rows {
                out.push(format!(
                    "J={} signs={} dir={} wt={} qdeg={} forward={} reverse={} ord={}",
                    p.folds_string(),
                    p.signs_string(),
                    word_label(&p.dir.reduced_word(d)),
                    wt,
                    sp.deg(&p.qwt),
                    kinds(fwd),
                    kinds(rev),
                    sp.ord(f, p)
                ));
            }
            Ok(out.join("\n"))
        }
        Format::Json => {
            let items: Vec<_> = rows
                .iter()
                .map(|(p, wt, fwd, rev)| {
                    json!({
                        "folds": p.folds,
                        "signs": p.signs_string(),
                        "dir": p.dir.reduced_word(d),
                        "wt": wt,
                        "qdeg": sp.deg(&p.qwt),
                        "forward": kinds(fwd),
                        "reverse": kinds(rev),
                        "ord": sp.ord(f, p),
                    })
                })
                .collect();
            let v = json!({ "schema": "paths-v1", "datum_ref": job.datum_ref(d), "word": sp.word.word, "paths": items });
            Ok(serde_json::to_string_pretty(&v).expect("values serialize"))
        }
        Format::Dot => Err(CliError::field("format", "use `paths tree` for DOT output")),
    }
}

fn paths_tree(target: &Target, u: Option<&str>) -> CliResult<String> {
    let job = job_from(target, Spec::Full, false, u, Format::Dot)?;
    let r = job.resolve()?;
    let d = &r.datum;
    let ctx = Ctx::new(d, ParamMode::Equal);
    let sp = PathSpace::for_weight(&ctx, y_elem(d, &job.u), &r.lambda, job.word.as_deref())
        .map_err(|e| blame(e, "weight"))?;
    Ok(quantum_tree_dot(&sp).trim_end().to_string())
}

fn qbg(args: &DatumArgs, format: Format) -> CliResult<String> {
    let name = AffineName::parse(&args.type_name).map_err(|e| CliError::field("type", e))?;
    let probe = JobSpec {
        type_name: args.type_name.clone(),
        lattice_x: args.lattice_x.clone(),
        lattice_y: args.lattice_y.clone(),
        weight: vec![0; name.type_x.rank],
        basis: args.basis.clone(),
        spec: Spec::Full,
        symmetric: false,
        params: Params::Equal,
        u: None,
        word: None,
        format,
    };
    let d = probe.resolve()?.datum;
    let g = QuantumBruhatGraph::build(&d)?;
    let label = |k: usize| word_label(&g.elems[k].reduced_word(&d));
    match format {
        Format::Dot => Ok(g.to_dot(&d).trim_end().to_string()),
        Format::Text => {
            let mut out = vec![format!(
                "{} vertices, {} Bruhat edges, {} quantum edges",
                g.elems.len(),
                g.count(EdgeKind::Bruhat),
                g.count(EdgeKind::Quantum)
            )];
            for e in &g.edges {
                out.push(format!(
                    "{} -> {} {} {}",
                    label(e.from),
                    label(e.to),
                    root_label(&d, &d.y.roots[e.root].omega),
                    e.kind.name()
                ));
            }
            Ok(out.join("\n"))
        }
        Format::Json => {
            let edges: Vec<_> = g
                .edges
                .iter()
                .map(|e| {
                    json!({
                        "from": label(e.from),
                        "to": label(e.to),
                        "root": root_label(&d, &d.y.roots[e.root].omega),
                        "kind": e.kind.name(),
                    })
                })
                .collect();
            let verts: Vec<String> = (0..g.elems.len()).map(label).collect();
            let v = json!({ "schema": "qbg-v1", "vertices": verts, "edges": edges });
            Ok(serde_json::to_string_pretty(&v).expect("values serialize"))
        }
    }
}

fn verdict(ok: bool, what: String) -> CliResult<String> {
    if ok {
        Ok(format!("OK ({what})"))
    } else {
        Err(CliError::Failed(format!("FAILED ({what})")))
    }
}

fn verify(cmd: &VerifyCmd) -> CliResult<String> {
    match cmd {
        VerifyCmd::Eigen { target } => {
            let (job, r) = resolve_target(target)?;
            let mode = if target.params == Params::Equal { ParamMode::Equal } else { ParamMode::General };
            let ctx = Ctx::new(&r.datum, mode);
            let e = e_lambda(&ctx, &r.lambda, Formula::General, job.word.as_deref()).map_err(|e| blame(e, "weight"))?;
            let rep = ctx.verify_eigen(&r.lambda, &e.num)?;
            if rep.ok() {
                Ok(rep.summary())
            } else {
                Err(CliError::Failed(rep.summary()))
            }
        }
        VerifyCmd::Limits { target } => {
            let (job, r) = resolve_target(target)?;
            let (d, lam, word) = (&r.datum, &r.lambda, job.word.as_deref());
            let id = WeylElem::identity(d, Side::Y);
            let one = FinElem::identity(d.n);
            let b = |e| blame(e, "weight");
            let pairs = [
                ("v0", e_at_v0(d, &id, lam, word).map_err(b)?, e_at_v0_exact(d, &id, lam).map_err(b)?),
                ("vinf", e_at_vinf(d, lam, word).map_err(b)?, e_at_vinf_exact(d, lam).map_err(b)?),
                ("q0", e_at_q0(d, &one, lam, word).map_err(b)?, e_at_q0_exact(d, &one, lam).map_err(b)?),
                ("qinf", e_at_qinf(d, lam, word).map_err(b)?, e_at_qinf_exact(d, lam).map_err(b)?),
            ];
            let bad: Vec<&str> = pairs.iter().filter(|(_, a, e)| !differences(a, e).is_empty()).map(|(n, _, _)| *n).collect();
            if bad.is_empty() {
                verdict(true, format!("{} limit checks", pairs.len()))
            } else {
                verdict(false, format!("limits differ: {}", bad.join(", ")))
            }
        }
        VerifyCmd::Duality { target } => {
            let (_, r) = resolve_target(target)?;
            let mode = if target.params == Params::Equal { ParamMode::Equal } else { ParamMode::General };
            let ctx = Ctx::new(&r.datum, mode);
            let lam = &r.lambda;
            let b = |e| blame(e, "weight");
            let checks = [
                ("coefficients", check_dual_coefficients(&ctx, lam).map_err(b)?),
                ("star", check_star(&ctx, lam).map_err(b)?),
                ("paths", check_path_duality(&ctx, lam).map_err(b)?),
            ];
            let bad: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
            if bad.is_empty() {
                verdict(true, format!("{} duality checks", checks.len()))
            } else {
                verdict(false, format!("dualities fail: {}", bad.join(", ")))
            }
        }
        VerifyCmd::Ord { target } => {
            let (job, r) = resolve_target(target)?;
            let d = &r.datum;
            let ctx = Ctx::new(d, ParamMode::Equal);
            let sp = PathSpace::for_weight(&ctx, WeylElem::identity(d, Side::Y), &r.lambda, job.word.as_deref())
                .map_err(|e| blame(e, "weight"))?;
            let f = mixed_formula(d.class).unwrap_or(Formula::General);
            let base = sp.ord(f, &sp.path(&[]));
            let (mut total, mut minimal, mut bad) = (0usize, 0usize, Vec::new());
            sp.for_each(|p| {
                total += 1;
                let o = sp.ord(f, p);
                let acc = classify_path(&sp, p, Direction::Forward, f).accepted();
                if o == base {
                    minimal += 1;
                }
                if o < base || (o == base) != acc {
                    bad.push(p.folds_string());
                }
            });
            if bad.is_empty() {
                verdict(true, format!("{total} paths, {minimal} of minimal order"))
            } else {
                verdict(false, format!("ord and classification disagree on {}", bad.join(" ")))
            }
        }
    }
}

fn run(cli: &Cli) -> CliResult<String> {
    match &cli.cmd {
        Command::ComputeE { target, spec, u, format, emit_job } => {
            let job = job_from(target, *spec, false, u.as_deref(), *format)?;
            if *emit_job {
                return Ok(serde_json::to_string_pretty(&job).expect("jobs serialize"));
            }
            compute(&job)
        }
        Command::ComputeP { target, spec, format, emit_job } => {
            let job = job_from(target, *spec, true, None, *format)?;
            if *emit_job {
                return Ok(serde_json::to_string_pretty(&job).expect("jobs serialize"));
            }
            compute(&job)
        }
        Command::Run { path } => {
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.clone(), msg: e.to_string() })?;
            let job: JobSpec = serde_json::from_str(&text).map_err(|e| CliError::field("job", e))?;
            compute(&job)
        }
        Command::Paths { cmd: PathsCmd::List { target, u, filter, format } } => {
            paths_list(target, u.as_deref(), *filter, *format)
        }
        Command::Paths { cmd: PathsCmd::Tree { target, u } } => paths_tree(target, u.as_deref()),
        Command::Qbg { datum, format } => qbg(datum, *format),
        Command::Verify { cmd } => verify(cmd),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if n == 0 {
            eprintln!("error: invalid --jobs: must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().expect("thread pool is configured once");
    }
    match run(&cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            match &e {
                CliError::Failed(msg) => println!("{msg}"),
                other => eprintln!("error: {other}"),
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
