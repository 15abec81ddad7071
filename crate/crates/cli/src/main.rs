use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use qaffine::affinization::functor_f;
use qaffine::checks::{run_check, CheckConfig, CheckOutcome, Status, CHECK_IDS};
use qaffine::classification::{drinfeld_polys, irreducible_v_a, SegmentList};
use qaffine::descriptor::ModuleDescriptor;
use qaffine::modtools::{are_isomorphic, ModuleLike};
use qaffine::report::RelationReport;
use qaffine::scalars::{Field, RatFunc, ScalarContext};
use qaffine::uqrep::{character, jimbo_j, UqModule};
use qaffine::{par, Error};

#[derive(Parser, Debug)]
#[command(name = "qaffine", version, about = "Affine Hecke modules, quantum affine modules and Drinfeld polynomials")]
struct Cli {
    /// Scalar backend: `symbolic` or `rational:<t0>`.
    #[arg(long, global = true, default_value = "symbolic")]
    backend: String,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify the defining relations of a module read from a descriptor or build bundle.
    Relations {
        #[arg(long)]
        module_file: PathBuf,
        /// Rank used to apply the functor to Hecke modules.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Build V_a and F(V_a) for a segment list and emit their descriptors.
    Build {
        #[arg(long)]
        segments: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Drinfeld polynomials of F(V_a).
    Drinfeld {
        #[arg(long)]
        segments: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Run registered checks (`all` runs every id).
    Check {
        id: String,
        /// Comma-separated ranks.
        #[arg(long, default_value = "2")]
        n: String,
        /// Comma-separated values of ℓ; ignored when `--segments` is given.
        #[arg(long, default_value = "2")]
        ell: String,
        #[arg(long)]
        segments: Option<String>,
        /// Run checks that assume ℓ ≤ n even when ℓ > n.
        #[arg(long)]
        force: bool,
    },
    /// Weight multiplicities of a quantum group module.
    Character {
        #[arg(long, conflicts_with = "segments")]
        module_file: Option<PathBuf>,
        #[arg(long)]
        segments: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Search for an isomorphism between two modules of the same kind.
    Isomorphic { first: PathBuf, second: PathBuf },
}

/// Builds the scalar context for a given rank on the selected backend.
type MakeCtx<'a, F> = dyn Fn(usize) -> qaffine::Result<ScalarContext<F>> + Sync + 'a;

/// A finished command: text and JSON renderings plus exit code.
struct Output {
    text: String,
    json: Value,
    code: u8,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::RelationFailure(_) | Error::NotWellDefined(_) | Error::Inconclusive(_) => 1,
        Error::DivisionByZero | Error::Pole(_) => 1,
        _ => 2,
    }
}

fn parse_list(s: &str, flag: &str) -> qaffine::Result<Vec<usize>> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .ok()
                .filter(|&v| v >= 1)
                .ok_or_else(|| usage(format!("--{flag}: expected positive integers, got {x:?}")))
        })
        .collect()
}

fn read_json(path: &PathBuf) -> qaffine::Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Json(format!("{}: {e}", path.display())))
}

fn descriptor(v: &Value) -> qaffine::Result<ModuleDescriptor> {
    serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))
}

enum Input {
    Descriptor(ModuleDescriptor),
    Bundle { quantum: ModuleDescriptor },
}

fn read_input(path: &PathBuf) -> qaffine::Result<Input> {
    let v = read_json(path)?;
    match v.get("quantum") {
        Some(q) => Ok(Input::Bundle { quantum: descriptor(q)? }),
        None => Ok(Input::Descriptor(descriptor(&v)?)),
    }
}

/// The quantum group module described by a descriptor, applying F or J to Hecke modules.
fn quantum_module<F: Field>(
    make: &MakeCtx<'_, F>,
    d: &ModuleDescriptor,
    n: Option<usize>,
) -> qaffine::Result<UqModule<F>> {
    if d.is_hecke() {
        let n = n.or(d.n).ok_or_else(|| usage("--n is required for Hecke algebra modules"))?;
        let ctx = make(n)?;
        let m = d.to_hecke(&ctx)?;
        if m.is_affine() {
            Ok(functor_f(&ctx, &m, n)?.module)
        } else {
            Ok(jimbo_j(&ctx, &m, n)?.module)
        }
    } else {
        let n = d.n.ok_or_else(|| Error::Json("missing field n".into()))?;
        d.to_uq(&make(n)?)
    }
}

fn relation_output(report: &RelationReport, dim: usize) -> Output {
    let mut text = format!(
        "{} {} relations on a module of dimension {dim}\n",
        if report.pass() { "PASS" } else { "FAIL" },
        report.len()
    );
    for c in report.failures() {
        text.push_str(&format!("  fails: {}\n", c.relation));
    }
    Output {
        text,
        json: json!({ "pass": report.pass(), "dim": dim, "checks": report.checks }),
        code: if report.pass() { 0 } else { 1 },
    }
}

fn relations<F: Field>(
    make: &MakeCtx<'_, F>,
    path: &PathBuf,
    n: Option<usize>,
) -> qaffine::Result<Output> {
    let d = match read_input(path)? {
        Input::Bundle { quantum } => quantum,
        Input::Descriptor(d) => d,
    };
    let w = quantum_module(make, &d, n)?;
    let ctx = make(w.n())?;
    let report = if w.is_affine() { w.verify_affine_relations(&ctx)? } else { w.verify_relations(&ctx) };
    Ok(relation_output(&report, w.dim()))
}

fn build<F: Field>(ctx: &ScalarContext<F>, segments: &str, seed: u64) -> qaffine::Result<Value> {
    let segs = SegmentList::parse(segments)?;
    if segs.segments().is_empty() {
        return Err(usage("empty segment list"));
    }
    let (va, _) = irreducible_v_a(ctx, &segs, seed)?;
    let f = functor_f(ctx, &va, ctx.n())?.module;
    Ok(json!({
        "segments": segs.to_string(),
        "n": ctx.n(),
        "hecke": ModuleDescriptor::from_hecke(ctx, &va),
        "quantum": ModuleDescriptor::from_uq(&f),
    }))
}

fn drinfeld<F: Field>(ctx: &ScalarContext<F>, segments: &str) -> qaffine::Result<Output> {
    let segs = SegmentList::parse(segments)?;
    let p = drinfeld_polys(ctx, &segs, ctx.n())?;
    let lines = p.render(ctx);
    let roots: Vec<Vec<String>> = p.roots.iter().map(|r| r.iter().map(|x| ctx.render_q(x)).collect()).collect();
    Ok(Output {
        text: lines.join("\n") + "\n",
        json: json!({
            "segments": segs.to_string(),
            "n": ctx.n(),
            "degrees": p.degrees(),
            "coefficients": p.to_strings(ctx),
            "roots": roots,
            "polynomials": lines,
        }),
        code: 0,
    })
}

fn check<F: Field>(
    make: &MakeCtx<'_, F>,
    id: &str,
    ns: &[usize],
    ells: &[usize],
    segments: Option<SegmentList>,
    seed: u64,
    force: bool,
) -> qaffine::Result<Output> {
    let ids: Vec<&str> = match id {
        "all" => CHECK_IDS.to_vec(),
        _ if CHECK_IDS.contains(&id) => vec![id],
        _ => return Err(usage(format!("unknown check id {id}; known: all, {}", CHECK_IDS.join(", ")))),
    };
    let ells = match &segments {
        Some(s) => vec![s.total_len()],
        None => ells.to_vec(),
    };
    let mut jobs: Vec<(&str, CheckConfig)> = Vec::new();
    for &n in ns {
        for &ell in &ells {
            for &id in &ids {
                jobs.push((id, CheckConfig { n, ell, segments: segments.clone(), seed, force }));
            }
        }
    }
    let results: Vec<qaffine::Result<CheckOutcome>> =
        par::map_slice(&jobs, |(id, cfg)| make(cfg.n).and_then(|ctx| run_check(&ctx, id, cfg)));
    let outcomes = results.into_iter().collect::<qaffine::Result<Vec<_>>>()?;

    let mut text = String::new();
    for o in &outcomes {
        let tag = match o.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        };
        text.push_str(&format!("{tag} {} n={} ℓ={}\n", o.id, o.n, o.ell));
        for d in &o.details {
            text.push_str(&format!("  {d}\n"));
        }
    }
    let failed = outcomes.iter().filter(|o| o.status == Status::Fail).count();
    let ran = outcomes.iter().filter(|o| o.status != Status::Skipped).count();
    let code = if failed > 0 {
        1
    } else if ran == 0 {
        text.push_str("nothing ran; pass --force to lift the ℓ ≤ n requirement\n");
        2
    } else {
        0
    };
    Ok(Output { text, json: json!({ "pass": failed == 0 && ran > 0, "results": outcomes }), code })
}

fn character_output<F: Field>(w: &UqModule<F>) -> Output {
    let table = character(w);
    let mut text = String::new();
    for (wt, m) in &table {
        text.push_str(&format!("{wt:?}: {m}\n"));
    }
    let rows: Vec<Value> = table.iter().map(|(wt, m)| json!({ "weight": wt, "multiplicity": m })).collect();
    Output { text, json: json!({ "dim": w.dim(), "character": rows }), code: 0 }
}

fn isomorphic<F: Field>(
    make: &MakeCtx<'_, F>,
    first: &PathBuf,
    second: &PathBuf,
    seed: u64,
) -> qaffine::Result<Output> {
    let load = |p: &PathBuf| match read_input(p)? {
        Input::Bundle { quantum } => Ok(quantum),
        Input::Descriptor(d) => Ok(d),
    };
    let (a, b) = (load(first)?, load(second)?);
    if a.is_hecke() != b.is_hecke() {
        return Err(usage("cannot compare a Hecke algebra module with a quantum group module"));
    }
    let found = if a.is_hecke() {
        let n = a.n.ok_or_else(|| Error::Json("missing field n".into()))?;
        let ctx = make(n)?;
        let (ma, mb) = (a.to_hecke(&ctx)?, b.to_hecke(&ctx)?);
        are_isomorphic(&ma.action(), &mb.action(), seed)?
    } else {
        let n = a.n.ok_or_else(|| Error::Json("missing field n".into()))?;
        let ctx = make(n)?;
        let (wa, wb) = (a.to_uq(&ctx)?, b.to_uq(&ctx)?);
        if wa.generators().len() != wb.generators().len() {
            return Err(usage("modules have different generator sets"));
        }
        are_isomorphic(&wa.action(), &wb.action(), seed)?
    };
    let iso = found.is_some();
    Ok(Output {
        text: format!("{}\n", if iso { "isomorphic" } else { "not isomorphic" }),
        json: json!({ "isomorphic": iso }),
        code: if iso { 0 } else { 1 },
    })
}

fn execute<F: Field>(cli: &Cli, make: &MakeCtx<'_, F>) -> qaffine::Result<Output> {
    match &cli.command {
        Command::Relations { module_file, n } => relations(make, module_file, *n),
        Command::Build { segments, n, output } => {
            let bundle = build(&make(*n)?, segments, cli.seed)?;
            let pretty = serde_json::to_string_pretty(&bundle).expect("bundle serializes");
            if let Some(path) = output {
                std::fs::write(path, &pretty).map_err(|e| usage(format!("{}: {e}", path.display())))?;
                let text = format!("wrote {}\n", path.display());
                return Ok(Output { text, json: json!({ "written": path }), code: 0 });
            }
            Ok(Output { text: pretty + "\n", json: bundle, code: 0 })
        }
        Command::Drinfeld { segments, n } => drinfeld(&make(*n)?, segments),
        Command::Check { id, n, ell, segments, force } => {
            let ns = parse_list(n, "n")?;
            let ells = parse_list(ell, "ell")?;
            let segs = segments.as_deref().map(SegmentList::parse).transpose()?;
            check(make, id, &ns, &ells, segs, cli.seed, *force)
        }
        Command::Character { module_file, segments, n } => {
            let w = match (module_file, segments) {
                (Some(p), _) => {
                    let d = match read_input(p)? {
                        Input::Bundle { quantum } => quantum,
                        Input::Descriptor(d) => d,
                    };
                    quantum_module(make, &d, *n)?
                }
                (None, Some(s)) => {
                    let n = n.ok_or_else(|| usage("--n is required with --segments"))?;
                    let d = descriptor(&build(&make(n)?, s, cli.seed)?["quantum"])?;
                    d.to_uq(&make(n)?)?
                }
                (None, None) => return Err(usage("give --module-file or --segments")),
            };
            Ok(character_output(&w))
        }
        Command::Isomorphic { first, second } => isomorphic(make, first, second, cli.seed),
    }
}

fn run(cli: &Cli) -> qaffine::Result<Output> {
    match cli.backend.as_str() {
        "symbolic" => execute::<RatFunc>(cli, &|n| Ok(ScalarContext::symbolic(n))),
        b => {
            let t0 = b
                .strip_prefix("rational:")
                .and_then(|s| s.parse::<BigRational>().ok())
                .ok_or_else(|| usage(format!("--backend: expected symbolic or rational:<t0>, got {b:?}")))?;
            execute::<BigRational>(cli, &|n| ScalarContext::specialized(n, t0.clone()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if command_n(&cli.command) == Some(0) {
        eprintln!("error: --n must be at least 1");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("output serializes"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn command_n(c: &Command) -> Option<usize> {
    match c {
        Command::Build { n, .. } | Command::Drinfeld { n, .. } => Some(*n),
        Command::Relations { n, .. } | Command::Character { n, .. } => *n,
        _ => None,
    }
}
