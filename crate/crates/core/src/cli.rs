//! The `qsmd` command line: build, validate and analyze schemoid files.
//!
//! Exit status is 0 for success or a positive answer, 1 for bad input and 2
//! when the computed answer is negative (not homotopic, not contractible,
//! not isomorphic). Reports go to standard output, diagnostics to standard
//! error.

use std::ffi::OsString;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::aschemoid::{
    asmd_elementary_homotopy, enumerate_asmd_morphisms, tilde_cylinder, tilde_interval, transpose_aschemoid, ASchemoid,
};
use crate::constructors::{
    commuting_square, discrete_k, find_isomorphism, idempotent_chaotic, jmath, product_schemoid, scheme_of_group,
    stilde,
};
use crate::fincat::FinGroupoid;
use crate::haut::{haut_group, isomorphism_type};
use crate::homotopy::{collapse_obstruction, enumerate_morphisms, homotopic, homotopy_classes, is_contractible};
use crate::io::{emit_aschemoid, emit_group, emit_scheme, emit_schemoid, parse_document, Document};
use crate::schemoid::{AssocScheme, QSchemoid, SchemoidMorphism};
use crate::search::SearchCaps;

#[derive(Debug, Parser)]
#[command(name = "qsmd", version, about = "Finite quasi-schemoids and their strong homotopy theory")]
pub struct Cli {
    /// Largest enumerated morphism universe.
    #[arg(long, global = true, default_value_t = SearchCaps::default().max_universe)]
    pub cap: usize,
    /// Largest source object count accepted by searches.
    #[arg(long, global = true, default_value_t = SearchCaps::default().max_objects)]
    pub max_objects: usize,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for parallel searches (also `QSMD_THREADS`).
    #[arg(long, global = true, env = "QSMD_THREADS")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a schemoid, scheme or group file.
    Validate { file: PathBuf },
    /// Print every structure constant p^mu_{sigma tau}.
    Constants { file: PathBuf },
    /// Construct a schemoid, scheme or group file.
    #[command(subcommand)]
    Build(Build),
    /// Decide whether two morphisms are homotopic.
    Homotopic {
        source: PathBuf,
        #[arg(long)]
        target: Option<PathBuf>,
        /// `id`, `const:X` or an index into the sorted morphism list.
        f: String,
        g: String,
    },
    /// Partition all morphisms into homotopy classes.
    Classes {
        source: PathBuf,
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Compute the group of self-homotopy equivalences.
    Haut { file: PathBuf },
    /// Decide whether a schemoid is homotopy equivalent to a point.
    Contractible { file: PathBuf },
    /// Look for an isomorphism between two schemoids.
    Iso { a: PathBuf, b: PathBuf },
    /// Decide elementary homotopy of equivariant morphisms of association
    /// schemoids.
    AsmdHomotopic {
        source: PathBuf,
        #[arg(long)]
        target: Option<PathBuf>,
        f: String,
        g: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum Build {
    /// The trivial scheme on N points.
    TrivialScheme { n: usize },
    /// The scheme S(G) of a group file.
    SGroup { file: PathBuf },
    /// The schemoid of a scheme (group files go through S first).
    Jmath { file: PathBuf },
    /// S̃ of a group file, or of a schemoid file whose category is a groupoid.
    Stilde { file: PathBuf },
    /// The discrete schemoid on the category of a schemoid file.
    K { file: PathBuf },
    /// The product of two schemoids.
    Product { a: PathBuf, b: PathBuf },
    /// The contractible idempotent example on N objects.
    IdempotentChaotic { n: usize },
    /// The commuting square with blocks {alpha, gamma}, {beta, delta}, {epsilon}.
    CommutingSquare,
    /// K([1]) with the involution swapping its ends.
    TildeInterval,
    /// A scheme's schemoid with the transpose involution.
    Transpose { file: PathBuf },
    /// The cylinder of an association schemoid file.
    TildeCylinder { file: PathBuf },
    /// The cyclic group Z/N.
    Cyclic { n: usize },
    /// The symmetric group on N letters.
    Symmetric { n: usize },
}

/// Failures that map to exit status 1.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: String, source: crate::io::FormatError },
    #[error(transparent)]
    Library(#[from] crate::Error),
    #[error("{0}")]
    Usage(String),
}

/// A finished report: text, JSON, and whether the answer was positive.
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub positive: bool,
}

impl Report {
    fn yes(text: String, json: Value) -> Self {
        Report { text, json, positive: true }
    }

    fn answer(positive: bool, text: String, json: Value) -> Self {
        Report { text, json, positive }
    }
}

fn read_source(path: &Path) -> Result<String, CliError> {
    let shown = path.display().to_string();
    if shown == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|source| CliError::Read { path: shown, source })?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|source| CliError::Read { path: shown, source })
    }
}

fn load(path: &Path) -> Result<Document, CliError> {
    let text = read_source(path)?;
    parse_document(&text).map_err(|source| CliError::Format { path: path.display().to_string(), source })
}

fn load_schemoid(path: &Path) -> Result<QSchemoid, CliError> {
    Ok(load(path)?.to_schemoid())
}

fn load_scheme(path: &Path) -> Result<AssocScheme, CliError> {
    match load(path)? {
        Document::Scheme(a) => Ok(a),
        Document::Group(g) => Ok(scheme_of_group(&g)),
        Document::Schemoid(_) => Err(CliError::Usage(format!("{}: expected a scheme or group file", path.display()))),
    }
}

fn load_aschemoid(path: &Path) -> Result<ASchemoid, CliError> {
    match load(path)? {
        Document::Schemoid(d) => {
            d.involution.ok_or_else(|| CliError::Usage(format!("{}: no `invol` line", path.display())))
        }
        Document::Scheme(a) => Ok(transpose_aschemoid(&a)),
        Document::Group(g) => Ok(transpose_aschemoid(&scheme_of_group(&g))),
    }
}

fn describe(f: &SchemoidMorphism) -> String {
    format!("objects {:?} morphisms {:?}", f.functor.obj_map, f.functor.mor_map)
}

fn describe_json(f: &SchemoidMorphism) -> Value {
    json!({ "objects": f.functor.obj_map, "morphisms": f.functor.mor_map, "blocks": f.block_image })
}

/// Resolves `id`, `const:X` or a universe index.
fn pick(
    spec: &str,
    a: &QSchemoid,
    b: &QSchemoid,
    same: bool,
    universe: &[SchemoidMorphism],
) -> Result<SchemoidMorphism, CliError> {
    if spec == "id" {
        if !same {
            return Err(CliError::Usage("`id` needs the source and target to be the same file".into()));
        }
        return Ok(SchemoidMorphism::identity(a));
    }
    if let Some(x) = spec.strip_prefix("const:") {
        let x: usize = x.parse().map_err(|_| CliError::Usage(format!("bad object in `{spec}`")))?;
        if x >= b.cat().n_objects() {
            return Err(CliError::Usage(format!("object {x} out of range")));
        }
        return Ok(SchemoidMorphism::constant(a, b, x));
    }
    let i: usize =
        spec.parse().map_err(|_| CliError::Usage(format!("expected `id`, `const:X` or an index, found `{spec}`")))?;
    universe
        .get(i)
        .cloned()
        .ok_or_else(|| CliError::Usage(format!("index {i} is past the {} morphisms", universe.len())))
}

fn constants_report(q: &QSchemoid) -> Report {
    let p = q.partition();
    let b = q.n_blocks();
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for mu in 0..b {
        for sigma in 0..b {
            for tau in 0..b {
                let v = q.p(sigma, tau, mu);
                lines.push(format!("p^{}_{{{},{}}} = {v}", p.name(mu), p.name(sigma), p.name(tau)));
                rows.push(json!({ "mu": p.name(mu), "sigma": p.name(sigma), "tau": p.name(tau), "value": v }));
            }
        }
    }
    Report::yes(lines.join("\n"), json!({ "constants": rows }))
}

fn schemoid_summary(q: &QSchemoid) -> (String, Value) {
    let c = q.cat();
    let text =
        format!("quasi-schemoid: {} objects, {} morphisms, {} blocks", c.n_objects(), c.n_morphisms(), q.n_blocks());
    (
        text,
        json!({ "kind": "qschemoid", "objects": c.n_objects(), "morphisms": c.n_morphisms(), "blocks": q.n_blocks() }),
    )
}

fn build(cmd: &Build) -> Result<Report, CliError> {
    let text = match cmd {
        Build::TrivialScheme { n } => {
            if *n == 0 {
                return Err(CliError::Usage("a scheme needs at least one point".into()));
            }
            emit_scheme(&AssocScheme::trivial(*n))
        }
        Build::SGroup { file } => match load(file)? {
            Document::Group(g) => emit_scheme(&scheme_of_group(&g)),
            _ => return Err(CliError::Usage(format!("{}: expected a group file", file.display()))),
        },
        Build::Jmath { file } => emit_schemoid(&jmath(&load_scheme(file)?)),
        Build::Stilde { file } => {
            let groupoid = match load(file)? {
                Document::Group(g) => g.iota(),
                Document::Schemoid(d) => {
                    FinGroupoid::from_category(d.schemoid.cat().clone()).map_err(crate::Error::from)?
                }
                Document::Scheme(_) => {
                    return Err(CliError::Usage(format!("{}: expected a group or groupoid file", file.display())))
                }
            };
            emit_schemoid(stilde(&groupoid).schemoid())
        }
        Build::K { file } => emit_schemoid(&discrete_k(load_schemoid(file)?.cat())),
        Build::Product { a, b } => emit_schemoid(&product_schemoid(&load_schemoid(a)?, &load_schemoid(b)?)),
        Build::IdempotentChaotic { n } => {
            if *n == 0 {
                return Err(CliError::Usage("need at least one object".into()));
            }
            emit_schemoid(&idempotent_chaotic(*n))
        }
        Build::CommutingSquare => emit_schemoid(&commuting_square()),
        Build::TildeInterval => emit_aschemoid(&tilde_interval()),
        Build::Transpose { file } => emit_aschemoid(&transpose_aschemoid(&load_scheme(file)?)),
        Build::TildeCylinder { file } => emit_aschemoid(&tilde_cylinder(&load_aschemoid(file)?)),
        Build::Cyclic { n } if *n > 0 => emit_group(&crate::fincat::FinGroup::cyclic(*n)),
        Build::Symmetric { n } => emit_group(&crate::fincat::FinGroup::symmetric(*n)),
        Build::Cyclic { .. } => return Err(CliError::Usage("a group needs at least one element".into())),
    };
    let json = Value::String(text.clone());
    Ok(Report::yes(text.trim_end().to_string(), json))
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    let caps = SearchCaps { max_objects: cli.max_objects, max_universe: cli.cap };
    match &cli.command {
        Command::Validate { file } => {
            let (text, json) = match load(file)? {
                Document::Schemoid(d) => {
                    let (mut text, mut json) = schemoid_summary(&d.schemoid);
                    if let Some(a) = &d.involution {
                        text.push_str(&format!("\ninvolution: valid, moves objects: {}", a.moves_objects()));
                        json["involution"] = json!({ "moves_objects": a.moves_objects() });
                    }
                    (text, json)
                }
                Document::Scheme(a) => (
                    format!("association scheme: {} points, {} relations", a.n_points(), a.n_relations()),
                    json!({ "kind": "scheme", "points": a.n_points(), "relations": a.n_relations() }),
                ),
                Document::Group(g) => {
                    (format!("group: order {}", g.order()), json!({ "kind": "group", "order": g.order() }))
                }
            };
            Ok(Report::yes(text, json))
        }
        Command::Constants { file } => Ok(constants_report(&load_schemoid(file)?)),
        Command::Build(b) => build(b),
        Command::Homotopic { source, target, f, g } => {
            let a = load_schemoid(source)?;
            let b = match target {
                Some(t) => load_schemoid(t)?,
                None => a.clone(),
            };
            let universe = enumerate_morphisms(&a, &b, &caps).map_err(crate::Error::from)?;
            let (f, g) = (
                pick(f, &a, &b, target.is_none(), universe.morphisms())?,
                pick(g, &a, &b, target.is_none(), universe.morphisms())?,
            );
            let chain = homotopic(&a, &b, &f, &g, &universe).map_err(crate::Error::from)?;
            Ok(match chain {
                Some(c) => {
                    let path: Vec<usize> = c.morphisms().into_iter().map(|m| universe.position(m).unwrap()).collect();
                    let text = format!("homotopic: true\nchain length: {}\nchain: {:?}", c.len(), path);
                    Report::yes(text, json!({ "homotopic": true, "chain": path, "length": c.len() }))
                }
                None => Report::answer(false, "homotopic: false".into(), json!({ "homotopic": false })),
            })
        }
        Command::Classes { source, target } => {
            let a = load_schemoid(source)?;
            let b = match target {
                Some(t) => load_schemoid(t)?,
                None => a.clone(),
            };
            let universe = enumerate_morphisms(&a, &b, &caps).map_err(crate::Error::from)?;
            let classes = homotopy_classes(&a, &b, &universe);
            let mut text = format!("{} morphisms, {} classes", universe.len(), classes.len());
            for (k, members) in classes.classes.iter().enumerate() {
                text.push_str(&format!("\nclass {k}: {members:?}"));
            }
            Ok(Report::yes(text, json!({ "morphisms": universe.len(), "classes": classes.classes })))
        }
        Command::Haut { file } => {
            let q = load_schemoid(file)?;
            let h = haut_group(&q, &caps)?;
            let kind = isomorphism_type(&h.group).unwrap_or_else(|| "unrecognized".into());
            let mut text = format!("order {}, type {kind}", h.order());
            for row in h.group.rows() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                text.push_str(&format!("\n{}", cells.join(" ")));
            }
            for g in 0..h.order() {
                text.push_str(&format!("\nelement {g}: {}", describe(h.representative(g))));
            }
            let reps: Vec<Value> = (0..h.order()).map(|g| describe_json(h.representative(g))).collect();
            let json = json!({
                "order": h.order(),
                "type": kind,
                "table": h.group.rows(),
                "representatives": reps,
                "endomorphisms": h.endo.monoid.order(),
                "classes": h.classes.len(),
            });
            Ok(Report::yes(text, json))
        }
        Command::Contractible { file } => {
            let q = load_schemoid(file)?;
            let found = is_contractible(&q, &caps)?;
            let obstruction = collapse_obstruction(&q);
            let obs_text = match obstruction {
                Some((s, t)) => {
                    format!("obstruction = true (sigma = {}, tau = {})", q.partition().name(s), q.partition().name(t))
                }
                None => "obstruction = false".to_string(),
            };
            let obs_json = obstruction.map(|(s, t)| json!([q.partition().name(s), q.partition().name(t)]));
            // the obstruction only rules out contractibility when this holds
            let one_block = q.identities_in_one_block();
            Ok(match found {
                Some(c) => Report::yes(
                    format!(
                        "contractible: true\nobject: {}\nchain length: {}\n{obs_text}\nidentities in one block: {one_block}",
                        c.object,
                        c.chain.len()
                    ),
                    json!({
                        "contractible": true,
                        "object": c.object,
                        "length": c.chain.len(),
                        "obstruction": obs_json,
                        "identities_in_one_block": one_block,
                    }),
                ),
                None => Report::answer(
                    false,
                    format!("contractible: false\n{obs_text}\nidentities in one block: {one_block}"),
                    json!({ "contractible": false, "obstruction": obs_json, "identities_in_one_block": one_block }),
                ),
            })
        }
        Command::Iso { a, b } => {
            let (qa, qb) = (load_schemoid(a)?, load_schemoid(b)?);
            let found = find_isomorphism(&qa, &qb, &caps).map_err(crate::Error::from)?;
            Ok(match found {
                Some((f, _)) => Report::yes(
                    format!("isomorphic: true\n{}", describe(&f)),
                    json!({ "isomorphic": true, "witness": describe_json(&f) }),
                ),
                None => Report::answer(false, "isomorphic: false".into(), json!({ "isomorphic": false })),
            })
        }
        Command::AsmdHomotopic { source, target, f, g } => {
            let a = load_aschemoid(source)?;
            let b = match target {
                Some(t) => load_aschemoid(t)?,
                None => a.clone(),
            };
            let all = enumerate_asmd_morphisms(&a, &b, &caps).map_err(crate::Error::from)?;
            let plain: Vec<SchemoidMorphism> = all.iter().map(|m| m.morphism.clone()).collect();
            let same = target.is_none();
            let (f, g) = (pick(f, a.base(), b.base(), same, &plain)?, pick(g, a.base(), b.base(), same, &plain)?);
            let wrap = |m: SchemoidMorphism| {
                crate::aschemoid::ASchemoidMorphism::new(m, &a, &b).map_err(|e| CliError::Library(e.into()))
            };
            let (f, g) = (wrap(f)?, wrap(g)?);
            let h = asmd_elementary_homotopy(&a, &b, &f, &g).map_err(crate::Error::from)?;
            Ok(match h {
                Some(h) => Report::yes(
                    format!("homotopic: true\ndiagonal: {:?}", h.diag),
                    json!({ "homotopic": true, "diagonal": h.diag }),
                ),
                None => Report::answer(false, "homotopic: false".into(), json!({ "homotopic": false })),
            })
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> std::io::Result<()> {
    let body = if cli.json {
        let mut s = serde_json::to_string_pretty(&report.json).expect("JSON values serialize");
        s.push('\n');
        s
    } else {
        format!("{}\n", report.text)
    };
    match &cli.out {
        Some(p) => std::fs::write(p, body),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(body.as_bytes())
        }
    }
}

/// Parses `args`, runs the command and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    if let Some(n) = cli.threads {
        // a second initialization in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match execute(&cli) {
        Ok(report) => {
            if let Err(e) = emit(&cli, &report) {
                eprintln!("qsmd: {e}");
                return 1;
            }
            if report.positive {
                0
            } else {
                2
            }
        }
        Err(e) => {
            eprintln!("qsmd: {e}");
            1
        }
    }
}
