//! Line-oriented text formats for schemoids, association schemes and groups.
//!
//! Schemoid files:
//!
//! ```text
//! #qschemoid v1
//! objects 2
//! mor 1_0 0 0
//! mor 1_1 1 1
//! mor u 0 1
//! comp 1_0 1_0 1_0
//! comp u 1_0 u
//! comp 1_1 u u
//! comp 1_1 1_1 1_1
//! block id 1_0 1_1
//! block arrow u
//! ```
//!
//! `comp g f gf` records `g∘f`, and every composable pair must be listed.
//! Identities are not declared: the identity at `x` is the loop at `x` that
//! acts as a unit in the listed composites. Without any `block` line the
//! partition is discrete, so a block-free file describes a plain category.
//! An association schemoid adds `invol <object images> / <morphism images>`.
//!
//! Scheme files are `#ascheme v1`, the point count, then the relation
//! matrix; group files are `#group v1`, the order, then the Cayley table.

use std::collections::HashMap;

use thiserror::Error;

use crate::aschemoid::ASchemoid;
use crate::constructors::{jmath, scheme_of_group};
use crate::fincat::{FinGroup, RawCategory};
use crate::schemoid::{AssocScheme, Partition, QSchemoid};

pub const SCHEMOID_HEADER: &str = "#qschemoid v1";
pub const SCHEME_HEADER: &str = "#ascheme v1";
pub const GROUP_HEADER: &str = "#group v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {reason}")]
    Parse { line: usize, column: usize, reason: String },
    #[error(transparent)]
    Invalid(#[from] crate::Error),
}

fn perr(line: usize, column: usize, reason: impl Into<String>) -> FormatError {
    FormatError::Parse { line, column, reason: reason.into() }
}

fn invalid(e: impl Into<crate::Error>) -> FormatError {
    FormatError::Invalid(e.into())
}

/// Whitespace-separated tokens with their 1-based columns.
fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices().chain(std::iter::once((s.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (true, Some(b)) => {
                out.push((s[..b].chars().count() + 1, &s[b..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

/// Non-blank lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty())
}

fn number(line: usize, (col, tok): (usize, &str)) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| perr(line, col, format!("expected a non-negative integer, found `{tok}`")))
}

fn expect_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, header: &str) -> Result<(), FormatError> {
    match lines.next() {
        Some((_, l)) if l.trim() == header => Ok(()),
        Some((n, l)) => Err(perr(n, 1, format!("expected header `{header}`, found `{}`", l.trim()))),
        None => Err(perr(1, 1, format!("empty input, expected header `{header}`"))),
    }
}

/// A parsed schemoid file.
#[derive(Debug, Clone)]
pub struct SchemoidDoc {
    pub schemoid: QSchemoid,
    /// Present when the file has an `invol` line.
    pub involution: Option<ASchemoid>,
}

pub fn parse_schemoid(text: &str) -> Result<SchemoidDoc, FormatError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, SCHEMOID_HEADER)?;
    let mut raw: Option<RawCategory> = None;
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut comps: HashMap<(usize, usize), usize> = HashMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut block_names: Vec<String> = Vec::new();
    let mut invol: Option<(usize, Vec<usize>, Vec<usize>)> = None;
    let mut last_line = 1;
    for (n, l) in lines {
        last_line = n;
        let toks = tokens(l);
        let (kcol, key) = toks[0];
        let args = &toks[1..];
        let need_raw = |raw: &Option<RawCategory>| -> Result<(), FormatError> {
            if raw.is_none() {
                Err(perr(n, kcol, "`objects` must come first"))
            } else {
                Ok(())
            }
        };
        let lookup = |ids: &HashMap<String, usize>, (c, t): (usize, &str)| {
            ids.get(t).copied().ok_or_else(|| perr(n, c, format!("unknown morphism `{t}`")))
        };
        match key {
            "objects" => {
                if raw.is_some() {
                    return Err(perr(n, kcol, "duplicate `objects` line"));
                }
                if args.len() != 1 {
                    return Err(perr(n, kcol, "`objects` takes one count"));
                }
                raw = Some(RawCategory::new(number(n, args[0])?));
            }
            "mor" => {
                need_raw(&raw)?;
                let r = raw.as_mut().unwrap();
                if args.len() != 3 {
                    return Err(perr(n, kcol, "`mor` takes a name, a source and a target"));
                }
                let (s, t) = (number(n, args[1])?, number(n, args[2])?);
                for (tok, v) in [(args[1], s), (args[2], t)] {
                    if v >= r.n_objects {
                        return Err(perr(n, tok.0, format!("object {v} out of range")));
                    }
                }
                if ids.contains_key(args[0].1) {
                    return Err(perr(n, args[0].0, format!("duplicate morphism `{}`", args[0].1)));
                }
                ids.insert(args[0].1.to_string(), r.morphism(args[0].1, s, t));
            }
            "comp" => {
                need_raw(&raw)?;
                if args.len() != 3 {
                    return Err(perr(n, kcol, "`comp` takes g, f and g∘f"));
                }
                let (g, f, gf) = (lookup(&ids, args[0])?, lookup(&ids, args[1])?, lookup(&ids, args[2])?);
                if comps.insert((g, f), gf).is_some() {
                    return Err(perr(n, kcol, "composite listed twice"));
                }
                raw.as_mut().unwrap().compose(g, f, gf);
            }
            "block" => {
                need_raw(&raw)?;
                if args.len() < 2 {
                    return Err(perr(n, kcol, "`block` takes a name and at least one morphism"));
                }
                block_names.push(args[0].1.to_string());
                blocks.push(args[1..].iter().map(|&a| lookup(&ids, a)).collect::<Result<_, _>>()?);
            }
            "invol" => {
                need_raw(&raw)?;
                if invol.is_some() {
                    return Err(perr(n, kcol, "duplicate `invol` line"));
                }
                let slash = args
                    .iter()
                    .position(|&(_, t)| t == "/")
                    .ok_or_else(|| perr(n, kcol, "`invol` needs `/` between object and morphism images"))?;
                let objs = args[..slash].iter().map(|&a| number(n, a)).collect::<Result<_, _>>()?;
                let mors = args[slash + 1..].iter().map(|&a| lookup(&ids, a)).collect::<Result<_, _>>()?;
                invol = Some((n, objs, mors));
            }
            other => return Err(perr(n, kcol, format!("unknown directive `{other}`"))),
        }
    }
    let mut raw = raw.ok_or_else(|| perr(last_line, 1, "missing `objects` line"))?;
    for x in 0..raw.n_objects {
        let unit = (0..raw.names.len()).find(|&e| {
            raw.src[e] == x
                && raw.tgt[e] == x
                && (0..raw.names.len()).all(|f| {
                    (raw.tgt[f] != x || comps.get(&(e, f)) == Some(&f))
                        && (raw.src[f] != x || comps.get(&(f, e)) == Some(&f))
                })
        });
        match unit {
            Some(e) => raw.identities.push(e),
            None => return Err(perr(last_line, 1, format!("object {x} has no identity among its loops"))),
        }
    }
    let cat = raw.validate().map_err(invalid)?;
    let partition = if blocks.is_empty() {
        Partition::discrete(cat.n_morphisms()).renamed(cat.names().to_vec())
    } else {
        Partition::with_names(cat.n_morphisms(), blocks, block_names).map_err(invalid)?
    };
    let schemoid = QSchemoid::new(cat, partition).map_err(invalid)?;
    let involution = match invol {
        None => None,
        Some((_, objs, mors)) => Some(ASchemoid::new(schemoid.clone(), objs, mors).map_err(invalid)?),
    };
    Ok(SchemoidDoc { schemoid, involution })
}

fn emit_body(q: &QSchemoid) -> String {
    use std::fmt::Write;
    let c = q.cat();
    let mut s = format!("{SCHEMOID_HEADER}\nobjects {}\n", c.n_objects());
    for m in 0..c.n_morphisms() {
        writeln!(s, "mor {} {} {}", c.name(m), c.src(m), c.tgt(m)).unwrap();
    }
    for g in 0..c.n_morphisms() {
        for f in 0..c.n_morphisms() {
            if let Some(gf) = c.compose(g, f) {
                writeln!(s, "comp {} {} {}", c.name(g), c.name(f), c.name(gf)).unwrap();
            }
        }
    }
    let mut order: Vec<usize> = (0..q.n_blocks()).collect();
    order.sort_by_key(|&b| q.partition().block(b)[0]);
    for b in order {
        let members: Vec<&str> = q.partition().block(b).iter().map(|&m| c.name(m)).collect();
        writeln!(s, "block {} {}", q.partition().name(b), members.join(" ")).unwrap();
    }
    s
}

/// Canonical text: morphisms in index order, composites in `(g, f)` index
/// order, blocks sorted by least member.
pub fn emit_schemoid(q: &QSchemoid) -> String {
    emit_body(q)
}

pub fn emit_aschemoid(a: &ASchemoid) -> String {
    let mut s = emit_body(a.base());
    let objs: Vec<String> = a.t_obj_map().iter().map(ToString::to_string).collect();
    let mors: Vec<&str> = a.t_mor_map().iter().map(|&m| a.base().cat().name(m)).collect();
    s.push_str(&format!("invol {} / {}\n", objs.join(" "), mors.join(" ")));
    s
}

/// Reads `n`, then `n` rows of `n` integers.
fn parse_square(text: &str, header: &str) -> Result<(Vec<Vec<usize>>, Vec<usize>), FormatError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, header)?;
    let (n_line, n_text) = lines.next().ok_or_else(|| perr(2, 1, "missing size line"))?;
    let size_toks = tokens(n_text);
    if size_toks.len() != 1 {
        return Err(perr(n_line, 1, "size line holds one integer"));
    }
    let n = number(n_line, size_toks[0])?;
    let mut rows = Vec::with_capacity(n);
    let mut row_lines = Vec::with_capacity(n);
    for (ln, l) in lines {
        if rows.len() == n {
            return Err(perr(ln, 1, format!("expected {n} rows, found more")));
        }
        let toks = tokens(l);
        if toks.len() != n {
            return Err(perr(ln, 1, format!("row {} has {} entries, expected {n}", rows.len(), toks.len())));
        }
        rows.push(toks.into_iter().map(|t| number(ln, t)).collect::<Result<Vec<_>, _>>()?);
        row_lines.push(ln);
    }
    if rows.len() != n {
        return Err(perr(n_line, 1, format!("expected {n} rows, found {}", rows.len())));
    }
    Ok((rows, row_lines))
}

pub fn parse_scheme(text: &str) -> Result<AssocScheme, FormatError> {
    let (rows, row_lines) = parse_square(text, SCHEME_HEADER)?;
    for (i, row) in rows.iter().enumerate() {
        if row[i] != 0 {
            let col = tokens(text.lines().nth(row_lines[i] - 1).unwrap())[i].0;
            return Err(perr(row_lines[i], col, format!("row {i} has nonzero diagonal entry {}", row[i])));
        }
    }
    AssocScheme::from_matrix(&rows).map_err(invalid)
}

fn emit_square(header: &str, rows: &[Vec<usize>]) -> String {
    let mut s = format!("{header}\n{}\n", rows.len());
    for r in rows {
        let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

pub fn emit_scheme(a: &AssocScheme) -> String {
    emit_square(SCHEME_HEADER, &a.matrix())
}

pub fn parse_group(text: &str) -> Result<FinGroup, FormatError> {
    let (rows, _) = parse_square(text, GROUP_HEADER)?;
    FinGroup::from_table(&rows).map_err(invalid)
}

pub fn emit_group(g: &FinGroup) -> String {
    emit_square(GROUP_HEADER, &g.rows())
}

/// Any of the three formats, recognized by its header.
#[derive(Debug, Clone)]
pub enum Document {
    Schemoid(SchemoidDoc),
    Scheme(AssocScheme),
    Group(FinGroup),
}

impl Document {
    /// The schemoid a document stands for: schemes go through `ȷ`, groups
    /// through `ȷ∘S`.
    pub fn to_schemoid(&self) -> QSchemoid {
        match self {
            Document::Schemoid(d) => d.schemoid.clone(),
            Document::Scheme(a) => jmath(a),
            Document::Group(g) => jmath(&scheme_of_group(g)),
        }
    }
}

pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    let first = content_lines(text).next().map(|(_, l)| l.trim()).unwrap_or("");
    match first {
        SCHEMOID_HEADER => parse_schemoid(text).map(Document::Schemoid),
        SCHEME_HEADER => parse_scheme(text).map(Document::Scheme),
        GROUP_HEADER => parse_group(text).map(Document::Group),
        other => Err(perr(1, 1, format!("unrecognized header `{other}`"))),
    }
}
