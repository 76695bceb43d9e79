//! Line-oriented reader for algebra presentation files.
//!
//! ```text
//! field <p>
//! vertices <name> <name> ...
//! arrow <name> <source> <target>
//! relation <coeff>*<path> [ +|- <coeff>*<path> ]...
//! flags [selfinjective] [gendo_symmetric] [symmetric] [higher_auslander]
//! ```
//!
//! `#` starts a comment. A path is arrow names joined by `*`, read left to right
//! (`a*b` is "first `a`, then `b`").

use std::collections::{BTreeMap, HashMap};

use super::{Arrow, Flags, PathWord, Quiver, RelationPoly};
use crate::error::{Error, Result};
use crate::linalg::{PrimeField, DEFAULT_PRIME};

/// A parsed, name-resolved presentation `kQ/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub quiver: Quiver,
    pub relations: Vec<RelationPoly>,
    pub field: PrimeField,
    pub flags: Flags,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Star,
    Plus,
    Minus,
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, col, msg: msg.into() }
}

fn lex(line: usize, base_col: usize, s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = base_col + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let v = text.parse().map_err(|_| syntax(line, col, "integer too large"))?;
            out.push((col, Tok::Int(v)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && is_name_char(chars[i]) {
                i += 1;
            }
            out.push((col, Tok::Ident(chars[start..i].iter().collect())));
        } else {
            let t = match c {
                '*' => Tok::Star,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                _ => return Err(syntax(line, col, format!("unexpected character `{c}`"))),
            };
            out.push((col, t));
            i += 1;
        }
    }
    Ok(out)
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

struct RawRelation {
    line: usize,
    terms: Vec<(i64, Vec<usize>, usize)>,
}

impl Presentation {
    pub fn parse(text: &str) -> Result<Presentation> {
        let mut field: Option<u64> = None;
        let mut vertices: Option<Vec<String>> = None;
        let mut vindex: HashMap<String, usize> = HashMap::new();
        let mut arrows: Vec<Arrow> = Vec::new();
        let mut aindex: HashMap<String, usize> = HashMap::new();
        let mut raw: Vec<RawRelation> = Vec::new();
        let mut flags = Flags::default();

        for (ln, full) in text.lines().enumerate() {
            let line = ln + 1;
            let content = full.split('#').next().unwrap_or("");
            let trimmed = content.trim_start();
            if trimmed.trim().is_empty() {
                continue;
            }
            let lead = content.len() - trimmed.len();
            let kw_end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
            let kw = &trimmed[..kw_end];
            let rest = &trimmed[kw_end..];
            let rest_col = lead + kw_end + 1;
            let words = split_words(rest, rest_col);
            match kw {
                "field" => {
                    if field.is_some() {
                        return Err(syntax(line, lead + 1, "duplicate `field` line"));
                    }
                    let [(col, w)] = words.as_slice() else {
                        return Err(syntax(line, rest_col, "expected exactly one modulus"));
                    };
                    let p: u64 = w.parse().map_err(|_| syntax(line, *col, "modulus must be an integer"))?;
                    field = Some(p);
                }
                "vertices" => {
                    if vertices.is_some() {
                        return Err(syntax(line, lead + 1, "duplicate `vertices` line"));
                    }
                    if words.is_empty() {
                        return Err(syntax(line, rest_col, "expected at least one vertex"));
                    }
                    let mut names = Vec::new();
                    for (col, w) in &words {
                        if !w.chars().all(is_name_char) {
                            return Err(syntax(line, *col, format!("invalid vertex name `{w}`")));
                        }
                        if vindex.insert(w.clone(), names.len()).is_some() {
                            return Err(Error::Duplicate(w.clone()));
                        }
                        names.push(w.clone());
                    }
                    vertices = Some(names);
                }
                "arrow" => {
                    if vertices.is_none() {
                        return Err(syntax(line, lead + 1, "`arrow` before `vertices`"));
                    }
                    let [(ncol, name), (_, s), (_, t)] = words.as_slice() else {
                        return Err(syntax(line, rest_col, "expected `arrow <name> <source> <target>`"));
                    };
                    let mut cs = name.chars();
                    let ok_start = cs.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
                    if !ok_start || !name.chars().all(is_name_char) {
                        return Err(syntax(line, *ncol, format!("invalid arrow name `{name}`")));
                    }
                    let source = *vindex.get(s).ok_or_else(|| Error::UnknownVertex(s.clone()))?;
                    let target = *vindex.get(t).ok_or_else(|| Error::UnknownVertex(t.clone()))?;
                    if aindex.insert(name.clone(), arrows.len()).is_some() {
                        return Err(Error::Duplicate(name.clone()));
                    }
                    arrows.push(Arrow { name: name.clone(), source, target });
                }
                "relation" => {
                    let toks = lex(line, rest_col, rest)?;
                    raw.push(parse_relation(line, rest_col + rest.len(), &toks, &aindex, &arrows)?);
                }
                "flags" => {
                    for (col, w) in &words {
                        match w.as_str() {
                            "selfinjective" => flags.selfinjective = true,
                            "gendo_symmetric" => flags.gendo_symmetric = true,
                            "symmetric" => flags.symmetric = true,
                            "higher_auslander" => flags.higher_auslander = true,
                            _ => return Err(syntax(line, *col, format!("unknown flag `{w}`"))),
                        }
                    }
                }
                _ => return Err(syntax(line, lead + 1, format!("unknown directive `{kw}`"))),
            }
        }

        let field = PrimeField::new(field.unwrap_or(DEFAULT_PRIME as u64))?;
        let vertices = vertices.ok_or_else(|| syntax(1, 1, "missing `vertices` line"))?;
        let quiver = Quiver { vertices, arrows };
        let mut relations = Vec::new();
        for r in raw {
            relations.push(resolve_relation(&quiver, field, r)?);
        }
        Ok(Presentation { quiver, relations, field, flags })
    }
}

fn split_words(s: &str, base_col: usize) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in s.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(st)) => {
                out.push((base_col + st, s[st..i].to_string()));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(st) = start {
        out.push((base_col + st, s[st..].to_string()));
    }
    out
}

fn parse_relation(
    line: usize,
    end_col: usize,
    toks: &[(usize, Tok)],
    aindex: &HashMap<String, usize>,
    arrows: &[Arrow],
) -> Result<RawRelation> {
    let mut i = 0;
    let mut terms = Vec::new();
    let peek_col = |i: usize| toks.get(i).map(|t| t.0).unwrap_or(end_col);
    loop {
        let mut sign = 1i64;
        match toks.get(i) {
            Some((_, Tok::Plus)) if !terms.is_empty() || i == 0 => i += 1,
            Some((_, Tok::Minus)) => {
                sign = -1;
                i += 1;
            }
            _ if terms.is_empty() => {}
            Some((c, t)) => return Err(syntax(line, *c, format!("expected `+` or `-`, found {t:?}"))),
            None => unreachable!(),
        }
        let term_col = peek_col(i);
        let mut coeff = 1i64;
        if let Some((c, Tok::Int(v))) = toks.get(i) {
            coeff = i64::try_from(*v).map_err(|_| syntax(line, *c, "coefficient too large"))?;
            i += 1;
            match toks.get(i) {
                Some((_, Tok::Star)) => i += 1,
                _ => return Err(syntax(line, peek_col(i), "expected `*` after coefficient")),
            }
        }
        let mut path = Vec::new();
        loop {
            match toks.get(i) {
                Some((c, Tok::Ident(name))) => {
                    let a = *aindex.get(name).ok_or_else(|| Error::UnknownArrow(name.clone()))?;
                    if let Some(&prev) = path.last() {
                        let prev: usize = prev;
                        if arrows[prev].target != arrows[a].source {
                            return Err(syntax(
                                line,
                                *c,
                                format!("arrow `{name}` does not start where `{}` ends", arrows[prev].name),
                            ));
                        }
                    }
                    path.push(a);
                    i += 1;
                }
                _ => return Err(syntax(line, peek_col(i), "expected an arrow name")),
            }
            match toks.get(i) {
                Some((_, Tok::Star)) => i += 1,
                _ => break,
            }
        }
        terms.push((sign * coeff, path, term_col));
        if i >= toks.len() {
            break;
        }
        if !matches!(toks[i].1, Tok::Plus | Tok::Minus) {
            return Err(syntax(line, toks[i].0, "trailing input after relation term"));
        }
    }
    Ok(RawRelation { line, terms })
}

fn resolve_relation(q: &Quiver, field: PrimeField, raw: RawRelation) -> Result<RelationPoly> {
    let line = raw.line;
    let mut combined: BTreeMap<Vec<usize>, i64> = BTreeMap::new();
    let mut endpoints = None;
    for (c, path, _) in &raw.terms {
        if path.len() < 2 {
            return Err(Error::ShortPath { line, len: path.len() });
        }
        let ends = (q.arrows[path[0]].source, q.arrows[*path.last().unwrap()].target);
        match endpoints {
            None => endpoints = Some(ends),
            Some(e) if e != ends => return Err(Error::NotParallel { line }),
            _ => {}
        }
        *combined.entry(path.clone()).or_default() += c;
    }
    let (source, target) = endpoints.expect("relation has at least one term");
    let terms: Vec<(u32, PathWord)> = combined
        .into_iter()
        .map(|(p, c)| (field.reduce(c), PathWord { source, target, arrows: p }))
        .filter(|(c, _)| *c != 0)
        .collect();
    if terms.is_empty() {
        return Err(Error::ZeroRelation { line });
    }
    Ok(RelationPoly { terms })
}
