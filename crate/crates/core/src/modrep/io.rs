//! Module files.
//!
//! ```text
//! # comments start with '#'
//! dim <vertex> <n>          (vertices not listed have dimension 0)
//! arrow <name>              (followed by dim(source) rows of dim(target) integers)
//! ```
//!
//! All `dim` lines come before the first `arrow` block. Arrows that are not
//! listed act by zero. Entries are reduced modulo the field prime.

use std::fmt::Write as _;

use super::ModuleRep;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, col, msg: msg.into() }
}

pub fn read_module(alg: &Algebra, text: &str) -> Result<ModuleRep> {
    let f = alg.field();
    let mut dims = vec![0usize; alg.num_vertices()];
    let mut seen_dim = vec![false; alg.num_vertices()];
    let mut maps: Vec<Option<Matrix>> = vec![None; alg.num_arrows()];
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty())
        .peekable();
    let mut in_arrows = false;
    while let Some((ln, line)) = lines.next() {
        let words: Vec<&str> = line.split_whitespace().collect();
        let col = line.find(words[0]).unwrap_or(0) + 1;
        match words[0] {
            "dim" => {
                if in_arrows {
                    return Err(syntax(ln, col, "`dim` after an arrow block"));
                }
                let [_, v, n] = words[..] else {
                    return Err(syntax(ln, col, "expected `dim <vertex> <n>`"));
                };
                let v = alg.vertex_index(v)?;
                if std::mem::replace(&mut seen_dim[v], true) {
                    return Err(Error::Duplicate(alg.quiver().vertices[v].clone()));
                }
                dims[v] = n.parse().map_err(|_| syntax(ln, col, format!("bad dimension `{n}`")))?;
            }
            "arrow" => {
                in_arrows = true;
                let [_, name] = words[..] else {
                    return Err(syntax(ln, col, "expected `arrow <name>`"));
                };
                let a = alg.quiver().arrow(name)?;
                if maps[a].is_some() {
                    return Err(Error::Duplicate(name.to_string()));
                }
                let arr = alg.arrow(a);
                let (r, c) = (dims[arr.source], dims[arr.target]);
                let mut data = Vec::with_capacity(r * c);
                if c > 0 {
                    for _ in 0..r {
                        let Some((rl, row)) = lines.next() else {
                            return Err(syntax(ln, col, format!("arrow `{name}` needs {r} rows")));
                        };
                        let vals = row
                            .split_whitespace()
                            .map(|t| t.parse::<i64>().map(|x| f.reduce(x)))
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(|_| syntax(rl, 1, "expected a row of integers"))?;
                        if vals.len() != c {
                            return Err(syntax(rl, 1, format!("expected {c} entries, found {}", vals.len())));
                        }
                        data.extend(vals);
                    }
                }
                maps[a] = Some(Matrix::from_vec(f, r, c, data));
            }
            w => return Err(syntax(ln, col, format!("unknown directive `{w}`"))),
        }
    }
    let maps = maps
        .into_iter()
        .enumerate()
        .map(|(a, m)| {
            let arr = alg.arrow(a);
            m.unwrap_or_else(|| Matrix::zeros(f, dims[arr.source], dims[arr.target]))
        })
        .collect();
    ModuleRep::new(alg, dims, maps)
}

pub fn write_module(m: &ModuleRep) -> String {
    let alg = m.algebra();
    let mut s = String::new();
    for (v, name) in alg.quiver().vertices.iter().enumerate() {
        if m.dim_at(v) > 0 {
            writeln!(s, "dim {name} {}", m.dim_at(v)).unwrap();
        }
    }
    for (a, arr) in alg.quiver().arrows.iter().enumerate() {
        let mat = m.arrow_map(a);
        if mat.is_zero() {
            continue;
        }
        writeln!(s, "arrow {}", arr.name).unwrap();
        for r in 0..mat.rows() {
            let row: Vec<String> = mat.row(r).iter().map(u32::to_string).collect();
            writeln!(s, "{}", row.join(" ")).unwrap();
        }
    }
    s
}
