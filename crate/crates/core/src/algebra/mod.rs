//! Bound quiver algebras `kQ/I` realized by a normal-form path basis.
//!
//! Paths compose left to right: `p*q` is "first `p`, then `q`", so a right
//! module acts by `m·(pq) = (m·p)·q` and representation matrices multiply in
//! reading order.

mod nakayama;
mod parse;
pub(crate) mod rewrite;

use std::collections::HashMap;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use nakayama::{cyclic_kupisch_series, is_admissible_kupisch, linear_kupisch_series, nakayama_from_kupisch};
pub use parse::Presentation;

use crate::error::{Error, Result};
use crate::linalg::PrimeField;
use rewrite::{Poly, Rule, Word};

/// Default cap on the length of leading words during completion.
pub const DEFAULT_MAX_PATH_LENGTH: usize = 30;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn vertex(&self, name: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow(&self, name: &str) -> Result<usize> {
        self.arrows.iter().position(|a| a.name == name).ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for a in &self.arrows {
            let (x, y) = (find(&mut parent, a.source), find(&mut parent, a.target));
            parent[x] = y;
        }
        let root = find(&mut parent, 0);
        (0..n).all(|v| find(&mut parent, v) == root)
    }
}

/// A path: a source vertex and a (possibly empty) composable arrow sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathWord {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl PathWord {
    pub fn trivial(v: usize) -> Self {
        PathWord { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_trivial()
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationPoly {
    pub terms: Vec<(u32, PathWord)>,
}

/// Provenance metadata supplied by generators or corpus files; never inferred.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    pub selfinjective: bool,
    pub gendo_symmetric: bool,
    pub symmetric: bool,
    pub higher_auslander: bool,
}

/// One rule of the completed rewriting system: `lead` rewrites to `rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lead: PathWord,
    pub rhs: Vec<(u32, PathWord)>,
}

type Sparse = Vec<(usize, u32)>;

/// A finite-dimensional basic algebra with an explicit path basis and structure constants.
#[derive(Clone, Debug)]
pub struct AlgebraTable {
    field: PrimeField,
    quiver: Quiver,
    basis: Vec<PathWord>,
    mult: Vec<Sparse>,
    vertex_elem: Vec<usize>,
    arrow_elem: Vec<usize>,
    between: Vec<Vec<Vec<usize>>>,
    position: Vec<usize>,
    relations: Vec<RelationPoly>,
    rules: Option<Vec<RewriteRule>>,
    flags: Flags,
    opposite: bool,
}

impl AlgebraTable {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.quiver.arrows.len()
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.quiver.arrows[a]
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[PathWord] {
        &self.basis
    }

    pub fn flags(&self) -> Flags {
        self.flags
    }

    pub fn relations(&self) -> &[RelationPoly] {
        &self.relations
    }

    /// The completed rewriting system; `None` for tables built as opposites.
    pub fn rules(&self) -> Option<&[RewriteRule]> {
        self.rules.as_deref()
    }

    pub fn is_opposite(&self) -> bool {
        self.opposite
    }

    /// True when the presentation has no relations (a path algebra).
    pub fn is_hereditary_path_algebra(&self) -> bool {
        self.relations.is_empty()
    }

    /// Basis index of the idempotent `e_v`.
    pub fn vertex_element(&self, v: usize) -> usize {
        self.vertex_elem[v]
    }

    /// Basis index of the length-one path along arrow `a`.
    pub fn arrow_element(&self, a: usize) -> usize {
        self.arrow_elem[a]
    }

    /// Basis indices of paths from `v` to `w` (the space `e_v A e_w`), in index order.
    pub fn paths_between(&self, v: usize, w: usize) -> &[usize] {
        &self.between[v][w]
    }

    /// Position of basis element `i` inside `paths_between(source, target)`.
    pub fn position(&self, i: usize) -> usize {
        self.position[i]
    }

    /// Product of two basis elements as a sparse combination of basis elements.
    pub fn mult_basis(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.mult[i * self.dim() + j]
    }

    /// Product of two dense basis combinations.
    pub fn multiply(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0; self.dim()];
        for (i, &a) in x.iter().enumerate().filter(|(_, &a)| a != 0) {
            for (j, &b) in y.iter().enumerate().filter(|(_, &b)| b != 0) {
                let ab = f.mul(a, b);
                for &(k, c) in self.mult_basis(i, j) {
                    out[k] = f.add(out[k], f.mul(ab, c));
                }
            }
        }
        out
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.quiver.vertex(name)
    }

    pub fn format_path(&self, p: &PathWord) -> String {
        if p.is_trivial() {
            format!("e_{}", self.quiver.vertices[p.source])
        } else {
            p.arrows.iter().map(|&a| self.quiver.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    fn from_rules(pres: &Presentation, rank: &[usize], rules: Vec<Rule>, cap: usize) -> Result<Self> {
        let q = &pres.quiver;
        let n = q.vertices.len();
        let field = pres.field;
        let mut by_rank = vec![0usize; rank.len()];
        for (a, &r) in rank.iter().enumerate() {
            by_rank[r] = a;
        }
        let to_path = |w: &Word| {
            let arrows: Vec<usize> = w.0.iter().map(|&r| by_rank[r as usize]).collect();
            PathWord {
                source: q.arrows[arrows[0]].source,
                target: q.arrows[*arrows.last().unwrap()].target,
                arrows,
            }
        };

        let mut normal: Vec<Word> = Vec::new();
        let mut frontier: Vec<Word> = (0..q.arrows.len()).map(|a| Word(vec![rank[a] as u32])).collect();
        let mut len = 1;
        while !frontier.is_empty() {
            if len > cap {
                return Err(Error::NotFiniteAtCap { cap });
            }
            let mut next = Vec::new();
            for w in &frontier {
                let last = by_rank[*w.0.last().unwrap() as usize];
                for (b, arr) in q.arrows.iter().enumerate() {
                    if arr.source != q.arrows[last].target {
                        continue;
                    }
                    let mut ext = w.0.clone();
                    ext.push(rank[b] as u32);
                    if !rewrite::has_lead_suffix(&ext, &rules) {
                        next.push(Word(ext));
                    }
                }
            }
            normal.append(&mut frontier);
            frontier = next;
            len += 1;
        }
        normal.sort();

        let mut basis: Vec<PathWord> = (0..n).map(PathWord::trivial).collect();
        basis.extend(normal.iter().map(to_path));
        let index: HashMap<Vec<usize>, usize> =
            basis.iter().enumerate().skip(n).map(|(i, p)| (p.arrows.clone(), i)).collect();
        let words: Vec<Word> = basis.iter().map(|p| Word(p.arrows.iter().map(|&a| rank[a] as u32).collect())).collect();

        let dim = basis.len();
        let mut mult = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                if basis[i].target != basis[j].source {
                    continue;
                }
                mult[i * dim + j] = if i < n {
                    vec![(j, 1)]
                } else if j < n {
                    vec![(i, 1)]
                } else {
                    let mut w = words[i].0.clone();
                    w.extend_from_slice(&words[j].0);
                    let mut f = Poly::new();
                    f.insert(Word(w), 1);
                    rewrite::reduce(field, &f, &rules)
                        .into_iter()
                        .map(|(w, c)| (index[&to_path(&w).arrows], c))
                        .collect()
                };
            }
        }

        let arrow_elem = (0..q.arrows.len()).map(|a| index[&vec![a]]).collect();
        let public_rules = rules
            .iter()
            .map(|r| RewriteRule {
                lead: to_path(&r.lead),
                rhs: r.tail.iter().rev().map(|(w, &c)| (field.neg(c), to_path(w))).collect(),
            })
            .collect();
        let mut t = AlgebraTable {
            field,
            quiver: q.clone(),
            basis,
            mult,
            vertex_elem: (0..n).collect(),
            arrow_elem,
            between: Vec::new(),
            position: Vec::new(),
            relations: pres.relations.clone(),
            rules: Some(public_rules),
            flags: pres.flags,
            opposite: false,
        };
        t.index_between();
        Ok(t)
    }

    fn index_between(&mut self) {
        let n = self.num_vertices();
        self.between = vec![vec![Vec::new(); n]; n];
        self.position = vec![0; self.basis.len()];
        for (i, p) in self.basis.iter().enumerate() {
            let list = &mut self.between[p.source][p.target];
            self.position[i] = list.len();
            list.push(i);
        }
    }

    fn build_opposite(&self) -> AlgebraTable {
        let dim = self.dim();
        let mut quiver = self.quiver.clone();
        for a in &mut quiver.arrows {
            std::mem::swap(&mut a.source, &mut a.target);
        }
        let rev = |p: &PathWord| PathWord {
            source: p.target,
            target: p.source,
            arrows: p.arrows.iter().rev().copied().collect(),
        };
        let mut mult = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                mult[i * dim + j] = self.mult[j * dim + i].clone();
            }
        }
        let mut t = AlgebraTable {
            field: self.field,
            quiver,
            basis: self.basis.iter().map(rev).collect(),
            mult,
            vertex_elem: self.vertex_elem.clone(),
            arrow_elem: self.arrow_elem.clone(),
            between: Vec::new(),
            position: Vec::new(),
            relations: self
                .relations
                .iter()
                .map(|r| RelationPoly { terms: r.terms.iter().map(|(c, p)| (*c, rev(p))).collect() })
                .collect(),
            rules: None,
            flags: self.flags,
            opposite: !self.opposite,
        };
        t.index_between();
        t
    }
}

/// Shared handle to an algebra table together with its opposite.
///
/// [`Algebra::opposite`] flips between the two sides without copying, so
/// `A.opposite().opposite() == A` holds by identity. Two handles are equal
/// exactly when they refer to the same side of the same table pair.
#[derive(Clone)]
pub struct Algebra {
    tables: Arc<[AlgebraTable; 2]>,
    side: usize,
}

impl Algebra {
    pub fn from_table(table: AlgebraTable) -> Algebra {
        let op = table.build_opposite();
        Algebra { tables: Arc::new([table, op]), side: 0 }
    }

    /// Parses and completes a presentation with the default path-length cap.
    pub fn from_text(text: &str) -> Result<Algebra> {
        complete_to_basis(&Presentation::parse(text)?, DEFAULT_MAX_PATH_LENGTH)
    }

    pub fn opposite(&self) -> Algebra {
        Algebra { tables: Arc::clone(&self.tables), side: 1 - self.side }
    }

    pub fn table(&self) -> &AlgebraTable {
        &self.tables[self.side]
    }
}

impl Deref for Algebra {
    type Target = AlgebraTable;

    fn deref(&self) -> &AlgebraTable {
        self.table()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.tables, &other.tables) && self.side == other.side
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra(dim {}, {} vertices{})",
            self.dim(),
            self.num_vertices(),
            if self.is_opposite() { ", opposite" } else { "" }
        )
    }
}

/// Completes the relations of `pres` and returns the algebra with its normal-form basis.
pub fn complete_to_basis(pres: &Presentation, max_path_length: usize) -> Result<Algebra> {
    let q = &pres.quiver;
    if !q.is_connected() {
        log::warn!("quiver is disconnected; invariants are computed for the product algebra");
    }
    let mut order: Vec<usize> = (0..q.arrows.len()).collect();
    order.sort_by(|&a, &b| q.arrows[a].name.cmp(&q.arrows[b].name));
    let mut rank = vec![0; order.len()];
    for (r, &a) in order.iter().enumerate() {
        rank[a] = r;
    }
    let polys: Vec<Poly> = pres
        .relations
        .iter()
        .map(|r| r.terms.iter().map(|(c, p)| (Word(p.arrows.iter().map(|&a| rank[a] as u32).collect()), *c)).collect())
        .collect();
    let rules = rewrite::complete(pres.field, polys, max_path_length)?;
    Ok(Algebra::from_table(AlgebraTable::from_rules(pres, &rank, rules, max_path_length)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const TWO_CYCLE: &str = "vertices v1 v2\narrow a v1 v2\narrow b v2 v1\nrelation a*b\n";

    fn unit(dim: usize, i: usize) -> Vec<u32> {
        let mut v = vec![0; dim];
        v[i] = 1;
        v
    }

    #[test]
    fn path_algebra_dimensions() {
        let a2 = Algebra::from_text("vertices v1 v2\narrow a v1 v2\n").unwrap();
        assert_eq!(a2.dim(), 3);
        let kr = Algebra::from_text("vertices v1 v2\narrow a v1 v2\narrow b v1 v2\n").unwrap();
        assert_eq!(kr.dim(), 4);
    }

    #[test]
    fn two_cycle_with_zero_relation() {
        // Oracle: enumerate every path of length <= 3 in the 2-cycle and discard
        // those containing the subpath a*b; what survives is the basis.
        let alg = Algebra::from_text(TWO_CYCLE).unwrap();
        let mut surviving = vec!["e1".to_string(), "e2".to_string()];
        let step = |c: char| if c == 'a' { 'b' } else { 'a' };
        for start in ['a', 'b'] {
            let mut w = String::from(start);
            for _ in 0..3 {
                if !w.contains("ab") {
                    surviving.push(w.clone());
                }
                let next = step(w.chars().last().unwrap());
                w.push(next);
            }
        }
        assert_eq!(surviving.len(), 5, "{surviving:?}");
        assert_eq!(alg.dim(), 5);
        let names: Vec<_> = alg.basis().iter().map(|p| alg.format_path(p)).collect();
        assert_eq!(names, vec!["e_v1", "e_v2", "a", "b", "b*a"]);

        // a * b = 0 by the relation.
        let (a, b) = (alg.arrow_element(0), alg.arrow_element(1));
        assert!(alg.mult_basis(a, b).is_empty());
        assert_eq!(alg.mult_basis(b, a).len(), 1);
    }

    #[test]
    fn idempotents_are_orthogonal_and_sum_to_one() {
        for text in [TWO_CYCLE, "vertices 1 2 3 4\narrow a 1 2\narrow b 2 4\narrow c 1 3\narrow d 3 4\nrelation a*b - c*d\n"] {
            let alg = Algebra::from_text(text).unwrap();
            let d = alg.dim();
            let mut one = vec![0; d];
            for v in 0..alg.num_vertices() {
                one[alg.vertex_element(v)] = 1;
            }
            for v in 0..alg.num_vertices() {
                for w in 0..alg.num_vertices() {
                    let prod = alg.multiply(&unit(d, alg.vertex_element(v)), &unit(d, alg.vertex_element(w)));
                    let expect = if v == w { unit(d, alg.vertex_element(v)) } else { vec![0; d] };
                    assert_eq!(prod, expect);
                }
            }
            for i in 0..d {
                assert_eq!(alg.multiply(&one, &unit(d, i)), unit(d, i));
                assert_eq!(alg.multiply(&unit(d, i), &one), unit(d, i));
            }
        }
    }

    #[test]
    fn associativity_on_random_triples() {
        let alg = Algebra::from_text(
            "vertices 1 2 3\narrow a 1 2\narrow b 2 3\narrow c 3 1\narrow d 2 1\nrelation a*b*c - a*d\nrelation c*a*b\nrelation d*a\n",
        )
        .unwrap();
        let d = alg.dim();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = alg.field().p();
        for _ in 0..50 {
            let mut rand_vec = || (0..d).map(|_| rng.random_range(0..p)).collect::<Vec<u32>>();
            let (x, y, z) = (rand_vec(), rand_vec(), rand_vec());
            assert_eq!(alg.multiply(&alg.multiply(&x, &y), &z), alg.multiply(&x, &alg.multiply(&y, &z)));
        }
    }

    #[test]
    fn opposite_reverses_and_round_trips() {
        let alg = Algebra::from_text(TWO_CYCLE).unwrap();
        let op = alg.opposite();
        assert_eq!(op.dim(), alg.dim());
        assert_eq!(op.arrow(0).source, alg.arrow(0).target);
        assert!(op.opposite() == alg);
        assert_eq!(op.opposite().basis(), alg.basis());
        // Oracle: complete the reversed presentation from scratch.
        let rev = Algebra::from_text("vertices v1 v2\narrow a v2 v1\narrow b v1 v2\nrelation b*a\n").unwrap();
        assert_eq!(rev.dim(), op.dim());
        // In the opposite, b° * a° is the reversal of a*b, hence zero.
        let (a, b) = (op.arrow_element(0), op.arrow_element(1));
        assert!(op.mult_basis(b, a).is_empty());
    }

    #[test]
    fn path_algebra_a2_opposite() {
        let alg = Algebra::from_text("vertices 1 2\narrow a 1 2\n").unwrap();
        let op = alg.opposite();
        assert_eq!((op.arrow(0).source, op.arrow(0).target), (1, 0));
        assert_eq!(op.dim(), 3);
    }

    #[test]
    fn non_admissible_hits_cap() {
        let err = complete_to_basis(&Presentation::parse("vertices 1\narrow x 1 1\n").unwrap(), 8).unwrap_err();
        assert!(matches!(err, Error::NotFiniteAtCap { cap: 8 }));
    }
}
