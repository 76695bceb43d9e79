//! Overlap completion of path-algebra relations into a confluent rewriting system.
//!
//! Words are compared length first, then lexicographically by arrow name. Every
//! rule rewrites its leading word (the largest word of the relation) into a
//! combination of strictly smaller parallel words. Completion resolves all
//! overlap ambiguities between leading words; inclusion ambiguities are removed
//! by re-reducing any rule whose leading word contains a newer one.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::PrimeField;

/// A word in arrow ranks (rank = position of the arrow name in sorted order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Word(pub Vec<u32>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) type Poly = BTreeMap<Word, u32>;

#[derive(Clone, Debug)]
pub(crate) struct Rule {
    pub lead: Word,
    /// Remaining terms of the monic relation `lead + tail`.
    pub tail: Poly,
}

fn add_term(f: &mut Poly, field: PrimeField, w: Word, c: u32) {
    if c == 0 {
        return;
    }
    match f.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let s = field.add(*e.get(), c);
            if s == 0 {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

fn find_subword(hay: &[u32], needle: &[u32]) -> Option<usize> {
    if needle.len() > hay.len() {
        return None;
    }
    (0..=hay.len() - needle.len()).find(|&i| &hay[i..i + needle.len()] == needle)
}

fn concat(a: &[u32], b: &[u32], c: &[u32]) -> Word {
    let mut v = Vec::with_capacity(a.len() + b.len() + c.len());
    v.extend_from_slice(a);
    v.extend_from_slice(b);
    v.extend_from_slice(c);
    Word(v)
}

/// Fully reduces `f`, always rewriting the largest reducible term at its leftmost occurrence.
pub(crate) fn reduce(field: PrimeField, f: &Poly, rules: &[Rule]) -> Poly {
    let mut work = f.clone();
    let mut out = Poly::new();
    while let Some((w, c)) = work.pop_last() {
        let hit = rules.iter().find_map(|r| find_subword(&w.0, &r.lead.0).map(|pos| (r, pos)));
        match hit {
            Some((rule, pos)) => {
                let (u, v) = (&w.0[..pos], &w.0[pos + rule.lead.0.len()..]);
                for (t, &tc) in &rule.tail {
                    add_term(&mut work, field, concat(u, &t.0, v), field.neg(field.mul(c, tc)));
                }
            }
            None => {
                out.insert(w, c);
            }
        }
    }
    out
}

fn monic(field: PrimeField, mut f: Poly) -> Rule {
    let (lead, lc) = f.pop_last().expect("nonzero polynomial");
    let inv = field.inv(lc);
    let tail = f.into_iter().map(|(w, c)| (w, field.mul(c, inv))).collect();
    Rule { lead, tail }
}

fn to_poly(rule: &Rule) -> Poly {
    let mut p = rule.tail.clone();
    p.insert(rule.lead.clone(), 1);
    p
}

/// All overlap S-polynomials between `a` and `b` (suffix of `a.lead` = prefix of `b.lead`).
fn overlaps(field: PrimeField, a: &Rule, b: &Rule) -> Vec<Poly> {
    let (la, lb) = (&a.lead.0, &b.lead.0);
    let mut out = Vec::new();
    for k in 1..la.len().min(lb.len()) {
        if la[la.len() - k..] != lb[..k] {
            continue;
        }
        let right = &lb[k..];
        let left = &la[..la.len() - k];
        let mut s = Poly::new();
        for (t, &c) in &a.tail {
            add_term(&mut s, field, concat(&[], &t.0, right), c);
        }
        for (t, &c) in &b.tail {
            add_term(&mut s, field, concat(left, &t.0, &[]), field.neg(c));
        }
        out.push(s);
    }
    out
}

/// Completes `relations` to a reduced confluent system. Fails if a leading word
/// longer than `cap` would be needed.
pub(crate) fn complete(field: PrimeField, relations: Vec<Poly>, cap: usize) -> Result<Vec<Rule>> {
    let mut rules: Vec<Rule> = Vec::new();
    let mut queue = relations;
    loop {
        while let Some(f) = queue.pop() {
            let r = reduce(field, &f, &rules);
            if r.is_empty() {
                continue;
            }
            let rule = monic(field, r);
            if rule.lead.0.len() > cap {
                return Err(Error::NotFiniteAtCap { cap });
            }
            assert!(rule.lead.0.len() >= 2, "ideal element with a leading term of length < 2");
            let (keep, drop): (Vec<Rule>, Vec<Rule>) =
                rules.into_iter().partition(|g| find_subword(&g.lead.0, &rule.lead.0).is_none());
            queue.extend(drop.iter().map(to_poly));
            rules = keep;
            rules.push(rule);
        }
        let mut pending = Vec::new();
        for a in &rules {
            for b in &rules {
                for s in overlaps(field, a, b) {
                    let s = reduce(field, &s, &rules);
                    if !s.is_empty() {
                        pending.push(s);
                    }
                }
            }
        }
        if pending.is_empty() {
            break;
        }
        queue = pending;
    }
    // Interreduce tails against the final system.
    let snapshot = rules.clone();
    for r in &mut rules {
        r.tail = reduce(field, &r.tail, &snapshot);
    }
    rules.sort_by(|a, b| a.lead.cmp(&b.lead));
    Ok(rules)
}

/// True if some leading word is a suffix of `w`.
pub(crate) fn has_lead_suffix(w: &[u32], rules: &[Rule]) -> bool {
    rules.iter().any(|r| r.lead.0.len() <= w.len() && w.ends_with(&r.lead.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn field() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn poly(terms: &[(u32, &[u32])]) -> Poly {
        let mut p = Poly::new();
        for (c, w) in terms {
            add_term(&mut p, field(), Word(w.to_vec()), *c);
        }
        p
    }

    /// Reduces by choosing a random reducible term and a random rule occurrence each step.
    fn reduce_randomly(f: &Poly, rules: &[Rule], rng: &mut ChaCha8Rng) -> Poly {
        let k = field();
        let mut work = f.clone();
        loop {
            let mut cands = Vec::new();
            for w in work.keys() {
                for (ri, r) in rules.iter().enumerate() {
                    let n = r.lead.0.len();
                    for pos in 0..(w.0.len() + 1).saturating_sub(n) {
                        if w.0[pos..pos + n] == r.lead.0[..] {
                            cands.push((w.clone(), ri, pos));
                        }
                    }
                }
            }
            if cands.is_empty() {
                return work;
            }
            let (w, ri, pos) = cands.swap_remove(rng.random_range(0..cands.len()));
            let c = work.remove(&w).unwrap();
            let r = &rules[ri];
            let (u, v) = (&w.0[..pos], &w.0[pos + r.lead.0.len()..]);
            for (t, &tc) in &r.tail {
                add_term(&mut work, k, concat(u, &t.0, v), k.neg(k.mul(c, tc)));
            }
        }
    }

    #[test]
    fn word_order_is_length_then_lex() {
        assert!(Word(vec![5]) < Word(vec![0, 0]));
        assert!(Word(vec![0, 1]) < Word(vec![1, 0]));
    }

    #[test]
    fn commutativity_with_zero_relation_completes() {
        // Single loop pair x,y at one vertex: x*y - y*x, x*x, y*y (exterior-like algebra).
        let rels = vec![
            poly(&[(1, &[1, 0]), (100, &[0, 1])]),
            poly(&[(1, &[0, 0])]),
            poly(&[(1, &[1, 1])]),
        ];
        let rules = complete(field(), rels, 10).unwrap();
        let leads: Vec<_> = rules.iter().map(|r| r.lead.0.clone()).collect();
        assert!(leads.contains(&vec![1, 0]));
        assert!(leads.contains(&vec![0, 0]));
        assert!(leads.contains(&vec![1, 1]));
        // x*y*x reduces to zero; x*y survives.
        assert!(reduce(field(), &poly(&[(1, &[0, 1, 0])]), &rules).is_empty());
        assert_eq!(reduce(field(), &poly(&[(1, &[0, 1])]), &rules).len(), 1);
    }

    #[test]
    fn confluence_under_random_reduction_orders() {
        let rels = vec![
            poly(&[(1, &[1, 0]), (100, &[0, 1])]),
            poly(&[(1, &[0, 0, 0])]),
            poly(&[(1, &[1, 1])]),
        ];
        let rules = complete(field(), rels, 12).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let len = rng.random_range(0..7);
            let w: Vec<u32> = (0..len).map(|_| rng.random_range(0..2)).collect();
            let f = poly(&[(rng.random_range(1..101), &w)]);
            let a = reduce(field(), &f, &rules);
            let b = reduce_randomly(&f, &rules, &mut rng);
            assert_eq!(a, b, "word {w:?}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        // x^5 = 0 needs a leading word of length 5.
        assert!(complete(field(), vec![poly(&[(1, &[0; 5])])], 4).is_err());
        assert!(complete(field(), vec![poly(&[(1, &[0; 5])])], 5).is_ok());
    }
}
