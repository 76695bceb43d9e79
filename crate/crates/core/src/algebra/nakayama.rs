//! Connected Nakayama algebras from Kupisch series.

use super::{complete_to_basis, DEFAULT_MAX_PATH_LENGTH, Algebra, Arrow, Flags, PathWord, Presentation, Quiver, RelationPoly};
use crate::error::{Error, Result};
use crate::linalg::PrimeField;

/// Checks the admissibility conditions on a Kupisch series `c`, where `c[i]`
/// is the length of the projective at vertex `i + 1`.
pub fn is_admissible_kupisch(c: &[usize], cyclic: bool) -> bool {
    let m = c.len();
    if m == 0 || c.contains(&0) {
        return false;
    }
    if cyclic {
        c.iter().all(|&x| x >= 2) && (0..m).all(|i| c[(i + 1) % m] + 1 >= c[i])
    } else {
        c[m - 1] == 1 && c[..m - 1].iter().all(|&x| x >= 2) && (0..m - 1).all(|i| c[i + 1] + 1 >= c[i])
    }
}

/// Builds the Nakayama algebra with Kupisch series `c` on vertices `1..=m`
/// with arrows `a1..am` (`ai: i -> i+1`, and `am: m -> 1` when cyclic). The
/// relations kill the path of length `c_i` leaving vertex `i`.
pub fn nakayama_from_kupisch(c: &[usize], cyclic: bool, field: PrimeField) -> Result<Algebra> {
    if !is_admissible_kupisch(c, cyclic) {
        return Err(Error::InadmissibleKupisch(c.to_vec()));
    }
    let m = c.len();
    let n_arrows = if cyclic { m } else { m - 1 };
    let arrows = (0..n_arrows)
        .map(|i| Arrow { name: format!("a{}", i + 1), source: i, target: (i + 1) % m })
        .collect();
    let quiver = Quiver { vertices: (1..=m).map(|i| i.to_string()).collect(), arrows };
    let relations = (0..m)
        .filter(|&i| cyclic || i + c[i] < m)
        .map(|i| {
            let arrows: Vec<usize> = (0..c[i]).map(|k| (i + k) % m).collect();
            let path = PathWord { source: i, target: (i + c[i]) % m, arrows };
            RelationPoly { terms: vec![(1, path)] }
        })
        .collect();
    let flags = Flags { selfinjective: cyclic && c.iter().all(|&x| x == c[0]), ..Flags::default() };
    let pres = Presentation { quiver, relations, field, flags };
    complete_to_basis(&pres, DEFAULT_MAX_PATH_LENGTH.max(c.iter().copied().max().unwrap_or(1) + 1))
}

/// All admissible cyclic Kupisch series with `m` entries bounded by `max_len`,
/// one representative per rotation class (the lexicographically least rotation).
pub fn cyclic_kupisch_series(m: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m == 0 || max_len < 2 {
        return out;
    }
    let mut c = vec![2; m];
    loop {
        let canonical = (1..m).all(|r| {
            let rot: Vec<usize> = (0..m).map(|i| c[(i + r) % m]).collect();
            c <= rot
        });
        if canonical && is_admissible_kupisch(&c, true) {
            out.push(c.clone());
        }
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if c[i] < max_len {
                c[i] += 1;
                c[i + 1..].iter_mut().for_each(|x| *x = 2);
                break;
            }
        }
    }
}

/// All admissible linear Kupisch series with `m` entries bounded by `max_len`.
pub fn linear_kupisch_series(m: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if m == 0 {
        return out;
    }
    let mut c = vec![1; m];
    fn rec(i: usize, c: &mut Vec<usize>, max_len: usize, out: &mut Vec<Vec<usize>>) {
        if i == 0 {
            out.push(c.clone());
            return;
        }
        let j = i - 1;
        for x in 2..=(c[i] + 1).min(max_len) {
            c[j] = x;
            rec(j, c, max_len, out);
        }
    }
    rec(m - 1, &mut c, max_len, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn uniform_cyclic_series_is_selfinjective() {
        let a = nakayama_from_kupisch(&[2, 2], true, k()).unwrap();
        assert_eq!(a.dim(), 4);
        assert!(a.flags().selfinjective);
        assert!(a.opposite().flags().selfinjective);
    }

    #[test]
    fn linear_two_one_is_a2() {
        let a = nakayama_from_kupisch(&[2, 1], false, k()).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.num_arrows(), 1);
        assert!(!a.flags().selfinjective);
    }

    #[test]
    fn dimensions_are_series_sums() {
        for (c, cyc) in [(vec![3, 2], true), (vec![4, 3, 2], true), (vec![3, 3], true), (vec![3, 2, 1], false), (vec![2, 2, 1], false)] {
            let a = nakayama_from_kupisch(&c, cyc, k()).unwrap();
            assert_eq!(a.dim(), c.iter().sum::<usize>(), "{c:?}");
            assert_eq!(a.flags().selfinjective, cyc && c.iter().all(|&x| x == c[0]));
        }
    }

    #[test]
    fn inadmissible_series_rejected() {
        for (c, cyc) in [(vec![4, 2], true), (vec![1, 2], true), (vec![2, 2], false), (vec![3, 1], false), (vec![], true)] {
            assert!(matches!(nakayama_from_kupisch(&c, cyc, k()), Err(Error::InadmissibleKupisch(_))), "{c:?}");
        }
    }

    #[test]
    fn enumeration_counts() {
        // m = 1: constant series 2..=6.
        assert_eq!(cyclic_kupisch_series(1, 6).len(), 5);
        let two = cyclic_kupisch_series(2, 4);
        // Rotation classes of pairs with |difference| <= 1 in 2..=4: [2,2],[2,3],[3,3],[3,4],[4,4].
        assert_eq!(two, vec![vec![2, 2], vec![2, 3], vec![3, 3], vec![3, 4], vec![4, 4]]);
        assert_eq!(linear_kupisch_series(3, 5), vec![vec![2, 2, 1], vec![3, 2, 1]]);
    }
}
