use super::resolution::{min_inj_coresolution_periodic, min_proj_resolution_periodic};
use super::CappedNat;
use crate::algebra::Algebra;
use crate::modrep::{hom_dim, injective, is_projective, regular, simple, ModuleRep};

pub(crate) enum FirstExt {
    At(usize),
    Never,
    Capped,
}

/// The least `i` in `from..=cap` with `Ext^i(m, n) != 0`.
pub(crate) fn first_nonzero_ext(m: &ModuleRep, n: &ModuleRep, from: usize, cap: usize) -> FirstExt {
    let mut res = min_proj_resolution_periodic(m, 0);
    let mut homs: Vec<Option<usize>> = Vec::new();
    let mut hom = |i: usize, om: &ModuleRep| -> usize {
        if homs.len() <= i {
            homs.resize(i + 1, None);
        }
        *homs[i].get_or_insert_with(|| hom_dim(om, n).expect("same algebra"))
    };
    for i in from..=cap {
        res.extend_to(i);
        let e = if i == 0 {
            hom(0, m)
        } else {
            if i > res.len() || res.syzygy(i - 1).is_zero() {
                return FirstExt::Never;
            }
            let hp: usize = res.gens(i - 1).iter().map(|&g| n.dim_at(g)).sum();
            hom(i, res.syzygy(i)) + hom(i - 1, res.syzygy(i - 1)) - hp
        };
        if e > 0 {
            return FirstExt::At(i);
        }
        if res.period().is_some_and(|(_, k)| i >= k) {
            return FirstExt::Never;
        }
    }
    FirstExt::Capped
}

/// `grade M = inf { i : Ext^i(M, A) != 0 }`, searched up to `cap`.
pub fn grade(m: &ModuleRep, cap: usize) -> CappedNat {
    if m.is_zero() {
        return CappedNat::Infinite;
    }
    match first_nonzero_ext(m, &regular(m.algebra()), 0, cap) {
        FirstExt::At(i) => CappedNat::Exact(i),
        FirstExt::Never => CappedNat::Infinite,
        FirstExt::Capped => CappedNat::AtLeast(cap + 1),
    }
}

/// For each vertex, whether the indecomposable injective `D(A e_v)` is projective.
pub fn projective_injective_vertices(alg: &Algebra) -> Vec<bool> {
    (0..alg.num_vertices()).map(|v| is_projective(&injective(alg, v))).collect()
}

/// Number of leading projective terms in the minimal injective coresolution of `m`.
pub fn domdim_module(m: &ModuleRep, cap: usize) -> CappedNat {
    let pi = projective_injective_vertices(m.algebra());
    domdim_with(m, cap, &pi)
}

pub(crate) fn domdim_with(m: &ModuleRep, cap: usize, pi: &[bool]) -> CappedNat {
    if m.is_zero() {
        return CappedNat::Infinite;
    }
    let mut co = min_inj_coresolution_periodic(m, 0);
    for i in 0..cap {
        co.extend_to(i + 1);
        if co.len() <= i {
            return CappedNat::Infinite;
        }
        if !co.gens(i).iter().all(|&g| pi[g]) {
            return CappedNat::Exact(i);
        }
    }
    CappedNat::AtLeast(cap)
}

/// Dominant dimension of the regular module; selfinjective-flagged algebras are infinite by certificate.
pub fn domdim_algebra(alg: &Algebra, cap: usize) -> CappedNat {
    if alg.flags().selfinjective {
        return CappedNat::Infinite;
    }
    domdim_module(&regular(alg), cap)
}

pub fn pdim(m: &ModuleRep, cap: usize) -> CappedNat {
    let res = min_proj_resolution_periodic(m, cap + 1);
    match (res.length(), res.period()) {
        (Some(d), _) => CappedNat::Exact(d),
        (None, Some(_)) => CappedNat::Infinite,
        _ => CappedNat::AtLeast(cap + 1),
    }
}

pub fn injdim(m: &ModuleRep, cap: usize) -> CappedNat {
    pdim(&m.dual(), cap)
}

/// Maximum projective dimension of the simple modules.
pub fn gldim(alg: &Algebra, cap: usize) -> CappedNat {
    (0..alg.num_vertices()).map(|v| pdim(&simple(alg, v), cap)).fold(CappedNat::Exact(0), CappedNat::max)
}

/// Common injective dimension of `A_A` and `_A A`. `Infinite` certifies that
/// one side has infinite injective dimension.
pub fn gorenstein_dim(alg: &Algebra, cap: usize) -> CappedNat {
    if alg.flags().selfinjective {
        return CappedNat::Exact(0);
    }
    let right = injdim(&regular(alg), cap);
    let left = injdim(&regular(&alg.opposite()), cap);
    match (right, left) {
        (CappedNat::Exact(a), CappedNat::Exact(b)) if a == b => CappedNat::Exact(a),
        (CappedNat::Infinite, _) | (_, CappedNat::Infinite) => CappedNat::Infinite,
        (a, b) => match a.max(b) {
            CappedNat::Exact(k) => CappedNat::AtLeast(k),
            other => other,
        },
    }
}

/// `inf { i >= 1 : Ext^i(D A, A) != 0 } + 1`, the dominant dimension of
/// `End_A(A ⊕ D A)` by Mueller's formula.
pub fn domdim_r_via_mueller(alg: &Algebra, cap: usize) -> CappedNat {
    if alg.flags().selfinjective {
        return CappedNat::Infinite;
    }
    let da = regular(&alg.opposite()).dual();
    match first_nonzero_ext(&da, &regular(alg), 1, cap) {
        FirstExt::At(i) => CappedNat::Exact(i + 1),
        FirstExt::Never => CappedNat::Infinite,
        FirstExt::Capped => CappedNat::AtLeast(cap + 2),
    }
}
