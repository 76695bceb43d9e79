use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{factorize, free_map, free_module, inj_hull, injective, proj_cover, projective, radical, simple, top, ModuleRep};
use crate::algebra::Algebra;

const DEPTH: usize = 3;

/// The cokernel of a random map from a free module on one or two generators
/// to one on up to three.
pub fn random_presented_module(alg: &Algebra, rng: &mut impl Rng) -> ModuleRep {
    let n = alg.num_vertices();
    let p = alg.field().p();
    let g0: Vec<usize> = (0..rng.random_range(1..=3)).map(|_| rng.random_range(0..n)).collect();
    let g1: Vec<usize> = (0..rng.random_range(1..=2)).map(|_| rng.random_range(0..n)).collect();
    let p0 = free_module(alg, &g0);
    let elems: Vec<Vec<u32>> = g1
        .iter()
        .map(|&g| {
            (0..p0.dim_at(g))
                .map(|_| if rng.random_bool(0.5) { 0 } else { rng.random_range(1..p) })
                .collect()
        })
        .collect();
    factorize(&free_map(&p0, &g1, &elems)).cokernel
}

/// A deterministic sample of modules: every simple, projective and injective,
/// radicals and tops of projectives, syzygies and cosyzygies of simples up to
/// depth 3, then random finitely presented modules until `size` is reached.
/// Zero modules and exact duplicates are dropped.
pub fn sample_modules(alg: &Algebra, seed: u64, size: usize) -> Vec<ModuleRep> {
    let mut out: Vec<ModuleRep> = Vec::new();
    let push = |m: ModuleRep, out: &mut Vec<ModuleRep>| {
        if !m.is_zero() && !out.contains(&m) {
            out.push(m);
        }
    };
    let n = alg.num_vertices();
    for v in 0..n {
        push(simple(alg, v), &mut out);
    }
    for v in 0..n {
        push(projective(alg, v), &mut out);
    }
    for v in 0..n {
        push(injective(alg, v), &mut out);
    }
    for v in 0..n {
        let p = projective(alg, v);
        push(radical(&p).0, &mut out);
        push(top(&p).0, &mut out);
    }
    for v in 0..n {
        let mut m = simple(alg, v);
        for _ in 0..DEPTH {
            m = factorize(&proj_cover(&m).map).kernel;
            if m.is_zero() {
                break;
            }
            push(m.clone(), &mut out);
        }
        let mut m = simple(alg, v);
        for _ in 0..DEPTH {
            m = factorize(&inj_hull(&m).map).cokernel;
            if m.is_zero() {
                break;
            }
            push(m.clone(), &mut out);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    while out.len() < size && attempts < 20 * size {
        attempts += 1;
        push(random_presented_module(alg, &mut rng), &mut out);
    }
    out
}
