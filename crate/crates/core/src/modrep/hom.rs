use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{structure, ModuleMorphism, ModuleRep};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A basis of `Hom_A(source, target)`, stored as flattened morphisms.
#[derive(Clone, Debug)]
pub struct HomBasis {
    source: ModuleRep,
    target: ModuleRep,
    flat: Matrix,
}

impl HomBasis {
    pub fn source(&self) -> &ModuleRep {
        &self.source
    }

    pub fn target(&self) -> &ModuleRep {
        &self.target
    }

    pub fn len(&self) -> usize {
        self.flat.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.flat.rows() == 0
    }

    /// Rows are the flattened basis morphisms (see [`ModuleMorphism::flatten`]).
    pub fn matrix(&self) -> &Matrix {
        &self.flat
    }

    pub fn get(&self, i: usize) -> ModuleMorphism {
        self.unflatten(self.flat.row(i))
    }

    pub fn iter(&self) -> impl Iterator<Item = ModuleMorphism> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }

    pub fn combination(&self, coeffs: &[u32]) -> ModuleMorphism {
        let row = Matrix::from_vec(self.flat.field(), 1, coeffs.len(), coeffs.to_vec()).mul(&self.flat);
        self.unflatten(row.row(0))
    }

    /// Coordinates of `f` in this basis.
    pub fn coordinates(&self, f: &ModuleMorphism) -> Option<Vec<u32>> {
        let flat = f.flatten();
        let x = Matrix::from_vec(self.flat.field(), 1, flat.len(), flat);
        self.flat.solve_left(&x).map(|z| z.row(0).to_vec())
    }

    /// Coordinates of several morphisms at once, one row per morphism.
    pub fn coordinates_many(&self, fs: &[ModuleMorphism]) -> Option<Matrix> {
        let field = self.flat.field();
        let rows: Vec<Vec<u32>> = fs.iter().map(ModuleMorphism::flatten).collect();
        let x = Matrix::from_rows(field, self.flat.cols(), &rows);
        self.flat.solve_left(&x)
    }

    fn unflatten(&self, flat: &[u32]) -> ModuleMorphism {
        let f = self.source.field();
        let mut comps = Vec::with_capacity(self.source.dims.len());
        let mut off = 0;
        for v in 0..self.source.dims.len() {
            let (r, c) = (self.source.dims[v], self.target.dims[v]);
            comps.push(Matrix::from_vec(f, r, c, flat[off..off + r * c].to_vec()));
            off += r * c;
        }
        ModuleMorphism::from_parts(&self.source, &self.target, comps)
    }
}

fn hom_system(m: &ModuleRep, n: &ModuleRep) -> (Matrix, usize) {
    let alg = m.algebra();
    let f = m.field();
    let nv = m.dims.len();
    let mut off = vec![0; nv + 1];
    for v in 0..nv {
        off[v + 1] = off[v] + m.dims[v] * n.dims[v];
    }
    let vars = off[nv];
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for a in 0..alg.num_arrows() {
        let arr = alg.arrow(a);
        let (v, w) = (arr.source, arr.target);
        let (ma, na) = (&m.maps[a], &n.maps[a]);
        // Equation (r, c) of M_a · f_w − f_v · N_a = 0.
        for r in 0..m.dims[v] {
            for c in 0..n.dims[w] {
                let mut eq = vec![0u32; vars];
                for k in 0..m.dims[w] {
                    let x = ma.get(r, k);
                    if x != 0 {
                        let idx = off[w] + k * n.dims[w] + c;
                        eq[idx] = f.add(eq[idx], x);
                    }
                }
                for k in 0..n.dims[v] {
                    let x = na.get(k, c);
                    if x != 0 {
                        let idx = off[v] + r * n.dims[v] + k;
                        eq[idx] = f.sub(eq[idx], x);
                    }
                }
                if eq.iter().any(|&x| x != 0) {
                    rows.push(eq);
                }
            }
        }
    }
    (Matrix::from_rows(f, vars, &rows), vars)
}

/// Basis of `Hom_A(m, n)`: the kernel of the assembled commuting-square system.
pub fn hom_basis(m: &ModuleRep, n: &ModuleRep) -> Result<HomBasis> {
    if m.alg != n.alg {
        return Err(Error::AlgebraMismatch);
    }
    let (sys, _) = hom_system(m, n);
    Ok(HomBasis { source: m.clone(), target: n.clone(), flat: sys.kernel_basis() })
}

pub fn hom_dim(m: &ModuleRep, n: &ModuleRep) -> Result<usize> {
    if m.alg != n.alg {
        return Err(Error::AlgebraMismatch);
    }
    let (sys, vars) = hom_system(m, n);
    Ok(vars - sys.rank())
}

/// Kernel, image and cokernel of a morphism with their structure maps.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub kernel: ModuleRep,
    /// `kernel -> source`.
    pub kernel_inclusion: ModuleMorphism,
    pub image: ModuleRep,
    /// `source -> image`.
    pub image_projection: ModuleMorphism,
    /// `image -> target`.
    pub image_inclusion: ModuleMorphism,
    pub cokernel: ModuleRep,
    /// `target -> cokernel`.
    pub cokernel_projection: ModuleMorphism,
}

pub fn factorize(f: &ModuleMorphism) -> Factorization {
    let src = f.source();
    let tgt = f.target();
    let ker_rows: Vec<Matrix> = f.components().iter().map(Matrix::left_kernel_basis).collect();
    let (kernel, kernel_inclusion) = structure::submodule(src, &ker_rows);
    let im_rows: Vec<Matrix> = f.components().iter().map(Matrix::row_space_basis).collect();
    let (image, image_inclusion) = structure::submodule(tgt, &im_rows);
    let proj = f
        .components()
        .iter()
        .zip(&im_rows)
        .map(|(fv, b)| b.solve_left(fv).expect("image contains f"))
        .collect();
    let image_projection = ModuleMorphism::from_parts(src, &image, proj);
    let (cokernel, cokernel_projection) = structure::quotient(tgt, &im_rows);
    Factorization { kernel, kernel_inclusion, image, image_projection, image_inclusion, cokernel, cokernel_projection }
}

/// The map `coker -> T` induced by `h: target -> T` when `h` kills the image;
/// `projection` is a cokernel projection from [`factorize`].
pub fn descend(projection: &ModuleMorphism, h: &ModuleMorphism) -> ModuleMorphism {
    let f = h.source().field();
    let comps = projection
        .components()
        .iter()
        .zip(h.components())
        .map(|(q, hv)| {
            let section = q
                .transpose()
                .solve(&Matrix::identity(f, q.cols()))
                .expect("cokernel projection is surjective")
                .particular
                .transpose();
            section.mul(hv)
        })
        .collect();
    ModuleMorphism::from_parts(projection.target(), h.target(), comps)
}

/// Outcome of an isomorphism test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Iso {
    Yes,
    No,
    /// No invertible morphism was found but none was ruled out.
    Undetermined,
}

impl Iso {
    pub fn is_yes(self) -> bool {
        self == Iso::Yes
    }
}

const ISO_TRIALS: usize = 64;
const EXHAUSTIVE_LIMIT: u64 = 1 << 20;

pub fn is_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Iso {
    is_isomorphic_with(m, n, ISO_TRIALS, 0)
}

/// Seeded random search for an invertible element of `Hom(m, n)`, with an
/// exhaustive pass when the hom space has at most `2^20` elements.
pub fn is_isomorphic_with(m: &ModuleRep, n: &ModuleRep, trials: usize, seed: u64) -> Iso {
    if m.alg != n.alg || m.dims != n.dims {
        return Iso::No;
    }
    if m.is_zero() {
        return Iso::Yes;
    }
    let hb = hom_basis(m, n).expect("same algebra");
    let k = hb.len();
    let end_m = hom_dim(m, m).expect("same algebra");
    if k != end_m || hom_dim(n, n).expect("same algebra") != k || hom_dim(n, m).expect("same algebra") != k {
        return Iso::No;
    }
    let p = m.field().p();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let coeffs: Vec<u32> = (0..k).map(|_| rng.random_range(0..p)).collect();
        if hb.combination(&coeffs).is_isomorphism() {
            return Iso::Yes;
        }
    }
    let total = (p as u64).checked_pow(k as u32);
    match total {
        Some(t) if t <= EXHAUSTIVE_LIMIT => {
            let mut coeffs = vec![0u32; k];
            loop {
                if hb.combination(&coeffs).is_isomorphism() {
                    return Iso::Yes;
                }
                let mut i = 0;
                while i < k {
                    coeffs[i] += 1;
                    if coeffs[i] < p {
                        break;
                    }
                    coeffs[i] = 0;
                    i += 1;
                }
                if i == k {
                    return Iso::No;
                }
            }
        }
        _ => Iso::Undetermined,
    }
}
