use super::resolution::{min_proj_resolution, ProjectiveResolution};
use crate::linalg::Matrix;
use crate::modrep::{factorize, free_map, hom_basis, hom_dim, projective, HomBasis, ModuleMorphism, ModuleRep};

/// `M* = Hom_A(M, A)` as a right module over the opposite algebra, with the
/// chosen bases of its vertex spaces `Hom_A(M, e_v A)`.
#[derive(Clone, Debug)]
pub struct HomDual {
    pub module: ModuleRep,
    bases: Vec<HomBasis>,
}

impl HomDual {
    /// The basis of `Hom_A(M, e_v A)` underlying the vertex-`v` space of `M*`.
    pub fn basis(&self, v: usize) -> &HomBasis {
        &self.bases[v]
    }

    /// The dual map `g*: N* -> M*`, `φ ↦ φ ∘ g`, where `self = M*` and `other = N*`.
    pub fn pullback(&self, g: &ModuleMorphism, other: &HomDual) -> ModuleMorphism {
        let comps = (0..self.bases.len())
            .map(|v| {
                let composed: Vec<ModuleMorphism> = other.bases[v].iter().map(|phi| g.then(&phi)).collect();
                self.bases[v].coordinates_many(&composed).expect("composite lies in the hom space")
            })
            .collect();
        ModuleMorphism::new(&other.module, &self.module, comps).expect("dual of a module map")
    }
}

/// Left multiplication by arrow `a: v -> w`, as a map `e_w A -> e_v A`.
fn left_mult(m: &ModuleRep, a: usize, pv: &ModuleRep) -> ModuleMorphism {
    let alg = m.algebra();
    let arr = alg.arrow(a);
    let mut x = vec![0; pv.dim_at(arr.target)];
    x[alg.position(alg.arrow_element(a))] = 1;
    free_map(pv, &[arr.target], &[x])
}

pub fn hom_dual(m: &ModuleRep) -> HomDual {
    let alg = m.algebra();
    let f = m.field();
    let proj: Vec<ModuleRep> = (0..alg.num_vertices()).map(|v| projective(alg, v)).collect();
    let bases: Vec<HomBasis> = proj.iter().map(|p| hom_basis(m, p).expect("same algebra")).collect();
    let dims: Vec<usize> = bases.iter().map(HomBasis::len).collect();
    let maps = (0..alg.num_arrows())
        .map(|a| {
            let arr = alg.arrow(a);
            let lam = left_mult(m, a, &proj[arr.source]);
            let images: Vec<ModuleMorphism> = bases[arr.target].iter().map(|phi| phi.then(&lam)).collect();
            if images.is_empty() {
                return Matrix::zeros(f, 0, dims[arr.source]);
            }
            bases[arr.source].coordinates_many(&images).expect("left multiplication preserves Hom")
        })
        .collect();
    let module = ModuleRep::new(&alg.opposite(), dims, maps).expect("dual module satisfies opposite relations");
    HomDual { module, bases }
}

/// `dim Ext^i(M, N)` for `i = 0..=max_i`.
pub fn ext_dims(m: &ModuleRep, n: &ModuleRep, max_i: usize) -> Vec<usize> {
    let mut res = min_proj_resolution(m, max_i);
    ext_dims_with(&mut res, n, max_i)
}

/// Like [`ext_dims`], reusing (and extending) a computed resolution.
pub(crate) fn ext_dims_with(res: &mut ProjectiveResolution, n: &ModuleRep, max_i: usize) -> Vec<usize> {
    res.extend_to(max_i);
    let avail = res.len();
    let mut homs: Vec<Option<usize>> = vec![None; max_i + 1];
    let mut hom = |i: usize, res: &ProjectiveResolution| -> usize {
        *homs[i].get_or_insert_with(|| hom_dim(res.syzygy(i), n).expect("same algebra"))
    };
    let mut out = vec![hom(0, res)];
    for i in 1..=max_i {
        if i > avail || res.syzygy(i - 1).is_zero() {
            out.push(0);
            continue;
        }
        let hp: usize = res.gens(i - 1).iter().map(|&g| n.dim_at(g)).sum();
        out.push(hom(i, res) + hom(i - 1, res) - hp);
    }
    out
}

/// `dim Ext^i(M, N)`, computed from the minimal projective resolution of `M`.
pub fn ext_dim(m: &ModuleRep, n: &ModuleRep, i: usize) -> usize {
    ext_dims(m, n, i)[i]
}

/// `Ext^i(M, A)` as a module over the opposite algebra: the cokernel of
/// `P_{i-1}* -> (Ω^i M)*` induced by the inclusion `Ω^i M -> P_{i-1}`.
pub fn ext_module(m: &ModuleRep, i: usize) -> ModuleRep {
    if i == 0 {
        return hom_dual(m).module;
    }
    let res = min_proj_resolution(m, i);
    ext_module_with(&res, i)
}

pub(crate) fn ext_module_with(res: &ProjectiveResolution, i: usize) -> ModuleRep {
    let alg = res.module().algebra();
    if res.len() < i || res.syzygy(i).is_zero() {
        return ModuleRep::zero(&alg.opposite());
    }
    let omega = hom_dual(res.syzygy(i));
    let p = hom_dual(res.term(i - 1));
    factorize(&omega.pullback(res.inclusion(i), &p)).cokernel
}

/// The transpose `Tr M = coker(P_0* -> P_1*)` for a minimal presentation
/// `P_1 -> P_0 -> M`, as a module over the opposite algebra.
pub fn transpose(m: &ModuleRep) -> ModuleRep {
    let alg = m.algebra();
    let res = min_proj_resolution(m, 2);
    if res.len() < 2 {
        return ModuleRep::zero(&alg.opposite());
    }
    let d1 = res.differential(1);
    let p0 = hom_dual(res.term(0));
    let p1 = hom_dual(res.term(1));
    factorize(&p1.pullback(&d1, &p0)).cokernel
}

/// The Auslander–Reiten translate `τ M = D Tr M`.
pub fn tau(m: &ModuleRep) -> ModuleRep {
    transpose(m).dual()
}

/// The inverse translate `τ⁻¹ M = Tr D M`.
pub fn tau_inverse(m: &ModuleRep) -> ModuleRep {
    transpose(&m.dual())
}
