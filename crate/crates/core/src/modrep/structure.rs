use super::{direct_sum, ModuleMorphism, ModuleRep};
use crate::algebra::Algebra;
use crate::linalg::Matrix;

/// The submodule spanned vertexwise by the rows of `bases` (which must be
/// independent and closed under the arrow actions), with its inclusion.
pub fn submodule(m: &ModuleRep, bases: &[Matrix]) -> (ModuleRep, ModuleMorphism) {
    let alg = m.algebra();
    let dims: Vec<usize> = bases.iter().map(Matrix::rows).collect();
    let maps = (0..alg.num_arrows())
        .map(|a| {
            let arr = alg.arrow(a);
            let img = bases[arr.source].mul(&m.maps[a]);
            bases[arr.target].solve_left(&img).expect("subspace is closed under arrows")
        })
        .collect();
    let sub = ModuleRep::from_parts(alg, dims, maps);
    let incl = ModuleMorphism::from_parts(&sub, m, bases.to_vec());
    (sub, incl)
}

/// The quotient by the submodule spanned by `bases`, with its projection.
pub fn quotient(m: &ModuleRep, bases: &[Matrix]) -> (ModuleRep, ModuleMorphism) {
    let alg = m.algebra();
    let f = m.field();
    let mut comps = Vec::with_capacity(bases.len());
    let mut complements = Vec::with_capacity(bases.len());
    for (v, s) in bases.iter().enumerate() {
        let d = m.dims[v];
        let c = if s.rows() == 0 { Matrix::identity(f, d) } else { s.row_space_complement() };
        let b = Matrix::vstack(f, d, &[s, &c]);
        let binv = b.inverse().expect("basis with complement is invertible");
        comps.push(binv.select_cols(&(s.rows()..d).collect::<Vec<_>>()));
        complements.push(c);
    }
    let dims = complements.iter().map(Matrix::rows).collect();
    let maps = (0..alg.num_arrows())
        .map(|a| {
            let arr = alg.arrow(a);
            complements[arr.source].mul(&m.maps[a]).mul(&comps[arr.target])
        })
        .collect();
    let q = ModuleRep::from_parts(alg, dims, maps);
    let proj = ModuleMorphism::from_parts(m, &q, comps);
    (q, proj)
}

pub fn simple(alg: &Algebra, v: usize) -> ModuleRep {
    let f = alg.field();
    let mut dims = vec![0; alg.num_vertices()];
    dims[v] = 1;
    let maps = (0..alg.num_arrows())
        .map(|a| {
            let arr = alg.arrow(a);
            Matrix::zeros(f, dims[arr.source], dims[arr.target])
        })
        .collect();
    ModuleRep::from_parts(alg, dims, maps)
}

/// `e_v A`: the vertex-`w` space has the paths from `v` to `w` as basis, and
/// arrows act by right multiplication.
pub fn projective(alg: &Algebra, v: usize) -> ModuleRep {
    let f = alg.field();
    let dims: Vec<usize> = (0..alg.num_vertices()).map(|w| alg.paths_between(v, w).len()).collect();
    let maps = (0..alg.num_arrows())
        .map(|b| {
            let arr = alg.arrow(b);
            let mut m = Matrix::zeros(f, dims[arr.source], dims[arr.target]);
            for (r, &p) in alg.paths_between(v, arr.source).iter().enumerate() {
                for &(k, c) in alg.mult_basis(p, alg.arrow_element(b)) {
                    m.set(r, alg.position(k), c);
                }
            }
            m
        })
        .collect();
    ModuleRep::from_parts(alg, dims, maps)
}

/// `D(A e_v)`, the dual of the opposite algebra's projective at `v`.
pub fn injective(alg: &Algebra, v: usize) -> ModuleRep {
    projective(&alg.opposite(), v).dual()
}

pub fn free_module(alg: &Algebra, gens: &[usize]) -> ModuleRep {
    let parts: Vec<ModuleRep> = gens.iter().map(|&g| projective(alg, g)).collect();
    direct_sum(alg, &parts.iter().collect::<Vec<_>>()).expect("same algebra")
}

/// The regular module `A_A = ⊕_v e_v A`.
pub fn regular(alg: &Algebra) -> ModuleRep {
    free_module(alg, &(0..alg.num_vertices()).collect::<Vec<_>>())
}

/// The map `⊕_j e_{g_j} A -> M` sending the generator `e_{g_j}` to `elems[j] ∈ M_{g_j}`.
pub fn free_map(m: &ModuleRep, gens: &[usize], elems: &[Vec<u32>]) -> ModuleMorphism {
    let alg = m.algebra();
    let f = m.field();
    let free = free_module(alg, gens);
    let actions: Vec<Matrix> = (0..alg.dim()).map(|i| m.basis_action(i)).collect();
    let comps = (0..alg.num_vertices())
        .map(|w| {
            let mut rows = Vec::new();
            for (j, &g) in gens.iter().enumerate() {
                let x = Matrix::from_vec(f, 1, m.dims[g], elems[j].clone());
                for &p in alg.paths_between(g, w) {
                    rows.push(x.mul(&actions[p]).row(0).to_vec());
                }
            }
            Matrix::from_rows(f, m.dims[w], &rows)
        })
        .collect();
    ModuleMorphism::from_parts(&free, m, comps)
}

fn radical_rows(m: &ModuleRep) -> Vec<Matrix> {
    let alg = m.algebra();
    let f = m.field();
    (0..alg.num_vertices())
        .map(|v| {
            let blocks: Vec<&Matrix> = (0..alg.num_arrows()).filter(|&a| alg.arrow(a).target == v).map(|a| &m.maps[a]).collect();
            Matrix::vstack(f, m.dims[v], &blocks).row_space_basis()
        })
        .collect()
}

pub fn radical(m: &ModuleRep) -> (ModuleRep, ModuleMorphism) {
    submodule(m, &radical_rows(m))
}

/// The largest submodule annihilated by all arrows.
pub fn socle(m: &ModuleRep) -> (ModuleRep, ModuleMorphism) {
    let alg = m.algebra();
    let f = m.field();
    let rows: Vec<Matrix> = (0..alg.num_vertices())
        .map(|v| {
            let blocks: Vec<&Matrix> = (0..alg.num_arrows()).filter(|&a| alg.arrow(a).source == v).map(|a| &m.maps[a]).collect();
            Matrix::hstack(f, m.dims[v], &blocks).left_kernel_basis()
        })
        .collect();
    submodule(m, &rows)
}

pub fn top(m: &ModuleRep) -> (ModuleRep, ModuleMorphism) {
    quotient(m, &radical_rows(m))
}

#[derive(Clone, Debug)]
pub struct Rst {
    pub radical: ModuleRep,
    pub radical_inclusion: ModuleMorphism,
    pub socle: ModuleRep,
    pub socle_inclusion: ModuleMorphism,
    pub top: ModuleRep,
    pub top_projection: ModuleMorphism,
}

pub fn rst(m: &ModuleRep) -> Rst {
    let (radical, radical_inclusion) = radical(m);
    let (socle, socle_inclusion) = socle(m);
    let (top, top_projection) = top(m);
    Rst { radical, radical_inclusion, socle, socle_inclusion, top, top_projection }
}

/// A projective cover `P -> M`; `gens[j]` is the vertex of the `j`-th summand of `P`.
#[derive(Clone, Debug)]
pub struct Cover {
    pub module: ModuleRep,
    pub map: ModuleMorphism,
    pub gens: Vec<usize>,
}

/// An injective hull `M -> I`; `gens[j]` is the vertex of the `j`-th summand `D(A e_v)`.
#[derive(Clone, Debug)]
pub struct Hull {
    pub module: ModuleRep,
    pub map: ModuleMorphism,
    pub gens: Vec<usize>,
}

pub fn proj_cover(m: &ModuleRep) -> Cover {
    let rad = radical_rows(m);
    let f = m.field();
    let mut gens = Vec::new();
    let mut elems = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        let c = if r.rows() == 0 { Matrix::identity(f, m.dims[v]) } else { r.row_space_complement() };
        for i in 0..c.rows() {
            gens.push(v);
            elems.push(c.row(i).to_vec());
        }
    }
    let map = free_map(m, &gens, &elems);
    Cover { module: map.source().clone(), map, gens }
}

/// Injective hull, computed as the dual of the projective cover of `D M`.
pub fn inj_hull(m: &ModuleRep) -> Hull {
    let c = proj_cover(&m.dual());
    let module = c.module.dual();
    let map = c.map.dual().retarget(m, &module);
    Hull { module, map, gens: c.gens }
}

pub fn is_projective(m: &ModuleRep) -> bool {
    proj_cover(m).module.dim() == m.dim()
}

pub fn is_injective(m: &ModuleRep) -> bool {
    inj_hull(m).module.dim() == m.dim()
}
