use super::ext::{ext_dims, hom_dual, tau, transpose};
use crate::linalg::Matrix;
use crate::modrep::{factorize, regular, ModuleMorphism, ModuleRep};

/// The evaluation map `f_M: M -> M**` and the torsion submodule `t(M) = ker f_M`.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub map: ModuleMorphism,
    pub double_dual: ModuleRep,
    pub torsion: ModuleRep,
    pub torsion_inclusion: ModuleMorphism,
    pub torsionless: bool,
    pub reflexive: bool,
}

pub fn evaluation_and_torsion(m: &ModuleRep) -> Evaluation {
    let f = m.field();
    let md = hom_dual(m);
    let mdd = hom_dual(&md.module);
    let nv = m.dims().len();
    let comps = (0..nv)
        .map(|v| {
            let target = mdd.basis(v).target();
            // ev_x for each basis vector x of M_v: (M*)_u -> (P°_v)_u, φ ↦ x·φ_v.
            let evs: Vec<ModuleMorphism> = (0..m.dim_at(v))
                .map(|r| {
                    let comps = (0..nv)
                        .map(|u| {
                            let rows: Vec<Vec<u32>> =
                                md.basis(u).iter().map(|phi| phi.component(v).row(r).to_vec()).collect();
                            Matrix::from_rows(f, target.dim_at(u), &rows)
                        })
                        .collect();
                    ModuleMorphism::new(&md.module, target, comps).expect("evaluation is a module map")
                })
                .collect();
            mdd.basis(v).coordinates_many(&evs).expect("evaluation lies in the hom space")
        })
        .collect();
    let map = ModuleMorphism::new(m, &mdd.module, comps).expect("evaluation map commutes");
    let fz = factorize(&map);
    let torsionless = fz.kernel.is_zero();
    let reflexive = torsionless && fz.cokernel.is_zero();
    Evaluation {
        map,
        double_dual: mdd.module,
        torsion: fz.kernel,
        torsion_inclusion: fz.kernel_inclusion,
        torsionless,
        reflexive,
    }
}

/// `Ext^i_{A^op}(Tr M, A) = 0` for `1 <= i <= n`.
pub fn is_n_torsion_free(m: &ModuleRep, n: usize) -> bool {
    let tr = transpose(m);
    if tr.is_zero() {
        return true;
    }
    let a_op = regular(tr.algebra());
    ext_dims(&tr, &a_op, n)[1..].iter().all(|&d| d == 0)
}

/// The defining condition `Ext^i_A(D A, τ M) = 0` for `1 <= i <= n`.
pub fn is_n_torsion_free_direct(m: &ModuleRep, n: usize) -> bool {
    let t = tau(m);
    if t.is_zero() {
        return true;
    }
    let da = regular(&m.algebra().opposite()).dual();
    ext_dims(&da, &t, n)[1..].iter().all(|&d| d == 0)
}
