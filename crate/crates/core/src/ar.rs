//! Almost split sequences `0 -> U -> X -> τ⁻¹U -> 0` starting at indecomposable
//! projective non-injective modules, and their torsion-freeness.
//!
//! The class of the sequence is a nonzero element of the socle of
//! `Ext^1(τ⁻¹U, U)` as a module over `End(U) = e_v A e_v`; that socle is
//! simple, so the middle term does not depend on the chosen element. The
//! sequence is certified structurally: the class is nonzero and killed by
//! `rad End(U)`, and `V = τ⁻¹U` with `U` indecomposable.

use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::homology::{min_proj_resolution, tau_inverse, transpose, CappedNat};
use crate::linalg::Matrix;
use crate::modrep::{
    descend, direct_sum, factorize, free_map, hom_basis, is_injective, projective, regular, sum_injection,
    sum_projection, HomBasis, ModuleMorphism, ModuleRep,
};

/// `Ext^1(V, U)` realized as `Hom(ΩV, U) / ι^* Hom(Q_0, U)` for the minimal
/// presentation `0 -> ΩV -ι-> Q_0 -π-> V -> 0`, with the action of `rad End(U)`.
#[derive(Clone, Debug)]
pub struct Ext1EndAction {
    pub omega: ModuleRep,
    pub omega_inclusion: ModuleMorphism,
    pub cover_map: ModuleMorphism,
    pub hom: HomBasis,
    /// Rows (in `hom` coordinates) spanning the image of `Hom(Q_0, U)`.
    pub image: Matrix,
    /// Rows (in `hom` coordinates) representing a basis of the quotient.
    pub quotient: Matrix,
    /// Endomorphisms of `U` spanning `rad End(U)`.
    pub radical: Vec<ModuleMorphism>,
    /// `actions[r]` sends quotient coordinates `z` to those of `radical[r] ∘ z` (as `z · actions[r]`).
    pub actions: Vec<Matrix>,
}

impl Ext1EndAction {
    pub fn dim(&self) -> usize {
        self.quotient.rows()
    }

    /// Quotient coordinates of a morphism `ΩV -> U`.
    pub fn class_of(&self, f: &ModuleMorphism) -> Vec<u32> {
        let x = self.hom.coordinates(f).expect("morphism lies in Hom(ΩV, U)");
        self.project(&x)
    }

    fn project(&self, x: &[u32]) -> Vec<u32> {
        let field = self.hom.matrix().field();
        let h = self.hom.len();
        let b = Matrix::vstack(field, h, &[&self.image, &self.quotient]);
        let y = Matrix::from_vec(field, 1, h, x.to_vec()).mul(&b.inverse().expect("image plus complement is a basis"));
        y.row(0)[self.image.rows()..].to_vec()
    }

    /// A representative `ΩV -> U` of the class with quotient coordinates `z`.
    pub fn representative(&self, z: &[u32]) -> ModuleMorphism {
        let field = self.hom.matrix().field();
        let row = Matrix::from_vec(field, 1, z.len(), z.to_vec()).mul(&self.quotient);
        self.hom.combination(row.row(0))
    }

    /// Basis of the common kernel of the `rad End(U)` actions, in echelon order.
    pub fn socle(&self) -> Matrix {
        let field = self.hom.matrix().field();
        let blocks: Vec<&Matrix> = self.actions.iter().collect();
        Matrix::hstack(field, self.dim(), &blocks).left_kernel_basis()
    }
}

/// Computes `Ext^1(V, U)` for `U = e_v A` together with the `rad End(U)` action.
pub fn ext1_with_end_action(v_mod: &ModuleRep, vertex: usize) -> Result<Ext1EndAction> {
    let alg = v_mod.algebra();
    let field = alg.field();
    let u = projective(alg, vertex);
    let res = min_proj_resolution(v_mod, 1);
    if res.is_empty() || res.syzygy(1).is_zero() {
        return Err(Error::ExtensionVanishes);
    }
    let omega = res.syzygy(1).clone();
    let iota = res.inclusion(1).clone();
    let hom = hom_basis(&omega, &u)?;
    let from_cover = hom_basis(res.term(0), &u)?;
    let restricted: Vec<ModuleMorphism> = from_cover.iter().map(|g| iota.then(&g)).collect();
    let image = hom.coordinates_many(&restricted).expect("restriction lies in Hom(ΩV, U)").row_space_basis();
    let quotient = image.row_space_complement();
    if quotient.rows() == 0 {
        return Err(Error::ExtensionVanishes);
    }
    let radical: Vec<ModuleMorphism> = alg
        .paths_between(vertex, vertex)
        .iter()
        .filter(|&&p| !alg.basis()[p].is_trivial())
        .map(|&p| {
            let mut x = vec![0; u.dim_at(vertex)];
            x[alg.position(p)] = 1;
            free_map(&u, &[vertex], &[x])
        })
        .collect();
    let mut e = Ext1EndAction {
        omega,
        omega_inclusion: iota,
        cover_map: res.cover(0).map.clone(),
        hom,
        image,
        quotient,
        radical,
        actions: Vec::new(),
    };
    let d = e.dim();
    e.actions = e
        .radical
        .iter()
        .map(|r| {
            let rows: Vec<Vec<u32>> = (0..d)
                .map(|j| {
                    let mut z = vec![0; d];
                    z[j] = 1;
                    e.class_of(&e.representative(&z).then(r))
                })
                .collect();
            Matrix::from_rows(field, d, &rows)
        })
        .collect();
    Ok(e)
}

/// An almost split sequence `0 -> U -> X -> V -> 0` with `U = e_v A`.
#[derive(Clone, Debug)]
pub struct ArSequence {
    pub vertex: usize,
    pub u: ModuleRep,
    pub x: ModuleRep,
    pub v: ModuleRep,
    pub inclusion: ModuleMorphism,
    pub surjection: ModuleMorphism,
    /// A morphism `ΩV -> U` representing the extension class.
    pub class: ModuleMorphism,
    pub ext: Ext1EndAction,
}

impl ArSequence {
    /// Re-checks exactness, non-splitness and annihilation by `rad End(U)`.
    pub fn verify(&self) -> std::result::Result<(), String> {
        if self.x.dim() != self.u.dim() + self.v.dim() {
            return Err("dim X != dim U + dim V".into());
        }
        for m in [&self.u, &self.x, &self.v] {
            m.validate().map_err(|e| e.to_string())?;
        }
        if !self.inclusion.commutes() || !self.surjection.commutes() {
            return Err("structure maps are not module maps".into());
        }
        if !self.inclusion.is_injective() {
            return Err("U -> X is not injective".into());
        }
        if !self.surjection.is_surjective() {
            return Err("X -> V is not surjective".into());
        }
        if !self.inclusion.then(&self.surjection).is_zero() {
            return Err("composite U -> V is nonzero".into());
        }
        if factorize(&self.surjection).kernel.dim() != self.u.dim() {
            return Err("kernel of X -> V differs from the image of U".into());
        }
        let z = self.ext.class_of(&self.class);
        if z.iter().all(|&c| c == 0) {
            return Err("extension class is zero, the sequence splits".into());
        }
        let field = self.u.field();
        let zm = Matrix::from_vec(field, 1, z.len(), z);
        if self.ext.actions.iter().any(|a| !zm.mul(a).is_zero()) {
            return Err("class is not annihilated by rad End(U)".into());
        }
        Ok(())
    }
}

/// Builds the extension of `V` by `U` with class represented by `f: ΩV -> U`,
/// as the pushout `coker(ΩV -> U ⊕ Q_0, w ↦ (f(w), -ι(w)))`.
pub fn extension_from_class(ext: &Ext1EndAction, vertex: usize, v_mod: &ModuleRep, f: &ModuleMorphism) -> ArSequence {
    let alg = v_mod.algebra();
    let u = projective(alg, vertex);
    let q0 = ext.omega_inclusion.target().clone();
    let parts = [&u, &q0];
    let sum = direct_sum(alg, &parts).expect("same algebra");
    let into_sum = f
        .then(&sum_injection(&sum, &parts, 0))
        .add(&ext.omega_inclusion.neg().then(&sum_injection(&sum, &parts, 1)));
    let fz = factorize(&into_sum);
    let x = fz.cokernel.clone();
    let inclusion = sum_injection(&sum, &parts, 0).then(&fz.cokernel_projection);
    let to_v = sum_projection(&sum, &parts, 1).then(&ext.cover_map);
    let surjection = descend(&fz.cokernel_projection, &to_v);
    ArSequence {
        vertex,
        u,
        x,
        v: v_mod.clone(),
        inclusion,
        surjection,
        class: f.clone(),
        ext: ext.clone(),
    }
}

/// The almost split sequence starting at `e_v A`, which must not be injective.
pub fn almost_split_from_projective(alg: &Algebra, vertex: usize) -> Result<ArSequence> {
    let seq = construct(alg, vertex)?;
    if let Err(e) = seq.verify() {
        panic!("constructed sequence at vertex {vertex} fails its invariants: {e}");
    }
    Ok(seq)
}

/// The construction behind [`almost_split_from_projective`], without the final check.
pub(crate) fn construct(alg: &Algebra, vertex: usize) -> Result<ArSequence> {
    let u = projective(alg, vertex);
    if is_injective(&u) {
        return Err(Error::ProjectiveInjective(vertex));
    }
    let v_mod = tau_inverse(&u);
    let ext = ext1_with_end_action(&v_mod, vertex)?;
    let soc = ext.socle();
    assert!(soc.rows() > 0, "socle of Ext^1 is empty");
    let f = ext.representative(soc.row(0));
    Ok(extension_from_class(&ext, vertex, &v_mod, &f))
}

/// Which term of an AR sequence fails torsion-freeness, and in which degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Term {
    U,
    X,
    V,
}

/// Torsion-freeness data for the sequence starting at one vertex.
#[derive(Clone, Debug, Serialize)]
pub struct VertexProfile {
    pub vertex: usize,
    pub dims: [usize; 3],
    /// Least `i` in `1..=max_n` with `Ext^i(Tr T, A) != 0`, per term `U, X, V`.
    pub first_failure: [Option<usize>; 3],
}

impl VertexProfile {
    /// The first failing `(term, degree)` with degree `<= n`, if any.
    pub fn failure(&self, n: usize) -> Option<(Term, usize)> {
        [Term::U, Term::X, Term::V]
            .into_iter()
            .zip(self.first_failure)
            .filter_map(|(t, d)| d.filter(|&d| d <= n).map(|d| (t, d)))
            .min_by_key(|&(_, d)| d)
    }
}

/// Torsion-freeness profile of all AR sequences starting at projective non-injective vertices.
#[derive(Clone, Debug, Serialize)]
pub struct TfProfile {
    pub max_n: usize,
    pub vertices: Vec<VertexProfile>,
}

impl TfProfile {
    /// Whether every AR sequence is `n`-torsion-free (vacuously true without such sequences).
    pub fn holds(&self, n: usize) -> bool {
        assert!(n <= self.max_n, "profile computed only up to degree {}", self.max_n);
        self.vertices.iter().all(|p| p.failure(n).is_none())
    }

    pub fn first_failure(&self, n: usize) -> Option<(usize, Term, usize)> {
        self.vertices.iter().find_map(|p| p.failure(n).map(|(t, d)| (p.vertex, t, d)))
    }
}

fn first_tf_failure(m: &ModuleRep, max_n: usize) -> Option<usize> {
    let tr = transpose(m);
    if tr.is_zero() {
        return None;
    }
    let a_op = regular(tr.algebra());
    let dims = crate::homology::ext_dims(&tr, &a_op, max_n);
    (1..=max_n).find(|&i| dims[i] != 0)
}

pub fn ar_tf_profile(alg: &Algebra, max_n: usize) -> Result<TfProfile> {
    let mut vertices = Vec::new();
    if !alg.flags().selfinjective {
        for v in 0..alg.num_vertices() {
            match almost_split_from_projective(alg, v) {
                Ok(seq) => {
                    let ff = [&seq.u, &seq.x, &seq.v].map(|t| first_tf_failure(t, max_n));
                    vertices.push(VertexProfile { vertex: v, dims: [seq.u.dim(), seq.x.dim(), seq.v.dim()], first_failure: ff });
                }
                Err(Error::ProjectiveInjective(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(TfProfile { max_n, vertices })
}

/// Whether `A` has `n`-torsion-free AR sequences, with the per-vertex report.
pub fn has_n_tf_ar_sequences(alg: &Algebra, n: usize) -> Result<(bool, TfProfile)> {
    let p = ar_tf_profile(alg, n)?;
    Ok((p.holds(n), p))
}

/// The largest `n <= max_n` for which the AR sequences are `n`-torsion-free,
/// `AtLeast(max_n)` if all degrees up to `max_n` pass.
pub fn tf_ar_degree(profile: &TfProfile) -> CappedNat {
    match (1..=profile.max_n).find(|&n| !profile.holds(n)) {
        Some(n) => CappedNat::Exact(n - 1),
        None if profile.vertices.is_empty() => CappedNat::Infinite,
        None => CappedNat::AtLeast(profile.max_n),
    }
}
