//! Right modules as quiver representations.
//!
//! Arrow `a: v -> w` acts by a `dim(v) × dim(w)` matrix on row vectors. A
//! morphism `f: M -> N` is a family of matrices `f_v: M_v -> N_v` with
//! `M_a · f_w = f_v · N_a` for every arrow, and `(g∘f)_v = f_v · g_v`.

mod hom;
mod io;
mod sample;
mod structure;

use std::fmt;

use crate::algebra::{Algebra, PathWord};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField};

pub use hom::{descend, factorize, hom_basis, hom_dim, is_isomorphic, is_isomorphic_with, Factorization, HomBasis, Iso};
pub use io::{read_module, write_module};
pub use sample::{random_presented_module, sample_modules};
pub use structure::{
    free_map, free_module, inj_hull, injective, is_injective, is_projective, proj_cover, projective, quotient,
    radical, regular, rst, simple, socle, submodule, top, Cover, Hull, Rst,
};

#[derive(Clone, PartialEq, Eq)]
pub struct ModuleRep {
    alg: Algebra,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl ModuleRep {
    /// Builds a module and checks shapes and relations.
    pub fn new(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<ModuleRep> {
        assert_eq!(dims.len(), alg.num_vertices(), "one dimension per vertex");
        assert_eq!(maps.len(), alg.num_arrows(), "one matrix per arrow");
        for (a, m) in maps.iter().enumerate() {
            let arr = alg.arrow(a);
            if (m.rows(), m.cols()) != (dims[arr.source], dims[arr.target]) {
                return Err(Error::InvalidModule(format!(
                    "arrow `{}` needs a {}x{} matrix, got {}x{}",
                    arr.name,
                    dims[arr.source],
                    dims[arr.target],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let m = ModuleRep { alg: alg.clone(), dims, maps };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_parts(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> ModuleRep {
        let m = ModuleRep { alg: alg.clone(), dims, maps };
        debug_assert!(m.validate().is_ok(), "constructed module violates a relation");
        m
    }

    pub fn zero(alg: &Algebra) -> ModuleRep {
        let f = alg.field();
        let maps = (0..alg.num_arrows()).map(|_| Matrix::zeros(f, 0, 0)).collect();
        ModuleRep { alg: alg.clone(), dims: vec![0; alg.num_vertices()], maps }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn field(&self) -> PrimeField {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn arrow_map(&self, a: usize) -> &Matrix {
        &self.maps[a]
    }

    /// Action of a path: the product of its arrow matrices in reading order.
    pub fn path_map(&self, p: &PathWord) -> Matrix {
        let mut m = Matrix::identity(self.field(), self.dims[p.source]);
        for &a in &p.arrows {
            m = m.mul(&self.maps[a]);
        }
        m
    }

    /// Action of the basis element `i` of the algebra.
    pub fn basis_action(&self, i: usize) -> Matrix {
        self.path_map(&self.alg.basis()[i])
    }

    /// Checks that every relation of the algebra acts as zero.
    pub fn validate(&self) -> Result<()> {
        let f = self.field();
        for rel in self.alg.relations() {
            let p0 = &rel.terms[0].1;
            let mut acc = Matrix::zeros(f, self.dims[p0.source], self.dims[p0.target]);
            for (c, p) in &rel.terms {
                acc = acc.add(&self.path_map(p).scale(*c));
            }
            if !acc.is_zero() {
                let text = rel
                    .terms
                    .iter()
                    .map(|(c, p)| format!("{c}*{}", self.alg.format_path(p)))
                    .collect::<Vec<_>>()
                    .join(" + ");
                return Err(Error::RelationViolated(text));
            }
        }
        Ok(())
    }

    /// The k-dual `Hom_k(M, k)` as a module over the opposite algebra.
    pub fn dual(&self) -> ModuleRep {
        ModuleRep {
            alg: self.alg.opposite(),
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Offsets of each vertex inside a flat coordinate vector of the whole module.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims.len() + 1);
        let mut s = 0;
        for &d in &self.dims {
            off.push(s);
            s += d;
        }
        off.push(s);
        off
    }
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleRep(dims {:?})", self.dims)
    }
}

/// Blockwise direct sum of modules over one algebra.
pub fn direct_sum(alg: &Algebra, mods: &[&ModuleRep]) -> Result<ModuleRep> {
    if mods.iter().any(|m| m.alg != *alg) {
        return Err(Error::AlgebraMismatch);
    }
    let f = alg.field();
    let dims = (0..alg.num_vertices()).map(|v| mods.iter().map(|m| m.dims[v]).sum()).collect();
    let maps = (0..alg.num_arrows())
        .map(|a| Matrix::block_diag(f, &mods.iter().map(|m| &m.maps[a]).collect::<Vec<_>>()))
        .collect();
    Ok(ModuleRep { alg: alg.clone(), dims, maps })
}

/// Canonical injections and projections of a direct sum, as built by [`direct_sum`].
pub fn sum_injection(sum: &ModuleRep, parts: &[&ModuleRep], k: usize) -> ModuleMorphism {
    let f = sum.field();
    let comps = (0..sum.dims.len())
        .map(|v| {
            let before: usize = parts[..k].iter().map(|m| m.dims[v]).sum();
            let mut m = Matrix::zeros(f, parts[k].dims[v], sum.dims[v]);
            for i in 0..parts[k].dims[v] {
                m.set(i, before + i, 1);
            }
            m
        })
        .collect();
    ModuleMorphism::from_parts(parts[k], sum, comps)
}

pub fn sum_projection(sum: &ModuleRep, parts: &[&ModuleRep], k: usize) -> ModuleMorphism {
    let inj = sum_injection(sum, parts, k);
    let comps = inj.comps.iter().map(Matrix::transpose).collect();
    ModuleMorphism::from_parts(sum, parts[k], comps)
}

#[derive(Clone, PartialEq, Eq)]
pub struct ModuleMorphism {
    source: ModuleRep,
    target: ModuleRep,
    comps: Vec<Matrix>,
}

impl ModuleMorphism {
    /// Builds a morphism and checks every commuting square.
    pub fn new(source: &ModuleRep, target: &ModuleRep, comps: Vec<Matrix>) -> Result<ModuleMorphism> {
        if source.alg != target.alg {
            return Err(Error::AlgebraMismatch);
        }
        let f = ModuleMorphism { source: source.clone(), target: target.clone(), comps };
        if !f.commutes() {
            return Err(Error::InvalidModule("matrices do not commute with the arrow actions".into()));
        }
        Ok(f)
    }

    pub(crate) fn from_parts(source: &ModuleRep, target: &ModuleRep, comps: Vec<Matrix>) -> ModuleMorphism {
        let f = ModuleMorphism { source: source.clone(), target: target.clone(), comps };
        debug_assert!(f.commutes(), "constructed morphism is not a module map");
        f
    }

    pub fn zero(source: &ModuleRep, target: &ModuleRep) -> ModuleMorphism {
        let f = source.field();
        let comps = (0..source.dims.len()).map(|v| Matrix::zeros(f, source.dims[v], target.dims[v])).collect();
        ModuleMorphism { source: source.clone(), target: target.clone(), comps }
    }

    pub fn identity(m: &ModuleRep) -> ModuleMorphism {
        let f = m.field();
        let comps = m.dims.iter().map(|&d| Matrix::identity(f, d)).collect();
        ModuleMorphism { source: m.clone(), target: m.clone(), comps }
    }

    pub fn source(&self) -> &ModuleRep {
        &self.source
    }

    pub fn target(&self) -> &ModuleRep {
        &self.target
    }

    pub fn component(&self, v: usize) -> &Matrix {
        &self.comps[v]
    }

    pub fn components(&self) -> &[Matrix] {
        &self.comps
    }

    pub fn commutes(&self) -> bool {
        let alg = self.source.algebra();
        (0..alg.num_arrows()).all(|a| {
            let arr = alg.arrow(a);
            self.source.maps[a].mul(&self.comps[arr.target]) == self.comps[arr.source].mul(&self.target.maps[a])
        })
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &ModuleMorphism) -> ModuleMorphism {
        assert_eq!(self.target.dims, g.source.dims, "morphisms do not compose");
        let comps = self.comps.iter().zip(&g.comps).map(|(a, b)| a.mul(b)).collect();
        ModuleMorphism { source: self.source.clone(), target: g.target.clone(), comps }
    }

    pub fn add(&self, g: &ModuleMorphism) -> ModuleMorphism {
        let comps = self.comps.iter().zip(&g.comps).map(|(a, b)| a.add(b)).collect();
        ModuleMorphism { source: self.source.clone(), target: self.target.clone(), comps }
    }

    pub fn scale(&self, c: u32) -> ModuleMorphism {
        let comps = self.comps.iter().map(|a| a.scale(c)).collect();
        ModuleMorphism { source: self.source.clone(), target: self.target.clone(), comps }
    }

    pub fn neg(&self) -> ModuleMorphism {
        self.scale(self.source.field().neg(1))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.comps.iter().map(Matrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dims == self.target.dims && self.comps.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<ModuleMorphism> {
        let comps = self.comps.iter().map(Matrix::inverse).collect::<Option<Vec<_>>>()?;
        Some(ModuleMorphism { source: self.target.clone(), target: self.source.clone(), comps })
    }

    /// The k-dual morphism `D N -> D M` over the opposite algebra.
    pub fn dual(&self) -> ModuleMorphism {
        ModuleMorphism {
            source: self.target.dual(),
            target: self.source.dual(),
            comps: self.comps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Row-major entries of all components, concatenated by vertex.
    pub fn flatten(&self) -> Vec<u32> {
        self.comps.iter().flat_map(|m| m.entries().iter().copied()).collect()
    }

    /// Replaces source and target by equal-shaped modules (used after canonical identifications).
    pub fn retarget(&self, source: &ModuleRep, target: &ModuleRep) -> ModuleMorphism {
        assert_eq!(source.dims, self.source.dims);
        assert_eq!(target.dims, self.target.dims);
        ModuleMorphism::from_parts(source, target, self.comps.clone())
    }
}

impl fmt::Debug for ModuleMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleMorphism")
            .field("source", &self.source.dims)
            .field("target", &self.target.dims)
            .field("comps", &self.comps)
            .finish()
    }
}

#[cfg(test)]
mod tests;
