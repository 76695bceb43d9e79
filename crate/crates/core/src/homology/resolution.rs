use crate::modrep::{factorize, is_isomorphic, proj_cover, Cover, ModuleMorphism, ModuleRep};

/// A minimal projective resolution `⋯ -> P_1 -> P_0 -> M -> 0`, computed to a finite depth.
#[derive(Clone, Debug)]
pub struct ProjectiveResolution {
    module: ModuleRep,
    covers: Vec<Cover>,
    syzygies: Vec<ModuleRep>,
    inclusions: Vec<ModuleMorphism>,
    period: Option<(usize, usize)>,
    detect_period: bool,
}

impl ProjectiveResolution {
    pub fn module(&self) -> &ModuleRep {
        &self.module
    }

    /// Number of computed terms `P_0, …`.
    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    /// `P_i` together with the cover `P_i -> Ω^i M`.
    pub fn cover(&self, i: usize) -> &Cover {
        &self.covers[i]
    }

    pub fn term(&self, i: usize) -> &ModuleRep {
        &self.covers[i].module
    }

    /// Vertices of the indecomposable summands of `P_i`.
    pub fn gens(&self, i: usize) -> &[usize] {
        &self.covers[i].gens
    }

    /// `Ω^i M`, with `Ω^0 M = M`; defined for `i <= len()`.
    pub fn syzygy(&self, i: usize) -> &ModuleRep {
        &self.syzygies[i]
    }

    /// The inclusion `Ω^i M -> P_{i-1}` for `1 <= i <= len()`.
    pub fn inclusion(&self, i: usize) -> &ModuleMorphism {
        &self.inclusions[i - 1]
    }

    /// The differential `P_i -> P_{i-1}` for `i >= 1`.
    pub fn differential(&self, i: usize) -> ModuleMorphism {
        self.covers[i].map.then(&self.inclusions[i - 1])
    }

    /// True when some computed syzygy vanished, so the resolution is complete.
    pub fn is_finite(&self) -> bool {
        self.syzygies.last().is_some_and(ModuleRep::is_zero)
    }

    /// `(j, k)` with `j < k` and `Ω^j M ≅ Ω^k M ≠ 0`, if periodicity was detected.
    pub fn period(&self) -> Option<(usize, usize)> {
        self.period
    }

    /// Projective dimension if the resolution is complete.
    pub fn length(&self) -> Option<usize> {
        if self.module.is_zero() {
            return Some(0);
        }
        self.is_finite().then(|| self.syzygies.len() - 2)
    }

    /// Computes further terms until `depth` syzygies beyond `M` exist, the
    /// resolution ends, or a period is found.
    pub fn extend_to(&mut self, depth: usize) {
        while self.syzygies.len() <= depth && !self.is_finite() && self.period.is_none() {
            let last = self.syzygies.last().unwrap();
            let cover = proj_cover(last);
            let fz = factorize(&cover.map);
            self.covers.push(cover);
            let k = self.syzygies.len();
            if self.detect_period && !fz.kernel.is_zero() {
                self.period = (1..k)
                    .find(|&j| self.syzygies[j].dims() == fz.kernel.dims() && is_isomorphic(&self.syzygies[j], &fz.kernel).is_yes())
                    .map(|j| (j, k));
            }
            self.syzygies.push(fz.kernel);
            self.inclusions.push(fz.kernel_inclusion);
        }
    }
}

/// Minimal projective resolution computed through `Ω^depth M` (or until it ends).
pub fn min_proj_resolution(m: &ModuleRep, depth: usize) -> ProjectiveResolution {
    build(m, depth, false)
}

/// Like [`min_proj_resolution`], but stops early once a syzygy repeats up to isomorphism.
pub(crate) fn min_proj_resolution_periodic(m: &ModuleRep, depth: usize) -> ProjectiveResolution {
    build(m, depth, true)
}

fn build(m: &ModuleRep, depth: usize, detect_period: bool) -> ProjectiveResolution {
    let mut r = ProjectiveResolution {
        module: m.clone(),
        covers: Vec::new(),
        syzygies: vec![m.clone()],
        inclusions: Vec::new(),
        period: None,
        detect_period,
    };
    if !m.is_zero() {
        r.extend_to(depth);
    }
    r
}

/// A minimal injective coresolution `0 -> M -> I_0 -> I_1 -> ⋯`, realized as
/// the k-dual of the minimal projective resolution of `D M`.
#[derive(Clone, Debug)]
pub struct InjectiveCoresolution {
    module: ModuleRep,
    dual: ProjectiveResolution,
}

impl InjectiveCoresolution {
    pub fn module(&self) -> &ModuleRep {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.dual.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dual.is_empty()
    }

    pub fn term(&self, i: usize) -> ModuleRep {
        self.dual.term(i).dual()
    }

    /// Vertices `v` of the summands `D(A e_v)` of `I_i`.
    pub fn gens(&self, i: usize) -> &[usize] {
        self.dual.gens(i)
    }

    /// `Ω^{-i} M`, with `Ω^0 M = M`.
    pub fn cosyzygy(&self, i: usize) -> ModuleRep {
        if i == 0 {
            return self.module.clone();
        }
        self.dual.syzygy(i).dual()
    }

    /// The embedding `M -> I_0`.
    pub fn embedding(&self) -> ModuleMorphism {
        let c = &self.dual.cover(0);
        c.map.dual().retarget(&self.module, &c.module.dual())
    }

    /// The differential `I_{i-1} -> I_i` for `i >= 1`.
    pub fn differential(&self, i: usize) -> ModuleMorphism {
        self.dual.differential(i).dual()
    }

    pub fn is_finite(&self) -> bool {
        self.dual.is_finite()
    }

    pub fn period(&self) -> Option<(usize, usize)> {
        self.dual.period()
    }

    /// Injective dimension if the coresolution is complete.
    pub fn length(&self) -> Option<usize> {
        self.dual.length()
    }

    pub fn extend_to(&mut self, depth: usize) {
        self.dual.extend_to(depth);
    }
}

pub fn min_inj_coresolution(m: &ModuleRep, depth: usize) -> InjectiveCoresolution {
    InjectiveCoresolution { module: m.clone(), dual: min_proj_resolution(&m.dual(), depth) }
}

pub(crate) fn min_inj_coresolution_periodic(m: &ModuleRep, depth: usize) -> InjectiveCoresolution {
    InjectiveCoresolution { module: m.clone(), dual: min_proj_resolution_periodic(&m.dual(), depth) }
}
