//! Resolutions, Ext, transpose and translates, torsion, grade and dominant dimension.

mod dims;
mod ext;
mod resolution;
mod torsion;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

pub use dims::{
    domdim_algebra, domdim_module, domdim_r_via_mueller, gldim, gorenstein_dim, grade, injdim, pdim,
    projective_injective_vertices,
};
pub(crate) use ext::ext_module_with;
pub use ext::{ext_dim, ext_dims, ext_module, hom_dual, transpose, tau, tau_inverse, HomDual};
pub use resolution::{min_inj_coresolution, min_proj_resolution, InjectiveCoresolution, ProjectiveResolution};
pub use torsion::{evaluation_and_torsion, is_n_torsion_free, is_n_torsion_free_direct, Evaluation};

/// A homological dimension: exact, bounded below by an exhausted cap, or certified infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CappedNat {
    Exact(usize),
    AtLeast(usize),
    Infinite,
}

impl CappedNat {
    /// Decides `self >= n`, or `None` when the cap leaves it open.
    pub fn at_least(self, n: usize) -> Option<bool> {
        match self {
            CappedNat::Exact(k) => Some(k >= n),
            CappedNat::Infinite => Some(true),
            CappedNat::AtLeast(c) => (c >= n).then_some(true),
        }
    }

    pub fn exact(self) -> Option<usize> {
        match self {
            CappedNat::Exact(k) => Some(k),
            _ => None,
        }
    }

    pub fn is_capped(self) -> bool {
        matches!(self, CappedNat::AtLeast(_))
    }

    /// Decides equality, or `None` when a cap leaves it open.
    pub fn decide_eq(self, other: CappedNat) -> Option<bool> {
        use CappedNat::*;
        match (self, other) {
            (Exact(a), Exact(b)) => Some(a == b),
            (Infinite, Infinite) => Some(true),
            (Exact(_), Infinite) | (Infinite, Exact(_)) => Some(false),
            (AtLeast(c), Exact(b)) | (Exact(b), AtLeast(c)) => (b < c).then_some(false),
            _ => None,
        }
    }

    pub fn max(self, other: CappedNat) -> CappedNat {
        use CappedNat::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (Exact(a), Exact(b)) => Exact(a.max(b)),
            (AtLeast(a), AtLeast(b)) | (AtLeast(a), Exact(b)) | (Exact(b), AtLeast(a)) => AtLeast(a.max(b)),
        }
    }

    pub fn min(self, other: CappedNat) -> CappedNat {
        use CappedNat::*;
        match (self, other) {
            (Infinite, x) | (x, Infinite) => x,
            (Exact(a), Exact(b)) => Exact(a.min(b)),
            (AtLeast(a), AtLeast(b)) => AtLeast(a.min(b)),
            (AtLeast(a), Exact(b)) | (Exact(b), AtLeast(a)) => {
                if b <= a {
                    Exact(b)
                } else {
                    AtLeast(a)
                }
            }
        }
    }
}

impl fmt::Display for CappedNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CappedNat::Exact(k) => write!(f, "{k}"),
            CappedNat::AtLeast(c) => write!(f, ">={c}"),
            CappedNat::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for CappedNat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "inf" {
            return Ok(CappedNat::Infinite);
        }
        let (at_least, digits) = match s.strip_prefix(">=") {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let k: usize = digits.parse().map_err(|_| format!("not a dimension: {s:?}"))?;
        Ok(if at_least { CappedNat::AtLeast(k) } else { CappedNat::Exact(k) })
    }
}

impl Serialize for CappedNat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
