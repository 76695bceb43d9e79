//! Homological invariants of bound quiver algebras over prime fields, with a
//! verification harness relating dominant dimension to torsion-free
//! Auslander–Reiten sequences.
//!
//! ```
//! use ardom::algebra::Algebra;
//! use ardom::homology::{domdim_algebra, CappedNat};
//!
//! let a = Algebra::from_text("vertices 1 2\narrow a 1 2\narrow b 2 1\nrelation a*b\n").unwrap();
//! assert_eq!(a.dim(), 5);
//! assert_eq!(domdim_algebra(&a, 30), CappedNat::Exact(2));
//! ```

pub mod algebra;
pub mod error;
pub mod linalg;
pub mod modrep;
pub mod homology;
pub mod ar;
pub mod verify;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/conventions.md")]
    struct Conventions;
    #[doc = include_str!("../../../book/src/formats.md")]
    struct Formats;
    #[doc = include_str!("../../../book/src/library.md")]
    struct Library;
    #[doc = include_str!("../../../book/src/verification.md")]
    struct Verification;
}
