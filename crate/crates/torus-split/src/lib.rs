//! Exact computations with maximal tori of symplectic groups over finite fields.
//!
//! The crate builds, for a chosen rank `n`, prime power `q` and signed cycle
//! type, the maximal torus `T` of that type inside `Sp_{2n}(q)`, assembles its
//! algebraic normalizer `N` (and the images of both in `PSp_{2n}(q)`), and
//! decides whether `N` splits over `T` — three independent ways:
//!
//! * a closed-form classifier over the `(rank, q, type)` data,
//! * explicit complement constructions with all their defining relations
//!   re-verified on the constructed matrices,
//! * exhaustive oracles: a backtracking search for a complement and
//!   obstruction enumerations proving none can exist.
//!
//! All arithmetic is exact, over deterministically constructed finite fields,
//! so every run is reproducible bit for bit.

pub mod atlas;
pub mod bweyl;
pub mod exec;
pub mod gf;
pub mod normalizer;
pub mod split;
pub mod sympmat;
pub mod torus;

pub use normalizer::{GroupKind, NormalizerGroup};
pub use split::{Verdict, VerdictRule};
pub use torus::{TorusPoint, TorusSpec};
pub use bweyl::{CycleType, SignedPerm};
pub use gf::{Field, FieldElem};


pub use sympmat::SympMatrix;

