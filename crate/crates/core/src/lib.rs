//! Geometric intersection numbers of closed curves on the pair of pants.
//!
//! Classes are cyclic words in the free group on `a`, `b`; the boundary
//! components are `a`, `b` and `ab`. Two independent routes compute
//! intersection numbers: [`engine`] counts linked pairs in the planar Cayley
//! tree, and [`hyperbolic`] counts crossing double cosets of axes of a
//! Fuchsian representation with exact arithmetic. [`lab`] builds the
//! censuses, triples and k-equivalence checks on top.

pub mod class;
pub mod engine;
pub mod error;
pub mod hyperbolic;
pub mod ribbon;
pub mod lab;
pub mod word;

pub use class::{canonical_class, enumerate_classes, is_boundary_parallel, parse_class, CurveClass, EnumFilter, Orientation};
pub use engine::{intersection, intersection_vector, self_intersection, Engine, PowerPath};
pub use error::{Error, Result};
pub use ribbon::{compare_rays, Ray, RayOrder, RibbonStructure};
pub use word::{free_reduce, parse_word, Letter, ReducedWord};
