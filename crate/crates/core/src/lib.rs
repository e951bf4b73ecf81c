//! Decide the lifting property between monotone maps of finite preorders.
//!
//! A finite preorder is a finite topological space (open sets are the
//! up-sets, closed sets the down-sets) and monotone maps are the continuous
//! maps. For maps `f: A -> B` and `g: X -> Y`, `f ⧄ g` holds when every
//! commuting square from `f` to `g` has a diagonal `B -> X` making both
//! triangles commute. Surjectivity, injectivity, connectedness, T0, T1,
//! density, induced topology, Hausdorffness and injectivity on components
//! are all lifting properties against tiny spaces; [`characterize`]
//! decides them that way and [`oracle`] decides them directly.
//!
//! ```
//! use finlift::{builtin, lifting_check};
//!
//! // {} -> {•} lifts against exactly the surjections
//! assert!(lifting_check(&builtin::empty_to_point(), &builtin::codiagonal_two()).holds);
//! ```

pub mod builtin;
pub mod characterize;
pub mod construct;
mod error;
pub mod lifting;
pub mod map;
pub mod notation;
pub mod oracle;
pub mod preorder;
pub mod universe;

pub use characterize::{characterize, Property, Subject};
pub use construct::{codiagonal, coproduct, diagonal, product};
pub use error::{Error, Result};
pub use lifting::{find_diagonal, lifting_check, LiftResult, LiftSession, Square};
pub use map::{compose, hom_assignments, hom_enumerate, identity, is_isomorphism, MonotoneMap};
pub use oracle::Pi0Partition;
pub use preorder::{dedup_isomorphic, enumerate_preorders, FinPreorder, Space, DEFAULT_SIZE_CAP};
pub use universe::{
    is_epi_by_cancellation, is_epi_upto, is_mono_by_cancellation, is_mono_upto, orthogonal_class, self_lifting_scan,
    Side, Universe,
};
