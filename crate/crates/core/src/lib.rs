//! Symmetries of cusped link complements, made computable.
//!
//! * [`field`]: finite fields `GF(p^k)` labeling the faces of the Biggs maps.
//! * [`perm`]: permutation groups and exact k-transitivity.
//! * [`regular_map`]: the Biggs regular maps as rotation systems, with genus
//!   and automorphism checks.
//! * [`links`]: blueprints of the symmetric link families and a census of the
//!   2-transitive helical family.
//! * [`train_track`]: the reduced train track of the point-pushing monodromy
//!   and its dilatation `3 + 2√2`.
//!
//! The data-parallel sweeps run on rayon when the `parallel` feature (on by
//! default) is enabled; see [`par::Exec`].

pub mod field;
pub mod links;
pub mod par;
pub mod perm;
pub mod regular_map;
pub mod report;
pub mod train_track;

pub use field::{FieldElement, FieldError, FieldSpec};
pub use links::{LinkBlueprint, LinkError};
pub use par::Exec;
pub use perm::{group_closure, PermError, PermGroup, Permutation};
pub use regular_map::{biggs_map, genus_formula, MapError, MapSummary, RotationMap};
pub use train_track::TrackError;
