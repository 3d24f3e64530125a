//! Counting and enumeration of the distinct shapes formed by Hamiltonian
//! path and cycle subgraphs of the complete graph K_n, drawn on n regularly
//! spaced points of a circle.
//!
//! Two such subgraphs are *similar* when one is a rotation or reflection of
//! the other, and *equivalent* when one is a rotation of the other. The
//! crate answers "how many classes are there?" three independent ways:
//!
//! * [`formula::class_count`] — exact closed forms,
//! * [`orbit::burnside_count`] — exhaustive fixed-point scans over all n!
//!   traversal strings, combined by Burnside's lemma,
//! * [`orbit::enumerate_classes`] — direct orbit enumeration, which also
//!   produces one canonical representative per class.
//!
//! [`render`] draws single shapes and per-class galleries as SVG.

pub mod error;
pub mod formula;
pub mod group;
pub mod orbit;
pub mod perm;
pub mod render;
pub mod shape;
pub mod verify;

pub use error::{Error, Result};
pub use formula::{
    class_count, component_sums, count_from_components, double_factorial, euler_phi,
    prime_class_count, totient_sum, Component,
};
pub use group::{elements, EquivKind, GraphKind, GroupElement, Mode};
pub use orbit::{
    burnside_count, canonical_rep, enumerate_classes, equivalent_shapes, fixed_count_scan,
    similar_shapes, OrbitReport,
};
pub use perm::{all_strings, strings_with_prefix, PermString, DEFAULT_CAP};
pub use render::{layout, render_gallery, render_shape, Layout, Style};
pub use shape::{shape_key, ShapeKey};
pub use verify::{verify_mode, verify_range, ModeCheck};

/// Class counts grow factorially; every count in this crate is an exact
/// arbitrary-precision integer.
pub type ClassCount = num_bigint::BigUint;
