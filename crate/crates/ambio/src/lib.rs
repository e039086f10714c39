//! Spatial audio tooling built around first-order Ambisonics (B-format).
//!
//! The crate covers five areas:
//!
//! - [`foa`]: mono-to-B-format encoding for fixed and moving sources, with
//!   the energy identity `x^2 + y^2 + z^2 = 2 w^2` preserved per sample.
//! - [`trajectory`]: linear angular paths with a movement window inside a
//!   clip and explicit clockwise/counter-clockwise azimuth travel.
//! - Dataset augmentation (`augment`): turns a manifest of mono recordings
//!   into a reproducible spatialized corpus with caption phrases describing
//!   direction, elevation, and speed.
//! - Position conditioning (`conditioner`): one-hot state matrices over
//!   azimuth/elevation bins sampled on a uniform time grid.
//! - Evaluation (`metrics`): intensity-vector direction-of-arrival
//!   estimation, angular error measures, and a multi-resolution spectral
//!   distance.
//!
//! Angles follow one convention everywhere: azimuth in degrees,
//! counter-clockwise positive with 0 at the front, wrapped to (-180, 180];
//! elevation in degrees, positive up, valid in [-90, 90].

pub mod augment;
pub mod conditioner;
pub mod error;
pub mod foa;
pub mod metrics;
pub mod trajectory;
pub mod wav;

pub use error::{AmbioError, Result};
pub use foa::{
    circular_distance_deg, encode_moving, encode_static, wrap_azimuth_deg, FoaSignal, MonoSignal,
    SphericalPosition,
};
pub use trajectory::{signed_azimuth_delta, Trajectory};
