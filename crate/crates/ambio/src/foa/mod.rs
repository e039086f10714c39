//! First-order Ambisonics signal types and encoders.

mod encode;
mod position;
mod signal;

pub use encode::{encode_moving, encode_static};
pub use position::{circular_distance_deg, wrap_azimuth_deg, SphericalPosition};
pub use signal::{FoaSignal, MonoSignal};
