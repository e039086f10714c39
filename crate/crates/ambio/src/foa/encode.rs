//! Projection of a mono signal onto first-order Ambisonics channels.
//!
//! For a pressure sample `p` arriving from azimuth `theta` (counter-clockwise
//! positive, 0 at front) and elevation `phi` (positive up):
//!
//! ```text
//! w = p / sqrt(2)
//! x = p * cos(theta) * cos(phi)
//! y = p * sin(theta) * cos(phi)
//! z = p * sin(phi)
//! ```
//!
//! so `x^2 + y^2 + z^2 = p^2 = 2 * w^2` holds per sample.

use crate::error::{AmbioError, Result};
use crate::foa::{FoaSignal, MonoSignal, SphericalPosition};
use crate::trajectory::Trajectory;

/// Per-channel gains for a direction: `(w, x, y, z)`.
fn gains_for(pos: SphericalPosition) -> (f64, f64, f64, f64) {
    let theta = pos.azimuth_rad();
    let phi = pos.elevation_rad();
    let cos_phi = phi.cos();
    (
        std::f64::consts::FRAC_1_SQRT_2,
        theta.cos() * cos_phi,
        theta.sin() * cos_phi,
        phi.sin(),
    )
}

/// Encodes a mono source fixed at `position` into four Ambisonics channels.
pub fn encode_static(mono: &MonoSignal, position: SphericalPosition) -> Result<FoaSignal> {
    let (gw, gx, gy, gz) = gains_for(position);
    let samples = mono.samples();
    let mut w = Vec::with_capacity(samples.len());
    let mut x = Vec::with_capacity(samples.len());
    let mut y = Vec::with_capacity(samples.len());
    let mut z = Vec::with_capacity(samples.len());
    for &p in samples {
        w.push(p * gw);
        x.push(p * gx);
        y.push(p * gy);
        z.push(p * gz);
    }
    FoaSignal::new(w, x, y, z, mono.sample_rate())
}

/// Encodes a mono source following `trajectory` into four Ambisonics
/// channels, re-deriving the direction gains at every sample.
///
/// The signal length must match the trajectory's clip duration to within
/// one sample at the signal's rate.
pub fn encode_moving(mono: &MonoSignal, trajectory: &Trajectory) -> Result<FoaSignal> {
    let rate = mono.sample_rate();
    let expected = (trajectory.clip_duration_s() * rate as f64).round() as i64;
    let actual = mono.len() as i64;
    if (expected - actual).abs() > 1 {
        return Err(AmbioError::DurationMismatch {
            signal_samples: mono.len(),
            clip_s: trajectory.clip_duration_s(),
            sample_rate: rate,
        });
    }
    let samples = mono.samples();
    let mut w = Vec::with_capacity(samples.len());
    let mut x = Vec::with_capacity(samples.len());
    let mut y = Vec::with_capacity(samples.len());
    let mut z = Vec::with_capacity(samples.len());
    for (i, &p) in samples.iter().enumerate() {
        let t = (i as f64 / rate as f64).min(trajectory.clip_duration_s());
        let pos = trajectory.position_at(t)?;
        let (gw, gx, gy, gz) = gains_for(pos);
        w.push(p * gw);
        x.push(p * gx);
        y.push(p * gy);
        z.push(p * gz);
    }
    FoaSignal::new(w, x, y, z, rate)
}
