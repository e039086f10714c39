//! Angular error measures: circular and linear L1 over frame sequences, and
//! the haversine great-circle angle between two directions.

use crate::error::{AmbioError, Result};
use crate::foa::{circular_distance_deg, SphericalPosition};

/// Mean circular distance between paired azimuth sequences, in degrees.
///
/// Each pair contributes `min(|a-b| mod 360, 360 - |a-b| mod 360)`, so the
/// result lies in [0, 180].
pub fn circular_l1(a_deg: &[f64], b_deg: &[f64]) -> Result<f64> {
    check_pair(a_deg, b_deg)?;
    let sum: f64 = a_deg
        .iter()
        .zip(b_deg)
        .map(|(&a, &b)| circular_distance_deg(a, b))
        .sum();
    Ok(sum / a_deg.len() as f64)
}

/// Mean absolute difference between paired elevation sequences, in degrees.
pub fn linear_l1(a_deg: &[f64], b_deg: &[f64]) -> Result<f64> {
    check_pair(a_deg, b_deg)?;
    let sum: f64 = a_deg.iter().zip(b_deg).map(|(&a, &b)| (a - b).abs()).sum();
    Ok(sum / a_deg.len() as f64)
}

fn check_pair(a: &[f64], b: &[f64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(AmbioError::LengthMismatch {
            a: a.len(),
            b: b.len(),
        });
    }
    if a.is_empty() {
        return Err(AmbioError::EmptyAngleSequence);
    }
    Ok(())
}

/// Great-circle angle between two directions, in degrees, via the haversine
/// form: `h = sin²(Δφ/2) + cosφ_a·cosφ_b·sin²(Δθ/2)`, angle
/// `= 2·atan2(√h, √(1-h))`. Always in [0, 180].
pub fn spatial_angle(a: SphericalPosition, b: SphericalPosition) -> f64 {
    let phi_a = a.elevation_rad();
    let phi_b = b.elevation_rad();
    let half_dphi = (phi_b - phi_a) / 2.0;
    let half_dtheta = (b.azimuth_rad() - a.azimuth_rad()) / 2.0;
    let h = half_dphi.sin().powi(2) + phi_a.cos() * phi_b.cos() * half_dtheta.sin().powi(2);
    let h = h.clamp(0.0, 1.0);
    (2.0 * h.sqrt().atan2((1.0 - h).sqrt())).to_degrees()
}
