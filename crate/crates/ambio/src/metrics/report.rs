//! Pairwise spatial comparison of two B-format signals.

use serde::{Deserialize, Serialize};

use crate::error::{AmbioError, Result};
use crate::foa::{FoaSignal, SphericalPosition};
use crate::metrics::angles::{circular_l1, linear_l1, spatial_angle};
use crate::metrics::doa::{estimate_doa, DEFAULT_FRAME_LEN, DEFAULT_HOP};

/// Angular error summary between a reference and a candidate signal.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpatialErrorReport {
    /// Mean circular azimuth difference over mutually valid frames, degrees.
    pub l1_azimuth_deg: f64,
    /// Mean absolute elevation difference over mutually valid frames, degrees.
    pub l1_elevation_deg: f64,
    /// Mean per-frame great-circle angle between the estimates, degrees.
    pub mean_spatial_angle_deg: f64,
    /// Fraction of analysis frames valid in both signals.
    pub valid_frame_fraction: f64,
}

/// Compares two signals by their frame-wise DoA estimates, using the given
/// analysis framing. Only frames passing the energy gate in both signals
/// contribute to the error means.
pub fn evaluate_pair_with(
    reference: &FoaSignal,
    candidate: &FoaSignal,
    frame_len: usize,
    hop: usize,
) -> Result<SpatialErrorReport> {
    if reference.sample_rate() != candidate.sample_rate() {
        return Err(AmbioError::SampleRateMismatch {
            a: reference.sample_rate(),
            b: candidate.sample_rate(),
        });
    }
    if reference.len() != candidate.len() {
        return Err(AmbioError::LengthMismatch {
            a: reference.len(),
            b: candidate.len(),
        });
    }
    let ref_track = estimate_doa(reference, frame_len, hop)?;
    let cand_track = estimate_doa(candidate, frame_len, hop)?;

    let mut ref_az = Vec::new();
    let mut ref_el = Vec::new();
    let mut cand_az = Vec::new();
    let mut cand_el = Vec::new();
    let mut angle_sum = 0.0;
    for (rf, cf) in ref_track.frames().iter().zip(cand_track.frames()) {
        if let (Some((ra, re)), Some((ca, ce))) = (rf.angles_deg, cf.angles_deg) {
            ref_az.push(ra);
            ref_el.push(re);
            cand_az.push(ca);
            cand_el.push(ce);
            let rp = SphericalPosition::new(ra, re).expect("estimates are wrapped and clamped");
            let cp = SphericalPosition::new(ca, ce).expect("estimates are wrapped and clamped");
            angle_sum += spatial_angle(rp, cp);
        }
    }
    if ref_az.is_empty() {
        return Err(AmbioError::NoValidFrames);
    }
    Ok(SpatialErrorReport {
        l1_azimuth_deg: circular_l1(&ref_az, &cand_az)?,
        l1_elevation_deg: linear_l1(&ref_el, &cand_el)?,
        mean_spatial_angle_deg: angle_sum / ref_az.len() as f64,
        valid_frame_fraction: ref_az.len() as f64 / ref_track.frame_count() as f64,
    })
}

/// [`evaluate_pair_with`] under the default 512/256 framing.
pub fn evaluate_pair(reference: &FoaSignal, candidate: &FoaSignal) -> Result<SpatialErrorReport> {
    evaluate_pair_with(reference, candidate, DEFAULT_FRAME_LEN, DEFAULT_HOP)
}
