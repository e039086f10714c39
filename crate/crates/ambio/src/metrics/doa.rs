//! Direction-of-arrival estimation from acoustic intensity vectors.
//!
//! The instantaneous intensity vector of a B-format signal is the product of
//! the pressure channel with each velocity-proxy channel: `(W·X, W·Y, W·Z)`.
//! Summed over an analysis frame it points at the source, giving
//!
//! ```text
//! azimuth   = atan2(sum I_y, sum I_x)
//! elevation = atan2(sum I_z, sqrt((sum I_x)^2 + (sum I_y)^2))
//! ```
//!
//! Frames whose mean W-channel energy falls below a gate relative to the
//! loudest frame are marked invalid and carry no angle estimate.

use crate::error::{AmbioError, Result};
use crate::foa::{wrap_azimuth_deg, FoaSignal};

/// Default analysis frame length in samples (32 ms at 16 kHz).
pub const DEFAULT_FRAME_LEN: usize = 512;
/// Default hop between frame starts in samples (50% overlap).
pub const DEFAULT_HOP: usize = 256;
/// A frame is invalid when its mean W² is below this fraction of the
/// loudest frame's mean W².
pub const ENERGY_GATE_RATIO: f64 = 1e-6;

/// Per-sample acoustic intensity vectors `[I_x, I_y, I_z]`.
pub fn intensity_vectors(foa: &FoaSignal) -> Vec<[f64; 3]> {
    let (w, x, y, z) = (foa.w(), foa.x(), foa.y(), foa.z());
    (0..foa.len())
        .map(|i| [w[i] * x[i], w[i] * y[i], w[i] * z[i]])
        .collect()
}

/// One analysis frame of a [`DoaTrack`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DoaFrame {
    /// `(azimuth_deg, elevation_deg)`; `None` when the energy gate failed.
    pub angles_deg: Option<(f64, f64)>,
    /// Mean W² over the frame (nominal frame length in the denominator, so
    /// a partial final frame is treated as zero-padded).
    pub mean_w_sq: f64,
}

impl DoaFrame {
    pub fn is_valid(&self) -> bool {
        self.angles_deg.is_some()
    }
}

/// Frame-wise direction-of-arrival estimates for one signal.
#[derive(Debug, Clone, PartialEq)]
pub struct DoaTrack {
    frames: Vec<DoaFrame>,
    frame_len: usize,
    hop: usize,
    sample_rate: u32,
}

impl DoaTrack {
    pub fn frames(&self) -> &[DoaFrame] {
        &self.frames
    }

    pub fn frame_count(&self) -> usize {
        self.frames.len()
    }

    pub fn valid_frame_count(&self) -> usize {
        self.frames.iter().filter(|f| f.is_valid()).count()
    }

    pub fn valid_fraction(&self) -> f64 {
        if self.frames.is_empty() {
            return 0.0;
        }
        self.valid_frame_count() as f64 / self.frames.len() as f64
    }

    pub fn frame_len(&self) -> usize {
        self.frame_len
    }

    pub fn hop(&self) -> usize {
        self.hop
    }

    pub fn sample_rate(&self) -> u32 {
        self.sample_rate
    }

    /// Start time of frame `k` in seconds.
    pub fn frame_start_s(&self, k: usize) -> f64 {
        (k * self.hop) as f64 / self.sample_rate as f64
    }

    /// Center time of frame `k` in seconds (nominal frame extent).
    pub fn frame_center_s(&self, k: usize) -> f64 {
        (k * self.hop) as f64 / self.sample_rate as f64
            + self.frame_len as f64 / (2.0 * self.sample_rate as f64)
    }
}

/// Estimates per-frame DoA with the given framing. Frames start every `hop`
/// samples; the last frames may extend past the signal and are treated as
/// zero-padded, so appending digital silence never changes an existing
/// frame's estimate.
pub fn estimate_doa(foa: &FoaSignal, frame_len: usize, hop: usize) -> Result<DoaTrack> {
    if frame_len == 0 || hop == 0 {
        return Err(AmbioError::InvalidFraming { frame_len, hop });
    }
    let len = foa.len();
    let n_frames = len.div_ceil(hop);
    let (w, x, y, z) = (foa.w(), foa.x(), foa.y(), foa.z());

    let mut sums = Vec::with_capacity(n_frames);
    let mut max_energy = 0.0f64;
    for k in 0..n_frames {
        let start = k * hop;
        let end = (start + frame_len).min(len);
        let (mut ix, mut iy, mut iz, mut ww) = (0.0, 0.0, 0.0, 0.0);
        for i in start..end {
            ix += w[i] * x[i];
            iy += w[i] * y[i];
            iz += w[i] * z[i];
            ww += w[i] * w[i];
        }
        let mean_w_sq = ww / frame_len as f64;
        max_energy = max_energy.max(mean_w_sq);
        sums.push((ix, iy, iz, mean_w_sq));
    }

    let gate = ENERGY_GATE_RATIO * max_energy;
    let frames = sums
        .into_iter()
        .map(|(ix, iy, iz, mean_w_sq)| {
            let valid = max_energy > 0.0 && mean_w_sq >= gate;
            let angles_deg = valid.then(|| {
                let az = wrap_azimuth_deg(iy.atan2(ix).to_degrees());
                let el = iz.atan2(ix.hypot(iy)).to_degrees().clamp(-90.0, 90.0);
                (az, el)
            });
            DoaFrame {
                angles_deg,
                mean_w_sq,
            }
        })
        .collect();

    Ok(DoaTrack {
        frames,
        frame_len,
        hop,
        sample_rate: foa.sample_rate(),
    })
}

/// [`estimate_doa`] with the default 512-sample frames and 256-sample hop.
pub fn estimate_doa_default(foa: &FoaSignal) -> Result<DoaTrack> {
    estimate_doa(foa, DEFAULT_FRAME_LEN, DEFAULT_HOP)
}

/// Sample-by-sample DoA (frame length and hop of one sample).
pub fn estimate_doa_per_sample(foa: &FoaSignal) -> Result<DoaTrack> {
    estimate_doa(foa, 1, 1)
}
