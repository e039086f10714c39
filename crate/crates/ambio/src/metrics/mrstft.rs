//! Multi-resolution STFT distance between two B-format signals.
//!
//! Per channel, the distance is the sum over three STFT resolutions of a
//! spectral-convergence term and a log-magnitude L1 term:
//!
//! ```text
//! sc     = ||  |X| - |Y|  ||_F / || |X| ||_F
//! logmag = mean | ln(max(|X|, eps)) - ln(max(|Y|, eps)) |
//! ```
//!
//! where `X` is the reference spectrogram. The convergence term is
//! normalized by the reference and is therefore asymmetric; the
//! log-magnitude term is symmetric. A silent reference channel contributes
//! a convergence term of 1 when the candidate differs there and 0 when it
//! matches.

use rustfft::{num_complex::Complex, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::error::{AmbioError, Result};
use crate::foa::FoaSignal;

/// STFT sizes and hops used for the distance: `(fft_size, hop)`.
pub const MRSTFT_RESOLUTIONS: [(usize, usize); 3] = [(2048, 512), (1024, 256), (512, 128)];

const LOG_FLOOR: f64 = 1e-8;

/// Per-channel multi-resolution STFT distances and their mean.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MrstftReport {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
    /// Equal-weight mean of the four channel distances.
    pub mean: f64,
}

/// Computes the multi-resolution STFT distance of each channel of
/// `candidate` against `reference`, plus their mean.
pub fn mrstft_distance(reference: &FoaSignal, candidate: &FoaSignal) -> Result<MrstftReport> {
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
    let mut planner = FftPlanner::new();
    let w = channel_distance(reference.w(), candidate.w(), &mut planner);
    let x = channel_distance(reference.x(), candidate.x(), &mut planner);
    let y = channel_distance(reference.y(), candidate.y(), &mut planner);
    let z = channel_distance(reference.z(), candidate.z(), &mut planner);
    Ok(MrstftReport {
        w,
        x,
        y,
        z,
        mean: (w + x + y + z) / 4.0,
    })
}

fn channel_distance(reference: &[f64], candidate: &[f64], planner: &mut FftPlanner<f64>) -> f64 {
    MRSTFT_RESOLUTIONS
        .iter()
        .map(|&(fft_size, hop)| {
            let ref_mag = stft_magnitudes(reference, fft_size, hop, planner);
            let cand_mag = stft_magnitudes(candidate, fft_size, hop, planner);
            spectral_convergence(&ref_mag, &cand_mag) + log_magnitude_l1(&ref_mag, &cand_mag)
        })
        .sum()
}

fn spectral_convergence(ref_mag: &[f64], cand_mag: &[f64]) -> f64 {
    let mut diff_sq = 0.0;
    let mut ref_sq = 0.0;
    for (&r, &c) in ref_mag.iter().zip(cand_mag) {
        diff_sq += (r - c) * (r - c);
        ref_sq += r * r;
    }
    if ref_sq == 0.0 {
        if diff_sq == 0.0 {
            0.0
        } else {
            1.0
        }
    } else {
        (diff_sq / ref_sq).sqrt()
    }
}

fn log_magnitude_l1(ref_mag: &[f64], cand_mag: &[f64]) -> f64 {
    let sum: f64 = ref_mag
        .iter()
        .zip(cand_mag)
        .map(|(&r, &c)| (r.max(LOG_FLOOR).ln() - c.max(LOG_FLOOR).ln()).abs())
        .sum();
    sum / ref_mag.len() as f64
}

/// One-sided magnitude spectrogram, flattened frame-major. Frames start
/// every `hop` samples; material past the final full frame start is
/// zero-padded into the last frame.
fn stft_magnitudes(
    samples: &[f64],
    fft_size: usize,
    hop: usize,
    planner: &mut FftPlanner<f64>,
) -> Vec<f64> {
    let window: Vec<f64> = (0..fft_size)
        .map(|i| 0.5 - 0.5 * (2.0 * std::f64::consts::PI * i as f64 / fft_size as f64).cos())
        .collect();
    let n_frames = if samples.len() < fft_size {
        1
    } else {
        1 + (samples.len() - fft_size) / hop
    };
    let fft = planner.plan_fft_forward(fft_size);
    let bins = fft_size / 2 + 1;
    let mut out = Vec::with_capacity(n_frames * bins);
    let mut buf = vec![Complex::new(0.0, 0.0); fft_size];
    for k in 0..n_frames {
        let start = k * hop;
        for (i, slot) in buf.iter_mut().enumerate() {
            let s = samples.get(start + i).copied().unwrap_or(0.0);
            *slot = Complex::new(s * window[i], 0.0);
        }
        fft.process(&mut buf);
        out.extend(buf[..bins].iter().map(|c| c.norm()));
    }
    out
}
