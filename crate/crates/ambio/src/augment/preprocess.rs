//! Normalizes source recordings before spatialization: resample, trim
//! leading/trailing silence, then loop or truncate to a fixed clip length.

use crate::augment::resample::resample;
use crate::error::{AmbioError, Result};
use crate::foa::MonoSignal;

/// Settings for [`preprocess_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PreprocessConfig {
    /// Output sample rate in Hz.
    pub target_rate: u32,
    /// Output clip length in seconds.
    pub clip_duration_s: f64,
    /// RMS level below which a window counts as silence, in dBFS.
    pub silence_threshold_dbfs: f64,
    /// Length of the silence-detection window in seconds.
    pub silence_window_s: f64,
}

impl Default for PreprocessConfig {
    fn default() -> Self {
        Self {
            target_rate: 16_000,
            clip_duration_s: 10.0,
            silence_threshold_dbfs: -40.0,
            silence_window_s: 0.010,
        }
    }
}

impl PreprocessConfig {
    /// Output length in samples.
    pub fn clip_samples(&self) -> usize {
        (self.clip_duration_s * self.target_rate as f64).round() as usize
    }
}

/// Removes leading and trailing stretches whose windowed RMS is below
/// `threshold_dbfs`. Trimming works in whole windows of `window_len`
/// samples; the tail window may be shorter. Errors when nothing exceeds
/// the threshold.
pub fn trim_silence(samples: &[f64], window_len: usize, threshold_dbfs: f64) -> Result<Vec<f64>> {
    let window_len = window_len.max(1);
    let threshold_amp = 10f64.powf(threshold_dbfs / 20.0);
    let n_windows = samples.len().div_ceil(window_len);
    let loud = |k: usize| -> bool {
        let start = k * window_len;
        let end = (start + window_len).min(samples.len());
        let sum_sq: f64 = samples[start..end].iter().map(|s| s * s).sum();
        let rms = (sum_sq / (end - start) as f64).sqrt();
        rms > threshold_amp
    };
    let first = match (0..n_windows).find(|&k| loud(k)) {
        Some(k) => k,
        None => return Err(AmbioError::SilentSignal { threshold_dbfs }),
    };
    let last = (0..n_windows)
        .rfind(|&k| loud(k))
        .expect("first loud window exists");
    let start = first * window_len;
    let end = ((last + 1) * window_len).min(samples.len());
    Ok(samples[start..end].to_vec())
}

/// Repeats `samples` end-to-start until at least `target_len`, then cuts to
/// exactly `target_len`.
pub fn loop_or_truncate(samples: &[f64], target_len: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(target_len);
    while out.len() < target_len {
        let take = (target_len - out.len()).min(samples.len());
        out.extend_from_slice(&samples[..take]);
    }
    out
}

/// Full preprocessing: resample to the target rate, trim edge silence,
/// then loop or truncate to the configured clip length.
pub fn preprocess_with(mono: &MonoSignal, config: &PreprocessConfig) -> Result<MonoSignal> {
    let resampled = resample(mono, config.target_rate)?;
    let window_len = (config.silence_window_s * config.target_rate as f64).round() as usize;
    let trimmed = trim_silence(
        resampled.samples(),
        window_len.max(1),
        config.silence_threshold_dbfs,
    )?;
    let fixed = loop_or_truncate(&trimmed, config.clip_samples());
    MonoSignal::new(fixed, config.target_rate)
}

/// [`preprocess_with`] under the defaults: 16 kHz, 10 s, -40 dBFS over
/// 10 ms windows.
pub fn preprocess(mono: &MonoSignal) -> Result<MonoSignal> {
    preprocess_with(mono, &PreprocessConfig::default())
}
