//! Sample containers for mono pressure signals and first-order Ambisonics
//! B-format signals.
//!
//! Samples are held as `f64` throughout the library; narrowing to 32-bit
//! floats happens only at file I/O.

use crate::error::{AmbioError, Result};

fn check_finite(samples: &[f64]) -> Result<()> {
    for (index, s) in samples.iter().enumerate() {
        if !s.is_finite() {
            return Err(AmbioError::NonFiniteSample { index });
        }
    }
    Ok(())
}

/// A mono pressure signal at a fixed sample rate.
#[derive(Debug, Clone, PartialEq)]
pub struct MonoSignal {
    samples: Vec<f64>,
    sample_rate: u32,
}

impl MonoSignal {
    /// Wraps raw samples, rejecting empty input, a zero sample rate, and
    /// non-finite values.
    pub fn new(samples: Vec<f64>, sample_rate: u32) -> Result<Self> {
        if samples.is_empty() {
            return Err(AmbioError::EmptySignal);
        }
        if sample_rate == 0 {
            return Err(AmbioError::InvalidSampleRate(sample_rate));
        }
        check_finite(&samples)?;
        Ok(Self {
            samples,
            sample_rate,
        })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn sample_rate(&self) -> u32 {
        self.sample_rate
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn duration_s(&self) -> f64 {
        self.samples.len() as f64 / self.sample_rate as f64
    }

    pub fn into_samples(self) -> Vec<f64> {
        self.samples
    }
}

/// A first-order Ambisonics B-format signal with channels ordered W, X, Y, Z.
///
/// W is the omnidirectional pressure channel scaled by 1/sqrt(2); X, Y and Z
/// carry the front/back, left/right and up/down components. All four channels
/// have identical length and share one sample rate.
#[derive(Debug, Clone, PartialEq)]
pub struct FoaSignal {
    w: Vec<f64>,
    x: Vec<f64>,
    y: Vec<f64>,
    z: Vec<f64>,
    sample_rate: u32,
}

impl FoaSignal {
    pub fn new(
        w: Vec<f64>,
        x: Vec<f64>,
        y: Vec<f64>,
        z: Vec<f64>,
        sample_rate: u32,
    ) -> Result<Self> {
        if w.is_empty() {
            return Err(AmbioError::EmptySignal);
        }
        if sample_rate == 0 {
            return Err(AmbioError::InvalidSampleRate(sample_rate));
        }
        if w.len() != x.len() || w.len() != y.len() || w.len() != z.len() {
            return Err(AmbioError::ChannelLengthMismatch {
                w: w.len(),
                x: x.len(),
                y: y.len(),
                z: z.len(),
            });
        }
        check_finite(&w)?;
        check_finite(&x)?;
        check_finite(&y)?;
        check_finite(&z)?;
        Ok(Self {
            w,
            x,
            y,
            z,
            sample_rate,
        })
    }

    pub fn w(&self) -> &[f64] {
        &self.w
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    pub fn z(&self) -> &[f64] {
        &self.z
    }

    pub fn sample_rate(&self) -> u32 {
        self.sample_rate
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    pub fn duration_s(&self) -> f64 {
        self.w.len() as f64 / self.sample_rate as f64
    }
}
