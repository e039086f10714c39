//! One-hot position-vs-time state matrices for conditioning a generative
//! model on a source trajectory.
//!
//! A state matrix has one row per angle bin and one column per time step.
//! Time steps lie on an inclusive uniform grid over the clip — the first
//! column samples t = 0 and the last samples t = clip end — so the
//! endpoint bins always reflect the trajectory's start and end positions
//! exactly. Azimuth bins tile (-180°, 180°] starting at -180°; elevation
//! bins tile [-35°, 35°]. The azimuth and elevation matrices concatenate
//! row-wise into one conditioning tensor.

use std::fs;
use std::io::{Read as _, Write as _};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{AmbioError, Result};
use crate::trajectory::Trajectory;

/// Default azimuth bin count (5° bins over 360°).
pub const DEFAULT_AZIMUTH_BINS: usize = 72;
/// Default elevation bin count (5° bins over [-35°, 35°]).
pub const DEFAULT_ELEVATION_BINS: usize = 14;
/// Default number of time steps over a clip.
pub const DEFAULT_FRAMES: usize = 100;

/// Which angle a state matrix quantizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConditioningAxis {
    Azimuth,
    Elevation,
}

impl ConditioningAxis {
    /// Full angular range `(min, max)` covered by this axis's bins.
    pub fn range_deg(self) -> (f64, f64) {
        match self {
            ConditioningAxis::Azimuth => (-180.0, 180.0),
            ConditioningAxis::Elevation => (-35.0, 35.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ConditioningAxis::Azimuth => "azimuth",
            ConditioningAxis::Elevation => "elevation",
        }
    }
}

/// Time of step `k` on the inclusive grid over `[0, clip]`. One single
/// frame samples t = 0.
fn grid_time_s(clip_duration_s: f64, frames: usize, k: usize) -> f64 {
    if frames == 1 {
        0.0
    } else {
        (clip_duration_s * k as f64 / (frames - 1) as f64).min(clip_duration_s)
    }
}

fn quantize(value_deg: f64, axis_min: f64, bin_width: f64, bins: usize) -> usize {
    let idx = ((value_deg - axis_min) / bin_width).floor();
    if idx < 0.0 {
        0
    } else {
        (idx as usize).min(bins - 1)
    }
}

/// A bins × frames one-hot matrix marking the quantized position of a
/// source at each time step.
#[derive(Debug, Clone, PartialEq)]
pub struct StateMatrix {
    axis: ConditioningAxis,
    bins: usize,
    /// Occupied bin per time step; exactly one per column by construction.
    hot: Vec<usize>,
    bin_width_deg: f64,
    frame_rate_hz: f64,
}

impl StateMatrix {
    /// Quantizes `trajectory` on `axis` into a one-hot matrix of shape
    /// `(bins, frames)`.
    pub fn build(
        trajectory: &Trajectory,
        axis: ConditioningAxis,
        bins: usize,
        frames: usize,
    ) -> Result<Self> {
        if bins < 2 {
            return Err(AmbioError::InvalidBins(bins));
        }
        if frames == 0 {
            return Err(AmbioError::InvalidFrameCount(frames));
        }
        let (axis_min, axis_max) = axis.range_deg();
        let bin_width = (axis_max - axis_min) / bins as f64;
        let clip = trajectory.clip_duration_s();
        let mut hot = Vec::with_capacity(frames);
        for k in 0..frames {
            let t = grid_time_s(clip, frames, k);
            let position = trajectory.position_at(t)?;
            let value = match axis {
                ConditioningAxis::Azimuth => position.azimuth_deg(),
                ConditioningAxis::Elevation => position.elevation_deg(),
            };
            hot.push(quantize(value, axis_min, bin_width, bins));
        }
        let frame_rate_hz = if frames == 1 {
            0.0
        } else {
            (frames - 1) as f64 / clip
        };
        Ok(Self {
            axis,
            bins,
            hot,
            bin_width_deg: bin_width,
            frame_rate_hz,
        })
    }

    pub fn axis(&self) -> ConditioningAxis {
        self.axis
    }

    pub fn bins(&self) -> usize {
        self.bins
    }

    pub fn frames(&self) -> usize {
        self.hot.len()
    }

    pub fn bin_width_deg(&self) -> f64 {
        self.bin_width_deg
    }

    /// Grid rate in Hz: `(frames - 1) / clip seconds`; 0 for a single frame.
    pub fn frame_rate_hz(&self) -> f64 {
        self.frame_rate_hz
    }

    /// Occupied bin index per time step.
    pub fn hot_bins(&self) -> &[usize] {
        &self.hot
    }

    /// Dense row-major `(bins, frames)` expansion with exactly one 1 per
    /// column.
    pub fn dense(&self) -> Vec<f32> {
        let mut out = vec![0.0f32; self.bins * self.hot.len()];
        for (frame, &bin) in self.hot.iter().enumerate() {
            out[bin * self.hot.len() + frame] = 1.0;
        }
        out
    }
}

/// Azimuth and elevation state matrices over a shared time grid,
/// concatenated row-wise (azimuth rows first) for serialization.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditioningTensor {
    pub azimuth: StateMatrix,
    pub elevation: StateMatrix,
}

impl ConditioningTensor {
    pub fn build(
        trajectory: &Trajectory,
        az_bins: usize,
        el_bins: usize,
        frames: usize,
    ) -> Result<Self> {
        Ok(Self {
            azimuth: StateMatrix::build(trajectory, ConditioningAxis::Azimuth, az_bins, frames)?,
            elevation: StateMatrix::build(
                trajectory,
                ConditioningAxis::Elevation,
                el_bins,
                frames,
            )?,
        })
    }

    /// `(az_bins + el_bins, frames)`.
    pub fn shape(&self) -> (usize, usize) {
        (
            self.azimuth.bins() + self.elevation.bins(),
            self.azimuth.frames(),
        )
    }

    /// Row-major dense concatenation; every column sums to exactly 2.
    pub fn dense(&self) -> Vec<f32> {
        let mut out = self.azimuth.dense();
        out.extend(self.elevation.dense());
        out
    }
}

/// Movement timing summary: `(move_start_s, total_move_s)`; both 0 for a
/// static trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TemporalConditions {
    pub move_start_s: f64,
    pub total_move_s: f64,
}

/// Extracts the temporal conditioning values from a trajectory.
pub fn temporal_conditions(trajectory: &Trajectory) -> TemporalConditions {
    match (trajectory.move_start_s(), trajectory.move_end_s()) {
        (Some(start), Some(end)) => TemporalConditions {
            move_start_s: start,
            total_move_s: end - start,
        },
        _ => TemporalConditions {
            move_start_s: 0.0,
            total_move_s: 0.0,
        },
    }
}

/// JSON header line of a `.smx` file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SmxHeader {
    /// `(rows, frames)` of the flat payload.
    pub shape: [usize; 2],
    /// Axis names in row order.
    pub axes: Vec<String>,
    /// Bin width per axis, degrees.
    pub bin_width_deg: Vec<f64>,
    /// Time-grid rate in Hz (steps are `1 / frame_rate_hz` apart).
    pub frame_rate_hz: f64,
    /// `(min, max)` degrees per axis.
    pub ranges: Vec<[f64; 2]>,
}

/// Writes a conditioning tensor as a `.smx` file: one JSON header line,
/// a newline, then the dense row-major matrix as little-endian f32.
pub fn write_smx(tensor: &ConditioningTensor, path: &Path) -> Result<()> {
    let (rows, frames) = tensor.shape();
    let header = SmxHeader {
        shape: [rows, frames],
        axes: vec![
            tensor.azimuth.axis().name().to_string(),
            tensor.elevation.axis().name().to_string(),
        ],
        bin_width_deg: vec![
            tensor.azimuth.bin_width_deg(),
            tensor.elevation.bin_width_deg(),
        ],
        frame_rate_hz: tensor.azimuth.frame_rate_hz(),
        ranges: vec![
            {
                let (lo, hi) = tensor.azimuth.axis().range_deg();
                [lo, hi]
            },
            {
                let (lo, hi) = tensor.elevation.axis().range_deg();
                [lo, hi]
            },
        ],
    };
    let mut file = fs::File::create(path)?;
    let header_line = serde_json::to_string(&header)?;
    file.write_all(header_line.as_bytes())?;
    file.write_all(b"\n")?;
    let mut payload = Vec::with_capacity(rows * frames * 4);
    for v in tensor.dense() {
        payload.extend_from_slice(&v.to_le_bytes());
    }
    file.write_all(&payload)?;
    Ok(())
}

/// Reads a `.smx` file back into its header and dense row-major values.
pub fn read_smx(path: &Path) -> Result<(SmxHeader, Vec<f32>)> {
    let mut file = fs::File::open(path)?;
    let mut bytes = Vec::new();
    file.read_to_end(&mut bytes)?;
    let newline = bytes
        .iter()
        .position(|&b| b == b'\n')
        .ok_or_else(|| AmbioError::MalformedSmx("missing header line".into()))?;
    let header: SmxHeader = serde_json::from_slice(&bytes[..newline])
        .map_err(|e| AmbioError::MalformedSmx(format!("bad header: {e}")))?;
    let payload = &bytes[newline + 1..];
    let expected = header.shape[0] * header.shape[1] * 4;
    if payload.len() != expected {
        return Err(AmbioError::MalformedSmx(format!(
            "payload is {} bytes, header shape needs {}",
            payload.len(),
            expected
        )));
    }
    let values = payload
        .chunks_exact(4)
        .map(|c| f32::from_le_bytes(c.try_into().expect("chunk of 4")))
        .collect();
    Ok((header, values))
}
