use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by this crate.
#[derive(Debug, Error)]
pub enum AmbioError {
    #[error("signal is empty")]
    EmptySignal,
    #[error("non-finite sample at index {index}")]
    NonFiniteSample { index: usize },
    #[error("invalid sample rate {0} Hz")]
    InvalidSampleRate(u32),
    #[error("elevation {0} degrees outside [-90, 90]")]
    ElevationOutOfRange(f64),
    #[error("angle must be finite, got {0}")]
    NonFiniteAngle(f64),
    #[error("FOA channel lengths differ: w={w}, x={x}, y={y}, z={z}")]
    ChannelLengthMismatch {
        w: usize,
        x: usize,
        y: usize,
        z: usize,
    },
    #[error("signal holds {signal_samples} samples but the trajectory clip is {clip_s} s at {sample_rate} Hz")]
    DurationMismatch {
        signal_samples: usize,
        clip_s: f64,
        sample_rate: u32,
    },
    #[error("time {t} s outside clip [0, {clip_s}] s")]
    TimeOutOfRange { t: f64, clip_s: f64 },
    #[error("invalid movement window [{start_s}, {end_s}] for a {clip_s} s clip")]
    InvalidWindow {
        start_s: f64,
        end_s: f64,
        clip_s: f64,
    },
    #[error("invalid clip duration {0} s")]
    InvalidClipDuration(f64),
    #[error("signal is entirely silent at the {threshold_dbfs} dBFS trim threshold")]
    SilentSignal { threshold_dbfs: f64 },
    #[error("{path}: expected {expected} channels, file has {got}")]
    ChannelCount {
        path: PathBuf,
        expected: u16,
        got: u16,
    },
    #[error("sample rates differ: {a} Hz vs {b} Hz")]
    SampleRateMismatch { a: u32, b: u32 },
    #[error("sequence lengths differ: {a} vs {b}")]
    LengthMismatch { a: usize, b: usize },
    #[error("no mutually valid frames to compare")]
    NoValidFrames,
    #[error("empty angle sequences")]
    EmptyAngleSequence,
    #[error("state matrix needs at least 2 bins, got {0}")]
    InvalidBins(usize),
    #[error("state matrix needs at least 1 frame, got {0}")]
    InvalidFrameCount(usize),
    #[error("DoA framing needs frame_len >= 1 and hop >= 1, got frame_len={frame_len}, hop={hop}")]
    InvalidFraming { frame_len: usize, hop: usize },
    #[error("caption is empty")]
    EmptyCaption,
    #[error("invalid source id {0:?}: allowed characters are A-Z a-z 0-9 . _ -")]
    InvalidSourceId(String),
    #[error("duplicate source id {0:?} in manifest")]
    DuplicateSourceId(String),
    #[error("manifest {path} line {line}: {message}")]
    Manifest {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("invalid sample record: {0}")]
    InvalidRecord(String),
    #[error("malformed .smx stream: {0}")]
    MalformedSmx(String),
    #[error("{path}: {reason}")]
    Wav { path: PathBuf, reason: hound::Error },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, AmbioError>;
