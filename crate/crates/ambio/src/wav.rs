//! WAV file I/O for B-format and mono signals.
//!
//! B-format files are RIFF/WAV, IEEE float 32-bit, four channels in W, X,
//! Y, Z order. The reader also accepts integer-PCM files (scaled into
//! [-1, 1]) and, via [`read_foa_with_order`], files whose channels follow
//! the ACN ordering (W, Y, Z, X).

use std::path::Path;

use crate::error::{AmbioError, Result};
use crate::foa::{FoaSignal, MonoSignal};

/// Channel layout of a 4-channel input file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ChannelOrder {
    /// W, X, Y, Z — this library's native order.
    #[default]
    Wxyz,
    /// Ambisonic Channel Number order: W, Y, Z, X.
    Acn,
}

fn wav_err(path: &Path, reason: hound::Error) -> AmbioError {
    AmbioError::Wav {
        path: path.to_path_buf(),
        reason,
    }
}

/// Reads all channels of a WAV file as interleaved f64 in [-1, 1] for
/// integer PCM, as-is for float.
fn read_interleaved(path: &Path) -> Result<(Vec<f64>, hound::WavSpec)> {
    let mut reader = hound::WavReader::open(path).map_err(|e| wav_err(path, e))?;
    let spec = reader.spec();
    let samples: Vec<f64> = match spec.sample_format {
        hound::SampleFormat::Float => reader
            .samples::<f32>()
            .map(|s| s.map(f64::from))
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| wav_err(path, e))?,
        hound::SampleFormat::Int => {
            let scale = 1.0 / (1i64 << (spec.bits_per_sample - 1)) as f64;
            reader
                .samples::<i32>()
                .map(|s| s.map(|v| v as f64 * scale))
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| wav_err(path, e))?
        }
    };
    Ok((samples, spec))
}

/// Reads a 4-channel B-format file with the given channel ordering.
pub fn read_foa_with_order(path: &Path, order: ChannelOrder) -> Result<FoaSignal> {
    let (samples, spec) = read_interleaved(path)?;
    if spec.channels != 4 {
        return Err(AmbioError::ChannelCount {
            path: path.to_path_buf(),
            expected: 4,
            got: spec.channels,
        });
    }
    let frames = samples.len() / 4;
    let mut chans: Vec<Vec<f64>> = (0..4).map(|_| Vec::with_capacity(frames)).collect();
    for frame in samples.chunks_exact(4) {
        for (c, &s) in frame.iter().enumerate() {
            chans[c].push(s);
        }
    }
    let [a, b, c, d]: [Vec<f64>; 4] = chans.try_into().expect("four channels");
    let (w, x, y, z) = match order {
        ChannelOrder::Wxyz => (a, b, c, d),
        ChannelOrder::Acn => (a, d, b, c), // file order W, Y, Z, X
    };
    FoaSignal::new(w, x, y, z, spec.sample_rate)
}

/// Reads a W,X,Y,Z-ordered B-format file.
pub fn read_foa(path: &Path) -> Result<FoaSignal> {
    read_foa_with_order(path, ChannelOrder::Wxyz)
}

/// Writes a B-format signal as 4-channel IEEE float 32-bit WAV.
pub fn write_foa(signal: &FoaSignal, path: &Path) -> Result<()> {
    let spec = hound::WavSpec {
        channels: 4,
        sample_rate: signal.sample_rate(),
        bits_per_sample: 32,
        sample_format: hound::SampleFormat::Float,
    };
    let mut writer = hound::WavWriter::create(path, spec).map_err(|e| wav_err(path, e))?;
    for i in 0..signal.len() {
        for &s in &[signal.w()[i], signal.x()[i], signal.y()[i], signal.z()[i]] {
            writer
                .write_sample(s as f32)
                .map_err(|e| wav_err(path, e))?;
        }
    }
    writer.finalize().map_err(|e| wav_err(path, e))?;
    Ok(())
}

/// Reads a mono or stereo file as one mono signal; stereo channels are
/// averaged. Other channel counts are rejected.
pub fn read_mono(path: &Path) -> Result<MonoSignal> {
    let (samples, spec) = read_interleaved(path)?;
    let mono = match spec.channels {
        1 => samples,
        2 => samples
            .chunks_exact(2)
            .map(|p| 0.5 * (p[0] + p[1]))
            .collect(),
        got => {
            return Err(AmbioError::ChannelCount {
                path: path.to_path_buf(),
                expected: 1,
                got,
            })
        }
    };
    MonoSignal::new(mono, spec.sample_rate)
}

/// Writes a mono signal as IEEE float 32-bit WAV.
pub fn write_mono(signal: &MonoSignal, path: &Path) -> Result<()> {
    let spec = hound::WavSpec {
        channels: 1,
        sample_rate: signal.sample_rate(),
        bits_per_sample: 32,
        sample_format: hound::SampleFormat::Float,
    };
    let mut writer = hound::WavWriter::create(path, spec).map_err(|e| wav_err(path, e))?;
    for &s in signal.samples() {
        writer
            .write_sample(s as f32)
            .map_err(|e| wav_err(path, e))?;
    }
    writer.finalize().map_err(|e| wav_err(path, e))?;
    Ok(())
}
