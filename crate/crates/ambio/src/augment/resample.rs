//! Offline sample-rate conversion by polyphase windowed-sinc filtering.
//!
//! The conversion ratio is reduced to L/M (upsample by L, downsample by M)
//! and a Kaiser-windowed sinc low-pass at the tighter of the two Nyquist
//! frequencies is applied in polyphase form, so only the needed output
//! samples are computed. Each polyphase branch is normalized to unit DC
//! gain, which makes constant signals pass through unchanged away from the
//! edges. The Kaiser shape parameter targets a stopband of roughly 60 dB.

use crate::error::Result;
use crate::foa::MonoSignal;

/// Kaiser beta for ~60 dB stopband attenuation.
const KAISER_BETA: f64 = 5.65326;

/// Filter half-length per unit of the larger rate factor; total taps are
/// `2 * HALF_LEN_FACTOR * max(L, M) + 1`.
const HALF_LEN_FACTOR: usize = 10;

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Zeroth-order modified Bessel function of the first kind, by power series.
fn bessel_i0(x: f64) -> f64 {
    let half = x / 2.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        term *= (half / k as f64) * (half / k as f64);
        sum += term;
        if term < sum * 1e-17 {
            break;
        }
    }
    sum
}

fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        let px = std::f64::consts::PI * x;
        px.sin() / px
    }
}

/// Polyphase filter bank for one L/M rate conversion.
struct PolyphaseKernel {
    /// `phases[p][d]` multiplies input sample `base - d` for output phase p.
    phases: Vec<Vec<f64>>,
    up: usize,
    down: usize,
    half_len: usize,
}

impl PolyphaseKernel {
    fn design(up: usize, down: usize) -> Self {
        let half_len = HALF_LEN_FACTOR * up.max(down);
        let taps = 2 * half_len + 1;
        // cutoff at the smaller Nyquist, normalized to the upsampled rate
        let cutoff = 0.5 / up.max(down) as f64;
        let i0_beta = bessel_i0(KAISER_BETA);
        let mut h = Vec::with_capacity(taps);
        for n in 0..taps {
            let t = n as f64 - half_len as f64;
            let r = t / half_len as f64;
            let window = bessel_i0(KAISER_BETA * (1.0 - r * r).max(0.0).sqrt()) / i0_beta;
            h.push(2.0 * cutoff * sinc(2.0 * cutoff * t) * window);
        }
        let mut phases: Vec<Vec<f64>> = (0..up)
            .map(|p| h.iter().skip(p).step_by(up).copied().collect())
            .collect();
        for phase in &mut phases {
            let sum: f64 = phase.iter().sum();
            if sum != 0.0 {
                for c in phase.iter_mut() {
                    *c /= sum;
                }
            }
        }
        Self {
            phases,
            up,
            down,
            half_len,
        }
    }

    fn apply(&self, input: &[f64]) -> Vec<f64> {
        let out_len = (input.len() * self.up).div_ceil(self.down);
        let mut out = Vec::with_capacity(out_len);
        for j in 0..out_len {
            // position of output j on the upsampled grid, shifted so the
            // filter center aligns with it (zero group delay)
            let q = j * self.down + self.half_len;
            let phase = q % self.up;
            let base = q / self.up;
            let mut acc = 0.0;
            for (d, &c) in self.phases[phase].iter().enumerate() {
                if d > base {
                    break;
                }
                let idx = base - d;
                if idx < input.len() {
                    acc += c * input[idx];
                }
            }
            out.push(acc);
        }
        out
    }
}

/// Resamples `signal` to `target_rate`. Same-rate input is returned
/// unchanged.
pub fn resample(signal: &MonoSignal, target_rate: u32) -> Result<MonoSignal> {
    if target_rate == signal.sample_rate() {
        return Ok(signal.clone());
    }
    if target_rate == 0 {
        return Err(crate::error::AmbioError::InvalidSampleRate(0));
    }
    let g = gcd(signal.sample_rate(), target_rate);
    let up = (target_rate / g) as usize;
    let down = (signal.sample_rate() / g) as usize;
    let kernel = PolyphaseKernel::design(up, down);
    let out = kernel.apply(signal.samples());
    MonoSignal::new(out, target_rate)
}
