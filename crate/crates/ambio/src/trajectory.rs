//! Angular position of a source over the length of a clip.
//!
//! A trajectory holds a start and end direction, a movement window inside
//! the clip, and a clockwise flag for the azimuth path. Outside the window
//! the position is constant; inside it both angles interpolate linearly.
//! With the library's counter-clockwise-positive azimuth convention,
//! "clockwise" means decreasing azimuth.

use crate::error::{AmbioError, Result};
use crate::foa::{wrap_azimuth_deg, SphericalPosition};

/// Signed azimuth travel from `start_deg` to `end_deg` along the requested
/// direction, in degrees.
///
/// Counter-clockwise paths return `(end - start) mod 360` in [0, 360);
/// clockwise paths return `-((start - end) mod 360)` in (-360, 0]. The
/// result is zero only when the endpoints coincide modulo 360; full-circle
/// rotations are never produced.
pub fn signed_azimuth_delta(start_deg: f64, end_deg: f64, clockwise: bool) -> f64 {
    let raw = if clockwise {
        start_deg - end_deg
    } else {
        end_deg - start_deg
    };
    let d = raw.rem_euclid(360.0);
    if d == 0.0 || d >= 360.0 {
        // d can be -0.0 (raw a negative multiple of 360) or round up to the
        // modulus itself for tiny negative raws; both mean "no travel"
        return 0.0;
    }
    if clockwise {
        -d
    } else {
        d
    }
}

/// A source's angular path over one clip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trajectory {
    start: SphericalPosition,
    end: SphericalPosition,
    clockwise: bool,
    window: Option<(f64, f64)>,
    clip_duration_s: f64,
}

impl Trajectory {
    /// A source that stays at `position` for the whole clip.
    pub fn stationary(position: SphericalPosition, clip_duration_s: f64) -> Result<Self> {
        if !clip_duration_s.is_finite() || clip_duration_s <= 0.0 {
            return Err(AmbioError::InvalidClipDuration(clip_duration_s));
        }
        Ok(Self {
            start: position,
            end: position,
            clockwise: false,
            window: None,
            clip_duration_s,
        })
    }

    /// A source that moves from `start` to `end` over the window
    /// `[move_start_s, move_end_s]`, holding position outside it.
    pub fn new(
        start: SphericalPosition,
        end: SphericalPosition,
        clockwise: bool,
        move_start_s: f64,
        move_end_s: f64,
        clip_duration_s: f64,
    ) -> Result<Self> {
        if !clip_duration_s.is_finite() || clip_duration_s <= 0.0 {
            return Err(AmbioError::InvalidClipDuration(clip_duration_s));
        }
        let window_ok = move_start_s.is_finite()
            && move_end_s.is_finite()
            && 0.0 <= move_start_s
            && move_start_s < move_end_s
            && move_end_s <= clip_duration_s;
        if !window_ok {
            return Err(AmbioError::InvalidWindow {
                start_s: move_start_s,
                end_s: move_end_s,
                clip_s: clip_duration_s,
            });
        }
        Ok(Self {
            start,
            end,
            clockwise,
            window: Some((move_start_s, move_end_s)),
            clip_duration_s,
        })
    }

    pub fn start(&self) -> SphericalPosition {
        self.start
    }

    pub fn end(&self) -> SphericalPosition {
        self.end
    }

    pub fn clockwise(&self) -> bool {
        self.clockwise
    }

    /// `true` when the trajectory carries no movement window.
    pub fn is_static(&self) -> bool {
        self.window.is_none()
    }

    pub fn move_start_s(&self) -> Option<f64> {
        self.window.map(|(s, _)| s)
    }

    pub fn move_end_s(&self) -> Option<f64> {
        self.window.map(|(_, e)| e)
    }

    pub fn clip_duration_s(&self) -> f64 {
        self.clip_duration_s
    }

    /// Signed azimuth travel over the movement window, in degrees.
    pub fn azimuth_delta_deg(&self) -> f64 {
        if self.window.is_none() {
            return 0.0;
        }
        signed_azimuth_delta(
            self.start.azimuth_deg(),
            self.end.azimuth_deg(),
            self.clockwise,
        )
    }

    /// Elevation travel over the movement window, in degrees.
    pub fn elevation_delta_deg(&self) -> f64 {
        if self.window.is_none() {
            return 0.0;
        }
        self.end.elevation_deg() - self.start.elevation_deg()
    }

    /// The position at time `t` seconds into the clip.
    ///
    /// Returns `start` up to the movement window, `end` after it, and the
    /// linear interpolant inside it; the azimuth travels along the signed
    /// path selected by the clockwise flag and is wrapped into (-180, 180].
    pub fn position_at(&self, t: f64) -> Result<SphericalPosition> {
        if !t.is_finite() || t < 0.0 || t > self.clip_duration_s {
            return Err(AmbioError::TimeOutOfRange {
                t,
                clip_s: self.clip_duration_s,
            });
        }
        let (move_start, move_end) = match self.window {
            None => return Ok(self.start),
            Some(w) => w,
        };
        if t <= move_start {
            return Ok(self.start);
        }
        if t >= move_end {
            return Ok(self.end);
        }
        let f = (t - move_start) / (move_end - move_start);
        let azimuth = wrap_azimuth_deg(self.start.azimuth_deg() + f * self.azimuth_delta_deg());
        let elevation =
            (self.start.elevation_deg() + f * self.elevation_delta_deg()).clamp(-90.0, 90.0);
        Ok(SphericalPosition::new(azimuth, elevation)
            .expect("interpolated position is wrapped and clamped"))
    }
}
