//! Maps spatial parameters to caption vocabulary: eight compass-style
//! direction words over azimuth, up/down words at the elevation extremes,
//! and a three-way speed class over movement duration.

use serde::{Deserialize, Serialize};

use crate::error::{AmbioError, Result};
use crate::foa::{wrap_azimuth_deg, SphericalPosition};

/// Azimuth word bins as `(lo, hi]` intervals in degrees. The two `back`
/// rows together cover the wrap at ±180°; the nine rows tile (-180, 180]
/// exactly.
pub const AZIMUTH_BINS: [(f64, f64, &str); 9] = [
    (-22.5, 22.5, "front"),
    (22.5, 67.5, "front-left"),
    (67.5, 112.5, "left"),
    (112.5, 157.5, "back-left"),
    (157.5, 180.0, "back"),
    (-180.0, -157.5, "back"),
    (-157.5, -112.5, "back-right"),
    (-112.5, -67.5, "right"),
    (-67.5, -22.5, "front-right"),
];

/// Elevation band half-width in degrees; sampled elevations stay inside
/// ±[`ELEVATION_RANGE_DEG`].
pub const ELEVATION_RANGE_DEG: f64 = 35.0;
/// Elevations beyond ±[`ELEVATION_WORD_DEG`] get an "up"/"down" word.
pub const ELEVATION_WORD_DEG: f64 = 30.0;

/// The direction word whose bin contains `azimuth_deg` (wrapped first).
pub fn direction_word(azimuth_deg: f64) -> &'static str {
    let az = wrap_azimuth_deg(azimuth_deg);
    for &(lo, hi, word) in &AZIMUTH_BINS {
        if az > lo && az <= hi {
            return word;
        }
    }
    // unreachable: the bins tile (-180, 180] and az is wrapped
    "front"
}

/// "up" above +30°, "down" below -30°, nothing in between.
pub fn elevation_word(elevation_deg: f64) -> Option<&'static str> {
    if elevation_deg > ELEVATION_WORD_DEG {
        Some("up")
    } else if elevation_deg < -ELEVATION_WORD_DEG {
        Some("down")
    } else {
        None
    }
}

/// Direction word plus optional elevation word, e.g. "front" or
/// "back-left up".
pub fn location_phrase(position: SphericalPosition) -> String {
    match elevation_word(position.elevation_deg()) {
        Some(e) => format!("{} {}", direction_word(position.azimuth_deg()), e),
        None => direction_word(position.azimuth_deg()).to_string(),
    }
}

/// Movement speed class; `None` marks a static sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpeedClass {
    Fast,
    Moderate,
    Slow,
    None,
}

impl SpeedClass {
    /// Caption word, absent for static samples.
    pub fn word(self) -> Option<&'static str> {
        match self {
            SpeedClass::Fast => Some("fast"),
            SpeedClass::Moderate => Some("moderate"),
            SpeedClass::Slow => Some("slow"),
            SpeedClass::None => None,
        }
    }

    /// Movement-duration range `(lo, hi)` in seconds for sampling.
    pub fn duration_range_s(self) -> Option<(f64, f64)> {
        match self {
            SpeedClass::Fast => Some((1.0, 3.0)),
            SpeedClass::Moderate => Some((3.5, 6.5)),
            SpeedClass::Slow => Some((7.0, 10.0)),
            SpeedClass::None => None,
        }
    }

    /// Classifies a movement duration. Durations inside a bin map to it;
    /// the table leaves gaps at 3.0–3.5 s and 6.5–7.0 s, which go to the
    /// nearest bin with midpoint ties resolved to the slower class.
    pub fn classify(duration_s: f64) -> SpeedClass {
        if duration_s < 3.25 {
            SpeedClass::Fast
        } else if duration_s < 6.75 {
            SpeedClass::Moderate
        } else {
            SpeedClass::Slow
        }
    }
}

/// Caption vocabulary extracted from one sample's spatial parameters. For
/// static samples only `start_location` is set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhraseSet {
    pub start_location: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub end_location: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub speed: Option<String>,
}

/// Builds the phrase set for a sample. Pass `end = None` for static
/// samples; dynamic samples supply their endpoint and speed class.
pub fn map_to_language(
    start: SphericalPosition,
    end: Option<SphericalPosition>,
    speed_class: SpeedClass,
) -> PhraseSet {
    PhraseSet {
        start_location: location_phrase(start),
        end_location: end.map(location_phrase),
        speed: speed_class.word().map(str::to_string),
    }
}

/// Renders the deterministic caption template:
/// `"<original>, coming from the <loc>"` for static samples and
/// `"<original>, moving <speed> from the <loc> to the <loc>"` for dynamic
/// ones. The original caption must be non-empty.
pub fn compose_caption(original_caption: &str, phrases: &PhraseSet) -> Result<String> {
    let original = original_caption.trim();
    if original.is_empty() {
        return Err(AmbioError::EmptyCaption);
    }
    Ok(match (&phrases.end_location, &phrases.speed) {
        (None, _) => format!("{}, coming from the {}", original, phrases.start_location),
        (Some(end), Some(speed)) => format!(
            "{}, moving {} from the {} to the {}",
            original, speed, phrases.start_location, end
        ),
        (Some(end), None) => format!(
            "{}, moving from the {} to the {}",
            original, phrases.start_location, end
        ),
    })
}
