//! Per-sample metadata records and the input-manifest schema.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::augment::language::{compose_caption, map_to_language, PhraseSet, SpeedClass};
use crate::error::{AmbioError, Result};
use crate::foa::SphericalPosition;
use crate::trajectory::Trajectory;

/// Angle and channel conventions embedded in every record so downstream
/// consumers cannot misread the clockwise flag or channel order.
pub const ANGLE_CONVENTION: &str = "azimuth degrees counter-clockwise positive from front, \
wrapped to (-180, 180]; clockwise means decreasing azimuth; elevation degrees positive up; \
channels ordered W,X,Y,Z";

/// Whether a sample holds still or moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleKind {
    Static,
    Dynamic,
}

impl SampleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SampleKind::Static => "static",
            SampleKind::Dynamic => "dynamic",
        }
    }
}

/// One line of the input manifest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub source_id: String,
    pub audio_path: String,
    pub caption: String,
}

/// Sidecar metadata for one generated spatial sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpatialSampleRecord {
    pub source_id: String,
    pub kind: SampleKind,
    /// Generated audio file, relative to the output manifest's directory.
    pub audio_path: String,
    pub start_azimuth_deg: f64,
    pub start_elevation_deg: f64,
    pub end_azimuth_deg: f64,
    pub end_elevation_deg: f64,
    /// True when the azimuth path decreases; always false for static
    /// samples and for dynamic samples whose azimuth does not move.
    pub clockwise: bool,
    pub speed_class: SpeedClass,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub move_start_s: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub move_end_s: Option<f64>,
    pub clip_duration_s: f64,
    pub sample_rate_hz: u32,
    pub original_caption: String,
    /// Deterministic template caption; empty when the source had no caption.
    pub spatial_caption: String,
    /// Vocabulary for external caption rephrasing.
    pub phrases: PhraseSet,
    /// Exact per-sample RNG seed; replaying it regenerates the parameters.
    pub rng_seed: u64,
    pub convention: String,
}

impl SpatialSampleRecord {
    /// Builds the record describing one rendered sample: angles come from
    /// the trajectory, phrase set and spatial caption from the language
    /// mapping. An empty original caption yields an empty spatial caption
    /// while the phrase set is still populated.
    #[allow(clippy::too_many_arguments)]
    pub fn describe(
        source_id: &str,
        audio_path: String,
        original_caption: &str,
        kind: SampleKind,
        trajectory: &Trajectory,
        speed_class: SpeedClass,
        sample_rate_hz: u32,
        rng_seed: u64,
    ) -> Result<Self> {
        let phrases = match kind {
            SampleKind::Static => map_to_language(trajectory.start(), None, SpeedClass::None),
            SampleKind::Dynamic => {
                map_to_language(trajectory.start(), Some(trajectory.end()), speed_class)
            }
        };
        let spatial_caption = if original_caption.trim().is_empty() {
            String::new()
        } else {
            compose_caption(original_caption, &phrases)?
        };
        Ok(Self {
            source_id: source_id.to_string(),
            kind,
            audio_path,
            start_azimuth_deg: trajectory.start().azimuth_deg(),
            start_elevation_deg: trajectory.start().elevation_deg(),
            end_azimuth_deg: trajectory.end().azimuth_deg(),
            end_elevation_deg: trajectory.end().elevation_deg(),
            clockwise: trajectory.clockwise(),
            speed_class,
            move_start_s: trajectory.move_start_s(),
            move_end_s: trajectory.move_end_s(),
            clip_duration_s: trajectory.clip_duration_s(),
            sample_rate_hz,
            original_caption: original_caption.to_string(),
            spatial_caption,
            phrases,
            rng_seed,
            convention: ANGLE_CONVENTION.to_string(),
        })
    }

    /// Rebuilds the trajectory this record was rendered from.
    pub fn trajectory(&self) -> Result<Trajectory> {
        let start = SphericalPosition::new(self.start_azimuth_deg, self.start_elevation_deg)?;
        let end = SphericalPosition::new(self.end_azimuth_deg, self.end_elevation_deg)?;
        match self.kind {
            SampleKind::Static => Trajectory::stationary(start, self.clip_duration_s),
            SampleKind::Dynamic => {
                let (ms, me) = match (self.move_start_s, self.move_end_s) {
                    (Some(ms), Some(me)) => (ms, me),
                    _ => {
                        return Err(AmbioError::InvalidRecord(format!(
                            "dynamic record {} lacks a movement window",
                            self.source_id
                        )))
                    }
                };
                Trajectory::new(start, end, self.clockwise, ms, me, self.clip_duration_s)
            }
        }
    }

    /// Writes the record as a pretty-printed JSON sidecar.
    pub fn write_json(&self, path: &Path) -> Result<()> {
        let mut body = serde_json::to_string_pretty(self)?;
        body.push('\n');
        fs::write(path, body)?;
        Ok(())
    }

    /// Reads a sidecar written by [`SpatialSampleRecord::write_json`].
    pub fn read_json(path: &Path) -> Result<Self> {
        let body = fs::read_to_string(path)?;
        Ok(serde_json::from_str(&body)?)
    }
}

/// Source identifiers may use ASCII letters, digits, dot, underscore, and
/// hyphen; they become file names.
pub fn validate_source_id(source_id: &str) -> Result<()> {
    let ok = !source_id.is_empty()
        && source_id
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '.' | '_' | '-'));
    if ok {
        Ok(())
    } else {
        Err(AmbioError::InvalidSourceId(source_id.to_string()))
    }
}

/// Reads a JSON-lines manifest of [`ManifestEntry`] values. Blank lines are
/// skipped; a malformed line aborts with its line number.
pub fn read_manifest(path: &Path) -> Result<Vec<ManifestEntry>> {
    let body = fs::read_to_string(path).map_err(|e| AmbioError::Manifest {
        path: path.to_path_buf(),
        line: 0,
        message: e.to_string(),
    })?;
    let mut entries = Vec::new();
    for (i, line) in body.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let entry: ManifestEntry =
            serde_json::from_str(line).map_err(|e| AmbioError::Manifest {
                path: path.to_path_buf(),
                line: i + 1,
                message: e.to_string(),
            })?;
        entries.push(entry);
    }
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dynamic_record() -> SpatialSampleRecord {
        SpatialSampleRecord {
            source_id: "dog_bark.01".into(),
            kind: SampleKind::Dynamic,
            audio_path: "dog_bark.01.dynamic.wav".into(),
            start_azimuth_deg: 10.0,
            start_elevation_deg: 0.0,
            end_azimuth_deg: 120.0,
            end_elevation_deg: 0.0,
            clockwise: false,
            speed_class: SpeedClass::Fast,
            move_start_s: Some(2.0),
            move_end_s: Some(4.0),
            clip_duration_s: 10.0,
            sample_rate_hz: 16_000,
            original_caption: "a dog barks".into(),
            spatial_caption: "a dog barks, moving fast from the front to the left".into(),
            phrases: PhraseSet {
                start_location: "front".into(),
                end_location: Some("left".into()),
                speed: Some("fast".into()),
            },
            rng_seed: 42,
            convention: ANGLE_CONVENTION.into(),
        }
    }

    #[test]
    fn record_round_trips_through_json() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("r.json");
        let record = dynamic_record();
        record.write_json(&path).unwrap();
        assert_eq!(SpatialSampleRecord::read_json(&path).unwrap(), record);
    }

    #[test]
    fn trajectory_rebuild_matches_fields() {
        let t = dynamic_record().trajectory().unwrap();
        assert_eq!(t.start().azimuth_deg(), 10.0);
        assert_eq!(t.end().azimuth_deg(), 120.0);
        assert_eq!(t.move_start_s(), Some(2.0));
        assert_eq!(t.move_end_s(), Some(4.0));
        assert!(!t.is_static());
    }

    #[test]
    fn dynamic_record_without_window_is_invalid() {
        let mut r = dynamic_record();
        r.move_start_s = None;
        assert!(matches!(r.trajectory(), Err(AmbioError::InvalidRecord(_))));
    }

    #[test]
    fn source_id_charset() {
        assert!(validate_source_id("abc.DEF_01-x").is_ok());
        assert!(validate_source_id("").is_err());
        assert!(validate_source_id("a b").is_err());
        assert!(validate_source_id("a/b").is_err());
        assert!(validate_source_id("naïve").is_err());
    }

    #[test]
    fn manifest_parses_and_reports_bad_lines() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.jsonl");
        fs::write(
            &path,
            "{\"source_id\":\"a\",\"audio_path\":\"a.wav\",\"caption\":\"water\"}\n\n\
             {\"source_id\":\"b\",\"audio_path\":\"b.wav\",\"caption\":\"wind\"}\n",
        )
        .unwrap();
        let entries = read_manifest(&path).unwrap();
        assert_eq!(entries.len(), 2);
        assert_eq!(entries[1].source_id, "b");

        fs::write(&path, "{\"source_id\":\"a\"}\nnot json\n").unwrap();
        match read_manifest(&path) {
            Err(AmbioError::Manifest { line, .. }) => assert_eq!(line, 1),
            other => panic!("expected manifest error, got {other:?}"),
        }
    }
}
