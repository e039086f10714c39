//! Batch generation of a spatialized corpus from a manifest of mono
//! recordings.
//!
//! Every source yields one static and one dynamic B-format sample, each
//! with a JSON sidecar record. Randomness is drawn from a per-sample
//! stream seeded by hashing the corpus seed with the source id and sample
//! kind, so any subset of the corpus regenerates identically and items can
//! be processed in parallel. Item failures are logged and collected; they
//! never abort the batch.

use std::collections::HashSet;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::augment::language::SpeedClass;
use crate::augment::preprocess::{preprocess_with, PreprocessConfig};
use crate::augment::record::{
    read_manifest, validate_source_id, ManifestEntry, SampleKind, SpatialSampleRecord,
};
use crate::augment::sample::{sample_dynamic_params, sample_static_params};
use crate::error::{AmbioError, Result};
use crate::foa::{encode_moving, encode_static, FoaSignal, MonoSignal};
use crate::trajectory::Trajectory;
use crate::wav::write_foa;

/// One item-level failure inside a batch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ItemFailure {
    pub source_id: String,
    /// Where the item failed: `manifest`, `load`, `preprocess`, `static`,
    /// or `dynamic`.
    pub stage: String,
    pub message: String,
}

/// Result of one corpus run.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSummary {
    /// Successful records in manifest order, static before dynamic per
    /// source. Also written to `manifest.jsonl` in the output directory.
    pub records: Vec<SpatialSampleRecord>,
    pub failures: Vec<ItemFailure>,
    /// Path of the written output manifest.
    pub manifest_path: PathBuf,
}

/// Derives the RNG seed for one sample from the corpus seed, the source id,
/// and the sample kind, by hashing.
pub fn derive_item_seed(corpus_seed: u64, source_id: &str, kind: SampleKind) -> u64 {
    let mut hasher = Sha256::new();
    hasher.update(corpus_seed.to_le_bytes());
    hasher.update([0xFF]);
    hasher.update(source_id.as_bytes());
    hasher.update([0xFF]);
    hasher.update(kind.as_str().as_bytes());
    let digest = hasher.finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("digest is long enough"))
}

/// Renders the static or dynamic sample of one preprocessed source.
/// Exposed so callers can regenerate a corpus item in memory from its
/// record's parameters.
pub fn render_sample(
    prepared: &MonoSignal,
    entry: &ManifestEntry,
    kind: SampleKind,
    corpus_seed: u64,
) -> Result<(FoaSignal, SpatialSampleRecord)> {
    let rng_seed = derive_item_seed(corpus_seed, &entry.source_id, kind);
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let audio_path = format!("{}.{}.wav", entry.source_id, kind.as_str());
    let (trajectory, speed_class, foa) = match kind {
        SampleKind::Static => {
            let position = sample_static_params(&mut rng);
            let trajectory = Trajectory::stationary(position, prepared.duration_s())?;
            let foa = encode_static(prepared, position)?;
            (trajectory, SpeedClass::None, foa)
        }
        SampleKind::Dynamic => {
            let params = sample_dynamic_params(&mut rng);
            let foa = encode_moving(prepared, &params.trajectory)?;
            (params.trajectory, params.speed_class, foa)
        }
    };
    let record = SpatialSampleRecord::describe(
        &entry.source_id,
        audio_path,
        &entry.caption,
        kind,
        &trajectory,
        speed_class,
        prepared.sample_rate(),
        rng_seed,
    )?;
    Ok((foa, record))
}

fn process_entry(
    entry: &ManifestEntry,
    manifest_dir: &Path,
    out_dir: &Path,
    seed: u64,
    config: &PreprocessConfig,
) -> (Vec<SpatialSampleRecord>, Vec<ItemFailure>) {
    let fail = |stage: &str, message: String| ItemFailure {
        source_id: entry.source_id.clone(),
        stage: stage.to_string(),
        message,
    };
    let audio_path = manifest_dir.join(&entry.audio_path);
    let mono = match crate::wav::read_mono(&audio_path) {
        Ok(m) => m,
        Err(e) => return (vec![], vec![fail("load", e.to_string())]),
    };
    let prepared = match preprocess_with(&mono, config) {
        Ok(p) => p,
        Err(e) => return (vec![], vec![fail("preprocess", e.to_string())]),
    };
    let mut records = Vec::with_capacity(2);
    let mut failures = Vec::new();
    for kind in [SampleKind::Static, SampleKind::Dynamic] {
        match render_sample(&prepared, entry, kind, seed) {
            Ok((foa, record)) => {
                let wav_path = out_dir.join(&record.audio_path);
                let sidecar = out_dir.join(format!("{}.{}.json", entry.source_id, kind.as_str()));
                let written = write_foa(&foa, &wav_path).and_then(|_| record.write_json(&sidecar));
                match written {
                    Ok(()) => records.push(record),
                    Err(e) => failures.push(fail(kind.as_str(), e.to_string())),
                }
            }
            Err(e) => failures.push(fail(kind.as_str(), e.to_string())),
        }
    }
    (records, failures)
}

/// Generates the corpus described by `manifest_path` into `out_dir`.
///
/// Audio paths in the manifest are resolved relative to the manifest's
/// directory. Outputs per source: `<id>.static.wav`, `<id>.static.json`,
/// `<id>.dynamic.wav`, `<id>.dynamic.json`, plus `manifest.jsonl` with all
/// successful records and, when anything failed, `failures.jsonl`.
pub fn augment_corpus(
    manifest_path: &Path,
    out_dir: &Path,
    seed: u64,
    config: &PreprocessConfig,
) -> Result<CorpusSummary> {
    let entries = read_manifest(manifest_path)?;
    fs::create_dir_all(out_dir)?;
    let manifest_dir = manifest_path
        .parent()
        .unwrap_or(Path::new("."))
        .to_path_buf();

    // weed out invalid and duplicate ids up front; first occurrence wins
    let mut seen = HashSet::new();
    let mut accepted = Vec::new();
    let mut failures = Vec::new();
    for entry in &entries {
        if let Err(e) = validate_source_id(&entry.source_id) {
            failures.push(ItemFailure {
                source_id: entry.source_id.clone(),
                stage: "manifest".into(),
                message: e.to_string(),
            });
            continue;
        }
        if !seen.insert(entry.source_id.clone()) {
            failures.push(ItemFailure {
                source_id: entry.source_id.clone(),
                stage: "manifest".into(),
                message: AmbioError::DuplicateSourceId(entry.source_id.clone()).to_string(),
            });
            continue;
        }
        accepted.push(entry.clone());
    }

    let outcomes: Vec<_> = accepted
        .par_iter()
        .map(|entry| process_entry(entry, &manifest_dir, out_dir, seed, config))
        .collect();

    let mut records = Vec::with_capacity(accepted.len() * 2);
    for (recs, fails) in outcomes {
        records.extend(recs);
        failures.extend(fails);
    }
    for failure in &failures {
        log::warn!(
            "item {} failed at {}: {}",
            failure.source_id,
            failure.stage,
            failure.message
        );
    }

    let manifest_out = out_dir.join("manifest.jsonl");
    let mut out = fs::File::create(&manifest_out)?;
    for record in &records {
        serde_json::to_writer(&mut out, record)?;
        out.write_all(b"\n")?;
    }
    out.flush()?;

    if !failures.is_empty() {
        let mut f = fs::File::create(out_dir.join("failures.jsonl"))?;
        for failure in &failures {
            serde_json::to_writer(&mut f, failure)?;
            f.write_all(b"\n")?;
        }
    }
    log::info!(
        "corpus complete: {} records, {} failures",
        records.len(),
        failures.len()
    );
    Ok(CorpusSummary {
        records,
        failures,
        manifest_path: manifest_out,
    })
}

/// Reads back a `manifest.jsonl` written by [`augment_corpus`].
pub fn read_record_manifest(path: &Path) -> Result<Vec<SpatialSampleRecord>> {
    let body = fs::read_to_string(path).map_err(|e| AmbioError::Manifest {
        path: path.to_path_buf(),
        line: 0,
        message: e.to_string(),
    })?;
    let mut records = Vec::new();
    for (i, line) in body.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let record: SpatialSampleRecord =
            serde_json::from_str(line).map_err(|e| AmbioError::Manifest {
                path: path.to_path_buf(),
                line: i + 1,
                message: e.to_string(),
            })?;
        records.push(record);
    }
    Ok(records)
}
