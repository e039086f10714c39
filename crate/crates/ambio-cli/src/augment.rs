//! `ambio augment`: batch-generate a spatialized corpus from a manifest.

use std::path::PathBuf;

use ambio::augment::{augment_corpus, PreprocessConfig};

use crate::{print_line, with_jobs};

#[derive(Debug, clap::Args)]
pub struct AugmentArgs {
    /// JSON-lines manifest: one {"source_id","audio_path","caption"} object
    /// per line; audio paths resolve relative to the manifest.
    #[arg(long)]
    pub manifest: PathBuf,
    /// Directory receiving WAVs, sidecars, manifest.jsonl, and failures.jsonl.
    #[arg(long)]
    pub out_dir: PathBuf,
    /// Corpus seed; the same seed reproduces the corpus bit for bit.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Silence-trim threshold in dBFS.
    #[arg(long, default_value_t = -40.0, allow_negative_numbers = true)]
    pub silence_threshold_dbfs: f64,
}

pub fn run(args: &AugmentArgs) -> anyhow::Result<()> {
    let config = PreprocessConfig {
        silence_threshold_dbfs: args.silence_threshold_dbfs,
        ..PreprocessConfig::default()
    };
    let summary = with_jobs(args.jobs, || {
        augment_corpus(&args.manifest, &args.out_dir, args.seed, &config)
    })??;
    print_line(serde_json::json!({
        "records": summary.records.len(),
        "failures": summary.failures.len(),
        "manifest": summary.manifest_path,
    }))?;
    Ok(())
}
