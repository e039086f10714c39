//! `ambio evaluate`: spatial and spectral comparison of candidate FOA audio
//! against a reference, for single files or whole record manifests.

use std::path::{Path, PathBuf};

use ambio::augment::read_record_manifest;
use ambio::metrics::{evaluate_pair_with, mrstft_distance, MrstftReport, SpatialErrorReport};
use ambio::wav::read_foa_with_order;
use ambio::wav::ChannelOrder;
use anyhow::{bail, Context};
use rayon::prelude::*;

use crate::{print_line, with_jobs, ChannelOrderArg};

#[derive(Debug, clap::Args)]
pub struct EvaluateArgs {
    /// Reference: an FOA WAV, or a .jsonl record manifest naming many.
    #[arg(long = "ref")]
    pub reference: PathBuf,
    /// Candidate: an FOA WAV, or a .jsonl record manifest naming many.
    #[arg(long = "cand")]
    pub candidate: PathBuf,
    /// Direction-of-arrival frame length in samples.
    #[arg(long, default_value_t = 512)]
    pub frame_len: usize,
    /// Hop between direction frames in samples.
    #[arg(long, default_value_t = 256)]
    pub hop: usize,
    /// Worker threads for manifest evaluation (default: all cores).
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Channel layout of the input files.
    #[arg(long, value_enum, default_value_t = ChannelOrderArg::Wxyz)]
    pub channel_order: ChannelOrderArg,
}

fn is_manifest(path: &Path) -> bool {
    path.extension()
        .map(|e| e.eq_ignore_ascii_case("jsonl"))
        .unwrap_or(false)
}

/// Audio paths listed in a record manifest, resolved against its directory.
fn manifest_audio_paths(path: &Path) -> anyhow::Result<Vec<PathBuf>> {
    let dir = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    let records = read_record_manifest(path)?;
    Ok(records.iter().map(|r| dir.join(&r.audio_path)).collect())
}

fn evaluate_files(
    reference: &Path,
    candidate: &Path,
    frame_len: usize,
    hop: usize,
    order: ChannelOrder,
) -> anyhow::Result<(SpatialErrorReport, MrstftReport)> {
    let ref_foa = read_foa_with_order(reference, order)?;
    let cand_foa = read_foa_with_order(candidate, order)?;
    let spatial = evaluate_pair_with(&ref_foa, &cand_foa, frame_len, hop)?;
    let mrstft = mrstft_distance(&ref_foa, &cand_foa)?;
    Ok((spatial, mrstft))
}

pub fn run(args: &EvaluateArgs) -> anyhow::Result<()> {
    let order = args.channel_order.order();
    match (is_manifest(&args.reference), is_manifest(&args.candidate)) {
        (false, false) => {
            let (spatial, mrstft) = evaluate_files(
                &args.reference,
                &args.candidate,
                args.frame_len,
                args.hop,
                order,
            )?;
            print_line(serde_json::json!({
                "ref": args.reference,
                "cand": args.candidate,
                "spatial": spatial,
                "mrstft": mrstft,
            }))
        }
        (true, true) => {
            let refs = manifest_audio_paths(&args.reference)?;
            let cands = manifest_audio_paths(&args.candidate)?;
            if refs.len() != cands.len() {
                bail!(
                    "manifests pair by line but list {} and {} files",
                    refs.len(),
                    cands.len()
                );
            }
            let pairs: Vec<_> = refs.into_iter().zip(cands).collect();
            let reports = with_jobs(args.jobs, || {
                pairs
                    .par_iter()
                    .map(|(r, c)| {
                        evaluate_files(r, c, args.frame_len, args.hop, order)
                            .with_context(|| format!("{} vs {}", r.display(), c.display()))
                    })
                    .collect::<anyhow::Result<Vec<_>>>()
            })??;
            for ((r, c), (spatial, mrstft)) in pairs.iter().zip(&reports) {
                print_line(serde_json::json!({
                    "ref": r, "cand": c, "spatial": spatial, "mrstft": mrstft,
                }))?;
            }
            let n = reports.len() as f64;
            let mean = |f: &dyn Fn(&(SpatialErrorReport, MrstftReport)) -> f64| {
                reports.iter().map(f).sum::<f64>() / n
            };
            print_line(serde_json::json!({
                "pairs": reports.len(),
                "mean_l1_azimuth_deg": mean(&|r| r.0.l1_azimuth_deg),
                "mean_l1_elevation_deg": mean(&|r| r.0.l1_elevation_deg),
                "mean_spatial_angle_deg": mean(&|r| r.0.mean_spatial_angle_deg),
                "mean_mrstft": mean(&|r| r.1.mean),
            }))
        }
        _ => bail!("--ref and --cand must both be files or both be .jsonl manifests"),
    }
}
