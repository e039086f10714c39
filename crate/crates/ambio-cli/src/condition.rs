//! `ambio condition`: build the one-hot position state matrix for one
//! sidecar record and write it as an .smx file.

use std::path::PathBuf;

use ambio::augment::SpatialSampleRecord;
use ambio::conditioner::{temporal_conditions, write_smx, ConditioningTensor};

use crate::print_line;

#[derive(Debug, clap::Args)]
pub struct ConditionArgs {
    /// Sidecar record JSON describing the trajectory.
    #[arg(long)]
    pub record: PathBuf,
    /// Output .smx path: one JSON header line, then a row-major f32 matrix.
    #[arg(long)]
    pub out: PathBuf,
    /// Number of azimuth bins.
    #[arg(long, default_value_t = 72)]
    pub az_bins: usize,
    /// Number of elevation bins.
    #[arg(long, default_value_t = 14)]
    pub el_bins: usize,
    /// Number of time frames across the clip.
    #[arg(long, default_value_t = 100)]
    pub frames: usize,
}

pub fn run(args: &ConditionArgs) -> anyhow::Result<()> {
    let record = SpatialSampleRecord::read_json(&args.record)?;
    let trajectory = record.trajectory()?;
    let tensor = ConditioningTensor::build(&trajectory, args.az_bins, args.el_bins, args.frames)?;
    write_smx(&tensor, &args.out)?;
    let (rows, frames) = tensor.shape();
    print_line(serde_json::json!({
        "out": args.out,
        "shape": [rows, frames],
        "temporal": temporal_conditions(&trajectory),
    }))?;
    Ok(())
}
