//! `ambio encode`: spatialize one mono file at a fixed or moving position.

use std::path::{Path, PathBuf};

use ambio::augment::{SampleKind, SpatialSampleRecord, SpeedClass};
use ambio::wav::{read_mono, write_foa};
use ambio::{encode_moving, encode_static, signed_azimuth_delta, SphericalPosition, Trajectory};
use anyhow::bail;

use crate::print_line;

#[derive(Debug, clap::Args)]
pub struct EncodeArgs {
    /// Mono WAV to spatialize (stereo inputs are averaged to mono).
    pub input: PathBuf,
    /// Output 4-channel FOA WAV; a `.json` sidecar record is written alongside.
    #[arg(long)]
    pub out: PathBuf,
    /// Start azimuth in degrees, counter-clockwise positive from front.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub az_start: f64,
    /// Start elevation in degrees, positive up.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub el_start: f64,
    /// End azimuth in degrees; giving this (or --el-end) makes the source move.
    #[arg(long, allow_negative_numbers = true)]
    pub az_end: Option<f64>,
    /// End elevation in degrees; giving this (or --az-end) makes the source move.
    #[arg(long, allow_negative_numbers = true)]
    pub el_end: Option<f64>,
    /// Traverse the azimuth clockwise (decreasing azimuth).
    #[arg(long)]
    pub clockwise: bool,
    /// Movement start time in seconds (default: clip start).
    #[arg(long)]
    pub move_start: Option<f64>,
    /// Movement end time in seconds (default: clip end).
    #[arg(long)]
    pub move_end: Option<f64>,
    /// Caption to spatialize into the sidecar record.
    #[arg(long, default_value = "")]
    pub caption: String,
}

fn file_stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "source".to_string())
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.to_string_lossy().into_owned())
}

pub fn run(args: &EncodeArgs) -> anyhow::Result<()> {
    let mono = read_mono(&args.input)?;
    let clip = mono.duration_s();
    let start = SphericalPosition::new(args.az_start, args.el_start)?;
    let moving = args.az_end.is_some() || args.el_end.is_some();

    let (foa, trajectory, kind, speed) = if moving {
        let end = SphericalPosition::new(
            args.az_end.unwrap_or(args.az_start),
            args.el_end.unwrap_or(args.el_start),
        )?;
        let az_delta = signed_azimuth_delta(start.azimuth_deg(), end.azimuth_deg(), args.clockwise);
        if az_delta == 0.0 && start.elevation_deg() == end.elevation_deg() {
            bail!(
                "start and end directions are identical; drop --az-end/--el-end \
                 for a static encode"
            );
        }
        let move_start = args.move_start.unwrap_or(0.0);
        let move_end = args.move_end.unwrap_or(clip);
        let trajectory = Trajectory::new(start, end, args.clockwise, move_start, move_end, clip)?;
        let foa = encode_moving(&mono, &trajectory)?;
        let speed = SpeedClass::classify(move_end - move_start);
        (foa, trajectory, SampleKind::Dynamic, speed)
    } else {
        if args.move_start.is_some() || args.move_end.is_some() || args.clockwise {
            bail!(
                "movement flags (--move-start/--move-end/--clockwise) require \
                 --az-end or --el-end"
            );
        }
        let foa = encode_static(&mono, start)?;
        let trajectory = Trajectory::stationary(start, clip)?;
        (foa, trajectory, SampleKind::Static, SpeedClass::None)
    };

    let record = SpatialSampleRecord::describe(
        &file_stem(&args.input),
        file_name(&args.out),
        &args.caption,
        kind,
        &trajectory,
        speed,
        mono.sample_rate(),
        0,
    )?;
    write_foa(&foa, &args.out)?;
    let sidecar = args.out.with_extension("json");
    record.write_json(&sidecar)?;
    print_line(serde_json::json!({
        "out": args.out,
        "record": sidecar,
        "kind": record.kind,
        "spatial_caption": record.spatial_caption,
    }))?;
    Ok(())
}
