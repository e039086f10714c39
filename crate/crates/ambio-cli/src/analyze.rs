//! `ambio analyze`: per-frame direction-of-arrival track of an FOA file.

use std::path::PathBuf;

use ambio::metrics::{estimate_doa, estimate_doa_per_sample, DoaTrack};
use ambio::wav::read_foa_with_order;

use crate::{print_line, ChannelOrderArg, FormatArg};

#[derive(Debug, clap::Args)]
pub struct AnalyzeArgs {
    /// 4-channel FOA WAV to analyze.
    pub input: PathBuf,
    /// Analysis frame length in samples.
    #[arg(long, default_value_t = 512)]
    pub frame_len: usize,
    /// Hop between frames in samples.
    #[arg(long, default_value_t = 256)]
    pub hop: usize,
    /// Estimate a direction for every sample instead of per frame.
    #[arg(long, conflicts_with_all = ["frame_len", "hop"])]
    pub per_sample: bool,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    /// Channel layout of the input file.
    #[arg(long, value_enum, default_value_t = ChannelOrderArg::Wxyz)]
    pub channel_order: ChannelOrderArg,
}

fn print_json(args: &AnalyzeArgs, track: &DoaTrack) -> anyhow::Result<()> {
    let frames: Vec<_> = track
        .frames()
        .iter()
        .enumerate()
        .map(|(k, frame)| {
            let (az, el) = match frame.angles_deg {
                Some((az, el)) => (Some(az), Some(el)),
                None => (None, None),
            };
            serde_json::json!({
                "frame": k,
                "time_s": track.frame_center_s(k),
                "azimuth_deg": az,
                "elevation_deg": el,
                "mean_w_sq": frame.mean_w_sq,
                "valid": frame.is_valid(),
            })
        })
        .collect();
    print_line(serde_json::json!({
        "path": args.input,
        "sample_rate": track.sample_rate(),
        "frame_len": track.frame_len(),
        "hop": track.hop(),
        "frame_count": track.frame_count(),
        "valid_frame_fraction": track.valid_fraction(),
        "frames": frames,
    }))
}

fn print_csv(track: &DoaTrack) -> anyhow::Result<()> {
    let mut body = String::from("frame,time_s,azimuth_deg,elevation_deg,mean_w_sq,valid");
    for (k, frame) in track.frames().iter().enumerate() {
        let (az, el) = match frame.angles_deg {
            Some((az, el)) => (az.to_string(), el.to_string()),
            None => (String::new(), String::new()),
        };
        body.push_str(&format!(
            "\n{},{},{},{},{},{}",
            k,
            track.frame_center_s(k),
            az,
            el,
            frame.mean_w_sq,
            frame.is_valid(),
        ));
    }
    print_line(body)
}

pub fn run(args: &AnalyzeArgs) -> anyhow::Result<()> {
    let foa = read_foa_with_order(&args.input, args.channel_order.order())?;
    let track = if args.per_sample {
        estimate_doa_per_sample(&foa)?
    } else {
        estimate_doa(&foa, args.frame_len, args.hop)?
    };
    match args.format {
        FormatArg::Json => print_json(args, &track),
        FormatArg::Csv => print_csv(&track),
    }
}
