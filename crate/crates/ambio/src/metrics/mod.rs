//! Spatial and spectral evaluation of B-format signals.

mod angles;
mod doa;
mod mrstft;
mod report;

pub use angles::{circular_l1, linear_l1, spatial_angle};
pub use doa::{
    estimate_doa, estimate_doa_default, estimate_doa_per_sample, intensity_vectors, DoaFrame,
    DoaTrack, DEFAULT_FRAME_LEN, DEFAULT_HOP, ENERGY_GATE_RATIO,
};
pub use mrstft::{mrstft_distance, MrstftReport, MRSTFT_RESOLUTIONS};
pub use report::{evaluate_pair, evaluate_pair_with, SpatialErrorReport};
