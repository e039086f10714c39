//! Constrained random drawing of spatial parameters.
//!
//! The draw order from the per-item RNG stream is fixed so that a given
//! seed always yields the same parameters: change selector, speed class,
//! movement duration, movement start, start azimuth, start elevation, then
//! (where applicable) end azimuth, clockwise flag, and end elevation.

use rand::Rng;

use crate::augment::language::{SpeedClass, ELEVATION_RANGE_DEG};
use crate::foa::{circular_distance_deg, SphericalPosition};
use crate::trajectory::Trajectory;

/// Clip length every sample is rendered at, in seconds.
pub const CLIP_DURATION_S: f64 = 10.0;
/// Dynamic samples that move in azimuth change it by at least this much
/// (circular distance).
pub const MIN_AZIMUTH_CHANGE_DEG: f64 = 45.0;
/// Dynamic samples that move in elevation change it by at least this much.
pub const MIN_ELEVATION_CHANGE_DEG: f64 = 30.0;

/// A sampled dynamic trajectory and the speed class its duration was drawn
/// from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DynamicParams {
    pub trajectory: Trajectory,
    pub speed_class: SpeedClass,
}

fn sample_azimuth(rng: &mut impl Rng) -> f64 {
    // uniform on (-180, 180]: gen() covers [0, 1)
    180.0 - rng.gen::<f64>() * 360.0
}

fn sample_elevation(rng: &mut impl Rng) -> f64 {
    rng.gen_range(-ELEVATION_RANGE_DEG..=ELEVATION_RANGE_DEG)
}

/// Draws a static source position: azimuth uniform on (-180°, 180°],
/// elevation uniform on [-35°, 35°].
pub fn sample_static_params(rng: &mut impl Rng) -> SphericalPosition {
    let azimuth = sample_azimuth(rng);
    let elevation = sample_elevation(rng);
    SphericalPosition::new(azimuth, elevation).expect("sampled angles are in range")
}

/// Draws a dynamic trajectory: one of azimuth-only, elevation-only, or
/// both-change (equal probability); moving angles satisfy the minimum
/// change constraints by rejection; the movement window length is drawn
/// uniformly inside the speed class's duration bin and placed uniformly
/// within the 10 s clip.
pub fn sample_dynamic_params(rng: &mut impl Rng) -> DynamicParams {
    let change = rng.gen_range(0..3u32); // 0 azimuth, 1 elevation, 2 both
    let speed_class = match rng.gen_range(0..3u32) {
        0 => SpeedClass::Fast,
        1 => SpeedClass::Moderate,
        _ => SpeedClass::Slow,
    };
    let (lo, hi) = speed_class.duration_range_s().expect("sampled class moves");
    let duration = rng.gen_range(lo..hi);
    let move_start = rng.gen_range(0.0..=(CLIP_DURATION_S - duration));
    let move_end = (move_start + duration).min(CLIP_DURATION_S);

    let az_start = sample_azimuth(rng);
    let el_start = sample_elevation(rng);

    let azimuth_moves = change == 0 || change == 2;
    let elevation_moves = change == 1 || change == 2;

    let (az_end, clockwise) = if azimuth_moves {
        let end = loop {
            let cand = sample_azimuth(rng);
            if circular_distance_deg(az_start, cand) >= MIN_AZIMUTH_CHANGE_DEG {
                break cand;
            }
        };
        (end, rng.gen_bool(0.5))
    } else {
        (az_start, false)
    };
    let el_end = if elevation_moves {
        loop {
            let cand = sample_elevation(rng);
            if (cand - el_start).abs() >= MIN_ELEVATION_CHANGE_DEG {
                break cand;
            }
        }
    } else {
        el_start
    };

    let start = SphericalPosition::new(az_start, el_start).expect("sampled angles are in range");
    let end = SphericalPosition::new(az_end, el_end).expect("sampled angles are in range");
    let trajectory = Trajectory::new(start, end, clockwise, move_start, move_end, CLIP_DURATION_S)
        .expect("sampled window fits the clip");
    DynamicParams {
        trajectory,
        speed_class,
    }
}
