//! Direction on the unit sphere, in degrees.
//!
//! Azimuth is measured counter-clockwise from the front, so +90 degrees is
//! left and -90 degrees is right, and is always stored wrapped into
//! (-180, 180]. Elevation is positive up and must lie in [-90, 90]; values
//! outside that range are rejected rather than clamped.

use crate::error::{AmbioError, Result};

/// Wraps an azimuth in degrees into the canonical (-180, 180] interval.
pub fn wrap_azimuth_deg(azimuth_deg: f64) -> f64 {
    let r = azimuth_deg.rem_euclid(360.0);
    if r > 180.0 {
        r - 360.0
    } else {
        r
    }
}

/// Shortest angular distance between two azimuths, in [0, 180] degrees.
pub fn circular_distance_deg(a_deg: f64, b_deg: f64) -> f64 {
    let d = (a_deg - b_deg).rem_euclid(360.0);
    d.min(360.0 - d)
}

/// A source direction: azimuth in (-180, 180], elevation in [-90, 90].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphericalPosition {
    azimuth_deg: f64,
    elevation_deg: f64,
}

impl SphericalPosition {
    /// Builds a position, wrapping the azimuth and rejecting out-of-range
    /// or non-finite elevations.
    pub fn new(azimuth_deg: f64, elevation_deg: f64) -> Result<Self> {
        if !azimuth_deg.is_finite() {
            return Err(AmbioError::NonFiniteAngle(azimuth_deg));
        }
        if !elevation_deg.is_finite() {
            return Err(AmbioError::NonFiniteAngle(elevation_deg));
        }
        if !(-90.0..=90.0).contains(&elevation_deg) {
            return Err(AmbioError::ElevationOutOfRange(elevation_deg));
        }
        Ok(Self {
            azimuth_deg: wrap_azimuth_deg(azimuth_deg),
            elevation_deg,
        })
    }

    pub fn azimuth_deg(&self) -> f64 {
        self.azimuth_deg
    }

    pub fn elevation_deg(&self) -> f64 {
        self.elevation_deg
    }

    pub fn azimuth_rad(&self) -> f64 {
        self.azimuth_deg.to_radians()
    }

    pub fn elevation_rad(&self) -> f64 {
        self.elevation_deg.to_radians()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn azimuth_wraps_into_half_open_interval() {
        assert_eq!(wrap_azimuth_deg(0.0), 0.0);
        assert_eq!(wrap_azimuth_deg(180.0), 180.0);
        assert_eq!(wrap_azimuth_deg(-180.0), 180.0);
        assert_eq!(wrap_azimuth_deg(190.0), -170.0);
        assert_eq!(wrap_azimuth_deg(-190.0), 170.0);
        assert_eq!(wrap_azimuth_deg(540.0), 180.0);
        assert_eq!(wrap_azimuth_deg(405.0), 45.0);
        assert_eq!(wrap_azimuth_deg(-360.0), 0.0);
    }

    #[test]
    fn circular_distance_is_shortest_path() {
        assert_eq!(circular_distance_deg(170.0, -170.0), 20.0);
        assert_eq!(circular_distance_deg(0.0, 180.0), 180.0);
        assert_eq!(circular_distance_deg(10.0, 10.0), 0.0);
        assert_eq!(circular_distance_deg(-90.0, 90.0), 180.0);
    }

    #[test]
    fn constructor_enforces_elevation_range() {
        assert!(SphericalPosition::new(0.0, 90.0).is_ok());
        assert!(SphericalPosition::new(0.0, -90.0).is_ok());
        assert!(matches!(
            SphericalPosition::new(0.0, 90.001),
            Err(AmbioError::ElevationOutOfRange(_))
        ));
        assert!(matches!(
            SphericalPosition::new(0.0, -120.0),
            Err(AmbioError::ElevationOutOfRange(_))
        ));
        assert!(matches!(
            SphericalPosition::new(f64::NAN, 0.0),
            Err(AmbioError::NonFiniteAngle(_))
        ));
        assert!(matches!(
            SphericalPosition::new(0.0, f64::INFINITY),
            Err(AmbioError::NonFiniteAngle(_))
        ));
    }

    #[test]
    fn constructor_wraps_azimuth() {
        let p = SphericalPosition::new(270.0, 0.0).unwrap();
        assert_eq!(p.azimuth_deg(), -90.0);
        let q = SphericalPosition::new(-180.0, 0.0).unwrap();
        assert_eq!(q.azimuth_deg(), 180.0);
    }
}
