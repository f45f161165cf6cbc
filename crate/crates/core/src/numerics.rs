//! Riemann–Roch and Brill–Noether number bookkeeping.
//!
//! Everything here is exact signed-integer arithmetic. Inputs are bounded by
//! [`PARAM_BOUND`](crate::error::PARAM_BOUND) so the quadratic formulas cannot
//! overflow `i64`.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{at_least, bounded, Error, Result};

/// Genus and gonality of a general ν-gonal curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CurveParams {
    g: i64,
    nu: i64,
}

impl CurveParams {
    /// Requires `g >= 4` and `3 <= nu < floor((g + 3) / 2)`.
    pub fn new(g: i64, nu: i64) -> Result<Self> {
        bounded("g", g)?;
        bounded("nu", nu)?;
        if g < 4 {
            return Err(Error::InvalidCurve {
                g,
                nu,
                reason: "genus must be at least 4".into(),
            });
        }
        if !Self::gonalities(g).contains(&nu) {
            return Err(Error::InvalidCurve {
                g,
                nu,
                reason: format!("gonality must satisfy 3 <= nu < floor((g+3)/2) = {}", (g + 3) / 2),
            });
        }
        Ok(Self { g, nu })
    }

    pub fn g(&self) -> i64 {
        self.g
    }

    pub fn nu(&self) -> i64 {
        self.nu
    }

    /// Admissible gonalities for genus `g`; empty when `g < 5`.
    pub fn gonalities(g: i64) -> RangeInclusive<i64> {
        3..=((g + 3).div_euclid(2) - 1)
    }

    /// Every valid curve with genus in `[g_min, g_max]`, ordered by `(g, nu)`.
    pub fn grid(g_min: i64, g_max: i64) -> Vec<CurveParams> {
        (g_min.max(4)..=g_max)
            .flat_map(|g| Self::gonalities(g).map(move |nu| CurveParams { g, nu }))
            .collect()
    }
}

/// Degree and cohomology of a line bundle on a curve of fixed genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineBundleProfile {
    pub degree: i64,
    pub h0: i64,
    pub h1: i64,
}

impl LineBundleProfile {
    /// Checked constructor: enforces Riemann–Roch `h0 - h1 = degree - g + 1`.
    pub fn new(g: i64, degree: i64, h0: i64, h1: i64) -> Result<Self> {
        bounded("degree", degree)?;
        at_least("h0", h0, 0)?;
        at_least("h1", h1, 0)?;
        if h0 - h1 != degree - g + 1 {
            return Err(Error::Precondition(format!(
                "Riemann-Roch fails: h0 - h1 = {} but degree - g + 1 = {}",
                h0 - h1,
                degree - g + 1
            )));
        }
        Ok(Self { degree, h0, h1 })
    }

    pub fn is_special(&self) -> bool {
        self.h1 > 0
    }

    pub fn is_effective(&self) -> bool {
        self.h0 > 0
    }
}

/// `rho(g, r, d) = g - (r + 1)(g + r - d)`.
pub fn rho_rank1(g: i64, r: i64, d: i64) -> Result<i64> {
    at_least("g", g, 0)?;
    at_least("r", r, 0)?;
    bounded("d", d)?;
    Ok(g - (r + 1) * (g + r - d))
}

/// Cohomology of a general line bundle of degree `e`.
pub fn general_line_bundle_profile(g: i64, e: i64) -> Result<LineBundleProfile> {
    at_least("g", g, 1)?;
    bounded("e", e)?;
    Ok(LineBundleProfile {
        degree: e,
        h0: (e - g + 1).max(0),
        h1: (g - 1 - e).max(0),
    })
}

/// `k_i = d - 2g + 2 + i`, the section count cut out by speciality `i`.
pub fn k_index(g: i64, d: i64, i: i64) -> Result<i64> {
    bounded("g", g)?;
    bounded("d", d)?;
    at_least("i", i, 0)?;
    Ok(d - 2 * g + 2 + i)
}

/// Rank-two Brill–Noether number `4g - 3 - i * k_i`.
pub fn rho_rank2(g: i64, d: i64, i: i64) -> Result<i64> {
    at_least("i", i, 1)?;
    let k = k_index(g, d, i)?;
    Ok(4 * g - 3 - i * k)
}

/// Expected dimension `3g - 3 - 2 k_2` of the fixed-determinant locus.
pub fn rho_fixed_det(g: i64, d: i64) -> Result<i64> {
    let k2 = k_index(g, d, 2)?;
    Ok(3 * g - 3 - 2 * k2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rho_rank1_examples() {
        assert_eq!(rho_rank1(10, 1, 7).unwrap(), 2);
        assert_eq!(rho_rank1(10, 0, 5).unwrap(), 5);
        assert_eq!(rho_rank1(10, 1, 6).unwrap(), 0);
        assert!(rho_rank1(-1, 0, 3).is_err());
        assert!(rho_rank1(10, -1, 3).is_err());
    }

    #[test]
    fn general_profile_examples() {
        let p = general_line_bundle_profile(10, 6).unwrap();
        assert_eq!((p.h0, p.h1), (0, 3));
        let p = general_line_bundle_profile(10, -1).unwrap();
        assert_eq!((p.h0, p.h1), (0, 10));
        let p = general_line_bundle_profile(10, 9).unwrap();
        assert_eq!((p.h0, p.h1), (0, 0));
        assert!(general_line_bundle_profile(0, 3).is_err());
    }

    #[test]
    fn k_and_rank_two_numbers() {
        assert_eq!(k_index(10, 26, 2).unwrap(), 10);
        assert_eq!(k_index(7, 12, 0).unwrap(), 0);
        assert_eq!(k_index(10, 36, 2).unwrap(), 20);
        assert!(k_index(10, 26, -1).is_err());

        assert_eq!(rho_rank2(10, 26, 2).unwrap(), 17);
        assert_eq!(rho_rank2(10, 31, 2).unwrap(), 7);
        for g in 4..30 {
            assert_eq!(rho_rank2(g, 4 * g - 6, 2).unwrap(), 1);
        }
        assert!(rho_rank2(10, 26, 0).is_err());

        assert_eq!(rho_fixed_det(10, 26).unwrap(), 7);
        assert_eq!(rho_fixed_det(10, 30).unwrap(), -1);
        // 7g - 11 even needs g odd
        assert_eq!(rho_fixed_det(11, (7 * 11 - 11) / 2).unwrap(), 0);
    }

    #[test]
    fn curve_validation() {
        assert!(CurveParams::new(10, 3).is_ok());
        assert!(CurveParams::new(10, 5).is_ok());
        assert!(CurveParams::new(10, 6).is_err());
        assert!(CurveParams::new(11, 6).is_ok());
        assert!(CurveParams::new(11, 7).is_err());
        assert!(CurveParams::new(10, 2).is_err());
        assert!(CurveParams::new(4, 3).is_err());
        assert!(CurveParams::new(3, 3).is_err());
        assert_eq!(CurveParams::gonalities(4).count(), 0);
        assert_eq!(CurveParams::gonalities(5).collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn profile_rejects_riemann_roch_violation() {
        assert!(LineBundleProfile::new(10, 18, 10, 1).is_ok());
        assert!(LineBundleProfile::new(10, 18, 9, 1).is_err());
        assert!(LineBundleProfile::new(10, 18, -1, 0).is_err());
    }

    #[test]
    fn parameter_bound_enforced() {
        assert!(rho_rank1(2_000_000, 0, 0).is_err());
        assert!(k_index(10, -2_000_000, 2).is_err());
    }

    proptest! {
        #[test]
        fn general_profile_satisfies_riemann_roch(g in 1i64..200, e in -300i64..300) {
            let p = general_line_bundle_profile(g, e).unwrap();
            prop_assert_eq!(p.h0 - p.h1, e - g + 1);
            prop_assert!(LineBundleProfile::new(g, e, p.h0, p.h1).is_ok());
        }

        #[test]
        fn fixed_determinant_differs_by_genus(g in 2i64..500, d in -1000i64..1000) {
            prop_assert_eq!(rho_rank2(g, d, 2).unwrap(), 8 * g - 11 - 2 * d);
            prop_assert_eq!(rho_rank2(g, d, 2).unwrap() - rho_fixed_det(g, d).unwrap(), g);
        }

        #[test]
        fn rho_of_sections_count_zero(g in 0i64..500, d in -500i64..500) {
            prop_assert_eq!(rho_rank1(g, 0, d).unwrap(), d);
        }
    }
}
