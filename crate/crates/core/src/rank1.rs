//! Components of `W^r_d` on a general ν-gonal curve.
//!
//! Each component is the closure of a splitting locus `W^{w_{r,l}}`, one for
//! every admissible shift `l` whose expected dimension is non-negative.

use serde::{Deserialize, Serialize};

use crate::error::{at_least, Error, Result};
use crate::numerics::{rho_rank1, CurveParams};
use crate::splitting::{admissible_shifts, balanced, expected_splitting_dim, w_vector, SplittingType};

/// Description of a general member of a component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GenericElement {
    /// `A(B)` with `A` the gonal pencil and `B` an effective divisor of the given degree.
    GonalPlusBasePoints {
        base_degree: i64,
    },
    BasePointFreePencil,
    GeneralSeries,
    FullPicard,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank1Component {
    /// The shift `l`; zero for [`GenericElement::FullPicard`].
    pub shift: i64,
    pub vector: SplittingType,
    pub dimension: i64,
    pub generic_element: GenericElement,
}

/// The components of `W^r_d`, ordered by shift. Empty when `W^r_d` is empty.
pub fn stratify(curve: CurveParams, r: i64, d: i64) -> Result<Vec<Rank1Component>> {
    let (g, nu) = (curve.g(), curve.nu());
    at_least("r", r, 0)?;
    at_least("d", d, 0)?;
    let d_prime = d + 1 - g - nu;

    if r <= d - g {
        return Ok(vec![Rank1Component {
            shift: 0,
            vector: balanced(nu, d_prime)?,
            dimension: g,
            generic_element: GenericElement::FullPicard,
        }]);
    }

    let mut out = Vec::new();
    for ell in admissible_shifts(g, nu, r, d)? {
        let vector = w_vector(g, nu, r, ell, d)?;
        let Some(dimension) = expected_splitting_dim(g, &vector)?.dimension else {
            continue;
        };
        let generic_element = match (r, ell) {
            (1, 1) => GenericElement::GonalPlusBasePoints { base_degree: d - nu },
            (1, 0) => GenericElement::BasePointFreePencil,
            _ => GenericElement::GeneralSeries,
        };
        out.push(Rank1Component {
            shift: ell,
            vector,
            dimension,
            generic_element,
        });
    }
    Ok(out)
}

/// The rows of the pencil table for `W^1_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PencilCase {
    /// `t < nu`.
    BelowGonality,
    /// `nu <= t < (g+2)/2`.
    GonalOnly,
    /// `(g+2)/2 <= t <= g+2-nu`.
    Both,
    /// `g-nu+2 < t < g+1`.
    PencilOnly,
    /// `t >= g+1`.
    Picard,
}

impl PencilCase {
    pub fn of(curve: CurveParams, t: i64) -> Self {
        let (g, nu) = (curve.g(), curve.nu());
        if t < nu {
            PencilCase::BelowGonality
        } else if 2 * t < g + 2 {
            PencilCase::GonalOnly
        } else if t <= g + 2 - nu {
            PencilCase::Both
        } else if g - nu + 2 < t && t < g + 1 {
            PencilCase::PencilOnly
        } else {
            debug_assert!(t > g);
            PencilCase::Picard
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilTable {
    pub case: PencilCase,
    pub components: Vec<Rank1Component>,
}

/// `W^1_t` split into the table rows, checked against [`stratify`].
pub fn pencil_table(curve: CurveParams, t: i64) -> Result<PencilTable> {
    let (g, nu) = (curve.g(), curve.nu());
    at_least("t", t, 0)?;
    let case = PencilCase::of(curve, t);
    let components = stratify(curve, 1, t)?;

    let gonal = GenericElement::GonalPlusBasePoints { base_degree: t - nu };
    let expected: Vec<(GenericElement, i64)> = match case {
        PencilCase::BelowGonality => vec![],
        PencilCase::GonalOnly => vec![(gonal, t - nu)],
        PencilCase::Both => vec![(GenericElement::BasePointFreePencil, 2 * t - g - 2), (gonal, t - nu)],
        PencilCase::PencilOnly => vec![(GenericElement::BasePointFreePencil, 2 * t - g - 2)],
        PencilCase::Picard => vec![(GenericElement::FullPicard, g)],
    };
    let got: Vec<(GenericElement, i64)> = components.iter().map(|c| (c.generic_element, c.dimension)).collect();
    if got != expected {
        return Err(Error::Invariant(format!(
            "pencil table row {case:?} for (g, nu, t) = ({g}, {nu}, {t}) expects {expected:?}, strata give {got:?}"
        )));
    }
    Ok(PencilTable { case, components })
}

/// Dimension of `|A^r|` for the gonal pencil `A`.
pub fn gonal_power_dim(curve: CurveParams, r: i64) -> Result<i64> {
    let (g, nu) = (curve.g(), curve.nu());
    at_least("r", r, 0)?;
    Ok(if g >= r * (nu - 1) { r } else { r * nu - g })
}

/// Dimension of the component with shift `ell`, from the Brill–Noether number.
pub fn shifted_rho(curve: CurveParams, r: i64, ell: i64, d: i64) -> Result<i64> {
    Ok(rho_rank1(curve.g(), r - ell, d)? - ell * curve.nu())
}
