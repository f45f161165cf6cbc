//! Dimension counts for extensions `0 -> N -> F -> L -> 0` of line bundles.
//!
//! Here `d = deg F`, `delta = deg L`, `l = h^0(L)`, `r = h^1(N)` and
//! `m = dim Ext^1(L, N)`. The degeneracy locus `W_t` is the set of classes
//! whose coboundary `H^0(L) -> H^1(N)` has corank at least `t`.

use serde::{Deserialize, Serialize};

use crate::error::{at_least, bounded, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionData {
    pub g: i64,
    pub d: i64,
    pub delta: i64,
    pub l: i64,
    pub r: i64,
    pub iso: bool,
    pub m: i64,
}

impl ExtensionData {
    /// Computes `m` with [`ext_dim`].
    pub fn new(g: i64, d: i64, delta: i64, l: i64, r: i64, iso: bool) -> Result<Self> {
        let m = ext_dim(g, d, delta, iso)?;
        Self::with_dim(g, d, delta, l, r, iso, m)
    }

    /// Uses a caller-supplied `m`, for when the Riemann–Roch count does not apply.
    pub fn with_dim(g: i64, d: i64, delta: i64, l: i64, r: i64, iso: bool, m: i64) -> Result<Self> {
        at_least("g", g, 0)?;
        bounded("d", d)?;
        bounded("delta", delta)?;
        at_least("l", l, 0)?;
        at_least("r", r, 0)?;
        at_least("m", m, 0)?;
        Ok(Self {
            g,
            d,
            delta,
            l,
            r,
            iso,
            m,
        })
    }

    pub fn w1_dim(&self) -> Result<W1Data> {
        w1_dim(self.l, self.r, self.m)
    }
}

/// `dim Ext^1(L, N)`: `g` when `L ≅ N`, else `2 delta - d + g - 1`.
///
/// The second count needs `h^0(N - L) = 0` and `h^1(K_C + L - N) = 0`, which
/// hold once `2 delta - d >= 0`; below that the caller must supply `m`.
pub fn ext_dim(g: i64, d: i64, delta: i64, iso: bool) -> Result<i64> {
    at_least("g", g, 0)?;
    bounded("d", d)?;
    bounded("delta", delta)?;
    if iso {
        return Ok(g);
    }
    if 2 * delta - d < 0 {
        return Err(Error::Precondition(format!(
            "2*delta - d = {} < 0: extension count not determined, supply the dimension explicitly",
            2 * delta - d
        )));
    }
    let m = 2 * delta - d + g - 1;
    if m < 0 {
        return Err(Error::Precondition(format!("negative extension dimension {m}")));
    }
    Ok(m)
}

/// Expected codimension `c(t) = max(0, t (l - r + t))` of `W_t`.
pub fn degeneracy_codim(t: i64, l: i64, r: i64) -> Result<i64> {
    at_least("t", t, 1)?;
    at_least("l", l, 0)?;
    at_least("r", r, 0)?;
    Ok((t * (l - r + t)).max(0))
}

/// Expected dimension `min(m, m - c(t))` of `W_t`.
pub fn degeneracy_expected_dim(m: i64, t: i64, l: i64, r: i64) -> Result<i64> {
    at_least("m", m, 0)?;
    let c = degeneracy_codim(t, l, r)?;
    Ok(m.min(m - c))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct W1Data {
    pub dimension: i64,
    /// Corank of the coboundary at a general point of `W_1`, when `l >= r`.
    pub generic_corank_on_locus: Option<i64>,
    /// Corank at a general extension class, when `l >= r`.
    pub generic_corank_ambient: Option<i64>,
}

/// `dim W_1 = m - (l - r + 1)`, valid for `r >= 1`, `l >= max(1, r-1)`, `m >= l+1`.
pub fn w1_dim(l: i64, r: i64, m: i64) -> Result<W1Data> {
    bounded("l", l)?;
    bounded("r", r)?;
    bounded("m", m)?;
    if r < 1 {
        return Err(Error::Precondition(format!("w1_dim needs r >= 1, got r = {r}")));
    }
    if l < 1.max(r - 1) {
        return Err(Error::Precondition(format!(
            "w1_dim needs l >= max(1, r-1) = {}, got l = {l}",
            1.max(r - 1)
        )));
    }
    if m < l + 1 {
        return Err(Error::Precondition(format!(
            "w1_dim needs m >= l+1 = {}, got m = {m}",
            l + 1
        )));
    }
    let certified = l >= r;
    Ok(W1Data {
        dimension: m - (l - r + 1),
        generic_corank_on_locus: certified.then_some(1),
        generic_corank_ambient: certified.then_some(0),
    })
}

/// `h^1` of a general extension, or of a general point of `W_1` when `on_w1`.
pub fn generic_speciality(quotient_h1: i64, l: i64, r: i64, on_w1: bool) -> Result<i64> {
    at_least("quotient_h1", quotient_h1, 0)?;
    at_least("l", l, 0)?;
    at_least("r", r, 0)?;
    if l < r {
        return Err(Error::Precondition(format!(
            "generic corank is not certified for l = {l} < r = {r}"
        )));
    }
    Ok(quotient_h1 + i64::from(on_w1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegreData {
    /// Self-intersection of the section of `P(F)` cut by the quotient.
    pub gamma_sq: i64,
    pub semistable_possible: bool,
}

pub fn segre_data(d: i64, delta: i64) -> Result<SegreData> {
    bounded("d", d)?;
    bounded("delta", delta)?;
    let gamma_sq = 2 * delta - d;
    Ok(SegreData {
        gamma_sq,
        semistable_possible: gamma_sq >= 0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    Boundary,
    NotCertified,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecantCheck {
    pub verdict: Verdict,
    pub h: i64,
    pub sec_dim: i64,
    pub proj_dim: i64,
}

/// Compares a family of extension classes in `P = P(Ext^1(L, N))` with the
/// secant variety `Sec_h` of the curve in `P`, `h = (2 delta - d + sigma - 2)/2`.
/// A family of larger dimension meets the complement, giving Segre invariant at
/// least `sigma` for its general member.
pub fn secant_stability_test(g: i64, d: i64, delta: i64, sigma: i64, family_proj_dim: i64) -> Result<SecantCheck> {
    let gap = 2 * delta - d;
    if gap < 2 {
        return Err(Error::Precondition(format!(
            "secant test needs 2*delta - d >= 2, got {gap}"
        )));
    }
    bounded("sigma", sigma)?;
    if (gap - sigma).rem_euclid(2) != 0 {
        return Err(Error::Precondition(format!(
            "sigma = {sigma} must have the parity of 2*delta - d = {gap}"
        )));
    }
    if sigma < 4 - gap || sigma > gap {
        return Err(Error::Precondition(format!(
            "sigma = {sigma} outside [4 + d - 2*delta, 2*delta - d] = [{}, {gap}]",
            4 - gap
        )));
    }
    let proj_dim = ext_dim(g, d, delta, false)? - 1;
    at_least("family_proj_dim", family_proj_dim, 0)?;
    if family_proj_dim > proj_dim {
        return Err(Error::Precondition(format!(
            "family dimension {family_proj_dim} exceeds dim P = {proj_dim}"
        )));
    }
    let h = (gap + sigma - 2) / 2;
    let sec_dim = proj_dim.min(2 * h - 1);
    let verdict = match family_proj_dim.cmp(&sec_dim) {
        std::cmp::Ordering::Greater => Verdict::Certified,
        std::cmp::Ordering::Equal => Verdict::Boundary,
        std::cmp::Ordering::Less => Verdict::NotCertified,
    };
    Ok(SecantCheck {
        verdict,
        h,
        sec_dim,
        proj_dim,
    })
}

/// Dimension of the image of a family under the modular map.
pub fn modular_image_dim(base_dim: i64, fiber_family_dim: i64, generic_fiber_dim: i64) -> Result<i64> {
    at_least("base_dim", base_dim, 0)?;
    at_least("fiber_family_dim", fiber_family_dim, 0)?;
    at_least("generic_fiber_dim", generic_fiber_dim, 0)?;
    let dim = base_dim + fiber_family_dim - generic_fiber_dim;
    if dim < 0 {
        return Err(Error::Precondition(format!(
            "generic fiber dimension {generic_fiber_dim} exceeds the family dimension {}",
            base_dim + fiber_family_dim
        )));
    }
    Ok(dim)
}

/// Parameter counts for the families that sweep out each component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// Kernel `K_C - D`, quotient `K_C`, for `4g-4-2nu <= d <= 4g-7`.
    CanonicalQuotient,
    /// Quotient `K_C - p` with one-dimensional special fibre, `3g-5 <= d <= 4g-5-2nu`.
    PointQuotientHigh,
    /// Quotient `K_C - p` over the `W_1` locus, `2g-2 <= d <= 3g-6`.
    PointQuotientLow,
    /// Quotient `K_C - A`, the superabundant family.
    GonalQuotient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ledger {
    pub base: i64,
    pub fiber: i64,
    pub generic_fiber: i64,
}

impl Ledger {
    pub fn image_dim(&self) -> Result<i64> {
        modular_image_dim(self.base, self.fiber, self.generic_fiber)
    }
}

impl Construction {
    /// Degree range on which the construction applies; may be empty.
    pub fn range(&self, g: i64, nu: i64) -> (i64, i64) {
        match self {
            Construction::CanonicalQuotient => (4 * g - 4 - 2 * nu, 4 * g - 7),
            Construction::PointQuotientHigh => (3 * g - 5, 4 * g - 5 - 2 * nu),
            Construction::PointQuotientLow => (2 * g - 2, 3 * g - 6),
            Construction::GonalQuotient => (2 * g - 5 + 2 * nu, 4 * g - 5 - 2 * nu),
        }
    }

    pub fn ledger(&self, g: i64, nu: i64, d: i64) -> Result<Ledger> {
        at_least("g", g, 4)?;
        at_least("nu", nu, 2)?;
        let (lo, hi) = self.range(g, nu);
        if d < lo || d > hi {
            return Err(Error::OutOfRange {
                name: "d",
                value: d,
                expected: format!("{lo} <= d <= {hi} for {self:?}"),
            });
        }
        Ok(match self {
            Construction::CanonicalQuotient => Ledger {
                base: 4 * g - 4 - d,
                fiber: 4 * g - 6 - d,
                generic_fiber: 1,
            },
            Construction::PointQuotientHigh => Ledger {
                base: 4 * g - 4 - d,
                fiber: 4 * g - 7 - d,
                generic_fiber: 0,
            },
            Construction::PointQuotientLow => {
                let j = 3 * g - 5 - d;
                Ledger {
                    base: g + 1,
                    fiber: g - 2 + 2 * j,
                    generic_fiber: 0,
                }
            }
            Construction::GonalQuotient => Ledger {
                base: g,
                fiber: 5 * g - 6 - 2 * nu - d,
                generic_fiber: 0,
            },
        })
    }
}
