//! Components of `B^{k_2}_d ∩ U^s_C(d)` on a general ν-gonal curve.
//!
//! Presence of each component is decided by closed-form range predicates; the
//! case labels are derived from them afterwards. Where the labelled ranges leave
//! a gap the triple is flagged as ambiguous and only the regular component is
//! asserted.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{k_index, rho_fixed_det, rho_rank2, CurveParams};
use crate::rank1::stratify;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentKind {
    Reg2,
    Sup2,
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ComponentKind::Reg2 => "Reg2",
            ComponentKind::Sup2 => "Sup2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Regular,
    Superabundant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Birational {
    Uniruled,
    Ruled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kernel {
    /// A general line bundle of degree `n`.
    GeneralOfDegree(i64),
    /// `K_C - D` with `D` a general effective divisor of the given degree.
    CanonicalMinusGeneralDivisor(i64),
}

impl Kernel {
    pub fn degree(&self, g: i64) -> i64 {
        match *self {
            Kernel::GeneralOfDegree(n) => n,
            Kernel::CanonicalMinusGeneralDivisor(k) => 2 * g - 2 - k,
        }
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kernel::GeneralOfDegree(_) => f.write_str("N general"),
            Kernel::CanonicalMinusGeneralDivisor(k) => write!(f, "K_C-D, D general in C^({k})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quotient {
    /// `ω_C(-p)`, `p` general.
    CanonicalMinusPoint,
    /// `ω_C ⊗ A^∨` with `A` the gonal pencil.
    CanonicalMinusGonal,
}

impl Quotient {
    pub fn degree(&self, g: i64, nu: i64) -> i64 {
        match self {
            Quotient::CanonicalMinusPoint => 2 * g - 3,
            Quotient::CanonicalMinusGonal => 2 * g - 2 - nu,
        }
    }

    pub fn speciality(&self) -> i64 {
        match self {
            Quotient::CanonicalMinusPoint => 1,
            Quotient::CanonicalMinusGonal => 2,
        }
    }
}

impl fmt::Display for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Quotient::CanonicalMinusPoint => "K_C-p",
            Quotient::CanonicalMinusGonal => "K_C-A",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Minimality {
    MinimalAmongSpecialEffectiveQuotients,
    MinimalAmongAllQuotients,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub kernel: Kernel,
    pub kernel_degree: i64,
    pub quotient: Quotient,
    pub quotient_degree: i64,
    pub quotient_speciality: i64,
    pub minimality: Minimality,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Segre {
    Exact(i64),
    LowerBound(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Proved,
    PredictedUnconstructed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank2Component {
    pub kind: ComponentKind,
    pub dimension: i64,
    pub expected_dimension: i64,
    pub status: Status,
    pub generically_smooth: bool,
    pub birational_type: Birational,
    pub presentation: Presentation,
    pub segre: Segre,
    pub proved_for_genus_at_least: i64,
    pub provenance: Provenance,
}

#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseLabel {
    I,
    II_1,
    II_2,
    III,
    IV,
    V,
    VI,
}

impl CaseLabel {
    /// The label without its subcase.
    pub fn major(&self) -> &'static str {
        match self {
            CaseLabel::I => "I",
            CaseLabel::II_1 | CaseLabel::II_2 => "II",
            CaseLabel::III => "III",
            CaseLabel::IV => "IV",
            CaseLabel::V => "V",
            CaseLabel::VI => "VI",
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CaseLabel::II_1 => "II_1",
            CaseLabel::II_2 => "II_2",
            other => other.major(),
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Degree ranges not covered by any labelled case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sliver {
    /// `g` odd, `nu = (g-1)/2`, `3g-6 <= d <= 3g-4`.
    OddGenus,
    /// `g` even, `nu = g/2`, `d = 3g-5`.
    EvenGenus,
}

impl Sliver {
    pub fn describe(&self) -> &'static str {
        match self {
            Sliver::OddGenus => "uncovered sliver: g odd, nu = (g-1)/2, 3g-6 <= d <= 3g-4",
            Sliver::EvenGenus => "uncovered sliver: g even, nu = g/2, d = 3g-5",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub g: i64,
    pub nu: i64,
    pub d: i64,
    pub case_label: CaseLabel,
    pub components: Vec<Rank2Component>,
    pub warnings: Vec<String>,
    pub ambiguous: bool,
    pub sliver: Option<Sliver>,
}

impl Classification {
    /// No stable bundle with `k_2` sections exists.
    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, kind: ComponentKind) -> Option<&Rank2Component> {
        self.components.iter().find(|c| c.kind == kind)
    }
}

fn check_degree(g: i64, d: i64) -> Result<()> {
    if d < 2 * g - 2 || d > 4 * g - 4 {
        return Err(Error::OutOfRange {
            name: "d",
            value: d,
            expected: format!("2g-2 <= d <= 4g-4, i.e. {} <= d <= {}", 2 * g - 2, 4 * g - 4),
        });
    }
    Ok(())
}

/// Sup2 exists in this range when `2nu <= g - 2`; on the slivers the same
/// range is non-empty with `2nu` equal to `g - 1` or `g`.
fn in_sup_range(g: i64, nu: i64, d: i64) -> bool {
    2 * g - 5 + 2 * nu <= d && d <= 4 * g - 5 - 2 * nu
}

fn sup_proved(g: i64, nu: i64, d: i64) -> bool {
    2 * nu <= g - 2 && in_sup_range(g, nu, d)
}

pub fn sliver_of(g: i64, nu: i64, d: i64) -> Option<Sliver> {
    if g % 2 == 1 && 2 * nu == g - 1 && (3 * g - 6..=3 * g - 4).contains(&d) {
        Some(Sliver::OddGenus)
    } else if g % 2 == 0 && 2 * nu == g && d == 3 * g - 5 {
        Some(Sliver::EvenGenus)
    } else {
        None
    }
}

/// `g` odd, `nu = (g+1)/2`, `d = 3g-5` lies in both the II and VI ranges.
pub fn is_overlap(g: i64, nu: i64, d: i64) -> bool {
    g % 2 == 1 && 2 * nu == g + 1 && d == 3 * g - 5
}

fn label(g: i64, nu: i64, d: i64) -> Option<CaseLabel> {
    let small = 2 * nu <= g - 2;
    if d >= 4 * g - 6 {
        Some(CaseLabel::I)
    } else if d >= 4 * g - 4 - 2 * nu {
        if 2 * nu <= g || d >= 3 * g - 4 {
            Some(CaseLabel::II_1)
        } else {
            Some(CaseLabel::II_2)
        }
    } else if small && d >= 3 * g - 5 {
        Some(CaseLabel::III)
    } else if small && d >= 2 * g - 4 + 2 * nu && d <= 3 * g - 6 {
        Some(CaseLabel::IV)
    } else if small && d == 2 * g - 5 + 2 * nu {
        Some(CaseLabel::V)
    } else if d <= 2 * g - 6 + 2 * nu {
        Some(CaseLabel::VI)
    } else {
        None
    }
}

fn reg2_threshold(g: i64, nu: i64, d: i64) -> i64 {
    if d >= 4 * g - 4 - 2 * nu {
        4
    } else if d >= 3 * g - 5 && 2 * nu <= g {
        6
    } else if 2 * nu <= g - 2 {
        8
    } else {
        4
    }
}

fn reg2(g: i64, nu: i64, d: i64) -> Result<Rank2Component> {
    let rho = rho_rank2(g, d, 2)?;
    let kernel = if d >= 3 * g - 4 || (d == 3 * g - 5 && 2 * nu <= g) {
        Kernel::CanonicalMinusGeneralDivisor(4 * g - 5 - d)
    } else {
        Kernel::GeneralOfDegree(d - 2 * g + 3)
    };
    let quotient = Quotient::CanonicalMinusPoint;
    Ok(Rank2Component {
        kind: ComponentKind::Reg2,
        dimension: rho,
        expected_dimension: rho,
        status: Status::Regular,
        generically_smooth: true,
        birational_type: Birational::Uniruled,
        presentation: Presentation {
            kernel,
            kernel_degree: kernel.degree(g),
            quotient,
            quotient_degree: quotient.degree(g, nu),
            quotient_speciality: quotient.speciality(),
            minimality: Minimality::MinimalAmongSpecialEffectiveQuotients,
        },
        segre: Segre::LowerBound(if d % 2 == 0 { 2 } else { 1 }),
        proved_for_genus_at_least: reg2_threshold(g, nu, d),
        provenance: Provenance::Proved,
    })
}

fn sup2(g: i64, nu: i64, d: i64, provenance: Provenance) -> Result<Rank2Component> {
    let dimension = 6 * g - 6 - d - 2 * nu;
    let expected_dimension = rho_rank2(g, d, 2)?;
    let kernel = Kernel::GeneralOfDegree(d - 2 * g + 2 + nu);
    let quotient = Quotient::CanonicalMinusGonal;
    Ok(Rank2Component {
        kind: ComponentKind::Sup2,
        dimension,
        expected_dimension,
        status: if d > 2 * g - 5 + 2 * nu {
            Status::Superabundant
        } else {
            Status::Regular
        },
        generically_smooth: true,
        birational_type: Birational::Ruled,
        presentation: Presentation {
            kernel,
            kernel_degree: kernel.degree(g),
            quotient,
            quotient_degree: quotient.degree(g, nu),
            quotient_speciality: quotient.speciality(),
            minimality: Minimality::MinimalAmongAllQuotients,
        },
        segre: Segre::Exact(4 * g - 4 - d - 2 * nu),
        proved_for_genus_at_least: 8,
        provenance,
    })
}

pub fn classify(curve: CurveParams, d: i64) -> Result<Classification> {
    let (g, nu) = (curve.g(), curve.nu());
    check_degree(g, d)?;

    let sliver = sliver_of(g, nu, d);
    let case_label = match (label(g, nu, d), sliver) {
        (Some(l), None) => l,
        (None, Some(_)) if d >= 3 * g - 5 => CaseLabel::II_1,
        (None, Some(_)) => CaseLabel::VI,
        (l, s) => {
            return Err(Error::Invariant(format!(
                "case assignment for (g, nu, d) = ({g}, {nu}, {d}) gave label {l:?} with sliver {s:?}"
            )))
        }
    };

    let mut components = Vec::new();
    let mut warnings = Vec::new();
    if d <= 4 * g - 7 {
        components.push(reg2(g, nu, d)?);
    }
    if sup_proved(g, nu, d) {
        components.push(sup2(g, nu, d, Provenance::Proved)?);
    }
    if let Some(s) = sliver {
        warnings.push(format!("{}; only the regular component is asserted", s.describe()));
    }
    if is_overlap(g, nu, d) {
        warnings.push("d = 3g-5 lies in both the II and VI ranges; reported as II_2".to_string());
    }
    for c in &components {
        if g < c.proved_for_genus_at_least {
            warnings.push(format!(
                "{} is proved only for g >= {}",
                c.kind, c.proved_for_genus_at_least
            ));
        }
    }

    Ok(Classification {
        g,
        nu,
        d,
        case_label,
        components,
        warnings,
        ambiguous: sliver.is_some(),
        sliver,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseInterval {
    pub label: CaseLabel,
    pub lo: i64,
    pub hi: i64,
}

/// The labelled degree ranges for a curve, ordered by `lo`. Empty ranges are
/// omitted; the II/VI overlap and the slivers are left as they fall.
pub fn case_intervals(curve: CurveParams) -> Vec<CaseInterval> {
    let (g, nu) = (curve.g(), curve.nu());
    let small = 2 * nu <= g - 2;
    let mut out = vec![CaseInterval {
        label: CaseLabel::VI,
        lo: 2 * g - 2,
        hi: 2 * g - 6 + 2 * nu,
    }];
    if small {
        out.push(CaseInterval {
            label: CaseLabel::V,
            lo: 2 * g - 5 + 2 * nu,
            hi: 2 * g - 5 + 2 * nu,
        });
        out.push(CaseInterval {
            label: CaseLabel::IV,
            lo: 2 * g - 4 + 2 * nu,
            hi: 3 * g - 6,
        });
        out.push(CaseInterval {
            label: CaseLabel::III,
            lo: 3 * g - 5,
            hi: 4 * g - 5 - 2 * nu,
        });
    }
    let ii_lo = 4 * g - 4 - 2 * nu;
    if 2 * nu <= g {
        out.push(CaseInterval {
            label: CaseLabel::II_1,
            lo: ii_lo,
            hi: 4 * g - 7,
        });
    } else {
        out.push(CaseInterval {
            label: CaseLabel::II_2,
            lo: ii_lo,
            hi: 3 * g - 5,
        });
        out.push(CaseInterval {
            label: CaseLabel::II_1,
            lo: 3 * g - 4,
            hi: 4 * g - 7,
        });
    }
    out.push(CaseInterval {
        label: CaseLabel::I,
        lo: 4 * g - 6,
        hi: 4 * g - 4,
    });
    out.retain(|c| c.lo <= c.hi);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TeixidorResult {
    pub reducible: bool,
    pub witness_n: Option<i64>,
}

/// Reducibility via pencils: an extra component exists iff some `W^1_n` with
/// `2n < 4g-4-d` has dimension at least `2g+2n-d-5`.
pub fn teixidor_test(curve: CurveParams, d: i64) -> Result<TeixidorResult> {
    let g = curve.g();
    if d < 2 * g - 3 || d > 4 * g - 7 {
        return Err(Error::OutOfRange {
            name: "d",
            value: d,
            expected: format!("2g-3 <= d <= 4g-7, i.e. {} <= d <= {}", 2 * g - 3, 4 * g - 7),
        });
    }
    let mut n = 0;
    while 2 * n < 4 * g - 4 - d {
        let top = stratify(curve, 1, n)?.iter().map(|c| c.dimension).max();
        if top.is_some_and(|dim| dim >= 2 * g + 2 * n - d - 5) {
            return Ok(TeixidorResult {
                reducible: true,
                witness_n: Some(n),
            });
        }
        n += 1;
    }
    Ok(TeixidorResult {
        reducible: false,
        witness_n: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedDetComponent {
    pub kind: ComponentKind,
    pub dimension: i64,
    pub note: String,
}

/// Components of the fixed-determinant locus `B^{k_2}_M`.
pub fn fixed_det_components(curve: CurveParams, d: i64) -> Result<Vec<FixedDetComponent>> {
    let (g, nu) = (curve.g(), curve.nu());
    if 2 * nu > g - 2 {
        return Err(Error::Precondition(format!(
            "fixed determinant needs nu <= (g-2)/2, got nu = {nu} with g = {g}"
        )));
    }
    if d < 2 * g - 2 || d > 4 * g - 5 - 2 * nu {
        return Err(Error::OutOfRange {
            name: "d",
            value: d,
            expected: format!(
                "2g-2 <= d <= 4g-5-2nu, i.e. {} <= d <= {}",
                2 * g - 2,
                4 * g - 5 - 2 * nu
            ),
        });
    }
    let mut out = Vec::new();
    if d <= 3 * g - 4 {
        out.push(FixedDetComponent {
            kind: ComponentKind::Reg2,
            dimension: rho_fixed_det(g, d)?,
            note: "expected dimension".into(),
        });
    }
    if in_sup_range(g, nu, d) {
        out.push(FixedDetComponent {
            kind: ComponentKind::Sup2,
            dimension: 5 * g - 6 - d - 2 * nu,
            note: "birational to P(Ext^1(K_C-A, N))".into(),
        });
    }
    Ok(out)
}

/// Every invariant a classification must satisfy; returns the failures.
pub fn check_invariants(c: &Classification) -> Vec<String> {
    let (g, nu, d) = (c.g, c.nu, c.d);
    let mut bad = Vec::new();
    let empty_range = (4 * g - 6..=4 * g - 4).contains(&d);
    if c.is_empty() != empty_range {
        bad.push(format!("empty = {} but empty range = {empty_range}", c.is_empty()));
    }
    if (c.case_label == CaseLabel::I) != c.is_empty() {
        bad.push(format!("label {} with {} components", c.case_label, c.components.len()));
    }
    if c.components.len() > 2 {
        bad.push(format!("{} components", c.components.len()));
    }
    let mut kinds: Vec<_> = c.components.iter().map(|x| x.kind).collect();
    kinds.dedup();
    if kinds.len() != c.components.len() {
        bad.push("repeated component kind".into());
    }
    let rho = 8 * g - 11 - 2 * d;
    let k2 = d - 2 * g + 4;
    for comp in &c.components {
        let tag = comp.kind;
        if (comp.status == Status::Superabundant) != (comp.dimension > comp.expected_dimension) {
            bad.push(format!(
                "{tag}: status {:?} with dim {} vs expected {}",
                comp.status, comp.dimension, comp.expected_dimension
            ));
        }
        if comp.expected_dimension != rho || 4 * g - 3 - 2 * k2 != rho {
            bad.push(format!(
                "{tag}: expected dimension {} != {rho}",
                comp.expected_dimension
            ));
        }
        let p = &comp.presentation;
        if p.kernel_degree + p.quotient_degree != d || p.kernel.degree(g) != p.kernel_degree {
            bad.push(format!(
                "{tag}: presentation degrees {} + {} != {d}",
                p.kernel_degree, p.quotient_degree
            ));
        }
        if p.quotient_speciality != p.quotient.speciality() {
            bad.push(format!("{tag}: quotient speciality {}", p.quotient_speciality));
        }
        if comp.dimension < 0 {
            bad.push(format!("{tag}: negative dimension {}", comp.dimension));
        }
        match comp.kind {
            ComponentKind::Reg2 => {
                if comp.dimension != rho || comp.birational_type != Birational::Uniruled {
                    bad.push(format!("Reg2: dim {} / {:?}", comp.dimension, comp.birational_type));
                }
            }
            ComponentKind::Sup2 => {
                let s = 4 * g - 4 - d - 2 * nu;
                if comp.segre != Segre::Exact(s) || s < 1 || comp.birational_type != Birational::Ruled {
                    bad.push(format!("Sup2: segre {:?} / {:?}", comp.segre, comp.birational_type));
                }
                // s(F) is bounded by 2 deg(K_C-A) - d
                if s > 2 * (2 * g - 2 - nu) - d {
                    bad.push(format!("Sup2: segre {s} exceeds 2 delta - d"));
                }
            }
        }
    }
    if let (Some(r), Some(s)) = (c.component(ComponentKind::Reg2), c.component(ComponentKind::Sup2)) {
        if s.dimension - r.dimension != d - (2 * g - 5 + 2 * nu) {
            bad.push(format!("dimension gap {} != d - (2g-5+2nu)", s.dimension - r.dimension));
        }
    }
    let single = (2 * g - 2..=2 * g - 6 + 2 * nu).contains(&d) || (4 * g - 4 - 2 * nu..=4 * g - 7).contains(&d);
    if single && c.components.len() != 1 {
        bad.push(format!("expected one component, found {}", c.components.len()));
    }
    if c.ambiguous != c.sliver.is_some() {
        bad.push("ambiguity flag disagrees with sliver tag".into());
    }
    if let Err(e) = k_index(g, d, 2) {
        bad.push(e.to_string());
    }
    bad
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub g: i64,
    pub nu: i64,
    pub d: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub at: Triple,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub at: Triple,
    pub reducible: bool,
    pub witness_n: Option<i64>,
    pub proved_components: usize,
    pub sliver: Option<Sliver>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmbiguousTriple {
    pub at: Triple,
    pub sliver: Sliver,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub g_min: i64,
    pub g_max: i64,
    pub triples: usize,
    pub case_counts: BTreeMap<CaseLabel, usize>,
    pub violations: Vec<Violation>,
    pub mismatches: Vec<Mismatch>,
    pub ambiguous: Vec<AmbiguousTriple>,
    pub overlaps: Vec<Triple>,
    pub predicted_unconstructed: Vec<Triple>,
}

impl AuditReport {
    /// No invariant failures and every Teixidor mismatch is a tagged sliver.
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
            && self.mismatches.iter().all(|m| m.sliver.is_some())
            && self.mismatches.len() == self.ambiguous.len()
    }
}

#[derive(Default)]
struct CellReport {
    triples: usize,
    case_counts: BTreeMap<CaseLabel, usize>,
    violations: Vec<Violation>,
    mismatches: Vec<Mismatch>,
    ambiguous: Vec<AmbiguousTriple>,
    overlaps: Vec<Triple>,
    predicted_unconstructed: Vec<Triple>,
}

fn audit_cell(curve: CurveParams) -> CellReport {
    let (g, nu) = (curve.g(), curve.nu());
    let mut rep = CellReport::default();

    let intervals = case_intervals(curve);
    for (i, a) in intervals.iter().enumerate() {
        for b in &intervals[i + 1..] {
            let (lo, hi) = (a.lo.max(b.lo), a.hi.min(b.hi));
            if lo <= hi && !(lo..=hi).all(|d| is_overlap(g, nu, d)) {
                rep.violations.push(Violation {
                    at: Triple { g, nu, d: lo },
                    message: format!("case ranges {} and {} overlap", a.label, b.label),
                });
            }
        }
    }

    for d in 2 * g - 2..=4 * g - 4 {
        let at = Triple { g, nu, d };
        rep.triples += 1;
        let c = match classify(curve, d) {
            Ok(c) => c,
            Err(e) => {
                rep.violations.push(Violation {
                    at,
                    message: e.to_string(),
                });
                continue;
            }
        };
        *rep.case_counts.entry(c.case_label).or_default() += 1;
        for message in check_invariants(&c) {
            rep.violations.push(Violation { at, message });
        }
        let covering = intervals.iter().filter(|iv| (iv.lo..=iv.hi).contains(&d)).count();
        match (covering, c.sliver.is_some()) {
            (0, true) | (1, false) => {}
            (2, false) if is_overlap(g, nu, d) => rep.overlaps.push(at),
            (n, s) => rep.violations.push(Violation {
                at,
                message: format!("covered by {n} case ranges (sliver: {s})"),
            }),
        }
        if let Some(sliver) = c.sliver {
            rep.ambiguous.push(AmbiguousTriple { at, sliver });
        }
        if d <= 4 * g - 7 {
            let proved = c
                .components
                .iter()
                .filter(|x| x.provenance == Provenance::Proved)
                .count();
            match teixidor_test(curve, d) {
                Ok(t) => {
                    if t.reducible != (proved >= 2) {
                        rep.mismatches.push(Mismatch {
                            at,
                            reducible: t.reducible,
                            witness_n: t.witness_n,
                            proved_components: proved,
                            sliver: c.sliver,
                        });
                        if t.reducible {
                            rep.predicted_unconstructed.push(at);
                        }
                    }
                }
                Err(e) => rep.violations.push(Violation {
                    at,
                    message: e.to_string(),
                }),
            }
        }
    }
    rep
}

/// Sweeps every valid `(g, nu, d)` with `g_min <= g <= g_max`.
pub fn audit(g_min: i64, g_max: i64) -> Result<AuditReport> {
    if g_min < 4 {
        return Err(Error::OutOfRange {
            name: "g_min",
            value: g_min,
            expected: "g_min >= 4".into(),
        });
    }
    crate::error::at_least("g_max", g_max, g_min)?;
    let cells: Vec<CellReport> = CurveParams::grid(g_min, g_max)
        .into_par_iter()
        .map(audit_cell)
        .collect();

    let mut report = AuditReport {
        g_min,
        g_max,
        triples: 0,
        case_counts: BTreeMap::new(),
        violations: Vec::new(),
        mismatches: Vec::new(),
        ambiguous: Vec::new(),
        overlaps: Vec::new(),
        predicted_unconstructed: Vec::new(),
    };
    for cell in cells {
        report.triples += cell.triples;
        for (k, v) in cell.case_counts {
            *report.case_counts.entry(k).or_default() += v;
        }
        report.violations.extend(cell.violations);
        report.mismatches.extend(cell.mismatches);
        report.ambiguous.extend(cell.ambiguous);
        report.overlaps.extend(cell.overlaps);
        report.predicted_unconstructed.extend(cell.predicted_unconstructed);
    }
    Ok(report)
}

/// A predicted extra component on a sliver triple, for reporting only.
pub fn predicted_component(curve: CurveParams, d: i64) -> Result<Option<Rank2Component>> {
    let (g, nu) = (curve.g(), curve.nu());
    check_degree(g, d)?;
    if sliver_of(g, nu, d).is_some() && in_sup_range(g, nu, d) {
        return sup2(g, nu, d, Provenance::PredictedUnconstructed).map(Some);
    }
    Ok(None)
}
