//! Splitting types of vector bundles on the projective line.
//!
//! A bundle `O(e_1) + ... + O(e_n)` is stored as its weakly increasing degree
//! vector. Vectors of a fixed rank and total degree form a poset under the
//! partial-sum order; the balanced vector is its unique maximum, and the
//! "balanced plus balanced" vectors `w_{r,l}` are the maximal ones carrying at
//! least `r + 1` sections.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{at_least, bounded, Error, Result};
use crate::numerics::rho_rank1;

/// Weakly increasing, non-empty integer vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct SplittingType(Vec<i64>);

impl TryFrom<Vec<i64>> for SplittingType {
    type Error = Error;

    fn try_from(raw: Vec<i64>) -> Result<Self> {
        Self::normalize(raw)
    }
}

impl From<SplittingType> for Vec<i64> {
    fn from(e: SplittingType) -> Self {
        e.0
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Degree and cohomology of `O(e)` on the projective line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerData {
    pub degree: i64,
    pub h0: i64,
    pub h1_line: i64,
}

/// Expected dimension `rho' = g - u(e)` of a splitting locus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingDim {
    pub rho_prime: i64,
    pub nonempty: bool,
    /// `min(g, rho')` when the locus is nonempty.
    pub dimension: Option<i64>,
}

impl SplittingType {
    /// Sorts `raw` into canonical form.
    pub fn normalize(mut raw: Vec<i64>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::Precondition("splitting type must be non-empty".into()));
        }
        for &x in &raw {
            bounded("entry", x)?;
        }
        raw.sort_unstable();
        Ok(Self(raw))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// The rank `nu`.
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn euler_data(&self) -> EulerData {
        EulerData {
            degree: self.degree(),
            h0: self.twisted_h0(0),
            h1_line: self.0.iter().map(|&e| (-e - 1).max(0)).sum(),
        }
    }

    /// `h^0(O(e) ⊗ O(m))`.
    pub fn twisted_h0(&self, m: i64) -> i64 {
        self.0.iter().map(|&e| (m + e + 1).max(0)).sum()
    }

    /// The magnitude `u(e) = sum_{i<j} max(0, e_j - e_i - 1)`, i.e. `h^1` of the
    /// endomorphism bundle.
    pub fn magnitude(&self) -> i64 {
        let e = &self.0;
        let mut u = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                u += (e[j] - e[i] - 1).max(0);
            }
        }
        u
    }

    fn partial_sums(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().scan(0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
    }

    fn touches(&self, min_entry: i64, max_entry: i64) -> bool {
        self.0.first() == Some(&min_entry) || self.0.last() == Some(&max_entry)
    }
}

pub fn euler_data(e: &SplittingType) -> EulerData {
    e.euler_data()
}

pub fn twisted_h0(e: &SplittingType, m: i64) -> i64 {
    e.twisted_h0(m)
}

pub fn magnitude(e: &SplittingType) -> i64 {
    e.magnitude()
}

pub fn expected_splitting_dim(g: i64, e: &SplittingType) -> Result<SplittingDim> {
    at_least("g", g, 1)?;
    let rho_prime = g - e.magnitude();
    let nonempty = rho_prime >= 0;
    Ok(SplittingDim {
        rho_prime,
        nonempty,
        dimension: nonempty.then(|| rho_prime.min(g)),
    })
}

/// Partial-sum order: `low <= high` iff every partial sum of `low` is at most
/// the corresponding partial sum of `high`. Both vectors must share rank and
/// total degree.
pub fn leq(low: &SplittingType, high: &SplittingType) -> Result<bool> {
    if low.rank() != high.rank() {
        return Err(Error::Precondition(format!(
            "cannot compare splitting types of ranks {} and {}",
            low.rank(),
            high.rank()
        )));
    }
    if low.degree() != high.degree() {
        return Err(Error::Precondition(format!(
            "cannot compare splitting types of degrees {} and {}",
            low.degree(),
            high.degree()
        )));
    }
    Ok(dominated(low, high))
}

// Caller guarantees equal rank and degree.
fn dominated(low: &SplittingType, high: &SplittingType) -> bool {
    low.partial_sums().zip(high.partial_sums()).all(|(a, b)| a <= b)
}

/// The balanced vector of the given rank and degree.
pub fn balanced(rank: i64, degree: i64) -> Result<SplittingType> {
    at_least("rank", rank, 1)?;
    bounded("degree", degree)?;
    Ok(SplittingType(balanced_entries(rank, degree)))
}

fn balanced_entries(rank: i64, degree: i64) -> Vec<i64> {
    let q = degree.div_euclid(rank);
    let high = degree.rem_euclid(rank);
    let mut v = vec![q; (rank - high) as usize];
    v.extend(std::iter::repeat_n(q + 1, high as usize));
    v
}

/// Shifts `l` with `max(0, r + 2 - nu) <= l <= r` and either `l = 0` or
/// `l <= g + 2r + 1 - d - nu`, in increasing order.
pub fn admissible_shifts(g: i64, nu: i64, r: i64, d: i64) -> Result<Vec<i64>> {
    bounded("g", g)?;
    at_least("nu", nu, 1)?;
    at_least("r", r, 0)?;
    bounded("d", d)?;
    let cap = g + 2 * r + 1 - d - nu;
    Ok(((r + 2 - nu).max(0)..=r).filter(|&l| l == 0 || l <= cap).collect())
}

/// The balanced-plus-balanced vector `B(nu - r - 1 + l, d' - l) + B(r + 1 - l, l)`
/// with `d' = d + 1 - g - nu`.
pub fn w_vector(g: i64, nu: i64, r: i64, ell: i64, d: i64) -> Result<SplittingType> {
    if r <= d - g {
        return Err(Error::Precondition(format!(
            "r = {r} <= d - g = {}: the locus is all of Pic^d",
            d - g
        )));
    }
    let shifts = admissible_shifts(g, nu, r, d)?;
    if !shifts.contains(&ell) {
        return Err(Error::Precondition(format!(
            "shift l = {ell} is not admissible for (g, nu, r, d) = ({g}, {nu}, {r}, {d}); admissible: {shifts:?}"
        )));
    }
    let d_prime = d + 1 - g - nu;
    let mut entries = block(nu - r - 1 + ell, d_prime - ell)?;
    entries.extend(block(r + 1 - ell, ell)?);
    SplittingType::normalize(entries)
}

fn block(rank: i64, degree: i64) -> Result<Vec<i64>> {
    match rank {
        0 if degree == 0 => Ok(Vec::new()),
        r if r < 1 => Err(Error::Precondition(format!(
            "balanced block of rank {rank} and degree {degree}"
        ))),
        _ => Ok(balanced_entries(rank, degree)),
    }
}

/// All weakly increasing length-`nu` vectors with entries in
/// `[min_entry, max_entry]` summing to `total`, in lexicographic order.
pub fn enumerate_types(nu: i64, total: i64, min_entry: i64, max_entry: i64) -> Result<Vec<SplittingType>> {
    at_least("nu", nu, 1)?;
    bounded("total", total)?;
    bounded("min_entry", min_entry)?;
    bounded("max_entry", max_entry)?;
    if min_entry > max_entry {
        return Err(Error::Precondition(format!("empty window [{min_entry}, {max_entry}]")));
    }
    if nu * min_entry > total || total > nu * max_entry {
        return Err(Error::Precondition(format!(
            "total {total} infeasible for {nu} entries in [{min_entry}, {max_entry}]"
        )));
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(nu as usize);
    fill(&mut cur, nu as usize, total, min_entry, max_entry, &mut out);
    Ok(out)
}

fn fill(cur: &mut Vec<i64>, len: usize, remaining: i64, lo: i64, hi: i64, out: &mut Vec<SplittingType>) {
    let left = (len - cur.len()) as i64;
    if left == 0 {
        if remaining == 0 {
            out.push(SplittingType(cur.clone()));
        }
        return;
    }
    // the next entry x forces the rest into [x, hi]
    let top = hi.min(remaining.div_euclid(left));
    for x in lo..=top {
        if x * left > remaining || remaining > x + (left - 1) * hi {
            continue;
        }
        cur.push(x);
        fill(cur, len, remaining - x, x, hi, out);
        cur.pop();
    }
}

/// Maximal elements, under [`leq`], of `{e : h0(e) >= r + 1}` inside the
/// enumeration window. Fails when a maximal element touches the window edge.
pub fn brute_force_maximal(nu: i64, total: i64, r: i64, min_entry: i64, max_entry: i64) -> Result<Vec<SplittingType>> {
    at_least("r", r, 0)?;
    let candidates: Vec<SplittingType> = enumerate_types(nu, total, min_entry, max_entry)?
        .into_iter()
        .filter(|e| e.twisted_h0(0) > r)
        .collect();

    // Any strictly larger element of the set would make some single unit
    // transfer land in the set, so surviving this test is necessary; the
    // exhaustive scan below makes it sufficient.
    let local: Vec<&SplittingType> = candidates.iter().filter(|e| !has_raising_move(e, r)).collect();

    let mut maximal: Vec<SplittingType> = local
        .into_iter()
        .filter(|e| !candidates.iter().any(|f| f != *e && dominated(e, f)))
        .cloned()
        .collect();
    maximal.sort();

    if let Some(e) = maximal.iter().find(|e| e.touches(min_entry, max_entry)) {
        return Err(Error::InconclusiveWindow {
            min: min_entry,
            max: max_entry,
            vector: e.to_string(),
        });
    }
    Ok(maximal)
}

fn has_raising_move(e: &SplittingType, r: i64) -> bool {
    let v = e.entries();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[j] - v[i] >= 2 {
                let mut moved = v.to_vec();
                moved[i] += 1;
                moved[j] -= 1;
                moved.sort_unstable();
                if SplittingType(moved).twisted_h0(0) > r {
                    return true;
                }
            }
        }
    }
    false
}

/// Starting window `[floor(total/nu) - (r+3), |total| + r + 3]`.
pub fn default_window(nu: i64, total: i64, r: i64) -> (i64, i64) {
    (total.div_euclid(nu) - (r + 3), total.abs() + r + 3)
}

/// [`brute_force_maximal`] over the default window, widened until conclusive.
/// Returns the maximal set and the window that produced it.
pub fn brute_force_maximal_auto(nu: i64, total: i64, r: i64) -> Result<(Vec<SplittingType>, (i64, i64))> {
    at_least("nu", nu, 1)?;
    at_least("r", r, 0)?;
    let (mut lo, mut hi) = default_window(nu, total, r);
    let step = r + 3;
    let mut last = None;
    for _ in 0..8 {
        match brute_force_maximal(nu, total, r, lo, hi) {
            Ok(found) => return Ok((found, (lo, hi))),
            Err(err @ Error::InconclusiveWindow { .. }) => {
                last = Some(err);
                lo -= step;
                hi += step;
            }
            Err(err) => return Err(err),
        }
    }
    Err(last.expect("loop ran at least once"))
}

/// Identity `g - u(w_{r,l}) = rho(g, r - l, d) - l * nu`, evaluated on both sides.
pub fn shift_identity_sides(g: i64, nu: i64, r: i64, ell: i64, d: i64) -> Result<(i64, i64)> {
    let w = w_vector(g, nu, r, ell, d)?;
    Ok((g - w.magnitude(), rho_rank1(g, r - ell, d)? - ell * nu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn st(v: &[i64]) -> SplittingType {
        SplittingType::normalize(v.to_vec()).unwrap()
    }

    // h^1 of End(O(e)) summed over every ordered pair of summands.
    fn endomorphism_h1(e: &SplittingType) -> i64 {
        let v = e.entries();
        let mut total = 0;
        for &a in v {
            for &b in v {
                total += (-(a - b) - 1).max(0);
            }
        }
        total
    }

    #[test]
    fn normalize_sorts() {
        assert_eq!(st(&[1, -2, 0]).entries(), &[-2, 0, 1]);
        assert_eq!(st(&[0, 0]).entries(), &[0, 0]);
        assert_eq!(st(&[-3, 1, -3]).entries(), &[-3, -3, 1]);
        assert!(SplittingType::normalize(vec![]).is_err());
    }

    #[test]
    fn euler_data_examples() {
        let e = st(&[-2, 0, 1]).euler_data();
        assert_eq!((e.degree, e.h0, e.h1_line), (-1, 3, 1));
        let e = st(&[0, 0]).euler_data();
        assert_eq!((e.degree, e.h0, e.h1_line), (0, 2, 0));
        let e = st(&[-3, -2, -2, 1]).euler_data();
        assert_eq!((e.degree, e.h0, e.h1_line), (-6, 2, 4));
    }

    #[test]
    fn twisted_h0_examples() {
        assert_eq!(st(&[-3, -3, 0, 0]).twisted_h0(3), 10);
        assert_eq!(st(&[0, 0]).twisted_h0(0), 2);
        assert_eq!(st(&[-2, 0, 1]).twisted_h0(-2), 0);
    }

    #[test]
    fn magnitude_examples() {
        for (v, u) in [(&[0, 0][..], 0), (&[-2, 0, 1][..], 3), (&[-3, -3, 0, 0][..], 8)] {
            let e = st(v);
            assert_eq!(endomorphism_h1(&e), u);
            assert_eq!(e.magnitude(), u);
        }
    }

    #[test]
    fn expected_dimension_examples() {
        assert_eq!(expected_splitting_dim(10, &st(&[-3, -3, 0, 0])).unwrap().rho_prime, 2);
        assert_eq!(expected_splitting_dim(10, &st(&[-3, -2, -2, 1])).unwrap().rho_prime, 3);
        // balanced(3, -10) = (-4,-3,-3) has magnitude 0 by the oracle
        let b = balanced(3, -10).unwrap();
        assert_eq!(b.entries(), &[-4, -3, -3]);
        assert_eq!(endomorphism_h1(&b), 0);
        let dim = expected_splitting_dim(5, &b).unwrap();
        assert_eq!(
            dim,
            SplittingDim {
                rho_prime: 5,
                nonempty: true,
                dimension: Some(5)
            }
        );
        let neg = expected_splitting_dim(2, &st(&[-3, -3, 0, 0])).unwrap();
        assert_eq!(
            neg,
            SplittingDim {
                rho_prime: -6,
                nonempty: false,
                dimension: None
            }
        );
    }

    #[test]
    fn leq_examples() {
        let a = st(&[-3, -2, -2, 1]);
        let b = st(&[-3, -3, 0, 0]);
        assert!(!leq(&a, &b).unwrap());
        assert!(!leq(&b, &a).unwrap());
        assert!(leq(&a, &a).unwrap());
        assert!(!leq(&st(&[-2, -2]), &st(&[-3, -1])).unwrap());
        assert!(leq(&st(&[-3, -1]), &st(&[-2, -2])).unwrap());
        assert!(leq(&st(&[0, 0]), &st(&[0, 0, 0])).is_err());
        assert!(leq(&st(&[0, 0]), &st(&[0, 1])).is_err());
    }

    #[test]
    fn balanced_examples() {
        assert_eq!(balanced(2, 0).unwrap().entries(), &[0, 0]);
        assert_eq!(balanced(1, 1).unwrap().entries(), &[1]);
        assert_eq!(balanced(3, -5).unwrap().entries(), &[-2, -2, -1]);
        assert!(balanced(0, 0).is_err());
    }

    #[test]
    fn shifts_examples() {
        assert_eq!(admissible_shifts(10, 4, 1, 7).unwrap(), vec![0, 1]);
        assert_eq!(admissible_shifts(10, 4, 1, 10).unwrap(), vec![0]);
        // l = 1 needs 1 <= g + 3 - d - nu = 7; l = 0 always passes
        assert_eq!(admissible_shifts(10, 3, 1, 3).unwrap(), vec![0, 1]);
    }

    #[test]
    fn w_vector_examples() {
        assert_eq!(w_vector(10, 4, 1, 0, 7).unwrap().entries(), &[-3, -3, 0, 0]);
        assert_eq!(w_vector(10, 4, 1, 1, 7).unwrap().entries(), &[-3, -2, -2, 1]);
        assert!(w_vector(10, 4, 1, 1, 10).is_err());
        assert!(w_vector(10, 4, 1, 0, 11).is_err());
        assert!(w_vector(10, 4, 1, 2, 7).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let v = enumerate_types(2, 0, -1, 1).unwrap();
        assert_eq!(v, vec![st(&[-1, 1]), st(&[0, 0])]);
        let v = enumerate_types(3, -1, -2, 1).unwrap();
        assert_eq!(v, vec![st(&[-2, 0, 1]), st(&[-1, -1, 1]), st(&[-1, 0, 0])]);
        assert!(enumerate_types(2, 10, -1, 1).is_err());
        assert!(enumerate_types(2, 0, 1, -1).is_err());
    }

    #[test]
    fn enumerate_pair_count_matches_formula() {
        for a in -4..=0 {
            for b in a..=4 {
                for t in 2 * a..=2 * b {
                    let count = (a..=b)
                        .flat_map(|x| (x..=b).map(move |y| (x, y)))
                        .filter(|(x, y)| x + y == t)
                        .count();
                    assert_eq!(enumerate_types(2, t, a, b).unwrap().len(), count);
                }
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        let m = brute_force_maximal(4, -6, 1, -8, 8).unwrap();
        assert_eq!(m, vec![st(&[-3, -3, 0, 0]), st(&[-3, -2, -2, 1])]);
        let m = brute_force_maximal(2, 0, 1, -4, 4).unwrap();
        assert_eq!(m, vec![st(&[0, 0])]);
        for e in brute_force_maximal(5, -9, 2, -10, 10).unwrap() {
            assert_eq!(e.euler_data().h0, 3);
        }
    }

    #[test]
    fn brute_force_rejects_touching_window() {
        // (0,0) touches max_entry 0
        let err = brute_force_maximal(2, 0, 1, -2, 0).unwrap_err();
        assert!(matches!(err, Error::InconclusiveWindow { .. }));
    }

    #[test]
    fn auto_window_agrees_with_fixed_window() {
        let (m, _) = brute_force_maximal_auto(4, -6, 1).unwrap();
        assert_eq!(m, brute_force_maximal(4, -6, 1, -8, 8).unwrap());
    }

    #[test]
    fn serde_normalizes() {
        let e: SplittingType = serde_json_like(&[3, -1, 0]);
        assert_eq!(e.entries(), &[-1, 0, 3]);
    }

    fn serde_json_like(v: &[i64]) -> SplittingType {
        SplittingType::try_from(v.to_vec()).unwrap()
    }

    fn arb_type() -> impl Strategy<Value = SplittingType> {
        prop::collection::vec(-12i64..12, 1..7).prop_map(|v| SplittingType::normalize(v).unwrap())
    }

    proptest! {
        #[test]
        fn euler_characteristic(e in arb_type()) {
            let ed = e.euler_data();
            prop_assert_eq!(ed.h0 - ed.h1_line, ed.degree + e.rank() as i64);
        }

        #[test]
        fn magnitude_is_endomorphism_h1(e in arb_type()) {
            prop_assert_eq!(e.magnitude(), endomorphism_h1(&e));
        }

        #[test]
        fn balanced_is_maximum(rank in 1i64..5, degree in -8i64..8) {
            let b = balanced(rank, degree).unwrap();
            prop_assert_eq!(b.magnitude(), 0);
            let lo = degree.div_euclid(rank) - 3;
            let hi = degree.abs() + 3;
            for e in enumerate_types(rank, degree, lo, hi).unwrap() {
                prop_assert!(leq(&e, &b).unwrap());
            }
        }
    }
}
