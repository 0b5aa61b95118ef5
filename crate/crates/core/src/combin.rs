//! Weak combinatorics and the Poincaré-type quadratics built from it.
//!
//! A [`WeakCombinatorics`] records how many components of each degree an
//! arrangement has and how many singular points of each type it has:
//! ordinary `r`-fold points (`n_r`) and tacnode-like `A_3`, `A_5`, `A_7`
//! points (`t3`, `t5`, `t7`). From it we build
//!
//! * the reduced Poincaré polynomial of a line arrangement ([`pi0`]),
//! * the combinatorial Poincaré polynomial of a conic-line arrangement
//!   ([`poincare_cl`]) and of a conic arrangement with `A_k` points
//!   ([`poincare_conics`]),
//! * the curve-level polynomial `1 + (d-1) t + ((d-1)^2 - tau) t^2`
//!   ([`poincare_general`]),
//! * the Betti polynomial of the complement ([`betti_polynomial`]).
//!
//! For a free arrangement with quasi-homogeneous singularities these split as
//! `(1 + d1 t)(1 + d2 t)` over the exponents; [`split_over_rationals`] tests
//! that. The remaining functions are the counting identities and the
//! inequality that free `d`-arrangements satisfy.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinError {
    #[error("line-arrangement input expected (only degree-1 components, no A_k points)")]
    NonLineInput,
    #[error("components of degree {0} are not supported here")]
    UnsupportedComponentDegree(u32),
    #[error("multiplicity {0} is not a singular-point multiplicity (need r >= 2)")]
    InvalidMultiplicity(u32),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

fn precondition(msg: impl Into<String>) -> CombinError {
    CombinError::Precondition(msg.into())
}

/// Component-degree counts, ordinary point counts and `A_k` counts.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct WeakCombinatorics {
    /// degree `i` -> number of components of degree `i`
    #[serde(rename = "k")]
    pub k_by_degree: BTreeMap<u32, u64>,
    /// multiplicity `r >= 2` -> number of ordinary `r`-fold points
    #[serde(rename = "n")]
    pub n_by_mult: BTreeMap<u32, u64>,
    #[serde(default)]
    pub t3: u64,
    #[serde(default)]
    pub t5: u64,
    #[serde(default)]
    pub t7: u64,
}

impl WeakCombinatorics {
    /// Builds a validated vector; zero counts are dropped.
    pub fn new<K, N>(k_by_degree: K, n_by_mult: N, t3: u64, t5: u64, t7: u64) -> Result<Self, CombinError>
    where
        K: IntoIterator<Item = (u32, u64)>,
        N: IntoIterator<Item = (u32, u64)>,
    {
        let mut w = WeakCombinatorics { t3, t5, t7, ..Default::default() };
        for (i, k) in k_by_degree {
            if i == 0 {
                return Err(CombinError::UnsupportedComponentDegree(0));
            }
            if k > 0 {
                *w.k_by_degree.entry(i).or_default() += k;
            }
        }
        for (r, n) in n_by_mult {
            if r < 2 {
                return Err(CombinError::InvalidMultiplicity(r));
            }
            if n > 0 {
                *w.n_by_mult.entry(r).or_default() += n;
            }
        }
        Ok(w)
    }

    /// Conic-line arrangement `(d lines, k conics; n_2, n_3, ...)`.
    pub fn conic_line(lines: u64, conics: u64, n: &[u64]) -> Self {
        Self::new(
            [(1, lines), (2, conics)],
            n.iter().enumerate().map(|(i, &c)| (i as u32 + 2, c)),
            0,
            0,
            0,
        )
        .expect("valid by construction")
    }

    /// Checks the invariants the constructor enforces; useful after
    /// deserialization.
    pub fn validate(&self) -> Result<(), CombinError> {
        if self.k_by_degree.contains_key(&0) {
            return Err(CombinError::UnsupportedComponentDegree(0));
        }
        if let Some(&r) = self.n_by_mult.keys().find(|&&r| r < 2) {
            return Err(CombinError::InvalidMultiplicity(r));
        }
        Ok(())
    }

    pub fn components_of_degree(&self, i: u32) -> u64 {
        self.k_by_degree.get(&i).copied().unwrap_or(0)
    }

    pub fn points_of_multiplicity(&self, r: u32) -> u64 {
        self.n_by_mult.get(&r).copied().unwrap_or(0)
    }

    /// `d`, the number of lines.
    pub fn lines(&self) -> u64 {
        self.components_of_degree(1)
    }

    /// `k`, the number of conics.
    pub fn conics(&self) -> u64 {
        self.components_of_degree(2)
    }

    /// Degree of the whole arrangement, `sum_i i k_i`.
    pub fn total_degree(&self) -> u64 {
        self.k_by_degree.iter().map(|(&i, &k)| i as u64 * k).sum()
    }

    pub fn has_tacnodes(&self) -> bool {
        self.t3 + self.t5 + self.t7 > 0
    }

    fn max_component_degree(&self) -> Option<u32> {
        self.k_by_degree.keys().next_back().copied()
    }

    /// `sum_r (r-1) n_r`
    fn weighted_points(&self) -> i64 {
        self.n_by_mult.iter().map(|(&r, &n)| (r as i64 - 1) * n as i64).sum()
    }

    fn require_lines_and_conics(&self) -> Result<(), CombinError> {
        if let Some(i) = self.max_component_degree().filter(|&i| i > 2) {
            return Err(CombinError::UnsupportedComponentDegree(i));
        }
        if self.has_tacnodes() {
            return Err(precondition("only ordinary singular points are allowed"));
        }
        Ok(())
    }

    fn require_conics_only(&self) -> Result<(), CombinError> {
        if let Some((&i, _)) = self.k_by_degree.iter().find(|(&i, _)| i != 2) {
            return Err(CombinError::UnsupportedComponentDegree(i));
        }
        Ok(())
    }
}

impl fmt::Display for WeakCombinatorics {
    /// The vector `(k_1, ..., k_l; n_2, ..., n_t)` followed by any
    /// nonzero `A_k` counts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max_i = self.max_component_degree().unwrap_or(0);
        let ks: Vec<String> = (1..=max_i).map(|i| self.components_of_degree(i).to_string()).collect();
        let max_r = self.n_by_mult.keys().next_back().copied().unwrap_or(1);
        let ns: Vec<String> = (2..=max_r).map(|r| self.points_of_multiplicity(r).to_string()).collect();
        write!(f, "({}; {})", ks.join(", "), ns.join(", "))?;
        for (name, t) in [("t3", self.t3), ("t5", self.t5), ("t7", self.t7)] {
            if t > 0 {
                write!(f, " {name}={t}")?;
            }
        }
        Ok(())
    }
}

/// `c0 + c1 t + c2 t^2` with integer coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticPolynomial {
    pub c0: i64,
    pub c1: i64,
    pub c2: i64,
}

impl QuadraticPolynomial {
    pub fn new(c0: i64, c1: i64, c2: i64) -> Self {
        QuadraticPolynomial { c0, c1, c2 }
    }

    /// `1 + c1 t + c2 t^2`
    pub fn poincare(c1: i64, c2: i64) -> Self {
        Self::new(1, c1, c2)
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.c0 + self.c1 * t + self.c2 * t * t
    }
}

impl fmt::Display for QuadraticPolynomial {
    /// Canonical rendering, e.g. `1 + 7t + 16t^2`; zero terms are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (c, var) in [(self.c0, ""), (self.c1, "t"), (self.c2, "t^2")] {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if wrote {
                write!(f, " {sign} ")?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            let a = c.unsigned_abs();
            if a != 1 || var.is_empty() {
                write!(f, "{a}")?;
            }
            f.write_str(var)?;
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Outcome of [`split_over_rationals`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitResult {
    pub splits: bool,
    /// `(d1, d2)` with `d1 <= d2` when the polynomial splits.
    pub roots: Option<(u64, u64)>,
}

impl SplitResult {
    pub const NO_SPLIT: SplitResult = SplitResult { splits: false, roots: None };

    /// `(1+d1*t)(1+d2*t)`, when split.
    pub fn factored(&self) -> Option<String> {
        self.roots.map(|(a, b)| format!("(1+{a}*t)(1+{b}*t)"))
    }
}

/// Sums `r^i n_r` for `i = 0, 1, 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Moments {
    pub f0: i64,
    pub f1: i64,
    pub f2: i64,
}

pub fn moments(w: &WeakCombinatorics) -> Moments {
    let mut m = Moments { f0: 0, f1: 0, f2: 0 };
    for (&r, &n) in &w.n_by_mult {
        let (r, n) = (r as i64, n as i64);
        m.f0 += n;
        m.f1 += r * n;
        m.f2 += r * r * n;
    }
    m
}

/// Reduced Poincaré polynomial of a line arrangement:
/// `1 + (d-1) t + (sum (r-1) n_r - d + 1) t^2`.
pub fn pi0(w: &WeakCombinatorics) -> Result<QuadraticPolynomial, CombinError> {
    if w.k_by_degree.keys().any(|&i| i != 1) || w.has_tacnodes() {
        return Err(CombinError::NonLineInput);
    }
    let d = w.lines() as i64;
    Ok(QuadraticPolynomial::poincare(d - 1, w.weighted_points() - d + 1))
}

/// Combinatorial Poincaré polynomial of `d` lines and `k` conics:
/// `1 + (2k+d-1) t + (sum (r-1) n_r - d + 1) t^2`.
pub fn poincare_cl(w: &WeakCombinatorics) -> Result<QuadraticPolynomial, CombinError> {
    w.require_lines_and_conics()?;
    let d = w.lines() as i64;
    let k = w.conics() as i64;
    Ok(QuadraticPolynomial::poincare(2 * k + d - 1, w.weighted_points() - d + 1))
}

/// Poincaré polynomial of `k >= 2` conics with ordinary points of
/// multiplicity at most 4 and `A_3`, `A_5`, `A_7` points:
/// `1 + (2k-1) t + (n2 + 2 n3 + 3 n4 + t3 + t5 + t7 + 1) t^2`.
pub fn poincare_conics(w: &WeakCombinatorics) -> Result<QuadraticPolynomial, CombinError> {
    w.require_conics_only()?;
    let k = w.conics() as i64;
    if k < 2 {
        return Err(precondition("at least two conics are required"));
    }
    if let Some(r) = w.n_by_mult.keys().find(|&&r| r > 4) {
        return Err(precondition(format!("ordinary {r}-fold points are not allowed")));
    }
    let c2 = w.weighted_points() + (w.t3 + w.t5 + w.t7) as i64 + 1;
    Ok(QuadraticPolynomial::poincare(2 * k - 1, c2))
}

/// `1 + (d-1) t + ((d-1)^2 - tau) t^2` for a reduced curve of degree `d`.
pub fn poincare_general(d: u64, tau: u64) -> Result<QuadraticPolynomial, CombinError> {
    if d < 2 {
        return Err(precondition("curve degree must be at least 2"));
    }
    let (d, tau) = (d as i64, tau as i64);
    if tau > (d - 1) * (d - 1) {
        return Err(precondition(format!("tau = {tau} exceeds (d-1)^2 = {}", (d - 1) * (d - 1))));
    }
    Ok(QuadraticPolynomial::poincare(d - 1, (d - 1) * (d - 1) - tau))
}

/// Tests whether `1 + c1 t + c2 t^2 = (1 + d1 t)(1 + d2 t)` with
/// non-negative integers `d1 <= d2`.
///
/// By the rational root theorem a rational factorization of an integer
/// polynomial with constant term 1 into factors `1 + a t` has integral `a`,
/// so it suffices to look for an integral square root of the discriminant.
/// Inputs with `c0 != 1` never split in this sense.
pub fn split_over_rationals(p: &QuadraticPolynomial) -> SplitResult {
    if p.c0 != 1 {
        return SplitResult::NO_SPLIT;
    }
    let (c1, c2) = (p.c1 as i128, p.c2 as i128);
    let disc = c1 * c1 - 4 * c2;
    if disc < 0 {
        return SplitResult::NO_SPLIT;
    }
    let s = isqrt(disc as u128) as i128;
    if s * s != disc {
        return SplitResult::NO_SPLIT;
    }
    // c1 - s and c1 + s share parity and their product is 4 c2, so both are even
    let (d1, d2) = ((c1 - s) / 2, (c1 + s) / 2);
    if d1 < 0 {
        return SplitResult::NO_SPLIT;
    }
    SplitResult { splits: true, roots: Some((d1 as u64, d2 as u64)) }
}

fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

fn choose2(n: i64) -> i64 {
    n * (n - 1) / 2
}

/// `sum_r C(r, 2) n_r`, the number of branch pairs meeting at ordinary points.
fn branch_pairs(w: &WeakCombinatorics) -> i64 {
    w.n_by_mult.iter().map(|(&r, &n)| choose2(r as i64) * n as i64).sum()
}

/// Bézout count for lines and conics:
/// `4 C(k,2) + 2kd + C(d,2) = sum C(r,2) n_r`.
pub fn count_check_cl(w: &WeakCombinatorics) -> Result<bool, CombinError> {
    w.require_lines_and_conics()?;
    let (d, k) = (w.lines() as i64, w.conics() as i64);
    Ok(4 * choose2(k) + 2 * k * d + choose2(d) == branch_pairs(w))
}

/// Bézout count for conics: `4 C(k,2) = n2 + 3 n3 + 6 n4 + 2 t3 + 3 t5 + 4 t7`.
pub fn count_check_conics(w: &WeakCombinatorics) -> Result<bool, CombinError> {
    w.require_conics_only()?;
    let k = w.conics() as i64;
    let rhs = branch_pairs(w) + 2 * w.t3 as i64 + 3 * w.t5 as i64 + 4 * w.t7 as i64;
    Ok(4 * choose2(k) == rhs)
}

/// Total Milnor number predicted by the local dictionary:
/// `sum (r-1)^2 n_r + 3 t3 + 5 t5 + 7 t7`.
pub fn tau_from_combinatorics(w: &WeakCombinatorics) -> u64 {
    let ordinary: u64 = w.n_by_mult.iter().map(|(&r, &n)| (r as u64 - 1).pow(2) * n).sum();
    ordinary + 3 * w.t3 + 5 * w.t5 + 7 * w.t7
}

/// `sum (r-1) n_r - d + 1 = d1 d2`.
pub fn check_exponent_identity_cl(w: &WeakCombinatorics, d1: u64, d2: u64) -> Result<bool, CombinError> {
    w.require_lines_and_conics()?;
    Ok(w.weighted_points() - w.lines() as i64 + 1 == (d1 * d2) as i64)
}

/// `n2 + 2 n3 + 3 n4 + t3 + t5 + t7 + 1 = d1 d2`.
pub fn check_exponent_identity_conics(w: &WeakCombinatorics, d1: u64, d2: u64) -> Result<bool, CombinError> {
    let c2 = poincare_conics(w)?.c2;
    Ok(c2 == (d1 * d2) as i64)
}

/// The two sides of the inequality `sum (r^2 - 5r + 4) n_r >= 3 + 3dk(d-2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DdInequality {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

fn require_d_arrangement(w: &WeakCombinatorics, d: u32, k: u64) -> Result<(), CombinError> {
    let ok = w.k_by_degree.is_empty()
        || (w.k_by_degree.len() == 1 && w.components_of_degree(d) == k);
    if !ok {
        return Err(precondition(format!("expected {k} components, all of degree {d}")));
    }
    if w.has_tacnodes() {
        return Err(precondition("d-arrangements have ordinary singular points only"));
    }
    Ok(())
}

/// Necessary condition for a free `d`-arrangement of `k` curves with
/// quasi-homogeneous singularities (`d >= 2`, `k >= 2`).
pub fn dd_inequality(w: &WeakCombinatorics, d: u32, k: u64) -> Result<DdInequality, CombinError> {
    if d < 2 {
        return Err(precondition("the inequality needs curves of degree d >= 2"));
    }
    if k < 2 {
        return Err(precondition("the inequality needs k >= 2 curves"));
    }
    require_d_arrangement(w, d, k)?;
    let m = moments(w);
    let lhs = m.f2 - 5 * m.f1 + 4 * m.f0;
    let (d, k) = (d as i64, k as i64);
    let rhs = 3 + 3 * d * k * (d - 2);
    Ok(DdInequality { lhs, rhs, holds: lhs >= rhs })
}

/// The conic case of [`dd_inequality`] in the form
/// `sum_{r>=5} (r^2 - 5r + 4) n_r >= 3 + 2 n2 + 2 n3`; returns both sides.
pub fn dd_inequality_conic_form(w: &WeakCombinatorics) -> (i64, i64) {
    let lhs = w
        .n_by_mult
        .range(5..)
        .map(|(&r, &n)| {
            let r = r as i64;
            (r * r - 5 * r + 4) * n as i64
        })
        .sum();
    let rhs = 3 + 2 * w.points_of_multiplicity(2) as i64 + 2 * w.points_of_multiplicity(3) as i64;
    (lhs, rhs)
}

/// Bézout count for a `d`-arrangement: `d^2 (k^2 - k) = f2 - f1`.
pub fn dd_count_check(w: &WeakCombinatorics, d: u32, k: u64) -> Result<bool, CombinError> {
    require_d_arrangement(w, d, k)?;
    let m = moments(w);
    let (d, k) = (d as i64, k as i64);
    Ok(d * d * (k * k - k) == m.f2 - m.f1)
}

/// Betti polynomial of the complement of `d` lines and `k` conics:
/// `1 + (k+d-1) t + (sum (r-1) n_r - d - k + 1) t^2`.
pub fn betti_polynomial(w: &WeakCombinatorics) -> Result<QuadraticPolynomial, CombinError> {
    w.require_lines_and_conics()?;
    let (d, k) = (w.lines() as i64, w.conics() as i64);
    Ok(QuadraticPolynomial::poincare(k + d - 1, w.weighted_points() - d - k + 1))
}

/// Euler number of the complement, `B_M(-1)`, cross-checked against the
/// combinatorial Poincaré polynomial at `-1`.
pub fn euler_number(w: &WeakCombinatorics) -> Result<i64, CombinError> {
    let b = betti_polynomial(w)?.eval(-1);
    let p = poincare_cl(w)?.eval(-1);
    if b != p {
        return Err(CombinError::Invariant(format!("B_M(-1) = {b} but P(-1) = {p}")));
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cl(lines: u64, conics: u64, n: &[u64]) -> WeakCombinatorics {
        WeakCombinatorics::conic_line(lines, conics, n)
    }

    fn conics(k: u64, n: &[u64], t3: u64, t5: u64, t7: u64) -> WeakCombinatorics {
        WeakCombinatorics::new(
            [(2, k)],
            n.iter().enumerate().map(|(i, &c)| (i as u32 + 2, c)),
            t3,
            t5,
            t7,
        )
        .unwrap()
    }

    fn q(c1: i64, c2: i64) -> QuadraticPolynomial {
        QuadraticPolynomial::poincare(c1, c2)
    }

    #[test]
    fn reduced_poincare_polynomial() {
        assert_eq!(pi0(&cl(6, 0, &[9, 2])).unwrap(), q(5, 8));
        assert_eq!(pi0(&cl(3, 0, &[3])).unwrap(), q(2, 1));
        assert_eq!(pi0(&cl(2, 0, &[1])).unwrap(), q(1, 0));
        assert_eq!(pi0(&cl(2, 1, &[5])), Err(CombinError::NonLineInput));
    }

    #[test]
    fn conic_line_polynomial() {
        assert_eq!(poincare_cl(&cl(6, 1, &[12, 3, 1])).unwrap(), q(7, 16));
        assert_eq!(poincare_cl(&cl(9, 1, &[6, 4, 6])).unwrap(), q(10, 24));
        let lines = cl(6, 0, &[9, 2]);
        assert_eq!(poincare_cl(&lines).unwrap(), pi0(&lines).unwrap());
        let cubic = WeakCombinatorics::new([(3, 1)], [], 0, 0, 0).unwrap();
        assert_eq!(poincare_cl(&cubic), Err(CombinError::UnsupportedComponentDegree(3)));
    }

    #[test]
    fn conic_polynomial() {
        assert_eq!(poincare_conics(&conics(4, &[], 12, 0, 0)).unwrap(), q(7, 13));
        assert_eq!(poincare_conics(&conics(3, &[0, 1], 0, 3, 0)).unwrap(), q(5, 6));
        assert_eq!(poincare_conics(&conics(2, &[4], 0, 0, 0)).unwrap(), q(3, 5));
        // two generic conics: d = 4, tau = 4 gives the same polynomial
        assert_eq!(poincare_general(4, 4).unwrap(), q(3, 5));
        assert!(poincare_conics(&conics(1, &[], 0, 0, 0)).is_err());
        assert!(poincare_conics(&conics(3, &[0, 0, 0, 1], 0, 0, 0)).is_err());
    }

    #[test]
    fn general_polynomial() {
        assert_eq!(poincare_general(11, 76).unwrap(), q(10, 24));
        assert_eq!(poincare_general(3, 0).unwrap(), q(2, 4));
        assert_eq!(poincare_general(2, 0).unwrap(), q(1, 1));
        assert!(poincare_general(3, 5).is_err());
        assert!(poincare_general(1, 0).is_err());
    }

    #[test]
    fn splitting() {
        assert_eq!(split_over_rationals(&q(10, 24)).roots, Some((4, 6)));
        assert!(!split_over_rationals(&q(7, 16)).splits);
        assert_eq!(split_over_rationals(&q(2, 1)).roots, Some((1, 1)));
        assert_eq!(split_over_rationals(&q(1, 0)).roots, Some((0, 1)));
        assert!(!split_over_rationals(&q(3, -4)).splits);
        assert!(!split_over_rationals(&QuadraticPolynomial::new(2, 3, 1)).splits);
    }

    #[test]
    fn bezout_counts() {
        assert!(count_check_cl(&cl(6, 1, &[12, 3, 1])).unwrap());
        assert!(count_check_cl(&cl(9, 1, &[6, 4, 6])).unwrap());
        assert!(!count_check_cl(&cl(2, 0, &[])).unwrap());
        assert!(count_check_conics(&conics(4, &[], 12, 0, 0)).unwrap());
        assert!(count_check_conics(&conics(3, &[0, 1], 0, 3, 0)).unwrap());
        assert!(!count_check_conics(&conics(2, &[3], 0, 0, 0)).unwrap());
    }

    #[test]
    fn tau_dictionary() {
        assert_eq!(tau_from_combinatorics(&cl(9, 1, &[6, 4, 6])), 76);
        assert_eq!(tau_from_combinatorics(&conics(4, &[], 12, 0, 0)), 36);
        assert_eq!(tau_from_combinatorics(&WeakCombinatorics::default()), 0);
    }

    #[test]
    fn exponent_identities() {
        let free_cl = cl(9, 1, &[6, 4, 6]);
        assert!(check_exponent_identity_cl(&free_cl, 4, 6).unwrap());
        let non_free_cl = cl(6, 1, &[12, 3, 1]);
        assert!((0..=7).all(|d1| !check_exponent_identity_cl(&non_free_cl, d1, 7 - d1).unwrap()));
        assert!(check_exponent_identity_cl(&cl(2, 0, &[1]), 0, 1).unwrap());

        assert!(check_exponent_identity_conics(&conics(3, &[0, 1], 0, 3, 0), 2, 3).unwrap());
        let tacnodal = conics(4, &[], 12, 0, 0);
        assert!((0..=7).all(|d1| !check_exponent_identity_conics(&tacnodal, d1, 7 - d1).unwrap()));
        assert!(!check_exponent_identity_conics(&conics(2, &[4], 0, 0, 0), 1, 2).unwrap());
    }

    #[test]
    fn dd_inequality_examples() {
        let two = WeakCombinatorics::new([(2, 2)], [(2, 4)], 0, 0, 0).unwrap();
        assert_eq!(dd_inequality(&two, 2, 2).unwrap(), DdInequality { lhs: -8, rhs: 3, holds: false });
        let empty = WeakCombinatorics::default();
        assert_eq!(dd_inequality(&empty, 3, 2).unwrap(), DdInequality { lhs: 0, rhs: 21, holds: false });
        assert!(dd_inequality(&empty, 1, 3).is_err());
        let tac = WeakCombinatorics::new([(2, 3)], [(3, 1)], 0, 3, 0).unwrap();
        assert!(dd_inequality(&tac, 2, 3).is_err());
    }

    #[test]
    fn dd_counts() {
        let two = WeakCombinatorics::new([(2, 2)], [(2, 4)], 0, 0, 0).unwrap();
        assert!(dd_count_check(&two, 2, 2).unwrap());
        let triangle = cl(3, 0, &[3]);
        assert!(dd_count_check(&triangle, 1, 3).unwrap());
        let bad = WeakCombinatorics::new([(2, 2)], [(2, 5)], 0, 0, 0).unwrap();
        assert!(!dd_count_check(&bad, 2, 2).unwrap());
    }

    #[test]
    fn betti_and_euler() {
        assert_eq!(betti_polynomial(&cl(9, 1, &[6, 4, 6])).unwrap(), q(9, 23));
        assert_eq!(betti_polynomial(&cl(6, 1, &[12, 3, 1])).unwrap(), q(6, 15));
        let lines = cl(6, 0, &[9, 2]);
        assert_eq!(betti_polynomial(&lines).unwrap(), pi0(&lines).unwrap());
        assert_eq!(euler_number(&cl(9, 1, &[6, 4, 6])).unwrap(), 15);
        assert_eq!(euler_number(&cl(6, 1, &[12, 3, 1])).unwrap(), 10);
        assert_eq!(euler_number(&cl(3, 0, &[3])).unwrap(), 0);
    }

    #[test]
    fn moment_sums() {
        assert_eq!(moments(&cl(6, 1, &[12, 3, 1])), Moments { f0: 16, f1: 37, f2: 91 });
        assert_eq!(moments(&WeakCombinatorics::default()), Moments { f0: 0, f1: 0, f2: 0 });
        assert_eq!(moments(&cl(0, 0, &[1])), Moments { f0: 1, f1: 2, f2: 4 });
    }

    #[test]
    fn rendering() {
        assert_eq!(q(7, 16).to_string(), "1 + 7t + 16t^2");
        assert_eq!(q(1, 1).to_string(), "1 + t + t^2");
        assert_eq!(q(1, 0).to_string(), "1 + t");
        assert_eq!(q(2, -3).to_string(), "1 + 2t - 3t^2");
        assert_eq!(split_over_rationals(&q(5, 6)).factored().unwrap(), "(1+2*t)(1+3*t)");
        assert_eq!(cl(6, 1, &[12, 3, 1]).to_string(), "(6, 1; 12, 3, 1)");
    }

    #[test]
    fn rejects_bad_multiplicities() {
        assert_eq!(
            WeakCombinatorics::new([(1, 2)], [(1, 3)], 0, 0, 0),
            Err(CombinError::InvalidMultiplicity(1))
        );
    }
}
