//! Singular points of an arrangement of smooth curves.
//!
//! The singular points of a union of smooth, pairwise distinct components
//! are exactly the points where two or more components meet. We move the
//! arrangement into general position with a random projective change of
//! coordinates, then for every pair of components compute
//! `Res_y(C_i, C_j)` in the affine chart `z = 1`. After a generic change of
//! coordinates:
//!
//! * each root of `Res_y` is the `x`-coordinate of exactly one intersection
//!   point, and its multiplicity as a root is the local intersection
//!   multiplicity of the pair there;
//! * distinct singular points have distinct `x`-coordinates.
//!
//! Refining the squarefree parts of all pairwise resultants into a coprime
//! basis, with rational roots split off, groups the singular points into
//! clusters of conjugate points that share the same incident components and
//! the same contact orders. A cluster of size one is a rational point.
//! Nothing here needs factorization over `Q`, so points with irrational
//! coordinates are counted and classified as well.
//!
//! A point where `r` smooth branches meet pairwise transversally is an
//! ordinary `r`-fold point with Milnor number `(r-1)^2`. Two branches with
//! contact order `m` form an `A_{2m-1}` point. In general Milnor's formula
//! `mu = 2 delta - r + 1` with `delta = sum of pairwise contact orders` gives
//! the local Milnor number of a point with smooth branches.
//!
//! The global quasi-homogeneity certificate compares the sum of local Milnor
//! numbers with the total Tjurina number computed by [`crate::syzygy`]. Since
//! `tau_p <= mu_p` with equality exactly for quasi-homogeneous points, the two
//! totals agree iff every singular point is quasi-homogeneous.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::combin::WeakCombinatorics;
use crate::polyring::{
    coprime_basis, resultant, squarefree_check, subresultant, Polynomial, UniPolynomial, Var,
    YPolynomial,
};
use crate::syzygy::{self, SyzygyError};

/// Number of random coordinate changes tried before giving up.
pub const MAX_SHEAR_ATTEMPTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SinglocusError {
    #[error("no generic coordinate change found after {0} attempts")]
    ShearExhausted(usize),
    #[error("point {0} is not on the curve")]
    PointNotOnCurve(String),
    #[error("contact order {0} between two branches is beyond A_7")]
    UnsupportedContactOrder(usize),
    #[error("the arrangement has no components")]
    NoComponents,
    #[error("component {0} is not a form of positive degree")]
    BadComponent(usize),
    #[error("components {0} and {1} are proportional")]
    Proportional(usize, usize),
    #[error("component {0} is not smooth")]
    NotSmooth(usize),
    #[error("components {0} and {1} share a common factor")]
    CommonFactor(usize, usize),
    #[error("point {0} is not a tangential double point of the two components")]
    NotTangential(String),
    #[error("local and global classifications disagree at {0}")]
    InconsistentClassification(String),
    #[error(transparent)]
    Syzygy(#[from] SyzygyError),
}

/// A point of the projective plane with rational coordinates, normalized so
/// that the last nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjectivePoint {
    coords: [BigRational; 3],
}

impl ProjectivePoint {
    /// `None` when all coordinates vanish.
    pub fn new(coords: [BigRational; 3]) -> Option<Self> {
        let last = coords.iter().rposition(|c| !c.is_zero())?;
        let scale = coords[last].recip();
        Some(ProjectivePoint { coords: coords.map(|c| c * &scale) })
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Option<Self> {
        Self::new([x, y, z].map(|c| BigRational::from_integer(c.into())))
    }

    pub fn coords(&self) -> &[BigRational; 3] {
        &self.coords
    }

    /// Index of the coordinate normalized to 1.
    fn chart(&self) -> usize {
        self.coords.iter().rposition(|c| !c.is_zero()).expect("nonzero point")
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coords;
        write!(f, "({a} : {b} : {c})")
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coords.iter().map(|c| c.to_string()))
    }
}

/// Local type of a singular point. Serialized as `"ordinary-r"`, `"A3"`,
/// `"A5"`, `"A7"` or `"unclassified"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SingularityKind {
    /// `r` pairwise transversal smooth branches.
    Ordinary(u32),
    /// Two smooth branches with contact order `(k+1)/2`.
    A(u32),
    /// Outside the ordinary and `A_3`/`A_5`/`A_7` dictionaries.
    Unclassified,
}

impl Serialize for SingularityKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SingularityKind::Ordinary(r) => s.collect_str(&format_args!("ordinary-{r}")),
            SingularityKind::A(k) => s.collect_str(&format_args!("A{k}")),
            SingularityKind::Unclassified => s.serialize_str("unclassified"),
        }
    }
}

impl fmt::Display for SingularityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityKind::Ordinary(r) => write!(f, "ordinary {r}-fold"),
            SingularityKind::A(k) => write!(f, "A{k}"),
            SingularityKind::Unclassified => f.write_str("unclassified"),
        }
    }
}

/// A projective linear change of coordinates, stored with integer entries.
pub type Chart = [[BigRational; 3]; 3];

/// A Galois orbit of singular points with non-rational coordinates.
///
/// In the coordinates `(x', y', z')` of `chart` the points are
/// `(a, y(a), 1)` for the roots `a` of `x_poly`; the original coordinates
/// are `chart * (a, y(a), 1)^T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateOrbit {
    pub x_poly: UniPolynomial,
    pub y_of_x: UniPolynomial,
    pub chart: Chart,
}

impl ConjugateOrbit {
    pub fn size(&self) -> usize {
        self.x_poly.degree().unwrap_or(0)
    }
}

impl fmt::Display for ConjugateOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} conjugate points: t root of {}, (x : y : z) = M (t, {}, 1) with M = {}",
            self.size(),
            self.x_poly,
            self.y_of_x,
            format_chart(&self.chart)
        )
    }
}

fn format_chart(m: &Chart) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| format!("[{}, {}, {}]", r[0], r[1], r[2]))
        .collect();
    format!("[{}]", rows.join(", "))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointLocation {
    Rational(ProjectivePoint),
    Conjugates(Box<ConjugateOrbit>),
}

impl fmt::Display for PointLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLocation::Rational(p) => write!(f, "{p}"),
            PointLocation::Conjugates(o) => write!(f, "{o}"),
        }
    }
}

impl Serialize for ConjugateOrbit {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let chart: Vec<Vec<String>> = self.chart.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect();
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("x_polynomial", &self.x_poly.to_string())?;
        m.serialize_entry("y_of_x", &self.y_of_x.to_string())?;
        m.serialize_entry("chart", &chart)?;
        m.end()
    }
}

/// A rational point serializes as its coordinate strings, an orbit as an
/// object.
impl Serialize for PointLocation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            PointLocation::Rational(p) => p.serialize(s),
            PointLocation::Conjugates(o) => o.serialize(s),
        }
    }
}

/// One singular point, or one orbit of `count` conjugate singular points of
/// identical type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifiedPoint {
    pub location: PointLocation,
    pub count: usize,
    pub multiplicity: u32,
    pub kind: SingularityKind,
    /// Milnor number of each point of the orbit.
    pub local_milnor: u64,
    pub incident_components: Vec<usize>,
    /// Contact order of each incident pair `(i, j)`, `i < j`.
    #[serde(skip)]
    pub contacts: BTreeMap<(usize, usize), usize>,
}

/// Classified singular locus together with the quasi-homogeneity certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularLocusReport {
    pub points: Vec<ClassifiedPoint>,
    pub derived_combinatorics: WeakCombinatorics,
    pub total_tjurina: u64,
    pub milnor_sum: u64,
    /// `total_tjurina - milnor_sum`; negative when some point has
    /// `tau_p < mu_p`.
    pub residual_tjurina: i64,
    pub quasi_homogeneous_certified: bool,
}

impl SingularLocusReport {
    pub fn rational_points(&self) -> impl Iterator<Item = &ProjectivePoint> {
        self.points.iter().filter_map(|p| match &p.location {
            PointLocation::Rational(q) => Some(q),
            PointLocation::Conjugates(_) => None,
        })
    }
}

/// Entries are drawn from `-b..=b` with `b` doubling on every attempt, so
/// that the coordinates stay small unless small charts keep failing.
fn random_chart(rng: &mut ChaCha8Rng, attempt: usize) -> Chart {
    let b = 4i64 << attempt.min(10);
    loop {
        let m: [[i64; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-b..=b)));
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if det != 0 {
            return m.map(|r| r.map(|v| BigRational::from_integer(v.into())));
        }
    }
}

fn apply_chart(m: &Chart, v: &[BigRational; 3]) -> [BigRational; 3] {
    std::array::from_fn(|i| (0..3).fold(BigRational::zero(), |acc, j| acc + &m[i][j] * &v[j]))
}

fn invert_chart(m: &Chart) -> Chart {
    let c = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
    };
    let det = (0..3).fold(BigRational::zero(), |acc, j| acc + &m[0][j] * c(0, j));
    // inverse = adjugate / det, adjugate = transpose of cofactors
    std::array::from_fn(|i| std::array::from_fn(|j| c(j, i) / &det))
}

/// Intersection data of one pair of components in a generic chart.
struct PairData {
    i: usize,
    j: usize,
    /// squarefree decomposition of `Res_y`: `(multiplicity, factor)`
    layers: Vec<(usize, UniPolynomial)>,
    y_source: YSource,
}

enum YSource {
    /// `y = -c0(x) / c1` from a component of degree one in `y`.
    Linear(UniPolynomial, BigRational),
    /// `y = -s10(x) / s11(x)` from the first subresultant.
    Subresultant(UniPolynomial, UniPolynomial),
}

impl YSource {
    /// `y` as a residue modulo `e`.
    fn y_mod(&self, e: &UniPolynomial) -> Option<UniPolynomial> {
        match self {
            YSource::Linear(c0, c1) => Some(c0.scale(&(-c1.recip())).rem(e)),
            YSource::Subresultant(s10, s11) => {
                let inv = s11.rem(e).inverse_mod(e)?;
                Some((&(-s10) * &inv).rem(e))
            }
        }
    }
}

/// An orbit of singular points in chart coordinates.
struct Orbit {
    x_poly: UniPolynomial,
    y_of_x: UniPolynomial,
    contacts: BTreeMap<(usize, usize), usize>,
}

/// Pairwise-intersection analysis in one random chart; `None` if the chart is
/// not generic enough.
fn try_chart(components: &[Polynomial], chart: &Chart) -> Result<Option<Vec<Orbit>>, SinglocusError> {
    let mut charted = Vec::with_capacity(components.len());
    for c in components {
        let d = c.degree().unwrap_or(0) as usize;
        let g = YPolynomial::from_affine_chart(&c.linear_change(chart));
        // (0 : 1 : 0) must be off every component
        if g.degree() != Some(d) {
            return Ok(None);
        }
        charted.push((d, g));
    }
    let mut pairs = Vec::new();
    for i in 0..charted.len() {
        for j in i + 1..charted.len() {
            let (di, gi) = &charted[i];
            let (dj, gj) = &charted[j];
            let res = resultant(gi, gj);
            if res.is_zero() {
                return Err(SinglocusError::CommonFactor(i, j));
            }
            // no intersections on the line at infinity
            if res.degree() != Some(di * dj) {
                return Ok(None);
            }
            let y_source = if *di == 1 {
                YSource::Linear(gi.coeff(0), gi.coeff(1).coeff(0))
            } else if *dj == 1 {
                YSource::Linear(gj.coeff(0), gj.coeff(1).coeff(0))
            } else {
                let s1 = subresultant(gi, gj, 1);
                let (s10, s11) = (s1.coeff(0), s1.coeff(1));
                // each root of the resultant lies under a single intersection point
                if !res.squarefree_part().gcd(&s11).is_constant() {
                    return Ok(None);
                }
                YSource::Subresultant(s10, s11)
            };
            pairs.push(PairData { i, j, layers: res.squarefree_decomposition(), y_source });
        }
    }
    let all_layers: Vec<UniPolynomial> = pairs
        .iter()
        .flat_map(|p| p.layers.iter().map(|(_, f)| f.clone()))
        .collect();
    let mut orbits = Vec::new();
    for e in split_rational_roots(coprime_basis(&all_layers)) {
        let mut contacts = BTreeMap::new();
        let mut y_of_x: Option<UniPolynomial> = None;
        for pair in &pairs {
            let Some(&(m, _)) = pair.layers.iter().find(|(_, f)| f.rem(&e).is_zero()) else {
                continue;
            };
            contacts.insert((pair.i, pair.j), m);
            let Some(y) = pair.y_source.y_mod(&e) else {
                return Ok(None);
            };
            match &y_of_x {
                None => y_of_x = Some(y),
                // two different points above the same x
                Some(prev) if *prev != y => return Ok(None),
                Some(_) => {}
            }
        }
        let incident: BTreeSet<usize> = contacts.keys().flat_map(|&(i, j)| [i, j]).collect();
        let r = incident.len();
        if contacts.len() != r * (r - 1) / 2 {
            return Ok(None);
        }
        orbits.push(Orbit { x_poly: e, y_of_x: y_of_x.expect("orbit has a pair"), contacts });
    }
    Ok(Some(orbits))
}

/// Splits off every rational root as a linear factor of its own.
fn split_rational_roots(basis: Vec<UniPolynomial>) -> Vec<UniPolynomial> {
    let mut out = Vec::with_capacity(basis.len());
    for e in basis {
        let mut rest = e;
        for root in rest.rational_roots() {
            let lin = UniPolynomial::linear_root(root);
            rest = rest.exact_div(&lin);
            out.push(lin);
        }
        if !rest.is_constant() {
            out.push(rest.monic());
        }
    }
    out
}

fn find_orbits(components: &[Polynomial], seed: u64) -> Result<(Chart, Vec<Orbit>), SinglocusError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..MAX_SHEAR_ATTEMPTS {
        let chart = random_chart(&mut rng, attempt);
        if let Some(orbits) = try_chart(components, &chart)? {
            return Ok((chart, orbits));
        }
    }
    Err(SinglocusError::ShearExhausted(MAX_SHEAR_ATTEMPTS))
}

fn validate(components: &[Polynomial]) -> Result<(), SinglocusError> {
    if components.is_empty() {
        return Err(SinglocusError::NoComponents);
    }
    for (i, c) in components.iter().enumerate() {
        if c.homogeneous_degree().unwrap_or(0) == 0 {
            return Err(SinglocusError::BadComponent(i));
        }
    }
    for i in 0..components.len() {
        for j in i + 1..components.len() {
            if components[i].is_proportional_to(&components[j]) {
                return Err(SinglocusError::Proportional(i, j));
            }
        }
    }
    Ok(())
}

fn validate_smooth(components: &[Polynomial]) -> Result<(), SinglocusError> {
    validate(components)?;
    for (i, c) in components.iter().enumerate() {
        if !syzygy::smoothness_check(c)? {
            return Err(SinglocusError::NotSmooth(i));
        }
    }
    Ok(())
}

/// Rational singular points of the union of `components`, sorted.
///
/// Components must be pairwise non-proportional and smooth.
pub fn find_rational_singular_points(
    components: &[Polynomial],
    seed: u64,
) -> Result<Vec<ProjectivePoint>, SinglocusError> {
    validate(components)?;
    let (chart, orbits) = find_orbits(components, seed)?;
    let mut pts: Vec<ProjectivePoint> = orbits
        .iter()
        .filter_map(|o| rational_location(&chart, o))
        .collect();
    pts.sort();
    Ok(pts)
}

fn rational_location(chart: &Chart, o: &Orbit) -> Option<ProjectivePoint> {
    if o.x_poly.degree() != Some(1) {
        return None;
    }
    let x0 = -o.x_poly.coeff(0);
    let y0 = o.y_of_x.eval(&x0);
    ProjectivePoint::new(apply_chart(chart, &[x0, y0, BigRational::one()]))
}

/// `f` written in the affine chart around `p`, with `p` moved to the origin.
/// The two local coordinates keep their variable names; the chart variable
/// is set to 1.
fn localize(f: &Polynomial, p: &ProjectivePoint) -> Polynomial {
    let chart = p.chart();
    let images = std::array::from_fn(|i| {
        if i == chart {
            Polynomial::one()
        } else {
            let v = Polynomial::var(Var::ALL[i]);
            &v + &Polynomial::constant(p.coords[i].clone())
        }
    });
    f.substitute(&images)
}

/// Multiplicity of the curve `f = 0` at `p`: the lowest degree of a term of
/// the local equation.
pub fn multiplicity_at(f: &Polynomial, p: &ProjectivePoint) -> Result<u32, SinglocusError> {
    let local = localize(f, p);
    match local.min_degree() {
        Some(m) if m > 0 => Ok(m),
        _ => Err(SinglocusError::PointNotOnCurve(p.to_string())),
    }
}

/// True iff the tangent cone of `f` at `p` consists of distinct lines.
pub fn is_ordinary_at(f: &Polynomial, p: &ProjectivePoint) -> Result<bool, SinglocusError> {
    let r = multiplicity_at(f, p)?;
    let cone = localize(f, p).homogeneous_part(r);
    let chart = p.chart();
    let u = Var::ALL.into_iter().find(|w| w.index() != chart).expect("two local coordinates");
    // binary form h(u, v) = v^e * g(u, v) with g(u, 1) of degree r - e
    let mut coeffs = vec![BigRational::zero(); r as usize + 1];
    for (m, c) in cone.terms() {
        coeffs[m.exponent(u) as usize] = c.clone();
    }
    let dehom = UniPolynomial::new(coeffs);
    let e = r as usize - dehom.degree().expect("nonzero tangent cone");
    Ok(e <= 1 && squarefree_check(&dehom))
}

/// Kind of the double point `p` where the smooth curves `ci` and `cj` meet
/// tangentially: `A_{2m-1}` for local intersection multiplicity `m`.
pub fn classify_tangential_double_point(
    ci: &Polynomial,
    cj: &Polynomial,
    p: &ProjectivePoint,
    seed: u64,
) -> Result<SingularityKind, SinglocusError> {
    for c in [ci, cj] {
        if !c.eval(p.coords()).is_zero() {
            return Err(SinglocusError::PointNotOnCurve(p.to_string()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..MAX_SHEAR_ATTEMPTS {
        let chart = random_chart(&mut rng, attempt);
        let inv = invert_chart(&chart);
        let local = apply_chart(&inv, p.coords());
        if local[2].is_zero() {
            continue;
        }
        let x0 = &local[0] / &local[2];
        let gi = YPolynomial::from_affine_chart(&ci.linear_change(&chart));
        let gj = YPolynomial::from_affine_chart(&cj.linear_change(&chart));
        let (di, dj) = (ci.degree().unwrap_or(0) as usize, cj.degree().unwrap_or(0) as usize);
        if gi.degree() != Some(di) || gj.degree() != Some(dj) {
            continue;
        }
        let res = resultant(&gi, &gj);
        if res.is_zero() {
            return Err(SinglocusError::CommonFactor(0, 1));
        }
        // p must be the only intersection point above x0, with a non-vertical tangent
        if gi.eval_x(&x0).gcd(&gj.eval_x(&x0)).degree() != Some(1) {
            continue;
        }
        let m = res.root_multiplicity(&x0);
        return match m {
            0 | 1 => Err(SinglocusError::NotTangential(p.to_string())),
            2..=4 => Ok(SingularityKind::A(2 * m as u32 - 1)),
            _ => Err(SinglocusError::UnsupportedContactOrder(m)),
        };
    }
    Err(SinglocusError::ShearExhausted(MAX_SHEAR_ATTEMPTS))
}

fn classify_orbit(contacts: &BTreeMap<(usize, usize), usize>) -> Result<(u32, SingularityKind, u64), SinglocusError> {
    let r = contacts.keys().flat_map(|&(i, j)| [i, j]).collect::<BTreeSet<_>>().len() as u32;
    let delta: usize = contacts.values().sum();
    let milnor = 2 * delta as u64 + 1 - r as u64;
    let kind = if contacts.values().all(|&m| m == 1) {
        SingularityKind::Ordinary(r)
    } else if r == 2 {
        let m = delta;
        if m > 4 {
            return Err(SinglocusError::UnsupportedContactOrder(m));
        }
        SingularityKind::A(2 * m as u32 - 1)
    } else {
        SingularityKind::Unclassified
    };
    Ok((r, kind, milnor))
}

/// Finds, classifies and counts the singular points of the arrangement and
/// compares the local Milnor total with the global Tjurina number.
pub fn derive_weak_combinatorics(components: &[Polynomial], seed: u64) -> Result<SingularLocusReport, SinglocusError> {
    validate_smooth(components)?;
    let f = components.iter().fold(Polynomial::one(), |acc, c| &acc * c);
    let tau = syzygy::total_tjurina(&f)?;
    derive_with_tau(components, &f, tau, seed)
}

/// As [`derive_weak_combinatorics`], reusing a known `tau` of the product
/// `f`; components are assumed already validated as smooth.
pub fn derive_with_tau(
    components: &[Polynomial],
    f: &Polynomial,
    tau: u64,
    seed: u64,
) -> Result<SingularLocusReport, SinglocusError> {
    validate(components)?;
    let (chart, orbits) = find_orbits(components, seed)?;
    let mut points = Vec::with_capacity(orbits.len());
    for orbit in orbits {
        let (r, kind, local_milnor) = classify_orbit(&orbit.contacts)?;
        let location = match rational_location(&chart, &orbit) {
            Some(p) => {
                // the tangent cone must tell the same story
                let ordinary = matches!(kind, SingularityKind::Ordinary(_));
                if multiplicity_at(f, &p)? != r || is_ordinary_at(f, &p)? != ordinary {
                    return Err(SinglocusError::InconsistentClassification(p.to_string()));
                }
                PointLocation::Rational(p)
            }
            None => PointLocation::Conjugates(Box::new(ConjugateOrbit {
                x_poly: orbit.x_poly.clone(),
                y_of_x: orbit.y_of_x.clone(),
                chart: chart.clone(),
            })),
        };
        let count = orbit.x_poly.degree().unwrap_or(0);
        points.push(ClassifiedPoint {
            location,
            count,
            multiplicity: r,
            kind,
            local_milnor,
            incident_components: orbit.contacts.keys().flat_map(|&(i, j)| [i, j]).collect::<BTreeSet<_>>().into_iter().collect(),
            contacts: orbit.contacts,
        });
    }
    points.sort_by_cached_key(point_order);

    let mut k_by_degree = BTreeMap::new();
    for c in components {
        *k_by_degree.entry(c.degree().unwrap_or(0)).or_insert(0u64) += 1;
    }
    let mut w = WeakCombinatorics { k_by_degree, ..Default::default() };
    let mut milnor_sum = 0u64;
    let mut unclassified = false;
    for p in &points {
        let n = p.count as u64;
        milnor_sum += n * p.local_milnor;
        match p.kind {
            SingularityKind::Ordinary(r) => *w.n_by_mult.entry(r).or_insert(0) += n,
            SingularityKind::A(3) => w.t3 += n,
            SingularityKind::A(5) => w.t5 += n,
            SingularityKind::A(7) => w.t7 += n,
            SingularityKind::A(_) | SingularityKind::Unclassified => unclassified = true,
        }
    }
    let residual = tau as i64 - milnor_sum as i64;
    Ok(SingularLocusReport {
        points,
        derived_combinatorics: w,
        total_tjurina: tau,
        milnor_sum,
        residual_tjurina: residual,
        quasi_homogeneous_certified: residual == 0 && !unclassified,
    })
}

/// Rational points first (by coordinates), then orbits by type and incidence.
fn point_order(p: &ClassifiedPoint) -> (u8, Option<ProjectivePoint>, SingularityKind, Vec<usize>, usize) {
    match &p.location {
        PointLocation::Rational(q) => (0, Some(q.clone()), p.kind, p.incident_components.clone(), 1),
        PointLocation::Conjugates(_) => (1, None, p.kind, p.incident_components.clone(), p.count),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    fn pt(x: i64, y: i64, z: i64) -> ProjectivePoint {
        ProjectivePoint::from_ints(x, y, z).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(pt(2, 4, 2), pt(1, 2, 1));
        assert_eq!(pt(3, -3, 0), pt(-1, 1, 0));
        assert!(ProjectivePoint::from_ints(0, 0, 0).is_none());
    }

    #[test]
    fn two_lines_meet_once() {
        assert_eq!(find_rational_singular_points(&[p("x"), p("y")], 0).unwrap(), vec![pt(0, 0, 1)]);
    }

    #[test]
    fn two_tangent_conics() {
        let pts = find_rational_singular_points(&[p("x*y - z^2"), p("x*y + z^2")], 0).unwrap();
        assert_eq!(pts, vec![pt(0, 1, 0), pt(1, 0, 0)]);
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity_at(&p("x*y"), &pt(0, 0, 1)).unwrap(), 2);
        assert_eq!(multiplicity_at(&p("x*y*z*(x+y)"), &pt(0, 0, 1)).unwrap(), 3);
        assert_eq!(multiplicity_at(&p("x"), &pt(0, 1, 0)).unwrap(), 1);
        assert!(matches!(multiplicity_at(&p("x"), &pt(1, 0, 0)), Err(SinglocusError::PointNotOnCurve(_))));
    }

    #[test]
    fn ordinary_tests() {
        assert!(is_ordinary_at(&p("x*y"), &pt(0, 0, 1)).unwrap());
        assert!(!is_ordinary_at(&p("(y*z - x^2)*(y*z + x^2)"), &pt(0, 0, 1)).unwrap());
        assert!(is_ordinary_at(&p("x*y*(x+y)"), &pt(0, 0, 1)).unwrap());
        // tangent cone v^2 at a point in the chart y = 1
        assert!(!is_ordinary_at(&p("(x*y - z^2)*(x*y + z^2)"), &pt(0, 1, 0)).unwrap());
    }

    #[test]
    fn tangential_double_points() {
        let (a, b) = (p("x*y - z^2"), p("x*y + z^2"));
        assert_eq!(classify_tangential_double_point(&a, &b, &pt(1, 0, 0), 0).unwrap(), SingularityKind::A(3));
        let c = p("y*z - x^2");
        assert_eq!(
            classify_tangential_double_point(&c, &p("y*z - x^2 + x*y"), &pt(0, 0, 1), 0).unwrap(),
            SingularityKind::A(5)
        );
        assert_eq!(
            classify_tangential_double_point(&c, &p("y*z - x^2 + y^2"), &pt(0, 0, 1), 0).unwrap(),
            SingularityKind::A(7)
        );
        assert!(matches!(
            classify_tangential_double_point(&p("x"), &p("y"), &pt(0, 0, 1), 0),
            Err(SinglocusError::NotTangential(_))
        ));
    }

    #[test]
    fn chart_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = random_chart(&mut rng, 3);
        let inv = invert_chart(&m);
        let v = [BigRational::from_integer(3.into()), BigRational::new(1.into(), 2.into()), BigRational::one()];
        assert_eq!(apply_chart(&m, &apply_chart(&inv, &v)), v);
    }

    #[test]
    fn generic_lines_and_pencils() {
        let generic = [p("x"), p("y"), p("z"), p("x+y+z")];
        let rep = derive_weak_combinatorics(&generic, 0).unwrap();
        assert_eq!(rep.derived_combinatorics, WeakCombinatorics::conic_line(4, 0, &[6]));
        assert!(rep.quasi_homogeneous_certified);
        let pencil = [p("x"), p("y"), p("x+y"), p("x-y")];
        let rep = derive_weak_combinatorics(&pencil, 0).unwrap();
        assert_eq!(rep.derived_combinatorics, WeakCombinatorics::conic_line(4, 0, &[0, 0, 1]));
        assert_eq!(rep.total_tjurina, 9);
    }

    #[test]
    fn irrational_points_are_counted() {
        // the circle meets x = y at (±1/sqrt 2, ±1/sqrt 2)
        let rep = derive_weak_combinatorics(&[p("x^2 + y^2 - z^2"), p("x - y")], 3).unwrap();
        assert_eq!(rep.points.len(), 1);
        assert_eq!(rep.points[0].count, 2);
        assert_eq!(rep.derived_combinatorics.points_of_multiplicity(2), 2);
        assert_eq!(rep.residual_tjurina, 0);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(derive_weak_combinatorics(&[], 0).unwrap_err(), SinglocusError::NoComponents);
        assert_eq!(derive_weak_combinatorics(&[p("x"), p("2*x")], 0).unwrap_err(), SinglocusError::Proportional(0, 1));
        assert_eq!(derive_weak_combinatorics(&[p("x*y"), p("z")], 0).unwrap_err(), SinglocusError::NotSmooth(0));
    }
}
