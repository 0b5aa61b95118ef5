use std::collections::BTreeMap;

use curvefree::combin::{count_check_cl, count_check_conics, WeakCombinatorics};
use curvefree::polyring::{parse, Polynomial};
use curvefree::singlocus::{derive_weak_combinatorics, derive_with_tau, PointLocation, ProjectivePoint, SingularityKind};
use curvefree::syzygy::{ar_dim, is_free, is_syzygy, syzygy_basis, total_tjurina};
use num_rational::BigRational;
use proptest::prelude::*;

fn polys(eqs: &[&str]) -> Vec<Polynomial> {
    eqs.iter().map(|s| parse(s).unwrap()).collect()
}

fn product(cs: &[Polynomial]) -> Polynomial {
    cs.iter().fold(Polynomial::one(), |a, c| &a * c)
}

/// Intersection points of lines given by coefficient vectors, found by cross
/// products, with the number of lines through each.
fn line_points(lines: &[[i64; 3]]) -> BTreeMap<ProjectivePoint, u32> {
    let mut through: BTreeMap<ProjectivePoint, u32> = BTreeMap::new();
    for (i, a) in lines.iter().enumerate() {
        for b in &lines[i + 1..] {
            let c = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
            let p = ProjectivePoint::from_ints(c[0], c[1], c[2]).expect("distinct lines");
            through.entry(p).or_insert(0);
        }
    }
    for (p, r) in through.iter_mut() {
        *r = lines
            .iter()
            .filter(|l| {
                let v = p.coords();
                (0..3).map(|i| &v[i] * BigRational::from_integer(l[i].into())).sum::<BigRational>() == BigRational::from_integer(0.into())
            })
            .count() as u32;
    }
    through
}

fn distinct_lines() -> impl Strategy<Value = Vec<[i64; 3]>> {
    prop::collection::vec(prop::array::uniform3(-2i64..=2), 3..=6).prop_filter("pairwise independent", |ls| {
        ls.iter().all(|l| l != &[0, 0, 0])
            && ls.iter().enumerate().all(|(i, a)| {
                ls[i + 1..].iter().all(|b| {
                    a[1] * b[2] != a[2] * b[1] || a[2] * b[0] != a[0] * b[2] || a[0] * b[1] != a[1] * b[0]
                })
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// For lines, every singular point is an ordinary point of a homogeneous
    /// germ, so tau = sum (r-1)^2 over the points found by cross products.
    #[test]
    fn line_arrangements_match_cross_products(lines in distinct_lines()) {
        let comps: Vec<Polynomial> = lines.iter().map(|l| parse(&format!("({})*x + ({})*y + ({})*z", l[0], l[1], l[2])).unwrap()).collect();
        let pts = line_points(&lines);
        let tau: u64 = pts.values().map(|&r| (r as u64 - 1).pow(2)).sum();
        let mut n: BTreeMap<u32, u64> = BTreeMap::new();
        for &r in pts.values() {
            *n.entry(r).or_default() += 1;
        }
        let expected = WeakCombinatorics::new([(1, lines.len() as u64)], n, 0, 0, 0).unwrap();

        let report = derive_weak_combinatorics(&comps, 0).unwrap();
        prop_assert_eq!(report.total_tjurina, tau);
        prop_assert_eq!(&report.derived_combinatorics, &expected);
        prop_assert!(report.quasi_homogeneous_certified);
        let found: Vec<ProjectivePoint> = report.rational_points().cloned().collect();
        prop_assert_eq!(found, pts.keys().cloned().collect::<Vec<_>>());
    }
}

#[test]
fn syzygy_bases_are_syzygies() {
    for (eq, r) in [("x*y*(x+y)", 1), ("x*y*z*(x-y)*(y-z)*(x-z)", 2), ("(x^2+y^2-z^2)*x*y", 2), ("x^3+y^3+z^3", 2)] {
        let f = parse(eq).unwrap();
        let basis = syzygy_basis(&f, r).unwrap();
        assert_eq!(basis.len(), ar_dim(&f, r).unwrap(), "{eq}");
        for s in &basis {
            assert!(is_syzygy(&f, s), "{eq}");
        }
    }
    // the Fermat cubic has no syzygy below degree 2
    assert_eq!(ar_dim(&parse("x^3+y^3+z^3").unwrap(), 1).unwrap(), 0);
}

#[test]
fn freeness_of_small_arrangements() {
    let braid = product(&polys(&["x", "y", "z", "x-y", "y-z", "x-z"]));
    let inv = is_free(&braid).unwrap();
    assert_eq!((inv.mdr, inv.tau, inv.exponents), (2, 19, Some((2, 3))));

    let generic = product(&polys(&["x", "y", "z", "x+y+z"]));
    let inv = is_free(&generic).unwrap();
    assert_eq!((inv.tau, inv.is_free), (6, false));

    let pencil = product(&polys(&["x", "y", "x+y", "x-y"]));
    assert_eq!(is_free(&pencil).unwrap().exponents, Some((0, 3)));
}

struct Case {
    eqs: &'static [&'static str],
    tau: u64,
    w: WeakCombinatorics,
}

fn conic_cases() -> Vec<Case> {
    let conics = |k, n: &[(u32, u64)], t3, t5, t7| WeakCombinatorics::new([(2, k)], n.iter().copied(), t3, t5, t7).unwrap();
    vec![
        Case { eqs: &["x*y-z^2", "x*y+z^2"], tau: 6, w: conics(2, &[], 2, 0, 0) },
        Case { eqs: &["y*z-x^2", "y*z-x^2+x*y"], tau: 6, w: conics(2, &[(2, 1)], 0, 1, 0) },
        Case { eqs: &["y*z-x^2", "y*z-x^2+y^2"], tau: 7, w: conics(2, &[], 0, 0, 1) },
        Case { eqs: &["x^2+2*y^2-5*z^2", "2*x^2+y^2-5*z^2"], tau: 4, w: conics(2, &[(2, 4)], 0, 0, 0) },
        Case {
            eqs: &["x*y+y*z+z*x-3*x^2", "x*y+y*z+z*x-3*y^2", "x*y+y*z+z*x-3*z^2"],
            tau: 19,
            w: conics(3, &[(3, 1)], 0, 3, 0),
        },
        Case {
            eqs: &["x^2+y^2-z^2", "y", "x+y-z", "y-x-z"],
            tau: 12,
            w: WeakCombinatorics::conic_line(3, 1, &[0, 3]),
        },
    ]
}

#[test]
fn tangential_points_and_seed_invariance() {
    for case in conic_cases() {
        let comps = polys(case.eqs);
        let f = product(&comps);
        assert_eq!(total_tjurina(&f).unwrap(), case.tau, "{:?}", case.eqs);
        let first = derive_with_tau(&comps, &f, case.tau, 0).unwrap();
        assert_eq!(first.derived_combinatorics, case.w, "{:?}", case.eqs);
        for seed in 1..5 {
            let again = derive_with_tau(&comps, &f, case.tau, seed).unwrap();
            assert_eq!(again.derived_combinatorics, first.derived_combinatorics, "seed {seed}: {:?}", case.eqs);
            assert_eq!(
                again.rational_points().collect::<Vec<_>>(),
                first.rational_points().collect::<Vec<_>>(),
                "seed {seed}"
            );
        }
        // conservation and the Bézout audit
        let milnor: u64 = first.points.iter().map(|p| p.count as u64 * p.local_milnor).sum();
        assert_eq!(milnor as i64 + first.residual_tjurina, case.tau as i64);
        assert!(first.quasi_homogeneous_certified);
        let bezout = if case.w.lines() > 0 { count_check_cl(&case.w) } else { count_check_conics(&case.w) };
        assert!(bezout.unwrap(), "{:?}", case.eqs);
    }
}

#[test]
fn points_are_sorted_and_kinds_consistent() {
    let comps = polys(&["x*y-z^2", "x*y+z^2", "x^2+y^2-2*z^2", "x^2+y^2+2*z^2"]);
    let report = derive_weak_combinatorics(&comps, 0).unwrap();
    let rational: Vec<_> = report.rational_points().collect();
    assert!(rational.windows(2).all(|w| w[0] < w[1]));
    // rational points come first
    let first_orbit = report.points.iter().position(|p| matches!(p.location, PointLocation::Conjugates(_)));
    if let Some(i) = first_orbit {
        assert!(report.points[i..].iter().all(|p| matches!(p.location, PointLocation::Conjugates(_))));
    }
    let mut total = 0;
    for p in &report.points {
        assert_eq!(p.kind, SingularityKind::A(3));
        assert_eq!((p.multiplicity, p.local_milnor), (2, 3));
        assert_eq!(p.incident_components.len(), 2);
        total += p.count;
    }
    assert_eq!(total, 12);
    assert_eq!(report.total_tjurina, 36);
    assert_eq!(report.residual_tjurina, 0);
}

#[test]
fn projective_changes_preserve_the_combinatorics() {
    let comps = polys(&["x^2+y^2-z^2", "y", "x+y-z", "y-x-z"]);
    let m = [[2, 1, 0], [0, 1, -1], [1, 0, 3]].map(|r: [i64; 3]| r.map(|v| BigRational::from_integer(v.into())));
    let moved: Vec<Polynomial> = comps.iter().map(|c| c.linear_change(&m)).collect();
    let a = derive_weak_combinatorics(&comps, 0).unwrap();
    let b = derive_weak_combinatorics(&moved, 0).unwrap();
    assert_eq!(a.derived_combinatorics, b.derived_combinatorics);
    assert_eq!(a.total_tjurina, b.total_tjurina);
}

#[test]
fn non_quasi_homogeneous_points_leave_a_negative_residual() {
    // Five lines through one point: an ordinary 5-fold point of five lines is
    // homogeneous, so the residual vanishes.
    let lines = polys(&["x", "y", "x+y", "x-y", "x+2*y"]);
    let report = derive_weak_combinatorics(&lines, 0).unwrap();
    assert_eq!(report.residual_tjurina, 0);
    // With a conic as the fifth branch the point stays ordinary, but the germ
    // is no longer quasi-homogeneous: tau_p = 15 < mu_p = 16.
    let mixed = polys(&["x", "y", "x+y", "x-y", "x*z+3*y*z-y^2"]);
    let report = derive_weak_combinatorics(&mixed, 0).unwrap();
    let five = report.points.iter().find(|p| p.kind == SingularityKind::Ordinary(5)).expect("5-fold point");
    assert_eq!(five.local_milnor, 16);
    assert_eq!(report.residual_tjurina, -1);
    assert!(!report.quasi_homogeneous_certified);
}
