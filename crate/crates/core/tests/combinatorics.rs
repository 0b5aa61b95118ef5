use curvefree::combin::*;
use proptest::prelude::*;

/// Exhaustive search for `(1 + a t)(1 + b t)` with `0 <= a <= b`.
fn brute_force_split(c1: i64, c2: i64) -> Option<(u64, u64)> {
    (0..=c1 / 2).find_map(|a| {
        let b = c1 - a;
        (a * b == c2).then_some((a as u64, b as u64))
    })
}

#[test]
fn split_agrees_with_exhaustive_search() {
    for c1 in 0..=50 {
        for c2 in -2500..=2500 {
            let got = split_over_rationals(&QuadraticPolynomial::poincare(c1, c2));
            assert_eq!(got.roots, brute_force_split(c1, c2), "1 + {c1}t + {c2}t^2");
            assert_eq!(got.splits, got.roots.is_some());
        }
    }
}

/// Conic-line combinatorics that satisfy the Bézout count: the remaining
/// branch pairs are made up with double points.
fn consistent_cl() -> impl Strategy<Value = WeakCombinatorics> {
    (0u64..=12, 0u64..=4, prop::collection::vec(0u64..=3, 0..4)).prop_filter_map("Bézout", |(d, k, high)| {
        let pairs = 4 * k * k.saturating_sub(1) / 2 + 2 * k * d + d * d.saturating_sub(1) / 2;
        let mut n = vec![0u64; high.len() + 1];
        let mut used = 0;
        for (i, &c) in high.iter().enumerate() {
            let r = i as u64 + 3;
            n[i + 1] = c;
            used += c * r * (r - 1) / 2;
        }
        let n2 = pairs.checked_sub(used)?;
        n[0] = n2;
        (d + k > 0).then(|| WeakCombinatorics::conic_line(d, k, &n))
    })
}

fn consistent_conics() -> impl Strategy<Value = WeakCombinatorics> {
    (2u64..=6, 0u64..=3, 0u64..=2, 0u64..=4, 0u64..=3, 0u64..=2).prop_filter_map(
        "Bézout",
        |(k, n3, n4, t3, t5, t7)| {
            let pairs = 2 * k * (k - 1);
            let n2 = pairs.checked_sub(3 * n3 + 6 * n4 + 2 * t3 + 3 * t5 + 4 * t7)?;
            Some(WeakCombinatorics::new([(2, k)], [(2, n2), (3, n3), (4, n4)], t3, t5, t7).unwrap())
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// The identities that link the Bézout count, the Poincaré polynomial,
    /// the Betti polynomial and the local Milnor total.
    #[test]
    fn conic_line_identities(w in consistent_cl()) {
        prop_assert!(count_check_cl(&w).unwrap());
        let p = poincare_cl(&w).unwrap();
        let b = betti_polynomial(&w).unwrap();
        let k = w.conics() as i64;
        prop_assert_eq!(p, QuadraticPolynomial::new(b.c0, b.c1 + k, b.c2 + k));
        prop_assert_eq!(euler_number(&w).unwrap(), p.eval(-1));
        // (d-1)^2 - tau(CL) equals the t^2 coefficient for quasi-homogeneous points
        let deg = w.total_degree() as i64;
        prop_assert_eq!((deg - 1).pow(2) - tau_from_combinatorics(&w) as i64, p.c2);
        prop_assert_eq!(p.c1, deg - 1);
        // so a free arrangement with these invariants satisfies the exponent identity
        if let Some((d1, d2)) = split_over_rationals(&p).roots {
            prop_assert!(check_exponent_identity_cl(&w, d1, d2).unwrap());
            if deg >= 2 {
                prop_assert_eq!(poincare_general(deg as u64, tau_from_combinatorics(&w)).unwrap(), p);
            }
        }
        if w.conics() == 0 {
            prop_assert_eq!(pi0(&w).unwrap(), p);
        }
    }

    #[test]
    fn conic_identities(w in consistent_conics()) {
        prop_assert!(count_check_conics(&w).unwrap());
        let p = poincare_conics(&w).unwrap();
        let k = w.conics() as i64;
        prop_assert_eq!((2 * k - 1).pow(2) - tau_from_combinatorics(&w) as i64, p.c2);
        if let Some((d1, d2)) = split_over_rationals(&p).roots {
            prop_assert!(check_exponent_identity_conics(&w, d1, d2).unwrap());
        }
        if !w.has_tacnodes() {
            prop_assert_eq!(poincare_cl(&w).unwrap(), p);
        }
    }

    /// For conic arrangements the inequality reduces to
    /// `sum_{r>=5} (r^2-5r+4) n_r >= 3 + 2 n2 + 2 n3`.
    #[test]
    fn conic_form_of_the_inequality(k in 2u64..=8, ns in prop::collection::vec(0u64..=6, 6)) {
        let w = WeakCombinatorics::new([(2, k)], ns.iter().enumerate().map(|(i, &n)| (i as u32 + 2, n)), 0, 0, 0).unwrap();
        let full = dd_inequality(&w, 2, k).unwrap();
        let (lhs, rhs) = dd_inequality_conic_form(&w);
        prop_assert_eq!(full.lhs - full.rhs, lhs - rhs);
        prop_assert_eq!(full.holds, lhs >= rhs);
    }

    /// `dd_count_check` is the Bézout count `d^2 C(k,2) = sum C(r,2) n_r`.
    #[test]
    fn dd_count_is_bezout(d in 2u32..=4, k in 2u64..=5, ns in prop::collection::vec(0u64..=5, 4)) {
        let w = WeakCombinatorics::new([(d, k)], ns.iter().enumerate().map(|(i, &n)| (i as u32 + 2, n)), 0, 0, 0).unwrap();
        let pairs: u64 = ns.iter().enumerate().map(|(i, &n)| { let r = i as u64 + 2; r * (r - 1) / 2 * n }).sum();
        let expected = (d as u64).pow(2) * k * (k - 1) / 2 == pairs;
        prop_assert_eq!(dd_count_check(&w, d, k).unwrap(), expected);
    }
}

#[test]
fn reference_polynomials() {
    let non_free_cl = WeakCombinatorics::conic_line(6, 1, &[12, 3, 1]);
    assert_eq!(poincare_cl(&non_free_cl).unwrap().to_string(), "1 + 7t + 16t^2");
    assert!(!split_over_rationals(&poincare_cl(&non_free_cl).unwrap()).splits);

    let free_cl = WeakCombinatorics::conic_line(9, 1, &[6, 4, 6]);
    let p = poincare_cl(&free_cl).unwrap();
    assert_eq!(p.to_string(), "1 + 10t + 24t^2");
    assert_eq!(split_over_rationals(&p).factored().unwrap(), "(1+4*t)(1+6*t)");

    let six_lines = WeakCombinatorics::conic_line(6, 0, &[9, 2]);
    assert_eq!(pi0(&six_lines).unwrap().to_string(), "1 + 5t + 8t^2");

    let tacnodal = WeakCombinatorics::new([(2, 4)], [], 12, 0, 0).unwrap();
    assert_eq!(poincare_conics(&tacnodal).unwrap().to_string(), "1 + 7t + 13t^2");

    let osculating = WeakCombinatorics::new([(2, 3)], [(3, 1)], 0, 3, 0).unwrap();
    let p = poincare_conics(&osculating).unwrap();
    assert_eq!(p.to_string(), "1 + 5t + 6t^2");
    assert_eq!(split_over_rationals(&p).roots, Some((2, 3)));
    assert!(check_exponent_identity_conics(&osculating, 2, 3).unwrap());
}

/// `e(M) = 3 - e(C)`, where each line or conic is a sphere and an ordinary
/// `r`-fold point glues `r` points into one: `e(C) = 2 (d + k) - sum (r-1) n_r`.
fn euler_by_topology(d: u64, k: u64, n: &[u64]) -> i64 {
    let glued: u64 = n.iter().enumerate().map(|(i, &c)| (i as u64 + 1) * c).sum();
    3 - (2 * (d + k) as i64 - glued as i64)
}

#[test]
fn euler_numbers_by_topology() {
    for (d, k, n) in [(9, 1, vec![6, 4, 6]), (6, 1, vec![12, 3, 1]), (3, 0, vec![3]), (4, 2, vec![13, 2, 1])] {
        let w = WeakCombinatorics::conic_line(d, k, &n);
        assert_eq!(euler_number(&w).unwrap(), euler_by_topology(d, k, &n), "{w}");
    }
    assert_eq!(euler_number(&WeakCombinatorics::conic_line(9, 1, &[6, 4, 6])).unwrap(), 15);
    assert_eq!(euler_number(&WeakCombinatorics::conic_line(6, 1, &[12, 3, 1])).unwrap(), 10);
    assert_eq!(euler_number(&WeakCombinatorics::conic_line(3, 0, &[3])).unwrap(), 0);
}
