use num_bigint::BigInt;
use proptest::prelude::*;
use stripcomb_core::classic::{catalan, eulerian_row, narayana};
use stripcomb_core::exactmath::{binom, int, BiPoly, IntPoly, Poly, RatFunc, Ring};
use stripcomb_core::formulas::{a_count, a_poly};
use stripcomb_core::paths::{enumerate_strip, weight_poly_bruteforce, Step, StripSpec};
use stripcomb_core::qseries::{at_q1, qbinom};

fn int_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    proptest::collection::vec(-20i64..=20, 0..=max_deg + 1).prop_map(|c| Poly::from_i64s(&c))
}

fn bi_poly(max_deg: usize) -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec(int_poly(max_deg), 0..=max_deg + 1).prop_map(Poly::new)
}

fn ratfunc() -> impl Strategy<Value = RatFunc<BigInt>> {
    (int_poly(6), proptest::collection::vec(-5i64..=5, 0..6)).prop_map(|(num, tail)| {
        let mut d = vec![1];
        d.extend(tail);
        RatFunc::new(num, Poly::from_i64s(&d)).expect("den(0) = 1")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn bipoly_distributes(a in bi_poly(12), b in bi_poly(12), c in bi_poly(12)) {
        prop_assert_eq!(a.add_ref(&b).mul_ref(&c), a.mul_ref(&c).add_ref(&b.mul_ref(&c)));
    }

    #[test]
    fn bipoly_ring_laws(a in bi_poly(6), b in bi_poly(6), c in bi_poly(6)) {
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert!(a.sub_ref(&a).is_zero());
        prop_assert_eq!(a.mul_ref(&BiPoly::one()), a.clone());
        if let Some(l) = a.coeffs().last() {
            prop_assert!(!l.is_zero());
        }
    }

    #[test]
    fn series_truncation_is_consistent(r in ratfunc(), m in 0usize..20, extra in 1usize..20) {
        let long = r.series(m + extra).unwrap();
        prop_assert_eq!(long.truncate(m), r.series(m).unwrap());
        prop_assert_eq!(r.series(m).unwrap().coeffs().len(), m + 1);
    }

    #[test]
    fn den_times_series_is_num(r in ratfunc(), order in 0usize..30) {
        let s = r.series(order).unwrap();
        let prod = s.mul_poly(&r.den);
        for n in 0..=order {
            prop_assert_eq!(prod.get(n), &r.num.coeff(n));
        }
        prop_assert_eq!(r.mismatch(s.coeffs()), None);
    }

    #[test]
    fn qbinom_symmetry_and_q1(n in 0i64..=16, k in 0i64..=16) {
        prop_assert_eq!(qbinom(n, k), qbinom(n, n - k));
        prop_assert_eq!(at_q1(&qbinom(n, k)), binom(n, k));
    }

    #[test]
    fn enumerated_paths_stay_in_strip(n in 0usize..=14, k in 0usize..=8) {
        let spec = StripSpec::new(k);
        prop_assert_eq!(spec.upper - spec.lower, k as i64);
        let mut count = 0u64;
        for p in enumerate_strip(n, k) {
            let h = p.heights();
            prop_assert_eq!(h.len(), n + 1);
            for (i, s) in p.steps().iter().enumerate() {
                prop_assert_eq!(h[i + 1] - h[i], s.delta());
                prop_assert!(spec.contains(h[i + 1]));
            }
            prop_assert!(h[n] == 0 || h[n] == -1);
            let w = p.weight();
            prop_assert!(w.e == 0 || w.iota >= w.e as u64);
            count += 1;
        }
        prop_assert_eq!(BigInt::from(count), a_count(n, k));
    }
}

#[test]
fn weights_match_closed_form() {
    for k in 1..=8 {
        for n in 0..=14 {
            assert_eq!(weight_poly_bruteforce(n, k), a_poly(n, k).unwrap(), "n={n} k={k}");
        }
    }
}

#[test]
fn small_strip_closed_forms() {
    let mut fib = (int(1), int(1));
    for n in 0..=30usize {
        assert_eq!(a_count(n, 0), int((n == 0) as i64));
        assert_eq!(a_count(n, 2), int(2).pow(n as u32 / 2));
        assert_eq!(a_count(n, 3), fib.0);
        fib = (fib.1.clone(), fib.0 + fib.1);
    }
    for n in 0..=15u32 {
        assert_eq!(a_count(2 * n as usize + 1, 4), int(3).pow(n));
        assert_eq!(a_count(2 * n as usize + 2, 4), int(2) * int(3).pow(n));
    }
    for k in 1..=8usize {
        assert_eq!(a_count(2 * k + 1, 2 * k), binom(2 * k as i64 + 1, k as i64) - 1);
    }
}

#[test]
fn triangle_row_sums() {
    for n in 1..=12 {
        let s: BigInt = (0..=n).map(|k| narayana(n, k).unwrap_or_default()).sum();
        assert_eq!(s, catalan(n), "n={n}");
    }
    let mut fact = int(1);
    for n in 1..=10usize {
        fact *= n;
        assert_eq!(eulerian_row(n).into_iter().sum::<BigInt>(), fact, "n={n}");
    }
}

#[test]
fn lexicographic_order_d_before_u() {
    let paths: Vec<Vec<Step>> = enumerate_strip(6, 3).map(|p| p.steps().to_vec()).collect();
    let mut sorted = paths.clone();
    sorted.sort();
    assert_eq!(paths, sorted);
}
