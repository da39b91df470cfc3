use proptest::prelude::*;
use riordan::picard::{crossed_column_trace, reciprocation_scheme};
use riordan::{
    column_scheme, iterate_crossed, iterate_fixed, reciprocal, AffineMap, Coefficient, Series,
};
use riordan_testkit::{binomial, from_q, long_division, to_q, Panel};

fn rational() -> impl Strategy<Value = Coefficient> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Coefficient::new(n, d).unwrap())
}

fn series(precision: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(rational(), precision + 1).prop_map(|v| Series::from_coeffs(v).unwrap())
}

fn unit_series(precision: usize) -> impl Strategy<Value = Series> {
    (series(precision), (1i64..=5, 1i64..=3, any::<bool>())).prop_map(|(s, (n, d, neg))| {
        let mut v = s.into_coeffs();
        v[0] = Coefficient::new(if neg { -n } else { n }, d).unwrap();
        Series::from_coeffs(v).unwrap()
    })
}

fn contractive_map(precision: usize) -> impl Strategy<Value = AffineMap> {
    (series(precision), series(precision)).prop_map(|(slope, offset)| {
        let mut v = slope.into_coeffs();
        v[0] = Coefficient::zero();
        AffineMap::new(Series::from_coeffs(v).unwrap(), offset).unwrap()
    })
}

proptest! {
    #[test]
    fn affine_maps_halve_distances(map in contractive_map(6), t1 in series(6), t2 in series(6)) {
        let before = t1.distance(&t2);
        let after = map.apply(&t1).distance(&map.apply(&t2));
        prop_assert!(after <= before * Coefficient::new(1, 2).unwrap());
    }

    #[test]
    fn reciprocal_times_divisor_is_dividend(f in series(8), g in unit_series(8)) {
        let r = reciprocal(&f, &g, 8).unwrap();
        prop_assert_eq!(&r * &g, f.clone());
        prop_assert_eq!(to_q(&r), long_division(&to_q(&f), &to_q(&g), 8));
    }

    #[test]
    fn crossed_iterates_converge_one_degree_per_step(f in series(7), g in unit_series(7)) {
        let scheme = reciprocation_scheme(&f, &g).unwrap();
        let trace = iterate_crossed(&scheme, &Series::zero(7), 8).unwrap();
        let exact = from_q(&long_division(&to_q(&f), &to_q(&g), 7));
        for (m, it) in trace.iterates().iter().enumerate().skip(1) {
            prop_assert!(it.agrees_through(&exact, m - 1));
        }
        // the limit map's fixed point is f/g
        let limit = scheme.limit_map().unwrap();
        prop_assert_eq!(limit.fixed_point(7).unwrap(), exact);
    }

    #[test]
    fn plain_iteration_converges(map in contractive_map(6)) {
        let fixed = map.fixed_point(6).unwrap();
        prop_assert_eq!(map.apply(&fixed).truncate(6).unwrap(), fixed.clone());
        let trace = iterate_fixed(&map, &Series::zero(6), 7);
        for (m, it) in trace.iterates().iter().enumerate().skip(1) {
            prop_assert!(it.agrees_through(&fixed, m - 1));
        }
    }

    #[test]
    fn column_schemes_converge_to_columns(f in unit_series(7), g in unit_series(7), n in 2usize..=4) {
        // column n is x^(n-1) f / g^n, computed independently by long division
        let column = |k: usize| {
            let num = to_q(&f.mul_x_pow(k - 1).truncate(7).unwrap());
            from_q(&long_division(&num, &to_q(&g.power(k)), 7))
        };
        let scheme = column_scheme(&f, &g, n, &column(n - 1)).unwrap();
        let trace = iterate_crossed(&scheme, &Series::zero(7), 8).unwrap();
        prop_assert_eq!(trace.last().clone(), column(n));
    }
}

#[test]
fn pascal_column_partial_sums() {
    let one = Series::one(8);
    let g = Series::polynomial([1, -1], 8);
    for n in 1..=4usize {
        let trace = crossed_column_trace(&one, &g, n, 8).unwrap();
        for (m, it) in trace.iterates().iter().enumerate() {
            // iterate m is Σ_{k<m} C(k, n-1) x^k
            let expected: Vec<Coefficient> = (0..=8u64)
                .map(|k| {
                    if (k as usize) < m {
                        Coefficient::from(binomial(k, n as u64 - 1))
                    } else {
                        Coefficient::zero()
                    }
                })
                .collect();
            assert_eq!(it.coeffs(), &expected[..], "column {n} iterate {m}");
        }
    }
}

#[test]
fn curious_remainders_follow_the_doubling_rule() {
    let map = AffineMap::new(Series::polynomial([0, 2, -1], 20), Series::one(20)).unwrap();
    let trace = iterate_fixed(&map, &Series::zero(20), 9);
    let limit = Series::polynomial(1..=21i64, 20);
    let rows = trace.remainder_rows(&limit).unwrap();
    assert_eq!(rows.len(), 8);
    for n in 1..rows.len() {
        for k in 1..rows[n].len() {
            let above = rows[n - 1]
                .get(k)
                .cloned()
                .unwrap_or_else(Coefficient::zero);
            let above_left = &rows[n - 1][k - 1];
            assert_eq!(rows[n][k], Coefficient::from(2) * above - above_left);
        }
    }
}

#[test]
fn random_reciprocals_against_long_division() {
    let mut panel = Panel::new(5);
    for _ in 0..25 {
        let f = panel.series(10, false);
        let g = panel.series(10, true);
        assert_eq!(
            to_q(&reciprocal(&f, &g, 10).unwrap()),
            long_division(&to_q(&f), &to_q(&g), 10)
        );
    }
}
