//! Acceptance suite: one line per criterion, exact comparisons throughout.

#![allow(clippy::needless_range_loop)]

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, Output};
use std::time::Instant;

use riordan::picard::crossed_column_trace;
use riordan::{
    build_triangle, invert_series, iterate_fixed, verify_lagrange, AffineMap, Coefficient,
    RiordanMatrix, Series,
};
use riordan_cli::output::{parse_series_json, LagrangeDoc, SequenceDoc, TraceDoc, TriangleDoc};
use riordan_cli::{EXIT_DOMAIN, EXIT_USAGE};
use riordan_testkit::{
    a_recurrence_holds, back_substitution_inverse, binomial, compose_naive, curious_closed_form,
    dense, from_q, identity, long_division, matmul, poly_mul, poly_pow, qi, to_q,
    z_recurrence_holds, Panel, Q,
};

const CURIOUS: [[i64; 6]; 6] = [
    [-1, 0, 0, 0, 0, 0],
    [-4, 1, 0, 0, 0, 0],
    [-11, 6, -1, 0, 0, 0],
    [-26, 23, -8, 1, 0, 0],
    [-57, 72, -39, 10, -1, 0],
    [-120, 201, -150, 59, -12, 1],
];

fn curious(depth: usize) -> RiordanMatrix {
    let p = depth - 1;
    build_triangle(
        &Series::polynomial(1i64.., p),
        &Series::polynomial([-1, 2], p),
        depth,
    )
    .unwrap()
}

fn pascal(depth: usize) -> RiordanMatrix {
    build_triangle(
        &Series::one(depth - 1),
        &Series::polynomial([1, -1], depth - 1),
        depth,
    )
    .unwrap()
}

fn ints(c: &[Coefficient]) -> Vec<Coefficient> {
    c.to_vec()
}

fn poly(c: &[i64], p: usize) -> Series {
    Series::polynomial(c.iter().copied(), p)
}

fn golden_curious_triangle() {
    let t = curious(6);
    for n in 0..6 {
        for k in 0..6 {
            assert_eq!(
                t.entry(n, k),
                Coefficient::from(CURIOUS[n][k]),
                "entry ({n},{k})"
            );
        }
    }
    assert_eq!(
        ints(&t.rows()[5]),
        [-120, 201, -150, 59, -12, 1].map(Coefficient::from)
    );
}

fn golden_iteration_trace() {
    let p = 10;
    let map = AffineMap::new(poly(&[0, 2, -1], p), Series::one(p)).unwrap();
    let trace = iterate_fixed(&map, &Series::zero(p), 6);
    assert_eq!(trace.len(), 7);
    assert_eq!(
        *trace.last(),
        poly(&[1, 2, 3, 4, 5, 6, -57, 72, -39, 10, -1], p)
    );
    assert_eq!(
        trace.last().to_string(),
        "1+2x+3x^2+4x^3+5x^4+6x^5-57x^6+72x^7-39x^8+10x^9-x^10"
    );
}

fn pascal_columns() {
    let one = Series::one(6);
    let g = poly(&[1, -1], 6);
    for column in [2usize, 3] {
        let trace = crossed_column_trace(&one, &g, column, 6).unwrap();
        assert_eq!(trace.len(), 7);
        for (m, it) in trace.iterates().iter().enumerate() {
            let expected: Vec<Q> = (0..=6u64)
                .map(|k| {
                    if (k as usize) < m {
                        Q::from(binomial(k, column as u64 - 1))
                    } else {
                        qi(0)
                    }
                })
                .collect();
            assert_eq!(to_q(it), expected, "column {column} step {m}");
        }
    }
    let t = pascal(20);
    for n in 0..20u64 {
        for k in 0..=n {
            assert_eq!(
                t.entry(n as usize, k as usize),
                Coefficient::from(binomial(n, k))
            );
        }
    }
}

fn oracle_equivalence() {
    let mut panel = Panel::new(0xA4);
    let depth = 12;
    let p = depth - 1;
    for _ in 0..50 {
        let f = panel.coeffs(p, true);
        let g = panel.coeffs(p, true);
        let t = build_triangle(&from_q(&f), &from_q(&g), depth).unwrap();
        for k in 0..depth {
            let mut num = vec![qi(0); k];
            num.extend(f.iter().cloned());
            let expected = long_division(&num, &poly_pow(&g, k + 1, p), p);
            assert_eq!(to_q(&t.column(k)), expected, "column {k}");
        }
    }
}

fn group_axioms() {
    let depth = 10;
    let p = depth - 1;
    let id = RiordanMatrix::identity(depth).unwrap();
    let mut panel = Panel::new(0xA5);
    let mut arrays = vec![pascal(depth), curious(depth)];
    for _ in 0..20 {
        arrays.push(build_triangle(&panel.series(p, true), &panel.series(p, true), depth).unwrap());
    }
    for t in &arrays {
        let inv = t.inverse().unwrap();
        assert_eq!(t.product(&inv).unwrap(), id);
        assert_eq!(dense(t.product(&inv).unwrap().rows()), identity(depth));
    }
    for pair in arrays.windows(2) {
        let prod = pair[0].product(&pair[1]).unwrap();
        assert_eq!(
            dense(prod.rows()),
            matmul(&dense(pair[0].rows()), &dense(pair[1].rows()))
        );
    }
}

fn pascal_powers() {
    let depth = 10;
    let p = pascal(depth);
    let mut acc = p.clone();
    for n in 1..=10i64 {
        let expected =
            build_triangle(&Series::one(depth - 1), &poly(&[1, -n], depth - 1), depth).unwrap();
        assert_eq!(acc, expected, "power {n}");
        assert_eq!(p.pow(n as u32).unwrap(), expected);
        acc = acc.product(&p).unwrap();
    }
}

fn az_sequences() {
    let depth = 10;
    let seq = pascal(depth).a_z_sequences().unwrap();
    assert_eq!(seq.a_seq, poly(&[1, 1], depth - 1));
    assert_eq!(seq.z_seq, Series::one(depth - 2));
    let mut panel = Panel::new(0xA7);
    for _ in 0..20 {
        let t = build_triangle(
            &panel.series(depth - 1, true),
            &panel.series(depth - 1, true),
            depth,
        )
        .unwrap();
        let seq = t.a_z_sequences().unwrap();
        let block = dense(t.rows());
        assert!(a_recurrence_holds(&block, &to_q(&seq.a_seq)));
        assert!(z_recurrence_holds(&block, &to_q(&seq.z_seq)));
        assert_eq!(
            dense(t.inverse_via_sequences().unwrap().rows()),
            dense(t.inverse().unwrap().rows())
        );
    }
}

fn shift_proposition() {
    let depth = 8;
    let p = depth - 1;
    let mut panel = Panel::new(0xA8);
    for _ in 0..10 {
        let f = panel.coeffs(p, true);
        let g = panel.coeffs(p, true);
        let t = build_triangle(&from_q(&f), &from_q(&g), depth).unwrap();
        for m in -2isize..=2 {
            let s = t.shift(m).unwrap();
            for k in 0..depth {
                let e = m - k as isize - 1;
                let mut h = if e >= 0 {
                    poly_pow(&g, e as usize, p)
                } else {
                    long_division(&[qi(1)], &poly_pow(&g, (-e) as usize, p), p)
                };
                h = poly_mul(&f, &h, p);
                for n in k..depth {
                    assert_eq!(s.entry(n, k).as_rational(), &h[n - k], "m={m} ({n},{k})");
                }
            }
        }
    }
    let shifted = curious(7).shift(1).unwrap();
    let printed: [[i64; 7]; 7] = [
        [1, 0, 0, 0, 0, 0, 0],
        [2, -1, 0, 0, 0, 0, 0],
        [3, -4, 1, 0, 0, 0, 0],
        [4, -11, 6, -1, 0, 0, 0],
        [5, -26, 23, -8, 1, 0, 0],
        [6, -57, 72, -39, 10, -1, 0],
        [7, -120, 201, -150, 59, -12, 1],
    ];
    for n in 0..7 {
        for k in 0..7 {
            assert_eq!(shifted.entry(n, k), Coefficient::from(printed[n][k]));
        }
    }
    // the shifted parameters are (2x-1)/(1-x)^2 and 2x-1
    assert_eq!(
        to_q(shifted.f()),
        poly_mul(
            &to_q(&Series::polynomial(1i64.., 6)),
            &to_q(&poly(&[-1, 2], 6)),
            6
        )
    );
}

fn reversion() {
    let p = 15;
    let mut panel = Panel::new(0xA9);
    let x = Series::x(p);
    for _ in 0..50 {
        let w = panel.omega(p);
        let inv = invert_series(&w, p).unwrap();
        assert_eq!(w.compose(&inv).unwrap(), x);
        assert_eq!(compose_naive(&to_q(&w), &to_q(&inv), p), to_q(&x));
        assert_eq!(to_q(&inv), back_substitution_inverse(&to_q(&w), p));
    }
    let catalan = invert_series(&poly(&[0, 1, -1], 6), 6).unwrap();
    assert_eq!(catalan, poly(&[0, 1, 1, 2, 5, 14, 42], 6));
}

fn lagrange_sweep() {
    let max_n = 15;
    let mut panel = Panel::new(0xAA);
    for i in 0..25 {
        let w = panel.omega(max_n);
        let report = verify_lagrange(&w, max_n).unwrap();
        assert!(report.holds(), "{:?}", report.violations);
        if i < 3 {
            // same identity from the oracles alone
            let wq = to_q(&w);
            let inv = back_substitution_inverse(&wq, max_n);
            let g = long_division(&[qi(1)], &wq[1..], max_n - 1);
            for n in 1..=max_n {
                let gn = poly_pow(&g, n, max_n - 1);
                for k in 1..=n {
                    let lhs = qi(n as i64) * &poly_pow(&inv, k, max_n)[n];
                    let rhs = qi(k as i64) * &gn[n - k];
                    assert_eq!(lhs, rhs, "n={n} k={k}");
                }
            }
        }
    }
    // printed coefficient lists of T_1..T_5 for a generic g
    for _ in 0..20 {
        let g = panel.coeffs(5, true);
        let (g0, g1, g2, g3, g4) = (&g[0], &g[1], &g[2], &g[3], &g[4]);
        let w = from_q(&long_division(&[qi(0), qi(1)], &g, 5));
        let inv = to_q(&invert_series(&w, 5).unwrap());
        let expected = [
            qi(0),
            g0.clone(),
            g0 * g1,
            g0 * g1 * g1 + g0 * g0 * g2,
            g0 * g1.pow(3) + qi(3) * g0.pow(2) * g1 * g2 + g0.pow(3) * g3,
            g0 * g1.pow(4)
                + qi(6) * g0.pow(2) * g1.pow(2) * g2
                + qi(2) * g0.pow(3) * g2.pow(2)
                + qi(4) * g0.pow(3) * g1 * g3
                + g0.pow(4) * g4,
        ];
        assert_eq!(inv, expected);
        for n in 1..=5 {
            let stage = invert_series(&w, n).unwrap();
            assert_eq!(to_q(&stage), expected[..=n].to_vec());
        }
    }
}

fn curious_observations() {
    let t = curious(6);
    let a = |n: usize, k: usize| t.entry(n, k);
    // (1)
    for n in 1..6 {
        for k in 1..=n {
            assert_eq!(
                a(n, k),
                Coefficient::from(2) * a(n - 1, k) - a(n - 1, k - 1)
            );
        }
    }
    // (3)
    for n in 0..6 {
        let sum: Coefficient = t.rows()[n].iter().cloned().sum();
        let tri = ((n + 1) * (n + 2) / 2) as i64;
        assert_eq!(sum, Coefficient::from(-tri), "row {n}");
    }
    // (4): above in the column plus right in the row
    for i in 0..6 {
        for j in 0..=i {
            let above: Coefficient = (0..i).map(|r| a(r, j)).sum();
            let right: Coefficient = (j + 1..=i).map(|c| a(i, c)).sum();
            assert_eq!(above + right, Coefficient::zero(), "element ({i},{j})");
        }
    }
    // (5): rows and columns counted from 1 in the array with the column
    // 1, 2, 3, ... prepended, so a(n, 1) = n
    for i in 0..6 {
        for j in 0..=i {
            let closed = curious_closed_form(i as i64 + 2, j as i64 + 2);
            assert_eq!(a(i, j), Coefficient::from(closed), "({i},{j})");
        }
    }
    for n in 1..=6 {
        assert_eq!(curious_closed_form(n, 1), n.into());
    }
}

fn ultrametric() {
    let mut panel = Panel::new(0xAC);
    let p = 8;
    for _ in 0..200 {
        let base = panel.coeffs(p, false);
        let splice = |panel: &mut Panel, v: &[Q]| {
            let cut = panel.index(p + 2);
            let mut w = v.to_vec();
            w[cut..].clone_from_slice(&panel.coeffs(p, false)[cut..]);
            w
        };
        let b = splice(&mut panel, &base);
        let c = splice(&mut panel, &b);
        let (fa, fb, fc) = (from_q(&base), from_q(&b), from_q(&c));
        let ab = fa.distance(&fb);
        assert!(fa.distance(&fc) <= ab.clone().max(fb.distance(&fc)));
        for n in 0..=p {
            let close = ab <= Coefficient::inverse_power_of_two(n + 1);
            assert_eq!(close, base[..=n] == b[..=n], "n={n}");
            assert_eq!(close, fa.truncate(n).unwrap() == fb.truncate(n).unwrap());
        }
    }
}

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_riordan"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn cli_json(args: &[&str]) -> String {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = cli(&all);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn cli_contract() {
    // triangle
    let doc: TriangleDoc = serde_json::from_str(&cli_json(&[
        "triangle",
        "--f",
        "curious_f",
        "--g",
        "curious_g",
        "--depth",
        "6",
    ]))
    .unwrap();
    let t = curious(6);
    assert_eq!(doc.entries().unwrap(), t.rows());
    let (f, g) = doc.parameters().unwrap();
    assert_eq!(build_triangle(&f, &g, doc.depth).unwrap(), t);
    assert_eq!(
        serde_json::from_str::<TriangleDoc>(&serde_json::to_string(&doc).unwrap()).unwrap(),
        doc
    );

    // inverse and product
    let inv: TriangleDoc = serde_json::from_str(&cli_json(&[
        "inverse",
        "--f",
        "curious_f",
        "--g",
        "curious_g",
        "--depth",
        "6",
    ]))
    .unwrap();
    assert_eq!(inv.entries().unwrap(), t.inverse().unwrap().rows());
    let prod: TriangleDoc = serde_json::from_str(&cli_json(&[
        "product", "--f1", "one", "--g1", "pascal_g", "--f2", "one", "--g2", "[1,-1]", "--depth",
        "8",
    ]))
    .unwrap();
    let square = build_triangle(&Series::one(7), &poly(&[1, -2], 7), 8).unwrap();
    assert_eq!(prod.entries().unwrap(), square.rows());

    // recip and invert
    let r = parse_series_json(&cli_json(&[
        "recip",
        "--f",
        "[0,1]",
        "--g",
        "[1,-2,1]",
        "--precision",
        "4",
    ]))
    .unwrap();
    assert_eq!(r, poly(&[0, 1, 2, 3, 4], 4));
    let r = parse_series_json(&cli_json(&[
        "recip",
        "--f",
        r#"["1/2"]"#,
        "--g",
        "[3,1]",
        "--precision",
        "6",
    ]))
    .unwrap();
    assert_eq!(
        to_q(&r),
        long_division(&[Q::new(1.into(), 2.into())], &[qi(3), qi(1)], 6)
    );
    let inv = parse_series_json(&cli_json(&[
        "invert",
        "--omega",
        "[0,1,-1]",
        "--precision",
        "5",
    ]))
    .unwrap();
    assert_eq!(inv, poly(&[0, 1, 1, 2, 5, 14], 5));
    let inv = parse_series_json(&cli_json(&[
        "invert",
        "--omega",
        "[0,1]",
        "--precision",
        "5",
    ]))
    .unwrap();
    assert_eq!(inv, Series::x(5));

    // trace
    let tr: TraceDoc =
        serde_json::from_str(&cli_json(&["trace", "--scheme", "curious", "--steps", "3"])).unwrap();
    assert_eq!(tr.steps, 3);
    assert_eq!(tr.iterates().unwrap()[3].to_string(), "1+2x+3x^2-4x^3+x^4");
    let tr: TraceDoc = serde_json::from_str(&cli_json(&[
        "trace", "--scheme", "arithgeo", "--steps", "4",
    ]))
    .unwrap();
    assert_eq!(tr.iterates().unwrap()[4].to_string(), "x+2x^2+3x^3");
    let tr: TraceDoc = serde_json::from_str(&cli_json(&[
        "trace", "--scheme", "column:3", "--steps", "6",
    ]))
    .unwrap();
    assert_eq!(tr.iterates().unwrap()[6].to_string(), "x^2+3x^3+6x^4+10x^5");
    let pretty =
        String::from_utf8(cli(&["trace", "--scheme", "geometric", "--steps", "4"]).stdout).unwrap();
    assert_eq!(pretty.lines().last(), Some("1+x+x^2+x^3"));

    // azseq
    let seq: SequenceDoc = serde_json::from_str(&cli_json(&[
        "azseq",
        "--f",
        "one",
        "--g",
        "[1,-1]",
        "--precision",
        "4",
    ]))
    .unwrap();
    assert_eq!(seq.series().unwrap(), (poly(&[1, 1], 4), Series::one(4)));
    let seq: SequenceDoc = serde_json::from_str(&cli_json(&[
        "azseq",
        "--f",
        "one",
        "--g",
        "one",
        "--precision",
        "4",
    ]))
    .unwrap();
    assert_eq!(seq.series().unwrap(), (Series::one(4), Series::zero(4)));
    let seq: SequenceDoc = serde_json::from_str(&cli_json(&[
        "azseq",
        "--f",
        "one",
        "--g",
        "[2,1]",
        "--precision",
        "5",
    ]))
    .unwrap();
    let (a, _) = seq.series().unwrap();
    // A(x) = 1/g(ω⁻¹) with ω⁻¹ computed by back-substitution
    let w = long_division(&[qi(0), qi(1)], &[qi(2), qi(1)], 5);
    let w_inv = back_substitution_inverse(&w, 5);
    let g_at = compose_naive(&[qi(2), qi(1)], &w_inv, 5);
    assert_eq!(to_q(&a), long_division(&[qi(1)], &g_at, 5));

    // lagrange
    let rep: LagrangeDoc = serde_json::from_str(&cli_json(&[
        "lagrange",
        "--omega",
        "[0,2,1,\"-1/3\"]",
        "--precision",
        "8",
    ]))
    .unwrap();
    assert_eq!(rep.max_n, 8);
    assert!(rep.violations.is_empty());

    // error paths
    let domain = [
        vec!["recip", "--f", "one", "--g", "[0,1]"],
        vec!["invert", "--omega", "[1,1]"],
        vec!["triangle", "--f", "[0,1]", "--g", "one"],
        vec!["triangle", "--f", "one", "--g", "one", "--depth", "0"],
        vec!["trace", "--scheme", "geometric", "--steps", "0"],
    ];
    for args in &domain {
        let out = cli(args);
        assert_eq!(out.status.code(), Some(EXIT_DOMAIN), "{args:?}");
    }
    let err = String::from_utf8(cli(&domain[0]).stderr).unwrap();
    assert!(
        err.contains("--g") && err.contains("division domain"),
        "{err}"
    );
    let err = String::from_utf8(cli(&domain[1]).stderr).unwrap();
    assert!(
        err.contains("--omega") && err.contains("not invertible: order must be 1"),
        "{err}"
    );
    let err = String::from_utf8(cli(&domain[2]).stderr).unwrap();
    assert!(err.contains("--f"), "{err}");
    let usage = [
        vec!["triangle", "--f", "[1.5]", "--g", "one"],
        vec!["triangle", "--f", "[]", "--g", "one"],
        vec!["recip", "--f", "nope", "--g", "one"],
        vec!["trace", "--scheme", "spiral"],
        vec!["frobnicate"],
    ];
    for args in &usage {
        let out = cli(args);
        assert_eq!(out.status.code(), Some(EXIT_USAGE), "{args:?}");
    }
    assert_ne!(EXIT_USAGE, EXIT_DOMAIN);
}

fn main() {
    let criteria: [(&str, fn()); 13] = [
        ("golden curious triangle", golden_curious_triangle),
        ("golden iteration trace", golden_iteration_trace),
        ("Pascal columns by crossed iteration", pascal_columns),
        ("column oracle equivalence", oracle_equivalence),
        ("group axioms", group_axioms),
        ("Pascal powers", pascal_powers),
        ("A- and Z-sequences", az_sequences),
        ("shift entries", shift_proposition),
        ("reversion", reversion),
        ("Lagrange identity sweep", lagrange_sweep),
        ("curious triangle observations", curious_observations),
        ("ultrametric properties", ultrametric),
        ("CLI contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = panic::catch_unwind(AssertUnwindSafe(check)).is_ok();
        let secs = start.elapsed().as_secs_f64();
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {name} ({secs:.2}s)",
            i + 1,
            if ok { "PASS" } else { "FAIL" }
        );
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
