//! Independent oracles and frozen reference values.

use serde_json::json;
use superchar::charring::{denominator_check, dims, euler_char, irr_char};
use superchar::diagrams::{enumerate_dominant, invariants};
use superchar::dsfunctor::{ds_on_euler, ds_on_simple, sdim_simple};
use superchar::{build_algebra, Algebra, Kind, Weight};

fn gl(m: usize, n: usize) -> Algebra {
    build_algebra(Kind::Gl, m, n).unwrap()
}

/// Weyl dimension of an integral gl(k) highest weight, written out directly.
fn weyl_gl(a: &[i64]) -> i128 {
    let (mut num, mut den) = (1i128, 1i128);
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            num *= (a[i] - a[j] + (j - i) as i64) as i128;
            den *= (j - i) as i128;
        }
    }
    assert_eq!(num % den, 0);
    num / den
}

fn ints(w: &Weight) -> (Vec<i64>, Vec<i64>) {
    let f = |v: &[superchar::Half]| v.iter().map(|x| x.to_integer().unwrap()).collect();
    (f(&w.eps), f(&w.delta))
}

#[test]
fn typical_gl_dims_match_kac_module_count() {
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)] {
        let g = gl(m, n);
        let mut seen = 0;
        for w in enumerate_dominant(&g, -2, 2) {
            if invariants(&g, &w).unwrap().atypicality != 0 {
                continue;
            }
            let (e, d) = ints(&w);
            let want = (1i128 << (m * n)) * weyl_gl(&e) * weyl_gl(&d);
            let got = dims(&g, &irr_char(&g, &w).unwrap().char);
            assert_eq!(got.dim, want, "{} {w}", g.name());
            assert_eq!(got.sdim, 0, "{} {w}", g.name());
            seen += 1;
        }
        assert!(seen > 0);
    }
}

#[test]
fn natural_and_adjoint_modules() {
    // (algebra, highest weight, dim, sdim with even highest weight vector)
    let cases: Vec<(Algebra, Weight, i128, i128)> = vec![
        (gl(2, 1), Weight::from_ints(&[1, 0], &[0]), 3, 1),
        (gl(1, 2), Weight::from_ints(&[1], &[0, 0]), 3, -1),
        (gl(3, 2), Weight::from_ints(&[1, 0, 0], &[0, 0]), 5, 1),
        (gl(2, 3), Weight::from_ints(&[0, 0], &[0, 0, -1]), 5, 1),
        (gl(2, 2), Weight::from_ints(&[1, 0], &[0, -1]), 14, 2),
        (gl(3, 3), Weight::from_ints(&[1, 0, 0], &[0, 0, -1]), 34, 2),
        (gl(1, 1), Weight::from_ints(&[2], &[-2]), 1, 1),
        (build_algebra(Kind::OspEven, 2, 1).unwrap(), Weight::from_ints(&[1, 0], &[0]), 6, 2),
        (build_algebra(Kind::OspOdd, 2, 1).unwrap(), Weight::from_ints(&[1, 0], &[0]), 7, 3),
        (build_algebra(Kind::OspEven, 1, 2).unwrap(), Weight::from_ints(&[0], &[2, 0]), 19, 3),
    ];
    for (a, w, dim, sdim) in cases {
        let d = dims(&a, &irr_char(&a, &w).unwrap().char);
        assert_eq!((d.dim, d.sdim), (dim, sdim), "{} {w}", a.name());
    }
}

#[test]
fn trivial_module_is_one_dimensional() {
    for a in [gl(2, 2), gl(3, 2), build_algebra(Kind::OspOdd, 1, 1).unwrap(), build_algebra(Kind::OspEven, 2, 2).unwrap()] {
        let c = euler_char(&a, &a.zero()).unwrap();
        assert_eq!(dims(&a, &c).dim, 1, "{}", a.name());
    }
}

#[test]
fn denominator_identities() {
    for a in [gl(1, 1), gl(2, 2), gl(3, 2), build_algebra(Kind::OspOdd, 2, 2).unwrap(), build_algebra(Kind::OspEven, 3, 2).unwrap()] {
        let r = denominator_check(&a).unwrap();
        assert!(r.ok && r.reversed_ok, "{}", a.name());
    }
}

#[test]
fn sdim_vanishes_off_maximal_atypicality() {
    for a in [gl(2, 2), gl(3, 2), gl(2, 3)] {
        for w in enumerate_dominant(&a, -1, 2) {
            let inv = invariants(&a, &w).unwrap();
            if inv.norm_gr > 2 || inv.atypicality == a.defect() {
                continue;
            }
            assert_eq!(sdim_simple(&a, &w).unwrap(), 0, "{} {w}", a.name());
        }
    }
}

// Frozen: cross-checked against the restriction oracle when recorded.
#[test]
fn frozen_ds_gl33() {
    let g = gl(3, 3);
    let lam = Weight::from_ints(&[1, 0, 0], &[0, 0, -1]);
    let j1 = ds_on_euler(&g, &lam, 1).unwrap().to_json();
    assert_eq!(
        j1,
        json!({"parity_shift":0,"sigma_pair":false,
               "target":{"kind":"Gl","m":2,"n":2,"name":"gl(2|2)"},
               "terms":[{"coeff":1,"kind":"euler","weight":{"delta":["0","-1"],"eps":["1","0"]}}]})
    );
    let j2 = ds_on_euler(&g, &lam, 2).unwrap().to_json();
    assert_eq!(j2["terms"], json!([{"coeff":1,"kind":"kac","weight":{"delta":["-1"],"eps":["1"]}}]));
    assert!(ds_on_euler(&g, &lam, 3).unwrap().is_zero());
    let rho = Weight::from_ints(&[2, 1, 0], &[0, -1, -2]);
    assert_eq!(ds_on_euler(&g, &rho, 1).unwrap().to_json()["terms"][0]["kind"], "kac");
    assert!(ds_on_euler(&g, &rho, 2).unwrap().is_zero());
}

#[test]
fn frozen_gl22_simple_ds() {
    let g = gl(2, 2);
    // (weight, sdim L, multiplicity)
    let table = [
        ([0, 0], [0, 0], 1, 1),
        ([-1, -1], [1, 1], 1, 1),
        ([-2, -2], [2, 2], 1, 1),
        ([0, -1], [1, 0], 2, 2),
        ([-1, -2], [2, 1], 2, 2),
        ([0, -2], [2, 0], 2, 2),
        ([-2, -2], [1, 0], 0, 1),
    ];
    for (e, d, sdim, mult) in table {
        let w = Weight::from_ints(&e, &d);
        assert_eq!(sdim_simple(&g, &w).unwrap(), sdim, "{w}");
        assert_eq!(ds_on_simple(&g, &w).unwrap().mult, mult, "{w}");
    }
}

#[test]
fn frozen_gl22_euler_decomposition() {
    let g = gl(2, 2);
    let ic = irr_char(&g, &Weight::from_ints(&[1, 0], &[0, -1])).unwrap();
    let mut got = ic.euler_terms.clone();
    got.sort();
    let mut want = vec![
        (Weight::from_ints(&[-1, -1], &[1, 1]), -1),
        (Weight::from_ints(&[0, 0], &[0, 0]), -1),
        (Weight::from_ints(&[1, 0], &[0, -1]), 1),
    ];
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn osp_non_kostant_needs_provider() {
    let o = build_algebra(Kind::OspOdd, 1, 1).unwrap();
    let e = irr_char(&o, &Weight::from_ints(&[1], &[0])).unwrap_err();
    assert_eq!(e.exit_code(), 4);
}
