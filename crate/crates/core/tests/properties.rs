use proptest::prelude::*;
use superchar::charring::{dims, irr_char};
use superchar::diagrams::{diag, invariants, is_dominant, parse_diagram, t_shift, weight_of_diagram};
use superchar::dsfunctor::{ds_on_euler, ds_restrict_oracle, euler_super_weights, sdim_simple};
use superchar::{build_algebra, Algebra, Kind, Weight};

fn algebras() -> Vec<Algebra> {
    vec![
        build_algebra(Kind::Gl, 2, 1).unwrap(),
        build_algebra(Kind::Gl, 2, 2).unwrap(),
        build_algebra(Kind::Gl, 3, 2).unwrap(),
        build_algebra(Kind::OspOdd, 1, 1).unwrap(),
        build_algebra(Kind::OspEven, 2, 2).unwrap(),
        build_algebra(Kind::OspOdd, 2, 1).unwrap(),
    ]
}

fn gl_algebras() -> Vec<Algebra> {
    algebras().into_iter().filter(|a| a.kind == Kind::Gl).collect()
}

/// A dominant weight with small ||·||_gr, or None.
fn pick(a: &Algebra, coords: &[i64], max_gr: i64) -> Option<Weight> {
    let w = Weight::from_ints(&coords[..a.m], &coords[a.m..a.m + a.n]);
    if !is_dominant(a, &w) {
        return None;
    }
    let inv = invariants(a, &w).ok()?;
    (inv.norm_gr <= max_gr).then_some(w)
}

fn coords() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 6)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn simple_characters_are_honest(k in 0usize..3, c in coords()) {
        let a = &gl_algebras()[k];
        let w = pick(a, &c, 3);
        prop_assume!(w.is_some());
        let w = w.unwrap();
        let ic = irr_char(a, &w).unwrap();
        for mu in ic.char.terms.keys() {
            let (e, o) = ic.char.multiplicity(mu);
            prop_assert!(e >= 0 && o >= 0, "{} {w}: {mu} ({e},{o})", a.name());
        }
        let d = dims(a, &ic.char);
        prop_assert!(d.dim > 0 && d.sdim.abs() <= d.dim);
        // two independent routes to sdim
        prop_assert_eq!(sdim_simple(a, &w).unwrap(), d.sdim);
    }

    #[test]
    fn ds_preserves_superdimension(k in 0usize..6, c in coords(), j in 1usize..3) {
        let a = &algebras()[k];
        prop_assume!(j <= a.defect());
        let w = pick(a, &c, 4);
        prop_assume!(w.is_some());
        let w = w.unwrap();
        let sw = euler_super_weights(a, &w).unwrap();
        let before: i64 = sw.iter().map(|(_, c)| *c).sum();
        let img = ds_on_euler(a, &w, j).unwrap();
        prop_assert_eq!(img.sdim().unwrap(), before as i128);
    }

    #[test]
    fn restriction_oracle_composes(k in 0usize..3, c in coords()) {
        let big: Vec<Algebra> = algebras().into_iter().filter(|a| a.defect() >= 2).collect();
        let a = &big[k];
        let w = pick(a, &c, 4);
        prop_assume!(w.is_some());
        let sw = euler_super_weights(a, &w.unwrap()).unwrap();
        let (t2, two) = ds_restrict_oracle(a, &sw, 2).unwrap();
        let (t1, one) = ds_restrict_oracle(a, &sw, 1).unwrap();
        let (t11, oneone) = ds_restrict_oracle(&t1, &one, 1).unwrap();
        prop_assert_eq!(t2.name(), t11.name());
        prop_assert_eq!(two, oneone);
    }

    #[test]
    fn translation_round_trip(c in coords(), p in -2i64..5) {
        let a = build_algebra(Kind::Gl, 3, 2).unwrap();
        let w = pick(&a, &c, 6);
        prop_assume!(w.is_some());
        let w = w.unwrap();
        if let Ok(v) = t_shift(&a, &w, p) {
            prop_assert_eq!(t_shift(&a, &v, p).unwrap(), w);
        }
    }

    #[test]
    fn diagram_round_trip(k in 0usize..6, c in coords()) {
        let a = &algebras()[k];
        let w = pick(a, &c, 99);
        prop_assume!(w.is_some());
        let w = w.unwrap();
        let f = diag(a, &w).unwrap();
        prop_assert_eq!(&weight_of_diagram(a, &f).unwrap(), &w);
        let g = parse_diagram(a, &f.render_opts(true, true)).unwrap();
        prop_assert_eq!(weight_of_diagram(a, &g).unwrap(), w);
    }
}
