use superchar::blockgraph::arc_diagram_of;
use superchar::diagrams::{diag, parse_diagram};
use superchar::rootdata::Orbit;
use superchar::{build_algebra, Algebra, Half, Kind, Weight};

#[test]
fn half_parse_forms() {
    assert_eq!("3/2".parse::<Half>().unwrap(), Half::halves(3));
    assert_eq!("-1/2".parse::<Half>().unwrap(), Half::halves(-1));
    assert_eq!("-0.5".parse::<Half>().unwrap(), Half::halves(-1));
    assert_eq!("4".parse::<Half>().unwrap(), Half::int(4));
    assert_eq!("6/4".parse::<Half>().unwrap(), Half::halves(3));
    assert!("1/3".parse::<Half>().is_err());
    assert!("0.25".parse::<Half>().is_err());
}

#[test]
fn half_display_round_trip() {
    for k in -9..9 {
        let h = Half::halves(k);
        assert_eq!(h.to_string().parse::<Half>().unwrap(), h);
    }
}

#[test]
fn gl22_rho() {
    let g = build_algebra(Kind::Gl, 2, 2).unwrap();
    assert_eq!(*g.rho(), Weight::from_ints(&[2, 1], &[-1, -2]));
}

#[test]
fn osp_rho() {
    let g = build_algebra(Kind::OspEven, 1, 3).unwrap();
    assert_eq!(*g.rho(), Weight::from_ints(&[0], &[2, 1, 0]));
}

#[test]
fn type_d_sign_flip_pairs() {
    let g = Algebra::new(Kind::OspEven, 2, 0);
    let w = Weight::from_ints(&[-1, -3], &[]);
    match g.weyl_orbit_normalize(&w) {
        Orbit::Regular { rep, sign } => {
            assert_eq!(rep, Weight::from_ints(&[3, 1], &[]));
            assert_eq!(sign, -1);
        }
        Orbit::Singular => panic!("regular orbit expected"),
    }
}

#[test]
fn gl43_rho_diagram() {
    let g = build_algebra(Kind::Gl, 4, 3).unwrap();
    let f = diag(&g, &g.zero()).unwrap();
    assert_eq!(f.render_opts(true, true), "0×××>");
}

#[test]
fn gl33_rho_is_three_crosses() {
    let g = build_algebra(Kind::Gl, 3, 3).unwrap();
    assert_eq!(diag(&g, &g.zero()).unwrap().render(true), "×××");
}

#[test]
fn parse_render_round_trip() {
    let g = build_algebra(Kind::Gl, 6, 5).unwrap();
    let f = parse_diagram(&g, "0>∘×>××∘×<").unwrap();
    assert_eq!(f.render_opts(true, true), "0>∘×>××∘×<");
    let o = build_algebra(Kind::OspOdd, 2, 2).unwrap();
    let h = parse_diagram(&o, "(−)×^2").unwrap();
    assert_eq!(h.render(true), "(−)×^2");
    let s = parse_diagram(&g, "x>o{x^2<}").unwrap();
    assert_eq!(parse_diagram(&g, &s.render_opts(false, true)).unwrap(), s);
}

#[test]
fn arcs_of_long_diagram() {
    let g = build_algebra(Kind::Gl, 6, 6).unwrap();
    let f = parse_diagram(&g, "-2××∘×∘∘××∘∘∘∘×∘").unwrap();
    let a = arc_diagram_of(&f).unwrap();
    assert_eq!(a.arcs, vec![(-1, 4), (0, 1), (2, 3), (5, 8), (6, 7), (11, 12)]);
}

#[test]
fn bad_inputs_are_errors() {
    let g = build_algebra(Kind::Gl, 2, 2).unwrap();
    assert_eq!(parse_diagram(&g, "×?×").unwrap_err().exit_code(), 2);
    assert_eq!(parse_diagram(&g, "{××").unwrap_err().exit_code(), 2);
    assert!(build_algebra(Kind::Gl, 0, 0).is_err());
}
