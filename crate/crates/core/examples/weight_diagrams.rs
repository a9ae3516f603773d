//! Diagrams, invariants and λ† for a few gl and osp weights.
use superchar::diagrams::{dagger, diag, diagram_of, invariants, parse_diagram, weight_of_diagram};
use superchar::{build_algebra, Kind, Weight};

fn main() -> superchar::Result<()> {
    let g = build_algebra(Kind::Gl, 3, 3)?;
    for w in [g.zero(), Weight::from_ints(&[1, 0, 0], &[0, 0, -1]), Weight::from_ints(&[2, 2, 0], &[0, -1, -1])] {
        let f = diag(&g, &w)?;
        let inv = invariants(&g, &w)?;
        let dd = dagger(&g, &w)?;
        println!(
            "{} {w}: {}  dagger {}  at={} tail={} ||λ||_gr={}",
            g.name(),
            f.render_opts(true, true),
            diagram_of(&g, &dd.lambda)?.render_opts(true, true),
            inv.atypicality,
            inv.tail,
            inv.norm_gr
        );
    }
    // diagram strings parse back to weights
    let o = build_algebra(Kind::OspEven, 2, 2)?;
    for s in ["××", "(+)×^2", "×∘×", "0>×"] {
        match parse_diagram(&o, s).and_then(|f| weight_of_diagram(&o, &f)) {
            Ok(w) => println!("{} {s:>8} -> {w}", o.name()),
            Err(e) => println!("{} {s:>8} -> {e}", o.name()),
        }
    }
    Ok(())
}
