//! Translations T_{a,a+1} on diagrams: where they apply and what they do.
use superchar::diagrams::{diag, t_shift};
use superchar::{build_algebra, Kind, Weight};

fn main() -> superchar::Result<()> {
    let g = build_algebra(Kind::Gl, 3, 2)?;
    let w = Weight::from_ints(&[2, 0, 0], &[0, -1]);
    println!("start {}", diag(&g, &w)?.render_opts(true, true));
    for a in -1..6 {
        match t_shift(&g, &w, a) {
            Ok(v) => println!("T_{{{a},{}}} -> {}", a + 1, diag(&g, &v)?.render_opts(true, true)),
            Err(e) => println!("T_{{{a},{}}}: {e}", a + 1),
        }
    }
    Ok(())
}
