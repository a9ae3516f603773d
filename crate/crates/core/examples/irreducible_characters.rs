//! ch L(λ) in the Euler basis and as g₀-modules, with dim and sdim.
use superchar::charring::{dims, irr_char};
use superchar::{build_algebra, Kind, Weight};

fn main() -> superchar::Result<()> {
    let g = build_algebra(Kind::Gl, 2, 2)?;
    for s in -1..=1 {
        for i in 0..=2 {
            let w = Weight::from_ints(&[s + i, s], &[-s, -s - i]);
            let ic = irr_char(&g, &w)?;
            let d = dims(&g, &ic.char);
            let terms: Vec<String> = ic.euler_terms.iter().map(|(mu, c)| format!("{c:+}ℰ{mu}")).collect();
            println!("L{w}: {}  dim {} sdim {}", terms.join(" "), d.dim, d.sdim);
        }
    }
    let adj = Weight::from_ints(&[1, 0], &[0, -1]);
    println!("g₀ content of L{adj}: {}", irr_char(&g, &adj)?.char);
    Ok(())
}
