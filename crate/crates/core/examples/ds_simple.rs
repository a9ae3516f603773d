//! DS of simple modules at full rank and the superdimensions it gives.
use superchar::charring::{dims, irr_char};
use superchar::diagrams::{enumerate_dominant, invariants};
use superchar::dsfunctor::ds_on_simple;
use superchar::{build_algebra, Kind};

fn main() -> superchar::Result<()> {
    let g = build_algebra(Kind::Gl, 3, 3)?;
    for w in enumerate_dominant(&g, -1, 2) {
        let inv = invariants(&g, &w)?;
        if inv.atypicality != 3 || inv.norm_gr > 3 {
            continue;
        }
        let d = ds_on_simple(&g, &w)?;
        let sd = dims(&g, &irr_char(&g, &w)?.char).sdim;
        println!("{w}: m = {}, Π^{} on {}, sdim {sd}", d.mult, d.parity_shift_even_hw, d.core.algebra.name());
    }
    Ok(())
}
