//! The map pr on Gaussian-integer characters, compared on both sides.
use superchar::dsfunctor::pr_identity_check;
use superchar::{build_algebra, Half, Kind};

fn main() -> superchar::Result<()> {
    let g = build_algebra(Kind::Gl, 2, 2)?;
    for (p, q) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
        let beta = &g.eps(p) - &g.delta(q);
        // λ̂ must be orthogonal to β: only the other two coordinates move
        let mut lam = g.zero();
        lam.eps[1 - p] = Half::int(2);
        lam.delta[1 - q] = Half::int(-1);
        println!("gl(2|2) β0 = {beta}, λ̂ = {lam}: {}", pr_identity_check(&g, &lam, std::slice::from_ref(&beta), &beta)?);
    }
    let ok = superchar::acceptance::pr_cases()
        .iter()
        .filter(|(a, l, s, b)| pr_identity_check(a, l, s, b).unwrap_or(false))
        .count();
    println!("{ok} of {} fixture cases agree", superchar::acceptance::pr_cases().len());
    Ok(())
}
