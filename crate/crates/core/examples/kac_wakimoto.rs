//! KW characters for random isotropic sets and the closed dimension formula.
use rand::{rngs::StdRng, Rng, SeedableRng};
use superchar::acceptance::subset_sum_dim;
use superchar::charring::{dims, kw_general};
use superchar::{build_algebra, Kind, Weight};

fn main() -> superchar::Result<()> {
    let a = build_algebra(Kind::Gl, 3, 2)?;
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..8 {
        let lam = Weight::from_ints(&[3, 1, 0], &[0, rng.gen_range(-3..=0)]);
        let k = rng.gen_range(0..=2);
        let s = a.iso_set(k);
        let d = dims(&a, &kw_general(&a, &(&lam + a.rho()), &s, 0)?);
        println!("λ {lam} |S|={k}: dim {} sdim {} formula {:?}", d.dim, d.sdim, subset_sum_dim(&a, &lam, &s));
    }
    Ok(())
}
