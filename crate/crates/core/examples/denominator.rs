//! Super-denominator identities for small gl and osp.
use superchar::charring::denominator_check;
use superchar::{build_algebra, Kind};

fn main() -> superchar::Result<()> {
    let list = [(Kind::Gl, 2, 2), (Kind::Gl, 3, 2), (Kind::OspOdd, 1, 1), (Kind::OspEven, 2, 2), (Kind::OspEven, 3, 2)];
    for (k, m, n) in list {
        let r = denominator_check(&build_algebra(k, m, n)?)?;
        println!("{:<9} ρ' = {:<24} ok {} reversed {}", r.algebra, r.rho_prime, r.ok, r.reversed_ok);
    }
    Ok(())
}
