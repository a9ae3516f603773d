//! ds_j on ℰ⁻_λ, checked against plain restriction of weights.
use superchar::dsfunctor::{ds_on_euler, ds_restrict_oracle, euler_super_weights};
use superchar::{build_algebra, Kind, Weight};

fn main() -> superchar::Result<()> {
    let cases = [
        (build_algebra(Kind::Gl, 3, 3)?, Weight::from_ints(&[1, 0, 0], &[0, 0, -1])),
        (build_algebra(Kind::Gl, 3, 2)?, Weight::from_ints(&[2, 0, 0], &[0, -1])),
        (build_algebra(Kind::OspEven, 2, 2)?, Weight::from_ints(&[2, 0], &[2, 0])),
    ];
    for (a, w) in cases {
        for j in 1..=a.defect() {
            let img = ds_on_euler(&a, &w, j)?;
            let (_, oracle) = ds_restrict_oracle(&a, &euler_super_weights(&a, &w)?, j)?;
            let ok = img.weight_expand()? == oracle;
            println!("{} {w} j={j}: {}  oracle agrees: {ok}", a.name(), img.to_json());
        }
    }
    Ok(())
}
