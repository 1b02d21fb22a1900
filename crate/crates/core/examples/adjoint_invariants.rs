//! Invariance checks with witnesses, and bounded adjoint-invariant spaces of
//! sl_2 and psl_2 over several base rings.

use chevalley::adjinv::{adjoint_invariant_space_bounded, check_invariance};
use chevalley::lie::LieLattice;
use chevalley::ring::RingSpec;

fn main() -> chevalley::Result<()> {
    let sl2 = LieLattice::sl(2)?;
    let ring = sl2.coordinate_ring(RingSpec::z());
    for f in ["a^2 + b*c", "a", "b"] {
        let p = ring.parse(f)?;
        match check_invariance(&p, &sl2)? {
            None => println!("{f}: invariant"),
            Some(w) => println!("{f}: not invariant, {w}"),
        }
    }
    for spec in [RingSpec::z(), RingSpec::f2(), RingSpec::o()] {
        let space = adjoint_invariant_space_bounded(&sl2, &spec, 4)?;
        let basis: Vec<String> = space.basis().iter().map(|p| p.to_string()).collect();
        println!("sl_2 over {spec}, degree ≤ 4: {}", basis.join(" | "));
    }
    let psl2 = LieLattice::sl_mod_mu(2, 2)?;
    let space = adjoint_invariant_space_bounded(&psl2, &RingSpec::o(), 3)?;
    let basis: Vec<String> = space.basis().iter().map(|p| p.to_string()).collect();
    println!("psl_2 over O, degree ≤ 3: {}", basis.join(" | "));
    Ok(())
}
