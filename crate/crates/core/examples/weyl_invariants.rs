//! Weyl-invariant polynomials of type C_2 over Z and over O, where 2-torsion
//! produces invariants such as tau*(X1 + X2).

use chevalley::ring::RingSpec;
use chevalley::weyl::{compare_with_generators, invariant_generators, subring_membership_bounded, torus_ring, WeylGroup, WeylType};

fn main() -> chevalley::Result<()> {
    let group = WeylGroup::new(WeylType::C, 2)?;
    println!("|W(C2)| = {}", group.order());
    for spec in [RingSpec::z(), RingSpec::o()] {
        let gens = invariant_generators(WeylType::C, 2, &spec)?;
        let (inv, generated) = compare_with_generators(WeylType::C, 2, &spec, 4)?;
        println!("over {spec}: generators {}", gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "));
        println!("  degree ≤ 4 ranks {:?}, generated by them: {}", inv.space.ranks(), inv.same(&generated));
    }
    let ring = torus_ring(RingSpec::o(), 2);
    let gens = invariant_generators(WeylType::C, 2, &RingSpec::o())?;
    let f = ring.parse("tau*X1^3 + tau*X2^3")?;
    let names: Vec<String> = (1..=gens.len()).map(|i| format!("g{i}")).collect();
    match subring_membership_bounded(&f, &gens, 3)? {
        Some(e) => println!("{f} = {}", e.render(&RingSpec::o(), &names)),
        None => println!("{f} is not in the subalgebra"),
    }
    Ok(())
}
