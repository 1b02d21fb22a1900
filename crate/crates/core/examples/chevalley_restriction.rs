//! Restricting adjoint invariants to the torus and comparing with Weyl
//! invariants: sp_4 loses tau*(X1 + X2) over O, so_5 does not.

use chevalley::adjinv::chevalley_check;
use chevalley::lie::LieLattice;
use chevalley::ring::RingSpec;

fn main() -> chevalley::Result<()> {
    for l in [LieLattice::sp(2)?, LieLattice::so_odd(2)?] {
        for spec in [RingSpec::z(), RingSpec::o()] {
            let r = chevalley_check(&l, &spec, 4)?;
            print!("{} over {spec}: injective {}, onto {}", l.label(), r.injective, r.surjective);
            match &r.missing {
                Some(m) => println!(", missing {m}"),
                None => println!(),
            }
        }
    }
    Ok(())
}
