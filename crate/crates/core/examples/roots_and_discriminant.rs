//! Torus weights of a lattice and the regular-element discriminant restricted
//! to the torus.

use chevalley::lie::{DForm, LieLattice};

fn main() -> chevalley::Result<()> {
    let so5 = LieLattice::so_odd(2)?;
    let wd = so5.weight_decomposition()?;
    println!("{}: Cartan {}", so5.label(), wd.cartan.join(", "));
    for rs in &wd.root_spaces {
        println!("  {:<6} {:?}", rs.name, rs.root);
    }
    for l in [LieLattice::sl(2)?, LieLattice::sp(2)?, LieLattice::so_even(2, DForm::Z)?] {
        let (rank, delta) = l.delta_poly()?;
        println!("{}: l = {rank}, delta|_t = {}", l.label(), l.restrict_to_torus(&delta)?);
    }
    Ok(())
}
