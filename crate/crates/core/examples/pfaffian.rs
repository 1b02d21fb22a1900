//! The universal element of so_6: characteristic coefficients, the pfaffian,
//! the pfaffian characteristic polynomial mod 2 and its integral lifts.

use chevalley::adjinv::universal_element;
use chevalley::lie::{DForm, LieLattice};
use chevalley::ring::RingSpec;

fn main() -> chevalley::Result<()> {
    let so6 = LieLattice::so_even(3, DForm::Z)?;
    let u = universal_element(&so6, &RingSpec::z())?;
    for (k, c) in u.char_poly_coeffs()?.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        println!("c{} has {} terms; on the torus: {}", k + 1, c.num_terms(), so6.restrict_to_torus(c)?);
    }
    let pf = u.pfaffian()?;
    println!("pf = {pf}");
    println!("pf on the torus = {}", so6.restrict_to_torus(&pf)?);
    let pi = u.pfaffian_char_poly_mod2()?;
    println!("pi_F2 has {} terms", pi.num_terms());
    let o = so6.coordinate_ring(RingSpec::o());
    for (i, p) in u.lift_pfaffian_coeffs()?.iter().enumerate() {
        let tp = p.embed(&o)?.times_tau(&o);
        println!("tau*pi_{} on the torus = {}", i + 1, so6.restrict_to_torus(&tp)?);
    }
    Ok(())
}
