//! Arithmetic in Z, Z/m and O = Z[tau]/(2 tau), and the 2-torsion generators
//! that decide which extra invariants exist.

use chevalley::ring::RingSpec;

fn main() -> chevalley::Result<()> {
    for literal in ["Z", "Z/12", "F2", "F3", "O"] {
        let spec: RingSpec = literal.parse()?;
        let gens: Vec<String> = spec.two_torsion_generators().iter().map(|x| spec.fmt_scalar(x)).collect();
        println!("{spec:<5} characteristic {:<3} 2-torsion generators: [{}]", spec.characteristic(), gens.join(", "));
    }

    let o = RingSpec::o();
    let tau = o.tau();
    let two = o.from_int(2);
    let x = o.add(&o.from_int(3), &tau);
    println!("(3 + tau)^2 = {}", o.fmt_scalar(&o.mul(&x, &x)));
    println!("2 * tau = {}", o.fmt_scalar(&o.mul(&two, &tau)));
    println!("tau is 2-torsion: {}", o.is_two_torsion(&tau));
    Ok(())
}
