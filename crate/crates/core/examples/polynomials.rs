//! Sparse polynomials: parsing, substitution and coefficient extraction,
//! shown on the unipotent action on the coordinates of sl_2.

use chevalley::poly::PolyRing;
use chevalley::ring::RingSpec;

fn main() -> chevalley::Result<()> {
    let ring = PolyRing::new(RingSpec::z(), &["a", "b", "c", "t"]);
    let det = ring.parse("-a^2 - b*c")?;
    let images = [ring.parse("a + t*c")?, ring.parse("b - 2*t*a - t^2*c")?, ring.parse("c")?, ring.parse("t")?];
    let moved = det.substitute_images(&ring, &images);
    println!("det            = {det}");
    println!("det after a ↦ a+tc, b ↦ b-2ta-t²c = {moved}");

    let a = ring.parse("a")?.substitute_images(&ring, &images);
    for (k, c) in a.coeffs_in("t")?.iter().enumerate() {
        println!("coefficient of t^{k} in the image of a: {c}");
    }

    let o = PolyRing::new(RingSpec::o(), &["x", "y"]);
    let f = o.parse("tau*x + 2*y")?;
    println!("over O: (tau*x + 2*y)^2 = {}", f.pow(2));
    Ok(())
}
