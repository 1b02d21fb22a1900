//! Integral forms of classical Lie algebras: brackets, derived lattices and
//! centers mod 2 across the isogeny types of D_n.

use chevalley::lie::{DForm, LieLattice};
use num_bigint::BigInt;

fn main() -> chevalley::Result<()> {
    let sp4 = LieLattice::sp(2)?;
    println!("{}: dim {}, basis {}", sp4.label(), sp4.dim(), sp4.names().join(" "));
    let unit = |i: usize| (0..sp4.dim()).map(|j| BigInt::from((i == j) as i64)).collect::<Vec<_>>();
    let (b, c) = (sp4.names().iter().position(|n| n == "b1_1").unwrap(), sp4.names().iter().position(|n| n == "c1_1").unwrap());
    println!("[b1_1, c1_1] = {:?}", sp4.bracket(&unit(b), &unit(c))?.iter().map(|x| x.to_string()).collect::<Vec<_>>());

    for l in [LieLattice::sp(1)?, LieLattice::sp(2)?, LieLattice::sp(3)?, LieLattice::sl(3)?, LieLattice::so_even(4, DForm::Sc)?] {
        println!("[{0} : [{0}, {0}]] = {1}", l.label(), l.derived_index()?);
    }

    println!("centers mod 2: spin so pspin pso");
    for n in 3..=6 {
        let row: Vec<String> = [DForm::Sc, DForm::Z, DForm::Ps, DForm::Ad]
            .iter()
            .map(|&f| match LieLattice::so_even(n, f) {
                Ok(l) => l.center_mod_p(2).map(|c| c.len().to_string()),
                Err(_) => Ok("-".into()),
            })
            .collect::<chevalley::Result<_>>()?;
        println!("  D{n}: {}", row.join(" "));
    }
    Ok(())
}
