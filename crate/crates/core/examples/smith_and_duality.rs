//! Smith normal form, lattice indices and the duality of torsion cokernels.

use chevalley::lattice::{cokernel_invariants, lattice_index, pontryagin_dual_invariants, smith_normal_form, IntMatrix};

fn main() -> chevalley::Result<()> {
    let phi = IntMatrix::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]])?;
    let snf = smith_normal_form(&phi);
    println!("invariant factors: {:?}", snf.factors.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("coker(phi)   ≅ {:?}", cokernel_invariants(&phi)?.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("coker(phi^T) ≅ {:?}", pontryagin_dual_invariants(&phi)?.iter().map(|x| x.to_string()).collect::<Vec<_>>());

    // columns are lattice bases: the even-sum sublattice of Z^2
    let sup = IntMatrix::identity(2);
    let sub = IntMatrix::from_i64(&[vec![1, 1], vec![1, -1]])?;
    println!("[Z^2 : D_2] = {}", lattice_index(&sub, &sup)?);
    Ok(())
}
