//! Integral lattices of matrices closed under the commutator: the Chevalley
//! `Z`-forms of the classical Lie algebras.
//!
//! A lattice stores integer matrices `B_j` and a common denominator `d`; its
//! elements are `Σ y_j B_j / d` with `y_j ∈ Z`. Every lattice built here has
//! a basis of simultaneous eigenvectors for its diagonal (Cartan) part, which
//! makes torus weights and root spaces directly readable.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{self, fp, EchelonBasis, Index, IntMatrix, IntSolver};
use crate::poly::{MultiPoly, PolyMatrix, PolyRing};
use crate::ring::RingSpec;

/// The four lattices of type `D_n` between root and weight lattice, named by
/// the diagonal lattice `N_*` of their Cartan part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum DForm {
    /// `so_{2n}`: diagonal `Z^n`.
    Z,
    /// `pso_{2n}`: diagonal generated by `Z^n` and `½(1,…,1)`.
    Ad,
    /// `spin_{2n}`: diagonal of even coordinate sum.
    Sc,
    /// `pspin_{2n}` (`n` even): elements of `N_ad` with even coordinate sum.
    Ps,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LieLabel {
    Gl(usize),
    Sl(usize),
    /// `S(Z^n|m)`, the lattice of `SL_n/μ_m`.
    SlModMu(usize, usize),
    /// `sp_{2n}`.
    Sp(usize),
    /// `psp_{2n}`.
    Psp(usize),
    /// Type `D_n` in size `2n`.
    SoEven(usize, DForm),
    /// `so_{2n+1}`, realized inside `so_{2n+2}`.
    SoOdd(usize),
}

impl fmt::Display for LieLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieLabel::Gl(n) => write!(f, "gl_{n}"),
            LieLabel::Sl(n) => write!(f, "sl_{n}"),
            LieLabel::SlModMu(n, m) => write!(f, "S(Z^{n}|{m})"),
            LieLabel::Sp(n) => write!(f, "sp_{}", 2 * n),
            LieLabel::Psp(n) => write!(f, "psp_{}", 2 * n),
            LieLabel::SoEven(n, DForm::Z) => write!(f, "so_{}", 2 * n),
            LieLabel::SoEven(n, DForm::Ad) => write!(f, "pso_{}", 2 * n),
            LieLabel::SoEven(n, DForm::Sc) => write!(f, "spin_{}", 2 * n),
            LieLabel::SoEven(n, DForm::Ps) => write!(f, "pspin_{}", 2 * n),
            LieLabel::SoOdd(n) => write!(f, "so_{}", 2 * n + 1),
        }
    }
}

/// A rational matrix `num / den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    pub num: IntMatrix,
    pub den: BigInt,
}

impl QMatrix {
    pub fn integral(num: IntMatrix) -> Self {
        QMatrix { num, den: BigInt::one() }
    }
}

/// Root space data: basis index, root in torus coordinates and torus weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSpace {
    pub index: usize,
    pub name: String,
    pub root: Vec<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WeightDecomposition {
    pub cartan: Vec<String>,
    pub root_spaces: Vec<RootSpace>,
}

/// Structure constants: `[B_i, B_j] = Σ_k c[i][j][k] B_k`.
type Structure = Vec<Vec<Vec<BigInt>>>;

#[derive(Debug)]
pub struct LieLattice {
    label: LieLabel,
    size: usize,
    denom: BigInt,
    basis: Vec<IntMatrix>,
    names: Vec<String>,
    cartan: Vec<usize>,
    /// Torus coordinates of each diagonal position, e.g. `y_k ↦ -X_k`.
    diag_coord: Vec<Vec<i64>>,
    solver: IntSolver,
    structure: OnceLock<Structure>,
}

fn e(n: usize, i: usize, j: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(n, n);
    m.set(i, j, BigInt::one());
    m
}

fn lin(terms: &[(i64, &IntMatrix)]) -> IntMatrix {
    let n = terms[0].1.rows();
    let mut out = IntMatrix::zeros(n, n);
    for (c, m) in terms {
        for i in 0..n {
            for j in 0..n {
                let v = out.get(i, j) + m.get(i, j) * BigInt::from(*c);
                out.set(i, j, v);
            }
        }
    }
    out
}

fn scaled(m: &IntMatrix, c: &BigInt) -> IntMatrix {
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.set(i, j, m.get(i, j) * c);
        }
    }
    out
}

fn flatten(m: &IntMatrix) -> Vec<BigInt> {
    m.to_rows().into_iter().flatten().collect()
}

fn commutator(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let ab = a.mul(b).unwrap();
    let ba = b.mul(a).unwrap();
    lin(&[(1, &ab), (-1, &ba)])
}

fn exact_div(m: &IntMatrix, d: &BigInt) -> Option<IntMatrix> {
    let mut out = m.clone();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let (q, r) = m.get(i, j).div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.set(i, j, q);
        }
    }
    Some(out)
}

/// Diagonal matrices with the given (scaled) diagonal rows, one per lattice basis vector.
fn diag_basis(
    size: usize,
    positions: &[(usize, Option<usize>)],
    rows: &[Vec<BigInt>],
) -> Vec<IntMatrix> {
    // positions[k] = (index of +X_k, index of -X_k if any)
    rows.iter()
        .map(|r| {
            let mut m = IntMatrix::zeros(size, size);
            for (k, v) in r.iter().enumerate() {
                let (p, q) = positions[k];
                m.set(p, p, v.clone());
                if let Some(q) = q {
                    m.set(q, q, -v);
                }
            }
            m
        })
        .collect()
}

fn big_rows(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Standard diagonal lattices of type `D_n`, scaled by 2, as HNF rows.
fn d_diagonal(n: usize, form: DForm) -> Vec<Vec<BigInt>> {
    let unit = |i: usize, c: i64| {
        let mut v = vec![0i64; n];
        v[i] = c;
        v
    };
    let mut gens: Vec<Vec<i64>> = Vec::new();
    match form {
        DForm::Z => gens.extend((0..n).map(|i| unit(i, 2))),
        DForm::Ad => {
            gens.extend((0..n).map(|i| unit(i, 2)));
            gens.push(vec![1; n]);
        }
        DForm::Sc => {
            for i in 0..n {
                for j in i + 1..n {
                    let mut v = vec![0; n];
                    v[i] = 2;
                    v[j] = 2;
                    gens.push(v.clone());
                    v[j] = -2;
                    gens.push(v);
                }
            }
        }
        DForm::Ps => {
            // N_ad ∩ {Σ even}, as all even-sum combinations of Z^n and h = ½(1,…,1)
            for i in 0..n {
                for j in i + 1..n {
                    let mut v = vec![0; n];
                    v[i] = 2;
                    v[j] = 2;
                    gens.push(v.clone());
                    v[j] = -2;
                    gens.push(v);
                }
            }
            let mut h = vec![1; n];
            if (n / 2) % 2 == 1 {
                h[0] += 2;
            }
            gens.push(h);
        }
    }
    lattice::hermite_basis(&big_rows(&gens))
}

impl LieLattice {
    #[allow(clippy::too_many_arguments)]
    fn assemble(
        label: LieLabel,
        size: usize,
        denom: BigInt,
        named: Vec<(String, IntMatrix)>,
        cartan_count: usize,
        diag_coord: Vec<Vec<i64>>,
    ) -> Result<Self> {
        let (names, basis): (Vec<String>, Vec<IntMatrix>) = named.into_iter().unzip();
        let cols: Vec<Vec<BigInt>> = basis.iter().map(flatten).collect();
        let a = IntMatrix::from_columns(&cols, size * size)?;
        let solver = IntSolver::new(&a);
        if solver.rank() != basis.len() {
            return Err(Error::InvalidParams(format!("{label}: basis is not independent")));
        }
        Ok(LieLattice {
            label,
            size,
            denom,
            basis,
            names,
            cartan: (0..cartan_count).collect(),
            diag_coord,
            solver,
            structure: OnceLock::new(),
        })
    }

    pub fn gl(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParams("gl needs n ≥ 1".into()));
        }
        let mut named = Vec::new();
        for i in 0..n {
            named.push((format!("h{}", i + 1), e(n, i, i)));
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    named.push((format!("e{}_{}", i + 1, j + 1), e(n, i, j)));
                }
            }
        }
        let coords = (0..n).map(|i| unit_i64(n, i, 1)).collect();
        Self::assemble(LieLabel::Gl(n), n, BigInt::one(), named, n, coords)
    }

    /// `sl_n(Z)`; for `n = 2` the coordinates are `a, b, c` on `[[a, b], [c, -a]]`.
    pub fn sl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams("sl needs n ≥ 2".into()));
        }
        let mut named = Vec::new();
        for i in 0..n - 1 {
            named.push((format!("h{}", i + 1), lin(&[(1, &e(n, i, i)), (-1, &e(n, i + 1, i + 1))])));
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    named.push((format!("e{}_{}", i + 1, j + 1), e(n, i, j)));
                }
            }
        }
        if n == 2 {
            named[0].0 = "a".into();
            named[1].0 = "b".into();
            named[2].0 = "c".into();
        }
        let coords = (0..n).map(|i| unit_i64(n, i, 1)).collect();
        Self::assemble(LieLabel::Sl(n), n, BigInt::one(), named, n - 1, coords)
    }

    /// `S(Z^n|m)`: rational matrices sending `Z^n` into `(1/m)Z^n` whose
    /// reduction is a traceless homothety. For `(2, 2)` this is `psl_2` with
    /// coordinates `alpha, b, c` on `[[alpha/2, b], [c, -alpha/2]]`.
    pub fn sl_mod_mu(n: usize, m: usize) -> Result<Self> {
        if n < 2 || m < 1 || n % m != 0 {
            return Err(Error::InvalidParams(format!("S(Z^{n}|{m}) needs n ≥ 2 and m | n")));
        }
        let mb = BigInt::from(m);
        let mut named = Vec::new();
        // g = (1/m)·diag(1, …, 1, 1-n), then the standard h_2 … h_{n-1}
        let mut g = IntMatrix::zeros(n, n);
        for i in 0..n - 1 {
            g.set(i, i, BigInt::one());
        }
        g.set(n - 1, n - 1, BigInt::from(1 - n as i64));
        named.push(("g".to_string(), g));
        for i in 1..n - 1 {
            let h = lin(&[(1, &e(n, i, i)), (-1, &e(n, i + 1, i + 1))]);
            named.push((format!("h{}", i + 1), scaled(&h, &mb)));
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    named.push((format!("e{}_{}", i + 1, j + 1), scaled(&e(n, i, j), &mb)));
                }
            }
        }
        if n == 2 {
            named[0].0 = if m == 2 { "alpha".into() } else { "a".into() };
            named[1].0 = "b".into();
            named[2].0 = "c".into();
        }
        let coords = (0..n).map(|i| unit_i64(n, i, 1)).collect();
        Self::assemble(LieLabel::SlModMu(n, m), n, mb, named, n - 1, coords)
    }

    fn symplectic(n: usize, projective: bool) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParams("sp needs n ≥ 1".into()));
        }
        let size = 2 * n;
        let d: i64 = if projective { 2 } else { 1 };
        let db = BigInt::from(d);
        let mut named = Vec::new();
        let positions: Vec<(usize, Option<usize>)> = (0..n).map(|i| (i, Some(n + i))).collect();
        let diag_rows: Vec<Vec<BigInt>> = if projective {
            let mut g: Vec<Vec<i64>> = vec![vec![1; n]];
            g.extend((1..n).map(|i| unit_i64(n, i, 2)));
            big_rows(&g)
        } else {
            big_rows(&(0..n).map(|i| unit_i64(n, i, 1)).collect::<Vec<_>>())
        };
        let cartan = diag_basis(size, &positions, &diag_rows);
        for (k, h) in cartan.into_iter().enumerate() {
            named.push((format!("h{}", k + 1), h));
        }
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let a = lin(&[(1, &e(size, i, j)), (-1, &e(size, n + j, n + i))]);
                    named.push((format!("a{}_{}", i + 1, j + 1), scaled(&a, &db)));
                }
            }
        }
        for i in 0..n {
            for j in i..n {
                let b = if i == j {
                    e(size, i, n + i)
                } else {
                    lin(&[(1, &e(size, i, n + j)), (1, &e(size, j, n + i))])
                };
                named.push((format!("b{}_{}", i + 1, j + 1), scaled(&b, &db)));
            }
        }
        for i in 0..n {
            for j in i..n {
                let c = if i == j {
                    e(size, n + i, i)
                } else {
                    lin(&[(1, &e(size, n + i, j)), (1, &e(size, n + j, i))])
                };
                named.push((format!("c{}_{}", i + 1, j + 1), scaled(&c, &db)));
            }
        }
        if n == 1 && !projective {
            named[0].0 = "a".into();
            named[1].0 = "b".into();
            named[2].0 = "c".into();
        }
        let mut coords = vec![vec![0i64; n]; size];
        for i in 0..n {
            coords[i] = unit_i64(n, i, 1);
            coords[n + i] = unit_i64(n, i, -1);
        }
        let label = if projective { LieLabel::Psp(n) } else { LieLabel::Sp(n) };
        Self::assemble(label, size, db, named, n, coords)
    }

    /// `sp_{2n}(Z)`: `[[A, B], [C, -Aᵀ]]` with `B`, `C` symmetric.
    pub fn sp(n: usize) -> Result<Self> {
        Self::symplectic(n, false)
    }

    /// `psp_{2n}(Z)`: as `sp_{2n}` with `A ∈ L(Z^n|2)`.
    pub fn psp(n: usize) -> Result<Self> {
        Self::symplectic(n, true)
    }

    /// Type `D_n` on `Z^{2n}` with basis `(x_1, y_1, …, x_n, y_n)` and
    /// `q = Σ x_k y_k`: matrices `M` with `BM` alternating, `B` the polar form.
    pub fn so_even(n: usize, form: DForm) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParams("so_2n needs n ≥ 2".into()));
        }
        if form == DForm::Ps && n % 2 == 1 {
            return Err(Error::InvalidParams("pspin_2n needs n even".into()));
        }
        let (size, named, ncartan) = so_even_basis(n, form);
        let mut coords = vec![vec![0i64; n]; size];
        for k in 0..n {
            coords[2 * k] = unit_i64(n, k, 1);
            coords[2 * k + 1] = unit_i64(n, k, -1);
        }
        let d = if form == DForm::Z || form == DForm::Sc { 1 } else { 2 };
        Self::assemble(LieLabel::SoEven(n, form), size, BigInt::from(d), named, ncartan, coords)
    }

    /// `so_{2n+1} = {M ∈ so_{2n+2} : M ε = 0}` with `ε = e_{n+1} - e'_{n+1}`.
    pub fn so_odd(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidParams("so_2n+1 needs n ≥ 1".into()));
        }
        let (size, named, _) = so_even_basis(n + 1, DForm::Z);
        let mut eps = vec![BigInt::zero(); size];
        eps[2 * n] = BigInt::one();
        eps[2 * n + 1] = -BigInt::one();
        let restricted = |m: &IntMatrix| -> Vec<i64> {
            // weight with the X_{n+1} component dropped
            let (a, b) = first_nonzero(m).unwrap();
            let mut w = vec![0i64; n];
            for k in 0..n {
                let c = |p: usize| {
                    if p == 2 * k {
                        1
                    } else if p == 2 * k + 1 {
                        -1
                    } else {
                        0
                    }
                };
                w[k] = c(a) - c(b);
            }
            w
        };
        // the Cartan part of so_{2n+2} has weight 0 but is not a root vector
        let mut groups: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (i, (_, m)) in named.iter().enumerate() {
            let w = if i <= n { vec![0; n] } else { restricted(m) };
            groups.entry(w).or_default().push(i);
        }
        let mut cartan = Vec::new();
        let mut roots = Vec::new();
        for (w, members) in &groups {
            // kernel of c ↦ (Σ c_i M_i) ε on this weight group
            let images: Vec<Vec<BigInt>> = members.iter().map(|&i| named[i].1.mul_vec(&eps)).collect();
            let a = IntMatrix::from_columns(&images, size)?;
            let kernel = lattice::hermite_basis(&lattice::integer_kernel(&a));
            for v in kernel.iter().rev() {
                let mut m = IntMatrix::zeros(size, size);
                for (c, &i) in v.iter().zip(members) {
                    if !c.is_zero() {
                        m = lin(&[(1, &m), (c.to_i64().unwrap(), &named[i].1)]);
                    }
                }
                if w.iter().all(|&x| x == 0) {
                    cartan.push(m);
                } else {
                    roots.push((w.clone(), m));
                }
            }
        }
        // Cartan in the order h_1 … h_n
        cartan.sort_by_key(|m| (0..n).position(|k| !m.get(2 * k, 2 * k).is_zero()));
        let mut out: Vec<(String, IntMatrix)> = Vec::new();
        for (k, m) in cartan.into_iter().enumerate() {
            let m = if m.get(2 * k, 2 * k).is_negative() { scaled(&m, &-BigInt::one()) } else { m };
            out.push((format!("h{}", k + 1), m));
        }
        roots.sort_by(|a, b| root_order(&a.0).cmp(&root_order(&b.0)));
        for (w, m) in roots {
            out.push((root_name(&w), m));
        }
        let mut coords = vec![vec![0i64; n]; size];
        for k in 0..n {
            coords[2 * k] = unit_i64(n, k, 1);
            coords[2 * k + 1] = unit_i64(n, k, -1);
        }
        Self::assemble(LieLabel::SoOdd(n), size, BigInt::one(), out, n, coords)
    }

    /// Builds a lattice from a CLI-style algebra name and matrix size
    /// (`sp 4` is `sp_4`, `spin 8` is `spin_8`, `so 5` is `so_5`).
    pub fn from_name(algebra: &str, param: usize, m: Option<usize>) -> Result<Self> {
        let even = |p: usize| -> Result<usize> {
            if p % 2 == 0 && p >= 2 {
                Ok(p / 2)
            } else {
                Err(Error::InvalidParams(format!("{algebra} needs an even size, got {p}")))
            }
        };
        match algebra {
            "gl" => Self::gl(param),
            "sl" => Self::sl(param),
            "psl" => Self::sl_mod_mu(param, param),
            "sl_mod_mu" => Self::sl_mod_mu(param, m.unwrap_or(param)),
            "sp" => Self::sp(even(param)?),
            "psp" => Self::psp(even(param)?),
            "so_even" | "so" if param % 2 == 0 => Self::so_even(even(param)?, DForm::Z),
            "pso" => Self::so_even(even(param)?, DForm::Ad),
            "spin" => Self::so_even(even(param)?, DForm::Sc),
            "pspin" => Self::so_even(even(param)?, DForm::Ps),
            "so_odd" | "so" => {
                if param % 2 == 1 && param >= 3 {
                    Self::so_odd(param / 2)
                } else {
                    Err(Error::InvalidParams(format!("so_odd needs an odd size ≥ 3, got {param}")))
                }
            }
            other => Err(Error::InvalidParams(format!("unknown algebra `{other}`"))),
        }
    }

    pub fn label(&self) -> LieLabel {
        self.label
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[IntMatrix] {
        &self.basis
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn cartan_indices(&self) -> &[usize] {
        &self.cartan
    }

    pub fn cartan_names(&self) -> Vec<String> {
        self.cartan.iter().map(|&i| self.names[i].clone()).collect()
    }

    pub fn is_cartan(&self, i: usize) -> bool {
        self.cartan.contains(&i)
    }

    /// Matrix (numerator over [`Self::denom`]) of a coordinate vector.
    pub fn matrix_of(&self, coords: &[BigInt]) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.size, self.size);
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for i in 0..self.size {
                for j in 0..self.size {
                    let v = out.get(i, j) + c * b.get(i, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Coordinates of `num / den`, if it lies in the lattice.
    pub fn coordinates(&self, m: &QMatrix) -> Option<Vec<BigInt>> {
        // scaled by d the element must be an integer combination of the B_j
        let scaled_num = scaled(&m.num, &self.denom);
        let num = exact_div(&scaled_num, &m.den)?;
        self.solver.solve(&flatten(&num))
    }

    pub fn contains(&self, m: &QMatrix) -> bool {
        m.num.rows() == self.size && m.num.cols() == self.size && self.coordinates(m).is_some()
    }

    fn bracket_basis(&self, i: usize, j: usize) -> Result<Vec<BigInt>> {
        let c = commutator(&self.basis[i], &self.basis[j]);
        let q = QMatrix { num: c, den: &self.denom * &self.denom };
        self.coordinates(&q).ok_or_else(|| {
            Error::ClosureViolation(format!("[{}, {}] in {}", self.names[i], self.names[j], self.label))
        })
    }

    /// Structure constants, computed once.
    pub fn structure_constants(&self) -> Result<&Structure> {
        if let Some(s) = self.structure.get() {
            return Ok(s);
        }
        let n = self.dim();
        let mut s = vec![vec![vec![BigInt::zero(); n]; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let c = self.bracket_basis(i, j)?;
                s[j][i] = c.iter().map(|x| -x).collect();
                s[i][j] = c;
            }
        }
        Ok(self.structure.get_or_init(|| s))
    }

    /// `[x, y]` in lattice coordinates.
    pub fn bracket(&self, x: &[BigInt], y: &[BigInt]) -> Result<Vec<BigInt>> {
        let q = QMatrix {
            num: commutator(&self.matrix_of(x), &self.matrix_of(y)),
            den: &self.denom * &self.denom,
        };
        self.coordinates(&q)
            .ok_or_else(|| Error::ClosureViolation(format!("bracket leaves {}", self.label)))
    }

    /// `[[L, L]] ⊆ L` as basis rows (HNF) in lattice coordinates.
    pub fn derived_lattice(&self) -> Result<Vec<Vec<BigInt>>> {
        let s = self.structure_constants()?;
        let mut rows = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                rows.push(s[i][j].clone());
            }
        }
        Ok(lattice::hermite_basis(&rows))
    }

    /// `[L : [L, L]]`.
    pub fn derived_index(&self) -> Result<BigInt> {
        let h = self.derived_lattice()?;
        let sub = IntMatrix::from_columns(&h, self.dim())?;
        match lattice::lattice_index(&sub, &IntMatrix::identity(self.dim()))? {
            Index::Finite(n) => Ok(n),
            Index::Infinite => Err(Error::InfiniteIndex),
        }
    }

    /// Center of `L ⊗ F_p`: a basis of coordinate vectors mod `p`.
    pub fn center_mod_p(&self, p: u64) -> Result<Vec<Vec<u64>>> {
        if p < 2 || !(2..p).take_while(|k| k * k <= p).all(|k| p % k != 0) {
            return Err(Error::InvalidParams(format!("{p} is not prime")));
        }
        let s = self.structure_constants()?;
        let n = self.dim();
        let pb = BigInt::from(p);
        // x = Σ c_i B_i is central iff Σ_i c_i s[i][j][k] ≡ 0 for all j, k
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            for k in 0..n {
                let row: Vec<u64> =
                    (0..n).map(|i| s[i][j][k].mod_floor(&pb).to_u64().unwrap()).collect();
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
        Ok(fp::nullspace(&rows, n, p))
    }

    /// Torus coordinates `(X_1, …)` of the diagonal entry at each position.
    pub fn diag_coordinates(&self) -> &[Vec<i64>] {
        &self.diag_coord
    }

    /// Root of a non-Cartan basis vector, in torus coordinates.
    pub fn root_of(&self, i: usize) -> Option<Vec<i64>> {
        if self.is_cartan(i) {
            return None;
        }
        let (a, b) = first_nonzero(&self.basis[i])?;
        Some(self.diag_coord[a].iter().zip(&self.diag_coord[b]).map(|(x, y)| x - y).collect())
    }

    /// Eigenvalues of `ad(h_k)` on each basis vector, for the Cartan basis `h_k`.
    /// Torus invariance of a polynomial means weight zero for this grading.
    pub fn weights(&self) -> Result<Vec<Vec<i64>>> {
        let mut out = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            if self.is_cartan(i) {
                out.push(vec![0; self.cartan.len()]);
                continue;
            }
            let b = &self.basis[i];
            let mut w = Vec::with_capacity(self.cartan.len());
            for &k in &self.cartan {
                let h = &self.basis[k];
                // [h, b] = λ b with λ = (h_aa - h_bb)/d on every entry (a, b) of b
                let mut lambda: Option<BigInt> = None;
                for r in 0..self.size {
                    for c in 0..self.size {
                        if b.get(r, c).is_zero() {
                            continue;
                        }
                        let diff = h.get(r, r) - h.get(c, c);
                        let (l, rem) = diff.div_rem(&self.denom);
                        if !rem.is_zero() || lambda.as_ref().is_some_and(|x| *x != l) {
                            return Err(Error::InvalidParams(format!(
                                "{} is not an integral weight vector",
                                self.names[i]
                            )));
                        }
                        lambda = Some(l);
                    }
                }
                w.push(lambda.unwrap().to_i64().unwrap());
            }
            out.push(w);
        }
        Ok(out)
    }

    pub fn weight_map(&self) -> Result<HashMap<String, Vec<i64>>> {
        Ok(self.names.iter().cloned().zip(self.weights()?).collect())
    }

    /// Cartan part and rank-1 root spaces with their roots.
    pub fn weight_decomposition(&self) -> Result<WeightDecomposition> {
        if matches!(self.label, LieLabel::Gl(_)) {
            return Err(Error::Unsupported("gl is not simple".into()));
        }
        self.weights()?;
        let root_spaces = (0..self.dim())
            .filter(|&i| !self.is_cartan(i))
            .map(|i| RootSpace { index: i, name: self.names[i].clone(), root: self.root_of(i).unwrap() })
            .collect();
        Ok(WeightDecomposition { cartan: self.cartan_names(), root_spaces })
    }

    /// Polynomial ring on the lattice coordinates.
    pub fn coordinate_ring(&self, spec: RingSpec) -> PolyRing {
        PolyRing::new(spec, &self.names)
    }

    /// `d·M` for the universal element `M = Σ y_j B_j / d`, entries in `ring`
    /// (which must contain the coordinate variables).
    pub fn universal_matrix(&self, ring: &PolyRing) -> Result<PolyMatrix> {
        let vars: Vec<MultiPoly> =
            self.names.iter().map(|v| ring.var(v)).collect::<Result<_>>()?;
        let mut m = PolyMatrix::zeros(ring, self.size, self.size);
        for (y, b) in vars.iter().zip(&self.basis) {
            for i in 0..self.size {
                for j in 0..self.size {
                    let c = b.get(i, j);
                    if !c.is_zero() {
                        let v = m.get(i, j) + &y.scale_int(c.clone());
                        m.set(i, j, v);
                    }
                }
            }
        }
        Ok(m)
    }

    /// Matrix of `ad(x)` for the universal element, over `Z` (column `j` is `[x, B_j]`).
    pub fn universal_ad(&self, ring: &PolyRing) -> Result<PolyMatrix> {
        let s = self.structure_constants()?;
        let n = self.dim();
        let vars: Vec<MultiPoly> =
            self.names.iter().map(|v| ring.var(v)).collect::<Result<_>>()?;
        let mut m = PolyMatrix::zeros(ring, n, n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = &s[i][j][k];
                    if !c.is_zero() {
                        let v = m.get(k, j) + &vars[i].scale_int(c.clone());
                        m.set(k, j, v);
                    }
                }
            }
        }
        Ok(m)
    }

    /// The rank `l` and `δ = c_{d-l}`, the lowest nonzero coefficient of the
    /// characteristic polynomial of `ad(x)`.
    pub fn delta_poly(&self) -> Result<(usize, MultiPoly)> {
        const GUARD: usize = 15;
        if self.dim() > GUARD {
            return Err(Error::GuardExceeded(format!("dim {} > {GUARD}", self.dim())));
        }
        let ring = self.coordinate_ring(RingSpec::z());
        let cp = self.universal_ad(&ring)?.charpoly()?;
        let d = self.dim();
        // cp[i] is the coefficient of t^{d-i}
        for l in 0..=d {
            let c = &cp[d - l];
            if !c.is_zero() {
                return Ok((l, c.clone()));
            }
        }
        Err(Error::InvalidParams("ad(x) is nilpotent".into()))
    }

    /// Sets non-Cartan coordinates to zero and renames Cartan coordinate `k` to `X_{k+1}`.
    pub fn restrict_to_torus(&self, f: &MultiPoly) -> Result<MultiPoly> {
        let xs: Vec<String> = (1..=self.cartan.len()).map(|k| format!("X{k}")).collect();
        let target = PolyRing::new(f.spec().clone(), &xs);
        let mut images = Vec::with_capacity(f.ring().nvars());
        for v in f.ring().vars() {
            let img = match self.names.iter().position(|n| n == v) {
                Some(i) => match self.cartan.iter().position(|&c| c == i) {
                    Some(k) => target.var_at(k),
                    None => target.zero(),
                },
                None => {
                    return Err(Error::VariableMismatch(format!("`{v}` is not a coordinate of {}", self.label)))
                }
            };
            images.push(img);
        }
        Ok(f.substitute_images(&target, &images))
    }

    /// The lattice as a set of matrices scaled to denominator `den`: rows are
    /// flattened basis matrices.
    pub fn scaled_rows(&self, den: &BigInt) -> Result<Vec<Vec<BigInt>>> {
        let (f, r) = den.div_rem(&self.denom);
        if !r.is_zero() {
            return Err(Error::InvalidParams("denominator must be a multiple".into()));
        }
        Ok(self.basis.iter().map(|b| flatten(&scaled(b, &f))).collect())
    }

    /// `[sup : sub]` as lattices of matrices.
    pub fn index_in(sub: &LieLattice, sup: &LieLattice) -> Result<Index> {
        let den = sub.denom.lcm(&sup.denom);
        let a = sub.scaled_rows(&den)?;
        let b = sup.scaled_rows(&den)?;
        let n = sub.size * sub.size;
        lattice::lattice_index(&IntMatrix::from_columns(&a, n)?, &IntMatrix::from_columns(&b, n)?)
    }

    /// Whether every basis vector of `self` lies in `other`.
    pub fn is_sublattice_of(&self, other: &LieLattice) -> bool {
        let den = self.denom.lcm(&other.denom);
        let rows = other.scaled_rows(&den).unwrap();
        let e = EchelonBasis::new(&rows);
        self.scaled_rows(&den).unwrap().iter().all(|r| e.contains(r))
    }
}

fn unit_i64(n: usize, i: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = c;
    v
}

fn first_nonzero(m: &IntMatrix) -> Option<(usize, usize)> {
    (0..m.rows()).flat_map(|i| (0..m.cols()).map(move |j| (i, j))).find(|&(i, j)| !m.get(i, j).is_zero())
}

/// Positive roots first, then by the position of the leading coordinate.
fn root_order(w: &[i64]) -> (bool, Vec<i64>) {
    let first = w.iter().find(|&&x| x != 0).copied().unwrap_or(0);
    (first < 0, w.iter().map(|x| -x).collect())
}

/// Names such as `p1_2` (`ε_1 + ε_2`), `n1_2`, `d1_2` (`ε_1 - ε_2`), `s1` (`ε_1`), `t1` (`-ε_1`).
fn root_name(w: &[i64]) -> String {
    let nz: Vec<(usize, i64)> = w.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i + 1, x)).collect();
    match nz.as_slice() {
        [(i, 1)] => format!("s{i}"),
        [(i, -1)] => format!("t{i}"),
        [(i, 1), (j, 1)] => format!("p{i}_{j}"),
        [(i, -1), (j, -1)] => format!("n{i}_{j}"),
        [(i, 1), (j, -1)] => format!("d{i}_{j}"),
        [(i, -1), (j, 1)] => format!("d{j}_{i}"),
        _ => format!("r{}", w.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("_")),
    }
}

/// Basis of type `D_n` in the interleaved split basis: Cartan first, then one
/// vector per root. Returns `(size, named basis, Cartan count)`.
fn so_even_basis(n: usize, form: DForm) -> (usize, Vec<(String, IntMatrix)>, usize) {
    let size = 2 * n;
    let sigma = |i: usize| i ^ 1;
    let d = if form == DForm::Z || form == DForm::Sc { 1 } else { 2 };
    let db = BigInt::from(d);
    let positions: Vec<(usize, Option<usize>)> = (0..n).map(|k| (2 * k, Some(2 * k + 1))).collect();
    let diag = d_diagonal(n, form);
    // d_diagonal is scaled by 2; rescale to denominator d
    let diag: Vec<Vec<BigInt>> = diag
        .into_iter()
        .map(|r| r.into_iter().map(|x| x * BigInt::from(d) / BigInt::from(2)).collect())
        .collect();
    let mut named: Vec<(String, IntMatrix)> = Vec::new();
    for (k, m) in diag_basis(size, &positions, &diag).into_iter().enumerate() {
        named.push((format!("h{}", k + 1), m));
    }
    // BM = E_ij - E_ji gives M = E_{σi, j} - E_{σj, i}; skip the diagonal pairs j = σi
    let coord = |p: usize| -> Vec<i64> {
        let mut v = vec![0; n];
        v[p / 2] = if p % 2 == 0 { 1 } else { -1 };
        v
    };
    let mut roots: Vec<(Vec<i64>, IntMatrix)> = Vec::new();
    for i in 0..size {
        for j in i + 1..size {
            if j == sigma(i) {
                continue;
            }
            let m = lin(&[(1, &e(size, sigma(i), j)), (-1, &e(size, sigma(j), i))]);
            let (a, b) = (sigma(i), j);
            let w: Vec<i64> = coord(a).iter().zip(coord(b)).map(|(x, y)| x - y).collect();
            // orient so the (a, b) entry with a < b carries +1 in the leading position
            roots.push((w, scaled(&m, &db)));
        }
    }
    roots.sort_by(|a, b| root_order(&a.0).cmp(&root_order(&b.0)));
    for (w, m) in roots {
        named.push((root_name(&w), m));
    }
    (size, named, n)
}
