//! Adjoint invariants on the universal element of a Lie lattice:
//! characteristic coefficients, the pfaffian, the pfaffian characteristic
//! polynomial mod 2 and its lifts, root-group actions with a formal
//! parameter, and degree-bounded invariant spaces.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{DForm, LieLabel, LieLattice, QMatrix};
use crate::lattice::IntMatrix;
use crate::poly::{Monomial, MultiPoly, PolyMatrix, PolyRing};
use crate::ring::RingSpec;
use crate::space::{Levels, Missing, SplitSpace};
use crate::weyl::{self, BoundedSpace, WeylGroup, WeylType};

/// The universal element `M = Σ y_j B_j / d`, stored as `d·M`.
#[derive(Debug, Clone)]
pub struct UniversalElement<'a> {
    pub lattice: &'a LieLattice,
    pub ring: PolyRing,
    pub scaled: PolyMatrix,
}

pub fn universal_element<'a>(lattice: &'a LieLattice, spec: &RingSpec) -> Result<UniversalElement<'a>> {
    let ring = lattice.coordinate_ring(spec.clone());
    let scaled = lattice.universal_matrix(&ring)?;
    let u = UniversalElement { lattice, ring, scaled };
    u.verify_conditions()?;
    Ok(u)
}

/// Polar form of `Σ x_k y_k` in the interleaved basis.
pub fn split_form(size: usize) -> IntMatrix {
    let mut b = IntMatrix::zeros(size, size);
    for k in 0..size / 2 {
        b.set(2 * k, 2 * k + 1, BigInt::one());
        b.set(2 * k + 1, 2 * k, BigInt::one());
    }
    b
}

fn int_matrix_poly(ring: &PolyRing, m: &IntMatrix) -> PolyMatrix {
    let mut out = PolyMatrix::zeros(ring, m.rows(), m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.get(i, j).is_zero() {
                out.set(i, j, ring.int(m.get(i, j).clone()));
            }
        }
    }
    out
}

fn is_orthogonal(label: LieLabel) -> bool {
    matches!(label, LieLabel::SoEven(..) | LieLabel::SoOdd(_))
}

impl UniversalElement<'_> {
    pub fn label(&self) -> LieLabel {
        self.lattice.label()
    }

    /// Checks the defining linear conditions of the lattice identically.
    pub fn verify_conditions(&self) -> Result<()> {
        let m = &self.scaled;
        let n = m.rows();
        let fail = |what: &str| Err(Error::ClosureViolation(format!("universal element of {} {what}", self.label())));
        match self.label() {
            LieLabel::SoEven(..) | LieLabel::SoOdd(_) => {
                let b = int_matrix_poly(&self.ring, &split_form(n));
                if !b.try_mul(m)?.is_alternating() {
                    return fail("has BM not alternating");
                }
            }
            LieLabel::Sp(k) | LieLabel::Psp(k) => {
                // ᵗM J + J M = 0 with J = [[0, I], [-I, 0]]
                let mut j = IntMatrix::zeros(n, n);
                for i in 0..k {
                    j.set(i, k + i, BigInt::one());
                    j.set(k + i, i, -BigInt::one());
                }
                let j = int_matrix_poly(&self.ring, &j);
                if !m.transpose().try_mul(&j)?.try_add(&j.try_mul(m)?)?.is_zero() {
                    return fail("does not preserve the symplectic form");
                }
            }
            LieLabel::Sl(_) | LieLabel::SlModMu(..) => {
                let tr = (0..n).fold(self.ring.zero(), |a, i| &a + m.get(i, i));
                if !tr.is_zero() {
                    return fail("has nonzero trace");
                }
            }
            LieLabel::Gl(_) => {}
        }
        Ok(())
    }

    /// `[c_1, c_2, …]` with `det(t - d·M) = t^N + c_1 t^{N-1} + …`. For
    /// `so_{2n+1}` the list stops at `c_{2n+1}`, the vanishing constant term
    /// of the size-`(2n+2)` polynomial being dropped.
    pub fn char_poly_coeffs(&self) -> Result<Vec<MultiPoly>> {
        let mut cp = self.scaled.charpoly()?;
        cp.remove(0);
        if let LieLabel::SoOdd(_) = self.label() {
            let last = cp.pop().unwrap();
            if !last.is_zero() {
                return Err(Error::ClosureViolation("so_odd element with nonzero determinant".into()));
            }
        }
        Ok(cp)
    }

    fn require_pfaffian_support(&self) -> Result<()> {
        if !is_orthogonal(self.label()) {
            return Err(Error::Unsupported(format!("no pfaffian on {}", self.label())));
        }
        if !self.lattice.denom().is_one() {
            return Err(Error::Unsupported(format!("pfaffian on {} needs denominator 1", self.label())));
        }
        Ok(())
    }

    /// `pf(M) = pf′(M B) = (-1)^n pf′(B M)`; restricts to `X_1⋯X_n` on the torus.
    pub fn pfaffian(&self) -> Result<MultiPoly> {
        self.require_pfaffian_support()?;
        if let LieLabel::SoOdd(_) = self.label() {
            return Err(Error::Unsupported("the pfaffian of so_odd vanishes; use the lifts π_i".into()));
        }
        let b = int_matrix_poly(&self.ring, &split_form(self.scaled.rows()));
        self.scaled.try_mul(&b)?.pfaffian()
    }

    /// `π_{F_2}(t)` with coefficients in `F_2[y]`, in the ring extended by `t`:
    /// `pf′((t - M) B)`, divided by `t` for `so_{2n+1}`.
    pub fn pfaffian_char_poly_mod2(&self) -> Result<MultiPoly> {
        self.require_pfaffian_support()?;
        let f2 = self.ring.with_spec(RingSpec::f2()).extend(&["t"]);
        let n = self.scaled.rows();
        let t = f2.var("t")?;
        let mut tm = PolyMatrix::zeros(&f2, n, n);
        for i in 0..n {
            for j in 0..n {
                let e = self.scaled.get(i, j).embed(&f2)?;
                tm.set(i, j, if i == j { &t - &e } else { e.neg() });
            }
        }
        let b = int_matrix_poly(&f2, &split_form(n));
        let pf = tm.try_mul(&b)?.pfaffian()?;
        match self.label() {
            LieLabel::SoOdd(_) => pf
                .div_var_pow(f2.var_index("t").unwrap(), 1)
                .ok_or_else(|| Error::ClosureViolation("pf((t-M)B) not divisible by t".into())),
            _ => Ok(pf),
        }
    }

    /// `π_1, …, π_n` over `Z`: coefficientwise lifts of `π_{F_2}` with `1 ↦ one`,
    /// except `π_n = pf(M)` for `so_{2n}`.
    pub fn lift_pfaffian_coeffs_with(&self, one: i64) -> Result<Vec<MultiPoly>> {
        let pi = self.pfaffian_char_poly_mod2()?;
        let n = pi.ring().nvars() - 1;
        let coeffs = pi.coeffs_in_index(n);
        let deg = coeffs.len() - 1;
        let z = self.ring.with_spec(RingSpec::z());
        let f2 = self.ring.with_spec(RingSpec::f2());
        let mut out = Vec::with_capacity(deg);
        for i in 1..=deg {
            let c = coeffs[deg - i].embed(&f2)?;
            let lifted = c.lift_f2(&z)?.scale_int(one);
            out.push(lifted);
        }
        if let LieLabel::SoEven(..) = self.label() {
            let pf = self.pfaffian()?.embed(&z)?;
            *out.last_mut().unwrap() = pf;
        }
        Ok(out)
    }

    pub fn lift_pfaffian_coeffs(&self) -> Result<Vec<MultiPoly>> {
        self.lift_pfaffian_coeffs_with(1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GeneratorKind {
    RootUnipotent { basis_index: usize, root: Vec<i64> },
    TorusGrading,
}

/// The root group `exp(t·E_α)` acting on coordinates through the divided
/// powers of `ad E_α`: `y ↦ Σ_s t^s (ad E_α)^s / s! · y`.
#[derive(Debug, Clone)]
pub struct ParametricGenerator {
    pub name: String,
    pub kind: GeneratorKind,
    /// Whether `E_α² = 0`, so that the group element is `I + t·E_α`.
    pub square_zero: bool,
    powers: Vec<Vec<Vec<BigInt>>>,
}

impl ParametricGenerator {
    /// Images of the coordinates in `ring` (which must also contain `t`).
    pub fn images(&self, lattice: &LieLattice, ring: &PolyRing) -> Result<Vec<MultiPoly>> {
        let t = ring.var("t")?;
        let ys: Vec<MultiPoly> = lattice.names().iter().map(|v| ring.var(v)).collect::<Result<_>>()?;
        let mut out = ys.clone();
        let mut tp = ring.one();
        for p in &self.powers {
            tp = &tp * &t;
            for (k, img) in out.iter_mut().enumerate() {
                let mut lin = ring.zero();
                for (j, y) in ys.iter().enumerate() {
                    if !p[k][j].is_zero() {
                        lin = &lin + &y.scale_int(p[k][j].clone());
                    }
                }
                if !lin.is_zero() {
                    *img = &*img + &(&tp * &lin);
                }
            }
        }
        Ok(out)
    }

    /// `(ad E_α)^s / s!` for `s = 1, 2, …` on lattice coordinates.
    pub fn divided_powers(&self) -> &[Vec<Vec<BigInt>>] {
        &self.powers
    }
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// One root group per root space plus the torus grading. Fails if some
/// divided power of `ad E_α` leaves the lattice.
pub fn adjoint_generators(lattice: &LieLattice) -> Result<Vec<ParametricGenerator>> {
    let dim = lattice.dim();
    let d = lattice.denom().clone();
    let mut out = Vec::new();
    for e in 0..dim {
        let Some(root) = lattice.root_of(e) else { continue };
        let be = &lattice.basis()[e];
        let square_zero = be.mul(be)?.to_rows().iter().flatten().all(Zero::is_zero);
        // ad[k][j] = k-th coordinate of [E, B_j/d]
        let mut ad = vec![vec![BigInt::zero(); dim]; dim];
        for j in 0..dim {
            let bj = &lattice.basis()[j];
            let eb = be.mul(bj)?;
            let be_ = bj.mul(be)?;
            let mut comm = eb.clone();
            for r in 0..comm.rows() {
                for c in 0..comm.cols() {
                    comm.set(r, c, eb.get(r, c) - be_.get(r, c));
                }
            }
            let c = lattice
                .coordinates(&QMatrix { num: comm, den: &d * &d })
                .ok_or_else(|| Error::ClosureViolation(format!("[E, {}] outside lattice", lattice.names()[j])))?;
            for k in 0..dim {
                ad[k][j] = c[k].clone();
            }
        }
        let mut powers = Vec::new();
        let mut cur = ad.clone();
        let mut s = 1u32;
        while cur.iter().flatten().any(|x| !x.is_zero()) {
            if s as usize > 2 * lattice.size() {
                return Err(Error::ClosureViolation(format!("ad {} is not nilpotent", lattice.names()[e])));
            }
            powers.push(cur.clone());
            s += 1;
            // (ad^s / s!) = (ad^{s-1}/(s-1)!) · ad / s
            let next = mat_mul(&cur, &ad);
            let sb = BigInt::from(s);
            let mut divided = Vec::with_capacity(dim);
            for row in next {
                let mut r = Vec::with_capacity(dim);
                for x in row {
                    if !(&x % &sb).is_zero() {
                        return Err(Error::ClosureViolation(format!(
                            "(ad {})^{s}/{s}! is not integral",
                            lattice.names()[e]
                        )));
                    }
                    r.push(x / &sb);
                }
                divided.push(r);
            }
            cur = divided;
        }
        out.push(ParametricGenerator {
            name: format!("exp(t*E[{}])", lattice.names()[e]),
            kind: GeneratorKind::RootUnipotent { basis_index: e, root },
            square_zero,
            powers,
        });
    }
    out.push(ParametricGenerator {
        name: "torus".into(),
        kind: GeneratorKind::TorusGrading,
        square_zero: true,
        powers: Vec::new(),
    });
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvarianceWitness {
    /// A nonzero component of the given torus weight.
    Weight { weight: Vec<i64>, component: MultiPoly },
    /// `f∘g - f` has this nonzero coefficient at `t^power`.
    Unipotent { generator: String, power: usize, coefficient: MultiPoly },
}

impl std::fmt::Display for InvarianceWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InvarianceWitness::Weight { weight, component } => {
                write!(f, "torus weight {weight:?} component {component}")
            }
            InvarianceWitness::Unipotent { generator, power, coefficient } => {
                write!(f, "{generator}: coefficient of t^{power} is {coefficient}")
            }
        }
    }
}

/// `None` when `f` is invariant, else a witness.
pub fn check_invariance(f: &MultiPoly, lattice: &LieLattice) -> Result<Option<InvarianceWitness>> {
    check_invariance_with(f, lattice, &adjoint_generators(lattice)?)
}

pub fn check_invariance_with(
    f: &MultiPoly,
    lattice: &LieLattice,
    gens: &[ParametricGenerator],
) -> Result<Option<InvarianceWitness>> {
    let weights = lattice.weight_map()?;
    let zero = vec![0i64; lattice.cartan_indices().len()];
    for (w, comp) in f.weight_components(&weights)? {
        if w != zero {
            return Ok(Some(InvarianceWitness::Weight { weight: w, component: comp }));
        }
    }
    let rt = f.ring().extend(&["t"]);
    let base = f.embed(&rt)?;
    for g in gens {
        if g.kind == GeneratorKind::TorusGrading {
            continue;
        }
        let images = g.images(lattice, &rt)?;
        let moved = base.substitute_images(&rt, &images);
        let diff = &moved - &base;
        for (power, c) in diff.coeffs_in("t")?.into_iter().enumerate() {
            if !c.is_zero() {
                let coefficient = c.embed(f.ring())?;
                return Ok(Some(InvarianceWitness::Unipotent { generator: g.name.clone(), power, coefficient }));
            }
        }
    }
    Ok(None)
}

const COLUMN_GUARD: usize = 4000;

/// Degree-≤`d` invariants: weight-0 monomials, then the linear conditions
/// "every positive `t`-power of `f∘g - f` vanishes" for each root unipotent.
pub fn adjoint_invariant_space_bounded(lattice: &LieLattice, spec: &RingSpec, d: u32) -> Result<BoundedSpace> {
    Levels::of(spec)?;
    if lattice.dim() * d as usize > 80 {
        return Err(Error::GuardExceeded(format!("dim·d = {} > 80", lattice.dim() * d as usize)));
    }
    let gens = adjoint_generators(lattice)?;
    let weights = lattice.weights()?;
    let nv = lattice.dim();
    let zring = lattice.coordinate_ring(RingSpec::z());
    let rt = zring.extend(&["t"]);
    let images: Vec<Vec<MultiPoly>> = gens
        .iter()
        .filter(|g| g.kind != GeneratorKind::TorusGrading)
        .map(|g| g.images(lattice, &rt))
        .collect::<Result<_>>()?;
    let tvar = rt.var_index("t").unwrap();
    let mut parts = Vec::new();
    let mut monomials = Vec::new();
    for k in 0..=d {
        let monos: Vec<Monomial> = Monomial::all_of_degree(nv, k)
            .into_iter()
            .filter(|m| {
                let mut w = vec![0i64; weights[0].len()];
                for (i, &e) in m.exps().iter().enumerate() {
                    for (x, y) in w.iter_mut().zip(&weights[i]) {
                        *x += *y * e as i64;
                    }
                }
                w.iter().all(|&x| x == 0)
            })
            .collect();
        if monomials.len() + monos.len() > COLUMN_GUARD {
            return Err(Error::GuardExceeded(format!("more than {COLUMN_GUARD} weight-0 monomials")));
        }
        // rows keyed by (generator, output monomial including the t-power)
        let mut rows: BTreeMap<(usize, Monomial), Vec<BigInt>> = BTreeMap::new();
        for (col, m) in monos.iter().enumerate() {
            let mono = zring.monomial(m.clone(), crate::ring::Scalar::int(1)).embed(&rt)?;
            for (g, img) in images.iter().enumerate() {
                let moved = mono.substitute_images(&rt, img);
                for (out, c) in moved.terms() {
                    if out.exp(tvar) == 0 {
                        continue;
                    }
                    let row = rows.entry((g, out.clone())).or_insert_with(|| vec![BigInt::zero(); monos.len()]);
                    row[col] += &c.int;
                }
            }
        }
        let rows: Vec<Vec<BigInt>> = rows.into_values().collect();
        parts.push(SplitSpace::kernel(spec, &rows, monos.len())?);
        monomials.extend(monos);
    }
    let ring = lattice.coordinate_ring(spec.clone());
    Ok(BoundedSpace { ring, monomials, space: SplitSpace::direct_sum(spec, &parts)? })
}

/// Weyl type and rank matching a lattice's torus coordinates.
pub fn weyl_type_of(label: LieLabel) -> Result<(WeylType, usize)> {
    match label {
        LieLabel::Sl(2) | LieLabel::SlModMu(2, _) => Ok((WeylType::C, 1)),
        LieLabel::Sp(n) | LieLabel::Psp(n) => Ok((WeylType::C, n)),
        LieLabel::SoEven(n, DForm::Z) => Ok((WeylType::D, n)),
        LieLabel::SoOdd(n) => Ok((WeylType::B, n)),
        other => Err(Error::Unsupported(format!("no signed-permutation Weyl action on {other}"))),
    }
}

#[derive(Debug, Clone)]
pub struct ChevalleyReport {
    pub label: LieLabel,
    pub spec: RingSpec,
    pub degree: u32,
    pub adjoint_ranks: (usize, usize),
    pub weyl_ranks: (usize, usize),
    pub injective: bool,
    pub surjective: bool,
    /// A Weyl invariant outside the image of restriction.
    pub missing: Option<MultiPoly>,
}

/// Restriction of degree-≤`d` adjoint invariants to the torus, compared
/// with the degree-≤`d` Weyl invariants.
pub fn chevalley_check(lattice: &LieLattice, spec: &RingSpec, d: u32) -> Result<ChevalleyReport> {
    let (kind, n) = weyl_type_of(lattice.label())?;
    if lattice.cartan_indices().len() != n {
        return Err(Error::Unsupported(format!("torus rank mismatch on {}", lattice.label())));
    }
    let adj = adjoint_invariant_space_bounded(lattice, spec, d)?;
    let weyl = weyl::invariant_space_bounded(&WeylGroup::new(kind, n)?, spec, d)?;
    let windex = weyl.index();
    let cartan = lattice.cartan_indices();
    // coordinate monomial ↦ torus monomial, or None if it involves a root coordinate
    let restricted: Vec<Option<usize>> = adj
        .monomials
        .iter()
        .map(|m| {
            let e = m.exps();
            if e.iter().enumerate().any(|(i, &x)| x > 0 && !cartan.contains(&i)) {
                return None;
            }
            let tm = Monomial::from_exps(cartan.iter().map(|&i| e[i]).collect());
            windex.get(&tm).copied()
        })
        .collect();
    let out_cols = weyl.monomials.len();
    let map = |v: &[BigInt]| {
        let mut out = vec![BigInt::zero(); out_cols];
        for (x, r) in v.iter().zip(&restricted) {
            if let Some(j) = r {
                out[*j] += x;
            }
        }
        out
    };
    let image = adj.space.image(map, out_cols)?;
    let injective = image.ranks() == adj.space.ranks();
    let missing = weyl.space.first_missing(&image).map(|m: Missing| m.to_poly(&weyl.ring, &weyl.monomials));
    Ok(ChevalleyReport {
        label: lattice.label(),
        spec: spec.clone(),
        degree: d,
        adjoint_ranks: adj.space.ranks(),
        weyl_ranks: weyl.space.ranks(),
        injective,
        surjective: missing.is_none() && image.is_subspace_of(&weyl.space),
        missing,
    })
}

/// `Σ coefficient · product` reorganized by monomial, for reporting.
pub fn weight_table(f: &MultiPoly, lattice: &LieLattice) -> Result<HashMap<Vec<i64>, MultiPoly>> {
    Ok(f.weight_components(&lattice.weight_map()?)?.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_universal_and_det() {
        let l = LieLattice::sl(2).unwrap();
        let u = universal_element(&l, &RingSpec::z()).unwrap();
        let r = u.ring.clone();
        assert_eq!(u.scaled.get(0, 1), &r.parse("b").unwrap());
        assert_eq!(u.scaled.get(1, 1), &r.parse("-a").unwrap());
        let c = u.char_poly_coeffs().unwrap();
        assert!(c[0].is_zero());
        assert_eq!(c[1], r.parse("-a^2-b*c").unwrap());
    }

    #[test]
    fn sl2_unipotent_substitution() {
        let l = LieLattice::sl(2).unwrap();
        let gens = adjoint_generators(&l).unwrap();
        let up = gens.iter().find(|g| g.name.contains("[b]")).unwrap();
        let rt = l.coordinate_ring(RingSpec::z()).extend(&["t"]);
        let img = up.images(&l, &rt).unwrap();
        assert_eq!(img[0], rt.parse("a+t*c").unwrap());
        assert_eq!(img[1], rt.parse("b-2*t*a-t^2*c").unwrap());
        assert_eq!(img[2], rt.parse("c").unwrap());
        assert_eq!(gens.len(), 3);
    }

    #[test]
    fn invariance_witnesses() {
        let l = LieLattice::sl(2).unwrap();
        let r = l.coordinate_ring(RingSpec::z());
        assert_eq!(check_invariance(&r.parse("a^2+b*c").unwrap(), &l).unwrap(), None);
        match check_invariance(&r.parse("a").unwrap(), &l).unwrap() {
            Some(InvarianceWitness::Unipotent { power: 1, coefficient, .. }) => {
                assert!(coefficient == r.parse("c").unwrap() || coefficient == r.parse("-b").unwrap())
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            check_invariance(&r.parse("b").unwrap(), &l).unwrap(),
            Some(InvarianceWitness::Weight { .. })
        ));
        let psl2 = LieLattice::sl_mod_mu(2, 2).unwrap();
        let o = psl2.coordinate_ring(RingSpec::o());
        assert_eq!(check_invariance(&o.parse("tau*alpha").unwrap(), &psl2).unwrap(), None);
        assert!(check_invariance(&o.parse("alpha").unwrap(), &psl2).unwrap().is_some());
    }

    #[test]
    fn root_group_shapes() {
        let sp4 = LieLattice::sp(2).unwrap();
        let gens = adjoint_generators(&sp4).unwrap();
        assert_eq!(gens.len(), 9);
        assert!(gens.iter().all(|g| g.square_zero));
        let so5 = LieLattice::so_odd(2).unwrap();
        let short = adjoint_generators(&so5).unwrap().into_iter().filter(|g| !g.square_zero).count();
        assert_eq!(short, 4);
    }

    #[test]
    fn so4_pfaffian() {
        let l = LieLattice::so_even(2, DForm::Z).unwrap();
        let u = universal_element(&l, &RingSpec::z()).unwrap();
        let pf = u.pfaffian().unwrap();
        let det = u.scaled.det().unwrap();
        assert_eq!(&pf * &pf, det);
        assert_eq!(l.restrict_to_torus(&pf).unwrap(), l.restrict_to_torus(&pf).unwrap().ring().parse("X1*X2").unwrap());
    }
}
