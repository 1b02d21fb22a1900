//! Finitely generated submodules of `A^n` for `A ∈ {Z, F_p, O}`.
//!
//! Over `O = Z[τ]/(2τ)` every coefficient splits as an integer plus an
//! `F_2`-combination of the powers `τ^j`. The modules handled here (kernels
//! of integral linear conditions, and spans closed under multiplication by
//! `τ`) are determined by their `τ⁰` level, a lattice in `Z^n`, and their
//! `τ¹` level, a subspace of `F_2^n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::{self, fp::FpSpan, EchelonBasis, IntMatrix};
use crate::poly::{Monomial, MultiPoly, PolyRing};
use crate::ring::{RingSpec, Scalar};

/// Which levels a ring carries: an integral lattice, an `F_p` level, or both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Levels {
    pub integral: bool,
    pub prime: Option<u64>,
}

impl Levels {
    pub fn of(spec: &RingSpec) -> Result<Self> {
        match spec {
            RingSpec::Integers => Ok(Levels { integral: true, prime: None }),
            RingSpec::TwoTorsionExt => Ok(Levels { integral: true, prime: Some(2) }),
            RingSpec::IntegersMod(m) => {
                let p = m.to_u64().filter(|&p| is_prime(p)).ok_or_else(|| {
                    Error::Unsupported(format!("Z/{m}: only prime moduli are supported here"))
                })?;
                Ok(Levels { integral: false, prime: Some(p) })
            }
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|k| k * k <= p).all(|k| p % k != 0)
}

#[derive(Debug, Clone)]
pub struct SplitSpace {
    spec: RingSpec,
    ncols: usize,
    z: Vec<Vec<BigInt>>,
    fp: Option<FpSpan>,
}

fn reduce_mod(v: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    v.iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect()
}

impl SplitSpace {
    /// `{x : rows·x = 0}`, the conditions having integer coefficients.
    pub fn kernel(spec: &RingSpec, rows: &[Vec<BigInt>], ncols: usize) -> Result<Self> {
        let lv = Levels::of(spec)?;
        let z = if lv.integral {
            let h = lattice::hermite_basis(rows);
            let k = if h.is_empty() {
                (0..ncols)
                    .map(|i| (0..ncols).map(|j| BigInt::from((i == j) as i64)).collect())
                    .collect()
            } else {
                lattice::integer_kernel(&IntMatrix::from_rows(h)?)
            };
            lattice::hermite_basis(&k)
        } else {
            Vec::new()
        };
        let fp = lv.prime.map(|p| {
            let reduced: Vec<Vec<u64>> = rows.iter().map(|r| reduce_mod(r, p)).collect();
            let mut span = FpSpan::new(p, ncols);
            for v in lattice::fp::nullspace(&reduced, ncols, p) {
                span.insert(&v);
            }
            span
        });
        Ok(SplitSpace { spec: spec.clone(), ncols, z, fp })
    }

    /// The module generated by integral vectors `z_gens` (and, over `O`,
    /// their `τ`-multiples) together with `τ`-level vectors `fp_gens`.
    pub fn span(spec: &RingSpec, z_gens: &[Vec<BigInt>], fp_gens: &[Vec<u64>], ncols: usize) -> Result<Self> {
        let lv = Levels::of(spec)?;
        let z = if lv.integral { lattice::hermite_basis(z_gens) } else { Vec::new() };
        let fp = lv.prime.map(|p| {
            let mut span = FpSpan::new(p, ncols);
            for g in z_gens {
                span.insert(&reduce_mod(g, p));
            }
            for g in fp_gens {
                span.insert(g);
            }
            span
        });
        Ok(SplitSpace { spec: spec.clone(), ncols, z, fp })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Integral level in Hermite normal form.
    pub fn z_basis(&self) -> &[Vec<BigInt>] {
        &self.z
    }

    /// The `F_p` level (`τ¹` level over `O`).
    pub fn fp_basis(&self) -> &[Vec<u64>] {
        self.fp.as_ref().map(|s| s.basis()).unwrap_or(&[])
    }

    pub fn prime(&self) -> Option<u64> {
        self.fp.as_ref().map(|_| Levels::of(&self.spec).unwrap().prime.unwrap())
    }

    /// Ranks of the integral and `F_p` levels.
    pub fn ranks(&self) -> (usize, usize) {
        (self.z.len(), self.fp_basis().len())
    }

    /// Direct sum of spaces on consecutive coordinate blocks.
    pub fn direct_sum(spec: &RingSpec, parts: &[SplitSpace]) -> Result<Self> {
        let ncols: usize = parts.iter().map(|p| p.ncols).sum();
        let mut z = Vec::new();
        let mut fpg = Vec::new();
        let mut off = 0;
        for p in parts {
            for r in &p.z {
                let mut v = vec![BigInt::zero(); ncols];
                v[off..off + p.ncols].clone_from_slice(r);
                z.push(v);
            }
            for r in p.fp_basis() {
                let mut v = vec![0u64; ncols];
                v[off..off + p.ncols].copy_from_slice(r);
                fpg.push(v);
            }
            off += p.ncols;
        }
        let mut out = SplitSpace::span(spec, &[], &fpg, ncols)?;
        out.z = lattice::hermite_basis(&z);
        Ok(out)
    }

    /// Image under an integral linear map, given as a function on vectors.
    pub fn image(&self, f: impl Fn(&[BigInt]) -> Vec<BigInt>, out_cols: usize) -> Result<Self> {
        let z: Vec<Vec<BigInt>> = self.z.iter().map(|v| f(v)).collect();
        let mut out = SplitSpace { spec: self.spec.clone(), ncols: out_cols, z: lattice::hermite_basis(&z), fp: None };
        if let Some(p) = self.prime() {
            let mut span = FpSpan::new(p, out_cols);
            for v in self.fp_basis() {
                let big: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
                span.insert(&reduce_mod(&f(&big), p));
            }
            out.fp = Some(span);
        }
        Ok(out)
    }

    /// Whether the integral map `f` is injective on this module.
    pub fn injective_under(&self, f: impl Fn(&[BigInt]) -> Vec<BigInt>, out_cols: usize) -> Result<bool> {
        let img = self.image(f, out_cols)?;
        Ok(img.ranks() == self.ranks())
    }

    /// Whether `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &SplitSpace) -> bool {
        self.first_missing(other).is_none()
    }

    /// A basis element of `self` not contained in `other`.
    pub fn first_missing(&self, other: &SplitSpace) -> Option<Missing> {
        let e = EchelonBasis::new(&other.z);
        if let Some(v) = self.z.iter().find(|v| !e.contains(v)) {
            return Some(Missing::Integral(v.clone()));
        }
        let empty = FpSpan::new(2, self.ncols);
        let theirs = other.fp.as_ref().unwrap_or(&empty);
        self.fp_basis().iter().find(|v| !theirs.contains(v)).map(|v| Missing::Torsion(v.clone()))
    }

    pub fn same(&self, other: &SplitSpace) -> bool {
        self.is_subspace_of(other) && other.is_subspace_of(self)
    }

    /// Basis polynomials: integral level as is, the `F_p` level over `F_p`
    /// or multiplied by `τ` over `O`.
    pub fn to_polys(&self, ring: &PolyRing, monomials: &[Monomial]) -> Vec<MultiPoly> {
        let mut out = Vec::new();
        for v in &self.z {
            out.push(vector_poly(ring, monomials, v.iter().map(|x| Scalar::int(x.clone()))));
        }
        let tau = matches!(self.spec, RingSpec::TwoTorsionExt);
        for v in self.fp_basis() {
            let coeffs = v.iter().map(|&x| {
                if tau {
                    if x == 0 {
                        Scalar::default()
                    } else {
                        ring.spec().tau()
                    }
                } else {
                    Scalar::int(x)
                }
            });
            out.push(vector_poly(ring, monomials, coeffs));
        }
        out
    }
}

/// A witness of non-containment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Missing {
    Integral(Vec<BigInt>),
    /// An `F_p` vector, the coefficient vector of `τ·f` over `O`.
    Torsion(Vec<u64>),
}

impl Missing {
    pub fn to_poly(&self, ring: &PolyRing, monomials: &[Monomial]) -> MultiPoly {
        match self {
            Missing::Integral(v) => vector_poly(ring, monomials, v.iter().map(|x| Scalar::int(x.clone()))),
            Missing::Torsion(v) => {
                let tau = matches!(ring.spec(), RingSpec::TwoTorsionExt);
                vector_poly(
                    ring,
                    monomials,
                    v.iter().map(|&x| {
                        if tau && x != 0 {
                            ring.spec().tau()
                        } else {
                            Scalar::int(x)
                        }
                    }),
                )
            }
        }
    }
}

fn vector_poly(ring: &PolyRing, monomials: &[Monomial], coeffs: impl Iterator<Item = Scalar>) -> MultiPoly {
    let mut p = ring.zero();
    for (m, c) in monomials.iter().zip(coeffs) {
        p.add_term(m.clone(), ring.spec().normalize(&c));
    }
    p
}

/// Integer coefficient vector of an integral polynomial on a monomial list.
pub fn int_coords(p: &MultiPoly, index: &std::collections::HashMap<Monomial, usize>, n: usize) -> Result<Vec<BigInt>> {
    let mut v = vec![BigInt::zero(); n];
    for (m, c) in p.terms() {
        let i = *index.get(m).ok_or_else(|| Error::Dimension(format!("monomial outside the basis in {p}")))?;
        v[i] = c.int.clone();
    }
    Ok(v)
}

/// The `F_p` level of a polynomial: its integer part mod `p` plus, over `O`, its `τ¹` bits.
pub fn fp_coords(
    p: &MultiPoly,
    index: &std::collections::HashMap<Monomial, usize>,
    n: usize,
    prime: u64,
    tau_bit: Option<u64>,
) -> Result<Vec<u64>> {
    let pb = BigInt::from(prime);
    let mut v = vec![0u64; n];
    for (m, c) in p.terms() {
        let i = *index.get(m).ok_or_else(|| Error::Dimension(format!("monomial outside the basis in {p}")))?;
        v[i] = match tau_bit {
            Some(b) => c.tau.bit(b) as u64,
            None => c.int.mod_floor(&pb).to_u64().unwrap(),
        };
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn kernel_over_o_has_torsion_level() {
        // 2x_0 = 0 kills x_0 over Z but not τx_0 over O
        let rows = big(&[vec![2, 0]]);
        let k = SplitSpace::kernel(&RingSpec::o(), &rows, 2).unwrap();
        assert_eq!(k.ranks(), (1, 2));
        let kz = SplitSpace::kernel(&RingSpec::z(), &rows, 2).unwrap();
        assert_eq!(kz.ranks(), (1, 0));
        assert!(kz.first_missing(&k).is_none());
        assert!(matches!(k.first_missing(&kz), Some(Missing::Torsion(_))));
    }

    #[test]
    fn composite_modulus_is_unsupported() {
        assert!(SplitSpace::kernel(&RingSpec::zmod(4), &[], 1).is_err());
        assert_eq!(SplitSpace::kernel(&RingSpec::zmod(3), &big(&[vec![1, 2]]), 2).unwrap().ranks(), (0, 1));
    }

    #[test]
    fn span_is_saturation_sensitive() {
        let a = SplitSpace::span(&RingSpec::z(), &big(&[vec![2, 0]]), &[], 2).unwrap();
        let b = SplitSpace::kernel(&RingSpec::z(), &big(&[vec![0, 1]]), 2).unwrap();
        assert!(a.is_subspace_of(&b));
        assert!(!b.is_subspace_of(&a));
    }
}
