//! Weyl groups of types B, C and D as signed permutations of torus
//! coordinates `X_1, …, X_n`, their invariant generators over rings with
//! 2-torsion, and degree-bounded invariant modules.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{fp, IntSolver, IntMatrix};
use crate::poly::{elementary_symmetric, Monomial, MultiPoly, PolyRing};
use crate::ring::{RingSpec, Scalar};
use crate::space::{self, Levels, SplitSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum WeylType {
    B,
    C,
    D,
}

impl WeylType {
    pub fn from_char(c: char) -> Result<Self> {
        match c.to_ascii_uppercase() {
            'B' => Ok(WeylType::B),
            'C' => Ok(WeylType::C),
            'D' => Ok(WeylType::D),
            _ => Err(Error::InvalidParams(format!("Weyl type must be B, C or D, got {c}"))),
        }
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// `X_i ↦ signs[i] · X_{perm[i]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPerm {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParams("not a permutation".into()));
            }
        }
        if signs.len() != n || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidParams("signs must be ±1".into()));
        }
        Ok(SignedPerm { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPerm { perm: (0..n).collect(), signs: vec![1; n] }
    }

    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.perm.swap(i, j);
        w
    }

    /// `ε_I`: negates the coordinates in `idx`.
    pub fn flip(n: usize, idx: &[usize]) -> Self {
        let mut w = Self::identity(n);
        for &i in idx {
            w.signs[i] = -w.signs[i];
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn num_flips(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    /// `self ∘ other` as substitutions: apply `other` first.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        // other: X_i ↦ s_i X_{π(i)}, then self: X_{π(i)} ↦ t_{π(i)} X_{ρ(π(i))}
        let n = self.rank();
        let perm = (0..n).map(|i| self.perm[other.perm[i]]).collect();
        let signs = (0..n).map(|i| other.signs[i] * self.signs[other.perm[i]]).collect();
        SignedPerm { perm, signs }
    }

    /// Image of a monomial with its sign.
    pub fn act_monomial(&self, m: &Monomial) -> (Monomial, bool) {
        let mut exps = vec![0u16; self.rank()];
        let mut neg = false;
        for (i, &e) in m.exps().iter().enumerate() {
            exps[self.perm[i]] = e;
            if self.signs[i] < 0 && e % 2 == 1 {
                neg = !neg;
            }
        }
        (Monomial::from_exps(exps), neg)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.rank())
            .map(|i| format!("X{}->{}X{}", i + 1, if self.signs[i] < 0 { "-" } else { "" }, self.perm[i] + 1))
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `X_i ↦ sign_i · X_{perm(i)}`; the polynomial's variables must be `X_1, …, X_n`.
pub fn weyl_act(w: &SignedPerm, p: &MultiPoly) -> Result<MultiPoly> {
    let n = w.rank();
    let expected: Vec<String> = (1..=n).map(|i| format!("X{i}")).collect();
    if p.ring().vars() != expected.as_slice() {
        return Err(Error::VariableMismatch(format!(
            "expected variables X1..X{n}, got {:?}",
            p.ring().vars()
        )));
    }
    let spec = p.spec();
    let mut out = p.ring().zero();
    for (m, c) in p.terms() {
        let (m2, neg) = w.act_monomial(m);
        out.add_term(m2, if neg { spec.neg(c) } else { c.clone() });
    }
    Ok(out)
}

pub fn torus_ring(spec: RingSpec, n: usize) -> PolyRing {
    let vars: Vec<String> = (1..=n).map(|i| format!("X{i}")).collect();
    PolyRing::new(spec, &vars)
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    kind: WeylType,
    rank: usize,
    generators: Vec<SignedPerm>,
}

impl WeylGroup {
    /// Adjacent transpositions plus `ε_n` (B, C) or `ε_{n-1,n}` (D).
    pub fn new(kind: WeylType, rank: usize) -> Result<Self> {
        let min = if kind == WeylType::D { 2 } else { 1 };
        if rank < min {
            return Err(Error::InvalidParams(format!("type {kind} needs rank ≥ {min}")));
        }
        let mut generators: Vec<SignedPerm> =
            (0..rank - 1).map(|i| SignedPerm::transposition(rank, i, i + 1)).collect();
        generators.push(match kind {
            WeylType::D => SignedPerm::flip(rank, &[rank - 2, rank - 1]),
            _ => SignedPerm::flip(rank, &[rank - 1]),
        });
        Ok(WeylGroup { kind, rank, generators })
    }

    pub fn kind(&self) -> WeylType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[SignedPerm] {
        &self.generators
    }

    /// `2^n n!` for B and C, `2^{n-1} n!` for D.
    pub fn order(&self) -> BigInt {
        let fact: BigInt = (1..=self.rank).map(BigInt::from).product();
        let flips = if self.kind == WeylType::D { self.rank - 1 } else { self.rank };
        fact << flips
    }

    /// All elements, by closure under the generators.
    pub fn elements(&self) -> Vec<SignedPerm> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([SignedPerm::identity(self.rank)]);
        seen.insert(SignedPerm::identity(self.rank));
        while let Some(w) = queue.pop_front() {
            for g in &self.generators {
                let v = g.compose(&w);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn is_invariant(&self, p: &MultiPoly) -> Result<bool> {
        for g in &self.generators {
            if weyl_act(g, p)? != *p {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Splits `F` into the terms whose exponents all have the same parity and the rest.
pub fn good_bad(f: &MultiPoly) -> (MultiPoly, MultiPoly) {
    let good = |m: &Monomial| {
        let e = m.exps();
        e.iter().all(|x| x % 2 == e.first().map_or(0, |y| y % 2))
    };
    (f.filter_terms(good), f.filter_terms(|m| !good(m)))
}

/// Index sets `S` of the products `x·∏_{k∈S} σ_k(X)`.
fn torsion_index_sets(kind: WeylType, n: usize) -> Vec<Vec<usize>> {
    let top = if kind == WeylType::D { n - 1 } else { n };
    (1u32..(1 << top)).map(|mask| (0..top).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect()).collect()
}

/// Generators of the invariant ring `A[X_1, …, X_n]^W`: `σ_k(X²)` (with
/// `k < n` and `X_1⋯X_n` for type D), and `x·∏_{k∈S} σ_k(X)` for nonempty
/// squarefree `S` and `x` running through generators of `A[2]`.
pub fn invariant_generators(kind: WeylType, n: usize, spec: &RingSpec) -> Result<Vec<MultiPoly>> {
    WeylGroup::new(kind, n)?;
    let ring = torus_ring(spec.clone(), n);
    let xs: Vec<MultiPoly> = (0..n).map(|i| ring.var_at(i)).collect();
    let squares: Vec<MultiPoly> = xs.iter().map(|x| x * x).collect();
    let mut out = Vec::new();
    if kind == WeylType::D {
        out.push(xs.iter().fold(ring.one(), |a, x| &a * x));
        out.extend((1..n).map(|k| elementary_symmetric(&ring, &squares, k)));
    } else {
        out.extend((1..=n).map(|k| elementary_symmetric(&ring, &squares, k)));
    }
    let sigma: Vec<MultiPoly> = (0..=n).map(|k| elementary_symmetric(&ring, &xs, k)).collect();
    for x in spec.two_torsion_generators() {
        for s in torsion_index_sets(kind, n) {
            let prod = s.iter().fold(ring.one(), |a, &k| &a * &sigma[k]);
            out.push(prod.scale(&x));
        }
    }
    Ok(out)
}

/// A degree-bounded module together with its monomial coordinates.
#[derive(Debug, Clone)]
pub struct BoundedSpace {
    pub ring: PolyRing,
    pub monomials: Vec<Monomial>,
    pub space: SplitSpace,
}

impl BoundedSpace {
    pub fn basis(&self) -> Vec<MultiPoly> {
        self.space.to_polys(&self.ring, &self.monomials)
    }

    pub fn index(&self) -> HashMap<Monomial, usize> {
        self.monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()
    }

    /// Equality as submodules of the polynomial ring, whatever the monomial supports.
    pub fn same(&self, other: &BoundedSpace) -> bool {
        if self.monomials == other.monomials {
            return self.space.same(&other.space);
        }
        let mut union: Vec<Monomial> = self.monomials.iter().chain(&other.monomials).cloned().collect();
        union.sort();
        union.dedup();
        let index: HashMap<Monomial, usize> = union.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let lift = |b: &BoundedSpace| {
            let pos: Vec<usize> = b.monomials.iter().map(|m| index[m]).collect();
            b.space.image(
                |v| {
                    let mut out = vec![BigInt::zero(); union.len()];
                    for (x, &j) in v.iter().zip(&pos) {
                        out[j] = x.clone();
                    }
                    out
                },
                union.len(),
            )
        };
        match (lift(self), lift(other)) {
            (Ok(a), Ok(b)) => a.same(&b),
            _ => false,
        }
    }
}

const MONOMIAL_GUARD: usize = 20_000;

fn monomials_up_to(n: usize, d: u32) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    for k in 0..=d {
        out.extend(Monomial::all_of_degree(n, k));
        if out.len() > MONOMIAL_GUARD {
            return Err(Error::GuardExceeded(format!("more than {MONOMIAL_GUARD} monomials")));
        }
    }
    Ok(out)
}

/// Invariants of degree ≤ `d`: for each degree, the kernel of `w - 1` over
/// the monomials of that degree, for every group generator `w`.
pub fn invariant_space_bounded(group: &WeylGroup, spec: &RingSpec, d: u32) -> Result<BoundedSpace> {
    Levels::of(spec)?;
    let n = group.rank();
    let ring = torus_ring(spec.clone(), n);
    let mut parts = Vec::new();
    let mut monomials = Vec::new();
    for k in 0..=d {
        let monos = Monomial::all_of_degree(n, k);
        let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = Vec::new();
        for g in group.generators() {
            // row for w(m): coefficient of w(m) in wF - F
            for (i, m) in monos.iter().enumerate() {
                let (m2, neg) = g.act_monomial(m);
                let j = index[&m2];
                let mut row = vec![BigInt::zero(); monos.len()];
                row[i] += if neg { -1 } else { 1 };
                row[j] -= 1;
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        parts.push(SplitSpace::kernel(spec, &rows, monos.len())?);
        monomials.extend(monos);
        if monomials.len() > MONOMIAL_GUARD {
            return Err(Error::GuardExceeded(format!("more than {MONOMIAL_GUARD} monomials")));
        }
    }
    Ok(BoundedSpace { ring, monomials, space: SplitSpace::direct_sum(spec, &parts)? })
}

/// A product `∏ g_i^{e_i}` of generators with its torsion-factor count.
#[derive(Debug, Clone)]
struct Product {
    exps: Vec<u32>,
    torsion: u32,
    /// The product with each torsion factor's `x` removed.
    stripped: MultiPoly,
}

/// Generators split as `(x-free part, is torsion)`; over `O` a torsion
/// generator `τ·g` is stored as `g`.
fn strip_generators(gens: &[MultiPoly], z: &PolyRing) -> Result<Vec<(MultiPoly, bool)>> {
    gens.iter()
        .map(|g| {
            let spec = g.spec();
            match spec {
                RingSpec::TwoTorsionExt if g.is_tau_multiple() && !g.is_zero() => {
                    if g.terms().any(|(_, c)| c.tau.bits() > 2) {
                        return Err(Error::Unsupported(format!("generator {g} has τ² terms")));
                    }
                    let f2 = z.with_spec(RingSpec::f2());
                    Ok((g.tau_linear_part(&f2).lift_f2(z)?, true))
                }
                RingSpec::TwoTorsionExt if g.terms().any(|(_, c)| c.has_tau()) => {
                    Err(Error::Unsupported(format!("generator {g} mixes integral and τ terms")))
                }
                _ => Ok((g.integer_part(z), false)),
            }
        })
        .collect()
}

/// All products of the (homogeneous) generators of degree exactly `k` with at
/// most `max_torsion` torsion factors.
fn products_of_degree(gens: &[(MultiPoly, bool)], degs: &[u32], k: u32, max_torsion: u32, z: &PolyRing) -> Vec<Product> {
    fn rec(
        gens: &[(MultiPoly, bool)],
        degs: &[u32],
        start: usize,
        left: u32,
        max_torsion: u32,
        cur: &mut Product,
        out: &mut Vec<Product>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..gens.len() {
            if degs[i] == 0 || degs[i] > left {
                continue;
            }
            let t = gens[i].1 as u32;
            if cur.torsion + t > max_torsion {
                continue;
            }
            let saved = cur.clone();
            cur.exps[i] += 1;
            cur.torsion += t;
            cur.stripped = &cur.stripped * &gens[i].0;
            rec(gens, degs, i, left - degs[i], max_torsion, cur, out);
            *cur = saved;
        }
    }
    let mut out = Vec::new();
    let mut cur = Product { exps: vec![0; gens.len()], torsion: 0, stripped: z.one() };
    rec(gens, degs, 0, k, max_torsion, &mut cur, &mut out);
    out
}

fn generator_degrees(gens: &[MultiPoly]) -> Result<Vec<u32>> {
    gens.iter()
        .map(|g| {
            if !g.is_homogeneous() || g.is_zero() {
                Err(Error::InvalidParams(format!("generator {g} is not homogeneous")))
            } else {
                Ok(g.degree().unwrap())
            }
        })
        .collect()
}

/// The degree-≤`d` part of the `A`-algebra generated by `gens` (homogeneous
/// polynomials in `X_1, …, X_n`), as a module on the monomials of degree ≤ `d`.
pub fn generated_space_bounded(gens: &[MultiPoly], ring: &PolyRing, d: u32) -> Result<BoundedSpace> {
    let spec = ring.spec().clone();
    let lv = Levels::of(&spec)?;
    let z = ring.with_spec(RingSpec::z());
    let stripped = strip_generators(gens, &z)?;
    let degs = generator_degrees(gens)?;
    let monomials = monomials_up_to(ring.nvars(), d)?;
    let index: HashMap<Monomial, usize> = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let n = monomials.len();
    let mut zg = Vec::new();
    let mut fg = Vec::new();
    let max_torsion = if lv.integral { 1 } else { u32::MAX };
    for k in 0..=d {
        for p in products_of_degree(&stripped, &degs, k, max_torsion, &z) {
            if p.torsion == 0 && lv.integral {
                zg.push(space::int_coords(&p.stripped, &index, n)?);
            } else {
                let prime = lv.prime.unwrap();
                fg.push(space::fp_coords(&p.stripped, &index, n, prime, None)?);
            }
        }
    }
    Ok(BoundedSpace { ring: ring.clone(), monomials, space: SplitSpace::span(&spec, &zg, &fg, n)? })
}

/// `(invariants, module generated by invariant_generators)` in degree ≤ `d`.
pub fn compare_with_generators(kind: WeylType, n: usize, spec: &RingSpec, d: u32) -> Result<(BoundedSpace, BoundedSpace)> {
    let group = WeylGroup::new(kind, n)?;
    let inv = invariant_space_bounded(&group, spec, d)?;
    let gens = invariant_generators(kind, n, spec)?;
    let generated = generated_space_bounded(&gens, &inv.ring, d)?;
    Ok((inv, generated))
}

/// `f = Σ c · ∏ g_i^{e_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expression {
    pub terms: Vec<(Scalar, Vec<u32>)>,
}

impl Expression {
    pub fn evaluate(&self, gens: &[MultiPoly], ring: &PolyRing) -> MultiPoly {
        let mut out = ring.zero();
        for (c, e) in &self.terms {
            let mut p = ring.constant(c.clone());
            for (g, &k) in gens.iter().zip(e) {
                p = &p * &g.pow(k);
            }
            out = &out + &p;
        }
        out
    }

    pub fn render(&self, spec: &RingSpec, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, e)| {
                let mut s = spec.fmt_scalar(c);
                for (name, &k) in names.iter().zip(e) {
                    match k {
                        0 => {}
                        1 => s += &format!("*{name}"),
                        _ => s += &format!("*{name}^{k}"),
                    }
                }
                s
            })
            .collect();
        parts.join(" + ")
    }
}

/// Solves `f = Σ c_P P` over products `P` of `gens` of degree ≤ `d`, degree by degree.
pub fn subring_membership_bounded(f: &MultiPoly, gens: &[MultiPoly], d: u32) -> Result<Option<Expression>> {
    let ring = f.ring().clone();
    let spec = ring.spec().clone();
    let lv = Levels::of(&spec)?;
    if gens.iter().any(|g| g.ring() != &ring) {
        return Err(Error::RingMismatch(ring.spec().to_string(), "generator ring".into()));
    }
    if f.degree().is_some_and(|k| k > d) {
        return Ok(None);
    }
    let z = ring.with_spec(RingSpec::z());
    let stripped = strip_generators(gens, &z)?;
    let degs = generator_degrees(gens)?;
    let max_level = f.terms().map(|(_, c)| c.tau.bits().saturating_sub(1) as u32).max().unwrap_or(0);
    let mut terms: Vec<(Scalar, Vec<u32>)> = Vec::new();
    for k in 0..=d {
        let fk = f.homogeneous_part(k);
        if fk.is_zero() {
            continue;
        }
        let monos = Monomial::all_of_degree(ring.nvars(), k);
        let index: HashMap<Monomial, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let n = monos.len();
        let max_torsion = if lv.integral { max_level.max(1) } else { u32::MAX };
        let prods = products_of_degree(&stripped, &degs, k, max_torsion, &z);
        if lv.integral {
            let target = space::int_coords(&fk.integer_part(&z), &index, n)?;
            let cols: Vec<&Product> = prods.iter().filter(|p| p.torsion == 0).collect();
            if target.iter().any(|x| !x.is_zero()) {
                let vecs: Vec<Vec<BigInt>> =
                    cols.iter().map(|p| space::int_coords(&p.stripped, &index, n)).collect::<Result<_>>()?;
                let Some(sol) = solve_int(&vecs, &target, n)? else { return Ok(None) };
                for (p, c) in cols.iter().zip(sol) {
                    if !c.is_zero() {
                        terms.push((Scalar::int(c), p.exps.clone()));
                    }
                }
            }
        }
        if let Some(prime) = lv.prime {
            let levels: Vec<u32> = if lv.integral { (1..=max_level).collect() } else { vec![0] };
            for j in levels {
                let target = if lv.integral {
                    space::fp_coords(&fk, &index, n, 2, Some(j as u64))?
                } else {
                    space::fp_coords(&fk, &index, n, prime, None)?
                };
                if target.iter().all(|&x| x == 0) {
                    continue;
                }
                let cols: Vec<&Product> =
                    prods.iter().filter(|p| !lv.integral || p.torsion <= j).collect();
                let vecs: Vec<Vec<u64>> = cols
                    .iter()
                    .map(|p| space::fp_coords(&p.stripped, &index, n, prime, None))
                    .collect::<Result<_>>()?;
                let Some(sol) = fp::solve(&vecs, &target, prime) else { return Ok(None) };
                for (p, c) in cols.iter().zip(sol) {
                    if c == 0 {
                        continue;
                    }
                    let coeff = if lv.integral {
                        // τ^{j - s} times the product (whose torsion factors carry τ^s)
                        if j == p.torsion {
                            Scalar::int(1)
                        } else {
                            spec.tau_pow((j - p.torsion) as u64)
                        }
                    } else {
                        Scalar::int(c)
                    };
                    terms.push((coeff, p.exps.clone()));
                }
            }
        }
    }
    let expr = Expression { terms };
    if expr.evaluate(gens, &ring) != *f {
        return Err(Error::InvalidParams("membership solution failed to reproduce the target".into()));
    }
    Ok(Some(expr))
}

fn solve_int(cols: &[Vec<BigInt>], b: &[BigInt], n: usize) -> Result<Option<Vec<BigInt>>> {
    if cols.is_empty() {
        return Ok(if b.iter().all(Zero::is_zero) { Some(vec![]) } else { None });
    }
    let a = IntMatrix::from_columns(cols, n)?;
    Ok(IntSolver::new(&a).solve(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        for (k, n) in [(WeylType::B, 3), (WeylType::C, 2), (WeylType::D, 3), (WeylType::D, 4), (WeylType::C, 1)] {
            let g = WeylGroup::new(k, n).unwrap();
            let els = g.elements();
            assert_eq!(BigInt::from(els.len()), g.order(), "{k}{n}");
            if k == WeylType::D {
                assert!(els.iter().all(|w| w.num_flips() % 2 == 0));
            }
        }
    }

    #[test]
    fn act_examples() {
        let r = torus_ring(RingSpec::z(), 3);
        let w = SignedPerm::flip(3, &[0, 1]);
        let p = r.parse("X1*X2").unwrap();
        assert_eq!(weyl_act(&w, &p).unwrap(), p);
        let s1 = r.parse("X1+X2+X3").unwrap();
        assert_eq!(weyl_act(&SignedPerm::flip(3, &[0]), &s1).unwrap(), r.parse("-X1+X2+X3").unwrap());
        let bad = PolyRing::new(RingSpec::z(), &["a"]);
        assert!(weyl_act(&w, &bad.parse("a").unwrap()).is_err());
    }

    #[test]
    fn generator_families() {
        let d = invariant_generators(WeylType::D, 3, &RingSpec::z()).unwrap();
        let r = torus_ring(RingSpec::z(), 3);
        assert_eq!(d.len(), 3);
        assert_eq!(d[0], r.parse("X1*X2*X3").unwrap());
        let c1 = invariant_generators(WeylType::C, 1, &RingSpec::o()).unwrap();
        let o = torus_ring(RingSpec::o(), 1);
        assert_eq!(c1, vec![o.parse("X1^2").unwrap(), o.parse("tau*X1").unwrap()]);
        for (k, n) in [(WeylType::B, 2), (WeylType::C, 3), (WeylType::D, 3)] {
            let g = WeylGroup::new(k, n).unwrap();
            for spec in [RingSpec::z(), RingSpec::o(), RingSpec::f2()] {
                for p in invariant_generators(k, n, &spec).unwrap() {
                    assert!(g.is_invariant(&p).unwrap(), "{k}{n} {p}");
                }
            }
        }
    }

    #[test]
    fn bounded_examples() {
        let d2 = invariant_space_bounded(&WeylGroup::new(WeylType::D, 2).unwrap(), &RingSpec::z(), 2).unwrap();
        let r = d2.ring.clone();
        let want: Vec<MultiPoly> = ["1", "X1^2+X2^2", "X1*X2"].iter().map(|s| r.parse(s).unwrap()).collect();
        assert!(generated_space_bounded(&want, &r, 2).unwrap().same(&d2));
        let c2 = WeylGroup::new(WeylType::C, 2).unwrap();
        let z1 = invariant_space_bounded(&c2, &RingSpec::z(), 1).unwrap();
        assert_eq!(z1.basis(), vec![z1.ring.one()]);
        let o1 = invariant_space_bounded(&c2, &RingSpec::o(), 1).unwrap();
        let o = o1.ring.clone();
        let basis = o1.basis();
        assert_eq!(basis.len(), 3);
        assert!(basis.contains(&o.parse("tau*X1+tau*X2").unwrap()));
    }

    #[test]
    fn membership_examples() {
        let r = torus_ring(RingSpec::z(), 2);
        let gens = invariant_generators(WeylType::D, 2, &RingSpec::z()).unwrap();
        let f = r.parse("X1^2*X2^2").unwrap();
        assert!(subring_membership_bounded(&f, &gens, 4).unwrap().is_some());
        let s2 = gens[1].clone();
        let e = subring_membership_bounded(&s2, &gens, 2).unwrap().unwrap();
        assert_eq!(e.terms.len(), 1);
        assert!(subring_membership_bounded(&r.parse("X1").unwrap(), &gens, 3).unwrap().is_none());
    }

    #[test]
    fn good_bad_is_stable() {
        let r = torus_ring(RingSpec::z(), 3);
        let f = r.parse("X1^2*X2^2 + X1*X2*X3 + X1*X2 + X1^3*X2 + 5").unwrap();
        let (g, b) = good_bad(&f);
        assert_eq!(g, r.parse("X1^2*X2^2 + X1*X2*X3 + 5").unwrap());
        assert_eq!(&g + &b, f);
        for w in WeylGroup::new(WeylType::D, 3).unwrap().elements() {
            let wf = weyl_act(&w, &f).unwrap();
            assert_eq!(good_bad(&wf).0, weyl_act(&w, &g).unwrap());
        }
    }
}
