//! Simple reduced root systems in Bourbaki's realizations, their root and
//! weight lattices, the scan for roots that are multiples of weights, and the
//! search for torus points on which no root differential vanishes.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{self, IntMatrix, Index};

pub type QVec = Vec<BigRational>;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn half(n: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(2))
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn unit(dim: usize, i: usize, c: i64) -> QVec {
    let mut v = vec![q(0); dim];
    v[i] = q(c);
    v
}

fn add(a: &[BigRational], b: &[BigRational]) -> QVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn neg(a: &[BigRational]) -> QVec {
    a.iter().map(|x| -x).collect()
}

fn scale(a: &[BigRational], c: &BigRational) -> QVec {
    a.iter().map(|x| x * c).collect()
}

/// `Σ c_i ε_i` from integer coefficients.
fn eps(dim: usize, coeffs: &[(usize, i64)]) -> QVec {
    let mut v = vec![q(0); dim];
    for &(i, c) in coeffs {
        v[i] += q(c);
    }
    v
}

pub fn format_qvec(v: &[BigRational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl RootType {
    pub fn from_char(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => RootType::A,
            'B' => RootType::B,
            'C' => RootType::C,
            'D' => RootType::D,
            'E' => RootType::E,
            'F' => RootType::F,
            'G' => RootType::G,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            RootType::A => 'A',
            RootType::B => 'B',
            RootType::C => 'C',
            RootType::D => 'D',
            RootType::E => 'E',
            RootType::F => 'F',
            RootType::G => 'G',
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub kind: RootType,
    pub rank: usize,
    pub dim: usize,
    pub roots: Vec<QVec>,
    pub simple: Vec<QVec>,
    pub fundamental_weights: Vec<QVec>,
    pub long: Vec<bool>,
}

fn e8_roots() -> Vec<QVec> {
    let mut roots = Vec::new();
    for i in 0..8 {
        for j in i + 1..8 {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                roots.push(eps(8, &[(i, a), (j, b)]));
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            roots.push((0..8).map(|i| half(if mask >> i & 1 == 1 { -1 } else { 1 })).collect());
        }
    }
    roots
}

fn e8_simple() -> Vec<QVec> {
    let mut a1: QVec = vec![half(-1); 8];
    a1[0] = half(1);
    a1[7] = half(1);
    let mut s = vec![a1, eps(8, &[(0, 1), (1, 1)])];
    for i in 0..6 {
        s.push(eps(8, &[(i + 1, 1), (i, -1)]));
    }
    s
}

/// Builds the root system of the given type and rank.
pub fn build_root_system(kind: char, rank: usize) -> Result<RootSystem> {
    let t = RootType::from_char(kind).ok_or(Error::InvalidRootSystem(kind, rank))?;
    let valid = match t {
        RootType::A => rank >= 1,
        RootType::B | RootType::C => rank >= 2,
        RootType::D => rank >= 3,
        RootType::E => (6..=8).contains(&rank),
        RootType::F => rank == 4,
        RootType::G => rank == 2,
    };
    if !valid {
        return Err(Error::InvalidRootSystem(t.letter(), rank));
    }
    let n = rank;
    let (dim, roots, simple): (usize, Vec<QVec>, Vec<QVec>) = match t {
        RootType::A => {
            let d = n + 1;
            let mut r = Vec::new();
            for i in 0..d {
                for j in 0..d {
                    if i != j {
                        r.push(eps(d, &[(i, 1), (j, -1)]));
                    }
                }
            }
            let s = (0..n).map(|i| eps(d, &[(i, 1), (i + 1, -1)])).collect();
            (d, r, s)
        }
        RootType::B | RootType::C | RootType::D => {
            let mut r = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        r.push(eps(n, &[(i, a), (j, b)]));
                    }
                }
                match t {
                    RootType::B => {
                        r.push(unit(n, i, 1));
                        r.push(unit(n, i, -1));
                    }
                    RootType::C => {
                        r.push(unit(n, i, 2));
                        r.push(unit(n, i, -2));
                    }
                    _ => {}
                }
            }
            let mut s: Vec<QVec> = (0..n - 1).map(|i| eps(n, &[(i, 1), (i + 1, -1)])).collect();
            s.push(match t {
                RootType::B => unit(n, n - 1, 1),
                RootType::C => unit(n, n - 1, 2),
                _ => eps(n, &[(n - 2, 1), (n - 1, 1)]),
            });
            (n, r, s)
        }
        RootType::E => {
            let all = e8_roots();
            let simple8 = e8_simple();
            let mut constraints = Vec::new();
            if n <= 7 {
                constraints.push(eps(8, &[(6, 1), (7, 1)]));
            }
            if n == 6 {
                constraints.push(eps(8, &[(5, 1), (6, -1)]));
            }
            let r = all
                .into_iter()
                .filter(|v| constraints.iter().all(|c| dot(v, c).is_zero()))
                .collect();
            (8, r, simple8[..n].to_vec())
        }
        RootType::F => {
            let mut r = Vec::new();
            for i in 0..4 {
                r.push(unit(4, i, 1));
                r.push(unit(4, i, -1));
                for j in i + 1..4 {
                    for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        r.push(eps(4, &[(i, a), (j, b)]));
                    }
                }
            }
            for mask in 0u32..16 {
                r.push((0..4).map(|i| half(if mask >> i & 1 == 1 { -1 } else { 1 })).collect());
            }
            let s = vec![
                eps(4, &[(1, 1), (2, -1)]),
                eps(4, &[(2, 1), (3, -1)]),
                unit(4, 3, 1),
                vec![half(1), half(-1), half(-1), half(-1)],
            ];
            (4, r, s)
        }
        RootType::G => {
            let base = [
                eps(3, &[(0, 1), (1, -1)]),
                eps(3, &[(0, 1), (2, -1)]),
                eps(3, &[(1, 1), (2, -1)]),
                eps(3, &[(0, 2), (1, -1), (2, -1)]),
                eps(3, &[(1, 2), (0, -1), (2, -1)]),
                eps(3, &[(2, 2), (0, -1), (1, -1)]),
            ];
            let mut r = Vec::new();
            for v in base {
                r.push(neg(&v));
                r.push(v);
            }
            let s = vec![eps(3, &[(0, 1), (1, -1)]), eps(3, &[(0, -2), (1, 1), (2, 1)])];
            (3, r, s)
        }
    };
    let max_norm = roots.iter().map(|r| dot(r, r)).max().unwrap();
    let long = roots.iter().map(|r| dot(r, r) == max_norm).collect();
    let mut rs = RootSystem { kind: t, rank, dim, roots, simple, fundamental_weights: Vec::new(), long };
    rs.fundamental_weights = rs.compute_fundamental_weights();
    Ok(rs)
}

/// `⟨β^∨, α⟩ = 2(β, α)/(β, β)`.
pub fn pairing(beta: &[BigRational], alpha: &[BigRational]) -> Result<BigRational> {
    let bb = dot(beta, beta);
    if bb.is_zero() {
        return Err(Error::ZeroRoot);
    }
    Ok(q(2) * dot(beta, alpha) / bb)
}

/// Inverse of a square rational matrix by Gauss-Jordan elimination.
fn invert(m: &[Vec<BigRational>]) -> Option<Vec<Vec<BigRational>>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { q(1) } else { q(0) }));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !a[i][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot = a[c].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Scales rational column vectors by a common denominator into an integer matrix.
fn integral_columns(vectors: &[&[BigRational]], denom: &BigInt) -> IntMatrix {
    let rows = vectors.first().map(|v| v.len()).unwrap_or(0);
    let cols: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| v.iter().map(|x| (x * BigRational::from_integer(denom.clone())).to_integer()).collect())
        .collect();
    IntMatrix::from_columns(&cols, rows).expect("consistent dimensions")
}

fn common_denominator<'a>(vs: impl IntoIterator<Item = &'a QVec>) -> BigInt {
    vs.into_iter().flatten().fold(BigInt::one(), |l, x| l.lcm(x.denom()))
}

/// A root `α`, a weight `λ` and an integer `l ≥ 2` with `α = l·λ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanHit {
    pub root_index: usize,
    pub root: QVec,
    pub weight: QVec,
    pub l: u32,
    pub long: bool,
}

/// Outcome of the search for a torus point avoiding all root hyperplanes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorusPoint {
    /// Found over `F_{p^k}`; `x` is the curve parameter, as coefficients of
    /// a polynomial in the field generator.
    Found { degree: u32, x: Vec<u64> },
    /// These roots are `p`-multiples of lattice vectors, so their
    /// differentials vanish identically.
    Vanishing(Vec<usize>),
}

impl RootSystem {
    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind, self.rank)
    }

    /// `A_ij = ⟨α_i^∨, α_j⟩`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple
            .iter()
            .map(|ai| {
                self.simple
                    .iter()
                    .map(|aj| pairing(ai, aj).unwrap().to_integer().to_i64().unwrap())
                    .collect()
            })
            .collect()
    }

    fn compute_fundamental_weights(&self) -> Vec<QVec> {
        // ω_i = Σ_k M_ik α_k with M = (A^T)^{-1}
        let a = self.cartan_matrix();
        let at: Vec<Vec<BigRational>> =
            (0..self.rank).map(|i| (0..self.rank).map(|j| q(a[j][i])).collect()).collect();
        let m = invert(&at).expect("Cartan matrix is invertible");
        m.iter()
            .map(|row| {
                let mut w = vec![q(0); self.dim];
                for (k, c) in row.iter().enumerate() {
                    w = add(&w, &scale(&self.simple[k], c));
                }
                w
            })
            .collect()
    }

    /// Whether every coroot pairs integrally with `v`.
    pub fn pairs_integrally(&self, v: &[BigRational]) -> bool {
        self.roots.iter().all(|b| pairing(b, v).map(|x| x.is_integer()).unwrap_or(false))
    }

    /// Exact membership in the lattice spanned by the given basis.
    fn in_lattice(basis: &[QVec], v: &[BigRational]) -> bool {
        let denom = common_denominator(basis.iter().chain(std::iter::once(&v.to_vec())));
        let refs: Vec<&[BigRational]> = basis.iter().map(|b| b.as_slice()).collect();
        let m = integral_columns(&refs, &denom);
        let b: Vec<BigInt> =
            v.iter().map(|x| (x * BigRational::from_integer(denom.clone())).to_integer()).collect();
        lattice::integer_solve(&m, &b).ok().flatten().is_some()
    }

    pub fn in_weight_lattice(&self, v: &[BigRational]) -> bool {
        Self::in_lattice(&self.fundamental_weights, v)
    }

    pub fn in_root_lattice(&self, v: &[BigRational]) -> bool {
        Self::in_lattice(&self.simple, v)
    }

    /// `[P(R) : Q(R)]` computed as a lattice index.
    pub fn connection_index(&self) -> Result<BigInt> {
        let denom = common_denominator(self.fundamental_weights.iter().chain(&self.simple));
        let p: Vec<&[BigRational]> = self.fundamental_weights.iter().map(|v| v.as_slice()).collect();
        let qq: Vec<&[BigRational]> = self.simple.iter().map(|v| v.as_slice()).collect();
        match lattice::lattice_index(&integral_columns(&qq, &denom), &integral_columns(&p, &denom))? {
            Index::Finite(n) => Ok(n),
            Index::Infinite => Err(Error::InfiniteIndex),
        }
    }

    /// Every `(α, λ, l)` with `α` a root, `l ≥ 2` and `α = l·λ` for `λ ∈ P(R)`.
    ///
    /// Candidates `l` range over `2..=max_β |⟨β^∨, α⟩|`; a candidate survives
    /// the divisibility filter on all pairings and is then decided by an
    /// exact lattice membership test.
    pub fn scan_root_multiples_of_weights(&self) -> Vec<ScanHit> {
        let mut hits = Vec::new();
        for (idx, alpha) in self.roots.iter().enumerate() {
            let pairings: Vec<BigInt> = self
                .roots
                .iter()
                .map(|b| pairing(b, alpha).unwrap().to_integer())
                .collect();
            let max = pairings.iter().map(|x| x.abs()).max().unwrap().to_u32().unwrap();
            for l in 2..=max {
                let lb = BigInt::from(l);
                if !pairings.iter().all(|x| x.is_multiple_of(&lb)) {
                    continue;
                }
                let weight = scale(alpha, &BigRational::new(BigInt::one(), lb));
                if self.in_weight_lattice(&weight) {
                    hits.push(ScanHit {
                        root_index: idx,
                        root: alpha.clone(),
                        weight,
                        l,
                        long: self.long[idx],
                    });
                }
            }
        }
        hits
    }

    /// Lattices `Q(R) ⊆ M ⊆ P(R)`, one basis (rational vectors) per subgroup of `P/Q`.
    pub fn intermediate_lattices(&self) -> Vec<Vec<QVec>> {
        let denom = common_denominator(self.fundamental_weights.iter().chain(&self.simple));
        let to_int = |v: &QVec| -> Vec<BigInt> {
            v.iter().map(|x| (x * BigRational::from_integer(denom.clone())).to_integer()).collect()
        };
        let q_rows: Vec<Vec<BigInt>> = self.simple.iter().map(to_int).collect();
        // coset representatives: small combinations of fundamental weights
        let idx = self.connection_index().unwrap().to_usize().unwrap();
        let mut reps: Vec<Vec<BigInt>> = Vec::new();
        let qbasis = lattice::EchelonBasis::new(&q_rows);
        let mut seen: Vec<Vec<BigInt>> = Vec::new();
        for w in &self.fundamental_weights {
            let wi = to_int(w);
            let mut cur = wi.clone();
            for _ in 1..=idx {
                let fresh = seen.iter().all(|s| {
                    let diff: Vec<BigInt> = s.iter().zip(&cur).map(|(a, b)| a - b).collect();
                    !qbasis.contains(&diff)
                });
                if fresh {
                    seen.push(cur.clone());
                    reps.push(cur.clone());
                }
                cur = cur.iter().zip(&wi).map(|(a, b)| a + b).collect();
            }
        }
        let mut found: BTreeSet<Vec<Vec<BigInt>>> = BTreeSet::new();
        let mut out = Vec::new();
        let mut consider = |gens: Vec<&Vec<BigInt>>| {
            let mut rows = q_rows.clone();
            rows.extend(gens.into_iter().cloned());
            let h = lattice::hermite_basis(&rows);
            if found.insert(h.clone()) {
                out.push(
                    h.iter()
                        .map(|r| {
                            r.iter()
                                .map(|x| BigRational::new(x.clone(), denom.clone()))
                                .collect::<QVec>()
                        })
                        .collect(),
                );
            }
        };
        consider(vec![]);
        for i in 0..reps.len() {
            consider(vec![&reps[i]]);
            for j in i + 1..reps.len() {
                consider(vec![&reps[i], &reps[j]]);
            }
        }
        out
    }

    /// Searches `t ∈ 𝔱 ⊗ F_{p^k}`, for the torus lattice dual to `M`, with
    /// `dα(t) ≠ 0` for all roots. Root `α` acts on `𝔱 ⊗ k` through its
    /// coordinates in a basis of `M`, reduced mod `p`.
    ///
    /// Points are taken on the curve `t = (1, x, x², …)`, so `dα(t)` is a
    /// polynomial in `x` of degree `< rank`; the field is grown until it has
    /// more elements than the product of these polynomials has roots.
    pub fn torus_point_avoiding_roots(&self, m_basis: &[QVec], p: u64) -> Result<TorusPoint> {
        let denom = common_denominator(m_basis.iter().chain(&self.roots));
        let refs: Vec<&[BigRational]> = m_basis.iter().map(|v| v.as_slice()).collect();
        let solver = lattice::IntSolver::new(&integral_columns(&refs, &denom));
        let pb = BigInt::from(p);
        let mut coords = Vec::new();
        let mut vanishing = Vec::new();
        for (i, r) in self.roots.iter().enumerate() {
            let b: Vec<BigInt> =
                r.iter().map(|x| (x * BigRational::from_integer(denom.clone())).to_integer()).collect();
            let c = solver.solve(&b).ok_or_else(|| {
                Error::InvalidParams(format!("root {} is not in the lattice M", format_qvec(r)))
            })?;
            let red: Vec<u64> = c.iter().map(|x| x.mod_floor(&pb).to_u64().unwrap()).collect();
            if red.iter().all(|&x| x == 0) {
                vanishing.push(i);
            }
            coords.push(red);
        }
        if !vanishing.is_empty() {
            return Ok(TorusPoint::Vanishing(vanishing));
        }
        let bound = (coords.len() as u64) * (self.rank as u64).saturating_sub(1);
        let mut k = 1u32;
        while p.checked_pow(k).map_or(false, |q| q <= bound) {
            k += 1;
        }
        let field = Gf::new(p, k);
        for x in field.elements() {
            let powers: Vec<Vec<u64>> = std::iter::successors(Some(field.one()), |prev| {
                Some(field.mul(prev, &x))
            })
            .take(self.rank)
            .collect();
            let ok = coords.iter().all(|c| {
                let mut acc = field.zero();
                for (cj, pw) in c.iter().zip(&powers) {
                    acc = field.add(&acc, &field.scale(pw, *cj));
                }
                !field.is_zero(&acc)
            });
            if ok {
                return Ok(TorusPoint::Found { degree: k, x });
            }
        }
        unreachable!("field larger than the number of bad points")
    }

    /// Basis of the dual lattice `{x : (x, m) ∈ Z for all m ∈ M}`; requires
    /// the lattice to span the ambient space.
    pub fn dual_lattice(basis: &[QVec]) -> Result<Vec<QVec>> {
        let n = basis.len();
        if basis.iter().any(|b| b.len() != n) {
            return Err(Error::Dimension("dual lattice needs a full-rank basis".into()));
        }
        let inv = invert(basis).ok_or(Error::SingularPresentation)?;
        // columns of inv pair to δ_ij with the basis rows
        Ok((0..n).map(|j| (0..n).map(|i| inv[i][j].clone()).collect()).collect())
    }
}

/// `F_{p^k}` as `F_p[y]/(f)` with `f` the first monic irreducible of degree `k`.
struct Gf {
    p: u64,
    k: usize,
    modulus: Vec<u64>,
}

impl Gf {
    fn new(p: u64, k: u32) -> Self {
        let k = k as usize;
        if k == 1 {
            return Gf { p, k, modulus: vec![0, 1] };
        }
        let mut coeffs = vec![0u64; k];
        loop {
            let mut f = coeffs.clone();
            f.push(1);
            if Self::irreducible(&f, p) {
                return Gf { p, k, modulus: f };
            }
            let mut i = 0;
            loop {
                coeffs[i] += 1;
                if coeffs[i] < p {
                    break;
                }
                coeffs[i] = 0;
                i += 1;
            }
        }
    }

    fn irreducible(f: &[u64], p: u64) -> bool {
        // no monic factor of degree ≤ deg/2
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            let total = p.pow(d as u32);
            for idx in 0..total {
                let mut g: Vec<u64> = (0..d).map(|i| idx / p.pow(i as u32) % p).collect();
                g.push(1);
                if poly_rem(f, &g, p).iter().all(|&x| x == 0) {
                    return false;
                }
            }
        }
        true
    }

    fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let total = self.p.pow(self.k as u32);
        (0..total).map(move |idx| (0..self.k).map(|i| idx / self.p.pow(i as u32) % self.p).collect())
    }

    fn zero(&self) -> Vec<u64> {
        vec![0; self.k]
    }

    fn one(&self) -> Vec<u64> {
        let mut v = self.zero();
        v[0] = 1;
        v
    }

    fn is_zero(&self, a: &[u64]) -> bool {
        a.iter().all(|&x| x == 0)
    }

    fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    fn scale(&self, a: &[u64], c: u64) -> Vec<u64> {
        a.iter().map(|x| x * c % self.p).collect()
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut prod = vec![0u64; 2 * self.k];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut r = poly_rem(&prod, &self.modulus, self.p);
        r.resize(self.k, 0);
        r
    }
}

/// Remainder of `a` by monic `m` over `F_p`.
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - lead * c % p) % p;
            }
        }
        r.pop();
    }
    r
}

/// All simple types up to the given rank.
pub fn all_types_up_to(max_rank: usize) -> Vec<(char, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(('A', n));
    }
    for n in 2..=max_rank {
        out.push(('B', n));
    }
    for n in 2..=max_rank {
        out.push(('C', n));
    }
    for n in 3..=max_rank {
        out.push(('D', n));
    }
    for n in 6..=max_rank.min(8) {
        out.push(('E', n));
    }
    if max_rank >= 4 {
        out.push(('F', 4));
    }
    if max_rank >= 2 {
        out.push(('G', 2));
    }
    out
}
