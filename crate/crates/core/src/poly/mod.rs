//! Sparse multivariate polynomials over a [`RingSpec`].
//!
//! A [`PolyRing`] fixes the coefficient ring and an ordered list of variable
//! names; monomials are exponent vectors over that list, ordered
//! graded-lexicographically. Polynomials store only nonzero normalized
//! coefficients, so structural equality is polynomial equality.

mod matrix;
mod parse;

pub use matrix::PolyMatrix;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{format_scalar, RingSpec, Scalar};

/// Exponent vector with its total degree cached; `Ord` is graded-lex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: Vec<u16>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { deg: 0, exps: vec![0; nvars] }
    }

    pub fn from_exps(exps: Vec<u16>) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { deg, exps }
    }

    pub fn var(nvars: usize, i: usize, e: u16) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { deg: e as u32, exps }
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { deg: self.deg + other.deg, exps }
    }

    fn with_exp(&self, i: usize, e: u16) -> Monomial {
        let mut exps = self.exps.clone();
        let old = exps[i];
        exps[i] = e;
        Monomial { deg: self.deg - old as u32 + e as u32, exps }
    }

    /// All monomials of total degree exactly `d` in `nvars` variables.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        fn rec(i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left as u16;
                out.push(Monomial::from_exps(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e as u16;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            return if d == 0 { vec![Monomial::one(0)] } else { vec![] };
        }
        let mut out = Vec::new();
        rec(0, d, &mut vec![0; nvars], &mut out);
        out
    }
}

#[derive(Debug, PartialEq, Eq)]
struct RingInner {
    spec: RingSpec,
    vars: Vec<String>,
}

/// Coefficient ring plus an ordered variable list. Cheap to clone.
#[derive(Debug, Clone)]
pub struct PolyRing(Arc<RingInner>);

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}
impl Eq for PolyRing {}

impl PolyRing {
    pub fn new<S: AsRef<str>>(spec: RingSpec, vars: &[S]) -> Self {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            assert!(!vars[..i].contains(v), "duplicate variable {v}");
        }
        PolyRing(Arc::new(RingInner { spec, vars }))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0.spec
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// The same variables over another coefficient ring.
    pub fn with_spec(&self, spec: RingSpec) -> PolyRing {
        PolyRing::new(spec, self.vars())
    }

    /// This ring with extra variables appended (skipping names already present).
    pub fn extend<S: AsRef<str>>(&self, extra: &[S]) -> PolyRing {
        let mut vars = self.vars().to_vec();
        for v in extra {
            if !vars.iter().any(|w| w == v.as_ref()) {
                vars.push(v.as_ref().to_string());
            }
        }
        PolyRing::new(self.spec().clone(), &vars)
    }

    pub fn zero(&self) -> MultiPoly {
        MultiPoly { ring: self.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(&self, c: Scalar) -> MultiPoly {
        let mut p = self.zero();
        p.add_term(Monomial::one(self.nvars()), c);
        p
    }

    pub fn int(&self, c: impl Into<BigInt>) -> MultiPoly {
        self.constant(Scalar::int(c))
    }

    pub fn one(&self) -> MultiPoly {
        self.int(1)
    }

    /// `τ` as a constant polynomial; only valid over `O`.
    pub fn tau(&self) -> MultiPoly {
        self.constant(self.spec().tau())
    }

    pub fn var(&self, name: &str) -> Result<MultiPoly> {
        let i = self
            .var_index(name)
            .ok_or_else(|| Error::VariableMismatch(format!("unknown variable `{name}`")))?;
        Ok(self.var_at(i))
    }

    pub fn var_at(&self, i: usize) -> MultiPoly {
        let mut p = self.zero();
        p.add_term(Monomial::var(self.nvars(), i, 1), self.spec().one());
        p
    }

    pub fn monomial(&self, m: Monomial, c: Scalar) -> MultiPoly {
        let mut p = self.zero();
        p.add_term(m, c);
        p
    }

    pub fn parse(&self, s: &str) -> Result<MultiPoly> {
        parse::parse_poly(self, s)
    }
}

/// A sparse polynomial; no stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: PolyRing,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn spec(&self) -> &RingSpec {
        self.ring.spec()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        let spec = self.ring.spec().clone();
        let c = spec.normalize(&c);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = spec.normalize(&spec.add(old, &c));
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_ring(&self, other: &MultiPoly) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                format!("{}{:?}", self.spec(), self.ring.vars()),
                format!("{}{:?}", other.spec(), other.ring.vars()),
            ));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        let spec = self.spec();
        if self.terms.len() == 1 || other.terms.len() == 1 {
            let (single, many) =
                if self.terms.len() == 1 { (self, other) } else { (other, self) };
            let (m0, c0) = single.terms.iter().next().unwrap();
            let mut terms = BTreeMap::new();
            for (m, c) in &many.terms {
                let v = spec.normalize(&spec.mul(c0, c));
                if !v.is_zero() {
                    terms.insert(m0.mul(m), v);
                }
            }
            return Ok(MultiPoly { ring: self.ring.clone(), terms });
        }
        let mut acc: HashMap<Monomial, Scalar> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = spec.mul(ca, cb);
                let e = acc.entry(ma.mul(mb)).or_default();
                *e = spec.add(e, &prod);
            }
        }
        let terms = acc
            .into_iter()
            .filter_map(|(m, c)| {
                let c = spec.normalize(&c);
                (!c.is_zero()).then_some((m, c))
            })
            .collect();
        Ok(MultiPoly { ring: self.ring.clone(), terms })
    }

    pub fn neg(&self) -> MultiPoly {
        let spec = self.spec();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), spec.neg(c))).collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        let spec = self.spec();
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, v)| {
                let p = spec.normalize(&spec.mul(v, c));
                (!p.is_zero()).then(|| (m.clone(), p))
            })
            .collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    pub fn scale_int(&self, k: impl Into<BigInt>) -> MultiPoly {
        self.scale(&Scalar::int(k.into()))
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplies by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        let terms = self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    /// Ring-homomorphic substitution into `target`. Unbound variables map to the
    /// same-named variable of `target`.
    pub fn substitute(
        &self,
        target: &PolyRing,
        bindings: &HashMap<String, MultiPoly>,
    ) -> Result<MultiPoly> {
        if target.spec() != self.spec() {
            return Err(Error::RingMismatch(self.spec().to_string(), target.spec().to_string()));
        }
        let mut images = Vec::with_capacity(self.ring.nvars());
        for v in self.ring.vars() {
            let img = match bindings.get(v) {
                Some(p) => {
                    if p.ring != *target {
                        return Err(Error::RingMismatch(
                            format!("binding for {v}"),
                            "target ring".into(),
                        ));
                    }
                    p.clone()
                }
                None => target.var(v)?,
            };
            images.push(img);
        }
        Ok(self.substitute_images(target, &images))
    }

    /// Substitution by position: variable `i` of `self` becomes `images[i]`.
    pub fn substitute_images(&self, target: &PolyRing, images: &[MultiPoly]) -> MultiPoly {
        let mut powers: Vec<Vec<MultiPoly>> = vec![vec![target.one()]; images.len()];
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut term = target.constant(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][e as usize];
                if term.is_zero() {
                    break;
                }
            }
            out = &out + &term;
        }
        out
    }

    /// `[q_0, ..., q_d]` with `self = Σ q_i · var^i` and no `q_i` involving `var`.
    pub fn coeffs_in(&self, var: &str) -> Result<Vec<MultiPoly>> {
        let i = self
            .ring
            .var_index(var)
            .ok_or_else(|| Error::VariableMismatch(format!("unknown variable `{var}`")))?;
        Ok(self.coeffs_in_index(i))
    }

    pub fn coeffs_in_index(&self, i: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(i) as usize;
        let mut out = vec![self.ring.zero(); d + 1];
        for (m, c) in &self.terms {
            let e = m.exp(i) as usize;
            out[e].terms.insert(m.with_exp(i, 0), c.clone());
        }
        out
    }

    /// Splits into torus-weight-homogeneous parts. Every variable with a nonzero
    /// exponent somewhere must have a weight.
    pub fn weight_components(
        &self,
        weights: &HashMap<String, Vec<i64>>,
    ) -> Result<BTreeMap<Vec<i64>, MultiPoly>> {
        let dim = weights.values().next().map(Vec::len).unwrap_or(0);
        let mut by_index: Vec<Option<&Vec<i64>>> = Vec::new();
        for v in self.ring.vars() {
            by_index.push(weights.get(v));
        }
        let mut out: BTreeMap<Vec<i64>, MultiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut w = vec![0i64; dim];
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let wv = by_index[i].ok_or_else(|| {
                    Error::VariableMismatch(format!("no weight for `{}`", self.ring.vars()[i]))
                })?;
                for (acc, x) in w.iter_mut().zip(wv) {
                    *acc += x * e as i64;
                }
            }
            out.entry(w)
                .or_insert_with(|| self.ring.zero())
                .terms
                .insert(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        let terms =
            self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone()));
        MultiPoly { ring: self.ring.clone(), terms: terms.collect() }
    }

    /// Reinterprets the coefficients in another ring on the same variables
    /// (`Z → Z/m`, `Z → O`, `Z/m → Z/k` for `k | m`, `O → F_2` via `τ ↦ 0`).
    pub fn change_ring(&self, target: &PolyRing) -> Result<MultiPoly> {
        if target.vars() != self.ring.vars() {
            return Err(Error::VariableMismatch("change_ring needs identical variables".into()));
        }
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let c = match target.spec() {
                RingSpec::TwoTorsionExt => c.clone(),
                _ => Scalar::int(c.int.clone()),
            };
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    /// Moves the polynomial into a ring containing every variable that occurs.
    pub fn embed(&self, target: &PolyRing) -> Result<MultiPoly> {
        let map: Vec<Option<usize>> = self.ring.vars().iter().map(|v| target.var_index(v)).collect();
        let mut out = target.zero();
        for (m, c) in &self.terms {
            let mut exps = vec![0u16; target.nvars()];
            for (i, &e) in m.exps().iter().enumerate() {
                match map[i] {
                    Some(j) => exps[j] = e,
                    None if e == 0 => {}
                    None => {
                        let v = &self.ring.vars()[i];
                        return Err(Error::VariableMismatch(format!("`{v}` missing in target")));
                    }
                }
            }
            out.add_term(Monomial::from_exps(exps), c.clone());
        }
        if out.spec() != self.spec() {
            return out.change_ring(target);
        }
        Ok(out)
    }

    /// Coefficientwise lift `F_2 → Z` sending each residue `0/1` to `0/1`.
    pub fn lift_f2(&self, target: &PolyRing) -> Result<MultiPoly> {
        let two = BigInt::from(2);
        if self.spec().modulus() != Some(&two) {
            return Err(Error::RingMismatch(self.spec().to_string(), "F2".into()));
        }
        let mut out = target.zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), Scalar::int(c.int.clone()));
        }
        Ok(out)
    }

    /// Exact division by `var^k`; `None` if some term has a smaller exponent.
    pub fn div_var_pow(&self, var: usize, k: u16) -> Option<MultiPoly> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.exp(var) < k {
                return None;
            }
            terms.insert(m.with_exp(var, m.exp(var) - k), c.clone());
        }
        Some(MultiPoly { ring: self.ring.clone(), terms })
    }

    /// Integer content `gcd` of the integer parts of all coefficients.
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(&c.int))
    }

    /// Keeps only terms whose monomials satisfy `keep`.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| keep(m))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    /// Whether every coefficient is a multiple of `τ` (a torsion element of `O`).
    pub fn is_tau_multiple(&self) -> bool {
        self.terms.values().all(|c| c.int.is_zero())
    }

    /// For `O`-polynomials `Σ c_m m`, the `F_2` polynomial of `τ¹`-coefficients.
    pub fn tau_linear_part(&self, f2: &PolyRing) -> MultiPoly {
        let mut out = f2.zero();
        for (m, c) in &self.terms {
            if c.tau.bit(1) {
                out.add_term(m.clone(), Scalar::int(1));
            }
        }
        out
    }

    /// For `O`-polynomials, the integer part `Σ int(c_m) m` over `Z`.
    pub fn integer_part(&self, z: &PolyRing) -> MultiPoly {
        let mut out = z.zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), Scalar::int(c.int.clone()));
        }
        out
    }

    /// `τ · self` for a polynomial over `F_2` or `Z`, landing in `o`.
    pub fn times_tau(&self, o: &PolyRing) -> MultiPoly {
        let mut out = o.zero();
        for (m, c) in &self.terms {
            if num_integer::Integer::is_odd(&c.int) {
                let mut tau = BigUint::zero();
                tau.set_bit(1, true);
                out.add_term(m.clone(), Scalar { int: BigInt::zero(), tau });
            }
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(m, c)| m.degree() == 0 && c.int.is_one() && !c.has_tau())
                .unwrap_or(false)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl std::ops::$tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            /// Panics when the operands live in different polynomial rings.
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$try(rhs).expect("polynomial ring mismatch")
            }
        }
        impl std::ops::$tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$try(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

fn format_monomial(vars: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    /// Terms in decreasing graded-lex order; parseable by [`PolyRing::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let mono = format_monomial(vars, m);
            let (neg, coef) = if c.has_tau() {
                (false, format_scalar(c))
            } else if c.int < BigInt::zero() {
                (true, (-&c.int).to_string())
            } else {
                (false, c.int.to_string())
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            match (mono.is_empty(), coef.as_str()) {
                (true, _) => write!(f, "{coef}")?,
                (false, "1") => write!(f, "{mono}")?,
                (false, _) => write!(f, "{coef}*{mono}")?,
            }
        }
        Ok(())
    }
}

/// Elementary symmetric polynomial `σ_k` of the given polynomials.
pub fn elementary_symmetric(ring: &PolyRing, xs: &[MultiPoly], k: usize) -> MultiPoly {
    // e_j of the first i inputs, updated in place
    let mut e = vec![ring.zero(); k + 1];
    e[0] = ring.one();
    for x in xs {
        for j in (1..=k).rev() {
            let add = &e[j - 1] * x;
            e[j] = &e[j] + &add;
        }
    }
    e[k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sl2_ring(spec: RingSpec) -> PolyRing {
        PolyRing::new(spec, &["a", "b", "c", "t"])
    }

    fn unipotent_bindings(r: &PolyRing) -> HashMap<String, MultiPoly> {
        let mut b = HashMap::new();
        b.insert("a".to_string(), r.parse("a + t*c").unwrap());
        b.insert("b".to_string(), r.parse("b - 2*t*a - t^2*c").unwrap());
        b
    }

    #[test]
    fn det_is_fixed_by_unipotent_substitution() {
        let r = sl2_ring(RingSpec::z());
        let det = r.parse("-a^2 - b*c").unwrap();
        let moved = det.substitute(&r, &unipotent_bindings(&r)).unwrap();
        assert_eq!(moved, det);
    }

    #[test]
    fn substitute_identity_and_single_var() {
        let r = sl2_ring(RingSpec::z());
        let p = r.parse("3*a*b^2 - c + 7").unwrap();
        assert_eq!(p.substitute(&r, &HashMap::new()).unwrap(), p);
        let a = r.var("a").unwrap();
        let moved = a.substitute(&r, &unipotent_bindings(&r)).unwrap();
        assert_eq!(moved, r.parse("a + t*c").unwrap());
    }

    #[test]
    fn substitute_rejects_mismatched_specs() {
        let r = sl2_ring(RingSpec::z());
        let r2 = sl2_ring(RingSpec::f2());
        let p = r.var("a").unwrap();
        assert!(p.substitute(&r2, &HashMap::new()).is_err());
    }

    #[test]
    fn coeffs_in_examples() {
        let r = sl2_ring(RingSpec::z());
        let p = r.parse("a + t*c").unwrap();
        assert_eq!(p.coeffs_in("t").unwrap(), vec![r.var("a").unwrap(), r.var("c").unwrap()]);
        let q = r.parse("b - 2*t*a - t^2*c").unwrap();
        let expect: Vec<_> =
            ["b", "-2*a", "-c"].iter().map(|s| r.parse(s).unwrap()).collect();
        assert_eq!(q.coeffs_in("t").unwrap(), expect);
        let s = r.parse("a*b + 1").unwrap();
        assert_eq!(s.coeffs_in("t").unwrap(), vec![s.clone()]);
    }

    #[test]
    fn weight_components_examples() {
        let r = sl2_ring(RingSpec::z());
        let mut w = HashMap::new();
        w.insert("a".to_string(), vec![0]);
        w.insert("b".to_string(), vec![2]);
        w.insert("c".to_string(), vec![-2]);
        let p = r.parse("a^2 + b*c").unwrap();
        let comps = p.weight_components(&w).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[&vec![0]], p);
        let comps = r.parse("b").unwrap().weight_components(&w).unwrap();
        assert_eq!(comps.keys().collect::<Vec<_>>(), vec![&vec![2]]);
        let comps = r.parse("a + b").unwrap().weight_components(&w).unwrap();
        assert_eq!(comps[&vec![0]], r.var("a").unwrap());
        assert_eq!(comps[&vec![2]], r.var("b").unwrap());
    }

    #[test]
    fn o_coefficients_keep_normal_form() {
        let r = PolyRing::new(RingSpec::o(), &["x"]);
        let p = r.parse("tau*x + 2*tau*x").unwrap();
        assert_eq!(p, r.parse("tau*x").unwrap());
        let q = r.parse("(3+tau)*x + (1+tau)*x").unwrap();
        assert_eq!(q, r.parse("4*x").unwrap());
        assert_eq!(r.parse("2*tau").unwrap(), r.zero());
    }

    #[test]
    fn elementary_symmetric_small() {
        let r = PolyRing::new(RingSpec::z(), &["x", "y", "z"]);
        let xs: Vec<_> = ["x", "y", "z"].iter().map(|v| r.var(v).unwrap()).collect();
        assert_eq!(elementary_symmetric(&r, &xs, 2), r.parse("x*y + x*z + y*z").unwrap());
        assert_eq!(elementary_symmetric(&r, &xs, 0), r.one());
    }

    #[test]
    fn monomials_of_degree_count() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(10, 4).len(), 715);
    }

    fn small_poly(r: PolyRing) -> impl Strategy<Value = MultiPoly> {
        let n = r.nvars();
        proptest::collection::vec(
            (proptest::collection::vec(0u16..3, n), -4i64..5, 0u64..4),
            0..5,
        )
        .prop_map(move |terms| {
            let mut p = r.zero();
            for (e, c, t) in terms {
                let mut s = Scalar::int(c);
                if *r.spec() == RingSpec::TwoTorsionExt {
                    s.tau = BigUint::from(t << 1);
                }
                p.add_term(Monomial::from_exps(e), s);
            }
            p
        })
    }

    fn specs() -> impl Strategy<Value = RingSpec> {
        prop_oneof![Just(RingSpec::z()), Just(RingSpec::zmod(4)), Just(RingSpec::o())]
    }

    proptest! {
        #[test]
        fn substitution_is_a_ring_homomorphism(
            (r, p, q, x, y) in specs().prop_flat_map(|s| {
                let r = PolyRing::new(s, &["x", "y"]);
                (Just(r.clone()), small_poly(r.clone()), small_poly(r.clone()),
                 small_poly(r.clone()), small_poly(r))
            })
        ) {
            let mut b = HashMap::new();
            b.insert("x".to_string(), x);
            b.insert("y".to_string(), y);
            let s = |f: &MultiPoly| f.substitute(&r, &b).unwrap();
            prop_assert_eq!(s(&(&p * &q)), &s(&p) * &s(&q));
            prop_assert_eq!(s(&(&p + &q)), &s(&p) + &s(&q));
        }

        #[test]
        fn coeffs_in_reconstructs(
            (r, p) in specs().prop_flat_map(|s| {
                let r = PolyRing::new(s, &["x", "t"]);
                (Just(r.clone()), small_poly(r))
            })
        ) {
            let t = r.var("t").unwrap();
            let cs = p.coeffs_in("t").unwrap();
            let mut acc = r.zero();
            for (i, c) in cs.iter().enumerate() {
                prop_assert_eq!(c.degree_in(1), 0);
                acc = &acc + &(c * &t.pow(i as u32));
            }
            prop_assert_eq!(acc, p);
        }

        #[test]
        fn weight_components_sum_back(
            (r, p) in specs().prop_flat_map(|s| {
                let r = PolyRing::new(s, &["x", "y"]);
                (Just(r.clone()), small_poly(r))
            })
        ) {
            let mut w = HashMap::new();
            w.insert("x".to_string(), vec![1, 0]);
            w.insert("y".to_string(), vec![-1, 2]);
            let comps = p.weight_components(&w).unwrap();
            let mut acc = r.zero();
            for (wt, c) in &comps {
                // each component has a single weight
                let again = c.weight_components(&w).unwrap();
                prop_assert_eq!(again.len(), 1);
                prop_assert!(again.contains_key(wt));
                acc = &acc + c;
            }
            prop_assert_eq!(acc, p);
        }

        #[test]
        fn print_parse_round_trip(
            (r, p) in specs().prop_flat_map(|s| {
                let r = PolyRing::new(s, &["x", "y1", "alpha"]);
                (Just(r.clone()), small_poly(r))
            })
        ) {
            let printed = p.to_string();
            prop_assert_eq!(r.parse(&printed).unwrap(), p);
        }
    }
}
