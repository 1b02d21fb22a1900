//! Concrete commutative base rings: `Z`, `Z/m` and `O = Z[τ]/(2τ)`.
//!
//! Every ring element is stored as a [`Scalar`], a pair `(a, P)` where `a` is an
//! integer and `P` is a polynomial in `τ` with `F_2` coefficients and no constant
//! term. For `Z` and `Z/m` the `τ`-part is always zero. In `O` the relation
//! `2τ = 0` makes `τ·F_2[τ]` the full torsion part, so `O = Z ⊕ τF_2[τ]` and the
//! pair is a unique normal form.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// The shape of a base ring, used by [`make_ring`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingKind {
    Integers,
    IntegersMod,
    TwoTorsionExt,
}

/// A supported base ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    IntegersMod(BigInt),
    /// `O = Z[τ]/(2τ)`, universal among rings with a 2-torsion element.
    TwoTorsionExt,
}

/// Normal-form value of a ring element; meaningful only together with a [`RingSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Scalar {
    pub int: BigInt,
    /// Bit `k` is the coefficient of `τ^k`; bit 0 is always clear.
    pub tau: BigUint,
}

impl Scalar {
    pub fn int(v: impl Into<BigInt>) -> Self {
        Scalar { int: v.into(), tau: BigUint::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.int.is_zero() && self.tau.is_zero()
    }

    pub fn has_tau(&self) -> bool {
        !self.tau.is_zero()
    }
}

/// Builds a ring from its kind. The modulus must be given exactly for `IntegersMod`.
pub fn make_ring(kind: RingKind, modulus: Option<BigInt>) -> Result<RingSpec> {
    match (kind, modulus) {
        (RingKind::Integers, None) => Ok(RingSpec::Integers),
        (RingKind::TwoTorsionExt, None) => Ok(RingSpec::TwoTorsionExt),
        (RingKind::IntegersMod, Some(m)) => {
            if m < BigInt::from(2) {
                Err(Error::InvalidModulus(m.to_string()))
            } else {
                Ok(RingSpec::IntegersMod(m))
            }
        }
        (RingKind::IntegersMod, None) => Err(Error::InvalidModulus("missing".into())),
        (_, Some(m)) => Err(Error::InvalidModulus(format!("{m} given for a ring without modulus"))),
    }
}

fn clmul(a: &BigUint, b: &BigUint) -> BigUint {
    let (small, large) = if a.bits() <= b.bits() { (a, b) } else { (b, a) };
    let mut acc = BigUint::zero();
    for k in 0..small.bits() {
        if small.bit(k) {
            acc ^= large << k;
        }
    }
    acc
}

impl RingSpec {
    pub fn z() -> Self {
        RingSpec::Integers
    }

    pub fn zmod(m: u64) -> Self {
        make_ring(RingKind::IntegersMod, Some(BigInt::from(m))).expect("modulus >= 2")
    }

    pub fn f2() -> Self {
        Self::zmod(2)
    }

    pub fn o() -> Self {
        RingSpec::TwoTorsionExt
    }

    pub fn kind(&self) -> RingKind {
        match self {
            RingSpec::Integers => RingKind::Integers,
            RingSpec::IntegersMod(_) => RingKind::IntegersMod,
            RingSpec::TwoTorsionExt => RingKind::TwoTorsionExt,
        }
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        match self {
            RingSpec::IntegersMod(m) => Some(m),
            _ => None,
        }
    }

    /// The additive characteristic of the integer part (0 for `Z` and `O`).
    pub fn characteristic(&self) -> BigInt {
        self.modulus().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn normalize(&self, s: &Scalar) -> Scalar {
        match self {
            RingSpec::Integers => Scalar::int(s.int.clone()),
            RingSpec::IntegersMod(m) => Scalar::int(s.int.mod_floor(m)),
            RingSpec::TwoTorsionExt => {
                let mut tau = s.tau.clone();
                if tau.bit(0) {
                    tau.set_bit(0, false);
                }
                Scalar { int: s.int.clone(), tau }
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::default()
    }

    pub fn one(&self) -> Scalar {
        self.from_int(BigInt::one())
    }

    pub fn from_int(&self, v: impl Into<BigInt>) -> Scalar {
        self.normalize(&Scalar::int(v))
    }

    /// `τ^k` in `O`. Panics for other rings.
    pub fn tau_pow(&self, k: u64) -> Scalar {
        assert!(matches!(self, RingSpec::TwoTorsionExt), "τ only exists in O");
        assert!(k >= 1);
        let mut tau = BigUint::zero();
        tau.set_bit(k, true);
        Scalar { int: BigInt::zero(), tau }
    }

    pub fn tau(&self) -> Scalar {
        self.tau_pow(1)
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        let s = Scalar { int: &a.int + &b.int, tau: &a.tau ^ &b.tau };
        match self {
            RingSpec::IntegersMod(_) => self.normalize(&s),
            _ => s,
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        // -τ = τ since 2τ = 0
        let s = Scalar { int: -&a.int, tau: a.tau.clone() };
        match self {
            RingSpec::IntegersMod(_) => self.normalize(&s),
            _ => s,
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            RingSpec::Integers => Scalar::int(&a.int * &b.int),
            RingSpec::IntegersMod(m) => Scalar::int((&a.int * &b.int).mod_floor(m)),
            RingSpec::TwoTorsionExt => {
                let mut tau = clmul(&a.tau, &b.tau);
                if a.int.is_odd() {
                    tau ^= &b.tau;
                }
                if b.int.is_odd() {
                    tau ^= &a.tau;
                }
                Scalar { int: &a.int * &b.int, tau }
            }
        }
    }

    pub fn mul_int(&self, a: &Scalar, k: &BigInt) -> Scalar {
        self.mul(a, &self.from_int(k.clone()))
    }

    pub fn pow(&self, a: &Scalar, mut e: u32) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        self.normalize(a).is_zero()
    }

    /// Whether `2a = 0`.
    pub fn is_two_torsion(&self, a: &Scalar) -> bool {
        self.is_zero(&self.add(a, a))
    }

    /// A finite generating set of the ideal `A[2] = {a : 2a = 0}`.
    pub fn two_torsion_generators(&self) -> Vec<Scalar> {
        match self {
            RingSpec::Integers => vec![],
            RingSpec::IntegersMod(m) => {
                if m.is_even() {
                    vec![Scalar::int(m / 2)]
                } else {
                    vec![]
                }
            }
            RingSpec::TwoTorsionExt => vec![self.tau()],
        }
    }

    /// Reduction `Z → A` applied to an integer.
    pub fn reduce(&self, v: &BigInt) -> Scalar {
        self.from_int(v.clone())
    }

    pub fn elem(&self, s: Scalar) -> RingElem {
        RingElem { spec: self.clone(), value: self.normalize(&s) }
    }

    pub fn elem_int(&self, v: impl Into<BigInt>) -> RingElem {
        self.elem(Scalar::int(v))
    }

    pub fn fmt_scalar(&self, s: &Scalar) -> String {
        format_scalar(s)
    }
}

/// Prints a scalar in the literal syntax also accepted by the polynomial parser.
pub(crate) fn format_scalar(s: &Scalar) -> String {
    if !s.has_tau() {
        return s.int.to_string();
    }
    let mut parts = Vec::new();
    if !s.int.is_zero() {
        parts.push(s.int.to_string());
    }
    for k in 1..s.tau.bits() {
        if s.tau.bit(k) {
            parts.push(if k == 1 { "tau".to_string() } else { format!("tau^{k}") });
        }
    }
    format!("({})", parts.join("+"))
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::IntegersMod(m) => write!(f, "Z/{m}"),
            RingSpec::TwoTorsionExt => write!(f, "O"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Accepts `Z`, `Z/m`, `F<p>` (alias of `Z/p`) and `O` (alias of `Z[t]/(2t)`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "Z" => return Ok(RingSpec::Integers),
            "O" | "Z[t]/(2t)" | "Z[tau]/(2tau)" => return Ok(RingSpec::TwoTorsionExt),
            _ => {}
        }
        let modulus = if let Some(m) = t.strip_prefix("Z/") {
            m
        } else if let Some(p) = t.strip_prefix('F') {
            p
        } else {
            return Err(Error::UnknownRing(s.to_string()));
        };
        let m: BigInt = modulus.parse().map_err(|_| Error::UnknownRing(s.to_string()))?;
        make_ring(RingKind::IntegersMod, Some(m))
    }
}

/// A ring element together with the ring it lives in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingElem {
    pub spec: RingSpec,
    pub value: Scalar,
}

impl RingElem {
    fn check(&self, other: &RingElem) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::RingMismatch(self.spec.to_string(), other.spec.to_string()));
        }
        Ok(())
    }

    pub fn normalize(&self) -> RingElem {
        self.spec.elem(self.value.clone())
    }

    pub fn try_add(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(RingElem { spec: self.spec.clone(), value: self.spec.add(&self.value, &other.value) })
    }

    pub fn try_mul(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(RingElem { spec: self.spec.clone(), value: self.spec.mul(&self.value, &other.value) })
    }

    pub fn try_sub(&self, other: &RingElem) -> Result<RingElem> {
        self.check(other)?;
        Ok(RingElem { spec: self.spec.clone(), value: self.spec.sub(&self.value, &other.value) })
    }

    pub fn is_zero(&self) -> bool {
        self.spec.is_zero(&self.value)
    }
}

impl std::ops::Add for &RingElem {
    type Output = RingElem;
    /// Panics on mixed rings; use [`RingElem::try_add`] to get an error instead.
    fn add(self, rhs: &RingElem) -> RingElem {
        self.try_add(rhs).unwrap()
    }
}

impl std::ops::Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        self.try_mul(rhs).unwrap()
    }
}

impl std::ops::Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        self.try_sub(rhs).unwrap()
    }
}

impl std::ops::Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem { spec: self.spec.clone(), value: self.spec.neg(&self.value) }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_scalar(&self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn make_ring_cases() {
        assert_eq!(make_ring(RingKind::Integers, None).unwrap(), RingSpec::Integers);
        assert_eq!(
            make_ring(RingKind::IntegersMod, Some(2.into())).unwrap(),
            RingSpec::IntegersMod(2.into())
        );
        assert_eq!(make_ring(RingKind::TwoTorsionExt, None).unwrap(), RingSpec::TwoTorsionExt);
        assert!(make_ring(RingKind::IntegersMod, Some(1.into())).is_err());
        assert!(make_ring(RingKind::IntegersMod, Some((-3).into())).is_err());
    }

    #[test]
    fn literals() {
        assert_eq!("Z".parse::<RingSpec>().unwrap(), RingSpec::Integers);
        assert_eq!("Z/4".parse::<RingSpec>().unwrap(), RingSpec::zmod(4));
        assert_eq!("F2".parse::<RingSpec>().unwrap(), RingSpec::zmod(2));
        assert_eq!("O".parse::<RingSpec>().unwrap(), RingSpec::TwoTorsionExt);
        assert!("Q".parse::<RingSpec>().is_err());
        assert!("Z/1".parse::<RingSpec>().is_err());
    }

    #[test]
    fn two_torsion_generators_by_brute_force() {
        assert!(RingSpec::z().two_torsion_generators().is_empty());
        for m in 2u64..=12 {
            let r = RingSpec::zmod(m);
            let gens = r.two_torsion_generators();
            let torsion: Vec<u64> = (0..m).filter(|a| (2 * a) % m == 0).collect();
            for g in &gens {
                assert!(r.is_two_torsion(g));
            }
            // every torsion element is a multiple of some generator
            for a in torsion {
                let hit = (0..m).any(|c| {
                    gens.iter().any(|g| r.mul(g, &r.from_int(c)) == r.from_int(a))
                }) || a == 0;
                assert!(hit, "{a} mod {m}");
            }
        }
        assert_eq!(RingSpec::zmod(4).two_torsion_generators(), vec![Scalar::int(2)]);
        let o = RingSpec::o();
        assert_eq!(o.two_torsion_generators(), vec![o.tau()]);
    }

    #[test]
    fn normalize_examples() {
        let z4 = RingSpec::zmod(4);
        assert_eq!(z4.normalize(&Scalar::int(5)), Scalar::int(1));
        let o = RingSpec::o();
        let two_tau = o.mul(&o.from_int(2), &o.tau());
        assert!(two_tau.is_zero());
        let a = o.add(&o.from_int(3), &o.tau());
        let b = o.add(&o.from_int(1), &o.tau());
        assert_eq!(o.add(&a, &b), o.from_int(4));
        // τ² is not zero in O
        assert!(!o.mul(&o.tau(), &o.tau()).is_zero());
        assert_eq!(o.mul(&o.tau(), &o.tau()), o.tau_pow(2));
    }

    #[test]
    fn cross_ring_is_an_error() {
        let a = RingSpec::z().elem_int(1);
        let b = RingSpec::f2().elem_int(1);
        assert!(matches!(a.try_add(&b), Err(Error::RingMismatch(_, _))));
    }

    fn arb_scalar(spec: RingSpec) -> impl Strategy<Value = Scalar> {
        (-20i64..20, 0u64..16).prop_map(move |(i, t)| {
            let mut s = Scalar::int(i);
            if spec == RingSpec::TwoTorsionExt {
                s.tau = BigUint::from(t << 1);
            }
            spec.normalize(&s)
        })
    }

    fn specs() -> impl Strategy<Value = RingSpec> {
        prop_oneof![
            Just(RingSpec::z()),
            Just(RingSpec::zmod(2)),
            Just(RingSpec::zmod(4)),
            Just(RingSpec::zmod(6)),
            Just(RingSpec::o()),
        ]
    }

    proptest! {
        #[test]
        fn ring_axioms(
            (spec, a, b, c) in specs().prop_flat_map(|s| {
                (Just(s.clone()), arb_scalar(s.clone()), arb_scalar(s.clone()), arb_scalar(s))
            })
        ) {
            let n = |x: &Scalar| spec.normalize(x);
            prop_assert_eq!(n(&n(&a)), n(&a));
            prop_assert_eq!(n(&spec.add(&spec.add(&a, &b), &c)), n(&spec.add(&a, &spec.add(&b, &c))));
            prop_assert_eq!(n(&spec.mul(&spec.mul(&a, &b), &c)), n(&spec.mul(&a, &spec.mul(&b, &c))));
            prop_assert_eq!(n(&spec.mul(&a, &b)), n(&spec.mul(&b, &a)));
            prop_assert_eq!(
                n(&spec.mul(&a, &spec.add(&b, &c))),
                n(&spec.add(&spec.mul(&a, &b), &spec.mul(&a, &c)))
            );
            prop_assert!(spec.is_zero(&spec.add(&a, &spec.neg(&a))));
        }

        #[test]
        fn o_torsion_is_tau_multiple(i in -10i64..10, t in 0u64..64) {
            let o = RingSpec::o();
            let s = o.normalize(&Scalar { int: i.into(), tau: BigUint::from(t << 1) });
            if o.is_two_torsion(&s) {
                // the integer part must vanish, so s = τ·(τ-part shifted down)
                prop_assert!(s.int.is_zero());
                let q = Scalar { int: BigInt::from(t & 1), tau: BigUint::from(t & !1) };
                prop_assert_eq!(o.mul(&o.tau(), &o.normalize(&q)), s);
            }
        }
    }
}
