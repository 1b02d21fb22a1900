use std::collections::{BTreeMap, HashMap};

use chevalley::poly::{elementary_symmetric, Monomial, MultiPoly};
use chevalley::ring::RingSpec;
use chevalley::space::SplitSpace;
use chevalley::weyl::{
    compare_with_generators, invariant_generators, invariant_space_bounded, subring_membership_bounded,
    torus_ring, weyl_act, WeylGroup, WeylType,
};
use num_bigint::BigInt;

/// Invariants from orbit sums over the full group: an orbit whose stabilizer
/// contains a sign change only supports 2-torsion coefficients.
fn orbit_oracle(kind: WeylType, n: usize, spec: &RingSpec, d: u32) -> (Vec<Monomial>, SplitSpace) {
    let group = WeylGroup::new(kind, n).unwrap();
    let elements = group.elements();
    let mut monos = Vec::new();
    for k in 0..=d {
        monos.extend(Monomial::all_of_degree(n, k));
    }
    let index: HashMap<Monomial, usize> = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut seen = vec![false; monos.len()];
    let mut z = Vec::new();
    let mut f2 = Vec::new();
    for (i, m) in monos.iter().enumerate() {
        if seen[i] {
            continue;
        }
        let mut signs: BTreeMap<usize, bool> = BTreeMap::new();
        let mut consistent = true;
        for w in &elements {
            let (m2, neg) = w.act_monomial(m);
            let j = index[&m2];
            seen[j] = true;
            if let Some(&prev) = signs.get(&j) {
                consistent &= prev == neg;
            } else {
                signs.insert(j, neg);
            }
        }
        let mut f2v = vec![0u64; monos.len()];
        for &j in signs.keys() {
            f2v[j] = 1;
        }
        f2.push(f2v);
        if consistent {
            let mut v = vec![BigInt::from(0); monos.len()];
            for (&j, &neg) in &signs {
                v[j] = BigInt::from(if neg { -1 } else { 1 });
            }
            z.push(v);
        }
    }
    let f2 = if matches!(spec, RingSpec::TwoTorsionExt) { f2 } else { Vec::new() };
    (monos.clone(), SplitSpace::span(spec, &z, &f2, monos.len()).unwrap())
}

#[test]
fn kernel_matches_orbit_sums() {
    for (kind, n) in [(WeylType::D, 2), (WeylType::D, 3), (WeylType::B, 2), (WeylType::C, 3)] {
        for spec in [RingSpec::z(), RingSpec::o()] {
            let inv = invariant_space_bounded(&WeylGroup::new(kind, n).unwrap(), &spec, 5).unwrap();
            let (monos, oracle) = orbit_oracle(kind, n, &spec, 5);
            assert_eq!(inv.monomials, monos);
            assert!(inv.space.same(&oracle), "{kind}{n} over {spec}");
        }
    }
}

#[test]
fn generators_generate_up_to_degree_six() {
    for (kind, n) in [(WeylType::D, 2), (WeylType::D, 3), (WeylType::B, 2), (WeylType::C, 2), (WeylType::C, 3)] {
        for spec in [RingSpec::z(), RingSpec::o()] {
            let (inv, generated) = compare_with_generators(kind, n, &spec, 6).unwrap();
            assert!(inv.same(&generated), "{kind}{n} over {spec}");
        }
    }
}

#[test]
fn generators_are_invariant_over_f2() {
    let (inv, generated) = compare_with_generators(WeylType::C, 2, &RingSpec::f2(), 4).unwrap();
    assert!(inv.same(&generated));
}

#[test]
fn single_torsion_generators_miss_products() {
    // with only x·σ_k(X) the element τσ_1σ_2 of degree 3 is out of reach
    let o = torus_ring(RingSpec::o(), 2);
    let xs: Vec<MultiPoly> = (0..2).map(|i| o.var_at(i)).collect();
    let sq: Vec<MultiPoly> = xs.iter().map(|x| x * x).collect();
    let tau = RingSpec::o().tau();
    let mut literal: Vec<MultiPoly> = (1..=2).map(|k| elementary_symmetric(&o, &sq, k)).collect();
    literal.extend((1..=2).map(|k| elementary_symmetric(&o, &xs, k).scale(&tau)));
    let target = (&elementary_symmetric(&o, &xs, 1) * &elementary_symmetric(&o, &xs, 2)).scale(&tau);
    let group = WeylGroup::new(WeylType::C, 2).unwrap();
    assert!(group.is_invariant(&target).unwrap());
    assert!(subring_membership_bounded(&target, &literal, 3).unwrap().is_none());
    let full = invariant_generators(WeylType::C, 2, &RingSpec::o()).unwrap();
    let e = subring_membership_bounded(&target, &full, 3).unwrap().unwrap();
    assert_eq!(e.evaluate(&full, &o), target);
}

#[test]
fn squares_of_torsion_products_reduce() {
    // τσ_k(X)² = τσ_k(X²)
    let o = torus_ring(RingSpec::o(), 3);
    let xs: Vec<MultiPoly> = (0..3).map(|i| o.var_at(i)).collect();
    let sq: Vec<MultiPoly> = xs.iter().map(|x| x * x).collect();
    let tau = RingSpec::o().tau();
    for k in 1..=3 {
        let s = elementary_symmetric(&o, &xs, k);
        assert_eq!((&s * &s).scale(&tau), elementary_symmetric(&o, &sq, k).scale(&tau));
    }
}

#[test]
fn sign_flip_breaks_sigma_one() {
    let z = torus_ring(RingSpec::z(), 3);
    let s1 = z.parse("X1+X2+X3").unwrap();
    let g = WeylGroup::new(WeylType::B, 3).unwrap();
    assert!(!g.is_invariant(&s1).unwrap());
    let s2sq = z.parse("X1^2*X2^2+X1^2*X3^2+X2^2*X3^2").unwrap();
    for w in g.elements() {
        assert_eq!(weyl_act(&w, &s2sq).unwrap(), s2sq);
    }
}
