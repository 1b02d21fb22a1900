//! The twelve reproducible claims, each runnable on its own or as a suite.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::adjinv::{adjoint_invariant_space_bounded, chevalley_check, universal_element};
use crate::error::Result;
use crate::lattice::{cokernel_invariants, pontryagin_dual_invariants, IntMatrix};
use crate::lie::{DForm, LieLattice};
use crate::poly::{elementary_symmetric, MultiPoly};
use crate::ring::RingSpec;
use crate::rootsys::{all_types_up_to, build_root_system, RootType};
use crate::weyl::{compare_with_generators, generated_space_bounded, torus_ring, WeylType};

pub const CLAIMS: [&str; 12] = [
    "root multiples of weights",
    "derived indices",
    "centers of D_n lattices mod 2",
    "centers along the sl_4 quotient chain",
    "Pontryagin duality of cokernels",
    "pfaffian identities",
    "torus restrictions",
    "SL_2 invariants",
    "PSL_2 invariants",
    "Weyl invariant generators",
    "Chevalley restriction",
    "discriminant on the torus",
];

#[derive(Debug, Clone, Serialize)]
pub struct ClaimReport {
    pub id: usize,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<String>,
    pub millis: u128,
}

struct Outcome {
    detail: String,
    witness: Option<String>,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Outcome { detail: detail.into(), witness: None }
    }

    fn fail(detail: impl Into<String>, witness: impl Into<String>) -> Self {
        Outcome { detail: detail.into(), witness: Some(witness.into()) }
    }
}

pub fn run_claim(id: usize, seed: u64) -> ClaimReport {
    let start = Instant::now();
    let res = std::panic::catch_unwind(|| match id {
        1 => root_multiples(),
        2 => derived_indices(),
        3 => d_centers(),
        4 => quotient_chain(),
        5 => pontryagin(seed),
        6 => pfaffian_identities(),
        7 => torus_restrictions(),
        8 => sl2_invariants(),
        9 => psl2_invariants(),
        10 => weyl_generators(),
        11 => chevalley(),
        12 => discriminant(),
        _ => Ok(Outcome::fail("unknown claim", format!("no claim {id}"))),
    });
    let out = match res {
        Ok(r) => r.unwrap_or_else(|e| Outcome::fail("error", e.to_string())),
        Err(_) => Outcome::fail("panic", "the computation panicked"),
    };
    ClaimReport {
        id,
        title: CLAIMS.get(id.wrapping_sub(1)).copied().unwrap_or("unknown").to_string(),
        passed: out.witness.is_none(),
        detail: out.detail,
        witness: out.witness,
        millis: start.elapsed().as_millis(),
    }
}

/// All claims, run concurrently and reported in id order.
pub fn run_all(seed: u64) -> Vec<ClaimReport> {
    let mut out: Vec<ClaimReport> = std::thread::scope(|s| {
        let handles: Vec<_> = (1..=CLAIMS.len()).map(|id| s.spawn(move || run_claim(id, seed))).collect();
        handles.into_iter().map(|h| h.join().expect("claim thread panicked")).collect()
    });
    out.sort_by_key(|r| r.id);
    out
}

fn root_multiples() -> Result<Outcome> {
    let mut total = 0;
    for (kind, rank) in all_types_up_to(8) {
        let rs = build_root_system(kind, rank)?;
        let hits = rs.scan_root_multiples_of_weights();
        // B_2 = C_2: its long roots are the C_2 long roots
        let expected: Vec<usize> = match (rs.kind, rank) {
            (RootType::A, 1) => (0..rs.num_roots()).collect(),
            (RootType::C, _) | (RootType::B, 2) => (0..rs.num_roots()).filter(|&i| rs.long[i]).collect(),
            _ => Vec::new(),
        };
        let got: Vec<usize> = hits.iter().map(|h| h.root_index).collect();
        if got != expected || hits.iter().any(|h| h.l != 2) {
            return Ok(Outcome::fail(
                format!("{} hits", hits.len()),
                format!("{}: hits at roots {got:?}, expected {expected:?}", rs.label()),
            ));
        }
        total += hits.len();
    }
    Ok(Outcome::pass(format!("{total} hits, all at A_1 or long roots of C_n, l = 2")))
}

fn derived_indices() -> Result<Outcome> {
    let cases = [
        (LieLattice::sp(1)?, 4),
        (LieLattice::sp(2)?, 16),
        (LieLattice::sp(3)?, 64),
        (LieLattice::sl(3)?, 1),
        (LieLattice::sl(4)?, 1),
        (LieLattice::so_even(4, DForm::Sc)?, 1),
    ];
    let mut parts = Vec::new();
    for (l, want) in cases {
        let got = l.derived_index()?;
        if got != BigInt::from(want) {
            return Ok(Outcome::fail("index mismatch", format!("[{0} : [{0},{0}]] = {got}, expected {want}", l.label())));
        }
        parts.push(format!("{}:{got}", l.label()));
    }
    Ok(Outcome::pass(parts.join(" ")))
}

/// Center dimensions mod 2 for (spin, so, pspin, pso) of `D_n`; `None` when
/// the lattice does not exist.
pub fn d_center_row(n: usize) -> Result<Vec<Option<usize>>> {
    [DForm::Sc, DForm::Z, DForm::Ps, DForm::Ad]
        .iter()
        .map(|&f| match LieLattice::so_even(n, f) {
            Ok(l) => Ok(Some(l.center_mod_p(2)?.len())),
            Err(_) => Ok(None),
        })
        .collect()
}

fn d_centers() -> Result<Outcome> {
    let mut parts = Vec::new();
    for n in 3..=6 {
        let row = d_center_row(n)?;
        let want = if n % 2 == 0 { vec![Some(2), Some(1), Some(1), Some(0)] } else { vec![Some(1), Some(1), None, Some(0)] };
        if row != want {
            return Ok(Outcome::fail("center table mismatch", format!("D_{n}: {row:?}, expected {want:?}")));
        }
        parts.push(format!("D{n}:{row:?}"));
    }
    Ok(Outcome::pass(parts.join(" ")))
}

fn quotient_chain() -> Result<Outcome> {
    let mut dims = Vec::new();
    for m in [1, 2, 4] {
        dims.push(LieLattice::sl_mod_mu(4, m)?.center_mod_p(2)?.len());
    }
    if dims != [1, 1, 0] {
        return Ok(Outcome::fail("chain mismatch", format!("dims {dims:?}, expected [1, 1, 0]")));
    }
    Ok(Outcome::pass(format!("S(Z^4|1,2,4) centers {dims:?}")))
}

/// A random square matrix of the given size with entries in `[-5, 5]` and nonzero determinant.
pub fn random_injective(rng: &mut ChaCha8Rng, size: usize) -> IntMatrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..size).map(|_| (0..size).map(|_| rng.gen_range(-5..=5)).collect()).collect();
        let m = IntMatrix::from_i64(&rows).expect("square");
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

fn pontryagin(seed: u64) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..200 {
        let size = rng.gen_range(1..=5);
        let phi = random_injective(&mut rng, size);
        let a = cokernel_invariants(&phi)?;
        let b = pontryagin_dual_invariants(&phi)?;
        if a != b {
            return Ok(Outcome::fail("invariant factors differ", format!("trial {trial}: {:?} vs {b:?} for {:?}", a, phi.to_rows())));
        }
    }
    Ok(Outcome::pass(format!("200 matrices, seed {seed}")))
}

fn orthogonal_cases() -> Result<Vec<(LieLattice, bool, usize)>> {
    let mut out = Vec::new();
    for n in 2..=3 {
        out.push((LieLattice::so_even(n, DForm::Z)?, true, n));
        out.push((LieLattice::so_even(n, DForm::Sc)?, true, n));
    }
    for n in 1..=3 {
        out.push((LieLattice::so_odd(n)?, false, n));
    }
    Ok(out)
}

fn pfaffian_identities() -> Result<Outcome> {
    for (l, even, n) in orthogonal_cases()? {
        let u = universal_element(&l, &RingSpec::z())?;
        let c = u.char_poly_coeffs()?;
        if let Some(k) = (0..c.len()).step_by(2).find(|&k| !c[k].is_zero()) {
            return Ok(Outcome::fail("odd coefficient", format!("{}: c_{} = {}", l.label(), k + 1, c[k])));
        }
        if even {
            let pf = u.pfaffian()?;
            let det = u.scaled.det()?;
            let sq = (&pf * &pf).scale_int(if n % 2 == 0 { 1 } else { -1 });
            if sq != det {
                return Ok(Outcome::fail("det ≠ (-1)^n pf²", format!("{}: det - (-1)^n pf² = {}", l.label(), &det - &sq)));
            }
        }
        let pi = u.pfaffian_char_poly_mod2()?;
        let rt = pi.ring().clone();
        let t = rt.var("t")?;
        let size = c.len();
        let mut chi = t.pow(size as u32);
        for (k, ck) in c.iter().enumerate() {
            chi = &chi + &(&ck.embed(&rt)? * &t.pow((size - 1 - k) as u32));
        }
        let sq = &pi * &pi;
        let expected = if even { sq } else { &t * &sq };
        if chi != expected {
            return Ok(Outcome::fail("χ_F2 mismatch", format!("{}: χ - π² = {}", l.label(), &chi - &expected)));
        }
        let o = l.coordinate_ring(RingSpec::o());
        for (i, p) in u.lift_pfaffian_coeffs()?.iter().enumerate() {
            let p = p.embed(&o)?;
            let lhs = (&p * &p).times_tau(&o);
            let rhs = c[2 * i + 1].embed(&o)?.times_tau(&o);
            if lhs != rhs {
                return Ok(Outcome::fail("τπ² ≠ τc", format!("{}: i = {}: {}", l.label(), i + 1, &lhs - &rhs)));
            }
        }
    }
    Ok(Outcome::pass("so_4, so_6, spin_4, spin_6, so_3, so_5, so_7"))
}

fn torus_restrictions() -> Result<Outcome> {
    // the torus coordinates X_k are the ε-coordinates on so and sp
    let mut cases: Vec<_> = orthogonal_cases()?
        .into_iter()
        .filter(|(l, _, _)| !matches!(l.label(), crate::lie::LieLabel::SoEven(_, DForm::Sc)))
        .collect();
    for n in 1..=3 {
        cases.push((LieLattice::sp(n)?, false, n));
    }
    for (l, even, n) in cases {
        let u = universal_element(&l, &RingSpec::z())?;
        let tz = torus_ring(RingSpec::z(), n);
        let to = torus_ring(RingSpec::o(), n);
        let xs: Vec<MultiPoly> = (1..=n).map(|k| tz.var(&format!("X{k}"))).collect::<Result<_>>()?;
        let squares: Vec<MultiPoly> = xs.iter().map(|x| x * x).collect();
        let c = u.char_poly_coeffs()?;
        for k in 1..=n {
            let got = l.restrict_to_torus(&c[2 * k - 1])?.embed(&tz)?;
            let want = elementary_symmetric(&tz, &squares, k).scale_int(if k % 2 == 0 { 1 } else { -1 });
            if got != want {
                return Ok(Outcome::fail("c|_t mismatch", format!("{}: c_{}|_t = {got}", l.label(), 2 * k)));
            }
        }
        if !matches!(l.label(), crate::lie::LieLabel::Sp(_)) {
            let o = l.coordinate_ring(RingSpec::o());
            for (k, p) in u.lift_pfaffian_coeffs()?.iter().enumerate() {
                let got = l.restrict_to_torus(&p.embed(&o)?.times_tau(&o))?.embed(&to)?;
                let want = elementary_symmetric(&tz, &xs, k + 1).embed(&to)?.times_tau(&to);
                if got != want {
                    return Ok(Outcome::fail("τπ|_t mismatch", format!("{}: τπ_{}|_t = {got}", l.label(), k + 1)));
                }
            }
        }
        if even {
            let got = l.restrict_to_torus(&u.pfaffian()?)?.embed(&tz)?;
            let want = elementary_symmetric(&tz, &xs, n);
            if got != want {
                return Ok(Outcome::fail("pf|_t mismatch", format!("{}: pf|_t = {got}", l.label())));
            }
        }
    }
    Ok(Outcome::pass("so_3 … so_7 and sp_2, sp_4, sp_6"))
}

fn sl2_invariants() -> Result<Outcome> {
    let l = LieLattice::sl(2)?;
    for spec in [RingSpec::z(), RingSpec::f2(), RingSpec::zmod(3), RingSpec::o()] {
        let space = adjoint_invariant_space_bounded(&l, &spec, 6)?;
        let det = space.ring.parse("-a^2-b*c")?;
        let gen = generated_space_bounded(&[det], &space.ring, 6)?;
        if !space.same(&gen) {
            return Ok(Outcome::fail("space mismatch", format!("over {spec}: ranks {:?}", space.space.ranks())));
        }
    }
    Ok(Outcome::pass("span{1, det, det², det³} over Z, F2, F3, O"))
}

fn psl2_invariants() -> Result<Outcome> {
    let l = LieLattice::sl_mod_mu(2, 2)?;
    let z = adjoint_invariant_space_bounded(&l, &RingSpec::z(), 4)?;
    let gz = generated_space_bounded(&[z.ring.parse("-alpha^2-4*b*c")?], &z.ring, 4)?;
    if !z.same(&gz) {
        return Ok(Outcome::fail("Z mismatch", format!("ranks {:?}", z.space.ranks())));
    }
    let o = adjoint_invariant_space_bounded(&l, &RingSpec::o(), 4)?;
    let gens = [o.ring.parse("-alpha^2-4*b*c")?, o.ring.parse("tau*alpha")?];
    let go = generated_space_bounded(&gens, &o.ring, 4)?;
    if !o.same(&go) {
        return Ok(Outcome::fail("O mismatch", format!("ranks {:?} vs {:?}", o.space.ranks(), go.space.ranks())));
    }
    Ok(Outcome::pass(format!("O ranks {:?}: A[4det] + τα·A[4det] through degree 4", o.space.ranks())))
}

fn weyl_generators() -> Result<Outcome> {
    let cases = [(WeylType::D, 2), (WeylType::D, 3), (WeylType::B, 2), (WeylType::C, 2), (WeylType::C, 3)];
    for (kind, n) in cases {
        for spec in [RingSpec::z(), RingSpec::o()] {
            let (inv, gen) = compare_with_generators(kind, n, &spec, 6)?;
            if !inv.same(&gen) {
                return Ok(Outcome::fail("generation mismatch", format!("{kind:?}{n} over {spec}")));
            }
        }
    }
    Ok(Outcome::pass("D2 D3 B2 C2 C3 over Z and O, degree ≤ 6"))
}

fn chevalley() -> Result<Outcome> {
    let cases = [
        (LieLattice::sl(2)?, None),
        (LieLattice::sp(2)?, Some(false)),
        (LieLattice::so_even(2, DForm::Z)?, Some(true)),
        (LieLattice::so_odd(2)?, Some(true)),
    ];
    let mut parts = Vec::new();
    for (l, onto_over_o) in cases {
        for spec in [RingSpec::z(), RingSpec::o()] {
            let r = chevalley_check(&l, &spec, 4)?;
            if !r.injective {
                return Ok(Outcome::fail("not injective", format!("{} over {spec}", l.label())));
            }
            let want = match (spec.kind(), onto_over_o) {
                (crate::ring::RingKind::TwoTorsionExt, Some(b)) => Some(b),
                (crate::ring::RingKind::TwoTorsionExt, None) => None,
                _ => Some(true),
            };
            if let Some(w) = want {
                if r.surjective != w {
                    let m = r.missing.map(|m| m.to_string()).unwrap_or_default();
                    return Ok(Outcome::fail("surjectivity mismatch", format!("{} over {spec}: missing {m}", l.label())));
                }
            }
            if !r.surjective {
                parts.push(format!("{} over {spec} misses {}", l.label(), r.missing.unwrap()));
            }
        }
    }
    Ok(Outcome::pass(parts.join("; ")))
}

fn discriminant() -> Result<Outcome> {
    for l in [LieLattice::sl(2)?, LieLattice::sp(2)?, LieLattice::so_even(2, DForm::Z)?] {
        let (_, delta) = l.delta_poly()?;
        let restricted = l.restrict_to_torus(&delta)?;
        let ring = restricted.ring().clone();
        let weights = l.weights()?;
        let mut prod = ring.one();
        for rs in l.weight_decomposition()?.root_spaces {
            // dα(Σ X_k h_k) = Σ α(h_k) X_k
            let mut form = ring.zero();
            for (k, &x) in weights[rs.index].iter().enumerate() {
                form = &form + &ring.var_at(k).scale_int(x);
            }
            prod = &prod * &form;
        }
        if restricted != prod && restricted != prod.neg() {
            return Ok(Outcome::fail("δ|_t ≠ ±∏ dα", format!("{}: {restricted}", l.label())));
        }
    }
    Ok(Outcome::pass("sl_2, sp_4, so_4"))
}
