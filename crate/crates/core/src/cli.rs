//! Command-line driver. Every subcommand maps to one library call and
//! renders either a plain table or a versioned JSON record.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::adjinv::{self, universal_element, InvarianceWitness};
use crate::error::{Error, Result};
use crate::lattice::{cokernel_invariants, lattice_index, pontryagin_dual_invariants, smith_normal_form, IntMatrix};
use crate::lie::{LieLabel, LieLattice};
use crate::poly::{elementary_symmetric, MultiPoly};
use crate::ring::RingSpec;
use crate::rootsys::{all_types_up_to, build_root_system, format_qvec, RootType};
use crate::verify;
use crate::weyl::{self, torus_ring, WeylGroup, WeylType};

pub const SCHEMA: &str = "chevalley-cli/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "chevalley", about = "Integral Chevalley Lie algebras and their invariants")]
pub struct Cli {
    /// Base ring: Z, Z/m, Fp or O (= Z[tau]/(2 tau)).
    #[arg(long, global = true, default_value = "Z")]
    pub ring: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 2024)]
    pub seed: u64,
    #[arg(long, global = true)]
    pub max_degree: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root systems and the root-multiple scan.
    #[command(subcommand)]
    Rootsys(RootsysCmd),
    /// Integral Lie lattices.
    #[command(subcommand)]
    Lie(LieCmd),
    /// Integer lattices and torsion cokernels.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Weyl-group invariants on the torus.
    #[command(subcommand)]
    Weyl(WeylCmd),
    /// Adjoint invariants of a Lie lattice.
    #[command(subcommand)]
    Adjinv(AdjinvCmd),
    /// Runs the reproducible claims.
    Verify {
        #[arg(long)]
        all: bool,
        #[arg(long)]
        claim: Vec<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum RootsysCmd {
    /// Roots that are integer multiples (≥ 2) of weights.
    Scan {
        #[arg(long = "type")]
        kind: char,
        #[arg(long)]
        rank: usize,
    },
    /// The scan over every type up to the given rank.
    LemmaTable {
        #[arg(long, default_value_t = 8)]
        max_rank: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct AlgebraArgs {
    /// gl, sl, psl, sl_mod_mu, sp, psp, so, so_even, so_odd, pso, spin, pspin.
    #[arg(long)]
    pub algebra: String,
    /// Matrix size.
    #[arg(long)]
    pub param: usize,
    /// The m of sl_mod_mu.
    #[arg(long)]
    pub m: Option<usize>,
}

impl AlgebraArgs {
    fn lattice(&self) -> Result<LieLattice> {
        LieLattice::from_name(&self.algebra, self.param, self.m)
    }
}

#[derive(Debug, Subcommand)]
pub enum LieCmd {
    Center {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, default_value_t = 2)]
        prime: u64,
    },
    DerivedIndex {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Center dimensions mod p of spin, so, pspin, pso for D_3 … D_max.
    TableDCenters {
        #[arg(long, default_value_t = 6)]
        max: usize,
        #[arg(long, default_value_t = 2)]
        prime: u64,
    },
    WeightDecomp {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    Delta {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum LatticeCmd {
    /// Smith normal form of a JSON integer matrix.
    Snf {
        #[arg(long)]
        matrix: String,
    },
    /// Index of the lattice spanned by the rows of `sub` in that of `sup`.
    Index {
        #[arg(long)]
        sub: String,
        #[arg(long)]
        sup: String,
    },
    /// Compares the invariant factors of coker(φ) and coker(φ^T).
    Pontryagin {
        #[arg(long)]
        matrix: Option<String>,
        /// Number of random matrices when no matrix is given.
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum WeylCmd {
    Invariants {
        #[arg(long = "type")]
        kind: char,
        #[arg(long)]
        rank: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum AdjinvCmd {
    /// Invariance of the standard invariants, or of `--poly`.
    Verify {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        poly: Option<String>,
    },
    Invariants {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    Chevalley {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    Pfaffian {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
}

/// `status` is `None` for purely informational commands.
struct Report {
    status: Option<bool>,
    result: Value,
    witness: Option<String>,
    table: String,
}

impl Report {
    fn info(result: Value, table: String) -> Self {
        Report { status: None, result, witness: None, table }
    }
}

/// Parses and runs one command line (without the program name). Exit codes:
/// 0 success, 1 failed verification, 2 usage or input error.
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    let args = std::iter::once("chevalley").chain(argv.iter().map(|s| s.as_ref()));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let command = argv.iter().map(|s| s.as_ref()).collect::<Vec<_>>().join(" ");
    match dispatch(&cli) {
        Ok(rep) => {
            let code = if rep.status == Some(false) { 1 } else { 0 };
            let out = match cli.format {
                Format::Table => {
                    let mut t = rep.table;
                    if let Some(w) = &rep.witness {
                        t.push_str(&format!("witness: {w}\n"));
                    }
                    t
                }
                Format::Json => {
                    let status = match rep.status {
                        Some(true) => "pass",
                        Some(false) => "fail",
                        None => "ok",
                    };
                    let v = json!({
                        "schema": SCHEMA,
                        "command": command,
                        "status": status,
                        "result": rep.result,
                        "witness": rep.witness,
                    });
                    serde_json::to_string_pretty(&v).unwrap() + "\n"
                }
            };
            (code, out)
        }
        Err(e) => {
            let msg = match cli.format {
                Format::Table => format!("error: {e}\n"),
                Format::Json => {
                    serde_json::to_string_pretty(&json!({"schema": SCHEMA, "command": command, "status": "error", "error": e.to_string()}))
                        .unwrap()
                        + "\n"
                }
            };
            (2, msg)
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let spec: RingSpec = cli.ring.parse()?;
    match &cli.command {
        Command::Rootsys(RootsysCmd::Scan { kind, rank }) => scan(*kind, *rank),
        Command::Rootsys(RootsysCmd::LemmaTable { max_rank }) => lemma_table(*max_rank),
        Command::Lie(cmd) => lie(cmd),
        Command::Lattice(cmd) => lattice(cmd, cli.seed),
        Command::Weyl(WeylCmd::Invariants { kind, rank }) => {
            weyl_invariants(*kind, *rank, &spec, cli.max_degree.unwrap_or(4))
        }
        Command::Adjinv(cmd) => adjoint(cmd, &spec, cli.max_degree),
        Command::Verify { all, claim } => run_verify(*all, claim, cli.seed),
    }
}

fn scan(kind: char, rank: usize) -> Result<Report> {
    let rs = build_root_system(kind.to_ascii_uppercase(), rank)?;
    let hits = rs.scan_root_multiples_of_weights();
    let mut table = format!("{}: {} roots, {} hits\n", rs.label(), rs.num_roots(), hits.len());
    let mut rows = Vec::new();
    for h in &hits {
        let (r, w) = (format_qvec(&h.root), format_qvec(&h.weight));
        table.push_str(&format!("  {r} = {} * {w}{}\n", h.l, if h.long { "  (long)" } else { "" }));
        rows.push(json!({"root": r, "weight": w, "l": h.l, "long": h.long}));
    }
    Ok(Report::info(json!({"type": rs.label(), "hits": rows}), table))
}

fn lemma_table(max_rank: usize) -> Result<Report> {
    let mut table = format!("{:<6}{:>7}{:>7}  {}\n", "type", "roots", "hits", "classes");
    let mut rows = Vec::new();
    let mut ok = true;
    let mut witness = None;
    for (kind, rank) in all_types_up_to(max_rank) {
        let rs = build_root_system(kind, rank)?;
        let hits = rs.scan_root_multiples_of_weights();
        let long = hits.iter().filter(|h| h.long).count();
        let expected_long = match (rs.kind, rank) {
            (RootType::C, _) | (RootType::B, 2) => rs.long.iter().filter(|&&b| b).count(),
            _ => 0,
        };
        let good = match (rs.kind, rank) {
            (RootType::A, 1) => hits.len() == rs.num_roots(),
            _ => long == expected_long && hits.len() == long,
        } && hits.iter().all(|h| h.l == 2);
        if !good && witness.is_none() {
            witness = Some(format!("{}: {} hits", rs.label(), hits.len()));
        }
        ok &= good;
        let classes = if hits.is_empty() {
            "-".to_string()
        } else if long == hits.len() && rank > 1 {
            "long roots, l=2".to_string()
        } else {
            "all roots, l=2".to_string()
        };
        table.push_str(&format!("{:<6}{:>7}{:>7}  {}\n", rs.label(), rs.num_roots(), hits.len(), classes));
        rows.push(json!({"type": rs.label(), "roots": rs.num_roots(), "hits": hits.len(), "long_hits": long}));
    }
    table.push_str(if ok { "hits only at A1 and long roots of Cn (B2 = C2)\n" } else { "unexpected hits\n" });
    Ok(Report { status: Some(ok), result: json!({"rows": rows}), witness, table })
}

fn named_vector(l: &LieLattice, v: &[u64]) -> String {
    let terms: Vec<String> = v
        .iter()
        .zip(l.names())
        .filter(|(x, _)| **x != 0)
        .map(|(x, n)| if *x == 1 { n.clone() } else { format!("{x}*{n}") })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn lie(cmd: &LieCmd) -> Result<Report> {
    match cmd {
        LieCmd::Center { alg, prime } => {
            let l = alg.lattice()?;
            let c = l.center_mod_p(*prime)?;
            let basis: Vec<String> = c.iter().map(|v| named_vector(&l, v)).collect();
            let mut table = format!("center of {} mod {prime}: dimension {}\n", l.label(), c.len());
            for b in &basis {
                table.push_str(&format!("  {b}\n"));
            }
            Ok(Report::info(json!({"algebra": l.label().to_string(), "prime": prime, "dim": c.len(), "basis": basis}), table))
        }
        LieCmd::DerivedIndex { alg } => {
            let l = alg.lattice()?;
            let idx = l.derived_index()?;
            let table = format!("[{0} : [{0}, {0}]] = {idx}\n", l.label());
            Ok(Report::info(json!({"algebra": l.label().to_string(), "index": idx.to_string()}), table))
        }
        LieCmd::TableDCenters { max, prime } => {
            let mut table = format!("{:<5}{:>6}{:>6}{:>7}{:>6}\n", "D_n", "spin", "so", "pspin", "pso");
            let mut rows = Vec::new();
            let mut ok = true;
            let mut witness = None;
            for n in 3..=*max {
                let row: Vec<Option<usize>> = [crate::lie::DForm::Sc, crate::lie::DForm::Z, crate::lie::DForm::Ps, crate::lie::DForm::Ad]
                    .iter()
                    .map(|&f| match LieLattice::so_even(n, f) {
                        Ok(l) => l.center_mod_p(*prime).map(|c| Some(c.len())),
                        Err(_) => Ok(None),
                    })
                    .collect::<Result<_>>()?;
                if *prime == 2 {
                    let want = if n % 2 == 0 { [Some(2), Some(1), Some(1), Some(0)] } else { [Some(1), Some(1), None, Some(0)] };
                    if row != want {
                        ok = false;
                        witness.get_or_insert(format!("D{n}: {row:?}"));
                    }
                }
                let cell = |x: &Option<usize>| x.map(|d| d.to_string()).unwrap_or_else(|| "-".into());
                table.push_str(&format!("{:<5}{:>6}{:>6}{:>7}{:>6}\n", format!("D{n}"), cell(&row[0]), cell(&row[1]), cell(&row[2]), cell(&row[3])));
                rows.push(json!({"n": n, "spin": row[0], "so": row[1], "pspin": row[2], "pso": row[3]}));
            }
            let status = if *prime == 2 { Some(ok) } else { None };
            Ok(Report { status, result: json!({"prime": prime, "rows": rows}), witness, table })
        }
        LieCmd::WeightDecomp { alg } => {
            let l = alg.lattice()?;
            let wd = l.weight_decomposition()?;
            let weights = l.weights()?;
            let mut table = format!("{}: Cartan {}\n", l.label(), wd.cartan.join(", "));
            let mut rows = Vec::new();
            for rs in &wd.root_spaces {
                table.push_str(&format!("  {:<8} root {:?}  weight {:?}\n", rs.name, rs.root, weights[rs.index]));
                rows.push(json!({"name": rs.name, "root": rs.root, "weight": weights[rs.index]}));
            }
            Ok(Report::info(json!({"algebra": l.label().to_string(), "cartan": wd.cartan, "roots": rows}), table))
        }
        LieCmd::Delta { alg } => {
            let l = alg.lattice()?;
            let (rank, delta) = l.delta_poly()?;
            let restricted = l.restrict_to_torus(&delta)?;
            let table = format!("{}: l = {rank}\n  delta = {delta}\n  delta|_t = {restricted}\n", l.label());
            Ok(Report::info(
                json!({"algebra": l.label().to_string(), "l": rank, "delta": delta.to_string(), "restricted": restricted.to_string()}),
                table,
            ))
        }
    }
}

fn parse_matrix(s: &str) -> Result<IntMatrix> {
    let rows: Vec<Vec<BigInt>> = serde_json::from_str::<Vec<Vec<Value>>>(s)
        .map_err(|e| Error::Parse(format!("matrix: {e}")))?
        .into_iter()
        .map(|r| {
            r.into_iter()
                .map(|x| match x {
                    Value::Number(n) => n.to_string().parse::<BigInt>().map_err(|_| Error::Parse(format!("entry {n}"))),
                    Value::String(t) => t.parse::<BigInt>().map_err(|_| Error::Parse(format!("entry {t}"))),
                    other => Err(Error::Parse(format!("entry {other}"))),
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    IntMatrix::from_rows(rows)
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn lattice(cmd: &LatticeCmd, seed: u64) -> Result<Report> {
    match cmd {
        LatticeCmd::Snf { matrix } => {
            let m = parse_matrix(matrix)?;
            let snf = smith_normal_form(&m);
            let f = strings(&snf.factors);
            let table = format!("rank {}\ninvariant factors: {}\n", snf.rank, f.join(", "));
            Ok(Report::info(json!({"rank": snf.rank, "factors": f}), table))
        }
        LatticeCmd::Index { sub, sup } => {
            let (a, b) = (parse_matrix(sub)?.transpose(), parse_matrix(sup)?.transpose());
            let idx = lattice_index(&a, &b)?;
            Ok(Report::info(json!({"index": idx.to_string()}), format!("index: {idx}\n")))
        }
        LatticeCmd::Pontryagin { matrix: Some(m), .. } => {
            let phi = parse_matrix(m)?;
            let (a, b) = (cokernel_invariants(&phi)?, pontryagin_dual_invariants(&phi)?);
            let ok = a == b;
            let table = format!("coker(phi): {:?}\ncoker(phi^T): {:?}\n", strings(&a), strings(&b));
            let witness = (!ok).then(|| "invariant factors differ".to_string());
            Ok(Report { status: Some(ok), result: json!({"coker": strings(&a), "dual": strings(&b)}), witness, table })
        }
        LatticeCmd::Pontryagin { matrix: None, trials } => {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            for t in 0..*trials {
                let size = rng.gen_range(1..=5);
                let phi = verify::random_injective(&mut rng, size);
                let (a, b) = (cokernel_invariants(&phi)?, pontryagin_dual_invariants(&phi)?);
                if a != b {
                    let w = format!("trial {t}: {:?}", phi.to_rows());
                    return Ok(Report { status: Some(false), result: json!({"trial": t}), witness: Some(w), table: "mismatch\n".into() });
                }
            }
            let table = format!("{trials} random matrices (seed {seed}): coker(phi) ≅ coker(phi^T)\n");
            Ok(Report { status: Some(true), result: json!({"trials": trials, "seed": seed}), witness: None, table })
        }
    }
}

fn weyl_invariants(kind: char, rank: usize, spec: &RingSpec, d: u32) -> Result<Report> {
    let kind = WeylType::from_char(kind.to_ascii_uppercase())?;
    let group = WeylGroup::new(kind, rank)?;
    let (inv, gen) = weyl::compare_with_generators(kind, rank, spec, d)?;
    let gens = weyl::invariant_generators(kind, rank, spec)?;
    let same = inv.same(&gen);
    let basis: Vec<String> = inv.basis().iter().map(|p| p.to_string()).collect();
    let mut table = format!(
        "W({kind:?}{rank}) of order {} over {spec}, degree ≤ {d}: ranks {:?}\ngenerators:\n",
        group.order(),
        inv.space.ranks()
    );
    for g in &gens {
        table.push_str(&format!("  {g}\n"));
    }
    table.push_str(&format!("generated module equals invariants at bound: {same}\n"));
    let result = json!({
        "type": format!("{kind:?}{rank}"),
        "ring": spec.to_string(),
        "max_degree": d,
        "ranks": inv.space.ranks(),
        "generators": gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "basis": basis,
    });
    let witness = (!same).then(|| "generated module differs from the invariants".to_string());
    Ok(Report { status: Some(same), result, witness, table })
}

/// The invariants the theory predicts on a lattice, over `spec`.
fn standard_invariants(l: &LieLattice, spec: &RingSpec) -> Result<Vec<(String, MultiPoly)>> {
    let u = universal_element(l, &RingSpec::z())?;
    let ring = l.coordinate_ring(spec.clone());
    let mut out = Vec::new();
    for (k, c) in u.char_poly_coeffs()?.iter().enumerate() {
        if !c.is_zero() {
            out.push((format!("c{}", k + 1), c.embed(&ring)?));
        }
    }
    let two_torsion = spec.two_torsion_generators();
    let orthogonal_d1 = matches!(l.label(), LieLabel::SoEven(..) | LieLabel::SoOdd(_)) && l.denom() == &BigInt::from(1);
    if orthogonal_d1 {
        if let LieLabel::SoEven(..) = l.label() {
            out.push(("pf".into(), u.pfaffian()?.embed(&ring)?));
        }
        for x in &two_torsion {
            for (i, p) in u.lift_pfaffian_coeffs()?.iter().enumerate() {
                let f = p.embed(&ring)?.scale(x);
                out.push((format!("{}*pi{}", spec.fmt_scalar(x), i + 1), f));
            }
        }
    }
    if let LieLabel::SlModMu(2, 2) = l.label() {
        for x in &two_torsion {
            out.push((format!("{}*alpha", spec.fmt_scalar(x)), ring.var("alpha")?.scale(x)));
        }
    }
    Ok(out)
}

fn adjoint(cmd: &AdjinvCmd, spec: &RingSpec, max_degree: Option<u32>) -> Result<Report> {
    match cmd {
        AdjinvCmd::Verify { alg, poly } => {
            let l = alg.lattice()?;
            let candidates = match poly {
                Some(p) => vec![(p.clone(), l.coordinate_ring(spec.clone()).parse(p)?)],
                None => standard_invariants(&l, spec)?,
            };
            let gens = adjinv::adjoint_generators(&l)?;
            let mut table = format!("{} over {spec}: {} root groups\n", l.label(), gens.len() - 1);
            let mut rows = Vec::new();
            let mut witness: Option<String> = None;
            for (name, f) in &candidates {
                let w = adjinv::check_invariance_with(f, &l, &gens)?;
                let ok = w.is_none();
                table.push_str(&format!("  {name:<10} {}\n", if ok { "invariant" } else { "NOT invariant" }));
                if let Some(w) = &w {
                    witness.get_or_insert(format!("{name}: {w}"));
                }
                rows.push(json!({"name": name, "poly": f.to_string(), "invariant": ok, "witness": w.as_ref().map(InvarianceWitness::to_string)}));
            }
            Ok(Report { status: Some(witness.is_none()), result: json!({"algebra": l.label().to_string(), "ring": spec.to_string(), "checks": rows}), witness, table })
        }
        AdjinvCmd::Invariants { alg } => {
            let l = alg.lattice()?;
            let d = max_degree.unwrap_or(4);
            let space = adjinv::adjoint_invariant_space_bounded(&l, spec, d)?;
            let basis: Vec<String> = space.basis().iter().map(|p| p.to_string()).collect();
            let mut table = format!("{} over {spec}, degree ≤ {d}: ranks {:?}\n", l.label(), space.space.ranks());
            for b in &basis {
                table.push_str(&format!("  {b}\n"));
            }
            Ok(Report::info(json!({"algebra": l.label().to_string(), "ring": spec.to_string(), "max_degree": d, "ranks": space.space.ranks(), "basis": basis}), table))
        }
        AdjinvCmd::Chevalley { alg } => {
            let l = alg.lattice()?;
            let d = max_degree.unwrap_or(4);
            let r = adjinv::chevalley_check(&l, spec, d)?;
            let iso = r.injective && r.surjective;
            let missing = r.missing.as_ref().map(|m| describe_torus_poly(m, adjinv::weyl_type_of(l.label()).map(|x| x.1).unwrap_or(0)));
            let mut table = format!("{} over {spec}, degree ≤ {d}\n", l.label());
            table.push_str(&format!("injective: {} at bound\n", r.injective));
            match &missing {
                None => table.push_str(&format!("iso: {iso} at bound\n")),
                Some(m) => table.push_str(&format!("iso: false, missing {m}\n")),
            }
            let result = json!({
                "algebra": l.label().to_string(),
                "ring": spec.to_string(),
                "max_degree": d,
                "adjoint_ranks": r.adjoint_ranks,
                "weyl_ranks": r.weyl_ranks,
                "injective": r.injective,
                "surjective": r.surjective,
                "iso": iso,
                "missing": missing,
            });
            Ok(Report::info(result, table))
        }
        AdjinvCmd::Pfaffian { alg } => {
            let l = alg.lattice()?;
            let u = universal_element(&l, &RingSpec::z())?;
            let mut table = format!("{}\n", l.label());
            let mut result = json!({"algebra": l.label().to_string()});
            if let LieLabel::SoEven(..) = l.label() {
                let pf = u.pfaffian()?;
                table.push_str(&format!("pf = {pf}\n"));
                result["pf"] = json!(pf.to_string());
            }
            let pi = u.pfaffian_char_poly_mod2()?;
            table.push_str(&format!("pi_F2(t) = {pi}\n"));
            result["pi_f2"] = json!(pi.to_string());
            let lifts: Vec<String> = u.lift_pfaffian_coeffs()?.iter().map(|p| p.to_string()).collect();
            for (i, p) in lifts.iter().enumerate() {
                table.push_str(&format!("pi_{} = {p}\n", i + 1));
            }
            result["lifts"] = json!(lifts);
            Ok(Report::info(result, table))
        }
    }
}

/// Names `τ·σ_k(X)` and `σ_k(X²)` when the polynomial is one of them.
fn describe_torus_poly(f: &MultiPoly, n: usize) -> String {
    let spec = f.spec().clone();
    let ring = torus_ring(spec.clone(), n);
    let Ok(g) = f.embed(&ring) else { return f.to_string() };
    let xs: Vec<MultiPoly> = (0..n).map(|k| ring.var_at(k)).collect();
    let sq: Vec<MultiPoly> = xs.iter().map(|x| x * x).collect();
    for k in 1..=n {
        let s = elementary_symmetric(&ring, &xs, k);
        if spec == RingSpec::o() && g == s.times_tau(&ring) {
            return format!("τσ_{k} = {f}");
        }
        if g == s {
            return format!("σ_{k} = {f}");
        }
        if g == elementary_symmetric(&ring, &sq, k) {
            return format!("σ_{k}(X²) = {f}");
        }
    }
    f.to_string()
}

fn run_verify(all: bool, claims: &[usize], seed: u64) -> Result<Report> {
    let reports = if all || claims.is_empty() {
        verify::run_all(seed)
    } else {
        claims.iter().map(|&c| verify::run_claim(c, seed)).collect()
    };
    let mut table = String::new();
    for r in &reports {
        table.push_str(&format!(
            "[{}] {:>2}. {} ({} ms): {}\n",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.title,
            r.millis,
            r.witness.as_deref().unwrap_or(&r.detail)
        ));
    }
    let ok = reports.iter().all(|r| r.passed);
    let witness = reports.iter().find(|r| !r.passed).map(|r| format!("claim {}: {}", r.id, r.witness.clone().unwrap_or_default()));
    Ok(Report { status: Some(ok), result: json!({"seed": seed, "claims": reports}), witness, table })
}
