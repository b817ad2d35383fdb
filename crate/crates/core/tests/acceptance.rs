//! The acceptance criteria, one test each. Every test prints a single
//! `PASS`/`FAIL` line; run with `--nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use hopf_partial::actions::{
    classify_action, group_to_kg, kg_to_group, permutation_restriction,
    verify_partial_group_action, ActionMap, PartialGroupAction,
};
use hopf_partial::coactions::{build_coring, classify_coaction, CoactionMap};
use hopf_partial::duality::{
    action_to_coaction, coaction_to_action, dual_ring_of_coring, prop410_iso,
};
use hopf_partial::exactlin::{Field, Matrix, Scalar};
use hopf_partial::examples::{
    all_action_examples, all_coaction_examples, partial_s3_group, partial_z2_group,
    partial_z2_on_k2, partial_z3_on_k2, regular_coaction, sweedler_idempotent,
    sweedler_on_dual_numbers, sweedler_on_k,
};
use hopf_partial::frobenius::{build_frobenius_system, frobenius_pair};
use hopf_partial::galois::{galois_verdict, GaloisReport};
use hopf_partial::presentations::{cyclic_group_table, diagonal_algebra, group_algebra};
use hopf_partial::random::{random_action, random_coaction, random_lax_coaction, HopfChoice};
use hopf_partial::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const Q: Field = Field::Rational;

/// Wall-clock bounds, pinned.
const SWEEDLER_BUDGET: Duration = Duration::from_secs(1);
const FROBENIUS_BUDGET: Duration = Duration::from_secs(5);

const RANDOM_COACTIONS: usize = 120;
const RANDOM_ACTIONS: usize = 120;
const RANDOM_LAX: usize = 50;

type Outcome = Result<String, String>;

fn report(n: usize, name: &str, run: fn() -> Outcome) {
    let start = Instant::now();
    let outcome = run();
    let elapsed = start.elapsed();
    match &outcome {
        Ok(detail) => println!("PASS criterion {n:>2} {name}: {detail} [{elapsed:.2?}]"),
        Err(why) => println!("FAIL criterion {n:>2} {name}: {why} [{elapsed:.2?}]"),
    }
    if let Err(why) = outcome {
        panic!("criterion {n} failed: {why}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_coactions() -> Vec<CoactionMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0AC);
    (0..RANDOM_COACTIONS)
        .map(|_| random_coaction(&mut rng, Q).unwrap())
        .collect()
}

fn random_actions() -> Vec<ActionMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xAC7);
    (0..RANDOM_ACTIONS)
        .map(|_| random_action(&mut rng, Q).unwrap())
        .collect()
}

/// Lax coactions spread evenly over `kℤ/2`, `kℤ/3` and Sweedler's algebra.
fn random_lax() -> Vec<CoactionMap> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1A7);
    (0..RANDOM_LAX)
        .map(|i| {
            let h = HopfChoice::ALL[i % HopfChoice::ALL.len()];
            random_lax_coaction(&mut rng, Q, h).unwrap()
        })
        .collect()
}

fn builtin_coactions() -> Vec<(String, CoactionMap)> {
    let mut out = all_coaction_examples(Q);
    for (name, a) in all_action_examples(Q) {
        if let Ok(c) = action_to_coaction(&a) {
            out.push((format!("{name} (dualized)"), c));
        }
    }
    out
}

fn verdicts(g: &GaloisReport) -> [bool; 3] {
    [g.can.bijective, g.theta.bijective, g.morita.strict]
}

fn sweedler_examples() -> Outcome {
    let start = Instant::now();
    for (num, den) in [(0, 1), (1, 2), (1, 1)] {
        let alpha = Q.ratio(num, den).unwrap();
        let e = sweedler_idempotent(Q, &alpha).unwrap();
        ensure(common::sweedler_coaction_idempotent(Q, &e), || {
            format!("e_{alpha} fails the idempotent conditions")
        })?;
        let flags = classify_coaction(&sweedler_on_k(Q, &alpha).unwrap())
            .map_err(|e| e.to_string())?
            .flags;
        ensure(
            flags.partial && flags.lax && !flags.weak && !flags.global,
            || format!("α = {alpha}: {flags:?}"),
        )?;
    }
    let b = sweedler_on_dual_numbers(Q).unwrap();
    ensure(b.rho == common::sweedler_dual_numbers_rho(Q), || {
        "ρ on k[x]/(x²) differs".into()
    })?;
    let flags = classify_coaction(&b).map_err(|e| e.to_string())?.flags;
    ensure(flags.partial, || format!("k[x]/(x²): {flags:?}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < SWEEDLER_BUDGET, || {
        format!("took {elapsed:.2?}")
    })?;
    Ok("α ∈ {0, 1/2, 1} partial, lax, not weak, not comodule; k[x]/(x²) partial".into())
}

fn lattice() -> Outcome {
    let mut checked = 0;
    let mut coactions: Vec<CoactionMap> = random_coactions();
    coactions.extend(builtin_coactions().into_iter().map(|(_, c)| c));
    for c in &coactions {
        // classification itself refuses to return a verdict that breaks the lattice
        let f = classify_coaction(c).map_err(|e| e.to_string())?.flags;
        ensure(f.lattice_violation().is_none(), || format!("{f:?}"))?;
        checked += 1;
    }
    let mut actions = random_actions();
    actions.extend(all_action_examples(Q).into_iter().map(|(_, a)| a));
    for a in &actions {
        let f = classify_action(a).map_err(|e| e.to_string())?.flags;
        ensure(f.lattice_violation().is_none(), || format!("{f:?}"))?;
        checked += 1;
    }
    ensure(checked >= 200, || format!("only {checked} maps"))?;
    Ok(format!("{checked} maps, 0 violations"))
}

fn equivalences() -> Outcome {
    let mut checked = 0;
    let mut coactions = random_coactions();
    coactions.extend(random_lax());
    coactions.extend(builtin_coactions().into_iter().map(|(_, c)| c));
    for c in &coactions {
        let v = classify_coaction(c).map_err(|e| e.to_string())?;
        if let Some(name) = common::broken_equivalence(&v.equations, &common::COACTION_EQUIVALENCES)
        {
            return Err(format!("coaction {name}: {:?}", v.equations));
        }
        checked += 1;
    }
    let mut actions = random_actions();
    actions.extend(all_action_examples(Q).into_iter().map(|(_, a)| a));
    for a in &actions {
        let v = classify_action(a).map_err(|e| e.to_string())?;
        if let Some(name) = common::broken_equivalence(&v.equations, &common::ACTION_EQUIVALENCES) {
            return Err(format!("action {name}: {:?}", v.equations));
        }
        checked += 1;
    }
    Ok(format!("{checked} maps, 0 violations"))
}

fn transfer_round_trip() -> Outcome {
    let mut cases: Vec<(String, CoactionMap)> = all_coaction_examples(Q);
    cases.extend(
        random_lax()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (format!("random lax #{i}"), c)),
    );
    let mut isos = 0;
    for (name, c) in &cases {
        let a = coaction_to_action(c).map_err(|e| format!("{name}: {e}"))?;
        let back = action_to_coaction(&a).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            back.rho == c.rho && back.algebra == c.algebra && back.hopf == c.hopf,
            || format!("{name}: round trip is not the identity"),
        )?;
        let fc = classify_coaction(c).map_err(|e| e.to_string())?.flags;
        let fa = classify_action(&a).map_err(|e| e.to_string())?.flags;
        ensure(fc.lax == fa.lax && fc.partial == fa.partial, || {
            format!("{name}: coaction {fc:?} vs action {fa:?}")
        })?;
        if fc.lax {
            let iso = prop410_iso(c).map_err(|e| format!("{name}: {e}"))?;
            let nm = c.n() * c.m();
            ensure(
                iso.alpha.rank() == nm && iso.report.passed("alpha-bijective"),
                || format!("{name}: α not bijective"),
            )?;
            ensure(iso.report.passed("alpha-intertwines"), || {
                format!("{name}: {}", iso.report)
            })?;
            isos += 1;
        }
    }
    Ok(format!(
        "{} round trips, {isos} smash isomorphisms",
        cases.len()
    ))
}

fn dual_ring_duality() -> Outcome {
    let mut checked = 0;
    for (name, c) in builtin_coactions() {
        if !classify_coaction(&c).map_err(|e| e.to_string())?.flags.lax {
            continue;
        }
        let ring = dual_ring_of_coring(&build_coring(&c).map_err(|e| e.to_string())?)
            .map_err(|e| format!("{name}: {e}"))?;
        let (du, dd) = (ring.underline.dim(), ring.dual_of_underline.dim());
        ensure(du == dd, || {
            format!("{name}: dim 1_A·*C = {du}, dim *(C1_A) = {dd}")
        })?;
        let f = c.field();
        ensure(&ring.alpha * &ring.beta == Matrix::identity(f, dd), || {
            format!("{name}: α∘β ≠ id")
        })?;
        ensure(&ring.beta * &ring.alpha == Matrix::identity(f, du), || {
            format!("{name}: β∘α ≠ id")
        })?;
        checked += 1;
    }
    ensure(checked > 0, || "no lax built-ins".into())?;
    Ok(format!("{checked} lax built-ins"))
}

fn global_z2_group() -> PartialGroupAction {
    permutation_restriction(Q, &[vec![0, 1], vec![1, 0]], &[0, 1]).unwrap()
}

fn group_round_trip() -> Outcome {
    let cases = [
        ("global ℤ/2", global_z2_group()),
        ("partial ℤ/2", partial_z2_group(Q).unwrap()),
        ("partial S₃", partial_s3_group(Q).unwrap()),
    ];
    for (name, p) in &cases {
        common::enumerate_partial_group_axioms(p).map_err(|e| format!("{name}: {e}"))?;
        ensure(verify_partial_group_action(p).all_passed(), || {
            format!("{name}: library rejects it")
        })?;
        let a = group_to_kg(p).map_err(|e| format!("{name}: {e}"))?;
        ensure(a.kappa == common::kappa_of_group_action(p), || {
            format!("{name}: κ differs")
        })?;
        let back = kg_to_group(&a).map_err(|e| format!("{name}: {e}"))?;
        ensure(back.same_action(p), || {
            format!("{name}: group → kG → group differs")
        })?;
        let again = group_to_kg(&back).map_err(|e| format!("{name}: {e}"))?;
        ensure(again.kappa == a.kappa, || {
            format!("{name}: kG → group → kG differs")
        })?;
    }
    // the oracle and the library agree on a broken instance too
    let mut bad = partial_s3_group(Q).unwrap();
    let s = (0..bad.group.order())
        .find(|&s| !bad.restricted(s).is_zero() && bad.restricted(s) != bad.algebra.identity())
        .expect("a nontrivial partial map");
    bad.alphas[s] = bad.alphas[s].scale(&Q.int(2));
    ensure(
        common::enumerate_partial_group_axioms(&bad).is_err(),
        || "oracle accepts a scaled map".into(),
    )?;
    ensure(!verify_partial_group_action(&bad).all_passed(), || {
        "library accepts a scaled map".into()
    })?;
    Ok("global ℤ/2, partial ℤ/2 and partial S₃ round trip both ways".into())
}

fn frobenius() -> Outcome {
    let start = Instant::now();
    for (name, a) in [
        ("kℤ/2 on Q²", partial_z2_on_k2(Q).unwrap()),
        ("kℤ/3 on Q²", partial_z3_on_k2(Q).unwrap()),
    ] {
        let h = &a.hopf;
        let fd = frobenius_pair(h).map_err(|e| format!("{name}: {e}"))?;
        for id in ["5.3.1a-left", "5.3.1a-right", "5.3.2"] {
            ensure(fd.report.passed(id), || {
                format!("{name}: {id} fails\n{}", fd.report)
            })?;
        }
        // t is a left integral and ⟨φ, t⟩ = 1, checked on the basis
        for i in 0..h.dim {
            let b = h.basis_vector(i);
            let eps = h.counit_of(&b);
            let scaled: Vec<Scalar> = fd.t.iter().map(|x| &eps * x).collect();
            ensure(h.mul(&b, &fd.t) == scaled, || {
                format!("{name}: t is not a left integral")
            })?;
        }
        let pairing = fd
            .phi
            .iter()
            .zip(&fd.t)
            .fold(Q.zero(), |acc, (p, t)| &acc + &(p * t));
        ensure(pairing.is_one(), || format!("{name}: ⟨φ, t⟩ = {pairing}"))?;
        let sys = build_frobenius_system(&a, &fd).map_err(|e| format!("{name}: {e}"))?;
        for id in ["commute", "bimodule", "counit-like"] {
            ensure(sys.report.passed(id), || {
                format!("{name}: {id} fails\n{}", sys.report)
            })?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < FROBENIUS_BUDGET, || format!("took {elapsed:.2?}"))?;
    Ok("5.3.1a, 5.3.2 and the three system identities hold for kℤ/2 and kℤ/3".into())
}

/// `g⊗h ↦ gh⊗h` on `kG⊗kG`, straight from the group table.
fn regular_can_rank(n: usize) -> usize {
    let table = cyclic_group_table(n);
    let mut m = Matrix::zeros(Q, n * n, n * n);
    for g in 0..n {
        for h in 0..n {
            m.set(table[g][h] * n + h, g * n + h, Q.one());
        }
    }
    m.rank()
}

/// `dim {b : Δ(b) = b⊗1}` in `kG`, straight from the group table.
fn regular_coinvariant_dim(n: usize) -> usize {
    let h = group_algebra(cyclic_group_table(n), Q).unwrap();
    let b_tensor_1 = Matrix::identity(Q, n).kron(&Matrix::column_vector(Q, &h.unit));
    (&h.comult - &b_tensor_1).kernel().dim()
}

fn galois_positive() -> Outcome {
    for n in [2, 3] {
        let g = galois_verdict(&regular_coaction(Q, n).unwrap()).map_err(|e| e.to_string())?;
        ensure(g.t_dim == 1 && regular_coinvariant_dim(n) == 1, || {
            format!("ℤ/{n}: T has dim {}", g.t_dim)
        })?;
        let oracle = regular_can_rank(n);
        ensure(oracle == n * n && g.can.rank == oracle, || {
            format!("ℤ/{n}: can rank {} vs oracle {oracle}", g.can.rank)
        })?;
        ensure(verdicts(&g) == [true; 3] && g.galois, || {
            format!("ℤ/{n}: {}", g.verdict_line())
        })?;
    }
    Ok("regular ℤ/2 and ℤ/3: T = k, can, θ bijective, Morita strict, GALOIS".into())
}

fn galois_negative() -> Outcome {
    let zero = Q.zero();
    let e = sweedler_idempotent(Q, &zero).unwrap();
    let dim = common::sweedler_left_ideal_dim(Q, &e);
    ensure(dim >= 2, || format!("dim He_0 = {dim}"))?;
    let g = galois_verdict(&sweedler_on_k(Q, &zero).unwrap()).map_err(|e| e.to_string())?;
    ensure(verdicts(&g) == [false; 3] && !g.galois, || g.verdict_line())?;
    Ok(format!("dim He_0 = {dim}; {}", g.verdict_line()))
}

fn coherence() -> Outcome {
    let mut cases: Vec<(String, CoactionMap)> = builtin_coactions();
    cases.extend(
        random_lax()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (format!("random lax #{i}"), c)),
    );
    cases.extend(
        random_coactions()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (format!("random #{i}"), c)),
    );
    let (mut tested, mut galois) = (0, 0);
    for (name, c) in &cases {
        if !classify_coaction(c)
            .map_err(|e| e.to_string())?
            .flags
            .partial
        {
            continue;
        }
        // a disagreement surfaces as a theorem violation
        let g = galois_verdict(c).map_err(|e| format!("{name}: {e}"))?;
        let v = verdicts(&g);
        ensure(v[0] == v[1] && v[1] == v[2] && v[0] == g.galois, || {
            format!("{name}: {}", g.verdict_line())
        })?;
        tested += 1;
        galois += g.galois as usize;
    }
    Ok(format!(
        "{tested} partial coactions, {galois} Galois, 0 disagreements"
    ))
}

fn source_files(dir: &std::path::Path, out: &mut Vec<std::path::PathBuf>) {
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        if path.is_dir() {
            source_files(&path, out);
        } else if path.extension().is_some_and(|e| e == "rs") {
            out.push(path);
        }
    }
}

fn exactness() -> Outcome {
    // no floating point anywhere in the library or the CLI
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let mut files = Vec::new();
    source_files(&root.join("src"), &mut files);
    source_files(&root.join("../cli/src"), &mut files);
    for path in &files {
        let text = std::fs::read_to_string(path).unwrap();
        let floaty = text
            .split(|c: char| !c.is_alphanumeric() && c != '_')
            .any(|w| w == "f32" || w == "f64");
        ensure(!floaty, || {
            format!("{} mentions a float type", path.display())
        })?;
    }

    // results stay in the field of their inputs
    let f5 = Field::prime(5).unwrap();
    for f in [Q, f5] {
        for (name, c) in all_coaction_examples(f) {
            ensure(common::coaction_in_field(&c, f), || {
                format!("{name} over {f}")
            })?;
            let a = coaction_to_action(&c).map_err(|e| e.to_string())?;
            ensure(common::action_in_field(&a, f), || {
                format!("{name} dualized over {f}")
            })?;
            ensure(
                common::coaction_in_field(&action_to_coaction(&a).unwrap(), f),
                || format!("{name} round trip over {f}"),
            )?;
        }
        let g = galois_verdict(&regular_coaction(f, 2).unwrap()).map_err(|e| e.to_string())?;
        ensure(g.galois, || {
            format!("regular ℤ/2 over {f}: {}", g.verdict_line())
        })?;
    }

    // mixing fields is an error, never a silent coercion
    let (q1, p1) = (Q.one(), f5.one());
    ensure(
        matches!(q1.try_add(&p1), Err(Error::FieldMismatch(..))),
        || "Q + F_5 accepted".into(),
    )?;
    ensure(
        matches!(q1.try_mul(&p1), Err(Error::FieldMismatch(..))),
        || "Q · F_5 accepted".into(),
    )?;
    let mq = Matrix::identity(Q, 2);
    let mp = Matrix::identity(f5, 2);
    ensure(mq.try_mul(&mp).is_err() && mq.try_add(&mp).is_err(), || {
        "mixed matrices accepted".into()
    })?;
    let h5 = group_algebra(cyclic_group_table(2), f5).unwrap();
    let a = diagonal_algebra(Q, 1);
    let rho = Matrix::zeros(Q, 2, 1);
    ensure(
        CoactionMap::new(a.clone(), h5.clone(), rho).is_err(),
        || "mixed coaction accepted".into(),
    )?;
    ensure(
        ActionMap::new(a, h5, Matrix::zeros(Q, 1, 2)).is_err(),
        || "mixed action accepted".into(),
    )?;
    ensure(Q.parse_scalar("1.5").is_err(), || {
        "decimal literal accepted".into()
    })?;
    Ok(format!(
        "{} source files float-free; Q and F_5 results stay in field",
        files.len()
    ))
}

#[test]
fn criterion_01_sweedler_idempotent_examples() {
    report(1, "sweedler idempotent examples", sweedler_examples);
}

#[test]
fn criterion_02_classification_lattice() {
    report(2, "classification lattice", lattice);
}

#[test]
fn criterion_03_equivalent_axiom_sets() {
    report(3, "equivalent axiom sets", equivalences);
}

#[test]
fn criterion_04_duality_round_trip() {
    report(4, "duality round trip", transfer_round_trip);
}

#[test]
fn criterion_05_dual_ring_duality() {
    report(5, "dual ring of the coring", dual_ring_duality);
}

#[test]
fn criterion_06_group_kg_round_trip() {
    report(6, "group and kG round trip", group_round_trip);
}

#[test]
fn criterion_07_frobenius() {
    report(7, "frobenius pair and system", frobenius);
}

#[test]
fn criterion_08_galois_positive_control() {
    report(8, "galois positive control", galois_positive);
}

#[test]
fn criterion_09_galois_negative_control() {
    report(9, "galois negative control", galois_negative);
}

#[test]
fn criterion_10_galois_coherence() {
    report(10, "galois coherence", coherence);
}

#[test]
fn criterion_11_exactness() {
    report(11, "exactness", exactness);
}
