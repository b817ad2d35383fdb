//! Oracles shared by the acceptance and property suites. They recompute
//! things from first principles instead of calling the library's checks.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hopf_partial::actions::{ActionMap, PartialGroupAction};
use hopf_partial::coactions::CoactionMap;
use hopf_partial::exactlin::{Field, Matrix, Scalar};

/// Equation sets that must pass or fail together on every map.
pub const COACTION_EQUIVALENCES: [(&str, &[&str], &[&str]); 3] = [
    (
        "weak 2<=>3",
        &["2.1.1", "2.2.1", "2.2.2", "2.3.1"],
        &["2.1.1", "2.2.2", "2.3.1", "2.3.2"],
    ),
    (
        "lax 2<=>3",
        &["2.1.1", "2.2.1", "2.2.2", "2.5.1"],
        &["2.1.1", "2.2.1", "2.2.2", "2.5.2"],
    ),
    (
        "lax 2<=>4",
        &["2.1.1", "2.2.1", "2.2.2", "2.5.1"],
        &["2.1.1", "2.2.1", "2.2.2", "2.5.3"],
    ),
];

pub const ACTION_EQUIVALENCES: [(&str, &[&str], &[&str]); 2] = [
    (
        "weak 2<=>3",
        &["4.1.0", "4.1.1", "4.1.3", "4.2.1"],
        &["4.1.0", "4.1.3", "4.2.1", "4.2.2"],
    ),
    (
        "lax 2<=>3",
        &["4.1.0", "4.1.1", "4.1.3", "4.4.1"],
        &["4.1.0", "4.1.1", "4.1.3", "4.4.2"],
    ),
];

/// First equivalence whose two sides disagree on `equations`.
pub fn broken_equivalence(
    equations: &BTreeMap<String, bool>,
    sets: &[(&'static str, &[&str], &[&str])],
) -> Option<&'static str> {
    let all = |s: &[&str]| s.iter().all(|id| equations[*id]);
    sets.iter()
        .find(|(_, lhs, rhs)| all(lhs) != all(rhs))
        .map(|(name, _, _)| *name)
}

// Sweedler's algebra by hand: index a + 2b for c^a x^b.

pub fn sweedler_mul(f: Field, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![f.zero(); 4];
    for i in 0..4 {
        for j in 0..4 {
            let (a, b, a2, b2) = (i % 2, i / 2, j % 2, j / 2);
            if b + b2 > 1 {
                continue;
            }
            // x c = -c x
            let sign = if b == 1 && a2 == 1 {
                f.int(-1)
            } else {
                f.one()
            };
            let k = (a + a2) % 2 + 2 * (b + b2);
            out[k] = &out[k] + &(&sign * &(&u[i] * &v[j]));
        }
    }
    out
}

/// `Δ` on Sweedler's algebra as a list of `(coeff, left, right)` terms.
fn sweedler_delta(i: usize) -> Vec<(i64, usize, usize)> {
    match i {
        0 => vec![(1, 0, 0)],
        1 => vec![(1, 1, 1)],
        2 => vec![(1, 1, 2), (1, 2, 0)],
        _ => vec![(1, 0, 3), (1, 3, 1)],
    }
}

/// Whether `e` is idempotent, `ϵ(e) = 1` and `Δ(e)(e⊗1) = e⊗e`.
pub fn sweedler_coaction_idempotent(f: Field, e: &[Scalar]) -> bool {
    let counit = &e[0] + &e[1];
    let mut lhs = vec![f.zero(); 16];
    for (i, ei) in e.iter().enumerate() {
        for (c, l, r) in sweedler_delta(i) {
            let mut basis = vec![f.zero(); 4];
            basis[l] = f.one();
            let left = sweedler_mul(f, &basis, e);
            for (p, lp) in left.iter().enumerate() {
                let k = p * 4 + r;
                lhs[k] = &lhs[k] + &(&(&f.int(c) * ei) * lp);
            }
        }
    }
    let rhs: Vec<Scalar> = (0..16).map(|k| &e[k / 4] * &e[k % 4]).collect();
    sweedler_mul(f, e, e) == e && counit.is_one() && lhs == rhs
}

/// `dim(H·e)` by row reduction of the products `b_i·e`.
pub fn sweedler_left_ideal_dim(f: Field, e: &[Scalar]) -> usize {
    let rows: Vec<Vec<Scalar>> = (0..4)
        .map(|i| {
            let mut b = vec![f.zero(); 4];
            b[i] = f.one();
            sweedler_mul(f, &b, e)
        })
        .collect();
    Matrix::from_rows(f, rows).unwrap().rank()
}

/// `ρ(1) = ½(1⊗1 + 1⊗c + 1⊗cx)`, `ρ(x) = ½(x⊗1 + x⊗c + x⊗cx)`.
pub fn sweedler_dual_numbers_rho(f: Field) -> Matrix {
    let half = f.ratio(1, 2).unwrap();
    let mut rho = Matrix::zeros(f, 8, 2);
    for b in 0..2 {
        for h in [0, 1, 3] {
            rho.set(b * 4 + h, b, half.clone());
        }
    }
    rho
}

/// `σ ↦ (a ↦ σ·a)` on a partial group action, from its idempotents and maps.
fn restricted_maps(p: &PartialGroupAction) -> Vec<Matrix> {
    let g = p.group.order();
    (0..g)
        .map(|s| {
            let inv = p.group.inv(s);
            &p.alphas[s] * &p.algebra.left_mult(&p.idempotents[inv])
        })
        .collect()
}

/// Enumerates the partial action axioms over every pair `(σ, τ)` and every
/// pair of basis vectors: `1·a = a`, `σ·(ab) = (σ·a)(σ·b)` and
/// `σ·(τ·a) = (σ·1)(στ·a)`.
pub fn enumerate_partial_group_axioms(p: &PartialGroupAction) -> Result<(), String> {
    let alg = &p.algebra;
    let n = alg.dim;
    let g = p.group.order();
    let maps = restricted_maps(p);
    let e = |i| alg.basis_vector(i);
    let identity = (0..g).find(|&s| p.group.mul(s, s) == s).unwrap();
    if maps[identity] != alg.identity() {
        return Err("identity does not act trivially".into());
    }
    for s in 0..g {
        for a in 0..n {
            for b in 0..n {
                let lhs = maps[s].apply(&alg.mul(&e(a), &e(b)));
                let rhs = alg.mul(&maps[s].apply(&e(a)), &maps[s].apply(&e(b)));
                if lhs != rhs {
                    return Err(format!("multiplicativity fails at σ={s}, a={a}, b={b}"));
                }
            }
        }
        let one_s = maps[s].apply(&alg.unit);
        for t in 0..g {
            for a in 0..n {
                let lhs = maps[s].apply(&maps[t].apply(&e(a)));
                let rhs = alg.mul(&one_s, &maps[p.group.mul(s, t)].apply(&e(a)));
                if lhs != rhs {
                    return Err(format!("composition fails at σ={s}, τ={t}, a={a}"));
                }
            }
        }
    }
    Ok(())
}

/// `κ(σ⊗a)` read straight off the partial group action.
pub fn kappa_of_group_action(p: &PartialGroupAction) -> Matrix {
    let n = p.algebra.dim;
    let maps = restricted_maps(p);
    let f = p.algebra.field;
    let mut kappa = Matrix::zeros(f, n, maps.len() * n);
    for (s, m) in maps.iter().enumerate() {
        for a in 0..n {
            for r in 0..n {
                kappa.set(r, s * n + a, m.get(r, a).clone());
            }
        }
    }
    kappa
}

/// Every scalar in the maps lives in `f`.
pub fn coaction_in_field(c: &CoactionMap, f: Field) -> bool {
    c.field() == f
        && c.rho.entries().iter().all(|s| s.field() == f)
        && c.algebra.mult.entries().iter().all(|s| s.field() == f)
        && c.hopf.comult.entries().iter().all(|s| s.field() == f)
}

pub fn action_in_field(a: &ActionMap, f: Field) -> bool {
    a.field() == f
        && a.kappa.entries().iter().all(|s| s.field() == f)
        && a.algebra.mult.entries().iter().all(|s| s.field() == f)
        && a.hopf.mult.entries().iter().all(|s| s.field() == f)
}
