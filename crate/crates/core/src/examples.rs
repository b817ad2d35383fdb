//! Built-in worked examples, generated from the library constructors.

use crate::actions::{group_to_kg, permutation_restriction, ActionMap, PartialGroupAction};
use crate::coactions::CoactionMap;
use crate::error::{Error, Result};
use crate::exactlin::{tensor_vec, Field, Matrix, Scalar};
use crate::presentations::{
    cyclic_group_table, diagonal_algebra, dual_numbers, group_algebra, s3_permutations, sweedler4,
    upper_triangular2, HopfAlgebra,
};

/// `e_α = ½ + ½c + α·cx` in Sweedler's algebra.
pub fn sweedler_idempotent(field: Field, alpha: &Scalar) -> Result<Vec<Scalar>> {
    let half = field.ratio(1, 2)?;
    Ok(vec![half.clone(), half, field.zero(), alpha.clone()])
}

/// Whether `e` is idempotent with `ϵ(e) = 1` and `Δ(e)(e⊗1) = e⊗e`.
pub fn is_coaction_idempotent(h: &HopfAlgebra, e: &[Scalar]) -> bool {
    let h2 = h.algebra().tensor(&h.algebra());
    let lhs = h2.mul(&h.comult.apply(e), &tensor_vec(e, &h.unit));
    h.mul(e, e) == e && h.counit_of(e).is_one() && lhs == tensor_vec(e, e)
}

/// `ρ(x) = x ⊗ e` on the one-dimensional algebra `k`.
pub fn idempotent_coaction_on_k(h: HopfAlgebra, e: &[Scalar]) -> Result<CoactionMap> {
    let f = h.field;
    let rho = Matrix::column_vector(f, e);
    CoactionMap::new(diagonal_algebra(f, 1), h, rho)
}

/// Sweedler's algebra coacting on `k` through `e_α`.
pub fn sweedler_on_k(field: Field, alpha: &Scalar) -> Result<CoactionMap> {
    let h = sweedler4(field)?;
    let e = sweedler_idempotent(field, alpha)?;
    idempotent_coaction_on_k(h, &e)
}

/// Sweedler's algebra coacting on `B = k[x]/(x²)` by `ρ(b) = b ⊗ e_{1/2}`.
pub fn sweedler_on_dual_numbers(field: Field) -> Result<CoactionMap> {
    let h = sweedler4(field)?;
    let e = sweedler_idempotent(field, &field.ratio(1, 2)?)?;
    let b = dual_numbers(field);
    let rho = b.identity().kron(&Matrix::column_vector(field, &e));
    CoactionMap::new(b, h, rho)
}

/// `ρ(a) = a ⊗ 1` on `k^dim` with `H = kℤ/2`.
pub fn trivial_coaction(field: Field, dim: usize) -> Result<CoactionMap> {
    let h = group_algebra(cyclic_group_table(2), field)?;
    Ok(CoactionMap::trivial(diagonal_algebra(field, dim), h))
}

/// `ρ = 0` on `k` with `H = kℤ/2`: weak but not partial.
pub fn weak_zero_coaction(field: Field) -> Result<CoactionMap> {
    let h = group_algebra(cyclic_group_table(2), field)?;
    CoactionMap::new(diagonal_algebra(field, 1), h, Matrix::zeros(field, 2, 1))
}

/// `A = H = kℤ/n` with `ρ = Δ`.
pub fn regular_coaction(field: Field, n: usize) -> Result<CoactionMap> {
    let h = group_algebra(cyclic_group_table(n), field)?;
    let rho = h.comult.clone();
    CoactionMap::new(h.algebra(), h, rho)
}

/// The regular coaction of any Hopf algebra on itself.
pub fn regular_coaction_of(h: HopfAlgebra) -> CoactionMap {
    let rho = h.comult.clone();
    CoactionMap::new(h.algebra(), h, rho).expect("Δ has the right shape")
}

/// `ρ(x) = x ⊗ e` with `e = ½(1+g)` in `kℤ/2`.
pub fn z2_integral_on_k(field: Field) -> Result<CoactionMap> {
    let h = group_algebra(cyclic_group_table(2), field)?;
    let half = field.ratio(1, 2)?;
    idempotent_coaction_on_k(h, &[half.clone(), half])
}

/// Names accepted by [`coaction_example`].
pub const COACTION_EXAMPLES: [&str; 7] = [
    "sweedler-on-k",
    "sweedler-on-dual-numbers",
    "trivial",
    "weak-zero",
    "regular-z2",
    "regular-z3",
    "z2-integral-on-k",
];

/// Options for parametrised examples.
#[derive(Clone, Debug)]
pub struct ExampleParams {
    pub alpha: Scalar,
    pub dim: usize,
}

impl ExampleParams {
    pub fn new(field: Field) -> ExampleParams {
        ExampleParams {
            alpha: field.zero(),
            dim: 2,
        }
    }
}

pub fn coaction_example(name: &str, field: Field, p: &ExampleParams) -> Result<CoactionMap> {
    match name {
        "sweedler-on-k" => sweedler_on_k(field, &p.alpha),
        "sweedler-on-dual-numbers" => sweedler_on_dual_numbers(field),
        "trivial" => trivial_coaction(field, p.dim),
        "weak-zero" => weak_zero_coaction(field),
        "regular-z2" => regular_coaction(field, 2),
        "regular-z3" => regular_coaction(field, 3),
        "z2-integral-on-k" => z2_integral_on_k(field),
        other => Err(Error::Invalid(format!(
            "unknown coaction example {other:?}"
        ))),
    }
}

/// All coaction built-ins over `field` with default parameters, plus the
/// Sweedler family at `α ∈ {0, 1/2, 1}`.
pub fn all_coaction_examples(field: Field) -> Vec<(String, CoactionMap)> {
    let mut out = Vec::new();
    let p = ExampleParams::new(field);
    for name in COACTION_EXAMPLES {
        if let Ok(c) = coaction_example(name, field, &p) {
            out.push((name.to_string(), c));
        }
    }
    for (num, den) in [(1, 2), (1, 1)] {
        if let Ok(alpha) = field.ratio(num, den) {
            if let Ok(c) = sweedler_on_k(field, &alpha) {
                out.push((format!("sweedler-on-k[alpha={alpha}]"), c));
            }
        }
    }
    if let Ok(c) = trivial_coaction(field, 3) {
        out.push(("trivial[dim=3]".into(), c));
    }
    out
}

/// `ℤ/2` swapping the two coordinates of `k²`.
pub fn global_z2_swap(field: Field) -> Result<ActionMap> {
    let p = permutation_restriction(field, &[vec![0, 1], vec![1, 0]], &[0, 1])?;
    group_to_kg(&p)
}

/// The swap of points 1 and 2 restricted to functions on `{0, 1}`:
/// `e_g = (1, 0)` and `g·(x, y) = (x, 0)`.
pub fn partial_z2_group(field: Field) -> Result<PartialGroupAction> {
    permutation_restriction(field, &[vec![0, 1, 2], vec![0, 2, 1]], &[0, 1])
}

pub fn partial_z2_on_k2(field: Field) -> Result<ActionMap> {
    group_to_kg(&partial_z2_group(field)?)
}

/// Rotation of three points restricted to functions on `{0, 1}`.
pub fn partial_z3_on_k2(field: Field) -> Result<ActionMap> {
    let rot = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
    group_to_kg(&permutation_restriction(field, &rot, &[0, 1])?)
}

/// `S₃` on three points restricted to functions on `{0, 1}`.
pub fn partial_s3_group(field: Field) -> Result<PartialGroupAction> {
    permutation_restriction(field, &s3_permutations(), &[0, 1])
}

pub fn partial_s3(field: Field) -> Result<ActionMap> {
    group_to_kg(&partial_s3_group(field)?)
}

/// `ℤ/2` on upper triangular matrices by `g·a = E22·a`: partial, with the
/// non-central idempotent `g·1 = E22`.
pub fn noncentral_t2_group(field: Field) -> Result<PartialGroupAction> {
    let a = upper_triangular2(field);
    let e = vec![field.zero(), field.zero(), field.one()];
    let id = a.identity();
    PartialGroupAction::new(
        cyclic_group_table(2),
        a.clone(),
        vec![a.unit.clone(), e],
        vec![id.clone(), id],
    )
}

pub fn noncentral_t2(field: Field) -> Result<ActionMap> {
    group_to_kg(&noncentral_t2_group(field)?)
}

/// `h·a = ϵ(h)a` on `k^dim` with `H = kℤ/2`.
pub fn trivial_action(field: Field, dim: usize) -> Result<ActionMap> {
    let h = group_algebra(cyclic_group_table(2), field)?;
    Ok(ActionMap::trivial(diagonal_algebra(field, dim), h))
}

/// `κ = 0` on `k` with `H = kℤ/2`: weak but not partial.
pub fn weak_zero_action(field: Field) -> Result<ActionMap> {
    let h = group_algebra(cyclic_group_table(2), field)?;
    ActionMap::new(diagonal_algebra(field, 1), h, Matrix::zeros(field, 1, 2))
}

/// Names accepted by [`action_example`].
pub const ACTION_EXAMPLES: [&str; 7] = [
    "partial-z2-on-k2",
    "partial-z3-on-k2",
    "global-z2-swap",
    "partial-s3",
    "noncentral-t2",
    "trivial-action",
    "weak-zero-action",
];

pub fn action_example(name: &str, field: Field, p: &ExampleParams) -> Result<ActionMap> {
    match name {
        "partial-z2-on-k2" => partial_z2_on_k2(field),
        "partial-z3-on-k2" => partial_z3_on_k2(field),
        "global-z2-swap" => global_z2_swap(field),
        "partial-s3" => partial_s3(field),
        "noncentral-t2" => noncentral_t2(field),
        "trivial-action" => trivial_action(field, p.dim),
        "weak-zero-action" => weak_zero_action(field),
        other => Err(Error::Invalid(format!("unknown action example {other:?}"))),
    }
}

pub fn all_action_examples(field: Field) -> Vec<(String, ActionMap)> {
    let p = ExampleParams::new(field);
    ACTION_EXAMPLES
        .iter()
        .filter_map(|name| {
            action_example(name, field, &p)
                .ok()
                .map(|a| (name.to_string(), a))
        })
        .collect()
}
