//! Seeded random instances for the property suites.
//!
//! Uniformly random structure maps almost never satisfy any axiom, so the
//! generators mix three sources: raw small-integer matrices, sparse
//! perturbations of known examples, and changes of basis of known lax
//! examples (which preserve every flag).

use rand::seq::SliceRandom;
use rand::Rng;

use crate::actions::ActionMap;
use crate::coactions::CoactionMap;
use crate::error::Result;
use crate::exactlin::{Field, Matrix, Scalar};
use crate::examples;
use crate::presentations::{
    cyclic_group_table, diagonal_algebra, dual_numbers, group_algebra, sweedler4, Algebra,
    HopfAlgebra,
};

/// The Hopf algebras the random suites range over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfChoice {
    Z2,
    Z3,
    Sweedler,
}

impl HopfChoice {
    pub const ALL: [HopfChoice; 3] = [HopfChoice::Z2, HopfChoice::Z3, HopfChoice::Sweedler];

    pub fn build(self, field: Field) -> Result<HopfAlgebra> {
        match self {
            HopfChoice::Z2 => group_algebra(cyclic_group_table(2), field),
            HopfChoice::Z3 => group_algebra(cyclic_group_table(3), field),
            HopfChoice::Sweedler => sweedler4(field),
        }
    }
}

fn small<R: Rng>(rng: &mut R, field: Field, lo: i64, hi: i64) -> Scalar {
    field.int(rng.gen_range(lo..=hi))
}

pub fn random_matrix<R: Rng>(rng: &mut R, field: Field, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| small(rng, field, -2, 2))
}

/// Random invertible matrix with entries in `{-2, …, 2}`.
pub fn random_invertible<R: Rng>(rng: &mut R, field: Field, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, field, n, n);
        if m.rank() == n {
            return m;
        }
    }
}

fn small_algebra<R: Rng>(rng: &mut R, field: Field, max_dim: usize) -> Algebra {
    match rng.gen_range(0..3) {
        0 => diagonal_algebra(field, 1),
        1 if max_dim >= 2 => diagonal_algebra(field, 2),
        _ if max_dim >= 2 => dual_numbers(field),
        _ => diagonal_algebra(field, 1),
    }
}

/// Sets roughly `percent`% of the entries of `m` to new small values.
fn perturb<R: Rng>(rng: &mut R, m: &Matrix, percent: u32) -> Matrix {
    let f = m.field();
    Matrix::from_fn(f, m.rows(), m.cols(), |r, c| {
        if rng.gen_ratio(percent, 100) {
            small(rng, f, -1, 1)
        } else {
            m.get(r, c).clone()
        }
    })
}

/// A coaction with `nm ≤ 4`-ish shapes: either a raw random `ρ`, or a
/// perturbed built-in.
pub fn random_coaction<R: Rng>(rng: &mut R, field: Field) -> Result<CoactionMap> {
    let h = HopfChoice::Z2.build(field)?;
    if rng.gen_ratio(1, 2) {
        let a = small_algebra(rng, field, 2);
        let (n, m) = (a.dim, h.dim);
        let rho = if rng.gen_ratio(1, 2) {
            random_matrix(rng, field, n * m, n)
        } else {
            let base = CoactionMap::trivial(a.clone(), h.clone()).rho;
            perturb(rng, &base, 30)
        };
        return CoactionMap::new(a, h, rho);
    }
    let base = random_lax_coaction(rng, field, HopfChoice::Z2)?;
    let rho = perturb(rng, &base.rho, 15);
    CoactionMap::new(base.algebra, base.hopf, rho)
}

/// An action with small shapes, built the same way as [`random_coaction`].
pub fn random_action<R: Rng>(rng: &mut R, field: Field) -> Result<ActionMap> {
    let h = HopfChoice::Z2.build(field)?;
    if rng.gen_ratio(1, 2) {
        let a = small_algebra(rng, field, 2);
        let (n, m) = (a.dim, h.dim);
        let kappa = if rng.gen_ratio(1, 2) {
            random_matrix(rng, field, n, m * n)
        } else {
            perturb(rng, &ActionMap::trivial(a.clone(), h.clone()).kappa, 30)
        };
        return ActionMap::new(a, h, kappa);
    }
    let base = random_lax_action(rng, field)?;
    let kappa = perturb(rng, &base.kappa, 15);
    ActionMap::new(base.algebra, base.hopf, kappa)
}

/// `ρ' = (P⁻¹⊗I)ρP` on `A` rewritten in the basis `P`.
pub fn coaction_change_basis(c: &CoactionMap, p: &Matrix) -> Result<CoactionMap> {
    let inv = p
        .inverse()
        .ok_or_else(|| crate::Error::NotInvertible("change-of-basis matrix".into()))?;
    let algebra = c.algebra.change_basis(p)?;
    let rho = &(&inv.kron(&c.hopf.identity()) * &c.rho) * p;
    CoactionMap::new(algebra, c.hopf.clone(), rho)
}

/// `κ' = P⁻¹κ(I⊗P)`.
pub fn action_change_basis(a: &ActionMap, p: &Matrix) -> Result<ActionMap> {
    let inv = p
        .inverse()
        .ok_or_else(|| crate::Error::NotInvertible("change-of-basis matrix".into()))?;
    let algebra = a.algebra.change_basis(p)?;
    let kappa = &(&inv * &a.kappa) * &a.hopf.identity().kron(p);
    ActionMap::new(algebra, a.hopf.clone(), kappa)
}

fn lax_seeds<R: Rng>(rng: &mut R, field: Field, h: HopfChoice) -> Result<Vec<CoactionMap>> {
    let hopf = h.build(field)?;
    let dim = rng.gen_range(1..=2);
    let mut seeds = vec![
        CoactionMap::trivial(diagonal_algebra(field, dim), hopf.clone()),
        CoactionMap::trivial(dual_numbers(field), hopf.clone()),
        examples::regular_coaction_of(hopf.clone()),
        CoactionMap::new(
            diagonal_algebra(field, 1),
            hopf.clone(),
            Matrix::zeros(field, hopf.dim, 1),
        )?,
    ];
    match h {
        HopfChoice::Sweedler => {
            let alpha = field.ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3))?;
            seeds.push(examples::sweedler_on_k(field, &alpha)?);
            seeds.push(examples::sweedler_on_dual_numbers(field)?);
        }
        HopfChoice::Z2 | HopfChoice::Z3 => {
            // the normalized integral is a coaction idempotent
            let m = hopf.dim as i64;
            let e = vec![field.ratio(1, m)?; hopf.dim];
            seeds.push(examples::idempotent_coaction_on_k(hopf.clone(), &e)?);
        }
    }
    Ok(seeds)
}

/// A lax coaction over `h`: a known lax example in a random basis of `A`.
pub fn random_lax_coaction<R: Rng>(
    rng: &mut R,
    field: Field,
    h: HopfChoice,
) -> Result<CoactionMap> {
    let seeds = lax_seeds(rng, field, h)?;
    let c = seeds.choose(rng).expect("non-empty").clone();
    let p = random_invertible(rng, field, c.n());
    coaction_change_basis(&c, &p)
}

/// A lax action over `kℤ/2`: a built-in action in a random basis of `A`.
pub fn random_lax_action<R: Rng>(rng: &mut R, field: Field) -> Result<ActionMap> {
    let seeds = [
        examples::partial_z2_on_k2(field)?,
        examples::global_z2_swap(field)?,
        examples::trivial_action(field, rng.gen_range(1..=2))?,
        examples::weak_zero_action(field)?,
    ];
    let a = seeds.choose(rng).expect("non-empty").clone();
    let p = random_invertible(rng, field, a.n());
    action_change_basis(&a, &p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::actions::classify_action;
    use crate::coactions::classify_coaction;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn change_of_basis_preserves_flags() {
        let f = Field::Rational;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for h in HopfChoice::ALL {
            for _ in 0..4 {
                let c = random_lax_coaction(&mut rng, f, h).unwrap();
                assert!(c.algebra.verify().all_passed());
                assert!(classify_coaction(&c).unwrap().flags.lax);
            }
        }
        for _ in 0..6 {
            let a = random_lax_action(&mut rng, f).unwrap();
            assert!(classify_action(&a).unwrap().flags.lax);
        }
    }

    #[test]
    fn raw_generators_have_valid_shapes() {
        let f = Field::Rational;
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let c = random_coaction(&mut rng, f).unwrap();
            assert!(classify_coaction(&c).is_ok());
            let a = random_action(&mut rng, f).unwrap();
            assert!(classify_action(&a).is_ok());
        }
    }
}
