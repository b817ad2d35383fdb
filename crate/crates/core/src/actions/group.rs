//! Partial group actions: idempotents `e_σ` and isomorphisms
//! `α_σ: e_{σ⁻¹}A → e_σA`, and their translation into partial `kG`-actions.

use super::{classify_action, ActionMap};
use crate::error::{dim_err, Error, Result};
use crate::exactlin::{tensor_vec, unit_vector, Field, Matrix, Scalar};
use crate::presentations::{
    diagonal_algebra, group_algebra, permutation_group_table, validate_group_table, Algebra,
    GroupTable, HopfAlgebra,
};
use crate::report::{compare_named, AxiomReport, Check};

/// `α_σ` is stored as a full `n×n` matrix; only its restriction to
/// `e_{σ⁻¹}A` carries meaning, and every check precomposes with
/// multiplication by `e_{σ⁻¹}`.
#[derive(Clone, Debug)]
pub struct PartialGroupAction {
    pub group: GroupTable,
    pub algebra: Algebra,
    pub idempotents: Vec<Vec<Scalar>>,
    pub alphas: Vec<Matrix>,
}

impl PartialGroupAction {
    pub fn new(
        table: Vec<Vec<usize>>,
        algebra: Algebra,
        idempotents: Vec<Vec<Scalar>>,
        alphas: Vec<Matrix>,
    ) -> Result<PartialGroupAction> {
        let group = validate_group_table(table)?;
        let (g, n) = (group.order(), algebra.dim);
        if idempotents.len() != g || alphas.len() != g {
            return dim_err(format!("need {g} idempotents and {g} maps"));
        }
        if idempotents.iter().any(|e| e.len() != n)
            || alphas.iter().any(|a| a.rows() != n || a.cols() != n)
        {
            return dim_err(format!(
                "idempotents and maps must live on a {n}-dimensional algebra"
            ));
        }
        for a in &alphas {
            if a.field() != algebra.field {
                return Err(Error::FieldMismatch(algebra.field, a.field()));
            }
        }
        Ok(PartialGroupAction {
            group,
            algebra,
            idempotents,
            alphas,
        })
    }

    pub fn field(&self) -> Field {
        self.algebra.field
    }

    /// `a ↦ α_σ(e_{σ⁻¹} a)`, defined on all of `A`.
    pub fn restricted(&self, s: usize) -> Matrix {
        let inv = self.group.inv(s);
        &self.alphas[s] * &self.algebra.left_mult(&self.idempotents[inv])
    }

    /// Equal tables, idempotents, and maps on their ideals.
    pub fn same_action(&self, other: &PartialGroupAction) -> bool {
        self.group == other.group
            && self.algebra == other.algebra
            && self.idempotents == other.idempotents
            && (0..self.group.order()).all(|s| self.restricted(s) == other.restricted(s))
    }
}

pub fn verify_partial_group_action(p: &PartialGroupAction) -> AxiomReport {
    let f = p.field();
    let alg = &p.algebra;
    let n = alg.dim;
    let g = p.group.order();
    let id = p.group.identity;
    let mut report = AxiomReport::new();
    let beta: Vec<Matrix> = (0..g).map(|s| p.restricted(s)).collect();
    let lmul: Vec<Matrix> = p.idempotents.iter().map(|e| alg.left_mult(e)).collect();

    report.push(Check::boolean(
        "e1-unit",
        p.idempotents[id] == alg.unit,
        None,
    ));
    report.push(Check::from_witness(
        "alpha1-identity",
        compare_named(&p.alphas[id], &alg.identity(), &[n], &[n], &["a", "out_a"]),
    ));
    let bad: Vec<usize> = (0..g)
        .filter(|&s| alg.mul(&p.idempotents[s], &p.idempotents[s]) != p.idempotents[s])
        .collect();
    report.push(Check::boolean(
        "idempotents",
        bad.is_empty(),
        (!bad.is_empty()).then(|| format!("e_σ not idempotent for σ in {bad:?}")),
    ));

    // e_σ α_στ(e_{(στ)⁻¹} a) = α_σ(e_{σ⁻¹} α_τ(e_{τ⁻¹} a))
    let mut lcols = Vec::with_capacity(g * g * n);
    let mut rcols = Vec::with_capacity(g * g * n);
    for s in 0..g {
        for t in 0..g {
            let lhs = &lmul[s] * &beta[p.group.mul(s, t)];
            let rhs = &beta[s] * &beta[t];
            for a in 0..n {
                lcols.push(lhs.column(a));
                rcols.push(rhs.column(a));
            }
        }
    }
    report.push(Check::from_witness(
        "5.2.1",
        compare_named(
            &Matrix::from_columns(f, n, &lcols),
            &Matrix::from_columns(f, n, &rcols),
            &[g, g, n],
            &[n],
            &["sigma", "tau", "a", "out_a"],
        ),
    ));

    let mut lcols = Vec::with_capacity(g * n * n);
    let mut rcols = Vec::with_capacity(g * n * n);
    for b in &beta {
        for i in 0..n {
            for j in 0..n {
                let (ei, ej) = (alg.basis_vector(i), alg.basis_vector(j));
                lcols.push(b.apply(&alg.mul(&ei, &ej)));
                rcols.push(alg.mul(&b.apply(&ei), &b.apply(&ej)));
            }
        }
    }
    report.push(Check::from_witness(
        "5.2.2",
        compare_named(
            &Matrix::from_columns(f, n, &lcols),
            &Matrix::from_columns(f, n, &rcols),
            &[g, n, n],
            &[n],
            &["sigma", "a", "b", "out_a"],
        ),
    ));

    let lhs: Vec<Vec<Scalar>> = beta.iter().map(|b| b.apply(&alg.unit)).collect();
    report.push(Check::from_witness(
        "5.2.2b",
        compare_named(
            &Matrix::from_columns(f, n, &lhs),
            &Matrix::from_columns(f, n, &p.idempotents),
            &[g],
            &[n],
            &["sigma", "out_a"],
        ),
    ));

    // α_σ maps e_{σ⁻¹}A bijectively onto e_σA
    let bad: Vec<usize> = (0..g)
        .filter(|&s| {
            let inv = p.group.inv(s);
            let into = &lmul[s] * &beta[s] == beta[s];
            let dom = lmul[inv].rank();
            let cod = lmul[s].rank();
            !(into && beta[s].rank() == dom && dom == cod)
        })
        .collect();
    report.push(Check::boolean(
        "alpha-bijective",
        bad.is_empty(),
        (!bad.is_empty()).then(|| format!("α_σ is not an isomorphism onto e_σA for σ in {bad:?}")),
    ));
    report
}

/// `σ·a = α_σ(e_{σ⁻¹}a)`, extended linearly to `kG`.
pub fn group_to_kg(p: &PartialGroupAction) -> Result<ActionMap> {
    let report = verify_partial_group_action(p);
    if let Some(c) = report.failures().next() {
        return Err(Error::Precondition(format!(
            "not a partial group action: {} fails",
            c.id
        )));
    }
    let f = p.field();
    let n = p.algebra.dim;
    let g = p.group.order();
    let h = group_algebra(p.group.table.clone(), f)?;
    let mut kappa = Matrix::zeros(f, n, g * n);
    for s in 0..g {
        let b = p.restricted(s);
        for a in 0..n {
            for r in 0..n {
                kappa.set(r, s * n + a, b.get(r, a).clone());
            }
        }
    }
    ActionMap::new(p.algebra.clone(), h, kappa)
}

/// Reads off the group when every basis element of `h` is grouplike and
/// the basis is closed under multiplication.
pub fn group_of_basis(h: &HopfAlgebra) -> Result<GroupTable> {
    let m = h.dim;
    let f = h.field;
    let not_group =
        || Error::Precondition("Hopf algebra is not a group algebra on its basis".into());
    for i in 0..m {
        let e = unit_vector(f, m, i);
        if h.comult.column(i) != tensor_vec(&e, &e) || !h.counit[i].is_one() {
            return Err(not_group());
        }
    }
    let mut table = vec![vec![0; m]; m];
    for i in 0..m {
        for j in 0..m {
            let v = h.mul(&h.basis_vector(i), &h.basis_vector(j));
            let k = (0..m)
                .find(|&k| v == unit_vector(f, m, k))
                .ok_or_else(not_group)?;
            table[i][j] = k;
        }
    }
    validate_group_table(table)
}

/// `e_σ = σ·1_A` and `α_σ = σ·(−)`.
pub fn kg_to_group(a: &ActionMap) -> Result<PartialGroupAction> {
    if !classify_action(a)?.flags.partial {
        return Err(Error::Precondition(
            "kg_to_group needs a partial action".into(),
        ));
    }
    let group = group_of_basis(&a.hopf)?;
    let g = group.order();
    let idempotents = (0..g)
        .map(|s| a.by_basis(s).apply(&a.algebra.unit))
        .collect();
    let alphas = (0..g).map(|s| a.by_basis(s)).collect();
    PartialGroupAction::new(group.table, a.algebra.clone(), idempotents, alphas)
}

/// Restriction of the permutation action on `k^points` to the ideal of
/// functions supported on `subset`: `e_σ` is the indicator of
/// `subset ∩ σ(subset)` and `α_σ(δ_y) = δ_{σ(y)}`.
pub fn permutation_restriction(
    field: Field,
    perms: &[Vec<usize>],
    subset: &[usize],
) -> Result<PartialGroupAction> {
    let table = permutation_group_table(perms)?;
    let k = subset.len();
    let pos = |x: usize| subset.iter().position(|&u| u == x);
    let mut idempotents = Vec::with_capacity(perms.len());
    let mut alphas = Vec::with_capacity(perms.len());
    for s in perms {
        let e = subset
            .iter()
            .map(|&x| {
                let preimage = s.iter().position(|&y| y == x).expect("permutation");
                if pos(preimage).is_some() {
                    field.one()
                } else {
                    field.zero()
                }
            })
            .collect();
        idempotents.push(e);
        let mut a = Matrix::zeros(field, k, k);
        for (yi, &y) in subset.iter().enumerate() {
            if let Some(xi) = pos(s[y]) {
                a.set(xi, yi, field.one());
            }
        }
        alphas.push(a);
    }
    PartialGroupAction::new(table, diagonal_algebra(field, k), idempotents, alphas)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::s3_permutations;

    fn z2_partial(f: Field) -> PartialGroupAction {
        permutation_restriction(f, &[vec![0, 1, 2], vec![0, 2, 1]], &[0, 1]).unwrap()
    }

    #[test]
    fn z2_partial_on_k2() {
        let f = Field::Rational;
        let p = z2_partial(f);
        assert_eq!(p.idempotents[1], vec![f.one(), f.zero()]);
        assert!(verify_partial_group_action(&p).all_passed());
        let a = group_to_kg(&p).unwrap();
        // g·(x, y) = (x, 0)
        assert_eq!(a.by_basis(1), Matrix::from_ints(f, 2, 2, &[1, 0, 0, 0]));
        let v = classify_action(&a).unwrap();
        assert!(v.flags.partial && !v.flags.global);
        assert!(!v.passed("4.3.1"));
        assert!(kg_to_group(&a).unwrap().same_action(&p));
    }

    #[test]
    fn scaled_alpha_breaks_multiplicativity() {
        let f = Field::Rational;
        let mut p = z2_partial(f);
        p.alphas[1] = p.alphas[1].scale(&f.int(2));
        let r = verify_partial_group_action(&p);
        assert!(!r.passed("5.2.2"));
    }

    #[test]
    fn s3_restriction_round_trips() {
        let f = Field::Rational;
        let p = permutation_restriction(f, &s3_permutations(), &[0, 1]).unwrap();
        assert!(verify_partial_group_action(&p).all_passed());
        let a = group_to_kg(&p).unwrap();
        assert!(classify_action(&a).unwrap().flags.partial);
        let back = kg_to_group(&a).unwrap();
        assert!(back.same_action(&p));
        assert_eq!(group_to_kg(&back).unwrap(), a);
    }
}
