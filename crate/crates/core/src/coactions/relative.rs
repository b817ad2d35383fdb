//! Lax relative Hopf modules: right `A`-modules `M` with `ρ_M: M → M⊗H`.

use serde::Serialize;

use super::{classify_coaction, CoactionMap};
use crate::error::{dim_err, Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::report::{compare_named, AxiomReport, Check};
use crate::tensor_over::TensorOverSub;

#[derive(Clone, Debug, PartialEq)]
pub struct RelativeHopfModule {
    pub dim: usize,
    /// `m_i ⊗ a_j ↦ m_i·a_j`, a `dim × dim·n` matrix.
    pub action: Matrix,
    /// `dim·m × dim`.
    pub rho_m: Matrix,
}

impl RelativeHopfModule {
    /// `A` itself with `ρ_M = ρ`.
    pub fn regular(c: &CoactionMap) -> RelativeHopfModule {
        RelativeHopfModule {
            dim: c.n(),
            action: c.algebra.mult.clone(),
            rho_m: c.rho.clone(),
        }
    }

    /// `m ↦ m·a`.
    pub fn right_by(&self, a: &[Scalar]) -> Matrix {
        let d = self.dim;
        let n = a.len();
        let f = self.action.field();
        let mut out = Matrix::zeros(f, d, d);
        for (j, aj) in a.iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            for i in 0..d {
                for r in 0..d {
                    let v = self.action.get(r, i * n + j);
                    if !v.is_zero() {
                        out.entry_mut(r, i).add_mul(aj, v);
                    }
                }
            }
        }
        out
    }

    fn shape_check(&self, c: &CoactionMap) -> Result<()> {
        let (d, n, m) = (self.dim, c.n(), c.m());
        if (self.action.rows(), self.action.cols()) != (d, d * n) {
            return dim_err(format!("module action must be {d}x{}", d * n));
        }
        if (self.rho_m.rows(), self.rho_m.cols()) != (d * m, d) {
            return dim_err(format!("module coaction must be {}x{d}", d * m));
        }
        if self.action.field() != c.field() || self.rho_m.field() != c.field() {
            return Err(Error::FieldMismatch(self.action.field(), c.field()));
        }
        Ok(())
    }
}

/// Right action of `t ∈ A⊗H⊗…⊗H` on `M⊗H⊗…⊗H`, `k` copies of `H`.
fn act_tensor(module: &RelativeHopfModule, c: &CoactionMap, t: &[Scalar], k: usize) -> Matrix {
    let (m, f) = (c.m(), c.field());
    let hop = c.hopf.algebra();
    let hk = m.pow(k as u32);
    let mut out = Matrix::zeros(f, module.dim * hk, module.dim * hk);
    for (idx, coef) in t.iter().enumerate() {
        if coef.is_zero() {
            continue;
        }
        let a = idx / hk;
        let mut rest = idx % hk;
        let mut factor = module.right_by(&c.algebra.basis_vector(a));
        let mut hs = Vec::with_capacity(k);
        for _ in 0..k {
            hs.push(rest % m);
            rest /= m;
        }
        for &h in hs.iter().rev() {
            factor = factor.kron(&hop.right_mult(&c.hopf.basis_vector(h)));
        }
        out = &out + &factor.scale(coef);
    }
    out
}

pub fn check_relative_hopf_module(
    module: &RelativeHopfModule,
    c: &CoactionMap,
) -> Result<AxiomReport> {
    module.shape_check(c)?;
    let (d, n, m, f) = (module.dim, c.n(), c.m(), c.field());
    let alg = &c.algebra;
    let hop = &c.hopf;
    let act = &module.action;
    let rho_m = &module.rho_m;
    let id_d = Matrix::identity(f, d);
    let mut report = AxiomReport::new();

    let unital = act * &id_d.kron(&alg.unit_map());
    report.push(Check::from_witness(
        "action-unital",
        compare_named(&unital, &id_d, &[d], &[d], &["m", "out_m"]),
    ));
    let lhs = act * &act.kron(&alg.identity());
    let rhs = act * &id_d.kron(&alg.mult);
    report.push(Check::from_witness(
        "action-associative",
        compare_named(&lhs, &rhs, &[d, n, n], &[d], &["m", "a", "b", "out_m"]),
    ));

    let lhs = &id_d.kron(&hop.counit_map()) * rho_m;
    report.push(Check::from_witness(
        "2a.1.1",
        compare_named(&lhs, &id_d, &[d], &[d], &["m", "out_m"]),
    ));

    let lhs = &rho_m.kron(&hop.identity()) * rho_m;
    let rho2_one = (&c.rho.kron(&hop.identity()) * &c.rho).apply(&alg.unit);
    let rhs = &act_tensor(module, c, &rho2_one, 2) * &(&id_d.kron(&hop.comult) * rho_m);
    report.push(Check::from_witness(
        "2a.1.2",
        compare_named(
            &lhs,
            &rhs,
            &[d],
            &[d, m, m],
            &["m", "out_m", "out_h1", "out_h2"],
        ),
    ));

    let lhs = rho_m * act;
    let mut rhs = Matrix::zeros(f, d * m, d * n);
    for j in 0..n {
        let r = &act_tensor(module, c, &c.apply(&alg.basis_vector(j)), 1) * rho_m;
        for i in 0..d {
            for row in 0..d * m {
                rhs.set(row, i * n + j, r.get(row, i).clone());
            }
        }
    }
    report.push(Check::from_witness(
        "2a.1.3",
        compare_named(&lhs, &rhs, &[d, n], &[d, m], &["m", "a", "out_m", "out_h"]),
    ));
    Ok(report)
}

/// The two maps identifying `M ⊗_A C̲` with `(M⊗H)·1_A`, and the
/// structure map transported across them.
#[derive(Clone, Debug, Serialize)]
pub struct AlphaBeta {
    /// `α(ρ_M): M → M ⊗_A C̲`, `m ↦ m₍₀₎ ⊗_A π(1⊗m₍₁₎)`.
    pub alpha: Matrix,
    /// `β: M ⊗_A C̲ → M⊗H`, `m ⊗_A c ↦ m·c`.
    pub beta: Matrix,
    pub quotient_dim: usize,
}

pub fn alpha_beta(module: &RelativeHopfModule, c: &CoactionMap) -> Result<AlphaBeta> {
    if !classify_coaction(c)?.flags.lax {
        return Err(Error::Precondition(
            "alpha_beta needs a lax coaction".into(),
        ));
    }
    let report = check_relative_hopf_module(module, c)?;
    if !report.all_passed() {
        return Err(Error::Precondition(format!(
            "not a relative Hopf module:\n{report}"
        )));
    }
    let (d, n, f) = (module.dim, c.n(), c.field());
    let d_c = super::build_coring(c)?;
    let sub = &d_c.underline_basis;
    let coord = sub.coordinate_map();
    let incl = sub.inclusion();
    let rights: Vec<Matrix> = (0..n)
        .map(|i| module.right_by(&c.algebra.basis_vector(i)))
        .collect();
    let lefts: Vec<Matrix> = (0..n)
        .map(|i| &(&coord * &d_c.lact(&c.algebra.basis_vector(i))) * &incl)
        .collect();
    let q = TensorOverSub::new(f, d, sub.dim(), &rights, &lefts)?;
    let id_d = Matrix::identity(f, d);

    // m⊗h ↦ m ⊗_A π(1⊗h)
    let unit_h = Matrix::column_vector(f, &c.algebra.unit).kron(&c.hopf.identity());
    let a_map = q.projection() * &id_d.kron(&(&(&coord * &d_c.pi) * &unit_h));
    // m ⊗ (a⊗h) ↦ m·a ⊗ h
    let b_full = &module.action.kron(&c.hopf.identity()) * &id_d.kron(&incl);
    if !q.descends(&b_full) {
        return Err(Error::TheoremViolation(
            "m ⊗ c ↦ m·c is not A-balanced".into(),
        ));
    }
    let b_map = q.descend(&b_full);

    if &a_map * &b_map != Matrix::identity(f, q.dim()) {
        return Err(Error::TheoremViolation(
            "α∘β is not the identity on M ⊗_A C̲".into(),
        ));
    }
    let n_m = act_tensor(module, c, &c.apply(&c.algebra.unit), 1);
    if &b_map * &a_map != n_m {
        return Err(Error::TheoremViolation(
            "β∘α is not the projection onto (M⊗H)·1".into(),
        ));
    }
    let alpha = &a_map * &module.rho_m;
    if &b_map * &alpha != module.rho_m {
        return Err(Error::TheoremViolation("β(α(ρ_M)) differs from ρ_M".into()));
    }
    Ok(AlphaBeta {
        alpha,
        beta: b_map,
        quotient_dim: q.dim(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;
    use crate::examples::{regular_coaction, sweedler_on_dual_numbers, sweedler_on_k};

    #[test]
    fn regular_modules_of_partial_coactions() {
        let f = Field::Rational;
        let half = f.ratio(1, 2).unwrap();
        for c in [
            sweedler_on_k(f, &half).unwrap(),
            sweedler_on_dual_numbers(f).unwrap(),
            regular_coaction(f, 2).unwrap(),
        ] {
            let m = RelativeHopfModule::regular(&c);
            let r = check_relative_hopf_module(&m, &c).unwrap();
            assert!(r.all_passed(), "{r}");
            let ab = alpha_beta(&m, &c).unwrap();
            let under = crate::coactions::build_coring(&c)
                .unwrap()
                .underline_basis
                .dim();
            // A ⊗_A C̲ ≅ C̲
            assert_eq!(ab.quotient_dim, under);
        }
    }

    #[test]
    fn scaled_structure_map_fails() {
        let f = Field::Rational;
        let c = regular_coaction(f, 2).unwrap();
        let mut m = RelativeHopfModule::regular(&c);
        m.rho_m = m.rho_m.scale(&f.int(2));
        let r = check_relative_hopf_module(&m, &c).unwrap();
        assert!(!r.passed("2a.1.1") && !r.passed("2a.1.2"));
        assert!(matches!(alpha_beta(&m, &c), Err(Error::Precondition(_))));
    }

    #[test]
    fn wrong_shape_is_rejected() {
        let f = Field::Rational;
        let c = regular_coaction(f, 2).unwrap();
        let mut m = RelativeHopfModule::regular(&c);
        m.dim = 3;
        assert!(check_relative_hopf_module(&m, &c).is_err());
    }
}
