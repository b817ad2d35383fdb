//! Actions `κ: H⊗A → A`, their classification, smash products and
//! partial group actions.
//!
//! `κ` is an `n × mn` matrix; `h_i ⊗ a_j` has index `i*n + j`.

mod group;
mod smash;

pub use group::{
    group_of_basis, group_to_kg, kg_to_group, permutation_restriction, verify_partial_group_action,
    PartialGroupAction,
};
pub use smash::{build_smash, verify_smash, SmashData};

use crate::coactions::ClassificationVerdict;
use crate::error::{dim_err, Error, Result};
use crate::exactlin::{axpy, Field, Matrix, Scalar};
use crate::par::{self, Execution};
use crate::presentations::{Algebra, HopfAlgebra};
use crate::report::{compare_named, AxiomReport, Check, Witness};

pub const ACTION_EQUATIONS: [&str; 9] = [
    "4.1.0", "4.1.1", "4.1.2", "4.1.3", "4.2.1", "4.2.2", "4.3.1", "4.4.1", "4.4.2",
];

pub const MODULE_SET: [&str; 4] = ["4.1.0", "4.1.2", "4.2.2", "4.3.1"];
pub const WEAK_SET: [&str; 4] = ["4.1.0", "4.1.3", "4.2.1", "4.2.2"];
pub const LAX_SET: [&str; 4] = ["4.1.0", "4.1.1", "4.1.3", "4.4.1"];
pub const PARTIAL_SET: [&str; 3] = ["4.1.0", "4.1.1", "4.1.2"];

#[derive(Clone, Debug, PartialEq)]
pub struct ActionMap {
    pub algebra: Algebra,
    pub hopf: HopfAlgebra,
    pub kappa: Matrix,
}

impl ActionMap {
    pub fn new(algebra: Algebra, hopf: HopfAlgebra, kappa: Matrix) -> Result<ActionMap> {
        if algebra.field != hopf.field {
            return Err(Error::FieldMismatch(algebra.field, hopf.field));
        }
        if kappa.field() != algebra.field {
            return Err(Error::FieldMismatch(algebra.field, kappa.field()));
        }
        let (n, m) = (algebra.dim, hopf.dim);
        if kappa.rows() != n || kappa.cols() != m * n {
            return dim_err(format!(
                "action matrix is {}x{}, expected {n}x{}",
                kappa.rows(),
                kappa.cols(),
                m * n
            ));
        }
        Ok(ActionMap {
            algebra,
            hopf,
            kappa,
        })
    }

    /// `h·a = ϵ(h) a`.
    pub fn trivial(algebra: Algebra, hopf: HopfAlgebra) -> ActionMap {
        let kappa = Matrix::row_vector(hopf.field, &hopf.counit).kron(&algebra.identity());
        ActionMap {
            algebra,
            hopf,
            kappa,
        }
    }

    pub fn field(&self) -> Field {
        self.algebra.field
    }

    pub fn n(&self) -> usize {
        self.algebra.dim
    }

    pub fn m(&self) -> usize {
        self.hopf.dim
    }

    /// `a ↦ h_i · a`.
    pub fn by_basis(&self, i: usize) -> Matrix {
        let n = self.n();
        let cols: Vec<usize> = (i * n..(i + 1) * n).collect();
        self.kappa.select_columns(&cols)
    }

    /// `h · a` for arbitrary `h` and `a`.
    pub fn act(&self, h: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.kappa.apply(&crate::exactlin::tensor_vec(h, a))
    }

    pub fn context(&self) -> ActionContext<'_> {
        ActionContext::new(self)
    }
}

/// Per-basis action matrices and sparse coproducts shared by the checks.
pub struct ActionContext<'a> {
    pub a: &'a ActionMap,
    pub n: usize,
    pub m: usize,
    pub f: Field,
    /// `k[i]`: `a ↦ h_i·a`.
    pub k: Vec<Matrix>,
    /// `Δ(h_i) = Σ c h_j ⊗ h_l` as `(j, l, c)`.
    pub delta: Vec<Vec<(usize, usize, Scalar)>>,
    /// `1_H · 1_A`.
    pub w: Vec<Scalar>,
}

impl<'a> ActionContext<'a> {
    fn new(a: &'a ActionMap) -> ActionContext<'a> {
        let (n, m, f) = (a.n(), a.m(), a.field());
        let k: Vec<Matrix> = (0..m).map(|i| a.by_basis(i)).collect();
        let delta = (0..m)
            .map(|i| {
                let mut terms = Vec::new();
                for j in 0..m {
                    for l in 0..m {
                        let c = a.hopf.comult.get(j * m + l, i);
                        if !c.is_zero() {
                            terms.push((j, l, c.clone()));
                        }
                    }
                }
                terms
            })
            .collect();
        let w = a.act(&a.hopf.unit, &a.algebra.unit);
        ActionContext {
            a,
            n,
            m,
            f,
            k,
            delta,
            w,
        }
    }

    /// `h · x` for `h` given in coordinates.
    pub fn act_vec(&self, h: &[Scalar], x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.f.zero(); self.n];
        for (i, c) in h.iter().enumerate() {
            if !c.is_zero() {
                axpy(&mut out, c, &self.k[i].apply(x));
            }
        }
        out
    }

    fn e(&self, i: usize) -> Vec<Scalar> {
        self.a.algebra.basis_vector(i)
    }

    fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.a.algebra.mul(x, y)
    }

    /// Builds both sides column by column over the basis tuples of `dims`.
    fn sides<F>(&self, dims: &[usize], out: usize, f: F) -> (Matrix, Matrix)
    where
        F: Fn(&[usize]) -> (Vec<Scalar>, Vec<Scalar>),
    {
        let total: usize = dims.iter().product();
        let mut lhs = Vec::with_capacity(total);
        let mut rhs = Vec::with_capacity(total);
        for c in 0..total {
            let idx = crate::exactlin::decode(c, dims);
            let (l, r) = f(&idx);
            lhs.push(l);
            rhs.push(r);
        }
        (
            Matrix::from_columns(self.f, out, &lhs),
            Matrix::from_columns(self.f, out, &rhs),
        )
    }

    /// Evaluates one equation; `None` means it holds.
    pub fn equation(&self, id: &str) -> Result<Option<Witness>> {
        let (n, m) = (self.n, self.m);
        let hop = &self.a.hopf;
        let one = &self.a.algebra.unit;
        let hb = |i: usize| hop.basis_vector(i);
        let eps = |i: usize| hop.counit[i].clone();
        let run =
            |dims: &[usize], names: &[&str], f: &dyn Fn(&[usize]) -> (Vec<Scalar>, Vec<Scalar>)| {
                let (l, r) = self.sides(dims, n, f);
                let mut all: Vec<&str> = names.to_vec();
                all.push("out_a");
                compare_named(&l, &r, dims, &[n], &all)
            };
        let w = match id {
            "4.1.0" => run(&[m, n, n], &["h", "a", "b"], &|ix| {
                let (h, a, b) = (ix[0], self.e(ix[1]), self.e(ix[2]));
                let lhs = self.k[h].apply(&self.mul(&a, &b));
                let mut rhs = vec![self.f.zero(); n];
                for (j, l, c) in &self.delta[h] {
                    axpy(
                        &mut rhs,
                        c,
                        &self.mul(&self.k[*j].apply(&a), &self.k[*l].apply(&b)),
                    );
                }
                (lhs, rhs)
            }),
            "4.1.1" => run(&[m, n, m, n], &["h", "a", "g", "b"], &|ix| {
                let (h, a, g, b) = (ix[0], self.e(ix[1]), ix[2], self.e(ix[3]));
                let lhs = self.k[h].apply(&self.mul(&a, &self.k[g].apply(&b)));
                let mut rhs = vec![self.f.zero(); n];
                for (j, l, c) in &self.delta[h] {
                    let h2g = hop.mul(&hb(*l), &hb(g));
                    axpy(
                        &mut rhs,
                        c,
                        &self.mul(&self.k[*j].apply(&a), &self.act_vec(&h2g, &b)),
                    );
                }
                (lhs, rhs)
            }),
            "4.1.2" => run(&[n], &["a"], &|ix| {
                let a = self.e(ix[0]);
                (self.act_vec(&hop.unit, &a), a)
            }),
            "4.1.3" => run(&[n], &["a"], &|ix| {
                let a = self.e(ix[0]);
                (self.mul(&a, &self.w), self.act_vec(&hop.unit, &a))
            }),
            "4.2.1" => run(&[m], &["h"], &|ix| {
                let h = ix[0];
                let rhs = self.w.iter().map(|x| x * &eps(h)).collect();
                (self.k[h].apply(one), rhs)
            }),
            "4.2.2" => run(&[m, m, n], &["h", "g", "a"], &|ix| {
                let (h, g, a) = (ix[0], ix[1], self.e(ix[2]));
                let lhs = self.k[h].apply(&self.k[g].apply(&a));
                (lhs, self.act_vec(&hop.mul(&hb(h), &hb(g)), &a))
            }),
            "4.3.1" => run(&[m], &["h"], &|ix| {
                let h = ix[0];
                let rhs = one.iter().map(|x| x * &eps(h)).collect();
                (self.k[h].apply(one), rhs)
            }),
            "4.4.1" => run(&[n, m], &["a", "h"], &|ix| {
                let x = self.mul(&self.e(ix[0]), &self.k[ix[1]].apply(one));
                let rhs = self.act_vec(&hop.unit, &x);
                (x, rhs)
            }),
            "4.4.2" => run(&[n, m], &["a", "h"], &|ix| {
                let a = self.e(ix[0]);
                let h1 = self.k[ix[1]].apply(one);
                let lhs = self.mul(&a, &h1);
                (lhs, self.mul(&self.act_vec(&hop.unit, &a), &h1))
            }),
            other => {
                return Err(Error::Invalid(format!(
                    "unknown action equation id {other:?}"
                )))
            }
        };
        Ok(w)
    }
}

pub fn check_action_equation(a: &ActionMap, id: &str) -> Result<Check> {
    let w = a.context().equation(id)?;
    Ok(Check::from_witness(id, w))
}

pub fn action_report(a: &ActionMap, exec: Execution) -> AxiomReport {
    let ctx = a.context();
    let checks = par::map(exec, &ACTION_EQUATIONS, |id| {
        Check::from_witness(*id, ctx.equation(id).expect("known id"))
    });
    AxiomReport { checks }
}

/// Classifies an action as module algebra / weak / lax / partial. The
/// `global` flag means a genuine module algebra.
pub fn classify_action(a: &ActionMap) -> Result<ClassificationVerdict> {
    classify_action_with(a, Execution::default())
}

pub fn classify_action_with(a: &ActionMap, exec: Execution) -> Result<ClassificationVerdict> {
    ClassificationVerdict::from_report(
        action_report(a, exec),
        [&MODULE_SET, &WEAK_SET, &LAX_SET, &PARTIAL_SET],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{cyclic_group_table, diagonal_algebra, group_algebra, sweedler4};

    #[test]
    fn trivial_action_passes_everything() {
        let f = Field::Rational;
        for h in [
            group_algebra(cyclic_group_table(3), f).unwrap(),
            sweedler4(f).unwrap(),
        ] {
            let a = ActionMap::trivial(diagonal_algebra(f, 2), h);
            let v = classify_action(&a).unwrap();
            assert!(v.report.all_passed(), "{}", v.report);
        }
    }

    #[test]
    fn zero_action_is_weak_only() {
        let f = Field::Rational;
        let h = group_algebra(cyclic_group_table(2), f).unwrap();
        let a = ActionMap::new(diagonal_algebra(f, 1), h, Matrix::zeros(f, 1, 2)).unwrap();
        let v = classify_action(&a).unwrap();
        assert!(v.flags.weak && v.flags.lax && !v.flags.partial && !v.flags.global);
        assert!(!v.passed("4.1.2"));
        assert!(check_action_equation(&a, "4.9.9").is_err());
    }
}
