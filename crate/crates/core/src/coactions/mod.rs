//! Coactions `ρ: A → A⊗H`, their axiom ladder and classification, the
//! induced coring on `A⊗H`, and relative Hopf modules.
//!
//! `ρ` is an `nm × n` matrix; `a_i ⊗ h_j` has index `i*m + j`.

mod coring;
mod relative;

pub use coring::{
    build_coring, grouplike_of, verify_coring_axioms, CoringCounit, CoringData, CoringMode,
    Grouplike,
};
pub use relative::{alpha_beta, check_relative_hopf_module, AlphaBeta, RelativeHopfModule};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{dim_err, Error, Result};
use crate::exactlin::{kron_all, tensor_vec, Field, Matrix, Scalar};
use crate::par::{self, Execution};
use crate::presentations::{Algebra, HopfAlgebra};
use crate::report::{compare_named, AxiomReport, Check, Witness};

/// Equation ids understood by [`check_coaction_equation`].
pub const COACTION_EQUATIONS: [&str; 11] = [
    "2.1.1", "2.1.2", "2.2.1", "2.2.2", "2.2.3", "2.3.1", "2.3.2", "2.5.1", "2.5.2", "2.5.3",
    "2.6.1",
];

pub const COMODULE_SET: [&str; 4] = ["2.1.1", "2.1.2", "2.2.3", "2.3.2"];
pub const WEAK_SET: [&str; 4] = ["2.1.1", "2.2.2", "2.3.1", "2.3.2"];
pub const LAX_SET: [&str; 4] = ["2.1.1", "2.2.1", "2.2.2", "2.5.1"];
pub const PARTIAL_SET: [&str; 3] = ["2.1.1", "2.2.1", "2.2.3"];

#[derive(Clone, Debug, PartialEq)]
pub struct CoactionMap {
    pub algebra: Algebra,
    pub hopf: HopfAlgebra,
    pub rho: Matrix,
}

impl CoactionMap {
    pub fn new(algebra: Algebra, hopf: HopfAlgebra, rho: Matrix) -> Result<CoactionMap> {
        if algebra.field != hopf.field {
            return Err(Error::FieldMismatch(algebra.field, hopf.field));
        }
        if rho.field() != algebra.field {
            return Err(Error::FieldMismatch(algebra.field, rho.field()));
        }
        let (n, m) = (algebra.dim, hopf.dim);
        if rho.rows() != n * m || rho.cols() != n {
            return dim_err(format!(
                "coaction matrix is {}x{}, expected {}x{n}",
                rho.rows(),
                rho.cols(),
                n * m
            ));
        }
        Ok(CoactionMap { algebra, hopf, rho })
    }

    /// `ρ(a) = a ⊗ 1_H`.
    pub fn trivial(algebra: Algebra, hopf: HopfAlgebra) -> CoactionMap {
        let u = Matrix::column_vector(hopf.field, &hopf.unit);
        let rho = algebra.identity().kron(&u);
        CoactionMap { algebra, hopf, rho }
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

    pub fn apply(&self, a: &[Scalar]) -> Vec<Scalar> {
        self.rho.apply(a)
    }

    pub fn context(&self) -> CoactionContext<'_> {
        CoactionContext::new(self)
    }
}

/// Maps derived from a coaction that most checks share.
pub struct CoactionContext<'a> {
    pub c: &'a CoactionMap,
    pub n: usize,
    pub m: usize,
    pub f: Field,
    /// The algebra `A ⊗ H`.
    pub ah: Algebra,
    /// `ρ(1_A)` as an `nm`-vector.
    pub r1: Vec<Scalar>,
    /// `z = ϵ(1_[1]) 1_[0]`.
    pub z: Vec<Scalar>,
    /// `π(c) = c · ρ(1_A)` on `A⊗H`.
    pub pi: Matrix,
    /// `A ⊗ ϵ: A⊗H → A`.
    pub eps: Matrix,
    /// `(ρ ⊗ H) ρ`.
    pub rho2: Matrix,
}

impl<'a> CoactionContext<'a> {
    fn new(c: &'a CoactionMap) -> CoactionContext<'a> {
        let (n, m, f) = (c.n(), c.m(), c.field());
        let ah = c.algebra.tensor(&c.hopf.algebra());
        let r1 = c.apply(&c.algebra.unit);
        let eps = c.algebra.identity().kron(&c.hopf.counit_map());
        let z = eps.apply(&r1);
        let pi = ah.right_mult(&r1);
        let rho2 = &c.rho.kron(&c.hopf.identity()) * &c.rho;
        CoactionContext {
            c,
            n,
            m,
            f,
            ah,
            r1,
            z,
            pi,
            eps,
            rho2,
        }
    }

    fn i_n(&self) -> Matrix {
        Matrix::identity(self.f, self.n)
    }

    fn i_m(&self) -> Matrix {
        Matrix::identity(self.f, self.m)
    }

    fn r1_col(&self) -> Matrix {
        Matrix::column_vector(self.f, &self.r1)
    }

    /// Right action of `a` on `A⊗H`: `c ↦ c ρ(a)`.
    pub fn ract(&self, a: &[Scalar]) -> Matrix {
        self.ah.right_mult(&self.c.apply(a))
    }

    /// `(I ⊗ ϵ) ρ: A → A`.
    pub fn eps_rho(&self) -> Matrix {
        &self.eps * &self.c.rho
    }

    fn witness(
        &self,
        lhs: &Matrix,
        rhs: &Matrix,
        inputs: &[(&str, usize)],
        outputs: &[(&str, usize)],
    ) -> Option<Witness> {
        let in_dims: Vec<usize> = inputs.iter().map(|x| x.1).collect();
        let out_dims: Vec<usize> = outputs.iter().map(|x| x.1).collect();
        let names: Vec<&str> = inputs.iter().chain(outputs).map(|x| x.0).collect();
        compare_named(lhs, rhs, &in_dims, &out_dims, &names)
    }

    /// Evaluates one equation; `None` means it holds.
    pub fn equation(&self, id: &str) -> Result<Option<Witness>> {
        let (n, m, f) = (self.n, self.m, self.f);
        let c = self.c;
        let rho = &c.rho;
        let delta = &c.hopf.comult;
        let eps_h = c.hopf.counit_map();
        let out_ah = [("out_a", n), ("out_h", m)];
        let out_ahh = [("out_a", n), ("out_h1", m), ("out_h2", m)];
        let w = match id {
            "2.1.1" => {
                let lhs = rho * &c.algebra.mult;
                let rhs = &self.ah.mult * &rho.kron(rho);
                self.witness(&lhs, &rhs, &[("a", n), ("b", n)], &out_ah)
            }
            "2.1.2" => {
                let rhs = Matrix::column_vector(f, &tensor_vec(&c.algebra.unit, &c.hopf.unit));
                self.witness(&self.r1_col(), &rhs, &[("1", 1)], &out_ah)
            }
            "2.2.1" => {
                let rhs = &(&self.pi.kron(&self.i_m()) * &self.i_n().kron(delta)) * rho;
                self.witness(&self.rho2, &rhs, &[("a", n)], &out_ahh)
            }
            "2.2.2" => {
                let lhs = self.eps_rho();
                let rhs = c.algebra.left_mult(&self.z);
                self.witness(&lhs, &rhs, &[("a", n)], &[("out_a", n)])
            }
            "2.2.3" => {
                let lhs = self.eps_rho();
                self.witness(&lhs, &self.i_n(), &[("a", n)], &[("out_a", n)])
            }
            "2.3.1" => {
                let rhs = Matrix::column_vector(f, &tensor_vec(&self.z, &c.hopf.unit));
                self.witness(&self.r1_col(), &rhs, &[("1", 1)], &out_ah)
            }
            "2.3.2" => {
                let rhs = &self.i_n().kron(delta) * rho;
                self.witness(&self.rho2, &rhs, &[("a", n)], &out_ahh)
            }
            "2.5.1" => {
                let contract = kron_all(&[&self.i_n(), &eps_h, &self.i_m()]);
                let rhs = &(&contract * &rho.kron(&self.i_m())) * &self.r1_col();
                self.witness(&self.r1_col(), &rhs, &[("1", 1)], &out_ah)
            }
            "2.5.2" => {
                let lz = c.algebra.left_mult(&self.z);
                let rhs = &lz.kron(&self.i_m()) * &self.r1_col();
                self.witness(&self.r1_col(), &rhs, &[("1", 1)], &out_ah)
            }
            "2.5.3" => {
                let rz = c.algebra.right_mult(&self.z);
                let rhs = &rz.kron(&self.i_m()) * &self.r1_col();
                self.witness(&self.r1_col(), &rhs, &[("1", 1)], &out_ah)
            }
            "2.6.1" => {
                let lhs = Matrix::column_vector(f, &self.z);
                let rhs = c.algebra.unit_map();
                self.witness(&lhs, &rhs, &[("1", 1)], &[("out_a", n)])
            }
            other => {
                return Err(Error::Invalid(format!(
                    "unknown coaction equation id {other:?}"
                )))
            }
        };
        Ok(w)
    }
}

/// Evaluates a single coaction equation by id.
pub fn check_coaction_equation(c: &CoactionMap, id: &str) -> Result<Check> {
    let w = c.context().equation(id)?;
    Ok(Check::from_witness(id, w))
}

/// The four classification flags shared by coactions and actions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    /// Genuine (co)module algebra.
    pub global: bool,
    pub weak: bool,
    pub lax: bool,
    pub partial: bool,
}

impl Flags {
    /// Checks the implications every verdict must satisfy:
    /// global ⟺ weak ∧ partial, partial ⇒ lax, weak ⇒ lax.
    pub fn lattice_violation(&self) -> Option<&'static str> {
        if self.global && !(self.weak && self.partial) {
            return Some("global without weak and partial");
        }
        if self.weak && self.partial && !self.global {
            return Some("weak and partial but not global");
        }
        if self.partial && !self.lax {
            return Some("partial but not lax");
        }
        if self.weak && !self.lax {
            return Some("weak but not lax");
        }
        None
    }
}

/// Flags plus the per-equation table they were computed from.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationVerdict {
    pub flags: Flags,
    pub equations: BTreeMap<String, bool>,
    pub report: AxiomReport,
}

impl ClassificationVerdict {
    pub(crate) fn from_report(
        report: AxiomReport,
        sets: [&[&str]; 4],
    ) -> Result<ClassificationVerdict> {
        let equations: BTreeMap<String, bool> = report
            .checks
            .iter()
            .map(|c| (c.id.clone(), c.passed))
            .collect();
        let all = |set: &[&str]| set.iter().all(|id| equations[*id]);
        let flags = Flags {
            global: all(sets[0]),
            weak: all(sets[1]),
            lax: all(sets[2]),
            partial: all(sets[3]),
        };
        if let Some(v) = flags.lattice_violation() {
            return Err(Error::Internal(format!(
                "classification lattice violated: {v}"
            )));
        }
        Ok(ClassificationVerdict {
            flags,
            equations,
            report,
        })
    }

    pub fn passed(&self, id: &str) -> bool {
        self.equations.get(id).copied().unwrap_or(false)
    }
}

/// Evaluates every coaction equation.
pub fn coaction_report(c: &CoactionMap, exec: Execution) -> AxiomReport {
    let ctx = c.context();
    let checks = par::map(exec, &COACTION_EQUATIONS, |id| {
        Check::from_witness(*id, ctx.equation(id).expect("known id"))
    });
    AxiomReport { checks }
}

/// Classifies a coaction as comodule algebra / weak / lax / partial.
pub fn classify_coaction(c: &CoactionMap) -> Result<ClassificationVerdict> {
    classify_coaction_with(c, Execution::default())
}

pub fn classify_coaction_with(c: &CoactionMap, exec: Execution) -> Result<ClassificationVerdict> {
    ClassificationVerdict::from_report(
        coaction_report(c, exec),
        [&COMODULE_SET, &WEAK_SET, &LAX_SET, &PARTIAL_SET],
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{cyclic_group_table, diagonal_algebra, group_algebra, sweedler4};

    #[test]
    fn trivial_coaction_passes_everything() {
        let f = Field::Rational;
        let h = sweedler4(f).unwrap();
        let c = CoactionMap::trivial(diagonal_algebra(f, 2), h);
        let v = classify_coaction(&c).unwrap();
        assert!(v.equations.values().all(|&b| b), "{}", v.report);
        assert!(v.flags.global && v.flags.weak && v.flags.lax && v.flags.partial);
    }

    #[test]
    fn unknown_id_is_an_error() {
        let f = Field::Rational;
        let h = group_algebra(cyclic_group_table(2), f).unwrap();
        let c = CoactionMap::trivial(diagonal_algebra(f, 1), h);
        assert!(check_coaction_equation(&c, "9.9.9").is_err());
    }

    #[test]
    fn zero_coaction_is_weak_not_partial() {
        let f = Field::Rational;
        let h = group_algebra(cyclic_group_table(2), f).unwrap();
        let a = diagonal_algebra(f, 1);
        let c = CoactionMap::new(a, h, Matrix::zeros(f, 2, 1)).unwrap();
        let v = classify_coaction(&c).unwrap();
        assert!(v.flags.weak && v.flags.lax && !v.flags.partial && !v.flags.global);
    }
}
