//! Finite-dimensional algebras, coalgebras and Hopf algebras given by
//! structure constants.
//!
//! Every structure map is stored as a matrix acting on coordinate columns,
//! using the global tensor convention: `e_i ⊗ e_j` has index `i * d2 + j`.
//! So the multiplication of an `n`-dimensional algebra is an `n × n²`
//! matrix and a comultiplication is `m² × m`.

mod builders;
mod io;

pub use builders::{
    cyclic_group_table, diagonal_algebra, dual_numbers, group_algebra, matrix_algebra,
    permutation_group_table, s3_permutations, sweedler4, symmetric_group_table, upper_triangular2,
    validate_group_table, GroupTable,
};
pub use io::{
    algebra_from_json, field_from_json, hopf_from_json, hopf_to_json, load_algebra, load_hopf,
    matrix_from_json, matrix_to_json, presentation_from_json, presentation_to_json,
    scalar_from_json, scalar_to_json, vector_from_json, vector_to_json, Presentation,
    PresentationKind,
};

use crate::error::{dim_err, Error, Result};
use crate::exactlin::{swap, Field, Matrix, Scalar, Subspace};
use crate::report::{compare_named, AxiomReport, Check};

fn check_field(expected: Field, m: &Matrix) -> Result<()> {
    if m.field() != expected {
        return Err(Error::FieldMismatch(expected, m.field()));
    }
    Ok(())
}

fn check_vec_field(expected: Field, v: &[Scalar]) -> Result<()> {
    match v.iter().find(|s| s.field() != expected) {
        Some(s) => Err(Error::FieldMismatch(expected, s.field())),
        None => Ok(()),
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("b{i}")).collect()
}

/// An associative unital algebra. Equality compares structure constants only.
#[derive(Clone, Debug)]
pub struct Algebra {
    pub field: Field,
    pub dim: usize,
    pub basis: Vec<String>,
    /// `n × n²`: column `i*n + j` holds the coordinates of `b_i b_j`.
    pub mult: Matrix,
    pub unit: Vec<Scalar>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.mult == other.mult && self.unit == other.unit
    }
}

impl Algebra {
    pub fn new(
        field: Field,
        basis: Vec<String>,
        mult: Matrix,
        unit: Vec<Scalar>,
    ) -> Result<Algebra> {
        let n = unit.len();
        check_field(field, &mult)?;
        check_vec_field(field, &unit)?;
        if basis.len() != n {
            return dim_err(format!("{} basis labels for dimension {n}", basis.len()));
        }
        if mult.rows() != n || mult.cols() != n * n {
            return dim_err(format!(
                "multiplication is {}x{}, expected {n}x{}",
                mult.rows(),
                mult.cols(),
                n * n
            ));
        }
        Ok(Algebra {
            field,
            dim: n,
            basis,
            mult,
            unit,
        })
    }

    /// Builds an algebra from a product rule on basis indices.
    pub fn from_products(
        field: Field,
        basis: Vec<String>,
        unit: Vec<Scalar>,
        mut product: impl FnMut(usize, usize) -> Vec<Scalar>,
    ) -> Result<Algebra> {
        let n = unit.len();
        let mut mult = Matrix::zeros(field, n, n * n);
        for i in 0..n {
            for j in 0..n {
                let v = product(i, j);
                if v.len() != n {
                    return dim_err("product vector has the wrong length");
                }
                for (k, s) in v.into_iter().enumerate() {
                    mult.set(k, i * n + j, s);
                }
            }
        }
        Algebra::new(field, basis, mult, unit)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        crate::exactlin::unit_vector(self.field, self.dim, i)
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.field, self.dim)
    }

    /// `n × 1` matrix of the unit map `k -> A`.
    pub fn unit_map(&self) -> Matrix {
        Matrix::column_vector(self.field, &self.unit)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.mult.apply(&crate::exactlin::tensor_vec(a, b))
    }

    /// `L_a`, the matrix of `x ↦ a x`.
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut out = Matrix::zeros(self.field, n, n);
        for (k, ak) in a.iter().enumerate() {
            if ak.is_zero() {
                continue;
            }
            for j in 0..n {
                for r in 0..n {
                    let c = self.mult.get(r, k * n + j);
                    if !c.is_zero() {
                        out.entry_mut(r, j).add_mul(ak, c);
                    }
                }
            }
        }
        out
    }

    /// `R_a`, the matrix of `x ↦ x a`.
    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut out = Matrix::zeros(self.field, n, n);
        for (k, ak) in a.iter().enumerate() {
            if ak.is_zero() {
                continue;
            }
            for j in 0..n {
                for r in 0..n {
                    let c = self.mult.get(r, j * n + k);
                    if !c.is_zero() {
                        out.entry_mut(r, j).add_mul(ak, c);
                    }
                }
            }
        }
        out
    }

    /// The opposite algebra.
    pub fn op(&self) -> Algebra {
        Algebra {
            field: self.field,
            dim: self.dim,
            basis: self.basis.clone(),
            mult: &self.mult * &swap(self.field, self.dim, self.dim),
            unit: self.unit.clone(),
        }
    }

    /// `A ⊗ B` with the componentwise product `(a⊗b)(a'⊗b') = aa'⊗bb'`.
    pub fn tensor(&self, other: &Algebra) -> Algebra {
        let (n, m) = (self.dim, other.dim);
        let f = self.field;
        let d = n * m;
        let mut mult = Matrix::zeros(f, d, d * d);
        for a in 0..n {
            for b in 0..n {
                let col_a: Vec<(usize, &Scalar)> = (0..n)
                    .map(|r| (r, self.mult.get(r, a * n + b)))
                    .filter(|(_, s)| !s.is_zero())
                    .collect();
                if col_a.is_empty() {
                    continue;
                }
                for h in 0..m {
                    for g in 0..m {
                        let col = (a * m + h) * d + b * m + g;
                        for rb in 0..m {
                            let sb = other.mult.get(rb, h * m + g);
                            if sb.is_zero() {
                                continue;
                            }
                            for &(ra, sa) in &col_a {
                                mult.set(ra * m + rb, col, sa * sb);
                            }
                        }
                    }
                }
            }
        }
        let basis = self
            .basis
            .iter()
            .flat_map(|a| other.basis.iter().map(move |b| format!("{a}⊗{b}")))
            .collect();
        Algebra {
            field: f,
            dim: d,
            basis,
            mult,
            unit: crate::exactlin::tensor_vec(&self.unit, &other.unit),
        }
    }

    /// Transports the structure along `P`, whose columns are the new basis
    /// written in old coordinates: `μ' = P⁻¹ μ (P ⊗ P)`, `u' = P⁻¹ u`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Algebra> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::NotInvertible("change-of-basis matrix".into()))?;
        Ok(Algebra {
            field: self.field,
            dim: self.dim,
            basis: default_labels(self.dim),
            mult: &(&inv * &self.mult) * &p.kron(p),
            unit: inv.apply(&self.unit),
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.mult == self.op().mult
    }

    /// The center `{z : z x = x z for all x}`.
    pub fn center(&self) -> Subspace {
        let mut stacked: Option<Matrix> = None;
        for i in 0..self.dim {
            let e = self.basis_vector(i);
            // z ↦ z e_i − e_i z
            let m = &self.right_mult(&e) - &self.left_mult(&e);
            stacked = Some(match stacked {
                None => m,
                Some(s) => s.vstack(&m),
            });
        }
        match stacked {
            Some(s) => s.kernel(),
            None => Subspace::zero(self.field, 0),
        }
    }

    pub fn is_central(&self, z: &[Scalar]) -> bool {
        (0..self.dim).all(|i| {
            let e = self.basis_vector(i);
            self.mul(z, &e) == self.mul(&e, z)
        })
    }

    /// Subalgebra structure on a subspace closed under multiplication and
    /// containing the unit, in the subspace's canonical basis.
    pub fn subalgebra(&self, sub: &Subspace) -> Result<Algebra> {
        let inc = sub.inclusion();
        let d = sub.dim();
        let unit = sub
            .coordinates(&self.unit)
            .ok_or_else(|| Error::Precondition("subspace does not contain the unit".into()))?;
        let prod = &self.mult * &inc.kron(&inc);
        let mut mult = Matrix::zeros(self.field, d, d * d);
        for c in 0..d * d {
            let v = prod.column(c);
            let coords = sub
                .coordinates(&v)
                .ok_or_else(|| Error::Precondition("subspace not closed under product".into()))?;
            for (r, s) in coords.into_iter().enumerate() {
                mult.set(r, c, s);
            }
        }
        Algebra::new(self.field, default_labels(d), mult, unit)
    }

    pub fn verify(&self) -> AxiomReport {
        let n = self.dim;
        let i = self.identity();
        let mut r = AxiomReport::new();
        // columns (i,j,m) of (e_i e_j) e_m and e_i (e_j e_m)
        let lefts: Vec<Matrix> = (0..n)
            .map(|k| self.left_mult(&self.basis_vector(k)))
            .collect();
        let rights: Vec<Matrix> = (0..n)
            .map(|k| self.right_mult(&self.basis_vector(k)))
            .collect();
        let mut lcols = Vec::with_capacity(n * n * n);
        let mut rcols = Vec::with_capacity(n * n * n);
        for a in 0..n {
            for b in 0..n {
                let ab = self.mult.column(a * n + b);
                for c in 0..n {
                    lcols.push(rights[c].apply(&ab));
                    rcols.push(lefts[a].apply(&self.mult.column(b * n + c)));
                }
            }
        }
        let lhs = Matrix::from_columns(self.field, n, &lcols);
        let rhs = Matrix::from_columns(self.field, n, &rcols);
        r.push(Check::from_witness(
            "associativity",
            compare_named(&lhs, &rhs, &[n, n, n], &[n], &["i", "j", "m", "k"]),
        ));
        let u = self.unit_map();
        let left = &self.mult * &u.kron(&i);
        let right = &self.mult * &i.kron(&u);
        r.push(Check::from_witness(
            "left-unit",
            compare_named(&left, &i, &[n], &[n], &["i", "k"]),
        ));
        r.push(Check::from_witness(
            "right-unit",
            compare_named(&right, &i, &[n], &[n], &["i", "k"]),
        ));
        r
    }
}

/// A coassociative counital coalgebra.
#[derive(Clone, Debug)]
pub struct Coalgebra {
    pub field: Field,
    pub dim: usize,
    pub basis: Vec<String>,
    /// `m² × m`: column `i` holds the coordinates of `Δ(b_i)`.
    pub comult: Matrix,
    pub counit: Vec<Scalar>,
}

impl PartialEq for Coalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.comult == other.comult && self.counit == other.counit
    }
}

impl Coalgebra {
    pub fn new(
        field: Field,
        basis: Vec<String>,
        comult: Matrix,
        counit: Vec<Scalar>,
    ) -> Result<Coalgebra> {
        let m = counit.len();
        check_field(field, &comult)?;
        check_vec_field(field, &counit)?;
        if basis.len() != m {
            return dim_err(format!("{} basis labels for dimension {m}", basis.len()));
        }
        if comult.rows() != m * m || comult.cols() != m {
            return dim_err(format!(
                "comultiplication is {}x{}, expected {}x{m}",
                comult.rows(),
                comult.cols(),
                m * m
            ));
        }
        Ok(Coalgebra {
            field,
            dim: m,
            basis,
            comult,
            counit,
        })
    }

    pub fn counit_map(&self) -> Matrix {
        Matrix::row_vector(self.field, &self.counit)
    }

    pub fn verify(&self) -> AxiomReport {
        let m = self.dim;
        let i = Matrix::identity(self.field, m);
        let d = &self.comult;
        let mut r = AxiomReport::new();
        let lhs = &d.kron(&i) * d;
        let rhs = &i.kron(d) * d;
        r.push(Check::from_witness(
            "coassociativity",
            compare_named(&lhs, &rhs, &[m], &[m, m, m], &["i", "a", "b", "c"]),
        ));
        let e = self.counit_map();
        r.push(Check::from_witness(
            "left-counit",
            compare_named(&(&e.kron(&i) * d), &i, &[m], &[m], &["i", "k"]),
        ));
        r.push(Check::from_witness(
            "right-counit",
            compare_named(&(&i.kron(&e) * d), &i, &[m], &[m], &["i", "k"]),
        ));
        r
    }
}

/// A bialgebra with antipode. Bialgebras without a known antipode are
/// represented by [`HopfAlgebra::from_bialgebra`], which solves for it.
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    pub field: Field,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mult: Matrix,
    pub unit: Vec<Scalar>,
    pub comult: Matrix,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
    pub antipode_inverse: Option<Matrix>,
}

impl PartialEq for HopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl HopfAlgebra {
    pub fn new(
        algebra: Algebra,
        coalgebra: Coalgebra,
        antipode: Matrix,
        antipode_inverse: Option<Matrix>,
    ) -> Result<HopfAlgebra> {
        if algebra.field != coalgebra.field {
            return Err(Error::FieldMismatch(algebra.field, coalgebra.field));
        }
        let m = algebra.dim;
        if coalgebra.dim != m {
            return dim_err("algebra and coalgebra dimensions differ");
        }
        check_field(algebra.field, &antipode)?;
        if antipode.rows() != m || antipode.cols() != m {
            return dim_err("antipode must be square of the Hopf dimension");
        }
        if let Some(s) = &antipode_inverse {
            check_field(algebra.field, s)?;
            if s.rows() != m || s.cols() != m {
                return dim_err("inverse antipode must be square of the Hopf dimension");
            }
        }
        Ok(HopfAlgebra {
            field: algebra.field,
            dim: m,
            basis: algebra.basis,
            mult: algebra.mult,
            unit: algebra.unit,
            comult: coalgebra.comult,
            counit: coalgebra.counit,
            antipode,
            antipode_inverse,
        })
    }

    /// Completes a bialgebra by solving `Σ S(h₁) h₂ = ϵ(h) 1` for `S`, then
    /// checks the other antipode equation. Fails if no antipode exists.
    pub fn from_bialgebra(algebra: Algebra, coalgebra: Coalgebra) -> Result<HopfAlgebra> {
        let s = solve_antipode(&algebra, &coalgebra)?;
        let h = HopfAlgebra::new(algebra, coalgebra, s, None)?;
        let rep = h.verify();
        if let Some(c) = rep.failures().next() {
            return Err(Error::Invalid(format!(
                "computed antipode does not satisfy the Hopf axioms: {} fails",
                c.id
            )));
        }
        Ok(h)
    }

    pub fn algebra(&self) -> Algebra {
        Algebra {
            field: self.field,
            dim: self.dim,
            basis: self.basis.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
        }
    }

    pub fn coalgebra(&self) -> Coalgebra {
        Coalgebra {
            field: self.field,
            dim: self.dim,
            basis: self.basis.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
        }
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.field, self.dim)
    }

    pub fn unit_map(&self) -> Matrix {
        Matrix::column_vector(self.field, &self.unit)
    }

    pub fn counit_map(&self) -> Matrix {
        Matrix::row_vector(self.field, &self.counit)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        crate::exactlin::unit_vector(self.field, self.dim, i)
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        self.mult.apply(&crate::exactlin::tensor_vec(a, b))
    }

    pub fn counit_of(&self, h: &[Scalar]) -> Scalar {
        let mut acc = self.field.zero();
        for (a, b) in self.counit.iter().zip(h) {
            acc.add_mul(a, b);
        }
        acc
    }

    /// The inverse antipode, taken from the presentation or computed by
    /// matrix inversion.
    pub fn antipode_inverse(&self) -> Result<Matrix> {
        if let Some(s) = &self.antipode_inverse {
            return Ok(s.clone());
        }
        self.antipode
            .inverse()
            .ok_or_else(|| Error::NotInvertible("antipode".into()))
    }

    /// `μ_{H⊗H}`, the multiplication of `H ⊗ H`.
    pub fn tensor_square_mult(&self) -> Matrix {
        let a = self.algebra();
        a.tensor(&a).mult
    }

    pub fn is_commutative(&self) -> bool {
        self.algebra().is_commutative()
    }

    pub fn is_cocommutative(&self) -> bool {
        self.comult == &swap(self.field, self.dim, self.dim) * &self.comult
    }

    pub fn verify(&self) -> AxiomReport {
        let mut r = self.algebra().verify();
        r.extend(self.coalgebra().verify());
        let m = self.dim;
        let f = self.field;
        let i = self.identity();
        let d = &self.comult;
        let mu = &self.mult;
        // Δ ∘ μ = μ_{H⊗H} ∘ (Δ ⊗ Δ)
        let lhs = d * mu;
        let rhs = &self.tensor_square_mult() * &d.kron(d);
        r.push(Check::from_witness(
            "comult-multiplicative",
            compare_named(&lhs, &rhs, &[m, m], &[m, m], &["i", "j", "a", "b"]),
        ));
        let u = self.unit_map();
        r.push(Check::from_witness(
            "comult-unit",
            compare_named(&(d * &u), &u.kron(&u), &[1], &[m, m], &["-", "a", "b"]),
        ));
        let e = self.counit_map();
        r.push(Check::from_witness(
            "counit-multiplicative",
            compare_named(&(&e * mu), &e.kron(&e), &[m, m], &[1], &["i", "j", "-"]),
        ));
        r.push(Check::from_witness(
            "counit-unit",
            compare_named(&(&e * &u), &Matrix::identity(f, 1), &[1], &[1], &["-", "-"]),
        ));
        let s = &self.antipode;
        let ue = &u * &e;
        let left = &(mu * &s.kron(&i)) * d;
        let right = &(mu * &i.kron(s)) * d;
        r.push(Check::from_witness(
            "antipode-left",
            compare_named(&left, &ue, &[m], &[m], &["i", "k"]),
        ));
        r.push(Check::from_witness(
            "antipode-right",
            compare_named(&right, &ue, &[m], &[m], &["i", "k"]),
        ));
        if let Some(sb) = &self.antipode_inverse {
            r.push(Check::from_witness(
                "antipode-inverse",
                compare_named(&(s * sb), &i, &[m], &[m], &["i", "k"])
                    .or_else(|| compare_named(&(sb * s), &i, &[m], &[m], &["i", "k"])),
            ));
        }
        r
    }

    /// The dual Hopf algebra `H*` on the dual basis.
    pub fn dual(&self) -> HopfAlgebra {
        HopfAlgebra {
            field: self.field,
            dim: self.dim,
            basis: self.basis.iter().map(|b| format!("{b}*")).collect(),
            mult: self.comult.transpose(),
            unit: self.counit.clone(),
            comult: self.mult.transpose(),
            counit: self.unit.clone(),
            antipode: self.antipode.transpose(),
            antipode_inverse: self.antipode_inverse.as_ref().map(Matrix::transpose),
        }
    }

    fn with_inverse_antipode(&self) -> (Matrix, Matrix) {
        let sb = self
            .antipode_inverse()
            .expect("antipode of a finite-dimensional Hopf algebra is invertible");
        (sb, self.antipode.clone())
    }

    /// `H^cop`: reversed comultiplication, antipode `S̄`.
    pub fn cop(&self) -> HopfAlgebra {
        let (s, sb) = self.with_inverse_antipode();
        HopfAlgebra {
            comult: &swap(self.field, self.dim, self.dim) * &self.comult,
            antipode: s,
            antipode_inverse: Some(sb),
            ..self.clone()
        }
    }

    /// `H^op`: reversed multiplication, antipode `S̄`.
    pub fn op(&self) -> HopfAlgebra {
        let (s, sb) = self.with_inverse_antipode();
        HopfAlgebra {
            mult: &self.mult * &swap(self.field, self.dim, self.dim),
            antipode: s,
            antipode_inverse: Some(sb),
            ..self.clone()
        }
    }

    /// Whether every structure tensor agrees, ignoring labels and the
    /// optional stored inverse antipode.
    pub fn same_structure(&self, other: &HopfAlgebra) -> bool {
        self == other
    }
}

/// Solves the linear system `μ(S ⊗ id)Δ = u ϵ` for the matrix of `S`.
pub fn solve_antipode(algebra: &Algebra, coalgebra: &Coalgebra) -> Result<Matrix> {
    let f = algebra.field;
    let m = algebra.dim;
    if coalgebra.dim != m {
        return dim_err("algebra and coalgebra dimensions differ");
    }
    // Unknown S[r][a] (coefficient of b_r in S(b_a)) at index r*m + a.
    // Equation (k, t): Σ_{a,b,r} Δ^k_{ab} S[r][a] μ^t_{rb} = ϵ_k u_t.
    let mut sys = Matrix::zeros(f, m * m, m * m);
    let mut rhs = vec![f.zero(); m * m];
    for k in 0..m {
        for a in 0..m {
            for b in 0..m {
                let c = coalgebra.comult.get(a * m + b, k);
                if c.is_zero() {
                    continue;
                }
                for r in 0..m {
                    for t in 0..m {
                        let mu = algebra.mult.get(t, r * m + b);
                        if mu.is_zero() {
                            continue;
                        }
                        sys.entry_mut(k * m + t, r * m + a).add_mul(c, mu);
                    }
                }
            }
        }
        for t in 0..m {
            rhs[k * m + t] = &coalgebra.counit[k] * &algebra.unit[t];
        }
    }
    let x = sys
        .solve(&rhs)
        .ok_or_else(|| Error::Invalid("no antipode exists for this bialgebra".into()))?;
    Ok(Matrix::from_fn(f, m, m, |r, a| x[r * m + a].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perturbed_algebra_fails_associativity() {
        let h = sweedler4(Field::Rational).unwrap();
        let mut a = h.algebra();
        // bump the coefficient of b_2 in b_1 b_3
        let v = a.mult.get(2, 4 + 3) + &Field::Rational.one();
        a.mult.set(2, 4 + 3, v);
        let rep = a.verify();
        let c = rep.get("associativity").unwrap();
        assert!(!c.passed);
        assert_eq!(c.witness.as_ref().unwrap().names, vec!["i", "j", "m", "k"]);
    }

    #[test]
    fn center_of_matrix_algebra_is_scalars() {
        let m2 = matrix_algebra(Field::Rational, 2);
        assert_eq!(m2.center().dim(), 1);
        assert!(m2.verify().all_passed());
        let d = diagonal_algebra(Field::Rational, 3);
        assert_eq!(d.center().dim(), 3);
    }

    #[test]
    fn tensor_algebra_verifies() {
        let a = dual_numbers(Field::Rational);
        let b = matrix_algebra(Field::Rational, 2);
        assert!(a.tensor(&b).verify().all_passed());
    }

    #[test]
    fn change_basis_preserves_axioms() {
        let f = Field::Rational;
        let a = matrix_algebra(f, 2);
        let p = Matrix::from_ints(f, 4, 4, &[1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 2, 0, 0, 0, 1]);
        let b = a.change_basis(&p).unwrap();
        assert!(b.verify().all_passed());
        assert!(!b.is_commutative());
    }
}
