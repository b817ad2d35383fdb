//! The smash product `A#H` on `A⊗H`,
//! `(a#h)(b#g) = a(h₁·b) # h₂g`, and its unital part `(A#H)1_A`.

use super::{classify_action, ActionMap};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, tensor_vec, Matrix, Scalar, Subspace};
use crate::presentations::Algebra;
use crate::report::{compare_named, AxiomReport, Check};

#[derive(Clone, Debug)]
pub struct SmashData {
    pub action: ActionMap,
    /// `A#H` with `1#1` recorded as its unit; the unit axioms hold only
    /// for genuine module algebras.
    pub product: Algebra,
    /// `η(a) = a#1`.
    pub eta: Matrix,
    /// `η̲ = π∘η`.
    pub eta_underline: Matrix,
    /// `x ↦ x·1_A = x(1#1)`.
    pub pi: Matrix,
    pub underline: Subspace,
    /// Product on `underline` in its canonical basis, with unit `η̲(1)`.
    /// `None` when the image of `π` is not closed under the product.
    pub underline_algebra: Option<Algebra>,
}

pub fn build_smash(a: &ActionMap) -> Result<SmashData> {
    let ctx = a.context();
    if let Some(w) = ctx.equation("4.1.0")? {
        return Err(Error::Precondition(format!(
            "the smash product is not well defined (4.1.0 fails at {w})"
        )));
    }
    let (n, m, f) = (ctx.n, ctx.m, ctx.f);
    let alg = &a.algebra;
    let hop = &a.hopf;
    let d = n * m;
    let mut mult = Matrix::zeros(f, d, d * d);
    let act_b: Vec<Vec<Vec<Scalar>>> = (0..m)
        .map(|h| {
            (0..n)
                .map(|b| ctx.k[h].apply(&alg.basis_vector(b)))
                .collect()
        })
        .collect();
    for ai in 0..n {
        let ea = alg.basis_vector(ai);
        for h in 0..m {
            for b in 0..n {
                for g in 0..m {
                    let mut out = vec![f.zero(); d];
                    for (h1, h2, c) in &ctx.delta[h] {
                        let left = alg.mul(&ea, &act_b[*h1][b]);
                        let right = hop.mul(&hop.basis_vector(*h2), &hop.basis_vector(g));
                        axpy(&mut out, c, &tensor_vec(&left, &right));
                    }
                    let col = (ai * m + h) * d + b * m + g;
                    for (r, v) in out.into_iter().enumerate() {
                        mult.set(r, col, v);
                    }
                }
            }
        }
    }
    let basis = (0..d)
        .map(|i| format!("{}#{}", alg.basis[i / m], hop.basis[i % m]))
        .collect();
    let one = tensor_vec(&alg.unit, &hop.unit);
    let product = Algebra::new(f, basis, mult, one.clone())?;
    let eta = alg.identity().kron(&Matrix::column_vector(f, &hop.unit));
    let pi = product.right_mult(&one);
    let eta_underline = &pi * &eta;
    let underline = pi.image();
    let underline_algebra =
        underline_product(&product, &underline, &eta_underline.apply(&alg.unit));
    Ok(SmashData {
        action: a.clone(),
        product,
        eta,
        eta_underline,
        pi,
        underline,
        underline_algebra,
    })
}

fn underline_product(product: &Algebra, sub: &Subspace, unit: &[Scalar]) -> Option<Algebra> {
    let k = sub.dim();
    let unit = sub.coordinates(unit)?;
    let mut mult = Matrix::zeros(product.field, k, k * k);
    let vecs = sub.vectors();
    for i in 0..k {
        for j in 0..k {
            let v = product.mul(&vecs[i], &vecs[j]);
            let c = sub.coordinates(&v)?;
            for (r, s) in c.into_iter().enumerate() {
                mult.set(r, i * k + j, s);
            }
        }
    }
    let labels = (0..k).map(|i| format!("u{i}")).collect();
    Algebra::new(product.field, labels, mult, unit).ok()
}

/// Associativity of `A#H`, idempotence of `π`, and when the action is lax,
/// that `(A#H)1_A` with `η̲` is a unital ring receiving an algebra map
/// from `A`.
pub fn verify_smash(d: &SmashData) -> Result<AxiomReport> {
    let mut report = AxiomReport::new();
    let f = d.product.field;
    let full = d.product.verify();
    report.push(full.get("associativity").expect("always present").clone());
    report.push(Check::boolean("pi-idempotent", &d.pi * &d.pi == d.pi, None));
    report.push(Check::boolean(
        "underline-closed",
        d.underline_algebra.is_some(),
        None,
    ));
    if !classify_action(&d.action)?.flags.lax {
        return Ok(report);
    }
    let Some(u) = &d.underline_algebra else {
        return Ok(report);
    };
    let ur = u.verify();
    for id in ["left-unit", "right-unit"] {
        let mut c = ur.get(id).expect("always present").clone();
        c.id = format!("underline-{id}");
        report.push(c);
    }
    // η̲(ab) = η̲(a)η̲(b)
    let alg = &d.action.algebra;
    let n = alg.dim;
    let dim = d.product.dim;
    let mut lcols = Vec::with_capacity(n * n);
    let mut rcols = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let ab = alg.mul(&alg.basis_vector(i), &alg.basis_vector(j));
            lcols.push(d.eta_underline.apply(&ab));
            rcols.push(
                d.product
                    .mul(&d.eta_underline.column(i), &d.eta_underline.column(j)),
            );
        }
    }
    let lhs = Matrix::from_columns(f, dim, &lcols);
    let rhs = Matrix::from_columns(f, dim, &rcols);
    report.push(Check::from_witness(
        "eta-multiplicative",
        compare_named(&lhs, &rhs, &[n, n], &[dim], &["a", "b", "out"]),
    ));
    Ok(report)
}
