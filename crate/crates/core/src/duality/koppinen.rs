//! The left dual `*C` of the coring `C = A⊗H` and the Koppinen smash
//! product `#(H,A)` it induces on `Hom(H,A)`.

use serde::Serialize;

use super::{hom_matrix, hom_vec, restrict_map};
use crate::coactions::{
    build_coring, classify_coaction, verify_coring_axioms, CoactionMap, CoringCounit, CoringData,
    CoringMode,
};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, unit_vector, Matrix, Scalar, Subspace};
use crate::presentations::Algebra;
use crate::report::{compare_named, AxiomReport, Check};

/// Product tensor on `k^d` from a bilinear closure on basis indices.
fn product_tensor(
    f: crate::exactlin::Field,
    d: usize,
    prod: impl Fn(usize, usize) -> Vec<Scalar>,
) -> Matrix {
    let mut cols = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            cols.push(prod(i, j));
        }
    }
    Matrix::from_columns(f, d, &cols)
}

/// Induced product on a subspace closed under `product`, or `None`.
pub(crate) fn subalgebra_on(product: &Algebra, sub: &Subspace, unit: &[Scalar]) -> Option<Algebra> {
    let k = sub.dim();
    let unit = sub.coordinates(unit)?;
    let vecs = sub.vectors();
    let mut cols = Vec::with_capacity(k * k);
    for x in &vecs {
        for y in &vecs {
            cols.push(sub.coordinates(&product.mul(x, y))?);
        }
    }
    let labels = (0..k).map(|i| format!("u{i}")).collect();
    Algebra::new(
        product.field,
        labels,
        Matrix::from_columns(product.field, k, &cols),
        unit,
    )
    .ok()
}

/// `*C = {}_A Hom(C, A)`, coordinatized by `f ↦ f∘(η_A⊗H) ∈ Hom(H,A)`.
#[derive(Clone, Debug)]
pub struct DualRing {
    pub coring: CoringData,
    /// `(f#g)(c) = g(c₍₁₎f(c₍₂₎))`, with `η(1_A) = ε̲` recorded as unit.
    pub product: Algebra,
    /// `η(a) = ε̲·a`, i.e. `c ↦ ε̲(c)a`.
    pub unit_map: Matrix,
    /// `f ↦ 1_A·f = f(−·1_A)`.
    pub left_unit_action: Matrix,
    /// `1_A·*C`.
    pub underline: Subspace,
    /// `*(C1_A)` inside `Hom(C̲, A)`, an `n × dim C̲` matrix `g` at `r*k + j`.
    pub dual_of_underline: Subspace,
    /// `α(f) = f|_{C1_A}` in subspace coordinates.
    pub alpha: Matrix,
    /// `β(g)(c) = g(c1_A)` in subspace coordinates.
    pub beta: Matrix,
    pub report: AxiomReport,
    pub lax: bool,
    pub weak: bool,
}

/// Summary used by reports and the CLI.
#[derive(Clone, Debug, Serialize)]
pub struct DualRingSummary {
    pub dim: usize,
    pub underline_dim: usize,
    pub dual_of_underline_dim: usize,
    pub coring_underline_dim: usize,
    pub lax: bool,
    pub weak: bool,
    pub report: AxiomReport,
}

impl DualRing {
    pub fn summary(&self) -> DualRingSummary {
        DualRingSummary {
            dim: self.product.dim,
            underline_dim: self.underline.dim(),
            dual_of_underline_dim: self.dual_of_underline.dim(),
            coring_underline_dim: self.coring.underline_basis.dim(),
            lax: self.lax,
            weak: self.weak,
            report: self.report.clone(),
        }
    }
}

pub fn dual_ring_of_coring(d: &CoringData) -> Result<DualRing> {
    let c = &d.coaction;
    let flags = classify_coaction(c)?.flags;
    if !(flags.lax || flags.weak) {
        return Err(Error::Precondition(
            "the dual ring needs a lax or weak coaction".into(),
        ));
    }
    let (n, m, f) = (c.n(), c.m(), c.field());
    let nm = n * m;
    let alg = &c.algebra;
    // g ↦ 1⊗g
    let one_h = Matrix::column_vector(f, &alg.unit).kron(&c.hopf.identity());
    let id_nm = Matrix::identity(f, nm);
    let delta_one = &d.delta * &one_h;
    let to_c = |v: &[Scalar]| &alg.mult * &alg.identity().kron(&hom_matrix(v, n, m));

    // (x⊗y⊗g) ↦ (x⊗y)·f̂(g), then precomposed with h ↦ Δ(1⊗h)
    let mid: Vec<Matrix> = (0..nm)
        .map(|i| {
            let fhat = hom_matrix(&unit_vector(f, nm, i), n, m);
            let ract = &d.ah.mult * &id_nm.kron(&(&c.rho * &fhat));
            &ract * &delta_one
        })
        .collect();
    let basis_maps: Vec<Matrix> = (0..nm).map(|j| to_c(&unit_vector(f, nm, j))).collect();
    let mult = product_tensor(f, nm, |i, j| hom_vec(&(&basis_maps[j] * &mid[i])));

    let eps_hom = hom_vec(&(&d.eps_underline * &one_h));
    let unit_map = Matrix::from_columns(
        f,
        nm,
        &(0..n)
            .map(|a| {
                // c ↦ ε̲(c) a, on c = 1⊗h
                let ea = alg.basis_vector(a);
                let e = hom_matrix(&eps_hom, n, m);
                hom_vec(&(&alg.right_mult(&ea) * &e))
            })
            .collect::<Vec<_>>(),
    );
    let basis = (0..nm)
        .map(|i| format!("{}:{}*", alg.basis[i / m], c.hopf.basis[i % m]))
        .collect();
    let product = Algebra::new(f, basis, mult, unit_map.apply(&alg.unit))?;

    // (1_A·f)(1⊗h) = F(π(1⊗h))
    let pi_one = &d.pi * &one_h;
    let left_unit_action = Matrix::from_columns(
        f,
        nm,
        &(0..nm)
            .map(|i| hom_vec(&(&basis_maps[i] * &pi_one)))
            .collect::<Vec<_>>(),
    );
    let underline = left_unit_action.image();

    // Hom_A(C̲, A): g(a·c) = a g(c)
    let sub = &d.underline_basis;
    let k = sub.dim();
    let coord = sub.coordinate_map();
    let incl = sub.inclusion();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for i in 0..n {
        let ai = alg.basis_vector(i);
        let mi = &(&coord * &d.lact(&ai)) * &incl;
        let la = alg.left_mult(&ai);
        for j in 0..k {
            for r in 0..n {
                let mut row = vec![f.zero(); n * k];
                for l in 0..k {
                    let c = mi.get(l, j);
                    if !c.is_zero() {
                        row[r * k + l] = &row[r * k + l] + c;
                    }
                }
                for s in 0..n {
                    let c = la.get(r, s);
                    if !c.is_zero() {
                        row[s * k + j] = &row[s * k + j] - c;
                    }
                }
                rows.push(row);
            }
        }
    }
    let dual_of_underline = if rows.is_empty() || k == 0 {
        Subspace::full(f, n * k)
    } else {
        Matrix::from_rows(f, rows)?.kernel()
    };

    // α(f) = F∘incl, β(g) = g∘coord∘π on 1⊗h
    let alpha_full = Matrix::from_columns(
        f,
        n * k,
        &(0..nm)
            .map(|i| {
                let fi = &basis_maps[i] * &incl;
                (0..n * k).map(|x| fi.get(x / k, x % k).clone()).collect()
            })
            .collect::<Vec<_>>(),
    );
    let beta_full = Matrix::from_columns(
        f,
        nm,
        &(0..n * k)
            .map(|x| {
                let mut g = Matrix::zeros(f, n, k);
                g.set(x / k, x % k, f.one());
                hom_vec(&(&(&g * &coord) * &pi_one))
            })
            .collect::<Vec<_>>(),
    );
    let alpha = restrict_map(&alpha_full, &underline, &dual_of_underline)
        .ok_or_else(|| Error::TheoremViolation("α does not land in *(C1_A)".into()))?;
    let beta = restrict_map(&beta_full, &dual_of_underline, &underline)
        .ok_or_else(|| Error::TheoremViolation("β does not land in 1_A·*C".into()))?;

    let mut report = AxiomReport::new();
    report.push(
        product
            .verify()
            .get("associativity")
            .expect("always present")
            .clone(),
    );
    let one = &product.unit;
    let ku = underline.dim();
    let kd = dual_of_underline.dim();
    report.push(Check::boolean(
        "alpha-beta",
        &alpha * &beta == Matrix::identity(f, kd),
        None,
    ));
    report.push(Check::boolean(
        "beta-alpha",
        &beta * &alpha == Matrix::identity(f, ku),
        None,
    ));
    // 1.4.1 on 1_A·*C, 1.4.2 on all of *C
    let lax = underline
        .vectors()
        .iter()
        .all(|r| &product.mul(one, r) == r && &product.mul(r, one) == r);
    let weak = (0..nm).all(|i| {
        let r = unit_vector(f, nm, i);
        let r1 = left_unit_action.apply(&r);
        product.mul(one, &r) == r1 && product.mul(&r, one) == r1
    });
    report.push(Check::boolean("1.4.1", lax, None));
    report.push(Check::boolean("1.4.2", weak, None));
    Ok(DualRing {
        coring: d.clone(),
        product,
        unit_map,
        left_unit_action,
        underline,
        dual_of_underline,
        alpha,
        beta,
        report,
        lax,
        weak,
    })
}

/// Whether the ring verdicts of `*C` match the coring verdicts for `ε̲`.
pub fn dual_ring_matches_coring(r: &DualRing) -> Result<bool> {
    let lax =
        verify_coring_axioms(&r.coring, CoringMode::Lax, CoringCounit::Underline)?.all_passed();
    let weak =
        verify_coring_axioms(&r.coring, CoringMode::Weak, CoringCounit::Underline)?.all_passed();
    Ok((!lax || r.lax) && (!weak || r.weak))
}

/// `#(H,A)` with `(f#g)(h) = f(h₍₂₎)₍₀₎ g(h₍₁₎ f(h₍₂₎)₍₁₎)`.
#[derive(Clone, Debug)]
pub struct KoppinenSmash {
    pub coaction: CoactionMap,
    /// Product on `Hom(H,A)` with `η(1_A)` recorded as unit.
    pub product: Algebra,
    /// `η(a)(h) = ϵ(h a₍₁₎) a₍₀₎`.
    pub unit_map: Matrix,
    /// `f ↦ (h ↦ 1₍₀₎ f(h 1₍₁₎))`.
    pub projection: Matrix,
    pub underline: Subspace,
    pub underline_algebra: Option<Algebra>,
    pub report: AxiomReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct KoppinenSummary {
    pub dim: usize,
    pub underline_dim: usize,
    pub underline_unital: bool,
    pub report: AxiomReport,
}

impl KoppinenSmash {
    pub fn summary(&self) -> KoppinenSummary {
        KoppinenSummary {
            dim: self.product.dim,
            underline_dim: self.underline.dim(),
            underline_unital: self
                .underline_algebra
                .as_ref()
                .is_some_and(|u| u.verify().all_passed()),
            report: self.report.clone(),
        }
    }

    /// `f • g = g # f`.
    pub fn opposite(&self) -> Algebra {
        self.product.op()
    }
}

pub(crate) fn koppinen_product(c: &CoactionMap) -> Matrix {
    let (n, m, f) = (c.n(), c.m(), c.field());
    let nm = n * m;
    let hop = &c.hopf;
    let alg = &c.algebra;
    let delta: Vec<Vec<(usize, usize, Scalar)>> = (0..m)
        .map(|i| {
            (0..m * m)
                .filter_map(|r| {
                    let v = hop.comult.get(r, i);
                    (!v.is_zero()).then(|| (r / m, r % m, v.clone()))
                })
                .collect()
        })
        .collect();
    product_tensor(f, nm, |fi, gi| {
        let fh = hom_matrix(&unit_vector(f, nm, fi), n, m);
        let gh = hom_matrix(&unit_vector(f, nm, gi), n, m);
        let mut out = Matrix::zeros(f, n, m);
        for (i, terms) in delta.iter().enumerate() {
            let mut col = vec![f.zero(); n];
            for (j, l, c2) in terms {
                // ρ(f(h₍₂₎))
                let r = c.apply(&fh.column(*l));
                for x in 0..n {
                    for y in 0..m {
                        let coef = &r[x * m + y];
                        if coef.is_zero() {
                            continue;
                        }
                        let hy = hop.mul(&hop.basis_vector(*j), &hop.basis_vector(y));
                        let v = alg.mul(&alg.basis_vector(x), &gh.apply(&hy));
                        axpy(&mut col, &(c2 * coef), &v);
                    }
                }
            }
            for (r, v) in col.into_iter().enumerate() {
                out.set(r, i, v);
            }
        }
        hom_vec(&out)
    })
}

/// `η(a)(h) = ϵ(h a₍₁₎) a₍₀₎`.
fn koppinen_unit_map(c: &CoactionMap) -> Matrix {
    let (n, m, f) = (c.n(), c.m(), c.field());
    let hop = &c.hopf;
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|a| {
            let r = c.apply(&c.algebra.basis_vector(a));
            let mut out = Matrix::zeros(f, n, m);
            for h in 0..m {
                for x in 0..n {
                    let mut s = f.zero();
                    for y in 0..m {
                        let coef = &r[x * m + y];
                        if !coef.is_zero() {
                            let hy = hop.mul(&hop.basis_vector(h), &hop.basis_vector(y));
                            s.add_mul(coef, &hop.counit_of(&hy));
                        }
                    }
                    out.set(x, h, s);
                }
            }
            hom_vec(&out)
        })
        .collect();
    Matrix::from_columns(f, n * m, &cols)
}

/// `f ↦ (h ↦ 1₍₀₎ f(h 1₍₁₎))`.
fn koppinen_projection(c: &CoactionMap) -> Matrix {
    let (n, m, f) = (c.n(), c.m(), c.field());
    let nm = n * m;
    let hop = &c.hopf;
    let alg = &c.algebra;
    let r1 = c.apply(&alg.unit);
    let cols: Vec<Vec<Scalar>> = (0..nm)
        .map(|fi| {
            let fh = hom_matrix(&unit_vector(f, nm, fi), n, m);
            let mut out = Matrix::zeros(f, n, m);
            for h in 0..m {
                let mut col = vec![f.zero(); n];
                for x in 0..n {
                    for y in 0..m {
                        let coef = &r1[x * m + y];
                        if coef.is_zero() {
                            continue;
                        }
                        let hy = hop.mul(&hop.basis_vector(h), &hop.basis_vector(y));
                        axpy(
                            &mut col,
                            coef,
                            &alg.mul(&alg.basis_vector(x), &fh.apply(&hy)),
                        );
                    }
                }
                for (r, v) in col.into_iter().enumerate() {
                    out.set(r, h, v);
                }
            }
            hom_vec(&out)
        })
        .collect();
    Matrix::from_columns(f, nm, &cols)
}

/// Builds `#(H,A)` from its explicit formulas and checks it against the
/// dual ring `*C` transported along `f ↦ f∘(η_A⊗H)`.
pub fn build_koppinen(c: &CoactionMap) -> Result<KoppinenSmash> {
    let flags = classify_coaction(c)?.flags;
    if !(flags.lax || flags.weak) {
        return Err(Error::Precondition(
            "the Koppinen smash needs a lax or weak coaction".into(),
        ));
    }
    let (n, m, f) = (c.n(), c.m(), c.field());
    let nm = n * m;
    let mult = koppinen_product(c);
    let unit_map = koppinen_unit_map(c);
    let basis = (0..nm)
        .map(|i| format!("{}:{}*", c.algebra.basis[i / m], c.hopf.basis[i % m]))
        .collect();
    let product = Algebra::new(f, basis, mult, unit_map.apply(&c.algebra.unit))?;
    let projection = koppinen_projection(c);
    let underline = projection.image();
    let underline_algebra = subalgebra_on(&product, &underline, &product.unit);

    let dual = dual_ring_of_coring(&build_coring(c)?)?;
    let mut report = AxiomReport::new();
    report.push(
        product
            .verify()
            .get("associativity")
            .expect("always present")
            .clone(),
    );
    report.push(Check::from_witness(
        "dual-ring-product",
        compare_named(
            &product.mult,
            &dual.product.mult,
            &[n, m, n, m],
            &[n, m],
            &["f_a", "f_h", "g_a", "g_h", "out_a", "out_h"],
        ),
    ));
    report.push(Check::from_witness(
        "dual-ring-unit",
        compare_named(
            &unit_map,
            &dual.unit_map,
            &[n],
            &[n, m],
            &["a", "out_a", "out_h"],
        ),
    ));
    report.push(Check::boolean(
        "dual-ring-underline",
        underline == dual.underline,
        None,
    ));
    report.push(Check::boolean(
        "underline-closed",
        underline_algebra.is_some(),
        None,
    ));
    if let Some(u) = &underline_algebra {
        let r = u.verify();
        for id in ["left-unit", "right-unit"] {
            let mut ch = r.get(id).expect("always present").clone();
            ch.id = format!("underline-{id}");
            report.push(ch);
        }
    }
    Ok(KoppinenSmash {
        coaction: c.clone(),
        product,
        unit_map,
        projection,
        underline,
        underline_algebra,
        report,
    })
}
