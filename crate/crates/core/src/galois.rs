//! Coinvariants `T = A^coH`, the canonical map `A⊗_T A → C̲`, the map
//! `θ` into `End_T(A)`, and the Morita context `(T, #̲(H,A), A, Q, τ, μ)`
//! of a partial coaction. Over a field the three verdicts are decided by
//! ranks and must agree.
//!
//! `End(A)` is flattened row-major: the entry `(r, c)` of a matrix has
//! coordinate `r*n + c`.

use serde::Serialize;

use crate::coactions::{build_coring, classify_coaction, grouplike_of, CoactionMap};
use crate::duality::{coaction_to_action, hom_matrix, prop410_iso, SmashIso};
use crate::error::{Error, Result};
use crate::exactlin::{axpy, tensor_vec, Field, Matrix, Scalar, Subspace};
use crate::frobenius::{check_cocommutativity_534, frobenius_pair};
use crate::par::{self, Execution};
use crate::presentations::Algebra;
use crate::report::{compare_named, AxiomReport, Check};
use crate::tensor_over::TensorOverSub;

fn require_partial(c: &CoactionMap, what: &str) -> Result<()> {
    if classify_coaction(c)?.flags.partial {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what} needs a partial coaction"
        )))
    }
}

fn kernel_of(field: Field, ambient: usize, blocks: &[Matrix]) -> Subspace {
    let mut stacked: Option<Matrix> = None;
    for b in blocks.iter().filter(|b| b.rows() > 0) {
        stacked = Some(match stacked {
            None => b.clone(),
            Some(s) => s.vstack(b),
        });
    }
    match stacked {
        Some(s) => s.kernel(),
        None => Subspace::full(field, ambient),
    }
}

fn flatten(m: &Matrix) -> Vec<Scalar> {
    m.entries().to_vec()
}

/// `T = {b : ρ(b) = (b⊗1)ρ(1_A)}` with its induced algebra structure.
#[derive(Clone, Debug)]
pub struct Coinvariants {
    pub basis: Subspace,
    pub algebra: Algebra,
}

impl Coinvariants {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// `(X, X t_k)` right multiplications by a basis of `T` inside `A`.
    fn right_mults(&self, a: &Algebra) -> Vec<Matrix> {
        self.basis
            .vectors()
            .iter()
            .map(|t| a.right_mult(t))
            .collect()
    }

    fn left_mults(&self, a: &Algebra) -> Vec<Matrix> {
        self.basis
            .vectors()
            .iter()
            .map(|t| a.left_mult(t))
            .collect()
    }
}

pub fn coinvariants(c: &CoactionMap) -> Result<Coinvariants> {
    require_partial(c, "coinvariants")?;
    let (n, m, f) = (c.n(), c.m(), c.field());
    let ah = c.algebra.tensor(&c.hopf.algebra());
    let x = c.apply(&c.algebra.unit);
    let cols: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let b = c.algebra.basis_vector(i);
            let rhs = ah.mul(&tensor_vec(&b, &c.hopf.unit), &x);
            c.apply(&b).iter().zip(&rhs).map(|(l, r)| l - r).collect()
        })
        .collect();
    let basis = Matrix::from_columns(f, n * m, &cols).kernel();
    let algebra = c
        .algebra
        .subalgebra(&basis)
        .map_err(|e| Error::Internal(format!("coinvariants are not a subalgebra: {e}")))?;
    Ok(Coinvariants { basis, algebra })
}

/// `A ⊗_T A` as a quotient of `A⊗A`.
pub fn tensor_over_coinvariants(c: &CoactionMap, t: &Coinvariants) -> Result<TensorOverSub> {
    let a = &c.algebra;
    TensorOverSub::new(c.field(), a.dim, a.dim, &t.right_mults(a), &t.left_mults(a))
}

/// `can(a⊗b) = a b₍₀₎ ⊗ b₍₁₎` from `A⊗_T A` to `C̲ = (A⊗H)ρ(1)`.
#[derive(Clone, Debug)]
pub struct CanonicalMap {
    pub t: Coinvariants,
    pub quotient: TensorOverSub,
    pub underline: Subspace,
    /// In quotient coordinates on the right and underline coordinates on
    /// the left.
    pub matrix: Matrix,
    pub rank: usize,
    pub report: AxiomReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct CanSummary {
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub rank: usize,
    pub injective: bool,
    pub surjective: bool,
    pub bijective: bool,
}

impl CanonicalMap {
    pub fn injective(&self) -> bool {
        self.rank == self.quotient.dim()
    }

    pub fn surjective(&self) -> bool {
        self.rank == self.underline.dim()
    }

    pub fn bijective(&self) -> bool {
        self.injective() && self.surjective()
    }

    pub fn summary(&self) -> CanSummary {
        CanSummary {
            domain_dim: self.quotient.dim(),
            codomain_dim: self.underline.dim(),
            rank: self.rank,
            injective: self.injective(),
            surjective: self.surjective(),
            bijective: self.bijective(),
        }
    }
}

pub fn canonical_map(c: &CoactionMap) -> Result<CanonicalMap> {
    let t = coinvariants(c)?;
    let (n, m, f) = (c.n(), c.m(), c.field());
    let quotient = tensor_over_coinvariants(c, &t)?;
    let underline = build_coring(c)?.underline_basis;
    let ah = c.algebra.tensor(&c.hopf.algebra());
    let rho: Vec<Vec<Scalar>> = (0..n)
        .map(|b| c.apply(&c.algebra.basis_vector(b)))
        .collect();
    let mut cols = Vec::with_capacity(n * n);
    for a in 0..n {
        let left = tensor_vec(&c.algebra.basis_vector(a), &c.hopf.unit);
        for r in &rho {
            cols.push(ah.mul(&left, r));
        }
    }
    let full = Matrix::from_columns(f, n * m, &cols);
    let mut report = AxiomReport::new();
    report.push(Check::boolean(
        "can-balanced",
        quotient.descends(&full),
        None,
    ));
    let inside = cols.iter().all(|v| underline.contains(v));
    report.push(Check::boolean("can-lands-in-underline", inside, None));
    if !(report.all_passed()) {
        return Err(Error::Internal(format!(
            "canonical map is not well defined\n{report}"
        )));
    }
    let matrix = &(&underline.coordinate_map() * &full) * &quotient.section();
    let rank = matrix.rank();
    Ok(CanonicalMap {
        t,
        quotient,
        underline,
        matrix,
        rank,
        report,
    })
}

/// `End_T(A)`: maps commuting with left multiplication by `T`.
pub fn t_linear_endomorphisms(a: &Algebra, t: &Coinvariants) -> Subspace {
    let (n, f) = (a.dim, a.field);
    let blocks: Vec<Matrix> = t
        .left_mults(a)
        .iter()
        .map(|lt| {
            let cols: Vec<Vec<Scalar>> = (0..n * n)
                .map(|k| {
                    let mut e = Matrix::zeros(f, n, n);
                    e.set(k / n, k % n, f.one());
                    flatten(&(&(&e * lt) - &(lt * &e)))
                })
                .collect();
            Matrix::from_columns(f, n * n, &cols)
        })
        .collect();
    kernel_of(f, n * n, &blocks)
}

/// `*can(f)(a) = a₍₀₎ f(a₍₁₎)` from `Hom(H,A)` into `End(A)`.
pub fn star_can(c: &CoactionMap) -> Matrix {
    let (n, m, f) = (c.n(), c.m(), c.field());
    let rho: Vec<Vec<Scalar>> = (0..n)
        .map(|b| c.apply(&c.algebra.basis_vector(b)))
        .collect();
    let cols: Vec<Vec<Scalar>> = (0..n * m)
        .map(|fi| {
            let fh = hom_matrix(&crate::exactlin::unit_vector(f, n * m, fi), n, m);
            let mut out = Matrix::zeros(f, n, n);
            for (b, r) in rho.iter().enumerate() {
                let mut col = vec![f.zero(); n];
                for x in 0..n {
                    for y in 0..m {
                        let coef = &r[x * m + y];
                        if !coef.is_zero() {
                            let v = c.algebra.mul(&c.algebra.basis_vector(x), &fh.column(y));
                            axpy(&mut col, coef, &v);
                        }
                    }
                }
                for (row, v) in col.into_iter().enumerate() {
                    out.set(row, b, v);
                }
            }
            flatten(&out)
        })
        .collect();
    Matrix::from_columns(f, n * n, &cols)
}

/// `θ(a#h*)(b) = h*(b₍₁₎) b₍₀₎ a` on `A^op # H^{*cop}`, into `End(A)`.
fn theta_full(c: &CoactionMap) -> Matrix {
    let (n, m, f) = (c.n(), c.m(), c.field());
    let cols: Vec<Vec<Scalar>> = (0..n * m)
        .map(|z| {
            let (a, j) = (z / m, z % m);
            let ea = c.algebra.basis_vector(a);
            let mut out = Matrix::zeros(f, n, n);
            for b in 0..n {
                let mut col = vec![f.zero(); n];
                for x in 0..n {
                    let coef = c.rho.get(x * m + j, b);
                    if !coef.is_zero() {
                        axpy(
                            &mut col,
                            coef,
                            &c.algebra.mul(&c.algebra.basis_vector(x), &ea),
                        );
                    }
                }
                for (row, v) in col.into_iter().enumerate() {
                    out.set(row, b, v);
                }
            }
            flatten(&out)
        })
        .collect();
    Matrix::from_columns(f, n * n, &cols)
}

/// `θ: (A^op # H^{*cop})1_A → End_T(A)`.
#[derive(Clone, Debug)]
pub struct ThetaMap {
    pub domain: Subspace,
    pub end_t: Subspace,
    /// `θ` on all of `A^op # H^{*cop}`, valued in `End(A)`.
    pub full: Matrix,
    /// Restriction to the underline, in the canonical bases of both sides.
    pub matrix: Matrix,
    pub rank: usize,
    pub report: AxiomReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct ThetaSummary {
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub rank: usize,
    pub bijective: bool,
}

impl ThetaMap {
    pub fn bijective(&self) -> bool {
        self.rank == self.domain.dim() && self.rank == self.end_t.dim()
    }

    pub fn summary(&self) -> ThetaSummary {
        ThetaSummary {
            domain_dim: self.domain.dim(),
            codomain_dim: self.end_t.dim(),
            rank: self.rank,
            bijective: self.bijective(),
        }
    }
}

pub fn theta_map(c: &CoactionMap) -> Result<ThetaMap> {
    require_partial(c, "theta")?;
    let t = coinvariants(c)?;
    let iso = prop410_iso(c)?;
    theta_from(c, &t, &iso)
}

fn theta_from(c: &CoactionMap, t: &Coinvariants, iso: &SmashIso) -> Result<ThetaMap> {
    let n = c.n();
    let full = theta_full(c);
    let end_t = t_linear_endomorphisms(&c.algebra, t);
    let domain = iso.smash.underline.clone();
    let mut report = AxiomReport::new();
    let via_star = &star_can(c) * &iso.alpha;
    report.push(Check::from_witness(
        "theta-star-can",
        compare_named(
            &full,
            &via_star,
            &[n, c.m()],
            &[n, n],
            &["a", "h*", "row", "col"],
        ),
    ));
    let images: Vec<Vec<Scalar>> = domain.vectors().iter().map(|v| full.apply(v)).collect();
    report.push(Check::boolean(
        "theta-t-linear",
        images.iter().all(|v| end_t.contains(v)),
        None,
    ));
    if !report.all_passed() {
        return Err(Error::Internal(format!("θ is not well defined\n{report}")));
    }
    let matrix = Matrix::from_columns(
        c.field(),
        end_t.dim(),
        &images
            .iter()
            .map(|v| end_t.coordinates(v).expect("checked above"))
            .collect::<Vec<_>>(),
    );
    let rank = matrix.rank();
    Ok(ThetaMap {
        domain,
        end_t,
        full,
        matrix,
        rank,
        report,
    })
}

/// The Morita context `(T, #̲(H,A), A, Q, τ, μ)`.
#[derive(Clone, Debug)]
pub struct MoritaContext {
    pub t: Coinvariants,
    /// `#̲(H,A)` inside `Hom(H,A)`.
    pub ring: Subspace,
    pub ring_unit: Vec<Scalar>,
    /// `Q` inside `Hom(H,A)`.
    pub q: Subspace,
    /// `Q` cut out in `A^op # H^{*cop}` coordinates.
    pub q_alternative: Subspace,
    /// `τ(a⊗q) = a₍₀₎ q(a₍₁₎)` on `A ⊗ Q`, valued in `A`.
    pub tau: Matrix,
    /// `μ(q⊗a)(h) = q(h) a` on `Q ⊗ A`, valued in `Hom(H,A)`.
    pub mu: Matrix,
    pub tau_surjective: bool,
    pub mu_surjective: bool,
    /// `dim Q = dim A`, decided only when `H` is Frobenius and the
    /// hypotheses under which `Q ≅ A` hold are met.
    pub q_matches_a: Option<bool>,
    pub report: AxiomReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct MoritaSummary {
    pub t_dim: usize,
    pub ring_dim: usize,
    pub q_dim: usize,
    pub tau_rank: usize,
    pub mu_rank: usize,
    pub tau_surjective: bool,
    pub mu_surjective: bool,
    pub strict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_matches_a: Option<bool>,
    pub report: AxiomReport,
}

impl MoritaContext {
    pub fn strict(&self) -> bool {
        self.tau_surjective && self.mu_surjective
    }

    pub fn summary(&self) -> MoritaSummary {
        MoritaSummary {
            t_dim: self.t.dim(),
            ring_dim: self.ring.dim(),
            q_dim: self.q.dim(),
            tau_rank: self.tau.rank(),
            mu_rank: self.mu.rank(),
            tau_surjective: self.tau_surjective,
            mu_surjective: self.mu_surjective,
            strict: self.strict(),
            q_matches_a: self.q_matches_a,
            report: self.report.clone(),
        }
    }
}

/// `q(h₍₂₎)₍₀₎ ⊗ h₍₁₎ q(h₍₂₎)₍₁₎ − q(h) x` for every basis `h_i`, stacked.
fn q_condition_732(c: &CoactionMap, x: &[Scalar]) -> Matrix {
    let (n, m, f) = (c.n(), c.m(), c.field());
    let nm = n * m;
    let hop = &c.hopf;
    let ah = c.algebra.tensor(&hop.algebra());
    let cols: Vec<Vec<Scalar>> = (0..nm)
        .map(|fi| {
            let fh = hom_matrix(&crate::exactlin::unit_vector(f, nm, fi), n, m);
            let rq: Vec<Vec<Scalar>> = (0..m).map(|l| c.apply(&fh.column(l))).collect();
            let mut out = Vec::with_capacity(m * nm);
            for i in 0..m {
                let mut lhs = vec![f.zero(); nm];
                for j in 0..m {
                    for l in 0..m {
                        let coef = hop.comult.get(j * m + l, i);
                        if coef.is_zero() {
                            continue;
                        }
                        for (idx, v) in rq[l].iter().enumerate() {
                            if v.is_zero() {
                                continue;
                            }
                            let (ax, y) = (idx / m, idx % m);
                            let hy = hop.mul(&hop.basis_vector(j), &hop.basis_vector(y));
                            let term = tensor_vec(&c.algebra.basis_vector(ax), &hy);
                            axpy(&mut lhs, &(coef * v), &term);
                        }
                    }
                }
                let rhs = ah.mul(&tensor_vec(&fh.column(i), &hop.unit), x);
                out.extend(lhs.iter().zip(&rhs).map(|(l, r)| l - r));
            }
            out
        })
        .collect();
    Matrix::from_columns(f, m * nm, &cols)
}

/// The condition with `h*` ranging over the dual basis, in
/// `A^op # H^{*cop}` coordinates:
/// `h*₍₂₎⇀a # h*₍₁₎g* − a(h*₍₁₎⇀1) # h*₍₂₎(1_H) g*`, with Sweedler indices
/// taken in `H*`.
fn q_condition_734(c: &CoactionMap) -> Result<Matrix> {
    let (n, m, f) = (c.n(), c.m(), c.field());
    let nm = n * m;
    let action = coaction_to_action(c)?;
    let dual = c.hopf.dual();
    let alg = &c.algebra;
    let acts: Vec<Matrix> = (0..m).map(|j| action.by_basis(j)).collect();
    let one_acted: Vec<Vec<Scalar>> = acts.iter().map(|k| k.apply(&alg.unit)).collect();
    // φ_p(1_H)
    let at_one: Vec<Scalar> = (0..m).map(|p| c.hopf.unit[p].clone()).collect();
    let cols: Vec<Vec<Scalar>> = (0..nm)
        .map(|z| {
            let (a, j) = (z / m, z % m);
            let ea = alg.basis_vector(a);
            let gj = dual.basis_vector(j);
            let mut out = Vec::with_capacity(m * nm);
            for k in 0..m {
                let mut diff = vec![f.zero(); nm];
                for p in 0..m {
                    for r in 0..m {
                        let coef = dual.comult.get(p * m + r, k);
                        if coef.is_zero() {
                            continue;
                        }
                        let lhs =
                            tensor_vec(&acts[r].apply(&ea), &dual.mul(&dual.basis_vector(p), &gj));
                        axpy(&mut diff, coef, &lhs);
                        let rhs = tensor_vec(&alg.mul(&ea, &one_acted[p]), &gj);
                        axpy(&mut diff, &-&(coef * &at_one[r]), &rhs);
                    }
                }
                out.extend(diff);
            }
            out
        })
        .collect();
    Ok(Matrix::from_columns(f, m * nm, &cols))
}

/// Whether the hypotheses under which `Q ≅ A` hold are met: `H` Frobenius
/// with an integral satisfying the cocommutativity condition,
/// `a1₍₀₎⊗1₍₁₎ = 1₍₀₎a⊗1₍₁₎` for all `a`, and
/// `φ(hgh'g') = φ(hh'gg')` on basis elements.
pub fn q_iso_a_hypotheses(c: &CoactionMap) -> bool {
    let Ok(fd) = frobenius_pair(&c.hopf) else {
        return false;
    };
    if !check_cocommutativity_534(&c.hopf, &fd.t).passed {
        return false;
    }
    let ah = c.algebra.tensor(&c.hopf.algebra());
    let x = c.apply(&c.algebra.unit);
    let central = (0..c.n()).all(|a| {
        let e = tensor_vec(&c.algebra.basis_vector(a), &c.hopf.unit);
        ah.mul(&e, &x) == ah.mul(&x, &e)
    });
    if !central {
        return false;
    }
    let h = &c.hopf;
    let m = h.dim;
    let phi = |v: &[Scalar]| -> Scalar {
        let mut s = h.field.zero();
        for (a, b) in fd.phi.iter().zip(v) {
            s.add_mul(a, b);
        }
        s
    };
    let prod = |xs: [usize; 4]| {
        xs[1..].iter().fold(h.basis_vector(xs[0]), |acc, &i| {
            h.mul(&acc, &h.basis_vector(i))
        })
    };
    (0..m * m * m * m).all(|k| {
        let (a, b, cc, d) = (k / (m * m * m), (k / (m * m)) % m, (k / m) % m, k % m);
        phi(&prod([a, b, cc, d])) == phi(&prod([a, cc, b, d]))
    })
}

pub fn morita_context(c: &CoactionMap) -> Result<MoritaContext> {
    require_partial(c, "the Morita context")?;
    let t = coinvariants(c)?;
    let iso = prop410_iso(c)?;
    morita_from(c, &t, &iso)
}

fn morita_from(c: &CoactionMap, t: &Coinvariants, iso: &SmashIso) -> Result<MoritaContext> {
    let (n, m, f) = (c.n(), c.m(), c.field());
    let nm = n * m;
    let kop = &iso.koppinen;
    let x = grouplike_of(c)?.vector;
    let id = Matrix::identity(f, nm);

    let cond731 = &kop.projection - &id;
    let q = kernel_of(f, nm, &[cond731, q_condition_732(c, &x)]);
    let cond733 = &iso.smash.pi - &id;
    let q_alternative = kernel_of(f, nm, &[cond733, q_condition_734(c)?]);

    let mut report = AxiomReport::new();
    report.push(Check::boolean(
        "grouplike",
        x == c.apply(&c.algebra.unit),
        None,
    ));
    report.push(Check::boolean(
        "q-descriptions-agree",
        q_alternative.map(&iso.alpha) == q,
        Some(format!("dims {} and {}", q.dim(), q_alternative.dim())),
    ));

    let ring = kop.underline.clone();
    let ring_unit = kop.projection.apply(&kop.product.unit);
    let qv = q.vectors();
    let left_closed = ring
        .vectors()
        .iter()
        .all(|r| qv.iter().all(|v| q.contains(&kop.product.mul(r, v))));
    report.push(Check::boolean("q-left-closed", left_closed, None));
    let right_closed = t.basis.vectors().iter().all(|tv| {
        let rt = c.algebra.right_mult(tv);
        qv.iter()
            .all(|v| q.contains(&flatten(&(&rt * &hom_matrix(v, n, m)))))
    });
    report.push(Check::boolean("q-right-closed", right_closed, None));

    // τ(e_a ⊗ q_k) in column a*dim Q + k
    let sc = star_can(c);
    let mut tau_cols = Vec::with_capacity(n * qv.len());
    for a in 0..n {
        for v in &qv {
            let end = hom_matrix(&sc.apply(v), n, n);
            tau_cols.push(end.column(a));
        }
    }
    let tau = Matrix::from_columns(f, n, &tau_cols);
    let tau_image = Subspace::span(f, n, &tau_cols);
    report.push(Check::boolean(
        "tau-lands-in-t",
        t.basis.contains_subspace(&tau_image),
        None,
    ));
    let tau_surjective = tau_image == t.basis;
    // q(1_H) = 1_A is solvable over Q
    let eval_one = Matrix::from_columns(
        f,
        n,
        &qv.iter()
            .map(|v| hom_matrix(v, n, m).apply(&c.hopf.unit))
            .collect::<Vec<_>>(),
    );
    let criterion = if qv.is_empty() {
        c.algebra.unit.iter().all(Scalar::is_zero)
    } else {
        eval_one.solve(&c.algebra.unit).is_some()
    };
    report.push(Check::boolean(
        "tau-criterion",
        criterion == tau_surjective,
        Some(format!("q(1)=1 solvable: {criterion}")),
    ));

    // μ(q_k ⊗ e_a) in column k*n + a
    let mut mu_cols = Vec::with_capacity(qv.len() * n);
    for v in &qv {
        let qh = hom_matrix(v, n, m);
        for a in 0..n {
            let ra = c.algebra.right_mult(&c.algebra.basis_vector(a));
            mu_cols.push(flatten(&(&ra * &qh)));
        }
    }
    let mu = Matrix::from_columns(f, nm, &mu_cols);
    let mu_image = Subspace::span(f, nm, &mu_cols);
    report.push(Check::boolean(
        "mu-lands-in-ring",
        ring.contains_subspace(&mu_image),
        None,
    ));
    let mu_surjective = mu_image.contains(&ring_unit);
    report.push(Check::boolean(
        "mu-unit-criterion",
        mu_surjective == (mu_image == ring),
        None,
    ));

    let q_matches_a = q_iso_a_hypotheses(c).then(|| q.dim() == n);
    Ok(MoritaContext {
        t: t.clone(),
        ring,
        ring_unit,
        q,
        q_alternative,
        tau,
        mu,
        tau_surjective,
        mu_surjective,
        q_matches_a,
        report,
    })
}

/// The three equivalent verdicts side by side.
#[derive(Clone, Debug, Serialize)]
pub struct GaloisReport {
    pub t_dim: usize,
    pub can: CanSummary,
    pub theta: ThetaSummary,
    pub morita: MoritaSummary,
    pub report: AxiomReport,
    pub galois: bool,
}

impl GaloisReport {
    /// `can: …, theta: …, morita: …, GALOIS: …`.
    pub fn verdict_line(&self) -> String {
        format!(
            "can: {}, theta: {}, morita: {}, GALOIS: {}",
            if self.can.bijective {
                "bijective"
            } else {
                "not bijective"
            },
            if self.theta.bijective {
                "bijective"
            } else {
                "not bijective"
            },
            if self.morita.strict {
                "strict"
            } else {
                "not strict"
            },
            if self.galois { "yes" } else { "no" },
        )
    }
}

pub fn galois_verdict(c: &CoactionMap) -> Result<GaloisReport> {
    galois_verdict_with(c, Execution::default())
}

pub fn galois_verdict_with(c: &CoactionMap, exec: Execution) -> Result<GaloisReport> {
    require_partial(c, "the Galois verdict")?;
    let t = coinvariants(c)?;
    let iso = prop410_iso(c)?;
    let (can, (theta, morita)) = par::join(
        exec,
        || canonical_map(c),
        || {
            par::join(
                exec,
                || theta_from(c, &t, &iso),
                || morita_from(c, &t, &iso),
            )
        },
    );
    let (can, theta, morita) = (can?, theta?, morita?);
    let mut report = AxiomReport::new();
    report.extend(can.report.clone());
    report.extend(theta.report.clone());
    report.extend(morita.report.clone());
    report.extend(iso.report.clone());
    if let Some(bad) = report.failures().next() {
        return Err(Error::TheoremViolation(format!(
            "check {} failed\n{report}",
            bad.id
        )));
    }
    let verdicts = [can.bijective(), theta.bijective(), morita.strict()];
    if verdicts.iter().any(|v| *v != verdicts[0]) {
        return Err(Error::TheoremViolation(format!(
            "can bijective {}, theta bijective {}, morita strict {}",
            verdicts[0], verdicts[1], verdicts[2]
        )));
    }
    Ok(GaloisReport {
        t_dim: t.dim(),
        can: can.summary(),
        theta: theta.summary(),
        morita: morita.summary(),
        report,
        galois: verdicts[0],
    })
}
