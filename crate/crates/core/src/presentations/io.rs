//! JSON presentation files.
//!
//! Tensors are nested arrays indexed inputs first, output coordinate last:
//! `mult[i][j][k]` is the coefficient of `b_k` in `b_i b_j`,
//! `comult[i][j][k]` the coefficient of `b_j ⊗ b_k` in `Δ(b_i)` and
//! `antipode[i][k]` the coefficient of `b_k` in `S(b_i)`. Scalars are
//! strings (`"-3/4"`, `"2 mod 5"`); plain JSON integers are accepted on input.
//! Saved files have sorted keys so that save after load is byte-stable.

use std::path::Path;

use serde_json::{json, Map, Value};

use super::{Algebra, Coalgebra, HopfAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentationKind {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
}

impl PresentationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PresentationKind::Algebra => "algebra",
            PresentationKind::Coalgebra => "coalgebra",
            PresentationKind::Bialgebra => "bialgebra",
            PresentationKind::Hopf => "hopf",
        }
    }
}

/// Any structure a presentation file can hold.
#[derive(Clone, Debug, PartialEq)]
pub enum Presentation {
    Algebra(Algebra),
    Coalgebra(Coalgebra),
    Bialgebra(Algebra, Coalgebra),
    Hopf(HopfAlgebra),
}

impl Presentation {
    pub fn kind(&self) -> PresentationKind {
        match self {
            Presentation::Algebra(_) => PresentationKind::Algebra,
            Presentation::Coalgebra(_) => PresentationKind::Coalgebra,
            Presentation::Bialgebra(..) => PresentationKind::Bialgebra,
            Presentation::Hopf(_) => PresentationKind::Hopf,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Presentation::Algebra(a) | Presentation::Bialgebra(a, _) => a.field,
            Presentation::Coalgebra(c) => c.field,
            Presentation::Hopf(h) => h.field,
        }
    }

    /// Checks every axiom of the structure kind.
    pub fn verify(&self) -> crate::report::AxiomReport {
        match self {
            Presentation::Algebra(a) => a.verify(),
            Presentation::Coalgebra(c) => c.verify(),
            Presentation::Bialgebra(a, c) => {
                // A bialgebra is checked like a Hopf algebra minus the antipode.
                let mut r = a.verify();
                r.extend(c.verify());
                let h =
                    HopfAlgebra::new(a.clone(), c.clone(), Matrix::identity(a.field, a.dim), None)
                        .expect("dimensions checked at load");
                r.checks.extend(
                    h.verify()
                        .checks
                        .into_iter()
                        .filter(|c| c.id.starts_with("comult-") || c.id.starts_with("counit-")),
                );
                r
            }
            Presentation::Hopf(h) => h.verify(),
        }
    }

    pub fn to_json(&self) -> Value {
        presentation_to_json(self)
    }

    /// Canonical text: pretty JSON with sorted keys and a final newline.
    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
        s.push('\n');
        s
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_canonical_string())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Presentation> {
        let text = std::fs::read_to_string(path)?;
        presentation_from_json(&serde_json::from_str(&text)?)
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

pub fn scalar_from_json(field: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse_scalar(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(field.int(i)),
            None => Err(Error::Parse(format!(
                "numeric scalar {n} is not an integer; write fractions as strings"
            ))),
        },
        other => Err(Error::Parse(format!("expected a scalar, got {other}"))),
    }
}

pub fn vector_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

pub fn vector_from_json(field: Field, v: &Value, len: usize) -> Result<Vec<Scalar>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected an array of scalars".into()))?;
    if arr.len() != len {
        return Err(Error::Dimension(format!(
            "vector has length {}, expected {len}",
            arr.len()
        )));
    }
    arr.iter().map(|x| scalar_from_json(field, x)).collect()
}

/// Matrix as an array of rows.
pub fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vector_to_json(m.row(r))).collect())
}

pub fn matrix_from_json(field: Field, v: &Value, rows: usize, cols: usize) -> Result<Matrix> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected a matrix (array of rows)".into()))?;
    if arr.len() != rows {
        return Err(Error::Dimension(format!(
            "matrix has {} rows, expected {rows}",
            arr.len()
        )));
    }
    let rows_v = arr
        .iter()
        .map(|r| vector_from_json(field, r, cols))
        .collect::<Result<Vec<_>>>()?;
    if rows == 0 {
        return Ok(Matrix::zeros(field, 0, cols));
    }
    Matrix::from_rows(field, rows_v)
}

/// `t[i][j][k]` ↔ matrix with output `k` and input `i*n + j`.
fn product_tensor_to_json(m: &Matrix, n: usize) -> Value {
    Value::Array(
        (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| vector_to_json(&m.column(i * n + j)))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn product_tensor_from_json(field: Field, v: &Value, n: usize) -> Result<Matrix> {
    let outer = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected a rank-3 array".into()))?;
    if outer.len() != n {
        return Err(Error::Dimension(format!(
            "tensor has {} slices, expected {n}",
            outer.len()
        )));
    }
    let mut m = Matrix::zeros(field, n, n * n);
    for (i, slice) in outer.iter().enumerate() {
        let s = matrix_from_json(field, slice, n, n)?;
        for j in 0..n {
            for k in 0..n {
                m.set(k, i * n + j, s.get(j, k).clone());
            }
        }
    }
    Ok(m)
}

fn comult_tensor_to_json(m: &Matrix, n: usize) -> Value {
    Value::Array(
        (0..n)
            .map(|i| {
                let col = m.column(i);
                Value::Array(
                    (0..n)
                        .map(|j| vector_to_json(&col[j * n..(j + 1) * n]))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn comult_tensor_from_json(field: Field, v: &Value, n: usize) -> Result<Matrix> {
    let outer = v
        .as_array()
        .ok_or_else(|| Error::Parse("expected a rank-3 array".into()))?;
    if outer.len() != n {
        return Err(Error::Dimension(format!(
            "tensor has {} slices, expected {n}",
            outer.len()
        )));
    }
    let mut m = Matrix::zeros(field, n * n, n);
    for (i, slice) in outer.iter().enumerate() {
        let s = matrix_from_json(field, slice, n, n)?;
        for j in 0..n {
            for k in 0..n {
                m.set(j * n + k, i, s.get(j, k).clone());
            }
        }
    }
    Ok(m)
}

fn field_to_json(f: Field) -> Value {
    serde_json::to_value(f).expect("serializable")
}

pub fn field_from_json(v: &Value) -> Result<Field> {
    let f: Field = serde_json::from_value(v.clone())
        .map_err(|e| Error::Parse(format!("bad field descriptor: {e}")))?;
    f.validate()
}

pub fn presentation_to_json(p: &Presentation) -> Value {
    let mut o = Map::new();
    o.insert("kind".into(), json!(p.kind().as_str()));
    o.insert("field".into(), field_to_json(p.field()));
    let put_alg = |o: &mut Map<String, Value>, a: &Algebra| {
        o.insert("dim".into(), json!(a.dim));
        o.insert("basis".into(), json!(a.basis));
        o.insert("mult".into(), product_tensor_to_json(&a.mult, a.dim));
        o.insert("unit".into(), vector_to_json(&a.unit));
    };
    let put_coalg = |o: &mut Map<String, Value>, c: &Coalgebra| {
        o.insert("dim".into(), json!(c.dim));
        o.insert("basis".into(), json!(c.basis));
        o.insert("comult".into(), comult_tensor_to_json(&c.comult, c.dim));
        o.insert("counit".into(), vector_to_json(&c.counit));
    };
    match p {
        Presentation::Algebra(a) => put_alg(&mut o, a),
        Presentation::Coalgebra(c) => put_coalg(&mut o, c),
        Presentation::Bialgebra(a, c) => {
            put_alg(&mut o, a);
            put_coalg(&mut o, c);
        }
        Presentation::Hopf(h) => {
            put_alg(&mut o, &h.algebra());
            put_coalg(&mut o, &h.coalgebra());
            o.insert("antipode".into(), matrix_to_json(&h.antipode.transpose()));
        }
    }
    Value::Object(o)
}

fn get<'a>(o: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    o.get(key)
        .ok_or_else(|| Error::Parse(format!("missing key {key:?}")))
}

pub fn presentation_from_json(v: &Value) -> Result<Presentation> {
    let o = v
        .as_object()
        .ok_or_else(|| Error::Parse("presentation must be a JSON object".into()))?;
    let field = field_from_json(get(o, "field")?)?;
    let kind = get(o, "kind")?
        .as_str()
        .ok_or_else(|| Error::Parse("\"kind\" must be a string".into()))?;
    let n = get(o, "dim")?
        .as_u64()
        .ok_or_else(|| Error::Parse("\"dim\" must be a non-negative integer".into()))?
        as usize;
    let basis: Vec<String> = match o.get("basis") {
        Some(b) => serde_json::from_value(b.clone())
            .map_err(|e| Error::Parse(format!("bad basis labels: {e}")))?,
        None => (0..n).map(|i| format!("b{i}")).collect(),
    };
    let alg = || -> Result<Algebra> {
        Algebra::new(
            field,
            basis.clone(),
            product_tensor_from_json(field, get(o, "mult")?, n)?,
            vector_from_json(field, get(o, "unit")?, n)?,
        )
    };
    let coalg = || -> Result<Coalgebra> {
        Coalgebra::new(
            field,
            basis.clone(),
            comult_tensor_from_json(field, get(o, "comult")?, n)?,
            vector_from_json(field, get(o, "counit")?, n)?,
        )
    };
    match kind {
        "algebra" => Ok(Presentation::Algebra(alg()?)),
        "coalgebra" => Ok(Presentation::Coalgebra(coalg()?)),
        "bialgebra" => Ok(Presentation::Bialgebra(alg()?, coalg()?)),
        "hopf" => {
            let s = matrix_from_json(field, get(o, "antipode")?, n, n)?.transpose();
            Ok(Presentation::Hopf(HopfAlgebra::new(
                alg()?,
                coalg()?,
                s,
                None,
            )?))
        }
        other => Err(Error::Parse(format!("unknown presentation kind {other:?}"))),
    }
}

pub fn hopf_to_json(h: &HopfAlgebra) -> Value {
    presentation_to_json(&Presentation::Hopf(h.clone()))
}

/// Reads a Hopf algebra; a bialgebra file is completed by solving for its
/// antipode.
pub fn hopf_from_json(v: &Value) -> Result<HopfAlgebra> {
    match presentation_from_json(v)? {
        Presentation::Hopf(h) => Ok(h),
        Presentation::Bialgebra(a, c) => HopfAlgebra::from_bialgebra(a, c),
        other => Err(Error::Invalid(format!(
            "expected a hopf presentation, found {}",
            other.kind().as_str()
        ))),
    }
}

/// Reads an algebra; the algebra part of any richer presentation is accepted.
pub fn algebra_from_json(v: &Value) -> Result<Algebra> {
    match presentation_from_json(v)? {
        Presentation::Algebra(a) | Presentation::Bialgebra(a, _) => Ok(a),
        Presentation::Hopf(h) => Ok(h.algebra()),
        Presentation::Coalgebra(_) => Err(Error::Invalid(
            "expected an algebra presentation, found coalgebra".into(),
        )),
    }
}

pub fn load_hopf(path: impl AsRef<Path>) -> Result<HopfAlgebra> {
    let text = std::fs::read_to_string(path)?;
    hopf_from_json(&serde_json::from_str(&text)?)
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<Algebra> {
    let text = std::fs::read_to_string(path)?;
    algebra_from_json(&serde_json::from_str(&text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{cyclic_group_table, group_algebra, matrix_algebra, sweedler4};

    #[test]
    fn hopf_round_trip_is_byte_stable() {
        for h in [
            sweedler4(Field::Rational).unwrap(),
            group_algebra(cyclic_group_table(3), Field::prime(5).unwrap()).unwrap(),
        ] {
            let p = Presentation::Hopf(h.clone());
            let s1 = p.to_canonical_string();
            let back = presentation_from_json(&serde_json::from_str(&s1).unwrap()).unwrap();
            assert_eq!(back, p);
            assert_eq!(back.to_canonical_string(), s1);
        }
    }

    #[test]
    fn integers_and_fractions_accepted() {
        let f = Field::Rational;
        assert_eq!(scalar_from_json(f, &json!(3)).unwrap(), f.int(3));
        assert_eq!(
            scalar_from_json(f, &json!("1/2")).unwrap(),
            f.ratio(1, 2).unwrap()
        );
        assert!(scalar_from_json(f, &json!(0.5)).is_err());
    }

    #[test]
    fn wrong_shapes_rejected() {
        let mut v =
            presentation_to_json(&Presentation::Algebra(matrix_algebra(Field::Rational, 2)));
        v["dim"] = json!(3);
        assert!(presentation_from_json(&v).is_err());
        let mut w =
            presentation_to_json(&Presentation::Algebra(matrix_algebra(Field::Rational, 2)));
        w["field"] = json!({"kind": "Fp", "p": 4});
        assert!(presentation_from_json(&w).is_err());
    }
}
