use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

/// A subspace of `k^n`, stored by a canonical basis: the nonzero rows of the
/// reduced row-echelon form of any spanning set. Two subspaces are equal
/// exactly when their canonical bases agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    /// `dim x ambient`, in reduced row-echelon form.
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        let rows: Vec<Vec<Scalar>> = vectors.to_vec();
        for v in &rows {
            assert_eq!(
                v.len(),
                ambient,
                "vector length does not match ambient dimension"
            );
        }
        let m = if rows.is_empty() {
            Matrix::zeros(field, 0, ambient)
        } else {
            Matrix::from_rows(field, rows).expect("vectors share the field")
        };
        Subspace::row_space(&m)
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Matrix) -> Subspace {
        let rr = m.rref();
        let keep: Vec<usize> = (0..rr.rank).collect();
        Subspace {
            field: m.field(),
            ambient: m.cols(),
            basis: rr.reduced.select_rows(&keep),
            pivots: rr.pivots,
        }
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        self.basis.row(i).to_vec()
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.to_rows()
    }

    /// The inclusion `k^dim -> k^ambient`, basis vectors as columns.
    pub fn inclusion(&self) -> Matrix {
        self.basis.transpose()
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.inclusion().apply(&c);
        (back == v).then_some(c)
    }

    /// Coordinate map `k^ambient -> k^dim`, valid on vectors of the subspace.
    pub fn coordinate_map(&self) -> Matrix {
        Matrix::from_fn(self.field, self.dim(), self.ambient, |r, c| {
            if self.pivots[r] == c {
                self.field.one()
            } else {
                self.field.zero()
            }
        })
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::row_space(&self.basis.vstack(&other.basis))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.field, self.ambient);
        }
        // x in U ∩ V  <=>  x = U a = V b, so (a, b) in ker [U | -V].
        let u = self.inclusion();
        let v = other.inclusion();
        let k = u.hstack(&-&v).kernel();
        let vecs: Vec<Vec<Scalar>> = k
            .vectors()
            .iter()
            .map(|ab| u.apply(&ab[..self.dim()]))
            .collect();
        Subspace::span(self.field, self.ambient, &vecs)
    }

    /// Image of the subspace under a linear map.
    pub fn map(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        Subspace::span(
            self.field,
            m.rows(),
            &self
                .vectors()
                .iter()
                .map(|v| m.apply(v))
                .collect::<Vec<_>>(),
        )
    }
}

impl serde::Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Subspace", 3)?;
        st.serialize_field("ambient", &self.ambient())?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("basis", &self.vectors())?;
        st.end()
    }
}
