//! Balanced tensor products `X ⊗_T Y` realized as quotient spaces.
//!
//! `X` carries a right action and `Y` a left action of an algebra `T`,
//! each given by one matrix per basis element of `T`. The quotient of
//! `X ⊗ Y` by `span{x t ⊗ y − x ⊗ t y}` gets coordinates on the non-pivot
//! positions of the RREF basis of the relation space; the section puts a
//! quotient vector back on those positions.

use crate::error::{dim_err, Result};
use crate::exactlin::{Field, Matrix, Scalar, Subspace};

#[derive(Clone, Debug)]
pub struct TensorOverSub {
    field: Field,
    left_dim: usize,
    right_dim: usize,
    relations: Subspace,
    free: Vec<usize>,
    projection: Matrix,
}

impl TensorOverSub {
    /// `right_on_x[k]` is `x ↦ x t_k` on `X`; `left_on_y[k]` is `y ↦ t_k y`
    /// on `Y`, for a basis `t_k` of `T`.
    pub fn new(
        field: Field,
        left_dim: usize,
        right_dim: usize,
        right_on_x: &[Matrix],
        left_on_y: &[Matrix],
    ) -> Result<TensorOverSub> {
        if right_on_x.len() != left_on_y.len() {
            return dim_err("need one right and one left action matrix per basis element");
        }
        for (r, l) in right_on_x.iter().zip(left_on_y) {
            if (r.rows(), r.cols()) != (left_dim, left_dim)
                || (l.rows(), l.cols()) != (right_dim, right_dim)
            {
                return dim_err("action matrix has the wrong shape");
            }
        }
        let ix = Matrix::identity(field, left_dim);
        let iy = Matrix::identity(field, right_dim);
        let mut gens: Vec<Vec<Scalar>> = Vec::new();
        for (r, l) in right_on_x.iter().zip(left_on_y) {
            let rel = &r.kron(&iy) - &ix.kron(l);
            gens.extend(
                rel.columns()
                    .into_iter()
                    .filter(|c| c.iter().any(|s| !s.is_zero())),
            );
        }
        let total = left_dim * right_dim;
        let relations = Subspace::span(field, total, &gens);
        Ok(TensorOverSub::from_relations(
            field, left_dim, right_dim, relations,
        ))
    }

    /// Quotient by an explicitly given relation subspace.
    pub fn from_relations(
        field: Field,
        left_dim: usize,
        right_dim: usize,
        relations: Subspace,
    ) -> TensorOverSub {
        let total = left_dim * right_dim;
        let pivots = relations.pivots().to_vec();
        let free: Vec<usize> = (0..total).filter(|c| !pivots.contains(c)).collect();
        // Reduce v by the RREF relations (kills pivot coordinates), then
        // read off the free coordinates.
        let mut projection = Matrix::zeros(field, free.len(), total);
        for (qi, &c) in free.iter().enumerate() {
            projection.set(qi, c, field.one());
        }
        for (ri, &p) in pivots.iter().enumerate() {
            let r = relations.basis_vector(ri);
            for (qi, &c) in free.iter().enumerate() {
                if !r[c].is_zero() {
                    projection.set(qi, p, -&r[c]);
                }
            }
        }
        TensorOverSub {
            field,
            left_dim,
            right_dim,
            relations,
            free,
            projection,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    /// `X ⊗ Y -> X ⊗_T Y`.
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// A right inverse of the projection.
    pub fn section(&self) -> Matrix {
        let total = self.left_dim * self.right_dim;
        let mut s = Matrix::zeros(self.field, total, self.free.len());
        for (qi, &c) in self.free.iter().enumerate() {
            s.set(c, qi, self.field.one());
        }
        s
    }

    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(v)
    }

    /// Class of `x ⊗ y`.
    pub fn class_of(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.project(&crate::exactlin::tensor_vec(x, y))
    }

    /// Whether a map defined on `X ⊗ Y` kills the relations, so that it
    /// descends to the quotient.
    pub fn descends(&self, map: &Matrix) -> bool {
        assert_eq!(map.cols(), self.left_dim * self.right_dim);
        self.relations
            .vectors()
            .iter()
            .all(|r| map.apply(r).iter().all(Scalar::is_zero))
    }

    /// The induced map on the quotient, `map ∘ section`. Only meaningful
    /// when [`Self::descends`] holds.
    pub fn descend(&self, map: &Matrix) -> Matrix {
        map * &self.section()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{cyclic_group_table, group_algebra};

    #[test]
    fn over_the_ground_field_nothing_collapses() {
        let f = Field::Rational;
        let a = group_algebra(cyclic_group_table(2), f).unwrap().algebra();
        // T = k·1 acting by identity
        let t =
            TensorOverSub::new(f, 2, 2, &[a.right_mult(&a.unit)], &[a.left_mult(&a.unit)]).unwrap();
        assert_eq!(t.dim(), 4);
    }

    #[test]
    fn over_itself_collapses_to_a() {
        let f = Field::Rational;
        let a = crate::presentations::matrix_algebra(f, 2);
        let rs: Vec<Matrix> = (0..4).map(|k| a.right_mult(&a.basis_vector(k))).collect();
        let ls: Vec<Matrix> = (0..4).map(|k| a.left_mult(&a.basis_vector(k))).collect();
        let t = TensorOverSub::new(f, 4, 4, &rs, &ls).unwrap();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.projection() * &t.section(), Matrix::identity(f, t.dim()));
        // multiplication descends to A ⊗_A A
        assert!(t.descends(&a.mult));
    }
}
