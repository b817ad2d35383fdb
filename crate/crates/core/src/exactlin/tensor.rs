use super::matrix::Matrix;
use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// Kronecker product of two maps, failing on a field mismatch.
pub fn kron(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch(a.field(), b.field()));
    }
    Ok(a.kron(b))
}

/// Kronecker product of several maps, left to right.
pub fn kron_all(ms: &[&Matrix]) -> Matrix {
    let (first, rest) = ms.split_first().expect("at least one factor");
    rest.iter().fold((*first).clone(), |acc, m| acc.kron(m))
}

/// Flat index of a multi-index, first factor most significant.
pub fn encode(idx: &[usize], dims: &[usize]) -> usize {
    debug_assert_eq!(idx.len(), dims.len());
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| {
        debug_assert!(i < d);
        acc * d + i
    })
}

pub fn decode(mut n: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = n % d;
        n /= d;
    }
    out
}

/// The map reordering tensor factors: factor `t` of the output is factor
/// `perm[t]` of the input, whose factor dimensions are `dims`.
pub fn permute_factors(field: Field, dims: &[usize], perm: &[usize]) -> Matrix {
    assert_eq!(dims.len(), perm.len());
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut m = Matrix::zeros(field, total, total);
    for col in 0..total {
        let idx = decode(col, dims);
        let out: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
        m.set(encode(&out, &out_dims), col, field.one());
    }
    m
}

/// The flip `V ⊗ W -> W ⊗ V`, with `dim V = d1`.
pub fn swap(field: Field, d1: usize, d2: usize) -> Matrix {
    permute_factors(field, &[d1, d2], &[1, 0])
}

pub fn unit_vector(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Tensor product of coordinate vectors.
pub fn tensor_vec(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x * y);
        }
    }
    out
}

/// `acc += c·v`.
pub fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (x, y) in acc.iter_mut().zip(v) {
        x.add_mul(c, y);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_decode_inverse() {
        let dims = [2, 3, 4];
        for n in 0..24 {
            assert_eq!(encode(&decode(n, &dims), &dims), n);
        }
    }

    #[test]
    fn swap_squares_to_identity_and_flips() {
        let f = Field::Rational;
        let s = swap(f, 2, 3);
        let back = swap(f, 3, 2);
        assert_eq!(&back * &s, Matrix::identity(f, 6));
        let a = vec![f.int(1), f.int(2)];
        let b = vec![f.int(3), f.int(5), f.int(7)];
        assert_eq!(s.apply(&tensor_vec(&a, &b)), tensor_vec(&b, &a));
    }

    #[test]
    fn permutation_moves_factors() {
        let f = Field::Rational;
        let p = permute_factors(f, &[2, 3, 2], &[2, 0, 1]);
        let x = unit_vector(f, 2, 1);
        let y = unit_vector(f, 3, 2);
        let z = unit_vector(f, 2, 0);
        let input = tensor_vec(&tensor_vec(&x, &y), &z);
        let want = tensor_vec(&tensor_vec(&z, &x), &y);
        assert_eq!(p.apply(&input), want);
    }

    #[test]
    fn kron_is_tensor_of_maps() {
        let f = Field::Rational;
        let a = Matrix::from_ints(f, 2, 2, &[1, 2, 3, 4]);
        let b = Matrix::from_ints(f, 2, 2, &[0, 1, -1, 2]);
        let x = vec![f.int(1), f.int(-1)];
        let y = vec![f.int(2), f.int(3)];
        assert_eq!(
            kron(&a, &b).unwrap().apply(&tensor_vec(&x, &y)),
            tensor_vec(&a.apply(&x), &b.apply(&y))
        );
        let g = Matrix::identity(Field::prime(3).unwrap(), 1);
        assert!(kron(&a, &g).is_err());
    }
}
