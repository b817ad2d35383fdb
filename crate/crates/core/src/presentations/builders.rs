use super::{solve_antipode, Algebra, Coalgebra, HopfAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{tensor_vec, unit_vector, Field, Matrix};

/// A validated finite group given by its Cayley table on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub inverses: Vec<usize>,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }
}

/// Checks closure, identity, inverses and associativity.
pub fn validate_group_table(table: Vec<Vec<usize>>) -> Result<GroupTable> {
    let n = table.len();
    let bad = |m: String| Err(Error::Invalid(format!("invalid group table: {m}")));
    if n == 0 {
        return bad("empty".into());
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != n {
            return bad(format!("row {i} has length {}", row.len()));
        }
        if let Some(&x) = row.iter().find(|&&x| x >= n) {
            return bad(format!("entry {x} out of range in row {i}"));
        }
    }
    let Some(e) = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g)) else {
        return bad("no identity element".into());
    };
    let mut inverses = Vec::with_capacity(n);
    for g in 0..n {
        match (0..n).find(|&h| table[g][h] == e && table[h][g] == e) {
            Some(h) => inverses.push(h),
            None => return bad(format!("element {g} has no inverse")),
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return bad(format!("not associative at ({a},{b},{c})"));
                }
            }
        }
    }
    Ok(GroupTable {
        table,
        identity: e,
        inverses,
    })
}

pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect()
}

/// Cayley table of a set of permutations closed under composition, where
/// `(στ)(i) = σ(τ(i))`. Element order is the order given.
pub fn permutation_group_table(perms: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let mut table = Vec::with_capacity(perms.len());
    for s in perms {
        let mut row = Vec::with_capacity(perms.len());
        for t in perms {
            let comp: Vec<usize> = t.iter().map(|&i| s[i]).collect();
            match perms.iter().position(|p| *p == comp) {
                Some(k) => row.push(k),
                None => {
                    return Err(Error::Invalid(
                        "permutations are not closed under composition".into(),
                    ))
                }
            }
        }
        table.push(row);
    }
    Ok(table)
}

/// All permutations of `0..3` in lexicographic order; index 0 is the identity.
pub fn s3_permutations() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    out.push(vec![a, b, c]);
                }
            }
        }
    }
    out
}

pub fn symmetric_group_table() -> Vec<Vec<usize>> {
    permutation_group_table(&s3_permutations()).expect("S3 is closed")
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

/// The group algebra `kG`: `Δ(g) = g⊗g`, `ϵ(g) = 1`. The antipode is
/// obtained by solving the antipode equations and then checked against
/// `g ↦ g⁻¹`.
pub fn group_algebra(table: Vec<Vec<usize>>, field: Field) -> Result<HopfAlgebra> {
    let g = validate_group_table(table)?;
    let n = g.order();
    let basis: Vec<String> = (0..n)
        .map(|i| {
            if i == g.identity {
                "1".to_string()
            } else {
                format!("g{i}")
            }
        })
        .collect();
    let algebra = Algebra::from_products(
        field,
        basis.clone(),
        unit_vector(field, n, g.identity),
        |a, b| unit_vector(field, n, g.mul(a, b)),
    )?;
    let comult = Matrix::from_fn(field, n * n, n, |r, c| {
        if r == c * n + c {
            field.one()
        } else {
            field.zero()
        }
    });
    let coalgebra = Coalgebra::new(field, basis, comult, vec![field.one(); n])?;
    let s = solve_antipode(&algebra, &coalgebra)?;
    let expected = Matrix::from_fn(field, n, n, |r, c| {
        if r == g.inv(c) {
            field.one()
        } else {
            field.zero()
        }
    });
    if s != expected {
        return Err(Error::Internal(
            "solved group antipode is not inversion".into(),
        ));
    }
    HopfAlgebra::new(algebra, coalgebra, s, None)
}

/// Sweedler's four-dimensional Hopf algebra on the basis `1, c, x, cx`
/// with `c² = 1`, `x² = 0`, `xc = -cx`, `Δ(c) = c⊗c`, `Δ(x) = c⊗x + x⊗1`.
pub fn sweedler4(field: Field) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::Precondition(
            "Sweedler's algebra needs characteristic different from 2".into(),
        ));
    }
    // basis index = a + 2b for c^a x^b
    let basis: Vec<String> = ["1", "c", "x", "cx"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let algebra =
        Algebra::from_products(field, basis.clone(), unit_vector(field, 4, 0), |i, j| {
            let (a, b) = (i % 2, i / 2);
            let (a2, b2) = (j % 2, j / 2);
            let mut v = vec![field.zero(); 4];
            if b + b2 < 2 {
                let sign = if b * a2 % 2 == 1 { -1 } else { 1 };
                v[(a + a2) % 2 + 2 * (b + b2)] = field.int(sign);
            }
            v
        })?;
    let e = |i| unit_vector(field, 4, i);
    let h2 = algebra.tensor(&algebra);
    let dc = tensor_vec(&e(1), &e(1));
    let dx: Vec<_> = tensor_vec(&e(1), &e(2))
        .iter()
        .zip(tensor_vec(&e(2), &e(0)))
        .map(|(p, q)| p + &q)
        .collect();
    let cols = vec![
        tensor_vec(&e(0), &e(0)),
        dc.clone(),
        dx.clone(),
        h2.mul(&dc, &dx),
    ];
    let comult = Matrix::from_columns(field, 16, &cols);
    let counit = vec![field.one(), field.one(), field.zero(), field.zero()];
    let coalgebra = Coalgebra::new(field, basis, comult, counit)?;
    let s = solve_antipode(&algebra, &coalgebra)?;
    HopfAlgebra::new(algebra, coalgebra, s, None)
}

/// `k^n` with orthogonal idempotent basis.
pub fn diagonal_algebra(field: Field, n: usize) -> Algebra {
    Algebra::from_products(field, labels("e", n), vec![field.one(); n], |i, j| {
        if i == j {
            unit_vector(field, n, i)
        } else {
            vec![field.zero(); n]
        }
    })
    .expect("well-formed")
}

/// `k[x]/(x²)` on the basis `1, x`.
pub fn dual_numbers(field: Field) -> Algebra {
    Algebra::from_products(
        field,
        vec!["1".into(), "x".into()],
        unit_vector(field, 2, 0),
        |i, j| {
            if i + j < 2 {
                unit_vector(field, 2, i + j)
            } else {
                vec![field.zero(); 2]
            }
        },
    )
    .expect("well-formed")
}

/// `M_n(k)` on matrix units, `E_ij` at index `i*n + j`.
pub fn matrix_algebra(field: Field, n: usize) -> Algebra {
    let basis = (0..n * n)
        .map(|k| format!("E{}{}", k / n + 1, k % n + 1))
        .collect();
    let mut unit = vec![field.zero(); n * n];
    for i in 0..n {
        unit[i * n + i] = field.one();
    }
    Algebra::from_products(field, basis, unit, |a, b| {
        let (i, j) = (a / n, a % n);
        let (k, l) = (b / n, b % n);
        if j == k {
            unit_vector(field, n * n, i * n + l)
        } else {
            vec![field.zero(); n * n]
        }
    })
    .expect("well-formed")
}

/// Upper triangular 2×2 matrices on the basis `E11, E12, E22`.
pub fn upper_triangular2(field: Field) -> Algebra {
    let units = [(0, 0), (0, 1), (1, 1)];
    Algebra::from_products(
        field,
        vec!["E11".into(), "E12".into(), "E22".into()],
        vec![field.one(), field.zero(), field.one()],
        |a, b| {
            let (i, j) = units[a];
            let (k, l) = units[b];
            if j == k {
                let pos = units
                    .iter()
                    .position(|&u| u == (i, l))
                    .expect("upper triangular");
                unit_vector(field, 3, pos)
            } else {
                vec![field.zero(); 3]
            }
        },
    )
    .expect("well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweedler_structure() {
        let h = sweedler4(Field::Rational).unwrap();
        assert!(h.verify().all_passed(), "{}", h.verify());
        let f = Field::Rational;
        // S(c) = c, S(x) = -cx, S(cx) = x
        let s = &h.antipode;
        assert_eq!(s.column(1), unit_vector(f, 4, 1));
        assert_eq!(s.column(2), vec![f.zero(), f.zero(), f.zero(), f.int(-1)]);
        assert_eq!(s.column(3), unit_vector(f, 4, 2));
        // Δ(x) has two terms
        assert_eq!(
            h.comult.column(2).iter().filter(|x| !x.is_zero()).count(),
            2
        );
        assert!(!h.is_commutative() && !h.is_cocommutative());
        assert!(sweedler4(Field::prime(2).unwrap()).is_err());
        assert!(sweedler4(Field::prime(3).unwrap())
            .unwrap()
            .verify()
            .all_passed());
    }

    #[test]
    fn group_tables() {
        assert!(validate_group_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(validate_group_table(vec![vec![0, 1], vec![1, 2]]).is_err());
        let s3 = validate_group_table(symmetric_group_table()).unwrap();
        assert_eq!(s3.identity, 0);
        let z3 = group_algebra(cyclic_group_table(3), Field::Rational).unwrap();
        let f = Field::Rational;
        assert_eq!(z3.antipode.column(1), unit_vector(f, 3, 2));
        let k_s3 = group_algebra(symmetric_group_table(), f).unwrap();
        assert_eq!(k_s3.dim, 6);
        assert!(k_s3.verify().all_passed());
    }

    #[test]
    fn upper_triangular_verifies() {
        assert!(upper_triangular2(Field::Rational).verify().all_passed());
        assert!(dual_numbers(Field::Rational).verify().all_passed());
        assert!(diagonal_algebra(Field::Rational, 2).verify().all_passed());
    }
}
