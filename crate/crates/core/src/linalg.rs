//! Exact dense linear algebra over Q: fraction-free rank, multiplication
//! operators on zero-dimensional quotient algebras, and the algebraic
//! multiplicity of the eigenvalue zero. This is what localizes multiplicity
//! counts to a fiber without ever isolating a root numerically.

use crate::groebner::{staircase_coordinates, GroebnerError, Ideal, Staircase};
use crate::poly::{Integer, Polynomial, Rational};
use num_traits::{One, Signed, Zero};

/// Dense matrix with exact rational entries, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> QMatrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = QMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact rank via fraction-free (Bareiss) elimination on the
    /// denominator-cleared integer matrix.
    pub fn rank(&self) -> usize {
        use num_integer::Integer as _;
        // clear denominators row by row (row scaling preserves rank)
        let mut m: Vec<Vec<Integer>> = (0..self.rows)
            .map(|i| {
                let mut lcm = Integer::one();
                for j in 0..self.cols {
                    lcm = lcm.lcm(self[(i, j)].denom());
                }
                (0..self.cols)
                    .map(|j| {
                        let v = &self[(i, j)];
                        v.numer() * (&lcm / v.denom())
                    })
                    .collect()
            })
            .collect();
        let (r, c) = (self.rows, self.cols);
        let mut rank = 0usize;
        let mut prev = Integer::one();
        let mut row = 0usize;
        for col in 0..c {
            if row >= r {
                break;
            }
            // pivot search in this column
            let pivot = (row..r).find(|&i| !m[i][col].is_zero());
            let pivot = match pivot {
                None => continue,
                Some(p) => p,
            };
            m.swap(row, pivot);
            for i in (row + 1)..r {
                for j in (col + 1)..c {
                    let num = &m[row][col] * &m[i][j] - &m[i][col] * &m[row][j];
                    debug_assert!((&num % &prev).is_zero());
                    m[i][j] = num / &prev;
                }
                m[i][col] = Integer::zero();
            }
            prev = m[row][col].clone();
            row += 1;
            rank += 1;
        }
        rank
    }

    /// Basis of the right kernel via exact Gauss-Jordan over Q.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, c) = (self.rows, self.cols);
        let mut m: Vec<Vec<Rational>> = (0..r)
            .map(|i| (0..c).map(|j| self[(i, j)].clone()).collect())
            .collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0usize;
        for col in 0..c {
            if row >= r {
                break;
            }
            let pr = (row..r).find(|&i| !m[i][col].is_zero());
            let pr = match pr {
                None => continue,
                Some(p) => p,
            };
            m.swap(row, pr);
            let inv = m[row][col].clone().recip();
            for j in col..c {
                let v = &m[row][j] * &inv;
                m[row][j] = v;
            }
            for i in 0..r {
                if i == row || m[i][col].is_zero() {
                    continue;
                }
                let f = m[i][col].clone();
                for j in col..c {
                    let v = &m[i][j] - &(&m[row][j] * &f);
                    m[i][j] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        let free: Vec<usize> = (0..c).filter(|j| !pivots.contains(j)).collect();
        free.iter()
            .map(|&fj| {
                let mut v = vec![Rational::zero(); c];
                v[fj] = Rational::one();
                for (ri, &pj) in pivots.iter().enumerate() {
                    v[pj] = -m[ri][fj].clone();
                }
                v
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn max_abs_height(&self) -> Integer {
        self.entries
            .iter()
            .map(|e| e.numer().abs().max(e.denom().abs()))
            .max()
            .unwrap_or_else(Integer::zero)
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

/// Matrix of multiplication by a fixed polynomial on the quotient algebra of
/// a zero-dimensional ideal, in its staircase basis.
#[derive(Debug, Clone)]
pub struct MultiplicationOperator {
    matrix: QMatrix,
    basis: Staircase,
    multiplier: Polynomial,
}

impl MultiplicationOperator {
    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn basis(&self) -> &Staircase {
        &self.basis
    }

    pub fn multiplier(&self) -> &Polynomial {
        &self.multiplier
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// Algebraic multiplicity of the eigenvalue 0: dim - rank(M^dim). Equals
    /// the summed local quotient dimensions at the points where the
    /// multiplier vanishes.
    pub fn eigenvalue_zero_multiplicity(&self) -> usize {
        let n = self.dim();
        if n == 0 {
            return 0;
        }
        n - self.matrix.pow(n as u32).rank()
    }
}

/// Build the multiplication-by-f operator on the quotient by a
/// zero-dimensional ideal.
pub fn multiplication_matrix(
    f: &Polynomial,
    ideal: &Ideal,
) -> Result<MultiplicationOperator, GroebnerError> {
    let stair = ideal.staircase()?;
    let n = stair.len();
    let mut matrix = QMatrix::zero(n, n);
    let vars = ideal.varset().clone();
    for (j, b) in stair.monomials().iter().enumerate() {
        let fb = f.mul_term(b, &Rational::one());
        let nf = ideal.normal_form(&fb);
        let col = staircase_coordinates(&stair, &nf);
        for (i, v) in col.into_iter().enumerate() {
            matrix[(i, j)] = v;
        }
    }
    let _ = vars;
    Ok(MultiplicationOperator { matrix, basis: stair, multiplier: f.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{buchberger, MonomialOrder};
    use crate::poly::{rat, VarSet};
    use std::sync::Arc;

    fn p(vars: &Arc<VarSet>, s: &str) -> Polynomial {
        crate::parse::parse_polynomial(s, vars).unwrap()
    }

    fn q(n: i64) -> Rational {
        rat(n)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(QMatrix::identity(3).rank(), 3);
        assert_eq!(QMatrix::zero(2, 2).rank(), 0);
        let m = QMatrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert_eq!(m.rank(), 1);
        let m = QMatrix::from_rows(vec![
            vec![Rational::new(1.into(), 2.into()), q(1), q(0)],
            vec![q(1), q(2), q(0)],
            vec![q(0), q(0), q(3)],
        ]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn rank_plus_nullity() {
        let m = QMatrix::from_rows(vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(1), q(0), q(1)],
        ]);
        let kernel = m.kernel_basis();
        assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            for i in 0..m.rows() {
                let mut acc = Rational::zero();
                for j in 0..m.cols() {
                    acc += &m[(i, j)] * &v[j];
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn multiplication_by_x_mod_x2() {
        let v = VarSet::space_only(&["x"]).unwrap();
        let ideal = buchberger(vec![p(&v, "x^2")], MonomialOrder::Grevlex).unwrap();
        let op = multiplication_matrix(&p(&v, "x"), &ideal).unwrap();
        // basis {1, x}: x*1 = x, x*x = 0
        assert_eq!(op.matrix()[(0, 0)], q(0));
        assert_eq!(op.matrix()[(1, 0)], q(1));
        assert_eq!(op.matrix()[(0, 1)], q(0));
        assert_eq!(op.matrix()[(1, 1)], q(0));
        assert_eq!(op.eigenvalue_zero_multiplicity(), 2);
    }

    #[test]
    fn multiplication_identity_and_point() {
        let v = VarSet::space_only(&["x"]).unwrap();
        let ideal = buchberger(vec![p(&v, "x^2")], MonomialOrder::Grevlex).unwrap();
        let op = multiplication_matrix(&p(&v, "1"), &ideal).unwrap();
        assert_eq!(*op.matrix(), QMatrix::identity(2));

        let ideal = buchberger(vec![p(&v, "x - 3")], MonomialOrder::Grevlex).unwrap();
        let op = multiplication_matrix(&p(&v, "x"), &ideal).unwrap();
        assert_eq!(op.dim(), 1);
        assert_eq!(op.matrix()[(0, 0)], q(3));
        assert_eq!(op.eigenvalue_zero_multiplicity(), 0);
    }

    #[test]
    fn eigenvalue_zero_on_fiber() {
        // algebra Q[x,y]/(2x, 2y); multiplier x^2+y^2-1 acts as -1
        let v = VarSet::space_only(&["x", "y"]).unwrap();
        let ideal =
            buchberger(vec![p(&v, "2*x"), p(&v, "2*y")], MonomialOrder::Grevlex).unwrap();
        let f = p(&v, "x^2 + y^2");
        let off = f.try_sub(&p(&v, "1")).unwrap();
        let op = multiplication_matrix(&off, &ideal).unwrap();
        assert_eq!(op.eigenvalue_zero_multiplicity(), 0);
        let on = multiplication_matrix(&f, &ideal).unwrap();
        assert_eq!(on.eigenvalue_zero_multiplicity(), 1);
    }

    #[test]
    fn multiplication_operators_commute() {
        let v = VarSet::space_only(&["x", "y"]).unwrap();
        let ideal = buchberger(
            vec![p(&v, "x^2 + y^2 - 1"), p(&v, "x*y - 1/3")],
            MonomialOrder::Grevlex,
        )
        .unwrap();
        let a = multiplication_matrix(&p(&v, "x + 2*y^2"), &ideal).unwrap();
        let b = multiplication_matrix(&p(&v, "x*y - 5"), &ideal).unwrap();
        assert_eq!(a.matrix().mul(b.matrix()), b.matrix().mul(a.matrix()));
    }

    #[test]
    fn eigenvalue_partition() {
        // V(I) = {0, 1, -1} on the line; multipliers x, x-1, x+1 split 3 = 1+1+1
        let v = VarSet::space_only(&["x"]).unwrap();
        let ideal = buchberger(vec![p(&v, "x^3 - x")], MonomialOrder::Grevlex).unwrap();
        let dims: usize = ["x", "x - 1", "x + 1"]
            .iter()
            .map(|s| {
                multiplication_matrix(&p(&v, s), &ideal)
                    .unwrap()
                    .eigenvalue_zero_multiplicity()
            })
            .sum();
        assert_eq!(dims, ideal.quotient_dimension().unwrap());
    }
}
