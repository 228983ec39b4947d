//! Exact integer matrices: products, transposes, division-free
//! characteristic polynomials (Berkowitz), fraction-free determinants
//! (Bareiss), and Sylvester resultants.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::intpoly::IntPoly;

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows_i64(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m[(i, j)] = BigInt::from(*v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 0..self.cols {
                    acc += &self[(i, j)] * &v[j];
                }
                acc
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI - A)` by the Berkowitz algorithm.
    /// Division-free: every intermediate value is an exact integer.
    pub fn charpoly(&self) -> IntPoly {
        assert!(
            self.is_square(),
            "characteristic polynomial needs a square matrix"
        );
        let n = self.rows;
        // Coefficients in descending order; start from the 0x0 matrix.
        let mut c: Vec<BigInt> = vec![BigInt::one()];
        for r in 1..=n {
            // Split the leading r x r block: M = A[0..r-1][0..r-1],
            // S = column A[0..r-1][r-1], row = A[r-1][0..r-1], corner a_rr.
            let corner = self[(r - 1, r - 1)].clone();
            // q[j] for j = 0..=r: 1, -a_rr, -row M^(j-2) S
            let mut q = Vec::with_capacity(r + 1);
            q.push(BigInt::one());
            q.push(-corner);
            if r >= 2 {
                let mut v: Vec<BigInt> = (0..r - 1).map(|i| self[(i, r - 1)].clone()).collect();
                for _ in 2..=r {
                    let mut dot = BigInt::zero();
                    for (k, vk) in v.iter().enumerate() {
                        dot += &self[(r - 1, k)] * vk;
                    }
                    q.push(-dot);
                    // v <- M v
                    let mut nv = vec![BigInt::zero(); r - 1];
                    for i in 0..r - 1 {
                        for k in 0..r - 1 {
                            if !self[(i, k)].is_zero() && !v[k].is_zero() {
                                nv[i] += &self[(i, k)] * &v[k];
                            }
                        }
                    }
                    v = nv;
                }
            }
            // c_new = T c where T is the (r+1) x r lower Toeplitz of q.
            let mut cn = vec![BigInt::zero(); r + 1];
            for (i, cni) in cn.iter_mut().enumerate() {
                for (j, cj) in c.iter().enumerate() {
                    if i >= j && i - j < q.len() {
                        *cni += &q[i - j] * cj;
                    }
                }
            }
            c = cn;
        }
        c.reverse();
        IntPoly::new(c)
    }

    pub fn det(&self) -> BigInt {
        assert!(self.is_square());
        let n = self.rows;
        let cp = self.charpoly();
        let c0 = cp.constant_term();
        if n % 2 == 0 {
            c0
        } else {
            -c0
        }
    }

    /// Fraction-free Gaussian elimination determinant (Bareiss). Used as an
    /// independent route from `det` in tests and for Sylvester resultants.
    pub fn det_bareiss(&self) -> BigInt {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self[(i, j)].clone()).collect())
            .collect();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = &t / &prev;
                }
            }
            for row in a.iter_mut().skip(k + 1) {
                row[k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Resultant of two nonzero integer polynomials via the Sylvester matrix.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let (Some(n), Some(m)) = (f.deg(), g.deg()) else {
        return BigInt::zero();
    };
    if n == 0 && m == 0 {
        return BigInt::one();
    }
    if n == 0 {
        return f.coeff(0).pow(m as u32);
    }
    if m == 0 {
        return g.coeff(0).pow(n as u32);
    }
    let size = n + m;
    let mut s = IntMatrix::zeros(size, size);
    // m rows of f's coefficients (descending), then n rows of g's.
    for r in 0..m {
        for k in 0..=n {
            s[(r, r + k)] = f.coeff(n - k);
        }
    }
    for r in 0..n {
        for k in 0..=m {
            s[(m + r, r + k)] = g.coeff(m - k);
        }
    }
    s.det_bareiss()
}

/// Evaluates an integer polynomial at a companion matrix: returns `t(C)`
/// where `C` is the companion matrix of the monic polynomial `modulus`.
/// The characteristic polynomial of the result is `prod (x - t(root_i))`.
pub fn apply_poly_to_companion(t: &IntPoly, modulus: &IntPoly) -> IntMatrix {
    assert!(modulus.is_monic(), "companion matrix needs a monic modulus");
    let n = modulus.degree();
    let mut c = IntMatrix::zeros(n, n);
    for i in 1..n {
        c[(i, i - 1)] = BigInt::one();
    }
    for i in 0..n {
        c[(i, n - 1)] = -modulus.coeff(i);
    }
    // Horner evaluation of t at C.
    let mut acc = IntMatrix::zeros(n, n);
    if t.is_zero() {
        return acc;
    }
    for k in (0..=t.degree()).rev() {
        acc = acc.mul(&c);
        let ck = t.coeff(k);
        for i in 0..n {
            acc[(i, i)] += &ck;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> IntPoly {
        IntPoly::from_i64(v)
    }

    #[test]
    fn charpoly_of_small_matrices() {
        // 1x1 zero matrix: x
        let m = IntMatrix::from_rows_i64(&[vec![0]]);
        assert_eq!(m.charpoly(), p(&[0, 1]));
        // adjacency of a single edge: x^2 - 1
        let m = IntMatrix::from_rows_i64(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.charpoly(), p(&[-1, 0, 1]));
        // [[2,1],[1,1]]: x^2 - 3x + 1
        let m = IntMatrix::from_rows_i64(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(m.charpoly(), p(&[1, -3, 1]));
        // companion-style check: identity 3x3 -> (x-1)^3
        let m = IntMatrix::identity(3);
        assert_eq!(m.charpoly(), p(&[-1, 3, -3, 1]));
    }

    #[test]
    fn charpoly_matches_cofactor_expansion_for_star() {
        // Star K_{1,3} adjacency: x^4 - 3x^2
        let m = IntMatrix::from_rows_i64(&[
            vec![0, 1, 1, 1],
            vec![1, 0, 0, 0],
            vec![1, 0, 0, 0],
            vec![1, 0, 0, 0],
        ]);
        assert_eq!(m.charpoly(), p(&[0, 0, -3, 0, 1]));
    }

    #[test]
    fn det_routes_agree() {
        let m = IntMatrix::from_rows_i64(&[
            vec![2, -1, 3, 0],
            vec![1, 4, -2, 5],
            vec![0, 3, 1, -1],
            vec![-2, 0, 2, 3],
        ]);
        assert_eq!(m.det(), m.det_bareiss());
        let singular = IntMatrix::from_rows_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(singular.det(), BigInt::zero());
        assert_eq!(singular.det_bareiss(), BigInt::zero());
    }

    #[test]
    fn resultant_of_coprime_and_sharing() {
        // res(x-2, x-3) = 2 - 3 ... = g(2) = -1
        assert_eq!(resultant(&p(&[-2, 1]), &p(&[-3, 1])), BigInt::from(-1));
        // shared root -> 0
        let f = p(&[-1, 1]).mul(&p(&[-2, 1]));
        let g = p(&[-1, 1]).mul(&p(&[3, 1]));
        assert_eq!(resultant(&f, &g), BigInt::zero());
        // res(x^2-2, x^2-3) = (2-3)^2 = 1
        assert_eq!(resultant(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])), BigInt::one());
    }

    #[test]
    fn companion_evaluation_shifts_roots() {
        // modulus x^2 - 5x + 3 has roots nu; t = x - 2 gives charpoly with
        // roots nu - 2: x^2 - (5-4)x + (3 - 10 + 4) = x^2 - x - 3.
        let t = p(&[-2, 1]);
        let modulus = p(&[3, -5, 1]);
        let m = apply_poly_to_companion(&t, &modulus);
        assert_eq!(m.charpoly(), p(&[-3, -1, 1]));
    }
}
