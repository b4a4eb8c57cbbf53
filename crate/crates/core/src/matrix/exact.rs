use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ComplexMatrix;
use crate::arith::{Field, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Index<(usize, usize)> for ExactMatrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.data[r * self.cols + c]
    }
}

impl<F: Field> IndexMut<(usize, usize)> for ExactMatrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.data[r * self.cols + c]
    }
}

impl<F: Field> ExactMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let t = a.mul_ref(&rhs[(k, j)]);
                    out[(i, j)] = out[(i, j)].add_ref(&t);
                }
            }
        }
        Ok(out)
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(self.rows, cols.len(), |r, c| self[(r, cols[c])].clone())
    }

    pub fn scale_row(&mut self, r: usize, s: &F) {
        for c in 0..self.cols {
            self[(r, c)] = self[(r, c)].mul_ref(s);
        }
    }

    pub fn to_complex(&self) -> ComplexMatrix {
        let rows: Vec<Vec<Complex64>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.to_complex()).collect())
            .collect();
        ComplexMatrix::from_rows(&rows)
    }

    /// Reduced row echelon form and the ascending list of pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m[(row, col)].try_inv().expect("nonzero pivot");
            m.scale_row(row, &inv);
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let f = m[(r, col)].clone();
                for c in col..m.cols {
                    if m[(row, c)].is_zero() {
                        continue;
                    }
                    let t = f.mul_ref(&m[(row, c)]);
                    m[(r, c)] = m[(r, c)].sub_ref(&t);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace {v : Mv = 0}.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(k, f)].clone();
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                F::one()
            } else {
                F::zero()
            }
        });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        Ok(Self::from_fn(n, n, |r, c| red[(r, n + c)].clone()))
    }

    /// Determinant by fraction-free Bareiss elimination. Rational matrices
    /// are first cleared to integers row by row.
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return F::one();
        }
        if let Some(q) = self.rational_entries() {
            let mut scale = Rational::one();
            let ints: Vec<Vec<BigInt>> = q
                .chunks(n)
                .map(|row| {
                    let l = row
                        .iter()
                        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                    scale *= Rational::from_integer(l.clone());
                    row.iter()
                        .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
                        .collect()
                })
                .collect();
            let d = bareiss_integer(ints);
            let like = &self.data[0];
            return like.lift_like(Rational::from_integer(d) / scale);
        }
        bareiss_field(self.to_rows())
    }

    fn rational_entries(&self) -> Option<Vec<Rational>> {
        self.data.iter().map(|x| x.to_rational()).collect()
    }

    /// All maximal minors, column subsets in lexicographic order.
    pub fn maximal_minors(&self) -> Vec<F> {
        assert!(self.rows <= self.cols, "more rows than columns");
        combinations(self.cols, self.rows)
            .map(|s| self.select_columns(&s).det())
            .collect()
    }
}

fn bareiss_integer(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match ((k + 1)..n).find(|&r| !m[r][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign.is_negative() {
        -d
    } else {
        d
    }
}

fn bareiss_field<F: Field>(mut m: Vec<Vec<F>>) -> F {
    let n = m.len();
    let mut negate = false;
    let mut prev = F::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match ((k + 1)..n).find(|&r| !m[r][k].is_zero()) {
                Some(p) => {
                    m.swap(k, p);
                    negate = !negate;
                }
                None => return F::zero(),
            }
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = m[i][j].mul_ref(&m[k][k]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                m[i][j] = v.try_div(&prev).expect("Bareiss pivot is nonzero");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// k-subsets of 0..n as ascending index vectors, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (k <= n).then(|| (0..k).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if next[i] < n - k + i {
                next[i] += 1;
                for j in (i + 1)..k {
                    next[j] = next[j - 1] + 1;
                }
                cur = Some(next);
                break;
            }
        }
        Some(out)
    })
}

/// Position of an ascending k-subset of 0..n in lexicographic order.
pub fn combination_rank(n: usize, subset: &[usize]) -> usize {
    let k = subset.len();
    let mut rank = 0;
    let mut start = 0;
    for (pos, &v) in subset.iter().enumerate() {
        for skipped in start..v {
            rank += binomial(n - skipped - 1, k - pos - 1);
        }
        start = v + 1;
    }
    rank
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn m(rows: &[&[i64]]) -> ExactMatrix<Rational> {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn rref_examples() {
        let id = ExactMatrix::<Rational>::identity(3);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
        let a = m(&[&[0, 1], &[0, 2]]);
        assert_eq!(a.rref(), (m(&[&[0, 1], &[0, 0]]), vec![1]));
    }

    #[test]
    fn rref_idempotent() {
        let a = m(&[&[2, 4, 1, 3], &[1, 2, 0, 1], &[3, 6, 1, 4]]);
        let (r, _) = a.rref();
        assert_eq!(r.rref().0, r);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn minors_of_small_matrix() {
        let a = m(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(a.maximal_minors(), vec![int(1), int(0), int(0)]);
        let rank1 = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert!(rank1.maximal_minors().iter().all(|x| x.is_zero()));
    }

    #[test]
    fn det_rational_and_field_paths_agree() {
        let a = ExactMatrix::from_rows(vec![
            vec![rat(1, 2), int(3), rat(-2, 3)],
            vec![int(4), rat(5, 7), int(1)],
            vec![int(0), int(2), rat(9, 4)],
        ]);
        let d = a.det();
        assert_eq!(d, bareiss_field(a.to_rows()));
        // cofactor expansion by hand
        let e = |r: usize, c: usize| a[(r, c)].clone();
        let cof = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
        assert_eq!(d, cof);
    }

    #[test]
    fn inverse_and_singular() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.matmul(&inv).unwrap(), ExactMatrix::identity(2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 7, 9]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            let col = ExactMatrix::from_rows(v.into_iter().map(|x| vec![x]).collect());
            assert!(a.matmul(&col).unwrap().to_rows().iter().flatten().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn combinations_lex() {
        let all: Vec<_> = combinations(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(15, 4).count(), 1365);
        for (k, s) in combinations(7, 3).enumerate() {
            assert_eq!(combination_rank(7, &s), k);
        }
    }
}
