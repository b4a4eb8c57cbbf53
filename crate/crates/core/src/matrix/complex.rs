//! Dense double-precision complex matrices and a small eigensolver.
//!
//! Eigenvalues come from Householder reduction to upper Hessenberg form
//! followed by single-shift QR with Wilkinson shifts and deflation.
//! Eigenvectors are recovered by inverse iteration on the original matrix.

use std::ops::{Index, IndexMut};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

const MAX_ITER_PER_EIGENVALUE: usize = 500;
const MAX_RETRIES: usize = 3;
pub const EIGEN_RESIDUAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

/// Eigenvalues, unit eigenvectors and the scaled residual
/// ‖Mv − λv‖₂ / max(1, ‖M‖_F) of each pair.
#[derive(Debug, Clone)]
pub struct EigenResult {
    pub eigenvalues: Vec<Complex64>,
    pub eigenvectors: Vec<Vec<Complex64>>,
    pub residuals: Vec<f64>,
}

impl EigenResult {
    /// Indices whose residual exceeds the eigen tolerance.
    pub fn flagged(&self) -> Vec<usize> {
        (0..self.residuals.len())
            .filter(|&k| self.residuals[k] > EIGEN_RESIDUAL_TOL)
            .collect()
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.cols + c]
    }
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        ComplexMatrix {
            rows: r,
            cols: c,
            data: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn from_real_diagonal(d: &[f64]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (k, &x) in d.iter().enumerate() {
            m[(k, k)] = Complex64::new(x, 0.0);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn conj_transpose(&self) -> Self {
        let mut t = self.transpose();
        for z in &mut t.data {
            *z = z.conj();
        }
        t
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "inner dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// All eigenpairs. On QR stagnation the matrix is conjugated by a
    /// seeded random unitary and the iteration restarted (at most 3 times).
    pub fn eigen(&self, seed: u64) -> Result<EigenResult> {
        assert_eq!(self.rows, self.cols, "eigen of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Ok(EigenResult {
                eigenvalues: vec![],
                eigenvectors: vec![],
                residuals: vec![],
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut values = None;
        let mut work = self.clone();
        for attempt in 0..=MAX_RETRIES {
            if attempt > 0 {
                let q = random_unitary(n, &mut rng);
                work = q.conj_transpose().matmul(self).matmul(&q);
            }
            if let Some(v) = hessenberg_qr_eigenvalues(work.clone()) {
                values = Some(v);
                break;
            }
        }
        let eigenvalues = values.ok_or(Error::NoConvergence)?;
        let scale = self.frobenius_norm().max(1.0);
        let mut out = EigenResult {
            eigenvalues: Vec::with_capacity(n),
            eigenvectors: Vec::with_capacity(n),
            residuals: Vec::with_capacity(n),
        };
        for lambda in eigenvalues {
            let (lambda, v, res) = self.inverse_iteration(lambda, scale);
            out.eigenvalues.push(lambda);
            out.eigenvectors.push(v);
            out.residuals.push(res);
        }
        Ok(out)
    }

    fn residual(&self, lambda: Complex64, v: &[Complex64], scale: f64) -> f64 {
        let mv = self.mul_vec(v);
        mv.iter()
            .zip(v)
            .map(|(a, b)| (a - lambda * b).norm_sqr())
            .sum::<f64>()
            .sqrt()
            / scale
    }

    fn inverse_iteration(&self, lambda: Complex64, scale: f64) -> (Complex64, Vec<Complex64>, f64) {
        let n = self.rows;
        let shift = lambda + Complex64::new(1.0, 0.7) * (1e-13 * scale);
        let mut a = self.clone();
        for k in 0..n {
            a[(k, k)] -= shift;
        }
        let lu = Lu::factor(&a, 1e-300);
        let mut v: Vec<Complex64> = (0..n)
            .map(|k| Complex64::new(1.0 + 0.1 * k as f64, 0.05 * ((k * 7) % 5) as f64))
            .collect();
        normalize(&mut v);
        let mut best = (lambda, v.clone(), self.residual(lambda, &v, scale));
        for _ in 0..6 {
            let mut y = lu.solve(&v);
            if !normalize(&mut y) {
                break;
            }
            v = y;
            let res = self.residual(lambda, &v, scale);
            let mv = self.mul_vec(&v);
            let rq: Complex64 = v.iter().zip(&mv).map(|(a, b)| a.conj() * b).sum();
            let res_rq = self.residual(rq, &v, scale);
            let cand = if res_rq < res { (rq, res_rq) } else { (lambda, res) };
            if cand.1 < best.2 {
                best = (cand.0, v.clone(), cand.1);
            }
            if best.2 < 1e-14 {
                break;
            }
        }
        best
    }
}

fn normalize(v: &mut [Complex64]) -> bool {
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if !(norm.is_finite() && norm > 0.0) {
        return false;
    }
    // fix the phase so the largest entry is real and positive
    let big = v
        .iter()
        .copied()
        .max_by(|a, b| a.norm().total_cmp(&b.norm()))
        .unwrap_or(Complex64::new(1.0, 0.0));
    let phase = big.conj() / big.norm();
    for z in v.iter_mut() {
        *z = *z * phase / norm;
    }
    true
}

fn random_unitary(n: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    // Gram-Schmidt on a random Gaussian-ish matrix
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        for _ in 0..2 {
            for c in &cols {
                let dot: Complex64 = c.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                for (x, y) in v.iter_mut().zip(c) {
                    *x -= dot * y;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
    }
    let mut q = ComplexMatrix::zeros(n, n);
    for (j, c) in cols.iter().enumerate() {
        for (i, z) in c.iter().enumerate() {
            q[(i, j)] = *z;
        }
    }
    q
}

fn to_hessenberg(a: &mut ComplexMatrix) {
    let n = a.rows;
    for k in 0..n.saturating_sub(2) {
        let alpha_norm = ((k + 1)..n).map(|i| a[(i, k)].norm_sqr()).sum::<f64>().sqrt();
        if alpha_norm == 0.0 {
            continue;
        }
        let x0 = a[(k + 1, k)];
        let phase = if x0.norm() == 0.0 {
            Complex64::new(1.0, 0.0)
        } else {
            x0 / x0.norm()
        };
        let mut v: Vec<Complex64> = ((k + 1)..n).map(|i| a[(i, k)]).collect();
        v[0] += phase * alpha_norm;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for z in &mut v {
            *z /= vnorm;
        }
        // A <- (I - 2vv^H) A
        for j in 0..n {
            let dot: Complex64 = v
                .iter()
                .enumerate()
                .map(|(t, vt)| vt.conj() * a[(k + 1 + t, j)])
                .sum();
            for (t, vt) in v.iter().enumerate() {
                a[(k + 1 + t, j)] -= 2.0 * vt * dot;
            }
        }
        // A <- A (I - 2vv^H)
        for i in 0..n {
            let dot: Complex64 = v
                .iter()
                .enumerate()
                .map(|(t, vt)| a[(i, k + 1 + t)] * vt)
                .sum();
            for (t, vt) in v.iter().enumerate() {
                a[(i, k + 1 + t)] -= 2.0 * dot * vt.conj();
            }
        }
        for i in (k + 2)..n {
            a[(i, k)] = Complex64::new(0.0, 0.0);
        }
    }
}

fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    let r = (a.norm_sqr() + b.norm_sqr()).sqrt();
    if r == 0.0 {
        return (1.0, Complex64::new(0.0, 0.0));
    }
    if a.norm() == 0.0 {
        return (0.0, b.conj() / b.norm());
    }
    let c = a.norm() / r;
    let s = (a / a.norm()) * b.conj() / r;
    (c, s)
}

fn wilkinson_shift(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Complex64 {
    // eigenvalue of [[a, b], [c, d]] closest to d
    let tr = a + d;
    let det = a * d - b * c;
    let disc = (tr * tr - 4.0 * det).sqrt();
    let l1 = (tr + disc) / 2.0;
    let l2 = (tr - disc) / 2.0;
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

fn hessenberg_qr_eigenvalues(mut h: ComplexMatrix) -> Option<Vec<Complex64>> {
    let n = h.rows;
    if !h.is_finite() {
        return None;
    }
    to_hessenberg(&mut h);
    let eps = f64::EPSILON;
    let norm = h.frobenius_norm().max(f64::MIN_POSITIVE);
    let mut eigen = vec![Complex64::new(0.0, 0.0); n];
    let mut hi = n - 1;
    let mut iter = 0usize;
    loop {
        if hi == 0 {
            eigen[0] = h[(0, 0)];
            break;
        }
        // find the start of the active unreduced block
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let diag = h[(lo, lo)].norm() + h[(lo - 1, lo - 1)].norm();
            if sub <= eps * diag.max(eps * norm) {
                h[(lo, lo - 1)] = Complex64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eigen[hi] = h[(hi, hi)];
            hi -= 1;
            iter = 0;
            continue;
        }
        iter += 1;
        if iter > MAX_ITER_PER_EIGENVALUE {
            return None;
        }
        let mu = if iter % 11 == 10 {
            // exceptional shift
            h[(hi, hi)] + Complex64::new(h[(hi, hi - 1)].norm(), 0.0) * 0.75
        } else {
            wilkinson_shift(
                h[(hi - 1, hi - 1)],
                h[(hi - 1, hi)],
                h[(hi, hi - 1)],
                h[(hi, hi)],
            )
        };
        for k in lo..=hi {
            h[(k, k)] -= mu;
        }
        let mut rots = Vec::with_capacity(hi - lo);
        for k in lo..hi {
            let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
            for j in k..=hi {
                let x = h[(k, j)];
                let y = h[(k + 1, j)];
                h[(k, j)] = c * x + s * y;
                h[(k + 1, j)] = -s.conj() * x + c * y;
            }
            rots.push((c, s));
        }
        for (t, &(c, s)) in rots.iter().enumerate() {
            let k = lo + t;
            for i in lo..=(k + 2).min(hi) {
                let x = h[(i, k)];
                let y = h[(i, k + 1)];
                h[(i, k)] = x * c + y * s.conj();
                h[(i, k + 1)] = -x * s + y * c;
            }
        }
        for k in lo..=hi {
            h[(k, k)] += mu;
        }
        if !h.is_finite() {
            return None;
        }
    }
    Some(eigen)
}

/// LU factorisation with partial pivoting.
pub struct Lu {
    n: usize,
    lu: ComplexMatrix,
    perm: Vec<usize>,
}

impl Lu {
    /// Zero pivots are replaced by `tiny` so that near-singular shifted
    /// systems still produce a (huge) usable solution.
    pub fn factor(a: &ComplexMatrix, tiny: f64) -> Lu {
        let n = a.rows;
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| lu[(x, k)].norm().total_cmp(&lu[(y, k)].norm()))
                .unwrap_or(k);
            if p != k {
                for j in 0..n {
                    let t = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = t;
                }
                perm.swap(k, p);
            }
            if lu[(k, k)].norm() <= tiny {
                lu[(k, k)] = Complex64::new(tiny.max(1e-300), 0.0);
            }
            let piv = lu[(k, k)];
            for i in (k + 1)..n {
                let f = lu[(i, k)] / piv;
                lu[(i, k)] = f;
                if f != Complex64::new(0.0, 0.0) {
                    for j in (k + 1)..n {
                        let t = lu[(k, j)];
                        lu[(i, j)] -= f * t;
                    }
                }
            }
        }
        Lu { n, lu, perm }
    }

    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.n;
        let mut y: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let t = self.lu[(i, j)] * y[j];
                y[i] -= t;
            }
        }
        for i in (0..n).rev() {
            for j in (i + 1)..n {
                let t = self.lu[(i, j)] * y[j];
                y[i] -= t;
            }
            y[i] /= self.lu[(i, i)];
        }
        y
    }
}

/// Least-squares solution of `a x ≈ b` through the normal equations.
pub fn least_squares(a: &ComplexMatrix, b: &[Complex64]) -> Option<Vec<Complex64>> {
    let ah = a.conj_transpose();
    let normal = ah.matmul(a);
    let rhs = ah.mul_vec(b);
    let scale = normal.frobenius_norm();
    if !(scale.is_finite() && scale > 0.0) {
        return None;
    }
    let x = Lu::factor(&normal, 1e-14 * scale).solve(&rhs);
    x.iter()
        .all(|z| z.re.is_finite() && z.im.is_finite())
        .then_some(x)
}
