//! Numerical eigenpoints of zero-dimensional ideals via multiplication
//! matrices (Stickelberger), plus real counting and rational recovery.

mod recover;

use std::collections::{HashMap, HashSet, VecDeque};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, normal_form, Ideal};
use crate::matrix::{least_squares, ComplexMatrix};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

pub use recover::{rational_approximation, rational_recover};

const MAX_ATTEMPTS: u64 = 3;
const NEWTON_STEPS: usize = 60;

/// Tolerances and seed of the numerical solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub seed: u64,
    pub residual_tol: f64,
    pub real_tol: f64,
    pub cluster_tol: f64,
    /// Visit the charts xᵢ = 1 from i = n down to 0 (the default) or upward.
    pub descending_charts: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            seed: 0,
            residual_tol: 1e-8,
            real_tol: 1e-6,
            cluster_tol: 1e-7,
            descending_charts: true,
        }
    }
}

/// A point of complex projective space, scaled so its largest coordinate is 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePointC {
    coords: Vec<Complex64>,
}

impl ProjectivePointC {
    /// Normalises `coords`; `None` for the zero vector.
    pub fn new(coords: Vec<Complex64>) -> Option<Self> {
        let (k, big) = coords
            .iter()
            .enumerate()
            .fold((0, 0.0f64), |(bk, bv), (k, z)| if z.norm() > bv * (1.0 + 1e-9) { (k, z.norm()) } else { (bk, bv) });
        if !(big > 0.0 && big.is_finite()) {
            return None;
        }
        let s = coords[k];
        Some(ProjectivePointC {
            coords: coords.iter().map(|z| z / s).collect(),
        })
    }

    pub fn coords(&self) -> &[Complex64] {
        &self.coords
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.coords.iter().all(|z| z.im.abs() <= tol)
    }

    /// Fubini–Study distance (the angle between the lines).
    pub fn distance(&self, other: &ProjectivePointC) -> f64 {
        let unit = |v: &[Complex64]| {
            let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            v.iter().map(|z| z / n).collect::<Vec<_>>()
        };
        let a = unit(&self.coords);
        let b = unit(&other.coords);
        let inner: Complex64 = a.iter().zip(&b).map(|(x, y)| x.conj() * y).sum();
        if inner.norm() == 0.0 {
            return std::f64::consts::FRAC_PI_2;
        }
        let phase = inner.conj() / inner.norm();
        let chord = a
            .iter()
            .zip(&b)
            .map(|(x, y)| (x - y * phase).norm_sqr())
            .sum::<f64>()
            .sqrt();
        2.0 * (chord / 2.0).min(1.0).asin()
    }
}

/// Points found by the solver.
#[derive(Debug, Clone)]
pub struct SolutionSet {
    pub points: Vec<ProjectivePointC>,
    pub multiplicities: Vec<usize>,
    pub residuals: Vec<f64>,
    pub total_degree: u64,
}

impl SolutionSet {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }
}

/// Number of points whose normalised coordinates are all real within `real_tol`.
pub fn count_real(s: &SolutionSet, cfg: &SolverConfig) -> usize {
    s.points.iter().filter(|p| p.is_real(cfg.real_tol)).count()
}

/// Polynomial with coefficients pushed to complex floating point.
struct ComplexPoly {
    terms: Vec<(Monomial, Complex64)>,
    scale: f64,
}

impl ComplexPoly {
    fn new<F: Field>(p: &Polynomial<F>) -> Self {
        let terms: Vec<(Monomial, Complex64)> = p.terms().iter().map(|(m, c)| (*m, c.to_complex())).collect();
        let scale = terms.iter().map(|t| t.1.norm()).fold(1.0, f64::max);
        ComplexPoly { terms, scale }
    }

    fn eval(&self, x: &[Complex64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                x.iter()
                    .enumerate()
                    .fold(*c, |acc, (k, z)| acc * z.powu(m.exp(k) as u32))
            })
            .sum()
    }

    fn gradient(&self, x: &[Complex64]) -> Vec<Complex64> {
        let mut g = vec![Complex64::new(0.0, 0.0); x.len()];
        for (m, c) in &self.terms {
            for (j, gj) in g.iter_mut().enumerate() {
                let e = m.exp(j);
                if e == 0 {
                    continue;
                }
                let mut t = *c * e as f64;
                for (k, z) in x.iter().enumerate() {
                    let p = if k == j { e - 1 } else { m.exp(k) };
                    t *= z.powu(p as u32);
                }
                *gj += t;
            }
        }
        g
    }
}

/// Monomials outside the leading-term ideal, breadth first from 1.
fn standard_monomials<F: Field>(gb: &[Polynomial<F>], nvars: usize, cap: usize) -> Option<Vec<Monomial>> {
    let leads: Vec<Monomial> = gb.iter().map(|g| *g.leading_monomial().expect("nonzero")).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([Monomial::one()]);
    while let Some(m) = queue.pop_front() {
        if !seen.insert(m) || leads.iter().any(|l| l.divides(&m)) {
            continue;
        }
        out.push(m);
        if out.len() > cap {
            return None;
        }
        for k in 0..nvars {
            queue.push_back(m.mul(&Monomial::var(k)));
        }
    }
    out.sort_by(|a, b| MonomialOrder::GrevLex.cmp(a, b));
    Some(out)
}

/// Coordinates of `p` (already reduced) in the standard-monomial basis.
fn coordinates<F: Field>(p: &Polynomial<F>, index: &HashMap<Monomial, usize>, len: usize) -> Vec<Complex64> {
    let mut v = vec![Complex64::new(0.0, 0.0); len];
    for (m, c) in p.terms() {
        v[index[m]] = c.to_complex();
    }
    v
}

struct ChartPoint {
    point: ProjectivePointC,
    residual: f64,
}

enum ChartOutcome {
    Points(Vec<ChartPoint>),
    Retry,
}

fn gauss_newton(eqs: &[ComplexPoly], mut x: Vec<Complex64>) -> Vec<Complex64> {
    for _ in 0..NEWTON_STEPS {
        let f: Vec<Complex64> = eqs.iter().map(|e| -e.eval(&x) / e.scale).collect();
        let size = f.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if size < 1e-15 {
            break;
        }
        let rows: Vec<Vec<Complex64>> = eqs
            .iter()
            .map(|e| e.gradient(&x).into_iter().map(|g| g / e.scale).collect())
            .collect();
        let Some(dx) = least_squares(&ComplexMatrix::from_rows(&rows), &f) else {
            break;
        };
        let step = dx.iter().map(|z| z.norm()).fold(0.0, f64::max);
        for (xi, d) in x.iter_mut().zip(&dx) {
            *xi += d;
        }
        if step < 1e-15 * (1.0 + x.iter().map(|z| z.norm()).fold(0.0, f64::max)) {
            break;
        }
    }
    x
}

fn relative_residual(eqs: &[ComplexPoly], p: &ProjectivePointC) -> f64 {
    eqs.iter()
        .map(|e| e.eval(p.coords()).norm() / e.scale)
        .fold(0.0, f64::max)
}

/// Points of the homogeneous ideal with xᵢ ≠ 0.
fn solve_chart<F: Field>(
    homogeneous_gb: &[Polynomial<F>],
    chart: usize,
    degree: usize,
    rng: &mut ChaCha8Rng,
    cfg: &SolverConfig,
    residual_eqs: &[ComplexPoly],
) -> Result<ChartOutcome> {
    let affine: Vec<Polynomial<F>> = homogeneous_gb.iter().map(|g| g.dehomogenize(chart)).collect();
    let nv = affine[0].nvars();
    let ctx = affine[0].context().clone();
    let gb = groebner_basis(&affine, MonomialOrder::GrevLex);
    if gb.first().is_some_and(|g| g.is_constant()) {
        return Ok(ChartOutcome::Points(Vec::new()));
    }
    let basis = standard_monomials(&gb, nv, degree).ok_or(Error::NotZeroDimensional(1))?;
    let len = basis.len();
    if len == 0 {
        return Ok(ChartOutcome::Points(Vec::new()));
    }
    let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let weights: Vec<i64> = (0..nv).map(|_| rng.gen_range(1..=97) * if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
    let h = (0..nv).fold(Polynomial::<F>::zero(&ctx), |acc, k| {
        acc.add(&Polynomial::var(&ctx, k).scale(&F::from_i64(weights[k])))
    });
    let mut mt = ComplexMatrix::zeros(len, len);
    for (k, b) in basis.iter().enumerate() {
        let image = normal_form(&h.mul_term(b, &F::one()), &gb);
        for (j, v) in coordinates(&image, &index, len).into_iter().enumerate() {
            // row k of the transpose
            mt[(k, j)] = v;
        }
    }
    let var_images: Vec<Vec<Complex64>> = (0..nv)
        .map(|k| coordinates(&normal_form(&Polynomial::var(&ctx, k), &gb), &index, len))
        .collect();
    let one = index[&Monomial::one()];
    let eigen = mt.eigen(rng.gen())?;
    if !eigen.flagged().is_empty() {
        return Ok(ChartOutcome::Retry);
    }
    let affine_eqs: Vec<ComplexPoly> = gb.iter().map(ComplexPoly::new).collect();
    let mut found: Vec<ChartPoint> = Vec::new();
    for v in &eigen.eigenvectors {
        if v[one].norm() < 1e-10 * v.iter().map(|z| z.norm()).fold(0.0, f64::max) {
            return Ok(ChartOutcome::Retry);
        }
        let v: Vec<Complex64> = v.iter().map(|z| z / v[one]).collect();
        let y0: Vec<Complex64> = var_images
            .iter()
            .map(|img| img.iter().zip(&v).map(|(a, b)| a * b).sum())
            .collect();
        let y = gauss_newton(&affine_eqs, y0);
        let mut coords = y;
        coords.insert(chart, Complex64::new(1.0, 0.0));
        let Some(point) = ProjectivePointC::new(coords) else {
            return Ok(ChartOutcome::Retry);
        };
        let residual = relative_residual(residual_eqs, &point);
        if residual.is_nan() || residual > cfg.residual_tol {
            return Ok(ChartOutcome::Retry);
        }
        found.push(ChartPoint { point, residual });
    }
    Ok(ChartOutcome::Points(found))
}

fn solve_once<F: Field>(
    gb: &[Polynomial<F>],
    n: usize,
    degree: u64,
    cfg: &SolverConfig,
    seed: u64,
) -> Result<Option<SolutionSet>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let residual_eqs: Vec<ComplexPoly> = gb.iter().map(ComplexPoly::new).collect();
    let charts: Vec<usize> = if cfg.descending_charts {
        (0..=n).rev().collect()
    } else {
        (0..=n).collect()
    };
    let mut points: Vec<ProjectivePointC> = Vec::new();
    let mut mults: Vec<usize> = Vec::new();
    let mut residuals: Vec<f64> = Vec::new();
    for chart in charts {
        let found = match solve_chart(gb, chart, degree as usize, &mut rng, cfg, &residual_eqs)? {
            ChartOutcome::Points(p) => p,
            ChartOutcome::Retry => return Ok(None),
        };
        let mut local: Vec<(ChartPoint, usize)> = Vec::new();
        for cp in found {
            match local
                .iter_mut()
                .find(|(q, _)| q.point.distance(&cp.point) < cfg.cluster_tol)
            {
                Some((_, m)) => *m += 1,
                None => local.push((cp, 1)),
            }
        }
        for (cp, m) in local {
            if points.iter().any(|q| q.distance(&cp.point) < cfg.cluster_tol) {
                continue;
            }
            points.push(cp.point);
            mults.push(m);
            residuals.push(cp.residual);
        }
    }
    if mults.iter().sum::<usize>() as u64 != degree {
        return Ok(None);
    }
    Ok(Some(SolutionSet {
        points,
        multiplicities: mults,
        residuals,
        total_degree: degree,
    }))
}

/// All points of a homogeneous zero-dimensional ideal.
pub fn solve_projective<F: Field>(ideal: &Ideal<F>, cfg: &SolverConfig) -> Result<SolutionSet> {
    let h = ideal.hilbert()?;
    match h.projective_dimension {
        -1 => {
            return Ok(SolutionSet {
                points: Vec::new(),
                multiplicities: Vec::new(),
                residuals: Vec::new(),
                total_degree: 0,
            })
        }
        0 => {}
        d => return Err(Error::NotZeroDimensional(d)),
    }
    let degree = h.degree.expect("zero-dimensional schemes have a degree");
    let n = ideal.context().len() - 1;
    for attempt in 0..MAX_ATTEMPTS {
        let seed = cfg.seed.wrapping_add(attempt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        if let Some(s) = solve_once(ideal.groebner(), n, degree, cfg, seed)? {
            return Ok(s);
        }
    }
    Err(Error::NoConvergence)
}

#[cfg(test)]
mod tests;
