//! Partially symmetric tensors, cubic forms and their eigenschemes.

mod report;

use std::sync::Arc;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::matrix::ExactMatrix;
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarContext};

pub use report::{analyze, analyze_cubic, EigenschemeReport};

/// A tuple (q₀, …, qₙ) of quadratic forms in x₀, …, xₙ.
#[derive(Debug, Clone, PartialEq)]
pub struct PartiallySymmetricTensor<F: Field> {
    ctx: Arc<VarContext>,
    quadrics: Vec<Polynomial<F>>,
}

impl<F: Field> PartiallySymmetricTensor<F> {
    pub fn new(ctx: &Arc<VarContext>, quadrics: Vec<Polynomial<F>>) -> Result<Self> {
        if ctx.has_lambda() || quadrics.len() != ctx.len() {
            return Err(Error::DimensionMismatch {
                expected: ctx.x_count(),
                found: quadrics.len(),
            });
        }
        if quadrics.iter().any(|q| !q.is_homogeneous(2)) {
            return Err(Error::WrongDegree(2));
        }
        Ok(PartiallySymmetricTensor {
            ctx: ctx.clone(),
            quadrics: quadrics
                .into_iter()
                .map(|q| q.with_order(MonomialOrder::GrevLex))
                .collect(),
        })
    }

    pub fn zero(n: usize) -> Self {
        let ctx = VarContext::projective(n);
        let quadrics = vec![Polynomial::zero(&ctx); n + 1];
        PartiallySymmetricTensor { ctx, quadrics }
    }

    /// Ambient projective dimension.
    pub fn n(&self) -> usize {
        self.quadrics.len() - 1
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn quadrics(&self) -> &[Polynomial<F>] {
        &self.quadrics
    }

    fn x(&self, i: usize) -> Polynomial<F> {
        Polynomial::var(&self.ctx, i)
    }

    /// (q₀(p), …, qₙ(p)).
    pub fn contract(&self, point: &[F]) -> Result<Vec<F>> {
        self.quadrics.iter().map(|q| q.evaluate(point)).collect()
    }

    /// The 2×2 minors xᵢqⱼ − xⱼqᵢ.
    pub fn eigenscheme_generators(&self) -> Vec<Polynomial<F>> {
        let n = self.n();
        let mut out = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..=n {
            for j in i + 1..=n {
                out.push(self.x(i).mul(&self.quadrics[j]).sub(&self.x(j).mul(&self.quadrics[i])));
            }
        }
        out
    }

    pub fn eigenscheme_ideal(&self) -> Ideal<F> {
        Ideal::new(&self.ctx, self.eigenscheme_generators())
    }

    /// Generators qᵢ − λxᵢ in x₀, …, xₙ, L.
    pub fn eigenpair_generators(&self) -> Vec<Polynomial<F>> {
        let n = self.n();
        let big = VarContext::with_lambda(n);
        let map: Vec<usize> = (0..=n).collect();
        let lambda = Polynomial::var(&big, n + 1);
        (0..=n)
            .map(|i| {
                self.quadrics[i]
                    .remap(&big, &map, MonomialOrder::GrevLex)
                    .sub(&lambda.mul(&Polynomial::var(&big, i)))
            })
            .collect()
    }

    pub fn eigenpair_ideal(&self) -> Ideal<F> {
        let big = VarContext::with_lambda(self.n());
        Ideal::new(&big, self.eigenpair_generators())
    }

    pub fn irregular_ideal(&self) -> Ideal<F> {
        Ideal::new(&self.ctx, self.quadrics.clone())
    }

    /// I(E) : I(Irr)^∞.
    pub fn regular_ideal(&self) -> Ideal<F> {
        self.eigenscheme_ideal().saturate(&self.irregular_ideal())
    }

    /// Ψ_U T = (q₀(xU), …, qₙ(xU)) · U⁻¹.
    pub fn twisted_action(&self, u: &ExactMatrix<F>) -> Result<Self> {
        let n = self.n();
        if u.rows() != n + 1 || u.cols() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                found: u.rows(),
            });
        }
        let inv = u.inverse()?;
        let subs = self
            .quadrics
            .iter()
            .map(|q| q.linear_substitute(u))
            .collect::<Result<Vec<_>>>()?;
        let quadrics = (0..=n)
            .map(|j| {
                (0..=n).fold(Polynomial::zero(&self.ctx), |acc, i| acc.add(&subs[i].scale(&inv[(i, j)])))
            })
            .collect();
        Ok(PartiallySymmetricTensor {
            ctx: self.ctx.clone(),
            quadrics,
        })
    }

    /// A linear form ℓ with qᵢ = ℓ·xᵢ for all i, when one exists.
    pub fn trivial_eigenscheme_witness(&self) -> Option<Polynomial<F>> {
        if self.eigenscheme_generators().iter().any(|g| !g.is_zero()) {
            return None;
        }
        let Some(i) = self.quadrics.iter().position(|q| !q.is_zero()) else {
            return Some(Polynomial::zero(&self.ctx));
        };
        let ell = self.quadrics[i].exact_div(&self.x(i))?;
        (0..=self.n())
            .all(|k| self.x(k).mul(&ell) == self.quadrics[k])
            .then_some(ell)
    }

    /// Jacobian of qᵢ − xᵢ (the λ = 1 chart) at the origin equals −I.
    pub fn apex_jacobian_check(&self) -> bool {
        let n = self.n();
        let affine: Vec<Polynomial<F>> = self
            .eigenpair_generators()
            .iter()
            .map(|g| g.dehomogenize(n + 1))
            .collect();
        let origin = vec![F::zero(); n + 1];
        (0..=n).all(|i| {
            (0..=n).all(|j| {
                let d = affine[i].derivative(j).evaluate(&origin).expect("arity matches");
                let expected = if i == j { -F::one() } else { F::zero() };
                d == expected
            })
        })
    }

    /// True when ∂qᵢ/∂xⱼ = ∂qⱼ/∂xᵢ for all i < j.
    pub fn symmetry_conditions(&self) -> Vec<((usize, usize), bool)> {
        let n = self.n();
        let mut out = Vec::new();
        for i in 0..=n {
            for j in i + 1..=n {
                let ok = self.quadrics[i].derivative(j) == self.quadrics[j].derivative(i);
                out.push(((i, j), ok));
            }
        }
        out
    }

    /// The cubic f with ∇f = T, if T is symmetric.
    pub fn symmetric_witness(&self) -> Option<CubicForm<F>> {
        if !self.symmetry_conditions().iter().all(|(_, ok)| *ok) {
            return None;
        }
        let third = F::from_rational(crate::arith::rat(1, 3));
        let f = (0..=self.n())
            .fold(Polynomial::zero(&self.ctx), |acc, i| acc.add(&self.x(i).mul(&self.quadrics[i])))
            .scale(&third);
        let cubic = CubicForm::new(f).ok()?;
        (cubic.tensor() == *self).then_some(cubic)
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric_witness().is_some()
    }
}

/// A homogeneous cubic polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicForm<F: Field> {
    f: Polynomial<F>,
}

impl<F: Field> CubicForm<F> {
    pub fn new(f: Polynomial<F>) -> Result<Self> {
        if f.context().has_lambda() {
            return Err(Error::InvalidContext("cubic forms do not involve L".into()));
        }
        if f.is_zero() || !f.is_homogeneous(3) {
            return Err(Error::WrongDegree(3));
        }
        Ok(CubicForm {
            f: f.with_order(MonomialOrder::GrevLex),
        })
    }

    pub fn n(&self) -> usize {
        self.f.nvars() - 1
    }

    pub fn polynomial(&self) -> &Polynomial<F> {
        &self.f
    }

    /// qᵢ = ∂f/∂xᵢ, without the 1/n normalisation.
    pub fn tensor(&self) -> PartiallySymmetricTensor<F> {
        PartiallySymmetricTensor {
            ctx: self.f.context().clone(),
            quadrics: (0..=self.n()).map(|i| self.f.derivative(i)).collect(),
        }
    }

    /// f(x₀, …, x_{n−1}, 0) for a cone over the last variable.
    pub fn cone_reduce(&self) -> Result<CubicForm<F>> {
        let n = self.n();
        if n == 0 || !self.f.derivative(n).is_zero() {
            return Err(Error::NotACone);
        }
        let small = VarContext::projective(n - 1);
        let terms = self.f.terms().iter().map(|(m, c)| {
            let exps: Vec<u16> = (0..n).map(|k| m.exp(k)).collect();
            (Monomial::from_exponents(&exps), c.clone())
        });
        CubicForm::new(Polynomial::from_terms(&small, MonomialOrder::GrevLex, terms))
    }
}

/// The extension φ of an ideal of Pⁿ⁻¹ to Pⁿ, plus (xₙ).
pub fn embed_as_hyperplane<F: Field>(ideal: &Ideal<F>, n: usize) -> Ideal<F> {
    let big = VarContext::projective(n);
    let map: Vec<usize> = (0..n).collect();
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.remap(&big, &map, MonomialOrder::GrevLex))
        .chain([Polynomial::var(&big, n)]);
    Ideal::new(&big, gens)
}

/// Monomials of degree 3 in n+1 variables, in descending grevlex order.
pub fn cubic_monomials(n: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in a..=n {
            for c in b..=n {
                let mut e = vec![0u16; n + 1];
                e[a] += 1;
                e[b] += 1;
                e[c] += 1;
                out.push(Monomial::from_exponents(&e));
            }
        }
    }
    out.sort_by(|a, b| MonomialOrder::GrevLex.cmp(b, a));
    out
}

/// Cubics whose eigenscheme contains every given point, as an exact
/// nullspace basis, together with the rank of the linear system.
pub fn cubic_from_points<F: Field>(points: &[Vec<F>], n: usize) -> Result<(Vec<CubicForm<F>>, usize)> {
    let ctx = VarContext::projective(n);
    let monos = cubic_monomials(n);
    let grads: Vec<Vec<Polynomial<F>>> = monos
        .iter()
        .map(|m| {
            let p = Polynomial::monomial(&ctx, *m, F::one());
            (0..=n).map(|i| p.derivative(i)).collect()
        })
        .collect();
    let mut rows = Vec::new();
    for p in points {
        if p.len() != n + 1 {
            return Err(Error::DimensionMismatch {
                expected: n + 1,
                found: p.len(),
            });
        }
        let values: Vec<Vec<F>> = grads
            .iter()
            .map(|g| g.iter().map(|d| d.evaluate(p)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        for i in 0..=n {
            for j in i + 1..=n {
                rows.push(
                    values
                        .iter()
                        .map(|v| v[i].mul_ref(&p[j]).sub_ref(&v[j].mul_ref(&p[i])))
                        .collect::<Vec<F>>(),
                );
            }
        }
    }
    let m = if rows.is_empty() {
        ExactMatrix::zeros(0, monos.len())
    } else {
        ExactMatrix::from_rows(rows)
    };
    let (_, pivots) = m.rref();
    let basis = m
        .nullspace()
        .into_iter()
        .map(|v| {
            let f = Polynomial::from_terms(&ctx, MonomialOrder::GrevLex, monos.iter().copied().zip(v));
            CubicForm::new(f)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((basis, pivots.len()))
}

/// True when `f` lies in the span of `basis`.
pub fn in_span<F: Field>(f: &CubicForm<F>, basis: &[CubicForm<F>]) -> bool {
    let n = f.n();
    let monos = cubic_monomials(n);
    let vec_of = |g: &CubicForm<F>| -> Vec<F> { monos.iter().map(|m| g.polynomial().coefficient(m)).collect() };
    let mut rows: Vec<Vec<F>> = basis.iter().map(vec_of).collect();
    let r0 = if rows.is_empty() { 0 } else { ExactMatrix::from_rows(rows.clone()).rank() };
    rows.push(vec_of(f));
    ExactMatrix::from_rows(rows).rank() == r0
}

#[cfg(test)]
mod tests;
