use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use super::context::VarContext;
use super::monomial::{Monomial, MonomialOrder};
use crate::arith::{ExtElement, Field, Rational};
use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// Sparse polynomial: terms sorted strictly descending in `order`, no zero
/// coefficients, no repeated monomials.
#[derive(Clone, Debug)]
pub struct Polynomial<F> {
    ctx: Arc<VarContext>,
    order: MonomialOrder,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        if *self.ctx != *other.ctx || self.terms.len() != other.terms.len() {
            return false;
        }
        if self.order == other.order {
            self.terms == other.terms
        } else {
            self.terms == other.with_order(self.order).terms
        }
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ctx: &Arc<VarContext>) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            order: MonomialOrder::default(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ctx: &Arc<VarContext>, c: F) -> Self {
        Self::from_terms(ctx, MonomialOrder::default(), [(Monomial::one(), c)])
    }

    pub fn one(ctx: &Arc<VarContext>) -> Self {
        Self::constant(ctx, F::one())
    }

    pub fn var(ctx: &Arc<VarContext>, i: usize) -> Self {
        assert!(i < ctx.len(), "variable index out of range");
        Self::from_terms(ctx, MonomialOrder::default(), [(Monomial::var(i), F::one())])
    }

    pub fn monomial(ctx: &Arc<VarContext>, m: Monomial, c: F) -> Self {
        Self::from_terms(ctx, MonomialOrder::default(), [(m, c)])
    }

    /// Collects terms, merging repeated monomials and dropping zeros.
    pub fn from_terms(
        ctx: &Arc<VarContext>,
        order: MonomialOrder,
        terms: impl IntoIterator<Item = (Monomial, F)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, F> = HashMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(v) => *v = v.add_ref(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Monomial, F)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ctx: ctx.clone(),
            order,
            terms,
        }
    }

    /// Trusted constructor: `terms` already sorted and normalised.
    pub(crate) fn from_sorted(ctx: Arc<VarContext>, order: MonomialOrder, terms: Vec<(Monomial, F)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ctx, order, terms }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.ctx.len()
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_term(&self) -> Option<&(Monomial, F)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<&F> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map_or_else(F::zero, |(_, c)| c.clone())
    }

    /// Largest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// True iff every term has total degree `d` (vacuously for zero).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.iter().all(|(m, _)| m.degree() == d)
    }

    pub fn is_homogeneous_any(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.is_homogeneous(m.degree()),
        }
    }

    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ctx: self.ctx.clone(),
            order,
            terms,
        }
    }

    fn check_ctx(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.ctx, &other.ctx) || *self.ctx == *other.ctx,
            "polynomials from different rings"
        );
    }

    fn merge(&self, other: &Self, negate_other: bool) -> Self {
        self.check_ctx(other);
        let other = if other.order == self.order {
            std::borrow::Cow::Borrowed(other)
        } else {
            std::borrow::Cow::Owned(other.with_order(self.order))
        };
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_other { -b[j].1.clone() } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        a[i].1.sub_ref(&b[j].1)
                    } else {
                        a[i].1.add_ref(&b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate_other { -t.1.clone() } else { t.1.clone() };
            out.push((t.0, c));
        }
        Polynomial {
            ctx: self.ctx.clone(),
            order: self.order,
            terms: out,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ctx: self.ctx.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.is_zero() {
            return Self::zero(&self.ctx).with_order(self.order);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (*m, c.mul_ref(s))).collect(),
        }
    }

    /// `c · m · self`; multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx).with_order(self.order);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(t, d)| (t.mul(m), d.mul_ref(c)))
                .collect(),
        }
    }

    /// `self − c · m · g`, merged in one pass.
    pub fn sub_mul_term(&self, c: &F, m: &Monomial, g: &Self) -> Self {
        debug_assert_eq!(self.order, g.order);
        let a = &self.terms;
        let b = &g.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let bm = b[j].0.mul(m);
            match self.order.cmp(&a[i].0, &bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, -c.mul_ref(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = a[i].1.sub_ref(&c.mul_ref(&b[j].1));
                    if !v.is_zero() {
                        out.push((bm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            out.push((t.0.mul(m), -c.mul_ref(&t.1)));
        }
        Polynomial {
            ctx: self.ctx.clone(),
            order: self.order,
            terms: out,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ctx(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx).with_order(self.order);
        }
        let mut acc: HashMap<Monomial, F> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul_ref(cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = v.add_ref(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_terms(&self.ctx, self.order, acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.ctx).with_order(self.order);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.try_inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars(), "variable index out of range");
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exp(var);
            (e > 0).then(|| (m.with_exp(var, e - 1), c.mul_ref(&c.lift_like(Rational::from_integer(e.into())))))
        });
        Self::from_terms(&self.ctx, self.order, terms)
    }

    /// `f(xU)`: variable `x_j` becomes `Σ_i x_i U[i][j]` for the first
    /// `U.rows()` variables; remaining variables (λ) are left alone.
    pub fn linear_substitute(&self, u: &ExactMatrix<F>) -> Result<Self> {
        let k = u.rows();
        if u.cols() != k || k > self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars().min(u.cols()),
                found: k,
            });
        }
        let images: Vec<Self> = (0..k)
            .map(|j| {
                Self::from_terms(
                    &self.ctx,
                    self.order,
                    (0..k).map(|i| (Monomial::var(i), u[(i, j)].clone())),
                )
            })
            .collect();
        let mut powers: Vec<Vec<Self>> = images
            .iter()
            .map(|p| vec![Self::one(&self.ctx).with_order(self.order), p.clone()])
            .collect();
        let mut out = Self::zero(&self.ctx).with_order(self.order);
        for (m, c) in &self.terms {
            let mut rest = *m;
            let mut t = Self::constant(&self.ctx, c.clone()).with_order(self.order);
            for j in 0..k {
                let e = m.exp(j) as usize;
                rest = rest.with_exp(j, 0);
                if e == 0 {
                    continue;
                }
                while powers[j].len() <= e {
                    let next = powers[j].last().expect("nonempty").mul(&images[j]);
                    powers[j].push(next);
                }
                t = t.mul(&powers[j][e]);
            }
            out = out.add(&t.mul_term(&rest, &F::one()));
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[F]) -> Result<F> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: point.len(),
            });
        }
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (k, x) in point.iter().enumerate() {
                for _ in 0..m.exp(k) {
                    t = t.mul_ref(x);
                }
            }
            acc = acc.add_ref(&t);
        }
        Ok(acc)
    }

    pub fn evaluate_complex(&self, point: &[Complex64]) -> Result<Complex64> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: point.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(m, c)| {
                point
                    .iter()
                    .enumerate()
                    .fold(c.to_complex(), |acc, (k, x)| acc * x.powu(m.exp(k) as u32))
            })
            .sum())
    }

    /// Moves the polynomial into `ctx`, variable `i` going to `map[i]`.
    pub fn remap(&self, ctx: &Arc<VarContext>, map: &[usize], order: MonomialOrder) -> Self {
        assert_eq!(map.len(), self.nvars(), "map must cover every variable");
        let mut terms: Vec<(Monomial, F)> =
            self.terms.iter().map(|(m, c)| (m.remap(map), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ctx: ctx.clone(),
            order,
            terms,
        }
    }

    /// Sets variable `var` to 1 and drops it from the ring.
    pub fn dehomogenize(&self, var: usize) -> Self {
        let ctx = self.ctx.without(var);
        let n = self.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let exps: Vec<u16> = (0..n).filter(|&k| k != var).map(|k| m.exp(k)).collect();
            (Monomial::from_exponents(&exps), c.clone())
        });
        Self::from_terms(&ctx, self.order, terms)
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        let g = g.with_order(self.order);
        let (gm, gc) = g.leading_term()?.clone();
        let ginv = gc.try_inv().ok()?;
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, F)> = Vec::new();
        while let Some((m, c)) = rem.leading_term().cloned() {
            let q = m.div(&gm)?;
            let qc = c.mul_ref(&ginv);
            rem = rem.sub_mul_term(&qc, &q, &g);
            quot.push((q, qc));
        }
        Some(Polynomial {
            ctx: self.ctx.clone(),
            order: self.order,
            terms: quot,
        })
    }

    pub(crate) fn take_leading(&mut self) -> Option<(Monomial, F)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Appends a term smaller than every existing one.
    pub(crate) fn push_smallest(&mut self, m: Monomial, c: F) {
        debug_assert!(self
            .terms
            .last()
            .is_none_or(|(t, _)| self.order.cmp(t, &m) == Ordering::Greater));
        self.terms.push((m, c));
    }

    pub fn map_coefficients<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::from_terms(&self.ctx, self.order, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Largest coefficient magnitude under the complex embedding.
    pub fn max_coefficient_norm(&self) -> f64 {
        self.terms
            .iter()
            .map(|(_, c)| c.to_complex().norm())
            .fold(0.0, f64::max)
    }
}

impl Polynomial<ExtElement> {
    /// `Some` when every coefficient is rational.
    pub fn to_rational(&self) -> Option<Polynomial<Rational>> {
        let terms: Option<Vec<(Monomial, Rational)>> = self
            .terms
            .iter()
            .map(|(m, c)| c.to_rational().map(|q| (*m, q)))
            .collect();
        Some(Polynomial::from_sorted(self.ctx.clone(), self.order, terms?))
    }
}

impl Polynomial<Rational> {
    pub fn to_ext(&self) -> Polynomial<ExtElement> {
        Polynomial::from_sorted(
            self.ctx.clone(),
            self.order,
            self.terms
                .iter()
                .map(|(m, c)| (*m, ExtElement::rational(c.clone())))
                .collect(),
        )
    }
}

fn write_monomial(out: &mut String, ctx: &VarContext, m: &Monomial) {
    let mut first = true;
    for k in 0..ctx.len() {
        let e = m.exp(k);
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(ctx.name(k));
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    /// Prints in the parser grammar so output can be read back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let (text, atomic) = c.render();
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if atomic => (true, rest.to_string()),
                _ => (false, text),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&body);
            } else {
                if body != "1" {
                    out.push_str(&body);
                    out.push('*');
                }
                write_monomial(&mut out, &self.ctx, m);
            }
        }
        write!(f, "{out}")
    }
}
