use std::sync::{Arc, OnceLock};

use rayon::prelude::*;

use super::buchberger::{groebner_basis, normal_form, reduce_basis};
use super::hilbert::{hilbert_from_leading, HilbertData};
use crate::arith::Field;
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarContext};

const AUX: &str = "_t";

/// An ideal given by generators, with its reduced grevlex basis cached.
#[derive(Debug)]
pub struct Ideal<F> {
    ctx: Arc<VarContext>,
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<Vec<Polynomial<F>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal {
            ctx: self.ctx.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ctx: &Arc<VarContext>, gens: impl IntoIterator<Item = Polynomial<F>>) -> Self {
        let gens: Vec<Polynomial<F>> = gens
            .into_iter()
            .filter(|p| !p.is_zero())
            .map(|p| {
                assert_eq!(**p.context(), **ctx, "generator from a different ring");
                p.with_order(MonomialOrder::GrevLex)
            })
            .collect();
        Ideal {
            ctx: ctx.clone(),
            gens,
            gb: OnceLock::new(),
        }
    }

    /// Builds an ideal from a reduced grevlex basis, skipping recomputation.
    pub(crate) fn from_reduced_basis(ctx: &Arc<VarContext>, gb: Vec<Polynomial<F>>) -> Self {
        let cache = OnceLock::new();
        let _ = cache.set(gb.clone());
        Ideal {
            ctx: ctx.clone(),
            gens: gb,
            gb: cache,
        }
    }

    pub fn zero(ctx: &Arc<VarContext>) -> Self {
        Self::new(ctx, [])
    }

    pub fn unit(ctx: &Arc<VarContext>) -> Self {
        Self::new(ctx, [Polynomial::one(ctx)])
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous_any())
    }

    /// Reduced Gröbner basis in grevlex, computed once.
    pub fn groebner(&self) -> &[Polynomial<F>] {
        self.gb.get_or_init(|| groebner_basis(&self.gens, MonomialOrder::GrevLex))
    }

    /// Reduced Gröbner basis in an arbitrary order (not cached).
    pub fn groebner_in(&self, order: MonomialOrder) -> Vec<Polynomial<F>> {
        if order == MonomialOrder::GrevLex {
            return self.groebner().to_vec();
        }
        groebner_basis(&self.gens, order)
    }

    pub fn normal_form(&self, p: &Polynomial<F>) -> Polynomial<F> {
        normal_form(p, self.groebner())
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().first().is_some_and(|g| g.is_constant())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains_polynomial(&self, p: &Polynomial<F>) -> bool {
        self.normal_form(p).is_zero()
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal<F>) -> bool {
        self.check_ctx(other);
        other.gens.iter().all(|g| self.contains_polynomial(g))
    }

    /// Equality via the unique reduced basis.
    pub fn equals(&self, other: &Ideal<F>) -> bool {
        self.check_ctx(other);
        self.groebner() == other.groebner()
    }

    fn check_ctx(&self, other: &Ideal<F>) {
        assert_eq!(*self.ctx, *other.ctx, "ideals from different rings");
    }

    /// Ideal generated by the union of generators.
    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        self.check_ctx(other);
        Ideal::new(&self.ctx, self.gens.iter().chain(other.gens.iter()).cloned())
    }

    pub fn product(&self, other: &Ideal<F>) -> Ideal<F> {
        self.check_ctx(other);
        Ideal::new(
            &self.ctx,
            self.gens
                .iter()
                .flat_map(|a| other.gens.iter().map(move |b| a.mul(b))),
        )
    }

    /// I ∩ J via t·I + (1 − t)·J and elimination of t.
    pub fn intersect(&self, other: &Ideal<F>) -> Ideal<F> {
        self.check_ctx(other);
        if self.is_zero() || other.is_zero() {
            return Ideal::zero(&self.ctx);
        }
        if self.is_unit() {
            return other.canonical();
        }
        if other.is_unit() {
            return self.canonical();
        }
        let n = self.ctx.len();
        let big = self.ctx.prepend(AUX).expect("room for an auxiliary variable");
        let shift: Vec<usize> = (1..=n).collect();
        let order = MonomialOrder::Elimination(1);
        let t = Polynomial::<F>::var(&big, 0).with_order(order);
        let one_minus_t = Polynomial::one(&big).with_order(order).sub(&t);
        let mut gens = Vec::new();
        for g in self.groebner() {
            gens.push(g.remap(&big, &shift, order).mul(&t));
        }
        for g in other.groebner() {
            gens.push(g.remap(&big, &shift, order).mul(&one_minus_t));
        }
        let gb = groebner_basis(&gens, order);
        let kept: Vec<Polynomial<F>> = gb
            .into_iter()
            .filter(|p| p.terms().iter().all(|(m, _)| m.exp(0) == 0))
            .map(|p| drop_first_variable(&p, &self.ctx))
            .collect();
        Ideal::from_reduced_basis(&self.ctx, kept)
    }

    /// Ideal with the same generators as its reduced basis.
    fn canonical(&self) -> Ideal<F> {
        Ideal::from_reduced_basis(&self.ctx, self.groebner().to_vec())
    }

    /// I : (g) = (I ∩ (g)) / g.
    pub fn quotient(&self, g: &Polynomial<F>) -> Result<Ideal<F>> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let principal = Ideal::new(&self.ctx, [g.clone()]);
        let meet = self.intersect(&principal);
        let divided: Vec<Polynomial<F>> = meet
            .groebner()
            .iter()
            .map(|h| h.exact_div(g).expect("elements of I ∩ (g) are divisible by g"))
            .collect();
        Ok(Ideal::from_reduced_basis(&self.ctx, reduce_basis(divided)))
    }

    /// I : J = ∩_j I : (g_j).
    pub fn quotient_ideal(&self, other: &Ideal<F>) -> Ideal<F> {
        self.check_ctx(other);
        let gens = other.groebner();
        if gens.is_empty() {
            return Ideal::unit(&self.ctx);
        }
        let parts: Vec<Ideal<F>> = gens
            .par_iter()
            .map(|g| self.quotient(g).expect("basis elements are nonzero"))
            .collect();
        let mut acc = parts[0].clone();
        for p in &parts[1..] {
            if acc.contains(p) {
                acc = p.clone();
            } else if !p.contains(&acc) {
                acc = acc.intersect(p);
            }
        }
        acc
    }

    /// I : J^∞ by iterated quotients until the reduced basis stabilises.
    pub fn saturate(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut cur = self.canonical();
        loop {
            let next = cur.quotient_ideal(other);
            if next.equals(&cur) {
                return cur;
            }
            cur = next;
        }
    }

    /// Eliminates the listed variables; the result lives in the ring
    /// without them.
    pub fn eliminate(&self, vars: &[usize]) -> Ideal<F> {
        let n = self.ctx.len();
        assert!(!vars.is_empty() && vars.len() < n, "must eliminate a proper nonempty subset");
        let k = vars.len();
        let rest: Vec<usize> = (0..n).filter(|v| !vars.contains(v)).collect();
        let mut map = vec![0usize; n];
        for (pos, &v) in vars.iter().chain(rest.iter()).enumerate() {
            map[v] = pos;
        }
        let names: Vec<String> = vars
            .iter()
            .chain(rest.iter())
            .map(|&v| self.ctx.name(v).to_string())
            .collect();
        let perm_ctx = VarContext::reordered(names);
        let order = MonomialOrder::Elimination(k);
        let gens: Vec<Polynomial<F>> = self.gens.iter().map(|g| g.remap(&perm_ctx, &map, order)).collect();
        let gb = groebner_basis(&gens, order);
        let target = VarContext::reordered(rest.iter().map(|&v| self.ctx.name(v).to_string()).collect());
        let kept = gb.into_iter().filter(|p| {
            p.terms()
                .iter()
                .all(|(m, _)| (0..k).all(|j| m.exp(j) == 0))
        });
        let out: Vec<Polynomial<F>> = kept
            .map(|p| {
                let terms = p.terms().iter().map(|(m, c)| {
                    let exps: Vec<u16> = (k..n).map(|j| m.exp(j)).collect();
                    (Monomial::from_exponents(&exps), c.clone())
                });
                Polynomial::from_terms(&target, MonomialOrder::GrevLex, terms)
            })
            .collect();
        Ideal::new(&target, out)
    }

    /// Projective dimension and degree of the subscheme cut out.
    pub fn hilbert(&self) -> Result<HilbertData> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let leading: Vec<Monomial> = self
            .groebner()
            .iter()
            .map(|g| *g.leading_monomial().expect("nonzero"))
            .collect();
        Ok(hilbert_from_leading(&leading, self.ctx.len()))
    }

    /// Image under `f ↦ f(xU)` applied to every generator.
    pub fn linear_substitute(&self, u: &crate::matrix::ExactMatrix<F>) -> Result<Ideal<F>> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.linear_substitute(u))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(&self.ctx, gens))
    }
}

fn drop_first_variable<F: Field>(p: &Polynomial<F>, ctx: &Arc<VarContext>) -> Polynomial<F> {
    let n = ctx.len();
    let terms = p.terms().iter().map(|(m, c)| {
        let exps: Vec<u16> = (1..=n).map(|j| m.exp(j)).collect();
        (Monomial::from_exponents(&exps), c.clone())
    });
    Polynomial::from_terms(ctx, MonomialOrder::GrevLex, terms)
}
