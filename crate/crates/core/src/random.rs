//! Seeded generators for cubics, tensors and matrices over ℚ.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{rat, Rational};
use crate::matrix::ExactMatrix;
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarContext};
use crate::tensor::{cubic_monomials, CubicForm, PartiallySymmetricTensor};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer in [−bound, bound] over a denominator in 1..=den.
pub fn rational(rng: &mut impl Rng, bound: i64, den: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=den))
}

fn quadric_monomials(n: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in 0..=n {
        for j in i..=n {
            out.push(Monomial::var(i).mul(&Monomial::var(j)));
        }
    }
    out
}

fn random_form(rng: &mut impl Rng, n: usize, monomials: &[Monomial]) -> Polynomial<Rational> {
    let ctx = VarContext::projective(n);
    Polynomial::from_terms(
        &ctx,
        MonomialOrder::GrevLex,
        monomials.iter().map(|m| (*m, rational(rng, 9, 3))),
    )
}

/// A dense cubic in x0..xn with small rational coefficients.
pub fn cubic(rng: &mut impl Rng, n: usize) -> CubicForm<Rational> {
    loop {
        let f = random_form(rng, n, &cubic_monomials(n));
        if !f.is_zero() {
            return CubicForm::new(f).expect("cubic");
        }
    }
}

/// A tensor with independent dense quadrics.
pub fn tensor(rng: &mut impl Rng, n: usize) -> PartiallySymmetricTensor<Rational> {
    let ms = quadric_monomials(n);
    let qs = (0..=n).map(|_| random_form(rng, n, &ms)).collect();
    PartiallySymmetricTensor::new(&VarContext::projective(n), qs).expect("quadrics")
}

/// A tensor that is not the gradient of any cubic.
pub fn asymmetric_tensor(rng: &mut impl Rng, n: usize) -> PartiallySymmetricTensor<Rational> {
    loop {
        let t = tensor(rng, n);
        if !t.is_symmetric() {
            return t;
        }
    }
}

/// A random gradient tensor plus a nonzero quadric added to one slice.
pub fn perturbed_gradient(rng: &mut impl Rng, n: usize) -> (PartiallySymmetricTensor<Rational>, usize) {
    let base = cubic(rng, n).tensor();
    let slot = rng.gen_range(0..=n);
    let ms = quadric_monomials(n);
    loop {
        let delta = random_form(rng, n, &ms);
        let mut qs = base.quadrics().to_vec();
        qs[slot] = qs[slot].add(&delta);
        let t = PartiallySymmetricTensor::new(base.context(), qs).expect("quadrics");
        if !t.is_symmetric() {
            return (t, slot);
        }
    }
}

/// An invertible matrix with small integer entries.
pub fn invertible(rng: &mut impl Rng, n: usize) -> ExactMatrix<Rational> {
    loop {
        let m = ExactMatrix::from_fn(n, n, |_, _| rat(rng.gen_range(-3..=3), 1));
        if m.rank() == n {
            return m;
        }
    }
}

/// x0²·ℓ for a random linear form ℓ with ℓ ≠ 0.
pub fn x0_squared_times_linear(rng: &mut impl Rng, n: usize) -> (CubicForm<Rational>, Vec<Rational>) {
    let ctx = VarContext::projective(n);
    loop {
        let a: Vec<Rational> = (0..=n).map(|_| rational(rng, 5, 2)).collect();
        let ell = Polynomial::from_terms(
            &ctx,
            MonomialOrder::GrevLex,
            a.iter().enumerate().map(|(k, c)| (Monomial::var(k), c.clone())),
        );
        if ell.is_zero() {
            continue;
        }
        let x0 = Polynomial::var(&ctx, 0);
        return (CubicForm::new(x0.mul(&x0).mul(&ell)).expect("cubic"), a);
    }
}

/// A dense cubic in x0..x(n−1) read in x0..xn, so a cone over xn.
pub fn cone_cubic(rng: &mut impl Rng, n: usize) -> CubicForm<Rational> {
    let small = cubic(rng, n - 1);
    let ctx = VarContext::projective(n);
    let map: Vec<usize> = (0..n).collect();
    CubicForm::new(small.polynomial().remap(&ctx, &map, MonomialOrder::GrevLex)).expect("cubic")
}
