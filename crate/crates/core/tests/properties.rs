use std::sync::Arc;

use num_complex::Complex64;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use eigencubic_core::arith::{int, rat, ExtElement, Field, FieldDescriptor, Rational};
use eigencubic_core::corpus;
use eigencubic_core::grassmann::{
    binary_eigendiscriminant, pairing, plane_from_tensor, pluecker, tensor_from_plane, veronese,
};
use eigencubic_core::groebner::{groebner_basis, hilbert_function, is_groebner_basis, Ideal};
use eigencubic_core::matrix::{ComplexMatrix, ExactMatrix};
use eigencubic_core::poly::{parse, parse_rational, Monomial, MonomialOrder, Polynomial, VarContext};
use eigencubic_core::random;
use eigencubic_core::reproduce::rational_corpus;
use eigencubic_core::solve::{rational_recover, solve_projective, SolverConfig};
use eigencubic_core::tensor::PartiallySymmetricTensor;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(a, b)| rat(a, b))
}

fn element(field: Arc<FieldDescriptor>) -> impl Strategy<Value = ExtElement> {
    let d = field.degree();
    prop::collection::vec(small_rational(), d).prop_map(move |c| ExtElement::new(&field, c))
}

fn fields() -> Vec<Arc<FieldDescriptor>> {
    vec![FieldDescriptor::gaussian(), FieldDescriptor::theta(), FieldDescriptor::theta_gaussian()]
}

fn random_poly(rng: &mut ChaCha8Rng, ctx: &Arc<VarContext>, max_deg: u16, terms: usize) -> Polynomial<Rational> {
    let n = ctx.len();
    Polynomial::from_terms(
        ctx,
        MonomialOrder::GrevLex,
        (0..terms).map(|_| {
            let exps: Vec<u16> = (0..n).map(|_| rng.gen_range(0..=max_deg / n as u16 + 1)).collect();
            (Monomial::from_exponents(&exps), random::rational(rng, 7, 3))
        }),
    )
}

fn random_form(rng: &mut ChaCha8Rng, ctx: &Arc<VarContext>, degree: u16, terms: usize) -> Polynomial<Rational> {
    let n = ctx.len();
    Polynomial::from_terms(
        ctx,
        MonomialOrder::GrevLex,
        (0..terms).map(|_| {
            let mut exps = vec![0u16; n];
            for _ in 0..degree {
                exps[rng.gen_range(0..n)] += 1;
            }
            (Monomial::from_exponents(&exps), random::rational(rng, 7, 3))
        }),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        if a != int(0) {
            prop_assert_eq!(a.try_inv().unwrap() * &a, int(1));
        }
    }

    #[test]
    fn extension_field_axioms((a, b, c) in (0usize..3).prop_flat_map(|k| {
        let f = fields()[k].clone();
        (element(f.clone()), element(f.clone()), element(f))
    })) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        if !a.is_zero() {
            prop_assert_eq!(a.invert().unwrap() * a.clone(), ExtElement::rational(int(1)));
        }
        let close = |x: Complex64, y: Complex64| (x - y).norm() <= 1e-12 * (1.0 + x.norm().max(y.norm()));
        prop_assert!(close((a.clone() * b.clone()).embed_complex(), a.embed_complex() * b.embed_complex()));
        prop_assert!(close((a.clone() + b.clone()).embed_complex(), a.embed_complex() + b.embed_complex()));
    }
}

#[test]
fn root_lists_are_deterministic() {
    let m = [rat(8, 9), int(0), int(0), int(0), int(0), int(0), int(1)];
    let a = FieldDescriptor::new(&m, 0).unwrap();
    let b = FieldDescriptor::new(&m, 0).unwrap();
    assert_eq!(a.complex_roots(), b.complex_roots());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn polynomial_ring_axioms(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ctx = VarContext::projective(3);
        let a = random_poly(&mut rng, &ctx, 4, 5);
        let b = random_poly(&mut rng, &ctx, 4, 5);
        let c = random_poly(&mut rng, &ctx, 4, 5);
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
    }

    #[test]
    fn format_parse_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ctx = VarContext::with_lambda(3);
        let a = random_poly(&mut rng, &ctx, 5, 6);
        prop_assert_eq!(parse_rational(&a.to_string(), &ctx).unwrap(), a);
    }

    #[test]
    fn substitution_composes(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ctx = VarContext::projective(3);
        let f = random_form(&mut rng, &ctx, 3, 6);
        let u = ExactMatrix::from_fn(4, 4, |_, _| random::rational(&mut rng, 3, 2));
        let v = ExactMatrix::from_fn(4, 4, |_, _| random::rational(&mut rng, 3, 2));
        let lhs = f.linear_substitute(&u).unwrap().linear_substitute(&v).unwrap();
        prop_assert_eq!(lhs, f.linear_substitute(&v.matmul(&u).unwrap()).unwrap());
    }
}

#[test]
fn corpus_round_trips_and_euler() {
    for i in corpus::all_instances() {
        let ctx = i.context();
        let d = i.field.descriptor();
        let f = parse(i.text, &ctx, d.as_ref()).unwrap();
        assert_eq!(parse(&f.to_string(), &ctx, d.as_ref()).unwrap(), f, "{}", i.name);
        let euler = (0..ctx.len()).fold(Polynomial::zero(&ctx), |acc, k| {
            acc.add(&Polynomial::var(&ctx, k).mul(&f.derivative(k)))
        });
        assert_eq!(euler, f.scale(&ExtElement::rational(int(3))), "{}", i.name);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn groebner_basis_is_unique(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ctx = VarContext::projective(2);
        let mut gens: Vec<_> = (0..3).map(|_| random_form(&mut rng, &ctx, 2, 3)).collect();
        let g1 = groebner_basis(&gens, MonomialOrder::GrevLex);
        prop_assert!(is_groebner_basis(&g1));
        gens.reverse();
        gens.rotate_left(1);
        prop_assert_eq!(groebner_basis(&gens, MonomialOrder::GrevLex), g1);
    }

    #[test]
    fn quotient_is_sound(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ctx = VarContext::projective(2);
        let i = Ideal::new(&ctx, (0..3).map(|_| random_form(&mut rng, &ctx, 2, 3)));
        let j = Ideal::new(&ctx, (0..2).map(|_| random_form(&mut rng, &ctx, 1, 2)));
        let q = i.quotient_ideal(&j);
        for p in q.generators() {
            for g in j.generators() {
                prop_assert!(i.contains_polynomial(&p.mul(g)));
            }
        }
    }

    #[test]
    fn rref_is_idempotent(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = ExactMatrix::from_fn(4, 6, |_, _| random::rational(&mut rng, 3, 2));
        let (r, _) = m.rref();
        prop_assert_eq!(r.rref().0, r);
    }

    #[test]
    fn minors_scale_by_determinant(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = ExactMatrix::from_fn(4, 15, |_, _| random::rational(&mut rng, 4, 3));
        let e = random::invertible(&mut rng, 4);
        let d = e.det();
        let a = pluecker(&m);
        let b = pluecker(&e.matmul(&m).unwrap());
        prop_assert!(a.iter().zip(&b).all(|(x, y)| x * &d == *y));
    }

    #[test]
    fn eigenvalues_survive_permutation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = 8;
        let m = ComplexMatrix::from_rows(
            &(0..n).map(|_| (0..n).map(|_| Complex64::new(rng.gen_range(-2.0..2.0), 0.0)).collect()).collect::<Vec<_>>(),
        );
        let mut perm: Vec<usize> = (0..n).collect();
        for k in (1..n).rev() {
            perm.swap(k, rng.gen_range(0..=k));
        }
        let mut pm = ComplexMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                pm[(r, c)] = m[(perm[r], perm[c])];
            }
        }
        let a = m.eigen(1).unwrap().eigenvalues;
        let b = pm.eigen(2).unwrap().eigenvalues;
        for z in &a {
            prop_assert!(b.iter().any(|w| (z - w).norm() <= 1e-8 * (1.0 + z.norm())));
        }
    }

    #[test]
    fn plane_round_trip_and_row_mix(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let t = random::tensor(&mut rng, 3);
        let m = plane_from_tensor(&t).unwrap().into_matrix();
        prop_assert_eq!(tensor_from_plane(&m).unwrap(), t.clone());
        let e = random::invertible(&mut rng, 4);
        let mixed = e.matmul(&m).unwrap();
        prop_assert_eq!(tensor_from_plane(&mixed).unwrap(), t);
        let d = e.det();
        prop_assert!(pluecker(&m).iter().zip(pluecker(&mixed)).all(|(x, y)| x * &d == y));
    }

    #[test]
    fn perturbation_breaks_only_its_slice(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let sym = random::cubic(&mut rng, 3).tensor();
        prop_assert!(sym.symmetry_conditions().iter().all(|(_, ok)| *ok));
        let (t, slot) = random::perturbed_gradient(&mut rng, 3);
        for ((i, j), ok) in t.symmetry_conditions() {
            if i != slot && j != slot {
                prop_assert!(ok);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn pairing_is_evaluation(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ctx = VarContext::with_lambda(3);
        let coeffs: Vec<Rational> = (0..15).map(|_| random::rational(&mut rng, 5, 3)).collect();
        let q = Polynomial::from_terms(
            &ctx,
            MonomialOrder::GrevLex,
            eigencubic_core::grassmann::quadric_basis().into_iter().zip(coeffs.iter().cloned()),
        );
        let p: Vec<Rational> = (0..5).map(|_| random::rational(&mut rng, 5, 3)).collect();
        prop_assert_eq!(pairing(&coeffs, &veronese(&p)), q.evaluate(&p).unwrap());
    }
}

#[test]
fn perturbation_of_a_full_quadric_breaks_all_its_conditions() {
    let mut rng = random::rng(3);
    let sym = random::cubic(&mut rng, 3).tensor();
    let ctx = sym.context().clone();
    let dense = parse_rational("x0^2+x1^2+x2^2+x3^2+x0*x1+x1*x2+x2*x3+x0*x3", &ctx).unwrap();
    for slot in 0..4 {
        let mut qs = sym.quadrics().to_vec();
        qs[slot] = qs[slot].add(&dense);
        let t = PartiallySymmetricTensor::new(&ctx, qs).unwrap();
        for ((i, j), ok) in t.symmetry_conditions() {
            assert_eq!(ok, i != slot && j != slot, "slot {slot} pair ({i},{j})");
        }
    }
}

#[test]
fn saturation_is_idempotent_on_corpus() {
    for (name, f) in rational_corpus() {
        let t = f.tensor();
        let reg = t.regular_ideal();
        assert!(reg.saturate(&t.irregular_ideal()).equals(&reg), "{name}");
    }
}

/// Dimension of the degree-d part of the quotient, by linear algebra on multiples.
fn brute_force_hilbert(ideal: &Ideal<Rational>, d: u16) -> i64 {
    let ctx = ideal.context();
    let n = ctx.len();
    let monomials = |deg: u16| -> Vec<Monomial> {
        let mut out = vec![Vec::new()];
        for k in 0..n {
            let mut next = Vec::new();
            for e in &out {
                let used: u16 = e.iter().sum();
                let range: Vec<u16> = if k + 1 == n { vec![deg - used] } else { (0..=deg - used).collect() };
                for r in range {
                    let mut v = e.clone();
                    v.push(r);
                    next.push(v);
                }
            }
            out = next;
        }
        out.iter().map(|e| Monomial::from_exponents(e)).collect()
    };
    let cols = monomials(d);
    let index: std::collections::HashMap<Monomial, usize> = cols.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let mut rows = Vec::new();
    for g in ideal.generators() {
        let gd = g.total_degree().unwrap() as u16;
        if gd > d {
            continue;
        }
        for m in monomials(d - gd) {
            let p = g.mul_term(&m, &int(1));
            let mut row = vec![int(0); cols.len()];
            for (mm, c) in p.terms() {
                row[index[mm]] = c.clone();
            }
            rows.push(row);
        }
    }
    let rank = if rows.is_empty() { 0 } else { ExactMatrix::from_rows(rows).rank() };
    (cols.len() - rank) as i64
}

#[test]
fn hilbert_matches_brute_force_on_tables() {
    let cells: Vec<_> = corpus::table1().into_iter().chain(corpus::table2()).collect();
    for cell in cells {
        let Ok(corpus::ParsedCubic::Rational(f)) = cell.instance.parse() else {
            continue;
        };
        let t = f.tensor();
        let top = if cell.instance.n == 2 { 8 } else { 6 };
        for ideal in [t.eigenscheme_ideal(), t.irregular_ideal(), t.regular_ideal()] {
            let h = ideal.hilbert().unwrap();
            for d in 0..=top {
                assert_eq!(
                    hilbert_function(&h, ideal.context().len(), d as usize),
                    brute_force_hilbert(&ideal, d),
                    "{} degree {d}",
                    cell.instance.name
                );
            }
        }
    }
}

#[test]
fn eigenpairs_vanish_at_recovered_points() {
    let cfg = SolverConfig::default();
    for row in corpus::table3() {
        let Ok(corpus::ParsedCubic::Rational(f)) = row.instance.parse() else {
            continue;
        };
        let t = f.tensor();
        let reg = t.regular_ideal();
        let s = solve_projective(&reg, &cfg).unwrap();
        assert_eq!(s.multiplicities.iter().sum::<usize>() as u64, reg.hilbert().unwrap().degree.unwrap_or(0));
        for p in &s.points {
            let Some(x) = rational_recover(p, &reg, 1000, 1e-6) else {
                continue;
            };
            let q = t.contract(&x).unwrap();
            let k = x.iter().position(|v| *v != int(0)).unwrap();
            let lambda = &q[k] / &x[k];
            let mut pt = x.clone();
            pt.push(lambda);
            assert!(t.eigenpair_generators().iter().all(|g| g.evaluate(&pt).unwrap() == int(0)), "{}", row.instance.name);
        }
    }
}

#[test]
fn eigendiscriminant_detects_repeated_eigenpoints() {
    let d = binary_eigendiscriminant();
    assert_eq!(d.evaluate(&[int(1), int(0), int(0), int(0)]).unwrap(), int(0));
    assert_ne!(d.evaluate(&[int(1), int(0), int(0), int(1)]).unwrap(), int(0));
}
