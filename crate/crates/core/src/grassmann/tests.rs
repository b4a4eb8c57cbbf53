use super::*;
use crate::arith::{int, Rational};
use crate::poly::parse_rational;
use crate::random;
use crate::tensor::CubicForm;

fn cubic(s: &str) -> CubicForm<Rational> {
    CubicForm::new(parse_rational(s, &VarContext::projective(3)).unwrap()).unwrap()
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&k| int(k)).collect()
}

#[test]
fn basis_order() {
    let ctx = VarContext::with_lambda(3);
    for (m, name) in quadric_basis().iter().zip(quadric_basis_names()) {
        assert_eq!(*parse_rational(name, &ctx).unwrap().leading_monomial().unwrap(), *m);
    }
}

#[test]
fn fermat_plane_rows() {
    let p = plane_from_tensor(&cubic("x0^3+x1^3+x2^3+x3^3").tensor()).unwrap();
    let m = p.matrix();
    let squares = [0, 4, 7, 9];
    for r in 0..4 {
        for k in 0..QUADRIC_COUNT {
            let want = if k == squares[r] {
                int(3)
            } else if k == LAMBDA_BLOCK + r {
                int(-1)
            } else {
                int(0)
            };
            assert_eq!(m[(r, k)], want);
        }
    }
    assert_eq!(m.rank(), 4);
}

#[test]
fn zero_tensor_plane() {
    let p = plane_from_tensor(&PartiallySymmetricTensor::<Rational>::zero(3)).unwrap();
    for r in 0..4 {
        for k in 0..QUADRIC_COUNT {
            let want = if k == LAMBDA_BLOCK + r { -1 } else { 0 };
            assert_eq!(p.matrix()[(r, k)], int(want));
        }
    }
    assert!(plane_from_tensor(&PartiallySymmetricTensor::<Rational>::zero(2)).is_err());
}

#[test]
fn pluecker_special_coordinates() {
    let mut rng = random::rng(5);
    let t = random::tensor(&mut rng, 3);
    let m = plane_from_tensor(&t).unwrap().into_matrix();
    let p = pluecker(&m);
    assert_eq!(p.len(), 1365);
    assert_eq!(p[pluecker_index(&[10, 11, 12, 13])], int(1));
    for s in crate::matrix::combinations(QUADRIC_COUNT, 4).filter(|s| s.contains(&LAMBDA_SQUARED)) {
        assert_eq!(p[pluecker_index(&s)], int(0));
    }
    let mut doubled = m.clone();
    doubled.scale_row(0, &int(2));
    let q = pluecker(&doubled);
    assert!(p.iter().zip(&q).all(|(a, b)| a * int(2) == *b));
}

#[test]
fn conditions_and_recovery() {
    let t = cubic("x0^3+x1^3+x2^3+x3^3").tensor();
    let m = plane_from_tensor(&t).unwrap().into_matrix();
    assert!(check_conditions(&m).unwrap().holds());
    assert_eq!(tensor_from_plane(&m).unwrap(), t);

    let mut bad = m.clone();
    bad[(2, LAMBDA_SQUARED)] = int(1);
    assert!(!check_conditions(&bad).unwrap().lambda_squared_zero);
    assert!(matches!(tensor_from_plane(&bad), Err(Error::ConditionsViolated(_))));

    let mut singular = m.clone();
    for k in LAMBDA_BLOCK..LAMBDA_SQUARED {
        singular[(3, k)] = singular[(2, k)].clone();
    }
    let c = check_conditions(&singular).unwrap();
    assert!(c.lambda_squared_zero && !c.lambda_block_invertible);
    assert!(matches!(tensor_from_plane(&singular), Err(Error::ConditionsViolated(_))));
}

#[test]
fn row_mixing_recovers_tensor() {
    let mut rng = random::rng(11);
    for _ in 0..5 {
        let t = random::tensor(&mut rng, 3);
        let e = random::invertible(&mut rng, 4);
        let m = plane_from_tensor(&t).unwrap().into_matrix();
        let mixed = e.matmul(&m).unwrap();
        assert_eq!(tensor_from_plane(&mixed).unwrap(), t);
        let d = e.det();
        assert!(pluecker(&m).iter().zip(pluecker(&mixed)).all(|(a, b)| a * &d == b));
    }
}

#[test]
fn symmetric_points() {
    assert!(is_symmetric_point(&cubic("x0^3+x1^2*x2+x2*x3^2").tensor()));
    let ctx = VarContext::projective(3);
    let z = Polynomial::zero(&ctx);
    let t = PartiallySymmetricTensor::new(&ctx, vec![parse_rational("x1^2", &ctx).unwrap(), z.clone(), z.clone(), z])
        .unwrap();
    assert!(!is_symmetric_point(&t));
}

#[test]
fn veronese_examples() {
    let unit = |k: usize| (0..QUADRIC_COUNT).map(|j| int((j == k) as i64)).collect::<Vec<_>>();
    assert_eq!(veronese(&ints(&[1, 0, 0, 0, 0])), unit(0));
    assert_eq!(veronese(&ints(&[0, 0, 0, 0, 1])), unit(LAMBDA_SQUARED));
    let v = veronese(&ints(&[1, 1, 0, 0, 1]));
    let ones: Vec<usize> = (0..QUADRIC_COUNT).filter(|&k| v[k] == int(1)).collect();
    assert_eq!(ones, [0, 1, 4, 10, 11, 14]);
}

#[test]
fn veronese_eigenpairs() {
    let t = cubic("x0^3+x1^3+x2^3").tensor();
    assert!(eigenpair_veronese_check(&t, &ints(&[0, 0, 0, 0, 1])).unwrap());
    assert!(eigenpair_veronese_check(&t, &ints(&[1, 1, 1, 0, 3])).unwrap());
    assert!(!eigenpair_veronese_check(&t, &ints(&[1, 1, 1, 0, 2])).unwrap());
    let g = cubic("x0^2*x1").tensor();
    assert!(!eigenpair_veronese_check(&g, &ints(&[1, 0, 0, 0, 1])).unwrap());
}

#[test]
fn binary_matrix_display() {
    assert_eq!(binary_matrix(ints(&[1, 0, 0, 0]).try_into().unwrap()).to_rows(), [ints(&[3, 0, -1, 0, 0, 0]), ints(&[0, 0, 0, 0, -1, 0])]);
    assert_eq!(binary_matrix(ints(&[0, 0, 0, 1]).try_into().unwrap()).to_rows(), [ints(&[0, 0, -1, 0, 0, 0]), ints(&[0, 0, 0, 3, -1, 0])]);
}

#[test]
fn binary_matrix_matches_eigenpair_coefficients() {
    let a = ints(&[2, -1, 5, 7]);
    let ctx = VarContext::projective(1);
    let f = parse_rational("2*x0^3 - x0^2*x1 + 5*x0*x1^2 + 7*x1^3", &ctx).unwrap();
    let gens = CubicForm::new(f).unwrap().tensor().eigenpair_generators();
    let big = VarContext::with_lambda(1);
    let cols: Vec<Monomial> = ["x0^2", "x0*x1", "x0*L", "x1^2", "x1*L", "L^2"]
        .iter()
        .map(|s| *parse_rational(s, &big).unwrap().leading_monomial().unwrap())
        .collect();
    let m = binary_matrix(a.try_into().unwrap());
    for (r, g) in gens.iter().enumerate() {
        let row: Vec<Rational> = cols.iter().map(|c| g.coefficient(c)).collect();
        assert_eq!(row, m.row(r));
    }
}

fn coeff(p: &Polynomial<Rational>, e: [u16; 4]) -> Rational {
    p.coefficient(&Monomial::from_exponents(&e))
}

#[test]
fn eigendiscriminant_coefficients() {
    let d = binary_eigendiscriminant();
    assert_eq!(coeff(&d, [0, 2, 2, 0]), int(61));
    assert_eq!(coeff(&d, [2, 0, 0, 2]), int(81));
    assert_eq!(coeff(&d, [0, 4, 0, 0]), int(32));
    assert_eq!(coeff(&d, [0, 0, 4, 0]), int(32));
    assert_eq!(coeff(&d, [3, 0, 1, 0]), int(-108));
    assert_eq!(coeff(&d, [0, 1, 2, 1]), int(-156));
    assert_eq!(d.evaluate(&ints(&[1, 0, 0, 0])).unwrap(), int(0));
    assert_ne!(d.evaluate(&ints(&[1, 0, 0, 1])).unwrap(), int(0));
}

#[test]
fn hurwitz_route_agrees_up_to_sign() {
    let c = HurwitzComparison::compute();
    assert_eq!(c.ratio, Some(int(-1)));
    assert!(c.agrees_up_to_sign());
    assert_eq!(c.eigendiscriminant, c.restricted_hurwitz);
}

#[test]
fn display_diff_finds_misprints() {
    let c = HurwitzComparison::compute();
    assert_eq!(c.diff.matched, 15);
    assert!(c.diff.missing.is_empty());
    let printed: Vec<&str> = c.diff.anomalies.iter().map(|(t, _)| t.printed).collect();
    assert!(printed.contains(&"a1*a3^2*a3"));
    let fixed: Vec<String> = c.diff.anomalies.iter().filter_map(|(_, p)| p.clone()).collect();
    assert!(fixed.contains(&"-156*a1*a2^2*a3".to_string()));
}
