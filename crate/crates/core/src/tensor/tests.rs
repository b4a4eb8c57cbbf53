use super::*;
use crate::arith::{int, Rational};
use crate::poly::parse_rational;

fn cubic(n: usize, s: &str) -> CubicForm<Rational> {
    CubicForm::new(parse_rational(s, &VarContext::projective(n)).unwrap()).unwrap()
}

fn poly(n: usize, s: &str) -> Polynomial<Rational> {
    parse_rational(s, &VarContext::projective(n)).unwrap()
}

#[test]
fn tensor_from_cubic_examples() {
    let t = cubic(2, "x0^3+x1^3+x2^3").tensor();
    assert_eq!(t.quadrics(), [poly(2, "3*x0^2"), poly(2, "3*x1^2"), poly(2, "3*x2^2")]);
    let t = cubic(2, "x0^2*x1").tensor();
    assert_eq!(t.quadrics(), [poly(2, "2*x0*x1"), poly(2, "x0^2"), poly(2, "0")]);
    let t = cubic(3, "x1*(x1*x2+x3^2+x0^2)").tensor();
    assert_eq!(
        t.quadrics(),
        [
            poly(3, "2*x0*x1"),
            poly(3, "2*x1*x2+x3^2+x0^2"),
            poly(3, "x1^2"),
            poly(3, "2*x1*x3")
        ]
    );
}

#[test]
fn contraction() {
    let t = cubic(2, "x0^3+x1^3+x2^3").tensor();
    assert_eq!(t.contract(&[int(1), int(1), int(1)]).unwrap(), [int(3), int(3), int(3)]);
    assert_eq!(t.contract(&[int(0), int(0), int(0)]).unwrap(), [int(0), int(0), int(0)]);
    let t = cubic(2, "x0^3").tensor();
    assert_eq!(t.contract(&[int(0), int(1), int(0)]).unwrap(), [int(0), int(0), int(0)]);
}

#[test]
fn eigenscheme_of_binary_cubic() {
    let t = cubic(1, "x0^3+x1^3").tensor();
    assert_eq!(t.eigenscheme_generators(), [poly(1, "3*x0*x1^2 - 3*x0^2*x1")]);
}

#[test]
fn trivial_witness() {
    let c = VarContext::projective(2);
    let ell = poly(2, "x0+x1");
    let t = PartiallySymmetricTensor::new(&c, (0..3).map(|i| ell.mul(&Polynomial::var(&c, i))).collect()).unwrap();
    assert!(t.eigenscheme_ideal().is_zero());
    assert_eq!(t.trivial_eigenscheme_witness(), Some(ell));
    assert_eq!(cubic(2, "x0^3").tensor().trivial_eigenscheme_witness(), None);
    assert!(PartiallySymmetricTensor::<Rational>::zero(2)
        .trivial_eigenscheme_witness()
        .unwrap()
        .is_zero());
}

#[test]
fn eigenpair_ideal_of_x0_cubed() {
    let t = cubic(2, "x0^3").tensor();
    let big = VarContext::with_lambda(2);
    let expected: Vec<_> = ["3*x0^2-L*x0", "-L*x1", "-L*x2"]
        .iter()
        .map(|s| parse_rational(s, &big).unwrap())
        .collect();
    assert_eq!(t.eigenpair_generators(), expected);
    assert!(t
        .eigenpair_generators()
        .iter()
        .all(|g| g.evaluate(&[int(0), int(0), int(0), int(1)]).unwrap() == int(0)));
}

#[test]
fn generic_ternary_eigenpair_degree() {
    let f = cubic(2, "x0^3+2*x1^3-x2^3+x0*x1*x2+3*x0^2*x2-x1*x2^2");
    let h = f.tensor().eigenpair_ideal().hilbert().unwrap();
    assert_eq!((h.projective_dimension, h.degree), (0, Some(8)));
}

#[test]
fn table_one_rational_cells() {
    let cases = [
        ("x0^3+x1^3+x2^3", 0, -1),
        ("x0^3+x1^3", 0, 0),
        ("x0^3", 0, 1),
        ("x0*(x1^2+x2^2)", 1, 0),
    ];
    for (s, delta, eps) in cases {
        let r = analyze_cubic(&cubic(2, s)).unwrap();
        assert_eq!((r.delta(), r.epsilon()), (delta, eps), "{s}");
        assert!(r.irr_bound_holds && r.top_dimension_rule_holds);
    }
}

#[test]
fn irregular_of_smooth_is_empty() {
    let r = analyze_cubic(&cubic(3, "x0^3+x1^3+x2^3+x3^3")).unwrap();
    assert_eq!(r.epsilon(), -1);
    assert_eq!((r.delta(), r.regular.degree), (0, Some(15)));
    assert_eq!(r.eigenpair.degree, Some(16));
}

#[test]
fn twisted_action_identity_and_composition() {
    let t = cubic(2, "x0^2*x1+x2^3-x0*x1*x2").tensor();
    assert_eq!(t.twisted_action(&ExactMatrix::identity(3)).unwrap(), t);
    let u = ExactMatrix::from_rows(vec![
        vec![int(1), int(2), int(0)],
        vec![int(0), int(1), int(-1)],
        vec![int(1), int(0), int(1)],
    ]);
    let v = ExactMatrix::from_rows(vec![
        vec![int(2), int(0), int(1)],
        vec![int(1), int(1), int(0)],
        vec![int(0), int(3), int(1)],
    ]);
    let uv = u.matmul(&v).unwrap();
    let lhs = t.twisted_action(&v).unwrap().twisted_action(&u).unwrap();
    assert_eq!(lhs, t.twisted_action(&uv).unwrap());
    let moved = t.twisted_action(&u).unwrap().eigenscheme_ideal();
    let image = t.eigenscheme_ideal().linear_substitute(&u).unwrap();
    assert!(moved.equals(&image));
    let singular = ExactMatrix::from_rows(vec![vec![int(1), int(1), int(0)], vec![int(1), int(1), int(0)], vec![int(0), int(0), int(1)]]);
    assert!(t.twisted_action(&singular).is_err());
}

#[test]
fn cone_reduction() {
    let f = cubic(3, "x0^3+x1^3+x2^3");
    assert_eq!(f.cone_reduce().unwrap(), cubic(2, "x0^3+x1^3+x2^3"));
    assert_eq!(cubic(3, "x0^3+x1^3+x2^3+x3^3").cone_reduce(), Err(Error::NotACone));
    let g = cubic(3, "x0^2*x1");
    let small = g.cone_reduce().unwrap();
    assert_eq!(small, cubic(2, "x0^2*x1"));
    let lhs = g.tensor().regular_ideal();
    let rhs = embed_as_hyperplane(&small.tensor().regular_ideal(), 3);
    assert!(lhs.equals(&rhs));
}

#[test]
fn apex_jacobian() {
    assert!(cubic(3, "x0^3+x1*x2*x3").tensor().apex_jacobian_check());
    assert!(PartiallySymmetricTensor::<Rational>::zero(3).apex_jacobian_check());
}

#[test]
fn symmetric_witness() {
    let f = cubic(3, "x0^3+x1^2*x2-7*x0*x2*x3");
    assert_eq!(f.tensor().symmetric_witness(), Some(f.clone()));
    let c = VarContext::projective(3);
    let t = PartiallySymmetricTensor::new(
        &c,
        vec![poly(3, "x1^2"), poly(3, "0"), poly(3, "0"), poly(3, "0")],
    )
    .unwrap();
    assert!(!t.is_symmetric());
}

#[test]
fn fitting_cubics_through_points() {
    let pts: Vec<Vec<Rational>> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1]]
        .iter()
        .map(|p| p.iter().map(|&v| int(v)).collect())
        .collect();
    let (basis, _) = cubic_from_points(&pts, 2).unwrap();
    assert!(in_span(&cubic(2, "x0^3+x1^3+x2^3"), &basis));
    let (basis, rank) = cubic_from_points(&[vec![int(1), int(0), int(0)]], 2).unwrap();
    assert_eq!(basis.len() + rank, 10);
    assert!(in_span(&cubic(2, "x0^3"), &basis));
}

#[test]
fn wrong_degree_rejected() {
    let c = VarContext::projective(1);
    assert_eq!(CubicForm::new(poly(1, "x0^2+x1^2")), Err(Error::WrongDegree(3)));
    assert!(PartiallySymmetricTensor::new(&c, vec![poly(1, "x0"), poly(1, "x1^2")]).is_err());
}
