use super::*;
use crate::arith::{int, Rational};
use crate::corpus::{self, ParsedCubic, CUBE_POINTS, FANO_POINTS};
use crate::poly::{parse_rational, VarContext};
use crate::tensor::{analyze_cubic, CubicForm};

fn cubic(n: usize, s: &str) -> CubicForm<Rational> {
    CubicForm::new(parse_rational(s, &VarContext::projective(n)).unwrap()).unwrap()
}

fn recovered<const N: usize>(s: &SolutionSet, ideal: &Ideal<Rational>) -> Vec<[i64; N]> {
    let mut out: Vec<[i64; N]> = s
        .points
        .iter()
        .map(|p| {
            let q = rational_recover(p, ideal, 1000, 1e-6).expect("rational point");
            let mut a = [0i64; N];
            for (k, v) in q.iter().enumerate() {
                assert!(v.is_integer());
                a[k] = v.to_integer().try_into().unwrap();
            }
            a
        })
        .collect();
    out.sort();
    out
}

fn normalise<const N: usize>(pts: &[[i64; N]]) -> Vec<[i64; N]> {
    let mut v = pts.to_vec();
    v.sort();
    v
}

#[test]
fn fermat_plane_cubic_points() {
    let reg = cubic(2, "x0^3+x1^3+x2^3").tensor().regular_ideal();
    let s = solve_projective(&reg, &SolverConfig::default()).unwrap();
    assert_eq!(s.points.len(), 7);
    assert!(s.max_residual() <= 1e-8);
    assert_eq!(recovered::<3>(&s, &reg), normalise(&FANO_POINTS));
}

#[test]
fn fermat_surface_points() {
    let reg = cubic(3, "x0^3+x1^3+x2^3+x3^3").tensor().regular_ideal();
    let s = solve_projective(&reg, &SolverConfig::default()).unwrap();
    assert_eq!(s.points.len(), 15);
    assert_eq!(recovered::<4>(&s, &reg), normalise(&CUBE_POINTS));
}

#[test]
fn real_counts_match_table() {
    let cfg = SolverConfig::default();
    for row in corpus::table3() {
        let count = match row.instance.parse().unwrap() {
            ParsedCubic::Rational(f) => {
                let s = solve_projective(&f.tensor().regular_ideal(), &cfg).unwrap();
                assert!(s.max_residual() <= cfg.residual_tol);
                assert_eq!(s.points.len(), row.count, "{}", row.instance.name);
                count_real(&s, &cfg)
            }
            ParsedCubic::Extension(f) => {
                let s = solve_projective(&f.tensor().regular_ideal(), &cfg).unwrap();
                count_real(&s, &cfg)
            }
        };
        assert_eq!(count, row.count, "{}", row.instance.name);
    }
}

#[test]
fn chart_order_and_seed_do_not_change_points() {
    let reg = cubic(2, "x0^2*x1+x0^2*x2+x1*x2^2").tensor().regular_ideal();
    let a = solve_projective(&reg, &SolverConfig::default()).unwrap();
    let cfg = SolverConfig {
        seed: 17,
        descending_charts: false,
        ..SolverConfig::default()
    };
    let b = solve_projective(&reg, &cfg).unwrap();
    assert_eq!(a.points.len(), b.points.len());
    for p in &a.points {
        assert!(b.points.iter().any(|q| p.distance(q) < 1e-7));
    }
    let again = solve_projective(&reg, &SolverConfig::default()).unwrap();
    assert_eq!(a.points, again.points);
}

#[test]
fn conjugate_closed() {
    let reg = cubic(2, "x0^3+2*x1^3-x2^3+x0*x1*x2+3*x0^2*x2-x1*x2^2").tensor().regular_ideal();
    let s = solve_projective(&reg, &SolverConfig::default()).unwrap();
    assert_eq!(s.multiplicities.iter().sum::<usize>(), 7);
    for p in &s.points {
        let c = ProjectivePointC::new(p.coords().iter().map(|z| z.conj()).collect()).unwrap();
        assert!(s.points.iter().any(|q| q.distance(&c) < 1e-7));
    }
}

#[test]
fn positive_dimensional_rejected() {
    let r = analyze_cubic(&cubic(2, "x0*(x1^2+x2^2)")).unwrap();
    assert!(matches!(
        solve_projective(&r.regular_ideal, &SolverConfig::default()),
        Err(Error::NotZeroDimensional(1))
    ));
}

#[test]
fn nonreduced_multiplicity() {
    let c = VarContext::projective(1);
    let i = Ideal::new(&c, vec![parse_rational("x0^2*x1", &c).unwrap()]);
    let s = solve_projective(&i, &SolverConfig::default()).unwrap();
    let mut m = s.multiplicities.clone();
    m.sort();
    assert_eq!(m, [1, 2]);
}

#[test]
fn continued_fractions() {
    assert_eq!(rational_approximation(0.3333333333, 100), Some(Rational::new(1.into(), 3.into())));
    assert_eq!(rational_approximation(-2.5, 10), Some(Rational::new((-5).into(), 2.into())));
    assert_eq!(rational_approximation(3.0, 10), Some(int(3)));
    assert_eq!(rational_approximation(f64::NAN, 10), None);
}
