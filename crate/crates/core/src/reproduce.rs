//! Recomputation of the dimension tables, the real-count table and the
//! worked examples, with comparisons against the stated values.

use crate::arith::{int, Field, Rational};
use crate::corpus::{self, CountRow, DimensionCell, Instance, ParsedCubic};
use crate::error::Result;
use crate::groebner::Ideal;
use crate::matrix::{combinations, ExactMatrix};
use crate::poly::{parse_rational, VarContext};
use crate::solve::{count_real, solve_projective, SolutionSet, SolverConfig};
use crate::tensor::{analyze_cubic, CubicForm, EigenschemeReport};

/// Analysis of an instance over whichever field it needs.
pub enum AnyReport {
    Rational(Box<EigenschemeReport<Rational>>),
    Extension(Box<EigenschemeReport<crate::arith::ExtElement>>),
}

impl AnyReport {
    pub fn delta(&self) -> i64 {
        match self {
            AnyReport::Rational(r) => r.delta(),
            AnyReport::Extension(r) => r.delta(),
        }
    }

    pub fn epsilon(&self) -> i64 {
        match self {
            AnyReport::Rational(r) => r.epsilon(),
            AnyReport::Extension(r) => r.epsilon(),
        }
    }

    pub fn bounds_hold(&self) -> bool {
        match self {
            AnyReport::Rational(r) => r.irr_bound_holds && r.top_dimension_rule_holds,
            AnyReport::Extension(r) => r.irr_bound_holds && r.top_dimension_rule_holds,
        }
    }
}

pub fn analyze_instance(i: &Instance) -> Result<AnyReport> {
    Ok(match i.parse()? {
        ParsedCubic::Rational(f) => AnyReport::Rational(Box::new(analyze_cubic(&f)?)),
        ParsedCubic::Extension(f) => AnyReport::Extension(Box::new(analyze_cubic(&f)?)),
    })
}

pub fn solve_instance(i: &Instance, cfg: &SolverConfig) -> Result<SolutionSet> {
    match i.parse()? {
        ParsedCubic::Rational(f) => solve_projective(&f.tensor().regular_ideal(), cfg),
        ParsedCubic::Extension(f) => solve_projective(&f.tensor().regular_ideal(), cfg),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DimensionOutcome {
    pub name: String,
    pub text: String,
    pub expected: (i64, i64),
    pub computed: (i64, i64),
    pub bounds_hold: bool,
}

impl DimensionOutcome {
    pub fn pass(&self) -> bool {
        self.expected == self.computed && self.bounds_hold
    }
}

pub fn check_dimension_cell(cell: &DimensionCell) -> Result<DimensionOutcome> {
    let r = analyze_instance(&cell.instance)?;
    Ok(DimensionOutcome {
        name: cell.instance.name.clone(),
        text: cell.instance.text.to_string(),
        expected: (cell.delta, cell.epsilon),
        computed: (r.delta(), r.epsilon()),
        bounds_hold: r.bounds_hold(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CountOutcome {
    pub name: String,
    pub text: String,
    pub expected: usize,
    pub regular_dimension: i64,
    pub points: usize,
    pub real: usize,
    pub max_residual: f64,
}

impl CountOutcome {
    pub fn pass(&self, cfg: &SolverConfig) -> bool {
        self.regular_dimension <= 0 && self.real == self.expected && self.max_residual <= cfg.residual_tol
    }
}

pub fn check_count_row(row: &CountRow, cfg: &SolverConfig) -> Result<CountOutcome> {
    let dim = analyze_instance(&row.instance)?.delta();
    let s = solve_instance(&row.instance, cfg)?;
    Ok(CountOutcome {
        name: row.instance.name.clone(),
        text: row.instance.text.to_string(),
        expected: row.count,
        regular_dimension: dim,
        points: s.points.len(),
        real: count_real(&s, cfg),
        max_residual: s.max_residual(),
    })
}

/// Index triples of collinear points.
pub fn collinear_triples(points: &[Vec<Rational>]) -> Vec<[usize; 3]> {
    combinations(points.len(), 3)
        .filter(|s| ExactMatrix::from_rows(s.iter().map(|&k| points[k].clone()).collect()).rank() <= 2)
        .map(|s| [s[0], s[1], s[2]])
        .collect()
}

/// Distinct point pairs lying on some collinear triple.
pub fn pairs_on_triples(triples: &[[usize; 3]]) -> usize {
    let mut pairs: Vec<(usize, usize)> = triples
        .iter()
        .flat_map(|t| [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])])
        .collect();
    pairs.sort();
    pairs.dedup();
    pairs.len()
}

pub fn points_on_hyperplane(points: &[Vec<Rational>], coordinate: usize) -> usize {
    points.iter().filter(|p| p[coordinate] == int(0)).count()
}

pub fn rank_of_points(points: &[Vec<Rational>]) -> usize {
    ExactMatrix::from_rows(points.to_vec()).rank()
}

/// Ideal checks for x1(x1x2 + x3² + x0²) against its two conics and point pair.
#[derive(Debug, Clone, PartialEq)]
pub struct ConicPairCheck {
    pub eigen_equals_union: bool,
    pub eigen_inside_union: bool,
    /// The union's generators squared lie in E, so both have the same zero set.
    pub eigen_same_support: bool,
    pub irregular_equals_c2: bool,
    pub irregular_same_support: bool,
    /// Equalities after saturating away the point [0:0:1:0].
    pub eigen_equals_union_off_point: bool,
    pub irregular_equals_c2_off_point: bool,
    pub regular_dimension: i64,
}

impl ConicPairCheck {
    pub fn pass(&self) -> bool {
        self.eigen_equals_union && self.irregular_equals_c2
    }
}

fn ideal(ctx: &std::sync::Arc<VarContext>, gens: &[&str]) -> Ideal<Rational> {
    Ideal::new(ctx, gens.iter().map(|s| parse_rational(s, ctx).expect("grammar")))
}

fn same_support(big: &Ideal<Rational>, small: &Ideal<Rational>) -> bool {
    big.contains(small) && big.generators().iter().all(|g| small.contains_polynomial(&g.pow(2)))
}

pub fn conic_pair_check() -> ConicPairCheck {
    let ctx = VarContext::projective(3);
    let f = CubicForm::new(parse_rational("x1*(x1*x2+x3^2+x0^2)", &ctx).expect("grammar")).expect("cubic");
    let t = f.tensor();
    let e = t.eigenscheme_ideal();
    let irr = t.irregular_ideal();
    let c1 = ideal(&ctx, &["x1-2*x2", "x0^2-4*x2^2+x3^2"]);
    let c2 = ideal(&ctx, &["x1", "x0^2+x3^2"]);
    let pair = ideal(&ctx, &["x0", "x3", "x1^2-2*x2^2"]);
    let union = c1.intersect(&c2).intersect(&pair);
    let point = ideal(&ctx, &["x0", "x1", "x3"]);
    ConicPairCheck {
        eigen_equals_union: e.equals(&union),
        eigen_inside_union: union.contains(&e),
        eigen_same_support: same_support(&union, &e),
        irregular_equals_c2: irr.equals(&c2),
        irregular_same_support: same_support(&c2, &irr),
        eigen_equals_union_off_point: e.saturate(&point).equals(&union),
        irregular_equals_c2_off_point: irr.saturate(&point).equals(&c2),
        regular_dimension: t.regular_ideal().hilbert().map(|h| h.projective_dimension).unwrap_or(-1),
    }
}

/// Whether I(Reg) of x0(x1² + x2² + x3²) + x1³ lies in (x1², 2x0² − x2² − x3²).
pub fn nonreduced_curve_check() -> bool {
    let ctx = VarContext::projective(3);
    let f = CubicForm::new(parse_rational("x0*(x1^2+x2^2+x3^2)+x1^3", &ctx).expect("grammar")).expect("cubic");
    let c = ideal(&ctx, &["x1^2", "2*x0^2-x2^2-x3^2"]);
    c.contains(&f.tensor().regular_ideal())
}

/// Distinct roots over ℂ of s·t² + 3a₀t − 1 with s = k·Σ_{j≥1} aⱼ².
fn univariate_roots(a: &[Rational], k: i64) -> usize {
    let s: Rational = a[1..].iter().map(|x| x * x).sum::<Rational>() * int(k);
    let a0 = &a[0];
    if s == int(0) {
        return usize::from(*a0 != int(0));
    }
    let disc = a0 * a0 * int(9) + s * int(4);
    if disc == int(0) {
        1
    } else {
        2
    }
}

/// Regular eigenpoints of x0²·(a·x) predicted by the one-variable reduction.
pub fn x0_squared_linear_count(a: &[Rational]) -> usize {
    univariate_roots(a, 2)
}

/// The same count from the reduction with Σaⱼ² in place of 2Σaⱼ².
pub fn x0_squared_linear_count_printed(a: &[Rational]) -> usize {
    univariate_roots(a, 1)
}

/// Whether `points` are exactly the 0/1 vectors of `expected` in some order.
pub fn same_point_set<const N: usize>(points: &[Vec<Rational>], expected: &[[i64; N]]) -> bool {
    let mut got: Vec<Vec<Rational>> = points.to_vec();
    let mut want: Vec<Vec<Rational>> = expected.iter().map(|p| p.iter().map(|&v| int(v)).collect()).collect();
    got.sort();
    want.sort();
    got == want
}

/// Named golden instances as rational cubics, skipping those needing an extension.
pub fn rational_corpus() -> Vec<(String, CubicForm<Rational>)> {
    corpus::all_instances()
        .into_iter()
        .filter_map(|i| match i.parse() {
            Ok(ParsedCubic::Rational(f)) => Some((i.name, f)),
            _ => None,
        })
        .collect()
}

/// Exact points of a solution set, if every one is rational and verifies.
pub fn recover_all<F: Field>(s: &SolutionSet, ideal: &Ideal<F>, max_den: u64) -> Option<Vec<Vec<Rational>>> {
    s.points
        .iter()
        .map(|p| crate::solve::rational_recover(p, ideal, max_den, 1e-6))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::FANO_POINTS;

    fn pts<const N: usize>(p: &[[i64; N]]) -> Vec<Vec<Rational>> {
        p.iter().map(|q| q.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn fano_configuration_over_q() {
        let p = pts(&FANO_POINTS);
        let t = collinear_triples(&p);
        assert_eq!(t.len(), 6);
        assert_eq!(pairs_on_triples(&t), 18);
        assert_eq!(rank_of_points(&p), 3);
    }

    #[test]
    fn univariate_counts() {
        assert_eq!(x0_squared_linear_count(&[int(1), int(0), int(0)]), 1);
        assert_eq!(x0_squared_linear_count(&[int(0), int(0), int(0)]), 0);
        assert_eq!(x0_squared_linear_count(&[int(1), int(1), int(0)]), 2);
        assert_eq!(x0_squared_linear_count_printed(&[int(1), int(1), int(0)]), 2);
    }

    #[test]
    fn conic_pair_support() {
        let c = conic_pair_check();
        assert!(c.eigen_inside_union && c.eigen_same_support && c.irregular_same_support);
        assert!(c.eigen_equals_union_off_point && c.irregular_equals_c2_off_point);
        assert_eq!(c.regular_dimension, 1);
    }

    #[test]
    fn nonreduced_curve() {
        assert!(nonreduced_curve_check());
    }
}
