use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{int, Field, Rational};
use crate::matrix::ExactMatrix;
use crate::poly::{parse_rational, Monomial, Polynomial, VarContext};

type QPoly = Polynomial<Rational>;

/// Coefficient ring ℚ[a0..a3].
pub fn coefficient_context() -> Arc<VarContext> {
    VarContext::new(["a0", "a1", "a2", "a3"]).expect("valid context")
}

/// The 2×6 matrix over x0², x0x1, x0λ, x1², x1λ, λ² of the binary cubic
/// a0x0³ + a1x0²x1 + a2x0x1² + a3x1³.
pub fn binary_matrix<F: Field>(a: [F; 4]) -> ExactMatrix<F> {
    let [a0, a1, a2, a3] = a;
    let k = |c: i64, x: &F| F::from_i64(c).mul_ref(x);
    ExactMatrix::from_rows(vec![
        vec![k(3, &a0), k(2, &a1), F::from_i64(-1), a2.clone(), F::zero(), F::zero()],
        vec![a1.clone(), k(2, &a2), F::zero(), k(3, &a3), F::from_i64(-1), F::zero()],
    ])
}

fn a(ctx: &Arc<VarContext>, i: usize) -> QPoly {
    Polynomial::var(ctx, i)
}

fn c(ctx: &Arc<VarContext>, k: i64) -> QPoly {
    Polynomial::constant(ctx, int(k))
}

/// Discriminant of g = x0 q1 − x1 q0 by the cubic discriminant formula.
pub fn binary_eigendiscriminant() -> QPoly {
    let ctx = coefficient_context();
    let b0 = a(&ctx, 1);
    let b1 = a(&ctx, 2).scale(&int(2)).sub(&a(&ctx, 0).scale(&int(3)));
    let b2 = a(&ctx, 3).scale(&int(3)).sub(&a(&ctx, 1).scale(&int(2)));
    let b3 = a(&ctx, 2).neg();
    let t1 = c(&ctx, 18).mul(&b0).mul(&b1).mul(&b2).mul(&b3);
    let t2 = c(&ctx, 4).mul(&b1.pow(3)).mul(&b3);
    let t3 = b1.pow(2).mul(&b2.pow(2));
    let t4 = c(&ctx, 4).mul(&b0).mul(&b2.pow(3));
    let t5 = c(&ctx, 27).mul(&b0.pow(2)).mul(&b3.pow(2));
    t1.sub(&t2).add(&t3).sub(&t4).sub(&t5)
}

/// Coefficients, in a0..a3, of a form in a0..a3, x0, x1 by descending x0-degree.
fn binary_coefficients(p: &QPoly, degree: u16, out: &Arc<VarContext>) -> Vec<QPoly> {
    (0..=degree)
        .map(|k| {
            let e0 = degree - k;
            let terms = p.terms().iter().filter(|(m, _)| m.exp(4) == e0 && m.exp(5) == k).map(|(m, c)| {
                let exps: Vec<u16> = (0..4).map(|v| m.exp(v)).collect();
                (Monomial::from_exponents(&exps), c.clone())
            });
            Polynomial::from_terms(out, Default::default(), terms)
        })
        .collect()
}

fn det_poly(m: &[Vec<QPoly>]) -> QPoly {
    let n = m.len();
    let ctx = m[0][0].context().clone();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(&ctx);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<QPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = m[0][j].mul(&det_poly(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Sylvester resultant of two binary quadratics given by coefficient lists.
fn resultant_quadratics(p: &[QPoly], q: &[QPoly]) -> QPoly {
    let z = Polynomial::zero(p[0].context());
    let rows = vec![
        vec![p[0].clone(), p[1].clone(), p[2].clone(), z.clone()],
        vec![z.clone(), p[0].clone(), p[1].clone(), p[2].clone()],
        vec![q[0].clone(), q[1].clone(), q[2].clone(), z.clone()],
        vec![z.clone(), q[0].clone(), q[1].clone(), q[2].clone()],
    ];
    det_poly(&rows)
}

/// Resultant of the two partials of Res_λ(q0 − λx0, q1 − λx1), unnormalised.
pub fn binary_tangency_resultant() -> QPoly {
    let big = VarContext::new(["a0", "a1", "a2", "a3", "x0", "x1", "L"]).expect("valid context");
    let f = parse_rational("a0*x0^3 + a1*x0^2*x1 + a2*x0*x1^2 + a3*x1^3", &big).expect("grammar");
    let lam = Polynomial::var(&big, 6);
    let p: Vec<QPoly> = (0..2)
        .map(|i| f.derivative(4 + i).sub(&lam.mul(&Polynomial::var(&big, 4 + i))))
        .collect();
    // p_i = c1_i λ + c0_i, Res = c1_0 c0_1 − c0_0 c1_1
    let split = |g: &QPoly| {
        let lin = g.derivative(6);
        (lin.clone(), g.sub(&lin.mul(&lam)))
    };
    let (c1a, c0a) = split(&p[0]);
    let (c1b, c0b) = split(&p[1]);
    let r = c1a.mul(&c0b).sub(&c0a.mul(&c1b));
    let out = coefficient_context();
    let d0 = binary_coefficients(&r.derivative(4), 2, &out);
    let d1 = binary_coefficients(&r.derivative(5), 2, &out);
    resultant_quadratics(&d0, &d1)
}

fn integer_content(p: &QPoly) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for (_, c) in p.terms() {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    Rational::new(num, den)
}

/// The tangency resultant divided by its positive content.
pub fn binary_restricted_hurwitz() -> QPoly {
    let r = binary_tangency_resultant();
    let content = integer_content(&r);
    r.scale(&content.recip())
}

/// Scales `p` so its a1⁴ coefficient is 32.
pub fn normalize_display(p: &QPoly) -> Option<QPoly> {
    let lead = p.coefficient(&Monomial::from_exponents(&[0, 4, 0, 0]));
    if lead.is_zero() {
        return None;
    }
    Some(p.scale(&(int(32) / lead)))
}

#[derive(Debug, Clone, PartialEq)]
pub struct HurwitzComparison {
    pub eigendiscriminant: QPoly,
    pub restricted_hurwitz: QPoly,
    /// restricted_hurwitz / eigendiscriminant, when constant.
    pub ratio: Option<Rational>,
    /// Unnormalised tangency resultant / eigendiscriminant.
    pub raw_ratio: Option<Rational>,
    pub diff: DisplayDiff,
}

fn constant_ratio(p: &QPoly, q: &QPoly) -> Option<Rational> {
    let (m, c) = q.leading_term()?;
    let r = p.coefficient(m) / c.clone();
    (q.scale(&r) == *p).then_some(r)
}

/// One term as printed, with its grammar spelling.
#[derive(Debug, Clone, PartialEq)]
pub struct PrintedTerm {
    pub coefficient: i64,
    pub printed: &'static str,
}

const DISPLAY: [(i64, &str); 17] = [
    (36, "a0^2*a1^2"),
    (32, "a1^4"),
    (-108, "a0^3*a2"),
    (-156, "a0*a1^2*a2"),
    (216, "a0^2*a2^2"),
    (61, "a1^2*a2^2"),
    (-144, "a0*a2^3"),
    (32, "a2^4"),
    (-108, "a0^2*a1*a3"),
    (-144, "a1^3*a3"),
    (306, "a0*a1*a2*a3"),
    (-156, "a1*a3^2*a3"),
    (81, "a0^2*a3^2"),
    (216, "a1^2*a3^2"),
    (-108, "a1*a2*a3^2"),
    (36, "a2^2*a3^2"),
    (-108, "a1*a3^3"),
];

/// The published polynomial, term by term as printed.
pub fn printed_display() -> Vec<PrintedTerm> {
    DISPLAY
        .iter()
        .map(|&(coefficient, printed)| PrintedTerm { coefficient, printed })
        .collect()
}

/// Term-level comparison between a computed polynomial and the printed one.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DisplayDiff {
    pub matched: usize,
    /// Printed terms whose monomial disagrees, paired with the computed term
    /// carrying the same coefficient.
    pub anomalies: Vec<(PrintedTerm, Option<String>)>,
    /// Computed terms left over after pairing.
    pub missing: Vec<String>,
}

impl DisplayDiff {
    pub fn is_exact(&self) -> bool {
        self.anomalies.is_empty() && self.missing.is_empty()
    }
}

pub fn compare_with_display(p: &QPoly) -> DisplayDiff {
    let ctx = p.context().clone();
    let render = |m: &Monomial, c: &Rational| Polynomial::monomial(&ctx, *m, c.clone()).to_string();
    let mut remaining: Vec<(Monomial, Rational)> = p.terms().to_vec();
    let mut diff = DisplayDiff::default();
    let mut unmatched = Vec::new();
    for t in printed_display() {
        let m = *parse_rational(t.printed, &ctx)
            .expect("printed term parses")
            .leading_monomial()
            .expect("nonzero");
        let c = int(t.coefficient);
        match remaining.iter().position(|(rm, rc)| *rm == m && *rc == c) {
            Some(k) => {
                remaining.remove(k);
                diff.matched += 1;
            }
            None => unmatched.push(t),
        }
    }
    for t in unmatched {
        let c = int(t.coefficient);
        let partner = remaining.iter().position(|(_, rc)| *rc == c).map(|k| remaining.remove(k));
        diff.anomalies.push((t, partner.map(|(m, c)| render(&m, &c))));
    }
    diff.missing = remaining.iter().map(|(m, c)| render(m, c)).collect();
    diff
}

/// Both routes, their ratio and the diff of the normalised result against the display.
pub fn compare() -> HurwitzComparison {
    let disc = binary_eigendiscriminant();
    let raw = binary_tangency_resultant();
    let hurwitz = binary_restricted_hurwitz();
    let ratio = constant_ratio(&hurwitz, &disc);
    let raw_ratio = constant_ratio(&raw, &disc);
    let normalized = normalize_display(&disc).unwrap_or_else(|| disc.clone());
    HurwitzComparison {
        diff: compare_with_display(&normalized),
        eigendiscriminant: normalized,
        restricted_hurwitz: normalize_display(&hurwitz).unwrap_or(hurwitz),
        ratio,
        raw_ratio,
    }
}

impl HurwitzComparison {
    pub fn compute() -> Self {
        compare()
    }

    /// The ratio is ±1.
    pub fn agrees_up_to_sign(&self) -> bool {
        self.ratio.as_ref().is_some_and(|r| r.abs() == Rational::one())
    }
}
