use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ProjectivePointC;
use crate::arith::{Field, Rational};
use crate::groebner::Ideal;

/// Best continued-fraction approximation of `x` with denominator at most `max_den`.
pub fn rational_approximation(x: f64, max_den: u64) -> Option<Rational> {
    if !x.is_finite() {
        return None;
    }
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
    let mut r = x;
    let bound = BigInt::from(max_den);
    for _ in 0..64 {
        let a = r.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = BigInt::from(a as i64);
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        if q2 > bound {
            break;
        }
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let frac = r - a;
        if frac.abs() < 1e-12 {
            break;
        }
        r = 1.0 / frac;
    }
    if q1.is_zero() {
        return None;
    }
    Some(Rational::new(p1, q1))
}

/// Exact rational coordinates of a numerical point, verified against every
/// generator of `ideal`.
pub fn rational_recover<F: Field>(
    point: &ProjectivePointC,
    ideal: &Ideal<F>,
    max_den: u64,
    tol: f64,
) -> Option<Vec<Rational>> {
    if !point.is_real(tol) {
        return None;
    }
    let coords: Vec<Rational> = point
        .coords()
        .iter()
        .map(|z| rational_approximation(z.re, max_den))
        .collect::<Option<_>>()?;
    let close = coords
        .iter()
        .zip(point.coords())
        .all(|(q, z)| (crate::arith::rational_to_f64(q) - z.re).abs() <= tol);
    if !close {
        return None;
    }
    let lifted: Vec<F> = coords.iter().map(|q| F::from_rational(q.clone())).collect();
    ideal
        .generators()
        .iter()
        .all(|g| g.evaluate(&lifted).is_ok_and(|v| v.is_zero()))
        .then_some(coords)
}
