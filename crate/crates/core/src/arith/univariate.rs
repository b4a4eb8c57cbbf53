//! Dense univariate polynomials over the rationals, lowest degree first.
//!
//! Only what the extension-field code needs: division with remainder,
//! gcd, the extended Euclidean algorithm and the formal derivative.

use num_traits::{One, Zero};

use super::Rational;

pub type UniPoly = Vec<Rational>;

pub fn trim(p: &mut UniPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn trimmed(mut p: UniPoly) -> UniPoly {
    trim(&mut p);
    p
}

pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn derivative(p: &[Rational]) -> UniPoly {
    trimmed(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer((k as i64).into()))
            .collect(),
    )
}

pub fn sub(a: &[Rational], b: &[Rational]) -> UniPoly {
    let n = a.len().max(b.len());
    let zero = Rational::zero();
    trimmed(
        (0..n)
            .map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero))
            .collect(),
    )
}

pub fn mul(a: &[Rational], b: &[Rational]) -> UniPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trimmed(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(a: &[Rational], b: &[Rational]) -> (UniPoly, UniPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = b[db].recip();
    let mut r: UniPoly = trimmed(a.to_vec());
    let mut q = vec![Rational::zero(); r.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] * &lead_inv;
        let shift = dr - db;
        for (k, bk) in b.iter().enumerate().take(db + 1) {
            let t = &c * bk;
            r[shift + k] -= t;
        }
        q[shift] = c;
        trim(&mut r);
    }
    (trimmed(q), r)
}

pub fn monic(p: &[Rational]) -> UniPoly {
    match degree(p) {
        None => Vec::new(),
        Some(d) => {
            let inv = p[d].recip();
            p[..=d].iter().map(|c| c * &inv).collect()
        }
    }
}

pub fn gcd(a: &[Rational], b: &[Rational]) -> UniPoly {
    let mut x = trimmed(a.to_vec());
    let mut y = trimmed(b.to_vec());
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

/// Returns `(g, s)` with `g = gcd(a, m)` monic and `s·a ≡ g (mod m)`.
pub fn ext_gcd(a: &[Rational], m: &[Rational]) -> (UniPoly, UniPoly) {
    let mut r0 = trimmed(m.to_vec());
    let mut r1 = trimmed(a.to_vec());
    let mut s0: UniPoly = Vec::new();
    let mut s1: UniPoly = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    let d = degree(&r0).unwrap_or(0);
    let inv = r0[d].recip();
    let g = r0.iter().map(|c| c * &inv).collect();
    let s = trimmed(s0.iter().map(|c| c * &inv).collect());
    (g, s)
}
