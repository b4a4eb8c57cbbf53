use crate::poly::{Monomial, MAX_VARS};

/// Dimension and degree of Proj of a graded quotient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    /// −1 for the empty scheme (unit or irrelevant-primary ideals).
    pub projective_dimension: i64,
    /// Defined when the dimension is non-negative.
    pub degree: Option<u64>,
    /// Numerator of the Hilbert series over (1 − t)^nvars, lowest degree first.
    pub numerator: Vec<i64>,
}

fn poly_add(a: &mut Vec<i64>, b: &[i64]) {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

fn trim(mut a: Vec<i64>) -> Vec<i64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Hilbert series numerator of S/M for a monomial ideal M, by the pivot
/// recursion N(M) = N(M + (x)) + t·N(M : x).
fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = vec![1i64];
        for m in &gens {
            let d = m.degree() as usize;
            let mut next = acc.clone();
            next.resize(acc.len() + d, 0);
            for (k, c) in acc.iter().enumerate() {
                next[k + d] -= c;
            }
            acc = next;
        }
        return trim(acc);
    }
    // pivot on the variable shared by the most generators
    let var = (0..MAX_VARS)
        .max_by_key(|&k| gens.iter().filter(|m| m.exp(k) > 0).count())
        .expect("at least one variable");
    let x = Monomial::var(var);
    let with: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exp(var) == 0)
        .copied()
        .chain([x])
        .collect();
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|m| if m.exp(var) > 0 { m.with_exp(var, m.exp(var) - 1) } else { *m })
        .collect();
    let mut out = numerator(with);
    let shifted: Vec<i64> = std::iter::once(0).chain(numerator(colon)).collect();
    poly_add(&mut out, &shifted);
    trim(out)
}

/// Hilbert data of S/(leading monomials) with `nvars` variables.
pub fn hilbert_from_leading(leading: &[Monomial], nvars: usize) -> HilbertData {
    let num = numerator(leading.to_vec());
    if num.is_empty() {
        return HilbertData {
            projective_dimension: -1,
            degree: None,
            numerator: num,
        };
    }
    // divide by (1 − t) while t = 1 is a root
    let mut reduced = num.clone();
    let mut r = 0usize;
    while reduced.iter().sum::<i64>() == 0 && !reduced.is_empty() {
        // synthetic division by (1 − t): q_k = Σ_{j≤k} a_j
        let mut q = Vec::with_capacity(reduced.len() - 1);
        let mut run = 0i64;
        for &a in &reduced[..reduced.len() - 1] {
            run += a;
            q.push(run);
        }
        reduced = trim(q);
        r += 1;
    }
    let krull = nvars as i64 - r as i64;
    let projective_dimension = krull - 1;
    let degree = (projective_dimension >= 0).then(|| reduced.iter().sum::<i64>() as u64);
    HilbertData {
        projective_dimension: projective_dimension.max(-1),
        degree,
        numerator: num,
    }
}

/// Value of the Hilbert function at `d` from the series numerator.
pub fn hilbert_function(data: &HilbertData, nvars: usize, d: usize) -> i64 {
    // coefficient of t^d in N(t) / (1 − t)^n
    let mut total = 0i64;
    for (k, &c) in data.numerator.iter().enumerate() {
        if k > d {
            break;
        }
        let m = d - k;
        total += c * binom((m + nvars - 1) as i64, (nvars - 1) as i64);
    }
    total
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut acc: i64 = 1;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}
