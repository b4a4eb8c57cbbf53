use crate::arith::Field;
use crate::poly::{Monomial, MonomialOrder, Polynomial};

/// Full reduction of `p` modulo `basis` (all elements monic, same order).
pub fn normal_form<F: Field>(p: &Polynomial<F>, basis: &[Polynomial<F>]) -> Polynomial<F> {
    let refs: Vec<&Polynomial<F>> = basis.iter().collect();
    normal_form_by(p, &refs)
}

pub(crate) fn normal_form_by<F: Field>(p: &Polynomial<F>, basis: &[&Polynomial<F>]) -> Polynomial<F> {
    let order = basis.first().map_or(p.order(), |g| g.order());
    let mut work = p.with_order(order);
    let mut rem = Polynomial::zero(p.context()).with_order(order);
    'outer: while let Some((m, c)) = work.leading_term().cloned() {
        for &g in basis {
            let lm = g.leading_monomial().expect("nonzero basis element");
            if let Some(q) = m.div(lm) {
                let lc = g.leading_coefficient().expect("nonzero");
                let factor = if lc.is_one() {
                    c
                } else {
                    c.mul_ref(&lc.try_inv().expect("nonzero leading coefficient"))
                };
                work = work.sub_mul_term(&factor, &q, g);
                continue 'outer;
            }
        }
        work.take_leading();
        rem.push_smallest(m, c);
    }
    rem
}

fn spoly<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let (fm, fc) = f.leading_term().expect("nonzero").clone();
    let (gm, gc) = g.leading_term().expect("nonzero").clone();
    let l = fm.lcm(&gm);
    let a = l.div(&fm).expect("lcm divisible");
    let b = l.div(&gm).expect("lcm divisible");
    let left = f.mul_term(&a, &gc);
    left.sub_mul_term(&fc, &b, g)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn lm<F: Field>(p: &Polynomial<F>) -> Monomial {
    *p.leading_monomial().expect("nonzero")
}

/// Gebauer–Möller installation of a new basis element `h` (index `hi`).
fn update<F: Field>(polys: &[Polynomial<F>], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, hi: usize) {
    let h = lm(&polys[hi]);
    let mut cand: Vec<(usize, Monomial, bool)> = active
        .iter()
        .map(|&g| {
            let gm = lm(&polys[g]);
            (g, h.lcm(&gm), h.is_coprime(&gm))
        })
        .collect();
    let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
    while let Some(p) = cand.pop() {
        let dominated = cand.iter().chain(kept.iter()).any(|q| q.1.divides(&p.1));
        if p.2 || !dominated {
            kept.push(p);
        }
    }
    pairs.retain(|p| {
        !(h.divides(&p.lcm)
            && h.lcm(&lm(&polys[p.i])) != p.lcm
            && h.lcm(&lm(&polys[p.j])) != p.lcm)
    });
    pairs.extend(
        kept.into_iter()
            .filter(|k| !k.2)
            .map(|(g, l, _)| Pair { i: g, j: hi, lcm: l }),
    );
    active.retain(|&g| !h.divides(&lm(&polys[g])));
    active.push(hi);
}

/// Turns a Gröbner basis into the reduced one: monic, minimal, tails
/// reduced, sorted ascending by leading monomial.
pub fn reduce_basis<F: Field>(basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let mut basis: Vec<Polynomial<F>> = basis.into_iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    if basis.is_empty() {
        return basis;
    }
    let order = basis[0].order();
    basis.sort_by(|a, b| order.cmp(&lm(a), &lm(b)));
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for p in basis {
        let m = lm(&p);
        if !minimal.iter().any(|q| lm(q).divides(&m)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Polynomial<F>> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .map(|(_, p)| p)
            .collect();
        let mut p = minimal[k].clone();
        let (m, c) = p.take_leading().expect("nonzero");
        let tail = normal_form_by(&p, &others);
        let mut r = Polynomial::monomial(p.context(), m, c).with_order(order);
        r = r.add(&tail);
        out.push(r);
    }
    out
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
pub fn groebner_basis<F: Field>(gens: &[Polynomial<F>], order: MonomialOrder) -> Vec<Polynomial<F>> {
    let mut input: Vec<Polynomial<F>> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.with_order(order).monic())
        .collect();
    input.sort_by(|a, b| {
        lm(a)
            .degree()
            .cmp(&lm(b).degree())
            .then_with(|| order.cmp(&lm(a), &lm(b)))
    });
    let mut polys: Vec<Polynomial<F>> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    fn reducers<'a, F>(polys: &'a [Polynomial<F>], active: &[usize]) -> Vec<&'a Polynomial<F>> {
        active.iter().map(|&k| &polys[k]).collect()
    }
    for f in input {
        let h = normal_form_by(&f, &reducers(&polys, &active));
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![Polynomial::one(f.context()).with_order(order)];
        }
        polys.push(h.monic());
        update(&polys, &mut active, &mut pairs, polys.len() - 1);
    }
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (la, lb) = (&pairs[a].lcm, &pairs[b].lcm);
                la.degree().cmp(&lb.degree()).then_with(|| order.cmp(la, lb))
            })
            .expect("nonempty");
        let p = pairs.swap_remove(best);
        let s = spoly(&polys[p.i], &polys[p.j]);
        let h = normal_form_by(&s, &reducers(&polys, &active));
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return vec![Polynomial::one(h.context()).with_order(order)];
        }
        polys.push(h.monic());
        update(&polys, &mut active, &mut pairs, polys.len() - 1);
    }
    let basis = reduce_basis(active.into_iter().map(|k| polys[k].clone()).collect());
    debug_assert!(gens
        .iter()
        .all(|g| normal_form(&g.with_order(order), &basis).is_zero()));
    basis
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis<F: Field>(basis: &[Polynomial<F>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !normal_form(&spoly(&basis[i], &basis[j]), basis).is_zero() {
                return false;
            }
        }
    }
    true
}
