use std::cmp::Ordering;

/// Hard cap on the number of variables of any ring in the crate.
///
/// Cubics live in at most four variables; λ and the auxiliary variables
/// used by intersection and elimination account for the rest.
pub const MAX_VARS: usize = 8;

/// Dense exponent vector with cached total degree.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::default();
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::default();
        m.exps[..exps.len()].copy_from_slice(exps);
        m.degree = exps.iter().map(|&e| e as u32).sum();
        m
    }

    pub fn exponents(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for k in 0..MAX_VARS {
            m.exps[k] += other.exps[k];
        }
        m.degree += other.degree;
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && (0..MAX_VARS).all(|k| self.exps[k] <= other.exps[k])
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut m = *self;
        for k in 0..MAX_VARS {
            m.exps[k] -= other.exps[k];
        }
        m.degree -= other.degree;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::default();
        for k in 0..MAX_VARS {
            m.exps[k] = self.exps[k].max(other.exps[k]);
        }
        m.degree = m.exps.iter().map(|&e| e as u32).sum();
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|k| self.exps[k] == 0 || other.exps[k] == 0)
    }

    /// Degree in the variables with index in `range`.
    pub fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().map(|&e| e as u32).sum()
    }

    /// Reindexes variables: variable `i` moves to position `map[i]`.
    pub fn remap(&self, map: &[usize]) -> Monomial {
        let mut m = Monomial::default();
        for (i, &j) in map.iter().enumerate() {
            m.exps[j] = self.exps[i];
        }
        debug_assert!(self.exps[map.len()..].iter().all(|&e| e == 0));
        m.degree = self.degree;
        m
    }

    pub fn with_exp(&self, i: usize, e: u16) -> Monomial {
        let mut m = *self;
        m.degree = m.degree - m.exps[i] as u32 + e as u32;
        m.exps[i] = e;
        m
    }
}

/// Term orders. `Elimination(k)` compares the first `k` variables by
/// degree-reverse-lexicographic order first and breaks ties on the rest
/// the same way, so it eliminates the first `k` variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    Elimination(usize),
}

fn grevlex_block(a: &Monomial, b: &Monomial, range: std::ops::Range<usize>) -> Ordering {
    let da = a.partial_degree(range.clone());
    let db = b.partial_degree(range.clone());
    if da != db {
        return da.cmp(&db);
    }
    for k in range.rev() {
        if a.exps[k] != b.exps[k] {
            return b.exps[k].cmp(&a.exps[k]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::GrevLex => {
                if a.degree != b.degree {
                    return a.degree.cmp(&b.degree);
                }
                for k in (0..MAX_VARS).rev() {
                    if a.exps[k] != b.exps[k] {
                        return b.exps[k].cmp(&a.exps[k]);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Elimination(k) => grevlex_block(a, b, 0..k)
                .then_with(|| grevlex_block(a, b, k..MAX_VARS)),
        }
    }
}
