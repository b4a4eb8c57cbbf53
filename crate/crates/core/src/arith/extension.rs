//! Simple algebraic extensions ℚ[t]/(m(t)) and their elements.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::field::{int, rat, render_rational, Field};
use super::univariate::{self, UniPoly};
use super::Rational;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// A number field ℚ[t]/(m(t)) together with a chosen complex embedding.
///
/// `m` is stored monic. Irreducibility is not checked; inverting a zero
/// divisor reports [`Error::NotInvertible`].
#[derive(Debug, Clone)]
pub struct FieldDescriptor {
    modulus: UniPoly,
    roots: Vec<Complex64>,
    chosen: usize,
    generator: String,
    aliases: Vec<(String, UniPoly)>,
}

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.chosen == other.chosen
    }
}

impl FieldDescriptor {
    /// Builds the field from a minimal polynomial given lowest degree first.
    pub fn new(minimal_polynomial: &[Rational], chosen_root_index: usize) -> Result<Arc<Self>> {
        let modulus = univariate::monic(minimal_polynomial);
        let degree = univariate::degree(&modulus).ok_or(Error::ConstantModulus)?;
        if degree == 0 {
            return Err(Error::ConstantModulus);
        }
        let g = univariate::gcd(&modulus, &univariate::derivative(&modulus));
        if univariate::degree(&g) != Some(0) {
            return Err(Error::NotSquarefree);
        }
        if chosen_root_index >= degree {
            return Err(Error::InvalidRootIndex {
                index: chosen_root_index,
                degree,
            });
        }
        let roots = companion_roots(&modulus)?;
        Ok(Arc::new(FieldDescriptor {
            modulus,
            roots,
            chosen: chosen_root_index,
            generator: "t".to_string(),
            aliases: Vec::new(),
        }))
    }

    /// ℚ(i) with `i` embedded as +i.
    pub fn gaussian() -> Arc<Self> {
        let mut f = Self::new(&[int(1), int(0), int(1)], 0)
            .map(|a| (*a).clone())
            .expect("t^2+1 is squarefree");
        f.chosen = f.index_closest(Complex64::new(0.0, 1.0));
        f.aliases.push(("i".into(), vec![int(0), int(1)]));
        Arc::new(f)
    }

    /// ℚ(θ) with θ⁶ = −8/9, embedded at the first root in sort order.
    pub fn theta() -> Arc<Self> {
        let mut m = vec![int(0); 7];
        m[0] = rat(8, 9);
        m[6] = int(1);
        let mut f = Self::new(&m, 0)
            .map(|a| (*a).clone())
            .expect("t^6+8/9 is squarefree");
        f.aliases.push(("theta".into(), vec![int(0), int(1)]));
        Arc::new(f)
    }

    /// ℚ(θ, i) realised as ℚ(η) with η¹² = −1/81, where i = 9η⁶ and
    /// θ = 9η⁷ − η. The embedding sends `i` to +i.
    pub fn theta_gaussian() -> Arc<Self> {
        let mut m = vec![int(0); 13];
        m[0] = rat(1, 81);
        m[12] = int(1);
        let mut f = Self::new(&m, 0)
            .map(|a| (*a).clone())
            .expect("t^12+1/81 is squarefree");
        let mut i_poly = vec![int(0); 7];
        i_poly[6] = int(9);
        let mut theta_poly = vec![int(0); 8];
        theta_poly[1] = int(-1);
        theta_poly[7] = int(9);
        // first root (in sort order) whose image of i is +i
        f.chosen = (0..f.roots.len())
            .find(|&k| {
                let v = eval_complex(&i_poly, f.roots[k]);
                (v - Complex64::new(0.0, 1.0)).norm() < 1e-6
            })
            .expect("some root maps i to +i");
        f.aliases.push(("i".into(), i_poly));
        f.aliases.push(("theta".into(), theta_poly));
        Arc::new(f)
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Monic minimal polynomial, lowest degree first.
    pub fn minimal_polynomial(&self) -> &[Rational] {
        &self.modulus
    }

    /// Complex roots of the minimal polynomial, sorted by real part
    /// (rounded to 1e-9) and then by imaginary part.
    pub fn complex_roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn chosen_root_index(&self) -> usize {
        self.chosen
    }

    pub fn chosen_root(&self) -> Complex64 {
        self.roots[self.chosen]
    }

    pub fn generator_name(&self) -> &str {
        &self.generator
    }

    /// Named elements accepted by the parser (`i`, `theta`).
    pub fn aliases(&self) -> impl Iterator<Item = (&str, &[Rational])> {
        self.aliases.iter().map(|(n, p)| (n.as_str(), p.as_slice()))
    }

    pub fn alias(&self, name: &str) -> Option<&[Rational]> {
        self.aliases
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p.as_slice())
    }

    /// Name used when printing the generator: an alias equal to `t` wins.
    pub fn display_name(&self) -> &str {
        let t = [int(0), int(1)];
        self.aliases
            .iter()
            .find(|(_, p)| p.as_slice() == t)
            .map(|(n, _)| n.as_str())
            .unwrap_or(&self.generator)
    }

    fn index_closest(&self, z: Complex64) -> usize {
        (0..self.roots.len())
            .min_by(|&a, &b| {
                (self.roots[a] - z)
                    .norm()
                    .total_cmp(&(self.roots[b] - z).norm())
            })
            .unwrap_or(0)
    }

    fn reduce(&self, mut p: UniPoly) -> UniPoly {
        let d = self.degree();
        while p.len() > d {
            let top = p.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let shift = p.len() - d;
            for k in 0..d {
                if !self.modulus[k].is_zero() {
                    p[shift + k] -= &top * &self.modulus[k];
                }
            }
        }
        univariate::trimmed(p)
    }
}

fn eval_complex(p: &[Rational], z: Complex64) -> Complex64 {
    p.iter().rev().fold(Complex64::zero(), |acc, c| {
        acc * z + Complex64::new(super::field::rational_to_f64(c), 0.0)
    })
}

fn companion_roots(monic: &[Rational]) -> Result<Vec<Complex64>> {
    let d = monic.len() - 1;
    let mut m = ComplexMatrix::zeros(d, d);
    for k in 0..d {
        if k + 1 < d {
            m[(k + 1, k)] = Complex64::new(1.0, 0.0);
        }
        m[(k, d - 1)] = -Complex64::new(super::field::rational_to_f64(&monic[k]), 0.0);
    }
    let eig = m.eigen(0x5eed)?;
    let dp = univariate::derivative(monic);
    let mut roots: Vec<Complex64> = eig
        .eigenvalues
        .iter()
        .map(|&z0| {
            let mut z = z0;
            for _ in 0..8 {
                let fz = eval_complex(monic, z);
                let dz = eval_complex(&dp, z);
                if dz.norm() == 0.0 {
                    break;
                }
                let step = fz / dz;
                z -= step;
                if step.norm() <= 1e-17 * z.norm().max(1.0) {
                    break;
                }
            }
            z
        })
        .collect();
    roots.sort_by(|a, b| {
        let ka = (a.re / 1e-9).round();
        let kb = (b.re / 1e-9).round();
        ka.total_cmp(&kb).then(a.im.total_cmp(&b.im))
    });
    Ok(roots)
}

/// An element c₀ + c₁t + … of ℚ[t]/(m(t)).
///
/// Elements without a field are plain rationals; they combine freely with
/// elements of any field. Combining elements of two different fields panics.
#[derive(Clone)]
pub struct ExtElement {
    field: Option<Arc<FieldDescriptor>>,
    coeffs: UniPoly,
}

impl ExtElement {
    pub fn new(field: &Arc<FieldDescriptor>, coeffs: Vec<Rational>) -> Self {
        let coeffs = field.reduce(coeffs);
        ExtElement {
            field: Some(field.clone()),
            coeffs,
        }
    }

    pub fn rational(q: Rational) -> Self {
        ExtElement {
            field: None,
            coeffs: univariate::trimmed(vec![q]),
        }
    }

    pub fn generator(field: &Arc<FieldDescriptor>) -> Self {
        Self::new(field, vec![int(0), int(1)])
    }

    /// The named element `name` of the field (e.g. `i` or `theta`).
    pub fn alias(field: &Arc<FieldDescriptor>, name: &str) -> Option<Self> {
        field.alias(name).map(|p| Self::new(field, p.to_vec()))
    }

    pub fn field(&self) -> Option<&Arc<FieldDescriptor>> {
        self.field.as_ref()
    }

    /// Coefficient vector of length equal to the field degree.
    pub fn coefficients(&self) -> Vec<Rational> {
        let d = self.field.as_ref().map_or(1, |f| f.degree());
        let mut out = self.coeffs.clone();
        out.resize(d.max(out.len()), Rational::zero());
        out
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn invert(&self) -> Result<Self> {
        if self.coeffs.is_empty() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(ExtElement {
                field: self.field.clone(),
                coeffs: vec![self.coeffs[0].recip()],
            });
        }
        let field = self.field.as_ref().expect("non-rational element has a field");
        let (g, s) = univariate::ext_gcd(&self.coeffs, &field.modulus);
        if g.len() != 1 {
            return Err(Error::NotInvertible);
        }
        Ok(ExtElement::new(field, s))
    }

    /// Value under the field's chosen complex embedding.
    pub fn embed_complex(&self) -> Complex64 {
        match &self.field {
            Some(f) => eval_complex(&self.coeffs, f.chosen_root()),
            None => eval_complex(&self.coeffs, Complex64::zero()),
        }
    }

    fn join_field(&self, other: &Self) -> Option<Arc<FieldDescriptor>> {
        match (&self.field, &other.field) {
            (Some(a), Some(b)) => {
                if !Arc::ptr_eq(a, b) && **a != **b && !(self.is_rational() || other.is_rational())
                {
                    panic!("arithmetic between elements of different number fields");
                }
                if self.is_rational() && !other.is_rational() {
                    Some(b.clone())
                } else {
                    Some(a.clone())
                }
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        }
    }

    fn combine(&self, other: &Self, sign: i8) -> Self {
        let field = self.join_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Rational::zero();
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).unwrap_or(&zero);
                let b = other.coeffs.get(k).unwrap_or(&zero);
                if sign > 0 {
                    a + b
                } else {
                    a - b
                }
            })
            .collect();
        ExtElement {
            field,
            coeffs: univariate::trimmed(coeffs),
        }
    }

    fn product(&self, other: &Self) -> Self {
        let field = self.join_field(other);
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return ExtElement {
                field,
                coeffs: Vec::new(),
            };
        }
        if self.is_rational() || other.is_rational() {
            let (s, v) = if self.is_rational() {
                (&self.coeffs[0], other)
            } else {
                (&other.coeffs[0], self)
            };
            return ExtElement {
                field,
                coeffs: v.coeffs.iter().map(|c| c * s).collect(),
            };
        }
        let prod = univariate::mul(&self.coeffs, &other.coeffs);
        let f = field.expect("non-rational product has a field");
        let coeffs = f.reduce(prod);
        ExtElement {
            field: Some(f),
            coeffs,
        }
    }
}

impl fmt::Debug for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render().0)
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render().0)
    }
}

impl PartialEq for ExtElement {
    fn eq(&self, other: &Self) -> bool {
        if self.coeffs != other.coeffs {
            return false;
        }
        if self.is_rational() {
            return true;
        }
        match (&self.field, &other.field) {
            (Some(a), Some(b)) => Arc::ptr_eq(a, b) || **a == **b,
            _ => false,
        }
    }
}

impl Zero for ExtElement {
    fn zero() -> Self {
        ExtElement {
            field: None,
            coeffs: Vec::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for ExtElement {
    fn one() -> Self {
        ExtElement::rational(Rational::one())
    }
}

impl Add for ExtElement {
    type Output = ExtElement;
    fn add(self, rhs: Self) -> Self {
        self.combine(&rhs, 1)
    }
}

impl Sub for ExtElement {
    type Output = ExtElement;
    fn sub(self, rhs: Self) -> Self {
        self.combine(&rhs, -1)
    }
}

impl Mul for ExtElement {
    type Output = ExtElement;
    fn mul(self, rhs: Self) -> Self {
        self.product(&rhs)
    }
}

impl<'a> Add<&'a ExtElement> for &'a ExtElement {
    type Output = ExtElement;
    fn add(self, rhs: &ExtElement) -> ExtElement {
        self.combine(rhs, 1)
    }
}

impl<'a> Sub<&'a ExtElement> for &'a ExtElement {
    type Output = ExtElement;
    fn sub(self, rhs: &ExtElement) -> ExtElement {
        self.combine(rhs, -1)
    }
}

impl<'a> Mul<&'a ExtElement> for &'a ExtElement {
    type Output = ExtElement;
    fn mul(self, rhs: &ExtElement) -> ExtElement {
        self.product(rhs)
    }
}

impl Neg for ExtElement {
    type Output = ExtElement;
    fn neg(self) -> Self {
        ExtElement {
            field: self.field,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Field for ExtElement {
    fn try_inv(&self) -> Result<Self> {
        self.invert()
    }

    fn add_ref(&self, rhs: &Self) -> Self {
        self.combine(rhs, 1)
    }

    fn sub_ref(&self, rhs: &Self) -> Self {
        self.combine(rhs, -1)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self.product(rhs)
    }

    fn from_rational(q: Rational) -> Self {
        ExtElement::rational(q)
    }

    fn lift_like(&self, q: Rational) -> Self {
        ExtElement {
            field: self.field.clone(),
            coeffs: univariate::trimmed(vec![q]),
        }
    }

    fn to_rational(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn to_complex(&self) -> Complex64 {
        self.embed_complex()
    }

    fn render(&self) -> (String, bool) {
        if let Some(q) = self.to_rational() {
            return (render_rational(&q), true);
        }
        let name = self
            .field
            .as_ref()
            .map_or("t".to_string(), |f| f.display_name().to_string());
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let pow = match k {
                0 => String::new(),
                1 => name.clone(),
                _ => format!("{name}^{k}"),
            };
            if k == 0 {
                out.push_str(&render_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&pow);
            } else {
                out.push_str(&format!("{}*{}", render_rational(&mag), pow));
            }
        }
        (format!("({out})"), false)
    }
}
