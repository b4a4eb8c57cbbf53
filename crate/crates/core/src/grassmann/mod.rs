//! Tensors of quaternary quadrics as 3-planes of quadrics in x0..x3, λ.

mod binary;

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::matrix::{combination_rank, ExactMatrix};
use crate::poly::{Monomial, Polynomial, VarContext};
use crate::tensor::PartiallySymmetricTensor;

pub use binary::{
    binary_eigendiscriminant, binary_matrix, binary_restricted_hurwitz, binary_tangency_resultant, coefficient_context,
    compare_with_display, normalize_display, printed_display, DisplayDiff, HurwitzComparison, PrintedTerm,
};

/// Number of quadrics in x0..x3, λ.
pub const QUADRIC_COUNT: usize = 15;
/// First column of the λxᵢ block.
pub const LAMBDA_BLOCK: usize = 10;
/// Column of λ².
pub const LAMBDA_SQUARED: usize = 14;

const NAMES: [&str; QUADRIC_COUNT] = [
    "x0^2", "x0*x1", "x0*x2", "x0*x3", "x1^2", "x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2", "x0*L", "x1*L", "x2*L",
    "x3*L", "L^2",
];

/// Index pairs of the quadric basis for `k` coordinates, the last one being λ.
fn basis_pairs(k: usize) -> Vec<(usize, usize)> {
    let last = k - 1;
    let mut out = Vec::new();
    for i in 0..last {
        for j in i..last {
            out.push((i, j));
        }
    }
    out.extend((0..last).map(|i| (i, last)));
    out.push((last, last));
    out
}

/// x0², x0x1, …, x3², x0λ, …, x3λ, λ² as monomials of x0..x3, L.
pub fn quadric_basis() -> Vec<Monomial> {
    basis_pairs(5)
        .into_iter()
        .map(|(i, j)| Monomial::var(i).mul(&Monomial::var(j)))
        .collect()
}

/// Column labels in the grammar.
pub fn quadric_basis_names() -> [&'static str; QUADRIC_COUNT] {
    NAMES
}

/// Row space of the 4×15 coefficient matrix of q₀ − λx₀, …, q₃ − λx₃.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPlane<F: Field> {
    matrix: ExactMatrix<F>,
}

impl<F: Field> EigenPlane<F> {
    pub fn matrix(&self) -> &ExactMatrix<F> {
        &self.matrix
    }

    pub fn into_matrix(self) -> ExactMatrix<F> {
        self.matrix
    }
}

fn expect_quaternary<F: Field>(t: &PartiallySymmetricTensor<F>) -> Result<()> {
    if t.n() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: t.n() + 1,
        });
    }
    Ok(())
}

pub fn plane_from_tensor<F: Field>(t: &PartiallySymmetricTensor<F>) -> Result<EigenPlane<F>> {
    expect_quaternary(t)?;
    let basis = quadric_basis();
    let rows = t
        .eigenpair_generators()
        .iter()
        .map(|p| basis.iter().map(|m| p.coefficient(m)).collect())
        .collect();
    Ok(EigenPlane {
        matrix: ExactMatrix::from_rows(rows),
    })
}

/// Maximal minors, column subsets in lexicographic order.
pub fn pluecker<F: Field>(m: &ExactMatrix<F>) -> Vec<F> {
    m.maximal_minors()
}

/// Position of the coordinate for a 4-subset of columns.
pub fn pluecker_index(subset: &[usize]) -> usize {
    combination_rank(QUADRIC_COUNT, subset)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EigenplaneConditions {
    /// The λ² column vanishes.
    pub lambda_squared_zero: bool,
    /// The λx block is invertible.
    pub lambda_block_invertible: bool,
}

impl EigenplaneConditions {
    pub fn holds(&self) -> bool {
        self.lambda_squared_zero && self.lambda_block_invertible
    }
}

fn expect_shape<F: Field>(m: &ExactMatrix<F>) -> Result<()> {
    if m.rows() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            found: m.rows(),
        });
    }
    if m.cols() != QUADRIC_COUNT {
        return Err(Error::DimensionMismatch {
            expected: QUADRIC_COUNT,
            found: m.cols(),
        });
    }
    Ok(())
}

fn lambda_block<F: Field>(m: &ExactMatrix<F>) -> ExactMatrix<F> {
    m.select_columns(&[10, 11, 12, 13])
}

pub fn check_conditions<F: Field>(m: &ExactMatrix<F>) -> Result<EigenplaneConditions> {
    expect_shape(m)?;
    Ok(EigenplaneConditions {
        lambda_squared_zero: (0..4).all(|r| m[(r, LAMBDA_SQUARED)].is_zero()),
        lambda_block_invertible: !lambda_block(m).det().is_zero(),
    })
}

/// Row-reduces against the λx block and reads off the tensor.
pub fn tensor_from_plane<F: Field>(m: &ExactMatrix<F>) -> Result<PartiallySymmetricTensor<F>> {
    let c = check_conditions(m)?;
    if !c.lambda_squared_zero {
        return Err(Error::ConditionsViolated("the L^2 column is not zero".into()));
    }
    if !c.lambda_block_invertible {
        return Err(Error::ConditionsViolated("the x*L block is singular".into()));
    }
    let normal = lambda_block(m).inverse()?.matmul(m)?;
    let ctx = VarContext::projective(3);
    let basis = quadric_basis();
    let quadrics = (0..4)
        .map(|r| {
            let terms = (0..LAMBDA_BLOCK).map(|k| {
                let exps: Vec<u16> = (0..4).map(|v| basis[k].exp(v)).collect();
                (Monomial::from_exponents(&exps), -normal[(r, k)].clone())
            });
            Polynomial::from_terms(&ctx, Default::default(), terms)
        })
        .collect();
    PartiallySymmetricTensor::new(&ctx, quadrics)
}

/// True when T is the gradient of a cubic.
pub fn is_symmetric_point<F: Field>(t: &PartiallySymmetricTensor<F>) -> bool {
    t.is_symmetric()
}

/// Degree-2 monomials of `p` in the quadric basis order, the last coordinate
/// playing the role of λ.
pub fn veronese<F: Field>(p: &[F]) -> Vec<F> {
    assert!(!p.is_empty(), "empty point");
    basis_pairs(p.len()).into_iter().map(|(i, j)| p[i].mul_ref(&p[j])).collect()
}

/// Σ cₖ vₖ, so that a coefficient vector paired with ν₂(p) is the value at p.
pub fn pairing<F: Field>(coeffs: &[F], nu: &[F]) -> F {
    coeffs
        .iter()
        .zip(nu)
        .fold(F::zero(), |acc, (c, v)| acc.add_ref(&c.mul_ref(v)))
}

/// Whether `p = (x0, x1, x2, x3, λ)` pairs to zero with every row of the plane of T.
pub fn eigenpair_veronese_check<F: Field>(t: &PartiallySymmetricTensor<F>, p: &[F]) -> Result<bool> {
    if p.len() != 5 {
        return Err(Error::DimensionMismatch {
            expected: 5,
            found: p.len(),
        });
    }
    let plane = plane_from_tensor(t)?;
    let nu = veronese(p);
    Ok((0..4).all(|r| pairing(plane.matrix.row(r), &nu).is_zero()))
}

#[cfg(test)]
mod tests;
