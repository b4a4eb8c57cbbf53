use super::{CubicForm, PartiallySymmetricTensor};
use crate::arith::Field;
use crate::error::Result;
use crate::groebner::{HilbertData, Ideal};

/// E, Ẽ, Irr and Reg of a tensor with their Hilbert data.
#[derive(Debug, Clone)]
pub struct EigenschemeReport<F: Field> {
    pub n: usize,
    pub eigen_ideal: Ideal<F>,
    pub eigenpair_ideal: Ideal<F>,
    pub irregular_ideal: Ideal<F>,
    pub regular_ideal: Ideal<F>,
    pub eigen: HilbertData,
    pub eigenpair: HilbertData,
    pub irregular: HilbertData,
    pub regular: HilbertData,
    /// dim Irr + 1 ≥ dim Reg.
    pub irr_bound_holds: bool,
    /// dim Reg = n − 1 forces dim Irr = n − 2 (vacuous otherwise).
    pub top_dimension_rule_holds: bool,
}

impl<F: Field> EigenschemeReport<F> {
    /// δ = dim Reg.
    pub fn delta(&self) -> i64 {
        self.regular.projective_dimension
    }

    /// ε = dim Irr.
    pub fn epsilon(&self) -> i64 {
        self.irregular.projective_dimension
    }
}

pub fn analyze<F: Field>(t: &PartiallySymmetricTensor<F>) -> Result<EigenschemeReport<F>> {
    let n = t.n();
    let eigen_ideal = t.eigenscheme_ideal();
    let eigenpair_ideal = t.eigenpair_ideal();
    let irregular_ideal = t.irregular_ideal();
    let (regular_ideal, eigenpair) = rayon::join(
        || eigen_ideal.saturate(&irregular_ideal),
        || eigenpair_ideal.hilbert(),
    );
    let eigen = eigen_ideal.hilbert()?;
    let irregular = irregular_ideal.hilbert()?;
    let regular = regular_ideal.hilbert()?;
    let d_irr = irregular.projective_dimension;
    let d_reg = regular.projective_dimension;
    Ok(EigenschemeReport {
        n,
        eigen_ideal,
        eigenpair_ideal,
        irregular_ideal,
        regular_ideal,
        eigen,
        eigenpair: eigenpair?,
        irregular,
        regular,
        irr_bound_holds: d_irr + 1 >= d_reg,
        top_dimension_rule_holds: d_reg != n as i64 - 1 || d_irr == n as i64 - 2,
    })
}

pub fn analyze_cubic<F: Field>(f: &CubicForm<F>) -> Result<EigenschemeReport<F>> {
    analyze(&f.tensor())
}
