//! Named cubic instances: the dimension tables, the real-count table and
//! the worked examples.

use std::sync::Arc;

use crate::arith::{ExtElement, FieldDescriptor, Rational};
use crate::error::Result;
use crate::poly::{parse, Polynomial, VarContext};
use crate::tensor::CubicForm;

/// Coefficient field an instance needs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Gaussian,
    /// ℚ(θ, i) with θ⁶ = −8/9.
    ThetaGaussian,
}

impl FieldKind {
    pub fn descriptor(self) -> Option<Arc<FieldDescriptor>> {
        match self {
            FieldKind::Rational => None,
            FieldKind::Gaussian => Some(FieldDescriptor::gaussian()),
            FieldKind::ThetaGaussian => Some(FieldDescriptor::theta_gaussian()),
        }
    }
}

/// A cubic in x0..xn written in the polynomial grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub name: String,
    pub n: usize,
    pub text: &'static str,
    pub field: FieldKind,
}

/// The cubic as a polynomial over ℚ, or `None` when it needs an extension.
pub enum ParsedCubic {
    Rational(CubicForm<Rational>),
    Extension(CubicForm<ExtElement>),
}

impl Instance {
    fn new(name: String, n: usize, text: &'static str, field: FieldKind) -> Self {
        Instance { name, n, text, field }
    }

    pub fn context(&self) -> Arc<VarContext> {
        VarContext::projective(self.n)
    }

    pub fn parse_ext(&self) -> Result<CubicForm<ExtElement>> {
        let d = self.field.descriptor();
        CubicForm::new(parse(self.text, &self.context(), d.as_ref())?)
    }

    pub fn parse(&self) -> Result<ParsedCubic> {
        let f: Polynomial<ExtElement> = parse(self.text, &self.context(), self.field.descriptor().as_ref())?;
        Ok(match f.to_rational() {
            Some(q) if self.field == FieldKind::Rational => ParsedCubic::Rational(CubicForm::new(q)?),
            _ => ParsedCubic::Extension(CubicForm::new(f)?),
        })
    }
}

/// A cell of a dimension table.
#[derive(Debug, Clone)]
pub struct DimensionCell {
    pub delta: i64,
    pub epsilon: i64,
    pub instance: Instance,
}

fn cell_name(table: u8, delta: i64, epsilon: i64) -> String {
    format!("table{table}:delta{delta}-eps{epsilon}")
}

fn cell(table: u8, n: usize, delta: i64, epsilon: i64, text: &'static str, field: FieldKind) -> DimensionCell {
    DimensionCell {
        delta,
        epsilon,
        instance: Instance::new(cell_name(table, delta, epsilon), n, text, field),
    }
}

/// Plane cubics with prescribed (dim Reg, dim Irr).
pub fn table1() -> Vec<DimensionCell> {
    use FieldKind::*;
    vec![
        cell(1, 2, -1, 0, "3*x0*(x1^2+x2^2) + (x1+i*x2)^3", Gaussian),
        cell(1, 2, -1, 1, "x0^2*(x1+i*x2)", Gaussian),
        cell(1, 2, 0, -1, "x0^3+x1^3+x2^3", Rational),
        cell(1, 2, 0, 0, "x0^3+x1^3", Rational),
        cell(1, 2, 0, 1, "x0^3", Rational),
        cell(1, 2, 1, 0, "x0*(x1^2+x2^2)", Rational),
    ]
}

/// Cubic surfaces with prescribed (dim Reg, dim Irr).
pub fn table2() -> Vec<DimensionCell> {
    use FieldKind::*;
    vec![
        cell(2, 3, -1, 0, "x0*(x1^2-x2^2-x3^2) + (theta*x1+i*x2+x3)^3", ThetaGaussian),
        cell(2, 3, -1, 1, "3*x0*(x1^2+x2^2) + (x1+i*x2)^3", Gaussian),
        cell(2, 3, -1, 2, "x0^2*(x1+i*x2)", Gaussian),
        cell(2, 3, 0, -1, "x0^3+x1^3+x2^3+x3^3", Rational),
        cell(2, 3, 0, 0, "x0^3+x1^3+x2^3", Rational),
        cell(2, 3, 0, 1, "x0^3+x1^3", Rational),
        cell(2, 3, 0, 2, "x0^3", Rational),
        cell(2, 3, 1, 0, "x0*x1^2+x0*x2^2+x0*x3^2+x1^3", Rational),
        cell(2, 3, 1, 1, "x0*(x1^2+x2^2)", Rational),
        cell(2, 3, 2, 1, "x0*(x1^2+x2^2+x3^2)", Rational),
    ]
}

/// A row of the real eigenpoint count table.
#[derive(Debug, Clone)]
pub struct CountRow {
    pub count: usize,
    pub instance: Instance,
}

fn row(count: usize, n: usize, text: &'static str, field: FieldKind) -> CountRow {
    CountRow {
        count,
        instance: Instance::new(format!("table3:count{count}"), n, text, field),
    }
}

/// Cubics with exactly `count` regular eigenpoints, all real except row 0.
pub fn table3() -> Vec<CountRow> {
    use FieldKind::*;
    vec![
        row(0, 2, "x0^2*(x1+i*x2)", Gaussian),
        row(1, 2, "x0^3", Rational),
        row(2, 2, "x1^2*x2", Rational),
        row(3, 2, "x0^3+x1^3", Rational),
        row(4, 2, "x0*x1*x2", Rational),
        row(5, 2, "x0^3+x1^2*x2", Rational),
        row(6, 2, "x0^2*x1+x0^2*x2+x1*x2^2", Rational),
        row(7, 2, "x0^3+x1^3+x2^3", Rational),
        row(8, 3, "x0^2*x1+x2^2*x3", Rational),
        row(9, 3, "x0*x1*x2+x3^3", Rational),
        row(10, 3, "x0*x1*x2+x0*x3^2+x1*x2^2", Rational),
        row(11, 3, "x0^3+x1^2*x2+3*x3^3", Rational),
        row(12, 3, "10*x1*x2^2-x0^2*x1-x0^2*x2-x0*x3^2", Rational),
        row(13, 3, "x0^2*x1+x0^2*x2+x1*x2^2+x3^3", Rational),
        row(14, 3, "x0*x3^2+x0*x1*x2+x1^3+10*x1*x2^2+x2^3", Rational),
        row(15, 3, "x0^3+x1^3+x2^3+x3^3", Rational),
    ]
}

/// Worked examples by name.
pub fn examples() -> Vec<Instance> {
    use FieldKind::*;
    vec![
        Instance::new("example3.1".into(), 3, "x1*(x1*x2+x3^2+x0^2)", Rational),
        Instance::new("example3.2".into(), 3, "x0*(x1^2+x2^2+x3^2)+x1^3", Rational),
        Instance::new("example4.2".into(), 2, "x0^3+x1^3+x2^3", Rational),
        Instance::new("example4.3".into(), 3, "x0^3+x1^3+x2^3+x3^3", Rational),
    ]
}

/// Every named instance.
pub fn all_instances() -> Vec<Instance> {
    table1()
        .into_iter()
        .chain(table2())
        .map(|c| c.instance)
        .chain(table3().into_iter().map(|r| r.instance))
        .chain(examples())
        .collect()
}

pub fn find(name: &str) -> Option<Instance> {
    all_instances().into_iter().find(|i| i.name == name)
}

/// The seven eigenpoints of x0³+x1³+x2³.
pub const FANO_POINTS: [[i64; 3]; 7] = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1], [1, 1, 1]];

/// The fifteen eigenpoints of x0³+x1³+x2³+x3³.
pub const CUBE_POINTS: [[i64; 4]; 15] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [1, 1, 0, 0],
    [1, 0, 1, 0],
    [0, 1, 1, 0],
    [1, 1, 1, 0],
    [1, 0, 0, 1],
    [0, 1, 0, 1],
    [0, 0, 1, 1],
    [1, 1, 0, 1],
    [1, 0, 1, 1],
    [0, 1, 1, 1],
    [1, 1, 1, 1],
];
