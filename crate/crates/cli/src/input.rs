use std::path::Path;
use std::sync::Arc;

use eigencubic_core::arith::{ExtElement, Field, FieldDescriptor, Rational};
use eigencubic_core::corpus::{self, FieldKind};
use eigencubic_core::matrix::ExactMatrix;
use eigencubic_core::poly::{parse, parse_rational, Monomial, Polynomial, VarContext};
use eigencubic_core::tensor::{CubicForm, PartiallySymmetricTensor};
use eigencubic_core::Error;

use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

/// Coefficient field chosen on the command line.
#[derive(Debug, Clone)]
pub struct FieldChoice {
    pub label: String,
    pub descriptor: Option<Arc<FieldDescriptor>>,
}

impl FieldChoice {
    /// `rational`, `gaussian`, `theta`, `theta-gaussian` or `ext:<m(t)>`.
    pub fn parse(spec: &str, root: usize) -> Result<Self> {
        let descriptor = match spec {
            "rational" => None,
            "gaussian" => Some(FieldDescriptor::gaussian()),
            "theta" => Some(FieldDescriptor::theta()),
            "theta-gaussian" => Some(FieldDescriptor::theta_gaussian()),
            other => {
                let m = other
                    .strip_prefix("ext:")
                    .ok_or_else(|| CliError::Usage(format!("unknown field `{other}`")))?;
                let ctx = VarContext::new(["t"])?;
                let p = parse_rational(m, &ctx)?;
                let degree = p.total_degree().unwrap_or(0) as u16;
                let coeffs: Vec<Rational> = (0..=degree)
                    .map(|k| p.coefficient(&Monomial::from_exponents(&[k])))
                    .collect();
                Some(FieldDescriptor::new(&coeffs, root)?)
            }
        };
        Ok(FieldChoice {
            label: spec.to_string(),
            descriptor,
        })
    }

    fn from_kind(kind: FieldKind) -> Self {
        let label = match kind {
            FieldKind::Rational => "rational",
            FieldKind::Gaussian => "gaussian",
            FieldKind::ThetaGaussian => "theta-gaussian",
        };
        FieldChoice {
            label: label.into(),
            descriptor: kind.descriptor(),
        }
    }
}

/// Either a rational object or one over an extension.
pub enum Typed<Q, E> {
    Rational(Q),
    Extension(E),
}

pub type AnyTensor = Typed<PartiallySymmetricTensor<Rational>, PartiallySymmetricTensor<ExtElement>>;
pub type AnyMatrix = Typed<ExactMatrix<Rational>, ExactMatrix<ExtElement>>;

/// The textual input together with its field.
#[derive(Debug, Clone)]
pub struct Source {
    pub text: String,
    /// The argument as given: a file path or the inline text.
    pub origin: String,
    pub field: FieldChoice,
    pub name: Option<String>,
    pub n: usize,
}

impl Source {
    /// Reads the input or looks up a built-in instance. Without `n`, the
    /// ambient space is the largest xk index seen, but at least `min_n`.
    pub fn resolve(input: Option<&str>, example: Option<&str>, field: FieldChoice, n: Option<usize>, min_n: usize) -> Result<Self> {
        if let Some(name) = example {
            let inst = corpus::find(name).ok_or_else(|| CliError::Usage(format!("no built-in instance `{name}`")))?;
            return Ok(Source {
                text: inst.text.to_string(),
                origin: inst.text.to_string(),
                field: FieldChoice::from_kind(inst.field),
                name: Some(inst.name.clone()),
                n: inst.n,
            });
        }
        let raw = input.ok_or_else(|| CliError::Usage("no input given".into()))?;
        let text = read_or_inline(raw)?;
        let n = n.unwrap_or_else(|| infer_n(&text).max(min_n));
        Ok(Source {
            text,
            origin: raw.to_string(),
            field,
            name: None,
            n,
        })
    }

    fn context(&self) -> Arc<VarContext> {
        VarContext::projective(self.n)
    }

    fn parse_one(&self, text: &str, ctx: &Arc<VarContext>) -> Result<Polynomial<ExtElement>> {
        Ok(parse(text, ctx, self.field.descriptor.as_ref())?)
    }

    fn rational_only(&self) -> bool {
        self.field.descriptor.is_none()
    }

    pub fn is_tensor(&self) -> bool {
        self.text.contains(';')
    }

    /// True when the input is a matrix rather than polynomials.
    pub fn is_matrix(&self) -> bool {
        let t = self.text.trim_start();
        t.starts_with('[') || t.starts_with('{') || (!self.text.contains('x') && self.text.contains(','))
    }

    fn quadrics(&self) -> Result<AnyTensor> {
        let ctx = self.context();
        let qs: Vec<Polynomial<ExtElement>> = self
            .text
            .split(';')
            .map(|q| self.parse_one(q.trim(), &ctx))
            .collect::<Result<_>>()?;
        if self.rational_only() {
            if let Some(rq) = qs.iter().map(|q| q.to_rational()).collect::<Option<Vec<_>>>() {
                return Ok(Typed::Rational(PartiallySymmetricTensor::new(&ctx, rq)?));
            }
        }
        Ok(Typed::Extension(PartiallySymmetricTensor::new(&ctx, qs)?))
    }

    pub fn cubic(&self) -> Result<Typed<CubicForm<Rational>, CubicForm<ExtElement>>> {
        let ctx = self.context();
        let f = self.parse_one(&self.text, &ctx)?;
        if self.rational_only() {
            if let Some(q) = f.to_rational() {
                return Ok(Typed::Rational(CubicForm::new(q)?));
            }
        }
        Ok(Typed::Extension(CubicForm::new(f)?))
    }

    /// The tensor of a cubic, or of `;`-separated quadrics.
    pub fn tensor(&self) -> Result<AnyTensor> {
        if self.is_tensor() {
            return self.quadrics();
        }
        Ok(match self.cubic()? {
            Typed::Rational(f) => Typed::Rational(f.tensor()),
            Typed::Extension(f) => Typed::Extension(f.tensor()),
        })
    }

    /// A matrix given as JSON rows, or as lines of comma-separated entries.
    pub fn matrix(&self) -> Result<AnyMatrix> {
        let rows = matrix_rows(&self.text)?;
        let ctx = VarContext::projective(0);
        let entries: Vec<Vec<ExtElement>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|e| {
                        let p = self.parse_one(e, &ctx)?;
                        if !p.is_constant() {
                            return Err(CliError::Usage(format!("matrix entry `{e}` is not a constant")));
                        }
                        Ok(p.coefficient(&Monomial::one()))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        if let Some(w) = entries.iter().map(Vec::len).find(|&w| w != entries[0].len()) {
            return Err(Error::DimensionMismatch {
                expected: entries[0].len(),
                found: w,
            }
            .into());
        }
        if self.rational_only() {
            if let Some(q) = entries
                .iter()
                .map(|r| r.iter().map(Field::to_rational).collect::<Option<Vec<_>>>())
                .collect::<Option<Vec<_>>>()
            {
                return Ok(Typed::Rational(ExactMatrix::from_rows(q)));
            }
        }
        Ok(Typed::Extension(ExactMatrix::from_rows(entries)))
    }
}

fn matrix_rows(text: &str) -> Result<Vec<Vec<String>>> {
    let t = text.trim();
    let rows = if t.starts_with('[') || t.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(t).map_err(|e| CliError::Usage(format!("bad JSON matrix: {e}")))?;
        let v = v.get("matrix").cloned().unwrap_or(v);
        let bad = || CliError::Usage("a JSON matrix is an array of rows".into());
        v.as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|e| match e {
                        serde_json::Value::String(s) => Ok(s.clone()),
                        serde_json::Value::Number(n) => Ok(n.to_string()),
                        _ => Err(bad()),
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<String>>>>()?
    } else {
        t.split(['\n', ';'])
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.split(',').map(|e| e.trim().to_string()).collect())
            .collect()
    };
    if rows.is_empty() {
        return Err(CliError::Usage("empty matrix".into()));
    }
    Ok(rows)
}

/// Contents of `raw` when it names a readable file, else `raw` itself.
pub fn read_or_inline(raw: &str) -> Result<String> {
    let p = Path::new(raw);
    if p.is_file() {
        return std::fs::read_to_string(p)
            .map(|s| s.trim().to_string())
            .map_err(|e| CliError::Usage(format!("cannot read {raw}: {e}")));
    }
    Ok(raw.to_string())
}

/// Largest k among the variable names xk.
pub fn infer_n(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut best = 0;
    for i in 0..bytes.len() {
        if bytes[i] == b'x' && (i == 0 || !bytes[i - 1].is_ascii_alphanumeric()) {
            let digits: String = text[i + 1..].chars().take_while(char::is_ascii_digit).collect();
            if let Ok(k) = digits.parse::<usize>() {
                best = best.max(k);
            }
        }
    }
    best
}

/// Comma-separated rationals, one row per nonempty line.
pub fn rational_rows(text: &str) -> Result<Vec<Vec<Rational>>> {
    let ctx = VarContext::projective(0);
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split(',')
                .map(|v| {
                    let p = parse_rational(v.trim(), &ctx)?;
                    if !p.is_constant() {
                        return Err(CliError::Usage(format!("`{}` is not a rational number", v.trim())));
                    }
                    Ok(p.coefficient(&Monomial::one()))
                })
                .collect()
        })
        .collect()
}
