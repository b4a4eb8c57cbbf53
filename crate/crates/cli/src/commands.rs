use eigencubic_core::arith::{Field, Rational};
use eigencubic_core::corpus;
use eigencubic_core::grassmann::{self, HurwitzComparison};
use eigencubic_core::groebner::{HilbertData, Ideal};
use eigencubic_core::matrix::{combinations, ExactMatrix};
use eigencubic_core::reproduce::{check_count_row, check_dimension_cell};
use eigencubic_core::solve::{count_real, rational_recover, solve_projective, SolverConfig};
use eigencubic_core::tensor::{analyze, cubic_from_points, PartiallySymmetricTensor};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::input::{rational_rows, Source, Typed};
use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

fn scalar<F: Field>(c: &F) -> String {
    c.render().0
}

fn matrix_json<F: Field>(m: &ExactMatrix<F>) -> Value {
    (0..m.rows()).map(|r| m.row(r).iter().map(scalar).collect::<Vec<_>>()).collect()
}

fn tensor_json<F: Field>(t: &PartiallySymmetricTensor<F>) -> Value {
    t.quadrics().iter().map(|q| q.to_string()).collect()
}

fn ideal_json<F: Field>(i: &Ideal<F>, h: &HilbertData) -> Value {
    json!({
        "groebnerBasis": i.groebner().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "dimension": h.projective_dimension,
        "degree": h.degree,
        "hilbertNumerator": h.numerator,
    })
}

fn header(command: &str, src: Option<&Source>) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schemaVersion".into(), json!(1));
    m.insert("command".into(), json!(command));
    if let Some(s) = src {
        m.insert("input".into(), json!(s.origin));
        m.insert("field".into(), json!(s.field.label));
        m.insert("n".into(), json!(s.n));
        if let Some(name) = &s.name {
            m.insert("instance".into(), json!(name));
        }
    }
    m
}

fn merge(mut head: serde_json::Map<String, Value>, body: Value) -> Value {
    if let Value::Object(b) = body {
        head.extend(b);
    }
    Value::Object(head)
}

fn analyze_json<F: Field>(t: &PartiallySymmetricTensor<F>) -> Result<Value> {
    let r = analyze(t)?;
    let eigenpoints = if r.delta() == 0 { r.regular.degree } else { None };
    Ok(json!({
        "delta": r.delta(),
        "epsilon": r.epsilon(),
        "eigenpoints": eigenpoints,
        "symmetric": t.is_symmetric(),
        "irrBoundHolds": r.irr_bound_holds,
        "topDimensionRuleHolds": r.top_dimension_rule_holds,
        "eigenscheme": ideal_json(&r.eigen_ideal, &r.eigen),
        "eigenpairScheme": ideal_json(&r.eigenpair_ideal, &r.eigenpair),
        "irregular": ideal_json(&r.irregular_ideal, &r.irregular),
        "regular": ideal_json(&r.regular_ideal, &r.regular),
    }))
}

pub fn cmd_analyze(src: &Source) -> Result<Value> {
    let body = match src.tensor()? {
        Typed::Rational(t) => analyze_json(&t)?,
        Typed::Extension(t) => analyze_json(&t)?,
    };
    Ok(merge(header("analyze", Some(src)), body))
}

fn solve_json<F: Field>(t: &PartiallySymmetricTensor<F>, cfg: &SolverConfig, max_den: u64) -> Result<Value> {
    let reg = t.regular_ideal();
    let s = solve_projective(&reg, cfg)?;
    let points: Vec<Value> = s
        .points
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let exact = rational_recover(p, &reg, max_den, cfg.real_tol)
                .map(|q| q.iter().map(|c| c.to_string()).collect::<Vec<_>>());
            json!({
                "coordinates": p.coords().iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
                "multiplicity": s.multiplicities[k],
                "residual": s.residuals[k],
                "real": p.is_real(cfg.real_tol),
                "exact": exact,
            })
        })
        .collect();
    Ok(json!({
        "regularIdeal": reg.groebner().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "totalDegree": s.total_degree,
        "distinctPoints": s.points.len(),
        "realCount": count_real(&s, cfg),
        "maxResidual": s.max_residual(),
        "points": points,
    }))
}

pub fn cmd_solve(src: &Source, cfg: &SolverConfig, max_den: u64) -> Result<Value> {
    let body = match src.tensor()? {
        Typed::Rational(t) => solve_json(&t, cfg, max_den)?,
        Typed::Extension(t) => solve_json(&t, cfg, max_den)?,
    };
    let mut head = header("solve", Some(src));
    head.insert("seed".into(), json!(cfg.seed));
    Ok(merge(head, body))
}

/// Outcome of one table: the report and the number of failing cells.
pub fn cmd_tables(which: u8, cfg: &SolverConfig) -> (Value, usize) {
    let cells: Vec<(Value, bool)> = match which {
        1 | 2 => {
            let table = if which == 1 { corpus::table1() } else { corpus::table2() };
            table
                .par_iter()
                .map(|c| match check_dimension_cell(c) {
                    Ok(o) => (
                        json!({
                            "name": o.name,
                            "cubic": o.text,
                            "expected": {"delta": o.expected.0, "epsilon": o.expected.1},
                            "computed": {"delta": o.computed.0, "epsilon": o.computed.1},
                            "boundsHold": o.bounds_hold,
                            "pass": o.pass(),
                        }),
                        o.pass(),
                    ),
                    Err(e) => (failed_cell(&c.instance.name, c.instance.text, &e.to_string()), false),
                })
                .collect()
        }
        _ => corpus::table3()
            .par_iter()
            .map(|r| match check_count_row(r, cfg) {
                Ok(o) => (
                    json!({
                        "name": o.name,
                        "cubic": o.text,
                        "expected": o.expected,
                        "regularDimension": o.regular_dimension,
                        "points": o.points,
                        "realCount": o.real,
                        "maxResidual": o.max_residual,
                        "pass": o.pass(cfg),
                    }),
                    o.pass(cfg),
                ),
                Err(e) => (failed_cell(&r.instance.name, r.instance.text, &e.to_string()), false),
            })
            .collect(),
    };
    let passed = cells.iter().filter(|c| c.1).count();
    let total = cells.len();
    let mut head = header("tables", None);
    head.insert("table".into(), json!(which));
    let body = json!({
        "passed": passed,
        "total": total,
        "cells": cells.into_iter().map(|c| c.0).collect::<Vec<_>>(),
    });
    (merge(head, body), total - passed)
}

fn failed_cell(name: &str, text: &str, error: &str) -> Value {
    json!({"name": name, "cubic": text, "error": error, "pass": false})
}

fn plane_of<F: Field>(t: &PartiallySymmetricTensor<F>) -> Result<ExactMatrix<F>> {
    Ok(grassmann::plane_from_tensor(t)?.into_matrix())
}

fn pluecker_json<F: Field>(m: &ExactMatrix<F>) -> Result<Value> {
    if m.rows() != 4 || m.cols() != grassmann::QUADRIC_COUNT {
        return Err(eigencubic_core::Error::DimensionMismatch {
            expected: 4 * grassmann::QUADRIC_COUNT,
            found: m.rows() * m.cols(),
        }
        .into());
    }
    let p = grassmann::pluecker(m);
    Ok(json!({
        "columns": grassmann::quadric_basis_names(),
        "subsets": combinations(grassmann::QUADRIC_COUNT, 4).collect::<Vec<_>>(),
        "pluecker": p.iter().map(scalar).collect::<Vec<_>>(),
    }))
}

fn check_json<F: Field>(m: &ExactMatrix<F>) -> Result<Value> {
    let c = grassmann::check_conditions(m)?;
    Ok(json!({
        "lambdaSquaredZero": c.lambda_squared_zero,
        "lambdaBlockInvertible": c.lambda_block_invertible,
        "holds": c.holds(),
    }))
}

fn symmetric_json<F: Field>(t: &PartiallySymmetricTensor<F>) -> Value {
    let conditions: Vec<Value> = t
        .symmetry_conditions()
        .into_iter()
        .map(|((i, j), ok)| json!({"i": i, "j": j, "holds": ok}))
        .collect();
    json!({
        "symmetric": t.is_symmetric(),
        "cubic": t.symmetric_witness().map(|f| f.polynomial().to_string()),
        "conditions": conditions,
    })
}

fn recover_json<F: Field>(m: &ExactMatrix<F>) -> Result<Value> {
    let t = grassmann::tensor_from_plane(m)?;
    let mut v = json!({"tensor": tensor_json(&t)});
    v["cubic"] = json!(t.symmetric_witness().map(|f| f.polynomial().to_string()));
    Ok(v)
}

/// `grass` subcommands taking a plane or a tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrassOp {
    Plane,
    Pluecker,
    Check,
    Recover,
    Symmetric,
}

fn grass_generic<F: Field>(op: GrassOp, plane: Option<ExactMatrix<F>>, tensor: Option<PartiallySymmetricTensor<F>>) -> Result<Value> {
    let plane = match (plane, &tensor) {
        (Some(m), _) => m,
        (None, Some(t)) => plane_of(t)?,
        (None, None) => unreachable!("grass input is a plane or a tensor"),
    };
    match op {
        GrassOp::Plane => Ok(json!({
            "columns": grassmann::quadric_basis_names(),
            "matrix": matrix_json(&plane),
        })),
        GrassOp::Pluecker => pluecker_json(&plane),
        GrassOp::Check => check_json(&plane),
        GrassOp::Recover => recover_json(&plane),
        GrassOp::Symmetric => {
            let t = match tensor {
                Some(t) => t,
                None => grassmann::tensor_from_plane(&plane)?,
            };
            Ok(symmetric_json(&t))
        }
    }
}

pub fn cmd_grass(op: GrassOp, src: &Source) -> Result<Value> {
    let body = if src.is_matrix() {
        match src.matrix()? {
            Typed::Rational(m) => grass_generic(op, Some(m), None)?,
            Typed::Extension(m) => grass_generic(op, Some(m), None)?,
        }
    } else {
        match src.tensor()? {
            Typed::Rational(t) => grass_generic(op, None, Some(t))?,
            Typed::Extension(t) => grass_generic(op, None, Some(t))?,
        }
    };
    let name = match op {
        GrassOp::Plane => "grass plane",
        GrassOp::Pluecker => "grass pluecker",
        GrassOp::Check => "grass check",
        GrassOp::Recover => "grass recover",
        GrassOp::Symmetric => "grass symmetric",
    };
    Ok(merge(header(name, Some(src)), body))
}

pub fn cmd_binary_hurwitz() -> Value {
    let c = HurwitzComparison::compute();
    let anomalies: Vec<Value> = c
        .diff
        .anomalies
        .iter()
        .map(|(t, fix)| json!({"printed": format!("{}*{}", t.coefficient, t.printed), "computed": fix}))
        .collect();
    let body = json!({
        "eigendiscriminant": c.eigendiscriminant.to_string(),
        "eigendiscriminantTerms": c.eigendiscriminant.len(),
        "restrictedHurwitz": c.restricted_hurwitz.to_string(),
        "ratio": c.ratio.as_ref().map(Rational::to_string),
        "rawRatio": c.raw_ratio.as_ref().map(Rational::to_string),
        "agreesUpToSign": c.agrees_up_to_sign(),
        "printedDiff": {
            "matched": c.diff.matched,
            "anomalies": anomalies,
            "missing": c.diff.missing,
        },
    });
    merge(header("grass binary-hurwitz", None), body)
}

pub fn cmd_fit(text: &str, n: Option<usize>) -> Result<Value> {
    let points = rational_rows(text)?;
    let width = points.first().map(Vec::len).ok_or_else(|| CliError::Usage("no points given".into()))?;
    let n = n.unwrap_or(width.saturating_sub(1));
    let (basis, rank) = cubic_from_points(&points, n)?;
    let mut head = header("fit", None);
    head.insert("n".into(), json!(n));
    let body = json!({
        "points": points.iter().map(|p| p.iter().map(|c| c.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "rank": rank,
        "dimension": basis.len(),
        "cubics": basis.iter().map(|f| f.polynomial().to_string()).collect::<Vec<_>>(),
    });
    Ok(merge(head, body))
}
