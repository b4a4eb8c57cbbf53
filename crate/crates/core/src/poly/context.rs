use std::sync::Arc;

use super::monomial::MAX_VARS;
use crate::error::{Error, Result};

/// Ordered variable names of a polynomial ring.
///
/// The eigenvalue variable λ is spelled `L` and, when present, is last.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Vec<String>,
}

pub const LAMBDA: &str = "L";

impl VarContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARS {
            return Err(Error::InvalidContext(format!(
                "{} variables exceed the limit of {MAX_VARS}",
                names.len()
            )));
        }
        for (k, n) in names.iter().enumerate() {
            if n.is_empty() || names[..k].contains(n) {
                return Err(Error::InvalidContext(format!("duplicate or empty name `{n}`")));
            }
        }
        if let Some(p) = names.iter().position(|n| n == LAMBDA) {
            if p + 1 != names.len() {
                return Err(Error::InvalidContext("L must be the last variable".into()));
            }
        }
        Ok(Arc::new(VarContext { names }))
    }

    /// Internal rings (elimination reorderings) may put λ first.
    pub(crate) fn reordered(names: Vec<String>) -> Arc<Self> {
        assert!(names.len() <= MAX_VARS, "too many variables");
        Arc::new(VarContext { names })
    }

    /// x0, …, xn.
    pub fn projective(n: usize) -> Arc<Self> {
        Self::new((0..=n).map(|i| format!("x{i}"))).expect("valid projective context")
    }

    /// x0, …, xn, L.
    pub fn with_lambda(n: usize) -> Arc<Self> {
        Self::new((0..=n).map(|i| format!("x{i}")).chain([LAMBDA.to_string()]))
            .expect("valid eigenpair context")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn has_lambda(&self) -> bool {
        self.names.last().is_some_and(|n| n == LAMBDA)
    }

    /// Number of non-λ variables.
    pub fn x_count(&self) -> usize {
        self.len() - usize::from(self.has_lambda())
    }

    /// Context with `name` inserted at position 0.
    pub fn prepend(&self, name: &str) -> Result<Arc<Self>> {
        if self.len() + 1 > MAX_VARS || self.names.iter().any(|n| n == name) {
            return Err(Error::InvalidContext(format!("cannot prepend `{name}`")));
        }
        Ok(Self::reordered(
            std::iter::once(name.to_string())
                .chain(self.names.iter().cloned())
                .collect(),
        ))
    }

    /// Context with variable `i` removed.
    pub fn without(&self, i: usize) -> Arc<Self> {
        Self::reordered(
            self.names
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, n)| n.clone())
                .collect(),
        )
    }
}
