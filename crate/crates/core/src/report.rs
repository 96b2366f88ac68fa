//! Structured verification reports.

use serde::Serialize;

use crate::scalar::{is_zero_slice, Scalar};

/// One failed instance of an identity: which identity, on which basis
/// indices, and the nonzero residual it left behind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub indices: Vec<usize>,
    pub residual: Vec<String>,
}

/// The outcome of a checker. An empty report means every identity held.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub witnesses: Vec<Witness>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_ok(&self) -> bool {
        self.witnesses.is_empty()
    }

    /// Records `residual` under `label` unless it is zero.
    pub fn check<T: Scalar>(&mut self, label: &str, indices: &[usize], residual: &[T]) {
        if !is_zero_slice(residual) {
            self.witnesses.push(Witness {
                label: label.to_string(),
                indices: indices.to_vec(),
                residual: residual.iter().map(ToString::to_string).collect(),
            });
        }
    }

    /// Records a failure that has no numeric residual.
    pub fn fail(&mut self, label: &str, indices: &[usize], note: &str) {
        self.witnesses.push(Witness {
            label: label.to_string(),
            indices: indices.to_vec(),
            residual: vec![note.to_string()],
        });
    }

    pub fn absorb(&mut self, other: Report) {
        self.witnesses.extend(other.witnesses);
    }

    /// Appends `other` with every label prefixed by `prefix/`.
    pub fn absorb_prefixed(&mut self, prefix: &str, other: Report) {
        self.witnesses.extend(other.witnesses.into_iter().map(|mut w| {
            w.label = format!("{prefix}/{}", w.label);
            w
        }));
    }

    pub fn count(&self, label: &str) -> usize {
        self.witnesses.iter().filter(|w| w.label == label).count()
    }

    /// True when no witness carries `label` or a label starting with `label/`.
    pub fn holds(&self, label: &str) -> bool {
        let nested = format!("{label}/");
        !self.witnesses.iter().any(|w| w.label == label || w.label.starts_with(&nested))
    }

    pub fn labels(&self) -> Vec<&str> {
        let mut out: Vec<&str> = Vec::new();
        for w in &self.witnesses {
            if !out.contains(&w.label.as_str()) {
                out.push(&w.label);
            }
        }
        out
    }
}
